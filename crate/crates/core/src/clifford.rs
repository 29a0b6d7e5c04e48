//! Clifford multiplication on `Cliff(T, g)` and the action of `T ⊕ T*` and
//! `so(n,n)` on forms.
//!
//! Clifford elements share the [`Multivector`] carrier: the vector-space
//! identification `J` is the identity on coefficients.

use crate::exterior::{exp_wedge, Blade, FormError, Multivector, Space};
use crate::scalars::Scalar;

pub type CliffordElement = Multivector;

/// Product of two basis blades: `(sign·Π(-g_i), blade)` with `e_i·e_i = -g_i`.
pub fn blade_product(space: &Space, a: Blade, b: Blade) -> (Scalar, Blade) {
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        swaps += (a.0 & !(bit | (bit - 1))).count_ones();
        rest &= rest - 1;
    }
    let mut c = if swaps.is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
    for i in Blade(a.0 & b.0).indices() {
        c = &c * &(-&space.metric_diag[i - 1]);
    }
    (c, Blade(a.0 ^ b.0))
}

pub fn try_clifford_product(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement, FormError> {
    if !x.same_space_as(y) {
        return Err(FormError::SpaceMismatch);
    }
    let space = x.space();
    let mut out = Multivector::zero(space);
    for (a, u) in x.terms() {
        for (b, v) in y.terms() {
            let (c, blade) = blade_product(space, *a, *b);
            out.add_term(blade, &(&c * u) * v);
        }
    }
    Ok(out)
}

/// Clifford product for the space's diagonal metric.
///
/// # Panics
/// When the operands live on different spaces.
pub fn clifford_product(x: &CliffordElement, y: &CliffordElement) -> CliffordElement {
    try_clifford_product(x, y).unwrap_or_else(|e| panic!("{e}"))
}

/// Clifford volume element `e_1·…·e_n` (oriented).
pub fn clifford_volume(space: &Space) -> CliffordElement {
    Multivector::volume(space)
}

fn split_dim(w: &Multivector) -> Result<usize, FormError> {
    w.space().split.ok_or(FormError::SpaceMismatch)
}

fn check_tangent(n: usize, tau: &Multivector) -> Result<(), FormError> {
    if tau.dim() == n {
        Ok(())
    } else {
        Err(FormError::SpaceMismatch)
    }
}

/// `(v + ξ)•τ = v⌟τ + ξ∧τ` for a degree-1 element `w` of a split space.
pub fn tt_clifford_act(w: &Multivector, tau: &Multivector) -> Result<Multivector, FormError> {
    let n = split_dim(w)?;
    check_tangent(n, tau)?;
    if !w.is_homogeneous_of(1) {
        return Err(FormError::WrongDegree { expected: 1 });
    }
    let space = tau.space();
    let mut out = Multivector::zero(space);
    for (b, c) in w.terms() {
        let k = b.indices()[0];
        let part = if k <= n { tau.contract_index(k) } else { Multivector::basis(space, &[k - n]).wedge(tau) };
        out.add_scaled(&part, c);
    }
    Ok(out)
}

/// Action of `β ∈ Λ²(T ⊕ T*) ≅ so(n,n)` on forms, `u∧w ↦ ½(u•w• − w•u•)`.
///
/// A B-field `ξ_k∧ξ_l` acts by wedging, `v_i∧v_j` by `v_i⌟v_j⌟`, and
/// `v_i∧ξ_j` by `½δ_ij − ξ_j∧(v_i⌟·)`.
pub fn so_nn_spin_action(beta: &Multivector, tau: &Multivector) -> Result<Multivector, FormError> {
    let n = split_dim(beta)?;
    check_tangent(n, tau)?;
    if !beta.is_homogeneous_of(2) {
        return Err(FormError::WrongDegree { expected: 2 });
    }
    let space = tau.space();
    let mut out = Multivector::zero(space);
    for (b, c) in beta.terms() {
        let idx = b.indices();
        let (i, j) = (idx[0], idx[1]);
        let part = match (i <= n, j <= n) {
            (true, true) => tau.contract_index(j).contract_index(i),
            (false, false) => Multivector::basis(space, &[i - n, j - n]).wedge(tau),
            _ => {
                let mut p = Multivector::basis(space, &[j - n]).wedge(&tau.contract_index(i)).scale(&Scalar::from_int(-1));
                if i == j - n {
                    p.add_scaled(tau, &Scalar::from_ratio(1, 2));
                }
                p
            }
        };
        out.add_scaled(&part, c);
    }
    Ok(out)
}

/// `exp(b)•τ` for a B-field `b ∈ Λ²T*`; equal to `exp(b)∧τ`.
pub fn bfield_spin_exp(b: &Multivector, tau: &Multivector) -> Result<Multivector, FormError> {
    exp_wedge(b, tau)
}

/// Lifts a 2-form on `T` to the `T*∧T*` part of `Λ²(T ⊕ T*)`.
pub fn bfield_in_split(b: &Multivector, split: &Space) -> Multivector {
    let n = split.split.expect("split space required");
    assert_eq!(b.dim(), n, "B-field dimension");
    let map: Vec<usize> = (1..=n).map(|i| i + n).collect();
    b.embed(split, &map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::SpaceDescriptor;

    #[test]
    fn generator_squares_to_minus_one() {
        let s = SpaceDescriptor::euclidean(3);
        let e1 = Multivector::basis(&s, &[1]);
        assert_eq!(clifford_product(&e1, &e1), Multivector::scalar(&s, Scalar::from_int(-1)));
    }

    #[test]
    fn pure_b_field_acts_by_wedge() {
        let split = SpaceDescriptor::split(3);
        let t = SpaceDescriptor::euclidean(3);
        let b = Multivector::basis(&t, &[1, 2]);
        let tau = Multivector::basis(&t, &[3]);
        let acted = so_nn_spin_action(&bfield_in_split(&b, &split), &tau).unwrap();
        assert_eq!(acted, b.wedge(&tau));
    }

    #[test]
    fn null_vector_squares_to_pairing() {
        let split = SpaceDescriptor::split(2);
        let t = SpaceDescriptor::euclidean(2);
        let w = &Multivector::basis(&split, &[1]) + &Multivector::basis(&split, &[3]);
        for idx in [&[][..], &[1], &[2], &[1, 2]] {
            let tau = Multivector::basis(&t, idx);
            let once = tt_clifford_act(&w, &tau).unwrap();
            assert_eq!(tt_clifford_act(&w, &once).unwrap(), tau);
        }
    }
}
