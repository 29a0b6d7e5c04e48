//! Invariant forms of G₂, Spin(7), SU(3) and PSU(3), stabilizers, module
//! decompositions and the classification of isometry-inducing 3-forms.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::clifford::so_nn_spin_action;
use crate::exterior::{Blade, Multivector, Space, SpaceDescriptor};
use crate::liegeom::LieAlgebraFrame;
use crate::linalg::Matrix;
use crate::scalars::Scalar;
use crate::spinreps::MatrixRep;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("stabilizer of the zero form")]
    ZeroForm,
    #[error("expected a {expected}-form in dimension {dim}")]
    Shape { expected: usize, dim: usize },
}

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

fn form(space: &Space, terms: &[(i64, &[usize])]) -> Multivector {
    let t: Vec<(Scalar, &[usize])> = terms.iter().map(|(c, i)| (Scalar::from_int(*c), *i)).collect();
    Multivector::from_terms(space, &t)
}

/// Named invariant forms. Dimension-8 forms written with `e0..e7` in the
/// literature are stored with every index shifted up by one.
#[derive(Debug, Clone)]
pub struct CanonicalForms {
    pub omega: Multivector,
    pub psi_plus: Multivector,
    pub psi_minus: Multivector,
    pub phi: Multivector,
    pub star_phi: Multivector,
    pub spin7_omega: Multivector,
    pub rho_psu3: Multivector,
    pub star_rho_psu3: Multivector,
    pub varpi: Multivector,
    pub omega1: Multivector,
    pub omega2: Multivector,
    pub omega3: Multivector,
    /// `ω_{1-}, ω_{2-}, ω_{3-}` on `e4..e7`.
    pub omega_minus: [Multivector; 3],
    /// `ω_{1+}, ω_{2+}, ω_{3+}` on `e4..e7`.
    pub omega_plus: [Multivector; 3],
}

impl CanonicalForms {
    pub fn get() -> &'static CanonicalForms {
        static FORMS: OnceLock<CanonicalForms> = OnceLock::new();
        FORMS.get_or_init(Self::build)
    }

    fn build() -> CanonicalForms {
        let s7 = SpaceDescriptor::euclidean(7);
        let s8 = SpaceDescriptor::euclidean(8);
        let omega = form(&s7, &[(-1, &[2, 3]), (-1, &[4, 5]), (1, &[6, 7])]);
        let psi_plus = form(&s7, &[(1, &[3, 5, 6]), (-1, &[3, 4, 7]), (-1, &[2, 5, 7]), (-1, &[2, 4, 6])]);
        let psi_minus = form(&s7, &[(1, &[3, 5, 7]), (1, &[3, 4, 6]), (1, &[2, 5, 6]), (-1, &[2, 4, 7])]);
        let phi =
            form(&s7, &[(1, &[1, 2, 3]), (1, &[1, 4, 5]), (-1, &[1, 6, 7]), (1, &[2, 4, 6]), (1, &[2, 5, 7]), (1, &[3, 4, 7]), (-1, &[3, 5, 6])]);
        let star_phi = form(
            &s7,
            &[
                (-1, &[1, 2, 4, 7]),
                (1, &[1, 2, 5, 6]),
                (1, &[1, 3, 4, 6]),
                (1, &[1, 3, 5, 7]),
                (-1, &[2, 3, 4, 5]),
                (1, &[2, 3, 6, 7]),
                (1, &[4, 5, 6, 7]),
            ],
        );
        let spin7_omega = form(
            &s8,
            &[
                (-1, &[1, 2, 3, 4]),
                (-1, &[1, 2, 5, 6]),
                (1, &[1, 2, 7, 8]),
                (-1, &[1, 3, 5, 7]),
                (-1, &[1, 3, 6, 8]),
                (-1, &[1, 4, 5, 8]),
                (1, &[1, 4, 6, 7]),
                (1, &[2, 3, 5, 8]),
                (-1, &[2, 3, 6, 7]),
                (-1, &[2, 4, 5, 7]),
                (-1, &[2, 4, 6, 8]),
                (1, &[3, 4, 5, 6]),
                (-1, &[3, 4, 7, 8]),
                (-1, &[5, 6, 7, 8]),
            ],
        );
        let varpi = form(&s8, &[(1, &[1, 2]), (-1, &[3, 4]), (-1, &[5, 6]), (1, &[7, 8])]);
        let omega1 = form(
            &s8,
            &[
                (1, &[1, 3, 5, 7]),
                (1, &[1, 3, 6, 8]),
                (1, &[1, 4, 5, 8]),
                (-1, &[1, 4, 6, 7]),
                (-1, &[2, 3, 5, 8]),
                (1, &[2, 3, 6, 7]),
                (1, &[2, 4, 5, 7]),
                (1, &[2, 4, 6, 8]),
            ],
        );
        let omega2 = form(
            &s8,
            &[
                (1, &[1, 3, 5, 8]),
                (-1, &[1, 3, 6, 7]),
                (-1, &[1, 4, 5, 7]),
                (-1, &[1, 4, 6, 8]),
                (1, &[2, 3, 5, 7]),
                (1, &[2, 3, 6, 8]),
                (1, &[2, 4, 5, 8]),
                (-1, &[2, 4, 6, 7]),
            ],
        );
        let omega3 =
            form(&s8, &[(-1, &[1, 2, 3, 4]), (-1, &[1, 2, 5, 6]), (1, &[1, 2, 7, 8]), (1, &[3, 4, 5, 6]), (-1, &[3, 4, 7, 8]), (-1, &[5, 6, 7, 8])]);
        let omega_minus =
            [form(&s8, &[(1, &[4, 7]), (-1, &[5, 6])]), form(&s8, &[(1, &[4, 6]), (1, &[5, 7])]), form(&s8, &[(1, &[4, 5]), (-1, &[6, 7])])];
        let omega_plus =
            [form(&s8, &[(1, &[4, 7]), (1, &[5, 6])]), form(&s8, &[(1, &[4, 6]), (-1, &[5, 7])]), form(&s8, &[(1, &[4, 5]), (1, &[6, 7])])];
        let e = |idx: &[usize]| Multivector::basis(&s8, idx);
        let half = q(1, 2);
        let r3 = &Scalar::sqrt3() * &half;
        let mut rho = e(&[1, 2, 3]);
        for (i, w) in omega_minus.iter().enumerate() {
            rho.add_scaled(&e(&[i + 1]).wedge(w), &half);
        }
        rho.add_scaled(&e(&[8]).wedge(&omega_plus[2]), &r3);
        let star_rho = rho.star();
        CanonicalForms {
            omega,
            psi_plus,
            psi_minus,
            phi,
            star_phi,
            spin7_omega,
            rho_psu3: rho,
            star_rho_psu3: star_rho,
            varpi,
            omega1,
            omega2,
            omega3,
            omega_minus,
            omega_plus,
        }
    }

    /// `ρ₁ = ρ_PSU3 / 2`, the unit-norm representative.
    pub fn rho1(&self) -> Multivector {
        self.rho_psu3.scale(&q(1, 2))
    }
}

/// `⋆ρ_PSU3` as commonly listed:
/// `e45678 - ½e238∧ω₁₋ + ½e138∧ω₂₋ - ½e128∧ω₃₋ + (√3/2)e123∧ω₃₊`.
/// The last sign disagrees with the Hodge star of `ρ_PSU3`.
pub fn star_rho_listing() -> Multivector {
    let f = CanonicalForms::get();
    let s8 = f.rho_psu3.space();
    let e = |idx: &[usize]| Multivector::basis(s8, idx);
    let half = q(1, 2);
    let mut out = e(&[4, 5, 6, 7, 8]);
    out.add_scaled(&e(&[2, 3, 8]).wedge(&f.omega_minus[0]), &-&half);
    out.add_scaled(&e(&[1, 3, 8]).wedge(&f.omega_minus[1]), &half);
    out.add_scaled(&e(&[1, 2, 8]).wedge(&f.omega_minus[2]), &-&half);
    out.add_scaled(&e(&[1, 2, 3]).wedge(&f.omega_plus[2]), &(&Scalar::sqrt3() * &half));
    out
}

/// The structure-constant frame of `su(3)` given by `ρ_PSU3`.
pub fn su3_frame() -> &'static LieAlgebraFrame {
    static FRAME: OnceLock<LieAlgebraFrame> = OnceLock::new();
    FRAME.get_or_init(|| LieAlgebraFrame::from_three_form(&CanonicalForms::get().rho_psu3).expect("3-form"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algebra {
    /// `gl(n)` acting by derivations.
    Gl,
    /// `so(n,n) ⊕ ℝ` acting through the spin representation plus scaling.
    SoNnR,
}

impl Algebra {
    pub fn name(self) -> &'static str {
        match self {
            Algebra::Gl => "gl",
            Algebra::SoNnR => "so(n,n)+R",
        }
    }

    pub fn dim(self, n: usize) -> usize {
        match self {
            Algebra::Gl => n * n,
            Algebra::SoNnR => n * (2 * n - 1) + 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabReport {
    pub form: Multivector,
    pub algebra: Algebra,
    pub stab_dim: usize,
    pub orbit_dim: usize,
    pub stable: bool,
    /// Kernel vectors in generator coordinates.
    pub kernel_basis: Vec<Vec<Scalar>>,
}

impl StabReport {
    pub fn to_json(&self) -> Value {
        json!({
            "form": self.form.to_json(),
            "algebra": self.algebra.name(),
            "stab_dim": self.stab_dim,
            "orbit_dim": self.orbit_dim,
            "stable": self.stable,
        })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Ambient dimension: the homogeneous degree, else the parity class, else all forms.
fn ambient_dim(x: &Multivector) -> usize {
    let n = x.dim();
    if let Some(p) = x.degree() {
        return binomial(n, p);
    }
    let degrees: Vec<usize> = x.terms().map(|(b, _)| b.degree()).collect();
    if degrees.iter().all(|d| d % 2 == 0) || degrees.iter().all(|d| d % 2 == 1) {
        1 << (n - 1)
    } else {
        1 << n
    }
}

fn image_matrix(images: &[Multivector]) -> Matrix {
    let mut blades: Vec<Blade> = images.iter().flat_map(|m| m.terms().map(|(b, _)| *b)).collect();
    blades.sort();
    blades.dedup();
    Matrix::from_fn(blades.len(), images.len(), |r, c| images[c].coeff(blades[r]))
}

/// Generators of the acting algebra applied to `x`.
fn generator_images(x: &Multivector, algebra: Algebra) -> Vec<Multivector> {
    let n = x.dim();
    match algebra {
        Algebra::Gl => (0..n * n)
            .map(|k| {
                let mut a = Matrix::zeros(n, n);
                a.set(k / n, k % n, Scalar::one());
                x.gl_action(&a)
            })
            .collect(),
        Algebra::SoNnR => {
            let split = SpaceDescriptor::split(n);
            let mut out = Vec::with_capacity(algebra.dim(n));
            for i in 1..=2 * n {
                for j in i + 1..=2 * n {
                    let beta = Multivector::basis(&split, &[i, j]);
                    out.push(so_nn_spin_action(&beta, x).expect("split action"));
                }
            }
            out.push(x.clone());
            out
        }
    }
}

pub fn stabilizer_dim(x: &Multivector, algebra: Algebra) -> Result<StabReport, StructureError> {
    if x.is_zero() {
        return Err(StructureError::ZeroForm);
    }
    let m = image_matrix(&generator_images(x, algebra));
    let rank = m.rank();
    let total = algebra.dim(x.dim());
    Ok(StabReport { form: x.clone(), algebra, stab_dim: total - rank, orbit_dim: rank, stable: rank == ambient_dim(x), kernel_basis: m.nullspace() })
}

fn check_shape(x: &Multivector, degree: usize, dim: usize) -> Result<(), StructureError> {
    if x.dim() == dim && (x.is_zero() || x.is_homogeneous_of(degree)) {
        Ok(())
    } else {
        Err(StructureError::Shape { expected: degree, dim })
    }
}

fn two_forms(space: &Space) -> Vec<Multivector> {
    let n = space.dim;
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).map(|(i, j)| Multivector::basis(space, &[i, j])).collect()
}

/// `+1` if `op` has eigenvalue `eig` with multiplicity `mult` on `Λ²`, else `-1`.
fn eigen_orientation(space: &Space, op: impl Fn(&Multivector) -> Multivector, eig: i64, mult: usize) -> i64 {
    let basis = two_forms(space);
    let shifted: Vec<Multivector> = basis.iter().map(|a| &op(a) - &a.scale(&Scalar::from_int(eig))).collect();
    let m = Matrix::from_fn(basis.len(), basis.len(), |r, c| {
        let b = basis[r].terms().next().expect("basis").0;
        shifted[c].coeff(*b)
    });
    if basis.len() - m.rank() == mult {
        1
    } else {
        -1
    }
}

/// `α = α₇ + α₁₄` with `α₇ ∈ {X⌟φ}` and `α₁₄ ∈ g₂`.
///
/// `⋆(φ∧·)` acts by `2ε` on `Λ²₇` and `-ε` on `Λ²₁₄`, where `ε = ±1`
/// depends on the orientation of the space relative to `φ`.
pub fn g2_two_form_split(alpha: &Multivector, phi: &Multivector) -> (Multivector, Multivector) {
    let eps = g2_orientation(phi);
    let a7 = (&phi.wedge(alpha).star().scale(&Scalar::from_int(eps)) + alpha).scale(&q(1, 3));
    let a14 = alpha - &a7;
    (a7, a14)
}

/// `ε` with `⋆(φ∧α) = 2εα` on `Λ²₇`.
pub fn g2_orientation(phi: &Multivector) -> i64 {
    eigen_orientation(phi.space(), |a| phi.wedge(a).star(), 2, 7)
}

/// `ε` with `⋆(Ω∧α) = 3εα` on `Λ²₇`.
pub fn spin7_orientation(omega: &Multivector) -> i64 {
    eigen_orientation(omega.space(), |a| omega.wedge(a).star(), 3, 7)
}

/// `α = α₇ + α₂₁` with `⋆(Ω∧·)` acting by `3ε` and `-ε`.
pub fn spin7_two_form_split(alpha: &Multivector, omega: &Multivector) -> (Multivector, Multivector) {
    let eps = spin7_orientation(omega);
    let a7 = (&omega.wedge(alpha).star().scale(&Scalar::from_int(eps)) + alpha).scale(&q(1, 4));
    let a21 = alpha - &a7;
    (a7, a21)
}

/// Chevalley–Eilenberg differential `b` of `su(3)` on `Λ*`.
pub fn psu3_b(x: &Multivector) -> Multivector {
    su3_frame().d(x)
}

/// `b* = -⋆b⋆`.
pub fn psu3_b_adjoint(x: &Multivector) -> Multivector {
    -&psu3_b(&x.star()).star()
}

/// `dim ker b_k - rank b_{k-1}` for `k = 0..=8`.
pub fn psu3_betti() -> Vec<usize> {
    betti_numbers(su3_frame())
}

/// Betti numbers of the Chevalley–Eilenberg complex of a frame.
pub fn betti_numbers(frame: &LieAlgebraFrame) -> Vec<usize> {
    let n = frame.dim();
    let space = frame.space();
    let ranks: Vec<usize> = (0..=n)
        .map(|k| {
            let images: Vec<Multivector> =
                (0u32..1 << n).map(Blade).filter(|b| b.degree() == k).map(|b| frame.d(&Multivector::term(space, b, Scalar::one()))).collect();
            image_matrix(&images).rank()
        })
        .collect();
    (0..=n).map(|k| binomial(n, k) - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 }).collect()
}

/// Skew matrix of a 2-form, `A_ij = α_ij`.
pub fn two_form_matrix(alpha: &Multivector) -> Matrix {
    let n = alpha.dim();
    Matrix::from_fn(n, n, |i, j| alpha.coeff_of(&[i + 1, j + 1]))
}

/// `α*x`: the derivation action of the 2-form `α` viewed in `so(n)`.
pub fn so_action(alpha: &Multivector, x: &Multivector) -> Multivector {
    x.gl_action(&two_form_matrix(alpha))
}

/// A complex form `re + i·im`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexForm {
    pub re: Multivector,
    pub im: Multivector,
}

impl ComplexForm {
    pub fn conj(&self) -> ComplexForm {
        ComplexForm { re: self.re.clone(), im: -&self.im }
    }
}

/// `Λ² = Λ²₈ ⊕ Λ²₁₀₊ ⊕ Λ²₁₀₋` under PSU(3), with `α₂₀ = α₁₀₊ + α₁₀₋`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Psu3Split {
    pub a8: Multivector,
    pub a20: Multivector,
    pub a10_plus: ComplexForm,
    pub a10_minus: ComplexForm,
}

/// PSU(3) decomposition of a 2-form.
///
/// `π₂₀ = ⅓ b*b`; on `Λ²₂₀` the operator `I` with `⋆(ρ∧α) = (1/√3)·(Iα)*ρ`
/// is a complex structure and `α₁₀± = ½(α₂₀ ∓ i·Iα₂₀)`, where
/// `Iα₂₀ = -(√3/3)⋆(b(α)∧ρ)`.
pub fn psu3_project2(alpha: &Multivector) -> Result<Psu3Split, StructureError> {
    check_shape(alpha, 2, 8)?;
    let rho = &CanonicalForms::get().rho_psu3;
    let b_alpha = psu3_b(alpha);
    let a20 = psu3_b_adjoint(&b_alpha).scale(&q(1, 3));
    let real = a20.scale(&q(1, 2));
    let imag = b_alpha.wedge(rho).star().scale(&(&Scalar::sqrt3() * &q(1, 6)));
    Ok(Psu3Split {
        a8: alpha - &a20,
        a20,
        a10_plus: ComplexForm { re: real.clone(), im: imag.clone() },
        a10_minus: ComplexForm { re: real, im: -&imag },
    })
}

/// The six-term skew symmetrisation `Jac(ρ⊗τ)` as a 4-form.
pub fn jacobiator(rho: &Multivector, tau: &Multivector) -> Result<Multivector, StructureError> {
    check_shape(rho, 3, 8)?;
    check_shape(tau, 3, 8)?;
    let n = 8;
    let c = |i: usize, j: usize, k: usize| rho.coeff_of(&[i, j, k]);
    let d = |i: usize, j: usize, k: usize| tau.coeff_of(&[i, j, k]);
    let mut out = Multivector::zero(rho.space());
    for i in 1..=n {
        for j in i + 1..=n {
            for l in j + 1..=n {
                for m in l + 1..=n {
                    let mut acc = Scalar::zero();
                    for k in 1..=n {
                        for (a, b) in [((i, j), (l, m)), ((i, l), (m, j)), ((i, m), (j, l)), ((j, l), (i, m)), ((j, m), (l, i)), ((l, m), (i, j))] {
                            let x = c(a.0, a.1, k);
                            if x.is_zero() {
                                continue;
                            }
                            acc += &(&x * &d(b.0, b.1, k));
                        }
                    }
                    out.add_term(Blade::from_indices(&[i, j, l, m]).expect("distinct").1, acc);
                }
            }
        }
    }
    Ok(out)
}

/// Upper-right `Δ₋ → Δ₊` block `A_ρ` of the Clifford action of a 3-form.
pub fn isometry_block(rho: &Multivector) -> Matrix {
    let rep = MatrixRep::get(8);
    let pos = rep.positive_coords();
    let neg = rep.negative_coords();
    let m = rep.matrix_of(rho);
    Matrix::from_fn(8, 8, |i, j| m.get(pos[i], neg[j]).clone())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsometryClass {
    /// 1: `su(3)`, 2: `su(2)⊕su(2)⊕ℝ²`, 3: `su(2)⊕ℝ⁵`.
    pub kind: u8,
    pub det_sign: i32,
    /// Killing eigenvalues of the two `su(2)` ideals (type 2 only).
    pub lambda_pair: Option<(Scalar, Scalar)>,
    pub center_dim: usize,
    pub killing_rank: usize,
}

/// `Γ₊ = A Aᵀ`, `Γ₋ = Aᵀ A` for the isometry block.
pub fn gamma_pm(rho: &Multivector) -> (Matrix, Matrix) {
    let a = isometry_block(rho);
    let at = a.transpose();
    (&a * &at, &at * &a)
}

/// Type of an isometry-inducing 3-form, or `None` outside that set.
pub fn classify_isometry_3form(rho: &Multivector) -> Result<Option<IsometryClass>, StructureError> {
    check_shape(rho, 3, 8)?;
    if !jacobiator(rho, rho)?.is_zero() {
        return Ok(None);
    }
    let id = Matrix::identity(8);
    let (gp, gm) = gamma_pm(rho);
    if gp != id || gm != id {
        return Ok(None);
    }
    let frame = LieAlgebraFrame::from_three_form(rho).expect("3-form");
    let center_dim = frame.center_dim();
    let killing = frame.killing();
    let killing_rank = killing.rank();
    let kind = match center_dim {
        0 => 1,
        2 => 2,
        5 => 3,
        _ => return Ok(None),
    };
    let det = isometry_block(rho).det();
    let lambda_pair = (kind == 2).then(|| lambda_pair(&killing)).flatten();
    Ok(Some(IsometryClass { kind, det_sign: det.signum(), lambda_pair, center_dim, killing_rank }))
}

/// Roots `λ₁ ≥ λ₂` from `tr B = 3(λ₁+λ₂)`, `tr B² = 3(λ₁²+λ₂²)`.
fn lambda_pair(b: &Matrix) -> Option<(Scalar, Scalar)> {
    let n = b.rows();
    let tr = (0..n).fold(Scalar::zero(), |acc, i| &acc + b.get(i, i));
    let b2 = b * b;
    let tr2 = (0..n).fold(Scalar::zero(), |acc, i| &acc + b2.get(i, i));
    let s = &tr * &q(1, 3);
    let sq = &tr2 * &q(1, 3);
    let p = &(&(&s * &s) - &sq) * &q(1, 2);
    let disc = &(&s * &s) - &(&p * &Scalar::from_int(4));
    let root = disc.sqrt_exact()?;
    let l1 = &(&s + &root) * &q(1, 2);
    let l2 = &(&s - &root) * &q(1, 2);
    Some((l1, l2))
}

/// `ρ(x, y, z)` in floating point.
pub fn evaluate_f64(rho: &Multivector, vectors: &[Vec<f64>]) -> f64 {
    let p = vectors.len();
    rho.terms()
        .filter(|(b, _)| b.degree() == p)
        .map(|(b, c)| {
            let idx = b.indices();
            let m: Vec<Vec<f64>> = vectors.iter().map(|v| idx.iter().map(|&i| v[i - 1]).collect()).collect();
            c.approx() * det_f64(m)
        })
        .sum()
}

#[allow(clippy::needless_range_loop)]
fn det_f64(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for c in 0..n {
        let p = (c..n).max_by(|&a, &b| m[a][c].abs().total_cmp(&m[b][c].abs())).expect("nonempty");
        if m[p][c] == 0.0 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    det
}

fn gram_schmidt(vs: &mut [Vec<f64>]) {
    for i in 0..vs.len() {
        for j in 0..i {
            let d: f64 = vs[i].iter().zip(&vs[j]).map(|(a, b)| a * b).sum();
            let (head, tail) = vs.split_at_mut(i);
            for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                *x -= d * y;
            }
        }
        let norm = vs[i].iter().map(|x| x * x).sum::<f64>().sqrt();
        vs[i].iter_mut().for_each(|x| *x /= norm);
    }
}

/// Maximum of `ρ(x, y, z)` over `samples` seeded random orthonormal 3-frames.
pub fn calibration_sample(rho: &Multivector, samples: usize, seed: u64) -> f64 {
    let n = rho.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::NEG_INFINITY;
    for _ in 0..samples {
        let mut frame: Vec<Vec<f64>> = (0..3).map(|_| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
        gram_schmidt(&mut frame);
        best = best.max(evaluate_f64(rho, &frame));
    }
    best
}
