use exform_core::exterior::{exp_wedge, FormError};
use exform_core::gstructures::CanonicalForms;
use exform_core::{Blade, Matrix, Multivector, Scalar, Space, SpaceDescriptor};
use proptest::prelude::*;

fn e(s: &Space, idx: &[usize]) -> Multivector {
    Multivector::basis(s, idx)
}

fn blades(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
}

/// Sign of the permutation sorting `idx` (all distinct), by inversion count.
fn perm_sign(idx: &[usize]) -> i64 {
    let mut inv = 0;
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            if idx[a] > idx[b] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

fn dense(s: &Space, coeffs: &[i64]) -> Multivector {
    let mut x = Multivector::zero(s);
    for (k, idx) in blades(s.dim).enumerate() {
        x.add_scaled(&e(s, &idx), &Scalar::from_int(coeffs[k % coeffs.len()]));
    }
    x
}

fn homogeneous(s: &Space, p: usize, coeffs: &[i64]) -> Multivector {
    dense(s, coeffs).grade(p)
}

#[test]
fn wedge_signs_match_permutation_parity() {
    let s = SpaceDescriptor::euclidean(6);
    for a in blades(6) {
        for b in blades(6) {
            let w = e(&s, &a).wedge(&e(&s, &b));
            if a.iter().any(|i| b.contains(i)) {
                assert!(w.is_zero());
                continue;
            }
            let cat: Vec<usize> = a.iter().chain(&b).copied().collect();
            let mut sorted = cat.clone();
            sorted.sort();
            assert_eq!(w, e(&s, &sorted).scale(&Scalar::from_int(perm_sign(&cat))), "{a:?} {b:?}");
        }
    }
}

#[test]
fn wedge_examples() {
    let s = SpaceDescriptor::euclidean(2);
    assert_eq!(e(&s, &[1]).wedge(&e(&s, &[2])), e(&s, &[1, 2]));
    let f = CanonicalForms::get();
    assert_eq!(f.psi_plus.wedge(&f.psi_minus), f.omega.wedge_power(3).scale(&Scalar::from_ratio(2, 3)));
    assert_eq!(f.phi.wedge(&f.phi.star()), Multivector::volume(f.phi.space()).scale(&Scalar::from_int(7)));
    let other = SpaceDescriptor::euclidean(3);
    assert_eq!(e(&s, &[1]).try_wedge(&e(&other, &[1])), Err(FormError::SpaceMismatch));
}

#[test]
fn star_examples() {
    let s = SpaceDescriptor::euclidean(5);
    assert_eq!(Multivector::one(&s).star(), Multivector::volume(&s));
    let f = CanonicalForms::get();
    let s7 = f.phi.space();
    let terms: &[(i64, &[usize])] = &[
        (-1, &[1, 2, 4, 7]),
        (1, &[1, 2, 5, 6]),
        (1, &[1, 3, 4, 6]),
        (1, &[1, 3, 5, 7]),
        (-1, &[2, 3, 4, 5]),
        (1, &[2, 3, 6, 7]),
        (1, &[4, 5, 6, 7]),
    ];
    let listed = terms.iter().fold(Multivector::zero(s7), |acc, (c, idx)| &acc + &e(s7, idx).scale(&Scalar::from_int(*c)));
    assert_eq!(f.phi.star(), listed);
    assert_eq!(f.star_phi, listed);
    let split = SpaceDescriptor::split(2);
    assert_eq!(e(&split, &[1]).hodge_star(), Err(FormError::IndefiniteMetric));
}

#[test]
fn star_star_sign_law() {
    for n in [7, 8] {
        let s = SpaceDescriptor::euclidean(n);
        for idx in blades(n) {
            let p = idx.len();
            let x = e(&s, &idx);
            let sign = if (p * (n - p)) % 2 == 0 { 1 } else { -1 };
            assert_eq!(x.star().star(), x.scale(&Scalar::from_int(sign)));
            // ⋆e_I = sign(I,Iᶜ) e_{Iᶜ}
            let comp: Vec<usize> = (1..=n).filter(|i| !idx.contains(i)).collect();
            let cat: Vec<usize> = idx.iter().chain(&comp).copied().collect();
            assert_eq!(x.star(), e(&s, &comp).scale(&Scalar::from_int(perm_sign(&cat))));
        }
    }
}

#[test]
fn reversed_orientation_flips_star() {
    let s = SpaceDescriptor::with_metric(vec![Scalar::one(); 4], -1);
    let plus = SpaceDescriptor::euclidean(4);
    for idx in blades(4) {
        assert_eq!(e(&s, &idx).star().coeff_of(&[]), -&e(&plus, &idx).star().coeff_of(&[]));
    }
}

#[test]
fn contraction_examples() {
    let s = SpaceDescriptor::euclidean(2);
    assert_eq!(e(&s, &[1, 2]).contract_index(1), e(&s, &[2]));
    assert_eq!(e(&s, &[1, 2]).contract_vector(&e(&s, &[2])), -&e(&s, &[1]));
    let phi = &CanonicalForms::get().phi;
    let s7 = phi.space();
    assert_eq!(phi.contract_index(1), &(&e(s7, &[2, 3]) + &e(s7, &[4, 5])) - &e(s7, &[6, 7]));
    // innermost factor first
    let x = e(s7, &[1, 2, 3]);
    assert_eq!(x.contract_form(&e(s7, &[1, 2])), x.contract_index(2).contract_index(1));
    assert_eq!(x.contract_form(&e(s7, &[1, 2])), -&e(s7, &[3]));
    assert_eq!(x.contract_form(&x), Multivector::one(s7).scale(&Scalar::from_int(-1)));
}

#[test]
fn contraction_star_identity() {
    // v⌟⋆ξ = (-1)^{deg ξ} ⋆(v∧ξ)
    let s = SpaceDescriptor::euclidean(7);
    for v in 1..=7 {
        for idx in blades(7) {
            let xi = e(&s, &idx);
            let sign = if idx.len() % 2 == 0 { 1 } else { -1 };
            assert_eq!(xi.star().contract_index(v), e(&s, &[v]).wedge(&xi).star().scale(&Scalar::from_int(sign)));
        }
    }
}

#[test]
fn sigma_table() {
    let s = SpaceDescriptor::euclidean(3);
    let x = &(&(&Multivector::one(&s) + &e(&s, &[1])) + &e(&s, &[1, 2])) + &e(&s, &[1, 2, 3]);
    let want = &(&(&Multivector::one(&s) - &e(&s, &[1])) - &e(&s, &[1, 2])) + &e(&s, &[1, 2, 3]);
    assert_eq!(x.sigma(), want);
    let phi = &CanonicalForms::get().phi;
    assert_eq!(phi.sigma(), *phi);
}

#[test]
fn pairing_examples() {
    let s = SpaceDescriptor::euclidean(7);
    assert_eq!(Multivector::one(&s).q_pairing(&Multivector::volume(&s)), Scalar::one());
    assert!(e(&s, &[1]).q_pairing(&e(&s, &[2])).is_zero());
}

#[test]
fn pairing_symmetry_by_dimension() {
    // symmetric for n ≡ 0, 3 mod 4, skew for n ≡ 1, 2 mod 4
    for n in [4, 5, 6, 7] {
        let s = SpaceDescriptor::euclidean(n);
        let sign = if n % 4 == 0 || n % 4 == 3 { 1 } else { -1 };
        let all: Vec<Vec<usize>> = blades(n).collect();
        for a in &all {
            for b in &all {
                if a.len() % 2 != b.len() % 2 || a.len() + b.len() != n {
                    continue;
                }
                let (x, y) = (e(&s, a), e(&s, b));
                assert_eq!(x.q_pairing(&y), y.q_pairing(&x).scale_int(sign), "n={n} {a:?} {b:?}");
            }
        }
    }
}

trait ScaleInt {
    fn scale_int(&self, k: i64) -> Scalar;
}

impl ScaleInt for Scalar {
    fn scale_int(&self, k: i64) -> Scalar {
        self * &Scalar::from_int(k)
    }
}

#[test]
fn gl_identity_acts_by_minus_degree() {
    let s = SpaceDescriptor::euclidean(7);
    let x = homogeneous(&s, 3, &[1, -2, 3, 0, 5]);
    assert_eq!(x.gl_action(&Matrix::identity(7)), x.scale(&Scalar::from_int(-3)));
    assert!(matches!(x.try_gl_action(&Matrix::identity(3)), Err(FormError::DimensionMismatch(..))));
}

#[test]
fn gl_on_one_forms() {
    // (A·ξ)(e_j) = -ξ(A e_j)
    let s = SpaceDescriptor::euclidean(4);
    let a = Matrix::from_fn(4, 4, |i, j| Scalar::from_int((3 * i + j) as i64 - 5));
    for k in 1..=4 {
        let out = e(&s, &[k]).gl_action(&a);
        for j in 1..=4 {
            assert_eq!(out.coeff_of(&[j]), -a.get(k - 1, j - 1));
        }
    }
}

#[test]
fn exp_wedge_examples() {
    let s = SpaceDescriptor::euclidean(6);
    let x = dense(&s, &[1, 0, -2, 3]);
    assert_eq!(exp_wedge(&Multivector::zero(&s), &x).unwrap(), x);
    let b = &(&e(&s, &[1, 2]) + &e(&s, &[3, 4])) + &e(&s, &[5, 6]);
    let top = exp_wedge(&b, &Multivector::one(&s)).unwrap().grade(6);
    assert_eq!(top, b.wedge_power(3).scale(&Scalar::from_ratio(1, 6)));
    assert_eq!(top, Multivector::volume(&s));
    assert_eq!(exp_wedge(&-&b, &exp_wedge(&b, &x).unwrap()).unwrap(), x);
    assert!(matches!(exp_wedge(&e(&s, &[1]), &x), Err(FormError::WrongDegree { expected: 2 })));
}

#[test]
fn json_round_trip() {
    let f = CanonicalForms::get();
    for x in [&f.phi, &f.rho_psu3, &f.omega] {
        let v = x.to_json();
        assert_eq!(&Multivector::from_json(x.space(), &v).unwrap(), x);
    }
    let v = e(f.phi.space(), &[1, 4, 7]).scale(&Scalar::from_ratio(1, 2)).to_json();
    assert_eq!(v, serde_json::json!([[[1, 4, 7], "1/2"]]));
}

#[test]
fn blade_bookkeeping() {
    assert_eq!(Blade::from_indices(&[3, 1]), Some((-1, Blade::from_indices(&[1, 3]).unwrap().1)));
    assert_eq!(Blade::from_indices(&[2, 2]), None);
    let b = Blade::from_indices(&[1, 4, 7]).unwrap().1;
    assert_eq!(b.degree(), 3);
    assert_eq!(b.name(7), "e147");
}

proptest! {
    #[test]
    fn wedge_is_associative_and_graded_commutative(a in proptest::collection::vec(-3i64..=3, 8), b in proptest::collection::vec(-3i64..=3, 8), c in proptest::collection::vec(-3i64..=3, 8), p in 0usize..=6, q in 0usize..=6) {
        let s = SpaceDescriptor::euclidean(6);
        let (x, y, z) = (dense(&s, &a), dense(&s, &b), dense(&s, &c));
        prop_assert_eq!(x.wedge(&y).wedge(&z), x.wedge(&y.wedge(&z)));
        let (xp, yq) = (x.grade(p), y.grade(q));
        let sign = if p * q % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(xp.wedge(&yq), yq.wedge(&xp).scale(&Scalar::from_int(sign)));
    }

    #[test]
    fn contraction_is_an_antiderivation(a in proptest::collection::vec(-3i64..=3, 8), b in proptest::collection::vec(-3i64..=3, 8), p in 0usize..=5, v in 1usize..=5, w in 1usize..=5) {
        let s = SpaceDescriptor::euclidean(5);
        let (x, y) = (dense(&s, &a).grade(p), dense(&s, &b));
        let sign = if p % 2 == 0 { 1 } else { -1 };
        let rhs = &x.contract_index(v).wedge(&y) + &x.wedge(&y.contract_index(v)).scale(&Scalar::from_int(sign));
        prop_assert_eq!(x.wedge(&y).contract_index(v), rhs);
        prop_assert_eq!(y.contract_index(w).contract_index(v), -&y.contract_index(v).contract_index(w));
    }

    #[test]
    fn gl_action_is_a_derivation(m in proptest::collection::vec(-3i64..=3, 25), a in proptest::collection::vec(-3i64..=3, 8), b in proptest::collection::vec(-3i64..=3, 8)) {
        let s = SpaceDescriptor::euclidean(5);
        let mat = Matrix::from_fn(5, 5, |i, j| Scalar::from_int(m[5 * i + j]));
        let (x, y) = (dense(&s, &a), dense(&s, &b));
        prop_assert_eq!(x.wedge(&y).gl_action(&mat), &x.gl_action(&mat).wedge(&y) + &x.wedge(&y.gl_action(&mat)));
    }

    #[test]
    fn sigma_twists_b_field_exponentials(c in proptest::collection::vec(-3i64..=3, 15), a in proptest::collection::vec(-3i64..=3, 8)) {
        let s = SpaceDescriptor::euclidean(6);
        let b = dense(&s, &c).grade(2);
        let x = dense(&s, &a);
        prop_assert_eq!(x.sigma().sigma(), x.clone());
        prop_assert_eq!(exp_wedge(&b, &x).unwrap().sigma(), exp_wedge(&-&b, &x.sigma()).unwrap());
    }
}
