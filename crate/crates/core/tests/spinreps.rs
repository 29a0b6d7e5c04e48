use exform_core::gstructures::CanonicalForms;
use exform_core::spinreps::*;
use exform_core::{Matrix, Multivector, Scalar, Space, SpaceDescriptor};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

fn e(s: &Space, idx: &[usize]) -> Multivector {
    Multivector::basis(s, idx)
}

fn form(n: usize, terms: &[(i64, &[usize])]) -> Multivector {
    let s = SpaceDescriptor::euclidean(n);
    terms.iter().fold(Multivector::zero(&s), |acc, (c, idx)| &acc + &e(&s, idx).scale(&Scalar::from_int(*c)))
}

fn spinor(v: &[i64]) -> Spinor {
    Spinor::from_ints(v)
}

/// `x∧L − x⌟L`, the left Clifford action of a basis vector on forms.
fn left(k: usize, l: &Multivector) -> Multivector {
    &e(l.space(), &[k]).wedge(l) - &l.contract_index(k)
}

/// `(x⌟ + x∧)(L^od − L^ev)`: from `e_I·x = (−1)^{|I|}(x∧e_I + x⌟e_I)` and
/// the adjointness of `x∧` and `x⌟`.
fn right(k: usize, l: &Multivector) -> Multivector {
    let x = e(l.space(), &[k]);
    let flipped = &l.odd() - &l.even();
    &flipped.contract_index(k) + &x.wedge(&flipped)
}

fn octonion(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|c| Scalar::from_int(*c)).collect()
}

fn norm(x: &[Scalar]) -> Scalar {
    x.iter().fold(Scalar::zero(), |acc, c| &acc + &(c * c))
}

#[test]
fn octonion_examples() {
    let unit = |k: usize| -> Vec<Scalar> { (0..8).map(|i| Scalar::from_int((i == k) as i64)).collect() };
    assert_eq!(octonion_mul(&unit(1), &unit(1)), octonion(&[-1, 0, 0, 0, 0, 0, 0, 0]));
    assert_eq!(octonion_mul(&unit(1), &unit(2)), unit(3));
    for k in 0..8 {
        assert_eq!(octonion_mul(&unit(0), &unit(k)), unit(k));
        assert_eq!(octonion_mul(&unit(k), &unit(0)), unit(k));
        let c = octonion_conj(&unit(k));
        assert_eq!(octonion_mul(&unit(k), &c), unit(0));
    }
    // non-associative: (e1 e2) e4 = -e1 (e2 e4)
    let a = octonion_mul(&octonion_mul(&unit(1), &unit(2)), &unit(4));
    let b = octonion_mul(&unit(1), &octonion_mul(&unit(2), &unit(4)));
    assert_eq!(a, b.iter().map(|c| -c).collect::<Vec<_>>());
}

#[test]
fn octonion_norm_is_multiplicative() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..1000 {
        let mut draw = || -> Vec<i64> { (0..8).map(|_| rng.gen_range(-9..=9)).collect() };
        let (x, y) = (octonion(&draw()), octonion(&draw()));
        assert_eq!(norm(&octonion_mul(&x, &y)), &norm(&x) * &norm(&y));
    }
}

#[test]
fn printed_matrix_entries() {
    // E_{i,j}: −1 at (i, j), +1 at (j, i)
    let skew = |len: usize, terms: &[(i64, usize, usize)]| {
        Matrix::from_fn(len, len, |r, c| {
            terms.iter().fold(Scalar::zero(), |acc, &(s, i, j)| {
                if (r + 1, c + 1) == (i, j) {
                    &acc - &Scalar::from_int(s)
                } else if (r + 1, c + 1) == (j, i) {
                    &acc + &Scalar::from_int(s)
                } else {
                    acc
                }
            })
        })
    };
    // n = 8, e₀ (frame index 1): −E₁,₉ − E₂,₁₀ − … − E₈,₁₆
    let g = MatrixRep::get(8).gamma(1);
    let want = skew(16, &(1..=8).map(|i| (-1, i, i + 8)).collect::<Vec<_>>());
    assert_eq!(g, want);
    // e₁ (frame index 2): E₁,₁₀ − E₂,₉ − E₃,₁₂ + E₄,₁₁ − E₅,₁₄ + E₆,₁₃ + E₇,₁₆ − E₈,₁₅
    let want = skew(16, &[(1, 1, 10), (-1, 2, 9), (-1, 3, 12), (1, 4, 11), (-1, 5, 14), (1, 6, 13), (1, 7, 16), (-1, 8, 15)]);
    assert_eq!(MatrixRep::get(8).gamma(2), want);
    // n = 7, e₁: E₁,₂ − E₃,₄ − E₅,₆ + E₇,₈
    assert_eq!(MatrixRep::get(7).gamma(1), skew(8, &[(1, 1, 2), (-1, 3, 4), (-1, 5, 6), (1, 7, 8)]));
}

#[test]
fn generators_anticommute_and_are_antisymmetric() {
    for n in [7, 8] {
        let rep = MatrixRep::get(n);
        let len = rep.spinor_len();
        for i in 1..=n {
            let gi = rep.gamma(i);
            assert_eq!(gi.transpose(), -&gi);
            for j in 1..=n {
                let gj = rep.gamma(j);
                let anti = &(&gi * &gj) + &(&gj * &gi);
                let want = if i == j { Matrix::identity(len).scale(&Scalar::from_int(-2)) } else { Matrix::zeros(len, len) };
                assert_eq!(anti, want, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn chirality_grading_for_eight_dimensions() {
    let rep = MatrixRep::get(8);
    let vol = Multivector::volume(rep.space());
    for k in 0..16 {
        let psi = Spinor::basis(16, k);
        let c = rep.chirality(k);
        assert_eq!(rep.act(&vol, &psi), psi.scale(&Scalar::from_int(c as i64)));
    }
    assert_eq!(rep.positive_coords(), (0..8).collect::<Vec<_>>());
    assert_eq!(rep.negative_coords(), (8..16).collect::<Vec<_>>());
}

#[test]
fn pairing_examples() {
    let rep = MatrixRep::get(7);
    let s = rep.space();
    let psi0 = Spinor::basis(8, 0);
    assert_eq!(spin_q(&psi0, &psi0), Scalar::one());
    let psi = spinor(&[1, -2, 0, 3, 1, 1, -1, 2]);
    assert!(spin_q(&rep.act_vector(1, &psi), &psi).is_zero());
    assert_eq!(spin_q(&rep.act(&e(s, &[1, 2, 3]), &psi0), &psi0), Scalar::one());
}

#[test]
fn pairing_is_clifford_compatible() {
    // q(x·φ, ψ) = q(φ, σ(x)·ψ) on every blade
    for n in [7, 8] {
        let rep = MatrixRep::get(n);
        let len = rep.spinor_len();
        let phi = Spinor((0..len).map(|k| Scalar::from_int((k as i64 * 5 + 3) % 7 - 3)).collect());
        let psi = Spinor((0..len).map(|k| Scalar::from_int((k as i64 * 3 + 1) % 5 - 2)).collect());
        for mask in 0u32..1 << n {
            let idx: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            let x = e(rep.space(), &idx);
            assert_eq!(spin_q(&rep.act(&x, &phi), &psi), spin_q(&phi, &rep.act(&x.sigma(), &psi)));
        }
    }
}

#[test]
fn fierz_regenerates_the_g2_normal_form() {
    let rep = MatrixRep::get(7);
    let psi0 = Spinor::basis(8, 0);
    let f = CanonicalForms::get();
    let l = fierz_l(rep, &psi0, &psi0);
    assert_eq!(l.grade(3), f.phi);
    assert_eq!(l.even(), &Multivector::one(rep.space()) + &f.star_phi);
    // coefficientwise: φ(e_i, e_j, e_k) = q(e_ijk·ψ₀, ψ₀)
    for i in 1..=7 {
        for j in i + 1..=7 {
            for k in j + 1..=7 {
                let c = spin_q(&rep.act(&e(rep.space(), &[i, j, k]), &psi0), &psi0);
                assert_eq!(c, f.phi.coeff_of(&[i, j, k]));
            }
        }
    }
}

#[test]
fn fierz_regenerates_the_normal_form_at_an_angle() {
    let rep = MatrixRep::get(7);
    let (c, s) = (q(3, 5), q(4, 5));
    let psi0 = Spinor::basis(8, 0);
    let psi1 = Spinor::basis(8, 1);
    let mixed = &psi0.scale(&c) + &psi1.scale(&s);
    let l = fierz_l(rep, &mixed, &psi0);
    let cos_part = &form(7, &[(1, &[])])
        + &form(
            7,
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
    let sin_part = &(&form(7, &[(-1, &[2, 3]), (-1, &[4, 5]), (1, &[6, 7])])
        + &form(7, &[(1, &[1, 2, 4, 6]), (1, &[1, 2, 5, 7]), (1, &[1, 3, 4, 7]), (-1, &[1, 3, 5, 6])]))
        - &form(7, &[(1, &[2, 3, 4, 5, 6, 7])]);
    assert_eq!(l.even(), &cos_part.scale(&c) + &sin_part.scale(&s));
    let cos_odd =
        &form(7, &[(1, &[1, 2, 3]), (1, &[1, 4, 5]), (-1, &[1, 6, 7]), (1, &[2, 4, 6]), (1, &[2, 5, 7]), (1, &[3, 4, 7]), (-1, &[3, 5, 6])])
            + &form(7, &[(1, &[1, 2, 3, 4, 5, 6, 7])]);
    let sin_odd = &(&form(7, &[(1, &[1])]) + &form(7, &[(1, &[2, 4, 7]), (-1, &[2, 5, 6]), (-1, &[3, 4, 6]), (-1, &[3, 5, 7])]))
        + &form(7, &[(-1, &[1, 2, 3, 4, 5]), (1, &[1, 2, 3, 6, 7]), (1, &[1, 4, 5, 6, 7])]);
    assert_eq!(l.odd(), &cos_odd.scale(&c) + &sin_odd.scale(&s));
}

#[test]
fn fierz_regenerates_the_spin7_form() {
    // [L(ψ⊗ψ)]₄ for ψ ∈ Δ₊ is a Spin(7) 4-form: the printed one up to sign
    let rep = MatrixRep::get(8);
    let psi = Spinor::basis(16, 0);
    let omega = fierz_l(rep, &psi, &psi).grade(4);
    let printed = &CanonicalForms::get().spin7_omega;
    assert_eq!(omega, -printed);
    assert_eq!(omega.star(), omega);
}

#[test]
fn fierz_is_bilinear_and_b_twisted() {
    let rep = MatrixRep::get(7);
    let s = rep.space();
    let phi = spinor(&[1, 0, -1, 2, 0, 0, 1, 1]);
    let psi = spinor(&[0, 1, 1, 0, -2, 1, 0, 3]);
    let chi = spinor(&[2, 2, 0, 0, 1, -1, 0, 0]);
    assert_eq!(fierz_l(rep, &phi, &(&psi + &chi)), &fierz_l(rep, &phi, &psi) + &fierz_l(rep, &phi, &chi));
    let b = &e(s, &[1, 2]) + &e(s, &[3, 6]).scale(&q(-2, 3));
    let lb = fierz_lb(rep, &b, &phi, &psi).unwrap();
    assert_eq!(lb, exform_core::exterior::exp_wedge(&b.scale(&q(1, 2)), &fierz_l(rep, &phi, &psi)).unwrap());
}

#[test]
fn box_without_b_field_is_star_sigma() {
    let s = SpaceDescriptor::euclidean(7);
    let zero = Multivector::zero(&s);
    for mask in 0u32..1 << 7 {
        let idx: Vec<usize> = (1..=7).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let x = e(&s, &idx);
        assert_eq!(box_operator(&x, &zero).unwrap(), x.sigma().star());
    }
}

#[test]
fn eight_dimensional_box_follows_chirality() {
    let rep = MatrixRep::get(8);
    let s = rep.space();
    let b = &e(s, &[1, 5]) - &e(s, &[2, 7]).scale(&q(1, 2));
    let plus = spinor(&[1, 0, 2, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
    let minus = spinor(&[0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -3, 0, 0, 2]);
    for (phi, psi, sign) in [(&plus, &plus, 1), (&minus, &plus, 1), (&plus, &minus, -1), (&minus, &minus, -1)] {
        let l = fierz_lb(rep, &b, phi, psi).unwrap();
        let boxed = box_operator(&l, &b).unwrap();
        assert_eq!(boxed, l.scale(&Scalar::from_int(sign)));
        assert_eq!(box_operator(&l.even(), &b).unwrap(), l.even().scale(&Scalar::from_int(sign)));
    }
}

#[test]
fn sandwich_examples() {
    let rep = MatrixRep::get(7);
    let s = rep.space();
    let psi0 = Spinor::basis(8, 0);
    let psi1 = Spinor::basis(8, 1);
    let torsion = &e(s, &[1, 6, 7]) + &e(s, &[1, 4, 5]);
    for even in [true, false] {
        let sw = three_form_sandwich(rep, &e(s, &[1, 2, 3]), &psi0, &psi0, even).unwrap();
        assert!(sw.balanced());
        assert!(!sw.contract_lhs.is_zero() || !sw.wedge_lhs.is_zero());
        assert!(three_form_sandwich(rep, &torsion, &psi1, &psi0, even).unwrap().balanced());
        assert!(three_form_sandwich(rep, &-&torsion, &psi0, &psi1, even).unwrap().balanced());
        let zero = three_form_sandwich(rep, &Multivector::zero(s), &psi0, &psi1, even).unwrap();
        assert!(zero.balanced() && zero.contract_lhs.is_zero() && zero.wedge_lhs.is_zero());
    }
    assert!(three_form_sandwich(rep, &e(s, &[1, 2]), &psi0, &psi0, true).is_err());
}

#[test]
fn infinitesimal_triality() {
    let mut count = 0;
    for i in 1..=8 {
        for j in i + 1..=8 {
            assert!(triality_holds(i, j), "e{i}e{j}");
            count += 1;
        }
    }
    assert_eq!(count, 28);
}

#[test]
fn vector_action_is_twice_the_rotation() {
    let m = vector_action(2, 5);
    assert_eq!(*m.get(4, 1), Scalar::from_int(2));
    assert_eq!(*m.get(1, 4), Scalar::from_int(-2));
    assert_eq!(m.transpose(), -&m);
}

#[test]
fn signed_permutations() {
    let rep = MatrixRep::get(7);
    let p = SignedPerm::from_matrix(&rep.gamma(3)).unwrap();
    assert_eq!(p.to_matrix(), rep.gamma(3));
    assert_eq!(p.compose(&p).to_matrix(), Matrix::identity(8).scale(&Scalar::from_int(-1)));
    assert_eq!(SignedPerm::identity(8).trace(), 8);
    assert!(SignedPerm::from_matrix(&Matrix::identity(3).scale(&q(1, 2))).is_none());
}

#[test]
fn spinor_json() {
    let psi = Spinor(vec![q(1, 2), Scalar::sqrt3(), Scalar::zero()]);
    assert_eq!(psi.to_json(), serde_json::json!(["1/2", "0+1*s3", "0"]));
}

fn small_spinor(len: usize) -> impl Strategy<Value = Spinor> {
    proptest::collection::vec(-2i64..=2, len).prop_map(|v| Spinor::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn clifford_action_passes_through_fierz_seven(phi in small_spinor(8), psi in small_spinor(8), k in 1usize..=7) {
        let rep = MatrixRep::get(7);
        let l = fierz_l(rep, &phi, &psi);
        prop_assert_eq!(fierz_l(rep, &rep.act_vector(k, &phi), &psi), left(k, &l));
        prop_assert_eq!(fierz_l(rep, &phi, &rep.act_vector(k, &psi)), right(k, &l));
    }

    #[test]
    fn clifford_action_passes_through_fierz_eight(phi in small_spinor(16), psi in small_spinor(16), k in 1usize..=8) {
        let rep = MatrixRep::get(8);
        let l = fierz_l(rep, &phi, &psi);
        prop_assert_eq!(fierz_l(rep, &rep.act_vector(k, &phi), &psi), left(k, &l));
        prop_assert_eq!(fierz_l(rep, &phi, &rep.act_vector(k, &psi)), right(k, &l));
    }

    #[test]
    fn clifford_words_pass_through_fierz(phi in small_spinor(8), psi in small_spinor(8), xs in proptest::collection::vec(1usize..=7, 0..=3), ys in proptest::collection::vec(1usize..=7, 0..=3)) {
        let rep = MatrixRep::get(7);
        let x_phi = xs.iter().rev().fold(phi.clone(), |acc, &k| rep.act_vector(k, &acc));
        let y_psi = ys.iter().rev().fold(psi.clone(), |acc, &k| rep.act_vector(k, &acc));
        let mut l = fierz_l(rep, &phi, &psi);
        for &k in ys.iter().rev() {
            l = right(k, &l);
        }
        for &k in xs.iter().rev() {
            l = left(k, &l);
        }
        prop_assert_eq!(fierz_l(rep, &x_phi, &y_psi), l);
    }

    #[test]
    fn seven_dimensional_box_fixes_twisted_fierz(phi in small_spinor(8), psi in small_spinor(8), b in proptest::collection::vec(-2i64..=2, 21)) {
        let rep = MatrixRep::get(7);
        let s = rep.space();
        let mut bf = Multivector::zero(s);
        let mut k = 0;
        for i in 1..=7 {
            for j in i + 1..=7 {
                bf.add_scaled(&e(s, &[i, j]), &Scalar::from_int(b[k]));
                k += 1;
            }
        }
        let l = fierz_lb(rep, &bf, &phi, &psi).unwrap();
        prop_assert_eq!(box_operator(&l, &bf).unwrap(), l);
    }
}
