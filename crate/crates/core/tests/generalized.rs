use exform_core::exterior::exp_wedge;
use exform_core::generalized::*;
use exform_core::gstructures::CanonicalForms;
use exform_core::liegeom::{LieAlgebraFrame, Parity};
use exform_core::spinreps::{box_operator, fierz_l, MatrixRep, Spinor};
use exform_core::{Matrix, Multivector, Scalar, Space, SpaceDescriptor};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(n, d)
}

fn e(s: &Space, idx: &[usize]) -> Multivector {
    Multivector::basis(s, idx)
}

fn compact() -> LieAlgebraFrame {
    let s = SpaceDescriptor::euclidean(7);
    LieAlgebraFrame::from_differentials(7, &[(4, e(&s, &[3, 7])), (6, -&e(&s, &[3, 5]))]).unwrap()
}

fn listed_torsion() -> Multivector {
    let s = SpaceDescriptor::euclidean(7);
    &e(&s, &[1, 6, 7]) + &e(&s, &[1, 4, 5])
}

/// Compact example data with `H = -(e167 + e145)`.
fn compact_data() -> GenStructureData {
    let mut d = GenStructureData::new(compact(), Spinor::basis(8, 0), Spinor::basis(8, 1), Parity::Even).unwrap();
    d.h = -&listed_torsion();
    d
}

fn straight(frame: LieAlgebraFrame) -> GenStructureData {
    let len = MatrixRep::get(frame.dim()).spinor_len();
    let psi = Spinor::basis(len, 0);
    GenStructureData::new(frame, psi.clone(), psi, Parity::Even).unwrap()
}

/// Calibrated, not cocalibrated: `de4 = e12`, `de5 = e13`.
fn calibrated_nil() -> LieAlgebraFrame {
    let s = SpaceDescriptor::euclidean(7);
    LieAlgebraFrame::from_differentials(7, &[(4, e(&s, &[1, 2])), (5, e(&s, &[1, 3]))]).unwrap()
}

fn two_form(s: &Space, coeffs: &[i64]) -> Multivector {
    let n = s.dim;
    let mut x = Multivector::zero(s);
    let mut k = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            x.add_scaled(&e(s, &[i, j]), &Scalar::from_int(coeffs[k]));
            k += 1;
        }
    }
    x
}

fn dense_form(s: &Space, coeffs: &[i64]) -> Multivector {
    let mut x = Multivector::zero(s);
    for (mask, c) in coeffs.iter().enumerate() {
        let idx: Vec<usize> = (0..s.dim).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        x.add_scaled(&e(s, &idx), &Scalar::from_int(*c));
    }
    x
}

#[test]
fn metric_diagonals_for_zero_b() {
    let m = gen_metric_split(&Multivector::zero(&SpaceDescriptor::euclidean(3))).unwrap();
    let (vp, vm) = (m.v_plus(), m.v_minus());
    for i in 0..3 {
        for r in 0..3 {
            let d = if r == i { Scalar::one() } else { Scalar::zero() };
            assert_eq!(vp.get(r, i), &d);
            assert_eq!(vp.get(r + 3, i), &-&d);
            assert_eq!(vm.get(r + 3, i), &d);
        }
    }
    let (g, b) = gen_metric_join(&vp, &vm).unwrap();
    assert_eq!(g, Matrix::identity(3));
    assert!(b.is_zero());
}

#[test]
fn b_field_twist_of_the_diagonal() {
    let s = SpaceDescriptor::euclidean(4);
    let b = two_form(&s, &[1, -2, 0, 3, 1, -1]);
    let m0 = gen_metric_split(&Multivector::zero(&s)).unwrap();
    let mb = gen_metric_split(&b).unwrap();
    assert_eq!(b_transform(&b, &m0.v_plus()), mb.v_plus());
    assert_eq!(b_transform(&b, &m0.v_minus()), mb.v_minus());
}

#[test]
fn join_rejects_indefinite_splittings() {
    let s = SpaceDescriptor::euclidean(2);
    let m = gen_metric_split(&Multivector::zero(&s)).unwrap();
    // swapping the roles gives a negative definite "metric"
    assert_eq!(gen_metric_join(&m.v_minus(), &m.v_plus()), Err(GenError::NotDefinite));
    // not orthogonal
    assert_eq!(gen_metric_join(&m.v_plus(), &m.v_plus()), Err(GenError::NotDefinite));
    assert!(gen_metric_split(&e(&s, &[1])).is_err());
}

proptest! {
    #[test]
    fn split_join_round_trip(coeffs in proptest::collection::vec(-4i64..=4, 10)) {
        let s = SpaceDescriptor::euclidean(5);
        let b = two_form(&s, &coeffs);
        let m = gen_metric_split(&b).unwrap();
        let (vp, vm) = (m.v_plus(), m.v_minus());
        for i in 0..5 {
            for j in 0..5 {
                prop_assert!(pairing(&vp.column(i), &vm.column(j)).is_zero());
            }
            prop_assert!(pairing(&vp.column(i), &vp.column(i)).signum() < 0);
            prop_assert!(pairing(&vm.column(i), &vm.column(i)).signum() > 0);
        }
        let (g, b2) = gen_metric_join(&vp, &vm).unwrap();
        prop_assert_eq!(g, Matrix::identity(5));
        prop_assert_eq!(&b2, &b);
        prop_assert_eq!(gen_metric_split(&b2).unwrap(), m);
    }

    #[test]
    fn join_is_basis_independent(coeffs in proptest::collection::vec(-3i64..=3, 6), shear in -3i64..=3) {
        let s = SpaceDescriptor::euclidean(4);
        let b = two_form(&s, &coeffs);
        let m = gen_metric_split(&b).unwrap();
        let mut p = Matrix::identity(4);
        p.set(0, 2, Scalar::from_int(shear));
        p.set(3, 1, Scalar::from_int(1));
        let (g, b2) = gen_metric_join(&(&m.v_plus() * &p), &(&m.v_minus() * &p)).unwrap();
        prop_assert_eq!(g, Matrix::identity(4));
        prop_assert_eq!(b2, b);
    }

    #[test]
    fn twisted_d_matches_dressed_d_h(coeffs in proptest::collection::vec(-2i64..=2, 21), form in proptest::collection::vec(-2i64..=2, 128)) {
        // d_H(e^{b/2}∧x) = e^{b/2}∧d_T x with T = ½db + H
        let f = compact();
        let b = two_form(f.space(), &coeffs);
        let x = dense_form(f.space(), &form);
        let h = -&listed_torsion();
        let t = &f.d(&b).scale(&q(1, 2)) + &h;
        let half_b = b.scale(&q(1, 2));
        let dressed = exp_wedge(&half_b, &x).unwrap();
        let lhs = twisted_d(&f, &h, &dressed);
        let rhs = exp_wedge(&half_b, &twisted_d(&f, &t, &x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fibre_swap_is_an_involution(form in proptest::collection::vec(-3i64..=3, 128), theta in 1usize..=7) {
        let x = dense_form(&SpaceDescriptor::euclidean(7), &form);
        prop_assert_eq!(swap_fibre(theta, &swap_fibre(theta, &x)), x);
    }

    #[test]
    fn t_duality_intertwines_twisted_differentials(form in proptest::collection::vec(-3i64..=3, 128)) {
        // d_{Tᵗ}(xᵗ) = -(d_T x)ᵗ
        let f = compact();
        let t = -&listed_torsion();
        let x = dense_form(f.space(), &form);
        let dual = tdualize(&f, 4, &x, &t).unwrap();
        let lhs = twisted_d(&dual.frame, &dual.torsion, &dual.rho);
        prop_assert_eq!(lhs, -&swap_fibre(4, &twisted_d(&f, &t, &x)));
    }
}

#[test]
fn validation_errors() {
    let f = compact();
    let p = Spinor::basis(8, 0);
    let two = p.scale(&q(2, 1));
    assert_eq!(GenStructureData::new(f.clone(), two, p.clone(), Parity::Even).unwrap_err(), GenError::NotUnit("Psi+"));
    assert!(matches!(GenStructureData::new(f.clone(), Spinor::basis(16, 0), p.clone(), Parity::Even), Err(GenError::Dimension { .. })));
    let mut d = compact_data();
    d.u = Scalar::zero();
    assert_eq!(d.validate(), Err(GenError::Scale));
    let mut d = compact_data();
    d.h = e(f.space(), &[1, 2]);
    assert!(matches!(d.validate(), Err(GenError::Degree(_))));
    assert_eq!(GenStructureData::new(LieAlgebraFrame::abelian(6), p.clone(), p, Parity::Even).unwrap_err(), GenError::Unsupported(6));
    // Spin(7): Ψ₊ ∈ Δ₊ and Ψ₋ in Δ₊ or Δ₋ by type
    let rep = MatrixRep::get(8);
    let (pos, neg) = (rep.positive_coords()[0], (0..16).find(|&k| rep.chirality(k) < 0).unwrap());
    let f8 = LieAlgebraFrame::abelian(8);
    let (sp, sn) = (Spinor::basis(16, pos), Spinor::basis(16, neg));
    assert!(GenStructureData::new(f8.clone(), sp.clone(), sp.clone(), Parity::Even).is_ok());
    assert!(GenStructureData::new(f8.clone(), sp.clone(), sn.clone(), Parity::Odd).is_ok());
    assert!(matches!(GenStructureData::new(f8.clone(), sp.clone(), sn.clone(), Parity::Even), Err(GenError::Chirality(_))));
    assert!(matches!(GenStructureData::new(f8, sn, sp, Parity::Odd), Err(GenError::Chirality(_))));
}

#[test]
fn straight_structure_forms() {
    let d = straight(LieAlgebraFrame::abelian(7));
    let phi = CanonicalForms::get().phi.clone();
    let (rho, rho_hat) = assemble(&d).unwrap();
    assert_eq!(rho, &Multivector::one(phi.space()) + &phi.star());
    assert_eq!(rho_hat, &phi + &Multivector::volume(phi.space()));
    assert_eq!(d.cos_angle(), Scalar::one());
    let mut odd = d.clone();
    odd.parity = Parity::Odd;
    let (rho_odd, rho_odd_hat) = assemble(&odd).unwrap();
    assert_eq!(rho_odd, rho_hat);
    assert_eq!(rho_odd_hat, rho);
}

#[test]
fn compact_structure_forms() {
    let d = compact_data();
    let f = CanonicalForms::get();
    let s = f.omega.space().clone();
    let alpha = e(&s, &[1]);
    let omega3 = f.omega.wedge_power(3);
    let (rho, rho_hat) = assemble(&d).unwrap();
    assert_eq!(rho, &(&f.omega + &f.psi_plus.wedge(&alpha)) - &omega3.scale(&q(1, 6)));
    let want_hat = &(&alpha - &f.psi_minus) - &f.omega.wedge_power(2).wedge(&alpha).scale(&q(1, 2));
    assert_eq!(rho_hat, want_hat);
    assert!(d.cos_angle().is_zero());
    // for n = 7 the companion is the opposite-parity part of L
    let l = fierz_l(d.rep(), &d.psi_minus, &d.psi_plus);
    assert_eq!(rho_hat, l.odd());
}

#[test]
fn pairing_normalisation_scales_with_u() {
    let mut d = compact_data();
    d.u = q(2, 1);
    let (rho, rho_hat) = assemble(&d).unwrap();
    assert_eq!(rho.q_pairing(&rho_hat), Scalar::from_int(8 * 4));
    let rep = MatrixRep::get(8);
    let pos = rep.positive_coords();
    let psi = Spinor::basis(16, pos[0]);
    let mut d8 = GenStructureData::new(LieAlgebraFrame::abelian(8), psi.clone(), psi, Parity::Even).unwrap();
    d8.u = q(2, 1);
    let (r8, r8_hat) = assemble(&d8).unwrap();
    assert_eq!(r8.q_pairing(&r8_hat), Scalar::from_int(16 * 4));
}

#[test]
fn b_field_dresses_the_forms() {
    let mut d = compact_data();
    let s = d.frame.space().clone();
    d.b = &e(&s, &[2, 3]) - &e(&s, &[1, 6]).scale(&q(1, 2));
    let bare = bare_structure(&d).unwrap();
    let (rho, rho_hat) = assemble(&d).unwrap();
    let half_b = d.b.scale(&q(1, 2));
    assert_eq!(rho, exp_wedge(&half_b, &bare.rho).unwrap());
    assert_eq!(rho_hat, box_operator(&rho, &d.b).unwrap());
    assert_eq!(d.torsion(), &d.frame.d(&d.b).scale(&q(1, 2)) + &d.h);
}

#[test]
fn compact_example_is_strongly_integrable() {
    let d = compact_data();
    let report = check_data(&d).unwrap();
    assert!(report.strong_ok(), "{:?}", report.violations());
    assert_eq!(report.d_torsion, e(d.frame.space(), &[1, 3, 5, 7]).scale(&q(-2, 1)));
    assert!(d.killing_check().unwrap().ok());
}

#[test]
fn listed_torsion_fails_on_both_sides() {
    let mut d = compact_data();
    d.h = listed_torsion();
    let report = check_data(&d).unwrap();
    assert!(!report.ok());
    let v = report.violations();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].degree, 5);
    let s = d.frame.space();
    assert_eq!(v[0].value, (&e(s, &[1, 2, 3, 4, 5]) + &e(s, &[1, 2, 3, 6, 7])).scale(&q(-2, 1)));
    assert_eq!(report.d_torsion, e(s, &[1, 3, 5, 7]).scale(&q(2, 1)));
    assert!(!d.killing_check().unwrap().ok());
}

#[test]
fn flat_straight_structure_is_strong() {
    let d = straight(LieAlgebraFrame::abelian(7));
    let r = check_data(&d).unwrap();
    assert!(r.strong_ok() && r.violations().is_empty());
    assert!(d.killing_check().unwrap().ok());
}

#[test]
fn straight_structure_rejects_a_killing_number() {
    // T = λφ balances d_Tρ = λρ̂ in degree 3 but leaves 7λ·vol against λ·vol
    let mut d = straight(LieAlgebraFrame::abelian(7));
    let l = q(3, 1);
    let phi = induced_g2_form(&d.psi_plus);
    d.lambda = l.clone();
    d.h = phi.scale(&l);
    let r = check_data(&d).unwrap();
    assert!(!r.ok());
    let v = r.violations();
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].degree, 7);
    assert_eq!(v[0].value, Multivector::volume(phi.space()).scale(&(&l * &q(6, 1))));
    assert!(!d.killing_check().unwrap().ok());
    // without torsion the residual is -λρ̂
    d.h = Multivector::zero(phi.space());
    let r = check_data(&d).unwrap();
    assert_eq!(r.residual, -&assemble(&d).unwrap().1.scale(&l));
}

#[test]
fn calibrated_nilmanifold_fails() {
    let d = straight(calibrated_nil());
    let phi = induced_g2_form(&d.psi_plus);
    assert!(d.frame.d(&phi).is_zero());
    assert!(!d.frame.d(&phi.star()).is_zero());
    let r = check_data(&d).unwrap();
    assert!(!r.ok());
    assert_eq!(r.d_rho, d.frame.d(&phi.star()));
    assert!(r.d_rho_hat.is_zero());
    assert!(!d.killing_check().unwrap().ok());
}

#[test]
fn form_and_spinor_checks_agree() {
    let mut cases = vec![compact_data(), straight(LieAlgebraFrame::abelian(7)), straight(calibrated_nil())];
    let mut listed = compact_data();
    listed.h = listed_torsion();
    cases.push(listed);
    let mut swapped = compact_data();
    std::mem::swap(&mut swapped.psi_plus, &mut swapped.psi_minus);
    cases.push(swapped);
    let mut lam = straight(LieAlgebraFrame::abelian(7));
    lam.lambda = q(1, 2);
    cases.push(lam);
    let spin7: Vec<GenStructureData> = cases[..2].iter().map(|d| g2_to_spin7(d).unwrap()).collect();
    cases.extend(spin7);
    for (k, d) in cases.iter().enumerate() {
        let forms = check_data(d).unwrap().ok();
        let spinors = d.killing_check().unwrap().ok();
        assert_eq!(forms, spinors, "case {k}");
    }
}

#[test]
fn torsion_recovered_from_spinors() {
    let d = compact_data();
    let t = d.torsion();
    assert_eq!(torsion_from_spinors(&d).unwrap(), (t.clone(), t));
    // with u ≠ 1 the powers cancel for constant dilaton
    let mut du = compact_data();
    du.u = q(3, 1);
    let t = du.torsion();
    assert_eq!(torsion_from_spinors(&du).unwrap(), (t.clone(), t));
    let flat = straight(LieAlgebraFrame::abelian(7));
    let (a, b) = torsion_from_spinors(&flat).unwrap();
    assert!(a.is_zero() && b.is_zero());
    assert_eq!(induced_g2_form(&Spinor::basis(8, 0)), CanonicalForms::get().phi);
}

#[test]
fn compact_example_on_the_circle_product() {
    let d = compact_data();
    let (rho, rho_hat) = assemble(&d).unwrap();
    let d8 = g2_to_spin7(&d).unwrap();
    assert_eq!(d8.dim(), 8);
    assert_eq!(d8.parity, Parity::Even);
    let (r8, r8_hat) = assemble(&d8).unwrap();
    assert_eq!(r8, circle_product_form(&rho, &rho_hat));
    // Spin(7) structures of even type are self-dual
    assert_eq!(r8_hat, r8);
    let report = check_data(&d8).unwrap();
    assert!(report.strong_ok());
    assert!(d8.killing_check().unwrap().ok());
}

#[test]
fn flat_straight_lifts_to_flat_straight() {
    let d8 = g2_to_spin7(&straight(LieAlgebraFrame::abelian(7))).unwrap();
    assert!(d8.frame.is_abelian());
    assert_eq!(d8.psi_plus, d8.psi_minus);
    assert!(check_data(&d8).unwrap().strong_ok());
    let mut odd = straight(LieAlgebraFrame::abelian(7));
    odd.parity = Parity::Odd;
    assert!(matches!(g2_to_spin7(&odd), Err(GenError::Chirality(_))));
}

#[test]
fn integrability_is_inherited_by_the_circle_product() {
    for d in [compact_data(), straight(LieAlgebraFrame::abelian(7)), straight(calibrated_nil())] {
        let before = check_data(&d).unwrap().strong_ok();
        let after = check_data(&g2_to_spin7(&d).unwrap()).unwrap().strong_ok();
        assert_eq!(before, after);
    }
}

#[test]
fn compact_example_t_dual() {
    let d = compact_data();
    let s = bare_structure(&d).unwrap();
    let dual = tdualize(&s.frame, 4, &s.rho, &s.torsion).unwrap();
    let sp = s.frame.space();
    assert_eq!(dual.bundle.ft, e(sp, &[3, 7]));
    assert_eq!(dual.bundle.f, -&e(sp, &[1, 5]));
    assert_eq!(dual.frame.d_coframe(4), -&e(sp, &[1, 5]));
    assert_eq!(dual.frame.d_coframe(6), d.frame.d_coframe(6));
    // parity flips
    assert!(dual.rho.odd() == dual.rho && !dual.rho.is_zero());
    let hat_t = swap_fibre(4, &s.rho_hat);
    // the companion of ρᵗ agrees with (ρ̂)ᵗ up to the constant -1
    assert_eq!(box_operator(&dual.rho, &Multivector::zero(sp)).unwrap(), -&hat_t);
    let fs = FormStructure { frame: dual.frame.clone(), rho: dual.rho.clone(), rho_hat: hat_t, torsion: dual.torsion.clone(), parity: Parity::Odd };
    assert!(check_integrability(&fs, &Scalar::zero()).strong_ok());
    // and back
    let back = tdualize(&dual.frame, 4, &dual.rho, &dual.torsion).unwrap();
    assert_eq!(back.rho, s.rho);
    assert_eq!(back.torsion, s.torsion);
    assert_eq!(back.frame, s.frame);
}

#[test]
fn curvature_becomes_torsion_under_t_duality() {
    // straight structure on a nilpotent circle bundle, T = 0
    let f = calibrated_nil();
    let phi = induced_g2_form(&Spinor::basis(8, 0));
    let rho = &Multivector::one(phi.space()) + &phi.star();
    let dual = tdualize(&f, 4, &rho, &Multivector::zero(phi.space())).unwrap();
    let theta = e(phi.space(), &[4]);
    assert_eq!(dual.torsion, -&theta.wedge(&f.d_coframe(4)));
    assert!(!dual.torsion.is_zero());
    assert!(dual.frame.d_coframe(4).is_zero());
}

#[test]
fn t_duality_needs_basic_data() {
    let f = compact();
    let s = f.space();
    let z = Multivector::zero(s);
    assert!(matches!(tdualize(&f, 3, &z, &z), Err(GenError::NotBasic(_))));
    // T with a θ∧θ-free but non-basic contraction is fine; a non-basic 𝓕 is not
    let bad = LieAlgebraFrame::from_differentials(7, &[(4, e(s, &[3, 7])), (6, e(s, &[4, 5]))]).unwrap();
    assert!(matches!(tdualize(&bad, 4, &z, &z), Err(GenError::NotBasic(_))));
    assert!(tdualize(&f, 9, &z, &z).is_err());
}
