//! Generalized metrics, generalized G₂/Spin(7) structures from spinor pairs,
//! their integrability checkers and T-duality.

use thiserror::Error;

use crate::exterior::{exp_wedge, FormError, Multivector, SpaceDescriptor};
use crate::liegeom::{killing_dilaton_check, KillingReport, LieAlgebraFrame, LieError, Parity, SpinorData};
use crate::linalg::Matrix;
use crate::scalars::Scalar;
use crate::spinreps::{box_operator, fierz_l, spin_q, MatrixRep, Spinor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("spinor {0} does not have unit norm")]
    NotUnit(&'static str),
    #[error("generalized structures need dimension 7 or 8, got {0}")]
    Unsupported(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("{0}")]
    Chirality(String),
    #[error("scale u must be positive")]
    Scale,
    #[error("expected a {0}")]
    Degree(&'static str),
    #[error("splitting is not a definite orthogonal pair of graphs")]
    NotDefinite,
    #[error("not basic: {0}")]
    NotBasic(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

fn half() -> Scalar {
    Scalar::from_ratio(1, 2)
}

/// The splitting `T⊕T* = V₊⊕V₋` of a metric (the frame metric) and a 2-form `b`,
/// `V± = {t ⊕ t⌟(∓g + b)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedMetric {
    pub n: usize,
    pub b: Multivector,
}

impl GeneralizedMetric {
    pub fn new(b: &Multivector) -> Result<Self, GenError> {
        if !b.is_zero() && !b.is_homogeneous_of(2) {
            return Err(GenError::Degree("2-form"));
        }
        Ok(GeneralizedMetric { n: b.dim(), b: b.clone() })
    }

    /// Columns `(X, ξ)` of length `2n` spanning `V₊`.
    pub fn v_plus(&self) -> Matrix {
        self.graph(-1)
    }

    pub fn v_minus(&self) -> Matrix {
        self.graph(1)
    }

    fn graph(&self, sign: i64) -> Matrix {
        let n = self.n;
        Matrix::from_fn(2 * n, n, |r, i| {
            if r < n {
                if r == i {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            } else {
                let j = r - n;
                let g = if i == j { Scalar::from_int(sign) } else { Scalar::zero() };
                &g + &self.b.coeff_of(&[i + 1, j + 1])
            }
        })
    }
}

pub fn gen_metric_split(b: &Multivector) -> Result<GeneralizedMetric, GenError> {
    GeneralizedMetric::new(b)
}

/// Split-signature pairing `½(ξ(Y) + η(X))` of `(X, ξ)` and `(Y, η)`.
pub fn pairing(x: &[Scalar], y: &[Scalar]) -> Scalar {
    let n = x.len() / 2;
    let mut acc = Scalar::zero();
    for i in 0..n {
        acc += &(&x[n + i] * &y[i]);
        acc += &(&y[n + i] * &x[i]);
    }
    &acc * &half()
}

/// `(X, ξ) ↦ (X, ξ + X⌟b)` applied to each column.
pub fn b_transform(b: &Multivector, v: &Matrix) -> Matrix {
    let n = b.dim();
    Matrix::from_fn(v.rows(), v.cols(), |r, c| {
        if r < n {
            v.get(r, c).clone()
        } else {
            let j = r - n;
            let mut acc = v.get(r, c).clone();
            for i in 0..n {
                let x = v.get(i, c);
                if !x.is_zero() {
                    acc += &(x * &b.coeff_of(&[i + 1, j + 1]));
                }
            }
            acc
        }
    })
}

fn positive_definite(g: &Matrix) -> bool {
    (1..=g.rows()).all(|k| g.block(0, 0, k, k).det().signum() > 0)
}

/// Recovers `(g, b)` from a splitting given by spanning columns of `V₊` and `V₋`.
pub fn gen_metric_join(v_plus: &Matrix, v_minus: &Matrix) -> Result<(Matrix, Multivector), GenError> {
    let n = v_plus.cols();
    if v_plus.rows() != 2 * n || v_minus.rows() != 2 * n || v_minus.cols() != n {
        return Err(GenError::Dimension { expected: 2 * n, got: v_plus.rows() });
    }
    for i in 0..n {
        for j in 0..n {
            if !pairing(&v_plus.column(i), &v_minus.column(j)).is_zero() {
                return Err(GenError::NotDefinite);
            }
        }
    }
    let graph = |v: &Matrix| -> Result<Matrix, GenError> {
        let p = v.block(0, 0, n, n).inverse().ok_or(GenError::NotDefinite)?;
        Ok(&v.block(n, 0, n, n) * &p)
    };
    let (ap, am) = (graph(v_plus)?, graph(v_minus)?);
    // A±_{ji} = ∓g_ij + b_ij
    let g = Matrix::from_fn(n, n, |i, j| &(am.get(j, i) - ap.get(j, i)) * &half());
    let bm = Matrix::from_fn(n, n, |i, j| &(am.get(j, i) + ap.get(j, i)) * &half());
    if g != g.transpose() || !positive_definite(&g) || bm != -&bm.transpose() {
        return Err(GenError::NotDefinite);
    }
    let space = SpaceDescriptor::euclidean(n);
    let mut b = Multivector::zero(&space);
    for i in 0..n {
        for j in i + 1..n {
            b.add_scaled(&Multivector::basis(&space, &[i + 1, j + 1]), bm.get(i, j));
        }
    }
    Ok((g, b))
}

/// A generalized G₂ (`n = 7`) or Spin(7) (`n = 8`) structure as data
/// `(frame, b, u = e^{-F}, Ψ₊, Ψ₋, parity, λ, H)`.
#[derive(Debug, Clone)]
pub struct GenStructureData {
    pub frame: LieAlgebraFrame,
    pub b: Multivector,
    pub u: Scalar,
    pub psi_plus: Spinor,
    pub psi_minus: Spinor,
    pub parity: Parity,
    pub lambda: Scalar,
    pub h: Multivector,
}

impl GenStructureData {
    /// Data with `b = 0`, `u = 1`, `λ = 0`, `H = 0`.
    pub fn new(frame: LieAlgebraFrame, psi_plus: Spinor, psi_minus: Spinor, parity: Parity) -> Result<Self, GenError> {
        let zero = Multivector::zero(frame.space());
        let data = GenStructureData { b: zero.clone(), h: zero, u: Scalar::one(), lambda: Scalar::zero(), frame, psi_plus, psi_minus, parity };
        data.validate()?;
        Ok(data)
    }

    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn rep(&self) -> &'static MatrixRep {
        MatrixRep::get(self.dim())
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let n = self.dim();
        if n != 7 && n != 8 {
            return Err(GenError::Unsupported(n));
        }
        let len = self.rep().spinor_len();
        for (name, psi) in [("Psi+", &self.psi_plus), ("Psi-", &self.psi_minus)] {
            if psi.len() != len {
                return Err(GenError::Dimension { expected: len, got: psi.len() });
            }
            if !psi.norm_sq().is_one() {
                return Err(GenError::NotUnit(name));
            }
        }
        for x in [&self.b, &self.h] {
            if x.dim() != n {
                return Err(GenError::Dimension { expected: n, got: x.dim() });
            }
        }
        if !self.b.is_zero() && !self.b.is_homogeneous_of(2) {
            return Err(GenError::Degree("2-form b"));
        }
        if !self.h.is_zero() && !self.h.is_homogeneous_of(3) {
            return Err(GenError::Degree("3-form H"));
        }
        if self.u.signum() <= 0 {
            return Err(GenError::Scale);
        }
        if n == 8 {
            let rep = self.rep();
            let chir = |psi: &Spinor| -> Option<i32> {
                let signs: Vec<i32> = (0..16).filter(|&k| !psi.0[k].is_zero()).map(|k| rep.chirality(k)).collect();
                if signs.iter().all(|&s| s == signs[0]) {
                    signs.first().copied()
                } else {
                    None
                }
            };
            if chir(&self.psi_plus) != Some(1) {
                return Err(GenError::Chirality("Psi+ must lie in Delta+".into()));
            }
            let want = if self.parity == Parity::Even { 1 } else { -1 };
            if chir(&self.psi_minus) != Some(want) {
                return Err(GenError::Chirality(format!(
                    "Psi- must lie in Delta{} for {} type",
                    if want > 0 { "+" } else { "-" },
                    self.parity.name()
                )));
            }
        }
        Ok(())
    }

    /// `T = ½db + H`.
    pub fn torsion(&self) -> Multivector {
        &self.frame.d(&self.b).scale(&half()) + &self.h
    }

    /// `cos a = q(Ψ₊, Ψ₋)`.
    pub fn cos_angle(&self) -> Scalar {
        spin_q(&self.psi_plus, &self.psi_minus)
    }

    /// Spinor-side Killing and dilaton equations with constant dilaton.
    pub fn killing_check(&self) -> Result<KillingReport, GenError> {
        let t = self.torsion();
        let data = SpinorData {
            psi_plus: &self.psi_plus,
            psi_minus: &self.psi_minus,
            torsion: &t,
            df: None,
            lambda: self.lambda.clone(),
            parity: self.parity,
        };
        Ok(killing_dilaton_check(&self.frame, &data)?)
    }
}

/// Structure and companion forms on a frame together with the torsion entering `d_T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormStructure {
    pub frame: LieAlgebraFrame,
    pub rho: Multivector,
    pub rho_hat: Multivector,
    pub torsion: Multivector,
    pub parity: Parity,
}

fn parity_part(x: &Multivector, parity: Parity) -> Multivector {
    match parity {
        Parity::Even => x.even(),
        Parity::Odd => x.odd(),
    }
}

/// `u·L(Ψ₋⊗Ψ₊)` projected to the declared parity, before the `e^{b/2}` dressing.
fn bare_rho(data: &GenStructureData) -> Multivector {
    let l = fierz_l(data.rep(), &data.psi_minus, &data.psi_plus).scale(&data.u);
    parity_part(&l, data.parity)
}

/// `(ρ, ρ̂)` with `ρ = u·L_b(Ψ₋⊗Ψ₊)` of the declared parity and `ρ̂ = □_{g,b}ρ`.
pub fn assemble(data: &GenStructureData) -> Result<(Multivector, Multivector), GenError> {
    data.validate()?;
    let rho = exp_wedge(&data.b.scale(&half()), &bare_rho(data))?;
    let rho_hat = box_operator(&rho, &data.b)?;
    Ok((rho, rho_hat))
}

/// The `b`-free forms with `T = ½db + H`; `d_H` on the dressed forms equals
/// `e^{b/2}∧d_T` on these.
pub fn bare_structure(data: &GenStructureData) -> Result<FormStructure, GenError> {
    data.validate()?;
    let rho = bare_rho(data);
    let rho_hat = box_operator(&rho, &Multivector::zero(rho.space()))?;
    Ok(FormStructure { frame: data.frame.clone(), rho, rho_hat, torsion: data.torsion(), parity: data.parity })
}

/// `dx + T∧x`.
pub fn twisted_d(frame: &LieAlgebraFrame, torsion: &Multivector, x: &Multivector) -> Multivector {
    &frame.d(x) + &torsion.wedge(x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub equation: &'static str,
    pub degree: usize,
    pub value: Multivector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrabilityReport {
    pub lambda: Scalar,
    /// `d_Tρ`.
    pub d_rho: Multivector,
    /// `d_Tρ̂`.
    pub d_rho_hat: Multivector,
    /// `d_Tρ - λρ̂`.
    pub residual: Multivector,
    /// `dT`, reported because closedness of `T` is not required.
    pub d_torsion: Multivector,
}

impl IntegrabilityReport {
    pub fn strong_ok(&self) -> bool {
        self.lambda.is_zero() && self.d_rho.is_zero() && self.d_rho_hat.is_zero()
    }

    pub fn weak_ok(&self) -> bool {
        !self.lambda.is_zero() && self.residual.is_zero()
    }

    pub fn ok(&self) -> bool {
        self.strong_ok() || self.weak_ok()
    }

    /// Nonzero residuals split by degree.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut push = |equation: &'static str, x: &Multivector| {
            for p in 0..=x.dim() {
                let v = x.grade(p);
                if !v.is_zero() {
                    out.push(Violation { equation, degree: p, value: v });
                }
            }
        };
        push("d_T rho - lambda rho_hat", &self.residual);
        if self.lambda.is_zero() {
            push("d_T rho_hat", &self.d_rho_hat);
        }
        out
    }
}

/// Evaluates `d_Tρ - λρ̂` and `d_Tρ̂` exactly.
pub fn check_integrability(s: &FormStructure, lambda: &Scalar) -> IntegrabilityReport {
    let d_rho = twisted_d(&s.frame, &s.torsion, &s.rho);
    let d_rho_hat = twisted_d(&s.frame, &s.torsion, &s.rho_hat);
    let residual = &d_rho - &s.rho_hat.scale(lambda);
    IntegrabilityReport { lambda: lambda.clone(), d_rho, d_rho_hat, residual, d_torsion: s.frame.d(&s.torsion) }
}

pub fn check_data(data: &GenStructureData) -> Result<IntegrabilityReport, GenError> {
    Ok(check_integrability(&bare_structure(data)?, &data.lambda))
}

/// G₂ 3-form `[L(Ψ⊗Ψ)]₃` of a unit spinor.
pub fn induced_g2_form(psi: &Spinor) -> Multivector {
    fierz_l(MatrixRep::get(7), psi, psi).grade(3)
}

/// `±T = -e^{2F}⋆d(e^{-2F}φ±) ± 2λφ±` (even) or `+ 2λφ±` (odd), returned as the two
/// resulting values of `T`.
pub fn torsion_from_spinors(data: &GenStructureData) -> Result<(Multivector, Multivector), GenError> {
    data.validate()?;
    if data.dim() != 7 {
        return Err(GenError::Unsupported(data.dim()));
    }
    let u2 = &data.u * &data.u;
    let two_l = &data.lambda * &Scalar::from_int(2);
    let side = |psi: &Spinor, sign: i64| -> Multivector {
        let phi = induced_g2_form(psi);
        let mut t = data.frame.d(&phi.scale(&u2)).star().scale(&-&u2.inv());
        let l = match data.parity {
            Parity::Even => &two_l * &Scalar::from_int(sign),
            Parity::Odd => two_l.clone(),
        };
        t.add_scaled(&phi, &l);
        t.scale(&Scalar::from_int(sign))
    };
    Ok((side(&data.psi_plus, 1), side(&data.psi_minus, -1)))
}

/// The isomorphism `Δ₇ → Δ₈⁺` with `γ_i·γ₈` on `Δ₈⁺` corresponding to `γ_i` on `Δ₇`.
fn spinor_intertwiner() -> &'static Matrix {
    static J: std::sync::OnceLock<Matrix> = std::sync::OnceLock::new();
    J.get_or_init(|| {
        let r7 = MatrixRep::get(7);
        let r8 = MatrixRep::get(8);
        let pos = r8.positive_coords();
        let s8 = r8.space().clone();
        // unknown J (8×8, rows = Δ₈⁺ coords): Σ_k J_rk (γ7_i)_kc = Σ_s (γ8_i γ8_8)|₊ _rs J_sc
        let mut rows = Vec::new();
        for i in 1..=7 {
            let a = r7.gamma(i);
            let m = r8.matrix_of(&Multivector::basis(&s8, &[i, 8]));
            let b = Matrix::from_fn(8, 8, |r, s| m.get(pos[r], pos[s]).clone());
            for r in 0..8 {
                for c in 0..8 {
                    let mut row = vec![Scalar::zero(); 64];
                    for k in 0..8 {
                        row[r * 8 + k] += a.get(k, c);
                        row[k * 8 + c] -= b.get(r, k);
                    }
                    rows.push(row);
                }
            }
        }
        let kernel = Matrix::from_rows(rows).nullspace();
        assert_eq!(kernel.len(), 1, "the spin representations are irreducible");
        let j = Matrix::from_fn(8, 8, |r, c| kernel[0][r * 8 + c].clone());
        // columns have norm² 2 in this basis, so J has entries in ℚ(√2)
        let col = j.column(0);
        let norm = col.iter().fold(Scalar::zero(), |acc, x| &acc + &(x * x));
        assert_eq!(norm, Scalar::from_int(2));
        let scale = &Scalar::sqrt_of(2) * &half();
        j.scale(&scale)
    })
}

/// Embeds a `Δ₇` spinor as a positive `Δ₈` spinor; rational input gives entries in `ℚ(√2)`.
pub fn embed_spinor(psi: &Spinor) -> Spinor {
    let j = spinor_intertwiner();
    let pos = MatrixRep::get(8).positive_coords();
    let v = j.apply(&psi.0);
    let mut out = vec![Scalar::zero(); 16];
    for (r, &p) in pos.iter().enumerate() {
        out[p] = v[r].clone();
    }
    Spinor(out)
}

/// Even generalized G₂ data on `M⁷` to even Spin(7) data on `M⁷×S¹`, the circle as `e8`.
pub fn g2_to_spin7(data: &GenStructureData) -> Result<GenStructureData, GenError> {
    data.validate()?;
    if data.dim() != 7 {
        return Err(GenError::Unsupported(data.dim()));
    }
    if data.parity != Parity::Even {
        return Err(GenError::Chirality("the circle product needs even parity".into()));
    }
    let frame = data.frame.extend_flat(1);
    let map: Vec<usize> = (1..=7).collect();
    let s8 = frame.space().clone();
    let out = GenStructureData {
        b: data.b.embed(&s8, &map),
        h: data.h.embed(&s8, &map),
        u: data.u.clone(),
        psi_plus: embed_spinor(&data.psi_plus),
        psi_minus: embed_spinor(&data.psi_minus),
        parity: Parity::Even,
        lambda: Scalar::zero(),
        frame,
    };
    out.validate()?;
    Ok(out)
}

/// `dt∧ρ̂₀ + ρ₀` on `M⁷×S¹` for 7-dimensional forms, with `dt = -e8`: the
/// identification `Δ₇ ≅ Δ₈⁺` through `γ_i·γ₈` orients the circle against `e8`.
pub fn circle_product_form(rho: &Multivector, rho_hat: &Multivector) -> Multivector {
    let s8 = SpaceDescriptor::euclidean(8);
    let map: Vec<usize> = (1..=7).collect();
    let dt = -&Multivector::basis(&s8, &[8]);
    &dt.wedge(&rho_hat.embed(&s8, &map)) + &rho.embed(&s8, &map)
}

/// Principal circle bundle data: vertical coframe index `θ`, curvature `𝓕 = dθ`,
/// `𝓕ᵗ = -e_θ⌟T` and the basic part `𝒯 = T + θ∧𝓕ᵗ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bundle {
    pub theta: usize,
    pub f: Multivector,
    pub ft: Multivector,
    pub cal_t: Multivector,
}

fn is_basic(x: &Multivector, theta: usize) -> bool {
    x.terms().all(|(b, _)| !b.contains(theta))
}

pub fn bundle_data(frame: &LieAlgebraFrame, theta: usize, torsion: &Multivector) -> Result<Bundle, GenError> {
    let n = frame.dim();
    if theta == 0 || theta > n {
        return Err(GenError::Lie(LieError::Index(theta, n)));
    }
    for k in 1..=n {
        if !is_basic(&frame.d_coframe(k), theta) {
            return Err(GenError::NotBasic(format!("de{k} involves e{theta}")));
        }
    }
    let f = frame.d_coframe(theta);
    let ft = -&torsion.contract_index(theta);
    let theta_form = Multivector::basis(frame.space(), &[theta]);
    let cal_t = torsion + &theta_form.wedge(&ft);
    if !is_basic(&ft, theta) || !is_basic(&cal_t, theta) {
        return Err(GenError::NotBasic("torsion".into()));
    }
    Ok(Bundle { theta, f, ft, cal_t })
}

/// `x = θ∧x₀ + x₁ ↦ θ∧x₁ + x₀`.
pub fn swap_fibre(theta: usize, x: &Multivector) -> Multivector {
    let t = Multivector::basis(x.space(), &[theta]);
    let x0 = x.contract_index(theta);
    let x1 = x - &t.wedge(&x0);
    &t.wedge(&x1) + &x0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TDual {
    pub frame: LieAlgebraFrame,
    pub rho: Multivector,
    pub torsion: Multivector,
    pub bundle: Bundle,
}

/// `ρᵗ = θ∧ρ₁ + ρ₀`, `Tᵗ = -θ∧𝓕 + 𝒯` on the frame with `dθ = 𝓕ᵗ`.
pub fn tdualize(frame: &LieAlgebraFrame, theta: usize, rho: &Multivector, torsion: &Multivector) -> Result<TDual, GenError> {
    let bundle = bundle_data(frame, theta, torsion)?;
    let n = frame.dim();
    let diffs: Vec<(usize, Multivector)> =
        (1..=n).map(|k| (k, if k == theta { bundle.ft.clone() } else { frame.d_coframe(k) })).filter(|(_, d)| !d.is_zero()).collect();
    let dual = LieAlgebraFrame::from_differentials(n, &diffs)?;
    if let Some((i, j, k)) = dual.jacobi_violation() {
        return Err(GenError::Lie(LieError::Jacobi(i, j, k)));
    }
    let theta_form = Multivector::basis(frame.space(), &[theta]);
    let torsion_t = &(-&theta_form.wedge(&bundle.f)) + &bundle.cal_t;
    let dual_bundle = Bundle { theta, f: bundle.ft.clone(), ft: bundle.f.clone(), cal_t: bundle.cal_t.clone() };
    Ok(TDual { frame: dual, rho: swap_fibre(theta, rho), torsion: torsion_t, bundle: dual_bundle })
}
