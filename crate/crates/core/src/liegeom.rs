//! Left-invariant geometry on metric Lie algebras in an orthonormal frame.
//!
//! The coframe differential follows `de_k = Σ_{i<j} c_ijk e_ij` for the
//! bracket `[e_i, e_j] = Σ_k c_ijk e_k`, the negative of the usual
//! Chevalley–Eilenberg sign.

use std::fmt;

use thiserror::Error;

use crate::exterior::{Blade, Multivector, Space, SpaceDescriptor};
use crate::linalg::Matrix;
use crate::scalars::Scalar;
use crate::spinreps::{MatrixRep, Spinor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("index {0} outside 1..={1}")]
    Index(usize, usize),
    #[error("differential of e{0} is not a 2-form")]
    NotTwoForm(usize),
    #[error("Jacobi identity fails for (e{0}, e{1}, e{2})")]
    Jacobi(usize, usize, usize),
    #[error("dimension mismatch: frame has {0}, input has {1}")]
    Dimension(usize, usize),
    #[error("intrinsic torsion has a Λ²₁₄ component; no connection with skew torsion")]
    NotIntegrable,
    #[error("{0}")]
    Other(String),
}

/// Structure constants `c_ijk` of a Lie algebra in an orthonormal frame.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebraFrame {
    n: usize,
    c: Vec<Scalar>,
    space: Space,
}

impl LieAlgebraFrame {
    pub fn abelian(n: usize) -> Self {
        LieAlgebraFrame { n, c: vec![Scalar::zero(); n * n * n], space: SpaceDescriptor::euclidean(n) }
    }

    /// Frame from `[e_i, e_j] = Σ c e_k` entries; the `(j, i)` entry is set to the negative.
    pub fn from_brackets(n: usize, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self, LieError> {
        let mut f = Self::abelian(n);
        for (i, j, k, v) in entries {
            for &x in [i, j, k] {
                if x == 0 || x > n {
                    return Err(LieError::Index(x, n));
                }
            }
            let cur = f.c(*i, *j, *k).clone();
            f.set(*i, *j, *k, &cur + v);
            f.set(*j, *i, *k, -(&cur + v));
        }
        Ok(f)
    }

    /// Frame from coframe differentials `de_k`, with `de_k(e_i, e_j) = c_ij^k`.
    pub fn from_differentials(n: usize, diffs: &[(usize, Multivector)]) -> Result<Self, LieError> {
        let mut entries = Vec::new();
        for (k, dk) in diffs {
            if *k == 0 || *k > n {
                return Err(LieError::Index(*k, n));
            }
            if dk.dim() != n {
                return Err(LieError::Dimension(n, dk.dim()));
            }
            if !dk.is_homogeneous_of(2) {
                return Err(LieError::NotTwoForm(*k));
            }
            for (b, v) in dk.terms() {
                let idx = b.indices();
                entries.push((idx[0], idx[1], *k, v.clone()));
            }
        }
        Self::from_brackets(n, &entries)
    }

    /// Frame whose structure constants are the coefficients of a 3-form.
    pub fn from_three_form(rho: &Multivector) -> Result<Self, LieError> {
        let n = rho.dim();
        if !rho.is_homogeneous_of(3) {
            return Err(LieError::Other("structure form must be a 3-form".into()));
        }
        let mut f = Self::abelian(n);
        for (b, v) in rho.terms() {
            let idx = b.indices();
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            for (p, s) in [((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1), ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)] {
                f.set(p.0, p.1, p.2, if s > 0 { v.clone() } else { -v });
            }
        }
        Ok(f)
    }

    /// `su(2)` with `c_ijk = ε_ijk`.
    pub fn su2() -> Self {
        let s = SpaceDescriptor::euclidean(3);
        Self::from_three_form(&Multivector::basis(&s, &[1, 2, 3])).expect("3-form")
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.n + (j - 1)) * self.n + (k - 1)
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.c[self.at(i, j, k)]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.at(i, j, k);
        self.c[a] = v;
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Scalar::is_zero)
    }

    /// `c_ijk` totally antisymmetric, i.e. the metric is ad-invariant.
    pub fn is_ad_invariant(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| (1..=n).all(|k| self.c(i, j, k) == &-self.c(i, k, j))))
    }

    /// Components of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        (1..=self.n).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// First triple violating Jacobi, if any.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    for m in 1..=n {
                        let mut acc = Scalar::zero();
                        for l in 1..=n {
                            for (a, b, cc) in [(i, j, k), (j, k, i), (k, i, j)] {
                                let x = self.c(a, b, l);
                                if !x.is_zero() {
                                    acc += &(x * self.c(l, cc, m));
                                }
                            }
                        }
                        if !acc.is_zero() {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    /// Killing form `B(e_i, e_j) = Tr(ad_{e_i} ∘ ad_{e_j})`.
    pub fn killing(&self) -> Matrix {
        let n = self.n;
        Matrix::from_fn(n, n, |i, j| {
            let mut acc = Scalar::zero();
            for m in 1..=n {
                for l in 1..=n {
                    let a = self.c(j + 1, m, l);
                    if !a.is_zero() {
                        acc += &(a * self.c(i + 1, l, m));
                    }
                }
            }
            acc
        })
    }

    /// `ad_{e_i}` as a matrix acting on column vectors.
    pub fn ad(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.n, self.n, |l, k| self.c(i, k + 1, l + 1).clone())
    }

    /// Dimension of the center.
    pub fn center_dim(&self) -> usize {
        let n = self.n;
        let rows: Vec<Vec<Scalar>> =
            (1..=n).flat_map(|j| (1..=n).map(move |k| (j, k))).map(|(j, k)| (1..=n).map(|i| self.c(i, j, k).clone()).collect()).collect();
        n - Matrix::from_rows(rows).rank()
    }

    /// `de_k = Σ_{i<j} c_ijk e_ij`.
    pub fn d_coframe(&self, k: usize) -> Multivector {
        let mut out = Multivector::zero(&self.space);
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                let v = self.c(i, j, k);
                if !v.is_zero() {
                    out.add_term(Blade::from_indices(&[i, j]).expect("distinct").1, v.clone());
                }
            }
        }
        out
    }

    /// Exterior derivative of a left-invariant form (derivation extension).
    pub fn d(&self, x: &Multivector) -> Multivector {
        assert_eq!(x.dim(), self.n, "form dimension does not match the frame");
        let de: Vec<Multivector> = (1..=self.n).map(|k| self.d_coframe(k)).collect();
        let mut out = Multivector::zero(&self.space);
        for (b, v) in x.terms() {
            let idx = b.indices();
            for (r, &k) in idx.iter().enumerate() {
                if de[k - 1].is_zero() {
                    continue;
                }
                let before = Multivector::basis(&self.space, &idx[..r]);
                let after = Multivector::basis(&self.space, &idx[r + 1..]);
                let term = before.wedge(&de[k - 1]).wedge(&after);
                let s = if r % 2 == 0 { v.clone() } else { -v };
                out.add_scaled(&term, &s);
            }
        }
        out
    }

    /// Codifferential `d* = (-1)^{n(p+1)+1} ⋆d⋆` on `p`-forms.
    pub fn codifferential(&self, x: &Multivector) -> Multivector {
        let mut out = Multivector::zero(&self.space);
        for p in 0..=self.n {
            let xp = x.grade(p);
            if xp.is_zero() {
                continue;
            }
            let y = self.d(&xp.star()).star();
            let sign = if (self.n * (p + 1) + 1).is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
            out.add_scaled(&y, &sign);
        }
        out
    }

    /// Lines `d e<k> = …` for every nonzero differential.
    pub fn differential_lines(&self) -> Vec<String> {
        (1..=self.n)
            .filter_map(|k| {
                let dk = self.d_coframe(k);
                (!dk.is_zero()).then(|| format!("d e{k} = {dk}"))
            })
            .collect()
    }

    /// Product frame `self ⊕ ℝ^extra` with the new directions abelian and last.
    pub fn extend_flat(&self, extra: usize) -> LieAlgebraFrame {
        let m = self.n + extra;
        let mut f = Self::abelian(m);
        for i in 1..=self.n {
            for j in 1..=self.n {
                for k in 1..=self.n {
                    let v = self.c(i, j, k);
                    if !v.is_zero() {
                        f.set(i, j, k, v.clone());
                    }
                }
            }
        }
        f
    }
}

impl fmt::Debug for LieAlgebraFrame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebraFrame(n={}; {})", self.n, self.differential_lines().join("; "))
    }
}

/// Result of [`validate_lie`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieValidation {
    pub jacobi_ok: bool,
    pub killing: Matrix,
}

pub fn validate_lie(frame: &LieAlgebraFrame) -> LieValidation {
    LieValidation { jacobi_ok: frame.jacobi_violation().is_none(), killing: frame.killing() }
}

/// `Γ(i,j,k) = g(∇_{e_i} e_j, e_k)`.
#[derive(Clone, PartialEq, Eq)]
pub struct ConnectionCoeffs {
    n: usize,
    g: Vec<Scalar>,
}

impl fmt::Debug for ConnectionCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConnectionCoeffs(n={}", self.n)?;
        for i in 1..=self.n {
            for j in 1..=self.n {
                for k in 1..=self.n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        write!(f, ", G{i}{j}{k}={v}")?;
                    }
                }
            }
        }
        write!(f, ")")
    }
}

impl ConnectionCoeffs {
    pub fn zero(n: usize) -> Self {
        ConnectionCoeffs { n, g: vec![Scalar::zero(); n * n * n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn at(&self, i: usize, j: usize, k: usize) -> usize {
        ((i - 1) * self.n + (j - 1)) * self.n + (k - 1)
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.g[self.at(i, j, k)]
    }

    fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let a = self.at(i, j, k);
        self.g[a] = v;
    }

    /// `Γ(i,j,k) + Γ(i,k,j) = 0` for all indices.
    pub fn is_metric(&self) -> bool {
        let n = self.n;
        (1..=n).all(|i| (1..=n).all(|j| (1..=n).all(|k| (self.get(i, j, k) + self.get(i, k, j)).is_zero())))
    }

    /// `∇_{e_i} e_j` as a 1-form.
    pub fn nabla_vector(&self, space: &Space, i: usize, j: usize) -> Multivector {
        let mut out = Multivector::zero(space);
        for k in 1..=self.n {
            out.add_term(Blade::single(k), self.get(i, j, k).clone());
        }
        out
    }

    /// Torsion `T(e_i, e_j) = ∇_i e_j − ∇_j e_i − [e_i, e_j]` as component `k`.
    pub fn torsion(&self, frame: &LieAlgebraFrame, i: usize, j: usize, k: usize) -> Scalar {
        &(self.get(i, j, k) - self.get(j, i, k)) - frame.c(i, j, k)
    }

    /// Torsion as a 3-form if it is totally skew, else `None`.
    pub fn torsion_form(&self, frame: &LieAlgebraFrame) -> Option<Multivector> {
        let n = self.n;
        let mut out = Multivector::zero(frame.space());
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    let t = self.torsion(frame, i, j, k);
                    if t != -self.torsion(frame, i, k, j) {
                        return None;
                    }
                    if i < j && j < k {
                        out.add_term(Blade::from_indices(&[i, j, k]).expect("distinct").1, t);
                    }
                }
            }
        }
        Some(out)
    }
}

/// Levi-Civita connection, `Γ(i,j,k) = (c_ijk + c_kij + c_kji)/2`.
pub fn levi_civita(frame: &LieAlgebraFrame) -> ConnectionCoeffs {
    let n = frame.dim();
    let mut g = ConnectionCoeffs::zero(n);
    let half = Scalar::from_ratio(1, 2);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let v = &(&(frame.c(i, j, k) + frame.c(k, i, j)) + frame.c(k, j, i)) * &half;
                g.set(i, j, k, v);
            }
        }
    }
    g
}

/// `∇^± = ∇ ± ½T(X, Y, ·)`.
pub fn skew_conn(frame: &LieAlgebraFrame, torsion: &Multivector, sign: i32) -> Result<ConnectionCoeffs, LieError> {
    if torsion.dim() != frame.dim() {
        return Err(LieError::Dimension(frame.dim(), torsion.dim()));
    }
    if !torsion.is_homogeneous_of(3) {
        return Err(LieError::Other("torsion must be a 3-form".into()));
    }
    let mut g = levi_civita(frame);
    let n = frame.dim();
    let h = Scalar::from_ratio(sign.signum() as i64, 2);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let t = torsion.coeff_of(&[i, j, k]);
                if !t.is_zero() {
                    let v = g.get(i, j, k) + &(&t * &h);
                    g.set(i, j, k, v);
                }
            }
        }
    }
    Ok(g)
}

/// Curvature data of a frame connection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureData {
    pub ricci: Matrix,
    pub scal: Scalar,
    riemann: Vec<Scalar>,
    n: usize,
}

impl CurvatureData {
    /// `⟨R(e_i, e_j) e_k, e_l⟩`.
    pub fn riemann(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        let n = self.n;
        &self.riemann[(((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1)]
    }

    pub fn ricci_symmetric(&self) -> Matrix {
        let t = self.ricci.transpose();
        (&self.ricci + &t).scale(&Scalar::from_ratio(1, 2))
    }

    pub fn ricci_antisymmetric(&self) -> Matrix {
        let t = self.ricci.transpose();
        (&self.ricci - &t).scale(&Scalar::from_ratio(1, 2))
    }
}

/// `R(X,Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]}Z`, `Ric(Y,Z) = Σ_i ⟨R(e_i,Y)Z, e_i⟩`.
pub fn curvature_ricci(frame: &LieAlgebraFrame, conn: &ConnectionCoeffs) -> CurvatureData {
    let n = frame.dim();
    let mut riemann = vec![Scalar::zero(); n * n * n * n];
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for m in 1..=n {
                    let mut acc = Scalar::zero();
                    for l in 1..=n {
                        let a = conn.get(j, k, l);
                        if !a.is_zero() {
                            acc += &(a * conn.get(i, l, m));
                        }
                        let b = conn.get(i, k, l);
                        if !b.is_zero() {
                            acc -= &(b * conn.get(j, l, m));
                        }
                        let c = frame.c(i, j, l);
                        if !c.is_zero() {
                            acc -= &(c * conn.get(l, k, m));
                        }
                    }
                    riemann[(((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (m - 1)] = acc;
                }
            }
        }
    }
    let data = CurvatureData { ricci: Matrix::zeros(n, n), scal: Scalar::zero(), riemann, n };
    let ricci = Matrix::from_fn(n, n, |y, z| {
        let mut acc = Scalar::zero();
        for i in 1..=n {
            acc += data.riemann(i, y + 1, z + 1, i);
        }
        acc
    });
    let scal = (0..n).fold(Scalar::zero(), |acc, i| &acc + ricci.get(i, i));
    CurvatureData { ricci, scal, ..data }
}

/// Ricci data of `∇^±`.
pub fn skew_ricci(frame: &LieAlgebraFrame, torsion: &Multivector, sign: i32) -> Result<CurvatureData, LieError> {
    Ok(curvature_ricci(frame, &skew_conn(frame, torsion, sign)?))
}

/// `∇_{e_i} x` for `i = 1..=n`.
pub fn nabla_form(frame: &LieAlgebraFrame, conn: &ConnectionCoeffs, x: &Multivector) -> Vec<Multivector> {
    let n = frame.dim();
    let space = frame.space();
    (1..=n)
        .map(|i| {
            let mut out = Multivector::zero(space);
            for (b, v) in x.terms() {
                let idx = b.indices();
                for (r, &j) in idx.iter().enumerate() {
                    for k in 1..=n {
                        // coframe: ∇_i e^j = -Σ_k Γ(i,k,j) e^k
                        let g = conn.get(i, k, j);
                        if g.is_zero() {
                            continue;
                        }
                        let mut rep = idx.clone();
                        rep[r] = k;
                        if let Some((s, nb)) = Blade::from_indices(&rep) {
                            let c = v * g;
                            out.add_term(nb, if s > 0 { -c } else { c });
                        }
                    }
                }
            }
            out
        })
        .collect()
}

/// Spinor lift `∇_{e_i}ψ = ½ Σ_{j<k} Γ(i,j,k) γ_j γ_k ψ` for constant components.
pub fn nabla_spinor(frame: &LieAlgebraFrame, conn: &ConnectionCoeffs, psi: &Spinor, rep: &MatrixRep) -> Vec<Spinor> {
    let n = frame.dim();
    assert_eq!(rep.n, n, "rep dimension does not match the frame");
    (1..=n).map(|i| rep.act(&connection_two_form(frame, conn, i), psi)).collect()
}

/// `½ Σ_{j<k} Γ(i,j,k) e_jk`, whose Clifford action is the spin lift of `∇_{e_i}`.
pub fn connection_two_form(frame: &LieAlgebraFrame, conn: &ConnectionCoeffs, i: usize) -> Multivector {
    let n = frame.dim();
    let half = Scalar::from_ratio(1, 2);
    let mut w = Multivector::zero(frame.space());
    for j in 1..=n {
        for k in j + 1..=n {
            let g = conn.get(i, j, k);
            if !g.is_zero() {
                w.add_term(Blade::from_indices(&[j, k]).expect("distinct").1, g * &half);
            }
        }
    }
    w
}

/// Solves `f(x) = target` for a 1-form `x`, if possible.
fn solve_one_form(space: &Space, target: &Multivector, f: impl Fn(&Multivector) -> Multivector) -> Option<Multivector> {
    let n = space.dim;
    let images: Vec<Multivector> = (1..=n).map(|i| f(&Multivector::basis(space, &[i]))).collect();
    let mut blades: Vec<Blade> = images.iter().flat_map(|m| m.terms().map(|(b, _)| *b)).collect();
    blades.extend(target.terms().map(|(b, _)| *b));
    blades.sort();
    blades.dedup();
    let a = Matrix::from_fn(blades.len(), n, |r, c| images[c].coeff(blades[r]));
    let rhs: Vec<Scalar> = blades.iter().map(|b| target.coeff(*b)).collect();
    let x = a.solve(&rhs)?;
    let mut out = Multivector::zero(space);
    for (i, v) in x.into_iter().enumerate() {
        out.add_term(Blade::single(i + 1), v);
    }
    Some(out)
}

/// Intrinsic torsion of a G₂-structure:
/// `dφ = -λ⋆φ + ¾θ∧φ + ⋆τ`, `d⋆φ = θ∧⋆φ + ξ∧φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionClasses {
    pub lambda: Scalar,
    pub theta: Multivector,
    pub xi: Multivector,
    pub tau: Multivector,
}

impl TorsionClasses {
    /// `(-λ⋆φ + ¾θ∧φ + ⋆τ, θ∧⋆φ + ξ∧φ)`.
    pub fn reassemble(&self, phi: &Multivector) -> (Multivector, Multivector) {
        let sphi = phi.star();
        let mut dphi = sphi.scale(&-&self.lambda);
        dphi.add_scaled(&self.theta.wedge(phi), &Scalar::from_ratio(3, 4));
        dphi = &dphi + &self.tau.star();
        let dsphi = &self.theta.wedge(&sphi) + &self.xi.wedge(phi);
        (dphi, dsphi)
    }

    /// Torsion of the G₂-connection with skew torsion,
    /// `-⋆dφ - (7/6)λφ + ⋆(θ∧φ) = -⅙λφ + ¼⋆(θ∧φ) - τ`.
    pub fn connection_torsion(&self, phi: &Multivector) -> Result<Multivector, LieError> {
        if !self.xi.is_zero() {
            return Err(LieError::NotIntegrable);
        }
        let mut tor = phi.scale(&(&self.lambda * &Scalar::from_ratio(-1, 6)));
        tor.add_scaled(&self.theta.wedge(phi).star(), &Scalar::from_ratio(1, 4));
        Ok(&tor - &self.tau)
    }
}

/// Torsion classes from the exterior derivatives `dφ`, `d⋆φ` of a G₂ 3-form.
pub fn g2_torsion_from_differentials(phi: &Multivector, dphi: &Multivector, dsphi: &Multivector) -> Result<TorsionClasses, LieError> {
    if phi.dim() != 7 || !phi.is_homogeneous_of(3) {
        return Err(LieError::Other("G2 torsion classes need a 3-form in dimension 7".into()));
    }
    let space = phi.space().clone();
    let sphi = phi.star();
    let lambda = &dphi.wedge(phi).top_coefficient() * &Scalar::from_ratio(-1, 7);
    // ⋆d⋆φ = ⋆(θ∧⋆φ) - εξ with ⋆(θ∧⋆φ) ∈ Λ²₇, ξ ∈ Λ²₁₄, ε the orientation of φ
    let eps = Scalar::from_int(crate::gstructures::g2_orientation(phi));
    let (seven, _) = crate::gstructures::g2_two_form_split(&dsphi.star(), phi);
    let theta =
        solve_one_form(&space, &seven, |x| x.wedge(&sphi).star()).ok_or_else(|| LieError::Other("d⋆φ has no Λ⁵₇ component matching θ∧⋆φ".into()))?;
    let xi = (&dsphi.star() - &theta.wedge(&sphi).star()).scale(&-&eps);
    let mut rest = dphi + &sphi.scale(&lambda);
    rest.add_scaled(&theta.wedge(phi), &Scalar::from_ratio(-3, 4));
    let tau = rest.star();
    let tc = TorsionClasses { lambda, theta, xi, tau };
    if tc.reassemble(phi) != (dphi.clone(), dsphi.clone()) {
        return Err(LieError::Other("differentials are not those of a G2 3-form".into()));
    }
    Ok(tc)
}

pub fn g2_torsion_classes(frame: &LieAlgebraFrame, phi: &Multivector) -> Result<TorsionClasses, LieError> {
    if phi.dim() != frame.dim() {
        return Err(LieError::Dimension(frame.dim(), phi.dim()));
    }
    g2_torsion_from_differentials(phi, &frame.d(phi), &frame.d(&phi.star()))
}

pub fn g2_conn_torsion(frame: &LieAlgebraFrame, phi: &Multivector) -> Result<Multivector, LieError> {
    g2_torsion_classes(frame, phi)?.connection_torsion(phi)
}

/// Lee form `θ = ⅐⋆(d*Ω∧Ω)` and torsion `-d*Ω - (7/6)⋆(θ∧Ω)` of a Spin(7)-structure.
pub fn spin7_lee_torsion(frame: &LieAlgebraFrame, omega: &Multivector) -> Result<(Multivector, Multivector), LieError> {
    if frame.dim() != 8 || omega.dim() != 8 || !omega.is_homogeneous_of(4) {
        return Err(LieError::Other("Spin(7) torsion needs a 4-form in dimension 8".into()));
    }
    let dstar = frame.codifferential(omega);
    let theta = dstar.wedge(omega).star().scale(&Scalar::from_ratio(1, 7));
    let mut tor = -&dstar;
    tor.add_scaled(&theta.wedge(omega).star(), &Scalar::from_ratio(-7, 6));
    Ok((theta, tor))
}

/// Parity of a generalized structure form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Spinor-side data for [`killing_dilaton_check`]; `df` is the constant 1-form `dF`.
#[derive(Debug, Clone)]
pub struct SpinorData<'a> {
    pub psi_plus: &'a Spinor,
    pub psi_minus: &'a Spinor,
    pub torsion: &'a Multivector,
    pub df: Option<&'a Multivector>,
    pub lambda: Scalar,
    pub parity: Parity,
}

/// One nonzero residual of the Killing or dilaton equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub equation: String,
    pub value: Spinor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KillingReport {
    pub killing: Vec<Residual>,
    pub dilaton: Vec<Residual>,
}

impl KillingReport {
    pub fn ok(&self) -> bool {
        self.killing.is_empty() && self.dilaton.is_empty()
    }
}

/// Evaluates `∇_XΨ± ± ¼(X⌟T)·Ψ±` and the dilaton equation for both spinors.
///
/// Dimension 7 uses the G₂ dilaton equations (`±λ` even, `+λ` odd),
/// dimension 8 the Spin(7) one without `λ`.
pub fn killing_dilaton_check(frame: &LieAlgebraFrame, data: &SpinorData<'_>) -> Result<KillingReport, LieError> {
    let n = frame.dim();
    if n != 7 && n != 8 {
        return Err(LieError::Other(format!("spinor equations need dimension 7 or 8, got {n}")));
    }
    if data.torsion.dim() != n {
        return Err(LieError::Dimension(n, data.torsion.dim()));
    }
    let rep = MatrixRep::get(n);
    let space = frame.space();
    let t = data.torsion.embed(space, &(1..=n).collect::<Vec<_>>());
    let lc = levi_civita(frame);
    let mut report = KillingReport { killing: Vec::new(), dilaton: Vec::new() };
    for (sign, name, psi) in [(1i64, "+", data.psi_plus), (-1, "-", data.psi_minus)] {
        let quarter = Scalar::from_ratio(sign, 4);
        for i in 1..=n {
            let mut w = connection_two_form(frame, &lc, i);
            w.add_scaled(&t.contract_index(i), &quarter);
            let r = rep.act(&w, psi);
            if !r.is_zero() {
                report.killing.push(Residual { equation: format!("killing{name} e{i}"), value: r });
            }
        }
        let mut op = t.scale(&Scalar::from_ratio(sign, 2));
        if let Some(df) = data.df {
            op = &op + &df.embed(space, &(1..=n).collect::<Vec<_>>());
        }
        if n == 7 {
            let l = match data.parity {
                Parity::Even => &data.lambda * &Scalar::from_int(sign),
                Parity::Odd => data.lambda.clone(),
            };
            op.add_term(Blade::SCALAR, l);
        }
        let r = rep.act(&op, psi);
        if !r.is_zero() {
            report.dilaton.push(Residual { equation: format!("dilaton{name}"), value: r });
        }
    }
    Ok(report)
}

/// Twisted Dirac operator on a constant spinor-valued 1-form `Σ e_j ⊗ γ_j`:
/// `𝒟γ = Σ_k e_k ⊗ (Σ_{i,j} Γ(i,j,k) e_i·γ_j + Σ_i e_i·∇_{e_i}γ_k)`.
pub fn twisted_dirac(frame: &LieAlgebraFrame, gamma: &[Spinor], rep: &MatrixRep) -> Vec<Spinor> {
    let n = frame.dim();
    assert_eq!(gamma.len(), n, "one spinor per frame vector");
    let lc = levi_civita(frame);
    let len = rep.spinor_len();
    (1..=n)
        .map(|k| {
            let mut acc = Spinor::zero(len);
            for i in 1..=n {
                for j in 1..=n {
                    let g = lc.get(i, j, k);
                    if !g.is_zero() {
                        acc = &acc + &rep.act_vector(i, &gamma[j - 1]).scale(g);
                    }
                }
                let w = connection_two_form(frame, &lc, i);
                if !w.is_zero() {
                    acc = &acc + &rep.act_vector(i, &rep.act(&w, &gamma[k - 1]));
                }
            }
            acc
        })
        .collect()
}
