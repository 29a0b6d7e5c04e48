//! Octonions, explicit real spin representations of `Cliff(7)` and `Cliff(8)`,
//! the spinor pairing, the fierzing map `L_b` and the box operator.
//!
//! For `n = 8` space index `i` stands for the octonion unit `e_{i-1}`, so the
//! frame `e_0, …, e_7` is stored as `1..=8`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::OnceLock;

use crate::exterior::{exp_wedge, Blade, FormError, Multivector, Space, SpaceDescriptor};
use crate::linalg::{dot, Matrix};
use crate::scalars::Scalar;

/// Sparse `±1` permutation matrix: column `j` maps to `sign[j]·e_{to[j]}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPerm {
    to: Vec<usize>,
    sign: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm { to: (0..n).collect(), sign: vec![1; n] }
    }

    /// Reads a signed permutation matrix; `None` if the matrix is not one.
    pub fn from_matrix(m: &Matrix) -> Option<Self> {
        let n = m.rows();
        let mut to = vec![0; n];
        let mut sign = vec![0i8; n];
        for j in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&i| !m.get(i, j).is_zero()).collect();
            if nz.len() != 1 {
                return None;
            }
            let v = m.get(nz[0], j);
            sign[j] = if v.is_one() {
                1
            } else if (-v).is_one() {
                -1
            } else {
                return None;
            };
            to[j] = nz[0];
        }
        Some(SignedPerm { to, sign })
    }

    pub fn len(&self) -> usize {
        self.to.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to.is_empty()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let to = other.to.iter().map(|&k| self.to[k]).collect();
        let sign = other.to.iter().zip(&other.sign).map(|(&k, &s)| s * self.sign[k]).collect();
        SignedPerm { to, sign }
    }

    pub fn negate(&self) -> SignedPerm {
        SignedPerm { to: self.to.clone(), sign: self.sign.iter().map(|s| -s).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); v.len()];
        for (j, x) in v.iter().enumerate() {
            out[self.to[j]] = if self.sign[j] > 0 { x.clone() } else { -x };
        }
        out
    }

    pub fn to_matrix(&self) -> Matrix {
        let n = self.len();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            m.set(self.to[j], j, Scalar::from_int(self.sign[j] as i64));
        }
        m
    }

    pub fn trace(&self) -> i64 {
        (0..self.len()).filter(|&j| self.to[j] == j).map(|j| self.sign[j] as i64).sum()
    }
}

/// `E_{ij}` of the skew basis: `-1` at `(i,j)`, `+1` at `(j,i)` (1-based).
pub fn skew_unit(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    m.set(i - 1, j - 1, Scalar::from_int(-1));
    m.set(j - 1, i - 1, Scalar::one());
    m
}

fn skew_sum(n: usize, terms: &[(i64, usize, usize)]) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for &(s, i, j) in terms {
        m = &m + &skew_unit(n, i, j).scale(&Scalar::from_int(s));
    }
    m
}

const REP7: [[(i64, usize, usize); 4]; 7] = [
    [(1, 1, 2), (-1, 3, 4), (-1, 5, 6), (1, 7, 8)],
    [(1, 1, 3), (1, 2, 4), (-1, 5, 7), (-1, 6, 8)],
    [(1, 1, 4), (-1, 2, 3), (-1, 5, 8), (1, 6, 7)],
    [(1, 1, 5), (1, 2, 6), (1, 3, 7), (1, 4, 8)],
    [(1, 1, 6), (-1, 2, 5), (1, 3, 8), (-1, 4, 7)],
    [(1, 1, 7), (-1, 2, 8), (-1, 3, 5), (1, 4, 6)],
    [(1, 1, 8), (1, 2, 7), (-1, 3, 6), (-1, 4, 5)],
];

const REP8: [[(i64, usize, usize); 8]; 8] = [
    [(-1, 1, 9), (-1, 2, 10), (-1, 3, 11), (-1, 4, 12), (-1, 5, 13), (-1, 6, 14), (-1, 7, 15), (-1, 8, 16)],
    [(1, 1, 10), (-1, 2, 9), (-1, 3, 12), (1, 4, 11), (-1, 5, 14), (1, 6, 13), (1, 7, 16), (-1, 8, 15)],
    [(1, 1, 11), (1, 2, 12), (-1, 3, 9), (-1, 4, 10), (-1, 5, 15), (-1, 6, 16), (1, 7, 13), (1, 8, 14)],
    [(1, 1, 12), (-1, 2, 11), (1, 3, 10), (-1, 4, 9), (-1, 5, 16), (1, 6, 15), (-1, 7, 14), (1, 8, 13)],
    [(1, 1, 13), (1, 2, 14), (1, 3, 15), (1, 4, 16), (-1, 5, 9), (-1, 6, 10), (-1, 7, 11), (-1, 8, 12)],
    [(1, 1, 14), (-1, 2, 13), (1, 3, 16), (-1, 4, 15), (1, 5, 10), (-1, 6, 9), (1, 7, 12), (-1, 8, 11)],
    [(1, 1, 15), (-1, 2, 16), (-1, 3, 13), (1, 4, 14), (1, 5, 11), (-1, 6, 12), (-1, 7, 9), (1, 8, 10)],
    [(1, 1, 16), (1, 2, 15), (-1, 3, 14), (-1, 4, 13), (1, 5, 12), (1, 6, 11), (-1, 7, 10), (-1, 8, 9)],
];

/// Octonion multiplication table: `e_a·e_b = sign·e_index`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OctonionTable {
    pub mult: [[(i8, usize); 8]; 8],
}

impl OctonionTable {
    /// Table read off the right multiplications `R_{e_k}` of the `n = 7` rep.
    pub fn standard() -> &'static OctonionTable {
        static TABLE: OnceLock<OctonionTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let mut mult = [[(1i8, 0usize); 8]; 8];
            for (a, row) in mult.iter_mut().enumerate() {
                row[0] = (1, a);
            }
            for k in 1..8 {
                let r = SignedPerm::from_matrix(&skew_sum(8, &REP7[k - 1])).expect("octonion rep is monomial");
                for (a, row) in mult.iter_mut().enumerate() {
                    row[k] = (r.sign[a], r.to[a]);
                }
            }
            OctonionTable { mult }
        })
    }
}

/// Product of octonions given in the basis `e_0 ≡ 1, e_1 ≡ i, …, e_7 ≡ e·k`.
pub fn octonion_mul(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert!(x.len() == 8 && y.len() == 8, "octonions have 8 components");
    let t = OctonionTable::standard();
    let mut out = vec![Scalar::zero(); 8];
    for (a, xa) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (b, yb) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let (s, k) = t.mult[a][b];
            let p = xa * yb;
            out[k] += &(if s > 0 { p } else { -p });
        }
    }
    out
}

pub fn octonion_conj(x: &[Scalar]) -> Vec<Scalar> {
    x.iter().enumerate().map(|(i, v)| if i == 0 { v.clone() } else { -v }).collect()
}

/// `π₀*(e_i·e_j) = 2e_i∧e_j` on `ℝ⁸ ≅ 𝕆`: `e_i ↦ 2e_j`, `e_j ↦ -2e_i`.
pub fn vector_action(i: usize, j: usize) -> Matrix {
    let mut m = Matrix::zeros(8, 8);
    m.set(j - 1, i - 1, Scalar::from_int(2));
    m.set(i - 1, j - 1, Scalar::from_int(-2));
    m
}

/// Infinitesimal triality for the generator `e_i·e_j` of the `n = 8` rep:
/// `π₋(A)(x·w) = (π₊(A)x)·w + x·(π₀(A)w̄)‾` on all pairs of basis octonions,
/// `π±` being the blocks of `e_i·e_j` on `Δ±`. The conjugated slot reflects
/// `γ(v)(x₊, x₋) = (x₋·v, -x₊·v̄)`.
pub fn triality_holds(i: usize, j: usize) -> bool {
    let rep = MatrixRep::get(8);
    let m = rep.matrix_of(&Multivector::basis(rep.space(), &[i, j]));
    let (plus, minus) = (m.block(0, 0, 8, 8), m.block(8, 8, 8, 8));
    let p0 = vector_action(i, j);
    let unit = |k: usize| Spinor::basis(8, k).0;
    (0..8).all(|x| {
        (0..8).all(|w| {
            let lhs = minus.apply(&octonion_mul(&unit(x), &unit(w)));
            let a = octonion_mul(&plus.apply(&unit(x)), &unit(w));
            let b = octonion_mul(&unit(x), &octonion_conj(&p0.apply(&octonion_conj(&unit(w)))));
            lhs.iter().zip(a.iter().zip(&b)).all(|(l, (u, v))| l == &(u + v))
        })
    })
}

/// Real spinor, a column vector for an explicit [`MatrixRep`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Spinor(pub Vec<Scalar>);

impl Spinor {
    pub fn zero(len: usize) -> Self {
        Spinor(vec![Scalar::zero(); len])
    }

    /// Standard basis spinor `ψ_k` (0-based, `ψ_0 ≡ 1 ∈ 𝕆`).
    pub fn basis(len: usize, k: usize) -> Self {
        let mut s = Self::zero(len);
        s.0[k] = Scalar::one();
        s
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Spinor(v.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Spinor {
        Spinor(self.0.iter().map(|x| x * c).collect())
    }

    pub fn norm_sq(&self) -> Scalar {
        dot(&self.0, &self.0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.0.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        assert_eq!(self.len(), rhs.len(), "spinor length mismatch");
        Spinor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        assert_eq!(self.len(), rhs.len(), "spinor length mismatch");
        Spinor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor(self.0.iter().map(|x| -x).collect())
    }
}

/// Explicit representation of `Cliff(ℝⁿ)` for `n ∈ {7, 8}` by signed
/// permutation matrices.
#[derive(Debug)]
pub struct MatrixRep {
    pub n: usize,
    gammas: Vec<SignedPerm>,
    space: Space,
    blades: Vec<OnceLock<SignedPerm>>,
}

impl MatrixRep {
    /// Shared instance of the rep for `n = 7` or `n = 8`.
    pub fn get(n: usize) -> &'static MatrixRep {
        static R7: OnceLock<MatrixRep> = OnceLock::new();
        static R8: OnceLock<MatrixRep> = OnceLock::new();
        match n {
            7 => R7.get_or_init(|| Self::build(7)),
            8 => R8.get_or_init(|| Self::build(8)),
            _ => panic!("explicit spin representations exist for n = 7, 8 only"),
        }
    }

    pub fn build(n: usize) -> MatrixRep {
        let mats: Vec<Matrix> = match n {
            7 => REP7.iter().map(|t| skew_sum(8, t)).collect(),
            8 => REP8.iter().map(|t| skew_sum(16, t)).collect(),
            _ => panic!("explicit spin representations exist for n = 7, 8 only"),
        };
        let gammas = mats.iter().map(|m| SignedPerm::from_matrix(m).expect("generators are monomial")).collect();
        MatrixRep { n, gammas, space: SpaceDescriptor::euclidean(n), blades: (0..1usize << n).map(|_| OnceLock::new()).collect() }
    }

    pub fn spinor_len(&self) -> usize {
        self.gammas[0].len()
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// `γ_i` as a dense matrix (1-based space index).
    pub fn gamma(&self, i: usize) -> Matrix {
        self.gammas[i - 1].to_matrix()
    }

    pub fn gammas(&self) -> Vec<Matrix> {
        (1..=self.n).map(|i| self.gamma(i)).collect()
    }

    /// `R(e_I) = γ_{i1}⋯γ_{ik}` for an ascending blade.
    pub fn blade_perm(&self, b: Blade) -> &SignedPerm {
        self.blades[b.0 as usize].get_or_init(|| {
            let mut acc = SignedPerm::identity(self.spinor_len());
            for i in b.indices() {
                acc = acc.compose(&self.gammas[i - 1]);
            }
            acc
        })
    }

    /// Clifford action of a form (via `J⁻¹`) on a spinor.
    pub fn act(&self, x: &Multivector, psi: &Spinor) -> Spinor {
        assert_eq!(x.dim(), self.n, "form dimension does not match the rep");
        assert_eq!(psi.len(), self.spinor_len(), "spinor length does not match the rep");
        let mut out = vec![Scalar::zero(); psi.len()];
        for (b, c) in x.terms() {
            for (o, v) in out.iter_mut().zip(self.blade_perm(*b).apply(&psi.0)) {
                if !v.is_zero() {
                    *o += &(&v * c);
                }
            }
        }
        Spinor(out)
    }

    /// Action of a basis vector `e_i`.
    pub fn act_vector(&self, i: usize, psi: &Spinor) -> Spinor {
        Spinor(self.gammas[i - 1].apply(&psi.0))
    }

    /// Dense matrix realising a form under Clifford multiplication.
    pub fn matrix_of(&self, x: &Multivector) -> Matrix {
        let len = self.spinor_len();
        let mut m = Matrix::zeros(len, len);
        for (b, c) in x.terms() {
            let p = self.blade_perm(*b);
            for j in 0..len {
                let v = &m.get(p.to[j], j).clone() + &(c * &Scalar::from_int(p.sign[j] as i64));
                m.set(p.to[j], j, v);
            }
        }
        m
    }

    /// Eigenvalue (`±1`) of the Clifford volume element on spinor coordinate `k`
    /// for `n = 8`; the chirality grading `Δ₊ ⊕ Δ₋`.
    pub fn chirality(&self, k: usize) -> i32 {
        assert_eq!(self.n, 8, "chirality is defined for n = 8");
        let vol = self.blade_perm(Blade(0xff));
        assert_eq!(vol.to[k], k, "volume element is diagonal");
        vol.sign[k] as i32
    }

    /// Coordinates spanning `Δ₊` (volume eigenvalue `+1`) for `n = 8`.
    pub fn positive_coords(&self) -> Vec<usize> {
        (0..16).filter(|&k| self.chirality(k) > 0).collect()
    }

    pub fn negative_coords(&self) -> Vec<usize> {
        (0..16).filter(|&k| self.chirality(k) < 0).collect()
    }
}

/// Spinor inner product `q_Δ` (the dot product).
pub fn spin_q(phi: &Spinor, psi: &Spinor) -> Scalar {
    assert_eq!(phi.len(), psi.len(), "spinor length mismatch");
    dot(&phi.0, &psi.0)
}

/// `L(φ⊗ψ)`: coefficient of `e_I` is `q(R(e_I)·ψ, φ)` (the `1/16` dropped).
pub fn fierz_l(rep: &MatrixRep, phi: &Spinor, psi: &Spinor) -> Multivector {
    let space = rep.space();
    let mut out = Multivector::zero(space);
    for mask in 0..(1u32 << rep.n) {
        let b = Blade(mask);
        let c = dot(&rep.blade_perm(b).apply(&psi.0), &phi.0);
        out.add_term(b, c);
    }
    out
}

/// `L_b(φ⊗ψ) = e^{b/2} ∧ L(φ⊗ψ)`.
pub fn fierz_lb(rep: &MatrixRep, b: &Multivector, phi: &Spinor, psi: &Spinor) -> Result<Multivector, FormError> {
    let half = b.scale(&Scalar::from_ratio(1, 2));
    exp_wedge(&half, &fierz_l(rep, phi, psi))
}

/// `□_{g,b}ρ = e^{b/2} ∧ ⋆σ(e^{-b/2} ∧ ρ)` for the space's metric.
pub fn box_operator(rho: &Multivector, b: &Multivector) -> Result<Multivector, FormError> {
    let half = b.scale(&Scalar::from_ratio(1, 2));
    let inner = exp_wedge(&-&half, rho)?;
    exp_wedge(&half, &inner.sigma().hodge_star()?)
}

/// Both sides of the two 3-form identities relating `τ⌟L`, `τ∧L` to
/// Clifford multiplication on the spinor factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sandwich {
    pub contract_lhs: Multivector,
    pub contract_rhs: Multivector,
    pub wedge_lhs: Multivector,
    pub wedge_rhs: Multivector,
}

impl Sandwich {
    pub fn balanced(&self) -> bool {
        self.contract_lhs == self.contract_rhs && self.wedge_lhs == self.wedge_rhs
    }
}

/// Evaluates both sides for the even (`even = true`) or odd part of `L`.
pub fn three_form_sandwich(rep: &MatrixRep, tau: &Multivector, phi: &Spinor, psi: &Spinor, even: bool) -> Result<Sandwich, FormError> {
    if !tau.is_homogeneous_of(3) {
        return Err(FormError::WrongDegree { expected: 3 });
    }
    let part = |x: &Multivector, ev: bool| if ev { x.even() } else { x.odd() };
    let l = part(&fierz_l(rep, phi, psi), even);
    let pm = Scalar::from_int(if even { 1 } else { -1 });
    let one = Scalar::one();
    let minus = Scalar::from_int(-1);

    let tau_phi = rep.act(tau, phi);
    let tau_psi = rep.act(tau, psi);
    let lpart = |a: &Spinor, b: &Spinor| part(&fierz_l(rep, a, b), !even);

    let mut sum_left = Multivector::zero(rep.space());
    let mut sum_right = Multivector::zero(rep.space());
    for i in 1..=rep.n {
        let ti = tau.contract_index(i);
        sum_left.add_scaled(&lpart(&rep.act(&ti, phi), &rep.act_vector(i, psi)), &one);
        sum_right.add_scaled(&lpart(&rep.act_vector(i, phi), &rep.act(&ti, psi)), &one);
    }
    let l_tau_phi = lpart(&tau_phi, psi);
    let l_tau_psi = lpart(phi, &tau_psi);
    let eighth = Scalar::from_ratio(1, 8);
    let mp = -&pm;

    let mut c = l_tau_phi.scale(&minus);
    c.add_scaled(&l_tau_psi, &pm);
    c.add_scaled(&sum_left, &mp);
    c.add_scaled(&sum_right, &one);

    let mut w = l_tau_phi.clone();
    w.add_scaled(&l_tau_psi, &pm);
    w.add_scaled(&sum_left, &mp);
    w.add_scaled(&sum_right, &minus);

    Ok(Sandwich { contract_lhs: l.contract_form(tau), contract_rhs: c.scale(&eighth), wedge_lhs: tau.wedge(&l), wedge_rhs: w.scale(&eighth) })
}
