//! Graded exterior algebra over an oriented vector space with diagonal metric.
//!
//! Basis blades are bitsets ([`Blade`]); every sign in the crate comes from
//! [`wedge_sign`] and [`contract_sign`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::Value;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("forms live on different spaces")]
    SpaceMismatch,
    #[error("Hodge star needs a positive-definite metric")]
    IndefiniteMetric,
    #[error("volume factor sqrt(det g) is not exact in the field")]
    InexactVolume,
    #[error("expected a form of pure degree {expected}")]
    WrongDegree { expected: usize },
    #[error("matrix is {0}x{1}, space has dimension {2}")]
    DimensionMismatch(usize, usize, usize),
    #[error("basis index {0} outside 1..={1}")]
    IndexOutOfRange(usize, usize),
}

/// Oriented vector space with a diagonal metric in a fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceDescriptor {
    pub dim: usize,
    pub metric_diag: Vec<Scalar>,
    /// `+1` when the ascending basis order is positively oriented.
    pub orientation: i32,
    pub basis_names: Vec<String>,
    /// For `T ⊕ T*` spaces: indices `1..=n` are `T`, `n+1..=2n` are `T*`.
    pub split: Option<usize>,
}

pub type Space = Arc<SpaceDescriptor>;

impl SpaceDescriptor {
    /// Euclidean `ℝⁿ` with the standard orientation.
    pub fn euclidean(n: usize) -> Space {
        assert!((1..=32).contains(&n), "dimension must be in 1..=32");
        Arc::new(SpaceDescriptor {
            dim: n,
            metric_diag: vec![Scalar::one(); n],
            orientation: 1,
            basis_names: (1..=n).map(|i| format!("e{i}")).collect(),
            split: None,
        })
    }

    pub fn with_metric(metric_diag: Vec<Scalar>, orientation: i32) -> Space {
        let n = metric_diag.len();
        assert!((1..=32).contains(&n), "dimension must be in 1..=32");
        assert!(metric_diag.iter().all(|g| !g.is_zero()), "metric entries must be nonzero");
        Arc::new(SpaceDescriptor {
            dim: n,
            metric_diag,
            orientation: orientation.signum(),
            basis_names: (1..=n).map(|i| format!("e{i}")).collect(),
            split: None,
        })
    }

    /// `T ⊕ T*` for `T = ℝⁿ`: vectors `v1..vn` then covectors `x1..xn`.
    pub fn split(n: usize) -> Space {
        assert!((1..=16).contains(&n), "split dimension must be in 1..=16");
        let mut names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        names.extend((1..=n).map(|i| format!("x{i}")));
        Arc::new(SpaceDescriptor { dim: 2 * n, metric_diag: vec![Scalar::one(); 2 * n], orientation: 1, basis_names: names, split: Some(n) })
    }

    pub fn is_positive_definite(&self) -> bool {
        self.split.is_none() && self.metric_diag.iter().all(|g| g.signum() > 0)
    }

    pub fn full_mask(&self) -> u32 {
        if self.dim == 32 {
            u32::MAX
        } else {
            (1u32 << self.dim) - 1
        }
    }

    fn metric(&self, i: usize) -> &Scalar {
        &self.metric_diag[i - 1]
    }
}

/// Ascending index set stored as a bitset; index `i` (1-based) is bit `i-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn single(i: usize) -> Blade {
        Blade(1 << (i - 1))
    }

    /// Blade of an index list together with the sign of sorting it;
    /// `None` when an index repeats.
    pub fn from_indices(idx: &[usize]) -> Option<(i32, Blade)> {
        let mut mask = 0u32;
        let mut sign = 1;
        for &i in idx {
            assert!((1..=32).contains(&i), "blade index out of range");
            let bit = 1u32 << (i - 1);
            if mask & bit != 0 {
                return None;
            }
            if (mask & !(bit | (bit - 1))).count_ones() % 2 == 1 {
                sign = -sign;
            }
            mask |= bit;
        }
        Some((sign, Blade(mask)))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << (i - 1)) != 0
    }

    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Name in the `e147` / `e{1,4,7}` notation.
    pub fn name(self, dim: usize) -> String {
        let idx = self.indices();
        if dim <= 9 {
            format!("e{}", idx.iter().map(|i| i.to_string()).collect::<String>())
        } else {
            format!("e{{{}}}", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
        }
    }
}

/// Sign of `e_a ∧ e_b` relative to the sorted blade; zero when they overlap.
pub fn wedge_sign(a: Blade, b: Blade) -> i32 {
    if a.0 & b.0 != 0 {
        return 0;
    }
    let mut swaps = 0;
    let mut rest = b.0;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        swaps += (a.0 & !(bit | (bit - 1))).count_ones();
        rest &= rest - 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of `e_i ⌟ e_I`; zero when `i ∉ I`.
pub fn contract_sign(i: usize, blade: Blade) -> i32 {
    if !blade.contains(i) {
        return 0;
    }
    let below = blade.0 & ((1u32 << (i - 1)) - 1);
    if below.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `ε(p)`: `+1` for `p ≡ 0,3 (mod 4)`, `-1` for `p ≡ 1,2 (mod 4)`.
pub fn sigma_sign(p: usize) -> i32 {
    match p % 4 {
        0 | 3 => 1,
        _ => -1,
    }
}

/// Finitely supported linear combination of blades on a fixed space.
#[derive(Clone)]
pub struct Multivector {
    space: Space,
    terms: BTreeMap<Blade, Scalar>,
}

impl PartialEq for Multivector {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.terms == other.terms
    }
}

impl Eq for Multivector {}

fn same_space(a: &Space, b: &Space) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn scalar_from_sign(s: i32) -> Scalar {
    Scalar::from_int(s as i64)
}

impl Multivector {
    pub fn zero(space: &Space) -> Self {
        Multivector { space: space.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(space: &Space, s: Scalar) -> Self {
        Self::term(space, Blade::SCALAR, s)
    }

    pub fn one(space: &Space) -> Self {
        Self::scalar(space, Scalar::one())
    }

    pub fn term(space: &Space, blade: Blade, s: Scalar) -> Self {
        assert!(blade.0 & !space.full_mask() == 0, "blade outside the space");
        let mut m = Self::zero(space);
        if !s.is_zero() {
            m.terms.insert(blade, s);
        }
        m
    }

    /// `e_{i1} ∧ … ∧ e_{ik}` for an arbitrary index list.
    pub fn basis(space: &Space, idx: &[usize]) -> Self {
        for &i in idx {
            assert!(i >= 1 && i <= space.dim, "basis index {i} outside 1..={}", space.dim);
        }
        match Blade::from_indices(idx) {
            Some((sign, b)) => Self::term(space, b, scalar_from_sign(sign)),
            None => Self::zero(space),
        }
    }

    /// Linear combination of basis blades given as `(coefficient, indices)`.
    pub fn from_terms(space: &Space, terms: &[(Scalar, &[usize])]) -> Self {
        let mut out = Self::zero(space);
        for (c, idx) in terms {
            out.add_scaled(&Self::basis(space, idx), c);
        }
        out
    }

    /// Oriented volume form.
    pub fn volume(space: &Space) -> Self {
        Self::term(space, Blade(space.full_mask()), scalar_from_sign(space.orientation))
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    /// Coefficient of `e_{i1…ik}` with the sign of the given ordering.
    pub fn coeff_of(&self, idx: &[usize]) -> Scalar {
        match Blade::from_indices(idx) {
            Some((s, b)) => &self.coeff(b) * &scalar_from_sign(s),
            None => Scalar::zero(),
        }
    }

    pub fn same_space_as(&self, other: &Multivector) -> bool {
        same_space(&self.space, &other.space)
    }

    fn check_space(&self, other: &Multivector) -> Result<(), FormError> {
        if same_space(&self.space, &other.space) {
            Ok(())
        } else {
            Err(FormError::SpaceMismatch)
        }
    }

    fn expect_space(&self, other: &Multivector) {
        if let Err(e) = self.check_space(other) {
            panic!("{e}");
        }
    }

    /// Adds `c·e_blade` in place, dropping cancelled terms.
    pub fn add_term(&mut self, blade: Blade, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, c);
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Multivector, c: &Scalar) {
        self.expect_space(other);
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(*b, v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Multivector {
        let mut out = Self::zero(&self.space);
        if c.is_zero() {
            return out;
        }
        for (b, v) in &self.terms {
            out.terms.insert(*b, v * c);
        }
        out
    }

    pub fn map_terms(&self, f: impl Fn(Blade, &Scalar) -> Scalar) -> Multivector {
        let mut out = Self::zero(&self.space);
        for (b, v) in &self.terms {
            out.add_term(*b, f(*b, v));
        }
        out
    }

    /// Degree-`p` component.
    pub fn grade(&self, p: usize) -> Multivector {
        self.filter(|b| b.degree() == p)
    }

    pub fn even(&self) -> Multivector {
        self.filter(|b| b.degree() % 2 == 0)
    }

    pub fn odd(&self) -> Multivector {
        self.filter(|b| b.degree() % 2 == 1)
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivector {
        Multivector { space: self.space.clone(), terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, v)| (*b, v.clone())).collect() }
    }

    /// Pure degree if homogeneous (zero counts as every degree, reported as `None`).
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|b| b.degree());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, p: usize) -> bool {
        self.terms.keys().all(|b| b.degree() == p)
    }

    pub fn try_wedge(&self, other: &Multivector) -> Result<Multivector, FormError> {
        self.check_space(other)?;
        let mut out = Self::zero(&self.space);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let s = wedge_sign(*a, *b);
                if s != 0 {
                    let v = x * y;
                    out.add_term(Blade(a.0 | b.0), if s > 0 { v } else { -v });
                }
            }
        }
        Ok(out)
    }

    /// Exterior product.
    ///
    /// # Panics
    /// When the operands live on different spaces; see [`Multivector::try_wedge`].
    pub fn wedge(&self, other: &Multivector) -> Multivector {
        self.try_wedge(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `x ∧ x ∧ … ∧ x` (`k` factors, `k = 0` gives 1).
    pub fn wedge_power(&self, k: usize) -> Multivector {
        let mut acc = Self::one(&self.space);
        for _ in 0..k {
            acc = acc.wedge(self);
        }
        acc
    }

    /// Contraction `e_i ⌟ x` with a basis vector.
    pub fn contract_index(&self, i: usize) -> Multivector {
        assert!(i >= 1 && i <= self.space.dim, "contraction index out of range");
        let mut out = Self::zero(&self.space);
        let bit = 1u32 << (i - 1);
        for (b, v) in &self.terms {
            let s = contract_sign(i, *b);
            if s != 0 {
                out.add_term(Blade(b.0 & !bit), if s > 0 { v.clone() } else { -v });
            }
        }
        out
    }

    /// Contraction with the metric dual of a 1-form `v`.
    pub fn try_contract_vector(&self, v: &Multivector) -> Result<Multivector, FormError> {
        self.check_space(v)?;
        if !v.is_homogeneous_of(1) {
            return Err(FormError::WrongDegree { expected: 1 });
        }
        let mut out = Self::zero(&self.space);
        for (b, c) in &v.terms {
            let i = b.indices()[0];
            let g = self.space.metric(i).inv();
            out.add_scaled(&self.contract_index(i), &(c * &g));
        }
        Ok(out)
    }

    pub fn contract_vector(&self, v: &Multivector) -> Multivector {
        self.try_contract_vector(v).unwrap_or_else(|e| panic!("{e}"))
    }

    /// `a ⌟ x` by iterated contraction, innermost factor first:
    /// `(e_{i1} ∧ … ∧ e_{ik}) ⌟ x = e_{i1} ⌟ (… (e_{ik} ⌟ x))`.
    pub fn try_contract_form(&self, a: &Multivector) -> Result<Multivector, FormError> {
        self.check_space(a)?;
        let mut out = Self::zero(&self.space);
        for (b, c) in &a.terms {
            let mut cur = self.clone();
            let mut factor = c.clone();
            for i in b.indices().into_iter().rev() {
                cur = cur.contract_index(i);
                factor = &factor * &self.space.metric(i).inv();
                if cur.is_zero() {
                    break;
                }
            }
            out.add_scaled(&cur, &factor);
        }
        Ok(out)
    }

    pub fn contract_form(&self, a: &Multivector) -> Multivector {
        self.try_contract_form(a).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Hodge star `⋆e_I = sign(I,Iᶜ)·orientation·e_{Iᶜ}` (orthonormal case).
    pub fn hodge_star(&self) -> Result<Multivector, FormError> {
        if !self.space.is_positive_definite() {
            return Err(FormError::IndefiniteMetric);
        }
        let full = self.space.full_mask();
        let unit = self.space.metric_diag.iter().all(Scalar::is_one);
        let vol_factor = if unit {
            Scalar::one()
        } else {
            let det = self.space.metric_diag.iter().fold(Scalar::one(), |acc, g| &acc * g);
            det.sqrt_exact().ok_or(FormError::InexactVolume)?
        };
        let mut out = Self::zero(&self.space);
        for (b, v) in &self.terms {
            let comp = Blade(full & !b.0);
            let sign = wedge_sign(*b, comp) * self.space.orientation;
            let mut c = if sign > 0 { v.clone() } else { -v };
            if !unit {
                for i in b.indices() {
                    c = &c * &self.space.metric(i).inv();
                }
                c = &c * &vol_factor;
            }
            out.add_term(comp, c);
        }
        Ok(out)
    }

    /// # Panics
    /// On spaces where [`Multivector::hodge_star`] fails.
    pub fn star(&self) -> Multivector {
        self.hodge_star().unwrap_or_else(|e| panic!("{e}"))
    }

    /// The involution `σ`, multiplying degree `p` by `ε(p)`.
    pub fn sigma(&self) -> Multivector {
        self.map_terms(|b, v| if sigma_sign(b.degree()) > 0 { v.clone() } else { -v })
    }

    /// Top coefficient, measured against the oriented volume form.
    pub fn top_coefficient(&self) -> Scalar {
        let c = self.coeff(Blade(self.space.full_mask()));
        if self.space.orientation > 0 {
            c
        } else {
            -c
        }
    }

    /// `q(x, y) = (x ∧ σ(y))_top`.
    pub fn q_pairing(&self, other: &Multivector) -> Scalar {
        self.wedge(&other.sigma()).top_coefficient()
    }

    /// Induced inner product of forms (orthonormal-blade pairing).
    pub fn inner(&self, other: &Multivector) -> Scalar {
        self.expect_space(other);
        let mut acc = Scalar::zero();
        for (b, v) in &self.terms {
            if let Some(w) = other.terms.get(b) {
                let mut g = Scalar::one();
                for i in b.indices() {
                    g = &g * &self.space.metric(i).inv();
                }
                acc += &(&(v * w) * &g);
            }
        }
        acc
    }

    pub fn norm_sq(&self) -> Scalar {
        self.inner(self)
    }

    /// Derivation action of `A ∈ gl(n)` with `(A·ξ)(v) = -ξ(Av)` on 1-forms.
    pub fn try_gl_action(&self, a: &Matrix) -> Result<Multivector, FormError> {
        let n = self.space.dim;
        if a.rows() != n || a.cols() != n {
            return Err(FormError::DimensionMismatch(a.rows(), a.cols(), n));
        }
        let mut out = Self::zero(&self.space);
        for (b, v) in &self.terms {
            let idx = b.indices();
            for (pos, &j) in idx.iter().enumerate() {
                for i in 1..=n {
                    let aji = a.get(j - 1, i - 1);
                    if aji.is_zero() {
                        continue;
                    }
                    let mut replaced = idx.clone();
                    replaced[pos] = i;
                    if let Some((s, nb)) = Blade::from_indices(&replaced) {
                        let c = v * aji;
                        out.add_term(nb, if s > 0 { -c } else { c });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn gl_action(&self, a: &Matrix) -> Multivector {
        self.try_gl_action(a).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Total coefficient vector over all `2ⁿ` blades (index = bitmask).
    pub fn dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 1usize << self.space.dim];
        for (b, c) in &self.terms {
            v[b.0 as usize] = c.clone();
        }
        v
    }

    /// Terms sorted lexicographically by index list.
    pub fn sorted_terms(&self) -> Vec<(Vec<usize>, Scalar)> {
        let mut v: Vec<(Vec<usize>, Scalar)> = self.terms.iter().map(|(b, c)| (b.indices(), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    /// JSON array of `[indices, "scalar"]` pairs.
    pub fn to_json(&self) -> Value {
        Value::Array(self.sorted_terms().into_iter().map(|(idx, c)| serde_json::json!([idx, c.to_string()])).collect())
    }

    pub fn from_json(space: &Space, value: &Value) -> Result<Multivector, String> {
        let arr = value.as_array().ok_or("expected an array of terms")?;
        let mut out = Self::zero(space);
        for t in arr {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or("expected [indices, scalar]")?;
            let idx: Vec<usize> = pair[0]
                .as_array()
                .ok_or("expected index list")?
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize).ok_or("bad index"))
                .collect::<Result<_, _>>()?;
            if idx.iter().any(|&i| i == 0 || i > space.dim) {
                return Err("index out of range".into());
            }
            let c = Scalar::parse(pair[1].as_str().ok_or("expected scalar string")?).map_err(|e| e.to_string())?;
            out.add_scaled(&Self::basis(space, &idx), &c);
        }
        Ok(out)
    }

    /// Re-expresses the form on another space through an index map
    /// `old index i ↦ new index map[i-1]`.
    pub fn embed(&self, target: &Space, map: &[usize]) -> Multivector {
        assert_eq!(map.len(), self.space.dim, "index map length");
        let mut out = Self::zero(target);
        for (b, c) in &self.terms {
            let idx: Vec<usize> = b.indices().iter().map(|&i| map[i - 1]).collect();
            out.add_scaled(&Self::basis(target, &idx), c);
        }
        out
    }
}

/// `exp(b) ∧ x = (1 + b + b∧b/2 + …) ∧ x` for a 2-form `b`.
pub fn exp_wedge(b: &Multivector, x: &Multivector) -> Result<Multivector, FormError> {
    b.check_space(x)?;
    if !b.is_homogeneous_of(2) {
        return Err(FormError::WrongDegree { expected: 2 });
    }
    let mut out = x.clone();
    let mut term = x.clone();
    let mut k = 1i64;
    while !term.is_zero() {
        term = b.wedge(&term).scale(&Scalar::from_ratio(1, k));
        out.add_scaled(&term, &Scalar::one());
        k += 1;
    }
    Ok(out)
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let dim = self.space.dim;
        for (k, (idx, c)) in self.sorted_terms().into_iter().enumerate() {
            let name = if idx.is_empty() { None } else { Some(Blade::from_indices(&idx).map(|(_, b)| b.name(dim)).unwrap_or_default()) };
            let neg = c.signum() < 0 && c.is_rational();
            let mag = if neg { -&c } else { c.clone() };
            if k > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match name {
                None => {
                    if mag.is_rational() {
                        write!(f, "{mag}")?
                    } else {
                        write!(f, "({mag})")?
                    }
                }
                Some(n) if mag.is_one() => write!(f, "{n}")?,
                Some(n) if mag.is_rational() => write!(f, "{mag}*{n}")?,
                Some(n) => write!(f, "({mag})*{n}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::from_int(-1));
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

impl Mul<&Multivector> for &Scalar {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Mul<Multivector> for Scalar {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(&self)
    }
}
