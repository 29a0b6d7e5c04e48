//! Exact arithmetic in quadratic fields ℚ(√d) and their complexification.
//!
//! [`QuadScalar`] is the coefficient type used by every other module. The
//! field tag `d` travels with each value; a value whose irrational part is
//! zero is a plain rational and combines with any tag.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Reduced fraction with arbitrary-precision numerator and positive denominator.
pub type Rational = BigRational;

/// Default field tag: all worked examples live in ℚ(√3).
pub const DEFAULT_FIELD: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("field tag mismatch: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field tag {0} is not a square-free integer greater than 1")]
    BadField(u32),
    #[error("malformed scalar literal `{text}`: {reason}")]
    Malformed { text: String, reason: String },
    #[error("value has a nonzero imaginary part")]
    NotReal,
}

/// Checks that `d` can serve as a field tag.
pub fn validate_field(d: u32) -> Result<u32, ScalarError> {
    if d < 2 {
        return Err(ScalarError::BadField(d));
    }
    let mut p = 2u32;
    while p * p <= d {
        if d.is_multiple_of(p * p) {
            return Err(ScalarError::BadField(d));
        }
        p += 1;
    }
    Ok(d)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The value `a + b·√d`.
#[derive(Clone)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
    d: u32,
}

/// Coefficient type of forms, spinors and matrices.
pub type Scalar = QuadScalar;

impl QuadScalar {
    pub fn new(a: Rational, b: Rational, d: u32) -> Self {
        QuadScalar { a, b, d }
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadScalar { a, b: Rational::zero(), d: DEFAULT_FIELD }
    }

    /// `√d` in the field with tag `d`.
    pub fn sqrt_of(d: u32) -> Self {
        QuadScalar { a: Rational::zero(), b: Rational::one(), d }
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        Self::sqrt_of(3)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn field(&self) -> u32 {
        self.d
    }

    pub fn with_field(mut self, d: u32) -> Self {
        self.d = d;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Tag of the result of a binary operation, or the mismatch.
    fn join(&self, other: &Self) -> Result<u32, ScalarError> {
        if self.b.is_zero() {
            Ok(other.d)
        } else if other.b.is_zero() || self.d == other.d {
            Ok(self.d)
        } else {
            Err(ScalarError::FieldMismatch(self.d, other.d))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(QuadScalar { a: &self.a + &other.a, b: &self.b + &other.b, d })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        Ok(QuadScalar { a: &self.a - &other.a, b: &self.b - &other.b, d })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        let d = self.join(other)?;
        if self.b.is_zero() {
            return Ok(QuadScalar { a: &self.a * &other.a, b: &self.a * &other.b, d });
        }
        if other.b.is_zero() {
            return Ok(QuadScalar { a: &self.a * &other.a, b: &self.b * &other.a, d });
        }
        let dd = Rational::from_integer(BigInt::from(d));
        Ok(QuadScalar { a: &self.a * &other.a + dd * &self.b * &other.b, b: &self.a * &other.b + &other.a * &self.b, d })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.try_mul(&other.try_inv()?)
    }

    /// Galois conjugate `a - b√d`.
    pub fn conj(&self) -> Self {
        QuadScalar { a: self.a.clone(), b: -&self.b, d: self.d }
    }

    /// Field norm `a² - d·b²`.
    pub fn norm(&self) -> Rational {
        let dd = Rational::from_integer(BigInt::from(self.d));
        &self.a * &self.a - dd * &self.b * &self.b
    }

    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(QuadScalar { a: self.a.recip(), b: Rational::zero(), d: self.d });
        }
        let n = self.norm();
        Ok(QuadScalar { a: &self.a / &n, b: -&self.b / &n, d: self.d })
    }

    /// # Panics
    /// On zero input.
    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero scalar")
    }

    /// Exact sign of the real number `a + b√d`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        let dd = Rational::from_integer(BigInt::from(self.d));
        match (&self.a * &self.a).cmp(&(dd * &self.b * &self.b)) {
            Ordering::Greater => sa,
            _ => sb,
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact square root when it exists in the same field; only rational
    /// radicands of the shape `q²` or `d·q²` are recognised.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if !self.b.is_zero() || self.a.is_negative() {
            return None;
        }
        if let Some(r) = rational_sqrt(&self.a) {
            return Some(Self::from_rational(r).with_field(self.d));
        }
        let dd = Rational::from_integer(BigInt::from(self.d));
        rational_sqrt(&(&self.a / &dd)).map(|r| QuadScalar { a: Rational::zero(), b: r, d: self.d })
    }

    /// Floating approximation, used only by the calibration sampler.
    pub fn approx(&self) -> f64 {
        ratio_f64(&self.a) + ratio_f64(&self.b) * (self.d as f64).sqrt()
    }

    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        parse_scalar(text)?.into_real()
    }
}

fn sign_of(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

fn ratio_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

impl Default for QuadScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for QuadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && (self.b.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadScalar {}

impl Hash for QuadScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        if !self.b.is_zero() {
            self.d.hash(state);
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn signed_term(r: &Rational) -> String {
    if r.is_negative() {
        fmt_rat(r)
    } else {
        format!("+{}", fmt_rat(r))
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", fmt_rat(&self.a))
        } else {
            write!(f, "{}{}*s{}", fmt_rat(&self.a), signed_term(&self.b), self.d)
        }
    }
}

impl FromStr for QuadScalar {
    type Err = ScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        QuadScalar::parse(s)
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        QuadScalar::from_int(n)
    }
}

impl From<Rational> for QuadScalar {
    fn from(r: Rational) -> Self {
        QuadScalar::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $try:ident, $ty:ty) => {
        impl<'a> $tr<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<$ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add, QuadScalar);
forward_binop!(Sub, sub, try_sub, QuadScalar);
forward_binop!(Mul, mul, try_mul, QuadScalar);
forward_binop!(Div, div, try_div, QuadScalar);

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar { a: -&self.a, b: -&self.b, d: self.d }
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

impl AddAssign<&QuadScalar> for QuadScalar {
    fn add_assign(&mut self, rhs: &QuadScalar) {
        let d = self.join(rhs).unwrap_or_else(|e| panic!("{}", e));
        self.a += &rhs.a;
        self.b += &rhs.b;
        self.d = d;
    }
}

impl SubAssign<&QuadScalar> for QuadScalar {
    fn sub_assign(&mut self, rhs: &QuadScalar) {
        let d = self.join(rhs).unwrap_or_else(|e| panic!("{}", e));
        self.a -= &rhs.a;
        self.b -= &rhs.b;
        self.d = d;
    }
}

impl MulAssign<&QuadScalar> for QuadScalar {
    fn mul_assign(&mut self, rhs: &QuadScalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for QuadScalar {
    fn sum<I: Iterator<Item = QuadScalar>>(iter: I) -> Self {
        let mut acc = QuadScalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// The complex number `re + im·i` with quadratic-field parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CScalar {
    pub re: QuadScalar,
    pub im: QuadScalar,
}

impl CScalar {
    pub fn new(re: QuadScalar, im: QuadScalar) -> Self {
        CScalar { re, im }
    }

    pub fn real(re: QuadScalar) -> Self {
        CScalar { re, im: QuadScalar::zero() }
    }

    pub fn i() -> Self {
        CScalar { re: QuadScalar::zero(), im: QuadScalar::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        CScalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> QuadScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn try_inv(&self) -> Result<Self, ScalarError> {
        let n = self.norm_sq().try_inv()?;
        Ok(CScalar { re: &self.re * &n, im: -(&self.im * &n) })
    }

    pub fn into_real(self) -> Result<QuadScalar, ScalarError> {
        if self.im.is_zero() {
            Ok(self.re)
        } else {
            Err(ScalarError::NotReal)
        }
    }

    pub fn parse(text: &str) -> Result<Self, ScalarError> {
        parse_scalar(text)
    }
}

impl fmt::Debug for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        write!(f, "{}", self.re)?;
        if !self.im.a.is_zero() {
            write!(f, "{}*i", signed_term(&self.im.a))?;
        }
        if !self.im.b.is_zero() {
            write!(f, "{}*s{}*i", signed_term(&self.im.b), self.im.d)?;
        }
        Ok(())
    }
}

impl Add for &CScalar {
    type Output = CScalar;
    fn add(self, rhs: &CScalar) -> CScalar {
        CScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &CScalar {
    type Output = CScalar;
    fn sub(self, rhs: &CScalar) -> CScalar {
        CScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &CScalar {
    type Output = CScalar;
    fn mul(self, rhs: &CScalar) -> CScalar {
        CScalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Neg for &CScalar {
    type Output = CScalar;
    fn neg(self) -> CScalar {
        CScalar { re: -&self.re, im: -&self.im }
    }
}

/// Parses the scalar literal grammar: signed terms `r`, `r*s<d>`, `r*i` and
/// `r*s<d>*i`, where `r` is `int` or `int/int`. Each shape may occur once.
pub fn parse_scalar(text: &str) -> Result<CScalar, ScalarError> {
    let bad = |reason: &str| ScalarError::Malformed { text: text.to_string(), reason: reason.to_string() };
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(bad("empty literal"));
    }
    let mut pos = 0;
    let mut parts: [Option<Rational>; 4] = [None, None, None, None];
    let mut field: Option<u32> = None;
    while pos < s.len() {
        let mut neg = false;
        if s[pos] == '+' || s[pos] == '-' {
            neg = s[pos] == '-';
            pos += 1;
        } else if pos != 0 {
            return Err(bad("expected sign between terms"));
        }
        let num = read_int(&s, &mut pos).ok_or_else(|| bad("expected integer"))?;
        let mut value = Rational::from_integer(num);
        if pos < s.len() && s[pos] == '/' {
            pos += 1;
            let den = read_int(&s, &mut pos).ok_or_else(|| bad("expected denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            value /= Rational::from_integer(den);
        }
        if neg {
            value = -value;
        }
        let mut surd = false;
        let mut imag = false;
        while pos < s.len() && s[pos] == '*' {
            pos += 1;
            match s.get(pos) {
                Some('s') if !surd && !imag => {
                    pos += 1;
                    let d = read_int(&s, &mut pos).ok_or_else(|| bad("expected field tag after s"))?;
                    let d = d.to_u32().ok_or_else(|| bad("field tag too large"))?;
                    let d = validate_field(d)?;
                    if field.is_some_and(|f| f != d) {
                        return Err(ScalarError::FieldMismatch(field.unwrap_or(d), d));
                    }
                    field = Some(d);
                    surd = true;
                }
                Some('i') if !imag => {
                    pos += 1;
                    imag = true;
                }
                _ => return Err(bad("expected s<d> or i after *")),
            }
        }
        let slot = (imag as usize) * 2 + surd as usize;
        if parts[slot].is_some() {
            return Err(bad("repeated term"));
        }
        parts[slot] = Some(value);
    }
    let d = field.unwrap_or(DEFAULT_FIELD);
    let take = |i: usize| parts[i].clone().unwrap_or_else(Rational::zero);
    Ok(CScalar { re: QuadScalar::new(take(0), take(1), d), im: QuadScalar::new(take(2), take(3), d) })
}

fn read_int(s: &[char], pos: &mut usize) -> Option<BigInt> {
    let start = *pos;
    while *pos < s.len() && s[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return None;
    }
    let digits: String = s[start..*pos].iter().collect();
    digits.parse().ok()
}

/// Canonical text of a complex scalar; real values print without `*i` terms.
pub fn format_scalar(x: &CScalar) -> String {
    x.to_string()
}
