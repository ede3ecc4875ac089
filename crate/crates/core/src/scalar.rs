//! Exact scalars: rationals, optionally extended by a single square root.
//!
//! A [`Scalar`] is `p + q·√d` with `p, q` rational and `d` a square-free
//! integer greater than one. Rational values always carry `q = 0` and no
//! radicand, so a rational mixes freely with any extension element. Two
//! irrational scalars can only be combined when they share the radicand;
//! combining `√2` with `√3` is a logic error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarParseError {
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("radicand in `{0}` must be a positive integer")]
    BadRadicand(String),
}

#[derive(Clone)]
pub struct Scalar(Repr);

/// Irrational values share one denominator: `(p + q·√d)/r`, with
/// `gcd(p, q, r) = 1`, `r > 0` and `q ≠ 0`.
#[derive(Clone, PartialEq, Eq)]
enum Repr {
    Rat(BigRational),
    Surd {
        p: BigInt,
        q: BigInt,
        r: BigInt,
        d: Arc<BigInt>,
    },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::from_rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(rat: BigRational) -> Self {
        Scalar(Repr::Rat(rat))
    }

    /// `p + q·√d`. `d` need not be square-free; it is reduced here.
    pub fn with_surd(p: BigRational, q: BigRational, d: &BigInt) -> Self {
        assert!(d.is_positive(), "radicand must be positive");
        let (root, core) = square_free_split(d);
        let q = q * BigRational::from_integer(root);
        Scalar::from_parts(p, q, core)
    }

    fn from_parts(p: BigRational, q: BigRational, core: BigInt) -> Self {
        if q.is_zero() || core.is_one() {
            let p = if core.is_one() { p + q } else { p };
            return Scalar::from_rational(p);
        }
        let r = p.denom().lcm(q.denom());
        let pn = p.numer() * (&r / p.denom());
        let qn = q.numer() * (&r / q.denom());
        Scalar::surd(pn, qn, r, Arc::new(core))
    }

    /// Normalizing constructor for `(p + q·√d)/r`.
    fn surd(mut p: BigInt, mut q: BigInt, mut r: BigInt, d: Arc<BigInt>) -> Self {
        debug_assert!(!r.is_zero());
        if q.is_zero() {
            return Scalar::from_rational(BigRational::new(p, r));
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        Scalar(Repr::Surd { p, q, r, d })
    }

    /// `(p, q, r, d)` with value `(p + q·√d)/r`, `r > 0`; `q = 0` and no `d`
    /// for rationals.
    pub(crate) fn int_parts(&self) -> (BigInt, BigInt, BigInt, Option<Arc<BigInt>>) {
        match &self.0 {
            Repr::Rat(a) => (a.numer().clone(), BigInt::zero(), a.denom().clone(), None),
            Repr::Surd { p, q, r, d } => (p.clone(), q.clone(), r.clone(), Some(d.clone())),
        }
    }

    /// Inverse of [`Scalar::int_parts`]; reduces by the common gcd.
    pub(crate) fn from_int_parts(p: BigInt, q: BigInt, r: BigInt, d: Option<Arc<BigInt>>) -> Self {
        match d {
            Some(d) if !q.is_zero() => Scalar::surd(p, q, r, d),
            _ => Scalar::from_rational(BigRational::new(p, r)),
        }
    }

    /// Exact square root of a non-negative rational, or `None` for negative input.
    pub fn sqrt_of(r: &BigRational) -> Option<Self> {
        if r.is_negative() {
            return None;
        }
        if r.is_zero() {
            return Some(Scalar::zero());
        }
        // √(n/m) = √(n·m)/m
        let t = r.numer() * r.denom();
        let (root, core) = square_free_split(&t);
        let coeff = BigRational::new(root, r.denom().clone());
        if core.is_one() {
            Some(Scalar::from_rational(coeff))
        } else {
            Some(Scalar::from_parts(BigRational::zero(), coeff, core))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Rat(a) if a.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Rat(a) if a.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self.0, Repr::Rat(_))
    }

    pub fn rational_part(&self) -> BigRational {
        match &self.0 {
            Repr::Rat(a) => a.clone(),
            Repr::Surd { p, r, .. } => BigRational::new(p.clone(), r.clone()),
        }
    }

    pub fn surd_part(&self) -> BigRational {
        match &self.0 {
            Repr::Rat(_) => BigRational::zero(),
            Repr::Surd { q, r, .. } => BigRational::new(q.clone(), r.clone()),
        }
    }

    pub fn radicand(&self) -> Option<&BigInt> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Surd { d, .. } => Some(d),
        }
    }

    /// The value as a rational, if it is one.
    pub fn to_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(a) => Some(a),
            Repr::Surd { .. } => None,
        }
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let (p, q, d) = match &self.0 {
            Repr::Rat(a) => return a.cmp(&BigRational::zero()),
            Repr::Surd { p, q, d, .. } => (p, q, d),
        };
        let ps = p.sign();
        let qs = q.sign();
        let to_ord = |s: num_bigint::Sign| match s {
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
            num_bigint::Sign::Plus => Ordering::Greater,
        };
        if ps == qs || ps == num_bigint::Sign::NoSign {
            return to_ord(qs);
        }
        // opposite signs: compare p² with q²·d
        match (p * p).cmp(&(q * q * &**d)) {
            Ordering::Greater => to_ord(ps),
            Ordering::Less => to_ord(qs),
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Galois conjugate `p − q·√d`.
    pub fn conjugate(&self) -> Scalar {
        match &self.0 {
            Repr::Rat(_) => self.clone(),
            Repr::Surd { p, q, r, d } => Scalar(Repr::Surd {
                p: p.clone(),
                q: -q,
                r: r.clone(),
                d: d.clone(),
            }),
        }
    }

    /// `p² − q²·d`, the field norm down to Q.
    pub fn norm(&self) -> BigRational {
        match &self.0 {
            Repr::Rat(a) => a * a,
            Repr::Surd { p, q, r, d } => BigRational::new(p * p - q * q * &**d, r * r),
        }
    }

    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "division by zero scalar");
        match &self.0 {
            Repr::Rat(a) => Scalar::from_rational(a.recip()),
            Repr::Surd { p, q, r, d } => {
                let n = p * p - q * q * &**d;
                Scalar::surd(r * p, -(r * q), n, d.clone())
            }
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.rational_part().to_f64().unwrap_or(f64::NAN);
        match self.radicand() {
            None => p,
            Some(d) => p + self.surd_part().to_f64().unwrap_or(f64::NAN) * d.to_f64().unwrap_or(f64::NAN).sqrt(),
        }
    }
}

fn same_field<'a>(a: &'a Arc<BigInt>, b: &Arc<BigInt>) -> &'a Arc<BigInt> {
    assert!(
        Arc::ptr_eq(a, b) || a == b,
        "scalars from different quadratic fields: sqrt({a}) and sqrt({b})"
    );
    a
}

/// `a/b + s·(p + q√d)/r`, for `s = ±1`.
fn add_rat_surd(a: &BigRational, s: i8, p: &BigInt, q: &BigInt, r: &BigInt, d: &Arc<BigInt>) -> Scalar {
    let b = a.denom();
    let (pb, qb) = (p * b, q * b);
    let (pb, qb) = if s < 0 { (-pb, -qb) } else { (pb, qb) };
    Scalar::surd(a.numer() * r + pb, qb, b * r, d.clone())
}

fn add_impl(x: &Scalar, y: &Scalar, neg: bool) -> Scalar {
    let s: i8 = if neg { -1 } else { 1 };
    match (&x.0, &y.0) {
        (Repr::Rat(a), Repr::Rat(b)) => Scalar::from_rational(if neg { a - b } else { a + b }),
        (Repr::Rat(a), Repr::Surd { p, q, r, d }) => add_rat_surd(a, s, p, q, r, d),
        (Repr::Surd { p, q, r, d }, Repr::Rat(b)) => {
            let nb = if neg { -b } else { b.clone() };
            add_rat_surd(&nb, 1, p, q, r, d)
        }
        (
            Repr::Surd {
                p: p1,
                q: q1,
                r: r1,
                d: d1,
            },
            Repr::Surd {
                p: p2,
                q: q2,
                r: r2,
                d: d2,
            },
        ) => {
            let d = same_field(d1, d2);
            let (p, q, r) = if r1 == r2 {
                if neg {
                    (p1 - p2, q1 - q2, r1.clone())
                } else {
                    (p1 + p2, q1 + q2, r1.clone())
                }
            } else {
                let (a1, a2) = (p1 * r2, p2 * r1);
                let (b1, b2) = (q1 * r2, q2 * r1);
                if neg {
                    (a1 - a2, b1 - b2, r1 * r2)
                } else {
                    (a1 + a2, b1 + b2, r1 * r2)
                }
            };
            Scalar::surd(p, q, r, d.clone())
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Split `t > 0` as `root² · core` with `core` square-free.
fn square_free_split(t: &BigInt) -> (BigInt, BigInt) {
    assert!(t.is_positive());
    if let Some(v) = t.to_u128() {
        let (r, c) = square_free_split_u128(v);
        return (BigInt::from(r), BigInt::from(c));
    }
    // Large input: strip small squares, then test the rest for a perfect square.
    let mut root = BigInt::one();
    let mut rest = t.clone();
    let mut p = BigInt::from(2u32);
    let limit = BigInt::from(1_000_000u32);
    while p < limit && &p * &p * &p <= rest {
        let p2 = &p * &p;
        while (&rest % &p2).is_zero() {
            rest /= &p2;
            root *= &p;
        }
        p += 1;
    }
    let s = rest.sqrt();
    if &s * &s == rest {
        return (root * s, BigInt::one());
    }
    (root, rest)
}

const TRIAL_LIMIT: u128 = 1_000_000;

fn square_free_split_u128(mut t: u128) -> (u128, u128) {
    let mut root: u128 = 1;
    let mut core: u128 = 1;
    let mut p: u128 = 2;
    while p <= TRIAL_LIMIT && p * p * p <= t {
        if t.is_multiple_of(p) {
            let mut e = 0;
            while t.is_multiple_of(p) {
                t /= p;
                e += 1;
            }
            root *= p.pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // Below the trial limit, t is now 1, a prime, a prime squared, or a
    // product of two distinct primes. Past it, only a full square is caught.
    let s = isqrt_u128(t);
    if s * s == t {
        root *= s;
    } else {
        core *= t;
    }
    (root, core)
}

fn isqrt_u128(t: u128) -> u128 {
    if t < 2 {
        return t;
    }
    let mut x = (t as f64).sqrt() as u128;
    while x * x > t {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= t {
        x += 1;
    }
    x
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::from_rational(r)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar::from_rational(a * b),
            (Repr::Rat(a), Repr::Surd { p, q, r, d }) | (Repr::Surd { p, q, r, d }, Repr::Rat(a)) => {
                if a.is_zero() {
                    return Scalar::zero();
                }
                Scalar::surd(a.numer() * p, a.numer() * q, a.denom() * r, d.clone())
            }
            (
                Repr::Surd {
                    p: p1,
                    q: q1,
                    r: r1,
                    d: d1,
                },
                Repr::Surd {
                    p: p2,
                    q: q2,
                    r: r2,
                    d: d2,
                },
            ) => {
                let d = same_field(d1, d2);
                let pp = p1 * p2;
                let qq = q1 * q2;
                let cross = (p1 + q1) * (p2 + q2) - &pp - &qq;
                Scalar::surd(pp + qq * &**d, cross, r1 * r2, d.clone())
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &rhs.0) {
            assert!(!b.is_zero(), "division by zero scalar");
            return Scalar::from_rational(a / b);
        }
        self * &rhs.inv()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Surd { p, q, r, d } => Scalar(Repr::Surd { p: -p, q: -q, r, d }),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        match (&mut self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => *a *= b,
            _ => *self = &*self * rhs,
        }
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{}/{}", r.numer(), r.denom())
}

/// `p/q` for rationals, `p/q+r/s*sqrt(d)` otherwise.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.rational_part(), f)?;
        if let Some(d) = self.radicand() {
            let q = self.surd_part();
            if !q.is_negative() {
                f.write_str("+")?;
            }
            fmt_rational(&q, f)?;
            write!(f, "*sqrt({d})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `p`, `p/q`, or a decimal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarParseError> {
    let t = s.trim();
    let bad = || ScalarParseError::Malformed(s.to_string());
    if t.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = parse_integer(n).ok_or_else(bad)?;
        let d: BigInt = parse_integer(d).ok_or_else(bad)?;
        if d.is_zero() {
            return Err(ScalarParseError::ZeroDenominator(s.to_string()));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some(n) = parse_integer(t) {
        return Ok(BigRational::from_integer(n));
    }
    parse_decimal(t).ok_or_else(bad)
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Exact value of a decimal literal with optional exponent.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let r = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Some(r)
}

impl FromStr for Scalar {
    type Err = ScalarParseError;

    /// Accepts everything [`Display`](fmt::Display) prints.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let Some(star) = t.find("*sqrt(") else {
            return parse_rational(t).map(Scalar::from_rational);
        };
        let head = &t[..star];
        let tail = &t[star + "*sqrt(".len()..];
        let d_str = tail
            .strip_suffix(')')
            .ok_or_else(|| ScalarParseError::Malformed(s.to_string()))?;
        let d: BigInt = parse_integer(d_str).ok_or_else(|| ScalarParseError::BadRadicand(s.to_string()))?;
        if !d.is_positive() {
            return Err(ScalarParseError::BadRadicand(s.to_string()));
        }
        // split head into p and the signed surd coefficient at the last +/- not in position 0
        let split = head
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .last()
            .ok_or_else(|| ScalarParseError::Malformed(s.to_string()))?;
        let p = parse_rational(&head[..split])?;
        let q = parse_rational(head[split..].trim_start_matches('+'))?;
        Ok(Scalar::with_surd(p, q, &d))
    }
}

/// `gcd`-reduced integer helper used by samplers and printers.
pub fn rational(num: i64, den: i64) -> BigRational {
    let g = num.gcd(&den).max(1);
    BigRational::new(BigInt::from(num / g), BigInt::from(den / g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: i64) -> Scalar {
        Scalar::sqrt_of(&BigRational::from_integer(BigInt::from(n))).unwrap()
    }

    #[test]
    fn sqrt_of_perfect_square_is_rational() {
        assert_eq!(sqrt(49), Scalar::from_int(7));
        let q = Scalar::sqrt_of(&rational(9, 4)).unwrap();
        assert_eq!(q, Scalar::ratio(3, 2));
        assert!(Scalar::sqrt_of(&rational(-1, 2)).is_none());
    }

    #[test]
    fn square_free_reduction() {
        let s = sqrt(12);
        assert_eq!(s.radicand(), Some(&BigInt::from(3)));
        assert_eq!(s.surd_part(), rational(2, 1));
        // √(1/2) = (1/2)√2
        let h = Scalar::sqrt_of(&rational(1, 2)).unwrap();
        assert_eq!(h.to_string(), "0/1+1/2*sqrt(2)");
        assert_eq!(&h * &h, Scalar::ratio(1, 2));
    }

    #[test]
    fn field_arithmetic() {
        let r = sqrt(5);
        let a = &Scalar::from_int(1) + &r;
        let b = &Scalar::from_int(1) - &r;
        assert_eq!(&a * &b, Scalar::from_int(-4));
        assert_eq!(&(&a / &a), &Scalar::one());
        assert_eq!(&(&a - &r), &Scalar::one());
        assert!((&a - &a).is_rational());
    }

    #[test]
    fn exact_sign() {
        let r = sqrt(2);
        // 1 - √2 < 0, 3/2 - √2 > 0
        assert!((&Scalar::one() - &r).is_negative());
        assert!((&Scalar::ratio(3, 2) - &r).is_positive());
        assert!((&Scalar::ratio(-3, 2) + &r).is_negative());
        assert_eq!(Scalar::zero().signum(), Ordering::Equal);
    }

    #[test]
    fn display_parse_round_trip() {
        for s in ["1/1", "-3/7", "0/1", "1/2-3/4*sqrt(5)", "-1/3+2/1*sqrt(7)"] {
            let v: Scalar = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        assert_eq!("0.25".parse::<Scalar>().unwrap(), Scalar::ratio(1, 4));
        assert_eq!("-1.5e2".parse::<Scalar>().unwrap(), Scalar::from_int(-150));
        assert!("1//2".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
    }

    #[test]
    #[should_panic(expected = "different quadratic fields")]
    fn mixed_radicals_panic() {
        let _ = sqrt(2) + sqrt(3);
    }

    #[test]
    fn large_square_free_split() {
        // (2^40 + 15)^2 * 6 exceeds u64 but fits u128
        let big = BigInt::from((1u128 << 40) + 15);
        let t = &big * &big * BigInt::from(6);
        let (root, core) = square_free_split(&t);
        assert_eq!(core, BigInt::from(6));
        assert_eq!(root, big);
    }
}
