//! Truncated bivariate polynomials with exact coefficients.
//!
//! Coefficients are addressed in the derivative convention used throughout
//! the crate: the value `a_ij` stored at `(i, j)` contributes
//! `a_ij / (i! j!) · x^i y^j`. So `a_ij` is the `(i, j)` partial derivative
//! at the origin. Internally the monomial coefficients are kept, so products
//! and substitutions never shuffle factorials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::scalar::Scalar;

/// Default truncation degree; the highest coefficient any classifier reads is `a_70`.
pub const DEFAULT_DEGREE_BOUND: u32 = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JetError {
    #[error("degree bounds differ ({0} vs {1})")]
    BoundMismatch(u32, u32),
    #[error("substituted jet has a nonzero constant term")]
    NonzeroConstant,
    #[error("multiplier is not a unit (zero constant term)")]
    NotAUnit,
    #[error("monomial x^{0} y^{1} exceeds the degree bound {2}")]
    OutOfBound(u32, u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

/// Position of `x^i y^j` in graded order: by total degree, then by falling
/// power of `x`.
#[inline]
fn index(i: u32, j: u32) -> usize {
    let d = (i + j) as usize;
    d * (d + 1) / 2 + j as usize
}

#[inline]
fn len_for(bound: u32) -> usize {
    let k = bound as usize + 1;
    k * (k + 1) / 2
}

/// All exponent pairs of degree at most `bound`, in graded order.
pub fn monomials(bound: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=bound).flat_map(|d| (0..=d).map(move |j| (d - j, j)))
}

static FACTORIALS: LazyLock<Vec<BigRational>> = LazyLock::new(|| {
    let mut v = vec![BigRational::from_integer(BigInt::from(1))];
    for n in 1..=40u32 {
        let last = v.last().unwrap().clone();
        v.push(last * BigRational::from_integer(BigInt::from(n)));
    }
    v
});

fn factorial(n: u32) -> &'static BigRational {
    &FACTORIALS[n as usize]
}

static ZERO: LazyLock<Scalar> = LazyLock::new(Scalar::zero);

#[derive(Clone, PartialEq, Eq)]
pub struct Jet2 {
    bound: u32,
    // monomial coefficients, graded order
    terms: Vec<Scalar>,
}

impl Jet2 {
    pub fn zero(bound: u32) -> Self {
        Jet2 {
            bound,
            terms: vec![Scalar::zero(); len_for(bound)],
        }
    }

    pub fn constant(bound: u32, c: Scalar) -> Self {
        let mut j = Jet2::zero(bound);
        j.terms[0] = c;
        j
    }

    pub fn x(bound: u32) -> Self {
        Jet2::monomial(bound, 1, 0, Scalar::one())
    }

    pub fn y(bound: u32) -> Self {
        Jet2::monomial(bound, 0, 1, Scalar::one())
    }

    /// `c · x^i y^j` (plain monomial coefficient); zero if beyond the bound.
    pub fn monomial(bound: u32, i: u32, j: u32, c: Scalar) -> Self {
        let mut jet = Jet2::zero(bound);
        if i + j <= bound {
            jet.terms[index(i, j)] = c;
        }
        jet
    }

    /// Builds from derivative-convention coefficients `a_ij`.
    pub fn from_coeffs<I>(bound: u32, coeffs: I) -> Result<Self, JetError>
    where
        I: IntoIterator<Item = (u32, u32, Scalar)>,
    {
        let mut jet = Jet2::zero(bound);
        for (i, j, a) in coeffs {
            jet.set_coeff(i, j, a)?;
        }
        Ok(jet)
    }

    /// Builds from plain monomial coefficients.
    pub fn from_monomial_coeffs<I>(bound: u32, coeffs: I) -> Result<Self, JetError>
    where
        I: IntoIterator<Item = (u32, u32, Scalar)>,
    {
        let mut jet = Jet2::zero(bound);
        for (i, j, c) in coeffs {
            if i + j > bound {
                return Err(JetError::OutOfBound(i, j, bound));
            }
            let slot = &mut jet.terms[index(i, j)];
            *slot += &c;
        }
        Ok(jet)
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// `a_ij`; zero outside the bound.
    pub fn coeff(&self, i: u32, j: u32) -> Scalar {
        if i + j > self.bound {
            return Scalar::zero();
        }
        let c = &self.terms[index(i, j)];
        if c.is_zero() {
            return Scalar::zero();
        }
        c * &Scalar::from_rational(factorial(i) * factorial(j))
    }

    /// Coefficient of `x^i y^j` itself, i.e. `a_ij / (i! j!)`.
    pub fn monomial_coeff(&self, i: u32, j: u32) -> &Scalar {
        if i + j > self.bound {
            return &ZERO;
        }
        &self.terms[index(i, j)]
    }

    pub fn set_coeff(&mut self, i: u32, j: u32, a: Scalar) -> Result<(), JetError> {
        if i + j > self.bound {
            return Err(JetError::OutOfBound(i, j, self.bound));
        }
        self.terms[index(i, j)] = if a.is_zero() {
            a
        } else {
            &a / &Scalar::from_rational(factorial(i) * factorial(j))
        };
        Ok(())
    }

    pub fn set_monomial_coeff(&mut self, i: u32, j: u32, c: Scalar) -> Result<(), JetError> {
        if i + j > self.bound {
            return Err(JetError::OutOfBound(i, j, self.bound));
        }
        self.terms[index(i, j)] = c;
        Ok(())
    }

    /// Nonzero terms as `(i, j, monomial coefficient)` in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Scalar)> + '_ {
        monomials(self.bound)
            .zip(self.terms.iter())
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, c))
    }

    /// Nonzero `(i, j, a_ij)` in graded order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u32, u32, Scalar)> + '_ {
        self.terms().map(|(i, j, _)| (i, j, self.coeff(i, j)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(Scalar::is_zero)
    }

    pub fn is_one_constant(&self) -> bool {
        self.terms[0].is_one() && self.terms[1..].iter().all(Scalar::is_zero)
    }

    /// Lowest total degree carrying a nonzero term.
    pub fn order(&self) -> Option<u32> {
        self.terms().next().map(|(i, j, _)| i + j)
    }

    /// The homogeneous degree-`d` part as a jet with the same bound.
    pub fn homogeneous(&self, d: u32) -> Jet2 {
        let mut out = Jet2::zero(self.bound);
        if d <= self.bound {
            for j in 0..=d {
                let k = index(d - j, j);
                out.terms[k] = self.terms[k].clone();
            }
        }
        out
    }

    /// Drops every term of degree above `k`, keeping the bound.
    pub fn truncated(&self, k: u32) -> Jet2 {
        let mut out = self.clone();
        for (n, (i, j)) in monomials(self.bound).enumerate() {
            if i + j > k {
                out.terms[n] = Scalar::zero();
            }
        }
        out
    }

    /// Same polynomial viewed with another bound (truncating if smaller).
    pub fn with_bound(&self, bound: u32) -> Jet2 {
        let mut out = Jet2::zero(bound);
        for (i, j, c) in self.terms() {
            if i + j <= bound {
                out.terms[index(i, j)] = c.clone();
            }
        }
        out
    }

    pub fn scaled(&self, s: &Scalar) -> Jet2 {
        Jet2 {
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|c| if c.is_zero() { Scalar::zero() } else { c * s })
                .collect(),
        }
    }

    fn check_bound(&self, other: &Jet2) -> Result<(), JetError> {
        if self.bound != other.bound {
            return Err(JetError::BoundMismatch(self.bound, other.bound));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Jet2) -> Result<Jet2, JetError> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (a, b) in out.terms.iter_mut().zip(&other.terms) {
            if !b.is_zero() {
                *a += b;
            }
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Jet2) -> Result<Jet2, JetError> {
        self.check_bound(other)?;
        let mut out = self.clone();
        for (a, b) in out.terms.iter_mut().zip(&other.terms) {
            if !b.is_zero() {
                *a -= b;
            }
        }
        Ok(out)
    }

    /// Product truncated to the common bound.
    pub fn checked_mul(&self, other: &Jet2) -> Result<Jet2, JetError> {
        self.check_bound(other)?;
        let d = field_of(&[self, other]);
        Ok(Lifted::lift(self, &d).mul(&Lifted::lift(other, &d)).lower())
    }

    /// `self(u(x, y), v(x, y))`, truncated. `u` and `v` must vanish at the origin.
    pub fn compose(&self, u: &Jet2, v: &Jet2) -> Result<Jet2, JetError> {
        self.check_bound(u)?;
        self.check_bound(v)?;
        if !u.terms[0].is_zero() || !v.terms[0].is_zero() {
            return Err(JetError::NonzeroConstant);
        }
        let k = self.bound;
        let x = Jet2::x(k);
        let y = Jet2::y(k);
        // fast paths for the substitutions used most: x ↦ x or y ↦ y
        if *u == x && *v == y {
            return Ok(self.clone());
        }
        if *v == y {
            return Ok(self.horner_in_x(u));
        }
        if *u == x {
            return Ok(self.swapped().horner_in_x(&v.swapped()).swapped());
        }
        // general case: Σ_i u^i · (Σ_j c_ij v^j)
        let d = field_of(&[self, u, v]);
        let me = Lifted::lift(self, &d);
        let lv = Lifted::lift(v, &d);
        let mut vpow = vec![Lifted::one(k, &d)];
        for n in 1..=k {
            let next = vpow[n as usize - 1].mul(&lv);
            vpow.push(next);
        }
        let column = |i: u32| {
            let mut acc = Lifted::zero(k, &d);
            for j in 0..=(k - i) {
                let at = index(i, j);
                if !me.is_zero_at(at) {
                    acc = acc.add(&vpow[j as usize].scaled(&me, at));
                }
            }
            acc
        };
        Ok(horner(k, column, &Lifted::lift(u, &d)).lower())
    }

    /// `self(u, y)` by Horner's rule in the first slot.
    fn horner_in_x(&self, u: &Jet2) -> Jet2 {
        let k = self.bound;
        let d = field_of(&[self, u]);
        let me = Lifted::lift(self, &d);
        let column = |i: u32| {
            let mut acc = Lifted::zero(k, &d);
            acc.den = me.den.clone();
            for j in 0..=(k - i) {
                acc.set_from(index(0, j), &me, index(i, j));
            }
            acc
        };
        horner(k, column, &Lifted::lift(u, &d)).lower()
    }

    /// Exchanges the roles of `x` and `y`.
    pub fn swapped(&self) -> Jet2 {
        let mut out = Jet2::zero(self.bound);
        for (i, j, c) in self.terms() {
            out.terms[index(j, i)] = c.clone();
        }
        out
    }

    /// Formal partial derivative; the bound drops by one.
    pub fn partial(&self, axis: Axis) -> Jet2 {
        let nb = self.bound.saturating_sub(1);
        let mut out = Jet2::zero(nb);
        for (i, j, c) in self.terms() {
            let (e, ni, nj) = match axis {
                Axis::X if i > 0 => (i, i - 1, j),
                Axis::Y if j > 0 => (j, i, j - 1),
                _ => continue,
            };
            if ni + nj <= nb {
                out.terms[index(ni, nj)] = c * &Scalar::from_int(e as i64);
            }
        }
        out
    }

    /// Multiplies by a unit (a jet with nonzero constant term).
    pub fn scale_and_unit_multiply(&self, unit: &Jet2) -> Result<Jet2, JetError> {
        if unit.terms[0].is_zero() {
            return Err(JetError::NotAUnit);
        }
        if unit.is_one_constant() {
            self.check_bound(unit)?;
            return Ok(self.clone());
        }
        self.checked_mul(unit)
    }

    /// Evaluates the polynomial at a point.
    pub fn evaluate(&self, x: &Scalar, y: &Scalar) -> Scalar {
        let mut total = Scalar::zero();
        for (i, j, c) in self.terms() {
            total += &(c * &(&x.pow(i) * &y.pow(j)));
        }
        total
    }
}

impl Add for &Jet2 {
    type Output = Jet2;
    /// Panics on mismatched bounds; see [`Jet2::checked_add`].
    fn add(self, rhs: &Jet2) -> Jet2 {
        self.checked_add(rhs).expect("jet addition")
    }
}

impl Sub for &Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        self.checked_sub(rhs).expect("jet subtraction")
    }
}

impl Mul for &Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        self.checked_mul(rhs).expect("jet multiplication")
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 {
            bound: self.bound,
            terms: self.terms.iter().map(|c| -c).collect(),
        }
    }
}

/// Human-readable sum of monomials, e.g. `1/2*y^2 + 1/6*x^3`.
impl fmt::Display for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            match (i, j) {
                (0, 0) => {}
                _ => {
                    if i > 0 {
                        write!(f, "*x^{i}")?;
                    }
                    if j > 0 {
                        write!(f, "*y^{j}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({})", self.bound + 1)
    }
}

impl fmt::Debug for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Common quadratic field of the jets' coefficients, if any.
fn field_of(jets: &[&Jet2]) -> Option<Arc<BigInt>> {
    let mut found: Option<Arc<BigInt>> = None;
    for j in jets {
        for c in &j.terms {
            if let (_, _, _, Some(d)) = c.int_parts() {
                match &found {
                    None => found = Some(d),
                    Some(f) => assert!(
                        **f == *d,
                        "scalars from different quadratic fields: sqrt({f}) and sqrt({d})"
                    ),
                }
            }
        }
    }
    found
}

/// A jet over `Z[√d]` with one shared denominator. Sums and products stay
/// unreduced; [`Lifted::lower`] takes one gcd per coefficient.
#[derive(Clone)]
struct Lifted {
    bound: u32,
    den: BigInt,
    p: Vec<BigInt>,
    /// Empty over Q.
    q: Vec<BigInt>,
    d: Option<Arc<BigInt>>,
}

impl Lifted {
    fn zero(bound: u32, d: &Option<Arc<BigInt>>) -> Self {
        let n = len_for(bound);
        Lifted {
            bound,
            den: BigInt::one(),
            p: vec![BigInt::zero(); n],
            q: if d.is_some() {
                vec![BigInt::zero(); n]
            } else {
                Vec::new()
            },
            d: d.clone(),
        }
    }

    fn one(bound: u32, d: &Option<Arc<BigInt>>) -> Self {
        let mut l = Lifted::zero(bound, d);
        l.p[0] = BigInt::one();
        l
    }

    fn lift(j: &Jet2, d: &Option<Arc<BigInt>>) -> Self {
        let parts: Vec<_> = j.terms.iter().map(Scalar::int_parts).collect();
        let mut den = BigInt::one();
        for (p, q, r, _) in &parts {
            if !(p.is_zero() && q.is_zero()) && !r.is_one() && !(&den % r).is_zero() {
                den = den.lcm(r);
            }
        }
        let mut out = Lifted::zero(j.bound, d);
        for (n, (p, q, r, _)) in parts.into_iter().enumerate() {
            if p.is_zero() && q.is_zero() {
                continue;
            }
            let f = &den / &r;
            out.p[n] = p * &f;
            if d.is_some() {
                out.q[n] = q * &f;
            }
        }
        out.den = den;
        out
    }

    fn lower(self) -> Jet2 {
        let Lifted { bound, den, p, q, d } = self;
        let mut q = q.into_iter();
        let terms = p
            .into_iter()
            .map(|p| {
                let q = q.next().unwrap_or_default();
                if p.is_zero() && q.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::from_int_parts(p, q, den.clone(), d.clone())
                }
            })
            .collect();
        Jet2 { bound, terms }
    }

    fn is_zero_at(&self, n: usize) -> bool {
        self.p[n].is_zero() && self.q.get(n).is_none_or(BigInt::is_zero)
    }

    fn set_from(&mut self, to: usize, src: &Lifted, from: usize) {
        self.p[to] = src.p[from].clone();
        if !self.q.is_empty() {
            self.q[to] = src.q[from].clone();
        }
    }

    /// `self · c`, where `c` is coefficient `at` of `src`.
    fn scaled(&self, src: &Lifted, at: usize) -> Lifted {
        let (cp, cq) = (&src.p[at], src.q.get(at));
        let mut out = Lifted::zero(self.bound, &self.d);
        out.den = &self.den * &src.den;
        for n in 0..self.p.len() {
            if self.is_zero_at(n) {
                continue;
            }
            match (self.q.get(n), cq, &self.d) {
                (Some(sq), Some(cq), Some(d)) => {
                    out.p[n] = &self.p[n] * cp + sq * cq * &**d;
                    out.q[n] = &self.p[n] * cq + sq * cp;
                }
                _ => out.p[n] = &self.p[n] * cp,
            }
        }
        out
    }

    fn mul(&self, other: &Lifted) -> Lifted {
        let k = self.bound;
        let mono: Vec<(u32, u32)> = monomials(k).collect();
        let lhs: Vec<usize> = (0..self.p.len()).filter(|&n| !self.is_zero_at(n)).collect();
        let rhs: Vec<usize> = (0..other.p.len()).filter(|&n| !other.is_zero_at(n)).collect();
        let mut out = Lifted::zero(k, &self.d);
        out.den = &self.den * &other.den;
        for &a in &lhs {
            let (i1, j1) = mono[a];
            for &b in &rhs {
                let (i2, j2) = mono[b];
                // graded order: once the degree overflows, the rest does too
                if i1 + j1 + i2 + j2 > k {
                    break;
                }
                let at = index(i1 + i2, j1 + j2);
                match &self.d {
                    None => out.p[at] += &self.p[a] * &other.p[b],
                    Some(d) => {
                        let (p1, q1, p2, q2) = (&self.p[a], &self.q[a], &other.p[b], &other.q[b]);
                        out.p[at] += p1 * p2 + q1 * q2 * &**d;
                        out.q[at] += p1 * q2 + q1 * p2;
                    }
                }
            }
        }
        out
    }

    /// Rescales to denominator `den`, which must be a multiple of the current one.
    fn rescale(&mut self, den: &BigInt) {
        if *den == self.den {
            return;
        }
        let f = den / &self.den;
        for v in self.p.iter_mut().chain(self.q.iter_mut()) {
            if !v.is_zero() {
                *v *= &f;
            }
        }
        self.den = den.clone();
    }

    fn add(mut self, other: &Lifted) -> Lifted {
        let scaled;
        let other = if self.den == other.den {
            other
        } else if (&other.den % &self.den).is_zero() {
            self.rescale(&other.den);
            other
        } else {
            let den = if (&self.den % &other.den).is_zero() {
                self.den.clone()
            } else {
                &self.den * &other.den
            };
            self.rescale(&den);
            let mut o = other.clone();
            o.rescale(&den);
            scaled = o;
            &scaled
        };
        for (a, b) in self.p.iter_mut().zip(&other.p) {
            *a += b;
        }
        for (a, b) in self.q.iter_mut().zip(&other.q) {
            *a += b;
        }
        self
    }
}

/// `Σ_i u^i · column(i)` by Horner's rule.
fn horner(k: u32, column: impl Fn(u32) -> Lifted, u: &Lifted) -> Lifted {
    let mut acc = column(k);
    for i in (0..k).rev() {
        acc = acc.mul(u).add(&column(i));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn jet(bound: u32, coeffs: &[(u32, u32, i64)]) -> Jet2 {
        Jet2::from_coeffs(bound, coeffs.iter().map(|&(i, j, a)| (i, j, q(a)))).unwrap()
    }

    #[test]
    fn add_identities() {
        let k = 4;
        let sum = &Jet2::x(k) + &Jet2::y(k);
        assert_eq!(sum, jet(k, &[(1, 0, 1), (0, 1, 1)]));
        let f = jet(k, &[(0, 2, 3), (3, 0, -2)]);
        assert_eq!(&f + &Jet2::zero(k), f);
        assert!((&jet(k, &[(0, 2, 1)]) + &jet(k, &[(0, 2, -1)])).is_zero());
        assert_eq!(
            Jet2::zero(3).checked_add(&Jet2::zero(4)),
            Err(JetError::BoundMismatch(3, 4))
        );
    }

    #[test]
    fn products() {
        let k = 5;
        let xy = &Jet2::x(k) * &Jet2::y(k);
        assert_eq!(xy.coeff(1, 1), q(1));
        let (x, y) = (Jet2::x(k), Jet2::y(k));
        let dif = &(&x + &y) * &(&x - &y);
        // x² − y² has a_20 = 2, a_02 = −2 in the derivative convention
        assert_eq!(dif, jet(k, &[(2, 0, 2), (0, 2, -2)]));
        let x2 = jet(2, &[(2, 0, 2)]);
        assert!((&x2 * &Jet2::y(2)).is_zero());
    }

    #[test]
    fn compose_examples() {
        let k = 4;
        let f = jet(k, &[(0, 2, 2)]); // y²
        let v = &Jet2::y(k) - &Jet2::x(k);
        let g = f.compose(&Jet2::x(k), &v).unwrap();
        assert_eq!(g, jet(k, &[(0, 2, 2), (1, 1, -2), (2, 0, 2)]));
        let h = jet(k, &[(3, 0, 5), (1, 2, -1), (0, 4, 7)]);
        assert_eq!(h.compose(&Jet2::x(k), &Jet2::y(k)).unwrap(), h);
        let shifted = &Jet2::x(k) + &Jet2::constant(k, q(1));
        assert_eq!(h.compose(&shifted, &Jet2::y(k)), Err(JetError::NonzeroConstant));
    }

    #[test]
    fn completing_the_square_kills_y_terms_of_degree_three() {
        // y² + Σ_{i+j=3} a_ij/(i!j!) x^i y^j under y ↦ y − ½ Σ_{j≥1} (a_ij/(i!j!)) x^i y^{j−1}
        let k = 3;
        let mut f = jet(k, &[(0, 2, 2), (3, 0, 5), (2, 1, 3), (1, 2, -4), (0, 3, 6)]);
        let mut shift = Jet2::zero(k);
        for (i, j) in [(2u32, 1u32), (1, 2), (0, 3)] {
            let c = f.monomial_coeff(i, j).clone();
            shift.set_monomial_coeff(i, j - 1, &c * &Scalar::ratio(-1, 2)).unwrap();
        }
        let v = &Jet2::y(k) + &shift;
        f = f.compose(&Jet2::x(k), &v).unwrap();
        assert_eq!(f, jet(k, &[(0, 2, 2), (3, 0, 5)]));
    }

    #[test]
    fn partial_derivatives() {
        let x3 = jet(4, &[(3, 0, 6)]);
        assert_eq!(x3.partial(Axis::X), jet(3, &[(2, 0, 6)]));
        assert!(Jet2::constant(3, q(5)).partial(Axis::Y).is_zero());
        let x2y = jet(4, &[(2, 1, 1)]); // x²y/2
        assert_eq!(x2y.partial(Axis::X), jet(3, &[(1, 1, 1)]));
    }

    #[test]
    fn unit_multiplication() {
        let f = jet(4, &[(0, 2, 2)]);
        assert_eq!(f.scale_and_unit_multiply(&Jet2::constant(4, q(1))).unwrap(), f);
        assert_eq!(
            f.scale_and_unit_multiply(&Jet2::constant(4, q(2))).unwrap(),
            jet(4, &[(0, 2, 4)])
        );
        assert_eq!(f.scale_and_unit_multiply(&Jet2::x(4)), Err(JetError::NotAUnit));
    }

    #[test]
    fn graded_order() {
        let order: Vec<_> = monomials(2).collect();
        assert_eq!(order, vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]);
    }
}
