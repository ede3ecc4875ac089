//! Generic K-class recognition by degree-by-degree normalization.
//!
//! Corank one: bring the quadratic part to `y²`, then complete the square
//! degree by degree until a pure `x^k` survives. Corank two: read the root
//! structure of the cubic part; three distinct roots give `D_4`, a double
//! root leads to the `x²y` series, a triple root to the `x³` series.

use thiserror::Error;

use crate::jet::{Jet2, JetError};
use crate::kclass::{Indeterminacy, KClass, Sign};
use crate::scalar::Scalar;
use crate::trace::ReductionTrace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognizerError {
    #[error("expected corank {expected}, found {found}")]
    WrongCorank { expected: u32, found: u32 },
    #[error("the jet has a nonzero constant or linear term")]
    NotCritical,
    #[error("corank 2 with vanishing cubic part")]
    ZeroCubic,
    #[error("the cubic part does not have a double root")]
    NotDoubleRoot,
    #[error(transparent)]
    Jet(#[from] JetError),
}

fn raw(g: &Jet2, i: u32, j: u32) -> &Scalar {
    g.monomial_coeff(i, j)
}

/// Rank defect of the Hessian at the origin (0, 1 or 2).
pub fn corank(g: &Jet2) -> u32 {
    let (h20, h11, h02) = (raw(g, 2, 0), raw(g, 1, 1), raw(g, 0, 2));
    if h20.is_zero() && h11.is_zero() && h02.is_zero() {
        return 2;
    }
    let disc = &h11.pow(2) - &(&Scalar::from_int(4) * &(h20 * h02));
    if disc.is_zero() {
        1
    } else {
        0
    }
}

fn is_critical(g: &Jet2) -> bool {
    raw(g, 0, 0).is_zero() && raw(g, 1, 0).is_zero() && raw(g, 0, 1).is_zero()
}

/// Classifies any jet with `g(0) = 0`.
pub fn classify(g: &Jet2) -> Result<(KClass, ReductionTrace), RecognizerError> {
    if !raw(g, 0, 0).is_zero() {
        return Err(RecognizerError::NotCritical);
    }
    if !is_critical(g) {
        return Ok((KClass::Regular, ReductionTrace::new(g.clone())));
    }
    match corank(g) {
        0 => {
            let (h20, h11, h02) = (raw(g, 2, 0), raw(g, 1, 1), raw(g, 0, 2));
            let disc = &h11.pow(2) - &(&Scalar::from_int(4) * &(h20 * h02));
            let class = KClass::a(1, Sign::of_positive(disc.is_negative()));
            Ok((class, ReductionTrace::new(g.clone())))
        }
        1 => reduce_corank1(g),
        _ => match reduce_corank2(g) {
            Err(RecognizerError::ZeroCubic) => Ok((
                KClass::Indeterminate(Indeterminacy::ZeroCubic),
                ReductionTrace::new(g.clone()),
            )),
            other => other,
        },
    }
}

/// Corank one: returns `A_{k-1}` for the first surviving pure `x^k`.
pub fn reduce_corank1(g: &Jet2) -> Result<(KClass, ReductionTrace), RecognizerError> {
    if !is_critical(g) {
        return Err(RecognizerError::NotCritical);
    }
    let found = corank(g);
    if found != 1 {
        return Err(RecognizerError::WrongCorank { expected: 1, found });
    }
    let k = g.bound();
    let mut trace = ReductionTrace::new(g.clone());
    let (h20, h11, h02) = (raw(g, 2, 0).clone(), raw(g, 1, 1).clone(), raw(g, 0, 2).clone());
    let x = Jet2::x(k);
    let y = Jet2::y(k);
    // quadratic part is δ(y + t x)² or α x²
    let lead = if !h02.is_zero() {
        if !h11.is_zero() {
            let t = &h11 / &(&h02 * &Scalar::from_int(2));
            let v = &y - &x.scaled(&t);
            trace.substitute("linear change: quadratic part to a multiple of y^2", x.clone(), v)?;
        }
        h02
    } else {
        trace.substitute("swap x and y", y.clone(), x.clone())?;
        h20
    };
    trace.multiply("normalize y^2", Jet2::constant(k, lead.inv()))?;

    for deg in 3..=k {
        let cur = trace.terminal().clone();
        // y ← y − ½ Σ_{j≥1} c_ij x^i y^{j−1}
        let mut h = Jet2::zero(k);
        for j in 1..=deg {
            let c = raw(&cur, deg - j, j);
            if !c.is_zero() {
                h.set_monomial_coeff(deg - j, j - 1, c * &Scalar::ratio(1, 2))?;
            }
        }
        if !h.is_zero() {
            trace.substitute(format!("complete the square in degree {deg}"), x.clone(), &y - &h)?;
        }
        let c = raw(trace.terminal(), deg, 0);
        if !c.is_zero() {
            return Ok((KClass::a(deg - 1, Sign::of_positive(c.is_positive())), trace));
        }
    }
    Ok((KClass::Indeterminate(Indeterminacy::AtLeastA(k)), trace))
}

/// Raw cubic coefficients `(A, B, C, D)` of `A x³ + B x²y + C xy² + D y³`.
fn cubic(g: &Jet2) -> [Scalar; 4] {
    [
        raw(g, 3, 0).clone(),
        raw(g, 2, 1).clone(),
        raw(g, 1, 2).clone(),
        raw(g, 0, 3).clone(),
    ]
}

/// Discriminant `B²C² − 4AC³ − 4B³D − 27A²D² + 18ABCD` of a binary cubic.
pub fn cubic_discriminant(c: &[Scalar; 4]) -> Scalar {
    let [a, b, cc, d] = c;
    let n = |v: i64| Scalar::from_int(v);
    b.pow(2) * cc.pow(2) - n(4) * a * cc.pow(3) - n(4) * b.pow(3) * d - n(27) * a.pow(2) * d.pow(2)
        + n(18) * a * b * cc * d
}

/// Hessian covariant `(3AC − B²) x² + (9AD − BC) xy + (3BD − C²) y²`.
fn hessian_covariant(c: &[Scalar; 4]) -> [Scalar; 3] {
    let [a, b, cc, d] = c;
    let n = |v: i64| Scalar::from_int(v);
    [
        n(3) * a * cc - b.pow(2),
        n(9) * a * d - b * cc,
        n(3) * b * d - cc.pow(2),
    ]
}

/// Corank two with nonzero cubic part.
pub fn reduce_corank2(g: &Jet2) -> Result<(KClass, ReductionTrace), RecognizerError> {
    if !is_critical(g) {
        return Err(RecognizerError::NotCritical);
    }
    let found = corank(g);
    if found != 2 {
        return Err(RecognizerError::WrongCorank { expected: 2, found });
    }
    let c = cubic(g);
    if c.iter().all(Scalar::is_zero) {
        return Err(RecognizerError::ZeroCubic);
    }
    let disc = cubic_discriminant(&c);
    if !disc.is_zero() {
        // three real lines for Δ > 0 (x²y − y³), one for Δ < 0
        let class = KClass::d(4, Sign::of_positive(disc.is_negative()));
        return Ok((class, ReductionTrace::new(g.clone())));
    }
    let h = hessian_covariant(&c);
    if h.iter().all(Scalar::is_zero) {
        reduce_triple_root(g, &c)
    } else {
        let (series, trace) = d_series(g, true)?;
        let k = g.bound();
        match series.iter().find(|(_, v)| !v.is_zero()) {
            Some((deg, v)) => Ok((KClass::d(deg + 1, Sign::of_positive(v.is_positive())), trace)),
            None => Ok((KClass::Indeterminate(Indeterminacy::AtLeastD(k + 2)), trace)),
        }
    }
}

fn reduce_triple_root(g: &Jet2, c: &[Scalar; 4]) -> Result<(KClass, ReductionTrace), RecognizerError> {
    let k = g.bound();
    let x = Jet2::x(k);
    let y = Jet2::y(k);
    let mut trace = ReductionTrace::new(g.clone());
    let lead = if !c[0].is_zero() {
        // A (x + t y)³ with t = B / 3A
        let t = &c[1] / &(&c[0] * &Scalar::from_int(3));
        if !t.is_zero() {
            trace.substitute(
                "linear change: cubic part to a multiple of x^3",
                &x - &y.scaled(&t),
                y.clone(),
            )?;
        }
        c[0].clone()
    } else {
        trace.substitute("swap x and y", y.clone(), x.clone())?;
        c[3].clone()
    };
    trace.multiply("normalize x^3", Jet2::constant(k, lead.inv()))?;

    for deg in 4..=k.min(5) {
        let cur = trace.terminal().clone();
        // x ← x − ⅓ Σ_{i≥2} c_ij x^{i−2} y^j
        let mut h = Jet2::zero(k);
        for i in 2..=deg {
            let cij = raw(&cur, i, deg - i);
            if !cij.is_zero() {
                h.set_monomial_coeff(i - 2, deg - i, cij * &Scalar::ratio(1, 3))?;
            }
        }
        if !h.is_zero() {
            trace.substitute(
                format!("remove x^2-divisible terms in degree {deg}"),
                &x - &h,
                y.clone(),
            )?;
        }
        let t = trace.terminal();
        let pair = (raw(t, 1, deg - 1).clone(), raw(t, 0, deg).clone());
        if deg == 4 {
            if !pair.1.is_zero() {
                return Ok((KClass::E(6), trace));
            }
            if !pair.0.is_zero() {
                return Ok((KClass::E(7), trace));
            }
        } else {
            if !pair.1.is_zero() {
                return Ok((KClass::E(8), trace));
            }
            if !pair.0.is_zero() {
                return Ok((KClass::EStar, trace));
            }
        }
    }
    Ok((KClass::Indeterminate(Indeterminacy::BeyondEStar), trace))
}

/// Normalizes a double-root cubic to `x²y` and runs the `D`-series changes.
///
/// Returns, for each degree `k ≥ 4` handled, the coefficient of `y^k` left
/// after that degree's change. With `stop_at_first` the walk ends at the
/// first nonzero one.
pub fn d_series(g: &Jet2, stop_at_first: bool) -> Result<(Vec<(u32, Scalar)>, ReductionTrace), RecognizerError> {
    d_series_upto(g, g.bound(), stop_at_first)
}

/// [`d_series`] stopped after degree `top`.
pub fn d_series_upto(
    g: &Jet2,
    top: u32,
    stop_at_first: bool,
) -> Result<(Vec<(u32, Scalar)>, ReductionTrace), RecognizerError> {
    if !is_critical(g) {
        return Err(RecognizerError::NotCritical);
    }
    let found = corank(g);
    if found != 2 {
        return Err(RecognizerError::WrongCorank { expected: 2, found });
    }
    let c = cubic(g);
    let h = hessian_covariant(&c);
    if !cubic_discriminant(&c).is_zero() || h.iter().all(Scalar::is_zero) {
        return Err(RecognizerError::NotDoubleRoot);
    }
    let k = g.bound();
    let x = Jet2::x(k);
    let y = Jet2::y(k);
    // the Hessian covariant of a double-root cubic is a multiple of L1²
    let (l1, l2) = if !h[0].is_zero() {
        let s = &h[1] / &(&h[0] * &Scalar::from_int(2));
        let r = c[0].clone();
        let q = &c[1] - &(&(&s * &r) * &Scalar::from_int(2));
        ((Scalar::one(), s), (r, q))
    } else {
        ((Scalar::zero(), Scalar::one()), (c[2].clone(), c[3].clone()))
    };
    // new coordinates X = L1, Y = L2; substitute the inverse map
    let det = &(&l1.0 * &l2.1) - &(&l1.1 * &l2.0);
    let inv = [[&l2.1 / &det, -&(&l1.1 / &det)], [-&(&l2.0 / &det), &l1.0 / &det]];
    let u = &x.scaled(&inv[0][0]) + &y.scaled(&inv[0][1]);
    let v = &x.scaled(&inv[1][0]) + &y.scaled(&inv[1][1]);
    let mut trace = ReductionTrace::new(g.clone());
    trace.substitute("linear change: cubic part to x^2 y", u, v)?;

    let mut series = Vec::new();
    for deg in 4..=top.min(k) {
        let cur = trace.terminal().clone();
        let mut p = Jet2::zero(k);
        for i in 1..deg {
            let cij = raw(&cur, i, deg - i);
            if !cij.is_zero() {
                p.set_monomial_coeff(i - 1, deg - i - 1, cij * &Scalar::ratio(1, 2))?;
            }
        }
        let ck0 = raw(&cur, deg, 0).clone();
        let mut q = Jet2::zero(k);
        if !ck0.is_zero() {
            q.set_monomial_coeff(deg - 2, 0, ck0)?;
        }
        if !p.is_zero() || !q.is_zero() {
            trace.substitute(
                format!("remove mixed and pure-x terms in degree {deg}"),
                &x - &p,
                &y - &q,
            )?;
        }
        let c0k = raw(trace.terminal(), 0, deg).clone();
        let nonzero = !c0k.is_zero();
        series.push((deg, c0k));
        if nonzero && stop_at_first {
            break;
        }
    }
    Ok((series, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jet(terms: &[(u32, u32, i64, i64)]) -> Jet2 {
        Jet2::from_monomial_coeffs(7, terms.iter().map(|&(i, j, p, q)| (i, j, Scalar::ratio(p, q)))).unwrap()
    }

    fn class(terms: &[(u32, u32, i64, i64)]) -> KClass {
        let (c, t) = classify(&jet(terms)).unwrap();
        assert!(t.replay().unwrap());
        c
    }

    #[test]
    fn corank_one_examples() {
        assert_eq!(class(&[(0, 2, 1, 1), (3, 0, 1, 1)]), KClass::A { k: 2, sign: None });
        assert_eq!(class(&[(0, 2, 1, 1), (2, 1, 1, 1)]), KClass::a(3, Sign::Minus));
        assert_eq!(
            class(&[(0, 2, 1, 1)]),
            KClass::Indeterminate(Indeterminacy::AtLeastA(7))
        );
        assert_eq!(class(&[(2, 0, 1, 1), (0, 4, 1, 1)]), KClass::a(3, Sign::Plus));
        assert_eq!(class(&[(2, 0, 1, 1), (0, 2, -1, 1)]), KClass::a(1, Sign::Minus));
    }

    #[test]
    fn corank_two_examples() {
        assert_eq!(class(&[(3, 0, 1, 1), (0, 4, 1, 1)]), KClass::E(6));
        assert_eq!(class(&[(3, 0, 1, 1), (1, 3, 1, 1)]), KClass::E(7));
        assert_eq!(class(&[(3, 0, 1, 1), (0, 5, 1, 1)]), KClass::E(8));
        assert_eq!(class(&[(3, 0, 1, 1), (1, 4, 1, 1)]), KClass::EStar);
        assert_eq!(class(&[(2, 1, 1, 1), (0, 3, -1, 1)]), KClass::d(4, Sign::Minus));
        assert_eq!(class(&[(2, 1, 1, 1), (0, 3, 1, 1)]), KClass::d(4, Sign::Plus));
        assert_eq!(class(&[(2, 1, 1, 1), (0, 5, -1, 1)]), KClass::d(6, Sign::Minus));
        // x³ − 3xy² − 2y³ = (x + y)²(x − 2y)
        let c = class(&[(3, 0, 1, 1), (1, 2, -3, 1), (0, 3, -2, 1), (0, 4, 1, 1)]);
        assert_eq!(c, KClass::D { k: 5, sign: None });
    }
}
