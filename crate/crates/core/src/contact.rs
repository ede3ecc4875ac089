//! Contact of a parabolic surface with cylinders along its asymptotic
//! direction: `F(x, y) = f(x, y) − γ(y)`.

use std::fmt;

use thiserror::Error;

use crate::jet::Jet2;
use crate::kclass::{Indeterminacy, KClass, Sign};
use crate::monge::{InvariantSet, MongeSurface};
use crate::recognizer::{self, d_series_upto};
use crate::scalar::Scalar;
use crate::sign::{SignRule, SignTest};
use crate::trace::ReductionTrace;

/// Directrix `γ(y) = γ1 y + γ2 y²/2 + γ3 y³/6 + …`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BaseCurve {
    gamma: Vec<Scalar>,
}

impl BaseCurve {
    /// `gamma[0]` is `γ1`. Trailing zeros are dropped.
    pub fn new(mut gamma: Vec<Scalar>) -> Self {
        while gamma.last().is_some_and(Scalar::is_zero) {
            gamma.pop();
        }
        BaseCurve { gamma }
    }

    pub fn zero() -> Self {
        BaseCurve::default()
    }

    /// `γ_j` for `j ≥ 1`; zero past the stored length.
    pub fn gamma(&self, j: u32) -> Scalar {
        if j == 0 {
            return Scalar::zero();
        }
        self.gamma.get(j as usize - 1).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> u32 {
        self.gamma.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.gamma
    }

    /// Returns a copy with `γ_j` replaced.
    pub fn with(&self, j: u32, value: Scalar) -> BaseCurve {
        let mut g = self.gamma.clone();
        if g.len() < j as usize {
            g.resize(j as usize, Scalar::zero());
        }
        g[j as usize - 1] = value;
        BaseCurve::new(g)
    }

    pub fn as_jet(&self, bound: u32) -> Jet2 {
        let mut jet = Jet2::zero(bound);
        for (n, g) in self.gamma.iter().enumerate() {
            let j = n as u32 + 1;
            if j <= bound && !g.is_zero() {
                jet.set_coeff(0, j, g.clone()).expect("within bound");
            }
        }
        jet
    }
}

impl fmt::Display for BaseCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gamma.is_empty() {
            return f.write_str("0");
        }
        for (n, g) in self.gamma.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "g{}={}", n + 1, g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BaseCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaseCurve({self})")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactFunction {
    pub jet: Jet2,
    pub curve: BaseCurve,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ContactError {
    #[error("base curve has {0} coefficients but the degree bound is {1}")]
    CurveTooLong(u32, u32),
    #[error("target {target} unreachable: {reason}")]
    TargetUnreachable { target: String, reason: String },
}

pub fn contact_function(s: &MongeSurface, c: &BaseCurve) -> Result<ContactFunction, ContactError> {
    let k = s.bound();
    if c.len() > k {
        return Err(ContactError::CurveTooLong(c.len(), k));
    }
    Ok(ContactFunction {
        jet: s.jet() - &c.as_jet(k),
        curve: c.clone(),
    })
}

/// Outcome of the case analysis on the coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleVerdict {
    /// `None` when no closed-form rule decides and the reducer's label is used.
    pub class: Option<KClass>,
    pub rule: &'static str,
}

#[derive(Debug, Clone)]
pub struct ContactVerdict {
    /// Reported class: the rule label when one applies, else the reducer's.
    pub class: KClass,
    pub rule: RuleVerdict,
    pub reduced: KClass,
    pub trace: ReductionTrace,
    /// Rule label and reducer label coincide (vacuous when no rule applies).
    pub agree: bool,
}

fn boundary(what: &str) -> KClass {
    KClass::Indeterminate(Indeterminacy::Boundary(what.to_string()))
}

fn rv(class: KClass, rule: &'static str) -> RuleVerdict {
    RuleVerdict {
        class: Some(class),
        rule,
    }
}

fn defer(rule: &'static str) -> RuleVerdict {
    RuleVerdict { class: None, rule }
}

/// Case analysis on `γ` and the surface coefficients.
pub fn contact_rule(s: &MongeSurface, c: &BaseCurve, inv: &InvariantSet, sr: &SignRule) -> RuleVerdict {
    let t = |v: &Scalar| sr.test(v);
    let g1 = c.gamma(1);
    let g2 = c.gamma(2);
    let g3 = c.gamma(3);
    let a02 = s.a(0, 2);
    let (a30, a21, a12, a03, a40) = (s.a(3, 0), s.a(2, 1), s.a(1, 2), s.a(0, 3), s.a(4, 0));

    match t(&g1) {
        SignTest::Indeterminate => return rv(boundary("gamma_1"), "regularity test"),
        s if s.is_nonzero() => return rv(KClass::Regular, "gamma_1 != 0: regular"),
        _ => {}
    }
    let q2 = a02 - &g2;
    let t30 = t(a30);
    if t(&q2) == SignTest::Indeterminate {
        return rv(boundary("a_02 - gamma_2"), "quadratic degeneracy test");
    }
    if t30 == SignTest::Indeterminate {
        return rv(boundary("a_30"), "cubic x^3 test");
    }

    if q2.is_zero() {
        if t30.is_nonzero() {
            let dc = s.cubic_discriminant_poly().evaluate(&g3);
            let tq = t(&inv.q_d4);
            let td = t(&dc);
            if tq == SignTest::Indeterminate {
                return rv(boundary("Q_D4"), "Q_D4 sign");
            }
            if td == SignTest::Indeterminate {
                return rv(boundary("DC_f(gamma_3)"), "cubic discriminant sign");
            }
            return match (tq, td) {
                (SignTest::Negative, _) => rv(KClass::d(4, Sign::Plus), "Q_D4 < 0: D_4^+ for every gamma_3"),
                (SignTest::Positive, SignTest::Positive) => {
                    rv(KClass::d(4, Sign::Minus), "Q_D4 > 0, DC_f(gamma_3) > 0: D_4^-")
                }
                (SignTest::Positive, SignTest::Negative) => {
                    rv(KClass::d(4, Sign::Plus), "Q_D4 > 0, DC_f(gamma_3) < 0: D_4^+")
                }
                (SignTest::Positive, _) => defer("Q_D4 > 0, DC_f(gamma_3) = 0: D_>=5, index by reduction"),
                (_, SignTest::Negative) => rv(KClass::d(4, Sign::Plus), "Q_D4 = 0, DC_f(gamma_3) != 0: D_4^+"),
                _ => e_chain(s, c, inv, sr),
            };
        }
        if !a21.is_zero() {
            let lin = &(&Scalar::from_int(-4) * &(a21 * &g3)) + &inv.s_d4;
            return match t(&lin) {
                SignTest::Positive => rv(KClass::d(4, Sign::Plus), "a_30 = 0, -4 a_21 gamma_3 + S_D4 > 0: D_4^+"),
                SignTest::Negative => rv(KClass::d(4, Sign::Minus), "a_30 = 0, -4 a_21 gamma_3 + S_D4 < 0: D_4^-"),
                SignTest::Zero => defer("a_30 = 0, gamma_3 = S_D4/(4 a_21): D_>=5, index by reduction"),
                SignTest::Indeterminate => rv(boundary("-4 a_21 gamma_3 + S_D4"), "S_D4 test"),
            };
        }
        if !a12.is_zero() && g3 == *a03 {
            return match t(a40) {
                SignTest::Indeterminate => rv(boundary("a_40"), "ridge D_5 test"),
                s if s.is_nonzero() => rv(
                    KClass::D { k: 5, sign: None },
                    "a_30 = a_21 = 0, a_12 a_40 != 0, gamma_3 = a_03: D_5",
                ),
                _ => defer("a_30 = a_21 = a_40 = 0: no closed-form rule"),
            };
        }
        return defer("degenerate cubic: no closed-form rule");
    }

    if t30.is_nonzero() {
        return rv(KClass::A { k: 2, sign: None }, "gamma_2 != a_02, a_30 != 0: A_2");
    }
    let t21 = t(a21);
    let t40 = t(a40);
    if t21 == SignTest::Indeterminate || t40 == SignTest::Indeterminate {
        return rv(boundary("a_21 a_40"), "ridge tests");
    }
    match (t21.is_nonzero(), t40.is_nonzero()) {
        (true, true) => a_chain(s, c, inv, sr),
        (true, false) => rv(KClass::a(3, Sign::Minus), "a_30 = a_40 = 0, a_21 != 0: A_3^-"),
        (false, true) => {
            let v = a40 / &q2;
            rv(
                KClass::a(3, Sign::of_positive(v.is_positive())),
                "a_30 = a_21 = 0, a_40 != 0: A_3 with sign of a_40/(a_02 - gamma_2)",
            )
        }
        (false, false) => defer("a_30 = a_21 = a_40 = 0: no closed-form rule"),
    }
}

fn e_chain(s: &MongeSurface, c: &BaseCurve, inv: &InvariantSet, sr: &SignRule) -> RuleVerdict {
    let a30 = s.a(3, 0);
    let d6 = &inv.q_e6 - &(&a30.pow(4) * &c.gamma(4));
    match sr.test(&d6) {
        SignTest::Indeterminate => return rv(boundary("Q_E6 - a_30^4 gamma_4"), "E_6 test"),
        t if t.is_nonzero() => return rv(KClass::E(6), "DC_f(gamma_3) = 0, gamma_4 != Q_E6/a_30^4: E_6"),
        _ => {}
    }
    match sr.test(&inv.q_e7) {
        SignTest::Indeterminate => return rv(boundary("Q_E7"), "E_7 test"),
        t if t.is_nonzero() => return rv(KClass::E(7), "gamma_4 = Q_E6/a_30^4, Q_E7 != 0: E_7"),
        _ => {}
    }
    if s.bound() < 5 {
        return defer("E-series needs the 5-jet");
    }
    let d8 = &inv.q_e8 - &(&a30.pow(5) * &c.gamma(5));
    match sr.test(&d8) {
        SignTest::Indeterminate => return rv(boundary("Q_E8 - a_30^5 gamma_5"), "E_8 test"),
        t if t.is_nonzero() => return rv(KClass::E(8), "Q_E7 = 0, gamma_5 != Q_E8/a_30^5: E_8"),
        _ => {}
    }
    match sr.test(&inv.q_estar) {
        SignTest::Indeterminate => rv(boundary("Q_E*"), "E_* test"),
        t if t.is_nonzero() => rv(KClass::EStar, "gamma_5 = Q_E8/a_30^5, Q_E* != 0: E_*"),
        _ => defer("Q_E* = 0: beyond E_*"),
    }
}

fn a_chain(s: &MongeSurface, c: &BaseCurve, inv: &InvariantSet, sr: &SignRule) -> RuleVerdict {
    let a40 = s.a(4, 0);
    let d3 = &inv.r_a3 - &(a40 * &c.gamma(2));
    match sr.test(&d3) {
        SignTest::Indeterminate => return rv(boundary("R_A3 - a_40 gamma_2"), "A_3 test"),
        t if t.is_nonzero() => {
            return rv(
                KClass::a(3, Sign::of_positive(t == SignTest::Positive)),
                "a_30 = 0, a_21 a_40 != 0: A_3 with sign of R_A3 - a_40 gamma_2",
            )
        }
        _ => {}
    }
    match sr.test(&inv.r_a4) {
        SignTest::Indeterminate => return rv(boundary("R_A4"), "A_4 test"),
        t if t.is_nonzero() => return rv(KClass::A { k: 4, sign: None }, "gamma_2 = R_A3/a_40, R_A4 != 0: A_4"),
        _ => {}
    }
    if s.bound() < 6 {
        return defer("A_5 test needs the 6-jet");
    }
    let d5 = &inv.r_a5 - &(&(&Scalar::from_int(25) * &a40.pow(4)) * &c.gamma(3));
    let d5 = &d5 * &-s.a(2, 1);
    match sr.test(&d5) {
        SignTest::Indeterminate => return rv(boundary("-a_21 (R_A5 - 25 a_40^4 gamma_3)"), "A_5 test"),
        t if t.is_nonzero() => {
            return rv(
                KClass::a(5, Sign::of_positive(t == SignTest::Positive)),
                "R_A4 = 0: A_5 with sign of -a_21 (R_A5 - 25 a_40^4 gamma_3)",
            )
        }
        _ => {}
    }
    if s.bound() < 7 {
        return defer("A_6 test needs the 7-jet");
    }
    match sr.test(&inv.r_a6) {
        SignTest::Indeterminate => rv(boundary("R_A6"), "A_6 test"),
        t if t.is_nonzero() => rv(
            KClass::A { k: 6, sign: None },
            "gamma_3 = R_A5/(25 a_40^4), R_A6 != 0: A_6",
        ),
        _ => defer("R_A6 = 0: A_>=7, index by reduction"),
    }
}

/// Classifies `F = f − γ` by the coefficient rules and, independently, by
/// the generic reducer.
pub fn classify_contact(s: &MongeSurface, c: &BaseCurve, sr: &SignRule) -> Result<ContactVerdict, crate::Error> {
    let f = contact_function(s, c).map_err(|e| match e {
        ContactError::CurveTooLong(a, b) => crate::Error::Jet(crate::JetError::OutOfBound(0, a, b)),
        other => unreachable!("{other}"),
    })?;
    let inv = s.invariants();
    let rule = contact_rule(s, c, &inv, sr);
    let (reduced, trace) = recognizer::classify(&f.jet)?;
    let agree = rule
        .class
        .as_ref()
        .is_none_or(|l| matches!(l, KClass::Indeterminate(Indeterminacy::Boundary(_))) || *l == reduced);
    let class = rule.class.clone().unwrap_or_else(|| reduced.clone());
    Ok(ContactVerdict {
        class,
        rule,
        reduced,
        trace,
        agree,
    })
}

fn unreachable_target(target: &KClass, reason: impl Into<String>) -> ContactError {
    ContactError::TargetUnreachable {
        target: target.to_string(),
        reason: reason.into(),
    }
}

/// Pure `y^k` coefficients left by the `D`-series reduction of `f − γ`.
fn d_coefficient(s: &MongeSurface, c: &BaseCurve, deg: u32) -> Option<Scalar> {
    let f = contact_function(s, c).ok()?;
    // the y^deg coefficient only sees the deg-jet
    let (series, _) = d_series_upto(&f.jet.with_bound(deg), deg, false).ok()?;
    series.into_iter().find(|(d, _)| *d == deg).map(|(_, v)| v)
}

/// Candidate values of `γ3` putting the cubic part at a double root.
fn double_root_gamma3(s: &MongeSurface, inv: &InvariantSet) -> Vec<Scalar> {
    let (a30, a21, a12) = (s.a(3, 0), s.a(2, 1), s.a(1, 2));
    if !a30.is_zero() {
        match s.dcf_roots() {
            Ok(roots) => roots.into_iter().map(|r| r.value).collect(),
            Err(_) => vec![],
        }
    } else if !a21.is_zero() {
        vec![&inv.s_d4 / &(&Scalar::from_int(4) * a21)]
    } else if !a12.is_zero() {
        vec![s.a(0, 3).clone()]
    } else {
        vec![]
    }
}

/// Directrices whose contact function has the requested class.
///
/// Every returned curve is checked with [`classify_contact`]; both branches
/// of a double root are returned when they both work.
pub fn degenerate_cylinder(s: &MongeSurface, target: &KClass) -> Result<Vec<BaseCurve>, ContactError> {
    let k = s.bound();
    let inv = s.invariants();
    let a02 = s.a(0, 2).clone();
    let (a30, a21, a40) = (s.a(3, 0).clone(), s.a(2, 1).clone(), s.a(4, 0).clone());
    let n = |v: i64| Scalar::from_int(v);
    let base2 = BaseCurve::zero().with(2, a02.clone());
    let mut cands: Vec<BaseCurve> = Vec::new();

    match *target {
        KClass::Regular => cands.push(BaseCurve::new(vec![Scalar::one()])),
        KClass::A { k: 2, .. } => {
            if a30.is_zero() {
                return Err(unreachable_target(target, "A_2 needs a_30 != 0"));
            }
            cands.push(BaseCurve::zero());
        }
        KClass::A { k: 3, sign } => {
            if !a30.is_zero() {
                return Err(unreachable_target(target, "a_30 != 0 forces A_2"));
            }
            let sigma = if sign == Some(Sign::Minus) { n(-1) } else { n(1) };
            if !a21.is_zero() && !a40.is_zero() {
                for t in [1, 2] {
                    let g2 = &(&inv.r_a3 - &(&sigma * &n(t))) / &a40;
                    cands.push(BaseCurve::zero().with(2, g2));
                }
            } else if !a21.is_zero() {
                cands.push(BaseCurve::zero().with(2, &a02 + &n(1)));
            } else if !a40.is_zero() {
                cands.push(BaseCurve::zero().with(2, &a02 - &(&sigma * &a40)));
            }
        }
        KClass::A { k: 4, .. } | KClass::A { k: 5, .. } | KClass::A { k: 6, .. } => {
            if !a30.is_zero() || a21.is_zero() || a40.is_zero() {
                return Err(unreachable_target(target, "needs a_30 = 0, a_21 a_40 != 0"));
            }
            let c2 = BaseCurve::zero().with(2, &inv.r_a3 / &a40);
            let root3 = &inv.r_a5 / &(&n(25) * &a40.pow(4));
            match *target {
                KClass::A { k: 4, .. } => cands.push(c2),
                KClass::A { k: 5, sign } => {
                    let plus = (sign != Some(Sign::Minus)) == a21.is_negative();
                    let sigma = if plus { n(1) } else { n(-1) };
                    let off = &sigma / &(&n(25) * &a40.pow(4));
                    cands.push(c2.with(3, &root3 - &off));
                }
                _ => cands.push(c2.with(3, root3)),
            }
        }
        KClass::D { k: 4, sign } => {
            let want_plus = sign != Some(Sign::Minus);
            if !a30.is_zero() {
                let poly = s.cubic_discriminant_poly();
                let vertex = &(-&poly.c1) / &(&poly.c2 * &n(2));
                // half the root gap squared; w exceeds the half gap
                let h2 = &poly.discriminant() / &(&n(4) * &poly.c2.pow(2));
                let w = &n(1) + &h2.abs();
                for p in [vertex.clone(), &vertex + &w, &vertex - &w] {
                    let v = poly.evaluate(&p);
                    if (want_plus && v.is_negative()) || (!want_plus && v.is_positive()) {
                        cands.push(base2.with(3, p));
                        break;
                    }
                }
            } else if !a21.is_zero() {
                let sigma = if want_plus { n(1) } else { n(-1) };
                cands.push(base2.with(3, &(&inv.s_d4 - &sigma) / &(&n(4) * &a21)));
            } else {
                for p in [0, 1, -1, 2, -2] {
                    cands.push(base2.with(3, n(p)));
                }
            }
        }
        KClass::D { k: m, sign } => {
            let top = m - 1;
            if top > k {
                return Err(unreachable_target(
                    target,
                    format!("needs the y^{top} coefficient, beyond degree bound {k}"),
                ));
            }
            let roots = double_root_gamma3(s, &inv);
            if roots.is_empty() {
                return Err(unreachable_target(target, "the cubic part never has a double root"));
            }
            for g3 in roots {
                let mut curve = base2.with(3, g3);
                let mut ok = true;
                for j in 4..=top {
                    let d0 = d_coefficient(s, &curve.with(j, n(0)), j);
                    let d1 = d_coefficient(s, &curve.with(j, n(1)), j);
                    let (Some(d0), Some(d1)) = (d0, d1) else {
                        ok = false;
                        break;
                    };
                    let slope = &d1 - &d0;
                    if slope.is_zero() {
                        // γ_j does not reach the y^j coefficient
                        if j == top && !d0.is_zero() && sign.is_none_or(|sg| (sg == Sign::Plus) == d0.is_positive()) {
                            continue;
                        }
                        ok = false;
                        break;
                    }
                    let want = if j < top {
                        n(0)
                    } else if sign == Some(Sign::Minus) {
                        n(-1)
                    } else {
                        n(1)
                    };
                    curve = curve.with(j, &(&want - &d0) / &slope);
                }
                if ok {
                    cands.push(curve);
                }
            }
        }
        KClass::E(e) => {
            if a30.is_zero() || !inv.q_d4.is_zero() {
                return Err(unreachable_target(target, "E-series needs a_30 != 0 and Q_D4 = 0"));
            }
            let g3 = s
                .dcf_roots()
                .map_err(|err| unreachable_target(target, err.to_string()))?[0]
                .value
                .clone();
            let e6 = &inv.q_e6 / &a30.pow(4);
            let e8 = &inv.q_e8 / &a30.pow(5);
            let c3 = base2.with(3, g3);
            match e {
                6 => cands.push(c3.with(4, &e6 + &n(1))),
                7 => cands.push(c3.with(4, e6)),
                _ => cands.push(c3.with(4, e6).with(5, &e8 + &n(1))),
            }
        }
        KClass::EStar => {
            if a30.is_zero() || !inv.q_d4.is_zero() {
                return Err(unreachable_target(target, "E_* needs a_30 != 0 and Q_D4 = 0"));
            }
            let g3 = s
                .dcf_roots()
                .map_err(|err| unreachable_target(target, err.to_string()))?[0]
                .value
                .clone();
            cands.push(
                base2
                    .with(3, g3)
                    .with(4, &inv.q_e6 / &a30.pow(4))
                    .with(5, &inv.q_e8 / &a30.pow(5)),
            );
        }
        _ => return Err(unreachable_target(target, "no construction for this class")),
    }

    let sr = SignRule::Exact;
    let mut out: Vec<BaseCurve> = Vec::new();
    for cand in cands {
        if cand.len() > k || out.contains(&cand) {
            continue;
        }
        if let Ok(v) = classify_contact(s, &cand, &sr) {
            if v.class == *target && v.agree {
                out.push(cand);
            }
        }
    }
    if out.is_empty() {
        return Err(unreachable_target(
            target,
            "no constructed directrix realizes it on this surface",
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(coeffs: &[(u32, u32, i64)]) -> MongeSurface {
        MongeSurface::from_coeffs(7, coeffs.iter().map(|&(i, j, v)| (i, j, Scalar::from_int(v)))).unwrap()
    }

    fn curve(g: &[i64]) -> BaseCurve {
        BaseCurve::new(g.iter().map(|&v| Scalar::from_int(v)).collect())
    }

    #[test]
    fn examples() {
        let sr = SignRule::Exact;
        let s = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, 1)]);
        let v = classify_contact(&s, &BaseCurve::zero(), &sr).unwrap();
        assert_eq!(v.class, KClass::A { k: 2, sign: None });
        assert!(v.agree);
        for g3 in [-3, 0, 5] {
            let v = classify_contact(&s, &curve(&[0, 1, g3]), &sr).unwrap();
            assert_eq!(v.class, KClass::d(4, Sign::Plus));
            assert!(v.agree);
        }
        let s = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, -1)]);
        // cubic part (x + y)^2 (x - 2y) / 6 and nothing above it: not isolated
        let v = classify_contact(&s, &curve(&[0, 1, 2]), &sr).unwrap();
        assert_eq!(v.class, KClass::Indeterminate(Indeterminacy::AtLeastD(9)));
        let v = classify_contact(&s, &curve(&[0, 1, 2, 1]), &sr).unwrap();
        assert_eq!(v.class.milnor_data(), Some((5, 2)));
        assert!(v.agree);
        assert_eq!(classify_contact(&s, &curve(&[1]), &sr).unwrap().class, KClass::Regular);
    }

    #[test]
    fn contact_function_examples() {
        let s = surf(&[(0, 2, 1), (3, 0, 1)]);
        assert_eq!(contact_function(&s, &BaseCurve::zero()).unwrap().jet, *s.jet());
        let f = contact_function(&s, &curve(&[0, 1])).unwrap();
        assert!(f.jet.truncated(2).is_zero());
    }

    #[test]
    fn d4_directrices_with_wide_root_gap() {
        // Q_D4 = 9900, so the roots of DC_f lie about 2e6 apart.
        let s = surf(&[(0, 2, 1), (3, 0, 1), (2, 1, 99), (1, 2, -99)]);
        for sign in [Sign::Plus, Sign::Minus] {
            let t = KClass::d(4, sign);
            let cs = degenerate_cylinder(&s, &t).unwrap();
            assert_eq!(classify_contact(&s, &cs[0], &SignRule::Exact).unwrap().class, t);
        }
    }
}
