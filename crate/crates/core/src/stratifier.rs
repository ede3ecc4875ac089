//! The eight strata of parabolic surface jets and the pairing with the
//! projection classes.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::jet::{monomials, Jet2};
use crate::kclass::{KClass, Sign};
use crate::monge::MongeSurface;
use crate::projection::{classify_projection, AClass, ProjectionError, ProjectionVerdict};
use crate::scalar::Scalar;
use crate::sign::{SignRule, SignTest};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StratumId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl StratumId {
    pub const ALL: [StratumId; 8] = [
        StratumId::I,
        StratumId::II,
        StratumId::III,
        StratumId::IV,
        StratumId::V,
        StratumId::VI,
        StratumId::VII,
        StratumId::VIII,
    ];

    pub fn roman(self) -> &'static str {
        match self {
            StratumId::I => "i",
            StratumId::II => "ii",
            StratumId::III => "iii",
            StratumId::IV => "iv",
            StratumId::V => "v",
            StratumId::VI => "vi",
            StratumId::VII => "vii",
            StratumId::VIII => "viii",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            StratumId::I => "(A_2, D_4|D_>=5)",
            StratumId::II => "(A_2, D_4^+)",
            StratumId::III => "(A_2, D_4^+|E_6|E_7)",
            StratumId::IV => "(A_3|A_4, D_4|D_>=5)",
            StratumId::V => "(A_2, D_4^+|E_6|E_8|E_*)",
            StratumId::VI => "(A_3|A_5|A_6, D_4|D_>=5)",
            StratumId::VII => "(A_3^-, D_4|D_>=5)",
            StratumId::VIII => "(A_3, D_5)",
        }
    }

    pub fn codimension(self) -> u32 {
        match self {
            StratumId::I | StratumId::II => 1,
            StratumId::III | StratumId::IV => 2,
            _ => 3,
        }
    }

    pub fn conditions(self) -> &'static str {
        match self {
            StratumId::I => "a_30 != 0, Q_D4 > 0",
            StratumId::II => "a_30 != 0, Q_D4 < 0",
            StratumId::III => "a_30 != 0, Q_D4 = 0, Q_E7 != 0",
            StratumId::IV => "a_30 = 0, a_21 a_40 != 0, R_A4 != 0",
            StratumId::V => "a_30 != 0, Q_D4 = Q_E7 = 0, Q_E* != 0",
            StratumId::VI => "a_30 = 0, a_21 a_40 != 0, R_A4 = 0, R_A6 != 0",
            StratumId::VII => "a_30 = a_40 = 0, a_21 != 0",
            StratumId::VIII => "a_30 = a_21 = 0, a_12 a_40 != 0",
        }
    }

    /// Projection class paired with the stratum, for (i)–(vi).
    pub fn paired_projection(self) -> Option<&'static str> {
        Some(match self {
            StratumId::I => "beaks",
            StratumId::II => "lips",
            StratumId::III => "goose",
            StratumId::IV => "gulls",
            StratumId::V => "ugly goose",
            StratumId::VI => "ugly gulls",
            _ => return None,
        })
    }

    /// Contact classes listed for the stratum, capped at determinacy 7.
    pub fn contact_targets(self) -> Vec<KClass> {
        let a = |k| KClass::A { k, sign: None };
        let a_pm = |k| vec![KClass::a(k, Sign::Plus), KClass::a(k, Sign::Minus)];
        let d4 = vec![KClass::d(4, Sign::Plus), KClass::d(4, Sign::Minus)];
        let d_high = || {
            let mut v = vec![KClass::D { k: 5, sign: None }];
            for k in [6, 8] {
                v.push(KClass::d(k, Sign::Plus));
                v.push(KClass::d(k, Sign::Minus));
            }
            v.push(KClass::D { k: 7, sign: None });
            v
        };
        let mut out = Vec::new();
        match self {
            StratumId::I => {
                out.push(a(2));
                out.extend(d4);
                out.extend(d_high());
            }
            StratumId::II => out.extend([a(2), KClass::d(4, Sign::Plus)]),
            StratumId::III => out.extend([a(2), KClass::d(4, Sign::Plus), KClass::E(6), KClass::E(7)]),
            StratumId::IV => {
                out.extend(a_pm(3));
                out.push(a(4));
                out.extend(d4);
                out.extend(d_high());
            }
            StratumId::V => out.extend([
                a(2),
                KClass::d(4, Sign::Plus),
                KClass::E(6),
                KClass::E(8),
                KClass::EStar,
            ]),
            StratumId::VI => {
                out.extend(a_pm(3));
                out.extend(a_pm(5));
                out.push(a(6));
                out.extend(d4);
                out.extend(d_high());
            }
            StratumId::VII => {
                out.push(KClass::a(3, Sign::Minus));
                out.extend(d4);
                out.extend(d_high());
            }
            StratumId::VIII => {
                out.extend(a_pm(3));
                out.push(KClass::D { k: 5, sign: None });
            }
        }
        out
    }
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.roman())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseStratumError(pub String);

impl fmt::Display for ParseStratumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown stratum '{}'", self.0)
    }
}

impl std::error::Error for ParseStratumError {}

impl FromStr for StratumId {
    type Err = ParseStratumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .to_ascii_lowercase();
        StratumId::ALL
            .into_iter()
            .find(|id| id.roman() == t || (*id as u8 + 1).to_string() == t)
            .ok_or_else(|| ParseStratumError(s.to_string()))
    }
}

/// One tested condition; `holds` is `None` when the sign was indeterminate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: String,
    pub holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub id: Option<StratumId>,
    /// Set when an indeterminate sign prevented a decision.
    pub boundary: Option<String>,
    pub checks: Vec<ConditionCheck>,
}

impl Stratum {
    pub fn name(&self) -> &'static str {
        self.id.map_or("outside", StratumId::name)
    }

    pub fn codimension(&self) -> Option<u32> {
        self.id.map(StratumId::codimension)
    }

    /// Conditions that failed.
    pub fn failed(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.holds == Some(false))
            .map(|c| c.condition.as_str())
            .collect()
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.id, &self.boundary) {
            (Some(id), _) => write!(f, "{id} {}", id.name()),
            (None, Some(b)) => write!(f, "boundary({b})"),
            (None, None) => f.write_str("outside"),
        }
    }
}

struct Checker<'a> {
    sr: &'a SignRule,
    checks: Vec<ConditionCheck>,
    boundary: Option<String>,
}

impl Checker<'_> {
    fn test(&mut self, what: &str, v: &Scalar, want: fn(SignTest) -> bool) -> bool {
        let t = self.sr.test(v);
        if t == SignTest::Indeterminate {
            self.boundary.get_or_insert_with(|| format!("sign of {what}"));
            self.checks.push(ConditionCheck {
                condition: what.to_string(),
                holds: None,
            });
            return false;
        }
        let holds = want(t);
        self.checks.push(ConditionCheck {
            condition: what.to_string(),
            holds: Some(holds),
        });
        holds
    }
}

fn nonzero(t: SignTest) -> bool {
    t.is_nonzero()
}

fn zero(t: SignTest) -> bool {
    t == SignTest::Zero
}

/// Assigns the surface to a stratum by exact sign tests.
pub fn classify_stratum(s: &MongeSurface, sr: &SignRule) -> Stratum {
    let inv = s.invariants();
    let mut c = Checker {
        sr,
        checks: Vec::new(),
        boundary: None,
    };
    let (a30, a21, a12, a40) = (s.a(3, 0), s.a(2, 1), s.a(1, 2), s.a(4, 0));
    let id = if c.test("a_30 != 0", a30, nonzero) {
        if c.test("Q_D4 > 0", &inv.q_d4, |t| t == SignTest::Positive) {
            Some(StratumId::I)
        } else if c.test("Q_D4 < 0", &inv.q_d4, |t| t == SignTest::Negative) {
            Some(StratumId::II)
        } else if !c.test("Q_D4 = 0", &inv.q_d4, zero) {
            None
        } else if c.test("Q_E7 != 0", &inv.q_e7, nonzero) {
            Some(StratumId::III)
        } else if c.test("Q_E* != 0", &inv.q_estar, nonzero) {
            Some(StratumId::V)
        } else {
            None
        }
    } else if c.boundary.is_some() {
        None
    } else if c.test("a_21 != 0", a21, nonzero) {
        if c.test("a_40 != 0", a40, nonzero) {
            if c.test("R_A4 != 0", &inv.r_a4, nonzero) {
                Some(StratumId::IV)
            } else if c.test("R_A6 != 0", &inv.r_a6, nonzero) {
                Some(StratumId::VI)
            } else {
                None
            }
        } else {
            Some(StratumId::VII)
        }
    } else if c.boundary.is_some() {
        None
    } else if c.test("a_12 a_40 != 0", &(a12 * a40), nonzero) {
        Some(StratumId::VIII)
    } else {
        None
    };
    let id = if c.boundary.is_some() { None } else { id };
    Stratum {
        id,
        boundary: c.boundary,
        checks: c.checks,
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub stratum: Stratum,
    pub projection: ProjectionVerdict,
    /// What the pairing predicts; `None` outside the table.
    pub expected: Option<String>,
    /// `None` when the surface is not covered.
    pub pass: Option<bool>,
}

fn four_jet_only(j: &Jet2, allowed: &[(u32, u32)]) -> bool {
    j.truncated(4)
        .terms()
        .all(|(i, k, c)| c.is_zero() || allowed.contains(&(i, k)))
}

/// Runs both classifiers and checks the stratum/projection pairing.
pub fn crosscheck_theorem(s: &MongeSurface, sr: &SignRule) -> Result<CrossCheck, ProjectionError> {
    let stratum = classify_stratum(s, sr);
    let projection = classify_projection(s, sr)?;
    let p = &projection.class;
    let (expected, pass) = match stratum.id {
        None => (None, None),
        Some(id) => {
            let (label, ok) = match id {
                StratumId::I => ("beaks".to_string(), *p == AClass::Beaks),
                StratumId::II => ("lips".to_string(), *p == AClass::Lips),
                StratumId::III => ("goose".to_string(), *p == AClass::Goose),
                StratumId::IV => ("gulls".to_string(), *p == AClass::Gulls),
                StratumId::V => ("ugly goose".to_string(), matches!(p, AClass::UglyGoose(_))),
                StratumId::VI => ("ugly gulls".to_string(), *p == AClass::UglyGulls),
                StratumId::VII => {
                    let jet_ok = projection
                        .reduction
                        .as_ref()
                        .is_some_and(|r| four_jet_only(&r.jet, &[(2, 1)]));
                    let class_ok = matches!(p, AClass::Twelve)
                        || matches!(p, AClass::OutsideTable { four_jet: Some(j), .. } if j == "(x, xy^2)");
                    (
                        "4-jet (x, xy^2): twelve or undetermined".to_string(),
                        jet_ok && class_ok,
                    )
                }
                StratumId::VIII => {
                    let jet_ok = projection
                        .reduction
                        .as_ref()
                        .is_some_and(|r| four_jet_only(&r.jet, &[(1, 2), (4, 0)]));
                    let class_ok = matches!(p, AClass::Sixteen(_))
                        || matches!(p, AClass::OutsideTable { four_jet: Some(j), .. } if j == "(x, x^2y+y^4)");
                    (
                        "4-jet (x, x^2y+y^4): sixteen or undetermined".to_string(),
                        jet_ok && class_ok,
                    )
                }
            };
            (Some(label), Some(ok && projection.agree))
        }
    };
    Ok(CrossCheck {
        stratum,
        projection,
        expected,
        pass,
    })
}

/// Controls for [`sample_stratum_with`].
#[derive(Debug, Clone, Copy)]
pub struct SampleOptions {
    pub bound: u32,
    /// Numerators lie in `[-max, max]`, denominators in `[1, max]`.
    pub max: i64,
    /// Probability that a free coefficient is nonzero.
    pub density: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            bound: crate::DEFAULT_DEGREE_BOUND,
            max: 99,
            density: 1.0,
        }
    }
}

pub(crate) fn random_rational(rng: &mut ChaCha8Rng, max: i64) -> Scalar {
    let n = rng.gen_range(-max..=max);
    let d = rng.gen_range(1..=max);
    Scalar::from_rational(crate::scalar::rational(n, d))
}

pub(crate) fn random_nonzero(rng: &mut ChaCha8Rng, max: i64) -> Scalar {
    loop {
        let v = random_rational(rng, max);
        if !v.is_zero() {
            return v;
        }
    }
}

/// Random coefficients `a_ij`, `3 <= i + j <= bound`, plus `a_02`.
fn random_table(rng: &mut ChaCha8Rng, o: &SampleOptions) -> Vec<(u32, u32, Scalar)> {
    let mut out = vec![(0, 2, random_nonzero(rng, o.max))];
    for (i, j) in monomials(o.bound) {
        if i + j >= 3 {
            let v = if rng.gen_bool(o.density) {
                random_rational(rng, o.max)
            } else {
                Scalar::zero()
            };
            out.push((i, j, v));
        }
    }
    out
}

fn set(table: &mut [(u32, u32, Scalar)], i: u32, j: u32, v: Scalar) {
    if let Some(slot) = table.iter_mut().find(|(a, b, _)| *a == i && *b == j) {
        slot.2 = v;
    }
}

fn get(table: &[(u32, u32, Scalar)], i: u32, j: u32) -> Scalar {
    table
        .iter()
        .find(|(a, b, _)| *a == i && *b == j)
        .map_or_else(Scalar::zero, |t| t.2.clone())
}

/// One candidate with the stratum's equalities imposed by solving for a
/// coefficient.
fn candidate(id: StratumId, rng: &mut ChaCha8Rng, o: &SampleOptions) -> Vec<(u32, u32, Scalar)> {
    let mut t = random_table(rng, o);
    let n = Scalar::from_int;
    match id {
        StratumId::I | StratumId::II => set(&mut t, 3, 0, random_nonzero(rng, o.max)),
        StratumId::III | StratumId::V => {
            let a30 = random_nonzero(rng, o.max);
            let a21 = get(&t, 2, 1);
            set(&mut t, 1, 2, &a21.pow(2) / &a30);
            if id == StratumId::V {
                let (a40, a31, a22) = (get(&t, 4, 0), get(&t, 3, 1), get(&t, 2, 2));
                let num = &(&(&a40 * &a21.pow(3)) - &(&n(3) * &(&a31 * &(&a30 * &a21.pow(2)))))
                    + &(&n(3) * &(&a22 * &(&a30.pow(2) * &a21)));
                set(&mut t, 1, 3, &num / &a30.pow(3));
            }
            set(&mut t, 3, 0, a30);
        }
        StratumId::IV | StratumId::VI => {
            set(&mut t, 3, 0, Scalar::zero());
            let a21 = random_nonzero(rng, o.max);
            let a40 = random_nonzero(rng, o.max);
            if id == StratumId::VI {
                let (a31, a12) = (get(&t, 3, 1), get(&t, 1, 2));
                let num = &(&n(10) * &(&a21 * &(&a31 * &a40))) - &(&n(5) * &(&a12 * &a40.pow(2)));
                set(&mut t, 5, 0, &num / &(&n(3) * &a21.pow(2)));
            }
            set(&mut t, 2, 1, a21);
            set(&mut t, 4, 0, a40);
        }
        StratumId::VII => {
            set(&mut t, 3, 0, Scalar::zero());
            set(&mut t, 4, 0, Scalar::zero());
            set(&mut t, 2, 1, random_nonzero(rng, o.max));
        }
        StratumId::VIII => {
            set(&mut t, 3, 0, Scalar::zero());
            set(&mut t, 2, 1, Scalar::zero());
            set(&mut t, 1, 2, random_nonzero(rng, o.max));
            set(&mut t, 4, 0, random_nonzero(rng, o.max));
        }
    }
    t
}

/// Random surfaces lying exactly in the stratum.
///
/// Equalities are imposed by solving for one coefficient; the remaining
/// open conditions are met by rejection.
pub fn sample_stratum(id: StratumId, seed: u64, count: usize) -> Vec<MongeSurface> {
    sample_stratum_with(id, seed, count, &SampleOptions::default())
}

pub fn sample_stratum_with(id: StratumId, seed: u64, count: usize, o: &SampleOptions) -> Vec<MongeSurface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((id as u64 + 1) << 56));
    let mut out = Vec::with_capacity(count);
    let sr = SignRule::Exact;
    while out.len() < count {
        let t = candidate(id, &mut rng, o);
        let Ok(s) = MongeSurface::from_coeffs(o.bound, t) else {
            continue;
        };
        if classify_stratum(&s, &sr).id == Some(id) {
            out.push(s);
        }
    }
    out
}

/// Random surface with every coefficient free.
pub fn sample_surface(rng: &mut ChaCha8Rng, o: &SampleOptions) -> MongeSurface {
    loop {
        let t = random_table(rng, o);
        if let Ok(s) = MongeSurface::from_coeffs(o.bound, t) {
            return s;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(coeffs: &[(u32, u32, i64)]) -> MongeSurface {
        MongeSurface::from_coeffs(7, coeffs.iter().map(|&(i, j, v)| (i, j, Scalar::from_int(v)))).unwrap()
    }

    #[test]
    fn examples() {
        let sr = SignRule::Exact;
        let s = classify_stratum(&surf(&[(0, 2, 1), (3, 0, 1), (1, 2, -1)]), &sr);
        assert_eq!(s.id, Some(StratumId::I));
        assert_eq!(s.codimension(), Some(1));
        let s = classify_stratum(&surf(&[(0, 2, 1), (2, 1, 1), (4, 0, 1), (5, 0, 1)]), &sr);
        assert_eq!(s.id, Some(StratumId::IV));
        assert_eq!(s.codimension(), Some(2));
        let s = classify_stratum(&surf(&[(0, 2, 1), (4, 0, 1)]), &sr);
        assert_eq!(s.id, None);
        assert!(!s.failed().is_empty());
    }

    #[test]
    fn parse_ids() {
        assert_eq!("vi".parse::<StratumId>().unwrap(), StratumId::VI);
        assert_eq!("(viii)".parse::<StratumId>().unwrap(), StratumId::VIII);
        assert_eq!("3".parse::<StratumId>().unwrap(), StratumId::III);
        assert!("ix".parse::<StratumId>().is_err());
    }

    #[test]
    fn samples_land_in_stratum() {
        for id in StratumId::ALL {
            for s in sample_stratum(id, 7, 3) {
                let c = crosscheck_theorem(&s, &SignRule::Exact).unwrap();
                assert_eq!(c.stratum.id, Some(id));
                assert_eq!(
                    c.pass,
                    Some(true),
                    "{id}: {} {:?} {:?}",
                    c.projection.class,
                    c.projection.reduced,
                    c.projection.reduction.as_ref().map(|r| r.jet.truncated(4))
                );
            }
        }
    }
}
