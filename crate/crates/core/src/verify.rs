//! Seeded property suites behind the `verify` command.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contact::{classify_contact, contact_function, degenerate_cylinder, BaseCurve};
use crate::jet::{monomials, DEFAULT_DEGREE_BOUND};
use crate::kclass::KClass;
use crate::milnor::{default_probe_bound, milnor_oracle, Milnor};
use crate::monge::MongeSurface;
use crate::projection::classify_projection;
use crate::scalar::Scalar;
use crate::sign::SignRule;
use crate::stratifier::{
    crosscheck_theorem, random_nonzero, random_rational, sample_stratum, sample_surface, SampleOptions, StratumId,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Theorem45,
    Oracle,
    Discriminant,
    Determinacy,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Theorem45, Suite::Oracle, Suite::Discriminant, Suite::Determinacy];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem45 => "theorem45",
            Suite::Oracle => "oracle",
            Suite::Discriminant => "discriminant",
            Suite::Determinacy => "determinacy",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}` (expected theorem45, oracle, discriminant or determinacy)"))
    }
}

/// A counterexample, with enough to reproduce it.
#[derive(Debug, Clone)]
pub struct Failure {
    pub label: String,
    pub detail: String,
    pub surface: MongeSurface,
    pub curve: Option<BaseCurve>,
}

#[derive(Debug, Clone)]
pub struct Summary {
    pub suite: Suite,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Secondary counters, printed as `key=value`.
    pub counters: Vec<(String, usize)>,
}

impl Summary {
    fn new(suite: Suite) -> Self {
        Summary {
            suite,
            checked: 0,
            failures: Vec::new(),
            counters: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn bump(&mut self, key: &str) {
        match self.counters.iter_mut().find(|(k, _)| k == key) {
            Some(slot) => slot.1 += 1,
            None => self.counters.push((key.to_string(), 1)),
        }
    }

    fn fail(&mut self, label: impl Into<String>, detail: impl Into<String>, s: &MongeSurface, c: Option<&BaseCurve>) {
        self.failures.push(Failure {
            label: label.into(),
            detail: detail.into(),
            surface: s.clone(),
            curve: c.cloned(),
        });
    }
}

/// Runs a suite; `count` is per stratum for `theorem45`, per class for
/// `determinacy`, and total otherwise.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> Summary {
    match suite {
        Suite::Theorem45 => theorem45(seed, count),
        Suite::Oracle => oracle(seed, count),
        Suite::Discriminant => discriminant(seed, count),
        Suite::Determinacy => determinacy(seed, count),
    }
}

fn discriminant(seed: u64, count: usize) -> Summary {
    let mut out = Summary::new(Suite::Discriminant);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let o = SampleOptions::default();
    let w = Scalar::ratio(1, 144);
    for n in 0..count {
        let s = sample_surface(&mut rng, &o);
        let q = s.invariants().q_d4;
        let gap = &s.cubic_discriminant_poly().discriminant() - &(&q.pow(3) * &w);
        out.checked += 1;
        if !gap.is_zero() {
            out.fail(
                format!("sample {n}"),
                format!("disc(DC_f) - Q_D4^3/144 = {gap}"),
                &s,
                None,
            );
        }
    }
    out
}

fn theorem45(seed: u64, count: usize) -> Summary {
    let mut out = Summary::new(Suite::Theorem45);
    let sr = SignRule::Exact;
    for id in StratumId::ALL {
        for (n, s) in sample_stratum(id, seed, count).into_iter().enumerate() {
            out.checked += 1;
            match crosscheck_theorem(&s, &sr) {
                Ok(c) if c.pass == Some(true) => out.bump(id.roman()),
                Ok(c) => out.fail(
                    format!("{id} sample {n}"),
                    format!(
                        "expected {}, projection {} (rule {}, reduction {})",
                        c.expected.unwrap_or_default(),
                        c.projection.class,
                        c.projection.rule,
                        c.projection.reduced.map_or("none".to_string(), |r| r.to_string())
                    ),
                    &s,
                    None,
                ),
                Err(e) => out.fail(format!("{id} sample {n}"), e.to_string(), &s, None),
            }
        }
    }
    out
}

/// Random terms of degree `from..=to` added to the surface jet, which is
/// extended to degree bound `to`.
pub fn perturb(s: &MongeSurface, from: u32, to: u32, rng: &mut ChaCha8Rng) -> MongeSurface {
    let to = to.max(s.bound());
    let mut jet = s.jet().with_bound(to);
    for (i, j) in monomials(to) {
        if i + j >= from.max(3) && rng.gen_bool(0.5) {
            let v = &jet.coeff(i, j) + &random_rational(rng, 99);
            jet.set_coeff(i, j, v).expect("inside the bound");
        }
    }
    MongeSurface::new(jet).expect("perturbation above degree 2 keeps the Monge form")
}

/// Replaces `a_12` so that `Q_D4` becomes the square of a random rational,
/// which keeps the double-root values of `γ3` rational.
pub fn with_square_q_d4(s: &MongeSurface, rng: &mut ChaCha8Rng) -> MongeSurface {
    let a30 = s.a(3, 0);
    if a30.is_zero() {
        return s.clone();
    }
    let r = random_nonzero(rng, 99);
    let a12 = &(&s.a(2, 1).pow(2) - &r.pow(2)) / a30;
    let mut jet = s.jet().clone();
    jet.set_coeff(1, 2, a12).expect("inside the bound");
    MongeSurface::new(jet).expect("a_12 does not affect the Monge form")
}

fn random_curve(rng: &mut ChaCha8Rng, s: &MongeSurface) -> BaseCurve {
    let k = s.bound();
    let mut g: Vec<Scalar> = (1..=k).map(|_| random_rational(rng, 9)).collect();
    if rng.gen_bool(0.7) {
        g[0] = Scalar::zero();
    }
    if rng.gen_bool(0.5) {
        g[1] = s.a(0, 2).clone();
    }
    BaseCurve::new(g)
}

fn oracle(seed: u64, count: usize) -> Summary {
    let mut out = Summary::new(Suite::Oracle);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sr = SignRule::Exact;
    for n in 0..count {
        let id = StratumId::ALL[n % StratumId::ALL.len()];
        let s = sample_stratum(id, seed.wrapping_add(n as u64), 1).remove(0);
        let curve = if rng.gen_bool(0.6) {
            let targets = id.contact_targets();
            let t = &targets[rng.gen_range(0..targets.len())];
            match degenerate_cylinder(&s, t) {
                Ok(cs) if !cs.is_empty() => cs[rng.gen_range(0..cs.len())].clone(),
                _ => random_curve(&mut rng, &s),
            }
        } else {
            random_curve(&mut rng, &s)
        };
        out.checked += 1;
        let label = format!("pair {n} {id} curve {curve}");
        let v = match classify_contact(&s, &curve, &sr) {
            Ok(v) => v,
            Err(e) => {
                out.fail(label, e.to_string(), &s, Some(&curve));
                continue;
            }
        };
        if v.rule.class.is_some() {
            out.bump("both_routes");
        }
        if !v.agree {
            out.fail(
                label,
                format!("rule {} says {}, reducer says {}", v.rule.rule, v.class, v.reduced),
                &s,
                Some(&curve),
            );
            continue;
        }
        let Some((mu, corank)) = v.class.milnor_data() else {
            out.bump("no_milnor_data");
            continue;
        };
        if v.class == KClass::Regular {
            if curve.gamma(1).is_zero() {
                out.fail(label, "regular verdict with gamma_1 = 0", &s, Some(&curve));
            }
            continue;
        }
        let f = contact_function(&s, &curve).expect("curve within bound");
        let m = milnor_oracle(&f.jet, default_probe_bound(s.bound()));
        match m.mu {
            Milnor::Finite(got) => {
                out.bump("milnor_checked");
                if (got, m.corank) != (mu, corank) {
                    out.fail(
                        label,
                        format!(
                            "{} predicts mu={mu}, corank={corank}; oracle gives mu={got}, corank={}",
                            v.class, m.corank
                        ),
                        &s,
                        Some(&curve),
                    );
                }
            }
            Milnor::Infinite => out.bump("milnor_unstable"),
        }
    }
    out
}

fn determinacy(seed: u64, count: usize) -> Summary {
    let mut out = Summary::new(Suite::Determinacy);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sr = SignRule::Exact;
    let bases = count.div_ceil(10).max(1);

    // projection classes, one per listed stratum
    for id in StratumId::ALL {
        let surfaces = sample_stratum(id, seed, bases);
        let Ok(first) = classify_projection(&surfaces[0], &sr) else {
            continue;
        };
        let Some(det) = first.class.determinacy() else {
            continue;
        };
        let key = format!("projection {}", first.class);
        for t in 0..count {
            let s = &surfaces[t % surfaces.len()];
            let base = match classify_projection(s, &sr) {
                Ok(v) => v.class,
                Err(e) => {
                    out.fail(&key, e.to_string(), s, None);
                    continue;
                }
            };
            let p = perturb(s, det + 1, (det + 2).max(DEFAULT_DEGREE_BOUND), &mut rng);
            out.checked += 1;
            match classify_projection(&p, &sr) {
                Ok(v) if v.class.same_verdict(&base) => out.bump(&key),
                Ok(v) => out.fail(&key, format!("{base} became {}", v.class), &p, None),
                Err(e) => out.fail(&key, e.to_string(), &p, None),
            }
        }
    }

    // contact classes, each from the first stratum listing it
    let mut done: Vec<KClass> = Vec::new();
    for id in StratumId::ALL {
        let mut surfaces = sample_stratum(id, seed, bases);
        if id == StratumId::I {
            surfaces = surfaces.iter().map(|s| with_square_q_d4(s, &mut rng)).collect();
        }
        for target in id.contact_targets() {
            if done.contains(&target) {
                continue;
            }
            done.push(target.clone());
            let Some(det) = target.determinacy() else {
                continue;
            };
            let key = format!("contact {target}");
            let curves: Vec<Option<BaseCurve>> = surfaces
                .iter()
                .map(|s| degenerate_cylinder(s, &target).ok().and_then(|c| c.into_iter().next()))
                .collect();
            for t in 0..count {
                let s = &surfaces[t % surfaces.len()];
                let Some(c) = &curves[t % surfaces.len()] else {
                    out.fail(&key, "no directrix realizes the class", s, None);
                    continue;
                };
                let p = perturb(s, det + 1, (det + 2).max(DEFAULT_DEGREE_BOUND), &mut rng);
                out.checked += 1;
                match classify_contact(&p, c, &sr) {
                    Ok(v) if v.class == target && v.agree => out.bump(&key),
                    Ok(v) => out.fail(&key, format!("became {} (reducer {})", v.class, v.reduced), &p, Some(c)),
                    Err(e) => out.fail(&key, e.to_string(), &p, Some(c)),
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 3, 4);
            assert!(
                r.passed(),
                "{suite}: {:?}",
                r.failures.first().map(|f| (&f.label, &f.detail))
            );
            assert!(r.checked > 0);
        }
    }
}
