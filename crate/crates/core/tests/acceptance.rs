//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use parabolic_contact::contact::contact_function;
use parabolic_contact::milnor::{default_probe_bound, milnor_oracle, Milnor};
use parabolic_contact::recognizer::{classify, cubic_discriminant};
use parabolic_contact::report::invariants_report;
use parabolic_contact::sign::SignRule;
use parabolic_contact::specfile::{read_surface, ParseOptions};
use parabolic_contact::stratifier::{sample_surface, SampleOptions};
use parabolic_contact::verify::{run_suite, Suite};
use parabolic_contact::{
    classify_contact, classify_projection, classify_stratum, crosscheck_theorem, degenerate_cylinder, sample_stratum,
    AClass, BaseCurve, KClass, MongeSurface, Scalar, Sign, StratumId,
};

const SEED: u64 = 20_241;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {:.1?}, limit {limit:?}", t))
}

/// Cubic part of the contact function, as plain monomial coefficients.
fn cubic_of(s: &MongeSurface, gamma3: i64) -> [Scalar; 4] {
    let c = BaseCurve::new(vec![Scalar::zero(), s.a(0, 2).clone(), Scalar::from_int(gamma3)]);
    let f = contact_function(s, &c).unwrap().jet;
    [0, 1, 2, 3].map(|j| f.monomial_coeff(3 - j, j).clone())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let o = SampleOptions::default();
    let w = Scalar::ratio(1, 144);
    for n in 0..1000 {
        let s = sample_surface(&mut rng, &o);
        let q3 = &s.invariants().q_d4.pow(3) * &w;
        let poly = s.cubic_discriminant_poly();
        ensure((&poly.discriminant() - &q3).is_zero(), || {
            format!("sample {n}: library discriminant differs")
        })?;
        // Rebuild DC_f by interpolating the cubic discriminant of F at γ3 = -1, 0, 1.
        let (m, z, p) = (
            cubic_discriminant(&cubic_of(&s, -1)),
            cubic_discriminant(&cubic_of(&s, 0)),
            cubic_discriminant(&cubic_of(&s, 1)),
        );
        let half = Scalar::ratio(1, 2);
        let c2 = &(&(&p + &m) * &half) - &z;
        let c1 = &(&p - &m) * &half;
        ensure(c2 == poly.c2 && c1 == poly.c1 && z == poly.c0, || {
            format!("sample {n}: DC_f coefficients differ")
        })?;
        let disc = &(&c1 * &c1) - &(&Scalar::from_int(4) * &(&c2 * &z));
        ensure((&disc - &q3).is_zero(), || {
            format!("sample {n}: interpolated discriminant - Q_D4^3/144 = {}", &disc - &q3)
        })?;
    }
    within(start, Duration::from_secs(5), "1000 surfaces")?;
    Ok(format!(
        "1000 surfaces, gap exactly 0 on both routes, {:.2?}",
        start.elapsed()
    ))
}

fn paired_label(id: StratumId, p: &AClass) -> bool {
    match id {
        StratumId::I => *p == AClass::Beaks,
        StratumId::II => *p == AClass::Lips,
        StratumId::III => *p == AClass::Goose,
        StratumId::IV => *p == AClass::Gulls,
        StratumId::V => matches!(p, AClass::UglyGoose(_)),
        StratumId::VI => *p == AClass::UglyGulls,
        StratumId::VII | StratumId::VIII => false,
    }
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let sr = SignRule::Exact;
    let ids = [
        StratumId::I,
        StratumId::II,
        StratumId::III,
        StratumId::IV,
        StratumId::V,
        StratumId::VI,
    ];
    for id in ids {
        for (n, s) in sample_stratum(id, SEED, 500).iter().enumerate() {
            let st = classify_stratum(s, &sr);
            ensure(st.id == Some(id), || format!("{id} sample {n}: stratum {st}"))?;
            let p = classify_projection(s, &sr).map_err(|e| format!("{id} sample {n}: {e}"))?;
            ensure(p.agree && paired_label(id, &p.class), || {
                format!("{id} sample {n}: projection {} (agree {})", p.class, p.agree)
            })?;
        }
    }
    within(start, Duration::from_secs(60), "3000 surfaces")?;
    Ok(format!("6 x 500 surfaces paired exactly, {:.1?}", start.elapsed()))
}

/// Classes named in the "K-sing. of F" cell, expanded to signed classes of
/// determinacy at most 7.
fn table_cell(id: StratumId) -> Vec<KClass> {
    let cell: &[&str] = match id {
        StratumId::I => &["A_2", "D_>=4"],
        StratumId::II => &["A_2", "D_4^+"],
        StratumId::III => &["A_2", "D_4^+", "E_6", "E_7"],
        StratumId::IV => &["A_3", "A_4", "D_>=4"],
        StratumId::V => &["A_2", "D_4^+", "E_6", "E_8", "E_*"],
        StratumId::VI => &["A_3", "A_5", "A_6", "D_>=4"],
        StratumId::VII => &["A_3^-", "D_>=4"],
        StratumId::VIII => &["A_3", "D_5"],
    };
    let mut out = Vec::new();
    for label in cell {
        if *label == "D_>=4" {
            for k in 4..=8 {
                out.push(KClass::d(k, Sign::Plus));
                if k % 2 == 0 {
                    out.push(KClass::d(k, Sign::Minus));
                }
            }
            continue;
        }
        match label.parse::<KClass>().unwrap() {
            KClass::A { k, sign: None } if k % 2 == 1 => {
                out.push(KClass::a(k, Sign::Plus));
                out.push(KClass::a(k, Sign::Minus));
            }
            c => out.push(c),
        }
    }
    out.retain(|c| c.determinacy().is_some_and(|d| d <= 7));
    out
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let sr = SignRule::Exact;
    let mut realized = 0usize;
    for id in StratumId::ALL {
        let cell = table_cell(id);
        for (n, s) in sample_stratum(id, SEED, 100).iter().enumerate() {
            for target in &cell {
                let curves = degenerate_cylinder(s, target).map_err(|e| format!("{id} sample {n}: {e}"))?;
                ensure(!curves.is_empty(), || {
                    format!("{id} sample {n}: no directrix for {target}")
                })?;
                for c in &curves {
                    let v = classify_contact(s, c, &sr).map_err(|e| format!("{id} sample {n}: {e}"))?;
                    ensure(v.class == *target && v.agree, || {
                        format!(
                            "{id} sample {n}: {target} directrix {c} gives {} (reducer {})",
                            v.class, v.reduced
                        )
                    })?;
                }
                realized += 1;
            }
        }
    }
    Ok(format!(
        "{realized} (surface, class) targets realized over 8 x 100 surfaces, {:.1?}",
        start.elapsed()
    ))
}

fn random_curve(rng: &mut ChaCha8Rng, s: &MongeSurface) -> BaseCurve {
    let mut g: Vec<Scalar> = (0..s.bound())
        .map(|_| Scalar::ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
        .collect();
    if rng.gen_bool(0.7) {
        g[0] = Scalar::zero();
    }
    if rng.gen_bool(0.5) {
        g[1] = s.a(0, 2).clone();
    }
    BaseCurve::new(g)
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let sr = SignRule::Exact;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut with_rule, mut milnor_checked, mut unstable) = (0, 0, 0);
    for n in 0..500 {
        let id = StratumId::ALL[n % 8];
        let s = sample_stratum(id, SEED + n as u64, 1).remove(0);
        let curve = if rng.gen_bool(0.6) {
            let cell = table_cell(id);
            let t = &cell[rng.gen_range(0..cell.len())];
            let cs = degenerate_cylinder(&s, t).map_err(|e| format!("pair {n}: {e}"))?;
            cs[rng.gen_range(0..cs.len())].clone()
        } else {
            random_curve(&mut rng, &s)
        };
        let v = classify_contact(&s, &curve, &sr).map_err(|e| format!("pair {n}: {e}"))?;
        let g = contact_function(&s, &curve).unwrap().jet;
        let (generic, trace) = classify(&g).map_err(|e| format!("pair {n}: {e}"))?;
        ensure(trace.replay() == Ok(true), || {
            format!("pair {n}: reduction trace does not replay")
        })?;
        ensure(v.agree && v.class == generic, || {
            format!("pair {n} {id} curve {curve}: rule {} vs reducer {generic}", v.class)
        })?;
        if v.rule.class.is_some() {
            with_rule += 1;
        }
        if v.class == KClass::Regular {
            continue;
        }
        let Some((mu, corank)) = v.class.milnor_data() else {
            continue;
        };
        let m = milnor_oracle(&g, default_probe_bound(s.bound()));
        match m.mu {
            Milnor::Finite(got) => {
                milnor_checked += 1;
                ensure((got, m.corank) == (mu, corank), || {
                    format!(
                        "pair {n}: {} predicts ({mu}, {corank}), oracle ({got}, {})",
                        v.class, m.corank
                    )
                })?;
            }
            Milnor::Infinite => unstable += 1,
        }
    }
    ensure(with_rule >= 250 && milnor_checked >= 250, || {
        format!("too few decisive pairs: {with_rule} with a rule verdict, {milnor_checked} Milnor checks")
    })?;
    Ok(format!(
        "500 pairs agree; {with_rule} decided by both routes, {milnor_checked} Milnor-checked, {unstable} unstable, {:.1?}",
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let sum = run_suite(Suite::Determinacy, SEED, 200);
    if let Some(f) = sum.failures.first() {
        return Err(format!(
            "{} failures, first {}: {}",
            sum.failures.len(),
            f.label,
            f.detail
        ));
    }
    let short: Vec<String> = sum
        .counters
        .iter()
        .filter(|(_, n)| *n < 200)
        .map(|(k, n)| format!("{k}={n}"))
        .collect();
    ensure(short.is_empty(), || {
        format!("classes with fewer than 200 trials: {}", short.join(", "))
    })?;
    Ok(format!(
        "{} classes x 200 perturbations unchanged, {:.1?}",
        sum.counters.len(),
        start.elapsed()
    ))
}

fn criterion_6() -> Outcome {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let cases = [
        ("lips.monge", "lips", StratumId::II),
        ("beaks.monge", "beaks", StratumId::I),
        ("goose.monge", "goose", StratumId::III),
        ("gulls.monge", "gulls", StratumId::IV),
        ("sixteen_plus.monge", "sixteen(+)", StratumId::VIII),
    ];
    let sr = SignRule::Exact;
    let mut seen = Vec::new();
    for (file, label, id) in cases {
        let start = Instant::now();
        let text = std::fs::read_to_string(dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let s = read_surface(&text, ParseOptions::default()).map_err(|e| format!("{file}: {e}"))?;
        let c = crosscheck_theorem(&s, &sr).map_err(|e| format!("{file}: {e}"))?;
        ensure(c.stratum.id == Some(id), || format!("{file}: stratum {}", c.stratum))?;
        ensure(c.projection.class.to_string() == label, || {
            format!("{file}: projection {}", c.projection.class)
        })?;
        ensure(c.pass == Some(true), || format!("{file}: pairing check failed"))?;
        within(start, Duration::from_secs(1), file)?;
        seen.push(format!("{label}/{id}"));
    }
    Ok(seen.join(", "))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let (mut roots, mut flagged) = (0usize, 0usize);
    for (n, s) in sample_stratum(StratumId::I, SEED, 1000).iter().enumerate() {
        let poly = s.cubic_discriminant_poly();
        let rs = s.dcf_roots().map_err(|e| format!("sample {n}: {e}"))?;
        ensure(rs.len() == 2, || format!("sample {n}: {} roots", rs.len()))?;
        let report = invariants_report(s);
        for r in &rs {
            ensure(poly.evaluate(&r.value).is_zero(), || {
                format!("sample {n}: DC_f(root) != 0")
            })?;
            roots += 1;
            let literal_agrees = r.closed_form == r.value;
            ensure(literal_agrees == r.closed_form_agrees, || {
                format!("sample {n}: flag inconsistent")
            })?;
            let tag = if r.epsilon > 0 { "+" } else { "-" };
            let key = format!("dcf_closed_form_agrees[{tag}]");
            ensure(
                report.get(&key) == Some(if literal_agrees { "true" } else { "false" }),
                || format!("sample {n}: report field {key} missing or wrong"),
            )?;
            if !literal_agrees {
                flagged += 1;
            }
        }
    }
    ensure(flagged == roots, || {
        format!(
            "closed form matched the root on {} of {roots} generic roots",
            roots - flagged
        )
    })?;
    Ok(format!(
        "{roots} roots exact, closed-form mismatch flagged on {flagged}, {:.1?}",
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("1 discriminant identity", criterion_1),
        ("2 stratum/projection pairing", criterion_2),
        ("3 contact-table realization", criterion_3),
        ("4 dual-route contact classification", criterion_4),
        ("5 determinacy stability", criterion_5),
        ("6 fixed example files", criterion_6),
        ("7 DC_f roots and closed-form flag", criterion_7),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {name}: FAIL ({detail})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
