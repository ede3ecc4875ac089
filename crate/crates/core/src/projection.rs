//! The orthogonal projection `φ(x, y) = (y, f(x, y))` along the asymptotic
//! direction and its A-singularity.
//!
//! Two routes are provided. [`classify_projection`] evaluates sign conditions
//! on the invariants; [`reduce_projection_jet`] brings `φ` to a prenormal
//! form by weighted-degree elimination and reads the class off the surviving
//! coefficients.

use std::fmt;

use thiserror::Error;

use crate::jet::{Axis, Jet2};
use crate::kclass::Sign;
use crate::monge::MongeSurface;
use crate::scalar::Scalar;
use crate::sign::{SignRule, SignTest};
use crate::trace::ReductionTrace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AClass {
    Fold,
    Beaks,
    Lips,
    Goose,
    Gulls,
    UglyGoose(Sign),
    UglyGulls,
    Twelve,
    Sixteen(Sign),
    Regular,
    /// None of the listed germs; carries the conditions that failed and,
    /// where known, the 4-jet.
    OutsideTable {
        failed: Vec<String>,
        four_jet: Option<String>,
    },
    /// A sign test came out indeterminate, or the jet is too short.
    Boundary(String),
}

impl AClass {
    /// A-codimension of the listed germs.
    pub fn codimension(&self) -> Option<u32> {
        match self {
            AClass::Beaks | AClass::Lips => Some(3),
            AClass::Goose | AClass::Gulls => Some(4),
            AClass::UglyGoose(_) | AClass::UglyGulls | AClass::Twelve | AClass::Sixteen(_) => Some(5),
            _ => None,
        }
    }

    /// Degree of A-determinacy: the top degree of the normal form.
    pub fn determinacy(&self) -> Option<u32> {
        match self {
            AClass::Beaks | AClass::Lips => Some(3),
            AClass::Goose => Some(4),
            AClass::Gulls | AClass::UglyGoose(_) | AClass::Sixteen(_) => Some(5),
            AClass::Twelve => Some(6),
            AClass::UglyGulls => Some(7),
            _ => None,
        }
    }

    pub fn normal_form(&self) -> Option<&'static str> {
        Some(match self {
            AClass::Beaks => "(x, y^3 - x^2y)",
            AClass::Lips => "(x, y^3 + x^2y)",
            AClass::Goose => "(x, y^3 + x^3y)",
            AClass::Gulls => "(x, xy^2 + y^4 + y^5)",
            AClass::UglyGoose(Sign::Plus) => "(x, y^3 + x^4y)",
            AClass::UglyGoose(Sign::Minus) => "(x, y^3 - x^4y)",
            AClass::UglyGulls => "(x, xy^2 + y^4 + y^7)",
            AClass::Twelve => "(x, xy^2 + y^5 + y^6)",
            AClass::Sixteen(Sign::Plus) => "(x, x^2y + y^4 + y^5)",
            AClass::Sixteen(Sign::Minus) => "(x, x^2y + y^4 - y^5)",
            _ => return None,
        })
    }

    /// Equality that ignores the failed-condition wording.
    pub fn same_verdict(&self, other: &AClass) -> bool {
        match (self, other) {
            (AClass::OutsideTable { four_jet: a, .. }, AClass::OutsideTable { four_jet: b, .. }) => a == b,
            _ => self == other,
        }
    }

    pub fn is_listed(&self) -> bool {
        self.codimension().is_some()
    }
}

impl fmt::Display for AClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AClass::Fold => f.write_str("fold"),
            AClass::Beaks => f.write_str("beaks"),
            AClass::Lips => f.write_str("lips"),
            AClass::Goose => f.write_str("goose"),
            AClass::Gulls => f.write_str("gulls"),
            AClass::UglyGoose(s) => write!(f, "ugly_goose({s})"),
            AClass::UglyGulls => f.write_str("ugly_gulls"),
            AClass::Twelve => f.write_str("twelve"),
            AClass::Sixteen(s) => write!(f, "sixteen({s})"),
            AClass::Regular => f.write_str("regular"),
            AClass::OutsideTable { four_jet, .. } => match four_jet {
                Some(j) => write!(f, "outside_table[4-jet {j}]"),
                None => f.write_str("outside_table"),
            },
            AClass::Boundary(why) => write!(f, "boundary({why})"),
        }
    }
}

/// Which leading part the weighted elimination is built around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProjectionCase {
    /// `a_30 != 0`: lead `x^3`, weights (1, 1).
    Cubic,
    /// `a_30 = 0`, `a_21 a_40 != 0`: lead `x^2y + x^4`, weights (1, 2).
    FoldQuartic,
    /// `a_30 = a_40 = 0`, `a_21 != 0`: lead `x^2y`, weights (1, 1).
    FoldFlat,
    /// `a_30 = a_21 = 0`, `a_12 a_40 != 0`: lead `xy^2 + x^4`, weights (2, 3).
    Ridge,
}

impl ProjectionCase {
    pub fn index(self) -> u8 {
        match self {
            ProjectionCase::Cubic => 1,
            ProjectionCase::FoldQuartic => 2,
            ProjectionCase::FoldFlat => 3,
            ProjectionCase::Ridge => 4,
        }
    }

    pub fn from_index(n: u8) -> Option<Self> {
        Some(match n {
            1 => ProjectionCase::Cubic,
            2 => ProjectionCase::FoldQuartic,
            3 => ProjectionCase::FoldFlat,
            4 => ProjectionCase::Ridge,
            _ => return None,
        })
    }

    /// The case whose hypotheses the surface meets, if any.
    pub fn of(s: &MongeSurface) -> Option<Self> {
        let (a30, a21, a12, a40) = (s.a(3, 0), s.a(2, 1), s.a(1, 2), s.a(4, 0));
        if !a30.is_zero() {
            Some(ProjectionCase::Cubic)
        } else if !a21.is_zero() {
            if a40.is_zero() {
                Some(ProjectionCase::FoldFlat)
            } else {
                Some(ProjectionCase::FoldQuartic)
            }
        } else if !a12.is_zero() && !a40.is_zero() {
            Some(ProjectionCase::Ridge)
        } else {
            None
        }
    }

    fn weights(self) -> (u32, u32) {
        match self {
            ProjectionCase::Cubic | ProjectionCase::FoldFlat => (1, 1),
            ProjectionCase::FoldQuartic => (1, 2),
            ProjectionCase::Ridge => (2, 3),
        }
    }

    fn lead_monomials(self) -> &'static [(u32, u32)] {
        match self {
            ProjectionCase::Cubic => &[(3, 0)],
            ProjectionCase::FoldQuartic => &[(2, 1), (4, 0)],
            ProjectionCase::FoldFlat => &[(2, 1)],
            ProjectionCase::Ridge => &[(1, 2), (4, 0)],
        }
    }

    /// Monomials kept as moduli, outside the lead.
    fn kept(self) -> &'static [(u32, u32)] {
        match self {
            ProjectionCase::Cubic => &[(1, 2), (1, 3), (1, 4)],
            ProjectionCase::FoldQuartic => &[(5, 0), (7, 0)],
            ProjectionCase::FoldFlat => &[(3, 0), (4, 0), (5, 0), (6, 0)],
            ProjectionCase::Ridge => &[(3, 0), (2, 1), (5, 0)],
        }
    }

    fn top_weight(self) -> u32 {
        match self {
            ProjectionCase::Cubic => 5,
            ProjectionCase::FoldQuartic => 7,
            ProjectionCase::FoldFlat => 6,
            ProjectionCase::Ridge => 12,
        }
    }

    fn hypotheses(self) -> &'static str {
        match self {
            ProjectionCase::Cubic => "a_30 != 0",
            ProjectionCase::FoldQuartic => "a_30 = 0, a_21 a_40 != 0",
            ProjectionCase::FoldFlat => "a_30 = a_40 = 0, a_21 != 0",
            ProjectionCase::Ridge => "a_30 = a_21 = 0, a_12 a_40 != 0",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProjectionError {
    #[error("surface does not meet the hypotheses {0}")]
    Hypothesis(&'static str),
    #[error("x^{0} y^{1} cannot be removed at weighted degree {2}")]
    Obstructed(u32, u32, u32),
    #[error(transparent)]
    Jet(#[from] crate::JetError),
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
}

/// Result of the weighted elimination.
#[derive(Debug, Clone)]
pub struct ReducedProjection {
    pub case: ProjectionCase,
    /// Second component; the first stays `y`.
    pub jet: Jet2,
    pub trace: ReductionTrace,
    /// Surviving plain coefficients outside the lead, by monomial.
    pub residues: Vec<(u32, u32, Scalar)>,
    /// Highest weighted degree that was normalized.
    pub reached: u32,
}

impl ReducedProjection {
    /// Plain coefficient of a kept monomial; `None` if never reached.
    pub fn residue(&self, i: u32, j: u32) -> Option<&Scalar> {
        self.residues
            .iter()
            .find(|(a, b, _)| *a == i && *b == j)
            .map(|(_, _, c)| c)
    }

    /// Same coefficient in the `a_ij` convention (times `i! j!`).
    pub fn residue_a(&self, i: u32, j: u32) -> Option<Scalar> {
        let c = self.residue(i, j)?;
        let f = |n: u32| (1..=n as i64).product::<i64>().max(1);
        Some(c * &Scalar::from_int(f(i) * f(j)))
    }
}

enum Gen {
    Source(u32, u32),
    Target(u32, u32),
}

/// Solves `M c = rhs` with free unknowns set to zero; pivots are taken from
/// the leftmost columns first.
fn solve(mut m: Vec<Vec<Scalar>>, mut rhs: Vec<Scalar>, ncols: usize) -> Result<Vec<Scalar>, usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        rhs.swap(r, p);
        let inv = m[r][c].inv();
        for v in &mut m[r][c..ncols] {
            *v = &*v * &inv;
        }
        rhs[r] = &rhs[r] * &inv;
        let pivot = m[r].clone();
        for i in 0..nrows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for (v, p) in m[i][c..ncols].iter_mut().zip(&pivot[c..ncols]) {
                    let d = &f * p;
                    *v -= &d;
                }
                let d = &f * &rhs[r];
                rhs[i] -= &d;
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    if let Some(bad) = (r..nrows).find(|&i| !rhs[i].is_zero()) {
        return Err(bad);
    }
    let mut sol = vec![Scalar::zero(); ncols];
    for (row, col) in pivots {
        sol[col] = rhs[row].clone();
    }
    Ok(sol)
}

/// Brings `(y, f)` to the prenormal form of `case` by weighted elimination.
///
/// At each weighted degree `d` every monomial outside the lead and the kept
/// set is removed using source moves `x ↦ x + c·m` and target moves
/// `Z ↦ Z + c·Y^a Z^b`. Elimination stops early once a kept coefficient
/// decides the class.
pub fn reduce_projection_jet(s: &MongeSurface, case: ProjectionCase) -> Result<ReducedProjection, ProjectionError> {
    if ProjectionCase::of(s) != Some(case) {
        return Err(ProjectionError::Hypothesis(case.hypotheses()));
    }
    let k = s.bound();
    let g = s.jet().clone();
    let (wx, wy) = case.weights();
    let weight = |i: u32, j: u32| wx * i + wy * j;
    let lead_deg = {
        let (i, j) = case.lead_monomials()[0];
        weight(i, j)
    };
    let mut lead = Jet2::zero(k);
    for &(i, j) in case.lead_monomials() {
        lead = &lead + &Jet2::monomial(k, i, j, g.monomial_coeff(i, j).clone());
    }
    let lead_x = lead.partial(Axis::X).with_bound(k);
    let mut lead_pows = vec![Jet2::constant(k, Scalar::one())];
    for b in 1..=k {
        let next = &lead_pows[b as usize - 1] * &lead;
        lead_pows.push(next);
    }
    let ypow = |a: u32| Jet2::monomial(k, 0, a, Scalar::one());

    let mut trace = ReductionTrace::new(g);
    let mut residues = Vec::new();
    let mut reached = 0;
    let top = case.top_weight();
    for d in 1..=top {
        let monos: Vec<(u32, u32)> = crate::jet::monomials(k)
            .filter(|&(i, j)| i + j >= 1 && weight(i, j) == d)
            .collect();
        if monos.is_empty() {
            reached = d;
            continue;
        }
        let is_kept = |i: u32, j: u32| {
            case.kept().contains(&(i, j)) || (d == lead_deg && case.lead_monomials().contains(&(i, j)))
        };
        let mut gens = Vec::new();
        let mut images = Vec::new();
        // source moves x ↦ x + m with weight(m) = d − lead_deg + wx
        if d + wx > lead_deg {
            let wm = d + wx - lead_deg;
            for (i, j) in crate::jet::monomials(k) {
                if i + j >= 1 && weight(i, j) == wm && !(i == 1 && j == 0) {
                    gens.push(Gen::Source(i, j));
                    images.push(&Jet2::monomial(k, i, j, Scalar::one()) * &lead_x);
                }
            }
        }
        // target moves Z ↦ Z + Y^a Z^b, leading part y^a · lead^b
        for b in 0..=(d / lead_deg) {
            let rest = d - b * lead_deg;
            if rest % wy != 0 {
                continue;
            }
            let a = rest / wy;
            if (a == 0 && b <= 1) || a > k {
                continue;
            }
            gens.push(Gen::Target(a, b));
            images.push(&ypow(a) * &lead_pows[b as usize]);
        }
        let rows: Vec<(u32, u32)> = monos.iter().copied().filter(|&(i, j)| !is_kept(i, j)).collect();
        // a weight-preserving source move leaves pure y terms behind, so repeat
        for _ in 0..3 {
            let cur = trace.terminal().clone();
            if rows.iter().all(|&(i, j)| cur.monomial_coeff(i, j).is_zero()) {
                break;
            }
            let matrix: Vec<Vec<Scalar>> = rows
                .iter()
                .map(|&(i, j)| images.iter().map(|im| im.monomial_coeff(i, j).clone()).collect())
                .collect();
            let rhs: Vec<Scalar> = rows.iter().map(|&(i, j)| -cur.monomial_coeff(i, j)).collect();
            let sol = solve(matrix, rhs, gens.len()).map_err(|bad| {
                let (i, j) = rows[bad];
                ProjectionError::Obstructed(i, j, d)
            })?;

            let mut p = Jet2::zero(k);
            let mut t = Jet2::y(k);
            for (gen, c) in gens.iter().zip(&sol) {
                if c.is_zero() {
                    continue;
                }
                match *gen {
                    Gen::Source(i, j) => p = &p + &Jet2::monomial(k, i, j, c.clone()),
                    Gen::Target(a, b) => t = &t + &Jet2::monomial(k, a, b, c.clone()),
                }
            }
            if !p.is_zero() {
                trace.substitute(format!("weight {d}: source change"), &Jet2::x(k) + &p, Jet2::y(k))?;
            }
            if t != Jet2::y(k) {
                trace.push(
                    format!("weight {d}: target change"),
                    Jet2::x(k),
                    Jet2::y(k),
                    Jet2::constant(k, Scalar::one()),
                    Some(t),
                )?;
            }
        }
        if let Some(&(i, j)) = rows
            .iter()
            .find(|&&(i, j)| !trace.terminal().monomial_coeff(i, j).is_zero())
        {
            return Err(ProjectionError::Obstructed(i, j, d));
        }
        reached = d;
        let now = trace.terminal();
        let mut decisive = false;
        for &(i, j) in case.kept() {
            if weight(i, j) == d && i + j <= k {
                let c = now.monomial_coeff(i, j).clone();
                decisive |= !c.is_zero() && stops_at(case, i, j);
                residues.push((i, j, c));
            }
        }
        if decisive {
            break;
        }
    }
    Ok(ReducedProjection {
        case,
        jet: trace.terminal().clone(),
        trace,
        residues,
        reached,
    })
}

fn stops_at(case: ProjectionCase, i: u32, j: u32) -> bool {
    matches!(
        (case, i, j),
        (ProjectionCase::Cubic, 1, 2) | (ProjectionCase::Cubic, 1, 3) | (ProjectionCase::FoldQuartic, 5, 0)
    )
}

/// Sign of `10 a_31² − 10 a_22 a_40 + a_12 a_50`; `None` when it vanishes.
pub fn sixteen_sign(s: &MongeSurface) -> Result<Option<Sign>, ProjectionError> {
    if !s.a(3, 0).is_zero() || !s.a(2, 1).is_zero() || s.a(1, 2).is_zero() || s.a(4, 0).is_zero() {
        return Err(ProjectionError::Precondition("a_30 = a_21 = 0, a_12 a_40 != 0"));
    }
    let v = sixteen_quantity(s);
    Ok(if v.is_zero() {
        None
    } else {
        Some(Sign::of_positive(v.is_positive()))
    })
}

pub fn sixteen_quantity(s: &MongeSurface) -> Scalar {
    let ten = Scalar::from_int(10);
    let t1 = &ten * &s.a(3, 1).pow(2);
    let t2 = &ten * &(s.a(2, 2) * s.a(4, 0));
    let t3 = s.a(1, 2) * s.a(5, 0);
    &(&t1 - &t2) + &t3
}

/// `a_50 (a_21 a_60 − 5 a_31 a_50)`.
pub fn twelve_quantity(s: &MongeSurface) -> Scalar {
    let inner = &(s.a(2, 1) * s.a(6, 0)) - &(&Scalar::from_int(5) * &(s.a(3, 1) * s.a(5, 0)));
    s.a(5, 0) * &inner
}

#[derive(Debug, Clone)]
pub struct ProjectionVerdict {
    /// Class from the sign conditions on the invariants.
    pub class: AClass,
    pub rule: &'static str,
    /// Class read off the weighted elimination, when a case applies.
    pub reduced: Option<AClass>,
    pub reduction: Option<ReducedProjection>,
    pub agree: bool,
}

fn outside(failed: &[&str], four_jet: Option<&str>) -> AClass {
    AClass::OutsideTable {
        failed: failed.iter().map(|s| s.to_string()).collect(),
        four_jet: four_jet.map(str::to_string),
    }
}

fn needs(s: &MongeSurface, degree: u32) -> Option<AClass> {
    (s.bound() < degree).then(|| AClass::Boundary(format!("needs the {degree}-jet")))
}

/// Class from the sign conditions on the invariants.
pub fn projection_rule(s: &MongeSurface, sr: &SignRule) -> (AClass, &'static str) {
    let inv = s.invariants();
    let t = |v: &Scalar| sr.test(v);
    let bnd = |what: &str| AClass::Boundary(format!("sign of {what}"));
    let (a30, a21, a12, a40) = (s.a(3, 0), s.a(2, 1), s.a(1, 2), s.a(4, 0));
    let t30 = t(a30);
    if t30 == SignTest::Indeterminate {
        return (bnd("a_30"), "a_30 test");
    }
    if t30.is_nonzero() {
        match t(&inv.q_d4) {
            SignTest::Positive => return (AClass::Beaks, "a_30 != 0, Q_D4 > 0: beaks"),
            SignTest::Negative => return (AClass::Lips, "a_30 != 0, Q_D4 < 0: lips"),
            SignTest::Indeterminate => return (bnd("Q_D4"), "Q_D4 test"),
            SignTest::Zero => {}
        }
        if let Some(b) = needs(s, 4) {
            return (b, "goose test");
        }
        match t(&inv.q_e7) {
            SignTest::Indeterminate => return (bnd("Q_E7"), "Q_E7 test"),
            x if x.is_nonzero() => return (AClass::Goose, "Q_D4 = 0, Q_E7 != 0: goose"),
            _ => {}
        }
        if let Some(b) = needs(s, 5) {
            return (b, "ugly goose test");
        }
        return match t(&inv.q_estar) {
            SignTest::Positive => (
                AClass::UglyGoose(Sign::Plus),
                "Q_D4 = Q_E7 = 0, Q_E* > 0: positive ugly goose",
            ),
            SignTest::Negative => (
                AClass::UglyGoose(Sign::Minus),
                "Q_D4 = Q_E7 = 0, Q_E* < 0: negative ugly goose",
            ),
            SignTest::Indeterminate => (bnd("Q_E*"), "Q_E* test"),
            SignTest::Zero => (outside(&["Q_E* != 0"], None), "Q_D4 = Q_E7 = Q_E* = 0: not listed"),
        };
    }
    let (t21, t40, t12) = (t(a21), t(a40), t(a12));
    if t21 == SignTest::Indeterminate {
        return (bnd("a_21"), "a_21 test");
    }
    if t40 == SignTest::Indeterminate {
        return (bnd("a_40"), "a_40 test");
    }
    if t21.is_nonzero() && t40.is_nonzero() {
        if let Some(b) = needs(s, 5) {
            return (b, "gulls test");
        }
        match t(&inv.r_a4) {
            SignTest::Indeterminate => return (bnd("R_A4"), "R_A4 test"),
            x if x.is_nonzero() => return (AClass::Gulls, "a_30 = 0, a_21 a_40 != 0, R_A4 != 0: gulls"),
            _ => {}
        }
        if let Some(b) = needs(s, 7) {
            return (b, "ugly gulls test");
        }
        return match t(&inv.r_a6) {
            SignTest::Indeterminate => (bnd("R_A6"), "R_A6 test"),
            x if x.is_nonzero() => (AClass::UglyGulls, "R_A4 = 0, R_A6 != 0: ugly gulls"),
            _ => (
                outside(&["R_A4 != 0", "R_A6 != 0"], None),
                "R_A4 = R_A6 = 0: not listed",
            ),
        };
    }
    if t21.is_nonzero() {
        if let Some(b) = needs(s, 6) {
            return (b, "12-singularity test");
        }
        return match t(&twelve_quantity(s)) {
            SignTest::Indeterminate => (bnd("a_50 (a_21 a_60 - 5 a_31 a_50)"), "12-singularity test"),
            x if x.is_nonzero() => (
                AClass::Twelve,
                "a_30 = a_40 = 0, a_21 != 0, a_50 (a_21 a_60 - 5 a_31 a_50) != 0: 12-singularity",
            ),
            _ => (
                outside(&["a_50 (a_21 a_60 - 5 a_31 a_50) != 0"], Some("(x, xy^2)")),
                "a_30 = a_40 = 0, a_21 != 0: 4-jet (x, xy^2), class not determined",
            ),
        };
    }
    if t12 == SignTest::Indeterminate {
        return (bnd("a_12"), "a_12 test");
    }
    if t12.is_nonzero() && t40.is_nonzero() {
        if let Some(b) = needs(s, 5) {
            return (b, "16-singularity test");
        }
        return match t(&sixteen_quantity(s)) {
            SignTest::Positive => (
                AClass::Sixteen(Sign::Plus),
                "a_30 = a_21 = 0, a_12 a_40 != 0, 10 a_31^2 - 10 a_22 a_40 + a_12 a_50 > 0: 16^+",
            ),
            SignTest::Negative => (
                AClass::Sixteen(Sign::Minus),
                "a_30 = a_21 = 0, a_12 a_40 != 0, 10 a_31^2 - 10 a_22 a_40 + a_12 a_50 < 0: 16^-",
            ),
            SignTest::Indeterminate => (bnd("10 a_31^2 - 10 a_22 a_40 + a_12 a_50"), "16-singularity test"),
            SignTest::Zero => (
                outside(&["10 a_31^2 - 10 a_22 a_40 + a_12 a_50 != 0"], Some("(x, x^2y+y^4)")),
                "a_30 = a_21 = 0, a_12 a_40 != 0: 4-jet (x, x^2y+y^4), class not determined",
            ),
        };
    }
    let failed: &[&str] = if t21.is_zero() && t12.is_zero() {
        &["a_30 != 0", "a_21 != 0", "a_12 a_40 != 0"]
    } else {
        &["a_30 != 0", "a_21 != 0", "a_40 != 0"]
    };
    (outside(failed, None), "no listed germ applies")
}

/// Class read off the surviving coefficients of the elimination.
pub fn class_from_reduction(r: &ReducedProjection) -> AClass {
    let nz = |i, j| r.residue(i, j).is_some_and(|c| !c.is_zero());
    let known = |i, j| r.residue(i, j).is_some();
    let lead = |i: u32, j: u32| r.jet.monomial_coeff(i, j).clone();
    let sign_rel = |i: u32, j: u32, li: u32, lj: u32| {
        let p = r.residue(i, j).expect("known") * &lead(li, lj);
        Sign::of_positive(p.is_positive())
    };
    let short = |deg: u32| AClass::Boundary(format!("needs the {deg}-jet"));
    match r.case {
        ProjectionCase::Cubic => {
            if nz(1, 2) {
                return match sign_rel(1, 2, 3, 0) {
                    Sign::Plus => AClass::Lips,
                    Sign::Minus => AClass::Beaks,
                };
            }
            if !known(1, 3) {
                return short(4);
            }
            if nz(1, 3) {
                return AClass::Goose;
            }
            if !known(1, 4) {
                return short(5);
            }
            if nz(1, 4) {
                return AClass::UglyGoose(sign_rel(1, 4, 3, 0));
            }
            outside(&["x y^4 coefficient != 0"], None)
        }
        ProjectionCase::FoldQuartic => {
            if !known(5, 0) {
                return short(5);
            }
            if nz(5, 0) {
                return AClass::Gulls;
            }
            if !known(7, 0) {
                return short(7);
            }
            if nz(7, 0) {
                return AClass::UglyGulls;
            }
            outside(&["x^5 coefficient != 0", "x^7 coefficient != 0"], None)
        }
        ProjectionCase::FoldFlat => {
            if !known(6, 0) {
                return short(6);
            }
            if nz(5, 0) && nz(6, 0) {
                AClass::Twelve
            } else {
                outside(&["x^5 and x^6 coefficients != 0"], Some("(x, xy^2)"))
            }
        }
        ProjectionCase::Ridge => {
            if !known(5, 0) {
                return short(5);
            }
            if nz(5, 0) {
                // after x ↦ λx, y ↦ νy, Z ↦ μZ the sign left on x^5 is that of c_12 c_50
                AClass::Sixteen(sign_rel(5, 0, 1, 2))
            } else {
                outside(&["x^5 coefficient != 0"], Some("(x, x^2y+y^4)"))
            }
        }
    }
}

/// Projection class by the invariant conditions, cross-checked against the
/// weighted elimination.
pub fn classify_projection(s: &MongeSurface, sr: &SignRule) -> Result<ProjectionVerdict, ProjectionError> {
    let (class, rule) = projection_rule(s, sr);
    let reduction = match ProjectionCase::of(s) {
        Some(case) => Some(reduce_projection_jet(s, case)?),
        None => None,
    };
    let reduced = reduction.as_ref().map(class_from_reduction);
    let agree = match (&class, &reduced) {
        (AClass::Boundary(_), _) => true,
        (_, None) => matches!(class, AClass::OutsideTable { .. }),
        (c, Some(r)) => c.same_verdict(r),
    };
    Ok(ProjectionVerdict {
        class,
        rule,
        reduced,
        reduction,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    fn surf(k: u32, coeffs: &[(u32, u32, i64)]) -> MongeSurface {
        MongeSurface::from_coeffs(k, coeffs.iter().map(|&(i, j, v)| (i, j, Scalar::from_int(v)))).unwrap()
    }

    fn verdict(s: &MongeSurface) -> ProjectionVerdict {
        classify_projection(s, &SignRule::Exact).unwrap()
    }

    #[test]
    fn examples() {
        let v = verdict(&surf(7, &[(0, 2, 1), (3, 0, 1), (1, 2, -1)]));
        assert_eq!(v.class, AClass::Beaks);
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (3, 0, 1), (1, 2, 1)]));
        assert_eq!(v.class, AClass::Lips);
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (3, 0, 1), (1, 3, 1)]));
        assert_eq!(v.class, AClass::Goose);
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (2, 1, 1), (4, 0, 1), (5, 0, 1)]));
        assert_eq!(v.class, AClass::Gulls);
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (1, 2, 1), (4, 0, 1), (5, 0, 1)]));
        assert_eq!(v.class, AClass::Sixteen(Sign::Plus));
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (1, 2, 1), (4, 0, 1), (5, 0, -1)]));
        assert_eq!(v.class, AClass::Sixteen(Sign::Minus));
        assert!(v.agree);
        let v = verdict(&surf(7, &[(0, 2, 1), (1, 2, 1), (4, 0, 1)]));
        assert!(matches!(v.class, AClass::OutsideTable { four_jet: Some(_), .. }));
        assert!(v.agree);
    }

    #[test]
    fn cubic_quintic_coefficient() {
        // lead x^3 only, a_13 = 0: x y^4 coefficient is (a_30 a_14 − 3 a_22²)/(24 a_30) / 4!
        let s = surf(
            5,
            &[
                (0, 2, 1),
                (3, 0, 2),
                (2, 2, 3),
                (1, 4, 5),
                (4, 0, 7),
                (3, 1, -1),
                (0, 5, 2),
            ],
        );
        let r = reduce_projection_jet(&s, ProjectionCase::Cubic).unwrap();
        let want = &Scalar::from_int(2 * 5 - 3 * 9) / &Scalar::from_int(24 * 2);
        assert_eq!(r.residue_a(1, 4).unwrap(), &want * &Scalar::from_int(24));
        assert!(r.trace.replay().unwrap());
    }

    #[test]
    fn fold_flat_coefficients() {
        let s = surf(
            6,
            &[
                (0, 2, 1),
                (2, 1, 2),
                (3, 1, 3),
                (5, 0, 5),
                (6, 0, 7),
                (1, 2, 1),
                (2, 2, -1),
            ],
        );
        let r = reduce_projection_jet(&s, ProjectionCase::FoldFlat).unwrap();
        assert_eq!(r.residue_a(5, 0).unwrap(), Scalar::from_int(5));
        let beta60 = &Scalar::from_int(2 * 7 - 5 * 3 * 5) / &Scalar::from_int(2);
        assert_eq!(r.residue_a(6, 0).unwrap(), beta60);
        assert!(r.trace.replay().unwrap());
    }

    #[test]
    fn ridge_coefficient() {
        let s = surf(5, &[(0, 2, 1), (1, 2, 3), (4, 0, 2), (3, 1, 1), (2, 2, 5), (5, 0, 7)]);
        let r = reduce_projection_jet(&s, ProjectionCase::Ridge).unwrap();
        let want = &sixteen_quantity(&s) / &Scalar::from_int(3);
        assert_eq!(r.residue_a(5, 0).unwrap(), want);
    }

    #[test]
    fn fold_quartic_seventh_order() {
        // lead a_21 x^2y/2 + a_40 x^4/24 and a_50 = 0; the closed form
        // (35 a_32 a_40² − 21 a_21 a_40 a_51 + 3 a_21² a_70)/(15120 a_21²)
        // is the plain x^7 coefficient
        for (a21, a40, a32, a51, a70) in [(2, 3, 5, -1, 4), (-1, 7, 2, 3, -5), (3, -2, 0, 1, 1)] {
            let s = surf(
                7,
                &[
                    (0, 2, 1),
                    (2, 1, a21),
                    (4, 0, a40),
                    (3, 2, a32),
                    (5, 1, a51),
                    (7, 0, a70),
                ],
            );
            let r = reduce_projection_jet(&s, ProjectionCase::FoldQuartic).unwrap();
            assert!(r.residue(5, 0).unwrap().is_zero());
            let num = 35 * a32 * a40 * a40 - 21 * a21 * a40 * a51 + 3 * a21 * a21 * a70;
            let bar = Scalar::from_rational(rational(num, 15120 * a21 * a21));
            assert_eq!(r.residue(7, 0).unwrap(), &bar);
            assert!(r.trace.replay().unwrap());
        }
    }

    #[test]
    fn sixteen_sign_examples() {
        let s = surf(5, &[(0, 2, 1), (1, 2, 1), (4, 0, 1), (5, 0, 1)]);
        assert_eq!(sixteen_sign(&s).unwrap(), Some(Sign::Plus));
        let s = surf(5, &[(0, 2, 1), (1, 2, 1), (4, 0, 1), (5, 0, -1)]);
        assert_eq!(sixteen_sign(&s).unwrap(), Some(Sign::Minus));
        let s = surf(5, &[(0, 2, 1), (1, 2, 1), (4, 0, 1), (3, 1, 1), (2, 2, 1)]);
        assert_eq!(sixteen_sign(&s).unwrap(), None);
        assert!(sixteen_sign(&surf(5, &[(0, 2, 1), (3, 0, 1)])).is_err());
    }
}
