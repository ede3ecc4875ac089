//! Key-value reports. Every number is printed exactly, as `p/q` or
//! `p/q+r/s*sqrt(d)`.

use std::fmt;

use crate::contact::{classify_contact, contact_function, degenerate_cylinder, BaseCurve};
use crate::kclass::KClass;
use crate::milnor::{default_probe_bound, milnor_oracle};
use crate::monge::MongeSurface;
use crate::projection::classify_projection;
use crate::scalar::Scalar;
use crate::sign::SignRule;
use crate::stratifier::{classify_stratum, StratumId};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Entry {
    Field(String, String),
    /// Multi-line text, printed indented under its key.
    Block(String, String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<Entry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn field(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries.push(Entry::Field(key.into(), value.to_string()));
        self
    }

    pub fn block(&mut self, key: impl Into<String>, text: impl fmt::Display) -> &mut Self {
        self.entries.push(Entry::Block(key.into(), text.to_string()));
        self
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.entries.extend(other.entries);
        self
    }

    /// Value of the first field with this key.
    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find_map(|e| match e {
            Entry::Field(k, v) if k == key => Some(v.as_str()),
            _ => None,
        })
    }

    pub fn fields(&self) -> impl Iterator<Item = (&str, &str)> {
        self.entries.iter().filter_map(|e| match e {
            Entry::Field(k, v) => Some((k.as_str(), v.as_str())),
            Entry::Block(..) => None,
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match e {
                Entry::Field(k, v) => writeln!(f, "{k}: {v}")?,
                Entry::Block(k, text) => {
                    writeln!(f, "{k}:")?;
                    for line in text.lines() {
                        writeln!(f, "  {line}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The ten closed-form invariants and the roots of `DC_f`.
pub fn invariants_report(s: &MongeSurface) -> Report {
    let mut r = Report::new();
    r.field("degree_bound", s.bound());
    let inv = s.invariants();
    for (name, v) in inv.named() {
        r.field(name, v);
    }
    let poly = s.cubic_discriminant_poly();
    r.field("DC_f.c2", &poly.c2)
        .field("DC_f.c1", &poly.c1)
        .field("DC_f.c0", &poly.c0);
    let disc = poly.discriminant();
    let gap = &disc - &(&inv.q_d4.pow(3) * &Scalar::ratio(1, 144));
    r.field("DC_f.discriminant", &disc)
        .field("DC_f.discriminant_minus_Q_D4^3/144", gap);
    match s.dcf_roots() {
        Ok(roots) => {
            for root in roots {
                let tag = match root.epsilon {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                };
                r.field(format!("dcf_root[{tag}]"), &root.value)
                    .field(format!("dcf_root[{tag}].residual"), poly.evaluate(&root.value))
                    .field(format!("dcf_closed_form[{tag}]"), &root.closed_form)
                    .field(format!("dcf_closed_form_agrees[{tag}]"), root.closed_form_agrees);
            }
        }
        Err(e) => {
            r.field("dcf_roots", format!("none ({e})"));
        }
    }
    r
}

pub fn stratum_report(s: &MongeSurface, sr: &SignRule) -> Report {
    let st = classify_stratum(s, sr);
    let mut r = Report::new();
    match st.id {
        Some(id) => {
            r.field("stratum", id)
                .field("stratum_name", id.name())
                .field("stratum_codimension", id.codimension())
                .field("stratum_conditions", id.conditions());
            if let Some(p) = id.paired_projection() {
                r.field("stratum_paired_projection", p);
            }
        }
        None => {
            r.field(
                "stratum",
                st.boundary
                    .as_ref()
                    .map_or("outside".to_string(), |b| format!("boundary({b})")),
            );
        }
    }
    for c in &st.checks {
        let v = match c.holds {
            Some(true) => "holds",
            Some(false) => "fails",
            None => "indeterminate",
        };
        r.field(format!("check[{}]", c.condition), v);
    }
    r
}

pub fn projection_report(s: &MongeSurface, sr: &SignRule, trace: bool) -> Result<Report, crate::Error> {
    let v = classify_projection(s, sr)?;
    let mut r = Report::new();
    r.field("projection", &v.class).field("projection_rule", v.rule);
    if let Some(c) = v.class.codimension() {
        r.field("projection_codimension", c);
    }
    if let Some(nf) = v.class.normal_form() {
        r.field("projection_normal_form", nf);
    }
    r.field(
        "projection_reduced",
        v.reduced.as_ref().map_or("none".to_string(), |c| c.to_string()),
    )
    .field("projection_agree", v.agree);
    if let Some(red) = &v.reduction {
        r.field("projection_case", format!("{:?}", red.case)).field(
            "projection_reduced_jet",
            red.jet.truncated(red.reached.min(red.jet.bound())),
        );
        for (i, j, c) in &red.residues {
            r.field(format!("projection_residue[x^{i}y^{j}]"), c);
        }
        if trace {
            r.block("projection_trace", &red.trace);
        }
    }
    Ok(r)
}

pub fn contact_report(s: &MongeSurface, c: &BaseCurve, sr: &SignRule, trace: bool) -> Result<Report, crate::Error> {
    let v = classify_contact(s, c, sr)?;
    let mut r = Report::new();
    r.field("curve", c)
        .field("contact", &v.class)
        .field("contact_rule", v.rule.rule)
        .field("contact_reduced", &v.reduced)
        .field("contact_agree", v.agree);
    if v.class != KClass::Regular {
        let f = contact_function(s, c)?;
        let m = milnor_oracle(&f.jet, default_probe_bound(s.bound()));
        r.field("milnor_mu", m.mu).field("milnor_corank", m.corank);
    }
    if trace {
        r.block("contact_trace", &v.trace);
    }
    Ok(r)
}

/// Directrices for each target; unreachable targets are reported, not raised.
pub fn cylinder_report(s: &MongeSurface, targets: &[KClass]) -> Report {
    let mut r = Report::new();
    for t in targets {
        match degenerate_cylinder(s, t) {
            Ok(curves) => {
                for (n, c) in curves.iter().enumerate() {
                    r.field(format!("cylinder[{t}][{n}]"), c);
                }
            }
            Err(e) => {
                r.field(format!("cylinder[{t}]"), format!("unreachable ({e})"));
            }
        }
    }
    r
}

/// Targets listed for the surface's stratum, or every constructible class
/// when it lies outside the table.
pub fn default_targets(s: &MongeSurface, sr: &SignRule) -> Vec<KClass> {
    match classify_stratum(s, sr).id {
        Some(id) => id.contact_targets(),
        None => {
            let mut all: Vec<KClass> = Vec::new();
            for id in StratumId::ALL {
                for t in id.contact_targets() {
                    if !all.contains(&t) {
                        all.push(t);
                    }
                }
            }
            all
        }
    }
}

pub fn full_report(s: &MongeSurface, sr: &SignRule, trace: bool) -> Result<Report, crate::Error> {
    let mut r = stratum_report(s, sr);
    r.extend(invariants_report(s));
    match projection_report(s, sr, trace) {
        Ok(p) => r.extend(p),
        Err(e) => r.field("projection", format!("error ({e})")),
    };
    r.extend(cylinder_report(s, &default_targets(s, sr)));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(coeffs: &[(u32, u32, i64)]) -> MongeSurface {
        MongeSurface::from_coeffs(7, coeffs.iter().map(|&(i, j, v)| (i, j, Scalar::from_int(v)))).unwrap()
    }

    #[test]
    fn fields_are_exact() {
        let s = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, -1)]);
        let r = invariants_report(&s);
        assert_eq!(r.get("Q_D4"), Some("1/1"));
        assert_eq!(r.get("DC_f.discriminant_minus_Q_D4^3/144"), Some("0/1"));
        assert_eq!(r.get("dcf_closed_form_agrees[+]"), Some("false"));
        let r = full_report(&s, &SignRule::Exact, false).unwrap();
        assert_eq!(r.get("stratum"), Some("(i)"));
        assert_eq!(r.get("projection"), Some("beaks"));
        assert!(r.get("cylinder[D_5][0]").is_some());
        let lips = surf(&[(0, 2, 1), (3, 0, 1), (1, 2, 1)]);
        let r = full_report(&lips, &SignRule::Exact, false).unwrap();
        assert_eq!(r.get("stratum"), Some("(ii)"));
        assert_eq!(r.get("projection"), Some("lips"));
        assert!(r.get("cylinder[D_4^+][0]").is_some());
    }
}
