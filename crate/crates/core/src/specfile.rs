//! Line-oriented surface files.
//!
//! ```text
//! # comment
//! monge K=7
//! a 0 2 1/1
//! a 3 0 -2/3
//! ```
//!
//! Coefficients are `a_ij`, the partial derivatives at the origin. The
//! canonical printed form lists nonzero coefficients by degree, then by
//! descending power of `x`, with no comments or blank lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::contact::BaseCurve;
use crate::jet::{monomials, Jet2, JetError};
use crate::monge::{MongeError, MongeSurface};
use crate::scalar::{parse_decimal, parse_rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: duplicate coefficient a {i} {j} (first given on line {first})")]
    Duplicate { line: usize, first: usize, i: u32, j: u32 },
    #[error("line {line}: a {i} {j} exceeds the degree bound K={bound}")]
    AboveBound { line: usize, i: u32, j: u32, bound: u32 },
    #[error("missing `monge K=<n>` header")]
    MissingHeader,
    #[error("{0}")]
    Invalid(#[from] MongeError),
    #[error("{0}")]
    Jet(#[from] JetError),
    #[error("curve coefficient {index}: {msg}")]
    Curve { index: usize, msg: String },
}

/// Parsed file contents before surface validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    pub bound: u32,
    pub coeffs: Vec<(u32, u32, Scalar)>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    /// Accept decimal literals such as `0.125`, converted exactly.
    pub allow_decimal: bool,
}

fn syntax(line: usize, msg: impl Into<String>) -> SpecError {
    SpecError::Syntax { line, msg: msg.into() }
}

fn parse_value(text: &str, line: usize, o: ParseOptions) -> Result<Scalar, SpecError> {
    if text.contains("sqrt(") {
        return text.parse::<Scalar>().map_err(|e| syntax(line, e.to_string()));
    }
    match parse_rational(text) {
        Ok(r) if !text.contains(['.', 'e', 'E']) || o.allow_decimal => Ok(Scalar::from_rational(r)),
        Ok(_) => Err(syntax(line, format!("decimal `{text}` needs float input mode"))),
        Err(e) => {
            if o.allow_decimal {
                if let Some(r) = parse_decimal(text) {
                    return Ok(Scalar::from_rational(r));
                }
            }
            Err(syntax(line, e.to_string()))
        }
    }
}

fn parse_index(tok: Option<&str>, line: usize) -> Result<u32, SpecError> {
    let tok = tok.ok_or_else(|| syntax(line, "expected `a <i> <j> <value>`"))?;
    tok.parse().map_err(|_| syntax(line, format!("bad index `{tok}`")))
}

pub fn parse_spec(text: &str, o: ParseOptions) -> Result<SurfaceSpec, SpecError> {
    let mut bound = None;
    let mut coeffs: Vec<(u32, u32, Scalar)> = Vec::new();
    let mut seen: Vec<(u32, u32, usize)> = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut toks = body.split_whitespace();
        match toks.next() {
            Some("monge") => {
                if bound.is_some() {
                    return Err(syntax(line, "second header"));
                }
                let k = toks
                    .next()
                    .and_then(|t| t.strip_prefix("K="))
                    .ok_or_else(|| syntax(line, "expected `monge K=<n>`"))?;
                let k: u32 = k.parse().map_err(|_| syntax(line, format!("bad degree bound `{k}`")))?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing text after header"));
                }
                bound = Some(k);
            }
            Some("a") => {
                let k = bound.ok_or_else(|| syntax(line, "coefficient before `monge K=<n>` header"))?;
                let i = parse_index(toks.next(), line)?;
                let j = parse_index(toks.next(), line)?;
                let v = toks
                    .next()
                    .ok_or_else(|| syntax(line, "expected `a <i> <j> <value>`"))?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing text after coefficient"));
                }
                if i + j > k {
                    return Err(SpecError::AboveBound { line, i, j, bound: k });
                }
                if let Some(&(_, _, first)) = seen.iter().find(|(a, b, _)| (*a, *b) == (i, j)) {
                    return Err(SpecError::Duplicate { line, first, i, j });
                }
                seen.push((i, j, line));
                coeffs.push((i, j, parse_value(v, line, o)?));
            }
            Some(other) => return Err(syntax(line, format!("unknown directive `{other}`"))),
            None => unreachable!(),
        }
    }
    let bound = bound.ok_or(SpecError::MissingHeader)?;
    Ok(SurfaceSpec { bound, coeffs })
}

impl SurfaceSpec {
    pub fn surface(&self) -> Result<MongeSurface, SpecError> {
        let jet = Jet2::from_coeffs(self.bound, self.coeffs.iter().cloned())?;
        Ok(MongeSurface::new(jet)?)
    }

    pub fn from_surface(s: &MongeSurface) -> Self {
        let coeffs = monomials(s.bound())
            .filter(|&(i, j)| !s.a(i, j).is_zero())
            .map(|(i, j)| (i, j, s.a(i, j).clone()))
            .collect();
        SurfaceSpec {
            bound: s.bound(),
            coeffs,
        }
    }
}

/// Parses a directrix given as `g1,g2,...`; empty text or `0` is the
/// zero curve.
pub fn parse_curve(text: &str, o: ParseOptions) -> Result<BaseCurve, SpecError> {
    let text = text.trim();
    if text.is_empty() || text == "0" {
        return Ok(BaseCurve::zero());
    }
    let gamma = text
        .split(',')
        .enumerate()
        .map(|(n, t)| {
            parse_value(t.trim(), 0, o).map_err(|e| match e {
                SpecError::Syntax { msg, .. } => SpecError::Curve { index: n + 1, msg },
                e => e,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BaseCurve::new(gamma))
}

/// Parses and validates in one step.
pub fn read_surface(text: &str, o: ParseOptions) -> Result<MongeSurface, SpecError> {
    parse_spec(text, o)?.surface()
}

pub fn print_surface(s: &MongeSurface) -> String {
    let spec = SurfaceSpec::from_surface(s);
    let mut coeffs = spec.coeffs;
    coeffs.sort_by_key(|&(i, j, _)| (i + j, std::cmp::Reverse(i)));
    let mut out = format!("monge K={}\n", spec.bound);
    for (i, j, v) in coeffs {
        let _ = writeln!(out, "a {i} {j} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const LIPS: &str = "# lips\nmonge K=5\na 0 2 1/1\na 3 0 1/1\na 1 2 -1/1\n";

    #[test]
    fn parse_and_print() {
        let s = read_surface(LIPS, ParseOptions::default()).unwrap();
        assert_eq!(s.invariants().q_d4, Scalar::from_int(1));
        let canon = print_surface(&s);
        assert_eq!(canon, "monge K=5\na 0 2 1/1\na 3 0 1/1\na 1 2 -1/1\n");
        assert_eq!(
            print_surface(&read_surface(&canon, ParseOptions::default()).unwrap()),
            canon
        );
    }

    #[test]
    fn errors_carry_lines() {
        let o = ParseOptions::default();
        let e = parse_spec("monge K=5\na 0 2 1//2\n", o).unwrap_err();
        assert!(matches!(e, SpecError::Syntax { line: 2, .. }), "{e}");
        let e = parse_spec("monge K=5\na 0 2 1\n# x\na 0 2 3\n", o).unwrap_err();
        assert_eq!(
            e,
            SpecError::Duplicate {
                line: 4,
                first: 2,
                i: 0,
                j: 2
            }
        );
        let e = read_surface("monge K=5\na 3 0 1\n", o).unwrap_err();
        assert_eq!(e, SpecError::Invalid(MongeError::Umbilic));
        assert!(matches!(
            parse_spec("a 0 2 1\n", o),
            Err(SpecError::Syntax { line: 1, .. })
        ));
        assert_eq!(parse_spec("", o), Err(SpecError::MissingHeader));
        assert!(parse_spec("monge K=5\na 0 2 0.5\n", o).is_err());
        let d = parse_spec("monge K=5\na 0 2 0.5\n", ParseOptions { allow_decimal: true }).unwrap();
        assert_eq!(d.coeffs[0].2, Scalar::ratio(1, 2));
    }

    #[test]
    fn curves() {
        let o = ParseOptions::default();
        let c = parse_curve("0, 1, 2/3", o).unwrap();
        assert_eq!(c.gamma(3), Scalar::ratio(2, 3));
        assert_eq!(
            parse_curve("0,0.5", o),
            Err(SpecError::Curve {
                index: 2,
                msg: "decimal `0.5` needs float input mode".into()
            })
        );
        let f = parse_curve("0,0.5", ParseOptions { allow_decimal: true }).unwrap();
        assert_eq!(f.gamma(2), Scalar::ratio(1, 2));
        assert!(parse_curve("", o).unwrap().is_empty());
    }
}
