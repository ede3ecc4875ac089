//! K-equivalence class labels for function germs of two variables.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of_positive(positive: bool) -> Sign {
        if positive {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Why a recognizer stopped without a simple label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Indeterminacy {
    /// Corank 1 with no pure `x^k` term up to the bound: at least `A_n`.
    AtLeastA(u32),
    /// Double-root cubic with no pure `y^k` term up to the bound: at least `D_n`.
    AtLeastD(u32),
    /// Triple-root cubic degenerate past `E_*` (or past the bound).
    BeyondEStar,
    /// Corank 2 with vanishing cubic part.
    ZeroCubic,
    /// A sign test fell inside the tolerance band.
    Boundary(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KClass {
    Regular,
    A {
        k: u32,
        sign: Option<Sign>,
    },
    D {
        k: u32,
        sign: Option<Sign>,
    },
    E(u32),
    /// `j^5 g ~ x^3 + x y^4`; not simple.
    EStar,
    Indeterminate(Indeterminacy),
}

impl KClass {
    /// `A_k`, with the sign dropped when the two forms are equivalent.
    pub fn a(k: u32, sign: Sign) -> KClass {
        KClass::A { k, sign: Some(sign) }.canonical()
    }

    pub fn d(k: u32, sign: Sign) -> KClass {
        KClass::D { k, sign: Some(sign) }.canonical()
    }

    /// Drops the sign when `±` forms are K-equivalent: `A_k` with `k` even
    /// (`y ↦ −y`) and `D_k` with `k` odd (`y ↦ −y` and multiplier `−1`).
    pub fn canonical(self) -> KClass {
        match self {
            KClass::A { k, .. } if k % 2 == 0 => KClass::A { k, sign: None },
            KClass::D { k, .. } if k % 2 == 1 => KClass::D { k, sign: None },
            other => other,
        }
    }

    /// `(μ, corank)` every germ of this class has.
    pub fn milnor_data(&self) -> Option<(u32, u32)> {
        match self {
            KClass::Regular => Some((0, 0)),
            KClass::A { k, .. } => Some((*k, if *k == 1 { 0 } else { 1 })),
            KClass::D { k, .. } => Some((*k, 2)),
            KClass::E(k) => Some((*k, 2)),
            KClass::EStar | KClass::Indeterminate(_) => None,
        }
    }

    pub fn is_simple(&self) -> bool {
        matches!(self, KClass::A { .. } | KClass::D { .. } | KClass::E(_))
    }

    /// Degree of the highest monomial in the normal form; the class is
    /// determined by jets of this order.
    pub fn determinacy(&self) -> Option<u32> {
        match self {
            KClass::Regular => Some(1),
            KClass::A { k, .. } => Some(k + 1),
            KClass::D { k, .. } => Some(k - 1),
            KClass::E(6) | KClass::E(7) => Some(4),
            KClass::E(_) | KClass::EStar => Some(5),
            KClass::Indeterminate(_) => None,
        }
    }

    /// Same family and index, ignoring the sign.
    pub fn same_type(&self, other: &KClass) -> bool {
        match (self, other) {
            (KClass::A { k: a, .. }, KClass::A { k: b, .. }) => a == b,
            (KClass::D { k: a, .. }, KClass::D { k: b, .. }) => a == b,
            _ => self == other,
        }
    }
}

fn fmt_signed(f: &mut fmt::Formatter<'_>, fam: char, k: u32, sign: &Option<Sign>) -> fmt::Result {
    write!(f, "{fam}_{k}")?;
    if let Some(s) = sign {
        write!(f, "^{s}")?;
    }
    Ok(())
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KClass::Regular => f.write_str("regular"),
            KClass::A { k, sign } => fmt_signed(f, 'A', *k, sign),
            KClass::D { k, sign } => fmt_signed(f, 'D', *k, sign),
            KClass::E(k) => write!(f, "E_{k}"),
            KClass::EStar => f.write_str("E_*"),
            KClass::Indeterminate(why) => match why {
                Indeterminacy::AtLeastA(n) => write!(f, "A_>={n}"),
                Indeterminacy::AtLeastD(n) => write!(f, "D_>={n}"),
                Indeterminacy::BeyondEStar => f.write_str("beyond_E_*"),
                Indeterminacy::ZeroCubic => f.write_str("zero_cubic"),
                Indeterminacy::Boundary(what) => write!(f, "boundary({what})"),
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unrecognised class label `{0}`")]
pub struct KClassParseError(pub String);

/// Accepts `A_3^+`, `A3+`, `D_5`, `E_6`, `E_*`, `Estar`, `regular`.
impl FromStr for KClass {
    type Err = KClassParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || KClassParseError(s.to_string());
        let t: String = s.trim().chars().filter(|c| *c != '_' && *c != '^').collect();
        let lower = t.to_ascii_lowercase();
        if lower == "regular" {
            return Ok(KClass::Regular);
        }
        if lower == "e*" || lower == "estar" {
            return Ok(KClass::EStar);
        }
        let mut chars = t.chars();
        let fam = chars.next().ok_or_else(err)?.to_ascii_uppercase();
        let rest: String = chars.collect();
        let (digits, sign) = match rest.strip_suffix('+') {
            Some(d) => (d, Some(Sign::Plus)),
            None => match rest.strip_suffix('-') {
                Some(d) => (d, Some(Sign::Minus)),
                None => (rest.as_str(), None),
            },
        };
        let k: u32 = digits.parse().map_err(|_| err())?;
        let class = match fam {
            'A' if k >= 1 => KClass::A { k, sign },
            'D' if k >= 4 => KClass::D { k, sign },
            'E' if (6..=8).contains(&k) && sign.is_none() => KClass::E(k),
            _ => return Err(err()),
        };
        Ok(class.canonical())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_signs() {
        assert_eq!(KClass::a(2, Sign::Minus), KClass::A { k: 2, sign: None });
        assert_eq!(KClass::a(3, Sign::Minus).to_string(), "A_3^-");
        assert_eq!(KClass::d(4, Sign::Plus).to_string(), "D_4^+");
        assert_eq!(KClass::d(5, Sign::Minus).to_string(), "D_5");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "A_1^+", "A_2", "A_3^-", "D_4^+", "D_5", "D_6^-", "E_6", "E_7", "E_8", "E_*", "regular",
        ] {
            let c: KClass = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("a3+".parse::<KClass>().unwrap(), KClass::a(3, Sign::Plus));
        assert!("E_9".parse::<KClass>().is_err());
        assert!("D_3".parse::<KClass>().is_err());
    }
}
