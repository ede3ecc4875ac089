//! Sign tests: exact by default, optionally three-valued with a tolerance.
//!
//! The tolerance mode exists for coefficients that came from floating-point
//! input. A value within the tolerance of zero is neither zero nor nonzero;
//! callers must turn such an outcome into a boundary verdict.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignTest {
    Positive,
    Negative,
    Zero,
    Indeterminate,
}

impl SignTest {
    pub fn is_zero(self) -> bool {
        self == SignTest::Zero
    }

    pub fn is_nonzero(self) -> bool {
        matches!(self, SignTest::Positive | SignTest::Negative)
    }
}

impl fmt::Display for SignTest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignTest::Positive => "+",
            SignTest::Negative => "-",
            SignTest::Zero => "0",
            SignTest::Indeterminate => "?",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SignRule {
    #[default]
    Exact,
    /// `|v| <= tol` is reported as indeterminate.
    Tolerance(BigRational),
}

impl SignRule {
    pub fn test(&self, v: &Scalar) -> SignTest {
        match self {
            SignRule::Exact => match v.signum() {
                std::cmp::Ordering::Greater => SignTest::Positive,
                std::cmp::Ordering::Less => SignTest::Negative,
                std::cmp::Ordering::Equal => SignTest::Zero,
            },
            SignRule::Tolerance(tol) => {
                let t = Scalar::from_rational(tol.abs());
                if v.abs() <= t {
                    SignTest::Indeterminate
                } else if v.is_positive() {
                    SignTest::Positive
                } else {
                    SignTest::Negative
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational;

    #[test]
    fn exact_and_tolerant() {
        let exact = SignRule::Exact;
        assert_eq!(exact.test(&Scalar::zero()), SignTest::Zero);
        assert_eq!(exact.test(&Scalar::ratio(-1, 1000)), SignTest::Negative);
        let tol = SignRule::Tolerance(rational(1, 100));
        assert_eq!(tol.test(&Scalar::ratio(-1, 1000)), SignTest::Indeterminate);
        assert_eq!(tol.test(&Scalar::zero()), SignTest::Indeterminate);
        assert_eq!(tol.test(&Scalar::ratio(1, 10)), SignTest::Positive);
    }
}
