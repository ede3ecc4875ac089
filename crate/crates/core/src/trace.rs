//! Recorded coordinate changes, replayable through the jet algebra.

use std::fmt;

use crate::jet::{Jet2, JetError};

/// One move: `result = target(y, unit · prev(u, v))`.
///
/// For K-equivalence `target` is absent. For the projection `(y, g)` the
/// target change is a jet `T(Y, Z)` (with `x` standing for `Y`, `y` for `Z`)
/// and the unit is `1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Step {
    pub label: String,
    pub u: Jet2,
    pub v: Jet2,
    pub unit: Jet2,
    pub target: Option<Jet2>,
    pub result: Jet2,
}

impl Step {
    pub fn apply(&self, prev: &Jet2) -> Result<Jet2, JetError> {
        let moved = prev.compose(&self.u, &self.v)?;
        let scaled = moved.scale_and_unit_multiply(&self.unit)?;
        match &self.target {
            None => Ok(scaled),
            Some(t) => t.compose(&Jet2::y(prev.bound()), &scaled),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: Jet2,
    pub steps: Vec<Step>,
}

impl ReductionTrace {
    pub fn new(initial: Jet2) -> Self {
        ReductionTrace {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn terminal(&self) -> &Jet2 {
        self.steps.last().map_or(&self.initial, |s| &s.result)
    }

    /// Applies a move to the current terminal jet and records it.
    pub fn push(
        &mut self,
        label: impl Into<String>,
        u: Jet2,
        v: Jet2,
        unit: Jet2,
        target: Option<Jet2>,
    ) -> Result<&Jet2, JetError> {
        let mut step = Step {
            label: label.into(),
            u,
            v,
            unit,
            target,
            result: Jet2::zero(self.initial.bound()),
        };
        step.result = step.apply(self.terminal())?;
        self.steps.push(step);
        Ok(self.terminal())
    }

    /// Source change only.
    pub fn substitute(&mut self, label: impl Into<String>, u: Jet2, v: Jet2) -> Result<&Jet2, JetError> {
        let one = Jet2::constant(self.initial.bound(), crate::Scalar::one());
        self.push(label, u, v, one, None)
    }

    /// Multiplication by a unit only.
    pub fn multiply(&mut self, label: impl Into<String>, unit: Jet2) -> Result<&Jet2, JetError> {
        let k = self.initial.bound();
        self.push(label, Jet2::x(k), Jet2::y(k), unit, None)
    }

    /// Re-executes every step from the initial jet; true when each recorded
    /// result is reproduced exactly.
    pub fn replay(&self) -> Result<bool, JetError> {
        let mut cur = self.initial.clone();
        for s in &self.steps {
            cur = s.apply(&cur)?;
            if cur != s.result {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "start: {}", self.initial)?;
        for (n, s) in self.steps.iter().enumerate() {
            writeln!(f, "step {}: {}", n + 1, s.label)?;
            writeln!(f, "  x <- {}", s.u)?;
            writeln!(f, "  y <- {}", s.v)?;
            if !s.unit.is_one_constant() {
                writeln!(f, "  unit: {}", s.unit)?;
            }
            if let Some(t) = &s.target {
                writeln!(f, "  target: Z <- {}", t)?;
            }
            writeln!(f, "  result: {}", s.result)?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
