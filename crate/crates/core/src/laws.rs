//! Verdicts returned by the exhaustive law checkers.

use std::fmt;

/// The first failing instance of a law, in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub law: String,
    pub witness: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.witness)
    }
}

/// Outcome of checking a law set over a finite universe.
///
/// An empty universe yields a vacuous pass with `checked == 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl Verdict {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Sequential conjunction: counts add up, the first failure wins.
    pub fn and(self, other: Verdict) -> Verdict {
        match self.counterexample {
            Some(_) => self,
            None => Verdict {
                checked: self.checked + other.checked,
                counterexample: other.counterexample,
            },
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "holds ({} instances)", self.checked),
            Some(cx) => write!(f, "FAILS after {} instances: {}", self.checked, cx),
        }
    }
}

/// Counts checked instances and stops at the first failure.
#[derive(Debug, Default)]
pub struct Tally {
    checked: usize,
}

impl Tally {
    pub fn law(
        &mut self,
        law: &str,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Result<(), Counterexample> {
        self.checked += 1;
        if ok {
            Ok(())
        } else {
            Err(Counterexample {
                law: law.to_string(),
                witness: witness(),
            })
        }
    }
}

/// Runs a checking procedure and packages its outcome.
pub fn verdict(body: impl FnOnce(&mut Tally) -> Result<(), Counterexample>) -> Verdict {
    let mut tally = Tally::default();
    let counterexample = body(&mut tally).err();
    Verdict {
        checked: tally.checked,
        counterexample,
    }
}
