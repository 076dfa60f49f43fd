//! Structured outcome of a verification suite.
//!
//! A report is a pure function of its inputs: it carries no timing, and
//! checks appear in the order the suite runs them.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Witness {
    pub name: String,
    pub value: String,
}

/// One named identity, evaluated `evaluations` times.
///
/// On failure `witness` holds the complete inputs and both sides of the
/// first counterexample.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub status: Status,
    pub evaluations: usize,
    pub witness: Vec<Witness>,
}

/// An observation that is recorded but never fails the suite, such as a
/// sign convention that was resolved empirically.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Note {
    pub id: String,
    pub statement: String,
    pub witness: Vec<Witness>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub trials: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<Note>,
}

impl Check {
    pub fn new(id: impl Into<String>, statement: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            statement: statement.into(),
            status: Status::Pass,
            evaluations: 0,
            witness: Vec::new(),
        }
    }

    /// Records one evaluation. The witness closure runs only for the first
    /// failure, so passing evaluations never pay for serialization.
    pub fn record<W>(&mut self, ok: bool, witness: W) -> bool
    where
        W: FnOnce() -> Vec<Witness>,
    {
        self.evaluations += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = witness();
        }
        ok
    }

    /// Records an equality of two displayable values.
    pub fn record_eq<T: PartialEq + Display>(&mut self, lhs: &T, rhs: &T, inputs: &[Witness]) -> bool {
        let ok = lhs == rhs;
        self.record(ok, || {
            let mut w = inputs.to_vec();
            w.push(witness("lhs", lhs));
            w.push(witness("rhs", rhs));
            w
        })
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn witness(name: &str, value: impl Display) -> Witness {
    Witness { name: name.into(), value: value.to_string() }
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, trials: usize) -> Self {
        Self { suite: suite.into(), seed, trials, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, id: impl Into<String>, statement: impl Into<String>, witness: Vec<Witness>) {
        self.notes.push(Note { id: id.into(), statement: statement.into(), witness });
    }

    /// Appends another report's checks and notes, prefixing their ids.
    pub fn absorb(&mut self, other: Report) {
        let prefix = other.suite;
        for mut c in other.checks {
            c.id = alloc::format!("{prefix}.{}", c.id);
            self.checks.push(c);
        }
        for mut n in other.notes {
            n.id = alloc::format!("{prefix}.{}", n.id);
            self.notes.push(n);
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_failure_keeps_its_witness() {
        let mut c = Check::new("c", "x = y");
        c.record_eq(&1, &1, &[]);
        c.record_eq(&1, &2, &[witness("x", 7)]);
        c.record_eq(&3, &4, &[]);
        assert_eq!(c.evaluations, 3);
        assert_eq!(c.status, Status::Fail);
        assert_eq!(
            c.witness,
            vec![witness("x", 7), witness("lhs", 1), witness("rhs", 2)]
        );
    }

    #[test]
    fn empty_report_passes() {
        let r = Report::new("empty", 0, 0);
        assert!(r.passed());
        assert_eq!(r.failures().count(), 0);
    }
}
