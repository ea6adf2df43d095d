//! Checker verdicts. A report is empty exactly when every checked identity
//! holds up to the stated truncation; reports always carry the truncation
//! so "valid" reads as "valid up to arity N".

use serde::Serialize;

/// One residual term, rendered canonically for display and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidualTerm {
    pub word: Vec<String>,
    pub coeff: String,
}

/// A single failed identity: the clause that failed, the input word it
/// failed on, and the nonzero residual.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub arity: usize,
    pub word: Vec<String>,
    pub clause: String,
    pub residual: Vec<ResidualTerm>,
}

/// Outcome of a checker run up to arity `checked_up_to`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub checked_up_to: usize,
    violations: Vec<Violation>,
}

impl Report {
    pub fn new(checked_up_to: usize) -> Report {
        Report { checked_up_to, violations: Vec::new() }
    }

    pub fn push(&mut self, v: Violation) {
        self.violations.push(v);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn total(&self) -> usize {
        self.violations.len()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Arities at which at least one violation occurred.
    pub fn arities(&self) -> Vec<usize> {
        let mut a: Vec<usize> = self.violations.iter().map(|v| v.arity).collect();
        a.sort_unstable();
        a.dedup();
        a
    }

    /// The first offending word per arity; full listings stay behind a
    /// verbosity flag since word counts grow exponentially.
    pub fn first_per_arity(&self) -> Vec<&Violation> {
        let mut out: Vec<&Violation> = Vec::new();
        for v in &self.violations {
            if out.last().map(|p| p.arity) == Some(v.arity) {
                continue;
            }
            if !out.iter().any(|p| p.arity == v.arity) {
                out.push(v);
            }
        }
        out
    }

    pub fn merged(mut self, other: Report) -> Report {
        self.violations.extend(other.violations);
        self.checked_up_to = self.checked_up_to.max(other.checked_up_to);
        self
    }

    /// Restrict to violations at arity <= n (for truncation-coherence tests).
    pub fn restricted(&self, n: usize) -> Report {
        Report {
            checked_up_to: n,
            violations: self.violations.iter().filter(|v| v.arity <= n).cloned().collect(),
        }
    }
}
