//! Verdict reports produced by the theorem verifiers.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::NotApplicable => write!(f, "n/a"),
        }
    }
}

/// One named assertion together with witness details.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub details: Vec<String>,
}

/// A bundle of checks for one verifier run. A report counts as passed when
/// no check failed (not-applicable checks do not count against it).
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl StructureReport {
    pub fn new(subject: impl Into<String>) -> Self {
        StructureReport {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict, details: Vec<String>) {
        self.checks.push(Check {
            name: name.into(),
            verdict,
            details,
        });
    }

    pub fn pass(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Pass, vec![detail.into()]);
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::Fail, vec![detail.into()]);
    }

    pub fn not_applicable(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Verdict::NotApplicable, vec![detail.into()]);
    }

    /// Record `cond` under `name`, attaching `detail` either way.
    pub fn check(&mut self, name: impl Into<String>, cond: bool, detail: impl Into<String>) {
        self.push(
            name,
            if cond { Verdict::Pass } else { Verdict::Fail },
            vec![detail.into()],
        );
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// Append every check of `other`, prefixing names with its subject.
    pub fn absorb(&mut self, other: StructureReport) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{}: {}", other.subject, c.name),
                verdict: c.verdict,
                details: c.details,
            });
        }
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(f, "  [{}] {}", c.verdict, c.name)?;
            for d in &c.details {
                writeln!(f, "        {d}")?;
            }
        }
        Ok(())
    }
}
