//! Structured results of verifications and constant computations.

use std::fmt;

/// One named check with its value, bound and outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

impl Check {
    /// `value <= bound` check.
    pub fn le(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            value,
            bound,
            pass: value <= bound,
        }
    }

    /// `|value| <= bound` check.
    pub fn abs_le(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            value,
            bound,
            pass: value.abs() <= bound,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: value {:e}, bound {:e}",
            if self.pass { "pass" } else { "FAIL" },
            self.name,
            self.value,
            self.bound
        )
    }
}

/// Structured result of a verification or constant computation.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub title: String,
    pub inputs: Vec<(String, f64)>,
    pub outputs: Vec<(String, f64)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report {
            title: title.into(),
            ..Default::default()
        }
    }

    pub fn input(mut self, name: impl Into<String>, value: f64) -> Self {
        self.inputs.push((name.into(), value));
        self
    }

    pub fn output(mut self, name: impl Into<String>, value: f64) -> Self {
        self.outputs.push((name.into(), value));
        self
    }

    pub fn push_check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_constructors() {
        assert!(Check::le("a", 1.0, 2.0).pass);
        assert!(!Check::le("a", 3.0, 2.0).pass);
        assert!(Check::abs_le("b", -1.0, 2.0).pass);
        assert!(!Check::abs_le("b", -3.0, 2.0).pass);
    }

    #[test]
    fn report_aggregates() {
        let mut r = Report::new("t").input("x", 1.0).output("y", 2.0);
        r.push_check(Check::le("ok", 0.0, 1.0));
        assert!(r.all_pass());
        r.push_check(Check::le("bad", 2.0, 1.0));
        assert!(!r.all_pass());
    }
}
