//! Verification reports.
//!
//! A report is a list of named checks. Each check counts how many
//! coefficient comparisons it made and keeps the first mismatch verbatim,
//! both sides rendered as text.

use std::collections::BTreeMap;
use std::fmt::{self, Display};

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub compared: u64,
    pub failure: Option<Mismatch>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            compared: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Compares one coefficient; only the first mismatch is kept.
    pub fn compare<T: PartialEq + Display + ?Sized>(
        &mut self,
        at: impl Display,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.compared += 1;
        let ok = lhs == rhs;
        if !ok && self.failure.is_none() {
            self.failure = Some(Mismatch {
                at: at.to_string(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    /// Records a boolean condition; `detail` is stored as the left side.
    pub fn ensure(&mut self, at: impl Display, ok: bool, detail: impl Display) -> bool {
        self.compared += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Mismatch {
                at: at.to_string(),
                lhs: detail.to_string(),
                rhs: "condition".to_string(),
            });
        }
        ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Report {
            id: id.into(),
            params: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl Display) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends the checks of another report, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn compared(&self) -> u64 {
        self.checks.iter().map(|c| c.compared).sum()
    }

    /// The first failing check and its mismatch, in check order.
    pub fn first_failure(&self) -> Option<(&str, &Mismatch)> {
        self.checks
            .iter()
            .find_map(|c| c.failure.as_ref().map(|m| (c.name.as_str(), m)))
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.id)?;
        if !self.params.is_empty() {
            let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " [{}]", ps.join(" "))?;
        }
        write!(f, " ({} comparisons)", self.compared())?;
        if let Some((name, m)) = self.first_failure() {
            write!(f, "\n  {name} at {}: {} != {}", m.at, m.lhs, m.rhs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_mismatch_is_kept() {
        let mut c = Check::new("x");
        assert!(c.compare(1, &3, &3));
        assert!(!c.compare(2, &3, &4));
        assert!(!c.compare(3, &5, &6));
        assert_eq!(c.compared, 3);
        assert_eq!(c.failure.as_ref().unwrap().at, "2");
        let mut r = Report::new("demo");
        r.push(Check::new("ok"));
        r.push(c);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().0, "x");
    }
}
