//! Residual reports shared by every verification routine.

use serde::Serialize;

/// One named residual compared against a tolerance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualCheck {
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl ResidualCheck {
    pub fn new(name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        ResidualCheck {
            name: name.into(),
            residual,
            tolerance,
            passed: residual.is_finite() && residual <= tolerance,
        }
    }

    /// A check decided by an exact predicate; the residual is 0 or 1.
    pub fn exact(name: impl Into<String>, holds: bool) -> Self {
        ResidualCheck {
            name: name.into(),
            residual: if holds { 0.0 } else { 1.0 },
            tolerance: 0.0,
            passed: holds,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub title: String,
    pub norm: &'static str,
    pub checks: Vec<ResidualCheck>,
    /// Informational lines that never affect the verdict.
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            norm: crate::tensor::OPERATOR_NORM,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: ResidualCheck) {
        self.checks.push(check);
    }

    pub fn check(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        self.push(ResidualCheck::new(name, residual, tolerance));
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&ResidualCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    pub fn to_pretty(&self) -> String {
        let width = self
            .checks
            .iter()
            .map(|c| c.name.chars().count())
            .max()
            .unwrap_or(0);
        let mut out = format!("{} (norm: {})\n", self.title, self.norm);
        for c in &self.checks {
            let pad = width - c.name.chars().count();
            out.push_str(&format!(
                "  {}{}  {:>12.3e}  tol {:.1e}  {}\n",
                c.name,
                " ".repeat(pad),
                c.residual,
                c.tolerance,
                if c.passed { "ok" } else { "FAIL" }
            ));
        }
        for n in &self.notes {
            out.push_str(&format!("  note: {n}\n"));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,residual,tolerance,passed\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},{:e},{:e},{}\n",
                c.name.replace(',', ";"),
                c.residual,
                c.tolerance,
                c.passed
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nan_residual_fails() {
        assert!(!ResidualCheck::new("x", f64::NAN, 1.0).passed);
    }

    #[test]
    fn verdict_is_conjunction() {
        let mut r = VerificationReport::new("t");
        r.check("a", 0.0, 1e-9);
        assert!(r.passed());
        r.check("b", 1.0, 1e-9);
        assert!(!r.passed());
        assert!(r.to_csv().lines().count() == 3);
    }
}
