//! A small runner for numbered acceptance criteria. Each criterion gathers
//! named checks into [`Evidence`]; the runner times it, compares the time
//! with an optional budget and prints one verdict line.

use std::error::Error;
use std::fmt;
use std::time::{Duration, Instant};

pub type EvalResult = Result<(), Box<dyn Error>>;

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Checks and informational notes collected by one criterion.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Evidence {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Evidence {
    pub fn require(&mut self, name: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed: holds,
            detail: detail.into(),
        });
    }

    /// Passes when `residual` is finite and at most `tol`.
    pub fn residual(&mut self, name: impl Into<String>, residual: f64, tol: f64) {
        let holds = residual.is_finite() && residual <= tol;
        self.require(name, holds, format!("{residual:.3e} (tol {tol:.0e})"));
    }

    pub fn equal<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, got: T, want: T) {
        let detail = if got == want {
            format!("{got:?}")
        } else {
            format!("got {got:?}, want {want:?}")
        };
        self.require(name, got == want, detail);
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    /// Wall-clock limit for the whole criterion.
    pub budget: Option<Duration>,
    pub eval: Box<dyn Fn(&mut Evidence) -> EvalResult>,
}

impl Criterion {
    pub fn new(
        id: u8,
        title: &'static str,
        budget: Option<Duration>,
        eval: impl Fn(&mut Evidence) -> EvalResult + 'static,
    ) -> Self {
        Criterion {
            id,
            title,
            budget,
            eval: Box::new(eval),
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
    pub evidence: Evidence,
    /// Set when the criterion stopped on an error.
    pub error: Option<String>,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.within_budget() && self.evidence.passed()
    }

    /// The verdict line followed by indented failure and note lines.
    pub fn render(&self) -> String {
        let budget = self.budget.map_or(String::new(), |b| {
            format!(" / budget {:.0} s", b.as_secs_f64())
        });
        let mut out = format!(
            "criterion {:>2}: {}  {} ({} checks, {:.2} s{budget})\n",
            self.id,
            if self.passed() { "PASS" } else { "FAIL" },
            self.title,
            self.evidence.checks.len(),
            self.elapsed.as_secs_f64(),
        );
        if let Some(e) = &self.error {
            out.push_str(&format!("    error: {e}\n"));
        }
        if !self.within_budget() {
            out.push_str("    over the runtime budget\n");
        }
        for c in self.evidence.failures() {
            out.push_str(&format!("    failed: {}: {}\n", c.name, c.detail));
        }
        for n in &self.evidence.notes {
            out.push_str(&format!("    note: {n}\n"));
        }
        out
    }
}

pub fn evaluate(c: &Criterion) -> Outcome {
    let mut evidence = Evidence::default();
    let start = Instant::now();
    let error = (c.eval)(&mut evidence).err().map(|e| e.to_string());
    Outcome {
        id: c.id,
        title: c.title,
        elapsed: start.elapsed(),
        budget: c.budget,
        evidence,
        error,
    }
}

/// Evaluates in order, printing each verdict as it completes.
pub fn run_all(criteria: &[Criterion]) -> Vec<Outcome> {
    criteria
        .iter()
        .map(|c| {
            let o = evaluate(c);
            print!("{}", o.render());
            o
        })
        .collect()
}

pub fn summary(outcomes: &[Outcome]) -> String {
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| o.id.to_string())
        .collect();
    let passed = outcomes.len() - failed.len();
    if failed.is_empty() {
        format!("acceptance: {passed}/{} criteria passed", outcomes.len())
    } else {
        format!(
            "acceptance: {passed}/{} criteria passed; failed: {}",
            outcomes.len(),
            failed.join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_checks() {
        let mut e = Evidence::default();
        e.residual("small", 1e-12, 1e-9);
        assert!(e.passed());
        e.residual("nan", f64::NAN, 1e-9);
        assert!(!e.passed());
        assert_eq!(e.failures().count(), 1);
    }

    #[test]
    fn errors_and_budgets_fail() {
        let erring = Criterion::new(1, "errs", None, |_| Err("boom".into()));
        let o = evaluate(&erring);
        assert!(!o.passed());
        assert!(o.render().contains("error: boom"));

        let slow = Criterion::new(2, "slow", Some(Duration::ZERO), |e| {
            std::thread::sleep(Duration::from_millis(2));
            e.require("ran", true, "");
            Ok(())
        });
        let o = evaluate(&slow);
        assert!(!o.passed());
        assert!(o.render().starts_with("criterion  2: FAIL"));
    }

    #[test]
    fn summary_lists_failures() {
        let pass = evaluate(&Criterion::new(1, "a", None, |e| {
            e.equal("x", 1, 1);
            Ok(())
        }));
        let fail = evaluate(&Criterion::new(7, "b", None, |e| {
            e.equal("x", 1, 2);
            Ok(())
        }));
        assert!(pass.render().contains("PASS"));
        assert!(fail.render().contains("got 1, want 2"));
        assert_eq!(
            summary(&[pass, fail]),
            "acceptance: 1/2 criteria passed; failed: 7"
        );
    }
}
