//! Verification reports.

use std::time::Duration;

use gpav_core::{CountSequence, TruncatedSeries};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Computed and recorded but not asserted.
    Info,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub verdict: Verdict,
    pub detail: Value,
}

impl Check {
    pub fn new(name: &str, params: Value, verdict: Verdict, detail: Value) -> Self {
        Check {
            name: name.to_string(),
            params,
            verdict,
            detail,
        }
    }

    pub fn holds(name: &str, params: Value, ok: bool, detail: Value) -> Self {
        let verdict = if ok { Verdict::Pass } else { Verdict::Fail };
        Check::new(name, params, verdict, detail)
    }

    pub fn info(name: &str, params: Value, detail: Value) -> Self {
        Check::new(name, params, Verdict::Info, detail)
    }

    /// Passes iff the sequences are equal. A failure names the first
    /// divergent index and both values.
    pub fn sequences(
        name: &str,
        params: Value,
        (expected_source, expected): (&str, &CountSequence),
        (actual_source, actual): (&str, &CountSequence),
    ) -> Self {
        let sources = json!({ "expected": expected_source, "actual": actual_source });
        match expected.first_divergence(actual) {
            None => Check::holds(
                name,
                params,
                true,
                json!({ "sources": sources, "n_max": expected.len().saturating_sub(1) }),
            ),
            Some(i) => {
                let show =
                    |s: &CountSequence| s.get(i).map_or(Value::Null, |v| json!(v.to_string()));
                Check::holds(
                    name,
                    params,
                    false,
                    json!({
                        "sources": sources,
                        "first_divergence": i,
                        "expected": show(expected),
                        "actual": show(actual),
                    }),
                )
            }
        }
    }

    /// Passes iff the series is zero through its order.
    pub fn residual(name: &str, params: Value, series: &TruncatedSeries) -> Self {
        match series.first_nonzero_index() {
            None => Check::holds(name, params, true, json!({ "order": series.order() })),
            Some(i) => Check::holds(
                name,
                params,
                false,
                json!({
                    "order": series.order(),
                    "first_divergence": i,
                    "expected": "0",
                    "actual": series.coeff(i).map(|c| c.to_string()),
                }),
            ),
        }
    }

    pub fn error(name: &str, params: Value, err: impl std::fmt::Display) -> Self {
        Check::holds(name, params, false, json!({ "error": err.to_string() }))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub info: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub params: Value,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub timing: Timing,
}

impl RunReport {
    pub fn new(command: &str, params: Value, checks: Vec<Check>, elapsed: Duration) -> Self {
        let mut summary = Summary::default();
        for c in &checks {
            match c.verdict {
                Verdict::Pass => summary.passed += 1,
                Verdict::Fail => summary.failed += 1,
                Verdict::Info => summary.info += 1,
            }
        }
        RunReport {
            command: command.to_string(),
            params,
            checks,
            summary,
            timing: Timing {
                elapsed_ms: elapsed.as_millis(),
            },
        }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap() + "\n"
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divergence_detail() {
        let a = CountSequence::from_u64s(&[1, 1, 2, 5]);
        let b = CountSequence::from_u64s(&[1, 1, 2, 6]);
        let c = Check::sequences("x", json!({}), ("oracle", &a), ("recurrence", &b));
        assert_eq!(c.verdict, Verdict::Fail);
        assert_eq!(c.detail["first_divergence"], json!(3));
        assert_eq!(c.detail["expected"], json!("5"));
        assert_eq!(c.detail["actual"], json!("6"));
        let ok = Check::sequences("x", json!({}), ("oracle", &a), ("recurrence", &a));
        assert_eq!(ok.verdict, Verdict::Pass);
    }

    #[test]
    fn residual_detail() {
        let s = TruncatedSeries::from_integers(&[0, 0, -2], 4);
        let c = Check::residual("r", json!({}), &s);
        assert_eq!(c.detail["first_divergence"], json!(2));
        assert_eq!(c.detail["actual"], json!("-2"));
        assert!(
            Check::residual("r", json!({}), &TruncatedSeries::zero(3)).verdict == Verdict::Pass
        );
    }

    #[test]
    fn summary_counts() {
        let checks = vec![
            Check::holds("a", json!({}), true, json!({})),
            Check::holds("b", json!({}), false, json!({})),
            Check::info("c", json!({}), json!({})),
        ];
        let r = RunReport::new("verify", json!({}), checks, Duration::ZERO);
        assert_eq!(
            r.summary,
            Summary {
                passed: 1,
                failed: 1,
                info: 1
            }
        );
        assert!(!r.ok());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
}
