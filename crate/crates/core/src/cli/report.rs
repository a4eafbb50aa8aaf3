use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Na,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Na => "na",
        }
    }
}

/// One verdict of one check on one catalog instance.
///
/// `witness` holds `key=value` data in insertion order: series orders,
/// group orders, counterexample elements. A fail always has a witness.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub instance: String,
    pub outcome: Outcome,
    pub witness: Vec<(String, String)>,
    /// Why a check did not apply.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

impl VerificationReport {
    pub fn pass(check: &str, instance: &str, witness: Vec<(String, String)>) -> Self {
        Self::new(check, instance, Outcome::Pass, witness, None)
    }

    /// Panics on an empty witness: a failure must say what failed.
    pub fn fail(check: &str, instance: &str, witness: Vec<(String, String)>) -> Self {
        assert!(!witness.is_empty(), "fail report for {check} on {instance} without a witness");
        Self::new(check, instance, Outcome::Fail, witness, None)
    }

    pub fn na(check: &str, instance: &str, reason: impl Into<String>) -> Self {
        Self::new(check, instance, Outcome::Na, Vec::new(), Some(reason.into()))
    }

    fn new(check: &str, instance: &str, outcome: Outcome, witness: Vec<(String, String)>, reason: Option<String>) -> Self {
        VerificationReport { check: check.into(), instance: instance.into(), outcome, witness, reason, wall_ms: None }
    }

    /// `check=.. instance=.. outcome=.. key=value ...`, then an indented
    /// `reason:` line for `na`. Values with whitespace are quoted.
    pub fn to_line(&self) -> String {
        let mut s = format!("check={} instance={} outcome={}", self.check, self.instance, self.outcome.as_str());
        for (k, v) in &self.witness {
            if v.contains(char::is_whitespace) || v.contains('"') {
                let _ = write!(s, " {k}={v:?}");
            } else {
                let _ = write!(s, " {k}={v}");
            }
        }
        if let Some(ms) = self.wall_ms {
            let _ = write!(s, " wall_ms={ms:.3}");
        }
        if let Some(r) = &self.reason {
            let _ = write!(s, "\n  reason: {r}");
        }
        s
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Json<'a> {
            check: &'a str,
            instance: &'a str,
            outcome: Outcome,
            witness: serde_json::Map<String, serde_json::Value>,
            #[serde(skip_serializing_if = "Option::is_none")]
            reason: &'a Option<String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            wall_ms: Option<f64>,
        }
        let witness = self.witness.iter().map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone()))).collect();
        serde_json::to_string(&Json {
            check: &self.check,
            instance: &self.instance,
            outcome: self.outcome,
            witness,
            reason: &self.reason,
            wall_ms: self.wall_ms,
        })
        .expect("plain data serializes")
    }
}

/// Joins a list as `a,b,c` (`-` when empty), to keep values whitespace free.
pub fn list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let s: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if s.is_empty() {
        "-".into()
    } else {
        s.join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let r = VerificationReport::pass("lemma-jo", "ConjS3", vec![("triples".into(), "216".into())]);
        assert_eq!(r.to_line(), "check=lemma-jo instance=ConjS3 outcome=pass triples=216");
        let r = VerificationReport::na("thm-dos", "InvZ3", "the action is not faithful");
        assert_eq!(r.to_line(), "check=thm-dos instance=InvZ3 outcome=na\n  reason: the action is not faithful");
        assert_eq!(
            r.to_json(),
            r#"{"check":"thm-dos","instance":"InvZ3","outcome":"na","witness":{},"reason":"the action is not faithful"}"#
        );
        assert_eq!(list(Vec::<u32>::new()), "-");
        assert_eq!(list([1, 2]), "1,2");
    }

    #[test]
    #[should_panic]
    fn fail_needs_witness() {
        VerificationReport::fail("x", "y", Vec::new());
    }
}
