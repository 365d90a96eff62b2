use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub check_id: String,
    pub paper_anchor: String,
    pub status: Status,
    pub details: Value,
    #[serde(skip)]
    pub runtime: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One JSON object; `runtime_ms` only when asked for, so that default
    /// output is reproducible byte for byte.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if with_timing {
            v.as_object_mut()
                .unwrap()
                .insert("runtime_ms".into(), Value::from(self.runtime.as_millis() as u64));
        }
        v
    }
}

/// Accumulates exact comparisons for one report.
///
/// Every comparison is evaluated twice: once with `==` and once on the
/// canonical rendering of both sides. A pass needs both to agree.
pub struct Check {
    id: String,
    anchor: String,
    start: Instant,
    failures: Vec<String>,
    inconclusive: Option<String>,
    details: Map<String, Value>,
    comparisons: usize,
}

fn clip(s: String) -> String {
    const MAX: usize = 240;
    if s.len() <= MAX {
        s
    } else {
        let mut cut = MAX;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}...", &s[..cut])
    }
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            start: Instant::now(),
            failures: Vec::new(),
            inconclusive: None,
            details: Map::new(),
            comparisons: 0,
        }
    }

    pub fn eq<T: PartialEq + fmt::Debug>(&mut self, label: &str, lhs: &T, rhs: &T) -> bool {
        self.comparisons += 1;
        let structural = lhs == rhs;
        let (l, r) = (format!("{lhs:?}"), format!("{rhs:?}"));
        let rendered = l == r;
        if structural != rendered {
            self.failures.push(format!("{label}: equality and canonical rendering disagree"));
            return false;
        }
        if !structural {
            self.failures.push(format!("{label}: {} != {}", clip(l), clip(r)));
        }
        structural
    }

    pub fn truth(&mut self, label: &str, cond: bool) -> bool {
        self.comparisons += 1;
        if !cond {
            self.failures.push(format!("{label}: false"));
        }
        cond
    }

    pub fn error(&mut self, label: &str, err: &Error) {
        self.failures.push(format!("{label}: {err}"));
    }

    /// Record the value of `r`, or a failure if it is an error.
    pub fn ok<T>(&mut self, label: &str, r: Result<T, Error>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.error(label, &e);
                None
            }
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details
            .insert(key.into(), serde_json::to_value(value).expect("detail serializes"));
    }

    pub fn inconclusive(&mut self, reason: impl Into<String>) {
        self.inconclusive = Some(reason.into());
    }

    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn finish(mut self) -> VerifyReport {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.inconclusive.is_some() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        self.details.insert("comparisons".into(), Value::from(self.comparisons));
        if !self.failures.is_empty() {
            self.details.insert("failures".into(), Value::from(self.failures));
        }
        if let Some(r) = self.inconclusive {
            self.details.insert("inconclusive".into(), Value::from(r));
        }
        VerifyReport {
            check_id: self.id,
            paper_anchor: self.anchor,
            status,
            details: Value::Object(self.details),
            runtime: self.start.elapsed(),
        }
    }
}
