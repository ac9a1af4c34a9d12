//! Run configuration and machine-readable reports.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 42;
pub const MAX_D: usize = 6;
pub const MAX_M: usize = 4;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub d_max: usize,
    pub m_max: usize,
    pub threads: usize,
    pub unsafe_large: bool,
    /// Restrict a suite to a single d (where applicable).
    pub d: Option<usize>,
    /// Restrict a suite to a single m (where applicable).
    pub m: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: DEFAULT_SEED,
            d_max: MAX_D,
            m_max: MAX_M,
            threads: 1,
            unsafe_large: false,
            d: None,
            m: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.unsafe_large && (self.d_max > MAX_D || self.m_max > MAX_M) {
            return Err(Error::ConfigInvalid(format!(
                "d_max {} / m_max {} exceed desk-scale bounds ({MAX_D}, {MAX_M}); \
                 pass --unsafe-large to override",
                self.d_max, self.m_max
            )));
        }
        if let Some(d) = self.d {
            if !self.unsafe_large && d > MAX_D {
                return Err(Error::ConfigInvalid(format!("d {d} exceeds {MAX_D}")));
            }
        }
        Ok(())
    }
}

/// Parse a simple key = value configuration text; '#' starts a comment.
pub fn parse_kv_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or_else(|| {
            Error::ConfigInvalid(format!("line {}: expected key = value", lineno + 1))
        })?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CaseResult {
    pub id: String,
    pub inputs: String,
    pub pass: bool,
    pub residual: String,
    pub wall_ms: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(suite: &str, seed: u64) -> Self {
        Report {
            suite: suite.to_string(),
            seed,
            cases: Vec::new(),
            passed: 0,
            failed: 0,
        }
    }

    pub fn push(&mut self, case: CaseResult) {
        if case.pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.cases.push(case);
    }

    pub fn absorb(&mut self, other: Report) {
        for c in other.cases {
            self.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }

    /// Copy with all timing fields zeroed, for determinism comparisons.
    pub fn without_timings(&self) -> Report {
        let mut r = self.clone();
        for c in &mut r.cases {
            c.wall_ms = 0.0;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,inputs,pass,residual,wall_ms\n");
        for c in &self.cases {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.id, c.inputs, c.pass, c.residual, c.wall_ms
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_roundtrip() {
        let r = Report::new("identities", 7);
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(back.cases.is_empty());
        assert!(back.all_pass());
    }

    #[test]
    fn counts_and_timing_strip() {
        let mut r = Report::new("x", 1);
        r.push(CaseResult {
            id: "a".into(),
            inputs: "i".into(),
            pass: true,
            residual: "0".into(),
            wall_ms: 3.5,
        });
        r.push(CaseResult {
            id: "b".into(),
            inputs: "i".into(),
            pass: false,
            residual: "1".into(),
            wall_ms: 1.0,
        });
        assert_eq!((r.passed, r.failed), (1, 1));
        assert!(!r.all_pass());
        let s = r.without_timings();
        assert!(s.cases.iter().all(|c| c.wall_ms == 0.0));
        assert_eq!(s.passed, 1);
    }

    #[test]
    fn kv_config_parsing() {
        let m = parse_kv_config("seed = 9\n# comment\nformat=csv  # trailing\n\n").unwrap();
        assert_eq!(m["seed"], "9");
        assert_eq!(m["format"], "csv");
        assert!(parse_kv_config("bogus line").is_err());
    }

    #[test]
    fn config_bounds() {
        let mut c = RunConfig::default();
        assert!(c.validate().is_ok());
        c.d_max = 9;
        assert!(c.validate().is_err());
        c.unsafe_large = true;
        assert!(c.validate().is_ok());
    }
}
