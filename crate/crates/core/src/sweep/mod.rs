//! Parameter sweeps of `Res(H, K, v)` over integer `(m, r, c)`.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{build_core, Mode};
use crate::poly::VarId;
use crate::resultant::{resultant_interp_with, InterpOptions, ResultantError};

pub const M_MIN: i64 = 4;
pub const M_MAX: i64 = 30;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("failed to build a worker pool: {0}")]
    Pool(String),
}

/// Variable eliminated from `H` and `K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElimVar {
    K,
    F,
}

impl ElimVar {
    pub fn var(self) -> VarId {
        match self {
            ElimVar::K => VarId::K,
            ElimVar::F => VarId::F,
        }
    }

    /// The variable that survives the elimination.
    pub fn spectator(self) -> VarId {
        match self {
            ElimVar::K => VarId::F,
            ElimVar::F => VarId::K,
        }
    }
}

impl FromStr for ElimVar {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "k" => Ok(ElimVar::K),
            "f" => Ok(ElimVar::F),
            _ => Err(SweepError::Usage(format!("variable must be k or f, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RPolicy {
    All,
    List(Vec<i64>),
}

impl FromStr for RPolicy {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(RPolicy::All);
        }
        parse_list(s).map(RPolicy::List)
    }
}

/// Comma-separated integers.
pub fn parse_list(s: &str) -> Result<Vec<i64>, SweepError> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| SweepError::Usage(format!("not an integer: `{t}`")))
        })
        .collect()
}

/// `A..B` (inclusive) or a single integer.
pub fn parse_range(s: &str) -> Result<(i64, i64), SweepError> {
    let bad = || SweepError::Usage(format!("range must look like 4..15, got `{s}`"));
    match s.split_once("..") {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Text,
}

impl FromStr for ReportFormat {
    type Err = SweepError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "text" => Ok(ReportFormat::Text),
            _ => Err(SweepError::Usage(format!("format must be json or text, got `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub m_lo: i64,
    pub m_hi: i64,
    pub r: RPolicy,
    pub c: Vec<i64>,
    pub var: ElimVar,
    pub jobs: usize,
    pub format: ReportFormat,
    pub case_timeout_secs: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            m_lo: M_MIN,
            m_hi: 15,
            r: RPolicy::All,
            c: vec![-1, 0, 1],
            var: ElimVar::K,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
            format: ReportFormat::Json,
            case_timeout_secs: 300,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), SweepError> {
        if !(M_MIN <= self.m_lo && self.m_lo <= self.m_hi && self.m_hi <= M_MAX) {
            return Err(SweepError::Usage(format!(
                "m range {}..{} must satisfy {M_MIN} <= lo <= hi <= {M_MAX}",
                self.m_lo, self.m_hi
            )));
        }
        if self.c.is_empty() || self.c.iter().any(|c| !(-1..=1).contains(c)) {
            return Err(SweepError::Usage("c values must be a nonempty subset of {-1, 0, 1}".into()));
        }
        if let RPolicy::List(rs) = &self.r {
            if rs.is_empty() || rs.iter().any(|&r| r < 2) {
                return Err(SweepError::Usage("r values must be at least 2".into()));
            }
        }
        if self.jobs == 0 {
            return Err(SweepError::Usage("jobs must be positive".into()));
        }
        Ok(())
    }

    /// Every `(m, r, c)` of the sweep, sorted; `r` values outside
    /// `2..m` are skipped for that `m`.
    pub fn cases(&self) -> Vec<(i64, i64, i64)> {
        let mut c = self.c.clone();
        c.sort_unstable();
        c.dedup();
        let mut out = Vec::new();
        for m in self.m_lo..=self.m_hi {
            let rs: Vec<i64> = match &self.r {
                RPolicy::All => (2..m).collect(),
                RPolicy::List(l) => {
                    let mut l: Vec<i64> = l.iter().copied().filter(|&r| (2..m).contains(&r)).collect();
                    l.sort_unstable();
                    l.dedup();
                    l
                }
            };
            for r in rs {
                for &cv in &c {
                    out.push((m, r, cv));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub m: i64,
    pub r: i64,
    pub c: i64,
    pub var: ElimVar,
    pub zero: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    /// Leading coefficient in the surviving variable, exact.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ms: Option<u64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub timeout: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseId {
    pub m: i64,
    pub r: i64,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub results: Vec<CaseResult>,
    /// Cases with a zero resultant.
    pub exceptions: Vec<CaseId>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timeouts: Vec<CaseId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Runs one case; a timeout is flagged, never reported as a result.
pub fn run_case(m: i64, r: i64, c: i64, var: ElimVar, timeout: Duration) -> CaseResult {
    let start = Instant::now();
    let core = build_core(Mode::at(m, r, c)).expect("sweep cases are valid");
    let opts = InterpOptions {
        deadline: Some(start + timeout),
        ..InterpOptions::default()
    };
    let res = resultant_interp_with(&core.h, &core.k, var.var(), var.spectator(), &opts);
    let ms = Some(start.elapsed().as_millis() as u64);
    let mut out = CaseResult {
        m,
        r,
        c,
        var,
        zero: false,
        degree: None,
        leading: None,
        ms,
        timeout: false,
    };
    match res {
        Ok(p) if p.is_zero() => out.zero = true,
        Ok(p) => {
            let s = var.spectator();
            let d = p.degree(s);
            out.degree = Some(d);
            let lead = p.coefficient(s, d).as_constant().expect("resultant is univariate");
            out.leading = Some(lead.to_string());
        }
        Err(ResultantError::Timeout) => out.timeout = true,
        Err(e) => panic!("resultant failed at ({m}, {r}, {c}): {e}"),
    }
    out
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    config.validate()?;
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| SweepError::Pool(e.to_string()))?;
    let timeout = Duration::from_secs(config.case_timeout_secs);
    let cases = config.cases();
    let mut results: Vec<CaseResult> = pool.install(|| {
        cases
            .par_iter()
            .map(|&(m, r, c)| run_case(m, r, c, config.var, timeout))
            .collect()
    });
    results.sort_by_key(|x| (x.m, x.r, x.c));
    let id = |x: &CaseResult| CaseId { m: x.m, r: x.r, c: x.c };
    let exceptions = results.iter().filter(|x| x.zero).map(id).collect();
    let timeouts = results.iter().filter(|x| x.timeout).map(id).collect();
    Ok(SweepReport {
        config: config.clone(),
        results,
        exceptions,
        timeouts,
        elapsed_ms: Some(start.elapsed().as_millis() as u64),
    })
}

impl SweepReport {
    /// Drops timing fields so that reruns compare byte for byte.
    pub fn stable(mut self) -> Self {
        self.elapsed_ms = None;
        for r in &mut self.results {
            r.ms = None;
        }
        self
    }

    /// Zero-resultant cases the classification predicts: `(7, 4, c)` when
    /// eliminating `k`, every case when eliminating `f`.
    pub fn expected_exceptions(&self) -> Vec<CaseId> {
        self.results
            .iter()
            .filter(|x| match x.var {
                ElimVar::K => x.m == 7 && x.r == 4,
                ElimVar::F => true,
            })
            .map(|x| CaseId { m: x.m, r: x.r, c: x.c })
            .collect()
    }

    /// `0` as predicted, `1` on a mismatch, `3` if any case timed out.
    pub fn exit_code(&self) -> i32 {
        if !self.timeouts.is_empty() {
            3
        } else if self.exceptions == self.expected_exceptions() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for x in &self.results {
            let var = match x.var {
                ElimVar::K => "k",
                ElimVar::F => "f",
            };
            write!(out, "m={} r={} c={} var={var}", x.m, x.r, x.c).unwrap();
            if x.timeout {
                out.push_str(" timeout");
            } else if x.zero {
                out.push_str(" zero");
            } else {
                write!(
                    out,
                    " degree={} leading={}",
                    x.degree.unwrap_or_default(),
                    x.leading.as_deref().unwrap_or("")
                )
                .unwrap();
            }
            if let Some(ms) = x.ms {
                write!(out, " ms={ms}").unwrap();
            }
            out.push('\n');
        }
        let ids: Vec<String> = self
            .exceptions
            .iter()
            .map(|e| format!("({},{},{})", e.m, e.r, e.c))
            .collect();
        writeln!(out, "exceptions: {}", if ids.is_empty() { "none".into() } else { ids.join(" ") }).unwrap();
        if let Some(ms) = self.elapsed_ms {
            writeln!(out, "elapsed_ms: {ms}").unwrap();
        }
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Text => self.to_text(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_range("4..15").unwrap(), (4, 15));
        assert_eq!(parse_range("7").unwrap(), (7, 7));
        assert!(parse_range("4-15").is_err());
        assert_eq!(parse_list("-1,0, 1").unwrap(), vec![-1, 0, 1]);
        assert_eq!("all".parse::<RPolicy>().unwrap(), RPolicy::All);
    }

    #[test]
    fn case_enumeration() {
        let cfg = SweepConfig {
            m_lo: 4,
            m_hi: 5,
            c: vec![1, -1],
            ..SweepConfig::default()
        };
        let cases = cfg.cases();
        assert_eq!(cases.len(), (2 + 3) * 2);
        assert_eq!(cases[0], (4, 2, -1));
        let bad = SweepConfig {
            m_hi: 31,
            ..SweepConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn empty_sweep_serializes() {
        let cfg = SweepConfig {
            m_lo: 4,
            m_hi: 4,
            r: RPolicy::List(vec![9]),
            ..SweepConfig::default()
        };
        let rep = run_sweep(&cfg).unwrap();
        assert!(rep.to_json().contains("\"results\": []"));
        assert_eq!(rep.exit_code(), 0);
    }
}
