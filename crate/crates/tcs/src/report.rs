//! Report envelope and the JSON / CSV renderings.
//!
//! JSON is authoritative; keys are emitted in sorted order so identical runs
//! give identical bytes. CSV is a flat projection of the tabular part.

use serde::Serialize;
use serde_json::{Map, Value};
use tcs_core::oracle::{ResidualReport, UnitConversion};

use crate::args::RunConfig;
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// A published value disagrees with the verified one.
    Conflict,
    NoPrediction,
}

impl From<tcs_core::oracle::Verdict> for Outcome {
    fn from(v: tcs_core::oracle::Verdict) -> Self {
        match v {
            tcs_core::oracle::Verdict::Pass => Outcome::Pass,
            tcs_core::oracle::Verdict::Fail => Outcome::Fail,
            tcs_core::oracle::Verdict::NoPrediction => Outcome::NoPrediction,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerdictEntry {
    pub name: String,
    pub verdict: Outcome,
    pub detail: String,
}

impl VerdictEntry {
    pub fn new(name: impl Into<String>, verdict: Outcome, detail: impl Into<String>) -> Self {
        Self { name: name.into(), verdict, detail: detail.into() }
    }

    pub fn check(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { Outcome::Pass } else { Outcome::Fail }, detail)
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub config: RunConfig,
    pub body: Value,
    pub verdicts: Vec<VerdictEntry>,
    pub table: Table,
}

impl Report {
    pub fn new<B: Serialize>(command: &'static str, config: RunConfig, body: &B, verdicts: Vec<VerdictEntry>, table: Table) -> Result<Self, CliError> {
        Ok(Self { command, config, body: serde_json::to_value(body)?, verdicts, table })
    }

    /// Any verdict that should make the process exit non-zero.
    pub fn failed(&self) -> bool {
        self.verdicts.iter().any(|v| matches!(v.verdict, Outcome::Fail | Outcome::Conflict))
    }

    pub fn to_value(&self) -> Result<Value, CliError> {
        let mut map = match &self.body {
            Value::Object(m) => m.clone(),
            Value::Null => Map::new(),
            other => {
                let mut m = Map::new();
                m.insert("result".into(), other.clone());
                m
            }
        };
        map.insert("command".into(), Value::String(self.command.into()));
        map.insert("config".into(), serde_json::to_value(&self.config)?);
        map.insert("verdicts".into(), serde_json::to_value(&self.verdicts)?);
        Ok(Value::Object(map))
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        let mut s = serde_json::to_string_pretty(&self.to_value()?)?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.table.header)?;
        for row in &self.table.rows {
            w.write_record(row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Serialized [`ResidualReport`].
#[derive(Debug, Clone, Serialize)]
pub struct ResidualJson {
    pub state: String,
    pub samples: u64,
    pub rejected: u64,
    pub acceptance_rate: f64,
    pub energy_mean: f64,
    pub energy_stddev: f64,
    pub relative_stddev: f64,
    pub max_abs_dev: f64,
    pub max_imag_ratio: f64,
    pub predicted: Option<f64>,
    pub tol: f64,
    pub verdict: Outcome,
    pub unit_note: String,
}

impl ResidualJson {
    pub fn new(r: &ResidualReport, acceptance_rate: f64) -> Self {
        Self {
            state: r.state.name(),
            samples: r.samples,
            rejected: r.rejected,
            acceptance_rate,
            energy_mean: r.energy_mean,
            energy_stddev: r.energy_stddev,
            relative_stddev: r.relative_stddev(),
            max_abs_dev: r.max_abs_dev,
            max_imag_ratio: r.max_imag_ratio,
            predicted: r.predicted,
            tol: r.tol,
            verdict: r.verdict.into(),
            unit_note: r.unit_note.clone(),
        }
    }
}

/// Reduced-to-physical conversion with both closed forms it is compared to.
#[derive(Debug, Clone, Serialize)]
pub struct UnitsJson {
    pub factor: f64,
    pub change_of_variables: f64,
    pub published: f64,
    pub matches: &'static str,
    pub published_agrees: bool,
}

impl From<&UnitConversion> for UnitsJson {
    fn from(u: &UnitConversion) -> Self {
        Self {
            factor: u.factor,
            change_of_variables: u.change_of_variables,
            published: u.published,
            matches: u.matches(),
            published_agrees: (u.factor - u.published).abs() <= 1e-8 * u.published,
        }
    }
}

pub fn fmt_opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
