//! JSON documents: the report schema shared by every subcommand and the
//! chain format written by `connect --emit-chain`.
//!
//! Integers are written as JSON numbers when they fit in `i64` and as
//! decimal strings otherwise, so nothing is rounded. Row and column indices
//! in chain documents are 1-based, like the command line.

use std::collections::BTreeMap;

use cicy_core::web::StepKind;
use cicy_core::{BigInt, CanonicalKey, ChainStep, MultiDegree, TransitionChain, TransitionReport};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::text;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// Stated in the literature the catalog reproduces.
    Literature,
    /// Immediate from definitions.
    Trivial,
    /// Computed here by an independent route.
    Derived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Literature => "literature",
            Provenance::Trivial => "trivial",
            Provenance::Derived => "derived",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    pub provenance: Provenance,
    pub pass: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Input {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub options: BTreeMap<String, Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub input: Input,
    pub results: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(input: Input) -> Self {
        Report {
            tool_version: TOOL_VERSION.to_owned(),
            input,
            results: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_owned(), value.into());
    }

    /// Records a check; it passes iff `expected == got`.
    pub fn check(
        &mut self,
        name: &str,
        expected: Value,
        got: Value,
        provenance: Provenance,
    ) -> bool {
        let pass = expected == got;
        self.checks.push(Check {
            name: name.to_owned(),
            expected,
            got,
            provenance,
            pass,
        });
        pass
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report values are plain JSON")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

pub fn int(v: &BigInt) -> Value {
    match i64::try_from(v) {
        Ok(small) => Value::from(small),
        Err(_) => Value::from(v.to_string()),
    }
}

pub fn to_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Step parameters, tagged by `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StepParams {
    Split {
        column: usize,
        n: u32,
        parts: Vec<Vec<i64>>,
    },
    Contract {
        row: usize,
        one_columns: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepDoc {
    #[serde(flatten)]
    pub params: StepParams,
    pub before_key: String,
    pub after_key: String,
    /// The configuration after the step, in the text matrix format.
    pub matrix: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub odp_count: Option<Value>,
    /// Euler numbers of the configurations before and after the step.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_before: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_after: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ineffective: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conifold_certified: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainDoc {
    pub start: Vec<String>,
    pub end: Vec<String>,
    pub steps: Vec<StepDoc>,
}

#[derive(Debug, thiserror::Error)]
pub enum ChainDocError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{what}: {source}")]
    Matrix {
        what: String,
        #[source]
        source: text::ParseError,
    },
    #[error("step {step}: {message}")]
    Step { step: usize, message: String },
    #[error("chain cannot be replayed: {0}")]
    Replay(cicy_core::Error),
}

impl ChainDoc {
    pub fn from_chain(chain: &TransitionChain) -> Result<Self, cicy_core::Error> {
        let mats = chain.configurations()?;
        let steps = chain
            .steps()
            .iter()
            .zip(&mats[1..])
            .map(|(step, after)| step_doc(step, after))
            .collect();
        Ok(ChainDoc {
            start: text::lines(chain.start()),
            end: text::lines(chain.end()),
            steps,
        })
    }

    /// Rebuilds the chain; the per-step matrices must match a replay.
    pub fn to_chain(&self) -> Result<TransitionChain, ChainDocError> {
        let matrix = |what: &str, lines: &[String]| {
            text::from_lines(lines).map_err(|source| ChainDocError::Matrix {
                what: what.to_owned(),
                source,
            })
        };
        let start = matrix("start", &self.start)?;
        let end = matrix("end", &self.end)?;
        let steps = self
            .steps
            .iter()
            .enumerate()
            .map(|(i, s)| chain_step(i + 1, s))
            .collect::<Result<Vec<_>, _>>()?;
        let chain = TransitionChain::from_parts(start, steps, end);
        let mats = chain.configurations().map_err(ChainDocError::Replay)?;
        for (i, (doc, replayed)) in self.steps.iter().zip(&mats[1..]).enumerate() {
            if matrix(&format!("step {}", i + 1), &doc.matrix)? != *replayed {
                return Err(ChainDocError::Step {
                    step: i + 1,
                    message: "recorded matrix differs from the replayed one".into(),
                });
            }
        }
        Ok(chain)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chain documents are plain JSON")
    }

    pub fn from_json(s: &str) -> Result<Self, ChainDocError> {
        Ok(serde_json::from_str(s)?)
    }
}

fn step_doc(step: &ChainStep, after: &cicy_core::ConfigurationMatrix) -> StepDoc {
    let params = match &step.kind {
        StepKind::Split { column, n, parts } => StepParams::Split {
            column: column + 1,
            n: *n,
            parts: parts.iter().map(|p| p.as_slice().to_vec()).collect(),
        },
        StepKind::Contract { row, one_columns } => StepParams::Contract {
            row: row + 1,
            one_columns: one_columns.iter().map(|j| j + 1).collect(),
        },
    };
    let (before, after_e) = match (&step.kind, &step.report) {
        (StepKind::Contract { .. }, Some(r)) => (Some(&r.euler_resolved), Some(&r.euler_smoothed)),
        (StepKind::Split { .. }, Some(r)) => (Some(&r.euler_smoothed), Some(&r.euler_resolved)),
        (_, None) => (None, None),
    };
    StepDoc {
        params,
        before_key: step.before.to_string(),
        after_key: step.after.to_string(),
        matrix: text::lines(after),
        odp_count: step.report.as_ref().map(|r| int(&r.odp_count)),
        euler_before: before.map(int),
        euler_after: after_e.map(int),
        ineffective: step.report.as_ref().map(|r| r.ineffective),
        conifold_certified: step.report.as_ref().map(|r| r.conifold_certified),
    }
}

fn chain_step(step: usize, doc: &StepDoc) -> Result<ChainStep, ChainDocError> {
    let bad = |message: &str| ChainDocError::Step {
        step,
        message: message.to_owned(),
    };
    let index = |i: usize| i.checked_sub(1).ok_or_else(|| bad("indices are 1-based"));
    let kind = match &doc.params {
        StepParams::Split { column, n, parts } => StepKind::Split {
            column: index(*column)?,
            n: *n,
            parts: parts.iter().map(|p| MultiDegree(p.clone())).collect(),
        },
        StepParams::Contract { row, one_columns } => StepKind::Contract {
            row: index(*row)?,
            one_columns: one_columns
                .iter()
                .map(|&j| index(j))
                .collect::<Result<_, _>>()?,
        },
    };
    let key = |s: &str| {
        s.parse::<CanonicalKey>()
            .map_err(|_| bad("canonical key is not hex"))
    };
    let number = |v: &Option<Value>| -> Result<Option<BigInt>, ChainDocError> {
        v.as_ref()
            .map(|v| to_bigint(v).ok_or_else(|| bad("expected an integer")))
            .transpose()
    };
    let (odp, before, after) = (
        number(&doc.odp_count)?,
        number(&doc.euler_before)?,
        number(&doc.euler_after)?,
    );
    let report = match (odp, before, after, doc.ineffective) {
        (Some(odp_count), Some(before), Some(after), Some(ineffective)) => {
            let (euler_resolved, euler_smoothed) = match kind {
                StepKind::Contract { .. } => (before, after),
                StepKind::Split { .. } => (after, before),
            };
            Some(TransitionReport {
                odp_count,
                euler_resolved,
                euler_smoothed,
                conifold_certified: doc.conifold_certified.unwrap_or(true),
                ineffective,
            })
        }
        (None, None, None, None) => None,
        _ => return Err(bad("report fields must be all present or all absent")),
    };
    Ok(ChainStep {
        kind,
        before: key(&doc.before_key)?,
        after: key(&doc.after_key)?,
        report,
    })
}
