//! Chains of splittings and contractions.
//!
//! [`connect_to_c1111`] joins any non-block-diagonal CICY threefold to
//! `C_1111 = [1 1 1 1 || 2 2 2 2]`. Each step records the canonical keys on
//! both sides and the transition report of the contraction it performs (for a
//! split, the contraction undoing it). [`verify_chain`] replays a chain from
//! scratch and rechecks every step.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::{correspondence, CanonicalKey};
use crate::chow::MultiDegree;
use crate::config::ConfigurationMatrix;
use crate::error::{Error, Result};
use crate::transitions::{analyze, contract, split, ContractionSite, TransitionReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepKind {
    /// Replace `column` by `parts` and append a `P^n` row.
    Split {
        column: usize,
        n: u32,
        parts: Vec<MultiDegree>,
    },
    /// Contract the site at `row`; `one_columns` are its one-entries.
    Contract { row: usize, one_columns: Vec<usize> },
}

impl StepKind {
    pub fn name(&self) -> &'static str {
        match self {
            StepKind::Split { .. } => "split",
            StepKind::Contract { .. } => "contract",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub kind: StepKind,
    pub before: CanonicalKey,
    pub after: CanonicalKey,
    pub report: Option<TransitionReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionChain {
    start: ConfigurationMatrix,
    steps: Vec<ChainStep>,
    end: ConfigurationMatrix,
}

/// What went wrong at a step of [`verify_chain`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("start is not a non-block-diagonal CICY threefold: {0}")]
    InvalidStart(Error),
    #[error("configuration does not match the recorded key before the step")]
    BeforeKey,
    #[error("result does not match the recorded key after the step")]
    AfterKey,
    #[error("illegal step: {0}")]
    Illegal(Error),
    #[error("recorded one-columns {recorded:?} differ from the site's {actual:?}")]
    SiteColumns {
        recorded: Vec<usize>,
        actual: Vec<usize>,
    },
    #[error("result is not a CICY threefold")]
    NotCicy,
    #[error("result is not normalized")]
    NotNormalized,
    #[error("result is block-diagonal")]
    BlockDiagonal,
    #[error("transition is not certified: {0}")]
    Uncertified(Error),
    #[error("recorded transition report differs from the recomputed one")]
    ReportMismatch,
    #[error("recorded end configuration differs from the replayed one")]
    EndMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainFailure {
    /// Zero-based step index; `None` for the start or end configuration.
    pub step: Option<usize>,
    pub violation: Violation,
}

impl fmt::Display for ChainFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {}: {}", i + 1, self.violation),
            None => write!(f, "{}", self.violation),
        }
    }
}

impl core::error::Error for ChainFailure {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSummary {
    pub kind: StepKind,
    pub report: TransitionReport,
}

/// Result of a successful [`verify_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainReport {
    pub start: CanonicalKey,
    pub end: CanonicalKey,
    pub steps: Vec<StepSummary>,
    pub ends_at_c1111: bool,
}

impl ChainReport {
    pub fn ineffective_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.report.ineffective).count()
    }
}

/// Applies one step, returning the result and the contraction site that
/// certifies it (for a split, the site of the new row in the result).
fn apply(
    kind: &StepKind,
    current: &ConfigurationMatrix,
) -> Result<(ConfigurationMatrix, ContractionSite)> {
    match kind {
        StepKind::Split { column, n, parts } => {
            let next = split(current, *column, *n, parts)?;
            let site = ContractionSite::new(&next, next.num_rows() - 1)?;
            Ok((next, site))
        }
        StepKind::Contract { row, .. } => {
            let site = ContractionSite::new(current, *row)?;
            Ok((contract(&site), site))
        }
    }
}

/// Rewrites a step described on `reference` so it acts on the equivalent
/// matrix `current`.
fn translate(
    kind: &StepKind,
    reference: &ConfigurationMatrix,
    current: &ConfigurationMatrix,
) -> Result<StepKind> {
    if reference == current {
        return Ok(kind.clone());
    }
    let (rows, cols) = correspondence(reference, current)
        .ok_or_else(|| Error::Connect("configurations are not equivalent".into()))?;
    Ok(match kind {
        StepKind::Split { column, n, parts } => {
            let parts = parts
                .iter()
                .map(|p| {
                    let mut q = vec![0; p.len()];
                    for (i, &v) in p.as_slice().iter().enumerate() {
                        q[rows[i]] = v;
                    }
                    MultiDegree(q)
                })
                .collect();
            StepKind::Split {
                column: cols[*column],
                n: *n,
                parts,
            }
        }
        StepKind::Contract { row, .. } => {
            let site = ContractionSite::new(current, rows[*row])?;
            StepKind::Contract {
                row: site.row(),
                one_columns: site.one_columns().to_vec(),
            }
        }
    })
}

impl TransitionChain {
    pub fn new(start: ConfigurationMatrix) -> Self {
        TransitionChain {
            end: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    /// Assembles a chain from recorded parts without checking it.
    pub fn from_parts(
        start: ConfigurationMatrix,
        steps: Vec<ChainStep>,
        end: ConfigurationMatrix,
    ) -> Self {
        TransitionChain { start, steps, end }
    }

    pub fn start(&self) -> &ConfigurationMatrix {
        &self.start
    }

    pub fn end(&self) -> &ConfigurationMatrix {
        &self.end
    }

    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies a step to the current end, recording keys and the report.
    pub fn push(&mut self, kind: StepKind) -> Result<&ChainStep> {
        let (next, site) = apply(&kind, &self.end)?;
        let kind = match kind {
            StepKind::Contract { row, .. } => StepKind::Contract {
                row,
                one_columns: site.one_columns().to_vec(),
            },
            split => split,
        };
        let report = analyze(&site)?;
        self.steps.push(ChainStep {
            kind,
            before: self.end.canonical_key(),
            after: next.canonical_key(),
            report: Some(report),
        });
        self.end = next;
        Ok(self.steps.last().expect("just pushed"))
    }

    pub fn push_split(
        &mut self,
        column: usize,
        n: u32,
        parts: Vec<MultiDegree>,
    ) -> Result<&ChainStep> {
        self.push(StepKind::Split { column, n, parts })
    }

    pub fn push_contract(&mut self, row: usize) -> Result<&ChainStep> {
        self.push(StepKind::Contract {
            row,
            one_columns: Vec::new(),
        })
    }

    /// The literal matrices `M_0 = start, ..., M_T` visited by the chain.
    pub fn configurations(&self) -> Result<Vec<ConfigurationMatrix>> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(self.start.clone());
        for step in &self.steps {
            let (next, _) = apply(&step.kind, out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// The same steps replayed from an equivalent `start`, with row and
    /// column indices rewritten along the way.
    pub fn retarget(&self, start: &ConfigurationMatrix) -> Result<Self> {
        let mats = self.configurations()?;
        let mut out = TransitionChain::new(start.clone());
        for (t, step) in self.steps.iter().enumerate() {
            let kind = translate(&step.kind, &mats[t], &out.end)?;
            out.push_recorded(kind, step.report.clone())?;
        }
        Ok(out)
    }

    fn push_recorded(&mut self, kind: StepKind, report: Option<TransitionReport>) -> Result<()> {
        let (next, site) = apply(&kind, &self.end)?;
        let kind = match kind {
            StepKind::Contract { row, .. } => StepKind::Contract {
                row,
                one_columns: site.one_columns().to_vec(),
            },
            split => split,
        };
        self.steps.push(ChainStep {
            kind,
            before: self.end.canonical_key(),
            after: next.canonical_key(),
            report,
        });
        self.end = next;
        Ok(())
    }

    /// The chain run backwards from its end: splits become contractions of
    /// the new row and contractions become splits of the merged column.
    pub fn reversed(&self) -> Result<Self> {
        let mats = self.configurations()?;
        let mut out = TransitionChain::new(self.end.clone());
        for t in (0..self.steps.len()).rev() {
            let step = &self.steps[t];
            let inverse = match &step.kind {
                StepKind::Split { column, n, .. } => StepKind::Contract {
                    row: mats[t + 1].num_rows() - 1,
                    one_columns: (*column..=*column + *n as usize).collect(),
                },
                StepKind::Contract { row, .. } => {
                    let site = ContractionSite::new(&mats[t], *row)?;
                    StepKind::Split {
                        column: site.one_columns()[0],
                        n: site.n(),
                        parts: site.e_bundles(),
                    }
                }
            };
            let kind = translate(&inverse, &mats[t + 1], &out.end)?;
            out.push_recorded(kind, step.report.clone())?;
        }
        Ok(out)
    }

    /// `self` followed by `other`. The junction must be equivalent; `other`
    /// is retargeted when it is not literally equal.
    pub fn concat(&self, other: &TransitionChain) -> Result<Self> {
        let other = if other.start == self.end {
            other.clone()
        } else if other.start.is_equivalent(&self.end) {
            other.retarget(&self.end)?
        } else {
            return Err(Error::Connect("chains do not meet".into()));
        };
        let mut steps = self.steps.clone();
        steps.extend(other.steps);
        Ok(TransitionChain {
            start: self.start.clone(),
            steps,
            end: other.end,
        })
    }
}

fn check_result(cfg: &ConfigurationMatrix) -> core::result::Result<(), Violation> {
    let report = cfg.validate();
    if !report.is_cicy() {
        return Err(Violation::NotCicy);
    }
    if !report.normalized {
        return Err(Violation::NotNormalized);
    }
    if report.block_diagonal {
        return Err(Violation::BlockDiagonal);
    }
    Ok(())
}

/// Replays `chain` from its start, checking legality of every step, the
/// CICY and non-block-diagonal conditions, key continuity and the Euler
/// bookkeeping of each transition.
pub fn verify_chain(chain: &TransitionChain) -> core::result::Result<ChainReport, ChainFailure> {
    let fail = |step: Option<usize>, violation: Violation| ChainFailure { step, violation };
    let mut current = chain.start.clone();
    check_result(&current).map_err(|v| {
        let err = match v {
            Violation::BlockDiagonal => Error::BlockDiagonal,
            Violation::NotNormalized => Error::InvalidConfiguration("not normalized".into()),
            _ => Error::NotCicy,
        };
        fail(None, Violation::InvalidStart(err))
    })?;
    let mut steps = Vec::with_capacity(chain.steps.len());
    for (t, step) in chain.steps.iter().enumerate() {
        if current.canonical_key() != step.before {
            return Err(fail(Some(t), Violation::BeforeKey));
        }
        let (next, site) =
            apply(&step.kind, &current).map_err(|e| fail(Some(t), Violation::Illegal(e)))?;
        if let StepKind::Contract { one_columns, .. } = &step.kind {
            if one_columns.as_slice() != site.one_columns() {
                return Err(fail(
                    Some(t),
                    Violation::SiteColumns {
                        recorded: one_columns.clone(),
                        actual: site.one_columns().to_vec(),
                    },
                ));
            }
        }
        check_result(&next).map_err(|v| fail(Some(t), v))?;
        if next.canonical_key() != step.after {
            return Err(fail(Some(t), Violation::AfterKey));
        }
        let report = analyze(&site).map_err(|e| fail(Some(t), Violation::Uncertified(e)))?;
        if step.report.as_ref().is_some_and(|r| *r != report) {
            return Err(fail(Some(t), Violation::ReportMismatch));
        }
        steps.push(StepSummary {
            kind: step.kind.clone(),
            report,
        });
        current = next;
    }
    if current != chain.end {
        return Err(fail(None, Violation::EndMismatch));
    }
    Ok(ChainReport {
        start: chain.start.canonical_key(),
        end: current.canonical_key(),
        ends_at_c1111: current.is_equivalent(&ConfigurationMatrix::c1111()),
        steps,
    })
}

/// `(sum of n_i over rows with n_i >= 2, sum of (q - 1)^+ over those rows, rows)`.
fn measure(cfg: &ConfigurationMatrix) -> (i64, i64, usize) {
    let mut big = 0;
    let mut excess = 0;
    for (i, &n) in cfg.dims().iter().enumerate() {
        if n >= 2 {
            big += n as i64;
            excess += cfg.row(i).iter().map(|&q| (q - 1).max(0)).sum::<i64>();
        }
    }
    (big, excess, cfg.num_rows())
}

/// Next step of the deterministic walk towards `C_1111`:
/// split off a `P^1` from an entry `>= 2` of a big row; otherwise contract a
/// big row; otherwise contract a `P^1` row with two one-entries.
fn next_step(cfg: &ConfigurationMatrix) -> Result<Option<StepKind>> {
    let dims = cfg.dims();
    for i in (0..cfg.num_rows()).filter(|&i| dims[i] >= 2) {
        if let Some(j) = cfg.row(i).iter().position(|&q| q >= 2) {
            let mut rest = cfg.column(j);
            rest.0[i] -= 1;
            let mut unit = MultiDegree::zero(cfg.num_rows());
            unit.0[i] = 1;
            return Ok(Some(StepKind::Split {
                column: j,
                n: 1,
                parts: vec![rest, unit],
            }));
        }
    }
    if let Some(i) = (0..cfg.num_rows()).find(|&i| dims[i] >= 2) {
        let site = ContractionSite::new(cfg, i)
            .map_err(|_| Error::Connect(format!("big row {} is not a contraction site", i)))?;
        return Ok(Some(StepKind::Contract {
            row: i,
            one_columns: site.one_columns().to_vec(),
        }));
    }
    Ok((0..cfg.num_rows())
        .filter_map(|i| ContractionSite::new(cfg, i).ok())
        .next()
        .map(|site| StepKind::Contract {
            row: site.row(),
            one_columns: site.one_columns().to_vec(),
        }))
}

/// A certified chain from `cfg` to `C_1111`.
///
/// Fails with [`Error::BlockDiagonal`] or [`Error::NotCicy`] on bad input,
/// and with [`Error::Connect`] if an internal invariant breaks.
pub fn connect_to_c1111(cfg: &ConfigurationMatrix) -> Result<TransitionChain> {
    let report = cfg.validate();
    if !report.is_cicy() {
        return Err(Error::NotCicy);
    }
    if !report.normalized {
        return Err(Error::InvalidConfiguration("not normalized".into()));
    }
    if report.block_diagonal {
        return Err(Error::BlockDiagonal);
    }
    let mut chain = TransitionChain::new(cfg.clone());
    while let Some(kind) = next_step(chain.end())? {
        let before = measure(chain.end());
        let name = kind.name();
        chain.push(kind)?;
        let after = measure(chain.end());
        if after >= before {
            return Err(Error::Connect(format!(
                "{} did not decrease {:?} -> {:?}",
                name, before, after
            )));
        }
        if let Err(v) = check_result(chain.end()) {
            return Err(Error::Connect(format!("after {}: {}", name, v)));
        }
    }
    if !chain.end().is_equivalent(&ConfigurationMatrix::c1111()) {
        return Err(Error::Connect(format!("walk stopped at\n{}", chain.end())));
    }
    Ok(chain)
}

/// A chain from `a` to `b` through `C_1111`.
pub fn connect(a: &ConfigurationMatrix, b: &ConfigurationMatrix) -> Result<TransitionChain> {
    let down = connect_to_c1111(a)?;
    let up = connect_to_c1111(b)?.reversed()?;
    down.concat(&up)
}

fn seeds() -> Vec<ConfigurationMatrix> {
    let table: [&[(u32, &[i64])]; 10] = [
        &[(1, &[2]), (1, &[2]), (1, &[2]), (1, &[2])],
        &[(4, &[5])],
        &[(5, &[3, 3])],
        &[(5, &[2, 4])],
        &[(6, &[3, 2, 2])],
        &[(7, &[2, 2, 2, 2])],
        &[(3, &[4]), (1, &[2])],
        &[(2, &[3]), (2, &[3])],
        &[(1, &[2]), (1, &[2]), (2, &[3])],
        &[(3, &[2, 2]), (2, &[3, 0])],
    ];
    table
        .iter()
        .map(|rows| ConfigurationMatrix::from_rows(rows).expect("seed table is well formed"))
        .collect()
}

fn fits(cfg: &ConfigurationMatrix, max_rows: usize, max_cols: usize, max_n: u32) -> bool {
    cfg.num_rows() <= max_rows
        && cfg.num_cols() <= max_cols
        && cfg.dims().iter().all(|&n| n <= max_n)
}

/// Splits `column` into `n + 1` nonzero parts chosen at random.
fn random_parts(rng: &mut ChaCha8Rng, column: &MultiDegree, n: usize) -> Vec<MultiDegree> {
    let mut units: Vec<usize> = Vec::new();
    for (i, &q) in column.as_slice().iter().enumerate() {
        units.extend(core::iter::repeat_n(i, q as usize));
    }
    units.shuffle(rng);
    let mut parts = vec![MultiDegree::zero(column.len()); n + 1];
    for (u, &i) in units.iter().enumerate() {
        let p = if u <= n { u } else { rng.gen_range(0..=n) };
        parts[p].0[i] += 1;
    }
    parts
}

/// A deterministic pseudo-random normalized, non-block-diagonal CICY with at
/// most `max_rows` rows, `max_cols` columns and factors of dimension at most
/// `max_n`, built by random splittings of a small seed and then shuffled.
/// Falls back to `C_1111` when no seed fits the bounds.
pub fn random_cicy(seed: u64, max_rows: usize, max_cols: usize, max_n: u32) -> ConfigurationMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<_> = seeds()
        .into_iter()
        .filter(|c| fits(c, max_rows, max_cols, max_n))
        .collect();
    let Some(base) = seeds.choose(&mut rng) else {
        return ConfigurationMatrix::c1111();
    };
    let mut cfg = base.clone();
    let attempts = rng.gen_range(0..=8);
    for _ in 0..attempts {
        if cfg.num_rows() >= max_rows {
            break;
        }
        let j = rng.gen_range(0..cfg.num_cols());
        let column = cfg.column(j);
        let total = column.total();
        let room = max_cols.saturating_sub(cfg.num_cols()) as i64;
        let top = (total - 1).min(room).min(max_n as i64);
        if top < 1 {
            continue;
        }
        let n = rng.gen_range(1..=top) as usize;
        let parts = random_parts(&mut rng, &column, n);
        if let Ok(next) = split(&cfg, j, n as u32, &parts) {
            if next.is_cicy() && !next.is_block_diagonal() {
                cfg = next;
            }
        }
    }
    let mut rows: Vec<usize> = (0..cfg.num_rows()).collect();
    let mut cols: Vec<usize> = (0..cfg.num_cols()).collect();
    rows.shuffle(&mut rng);
    cols.shuffle(&mut rng);
    cfg.permuted(&rows, &cols)
}

/// Human-readable one-line description of a step.
pub fn describe(kind: &StepKind) -> String {
    match kind {
        StepKind::Split { column, n, parts } => {
            let parts: Vec<String> = parts
                .iter()
                .map(|p| format!("{:?}", p.as_slice()))
                .collect();
            format!(
                "split column {} into P^{} parts {}",
                column + 1,
                n,
                parts.join(" ")
            )
        }
        StepKind::Contract { row, one_columns } => {
            let cols: Vec<String> = one_columns.iter().map(|j| format!("{}", j + 1)).collect();
            format!("contract row {} (columns {})", row + 1, cols.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn cfg(rows: &[(u32, &[i64])]) -> ConfigurationMatrix {
        ConfigurationMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn quintic_reaches_c1111() {
        let chain = connect_to_c1111(&cfg(&[(4, &[5])])).unwrap();
        let report = verify_chain(&chain).unwrap();
        assert!(report.ends_at_c1111);
        assert!(chain.end().is_equivalent(&ConfigurationMatrix::c1111()));
        assert_eq!(report.steps.len(), chain.len());
        let first = &report.steps[0].report;
        assert_eq!(first.euler_smoothed, BigInt::from(-200));
        assert_eq!(first.euler_resolved, BigInt::from(-168));
        assert_eq!(first.odp_count, BigInt::from(16));
    }

    #[test]
    fn c1111_is_terminal() {
        let chain = connect_to_c1111(&ConfigurationMatrix::c1111()).unwrap();
        assert!(chain.is_empty());
        assert!(verify_chain(&chain).unwrap().ends_at_c1111);
    }

    #[test]
    fn rejects_bad_input() {
        let block = cfg(&[(2, &[3, 0]), (2, &[0, 3]), (1, &[0, 0])]);
        assert!(connect_to_c1111(&block).is_err());
        let product = cfg(&[(1, &[2, 0]), (2, &[0, 3])]);
        assert_eq!(connect_to_c1111(&product).unwrap_err(), Error::NotCicy);
        let prod3 = cfg(&[(2, &[3, 0]), (3, &[0, 4])]);
        assert!(prod3.is_cicy());
        assert_eq!(connect_to_c1111(&prod3).unwrap_err(), Error::BlockDiagonal);
    }

    #[test]
    fn reversed_chain_verifies() {
        let chain = connect_to_c1111(&cfg(&[(3, &[4]), (1, &[2])])).unwrap();
        let back = chain.reversed().unwrap();
        assert_eq!(back.len(), chain.len());
        assert!(back.start() == chain.end());
        assert!(back.end().is_equivalent(chain.start()));
        let report = verify_chain(&back).unwrap();
        assert!(!report.ends_at_c1111);
        for (a, b) in report
            .steps
            .iter()
            .zip(verify_chain(&chain).unwrap().steps.iter().rev())
        {
            assert_eq!(a.report, b.report);
        }
    }

    #[test]
    fn connect_two_configurations() {
        let a = cfg(&[(5, &[3, 3])]);
        let b = cfg(&[(2, &[3]), (2, &[3])]);
        let chain = connect(&a, &b).unwrap();
        verify_chain(&chain).unwrap();
        assert!(chain.end().is_equivalent(&b));
        assert!(chain.start() == &a);
    }

    #[test]
    fn tampering_is_detected() {
        let chain = connect_to_c1111(&cfg(&[(4, &[5])])).unwrap();
        let mut steps = chain.steps().to_vec();
        steps[1].after = steps[0].after.clone();
        let bad = TransitionChain::from_parts(chain.start().clone(), steps, chain.end().clone());
        let failure = verify_chain(&bad).unwrap_err();
        assert_eq!(failure.step, Some(1));
        assert_eq!(failure.violation, Violation::AfterKey);

        let mut steps = chain.steps().to_vec();
        if let Some(r) = steps[0].report.as_mut() {
            r.odp_count += 1;
        }
        let bad = TransitionChain::from_parts(chain.start().clone(), steps, chain.end().clone());
        assert_eq!(
            verify_chain(&bad).unwrap_err().violation,
            Violation::ReportMismatch
        );
    }

    #[test]
    fn random_cicys_respect_bounds() {
        for seed in 0..60 {
            let c = random_cicy(seed, 7, 9, 7);
            assert!(fits(&c, 7, 9, 7), "{}", c);
            let v = c.validate();
            assert!(v.is_cicy() && v.normalized && !v.block_diagonal, "{}", c);
            assert_eq!(c, random_cicy(seed, 7, 9, 7));
        }
        assert_eq!(random_cicy(3, 1, 1, 1), ConfigurationMatrix::c1111());
    }

    #[test]
    fn random_cicys_connect() {
        for seed in 0..25 {
            let c = random_cicy(seed, 7, 9, 7);
            let chain = connect_to_c1111(&c).unwrap_or_else(|e| panic!("{}\n{}", e, c));
            assert!(verify_chain(&chain).unwrap().ends_at_c1111);
        }
    }
}
