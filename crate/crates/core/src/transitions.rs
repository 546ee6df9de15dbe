//! Determinantal contractions and their inverse splittings.
//!
//! A contraction site is a row `[n || 1 ... 1 0 ... 0]`: the configuration
//! lives in `P^n x P` and the `n + 1` one-columns `L_1..L_{n+1}` on the
//! reduced ambient `P` form `E`, the remaining columns form `F`. Contracting
//! drops the `P^n` factor and replaces `E` by `det E = L_1 (x) ... (x) L_{n+1}`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::chow::{chern_of_sum, top_chern_of_sum, AmbientSpace, MultiDegree};
use crate::config::ConfigurationMatrix;
use crate::error::{Error, Result};
use crate::invariants::euler_number;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionSite {
    config: ConfigurationMatrix,
    row: usize,
    one_columns: Vec<usize>,
}

/// Outcome of one determinantal contraction `X^ -> X` and smoothing `X~`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionReport {
    pub odp_count: BigInt,
    /// `e(X^)`, the resolved side (configuration with the `P^n` row).
    pub euler_resolved: BigInt,
    /// `e(X~)`, a smooth member of the contracted configuration.
    pub euler_smoothed: BigInt,
    pub conifold_certified: bool,
    pub ineffective: bool,
}

impl ContractionSite {
    /// The site at `row`, if that row has exactly `n + 1` ones and zeros elsewhere.
    pub fn new(config: &ConfigurationMatrix, row: usize) -> Result<Self> {
        if config.num_rows() < 2 || row >= config.num_rows() {
            return Err(Error::NoSite { row });
        }
        let n = config.dims()[row] as usize;
        let entries = config.row(row);
        if entries.iter().any(|&q| q != 0 && q != 1) {
            return Err(Error::NoSite { row });
        }
        let one_columns: Vec<usize> = (0..entries.len()).filter(|&j| entries[j] == 1).collect();
        if one_columns.len() != n + 1 {
            return Err(Error::NoSite { row });
        }
        Ok(ContractionSite {
            config: config.clone(),
            row,
            one_columns,
        })
    }

    pub fn config(&self) -> &ConfigurationMatrix {
        &self.config
    }

    pub fn row(&self) -> usize {
        self.row
    }

    pub fn one_columns(&self) -> &[usize] {
        &self.one_columns
    }

    /// Dimension `n` of the factor that is contracted away.
    pub fn n(&self) -> u32 {
        self.config.dims()[self.row]
    }

    fn restrict(&self, col: usize) -> MultiDegree {
        MultiDegree(
            (0..self.config.num_rows())
                .filter(|&i| i != self.row)
                .map(|i| self.config.entry(i, col))
                .collect(),
        )
    }

    /// The ambient `P` with the site's factor removed.
    pub fn reduced_ambient(&self) -> AmbientSpace {
        let dims = self
            .config
            .dims()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != self.row)
            .map(|(_, &n)| n)
            .collect();
        AmbientSpace::new(dims).expect("site has at least two rows")
    }

    /// The `n + 1` summands of `E` on `P`.
    pub fn e_bundles(&self) -> Vec<MultiDegree> {
        self.one_columns.iter().map(|&j| self.restrict(j)).collect()
    }

    /// The remaining summands of `F` on `P`.
    pub fn f_bundles(&self) -> Vec<MultiDegree> {
        (0..self.config.num_cols())
            .filter(|j| !self.one_columns.contains(j))
            .map(|j| self.restrict(j))
            .collect()
    }
}

/// Every row of the form `[n || 1 ... 1 0 ... 0]` with `n + 1` ones.
pub fn find_contraction_sites(cfg: &ConfigurationMatrix) -> Vec<ContractionSite> {
    (0..cfg.num_rows())
        .filter_map(|i| ContractionSite::new(cfg, i).ok())
        .collect()
}

/// Deletes the site's row and merges its one-columns into their sum, placed
/// at the position of the first one-column.
pub fn contract(site: &ContractionSite) -> ConfigurationMatrix {
    let cfg = &site.config;
    let first = site.one_columns[0];
    let mut dims = Vec::with_capacity(cfg.num_rows() - 1);
    let mut rows = Vec::with_capacity(cfg.num_rows() - 1);
    for i in (0..cfg.num_rows()).filter(|&i| i != site.row) {
        dims.push(cfg.dims()[i]);
        let mut row = Vec::with_capacity(cfg.num_cols() - site.n() as usize);
        for j in 0..cfg.num_cols() {
            if j == first {
                row.push(site.one_columns.iter().map(|&c| cfg.entry(i, c)).sum());
            } else if !site.one_columns.contains(&j) {
                row.push(cfg.entry(i, j));
            }
        }
        rows.push(row);
    }
    ConfigurationMatrix::new(dims, rows).expect("contraction keeps a well-formed matrix")
}

/// Replaces `column` by the `n + 1` `parts` and appends a `P^n` row with
/// ones on exactly those new columns.
pub fn split(
    cfg: &ConfigurationMatrix,
    column: usize,
    n: u32,
    parts: &[MultiDegree],
) -> Result<ConfigurationMatrix> {
    if n == 0 {
        return Err(Error::InvalidSplit(
            "new factor must have dimension >= 1".into(),
        ));
    }
    if column >= cfg.num_cols() {
        return Err(Error::InvalidSplit(format!(
            "column {} out of range",
            column
        )));
    }
    if parts.len() != n as usize + 1 {
        return Err(Error::InvalidSplit(format!(
            "{} parts given, P^{} needs {}",
            parts.len(),
            n,
            n + 1
        )));
    }
    let k = cfg.num_rows();
    if let Some(p) = parts.iter().find(|p| p.len() != k) {
        return Err(Error::InvalidSplit(format!(
            "part has {} entries, expected {}",
            p.len(),
            k
        )));
    }
    if parts.iter().flat_map(|p| p.as_slice()).any(|&q| q < 0) {
        return Err(Error::InvalidSplit("negative part entry".into()));
    }
    let target = cfg.column(column);
    for i in 0..k {
        let sum: i64 = parts.iter().map(|p| p.0[i]).sum();
        if sum != target.0[i] {
            return Err(Error::InvalidSplit(format!(
                "parts sum to {} on row {}, column has {}",
                sum, i, target.0[i]
            )));
        }
    }
    let mut dims = cfg.dims().to_vec();
    dims.push(n);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(k + 1);
    for i in 0..k {
        let mut row = Vec::with_capacity(cfg.num_cols() + n as usize);
        row.extend_from_slice(&cfg.row(i)[..column]);
        row.extend(parts.iter().map(|p| p.0[i]));
        row.extend_from_slice(&cfg.row(i)[column + 1..]);
        rows.push(row);
    }
    let mut new_row = alloc::vec![0i64; cfg.num_cols() + n as usize];
    for slot in &mut new_row[column..=column + n as usize] {
        *slot = 1;
    }
    rows.push(new_row);
    ConfigurationMatrix::new(dims, rows)
}

fn require_cicy(cfg: &ConfigurationMatrix) -> Result<()> {
    if !cfg.is_cicy() {
        return Err(Error::NotCicy);
    }
    Ok(())
}

/// Number of nodes of the contracted threefold:
/// `integral_P (c_2(E)^2 - c_1(E) c_3(E)) c_top(F)`.
pub fn odp_count(site: &ContractionSite) -> Result<BigInt> {
    require_cicy(&site.config)?;
    let p = site.reduced_ambient();
    let chern_e = chern_of_sum(&p, &site.e_bundles())?;
    let (c1, c2, c3) = (
        chern_e.graded_part(1),
        chern_e.graded_part(2),
        chern_e.graded_part(3),
    );
    let degeneracy = c2.mul(&c2)?.sub(&c1.mul(&c3)?)?;
    let top_f = top_chern_of_sum(&p, &site.f_bundles())?;
    let count = degeneracy.pairing(&top_f)?;
    if count.is_negative() {
        return Err(Error::NegativeOdpCount(count));
    }
    Ok(count)
}

/// `e(X^) - e(X~) = 2 N`, checked against the Gauss-Bonnet Euler numbers of
/// both configurations computed independently.
pub fn euler_difference(site: &ContractionSite) -> Result<BigInt> {
    let report = analyze(site)?;
    Ok(report.euler_resolved - report.euler_smoothed)
}

pub fn analyze(site: &ContractionSite) -> Result<TransitionReport> {
    let odp = odp_count(site)?;
    let euler_resolved = euler_number(&site.config)?;
    let euler_smoothed = euler_number(&contract(site))?;
    let closed = BigInt::from(2) * &odp;
    let direct = &euler_resolved - &euler_smoothed;
    if closed != direct {
        return Err(Error::EulerDisagreement { closed, direct });
    }
    Ok(TransitionReport {
        ineffective: odp.is_zero(),
        odp_count: odp,
        euler_resolved,
        euler_smoothed,
        conifold_certified: true,
    })
}

/// Expected codimension `(m - k)(n - k)` of the locus where a map between
/// bundles of ranks `m` and `n` has rank at most `k`.
pub fn degeneracy_expected_codim(m: i64, n: i64, k: i64) -> Result<i64> {
    let max = m.min(n);
    if k < 0 || k > max {
        return Err(Error::RankOutOfRange { rank: k, max });
    }
    Ok((m - k) * (n - k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[(u32, &[i64])]) -> ConfigurationMatrix {
        ConfigurationMatrix::from_rows(rows).unwrap()
    }

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::from(v)
    }

    #[test]
    fn site_detection() {
        let split_quintic = cfg(&[(4, &[4, 1]), (1, &[1, 1])]);
        let sites = find_contraction_sites(&split_quintic);
        assert_eq!(sites.len(), 1);
        assert_eq!(
            (sites[0].row(), sites[0].one_columns()),
            (1, &[0usize, 1][..])
        );

        assert!(find_contraction_sites(&cfg(&[(4, &[5])])).is_empty());

        let x = cfg(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])]);
        let sites = find_contraction_sites(&x);
        assert_eq!(sites.len(), 1);
        assert_eq!(
            (sites[0].row(), sites[0].one_columns()),
            (0, &[0usize, 1, 2][..])
        );
        assert_eq!(
            sites[0].e_bundles(),
            vec![md(&[1, 0]), md(&[1, 0]), md(&[2, 2])]
        );
        assert!(sites[0].f_bundles().is_empty());

        assert_eq!(ContractionSite::new(&x, 1), Err(Error::NoSite { row: 1 }));
    }

    #[test]
    fn reduced_ambient_dimension() {
        let c = cfg(&[
            (4, &[2, 1, 1, 1]),
            (1, &[1, 1, 0, 0]),
            (1, &[1, 0, 1, 0]),
            (1, &[1, 0, 0, 1]),
        ]);
        for site in find_contraction_sites(&c) {
            let m = c.num_cols() as i64;
            let n = site.n() as i64;
            assert_eq!(site.reduced_ambient().dimension() as i64, m - n + 3);
        }
    }

    #[test]
    fn contract_examples() {
        let site = ContractionSite::new(&cfg(&[(4, &[4, 1]), (1, &[1, 1])]), 1).unwrap();
        assert_eq!(contract(&site), cfg(&[(4, &[5])]));

        let x = cfg(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])]);
        let site = ContractionSite::new(&x, 0).unwrap();
        assert_eq!(contract(&site), cfg(&[(3, &[4]), (1, &[2])]));
    }

    #[test]
    fn split_examples() {
        let q = cfg(&[(4, &[5])]);
        assert_eq!(
            split(&q, 0, 1, &[md(&[4]), md(&[1])]).unwrap(),
            cfg(&[(4, &[4, 1]), (1, &[1, 1])])
        );

        let ds = cfg(&[(3, &[4]), (1, &[2])]);
        let s = split(&ds, 0, 2, &[md(&[1, 1]), md(&[1, 0]), md(&[2, 1])]).unwrap();
        assert_eq!(s, cfg(&[(3, &[1, 1, 2]), (1, &[1, 0, 1]), (2, &[1, 1, 1])]));
        assert!(s.is_cicy());

        assert!(matches!(
            split(&ds, 0, 2, &[md(&[1, 1]), md(&[1, 1]), md(&[1, 0])]),
            Err(Error::InvalidSplit(_))
        ));
        assert!(matches!(
            split(&ds, 0, 1, &[md(&[5, 2]), md(&[-1, 0])]),
            Err(Error::InvalidSplit(_))
        ));
        assert!(matches!(
            split(&ds, 0, 1, &[md(&[4, 2])]),
            Err(Error::InvalidSplit(_))
        ));
    }

    #[test]
    fn contract_inverts_split() {
        let ds = cfg(&[(3, &[4]), (1, &[2])]);
        let s = split(&ds, 0, 2, &[md(&[1, 1]), md(&[1, 0]), md(&[2, 1])]).unwrap();
        let site = ContractionSite::new(&s, 2).unwrap();
        assert_eq!(contract(&site), ds);
    }

    #[test]
    fn node_counts() {
        let site = ContractionSite::new(&cfg(&[(4, &[4, 1]), (1, &[1, 1])]), 1).unwrap();
        assert_eq!(odp_count(&site).unwrap(), BigInt::from(16));
        assert_eq!(euler_difference(&site).unwrap(), BigInt::from(32));
        let report = analyze(&site).unwrap();
        assert_eq!(report.euler_resolved, BigInt::from(-168));
        assert_eq!(report.euler_smoothed, BigInt::from(-200));
        assert!(report.conifold_certified && !report.ineffective);

        let x = cfg(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])]);
        let site = ContractionSite::new(&x, 0).unwrap();
        assert_eq!(odp_count(&site).unwrap(), BigInt::from(28));
        assert_eq!(euler_difference(&site).unwrap(), BigInt::from(56));
    }

    #[test]
    fn ineffective_split_keeps_euler_number() {
        // h1 * (h1 + 4 h2) squares to zero on P^1 x P^3
        let ds = cfg(&[(1, &[2]), (3, &[4])]);
        let s = split(&ds, 0, 1, &[md(&[1, 0]), md(&[1, 4])]).unwrap();
        assert!(s.validate().normalized && !s.is_block_diagonal());
        let site = ContractionSite::new(&s, 2).unwrap();
        let report = analyze(&site).unwrap();
        assert!(report.ineffective);
        assert_eq!(report.odp_count, BigInt::zero());
        assert_eq!(report.euler_resolved, BigInt::from(-168));
        assert_eq!(report.euler_smoothed, BigInt::from(-168));
        assert_eq!(euler_difference(&site).unwrap(), BigInt::zero());
    }

    #[test]
    fn node_count_needs_cicy() {
        let c = cfg(&[(4, &[3, 1]), (1, &[1, 1])]);
        let site = ContractionSite::new(&c, 1).unwrap();
        assert_eq!(odp_count(&site), Err(Error::NotCicy));
    }

    #[test]
    fn expected_codimensions() {
        for n in 2..6 {
            assert_eq!(degeneracy_expected_codim(n + 1, n + 1, n - 1).unwrap(), 4);
            assert_eq!(degeneracy_expected_codim(n + 1, n + 1, n - 2).unwrap(), 9);
        }
        assert_eq!(degeneracy_expected_codim(3, 5, 3).unwrap(), 0);
        assert!(matches!(
            degeneracy_expected_codim(3, 5, 4),
            Err(Error::RankOutOfRange { rank: 4, max: 3 })
        ));
    }
}
