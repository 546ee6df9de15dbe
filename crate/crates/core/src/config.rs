//! Configuration matrices `[n || q]`: ambient factor dimensions together with
//! the multidegrees of the defining equations, one column per equation.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::chow::{AmbientSpace, MultiDegree};
use crate::error::{Error, Result};

/// `k` rows (one per projective factor) and `m` degree columns.
///
/// Entries are stored as signed integers so that malformed input can be
/// reported by [`ConfigurationMatrix::validate`] instead of being rejected
/// at construction; every operation that needs a valid matrix checks it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigurationMatrix {
    ambient: AmbientSpace,
    degrees: Vec<Vec<i64>>,
}

/// The checks performed by [`ConfigurationMatrix::validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValidationReport {
    pub dimension: i64,
    pub nonnegative: bool,
    /// Every degree column sums to at least 2.
    pub normalized: bool,
    /// `sum_j q^i_j = n_i + 1` on every row.
    pub calabi_yau: bool,
    pub block_diagonal: bool,
    /// Some block is the two-point configuration `[1 || 2]`.
    pub forbidden_block: bool,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.nonnegative && self.dimension >= 1
    }

    pub fn is_cicy(&self) -> bool {
        self.is_valid() && self.dimension == 3 && self.calabi_yau
    }
}

impl ConfigurationMatrix {
    pub fn new(dims: Vec<u32>, degrees: Vec<Vec<i64>>) -> Result<Self> {
        if dims.len() != degrees.len() {
            return Err(Error::InvalidConfiguration(format!(
                "{} factor dimensions but {} degree rows",
                dims.len(),
                degrees.len()
            )));
        }
        let ambient = AmbientSpace::new(dims)?;
        let m = degrees[0].len();
        if m == 0 {
            return Err(Error::NoColumns);
        }
        for (row, r) in degrees.iter().enumerate() {
            if r.len() != m {
                return Err(Error::RaggedRow {
                    row,
                    expected: m,
                    got: r.len(),
                });
            }
        }
        Ok(ConfigurationMatrix { ambient, degrees })
    }

    /// Builds a matrix from `(n_i, row_i)` pairs.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[(u32, R)]) -> Result<Self> {
        Self::new(
            rows.iter().map(|(n, _)| *n).collect(),
            rows.iter().map(|(_, r)| r.as_ref().to_vec()).collect(),
        )
    }

    /// The terminal configuration: four `[1 || 2]` rows sharing one column.
    pub fn c1111() -> Self {
        Self::new(vec![1; 4], vec![vec![2]; 4]).expect("well-formed")
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn dims(&self) -> &[u32] {
        self.ambient.factors()
    }

    pub fn num_rows(&self) -> usize {
        self.degrees.len()
    }

    pub fn num_cols(&self) -> usize {
        self.degrees[0].len()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.degrees[row][col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.degrees[row]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn column(&self, col: usize) -> MultiDegree {
        MultiDegree(self.degrees.iter().map(|r| r[col]).collect())
    }

    pub fn columns(&self) -> Vec<MultiDegree> {
        (0..self.num_cols()).map(|j| self.column(j)).collect()
    }

    /// `d = sum_i n_i - m`.
    pub fn dimension(&self) -> i64 {
        self.ambient.dimension() as i64 - self.num_cols() as i64
    }

    fn nonnegative(&self) -> bool {
        self.degrees.iter().flatten().all(|&q| q >= 0)
    }

    fn column_sum(&self, col: usize) -> i64 {
        self.degrees.iter().map(|r| r[col]).sum()
    }

    fn normalized(&self) -> bool {
        (0..self.num_cols()).all(|j| self.column_sum(j) >= 2)
    }

    fn calabi_yau_rows(&self) -> bool {
        self.degrees
            .iter()
            .zip(self.dims())
            .all(|(r, &n)| r.iter().sum::<i64>() == n as i64 + 1)
    }

    pub fn validate(&self) -> ValidationReport {
        let blocks = self.blocks();
        let forbidden_block = blocks.iter().any(|(rows, cols)| {
            rows.len() == 1
                && cols.len() == 1
                && self.dims()[rows[0]] == 1
                && self.degrees[rows[0]][cols[0]] == 2
        });
        ValidationReport {
            dimension: self.dimension(),
            nonnegative: self.nonnegative(),
            normalized: self.normalized(),
            calabi_yau: self.calabi_yau_rows(),
            block_diagonal: blocks.len() > 1,
            forbidden_block,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.nonnegative() && self.dimension() >= 1
    }

    pub(crate) fn ensure_valid(&self) -> Result<()> {
        if !self.nonnegative() {
            return Err(Error::InvalidConfiguration("negative degree entry".into()));
        }
        if self.dimension() < 1 {
            return Err(Error::InvalidConfiguration(format!(
                "dimension {} is below 1",
                self.dimension()
            )));
        }
        Ok(())
    }

    /// Valid, three-dimensional, and satisfying the Calabi-Yau row sums.
    pub fn is_cicy(&self) -> bool {
        self.is_valid() && self.dimension() == 3 && self.calabi_yau_rows()
    }

    /// Connected components of the row/column incidence graph (edge iff
    /// `q^i_j > 0`), as sorted `(rows, columns)` pairs.
    pub fn blocks(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let k = self.num_rows();
        let m = self.num_cols();
        // nodes 0..k are rows, k..k+m are columns
        let mut component = vec![usize::MAX; k + m];
        let mut blocks = Vec::new();
        for start in 0..k + m {
            if component[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            let mut stack = vec![start];
            component[start] = id;
            let (mut rows, mut cols) = (Vec::new(), Vec::new());
            while let Some(node) = stack.pop() {
                let neighbours: Vec<usize> = if node < k {
                    rows.push(node);
                    (0..m)
                        .filter(|&j| self.degrees[node][j] > 0)
                        .map(|j| k + j)
                        .collect()
                } else {
                    cols.push(node - k);
                    (0..k).filter(|&i| self.degrees[i][node - k] > 0).collect()
                };
                for next in neighbours {
                    if component[next] == usize::MAX {
                        component[next] = id;
                        stack.push(next);
                    }
                }
            }
            rows.sort_unstable();
            cols.sort_unstable();
            blocks.push((rows, cols));
        }
        blocks
    }

    pub fn is_block_diagonal(&self) -> bool {
        self.blocks().len() > 1
    }

    /// Removes columns of sum 1: a hyperplane of a single factor `P^n` is a
    /// `P^{n-1}`. Factors reduced to a point disappear. Preserves `d`.
    pub fn normalize(&self) -> Result<Self> {
        let mut dims: Vec<u32> = self.dims().to_vec();
        let mut rows = self.degrees.clone();
        loop {
            let m = rows.first().map_or(0, Vec::len);
            let hit = (0..m).find_map(|j| {
                let sum: i64 = rows.iter().map(|r| r[j]).sum();
                if sum != 1 {
                    return None;
                }
                rows.iter().position(|r| r[j] == 1).map(|i| (i, j))
            });
            let Some((i, j)) = hit else { break };
            for r in rows.iter_mut() {
                r.remove(j);
            }
            dims[i] -= 1;
            if dims[i] == 0 {
                dims.remove(i);
                rows.remove(i);
            }
            if rows.is_empty() || rows[0].is_empty() {
                return Err(Error::Annihilated);
            }
        }
        Self::new(dims, rows)
    }

    /// Reorders rows and columns: row `t` of the result is row `rows[t]`.
    pub fn permuted(&self, rows: &[usize], cols: &[usize]) -> Self {
        let dims = rows.iter().map(|&i| self.dims()[i]).collect();
        let degrees = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.degrees[i][j]).collect())
            .collect();
        Self::new(dims, degrees).expect("permutation of a well-formed matrix")
    }
}

/// One line per factor: `n | q_1 q_2 ... q_m`.
impl fmt::Display for ConfigurationMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, row)) in self.dims().iter().zip(&self.degrees).enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} |", n)?;
            for q in row {
                write!(f, " {}", q)?;
            }
        }
        Ok(())
    }
}
