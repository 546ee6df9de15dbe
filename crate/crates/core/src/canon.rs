//! Canonical forms of configuration matrices under row and column permutations.
//!
//! The canonical form is the lexicographic minimum, over all row and column
//! orders, of the row-major serialization `k, m, n_1, q_1.., n_2, q_2.., ...`.
//! Rows are fixed one at a time: given the rows already placed, the columns
//! form an ordered partition (columns with equal values on those rows), and
//! the smallest possible next row is any remaining row with its entries
//! sorted inside each cell. Ties branch. Branches are pruned by bounding
//! against the best serialization found so far, by identical rows, and by
//! automorphisms discovered from repeated leaves.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::config::ConfigurationMatrix;

/// Total-order key identifying a configuration up to row/column permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    fn from_serialization(words: &[i64]) -> Self {
        let mut bytes = Vec::with_capacity(words.len() * 8);
        for &w in words {
            // sign-flipped big endian keeps the numeric order bytewise
            bytes.extend_from_slice(&((w as u64) ^ (1 << 63)).to_be_bytes());
        }
        CanonicalKey(bytes)
    }
}

/// Parses the lowercase or uppercase hex form produced by `Display`.
impl core::str::FromStr for CanonicalKey {
    type Err = ParseKeyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !s.len().is_multiple_of(2) {
            return Err(ParseKeyError);
        }
        (0..s.len())
            .step_by(2)
            .map(|i| {
                s.get(i..i + 2)
                    .and_then(|b| u8::from_str_radix(b, 16).ok())
                    .ok_or(ParseKeyError)
            })
            .collect::<Result<Vec<u8>, _>>()
            .map(CanonicalKey)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseKeyError;

impl fmt::Display for ParseKeyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("canonical key is not a hex string")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{:02x}", b)?;
        }
        Ok(())
    }
}

impl ConfigurationMatrix {
    pub fn canonical_key(&self) -> CanonicalKey {
        let (rows, cols) = canonical_order(self);
        CanonicalKey::from_serialization(&serialize(self, &rows, &cols))
    }

    /// The representative whose serialization is the canonical key.
    pub fn canonical_form(&self) -> ConfigurationMatrix {
        let (rows, cols) = canonical_order(self);
        self.permuted(&rows, &cols)
    }

    pub fn is_equivalent(&self, other: &ConfigurationMatrix) -> bool {
        self.num_rows() == other.num_rows()
            && self.num_cols() == other.num_cols()
            && self.canonical_key() == other.canonical_key()
    }
}

/// Index maps `(rows, cols)` with `to.entry(rows[i], cols[j]) == from.entry(i, j)`
/// and matching dimensions, when the two matrices are equivalent.
pub(crate) fn correspondence(
    from: &ConfigurationMatrix,
    to: &ConfigurationMatrix,
) -> Option<(Vec<usize>, Vec<usize>)> {
    if from.num_rows() != to.num_rows() || from.num_cols() != to.num_cols() {
        return None;
    }
    let (fr, fc) = canonical_order(from);
    let (tr, tc) = canonical_order(to);
    if serialize(from, &fr, &fc) != serialize(to, &tr, &tc) {
        return None;
    }
    let mut rows = vec![0; fr.len()];
    for (t, &i) in fr.iter().enumerate() {
        rows[i] = tr[t];
    }
    let mut cols = vec![0; fc.len()];
    for (t, &j) in fc.iter().enumerate() {
        cols[j] = tc[t];
    }
    Some((rows, cols))
}

fn serialize(cfg: &ConfigurationMatrix, rows: &[usize], cols: &[usize]) -> Vec<i64> {
    let mut out = Vec::with_capacity(2 + rows.len() * (cols.len() + 1));
    out.push(cfg.num_rows() as i64);
    out.push(cfg.num_cols() as i64);
    for &i in rows {
        out.push(cfg.dims()[i] as i64);
        out.extend(cols.iter().map(|&j| cfg.entry(i, j)));
    }
    out
}

fn canonical_order(cfg: &ConfigurationMatrix) -> (Vec<usize>, Vec<usize>) {
    let mut search = Search {
        cfg,
        best: None,
        automorphisms: Vec::new(),
    };
    let cells = vec![(0..cfg.num_cols()).collect::<Vec<_>>()];
    let remaining: Vec<usize> = (0..cfg.num_rows()).collect();
    let mut prefix = Vec::new();
    let header = vec![cfg.num_rows() as i64, cfg.num_cols() as i64];
    search.descend(&mut prefix, &cells, &remaining, header);
    let best = search.best.expect("at least one row");
    (best.rows, best.cols)
}

struct Leaf {
    words: Vec<i64>,
    rows: Vec<usize>,
    cols: Vec<usize>,
}

struct Search<'a> {
    cfg: &'a ConfigurationMatrix,
    best: Option<Leaf>,
    /// Row parts of automorphisms found so far, as `image[row]`.
    automorphisms: Vec<Vec<usize>>,
}

enum Flow {
    Continue,
    /// Unwind to the node at this depth and try its next candidate.
    BackTo(usize),
}

impl Search<'_> {
    fn row_string(&self, row: usize, cells: &[Vec<usize>]) -> Vec<i64> {
        let mut s = Vec::with_capacity(self.cfg.num_cols() + 1);
        s.push(self.cfg.dims()[row] as i64);
        for cell in cells {
            let start = s.len();
            s.extend(cell.iter().map(|&j| self.cfg.entry(row, j)));
            s[start..].sort_unstable();
        }
        s
    }

    fn refine(&self, row: usize, cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut out = Vec::with_capacity(cells.len());
        for cell in cells {
            let mut sorted = cell.clone();
            sorted.sort_by_key(|&j| (self.cfg.entry(row, j), j));
            let mut start = 0;
            for t in 1..=sorted.len() {
                if t == sorted.len()
                    || self.cfg.entry(row, sorted[t]) != self.cfg.entry(row, sorted[start])
                {
                    out.push(sorted[start..t].to_vec());
                    start = t;
                }
            }
        }
        out
    }

    fn descend(
        &mut self,
        prefix: &mut Vec<usize>,
        cells: &[Vec<usize>],
        remaining: &[usize],
        words: Vec<i64>,
    ) -> Flow {
        if remaining.is_empty() {
            return self.leaf(prefix, cells, words);
        }
        let strings: Vec<(usize, Vec<i64>)> = remaining
            .iter()
            .map(|&r| (r, self.row_string(r, cells)))
            .collect();
        let min = strings
            .iter()
            .map(|(_, s)| s)
            .min()
            .expect("nonempty")
            .clone();

        let mut extended = words;
        extended.extend_from_slice(&min);
        if let Some(best) = &self.best {
            if extended.as_slice() > &best.words[..extended.len()] {
                return Flow::Continue;
            }
        }

        // identical rows are interchangeable; keep the first of each class
        let mut candidates: Vec<usize> = Vec::new();
        for (r, s) in &strings {
            if s != &min {
                continue;
            }
            if candidates.iter().any(|&c| {
                self.cfg.row(c) == self.cfg.row(*r) && self.cfg.dims()[c] == self.cfg.dims()[*r]
            }) {
                continue;
            }
            candidates.push(*r);
        }

        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for &u in &candidates {
            if !explored.is_empty() && self.in_explored_orbit(prefix, &explored, u) {
                continue;
            }
            explored.push(u);
            prefix.push(u);
            let next_cells = self.refine(u, cells);
            let rest: Vec<usize> = remaining.iter().copied().filter(|&r| r != u).collect();
            let flow = self.descend(prefix, &next_cells, &rest, extended.clone());
            prefix.pop();
            if let Flow::BackTo(target) = flow {
                if target < depth {
                    return flow;
                }
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self, prefix: &[usize], cells: &[Vec<usize>], words: Vec<i64>) -> Flow {
        let cols: Vec<usize> = cells.iter().flatten().copied().collect();
        let Some(best) = &self.best else {
            self.best = Some(Leaf {
                words,
                rows: prefix.to_vec(),
                cols,
            });
            return Flow::Continue;
        };
        match words.cmp(&best.words) {
            Ordering::Less => {
                self.best = Some(Leaf {
                    words,
                    rows: prefix.to_vec(),
                    cols,
                });
                Flow::Continue
            }
            Ordering::Greater => Flow::Continue,
            Ordering::Equal => {
                let mut image = vec![0; prefix.len()];
                for (a, b) in best.rows.iter().zip(prefix) {
                    image[*a] = *b;
                }
                let diverge = best
                    .rows
                    .iter()
                    .zip(prefix)
                    .position(|(a, b)| a != b)
                    .unwrap_or(prefix.len());
                if diverge < prefix.len() {
                    self.automorphisms.push(image);
                }
                Flow::BackTo(diverge)
            }
        }
    }

    /// Whether `u` is the image of an explored sibling under an automorphism
    /// fixing the current prefix pointwise.
    fn in_explored_orbit(&self, prefix: &[usize], explored: &[usize], u: usize) -> bool {
        let n = self.cfg.num_rows();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, u);
        explored.iter().any(|&v| find(&mut parent, v) == root)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(rows: &[(u32, &[i64])]) -> ConfigurationMatrix {
        ConfigurationMatrix::from_rows(rows).unwrap()
    }

    /// Minimum over every row and column permutation; tiny matrices only.
    fn brute_force_min(c: &ConfigurationMatrix) -> Vec<i64> {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let mut best: Option<Vec<i64>> = None;
        for r in perms(c.num_rows()) {
            for s in perms(c.num_cols()) {
                let w = serialize(c, &r, &s);
                if best.as_ref().is_none_or(|b| &w < b) {
                    best = Some(w);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn matches_brute_force_on_small_matrices() {
        let samples = [
            cfg(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])]),
            cfg(&[
                (4, &[3, 1, 1, 0, 0]),
                (2, &[0, 1, 0, 1, 1]),
                (2, &[0, 0, 1, 1, 1]),
            ]),
            cfg(&[
                (4, &[2, 1, 1, 1]),
                (1, &[1, 1, 0, 0]),
                (1, &[1, 0, 1, 0]),
                (1, &[1, 0, 0, 1]),
            ]),
            cfg(&[
                (1, &[1, 1, 0]),
                (1, &[0, 1, 1]),
                (1, &[1, 0, 1]),
                (2, &[1, 1, 1]),
            ]),
            ConfigurationMatrix::c1111(),
        ];
        for c in &samples {
            let expected = CanonicalKey::from_serialization(&brute_force_min(c));
            assert_eq!(c.canonical_key(), expected, "{}", c);
        }
    }

    #[test]
    fn key_hex_round_trip() {
        let c = cfg(&[(4, &[4, 1]), (1, &[1, 1])]);
        let key = c.canonical_key();
        assert_eq!(key.to_string().parse::<CanonicalKey>(), Ok(key));
        assert!("abc".parse::<CanonicalKey>().is_err());
        assert!("zz".parse::<CanonicalKey>().is_err());
    }

    #[test]
    fn different_ambients_differ() {
        let a = cfg(&[(1, &[2]), (1, &[2])]);
        let b = cfg(&[(2, &[3])]);
        assert_ne!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn permutations_share_a_key() {
        let c = cfg(&[(2, &[1, 1, 1]), (3, &[1, 1, 2]), (1, &[0, 0, 2])]);
        let p = c.permuted(&[2, 0, 1], &[1, 2, 0]);
        assert_eq!(c.canonical_key(), p.canonical_key());
        assert_eq!(c.canonical_form(), p.canonical_form());
        assert!(c.is_equivalent(&p));
    }

    #[test]
    fn canonical_form_serializes_to_key() {
        let c = cfg(&[
            (4, &[2, 1, 1, 1]),
            (1, &[1, 1, 0, 0]),
            (1, &[1, 0, 1, 0]),
            (1, &[1, 0, 0, 1]),
        ]);
        let f = c.canonical_form();
        let ident: Vec<usize> = (0..f.num_rows()).collect();
        let cols: Vec<usize> = (0..f.num_cols()).collect();
        assert_eq!(
            CanonicalKey::from_serialization(&serialize(&f, &ident, &cols)),
            c.canonical_key()
        );
    }

    #[test]
    fn symmetric_matrices_stay_fast() {
        // twelve P^1 rows each tying one shared column to a private one
        let mut rows: Vec<(u32, Vec<i64>)> = Vec::new();
        let mut big = vec![1i64; 13];
        big[0] = 1;
        for i in 0..12 {
            let mut r = vec![0i64; 13];
            r[0] = 1;
            r[i + 1] = 1;
            rows.push((1, r));
        }
        rows.push((12, big));
        let c = ConfigurationMatrix::from_rows(&rows).unwrap();
        let shuffled = c.permuted(
            &[3, 12, 0, 5, 7, 1, 2, 4, 6, 8, 9, 10, 11],
            &[12, 0, 3, 1, 2, 4, 5, 6, 7, 8, 9, 10, 11],
        );
        assert_eq!(c.canonical_key(), shuffled.canonical_key());
    }
}
