//! Topological and cohomological invariants of general members.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::chow::{chi_line_bundle, top_chern_of_sum, AmbientSpace, MultiDegree};
use crate::config::ConfigurationMatrix;
use crate::error::{Error, Result};

/// `h^{1,1}` and `h^{2,1}` of a Calabi-Yau threefold; `e = 2 (h11 - h21)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HodgePair {
    pub h11: u64,
    pub h21: u64,
}

impl HodgePair {
    pub fn euler(&self) -> i64 {
        2 * (self.h11 as i64 - self.h21 as i64)
    }
}

/// Euler number of a general smooth member of any dimension `d`:
/// `integral_V c(T_V) s(E) c_m(E)`, with `E` the sum of the column bundles.
///
/// Only the degree-`d` part of `c(T_V) s(E)` meets the degree-`m` class
/// `c_m(E)` in the top degree, so the product is formed whole and its point
/// coefficient read off. `s(E)` is applied as a division by each
/// `1 + c_1(L_j)` in turn.
pub fn euler_number(cfg: &ConfigurationMatrix) -> Result<BigInt> {
    cfg.ensure_valid()?;
    let ambient = cfg.ambient();
    let columns = cfg.columns();
    let mut class = top_chern_of_sum(ambient, &columns)?;
    for (i, &n) in ambient.factors().iter().enumerate() {
        let mut unit = MultiDegree::zero(ambient.num_factors());
        unit.0[i] = 1;
        for _ in 0..=n {
            class = class.mul_one_plus_linear(&unit)?;
        }
    }
    for d in &columns {
        class = class.div_one_plus_linear(d)?;
    }
    Ok(class.integrate())
}

/// Second Betti number of a general member.
///
/// The Lefschetz sequence for the divisors `D_j` cut out by the columns is
/// exact in degree 2, so its alternating sum vanishes:
/// `b2(X) = (-1)^{m+1} (b2(V) + sum_{r=1}^{m-1} (-1)^r sum_{|J|=r} b2(D_J))`
/// with `b2(V) = k`. Each `D_J` splits as `D'_J x prod P^{n_l}` over the
/// rows where every column of `J` vanishes, and `b2(D'_J)` recurses. Surfaces
/// use `b2 = e - 2`; curves and points have no rule and are rejected.
pub fn betti2(cfg: &ConfigurationMatrix) -> Result<i64> {
    cfg.ensure_valid()?;
    if cfg.is_block_diagonal() {
        return Err(Error::BlockDiagonal);
    }
    let dims = cfg.dims().to_vec();
    let cols: Vec<Vec<i64>> = cfg.columns().into_iter().map(|c| c.0).collect();
    let mut memo = BTreeMap::new();
    piece_betti2(&dims, &cols, &mut memo)
}

type PieceKey = (Vec<u32>, Vec<Vec<i64>>);

fn piece_betti2(
    dims: &[u32],
    cols: &[Vec<i64>],
    memo: &mut BTreeMap<PieceKey, i64>,
) -> Result<i64> {
    if cols.is_empty() {
        return Ok(dims.len() as i64);
    }
    let dimension = dims.iter().sum::<u32>() as i64 - cols.len() as i64;
    if dimension <= 1 {
        return Err(Error::UnsupportedBaseCase { dimension });
    }
    let mut sorted = cols.to_vec();
    sorted.sort();
    let key = (dims.to_vec(), sorted);
    if let Some(&b) = memo.get(&key) {
        return Ok(b);
    }

    let b2 = if dimension == 2 {
        let rows: Vec<Vec<i64>> = (0..dims.len())
            .map(|i| cols.iter().map(|c| c[i]).collect())
            .collect();
        let surface = ConfigurationMatrix::new(dims.to_vec(), rows)?;
        to_i64(&(euler_number(&surface)? - 2))?
    } else {
        let r = cols.len();
        let mut sum = dims.len() as i64;
        for mask in 1u64..(1u64 << r) - 1 {
            let chosen: Vec<&Vec<i64>> = (0..r)
                .filter(|&j| mask >> j & 1 == 1)
                .map(|j| &cols[j])
                .collect();
            let kept: Vec<usize> = (0..dims.len())
                .filter(|&i| chosen.iter().any(|c| c[i] != 0))
                .collect();
            let sub_dims: Vec<u32> = kept.iter().map(|&i| dims[i]).collect();
            let sub_cols: Vec<Vec<i64>> = chosen
                .iter()
                .map(|c| kept.iter().map(|&i| c[i]).collect())
                .collect();
            let factored = (dims.len() - kept.len()) as i64;
            let b = piece_betti2(&sub_dims, &sub_cols, memo)? + factored;
            if chosen.len() % 2 == 1 {
                sum -= b;
            } else {
                sum += b;
            }
        }
        if r % 2 == 1 {
            sum
        } else {
            -sum
        }
    };
    memo.insert(key, b2);
    Ok(b2)
}

fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or_else(|| Error::OutOfRange(v.clone()))
}

/// Hodge numbers from `h11 = b2` and `h21 = h11 - e/2`.
pub fn hodge_numbers(cfg: &ConfigurationMatrix) -> Result<HodgePair> {
    if !cfg.is_cicy() {
        return Err(Error::NotCicy);
    }
    let h11 = betti2(cfg)?;
    let e = euler_number(cfg)?;
    if e.is_odd() {
        return Err(Error::OddEuler(e));
    }
    let h21: BigInt = BigInt::from(h11) - &e / 2;
    let h11 = u64::try_from(h11).map_err(|_| Error::OutOfRange(BigInt::from(h11)))?;
    let h21 = h21.to_u64().ok_or_else(|| Error::OutOfRange(h21.clone()))?;
    Ok(HodgePair { h11, h21 })
}

/// `l -> chi(O_X(l))` for a polarization `O(p_1, ..., p_k)`, stored with
/// exact rational coefficients in ascending powers of `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomial {
    coefficients: Vec<BigRational>,
    polarization: MultiDegree,
}

impl HilbertPolynomial {
    /// Ascending coefficients, trailing zeros trimmed.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn polarization(&self) -> &MultiDegree {
        &self.polarization
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn evaluate(&self, l: &BigRational) -> BigRational {
        self.coefficients
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * l + c)
    }

    pub fn value_at(&self, l: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(l)))
    }
}

/// Descending powers, e.g. `(5/6)*l^3 + (25/6)*l`.
impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let number: String = if abs.is_integer() {
                format!("{}", abs.numer())
            } else {
                format!("({}/{})", abs.numer(), abs.denom())
            };
            match p {
                0 => f.write_str(&number)?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{}*", number)?;
                    }
                    if p == 1 {
                        f.write_str("l")?;
                    } else {
                        write!(f, "l^{}", p)?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `chi(O_X(l)) = sum_{S} (-1)^{|S|} chi(O_V(l p - sum_{j in S} q_j))`, the
/// Koszul resolution summed over all column subsets, interpolated from the
/// values at `l = 0..=d`.
pub fn hilbert_polynomial(
    cfg: &ConfigurationMatrix,
    polarization: &MultiDegree,
) -> Result<HilbertPolynomial> {
    cfg.ensure_valid()?;
    let ambient = cfg.ambient();
    if polarization.len() != ambient.num_factors() {
        return Err(Error::DegreeLength {
            expected: ambient.num_factors(),
            got: polarization.len(),
        });
    }
    if polarization.as_slice().iter().any(|&p| p < 1) {
        return Err(Error::NotAmple);
    }
    let d = cfg.dimension() as usize;
    let values = (0..=d as i64)
        .map(|l| koszul_chi(cfg, polarization, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(HilbertPolynomial {
        coefficients: interpolate(&values),
        polarization: polarization.clone(),
    })
}

/// `chi(O_X(l))` directly from the Koszul complex.
pub fn koszul_chi(cfg: &ConfigurationMatrix, polarization: &MultiDegree, l: i64) -> Result<BigInt> {
    let ambient = cfg.ambient();
    let columns = cfg.columns();
    let m = columns.len();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << m) {
        let mut twist: Vec<i64> = polarization.as_slice().iter().map(|p| p * l).collect();
        for (j, col) in columns.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for (t, q) in twist.iter_mut().zip(col.as_slice()) {
                    *t -= q;
                }
            }
        }
        let chi = chi_line_bundle(ambient, &MultiDegree(twist))?;
        if mask.count_ones() % 2 == 1 {
            total -= chi;
        } else {
            total += chi;
        }
    }
    Ok(total)
}

/// Monomial coefficients of the polynomial taking `values[i]` at `l = i`,
/// via forward differences and `C(l, k) = l (l-1) ... (l-k+1) / k!`.
fn interpolate(values: &[BigInt]) -> Vec<BigRational> {
    let n = values.len();
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut leading: Vec<BigInt> = Vec::with_capacity(n);
    for _ in 0..n {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut coefficients = vec![BigRational::zero(); n];
    // falling factorial l (l-1) ... (l-k+1), ascending coefficients
    let mut falling: Vec<BigInt> = vec![BigInt::one()];
    let mut factorial = BigInt::one();
    for (k, delta) in leading.iter().enumerate() {
        if k > 0 {
            factorial *= BigInt::from(k);
            let shift = BigInt::from(k as i64 - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (p, c) in falling.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &shift;
            }
            falling = next;
        }
        for (p, c) in falling.iter().enumerate() {
            coefficients[p] += BigRational::new(c * delta, factorial.clone());
        }
    }
    while coefficients.last().is_some_and(Zero::is_zero) {
        coefficients.pop();
    }
    coefficients
}

/// Number of points cut out by `dim V` general divisors: `integral prod c_1(L_j)`.
pub fn ci_point_count(ambient: &AmbientSpace, bundles: &[MultiDegree]) -> Result<BigInt> {
    let expected = ambient.dimension() as usize;
    if bundles.len() != expected {
        return Err(Error::PointCountMismatch {
            expected,
            got: bundles.len(),
        });
    }
    Ok(top_chern_of_sum(ambient, bundles)?.integrate())
}

/// Euler number of a double cover branched along a smooth divisor.
pub fn double_cover_euler(e_base: &BigInt, e_branch: &BigInt) -> BigInt {
    BigInt::from(2) * e_base - e_branch
}
