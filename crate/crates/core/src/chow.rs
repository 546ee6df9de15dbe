//! Exact arithmetic in the Chow ring of a product of projective spaces.
//!
//! For `V = P^{n_1} x ... x P^{n_k}` the ring is `Z[s_1, ..., s_k] / (s_i^{n_i + 1})`,
//! where `s_i` is the pullback of the hyperplane class of the `i`-th factor.
//! Classes are stored sparsely, keyed by exponent vector, with every stored
//! coefficient nonzero and every exponent within the truncation box.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ambient `P^{n_1} x ... x P^{n_k}`, given by its factor dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AmbientSpace {
    factors: Vec<u32>,
}

impl AmbientSpace {
    pub fn new(factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() || factors.contains(&0) {
            return Err(Error::InvalidAmbient);
        }
        Ok(AmbientSpace { factors })
    }

    /// `P^n`.
    pub fn projective(n: u32) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    /// Number of projective factors `k`.
    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    pub fn dimension(&self) -> u32 {
        self.factors.iter().sum()
    }

    /// Number of monomials that survive truncation, `prod (n_i + 1)`.
    pub fn lattice_size(&self) -> usize {
        self.factors.iter().map(|&n| n as usize + 1).product()
    }

    /// Exponent vector of the class of a point.
    pub fn point_class(&self) -> Monomial {
        Monomial(self.factors.clone())
    }

    fn contains(&self, exps: &[u32]) -> bool {
        exps.len() == self.factors.len() && exps.iter().zip(&self.factors).all(|(e, n)| e <= n)
    }

    fn check_degree(&self, d: &MultiDegree) -> Result<()> {
        if d.len() != self.factors.len() {
            return Err(Error::DegreeLength {
                expected: self.factors.len(),
                got: d.len(),
            });
        }
        Ok(())
    }
}

/// A multidegree `(d_1, ..., d_k)`, i.e. the line bundle `O(d_1, ..., d_k)`.
/// Entries may be negative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn new(degrees: Vec<i64>) -> Self {
        MultiDegree(degrees)
    }

    pub fn zero(k: usize) -> Self {
        MultiDegree(vec![0; k])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl From<Vec<i64>> for MultiDegree {
    fn from(v: Vec<i64>) -> Self {
        MultiDegree(v)
    }
}

impl From<&[i64]> for MultiDegree {
    fn from(v: &[i64]) -> Self {
        MultiDegree(v.to_vec())
    }
}

/// Exponent vector of a monomial `s_1^{e_1} ... s_k^{e_k}`.
///
/// Ordered by total degree, then lexicographically with larger leading
/// exponents first, so `s1^2 < s1*s2 < s2^2` within degree two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of `A*(V)` with arbitrary-precision integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowClass {
    ambient: AmbientSpace,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ChowClass {
    pub fn zero(ambient: &AmbientSpace) -> Self {
        ChowClass {
            ambient: ambient.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: &AmbientSpace) -> Self {
        Self::constant(ambient, 1)
    }

    pub fn constant(ambient: &AmbientSpace, c: impl Into<BigInt>) -> Self {
        let mut class = Self::zero(ambient);
        class.add_term(Monomial(vec![0; ambient.num_factors()]), c.into());
        class
    }

    /// `c * s^exps`; zero when any exponent exceeds its factor dimension.
    pub fn term(ambient: &AmbientSpace, exps: &[u32], c: impl Into<BigInt>) -> Result<Self> {
        if exps.len() != ambient.num_factors() {
            return Err(Error::DegreeLength {
                expected: ambient.num_factors(),
                got: exps.len(),
            });
        }
        let mut class = Self::zero(ambient);
        if ambient.contains(exps) {
            class.add_term(Monomial(exps.to_vec()), c.into());
        }
        Ok(class)
    }

    /// The hyperplane class `s_i` (zero-based factor index).
    pub fn hyperplane(ambient: &AmbientSpace, i: usize) -> Self {
        let mut exps = vec![0; ambient.num_factors()];
        exps[i] = 1;
        let mut class = Self::zero(ambient);
        class.add_term(Monomial(exps), BigInt::one());
        class
    }

    /// First Chern class `sum_i d_i s_i` of `O(d)`.
    pub fn linear(ambient: &AmbientSpace, d: &MultiDegree) -> Result<Self> {
        ambient.check_degree(d)?;
        let mut class = Self::zero(ambient);
        for (i, &di) in d.as_slice().iter().enumerate() {
            let mut exps = vec![0; ambient.num_factors()];
            exps[i] = 1;
            class.add_term(Monomial(exps), BigInt::from(di));
        }
        Ok(class)
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.ambient.num_factors()])
    }

    /// Highest degree carrying a nonzero term, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The homogeneous component of degree `p`.
    pub fn graded_part(&self, p: u32) -> Self {
        ChowClass {
            ambient: self.ambient.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == p)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ambient);
        }
        ChowClass {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Ring product; monomials leaving the truncation box vanish.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = Self::zero(&self.ambient);
        let dims = self.ambient.factors();
        for (ma, ca) in &self.terms {
            'inner: for (mb, cb) in &other.terms {
                let mut exps = Vec::with_capacity(dims.len());
                for ((a, b), n) in ma.0.iter().zip(&mb.0).zip(dims) {
                    let e = a + b;
                    if e > *n {
                        continue 'inner;
                    }
                    exps.push(e);
                }
                out.add_term(Monomial(exps), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(&self.ambient);
        for _ in 0..exp {
            acc = acc.mul(self).expect("same ambient");
        }
        acc
    }

    /// Product with the first Chern class of `O(d)`, without building it.
    pub fn mul_linear(&self, d: &MultiDegree) -> Result<Self> {
        self.ambient.check_degree(d)?;
        let dims = self.ambient.factors();
        let mut out = Self::zero(&self.ambient);
        for (m, c) in &self.terms {
            for (i, &di) in d.as_slice().iter().enumerate() {
                if di == 0 || m.0[i] >= dims[i] {
                    continue;
                }
                let mut exps = m.0.clone();
                exps[i] += 1;
                out.add_term(Monomial(exps), c * di);
            }
        }
        Ok(out)
    }

    /// Product with `1 + c_1(O(d))`.
    pub fn mul_one_plus_linear(&self, d: &MultiDegree) -> Result<Self> {
        let shifted = self.mul_linear(d)?;
        self.add(&shifted)
    }

    /// Quotient by `1 + c_1(O(d))`, i.e. the product with
    /// `sum_i (-c_1(O(d)))^i`, computed degree by degree.
    pub fn div_one_plus_linear(&self, d: &MultiDegree) -> Result<Self> {
        self.ambient.check_degree(d)?;
        let top = self.ambient.dimension();
        let mut out = Self::zero(&self.ambient);
        let mut previous = Self::zero(&self.ambient);
        for p in 0..=top {
            // Z_p = W_p - D * Z_{p-1}
            let current = self.graded_part(p).sub(&previous.mul_linear(d)?)?;
            for (m, c) in &current.terms {
                out.add_term(m.clone(), c.clone());
            }
            previous = current;
        }
        Ok(out)
    }

    /// Degree of the zero-cycle part: the coefficient of the point class.
    pub fn integrate(&self) -> BigInt {
        self.terms
            .get(&self.ambient.point_class())
            .cloned()
            .unwrap_or_default()
    }

    /// `integrate(self * other)` without forming the full product.
    pub fn pairing(&self, other: &Self) -> Result<BigInt> {
        self.check_same(other)?;
        let dims = self.ambient.factors();
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let dual: Vec<u32> = m.0.iter().zip(dims).map(|(e, n)| n - e).collect();
            if let Some(d) = other.terms.get(&Monomial(dual)) {
                total += c * d;
            }
        }
        Ok(total)
    }
}

impl fmt::Debug for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChowClass({:?}: {})", self.ambient.factors(), self)
    }
}

/// Renders terms in graded order, e.g. `5*s1^2 + 4*s1*s2`.
impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(alloc::format!("s{}", i + 1)),
                    _ => factors.push(alloc::format!("s{}^{}", i + 1, e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Total Chern class `prod_j (1 + c_1(L_j))` of a direct sum of line bundles.
pub fn chern_of_sum(ambient: &AmbientSpace, bundles: &[MultiDegree]) -> Result<ChowClass> {
    let mut acc = ChowClass::one(ambient);
    for d in bundles {
        acc = acc.mul_one_plus_linear(d)?;
    }
    Ok(acc)
}

/// Top Chern class `prod_j c_1(L_j)` of a direct sum of line bundles.
pub fn top_chern_of_sum(ambient: &AmbientSpace, bundles: &[MultiDegree]) -> Result<ChowClass> {
    let mut acc = ChowClass::one(ambient);
    for d in bundles {
        acc = acc.mul_linear(d)?;
    }
    Ok(acc)
}

/// Inverse of a class with unit constant term, built degree by degree:
/// `s_0 = 1`, `s_p = -sum_{i=1}^{p} c_i s_{p-i}`.
pub fn segre_inverse(c: &ChowClass) -> Result<ChowClass> {
    let constant = c.constant_term();
    if !constant.is_one() {
        return Err(Error::NonUnitConstant(constant));
    }
    let ambient = c.ambient();
    let top = ambient.dimension();
    let pieces: Vec<ChowClass> = (0..=top).map(|p| c.graded_part(p)).collect();
    let mut inverse: Vec<ChowClass> = Vec::with_capacity(top as usize + 1);
    inverse.push(ChowClass::one(ambient));
    for p in 1..=top as usize {
        let mut acc = ChowClass::zero(ambient);
        for i in 1..=p {
            if pieces[i].is_zero() || inverse[p - i].is_zero() {
                continue;
            }
            acc = acc.add(&pieces[i].mul(&inverse[p - i])?)?;
        }
        inverse.push(acc.neg());
    }
    let mut out = ChowClass::zero(ambient);
    for piece in inverse {
        out = out.add(&piece)?;
    }
    Ok(out)
}

/// `c(T_V) = prod_i (1 + s_i)^{n_i + 1}` from the Euler sequence.
pub fn tangent_chern(ambient: &AmbientSpace) -> ChowClass {
    let dims = ambient.factors();
    let mut out = ChowClass::zero(ambient);
    let mut exps = vec![0u32; dims.len()];
    loop {
        let coeff = exps
            .iter()
            .zip(dims)
            .map(|(&e, &n)| binomial(n as u64 + 1, e as u64))
            .fold(BigInt::one(), |acc, b| acc * b);
        out.add_term(Monomial(exps.clone()), coeff);
        if !advance(&mut exps, dims) {
            break;
        }
    }
    out
}

/// `chi(P^{n_1} x ... x P^{n_k}, O(d))` via Kunneth and the binomial polynomial.
pub fn chi_line_bundle(ambient: &AmbientSpace, d: &MultiDegree) -> Result<BigInt> {
    ambient.check_degree(d)?;
    Ok(d.as_slice()
        .iter()
        .zip(ambient.factors())
        .map(|(&di, &n)| binomial_poly(&BigInt::from(di + n as i64), n))
        .fold(BigInt::one(), |acc, b| acc * b))
}

/// `C(a, n) = a (a-1) ... (a-n+1) / n!`, valid for every integer `a`.
pub fn binomial_poly(a: &BigInt, n: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial_poly(&BigInt::from(n), k as u32)
}

/// Odometer step through the box `0..=dims[i]`; false once exhausted.
pub(crate) fn advance(exps: &mut [u32], dims: &[u32]) -> bool {
    for i in (0..exps.len()).rev() {
        if exps[i] < dims[i] {
            exps[i] += 1;
            return true;
        }
        exps[i] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn amb(f: &[u32]) -> AmbientSpace {
        AmbientSpace::new(f.to_vec()).unwrap()
    }

    fn md(v: &[i64]) -> MultiDegree {
        MultiDegree::from(v)
    }

    #[test]
    fn rejects_bad_ambients() {
        assert_eq!(AmbientSpace::new(vec![]), Err(Error::InvalidAmbient));
        assert_eq!(AmbientSpace::new(vec![2, 0]), Err(Error::InvalidAmbient));
    }

    #[test]
    fn additive_identities() {
        let a = amb(&[4]);
        let s = ChowClass::hyperplane(&a, 0);
        assert!(s.add(&s.neg()).unwrap().is_zero());
        let s2 = s.pow(2);
        assert_eq!(s2.add(&ChowClass::zero(&a)).unwrap(), s2);

        let b = amb(&[3, 1]);
        let lhs = ChowClass::term(&b, &[2, 0], 5)
            .unwrap()
            .add(&ChowClass::term(&b, &[1, 1], 4).unwrap())
            .unwrap();
        let cancel = lhs.add(&ChowClass::term(&b, &[1, 1], -4).unwrap()).unwrap();
        assert_eq!(cancel, ChowClass::term(&b, &[2, 0], 5).unwrap());
        assert_eq!(cancel.num_terms(), 1);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let x = ChowClass::one(&amb(&[4]));
        let y = ChowClass::one(&amb(&[3, 1]));
        assert_eq!(x.add(&y), Err(Error::AmbientMismatch));
        assert_eq!(x.mul(&y), Err(Error::AmbientMismatch));
    }

    #[test]
    fn truncation_in_products() {
        let a = amb(&[4]);
        let s = ChowClass::hyperplane(&a, 0);
        assert!(s.mul(&s.pow(4)).unwrap().is_zero());

        let b = amb(&[3, 1]);
        let c2 = ChowClass::term(&b, &[2, 0], 5)
            .unwrap()
            .add(&ChowClass::term(&b, &[1, 1], 4).unwrap())
            .unwrap();
        // (5s^2 + 4st)^2 = 25 s^4 + 40 s^3 t + 16 s^2 t^2 = 40 s^3 t
        assert_eq!(c2.pow(2), ChowClass::term(&b, &[3, 1], 40).unwrap());

        let four_h2 = ChowClass::term(&a, &[2], 4).unwrap();
        assert_eq!(four_h2.pow(2), ChowClass::term(&a, &[4], 16).unwrap());
    }

    #[test]
    fn integration_reads_point_coefficient() {
        let a = amb(&[4]);
        assert_eq!(
            ChowClass::term(&a, &[4], 16).unwrap().integrate(),
            BigInt::from(16)
        );
        let b = amb(&[3, 1]);
        assert_eq!(
            ChowClass::term(&b, &[3, 1], 28).unwrap().integrate(),
            BigInt::from(28)
        );
        assert_eq!(ChowClass::zero(&b).integrate(), BigInt::zero());
        assert_eq!(
            ChowClass::term(&b, &[3, 0], 7).unwrap().integrate(),
            BigInt::zero()
        );
    }

    #[test]
    fn chern_classes_of_split_bundle() {
        let b = amb(&[3, 1]);
        let c = chern_of_sum(&b, &[md(&[1, 0]), md(&[1, 0]), md(&[2, 2])]).unwrap();
        assert_eq!(c.graded_part(1).to_string(), "4*s1 + 2*s2");
        assert_eq!(c.graded_part(2).to_string(), "5*s1^2 + 4*s1*s2");
        assert_eq!(c.graded_part(3).to_string(), "2*s1^3 + 2*s1^2*s2");
        assert_eq!(
            c.to_string(),
            "1 + 4*s1 + 2*s2 + 5*s1^2 + 4*s1*s2 + 2*s1^3 + 2*s1^2*s2"
        );

        assert_eq!(chern_of_sum(&b, &[]).unwrap(), ChowClass::one(&b));

        let a = amb(&[4]);
        assert_eq!(
            chern_of_sum(&a, &[md(&[4]), md(&[1])]).unwrap().to_string(),
            "1 + 5*s1 + 4*s1^2"
        );
        assert!(matches!(
            chern_of_sum(&a, &[md(&[1, 1])]),
            Err(Error::DegreeLength {
                expected: 1,
                got: 2
            })
        ));
    }

    #[test]
    fn segre_inverse_of_linear_class() {
        let a = amb(&[4]);
        assert_eq!(
            segre_inverse(&ChowClass::one(&a)).unwrap(),
            ChowClass::one(&a)
        );
        let c = chern_of_sum(&a, &[md(&[5])]).unwrap();
        let s = segre_inverse(&c).unwrap();
        assert_eq!(s.to_string(), "1 - 5*s1 + 25*s1^2 - 125*s1^3 + 625*s1^4");
        assert_eq!(c.mul(&s).unwrap(), ChowClass::one(&a));
        assert_eq!(
            ChowClass::one(&a).div_one_plus_linear(&md(&[5])).unwrap(),
            s
        );
    }

    #[test]
    fn segre_inverse_needs_unit_constant() {
        let a = amb(&[2]);
        let c = ChowClass::constant(&a, 2);
        assert_eq!(
            segre_inverse(&c),
            Err(Error::NonUnitConstant(BigInt::from(2)))
        );
    }

    #[test]
    fn tangent_classes() {
        assert_eq!(tangent_chern(&amb(&[1])).to_string(), "1 + 2*s1");
        assert_eq!(
            tangent_chern(&amb(&[4])).to_string(),
            "1 + 5*s1 + 10*s1^2 + 10*s1^3 + 5*s1^4"
        );
        let p1_4 = amb(&[1, 1, 1, 1]);
        let mut expected = ChowClass::one(&p1_4);
        for i in 0..4 {
            let two_t = ChowClass::hyperplane(&p1_4, i).scale(&BigInt::from(2));
            expected = expected
                .mul(&ChowClass::one(&p1_4).add(&two_t).unwrap())
                .unwrap();
        }
        assert_eq!(tangent_chern(&p1_4), expected);
    }

    #[test]
    fn line_bundle_euler_characteristics() {
        let p4 = amb(&[4]);
        assert_eq!(chi_line_bundle(&p4, &md(&[0])).unwrap(), BigInt::one());
        assert_eq!(chi_line_bundle(&p4, &md(&[-1])).unwrap(), BigInt::zero());
        assert_eq!(chi_line_bundle(&p4, &md(&[-5])).unwrap(), BigInt::one());
        assert_eq!(chi_line_bundle(&p4, &md(&[1])).unwrap(), BigInt::from(5));
        // Serre duality on P^2 x P^1: chi(O(-3,-2)) = -chi(O) = -1
        assert_eq!(
            chi_line_bundle(&amb(&[2, 1]), &md(&[-3, -2])).unwrap(),
            -BigInt::one()
        );
    }

    #[test]
    fn rendering_handles_signs_and_unit_coefficients() {
        let b = amb(&[2, 2]);
        let x = ChowClass::term(&b, &[1, 0], -1)
            .unwrap()
            .add(&ChowClass::term(&b, &[1, 1], 1).unwrap())
            .unwrap()
            .add(&ChowClass::constant(&b, -3))
            .unwrap();
        assert_eq!(x.to_string(), "-3 - s1 + s1*s2");
        assert_eq!(ChowClass::zero(&b).to_string(), "0");
    }

    #[test]
    fn pairing_matches_product_integral() {
        let b = amb(&[2, 1]);
        let x = chern_of_sum(&b, &[md(&[1, 1]), md(&[2, 0])]).unwrap();
        let y = tangent_chern(&b);
        assert_eq!(x.pairing(&y).unwrap(), x.mul(&y).unwrap().integrate());
    }
}
