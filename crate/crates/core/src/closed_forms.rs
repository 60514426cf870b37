//! Closed-form counts and orbit-structure predictions, and the bijection
//! between order ideals of `[m]×[n−1]×[2]` and interval-closed sets of
//! `[m]×[n]` meeting every chain.
//!
//! Everything here is a formula. [`crate::verify`] compares each one with
//! enumeration.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ics::IntervalClosedSet;
use crate::poset::Poset;
use crate::stats::Rational;
use crate::subset::Subset;

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn pow2_minus(a: usize, minus: u128) -> Result<u128> {
    if a >= 127 {
        return Err(Error::InvalidParameter(format!(
            "antichain size {a} is too large"
        )));
    }
    Ok((1u128 << a) - minus)
}

/// |IC([n])| = C(n,2) + n + 1.
pub fn ics_count_chain(n: u64) -> Result<u128> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    Ok(binomial(n, 2) + n as u128 + 1)
}

/// Orbit sizes with multiplicities, and the resulting rowmotion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructurePrediction {
    /// size → number of orbits of that size (zero entries omitted).
    pub multiplicities: BTreeMap<usize, u128>,
}

impl OrbitStructurePrediction {
    fn from_pairs(pairs: impl IntoIterator<Item = (usize, u128)>) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (size, count) in pairs {
            if count > 0 {
                *multiplicities.entry(size).or_insert(0) += count;
            }
        }
        OrbitStructurePrediction { multiplicities }
    }

    /// Σ size × multiplicity.
    pub fn total(&self) -> u128 {
        self.multiplicities
            .iter()
            .map(|(&s, &c)| s as u128 * c)
            .sum()
    }

    /// lcm of the sizes that actually occur.
    pub fn order(&self) -> u64 {
        self.multiplicities
            .keys()
            .fold(1u64, |acc, &s| acc.lcm(&(s as u64)))
    }

    pub fn histogram(&self) -> Vec<(usize, u128)> {
        self.multiplicities.iter().map(|(&s, &c)| (s, c)).collect()
    }
}

/// Orbits of rowmotion on IC([n]): {∅, [n]}, ⌊(n−1)/2⌋ orbits of size
/// n+2, and for even n one orbit of size (n+2)/2.
pub fn chain_orbit_structure(n: usize) -> Result<OrbitStructurePrediction> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let mut pairs = vec![(2, 1), (n + 2, ((n - 1) / 2) as u128)];
    if n.is_multiple_of(2) {
        pairs.push(((n + 2) / 2, 1));
    }
    Ok(OrbitStructurePrediction::from_pairs(pairs))
}

fn check_layers(a: &[usize]) -> Result<()> {
    if a.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if a.contains(&0) {
        return Err(Error::InvalidParameter(
            "layer sizes must be at least 1".into(),
        ));
    }
    Ok(())
}

/// |IC(a_1 ⊕ … ⊕ a_k)| = 1 + Σ(2^{a_i} − 1) + Σ_{i<j}(2^{a_i} − 1)(2^{a_j} − 1).
pub fn ics_count_ordinal_sum(a: &[usize]) -> Result<u128> {
    check_layers(a)?;
    let t = a
        .iter()
        .map(|&x| pow2_minus(x, 1))
        .collect::<Result<Vec<_>>>()?;
    let mut total = 1 + t.iter().sum::<u128>();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            total += t[i] * t[j];
        }
    }
    Ok(total)
}

/// Orbit structure on IC(a_1 ⊕ … ⊕ a_k).
///
/// With at most two layers every subset is interval-closed and rowmotion is
/// complementation, so all orbits have size 2. From three layers on:
/// `1 + ½Σ_{i<j}(2^{a_i}−2)(2^{a_j}−2)` orbits of size 2, ⌊(k−1)/2⌋ of size
/// k+2, one of size (k+2)/2 when k is even, and either Σ(2^{a_i−1}−1) of
/// size 2k (k odd) or Σ(2^{a_i}−2) of size k (k even).
pub fn ordinal_sum_orbit_structure(a: &[usize]) -> Result<OrbitStructurePrediction> {
    check_layers(a)?;
    let k = a.len();
    if k <= 2 {
        let n: usize = a.iter().sum();
        return Ok(OrbitStructurePrediction::from_pairs([(
            2,
            pow2_minus(n - 1, 0)?,
        )]));
    }
    let t = a
        .iter()
        .map(|&x| pow2_minus(x, 2))
        .collect::<Result<Vec<_>>>()?;
    let mut pairs = 0u128;
    for i in 0..k {
        for j in i + 1..k {
            pairs += t[i] * t[j];
        }
    }
    let mut out = vec![(2, 1 + pairs / 2), (k + 2, ((k - 1) / 2) as u128)];
    if k.is_multiple_of(2) {
        out.push(((k + 2) / 2, 1));
        out.push((k, t.iter().sum()));
    } else {
        let halves = a
            .iter()
            .map(|&x| pow2_minus(x - 1, 1))
            .collect::<Result<Vec<_>>>()?;
        out.push((2 * k, halves.iter().sum()));
    }
    Ok(OrbitStructurePrediction::from_pairs(out))
}

/// The order as stated for k ≥ 3 layers: 2k(k+2) for odd k, k(k+2)/2 for
/// even k. It agrees with [`OrbitStructurePrediction::order`] whenever some
/// layer has at least two elements; for chains the size-k or size-2k orbits
/// are absent and the true order is smaller.
pub fn ordinal_sum_stated_order(k: usize) -> u64 {
    let k = k as u64;
    if k % 2 == 1 {
        2 * k * (k + 2)
    } else {
        k * (k + 2) / 2
    }
}

fn check_stacked(n: usize, m: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "stacked diamonds need an odd number of summands >= 3 and m >= 2, got ({n}, {m})"
        )));
    }
    Ok(())
}

/// |IC(D(n,m))| in its specialised form
/// `(8+(n+1)(n+3))/8 + (n−1)(n+3)/4·(2^m−1) + (n−3)(n−1)/8·(2^m−1)²`.
pub fn ics_count_stacked_diamond(n: usize, m: usize) -> Result<u128> {
    check_stacked(n, m)?;
    let (n, t) = (n as u128, pow2_minus(m, 1)?);
    let eightfold = 8 + (n + 1) * (n + 3) + 2 * (n - 1) * (n + 3) * t + (n - 3) * (n - 1) * t * t;
    Ok(eightfold / 8)
}

/// D(n,m) orbits in specialised form: `1 + (n−3)(n−1)/8·(2^{m−1}−1)(2^m−2)`
/// of size 2, (n−1)/2 of size n+2, and (n−1)/2·(2^{m−1}−1) of size 2n.
pub fn stacked_diamond_orbit_structure(n: usize, m: usize) -> Result<OrbitStructurePrediction> {
    check_stacked(n, m)?;
    let (h, t) = (pow2_minus(m - 1, 1)?, pow2_minus(m, 2)?);
    let nn = n as u128;
    Ok(OrbitStructurePrediction::from_pairs([
        (2, 1 + (nn - 3) * (nn - 1) * h * t / 8),
        (n + 2, (nn - 1) / 2),
        (2 * n, (nn - 1) / 2 * h),
    ]))
}

fn check_repeated(n: usize, m: usize) -> Result<()> {
    if n < 3 || m < 2 {
        return Err(Error::InvalidParameter(format!(
            "repeated antichain sums need n >= 3 and m >= 2, got ({n}, {m})"
        )));
    }
    Ok(())
}

/// |IC(⊕ⁿ m)| = 1 + n(2^m−1) + C(n,2)(2^m−1)².
pub fn ics_count_repeated(n: usize, m: usize) -> Result<u128> {
    check_repeated(n, m)?;
    let t = pow2_minus(m, 1)?;
    Ok(1 + n as u128 * t + binomial(n as u64, 2) * t * t)
}

/// Orbits on IC(⊕ⁿ m) in specialised form.
pub fn repeated_orbit_structure(n: usize, m: usize) -> Result<OrbitStructurePrediction> {
    check_repeated(n, m)?;
    let t = pow2_minus(m, 2)?;
    let nn = n as u128;
    let mut pairs = vec![
        (2, 1 + binomial(n as u64, 2) * t * t / 2),
        (n + 2, (nn - 1) / 2),
    ];
    if n.is_multiple_of(2) {
        pairs.push(((n + 2) / 2, 1));
        pairs.push((n, nn * t));
    } else {
        pairs.push((2 * n, nn * pow2_minus(m - 1, 1)?));
    }
    Ok(OrbitStructurePrediction::from_pairs(pairs))
}

/// |IC([2]×[n])| = 1 + 2(C(n,2)+n) + (n+1)/2·C(n+2,3).
pub fn ics_count_2xn(n: u64) -> Result<u128> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    Ok(1 + 2 * (binomial(n, 2) + n as u128) + (n as u128 + 1) * binomial(n + 2, 3) / 2)
}

/// N(j,k) = (1/k)·C(j,k−1)·C(j−1,k−1).
pub fn narayana(j: u64, k: u64) -> Result<u128> {
    if k == 0 || j < k {
        return Err(Error::InvalidParameter(format!(
            "Narayana numbers need 1 <= k <= j, got N({j},{k})"
        )));
    }
    Ok(binomial(j, k - 1) * binomial(j - 1, k - 1) / k as u128)
}

/// Interval-closed sets of [m]×[n] meeting every chain {a}×[n]:
/// N(m+n, n).
pub fn count_full_support(m: u64, n: u64) -> Result<u128> {
    if m == 0 || n < 2 {
        return Err(Error::InvalidParameter(format!(
            "need m >= 1 and n >= 2, got ({m}, {n})"
        )));
    }
    narayana(m + n, n)
}

/// Whether `i ⊆ [m]×[n]` (index `a·n + b`) meets every chain.
pub fn has_full_support(i: &Subset, m: usize, n: usize) -> bool {
    (0..m).all(|a| (0..n).any(|b| i.contains(a * n + b)))
}

/// Average cardinality on each orbit of IC([n]), as `(average, size)` in
/// increasing size: n/2 on {∅,[n]}, (2k(n−k)+n)/(n+2) on the orbit of
/// [1,k] for 1 ≤ k < n/2, and n/2 on the half-size orbit when n is even.
pub fn chain_cardinality_averages(n: usize) -> Result<Vec<(Rational, usize)>> {
    if n == 0 {
        return Err(Error::EmptyPoset);
    }
    let n_i = n as i64;
    let mut out = vec![(Rational::new(n_i, 2), 2)];
    if n.is_multiple_of(2) {
        out.push((Rational::new(n_i, 2), (n + 2) / 2));
    }
    for k in 1..=((n - 1) / 2) {
        let k = k as i64;
        out.push((Rational::new(2 * k * (n_i - k) + n_i, n_i + 2), n + 2));
    }
    Ok(out)
}

/// Golden counts |IC([m]×[n])| for 1 ≤ m ≤ 5, 1 ≤ n ≤ 8.
pub const TABLE1: [[u64; 8]; 5] = [
    [2, 4, 7, 11, 16, 22, 29, 37],
    [4, 13, 33, 71, 136, 239, 393, 613],
    [7, 33, 114, 321, 781, 1702, 3403, 6349],
    [11, 71, 321, 1146, 3449, 9115, 21743, 47737],
    [16, 136, 781, 3449, 12578, 39614, 111063, 283243],
];

pub fn table1_golden(m: usize, n: usize) -> Option<u64> {
    if (1..=5).contains(&m) && (1..=8).contains(&n) {
        Some(TABLE1[m - 1][n - 1])
    } else {
        None
    }
}

/// ψ and ψ⁻¹ between order ideals of `[m]×[n−1]×[2]` and interval-closed
/// sets of `[m]×[n]` with an element in every chain `{a}×[n]`.
///
/// Coordinates in the public helpers are 1-based tuples. For each chain `a`
/// let `c_a` (resp. `b_a`) be the largest `x` with `(a,x,1) ∈ J` (resp.
/// `(a,x,2) ∈ J`), or 0 when there is none. Then
/// `ψ(J) = Δ{(a, c_a+1)} − Δ{(a, b_a) : b_a > 0}`, i.e. the rows
/// `b_a < x ≤ c_a + 1` of each chain.
#[derive(Debug, Clone)]
pub struct NarayanaBijection {
    m: usize,
    n: usize,
    grid: Poset,
    cube: Poset,
}

impl NarayanaBijection {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n < 2 {
            return Err(Error::InvalidParameter(format!(
                "need m >= 1 and n >= 2, got ({m}, {n})"
            )));
        }
        let grid = Poset::product(&Poset::chain(m)?, &Poset::chain(n)?)?;
        let cube = Poset::product_of(&[Poset::chain(m)?, Poset::chain(n - 1)?, Poset::chain(2)?])?;
        Ok(NarayanaBijection { m, n, grid, cube })
    }

    /// `[m]×[n]`.
    pub fn grid(&self) -> &Poset {
        &self.grid
    }

    /// `[m]×[n−1]×[2]`.
    pub fn cube(&self) -> &Poset {
        &self.cube
    }

    /// Index of `(a, b)` in the grid, 1-based coordinates.
    pub fn grid_index(&self, a: usize, b: usize) -> Result<usize> {
        if !(1..=self.m).contains(&a) || !(1..=self.n).contains(&b) {
            return Err(Error::InvalidParameter(format!(
                "({a},{b}) is not in the grid"
            )));
        }
        Ok((a - 1) * self.n + (b - 1))
    }

    /// Index of `(a, x, d)` in the cube, 1-based coordinates.
    pub fn cube_index(&self, a: usize, x: usize, d: usize) -> Result<usize> {
        if !(1..=self.m).contains(&a) || !(1..self.n).contains(&x) || !(1..=2).contains(&d) {
            return Err(Error::InvalidParameter(format!(
                "({a},{x},{d}) is not in the cube"
            )));
        }
        Ok(((a - 1) * (self.n - 1) + (x - 1)) * 2 + (d - 1))
    }

    pub fn grid_tuples(&self, s: &Subset) -> Vec<(usize, usize)> {
        s.iter().map(|i| (i / self.n + 1, i % self.n + 1)).collect()
    }

    pub fn cube_tuples(&self, s: &Subset) -> Vec<(usize, usize, usize)> {
        s.iter()
            .map(|i| {
                let (ax, d) = (i / 2, i % 2);
                (ax / (self.n - 1) + 1, ax % (self.n - 1) + 1, d + 1)
            })
            .collect()
    }

    pub fn grid_set(&self, tuples: &[(usize, usize)]) -> Result<Subset> {
        let idx = tuples
            .iter()
            .map(|&(a, b)| self.grid_index(a, b))
            .collect::<Result<Vec<_>>>()?;
        self.grid.subset(idx)
    }

    pub fn cube_set(&self, tuples: &[(usize, usize, usize)]) -> Result<Subset> {
        let idx = tuples
            .iter()
            .map(|&(a, x, d)| self.cube_index(a, x, d))
            .collect::<Result<Vec<_>>>()?;
        self.cube.subset(idx)
    }

    /// Largest `x` with `(a, x, d) ∈ j`, 0 if none.
    fn contour(&self, j: &Subset, a: usize, d: usize) -> usize {
        (1..self.n)
            .rev()
            .find(|&x| j.contains(self.cube_index(a, x, d).expect("in range")))
            .unwrap_or(0)
    }

    pub fn psi(&self, j: &Subset) -> Result<IntervalClosedSet> {
        self.cube.check(j)?;
        if !self.cube.is_order_ideal(j) {
            return Err(Error::NotAnIdeal);
        }
        let mut tops = Vec::new();
        let mut floors = Vec::new();
        for a in 1..=self.m {
            tops.push((a, self.contour(j, a, 1) + 1));
            let b = self.contour(j, a, 2);
            if b > 0 {
                floors.push((a, b));
            }
        }
        let upper = self.grid.down_closure(&self.grid_set(&tops)?);
        let lower = self.grid.down_closure(&self.grid_set(&floors)?);
        Ok(IntervalClosedSet::new_unchecked(upper.difference(&lower)))
    }

    /// `Δ({(a, x−1, 1) : (a,x) ∈ Max(I)} ∪ {(a, y, 2) : (a,y) ∈ Floor(I)})`,
    /// where a maximal element in the bottom row contributes nothing.
    pub fn psi_inverse(&self, i: &IntervalClosedSet) -> Result<Subset> {
        self.grid.check(i)?;
        if let Some(a) = (0..self.m).find(|&a| (0..self.n).all(|b| !i.contains(a * self.n + b))) {
            return Err(Error::MissingChainSupport(a + 1));
        }
        let max = self.grid.max_of(i);
        let floor = crate::ics::floor(&self.grid, i)?;
        let mut generators = Vec::new();
        for (a, x) in self.grid_tuples(&max) {
            if x >= 2 {
                generators.push((a, x - 1, 1));
            }
        }
        for (a, y) in self.grid_tuples(&floor) {
            generators.push((a, y, 2));
        }
        Ok(self.cube.down_closure(&self.cube_set(&generators)?))
    }
}
