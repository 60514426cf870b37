//! Cyclic sieving checks for rowmotion, evaluated exactly.
//!
//! For a statistic `s`, let `f(q) = Σ_I q^{s(I)}` and let `N` be the order
//! of rowmotion. The triple exhibits cyclic sieving when, for every `d`,
//! the number of sets fixed by `Row^d` equals `f(ω^d)` with `ω` a primitive
//! `N`-th root of unity. `f(ω^d)` is `F(ω)` for `F(x) = Σ c_k x^{kd mod N}`,
//! and `F(ω) = c` holds exactly when `Φ_N(x)` divides `F(x) − c`.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::rowmotion::{orbit_decomposition, OrbitDecomposition};
use crate::stats::Statistic;

/// Integer polynomial, coefficient of `x^k` at index `k`.
pub type Poly = Vec<i128>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Remainder of `a` modulo the monic polynomial `m`.
pub fn rem_monic(a: &[i128], m: &[i128]) -> Poly {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    debug_assert_eq!(m[dm], 1);
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (k, &c) in m.iter().enumerate() {
                r[shift + k] -= lead * c;
            }
        }
        r.pop();
    }
    trim(r)
}

/// Exact quotient of `a` by the monic polynomial `m` (remainder must be 0).
fn div_monic(a: &[i128], m: &[i128]) -> Poly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0; r.len().saturating_sub(dm)];
    while r.len() > dm {
        let lead = r[r.len() - 1];
        let shift = r.len() - 1 - dm;
        q[shift] = lead;
        for (k, &c) in m.iter().enumerate() {
            r[shift + k] -= lead * c;
        }
        r.pop();
    }
    debug_assert!(r.iter().all(|&c| c == 0));
    q
}

/// The `n`-th cyclotomic polynomial, from `x^n − 1 = Π_{d | n} Φ_d(x)`.
pub fn cyclotomic(n: u64) -> Poly {
    assert!(n >= 1);
    let mut p: Poly = vec![0; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = div_monic(&p, &cyclotomic(d));
        }
    }
    p
}

/// Whether `f(ω^d) = value` for `ω` a primitive `n`-th root of unity.
pub fn evaluates_to(f: &[i128], n: u64, d: u64, value: i128) -> bool {
    let mut folded: Poly = vec![0; n as usize];
    for (k, &c) in f.iter().enumerate() {
        folded[((k as u128 * d as u128) % n as u128) as usize] += c;
    }
    folded[0] -= value;
    rem_monic(&folded, &cyclotomic(n)).is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspVerdict {
    pub holds: bool,
    /// Smallest `d` in `0..order` where the counts disagree.
    pub failing_d: Option<u64>,
    pub order: u64,
    /// `f` as coefficients of `q^0, q^1, …`.
    pub generating_function: Vec<i128>,
    /// Sets fixed by `Row^d` for `d = 0..order`.
    pub fixed_points: Vec<u64>,
}

impl CspVerdict {
    pub fn to_json_value(&self) -> Value {
        json!({
            "holds": self.holds,
            "failing_d": self.failing_d,
            "order": self.order,
            "generating_function": self.generating_function.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "fixed_points": self.fixed_points,
        })
    }
}

/// Largest rowmotion order the check will expand; `Row^d` is examined for
/// every `d` below it.
pub const MAX_ORDER: u64 = 1 << 14;

fn checked_order(decomposition: &OrbitDecomposition) -> Result<u64> {
    match decomposition.order_u64() {
        Some(n) if n <= MAX_ORDER => Ok(n),
        _ => Err(Error::InvalidParameter(format!(
            "rowmotion order {} exceeds the cyclic sieving limit {MAX_ORDER}",
            decomposition.order
        ))),
    }
}

/// Fixed-point counts of `Row^d`: a set is fixed iff its orbit size divides `d`.
pub fn fixed_point_counts(decomposition: &OrbitDecomposition) -> Result<Vec<u64>> {
    Ok((0..checked_order(decomposition)?)
        .map(|d| {
            decomposition
                .orbits
                .iter()
                .filter(|o| d % o.len() as u64 == 0)
                .map(|o| o.len() as u64)
                .sum()
        })
        .collect())
}

pub fn csp_check_for(
    p: &Poset,
    decomposition: &OrbitDecomposition,
    stat: Statistic,
) -> Result<CspVerdict> {
    let order = checked_order(decomposition)?;
    let mut f: Poly = Vec::new();
    for orbit in &decomposition.orbits {
        for i in orbit.members() {
            let v = stat.evaluate(p, i)?;
            if v < 0 {
                return Err(Error::NegativeStatistic {
                    stat: stat.id(),
                    value: v,
                });
            }
            let v = v as usize;
            if f.len() <= v {
                f.resize(v + 1, 0);
            }
            f[v] += 1;
        }
    }
    let fixed_points = fixed_point_counts(decomposition)?;
    let failing_d =
        (0..order).find(|&d| !evaluates_to(&f, order, d, fixed_points[d as usize] as i128));
    Ok(CspVerdict {
        holds: failing_d.is_none(),
        failing_d,
        order,
        generating_function: f,
        fixed_points,
    })
}

pub fn csp_check(p: &Poset, stat: Statistic) -> Result<CspVerdict> {
    csp_check_for(p, &orbit_decomposition(p)?, stat)
}
