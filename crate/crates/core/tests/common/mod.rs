#![allow(dead_code)]

//! Brute-force oracles built only on `Poset::leq`, plus random posets.

use std::collections::BTreeSet;

use ics_core::{IntervalClosedSet, Poset, Subset};
use rand::seq::SliceRandom;
use rand::Rng;

/// Definition check: x, y ∈ S and x ≤ z ≤ y force z ∈ S.
pub fn oracle_closed(p: &Poset, s: &Subset) -> bool {
    let members: Vec<usize> = s.iter().collect();
    for &x in &members {
        for &y in &members {
            if !p.leq(x, y) {
                continue;
            }
            for z in 0..p.len() {
                if p.leq(x, z) && p.leq(z, y) && !s.contains(z) {
                    return false;
                }
            }
        }
    }
    true
}

/// Every interval-closed subset, as sorted element lists, by filtering all
/// `2^n` subsets.
pub fn oracle_ics(p: &Poset) -> BTreeSet<Vec<usize>> {
    assert!(p.len() <= 16);
    (0u32..1 << p.len())
        .map(|mask| {
            p.subset((0..p.len()).filter(|&x| mask >> x & 1 == 1))
                .unwrap()
        })
        .filter(|s| oracle_closed(p, s))
        .map(|s| s.to_vec())
        .collect()
}

pub fn oracle_toggle(p: &Poset, s: &Subset, x: usize) -> Subset {
    let mut t = s.clone();
    t.flip(x);
    if oracle_closed(p, &t) {
        t
    } else {
        s.clone()
    }
}

/// Rowmotion by oracle toggles along `ext` reversed.
pub fn oracle_rowmotion(p: &Poset, s: &Subset, ext: &[usize]) -> Subset {
    ext.iter()
        .rev()
        .fold(s.clone(), |acc, &x| oracle_toggle(p, &acc, x))
}

/// Uniformly chosen available element at each step.
pub fn random_linear_extension<R: Rng>(p: &Poset, rng: &mut R) -> Vec<usize> {
    let n = p.len();
    let mut placed = vec![false; n];
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let ready: Vec<usize> = (0..n)
            .filter(|&x| !placed[x] && (0..n).all(|y| y == x || !p.leq(y, x) || placed[y]))
            .collect();
        let &x = ready.choose(rng).unwrap();
        placed[x] = true;
        out.push(x);
    }
    out
}

/// Poset on `0..n` from a relation `i < j` for chosen pairs `i < j`,
/// closed transitively and then reduced to covers.
pub fn poset_from_pairs(n: usize, pairs: &[bool]) -> Poset {
    let mut lt = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            lt[i][j] = pairs.get(k).copied().unwrap_or(false);
            k += 1;
        }
    }
    for mid in 0..n {
        for i in 0..n {
            for j in 0..n {
                if lt[i][mid] && lt[mid][j] {
                    lt[i][j] = true;
                }
            }
        }
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt[i][j] && !(0..n).any(|m| lt[i][m] && lt[m][j]) {
                covers.push((i, j));
            }
        }
    }
    Poset::from_covers(n, covers, None).unwrap()
}

pub fn random_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Poset {
    let pairs: Vec<bool> = (0..n * (n.saturating_sub(1)) / 2)
        .map(|_| rng.gen_bool(density))
        .collect();
    poset_from_pairs(n, &pairs)
}

pub fn ics(p: &Poset, elements: &[usize]) -> IntervalClosedSet {
    IntervalClosedSet::from_elements(p, elements.iter().copied()).unwrap()
}
