//! Interval-closed sets: validation, the (Max, Floor) antichain-pair
//! encoding, the auxiliary regions around a set, and enumeration.
//!
//! Enumeration walks pairs of antichains `(A, B)` with `B ⊆ Δ(A) − A` and
//! emits `Δ(A) − Δ(B)`. Every interval-closed set arises from exactly one
//! such pair, so no deduplication or subset filtering is needed.

use std::ops::Deref;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poset::Poset;
use crate::subset::Subset;

/// A subset `I` such that `x ≤ z ≤ y` with `x, y ∈ I` forces `z ∈ I`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalClosedSet(Subset);

impl IntervalClosedSet {
    pub fn new(p: &Poset, s: Subset) -> Result<Self> {
        if is_interval_closed(p, &s)? {
            Ok(IntervalClosedSet(s))
        } else {
            Err(Error::NotIntervalClosed(s.to_string()))
        }
    }

    pub fn from_elements(p: &Poset, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        IntervalClosedSet::new(p, p.subset(elements)?)
    }

    pub(crate) fn new_unchecked(s: Subset) -> Self {
        IntervalClosedSet(s)
    }

    pub fn empty(p: &Poset) -> Self {
        IntervalClosedSet(p.empty_subset())
    }

    pub fn full(p: &Poset) -> Self {
        IntervalClosedSet(p.full_subset())
    }

    pub fn as_subset(&self) -> &Subset {
        &self.0
    }

    pub fn into_subset(self) -> Subset {
        self.0
    }
}

impl Deref for IntervalClosedSet {
    type Target = Subset;

    fn deref(&self) -> &Subset {
        &self.0
    }
}

impl std::fmt::Debug for IntervalClosedSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ics{:?}", self.0)
    }
}

impl std::fmt::Display for IntervalClosedSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `I` is interval-closed iff nothing outside `I` lies both above and below
/// members of `I`, i.e. `Δ(I) ∩ ∇(I) ⊆ I`.
pub fn is_interval_closed(p: &Poset, s: &Subset) -> Result<bool> {
    p.check(s)?;
    Ok(interval_closed(p, s))
}

pub(crate) fn interval_closed(p: &Poset, s: &Subset) -> bool {
    let mut between = p.down_closure(s);
    between.intersect_with(&p.up_closure(s));
    between.is_subset(s)
}

/// `(Max(I), Floor(I))`: two disjoint antichains with the floor inside the
/// ideal generated by the maxima.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AntichainPair {
    pub max_part: Subset,
    pub floor_part: Subset,
}

/// Max(Δ(I) − I).
pub fn floor(p: &Poset, i: &IntervalClosedSet) -> Result<Subset> {
    p.check(i)?;
    Ok(p.max_of(&p.down_closure(i).difference(i)))
}

/// ⌈I⌉ = Min(∇(I) − I).
pub fn ceiling(p: &Poset, i: &IntervalClosedSet) -> Result<Subset> {
    p.check(i)?;
    Ok(p.min_of(&p.up_closure(i).difference(i)))
}

pub fn to_antichain_pair(p: &Poset, i: &IntervalClosedSet) -> Result<AntichainPair> {
    Ok(AntichainPair {
        max_part: p.max_of(i),
        floor_part: floor(p, i)?,
    })
}

/// `Δ(A) − Δ(B)`, after checking that `(A, B)` is a valid pair.
pub fn from_antichain_pair(p: &Poset, pair: &AntichainPair) -> Result<IntervalClosedSet> {
    let (a, b) = (&pair.max_part, &pair.floor_part);
    p.check(a)?;
    p.check(b)?;
    if !p.is_antichain(a) {
        return Err(Error::InvalidAntichainPair(format!(
            "max part {a} is not an antichain"
        )));
    }
    if !p.is_antichain(b) {
        return Err(Error::InvalidAntichainPair(format!(
            "floor part {b} is not an antichain"
        )));
    }
    if a.intersects(b) {
        return Err(Error::InvalidAntichainPair(format!(
            "parts {a} and {b} overlap"
        )));
    }
    let ideal = p.down_closure(a);
    if !b.is_subset(&ideal) {
        return Err(Error::InvalidAntichainPair(format!(
            "floor part {b} is not contained in the ideal generated by {a}"
        )));
    }
    Ok(IntervalClosedSet(ideal.difference(&p.down_closure(b))))
}

/// The regions of the poset determined by an interval-closed set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regions {
    /// Elements incomparable to every member.
    pub inc: Subset,
    /// Δ(I) ∪ ∇(I).
    pub comp: Subset,
    pub ceiling: Subset,
    /// Min(I) ∩ Δ(⌈I⌉).
    pub min_under_ceiling: Subset,
    pub floor: Subset,
}

pub fn regions(p: &Poset, i: &IntervalClosedSet) -> Result<Regions> {
    p.check(i)?;
    let down = p.down_closure(i);
    let up = p.up_closure(i);
    let comp = down.union(&up);
    let ceiling = p.min_of(&up.difference(i));
    let min_under_ceiling = p.min_of(i).intersection(&p.down_closure(&ceiling));
    Ok(Regions {
        inc: comp.complement(),
        comp,
        ceiling,
        min_under_ceiling,
        floor: p.max_of(&down.difference(i)),
    })
}

/// Output order for enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// Ascending mask value.
    #[default]
    Canonical,
    /// The order the antichain-pair search produces them (deterministic,
    /// but not sorted).
    Generation,
}

struct Incomparability(Vec<Subset>);

impl Incomparability {
    fn new(p: &Poset) -> Self {
        Incomparability(
            (0..p.len())
                .map(|x| p.down_set(x).union(p.up_set(x)).complement())
                .collect(),
        )
    }
}

fn antichains_from(
    inc: &Incomparability,
    candidates: &Subset,
    current: &mut Subset,
    f: &mut dyn FnMut(&Subset),
) {
    f(current);
    for x in candidates {
        let mut next = candidates.intersection(&inc.0[x]);
        next.clear_through(x);
        current.insert(x);
        antichains_from(inc, &next, current, f);
        current.remove(x);
    }
}

fn count_antichains_in(inc: &Incomparability, candidates: &Subset) -> u64 {
    let mut total = 1;
    for x in candidates {
        let mut next = candidates.intersection(&inc.0[x]);
        next.clear_through(x);
        total += count_antichains_in(inc, &next);
    }
    total
}

/// Calls `f` on every antichain contained in `within`, the empty one first.
pub fn visit_antichains(p: &Poset, within: &Subset, mut f: impl FnMut(&Subset)) -> Result<()> {
    p.check(within)?;
    let inc = Incomparability::new(p);
    antichains_from(&inc, within, &mut p.empty_subset(), &mut f);
    Ok(())
}

/// Antichains whose smallest element is `root` (`None` for the empty one).
fn antichains_rooted(p: &Poset, inc: &Incomparability, root: Option<usize>) -> Vec<Subset> {
    let mut out = Vec::new();
    match root {
        None => out.push(p.empty_subset()),
        Some(x) => {
            let mut candidates = inc.0[x].clone();
            candidates.clear_through(x);
            let mut current = p.empty_subset();
            current.insert(x);
            antichains_from(inc, &candidates, &mut current, &mut |a| out.push(a.clone()));
        }
    }
    out
}

fn roots(p: &Poset) -> Vec<Option<usize>> {
    std::iter::once(None)
        .chain((0..p.len()).map(Some))
        .collect()
}

fn ics_for_max(p: &Poset, inc: &Incomparability, a: &Subset, out: &mut dyn FnMut(Subset)) {
    let ideal = p.down_closure(a);
    let room = ideal.difference(a);
    antichains_from(inc, &room, &mut p.empty_subset(), &mut |b| {
        out(ideal.difference(&p.down_closure(b)));
    });
}

/// Streams every interval-closed set in generation order on the calling
/// thread.
pub fn visit_ics(p: &Poset, mut f: impl FnMut(IntervalClosedSet)) {
    let inc = Incomparability::new(p);
    antichains_from(&inc, &p.full_subset(), &mut p.empty_subset(), &mut |a| {
        ics_for_max(p, &inc, a, &mut |s| f(IntervalClosedSet(s)));
    });
}

/// All interval-closed sets, sorted by mask.
pub fn enumerate_ics(p: &Poset) -> Vec<IntervalClosedSet> {
    enumerate_ics_ordered(p, Order::Canonical)
}

/// All interval-closed sets. The search is split across rayon workers by
/// the smallest element of the maximal antichain; per-worker results are
/// concatenated in root order, so both orders are schedule-independent.
pub fn enumerate_ics_ordered(p: &Poset, order: Order) -> Vec<IntervalClosedSet> {
    let inc = Incomparability::new(p);
    let chunks: Vec<Vec<IntervalClosedSet>> = roots(p)
        .into_par_iter()
        .map(|root| {
            let mut out = Vec::new();
            for a in antichains_rooted(p, &inc, root) {
                ics_for_max(p, &inc, &a, &mut |s| out.push(IntervalClosedSet(s)));
            }
            out
        })
        .collect();
    let mut all: Vec<IntervalClosedSet> = chunks.into_iter().flatten().collect();
    if order == Order::Canonical {
        all.par_sort_unstable();
    }
    all
}

/// |IC(P)| without materializing the sets.
pub fn count_ics(p: &Poset) -> u64 {
    let inc = Incomparability::new(p);
    roots(p)
        .into_par_iter()
        .map(|root| {
            antichains_rooted(p, &inc, root)
                .iter()
                .map(|a| count_antichains_in(&inc, &p.down_closure(a).difference(a)))
                .sum::<u64>()
        })
        .sum()
}

/// All order ideals, sorted by mask.
pub fn enumerate_order_ideals(p: &Poset) -> Vec<Subset> {
    let mut ideals = Vec::new();
    let inc = Incomparability::new(p);
    antichains_from(&inc, &p.full_subset(), &mut p.empty_subset(), &mut |a| {
        ideals.push(p.down_closure(a));
    });
    ideals.sort_unstable();
    ideals
}
