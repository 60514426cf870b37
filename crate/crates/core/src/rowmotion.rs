//! Toggles and rowmotion on interval-closed sets, plus orbit machinery.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ics::{enumerate_ics, IntervalClosedSet};
use crate::poset::Poset;
use crate::subset::Subset;

/// Adding `x` (not in `s`) keeps `s` interval-closed iff no outsider sits
/// strictly between `x` and a member.
fn can_add(p: &Poset, s: &Subset, x: usize) -> bool {
    let outside = s.complement().without(x);
    let mut below_x = p.down_set(x).intersection(&outside);
    below_x.intersect_with(&p.up_closure(&s.intersection(p.down_set(x))));
    if !below_x.is_empty() {
        return false;
    }
    let mut above_x = p.up_set(x).intersection(&outside);
    above_x.intersect_with(&p.down_closure(&s.intersection(p.up_set(x))));
    above_x.is_empty()
}

/// Removing `x` (in `s`) keeps `s` interval-closed iff `x` is not strictly
/// between two members.
fn can_remove(p: &Poset, s: &Subset, x: usize) -> bool {
    let strictly_below = p.down_set(x).without(x);
    let strictly_above = p.up_set(x).without(x);
    !(strictly_below.intersects(s) && strictly_above.intersects(s))
}

fn toggle_raw(p: &Poset, s: &mut Subset, x: usize) {
    if s.contains(x) {
        if can_remove(p, s, x) {
            s.remove(x);
        }
    } else if can_add(p, s, x) {
        s.insert(x);
    }
}

/// `t_x`: flips `x` when the result is still interval-closed.
pub fn toggle(p: &Poset, i: &IntervalClosedSet, x: usize) -> Result<IntervalClosedSet> {
    p.check(i)?;
    p.check_element(x)?;
    let mut s = i.as_subset().clone();
    toggle_raw(p, &mut s, x);
    Ok(IntervalClosedSet::new_unchecked(s))
}

/// Rowmotion as the composition of toggles from the top of a linear
/// extension down. Uses [`Poset::linear_extension`] when `ext` is `None`.
pub fn rowmotion_toggles(
    p: &Poset,
    i: &IntervalClosedSet,
    ext: Option<&[usize]>,
) -> Result<IntervalClosedSet> {
    p.check(i)?;
    let default;
    let ext = match ext {
        Some(e) => {
            p.validate_linear_extension(e)?;
            e
        }
        None => {
            default = p.linear_extension();
            &default
        }
    };
    let mut s = i.as_subset().clone();
    for &x in ext.iter().rev() {
        toggle_raw(p, &mut s, x);
    }
    Ok(IntervalClosedSet::new_unchecked(s))
}

pub(crate) fn global_raw(p: &Poset, i: &Subset) -> Subset {
    let down = p.down_closure(i);
    let up = p.up_closure(i);
    let inc = down.union(&up).complement();
    let ceiling = p.min_of(&up.difference(i));
    let under_ceiling = p.down_closure(&ceiling);
    let near_ceiling = under_ceiling.union(&p.up_closure(&ceiling));

    // Inc(I) ∪ (Δ Inc_I(⌈I⌉) − (I ∪ Δ⌈I⌉)) ∪ (Δ⌈I⌉ − Δ(Min(I) ∩ Δ⌈I⌉))
    let mut middle = p.down_closure(&i.difference(&near_ceiling));
    middle.subtract(i);
    middle.subtract(&under_ceiling);
    let mut last = under_ceiling.clone();
    last.subtract(&p.down_closure(&p.min_of(i).intersection(&under_ceiling)));

    let mut row = inc;
    row.union_with(&middle);
    row.union_with(&last);
    row
}

/// Rowmotion from the global description in terms of incomparables, the
/// ceiling and the minimal elements under it. No toggling.
pub fn rowmotion_global(p: &Poset, i: &IntervalClosedSet) -> Result<IntervalClosedSet> {
    p.check(i)?;
    Ok(IntervalClosedSet::new_unchecked(global_raw(p, i)))
}

/// Rowmotion specialised to an ordinal sum of antichains `a_1 ⊕ … ⊕ a_k`.
#[derive(Debug, Clone)]
pub struct OrdinalSumRowmotion {
    layers: Vec<usize>,
    top: Subset,
}

impl OrdinalSumRowmotion {
    /// Fails unless `p` is exactly the constructor output for `layers`.
    pub fn new(p: &Poset, layers: &[usize]) -> Result<Self> {
        let expected = Poset::ordinal_sum_of_antichains(layers)
            .map_err(|_| Error::NotOrdinalSumOfAntichains(layers.to_vec()))?;
        if expected != *p {
            return Err(Error::NotOrdinalSumOfAntichains(layers.to_vec()));
        }
        let start = p.len() - layers[layers.len() - 1];
        let top = p.subset(start..p.len())?;
        Ok(OrdinalSumRowmotion {
            layers: layers.to_vec(),
            top,
        })
    }

    pub fn layers(&self) -> &[usize] {
        &self.layers
    }

    pub fn apply(&self, p: &Poset, i: &IntervalClosedSet) -> Result<IntervalClosedSet> {
        p.check(i)?;
        let s = i.as_subset();
        let out = if s.is_empty() || self.top.is_subset(s) || s.is_subset(&self.top) {
            s.complement()
        } else {
            let ceiling = p.min_of(&p.up_closure(s).difference(s));
            p.down_closure(&ceiling)
                .difference(&p.down_closure(&p.min_of(s)))
        };
        Ok(IntervalClosedSet::new_unchecked(out))
    }
}

/// One-shot form of [`OrdinalSumRowmotion`].
pub fn rowmotion_ordinal_sum(
    p: &Poset,
    layers: &[usize],
    i: &IntervalClosedSet,
) -> Result<IntervalClosedSet> {
    OrdinalSumRowmotion::new(p, layers)?.apply(p, i)
}

/// Row⁻¹, computed as rowmotion on the dual poset.
pub fn inverse_rowmotion(p: &Poset, i: &IntervalClosedSet) -> Result<IntervalClosedSet> {
    inverse_rowmotion_with(p, &p.dual(), i)
}

/// Same as [`inverse_rowmotion`] with a precomputed dual.
pub fn inverse_rowmotion_with(
    p: &Poset,
    dual: &Poset,
    i: &IntervalClosedSet,
) -> Result<IntervalClosedSet> {
    p.check(i)?;
    if dual.len() != p.len() {
        return Err(Error::ForeignSubset);
    }
    let there = dual.adopt(i)?;
    let back = p.adopt(&global_raw(dual, &there))?;
    Ok(IntervalClosedSet::new_unchecked(back))
}

/// A rowmotion cycle, rotated so the smallest member comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    members: Vec<IntervalClosedSet>,
}

impl Orbit {
    pub fn members(&self) -> &[IntervalClosedSet] {
        &self.members
    }

    pub fn representative(&self) -> &IntervalClosedSet {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "size": self.len(),
            "members": self.members.iter().map(|m| m.to_vec()).collect::<Vec<_>>(),
        })
    }
}

fn orbit_capped(p: &Poset, i: &Subset, cap: usize) -> Result<Orbit> {
    let mut members = vec![i.clone()];
    let mut next = global_raw(p, i);
    while next != *i {
        if members.len() >= cap {
            return Err(Error::OrbitOverflow(cap));
        }
        members.push(next.clone());
        next = global_raw(p, &next);
    }
    let start = (0..members.len()).min_by_key(|&k| &members[k]).unwrap_or(0);
    members.rotate_left(start);
    Ok(Orbit {
        members: members
            .into_iter()
            .map(IntervalClosedSet::new_unchecked)
            .collect(),
    })
}

/// The rowmotion orbit of `i`. Gives up after `|IC(P)|` steps, which can
/// only happen if rowmotion is not a bijection.
pub fn orbit_of(p: &Poset, i: &IntervalClosedSet) -> Result<Orbit> {
    p.check(i)?;
    let cap = usize::try_from(crate::ics::count_ics(p)).unwrap_or(usize::MAX);
    orbit_capped(p, i, cap)
}

/// All rowmotion orbits of IC(P).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    /// Sorted by (size, representative).
    pub orbits: Vec<Orbit>,
    pub total: usize,
    /// lcm of the orbit sizes; exact, since it outgrows `u64` already on
    /// `[4]×[5]`.
    pub order: BigUint,
}

/// JSON number when it fits in `u64`, decimal string otherwise.
pub fn order_json(order: &BigUint) -> Value {
    match order.to_u64() {
        Some(v) => json!(v),
        None => json!(order.to_string()),
    }
}

impl OrbitDecomposition {
    /// The order, when it fits in `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        self.order.to_u64()
    }

    /// `(size, multiplicity)` pairs in increasing size.
    pub fn size_histogram(&self) -> Vec<(usize, usize)> {
        let mut hist: Vec<(usize, usize)> = Vec::new();
        for o in &self.orbits {
            match hist.last_mut() {
                Some((size, count)) if *size == o.len() => *count += 1,
                _ => hist.push((o.len(), 1)),
            }
        }
        hist
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Orbit::len).collect()
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "order": order_json(&self.order),
            "total": self.total,
            "sizes": self.size_histogram().iter().map(|&(s, c)| json!([s, c])).collect::<Vec<_>>(),
        })
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "order": order_json(&self.order),
            "total": self.total,
            "orbits": self.orbits.iter().map(Orbit::to_json_value).collect::<Vec<_>>(),
        })
    }
}

/// The rowmotion permutation of IC(P) as indices into the canonical
/// enumeration `sets`.
pub fn rowmotion_map(p: &Poset, sets: &[IntervalClosedSet]) -> Result<Vec<usize>> {
    sets.par_iter()
        .map(|i| {
            let image = IntervalClosedSet::new_unchecked(global_raw(p, i));
            sets.binary_search(&image).map_err(|_| {
                Error::Malformed(format!("rowmotion image {image} of {i} is not enumerated"))
            })
        })
        .collect()
}

/// Orbit decomposition by sweeping the canonical enumeration. Each seed is
/// the smallest unvisited set, hence the smallest member of its orbit.
pub fn orbit_decomposition(p: &Poset) -> Result<OrbitDecomposition> {
    let sets = enumerate_ics(p);
    let map = rowmotion_map(p, &sets)?;
    decompose(sets, &map)
}

fn decompose(sets: Vec<IntervalClosedSet>, map: &[usize]) -> Result<OrbitDecomposition> {
    let total = sets.len();
    let mut visited = vec![false; total];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for seed in 0..total {
        if visited[seed] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut k = seed;
        while !visited[k] {
            visited[k] = true;
            cycle.push(k);
            k = map[k];
        }
        if k != seed {
            return Err(Error::Malformed(
                "rowmotion map is not a permutation".to_string(),
            ));
        }
        cycles.push(cycle);
    }
    // seeds ascend, so a stable sort by size yields (size, representative)
    cycles.sort_by_key(Vec::len);
    let order = cycles.iter().fold(BigUint::from(1u32), |acc, c| {
        acc.lcm(&BigUint::from(c.len()))
    });
    let orbits = cycles
        .into_iter()
        .map(|c| Orbit {
            members: c.into_iter().map(|k| sets[k].clone()).collect(),
        })
        .collect();
    Ok(OrbitDecomposition {
        orbits,
        total,
        order,
    })
}

/// Graphviz rendering of Row as a functional graph on IC(P).
pub fn rowmotion_graph_dot(p: &Poset, decomposition: &OrbitDecomposition) -> String {
    let mut out = String::from("digraph rowmotion {\n  node [shape=box];\n");
    let mut id = 0usize;
    for (k, orbit) in decomposition.orbits.iter().enumerate() {
        let _ = writeln!(
            out,
            "  subgraph cluster_{k} {{\n    label=\"size {}\";",
            orbit.len()
        );
        for member in orbit.members() {
            let names: Vec<String> = member.iter().map(|x| p.label(x)).collect();
            let _ = writeln!(
                out,
                "    s{} [label=\"{{{}}}\"];",
                id,
                names.join(",").replace('"', "\\\"")
            );
            id += 1;
        }
        out.push_str("  }\n");
    }
    let mut base = 0usize;
    for orbit in &decomposition.orbits {
        let size = orbit.len();
        for j in 0..size {
            let _ = writeln!(out, "  s{} -> s{};", base + j, base + (j + 1) % size);
        }
        base += size;
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{labelled, labels_of, worked_example, WORKED_EXAMPLE_SET};

    fn ics(p: &Poset, xs: &[usize]) -> IntervalClosedSet {
        IntervalClosedSet::from_elements(p, xs.iter().copied()).unwrap()
    }

    #[test]
    fn worked_example_rowmotion() {
        let p = worked_example();
        let i = IntervalClosedSet::new(&p, labelled(&p, &WORKED_EXAMPLE_SET)).unwrap();
        let want = vec![3, 4, 6, 7, 9, 10, 12, 13, 14, 15, 17, 18];
        assert_eq!(labels_of(&rowmotion_toggles(&p, &i, None).unwrap()), want);
        assert_eq!(labels_of(&rowmotion_global(&p, &i).unwrap()), want);
        let back = inverse_rowmotion(&p, &rowmotion_global(&p, &i).unwrap()).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn worked_example_toggles() {
        let p = worked_example();
        let i = IntervalClosedSet::new(&p, labelled(&p, &WORKED_EXAMPLE_SET)).unwrap();
        let t8 = toggle(&p, &i, 7).unwrap();
        assert_eq!(labels_of(&t8), vec![5, 9, 10, 11, 16]);
        assert_eq!(toggle(&p, &i, 8).unwrap(), i);
        assert_eq!(toggle(&p, &i, 9).unwrap(), i);
        assert!(matches!(
            toggle(&p, &i, 20),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn empty_and_full_swap() {
        let p = Poset::product(&Poset::chain(3).unwrap(), &Poset::chain(2).unwrap()).unwrap();
        let empty = IntervalClosedSet::empty(&p);
        let full = IntervalClosedSet::full(&p);
        assert_eq!(rowmotion_global(&p, &empty).unwrap(), full);
        assert_eq!(rowmotion_toggles(&p, &full, None).unwrap(), empty);
        assert_eq!(
            inverse_rowmotion(
                &Poset::chain(3).unwrap(),
                &IntervalClosedSet::empty(&Poset::chain(3).unwrap())
            )
            .unwrap()
            .len(),
            3
        );
    }

    #[test]
    fn antichain_rowmotion_is_complement() {
        let p = Poset::antichain(4).unwrap();
        for i in enumerate_ics(&p) {
            assert_eq!(*rowmotion_toggles(&p, &i, None).unwrap(), i.complement());
        }
    }

    #[test]
    fn ordinal_sum_cases() {
        let layers = [2, 4, 2, 4];
        let p = Poset::ordinal_sum_of_antichains(&layers).unwrap();
        let engine = OrdinalSumRowmotion::new(&p, &layers).unwrap();
        let top_two = ics(&p, &[8, 9]);
        assert_eq!(*engine.apply(&p, &top_two).unwrap(), top_two.complement());
        for i in enumerate_ics(&p) {
            assert_eq!(
                engine.apply(&p, &i).unwrap(),
                rowmotion_global(&p, &i).unwrap()
            );
        }
        let chain = Poset::chain(6).unwrap();
        // [1,2] ↦ [2,3] in 1-based interval notation
        let row = rowmotion_ordinal_sum(&chain, &[1; 6], &ics(&chain, &[0, 1])).unwrap();
        assert_eq!(row.to_vec(), vec![1, 2]);
        assert_eq!(
            OrdinalSumRowmotion::new(&p, &[2, 4, 4, 2]).unwrap_err(),
            Error::NotOrdinalSumOfAntichains(vec![2, 4, 4, 2])
        );
        assert!(
            OrdinalSumRowmotion::new(&Poset::stacked_diamond(3, 2).unwrap(), &[1, 2, 1]).is_ok()
        );
    }

    #[test]
    fn orbits_of_small_posets() {
        let c4 = Poset::chain(4).unwrap();
        assert_eq!(
            orbit_of(&c4, &IntervalClosedSet::empty(&c4)).unwrap().len(),
            2
        );
        assert_eq!(orbit_of(&c4, &ics(&c4, &[0])).unwrap().len(), 6);
        let d = orbit_decomposition(&c4).unwrap();
        assert_eq!(d.sizes(), vec![2, 3, 6]);
        assert_eq!(d.order_u64(), Some(6));
        assert_eq!(d.total, 11);

        let diamond = Poset::stacked_diamond(3, 2).unwrap();
        let d = orbit_decomposition(&diamond).unwrap();
        assert_eq!(d.sizes(), vec![2, 5, 6]);
        assert_eq!(orbit_of(&diamond, &ics(&diamond, &[1])).unwrap().len(), 6);
    }

    #[test]
    fn orbit_representative_is_smallest_and_cycle_is_consistent() {
        let p = Poset::ordinal_sum_of_antichains(&[2, 3, 1]).unwrap();
        for orbit in orbit_decomposition(&p).unwrap().orbits {
            let m = orbit.members();
            assert!(m.iter().all(|x| x >= orbit.representative()));
            for k in 0..m.len() {
                assert_eq!(rowmotion_global(&p, &m[k]).unwrap(), m[(k + 1) % m.len()]);
            }
        }
    }

    #[test]
    fn json_shapes() {
        let c2 = Poset::chain(2).unwrap();
        let d = orbit_decomposition(&c2).unwrap();
        assert_eq!(
            d.to_json_value().to_string(),
            r#"{"orbits":[{"members":[[],[0,1]],"size":2},{"members":[[0],[1]],"size":2}],"order":2,"total":4}"#
        );
        let dot = rowmotion_graph_dot(&c2, &d);
        assert!(dot.contains("s0 -> s1;") && dot.contains("s1 -> s0;"));
    }
}
