//! Finite posets on dense element indices `0..n`.
//!
//! A [`Poset`] is immutable once built. Construction caches the principal
//! ideal and principal filter of every element as bitmasks, so the order
//! relation, closures and extremal-element queries reduce to word-parallel
//! mask arithmetic.

use std::cmp::Reverse;
use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Practical ground-set cap for enumeration-heavy work. Masks themselves are
/// unbounded; this is a policy limit enforced by front ends.
pub const DEFAULT_MAX_ELEMENTS: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

#[derive(Clone)]
pub struct Poset {
    id: u64,
    n: usize,
    covers: Vec<(usize, usize)>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    below: Vec<Subset>,
    above: Vec<Subset>,
    ranks: Option<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Poset {
    /// Structural equality: same size and same cover relations. Labels and
    /// ranks are metadata and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers
    }
}

impl Eq for Poset {}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.covers)
            .finish()
    }
}

fn fingerprint(n: usize, covers: &[(usize, usize)]) -> u64 {
    let mut h = DefaultHasher::new();
    n.hash(&mut h);
    covers.hash(&mut h);
    h.finish()
}

impl Poset {
    /// Builds a poset from its cover relations `(a, b)` meaning `a ⋖ b`.
    ///
    /// The relation must be acyclic and transitively reduced. Duplicate
    /// pairs are ignored.
    pub fn from_covers(
        n: usize,
        covers: impl IntoIterator<Item = (usize, usize)>,
        labels: Option<Vec<String>>,
    ) -> Result<Poset> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut covers: Vec<(usize, usize)> = covers.into_iter().collect();
        covers.sort_unstable();
        covers.dedup();
        for &(a, b) in &covers {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, n });
                }
            }
            if a == b {
                return Err(Error::Cyclic(a, b));
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::Malformed(format!(
                    "{} labels for {} elements",
                    l.len(),
                    n
                )));
            }
        }

        let id = fingerprint(n, &covers);
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for &(a, b) in &covers {
            upper_covers[a].push(b);
            lower_covers[b].push(a);
        }

        let order = topological_order(n, &lower_covers, &upper_covers).ok_or_else(|| {
            // Any cover touching the unsorted remainder witnesses the cycle.
            let (a, b) = covers[0];
            Error::Cyclic(a, b)
        })?;

        let mut below: Vec<Subset> = (0..n).map(|_| Subset::empty_raw(id, n)).collect();
        for &x in &order {
            let mut s = Subset::empty_raw(id, n);
            s.insert(x);
            for &y in &lower_covers[x] {
                s.union_with(&below[y]);
            }
            below[x] = s;
        }
        for &(a, b) in &covers {
            for &c in &lower_covers[b] {
                if c != a && below[c].contains(a) {
                    return Err(Error::NotTransitivelyReduced(a, b));
                }
            }
        }
        let mut above: Vec<Subset> = (0..n).map(|_| Subset::empty_raw(id, n)).collect();
        for (y, down) in below.iter().enumerate() {
            for x in down {
                above[x].insert(y);
            }
        }

        let ranks = derive_ranks(n, &order, &lower_covers, &covers);
        Ok(Poset {
            id,
            n,
            covers,
            upper_covers,
            lower_covers,
            below,
            above,
            ranks,
            labels,
        })
    }

    /// Builds a poset from a partial order predicate by transitive reduction.
    #[cfg(test)]
    pub(crate) fn from_order(
        n: usize,
        leq: impl Fn(usize, usize) -> bool,
        labels: Option<Vec<String>>,
    ) -> Result<Poset> {
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == b || !leq(a, b) {
                    continue;
                }
                let implied = (0..n).any(|c| c != a && c != b && leq(a, c) && leq(c, b));
                if !implied {
                    covers.push((a, b));
                }
            }
        }
        Poset::from_covers(n, covers, labels)
    }

    /// Chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Result<Poset> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        Poset::from_covers(n, (1..n).map(|i| (i - 1, i)), None)
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Result<Poset> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        Poset::from_covers(n, std::iter::empty(), None)
    }

    /// Ordinal sum `P₁ ⊕ P₂ ⊕ …`: every element of an earlier part lies
    /// below every element of a later part. Elements are numbered part by
    /// part and labelled `(part, local)` with 1-based coordinates.
    pub fn ordinal_sum(parts: &[Poset]) -> Result<Poset> {
        if parts.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let (n, offsets, mut covers, labels) = concat_parts(parts);
        for k in 1..parts.len() {
            let (lo, hi) = (&parts[k - 1], &parts[k]);
            for a in lo.maximal_elements() {
                for b in hi.minimal_elements() {
                    covers.push((offsets[k - 1] + a, offsets[k] + b));
                }
            }
        }
        Poset::from_covers(n, covers, Some(labels))
    }

    /// Ordinal sum of antichains with the given layer sizes.
    pub fn ordinal_sum_of_antichains(layers: &[usize]) -> Result<Poset> {
        let parts = layers
            .iter()
            .map(|&a| Poset::antichain(a))
            .collect::<Result<Vec<_>>>()?;
        Poset::ordinal_sum(&parts)
    }

    /// Disjoint union `P₁ + P₂ + …` with no relations across parts.
    pub fn disjoint_union(parts: &[Poset]) -> Result<Poset> {
        if parts.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let (n, _, covers, labels) = concat_parts(parts);
        Poset::from_covers(n, covers, Some(labels))
    }

    /// Cartesian product with the componentwise order. Element `(a, b)` has
    /// index `a·|Q| + b`; labels are flattened 1-based coordinate tuples, so
    /// nested products read `(a,b,c)`. Ranked when both factors are.
    pub fn product(p: &Poset, q: &Poset) -> Result<Poset> {
        let m = q.n;
        let n = p.n * m;
        let labels = (0..n)
            .map(|x| {
                format!(
                    "({},{})",
                    coordinate_text(p, x / m),
                    coordinate_text(q, x % m)
                )
            })
            .collect();
        let covers = (0..n).flat_map(|x| {
            let (a, b) = (x / m, x % m);
            let vertical = p.upper_covers[a].iter().map(move |&c| (x, c * m + b));
            let horizontal = q.upper_covers[b].iter().map(move |&d| (x, a * m + d));
            vertical.chain(horizontal)
        });
        let covers: Vec<_> = covers.collect();
        let mut out = Poset::from_covers(n, covers, Some(labels))?;
        if let (Some(rp), Some(rq)) = (&p.ranks, &q.ranks) {
            out.ranks = Some((0..n).map(|x| rp[x / m] + rq[x % m]).collect());
        }
        Ok(out)
    }

    /// Product of several posets, associating to the left.
    pub fn product_of(parts: &[Poset]) -> Result<Poset> {
        let (first, rest) = parts.split_first().ok_or(Error::EmptyPoset)?;
        rest.iter()
            .try_fold(first.clone(), |acc, q| Poset::product(&acc, q))
    }

    /// Stacked altered diamonds `1 ⊕ m ⊕ 1 ⊕ … ⊕ m ⊕ 1` with `summands`
    /// layers.
    pub fn stacked_diamond(summands: usize, m: usize) -> Result<Poset> {
        if summands < 3 || summands.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "stacked diamond needs an odd number of summands >= 3, got {summands}"
            )));
        }
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "stacked diamond needs middle layers of size >= 2, got {m}"
            )));
        }
        Poset::ordinal_sum_of_antichains(&stacked_diamond_layers(summands, m))
    }

    /// Divisors of `d` under divisibility, as a product of chains.
    ///
    /// Factors are ordered by (exponent, prime) ascending, so `48 = 2⁴·3`
    /// gives `[2] × [5]`. Labels are the divisors themselves.
    pub fn divisor_poset(d: u64) -> Result<Poset> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "divisor poset needs d >= 1".to_string(),
            ));
        }
        if d == 1 {
            let mut one = Poset::chain(1)?;
            one.labels = Some(vec!["1".to_string()]);
            return Ok(one);
        }
        let mut factors = factorize(d);
        factors.sort_by_key(|&(p, e)| (e, p));
        let chains = factors
            .iter()
            .map(|&(_, e)| Poset::chain(e as usize + 1))
            .collect::<Result<Vec<_>>>()?;
        let mut out = Poset::product_of(&chains)?;
        let sizes: Vec<usize> = factors.iter().map(|&(_, e)| e as usize + 1).collect();
        let labels = (0..out.n)
            .map(|x| {
                let mut rest = x;
                let mut value = 1u64;
                for (k, &(p, _)) in factors.iter().enumerate().rev() {
                    let e = rest % sizes[k];
                    rest /= sizes[k];
                    value *= p.pow(e as u32);
                }
                value.to_string()
            })
            .collect();
        out.labels = Some(labels);
        Ok(out)
    }

    /// The dual poset: same elements, reversed order.
    pub fn dual(&self) -> Poset {
        let covers = self.covers.iter().map(|&(a, b)| (b, a));
        Poset::from_covers(self.n, covers, self.labels.clone())
            .expect("reversing a valid cover relation yields a valid one")
    }

    /// Renumbers elements so the deterministic linear extension reads
    /// `0, 1, …, n-1`. Labels travel with their elements. Used to compare
    /// posets that agree up to this relabeling, such as a chain and its dual.
    pub fn renumbered(&self) -> Poset {
        let ext = self.linear_extension();
        let mut new_index = vec![0; self.n];
        for (i, &x) in ext.iter().enumerate() {
            new_index[x] = i;
        }
        let covers = self
            .covers
            .iter()
            .map(|&(a, b)| (new_index[a], new_index[b]));
        let labels = self
            .labels
            .as_ref()
            .map(|l| ext.iter().map(|&x| l[x].clone()).collect());
        Poset::from_covers(self.n, covers, labels).expect("relabeling preserves validity")
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; empty posets cannot be constructed.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower_covers[x]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    pub fn covered_by(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    /// Principal ideal `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &Subset {
        &self.below[x]
    }

    /// Principal filter `{y : y ≥ x}`.
    pub fn up_set(&self, x: usize) -> &Subset {
        &self.above[x]
    }

    pub fn ranks(&self) -> Option<&[usize]> {
        self.ranks.as_deref()
    }

    pub fn is_ranked(&self) -> bool {
        self.ranks.is_some()
    }

    pub fn rank(&self, x: usize) -> Option<usize> {
        self.ranks.as_ref().map(|r| r[x])
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display label of `x`, falling back to its index.
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Resolves a label (whitespace-insensitive) to an element index.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        let want: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l.chars().filter(|c| !c.is_whitespace()).eq(want.chars()))
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty_raw(self.id, self.n)
    }

    pub fn full_subset(&self) -> Subset {
        Subset::full_raw(self.id, self.n)
    }

    pub fn subset(&self, elements: impl IntoIterator<Item = usize>) -> Result<Subset> {
        let mut s = self.empty_subset();
        for x in elements {
            if x >= self.n {
                return Err(Error::ElementOutOfRange {
                    element: x,
                    n: self.n,
                });
            }
            s.insert(x);
        }
        Ok(s)
    }

    pub fn check(&self, s: &Subset) -> Result<()> {
        if s.poset_id() != self.id || s.universe() != self.n {
            return Err(Error::ForeignSubset);
        }
        Ok(())
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x >= self.n {
            return Err(Error::ElementOutOfRange {
                element: x,
                n: self.n,
            });
        }
        Ok(())
    }

    /// Re-binds a subset of another poset on the same ground set (for
    /// example the dual) to this poset.
    pub fn adopt(&self, s: &Subset) -> Result<Subset> {
        if s.universe() != self.n {
            return Err(Error::ForeignSubset);
        }
        Ok(s.rebound(self.id))
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.lower_covers[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.upper_covers[x].is_empty())
            .collect()
    }

    pub fn is_minimal(&self, x: usize) -> bool {
        self.lower_covers[x].is_empty()
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.upper_covers[x].is_empty()
    }

    /// Δ(S): the smallest order ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subset) -> Result<Subset> {
        self.check(s)?;
        Ok(self.down_closure(s))
    }

    /// ∇(S): the smallest order filter containing `s`.
    pub fn filter_closure(&self, s: &Subset) -> Result<Subset> {
        self.check(s)?;
        Ok(self.up_closure(s))
    }

    pub(crate) fn down_closure(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s {
            out.union_with(&self.below[x]);
        }
        out
    }

    pub(crate) fn up_closure(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s {
            out.union_with(&self.above[x]);
        }
        out
    }

    /// Min(S) or Max(S): members of `s` with nothing strictly below (above)
    /// them inside `s`.
    pub fn extremal(&self, s: &Subset, which: Extremum) -> Result<Subset> {
        self.check(s)?;
        Ok(match which {
            Extremum::Min => self.min_of(s),
            Extremum::Max => self.max_of(s),
        })
    }

    pub(crate) fn min_of(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s {
            if !self.below[x].without(x).intersects(s) {
                out.insert(x);
            }
        }
        out
    }

    pub(crate) fn max_of(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s {
            if !self.above[x].without(x).intersects(s) {
                out.insert(x);
            }
        }
        out
    }

    pub fn is_antichain(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.below[x].intersection(s).len() == 1)
    }

    pub fn is_order_ideal(&self, s: &Subset) -> bool {
        self.down_closure(s) == *s
    }

    pub fn is_order_filter(&self, s: &Subset) -> bool {
        self.up_closure(s) == *s
    }

    /// Deterministic linear extension: repeatedly take the smallest-index
    /// element all of whose lower covers are already placed.
    pub fn linear_extension(&self) -> Vec<usize> {
        topological_order(self.n, &self.lower_covers, &self.upper_covers)
            .expect("posets are acyclic by construction")
    }

    pub fn validate_linear_extension(&self, ext: &[usize]) -> Result<()> {
        if ext.len() != self.n {
            return Err(Error::InvalidLinearExtension(format!(
                "expected {} elements, got {}",
                self.n,
                ext.len()
            )));
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &x) in ext.iter().enumerate() {
            if x >= self.n || position[x] != usize::MAX {
                return Err(Error::InvalidLinearExtension(format!(
                    "element {x} is out of range or repeated"
                )));
            }
            position[x] = i;
        }
        for &(a, b) in &self.covers {
            if position[a] > position[b] {
                return Err(Error::InvalidLinearExtension(format!(
                    "{a} must precede {b}"
                )));
            }
        }
        Ok(())
    }

    /// Serializable description.
    pub fn to_description(&self) -> PosetDescription {
        PosetDescription {
            n: self.n,
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
            labels: self.labels.clone(),
            ranks: self.ranks.clone(),
        }
    }

    pub fn from_description(d: &PosetDescription) -> Result<Poset> {
        let mut p =
            Poset::from_covers(d.n, d.covers.iter().map(|&[a, b]| (a, b)), d.labels.clone())?;
        if let Some(r) = &d.ranks {
            if r.len() != p.n {
                return Err(Error::Malformed(format!(
                    "{} ranks for {} elements",
                    r.len(),
                    p.n
                )));
            }
            if r.iter().min() != Some(&0) {
                return Err(Error::Malformed("minimum rank must be 0".into()));
            }
            if let Some(&(a, b)) = p.covers.iter().find(|&&(a, b)| r[b] != r[a] + 1) {
                return Err(Error::Malformed(format!(
                    "cover ({a}, {b}) does not increase rank by one"
                )));
            }
            p.ranks = Some(r.clone());
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_description()).expect("description serializes")
    }

    pub fn from_json(text: &str) -> Result<Poset> {
        let d: PosetDescription =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        Poset::from_description(&d)
    }

    /// Hasse diagram in Graphviz DOT, drawn bottom-up with one row per rank
    /// (or per height when the poset is unranked). Members of `highlight`
    /// are filled.
    pub fn to_dot(&self, highlight: Option<&Subset>) -> String {
        let layers = self.ranks.clone().unwrap_or_else(|| self.heights());
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n");
        for x in 0..self.n {
            let fill = match highlight {
                Some(h) if h.contains(x) => ", style=filled, fillcolor=\"#e06666\"",
                _ => "",
            };
            let _ = writeln!(out, "  n{x} [label=\"{}\"{fill}];", escape(&self.label(x)));
        }
        let mut by_layer: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &r) in layers.iter().enumerate() {
            by_layer.entry(r).or_default().push(x);
        }
        for xs in by_layer.values() {
            let names: Vec<String> = xs.iter().map(|x| format!("n{x}")).collect();
            let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
        }
        out.push_str("}\n");
        out
    }

    /// Length of the longest chain ending at each element.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for x in self.linear_extension() {
            h[x] = self.lower_covers[x]
                .iter()
                .map(|&y| h[y] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDescription {
    pub n: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<usize>>,
}

/// Layer sizes `1, m, 1, …, m, 1`.
pub fn stacked_diamond_layers(summands: usize, m: usize) -> Vec<usize> {
    (1..=summands)
        .map(|i| if i % 2 == 1 { 1 } else { m })
        .collect()
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn coordinate_text(p: &Poset, x: usize) -> String {
    match &p.labels {
        Some(l) => l[x]
            .trim_start_matches('(')
            .trim_end_matches(')')
            .to_string(),
        None => (x + 1).to_string(),
    }
}

fn concat_parts(parts: &[Poset]) -> (usize, Vec<usize>, Vec<(usize, usize)>, Vec<String>) {
    let mut offsets = Vec::with_capacity(parts.len());
    let mut covers = Vec::new();
    let mut labels = Vec::new();
    let mut n = 0;
    for (k, part) in parts.iter().enumerate() {
        offsets.push(n);
        covers.extend(part.covers.iter().map(|&(a, b)| (n + a, n + b)));
        labels.extend((0..part.n).map(|x| format!("({},{})", k + 1, x + 1)));
        n += part.n;
    }
    (n, offsets, covers, labels)
}

fn topological_order(
    n: usize,
    lower_covers: &[Vec<usize>],
    upper_covers: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let mut pending: Vec<usize> = lower_covers.iter().map(Vec::len).collect();
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| pending[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = ready.pop() {
        order.push(x);
        for &y in &upper_covers[x] {
            pending[y] -= 1;
            if pending[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn derive_ranks(
    n: usize,
    order: &[usize],
    lower_covers: &[Vec<usize>],
    covers: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let mut r = vec![0; n];
    for &x in order {
        r[x] = lower_covers[x].iter().map(|&y| r[y] + 1).max().unwrap_or(0);
    }
    covers.iter().all(|&(a, b)| r[b] == r[a] + 1).then_some(r)
}

fn factorize(mut d: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= d {
        let mut e = 0;
        while d.is_multiple_of(p) {
            d /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if d > 1 {
        out.push((d, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(p: &Poset, xs: &[usize]) -> Subset {
        p.subset(xs.iter().copied()).unwrap()
    }

    #[test]
    fn chain_basics() {
        let c3 = Poset::chain(3).unwrap();
        assert_eq!(c3.covers(), &[(0, 1), (1, 2)]);
        assert_eq!(c3.rank(2), Some(2));
        let c1 = Poset::chain(1).unwrap();
        assert_eq!(c1.len(), 1);
        assert!(c1.covers().is_empty());
        let c5 = Poset::chain(5).unwrap();
        assert!(c5.leq(0, 4));
        assert!(!c5.leq(4, 0));
        assert_eq!(Poset::chain(0), Err(Error::EmptyPoset));
    }

    #[test]
    fn antichain_basics() {
        let a4 = Poset::antichain(4).unwrap();
        assert_eq!(a4.len(), 4);
        assert!(a4.covers().is_empty());
        assert_eq!(a4.ranks(), Some(&[0, 0, 0, 0][..]));
        assert_eq!(Poset::antichain(1).unwrap(), Poset::chain(1).unwrap());
        assert!(!Poset::antichain(2).unwrap().leq(0, 1));
        assert_eq!(Poset::antichain(0), Err(Error::EmptyPoset));
    }

    #[test]
    fn ordinal_sums() {
        let a2 = Poset::antichain(2).unwrap();
        let a3 = Poset::antichain(3).unwrap();
        let s = Poset::ordinal_sum(&[a2.clone(), a3.clone()]).unwrap();
        assert_eq!(s.len(), 5);
        assert_eq!(s.covers().len(), 6);
        assert_eq!(s.label(3), "(2,2)");

        let c2 = Poset::chain(2).unwrap();
        assert_eq!(
            Poset::ordinal_sum(&[c2.clone(), c2]).unwrap(),
            Poset::chain(4).unwrap()
        );
        let ones = vec![Poset::antichain(1).unwrap(); 6];
        assert_eq!(Poset::ordinal_sum(&ones).unwrap(), Poset::chain(6).unwrap());
        assert_eq!(Poset::ordinal_sum(&[]), Err(Error::EmptyPoset));

        assert_eq!(
            s.dual().renumbered(),
            Poset::ordinal_sum(&[a3, a2]).unwrap(),
        );
    }

    #[test]
    fn disjoint_unions() {
        let c2 = Poset::chain(2).unwrap();
        let u = Poset::disjoint_union(&[c2.clone(), c2]).unwrap();
        assert_eq!(u.len(), 4);
        assert_eq!(u.covers().len(), 2);
        assert!(!u.leq(0, 2) && !u.leq(2, 1) && !u.leq(1, 3));
        let one = Poset::antichain(1).unwrap();
        assert_eq!(
            Poset::disjoint_union(&[one.clone(), one]).unwrap(),
            Poset::antichain(2).unwrap()
        );
    }

    #[test]
    fn products() {
        let c2 = Poset::chain(2).unwrap();
        let d = Poset::product(&c2, &c2).unwrap();
        assert_eq!(d.len(), 4);
        assert_eq!(d.covers().len(), 4);
        assert_eq!(d.label(0), "(1,1)");
        assert_eq!(d.label(3), "(2,2)");
        assert_eq!(d.ranks(), Some(&[0, 1, 1, 2][..]));

        let p = Poset::product(&Poset::chain(4).unwrap(), &Poset::chain(5).unwrap()).unwrap();
        assert_eq!(p.len(), 20);

        let q3 = Poset::chain(3).unwrap();
        let reduced = Poset::from_order(6, |x, y| x / 3 <= y / 3 && x % 3 <= y % 3, None).unwrap();
        assert_eq!(Poset::product(&c2, &q3).unwrap(), reduced);

        let cube = Poset::product_of(&[c2.clone(), c2.clone(), Poset::chain(3).unwrap()]).unwrap();
        assert_eq!(cube.len(), 12);
        assert_eq!(cube.label(11), "(2,2,3)");
        assert_eq!(cube.find_label("(1, 2, 3)"), Some(5));
    }

    #[test]
    fn two_by_n_width_is_two() {
        for n in 1..=6 {
            let p = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(n).unwrap()).unwrap();
            let widest = (0u64..1 << p.len())
                .map(|m| {
                    set(
                        &p,
                        &(0..p.len())
                            .filter(|&i| m >> i & 1 == 1)
                            .collect::<Vec<_>>(),
                    )
                })
                .filter(|s| p.is_antichain(s))
                .map(|s| s.len())
                .max()
                .unwrap();
            assert_eq!(widest, if n == 1 { 1 } else { 2 });
        }
    }

    #[test]
    fn stacked_diamonds() {
        let d = Poset::stacked_diamond(3, 2).unwrap();
        assert_eq!(d.len(), 4);
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(Poset::ordinal_sum_of_antichains(&[1, 2, 1]).unwrap(), d);
        assert_eq!(Poset::stacked_diamond(5, 2).unwrap().len(), 7);
        assert_eq!(Poset::stacked_diamond(7, 3).unwrap().len(), 13);
        assert!(Poset::stacked_diamond(4, 2).is_err());
        assert!(Poset::stacked_diamond(1, 2).is_err());
        assert!(Poset::stacked_diamond(5, 1).is_err());
        // The diamond is also [2] x [2] up to relabeling, not index-for-index.
        assert_eq!(
            Poset::product(&c2, &c2).unwrap().covers().len(),
            d.covers().len()
        );
    }

    #[test]
    fn divisor_posets() {
        let p48 = Poset::divisor_poset(48).unwrap();
        let expect = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(5).unwrap()).unwrap();
        assert_eq!(p48, expect);
        assert_eq!(p48.label(0), "1");
        assert_eq!(p48.label(9), "48");
        assert_eq!(p48.label(5), "3");
        assert_eq!(Poset::divisor_poset(7).unwrap(), Poset::chain(2).unwrap());
        let c2 = Poset::chain(2).unwrap();
        assert_eq!(
            Poset::divisor_poset(6).unwrap(),
            Poset::product(&c2, &c2).unwrap()
        );
        assert_eq!(Poset::divisor_poset(1).unwrap().label(0), "1");
        assert!(Poset::divisor_poset(0).is_err());
    }

    #[test]
    fn duals() {
        let c3 = Poset::chain(3).unwrap();
        assert_eq!(c3.dual().covers(), &[(1, 0), (2, 1)]);
        assert_eq!(c3.dual().renumbered(), c3);
        let p = Poset::ordinal_sum_of_antichains(&[2, 1, 3]).unwrap();
        assert_eq!(p.dual().dual(), p);
        for a in 0..p.len() {
            for b in 0..p.len() {
                assert_eq!(p.leq(a, b), p.dual().leq(b, a));
            }
        }
    }

    #[test]
    fn rejects_bad_covers() {
        assert!(matches!(
            Poset::from_covers(3, [(0, 1), (1, 2), (0, 2)], None),
            Err(Error::NotTransitivelyReduced(0, 2))
        ));
        assert!(matches!(
            Poset::from_covers(2, [(0, 1), (1, 0)], None),
            Err(Error::Cyclic(..))
        ));
        assert!(matches!(
            Poset::from_covers(2, [(0, 2)], None),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn unranked_poset_has_no_ranks() {
        let p = Poset::from_covers(4, [(0, 1), (1, 2), (0, 3), (3, 2)], None);
        assert!(p.unwrap().is_ranked());
        // maximal chains into 2 of lengths 2 and 1
        let q = Poset::from_covers(4, [(0, 1), (1, 2), (3, 2)], None).unwrap();
        assert!(!q.is_ranked());
    }

    #[test]
    fn closures_and_extremal() {
        let c4 = Poset::chain(4).unwrap();
        assert!(c4.ideal_closure(&c4.empty_subset()).unwrap().is_empty());
        assert!(c4.ideal_closure(&set(&c4, &[3])).unwrap().is_full());
        assert_eq!(
            c4.extremal(&c4.full_subset(), Extremum::Max).unwrap(),
            set(&c4, &[3])
        );
        let single = set(&c4, &[2]);
        assert_eq!(c4.extremal(&single, Extremum::Min).unwrap(), single);
        assert_eq!(c4.extremal(&single, Extremum::Max).unwrap(), single);

        let other = Poset::antichain(4).unwrap();
        assert_eq!(
            c4.ideal_closure(&other.empty_subset()),
            Err(Error::ForeignSubset)
        );
        let dual = c4.dual();
        let s = set(&c4, &[1]);
        assert_eq!(
            c4.filter_closure(&s).unwrap(),
            c4.adopt(&dual.ideal_closure(&dual.adopt(&s).unwrap()).unwrap())
                .unwrap()
        );
    }

    #[test]
    fn linear_extensions() {
        assert_eq!(Poset::chain(3).unwrap().linear_extension(), vec![0, 1, 2]);
        assert_eq!(Poset::antichain(2).unwrap().linear_extension(), vec![0, 1]);
        let d = Poset::chain(3).unwrap().dual();
        assert_eq!(d.linear_extension(), vec![2, 1, 0]);
        assert!(d.validate_linear_extension(&[0, 1, 2]).is_err());
        assert!(d.validate_linear_extension(&[2, 1]).is_err());
        assert!(d.validate_linear_extension(&[2, 2, 0]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = Poset::product(&Poset::chain(2).unwrap(), &Poset::chain(3).unwrap()).unwrap();
        let text = p.to_json();
        assert!(text.starts_with("{\"n\":6,\"covers\":[[0,1],"));
        let q = Poset::from_json(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.labels(), p.labels());
        assert_eq!(q.ranks(), p.ranks());
        assert!(Poset::from_json(r#"{"n":2,"covers":[[0,1]],"ranks":[0,0]}"#).is_err());
        assert!(Poset::from_json(r#"{"n":0,"covers":[]}"#).is_err());
    }

    #[test]
    fn dot_export_lists_covers() {
        let p = Poset::chain(2).unwrap();
        let dot = p.to_dot(Some(&set(&p, &[1])));
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("n1 [label=\"1\", style=filled"));
        assert!(dot.contains("rankdir=BT"));
    }
}
