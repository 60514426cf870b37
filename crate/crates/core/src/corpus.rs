//! Named test posets shared by the verifiers, the acceptance suite and the
//! CLI.

use crate::error::Result;
use crate::poset::{stacked_diamond_layers, Poset};

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub poset: Poset,
    /// Layer sizes when the poset was built as an ordinal sum of antichains.
    pub layers: Option<Vec<usize>>,
}

impl CorpusEntry {
    fn plain(name: String, poset: Poset) -> Self {
        CorpusEntry {
            name,
            poset,
            layers: None,
        }
    }

    fn layered(layers: Vec<usize>) -> Result<Self> {
        Ok(CorpusEntry {
            name: format!(
                "osum({})",
                layers
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            poset: Poset::ordinal_sum_of_antichains(&layers)?,
            layers: Some(layers),
        })
    }
}

/// Every composition of every integer in `1..=max_total`, shortest first.
pub fn compositions(max_total: usize) -> Vec<Vec<usize>> {
    fn extend(rest: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(current.clone());
            return;
        }
        for first in 1..=rest {
            current.push(first);
            extend(rest - first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_total {
        extend(total, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn chains(max_n: usize) -> Result<Vec<CorpusEntry>> {
    (1..=max_n)
        .map(|n| Ok(CorpusEntry::plain(format!("chain({n})"), Poset::chain(n)?)))
        .collect()
}

pub fn antichains(max_k: usize) -> Result<Vec<CorpusEntry>> {
    (1..=max_k)
        .map(|k| {
            Ok(CorpusEntry::plain(
                format!("antichain({k})"),
                Poset::antichain(k)?,
            ))
        })
        .collect()
}

/// Ordinal sums of antichains for the given layer lists.
pub fn ordinal_sums(layer_lists: &[Vec<usize>]) -> Result<Vec<CorpusEntry>> {
    layer_lists
        .iter()
        .cloned()
        .map(CorpusEntry::layered)
        .collect()
}

pub fn stacked_diamonds(params: &[(usize, usize)]) -> Result<Vec<CorpusEntry>> {
    params
        .iter()
        .map(|&(n, m)| {
            let mut e = CorpusEntry::layered(stacked_diamond_layers(n, m))?;
            e.name = format!("diamonds({n},{m})");
            Ok(e)
        })
        .collect()
}

/// `[m]×[n]` for all `m, n ≥ 1` with `m + n ≤ max_sum`.
pub fn grids(max_sum: usize) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for m in 1..max_sum {
        for n in 1..=max_sum - m {
            out.push(CorpusEntry::plain(
                format!("prod(chain({m}),chain({n}))"),
                Poset::product(&Poset::chain(m)?, &Poset::chain(n)?)?,
            ));
        }
    }
    Ok(out)
}

pub fn product_of_chains(sizes: &[usize]) -> Result<CorpusEntry> {
    let parts = sizes
        .iter()
        .map(|&k| Poset::chain(k))
        .collect::<Result<Vec<_>>>()?;
    Ok(CorpusEntry::plain(
        format!(
            "prod({})",
            sizes
                .iter()
                .map(|k| format!("chain({k})"))
                .collect::<Vec<_>>()
                .join(",")
        ),
        Poset::product_of(&parts)?,
    ))
}

/// Parameters of the standard corpus.
#[derive(Debug, Clone, Copy)]
pub struct CorpusBounds {
    pub max_chain: usize,
    pub max_antichain: usize,
    /// Ordinal sums over every composition with at most this many elements.
    pub max_ordinal_sum: usize,
    /// `[m]×[n]` with `m + n` at most this.
    pub max_grid_sum: usize,
}

impl CorpusBounds {
    pub const FULL: CorpusBounds = CorpusBounds {
        max_chain: 10,
        max_antichain: 6,
        max_ordinal_sum: 12,
        max_grid_sum: 9,
    };
}

/// Chains, antichains, ordinal sums (every composition within the bound,
/// plus `2⊕4⊕2⊕4` and `2⊕3⊕1⊕4`), `D(5,2)`, `D(7,3)`, two-chain products
/// and `[2]×[2]×[3]`.
pub fn standard(bounds: CorpusBounds) -> Result<Vec<CorpusEntry>> {
    let mut out = chains(bounds.max_chain)?;
    out.extend(antichains(bounds.max_antichain)?);
    let mut layers = compositions(bounds.max_ordinal_sum);
    for extra in [vec![2, 4, 2, 4], vec![2, 3, 1, 4]] {
        if !layers.contains(&extra) {
            layers.push(extra);
        }
    }
    out.extend(ordinal_sums(&layers)?);
    out.extend(stacked_diamonds(&[(5, 2), (7, 3)])?);
    out.extend(grids(bounds.max_grid_sum)?);
    out.push(product_of_chains(&[2, 2, 3])?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_counts() {
        // 2^k − 1 compositions of the integers 1..=k
        assert_eq!(compositions(5).len(), 31);
        assert!(compositions(3).contains(&vec![1, 2]));
        assert_eq!(compositions(2), vec![vec![1], vec![2], vec![1, 1]]);
    }

    #[test]
    fn grid_names() {
        let g = grids(4).unwrap();
        assert_eq!(g.len(), 6);
        assert_eq!(g[0].name, "prod(chain(1),chain(1))");
    }
}
