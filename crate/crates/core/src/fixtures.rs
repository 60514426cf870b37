//! A 20-element worked-example poset with an interval-closed set that is
//! neither an ideal nor a filter. Elements are labelled `"1"` to `"20"`;
//! label `k` has index `k - 1`.

use crate::poset::Poset;
use crate::subset::Subset;

/// Cover relations in 1-based labels.
pub const WORKED_EXAMPLE_COVERS: [(usize, usize); 30] = [
    (1, 2),
    (2, 7),
    (7, 12),
    (12, 18),
    (7, 13),
    (13, 19),
    (7, 14),
    (14, 20),
    (2, 8),
    (8, 14),
    (14, 19),
    (8, 15),
    (15, 20),
    (1, 3),
    (3, 9),
    (9, 16),
    (16, 20),
    (1, 4),
    (4, 10),
    (10, 17),
    (17, 20),
    (1, 5),
    (5, 10),
    (10, 16),
    (5, 9),
    (9, 15),
    (10, 15),
    (13, 20),
    (11, 16),
    (6, 11),
];

/// The highlighted interval-closed set, in 1-based labels.
pub const WORKED_EXAMPLE_SET: [usize; 6] = [5, 8, 9, 10, 11, 16];

pub fn worked_example() -> Poset {
    let labels = (1..=20).map(|k| k.to_string()).collect();
    Poset::from_covers(
        20,
        WORKED_EXAMPLE_COVERS.iter().map(|&(a, b)| (a - 1, b - 1)),
        Some(labels),
    )
    .expect("worked example covers are valid")
}

/// Subset of the worked example from 1-based labels.
pub fn labelled(p: &Poset, labels: &[usize]) -> Subset {
    p.subset(labels.iter().map(|&k| k - 1))
        .expect("labels are in range")
}

/// 1-based labels of a subset of the worked example.
pub fn labels_of(s: &Subset) -> Vec<usize> {
    s.iter().map(|x| x + 1).collect()
}
