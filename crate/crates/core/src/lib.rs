//! Interval-closed sets of finite posets and rowmotion on them.
//!
//! The crate is organised bottom-up:
//!
//! - [`poset`]: construction (chains, antichains, ordinal sums, products,
//!   stacked diamonds, divisor posets, duals) and the Δ/∇ closures.
//! - [`ics`]: validation, the antichain-pair encoding and enumeration.
//! - [`rowmotion`]: toggles, rowmotion by toggling and by the global
//!   formula, inverse rowmotion and orbit decomposition.
//! - [`stats`] and [`csp`]: statistics, exact orbit averages, homomesy and
//!   cyclic sieving checks.
//! - [`closed_forms`]: closed-form counts and orbit predictions, the
//!   Narayana bijection, and [`verify`] to check them against enumeration.
//!
//! Everything is exact: counts are integers, averages are reduced
//! rationals.

pub mod closed_forms;
pub mod corpus;
pub mod csp;
pub mod error;
pub mod fixtures;
pub mod ics;
pub mod poset;
pub mod rowmotion;
pub mod stats;
pub mod subset;
pub mod verify;

pub use error::{Error, Result};
pub use ics::{AntichainPair, IntervalClosedSet, Order, Regions};
pub use poset::{Extremum, Poset};
pub use rowmotion::{Orbit, OrbitDecomposition};
pub use stats::{HomomesyReport, Statistic};
pub use subset::Subset;
