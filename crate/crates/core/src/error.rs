use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty posets are not supported")]
    EmptyPoset,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {element} out of range for poset with {n} elements")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("cover relation ({0}, {1}) creates a cycle")]
    Cyclic(usize, usize),

    #[error("cover relation ({0}, {1}) is implied by transitivity")]
    NotTransitivelyReduced(usize, usize),

    #[error("subset belongs to a different poset")]
    ForeignSubset,

    #[error("subset {0} is not interval-closed")]
    NotIntervalClosed(String),

    #[error("invalid antichain pair: {0}")]
    InvalidAntichainPair(String),

    #[error("not a linear extension: {0}")]
    InvalidLinearExtension(String),

    #[error("poset is not the ordinal sum of antichains {0:?}")]
    NotOrdinalSumOfAntichains(Vec<usize>),

    #[error("statistic {0} requires a ranked poset")]
    Unranked(String),

    #[error("statistic {stat} takes negative value {value}; a nonnegative statistic is required")]
    NegativeStatistic { stat: String, value: i64 },

    #[error("subset is not an order ideal")]
    NotAnIdeal,

    #[error("interval-closed set has no element in chain {0}")]
    MissingChainSupport(usize),

    #[error("orbit exceeded {0} steps without closing")]
    OrbitOverflow(usize),

    #[error("malformed poset description: {0}")]
    Malformed(String),
}
