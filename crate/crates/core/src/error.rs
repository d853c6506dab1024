use thiserror::Error;

/// Errors raised while posing or evaluating a subbundle-counting instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Ranks or genus outside their admissible ranges.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// The finiteness condition has no integer solution for the subbundle degree.
    #[error(
        "no valid d' for r={r}, d={d}, r'={r_prime}, g={g}: \
         {r_prime}*d - {r}*d' = {r_prime}*({r}-{r_prime})*({g}-1) has no integer solution"
    )]
    NoValidDPrime {
        r: i64,
        d: i64,
        r_prime: i64,
        g: i64,
    },

    /// Only line subbundles and rank-2 subbundles of rank-4 bundles are counted.
    #[error(
        "unsupported rank pair (r={r}, r'={r_prime}): only r'=1, or r=4 with r'=2, is supported"
    )]
    UnsupportedRankPair { r: i64, r_prime: i64 },

    /// An argument to a computational routine violates its precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
