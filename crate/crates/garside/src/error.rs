use thiserror::Error;

/// Errors produced by the library.
///
/// Resource exhaustion ([`Error::Budget`]) is always reported as an error,
/// never converted into a wrong answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An atom index fell outside the structure's atom range.
    #[error("atom s{index} out of range: structure has {count} atoms")]
    AtomRange { index: usize, count: usize },

    /// A structure was requested with an unsupported rank.
    #[error("rank {rank} out of supported range {min}..={max}")]
    Rank { rank: usize, min: usize, max: usize },

    /// A permutation table did not describe a bijection of the right arity.
    #[error("permutation arity mismatch: expected a bijection on {expected} points")]
    PermutationArity { expected: usize },

    /// A tuple constructor was given elements that do not pairwise commute.
    #[error("elements do not pairwise commute")]
    NotCommuting,

    /// Two tuples of different lengths were compared.
    #[error("tuple length mismatch: {left} vs {right}")]
    TupleLength { left: usize, right: usize },

    /// An integer vector that must be primitive (gcd 1, nonzero) was not.
    #[error("integer vector must be nonzero with coprime entries")]
    NotPrimitive,

    /// The configured step budget was exhausted before the search finished.
    #[error("step budget of {limit} exceeded")]
    Budget { limit: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
