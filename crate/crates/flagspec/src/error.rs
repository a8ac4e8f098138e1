//! Error type shared by every module in this crate.

use thiserror::Error;

/// Everything that can go wrong when building or querying the objects in
/// this crate. Variants that correspond to mathematical preconditions
/// (rather than malformed input) are flagged by [`Error::is_precondition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible Lie type {family}{rank}: {reason}")]
    InadmissibleType {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("root with simple-root coordinates {0:?} does not belong to this root system")]
    RootNotInSystem(Vec<i64>),

    #[error("root with simple-root coordinates {0:?} is not a radical root of this flag variety")]
    RootNotInRadical(Vec<i64>),

    #[error("node index {index} is out of range 1..={rank}")]
    NodeOutOfRange { index: usize, rank: usize },

    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0} is not integral")]
    NonIntegralWeight(String),

    #[error("weight {0} is not dominant")]
    NonDominantWeight(String),

    #[error("reflection letter {letter} is out of range 1..={rank}")]
    BadReflectionLetter { letter: usize, rank: usize },

    #[error("input weight lies on a reflection wall (singular)")]
    SingularInput,

    #[error("the painted node set must be non-empty")]
    EmptyPaintedSet,

    #[error("line bundle does not induce a Spin^c structure: parity mismatch at painted node {node}")]
    NotSpinc { node: usize },

    #[error("not a Kähler class: coefficient at painted node {node} is not positive")]
    NotKahler { node: usize },

    #[error("classes measured in different units (one carries a factor of π, the other does not)")]
    UnitMismatch,

    #[error("π-power {0} is outside the representable range -1..=1")]
    PiPowerOutOfRange(i32),

    #[error("cannot add π-scalars of different π-powers ({0} and {1})")]
    PiPowerMismatch(i32, i32),

    #[error("scalar curvature target must be positive")]
    NonPositiveTarget,
}

impl Error {
    /// True for failures of a mathematical precondition on otherwise
    /// well-formed input, as opposed to malformed input itself. Callers
    /// that need to distinguish usage errors from geometry use this.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotSpinc { .. }
                | Error::NotKahler { .. }
                | Error::UnitMismatch
                | Error::SingularInput
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
