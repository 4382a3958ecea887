//! Error types for the abelian group calculus.

use thiserror::Error;

/// Errors raised by group constructions and homomorphism calculus.
#[derive(Debug, Error)]
pub enum AbelianError {
    /// A presentation produced an invariant factor with an odd prime divisor,
    /// which is outside the 2-local contract of this crate.
    #[error("presentation has odd torsion: invariant factor {factor} is not a power of 2")]
    OddTorsion { factor: String },

    /// A homomorphism was constructed that does not kill the domain relations.
    #[error("map is not well-defined: generator '{generator}' of order {order} has image of larger order")]
    NotWellDefined { generator: String, order: u128 },

    /// Two homomorphisms were composed or compared across mismatched groups.
    #[error("groups are not composable: {context}")]
    Composability { context: String },

    /// An extension enumeration would exceed the configured work bound.
    #[error("extension enumeration bound exceeded: {size} candidate classes > bound {bound}")]
    BoundExceeded { size: u128, bound: u128 },

    /// Extension constraints admit no middle group; the first violated
    /// constraint is named.
    #[error("extension constraints are contradictory: no candidate satisfies {constraint}")]
    Contradiction { constraint: String },

    /// A named generator referenced by a constraint or element lookup does not
    /// exist in the stated group.
    #[error("unknown generator '{name}' in group {group}")]
    UnknownGenerator { name: String, group: String },

    /// An operation requiring finite groups received an infinite one.
    #[error("operation requires a finite group, got free rank {free_rank}")]
    InfiniteGroup { free_rank: usize },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, AbelianError>;
