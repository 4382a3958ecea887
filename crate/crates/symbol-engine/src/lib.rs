//! Symbolic calculus of homotopy classes: formal words of named
//! generators, identity classes, degree maps, and Whitehead nodes, with a
//! fact-driven rewrite engine that resolves expressions into canonical
//! coordinates of declared groups.
//!
//! The engine is deliberately conservative: composition distributes over
//! sums only where a homomorphism justifies it, degree maps expand with
//! the quadratic Whitehead correction, and any word it cannot resolve is
//! reported as a missing fact rather than guessed.

#![forbid(unsafe_code)]

mod elem;
mod engine;
mod facts;

pub use elem::{Factor, FormalElement, GenSymbol, Word};
pub use engine::{
    compose, degree_precompose, hilton_decompose, hopf_h2, normalize, rewrite, suspend,
    toda_bracket, whitehead, BracketCoset, HiltonSummand, Result, SymbolError,
};
pub use facts::{BracketFact, EmptyFactSource, FactSource, SpaceId};
