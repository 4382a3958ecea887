//! The fact-source abstraction: the engine consumes curated knowledge
//! (declared groups, composition/suspension/Hopf/Whitehead/bracket facts)
//! through this trait and never guesses beyond it.

use crate::elem::{Factor, FormalElement};
use abelian_core::FgAbGroup;

/// Identifies the space a homotopy group is taken in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceId {
    Sphere(u32),
    /// A named complex (wedge, skeleton, Moore space…), keyed by the fact
    /// file's identifier.
    Named(String),
}

impl std::fmt::Display for SpaceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceId::Sphere(n) => write!(f, "S^{n}"),
            SpaceId::Named(s) => write!(f, "{s}"),
        }
    }
}

/// A curated Toda bracket entry: representative plus indeterminacy
/// generators.
#[derive(Clone, Debug)]
pub struct BracketFact {
    pub representative: FormalElement,
    pub indeterminacy: Vec<FormalElement>,
}

/// Read-only access to the curated fact base.
pub trait FactSource {
    /// The declared group π_m(space), with named generators.
    fn group(&self, space: &SpaceId, m: u32) -> Option<FgAbGroup>;

    /// Composition fact: left_key ∘ right_key = element.
    fn composition(&self, left_key: &str, right_key: &str) -> Option<FormalElement>;

    /// Degree fact: (t·ι) ∘ word = element, curated per (t, word key).
    fn degree(&self, t: i64, word_key: &str) -> Option<FormalElement>;

    /// Suspension of a named generator, as a single factor.
    fn suspension(&self, gen_name: &str) -> Option<Factor>;

    /// Second James–Hopf invariant of a word.
    fn hopf(&self, word_key: &str) -> Option<FormalElement>;

    /// Expansion of a Whitehead product node, keyed by its canonical key.
    fn whitehead_expansion(&self, key: &str) -> Option<FormalElement>;

    /// Curated Toda bracket, keyed by "f | g | h" element keys.
    fn bracket(&self, key: &str) -> Option<BracketFact>;
}

/// A fact source with no facts; useful for purely structural rewriting.
pub struct EmptyFactSource;

impl FactSource for EmptyFactSource {
    fn group(&self, _: &SpaceId, _: u32) -> Option<FgAbGroup> {
        None
    }
    fn composition(&self, _: &str, _: &str) -> Option<FormalElement> {
        None
    }
    fn degree(&self, _: i64, _: &str) -> Option<FormalElement> {
        None
    }
    fn suspension(&self, _: &str) -> Option<Factor> {
        None
    }
    fn hopf(&self, _: &str) -> Option<FormalElement> {
        None
    }
    fn whitehead_expansion(&self, _: &str) -> Option<FormalElement> {
        None
    }
    fn bracket(&self, _: &str) -> Option<BracketFact> {
        None
    }
}
