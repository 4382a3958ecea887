//! Formal elements: integer-linear combinations of composition words built
//! from named generators, identity classes, degree maps, and Whitehead
//! bracket nodes.

use std::fmt;

/// A named atomic homotopy class with its mapping dimensions.
///
/// `suspension` records whether the class is known to desuspend; this
/// drives the legality of distributing compositions over sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSymbol {
    pub name: String,
    pub source_dim: u32,
    pub target_dim: u32,
    pub suspension: bool,
}

/// One factor of a composition word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    /// A named generator.
    Gen(GenSymbol),
    /// The identity class ι_n.
    Iota { dim: u32 },
    /// The degree map t·ι_n viewed as a map S^n → S^n.
    Degree { dim: u32, t: i64 },
    /// A Whitehead product node [left, right] mapping into the named
    /// target; `target_dim` is the dimension its source sphere would have.
    Whitehead {
        left: Box<Word>,
        right: Box<Word>,
        source_dim: u32,
        target_dim: u32,
    },
}

impl Factor {
    pub fn source_dim(&self) -> u32 {
        match self {
            Factor::Gen(g) => g.source_dim,
            Factor::Iota { dim } | Factor::Degree { dim, .. } => *dim,
            Factor::Whitehead { source_dim, .. } => *source_dim,
        }
    }

    pub fn target_dim(&self) -> u32 {
        match self {
            Factor::Gen(g) => g.target_dim,
            Factor::Iota { dim } | Factor::Degree { dim, .. } => *dim,
            Factor::Whitehead { target_dim, .. } => *target_dim,
        }
    }

    /// True if the factor is known to be (a multiple of) a suspension.
    pub fn is_suspension(&self) -> bool {
        match self {
            Factor::Gen(g) => g.suspension,
            // ι_n and t·ι_n on S^n desuspend for n ≥ 2.
            Factor::Iota { dim } | Factor::Degree { dim, .. } => *dim >= 2,
            Factor::Whitehead { .. } => false,
        }
    }

    /// Canonical key used for fact lookups and generator names.
    pub fn key(&self) -> String {
        match self {
            Factor::Gen(g) => g.name.clone(),
            Factor::Iota { dim } => format!("iota_{dim}"),
            Factor::Degree { dim, t } => format!("({t} iota_{dim})"),
            Factor::Whitehead { left, right, .. } => {
                format!("W[{},{}]", left.key(), right.key())
            }
        }
    }
}

/// A composition word; factors are listed outermost-first, i.e.
/// `factors[0] ∘ factors[1] ∘ … ∘ factors[last]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    pub factors: Vec<Factor>,
}

impl Word {
    pub fn new(factors: Vec<Factor>) -> Self {
        // Identity factors are absorbed into their neighbours; a bare
        // identity word keeps its single ι factor.
        let mut kept: Vec<Factor> = factors
            .iter()
            .filter(|f| !matches!(f, Factor::Iota { .. }))
            .cloned()
            .collect();
        if kept.is_empty() {
            kept = factors;
            kept.truncate(1);
        }
        Word { factors: kept }
    }

    pub fn single(f: Factor) -> Self {
        Word { factors: vec![f] }
    }

    /// Dimension of the source sphere (rightmost factor).
    pub fn source_dim(&self) -> Option<u32> {
        self.factors.last().map(Factor::source_dim)
    }

    /// Dimension of the target (leftmost factor).
    pub fn target_dim(&self) -> Option<u32> {
        self.factors.first().map(Factor::target_dim)
    }

    /// True if adjacent factors chain dimension-compatibly.
    pub fn chains(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[0].source_dim() == w[1].target_dim())
    }

    /// True if the composite is known to be a suspension (all factors are).
    pub fn is_suspension(&self) -> bool {
        !self.factors.is_empty() && self.factors.iter().all(Factor::is_suspension)
    }

    pub fn contains_whitehead(&self) -> bool {
        self.factors
            .iter()
            .any(|f| matches!(f, Factor::Whitehead { .. }))
    }

    /// Canonical key: factor keys joined by spaces.
    pub fn key(&self) -> String {
        self.factors
            .iter()
            .map(Factor::key)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.key())
    }
}

/// An integer-linear combination of composition words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalElement {
    pub terms: Vec<(i64, Word)>,
}

impl FormalElement {
    pub fn zero() -> Self {
        FormalElement { terms: Vec::new() }
    }

    pub fn from_word(word: Word) -> Self {
        FormalElement {
            terms: vec![(1, word)],
        }
    }

    pub fn from_terms(terms: Vec<(i64, Word)>) -> Self {
        FormalElement { terms }.collected()
    }

    /// Single named generator.
    pub fn gen(name: &str, source_dim: u32, target_dim: u32, suspension: bool) -> Self {
        FormalElement::from_word(Word::single(Factor::Gen(GenSymbol {
            name: name.to_string(),
            source_dim,
            target_dim,
            suspension,
        })))
    }

    pub fn iota(dim: u32) -> Self {
        FormalElement::from_word(Word::single(Factor::Iota { dim }))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: i64) -> Self {
        FormalElement {
            terms: self
                .terms
                .iter()
                .map(|(c, w)| (c * k, w.clone()))
                .collect(),
        }
        .collected()
    }

    pub fn add(&self, other: &FormalElement) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        FormalElement { terms }.collected()
    }

    pub fn sub(&self, other: &FormalElement) -> Self {
        self.add(&other.scale(-1))
    }

    /// Collects like words and drops zero coefficients (stable order of
    /// first appearance).
    pub fn collected(self) -> Self {
        let mut out: Vec<(i64, Word)> = Vec::new();
        for (c, w) in self.terms {
            if let Some(entry) = out.iter_mut().find(|(_, v)| *v == w) {
                entry.0 += c;
            } else {
                out.push((c, w));
            }
        }
        out.retain(|(c, _)| *c != 0);
        FormalElement { terms: out }
    }

    /// True if every word chains and all terms share source/target dims.
    pub fn well_formed(&self) -> bool {
        if self.terms.is_empty() {
            return true;
        }
        let src = self.terms[0].1.source_dim();
        let tgt = self.terms[0].1.target_dim();
        self.terms.iter().all(|(_, w)| {
            w.chains() && w.source_dim() == src && w.target_dim() == tgt
        })
    }

    /// True if every term's word is a suspension.
    pub fn is_suspension(&self) -> bool {
        self.terms.iter().all(|(_, w)| w.is_suspension())
    }

    /// Canonical key of a (sorted) element, used for bracket-fact lookup.
    pub fn elem_key(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                if *c == 1 {
                    w.key()
                } else {
                    format!("{c} {}", w.key())
                }
            })
            .collect();
        parts.sort();
        parts.join(" + ")
    }
}

impl fmt::Display for FormalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, w)| {
                if *c == 1 {
                    w.key()
                } else {
                    format!("{c}·{}", w.key())
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
