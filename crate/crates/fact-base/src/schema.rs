//! On-disk schema of the fact file. The exact layout is documented in
//! `docs/factfile.md`; unknown keys are rejected everywhere.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactFile {
    pub version: String,
    pub sphere_groups: Vec<SphereGroupRecord>,
    pub facts: Vec<FactRecord>,
    pub gamma: Vec<GammaRecord>,
    pub expected_tables: Vec<ExpectedEntry>,
}

/// π_m(S^n), 2-local, as a list of cyclic summands with named generators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereGroupRecord {
    pub n: u32,
    pub m: u32,
    pub summands: Vec<SphereSummand>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereSummand {
    /// Generator word over the declared atomic symbols.
    pub name: String,
    /// "inf" for a 2-local infinite cyclic summand, else a power of 2.
    pub order: String,
    /// True if the generator is a suspension.
    #[serde(default)]
    pub suspension: bool,
    /// Word one dimension down with Σ(desuspension) = generator, when the
    /// generator is a suspension and the desuspension is curated.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub desuspension: Option<String>,
}

/// A coefficient–word pair; coefficients are r-expressions.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub coeff: String,
    pub word: String,
}

/// One record of the knowledge base. Externally tagged by kind.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum FactRecord {
    /// Declares an atomic class with its mapping dimensions.
    #[serde(rename = "symbol")]
    Symbol(SymbolFact),
    /// left ∘ right = result.
    #[serde(rename = "composition")]
    Composition(CompositionFact),
    /// (t·ι) ∘ word = result.
    #[serde(rename = "degree")]
    Degree(DegreeFact),
    /// Σ(gen) = result factor.
    #[serde(rename = "suspension")]
    Suspension(SuspensionFact),
    /// Second James–Hopf invariant of a word.
    #[serde(rename = "hopf")]
    Hopf(HopfFact),
    /// Expansion of a Whitehead product node.
    #[serde(rename = "whitehead")]
    Whitehead(WhiteheadFact),
    /// Curated Toda bracket with indeterminacy.
    #[serde(rename = "bracket")]
    Bracket(BracketFactRecord),
    /// Image of one generator under the fiber boundary map
    /// π_{m+1}(S^{k+1}) → π_m(F_{k+1}).
    #[serde(rename = "boundary")]
    Boundary(BoundaryFact),
    /// π_m of a fiber skeleton stage as an extension problem: coker-side
    /// summands, ker-side summands, and lift relations.
    #[serde(rename = "jgroup")]
    JGroup(JGroupFact),
    /// Resolution data for the target extension
    /// 0 → Coker ∂_i → π_i(P^n(2^r)) → Ker ∂_{i−1} → 0.
    #[serde(rename = "extension")]
    Extension(ExtensionFact),
    /// A group imported verbatim from a cited external computation.
    #[serde(rename = "imported")]
    Imported(ImportedFact),
}

impl FactRecord {
    pub fn id(&self) -> &str {
        match self {
            FactRecord::Symbol(f) => &f.id,
            FactRecord::Composition(f) => &f.id,
            FactRecord::Degree(f) => &f.id,
            FactRecord::Suspension(f) => &f.id,
            FactRecord::Hopf(f) => &f.id,
            FactRecord::Whitehead(f) => &f.id,
            FactRecord::Bracket(f) => &f.id,
            FactRecord::Boundary(f) => &f.id,
            FactRecord::JGroup(f) => &f.id,
            FactRecord::Extension(f) => &f.id,
            FactRecord::Imported(f) => &f.id,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            FactRecord::Symbol(_) => "symbol",
            FactRecord::Composition(_) => "composition",
            FactRecord::Degree(_) => "degree",
            FactRecord::Suspension(_) => "suspension",
            FactRecord::Hopf(_) => "hopf",
            FactRecord::Whitehead(_) => "whitehead",
            FactRecord::Bracket(_) => "bracket",
            FactRecord::Boundary(_) => "boundary",
            FactRecord::JGroup(_) => "jgroup",
            FactRecord::Extension(_) => "extension",
            FactRecord::Imported(_) => "imported",
        }
    }

    pub fn provenance(&self) -> &str {
        match self {
            FactRecord::Symbol(f) => &f.provenance,
            FactRecord::Composition(f) => &f.provenance,
            FactRecord::Degree(f) => &f.provenance,
            FactRecord::Suspension(f) => &f.provenance,
            FactRecord::Hopf(f) => &f.provenance,
            FactRecord::Whitehead(f) => &f.provenance,
            FactRecord::Bracket(f) => &f.provenance,
            FactRecord::Boundary(f) => &f.provenance,
            FactRecord::JGroup(f) => &f.provenance,
            FactRecord::Extension(f) => &f.provenance,
            FactRecord::Imported(f) => &f.provenance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolFact {
    pub id: String,
    pub name: String,
    pub source: u32,
    pub target: u32,
    #[serde(default)]
    pub suspension: bool,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompositionFact {
    pub id: String,
    /// Key of the left (outer) factor.
    pub left: String,
    /// Key of the right (inner) factor.
    pub right: String,
    pub result: Vec<Term>,
    /// Optional claimed order of the composite, cross-checked by validate.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DegreeFact {
    pub id: String,
    /// Degree, as an r-expression (e.g. "2^r").
    pub t: String,
    pub word: String,
    pub result: Vec<Term>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuspensionFact {
    pub id: String,
    pub gen: String,
    /// Factor key of the suspension.
    pub result: String,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFact {
    pub id: String,
    pub word: String,
    pub result: Vec<Term>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhiteheadFact {
    pub id: String,
    /// Canonical W[..,..] key of the bracket node.
    pub key: String,
    pub result: Vec<Term>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketFactRecord {
    pub id: String,
    /// "f | g | h" element keys.
    pub key: String,
    pub representative: Vec<Term>,
    #[serde(default)]
    pub indeterminacy: Vec<Vec<Term>>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryFact {
    pub id: String,
    /// Bottom-cell dimension of the fiber (the pinch map is on P^{k+1}).
    pub k: u32,
    /// The boundary lands in π_m(F_{k+1}).
    pub m: u32,
    pub r_cond: String,
    /// Generator of π_{m+1}(S^{k+1}) whose image this records.
    pub gen: String,
    /// Image, as combinations of fiber-skeleton generator names.
    pub result: Vec<Term>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JSummand {
    pub name: String,
    /// Order as an r-expression, or "inf".
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LiftRecord {
    /// Name of the ker-side summand generator being lifted.
    pub gen: String,
    /// o(gen) · lift = this combination of coker-side generator names.
    pub target: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JGroupFact {
    pub id: String,
    pub k: u32,
    /// "J2" or "J3".
    pub stage: String,
    pub m: u32,
    pub r_cond: String,
    #[serde(default)]
    pub a_part: Vec<JSummand>,
    #[serde(default)]
    pub c_part: Vec<JSummand>,
    #[serde(default)]
    pub lifts: Vec<LiftRecord>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFact {
    pub id: String,
    pub n: u32,
    pub i: u32,
    pub r_cond: String,
    /// One entry per canonical cyclic summand of Ker ∂_{i−1} (ascending
    /// order); each is the combination of Coker-side generator names that
    /// o(summand)·lift equals. Empty list = relation zero (split summand).
    pub lifts: Vec<Vec<Term>>,
    pub provenance: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ImportedFact {
    pub id: String,
    pub n: u32,
    pub i: u32,
    pub r_cond: String,
    /// Cyclic summand orders as r-expressions.
    pub orders: Vec<String>,
    pub provenance: String,
}

/// Attaching-element data for the fiber skeleta.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaRecord {
    pub k: u32,
    /// 2 or 3.
    pub stage: u32,
    pub terms: Vec<Term>,
    pub provenance: String,
}

/// One expected isomorphism type π_i(P^n(2^r)) for a range of r.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedEntry {
    pub n: u32,
    pub i: u32,
    pub r_cond: String,
    /// Cyclic summand orders as r-expressions (order-1 values are dropped
    /// when evaluated).
    pub orders: Vec<String>,
    /// Which published table or statement the entry transcribes.
    pub source: String,
    pub provenance: String,
}
