//! Exact linear algebra over finitely generated abelian groups localized
//! at 2: integer matrices, Smith normal form, canonical group
//! presentations, homomorphism calculus (kernel / cokernel / image /
//! exactness), Ext groups, and resolution of extension problems under
//! lifting constraints.
//!
//! Everything is computed with arbitrary-precision integers; no floating
//! point appears anywhere in this crate. All values are immutable after
//! construction and operations are pure functions.

#![forbid(unsafe_code)]

pub mod error;
pub mod ext;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod snf;

pub use error::{AbelianError, Result};
pub use ext::{
    extension_maps_from_lift_relations, extension_maps_with_named_lifts,
    extension_with_named_lifts,
    enumerate_extensions, enumerate_extensions_bounded, ext1, extension_from_lift_relations,
    is_pure_cyclic_summand, resolve_extension, ExtensionCandidate, ExtensionCandidateSet,
    ExtensionConstraint, DEFAULT_EXTENSION_BOUND,
};
pub use group::{
    group_from_presentation, presentation_to_group, FgAbGroup, GroupElement, IsoType, Order,
    PresentationData,
};
pub use hom::{cokernel, image, is_exact, kernel, order_coherent, Homomorphism};
pub use matrix::IntMatrix;
pub use snf::{left_kernel_basis, row_lattice_contains, smith_normal_form, solve_left, SnfDecomposition};
