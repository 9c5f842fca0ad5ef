//! Exact classification of normal simplicial affine semigroups `H = C ∩ Z^d`:
//! Hilbert bases, canonical ideal generators, slimness, the bottom element,
//! Ulrich elements in the plane and the nearly Gorenstein property.

pub mod error;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod semigroup;
pub mod survey;
pub mod trace;
pub mod ulrich;

#[cfg(test)]
mod testutil;

pub use error::{Error, RayDefect, Result};
pub use lattice::{make_primitive, Barycentric, Budget, ConePosition, IntVector, RaySystem};
pub use report::{analyze, parse_input, validate_report, ClassificationReport, Input};
pub use semigroup::{SemigroupModel, SlimVerdict};
pub use survey::{oracle_diff, survey, DiffReport, Mismatch, SurveyRow};
pub use trace::{is_nearly_gorenstein, nearly_fast_path, NearlyGorenstein, TraceCertificate};
pub use ulrich::{
    HStarSet, Mutation, OrientedModel, QuickFilters, SearchResult, Side, UlrichCertificate,
    UlrichVerdict,
};
