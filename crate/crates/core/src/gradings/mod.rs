//! Group gradings: data model, verification, universal groups and the named fine gradings.

mod decomposition;
mod group;
mod named;

pub use decomposition::{
    check_grading, induced_derivation_grading, interval_check, refine, universal_group, Component,
    GradedDecomposition, GradingReport, IntervalReport, UniversalGroup, Violation,
};
pub use group::{FgAbelianGroup, GroupElement, GroupHom};
pub use named::{
    build_named_grading, isotropy_check, verify_named_grading, ExpectedRow, ExpectedRowJson, GradingName, ModelName,
    Models, NamedGradingReport,
};
