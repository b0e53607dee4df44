//! Atiyah-Bott localization of `ch χ(O_C, O_C)` over the `ℂ*`-fixed loci.

mod descriptor;
mod engine;

pub use descriptor::{GeometryDescriptor, Incidence, Lint, LintReport, SCurve, SPoint, YPoint, HEADER};
pub use engine::{ext_decompose, ExtDecomposition, Localization, Localizer, PointTerm};
