//! Brute-force persistence on finite circle samples.
//!
//! For `n` evenly spaced points the Vietoris–Rips complex and the metric
//! thickening agree up to homeomorphism, so ordinary persistent homology
//! of the sampled complex gives an independent check on the continuum
//! band structure.

pub mod compare;
pub mod filtration;
pub mod fixed;
pub mod reduction;

pub use compare::{betti, compare_with_theory, near_critical_ratio, Prediction, TheoryReport};
pub use filtration::{build_filtration, build_filtration_with_budget, Filtration, Simplex};
pub use fixed::{first_fixed_scale, fixed_subcomplex, regular_polygon_diameter, FixedSubcomplex};
pub use reduction::{persistent_homology, Bar, Barcode, CoefficientField};
