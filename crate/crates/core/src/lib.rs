//! Circle-equivariant cohomology of Vietoris–Rips metric thickenings of the
//! circle, computed exactly.
//!
//! Angles and scales are rationals in turns (one turn is `2π`), so the
//! critical scales `k/(2k+1)` are compared without rounding.
//!
//! - [`measure`]: finitely supported measures, diameter, membership, W1.
//! - [`arcs`]: excluded regions, μ-arcs and averaging onto regular polygons.
//! - [`join`]: join coordinates, the circle action and the odd covers.
//! - [`rings`]: the cohomology rings, structure maps and scale barcodes.
//! - [`oracle`]: brute-force persistence on evenly spaced samples.
//! - [`cli`]: the `equivart` command-line front end.

pub mod arcs;
pub mod cli;
pub mod error;
pub mod join;
pub mod measure;
pub mod oracle;
pub mod rational;
pub mod rings;
