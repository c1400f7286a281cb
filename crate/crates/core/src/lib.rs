//! Zero mean curvature surfaces of Riemann type in Lorentz-Minkowski
//! 3-space.
//!
//! The ambient space is R^3 with the metric dx^2 + dy^2 - dt^2. A zero
//! mean curvature surface foliated by circles in parallel planes is
//! either rotational or belongs to one of the families in
//! [`families::SurfaceFamily`]: circles may be Euclidean (in spacelike
//! planes), hyperbolic (in timelike planes), or parabolic (in lightlike
//! planes). This crate evaluates those families, classifies the causal
//! character of their points, locates and analyzes lightlike loci
//! (straight lines, with a characteristic invariant mu), and verifies a
//! lightlike-plane family that is an entire graph over the spacelike
//! coordinates.
//!
//! Organization:
//! - [`minkowski`]: the metric, causal characters, cross product,
//!   isometries, and the normal form for lightlike lines
//! - [`quad`]: deterministic adaptive Gauss-Kronrod quadrature
//! - [`families`]: the six surface families and their derivatives
//! - [`classify`]: fundamental forms, causal classification, lightlike
//!   locus search, and closed-form locus predictions
//! - [`characteristic`]: the line invariant alpha, its Riccati constant
//!   mu, and matching against the canonical solution types
//! - [`graph`]: the entire-graph family and its control surfaces
//! - [`mesh`]: grid sampling, PLY and CSV export
//! - [`report`]: JSON report shapes shared with the command line tool

pub mod characteristic;
pub mod classify;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod mesh;
pub mod minkowski;
pub mod quad;
pub mod report;

pub use error::{Error, Result};
