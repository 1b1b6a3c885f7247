//! Core analysis kernels for the settlement typology and heat-exposure pipeline.
//!
//! Everything in this crate is pure computation over in-memory data: planar
//! geometry and settlement-complex merging, analysis-grid coverage, single-band
//! rasters with zonal statistics, spectral/terrain descriptors, road-network
//! metrics, must-link constrained k-means with model-selection diagnostics, and
//! land-surface-temperature distribution statistics. File formats, path
//! handling, and the command-line driver live in the companion `favtyp-cli`
//! crate.
//!
//! The crate is `no_std`-compatible (`alloc` required). Builds without the
//! default `std` feature must enable `libm` for floating-point math.
//!
//! Determinism is a hard contract throughout: identical inputs (and seeds)
//! produce bit-identical outputs. All iteration that feeds floating-point
//! accumulation runs in a fixed documented order, and containers with
//! unstable ordering are avoided.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("favtyp-core requires the `std` feature or the `libm` feature");

pub mod clustering;
pub mod complexes;
pub mod features;
pub mod geom;
pub mod grid;
pub mod lst;
mod math;
pub mod raster;
pub mod rng;
pub mod roadnet;

mod error;

pub use error::{Error, Result};
pub use geom::{Point2D, PolygonGeom, Rect};
pub use grid::{CellId, Grid, GridCell};
