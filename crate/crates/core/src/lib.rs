//! Exact enumeration of higher-dimensional partitions and the triangle
//! transforms built on top of it.
//!
//! A d-dimensional partition of n is a downward-closed set of n lattice
//! nodes in Z+^{d+1} (its Ferrers diagram). This crate provides:
//!
//! - [`diagram`]: Ferrers diagrams and their per-diagram attributes
//!   (validity, intrinsic/reduced dimension, node types, skew components,
//!   orbit weight, box membership).
//! - [`enumerate`] / [`counts`]: a canonical-tree enumerator (each diagram
//!   reachable from the seed is visited exactly once) with classification
//!   counters for p_d(n), A-columns, C-entries, F-columns and the
//!   rooted-forest refinement. Parallel by subtree splitting when the
//!   `parallel` feature is enabled; results are thread-count independent.
//! - [`triangle`] / [`transform`] / [`hanna`] / [`alpha`] / [`knuth`]:
//!   the exact transform chain p_d(n) <-> A <-> C <-> D, A <-> F, B,
//!   Hanna's T, the alpha/beta triangles and the topological-sequence
//!   convolution. All arithmetic is arbitrary precision.
//! - [`boxext`] / [`series`]: box-restricted triangles, the reduced
//!   triangles Chat/Fhat, and the generating-series box-transform identity
//!   over exact rationals.
//! - [`golden`] / [`suites`] / [`pdn`]: embedded reference tables, the
//!   verifier that compares computed triangles against them, and the
//!   p_d(n) service for n <= 25 driven by the embedded F data.

pub mod alpha;
pub mod binom;
pub mod boxext;
pub mod counts;
pub mod diagram;
pub mod enumerate;
pub mod golden;
pub mod hanna;
pub mod knuth;
pub mod pdn;
pub mod series;
pub mod skew;
pub mod suites;
pub mod transform;
pub mod triangle;

mod error;

pub use error::{Error, Result};
