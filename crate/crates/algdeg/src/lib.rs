//! Exact-arithmetic toolkit for spectral graph theory over the integers.
//!
//! Everything is computed exactly: characteristic polynomials come from a
//! division-free determinant algorithm, factorization runs over Z via modular
//! factoring plus Hensel lifting, and eigenvalue questions (how many distinct?
//! how large? all real?) are answered with Sturm chains and rational bisection
//! instead of floating point. On top of that sit the domain pieces: closed-form
//! spectra for the classical graph families, an edge-removal descent from the
//! complete graph down to a fixed Hamiltonian cycle, and an exhaustive census
//! of totally real algebraic integers whose conjugates fit in a bounded
//! interval.
//!
//! Modules, roughly bottom-up:
//!
//! * [`intpoly`], [`sturm`], [`polytext`] — dense integer polynomials, real
//!   root counting/isolation, text and JSON forms.
//! * [`graph`], [`gf`], [`graph6`], [`edgelist`] — simple graphs on up to 64
//!   vertices, finite fields for Paley constructions, interchange formats.
//! * [`charpoly`], [`factor`], [`cyclo`] — characteristic polynomials, exact
//!   factorization over Z, cyclotomic helpers.
//! * [`spectra`], [`algint`], [`descent`] — per-graph spectral reports and
//!   scans, algebraic-integer counting and bounds, descent simulation.

#![forbid(unsafe_code)]

pub mod algint;
pub mod arith;
pub mod charpoly;
pub mod cyclo;
pub mod descent;
pub mod edgelist;
pub mod factor;
pub mod gf;
pub mod graph;
pub mod graph6;
pub mod intpoly;
pub mod polytext;
pub mod rng;
pub mod spectra;
pub mod sturm;
mod zmodpoly;

/// Version string stamped into descent trace headers and CLI output.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
