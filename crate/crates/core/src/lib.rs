//! Adjacency energy of general hypergraphs.
//!
//! The adjacency matrix of a hypergraph records pair codegrees: entry
//! `(i, j)` counts the edges containing both vertices, and the energy is the
//! sum of the absolute values of the eigenvalues of that matrix. This crate
//! provides the data model and structural queries ([`hypergraph`]), numeric
//! and exact spectra ([`spectra`], [`eigen`], [`exact`]), family builders
//! and binary operations with closed-form spectra ([`constructions`]),
//! vertex/edge deletion and edge division with their energy-gap theorems
//! ([`surgery`]), and a suite of spectral energy bounds ([`bounds`]).
//!
//! The crate is `no_std` (with `alloc`); parsing, serialization, and the
//! command-line front end live in the companion `hyperspec` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod constructions;
pub mod eigen;
pub mod error;
pub mod exact;
pub mod hypergraph;
pub mod spectra;
pub mod surgery;

pub use error::Error;
pub use hypergraph::{
    DegreeStats, Edge, EdgeDivision, Hypergraph, Mode, VertexId, WeakCutSpec, WeakCutVerdict,
    DEFAULT_WEAK_CUT_BUDGET,
};
pub use spectra::{
    AdjacencyMatrix, EnergyReport, Parity, Spectrum, DEFAULT_EIGEN_TOL, DEFAULT_EXACT_CAP,
};

pub type Result<T> = core::result::Result<T, Error>;
