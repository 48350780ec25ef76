//! Positive Davio lattice toolkit: GF(2) function algebra, lattice
//! construction, SWAT-gate circuit synthesis, physical layout generation,
//! and layout mapping with exact additional-SWAP accounting.
//!
//! The pipeline runs ESOP text → [`boolfn::EsopFunction`] →
//! [`lattice::DavioLattice`] → [`circuit::SynthesizedCircuit`] →
//! [`mapper::MappingReport`], with brute-force simulation oracles at every
//! stage.

pub mod boolfn;
pub mod circuit;
pub mod error;
pub mod lattice;
pub mod layout;
pub mod mapper;

pub use boolfn::{symmetric_function, Cube, EsopFunction, SymmetryIndexSet, TruthTable, VarSet};
pub use circuit::{
    circuit_unitary, decompose_swap, decompose_swat, decompose_toffoli, simulate_classical,
    synthesize_from_lattice, verify_synthesis, Circuit, DecompositionStyle, Gate, GateKind,
    SwatBlock, SynthesizedCircuit,
};
pub use error::{Error, Result};
pub use lattice::{
    build_lattice, default_max_levels, join_children, symmetric_lattice, DavioLattice,
    LatticeNode, OrderingStrategy,
};
pub use layout::{heavy_hex_layout, square_layout, triangular_layout, LayoutGraph, LayoutKind};
pub use mapper::{
    map_onto, map_to_heavy_hex, map_to_square, map_to_triangular, predicted_swaps, route_swat,
    swat_cnot_cost, swat_swap_cost, sweep_csv, sweep_rows, Mapping, MappingReport,
    SwatConnectivity, SwatWitness,
};
