//! Anti-van der Waerden numbers of connected graphs.
//!
//! The anti-van der Waerden number aw(G, k) is the least r such that every
//! exact (surjective) r-coloring of V(G) contains a rainbow k-term
//! arithmetic progression, where a k-AP in a graph is a vertex sequence
//! v_1, ..., v_k with d(v_i, v_{i+1}) constant and at least 1. This crate
//! provides the underlying graph machinery (graph6 I/O, distance matrices,
//! Cartesian products), tree structure analysis (spines, branches,
//! peripherality), an exhaustive rainbow-free coloring search with
//! certificates, the constructive diametral colorings, catalogs of small
//! trees and connected graphs, and a registry of verifiable claims.

pub mod ap;
pub mod catalog;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod product;
pub mod schemes;
pub mod search;
pub mod store;
pub mod tree;
pub mod verify;

pub use ap::{
    enumerate_k_aps, is_rainbow, validate_coloring, ArithmeticProgression, ValidationReport,
};
pub use coloring::Coloring;
pub use error::{Error, Result};
pub use search::{aw, find_rainbow_free_coloring, AwResult, SearchStats};
pub use graph::{is_isometric_embedding, Bipartition, DistanceMatrix, Eccentricities, Graph};
pub use graph6::{encode_graph6, parse_auto, parse_edge_list, parse_graph6};
pub use product::{cartesian_product, ProductGraph};
pub use verify::{
    check_certificates_with, claim_info, verify_all, verify_all_with, verify_claim,
    verify_claim_with, ClaimInfo, Profile, VerificationReport, VerifyOptions, CLAIMS,
};
