//! Search and verification toolkit for uniquely `K_r`-saturated graphs.
//!
//! A graph is uniquely `K_r`-saturated when it has no `r`-clique and adding
//! any missing edge creates exactly one. The crate provides
//!
//! * graph and trigraph types, clique machinery and saturation predicates,
//! * an automorphism / canonical-labelling engine ([`symmetry`]),
//! * the orbital-branching search with job splitting ([`search`]),
//! * circulant ("Cayley complement") checks and the two infinite families
//!   ([`cayley`]),
//! * constructions of every known sporadic example ([`atlas`]).

pub mod atlas;
pub mod bits;
pub mod cayley;
pub mod clique;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod saturation;
pub mod search;
pub mod symmetry;
pub mod trigraph;

pub use bits::{BitRow, VertexSet, MAX_VERTICES};
pub use clique::{clique_number, count_r_cliques, count_r_cliques_capped, kr_completions};
pub use error::{Error, Result};
pub use graph::{Graph, Pair};
pub use saturation::{
    delete_dominating_vertex, has_dominating_vertex, is_r_primitive, is_uniquely_kr_saturated,
    Verdict,
};
pub use trigraph::{PairColor, Trigraph};
