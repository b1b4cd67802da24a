//! Automorphism groups, canonical forms and orbit computations.
//!
//! A trigraph is turned into a vertex-coloured simple graph on `2n`
//! vertices: vertex `v` has copies `v` (layer 0) and `n + v` (layer 1)
//! joined by a rung, black pairs are edges of layer 0, gray pairs edges of
//! layer 1, and the layers get different colours. Colour-preserving
//! automorphisms of that graph are exactly the trigraph automorphisms.

mod group;
mod orbits;
mod perm;
mod refine;
mod schreier;

pub use group::{group_order, pair_stabilizer, PermutationGroup};
pub use orbits::{
    gray_pair_orbits, pair_orbits, point_orbits, subset_orbit_representatives, PairOrbit,
    SubsetOrbit,
};
pub use perm::Permutation;
pub use schreier::StabiliserChain;

use crate::bits::{BitRow, VertexSet};
use crate::graph::Graph;
use crate::graph6;
use crate::trigraph::Trigraph;
use refine::{ColouredGraph, Search};

fn layered<B: BitRow>(t: &Trigraph) -> ColouredGraph<B> {
    let n = t.order();
    let mut rows = vec![B::default(); 2 * n];
    for v in 0..n {
        rows[v].insert(n + v);
        rows[n + v].insert(v);
        for w in t.black_row(v).ones() {
            rows[v].insert(w);
        }
        for w in t.gray_row(v).ones() {
            rows[n + v].insert(n + w);
        }
    }
    let colours = (0..2 * n).map(|x| (x >= n) as u32).collect();
    ColouredGraph { rows, colours }
}

fn restrict(gens: Vec<Permutation>, n: usize) -> Vec<Permutation> {
    gens.into_iter()
        .map(|g| Permutation::from_images(g.images()[..n].to_vec()).expect("layer 0 is invariant"))
        .collect()
}

/// Whether `g` maps black pairs to black, white to white and gray to gray.
pub fn is_trigraph_automorphism(t: &Trigraph, g: &Permutation) -> bool {
    let n = t.order();
    g.degree() == n
        && (0..n).all(|v| {
            g.apply_word(t.black_row(v)) == t.black_row(g.apply(v))
                && g.apply_word(t.white_row(v)) == t.white_row(g.apply(v))
        })
}

/// Generators of the colour-preserving automorphism group of `t`.
pub fn automorphism_group(t: &Trigraph) -> PermutationGroup {
    let n = t.order();
    let gens = if 2 * n <= 64 {
        Search::new(&layered::<u64>(t)).automorphisms()
    } else {
        Search::new(&layered::<VertexSet>(t)).automorphisms()
    };
    let gens = restrict(gens, n);
    for g in &gens {
        assert!(
            is_trigraph_automorphism(t, g),
            "refinement produced a non-automorphism {g}"
        );
    }
    PermutationGroup::new(n, gens).expect("degree")
}

fn plain<B: BitRow>(rows: Vec<B>) -> ColouredGraph<B> {
    let colours = vec![0; rows.len()];
    ColouredGraph { rows, colours }
}

/// Generators of `Aut(g)`.
pub fn graph_automorphism_group(g: &Graph) -> PermutationGroup {
    let gens = match g.word_rows() {
        Some(rows) => Search::new(&plain(rows)).automorphisms(),
        None => Search::new(&plain(g.rows().to_vec())).automorphisms(),
    };
    PermutationGroup::new(g.order(), gens).expect("degree")
}

/// Canonical labelling as a vertex map: vertex `v` goes to `image[v]`.
pub fn canonical_labelling(g: &Graph) -> Vec<usize> {
    fn run<B: BitRow>(rows: Vec<B>) -> Vec<usize> {
        let cg = plain(rows);
        let search = Search::new(&cg);
        let gens = search.automorphisms();
        search.canonical_labelling(&gens)
    }
    let lab = match g.word_rows() {
        Some(rows) => run(rows),
        None => run(g.rows().to_vec()),
    };
    let mut image = vec![0; lab.len()];
    for (pos, &v) in lab.iter().enumerate() {
        image[v] = pos;
    }
    image
}

/// graph6 text of the canonically relabelled graph; equal for two graphs
/// exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> String {
    graph6::encode(&g.relabel(&canonical_labelling(g)))
}
