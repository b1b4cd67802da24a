use num_bigint::BigUint;

use super::perm::Permutation;
use super::schreier::StabiliserChain;
use crate::error::{Error, Result};
use crate::graph::Pair;

/// A permutation group given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    n: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    /// Group generated by `generators`; identities are dropped.
    pub fn new(n: usize, generators: Vec<Permutation>) -> Result<PermutationGroup> {
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::PermutationDegree {
                expected: n,
                found: g.degree(),
            });
        }
        Ok(PermutationGroup {
            n,
            generators: generators
                .into_iter()
                .filter(|g| !g.is_identity())
                .collect(),
        })
    }

    pub fn trivial(n: usize) -> PermutationGroup {
        PermutationGroup {
            n,
            generators: Vec::new(),
        }
    }

    /// The symmetric group on `n` points, from a transposition and an `n`-cycle.
    pub fn symmetric(n: usize) -> PermutationGroup {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::from_cycles(n, &[&[0, 1]]));
        }
        if n >= 3 {
            let cycle: Vec<usize> = (0..n).collect();
            gens.push(Permutation::from_cycles(n, &[&cycle]));
        }
        PermutationGroup {
            n,
            generators: gens,
        }
    }

    /// The dihedral group of the `n`-gon.
    pub fn dihedral(n: usize) -> PermutationGroup {
        let rotation =
            Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).expect("rotation");
        let reflection =
            Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).expect("reflection");
        PermutationGroup::new(n, vec![rotation, reflection]).expect("degree")
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn order(&self) -> BigUint {
        group_order(self)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        StabiliserChain::new(self.n, &self.generators, &[]).contains(g)
    }
}

/// Exact order of the group, via a stabiliser chain.
pub fn group_order(grp: &PermutationGroup) -> BigUint {
    StabiliserChain::new(grp.n, &grp.generators, &[]).order()
}

/// Generators of the set-wise stabiliser of `p`.
///
/// The point-wise stabiliser of `u, v` comes from a chain with base prefix
/// `[u, v]`; one extra element swapping `u` and `v` is added when it exists.
pub fn pair_stabilizer(grp: &PermutationGroup, p: Pair) -> PermutationGroup {
    let (u, v) = (p.u(), p.v());
    let chain = StabiliserChain::new(grp.n, &grp.generators, &[u, v]);
    let mut gens = chain.stabiliser_generators(2);
    if let Some(to_v) = chain.transversal(0, v) {
        // Need h in G_u with h(v) = to_v^-1(u); then h followed by to_v swaps u and v.
        let y = to_v.inverse().apply(u);
        if let Some(h) = chain.transversal(1, y) {
            let swap = h.then(to_v);
            debug_assert!(swap.apply(u) == v && swap.apply(v) == u);
            gens.push(swap);
        }
    }
    PermutationGroup::new(grp.n, gens).expect("degree")
}
