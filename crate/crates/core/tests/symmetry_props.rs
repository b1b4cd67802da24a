use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use uksat::graph::all_pairs;
use uksat::symmetry::{
    automorphism_group, canonical_form, gray_pair_orbits, group_order, is_trigraph_automorphism,
    pair_stabilizer, subset_orbit_representatives, Permutation, PermutationGroup,
};
use uksat::{BitRow, Graph, Pair, PairColor, Trigraph, VertexSet};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every element of the group, by closure under the generators.
fn elements(grp: &PermutationGroup) -> Vec<Permutation> {
    let id = Permutation::identity(grp.degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut stack = vec![id];
    while let Some(x) = stack.pop() {
        for g in grp.generators() {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

fn trigraph_from(n: usize, colours: &[u8]) -> Trigraph {
    let mut t = Trigraph::all_gray(n);
    for (p, &c) in all_pairs(n).zip(colours) {
        match c % 3 {
            0 => {
                t.set_black(p);
            }
            1 => {
                t.set_white(p);
            }
            _ => {}
        }
    }
    t
}

fn graph_from(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    for (p, &b) in all_pairs(n).zip(bits) {
        if b {
            g.add_edge(p.u(), p.v());
        }
    }
    g
}

fn arb_trigraph(max: usize) -> impl Strategy<Value = Trigraph> {
    (0..=max).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        // Bias towards gray so that nontrivial groups show up.
        prop::collection::vec(
            prop_oneof![1 => Just(0u8), 1 => Just(1u8), 3 => Just(2u8)],
            m,
        )
        .prop_map(move |c| trigraph_from(n, &c))
    })
}

fn arb_graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let m = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), m).prop_map(move |b| graph_from(n, &b))
    })
}

fn arb_relabelled(min: usize, max: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph(min, max).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn automorphism_order_matches_brute_force(t in arb_trigraph(7)) {
        let grp = automorphism_group(&t);
        for g in grp.generators() {
            prop_assert!(is_trigraph_automorphism(&t, g));
        }
        let n = t.order();
        let brute = permutations(n)
            .into_iter()
            .filter(|p| t.permuted(p) == t)
            .count();
        prop_assert_eq!(u64::try_from(group_order(&grp)).unwrap(), brute as u64);
    }

    #[test]
    fn gray_orbits_partition_gray_pairs(t in arb_trigraph(9)) {
        let grp = automorphism_group(&t);
        let orbits = gray_pair_orbits(&t, &grp);
        let mut union = BTreeSet::new();
        for o in &orbits {
            prop_assert_eq!(o.representative, o.members[0]);
            prop_assert!(o.members.windows(2).all(|w| w[0] < w[1]));
            let set: BTreeSet<Pair> = o.members.iter().copied().collect();
            for g in grp.generators() {
                for p in &o.members {
                    prop_assert!(set.contains(&p.map(g.images())));
                }
            }
            for p in &o.members {
                prop_assert!(union.insert(*p), "pair in two orbits");
                prop_assert_eq!(t.color(*p), PairColor::Gray);
            }
        }
        prop_assert_eq!(union.len(), t.gray_count());
        prop_assert!(orbits.windows(2).all(|w| w[0].representative < w[1].representative));
    }

    #[test]
    fn pair_stabiliser_matches_brute_force(t in arb_trigraph(7), a in 0usize..7, b in 0usize..7) {
        let n = t.order();
        prop_assume!(n >= 2);
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let p = Pair::new(a, b);
        let grp = automorphism_group(&t);
        let stab = pair_stabilizer(&grp, p);
        let brute = elements(&grp)
            .into_iter()
            .filter(|g| p.map(g.images()) == p)
            .count();
        prop_assert_eq!(u64::try_from(stab.order()).unwrap(), brute as u64);
        for g in stab.generators() {
            prop_assert_eq!(p.map(g.images()), p);
        }
    }

    #[test]
    fn subset_orbits_match_brute_force(t in arb_trigraph(7), k in 0usize..4) {
        let n = t.order();
        let grp = automorphism_group(&t);
        let ground = VertexSet::full(n);
        prop_assume!(k <= n);
        let reps = subset_orbit_representatives(&grp, &ground, k);
        let all = elements(&grp);
        let mut orbit_mins = BTreeSet::new();
        let verts: Vec<usize> = (0..n).collect();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: VertexSet = verts.iter().copied().filter(|&v| mask >> v & 1 == 1).collect();
            let min = all
                .iter()
                .map(|g| s.ones().map(|v| g.apply(v)).collect::<VertexSet>())
                .min()
                .unwrap();
            orbit_mins.insert(min);
        }
        let got: Vec<VertexSet> = reps.iter().map(|r| r.representative).collect();
        prop_assert_eq!(got, orbit_mins.into_iter().collect::<Vec<_>>());
        let total: usize = reps.iter().map(|r| r.size).sum();
        let binom = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
        prop_assert_eq!(total, binom);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn canonical_form_is_relabelling_invariant((g, perm) in arb_relabelled(0, 16)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn canonical_form_separates_non_isomorphic(a in arb_graph(5, 6), b in arb_graph(5, 6)) {
        prop_assume!(a.order() == b.order());
        let iso = permutations(a.order()).iter().any(|p| a.relabel(p) == b);
        prop_assert_eq!(canonical_form(&a) == canonical_form(&b), iso);
    }
}

#[test]
fn regular_graphs_stay_invariant() {
    // Strongly regular and vertex-transitive graphs give the refinement
    // nothing to work with, so the search tree carries all the weight.
    let paley13 = {
        let residues = [1, 3, 4, 9, 10, 12];
        let mut g = Graph::empty(13);
        for x in 0..13 {
            for &d in &residues {
                g.add_edge(x, (x + d) % 13);
            }
        }
        g
    };
    let shuffle: Vec<usize> = (0..13).map(|i| (i * 5 + 3) % 13).collect();
    assert_eq!(
        canonical_form(&paley13),
        canonical_form(&paley13.relabel(&shuffle))
    );
    let pet = Graph::petersen();
    let shuffle: Vec<usize> = vec![7, 2, 9, 0, 4, 1, 8, 3, 6, 5];
    assert_eq!(canonical_form(&pet), canonical_form(&pet.relabel(&shuffle)));
    assert_eq!(
        u64::try_from(uksat::symmetry::graph_automorphism_group(&paley13).order()).unwrap(),
        78
    );
}
