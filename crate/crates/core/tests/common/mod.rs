//! Brute-force enumeration oracle shared by the search property tests and
//! the acceptance suite. Deliberately independent of the library: plain
//! bitmask adjacency, exhaustive relabelling for canonical forms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use uksat::{graph6, Graph};

/// Edge `k` of the colex pair order for `n` vertices.
fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b in 1..n {
        for a in 0..b {
            out.push((a, b));
        }
    }
    out
}

fn count_cliques(adj: &[u32], cand: u32, k: usize, cap: u32) -> u32 {
    if k == 0 {
        return 1;
    }
    let mut total = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += count_cliques(adj, rest & adj[v], k - 1, cap);
        if total >= cap {
            return cap;
        }
    }
    total
}

fn uniquely_saturated(adj: &[u32], r: usize) -> bool {
    let n = adj.len();
    let all = (1u32 << n) - 1;
    if count_cliques(adj, all, r, 1) > 0 {
        return false;
    }
    for b in 1..n {
        for a in 0..b {
            if adj[a] >> b & 1 == 0 && count_cliques(adj, adj[a] & adj[b], r - 2, 2) != 1 {
                return false;
            }
        }
    }
    true
}

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

/// Smallest edge mask over all relabellings.
pub fn brute_canonical(n: usize, edges: &[(usize, usize)]) -> u64 {
    let index = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        b * (b - 1) / 2 + a
    };
    permutations(n)
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(a, b)| m | 1 << index(p[a], p[b]))
        })
        .min()
        .unwrap_or(0)
}

pub fn brute_canonical_of(g: &Graph) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().map(|p| (p.u(), p.v())).collect();
    brute_canonical(g.order(), &edges)
}

/// Isomorphism classes of uniquely `K_r`-saturated graphs on `n` vertices,
/// by exhaustive enumeration of all labelled graphs. With `primitive`,
/// graphs with a dominating vertex are dropped.
pub fn oracle_classes(n: usize, r: usize, primitive: bool) -> BTreeSet<u64> {
    let pairs = pair_list(n);
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut adj = vec![0u32; n];
        let mut edges = Vec::new();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                edges.push((a, b));
            }
        }
        if !uniquely_saturated(&adj, r) {
            continue;
        }
        if primitive && adj.iter().any(|row| row.count_ones() as usize == n - 1) {
            continue;
        }
        classes.insert(brute_canonical(n, &edges));
    }
    classes
}

/// Brute canonical masks of a search output; panics on duplicates.
pub fn classes_of_output(graphs: &BTreeSet<String>) -> BTreeSet<u64> {
    let classes: BTreeSet<u64> = graphs
        .iter()
        .map(|s| brute_canonical_of(&graph6::decode(s).expect("search output is graph6")))
        .collect();
    assert_eq!(
        classes.len(),
        graphs.len(),
        "search emitted isomorphic graphs twice"
    );
    classes
}
