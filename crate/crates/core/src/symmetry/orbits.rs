use std::collections::HashMap;

use super::group::PermutationGroup;
use crate::bits::{BitRow, VertexSet};
use crate::graph::{all_pairs, Pair};
use crate::trigraph::Trigraph;

/// Disjoint-set forest whose roots are always the smallest member.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    /// Root lookup without path compression.
    pub fn find_ref(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn same_ref(&self, a: usize, b: usize) -> bool {
        self.find_ref(a) == self.find_ref(b)
    }
}

/// An orbit of gray pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOrbit {
    /// Sorted lexicographically.
    pub members: Vec<Pair>,
    /// The smallest member.
    pub representative: Pair,
}

impl PairOrbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// An orbit of `k`-subsets, kept as its lexicographically smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetOrbit {
    pub representative: VertexSet,
    pub size: usize,
}

/// Orbits of the gray pairs of `t` under `grp`, ordered by representative.
pub fn gray_pair_orbits(t: &Trigraph, grp: &PermutationGroup) -> Vec<PairOrbit> {
    let gray = t.gray_pairs();
    let mut index = HashMap::with_capacity(gray.len());
    for (i, &p) in gray.iter().enumerate() {
        index.insert(p, i);
    }
    let mut uf = UnionFind::new(gray.len());
    for g in grp.generators() {
        for (i, &p) in gray.iter().enumerate() {
            let j = index[&p.map(g.images())];
            uf.union(i, j);
        }
    }
    collect_orbits(&gray, &mut uf)
        .into_iter()
        .map(|members| PairOrbit {
            representative: members[0],
            members,
        })
        .collect()
}

/// Groups `items` (already sorted) by union-find class; each class keeps
/// the sorted order and classes are ordered by their first member.
fn collect_orbits<T: Copy>(items: &[T], uf: &mut UnionFind) -> Vec<Vec<T>> {
    let mut slot = vec![usize::MAX; items.len()];
    let mut out: Vec<Vec<T>> = Vec::new();
    for i in 0..items.len() {
        let root = uf.find(i);
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Vec::new());
        }
        out[slot[root]].push(items[i]);
    }
    out
}

fn k_subsets(ground: &[usize], k: usize) -> Vec<VertexSet> {
    fn go(ground: &[usize], k: usize, start: usize, cur: &mut VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(*cur);
            return;
        }
        for i in start..=ground.len() - k {
            cur.insert(ground[i]);
            go(ground, k - 1, i + 1, cur, out);
            cur.remove(ground[i]);
        }
    }
    let mut out = Vec::new();
    if k <= ground.len() {
        go(ground, k, 0, &mut VertexSet::new(), &mut out);
    }
    out
}

/// One lexicographically minimal representative per orbit of the
/// `k`-subsets of `ground`, ordered by representative. Generator images
/// that leave `ground` are ignored, so `ground` should be invariant.
pub fn subset_orbit_representatives(
    grp: &PermutationGroup,
    ground: &VertexSet,
    k: usize,
) -> Vec<SubsetOrbit> {
    let subsets = k_subsets(&ground.to_vec(), k);
    let index: HashMap<VertexSet, usize> =
        subsets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut uf = UnionFind::new(subsets.len());
    for g in grp.generators() {
        for (i, s) in subsets.iter().enumerate() {
            let image: VertexSet = s.ones().map(|v| g.apply(v)).collect();
            if let Some(&j) = index.get(&image) {
                uf.union(i, j);
            }
        }
    }
    collect_orbits(&subsets, &mut uf)
        .into_iter()
        .map(|members| SubsetOrbit {
            representative: members[0],
            size: members.len(),
        })
        .collect()
}

/// Orbits of `grp` on points, each sorted, ordered by smallest element.
pub fn point_orbits(grp: &PermutationGroup) -> Vec<Vec<usize>> {
    let n = grp.degree();
    let mut uf = UnionFind::new(n);
    for g in grp.generators() {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    let points: Vec<usize> = (0..n).collect();
    collect_orbits(&points, &mut uf)
}

/// Orbits on all pairs of points (used by tests and by colour-free callers).
pub fn pair_orbits(grp: &PermutationGroup) -> Vec<Vec<Pair>> {
    let n = grp.degree();
    let lex = |p: Pair| p.u() * n - p.u() * (p.u() + 1) / 2 + (p.v() - p.u() - 1);
    let pairs: Vec<Pair> = all_pairs(n).collect();
    let mut uf = UnionFind::new(pairs.len());
    for g in grp.generators() {
        for (i, p) in pairs.iter().enumerate() {
            uf.union(i, lex(p.map(g.images())));
        }
    }
    collect_orbits(&pairs, &mut uf)
}
