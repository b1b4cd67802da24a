//! Individualisation-refinement on vertex-coloured graphs.
//!
//! Every choice made here (splitter order, cell order, target cell) depends
//! only on cell positions and adjacency counts, never on vertex labels, so
//! isomorphic inputs produce isomorphic search trees.

use std::collections::VecDeque;

use super::orbits::UnionFind;
use super::perm::Permutation;
use crate::bits::BitRow;

pub(crate) struct ColouredGraph<B> {
    pub rows: Vec<B>,
    pub colours: Vec<u32>,
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).rotate_left(17);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone)]
struct Node<B> {
    cells: Vec<B>,
    trace: Vec<u64>,
    fixed: Vec<usize>,
}

struct Leaf<B> {
    trace: Vec<u64>,
    lab: Vec<usize>,
    graph: Vec<B>,
}

impl<B: BitRow> Node<B> {
    fn root(g: &ColouredGraph<B>) -> Node<B> {
        let mut colours: Vec<u32> = g.colours.clone();
        colours.sort_unstable();
        colours.dedup();
        let mut h = mix(0, g.rows.len() as u64);
        let cells: Vec<B> = colours
            .iter()
            .map(|&c| {
                let mut cell = B::default();
                for (v, _) in g.colours.iter().enumerate().filter(|(_, &cv)| cv == c) {
                    cell.insert(v);
                }
                h = mix(mix(h, c as u64), cell.len() as u64);
                cell
            })
            .collect();
        let mut node = Node {
            cells: cells.clone(),
            trace: Vec::new(),
            fixed: Vec::new(),
        };
        let r = node.refine(&g.rows, cells.into_iter().collect());
        node.trace.push(mix(h, r));
        node
    }

    /// Refines to the coarsest equitable partition below the current one.
    fn refine(&mut self, rows: &[B], mut queue: VecDeque<B>) -> u64 {
        let mut h = 0u64;
        let mut buckets: Vec<(usize, B)> = Vec::new();
        while let Some(splitter) = queue.pop_front() {
            let mut i = 0;
            while i < self.cells.len() {
                let cell = self.cells[i];
                if cell.len() == 1 {
                    i += 1;
                    continue;
                }
                buckets.clear();
                for v in cell.ones() {
                    let c = rows[v].and(&splitter).len();
                    match buckets.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, s)) => s.insert(v),
                        None => buckets.push((c, B::singleton(v))),
                    }
                }
                if buckets.len() == 1 {
                    i += 1;
                    continue;
                }
                buckets.sort_unstable_by_key(|b| b.0);
                h = mix(h, i as u64);
                for &(c, s) in &buckets {
                    h = mix(mix(h, c as u64), s.len() as u64);
                    queue.push_back(s);
                }
                let pieces = buckets.len();
                self.cells.splice(i..=i, buckets.iter().map(|b| b.1));
                i += pieces;
            }
        }
        mix(h, self.cells.len() as u64)
    }

    /// First largest non-singleton cell.
    fn target(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for (i, c) in self.cells.iter().enumerate() {
            let len = c.len();
            if len > 1 && best.map_or(true, |(_, l)| len > l) {
                best = Some((i, len));
            }
        }
        best.map(|(i, _)| i)
    }

    fn child(&self, rows: &[B], cell: usize, v: usize) -> Node<B> {
        let mut node = self.clone();
        let mut rest = node.cells[cell];
        rest.remove(v);
        node.cells[cell] = B::singleton(v);
        node.cells.insert(cell + 1, rest);
        node.fixed.push(v);
        let h = node.refine(rows, VecDeque::from([B::singleton(v)]));
        node.trace.push(mix(h, cell as u64));
        node
    }

    fn leaf(&self, rows: &[B]) -> Leaf<B> {
        let lab: Vec<usize> = self
            .cells
            .iter()
            .map(|c| c.first().expect("cell"))
            .collect();
        Leaf {
            trace: self.trace.clone(),
            graph: relabelled(rows, &lab),
            lab,
        }
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.cells.len() == n
    }
}

/// Adjacency of the graph in which position `i` holds vertex `lab[i]`.
fn relabelled<B: BitRow>(rows: &[B], lab: &[usize]) -> Vec<B> {
    let mut pos = vec![0; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter()
        .map(|&v| {
            let mut row = B::default();
            for w in rows[v].ones() {
                row.insert(pos[w]);
            }
            row
        })
        .collect()
}

/// The permutation sending `from[i]` to `to[i]`.
fn leaf_map(from: &[usize], to: &[usize]) -> Permutation {
    let mut map = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        map[a] = b;
    }
    Permutation::from_images(map).expect("leaf labellings are bijections")
}

fn fixing<'a>(
    gens: &'a [Permutation],
    fixed: &'a [usize],
) -> impl Iterator<Item = &'a Permutation> {
    gens.iter()
        .filter(move |g| fixed.iter().all(|&x| g.fixes(x)))
}

fn orbit_partition<'a>(n: usize, gens: impl Iterator<Item = &'a Permutation>) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for g in gens {
        for x in 0..n {
            uf.union(x, g.apply(x));
        }
    }
    uf
}

pub(crate) struct Search<'a, B> {
    g: &'a ColouredGraph<B>,
    n: usize,
}

impl<'a, B: BitRow> Search<'a, B> {
    pub fn new(g: &'a ColouredGraph<B>) -> Self {
        Search { g, n: g.rows.len() }
    }

    /// A generating set of the colour-preserving automorphism group.
    ///
    /// Walks back up the first path; at each level every target-cell vertex
    /// not yet known to share an orbit with the first-path choice gets its
    /// subtree searched for a leaf equivalent to the first leaf. The
    /// generators found form a strong generating set relative to the
    /// first-path base, so they generate the whole group.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let rows = &self.g.rows;
        let mut path = vec![Node::root(self.g)];
        let mut targets = Vec::new();
        while let Some(t) = path.last().unwrap().target() {
            let node = path.last().unwrap();
            let v = node.cells[t].first().unwrap();
            targets.push(t);
            let next = node.child(rows, t, v);
            path.push(next);
        }
        let first = path.last().unwrap().leaf(rows);
        let mut gens: Vec<Permutation> = Vec::new();
        for level in (0..targets.len()).rev() {
            let node = &path[level];
            let t = targets[level];
            let chosen = path[level + 1].fixed[level];
            let mut uf = orbit_partition(self.n, gens.iter());
            let mut failed = Vec::new();
            for w in node.cells[t].ones() {
                if uf.same(w, chosen) || failed.iter().any(|&f| uf.same(f, w)) {
                    continue;
                }
                let child = node.child(rows, t, w);
                match self.find_equivalent(&child, &first, &gens) {
                    Some(lab) => {
                        let gamma = leaf_map(&first.lab, &lab);
                        for x in 0..self.n {
                            uf.union(x, gamma.apply(x));
                        }
                        gens.push(gamma);
                    }
                    None => failed.push(w),
                }
            }
        }
        gens
    }

    fn find_equivalent(
        &self,
        node: &Node<B>,
        target: &Leaf<B>,
        gens: &[Permutation],
    ) -> Option<Vec<usize>> {
        let depth = node.trace.len() - 1;
        if depth >= target.trace.len() || node.trace[depth] != target.trace[depth] {
            return None;
        }
        let rows = &self.g.rows;
        if node.is_discrete(self.n) {
            let leaf = node.leaf(rows);
            return (leaf.graph == target.graph).then_some(leaf.lab);
        }
        let t = node.target()?;
        let uf = orbit_partition(self.n, fixing(gens, &node.fixed));
        let mut tried = Vec::new();
        for w in node.cells[t].ones() {
            if tried.iter().any(|&f| uf.same_ref(f, w)) {
                continue;
            }
            tried.push(w);
            if let Some(lab) = self.find_equivalent(&node.child(rows, t, w), target, gens) {
                return Some(lab);
            }
        }
        None
    }

    /// Labelling (position -> vertex) of the leaf with the greatest
    /// `(trace, relabelled adjacency)` key. `gens` must generate the full
    /// automorphism group.
    pub fn canonical_labelling(&self, gens: &[Permutation]) -> Vec<usize> {
        let mut best: Option<Leaf<B>> = None;
        self.best_leaf(&Node::root(self.g), gens, &mut best);
        best.map(|l| l.lab).unwrap_or_default()
    }

    fn best_leaf(&self, node: &Node<B>, gens: &[Permutation], best: &mut Option<Leaf<B>>) {
        if let Some(b) = best {
            let k = node.trace.len().min(b.trace.len());
            if node.trace[..k] < b.trace[..k] {
                return;
            }
        }
        let rows = &self.g.rows;
        if node.is_discrete(self.n) {
            let leaf = node.leaf(rows);
            let better = match best {
                None => true,
                Some(b) => (&leaf.trace, &leaf.graph) > (&b.trace, &b.graph),
            };
            if better {
                *best = Some(leaf);
            }
            return;
        }
        let Some(t) = node.target() else { return };
        let mut uf = orbit_partition(self.n, fixing(gens, &node.fixed));
        let mut seen = Vec::new();
        for w in node.cells[t].ones() {
            let root = uf.find(w);
            if seen.contains(&root) {
                continue;
            }
            seen.push(root);
            self.best_leaf(&node.child(rows, t, w), gens, best);
        }
    }
}
