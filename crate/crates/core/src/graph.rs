//! Simple undirected graphs stored as adjacency bit rows.

use std::fmt;

use crate::bits::{BitRow, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pair {
    u: usize,
    v: usize,
}

impl Pair {
    /// Panics if `a == b`.
    pub fn new(a: usize, b: usize) -> Pair {
        assert_ne!(a, b, "a pair needs two distinct vertices");
        if a < b {
            Pair { u: a, v: b }
        } else {
            Pair { u: b, v: a }
        }
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// Image under a vertex map.
    pub fn map(&self, image: &[usize]) -> Pair {
        Pair::new(image[self.u], image[self.v])
    }

    /// Index in the colexicographic enumeration of all pairs.
    pub fn index(&self) -> usize {
        self.v * (self.v - 1) / 2 + self.u
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// All pairs `{u, v}` with `u < v < n`, ordered lexicographically.
pub fn all_pairs(n: usize) -> impl Iterator<Item = Pair> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| Pair { u, v }))
}

/// A simple undirected graph on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            rows: vec![VertexSet::new(); n],
        })
    }

    /// Edgeless graph; panics above [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Graph {
        Graph::new(n).expect("graph order")
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for p in all_pairs(n) {
            g.add_edge(p.u, p.v);
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1);
        for i in 1..=leaves {
            g.add_edge(0, i);
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, 5 + i);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n)?;
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { v: x, n });
                }
            }
            if a != b {
                g.add_edge(a, b);
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n && a != b, "bad edge {a}-{b}");
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.n && b < self.n, "bad edge {a}-{b}");
        self.rows[a].remove(b);
        self.rows[b].remove(a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree multiset as sorted `(degree, multiplicity)` pairs.
    pub fn degree_multiset(&self) -> Vec<(usize, usize)> {
        let mut ds = self.degrees();
        ds.sort_unstable();
        let mut out: Vec<(usize, usize)> = Vec::new();
        for d in ds {
            match out.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => out.push((d, 1)),
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.degree_multiset().len() <= 1
    }

    pub fn edges(&self) -> impl Iterator<Item = Pair> + '_ {
        all_pairs(self.n).filter(move |p| self.has_edge(p.u, p.v))
    }

    pub fn non_edges(&self) -> impl Iterator<Item = Pair> + '_ {
        all_pairs(self.n).filter(move |p| !self.has_edge(p.u, p.v))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let rows = (0..self.n)
            .map(|v| {
                let mut r = all.and_not(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, rows }
    }

    /// Every vertex of `self` joined to every vertex of `other`; `other` is
    /// relabelled to follow `self`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for a in 0..self.n {
            for b in 0..other.n {
                g.add_edge(a, self.n + b);
            }
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for p in self.edges() {
            g.add_edge(p.u, p.v);
        }
        for p in other.edges() {
            g.add_edge(self.n + p.u, self.n + p.v);
        }
        g
    }

    /// Graph with vertex `v` renamed to `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Graph {
        assert_eq!(image.len(), self.n);
        let mut g = Graph::empty(self.n);
        for p in self.edges() {
            g.add_edge(image[p.u], image[p.v]);
        }
        g
    }

    /// Subgraph induced by `keep`, relabelled in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let verts: Vec<usize> = keep.ones().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy with the pair `{a, b}` added as an edge.
    pub fn with_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(a, b);
        g
    }

    /// Rows as single machine words; `None` when `n > 64`.
    pub fn word_rows(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.rows.iter().map(|r| r.low_word()).collect())
    }

    /// Human-readable matrix: the order on the first line, then one row of
    /// `0`/`1` characters per vertex.
    pub fn to_adjacency_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for v in 0..self.n {
            for w in 0..self.n {
                s.push(if self.has_edge(v, w) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_adjacency_text(text: &str) -> Result<Graph> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::AdjacencyText("empty input".into()))?;
        let n: usize = header
            .parse()
            .map_err(|_| Error::AdjacencyText(format!("bad order line `{header}`")))?;
        let mut g = Graph::new(n)?;
        for v in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| Error::AdjacencyText(format!("missing row {v}")))?;
            let cells: Vec<char> = line.chars().filter(|c| !c.is_whitespace()).collect();
            if cells.len() != n {
                return Err(Error::AdjacencyText(format!(
                    "row {v} has {} entries, expected {n}",
                    cells.len()
                )));
            }
            for (w, c) in cells.into_iter().enumerate() {
                match c {
                    '0' => {}
                    '1' if w == v => {
                        return Err(Error::AdjacencyText(format!("loop at vertex {v}")))
                    }
                    '1' => g.rows[v].insert(w),
                    other => return Err(Error::AdjacencyText(format!("unexpected `{other}`"))),
                }
            }
        }
        for v in 0..n {
            for w in g.rows[v].ones() {
                if !g.rows[w].contains(v) {
                    return Err(Error::AdjacencyText(format!(
                        "matrix not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, p) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "])")
    }
}
