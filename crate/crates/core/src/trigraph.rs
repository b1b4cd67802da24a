//! Trigraphs: partial graphs whose vertex pairs are black (edge), white
//! (non-edge) or gray (undecided).

use std::fmt;

use crate::bits::BitRow;
use crate::error::{Error, Result};
use crate::graph::{all_pairs, Graph, Pair};

/// Largest trigraph order handled by the search engine.
pub const MAX_TRIGRAPH_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairColor {
    Black,
    White,
    Gray,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Trigraph {
    n: usize,
    black: Vec<u64>,
    white: Vec<u64>,
}

impl Trigraph {
    /// All-gray trigraph.
    pub fn new(n: usize) -> Result<Trigraph> {
        if n > MAX_TRIGRAPH_ORDER {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_TRIGRAPH_ORDER,
            });
        }
        Ok(Trigraph {
            n,
            black: vec![0; n],
            white: vec![0; n],
        })
    }

    pub fn all_gray(n: usize) -> Trigraph {
        Trigraph::new(n).expect("trigraph order")
    }

    /// The fully assigned trigraph of a graph: edges black, non-edges white.
    pub fn from_graph(g: &Graph) -> Result<Trigraph> {
        let n = g.order();
        let black = g.word_rows().ok_or(Error::TooManyVertices {
            n,
            max: MAX_TRIGRAPH_ORDER,
        })?;
        let full = u64::full(n);
        let white = (0..n)
            .map(|v| full.and_not(&black[v]) & !(1u64 << v))
            .collect();
        Ok(Trigraph { n, black, white })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn black_rows(&self) -> &[u64] {
        &self.black
    }

    pub fn white_rows(&self) -> &[u64] {
        &self.white
    }

    pub fn black_row(&self, v: usize) -> u64 {
        self.black[v]
    }

    pub fn white_row(&self, v: usize) -> u64 {
        self.white[v]
    }

    /// Gray partners of `v`.
    pub fn gray_row(&self, v: usize) -> u64 {
        u64::full(self.n) & !(self.black[v] | self.white[v] | (1u64 << v))
    }

    pub fn color(&self, p: Pair) -> PairColor {
        if self.black[p.u()].contains(p.v()) {
            PairColor::Black
        } else if self.white[p.u()].contains(p.v()) {
            PairColor::White
        } else {
            PairColor::Gray
        }
    }

    pub fn is_gray(&self, p: Pair) -> bool {
        self.color(p) == PairColor::Gray
    }

    /// Colour `p` black. Returns `false` (leaving `self` unchanged) if `p` is white.
    pub fn set_black(&mut self, p: Pair) -> bool {
        if self.white[p.u()].contains(p.v()) {
            return false;
        }
        self.black[p.u()].insert(p.v());
        self.black[p.v()].insert(p.u());
        true
    }

    /// Colour `p` white. Returns `false` (leaving `self` unchanged) if `p` is black.
    pub fn set_white(&mut self, p: Pair) -> bool {
        if self.black[p.u()].contains(p.v()) {
            return false;
        }
        self.white[p.u()].insert(p.v());
        self.white[p.v()].insert(p.u());
        true
    }

    pub fn gray_pairs(&self) -> Vec<Pair> {
        all_pairs(self.n).filter(|&p| self.is_gray(p)).collect()
    }

    pub fn has_gray(&self) -> bool {
        (0..self.n).any(|v| self.gray_row(v) != 0)
    }

    pub fn gray_count(&self) -> usize {
        (0..self.n).map(|v| self.gray_row(v).len()).sum::<usize>() / 2
    }

    /// Vertices lying in at least one black or white pair.
    pub fn touched(&self) -> u64 {
        let mut t = 0u64;
        for v in 0..self.n {
            if self.black[v] | self.white[v] != 0 {
                t.insert(v);
            }
        }
        t
    }

    /// Graph of the black pairs.
    pub fn black_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            for w in self.black[v].ones().filter(|&w| w > v) {
                g.add_edge(v, w);
            }
        }
        g
    }

    /// Image under the vertex map `image`.
    pub fn permuted(&self, image: &[usize]) -> Trigraph {
        let mut t = Trigraph::all_gray(self.n);
        for v in 0..self.n {
            for w in self.black[v].ones() {
                t.black[image[v]].insert(image[w]);
            }
            for w in self.white[v].ones() {
                t.white[image[v]].insert(image[w]);
            }
        }
        t
    }
}

impl fmt::Debug for Trigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Trigraph(n={})", self.n)?;
        for v in 0..self.n {
            for w in 0..self.n {
                let c = if v == w {
                    '.'
                } else {
                    match self.color(Pair::new(v, w)) {
                        PairColor::Black => 'B',
                        PairColor::White => 'w',
                        PairColor::Gray => '-',
                    }
                };
                write!(f, "{c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
