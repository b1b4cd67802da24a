//! Saturation predicates: unique `K_r`-saturation, dominating vertices and
//! `r`-primitivity.

use std::fmt;

use crate::bits::{BitRow, VertexSet};
use crate::clique::{count_cliques_through, count_r_cliques_capped};
use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};

/// Why a graph is or is not uniquely `K_r`-saturated / `r`-primitive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Uniquely `K_r`-saturated (and, when primitivity was asked for, free
    /// of dominating vertices).
    Yes,
    /// `G` itself contains a `K_r`.
    ContainsClique,
    /// A non-edge whose addition creates no `K_r` (`count == 0`) or more
    /// than one (`count == 2`, meaning "at least two").
    NonEdge { pair: Pair, count: u64 },
    /// A vertex adjacent to every other vertex.
    Dominating { vertex: usize },
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Yes => write!(f, "YES"),
            Verdict::ContainsClique => write!(f, "NO found K_r"),
            Verdict::NonEdge { pair, count: 0 } => {
                write!(f, "NO non-edge {pair} has 0 completions")
            }
            Verdict::NonEdge { pair, .. } => {
                write!(f, "NO non-edge {pair} has >=2 completions")
            }
            Verdict::Dominating { vertex } => write!(f, "NO dominating vertex {vertex}"),
        }
    }
}

fn check_order(g: &Graph, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    if g.order() < r {
        return Err(Error::OrderBelowCliqueSize { n: g.order(), r });
    }
    Ok(())
}

/// Full diagnosis of unique `K_r`-saturation; with `primitive` set, also
/// rejects dominating vertices.
pub fn diagnose(g: &Graph, r: usize, primitive: bool) -> Result<Verdict> {
    check_order(g, r)?;
    if count_r_cliques_capped(g, r, 1) > 0 {
        return Ok(Verdict::ContainsClique);
    }
    for pair in g.non_edges() {
        let count = count_cliques_through(g, pair, r, 2);
        if count != 1 {
            return Ok(Verdict::NonEdge { pair, count });
        }
    }
    if primitive {
        if let Some(vertex) = dominating_vertex(g) {
            return Ok(Verdict::Dominating { vertex });
        }
    }
    Ok(Verdict::Yes)
}

/// `G` is `K_r`-free and every non-edge lies in exactly one `K_r` of `G + e`.
pub fn is_uniquely_kr_saturated(g: &Graph, r: usize) -> Result<bool> {
    Ok(diagnose(g, r, false)?.is_yes())
}

/// First vertex adjacent to all others.
pub fn dominating_vertex(g: &Graph) -> Option<usize> {
    let n = g.order();
    (0..n).find(|&v| g.degree(v) + 1 == n)
}

pub fn has_dominating_vertex(g: &Graph) -> bool {
    dominating_vertex(g).is_some()
}

/// Uniquely `K_r`-saturated with no dominating vertex.
pub fn is_r_primitive(g: &Graph, r: usize) -> Result<bool> {
    Ok(diagnose(g, r, true)?.is_yes())
}

/// `G - v` for a dominating vertex `v`, with labels above `v` shifted down.
pub fn delete_dominating_vertex(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    if g.degree(v) + 1 != n {
        return Err(Error::NotDominating { v });
    }
    let mut keep = VertexSet::full(n);
    keep.remove(v);
    Ok(g.induced(&keep))
}
