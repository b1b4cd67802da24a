//! Bit-parallel clique counting, maximum clique and `K_r`-completions.
//!
//! The routines are generic over [`BitRow`] so that graphs with at most 64
//! vertices run on single machine words. Pruning uses greedy colouring: a
//! candidate set that can be properly coloured with fewer than `k` colours
//! holds no `k`-clique.

use crate::bits::{BitRow, VertexSet};
use crate::graph::{Graph, Pair};
use crate::trigraph::Trigraph;

/// Greedy sequential colouring of `cand`. Returns vertices ordered by
/// colour class together with their (1-based) colours, non-decreasing.
fn greedy_colour<B: BitRow>(rows: &[B], cand: B, order: &mut Vec<usize>, colours: &mut Vec<u32>) {
    order.clear();
    colours.clear();
    let mut uncoloured = cand;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut q = uncoloured;
        while let Some(v) = q.pop_first() {
            uncoloured.remove(v);
            q = q.and_not(&rows[v]);
            order.push(v);
            colours.push(colour);
        }
    }
}

struct Counter<'a, B> {
    rows: &'a [B],
    cap: u64,
    count: u64,
}

impl<B: BitRow> Counter<'_, B> {
    fn done(&self) -> bool {
        self.count >= self.cap
    }

    fn run(&mut self, cand: B, k: usize) {
        match k {
            0 => {
                self.count += 1;
                return;
            }
            1 => {
                self.count += cand.len() as u64;
                return;
            }
            2 => {
                let mut rest = cand;
                while let Some(v) = rest.pop_first() {
                    self.count += rest.and(&self.rows[v]).len() as u64;
                    if self.done() {
                        return;
                    }
                }
                return;
            }
            _ => {}
        }
        if cand.len() < k {
            return;
        }
        let mut order = Vec::with_capacity(cand.len());
        let mut colours = Vec::with_capacity(cand.len());
        greedy_colour(self.rows, cand, &mut order, &mut colours);
        let mut remaining = cand;
        for idx in (0..order.len()).rev() {
            if (colours[idx] as usize) < k {
                break;
            }
            let v = order[idx];
            remaining.remove(v);
            self.run(remaining.and(&self.rows[v]), k - 1);
            if self.done() {
                return;
            }
        }
    }
}

/// Number of `k`-cliques inside `cand`, stopping once `cap` is reached.
pub fn count_cliques_in<B: BitRow>(rows: &[B], cand: B, k: usize, cap: u64) -> u64 {
    let mut c = Counter {
        rows,
        cap,
        count: 0,
    };
    c.run(cand, k);
    c.count.min(cap)
}

/// Whether `cand` holds at least one `k`-clique.
pub fn has_clique_in<B: BitRow>(rows: &[B], cand: B, k: usize) -> bool {
    count_cliques_in(rows, cand, k, 1) > 0
}

/// Size of a maximum clique inside `cand`.
pub fn max_clique_in<B: BitRow>(rows: &[B], cand: B) -> usize {
    fn expand<B: BitRow>(rows: &[B], cand: B, size: usize, best: &mut usize) {
        let mut order = Vec::with_capacity(cand.len());
        let mut colours = Vec::with_capacity(cand.len());
        greedy_colour(rows, cand, &mut order, &mut colours);
        let mut remaining = cand;
        for idx in (0..order.len()).rev() {
            if size + colours[idx] as usize <= *best {
                return;
            }
            let v = order[idx];
            remaining.remove(v);
            let next = remaining.and(&rows[v]);
            if next.is_empty() {
                *best = (*best).max(size + 1);
            } else {
                expand(rows, next, size + 1, best);
            }
        }
    }
    let mut best = 0;
    if !cand.is_empty() {
        expand(rows, cand, 0, &mut best);
    }
    best
}

/// All `k`-cliques inside `cand` in lexicographic order.
pub fn list_cliques_in<B: BitRow>(rows: &[B], cand: B, k: usize) -> Vec<Vec<usize>> {
    fn go<B: BitRow>(
        rows: &[B],
        cand: B,
        k: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        if k >= 3 {
            let mut order = Vec::with_capacity(cand.len());
            let mut colours = Vec::with_capacity(cand.len());
            greedy_colour(rows, cand, &mut order, &mut colours);
            if colours.last().map_or(true, |&c| (c as usize) < k) {
                return;
            }
        }
        let mut rest = cand;
        while let Some(v) = rest.pop_first() {
            if rest.len() + 1 < k {
                return;
            }
            cur.push(v);
            go(rows, rest.and(&rows[v]), k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(rows, cand, k, &mut Vec::new(), &mut out);
    out
}

/// Calls `f` on every maximal clique (Bron–Kerbosch with pivoting).
pub fn for_each_maximal_clique<B: BitRow>(rows: &[B], n: usize, mut f: impl FnMut(&[usize])) {
    fn bk<B: BitRow>(rows: &[B], r: &mut Vec<usize>, p: B, x: B, f: &mut dyn FnMut(&[usize])) {
        if p.is_empty() {
            if x.is_empty() {
                f(r);
            }
            return;
        }
        let pivot = p
            .or(&x)
            .ones()
            .max_by_key(|&u| p.and(&rows[u]).len())
            .expect("nonempty");
        let mut p = p;
        let mut x = x;
        for v in p.and_not(&rows[pivot]).ones() {
            r.push(v);
            bk(rows, r, p.and(&rows[v]), x.and(&rows[v]), f);
            r.pop();
            p.remove(v);
            x.insert(v);
        }
    }
    bk(rows, &mut Vec::new(), B::full(n), B::default(), &mut f);
}

fn dispatch<R>(
    g: &Graph,
    small: impl FnOnce(&[u64]) -> R,
    wide: impl FnOnce(&[VertexSet]) -> R,
) -> R {
    match g.word_rows() {
        Some(rows) => small(&rows),
        None => wide(g.rows()),
    }
}

/// Exact number of `r`-cliques of `g`.
pub fn count_r_cliques(g: &Graph, r: usize) -> u64 {
    count_r_cliques_capped(g, r, u64::MAX)
}

/// Number of `r`-cliques of `g`, saturating at `cap` (a cap of 2 is enough
/// for uniqueness tests).
pub fn count_r_cliques_capped(g: &Graph, r: usize, cap: u64) -> u64 {
    if r > g.order() {
        return 0;
    }
    let n = g.order();
    dispatch(
        g,
        |rows| count_cliques_in(rows, u64::full(n), r, cap),
        |rows| count_cliques_in(rows, VertexSet::full(n), r, cap),
    )
}

/// Number of `r`-cliques of `g` that contain both endpoints of `p`,
/// where `p` is treated as an edge whether or not it is one.
pub fn count_cliques_through(g: &Graph, p: Pair, r: usize, cap: u64) -> u64 {
    if r < 2 {
        return 0;
    }
    let common = g.neighbors(p.u()).and(g.neighbors(p.v()));
    dispatch(
        g,
        |rows| count_cliques_in(rows, common.low_word(), r - 2, cap),
        |rows| count_cliques_in(rows, common, r - 2, cap),
    )
}

/// Clique number `omega(g)`.
pub fn clique_number(g: &Graph) -> usize {
    let n = g.order();
    dispatch(
        g,
        |rows| max_clique_in(rows, u64::full(n)),
        |rows| max_clique_in(rows, VertexSet::full(n)),
    )
}

/// Clique number of a vertex-transitive graph: every maximum clique can be
/// moved onto vertex 0, so only its neighbourhood is searched.
pub fn clique_number_transitive(g: &Graph) -> usize {
    if g.order() == 0 {
        return 0;
    }
    let cand = *g.neighbors(0);
    1 + dispatch(
        g,
        |rows| max_clique_in(rows, cand.low_word()),
        |rows| max_clique_in(rows, cand),
    )
}

/// All `r`-cliques of `g` containing both ends of `p` (with `p` treated as
/// an edge), each as a sorted vertex set, in lexicographic order.
pub fn cliques_through(g: &Graph, p: Pair, r: usize) -> Vec<VertexSet> {
    if r < 2 {
        return Vec::new();
    }
    let common = g.neighbors(p.u()).and(g.neighbors(p.v()));
    let inner = dispatch(
        g,
        |rows| list_cliques_in(rows, common.low_word(), r - 2),
        |rows| list_cliques_in(rows, common, r - 2),
    );
    inner
        .into_iter()
        .map(|mut c| {
            c.push(p.u());
            c.push(p.v());
            c.into_iter().collect()
        })
        .collect()
}

/// Black `K_r`-completions of the pair `p` in `t`: every `(r-2)`-set `S`
/// such that all pairs within `S ∪ p`, except `p` itself, are black.
/// Lexicographic order.
pub fn kr_completions(t: &Trigraph, p: Pair, r: usize) -> Vec<VertexSet> {
    if r < 2 {
        return Vec::new();
    }
    let rows = t.black_rows();
    let common = rows[p.u()] & rows[p.v()];
    list_cliques_in(rows, common, r - 2)
        .into_iter()
        .map(|c| c.into_iter().collect())
        .collect()
}

/// Number of black `K_r`-completions of `p`, saturating at `cap`.
pub fn count_completions(t: &Trigraph, p: Pair, r: usize, cap: u64) -> u64 {
    if r < 2 {
        return 0;
    }
    let rows = t.black_rows();
    count_cliques_in(rows, rows[p.u()] & rows[p.v()], r - 2, cap)
}
