//! Exhaustive orbital-branching search for uniquely `K_r`-saturated graphs.
//!
//! Every node is a trigraph. A node is pruned when its black pairs contain
//! a `K_r` or some pair has two black completions; gray pairs that already
//! have a completion are whitened; then the largest eligible orbit of gray
//! pairs is branched on. The first branch whitens the orbit representative
//! and, for each orbit of candidate completions under the stabiliser of the
//! pair, blackens one completion; the second branch blackens the orbit.

mod job;

pub use job::{run_job, run_jobs_parallel, split_jobs, BranchDecision, Checkpoint, SearchJob};

use std::collections::BTreeSet;
use std::ops::AddAssign;

use crate::bits::{BitRow, VertexSet};
use crate::clique::{count_completions, has_clique_in};
use crate::error::{Error, Result};
use crate::graph::{all_pairs, Pair};
use crate::saturation::{has_dominating_vertex, is_uniquely_kr_saturated};
use crate::symmetry::{
    automorphism_group, canonical_form, gray_pair_orbits, pair_stabilizer,
    subset_orbit_representatives, PairOrbit,
};
use crate::trigraph::{PairColor, Trigraph, MAX_TRIGRAPH_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub r: usize,
    /// Drop outputs that have a dominating vertex.
    pub primitive_only: bool,
    /// Default frontier depth when splitting into jobs.
    pub max_depth_for_split: usize,
    /// Stop counting completions at two (enough for the constraints).
    pub count_cap: bool,
}

impl SearchConfig {
    pub fn new(n: usize, r: usize) -> Result<SearchConfig> {
        let cfg = SearchConfig {
            n,
            r,
            primitive_only: false,
            max_depth_for_split: 3,
            count_cap: true,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn primitive(mut self, on: bool) -> SearchConfig {
        self.primitive_only = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.r < 3 {
            return Err(Error::SearchConfig(format!("r = {} is below 3", self.r)));
        }
        if self.n < self.r {
            return Err(Error::SearchConfig(format!(
                "n = {} is below r = {}",
                self.n, self.r
            )));
        }
        if self.n > MAX_TRIGRAPH_ORDER {
            return Err(Error::SearchConfig(format!(
                "n = {} exceeds {MAX_TRIGRAPH_ORDER}",
                self.n
            )));
        }
        Ok(())
    }

    fn cap(&self) -> u64 {
        if self.count_cap {
            2
        } else {
            u64::MAX
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub constraint_failures_c1: u64,
    pub constraint_failures_c2: u64,
    pub outputs: u64,
}

impl AddAssign for SearchStats {
    fn add_assign(&mut self, o: SearchStats) {
        self.nodes_visited += o.nodes_visited;
        self.constraint_failures_c1 += o.constraint_failures_c1;
        self.constraint_failures_c2 += o.constraint_failures_c2;
        self.outputs += o.outputs;
    }
}

/// Result of a search or job: canonical graph6 strings and counters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchOutcome {
    pub graphs: BTreeSet<String>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn merge(&mut self, other: SearchOutcome) {
        self.graphs.extend(other.graphs);
        self.stats += other.stats;
    }
}

/// No black `r`-clique.
pub fn check_c1(t: &Trigraph, r: usize) -> bool {
    !has_clique_in(t.black_rows(), u64::full(t.order()), r)
}

/// Every pair has at most one black `K_r`-completion.
pub fn check_c2(t: &Trigraph, r: usize) -> bool {
    all_pairs(t.order()).all(|p| count_completions(t, p, r, 2) <= 1)
}

/// Whitens every gray pair that already has a black completion.
///
/// Whitening removes no black pair, so one pass reaches the fixpoint.
pub fn propagate_c3(t: &Trigraph, r: usize) -> Trigraph {
    let mut out = t.clone();
    for p in t.gray_pairs() {
        if count_completions(t, p, r, 1) > 0 {
            out.set_white(p);
        }
    }
    debug_assert!(out
        .gray_pairs()
        .iter()
        .all(|&p| count_completions(&out, p, r, 1) == 0));
    out
}

/// Largest orbit among those whose pairs touch assigned pairs at both
/// ends, else at one end, else among all orbits. Ties go to the smallest
/// representative.
pub fn select_branch_orbit<'a>(t: &Trigraph, orbits: &'a [PairOrbit]) -> Option<&'a PairOrbit> {
    let touched = t.touched();
    let ends = |o: &PairOrbit| {
        let p = o.representative;
        touched.contains(p.u()) as u8 + touched.contains(p.v()) as u8
    };
    let tier = [2u8, 1]
        .into_iter()
        .find(|&k| orbits.iter().any(|o| ends(o) == k))
        .unwrap_or(0);
    let mut best: Option<&PairOrbit> = None;
    for o in orbits.iter().filter(|o| tier == 0 || ends(o) == tier) {
        if best.map_or(true, |b| {
            o.len() > b.len() || (o.len() == b.len() && o.representative < b.representative)
        }) {
            best = Some(o);
        }
    }
    best
}

/// White pair `{0,1}` completed by a black clique on `{2, .., r-1}`.
pub fn root_trigraph(n: usize, r: usize) -> Trigraph {
    let mut t = Trigraph::all_gray(n);
    t.set_white(Pair::new(0, 1));
    for a in 0..r {
        for b in a.max(2)..r {
            if a != b {
                t.set_black(Pair::new(a, b));
            }
        }
    }
    t
}

pub(crate) enum Expansion {
    Pruned,
    Complete(Trigraph),
    Branch(Vec<(BranchDecision, Trigraph)>),
}

/// Children of `t` in search order.
pub(crate) fn expand(cfg: &SearchConfig, t: &Trigraph, stats: &mut SearchStats) -> Expansion {
    let r = cfg.r;
    stats.nodes_visited += 1;
    if !check_c1(t, r) {
        stats.constraint_failures_c1 += 1;
        return Expansion::Pruned;
    }
    if !all_pairs(t.order()).all(|p| count_completions(t, p, r, cfg.cap()) <= 1) {
        stats.constraint_failures_c2 += 1;
        return Expansion::Pruned;
    }
    if !t.has_gray() {
        return Expansion::Complete(t.clone());
    }
    let t = propagate_c3(t, r);
    if !t.has_gray() {
        return Expansion::Complete(t);
    }
    let aut = automorphism_group(&t);
    let orbits = gray_pair_orbits(&t, &aut);
    let orbit = select_branch_orbit(&t, &orbits).expect("gray pairs remain");
    let p = orbit.representative;
    let (u, v) = (p.u(), p.v());

    let mut children = Vec::new();
    let mut whitened = t.clone();
    whitened.set_white(p);
    let mut ground = VertexSet::new();
    let banned = t.white_row(u) | t.white_row(v) | (1 << u) | (1 << v);
    for x in (0..t.order()).filter(|&x| !banned.contains(x)) {
        ground.insert(x);
    }
    let stab = pair_stabilizer(&aut, p);
    let mut index = 0;
    for rep in subset_orbit_representatives(&stab, &ground, r - 2) {
        let members = rep.representative.to_vec();
        let mut child = whitened.clone();
        let ok = members.iter().enumerate().all(|(i, &x)| {
            child.set_black(Pair::new(u, x))
                && child.set_black(Pair::new(v, x))
                && members[i + 1..]
                    .iter()
                    .all(|&y| child.set_black(Pair::new(x, y)))
        });
        if ok {
            children.push((
                BranchDecision::WhiteWithCompletion {
                    pair: p,
                    orbit_index: index,
                },
                child,
            ));
            index += 1;
        }
    }
    let mut black = t.clone();
    for &q in &orbit.members {
        black.set_black(q);
    }
    children.push((BranchDecision::AllBlack { representative: p }, black));
    Expansion::Branch(children)
}

/// Checks and records a completed trigraph.
pub(crate) fn emit(cfg: &SearchConfig, t: &Trigraph, out: &mut SearchOutcome) {
    debug_assert!(all_pairs(t.order()).all(|p| t.color(p) != PairColor::Gray));
    let g = t.black_graph();
    assert!(
        is_uniquely_kr_saturated(&g, cfg.r).unwrap_or(false),
        "search emitted a graph that is not uniquely K_{}-saturated: {g:?}",
        cfg.r
    );
    if cfg.primitive_only && has_dominating_vertex(&g) {
        return;
    }
    out.stats.outputs += 1;
    out.graphs.insert(canonical_form(&g));
}

pub(crate) fn explore(cfg: &SearchConfig, t: &Trigraph, out: &mut SearchOutcome) {
    match expand(cfg, t, &mut out.stats) {
        Expansion::Pruned => {}
        Expansion::Complete(done) => emit(cfg, &done, out),
        Expansion::Branch(children) => {
            for (_, child) in children {
                explore(cfg, &child, out);
            }
        }
    }
}

/// All uniquely `K_r`-saturated graphs on `n` vertices up to isomorphism
/// (only the `r`-primitive ones when `primitive_only` is set), as
/// canonical graph6 strings.
pub fn saturated_search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let mut out = SearchOutcome::default();
    explore(cfg, &root_trigraph(cfg.n, cfg.r), &mut out);
    Ok(out)
}
