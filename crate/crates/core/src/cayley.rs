//! Circulant Cayley complements `cc(Z_n, S)`: `x ~ y` iff `x - y` is not
//! in `±S` (mod `n`).
//!
//! Circulants are vertex-transitive, so `r`-primitivity only needs the
//! non-edges `{0, i}` for `i` in `S`, and the clique number only needs the
//! neighbourhood of 0.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bits::{BitRow, VertexSet, MAX_VERTICES};
use crate::clique::{clique_number_transitive, count_cliques_through};
use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};

/// Modulus and generator set of a circulant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CayleySpec {
    n: usize,
    gens: Vec<usize>,
}

impl CayleySpec {
    /// Generators are sorted and deduplicated. Each must lie in `1..=n/2`;
    /// `n/2` itself (for even `n`) is an involution and contributes one
    /// non-neighbour instead of two.
    pub fn new(n: usize, gens: impl IntoIterator<Item = usize>) -> Result<CayleySpec> {
        if n < 3 {
            return Err(Error::CayleySpec(format!("modulus {n} is below 3")));
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut gens: Vec<usize> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::CayleySpec("empty generator set".into()));
        }
        gens.sort_unstable();
        let before = gens.len();
        gens.dedup();
        if gens.len() != before {
            return Err(Error::CayleySpec("repeated generator".into()));
        }
        if let Some(&g) = gens.iter().find(|&&g| g == 0 || 2 * g > n) {
            return Err(Error::CayleySpec(format!(
                "generator {g} outside 1..={}",
                n / 2
            )));
        }
        Ok(CayleySpec { n, gens })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    /// `n >= 2 max(S) + 1`, the range scanned over.
    pub fn satisfies_scan_bound(&self) -> bool {
        self.n > 2 * self.gens.last().copied().unwrap_or(0)
    }

    /// The residues `±S mod n`, sorted.
    pub fn connection_set(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.gens.iter().flat_map(|&g| [g, self.n - g]).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Degree of every vertex of the complement.
    pub fn degree(&self) -> usize {
        self.n - 1 - self.connection_set().len()
    }
}

/// `n=17;S=1,4`
impl fmt::Display for CayleySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};S={}", self.n, join(&self.gens))
    }
}

impl FromStr for CayleySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<CayleySpec> {
        let bad = || Error::CayleySpec(format!("expected `n=<int>;S=<a,b,..>`, got `{s}`"));
        let (n_part, s_part) = s.trim().split_once(';').ok_or_else(bad)?;
        let n = n_part
            .trim()
            .strip_prefix("n=")
            .ok_or_else(bad)?
            .trim()
            .parse()
            .map_err(|_| bad())?;
        let gens = parse_list(s_part.trim().strip_prefix("S=").ok_or_else(bad)?).ok_or_else(bad)?;
        CayleySpec::new(n, gens)
    }
}

/// Comma-separated non-negative integers.
pub fn parse_list(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The circulant complement `cc(Z_n, S)`.
pub fn cayley_complement(spec: &CayleySpec) -> Graph {
    let n = spec.n;
    let mut diffs = vec![true; n];
    diffs[0] = false;
    for d in spec.connection_set() {
        diffs[d] = false;
    }
    let mut g = Graph::empty(n);
    for x in 0..n {
        for y in x + 1..n {
            if diffs[y - x] {
                g.add_edge(x, y);
            }
        }
    }
    g
}

/// `r = ω + 1` if `cc(Z_n, S)` is `r`-primitive, else `None`.
///
/// `G` is `K_r`-free by the choice of `r`; by vertex-transitivity every
/// non-edge is a translate of some `{0, i}` with `i` in `S`, so it is
/// enough that each of those lies in exactly one `r`-clique of `G + {0,i}`.
pub fn check_cayley_primitive(spec: &CayleySpec) -> Option<usize> {
    let g = cayley_complement(spec);
    let r = clique_number_transitive(&g) + 1;
    spec.gens
        .iter()
        .all(|&i| count_cliques_through(&g, Pair::new(0, i), r, 2) == 1)
        .then_some(r)
}

/// One primitive circulant found by a scan.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ScanHit {
    pub spec: CayleySpec,
    pub r: usize,
}

impl ScanHit {
    /// `g<TAB>S<TAB>r<TAB>n`
    pub fn tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.spec.gens.len(),
            join(&self.spec.gens),
            self.r,
            self.spec.n
        )
    }
}

/// Checks every listed generator set against every `n` in `n_range` with
/// `n >= 2 max(S) + 1`, in parallel. Hits are sorted by `(S, n)`.
pub fn scan_sets(sets: &[Vec<usize>], n_range: RangeInclusive<usize>) -> Vec<ScanHit> {
    let mut work = Vec::new();
    for s in sets {
        for n in n_range.clone() {
            if let Ok(spec) = CayleySpec::new(n, s.iter().copied()) {
                if spec.satisfies_scan_bound() {
                    work.push(spec);
                }
            }
        }
    }
    let mut hits: Vec<ScanHit> = work
        .into_par_iter()
        .filter_map(|spec| check_cayley_primitive(&spec).map(|r| ScanHit { spec, r }))
        .collect();
    hits.sort_by(|a, b| (&a.spec.gens, a.spec.n).cmp(&(&b.spec.gens, b.spec.n)));
    hits
}

/// All `g`-element sets `{1 = s_1 < .. < s_g <= max_gen}`.
pub fn generator_sets(g: usize, max_gen: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, start: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for x in start..=max {
            cur.push(x);
            go(k - 1, x + 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if g >= 1 && max_gen >= 1 {
        go(g - 1, 2, max_gen, &mut vec![1], &mut out);
    }
    out
}

/// Scan over all generator sets of size `g` containing 1 with largest
/// element at most `max_gen`.
pub fn scan_generator_sets(
    g: usize,
    max_gen: usize,
    n_range: RangeInclusive<usize>,
) -> Vec<ScanHit> {
    scan_sets(&generator_sets(g, max_gen), n_range)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `S = {1, 2t}`, `n = 4t^2 + 1`, `r = 2t^2 - t + 1`.
    Two,
    /// `S = {1, 3t-1, 3t}`, `n = 9t^2 - 3t + 1`, `r = 3t^2 - 2t + 1`.
    Three,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s.trim().to_ascii_lowercase().as_str() {
            "two" | "2" => Ok(Family::Two),
            "three" | "3" => Ok(Family::Three),
            _ => Err(Error::CayleySpec(format!(
                "unknown family `{s}` (expected two or three)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyInstance {
    pub family: Family,
    pub t: usize,
    pub n: usize,
    pub r: usize,
    pub gens: Vec<usize>,
}

impl FamilyInstance {
    pub fn spec(&self) -> CayleySpec {
        CayleySpec::new(self.n, self.gens.iter().copied()).expect("family parameters are valid")
    }
}

pub fn family_instance(family: Family, t: usize) -> Result<FamilyInstance> {
    if t < 2 {
        return Err(Error::FamilyParameter { t });
    }
    let (n, r, gens) = match family {
        Family::Two => (4 * t * t + 1, 2 * t * t - t + 1, vec![1, 2 * t]),
        Family::Three => (
            9 * t * t - 3 * t + 1,
            3 * t * t - 2 * t + 1,
            vec![1, 3 * t - 1, 3 * t],
        ),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(FamilyInstance {
        family,
        t,
        n,
        r,
        gens,
    })
}

/// Block sizes of the unique `r`-clique of `G + {0,1}`: a 1-block, then
/// 2-blocks (3-blocks for the three-generator family) with the larger
/// blocks at indices `t + (j-1)(t-1)`.
pub fn predicted_block_sizes(inst: &FamilyInstance) -> Vec<usize> {
    let t = inst.t;
    let (small, specials) = match inst.family {
        Family::Two => (2, 2 * t),
        Family::Three => (3, 3 * t),
    };
    let mut sizes = vec![small; inst.r];
    sizes[0] = 1;
    for j in 1..=specials {
        sizes[t + (j - 1) * (t - 1)] = small + 1;
    }
    sizes
}

/// The clique predicted by the block structure, asserted to be an
/// `r`-clique of `G + {0,1}`.
pub fn predicted_unique_clique(inst: &FamilyInstance) -> VertexSet {
    let sizes = predicted_block_sizes(inst);
    assert_eq!(
        sizes.iter().sum::<usize>(),
        inst.n,
        "block sizes must cover Z_n"
    );
    let mut set = VertexSet::new();
    let mut x = 0;
    for s in &sizes {
        set.insert(x);
        x += s;
    }
    let g = cayley_complement(&inst.spec()).with_edge(0, 1);
    let members = set.to_vec();
    assert!(
        members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| g.has_edge(a, b))),
        "predicted set is not a clique of G + {{0,1}}"
    );
    assert_eq!(members.len(), inst.r);
    set
}

/// Cyclic block structure of a residue set `X`: block `k` runs from `x_k`
/// up to `x_{k+1} - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub n: usize,
    pub points: Vec<usize>,
    pub blocks: Vec<usize>,
    pub t: usize,
}

impl BlockDecomposition {
    pub fn new(x: &VertexSet, n: usize, t: usize) -> Result<BlockDecomposition> {
        let points = x.to_vec();
        if points.is_empty() {
            return Err(Error::CayleySpec("empty residue set".into()));
        }
        if let Some(&p) = points.iter().find(|&&p| p >= n) {
            return Err(Error::VertexOutOfRange { v: p, n });
        }
        let k = points.len();
        let blocks = (0..k)
            .map(|i| {
                if i + 1 < k {
                    points[i + 1] - points[i]
                } else {
                    points[0] + n - points[i]
                }
            })
            .collect();
        Ok(BlockDecomposition {
            n,
            points,
            blocks,
            t,
        })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Elements covered by `len` consecutive blocks starting at block `start`.
    pub fn sigma(&self, start: usize, len: usize) -> usize {
        (0..len)
            .map(|i| self.blocks[(start + i) % self.blocks.len()])
            .sum()
    }

    /// `σ(F_j)` for every frame of `t` consecutive blocks.
    pub fn frame_sums(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .map(|j| self.sigma(j, self.t))
            .collect()
    }
}

/// No frame of `t` consecutive blocks covers a number of elements in `S`.
pub fn check_sigma_constraint(bd: &BlockDecomposition, gens: &[usize]) -> bool {
    bd.frame_sums().iter().all(|s| !gens.contains(s))
}

/// No run of 1 to `t` consecutive blocks covers a number of elements in
/// `S`, except the run spanning exactly `exempt` (the added edge).
pub fn check_sigma_constraint_strict(
    bd: &BlockDecomposition,
    gens: &[usize],
    exempt: Option<Pair>,
) -> bool {
    let k = bd.len();
    (0..k).all(|start| {
        (1..=bd.t.min(k)).all(|len| {
            let (a, b) = (bd.points[start], bd.points[(start + len) % k]);
            let skip = a != b && exempt == Some(Pair::new(a, b));
            skip || !gens.contains(&bd.sigma(start, len))
        })
    })
}
