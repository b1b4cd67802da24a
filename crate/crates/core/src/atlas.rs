//! Constructions of the known uniquely `K_r`-saturated graphs.
//!
//! Each builder fixes a vertex numbering, documented on the builder. Identity
//! checks go through canonical forms, so the numbering never matters outside
//! this module.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::saturation::{has_dominating_vertex, is_uniquely_kr_saturated};
use crate::symmetry::canonical_form;

/// Which construction an entry uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    G10,
    G12,
    G13,
    Paley13,
    G15A,
    G15B,
    G16A,
    G16B,
    G16C,
    G18A,
    G18B,
    C5,
    Petersen,
    /// `K_{r-2}` joined to `m` independent vertices.
    ErdosHajnalMoon {
        r: usize,
        m: usize,
    },
    /// Complement of `C_{2r-1}`.
    OddCycleComplement {
        r: usize,
    },
}

const SPORADIC: [(Construction, &str); 11] = [
    (Construction::G10, "G10"),
    (Construction::G12, "G12"),
    (Construction::G13, "G13"),
    (Construction::Paley13, "Paley13"),
    (Construction::G15A, "G15A"),
    (Construction::G15B, "G15B"),
    (Construction::G16A, "G16A"),
    (Construction::G16B, "G16B"),
    (Construction::G16C, "G16C"),
    (Construction::G18A, "G18A"),
    (Construction::G18B, "G18B"),
];

impl Construction {
    pub fn name(&self) -> String {
        match self {
            Construction::C5 => "C5".into(),
            Construction::Petersen => "Petersen".into(),
            Construction::ErdosHajnalMoon { r, m } => format!("EHM({r},{m})"),
            Construction::OddCycleComplement { r } => format!("OddCycleComplement({r})"),
            c => SPORADIC
                .iter()
                .find(|(k, _)| k == c)
                .map(|(_, name)| name.to_string())
                .expect("sporadic name"),
        }
    }

    /// One of the eleven graphs found by the search, as opposed to the
    /// classic families.
    pub fn is_sporadic(&self) -> bool {
        SPORADIC.iter().any(|(k, _)| k == self)
    }

    pub fn build(&self) -> Graph {
        match *self {
            Construction::G10 => g10(),
            Construction::G12 => g12(),
            Construction::G13 => g13(),
            Construction::Paley13 => paley13(),
            Construction::G15A => g15a(),
            Construction::G15B => g15b(),
            Construction::G16A => g16a(),
            Construction::G16B => g16b(),
            Construction::G16C => g16c(),
            Construction::G18A => g18a(),
            Construction::G18B => g18b(),
            Construction::C5 => Graph::cycle(5),
            Construction::Petersen => Graph::petersen(),
            Construction::ErdosHajnalMoon { r, m } => Graph::complete(r - 2).join(&Graph::empty(m)),
            Construction::OddCycleComplement { r } => Graph::cycle(2 * r - 1).complement(),
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A named graph with the facts it is expected to satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtlasEntry {
    pub construction: Construction,
    pub expected_n: usize,
    pub expected_r: usize,
    /// Sorted `(degree, multiplicity)` pairs, as [`Graph::degree_multiset`].
    pub expected_degrees: Vec<(usize, usize)>,
}

impl AtlasEntry {
    pub fn name(&self) -> String {
        self.construction.name()
    }

    pub fn build(&self) -> Graph {
        self.construction.build()
    }

    /// Whether the entry should also be free of dominating vertices.
    pub fn expect_primitive(&self) -> bool {
        !matches!(self.construction, Construction::ErdosHajnalMoon { .. })
    }
}

fn regular(n: usize, d: usize) -> Vec<(usize, usize)> {
    vec![(d, n)]
}

/// Entry for a construction; `None` for family parameters that give no
/// uniquely saturated graph on at least `r` vertices (`r < 3`, `m < 2`).
pub fn entry(construction: Construction) -> Option<AtlasEntry> {
    use Construction::*;
    let (n, r, degrees) = match construction {
        G10 => (10, 4, regular(10, 5)),
        G12 => (12, 4, regular(12, 6)),
        G13 => (13, 4, regular(13, 6)),
        Paley13 => (13, 4, regular(13, 6)),
        G15A => (15, 6, regular(15, 10)),
        G15B => (15, 6, regular(15, 10)),
        G16A => (16, 5, vec![(8, 2), (9, 14)]),
        G16B => (16, 5, regular(16, 9)),
        // The construction as printed is 11-regular; see `g16c`.
        G16C => (16, 6, regular(16, 11)),
        G18A => (18, 4, regular(18, 7)),
        G18B => (18, 4, regular(18, 7)),
        C5 => (5, 3, regular(5, 2)),
        Petersen => (10, 3, regular(10, 3)),
        ErdosHajnalMoon { r, m } => {
            if r < 3 || m < 2 || r - 2 + m > crate::MAX_VERTICES {
                return None;
            }
            // The clique vertices dominate; the independent ones see only them.
            let d = vec![(r - 2, m), (r - 3 + m, r - 2)];
            (r - 2 + m, r, d)
        }
        OddCycleComplement { r } => {
            if r < 3 || 2 * r - 1 > crate::MAX_VERTICES {
                return None;
            }
            (2 * r - 1, r, regular(2 * r - 1, 2 * r - 4))
        }
    };
    Some(AtlasEntry {
        construction,
        expected_n: n,
        expected_r: r,
        expected_degrees: degrees,
    })
}

/// The eleven sporadic graphs followed by representatives of the classic
/// families.
pub fn entries() -> Vec<AtlasEntry> {
    let mut out: Vec<AtlasEntry> = SPORADIC.iter().filter_map(|(c, _)| entry(*c)).collect();
    for c in [
        Construction::C5,
        Construction::Petersen,
        Construction::ErdosHajnalMoon { r: 4, m: 5 },
        Construction::OddCycleComplement { r: 4 },
        Construction::OddCycleComplement { r: 5 },
    ] {
        out.extend(entry(c));
    }
    out
}

fn parse_params(s: &str, prefix: &str) -> Option<Vec<usize>> {
    let head = s.get(..prefix.len())?;
    if !head.eq_ignore_ascii_case(prefix) {
        return None;
    }
    let inner = s[prefix.len()..].strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// Looks up an entry by name, case-insensitively. Families take parameters:
/// `EHM(r,m)` and `OddCycleComplement(r)`.
pub fn lookup(name: &str) -> Result<AtlasEntry> {
    let name = name.trim();
    let unknown = || Error::UnknownEntry(name.to_string());
    let construction = if let Some(p) = parse_params(name, "EHM") {
        match p.as_slice() {
            [r, m] => Construction::ErdosHajnalMoon { r: *r, m: *m },
            _ => return Err(unknown()),
        }
    } else if let Some(p) = parse_params(name, "OddCycleComplement") {
        match p.as_slice() {
            [r] => Construction::OddCycleComplement { r: *r },
            _ => return Err(unknown()),
        }
    } else if name.eq_ignore_ascii_case("C5") {
        Construction::C5
    } else if name.eq_ignore_ascii_case("Petersen") {
        Construction::Petersen
    } else {
        SPORADIC
            .iter()
            .find(|(_, n)| n.eq_ignore_ascii_case(name))
            .map(|(c, _)| *c)
            .ok_or_else(unknown)?
    };
    entry(construction).ok_or_else(unknown)
}

/// Builds the named graph.
pub fn build(name: &str) -> Result<Graph> {
    Ok(lookup(name)?.build())
}

/// Outcome of checking one entry.
#[derive(Clone, Debug)]
pub struct EntryReport {
    pub name: String,
    pub n: usize,
    pub r: usize,
    pub canonical: String,
    /// Human-readable reasons; empty when the entry passes.
    pub failures: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} n={} r={}", self.name, self.n, self.r)
        } else {
            write!(
                f,
                "FAIL {} n={} r={}: {}",
                self.name,
                self.n,
                self.r,
                self.failures.join("; ")
            )
        }
    }
}

#[derive(Clone, Debug)]
pub struct AtlasReport {
    pub entries: Vec<EntryReport>,
}

impl AtlasReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(EntryReport::passed)
    }

    pub fn pass_count(&self) -> usize {
        self.entries.iter().filter(|e| e.passed()).count()
    }
}

fn saturated_at(g: &Graph, r: usize) -> bool {
    r >= 1 && is_uniquely_kr_saturated(g, r).unwrap_or(false)
}

/// Checks one entry: order, degrees, saturation at `r`, failure at `r ± 1`
/// and, unless exempt, absence of dominating vertices.
pub fn verify_entry(entry: &AtlasEntry) -> EntryReport {
    let g = entry.build();
    let r = entry.expected_r;
    let mut failures = Vec::new();
    if g.order() != entry.expected_n {
        failures.push(format!("order {} != {}", g.order(), entry.expected_n));
    }
    let degrees = g.degree_multiset();
    if degrees != entry.expected_degrees {
        failures.push(format!(
            "degrees {degrees:?} != {:?}",
            entry.expected_degrees
        ));
    }
    if !saturated_at(&g, r) {
        failures.push(format!("not uniquely K_{r}-saturated"));
    }
    for other in [r - 1, r + 1] {
        if saturated_at(&g, other) {
            failures.push(format!("also uniquely K_{other}-saturated"));
        }
    }
    if entry.expect_primitive() && has_dominating_vertex(&g) {
        failures.push("has a dominating vertex".into());
    }
    EntryReport {
        name: entry.name(),
        n: g.order(),
        r,
        canonical: canonical_form(&g),
        failures,
    }
}

/// Verifies every entry of `list`. Sporadic entries must also be pairwise
/// non-isomorphic, since each is listed as a distinct graph.
pub fn verify(list: &[AtlasEntry]) -> AtlasReport {
    let mut reports: Vec<EntryReport> = list.iter().map(verify_entry).collect();
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    for (entry, report) in list.iter().zip(reports.iter_mut()) {
        if !entry.construction.is_sporadic() {
            continue;
        }
        if let Some(first) = seen.get(&report.canonical) {
            report.failures.push(format!("isomorphic to {first}"));
        } else {
            seen.insert(report.canonical.clone(), report.name.clone());
        }
    }
    AtlasReport { entries: reports }
}

/// [`verify`] over [`entries`].
pub fn verify_all() -> AtlasReport {
    verify(&entries())
}

/// Writes `<name>.g6` for each entry and a `manifest.tsv` with columns
/// name, n, r, regular/irregular.
pub fn export(dir: &Path, list: &[AtlasEntry]) -> Result<()> {
    let io = |e: std::io::Error| Error::Io(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let mut manifest = String::from("name\tn\tr\tregularity\n");
    for entry in list {
        let g = entry.build();
        let name = entry.name();
        fs::write(
            dir.join(format!("{name}.g6")),
            format!("{}\n", graph6::encode(&g)),
        )
        .map_err(io)?;
        let regularity = if g.is_regular() {
            "regular"
        } else {
            "irregular"
        };
        manifest.push_str(&format!(
            "{name}\t{}\t{}\t{regularity}\n",
            g.order(),
            entry.expected_r
        ));
    }
    fs::write(dir.join("manifest.tsv"), manifest).map_err(io)
}

fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut g = Graph::empty(n);
    for (a, b) in edges {
        debug_assert!(a != b, "loop in construction");
        g.add_edge(a, b);
    }
    g
}

fn modulo(x: isize, m: usize) -> usize {
    x.rem_euclid(m as isize) as usize
}

/// Two 5-cycles `a_i = i`, `b_i = 5 + i`; `a_i` is adjacent to
/// `b_{2i-1}, b_{2i}, b_{2i+1}`.
fn g10() -> Graph {
    let a = |i: isize| modulo(i, 5);
    let b = |i: isize| 5 + modulo(i, 5);
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((a(i), a(i + 1)));
        e.push((b(i), b(i + 1)));
        for d in [-1, 0, 1] {
            e.push((a(i), b(2 * i + d)));
        }
    }
    from_edges(10, e)
}

/// `v_0 = 0`, `v_1 = 1`, `u_{j,i} = 2 + 5j + i`. Each `v_j` dominates the
/// 5-cycle `u_{j,*}`; `u_{0,i}` meets `u_{1,i}, u_{1,i+1}, u_{1,i+3}`.
fn g12() -> Graph {
    let u = |j: usize, i: isize| 2 + 5 * j + modulo(i, 5);
    let mut e = vec![(0, 1)];
    for j in 0..2 {
        for i in 0..5 {
            e.push((j, u(j, i)));
            e.push((u(j, i), u(j, i + 1)));
        }
    }
    for i in 0..5 {
        for d in [0, 1, 3] {
            e.push((u(0, i), u(1, i + d)));
        }
    }
    from_edges(12, e)
}

/// `x = 0`, `y_i = 1 + i`, `z_i = 7 + i`, indices mod 6. `x` dominates the
/// `y`-cycle; the `z_i` form a cycle plus the long diagonals; `z_i` meets
/// `y_i, y_{i-1}, y_{i+2}`.
fn g13() -> Graph {
    let y = |i: isize| 1 + modulo(i, 6);
    let z = |i: isize| 7 + modulo(i, 6);
    let mut e = Vec::new();
    for i in 0..6 {
        e.push((0, y(i)));
        e.push((y(i), y(i + 1)));
        e.push((z(i), z(i + 1)));
        if i < 3 {
            e.push((z(i), z(i + 3)));
        }
        for d in [0, -1, 2] {
            e.push((z(i), y(i + d)));
        }
    }
    from_edges(13, e)
}

/// Vertices `Z_13`, adjacent when the difference is a quadratic residue.
fn paley13() -> Graph {
    let residues: Vec<usize> = (1..13).map(|x| x * x % 13).collect();
    from_edges(
        13,
        (0..13).flat_map(|x| residues.iter().map(move |&d| (x, (x + d) % 13))),
    )
}

/// `x = 0`, `v_0 = 1`, `v_1 = 2`, `u_i = 3 + i`, `c_i = 7 + i`,
/// `q_i = 11 + i`, indices in `Z_4`.
///
/// The printed text has every `u_i` dominate every `c_j`, which gives `u`
/// and `c` degree 11. The graph that is uniquely `K_6`-saturated and
/// 10-regular, as the figure caption states, drops the matching
/// `u_i c_{i xor 1}`; everything else follows the text with indices mod 4.
fn g15a() -> Graph {
    let (x, v) = (0, [1, 2]);
    let u = |i: usize| 3 + i % 4;
    let c = |i: usize| 7 + i % 4;
    let q = |i: usize| 11 + i % 4;
    let mut e = vec![(v[0], v[1])];
    for i in 0..4 {
        e.extend([(x, u(i)), (x, c(i)), (v[0], u(i)), (v[1], u(i))]);
        e.push((c(i), c(i + 1)));
        for j in 0..4 {
            if j != (i ^ 1) {
                e.push((u(i), c(j)));
            }
            if i != j {
                e.push((u(i), q(j)));
                e.push((c(i), q(j)));
            }
            if i < j {
                e.push((q(i), q(j)));
            }
        }
    }
    e.extend([(x, v[0]), (x, v[1]), (u(0), u(2)), (u(1), u(3))]);
    for (i, &vi) in v.iter().enumerate() {
        for k in [2 * i, 2 * i + 1] {
            e.push((vi, c(k)));
            e.push((vi, q(k)));
        }
    }
    from_edges(15, e)
}

/// `q_i = i` (a `K_5`), `c_{1,i} = 5 + i`, `c_{2,i} = 10 + i`, indices
/// mod 5. The two `c` layers are 5-cycles completely joined to each
/// other; `q_i` meets `c_{1,i-1}, c_{1,i}, c_{1,i+1}` and
/// `c_{2,2i-1}, c_{2,2i}, c_{2,2i+2}`.
fn g15b() -> Graph {
    let c = |j: usize, i: isize| 5 + 5 * (j - 1) + modulo(i, 5);
    let mut e = Vec::new();
    for a in 0..5 {
        for b in a + 1..5 {
            e.push((a, b));
        }
    }
    for i in 0..5isize {
        e.push((c(1, i), c(1, i + 1)));
        e.push((c(2, i), c(2, i + 1)));
        for k in 0..5 {
            e.push((c(1, i), c(2, k)));
        }
        for d in [-1, 0, 1] {
            e.push((i as usize, c(1, i + d)));
        }
        for d in [-1, 0, 2] {
            e.push((i as usize, c(2, 2 * i + d)));
        }
    }
    from_edges(15, e)
}

/// `v_1 = 0`, `v_2 = 1`, `(j, i) = 2 + 7(j - 1) + i` for `i` in `Z_7`.
/// Each layer is `C_7^2` dominated by its `v_j`; `(1, i)` meets
/// `(2, 2i + d)` for `d` in `{0, 1, -1, -3}`.
fn g16a() -> Graph {
    let layer = |j: usize, i: isize| 2 + 7 * (j - 1) + modulo(i, 7);
    let mut e = vec![(0, 1)];
    for j in 1..=2 {
        for i in 0..7 {
            e.push((j - 1, layer(j, i)));
            e.push((layer(j, i), layer(j, i + 1)));
            e.push((layer(j, i), layer(j, i + 2)));
        }
    }
    for i in 0..7 {
        for d in [0, 1, -1, -3] {
            e.push((layer(1, i), layer(2, 2 * i + d)));
        }
    }
    from_edges(16, e)
}

/// `x = 0`, `u_i = 1 + i` (`Z_3`), `v_j = 4 + j` (`Z_6`),
/// `z_{k,i} = 10 + 3k + i`. The text's rule for `z_{0,i}` names `z_{0,j}`;
/// it is read as `z_{0,i}`, the only reading that type-checks.
fn g16b() -> Graph {
    let u = |i: isize| 1 + modulo(i, 3);
    let v = |j: isize| 4 + modulo(j, 6);
    let z = |k: usize, i: isize| 10 + 3 * k + modulo(i, 3);
    let mut e = Vec::new();
    for i in 0..3 {
        e.push((0, u(i)));
        for j in 0..3 {
            e.push((z(0, i), z(1, j)));
        }
        for d in [-1, 0, 1, 2] {
            e.push((u(i), v(2 * i + d)));
        }
        for k in 0..2 {
            e.push((u(i), z(k, i + 1)));
            e.push((u(i), z(k, i - 1)));
        }
        for d in [0, 1, 2, 4] {
            e.push((z(0, i), v(2 * i + d)));
        }
        for d in [-1, 0, 1, 3] {
            e.push((z(1, i), v(2 * i + d)));
        }
    }
    for j in 0..6 {
        e.push((0, v(j)));
        e.push((v(j), v(j + 1)));
    }
    from_edges(16, e)
}

/// `q_{1,i} = i`, `q_{2,i} = 4 + i`, `c_i = 8 + i`, exactly as printed.
///
/// The text calls the cliques `q_{0,*}, q_{1,*}` and then uses
/// `q_{1,*}, q_{2,*}`; the second naming is used. As printed every vertex
/// has degree 11 (3 + 6 + 2 for `q`, 5 + 3 + 3 for `c`), while the figure
/// caption says 10-regular. The printed graph is uniquely `K_6`-saturated
/// and has no dominating vertex, so it is kept as is.
fn g16c() -> Graph {
    let c = |i: usize| 8 + i % 8;
    let mut e = Vec::new();
    for base in [0, 4] {
        for a in 0..4 {
            for b in a + 1..4 {
                e.push((base + a, base + b));
            }
        }
    }
    for i in 0..8 {
        for j in i + 2..8 {
            if !(i == 0 && j == 7) {
                e.push((c(i), c(j)));
            }
        }
    }
    for i in 0..4 {
        for d in [0, 1, 2, 3, 4, 5] {
            e.push((i, c(2 * i + d)));
        }
        for d in [0, 1, 3, 4, 5, 6] {
            e.push((4 + i, c(2 * i + d)));
        }
        e.push((i, 4 + (i + 1) % 4));
        e.push((i, 4 + (i + 3) % 4));
    }
    from_edges(16, e)
}

/// `(a, x) = 6a`, `(a, v_i) = 6a + 1 + i` for `a` in `Z_3`, `i` in `Z_5`.
/// The `(a, x)` form a triangle and each dominates its 5-cycle
/// `(a, v_*)`; `(a, v_i)` meets `(a ± 1, v_{i ± 2})`.
fn g18a() -> Graph {
    let x = |a: isize| 6 * modulo(a, 3);
    let v = |a: isize, i: isize| 6 * modulo(a, 3) + 1 + modulo(i, 5);
    let mut e = Vec::new();
    for a in 0..3 {
        e.push((x(a), x(a + 1)));
        for i in 0..5 {
            e.push((x(a), v(a, i)));
            e.push((v(a, i), v(a, i + 1)));
            for da in [-1, 1] {
                for di in [-2, 2] {
                    e.push((v(a, i), v(a + da, i + di)));
                }
            }
        }
    }
    from_edges(18, e)
}

/// `(a, i) = 9a + i` on `Z_2 x Z_9`. Within a layer, vertices at cyclic
/// distance at most 2 are adjacent; `(0, i)` meets `(1, 2i)`, `(1, 2i + 4)`
/// and `(1, 2i + 5)`.
fn g18b() -> Graph {
    let at = |a: usize, i: isize| 9 * a + modulo(i, 9);
    let mut e = Vec::new();
    for a in 0..2 {
        for i in 0..9 {
            e.push((at(a, i), at(a, i + 1)));
            e.push((at(a, i), at(a, i + 2)));
        }
    }
    for i in 0..9 {
        for d in [0, 4, 5] {
            e.push((at(0, i), at(1, 2 * i + d)));
        }
    }
    from_edges(18, e)
}
