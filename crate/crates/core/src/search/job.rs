//! Job splitting, replay, parallel execution and checkpoints.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::{expand, explore, root_trigraph, Expansion, SearchConfig, SearchOutcome, SearchStats};
use crate::error::{Error, Result};
use crate::graph::Pair;

/// One branching step, as written in job files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchDecision {
    /// Whiten `pair` and blacken the completion with this index among the
    /// non-skipped completion-orbit representatives. Token `W:u-v:idx`.
    WhiteWithCompletion { pair: Pair, orbit_index: usize },
    /// Blacken the whole orbit of `representative`. Token `B:u-v`.
    AllBlack { representative: Pair },
}

impl fmt::Display for BranchDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchDecision::WhiteWithCompletion { pair, orbit_index } => {
                write!(f, "W:{pair}:{orbit_index}")
            }
            BranchDecision::AllBlack { representative } => write!(f, "B:{representative}"),
        }
    }
}

fn parse_pair(s: &str, token: &str) -> Result<Pair> {
    let bad = || Error::JobToken(token.to_string());
    let (a, b) = s.split_once('-').ok_or_else(bad)?;
    let a: usize = a.parse().map_err(|_| bad())?;
    let b: usize = b.parse().map_err(|_| bad())?;
    if a >= b {
        return Err(bad());
    }
    Ok(Pair::new(a, b))
}

impl FromStr for BranchDecision {
    type Err = Error;

    fn from_str(token: &str) -> Result<BranchDecision> {
        let bad = || Error::JobToken(token.to_string());
        let parts: Vec<&str> = token.trim().split(':').collect();
        match parts.as_slice() {
            ["W", pair, idx] => Ok(BranchDecision::WhiteWithCompletion {
                pair: parse_pair(pair, token)?,
                orbit_index: idx.parse().map_err(|_| bad())?,
            }),
            ["B", pair] => Ok(BranchDecision::AllBlack {
                representative: parse_pair(pair, token)?,
            }),
            _ => Err(bad()),
        }
    }
}

/// A subtree of the search, named by the decisions leading to it from the
/// root. The root job has an empty prefix and prints as the empty string.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SearchJob {
    pub prefix: Vec<BranchDecision>,
}

impl fmt::Display for SearchJob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.prefix.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SearchJob {
    type Err = Error;

    fn from_str(s: &str) -> Result<SearchJob> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SearchJob::default());
        }
        let prefix = s.split(',').map(str::parse).collect::<Result<_>>()?;
        Ok(SearchJob { prefix })
    }
}

/// Cuts the tree at `depth` decisions. Returns a job for every node at
/// that depth and for every shallower node that completes a graph, so the
/// union of the jobs' outputs is the whole search output.
pub fn split_jobs(cfg: &SearchConfig, depth: usize) -> Result<Vec<SearchJob>> {
    fn walk(
        cfg: &SearchConfig,
        t: &crate::trigraph::Trigraph,
        prefix: &mut Vec<BranchDecision>,
        depth: usize,
        out: &mut Vec<SearchJob>,
    ) {
        if prefix.len() == depth {
            out.push(SearchJob {
                prefix: prefix.clone(),
            });
            return;
        }
        match expand(cfg, t, &mut SearchStats::default()) {
            Expansion::Pruned => {}
            Expansion::Complete(_) => out.push(SearchJob {
                prefix: prefix.clone(),
            }),
            Expansion::Branch(children) => {
                for (d, child) in children {
                    prefix.push(d);
                    walk(cfg, &child, prefix, depth, out);
                    prefix.pop();
                }
            }
        }
    }
    cfg.validate()?;
    let mut out = Vec::new();
    walk(
        cfg,
        &root_trigraph(cfg.n, cfg.r),
        &mut Vec::new(),
        depth,
        &mut out,
    );
    Ok(out)
}

/// Replays `job`'s prefix from the root and searches the subtree below it.
/// Nodes on the prefix are not counted in the returned statistics.
pub fn run_job(cfg: &SearchConfig, job: &SearchJob) -> Result<SearchOutcome> {
    cfg.validate()?;
    let mut t = root_trigraph(cfg.n, cfg.r);
    for (depth, decision) in job.prefix.iter().enumerate() {
        let stale = |reason: String| Error::StaleJob { depth, reason };
        match expand(cfg, &t, &mut SearchStats::default()) {
            Expansion::Branch(children) => {
                t = children
                    .into_iter()
                    .find(|(d, _)| d == decision)
                    .map(|(_, child)| child)
                    .ok_or_else(|| stale(format!("node has no branch {decision}")))?;
            }
            Expansion::Pruned => return Err(stale("node is pruned".into())),
            Expansion::Complete(_) => return Err(stale("node has no gray pairs".into())),
        }
    }
    let mut out = SearchOutcome::default();
    explore(cfg, &t, &mut out);
    Ok(out)
}

/// Completed jobs, persisted one per line as `<job>\t<graph6 ...>`.
///
/// Each record is a single `write` of a whole line, so a crash can at
/// worst leave one unterminated line, which is ignored on reload.
pub struct Checkpoint {
    file: Mutex<File>,
    done: HashMap<String, BTreeSet<String>>,
}

impl Checkpoint {
    pub fn open(path: &Path) -> Result<Checkpoint> {
        let io = |e: std::io::Error| Error::Io(format!("{}: {e}", path.display()));
        let mut text = String::new();
        if path.exists() {
            File::open(path)
                .and_then(|mut f| f.read_to_string(&mut text))
                .map_err(io)?;
        }
        let mut done = HashMap::new();
        for line in text.split_inclusive('\n').filter(|l| l.ends_with('\n')) {
            let line = line.trim_end_matches(['\n', '\r']);
            let Some((job, graphs)) = line.split_once('\t') else {
                continue;
            };
            let job: SearchJob = job.parse()?;
            done.insert(
                job.to_string(),
                graphs.split_whitespace().map(str::to_string).collect(),
            );
        }
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(io)?;
        if !text.is_empty() && !text.ends_with('\n') {
            file.write_all(b"\n").map_err(io)?;
        }
        Ok(Checkpoint {
            file: Mutex::new(file),
            done,
        })
    }

    /// Outputs of an already completed job.
    pub fn completed(&self, job: &SearchJob) -> Option<&BTreeSet<String>> {
        self.done.get(&job.to_string())
    }

    pub fn completed_count(&self) -> usize {
        self.done.len()
    }

    pub fn record(&self, job: &SearchJob, graphs: &BTreeSet<String>) -> Result<()> {
        let mut line = job.to_string();
        line.push('\t');
        line.push_str(&graphs.iter().cloned().collect::<Vec<_>>().join(" "));
        line.push('\n');
        let mut file = self.file.lock().expect("checkpoint lock");
        file.write_all(line.as_bytes())
            .and_then(|_| file.flush())
            .map_err(|e| Error::Io(e.to_string()))
    }
}

/// Runs `jobs` on `workers` threads and merges the results. Jobs already
/// recorded in `checkpoint` are not rerun; their stored outputs are merged.
pub fn run_jobs_parallel(
    cfg: &SearchConfig,
    jobs: &[SearchJob],
    workers: usize,
    checkpoint: Option<&Checkpoint>,
) -> Result<SearchOutcome> {
    let mut total = SearchOutcome::default();
    let mut pending = Vec::new();
    for job in jobs {
        match checkpoint.and_then(|c| c.completed(job)) {
            Some(graphs) => total.graphs.extend(graphs.iter().cloned()),
            None => pending.push(job),
        }
    }
    let next = AtomicUsize::new(0);
    let results: Vec<Result<SearchOutcome>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers.max(1))
            .map(|_| {
                scope.spawn(|| -> Result<SearchOutcome> {
                    let mut mine = SearchOutcome::default();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(job) = pending.get(i) else { break };
                        let out = run_job(cfg, job)?;
                        if let Some(c) = checkpoint {
                            c.record(job, &out.graphs)?;
                        }
                        mine.merge(out);
                    }
                    Ok(mine)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    for r in results {
        total.merge(r?);
    }
    Ok(total)
}
