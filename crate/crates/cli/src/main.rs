use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use uksat::atlas;
use uksat::cayley::{
    cayley_complement, check_cayley_primitive, family_instance, parse_list,
    predicted_unique_clique, scan_generator_sets, CayleySpec, Family,
};
use uksat::clique::{cliques_through, count_r_cliques};
use uksat::saturation::diagnose;
use uksat::search::{
    run_jobs_parallel, saturated_search, split_jobs, Checkpoint, SearchConfig, SearchOutcome,
};
use uksat::{graph6, Pair};

/// Search and verification toolkit for uniquely K_r-saturated graphs.
#[derive(Parser)]
#[command(name = "uksat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate uniquely K_r-saturated graphs on n vertices.
    Search(SearchArgs),
    /// Check graph6 lines for unique K_r-saturation.
    Verify(VerifyArgs),
    /// Circulant checks, scans and the two infinite families.
    #[command(subcommand)]
    Cayley(CayleyCommand),
    /// Named constructions.
    #[command(subcommand)]
    Atlas(AtlasCommand),
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Keep graphs with dominating vertices.
    #[arg(long, conflicts_with = "primitive_only")]
    all: bool,
    /// Drop graphs with dominating vertices (the default).
    #[arg(long)]
    primitive_only: bool,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Append completed jobs here and skip those already recorded.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Decisions per job when splitting the tree.
    #[arg(long)]
    split_depth: Option<usize>,
    /// Write graph6 lines here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    r: usize,
    /// Graph to check; standard input (one graph6 per line) when absent.
    #[arg(long)]
    graph6: Option<String>,
    /// Also reject dominating vertices.
    #[arg(long)]
    primitive: bool,
}

#[derive(Subcommand)]
enum CayleyCommand {
    /// Print r if cc(Z_n, S) is r-primitive, else "not primitive".
    Check {
        #[arg(long)]
        n: usize,
        /// Comma-separated generators in 1..=n/2.
        #[arg(long)]
        gens: String,
    },
    /// TSV rows g, S, r, n for every primitive circulant in range.
    Scan {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        max_gen: usize,
        #[arg(long)]
        n_from: usize,
        #[arg(long)]
        n_to: usize,
    },
    /// Parameters of a family member, optionally with its unique clique.
    Family {
        /// `two` or `three`.
        #[arg(long)]
        kind: Family,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        emit_clique: bool,
    },
}

#[derive(Subcommand)]
enum AtlasCommand {
    /// Name, n, r and regularity of every default entry.
    List,
    /// Write one graph as graph6.
    Build {
        #[arg(long)]
        name: String,
        /// Standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every default entry and a manifest into a directory.
    Export {
        #[arg(long)]
        dir: PathBuf,
    },
    /// Check every entry; exit code 1 on any failure.
    VerifyAll,
}

/// Bad input is exit code 2, like clap's own usage errors; everything else
/// is 1.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Failure {
        Failure::Runtime(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Runtime(e.into())
    }
}

fn usage<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Usage(e.into())
}

type CmdResult = Result<ExitCode, Failure>;

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_search(args: SearchArgs) -> CmdResult {
    let cfg = SearchConfig::new(args.n, args.r)
        .map_err(usage)?
        .primitive(!args.all);
    if args.jobs == 0 {
        return Err(usage(anyhow::anyhow!("--jobs must be at least 1")));
    }
    let outcome: SearchOutcome =
        if args.jobs == 1 && args.checkpoint.is_none() && args.split_depth.is_none() {
            saturated_search(&cfg).map_err(usage)?
        } else {
            let depth = args.split_depth.unwrap_or(cfg.max_depth_for_split);
            let jobs = split_jobs(&cfg, depth).map_err(usage)?;
            let checkpoint = match &args.checkpoint {
                Some(path) => Some(Checkpoint::open(path).context("opening checkpoint")?),
                None => None,
            };
            if let Some(c) = &checkpoint {
                eprintln!(
                    "checkpoint: {} of {} jobs already done",
                    c.completed_count(),
                    jobs.len()
                );
            }
            run_jobs_parallel(&cfg, &jobs, args.jobs, checkpoint.as_ref())
                .context("running jobs")?
        };
    let s = outcome.stats;
    eprintln!(
        "nodes={} c1_failures={} c2_failures={} outputs={} graphs={}",
        s.nodes_visited,
        s.constraint_failures_c1,
        s.constraint_failures_c2,
        s.outputs,
        outcome.graphs.len()
    );
    let text: String = outcome.graphs.iter().map(|g| format!("{g}\n")).collect();
    write_output(args.out.as_ref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let lines: Vec<String> = match args.graph6 {
        Some(g) => vec![g],
        None => io::stdin().lock().lines().collect::<Result<_, _>>()?,
    };
    let mut out = String::new();
    for line in lines.iter().map(|l| l.trim()).filter(|l| !l.is_empty()) {
        let g = graph6::decode(line).map_err(usage)?;
        let verdict = diagnose(&g, args.r, args.primitive).map_err(usage)?;
        out.push_str(&format!("{verdict}\n"));
    }
    write_output(None, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_cayley(cmd: CayleyCommand) -> CmdResult {
    match cmd {
        CayleyCommand::Check { n, gens } => {
            let gens = parse_list(&gens)
                .ok_or_else(|| usage(anyhow::anyhow!("bad generator list `{gens}`")))?;
            let spec = CayleySpec::new(n, gens).map_err(usage)?;
            let line = match check_cayley_primitive(&spec) {
                Some(r) => format!("{r}\n"),
                None => "not primitive\n".to_string(),
            };
            write_output(None, &line)?;
        }
        CayleyCommand::Scan {
            g,
            max_gen,
            n_from,
            n_to,
        } => {
            if g == 0 || n_from > n_to {
                return Err(usage(anyhow::anyhow!("need g >= 1 and n-from <= n-to")));
            }
            if n_to > uksat::MAX_VERTICES {
                return Err(usage(uksat::Error::TooManyVertices {
                    n: n_to,
                    max: uksat::MAX_VERTICES,
                }));
            }
            let text: String = scan_generator_sets(g, max_gen, n_from..=n_to)
                .iter()
                .map(|h| format!("{}\n", h.tsv()))
                .collect();
            write_output(None, &text)?;
        }
        CayleyCommand::Family {
            kind,
            t,
            emit_clique,
        } => {
            let inst = family_instance(kind, t).map_err(usage)?;
            let gens: Vec<String> = inst.gens.iter().map(|g| g.to_string()).collect();
            let mut text = format!("n={} r={} S={}\n", inst.n, inst.r, gens.join(","));
            if emit_clique {
                let g = cayley_complement(&inst.spec());
                let cliques = cliques_through(&g, Pair::new(0, 1), inst.r);
                let predicted = predicted_unique_clique(&inst);
                let members: Vec<String> =
                    predicted.to_vec().iter().map(|v| v.to_string()).collect();
                let unique = count_r_cliques(&g, inst.r) == 0 && cliques == [predicted];
                let status = if unique {
                    "verified-unique"
                } else {
                    "NOT unique"
                };
                text.push_str(&format!("clique {} {status}\n", members.join(",")));
            }
            write_output(None, &text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_atlas(cmd: AtlasCommand) -> CmdResult {
    match cmd {
        AtlasCommand::List => {
            let mut text = String::new();
            for e in atlas::entries() {
                let regularity = if e.expected_degrees.len() == 1 {
                    "regular"
                } else {
                    "irregular"
                };
                text.push_str(&format!(
                    "{}\t{}\t{}\t{regularity}\n",
                    e.name(),
                    e.expected_n,
                    e.expected_r
                ));
            }
            write_output(None, &text)?;
        }
        AtlasCommand::Build { name, out } => {
            let g = atlas::build(&name).map_err(usage)?;
            write_output(out.as_ref(), &format!("{}\n", graph6::encode(&g)))?;
        }
        AtlasCommand::Export { dir } => {
            atlas::export(&dir, &atlas::entries()).context("exporting atlas")?;
        }
        AtlasCommand::VerifyAll => {
            let report = atlas::verify_all();
            let text: String = report.entries.iter().map(|e| format!("{e}\n")).collect();
            write_output(None, &text)?;
            eprintln!(
                "{}/{} entries pass",
                report.pass_count(),
                report.entries.len()
            );
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search(a) => cmd_search(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Cayley(c) => cmd_cayley(c),
        Command::Atlas(c) => cmd_atlas(c),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
