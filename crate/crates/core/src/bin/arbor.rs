use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use arbor::cli::{self, CmdOutput, RunConfig, EXIT_USAGE};
use arbor::parse::{parse_n_range, parse_orientation_mode, parse_primes};
use arbor::Result;

#[derive(Parser)]
#[command(name = "arbor", version, about = "Transition matrices of cyclic vertex maps on trees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write JSON here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Edge count, `5` or `2..5`.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Only path graphs labeled along the line.
    #[arg(long)]
    paths_only: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Every claim for one instance.
    Analyze {
        /// Edge list `1-2,2-3` or Prüfer code `2,2`.
        #[arg(long)]
        tree: String,
        /// Images `2,3,1` or cycle `(1 2 3)`.
        #[arg(long)]
        map: String,
        /// One bit per edge; 1 reverses smaller→larger.
        #[arg(long)]
        orientation: Option<String>,
        /// Also report over these primes, e.g. `2,3`.
        #[arg(long)]
        primes: Option<String>,
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Unlabeled trees per vertex count.
    Enumerate {
        /// Edge count, `5` or `2..5`.
        #[arg(long, conflicts_with = "vertices")]
        n: Option<String>,
        /// Vertex count, `6` or `3..6`.
        #[arg(long)]
        vertices: Option<String>,
    },
    /// Claim sweep over every tree and cycle.
    Verify {
        #[command(flatten)]
        sweep: SweepArgs,
        /// `all`, `canonical`, or `sample:<k>`.
        #[arg(long, default_value = "canonical")]
        orientations: String,
        /// Also check path transport, the basis witness and the row reductions.
        #[arg(long)]
        full: bool,
    },
    /// Compare a figure's matrices with its caption.
    Reproduce {
        /// `1a`..`1f`, `2a`, `2b`, `3a`, `3b`, `4`.
        #[arg(long)]
        figure: String,
        /// Directory of `fig<id>.txt` files; defaults to the built-in set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Tabulate |det Mf| over instances and coprime (i, j).
    SearchDetmf {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Cap on instances per n; larger spaces are sampled.
        #[arg(long)]
        sample_budget: Option<usize>,
    },
}

fn vertices_to_n(spec: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let r = parse_n_range(spec)?;
    Ok(r.start().saturating_sub(1)..=r.end().saturating_sub(1))
}

fn run(command: Command) -> Result<CmdOutput> {
    let mut cfg = RunConfig::default();
    let with_sweep = |cfg: &mut RunConfig, s: SweepArgs| -> Result<()> {
        cfg.n_range = Some(parse_n_range(&s.n)?);
        cfg.seed = s.seed;
        cfg.workers = s.workers;
        cfg.paths_only = s.paths_only;
        Ok(())
    };
    match command {
        Command::Analyze {
            tree,
            map,
            orientation,
            primes,
            all_witnesses,
        } => {
            cfg.tree = Some(tree);
            cfg.map = Some(map);
            cfg.orientation = orientation;
            cfg.primes = primes.as_deref().map(parse_primes).transpose()?.unwrap_or_default();
            cfg.all_witnesses = all_witnesses;
            cli::cmd_analyze(&cfg)
        }
        Command::Enumerate { n, vertices } => {
            cfg.n_range = match (n, vertices) {
                (Some(n), _) => Some(parse_n_range(&n)?),
                (None, Some(v)) => Some(vertices_to_n(&v)?),
                (None, None) => None,
            };
            cli::cmd_enumerate(&cfg)
        }
        Command::Verify {
            sweep,
            orientations,
            full,
        } => {
            with_sweep(&mut cfg, sweep)?;
            cfg.orientations = parse_orientation_mode(&orientations)?;
            cfg.full = full;
            cli::cmd_verify(&cfg)
        }
        Command::Reproduce { figure, fixtures } => {
            cfg.figure = Some(figure);
            cfg.fixtures = fixtures;
            cli::cmd_reproduce(&cfg)
        }
        Command::SearchDetmf {
            sweep,
            sample_budget,
        } => {
            with_sweep(&mut cfg, sweep)?;
            cfg.sample_budget = sample_budget;
            cli::cmd_search_detmf(&cfg)
        }
    }
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (json, status) = match run(args.command) {
        Ok(out) => {
            for note in &out.notes {
                eprintln!("{note}");
            }
            (out.json, out.status)
        }
        Err(e) => {
            eprintln!("error: {e}");
            (cli::error_json(&e), cli::exit_status(&e))
        }
    };
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &json) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE as u8);
            }
        }
        None => print!("{json}"),
    }
    ExitCode::from(status as u8)
}
