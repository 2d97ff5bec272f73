//! `shufsq`: shuffle-square queries, table reproduction and long scans.
//!
//! Data goes to stdout (or `--out`), logs to stderr. Exit status is 0 when
//! the queried object exists, 1 when it does not, 2 on any error.

mod render;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use shuffle_squares::codes::{circle_graph, euler_number_backtracking, euler_shuffle_scan, gauss_digraph};
use shuffle_squares::covering::{build_cover_instance, dihedral_scan, min_cover};
use shuffle_squares::cyclic::{anti_square_scan, cyclic_decompose, s_of, shift_to_shuffle_square, ScanConfig};
use shuffle_squares::enumeration::count_table;
use shuffle_squares::shuffle::is_gamma_shuffle_square;
use shuffle_squares::{is_shuffle_square, Permutation, Word};

use render::{Format, Sink};

#[derive(Parser, Debug)]
#[command(name = "shufsq", version, about = "Shuffle squares, shuffle γ-squares and related tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Human)]
    format: Format,

    /// Worker threads (default: available cores).
    #[arg(long, global = true, env = "SHUFSQ_WORKERS")]
    workers: Option<usize>,

    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// More log output on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a word is a shuffle square (or a shuffle γ-square).
    Check {
        word: Word,
        /// One-line permutation, e.g. 213 or 10,1,2,3,4,5,6,7,8,9.
        #[arg(long)]
        gamma: Option<Permutation>,
    },
    /// Cyclic shuffle-square witness of an even binary word.
    Decompose { word: Word },
    /// Cyclic shift turning an even binary word with at most four 1's into a shuffle square.
    Shift { word: Word },
    /// Number of cyclic shifts of a word that are shuffle squares.
    SOf { word: Word },
    /// Reproduce a table.
    Table(TableArgs),
    /// Long-running scans.
    Scan(ScanArgs),
    /// Minimum covering set of permutations for canonical words over k letters.
    Cover {
        #[arg(long)]
        k: usize,
    },
    /// Gauss-code digraph or chord diagram of a word.
    Codes {
        word: Word,
        #[arg(long, value_enum, default_value_t = View::Digraph)]
        view: View,
        /// Graphviz output instead of an edge list.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Args, Debug)]
struct TableArgs {
    #[arg(value_enum)]
    name: TableName,
    /// Largest word length (table1, table5).
    #[arg(long)]
    max_length: Option<usize>,
    /// Word length (appendixA).
    #[arg(long)]
    length: Option<usize>,
    /// Number of letters (covering-k).
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableName {
    /// Minimal s and number of minimal classes per length.
    Table1,
    /// Canonical words over three letters against permutations of degree 3.
    Table3,
    /// Binary shuffle squares by length and number of 1's.
    Table5,
    /// Shuffle anti-squares of one length, one per class.
    #[value(name = "appendixA", alias = "appendix-a")]
    AppendixA,
    /// Word/permutation adjacency for k letters.
    CoveringK,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(value_enum)]
    kind: ScanKind,
    #[arg(long)]
    length: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    max_length: Option<usize>,
    /// Checkpoint file for anti-square scans; resumed when present.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Representatives between checkpoint writes.
    #[arg(long, default_value_t = 1 << 20)]
    checkpoint_every: u64,
    /// Stop after this many representatives (the report is then partial).
    #[arg(long)]
    stop_after: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScanKind {
    AntiSquare,
    Dihedral,
    Euler,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum View {
    Digraph,
    Chords,
}

type CmdResult = Result<bool, Box<dyn std::error::Error>>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CmdResult {
    let workers = match cli.workers {
        Some(0) => return Err("--workers must be at least 1".into()),
        Some(n) => n,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    rayon::ThreadPoolBuilder::new().num_threads(workers).build_global()?;
    let writer: Box<dyn Write> = match &cli.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let mut sink = Sink::new(writer, cli.format);
    let found = dispatch(cli.command, workers, &mut sink)?;
    sink.finish()?;
    Ok(found)
}

fn dispatch(command: Command, workers: usize, out: &mut Sink) -> CmdResult {
    match command {
        Command::Check { word, gamma } => {
            let witness = match &gamma {
                Some(g) => is_gamma_shuffle_square(&word, g)?,
                None => is_shuffle_square(&word),
            };
            out.witness(&word, witness.as_ref(), gamma.as_ref())?;
            Ok(witness.is_some())
        }
        Command::Decompose { word } => {
            let witness = cyclic_decompose(&word)?;
            out.witness(&word, Some(&witness), None)?;
            Ok(true)
        }
        Command::Shift { word } => {
            let outcome = shift_to_shuffle_square(&word)?;
            out.shift(&word, &outcome)?;
            Ok(true)
        }
        Command::SOf { word } => {
            out.s_of(&word, s_of(&word))?;
            Ok(true)
        }
        Command::Table(args) => table(args, workers, out),
        Command::Scan(args) => scan(args, workers, out),
        Command::Cover { k } => {
            let instance = build_cover_instance(k)?;
            let solution = min_cover(&instance)?;
            out.cover(k, &solution)?;
            Ok(true)
        }
        Command::Codes { word, view, dot } => {
            match view {
                View::Digraph => {
                    let d = gauss_digraph(&word);
                    let euler = euler_number_backtracking(&word).ok();
                    out.digraph(&d, euler, dot)?;
                }
                View::Chords => out.chords(&circle_graph(&word)?, dot)?,
            }
            Ok(true)
        }
    }
}

fn table(args: TableArgs, workers: usize, out: &mut Sink) -> CmdResult {
    match args.name {
        TableName::Table1 => {
            let max = args.max_length.unwrap_or(20);
            if max < 2 || max % 2 != 0 || max > 64 {
                return Err(format!("--max-length must be even and between 2 and 64, got {max}").into());
            }
            let config = ScanConfig {
                workers,
                ..ScanConfig::default()
            };
            let reports = (2..=max)
                .step_by(2)
                .map(|length| {
                    log::info!("table1: scanning length {length}");
                    anti_square_scan(length, &config)
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.table1(&reports)?;
        }
        TableName::Table3 => out.matrix(&build_cover_instance(3)?)?,
        TableName::CoveringK => {
            let k = args.k.ok_or("covering-k needs --k")?;
            out.matrix(&build_cover_instance(k)?)?;
        }
        TableName::Table5 => {
            let max = args.max_length.unwrap_or(16);
            out.table5(&count_table(max)?)?;
        }
        TableName::AppendixA => {
            let length = args.length.unwrap_or(24);
            let config = ScanConfig {
                workers,
                ..ScanConfig::default()
            };
            out.anti_squares(&anti_square_scan(length, &config)?)?;
        }
    }
    Ok(true)
}

fn scan(args: ScanArgs, workers: usize, out: &mut Sink) -> CmdResult {
    if args.checkpoint.is_some() && !matches!(args.kind, ScanKind::AntiSquare) {
        return Err("--checkpoint applies to anti-square scans only".into());
    }
    match args.kind {
        ScanKind::AntiSquare => {
            let length = args.length.ok_or("anti-square scan needs --length")?;
            let config = ScanConfig {
                workers,
                checkpoint: args.checkpoint,
                checkpoint_every: args.checkpoint_every.max(1),
                stop_after: args.stop_after,
            };
            out.anti_squares(&anti_square_scan(length, &config)?)?;
        }
        ScanKind::Dihedral => {
            let k = args.k.ok_or("dihedral scan needs --k")?;
            let max = args.max_length.ok_or("dihedral scan needs --max-length")?;
            if k == 0 || max > 16 {
                return Err(format!("dihedral scan supports k >= 1 and lengths up to 16, got k={k} length {max}").into());
            }
            out.violations(&dihedral_scan(k, max))?;
        }
        ScanKind::Euler => {
            let k = args.k.ok_or("euler scan needs --k")?;
            out.euler(&euler_shuffle_scan(k)?)?;
        }
    }
    Ok(true)
}
