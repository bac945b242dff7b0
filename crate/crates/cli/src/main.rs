//! Command line for the proximity logic engine and its lexical database
//! tools.
//!
//! One binary covers the whole surface: loading and querying programs
//! (`ld`, `solve`, `repl`), lexical database lookups (`wn ...`), turning
//! word lists into proximity equations (`gen-equations`), classifying
//! text files against word categories (`classify`) and timing the
//! similarity measures (`bench`). Results go to stdout, diagnostics to
//! stderr; the exit code is 0 on success, 1 on a user error and 2 when
//! the lexical database itself cannot be read.

mod bench;
mod classify;
mod repl;
mod session;
mod solve;
mod wn;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use proxilog::{ClosureKind, Measure, Pattern, TNorm, DEFAULT_EPSILON};

use session::Session;

#[derive(Parser)]
#[command(
    name = "proxilog",
    version,
    about = "Proximity-based logic programming over the WordNet lexical database"
)]
struct Cli {
    #[command(flatten)]
    globals: Globals,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Globals {
    /// Directory with the WNprolog fact files (default: $WNDB)
    #[arg(long, global = true, value_name = "DIR")]
    wndb: Option<PathBuf>,

    /// Lambda cut: degrees below this threshold are pruned
    #[arg(long, global = true, default_value_t = 0.0, value_name = "F")]
    lambda: f64,

    /// T-norm composing degrees: godel, product or lukasiewicz
    #[arg(long, global = true, default_value = "godel", value_name = "NAME")]
    tnorm: TNorm,

    /// Relation closure: proximity (reflexive-symmetric) or similarity
    /// (additionally transitive)
    #[arg(long, global = true, default_value = "proximity", value_name = "KIND")]
    closure: ClosureKind,

    /// Smoothing pseudo-count for zero-frequency concepts
    #[arg(long, global = true, default_value_t = DEFAULT_EPSILON, value_name = "F")]
    ic_epsilon: f64,

    /// Collapse answers with identical bindings to their best degree
    #[arg(long, global = true)]
    dedup_max: bool,

    /// Write the translated program next to each loaded file
    #[arg(long, global = true)]
    emit_tpl: bool,

    /// Skip the occurs check during unification
    #[arg(long, global = true)]
    no_occurs_check: bool,

    /// Abandon derivations after this many resolution steps
    #[arg(long, global = true, value_name = "N")]
    depth_limit: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive shell: `ld <file>` loads, queries end with '.', :quit leaves
    Repl,

    /// Load a program file and report what it contains
    Ld {
        /// Program file (`.bpl` is appended when there is no extension)
        file: PathBuf,
    },

    /// Answer one query against a program file
    Solve {
        /// Program to load before solving
        #[arg(short, long, value_name = "FILE")]
        program: Option<PathBuf>,

        /// Goal, e.g. 'ancestor(X, jacob)'
        query: String,
    },

    /// Lexical database lookups
    #[command(subcommand)]
    Wn(WnCommand),

    /// Generate proximity equations from word lists
    GenEquations {
        /// Similarity measure grading the pairs
        #[arg(long)]
        measure: Measure,

        /// File with pattern lists like [[man,human],[grain:n:8,wheat:n:2]]
        #[arg(long, value_name = "FILE")]
        lists: PathBuf,

        /// Output file (stdout when absent)
        #[arg(short, long, value_name = "FILE")]
        out: Option<PathBuf>,
    },

    /// Classify text files against word categories
    Classify(classify::ClassifyArgs),

    /// Time the similarity measures over word pairs
    Bench(bench::BenchArgs),
}

#[derive(Subcommand)]
enum WnCommand {
    /// Every sense of a word with its synset, type, counts and gloss
    Info { word: String },

    /// Similarity of two word senses under a measure
    Sim {
        measure: Measure,
        a: Pattern,
        b: Pattern,
    },

    /// Most specific common ancestor of a set of words
    Lcs {
        #[arg(required = true)]
        words: Vec<Pattern>,
    },

    /// Root-to-concept chains for every sense of a word
    Hypernyms {
        word: String,

        /// Write the merged chains as a DOT graph to this file instead
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },

    /// Concepts below a word sense, down to a depth level
    Hyponyms {
        pattern: Pattern,

        #[arg(long, value_name = "N")]
        level: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = err
                .downcast_ref::<proxilog::Error>()
                .map_or(1, |e| if e.is_data_error() { 2 } else { 1 });
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let session = Session::new(&cli.globals);
    match &cli.command {
        Command::Repl => repl::run(&session),
        Command::Ld { file } => solve::ld(&session, file),
        Command::Solve { program, query } => solve::solve(&session, program.as_deref(), query),
        Command::Wn(wn) => match wn {
            WnCommand::Info { word } => wn::info(&session, word),
            WnCommand::Sim { measure, a, b } => wn::sim(&session, *measure, a, b),
            WnCommand::Lcs { words } => wn::lcs(&session, words),
            WnCommand::Hypernyms { word, dot } => wn::hypernyms(&session, word, dot.as_deref()),
            WnCommand::Hyponyms { pattern, level } => wn::hyponyms(&session, pattern, *level),
        },
        Command::GenEquations { measure, lists, out } => {
            wn::gen_equations(&session, *measure, lists, out.as_deref())
        }
        Command::Classify(args) => classify::run(&session, args),
        Command::Bench(args) => bench::run(&session, args),
    }
}
