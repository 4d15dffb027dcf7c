//! `fixity` — construct vertex-transitive graph families, compute
//! automorphism groups and fixed-point statistics, and check the
//! classification verdicts over a corpus.

use clap::{Parser, Subcommand};
use fixity_cli::{commands, Format};
use std::io::Write;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "fixity",
    version,
    about = "Automorphism fixed-point analysis for 3- and 4-valent vertex-transitive graphs",
    after_help = "Family specs: px:r,s  vpx:r,s  spx:r,s  dw:m  sdw:m  sporadic:<psi1..lambda6>\n\
                  kneser:n,k  prism:n  moebius:n  cube:d  circ:n,a[,b,...]  gp:n,k\n\
                  Graph arguments also accept graph6 strings and census files\n\
                  (one graph6 per line, `#` comments).\n\
                  Exit codes: 0 ok/conforming, 1 negative iso answer, 2 usage error,\n\
                  3 counterexample found, 4 cap exceeded under --strict-cap."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print family members as graph6 (digraph6 for vpx), one per line
    Gen {
        /// Family specs, e.g. px:5,2
        #[arg(required = true)]
        specs: Vec<String>,
        /// Also write a JSON label table per graph to stderr
        #[arg(long)]
        labels: bool,
    },
    /// Full per-graph reports (group order, fixicity, verdicts)
    Analyze {
        /// Family specs, graph6 strings, or census files
        #[arg(required = true)]
        inputs: Vec<String>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long, default_value = "json")]
        format: String,
        /// Exit 4 if any graph's element scan was capped
        #[arg(long)]
        strict_cap: bool,
    },
    /// Analyze a whole corpus (default: the built-in one) and summarise
    Scan {
        /// Family specs replacing the default corpus
        specs: Vec<String>,
        /// Read the corpus from a census file instead
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        #[arg(long, default_value = "text")]
        format: String,
        /// Exit 4 if any graph's element scan was capped
        #[arg(long)]
        strict_cap: bool,
    },
    /// Isomorphism test: prints true/false, exit 0/1
    Iso { a: String, b: String },
    /// Quotient by the orbits of a subgroup (K, H, H+, Aut, trivial)
    Quotient { graph: String, subgroup: String },
    /// Fixed-point report for a single graph
    Fixicity {
        graph: String,
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
        /// Scan all elements, not just those of prime order
        #[arg(long)]
        full: bool,
        #[arg(long, default_value = "text")]
        format: String,
        /// Exit 4 if the element scan was capped
        #[arg(long)]
        strict_cap: bool,
    },
}

fn parse_format(s: &str, err: &mut impl Write) -> Result<Format, i32> {
    s.parse::<Format>().map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        commands::EXIT_USAGE
    })
}

fn run() -> i32 {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    match cli.command {
        Command::Gen { specs, labels } => commands::cmd_gen(&specs, labels, &mut out, &mut err),
        Command::Analyze {
            inputs,
            cap,
            format,
            strict_cap,
        } => match parse_format(&format, &mut err) {
            Ok(f) => commands::cmd_analyze(&inputs, cap, f, strict_cap, &mut out, &mut err),
            Err(code) => code,
        },
        Command::Scan {
            specs,
            corpus,
            cap,
            format,
            strict_cap,
        } => match parse_format(&format, &mut err) {
            Ok(f) => commands::cmd_scan(
                &specs,
                corpus.as_deref(),
                cap,
                f,
                strict_cap,
                &mut out,
                &mut err,
            ),
            Err(code) => code,
        },
        Command::Iso { a, b } => commands::cmd_iso(&a, &b, &mut out, &mut err),
        Command::Quotient { graph, subgroup } => {
            commands::cmd_quotient(&graph, &subgroup, &mut out, &mut err)
        }
        Command::Fixicity {
            graph,
            cap,
            full,
            format,
            strict_cap,
        } => match parse_format(&format, &mut err) {
            Ok(f) => commands::cmd_fixicity(&graph, cap, full, f, strict_cap, &mut out, &mut err),
            Err(code) => code,
        },
    }
}

fn main() {
    std::process::exit(run());
}
