//! Command-line driver: verifies the built-in case catalog, replays
//! certificates, runs sweeps, and exports DOT renderings.
//!
//! Exit codes: 0 = everything verified, 1 = a verification failed,
//! 2 = usage or input error.

mod commands;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "hamcayley", version, about = "hamiltonian-cycle certificates for groups of order 27p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SeedArg {
    /// Deterministic seed; the HAMCAYLEY_SEED environment variable
    /// overrides this flag.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SeedArg {
    fn resolve(&self) -> Result<u64, String> {
        match std::env::var("HAMCAYLEY_SEED") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| format!("HAMCAYLEY_SEED must be an integer, got '{v}'")),
            Err(_) => Ok(self.seed),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in catalog: all semidirect cases per prime, the seven
    /// order-351 cases, the F_3 identity suite, and the canonicalization
    /// checks. Writes one certificate file per case.
    VerifyPaper {
        /// Comma-separated primes, each = 1 (mod 3) and >= 7.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        /// Restrict to a single case (e.g. exp3a or z13:1,0).
        #[arg(long)]
        case: Option<String>,
        /// Directory for certificate files.
        #[arg(long, default_value = "certs")]
        out_dir: PathBuf,
        /// Skip the exhaustive canonicalization checks.
        #[arg(long)]
        skip_canonicalization: bool,
    },
    /// Replay a certificate file from scratch.
    CheckCertificate { path: PathBuf },
    /// Certify every 2-element generating set of every group of order 27p.
    Sweep {
        #[arg(long, required = true)]
        p: u32,
        /// Node-expansion budget per search.
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[command(flatten)]
        seed: SeedArg,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep every certificate inline in the report (large!).
        #[arg(long)]
        inline_certs: bool,
        /// Also cover minimal 3-element generating sets.
        #[arg(long)]
        include_size_3: bool,
        /// Restrict to one family tag (z27, z9xz3, e27, heis27, mod27,
        /// z13e27); repeatable.
        #[arg(long)]
        family: Vec<String>,
    },
    /// Render a catalogued case as DOT.
    ExportDot {
        /// Case name, e.g. exp3a or z13:1,0.
        #[arg(long, required = true)]
        case: String,
        /// Render the Sylow-p quotient multigraph instead of the full
        /// graph.
        #[arg(long)]
        quotient: bool,
        /// Overlay the catalogued cycle.
        #[arg(long)]
        walk: bool,
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Prime for the semidirect cases.
        #[arg(long, default_value_t = 7)]
        p: u32,
    },
    /// List the supported group families and their action generators.
    ListFamilies,
    /// Search for an automorphism carrying one generating set onto
    /// another.
    EquivGensets {
        /// Group descriptor JSON, e.g. '{"family":"heis27","p":7,"action":{"x":2,"y":1,"z":1}}'.
        #[arg(long)]
        group: String,
        /// First generating set: JSON array of elements.
        #[arg(long)]
        s1: String,
        /// Second generating set: JSON array of elements.
        #[arg(long)]
        s2: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyPaper { p, case, out_dir, skip_canonicalization } => {
            commands::verify_paper(&p, case.as_deref(), &out_dir, skip_canonicalization)
        }
        Command::CheckCertificate { path } => commands::check_certificate(&path),
        Command::Sweep { p, budget, seed, out, inline_certs, include_size_3, family } => {
            match seed.resolve() {
                Ok(seed) => commands::sweep(
                    p,
                    budget,
                    seed,
                    out.as_deref(),
                    inline_certs,
                    include_size_3,
                    family,
                ),
                Err(e) => Err(commands::CliError::Usage(e)),
            }
        }
        Command::ExportDot { case, quotient, walk, out, p } => {
            commands::export_dot(&case, quotient, walk, out.as_deref(), p)
        }
        Command::ListFamilies => commands::list_families(),
        Command::EquivGensets { group, s1, s2 } => commands::equiv_gensets(&group, &s1, &s2),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(commands::CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(commands::CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
