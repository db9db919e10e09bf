use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use genchar::table_file::TableFile;
use genchar::verify::{self, Oracle};
use genchar::{build_table, enumerate_marked_class_reps, mn_character, phi_sfs, CycleType, Partition, Permutation};

/// Exact generalized characters of the symmetric group.
#[derive(Parser)]
#[command(name = "genchar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate phi_{lam,mu} on every marked class of S_n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate phi_{lam,mu} at one permutation.
    Eval {
        #[arg(long)]
        lam: String,
        #[arg(long)]
        mu: String,
        /// Cycle notation, e.g. "(1 2 3)(4 5)"; "e" for the identity.
        #[arg(long)]
        perm: String,
    },
    /// Cross-check the coloring formula against the other routes.
    Verify {
        #[arg(long)]
        n: usize,
        /// Comma-separated subset of sfs,lemma,spherical,travis.
        #[arg(long, default_value = "sfs,lemma,spherical,travis")]
        oracles: String,
        /// Count skipped checks as failures.
        #[arg(long)]
        strict: bool,
    },
    /// List the marked classes of S_n with sizes and representatives.
    Classes {
        #[arg(long)]
        n: usize,
    },
    /// Irreducible character value chi^lam on a cycle type.
    Character {
        #[arg(long)]
        lam: String,
        /// Cycle type, e.g. 2,1,1.
        #[arg(long = "type")]
        cycle_type: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

const USAGE_ERROR: u8 = 2;
const VERIFY_FAILURE: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Table { n, format, out } => {
            let table = build_table(n).map_err(|e| e.to_string())?;
            let file = TableFile::from_table(&table);
            let text = match format {
                Format::Json => file.to_json(),
                Format::Csv => file.to_csv().map_err(|e| e.to_string())?,
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{text}"),
            }
        }
        Command::Eval { lam, mu, perm } => {
            let lam: Partition = lam.parse().map_err(|e| format!("--lam: {e}"))?;
            let mu: Partition = mu.parse().map_err(|e| format!("--mu: {e}"))?;
            let theta = Permutation::parse_with_degree(&perm, lam.n()).map_err(|e| format!("--perm: {e}"))?;
            let value = phi_sfs(&lam, &mu, &theta).map_err(|e| e.to_string())?;
            println!("{value}");
        }
        Command::Verify { n, oracles, strict } => {
            let mut oracles = verify::parse_oracles(&oracles).map_err(|e| e.to_string())?;
            oracles.insert(Oracle::Sfs);
            let report = verify::run(n, &oracles).map_err(|e| e.to_string())?;
            for check in &report.checks {
                println!("{check}");
            }
            if !report.succeeded(strict) {
                return Ok(ExitCode::from(VERIFY_FAILURE));
            }
        }
        Command::Classes { n } => {
            for (class, rep) in enumerate_marked_class_reps(n).map_err(|e| e.to_string())? {
                println!("type {:<12} mark {:<3} size {:<8} {rep}", class.cycle_type.to_string(), class.mark, class.size());
            }
        }
        Command::Character { lam, cycle_type } => {
            let lam: Partition = lam.parse().map_err(|e| format!("--lam: {e}"))?;
            let ct: CycleType = cycle_type.parse().map_err(|e| format!("--type: {e}"))?;
            println!("{}", mn_character(&lam, &ct).map_err(|e| e.to_string())?);
        }
    }
    Ok(ExitCode::SUCCESS)
}
