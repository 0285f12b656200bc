//! `lieko`: exact computations on Lie algebras given by structure constants.

use clap::{Parser, Subcommand};
use lieko_cli::commands::{self, Outcome};

#[derive(Parser)]
#[command(
    name = "lieko",
    about = "Exact Chevalley-Eilenberg homology, Killing modules and Koszul maps for Lie algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a .lie file (Jacobi, grading, form data)
    Check {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Betti numbers of the Chevalley-Eilenberg complex
    Betti {
        file: String,
        /// Highest degree to report (default: the dimension)
        #[arg(long)]
        up_to: Option<usize>,
        /// Restrict to a weight component, e.g. --weight 1,0
        #[arg(long)]
        weight: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The Killing module and its filtration
    Kill {
        file: String,
        /// Highest filtration index to report
        #[arg(long)]
        filtration: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The reduced Koszul map (rank of the image in the Killing module)
    Koszul {
        file: String,
        #[arg(long)]
        weight: Option<String>,
        /// Print exact image vectors
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Basis of the invariant symmetric bilinear forms
    Forms {
        file: String,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Search for a nondegenerate invariant form
    Quadrable {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Per-weight H2 of the current algebra A (x) l with its identity checks
    CurrentH2 {
        file: String,
        /// Coefficient ring, e.g. --ring "truncated Q 2"
        #[arg(long)]
        ring: String,
        #[arg(long)]
        json: bool,
    },
    /// List or emit the built-in example algebras
    Catalog {
        #[command(subcommand)]
        what: CatalogCmd,
    },
    /// Re-derive all reference values; exit 1 on any mismatch
    VerifyPaper {
        /// Run a single section (sec6, sec7, char3, nonredu, vanishing,
        /// structural, appa, appb, roundtrip)
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// List the catalog names
    List,
    /// Emit a catalog algebra as a .lie file on stdout
    Emit {
        name: String,
        /// Domain spec, e.g. "field F 5" (defaults per entry)
        #[arg(long)]
        field: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    let outcome: Outcome = match &cli.command {
        Command::Check { file, json } => commands::cmd_check(file, *json),
        Command::Betti {
            file,
            up_to,
            weight,
            json,
        } => commands::cmd_betti(file, *up_to, weight.as_deref(), *json),
        Command::Kill {
            file,
            filtration,
            json,
        } => commands::cmd_kill(file, *filtration, *json),
        Command::Koszul {
            file,
            weight,
            witness,
            json,
        } => commands::cmd_koszul(file, weight.as_deref(), *witness, *json),
        Command::Forms {
            file,
            witness,
            json,
        } => commands::cmd_forms(file, *witness, *json),
        Command::Quadrable { file, json } => commands::cmd_quadrable(file, *json),
        Command::CurrentH2 { file, ring, json } => commands::cmd_current_h2(ring, file, *json),
        Command::Catalog { what } => match what {
            CatalogCmd::List => commands::cmd_catalog_list(),
            CatalogCmd::Emit { name, field } => commands::cmd_catalog_emit(name, field.as_deref()),
        },
        Command::VerifyPaper { only, json } => commands::cmd_verify(only.as_deref(), *json),
    };
    match &outcome {
        Outcome::Ok(_) | Outcome::OkJson(_) => print!("{}", outcome.render()),
        Outcome::MathFailure(_) => print!("{}", outcome.render()),
        Outcome::InputError(_) => eprintln!("error: {}", outcome.render()),
    }
    std::process::exit(outcome.code());
}
