use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ainfty_cli::*;

/// Exact-arithmetic checker for strictly unital A-infinity algebras,
/// curved bar constructions, representations, and first-order deformations.
#[derive(Parser)]
#[command(name = "ainfty", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the primary output to a file instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,
    /// List every violation instead of the first one per arity.
    #[arg(long, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Construct the Koszul complex on f and print its algebra file.
    Koszul {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Base ring: Z, Q, or Zmod:m.
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
    },
    /// Check the Stasheff identities of an algebra file (with
    /// --strict-unital, also the Maurer-Cartan form and the structural
    /// bracket identities of the split-unit decomposition).
    CheckAinf {
        #[arg(long, visible_alias = "in")]
        algebra: Option<String>,
        #[arg(long)]
        strict_unital: bool,
    },
    /// Check an A-infinity morphism between two algebra files.
    CheckMorphism {
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        target: Option<String>,
        #[arg(long)]
        morphism: Option<String>,
        #[arg(long)]
        strict_unital: bool,
        /// Treat the morphism file as a representation morphism over
        /// --algebra instead.
        #[arg(long)]
        rep_morphism: Option<String>,
        #[arg(long)]
        algebra: Option<String>,
    },
    /// Print the bar-construction differential of an algebra file.
    Bar {
        #[arg(long, visible_alias = "in")]
        algebra: Option<String>,
        #[arg(long)]
        counital: bool,
    },
    /// Construct and verify the curved bar construction of a strictly
    /// unital algebra file.
    CurvedBar {
        #[arg(long, visible_alias = "in")]
        algebra: Option<String>,
        /// Truncate the computation below the algebra file's bound.
        #[arg(long)]
        max_arity: Option<usize>,
    },
    /// Check a representation file against an algebra file.
    CheckRep {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        rep: Option<String>,
        #[arg(long)]
        strict_unital: bool,
        /// Also run the cofree-comodule route and merge the verdicts.
        #[arg(long)]
        dual_route: bool,
    },
    /// Extract the matrix factorization of f from a height-one Shamash
    /// system over the Koszul complex.
    Mf {
        #[arg(long, allow_hyphen_values = true)]
        koszul: String,
        #[arg(long, default_value = "Z")]
        ring: String,
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
        #[arg(long)]
        shamash: Option<String>,
    },
    /// Check a first-order deformation (cocycle condition via the
    /// dual-number Stasheff identities).
    DeformCheck {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        strict_unital: bool,
        /// Decide coboundary membership by exact linear algebra instead.
        #[arg(long)]
        decide_coboundary: bool,
    },
    /// Apply the first-order gauge action of alpha to a deformation.
    Gauge {
        #[arg(long)]
        algebra: Option<String>,
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match &cli.command {
        Command::Koszul { f, ring, max_arity } => cmd_koszul(f, ring, *max_arity),
        Command::CheckAinf { algebra, strict_unital } => {
            cmd_check_ainf(algebra.as_deref(), *strict_unital, cli.verbose)
        }
        Command::CheckMorphism {
            source,
            target,
            morphism,
            strict_unital,
            rep_morphism,
            algebra,
        } => {
            if let Some(rm) = rep_morphism {
                cmd_check_rep_morphism(algebra.as_deref(), Some(rm.as_str()), cli.verbose)
            } else {
                cmd_check_morphism(
                    source.as_deref(),
                    target.as_deref(),
                    morphism.as_deref(),
                    *strict_unital,
                    cli.verbose,
                )
            }
        }
        Command::Bar { algebra, counital } => {
            cmd_bar(algebra.as_deref(), *counital, cli.verbose)
        }
        Command::CurvedBar { algebra, max_arity } => {
            cmd_curved_bar(algebra.as_deref(), *max_arity, cli.verbose)
        }
        Command::CheckRep { algebra, rep, strict_unital, dual_route } => cmd_check_rep(
            algebra.as_deref(),
            rep.as_deref(),
            *strict_unital,
            *dual_route,
            cli.verbose,
        ),
        Command::Mf { koszul, ring, max_arity, shamash } => {
            cmd_mf(koszul, ring, *max_arity, shamash.as_deref(), cli.verbose)
        }
        Command::DeformCheck { algebra, eta, strict_unital, decide_coboundary } => {
            cmd_deform_check(
                algebra.as_deref(),
                eta.as_deref(),
                *strict_unital,
                *decide_coboundary,
                cli.verbose,
            )
        }
        Command::Gauge { algebra, eta, alpha } => {
            cmd_gauge(algebra.as_deref(), eta.as_deref(), alpha.as_deref())
        }
    };
    match &cli.out {
        Some(path) if output.exit_code == 0 => {
            if let Err(e) = fs::write(path, format!("{}\n", output.stdout)) {
                eprintln!("cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        }
        _ => {
            // a closed pipe (e.g. `| head`) is not an error
            use std::io::Write;
            let _ = writeln!(std::io::stdout(), "{}", output.stdout);
        }
    }
    ExitCode::from(output.exit_code as u8)
}
