//! `halfosc`: spectra and eigenbases of the half-line harmonic oscillator
//! under Robin boundary conditions.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use halfosc::cli::{
    cmd_eigfun, cmd_expand, cmd_fullline, cmd_gram, cmd_spectrum, cmd_table1, exit_code_for_error,
    CmdOutput, OutputFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "halfosc",
    version,
    about = "Point spectra and orthonormal eigenbases of -d²/dx² + x²/4 on the half-line \
             under the boundary condition f(0)·cos ξ = f'(0)·sin ξ",
    after_help = "The extension is selected by --xi (boundary angle in [0, π)) or by \
                  --eta (the eigenvalue-equation parameter cot(ξ)/√2); η is canonical \
                  internally. Exit codes: 0 success, 1 numeric/verification failure, \
                  2 usage or input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct CommonArgs {
    /// Boundary angle ξ ∈ [0, π); mutually exclusive with --eta.
    #[arg(long)]
    xi: Option<f64>,
    /// Eigenvalue-equation parameter η = cot(ξ)/√2; mutually exclusive with --xi.
    #[arg(long, allow_negative_numbers = true)]
    eta: Option<f64>,
    /// Number of levels to compute.
    #[arg(long, default_value_t = 11)]
    levels: u32,
    /// Root-solver tolerance (residual bound is tol·(1+|η|)).
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Quadrature truncation point.
    #[arg(long = "x-max", default_value_t = 30.0)]
    x_max: f64,
    /// Quadrature panel width.
    #[arg(long = "panel-width", default_value_t = 1.0)]
    panel_width: f64,
    /// Gauss-Legendre nodes per panel.
    #[arg(long = "nodes-per-panel", default_value_t = 24)]
    nodes_per_panel: u32,
    /// Output format.
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Output path (standard output when omitted).
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue table: level index, eigen-order ν, energy ν + 1/2,
    /// normalization constant, and boundary residual.
    Spectrum(CommonArgs),
    /// Reproduce the golden reference table of the first 11 eigen-orders
    /// for seven extension parameters and report per-cell deviations.
    Table1(CommonArgs),
    /// Sample one normalized eigenfunction on a uniform grid.
    Eigfun {
        #[command(flatten)]
        common: CommonArgs,
        /// Level index (1-based, at most --levels).
        #[arg(long)]
        m: u32,
        /// Grid spacing.
        #[arg(long = "grid-step", default_value_t = 0.05)]
        grid_step: f64,
        /// Grid endpoint (defaults to --x-max).
        #[arg(long = "grid-max")]
        grid_max: Option<f64>,
    },
    /// Gram matrix of the first --levels eigenfunctions (verification
    /// fails above max|G−I| = 1e-5).
    Gram(CommonArgs),
    /// Expand a two-column CSV grid function in the eigenbasis.
    Expand {
        #[command(flatten)]
        common: CommonArgs,
        /// Input CSV path (columns x,value; `#` comments allowed).
        input: PathBuf,
    },
    /// Combined full-line basis from two half-line extensions (ξ for
    /// x > 0, σ mirrored on x < 0) with a two-sided Gram check.
    Fullline {
        #[command(flatten)]
        common: CommonArgs,
        /// Boundary angle of the mirrored family, in [0, π).
        #[arg(long)]
        sigma: f64,
    },
}

fn resolve(common: &CommonArgs, require_param: bool) -> Result<RunConfig, halfosc::Error> {
    RunConfig::resolve(
        common.xi,
        common.eta,
        require_param,
        common.levels,
        common.tol,
        common.x_max,
        common.panel_width,
        common.nodes_per_panel,
        match common.format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        },
        common.output.clone(),
    )
}

fn run(cli: Cli) -> Result<(CmdOutput, Option<PathBuf>), halfosc::Error> {
    match &cli.command {
        Command::Spectrum(common) => {
            let config = resolve(common, true)?;
            Ok((cmd_spectrum(&config)?, config.output))
        }
        Command::Table1(common) => {
            let config = resolve(common, false)?;
            Ok((cmd_table1(&config)?, config.output))
        }
        Command::Eigfun {
            common,
            m,
            grid_step,
            grid_max,
        } => {
            let config = resolve(common, true)?;
            Ok((cmd_eigfun(&config, *m, *grid_step, *grid_max)?, config.output))
        }
        Command::Gram(common) => {
            let config = resolve(common, true)?;
            Ok((cmd_gram(&config)?, config.output))
        }
        Command::Expand { common, input } => {
            let config = resolve(common, true)?;
            Ok((cmd_expand(&config, input)?, config.output))
        }
        Command::Fullline { common, sigma } => {
            let config = resolve(common, true)?;
            Ok((cmd_fullline(&config, *sigma)?, config.output))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, path)) => {
            let write_result = match path {
                Some(p) => std::fs::write(&p, out.body.as_bytes()),
                None => std::io::stdout().write_all(out.body.as_bytes()),
            };
            if let Err(e) = write_result {
                eprintln!("halfosc: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.verification_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("halfosc: {e}");
            ExitCode::from(exit_code_for_error(&e) as u8)
        }
    }
}
