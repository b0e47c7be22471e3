//! `wavecount`: exact denumerants, Sylvester waves, Ehrhart polynomial parts,
//! and sphere-tessellation spectra from the command line.
//!
//! Every rational in the output is exact ("n" or "n/d"); `--approx k` adds
//! clearly-labeled k-digit decimal approximations. Exit codes: 0 success,
//! 1 verification failure, 2 usage error.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use render::Format;

#[derive(Parser)]
#[command(
    name = "wavecount",
    version,
    about = "Exact denumerant and tessellation-spectrum calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Append k-digit decimal approximations (non-authoritative)
    #[arg(long, global = true, value_name = "K")]
    approx: Option<u32>,
}

#[derive(Clone, Debug)]
struct DegreesArg(Vec<u32>);

impl std::str::FromStr for DegreesArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Result<Vec<u32>, _> = s
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
            .collect();
        let entries = entries?;
        if entries.is_empty() || entries.contains(&0) {
            return Err("expected comma-separated positive integers, e.g. 3,4".into());
        }
        Ok(DegreesArg(entries))
    }
}

/// Inclusive level range: `a..b` or a single `n`.
#[derive(Clone, Copy, Debug)]
struct RangeArg {
    lo: i64,
    hi: i64,
}

impl std::str::FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_end = |p: &str| p.trim().parse::<i64>().map_err(|e| format!("{p:?}: {e}"));
        if let Some((a, b)) = s.split_once("..") {
            let (lo, hi) = (parse_end(a)?, parse_end(b)?);
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok(RangeArg { lo, hi })
        } else {
            let v = parse_end(s)?;
            Ok(RangeArg { lo: v, hi: v })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    All,
    Brute,
    Series,
    Popoviciu,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Method::All),
            "brute" => Ok(Method::Brute),
            "series" => Ok(Method::Series),
            "popoviciu" => Ok(Method::Popoviciu),
            other => Err(format!(
                "unknown method {other:?} (all, brute, series, popoviciu)"
            )),
        }
    }
}

#[derive(Args)]
struct DenumArgs {
    /// Comma-separated degrees, e.g. 3,4
    #[arg(long)]
    degrees: DegreesArg,
    /// Level or inclusive range of levels, e.g. 12 or 0..12
    #[arg(long)]
    l: RangeArg,
    /// brute | series | popoviciu | all (all columns that apply)
    #[arg(long, default_value = "series")]
    method: Method,
}

#[derive(Args)]
struct WavesArgs {
    #[arg(long)]
    degrees: DegreesArg,
    /// Variable for the printed polynomials: lbar (augmented) or l
    #[arg(long, default_value = "lbar")]
    var: String,
}

#[derive(Args)]
struct EhrhartArgs {
    #[arg(long)]
    degrees: DegreesArg,
    /// Optional level range for a count table
    #[arg(long)]
    l: Option<RangeArg>,
}

#[derive(Args)]
struct TilingArgs {
    /// tetrahedral | octahedral | icosahedral | hemisphere | lune(q)
    #[arg(long)]
    name: String,
    /// neumann | dirichlet | periodic
    #[arg(long, default_value = "periodic")]
    bc: String,
    #[arg(long)]
    lmax: i64,
}

#[derive(Args)]
struct MolienArgs {
    /// Catalog tiling name (alternative to --degrees)
    #[arg(long, conflicts_with = "degrees")]
    name: Option<String>,
    /// Explicit degree set (alternative to --name)
    #[arg(long)]
    degrees: Option<DegreesArg>,
    #[arg(long, default_value_t = 60)]
    order: usize,
    /// neumann | dirichlet | periodic
    #[arg(long, default_value = "periodic")]
    bc: String,
}

#[derive(Args)]
struct WeylArgs {
    #[arg(long)]
    degrees: DegreesArg,
    /// Boundary sign of the surface term: neumann | dirichlet
    #[arg(long, default_value = "neumann")]
    sign: String,
}

#[derive(Args)]
struct HeatkArgs {
    #[arg(long)]
    degrees: DegreesArg,
}

#[derive(Args)]
struct VerifyArgs {
    /// exact-core | multiseq | waves | ehrhart | spectral | acceptance | all
    #[arg(long, default_value = "all")]
    suite: String,
    /// Seed for the randomized instances
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Denumerant tables (brute enumeration, series extraction, Popoviciu)
    Denum(DenumArgs),
    /// First and second Sylvester waves of a degree set
    Waves(WavesArgs),
    /// Ehrhart counts and the polynomial part of the quasipolynomial
    Ehrhart(EhrhartArgs),
    /// Degeneracy tables for the sphere tessellations
    Tiling(TilingArgs),
    /// Degeneracy generating function (degree form and axis form)
    Molien(MolienArgs),
    /// Smoothed counting-function terms and the midpoint combination
    Weyl(WeylArgs),
    /// Heat-kernel coefficients from the wave polynomial
    Heatk(HeatkArgs),
    /// Run the verification suites
    Verify(VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let approx = cli.approx;
    let outcome = match cli.command {
        Command::Denum(args) => commands::denum(args, approx),
        Command::Waves(args) => commands::waves(args, approx),
        Command::Ehrhart(args) => commands::ehrhart(args, approx),
        Command::Tiling(args) => commands::tiling(args, approx),
        Command::Molien(args) => commands::molien(args, approx),
        Command::Weyl(args) => commands::weyl(args, approx),
        Command::Heatk(args) => commands::heatk(args, approx),
        Command::Verify(args) => commands::verify(args),
    };
    match outcome {
        Ok(output) => {
            println!("{}", output.render(cli.format));
            match output.status {
                render::Status::Ok => ExitCode::SUCCESS,
                render::Status::VerificationFailed => ExitCode::from(1),
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
