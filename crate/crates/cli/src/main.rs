//! `qgauss`: exact checks of Gaussian-polynomial identities and scans for
//! counterexamples to the related positivity conjectures.

mod commands;
mod exec;
mod output;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::conjecture::ScanArgs;
use commands::{Context, WzVariantArg};
use exec::CliError;
use output::Format;
use range::RangeSpec;

#[derive(Parser)]
#[command(
    name = "qgauss",
    version,
    about = "Exact q-binomial identity checks and conjecture scans"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; json writes one report per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads [default: number of processors].
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
}

/// Loop ranges such as `1..12`, `a+1..8` or `5`. Later ranges may use the
/// variables of earlier ones.
#[derive(Args, Debug, Default)]
struct RangeArgs {
    #[arg(long, value_name = "RANGE")]
    a: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    b: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    i: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    k: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    n: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    x: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    y: Option<RangeSpec>,
    #[arg(long, value_name = "RANGE")]
    z: Option<RangeSpec>,
}

impl RangeArgs {
    fn into_flags(self) -> commands::RangeFlags {
        [
            ("a", self.a),
            ("b", self.b),
            ("i", self.i),
            ("k", self.k),
            ("n", self.n),
            ("x", self.x),
            ("y", self.y),
            ("z", self.z),
        ]
        .into_iter()
        .filter_map(|(name, r)| r.map(|r| (name, r)))
        .collect()
    }
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Print the c_k(i) coefficient triangle.
    TableCk {
        #[arg(long, default_value_t = 8)]
        max_i: i64,
    },
    /// Check a named identity over a range of parameters.
    CheckIdentity {
        name: String,
        #[command(flatten)]
        ranges: RangeArgs,
        /// For remark1: all quadruples with ad = bc <= N.
        #[arg(long, value_name = "N")]
        max_n: Option<i64>,
    },
    /// Scan for counterexamples to conjecture 1, 2, 3 or 4.
    CheckConjecture {
        which: u8,
        /// Conjectures 1 and 2: largest ad = bc [default: 64].
        #[arg(long, value_name = "N")]
        max_n: Option<i64>,
        #[arg(long, value_name = "RANGE")]
        beta: Option<RangeSpec>,
        #[arg(long, value_name = "RANGE")]
        a: Option<RangeSpec>,
        #[arg(long, value_name = "RANGE")]
        b: Option<RangeSpec>,
        #[arg(long, value_name = "RANGE")]
        k: Option<RangeSpec>,
        /// Resume from and record progress in this file.
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
    },
    /// Verify the WZ pair behind the two central identities.
    Wz {
        #[arg(value_enum)]
        variant: WzVariantArg,
        /// [default: 1..8 for q1, 1..5 for q]
        #[arg(long, value_name = "RANGE")]
        a: Option<RangeSpec>,
        #[arg(long, value_name = "RANGE")]
        i: Option<RangeSpec>,
        /// Range of k, may use a and i [default: -1..min(a,i)+2].
        #[arg(long, value_name = "RANGE")]
        k: Option<RangeSpec>,
    },
    /// Run the full acceptance suite.
    Selftest,
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let ctx = Context {
        format: cli.format,
        out: output::open(cli.out.as_deref())?,
        workers: cli.workers,
    };
    match cli.command {
        Command::TableCk { max_i } => commands::table_ck(ctx, max_i),
        Command::CheckIdentity {
            name,
            ranges,
            max_n,
        } => commands::check_identity(ctx, &name, ranges.into_flags(), max_n),
        Command::CheckConjecture {
            which,
            max_n,
            beta,
            a,
            b,
            k,
            checkpoint,
        } => {
            let args = ScanArgs {
                max_n,
                beta,
                a,
                b,
                k,
            };
            commands::check_conjecture(ctx, which, &args, checkpoint.as_deref())
        }
        Command::Wz { variant, a, i, k } => {
            let default = match variant {
                WzVariantArg::Q1 => "1..8",
                WzVariantArg::Q => "1..5",
            };
            let parse = |r: Option<RangeSpec>| {
                r.unwrap_or_else(|| default.parse().expect("default range parses"))
            };
            commands::wz(ctx, variant, parse(a), parse(i), k)
        }
        Command::Selftest => commands::selftest(ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Closed) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qgauss: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
