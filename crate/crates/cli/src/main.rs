use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cobdist::invariants::slow_enabled;
use cobdist::Error;

mod commands;
mod render;

use render::Format;

const LONG_VERSION: &str = concat!(
    env!("CARGO_PKG_VERSION"),
    "\nExact bounds on cobordism distance between torus links T(d,d) and T(2,N).",
    "\nCite as: cobdist ",
    env!("CARGO_PKG_VERSION"),
);

#[derive(Parser, Debug)]
#[command(name = "cobdist", version, long_version = LONG_VERSION, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,

    /// Allow slow checks (same as COBDIST_SLOW=1).
    #[arg(long, global = true)]
    slow: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Signature of the torus link T(p,q).
    Sig {
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Bounds on the maximal Euler characteristic of T(d,d) -> T(2,N);
    /// without N, of T(d,d) -> T(2, floor(3d^2/4)).
    Bounds {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long = "N", allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Bounds for every (d, N) in two ranges (`a`, `a..=b` or `a..b`).
    Table {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        d: RangeInclusive<i64>,
        #[arg(long = "N", allow_hyphen_values = true, value_parser = parse_range)]
        n: RangeInclusive<i64>,
        /// Exit with status 1 if any row has lower > upper.
        #[arg(long)]
        check: bool,
    },
    /// Verify the singularities and Euler characteristic audit of the
    /// degree 2m Hirano curve.
    VerifyHirano {
        #[arg(long)]
        m: u32,
    },
    /// Lipschitz check along the T(d,d+1) -> T(2,N) cobordism for d = 2..=d-max.
    CheckCor13 {
        #[arg(long = "d-max", allow_hyphen_values = true)]
        d_max: i64,
        /// `sigma` (default) or `csv:<path>` with header `p,q,value`.
        #[arg(long)]
        invariant: Option<String>,
    },
    /// Signature lower bound for the smooth degree d_sm(n).
    DsmLower {
        #[arg(long)]
        n: u64,
    },
    /// The constructive cobordism T(d,d) -> T(2, floor(3d^2/4)).
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let num = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        a..=b - 1
    } else {
        let a = num(s)?;
        a..=a
    };
    if range.is_empty() {
        return Err(format!("empty range `{s}`"));
    }
    Ok(range)
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("COBDIST_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("COBDIST_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let slow = cli.slow || slow_enabled();
    let result = match cli.command {
        Command::Sig { p, q } => commands::sig(p, q),
        Command::Bounds { d, n } => commands::bounds(d, n),
        Command::Table { d, n, check } => commands::table(d, n, check),
        Command::VerifyHirano { m } => commands::verify_hirano_cmd(m),
        Command::CheckCor13 { d_max, invariant } => {
            commands::check_cor13(d_max, invariant.as_deref(), slow)
        }
        Command::DsmLower { n } => Ok(commands::dsm_lower_cmd(n)),
        Command::Chain { d } => commands::chain(d),
    };
    match result {
        Ok(out) => {
            print!("{}", out.output(cli.format));
            if out.pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("FAIL");
                ExitCode::from(1)
            }
        }
        Err(e @ (Error::Usage(_) | Error::Parse { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
