use std::process::ExitCode;

use clap::Parser;
use hikita_core::{
    emit_report, emit_reports, verify, verify_all, Error, Family, Format, ModeRequest, SimpleType,
    VerificationReport,
};

/// Check the Hikita correspondence for the minimal nilpotent orbit of an ADE type.
#[derive(Debug, Parser)]
#[command(name = "hikita-verify", version)]
struct Args {
    /// Lie algebra family: A, D or E.
    #[arg(long, required_unless_present = "all")]
    family: Option<String>,

    /// Rank of the Lie algebra.
    #[arg(long, required_unless_present = "all")]
    rank: Option<usize>,

    /// Highest polynomial degree compared.
    #[arg(long, default_value_t = hikita_core::verify::DEFAULT_MAX_DEGREE)]
    max_degree: u32,

    /// full, cartan-pairs or auto (full up to rank 6).
    #[arg(long, default_value = "auto")]
    mode: String,

    /// text or json.
    #[arg(long, default_value = "text")]
    format: String,

    /// Verify every ADE type up to this rank instead of a single type.
    #[arg(long, value_name = "MAX_RANK", conflicts_with_all = ["family", "rank"])]
    all: Option<usize>,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Invariant { .. } => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn run(args: Args) -> Result<Vec<VerificationReport>, Error> {
    let mode: ModeRequest = args.mode.parse()?;
    let format: Format = args.format.parse()?;
    let reports = match args.all {
        Some(max_rank) => {
            let reports = verify_all(max_rank, args.max_degree, mode)?;
            print!("{}", emit_reports(&reports, format));
            reports
        }
        None => {
            let family: Family = args.family.as_deref().unwrap_or_default().parse()?;
            let t = SimpleType::new(family, args.rank.unwrap_or_default())?;
            let report = verify(t, args.max_degree, mode)?;
            print!("{}", emit_report(&report, format));
            vec![report]
        }
    };
    Ok(reports)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(reports) if reports.iter().all(VerificationReport::passed) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(EXIT_FAIL),
        Err(err) => {
            eprintln!("hikita-verify: {err}");
            if exit_code_for(&err) == EXIT_USAGE {
                eprintln!("Usage: hikita-verify --family {{A|D|E}} --rank N [--max-degree D] [--mode full|cartan-pairs|auto] [--format text|json] [--all MAX_RANK]");
            }
            ExitCode::from(exit_code_for(&err))
        }
    }
}
