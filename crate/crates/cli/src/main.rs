mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgc_core::verify::{cauchy_rule, hgc_rule, weights_rule};
use hgc_core::{compute, determinant_inversion_roundtrip, verify, Caps, Error, Method, Suite, VerifyConfig};

#[derive(Parser)]
#[command(
    name = "hgc",
    version,
    about = "Exact hypergeometric Cauchy numbers and their identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table c^(r)_{N,0..n_max}
    Compute(ComputeArgs),
    /// Run identity suites over a parameter grid
    Verify(VerifyArgs),
    /// Determinant inversion round trip for a sequence rule
    Invert(InvertArgs),
}

#[derive(Args)]
struct CapArgs {
    /// Lift the enumeration size limits (may run for a very long time)
    #[arg(long)]
    unsafe_caps: bool,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        if self.unsafe_caps {
            eprintln!("warning: enumeration caps disabled; exhaustive methods may not finish");
            Caps::unlimited()
        } else {
            Caps::default()
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long = "N", value_name = "N", value_parser = clap::value_parser!(u32).range(1..))]
    big_n: u32,
    #[arg(long)]
    n_max: usize,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    /// series, recurrence, determinant, compositions, trudi, explicit or convolution
    #[arg(long, default_value = "recurrence")]
    method: Method,
    /// Print c/n! instead of c
    #[arg(long)]
    normalized: bool,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct VerifyArgs {
    /// all, core, higher, relations, inversion or series-rules
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long = "N-max", value_name = "N", default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    big_n_max: u32,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    r_max: u32,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    #[command(flatten)]
    caps: CapArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Args)]
struct InvertArgs {
    #[arg(long, value_enum)]
    rule: Rule,
    #[arg(long = "N", value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    big_n: u32,
    /// Order of the weights rule
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    #[arg(long)]
    n_max: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Rule {
    /// R(k) = 1/(k+1)
    Cauchy,
    /// R(k) = N/(N+k)
    Hgc,
    /// R(k) = D_r(k)
    Weights,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Invert(args) => cmd_invert(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn cmd_compute(args: ComputeArgs) -> hgc_core::Result<ExitCode> {
    let caps = args.caps.caps();
    let table = compute(args.big_n, args.r, args.n_max, args.method, &caps)?;
    let out = match args.format {
        TableFormat::Json => render::table_json(&table, args.normalized),
        TableFormat::Csv => render::table_csv(&table, args.normalized),
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> hgc_core::Result<ExitCode> {
    let config = VerifyConfig {
        big_n_max: args.big_n_max,
        r_max: args.r_max,
        n_max: args.n_max,
        caps: args.caps.caps(),
        ..Default::default()
    };
    let report = verify::run(args.suite, &config)?;
    let out = match args.format {
        ReportFormat::Json => render::report_json(args.suite, &report),
        ReportFormat::Text => render::report_text(args.suite, &report),
    };
    print!("{out}");
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_invert(args: InvertArgs) -> hgc_core::Result<ExitCode> {
    let rule = match args.rule {
        Rule::Weights => weights_rule(args.big_n, args.r, args.n_max),
        _ if args.r != 1 => {
            return Err(Error::InvalidParameter(
                "--r applies only to the weights rule".into(),
            ));
        }
        Rule::Cauchy => cauchy_rule(args.n_max),
        Rule::Hgc => hgc_rule(args.big_n, args.n_max),
    };
    let roundtrip = determinant_inversion_roundtrip(&rule);
    print!("{}", render::inversion_text(&roundtrip));
    Ok(if roundtrip.round_trips() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
