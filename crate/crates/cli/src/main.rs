use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use menage_cli::{
    cmd_fixed_seat, cmd_problem3, cmd_rook, cmd_straight, cmd_table, cmd_verify, Format, Method, OutputDocument,
    Record, SeatMethod,
};
use menage_core::problem3::DEFAULT_SCAN_LIMIT;

#[derive(Parser)]
#[command(name = "menage", version, about = "Exact ménage numbers, fixed-seat counts and rook polynomials")]
struct Cli {
    #[arg(long, value_enum, default_value_t = FormatArg::Plain, global = true)]
    format: FormatArg,

    /// Worker threads for permanent sweeps and scans.
    #[arg(long, default_value_t = 1, global = true)]
    parallel: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeatMethodArg {
    Formula,
    Permanent,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// U_n by Touchard's formula, Cayley's recursion and the permanent, with M_n.
    Table {
        #[arg(long, default_value_t = 2)]
        min: usize,
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// Comma-separated subset of touchard,cayley,permanent.
        #[arg(long, default_value = "touchard,cayley,permanent")]
        methods: String,
    },
    /// Seatings of the other men once man 1 takes chair r.
    FixedSeat {
        #[arg(long)]
        n: usize,
        /// Chair in 3..=n; all chairs when omitted.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = SeatMethodArg::Both)]
        method: SeatMethodArg,
    },
    /// Fixed-seat count at a straight table.
    Straight {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Which n make the fixed-seat count independent of the chair.
    Problem3 {
        #[arg(long, default_value_t = 3)]
        min: usize,
        #[arg(long, default_value_t = 12)]
        max: usize,
        #[arg(long, default_value_t = DEFAULT_SCAN_LIMIT)]
        scan_limit: usize,
    },
    /// Rook polynomial of a matrix file ("R C" header, then R lines of 0/1).
    Rook { file: PathBuf },
    /// Run every cross-identity up to max-n.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Table { .. } => "table",
            Command::FixedSeat { .. } => "fixed-seat",
            Command::Straight { .. } => "straight",
            Command::Problem3 { .. } => "problem3",
            Command::Rook { .. } => "rook",
            Command::Verify { .. } => "verify",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Plain => Format::Plain,
    };
    let workers = cli.parallel.max(1);
    let result = match &cli.command {
        Command::Table { min, max, methods } => {
            Method::parse_list(methods).and_then(|m| cmd_table(*min, *max, &m, workers))
        }
        Command::FixedSeat { n, r, method } => {
            let method = match method {
                SeatMethodArg::Formula => SeatMethod::Formula,
                SeatMethodArg::Permanent => SeatMethod::Permanent,
                SeatMethodArg::Both => SeatMethod::Both,
            };
            cmd_fixed_seat(*n, *r, method, workers)
        }
        Command::Straight { n, r } => cmd_straight(*n, *r, workers),
        Command::Problem3 { min, max, scan_limit } => cmd_problem3(*min, *max, *scan_limit, workers),
        Command::Rook { file } => cmd_rook(file),
        Command::Verify { max_n } => cmd_verify(*max_n, workers),
    };
    let doc = match result {
        Ok(doc) => doc,
        Err(e) => {
            eprintln!("menage {}: {e}", cli.command.name());
            OutputDocument::error(cli.command.name(), Record::new(), &e.to_string())
        }
    };
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(doc.render(format).as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    ExitCode::from(doc.status.exit_code())
}
