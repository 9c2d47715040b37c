use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use newtonbez::bench::cmd_bench;
use newtonbez::commands::{cmd_bezout, cmd_confederate, cmd_gen, ApproachArg, Basis, Mode};
use newtonbez::io::FieldKind;
use newtonbez::verify::{cmd_verify, Source};
use newtonbez::CliError;

/// Bézout and confederate resultant matrices in the Newton basis.
#[derive(Debug, Parser)]
#[command(name = "newtonbez", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bézout matrix of an instance file.
    Bezout {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Preserving)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Basis::Newton)]
        basis: Basis,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Confederate resultant matrix G(C_N(F)) of an instance file.
    Confederate {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = ApproachArg::A)]
        approach: ApproachArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the invariant suite on a file or on random instances.
    Verify {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        input: Option<PathBuf>,
        /// N M SEED COUNT: COUNT random instances with seeds SEED.. .
        #[arg(long, num_args = 4, value_names = ["N", "M", "SEED", "COUNT"])]
        random: Option<Vec<u64>>,
        /// Where the first failing instance is written.
        #[arg(long, default_value = "counterexample.json")]
        counterexample: PathBuf,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Time the preserving and transform constructions.
    Bench {
        /// Comma-separated degrees, each at least 2.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        degrees: Vec<usize>,
        #[arg(long, value_enum, default_value_t = FieldKind::F64)]
        field: FieldKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output file; stdout when omitted.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write a reproducible random instance.
    Gen {
        n: usize,
        m: usize,
        seed: u64,
        #[arg(long, value_enum, default_value_t = FieldKind::Rational)]
        field: FieldKind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Bezout { input, mode, basis, output } => cmd_bezout(&input, mode, basis, output.as_deref()),
        Command::Confederate { input, approach, output } => cmd_confederate(&input, approach, output.as_deref()),
        Command::Verify { input, random, counterexample, corrupt } => {
            let source = match (&input, random.as_deref()) {
                (Some(path), _) => Source::File(path),
                (None, Some(&[n, m, seed, count])) => Source::Random { n: n as usize, m: m as usize, seed, count },
                _ => return Err(CliError::Usage("give an instance file or --random N M SEED COUNT".into())),
            };
            cmd_verify(&source, &counterexample, corrupt, &mut std::io::stdout().lock())
        }
        Command::Bench { degrees, field, seed, csv } => cmd_bench(&degrees, field, seed, csv.as_deref()).map(drop),
        Command::Gen { n, m, seed, field, output } => cmd_gen(n, m, seed, field, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("newtonbez: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
