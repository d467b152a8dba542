use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use contact_forms::checks::CheckConfig;
use contact_forms::cli::{
    cmd_check, cmd_classify, cmd_classify_all, cmd_decompose, cmd_rumin, cmd_selftest, Format, Report,
};
use contact_forms::invariants::Algebra;

#[derive(Parser)]
#[command(name = "contact-forms", version, about = "Natural operators on contact forms, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Sp,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Restrict a form to the contact plane and split it into primitive parts.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Print Qω and the Rumin differential Dω of an n-form.
    Rumin {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        form: String,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run the randomized identity suite.
    Check {
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Bound on the total degree of random coefficients.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        /// A group (ring, exterior, calculus, sl2, worked, composition,
        /// equivariance, controls) or a single check name.
        #[arg(long)]
        only: Option<String>,
        /// Also run non-natural operators that are expected to fail.
        #[arg(long)]
        negative_controls: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Compare intertwiner dimensions with the ranks of known symbols.
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "all")]
        a: Option<usize>,
        #[arg(long, required_unless_present = "all")]
        b: Option<usize>,
        /// Every (a, b) up to the top degree.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        all: bool,
        #[arg(long, default_value_t = 3)]
        max_order: usize,
        #[arg(long, value_enum, default_value = "full")]
        algebra: AlgebraArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Run every acceptance check at n = 1, 2 with a fixed seed.
    Selftest {
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
}

fn emit<R: Report>(result: contact_forms::error::Result<R>, format: FormatArg) -> ExitCode {
    let format = match format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Decompose { n, form, format } => emit(cmd_decompose(n, &form), format),
        Command::Rumin { n, form, format } => emit(cmd_rumin(n, &form), format),
        Command::Check { n, seed, samples, max_degree, only, negative_controls, format } => {
            let cfg = CheckConfig { n, seed, samples, max_degree, only, negative_controls };
            emit(cmd_check(&cfg), format)
        }
        Command::Classify { n, a, b, all, max_order, algebra, format } => {
            let algebra = match algebra {
                AlgebraArg::Sp => Algebra::SpOnly,
                AlgebraArg::Full => Algebra::Full,
            };
            let result = match (all, a, b) {
                (true, _, _) => cmd_classify_all(n, max_order, algebra),
                (false, Some(a), Some(b)) => cmd_classify(n, a, b, max_order, algebra),
                _ => unreachable!("clap requires --a and --b without --all"),
            };
            emit(result, format)
        }
        Command::Selftest { format } => emit(cmd_selftest(), format),
    }
}
