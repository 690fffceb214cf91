use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "jack-laurent",
    version,
    about = "Jack-Laurent symmetric functions and Laurent CMS integrals"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Run sweeps on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Build over Q(k, p0), then specialize if values were given.
    Symbolic,
    /// Build directly with numeric k and p0.
    Rational,
}

#[derive(Args, Debug, Clone)]
pub struct AlphaArgs {
    /// Parts of lambda, comma separated.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    lambda: String,
    /// Parts of mu, comma separated.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ParamArgs {
    /// Value of k, an exact rational such as -1/2.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Value of p0, an exact rational.
    #[arg(long, allow_hyphen_values = true)]
    p0: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Construct P_{lambda,mu} with its eigenvalues and box order.
    Compute {
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Mode::Symbolic)]
        mode: Mode,
    },
    /// Laurent Jack polynomial in N variables, in the orbit-sum basis.
    FiniteN {
        /// Weakly decreasing integer sequence.
        #[arg(long, allow_hyphen_values = true)]
        chi: String,
        /// Number of variables; must match the length of --chi.
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
    },
    /// Evaluate a closed-form coefficient.
    Formula {
        /// One of: e, hc, b, v, u, eval, norm, duality, a.
        name: String,
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Index r for hc, l for b.
        #[arg(long)]
        r: Option<u32>,
        /// Box `row,col` for v and u.
        #[arg(long = "box")]
        cell: Option<String>,
    },
    /// Apply an operator (L, L2, I, H, H2) to an element given in text form.
    ApplyOp {
        #[arg(long)]
        op: String,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Pieri coefficients of p1 P_alpha, checked against the constructed functions.
    Pieri {
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Evaluation of P_alpha against its product formula.
    Eval {
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Norm formula, optionally checked against the torus integral.
    Norm {
        #[command(flatten)]
        alpha: AlphaArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Also compute the torus constant term (needs integer k < 0 and integer p0).
        #[arg(long)]
        torus: bool,
    },
    /// The k = -1 limit against the Jacobi-Trudy determinant.
    Schur {
        #[command(flatten)]
        alpha: AlphaArgs,
    },
    /// Report-only checks on the p0 -> infinity limit.
    Conjectures {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    jack_laurent::par::init_from_env();
    let cli = Cli::parse();
    let exec = if cli.sequential {
        jack_laurent::par::Exec::Sequential
    } else {
        jack_laurent::par::Exec::Parallel
    };
    match commands::run(cli.command, cli.format, exec) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
