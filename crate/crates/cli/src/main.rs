//! `qdelta`: CSV/JSON data for the numerical experiments, plus the acceptance suites.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Parser)]
#[command(name = "qdelta", version, about = "q-exponential delta representations: data and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write rows here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact S_n / π for n in [n-min, n-max]
    PiSum {
        #[arg(long, default_value_t = 1)]
        n_min: u64,
        #[arg(long, default_value_t = 200)]
        n_max: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Arctan integral family on a log-spaced r grid
    PiIntegral {
        #[arg(long, default_value_t = 0.05)]
        r_min: f64,
        #[arg(long, default_value_t = 20.0)]
        r_max: f64,
        #[arg(long, default_value_t = 40)]
        r_steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// c(q) by quadrature against 2π/(2-q)
    CqScan {
        #[arg(long, default_value_t = 1.01)]
        q_min: f64,
        #[arg(long, default_value_t = 1.99)]
        q_max: f64,
        #[arg(long, default_value_t = 50)]
        q_steps: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Δ_q(x, Λ) on an x grid for each Λ
    DeltaProfile {
        #[arg(long, default_value_t = 1.5)]
        q: f64,
        /// Repeatable
        #[arg(long = "lambda", default_values_t = [10.0, 50.0, 100.0])]
        lambdas: Vec<f64>,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 401)]
        x_steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Taylor-term integrals J_k(q, Λ) on a window
    Jk {
        #[arg(long, default_value_t = 1.4)]
        q: f64,
        #[arg(long = "lambda", default_values_t = [1e1, 1e10, 1e20])]
        lambdas: Vec<f64>,
        #[arg(long, default_value_t = 10)]
        k_max: u32,
        /// `a,b`; either end may be -inf or inf
        #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
        window: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// q-cosine and q-sine against cos and sin on an x grid
    Qtrig {
        #[arg(long, default_value_t = 1.1)]
        q: f64,
        #[arg(long, default_value_t = -20.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 20.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = 801)]
        x_steps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Normalization of q-plane waves, closed form against quadrature
    Norm {
        #[arg(long, default_value_t = 1.1)]
        q_min: f64,
        #[arg(long, default_value_t = 2.9)]
        q_max: f64,
        #[arg(long, default_value_t = 19)]
        q_steps: usize,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        xi: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sifting functional of a registry function along a Λ ladder
    Sifting {
        #[arg(long, default_value_t = 1.4)]
        q: f64,
        /// constant, gaussian, lorentzian, x, x^2 or gaussian_shift_2
        #[arg(long, default_value = "gaussian")]
        function: String,
        #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
        window: String,
        #[arg(long = "lambda", default_values_t = [1e2, 1e3, 1e4, 1e5, 1e6])]
        lambdas: Vec<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the acceptance suites; summary to standard output
    Verify {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[arg(long, default_value_t = qdelta::verify::DEFAULT_SEED)]
        seed: u64,
        /// Detail rows go to --out when given
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

fn run(cli: Cli) -> commands::Outcome {
    use commands::*;
    match cli.command {
        Command::PiSum { n_min, n_max, output } => pi_sum(n_min, n_max, &output),
        Command::PiIntegral { r_min, r_max, r_steps, tol, output } => {
            pi_integral(r_min, r_max, r_steps, tol, &output)
        }
        Command::CqScan { q_min, q_max, q_steps, tol, output } => cq_scan(q_min, q_max, q_steps, tol, &output),
        Command::DeltaProfile { q, lambdas, x_min, x_max, x_steps, output } => {
            delta_profile(q, &lambdas, x_min, x_max, x_steps, &output)
        }
        Command::Jk { q, lambdas, k_max, window, output } => jk(q, &lambdas, k_max, &window, &output),
        Command::Qtrig { q, x_min, x_max, x_steps, output } => qtrig(q, x_min, x_max, x_steps, &output),
        Command::Norm { q_min, q_max, q_steps, xi, tol, output } => norm(q_min, q_max, q_steps, xi, tol, &output),
        Command::Sifting { q, function, window, lambdas, tol, output } => {
            sifting(q, &function, &window, &lambdas, tol, &output)
        }
        Command::Verify { profile, seed, output } => {
            let profile = match profile {
                ProfileArg::Quick => qdelta::verify::Profile::Quick,
                ProfileArg::Full => qdelta::verify::Profile::Full,
            };
            verify(profile, seed, &output)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
