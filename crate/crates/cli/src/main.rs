use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use varchenko_cli::{
    cmd_detfile, cmd_faces, cmd_varchenko, cmd_verify, parse_signs, read_input, Check, CliResult, Mode, Outcome,
    VarchenkoArgs, VerifyArgs, EXIT_INPUT,
};
use varchenko_core::modp::DEFAULT_PRIME;
use varchenko_core::varchenko::DetConfig;

#[derive(Parser)]
#[command(name = "varchenko", version, about = "Faces, Varchenko determinants and identity checks for hyperplane arrangements")]
struct Cli {
    /// Worker threads for parallel checks (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct DetOptions {
    #[arg(long, value_enum, default_value = "auto")]
    mode: Mode,
    #[arg(long, env = "VARCHENKO_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10)]
    trials: u64,
    /// Largest chamber count handled symbolically in auto mode.
    #[arg(long, default_value_t = 12)]
    symbolic_threshold: usize,
}

impl DetOptions {
    fn config(&self) -> DetConfig {
        DetConfig {
            mode: self.mode.into(),
            symbolic_threshold: self.symbolic_threshold,
            trials: self.trials,
            seed: self.seed,
            prime: DEFAULT_PRIME,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List faces and chambers of an arrangement file.
    Faces {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Varchenko matrix, determinant and product formula for an apartment.
    Varchenko {
        file: PathBuf,
        /// Hyperplane indices (0-based) defining the apartment.
        #[arg(long, value_delimiter = ',')]
        subset: Vec<usize>,
        /// One sign (+ or -) per subset index.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        apartment_signs: Vec<String>,
        #[command(flatten)]
        det: DetOptions,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites over an arrangement.
    Verify {
        file: PathBuf,
        /// Run every suite.
        #[arg(long, conflicts_with = "checks")]
        all: bool,
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Vec<Check>,
        /// Check the factorization on every apartment of every subset.
        #[arg(long)]
        all_apartments: bool,
        /// Random pairs for the Tits segment check.
        #[arg(long, default_value_t = 1000)]
        tits_pairs: usize,
        #[command(flatten)]
        det: DetOptions,
        #[arg(long)]
        json: bool,
    },
    /// Determinant of an explicit matrix file.
    Detfile {
        file: PathBuf,
        /// Expected product, e.g. `h2^+*h2^-:2;h3^+*h3^-:2`.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

fn run(command: Command) -> CliResult<(Outcome, bool)> {
    Ok(match command {
        Command::Faces { file, json } => (cmd_faces(&read_input(&file)?)?, json),
        Command::Varchenko { file, subset, apartment_signs, det, json } => {
            let args = VarchenkoArgs { subset, signs: parse_signs(&apartment_signs)?, det: det.config() };
            (cmd_varchenko(&read_input(&file)?, &args)?, json)
        }
        Command::Verify { file, all, checks, all_apartments, tits_pairs, det, json } => {
            let checks = if all || checks.is_empty() { Check::ALL.to_vec() } else { checks };
            let args = VerifyArgs { checks, all_apartments, tits_pairs, det: det.config(), ..VerifyArgs::default() };
            (cmd_verify(&read_input(&file)?, &args)?, json)
        }
        Command::Detfile { file, expect, json } => (cmd_detfile(&read_input(&file)?, expect.as_deref())?, json),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("cannot configure {jobs} jobs: {e}");
            return ExitCode::from(EXIT_INPUT as u8);
        }
    }
    match run(cli.command) {
        Ok((outcome, json)) => {
            print!("{}", outcome.render(json));
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
