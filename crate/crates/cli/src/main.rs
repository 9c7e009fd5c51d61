//! `obstrukt`: convexity obstructions for neural codes from the command line.

mod commands;
mod error;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use obstrukt::verify::Theorem;
use obstrukt::{ElementaryMap, FieldId, NotationForm, Permutation};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "obstrukt", version, about = "Convexity obstructions for neural codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Field for homology computations (GF2 or Q).
    #[arg(long, global = true, env = "OBSTRUKT_FIELD", default_value = "GF2")]
    pub field: FieldId,

    /// Output format; JSON is the stable machine interface.
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,

    /// Codeword notation for input and text output: set ({1,2}), word (12) or binary (110).
    #[arg(long, global = true, default_value = "word")]
    pub form: NotationForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

/// Where the code comes from: `--n` with `--code`, or `--input`.
#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    /// Number of neurons.
    #[arg(long)]
    pub n: Option<usize>,

    /// Comma-separated codewords in the chosen form.
    #[arg(long, conflicts_with = "input", allow_hyphen_values = true)]
    pub code: Option<String>,

    /// File with a `n=<int>` header and one codeword per line; `-` reads standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Δ(C), its homology, M_H, C_min and the local-obstruction test.
    Analyze(CodeArgs),
    /// Homological mandatory set M_H(Δ(C)).
    Mh(CodeArgs),
    /// Certified approximation of C_min(Δ(C)).
    Cmin(CodeArgs),
    /// Reduced homology and contractibility verdict of Δ(C).
    Homology(CodeArgs),
    /// Link of a face of Δ(C).
    Link {
        #[command(flatten)]
        code: CodeArgs,
        /// The face whose link is computed.
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
    },
    /// Stanley-Reisner ideal of Δ(C), its Alexander dual and the dual complex.
    Dual(CodeArgs),
    /// Applies a composition of elementary maps to a code.
    Map {
        #[command(flatten)]
        code: CodeArgs,
        /// Steps in order, e.g. `permute(2,1,3)`, `add_trivial_on`, `duplicate(1)`, `project(2)`.
        #[arg(long = "step", required = true)]
        steps: Vec<ElementaryMap>,
    },
    /// Checks the preservation theorems; exits 1 if any required check fails.
    Verify(VerifyArgs),
    /// Seeded random codes.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Probability of including each nonempty codeword.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub code: CodeArgs,

    /// Theorem to check (permutation, add_trivial_on, add_trivial_off, duplicate, projection, composition).
    #[arg(long = "theorem", conflicts_with = "all")]
    pub theorems: Vec<Theorem>,

    /// Check every theorem.
    #[arg(long)]
    pub all: bool,

    /// Every code on `--n` ≤ 3 neurons, with and without the empty codeword.
    #[arg(long, conflicts_with_all = ["samples", "code", "input"])]
    pub exhaustive: bool,

    /// Number of seeded random codes on `--n` neurons.
    #[arg(long, conflicts_with_all = ["code", "input"], requires = "seed")]
    pub samples: Option<usize>,

    #[arg(long)]
    pub seed: Option<u64>,

    #[arg(long, default_value_t = 0.3)]
    pub density: f64,

    /// Permutation images for the permutation theorem, e.g. `2,3,1`.
    #[arg(long)]
    pub perm: Option<Permutation>,

    /// Neuron to duplicate.
    #[arg(long)]
    pub source: Option<usize>,

    /// Neuron to delete for the projection theorem.
    #[arg(long)]
    pub delete: Option<usize>,

    /// Map steps for the composition theorem.
    #[arg(long = "step")]
    pub steps: Vec<ElementaryMap>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli, &mut std::io::stdout().lock()) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

impl From<commands::Status> for ExitCode {
    fn from(status: commands::Status) -> Self {
        match status {
            commands::Status::Ok => ExitCode::SUCCESS,
            commands::Status::Violation => ExitCode::from(1),
        }
    }
}

impl CodeArgs {
    pub fn load(&self, form: NotationForm) -> Result<obstrukt::NeuralCode, CliError> {
        match (&self.code, &self.input) {
            (Some(text), None) => {
                let n = self.n.ok_or_else(|| CliError::usage("--code requires --n"))?;
                input::parse_inline(text, n, form)
            }
            (None, Some(path)) => {
                let (name, text) = input::read_source(path)?;
                let code = input::parse_file(&text, form, &name)?;
                match self.n {
                    Some(n) if n != code.n() => {
                        Err(CliError::usage(format!("--n {n} disagrees with the input header n={}", code.n())))
                    }
                    _ => Ok(code),
                }
            }
            _ => Err(CliError::usage("give the code with --n and --code, or with --input")),
        }
    }

    pub fn given(&self) -> bool {
        self.code.is_some() || self.input.is_some()
    }
}
