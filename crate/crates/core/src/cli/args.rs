use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Clone, Debug)]
#[command(
    name = "hopfgs",
    version,
    about = "Exact cohomology computations for Hopf algebras",
    long_about = "Computes Gerstenhaber-Schack and bialgebra cohomology of quantum SL(2), \
                  PSL(2) and finite-dimensional Hopf algebras with exact arithmetic, and \
                  verifies the structural identities the computations rely on.\n\n\
                  Exit status: 0 when every check passes, 1 when a check fails, 2 on error. \
                  HOPFGS_BUDGET caps cochain space dimensions (default 5000)."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Clone, Debug)]
pub enum Command {
    /// Build a cochain complex and report its homology.
    Cohomology {
        #[arg(value_enum)]
        target: Target,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Analyze a measured algebra given as JSON or a built-in family.
    Normalizability,
    /// Print the JSON schema of a report kind.
    ReportSchema {
        /// One of: envelope, cohomology, verify, normalizability.
        #[arg(default_value = "envelope")]
        kind: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Sl2,
    Psl2,
    GroupGs,
    Hochschild,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Yd,
    Sigma,
    Averaging,
    Relations,
    Normalizability,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    /// The group algebra `CG`.
    Group,
    /// The algebra of functions `O(G)`.
    Function,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum BimoduleKind {
    Trivial,
    Regular,
    /// Two-dimensional, built from characters with `--seed`.
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    /// `C^n` with the counting measure.
    Cn,
    /// `C^k` with the measure given by `--weights`.
    Weighted,
    /// `M_n(C)` with the trace.
    Matrix,
    /// `M_2(C)` with the quantum trace at `--q`.
    Trq,
}

#[derive(Args, Clone, Debug)]
pub struct Options {
    /// Deformation parameter, a nonzero rational such as `2` or `-3/5`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub q: Option<String>,
    /// Work over the field of rational functions in q.
    #[arg(long, global = true, conflicts_with = "q")]
    pub symbolic_q: bool,
    /// Maximal word length kept by the rewriting system.
    #[arg(long, global = true)]
    pub degree_bound: Option<usize>,
    /// Top cochain degree (resolution commands: degree of the tested monomials).
    #[arg(long, global = true)]
    pub max_degree: Option<usize>,
    /// Built-in finite group: Z2, Z3, Z4 or S3.
    #[arg(long, global = true)]
    pub group: Option<String>,
    /// Which Hopf algebra of the group.
    #[arg(long, global = true, value_enum)]
    pub algebra: Option<Algebra>,
    /// Coefficient bimodule.
    #[arg(long, global = true, value_enum)]
    pub bimodule: Option<BimoduleKind>,
    /// Input file (measured algebra JSON).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Built-in measured algebra family.
    #[arg(long, global = true, value_enum)]
    pub builtin: Option<Builtin>,
    /// Size parameter of the built-in family.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Comma-separated weights for `--builtin weighted`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weights: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Seed for randomized checks and random bimodules.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}
