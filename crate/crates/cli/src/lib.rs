//! Command-line front end: constructions, verification suites, and report
//! emission. Reports are deterministic: identical invocations produce
//! byte-identical output apart from the timing field.

mod checks;
mod commands;
mod report;

use clap::{Parser, Subcommand, ValueEnum};

pub use report::{Check, Report};

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(
    name = "finq",
    version,
    about = "Exact finite quantum structures: Clifford and Grassmann algebras, Lie contractions, Palev statistics, quantum set ranks, finite space-time operators"
)]
pub struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Seed for the randomized spot checks inside verify-all.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Clifford algebra constructions and representation checks.
    Clifford {
        #[command(subcommand)]
        verb: CliffordVerb,
    },
    /// Lie algebras by structure constants.
    Lie {
        #[command(subcommand)]
        verb: LieVerb,
    },
    /// Rotatons, di-fermions and Fock representations.
    Palev {
        #[command(subcommand)]
        verb: PalevVerb,
    },
    /// Perfinite sets, the serial table and the rank tower.
    Qset {
        #[command(subcommand)]
        verb: QsetVerb,
    },
    /// Finite space-time operators.
    Spacetime {
        #[command(subcommand)]
        verb: SpacetimeVerb,
    },
    /// Run the full invariant suite; exit 0 iff every check passes.
    VerifyAll {
        /// Largest quantum set rank to verify (signatures to 4, operator
        /// algebra to 3).
        #[arg(long, default_value_t = 4)]
        max_rank: u32,
        /// Largest chronon/di-fermion count for the dense cross-checks.
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        /// Contraction parameter for the finite-epsilon checks.
        #[arg(long, default_value = "1/10")]
        eps: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CliffordVerb {
    /// Matrix representation of Cl(p, q) with exact relation checks.
    Rep {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
    /// The bivector basis and its closure under the commutator.
    Bivectors {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum LieVerb {
    /// JSON descriptor of a named algebra.
    Show {
        #[arg(long)]
        name: String,
    },
    /// Killing form, signature and semisimplicity.
    Killing {
        #[arg(long)]
        name: String,
    },
    /// Exact Jacobi defect.
    Jacobi {
        #[arg(long)]
        name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PalevVerb {
    /// Spin-l rotaton system; l may be a half-integer such as 3/2.
    Rotaton {
        #[arg(long)]
        l: String,
    },
    /// Di-fermion algebra from the bivectors of Cl(n, n).
    Difermion {
        #[arg(long)]
        n: u32,
    },
    /// Fock representation of sl(n+1) on degree-p symmetric tensors.
    Fock {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum QsetVerb {
    /// Serial, rank and bracket form of one set.
    Serial {
        #[arg(long)]
        n: u64,
    },
    /// Serial table rows 0..=rank.
    Table {
        #[arg(long)]
        rank: u32,
    },
    /// Berezin pairing signatures for ranks 1..=rank.
    Signature {
        #[arg(long)]
        rank: u32,
    },
    /// Clifford relations and operator-algebra dimension at one rank.
    IsoCheck {
        #[arg(long)]
        rank: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpacetimeVerb {
    /// Spectrum of a chronon-sum coordinate (CSV: value,multiplicity).
    Feynman {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        mu: usize,
        /// Display unit multiplying every spectral value.
        #[arg(long, default_value = "1")]
        chrone: String,
        /// Metric of the chronon factor: "3,1" or "1,3".
        #[arg(long, default_value = "3,1")]
        metric: String,
    },
    /// The fifteen orbital generators with their block labels.
    Yang {
        /// Emit the labeled block decomposition.
        #[arg(long)]
        blocks: bool,
    },
    /// Contraction of the orbital algebra at finite epsilon.
    Contract {
        #[arg(long)]
        eps: String,
        #[arg(long, default_value_t = 1)]
        scale_x: i64,
        #[arg(long, default_value_t = 1)]
        scale_p: i64,
    },
}

/// Outcome of one invocation.
pub struct Outcome {
    pub exit_code: i32,
    pub report: Report,
}

/// Executes a parsed command line and assembles the report. Exit code 0 when
/// every check passed, 1 otherwise; usage errors never reach this point.
pub fn execute(cli: &Cli) -> Outcome {
    let started = std::time::Instant::now();
    let mut report = match &cli.command {
        Command::Clifford { verb } => commands::clifford(verb),
        Command::Lie { verb } => commands::lie(verb),
        Command::Palev { verb } => commands::palev(verb),
        Command::Qset { verb } => commands::qset(verb),
        Command::Spacetime { verb } => commands::spacetime(verb),
        Command::VerifyAll {
            max_rank,
            max_n,
            eps,
        } => checks::verify_all(*max_rank, *max_n, eps, cli.seed),
    };
    report.timing_ms = started.elapsed().as_millis();
    let exit_code = if report.all_passed() { 0 } else { 1 };
    Outcome { exit_code, report }
}

/// Renders a report in the chosen format.
pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json_string(),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}
