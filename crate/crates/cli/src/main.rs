//! hopfcorad — batch reports on coradical, polynomial and primitive
//! filtrations of finite-dimensional (or windowed) Hopf algebras, normal
//! forms in the linearized free-group category, and named theorem checks.
//!
//! Four verbs:
//!
//! ```text
//! hopfcorad analyze trunc-poly:2^2 --nmax 3
//! hopfcorad reduce "[x1^3]_1"
//! hopfcorad verify corad-eq-poly --alg trunc-poly:2^2 --nmax 3 --xmax 2
//! hopfcorad functor dual:trunc-poly:2^2 --what Q --m 1 --nmax 4
//! ```
//!
//! Output is a human table by default, `--json` for the versioned report
//! (`"schema": 1`), `--csv` for one line per check. Identical invocations
//! produce byte-identical JSON: randomized subchecks are driven entirely by
//! `--seed`. Exit codes: 0 all checks passed, 1 a verification failed,
//! 2 the input was unusable (unknown name, parse error, broken axioms).
//!
//! Set `HOPFCORAD_CACHE_DIR` to an existing directory to persist expensive
//! functor-side matrices between runs.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfcorad_core::field::FieldSpec;

mod analyze;
mod functor;
mod reduce;
mod report;
mod util;
mod verify;

use report::Report;

#[derive(Parser)]
#[command(
    name = "hopfcorad",
    version,
    about = "Filtration reports, rewriting and theorem checks for Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Ambient field for field-parametric builders: Q or Fp:<p>.
    #[arg(long, global = true, value_parser = util::parse_field_flag)]
    field: Option<FieldSpec>,

    /// Emit the versioned JSON report.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit one CSV line per check.
    #[arg(long, global = true)]
    csv: bool,

    /// Seed for randomized subchecks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Trial count for randomized subchecks (each has its own default).
    #[arg(long, global = true)]
    trials: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Filtration dimensions, conilpotency, goodness and structure flags.
    Analyze {
        /// Builder name (e.g. trunc-poly:2^2, group:S3) or a definition file.
        alg: String,
        /// Largest filtration stage to compute.
        #[arg(long, default_value_t = 3)]
        nmax: usize,
    },
    /// Normal form of a linear combination of gr^op morphisms.
    Reduce {
        /// Expression, e.g. "[x1^3]_1" or "[x1|x1]_1 - [e|x1]_1 - [x1|e]_1".
        expr: String,
    },
    /// Run one named theorem check; exits 1 if it fails.
    Verify {
        /// corad-eq-poly, digit-sum, goodness, lucas, outer, q-subset-p or
        /// shuffle.
        id: String,
        /// Algebra reference, for the checks that take one.
        #[arg(long)]
        alg: Option<String>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Largest tensor power X (corad-eq-poly).
        #[arg(long)]
        xmax: Option<usize>,
        /// Prime (digit-sum, lucas).
        #[arg(long)]
        p: Option<u64>,
        /// Largest binomial row (lucas).
        #[arg(long)]
        mmax: Option<u64>,
        /// Module object (q-subset-p).
        #[arg(long)]
        m: Option<usize>,
        /// dim V (shuffle).
        #[arg(long)]
        dimv: Option<usize>,
        /// Window degree (digit-sum, shuffle).
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Dimension tables for the filtrations of the module α(H).
    Functor {
        /// Algebra reference; must resolve to a cocommutative Hopf algebra.
        alg: String,
        /// Which filtration: poly, primitive-part, or Q.
        #[arg(long, value_enum)]
        what: functor::What,
        /// Single stage n (overrides --nmax).
        #[arg(long)]
        n: Option<usize>,
        /// Stage range 0..=nmax (default 3).
        #[arg(long)]
        nmax: Option<usize>,
        /// Object X for --what poly (default 1).
        #[arg(long = "X")]
        x: Option<usize>,
        /// Object m for --what Q (default 1).
        #[arg(long)]
        m: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(mut report) => {
            report.finalize();
            let rendered = if cli.json {
                report.render_json()
            } else if cli.csv {
                report.render_csv()
            } else {
                report.render_human()
            };
            print!("{rendered}");
            if report.failed() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("hopfcorad: error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> hopfcorad_core::Result<Report> {
    match &cli.command {
        Command::Analyze { alg, nmax } => analyze::run(alg, cli.field, *nmax),
        Command::Reduce { expr } => reduce::run(expr, cli.field),
        Command::Verify {
            id,
            alg,
            nmax,
            xmax,
            p,
            mmax,
            m,
            dimv,
            degree,
        } => verify::run(&verify::Args {
            id,
            alg: alg.as_deref(),
            ambient: cli.field,
            nmax: *nmax,
            xmax: *xmax,
            p: *p,
            mmax: *mmax,
            m: *m,
            dimv: *dimv,
            degree: *degree,
            seed: cli.seed,
            trials: cli.trials,
        }),
        Command::Functor {
            alg,
            what,
            n,
            nmax,
            x,
            m,
        } => functor::run(functor::Args {
            alg,
            ambient: cli.field,
            what: *what,
            n: *n,
            nmax: *nmax,
            x: *x,
            m: *m,
        }),
    }
}
