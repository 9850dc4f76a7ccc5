use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use qhl::compute::{compute, ComputeArgs, What};
use qhl::selftest::selftest;
use qhl::{verify, verify_all, Suite, UsageError, VerificationReport};

#[derive(Parser)]
#[command(name = "qhl", version, about = "Exact checks of q-fundamental and Hall-Littlewood identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial as canonical JSON: qn, S, L, schur, Hn or gamma.
    Compute {
        what: String,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i64>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "D")]
        d: Option<usize>,
        /// Specialize q to this integer.
        #[arg(long, allow_negative_numbers = true)]
        q: Option<i64>,
        /// Skew shape such as "3,2/1".
        #[arg(long)]
        shape: Option<String>,
        /// Descent set such as "1,3"; may be empty.
        #[arg(long = "I")]
        descents: Option<String>,
        /// Permutation in one-line notation, "2 3 1".
        #[arg(long)]
        perm: Option<String>,
        /// default, positive-first, negatives-block or random.
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run an identity suite, or `all`.
    Verify {
        suite: String,
        #[command(flatten)]
        bounds: BoundFlags,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Ring axioms, the signed-to-plain map, RSK and serialization.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
}

#[derive(Args)]
struct BoundFlags {
    #[arg(long)]
    max_outer: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long = "D")]
    d: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    mx: Option<usize>,
    #[arg(long)]
    my: Option<usize>,
    /// Random rational points (qn-routes).
    #[arg(long)]
    points: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OutputFlags {
    /// Human-readable report instead of JSON.
    #[arg(long)]
    text: bool,
    /// Include wall-clock time; the report is then no longer reproducible.
    #[arg(long)]
    timing: bool,
}

fn emit(mut report: VerificationReport, start: Instant, out: &OutputFlags) -> ExitCode {
    if out.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis());
    }
    if out.text {
        print!("{}", report.to_text());
    } else {
        println!("{}", report.to_json());
    }
    if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_verify(suite: &str, f: &BoundFlags) -> Result<VerificationReport, UsageError> {
    if suite == "all" {
        let given = [
            ("--max-outer", f.max_outer),
            ("--m", f.m),
            ("--D", f.d),
            ("--n", f.n),
            ("--mx", f.mx),
            ("--my", f.my),
            ("--points", f.points),
        ];
        if let Some((flag, _)) = given.iter().find(|(_, v)| v.is_some()) {
            return Err(UsageError(format!("{flag} is not accepted by `verify all`, which runs every suite at its defaults")));
        }
        return verify_all(f.seed);
    }
    let suite: Suite = suite.parse()?;
    let mut b = suite.default_bounds();
    b.max_outer = f.max_outer.unwrap_or(b.max_outer);
    b.m = f.m.unwrap_or(b.m);
    b.d = f.d.unwrap_or(b.d);
    b.n = f.n.unwrap_or(b.n);
    b.mx = f.mx.unwrap_or(b.mx);
    b.my = f.my.unwrap_or(b.my);
    b.points = f.points.unwrap_or(b.points);
    b.seed = f.seed;
    verify(suite, &b)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = qhl::init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let start = Instant::now();
    let result = match cli.command {
        Command::Compute { what, n, m, d, q, shape, descents, perm, order, seed } => {
            let args = ComputeArgs { n, m, d, q, shape, descents, perm, order, seed };
            what.parse::<What>().and_then(|w| compute(w, &args)).map(|json| {
                println!("{json}");
                ExitCode::SUCCESS
            })
        }
        Command::Verify { suite, bounds, out } => run_verify(&suite, &bounds).map(|r| emit(r, start, &out)),
        Command::Selftest { seed, out } => Ok(emit(selftest(seed), start, &out)),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
