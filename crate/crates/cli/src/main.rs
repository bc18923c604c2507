mod report;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bernpoly::bernoulli::{bernoulli_number, bernoulli_polynomial};
use bernpoly::exactnum::Rational;
use bernpoly::identities::{self, Family, ParityReading, ShiftedRhs, SweepConfig};
use bernpoly::padic::{self, rational_to_padic, shifted_power, VolkenbornSeries};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::Report;

#[derive(Parser)]
#[command(
    name = "bernpoly",
    version,
    about = "Exact checks of Bernoulli polynomial identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify identity families over a parameter grid.
    Verify(SweepArgs),
    /// Verify the intermediate algebraic steps only.
    ProofSteps(SweepArgs),
    /// Print B_n, B_n(x) or B_n(a).
    Bernoulli {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Print the polynomial B_n(x).
        #[arg(long, conflicts_with = "at")]
        poly: bool,
        /// Evaluate B_n at a rational point such as 1/3.
        #[arg(long, allow_negative_numbers = true)]
        at: Option<String>,
    },
    /// Show the partial sums of the Volkenborn integral of (x0+t)^n settling.
    Volkenborn {
        #[arg(long, default_value_t = 1)]
        degree: u32,
        #[arg(long, default_value = "0", allow_negative_numbers = true)]
        x0: String,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        #[arg(long, default_value_t = 4)]
        precision: u32,
    },
    /// List the identity families.
    Families,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Args)]
struct SweepArgs {
    /// Family tag, or `all`; repeatable and comma separated.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    family: Vec<String>,
    #[arg(long, default_value_t = 8)]
    max_m: u32,
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    #[arg(long, default_value_t = 4)]
    max_q: u32,
    /// Primes for the p-adic families; repeatable and comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7])]
    prime: Vec<u64>,
    #[arg(long, default_value_t = 4)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Markdown)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Read the constant-term filter of the `k = l` identity as `l + m` odd.
    #[arg(long)]
    strict_parity: bool,
    /// Drop the `C(j+m-nu, l+m-nu)` factor from the `k = l` identities.
    #[arg(long)]
    printed_shifted_rhs: bool,
    /// Add 1 to every right-hand side of this family.
    #[arg(long, hide = true)]
    corrupt: Option<String>,
}

/// Exit status: 0 all passed, 1 some check failed, 2 usage error.
enum Outcome {
    Pass,
    Fail,
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_sweep(args, false),
        Command::ProofSteps(args) => cmd_sweep(args, true),
        Command::Bernoulli { n, poly, at } => cmd_bernoulli(n, poly, at),
        Command::Volkenborn {
            degree,
            x0,
            prime,
            precision,
        } => cmd_volkenborn(degree, &x0, prime, precision),
        Command::Families => {
            for f in Family::ALL {
                println!("{:<22} {}", f.tag(), f.summary());
            }
            Ok(Outcome::Pass)
        }
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(code) => code,
    }
}

fn select_families(names: &[String], steps_only: bool) -> Result<Vec<Family>, ExitCode> {
    let pool: Vec<Family> = Family::ALL
        .iter()
        .copied()
        .filter(|f| !steps_only || f.is_step())
        .collect();
    let mut chosen = Vec::new();
    for name in names {
        if name == "all" {
            chosen.extend(pool.iter().copied());
            continue;
        }
        let f: Family = name.parse().map_err(usage)?;
        if !pool.contains(&f) {
            return Err(usage(format!("`{name}` is not a proof-step family")));
        }
        chosen.push(f);
    }
    chosen.sort();
    chosen.dedup();
    Ok(chosen)
}

fn sweep_config(args: &SweepArgs) -> Result<SweepConfig, ExitCode> {
    if args.max_m == 0 || args.max_n == 0 || args.max_q == 0 {
        return Err(usage("bounds must be positive"));
    }
    if args.precision == 0 {
        return Err(usage("precision must be at least 1"));
    }
    if let Some(p) = args.prime.iter().find(|&&p| !padic::is_prime(p)) {
        return Err(usage(format!(
            "{p} is not a prime (or exceeds {})",
            padic::MAX_PRIME
        )));
    }
    let corrupt = match &args.corrupt {
        None => None,
        Some(name) => {
            let f: Family = name.parse().map_err(usage)?;
            if !f.supports_corruption() {
                return Err(usage(format!("`{name}` does not support corruption")));
            }
            Some(f)
        }
    };
    let mut primes = args.prime.clone();
    primes.sort_unstable();
    primes.dedup();
    Ok(SweepConfig {
        max_m: args.max_m,
        max_n: args.max_n,
        max_q: args.max_q,
        primes,
        precision: args.precision,
        parity: if args.strict_parity {
            ParityReading::LowerLimitParity
        } else {
            ParityReading::IndexParity
        },
        shifted_rhs: if args.printed_shifted_rhs {
            ShiftedRhs::Printed
        } else {
            ShiftedRhs::Derived
        },
        corrupt,
    })
}

fn cmd_sweep(args: SweepArgs, steps_only: bool) -> Result<Outcome, ExitCode> {
    let families = select_families(&args.family, steps_only)?;
    let cfg = sweep_config(&args)?;
    let records = identities::sweep_families(&families, &cfg).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    let report = Report::new(&families, &cfg, records);
    let text = match args.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
        Format::Markdown => Ok(report.to_markdown()),
    }
    .map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })?;
    match &args.out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            eprintln!("{}", report.summary_line());
        }
        None => {
            let _ = io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(if report.all_passed() {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_bernoulli(n: i64, poly: bool, at: Option<String>) -> Result<Outcome, ExitCode> {
    let n = usize::try_from(n).map_err(|_| usage(format!("index must be nonnegative, got {n}")))?;
    if poly {
        println!("{}", bernoulli_polynomial(n));
    } else if let Some(a) = at {
        let a: Rational = a.parse().map_err(usage)?;
        println!("{}", bernoulli_polynomial(n).eval(&a));
    } else {
        println!("{}", bernoulli_number(n));
    }
    Ok(Outcome::Pass)
}

fn cmd_volkenborn(degree: u32, x0: &str, prime: u64, precision: u32) -> Result<Outcome, ExitCode> {
    let x0: Rational = x0.parse().map_err(usage)?;
    let f = shifted_power(degree, &x0);
    let series = VolkenbornSeries::run(&f, prime, precision).map_err(usage)?;
    let exact = bernoulli_polynomial(degree as usize).eval(&x0);
    let target = if x0.is_zero() {
        format!("B_{degree}")
    } else {
        format!("B_{degree}({x0})")
    };

    println!("integrand: {f}");
    println!("{:>3}  {:<28}  S_N in Q_{prime}", "N", "S_N");
    for level in &series.levels {
        println!(
            "{:>3}  {:<28}  {}",
            level.level,
            level.partial_sum.to_string(),
            level.padic
        );
    }
    let Some(value) = series.stabilized else {
        println!(
            "no stabilization by N = {}",
            VolkenbornSeries::max_level(&f, precision)
        );
        return Ok(Outcome::Fail);
    };
    println!("stabilized: {value}");
    let expected = rational_to_padic(&exact, prime, precision).map_err(usage)?;
    println!("exact: {target} = {exact} = {expected}");
    let (a, b) = value.common_form(&expected);
    if a.to_string() == b.to_string() {
        println!("agrees with {target} = {exact}");
        Ok(Outcome::Pass)
    } else {
        println!("disagrees with {target} = {exact}");
        Ok(Outcome::Fail)
    }
}
