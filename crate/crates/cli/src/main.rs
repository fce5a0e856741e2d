use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fjrw_model::Case;
use mirrorcayley::cache::{default_dir, Cache, Lookup};
use mirrorcayley::output::render_series;
use mirrorcayley::registry::{compute, validate};
use mirrorcayley::suites::{run, Suite, VerifyConfig};
use mirrorcayley::{CliError, Format, EXIT_FAIL, EXIT_PASS};
use monodromy_numerics::Precision;
use q_forms::Normalization;

#[derive(Parser)]
#[command(name = "mirrorcayley", version, about = "Exact quasi-modular expansions, Cayley transforms and LG/CY checks")]
struct Cli {
    /// Truncation order of every series
    #[arg(long, global = true, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    order: u64,
    /// Decimal digits for the numeric checks
    #[arg(long, global = true, default_value_t = 50)]
    precision: u32,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long, global = true, env = "MIRRORCAYLEY_CACHE")]
    cache_dir: Option<PathBuf>,
    /// Denominator in E3 = (3E2(3tau) + E2(tau))/d; anything but 4 is a negative control
    #[arg(long, global = true, default_value_t = 4, hide = true)]
    e3_denominator: i64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum CaseArg {
    Cubic,
    Pillowcase,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ramanujan,
    Wdvv,
    Correspondence,
    Monodromy,
    Prepotential,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of a registered form
    Expand { form: String },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, value_enum)]
        case: Option<CaseArg>,
        #[arg(long, value_parser = ["2", "3"])]
        level: Option<String>,
    },
    /// Inspect or empty the on-disk cache
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Clear,
    List,
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Pretty => Format::Pretty,
    }
}

fn expand(cli: &Cli, form: &str) -> Result<i32, CliError> {
    validate(form)?;
    let order = cli.order as usize;
    let norm = Normalization { e3_denominator: cli.e3_denominator };
    let cache = Cache::new(cli.cache_dir.clone().unwrap_or_else(default_dir));
    let series = match cache.load(form, order, norm) {
        (Lookup::Hit, Some(s)) => s,
        (lookup, _) => {
            if lookup == Lookup::Invalid {
                eprintln!("warning: ignoring unreadable cache entry for {form}");
            }
            let s = compute(form, order, norm)?;
            if let Err(e) = cache.store(form, order, norm, &s) {
                eprintln!("warning: could not write cache: {e}");
            }
            s
        }
    };
    println!("{}", render_series(form, order, &series, format(cli.format)));
    Ok(EXIT_PASS)
}

fn verify(cli: &Cli, suite: SuiteArg, case: Option<CaseArg>, level: Option<&str>) -> Result<i32, CliError> {
    let suite = match suite {
        SuiteArg::Ramanujan => Suite::Ramanujan,
        SuiteArg::Wdvv => Suite::Wdvv,
        SuiteArg::Correspondence => Suite::Correspondence,
        SuiteArg::Monodromy => Suite::Monodromy,
        SuiteArg::Prepotential => Suite::Prepotential,
        SuiteArg::All => Suite::All,
    };
    let precision = if matches!(suite, Suite::Monodromy | Suite::All) {
        Precision::new(cli.precision).map_err(|e| CliError::Usage(e.to_string()))?
    } else {
        Precision::new(cli.precision.max(30)).map_err(|e| CliError::Usage(e.to_string()))?
    };
    let cases = match case {
        Some(CaseArg::Cubic) => vec![Case::Cubic],
        Some(CaseArg::Pillowcase) => vec![Case::Pillowcase],
        None => match level {
            Some("3") => vec![Case::Cubic],
            Some("2") => vec![Case::Pillowcase],
            _ => vec![Case::Cubic, Case::Pillowcase],
        },
    };
    let levels = match level {
        Some("3") => vec![3],
        Some("2") => vec![2],
        _ => cases.iter().map(|c| if *c == Case::Cubic { 3 } else { 2 }).collect(),
    };
    let cfg = VerifyConfig { order: cli.order as usize, precision, norm: Normalization { e3_denominator: cli.e3_denominator }, cases, levels };
    let report = run(suite, &cfg)?;
    let text = match format(cli.format) {
        Format::Json => report.to_json().to_string(),
        Format::Csv => report.to_csv(),
        Format::Pretty => report.to_pretty(),
    };
    println!("{text}");
    Ok(if report.pass() { EXIT_PASS } else { EXIT_FAIL })
}

fn cache_cmd(cli: &Cli, action: &CacheAction) -> Result<i32, CliError> {
    let cache = Cache::new(cli.cache_dir.clone().unwrap_or_else(default_dir));
    match action {
        CacheAction::Clear => {
            let n = cache.clear()?;
            match format(cli.format) {
                Format::Json => println!("{}", serde_json::json!({"removed": n, "dir": cache.dir()})),
                _ => println!("removed {n} entries from {}", cache.dir().display()),
            }
        }
        CacheAction::List => {
            let entries = cache.list()?;
            match format(cli.format) {
                Format::Json => {
                    let v: Vec<_> = entries.iter().map(|e| serde_json::json!({"name": e.name, "order": e.order, "e3_denominator": e.e3_denominator})).collect();
                    println!("{}", serde_json::json!({"dir": cache.dir(), "entries": v}));
                }
                Format::Csv => {
                    println!("name,order,e3_denominator");
                    for e in entries {
                        println!("{},{},{}", e.name, e.order, e.e3_denominator);
                    }
                }
                Format::Pretty => {
                    for e in entries {
                        println!("{:<24} order {:>4}  E3/{}", e.name, e.order, e.e3_denominator);
                    }
                }
            }
        }
    }
    Ok(EXIT_PASS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.e3_denominator == 0 {
        eprintln!("error: --e3-denominator must be nonzero");
        return ExitCode::from(2);
    }
    let result = match &cli.command {
        Command::Expand { form } => expand(&cli, form),
        Command::Verify { suite, case, level } => verify(&cli, *suite, *case, level.as_deref()),
        Command::Cache { action } => cache_cmd(&cli, action),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
