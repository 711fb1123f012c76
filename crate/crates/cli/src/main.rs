//! `qcap`: capacity-bound curves, point queries, and the self-check suite.

mod format;
mod svg;
mod table;
mod tables;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qcap::bounds::{
    ad_upper, bb84_upper, corollary7_bound, delta, dephasing_upper, hashing_lower, no_cloning_line,
    theorem6_bound, uniform_grid, DeltaOptions,
};
use qcap::verify::{run_verification, VerifyOptions};

use crate::format::general;
use crate::table::Table;

#[derive(Parser)]
#[command(
    name = "qcap",
    version,
    about = "Quantum capacity bounds for depolarizing and BB84 channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Depolarizing-channel bounds as CSV
    DepCurve {
        #[arg(long, default_value_t = 0.0)]
        pmin: f64,
        #[arg(long, default_value_t = 0.3)]
        pmax: f64,
        #[arg(long, default_value_t = 601)]
        steps: usize,
        /// CSV destination (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also plot the curves to this SVG file
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Append hull columns clamped at zero
        #[arg(long)]
        include_clamped: bool,
        /// Minimize delta over the whole constraint curve, not just the degradable region
        #[arg(long)]
        unrestricted_delta: bool,
    },
    /// BB84 upper bound as CSV
    Bb84Curve {
        #[arg(long, default_value_t = 0.0)]
        qmin: f64,
        #[arg(long, default_value_t = 0.25)]
        qmax: f64,
        #[arg(long, default_value_t = 501)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run the numerical self-checks; exit 1 if any fails
    Verify {
        /// Threshold applied to every check instead of its default
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Evaluate one bound at one parameter value
    Point {
        /// hashing, one_minus_Hp, one_minus_4p, ad_bound, delta, thm6_hull, cor7_hull, bb84_upper
        #[arg(long)]
        bound: String,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        unrestricted_delta: bool,
    },
    /// Plot a CSV produced by dep-curve or bb84-curve, or a freshly sampled default set
    Svg {
        #[arg(long)]
        out: PathBuf,
        /// CSV to plot (first column is the parameter)
        #[arg(long, conflicts_with = "set")]
        from: Option<PathBuf>,
        /// Sample the default "dep" or "bb84" curve set
        #[arg(long)]
        set: Option<String>,
        /// Comma-separated subset of columns to plot
        #[arg(long)]
        columns: Option<String>,
    },
}

enum Failure {
    /// Bad arguments, I/O, or a library error.
    Usage(String),
    /// The self-check suite reported a failure.
    Verification,
}

impl From<qcap::Error> for Failure {
    fn from(e: qcap::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn check_range(name: &str, lo: f64, hi: f64, max: f64, steps: usize) -> Outcome {
    if !(lo >= 0.0 && lo < hi && hi <= max) {
        return usage(format!(
            "{name} range must satisfy 0 <= min < max <= {max}, got [{lo}, {hi}]"
        ));
    }
    if steps < 2 {
        return usage(format!("--steps must be at least 2, got {steps}"));
    }
    Ok(())
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => {
            fs::write(p, text).or_else(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .or_else(|e| usage(format!("cannot write to stdout: {e}"))),
    }
}

fn write_svg(path: &Path, table: &Table) -> Outcome {
    let doc = svg::render(table).or_else(usage)?;
    write_output(Some(path), &doc)
}

fn delta_options(unrestricted: bool) -> DeltaOptions {
    DeltaOptions {
        restrict_degradable: !unrestricted,
        ..DeltaOptions::default()
    }
}

fn default_dep_table() -> Result<Table, Failure> {
    Ok(tables::depolarizing_table(
        0.0,
        0.3,
        601,
        &DeltaOptions::default(),
        false,
    )?)
}

fn point(bound: &str, x: f64, unrestricted: bool) -> Outcome {
    let opts = delta_options(unrestricted);
    let hull_at = |name: &str| -> Result<f64, Failure> {
        if !(0.0..=0.3).contains(&x) {
            return usage(format!("{name} is tabulated on [0, 0.3]; got {x}"));
        }
        let grid = uniform_grid(0.0, 0.3, 601)?;
        let curve = if name == "thm6_hull" {
            theorem6_bound(&grid, &opts)?
        } else {
            corollary7_bound(&grid)?
        };
        Ok(curve.eval(x).expect("x inside the grid"))
    };
    let value = match bound {
        "hashing" | "hashing_lower" => hashing_lower(x)?,
        "one_minus_Hp" | "dephasing_upper" => dephasing_upper(x)?,
        "one_minus_4p" | "no_cloning_line" => no_cloning_line(x),
        "ad_bound" | "ad_upper" => ad_upper(x)?,
        "bb84_upper" => bb84_upper(x)?,
        "thm6_hull" | "cor7_hull" => hull_at(bound)?,
        "delta" => {
            let r = delta(x, &opts)?;
            println!("delta({}) = {}", general(x, 12), general(r.value, 12));
            println!(
                "argmin (u, v) = ({}, {})",
                general(r.argmin_u, 12),
                general(r.argmin_v, 12)
            );
            return Ok(());
        }
        other => return usage(format!("unknown bound {other:?}")),
    };
    println!("{bound}({}) = {}", general(x, 12), general(value, 12));
    Ok(())
}

fn select_columns(table: Table, columns: Option<&str>) -> Result<Table, Failure> {
    let Some(list) = columns else {
        return Ok(table);
    };
    let mut out = Table::new(&table.columns[0], table.data[0].clone());
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some(i) = table.columns.iter().skip(1).position(|c| c == name) else {
            return usage(format!("no column named {name:?}"));
        };
        out.push(name, table.data[i + 1].clone());
    }
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::DepCurve {
            pmin,
            pmax,
            steps,
            out,
            svg,
            include_clamped,
            unrestricted_delta,
        } => {
            check_range("p", pmin, pmax, 1.0, steps)?;
            if pmax >= 1.0 {
                return usage("delta is defined for p < 1; use --pmax below 1");
            }
            let t = tables::depolarizing_table(
                pmin,
                pmax,
                steps,
                &delta_options(unrestricted_delta),
                include_clamped,
            )?;
            write_output(out.as_deref(), &t.to_csv())?;
            if let Some(path) = svg {
                write_svg(&path, &t)?;
            }
            Ok(())
        }
        Command::Bb84Curve {
            qmin,
            qmax,
            steps,
            out,
            svg,
        } => {
            check_range("q", qmin, qmax, 0.5, steps)?;
            let t = tables::bb84_table(qmin, qmax, steps)?;
            write_output(out.as_deref(), &t.to_csv())?;
            if let Some(path) = svg {
                write_svg(&path, &t)?;
            }
            Ok(())
        }
        Command::Verify { tol, seed } => {
            if let Some(t) = tol {
                if t.is_nan() || t <= 0.0 {
                    return usage(format!("--tol must be positive, got {t}"));
                }
            }
            let report = run_verification(&VerifyOptions {
                seed,
                tol,
                ..VerifyOptions::default()
            })?;
            for check in &report.checks {
                println!("{check}");
            }
            if report.all_passed() {
                println!("all {} checks passed", report.checks.len());
                Ok(())
            } else {
                let failed = report.checks.iter().filter(|c| !c.passed).count();
                println!("{failed} of {} checks failed", report.checks.len());
                Err(Failure::Verification)
            }
        }
        Command::Point {
            bound,
            x,
            unrestricted_delta,
        } => point(&bound, x, unrestricted_delta),
        Command::Svg {
            out,
            from,
            set,
            columns,
        } => {
            let table = match (from, set.as_deref()) {
                (Some(path), _) => {
                    let text = fs::read_to_string(&path)
                        .or_else(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                    Table::from_csv(&text).or_else(usage)?
                }
                (None, Some("dep") | None) => default_dep_table()?,
                (None, Some("bb84")) => tables::bb84_table(0.0, 0.25, 501)?,
                (None, Some(other)) => return usage(format!("unknown curve set {other:?}")),
            };
            write_svg(&out, &select_columns(table, columns.as_deref())?)
        }
    }
}

fn configure_threads() -> Outcome {
    let Ok(raw) = std::env::var("QCAP_THREADS") else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().or_else(|_| {
        usage(format!(
            "QCAP_THREADS must be a non-negative integer, got {raw:?}"
        ))
    })?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .or_else(|e| usage(format!("cannot configure thread pool: {e}")))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
