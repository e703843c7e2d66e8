mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::Parser;

use args::{Cli, Command, GlobalOpts};
use report::{Meta, RunReport};
use zetanorm::{Error, PrecisionContext};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NONCONVERGENCE: u8 = 3;

fn context(g: &GlobalOpts) -> Result<PrecisionContext, Error> {
    let ctx = PrecisionContext {
        digits: g.digits,
        sum_terms: g.sum_terms,
        quad_rel_tol: g.quad_tol,
        seed: g.seed,
        ..PrecisionContext::default()
    };
    ctx.validate()?;
    Ok(ctx)
}

fn run(cli: &Cli) -> Result<RunReport, Error> {
    let start = Instant::now();
    let g = &cli.global;
    let ctx = context(g)?;
    let (name, out) = match &cli.command {
        Command::Coeffs(a) => ("coeffs", commands::coeffs(a, &ctx)?),
        Command::Eval(a) => ("eval", commands::eval(a, &ctx)?),
        Command::Moments(a) => ("moments", commands::moments(a, &ctx)?),
        Command::Norms(a) => ("norms", commands::norms(a, &ctx)?),
        Command::Cdf(a) => ("cdf", commands::cdf(a)?),
        Command::Verify(a) => ("verify", commands::verify(a, g.tol, &ctx)?),
    };
    let mut params = out.params;
    params["global"] = serde_json::to_value(g).expect("serializes");
    let (timestamp, wall_time_ms) = if g.no_timestamp {
        (None, None)
    } else {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        (Some(now), Some(start.elapsed().as_millis() as u64))
    };
    Ok(RunReport {
        command: name,
        params,
        results: out.results,
        checks: out.checks,
        meta: Meta {
            digits: ctx.digits,
            seed: ctx.seed,
            version: env!("CARGO_PKG_VERSION"),
            timestamp,
            wall_time_ms,
        },
        table: out.table,
        csv: out.csv,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_non_convergence() { EXIT_NONCONVERGENCE } else { EXIT_USAGE });
        }
    };
    let text = report.render(cli.global.format);
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    if report.failed() {
        ExitCode::from(EXIT_CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
