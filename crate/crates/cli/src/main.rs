//! `tornheim` command-line front end.

mod eval;
mod literal;
mod record;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use tornheim::closed_forms::{convolution_check, corollary_values, LimitPath};
use tornheim::suites::{tally, Suite};
use tornheim::witten::{witten_dderiv_neg_even, witten_deriv_neg_odd};
use tornheim::EvalOptions;

use record::{Format, Record, Sink};

const USAGE_ERROR: u8 = 2;
const CHECK_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(name = "tornheim", version, about = "Tornheim double zeta values and identity checks")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Target relative tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Seed for suite sampling (ChaCha8)
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Sample points per suite
    #[arg(long, global = true)]
    points: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Truncation height of vertical contours
    #[arg(long, global = true)]
    quad_height: Option<f64>,
    /// Largest index in tables
    #[arg(long, global = true, default_value_t = 2)]
    max: u32,
}

#[derive(Subcommand)]
enum Verb {
    /// Evaluate one target at one point
    #[command(after_help = eval::target_help())]
    Eval {
        target: String,
        #[arg(allow_hyphen_values = true)]
        args: Vec<String>,
    },
    /// Run one identity suite
    Verify { suite: String },
    /// Emit an exact table
    Table {
        #[arg(value_enum)]
        kind: Table,
    },
    /// Run every suite
    Selftest,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Table {
    Corollary,
    Convolution,
    Witten,
}

fn options(cli: &Cli) -> Result<EvalOptions, String> {
    let mut o = EvalOptions::default();
    if let Some(t) = cli.tol {
        o.target_rel_tol = t;
    }
    if let Some(h) = cli.quad_height {
        o.quad_height = h;
    }
    o.validate().map_err(|e| e.to_string())?;
    Ok(o)
}

fn suite_names() -> String {
    Suite::ALL.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn eval(target: &str, args: &[String], opts: &EvalOptions, sink: &mut Sink<impl Write>) -> Result<bool, String> {
    let p = eval::parse(target, args)?;
    let t0 = Instant::now();
    let out = eval::run(&p, opts);
    let rec = Record::new(p.target, p.inputs.clone());
    let mut rec = match out {
        Ok(eval::Computed::Approx(v)) => rec.with_approx(v),
        Ok(eval::Computed::Exact(r)) => rec.with_exact(&r),
        Err(e) => rec.refused(&e),
    };
    rec.elapsed_ms = Some(elapsed_ms(t0));
    sink.record(&rec).map_err(|e| e.to_string())?;
    Ok(rec.ok())
}

fn verify(cli: &Cli, name: &str, opts: &EvalOptions, sink: &mut Sink<impl Write>) -> Result<bool, String> {
    let suite = Suite::parse(name).ok_or_else(|| format!("unknown suite {name:?}; expected one of {}", suite_names()))?;
    if cli.points == Some(0) {
        return Err("--points must be positive".into());
    }
    let checks = suite.run(cli.seed, cli.points, opts);
    let io = |e: io::Error| e.to_string();
    for c in &checks {
        sink.record(&Record::from_check(c)).map_err(io)?;
    }
    let (passed, total) = tally(&checks);
    sink.summary(None, passed, total).map_err(io)?;
    Ok(passed == total)
}

fn table(kind: Table, max: u32, opts: &EvalOptions, sink: &mut Sink<impl Write>) -> Result<bool, String> {
    let io = |e: io::Error| e.to_string();
    let mut all_ok = true;
    let triples = |lo: u32| {
        (lo..=max).flat_map(move |a| (lo..=max).flat_map(move |b| (lo..=max).map(move |c| (a, b, c))))
    };
    match kind {
        Table::Corollary => {
            for (a, b, c) in triples(0) {
                for path in LimitPath::ALL {
                    let inputs = vec![a.to_string(), b.to_string(), c.to_string(), path.name().into()];
                    let r = Record::new("corollary", inputs).with_exact(&corollary_values(a, b, c, path));
                    sink.record(&r).map_err(io)?;
                }
            }
        }
        Table::Convolution => {
            for (a, b, c) in triples(0) {
                let res = convolution_check(a, b, c);
                let mut r = Record::new("convolution", vec![a.to_string(), b.to_string(), c.to_string()]).with_exact(&res);
                if !res.is_zero() {
                    r = r.failed("residual is not zero".into());
                    all_ok = false;
                }
                sink.record(&r).map_err(io)?;
            }
        }
        Table::Witten => {
            for a in 1..=max.max(1) {
                let t0 = Instant::now();
                let (target, rep) = if a % 2 == 1 {
                    ("witten_deriv", witten_deriv_neg_odd(a, opts))
                } else {
                    ("witten_dderiv", witten_dderiv_neg_even(a, opts))
                };
                let rec = Record::new(target, vec![format!("-{a}")]);
                let mut rec = match rep {
                    Ok(rep) => {
                        let sign = rep.predicted_sign.map(|s| format!("predicted sign {s:+}")).unwrap_or_default();
                        let rec = rec.with_approx(rep.value_or_deriv);
                        if rep.sign_matches() {
                            Record { detail: Some(sign), ..rec }
                        } else {
                            rec.failed(format!("{sign} not matched"))
                        }
                    }
                    Err(e) => rec.refused(&e),
                };
                rec.elapsed_ms = Some(elapsed_ms(t0));
                all_ok &= rec.ok();
                sink.record(&rec).map_err(io)?;
            }
        }
    }
    Ok(all_ok)
}

fn selftest(cli: &Cli, opts: &EvalOptions, sink: &mut Sink<impl Write>) -> Result<bool, String> {
    let io = |e: io::Error| e.to_string();
    let mut all_ok = true;
    for suite in Suite::ALL {
        let checks = suite.run(cli.seed, cli.points, opts);
        for c in checks.iter().filter(|c| !c.passed()) {
            sink.record(&Record::from_check(c)).map_err(io)?;
        }
        let (passed, total) = tally(&checks);
        all_ok &= passed == total;
        sink.summary(Some(suite.name()), passed, total).map_err(io)?;
    }
    Ok(all_ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let opts = match options(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(USAGE_ERROR);
        }
    };
    let stdout = io::stdout().lock();
    let mut sink = Sink::new(io::BufWriter::new(stdout), cli.output);
    let res = match &cli.verb {
        Verb::Eval { target, args } => eval(target, args, &opts, &mut sink),
        Verb::Verify { suite } => verify(&cli, suite, &opts, &mut sink),
        Verb::Table { kind } => table(*kind, cli.max, &opts, &mut sink),
        Verb::Selftest => selftest(&cli, &opts, &mut sink),
    };
    drop(sink);
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(CHECK_FAILURE),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
