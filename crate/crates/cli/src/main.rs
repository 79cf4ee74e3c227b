mod args;

use std::io::Write;
use std::process::ExitCode;

use args::{
    z_convention, Cli, Command, GlobalOpts, Method, Metric, OutcomeArgs, QuantityArg, TableArgs,
};
use binrel::rootfind::DEFAULT_X_TOL;
use binrel::tablegen::{
    build_table, wilson_accuracy_sweep, GridSpec, Preset, Quantity, Render, RenderOptions,
};
use binrel::{ReliabilityOptions, TrialOutcome};
use clap::Parser;

/// Exit statuses: 2 for usage errors (clap uses the same), 3 for domain
/// errors.
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<binrel::Error> for Failure {
    fn from(e: binrel::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

impl OutcomeArgs {
    fn outcome(&self) -> Result<TrialOutcome, Failure> {
        Ok(TrialOutcome::new(self.samples, self.failures)?)
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let global = &cli.global;
    let x_tol = global.tolerance.unwrap_or(DEFAULT_X_TOL);
    let scalar = |x: f64| format!("{}\n", global.render_options().format(x));

    match &cli.command {
        Command::Confidence {
            outcome,
            reliability,
        } => {
            let c = binrel::confidence(outcome.outcome()?, *reliability);
            Ok(scalar(c.value()))
        }
        Command::Reliability {
            outcome,
            confidence,
            method,
            one_sided_z,
        } => {
            let outcome = outcome.outcome()?;
            if *method == Method::ClosedForm && outcome.failures() != 0 {
                return Err(usage("--method closed-form requires --failures 0"));
            }
            let options = ReliabilityOptions {
                x_tol,
                z: z_convention(*one_sided_z),
            };
            let r = binrel::reliability(outcome, *confidence, (*method).into(), options)?;
            Ok(scalar(r.value()))
        }
        Command::Assurance { outcome } => {
            let a = binrel::assurance(outcome.outcome()?, x_tol)?;
            Ok(scalar(a.value()))
        }
        Command::SampleSize {
            metric,
            target,
            reliability,
            failures,
        } => {
            let n = match (metric, reliability) {
                (Metric::Assurance, None) => binrel::min_samples_for_assurance(*target, *failures)?,
                (Metric::Assurance, Some(_)) => {
                    return Err(usage("--reliability only applies to --metric confidence"))
                }
                (Metric::Confidence, Some(r)) => {
                    binrel::min_samples_for_confidence(*target, *r, *failures)?
                }
                (Metric::Confidence, None) => {
                    return Err(usage("--metric confidence requires --reliability"))
                }
            };
            Ok(format!("{n}\n"))
        }
        Command::Table(args) => table(args, global),
        Command::Sweep {
            samples,
            c_source,
            detail,
            one_sided_z,
        } => {
            if *samples < 3 {
                return Err(usage(format!("sweep needs --samples >= 3, got {samples}")));
            }
            let options = ReliabilityOptions {
                x_tol,
                z: z_convention(*one_sided_z),
            };
            let sweep = wilson_accuracy_sweep(*samples, (*c_source).into(), options)?;
            let render = RenderOptions {
                precision: global.precision.unwrap_or(6),
                percent: false,
            };
            Ok(if *detail {
                sweep.render_detailed(global.format, &render)
            } else {
                sweep.render(global.format, &render)
            })
        }
    }
}

fn table(args: &TableArgs, global: &GlobalOpts) -> Result<String, Failure> {
    let (grid, default_tol) = match args.preset {
        Some(p) => {
            let preset = Preset::from(p);
            (preset.grid(), preset.solver_tolerance())
        }
        None => (custom_grid(args)?, DEFAULT_X_TOL),
    };
    let result = build_table(&grid, global.tolerance.unwrap_or(default_tol));
    Ok(result.render(global.format, &global.render_options()))
}

fn custom_grid(args: &TableArgs) -> Result<GridSpec, Failure> {
    let quantity = match args.quantity.expect("clap requires --preset or --quantity") {
        QuantityArg::Reliability => {
            if args.reliability.is_some() {
                return Err(usage(
                    "--quantity reliability takes --confidence, not --reliability",
                ));
            }
            let confidence = args
                .confidence
                .ok_or_else(|| usage("--quantity reliability requires --confidence"))?;
            Quantity::Reliability { confidence }
        }
        QuantityArg::Confidence => {
            if args.confidence.is_some() {
                return Err(usage(
                    "--quantity confidence takes --reliability, not --confidence",
                ));
            }
            let reliability = args
                .reliability
                .ok_or_else(|| usage("--quantity confidence requires --reliability"))?;
            Quantity::Confidence { reliability }
        }
        QuantityArg::Assurance => {
            if args.confidence.is_some() || args.reliability.is_some() {
                return Err(usage("--quantity assurance takes no fixed probability"));
            }
            Quantity::Assurance
        }
    };
    let samples = args.samples.as_ref().expect("clap requires --samples");
    let failures = args.failures.as_ref().expect("clap requires --failures");
    GridSpec::new(samples.values(), failures.values(), quantity)
        .and_then(|g| g.with_panels(samples.widths()))
        .map_err(|e| usage(e.to_string()))
}
