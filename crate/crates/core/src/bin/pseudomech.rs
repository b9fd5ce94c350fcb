use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pseudomech::bracket::BracketContext;
use pseudomech::dynamics::{linearize, substitute};
use pseudomech::expr::parse_poly;
use pseudomech::models::ModelInstance;
use pseudomech::nambu::{exact_quotient, graded_jacobian, nambu_defect, Quotient};
use pseudomech::suite::{build_model, default_nambu_spec, run_suite, Config, ModelKind, Status, SuiteKind};
use pseudomech::{Error, Result};

const CHOP: f64 = 1e-13;

#[derive(Parser)]
#[command(name = "pseudomech", version, about = "Graded Poisson brackets for supersymmetric oscillators")]
struct Cli {
    /// File of `key = value` lines (tolerances, model parameters).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Real variables q, p, theta, pi.
    Qp,
    /// Complex variables X, P, theta, pi.
    #[value(name = "XP", alias = "xp")]
    Xp,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generalized Poisson bracket of two expressions.
    Bracket {
        f: String,
        g: String,
        #[arg(long)]
        model: String,
        #[arg(long, value_enum, default_value = "XP")]
        basis: Basis,
    },
    /// List the model's first integrals and their conservation defects.
    Integrals {
        #[arg(long)]
        model: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        model: String,
        #[arg(long)]
        suite: String,
        /// Write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Push an observable along the exact flow for time t.
    Evolve {
        #[arg(long)]
        model: String,
        #[arg(long = "t", allow_hyphen_values = true)]
        t: f64,
        #[arg(long)]
        observable: String,
        #[arg(long, value_enum, default_value = "XP")]
        basis: Basis,
    },
    /// Nambu 4-bracket {F, Z0, Z3, Z1} against the Poisson time derivative.
    Nambu {
        #[arg(long)]
        model: String,
        #[arg(long)]
        f: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Usage(_) | Error::Parse { .. } | Error::Config(_) | Error::UnknownVariable(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn load_config(path: Option<&PathBuf>) -> Result<Config> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Config(format!("{}: {e}", p.display())))?;
            Config::parse(&text)
        }
    }
}

fn context(model: &ModelInstance, basis: Basis) -> Result<&BracketContext> {
    match basis {
        Basis::Xp => Ok(&model.context),
        Basis::Qp => model
            .real
            .as_ref()
            .map(|r| &r.context)
            .ok_or_else(|| Error::Usage(format!("model {} has no real basis", model.name))),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let mut cfg = load_config(cli.config.as_ref())?;
    match cli.cmd {
        Cmd::Bracket { f, g, model, basis } => {
            let m = build_model(model.parse()?, &cfg)?;
            let ctx = context(&m, basis)?;
            let (f, g) = (parse_poly(&f, ctx.table())?, parse_poly(&g, ctx.table())?);
            println!("{}", ctx.bracket(&f, &g)?.chop(CHOP));
            Ok(0)
        }
        Cmd::Integrals { model } => {
            let m = build_model(model.parse()?, &cfg)?;
            let mut ok = true;
            println!("H = {}", m.hamiltonian);
            for ((name, f), (_, d)) in m.integrals.iter().chain(&m.supercharges).zip(m.conservation_defects()?) {
                ok &= d < cfg.tol;
                println!("{name} = {f}    |{{{name}, H}}| = {d:.1e}");
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Verify { model, suite, json, tol } => {
            if let Some(t) = tol {
                cfg.tol = t;
            }
            let kind: ModelKind = model.parse()?;
            let suite: SuiteKind = suite.parse()?;
            let report = run_suite(kind, suite, &cfg)?;
            for c in &report.checks {
                let tag = match c.status {
                    Status::Pass => "PASS ",
                    Status::Fail => "FAIL ",
                    Status::Error => "ERROR",
                };
                let d = c.max_abs_defect.map_or("n/a".to_string(), |d| format!("{d:.1e}"));
                println!("{tag} {}  [{d}]", c.name);
                if c.status != Status::Pass && !c.details.is_empty() {
                    println!("      {}", c.details);
                }
            }
            let count = |s| report.checks.iter().filter(|c| c.status == s).count();
            println!(
                "{} {}: {} passed, {} failed, {} errors",
                report.model,
                report.suite,
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Error)
            );
            if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(report.exit_code() as u8)
        }
        Cmd::Evolve { model, t, observable, basis } => {
            let m = build_model(model.parse()?, &cfg)?;
            let ctx = context(&m, basis)?;
            let f = parse_poly(&observable, ctx.table())?;
            let flow = linearize(&m.hamiltonian, &m.context)?.flow_map(t)?;
            let moved = match (basis, &m.real) {
                (Basis::Qp, Some(real)) => real.to_real(&substitute(&real.to_complex(&f)?, &flow)?)?,
                _ => substitute(&f, &flow)?,
            };
            println!("{}", moved.chop(CHOP));
            Ok(0)
        }
        Cmd::Nambu { model, f } => {
            if model.parse::<ModelKind>()? != ModelKind::OneD {
                return Err(Error::Usage("the Nambu bracket is defined for --model 1d".into()));
            }
            let m = build_model(ModelKind::OneD, &cfg)?;
            let ctx = &m.context;
            let spec = default_nambu_spec(&m)?;
            let f = parse_poly(&f, ctx.table())?;
            let j = graded_jacobian(&f, &spec, ctx)?;
            let dot = ctx.time_derivative(&f, &m.hamiltonian)?;
            let defect = nambu_defect(&f, &m.hamiltonian, &spec, ctx)?;
            println!("jacobian      {}", j.chop(CHOP));
            println!("Poisson dF/dt {}", dot.chop(CHOP));
            match exact_quotient(&j.scale(spec.normalization), &spec.divisor, cfg.tol)? {
                Quotient::Exact(r) => println!("quotient      {}", r.chop(CHOP)),
                Quotient::Ambiguous { particular, kernel_dim } => {
                    println!("quotient      {} (ambiguous, kernel dimension {kernel_dim})", particular.chop(CHOP))
                }
                Quotient::NoSolution { residual } => println!("quotient      none (residual {residual:.1e})"),
            }
            println!("defect        {:.1e}", defect.max_abs());
            Ok(if defect.max_abs() < cfg.tol { 0 } else { 1 })
        }
    }
}
