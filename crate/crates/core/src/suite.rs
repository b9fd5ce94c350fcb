//! Verification suites, their configuration, and the JSON report.

use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bracket::BracketContext;
use crate::dynamics::{conservation_over_time, evolve, flow_canonical_defect, linearize, substitute, Assignment};
use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::models::{
    self, build_1d, build_2d, build_isotonic, build_nn, build_pu_scheme1, build_pu_scheme2,
    verify_canonical, Isotonic, LinearCanonicalMap, ModelInstance, PowerMonomial, PuDiagonalization, PuScheme2,
};
use crate::nambu::{exact_quotient, graded_jacobian, nambu_bracket_of, nambu_defect, DeterminantOrder, NambuSpec, Quotient};
use crate::superpoly::{Grade, SuperPolynomial};
use crate::supercharge::{
    build_supercharges_1d, build_supercharges_1d_unchecked, build_supercharges_2d, check_pattern, map_boson_fermion,
    nilpotency_defects, r_symmetry_check, supercharge_algebra_2d, susy_transform_table, Expect,
};
use crate::symmetry::{closure_check, invariance_defect, match_up_to_scalar, pauli, u11_generators, unn_generators, BlockTag, GeneratorMatrix, PhaseVectors};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Tolerances and model parameters, read from `key = value` lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Algebraic identities.
    pub tol: f64,
    /// Time evolution and span residuals.
    pub dyn_tol: f64,
    pub mu1: f64,
    pub mu2: f64,
    pub rho: f64,
    pub a: f64,
    pub b: f64,
    pub k: f64,
    pub l: f64,
    pub m: f64,
    pub n: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { tol: 1e-12, dyn_tol: 1e-10, mu1: 5.0, mu2: 2.0, rho: 1.0, a: 3.0, b: 0.5, k: 4.0, l: 2.0, m: 1.0, n: 2 }
    }
}

impl Config {
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(k.trim(), v.trim()).map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
        }
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = || value.parse::<f64>().map_err(|_| Error::Config(format!("{key}: '{value}' is not a number")));
        match key {
            "tol" => self.tol = num()?,
            "dyn_tol" => self.dyn_tol = num()?,
            "mu1" => self.mu1 = num()?,
            "mu2" => self.mu2 = num()?,
            "rho" => self.rho = num()?,
            "a" => self.a = num()?,
            "b" => self.b = num()?,
            "k" => self.k = num()?,
            "l" => self.l = num()?,
            "m" => self.m = num()?,
            "n" => self.n = value.parse().map_err(|_| Error::Config(format!("n: '{value}' is not a positive integer")))?,
            _ => return Err(Error::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    pub fn tolerances(&self) -> BTreeMap<String, f64> {
        BTreeMap::from([("algebraic".to_string(), self.tol), ("dynamics".to_string(), self.dyn_tol)])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    OneD,
    TwoD,
    Pu1,
    Pu2,
    Isotonic,
    /// `n` copies; `None` takes `n` from the config.
    Nn(Option<usize>),
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "1d" => ModelKind::OneD,
            "2d" => ModelKind::TwoD,
            "pu1" => ModelKind::Pu1,
            "pu2" => ModelKind::Pu2,
            "isotonic" => ModelKind::Isotonic,
            "nn" => ModelKind::Nn(None),
            _ => match s.strip_prefix("nn").and_then(|n| n.parse().ok()) {
                Some(n) if n > 0 => ModelKind::Nn(Some(n)),
                _ => return Err(Error::Usage(format!("unknown model '{s}' (1d, 2d, pu1, pu2, isotonic, nn, nnN)"))),
            },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Canonical,
    Integrals,
    Supercharges,
    Nambu,
    Dynamics,
    All,
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "canonical" => SuiteKind::Canonical,
            "integrals" => SuiteKind::Integrals,
            "supercharges" => SuiteKind::Supercharges,
            "nambu" => SuiteKind::Nambu,
            "dynamics" => SuiteKind::Dynamics,
            "all" => SuiteKind::All,
            _ => {
                return Err(Error::Usage(format!(
                    "unknown suite '{s}' (canonical, integrals, supercharges, nambu, dynamics, all)"
                )))
            }
        })
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SuiteKind::Canonical => "canonical",
            SuiteKind::Integrals => "integrals",
            SuiteKind::Supercharges => "supercharges",
            SuiteKind::Nambu => "nambu",
            SuiteKind::Dynamics => "dynamics",
            SuiteKind::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// `null` in JSON when the check could not be evaluated.
    pub max_abs_defect: Option<f64>,
    pub details: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub model: String,
    pub suite: String,
    pub checks: Vec<Check>,
    pub tolerances: BTreeMap<String, f64>,
    pub determinant_order: String,
    /// Seconds since the Unix epoch; the only field that varies between runs.
    pub timestamp: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Everything a suite may need besides the model itself.
pub enum Built {
    Plain(ModelInstance),
    Pu1(ModelInstance, PuDiagonalization),
    Pu2(ModelInstance, Box<PuScheme2>),
    Isotonic(ModelInstance, Isotonic),
}

impl Built {
    pub fn model(&self) -> &ModelInstance {
        match self {
            Built::Plain(m) | Built::Pu1(m, _) | Built::Pu2(m, _) | Built::Isotonic(m, _) => m,
        }
    }
}

pub fn build(kind: ModelKind, cfg: &Config) -> Result<Built> {
    Ok(match kind {
        ModelKind::OneD => Built::Plain(build_1d()?),
        ModelKind::TwoD => Built::Plain(build_2d()?),
        ModelKind::Nn(n) => Built::Plain(build_nn(n.unwrap_or(cfg.n))?),
        ModelKind::Pu1 => {
            let (m, d) = build_pu_scheme1(cfg.mu1, cfg.mu2, cfg.rho)?;
            Built::Pu1(m, d)
        }
        ModelKind::Pu2 => {
            let (m, s) = build_pu_scheme2(cfg.a, cfg.b)?;
            Built::Pu2(m, Box::new(s))
        }
        ModelKind::Isotonic => {
            let (m, i) = build_isotonic(cfg.k, cfg.l, cfg.m)?;
            Built::Isotonic(m, i)
        }
    })
}

pub fn build_model(kind: ModelKind, cfg: &Config) -> Result<ModelInstance> {
    Ok(match build(kind, cfg)? {
        Built::Plain(m) | Built::Pu1(m, _) | Built::Pu2(m, _) | Built::Isotonic(m, _) => m,
    })
}

struct Checks {
    list: Vec<Check>,
}

impl Checks {
    fn push(&mut self, name: impl Into<String>, ok: bool, defect: f64, details: impl Into<String>) {
        self.list.push(Check {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            max_abs_defect: Some(defect),
            details: details.into(),
        });
    }

    /// Passes when the defect is below `tol`.
    fn small(&mut self, name: impl Into<String>, tol: f64, f: impl FnOnce() -> Result<(f64, String)>) {
        let name = name.into();
        match f() {
            Ok((d, details)) => self.push(name, d < tol, d, details),
            Err(e) => self.error(name, e),
        }
    }

    /// Passes when the closure says so; the defect is informational.
    fn flag(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, f64, String)>) {
        let name = name.into();
        match f() {
            Ok((ok, d, details)) => self.push(name, ok, d, details),
            Err(e) => self.error(name, e),
        }
    }

    fn error(&mut self, name: impl Into<String>, e: Error) {
        self.list.push(Check { name: name.into(), status: Status::Error, max_abs_defect: None, details: e.to_string() });
    }
}

fn timestamp() -> String {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs().to_string())
        .unwrap_or_default()
}

fn model_label(kind: ModelKind, cfg: &Config) -> String {
    match kind {
        ModelKind::OneD => "1d".into(),
        ModelKind::TwoD => "2d".into(),
        ModelKind::Pu1 => "pu1".into(),
        ModelKind::Pu2 => "pu2".into(),
        ModelKind::Isotonic => "isotonic".into(),
        ModelKind::Nn(n) => format!("nn{}", n.unwrap_or(cfg.n)),
    }
}

/// Run one suite on one model. Only usage problems are returned as errors;
/// a model that cannot be built yields a report with an error entry.
pub fn run_suite(kind: ModelKind, suite: SuiteKind, cfg: &Config) -> Result<Report> {
    if suite == SuiteKind::Nambu && kind != ModelKind::OneD {
        return Err(Error::Usage("the nambu suite is defined for the 1d model only".into()));
    }
    let mut checks = Checks { list: Vec::new() };
    match build(kind, cfg) {
        Err(e) => checks.error("build model", e),
        Ok(built) => {
            let run = |s: SuiteKind, checks: &mut Checks| match s {
                SuiteKind::Canonical => canonical_suite(&built, cfg, checks),
                SuiteKind::Integrals => integrals_suite(&built, cfg, checks),
                SuiteKind::Supercharges => supercharges_suite(&built, cfg, checks),
                SuiteKind::Nambu => nambu_suite(built.model(), cfg, checks),
                SuiteKind::Dynamics => dynamics_suite(&built, cfg, checks),
                SuiteKind::All => unreachable!(),
            };
            if suite == SuiteKind::All {
                for s in [SuiteKind::Canonical, SuiteKind::Integrals, SuiteKind::Supercharges, SuiteKind::Dynamics] {
                    run(s, &mut checks);
                }
                if kind == ModelKind::OneD {
                    run(SuiteKind::Nambu, &mut checks);
                }
            } else {
                run(suite, &mut checks);
            }
        }
    }
    Ok(Report {
        model: model_label(kind, cfg),
        suite: suite.to_string(),
        checks: checks.list,
        tolerances: cfg.tolerances(),
        determinant_order: DeterminantOrder::RowMajor.as_str().into(),
        timestamp: timestamp(),
    })
}

fn diff(a: &SuperPolynomial, b: &SuperPolynomial) -> Result<f64> {
    Ok(a.try_sub(b)?.max_abs())
}

/// Terms built only from odd variables (`fermionic`) or only from even ones.
fn sector(f: &SuperPolynomial, fermionic: bool) -> SuperPolynomial {
    let t = f.table();
    let mut out = SuperPolynomial::zero(t);
    for (m, k) in f.terms() {
        let odd = m.odd_degree(t);
        if (fermionic && odd == m.total_degree()) || (!fermionic && odd == 0) {
            out = &out + &SuperPolynomial::from_term(t, m.clone(), *k);
        }
    }
    out
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.6}{:+.6}i", z.re, z.im)
}

/// `f ~ g` with a nonzero constant; reports the constant.
fn similar(f: &SuperPolynomial, g: &SuperPolynomial, tol: f64) -> (bool, f64, String) {
    match match_up_to_scalar(f, g, tol) {
        Some(k) if k.norm() > tol => (true, (f - &g.scale(k)).max_abs(), format!("constant {}", fmt_c(k))),
        Some(_) => (false, f.max_abs().max(1.0), "vanishes".into()),
        None => (false, f.max_abs().max(1.0), format!("not proportional: {f}")),
    }
}

// ---------------------------------------------------------------- canonical

fn canonical_suite(built: &Built, cfg: &Config, checks: &mut Checks) {
    let model = built.model();
    let ctx = &model.context;
    let tol = cfg.tol;
    checks.small("canonical table (complex basis)", tol, || Ok((ctx.canonical_table_defect(&ctx.variables())?, String::new())));
    if let Some(real) = &model.real {
        let rctx = &real.context;
        checks.small("canonical table (real basis)", tol, || Ok((rctx.canonical_table_defect(&rctx.variables())?, String::new())));
        checks.small("real Hamiltonian maps to complex form", tol, || {
            let mapped = real.to_complex(&real.hamiltonian)?;
            Ok((diff(&mapped, &model.hamiltonian)?, format!("{mapped}")))
        });
    }
    for (name, map) in &model.maps {
        checks.small(format!("canonical map: {name}"), tol, || Ok((verify_canonical(map, tol)?.max_defect, String::new())));
    }
    checks.flag("non-symplectic scaling detected", || {
        let t = ctx.table();
        let (q, p) = ctx.pairs()[0];
        let two = c(2.0, 0.0);
        let bad = LinearCanonicalMap::from_rows(t, t, &[(t.name(q), vec![(t.name(q), two)]), (t.name(p), vec![(t.name(p), two)])])?;
        let rep = verify_canonical(&bad, tol)?;
        Ok((!rep.canonical, rep.max_defect, "scale q, p by 2; expected failure".into()))
    });
    checks.small("Hamiltonian is even", tol, || {
        let ok = model.hamiltonian.parity() == crate::superpoly::Parity::Even;
        Ok((if ok { 0.0 } else { 1.0 }, String::new()))
    });
    checks.small("graded Jacobi identity", tol, || {
        let mut fs: Vec<SuperPolynomial> = if model.name == "1d" {
            SuperPolynomial::monomial_basis(ctx.table(), 2).into_iter().filter(|f| f.max_total_degree() > 0).collect()
        } else {
            ctx.variables()
        };
        if model.name != "1d" {
            fs.extend(model.integrals.iter().chain(&model.supercharges).take(6).map(|(_, f)| f.clone()));
        }
        let mut worst: f64 = 0.0;
        for f in &fs {
            for g in &fs {
                for h in &fs {
                    worst = worst.max(ctx.jacobi_defect(f, g, h)?.max_abs());
                }
            }
        }
        Ok((worst, format!("{} triples", fs.len().pow(3))))
    });
    if model.name == "1d" {
        one_d_equations(model, tol, checks);
    }
    match built {
        Built::Pu1(_, d) => checks.small("potential matrix reconstruction", cfg.dyn_tol, || {
            Ok((d.reconstruction_error, format!("a={}, b={}, angle={}", d.a, d.b, d.angle)))
        }),
        Built::Pu2(_, s) => pu2_checks(s, tol, checks),
        Built::Isotonic(_, iso) => checks.small("central force equals isotonic form", tol, || {
            let samples: Vec<(f64, f64)> =
                (0..20).map(|j| (0.3 + 0.17 * j as f64, -1.5 + 0.23 * j as f64)).collect();
            Ok((iso.max_relative_mismatch(&samples), format!("a={}, b={}", iso.a(), iso.b())))
        }),
        Built::Plain(_) => {}
    }
}

fn one_d_equations(model: &ModelInstance, tol: f64, checks: &mut Checks) {
    let ctx = &model.context;
    let h = &model.hamiltonian;
    for (v, k) in [("X", c(0.0, 1.0)), ("P", c(0.0, -1.0)), ("theta", c(0.0, 1.0)), ("pi", c(0.0, -1.0))] {
        checks.small(format!("Hamilton equation for {v}"), tol, || {
            let x = ctx.var(v)?;
            let dot = ctx.time_derivative(&x, h)?;
            Ok((diff(&dot, &x.scale(k))?, format!("d{v}/dt = {dot}")))
        });
    }
    let Some(real) = &model.real else { return };
    let rctx = &real.context;
    let rh = &real.hamiltonian;
    checks.small("real-basis equations q' = dH/dp, p' = -dH/dq, theta' = dH/dpi", tol, || {
        let d = |n: &str| rctx.time_derivative(&rctx.var(n).unwrap(), rh);
        let dq = diff(&d("q")?, &rh.left_derivative_by("p")?)?;
        let dp = diff(&d("p")?, &rh.left_derivative_by("q")?.scale_real(-1.0))?;
        let dth = diff(&d("theta")?, &rh.left_derivative_by("pi")?)?;
        Ok((dq.max(dp).max(dth), String::new()))
    });
    checks.small("pi' from the bracket", tol, || {
        let dpi = rctx.time_derivative(&rctx.var("pi")?, rh)?;
        let right = rh.right_derivative_by("theta")?;
        let left = rh.left_derivative_by("theta")?;
        let d = diff(&dpi, &right.scale_real(-1.0))?.max(diff(&dpi, &left)?);
        Ok((d, format!("pi' = {dpi}; right dH/dtheta = {right}; left dH/dtheta = {left}")))
    });
}

fn pu2_checks(s: &PuScheme2, tol: f64, checks: &mut Checks) {
    for chk in s.checks() {
        checks.small(format!("tilde variables: {}", chk.name), tol, || Ok((chk.defect, String::new())));
    }
    checks.small("power-monomial bracket agrees with polynomial bracket", tol, || {
        let t = models::table_1d();
        let ctx = BracketContext::new(&t);
        let mut worst: f64 = 0.0;
        for (a, b, cc, d) in (0..50).map(|j: i64| (j % 4, (j / 4) % 3, (j * 7) % 4, (j * 5 + 1) % 3)) {
            let f = PowerMonomial::new(c(1.0, 0.0), 0, a.into(), b.into());
            let g = PowerMonomial::new(c(1.0, 0.0), 0, cc.into(), d.into());
            let poly = ctx.bracket(&f.to_superpoly(&ctx, "X", "P")?, &g.to_superpoly(&ctx, "X", "P")?)?;
            let pb = f.bracket(&g);
            let via = if pb.is_zero() { SuperPolynomial::zero(&t) } else { pb.to_superpoly(&ctx, "X", "P")? };
            worst = worst.max(diff(&poly, &via)?);
        }
        Ok((worst, "50 integer exponent pairs".into()))
    });
}

// ---------------------------------------------------------------- integrals

fn generators_for(model: &ModelInstance) -> Result<Vec<GeneratorMatrix>> {
    let n = model.phase_vectors[0].len() / 2;
    if n == 1 {
        Ok(u11_generators().to_vec())
    } else {
        unn_generators(n)
    }
}

fn integrals_suite(built: &Built, cfg: &Config, checks: &mut Checks) {
    let model = built.model();
    let ctx = &model.context;
    let tol = cfg.tol;
    match model.conservation_defects() {
        Ok(list) => {
            for (name, d) in list {
                checks.push(format!("conserved: {name}"), d < tol, d, "");
            }
        }
        Err(e) => checks.error("conservation", e),
    }
    // generator families, per sector
    for (s, pv) in model.phase_vectors.iter().enumerate() {
        let gens = match generators_for(model) {
            Ok(g) => g,
            Err(e) => return checks.error("generators", e),
        };
        let sector_h = match sector_hamiltonian(model, s) {
            Ok(h) => h,
            Err(e) => return checks.error("sector Hamiltonian", e),
        };
        let label = if model.phase_vectors.len() > 1 { format!(" (sector {})", s + 1) } else { String::new() };
        checks.small(format!("u(n,n) condition on {} generators{label}", gens.len()), tol, || {
            Ok((gens.iter().map(|g| g.unn_defect()).fold(0.0, f64::max), String::new()))
        });
        checks.flag(format!("invariance <=> conservation for {} generators{label}", gens.len()), || {
            let mut worst: f64 = 0.0;
            let mut agree = true;
            for g in &gens {
                let inv = invariance_defect(&g.matrix, pv, &sector_h, tol)?.max_abs();
                let fi = g.first_integral(pv)?;
                let cons = ctx.time_derivative(&fi, &model.hamiltonian)?.max_abs();
                agree &= (inv < tol) == (cons < tol);
                worst = worst.max(inv).max(cons);
            }
            Ok((agree && worst < tol, worst, "max of invariance and conservation defects".into()))
        });
    }
    checks.flag("invariance detects a broken Hamiltonian", || {
        let pv = &model.phase_vectors[0];
        let n = pv.len() / 2;
        let mut w = nalgebra::DMatrix::<Complex64>::identity(2 * n, 2 * n) * c(0.0, 1.0);
        for k in 0..n {
            w[(k, k)] = c(0.0, 2.0);
        }
        let broken = pv.bilinear(&w)?;
        let mut off_min = f64::INFINITY;
        for g in generators_for(model)?.iter().filter(|g| g.tag == BlockTag::OffDiagonal) {
            off_min = off_min.min(invariance_defect(&g.matrix, pv, &broken, tol)?.max_abs());
        }
        Ok((off_min > tol, off_min, "bosonic block doubled; smallest off-diagonal defect, must be nonzero".into()))
    });
    if model.name == "1d" {
        one_d_integrals(model, tol, checks);
    }
    if model.integral("C1").is_ok() {
        planar_integrals(model, cfg, checks);
    }
    if model.name.starts_with("nn") {
        checks.flag("integral count 4n^2 and span", || {
            let n = model.phase_vectors[0].len() / 2;
            let fs: Vec<SuperPolynomial> = model.integrals.iter().map(|(_, f)| f.clone()).collect();
            let rank = crate::linalg::polynomial_rank(&fs);
            Ok((fs.len() == 4 * n * n && rank == 4 * n * n, 0.0, format!("{} integrals, rank {rank}", fs.len())))
        });
    }
}

/// The bilinear Hamiltonian of one `U(1,1)` sector (or the whole model).
fn sector_hamiltonian(model: &ModelInstance, s: usize) -> Result<SuperPolynomial> {
    if model.phase_vectors.len() == 1 {
        return Ok(model.hamiltonian.clone());
    }
    let w = model.params.get(if s == 0 { "a" } else { "b" }).copied().unwrap_or(1.0);
    Ok(model.phase_vectors[s].hamiltonian()?.scale_real(w))
}

fn one_d_integrals(model: &ModelInstance, tol: f64, checks: &mut Checks) {
    let ctx = &model.context;
    let t = ctx.table();
    let z: Vec<SuperPolynomial> = (0..4).map(|m| model.integral(&format!("Z{m}")).unwrap().clone()).collect();
    let q = model.integral("Q").unwrap();
    let qbar = model.integral("Qbar").unwrap();
    let pv = &model.phase_vectors[0];
    for (mu, g) in u11_generators().iter().enumerate() {
        checks.flag(format!("first integral of T{mu} ~ Z{mu}"), || Ok(similar(&g.first_integral(pv)?, &z[mu], tol)));
    }
    let hb = SuperPolynomial::product_of(t, c(0.0, 1.0), &["P", "X"]).unwrap();
    let hf = SuperPolynomial::product_of(t, c(0.0, 1.0), &["pi", "theta"]).unwrap();
    checks.flag("bosonic H ~ (Z0 + Z3)/2", || Ok(similar(&hb, &(&z[0] + &z[3]).scale_real(0.5), tol)));
    checks.flag("fermionic H ~ (Z0 - Z3)/2", || Ok(similar(&hf, &(&z[0] - &z[3]).scale_real(0.5), tol)));
    checks.flag("Z1 ~ Q + Qbar", || Ok(similar(&z[1], &(q + qbar), tol)));
    checks.flag("Z2 ~ i(Qbar - Q)", || Ok(similar(&z[2], &(qbar - q).scale(c(0.0, 1.0)), tol)));
    checks.small("{Z1, Z2} = 0", tol, || Ok((ctx.bracket(&z[1], &z[2])?.max_abs(), String::new())));
    checks.flag("{Z1, Z1} ~ Z0", || Ok(similar(&ctx.bracket(&z[1], &z[1])?, &z[0], tol)));
    checks.flag("{Z2, Z2} ~ Z0", || Ok(similar(&ctx.bracket(&z[2], &z[2])?, &z[0], tol)));
    checks.small("Z brackets close on the Z span", tol, || {
        let rep = closure_check(&z, ctx)?;
        Ok((rep.max_residual, format!("{} brackets", rep.entries.len())))
    });
}

fn planar_integrals(model: &ModelInstance, cfg: &Config, checks: &mut Checks) {
    let ctx = &model.context;
    let tol = cfg.tol;
    let Some(real) = &model.real else { return };
    let unit = models::complexification(
        real.context.table(),
        ctx.table(),
        &[("q1", "p1", "X1", "P1"), ("q2", "p2", "X2", "P2")],
    );
    let bpv = PhaseVectors::from_names(ctx, &["P1", "P2"], &["X1", "X2"]);
    for a in 1..4 {
        checks.flag(format!("bosonic T{a} integral ~ B{a}"), || {
            let ta = pauli(a).map(|z| z * 0.5);
            let fi = crate::symmetry::first_integral(&ta, bpv.as_ref().map_err(Clone::clone)?)?;
            let unit = unit.as_ref().map_err(Clone::clone)?;
            let real_fi = unit.pull_back(&fi)?;
            let b = unit.pull_back(model.integral(&format!("B{a}"))?)?;
            let (ok, d, details) = similar(&real_fi, &b, tol);
            Ok((ok, d, format!("{details}; B{a} = {b}")))
        });
    }
    checks.flag("E ~ bosonic Hamiltonian", || {
        let hb = &SuperPolynomial::product_of(ctx.table(), c(0.0, 1.0), &["P1", "X1"])?
            + &SuperPolynomial::product_of(ctx.table(), c(0.0, 1.0), &["P2", "X2"])?;
        Ok(similar(model.integral("E")?, &hb, tol))
    });
    checks.small("odd-odd brackets lie in the even span", cfg.dyn_tol, || {
        let gens = unn_generators(2)?;
        let pv = &model.phase_vectors[0];
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for g in &gens {
            let f = g.first_integral(pv)?;
            if g.tag == BlockTag::Diagonal {
                even.push(f)
            } else {
                odd.push(f)
            }
        }
        let mut worst: f64 = 0.0;
        for f in &odd {
            for g in &odd {
                worst = worst.max(solve_in_span(&ctx.bracket(f, g)?, &even).residual);
            }
        }
        Ok((worst, format!("{} odd, {} even", odd.len(), even.len())))
    });
    checks.small("C1, C2, C13, C14 lie in the generator span", cfg.dyn_tol, || {
        let gs: Vec<SuperPolynomial> =
            model.integrals.iter().filter(|(n, _)| n.starts_with('G')).map(|(_, f)| f.clone()).collect();
        let mut worst: f64 = 0.0;
        for n in ["C1", "C2", "C13", "C14"] {
            worst = worst.max(solve_in_span(model.integral(n)?, &gs).residual);
        }
        Ok((worst, String::new()))
    });
}

// ------------------------------------------------------------- supercharges

fn supercharges_suite(built: &Built, cfg: &Config, checks: &mut Checks) {
    let model = built.model();
    if model.name == "1d" {
        one_d_supercharges(model, cfg.tol, checks);
    } else if model.integral("Q1").is_ok() {
        planar_supercharges(model, cfg.tol, checks);
    } else if model.name == "pu1" {
        for s in 1..=2 {
            sector_supercharges(model, s, cfg.tol, checks);
        }
    } else {
        sector_supercharges(model, 0, cfg.tol, checks);
    }
}

/// Nilpotency and `(i/2){Q, Qbar} ~ H` for a named pair; `s = 0` takes `Q`, `Qbar`.
fn sector_supercharges(model: &ModelInstance, s: usize, tol: f64, checks: &mut Checks) {
    let ctx = &model.context;
    let (qn, qbn) = if s == 0 { ("Q".to_string(), "Qbar".to_string()) } else { (format!("Q_{s}"), format!("Qbar_{s}")) };
    let max_deg = if ctx.table().len() > 8 { 2 } else { 3 };
    checks.small(format!("nilpotency of {qn}, {qbn}"), tol, || {
        let r = nilpotency_defects(model.integral(&qn)?, model.integral(&qbn)?, ctx, max_deg)?;
        Ok((r.max_defect(), format!("operator test up to degree {max_deg}")))
    });
    checks.flag(format!("(i/2){{{qn}, {qbn}}} ~ H"), || {
        let qq = ctx.bracket(model.integral(&qn)?, model.integral(&qbn)?)?.scale(c(0.0, 0.5));
        let h = if s == 0 { model.hamiltonian.clone() } else { sector_hamiltonian(model, s - 1)? };
        Ok(similar(&h, &qq, tol))
    });
}

fn one_d_supercharges(model: &ModelInstance, tol: f64, checks: &mut Checks) {
    let ctx = &model.context;
    let h = &model.hamiltonian;
    let r2 = c(SQRT_2, 0.0);
    let zero = c(0.0, 0.0);
    for (label, a, b) in [("alpha=sqrt2, beta=0", r2, zero), ("alpha=0, beta=sqrt2", zero, r2)] {
        checks.small(format!("nilpotency ({label})"), tol, || {
            let p = build_supercharges_1d(ctx, a, b)?;
            let r = nilpotency_defects(&p.q, &p.qbar, ctx, 3)?;
            Ok((r.max_defect(), "{Q,Q}, {Qbar,Qbar}, and squared operators on degree <= 3".into()))
        });
        checks.small(format!("(i/2){{Q, Qbar}} = H ({label})"), tol, || {
            let p = build_supercharges_1d(ctx, a, b)?;
            Ok((diff(&ctx.bracket(&p.q, &p.qbar)?.scale(c(0.0, 0.5)), h)?, String::new()))
        });
    }
    checks.small("{Q, Qbar} = (|alpha|^2 + |beta|^2)(PX + pi theta) for 10 pairs", tol, || {
        let base = h.scale(c(0.0, -1.0));
        let mut worst: f64 = 0.0;
        for k in 0..10 {
            let kf = k as f64;
            let a = Complex64::from_polar(1.0 + 0.3 * kf, 0.7 * kf);
            let b = Complex64::from_polar(0.1 + 0.05 * kf, -1.3 * kf);
            let p = build_supercharges_1d(ctx, a, b)?;
            let want = base.scale_real(a.norm_sqr() + b.norm_sqr());
            worst = worst.max(diff(&ctx.bracket(&p.q, &p.qbar)?, &want)?);
        }
        Ok((worst, String::new()))
    });
    checks.flag("degenerate pair rejected", || {
        let r = build_supercharges_1d(ctx, c(1.0, 0.0), c(1.0, 0.0));
        Ok((matches!(r, Err(Error::DegenerateSupercharges)), 0.0, String::new()))
    });
    checks.flag("degenerate pair is not nilpotent", || {
        let p = build_supercharges_1d_unchecked(ctx, c(1.0, 0.0), c(1.0, 0.0))?;
        let d = ctx.bracket(&p.q, &p.q)?.max_abs();
        Ok((d > tol, d, "{Q,Q} for alpha = beta = 1; must be nonzero".into()))
    });
    use Expect::{Multiple as M, Zero as Z};
    let eq17: [(&str, Expect, Expect); 4] =
        [("X", M("theta"), Z), ("P", Z, M("pi")), ("theta", Z, M("X")), ("pi", M("P"), Z)];
    let eq18: [(&str, Expect, Expect); 4] =
        [("X", Z, M("theta")), ("P", M("pi"), Z), ("theta", M("X"), Z), ("pi", Z, M("P"))];
    for (label, pattern, alpha_side) in [("alpha only", eq17, true), ("beta only", eq18, false)] {
        checks.flag(format!("transformation table ({label})"), || {
            let mk = |s: f64| {
                let (a, b) = if alpha_side { (c(s, 0.0), zero) } else { (zero, c(s, 0.0)) };
                let p = build_supercharges_1d(ctx, a, b)?;
                check_pattern(&susy_transform_table(&p.q, &p.qbar, ctx)?, &pattern, ctx, tol)
            };
            let r1 = mk(SQRT_2)?;
            let r2 = mk(2.0 * SQRT_2)?;
            // constants must double with the parameter
            let mut ratio_ok = true;
            let mut consts = Vec::new();
            for e in &r1.entries {
                if let (Some(k1), Some(k2)) = (r1.constant(&e.variable, e.column), r2.constant(&e.variable, e.column)) {
                    ratio_ok &= (k2 - k1 * 2.0).norm() < tol;
                    consts.push(format!("{{{},{}}}={}", e.variable, e.column, fmt_c(k1)));
                }
            }
            let d = r1.max_defect().max(r2.max_defect());
            Ok((r1.all_ok() && r2.all_ok() && ratio_ok, d, consts.join(", ")))
        });
    }
    checks.flag("{{PX, Q}, Qbar} ~ pi theta", || {
        let t = ctx.table();
        let px = SuperPolynomial::product_of(t, c(1.0, 0.0), &["P", "X"])?;
        let pith = SuperPolynomial::product_of(t, c(1.0, 0.0), &["pi", "theta"])?;
        Ok(similar(&map_boson_fermion(&px, model.integral("Q")?, model.integral("Qbar")?, ctx)?, &pith, tol))
    });
    checks.flag("fermionic part of {{PX, Q}, Qbar} ~ pi theta", || {
        let t = ctx.table();
        let px = SuperPolynomial::product_of(t, c(1.0, 0.0), &["P", "X"])?;
        let pith = SuperPolynomial::product_of(t, c(1.0, 0.0), &["pi", "theta"])?;
        let image = map_boson_fermion(&px, model.integral("Q")?, model.integral("Qbar")?, ctx)?;
        Ok(similar(&sector(&image, true), &pith, tol))
    });
}

fn planar_supercharges(model: &ModelInstance, tol: f64, checks: &mut Checks) {
    let ctx = &model.context;
    let charges = match build_supercharges_2d(ctx) {
        Ok(c) => c,
        Err(e) => return checks.error("planar supercharges", e),
    };
    match supercharge_algebra_2d(&charges, ctx, tol) {
        Err(e) => checks.error("supercharge algebra", e),
        Ok(alg) => {
            checks.push("{Q_i, Q_j} = 0 = {Qbar_i, Qbar_j}", alg.nilpotency_defect < tol, alg.nilpotency_defect, "");
            checks.push(
                "{Q_i, Qbar_j} in the sigma0, sigma3 span",
                alg.decomposition_residual < tol,
                alg.decomposition_residual,
                "",
            );
            checks.flag("H_0 ~ H", || Ok(similar(&model.hamiltonian, &alg.h0, tol)));
            for (name, f) in [("H_0", &alg.h0), ("H_1", &alg.h1)] {
                checks.small(format!("{name} conserved"), tol, || {
                    Ok((ctx.time_derivative(f, &model.hamiltonian)?.max_abs(), format!("{f}")))
                });
            }
        }
    }
    checks.small("R-symmetry over 10 phase pairs", tol, || {
        let mut phases = vec![(0.0, 0.0), (PI / 3.0, -PI / 7.0), (PI / 2.0, PI / 2.0)];
        phases.extend((0..7).map(|k| (0.9 * k as f64 + 0.1, -1.7 * k as f64 + 0.4)));
        let mut worst: f64 = 0.0;
        for (phi, psi) in phases {
            worst = worst.max(r_symmetry_check(&charges, phi, psi, ctx, tol)?.max_defect());
        }
        Ok((worst, String::new()))
    });
    use Expect::{Multiple as M, Zero as Z};
    let diag: Vec<(&str, Expect, Expect)> = vec![
        ("X1", M("theta1"), Z),
        ("X2", M("theta2"), Z),
        ("P1", Z, M("pi1")),
        ("P2", Z, M("pi2")),
        ("theta1", Z, M("X1")),
        ("theta2", Z, M("X2")),
        ("pi1", M("P1"), Z),
        ("pi2", M("P2"), Z),
    ];
    let cross: Vec<(&str, Expect, Expect)> = vec![
        ("X1", M("theta2"), Z),
        ("X2", M("theta1"), Z),
        ("P1", Z, M("pi2")),
        ("P2", Z, M("pi1")),
        ("theta1", Z, M("X2")),
        ("theta2", Z, M("X1")),
        ("pi1", M("P2"), Z),
        ("pi2", M("P1"), Z),
    ];
    let (qs, qsb) = charges.symmetric();
    let (qa, qab) = charges.antisymmetric();
    for (label, q, qb, pattern) in [("Q = (Q1+Q2)/2", &qs, &qsb, &diag), ("Q' = (Q1-Q2)/2", &qa, &qab, &cross)] {
        checks.flag(format!("transformation table ({label})"), || {
            let r = check_pattern(&susy_transform_table(q, qb, ctx)?, pattern, ctx, tol)?;
            Ok((r.all_ok(), r.max_defect(), String::new()))
        });
    }
    for (from, to) in [("C1", "C13"), ("C2", "C14")] {
        checks.flag(format!("{{{{{from}, Q}}, Qbar}} ~ {to}"), || {
            Ok(similar(&map_boson_fermion(model.integral(from)?, &qs, &qsb, ctx)?, model.integral(to)?, tol))
        });
        checks.flag(format!("fermionic part of {{{{{from}, Q}}, Qbar}} ~ {to}"), || {
            let image = map_boson_fermion(model.integral(from)?, &qs, &qsb, ctx)?;
            Ok(similar(&sector(&image, true), model.integral(to)?, tol))
        });
    }
}

// -------------------------------------------------------------------- nambu

/// Default Nambu data of the one-dimensional model.
pub fn default_nambu_spec(model: &ModelInstance) -> Result<NambuSpec> {
    let z = |m: usize| model.integral(&format!("Z{m}")).cloned();
    NambuSpec::new(&model.context, [z(0)?, z(3)?, z(1)?], z(2)?, c(-0.5, 0.0))
}

fn nambu_suite(model: &ModelInstance, cfg: &Config, checks: &mut Checks) {
    let ctx = &model.context;
    let tol = cfg.tol;
    let h = &model.hamiltonian;
    let spec = match default_nambu_spec(model) {
        Ok(s) => s,
        Err(e) => return checks.error("nambu spec", e),
    };
    for v in ["P", "X", "theta", "pi"] {
        checks.small(format!("Nambu bracket reproduces {v}'"), tol, || {
            let d = nambu_defect(&ctx.var(v)?, h, &spec, ctx)?;
            Ok((d.max_abs(), format!("defect {d}")))
        });
    }
    checks.small("Nambu bracket on the degree <= 2 basis", tol, || {
        let mut worst: f64 = 0.0;
        let basis = SuperPolynomial::monomial_basis(ctx.table(), 2);
        for f in &basis {
            worst = worst.max(nambu_defect(f, h, &spec, ctx)?.max_abs());
        }
        Ok((worst, format!("{} monomials", basis.len())))
    });
    checks.small("quotient J(P) / (-2 Z2) = -iP", tol, || {
        let p = ctx.var("P")?;
        let j = graded_jacobian(&p, &spec, ctx)?;
        match exact_quotient(&j, &spec.divisor.scale_real(-2.0), tol)? {
            Quotient::Exact(r) => Ok((diff(&r, &p.scale(c(0.0, -1.0)))?, format!("R = {r}"))),
            other => Ok((f64::INFINITY, format!("{other:?}"))),
        }
    });
    checks.small("jacobian of Z0 vanishes", tol, || {
        Ok((graded_jacobian(model.integral("Z0")?, &spec, ctx)?.max_abs(), String::new()))
    });
    for order in [[0, 3, 1, 2], [0, 0, 1, 2], [1, 0, 3, 2]] {
        let label = order.map(|m| format!("Z{m}")).join(", ");
        checks.small(format!("4-bracket {{{label}}} = 0"), tol, || {
            let rows: Vec<&SuperPolynomial> =
                order.iter().map(|m| model.integral(&format!("Z{m}"))).collect::<Result<_>>()?;
            let j = nambu_bracket_of([rows[0], rows[1], rows[2], rows[3]], &spec, ctx)?;
            Ok((j.max_abs(), format!("jacobian {j}")))
        });
    }
    for mu in 0..4 {
        checks.small(format!("{{Z{mu}, Z0, Z3, Z1}} = 0"), tol, || {
            let d = nambu_defect(model.integral(&format!("Z{mu}"))?, h, &spec, ctx)?;
            Ok((d.max_abs(), "defect form; Z is conserved".into()))
        });
    }
    checks.flag("alternative Hamiltonian triple", || {
        let z: Vec<SuperPolynomial> = (0..4).map(|m| model.integral(&format!("Z{m}")).cloned()).collect::<Result<_>>()?;
        let basis = SuperPolynomial::monomial_basis(ctx.table(), 2);
        let mut passing = Vec::new();
        let mut best = f64::INFINITY;
        for d in 0..4 {
            for a in 0..4 {
                for b in 0..4 {
                    for e in 0..4 {
                        let mut set = [a, b, e, d];
                        set.sort_unstable();
                        // distinct entries; divisor Z2 is the default structure
                        if set != [0, 1, 2, 3] || d == 2 {
                            continue;
                        }
                        let Ok(alt) = NambuSpec::calibrated(
                            ctx,
                            [z[a].clone(), z[b].clone(), z[e].clone()],
                            z[d].clone(),
                            h,
                            DeterminantOrder::RowMajor,
                            tol,
                        ) else {
                            continue;
                        };
                        let mut worst: f64 = 0.0;
                        for f in &basis {
                            worst = worst.max(nambu_defect(f, h, &alt, ctx)?.max_abs());
                        }
                        best = best.min(worst);
                        if worst < tol {
                            passing.push(format!("(Z{a}, Z{b}, Z{e}) / Z{d} norm {}", fmt_c(alt.normalization)));
                        }
                    }
                }
            }
        }
        Ok((!passing.is_empty(), best, if passing.is_empty() { "none".into() } else { passing.join("; ") }))
    });
}

// ----------------------------------------------------------------- dynamics

/// `0, 0.1, ..., 6.2` and `2 pi`.
pub fn time_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (0..63).map(|k| 0.1 * k as f64).collect();
    grid.push(2.0 * PI);
    grid
}

fn dynamics_suite(built: &Built, cfg: &Config, checks: &mut Checks) {
    let model = built.model();
    let ctx = &model.context;
    let l = match linearize(&model.hamiltonian, ctx) {
        Ok(l) => l,
        Err(e) => return checks.error("linearize", e),
    };
    let grid = time_grid();
    checks.small("evolution matrix is diagonal", cfg.tol, || {
        let n = l.matrix.nrows();
        let off = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| i != j).map(|(i, j)| l.matrix[(i, j)].norm()).fold(0.0, f64::max);
        let diag: Vec<String> = (0..n).map(|i| format!("{}:{}", ctx.table().name(i), fmt_c(l.matrix[(i, i)]))).collect();
        Ok((off, diag.join(" ")))
    });
    if model.name == "1d" {
        checks.small("L = diag(i, -i, i, -i) on (X, P, theta, pi)", cfg.tol, || {
            let t = ctx.table();
            let want = [("X", 1.0), ("P", -1.0), ("theta", 1.0), ("pi", -1.0)];
            let mut worst: f64 = 0.0;
            for (n, s) in want {
                let i = t.index_of(n)?;
                worst = worst.max((l.matrix[(i, i)] - c(0.0, s)).norm());
            }
            Ok((worst, String::new()))
        });
    }
    checks.small("flow is canonical on the time grid", cfg.tol, || Ok((flow_canonical_defect(ctx, &l, &grid)?, String::new())));
    checks.small("propagator group law", cfg.tol, || {
        let mut worst: f64 = 0.0;
        for (t1, t2) in [(0.3, 1.1), (2.0, -0.7), (1.234, 4.321), (-3.0, 3.0), (0.01, 6.0)] {
            let lhs = l.propagator(t1) * l.propagator(t2);
            let rhs = l.propagator(t1 + t2);
            worst = worst.max((lhs - rhs).iter().map(|z| z.norm()).fold(0.0, f64::max));
        }
        Ok((worst, String::new()))
    });
    for (name, f) in model.integrals.iter().chain(&model.supercharges) {
        checks.small(format!("conserved along the flow: {name}"), cfg.dyn_tol, || {
            Ok((conservation_over_time(f, &l, &grid)?, String::new()))
        });
    }
    let period = match built {
        Built::Pu1(..) => None,
        _ => Some(2.0 * PI / model.params.get("omega").copied().unwrap_or(1.0)),
    };
    if let Some(period) = period {
        checks.small("recurrence after one period", cfg.dyn_tol, || {
            let t = ctx.table();
            let n_even = (0..t.len()).filter(|&i| t.grade(i) == Grade::Even).count();
            let vals: Vec<Complex64> = (0..n_even).map(|k| c(0.3 + 0.2 * k as f64, -0.1 * k as f64)).collect();
            let v0 = Assignment::with_generators(t, &vals)?;
            let v1 = evolve(&v0, &l, period)?;
            Ok((v1.max_abs_diff(&v0), format!("t = {period}")))
        });
    }
    if model.name == "1d" {
        one_d_dynamics(model, &l, cfg, checks);
    }
}

fn one_d_dynamics(model: &ModelInstance, l: &crate::dynamics::EvolutionMatrix, cfg: &Config, checks: &mut Checks) {
    let ctx = &model.context;
    checks.small("X(pi) = -X(0)", cfg.dyn_tol, || {
        let t = ctx.table();
        let v0 = Assignment::with_generators(t, &[c(0.7, 0.2), c(-0.4, 1.0)])?;
        let v1 = evolve(&v0, l, PI)?;
        let i = t.index_of("X")?;
        Ok(((v1.components[(i, 0)] + v0.components[(i, 0)]).norm(), String::new()))
    });
    checks.small("sector function PX conserved along the flow", cfg.dyn_tol, || {
        let px = SuperPolynomial::product_of(ctx.table(), c(1.0, 0.0), &["P", "X"])?;
        Ok((conservation_over_time(&px, l, &time_grid())?, "conserved, though only the sum with pi theta is H".into()))
    });
    let Some(real) = &model.real else { return };
    checks.small("q(t) = q cos t + p sin t", cfg.dyn_tol, || {
        let rt = real.context.table();
        let q = SuperPolynomial::var(rt, "q")?;
        let p = SuperPolynomial::var(rt, "p")?;
        let mut worst: f64 = 0.0;
        for t in [0.5, 1.0, 2.5, 4.0] {
            let moved = substitute(&real.to_complex(&q)?, &l.flow_map(t)?)?;
            let back = real.to_real(&moved)?;
            let want = &q.scale_real(t.cos()) + &p.scale_real(t.sin());
            worst = worst.max(diff(&back, &want)?);
        }
        Ok((worst, String::new()))
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_parsing() {
        let cfg = Config::parse("# comment\nmu1 = 4\n\nrho=0 # trailing\nn = 3\n").unwrap();
        assert_eq!((cfg.mu1, cfg.rho, cfg.n), (4.0, 0.0, 3));
        assert!(matches!(Config::parse("bogus = 1"), Err(Error::Config(_))));
        assert!(matches!(Config::parse("mu1 4"), Err(Error::Config(_))));
        assert!(matches!(Config::parse("mu1 = x"), Err(Error::Config(_))));
    }

    #[test]
    fn names() {
        assert_eq!("nn3".parse::<ModelKind>().unwrap(), ModelKind::Nn(Some(3)));
        assert!(matches!("nn0".parse::<ModelKind>(), Err(Error::Usage(_))));
        assert!(matches!("3d".parse::<ModelKind>(), Err(Error::Usage(_))));
        assert!(matches!("fast".parse::<SuiteKind>(), Err(Error::Usage(_))));
    }

    // The two literal claims that do not hold are pinned here; everything
    // else in the 1d battery passes.
    #[test]
    fn one_d_all_known_failures() {
        let r = run_suite(ModelKind::OneD, SuiteKind::All, &Config::default()).unwrap();
        let failed: Vec<&str> = r.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["{{PX, Q}, Qbar} ~ pi theta", "4-bracket {Z0, Z3, Z1, Z2} = 0"]);
        assert!(r.checks.len() >= 20);
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn single_suites_pass_on_1d() {
        for s in [SuiteKind::Canonical, SuiteKind::Integrals, SuiteKind::Dynamics] {
            let r = run_suite(ModelKind::OneD, s, &Config::default()).unwrap();
            assert!(r.passed(), "{s}");
        }
    }

    #[test]
    fn nn_and_pu1_pass() {
        for m in [ModelKind::Nn(Some(1)), ModelKind::Pu1] {
            let r = run_suite(m, SuiteKind::All, &Config::default()).unwrap();
            assert!(r.passed(), "{m:?}: {:?}", r.checks.iter().find(|c| c.status != Status::Pass));
        }
    }

    #[test]
    fn indefinite_pu_reports_error() {
        let cfg = Config { mu1: 1.0, mu2: 1.0, rho: 2.0, ..Config::default() };
        let r = run_suite(ModelKind::Pu1, SuiteKind::Integrals, &cfg).unwrap();
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.checks[0].status, Status::Error);
    }

    #[test]
    fn nambu_only_for_1d() {
        assert!(matches!(run_suite(ModelKind::TwoD, SuiteKind::Nambu, &Config::default()), Err(Error::Usage(_))));
    }
}
