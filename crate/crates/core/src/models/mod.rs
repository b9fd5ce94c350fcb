//! The oscillator families as ready-to-check model instances.
//!
//! Every model lives on a complex table (`X, P, theta, pi` style) where the
//! Hamiltonian is `i P^T Q` up to frequencies. Models that start from real
//! variables also carry the real table and the linear map between the two.

mod canonical;
mod power;

use std::collections::BTreeMap;
use std::f64::consts::SQRT_2;
use std::sync::Arc;

use num_complex::Complex64;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::superpoly::{Grade, SuperPolynomial, VarTable};
use crate::symmetry::{u11_generators, unn_generators, PhaseVectors};

pub use canonical::{complexification, rescaling, rotation, verify_canonical, CanonicalReport, LinearCanonicalMap};
pub use power::{isotropizing_pair, PowerCheck, PowerMonomial, PuScheme2};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Real starting variables and the map to the complex ones.
#[derive(Debug, Clone)]
pub struct RealBasis {
    pub context: BracketContext,
    pub hamiltonian: SuperPolynomial,
    /// Complex variables as linear combinations of the real ones.
    pub map: LinearCanonicalMap,
}

impl RealBasis {
    pub fn to_complex(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.map.transform(f)
    }

    pub fn to_real(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        self.map.pull_back(f)
    }
}

#[derive(Debug, Clone)]
pub struct ModelInstance {
    pub name: String,
    pub context: BracketContext,
    pub hamiltonian: SuperPolynomial,
    pub phase_vectors: Vec<PhaseVectors>,
    /// Named first integrals in a fixed order.
    pub integrals: Vec<(String, SuperPolynomial)>,
    /// Named odd conserved charges.
    pub supercharges: Vec<(String, SuperPolynomial)>,
    pub params: BTreeMap<String, f64>,
    pub real: Option<RealBasis>,
    /// Intermediate changes of variables, in the order they are applied.
    pub maps: Vec<(String, LinearCanonicalMap)>,
}

impl ModelInstance {
    pub fn table(&self) -> &Arc<VarTable> {
        self.context.table()
    }

    pub fn integral(&self, name: &str) -> Result<&SuperPolynomial> {
        self.integrals
            .iter()
            .chain(&self.supercharges)
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
            .ok_or_else(|| Error::InvalidArgument(format!("model {} has no integral named {name}", self.name)))
    }

    /// `max |{I, H}|` for every integral and supercharge.
    pub fn conservation_defects(&self) -> Result<Vec<(String, f64)>> {
        self.integrals
            .iter()
            .chain(&self.supercharges)
            .map(|(n, f)| Ok((n.clone(), self.context.time_derivative(f, &self.hamiltonian)?.max_abs())))
            .collect()
    }
}

fn table(pairs: &[(&str, &str, Grade)]) -> Arc<VarTable> {
    VarTable::from_pairs(pairs).expect("static variable table")
}

fn product(t: &Arc<VarTable>, k: Complex64, names: &[&str]) -> SuperPolynomial {
    SuperPolynomial::product_of(t, k, names).expect("static variable names")
}

fn var(t: &Arc<VarTable>, name: &str) -> SuperPolynomial {
    SuperPolynomial::var(t, name).expect("static variable name")
}

/// `(p^2 + q^2)/2` scaled by `w`, written as `w/2 (p^2 + q^2)`.
fn oscillator(t: &Arc<VarTable>, q: &str, p: &str, w: f64) -> SuperPolynomial {
    &product(t, c(w / 2.0, 0.0), &[q, q]) + &product(t, c(w / 2.0, 0.0), &[p, p])
}

/// The complex `(X, P, theta, pi)` table of the one-dimensional model.
pub fn table_1d() -> Arc<VarTable> {
    table(&[("X", "P", Grade::Even), ("theta", "pi", Grade::Odd)])
}

/// The real `(q, p, theta, pi)` table of the one-dimensional model.
pub fn table_1d_real() -> Arc<VarTable> {
    table(&[("q", "p", Grade::Even), ("theta", "pi", Grade::Odd)])
}

/// `Z^0 = PX + pi theta`, `Z^3 = PX - pi theta`, `Z^1 = P theta + pi X`,
/// `Z^2 = i(P theta - pi X)`.
pub fn z_integrals(t: &Arc<VarTable>) -> [SuperPolynomial; 4] {
    let one = c(1.0, 0.0);
    let px = product(t, one, &["P", "X"]);
    let pith = product(t, one, &["pi", "theta"]);
    let pth = product(t, one, &["P", "theta"]);
    let pix = product(t, one, &["pi", "X"]);
    [&px + &pith, &pth + &pix, (&pth - &pix).scale(c(0.0, 1.0)), &px - &pith]
}

/// Supersymmetric oscillator in one dimension, `H = i(PX + pi theta)`.
pub fn build_1d() -> Result<ModelInstance> {
    let t = table_1d();
    let real_t = table_1d_real();
    let ctx = BracketContext::new(&t);
    let pv = PhaseVectors::from_names(&ctx, &["P", "pi"], &["X", "theta"])?;
    let h = pv.hamiltonian()?;
    let real_h = &oscillator(&real_t, "q", "p", 1.0) + &product(&real_t, c(0.0, 1.0), &["pi", "theta"]);
    let map = complexification(&real_t, &t, &[("q", "p", "X", "P")])?;
    let z = z_integrals(&t);
    let integrals = ["Z0", "Z1", "Z2", "Z3"].iter().zip(z).map(|(n, f)| (n.to_string(), f)).collect();
    let r2 = c(SQRT_2, 0.0);
    let supercharges = vec![
        ("Q".to_string(), product(&t, r2, &["P", "theta"])),
        ("Qbar".to_string(), product(&t, r2, &["X", "pi"])),
    ];
    Ok(ModelInstance {
        name: "1d".into(),
        context: ctx,
        hamiltonian: h,
        phase_vectors: vec![pv],
        integrals,
        supercharges,
        params: BTreeMap::new(),
        real: Some(RealBasis { context: BracketContext::new(&real_t), hamiltonian: real_h, map: map.clone() }),
        maps: vec![("complexify".into(), map)],
    })
}

/// `X1, P1, X2, P2, theta1, pi1, theta2, pi2`.
pub fn table_2d() -> Arc<VarTable> {
    table(&[
        ("X1", "P1", Grade::Even),
        ("X2", "P2", Grade::Even),
        ("theta1", "pi1", Grade::Odd),
        ("theta2", "pi2", Grade::Odd),
    ])
}

fn table_2d_real(x: [&str; 2], p: [&str; 2]) -> Arc<VarTable> {
    table(&[
        (x[0], p[0], Grade::Even),
        (x[1], p[1], Grade::Even),
        ("theta1", "pi1", Grade::Odd),
        ("theta2", "pi2", Grade::Odd),
    ])
}

/// The explicit planar integrals quoted alongside the U(2,2) family.
fn planar_named_integrals(t: &Arc<VarTable>, real: &RealBasis) -> Result<Vec<(String, SuperPolynomial)>> {
    let one = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let rt = real.context.table();
    let mut out = vec![
        ("C1".to_string(), &product(t, i, &["P1", "X2"]) + &product(t, i, &["P2", "X1"])),
        ("C2".to_string(), &product(t, one, &["P1", "X2"]) - &product(t, one, &["P2", "X1"])),
        ("C13".to_string(), &product(t, i, &["pi1", "theta2"]) + &product(t, i, &["pi2", "theta1"])),
        ("C14".to_string(), &product(t, one, &["pi1", "theta2"]) - &product(t, one, &["pi2", "theta1"])),
    ];
    let b = [
        &product(rt, one, &["p1", "p2"]) + &product(rt, one, &["q1", "q2"]),
        &product(rt, one, &["q2", "p1"]) - &product(rt, one, &["q1", "p2"]),
        &oscillator(rt, "q1", "p1", 2.0) - &oscillator(rt, "q2", "p2", 2.0),
        &oscillator(rt, "q1", "p1", 1.0) + &oscillator(rt, "q2", "p2", 1.0),
    ];
    for (name, f) in ["B1", "B2", "B3", "E"].iter().zip(&b) {
        out.push((name.to_string(), real.to_complex(f)?));
    }
    let pv = PhaseVectors::from_names(&BracketContext::new(t), &["pi1", "pi2"], &["theta1", "theta2"])?;
    for a in 1..4 {
        let ta = crate::symmetry::pauli(a).map(|z| z * 0.5);
        out.push((format!("F{a}"), crate::symmetry::first_integral(&ta, &pv)?));
    }
    Ok(out)
}

/// Planar isotropic supersymmetric oscillator at unit frequency.
pub fn build_2d() -> Result<ModelInstance> {
    build_2d_with_frequency(1.0)
}

/// `H = i w P^T Q` on the planar table. The real form
/// `(p^2 + w^2 q^2)/2 + i w (pi1 theta1 + pi2 theta2)` is reached by the
/// rescaling `q -> sqrt(w) q`, `p -> p/sqrt(w)` followed by complexification.
pub fn build_2d_with_frequency(w: f64) -> Result<ModelInstance> {
    if w.is_nan() || w <= 0.0 {
        return Err(Error::InvalidArgument(format!("frequency must be positive, got {w}")));
    }
    let t = table_2d();
    let ctx = BracketContext::new(&t);
    let pv = PhaseVectors::from_names(&ctx, &["P1", "P2", "pi1", "pi2"], &["X1", "X2", "theta1", "theta2"])?;
    let h = pv.hamiltonian()?.scale_real(w);
    let rt = table_2d_real(["q1", "q2"], ["p1", "p2"]);
    let rescale = rescaling(&rt, &[("q1", "p1", w), ("q2", "p2", w)])?;
    let complexify = complexification(&rt, &t, &[("q1", "p1", "X1", "P1"), ("q2", "p2", "X2", "P2")])?;
    let map = rescale.then(&complexify)?;
    let mut real_h = SuperPolynomial::zero(&rt);
    for (q, p, th, pi) in [("q1", "p1", "theta1", "pi1"), ("q2", "p2", "theta2", "pi2")] {
        real_h = &real_h + &product(&rt, c(0.5, 0.0), &[p, p]);
        real_h = &real_h + &product(&rt, c(w * w / 2.0, 0.0), &[q, q]);
        real_h = &real_h + &product(&rt, c(0.0, w), &[pi, th]);
    }
    // integrals are stated for the unit-frequency real form
    let unit_real = RealBasis { context: BracketContext::new(&rt), hamiltonian: real_h.clone(), map: complexify.clone() };
    let mut integrals: Vec<(String, SuperPolynomial)> = unn_generators(2)?
        .iter()
        .enumerate()
        .map(|(k, g)| Ok((format!("G{k}"), g.first_integral(&pv)?)))
        .collect::<Result<_>>()?;
    integrals.extend(planar_named_integrals(&t, &unit_real)?);
    let v = |n: &str| var(&t, n);
    let supercharges = vec![
        ("Q1".to_string(), &(&v("P1") + &v("P2")) * &(&v("theta1") + &v("theta2"))),
        ("Qbar1".to_string(), &(&v("pi1") + &v("pi2")) * &(&v("X1") + &v("X2"))),
        ("Q2".to_string(), &(&v("P1") - &v("P2")) * &(&v("theta1") - &v("theta2"))),
        ("Qbar2".to_string(), &(&v("pi1") - &v("pi2")) * &(&v("X1") - &v("X2"))),
    ];
    let mut params = BTreeMap::new();
    params.insert("omega".to_string(), w);
    Ok(ModelInstance {
        name: "2d".into(),
        context: ctx,
        hamiltonian: h,
        phase_vectors: vec![pv],
        integrals,
        supercharges,
        params,
        real: Some(RealBasis { context: BracketContext::new(&rt), hamiltonian: real_h, map: map.clone() }),
        maps: vec![("rescale".into(), rescale), ("complexify".into(), complexify), ("composed".into(), map)],
    })
}

/// `n` copies of the one-dimensional model with the full U(n,n) family of integrals.
pub fn build_nn(n: usize) -> Result<ModelInstance> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let names: Vec<[String; 4]> =
        (1..=n).map(|j| [format!("X{j}"), format!("P{j}"), format!("theta{j}"), format!("pi{j}")]).collect();
    let mut pairs: Vec<(&str, &str, Grade)> = names.iter().map(|v| (v[0].as_str(), v[1].as_str(), Grade::Even)).collect();
    pairs.extend(names.iter().map(|v| (v[2].as_str(), v[3].as_str(), Grade::Odd)));
    let t = table(&pairs);
    let ctx = BracketContext::new(&t);
    let moms: Vec<&str> = names.iter().map(|v| v[1].as_str()).chain(names.iter().map(|v| v[3].as_str())).collect();
    let coords: Vec<&str> = names.iter().map(|v| v[0].as_str()).chain(names.iter().map(|v| v[2].as_str())).collect();
    let pv = PhaseVectors::from_names(&ctx, &moms, &coords)?;
    let h = pv.hamiltonian()?;
    let integrals = unn_generators(n)?
        .iter()
        .enumerate()
        .map(|(k, g)| Ok((format!("G{k}"), g.first_integral(&pv)?)))
        .collect::<Result<_>>()?;
    // sqrt2 sum P_j theta_j and sqrt2 sum X_j pi_j
    let mut q = SuperPolynomial::zero(&t);
    let mut qbar = SuperPolynomial::zero(&t);
    for v in &names {
        q = &q + &product(&t, c(SQRT_2, 0.0), &[&v[1], &v[2]]);
        qbar = &qbar + &product(&t, c(SQRT_2, 0.0), &[&v[0], &v[3]]);
    }
    let mut params = BTreeMap::new();
    params.insert("n".to_string(), n as f64);
    Ok(ModelInstance {
        name: format!("nn{n}"),
        context: ctx,
        hamiltonian: h,
        phase_vectors: vec![pv],
        integrals,
        supercharges: vec![("Q".into(), q), ("Qbar".into(), qbar)],
        params,
        real: None,
        maps: vec![],
    })
}

/// Eigen-data of the potential matrix `[[mu1, -rho], [-rho, mu2]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PuDiagonalization {
    /// Larger frequency.
    pub a: f64,
    pub b: f64,
    /// Rotation angle; `(cos, sin)` is the eigenvector of `a^2`.
    pub angle: f64,
    /// Largest entry of `R^T diag(a^2, b^2) R - V`.
    pub reconstruction_error: f64,
}

pub fn diagonalize_pu(mu1: f64, mu2: f64, rho: f64) -> Result<PuDiagonalization> {
    let mean = (mu1 + mu2) / 2.0;
    let r = (((mu1 - mu2) / 2.0).powi(2) + rho * rho).sqrt();
    let (a2, b2) = (mean + r, mean - r);
    if !(mu1 > 0.0 && mu2 > 0.0 && mu1 * mu2 > rho * rho) {
        return Err(Error::NotPositiveDefinite([a2, b2]));
    }
    // (V - a^2) v = 0 from either row; take the better conditioned one
    let v1 = (rho, mu1 - a2);
    let v2 = (mu2 - a2, rho);
    let (cx, sx) = if v1.0.hypot(v1.1) >= v2.0.hypot(v2.1) { v1 } else { v2 };
    let angle = if cx.hypot(sx) == 0.0 { 0.0 } else { sx.atan2(cx) };
    let angle = if angle.abs() > std::f64::consts::FRAC_PI_2 + 1e-15 { angle - std::f64::consts::PI.copysign(angle) } else { angle };
    let (s, cth) = angle.sin_cos();
    let rot = [[cth, s], [-s, cth]];
    let d = [a2, b2];
    let v = [[mu1, -rho], [-rho, mu2]];
    let mut err: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let rec: f64 = (0..2).map(|k| rot[k][i] * d[k] * rot[k][j]).sum();
            err = err.max((rec - v[i][j]).abs());
        }
    }
    Ok(PuDiagonalization { a: a2.sqrt(), b: b2.sqrt(), angle, reconstruction_error: err })
}

/// First supersymmetrization scheme for the two-oscillator form
/// `(px^2 + py^2)/2 + (mu1 x^2 + mu2 y^2 - 2 rho x y)/2`: rotate, rescale,
/// complexify, and add one fermionic pair per normal mode, giving
/// `H = i a P1^T Q1 + i b P2^T Q2`.
pub fn build_pu_scheme1(mu1: f64, mu2: f64, rho: f64) -> Result<(ModelInstance, PuDiagonalization)> {
    let diag = diagonalize_pu(mu1, mu2, rho)?;
    let (a, b) = (diag.a, diag.b);
    let t0 = table_2d_real(["x", "y"], ["px", "py"]);
    let t1 = table_2d_real(["q1", "q2"], ["p1", "p2"]);
    let t = table_2d();
    let rot = rotation(&t0, &t1, diag.angle, ["x", "px", "y", "py"], ["q1", "p1", "q2", "p2"])?;
    let rescale = rescaling(&t1, &[("q1", "p1", a), ("q2", "p2", b)])?;
    let complexify = complexification(&t1, &t, &[("q1", "p1", "X1", "P1"), ("q2", "p2", "X2", "P2")])?;
    let map = rot.then(&rescale)?.then(&complexify)?;
    let k = |v: f64| c(v, 0.0);
    let mut real_h = &product(&t0, k(0.5), &["px", "px"]) + &product(&t0, k(0.5), &["py", "py"]);
    real_h = &real_h + &product(&t0, k(mu1 / 2.0), &["x", "x"]);
    real_h = &real_h + &product(&t0, k(mu2 / 2.0), &["y", "y"]);
    real_h = &real_h + &product(&t0, k(-rho), &["x", "y"]);
    real_h = &real_h + &product(&t0, c(0.0, a), &["pi1", "theta1"]);
    real_h = &real_h + &product(&t0, c(0.0, b), &["pi2", "theta2"]);

    let ctx = BracketContext::new(&t);
    let pv1 = PhaseVectors::from_names(&ctx, &["P1", "pi1"], &["X1", "theta1"])?;
    let pv2 = PhaseVectors::from_names(&ctx, &["P2", "pi2"], &["X2", "theta2"])?;
    let h = &pv1.hamiltonian()?.scale_real(a) + &pv2.hamiltonian()?.scale_real(b);
    let mut integrals = Vec::new();
    for (s, pv) in [(1, &pv1), (2, &pv2)] {
        for (mu, g) in u11_generators().iter().enumerate() {
            integrals.push((format!("Z{mu}_{s}"), g.first_integral(pv)?));
        }
    }
    let r2 = c(SQRT_2, 0.0);
    let supercharges = vec![
        ("Q_1".to_string(), product(&t, r2, &["P1", "theta1"])),
        ("Qbar_1".to_string(), product(&t, r2, &["X1", "pi1"])),
        ("Q_2".to_string(), product(&t, r2, &["P2", "theta2"])),
        ("Qbar_2".to_string(), product(&t, r2, &["X2", "pi2"])),
    ];
    let params = BTreeMap::from([
        ("mu1".to_string(), mu1),
        ("mu2".to_string(), mu2),
        ("rho".to_string(), rho),
        ("a".to_string(), a),
        ("b".to_string(), b),
        ("angle".to_string(), diag.angle),
    ]);
    let model = ModelInstance {
        name: "pu1".into(),
        context: ctx,
        hamiltonian: h,
        phase_vectors: vec![pv1, pv2],
        integrals,
        supercharges,
        params,
        real: Some(RealBasis { context: BracketContext::new(&t0), hamiltonian: real_h, map: map.clone() }),
        maps: vec![
            ("rotate".into(), rot),
            ("rescale".into(), rescale),
            ("complexify".into(), complexify),
            ("composed".into(), map),
        ],
    };
    Ok((model, diag))
}

/// Second scheme: the tilde variables make the bosonic part isotropic, after
/// which the planar construction applies unchanged.
pub fn build_pu_scheme2(a: f64, b: f64) -> Result<(ModelInstance, PuScheme2)> {
    let scheme = PuScheme2::new(a, b)?;
    let mut model = build_2d()?;
    model.name = "pu2".into();
    model.params.insert("a".into(), a);
    model.params.insert("b".into(), b);
    Ok((model, scheme))
}

/// Radial reduction of the planar central-force problem `V(r) = k r^2`.
#[derive(Debug, Clone, PartialEq)]
pub struct Isotonic {
    pub k: f64,
    pub l: f64,
    pub m: f64,
}

impl Isotonic {
    pub fn new(k: f64, l: f64, m: f64) -> Result<Self> {
        if k.is_nan() || m.is_nan() || k <= 0.0 || m <= 0.0 {
            return Err(Error::InvalidArgument(format!("isotonic oscillator needs k > 0 and m > 0, got k={k}, m={m}")));
        }
        Ok(Isotonic { k, l, m })
    }

    /// Coefficient of `z^2` in the isotonic potential.
    pub fn a(&self) -> f64 {
        self.k
    }

    /// Coefficient of `1/z^2` in the isotonic potential.
    pub fn b(&self) -> f64 {
        self.l * self.l / (2.0 * self.m)
    }

    pub fn omega(&self) -> f64 {
        self.k.sqrt()
    }

    /// `p^2/2m + l^2/(2 m r^2) + k r^2`.
    pub fn central_force_energy(&self, r: f64, p: f64) -> f64 {
        p * p / (2.0 * self.m) + self.l * self.l / (2.0 * self.m * r * r) + self.k * r * r
    }

    /// `p^2/2m + a z^2 + b/z^2`.
    pub fn isotonic_energy(&self, z: f64, p: f64) -> f64 {
        p * p / (2.0 * self.m) + self.a() * z * z + self.b() / (z * z)
    }

    /// Largest relative difference between the two energies at the sample points.
    pub fn max_relative_mismatch(&self, samples: &[(f64, f64)]) -> f64 {
        samples
            .iter()
            .map(|&(r, p)| {
                let e1 = self.central_force_energy(r, p);
                let e2 = self.isotonic_energy(r, p);
                (e1 - e2).abs() / e1.abs().max(f64::MIN_POSITIVE)
            })
            .fold(0.0, f64::max)
    }

    /// The planar supersymmetric lift at `omega = sqrt(k)`.
    pub fn susy_lift(&self) -> Result<ModelInstance> {
        let mut model = build_2d_with_frequency(self.omega())?;
        model.name = "isotonic".into();
        model.params.insert("k".into(), self.k);
        model.params.insert("l".into(), self.l);
        model.params.insert("m".into(), self.m);
        Ok(model)
    }
}

pub fn build_isotonic(k: f64, l: f64, m: f64) -> Result<(ModelInstance, Isotonic)> {
    let iso = Isotonic::new(k, l, m)?;
    Ok((iso.susy_lift()?, iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symmetry::match_up_to_scalar;

    fn all_conserved(m: &ModelInstance) {
        for (n, d) in m.conservation_defects().unwrap() {
            assert!(d < 1e-12, "{} {n}: {d}", m.name);
        }
    }

    #[test]
    fn one_dimensional_real_form_maps_to_complex_form() {
        let m = build_1d().unwrap();
        let real = m.real.as_ref().unwrap();
        let mapped = real.to_complex(&real.hamiltonian).unwrap();
        assert!((&mapped - &m.hamiltonian).max_abs() < 1e-12, "{mapped}");
        assert!(verify_canonical(&real.map, 1e-12).unwrap().canonical);
        all_conserved(&m);
    }

    #[test]
    fn z_integrals_match_generator_integrals() {
        let m = build_1d().unwrap();
        for (mu, g) in u11_generators().iter().enumerate() {
            let fi = g.first_integral(&m.phase_vectors[0]).unwrap();
            let z = m.integral(&format!("Z{mu}")).unwrap();
            assert!(match_up_to_scalar(&fi, z, 1e-12).is_some(), "Z{mu}");
        }
    }

    #[test]
    fn planar_model() {
        let m = build_2d().unwrap();
        assert_eq!(m.integrals.iter().filter(|(n, _)| n.starts_with('G')).count(), 16);
        all_conserved(&m);
        let real = m.real.as_ref().unwrap();
        let mapped = real.to_complex(&real.hamiltonian).unwrap();
        assert!((&mapped - &m.hamiltonian).max_abs() < 1e-12);
    }

    #[test]
    fn planar_model_at_frequency_two() {
        let m = build_2d_with_frequency(2.0).unwrap();
        all_conserved(&m);
        let real = m.real.as_ref().unwrap();
        let mapped = real.to_complex(&real.hamiltonian).unwrap();
        assert!((&mapped - &m.hamiltonian).max_abs() < 1e-12);
        for (_, map) in &m.maps {
            assert!(verify_canonical(map, 1e-12).unwrap().canonical);
        }
    }

    #[test]
    fn pu_diagonal_case() {
        let d = diagonalize_pu(4.0, 1.0, 0.0).unwrap();
        assert!((d.a - 2.0).abs() < 1e-12 && (d.b - 1.0).abs() < 1e-12);
        let d = diagonalize_pu(1.0, 4.0, 0.0).unwrap();
        assert!((d.a - 2.0).abs() < 1e-12 && (d.b - 1.0).abs() < 1e-12);
        assert!(d.reconstruction_error < 1e-12);
        let d = diagonalize_pu(3.0, 3.0, 0.0).unwrap();
        assert_eq!(d.angle, 0.0);
    }

    #[test]
    fn pu_scheme_one_generic_point() {
        let (m, d) = build_pu_scheme1(5.0, 2.0, 1.0).unwrap();
        assert!(d.reconstruction_error < 1e-10);
        let real = m.real.as_ref().unwrap();
        let mapped = real.to_complex(&real.hamiltonian).unwrap();
        assert!((&mapped - &m.hamiltonian).max_abs() < 1e-12, "{mapped}");
        for (n, map) in &m.maps {
            assert!(verify_canonical(map, 1e-12).unwrap().canonical, "{n}");
        }
        assert_eq!(m.integrals.len(), 8);
        all_conserved(&m);
    }

    #[test]
    fn pu_rejects_indefinite() {
        match build_pu_scheme1(1.0, 1.0, 2.0) {
            Err(Error::NotPositiveDefinite([a2, b2])) => {
                assert!((a2 - 3.0).abs() < 1e-12 && (b2 + 1.0).abs() < 1e-12)
            }
            other => panic!("{:?}", other.map(|(_, d)| d)),
        }
    }

    #[test]
    fn isotonic_reduction() {
        let iso = Isotonic::new(1.0, 2.0, 1.0).unwrap();
        assert_eq!(iso.b(), 2.0);
        assert!(iso.max_relative_mismatch(&[(1.5, 0.7)]) < 1e-12);
        assert!(Isotonic::new(0.0, 1.0, 1.0).is_err());
        let (m, _) = build_isotonic(4.0, 1.0, 1.0).unwrap();
        all_conserved(&m);
    }

    #[test]
    fn nn_counts() {
        for n in 1..=3 {
            let m = build_nn(n).unwrap();
            assert_eq!(m.integrals.len(), 4 * n * n);
            all_conserved(&m);
        }
    }
}
