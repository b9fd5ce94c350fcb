//! Classical supercharges and the supersymmetry transformations they generate.
//!
//! The one-dimensional pair is `Q = a P theta + b X pi`,
//! `Qbar = conj(b) P theta + conj(a) X pi`. The operators `{., Q}` and
//! `{., Qbar}` act on phase-space functions as supersymmetry transformations.

use num_complex::Complex64;
use serde::Serialize;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::superpoly::{Parity, SuperPolynomial};
use crate::symmetry::match_up_to_scalar;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuperchargePair {
    pub q: SuperPolynomial,
    pub qbar: SuperPolynomial,
    pub alpha: Complex64,
    pub beta: Complex64,
}

/// Supercharge pair on a table containing `X, P, theta, pi`.
pub fn build_supercharges_1d(ctx: &BracketContext, alpha: Complex64, beta: Complex64) -> Result<SuperchargePair> {
    if (alpha.norm_sqr() - beta.norm_sqr()).abs() < 1e-15 {
        return Err(Error::DegenerateSupercharges);
    }
    build_supercharges_1d_unchecked(ctx, alpha, beta)
}

/// Same as [`build_supercharges_1d`] without the linear-independence guard.
pub fn build_supercharges_1d_unchecked(
    ctx: &BracketContext,
    alpha: Complex64,
    beta: Complex64,
) -> Result<SuperchargePair> {
    let t = ctx.table();
    let p_theta = SuperPolynomial::product_of(t, c(1.0, 0.0), &["P", "theta"])?;
    let x_pi = SuperPolynomial::product_of(t, c(1.0, 0.0), &["X", "pi"])?;
    let q = &p_theta.scale(alpha) + &x_pi.scale(beta);
    let qbar = &p_theta.scale(beta.conj()) + &x_pi.scale(alpha.conj());
    Ok(SuperchargePair { q, qbar, alpha, beta })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NilpotencyReport {
    /// `{Q, Q}`
    pub qq: SuperPolynomial,
    /// `{Qbar, Qbar}`
    pub qbar_qbar: SuperPolynomial,
    /// Largest coefficient of `{{f, Q}, Q}` or `{{f, Qbar}, Qbar}` over the test basis.
    pub operator_defect: f64,
}

impl NilpotencyReport {
    pub fn max_defect(&self) -> f64 {
        self.qq.max_abs().max(self.qbar_qbar.max_abs()).max(self.operator_defect)
    }
}

/// `{Q,Q}`, `{Qbar,Qbar}` and the squares of the supercharge operators on all
/// monomials up to `max_deg`.
pub fn nilpotency_defects(q: &SuperPolynomial, qbar: &SuperPolynomial, ctx: &BracketContext, max_deg: u32) -> Result<NilpotencyReport> {
    let qq = ctx.bracket(q, q)?;
    let qbar_qbar = ctx.bracket(qbar, qbar)?;
    let mut operator_defect: f64 = 0.0;
    for f in SuperPolynomial::monomial_basis(ctx.table(), max_deg) {
        for charge in [q, qbar] {
            let twice = ctx.bracket(&ctx.bracket(&f, charge)?, charge)?;
            operator_defect = operator_defect.max(twice.max_abs());
        }
    }
    Ok(NilpotencyReport { qq, qbar_qbar, operator_defect })
}

/// `{v, Q}` and `{v, Qbar}` for one phase-space variable.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformRow {
    pub variable: String,
    pub with_q: SuperPolynomial,
    pub with_qbar: SuperPolynomial,
}

/// Action of both supercharge operators on every variable of the table.
pub fn susy_transform_table(q: &SuperPolynomial, qbar: &SuperPolynomial, ctx: &BracketContext) -> Result<Vec<TransformRow>> {
    let t = ctx.table();
    (0..t.len())
        .map(|i| {
            let v = ctx.var_at(i);
            Ok(TransformRow {
                variable: t.name(i).to_string(),
                with_q: ctx.bracket(&v, q)?,
                with_qbar: ctx.bracket(&v, qbar)?,
            })
        })
        .collect()
}

/// Expected shape of one table entry: zero, or a nonzero multiple of a
/// named variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect<'a> {
    Zero,
    Multiple(&'a str),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternEntry {
    pub variable: String,
    pub column: &'static str,
    pub expected: String,
    /// Recovered proportionality constant `(re, im)` for `~` entries.
    pub constant: Option<(f64, f64)>,
    pub defect: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PatternReport {
    pub entries: Vec<PatternEntry>,
}

impl PatternReport {
    pub fn all_ok(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
    }

    pub fn max_defect(&self) -> f64 {
        self.entries.iter().map(|e| e.defect).fold(0.0, f64::max)
    }

    pub fn constant(&self, variable: &str, column: &str) -> Option<Complex64> {
        self.entries
            .iter()
            .find(|e| e.variable == variable && e.column == column)
            .and_then(|e| e.constant)
            .map(|(re, im)| c(re, im))
    }
}

/// Compare a transformation table against `(variable, Q column, Qbar column)`
/// expectations. Zeros must vanish to `tol`; `Multiple` entries must match
/// the named variable up to a nonzero scalar.
pub fn check_pattern(
    rows: &[TransformRow],
    expected: &[(&str, Expect<'_>, Expect<'_>)],
    ctx: &BracketContext,
    tol: f64,
) -> Result<PatternReport> {
    let mut entries = Vec::new();
    for (var, eq, eqb) in expected {
        let row = rows
            .iter()
            .find(|r| r.variable == *var)
            .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
        for (column, got, want) in [("Q", &row.with_q, eq), ("Qbar", &row.with_qbar, eqb)] {
            let entry = match want {
                Expect::Zero => PatternEntry {
                    variable: var.to_string(),
                    column,
                    expected: "0".into(),
                    constant: None,
                    defect: got.max_abs(),
                    ok: got.is_zero_within(tol),
                },
                Expect::Multiple(target) => {
                    let target_poly = ctx.var(target)?;
                    let k = match_up_to_scalar(got, &target_poly, tol);
                    let defect = match k {
                        Some(k) => (got - &target_poly.scale(k)).max_abs(),
                        None => got.max_abs().max(1.0),
                    };
                    PatternEntry {
                        variable: var.to_string(),
                        column,
                        expected: format!("~{target}"),
                        constant: k.map(|k| (k.re, k.im)),
                        defect,
                        ok: k.is_some_and(|k| k.norm() > tol),
                    }
                }
            };
            entries.push(entry);
        }
    }
    Ok(PatternReport { entries })
}

/// `{{E, Q}, Qbar}`: the image of an even function under both supersymmetry operators.
pub fn map_boson_fermion(
    e: &SuperPolynomial,
    q: &SuperPolynomial,
    qbar: &SuperPolynomial,
    ctx: &BracketContext,
) -> Result<SuperPolynomial> {
    if e.parity() != Parity::Even {
        return Err(Error::MixedParity("boson-fermion map expects an even function".into()));
    }
    ctx.bracket(&ctx.bracket(e, q)?, qbar)
}

/// The four odd charges of the planar model.
#[derive(Debug, Clone, PartialEq)]
pub struct Supercharges2d {
    pub q: [SuperPolynomial; 2],
    pub qbar: [SuperPolynomial; 2],
}

/// `Q_1 = (P1+P2)(theta1+theta2)`, `Qbar_1 = (pi1+pi2)(X1+X2)`,
/// `Q_2 = (P1-P2)(theta1-theta2)`, `Qbar_2 = (pi1-pi2)(X1-X2)`.
pub fn build_supercharges_2d(ctx: &BracketContext) -> Result<Supercharges2d> {
    let v = |n: &str| ctx.var(n);
    let (p1, p2, x1, x2) = (v("P1")?, v("P2")?, v("X1")?, v("X2")?);
    let (th1, th2, pi1, pi2) = (v("theta1")?, v("theta2")?, v("pi1")?, v("pi2")?);
    Ok(Supercharges2d {
        q: [&(&p1 + &p2) * &(&th1 + &th2), &(&p1 - &p2) * &(&th1 - &th2)],
        qbar: [&(&pi1 + &pi2) * &(&x1 + &x2), &(&pi1 - &pi2) * &(&x1 - &x2)],
    })
}

impl Supercharges2d {
    /// `Q_1 -> e^{i phi} Q_1`, `Q_2 -> e^{i psi} Q_2`, conjugate phases on the bars.
    pub fn rotated(&self, phi: f64, psi: f64) -> Self {
        let u1 = Complex64::from_polar(1.0, phi);
        let u2 = Complex64::from_polar(1.0, psi);
        Supercharges2d {
            q: [self.q[0].scale(u1), self.q[1].scale(u2)],
            qbar: [self.qbar[0].scale(u1.conj()), self.qbar[1].scale(u2.conj())],
        }
    }

    /// `(Q_1 + Q_2)/2` and its bar.
    pub fn symmetric(&self) -> (SuperPolynomial, SuperPolynomial) {
        ((&self.q[0] + &self.q[1]).scale_real(0.5), (&self.qbar[0] + &self.qbar[1]).scale_real(0.5))
    }

    /// `(Q_1 - Q_2)/2` and its bar.
    pub fn antisymmetric(&self) -> (SuperPolynomial, SuperPolynomial) {
        ((&self.q[0] - &self.q[1]).scale_real(0.5), (&self.qbar[0] - &self.qbar[1]).scale_real(0.5))
    }
}

/// `{Q_i, Qbar_j} = 2 (sigma^0 H_0 + sigma^3 H_1)_ij` together with the
/// vanishing brackets among the `Q`s and among the `Qbar`s.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra2d {
    /// `M_ij = {Q_i, Qbar_j}`
    pub anticommutators: [[SuperPolynomial; 2]; 2],
    pub h0: SuperPolynomial,
    pub h1: SuperPolynomial,
    /// Largest coefficient among `{Q_i,Q_j}` and `{Qbar_i,Qbar_j}`.
    pub nilpotency_defect: f64,
    /// Largest coefficient of `M` outside the `sigma^0, sigma^3` span.
    pub decomposition_residual: f64,
}

pub fn supercharge_algebra_2d(charges: &Supercharges2d, ctx: &BracketContext, tol: f64) -> Result<Algebra2d> {
    let mut nil: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            nil = nil.max(ctx.bracket(&charges.q[i], &charges.q[j])?.max_abs());
            nil = nil.max(ctx.bracket(&charges.qbar[i], &charges.qbar[j])?.max_abs());
        }
    }
    let m = |i: usize, j: usize| ctx.bracket(&charges.q[i], &charges.qbar[j]);
    let anticommutators = [[m(0, 0)?, m(0, 1)?], [m(1, 0)?, m(1, 1)?]];
    // M_11 = 2(H0 + H1), M_22 = 2(H0 - H1), off-diagonal zero
    let h0 = (&anticommutators[0][0] + &anticommutators[1][1]).scale_real(0.25);
    let h1 = (&anticommutators[0][0] - &anticommutators[1][1]).scale_real(0.25);
    let residual = anticommutators[0][1].max_abs().max(anticommutators[1][0].max_abs());
    if residual >= tol {
        return Err(Error::DecompositionResidual(residual));
    }
    Ok(Algebra2d { anticommutators, h0, h1, nilpotency_defect: nil, decomposition_residual: residual })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RSymmetryReport {
    pub phi: f64,
    pub psi: f64,
    pub nilpotency_defect: f64,
    pub decomposition_residual: f64,
    /// Change of `H_0` and `H_1` relative to the unrotated algebra.
    pub hamiltonian_shift: f64,
}

impl RSymmetryReport {
    pub fn max_defect(&self) -> f64 {
        self.nilpotency_defect.max(self.decomposition_residual).max(self.hamiltonian_shift)
    }
}

/// Re-run the planar supercharge algebra after a `U(1) x U(1)` phase rotation.
pub fn r_symmetry_check(charges: &Supercharges2d, phi: f64, psi: f64, ctx: &BracketContext, tol: f64) -> Result<RSymmetryReport> {
    let base = supercharge_algebra_2d(charges, ctx, tol)?;
    let rotated = supercharge_algebra_2d(&charges.rotated(phi, psi), ctx, tol)?;
    let shift = (&rotated.h0 - &base.h0).max_abs().max((&rotated.h1 - &base.h1).max_abs());
    Ok(RSymmetryReport {
        phi,
        psi,
        nilpotency_defect: rotated.nilpotency_defect,
        decomposition_residual: rotated.decomposition_residual,
        hamiltonian_shift: shift,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superpoly::{Grade, VarTable};

    fn ctx() -> BracketContext {
        BracketContext::new(
            &VarTable::from_pairs(&[("X", "P", Grade::Even), ("theta", "pi", Grade::Odd)]).unwrap(),
        )
    }

    fn h(ctx: &BracketContext) -> SuperPolynomial {
        &SuperPolynomial::product_of(ctx.table(), c(0.0, 1.0), &["P", "X"]).unwrap()
            + &SuperPolynomial::product_of(ctx.table(), c(0.0, 1.0), &["pi", "theta"]).unwrap()
    }

    #[test]
    fn degenerate_pair_rejected() {
        let ctx = ctx();
        assert_eq!(build_supercharges_1d(&ctx, c(1.0, 0.0), c(1.0, 0.0)).unwrap_err(), Error::DegenerateSupercharges);
        assert_eq!(build_supercharges_1d(&ctx, c(0.0, 1.0), c(1.0, 0.0)).unwrap_err(), Error::DegenerateSupercharges);
    }

    #[test]
    fn both_single_parameter_choices_reproduce_h() {
        let ctx = ctx();
        let r2 = c(2f64.sqrt(), 0.0);
        for (a, b) in [(r2, c(0.0, 0.0)), (c(0.0, 0.0), r2)] {
            let pair = build_supercharges_1d(&ctx, a, b).unwrap();
            let qq = ctx.bracket(&pair.q, &pair.qbar).unwrap().scale(c(0.0, 0.5));
            assert!((&qq - &h(&ctx)).is_zero_within(1e-12));
            let nil = nilpotency_defects(&pair.q, &pair.qbar, &ctx, 3).unwrap();
            assert!(nil.max_defect() < 1e-12);
        }
    }

    #[test]
    fn generic_pair_is_not_nilpotent() {
        let ctx = ctx();
        let pair = build_supercharges_1d_unchecked(&ctx, c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        let nil = nilpotency_defects(&pair.q, &pair.qbar, &ctx, 1).unwrap();
        assert!(nil.qq.max_abs() > 0.5);
    }

    #[test]
    fn transform_entries() {
        let ctx = ctx();
        let r2 = 2f64.sqrt();
        let pair = build_supercharges_1d(&ctx, c(r2, 0.0), c(0.0, 0.0)).unwrap();
        let rows = susy_transform_table(&pair.q, &pair.qbar, &ctx).unwrap();
        let x = rows.iter().find(|r| r.variable == "X").unwrap();
        assert!((&x.with_q - &ctx.var("theta").unwrap().scale_real(r2)).is_zero_within(1e-15));
        let p = rows.iter().find(|r| r.variable == "P").unwrap();
        assert!(p.with_q.is_zero());
        let pair = build_supercharges_1d(&ctx, c(0.0, 0.0), c(r2, 0.0)).unwrap();
        let rows = susy_transform_table(&pair.q, &pair.qbar, &ctx).unwrap();
        let th = rows.iter().find(|r| r.variable == "theta").unwrap();
        assert!((&th.with_q - &ctx.var("X").unwrap().scale_real(r2)).is_zero_within(1e-15));
    }

    #[test]
    fn boson_fermion_requires_even_input() {
        let ctx = ctx();
        let pair = build_supercharges_1d(&ctx, c(2f64.sqrt(), 0.0), c(0.0, 0.0)).unwrap();
        let th = ctx.var("theta").unwrap();
        assert!(map_boson_fermion(&th, &pair.q, &pair.qbar, &ctx).is_err());
    }
}
