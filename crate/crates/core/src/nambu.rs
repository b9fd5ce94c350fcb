//! Generalized Nambu 4-bracket on the one-dimensional phase space.
//!
//! `{F, H1, H2, H3} = norm * D^{-1} * det[d(F, H1, H2, H3) / d(P, X, pi, theta)]`
//! with left derivatives for the momentum columns and right derivatives for
//! the coordinate columns. The divisor `D` is odd and has no inverse, so the
//! bracket is never evaluated directly: [`nambu_defect`] checks
//! `norm * J - dF/dt * D` instead. The divisor acts from the right; with odd
//! `F` the left placement gives the wrong sign.

use num_complex::Complex64;
use serde::Serialize;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::superpoly::{Monomial, Role, SuperPolynomial};
use crate::symmetry::match_up_to_scalar;

/// Factor order used when expanding the determinant of non-commuting entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DeterminantOrder {
    /// `sum sgn(s) D[1][s1] D[2][s2] D[3][s3] D[4][s4]`
    RowMajor,
    /// `sum sgn(s) D[s1][1] D[s2][2] D[s3][3] D[s4][4]`
    ColumnMajor,
}

impl DeterminantOrder {
    pub fn as_str(self) -> &'static str {
        match self {
            DeterminantOrder::RowMajor => "row-major",
            DeterminantOrder::ColumnMajor => "column-major",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NambuSpec {
    pub hamiltonians: [SuperPolynomial; 3],
    pub divisor: SuperPolynomial,
    pub normalization: Complex64,
    /// Column variables; momenta are differentiated from the left, coordinates
    /// from the right.
    pub columns: [usize; 4],
    pub order: DeterminantOrder,
}

/// Column order `(P, X, pi, theta)`.
pub fn default_columns(ctx: &BracketContext) -> Result<[usize; 4]> {
    let t = ctx.table();
    Ok([t.index_of("P")?, t.index_of("X")?, t.index_of("pi")?, t.index_of("theta")?])
}

impl NambuSpec {
    pub fn new(
        ctx: &BracketContext,
        hamiltonians: [SuperPolynomial; 3],
        divisor: SuperPolynomial,
        normalization: Complex64,
    ) -> Result<Self> {
        Ok(NambuSpec {
            hamiltonians,
            divisor,
            normalization,
            columns: default_columns(ctx)?,
            order: DeterminantOrder::RowMajor,
        })
    }

    /// Pick the normalization so that `F = P` reproduces Hamilton's equation,
    /// i.e. `norm * J(P) = {P, H} * D`.
    pub fn calibrated(
        ctx: &BracketContext,
        hamiltonians: [SuperPolynomial; 3],
        divisor: SuperPolynomial,
        h: &SuperPolynomial,
        order: DeterminantOrder,
        tol: f64,
    ) -> Result<Self> {
        let mut spec = Self::new(ctx, hamiltonians, divisor, Complex64::new(1.0, 0.0))?;
        spec.order = order;
        let p = ctx.var("P")?;
        let j = graded_jacobian(&p, &spec, ctx)?;
        let rhs = ctx.time_derivative(&p, h)?.try_mul(&spec.divisor)?;
        let norm = match_up_to_scalar(&rhs, &j, tol)
            .ok_or_else(|| Error::InvalidArgument("jacobian of P is not proportional to D dP/dt".into()))?;
        spec.normalization = norm;
        Ok(spec)
    }
}

fn derivative(f: &SuperPolynomial, var: usize, ctx: &BracketContext) -> SuperPolynomial {
    match ctx.table().entry(var).role {
        Role::Momentum => f.left_derivative(var),
        Role::Coordinate => f.right_derivative(var),
    }
}

/// All permutations of `0..4` with their signs.
fn permutations4() -> Vec<([usize; 4], f64)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
                    if distinct {
                        let inv = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                        out.push((p, if inv % 2 == 0 { 1.0 } else { -1.0 }));
                    }
                }
            }
        }
    }
    out
}

/// Graded Jacobian determinant of four row functions against the column variables.
pub fn jacobian_of_rows(
    rows: [&SuperPolynomial; 4],
    columns: [usize; 4],
    order: DeterminantOrder,
    ctx: &BracketContext,
) -> Result<SuperPolynomial> {
    let d: Vec<Vec<SuperPolynomial>> =
        rows.iter().map(|r| columns.iter().map(|&v| derivative(r, v, ctx)).collect()).collect();
    let mut acc = SuperPolynomial::zero(ctx.table());
    for (perm, sign) in permutations4() {
        // perm[r] = column used by row r
        let factors: Vec<&SuperPolynomial> = match order {
            DeterminantOrder::RowMajor => (0..4).map(|r| &d[r][perm[r]]).collect(),
            DeterminantOrder::ColumnMajor => (0..4)
                .map(|col| {
                    let r = perm.iter().position(|&x| x == col).expect("permutation");
                    &d[r][col]
                })
                .collect(),
        };
        if factors.iter().any(|f| f.is_zero()) {
            continue;
        }
        let mut term = SuperPolynomial::constant(ctx.table(), Complex64::new(sign, 0.0));
        for f in factors {
            term = term.try_mul(f)?;
        }
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

/// Jacobian with `F` in the first row and the spec's Hamiltonians below.
pub fn graded_jacobian(f: &SuperPolynomial, spec: &NambuSpec, ctx: &BracketContext) -> Result<SuperPolynomial> {
    let [h1, h2, h3] = &spec.hamiltonians;
    jacobian_of_rows([f, h1, h2, h3], spec.columns, spec.order, ctx)
}

/// `norm * J(F) - {F, H} * D`; zero certifies that the Nambu bracket
/// reproduces the time derivative of `F`.
pub fn nambu_defect(f: &SuperPolynomial, h: &SuperPolynomial, spec: &NambuSpec, ctx: &BracketContext) -> Result<SuperPolynomial> {
    let j = graded_jacobian(f, spec, ctx)?.scale(spec.normalization);
    let rhs = ctx.time_derivative(f, h)?.try_mul(&spec.divisor)?;
    j.try_sub(&rhs)
}

/// Jacobian with four given rows, e.g. four conserved quantities.
pub fn nambu_bracket_of(rows: [&SuperPolynomial; 4], spec: &NambuSpec, ctx: &BracketContext) -> Result<SuperPolynomial> {
    jacobian_of_rows(rows, spec.columns, spec.order, ctx)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Quotient {
    /// Unique `R` with `J = R D`.
    Exact(SuperPolynomial),
    /// A solution exists but `R D = 0` has nontrivial solutions on the
    /// candidate support; `particular` is the least-norm one.
    Ambiguous { particular: SuperPolynomial, kernel_dim: usize },
    /// No `R` on the candidate support reproduces `J`.
    NoSolution { residual: f64 },
}

fn divide_monomial(num: &Monomial, den: &Monomial) -> Option<Monomial> {
    let e: Option<Vec<u32>> = num
        .exponents()
        .iter()
        .zip(den.exponents())
        .map(|(a, b)| a.checked_sub(*b))
        .collect();
    e.map(Monomial::from_exponents)
}

/// Solve `J = R D` over monomial coefficients.
pub fn exact_quotient(j: &SuperPolynomial, d: &SuperPolynomial, tol: f64) -> Result<Quotient> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("division by the zero polynomial".into()));
    }
    if **j.table() != **d.table() {
        return Err(Error::TableMismatch);
    }
    if j.is_zero() {
        return Ok(Quotient::Exact(SuperPolynomial::zero(j.table())));
    }
    let mut candidates: Vec<Monomial> = Vec::new();
    for (mj, _) in j.terms() {
        for (md, _) in d.terms() {
            if let Some(m) = divide_monomial(mj, md) {
                if !candidates.contains(&m) {
                    candidates.push(m);
                }
            }
        }
    }
    let table = j.table();
    let columns: Vec<SuperPolynomial> = candidates
        .iter()
        .map(|m| SuperPolynomial::from_term(table, m.clone(), Complex64::new(1.0, 0.0)).try_mul(d))
        .collect::<Result<_>>()?;
    let sol = solve_in_span(j, &columns);
    if candidates.is_empty() || sol.residual >= tol {
        return Ok(Quotient::NoSolution { residual: sol.residual });
    }
    let mut r = SuperPolynomial::zero(table);
    for (m, k) in candidates.iter().zip(&sol.coefficients) {
        r = r.try_add(&SuperPolynomial::from_term(table, m.clone(), *k))?;
    }
    if sol.rank < candidates.len() {
        Ok(Quotient::Ambiguous { particular: r, kernel_dim: candidates.len() - sol.rank })
    } else {
        Ok(Quotient::Exact(r))
    }
}
