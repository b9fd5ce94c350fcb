//! Linear algebra over polynomial coefficient vectors.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::superpoly::{Monomial, SuperPolynomial};

/// Singular values below this (relative to the largest) count as zero.
const RANK_EPS: f64 = 1e-10;

/// Coordinates of `target` in the span of `basis`, by least squares over the
/// monomial coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct SpanSolution {
    pub coefficients: Vec<Complex64>,
    /// Largest coefficient of `target - sum c_k basis_k`.
    pub residual: f64,
    /// Rank of the basis; `rank < basis.len()` means the solution is not unique.
    pub rank: usize,
}

/// Shared monomial indexing for a set of polynomials.
pub(crate) fn coefficient_matrix(polys: &[&SuperPolynomial]) -> (Vec<Monomial>, DMatrix<Complex64>) {
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    }
    let mut monos = vec![Monomial::one(0); index.len()];
    for (m, &i) in &index {
        monos[i] = m.clone();
    }
    let mut a = DMatrix::from_element(index.len(), polys.len(), Complex64::default());
    for (col, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            a[(index[m], col)] = *c;
        }
    }
    (monos, a)
}

pub fn solve_in_span(target: &SuperPolynomial, basis: &[SuperPolynomial]) -> SpanSolution {
    if basis.is_empty() {
        return SpanSolution { coefficients: vec![], residual: target.max_abs(), rank: 0 };
    }
    let mut all: Vec<&SuperPolynomial> = basis.iter().collect();
    all.push(target);
    let (_, m) = coefficient_matrix(&all);
    let nb = basis.len();
    if m.nrows() == 0 {
        return SpanSolution { coefficients: vec![Complex64::default(); nb], residual: 0.0, rank: 0 };
    }
    let a = m.columns(0, nb).into_owned();
    let b: DVector<Complex64> = m.column(nb).into_owned();
    let svd = a.clone().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let eps = (smax * RANK_EPS).max(1e-300);
    let rank = svd.singular_values.iter().filter(|&&s| s > eps).count();
    let x = svd.solve(&b, eps).expect("svd computed with both factors");
    let r = &a * &x - &b;
    SpanSolution {
        coefficients: x.iter().copied().collect(),
        residual: r.iter().map(|c| c.norm()).fold(0.0, f64::max),
        rank,
    }
}

/// Rank of a set of polynomials viewed as coefficient vectors.
pub fn polynomial_rank(polys: &[SuperPolynomial]) -> usize {
    if polys.is_empty() {
        return 0;
    }
    let refs: Vec<&SuperPolynomial> = polys.iter().collect();
    let (_, a) = coefficient_matrix(&refs);
    if a.nrows() == 0 {
        return 0;
    }
    let sv = a.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > smax * RANK_EPS).count()
}

/// Rank over the reals of complex matrices, each flattened to `(re, im)` pairs.
pub fn real_rank(mats: &[DMatrix<Complex64>]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let len = mats[0].len();
    let a = DMatrix::from_fn(2 * len, mats.len(), |r, c| {
        let z = mats[c][r / 2];
        if r % 2 == 0 {
            z.re
        } else {
            z.im
        }
    });
    let sv = a.singular_values();
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    sv.iter().filter(|&&s| s > smax * RANK_EPS).count()
}
