//! Linear changes of phase-space variables and their canonicity.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::bracket::{expected_canonical, BracketContext};
use crate::dynamics::{substitute, VariableMap};
use crate::error::{Error, Result};
use crate::superpoly::{SuperPolynomial, VarTable};

/// `target_i = sum_j matrix[i][j] * source_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCanonicalMap {
    pub matrix: DMatrix<Complex64>,
    pub source: Arc<VarTable>,
    pub target: Arc<VarTable>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CanonicalReport {
    pub max_defect: f64,
    pub canonical: bool,
}

impl LinearCanonicalMap {
    pub fn new(matrix: DMatrix<Complex64>, source: &Arc<VarTable>, target: &Arc<VarTable>) -> Result<Self> {
        if matrix.nrows() != target.len() || matrix.ncols() != source.len() {
            return Err(Error::DimensionMismatch { expected: target.len() * source.len(), found: matrix.len() });
        }
        for i in 0..target.len() {
            for j in 0..source.len() {
                if matrix[(i, j)].norm() > 0.0 && target.grade(i) != source.grade(j) {
                    return Err(Error::ParityViolatingMap(target.name(i).to_string()));
                }
            }
        }
        Ok(LinearCanonicalMap { matrix, source: Arc::clone(source), target: Arc::clone(target) })
    }

    /// Rows given by name; target variables not listed copy the source
    /// variable of the same name.
    pub fn from_rows(
        source: &Arc<VarTable>,
        target: &Arc<VarTable>,
        rows: &[(&str, Vec<(&str, Complex64)>)],
    ) -> Result<Self> {
        let mut m = DMatrix::from_element(target.len(), source.len(), Complex64::default());
        for i in 0..target.len() {
            let name = target.name(i);
            match rows.iter().find(|(n, _)| *n == name) {
                Some((_, entries)) => {
                    for (s, k) in entries {
                        m[(i, source.index_of(s)?)] += *k;
                    }
                }
                None => m[(i, source.index_of(name)?)] = Complex64::new(1.0, 0.0),
            }
        }
        for (n, _) in rows {
            target.index_of(n)?;
        }
        Self::new(m, source, target)
    }

    /// Target variables as polynomials over the source table.
    pub fn images(&self) -> Vec<SuperPolynomial> {
        (0..self.target.len())
            .map(|i| {
                let mut acc = SuperPolynomial::zero(&self.source);
                for j in 0..self.source.len() {
                    let k = self.matrix[(i, j)];
                    if k.norm() > 0.0 {
                        acc = &acc + &SuperPolynomial::var_at(&self.source, j).scale(k);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &LinearCanonicalMap) -> Result<LinearCanonicalMap> {
        if *next.source != *self.target {
            return Err(Error::TableMismatch);
        }
        Self::new(&next.matrix * &self.matrix, &self.source, &next.target)
    }

    pub fn inverse(&self) -> Result<LinearCanonicalMap> {
        let inv = self
            .matrix
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::InvalidArgument("singular variable map".into()))?;
        Self::new(inv, &self.target, &self.source)
    }

    /// Rewrite a function of the source variables in terms of the target variables.
    pub fn transform(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        let inv = self.inverse()?;
        let back = VariableMap::new(&self.source, &self.target, inv.images())?;
        substitute(f, &back)
    }

    /// Rewrite a function of the target variables in terms of the source variables.
    pub fn pull_back(&self, f: &SuperPolynomial) -> Result<SuperPolynomial> {
        let forward = VariableMap::new(&self.target, &self.source, self.images())?;
        substitute(f, &forward)
    }
}

/// Brackets of the new variables, computed in the old ones, against the
/// canonical table of the target.
pub fn verify_canonical(map: &LinearCanonicalMap, tol: f64) -> Result<CanonicalReport> {
    let ctx = BracketContext::new(&map.source);
    let images = map.images();
    let pairs = map.target.pairs();
    let mut worst: f64 = 0.0;
    for a in 0..images.len() {
        for b in 0..images.len() {
            let want = expected_canonical(&map.target, &pairs, a, b);
            let got = ctx.bracket(&images[a], &images[b])?;
            let diff = got.try_sub(&SuperPolynomial::constant(&map.source, want.into()))?;
            worst = worst.max(diff.max_abs());
        }
    }
    Ok(CanonicalReport { max_defect: worst, canonical: worst < tol })
}

/// `X = (q - i p)/sqrt2`, `P = (p - i q)/sqrt2` for each `(q, p, X, P)` name quadruple.
pub fn complexification(
    source: &Arc<VarTable>,
    target: &Arc<VarTable>,
    quads: &[(&str, &str, &str, &str)],
) -> Result<LinearCanonicalMap> {
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let rows: Vec<(&str, Vec<(&str, Complex64)>)> = quads
        .iter()
        .flat_map(|&(q, p, x, pp)| {
            [
                (x, vec![(q, Complex64::new(r, 0.0)), (p, Complex64::new(0.0, -r))]),
                (pp, vec![(p, Complex64::new(r, 0.0)), (q, Complex64::new(0.0, -r))]),
            ]
        })
        .collect();
    LinearCanonicalMap::from_rows(source, target, &rows)
}

/// `q -> sqrt(w) q`, `p -> p / sqrt(w)` on the listed pairs, on one table.
pub fn rescaling(table: &Arc<VarTable>, pairs: &[(&str, &str, f64)]) -> Result<LinearCanonicalMap> {
    let rows: Vec<(&str, Vec<(&str, Complex64)>)> = pairs
        .iter()
        .flat_map(|&(q, p, w)| {
            [(q, vec![(q, Complex64::new(w.sqrt(), 0.0))]), (p, vec![(p, Complex64::new(1.0 / w.sqrt(), 0.0))])]
        })
        .collect();
    LinearCanonicalMap::from_rows(table, table, &rows)
}

/// The same SO(2) rotation on coordinates and momenta. With
/// `old = [x, px, y, py]` and `new = [q1, p1, q2, p2]`:
/// `q1 = x c + y s`, `q2 = -x s + y c`, likewise for the momenta.
pub fn rotation(
    source: &Arc<VarTable>,
    target: &Arc<VarTable>,
    angle: f64,
    old: [&str; 4],
    new: [&str; 4],
) -> Result<LinearCanonicalMap> {
    let (s, c) = angle.sin_cos();
    let k = |v: f64| Complex64::new(v, 0.0);
    let [x, px, y, py] = old;
    let [q1, p1, q2, p2] = new;
    let rows = vec![
        (q1, vec![(x, k(c)), (y, k(s))]),
        (q2, vec![(x, k(-s)), (y, k(c))]),
        (p1, vec![(px, k(c)), (py, k(s))]),
        (p2, vec![(px, k(-s)), (py, k(c))]),
    ];
    LinearCanonicalMap::from_rows(source, target, &rows)
}
