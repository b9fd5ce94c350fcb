//! Exact flows of quadratic super-Hamiltonians and variable substitution.
//!
//! For a quadratic even Hamiltonian the bracket acts linearly on the ordered
//! variable vector, `d/dt v = L v`, so the flow is `exp(L t)`. Odd initial
//! data never gets a numeric value: it is carried as coefficient vectors over
//! a set of abstract Grassmann generators.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::superpoly::{Grade, Monomial, SuperPolynomial, VarTable};

/// Homomorphic substitution of every source variable by a polynomial over the
/// target table.
#[derive(Debug, Clone)]
pub struct VariableMap {
    source: Arc<VarTable>,
    target: Arc<VarTable>,
    images: Vec<SuperPolynomial>,
}

impl VariableMap {
    /// Images must be parity-homogeneous and match the grade of the variable
    /// they replace.
    pub fn new(source: &Arc<VarTable>, target: &Arc<VarTable>, images: Vec<SuperPolynomial>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(Error::DimensionMismatch { expected: source.len(), found: images.len() });
        }
        for (i, img) in images.iter().enumerate() {
            if **img.table() != **target {
                return Err(Error::TableMismatch);
            }
            if img.is_zero() {
                continue;
            }
            if img.parity().grade() != Some(source.grade(i)) {
                return Err(Error::ParityViolatingMap(source.name(i).to_string()));
            }
        }
        Ok(VariableMap { source: Arc::clone(source), target: Arc::clone(target), images })
    }

    pub fn identity(table: &Arc<VarTable>) -> Self {
        let images = (0..table.len()).map(|i| SuperPolynomial::var_at(table, i)).collect();
        VariableMap { source: Arc::clone(table), target: Arc::clone(table), images }
    }

    /// Build from named images; variables not mentioned map to the variable of
    /// the same name in the target table.
    pub fn from_named(
        source: &Arc<VarTable>,
        target: &Arc<VarTable>,
        named: &[(&str, SuperPolynomial)],
    ) -> Result<Self> {
        let mut images = Vec::with_capacity(source.len());
        for i in 0..source.len() {
            let name = source.name(i);
            match named.iter().find(|(n, _)| *n == name) {
                Some((_, img)) => images.push(img.clone()),
                None => images.push(SuperPolynomial::var(target, name)?),
            }
        }
        for (n, _) in named {
            source.index_of(n)?;
        }
        Self::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<VarTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VarTable> {
        &self.target
    }

    pub fn images(&self) -> &[SuperPolynomial] {
        &self.images
    }

    /// `(self then other)`: substitute this map, then `other` into the result.
    pub fn then(&self, other: &VariableMap) -> Result<VariableMap> {
        if **other.source() != *self.target {
            return Err(Error::TableMismatch);
        }
        let images = self.images.iter().map(|img| substitute(img, other)).collect::<Result<_>>()?;
        VariableMap::new(&self.source, &other.target, images)
    }
}

/// Replace every variable of `f` by its image under `map`.
pub fn substitute(f: &SuperPolynomial, map: &VariableMap) -> Result<SuperPolynomial> {
    if **f.table() != *map.source {
        return Err(Error::TableMismatch);
    }
    let src = &map.source;
    let mut out = SuperPolynomial::zero(&map.target);
    for (m, c) in f.terms() {
        let mut acc = SuperPolynomial::constant(&map.target, *c);
        // canonical factor order: even variables, then odd ascending
        for (i, &e) in m.exponents().iter().enumerate() {
            if src.grade(i) == Grade::Even && e > 0 {
                acc = acc.try_mul(&map.images[i].pow(e))?;
            }
        }
        for i in m.odd_factors(src) {
            acc = acc.try_mul(&map.images[i])?;
        }
        out = out.try_add(&acc)?;
    }
    Ok(out)
}

/// `d/dt v = L v` on the ordered variable vector of `table`.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutionMatrix {
    pub matrix: DMatrix<Complex64>,
    pub table: Arc<VarTable>,
}

/// Read off the linear flow generated by a quadratic Hamiltonian.
pub fn linearize(h: &SuperPolynomial, ctx: &BracketContext) -> Result<EvolutionMatrix> {
    let table = ctx.table();
    let n = table.len();
    let mut l = DMatrix::from_element(n, n, Complex64::default());
    for i in 0..n {
        let rate = ctx.time_derivative(&ctx.var_at(i), h)?;
        for (m, c) in rate.terms() {
            let j = (0..n).find(|&j| *m == Monomial::var(n, j)).ok_or_else(|| {
                Error::NotQuadratic(format!("d{}/dt = {} is not linear", table.name(i), rate))
            })?;
            l[(i, j)] = *c;
        }
    }
    Ok(EvolutionMatrix { matrix: l, table: Arc::clone(table) })
}

impl EvolutionMatrix {
    pub fn is_diagonal(&self) -> bool {
        let m = &self.matrix;
        (0..m.nrows()).all(|i| (0..m.ncols()).all(|j| i == j || m[(i, j)].norm() == 0.0))
    }

    /// `exp(L t)`. Diagonal generators (every model in this crate) are
    /// exponentiated entrywise; anything else goes through scaling and squaring.
    pub fn propagator(&self, t: f64) -> DMatrix<Complex64> {
        let lt = self.matrix.map(|c| c * t);
        if self.is_diagonal() {
            let n = lt.nrows();
            DMatrix::from_fn(n, n, |i, j| if i == j { lt[(i, i)].exp() } else { Complex64::default() })
        } else {
            lt.exp()
        }
    }

    /// The flow at time `t` as a substitution `v_i -> sum_j exp(Lt)_ij v_j`.
    pub fn flow_map(&self, t: f64) -> Result<VariableMap> {
        let e = self.propagator(t);
        let n = self.table.len();
        let images = (0..n)
            .map(|i| {
                let mut acc = SuperPolynomial::zero(&self.table);
                for j in 0..n {
                    if e[(i, j)].norm() > 0.0 {
                        acc = &acc + &SuperPolynomial::var_at(&self.table, j).scale(e[(i, j)]);
                    }
                }
                acc
            })
            .collect();
        VariableMap::new(&self.table, &self.table, images)
    }
}

/// Phase-space point with symbolic odd components.
///
/// Row `i` belongs to variable `i`. Column 0 holds the c-number value of an
/// even variable; columns `1..` hold the coefficients of an odd variable over
/// the abstract Grassmann generators `xi_1, xi_2, ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    pub components: DMatrix<Complex64>,
}

impl Assignment {
    pub fn new(table: &VarTable, components: DMatrix<Complex64>) -> Result<Self> {
        if components.nrows() != table.len() {
            return Err(Error::DimensionMismatch { expected: table.len(), found: components.nrows() });
        }
        for i in 0..table.len() {
            let row = components.row(i);
            let ok = match table.grade(i) {
                Grade::Even => row.iter().skip(1).all(|c| c.norm() == 0.0),
                Grade::Odd => row[0].norm() == 0.0,
            };
            if !ok {
                return Err(Error::ParityViolatingMap(table.name(i).to_string()));
            }
        }
        Ok(Assignment { components })
    }

    /// Even variables take `values`, odd variable `k` (in table order) is
    /// assigned the generator `xi_{k+1}`.
    pub fn with_generators(table: &VarTable, values: &[Complex64]) -> Result<Self> {
        let odd: Vec<usize> = table.odd_indices().collect();
        let n_even = table.len() - odd.len();
        if values.len() != n_even {
            return Err(Error::DimensionMismatch { expected: n_even, found: values.len() });
        }
        let mut m = DMatrix::from_element(table.len(), 1 + odd.len(), Complex64::default());
        let mut next = values.iter();
        for i in 0..table.len() {
            match table.grade(i) {
                Grade::Even => m[(i, 0)] = *next.next().expect("length checked"),
                Grade::Odd => {
                    let k = odd.iter().position(|&o| o == i).expect("odd index");
                    m[(i, 1 + k)] = Complex64::new(1.0, 0.0);
                }
            }
        }
        Self::new(table, m)
    }

    pub fn max_abs_diff(&self, other: &Assignment) -> f64 {
        (&self.components - &other.components).iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// `v(t) = exp(L t) v(0)`.
pub fn evolve(v0: &Assignment, l: &EvolutionMatrix, t: f64) -> Result<Assignment> {
    if v0.components.nrows() != l.table.len() {
        return Err(Error::DimensionMismatch { expected: l.table.len(), found: v0.components.nrows() });
    }
    Ok(Assignment { components: l.propagator(t) * &v0.components })
}

/// Largest coefficient of `I(v(t)) - I(v(0))` over the time grid.
pub fn conservation_over_time(i: &SuperPolynomial, l: &EvolutionMatrix, t_grid: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &t in t_grid {
        let moved = substitute(i, &l.flow_map(t)?)?;
        worst = worst.max(moved.try_sub(i)?.max_abs());
    }
    Ok(worst)
}

/// Largest deviation from the canonical bracket table of the evolved variables.
pub fn flow_canonical_defect(ctx: &BracketContext, l: &EvolutionMatrix, t_grid: &[f64]) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for &t in t_grid {
        let map = l.flow_map(t)?;
        worst = worst.max(ctx.canonical_table_defect(map.images())?);
    }
    Ok(worst)
}
