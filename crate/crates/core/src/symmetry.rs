//! u(n,n) generators and the first integrals they induce.
//!
//! With `H = i P^T Q` the infinitesimal symmetry `dQ = i phi T Q`,
//! `dP = -i phi (eta T* eta) P` leaves `H` invariant exactly when
//! `eta T^dagger eta = T`, `eta = diag(I_n, -I_n)`. Each such `T` yields the
//! conserved bilinear `sum_jk T_jk P_j Q_k`.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::bracket::BracketContext;
use crate::error::{Error, Result};
use crate::linalg::{real_rank, solve_in_span};
use crate::superpoly::{Grade, SuperPolynomial};

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockTag {
    /// Block-diagonal Hermitian generator; yields an even integral.
    Diagonal,
    /// `i` times a Hermitian off-diagonal block matrix; yields an odd integral.
    OffDiagonal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMatrix {
    pub matrix: CMatrix,
    pub tag: BlockTag,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `sigma^0 .. sigma^3`.
pub fn pauli(mu: usize) -> CMatrix {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match mu {
        0 => CMatrix::from_row_slice(2, 2, &[o, z, z, o]),
        1 => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
        2 => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
        3 => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        _ => panic!("pauli index {mu} out of range"),
    }
}

/// `diag(I_n, -I_n)`.
pub fn eta(n: usize) -> CMatrix {
    CMatrix::from_fn(2 * n, 2 * n, |r, k| {
        if r != k {
            c(0.0, 0.0)
        } else if r < n {
            c(1.0, 0.0)
        } else {
            c(-1.0, 0.0)
        }
    })
}

impl GeneratorMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Max entry of `eta M^dagger eta - M`.
    pub fn unn_defect(&self) -> f64 {
        let n = self.dim() / 2;
        let e = eta(n);
        let lhs = &e * self.matrix.adjoint() * &e;
        (lhs - &self.matrix).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn first_integral(&self, pv: &PhaseVectors) -> Result<SuperPolynomial> {
        first_integral(&self.matrix, pv)
    }
}

/// `T^0 = sigma^0/2`, `T^1 = (i/2) sigma^1`, `T^2 = (i/2) sigma^2`, `T^3 = sigma^3/2`.
pub fn u11_generators() -> [GeneratorMatrix; 4] {
    let half = c(0.5, 0.0);
    let ihalf = c(0.0, 0.5);
    [
        GeneratorMatrix { matrix: pauli(0) * half, tag: BlockTag::Diagonal },
        GeneratorMatrix { matrix: pauli(1) * ihalf, tag: BlockTag::OffDiagonal },
        GeneratorMatrix { matrix: pauli(2) * ihalf, tag: BlockTag::OffDiagonal },
        GeneratorMatrix { matrix: pauli(3) * half, tag: BlockTag::Diagonal },
    ]
}

/// Basis of the `n x n` Hermitian matrices: `E_kk`, then for `k < l` the pair
/// `E_kl + E_lk`, `i(E_kl - E_lk)`.
fn hermitian_basis(n: usize) -> Vec<CMatrix> {
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        let mut m = CMatrix::zeros(n, n);
        m[(k, k)] = c(1.0, 0.0);
        out.push(m);
    }
    for k in 0..n {
        for l in k + 1..n {
            let mut s = CMatrix::zeros(n, n);
            s[(k, l)] = c(1.0, 0.0);
            s[(l, k)] = c(1.0, 0.0);
            out.push(s);
            let mut a = CMatrix::zeros(n, n);
            a[(k, l)] = c(0.0, 1.0);
            a[(l, k)] = c(0.0, -1.0);
            out.push(a);
        }
    }
    out
}

/// Real basis of u(n,n): `2n^2` block-diagonal generators (u(n) on each block)
/// followed by `2n^2` generators `i [[0, M^dagger], [M, 0]]` with `M` running
/// over `E_kl` and `i E_kl`.
pub fn unn_generators(n: usize) -> Result<Vec<GeneratorMatrix>> {
    if n == 0 {
        return Err(Error::InvalidArgument("u(n,n) needs n >= 1".into()));
    }
    let mut out = Vec::with_capacity(4 * n * n);
    for block in 0..2 {
        for h in hermitian_basis(n) {
            let mut m = CMatrix::zeros(2 * n, 2 * n);
            m.view_mut((block * n, block * n), (n, n)).copy_from(&h);
            out.push(GeneratorMatrix { matrix: m, tag: BlockTag::Diagonal });
        }
    }
    for k in 0..n {
        for l in 0..n {
            for scale in [c(1.0, 0.0), c(0.0, 1.0)] {
                let mut mm = CMatrix::zeros(n, n);
                mm[(k, l)] = scale;
                let mut g = CMatrix::zeros(2 * n, 2 * n);
                g.view_mut((0, n), (n, n)).copy_from(&mm.adjoint());
                g.view_mut((n, 0), (n, n)).copy_from(&mm);
                out.push(GeneratorMatrix { matrix: g * c(0.0, 1.0), tag: BlockTag::OffDiagonal });
            }
        }
    }
    Ok(out)
}

/// Real dimension of the span of a generator list.
pub fn span_dimension(gens: &[GeneratorMatrix]) -> usize {
    let mats: Vec<CMatrix> = gens.iter().map(|g| g.matrix.clone()).collect();
    real_rank(&mats)
}

/// Ordered momentum and coordinate vectors, even slots first.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseVectors {
    pub momenta: Vec<SuperPolynomial>,
    pub coordinates: Vec<SuperPolynomial>,
}

impl PhaseVectors {
    pub fn new(momenta: Vec<SuperPolynomial>, coordinates: Vec<SuperPolynomial>) -> Result<Self> {
        if momenta.len() != coordinates.len() {
            return Err(Error::DimensionMismatch { expected: momenta.len(), found: coordinates.len() });
        }
        let mut seen_odd = false;
        for (p, q) in momenta.iter().zip(&coordinates) {
            let gp = p.parity().grade().ok_or_else(|| Error::MixedParity("phase vector entry".into()))?;
            let gq = q.parity().grade().ok_or_else(|| Error::MixedParity("phase vector entry".into()))?;
            if gp != gq {
                return Err(Error::InvalidArgument("momentum/coordinate slot parity differs".into()));
            }
            if gp == Grade::Odd {
                seen_odd = true;
            } else if seen_odd {
                return Err(Error::InvalidArgument("even slots must precede odd slots".into()));
            }
        }
        Ok(PhaseVectors { momenta, coordinates })
    }

    /// Look up `momenta` and `coordinates` by name in the context's table.
    pub fn from_names(ctx: &BracketContext, momenta: &[&str], coordinates: &[&str]) -> Result<Self> {
        let get = |names: &[&str]| names.iter().map(|n| ctx.var(n)).collect::<Result<Vec<_>>>();
        Self::new(get(momenta)?, get(coordinates)?)
    }

    pub fn len(&self) -> usize {
        self.momenta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.momenta.is_empty()
    }

    fn grades(&self) -> Vec<Grade> {
        self.momenta.iter().map(|p| p.parity().grade().unwrap_or(Grade::Even)).collect()
    }

    /// Signature matrix: `+1` on even slots, `-1` on odd ones.
    pub fn eta(&self) -> CMatrix {
        let g = self.grades();
        CMatrix::from_fn(g.len(), g.len(), |r, k| {
            if r != k {
                c(0.0, 0.0)
            } else if g[r] == Grade::Even {
                c(1.0, 0.0)
            } else {
                c(-1.0, 0.0)
            }
        })
    }

    /// `sum_jk W_jk P_j Q_k`.
    pub fn bilinear(&self, w: &CMatrix) -> Result<SuperPolynomial> {
        let n = self.len();
        if w.nrows() != n || w.ncols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: w.nrows() });
        }
        let table = self.momenta.first().map(|p| p.table().clone()).ok_or_else(|| {
            Error::InvalidArgument("empty phase vectors".into())
        })?;
        let mut acc = SuperPolynomial::zero(&table);
        for j in 0..n {
            for k in 0..n {
                if w[(j, k)].norm() != 0.0 {
                    acc = acc.try_add(&self.momenta[j].try_mul(&self.coordinates[k])?.scale(w[(j, k)]))?;
                }
            }
        }
        Ok(acc)
    }

    /// `i P^T Q`.
    pub fn hamiltonian(&self) -> Result<SuperPolynomial> {
        self.bilinear(&(CMatrix::identity(self.len(), self.len()) * c(0.0, 1.0)))
    }

    /// Recover `W` with `h = sum_jk W_jk P_j Q_k`.
    pub fn bilinear_coefficients(&self, h: &SuperPolynomial, tol: f64) -> Result<CMatrix> {
        let n = self.len();
        let mut basis = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                basis.push(self.momenta[j].try_mul(&self.coordinates[k])?);
            }
        }
        let sol = solve_in_span(h, &basis);
        if sol.residual >= tol {
            return Err(Error::NotBilinear(format!("residual {:e}", sol.residual)));
        }
        Ok(CMatrix::from_row_slice(n, n, &sol.coefficients))
    }
}

/// `sum_jk T_jk P_j Q_k`, momentum factor first.
pub fn first_integral(t: &CMatrix, pv: &PhaseVectors) -> Result<SuperPolynomial> {
    pv.bilinear(t)
}

/// First-order change of `h` under `dQ = i T Q`, `dP = -i (eta T* eta) P` with the
/// parameter kept as a formal prefactor.
///
/// `h` must be a bilinear form `sum W_jk P_j Q_k`; each product keeps the
/// momentum factor on the left, so the variation is again such a form with
/// matrix `-i S^T W + i W T`, `S = eta T* eta`.
pub fn invariance_defect(t: &CMatrix, pv: &PhaseVectors, h: &SuperPolynomial, tol: f64) -> Result<SuperPolynomial> {
    let n = pv.len();
    if t.nrows() != n || t.ncols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: t.nrows() });
    }
    let w = pv.bilinear_coefficients(h, tol)?;
    let e = pv.eta();
    let s = &e * t.conjugate() * &e;
    let d = (s.transpose() * &w) * c(0.0, -1.0) + (&w * t) * c(0.0, 1.0);
    pv.bilinear(&d)
}

/// Structure coefficients of one bracket `{I_i, I_j}` in the span of the inputs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureEntry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<(f64, f64)>,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClosureReport {
    pub entries: Vec<ClosureEntry>,
    pub max_residual: f64,
}

impl ClosureReport {
    pub fn closes(&self, tol: f64) -> bool {
        self.max_residual < tol
    }
}

/// Express every pairwise bracket of `integrals` in their linear span.
pub fn closure_check(integrals: &[SuperPolynomial], ctx: &BracketContext) -> Result<ClosureReport> {
    let mut entries = Vec::new();
    let mut max_residual: f64 = 0.0;
    for i in 0..integrals.len() {
        for j in 0..integrals.len() {
            let b = ctx.bracket(&integrals[i], &integrals[j])?;
            let sol = solve_in_span(&b, integrals);
            max_residual = max_residual.max(sol.residual);
            entries.push(ClosureEntry {
                i,
                j,
                coefficients: sol.coefficients.iter().map(|z| (z.re, z.im)).collect(),
                residual: sol.residual,
            });
        }
    }
    Ok(ClosureReport { entries, max_residual })
}

/// `c` with `f = c g` coefficient-wise to within `tol`, if one exists.
pub fn match_up_to_scalar(f: &SuperPolynomial, g: &SuperPolynomial, tol: f64) -> Option<Complex64> {
    if g.is_zero() || **f.table() != **g.table() {
        return None;
    }
    let mut num = Complex64::default();
    let mut den = 0.0;
    for (m, gc) in g.terms() {
        num += gc.conj() * f.coefficient(m);
        den += gc.norm_sqr();
    }
    let scale = num / den;
    let resid = f.try_sub(&g.scale(scale)).ok()?.max_abs();
    (resid < tol).then_some(scale)
}
