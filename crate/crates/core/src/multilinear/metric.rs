use std::fmt;
use std::sync::OnceLock;

use super::blade::{self, MAX_DIM};
use super::{AltForm, Matrix, Vector};
use crate::error::{check_dim, Error, Result};
use crate::tol;

/// A positive-definite inner product on ℝⁿ with cached factorisation.
///
/// Besides the Cholesky factor this caches the inverse and, lazily, the
/// induced Gram matrices on k-forms (k×k minors of the inverse metric).
#[derive(Clone)]
pub struct Metric {
    g: Matrix,
    chol: Matrix,
    inv: Matrix,
    det: f64,
    compounds: Vec<OnceLock<Matrix>>,
}

impl Metric {
    /// Validates and wraps a symmetric positive-definite matrix.
    ///
    /// The matrix is symmetrised exactly after checking that it is symmetric
    /// to within round-off.
    pub fn new(g: Matrix) -> Result<Self> {
        let n = g.nrows();
        if g.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.ncols(),
            });
        }
        if n > MAX_DIM {
            return Err(Error::DimensionMismatch {
                expected: MAX_DIM,
                found: n,
            });
        }
        if g.iter().any(|x| !x.is_finite()) {
            return Err(Error::DegenerateMetric);
        }
        let scale = g.amax().max(f64::MIN_POSITIVE);
        if (&g - g.transpose()).amax() > 1e-12 * scale {
            return Err(Error::DegenerateMetric);
        }
        let g = (&g + g.transpose()) * 0.5;
        let trace = g.trace();
        let chol = nalgebra::Cholesky::new(g.clone()).ok_or(Error::DegenerateMetric)?;
        let l = chol.l();
        let floor = tol::PIVOT * trace / n.max(1) as f64;
        if (0..n).any(|i| l[(i, i)] * l[(i, i)] <= floor) {
            return Err(Error::DegenerateMetric);
        }
        let inv = chol.inverse();
        let det = (0..n).map(|i| l[(i, i)] * l[(i, i)]).product();
        Ok(Metric {
            g,
            chol: l,
            inv,
            det,
            compounds: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// The standard inner product on ℝⁿ.
    pub fn identity(n: usize) -> Self {
        Metric::new(Matrix::identity(n, n)).expect("identity is positive definite")
    }

    pub fn dim(&self) -> usize {
        self.g.nrows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.g
    }

    /// Lower-triangular Cholesky factor `L` with `g = L Lᵀ`.
    pub fn cholesky(&self) -> &Matrix {
        &self.chol
    }

    pub fn inverse(&self) -> &Matrix {
        &self.inv
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn inner(&self, u: &Vector, v: &Vector) -> f64 {
        u.dot(&(&self.g * v))
    }

    pub fn norm(&self, u: &Vector) -> f64 {
        self.inner(u, u).max(0.0).sqrt()
    }

    /// `u♭ = ⟨u, ·⟩` as components of a covector.
    pub fn lower(&self, u: &Vector) -> Vector {
        &self.g * u
    }

    /// Inverse of [`Metric::lower`].
    pub fn raise(&self, alpha: &Vector) -> Vector {
        &self.inv * alpha
    }

    /// Pullback `hᵀ g h` along a linear map.
    pub fn pullback(&self, h: &Matrix) -> Result<Metric> {
        Metric::new(h.transpose() * &self.g * h)
    }

    /// Gram matrix of the induced inner product on k-forms in
    /// lexicographic basis order.
    pub fn form_gram(&self, k: usize) -> &Matrix {
        self.compounds[k].get_or_init(|| compound(&self.inv, k))
    }

    pub(crate) fn check_dim(&self, n: usize) -> Result<()> {
        check_dim(self.dim(), n)
    }
}

impl fmt::Debug for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Metric").field("g", &self.g).finish()
    }
}

impl PartialEq for Metric {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g
    }
}

/// An orientation, realised as a reference top-degree form declared
/// positive.
#[derive(Clone, Debug, PartialEq)]
pub struct Orientation {
    reference: AltForm,
}

impl Orientation {
    pub fn new(reference: AltForm) -> Result<Self> {
        if reference.degree() != reference.dim() {
            return Err(Error::DegreeOverflow {
                degree: reference.degree(),
                dim: reference.dim(),
            });
        }
        if reference.top() == 0.0 || !reference.top().is_finite() {
            return Err(Error::NotNondegenerate);
        }
        Ok(Orientation { reference })
    }

    /// The orientation of `e^{01…(n-1)}`.
    pub fn standard(n: usize) -> Self {
        Orientation {
            reference: AltForm::volume(n),
        }
    }

    /// `sign · e^{01…(n-1)}` with `sign ∈ {+1, −1}`.
    pub fn from_sign(n: usize, sign: f64) -> Self {
        let s = if sign < 0.0 { -1.0 } else { 1.0 };
        Orientation {
            reference: AltForm::volume(n) * s,
        }
    }

    pub fn dim(&self) -> usize {
        self.reference.dim()
    }

    pub fn reference(&self) -> &AltForm {
        &self.reference
    }

    /// +1 if the standard volume form is positive, −1 otherwise.
    pub fn sign(&self) -> f64 {
        self.reference.top().signum()
    }
}

/// Matrix of all k×k minors of `m`, rows and columns in lexicographic
/// k-subset order.
pub(crate) fn compound(m: &Matrix, k: usize) -> Matrix {
    let (r, c) = (m.nrows(), m.ncols());
    let rows = blade::basis(r, k);
    let cols = blade::basis(c, k);
    let mut out = Matrix::zeros(rows.len(), cols.len());
    let mut buf = [0.0; MAX_DIM * MAX_DIM];
    for (a, &ri) in rows.iter().enumerate() {
        for (b, &ci) in cols.iter().enumerate() {
            out[(a, b)] = minor(m, ri, ci, k, &mut buf);
        }
    }
    out
}

/// Determinant of the submatrix of `m` on row set `rows`, column set `cols`.
pub(crate) fn minor(m: &Matrix, rows: u16, cols: u16, k: usize, buf: &mut [f64]) -> f64 {
    let mut p = 0;
    for i in (0..16).filter(|i| rows & (1 << i) != 0) {
        for j in (0..16).filter(|j| cols & (1 << j) != 0) {
            buf[p] = m[(i, j)];
            p += 1;
        }
    }
    det_in_place(&mut buf[..k * k], k)
}

/// Determinant of a row-major k×k buffer by partial pivoting; the buffer is
/// overwritten.
pub(crate) fn det_in_place(a: &mut [f64], k: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        for r in col + 1..k {
            if a[r * k + col].abs() > a[piv * k + col].abs() {
                piv = r;
            }
        }
        if a[piv * k + col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in 0..k {
                a.swap(col * k + j, piv * k + j);
            }
            det = -det;
        }
        let d = a[col * k + col];
        det *= d;
        for r in col + 1..k {
            let f = a[r * k + col] / d;
            if f != 0.0 {
                for j in col..k {
                    a[r * k + j] -= f * a[col * k + j];
                }
            }
        }
    }
    det
}
