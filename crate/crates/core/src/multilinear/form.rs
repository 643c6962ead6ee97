use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::blade::{self, Blade, MAX_DIM};
use super::Vector;
use crate::error::{Error, Result};

/// An alternating k-form on ℝⁿ (n ≤ 8) with sparse coefficients.
///
/// Coefficients are stored against strictly increasing multi-indices of
/// 0-based axes: the form `c·e^{i₁…i_k}` evaluates to `c` on
/// `(e_{i₁}, …, e_{i_k})`. Exact zeros are never stored.
#[derive(Clone, PartialEq)]
pub struct AltForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Blade, f64>,
}

impl AltForm {
    /// The zero k-form on ℝⁿ.
    ///
    /// # Panics
    /// If `dim > 8` or `degree > dim`.
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        assert!(degree <= dim, "degree {degree} exceeds dimension {dim}");
        AltForm {
            dim,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant 0-form `c`.
    pub fn scalar(dim: usize, c: f64) -> Self {
        let mut f = AltForm::zero(dim, 0);
        f.insert(Blade(0), c);
        f
    }

    /// The standard volume form `e^{01…(n-1)}`.
    pub fn volume(dim: usize) -> Self {
        let mut f = AltForm::zero(dim, dim);
        f.insert(Blade(((1u32 << dim) - 1) as u16), 1.0);
        f
    }

    /// `c · e^{idx}`; the indices may be unsorted (the permutation sign is
    /// absorbed) but must be distinct and in range.
    pub fn monomial(dim: usize, idx: &[usize], c: f64) -> Result<Self> {
        Self::from_terms(dim, idx.len(), [(idx, c)])
    }

    /// Builds a form from `(multi-index, coefficient)` pairs. Repeated
    /// multi-indices accumulate.
    pub fn from_terms<'a, I>(dim: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a [usize], f64)>,
    {
        if dim > MAX_DIM {
            return Err(Error::DimensionMismatch {
                expected: MAX_DIM,
                found: dim,
            });
        }
        if degree > dim {
            return Err(Error::DegreeOverflow { degree, dim });
        }
        let mut f = AltForm::zero(dim, degree);
        for (idx, c) in terms {
            let bad = || Error::InvalidIndex {
                index: idx.to_vec(),
                dim,
            };
            if idx.len() != degree || idx.iter().any(|&i| i >= dim) {
                return Err(bad());
            }
            let (b, s) = Blade::from_unsorted(idx).ok_or_else(bad)?;
            f.accumulate(b, s * c);
        }
        Ok(f)
    }

    /// The 1-form with the given components.
    pub fn covector(components: &Vector) -> Self {
        let dim = components.len();
        let mut f = AltForm::zero(dim, 1);
        for (i, &c) in components.iter().enumerate() {
            f.insert(Blade(1 << i), c);
        }
        f
    }

    /// Builds a form from coefficients listed in lexicographic basis order.
    pub fn from_dense(dim: usize, degree: usize, dense: &[f64]) -> Self {
        let basis = blade::basis(dim, degree);
        assert_eq!(dense.len(), basis.len(), "dense length mismatch");
        let mut f = AltForm::zero(dim, degree);
        for (&m, &c) in basis.iter().zip(dense) {
            f.insert(Blade(m), c);
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of stored (nonzero) coefficients.
    pub fn nnz(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `e^{idx}`, with the permutation sign applied for
    /// unsorted indices. Repeated or out-of-range indices give 0.
    pub fn coeff(&self, idx: &[usize]) -> f64 {
        if idx.len() != self.degree || idx.iter().any(|&i| i >= self.dim) {
            return 0.0;
        }
        match Blade::from_unsorted(idx) {
            Some((b, s)) => s * self.coeffs.get(&b).copied().unwrap_or(0.0),
            None => 0.0,
        }
    }

    /// Coefficient of the top-degree monomial, or 0 for lower degrees.
    pub fn top(&self) -> f64 {
        if self.degree != self.dim {
            return 0.0;
        }
        self.coeffs.values().next().copied().unwrap_or(0.0)
    }

    /// Nonzero terms as `(sorted multi-index, coefficient)` in
    /// lexicographic order.
    pub fn terms(&self) -> Vec<(Vec<usize>, f64)> {
        self.coeffs.iter().map(|(b, &c)| (b.indices(), c)).collect()
    }

    /// Coefficients in lexicographic basis order, zeros included.
    pub fn to_dense(&self) -> Vector {
        let mut v = Vector::zeros(blade::binomial(self.dim, self.degree));
        for (b, &c) in &self.coeffs {
            v[blade::position(self.dim, b.0)] = c;
        }
        v
    }

    /// Largest absolute coefficient.
    pub fn sup_norm(&self) -> f64 {
        self.coeffs.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector (the metric norm for the
    /// standard inner product).
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// Drops coefficients with `|c| ≤ tol`.
    pub fn chop(&self, tol: f64) -> Self {
        let mut f = self.clone();
        f.coeffs.retain(|_, c| c.abs() > tol);
        f
    }

    /// Sup-norm distance to another form of the same shape.
    pub fn distance(&self, other: &AltForm) -> f64 {
        (self - other).sup_norm()
    }

    /// Re-embeds the form in ℝ^`new_dim`, moving axis `i` to `i + offset`.
    pub fn lift(&self, new_dim: usize, offset: usize) -> Self {
        assert!(self.dim + offset <= new_dim, "lift out of range");
        let mut f = AltForm::zero(new_dim, self.degree);
        for (b, &c) in &self.coeffs {
            f.insert(Blade(b.0 << offset), c);
        }
        f
    }

    /// Inverse of [`AltForm::lift`]: keeps only terms supported on axes
    /// `offset..offset+new_dim` and shifts them down.
    pub fn restrict(&self, new_dim: usize, offset: usize) -> Self {
        let window = (((1u32 << new_dim) - 1) << offset) as u16;
        let mut f = AltForm::zero(new_dim, self.degree);
        for (b, &c) in &self.coeffs {
            if b.0 & !window == 0 {
                f.insert(Blade(b.0 >> offset), c);
            }
        }
        f
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = (u16, f64)> + '_ {
        self.coeffs.iter().map(|(b, &c)| (b.0, c))
    }

    pub(crate) fn insert(&mut self, b: Blade, c: f64) {
        if c == 0.0 {
            self.coeffs.remove(&b);
        } else {
            self.coeffs.insert(b, c);
        }
    }

    pub(crate) fn accumulate(&mut self, b: Blade, c: f64) {
        let v = self.coeffs.get(&b).copied().unwrap_or(0.0) + c;
        self.insert(b, v);
    }

    fn assert_same_shape(&self, other: &AltForm) {
        assert!(
            self.dim == other.dim && self.degree == other.degree,
            "shape mismatch: ({}, {}) vs ({}, {})",
            self.dim,
            self.degree,
            other.dim,
            other.degree
        );
    }

    pub(crate) fn scaled(&self, s: f64) -> Self {
        let mut f = AltForm::zero(self.dim, self.degree);
        for (b, &c) in &self.coeffs {
            f.insert(*b, s * c);
        }
        f
    }
}

impl fmt::Debug for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltForm(dim={}, degree={}) {}", self.dim, self.degree, self)
    }
}

impl fmt::Display for AltForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (n, (b, &c)) in self.coeffs.iter().enumerate() {
            let idx: String = b.indices().iter().map(|i| i.to_string()).collect();
            let basis = if idx.is_empty() { "1".to_string() } else { format!("e{idx}") };
            let mag = c.abs();
            let body = if mag == 1.0 { basis } else { format!("{mag}·{basis}") };
            match (n, c < 0.0) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Add for &AltForm {
    type Output = AltForm;
    fn add(self, rhs: &AltForm) -> AltForm {
        let mut f = self.clone();
        f += rhs;
        f
    }
}

impl Sub for &AltForm {
    type Output = AltForm;
    fn sub(self, rhs: &AltForm) -> AltForm {
        let mut f = self.clone();
        f -= rhs;
        f
    }
}

impl Add for AltForm {
    type Output = AltForm;
    fn add(mut self, rhs: AltForm) -> AltForm {
        self += &rhs;
        self
    }
}

impl Sub for AltForm {
    type Output = AltForm;
    fn sub(mut self, rhs: AltForm) -> AltForm {
        self -= &rhs;
        self
    }
}

impl AddAssign<&AltForm> for AltForm {
    fn add_assign(&mut self, rhs: &AltForm) {
        self.assert_same_shape(rhs);
        for (b, &c) in &rhs.coeffs {
            self.accumulate(*b, c);
        }
    }
}

impl SubAssign<&AltForm> for AltForm {
    fn sub_assign(&mut self, rhs: &AltForm) {
        self.assert_same_shape(rhs);
        for (b, &c) in &rhs.coeffs {
            self.accumulate(*b, -c);
        }
    }
}

impl Neg for &AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        self.scaled(-1.0)
    }
}

impl Neg for AltForm {
    type Output = AltForm;
    fn neg(self) -> AltForm {
        self.scaled(-1.0)
    }
}

impl Mul<f64> for &AltForm {
    type Output = AltForm;
    fn mul(self, s: f64) -> AltForm {
        self.scaled(s)
    }
}

impl Mul<f64> for AltForm {
    type Output = AltForm;
    fn mul(self, s: f64) -> AltForm {
        self.scaled(s)
    }
}

impl Mul<&AltForm> for f64 {
    type Output = AltForm;
    fn mul(self, f: &AltForm) -> AltForm {
        f.scaled(self)
    }
}

impl Mul<AltForm> for f64 {
    type Output = AltForm;
    fn mul(self, f: AltForm) -> AltForm {
        f.scaled(self)
    }
}
