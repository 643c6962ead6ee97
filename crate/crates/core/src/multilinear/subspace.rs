use super::{normalized_gram_volume, Metric, Vector};
use crate::error::{check_dim, Error, Result};
use crate::tol;

/// A linear subspace given by a basis of independent vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    basis: Vec<Vector>,
}

impl Subspace {
    /// Wraps a basis, rejecting it when the Gram volume of the normalised
    /// vectors (Euclidean inner product) is at most `1e-12`.
    pub fn new(basis: Vec<Vector>) -> Result<Self> {
        let n = basis.first().map(|v| v.len()).ok_or(Error::BadDimension(0))?;
        if basis.len() > n {
            return Err(Error::DependentBasis);
        }
        for v in &basis {
            check_dim(n, v.len())?;
        }
        let vol = normalized_gram_volume(&basis, &Metric::identity(n))?;
        if !(vol > tol::PIVOT) {
            return Err(Error::DependentBasis);
        }
        Ok(Subspace { basis })
    }

    /// The span of the standard basis vectors with the given axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Result<Self> {
        if axes.iter().any(|&i| i >= ambient) {
            return Err(Error::InvalidIndex {
                index: axes.to_vec(),
                dim: ambient,
            });
        }
        Subspace::new(axes.iter().map(|&i| super::unit_vector(ambient, i)).collect())
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.basis[0].len()
    }
}
