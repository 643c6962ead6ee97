//! JSON documents: sparse forms with declared axis labels, and vector lists.

use calibra_core::multilinear::{AltForm, Vector};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// How multi-index labels in a document map to internal 0-based axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    /// Dimension 7, labels `1..=7`.
    #[serde(rename = "dim7-1based")]
    Dim7OneBased,
    /// Dimension 8, labels `0..=7`.
    #[serde(rename = "dim8-0based")]
    Dim8ZeroBased,
}

impl Convention {
    pub fn for_dim(dim: usize) -> Option<Self> {
        match dim {
            7 => Some(Convention::Dim7OneBased),
            8 => Some(Convention::Dim8ZeroBased),
            _ => None,
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Convention::Dim7OneBased => 7,
            Convention::Dim8ZeroBased => 8,
        }
    }

    /// Label of internal axis 0.
    pub fn base(self) -> usize {
        match self {
            Convention::Dim7OneBased => 1,
            Convention::Dim8ZeroBased => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub idx: Vec<usize>,
    pub c: f64,
}

/// A k-form as a sparse list of labelled coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FormDocument {
    pub dim: usize,
    pub degree: usize,
    pub coeffs: Vec<Term>,
    pub convention: Convention,
}

fn invalid(message: String) -> CliError {
    CliError::validation("InvalidDocument", message)
}

impl FormDocument {
    /// Nonzero coefficients of `f` in lexicographic order.
    pub fn from_form(f: &AltForm) -> Result<Self, CliError> {
        let convention = Convention::for_dim(f.dim())
            .ok_or_else(|| invalid(format!("no labelling convention for dimension {}", f.dim())))?;
        let base = convention.base();
        let coeffs = f
            .terms()
            .into_iter()
            .map(|(idx, c)| Term {
                idx: idx.iter().map(|i| i + base).collect(),
                c,
            })
            .collect();
        Ok(FormDocument {
            dim: f.dim(),
            degree: f.degree(),
            coeffs,
            convention,
        })
    }

    /// Validates labels and builds the form. Indices must be strictly
    /// increasing and every multi-index may appear at most once.
    pub fn to_form(&self) -> Result<AltForm, CliError> {
        if self.convention.dim() != self.dim {
            return Err(invalid(format!(
                "convention {:?} does not describe dimension {}",
                self.convention, self.dim
            )));
        }
        if self.degree > self.dim {
            return Err(invalid(format!("degree {} exceeds dimension {}", self.degree, self.dim)));
        }
        let base = self.convention.base();
        let mut axes = Vec::with_capacity(self.coeffs.len());
        for t in &self.coeffs {
            if t.idx.len() != self.degree {
                return Err(invalid(format!("index {:?} does not have length {}", t.idx, self.degree)));
            }
            if t.idx.windows(2).any(|w| w[0] >= w[1]) {
                return Err(invalid(format!("index {:?} is not strictly increasing", t.idx)));
            }
            if t.idx.iter().any(|&i| i < base || i >= base + self.dim) {
                return Err(invalid(format!(
                    "index {:?} has labels outside {}..={}",
                    t.idx,
                    base,
                    base + self.dim - 1
                )));
            }
            if !t.c.is_finite() {
                return Err(invalid(format!("coefficient of {:?} is not finite", t.idx)));
            }
            let a: Vec<usize> = t.idx.iter().map(|i| i - base).collect();
            if axes.iter().any(|(b, _)| b == &a) {
                return Err(invalid(format!("index {:?} appears twice", t.idx)));
            }
            axes.push((a, t.c));
        }
        Ok(AltForm::from_terms(self.dim, self.degree, axes.iter().map(|(a, c)| (a.as_slice(), *c)))?)
    }
}

/// A list of vectors in internal axis order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorsDocument {
    pub vectors: Vec<Vec<f64>>,
}

impl VectorsDocument {
    pub fn to_vectors(&self, dim: usize) -> Result<Vec<Vector>, CliError> {
        self.vectors
            .iter()
            .map(|v| {
                if v.len() != dim {
                    Err(invalid(format!("vector of length {} in dimension {dim}", v.len())))
                } else if v.iter().any(|x| !x.is_finite()) {
                    Err(invalid("vector has a non-finite entry".to_string()))
                } else {
                    Ok(Vector::from_column_slice(v))
                }
            })
            .collect()
    }
}
