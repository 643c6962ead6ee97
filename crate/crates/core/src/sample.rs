//! Seeded random sampling of vectors, forms, linear maps and admissible
//! frames. All randomness in the crate flows through [`Sampler`], so a seed
//! fully determines every randomized check.

use nalgebra::QR;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::g2::CrossStructure7;
use crate::multilinear::{binomial, orthonormalize, AltForm, Matrix, Metric, Vector};
use crate::spin7::CayleyStructure8;

/// Reproducible random source (ChaCha8).
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Standard normal scalar.
    pub fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    /// Uniform scalar in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    /// Vector with i.i.d. standard normal entries.
    pub fn vector(&mut self, n: usize) -> Vector {
        Vector::from_fn(n, |_, _| self.normal())
    }

    /// Uniformly distributed unit vector for the given metric.
    pub fn unit_vector(&mut self, m: &Metric) -> Vector {
        loop {
            let v = self.vector(m.dim());
            let n = m.norm(&v);
            if n > 1e-3 {
                return v / n;
            }
        }
    }

    /// Matrix with i.i.d. standard normal entries.
    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.normal())
    }

    /// Random orthogonal n×n matrix (Haar up to the sign convention of QR).
    pub fn orthogonal(&mut self, n: usize) -> Matrix {
        let qr = QR::new(self.matrix(n, n));
        let r = qr.r();
        let mut q = qr.q();
        for j in 0..n {
            if r[(j, j)] < 0.0 {
                q.column_mut(j).neg_mut();
            }
        }
        q
    }

    /// Random invertible n×n matrix with condition number at most `max_cond`:
    /// `Q₁ · diag(s) · Q₂` with singular values `s ∈ [1, max_cond]`.
    pub fn gl(&mut self, n: usize, max_cond: f64) -> Matrix {
        let q1 = self.orthogonal(n);
        let q2 = self.orthogonal(n);
        let s = Vector::from_fn(n, |_, _| self.uniform(1.0, max_cond));
        q1 * Matrix::from_diagonal(&s) * q2
    }

    /// Random symmetric positive-definite matrix with condition number at
    /// most `max_cond`.
    pub fn spd(&mut self, n: usize, max_cond: f64) -> Matrix {
        let q = self.orthogonal(n);
        let s = Vector::from_fn(n, |_, _| self.uniform(1.0, max_cond));
        &q * Matrix::from_diagonal(&s) * q.transpose()
    }

    /// k-form on ℝⁿ with i.i.d. standard normal coefficients.
    pub fn form(&mut self, n: usize, k: usize) -> AltForm {
        let dense: Vec<f64> = (0..binomial(n, k)).map(|_| self.normal()).collect();
        AltForm::from_dense(n, k, &dense)
    }

    /// `k` vectors orthonormal for `m`.
    pub fn orthonormal(&mut self, k: usize, m: &Metric) -> Vec<Vector> {
        loop {
            let vs: Vec<Vector> = (0..k).map(|_| self.vector(m.dim())).collect();
            if let Ok(q) = orthonormalize(&vs, m) {
                return q;
            }
        }
    }

    /// A random unit vector orthogonal to the given orthonormal set.
    pub fn unit_orthogonal_to(&mut self, others: &[Vector], m: &Metric) -> Vector {
        loop {
            let mut v = self.vector(m.dim());
            for q in others {
                v -= q * m.inner(q, &v);
            }
            let n = m.norm(&v);
            if n > 1e-3 {
                return v / n;
            }
        }
    }

    /// Random admissible triple `(u, v, w)`: orthonormal with `w ⟂ u×v`.
    pub fn admissible_triple(&mut self, s: &CrossStructure7) -> [Vector; 3] {
        let m = s.metric();
        let uv = self.orthonormal(2, m);
        let (u, v) = (uv[0].clone(), uv[1].clone());
        let c = s.cross(&u, &v).expect("dimension 7");
        let w = self.unit_orthogonal_to(&[u.clone(), v.clone(), c], m);
        [u, v, w]
    }

    /// Random admissible 4-tuple `(u, v, w, x)`: `u, v, w, u×v×w, x`
    /// orthonormal.
    pub fn admissible_tuple(&mut self, c: &CayleyStructure8) -> [Vector; 4] {
        let m = c.metric();
        let uv = self.orthonormal(2, m);
        let (u, v) = (uv[0].clone(), uv[1].clone());
        // for orthonormal u, v, w the product u×v×w is a unit vector
        // orthogonal to all three
        let w = self.unit_orthogonal_to(&[u.clone(), v.clone()], m);
        let t = c.triple_cross(&u, &v, &w).expect("dimension 8");
        let x = self.unit_orthogonal_to(&[u.clone(), v.clone(), w.clone(), t], m);
        [u, v, w, x]
    }
}
