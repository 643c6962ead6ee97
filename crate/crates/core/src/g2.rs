//! Cross products on 7-dimensional inner product spaces and their
//! calibrations.
//!
//! A [`CrossStructure7`] bundles a metric, an orientation and a compatible
//! 3-form φ with `⟨u×v, w⟩ = φ(u, v, w)`. It is either the standard one or
//! obtained from a bare 3-form by [`recover_metric_from_phi`].

use nalgebra::SymmetricEigen;

use crate::decomp::{project_onto_span, DecompReport};
use crate::error::{check_dim, Error, Result};
use crate::multilinear::{
    contract, contract_axis, flat, form_inner, form_norm, gram_volume, hodge, orthonormalize, pullback,
    unit_vector, wedge, wedge_all, AltForm, Matrix, Metric, Orientation, Subspace, Vector,
};
use crate::tol;

const N: usize = 7;

/// Terms of the standard 3-form on ℝ⁷ (0-based axes).
const PHI0: [([usize; 3], f64); 7] = [
    ([0, 1, 2], 1.0),
    ([0, 3, 4], -1.0),
    ([0, 5, 6], -1.0),
    ([1, 3, 5], -1.0),
    ([1, 4, 6], 1.0),
    ([2, 3, 6], -1.0),
    ([2, 4, 5], -1.0),
];

/// Terms of its Hodge dual, the standard 4-form.
const PSI0: [([usize; 4], f64); 7] = [
    ([0, 1, 3, 6], -1.0),
    ([0, 1, 4, 5], -1.0),
    ([0, 2, 3, 5], 1.0),
    ([0, 2, 4, 6], -1.0),
    ([1, 2, 3, 4], -1.0),
    ([1, 2, 5, 6], -1.0),
    ([3, 4, 5, 6], 1.0),
];

/// The standard 3-form `e⁰¹² − e⁰³⁴ − e⁰⁵⁶ − e¹³⁵ + e¹⁴⁶ − e²³⁶ − e²⁴⁵`.
pub fn standard_phi7() -> AltForm {
    AltForm::from_terms(N, 3, PHI0.iter().map(|(i, c)| (&i[..], *c))).expect("valid table")
}

/// The standard 4-form `ψ₀ = *φ₀`.
pub fn standard_psi7() -> AltForm {
    AltForm::from_terms(N, 4, PSI0.iter().map(|(i, c)| (&i[..], *c))).expect("valid table")
}

/// A 3-form on a 7-dimensional space together with its compatible metric and
/// orientation.
#[derive(Clone, Debug)]
pub struct CrossStructure7 {
    metric: Metric,
    orientation: Orientation,
    phi: AltForm,
    psi: AltForm,
    /// `φ(e_i, e_j, e_k)` at `49 i + 7 j + k`.
    tensor: Vec<f64>,
}

/// What a subspace is with respect to φ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind7 {
    Associative,
    Coassociative,
    Generic,
}

/// Result of [`CrossStructure7::classify_subspace`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Classification7 {
    pub kind: SubspaceKind7,
    /// Norm of the associator (dimension 3) or coassociator (dimension 4)
    /// on an orthonormal basis.
    pub residual: f64,
}

/// The SU(3)-structure induced on the orthogonal complement of a unit
/// vector `u`.
#[derive(Clone, Debug)]
pub struct TangentSU3 {
    /// `ι(u)φ`, which annihilates `u`.
    pub omega: AltForm,
    /// `v ↦ u×v`; squares to `−1` on `u⊥` and kills `u`.
    pub j: Matrix,
    /// Real part of the complex volume form, `φ` restricted to `u⊥`.
    pub re_theta: AltForm,
    /// Imaginary part, `(x, y, z) ↦ −φ(u×x, y, z)` on `u⊥`.
    pub im_theta: AltForm,
}

fn tensor3(phi: &AltForm) -> Vec<f64> {
    let mut t = vec![0.0; N * N * N];
    for (idx, c) in phi.terms() {
        let (i, j, k) = (idx[0], idx[1], idx[2]);
        for (p, s) in [
            ([i, j, k], 1.0),
            ([j, k, i], 1.0),
            ([k, i, j], 1.0),
            ([j, i, k], -1.0),
            ([i, k, j], -1.0),
            ([k, j, i], -1.0),
        ] {
            t[49 * p[0] + 7 * p[1] + p[2]] = s * c;
        }
    }
    t
}

fn check_form(phi: &AltForm, degree: usize) -> Result<()> {
    check_dim(N, phi.dim())?;
    check_dim(degree, phi.degree())
}

/// `B_ij`: top coefficient of `ι(e_i)φ ∧ ι(e_j)φ ∧ φ`.
pub fn b_matrix(phi: &AltForm) -> Result<Matrix> {
    check_form(phi, 3)?;
    let slices: Vec<AltForm> = (0..N)
        .map(|i| contract_axis(i, phi))
        .collect::<Result<_>>()?;
    let mut b = Matrix::zeros(N, N);
    for i in 0..N {
        for j in i..N {
            let v = wedge_all(&[&slices[i], &slices[j], phi])?.top();
            b[(i, j)] = v;
            b[(j, i)] = v;
        }
    }
    Ok(b)
}

/// Sign of the definite form `B`, or the reason it is not definite.
fn definite_sign(b: &Matrix) -> Result<f64> {
    let eig = SymmetricEigen::new(b.clone()).eigenvalues;
    let scale = eig.amax();
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::NotNondegenerate);
    }
    if eig.iter().any(|l| l.abs() <= tol::DEGENERATE * scale) {
        return Err(Error::NotNondegenerate);
    }
    let positive = eig.iter().filter(|&&l| l > 0.0).count();
    let negative = N - positive;
    match (positive, negative) {
        (_, 0) => Ok(1.0),
        (0, _) => Ok(-1.0),
        _ => Err(Error::IndefiniteSignature { positive, negative }),
    }
}

/// Whether `φ` is nondegenerate, i.e. `(u, v) ↦ ι(u)φ∧ι(v)φ∧φ` is definite.
pub fn is_nondegenerate3(phi: &AltForm) -> bool {
    b_matrix(phi).and_then(|b| definite_sign(&b)).is_ok()
}

/// Recovers the unique metric and orientation compatible with a
/// nondegenerate 3-form.
///
/// The bilinear form `B` is normalised against the reference volume
/// `±e^{0…6}`, then rescaled so that `ι(u)φ∧ι(u)φ∧φ = 6|u|² dvol`.
pub fn recover_metric_from_phi(phi: &AltForm) -> Result<CrossStructure7> {
    let b = b_matrix(phi)?;
    let s = definite_sign(&b)?;
    let g_raw = &b * s;
    // σ = μ·dvol_raw with σ = e^{0…6} up to sign
    let det = g_raw.determinant();
    if !(det > 0.0) {
        return Err(Error::NotNondegenerate);
    }
    let mu = 1.0 / det.sqrt();
    let lambda = (6.0 / mu).powf(1.0 / 9.0);
    let metric = Metric::new(g_raw / (lambda * lambda))?;
    CrossStructure7::certify(metric, Orientation::from_sign(N, s), phi.clone())
}

impl CrossStructure7 {
    /// Checks that `φ` is compatible with the metric and orientation and
    /// computes `ψ = *φ`.
    ///
    /// Compatibility is checked on the full bilinear form:
    /// `ι(u)φ∧ι(v)φ∧φ = 6⟨u, v⟩ dvol` to relative accuracy `1e-7`.
    pub fn certify(metric: Metric, orientation: Orientation, phi: AltForm) -> Result<Self> {
        check_form(&phi, 3)?;
        metric.check_dim(N)?;
        check_dim(N, orientation.dim())?;
        let b = b_matrix(&phi)?;
        let dvol = orientation.sign() * metric.det().sqrt();
        let expected = metric.matrix() * (6.0 * dvol);
        let residual = (&b - &expected).amax() / expected.amax();
        if !(residual <= tol::RATIO) {
            return Err(Error::CompatibilityFailed { residual });
        }
        let psi = hodge(&phi, &metric, &orientation)?;
        let tensor = tensor3(&phi);
        Ok(CrossStructure7 {
            metric,
            orientation,
            phi,
            psi,
            tensor,
        })
    }

    /// The standard structure: identity metric, orientation `e^{0…6}`,
    /// `φ₀` and `ψ₀`.
    pub fn standard() -> Self {
        let s = CrossStructure7::certify(Metric::identity(N), Orientation::standard(N), standard_phi7())
            .expect("standard structure is compatible");
        debug_assert_eq!(s.psi, standard_psi7());
        s
    }

    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    pub fn phi(&self) -> &AltForm {
        &self.phi
    }

    pub fn psi(&self) -> &AltForm {
        &self.psi
    }

    /// Hodge star for this structure's metric and orientation.
    pub fn hodge(&self, a: &AltForm) -> Result<AltForm> {
        hodge(a, &self.metric, &self.orientation)
    }

    /// `dvol` of the structure.
    pub fn volume(&self) -> AltForm {
        crate::multilinear::volume_form(&self.metric, &self.orientation)
    }

    fn check(&self, vs: &[&Vector]) -> Result<()> {
        vs.iter().try_for_each(|v| check_dim(N, v.len()))
    }

    /// `φ(u, v, ·)` as covector components.
    fn phi_uv(&self, u: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(N);
        for i in 0..N {
            if u[i] == 0.0 {
                continue;
            }
            for j in 0..N {
                let uv = u[i] * v[j];
                if uv == 0.0 {
                    continue;
                }
                let row = &self.tensor[49 * i + 7 * j..49 * i + 7 * j + 7];
                for k in 0..N {
                    out[k] += uv * row[k];
                }
            }
        }
        out
    }

    /// `φ(u, v, w)`.
    pub fn phi_eval(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<f64> {
        self.check(&[u, v, w])?;
        Ok(self.phi_uv(u, v).dot(w))
    }

    /// The cross product, `⟨u×v, w⟩ = φ(u, v, w)`.
    pub fn cross(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        self.check(&[u, v])?;
        Ok(self.metric.raise(&self.phi_uv(u, v)))
    }

    /// Matrix of `v ↦ u×v`.
    pub fn cross_matrix(&self, u: &Vector) -> Result<Matrix> {
        self.check(&[u])?;
        let mut a = Matrix::zeros(N, N);
        for j in 0..N {
            a.set_column(j, &self.cross(u, &unit_vector(N, j))?);
        }
        Ok(a)
    }

    /// `[u, v, w] = (u×v)×w + ⟨v, w⟩u − ⟨u, w⟩v`; satisfies
    /// `⟨[u, v, w], x⟩ = ψ(u, v, w, x)`.
    pub fn associator(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<Vector> {
        let uv = self.cross(u, v)?;
        self.check(&[w])?;
        let m = &self.metric;
        Ok(self.cross(&uv, w)? + u * m.inner(v, w) - v * m.inner(u, w))
    }

    /// `[u, v, w, x] = φ(u,v,w)x − φ(x,u,v)w + φ(w,x,u)v − φ(v,w,x)u`.
    pub fn coassociator(&self, u: &Vector, v: &Vector, w: &Vector, x: &Vector) -> Result<Vector> {
        self.check(&[u, v, w, x])?;
        let f = |a: &Vector, b: &Vector, c: &Vector| self.phi_uv(a, b).dot(c);
        Ok(x * f(u, v, w) - w * f(x, u, v) + v * f(w, x, u) - u * f(v, w, x))
    }

    /// Classifies a 3- or 4-dimensional subspace as associative,
    /// coassociative or generic.
    ///
    /// The basis is orthonormalised first, so the verdict does not depend on
    /// how the basis is scaled.
    pub fn classify_subspace(&self, sub: &Subspace) -> Result<Classification7> {
        check_dim(N, sub.ambient())?;
        let dim = sub.dim();
        if dim != 3 && dim != 4 {
            return Err(Error::BadDimension(dim));
        }
        let q = orthonormalize(sub.basis(), &self.metric)?;
        let (residual, special) = if dim == 3 {
            let r = self.metric.norm(&self.associator(&q[0], &q[1], &q[2])?);
            (r, SubspaceKind7::Associative)
        } else {
            let r = self.metric.norm(&self.coassociator(&q[0], &q[1], &q[2], &q[3])?);
            (r, SubspaceKind7::Coassociative)
        };
        let kind = if residual <= tol::CLASSIFY {
            special
        } else {
            SubspaceKind7::Generic
        };
        Ok(Classification7 { kind, residual })
    }

    /// `ω ↦ *(φ∧ω)` on 2-forms.
    pub fn phi_action2(&self, w: &AltForm) -> Result<AltForm> {
        self.hodge(&wedge(&self.phi, w)?)
    }

    /// Splits a 2-form into its 7- and 14-dimensional components, the
    /// eigenspaces of `ω ↦ *(φ∧ω)` for the eigenvalues 2 and −1.
    ///
    /// Component residuals are the eigenvalue defects.
    pub fn decompose2(&self, w: &AltForm) -> Result<DecompReport> {
        check_dim(N, w.dim())?;
        check_dim(2, w.degree())?;
        let inner = self.hodge(&wedge(&self.psi, w)?)?;
        let w7 = self.hodge(&wedge(&self.psi, &inner)?)? * (1.0 / 3.0);
        let w14 = w - &w7;
        let r7 = form_norm(&(self.phi_action2(&w7)? - &w7 * 2.0), &self.metric);
        let r14 = form_norm(&(self.phi_action2(&w14)? + w14.clone()), &self.metric);
        Ok(DecompReport::assemble(
            w,
            vec![("7", w7, r7), ("14", w14, r14)],
            &self.metric,
        ))
    }

    /// Splits a 3-form into components of dimensions 1, 7 and 27.
    ///
    /// The 1-part is the projection onto φ, the 7-part a least-squares fit
    /// over `ι(e_i)ψ`, the 27-part the remainder. Residuals: distance of the
    /// 1-part from `ℝφ`; distance of the 7-part from `ι(u)ψ` with
    /// `u♭ = −¼*(φ∧b₇)`; and `max(‖φ∧b₂₇‖, ‖ψ∧b₂₇‖)`.
    pub fn decompose3(&self, b: &AltForm) -> Result<DecompReport> {
        check_dim(N, b.dim())?;
        check_dim(3, b.degree())?;
        let m = &self.metric;
        let phi_sq = form_inner(&self.phi, &self.phi, m)?;
        let b1 = &self.phi * (form_inner(b, &self.phi, m)? / phi_sq);
        let gens: Vec<AltForm> = (0..N)
            .map(|i| contract(&unit_vector(N, i), &self.psi))
            .collect::<Result<_>>()?;
        let b7 = project_onto_span(b, &gens, m);
        let b27 = &(b - &b1) - &b7;

        let r1 = {
            let c = form_inner(&b1, &self.phi, m)? / phi_sq;
            form_norm(&(&b1 - &(&self.phi * c)), m)
        };
        let r7 = {
            let u_flat = self.hodge(&wedge(&self.phi, &b7)?)? * -0.25;
            let u = m.raise(&u_flat.to_dense());
            form_norm(&(&b7 - &contract(&u, &self.psi)?), m)
        };
        let r27 = form_norm(&wedge(&self.phi, &b27)?, m).max(form_norm(&wedge(&self.psi, &b27)?, m));
        Ok(DecompReport::assemble(
            b,
            vec![("1", b1, r1), ("7", b7, r7), ("27", b27, r27)],
            m,
        ))
    }

    /// The frame `(u, v, u×v, w, w×u, w×v, w×(u×v))` of an admissible triple
    /// as the columns of a matrix `g`.
    ///
    /// For the standard structure `g` is orthogonal with `g*φ₀ = φ₀`, and
    /// `(e₀, e₁, e₃)` gives the identity.
    pub fn frame(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<Matrix> {
        self.check(&[u, v, w])?;
        let m = &self.metric;
        let uv = self.cross(u, v)?;
        let defects = [
            ("|u| = 1", m.norm(u) - 1.0),
            ("|v| = 1", m.norm(v) - 1.0),
            ("|w| = 1", m.norm(w) - 1.0),
            ("<u,v> = 0", m.inner(u, v)),
            ("<u,w> = 0", m.inner(u, w)),
            ("<v,w> = 0", m.inner(v, w)),
            ("<u×v,w> = 0", m.inner(&uv, w)),
        ];
        if let Some((what, d)) = defects.iter().find(|(_, d)| d.abs() > tol::ABS) {
            return Err(Error::NotAdmissibleTriple(format!("{what} violated by {d:e}")));
        }
        let cols = [
            u.clone(),
            v.clone(),
            uv.clone(),
            w.clone(),
            self.cross(w, u)?,
            self.cross(w, v)?,
            self.cross(w, &uv)?,
        ];
        Ok(Matrix::from_columns(&cols))
    }

    /// The SU(3)-structure on `u⊥` for a unit vector `u`.
    pub fn tangent_su3(&self, u: &Vector) -> Result<TangentSU3> {
        self.check(&[u])?;
        let norm = self.metric.norm(u);
        if (norm - 1.0).abs() > tol::ABS {
            return Err(Error::NotUnit(norm));
        }
        // orthogonal projection onto u⊥
        let p = Matrix::identity(N, N) - u * self.metric.lower(u).transpose();
        let omega = contract(u, &self.phi)?;
        let re_theta = pullback(&self.phi, &p)?;
        let im_theta = -pullback(&contract(u, &self.psi)?, &p)?;
        Ok(TangentSU3 {
            omega,
            j: self.cross_matrix(u)?,
            re_theta,
            im_theta,
        })
    }

    fn calibration_guard(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<f64> {
        let f = self.phi_eval(u, v, w)?;
        let m = &self.metric;
        let scale = m.norm(u) * m.norm(v) * m.norm(w);
        if f.abs() <= tol::ABS * scale || f == 0.0 {
            return Err(Error::CalibrationVanishes(f));
        }
        Ok(f)
    }

    /// Pointwise gradient of the associative action, `[u, v, w]/φ(u, v, w)`.
    pub fn associative_gradient(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<Vector> {
        let f = self.calibration_guard(u, v, w)?;
        Ok(self.associator(u, v, w)? / f)
    }

    /// Energy density `|u∧v∧w|²/φ(u, v, w)²`; at least 1, with equality
    /// exactly on associative triples.
    pub fn energy_density(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<f64> {
        let f = self.calibration_guard(u, v, w)?;
        Ok(gram_volume(&[u.clone(), v.clone(), w.clone()], &self.metric)? / (f * f))
    }

    /// `u♭` for this metric.
    pub fn flat(&self, u: &Vector) -> Result<AltForm> {
        flat(u, &self.metric)
    }
}
