//! Spinor representations built from cross products.
//!
//! In dimension 7 the spinor space is `S = ℝ ⊕ V` and Clifford
//! multiplication is `γ(u)(λ, v) = (−⟨u, v⟩, λu + u×v)`. In dimension 8 the
//! half-spin spaces are `S⁺ = ℝ ⊕ Λ²₇` and `S⁻ = W*`, joined by
//! `γ(e)(λ, ω) = λe♭ + 2ι(e)ω` and the product map `m(u, v)`.

use crate::error::{check_dim, Error, Result};
use crate::g2::CrossStructure7;
use crate::multilinear::{contract, flat, form_inner, form_norm, wedge, AltForm, Matrix, Vector};
use crate::spin7::CayleyStructure8;
use crate::tol;

/// Clifford multiplication `γ(u)` on `ℝ ⊕ V` as an 8×8 matrix in the
/// coordinates `(λ, v)`: `[[0, −(Gu)ᵀ], [u, A(u)]]` with `A(u)v = u×v`.
pub fn gamma7_matrix(s: &CrossStructure7, u: &Vector) -> Result<Matrix> {
    check_dim(7, u.len())?;
    let mut g = Matrix::zeros(8, 8);
    let lowered = s.metric().lower(u);
    for i in 0..7 {
        g[(0, i + 1)] = -lowered[i];
        g[(i + 1, 0)] = u[i];
    }
    g.view_mut((1, 1), (7, 7)).copy_from(&s.cross_matrix(u)?);
    Ok(g)
}

/// `γ(u)(λ, v) = (−⟨u, v⟩, λu + u×v)`.
pub fn gamma_v(s: &CrossStructure7, u: &Vector, lambda: f64, v: &Vector) -> Result<(f64, Vector)> {
    check_dim(7, u.len())?;
    check_dim(7, v.len())?;
    Ok((-s.metric().inner(u, v), u * lambda + s.cross(u, v)?))
}

/// The ordered product `γ(e₇)γ(e₆)⋯γ(e₁)` over the standard basis
/// (axes 6 down to 0).
pub fn gamma7_volume(s: &CrossStructure7) -> Result<Matrix> {
    let mut out = Matrix::identity(8, 8);
    for i in (0..7).rev() {
        out *= gamma7_matrix(s, &crate::multilinear::unit_vector(7, i))?;
    }
    Ok(out)
}

/// An element `(λ, ω)` of `ℝ ⊕ Λ²₇`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorPlus {
    pub lambda: f64,
    pub omega: AltForm,
}

/// An element of `W*`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinorMinus {
    pub covector: Vector,
}

impl SpinorPlus {
    /// Validates that `omega` lies in Λ²₇ of `c`, i.e. that its projection
    /// to the 21-dimensional complement is negligible.
    pub fn new(c: &CayleyStructure8, lambda: f64, omega: AltForm) -> Result<Self> {
        check_dim(8, omega.dim())?;
        check_dim(2, omega.degree())?;
        let off = &omega - &c.pi7(&omega)?;
        let residual = form_norm(&off, c.metric()) / form_norm(&omega, c.metric()).max(1.0);
        if !(residual <= tol::ABS) {
            return Err(Error::NotInLambda27 { residual });
        }
        Ok(SpinorPlus { lambda, omega })
    }

    /// `λ² + |ω|²`.
    pub fn norm_squared(&self, c: &CayleyStructure8) -> f64 {
        self.lambda * self.lambda + form_norm(&self.omega, c.metric()).powi(2)
    }

    pub fn inner(&self, other: &SpinorPlus, c: &CayleyStructure8) -> Result<f64> {
        Ok(self.lambda * other.lambda + form_inner(&self.omega, &other.omega, c.metric())?)
    }
}

impl SpinorMinus {
    pub fn norm_squared(&self, c: &CayleyStructure8) -> f64 {
        self.covector.dot(&(c.metric().inverse() * &self.covector))
    }

    /// The vector metrically dual to the covector.
    pub fn vector(&self, c: &CayleyStructure8) -> Vector {
        c.metric().raise(&self.covector)
    }
}

/// `m(u, v) = (⟨u, v⟩, ½(ε ω_{u,v} + u♭∧v♭))` with `ω_{u,v} = ι(v)ι(u)Φ`.
///
/// The sign `ε` keeps the image in Λ²₇ when `Φ` is anti-self-dual; for a
/// positive structure it is `1`.
pub fn m_product(c: &CayleyStructure8, u: &Vector, v: &Vector) -> Result<SpinorPlus> {
    let m = c.metric();
    let pair = c.pair_form(u, v)?.omega;
    let uv = wedge(&flat(u, m)?, &flat(v, m)?)?;
    Ok(SpinorPlus {
        lambda: m.inner(u, v),
        omega: (pair * c.eps() + uv) * 0.5,
    })
}

/// `γ(e)(λ, ω) = λe♭ + 2ι(e)ω`.
pub fn gamma8(c: &CayleyStructure8, e: &Vector, s: &SpinorPlus) -> Result<SpinorMinus> {
    check_dim(8, e.len())?;
    let iota = contract(e, &s.omega)?.to_dense();
    Ok(SpinorMinus {
        covector: c.metric().lower(e) * s.lambda + iota * 2.0,
    })
}

/// The adjoint `γ(u)*: S⁻ → S⁺`, `γ(u)*v♭ = m(u, v)`.
pub fn gamma8_adjoint(c: &CayleyStructure8, u: &Vector, s: &SpinorMinus) -> Result<SpinorPlus> {
    check_dim(8, s.covector.len())?;
    m_product(c, u, &s.vector(c))
}

/// The four summands of `τ(x, u, v, w)` with their signs applied:
/// `m(u×v×w, x)`, `−m(v×w×x, u)`, `m(w×x×u, v)`, `−m(x×u×v, w)`.
///
/// For pairwise orthogonal arguments they coincide.
pub fn tau_terms(
    c: &CayleyStructure8,
    x: &Vector,
    u: &Vector,
    v: &Vector,
    w: &Vector,
) -> Result<[SpinorPlus; 4]> {
    let term = |a: &Vector, b: &Vector, d: &Vector, e: &Vector, sign: f64| -> Result<SpinorPlus> {
        let t = m_product(c, &c.triple_cross(a, b, d)?, e)?;
        Ok(SpinorPlus {
            lambda: sign * t.lambda,
            omega: t.omega * sign,
        })
    };
    Ok([
        term(u, v, w, x, 1.0)?,
        term(v, w, x, u, -1.0)?,
        term(w, x, u, v, 1.0)?,
        term(x, u, v, w, -1.0)?,
    ])
}

/// `τ(x, u, v, w) = (Φ(x, u, v, w), χ(x, u, v, w))`, the average of
/// [`tau_terms`].
pub fn tau(c: &CayleyStructure8, x: &Vector, u: &Vector, v: &Vector, w: &Vector) -> Result<SpinorPlus> {
    let terms = tau_terms(c, x, u, v, w)?;
    let mut omega = AltForm::zero(8, 2);
    let mut lambda = 0.0;
    for t in &terms {
        lambda += t.lambda;
        omega += &t.omega;
    }
    Ok(SpinorPlus {
        lambda: 0.25 * lambda,
        omega: omega * 0.25,
    })
}

/// The Λ²₇ part of [`tau`]; `Φ(x,u,v,w)² + |χ|² = |x∧u∧v∧w|²`.
pub fn chi(c: &CayleyStructure8, x: &Vector, u: &Vector, v: &Vector, w: &Vector) -> Result<AltForm> {
    Ok(tau(c, x, u, v, w)?.omega)
}
