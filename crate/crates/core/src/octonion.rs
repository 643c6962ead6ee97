//! The normed algebra `ℝ ⊕ V` of a 7-dimensional cross product, with its
//! triple and fourfold cross products.
//!
//! The unit sits on axis 0 of `ℝ⁸ = ℝ ⊕ ℝ⁷`; the imaginary part carries the
//! metric of the underlying [`CrossStructure7`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{check_dim, Result};
use crate::g2::CrossStructure7;
use crate::multilinear::{wedge, AltForm, Matrix, Metric, Vector};

/// An element `re + im` of `ℝ ⊕ V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion {
    pub re: f64,
    pub im: Vector,
}

impl Octonion {
    /// # Panics
    /// If `im` is not 7-dimensional.
    pub fn new(re: f64, im: Vector) -> Self {
        assert_eq!(im.len(), 7, "imaginary part must be 7-dimensional");
        Octonion { re, im }
    }

    pub fn real(re: f64) -> Self {
        Octonion::new(re, Vector::zeros(7))
    }

    pub fn imaginary(im: Vector) -> Self {
        Octonion::new(0.0, im)
    }

    pub fn zero() -> Self {
        Octonion::real(0.0)
    }

    pub fn one() -> Self {
        Octonion::real(1.0)
    }

    /// The `i`-th basis element of ℝ⁸ (axis 0 is the unit).
    pub fn basis(i: usize) -> Self {
        Octonion::from_vector(&crate::multilinear::unit_vector(8, i)).expect("length 8")
    }

    /// Reads `(re, im)` from an 8-vector.
    pub fn from_vector(v: &Vector) -> Result<Self> {
        check_dim(8, v.len())?;
        Ok(Octonion::new(v[0], v.rows(1, 7).into_owned()))
    }

    /// Writes `(re, im)` into an 8-vector.
    pub fn to_vector(&self) -> Vector {
        let mut v = Vector::zeros(8);
        v[0] = self.re;
        v.rows_mut(1, 7).copy_from(&self.im);
        v
    }

    /// `ū = 2⟨u, 1⟩ − u`.
    pub fn conjugate(&self) -> Self {
        Octonion::new(self.re, -&self.im)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion::new(self.re + o.re, &self.im + &o.im)
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion::new(self.re - o.re, &self.im - &o.im)
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(self, o: Octonion) -> Octonion {
        &self + &o
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, o: Octonion) -> Octonion {
        &self - &o
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(-self.re, -&self.im)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        -&self
    }
}

impl Mul<f64> for &Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        Octonion::new(self.re * s, &self.im * s)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, s: f64) -> Octonion {
        &self * s
    }
}

/// Which of the two natural triple cross products to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TripleBranch {
    /// `½((uv̄)w − (wv̄)u)`, with self-dual calibration `e⁰∧φ + ψ`.
    #[default]
    Positive,
    /// `½(u(v̄w) − w(v̄u))`, with anti-self-dual calibration `e⁰∧φ − ψ`.
    Negative,
}

impl TripleBranch {
    /// `+1` or `−1`.
    pub fn sign(self) -> f64 {
        match self {
            TripleBranch::Positive => 1.0,
            TripleBranch::Negative => -1.0,
        }
    }
}

/// The normed algebra built from a cross product on its imaginary part.
#[derive(Clone, Debug)]
pub struct NormedAlgebra8 {
    base: CrossStructure7,
    metric: Metric,
}

impl NormedAlgebra8 {
    pub fn new(base: CrossStructure7) -> Self {
        let mut g = Matrix::identity(8, 8);
        g.view_mut((1, 1), (7, 7)).copy_from(base.metric().matrix());
        let metric = Metric::new(g).expect("block sum of positive-definite matrices");
        NormedAlgebra8 { base, metric }
    }

    /// The octonions: the algebra of the standard cross product on ℝ⁷.
    pub fn standard() -> Self {
        NormedAlgebra8::new(CrossStructure7::standard())
    }

    pub fn base(&self) -> &CrossStructure7 {
        &self.base
    }

    /// The metric `1 ⊕ g` on ℝ⁸.
    pub fn metric(&self) -> &Metric {
        &self.metric
    }

    pub fn inner(&self, a: &Octonion, b: &Octonion) -> f64 {
        a.re * b.re + self.base.metric().inner(&a.im, &b.im)
    }

    pub fn norm(&self, a: &Octonion) -> f64 {
        self.inner(a, a).max(0.0).sqrt()
    }

    /// `uv = u₀v₀ − ⟨u₁, v₁⟩ + u₀v₁ + v₀u₁ + u₁×v₁`.
    pub fn product(&self, a: &Octonion, b: &Octonion) -> Octonion {
        let g = self.base.metric();
        let cross = self.base.cross(&a.im, &b.im).expect("7-dimensional parts");
        Octonion::new(
            a.re * b.re - g.inner(&a.im, &b.im),
            &b.im * a.re + &a.im * b.re + cross,
        )
    }

    /// Triple cross product on the chosen branch.
    pub fn triple_cross(&self, u: &Octonion, v: &Octonion, w: &Octonion, branch: TripleBranch) -> Octonion {
        let vb = v.conjugate();
        let p = |a: &Octonion, b: &Octonion| self.product(a, b);
        let diff = match branch {
            TripleBranch::Positive => p(&p(u, &vb), w) - p(&p(w, &vb), u),
            TripleBranch::Negative => p(u, &p(&vb, w)) - p(w, &p(&vb, u)),
        };
        diff * 0.5
    }

    /// Fourfold cross product
    /// `¼((u×v×w)x̄ − (v×w×x)ū + (w×x×u)v̄ − (x×u×v)w̄)`.
    ///
    /// On the negative branch the conjugates multiply from the left,
    /// `¼(x̄(u×v×w) − ū(v×w×x) + v̄(w×x×u) − w̄(x×u×v))`; with the
    /// right-hand form the norm identity fails there.
    ///
    /// Either way the real part is the Cayley calibration of the branch
    /// evaluated on `(x, u, v, w)` and `|x×u×v×w| = |x∧u∧v∧w|`.
    pub fn fourfold_cross(
        &self,
        x: &Octonion,
        u: &Octonion,
        v: &Octonion,
        w: &Octonion,
        branch: TripleBranch,
    ) -> Octonion {
        let t = |a, b, c| self.triple_cross(a, b, c, branch);
        let p = |a: Octonion, b: &Octonion| match branch {
            TripleBranch::Positive => self.product(&a, &b.conjugate()),
            TripleBranch::Negative => self.product(&b.conjugate(), &a),
        };
        let sum = p(t(u, v, w), x) - p(t(v, w, x), u) + p(t(w, x, u), v) - p(t(x, u, v), w);
        sum * 0.25
    }

    /// The calibration `⟨x, u×v×w⟩` of the chosen branch as a 4-form on ℝ⁸.
    pub fn cayley_form(&self, branch: TripleBranch) -> AltForm {
        cayley_form_of(&self.base, branch)
    }
}

/// `e⁰∧φ + ψ` on `ℝ ⊕ V`, the Cayley calibration of the octonions built
/// from `s`.
pub fn cayley_from_g2(s: &CrossStructure7) -> AltForm {
    cayley_form_of(s, TripleBranch::Positive)
}

/// `e⁰∧φ ± ψ` on `ℝ ⊕ V`.
pub(crate) fn cayley_form_of(s: &CrossStructure7, branch: TripleBranch) -> AltForm {
    let e0 = AltForm::monomial(8, &[0], 1.0).expect("valid axis");
    let phi = s.phi().lift(8, 1);
    let psi = s.psi().lift(8, 1);
    wedge(&e0, &phi).expect("degrees fit") + psi * branch.sign()
}
