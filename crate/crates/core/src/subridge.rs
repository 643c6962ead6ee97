//! From complex structures to exceptional ones: an SU(3)-structure on `W`
//! gives a cross product on `ℝ ⊕ W`, an SU(4)-structure a Cayley form, and
//! a cross product on `V` a Cayley form on `ℝ ⊕ V`. Each bridge also
//! refines the form-type decompositions; the `*_membership` functions
//! check the explicit generator families against the projectors of
//! [`crate::g2`] and [`crate::spin7`].

use crate::decomp::project_onto_span;
use crate::error::{check_dim, Error, Result};
use crate::g2::CrossStructure7;
use crate::multilinear::{
    binomial, contract, contract_axis, form_inner, form_norm, hodge, pullback, unit_vector, wedge,
    wedge_all, AltForm, Matrix, Metric, Orientation, Vector,
};
use crate::octonion::TripleBranch;
use crate::spin7::CayleyStructure8;
use crate::tol;

/// Real and imaginary parts of `dz₁∧⋯∧dz_n` on `ℂⁿ = ℝ²ⁿ` with axes
/// `(x₁, y₁, x₂, y₂, …)`.
pub fn complex_volume(n: usize) -> (AltForm, AltForm) {
    let dim = 2 * n;
    let mut re = AltForm::zero(dim, n);
    let mut im = AltForm::zero(dim, n);
    for choice in 0..(1usize << n) {
        let idx: Vec<usize> = (0..n).map(|k| 2 * k + (choice >> k & 1)).collect();
        let ys = choice.count_ones() as usize;
        // i^ys
        let (target, sign) = match ys % 4 {
            0 => (&mut re, 1.0),
            1 => (&mut im, 1.0),
            2 => (&mut re, -1.0),
            _ => (&mut im, -1.0),
        };
        *target += &AltForm::monomial(dim, &idx, sign).expect("sorted axes");
    }
    (re, im)
}

/// `Σ dx_k∧dy_k` and `J∂x_k = ∂y_k` on `ℝ²ⁿ`.
fn standard_kahler(n: usize) -> (AltForm, Matrix) {
    let dim = 2 * n;
    let mut omega = AltForm::zero(dim, 2);
    let mut j = Matrix::zeros(dim, dim);
    for k in 0..n {
        omega += &AltForm::monomial(dim, &[2 * k, 2 * k + 1], 1.0).expect("valid axes");
        j[(2 * k + 1, 2 * k)] = 1.0;
        j[(2 * k, 2 * k + 1)] = -1.0;
    }
    (omega, j)
}

/// The matrix `W_ab = ω(e_a, e_b)`.
fn two_form_matrix(omega: &AltForm) -> Matrix {
    let n = omega.dim();
    let mut w = Matrix::zeros(n, n);
    for (idx, c) in omega.terms() {
        w[(idx[0], idx[1])] = c;
        w[(idx[1], idx[0])] = -c;
    }
    w
}

/// Shared validation of `(ω, J, θ)` on `ℝ²ⁿ`; returns the metric
/// `ω(·, J·)` and the orientation of `ωⁿ`.
fn validate(
    n: usize,
    omega: &AltForm,
    j: &Matrix,
    re: &AltForm,
    im: &AltForm,
) -> std::result::Result<(Metric, Orientation), String> {
    let dim = 2 * n;
    let shape = |f: &AltForm, k: usize, what: &str| {
        if f.dim() != dim || f.degree() != k {
            Err(format!("{what} must be a {k}-form on R^{dim}"))
        } else {
            Ok(())
        }
    };
    shape(omega, 2, "omega")?;
    shape(re, n, "Re theta")?;
    shape(im, n, "Im theta")?;
    if j.nrows() != dim || j.ncols() != dim {
        return Err(format!("J must be {dim}x{dim}"));
    }
    let scale = j.amax().max(1.0);
    let jj = j * j + Matrix::identity(dim, dim);
    if jj.amax() > tol::ABS * scale * scale {
        return Err(format!("J^2 = -1 violated by {:e}", jj.amax()));
    }
    let w = two_form_matrix(omega);
    let jinv = (j.transpose() * &w * j - &w).amax();
    if jinv > tol::ABS * w.amax().max(1.0) * scale * scale {
        return Err(format!("omega is not J-invariant (defect {jinv:e})"));
    }
    let g = &w * j;
    let metric = Metric::new(g).map_err(|_| "omega(., J.) is not positive definite".to_string())?;
    let top = (0..n)
        .try_fold(AltForm::scalar(dim, 1.0), |acc, _| wedge(&acc, omega))
        .map_err(|e| e.to_string())?
        .top();
    let orientation = Orientation::from_sign(dim, top);

    let norm_sq = form_norm(re, &metric).powi(2) + form_norm(im, &metric).powi(2);
    let expected = (1u64 << n) as f64;
    if (norm_sq - expected).abs() > tol::ABS * expected {
        return Err(format!("|theta|^2 = {norm_sq}, expected {expected}"));
    }
    for a in 0..dim {
        let x = unit_vector(dim, a);
        let jx = j * &x;
        let c = |v: &Vector, f: &AltForm| contract(v, f).map_err(|e| e.to_string());
        let d1 = (c(&jx, re)? + c(&x, im)?).sup_norm();
        let d2 = (c(&jx, im)? - c(&x, re)?).sup_norm();
        if d1.max(d2) > tol::ABS * scale {
            return Err(format!("theta is not of type ({n},0) (defect {:e})", d1.max(d2)));
        }
    }
    Ok((metric, orientation))
}

/// `(g*ω, g⁻¹Jg, g*θ)`.
fn transport(
    omega: &AltForm,
    j: &Matrix,
    re: &AltForm,
    im: &AltForm,
    h: &Matrix,
) -> Result<(AltForm, Matrix, AltForm, AltForm)> {
    let hinv = h.clone().try_inverse().ok_or(Error::DegenerateMetric)?;
    Ok((
        pullback(omega, h)?,
        &hinv * j * h,
        pullback(re, h)?,
        pullback(im, h)?,
    ))
}

/// An SU(3)-structure `(ω, J, θ)` on a 6-dimensional space.
#[derive(Clone, Debug)]
pub struct SU3Structure {
    omega: AltForm,
    j: Matrix,
    re_theta: AltForm,
    im_theta: AltForm,
    metric: Metric,
    orientation: Orientation,
}

/// An SU(4)-structure `(Ω, J, Θ)` on an 8-dimensional space.
#[derive(Clone, Debug)]
pub struct SU4Structure {
    omega: AltForm,
    j: Matrix,
    re_theta: AltForm,
    im_theta: AltForm,
    metric: Metric,
    orientation: Orientation,
}

macro_rules! su_structure {
    ($ty:ident, $n:expr, $err:ident) => {
        impl $ty {
            /// Validates `J² = −1`, `ω(J·, J·) = ω`, `ω(·, J·)` positive
            /// definite, `|θ|² = 2ⁿ` and that `θ` has type `(n, 0)`:
            /// `θ(Jx, ·) = iθ(x, ·)`.
            pub fn new(omega: AltForm, j: Matrix, re_theta: AltForm, im_theta: AltForm) -> Result<Self> {
                let (metric, orientation) =
                    validate($n, &omega, &j, &re_theta, &im_theta).map_err(Error::$err)?;
                Ok($ty {
                    omega,
                    j,
                    re_theta,
                    im_theta,
                    metric,
                    orientation,
                })
            }

            /// The flat structure on `ℂⁿ` with coordinates `(x₁, y₁, …)`.
            pub fn standard() -> Self {
                let (omega, j) = standard_kahler($n);
                let (re, im) = complex_volume($n);
                $ty::new(omega, j, re, im).expect("standard structure is valid")
            }

            /// The structure transported by a linear isomorphism `h`.
            pub fn pullback(&self, h: &Matrix) -> Result<Self> {
                check_dim(2 * $n, h.nrows())?;
                let (o, j, r, i) = transport(&self.omega, &self.j, &self.re_theta, &self.im_theta, h)?;
                $ty::new(o, j, r, i)
            }

            pub fn omega(&self) -> &AltForm {
                &self.omega
            }

            pub fn j(&self) -> &Matrix {
                &self.j
            }

            pub fn re_theta(&self) -> &AltForm {
                &self.re_theta
            }

            pub fn im_theta(&self) -> &AltForm {
                &self.im_theta
            }

            /// `ω(·, J·)`.
            pub fn metric(&self) -> &Metric {
                &self.metric
            }

            /// The complex orientation, that of `ωⁿ`.
            pub fn orientation(&self) -> &Orientation {
                &self.orientation
            }

            pub fn hodge(&self, a: &AltForm) -> Result<AltForm> {
                hodge(a, &self.metric, &self.orientation)
            }

            /// `τ ↦ τ(J·, J·, …)`.
            pub fn j_pullback(&self, a: &AltForm) -> Result<AltForm> {
                pullback(a, &self.j)
            }
        }
    };
}

su_structure!(SU3Structure, 3, InvalidSU3);
su_structure!(SU4Structure, 4, InvalidSU4);

impl SU3Structure {
    /// The cross product on `ℝ ⊕ W`:
    /// `v×w = (ω(v₁, w₁), v₀Jw₁ − w₀Jv₁ + v₁×_θ w₁)` with
    /// `⟨u, v×_θ w⟩ = Re θ(u, v, w)`.
    pub fn cross(&self, v: &Vector, w: &Vector) -> Result<Vector> {
        check_dim(7, v.len())?;
        check_dim(7, w.len())?;
        let (v0, v1) = (v[0], v.rows(1, 6).into_owned());
        let (w0, w1) = (w[0], w.rows(1, 6).into_owned());
        let alpha = contract(&w1, &contract(&v1, &self.re_theta)?)?.to_dense();
        let tail = &self.j * &w1 * v0 - &self.j * &v1 * w0 + self.metric.raise(&alpha);
        let mut out = Vector::zeros(7);
        out[0] = v1.dot(&(two_form_matrix(&self.omega) * &w1));
        out.rows_mut(1, 6).copy_from(&tail);
        Ok(out)
    }
}

/// The cross product on `ℝ ⊕ W` with calibration `φ = e⁰∧ω + Re θ`,
/// metric `1 ⊕ ω(·, J·)` and the orientation of `e⁰∧ω³`.
pub fn su3_to_cross(s: &SU3Structure) -> Result<CrossStructure7> {
    let e0 = AltForm::monomial(7, &[0], 1.0)?;
    let phi = wedge(&e0, &s.omega.lift(7, 1))? + s.re_theta.lift(7, 1);
    let mut g = Matrix::identity(7, 7);
    g.view_mut((1, 1), (6, 6)).copy_from(s.metric.matrix());
    let orientation = Orientation::from_sign(7, s.orientation.sign());
    CrossStructure7::certify(Metric::new(g)?, orientation, phi)
}

/// The Cayley structure `Φ = ½Ω∧Ω + Re Θ` with metric `Ω(·, J·)` and the
/// complex orientation.
pub fn su4_to_cayley(s: &SU4Structure) -> Result<CayleyStructure8> {
    let phi = wedge(&s.omega, &s.omega)? * 0.5 + s.re_theta.clone();
    CayleyStructure8::certify(s.metric.clone(), s.orientation.clone(), phi)
}

/// The axis map `(e₀, …, e₇) ↦ (∂x₁, ∂y₁, ∂x₂, ∂y₂, ∂x₃, −∂y₃, −∂x₄, ∂y₄)`,
/// which pulls the Cayley form of the standard SU(4)-structure back to
/// the standard one.
pub fn standard_su4_axis_map() -> Matrix {
    Matrix::from_diagonal(&Vector::from_vec(vec![1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, 1.0]))
}

/// Largest membership residual of one generator family.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyResidual {
    pub name: &'static str,
    /// Number of nonzero generators checked.
    pub samples: usize,
    /// `max ‖β − π(β)‖/‖β‖` over the family, `π` the claimed projector.
    pub max_residual: f64,
}

/// Per-family results of a membership check.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MembershipReport {
    pub families: Vec<FamilyResidual>,
}

impl MembershipReport {
    pub fn max_residual(&self) -> f64 {
        self.families.iter().map(|f| f.max_residual).fold(0.0, f64::max)
    }

    pub fn family(&self, name: &str) -> Option<&FamilyResidual> {
        self.families.iter().find(|f| f.name == name)
    }

    /// Runs `residual` over the nonzero members of `forms`.
    fn push<F>(&mut self, name: &'static str, forms: Vec<AltForm>, m: &Metric, residual: F) -> Result<()>
    where
        F: Fn(&AltForm) -> Result<f64>,
    {
        let mut max_residual: f64 = 0.0;
        let mut samples = 0;
        for f in forms {
            let n = form_norm(&f, m);
            if n <= 1e-12 {
                continue;
            }
            samples += 1;
            max_residual = max_residual.max(residual(&f)? / n);
        }
        self.families.push(FamilyResidual {
            name,
            samples,
            max_residual,
        });
        Ok(())
    }
}

fn basis_forms(dim: usize, k: usize) -> Vec<AltForm> {
    (0..binomial(dim, k))
        .map(|j| {
            let mut d = vec![0.0; binomial(dim, k)];
            d[j] = 1.0;
            AltForm::from_dense(dim, k, &d)
        })
        .collect()
}

/// Removes the component along `axis` (induced inner product).
fn remove_along(f: &AltForm, axis: &AltForm, m: &Metric) -> Result<AltForm> {
    let c = form_inner(f, axis, m)? / form_inner(axis, axis, m)?;
    Ok(f - &(axis * c))
}

/// Distance of `f` from a named decomposition component of itself.
fn off_component<'a, R>(report: R, label: &'static str, m: &'a Metric) -> impl Fn(&AltForm) -> Result<f64> + 'a
where
    R: Fn(&AltForm) -> Result<crate::DecompReport> + 'a,
{
    move |f| {
        let r = report(f)?;
        Ok(form_norm(&(f - r.form(label)), m))
    }
}

/// Checks the explicit descriptions of Λ²₇, Λ²₁₄, Λ³₇ and the four parts
/// of Λ³₂₇ on `ℝ ⊕ W` against the projectors of the bridged structure.
pub fn su3_membership(s: &SU3Structure) -> Result<MembershipReport> {
    let c = su3_to_cross(s)?;
    let m = c.metric();
    let e0 = AltForm::monomial(7, &[0], 1.0)?;
    let lift = |f: &AltForm| f.lift(7, 1);
    let omega = lift(&s.omega);
    let re = lift(&s.re_theta);
    let im = lift(&s.im_theta);
    let w_vectors: Vec<Vector> = (0..6).map(|i| unit_vector(6, i)).collect();
    let lifted = |u: &Vector| {
        let mut v = Vector::zeros(7);
        v.rows_mut(1, 6).copy_from(u);
        v
    };
    let ustar = |u: &Vector| lift(&AltForm::covector(&s.metric.lower(u)));
    let d2 = |f: &AltForm| c.decompose2(f);
    let d3 = |f: &AltForm| c.decompose3(f);
    let mut rep = MembershipReport::default();

    let mut l27 = vec![omega.clone()];
    for u in &w_vectors {
        l27.push(wedge(&e0, &ustar(u))? - contract(&lifted(u), &im)?);
    }
    rep.push("2-7", l27, m, off_component(d2, "7", m))?;

    // τ + e⁰∧*(τ∧Re θ): with Im θ = *Re θ one has ½*(ω∧ω∧α) = −α∘J, and
    // solving (τ + e⁰∧α)∧ψ = 0 gives α = +*(τ∧Re θ)
    let mut l214 = Vec::new();
    for tau in basis_forms(6, 2) {
        let tau = remove_along(&tau, &s.omega, &s.metric)?;
        let star = s.hodge(&wedge(&tau, &s.re_theta)?)?;
        l214.push(lift(&tau) + wedge(&e0, &lift(&star))?);
    }
    rep.push("2-14", l214, m, off_component(d2, "14", m))?;

    let mut l37 = vec![im.clone()];
    for u in &w_vectors {
        l37.push(wedge(&ustar(u), &omega)? - wedge(&e0, &contract(&lifted(u), &re)?)?);
    }
    rep.push("3-7", l37, m, off_component(d3, "7", m))?;

    let a = vec![re.clone() * 3.0 - wedge(&e0, &omega)? * 4.0];
    rep.push("3-27a", a, m, off_component(d3, "27", m))?;

    let mut b = Vec::new();
    for tau in basis_forms(6, 2) {
        let inv = (&tau + &s.j_pullback(&tau)?) * 0.5;
        let inv = remove_along(&inv, &s.omega, &s.metric)?;
        b.push(wedge(&e0, &lift(&inv))?);
    }
    rep.push("3-27b", b, m, off_component(d3, "27", m))?;

    let mut span = vec![s.re_theta.clone(), s.im_theta.clone()];
    for u in &w_vectors {
        span.push(wedge(&AltForm::covector(&s.metric.lower(u)), &s.omega)?);
    }
    let mut cc = Vec::new();
    for beta in basis_forms(6, 3) {
        let p = project_onto_span(&beta, &span, &s.metric);
        cc.push(lift(&(&beta - &p)));
    }
    rep.push("3-27c", cc, m, off_component(d3, "27", m))?;

    let mut d = Vec::new();
    for u in &w_vectors {
        d.push(wedge(&ustar(u), &omega)? + wedge(&e0, &contract(&lifted(u), &re)?)?);
    }
    rep.push("3-27d", d, m, off_component(d3, "27", m))?;
    Ok(rep)
}

/// Checks the explicit descriptions of Λ²₇ and Λ²₂₁ in terms of the
/// SU(4)-structure against the projectors of its Cayley form.
pub fn su4_membership(s: &SU4Structure) -> Result<MembershipReport> {
    let c = su4_to_cayley(s)?;
    let m = c.metric();
    let d2 = |f: &AltForm| c.decompose2(f);
    // T = *(Re Θ ∧ ·) has eigenvalues ±2 on J-anti-invariant 2-forms
    let t = |f: &AltForm| -> Result<AltForm> { s.hodge(&wedge(&s.re_theta, f)?) };
    let mut rep = MembershipReport::default();

    let mut plus = vec![s.omega.clone()];
    let mut minus = Vec::new();
    let mut invariant = Vec::new();
    for tau in basis_forms(8, 2) {
        let jt = s.j_pullback(&tau)?;
        let anti = (&tau - &jt) * 0.5;
        let ta = t(&anti)?;
        plus.push((&anti + &(&ta * 0.5)) * 0.5);
        minus.push((&anti - &(&ta * 0.5)) * 0.5);
        invariant.push(remove_along(&((&tau + &jt) * 0.5), &s.omega, m)?);
    }
    rep.push("2-7", plus, m, off_component(d2, "7", m))?;
    let mut l221 = invariant;
    l221.extend(minus);
    rep.push("2-21", l221, m, off_component(d2, "21", m))?;
    Ok(rep)
}

/// Checks the explicit descriptions of Λ²₇, Λ²₂₁, Λ³₈, Λ³₄₈, Λ⁴₇, Λ⁴₂₇
/// and Λ⁴₃₅ on `ℝ ⊕ V` for `Φ = e⁰∧φ + ψ`.
pub fn g2_membership(s: &CrossStructure7) -> Result<MembershipReport> {
    let c = CayleyStructure8::from_g2(s, TripleBranch::Positive)?;
    let m = c.metric();
    let e0 = AltForm::monomial(8, &[0], 1.0)?;
    let lift = |f: &AltForm| f.lift(8, 1);
    let star_v = |f: &AltForm| s.hodge(f);
    let v_vectors: Vec<Vector> = (0..7).map(|i| unit_vector(7, i)).collect();
    let d2 = |f: &AltForm| c.decompose2(f);
    let d4 = |f: &AltForm| c.decompose4(f);
    let mut rep = MembershipReport::default();

    let mut l27 = Vec::new();
    for u in &v_vectors {
        let tau = contract(u, s.phi())?;
        l27.push(wedge(&e0, &lift(&star_v(&wedge(s.psi(), &tau)?)?))? + lift(&tau) * 3.0);
    }
    rep.push("2-7", l27, m, off_component(d2, "7", m))?;

    let mut l221 = Vec::new();
    for tau in basis_forms(7, 2) {
        l221.push(wedge(&e0, &lift(&star_v(&wedge(s.psi(), &tau)?)?))? - lift(&tau));
    }
    rep.push("2-21", l221, m, off_component(d2, "21", m))?;

    // Λ³₈ = {ι(u)Φ}; Λ³₄₈ is its complement, cut out by Φ∧β = 0
    let gens: Vec<AltForm> = (0..8)
        .map(|i| contract_axis(i, c.phi()))
        .collect::<Result<_>>()?;
    let in8 = |f: &AltForm| -> Result<f64> { Ok(form_norm(&(f - &project_onto_span(f, &gens, m)), m)) };
    let in48 = |f: &AltForm| -> Result<f64> {
        let wedge_norm = form_norm(&wedge(c.phi(), f)?, m);
        Ok(wedge_norm.max(form_norm(&project_onto_span(f, &gens, m), m)))
    };
    let mut l38 = vec![lift(s.phi())];
    for u in &v_vectors {
        l38.push(lift(&contract(u, s.psi())?) - wedge(&e0, &lift(&contract(u, s.phi())?))?);
    }
    rep.push("3-8", l38, m, in8)?;

    let mut l348 = Vec::new();
    let b27: Vec<AltForm> = basis_forms(7, 3)
        .iter()
        .map(|b| Ok(s.decompose3(b)?.form("27").clone()))
        .collect::<Result<_>>()?;
    for b in &b27 {
        l348.push(lift(b));
    }
    for tau in basis_forms(7, 2) {
        let t14 = s.decompose2(&tau)?.form("14").clone();
        l348.push(wedge(&e0, &lift(&t14))?);
    }
    for u in &v_vectors {
        l348.push(lift(&contract(u, s.psi())?) * 3.0 + wedge(&e0, &lift(&contract(u, s.phi())?))? * 4.0);
    }
    rep.push("3-48", l348, m, in48)?;

    let mut l47 = Vec::new();
    for u in &v_vectors {
        let ustar = AltForm::covector(&s.metric().lower(u));
        l47.push(wedge(&e0, &lift(&contract(u, s.psi())?))? - lift(&wedge(&ustar, s.phi())?));
    }
    rep.push("4-7", l47, m, off_component(d4, "7", m))?;

    let mut l427 = Vec::new();
    for b in &b27 {
        l427.push(wedge(&e0, &lift(b))? + lift(&star_v(b)?));
    }
    rep.push("4-27", l427, m, off_component(d4, "27", m))?;

    let mut l435 = Vec::new();
    for b in basis_forms(7, 3) {
        l435.push(wedge(&e0, &lift(&b))? - lift(&star_v(&b)?));
    }
    rep.push("4-35", l435, m, off_component(d4, "35", m))?;
    Ok(rep)
}

/// `3φ∧ι(u)ψ + 4ψ∧ι(u)φ`, which vanishes for every `u`.
pub fn phi_psi_balance(s: &CrossStructure7, u: &Vector) -> Result<AltForm> {
    let a = wedge(s.phi(), &contract(u, s.psi())?)?;
    let b = wedge(s.psi(), &contract(u, s.phi())?)?;
    Ok(a * 3.0 + b * 4.0)
}

/// `(ι(u)Re θ)∧Re θ`, `u♭∧ω∧ω` and `*(Ju)♭` on `W`, for comparing the
/// constants relating them.
pub fn case_d_terms(s: &SU3Structure, u: &Vector) -> Result<(AltForm, AltForm, AltForm)> {
    check_dim(6, u.len())?;
    let lhs = wedge(&contract(u, &s.re_theta)?, &s.re_theta)?;
    let uw = wedge_all(&[&AltForm::covector(&s.metric.lower(u)), &s.omega, &s.omega])?;
    let ju = &s.j * u;
    let star_ju = s.hodge(&AltForm::covector(&s.metric.lower(&ju)))?;
    Ok((lhs, uw, star_ju))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_volume_of_c1() {
        let (re, im) = complex_volume(1);
        assert_eq!(re.coeff(&[0]), 1.0);
        assert_eq!(im.coeff(&[1]), 1.0);
    }

    #[test]
    fn complex_volume_of_c2() {
        // (dx1 + i dy1)(dx2 + i dy2)
        let (re, im) = complex_volume(2);
        assert_eq!(re.coeff(&[0, 2]), 1.0);
        assert_eq!(re.coeff(&[1, 3]), -1.0);
        assert_eq!(im.coeff(&[0, 3]), 1.0);
        assert_eq!(im.coeff(&[1, 2]), 1.0);
    }

    #[test]
    fn standard_structures_validate() {
        let s3 = SU3Structure::standard();
        assert_eq!(s3.metric().matrix(), &Matrix::identity(6, 6));
        let s4 = SU4Structure::standard();
        assert_eq!(s4.orientation().sign(), 1.0);
    }
}
