use super::blade::{self, contraction_sign, wedge_sign, Blade, MAX_DIM};
use super::metric::{compound, det_in_place};
use super::{AltForm, Matrix, Metric, Orientation, Vector};
use crate::error::{check_dim, Error, Result};
use crate::tol;

/// Exterior product `a ∧ b`.
pub fn wedge(a: &AltForm, b: &AltForm) -> Result<AltForm> {
    check_dim(a.dim(), b.dim())?;
    let degree = a.degree() + b.degree();
    if degree > a.dim() {
        return Err(Error::DegreeOverflow {
            degree,
            dim: a.dim(),
        });
    }
    let mut out = AltForm::zero(a.dim(), degree);
    for (ma, ca) in a.iter() {
        for (mb, cb) in b.iter() {
            let s = wedge_sign(ma, mb);
            if s != 0.0 {
                out.accumulate(Blade(ma | mb), s * ca * cb);
            }
        }
    }
    Ok(out)
}

/// Wedge of several forms, left to right.
pub fn wedge_all(forms: &[&AltForm]) -> Result<AltForm> {
    let (first, rest) = forms.split_first().expect("at least one form");
    rest.iter()
        .try_fold((*first).clone(), |acc, f| wedge(&acc, f))
}

/// Interior product `ι(u)a`, inserting `u` into the first slot.
pub fn contract(u: &Vector, a: &AltForm) -> Result<AltForm> {
    check_dim(a.dim(), u.len())?;
    if a.degree() == 0 {
        return Err(Error::DegreeUnderflow);
    }
    let mut out = AltForm::zero(a.dim(), a.degree() - 1);
    for (m, c) in a.iter() {
        let mut rest = m;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if u[i] != 0.0 {
                out.accumulate(Blade(m & !(1 << i)), contraction_sign(m, i) * u[i] * c);
            }
        }
    }
    Ok(out)
}

/// `ι(e_axis)a` for a standard basis vector.
pub fn contract_axis(axis: usize, a: &AltForm) -> Result<AltForm> {
    let mut e = Vector::zeros(a.dim());
    e[axis] = 1.0;
    contract(&e, a)
}

/// Metric volume form `dvol`, positive for the given orientation.
pub fn volume_form(m: &Metric, o: &Orientation) -> AltForm {
    AltForm::volume(m.dim()) * (o.sign() * m.det().sqrt())
}

/// Hodge star with the convention `a ∧ *b = ⟨a, b⟩ dvol`.
pub fn hodge(a: &AltForm, m: &Metric, o: &Orientation) -> Result<AltForm> {
    let n = a.dim();
    m.check_dim(n)?;
    check_dim(n, o.dim())?;
    let k = a.degree();
    // ⟨e^I, a⟩ for every basis k-form e^I
    let paired = m.form_gram(k) * a.to_dense();
    let scale = o.sign() * m.det().sqrt();
    let full: u16 = ((1u32 << n) - 1) as u16;
    let mut out = AltForm::zero(n, n - k);
    for (p, &mi) in blade::basis(n, k).iter().enumerate() {
        let c = paired[p];
        if c != 0.0 {
            let comp = full & !mi;
            out.accumulate(Blade(comp), scale * wedge_sign(mi, comp) * c);
        }
    }
    Ok(out)
}

/// Induced inner product of two forms of the same degree.
pub fn form_inner(a: &AltForm, b: &AltForm, m: &Metric) -> Result<f64> {
    check_dim(a.dim(), b.dim())?;
    m.check_dim(a.dim())?;
    if a.degree() != b.degree() {
        return Err(Error::DimensionMismatch {
            expected: a.degree(),
            found: b.degree(),
        });
    }
    Ok(a.to_dense().dot(&(m.form_gram(a.degree()) * b.to_dense())))
}

/// Induced norm of a form.
pub fn form_norm(a: &AltForm, m: &Metric) -> f64 {
    form_inner(a, a, m).map(|x| x.max(0.0).sqrt()).unwrap_or(f64::NAN)
}

/// Gram determinant `|v₁ ∧ … ∧ v_k|²` with respect to `m`.
pub fn gram_volume(vs: &[Vector], m: &Metric) -> Result<f64> {
    if vs.is_empty() || vs.len() > m.dim() {
        return Err(Error::DimensionMismatch {
            expected: m.dim(),
            found: vs.len(),
        });
    }
    for v in vs {
        m.check_dim(v.len())?;
    }
    let k = vs.len();
    let mut buf = [0.0; MAX_DIM * MAX_DIM];
    for i in 0..k {
        let gi = m.lower(&vs[i]);
        for j in 0..k {
            buf[i * k + j] = gi.dot(&vs[j]);
        }
    }
    Ok(det_in_place(&mut buf[..k * k], k))
}

/// Evaluates `a(v₁, …, v_k)`.
pub fn eval(a: &AltForm, vs: &[Vector]) -> Result<f64> {
    if vs.len() != a.degree() {
        return Err(Error::DimensionMismatch {
            expected: a.degree(),
            found: vs.len(),
        });
    }
    for v in vs {
        check_dim(a.dim(), v.len())?;
    }
    let k = vs.len();
    let mut buf = [0.0; MAX_DIM * MAX_DIM];
    let mut total = 0.0;
    for (m, c) in a.iter() {
        let mut p = 0;
        for i in (0..a.dim()).filter(|i| m & (1 << i) != 0) {
            for v in vs {
                buf[p] = v[i];
                p += 1;
            }
        }
        total += c * det_in_place(&mut buf[..k * k], k);
    }
    Ok(total)
}

/// Pullback `h*a`, i.e. `(h*a)(v₁, …) = a(h v₁, …)`.
pub fn pullback(a: &AltForm, h: &Matrix) -> Result<AltForm> {
    check_dim(a.dim(), h.nrows())?;
    check_dim(a.dim(), h.ncols())?;
    let c = compound(h, a.degree());
    let dense = c.transpose() * a.to_dense();
    Ok(AltForm::from_dense(a.dim(), a.degree(), dense.as_slice()))
}

/// `u♭ = ⟨u, ·⟩` as a 1-form.
pub fn flat(u: &Vector, m: &Metric) -> Result<AltForm> {
    m.check_dim(u.len())?;
    Ok(AltForm::covector(&m.lower(u)))
}

/// Orthonormalises a basis by modified Gram–Schmidt, always taking the
/// remaining vector of largest norm next.
///
/// Fails with [`Error::DependentBasis`] when a remaining vector collapses
/// below `1e-6` of its original norm.
pub fn orthonormalize(vs: &[Vector], m: &Metric) -> Result<Vec<Vector>> {
    for v in vs {
        m.check_dim(v.len())?;
    }
    let original: Vec<f64> = vs.iter().map(|v| m.norm(v)).collect();
    if original.iter().any(|&n| !(n > 0.0)) {
        return Err(Error::DependentBasis);
    }
    let mut rest: Vec<(Vector, f64)> = vs.iter().cloned().zip(original).collect();
    let mut out = Vec::with_capacity(vs.len());
    while !rest.is_empty() {
        let (pos, _) = rest
            .iter()
            .enumerate()
            .map(|(i, (v, n0))| (i, m.norm(v) / n0))
            .fold((0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
        let (v, n0) = rest.swap_remove(pos);
        let n = m.norm(&v);
        // a relative residual of 1e-6 corresponds to a normalised Gram
        // volume of 1e-12
        if n / n0 <= tol::PIVOT.sqrt() {
            return Err(Error::DependentBasis);
        }
        let q = v / n;
        for (w, _) in rest.iter_mut() {
            let c = m.inner(&q, w);
            *w -= &q * c;
        }
        out.push(q);
    }
    Ok(out)
}

/// Normalises each vector and returns the Gram volume of the result; used as
/// the scale-free independence test for subspace bases.
pub fn normalized_gram_volume(vs: &[Vector], m: &Metric) -> Result<f64> {
    let unit: Vec<Vector> = vs
        .iter()
        .map(|v| {
            let n = m.norm(v);
            if n > 0.0 {
                v / n
            } else {
                v.clone()
            }
        })
        .collect();
    gram_volume(&unit, m)
}

/// Standard basis vector `e_i` of ℝⁿ.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut e = Vector::zeros(n);
    e[i] = 1.0;
    e
}
