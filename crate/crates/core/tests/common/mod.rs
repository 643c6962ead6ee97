#![allow(dead_code)]

use calibra_core::multilinear::{unit_vector, AltForm, Matrix, Vector};

/// `ξ·a`, the derivative of `t ↦ exp(tξ)*a` at 0:
/// `(ξ·a)(v₁, …, v_k) = Σ_j a(v₁, …, ξv_j, …, v_k)`.
///
/// Written against the dense coefficient array by brute force, without the
/// library's pullback machinery.
pub fn derivation(xi: &Matrix, a: &AltForm) -> AltForm {
    let n = a.dim();
    let k = a.degree();
    let subsets = subsets(n, k);
    let mut out = vec![0.0; subsets.len()];
    for (p, idx) in subsets.iter().enumerate() {
        let mut total = 0.0;
        for slot in 0..k {
            for r in 0..n {
                let c = xi[(r, idx[slot])];
                if c == 0.0 {
                    continue;
                }
                let mut j = idx.clone();
                j[slot] = r;
                total += c * signed_coeff(a, &j);
            }
        }
        out[p] = total;
    }
    AltForm::from_dense(n, k, &out)
}

/// Coefficient `a(e_{j₁}, …, e_{j_k})` for an arbitrary index list.
pub fn signed_coeff(a: &AltForm, idx: &[usize]) -> f64 {
    let mut v = idx.to_vec();
    let mut sign = 1.0;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return 0.0;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return 0.0;
    }
    sign * a.coeff(&v)
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Elementary antisymmetric matrices `E_ab − E_ba`, a basis of so(n).
pub fn so_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(a, b)] = 1.0;
            m[(b, a)] = -1.0;
            out.push(m);
        }
    }
    out
}

/// Numerical rank of a set of forms (Euclidean coefficients).
pub fn rank(forms: &[AltForm], tol: f64) -> usize {
    if forms.is_empty() {
        return 0;
    }
    let rows = forms[0].to_dense().len();
    let mut m = Matrix::zeros(rows, forms.len());
    for (j, f) in forms.iter().enumerate() {
        m.set_column(j, &f.to_dense());
    }
    matrix_rank(&m, tol)
}

pub fn matrix_rank(m: &Matrix, tol: f64) -> usize {
    let sv = m.clone().singular_values();
    let top = sv.max();
    sv.iter().filter(|&&s| s > tol * top.max(1.0)).count()
}

pub fn e(n: usize, i: usize) -> Vector {
    unit_vector(n, i)
}

/// `max |a_ij − b_ij| / max(1, max |b_ij|)`.
pub fn rel_matrix_err(a: &Matrix, b: &Matrix) -> f64 {
    (a - b).amax() / b.amax().max(1.0)
}

pub fn max_abs(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(0.0, |acc, x| acc.max(x.abs()))
}
/// A form written with conventional axis labels: `terms` are
/// A form written with the paper's axis labels: `terms` are
/// `("123", 1.0)`-style strings of single digits, shifted down by `base`.
pub fn labelled(dim: usize, base: usize, terms: &[(&str, f64)]) -> AltForm {
    let mut out: Option<AltForm> = None;
    for (idx, c) in terms {
        let axes: Vec<usize> = idx.bytes().map(|b| (b - b'0') as usize - base).collect();
        let m = AltForm::monomial(dim, &axes, *c).expect("valid label");
        out = Some(match out {
            None => m,
            Some(acc) => acc + m,
        });
    }
    out.expect("at least one term")
}

/// The structure `g*φ₀` with its compatible metric `gᵀg` and orientation.
pub fn transported7(rng: &mut calibra_core::sample::Sampler, cond: f64) -> (Matrix, calibra_core::g2::CrossStructure7) {
    use calibra_core::g2::{standard_phi7, CrossStructure7};
    use calibra_core::multilinear::{pullback, Metric, Orientation};
    let g = rng.gl(7, cond);
    let s = CrossStructure7::certify(
        Metric::new(g.transpose() * &g).unwrap(),
        Orientation::from_sign(7, g.determinant()),
        pullback(&standard_phi7(), &g).unwrap(),
    )
    .unwrap();
    (g, s)
}

/// The structure `g*Φ₀` with its compatible metric `gᵀg` and orientation.
pub fn transported8(rng: &mut calibra_core::sample::Sampler, cond: f64) -> (Matrix, calibra_core::spin7::CayleyStructure8) {
    use calibra_core::multilinear::{pullback, Metric, Orientation};
    use calibra_core::spin7::{standard_phi8, CayleyStructure8};
    let g = rng.gl(8, cond);
    let c = CayleyStructure8::certify(
        Metric::new(g.transpose() * &g).unwrap(),
        Orientation::from_sign(8, g.determinant()),
        pullback(&standard_phi8(), &g).unwrap(),
    )
    .unwrap();
    (g, c)
}
