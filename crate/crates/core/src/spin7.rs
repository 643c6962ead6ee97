//! Cayley forms and triple cross products on 8-dimensional spaces.
//!
//! A [`CayleyStructure8`] bundles a metric, an orientation and a compatible
//! 4-form Φ with `⟨x, u×v×w⟩ = Φ(x, u, v, w)`. The sign `eps` is `+1` when Φ
//! is self-dual (a positive structure) and `−1` when it is anti-self-dual.

use std::sync::OnceLock;

use crate::decomp::{project_onto_span, DecompReport};
use crate::error::{check_dim, Error, Result};
use crate::g2::{recover_metric_from_phi, standard_phi7, standard_psi7, CrossStructure7};
use crate::multilinear::{
    binomial, contract, contract_axis, eval, form_inner, form_norm, hodge, orthonormalize,
    pullback, unit_vector, volume_form, wedge, wedge_all, AltForm, Matrix, Metric, Orientation,
    Subspace, Vector,
};
use crate::octonion::{cayley_form_of, TripleBranch};
use crate::sample::Sampler;
use crate::tol;

const N: usize = 8;
const PAIRS: usize = 28;

/// The standard Cayley form `Φ₀ = e⁰∧φ₀ + ψ₀` on ℝ⁸ (14 terms).
pub fn standard_phi8() -> AltForm {
    let e0 = AltForm::monomial(N, &[0], 1.0).expect("valid axis");
    wedge(&e0, &standard_phi7().lift(N, 1)).expect("degrees fit") + standard_psi7().lift(N, 1)
}

/// Lexicographic position of the pair `{a, b}` (`a ≠ b`) with the sign of
/// `e_a ∧ e_b` relative to the sorted pair.
fn pair_index(a: usize, b: usize) -> (usize, f64) {
    let (lo, hi, s) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    // pairs (0,1), (0,2), …, (0,7), (1,2), …
    let pos = lo * (2 * N - lo - 1) / 2 + (hi - lo - 1);
    (pos, s)
}

/// Coordinates of `u∧v` in the lexicographic basis of 2-vectors.
pub fn bivector(u: &Vector, v: &Vector) -> Vector {
    let n = u.len();
    let mut out = Vector::zeros(binomial(n, 2));
    let mut p = 0;
    for a in 0..n {
        for b in a + 1..n {
            out[p] = u[a] * v[b] - u[b] * v[a];
            p += 1;
        }
    }
    out
}

/// `M_PQ`: top coefficient of `ι(e_b)ι(e_a)Φ ∧ ι(e_d)ι(e_c)Φ ∧ Φ` for
/// pairs `P = (a, b)`, `Q = (c, d)` in lexicographic order.
///
/// `(u∧v)ᵀ M (x∧y)` is then the top coefficient of
/// `ι(v)ι(u)Φ ∧ ι(y)ι(x)Φ ∧ Φ`.
pub fn pair_matrix(phi: &AltForm) -> Result<Matrix> {
    check_dim(N, phi.dim())?;
    check_dim(4, phi.degree())?;
    let mut omegas = Vec::with_capacity(PAIRS);
    for a in 0..N {
        let ia = contract_axis(a, phi)?;
        for b in a + 1..N {
            omegas.push(contract_axis(b, &ia)?);
        }
    }
    let mut m = Matrix::zeros(PAIRS, PAIRS);
    for p in 0..PAIRS {
        for q in p..PAIRS {
            let v = wedge_all(&[&omegas[p], &omegas[q], phi])?.top();
            m[(p, q)] = v;
            m[(q, p)] = v;
        }
    }
    Ok(m)
}

/// The 4-form together with a compatible metric, orientation and sign.
#[derive(Clone, Debug)]
pub struct CayleyStructure8 {
    metric: Metric,
    orientation: Orientation,
    phi: AltForm,
    eps: f64,
    /// `Φ(e_i, e_j, e_k, e_l)` at `512 i + 64 j + 8 k + l`.
    tensor: Vec<f64>,
    frame: OnceLock<Matrix>,
}

/// `ω_{u,v} = ι(v)ι(u)Φ` together with its generating pair.
#[derive(Clone, Debug, PartialEq)]
pub struct PairForm {
    pub u: Vector,
    pub v: Vector,
    pub omega: AltForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyKind {
    Cayley,
    Generic,
}

/// Result of [`CayleyStructure8::classify_cayley`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CayleyClassification {
    pub kind: CayleyKind,
    /// `1 − |Φ(x, u, v, w)|` on an orthonormal basis, clamped at 0.
    pub residual: f64,
    /// Norm of the part of `u×v×w` orthogonal to the subspace.
    pub closure_residual: f64,
}

/// Result of [`CayleyStructure8::instanton_residual`].
#[derive(Clone, Debug, PartialEq)]
pub struct InstantonCheck {
    /// `π₇(F) = ¼(F + *(Φ∧F))`.
    pub pi7: AltForm,
    /// `‖π₇(F)‖ / ‖F‖` (0 for `F = 0`).
    pub residual: f64,
    pub is_instanton: bool,
}

/// Reconstruction of the normed algebra with unit `e` from the triple
/// cross product.
#[derive(Clone, Debug)]
pub struct UnitReconstruction {
    e: Vector,
    eps: f64,
    /// `ι(e)Φ`.
    pub phi_e: AltForm,
    /// The 4-form with `Φ = e♭∧φ_e + ε ψ_e`.
    pub psi_e: AltForm,
    /// Orthonormal basis of `e⊥` as the columns of an 8×7 matrix.
    pub basis: Matrix,
    /// `φ_e` in that basis, certified as a 7-dimensional structure.
    pub slice: CrossStructure7,
    /// `‖Φ − (e♭∧φ_e + ε ψ_e)‖`.
    pub residual: f64,
    structure: CayleyStructure8,
}

impl UnitReconstruction {
    pub fn unit(&self) -> &Vector {
        &self.e
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    /// `uv = u×e×v + ⟨u, e⟩v + ⟨v, e⟩u − ⟨u, v⟩e`.
    pub fn product(&self, u: &Vector, v: &Vector) -> Result<Vector> {
        let c = &self.structure;
        let m = &c.metric;
        let t = c.triple_cross(u, &self.e, v)?;
        Ok(t + v * m.inner(u, &self.e) + u * m.inner(v, &self.e) - &self.e * m.inner(u, v))
    }
}

/// Outcome of [`check_condition_c`].
#[derive(Clone, Debug, PartialEq)]
pub struct ConditionReport {
    pub passed: bool,
    /// Whether every sampled pair gave a nonzero value of the same sign.
    pub nondegenerate: bool,
    /// Common sign of `ι(v)ι(u)Φ∧ι(v)ι(u)Φ∧Φ` (0 if inconsistent).
    pub sign: f64,
    pub trials: usize,
    /// Largest `σ₂/σ₁` of the pair of functionals that must be proportional.
    pub max_ratio: f64,
    /// Up to eight failing samples.
    pub witnesses: Vec<Witness>,
}

/// A sample that violates condition (C).
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    /// `"nondegeneracy"` or `"proportionality"`.
    pub part: &'static str,
    pub u: Vector,
    pub v: Vector,
    pub w: Option<Vector>,
    pub value: f64,
}

/// Checks condition (C) by seeded sampling.
///
/// (a) Nondegeneracy: `q(u, v) = ι(v)ι(u)Φ∧ι(v)ι(u)Φ∧Φ` is nonzero with a
/// consistent sign on all coordinate pairs and on `trials` random pairs.
/// (b) For each random pair `(u, v)` a vector `w` is drawn from the common
/// kernel of `x ↦ ι(w)…` constraints `(u∧v)ᵀM(u∧w) = 0 = (v∧u)ᵀM(v∧w)`;
/// the functionals `x ↦ (u∧w)ᵀM(u∧x)` and `x ↦ (v∧w)ᵀM(v∧x)` must then have
/// the same kernel, i.e. be proportional (`σ₂/σ₁ ≤ 1e-8`).
pub fn check_condition_c(phi: &AltForm, trials: usize, seed: u64) -> Result<ConditionReport> {
    let m = pair_matrix(phi)?;
    let scale = m.amax();
    let mut rng = Sampler::new(seed);
    let mut witnesses = Vec::new();
    let push = |w: Witness, list: &mut Vec<Witness>| {
        if list.len() < 8 {
            list.push(w);
        }
    };

    let q = |u: &Vector, v: &Vector| {
        let b = bivector(u, v);
        (b.dot(&(&m * &b)), b.norm_squared())
    };
    let mut pairs: Vec<(Vector, Vector)> = Vec::new();
    for a in 0..N {
        for b in a + 1..N {
            pairs.push((unit_vector(N, a), unit_vector(N, b)));
        }
    }
    let random_pairs: Vec<(Vector, Vector)> =
        (0..trials).map(|_| (rng.vector(N), rng.vector(N))).collect();
    pairs.extend(random_pairs.iter().cloned());

    let mut sign = 0.0;
    let mut nondegenerate = scale > 0.0;
    for (u, v) in &pairs {
        let (val, size) = q(u, v);
        let s = if val.abs() > tol::DEGENERATE * scale * size { val.signum() } else { 0.0 };
        if s == 0.0 || (sign != 0.0 && s != sign) {
            nondegenerate = false;
            push(
                Witness {
                    part: "nondegeneracy",
                    u: u.clone(),
                    v: v.clone(),
                    w: None,
                    value: val,
                },
                &mut witnesses,
            );
        } else if sign == 0.0 {
            sign = s;
        }
    }
    if !nondegenerate {
        return Ok(ConditionReport {
            passed: false,
            nondegenerate,
            sign: 0.0,
            trials,
            max_ratio: f64::NAN,
            witnesses,
        });
    }

    // row vector of x ↦ (a∧b)ᵀ M (a∧x)
    let functional = |a: &Vector, b: &Vector| -> Vector {
        let mb = &m * bivector(a, b);
        Vector::from_fn(N, |k, _| mb.dot(&bivector(a, &unit_vector(N, k))))
    };
    let mut max_ratio: f64 = 0.0;
    for (u, v) in &random_pairs {
        let c1 = functional(u, v);
        let c2 = functional(v, u);
        let cons = Matrix::from_rows(&[c1.transpose(), c2.transpose()]);
        let vt = cons.svd(false, true).v_t.expect("requested V");
        // project a random vector off the row space of the two constraints
        let mut w = rng.vector(N);
        for r in 0..vt.nrows() {
            let row = vt.row(r).transpose();
            w -= &row * row.dot(&w);
        }
        let l1 = functional(u, &w);
        let l2 = functional(v, &w);
        let pair = Matrix::from_rows(&[l1.transpose(), l2.transpose()]);
        let sv = pair.singular_values();
        let (s1, s2) = (sv.max(), sv.min());
        let ratio = if s1 > 0.0 { s2 / s1 } else { 1.0 };
        max_ratio = max_ratio.max(ratio);
        if !(ratio <= tol::CLASSIFY) {
            push(
                Witness {
                    part: "proportionality",
                    u: u.clone(),
                    v: v.clone(),
                    w: Some(w),
                    value: ratio,
                },
                &mut witnesses,
            );
        }
    }
    Ok(ConditionReport {
        passed: witnesses.is_empty(),
        nondegenerate,
        sign,
        trials,
        max_ratio,
        witnesses,
    })
}

/// Recovers the unique metric, orientation and sign compatible with a
/// Cayley form.
///
/// Normalised pair values `g₁(u,v;w,x)` give `|e_i|²` through
/// `det Λ_u(v,w)/√det A(u,v,w)` and off-diagonal entries through the
/// polarised formula; every entry is computed for all admissible auxiliary
/// choices and must agree. The result is rescaled so that
/// `ι(v)ι(u)Φ∧ι(v)ι(u)Φ∧Φ = 6|u∧v|² dvol` and finally certified.
pub fn recover_metric_from_phi8(phi: &AltForm) -> Result<CayleyStructure8> {
    let m = pair_matrix(phi)?;
    let scale = m.amax();
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(Error::NotNondegenerate);
    }
    let diag = m.diagonal();
    if diag.iter().any(|d| d.abs() <= tol::DEGENERATE * scale) {
        return Err(Error::NotNondegenerate);
    }
    let s = diag[0].signum();
    if diag.iter().any(|d| d.signum() != s) {
        return Err(Error::NotNondegenerate);
    }
    let g1 = |a: usize, b: usize, c: usize, d: usize| -> f64 {
        if a == b || c == d {
            return 0.0;
        }
        let (p, sp) = pair_index(a, b);
        let (q, sq) = pair_index(c, d);
        s * sp * sq * m[(p, q)] / 6.0
    };
    let det_a = |u: usize, v: usize, w: usize| -> f64 {
        let pairs = [(v, w), (w, u), (u, v)];
        let mut a = Matrix::zeros(3, 3);
        for (i, &(p0, p1)) in pairs.iter().enumerate() {
            for (j, &(q0, q1)) in pairs.iter().enumerate() {
                a[(i, j)] = g1(p0, p1, q0, q1);
            }
        }
        // positive definiteness of A via its leading minors
        let m1 = a[(0, 0)];
        let m2 = a[(0, 0)] * a[(1, 1)] - a[(0, 1)] * a[(1, 0)];
        let m3 = a.determinant();
        if m1 > 0.0 && m2 > 0.0 && m3 > 0.0 {
            m3
        } else {
            f64::NAN
        }
    };
    let inconsistent = |spread: f64| Error::RatioInconsistent { spread };

    let mut metric1 = Matrix::zeros(N, N);
    for i in 0..N {
        let mut vals = Vec::new();
        for j in (0..N).filter(|&j| j != i) {
            for k in (j + 1..N).filter(|&k| k != i) {
                let lam = g1(i, j, i, j) * g1(i, k, i, k) - g1(i, j, i, k).powi(2);
                let a = det_a(i, j, k);
                if !(lam > 0.0) || a.is_nan() {
                    return Err(inconsistent(f64::INFINITY));
                }
                vals.push(lam / a.sqrt());
            }
        }
        let (lo, hi, mean) = spread_stats(&vals);
        let spread = (hi - lo) / mean.abs();
        if !(spread <= tol::RATIO) {
            return Err(inconsistent(spread));
        }
        metric1[(i, i)] = mean;
    }
    for i in 0..N {
        for j in i + 1..N {
            let mut vals = Vec::new();
            for k in (0..N).filter(|&k| k != i && k != j) {
                let a = det_a(i, j, k);
                if a.is_nan() {
                    return Err(inconsistent(f64::INFINITY));
                }
                let num = g1(i, k, j, k) * g1(i, j, i, j) - g1(i, j, i, k) * g1(i, j, j, k);
                vals.push(num / a.sqrt());
            }
            let (lo, hi, mean) = spread_stats(&vals);
            let spread = (hi - lo) / (metric1[(i, i)] * metric1[(j, j)]).sqrt();
            if !(spread <= tol::RATIO) {
                return Err(inconsistent(spread));
            }
            metric1[(i, j)] = mean;
            metric1[(j, i)] = mean;
        }
    }
    let det1 = metric1.determinant();
    if !(det1 > 0.0) {
        return Err(Error::NotNondegenerate);
    }
    // dvol₁ = √det g₁ · e^{0…7} = μ(1)² Ω with Ω = ±e^{0…7}
    let mu1 = det1.powf(0.25);
    let lambda = mu1.powf(1.0 / 6.0);
    let metric = Metric::new(metric1 / (lambda * lambda)).map_err(|_| Error::NotNondegenerate)?;
    CayleyStructure8::certify(metric, Orientation::from_sign(N, s), phi.clone())
}

fn spread_stats(vals: &[f64]) -> (f64, f64, f64) {
    let lo = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    (lo, hi, mean)
}

/// Statistics from [`fuzz_phi_wedge_phi`].
#[derive(Clone, Debug, PartialEq)]
pub struct FuzzReport {
    pub samples: usize,
    /// How many samples passed the sampled nondegeneracy test.
    pub nondegenerate: usize,
    /// Smallest `|Φ∧Φ| / ‖Φ‖²` (Euclidean coefficient norm) among them.
    pub min_ratio: f64,
    /// Nondegenerate samples with `|Φ∧Φ| ≤ 1e-10 ‖Φ‖²`.
    pub candidates: Vec<AltForm>,
}

/// Searches for nondegenerate 4-forms with `Φ∧Φ = 0`.
///
/// Whether such forms exist is not known to this crate; the hook samples
/// perturbations `g*Φ₀ + δ·R` with random `g`, random `R` and a range of
/// `δ`, keeps those that pass the sampled nondegeneracy test and reports
/// any whose square (nearly) vanishes. It asserts nothing.
pub fn fuzz_phi_wedge_phi(samples: usize, seed: u64) -> FuzzReport {
    let mut rng = Sampler::new(seed);
    let base = standard_phi8();
    let mut report = FuzzReport {
        samples,
        nondegenerate: 0,
        min_ratio: f64::INFINITY,
        candidates: Vec::new(),
    };
    for _ in 0..samples {
        let g = rng.gl(N, 10.0);
        let delta = 10f64.powf(rng.uniform(-2.0, 1.0));
        let phi = pullback(&base, &g).expect("square matrix") + rng.form(N, 4) * delta;
        let ok = check_condition_c(&phi, 16, rng.uniform(0.0, 1e9) as u64)
            .map(|r| r.nondegenerate)
            .unwrap_or(false);
        if !ok {
            continue;
        }
        report.nondegenerate += 1;
        let sq = wedge(&phi, &phi).expect("degree 8").top();
        let ratio = sq.abs() / phi.coeff_norm().powi(2);
        report.min_ratio = report.min_ratio.min(ratio);
        if ratio <= 1e-10 {
            report.candidates.push(phi);
        }
    }
    report
}

fn tensor4(phi: &AltForm) -> Vec<f64> {
    let mut t = vec![0.0; N * N * N * N];
    for (idx, c) in phi.terms() {
        for perm in permutations4() {
            let p: Vec<usize> = perm.0.iter().map(|&k| idx[k]).collect();
            t[512 * p[0] + 64 * p[1] + 8 * p[2] + p[3]] = perm.1 * c;
        }
    }
    t
}

/// All 24 permutations of `0..4` with their signs.
fn permutations4() -> Vec<([usize; 4], f64)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if a == b || a == c || a == d || b == c || b == d || c == d {
                        continue;
                    }
                    let inversions = (0..4)
                        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
                        .filter(|&(i, j)| p[i] > p[j])
                        .count();
                    out.push((p, if inversions % 2 == 0 { 1.0 } else { -1.0 }));
                }
            }
        }
    }
    out
}

impl CayleyStructure8 {
    /// Checks `ι(v)ι(u)Φ∧ι(v)ι(u)Φ∧Φ = 6|u∧v|² dvol` for all pairs from
    /// `{e_i} ∪ {e_i + e_j}` (relative accuracy `1e-7`) and determines
    /// `eps` from the sign of `Φ∧Φ` against the orientation.
    pub fn certify(metric: Metric, orientation: Orientation, phi: AltForm) -> Result<Self> {
        check_dim(N, phi.dim())?;
        check_dim(4, phi.degree())?;
        metric.check_dim(N)?;
        check_dim(N, orientation.dim())?;
        let m = pair_matrix(&phi)?;
        let dvol = orientation.sign() * metric.det().sqrt();
        let g2 = crate::multilinear::compound(metric.matrix(), 2);
        let mut probes: Vec<Vector> = (0..N).map(|i| unit_vector(N, i)).collect();
        for i in 0..N {
            for j in i + 1..N {
                probes.push(unit_vector(N, i) + unit_vector(N, j));
            }
        }
        let mut worst: f64 = 0.0;
        let mut size: f64 = 0.0;
        for (a, u) in probes.iter().enumerate() {
            for v in &probes[a + 1..] {
                let b = bivector(u, v);
                let area = b.dot(&(&g2 * &b));
                let lhs = b.dot(&(&m * &b));
                worst = worst.max((lhs - 6.0 * dvol * area).abs());
                size = size.max((6.0 * dvol * area).abs());
            }
        }
        let residual = worst / size;
        if !(residual <= tol::RATIO) {
            return Err(Error::CompatibilityFailed { residual });
        }
        let sq = wedge(&phi, &phi)?.top() * orientation.sign();
        let eps = if sq >= 0.0 { 1.0 } else { -1.0 };
        let tensor = tensor4(&phi);
        Ok(CayleyStructure8 {
            metric,
            orientation,
            phi,
            eps,
            tensor,
            frame: OnceLock::new(),
        })
    }

    /// Identity metric, orientation `e^{0…7}`, `Φ₀`, `eps = +1`.
    pub fn standard() -> Self {
        CayleyStructure8::certify(Metric::identity(N), Orientation::standard(N), standard_phi8())
            .expect("standard structure is compatible")
    }

    /// The structure `e⁰∧φ ± ψ` on `ℝ ⊕ V` with the product metric and
    /// orientation.
    pub fn from_g2(s: &CrossStructure7, branch: TripleBranch) -> Result<Self> {
        let mut g = Matrix::identity(N, N);
        g.view_mut((1, 1), (7, 7)).copy_from(s.metric().matrix());
        let orientation = Orientation::from_sign(N, s.orientation().sign());
        CayleyStructure8::certify(Metric::new(g)?, orientation, cayley_form_of(s, branch))
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

    /// `+1` for self-dual Φ, `−1` for anti-self-dual Φ.
    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn hodge(&self, a: &AltForm) -> Result<AltForm> {
        hodge(a, &self.metric, &self.orientation)
    }

    pub fn volume(&self) -> AltForm {
        volume_form(&self.metric, &self.orientation)
    }

    fn check(&self, vs: &[&Vector]) -> Result<()> {
        vs.iter().try_for_each(|v| check_dim(N, v.len()))
    }

    /// `Φ(·, u, v, w)` as covector components.
    fn phi_uvw(&self, u: &Vector, v: &Vector, w: &Vector) -> Vector {
        let mut out = Vector::zeros(N);
        for a in 0..N {
            for b in 0..N {
                let ub = u[b];
                if ub == 0.0 {
                    continue;
                }
                for c in 0..N {
                    let uvc = ub * v[c];
                    if uvc == 0.0 {
                        continue;
                    }
                    let base = 512 * a + 64 * b + 8 * c;
                    let row = &self.tensor[base..base + 8];
                    out[a] += uvc * row.iter().zip(w.iter()).map(|(t, x)| t * x).sum::<f64>();
                }
            }
        }
        out
    }

    /// `Φ(x, u, v, w)`.
    pub fn phi_eval(&self, x: &Vector, u: &Vector, v: &Vector, w: &Vector) -> Result<f64> {
        self.check(&[x, u, v, w])?;
        Ok(self.phi_uvw(u, v, w).dot(x))
    }

    /// The triple cross product, `⟨x, u×v×w⟩ = Φ(x, u, v, w)`.
    pub fn triple_cross(&self, u: &Vector, v: &Vector, w: &Vector) -> Result<Vector> {
        self.check(&[u, v, w])?;
        Ok(self.metric.raise(&self.phi_uvw(u, v, w)))
    }

    /// `ω_{u,v} = ι(v)ι(u)Φ`.
    pub fn pair_form(&self, u: &Vector, v: &Vector) -> Result<PairForm> {
        let omega = contract(v, &contract(u, &self.phi)?)?;
        Ok(PairForm {
            u: u.clone(),
            v: v.clone(),
            omega,
        })
    }

    /// Classifies a 4-dimensional subspace as Cayley or generic.
    pub fn classify_cayley(&self, sub: &Subspace) -> Result<CayleyClassification> {
        check_dim(N, sub.ambient())?;
        if sub.dim() != 4 {
            return Err(Error::BadDimension(sub.dim()));
        }
        let q = orthonormalize(sub.basis(), &self.metric)?;
        let f = self.phi_eval(&q[0], &q[1], &q[2], &q[3])?;
        let residual = (1.0 - f.abs()).max(0.0);
        let t = self.triple_cross(&q[1], &q[2], &q[3])?;
        let mut perp = t.clone();
        for b in &q {
            perp -= b * self.metric.inner(b, &t);
        }
        let closure_residual = self.metric.norm(&perp);
        let kind = if residual <= tol::CLASSIFY {
            CayleyKind::Cayley
        } else {
            CayleyKind::Generic
        };
        Ok(CayleyClassification {
            kind,
            residual,
            closure_residual,
        })
    }

    /// `ω ↦ *(Φ∧ω)` on 2-forms.
    pub fn phi_action2(&self, w: &AltForm) -> Result<AltForm> {
        self.hodge(&wedge(&self.phi, w)?)
    }

    /// `π₇(ω) = ¼(ω + *(Φ∧ω))`.
    pub fn pi7(&self, w: &AltForm) -> Result<AltForm> {
        check_dim(N, w.dim())?;
        check_dim(2, w.degree())?;
        Ok((w + &self.phi_action2(w)?) * 0.25)
    }

    /// Splits a 2-form into its 7- and 21-dimensional components, the
    /// eigenspaces of `ω ↦ *(Φ∧ω)` for the eigenvalues 3 and −1.
    pub fn decompose2(&self, w: &AltForm) -> Result<DecompReport> {
        let w7 = self.pi7(w)?;
        let w21 = w - &w7;
        let r7 = form_norm(&(self.phi_action2(&w7)? - &w7 * 3.0), &self.metric);
        let r21 = form_norm(&(self.phi_action2(&w21)? + w21.clone()), &self.metric);
        Ok(DecompReport::assemble(
            w,
            vec![("7", w7, r7), ("21", w21, r21)],
            &self.metric,
        ))
    }

    /// The canonical frame: [`CayleyStructure8::frame`] of an admissible
    /// tuple obtained by Gram–Schmidt from the standard basis.
    pub fn canonical_frame(&self) -> &Matrix {
        self.frame.get_or_init(|| {
            let m = &self.metric;
            let pick = |span: &[Vector]| -> Vector {
                // the standard basis vector farthest from the span
                (0..N)
                    .map(|k| {
                        let mut v = unit_vector(N, k);
                        for q in span {
                            v -= q * m.inner(q, &v);
                        }
                        v
                    })
                    .max_by(|a, b| m.norm(a).total_cmp(&m.norm(b)))
                    .map(|v| {
                        let n = m.norm(&v);
                        v / n
                    })
                    .expect("nonempty")
            };
            let x = pick(&[]);
            let u = pick(std::slice::from_ref(&x));
            let v = pick(&[x.clone(), u.clone()]);
            let uvx = self.triple_cross(&u, &v, &x).expect("dimension 8");
            let w = pick(&[x.clone(), u.clone(), v.clone(), uvx]);
            self.frame(&u, &v, &w, &x).expect("tuple is admissible by construction")
        })
    }

    /// Spanning set of the 7-dimensional part of Λ⁴: the forms
    /// `e⁰∧ι(e_i)ψ₀ − ε e^i∧φ₀` transported by the canonical frame.
    pub fn lambda4_7_generators(&self) -> Result<Vec<AltForm>> {
        let g = self.canonical_frame();
        let ginv = g.clone().try_inverse().ok_or(Error::DegenerateMetric)?;
        let phi = standard_phi7().lift(N, 1);
        let psi = standard_psi7().lift(N, 1);
        let e0 = AltForm::monomial(N, &[0], 1.0)?;
        (1..N)
            .map(|i| {
                let a = wedge(&e0, &contract_axis(i, &psi)?)?;
                let b = wedge(&AltForm::monomial(N, &[i], 1.0)?, &phi)?;
                pullback(&(a - b * self.eps), &ginv)
            })
            .collect()
    }

    /// Splits a 4-form into components of dimensions 1, 7, 27 and 35.
    ///
    /// The 35-part is the half of `F` in the opposite `*`-eigenspace to Φ,
    /// the 1-part the projection onto Φ, the 7-part a least-squares fit
    /// over [`CayleyStructure8::lambda4_7_generators`] and the 27-part the
    /// remainder.
    pub fn decompose4(&self, f: &AltForm) -> Result<DecompReport> {
        check_dim(N, f.dim())?;
        check_dim(4, f.degree())?;
        let m = &self.metric;
        let star_f = self.hodge(f)?;
        let f35 = (f - &(&star_f * self.eps)) * 0.5;
        let phi_sq = form_inner(&self.phi, &self.phi, m)?;
        let f1 = &self.phi * (form_inner(f, &self.phi, m)? / phi_sq);
        let gens = self.lambda4_7_generators()?;
        let f7 = project_onto_span(f, &gens, m);
        let f27 = &(&(f - &f1) - &f7) - &f35;

        let anti = |a: &AltForm| -> Result<f64> { Ok(form_norm(&(self.hodge(a)? + a * self.eps), m)) };
        let same = |a: &AltForm| -> Result<f64> { Ok(form_norm(&(self.hodge(a)? - a * self.eps), m)) };
        let r1 = form_norm(&(&f1 - &(&self.phi * (form_inner(&f1, &self.phi, m)? / phi_sq))), m);
        let r7 = same(&f7)?.max(form_inner(&f7, &self.phi, m)?.abs() / phi_sq.sqrt());
        let r27 = same(&f27)?
            .max(form_inner(&f27, &self.phi, m)?.abs() / phi_sq.sqrt())
            .max(form_norm(&project_onto_span(&f27, &gens, m), m));
        let r35 = anti(&f35)?;
        Ok(DecompReport::assemble(
            f,
            vec![("1", f1, r1), ("7", f7, r7), ("27", f27, r27), ("35", f35, r35)],
            m,
        ))
    }

    /// Frame of an admissible tuple: `u, v, w, u×v×w, x` orthonormal.
    ///
    /// The first column is `x`; the others are the 7-dimensional frame
    /// `(u, v, u×v, w, w×u, w×v, w×(u×v))` for the cross product
    /// `a ×ₓ b = a×x×b` on `x⊥`. The matrix `g` satisfies
    /// `g*Φ = e⁰∧φ₀ + ε ψ₀`; for the standard structure `g*Φ₀ = Φ₀` and the
    /// tuple `(e₁, e₂, e₄, e₀)` gives the identity.
    pub fn frame(&self, u: &Vector, v: &Vector, w: &Vector, x: &Vector) -> Result<Matrix> {
        self.check(&[u, v, w, x])?;
        let m = &self.metric;
        let t = self.triple_cross(u, v, w)?;
        let vs = [("u", u), ("v", v), ("w", w), ("u×v×w", &t), ("x", x)];
        for (i, (a, va)) in vs.iter().enumerate() {
            let d = m.norm(va) - 1.0;
            if d.abs() > tol::ABS {
                return Err(Error::NotAdmissibleTuple(format!("|{a}| = 1 violated by {d:e}")));
            }
            for (b, vb) in &vs[i + 1..] {
                let d = m.inner(va, vb);
                if d.abs() > tol::ABS {
                    return Err(Error::NotAdmissibleTuple(format!("<{a},{b}> = 0 violated by {d:e}")));
                }
            }
        }
        let cx = |a: &Vector, b: &Vector| self.triple_cross(a, x, b);
        let uv = cx(u, v)?;
        let cols = [
            x.clone(),
            u.clone(),
            v.clone(),
            uv.clone(),
            w.clone(),
            cx(w, u)?,
            cx(w, v)?,
            cx(w, &uv)?,
        ];
        Ok(Matrix::from_columns(&cols))
    }

    /// Rebuilds the normed algebra with unit `e` (`|e| = 1`).
    pub fn unit_reconstruction(&self, e: &Vector) -> Result<UnitReconstruction> {
        self.check(&[e])?;
        let m = &self.metric;
        let norm = m.norm(e);
        if (norm - 1.0).abs() > tol::ABS {
            return Err(Error::NotUnit(norm));
        }
        let phi_e = contract(e, &self.phi)?;

        // ψ_e(u,v,w,x) = ⟨e×u×v, e×w×x⟩ − (u,w)(v,x) + (u,x)(v,w), where
        // (a,b) = ⟨a,b⟩ − ⟨a,e⟩⟨e,b⟩ is the inner product on e⊥
        let basis: Vec<Vector> = (0..N).map(|i| unit_vector(N, i)).collect();
        let mut cross = vec![vec![Vector::zeros(N); N]; N];
        for a in 0..N {
            for b in 0..N {
                cross[a][b] = self.triple_cross(e, &basis[a], &basis[b])?;
            }
        }
        let ep = m.lower(e);
        let perp = |a: usize, b: usize| m.matrix()[(a, b)] - ep[a] * ep[b];
        let mut dense = Vec::with_capacity(binomial(N, 4));
        for a in 0..N {
            for b in a + 1..N {
                for c in b + 1..N {
                    for d in c + 1..N {
                        let v = m.inner(&cross[a][b], &cross[c][d]) - perp(a, c) * perp(b, d)
                            + perp(a, d) * perp(b, c);
                        dense.push(v);
                    }
                }
            }
        }
        let psi_e = AltForm::from_dense(N, 4, &dense);
        let e_flat = AltForm::covector(&ep);
        let rebuilt = wedge(&e_flat, &phi_e)? + &psi_e * self.eps;
        let residual = form_norm(&(&self.phi - &rebuilt), m);

        // orthonormal basis of e⊥: drop the standard vector closest to e
        let drop = (0..N)
            .max_by(|&a, &b| ep[a].abs().total_cmp(&ep[b].abs()))
            .expect("nonempty");
        let mut vs = vec![e.clone()];
        vs.extend((0..N).filter(|&k| k != drop).map(|k| unit_vector(N, k)));
        let q = orthonormalize(&vs, m)?;
        // orthonormalize pivots, so locate e's direction and discard it
        let (pos, _) = q
            .iter()
            .enumerate()
            .map(|(i, qi)| (i, m.inner(qi, e).abs()))
            .fold((0, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        let cols: Vec<Vector> = q
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos)
            .map(|(_, v)| v.clone())
            .collect();
        let bmat = Matrix::from_columns(&cols);
        let mut dense7 = Vec::with_capacity(binomial(7, 3));
        for a in 0..7 {
            for b in a + 1..7 {
                for c in b + 1..7 {
                    dense7.push(eval(&phi_e, &[cols[a].clone(), cols[b].clone(), cols[c].clone()])?);
                }
            }
        }
        let slice = recover_metric_from_phi(&AltForm::from_dense(7, 3, &dense7))?;
        Ok(UnitReconstruction {
            e: e.clone(),
            eps: self.eps,
            phi_e,
            psi_e,
            basis: bmat,
            slice,
            residual,
            structure: self.clone(),
        })
    }

    /// `π₇(F)` and whether `F` satisfies the instanton equation
    /// `π₇(F) = 0` (to `1e-9` relative to `‖F‖`).
    pub fn instanton_residual(&self, f: &AltForm) -> Result<InstantonCheck> {
        let pi7 = self.pi7(f)?;
        let nf = form_norm(f, &self.metric);
        let np = form_norm(&pi7, &self.metric);
        let residual = if nf > 0.0 { np / nf } else { 0.0 };
        Ok(InstantonCheck {
            pi7,
            residual,
            is_instanton: residual <= tol::ABS,
        })
    }
}
