//! Reports for representation-type splittings of forms, and the small
//! amount of linear algebra shared by the decomposition routines.

use crate::multilinear::{binomial, form_inner, form_norm, AltForm, Matrix, Metric, Vector};

/// One summand of a decomposition.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    /// Name of the component, e.g. `"7"` or `"27"`.
    pub label: &'static str,
    pub form: AltForm,
    /// Defining-property residual of this component at unit input scale
    /// (eigenvalue equation, wedge conditions, …).
    pub residual: f64,
}

/// Result of splitting a form into components.
///
/// All residuals are reported at unit scale: the input is treated as if it
/// had been normalised to unit sup-norm.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompReport {
    pub components: Vec<Component>,
    /// `‖Σ components − input‖` at unit scale.
    pub reassembly_residual: f64,
    /// Largest `|⟨a, b⟩|` over distinct pairs of components, at unit scale.
    pub orthogonality_residual: f64,
}

impl DecompReport {
    /// Builds the report from raw (unscaled) component residuals.
    pub(crate) fn assemble(input: &AltForm, parts: Vec<(&'static str, AltForm, f64)>, m: &Metric) -> Self {
        let scale = input_scale(input);
        let mut sum = AltForm::zero(input.dim(), input.degree());
        for (_, f, _) in &parts {
            sum += f;
        }
        let reassembly_residual = form_norm(&(&sum - input), m) / scale;
        let mut orthogonality_residual: f64 = 0.0;
        for (i, (_, a, _)) in parts.iter().enumerate() {
            for (_, b, _) in &parts[i + 1..] {
                let ip = form_inner(a, b, m).expect("components share a shape");
                orthogonality_residual = orthogonality_residual.max(ip.abs() / (scale * scale));
            }
        }
        let components = parts
            .into_iter()
            .map(|(label, form, r)| Component {
                label,
                form,
                residual: r / scale,
            })
            .collect();
        DecompReport {
            components,
            reassembly_residual,
            orthogonality_residual,
        }
    }

    /// Looks up a component by label.
    pub fn component(&self, label: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.label == label)
    }

    /// The form of the named component.
    ///
    /// # Panics
    /// If no component has that label.
    pub fn form(&self, label: &str) -> &AltForm {
        &self
            .component(label)
            .unwrap_or_else(|| panic!("no component labelled {label}"))
            .form
    }

    /// Largest of all reported residuals.
    pub fn max_residual(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c.residual)
            .fold(self.reassembly_residual.max(self.orthogonality_residual), f64::max)
    }
}

/// Sup-norm of the input, or 1 for the zero form.
pub(crate) fn input_scale(f: &AltForm) -> f64 {
    let s = f.sup_norm();
    if s > 0.0 {
        s
    } else {
        1.0
    }
}

/// Orthogonal projection of `b` onto the span of `gens` in the induced
/// inner product (least squares; tolerant of redundant generators).
pub(crate) fn project_onto_span(b: &AltForm, gens: &[AltForm], m: &Metric) -> AltForm {
    let k = gens.len();
    let mut gram = Matrix::zeros(k, k);
    let mut rhs = Vector::zeros(k);
    for i in 0..k {
        for j in i..k {
            let v = form_inner(&gens[i], &gens[j], m).expect("generator shape");
            gram[(i, j)] = v;
            gram[(j, i)] = v;
        }
        rhs[i] = form_inner(&gens[i], b, m).expect("generator shape");
    }
    let eps = 1e-12 * gram.amax().max(f64::MIN_POSITIVE);
    let coef = gram
        .svd(true, true)
        .solve(&rhs, eps)
        .expect("SVD with both factors");
    let mut out = AltForm::zero(b.dim(), b.degree());
    for (g, &c) in gens.iter().zip(coef.iter()) {
        out += &(g * c);
    }
    out
}

/// Matrix of a linear map on k-forms of ℝⁿ in the lexicographic coefficient
/// basis: column `j` holds the coefficients of `f(e^{I_j})`, and `f` must
/// return forms of degree `out_degree`.
pub fn operator_matrix<F>(dim: usize, degree: usize, out_degree: usize, f: F) -> Matrix
where
    F: Fn(&AltForm) -> AltForm,
{
    let cols = binomial(dim, degree);
    let rows = binomial(dim, out_degree);
    let mut mat = Matrix::zeros(rows, cols);
    for j in 0..cols {
        let mut unit = vec![0.0; cols];
        unit[j] = 1.0;
        let image = f(&AltForm::from_dense(dim, degree, &unit));
        mat.set_column(j, &image.to_dense());
    }
    mat
}
