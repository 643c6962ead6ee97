//! The subcommands, as functions from parsed documents to reports.

use calibra_core::g2::{recover_metric_from_phi, standard_phi7, standard_psi7, CrossStructure7};
use calibra_core::multilinear::{eval, gram_volume, form_inner, AltForm, Matrix, Metric, Subspace, Vector};
use calibra_core::octonion::{NormedAlgebra8, Octonion};
use calibra_core::sample::Sampler;
use calibra_core::spin7::{recover_metric_from_phi8, standard_phi8, CayleyStructure8};
use calibra_core::DecompReport;
use serde_json::{json, Value};

use crate::doc::{FormDocument, VectorsDocument};
use crate::error::CliError;

/// Residual bound used by the verification suites (unit-norm inputs).
pub const SUITE_TOLERANCE: f64 = 1e-9;

pub const SUITES: &[&str] = &["octonion-norm", "cross-axioms", "brackets", "triple-cross", "pair-constants"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Standard {
    Phi7,
    Psi7,
    Phi8,
}

pub fn standard(which: Standard) -> FormDocument {
    let f = match which {
        Standard::Phi7 => standard_phi7(),
        Standard::Psi7 => standard_psi7(),
        Standard::Phi8 => standard_phi8(),
    };
    FormDocument::from_form(&f).expect("standard forms live in dimension 7 or 8")
}

/// A structure given by its calibration.
pub enum Structure {
    Seven(CrossStructure7),
    Eight(CayleyStructure8),
}

impl Structure {
    pub fn from_document(doc: &FormDocument) -> Result<Self, CliError> {
        let form = doc.to_form()?;
        match (form.dim(), form.degree()) {
            (7, 3) => Ok(Structure::Seven(recover_metric_from_phi(&form)?)),
            (8, 4) => Ok(Structure::Eight(recover_metric_from_phi8(&form)?)),
            (n, k) => Err(CliError::validation(
                "UnsupportedSignature",
                format!("no structure is carried by a {k}-form in dimension {n}"),
            )),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Structure::Seven(_) => 7,
            Structure::Eight(_) => 8,
        }
    }

    pub fn metric(&self) -> &Metric {
        match self {
            Structure::Seven(s) => s.metric(),
            Structure::Eight(c) => c.metric(),
        }
    }
}

fn matrix_json(m: &Matrix) -> Value {
    json!((0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect::<Vec<f64>>())
        .collect::<Vec<_>>())
}

pub fn recover(doc: &FormDocument) -> Result<Value, CliError> {
    Ok(match Structure::from_document(doc)? {
        Structure::Seven(s) => json!({
            "dim": 7,
            "metric": matrix_json(s.metric().matrix()),
            "orientation": s.orientation().sign(),
        }),
        Structure::Eight(c) => json!({
            "dim": 8,
            "metric": matrix_json(c.metric().matrix()),
            "orientation": c.orientation().sign(),
            "eps": c.eps(),
        }),
    })
}

pub fn classify(structure: &FormDocument, basis: &VectorsDocument) -> Result<Value, CliError> {
    let s = Structure::from_document(structure)?;
    let sub = Subspace::new(basis.to_vectors(s.dim())?)?;
    Ok(match s {
        Structure::Seven(s) => {
            let c = s.classify_subspace(&sub)?;
            json!({ "kind": format!("{:?}", c.kind), "residual": c.residual })
        }
        Structure::Eight(t) => {
            let c = t.classify_cayley(&sub)?;
            json!({
                "kind": format!("{:?}", c.kind),
                "residual": c.residual,
                "closure_residual": c.closure_residual,
            })
        }
    })
}

fn decomposition_json(r: &DecompReport, m: &Metric) -> Result<Value, CliError> {
    let mut components = Vec::new();
    for c in &r.components {
        components.push(json!({
            "label": c.label,
            "residual": c.residual,
            "norm": form_inner(&c.form, &c.form, m)?.sqrt(),
            "form": FormDocument::from_form(&c.form)?,
        }));
    }
    Ok(json!({
        "components": components,
        "reassembly_residual": r.reassembly_residual,
        "orthogonality_residual": r.orthogonality_residual,
        "max_residual": r.max_residual(),
    }))
}

pub fn decompose(structure: &FormDocument, form: &FormDocument) -> Result<Value, CliError> {
    let s = Structure::from_document(structure)?;
    let f = form.to_form()?;
    if f.dim() != s.dim() {
        return Err(calibra_core::Error::DimensionMismatch {
            expected: s.dim(),
            found: f.dim(),
        }
        .into());
    }
    let unsupported = |k: usize| {
        CliError::validation(
            "UnsupportedSignature",
            format!("no decomposition of {k}-forms in dimension {}", s.dim()),
        )
    };
    let report = match (&s, f.degree()) {
        (Structure::Seven(s), 2) => s.decompose2(&f)?,
        (Structure::Seven(s), 3) => s.decompose3(&f)?,
        (Structure::Eight(c), 2) => c.decompose2(&f)?,
        (Structure::Eight(c), 4) => c.decompose4(&f)?,
        (_, k) => return Err(unsupported(k)),
    };
    decomposition_json(&report, s.metric())
}

/// Result of a verification suite.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub max_residual: f64,
    pub payload: Value,
}

fn suite_payload(suite: &str, trials: usize, max_residual: f64) -> SuiteResult {
    SuiteResult {
        max_residual,
        payload: json!({
            "suite": suite,
            "trials": trials,
            "max_residual": max_residual,
            "tolerance": SUITE_TOLERANCE,
            "passed": max_residual <= SUITE_TOLERANCE,
        }),
    }
}

/// Runs a named property suite on unit-norm random inputs.
pub fn verify(structure: &FormDocument, suite: &str, seed: u64, trials: usize) -> Result<SuiteResult, CliError> {
    let s = Structure::from_document(structure)?;
    let mut rng = Sampler::new(seed);
    let m = s.metric().clone();
    let unit = |rng: &mut Sampler| rng.unit_vector(&m);
    let mut worst: f64 = 0.0;
    match (suite, &s) {
        ("octonion-norm", Structure::Seven(s7)) => {
            let alg = NormedAlgebra8::new(s7.clone());
            let am = alg.metric().clone();
            for _ in 0..trials {
                let u = Octonion::from_vector(&rng.unit_vector(&am))?;
                let v = Octonion::from_vector(&rng.unit_vector(&am))?;
                worst = worst.max((alg.norm(&alg.product(&u, &v)) - 1.0).abs());
            }
        }
        ("octonion-norm", Structure::Eight(c)) => {
            let e: Vector = c.canonical_frame().column(0).into_owned();
            let r = c.unit_reconstruction(&e)?;
            for _ in 0..trials {
                let (u, v) = (unit(&mut rng), unit(&mut rng));
                worst = worst.max((m.norm(&r.product(&u, &v)?) - 1.0).abs());
            }
        }
        ("cross-axioms", Structure::Seven(s7)) => {
            for _ in 0..trials {
                let (u, v) = (unit(&mut rng), unit(&mut rng));
                let x = s7.cross(&u, &v)?;
                let area = 1.0 - m.inner(&u, &v).powi(2);
                worst = worst
                    .max(m.inner(&x, &u).abs())
                    .max(m.inner(&x, &v).abs())
                    .max((m.inner(&x, &x) - area).abs());
            }
        }
        ("brackets", Structure::Seven(s7)) => {
            for _ in 0..trials {
                let vs: Vec<Vector> = (0..4).map(|_| unit(&mut rng)).collect();
                let a = s7.associator(&vs[0], &vs[1], &vs[2])?;
                let phi = s7.phi_eval(&vs[0], &vs[1], &vs[2])?;
                worst = worst.max((phi * phi + m.inner(&a, &a) - gram_volume(&vs[..3], &m)?).abs());
                let b = s7.coassociator(&vs[0], &vs[1], &vs[2], &vs[3])?;
                let psi = eval(s7.psi(), &vs)?;
                worst = worst.max((psi * psi + m.inner(&b, &b) - gram_volume(&vs, &m)?).abs());
            }
        }
        ("triple-cross", Structure::Eight(c)) => {
            for _ in 0..trials {
                let vs: Vec<Vector> = (0..3).map(|_| unit(&mut rng)).collect();
                let t = c.triple_cross(&vs[0], &vs[1], &vs[2])?;
                worst = worst.max((m.inner(&t, &t) - gram_volume(&vs, &m)?).abs());
                for v in &vs {
                    worst = worst.max(m.inner(&t, v).abs());
                }
            }
        }
        ("pair-constants", Structure::Eight(c)) => {
            for _ in 0..trials {
                let vs: Vec<Vector> = (0..4).map(|_| unit(&mut rng)).collect();
                let (u, v, x, y) = (&vs[0], &vs[1], &vs[2], &vs[3]);
                let q = m.inner(u, x) * m.inner(v, y) - m.inner(u, y) * m.inner(v, x);
                let lhs = form_inner(&c.pair_form(u, v)?.omega, &c.pair_form(x, y)?.omega, &m)?;
                worst = worst.max((lhs - 3.0 * q - 2.0 * c.phi_eval(u, v, x, y)?).abs());
            }
        }
        (name, s) if SUITES.contains(&name) => {
            return Err(CliError::validation(
                "UnsupportedSuite",
                format!("suite {name} does not apply in dimension {}", s.dim()),
            ))
        }
        (name, _) => {
            return Err(CliError::validation(
                "UnknownSuite",
                format!("unknown suite {name}; available: {}", SUITES.join(", ")),
            ))
        }
    }
    Ok(suite_payload(suite, trials, worst))
}

/// Parses a document of type `T` from JSON text.
pub fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    Ok(serde_json::from_str(text)?)
}

/// A zero form of the given shape, for tests and examples.
pub fn zero_document(dim: usize, degree: usize) -> Result<FormDocument, CliError> {
    FormDocument::from_form(&AltForm::zero(dim, degree))
}
