//! Fixtures shared by the criterion benchmarks in `benches/`.

use calibra_core::g2::{recover_metric_from_phi, standard_phi7, CrossStructure7};
use calibra_core::multilinear::{pullback, AltForm, Vector};
use calibra_core::sample::Sampler;
use calibra_core::spin7::{recover_metric_from_phi8, standard_phi8, CayleyStructure8};

/// Condition-number bound for the random frames the fixtures are transported by.
pub const MAX_COND: f64 = 5.0;

/// Inputs in general position: standard forms pulled back by a random
/// well-conditioned frame, plus a few random vectors and forms.
pub struct Fixtures {
    pub phi7: AltForm,
    pub phi8: AltForm,
    pub s7: CrossStructure7,
    pub s8: CayleyStructure8,
    pub vectors: Vec<Vector>,
    pub form2: AltForm,
    pub form4: AltForm,
}

impl Fixtures {
    pub fn new(seed: u64) -> Self {
        let mut rng = Sampler::new(seed);
        let phi7 = pullback(&standard_phi7(), &rng.gl(7, MAX_COND)).expect("square frame");
        let phi8 = pullback(&standard_phi8(), &rng.gl(8, MAX_COND)).expect("square frame");
        let s7 = recover_metric_from_phi(&phi7).expect("transported form is positive");
        let s8 = recover_metric_from_phi8(&phi8).expect("transported form is admissible");
        let vectors = (0..4).map(|_| rng.vector(8)).collect();
        Fixtures {
            phi7,
            phi8,
            s7,
            s8,
            vectors,
            form2: rng.form(8, 2),
            form4: rng.form(8, 4),
        }
    }
}
