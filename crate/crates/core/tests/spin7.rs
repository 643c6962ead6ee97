mod common;

use calibra_core::decomp::operator_matrix;
use calibra_core::g2::{standard_phi7, standard_psi7, CrossStructure7};
use calibra_core::multilinear::{
    binomial, contract, form_inner, form_norm, gram_volume, pullback, volume_form, wedge, AltForm,
    Matrix, Metric, Orientation, Subspace, Vector,
};
use calibra_core::octonion::{NormedAlgebra8, Octonion, TripleBranch};
use calibra_core::sample::Sampler;
use calibra_core::spin7::{
    bivector, check_condition_c, fuzz_phi_wedge_phi, pair_matrix, recover_metric_from_phi8,
    standard_phi8, CayleyKind, CayleyStructure8,
};
use calibra_core::Error;
use common::{derivation, e, labelled, rank, rel_matrix_err, so_basis, subsets, transported8};
use nalgebra::SymmetricEigen;
use proptest::prelude::*;

const PHI0: [(&str, f64); 14] = [
    ("0123", 1.0),
    ("0145", -1.0),
    ("0167", -1.0),
    ("0246", -1.0),
    ("0257", 1.0),
    ("0347", -1.0),
    ("0356", -1.0),
    ("4567", 1.0),
    ("2367", -1.0),
    ("2345", -1.0),
    ("1357", -1.0),
    ("1346", 1.0),
    ("1256", -1.0),
    ("1247", -1.0),
];

fn anti_self_dual() -> AltForm {
    let e0 = AltForm::monomial(8, &[0], 1.0).unwrap();
    wedge(&e0, &standard_phi7().lift(8, 1)).unwrap() - standard_psi7().lift(8, 1)
}

#[test]
fn standard_form_matches_the_published_table() {
    assert_eq!(standard_phi8(), labelled(8, 0, &PHI0));
    let e0 = AltForm::monomial(8, &[0], 1.0).unwrap();
    let split = wedge(&e0, &standard_phi7().lift(8, 1)).unwrap() + standard_psi7().lift(8, 1);
    assert_eq!(standard_phi8(), split);
}

#[test]
fn square_of_standard_form_is_fourteen_volumes() {
    let phi = standard_phi8();
    assert_eq!(wedge(&phi, &phi).unwrap(), AltForm::volume(8) * 14.0);
}

#[test]
fn standard_form_is_self_dual() {
    let c = CayleyStructure8::standard();
    assert_eq!(c.hodge(c.phi()).unwrap(), *c.phi());
    assert_eq!(c.eps(), 1.0);
}

#[test]
fn recovery_round_trip() {
    let mut rng = Sampler::new(1);
    for _ in 0..20 {
        let g = rng.gl(8, 10.0);
        let c = recover_metric_from_phi8(&pullback(&standard_phi8(), &g).unwrap()).unwrap();
        assert!(rel_matrix_err(c.metric().matrix(), &(g.transpose() * &g)) < 1e-8);
        assert_eq!(c.eps(), 1.0);
        assert_eq!(c.orientation().sign(), g.determinant().signum());
    }
}

#[test]
fn anti_self_dual_form_recovers_identity() {
    let c = recover_metric_from_phi8(&anti_self_dual()).unwrap();
    assert!((c.metric().matrix() - Matrix::identity(8, 8)).amax() < 1e-12);
    assert_eq!(c.eps(), -1.0);
    assert_eq!(c.hodge(c.phi()).unwrap(), -c.phi().clone());
}

#[test]
fn scaled_form_recovers_scaled_metric() {
    // (cΦ₀) is compatible with c^{1/2} times the identity
    for c in [0.25, 2.0, 9.0] {
        let s = recover_metric_from_phi8(&(standard_phi8() * c)).unwrap();
        assert!((s.metric().matrix() - Matrix::identity(8, 8) * c.sqrt()).amax() < 1e-10);
    }
}

#[test]
fn perturbed_coefficients_are_rejected() {
    for (idx, _) in PHI0 {
        let mut phi = standard_phi8();
        let axes: Vec<usize> = idx.bytes().map(|b| (b - b'0') as usize).collect();
        phi += &AltForm::monomial(8, &axes, 0.5).unwrap();
        let cond = check_condition_c(&phi, 32, 7).unwrap();
        let recovered = recover_metric_from_phi8(&phi);
        assert!(!cond.passed || recovered.is_err(), "perturbing {idx} went unnoticed");
        assert!(recovered.is_err());
    }
}

#[test]
fn degenerate_and_generic_forms_are_rejected() {
    assert!(matches!(
        recover_metric_from_phi8(&AltForm::zero(8, 4)),
        Err(Error::NotNondegenerate)
    ));
    let mut rng = Sampler::new(2);
    assert!(recover_metric_from_phi8(&rng.form(8, 4)).is_err());
    assert!(matches!(
        recover_metric_from_phi8(&rng.form(7, 4)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn certify_rejects_an_incompatible_metric() {
    let g = Metric::new(Matrix::identity(8, 8) * 3.0).unwrap();
    assert!(matches!(
        CayleyStructure8::certify(g, Orientation::standard(8), standard_phi8()),
        Err(Error::CompatibilityFailed { .. })
    ));
}

#[test]
fn condition_c_holds_for_cayley_forms() {
    let mut rng = Sampler::new(3);
    for _ in 0..5 {
        let (_, c) = transported8(&mut rng, 5.0);
        let r = check_condition_c(c.phi(), 64, 11).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.max_ratio < 1e-8);
    }
    assert!(check_condition_c(&anti_self_dual(), 64, 5).unwrap().passed);
    let r = check_condition_c(&rng.form(8, 4), 64, 5).unwrap();
    assert!(!r.passed);
    assert!(!r.witnesses.is_empty() && r.witnesses.len() <= 8);
}

#[test]
fn triple_cross_product_axioms() {
    let mut rng = Sampler::new(4);
    for _ in 0..10 {
        let (_, c) = transported8(&mut rng, 5.0);
        let m = c.metric().clone();
        for _ in 0..50 {
            let (u, v, w) = (rng.vector(8), rng.vector(8), rng.vector(8));
            let t = c.triple_cross(&u, &v, &w).unwrap();
            let vol = gram_volume(&[u.clone(), v.clone(), w.clone()], &m).unwrap();
            assert!((m.inner(&t, &t) - vol).abs() < 1e-9 * vol.max(1.0));
            for a in [&u, &v, &w] {
                assert!(m.inner(&t, a).abs() < 1e-9 * vol.sqrt().max(1.0) * m.norm(a));
            }
            // u×v×(u×v×w) + |u∧v|²w = (|v|²⟨u,w⟩ − ⟨u,v⟩⟨v,w⟩)u + (|u|²⟨v,w⟩ − ⟨v,u⟩⟨u,w⟩)v
            let ip = |a: &Vector, b: &Vector| m.inner(a, b);
            let uv2 = ip(&u, &u) * ip(&v, &v) - ip(&u, &v).powi(2);
            let lhs = c.triple_cross(&u, &v, &t).unwrap() + &w * uv2;
            let rhs = &u * (ip(&v, &v) * ip(&u, &w) - ip(&u, &v) * ip(&v, &w))
                + &v * (ip(&u, &u) * ip(&v, &w) - ip(&v, &u) * ip(&u, &w));
            let scale = (m.norm(&u) * m.norm(&v)).powi(2) * m.norm(&w);
            assert!(m.norm(&(lhs - rhs)) < 1e-9 * scale.max(1.0));
        }
    }
}

#[test]
fn sign_of_the_double_product_matches_eps() {
    // e×u×(e×v×w) = ε|e|² u×v×w for e,u,v orthonormal, w ⟂ e,u,v,e×u×v
    let mut rng = Sampler::new(5);
    for phi in [standard_phi8(), anti_self_dual()] {
        let c = recover_metric_from_phi8(&phi).unwrap();
        let m = c.metric();
        for _ in 0..100 {
            let q = rng.orthonormal(3, m);
            let euv = c.triple_cross(&q[0], &q[1], &q[2]).unwrap();
            let w = rng.unit_orthogonal_to(&[q[0].clone(), q[1].clone(), q[2].clone(), euv], m);
            let lhs = c.triple_cross(&q[0], &q[1], &c.triple_cross(&q[0], &q[2], &w).unwrap()).unwrap();
            let rhs = c.triple_cross(&q[1], &q[2], &w).unwrap() * c.eps();
            assert!((lhs - rhs).amax() < 1e-12);
        }
    }
}

fn phi_matrix(c: &CayleyStructure8) -> Matrix {
    let pairs = subsets(8, 2);
    Matrix::from_fn(28, 28, |p, q| {
        let (a, b) = (&pairs[p], &pairs[q]);
        c.phi_eval(&e(8, a[0]), &e(8, a[1]), &e(8, b[0]), &e(8, b[1])).unwrap()
    })
}

#[test]
fn pair_products_split_into_metric_and_calibration_parts() {
    let mut rng = Sampler::new(6);
    let (_, c) = transported8(&mut rng, 5.0);
    let m = c.metric().clone();
    let dvol = volume_form(&m, c.orientation()).top();
    let ip = |a: &Vector, b: &Vector| m.inner(a, b);
    for _ in 0..1000 {
        let (u, v, x, y) = (rng.vector(8), rng.vector(8), rng.vector(8), rng.vector(8));
        let det = ip(&u, &x) * ip(&v, &y) - ip(&u, &y) * ip(&v, &x);
        let phi = c.phi_eval(&u, &v, &x, &y).unwrap();
        let wuv = c.pair_form(&u, &v).unwrap().omega;
        let wxy = c.pair_form(&x, &y).unwrap().omega;
        let scale = (m.norm(&u) * m.norm(&v) * m.norm(&x) * m.norm(&y)).max(1.0);
        let inner = form_inner(&wuv, &wxy, &m).unwrap();
        assert!((inner - (3.0 * det + 2.0 * phi)).abs() < 1e-9 * scale);
        let top = calibra_core::multilinear::wedge_all(&[&wuv, &wxy, c.phi()]).unwrap().top() / dvol;
        assert!((top - (6.0 * det + 7.0 * phi)).abs() < 1e-9 * scale);
    }
}

#[test]
fn pair_matrix_is_six_compound_plus_seven_calibration() {
    let mut rng = Sampler::new(7);
    let (g, _) = transported8(&mut rng, 5.0);
    let phi = pullback(&standard_phi8(), &g).unwrap();
    let c = recover_metric_from_phi8(&phi).unwrap();
    let dvol = volume_form(c.metric(), c.orientation()).top();
    let gm = c.metric().matrix();
    let pairs = subsets(8, 2);
    let compound = Matrix::from_fn(28, 28, |p, q| {
        let (a, b) = (&pairs[p], &pairs[q]);
        gm[(a[0], b[0])] * gm[(a[1], b[1])] - gm[(a[0], b[1])] * gm[(a[1], b[0])]
    });
    let expect = (compound * 6.0 + phi_matrix(&c) * 7.0) * dvol;
    assert!(rel_matrix_err(&pair_matrix(&phi).unwrap(), &expect) < 1e-9);
}

#[test]
fn bivector_matches_wedge_coordinates() {
    let mut rng = Sampler::new(8);
    let (u, v) = (rng.vector(8), rng.vector(8));
    let w = wedge(&AltForm::covector(&u), &AltForm::covector(&v)).unwrap();
    assert!((bivector(&u, &v) - w.to_dense()).amax() < 1e-14);
}

fn spectrum(mat: &Matrix) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new((mat + mat.transpose()) * 0.5)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn two_form_operator_has_eigenvalues_three_and_minus_one() {
    for c in [CayleyStructure8::standard(), recover_metric_from_phi8(&anti_self_dual()).unwrap()] {
        let op = operator_matrix(8, 2, 2, |w| c.phi_action2(w).unwrap());
        assert!((&op - op.transpose()).amax() < 1e-12);
        let ev = spectrum(&op);
        assert!(ev[..21].iter().all(|x| (x + 1.0).abs() < 1e-12));
        assert!(ev[21..].iter().all(|x| (x - 3.0).abs() < 1e-12));
        let p7 = operator_matrix(8, 2, 2, |w| c.pi7(w).unwrap());
        assert!((&p7 * &p7 - &p7).amax() < 1e-12);
        let p21 = Matrix::identity(28, 28) - &p7;
        assert!((&p7 * &p21).amax() < 1e-12);
    }
}

#[test]
fn twenty_one_part_is_the_stabiliser_algebra() {
    let c = CayleyStructure8::standard();
    let basis = so_basis(8);
    let mut a = Matrix::zeros(70, 28);
    for (j, xi) in basis.iter().enumerate() {
        a.set_column(j, &derivation(xi, c.phi()).to_dense());
    }
    let svd = a.svd(false, true);
    let vt = svd.v_t.unwrap();
    let null: Vec<usize> = (0..28).filter(|&i| svd.singular_values[i] < 1e-10).collect();
    assert_eq!(null.len(), 21);
    for i in null {
        let mut w = AltForm::zero(8, 2);
        let mut p = 0;
        for x in 0..8 {
            for y in x + 1..8 {
                w += &AltForm::monomial(8, &[x, y], vt[(i, p)]).unwrap();
                p += 1;
            }
        }
        let check = c.instanton_residual(&w).unwrap();
        assert!(check.is_instanton, "residual {}", check.residual);
    }
    assert!(!c.instanton_residual(&AltForm::monomial(8, &[0, 1], 1.0).unwrap()).unwrap().is_instanton);
    assert!(c.instanton_residual(&AltForm::zero(8, 2)).unwrap().is_instanton);
}

#[test]
fn four_form_decomposition_matches_gl_action() {
    for (seed, asd) in [(9, false), (10, true)] {
        let mut rng = Sampler::new(seed);
        let c = if asd {
            recover_metric_from_phi8(&anti_self_dual()).unwrap()
        } else {
            transported8(&mut rng, 4.0).1
        };
        let m = c.metric();
        let ginv = m.inverse();
        let norm = |f: &AltForm| form_norm(f, m);
        let mut skew = Vec::new();
        let mut sym = Vec::new();
        for _ in 0..50 {
            let x = rng.matrix(8, 8);
            skew.push(derivation(&(ginv * (&x - x.transpose())), c.phi()));
            let sx = &x + x.transpose();
            let free = &sx - m.matrix() * ((ginv * &sx).trace() / 8.0);
            sym.push(derivation(&(ginv * free), c.phi()));
        }
        for f in &skew {
            let r = c.decompose4(f).unwrap();
            assert!(norm(&(r.form("7") - f)) < 1e-9 * norm(f));
            assert!(r.max_residual() < 1e-9, "{r:?}");
        }
        for f in &sym {
            let r = c.decompose4(f).unwrap();
            assert!(norm(&(r.form("35") - f)) < 1e-9 * norm(f));
        }
        assert_eq!(rank(&skew, 1e-9), 7);
        assert_eq!(rank(&sym, 1e-9), 35);
        // component dimensions over the whole of Λ⁴
        let basis: Vec<AltForm> = (0..binomial(8, 4))
            .map(|j| {
                let mut d = vec![0.0; 70];
                d[j] = 1.0;
                AltForm::from_dense(8, 4, &d)
            })
            .collect();
        let reports: Vec<_> = basis.iter().map(|b| c.decompose4(b).unwrap()).collect();
        for (label, dim) in [("1", 1), ("7", 7), ("27", 27), ("35", 35)] {
            let parts: Vec<AltForm> = reports.iter().map(|r| r.form(label).clone()).collect();
            assert_eq!(rank(&parts, 1e-9), dim, "component {label}");
        }
        assert!(reports.iter().all(|r| r.max_residual() < 1e-9));
    }
}

#[test]
fn frames_of_admissible_tuples_preserve_phi() {
    let c = CayleyStructure8::standard();
    let mut rng = Sampler::new(11);
    for _ in 0..50 {
        let [u, v, w, x] = rng.admissible_tuple(&c);
        let g = c.frame(&u, &v, &w, &x).unwrap();
        assert!((g.transpose() * &g - Matrix::identity(8, 8)).amax() < 1e-9);
        assert!(pullback(c.phi(), &g).unwrap().distance(c.phi()) < 1e-9);
    }
    assert_eq!(c.frame(&e(8, 1), &e(8, 2), &e(8, 4), &e(8, 0)).unwrap(), Matrix::identity(8, 8));
    assert!(matches!(
        c.frame(&e(8, 1), &e(8, 2), &e(8, 4), &e(8, 1)),
        Err(Error::NotAdmissibleTuple(_))
    ));
}

#[test]
fn frames_of_transported_structures() {
    let mut rng = Sampler::new(12);
    for asd in [false, true] {
        let c = if asd {
            let h = rng.gl(8, 3.0);
            let c0 = recover_metric_from_phi8(&anti_self_dual()).unwrap();
            recover_metric_from_phi8(&pullback(c0.phi(), &h).unwrap()).unwrap()
        } else {
            transported8(&mut rng, 5.0).1
        };
        let target = if asd { anti_self_dual() } else { standard_phi8() };
        for _ in 0..10 {
            let [u, v, w, x] = rng.admissible_tuple(&c);
            let g = c.frame(&u, &v, &w, &x).unwrap();
            assert!(pullback(c.phi(), &g).unwrap().distance(&target) < 1e-9);
        }
        assert!(pullback(c.phi(), c.canonical_frame()).unwrap().distance(&target) < 1e-9);
    }
}

#[test]
fn cayley_classification() {
    let c = CayleyStructure8::standard();
    let class = |axes: &[usize]| c.classify_cayley(&Subspace::coordinate(8, axes).unwrap()).unwrap();
    assert_eq!(class(&[0, 1, 2, 3]).kind, CayleyKind::Cayley);
    assert_eq!(class(&[0, 1, 2, 4]).kind, CayleyKind::Generic);
    assert!(matches!(
        c.classify_cayley(&Subspace::coordinate(8, &[0, 1, 2]).unwrap()),
        Err(Error::BadDimension(3))
    ));
    let mut rng = Sampler::new(13);
    let (_, t) = transported8(&mut rng, 5.0);
    for _ in 0..100 {
        let (u, v, w) = (rng.vector(8), rng.vector(8), rng.vector(8));
        let x = t.triple_cross(&u, &v, &w).unwrap();
        let r = t.classify_cayley(&Subspace::new(vec![u, v, w, x]).unwrap()).unwrap();
        assert_eq!(r.kind, CayleyKind::Cayley, "{r:?}");
        assert!(r.closure_residual < 1e-8);
    }
}

#[test]
fn unit_reconstruction_recovers_the_algebra() {
    let c = CayleyStructure8::standard();
    let alg = NormedAlgebra8::standard();
    let r = c.unit_reconstruction(&e(8, 0)).unwrap();
    assert!(r.residual < 1e-12);
    assert!((r.slice.metric().matrix() - Matrix::identity(7, 7)).amax() < 1e-10);
    let mut rng = Sampler::new(14);
    for _ in 0..100 {
        let (u, v) = (rng.vector(8), rng.vector(8));
        let o = |x: &Vector| Octonion::from_vector(x).unwrap();
        let expect = alg.product(&o(&u), &o(&v)).to_vector();
        assert!((r.product(&u, &v).unwrap() - expect).amax() < 1e-12);
    }
    for asd in [false, true] {
        let c = if asd { recover_metric_from_phi8(&anti_self_dual()).unwrap() } else { transported8(&mut rng, 5.0).1 };
        let m = c.metric().clone();
        let unit = rng.unit_vector(&m);
        let r = c.unit_reconstruction(&unit).unwrap();
        assert!(r.residual < 1e-9);
        assert!((r.slice.metric().matrix() - Matrix::identity(7, 7)).amax() < 1e-9);
        for _ in 0..50 {
            let (u, v) = (rng.vector(8), rng.vector(8));
            let uv = r.product(&u, &v).unwrap();
            assert!((m.norm(&uv) - m.norm(&u) * m.norm(&v)).abs() < 1e-9 * m.norm(&u) * m.norm(&v));
            assert!((r.product(&unit, &v).unwrap() - &v).amax() < 1e-9 * v.amax());
        }
    }
    assert!(matches!(c.unit_reconstruction(&(e(8, 0) * 2.0)), Err(Error::NotUnit(_))));
}

#[test]
fn from_g2_on_transported_structure() {
    let mut rng = Sampler::new(15);
    let (_, s) = common::transported7(&mut rng, 5.0);
    let c = CayleyStructure8::from_g2(&s, TripleBranch::Positive).unwrap();
    assert_eq!(c.eps(), 1.0);
    let gens = c.lambda4_7_generators().unwrap();
    assert_eq!(rank(&gens, 1e-9), 7);
    let _ = CrossStructure7::standard();
}

#[test]
fn fuzz_hook_reports_without_asserting() {
    let r = fuzz_phi_wedge_phi(20, 99);
    assert_eq!(r.samples, 20);
    assert!(r.nondegenerate <= 20);
    if r.nondegenerate > 0 {
        assert!(r.min_ratio.is_finite());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn decompositions_reassemble(seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let (_, c) = transported8(&mut rng, 5.0);
        let r2 = c.decompose2(&rng.form(8, 2)).unwrap();
        prop_assert!(r2.max_residual() < 1e-9);
        let r4 = c.decompose4(&rng.form(8, 4)).unwrap();
        prop_assert!(r4.max_residual() < 1e-9, "{:?}", r4);
    }

    #[test]
    fn pair_forms_lie_in_the_seven_part_up_to_wedge(seed in any::<u64>()) {
        // ω_{u,v} + u♭∧v♭ ∈ Λ²₇
        let mut rng = Sampler::new(seed);
        let (_, c) = transported8(&mut rng, 5.0);
        let (u, v) = (rng.vector(8), rng.vector(8));
        let m = c.metric();
        let w = c.pair_form(&u, &v).unwrap().omega
            + wedge(&AltForm::covector(&m.lower(&u)), &AltForm::covector(&m.lower(&v))).unwrap();
        let r = c.decompose2(&w).unwrap();
        prop_assert!(form_norm(r.form("21"), m) < 1e-9 * form_norm(&w, m).max(1.0));
        let _ = contract(&u, c.phi()).unwrap();
    }
}
