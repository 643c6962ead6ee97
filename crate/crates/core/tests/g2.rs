mod common;

use calibra_core::decomp::operator_matrix;
use calibra_core::g2::{
    b_matrix, recover_metric_from_phi, standard_phi7, standard_psi7, CrossStructure7, SubspaceKind7,
};
use calibra_core::multilinear::{
    contract, form_norm, gram_volume, hodge, pullback, vector, wedge, AltForm, Matrix, Metric,
    Orientation, Subspace, Vector,
};
use calibra_core::sample::Sampler;
use calibra_core::Error;
use common::{derivation, e, labelled, rank, rel_matrix_err, so_basis, transported7};
use nalgebra::SymmetricEigen;
use proptest::prelude::*;

const PHI0: [(&str, f64); 7] = [
    ("123", 1.0),
    ("145", -1.0),
    ("167", -1.0),
    ("246", -1.0),
    ("257", 1.0),
    ("347", -1.0),
    ("356", -1.0),
];

const PSI0: [(&str, f64); 7] = [
    ("1247", -1.0),
    ("1256", -1.0),
    ("1346", 1.0),
    ("1357", -1.0),
    ("2345", -1.0),
    ("2367", -1.0),
    ("4567", 1.0),
];

/// The cross product written out componentwise (1-based in the comments).
fn cross_oracle(u: &Vector, v: &Vector) -> Vector {
    let (u1, u2, u3, u4, u5, u6, u7) = (u[0], u[1], u[2], u[3], u[4], u[5], u[6]);
    let (v1, v2, v3, v4, v5, v6, v7) = (v[0], v[1], v[2], v[3], v[4], v[5], v[6]);
    vector(&[
        u2 * v3 - u3 * v2 - u4 * v5 + u5 * v4 - u6 * v7 + u7 * v6,
        u3 * v1 - u1 * v3 - u4 * v6 + u6 * v4 - u7 * v5 + u5 * v7,
        u1 * v2 - u2 * v1 - u4 * v7 + u7 * v4 - u5 * v6 + u6 * v5,
        u1 * v5 - u5 * v1 + u2 * v6 - u6 * v2 + u3 * v7 - u7 * v3,
        -u1 * v4 + u4 * v1 - u2 * v7 + u7 * v2 + u3 * v6 - u6 * v3,
        u1 * v7 - u7 * v1 - u2 * v4 + u4 * v2 - u3 * v5 + u5 * v3,
        -u1 * v6 + u6 * v1 + u2 * v5 - u5 * v2 - u3 * v4 + u4 * v3,
    ])
}

fn a_matrix_oracle(u: &Vector) -> Matrix {
    let (u1, u2, u3, u4, u5, u6, u7) = (u[0], u[1], u[2], u[3], u[4], u[5], u[6]);
    Matrix::from_row_slice(
        7,
        7,
        &[
            0.0, -u3, u2, u5, -u4, u7, -u6, //
            u3, 0.0, -u1, u6, -u7, -u4, u5, //
            -u2, u1, 0.0, u7, u6, -u5, -u4, //
            -u5, -u6, -u7, 0.0, u1, u2, u3, //
            u4, u7, -u6, -u1, 0.0, u3, -u2, //
            -u7, u4, u5, -u2, -u3, 0.0, u1, //
            u6, -u5, u4, -u3, u2, -u1, 0.0,
        ],
    )
}

#[test]
fn standard_forms_match_the_published_tables() {
    assert_eq!(standard_phi7(), labelled(7, 1, &PHI0));
    assert_eq!(standard_psi7(), labelled(7, 1, &PSI0));
    let s = CrossStructure7::standard();
    assert_eq!(hodge(s.phi(), s.metric(), s.orientation()).unwrap(), *s.psi());
}

#[test]
fn cross_product_matches_componentwise_formula() {
    let s = CrossStructure7::standard();
    let mut rng = Sampler::new(1);
    for _ in 0..200 {
        let (u, v) = (rng.vector(7), rng.vector(7));
        assert!((s.cross(&u, &v).unwrap() - cross_oracle(&u, &v)).amax() < 1e-12);
        assert!((s.cross_matrix(&u).unwrap() - a_matrix_oracle(&u)).amax() < 1e-12);
    }
}

#[test]
fn b_matrix_of_standard_form_is_six_identity() {
    assert_eq!(b_matrix(&standard_phi7()).unwrap(), Matrix::identity(7, 7) * 6.0);
}

#[test]
fn cross_product_axioms_on_transported_structures() {
    let mut rng = Sampler::new(2);
    for _ in 0..20 {
        let (_, s) = transported7(&mut rng, 10.0);
        let m = s.metric();
        for _ in 0..50 {
            let (u, v, w) = (rng.vector(7), rng.vector(7), rng.vector(7));
            let uv = s.cross(&u, &v).unwrap();
            let scale = m.norm(&u) * m.norm(&v);
            assert!(m.inner(&uv, &u).abs() < 1e-9 * scale * m.norm(&u));
            assert!(m.inner(&uv, &v).abs() < 1e-9 * scale * m.norm(&v));
            let area = m.inner(&u, &u) * m.inner(&v, &v) - m.inner(&u, &v).powi(2);
            assert!((m.inner(&uv, &uv) - area).abs() < 1e-9 * scale * scale);
            // u×(v×w) + v×(u×w) = ⟨u,w⟩v + ⟨v,w⟩u − 2⟨u,v⟩w
            let lhs = s.cross(&u, &s.cross(&v, &w).unwrap()).unwrap()
                + s.cross(&v, &s.cross(&u, &w).unwrap()).unwrap();
            let rhs = &v * m.inner(&u, &w) + &u * m.inner(&v, &w) - &w * (2.0 * m.inner(&u, &v));
            assert!(m.norm(&(lhs - rhs)) < 1e-9 * scale * m.norm(&w));
        }
    }
}

#[test]
fn orthonormal_pair_closes_under_cross_product() {
    let s = CrossStructure7::standard();
    let mut rng = Sampler::new(4);
    for _ in 0..100 {
        let q = rng.orthonormal(2, s.metric());
        let w = s.cross(&q[0], &q[1]).unwrap();
        assert!((s.cross(&q[1], &w).unwrap() - &q[0]).amax() < 1e-12);
        assert!((s.cross(&w, &q[0]).unwrap() - &q[1]).amax() < 1e-12);
    }
}

#[test]
fn brackets_pair_with_calibrations() {
    let mut rng = Sampler::new(5);
    let (_, s) = transported7(&mut rng, 5.0);
    let m = s.metric();
    for _ in 0..200 {
        let vs: Vec<Vector> = (0..4).map(|_| rng.vector(7)).collect();
        let (u, v, w, x) = (&vs[0], &vs[1], &vs[2], &vs[3]);
        let a = s.associator(u, v, w).unwrap();
        let psi = calibra_core::multilinear::eval(s.psi(), &vs).unwrap();
        assert!((m.inner(&a, x) - psi).abs() < 1e-9 * (1.0 + psi.abs()));
        let phi = s.phi_eval(u, v, w).unwrap();
        let vol3 = gram_volume(&vs[..3], m).unwrap();
        assert!((phi * phi + m.inner(&a, &a) - vol3).abs() < 1e-9 * vol3.max(1.0));
        let c = s.coassociator(u, v, w, x).unwrap();
        let vol4 = gram_volume(&vs, m).unwrap();
        assert!((psi * psi + m.inner(&c, &c) - vol4).abs() < 1e-9 * vol4.max(1.0));
    }
}

#[test]
fn recovery_round_trip() {
    let mut rng = Sampler::new(6);
    for _ in 0..20 {
        let g = rng.gl(7, 10.0);
        let s = recover_metric_from_phi(&pullback(&standard_phi7(), &g).unwrap()).unwrap();
        let expect = g.transpose() * &g;
        assert!(rel_matrix_err(s.metric().matrix(), &expect) < 1e-9);
        assert_eq!(s.orientation().sign(), g.determinant().signum());
    }
}

#[test]
fn flipped_sign_forms_have_split_signature() {
    // all minus signs of the standard form turned into plus signs, written
    // in both published orderings of the fifth term
    let literal = labelled(
        7,
        1,
        &[
            ("123", 1.0),
            ("145", 1.0),
            ("167", 1.0),
            ("246", 1.0),
            ("275", 1.0),
            ("347", 1.0),
            ("356", 1.0),
        ],
    );
    let all_plus = labelled(7, 1, &PHI0.map(|(i, _)| (i, 1.0)));
    for phi in [literal, all_plus] {
        match recover_metric_from_phi(&phi) {
            Err(Error::IndefiniteSignature { positive, negative }) => {
                assert_eq!((positive.min(negative), positive.max(negative)), (3, 4));
            }
            other => panic!("expected split signature, got {other:?}"),
        }
    }
}

#[test]
fn degenerate_forms_are_rejected() {
    let phi = labelled(7, 1, &[("123", 1.0), ("456", 1.0)]);
    assert!(matches!(recover_metric_from_phi(&phi), Err(Error::NotNondegenerate)));
    assert!(matches!(
        recover_metric_from_phi(&AltForm::zero(7, 3)),
        Err(Error::NotNondegenerate)
    ));
    assert!(matches!(
        recover_metric_from_phi(&AltForm::zero(6, 3)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn certify_rejects_a_wrong_metric() {
    let g = Metric::new(Matrix::identity(7, 7) * 2.0).unwrap();
    assert!(CrossStructure7::certify(g, Orientation::standard(7), standard_phi7()).is_err());
}

#[test]
fn classification_of_coordinate_planes() {
    let s = CrossStructure7::standard();
    let class = |axes: &[usize]| s.classify_subspace(&Subspace::coordinate(7, axes).unwrap()).unwrap();
    assert_eq!(class(&[0, 1, 2]).kind, SubspaceKind7::Associative);
    assert_eq!(class(&[3, 4, 5, 6]).kind, SubspaceKind7::Coassociative);
    assert_eq!(class(&[0, 1, 3]).kind, SubspaceKind7::Generic);
    assert_eq!(class(&[0, 1, 2, 3]).kind, SubspaceKind7::Generic);
    assert!(matches!(
        s.classify_subspace(&Subspace::coordinate(7, &[0, 1]).unwrap()),
        Err(Error::BadDimension(2))
    ));
}

#[test]
fn span_of_u_v_and_cross_is_associative() {
    let mut rng = Sampler::new(7);
    let (_, s) = transported7(&mut rng, 5.0);
    for _ in 0..50 {
        let (u, v) = (rng.vector(7), rng.vector(7));
        let w = s.cross(&u, &v).unwrap();
        let c = s.classify_subspace(&Subspace::new(vec![u, v, w]).unwrap()).unwrap();
        assert_eq!(c.kind, SubspaceKind7::Associative, "residual {}", c.residual);
    }
}

fn spectrum(mat: &Matrix) -> Vec<f64> {
    let sym = (mat + mat.transpose()) * 0.5;
    assert!((mat - &sym).amax() < 1e-12, "operator is symmetric");
    let mut ev: Vec<f64> = SymmetricEigen::new(sym).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

#[test]
fn two_form_operator_has_eigenvalues_two_and_minus_one() {
    let s = CrossStructure7::standard();
    let op = operator_matrix(7, 2, 2, |w| s.phi_action2(w).unwrap());
    let ev = spectrum(&op);
    assert!(ev[..14].iter().all(|x| (x + 1.0).abs() < 1e-12));
    assert!(ev[14..].iter().all(|x| (x - 2.0).abs() < 1e-12));
}

#[test]
fn fourteen_part_is_the_stabiliser_algebra() {
    // g₂ = {ξ ∈ so(7) : ξ·φ = 0}, identified with 2-forms ⟨·, ξ·⟩
    let s = CrossStructure7::standard();
    let basis = so_basis(7);
    let images: Vec<AltForm> = basis.iter().map(|xi| derivation(xi, s.phi())).collect();
    let mut a = Matrix::zeros(35, 21);
    for (j, f) in images.iter().enumerate() {
        a.set_column(j, &f.to_dense());
    }
    let svd = a.svd(false, true);
    let vt = svd.v_t.unwrap();
    let null: Vec<usize> = (0..21).filter(|&i| svd.singular_values[i] < 1e-10).collect();
    assert_eq!(null.len(), 14);
    for i in null {
        let mut xi = Matrix::zeros(7, 7);
        for (c, b) in vt.row(i).iter().zip(&basis) {
            xi += b * *c;
        }
        let mut w = AltForm::zero(7, 2);
        for a in 0..7 {
            for b in a + 1..7 {
                w += &AltForm::monomial(7, &[a, b], xi[(a, b)]).unwrap();
            }
        }
        let r = s.decompose2(&w).unwrap();
        assert!(form_norm(r.form("7"), s.metric()) < 1e-10);
    }
}

#[test]
fn three_form_decomposition_matches_gl_action() {
    // ξ·φ is in Λ³₁ for ξ = 1, in Λ³₇ for skew ξ and in Λ³₂₇ for symmetric
    // traceless ξ
    let mut rng = Sampler::new(9);
    let (_, s) = transported7(&mut rng, 4.0);
    let m = s.metric();
    let g = m.matrix();
    let norm = |f: &AltForm| form_norm(f, m);
    // ξ skew or symmetric with respect to the structure's metric
    let mut skew = Vec::new();
    let mut sym = Vec::new();
    for _ in 0..40 {
        let x = rng.matrix(7, 7);
        let ginv = m.inverse();
        skew.push(derivation(&(ginv * (&x - x.transpose())), s.phi()));
        let sx = &x + x.transpose();
        let trace_free = &sx - g * ((ginv * &sx).trace() / 7.0);
        sym.push(derivation(&(ginv * trace_free), s.phi()));
    }
    let id = derivation(&Matrix::identity(7, 7), s.phi());
    let r = s.decompose3(&id).unwrap();
    assert!(norm(&(r.form("1") - &id)) < 1e-9 * norm(&id));
    for f in &skew {
        let r = s.decompose3(f).unwrap();
        assert!(norm(&(r.form("7") - f)) < 1e-9 * norm(f));
        assert!(r.max_residual() < 1e-9);
    }
    for f in &sym {
        let r = s.decompose3(f).unwrap();
        assert!(norm(&(r.form("27") - f)) < 1e-9 * norm(f));
        assert!(r.max_residual() < 1e-9);
    }
    assert_eq!(rank(&skew, 1e-9), 7);
    assert_eq!(rank(&sym, 1e-9), 27);
}

#[test]
fn frames_of_admissible_triples_preserve_phi() {
    let s = CrossStructure7::standard();
    let mut rng = Sampler::new(10);
    for _ in 0..50 {
        let [u, v, w] = rng.admissible_triple(&s);
        let g = s.frame(&u, &v, &w).unwrap();
        assert!((g.transpose() * &g - Matrix::identity(7, 7)).amax() < 1e-9);
        assert!(pullback(s.phi(), &g).unwrap().distance(s.phi()) < 1e-9);
    }
    let g = s.frame(&e(7, 0), &e(7, 1), &e(7, 3)).unwrap();
    assert_eq!(g, Matrix::identity(7, 7));
    assert!(matches!(
        s.frame(&e(7, 0), &e(7, 1), &e(7, 2)),
        Err(Error::NotAdmissibleTriple(_))
    ));
}

#[test]
fn tangent_structure_is_hermitian() {
    let s = CrossStructure7::standard();
    let mut rng = Sampler::new(11);
    let u = rng.unit_vector(s.metric());
    let t = s.tangent_su3(&u).unwrap();
    let p = Matrix::identity(7, 7) - &u * u.transpose();
    assert!((&t.j * &t.j + &p).amax() < 1e-12);
    assert!((&t.j * &u).amax() < 1e-12);
    // θ = Re θ + i Im θ has type (3,0) on u⊥
    for _ in 0..10 {
        let x = &p * rng.vector(7);
        let jx = &t.j * &x;
        let d = contract(&jx, &t.re_theta).unwrap() + contract(&x, &t.im_theta).unwrap();
        assert!(d.sup_norm() < 1e-12);
    }
    assert!(matches!(s.tangent_su3(&(u * 2.0)), Err(Error::NotUnit(_))));
}

#[test]
fn energy_density_is_minimised_on_associative_triples() {
    let s = CrossStructure7::standard();
    let mut rng = Sampler::new(12);
    for _ in 0..100 {
        let (u, v, w) = (rng.vector(7), rng.vector(7), rng.vector(7));
        assert!(s.energy_density(&u, &v, &w).unwrap() >= 1.0 - 1e-12);
        let c = s.cross(&u, &v).unwrap();
        assert!((s.energy_density(&u, &v, &c).unwrap() - 1.0).abs() < 1e-12);
        assert!(s.associative_gradient(&u, &v, &c).unwrap().amax() < 1e-12);
    }
    assert!(matches!(
        s.energy_density(&e(7, 0), &e(7, 1), &e(7, 3)),
        Err(Error::CalibrationVanishes(_))
    ));
}

#[test]
fn wedge_identities_of_the_calibration() {
    // φ∧ψ = 7 dvol and ι(u)φ ∧ ψ = 3 *u♭
    let s = CrossStructure7::standard();
    let top = wedge(s.phi(), s.psi()).unwrap().top();
    assert_eq!(top, 7.0);
    let u = e(7, 0);
    let lhs = wedge(&contract(&u, s.phi()).unwrap(), s.psi()).unwrap();
    let rhs = hodge(&s.flat(&u).unwrap(), s.metric(), s.orientation()).unwrap() * 3.0;
    assert!(lhs.distance(&rhs) < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn brackets_alternate(seed in any::<u64>()) {
        let s = CrossStructure7::standard();
        let mut rng = Sampler::new(seed);
        let (u, v, w, x) = (rng.vector(7), rng.vector(7), rng.vector(7), rng.vector(7));
        let a = s.associator(&u, &v, &w).unwrap();
        prop_assert!((s.associator(&v, &u, &w).unwrap() + &a).amax() < 1e-12 * (1.0 + a.amax()));
        prop_assert!((s.associator(&u, &w, &v).unwrap() + &a).amax() < 1e-12 * (1.0 + a.amax()));
        let c = s.coassociator(&u, &v, &w, &x).unwrap();
        prop_assert!((s.coassociator(&v, &u, &w, &x).unwrap() + &c).amax() < 1e-12 * (1.0 + c.amax()));
        prop_assert!((s.coassociator(&u, &v, &x, &w).unwrap() + &c).amax() < 1e-12 * (1.0 + c.amax()));
    }

    #[test]
    fn decompositions_reassemble(seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let (_, s) = transported7(&mut rng, 5.0);
        let r2 = s.decompose2(&rng.form(7, 2)).unwrap();
        prop_assert!(r2.max_residual() < 1e-9);
        let r3 = s.decompose3(&rng.form(7, 3)).unwrap();
        prop_assert!(r3.max_residual() < 1e-9);
    }
}
