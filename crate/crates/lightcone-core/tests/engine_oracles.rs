//! Oracle tests for the frame engine: reconstructed paths against printed
//! closed forms, congruence under the isometry group, and the classification
//! of singular points on the built-in curves.

use std::f64::consts::{FRAC_PI_2, PI};

use lightcone_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn closed_form_deviation(entry: &GalleryEntry, n: usize) -> f64 {
    let path = reconstruct(&entry.quintuple, &entry.initial, n, &Default::default()).unwrap();
    let iv = entry.interval();
    let mut dev: f64 = 0.0;
    for i in 0..path.len() {
        let g = entry.gamma_at(iv.node(i, n)).unwrap().unwrap();
        dev = dev.max((g - path.gammas()[i]).max_abs());
    }
    dev
}

#[test]
fn reconstruction_matches_closed_forms_directly() {
    // Integrating from the printed initial data reproduces the printed curve
    // without any alignment.
    for entry in [
        example_trig(2.0, 1.0, 1, 2).unwrap(),
        example_trig(1.0, 1.0, 1, 1).unwrap(),
        example_kappa3(Kappa3Variant::Sin),
        example_kappa3(Kappa3Variant::Sinh),
    ] {
        let dev = closed_form_deviation(&entry, 2001);
        assert!(dev < 1e-5, "{}: deviation {dev:.3e}", entry.name);
    }
}

#[test]
fn reconstruction_from_canonical_data_matches_after_alignment() {
    // Starting from the canonical initial frame instead, the two paths can
    // only differ by a congruence; solve for it from the initial frames and
    // compare pointwise.
    for (p, q, n, m) in [(2.0, 1.0, 1u32, 2u32), (1.0, 1.0, 1, 1)] {
        let entry = example_trig(p, q, n, m).unwrap();
        let samples = 2001;
        let from_canonical = reconstruct(
            &entry.quintuple,
            &InitialFrame::canonical(),
            samples,
            &Default::default(),
        )
        .unwrap();
        let reference =
            reconstruct(&entry.quintuple, &entry.initial, samples, &Default::default()).unwrap();
        let dev = from_canonical.aligned_gamma_deviation(&reference).unwrap();
        assert!(dev < 1e-5, "({p},{q},{n},{m}): aligned deviation {dev:.3e}");
    }
}

#[test]
fn circle_frame_path_reproduces_the_trig_entry() {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let iv = entry.interval();
    let theta = ScalarField::parse("t", iv).unwrap();
    let path = circle_frame_path(
        &theta,
        &entry.quintuple.alpha,
        &entry.quintuple.beta,
        entry.initial.gamma0,
        2001,
    )
    .unwrap();
    for i in 0..path.len() {
        let g = entry.gamma_at(iv.node(i, 2001)).unwrap().unwrap();
        assert!((g - path.gammas()[i]).max_abs() < 1e-5, "node {i}");
    }
    // And its extracted curvature is (0, -theta'/2, theta'/2, alpha, beta).
    let extracted = extract_curvature(&path).unwrap();
    assert!(congruent(&extracted, &entry.quintuple, 1e-6).unwrap());
}

#[test]
fn random_congruences_leave_the_curvature_unchanged() {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let path = reconstruct(&entry.quintuple, &entry.initial, 1501, &Default::default()).unwrap();
    let q0 = extract_curvature(&path).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let a = LorentzTransform::rotation(rng.gen_range(-PI..PI))
            .compose(&LorentzTransform::boost(rng.gen_range(-1.0..1.0)))
            .compose(&LorentzTransform::rotation(rng.gen_range(-PI..PI)));
        let shift = MinkowskiVec::new(
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
            rng.gen_range(-2.0..2.0),
        );
        let moved = path.transformed(&a, shift);
        let q1 = extract_curvature(&moved).unwrap();
        assert!(congruent(&q0, &q1, 1e-6).unwrap());
        let iv = entry.interval();
        for i in 0..moved.len() {
            let t = iv.node(i, moved.len());
            let x = q0.eval(t).unwrap();
            let y = q1.eval(t).unwrap();
            for k in 0..5 {
                assert!((x[k] - y[k]).abs() < 1e-6);
            }
        }
    }
}

#[test]
fn roundtrip_error_decays_at_least_second_order() {
    let entry = example_trig(2.0, 1.0, 1, 2).unwrap();
    let q = &entry.quintuple;
    let sup_err = |n: usize| -> f64 {
        let path = reconstruct(q, &entry.initial, n, &Default::default()).unwrap();
        let back = extract_curvature(&path).unwrap();
        let iv = entry.interval();
        let mut sup: f64 = 0.0;
        for i in 1..n - 1 {
            let t = iv.node(i, n);
            let want = q.eval(t).unwrap();
            let got = back.eval(t).unwrap();
            for k in 0..5 {
                sup = sup.max((want[k] - got[k]).abs());
            }
        }
        sup
    };
    let coarse = sup_err(251);
    let fine = sup_err(501);
    let finest = sup_err(2001);
    assert!(finest < 1e-5, "round-trip at 2001 nodes: {finest:.3e}");
    assert!(
        fine < coarse / 3.5,
        "error should drop at least quadratically: {coarse:.3e} -> {fine:.3e}"
    );
}

#[test]
fn metric_identity_on_all_gallery_paths() {
    for entry in [
        example_trig(2.0, 1.0, 1, 2).unwrap(),
        example_trig(1.0, 1.0, 1, 1).unwrap(),
        example_kappa3(Kappa3Variant::Sin),
        example_kappa3(Kappa3Variant::Sinh),
    ] {
        let path =
            reconstruct(&entry.quintuple, &entry.initial, 2001, &Default::default()).unwrap();
        let diag = diagnose(&path, &entry.quintuple).unwrap();
        assert!(
            diag.metric_identity < 1e-5,
            "{}: metric identity residual {:.3e}",
            entry.name,
            diag.metric_identity
        );
        assert!(diag.max_frame_residual() < 1e-4, "{}", entry.name);
    }
}

#[test]
fn singular_points_of_the_kappa3_family() {
    let sin = example_kappa3(Kappa3Variant::Sin);
    let (_, singular) = classify_point(&sin.quintuple, FRAC_PI_2, tol::CLASSIFY).unwrap();
    assert!(singular);
    let (_, singular) = classify_point(&sin.quintuple, 3.0 * FRAC_PI_2, tol::CLASSIFY).unwrap();
    assert!(singular);
    let (causal, singular) = classify_point(&sin.quintuple, 1.0, tol::CLASSIFY).unwrap();
    assert!(!singular);
    assert_eq!(causal, CausalType::Timelike); // alpha beta = sin cos^2 > 0 at t = 1

    let path = reconstruct(&sin.quintuple, &sin.initial, 2001, &Default::default()).unwrap();
    let diag = diagnose(&path, &sin.quintuple).unwrap();
    assert_eq!(diag.singular_ts.len(), 2);
    assert!((diag.singular_ts[0] - FRAC_PI_2).abs() < 1e-2);
    assert!((diag.singular_ts[1] - 3.0 * FRAC_PI_2).abs() < 1e-2);

    let sinh = example_kappa3(Kappa3Variant::Sinh);
    let (_, singular) = classify_point(&sinh.quintuple, 0.0, tol::CLASSIFY).unwrap();
    assert!(singular);
    // Spacelike away from the singular point.
    for t in [-1.5, -0.5, 0.5, 1.5] {
        let (causal, singular) = classify_point(&sinh.quintuple, t, tol::CLASSIFY).unwrap();
        assert!(!singular);
        assert_eq!(causal, CausalType::Spacelike, "t = {t}");
    }
}

#[test]
fn kappa3_sin_extracted_combined_curvatures() {
    // On the sin instance the combined curvatures satisfy kT = sin t and
    // kS = -sin t; recovered numerically from the reconstructed frames.
    let entry = example_kappa3(Kappa3Variant::Sin);
    let path = reconstruct(&entry.quintuple, &entry.initial, 2001, &Default::default()).unwrap();
    let extracted = extract_curvature(&path).unwrap();
    for i in 0..path.len() {
        let t = path.t(i);
        let kt = extracted.kappa_t(t).unwrap();
        let ks = extracted.kappa_s(t).unwrap();
        assert!((kt - t.sin()).abs() < 1e-5, "kT at {t}: {kt}");
        assert!((ks + t.sin()).abs() < 1e-5, "kS at {t}: {ks}");
    }
}

#[test]
fn kappa3_sin_has_constant_lower_null_vector() {
    let entry = example_kappa3(Kappa3Variant::Sin);
    let path = reconstruct(&entry.quintuple, &entry.initial, 2001, &Default::default()).unwrap();
    let want = MinkowskiVec::new(1.0, -1.0, 0.0);
    for i in 0..path.len() {
        assert!((path.lminus()[i] - want).max_abs() < 1e-8, "node {i}");
    }
}

#[test]
fn mixed_type_classification_along_the_sin_instance() {
    // alpha beta = sin t cos^2 t: timelike on (0, pi), spacelike on (pi, 2pi),
    // lightlike where sin t = 0 with beta nonzero.
    let q = example_kappa3(Kappa3Variant::Sin).quintuple;
    assert_eq!(
        classify_point(&q, 0.0, tol::CLASSIFY).unwrap(),
        (CausalType::Lightlike, false)
    );
    assert_eq!(
        classify_point(&q, PI, tol::CLASSIFY).unwrap().0,
        CausalType::Lightlike
    );
    assert_eq!(
        classify_point(&q, 4.0, tol::CLASSIFY).unwrap().0,
        CausalType::Spacelike
    );
}
