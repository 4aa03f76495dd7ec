//! Oracle cross-checks that pin the fast implementations against direct
//! transliterations of the definitions, plus soundness sweeps for the
//! construction pipeline.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sepcodes::code::for_each_coalition;
use sepcodes::construct::{
    admissible, build_ssc, capset_greedy, difference_matrix, dm_validate, generate, restrict,
    subset_from_encodings, CapSet, DmCheck, PointOrder,
};
use sepcodes::field::{FieldElement, FieldSpec};
use sepcodes::verify::{
    distance_gap_violation, find_forbidden_config, is_fpc2_fast, is_sc, is_sc3_fast, is_ssc,
};

#[test]
fn forbidden_config_detector_matches_naive_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf02b1dde);
    for i in 0..3_000 {
        let q = if i % 2 == 0 { 3 } else { 4 };
        let code = random_code(&mut rng, q, 7);
        let fast = find_forbidden_config(&code).unwrap().is_some();
        let slow = naive_forbidden_exists(&code);
        assert_eq!(fast, slow, "disagreement on {}", code.serialize());
    }
    // and on the fixtures
    assert!(naive_forbidden_exists(&dm_example()));
    assert!(!naive_forbidden_exists(&example3()));
}

#[test]
fn admissibility_matches_naive_enumeration() {
    // general alpha and sixth-root alpha over GF(7), every nonempty subset
    let f7 = FieldSpec::of_order(7).unwrap();
    let elems: Vec<FieldElement> = f7.elements().collect();
    for alpha_enc in 2..7u64 {
        let alpha = f7.element(alpha_enc).unwrap();
        for_each_coalition(7, 7, |idx| {
            let subset: Vec<FieldElement> = idx.iter().map(|&i| elems[i].clone()).collect();
            let fast = admissible(&subset, &alpha).unwrap().admissible;
            let slow = naive_admissible(&subset, &alpha);
            assert_eq!(fast, slow, "alpha = {alpha_enc}, subset = {idx:?}");
            true
        });
    }
    // an extension field without sixth roots takes the direct system route
    let f9 = FieldSpec::of_order(9).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let alpha = f9.element(rng.random_range(2..9)).unwrap();
        let size = rng.random_range(1..=5);
        let mut enc: Vec<u64> = Vec::new();
        while enc.len() < size {
            let e = rng.random_range(0..9);
            if !enc.contains(&e) {
                enc.push(e);
            }
        }
        let subset = subset_from_encodings(&f9, &enc).unwrap();
        let fast = admissible(&subset, &alpha).unwrap().admissible;
        let slow = naive_admissible(&subset, &alpha);
        assert_eq!(fast, slow, "alpha = {}, subset = {enc:?}", alpha.encode());
    }
}

#[test]
fn admissibility_reduction_agrees_over_gf13() {
    // alpha of order six: the system check must collapse to the triangle
    // scan and still agree with the naive system enumeration
    let f13 = FieldSpec::of_order(13).unwrap();
    let alpha = f13.sixth_root_of_unity().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..300 {
        let size = rng.random_range(1..=6);
        let mut enc: Vec<u64> = Vec::new();
        while enc.len() < size {
            let e = rng.random_range(0..13);
            if !enc.contains(&e) {
                enc.push(e);
            }
        }
        let subset = subset_from_encodings(&f13, &enc).unwrap();
        let fast = admissible(&subset, &alpha).unwrap().admissible;
        let slow = naive_admissible(&subset, &alpha);
        assert_eq!(fast, slow, "subset = {enc:?}");
    }
}

#[test]
fn admissible_witnesses_satisfy_their_relation() {
    let f7 = FieldSpec::of_order(7).unwrap();
    let alpha = f7.element(4).unwrap();
    let subset: Vec<FieldElement> = f7.elements().collect();
    let res = admissible(&subset, &alpha).unwrap();
    assert!(!res.admissible);
    match res.witness.unwrap() {
        sepcodes::construct::AdmissibilityWitness::Triangle { kind: _, x, y, w } => {
            let fx = f7.element(x).unwrap();
            let fy = f7.element(y).unwrap();
            let fw = f7.element(w).unwrap();
            let am1 = alpha.sub(&f7.one()).unwrap();
            // one of the three relations must hold on the reported triple
            let r1 = fx.add(&am1.mul(&fw).unwrap()).unwrap() == alpha.mul(&fy).unwrap();
            let r2 = fy.add(&am1.mul(&fw).unwrap()).unwrap() == alpha.mul(&fx).unwrap();
            let r3 = fx.add(&am1.mul(&fy).unwrap()).unwrap() == alpha.mul(&fw).unwrap();
            assert!(r1 || r2 || r3);
        }
        sepcodes::construct::AdmissibilityWitness::System { .. } => {}
    }
}

#[test]
fn admissible_subsets_generate_separable_codes() {
    // over GF(7): every subset of size <= 3 that passes the admissibility
    // check generates a fast-separable code, for each alpha outside {0,1}
    let f7 = FieldSpec::of_order(7).unwrap();
    let elems: Vec<FieldElement> = f7.elements().collect();
    for alpha_enc in 2..7u64 {
        let alpha = f7.element(alpha_enc).unwrap();
        let dm = difference_matrix(&f7, &alpha).unwrap();
        for_each_coalition(7, 3, |idx| {
            let subset: Vec<FieldElement> = idx.iter().map(|&i| elems[i].clone()).collect();
            if admissible(&subset, &alpha).unwrap().admissible {
                let code = generate(&restrict(&dm, &subset).unwrap()).unwrap();
                assert!(
                    is_sc3_fast(&code).unwrap().verdict,
                    "alpha = {alpha_enc}, subset = {idx:?}"
                );
            }
            true
        });
    }
}

#[test]
fn pipeline_outputs_verify_for_small_prime_powers() {
    for (q1, dim) in [(7u64, 1usize), (7, 2), (13, 1), (13, 2)] {
        let built = build_ssc(q1, dim, None).unwrap();
        assert!(
            is_sc3_fast(&built.code).unwrap().verdict,
            "q1 = {q1}, n = {dim}"
        );
        assert!(is_fpc2_fast(&built.code).unwrap().verdict);
        assert!(sepcodes::verify::is_ssc3_fast(&built.code).unwrap().verdict);
        if built.code.size() <= 50 {
            assert!(is_ssc(&built.code, 3).unwrap().verdict);
            assert!(distance_gap_violation(&built.code, 3).is_none());
        }
    }
}

#[test]
fn parabola_subset_is_admissible_in_the_big_field() {
    // image of the parabola cap inside GF(49), with the sixth root of
    // unity embedded from GF(7): no triangle and no system solution
    let f7 = FieldSpec::of_order(7).unwrap();
    let f49 = FieldSpec::create(7, 2, None).unwrap();
    let view = sepcodes::field::VectorView::new(&f49, &f7).unwrap();
    let subset: Vec<FieldElement> = (0..7u64)
        .map(|i| {
            let a = f7.element(i).unwrap();
            let sq = a.mul(&a).unwrap();
            view.from_vector(&sepcodes::field::VectorElement::new(vec![a, sq])).unwrap()
        })
        .collect();
    let alpha = view.embed(&f7.sixth_root_of_unity().unwrap()).unwrap();
    let res = admissible(&subset, &alpha).unwrap();
    assert!(res.admissible);
    // a full affine line inside the plane is not admissible
    let line: Vec<FieldElement> = (0..7u64)
        .map(|i| {
            let a = f7.element(i).unwrap();
            view.from_vector(&sepcodes::field::VectorElement::new(vec![a, f7.zero()])).unwrap()
        })
        .collect();
    assert!(!admissible(&line, &alpha).unwrap().admissible);
}

#[test]
fn pipeline_greedy_and_parabola_caps_agree_on_validity() {
    let f7 = FieldSpec::of_order(7).unwrap();
    for order in [PointOrder::Canonical, PointOrder::Parabola, PointOrder::Seeded(9)] {
        let cap = capset_greedy(&f7, 2, &order).unwrap();
        let built = build_ssc(7, 2, Some(&cap)).unwrap();
        assert_eq!(built.code.size(), 49 * cap.len());
        assert!(is_sc3_fast(&built.code).unwrap().verdict);
    }
}

#[test]
fn difference_matrices_validate_for_all_small_fields() {
    for q in (3u64..=49).filter(|&q| sepcodes::field::prime_power_parts(q).is_some()) {
        let spec = FieldSpec::of_order(q).unwrap();
        for alpha in spec.elements().skip(2) {
            let dm = difference_matrix(&spec, &alpha).unwrap();
            assert_eq!(
                dm_validate(dm.rows(), &spec).unwrap(),
                DmCheck::Valid,
                "q = {q}, alpha = {}",
                alpha.encode()
            );
        }
    }
}

#[test]
fn strong_and_plain_separability_coincide_for_all_binary_length3_codes() {
    // every (3, M, 2) code exists among the 255 nonempty subsets of the 8
    // binary words, so this settles the q = 2 case by exhaustion
    let mut agree = 0u32;
    for_each_small_code(2, 8, |code| {
        let sc = is_sc(code, 3).verdict;
        let ssc = is_ssc(code, 3).unwrap().verdict;
        assert_eq!(sc, ssc, "disagreement on {}", code.serialize());
        agree += 1;
    });
    assert_eq!(agree, 255);
}

#[test]
fn distance_gap_holds_on_separable_random_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let mut separable_seen = 0;
    for i in 0..4_000 {
        let q = if i % 2 == 0 { 3 } else { 4 };
        let code = random_code(&mut rng, q, 7);
        if is_sc3_fast(&code).unwrap().verdict {
            separable_seen += 1;
            assert!(
                distance_gap_violation(&code, 3).is_none(),
                "distance gap violated on {}",
                code.serialize()
            );
        }
    }
    assert!(separable_seen > 100, "corpus too thin: {separable_seen}");
}

#[test]
fn capset_exact_matches_oracle_on_flat_geometries() {
    // binary spaces: no three points are ever collinear, the whole space
    // is a cap
    for dim in [1usize, 2, 3] {
        let f2 = FieldSpec::of_order(2).unwrap();
        let res = sepcodes::construct::capset_exact(&f2, dim, 1 << 24).unwrap();
        assert!(res.exhaustive);
        assert_eq!(res.cap.len(), 1 << dim);
        assert_eq!(brute_force_max_cap(&f2, dim), 1 << dim);
    }
}

#[test]
fn search_agrees_with_symmetry_free_enumeration() {
    // the symmetry-reduced search must find the same optimum as checking
    // every subset of the word space outright
    use sepcodes::search::search_optimal;
    use sepcodes::verify::{is_fpc, Property};

    for (t, n, q) in [(2usize, 2usize, 2u32), (2, 2, 3), (3, 3, 2), (2, 3, 2)] {
        let sc = search_optimal(t, n, q, Property::Sc, 1 << 30).unwrap();
        assert!(sc.exhaustive);
        let brute = brute_force_optimum(n, q, |code| is_sc(code, t).verdict);
        assert_eq!(sc.optimum, brute, "sc (t,n,q)=({t},{n},{q})");

        let ssc = search_optimal(t, n, q, Property::Ssc, 1 << 30).unwrap();
        assert!(ssc.exhaustive);
        let brute = brute_force_optimum(n, q, |code| is_ssc(code, t).unwrap().verdict);
        assert_eq!(ssc.optimum, brute, "ssc (t,n,q)=({t},{n},{q})");

        let fpc = search_optimal(t, n, q, Property::Fpc, 1 << 30).unwrap();
        assert!(fpc.exhaustive);
        let brute = brute_force_optimum(n, q, |code| is_fpc(code, t).verdict);
        assert_eq!(fpc.optimum, brute, "fpc (t,n,q)=({t},{n},{q})");
    }
}

#[test]
fn cap_files_feed_the_pipeline() {
    let f7 = FieldSpec::of_order(7).unwrap();
    let cap = capset_greedy(&f7, 2, &PointOrder::Canonical).unwrap();
    let parsed = CapSet::parse(&cap.serialize()).unwrap();
    let a = build_ssc(7, 2, Some(&cap)).unwrap();
    let b = build_ssc(7, 2, Some(&parsed)).unwrap();
    assert_eq!(a.code, b.code);
    assert_eq!(a.provenance.subset, b.provenance.subset);
}
