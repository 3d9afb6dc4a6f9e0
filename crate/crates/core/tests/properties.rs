use cobdist::algebra::{
    frac, local_algebra_dimension, local_intersection_multiplicity, rat, resultant, MultiPoly,
    Rational,
};
use cobdist::cobordism::{
    affine_curve_chi, chi_dn_bounds, compose, stabilization_edge, theorem1_chain, theorem_display,
    Branch, CobordismChain,
};
use cobdist::hirano::lemma_chi_audit;
use cobdist::invariants::{
    check_lipschitz_on_chain, dsm_lower, eq4_check, knotify, SignatureInvariant, TableInvariant,
    LipschitzInvariant,
};
use cobdist::torus::{
    fiber_b1, seifert_matrix_positive_braid, signature, signature_oracle, torus_braid_word,
    Convention, TorusLink,
};
use proptest::prelude::*;

const VARS: [&str; 3] = ["u", "v", "w"];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

fn poly_in(vars: &'static [&'static str], max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    let n = vars.len();
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, n), small_rational()),
        0..5,
    )
    .prop_map(move |terms| MultiPoly::from_terms(vars, terms))
}

fn uv() -> &'static [&'static str] {
    &VARS[..2]
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn add_then_subtract_is_identity(p in poly_in(&VARS, 3), q in poly_in(&VARS, 3)) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn ring_laws(p in poly_in(&VARS, 2), q in poly_in(&VARS, 2), r in poly_in(&VARS, 2)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn text_form_round_trips(p in poly_in(&VARS, 3)) {
        let back = MultiPoly::parse_with_vars(&p.to_string(), &VARS).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn resultant_swap_sign(p in poly_in(&VARS, 2), q in poly_in(&VARS, 2)) {
        let idx = 1;
        let (dp, dq) = (p.degree_in(idx), q.degree_in(idx));
        prop_assume!(dp.is_some() && dq.is_some());
        let (dp, dq) = (dp.unwrap(), dq.unwrap());
        let r1 = resultant(&p, &q, "v").unwrap();
        let r2 = resultant(&q, &p, "v").unwrap();
        let expected = if (dp * dq) % 2 == 1 { -&r2 } else { r2 };
        prop_assert_eq!(r1, expected);
    }

    #[test]
    fn transverse_pairs_meet_once(
        a in (-4i64..=4, -4i64..=4),
        b in (-4i64..=4, -4i64..=4),
        g_hi in poly_in(&VARS[..2], 3),
        h_hi in poly_in(&VARS[..2], 3),
    ) {
        prop_assume!(a.0 * b.1 - a.1 * b.0 != 0);
        // keep only the terms of degree >= 2
        let high = |p: &MultiPoly| MultiPoly::from_terms(
            uv(),
            p.terms().filter(|(e, _)| e[0] + e[1] >= 2).map(|(e, c)| (e.clone(), c.clone())),
        );
        let lin = |(x, y): (i64, i64)| MultiPoly::from_terms(
            uv(),
            [(vec![1, 0], rat(x)), (vec![0, 1], rat(y))],
        );
        let g = &lin(a) + &high(&g_hi);
        let h = &lin(b) + &high(&h_hi);
        prop_assert_eq!(local_intersection_multiplicity(&g, &h).unwrap(), 1);
        prop_assert_eq!(local_algebra_dimension(&g, &h).unwrap(), 1);
    }

    #[test]
    fn multiplicity_invariant_under_unimodular_maps(
        kind in 0usize..3,
        k in -3i64..=3,
        a in 1u32..=3,
        b in 1u32..=3,
        extra in poly_in(&VARS[..2], 4),
    ) {
        let u = MultiPoly::var("u", uv()).unwrap();
        let v = MultiPoly::var("v", uv()).unwrap();
        let high = MultiPoly::from_terms(
            uv(),
            extra.terms().filter(|(e, _)| e[0] + e[1] > a.max(b)).map(|(e, c)| (e.clone(), c.clone())),
        );
        let g = &(&u.pow(a) - &v.pow(b + 1)) + &high;
        let h = &(&u.pow(b) + &v.pow(a)) - &high;
        let images = match kind {
            0 => [&u + &v.scale(&rat(k)), v.clone()],
            1 => [u.clone(), &v + &u.scale(&rat(k))],
            _ => [v.clone(), u.clone()],
        };
        let before = local_intersection_multiplicity(&g, &h);
        let after = local_intersection_multiplicity(&g.compose(&images), &h.compose(&images));
        prop_assert_eq!(before.clone(), after);
        prop_assert_eq!(before.unwrap(), local_algebra_dimension(&g, &h).unwrap());
    }

    #[test]
    fn signature_symmetric_in_parameters(p in 2i64..=8, q in 2i64..=8) {
        let a = TorusLink::new(p, q).unwrap();
        let b = TorusLink::new(q, p).unwrap();
        prop_assert_eq!(a, b);
        let word_pq = torus_braid_word(p as u32, q as u32);
        let word_qp = torus_braid_word(q as u32, p as u32);
        let s_pq = seifert_matrix_positive_braid(&word_pq, p as u32, Convention::default()).unwrap();
        let s_qp = seifert_matrix_positive_braid(&word_qp, q as u32, Convention::default()).unwrap();
        prop_assert_eq!(s_pq.signature(), s_qp.signature());
        prop_assert_eq!(s_pq.signature(), signature_oracle(a));
    }

    #[test]
    fn mirror_negates_signature(p in 1i64..=9, q in 1i64..=12) {
        let k = TorusLink::new(p, q).unwrap();
        prop_assert_eq!(signature(k.mirror()), -signature(k));
        prop_assert_eq!(signature_oracle(k.mirror()), -signature_oracle(k));
    }

    #[test]
    fn signature_bounded_by_form_size(p in 2u32..=7, q in 2u32..=9) {
        let s = seifert_matrix_positive_braid(&torus_braid_word(p, q), p, Convention::default()).unwrap();
        prop_assert!(s.signature().unsigned_abs() as usize <= s.size());
        // the characteristic polynomial route is quartic; keep it to small forms
        if s.size() <= 20 {
            prop_assert_eq!(s.signature(), s.signature_via_charpoly());
        }
    }

    #[test]
    fn bounds_sandwich(d in prop_oneof![-60i64..=-1, 1i64..=60], n in -2000i64..=2000) {
        let b = chi_dn_bounds(d, n).unwrap();
        let iv = &b.interval;
        prop_assert!(iv.lower <= iv.upper);
        let (env_lo, env_hi) = theorem_display(d, n);
        prop_assert!(env_lo <= rat(iv.lower));
        prop_assert!(rat(iv.upper) <= env_hi);
        if d > 0 && n <= -1 {
            prop_assert_eq!(iv.exact(), Some(-(d - 1) * (d - 1) + n + 1));
            prop_assert_eq!(b.branch, if d == 1 { Branch::Unknot } else { Branch::C });
        }
        if let Some(w) = &iv.lower_witness {
            prop_assert_eq!(w.verify().unwrap(), iv.lower);
        }
    }

    #[test]
    fn compose_associative(d in 2i64..=40, extra in 0i64..=30) {
        let base = theorem1_chain(d).unwrap();
        let t = base.target().unwrap().q();
        let chain = base.then(stabilization_edge(t, t + extra));
        let e = &chain.edges;
        let left = compose(&CobordismChain::new(vec![
            compose(&CobordismChain::new(e[..2].to_vec())).unwrap(),
            compose(&CobordismChain::new(e[2..].to_vec())).unwrap(),
        ])).unwrap();
        let right = compose(&CobordismChain::new(vec![
            e[0].clone(),
            compose(&CobordismChain::new(e[1..].to_vec())).unwrap(),
        ])).unwrap();
        prop_assert_eq!(left.chi, right.chi);
        prop_assert_eq!(left.chi, chain.verify().unwrap());
        prop_assert_eq!((left.source, left.target), (right.source, right.target));
    }

    #[test]
    fn lemma_identity(m in 1i64..=10_000) {
        let (d, n) = (2 * m, 3 * m);
        prop_assert_eq!(-(d - 1) * (d - 1) + (m - 2) * n + 1, -m * m - 2 * m);
    }

    #[test]
    fn fiber_betti_of_two_strand_links(n in 1i64..=40) {
        prop_assert_eq!(fiber_b1(TorusLink::two(n + 1)).unwrap(), n as u64);
    }

    #[test]
    fn dsm_lower_nondecreasing(n in 0u64..1_000_000) {
        prop_assert!(dsm_lower(n) <= dsm_lower(n + 1));
    }

    #[test]
    fn eq4_with_signature(half in 1i64..=100) {
        let n = 2 * half;
        let d = dsm_lower(n as u64) as i64;
        let r = eq4_check(d, n, &SignatureInvariant, affine_curve_chi(n, d)).unwrap();
        prop_assert!(r.pass, "d={} n={} slack={}", d, n, r.slack);
    }

    #[test]
    fn lipschitz_on_stabilizations(a in 0i64..60, b in 0i64..60, mirror in any::<bool>()) {
        let (a, b) = (2 * a + 1, 2 * b + 1);
        let (a, b) = if mirror { (-a, -b) } else { (a, b) };
        let chain = CobordismChain::new(vec![stabilization_edge(a, b)]);
        prop_assert!(check_lipschitz_on_chain(&SignatureInvariant, &chain).unwrap().pass);
    }

    #[test]
    fn table_invariant_round_trip(values in prop::collection::vec((1i64..6, 1i64..9, -20i64..20, 1i64..5), 1..10)) {
        let mut csv = String::from("p,q,value\n");
        let mut expected = std::collections::HashMap::new();
        for (p, q, num, den) in values {
            let link = TorusLink::new(p, q).unwrap();
            if expected.contains_key(&link) {
                continue;
            }
            expected.insert(link, frac(num, den));
            csv.push_str(&format!("{p},{q},{}\n", cobdist::algebra::rational::fmt_rational(&frac(num, den))));
        }
        let inv = TableInvariant::from_reader("t", csv.as_bytes()).unwrap();
        for (link, v) in expected {
            prop_assert_eq!(inv.value_on(link).unwrap(), v);
        }
    }
}

#[test]
fn lemma_audit_holds() {
    for m in 1..200 {
        assert!(lemma_chi_audit(m).unwrap().ok(), "m = {m}");
    }
}

#[test]
fn lipschitz_on_knotified_engine_chains() {
    for d in 2..=20 {
        let chain = knotify(&theorem1_chain(d).unwrap()).unwrap();
        let r = check_lipschitz_on_chain(&SignatureInvariant, &chain).unwrap();
        assert!(r.pass, "d = {d}: {r:?}");
        for n in [-40, -1, 0, 1, d * d / 2, 3 * d * d / 4, d * d + 7] {
            let b = chi_dn_bounds(d, n).unwrap();
            let Some(w) = b.interval.lower_witness else { continue };
            let k = knotify(&w).unwrap();
            let r = check_lipschitz_on_chain(&SignatureInvariant, &k).unwrap();
            assert!(r.pass, "d = {d}, N = {n}: {r:?}");
        }
    }
}

#[test]
fn dsm_lower_asymptotics() {
    // dsm_lower(n) / sqrt(n) within 2% of 2/sqrt(3), compared after squaring
    let (lo, hi) = (frac(98 * 98, 100 * 100), frac(102 * 102, 100 * 100));
    for n in (10_000u64..=100_000).step_by(97) {
        let d = dsm_lower(n) as i64;
        let ratio = frac(3 * d * d, 4 * n as i64);
        assert!(lo <= ratio && ratio <= hi, "n = {n}, d = {d}");
    }
}
