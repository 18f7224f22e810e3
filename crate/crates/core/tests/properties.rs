mod common;

use common::*;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::collection::{btree_map, btree_set, vec};
use proptest::prelude::*;
use quadec_core::rational::{int, rat};
use quadec_core::{
    classify_quadrinomial, compose, critical_value_witness, decompose_oracle, dickson,
    dickson_match, dziury_check, format_poly, gcd, gv_determinant, linear_substitute,
    mason_stothers_check, match_standard_pair, max_nonzero_root_multiplicity, parse_poly, radical,
    realize, search_solutions, theorem_a_verdict, theorem_b_verdict, Degree, DicksonSpec,
    IndexSequences, LacunaryProfile, LinearMap, PairKind, Quadrinomial, Rational, SparsePoly,
    StandardPair, DEFAULT_MAX_BOUND,
};

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (prop_oneof![-6i64..=-1, 1i64..=6], 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn nonzero_integer() -> impl Strategy<Value = Rational> {
    prop_oneof![-4i64..=-1, 1i64..=4].prop_map(int)
}

fn poly_up_to(max_deg: u32, max_terms: usize) -> impl Strategy<Value = SparsePoly> {
    btree_map(0..=max_deg, nonzero_rational(), 0..=max_terms).prop_map(SparsePoly::from_terms)
}

fn poly_of_degree(deg: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = SparsePoly> {
    (deg, nonzero_rational()).prop_flat_map(|(d, lc)| {
        btree_map(0..d.max(1), nonzero_rational(), 0..=3).prop_map(move |lower| {
            let lower = if d == 0 { SparsePoly::zero() } else { SparsePoly::from_terms(lower) };
            &lower + &SparsePoly::monomial(lc.clone(), d)
        })
    })
}

fn integer_poly(deg: std::ops::RangeInclusive<u32>) -> impl Strategy<Value = SparsePoly> {
    (deg, nonzero_integer()).prop_flat_map(|(d, lc)| {
        btree_map(0..d, nonzero_integer(), 0..=3).prop_map(move |lower| {
            &SparsePoly::from_terms(lower) + &SparsePoly::monomial(lc.clone(), d)
        })
    })
}

fn monic_poly(max_deg: u32) -> impl Strategy<Value = SparsePoly> {
    (0..=max_deg).prop_flat_map(|d| {
        btree_map(0..d.max(1), nonzero_rational(), 0..=2).prop_map(move |lower| {
            let lower = if d == 0 { SparsePoly::zero() } else { SparsePoly::from_terms(lower) };
            &lower + &SparsePoly::monomial(Rational::one(), d)
        })
    })
}

fn linear_map() -> impl Strategy<Value = LinearMap> {
    (nonzero_rational(), prop_oneof![Just(int(0)), nonzero_rational()])
        .prop_map(|(u, v)| LinearMap::new(u, v).unwrap())
}

fn shifting_map() -> impl Strategy<Value = LinearMap> {
    (nonzero_rational(), nonzero_rational()).prop_map(|(u, v)| LinearMap::new(u, v).unwrap())
}

fn exponent_triple() -> impl Strategy<Value = (u32, u32, u32)> {
    btree_set(1u32..=14, 3).prop_map(|s| {
        let v: Vec<u32> = s.into_iter().collect();
        (v[2], v[1], v[0])
    })
}

fn sequence_pair() -> impl Strategy<Value = (Vec<u64>, Vec<u64>)> {
    (0usize..=6).prop_flat_map(|len| {
        (btree_set(0u64..=12, len), btree_set(0u64..=12, len))
            .prop_map(|(a, b)| (a.into_iter().collect(), b.into_iter().collect()))
    })
}

fn is_squarefree(p: &SparsePoly) -> bool {
    gcd(p, &p.derivative()).is_constant()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn composition_is_associative(f in poly_up_to(4, 3), g in poly_up_to(4, 3), h in poly_up_to(4, 3)) {
        prop_assert_eq!(compose(&compose(&f, &g), &h), compose(&f, &compose(&g, &h)));
    }

    #[test]
    fn composition_multiplies_degrees(g in poly_of_degree(1..=5), h in poly_of_degree(1..=5)) {
        let expected = Degree::Finite(g.degree().finite().unwrap() * h.degree().finite().unwrap());
        prop_assert_eq!(compose(&g, &h).degree(), expected);
    }

    #[test]
    fn composition_agrees_with_evaluation(g in poly_up_to(5, 4), h in poly_up_to(5, 4)) {
        prop_assert!(composes_to(&g, &h, &compose(&g, &h)));
    }

    #[test]
    fn linear_substitution_inverts(g in poly_up_to(8, 5), m in linear_map()) {
        let there = linear_substitute(&g, &m);
        prop_assert_eq!(linear_substitute(&there, &m.inverse()), g.clone());
        prop_assert_eq!(there, compose(&g, &m.as_poly()));
    }

    #[test]
    fn radical_divides_and_is_squarefree(
        factors in vec((poly_of_degree(1..=2), 1u32..=3), 1..=3),
    ) {
        let f = factors.iter().fold(SparsePoly::one(), |acc, (p, e)| &acc * &p.pow(*e));
        let r = radical(&f).unwrap();
        prop_assert!(r.divides(&f));
        prop_assert!(is_squarefree(&r));
        prop_assert!(r.degree() <= factors.iter().map(|(p, _)| p.degree()).fold(Degree::Finite(0), |a, b| a + b));
    }

    #[test]
    fn repeated_nonzero_roots_need_many_terms(
        z in nonzero_rational(),
        m in 1u32..=5,
        q in poly_of_degree(0..=5),
    ) {
        prop_assume!(!q.evaluate(&z).is_zero());
        let f = &SparsePoly::from_terms([(1, int(1)), (0, -z)]).pow(m) * &q;
        prop_assert!(f.term_count() > m as usize);
        let mult = max_nonzero_root_multiplicity(&f).unwrap();
        prop_assert!(mult >= m);
        prop_assert!(f.term_count() > mult as usize);
    }

    #[test]
    fn mason_stothers_on_coprime_triples(a in poly_of_degree(0..=5), b in poly_of_degree(0..=5)) {
        let c = &a + &b;
        let report = mason_stothers_check(&a, &b, &c);
        prop_assume!(report.is_ok());
        let report = report.unwrap();
        prop_assert!(report.holds, "{:?}", report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn decompositions_are_sound_and_find_the_planted_split(
        g in poly_of_degree(2..=3),
        h in poly_of_degree(2..=3),
    ) {
        let f = compose(&g, &h);
        let found = decompose_oracle(&f).unwrap();
        for d in &found {
            prop_assert!(composes_to(&d.g, &d.h, &f));
            prop_assert_eq!(d.h.leading_coefficient(), int(1));
            prop_assert!(d.h.constant_term().is_zero());
        }
        prop_assert!(found.iter().any(|d| d.h.degree() == h.degree()));
        if let Ok(q) = Quadrinomial::from_poly(&f) {
            prop_assert_eq!(classify_quadrinomial(&q), found);
        }
    }

    #[test]
    fn critical_values_repeat_along_h(
        roots in (nonzero_integer(), nonzero_integer()),
        lc in nonzero_rational(),
        shift in nonzero_rational(),
        h in poly_of_degree(1..=3),
    ) {
        // g' = lc (x - r1)(x - r2) has rational roots by construction
        let (r1, r2) = roots;
        let dg = SparsePoly::from_terms([(2, lc.clone()), (1, -&lc * (&r1 + &r2)), (0, &lc * &r1 * &r2)]);
        let g = &SparsePoly::from_terms([
            (3, dg.coeff(2) / int(3)),
            (2, dg.coeff(1) / int(2)),
            (1, dg.coeff(0)),
        ]) + &SparsePoly::constant(shift);
        let w = critical_value_witness(&g, &h).unwrap().expect("g' has rational roots");
        prop_assert!(w.beta == r1.clone().min(r2));
        prop_assert!(w.gcd_degree >= h.degree().finite().unwrap());
    }

    #[test]
    fn quadrinomial_classification_matches_oracle(
        (n1, n2, n3) in exponent_triple(),
        a in nonzero_integer(),
        b in nonzero_integer(),
        c in nonzero_integer(),
        d in prop_oneof![Just(int(0)), nonzero_rational()],
    ) {
        let q = Quadrinomial::new(a, b, c, d, n1, n2, n3).unwrap();
        let classified = classify_quadrinomial(&q);
        prop_assert_eq!(&classified, &decompose_oracle(&q.to_poly()).unwrap());
        for dec in &classified {
            prop_assert_eq!(dec.compose(), q.to_poly());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dickson_composition_identity(m in 1u32..=5, n in 1u32..=5, a in nonzero_rational()) {
        let inner = dickson(&DicksonSpec::new(n, a.clone()).unwrap());
        let outer = dickson(&DicksonSpec::new(m, quadec_core::rational::pow_i(&a, n.into())).unwrap());
        prop_assert_eq!(outer.compose(&inner), dickson(&DicksonSpec::new(m * n, a).unwrap()));
    }

    #[test]
    fn dickson_formula_matches_recurrence(n in 1u32..=30, a in prop_oneof![Just(int(0)), nonzero_rational()]) {
        let closed = dickson(&DicksonSpec::new(n, a.clone()).unwrap());
        prop_assert_eq!(&closed, &dickson_recurrence(n, &a));
        if a.is_zero() {
            prop_assert_eq!(closed, SparsePoly::monomial(Rational::one(), n));
        }
    }

    #[test]
    fn dickson_match_recovers_substitutions(n in 2u32..=7, a in nonzero_rational(), m in linear_map()) {
        let f = linear_substitute(&dickson(&DicksonSpec::new(n, a).unwrap()), &m.inverse());
        let found = dickson_match(&f).unwrap().expect("planted Dickson polynomial");
        let back = linear_substitute(&f, &LinearMap::new(found.u.clone(), found.v.clone()).unwrap());
        prop_assert_eq!(back, dickson(&DicksonSpec::new(n, found.gamma).unwrap()));
    }

    #[test]
    fn dickson_match_output_resubstitutes(f in poly_of_degree(1..=6)) {
        if let Some(found) = dickson_match(&f).unwrap() {
            let n = f.degree().finite().unwrap();
            let back = linear_substitute(&f, &LinearMap::new(found.u, found.v).unwrap());
            prop_assert_eq!(back, dickson(&DicksonSpec::new(n, found.gamma).unwrap()));
        }
    }

    #[test]
    fn gv_determinant_matches_permutation_expansion((a, b) in sequence_pair()) {
        let s = IndexSequences::new(a.clone(), b.clone()).unwrap();
        let det = gv_determinant(&s);
        let matrix: Vec<Vec<BigInt>> = a.iter().map(|&i| b.iter().map(|&j| pascal(i, j)).collect()).collect();
        prop_assert_eq!(&det.value, &leibniz_det(&matrix));
        prop_assert!(det.value >= BigInt::zero());
        prop_assert_eq!(det.value > BigInt::zero(), s.dominance());
    }

    #[test]
    fn shifted_polynomials_keep_many_terms(g in poly_of_degree(1..=15), m in shifting_map()) {
        let r = dziury_check(&g, &m).unwrap();
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn format_then_parse_is_identity(p in poly_up_to(30, 8)) {
        let text = format_poly(&p);
        let parsed = parse_poly(&text).unwrap();
        prop_assert_eq!(&parsed, &p);
        prop_assert_eq!(format_poly(&parsed), text);
    }
}

fn rescale(q: &Quadrinomial, s: &[Rational; 4]) -> Quadrinomial {
    let [n1, n2, n3] = q.exponents();
    Quadrinomial::new(&q.a * &s[0], &q.b * &s[1], &q.c * &s[2], &q.d * &s[3], n1, n2, n3).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn verdicts_ignore_coefficient_magnitudes(
        (n1, n2, n3) in exponent_triple(),
        (m1, m2, m3) in exponent_triple(),
        scales in [nonzero_rational(), nonzero_rational(), nonzero_rational(), nonzero_rational()],
        other in [nonzero_rational(), nonzero_rational(), nonzero_rational(), nonzero_rational()],
    ) {
        let f = Quadrinomial::new(int(1), int(1), int(1), int(1), n1, n2, n3).unwrap();
        let g = Quadrinomial::new(int(1), int(-1), int(2), int(0), m1, m2, m3).unwrap();
        let base = theorem_a_verdict(&f, &g);
        prop_assert_eq!(&base, &theorem_a_verdict(&rescale(&f, &scales), &rescale(&g, &other)));

        let profile = LacunaryProfile::from_poly(&f.to_poly()).unwrap();
        let trinomial = SparsePoly::from_int_terms(&[(m1, 1), (m2, 1), (m3, 1)]);
        let scaled_profile = LacunaryProfile::from_poly(&rescale(&f, &scales).to_poly()).unwrap();
        let scaled_trinomial = SparsePoly::from_terms([(m1, other[0].clone()), (m2, other[1].clone()), (m3, other[2].clone())]);
        prop_assert_eq!(
            theorem_b_verdict(&profile, &trinomial).unwrap(),
            theorem_b_verdict(&scaled_profile, &scaled_trinomial).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_agrees_with_double_loop(f in integer_poly(1..=4), g in integer_poly(1..=4), bound in 1u64..=50) {
        let fast = search_solutions(&f, &g, bound, DEFAULT_MAX_BOUND).unwrap();
        prop_assert_eq!(fast, naive_search(&f, &g, bound as i64));
    }

    #[test]
    fn search_is_symmetric(f in poly_of_degree(1..=4), g in poly_of_degree(1..=4), bound in 1u64..=200) {
        let forward = search_solutions(&f, &g, bound, DEFAULT_MAX_BOUND).unwrap();
        let mut backward: Vec<(i64, i64)> = search_solutions(&g, &f, bound, DEFAULT_MAX_BOUND)
            .unwrap()
            .into_iter()
            .map(|(x, y)| (y, x))
            .collect();
        backward.sort_unstable();
        prop_assert_eq!(forward, backward);
    }
}

fn coprime_pair(max: u32, want: u32) -> impl Strategy<Value = (u32, u32)> {
    (2..=max, 2..=max).prop_filter("gcd", move |&(m, n)| num_integer::gcd(m, n) == want)
}

fn round_trip(kind: PairKind, switched: bool) -> Result<(), TestCaseError> {
    let pair = StandardPair::new(kind, switched).unwrap();
    let (left, right) = realize(&pair).unwrap();
    prop_assert_eq!(match_standard_pair(&left, &right), Some(pair));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn first_kind_round_trips(
        m in 2u32..=5,
        r in 0u32..5,
        a in nonzero_rational(),
        p in monic_poly(3),
    ) {
        prop_assume!(r < m && num_integer::gcd(r, m) == 1);
        round_trip(PairKind::First { m, r, a, p }, false)?;
    }

    #[test]
    fn second_kind_round_trips(a in nonzero_rational(), b in nonzero_rational(), p in monic_poly(3), switched: bool) {
        round_trip(PairKind::Second { a, b, p }, switched)?;
    }

    #[test]
    fn third_kind_round_trips((m, n) in coprime_pair(7, 1), a in nonzero_rational()) {
        let pair = StandardPair::new(PairKind::Third { m, n, a }, false).unwrap();
        let (left, right) = realize(&pair).unwrap();
        prop_assert_eq!((left.degree(), right.degree()), (Degree::Finite(m), Degree::Finite(n)));
        round_trip(pair.kind().clone(), false)?;
    }

    #[test]
    fn fourth_kind_round_trips((m, n) in coprime_pair(10, 2), a in nonzero_rational(), b in nonzero_rational(), switched: bool) {
        let pair = StandardPair::new(PairKind::Fourth { m, n, a, b }, switched).unwrap();
        let (left, right) = realize(&pair).unwrap();
        let degrees = if switched { (n, m) } else { (m, n) };
        prop_assert_eq!((left.degree(), right.degree()), (Degree::Finite(degrees.0), Degree::Finite(degrees.1)));
        round_trip(pair.kind().clone(), switched)?;
    }

    #[test]
    fn fifth_kind_round_trips(a in nonzero_rational(), switched: bool) {
        let pair = StandardPair::new(PairKind::Fifth { a }, switched).unwrap();
        let (left, right) = realize(&pair).unwrap();
        let degrees = if switched { (4, 6) } else { (6, 4) };
        prop_assert_eq!((left.degree(), right.degree()), (Degree::Finite(degrees.0), Degree::Finite(degrees.1)));
        round_trip(pair.kind().clone(), switched)?;
    }

    #[test]
    fn invalid_gcds_are_rejected((m, n) in (1u32..=12, 1u32..=12), a in nonzero_rational()) {
        let g = num_integer::gcd(m, n);
        prop_assert_eq!(StandardPair::new(PairKind::Third { m, n, a: a.clone() }, false).is_ok(), g == 1);
        prop_assert_eq!(StandardPair::new(PairKind::Fourth { m, n, a: a.clone(), b: a }, false).is_ok(), g == 2);
    }
}
