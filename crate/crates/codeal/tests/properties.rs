//! Cross-module property tests: crossing round-trips, order axioms, text
//! round-trips, and the congruence behaviour of the decoded image.

use proptest::prelude::*;

use codeal::crossing::{down, up, FieldVector, Monomial, TermOrder};
use codeal::field::FieldSpec;
use codeal::gbasis::{reduce, reduced_gb};
use codeal::samples;
use codeal::textio::parse_monomial;

fn spec_strategy() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7, 8, 9]).prop_map(samples::field)
}

fn vector_strategy(spec: &FieldSpec, n: usize) -> impl Strategy<Value = FieldVector> {
    let q = spec.q();
    let spec = spec.clone();
    prop::collection::vec(0..q, n).prop_map(move |codes| {
        FieldVector::new(
            codes
                .iter()
                .map(|&c| spec.element_from_int(c).unwrap())
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn down_up_round_trips_and_degree_is_weight(
        (spec, v) in spec_strategy().prop_flat_map(|spec| {
            let n = 1..=5usize;
            n.prop_flat_map(move |n| {
                let vs = vector_strategy(&spec, n);
                (Just(spec.clone()), vs)
            })
        })
    ) {
        let m = up(&v, &spec);
        prop_assert_eq!(down(m.monomial(), &spec), v.clone());
        prop_assert_eq!(m.degree() as usize, v.weight());
        prop_assert!(m.monomial().is_canonical());
    }

    #[test]
    fn up_down_never_increases_degree(
        (spec, exps) in spec_strategy().prop_flat_map(|spec| {
            let qm1 = (spec.q() - 1) as usize;
            let ex = prop::collection::vec(0u32..6, 3 * qm1);
            (Just(spec), ex)
        })
    ) {
        let m = Monomial::from_exps(3, spec.q(), exps);
        let v = down(&m, &spec);
        let projected = up(&v, &spec);
        prop_assert!(projected.degree() <= m.degree());
        prop_assert_eq!(down(projected.monomial(), &spec), v);
    }

    #[test]
    fn deglex_is_total_multiplicative_with_one_minimal(
        (spec, e1, e2, e3) in spec_strategy().prop_flat_map(|spec| {
            let qm1 = (spec.q() - 1) as usize;
            let e = || prop::collection::vec(0u32..3, 2 * qm1);
            (Just(spec), e(), e(), e())
        })
    ) {
        let q = spec.q();
        let ord = TermOrder::deglex_default(2, q);
        let a = Monomial::from_exps(2, q, e1);
        let b = Monomial::from_exps(2, q, e2);
        let m = Monomial::from_exps(2, q, e3);
        let ab = ord.compare(&a, &b);
        prop_assert_eq!(ord.compare(&b, &a), ab.reverse());
        if ab == std::cmp::Ordering::Equal {
            prop_assert_eq!(&a, &b);
        }
        // Multiplicative and 1 is the unique minimum.
        prop_assert_eq!(ord.compare(&a.mul(&m), &b.mul(&m)), ab);
        let one = Monomial::one(2, q);
        if !a.is_one() {
            prop_assert_eq!(ord.compare(&one, &a), std::cmp::Ordering::Less);
        }
    }

    #[test]
    fn monomial_text_round_trips(
        (spec, exps) in spec_strategy().prop_flat_map(|spec| {
            let qm1 = (spec.q() - 1) as usize;
            let ex = prop::collection::vec(0u32..4, 2 * qm1);
            (Just(spec), ex)
        })
    ) {
        let m = Monomial::from_exps(2, spec.q(), exps);
        let text = m.to_string();
        let parsed = parse_monomial(&text, 2, spec.q()).unwrap();
        prop_assert_eq!(parsed.clone(), m);
        prop_assert_eq!(parsed.to_string(), text);
    }

    #[test]
    fn equal_images_share_normal_forms(exps in prop::collection::vec(0u32..3, 12), bump in 0usize..12) {
        // Raising one exponent by p leaves the decoded vector unchanged,
        // so the two monomials are congruent modulo the table relations
        // and must share a normal form for any code ideal. The same holds
        // for the canonical projection up(down(m)).
        let code = samples::example_code_f6_3();
        let spec = code.spec().clone();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let m1 = Monomial::from_exps(6, 3, exps.clone());
        let mut bumped = exps;
        bumped[bump] += 3;
        let m2 = Monomial::from_exps(6, 3, bumped);
        prop_assert_eq!(down(&m1, &spec), down(&m2, &spec));
        prop_assert_eq!(reduce(&m1, &gb), reduce(&m2, &gb));
        let projected = up(&down(&m1, &spec), &spec);
        prop_assert_eq!(reduce(projected.monomial(), &gb), reduce(&m1, &gb));
    }

    #[test]
    fn coset_leader_oracle_matches_reduction(word in prop::collection::vec(0u32..3, 6)) {
        let code = samples::example_code_f6_3();
        let spec = code.spec().clone();
        let ord = TermOrder::deglex_default(6, 3);
        let gb = reduced_gb(&code, &ord).unwrap();
        let y = FieldVector::new(
            word.iter().map(|&c| spec.element_from_int(c).unwrap()).collect(),
        );
        let leader = code.coset_leader_bruteforce(&y, &ord).unwrap();
        let nf = reduce(up(&y, &spec).monomial(), &gb);
        prop_assert_eq!(up(&leader, &spec), nf);
    }
}
