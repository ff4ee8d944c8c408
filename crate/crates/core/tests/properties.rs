//! Property tests over seeded random instances.

use defect_core::groebner::Ideal;
use defect_core::invariants::{report, ExtNat, InvariantConfig, InvariantReport};
use defect_core::oracle::{build_model, oracle_report};
use defect_core::poly::{Field, Monomial, PolyRing, Polynomial, DEFAULT_PRIME};
use defect_core::presentation::{minimalize, AlgebraPresentation};
use defect_core::random::{add_redundant, permute_relations, random_artinian, random_graded, rename_all};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn field(prime: bool) -> Field {
    if prime {
        Field::Prime(DEFAULT_PRIME)
    } else {
        Field::Rational
    }
}

fn artinian(seed: u64, prime: bool) -> AlgebraPresentation {
    random_artinian(&mut ChaCha8Rng::seed_from_u64(seed), field(prime), "A")
}

fn report_of(p: &AlgebraPresentation) -> InvariantReport {
    report(&p.validate().expect("valid"), &InvariantConfig::default()).expect("report")
}

fn ext_nat() -> impl Strategy<Value = ExtNat> {
    prop_oneof![4 => (0u64..1000).prop_map(ExtNat::Finite), 1 => Just(ExtNat::Infinite)]
}

fn polynomial(ring: &std::sync::Arc<PolyRing>) -> impl Strategy<Value = Polynomial> {
    let ring = ring.clone();
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, 3)), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(ring.zero(), |acc, (c, e)| &acc + &ring.term(ring.field().from_i64(c), Monomial::new(e)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn report_identities_hold(seed in any::<u64>(), prime in any::<bool>()) {
        let r = report_of(&artinian(seed, prime));
        prop_assert_eq!(r.check_identities(), Ok(()));
        let g = random_graded(&mut ChaCha8Rng::seed_from_u64(seed), field(prime), "G");
        prop_assert_eq!(report_of(&g).check_identities(), Ok(()));
    }

    #[test]
    fn oracle_matches_pipeline(seed in any::<u64>(), prime in any::<bool>()) {
        let p = artinian(seed, prime);
        let local = p.validate().unwrap();
        let mut r = report(&local, &InvariantConfig::default()).unwrap();
        r.flat_certificate = None;
        let m = build_model(&local).unwrap();
        prop_assert!(m.maps_commute());
        prop_assert_eq!(m.koszul_h1_dim(), r.mu);
        prop_assert_eq!(oracle_report(&m).unwrap(), r);
    }

    #[test]
    fn presentation_changes_keep_the_report(seed in any::<u64>(), prime in any::<bool>()) {
        let p = artinian(seed, prime);
        let expected = report_of(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        prop_assert_eq!(&report_of(&add_redundant(&mut rng, &p).unwrap()), &expected);
        prop_assert_eq!(&report_of(&permute_relations(&mut rng, &p).unwrap()), &expected);
        prop_assert_eq!(&report_of(&rename_all(&p, "_r").unwrap()), &expected);
    }

    #[test]
    fn minimalize_keeps_the_report(seed in any::<u64>(), prime in any::<bool>()) {
        let p = artinian(seed, prime);
        let m = minimalize(&p).unwrap();
        let before = report_of(&p);
        let after = report_of(&m);
        prop_assert_eq!(m.vars().len(), before.embdim);
        prop_assert_eq!(after, before);
        prop_assert_eq!(
            m.validate().unwrap().vector_dimension(),
            p.validate().unwrap().vector_dimension()
        );
    }

    #[test]
    fn reseeding_keeps_the_report(seed in any::<u64>(), type_seed in any::<u64>()) {
        let p = artinian(seed, false);
        let local = p.validate().unwrap();
        let a = report(&local, &InvariantConfig::default()).unwrap();
        let b = report(&local, &InvariantConfig::with_seed(type_seed)).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn groebner_basis_properties(seed in any::<u64>(), prime in any::<bool>()) {
        let p = artinian(seed, prime);
        let ideal = p.relations();
        let gb = ideal.groebner();
        prop_assert!(gb.is_reduced());
        for g in ideal.gens() {
            prop_assert!(gb.contains(g));
        }
        let mut gens = ideal.gens().to_vec();
        gens.reverse();
        let reversed = Ideal::new(ideal.ring(), gens).unwrap();
        let reversed_gb = reversed.groebner();
        prop_assert_eq!(reversed_gb.elements(), gb.elements());
        let standard = gb.standard_monomials().unwrap();
        prop_assert_eq!(standard.len() as u64, gb.quotient_dimension().unwrap());
        let lead = gb.lead_ideal().groebner();
        for m in &standard {
            let f = ideal.ring().monomial(m.clone());
            prop_assert_eq!(gb.normal_form(&f).unwrap(), f.clone());
            prop_assert!(!lead.contains(&f));
        }
    }

    #[test]
    fn normal_form_is_a_retraction(seed in any::<u64>(), prime in any::<bool>(), k in 0usize..4) {
        let p = artinian(seed, prime);
        let ring = p.ring().clone();
        let gb = p.relations().groebner();
        let linear = (0..ring.nvars()).fold(ring.one(), |acc, i| &acc + &ring.var(i));
        let f = (0..k + 2).fold(ring.one(), |acc, _| &acc * &linear);
        let nf = gb.normal_form(&f).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&(&f - &nf)));
    }

    #[test]
    fn ext_nat_addition(a in ext_nat(), b in ext_nat(), c in ext_nat()) {
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + ExtNat::Finite(0), a);
        prop_assert_eq!(a + ExtNat::Infinite, ExtNat::Infinite);
        prop_assert!(a + b >= a);
    }
}

fn polynomial_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    any::<bool>().prop_flat_map(|prime| {
        let ring = PolyRing::grevlex(field(prime), &["x", "y", "z"]);
        (polynomial(&ring), polynomial(&ring), polynomial(&ring))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn polynomial_ring_axioms((f, g, h) in polynomial_triple()) {
        prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f + &(-&g), &f - &g);
    }
}
