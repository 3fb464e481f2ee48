use critshare::access::{basis_of, threshold_structure, AccessStructure, PlayerSet};
use critshare::critical::is_uniquely_completable;
use critshare::document::{parse_hex, parse_partial, partial_document, to_hex, validate, Origin};
use critshare::latin::{count_completions, random_latin_square, Budget, PartialLatinSquare};
use critshare::lsss::Probability;
use critshare::rsa::{factorial, lagrange_at_zero};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn sub_partial(order: usize, seed: u64, mask: u64) -> (PartialLatinSquare, Vec<critshare::latin::Triple>) {
    let square = random_latin_square(order, seed).unwrap();
    let triples: Vec<_> = square.triples().collect();
    let chosen = triples.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, t)| *t);
    let rest = triples.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 0).map(|(_, t)| *t).collect();
    (PartialLatinSquare::from_triples(order, chosen).unwrap(), rest)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn adding_entries_never_adds_completions(order in 2usize..=5, seed: u64, mask: u64, pick: usize) {
        let (p, rest) = sub_partial(order, seed, mask);
        prop_assume!(!rest.is_empty());
        let mut q = p.clone();
        q.insert(rest[pick % rest.len()]).unwrap();
        let before = count_completions(&p, Budget::unlimited()).unwrap().value();
        let after = count_completions(&q, Budget::unlimited()).unwrap().value();
        prop_assert!(after <= before);
        prop_assert!(after >= 1);
    }

    #[test]
    fn supersets_of_uniquely_completable_sets_stay_so(order in 2usize..=4, seed: u64, mask: u64, extra: u64) {
        let (p, _) = sub_partial(order, seed, mask);
        prop_assume!(is_uniquely_completable(&p, Budget::unlimited()).unwrap());
        let (q, _) = sub_partial(order, seed, mask | extra);
        prop_assert!(is_uniquely_completable(&q, Budget::unlimited()).unwrap());
    }

    #[test]
    fn basis_is_idempotent_and_generates_the_same_structure(sets in prop::collection::vec(1u64..64, 0..8)) {
        let sets: Vec<PlayerSet> = sets.into_iter().map(PlayerSet::from_bits).collect();
        let basis = basis_of(&sets);
        prop_assert_eq!(basis_of(&basis), basis.clone());
        let a = AccessStructure::from_collection(6, sets.iter().copied()).unwrap();
        for bits in 0u64..64 {
            let s = PlayerSet::from_bits(bits);
            let expected = sets.iter().any(|g| g.is_subset(s));
            prop_assert_eq!(a.is_authorized(s), expected);
        }
    }

    #[test]
    fn threshold_closure_is_exactly_the_large_sets(w in 1usize..=8, t in 1usize..=8) {
        prop_assume!(t <= w);
        let s = threshold_structure(t, w).unwrap();
        let closure = s.closure();
        prop_assert!(closure.iter().all(|x| x.len() >= t));
        let expected = (0u64..1 << w).filter(|b| b.count_ones() as usize >= t).count();
        prop_assert_eq!(closure.len(), expected);
        prop_assert!(s.basis().iter().all(|b| b.len() == t));
    }

    #[test]
    fn partial_documents_round_trip(order in 1usize..=7, seed: u64, mask: u64, origin_seed: u64) {
        let (p, _) = sub_partial(order, seed, mask);
        let text = partial_document(&p, Origin::Seed(origin_seed)).emit();
        let doc = validate(&text).unwrap();
        prop_assert_eq!(doc.emit(), text);
        prop_assert_eq!(parse_partial(&doc).unwrap(), p);
    }

    #[test]
    fn hex_round_trips(hi: u128, lo: u128) {
        let n = (BigUint::from(hi) << 128) + BigUint::from(lo);
        prop_assert_eq!(parse_hex(&to_hex(&n)), Some(n));
    }

    #[test]
    fn probabilities_are_reduced(num in 0u64..1000, den in 1u64..1000) {
        prop_assume!(num <= den);
        let p = Probability::new(num, den).unwrap();
        prop_assert_eq!(num_integer::gcd(p.numerator(), p.denominator()), 1);
        prop_assert_eq!(p.numerator() * den, num * p.denominator());
    }

    #[test]
    fn integer_lagrange_interpolates_at_zero(
        w in 1usize..=7,
        coeffs in prop::collection::vec(-1000i64..1000, 1..=7),
        mask in 1u32..128,
    ) {
        let players: Vec<u32> = (1..=w as u32).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        prop_assume!(!players.is_empty() && coeffs.len() <= players.len());
        let delta = factorial(w);
        let f = |x: i64| coeffs.iter().rev().fold(BigInt::from(0), |acc, &c| acc * x + c);
        let lambdas = lagrange_at_zero(&players, &delta);
        let sum: BigInt = players.iter().zip(&lambdas).map(|(&j, l)| l * f(j as i64)).sum();
        prop_assert_eq!(sum, BigInt::from(delta) * f(0));
    }
}
