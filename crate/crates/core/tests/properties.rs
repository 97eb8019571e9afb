//! Randomized invariants over generated semigroups, posets, and permutations.

use std::sync::Arc;

use proptest::prelude::*;

use numsgp::ideal::{self, InclusionPoset};
use numsgp::monoid::{self, IdealClassMonoid};
use numsgp::poset::{self, GapPoset};
use numsgp::semigroup::NumericalSemigroup;
use numsgp::NormalizedIdeal;

/// Random non-trivial semigroup: a handful of generators with gcd 1.
fn arb_semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    proptest::collection::vec(2u64..18, 2..5)
        .prop_filter_map("gcd must be 1", |gens| {
            let g = gens.iter().copied().fold(0u64, gcd);
            if g == 1 {
                NumericalSemigroup::from_generators(&gens).ok()
            } else {
                None
            }
        })
        .prop_filter("keep it small enough for monoid work", |s| s.genus() <= 8)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just(()).prop_perturb(move |_, mut rng| {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn gap_set_round_trip(s in arb_semigroup()) {
        let gaps: std::collections::BTreeSet<u64> = s.gap_set().into_iter().collect();
        let back = NumericalSemigroup::from_gaps(&gaps).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.min_generators(), s.min_generators());
    }

    #[test]
    fn genus_frobenius_symmetry_bounds(s in arb_semigroup()) {
        // F ≤ 2g − 1 with equality iff symmetric
        let g = s.genus() as i64;
        prop_assert!(s.frobenius() <= 2 * g - 1);
        prop_assert_eq!(s.frobenius() == 2 * g - 1, s.is_symmetric().unwrap_or(false));
    }

    #[test]
    fn reconstruction_is_permutation_invariant(s in arb_semigroup()) {
        prop_assume!(s.genus() > 0);
        let gp = GapPoset::build(&s).unwrap();
        let recovered = poset::reconstruct(gp.base()).unwrap();
        prop_assert_eq!(&recovered, &s);
    }

    #[test]
    fn reconstruction_survives_relabeling(
        (s, seed) in (arb_semigroup(), any::<u64>())
    ) {
        prop_assume!(s.genus() > 0);
        let gp = GapPoset::build(&s).unwrap();
        let n = gp.base().len();
        // seed-driven Fisher–Yates so the permutation shrinks with the input
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let shuffled = gp.base().permuted(&perm);
        prop_assert_eq!(&poset::reconstruct(&shuffled).unwrap(), &s);
    }

    #[test]
    fn isomorphism_detects_relabelings(
        (s, perm_src) in arb_semigroup().prop_flat_map(|s| {
            let n = s.gap_set().len().max(1);
            (Just(s), arb_perm(n))
        })
    ) {
        prop_assume!(s.genus() > 0);
        let gp = GapPoset::build(&s).unwrap();
        let shuffled = gp.base().permuted(&perm_src);
        let found = poset::poset_isomorphic(gp.base(), &shuffled);
        prop_assert!(found.is_some());
        let f = found.unwrap();
        for a in 0..gp.base().len() {
            for b in 0..gp.base().len() {
                prop_assert_eq!(gp.base().le(a, b), shuffled.le(f[a], f[b]));
            }
        }
    }

    #[test]
    fn preceq_implies_inclusion(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 6);
        let m = IdealClassMonoid::build(&s).unwrap();
        let am = m.abstract_monoid();
        for a in 0..am.len() {
            for b in 0..am.len() {
                if am.preceq(a, b) {
                    prop_assert!(m.elements()[a].is_subset_of(&m.elements()[b]).unwrap());
                }
            }
        }
    }

    #[test]
    fn ideal_count_and_cover_degree(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 6);
        let p = InclusionPoset::build(&s).unwrap();
        // antichain bijection: at least gaps+1 ideals (singletons + identity)
        prop_assert!(p.ideals().len() > s.genus() as usize);
        for i in p.ideals() {
            let covered = p.ideals().iter().filter(|j| i.covers(j).unwrap()).count();
            prop_assert_eq!(covered, i.covered_count());
        }
    }

    #[test]
    fn inclusion_recovery_round_trip(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 6);
        let p = InclusionPoset::build(&s).unwrap();
        prop_assert_eq!(&ideal::recover_from_inclusion_poset(p.base()).unwrap(), &s);
    }

    #[test]
    fn monoid_recovery_round_trip(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 6);
        let m = IdealClassMonoid::build(&s).unwrap();
        prop_assert_eq!(&monoid::recover_from_abstract_monoid(m.abstract_monoid()).unwrap(), &s);
    }

    #[test]
    fn ideal_addition_is_join_like(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 5);
        let ideals = ideal::enumerate_normalized_ideals(&s);
        for i in &ideals {
            for j in &ideals {
                let sum = i.add(j).unwrap();
                // I + J contains both summands and is normalized
                prop_assert!(i.is_subset_of(&sum).unwrap());
                prop_assert!(j.is_subset_of(&sum).unwrap());
                prop_assert!(sum.contains(0));
            }
        }
    }

    #[test]
    fn semigroup_string_round_trip(s in arb_semigroup()) {
        let gens: NumericalSemigroup = format!(
            "gens:{}",
            s.min_generators().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
        ).parse().unwrap();
        prop_assert_eq!(&gens, &s);
    }

    #[test]
    fn poset_document_round_trip(s in arb_semigroup()) {
        prop_assume!(s.genus() > 0);
        let gp = GapPoset::build(&s).unwrap();
        let json = numsgp::io::PosetDocument::from_poset(gp.base()).to_json();
        let back = numsgp::io::PosetDocument::from_json(&json).unwrap().to_poset().unwrap();
        prop_assert_eq!(&back, gp.base());
    }

    #[test]
    fn monoid_document_round_trip(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 6);
        let m = IdealClassMonoid::build(&s).unwrap();
        let json = numsgp::io::MonoidDocument::from_monoid(m.abstract_monoid()).to_json();
        let back = numsgp::io::MonoidDocument::from_json(&json).unwrap().to_monoid().unwrap();
        prop_assert_eq!(back.rows(), m.abstract_monoid().rows());
    }

    #[test]
    fn removal_only_at_minimal_generators(s in arb_semigroup()) {
        prop_assume!(s.genus() <= 5 && s.genus() > 0);
        let ambient = Arc::new(s.clone());
        for i in ideal::enumerate_normalized_ideals(&s) {
            let i = NormalizedIdeal::from_generators(ambient.clone(), &i.small_elements())
                .unwrap_or(i);
            for x in 1..s.conductor() + 2 {
                if i.contains(x) {
                    prop_assert_eq!(
                        i.remove_element(x).is_ok(),
                        i.minimal_generators().contains(&x)
                    );
                }
            }
        }
    }
}
