use proptest::prelude::*;

use hodgekit::abelian::{brute_force_max_commutative, build_abelian_from_path, enumerate_paths, relaxed_path_max};
use hodgekit::basepoint::{partition_of, IndexPartition};
use hodgekit::blocks::{dim_g11, graded_piece, roots_at_level};
use hodgekit::hodge::{describe, virtual_sequence, HodgeNumbers};
use hodgekit::matrixrep::{is_graded, root_matrix, span_is_abelian};
use hodgekit::roots::{is_commutative, RootSystem};
use hodgekit::triples::{check_bracket, enumerate_triples, hodge_bracket, HodgeTriple};

/// Hodge numbers of weight ≤ 6 with every f_i ≤ 3 and positive total dimension.
fn hodge_numbers() -> impl Strategy<Value = HodgeNumbers> {
    (0usize..=6)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(0u32..=3, n / 2 + 1)))
        .prop_filter_map("zero total dimension", |(n, half)| HodgeNumbers::from_half(n, &half).ok())
        .prop_filter("zero total dimension", |h| h.dim() > 0)
}

fn partition(h: &HodgeNumbers) -> IndexPartition {
    partition_of(h).unwrap()
}

fn standard_triples(p: &IndexPartition) -> Vec<HodgeTriple> {
    (1..=p.weight() as i64)
        .flat_map(|l| enumerate_triples(p, l).unwrap().triples)
        .filter(|t| t.flavor.is_standard())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn virtual_sequence_round_trip(h in hodge_numbers()) {
        // With h_0 = 0 the leading gap is invisible to the sign pattern.
        prop_assume!(h.h()[0] > 0);
        let d = describe(&h).unwrap();
        let signs: Vec<_> = d
            .dimension_sequence
            .iter()
            .zip(&d.signature_sequence)
            .filter(|(&x, _)| x != 0)
            .map(|(_, &s)| s)
            .collect();
        let back = virtual_sequence(&d.display_sequence(), &signs).unwrap();
        // A run of two zeros is invisible as well; the visible blocks still agree.
        if h.h().windows(2).all(|w| w != [0, 0]) {
            prop_assert_eq!(&back, &h);
        }
        let again = describe(&back).unwrap();
        prop_assert_eq!(again.display_sequence(), d.display_sequence());
        prop_assert_eq!(again.real_form, d.real_form);
    }

    #[test]
    fn parts_partition_the_basis(h in hodge_numbers()) {
        let p = partition(&h);
        let mut all: Vec<usize> = p.parts.iter().flat_map(|(_, v)| v.clone()).collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=p.dim_v()).collect::<Vec<_>>());
        for k in 0..=p.weight() {
            prop_assert_eq!(p.span_of(k).unwrap().len(), h.h()[k] as usize);
        }
    }

    #[test]
    fn levels_decompose_g(h in hodge_numbers()) {
        let p = partition(&h);
        let n = p.weight() as i64;
        let dims: Vec<usize> = (-n..=n).map(|l| graded_piece(&p, l).dim).collect();
        prop_assert_eq!(dims.iter().sum::<usize>(), p.descriptor.dim_g());
        for l in 0..=n {
            prop_assert_eq!(graded_piece(&p, l).dim, graded_piece(&p, -l).dim);
        }
        prop_assert_eq!(dim_g11(&p.descriptor), graded_piece(&p, 1).dim);
    }

    #[test]
    fn root_vectors_are_graded(h in hodge_numbers()) {
        let p = partition(&h);
        for ((r, c), root) in p.all_root_positions() {
            let x = root_matrix(&root, &p).unwrap();
            prop_assert!(is_graded(&x, p.position_level(r, c), &p));
        }
    }

    #[test]
    fn triple_parts_are_abelian(h in hodge_numbers()) {
        let p = partition(&h);
        for l in 1..=p.weight() as i64 {
            for t in enumerate_triples(&p, l).unwrap().triples {
                prop_assert!(span_is_abelian(&t.roots_neg, &p).unwrap());
                prop_assert!(span_is_abelian(&t.roots_pos, &p).unwrap());
            }
        }
    }

    #[test]
    fn brackets_match_commutators(h in hodge_numbers(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let p = partition(&h);
        let std = standard_triples(&p);
        prop_assume!(!std.is_empty());
        let (t1, t2) = (a.get(&std), b.get(&std));
        let r = hodge_bracket(&p, t1, t2).unwrap();
        let check = check_bracket(&p, t1, t2, &r).unwrap();
        prop_assert!(check.sum_matches || (t1.name == t2.name && check.in_levi));
        if t1.level % 2 == 1 && t2.level % 2 == 1 {
            prop_assert!(r.terms.iter().all(|x| x.result.level % 2 == 0));
        }
    }

    #[test]
    fn paths_are_abelian_and_bounded(h in hodge_numbers()) {
        let p = partition(&h);
        prop_assume!(roots_at_level(&p, 1).len() <= 14);
        let sys = RootSystem::degenerate_ok(p.group_type(), p.rank());
        let oracle = brute_force_max_commutative(&p).unwrap().max;
        for path in enumerate_paths(&p) {
            let sub = build_abelian_from_path(&p, &path).unwrap();
            prop_assert!(is_commutative(&sub.roots, &sys).unwrap());
            prop_assert!(sub.dim <= oracle);
        }
        prop_assert_eq!(relaxed_path_max(&p), oracle);
    }
}
