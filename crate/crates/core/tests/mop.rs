use paraug::corpus::{all_mops, random_instance};
use paraug::mop::zigzag_matchings;
use paraug::oracle::{oracle_mop_min, OracleBudget};
use paraug::{
    check_augmentable, construct_augmentation, min_augmentation_dp, star_all_but_two,
    verify_augmentation, zigzag_decomposition, zigzag_matching, ParityColoring, Verdict, Violation,
};
use proptest::prelude::*;

fn only_unmet(v: &Verdict, unmet: &[usize]) -> bool {
    match v {
        Verdict::Valid => unmet.is_empty(),
        Verdict::Invalid(Violation::Unmet(x)) => unmet.contains(x),
        Verdict::Invalid(_) => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dp_and_characterization_agree(n in 3usize..40, seed in any::<u64>()) {
        let (g, col) = random_instance(n, seed);
        let w = check_augmentable(&g, &col);
        let dp = min_augmentation_dp(&g, &col);
        prop_assert_eq!(w.is_positive(), dp.is_some());
        if let Some((h, size)) = dp {
            prop_assert_eq!(h.len(), size);
            prop_assert!(verify_augmentation(&g, &col, &h).unwrap().is_valid());
            prop_assert!(2 * size >= col.red_count());
        }
        if w.is_positive() {
            let h = construct_augmentation(&g, &col, &w).unwrap();
            prop_assert!(verify_augmentation(&g, &col, &h).unwrap().is_valid());
        }
    }

    #[test]
    fn zigzag_leaves_at_most_four(n in 3usize..30, seed in any::<u64>()) {
        let (g, col) = random_instance(n, seed);
        let r = zigzag_matching(&g, &col);
        prop_assert!(r.unmet.len() <= 4);
        let deg = r.matching.degrees(n);
        prop_assert!(deg.iter().all(|&d| d <= 1));
        // Every red vertex outside `unmet` is matched; everything else is not.
        for v in 0..n {
            prop_assert_eq!(deg[v] == 1, col.is_red(v) && !r.unmet.contains(&v));
        }
        let v = verify_augmentation(&g, &col, &r.matching).unwrap();
        prop_assert!(only_unmet(&v, &r.unmet), "{:?}", v);
    }

    #[test]
    fn star_leaves_at_most_two(n in 3usize..30, seed in any::<u64>()) {
        let (g, col) = random_instance(n, seed);
        let (h, unmet) = star_all_but_two(&g, &col);
        prop_assert!(unmet.len() <= 2);
        let v = verify_augmentation(&g, &col, &h).unwrap();
        prop_assert!(only_unmet(&v, &unmet), "{:?}", v);
    }
}

#[test]
fn dp_matches_oracle_exhaustively_to_seven() {
    for n in 3..=7 {
        for g in all_mops(n) {
            for mask in 0..1u64 << n {
                if mask.count_ones() % 2 == 1 {
                    continue;
                }
                let col = ParityColoring::from_mask(n, mask);
                let want = oracle_mop_min(&g, &col, &OracleBudget::default())
                    .unwrap()
                    .map(|o| o.size);
                assert_eq!(
                    min_augmentation_dp(&g, &col).map(|x| x.1),
                    want,
                    "n {n} {g:?} mask {mask:b}"
                );
            }
        }
    }
}

#[test]
fn decompositions_partition_complete_graphs() {
    for m in (4..=20).step_by(2) {
        let paths = zigzag_decomposition(m).unwrap();
        assert_eq!(paths.len(), m / 2);
        let mut seen = std::collections::HashSet::new();
        for p in &paths {
            for w in p.windows(2) {
                assert!(seen.insert((w[0].min(w[1]), w[0].max(w[1]))));
            }
        }
        assert_eq!(seen.len(), m * (m - 1) / 2);
        let ms = zigzag_matchings(m).unwrap();
        assert_eq!(ms.len(), m);
    }
}
