mod common;

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::all_permutations;
use fourier_minors::search::{
    enumerate_good_permutations, find_good_permutation, find_good_permutation_resumable, first_singular_subset,
    incremental_family, is_good_permutation, position_order, read_checkpoint, AssignmentOrder, Permutation,
    SearchConfig,
};
use fourier_minors::CheckMode;

fn brute_force_good(n: usize) -> Vec<Vec<usize>> {
    all_permutations(n)
        .into_iter()
        .filter(|p| is_good_permutation(&Permutation::new(p.clone()).unwrap(), CheckMode::Exact).unwrap())
        .collect()
}

#[test]
fn pruned_search_agrees_with_brute_force() {
    for n in 1..=6usize {
        let good = brute_force_good(n);
        let listed: Vec<Vec<usize>> = enumerate_good_permutations(n, usize::MAX, false)
            .unwrap()
            .into_iter()
            .map(|p| p.image().to_vec())
            .collect();
        assert_eq!(listed, good, "N = {n}");
        let outcome = find_good_permutation(&SearchConfig::new(n)).unwrap();
        assert_eq!(outcome.found.is_some(), !good.is_empty());
        assert_eq!(outcome.found.map(|p| p.image().to_vec()), good.first().cloned());
    }
}

#[test]
fn two_permutations_of_two() {
    let list = enumerate_good_permutations(2, 10, false).unwrap();
    assert_eq!(list.len(), 2);
    for p in list {
        assert!(is_good_permutation(&p, CheckMode::Exact).unwrap());
    }
}

/// Translating the image preserves goodness, which justifies pinning the
/// first value.
#[test]
fn translation_symmetry_holds_by_brute_force() {
    for n in 1..=6usize {
        let good: BTreeSet<Vec<usize>> = brute_force_good(n).into_iter().collect();
        for p in &good {
            for t in 0..n {
                let q = Permutation::new(p.clone()).unwrap().translate(t);
                assert!(good.contains(q.image()), "N = {n}");
            }
        }
        let mut cfg = SearchConfig::new(n);
        cfg.fix_first = true;
        let pinned = find_good_permutation(&cfg).unwrap();
        assert_eq!(pinned.found.is_some(), !good.is_empty());
        let expected = good.iter().find(|p| p[0] == 0).cloned();
        assert_eq!(pinned.found.map(|p| p.image().to_vec()), expected);
    }
}

#[test]
fn incremental_families_partition_the_power_set() {
    for n in 1..=8usize {
        for order in [AssignmentOrder::Ascending, AssignmentOrder::MostConstrained] {
            let positions = position_order(n, order);
            let family = incremental_family(&positions, n);
            let mut seen = vec![false; 1 << n];
            let mut assigned = 0u64;
            for (t, step) in family.iter().enumerate() {
                assigned |= 1 << positions[t];
                let sizes: Vec<u32> = step.iter().map(|m| m.count_ones()).collect();
                assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "smallest first");
                for &mask in step {
                    assert!(mask >> positions[t] & 1 == 1);
                    assert_eq!(mask & !assigned, 0);
                    assert!(!std::mem::replace(&mut seen[mask as usize], true));
                }
            }
            assert!(seen[1..].iter().all(|&s| s), "N = {n}");
        }
    }
}

#[test]
fn singular_partial_assignments_have_no_good_completion() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 4..=6usize {
        let good: BTreeSet<Vec<usize>> = brute_force_good(n).into_iter().collect();
        for _ in 0..40 {
            let sigma: Vec<usize> = {
                let mut all = all_permutations(n);
                let i = rng.gen_range(0..all.len());
                all.swap_remove(i)
            };
            let Some(bad) = first_singular_subset(&Permutation::new(sigma.clone()).unwrap(), CheckMode::Exact).unwrap()
            else {
                continue;
            };
            // every permutation agreeing with sigma on the bad set fails
            for p in all_permutations(n) {
                if bad.members().iter().all(|&k| p[k] == sigma[k]) {
                    assert!(!good.contains(&p));
                }
            }
        }
    }
}

#[test]
fn search_results_are_good_for_small_moduli() {
    for n in 1..=10usize {
        for order in [AssignmentOrder::Ascending, AssignmentOrder::MostConstrained] {
            let mut cfg = SearchConfig::new(n);
            cfg.order = order;
            let outcome = find_good_permutation(&cfg).unwrap();
            let sigma = outcome.found.expect("good permutation exists");
            assert!(is_good_permutation(&sigma, CheckMode::Exact).unwrap(), "N = {n}");
            assert!(!outcome.exhausted && !outcome.inconclusive);
        }
    }
    let five = find_good_permutation(&SearchConfig::new(5)).unwrap();
    assert_eq!(five.found, Some(Permutation::identity(5)));
    assert!(!is_good_permutation(&Permutation::identity(4), CheckMode::Exact).unwrap());
}

#[test]
fn limited_incremental_checks_give_the_same_answer() {
    for n in 4..=9usize {
        let full = find_good_permutation(&SearchConfig::new(n)).unwrap();
        for k in [2usize, 3] {
            let mut cfg = SearchConfig::new(n);
            cfg.max_incremental_size = Some(k);
            let limited = find_good_permutation(&cfg).unwrap();
            assert_eq!(limited.found, full.found, "N = {n}, k = {k}");
        }
    }
}

#[test]
fn results_do_not_depend_on_worker_count() {
    for n in [4usize, 8, 9] {
        let mut one = SearchConfig::new(n);
        one.jobs = Some(1);
        let mut four = one.clone();
        four.jobs = Some(4);
        let a = find_good_permutation(&one).unwrap();
        let b = find_good_permutation(&four).unwrap();
        assert_eq!((a.found, a.nodes, a.prunes_by_size), (b.found, b.nodes, b.prunes_by_size));
    }
}

#[test]
fn exact_and_prefilter_modes_agree() {
    for n in [6usize, 8, 9] {
        let mut exact = SearchConfig::new(n);
        exact.mode = CheckMode::Exact;
        let a = find_good_permutation(&exact).unwrap();
        let b = find_good_permutation(&SearchConfig::new(n)).unwrap();
        assert_eq!((a.found, a.nodes), (b.found, b.nodes));
    }
}

#[test]
fn budget_expiry_is_inconclusive() {
    let mut cfg = SearchConfig::new(16);
    cfg.time_budget_ms = Some(1);
    cfg.fix_first = true;
    let outcome = find_good_permutation(&cfg).unwrap();
    assert!(outcome.found.is_none());
    assert!(outcome.inconclusive && outcome.timed_out && !outcome.exhausted);
    assert!(outcome.units_completed < outcome.units_total);
}

#[test]
fn checkpoints_resume_without_repeating_work() {
    let dir = std::env::temp_dir().join(format!("fm-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("n8.jsonl");
    let _ = std::fs::remove_file(&path);

    let mut cfg = SearchConfig::new(8);
    cfg.jobs = Some(1);
    let first = find_good_permutation_resumable(&cfg, &path).unwrap();
    let (header, units) = read_checkpoint(&path).unwrap().unwrap();
    assert_eq!(header.modulus, 8);
    assert_eq!(units.len(), first.units_completed);

    let second = find_good_permutation_resumable(&cfg, &path).unwrap();
    assert_eq!(second.found, first.found);
    assert_eq!(second.nodes, first.nodes);
    assert_eq!(second.units_resumed, second.units_completed);

    // a torn final line is dropped and the unit redone
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, format!("{text}{{\"kind\":\"unit\",\"pre")).unwrap();
    let third = find_good_permutation_resumable(&cfg, &path).unwrap();
    assert_eq!(third.found, first.found);

    // a different search refuses the file
    let mut other = cfg.clone();
    other.fix_first = true;
    assert!(find_good_permutation_resumable(&other, &path).is_err());

    // an interrupted run picks up where it stopped
    let path16 = dir.join("n16.jsonl");
    let _ = std::fs::remove_file(&path16);
    let mut big = SearchConfig::new(16);
    big.fix_first = true;
    big.split_depth = 3;
    big.time_budget_ms = Some(300);
    let partial = find_good_permutation_resumable(&big, &path16).unwrap();
    assert!(partial.inconclusive);
    let again = find_good_permutation_resumable(&big, &path16).unwrap();
    assert!(again.units_resumed >= partial.units_completed);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn outcomes_round_trip_through_json() {
    let outcome = find_good_permutation(&SearchConfig::new(6)).unwrap();
    let back = serde_json::from_str(&serde_json::to_string(&outcome).unwrap()).unwrap();
    assert_eq!(outcome, back);
    let cfg = SearchConfig::new(6);
    let back: SearchConfig = serde_json::from_str(&serde_json::to_string(&cfg).unwrap()).unwrap();
    assert_eq!(cfg, back);
}
