//! The order-ideal search checked against naive generation, closed forms and
//! the twin-free tuple correspondence.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use stcore::betaset::to_beta;
use stcore::partition::canonical_cmp;
use stcore::search::{
    count_twin_free_tuples, enumerate_core, enumerate_distinct_by_perimeter, enumerate_odd_by_perimeter,
    is_admissible_tuple, twin_free_tuple_of, CoreSearch, Filter, GapPoset,
};
use stcore::sequences::{anderson_count, fibonacci, fms_selfconjugate_count};
use stcore::Partition;

fn big(n: usize) -> BigUint {
    BigUint::from(n)
}

fn naive_cores(s: u32, t: u32, max_size: u32, filter: Filter) -> Vec<Partition> {
    let mut v: Vec<Partition> = Partition::all_up_to_size(max_size)
        .into_iter()
        .filter(|p| p.is_t_core(s).unwrap() && p.is_t_core(t).unwrap() && filter.accepts(p))
        .collect();
    v.sort_by(canonical_cmp);
    v
}

/// Distinct-part partitions with perimeter at most `max_perimeter`, by
/// choosing parts from the top down.
fn naive_distinct_up_to_perimeter(max_perimeter: u32) -> Vec<Partition> {
    fn go(largest_allowed: u32, parts: &mut Vec<u32>, max_perimeter: u32, out: &mut Vec<Partition>) {
        out.push(Partition::new(parts.clone()).unwrap());
        for next in 1..=largest_allowed {
            let first = parts.first().copied().unwrap_or(next);
            if first + parts.len() as u32 > max_perimeter {
                continue;
            }
            parts.push(next);
            go(next - 1, parts, max_perimeter, out);
            parts.pop();
        }
    }
    let mut out = Vec::new();
    go(max_perimeter, &mut Vec::new(), max_perimeter, &mut out);
    out
}

#[test]
fn small_pairs_match_naive_generation() {
    // (s^2-1)(t^2-1)/24 bounds the size of any (s,t)-core
    for (s, t) in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 7), (4, 5), (3, 7), (2, 9)] {
        let bound = (s * s - 1) * (t * t - 1) / 24;
        for filter in Filter::ALL {
            let fast = enumerate_core(s, t, filter).unwrap();
            let slow = naive_cores(s, t, bound, filter);
            assert_eq!(fast.partitions, slow, "({s},{t}) {filter}");
            assert_eq!(fast.count, big(slow.len()));
        }
    }
}

#[test]
fn two_three_all() {
    let res = enumerate_core(2, 3, Filter::All).unwrap();
    assert_eq!(res.partitions, naive_cores(2, 3, 4, Filter::All));
    assert_eq!(
        res.partitions,
        vec![Partition::empty(), Partition::new(vec![1]).unwrap()]
    );
}

#[test]
fn distinct_cores_match_perimeter_bounded_oracle() {
    for (s, t) in [(3, 5), (4, 7), (5, 7), (5, 6), (4, 9), (5, 8)] {
        let frobenius = s * t - s - t;
        let mut slow: Vec<Partition> = naive_distinct_up_to_perimeter(frobenius)
            .into_iter()
            .filter(|p| p.is_t_core(s).unwrap() && p.is_t_core(t).unwrap())
            .collect();
        slow.sort_by(canonical_cmp);
        assert_eq!(
            enumerate_core(s, t, Filter::Distinct).unwrap().partitions,
            slow,
            "({s},{t})"
        );
    }
}

#[test]
fn pruning_does_not_change_results() {
    for s in 1..=9u32 {
        for t in (s + 1)..=12 {
            if s.gcd(&t) != 1 {
                continue;
            }
            let pruned = CoreSearch::new(s, t, Filter::Distinct).unwrap().run();
            let plain = CoreSearch::new(s, t, Filter::Distinct)
                .unwrap()
                .without_pruning()
                .run();
            assert_eq!(pruned, plain, "({s},{t})");
        }
    }
}

#[test]
fn anderson_and_self_conjugate_counts() {
    for s in 2..15u32 {
        for t in (s + 1)..=(15 - s) {
            if s.gcd(&t) != 1 {
                continue;
            }
            let all = enumerate_core(s, t, Filter::All).unwrap();
            assert_eq!(all.count, anderson_count(s, t).unwrap(), "({s},{t})");
            let sc = enumerate_core(s, t, Filter::SelfConjugate).unwrap();
            assert_eq!(sc.count, fms_selfconjugate_count(s, t).unwrap(), "({s},{t})");
        }
    }
}

#[test]
fn consecutive_distinct_cores_are_fibonacci() {
    for s in 1..=20 {
        let res = enumerate_core(s, s + 1, Filter::Distinct).unwrap();
        assert_eq!(res.count, fibonacci(s + 1), "s={s}");
    }
}

#[test]
fn results_satisfy_their_invariants() {
    for (s, t) in [(3, 5), (5, 7), (4, 11), (7, 9), (6, 11)] {
        let poset = GapPoset::new(s, t).unwrap();
        for filter in Filter::ALL {
            let res = enumerate_core(s, t, filter).unwrap();
            assert_eq!(res.count, big(res.partitions.len()));
            let distinct: BTreeSet<_> = res.partitions.iter().collect();
            assert_eq!(
                distinct.len(),
                res.partitions.len(),
                "duplicates in ({s},{t}) {filter}"
            );
            for lam in &res.partitions {
                assert!(lam.is_t_core(s).unwrap() && lam.is_t_core(t).unwrap());
                assert!(filter.accepts(lam));
                let beta = to_beta(lam);
                assert!(poset.is_order_ideal(&beta), "{lam}");
                if filter == Filter::Distinct {
                    assert!(beta.is_twin_free());
                }
            }
            assert!(res
                .partitions
                .windows(2)
                .all(|w| canonical_cmp(&w[0], &w[1]).is_lt()));
            assert!(res.max_size_witnesses.iter().all(|w| w.size() == res.max_size));
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let a = enumerate_core(7, 10, Filter::All).unwrap();
    let b = enumerate_core(7, 10, Filter::All).unwrap();
    assert_eq!(a, b);
}

#[test]
fn perimeter_enumerators_count_fibonacci() {
    for m in 1..=20 {
        assert_eq!(
            big(enumerate_distinct_by_perimeter(m).len()),
            fibonacci(m),
            "M={m}"
        );
        assert_eq!(big(enumerate_odd_by_perimeter(m).len()), fibonacci(m), "M={m}");
    }
}

#[test]
fn perimeter_enumerators_match_filtering() {
    // perimeter m forces size <= lambda_1 * ell <= ((m + 1) / 2)^2, at most 42 here
    let all = Partition::all_up_to_size(42);
    for m in 0..=12u32 {
        let mut distinct: Vec<Partition> = naive_distinct_up_to_perimeter(m)
            .into_iter()
            .filter(|p| p.perimeter() == m)
            .collect();
        distinct.sort_by(canonical_cmp);
        assert_eq!(enumerate_distinct_by_perimeter(m), distinct, "M={m}");

        let mut odd: Vec<Partition> = all
            .iter()
            .filter(|p| p.perimeter() == m && p.has_odd_parts())
            .cloned()
            .collect();
        odd.sort_by(canonical_cmp);
        assert_eq!(enumerate_odd_by_perimeter(m), odd, "M={m}");
    }
}

#[test]
fn cores_correspond_to_twin_free_tuples() {
    for d in 1..=3u32 {
        for s in 1..=8u32 {
            let t = d * s - 1;
            let res = enumerate_core(s, t, Filter::Distinct).unwrap();
            let mut seen = BTreeSet::new();
            for lam in &res.partitions {
                let tuple = twin_free_tuple_of(&to_beta(lam), s, d)
                    .unwrap_or_else(|| panic!("{lam} has no tuple for s={s} d={d}"));
                assert!(is_admissible_tuple(&tuple, s, true), "{lam}: {tuple:?}");
                assert!(seen.insert(tuple), "two cores share a tuple at s={s} d={d}");
            }
            assert_eq!(
                big(seen.len()),
                count_twin_free_tuples(s, d, true).unwrap(),
                "s={s} d={d}"
            );
        }
    }
}

#[test]
fn bounded_search_agrees_with_naive_for_non_coprime_pairs() {
    for (s, t, h) in [(2, 4, 9), (3, 6, 10), (4, 6, 9)] {
        for filter in Filter::ALL {
            let res = stcore::enumerate_core_bounded(s, t, filter, h);
            assert!(res.partial);
            // perimeter <= 10 keeps the size at most 30
            let mut slow: Vec<Partition> = naive_cores(s, t, 30, filter)
                .into_iter()
                .filter(|p| p.perimeter() <= h)
                .collect();
            slow.sort_by(canonical_cmp);
            assert_eq!(res.partitions, slow, "({s},{t}) bound {h} {filter}");
        }
    }
}
