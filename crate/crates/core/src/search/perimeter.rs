//! Partitions into distinct (resp. odd) parts with a prescribed perimeter,
//! grown level by level from the two ways of peeling off the largest part.

use std::collections::BTreeMap;

use crate::partition::{canonical_cmp, Partition};

/// Distinct-part partitions of perimeter exactly `m`.
///
/// Level `m` is built from level `m - 1` by incrementing the largest part
/// (giving `lambda_1 > lambda_2 + 1`) and from level `m - 2` by stacking
/// `lambda_1 + 1` on top (giving `lambda_1 = lambda_2 + 1`).
pub fn enumerate_distinct_by_perimeter(m: u32) -> Vec<Partition> {
    grow(m, |prev, prev2, level| {
        let mut out: Vec<Vec<u32>> = prev
            .iter()
            .map(|p| {
                let mut p = p.clone();
                p[0] += 1;
                p
            })
            .collect();
        if level >= 3 {
            out.extend(prev2.iter().map(|p| {
                let mut q = Vec::with_capacity(p.len() + 1);
                q.push(p[0] + 1);
                q.extend_from_slice(p);
                q
            }));
        }
        out
    })
}

/// Size distribution at perimeter `m`: `size -> (distinct, odd)` counts.
///
/// The two families have equally many members at each perimeter, but not at
/// each (perimeter, size) pair; this exposes the joint data without claiming
/// a refinement.
pub fn perimeter_size_counts(m: u32) -> BTreeMap<u64, (usize, usize)> {
    let mut counts: BTreeMap<u64, (usize, usize)> = BTreeMap::new();
    for p in enumerate_distinct_by_perimeter(m) {
        counts.entry(p.size()).or_default().0 += 1;
    }
    for p in enumerate_odd_by_perimeter(m) {
        counts.entry(p.size()).or_default().1 += 1;
    }
    counts
}

/// Odd-part partitions of perimeter exactly `m`.
///
/// Level `m` is built from level `m - 2` by adding 2 to the largest part
/// (giving `lambda_1 > lambda_2 + 1`) and from level `m - 1` by repeating the
/// largest part (giving `lambda_1 = lambda_2`).
pub fn enumerate_odd_by_perimeter(m: u32) -> Vec<Partition> {
    grow(m, |prev, prev2, level| {
        let mut out: Vec<Vec<u32>> = Vec::with_capacity(prev.len() + prev2.len());
        if level >= 3 {
            out.extend(prev2.iter().map(|p| {
                let mut p = p.clone();
                p[0] += 2;
                p
            }));
        }
        out.extend(prev.iter().map(|p| {
            let mut q = Vec::with_capacity(p.len() + 1);
            q.push(p[0]);
            q.extend_from_slice(p);
            q
        }));
        out
    })
}

fn grow<F>(m: u32, step: F) -> Vec<Partition>
where
    F: Fn(&[Vec<u32>], &[Vec<u32>], u32) -> Vec<Vec<u32>>,
{
    if m == 0 {
        return vec![Partition::empty()];
    }
    // levels m-2 and m-1, starting from perimeter 0 (empty) and 1
    let mut prev2: Vec<Vec<u32>> = vec![Vec::new()];
    let mut prev: Vec<Vec<u32>> = vec![vec![1]];
    for level in 2..=m {
        let next = step(&prev, &prev2, level);
        prev2 = std::mem::replace(&mut prev, next);
    }
    let mut out: Vec<Partition> = prev.into_iter().map(Partition::from_sorted_unchecked).collect();
    out.sort_by(canonical_cmp);
    out
}
