//! Brute-force counting of nested twin-free tuples
//! `X_d ⊆ ... ⊆ X_1 ⊆ {1, ..., s-1}`, and the map from beta-sets of
//! `(s, ds-1)`-cores into distinct parts onto such tuples.

use num_bigint::BigUint;

use crate::betaset::BetaSet;
use crate::error::{Error, Result};

/// Largest `s` the bitmask representation supports.
pub const MAX_TWIN_FREE_S: u32 = 64;

/// Bitmask over `{1, ..., s-1}`: bit `k - 1` stands for `k`.
pub type Mask = u64;

pub fn mask_is_twin_free(mask: Mask) -> bool {
    mask & (mask >> 1) == 0
}

/// Counts tuples `(X_1, ..., X_d)` of twin-free sets with
/// `X_d ⊆ ... ⊆ X_1 ⊆ {1, ..., s-1}`, optionally requiring `s - 1 ∉ X_d`.
///
/// Every tuple is visited individually; nothing here relies on the
/// recurrence these counts satisfy.
pub fn count_twin_free_tuples(s: u32, d: u32, exclude_last: bool) -> Result<BigUint> {
    let mut count: u128 = 0;
    for_each_twin_free_tuple(s, d, exclude_last, |_| count += 1)?;
    Ok(BigUint::from(count))
}

/// Calls `visit` with every admissible tuple `[X_1, ..., X_d]` as masks.
pub fn for_each_twin_free_tuple<F: FnMut(&[Mask])>(
    s: u32,
    d: u32,
    exclude_last: bool,
    mut visit: F,
) -> Result<()> {
    if s == 0 || d == 0 {
        return Err(Error::OutOfRange(format!(
            "twin-free tuples need s, d >= 1 (got s={s}, d={d})"
        )));
    }
    if s > MAX_TWIN_FREE_S {
        return Err(Error::OutOfRange(format!(
            "twin-free tuple brute force supports s <= {MAX_TWIN_FREE_S}, got {s}"
        )));
    }
    let universe: Mask = if s == 1 { 0 } else { u64::MAX >> (64 - (s - 1)) };
    let last_bit: Mask = if s == 1 { 0 } else { 1 << (s - 2) };
    let mut stack = Vec::with_capacity(d as usize);
    descend(
        universe,
        d as usize,
        exclude_last,
        last_bit,
        &mut stack,
        &mut visit,
    );
    Ok(())
}

fn descend<F: FnMut(&[Mask])>(
    parent: Mask,
    depth: usize,
    exclude_last: bool,
    last_bit: Mask,
    stack: &mut Vec<Mask>,
    visit: &mut F,
) {
    if stack.len() == depth {
        visit(stack);
        return;
    }
    let is_last = stack.len() + 1 == depth;
    // all submasks of parent, including parent and 0
    let mut sub = parent;
    loop {
        if mask_is_twin_free(sub) && !(is_last && exclude_last && sub & last_bit != 0) {
            stack.push(sub);
            descend(sub, depth, exclude_last, last_bit, stack, visit);
            stack.pop();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & parent;
    }
}

/// Splits a beta-set into blocks `((j-1)s, js)` and shifts each block down to
/// `{1, ..., s-1}`, giving `[X_1, ..., X_d]`.
///
/// Returns `None` if some element is a multiple of `s` or is `>= ds - 1`,
/// i.e. when the set cannot come from an `(s, ds-1)`-core.
pub fn twin_free_tuple_of(beta: &BetaSet, s: u32, d: u32) -> Option<Vec<Mask>> {
    if s == 0 || s > MAX_TWIN_FREE_S || d == 0 {
        return None;
    }
    let mut tuple = vec![0 as Mask; d as usize];
    for &x in beta.elements() {
        if x % s == 0 || u64::from(x) + 1 >= u64::from(d) * u64::from(s) {
            return None;
        }
        let block = (x / s) as usize;
        let offset = x % s;
        tuple[block] |= 1 << (offset - 1);
    }
    Some(tuple)
}

/// Checks the nesting, twin-freeness and last-element conditions on a tuple.
pub fn is_admissible_tuple(tuple: &[Mask], s: u32, exclude_last: bool) -> bool {
    if s == 0 || s > MAX_TWIN_FREE_S {
        return false;
    }
    let universe: Mask = if s == 1 { 0 } else { u64::MAX >> (64 - (s - 1)) };
    let nested = tuple.windows(2).all(|w| w[1] & !w[0] == 0);
    let inside = tuple.first().is_none_or(|&x| x & !universe == 0);
    let twin_free = tuple.iter().all(|&x| mask_is_twin_free(x));
    let last_ok = !exclude_last || s == 1 || tuple.last().is_none_or(|&x| x & (1 << (s - 2)) == 0);
    nested && inside && twin_free && last_ok
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_values() {
        for d in 1..6 {
            assert_eq!(count_twin_free_tuples(1, d, false).unwrap(), BigUint::from(1u32));
            assert_eq!(count_twin_free_tuples(2, d, false).unwrap(), BigUint::from(d + 1));
            assert_eq!(count_twin_free_tuples(2, d, true).unwrap(), BigUint::from(d));
        }
    }

    #[test]
    fn five_two_excluding_last() {
        // d(3d + 2) at d = 2
        assert_eq!(count_twin_free_tuples(5, 2, true).unwrap(), BigUint::from(16u32));
    }

    #[test]
    fn d_one_counts_twin_free_subsets() {
        // twin-free subsets of {1..n} number F_{n+2}
        let fib = [1u32, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144];
        for s in 1..10u32 {
            let n = (s - 1) as usize;
            assert_eq!(
                count_twin_free_tuples(s, 1, false).unwrap(),
                BigUint::from(fib[n + 1]),
                "s={s}"
            );
        }
    }

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(count_twin_free_tuples(0, 1, false).is_err());
        assert!(count_twin_free_tuples(3, 0, false).is_err());
        assert!(count_twin_free_tuples(65, 1, false).is_err());
    }

    #[test]
    fn every_visited_tuple_is_admissible() {
        for_each_twin_free_tuple(6, 3, true, |t| assert!(is_admissible_tuple(t, 6, true))).unwrap();
    }

    #[test]
    fn beta_to_tuple() {
        // (3,5)-core (3,1) has beta {1,4}: X_1 = {1}, X_2 = {1}
        let beta = BetaSet::new([1, 4]).unwrap();
        assert_eq!(twin_free_tuple_of(&beta, 3, 2), Some(vec![0b1, 0b1]));
        assert_eq!(twin_free_tuple_of(&BetaSet::new([3]).unwrap(), 3, 2), None);
        assert_eq!(twin_free_tuple_of(&BetaSet::new([5]).unwrap(), 3, 2), None);
    }
}
