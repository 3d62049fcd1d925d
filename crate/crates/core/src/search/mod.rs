//! Exhaustive enumeration of `(s,t)`-core partitions.
//!
//! The beta-set of an `(s,t)`-core is closed under `x -> x - s` and
//! `x -> x - t`, so it lies among the gaps of the semigroup `<s, t>` and is an
//! order ideal of the [`GapPoset`]. The search walks the gaps in increasing
//! order and decides membership one gap at a time; a gap may join only when
//! its lower covers already have, so every leaf of the walk is an ideal and
//! every ideal is reached exactly once.

mod perimeter;
mod poset;
mod twinfree;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::betaset::{from_beta, BetaSet};
use crate::error::{Error, Result};
use crate::partition::{canonical_cmp, Partition};

pub use perimeter::{enumerate_distinct_by_perimeter, enumerate_odd_by_perimeter, perimeter_size_counts};
pub use poset::{frobenius_number, GapPoset};
pub use twinfree::{
    count_twin_free_tuples, for_each_twin_free_tuple, is_admissible_tuple, mask_is_twin_free,
    twin_free_tuple_of, Mask, MAX_TWIN_FREE_S,
};

/// Restriction applied to the enumerated cores.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    All,
    Distinct,
    Odd,
    SelfConjugate,
}

impl Filter {
    pub const ALL: [Filter; 4] = [Filter::All, Filter::Distinct, Filter::Odd, Filter::SelfConjugate];

    pub fn accepts(self, lambda: &Partition) -> bool {
        match self {
            Filter::All => true,
            Filter::Distinct => lambda.has_distinct_parts(),
            Filter::Odd => lambda.has_odd_parts(),
            Filter::SelfConjugate => lambda.is_self_conjugate(),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Filter::All => "all",
            Filter::Distinct => "distinct",
            Filter::Odd => "odd",
            Filter::SelfConjugate => "self_conjugate",
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Filter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "all" => Ok(Filter::All),
            "distinct" => Ok(Filter::Distinct),
            "odd" => Ok(Filter::Odd),
            "self_conjugate" | "selfconjugate" => Ok(Filter::SelfConjugate),
            other => Err(Error::Parse(format!(
                "unknown filter {other:?} (expected all, distinct, odd or self_conjugate)"
            ))),
        }
    }
}

/// Every `(s,t)`-core passing a filter, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub s: u32,
    pub t: u32,
    pub filter: Filter,
    pub partitions: Vec<Partition>,
    pub count: BigUint,
    pub max_size: u64,
    pub max_size_witnesses: Vec<Partition>,
    /// Perimeter cap used for a bounded search.
    pub bound: Option<u32>,
    /// True when the bound cut the search short of the full family.
    pub partial: bool,
}

impl EnumerationResult {
    fn from_partitions(poset: &GapPoset, filter: Filter, mut partitions: Vec<Partition>) -> Self {
        partitions.sort_by(canonical_cmp);
        let max_size = partitions.iter().map(Partition::size).max().unwrap_or(0);
        let max_size_witnesses = partitions
            .iter()
            .filter(|p| p.size() == max_size)
            .cloned()
            .collect();
        EnumerationResult {
            s: poset.s(),
            t: poset.t(),
            filter,
            count: BigUint::from(partitions.len()),
            partitions,
            max_size,
            max_size_witnesses,
            bound: poset.bound(),
            partial: !poset.is_complete(),
        }
    }
}

/// Order-ideal search over a [`GapPoset`].
#[derive(Clone, Debug)]
pub struct CoreSearch {
    poset: GapPoset,
    filter: Filter,
    prune: bool,
}

impl CoreSearch {
    /// Search over all `(s,t)`-cores; fails with [`Error::InfiniteFamily`]
    /// unless `gcd(s, t) = 1`.
    pub fn new(s: u32, t: u32, filter: Filter) -> Result<Self> {
        Ok(CoreSearch {
            poset: GapPoset::new(s, t)?,
            filter,
            prune: true,
        })
    }

    /// Search over `(s,t)`-cores of perimeter at most `bound`.
    pub fn bounded(s: u32, t: u32, filter: Filter, bound: u32) -> Self {
        CoreSearch {
            poset: GapPoset::bounded(s, t, bound),
            filter,
            prune: true,
        }
    }

    /// Disables the twin-free cut so the filter is only applied at the leaves.
    pub fn without_pruning(mut self) -> Self {
        self.prune = false;
        self
    }

    pub fn poset(&self) -> &GapPoset {
        &self.poset
    }

    /// Calls `visit` with the beta-set and partition of every accepted core.
    pub fn for_each<F: FnMut(&BetaSet, &Partition)>(&self, mut visit: F) {
        let gaps = self.poset.gaps();
        let top = gaps.last().map_or(0, |&g| g as usize);
        let mut walk = Walk {
            gaps,
            s: self.poset.s(),
            t: self.poset.t(),
            twin_cut: self.prune && self.filter == Filter::Distinct,
            member: vec![false; top + 1],
            chosen: Vec::with_capacity(gaps.len()),
        };
        let filter = self.filter;
        walk.descend(0, &mut |chosen: &[u32]| {
            let beta = BetaSet::from_ascending_unchecked(chosen.to_vec());
            let lambda = from_beta(&beta);
            if filter.accepts(&lambda) {
                visit(&beta, &lambda);
            }
        });
    }

    pub fn run(&self) -> EnumerationResult {
        let mut partitions = Vec::new();
        self.for_each(|_, lambda| partitions.push(lambda.clone()));
        EnumerationResult::from_partitions(&self.poset, self.filter, partitions)
    }

    /// Number of accepted cores, without materializing them.
    pub fn count(&self) -> BigUint {
        let mut n: u128 = 0;
        self.for_each(|_, _| n += 1);
        BigUint::from(n)
    }
}

struct Walk<'a> {
    gaps: &'a [u32],
    s: u32,
    t: u32,
    twin_cut: bool,
    member: Vec<bool>,
    chosen: Vec<u32>,
}

impl Walk<'_> {
    fn descend(&mut self, idx: usize, leaf: &mut dyn FnMut(&[u32])) {
        let Some(&g) = self.gaps.get(idx) else {
            leaf(&self.chosen);
            return;
        };
        self.descend(idx + 1, leaf);
        if self.may_join(g) {
            self.member[g as usize] = true;
            self.chosen.push(g);
            self.descend(idx + 1, leaf);
            self.chosen.pop();
            self.member[g as usize] = false;
        }
    }

    fn may_join(&self, g: u32) -> bool {
        let below = |step: u32| step == 0 || g < step || self.member[(g - step) as usize];
        below(self.s) && below(self.t) && !(self.twin_cut && g > 1 && self.member[(g - 1) as usize])
    }
}

/// All `(s,t)`-cores passing `filter`. Pairs with `gcd(s,t) > 1` are
/// refused as infinite families; use [`enumerate_core_bounded`] for them.
pub fn enumerate_core(s: u32, t: u32, filter: Filter) -> Result<EnumerationResult> {
    Ok(CoreSearch::new(s, t, filter)?.run())
}

/// `(s,t)`-cores of perimeter at most `bound`, for any pair.
pub fn enumerate_core_bounded(s: u32, t: u32, filter: Filter, bound: u32) -> EnumerationResult {
    CoreSearch::bounded(s, t, filter, bound).run()
}

pub fn count_core(s: u32, t: u32, filter: Filter) -> Result<BigUint> {
    Ok(CoreSearch::new(s, t, filter)?.count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn three_five_distinct() {
        let res = enumerate_core(3, 5, Filter::Distinct).unwrap();
        assert_eq!(
            res.partitions,
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[3, 1])]
        );
        assert_eq!(res.count, BigUint::from(4u32));
        assert_eq!(res.max_size, 4);
        assert!(!res.partial);
    }

    #[test]
    fn five_seven_distinct() {
        let res = enumerate_core(5, 7, Filter::Distinct).unwrap();
        assert_eq!(res.count, BigUint::from(16u32));
        assert_eq!(res.max_size, 21);
        assert_eq!(res.max_size_witnesses, vec![p(&[9, 5, 4, 2, 1])]);
    }

    #[test]
    fn small_all_filter() {
        assert_eq!(
            enumerate_core(3, 4, Filter::All).unwrap().count,
            BigUint::from(5u32)
        );
        assert_eq!(
            enumerate_core(2, 3, Filter::All).unwrap().partitions,
            vec![Partition::empty(), p(&[1])]
        );
        assert_eq!(
            enumerate_core(1, 9, Filter::All).unwrap().partitions,
            vec![Partition::empty()]
        );
    }

    #[test]
    fn infinite_family_errors() {
        assert_eq!(
            enumerate_core(2, 4, Filter::Distinct).unwrap_err(),
            Error::InfiniteFamily { s: 2, t: 4, gcd: 2 }
        );
        assert!(enumerate_core(7, 7, Filter::All).is_err());
        assert!(enumerate_core(1, 1, Filter::All).is_ok());
    }

    #[test]
    fn bounded_search_is_labeled_partial() {
        let res = enumerate_core_bounded(2, 4, Filter::Distinct, 6);
        assert!(res.partial);
        assert_eq!(res.bound, Some(6));
        for lam in &res.partitions {
            assert!(lam.perimeter() <= 6);
            assert_eq!(lam.is_t_core(2), Ok(true));
            assert_eq!(lam.is_t_core(4), Ok(true));
            assert!(lam.has_distinct_parts());
        }
        // staircases are the 2-cores; perimeter <= 6 allows (1), (2,1), (3,2,1)
        assert_eq!(res.count, BigUint::from(4u32));
        let complete = enumerate_core_bounded(3, 5, Filter::Distinct, 7);
        assert!(!complete.partial);
        assert_eq!(
            complete.partitions,
            enumerate_core(3, 5, Filter::Distinct).unwrap().partitions
        );
    }

    #[test]
    fn filter_parsing() {
        assert_eq!("self-conjugate".parse::<Filter>(), Ok(Filter::SelfConjugate));
        assert_eq!("Distinct".parse::<Filter>(), Ok(Filter::Distinct));
        assert!("even".parse::<Filter>().is_err());
        for f in Filter::ALL {
            assert_eq!(f.to_string().parse::<Filter>(), Ok(f));
        }
    }

    #[test]
    fn zero_generator_is_vacuous() {
        // no hook has length 0: (1,0)-cores are the 1-cores
        assert_eq!(count_core(1, 0, Filter::Distinct).unwrap(), BigUint::from(1u32));
        assert!(count_core(2, 0, Filter::Distinct).is_err());
    }
}
