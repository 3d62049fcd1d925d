//! Beta-sets: the first-column hook lengths of a partition.
//!
//! Only the minimal normalization is used (no zero, no shifted copies), so
//! beta-sets and partitions are in one-to-one correspondence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{parse_int_list, Partition};

/// A finite set of distinct positive integers, stored ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BetaSet {
    elements: Vec<u32>,
}

impl BetaSet {
    /// Builds a beta-set from elements in any order.
    pub fn new(elements: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut elements: Vec<u32> = elements.into_iter().collect();
        elements.sort_unstable();
        if elements.first() == Some(&0) {
            return Err(Error::NonPositiveBetaElement);
        }
        if let Some(w) = elements.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateBetaElement(w[0]));
        }
        Ok(BetaSet { elements })
    }

    pub(crate) fn from_ascending_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.first().is_none_or(|&x| x > 0));
        BetaSet { elements }
    }

    /// Elements in ascending order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: u32) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Largest element, or `None` for the empty set.
    pub fn largest(&self) -> Option<u32> {
        self.elements.last().copied()
    }

    /// True iff every `x >= t` in the set has `x - t` in the set.
    pub fn is_t_core(&self, t: u32) -> Result<bool> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(self
            .elements
            .iter()
            .filter(|&&x| x >= t)
            .all(|&x| x != t && self.contains(x - t)))
    }

    pub fn is_twin_free(&self) -> bool {
        self.elements.windows(2).all(|w| w[1] - w[0] > 1)
    }
}

/// `{ lambda_i + ell - i }` for the rows of `lambda`.
pub fn to_beta(lambda: &Partition) -> BetaSet {
    let ell = lambda.len() as u32;
    let mut elements: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (ell - 1 - i as u32))
        .collect();
    elements.reverse();
    BetaSet::from_ascending_unchecked(elements)
}

/// The unique partition whose beta-set is `beta`.
pub fn from_beta(beta: &BetaSet) -> Partition {
    let desc = beta.elements.iter().rev();
    let ell = beta.len() as u32;
    let parts = desc.enumerate().map(|(i, &h)| h - (ell - 1 - i as u32)).collect();
    Partition::from_sorted_unchecked(parts)
}

/// True iff `set` contains no pair `{x, x + 1}`.
pub fn is_twin_free(set: impl IntoIterator<Item = u32>) -> bool {
    let mut v: Vec<u32> = set.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v.windows(2).all(|w| w[1] - w[0] > 1)
}

impl From<&Partition> for BetaSet {
    fn from(lambda: &Partition) -> Self {
        to_beta(lambda)
    }
}

impl From<&BetaSet> for Partition {
    fn from(beta: &BetaSet) -> Self {
        from_beta(beta)
    }
}

impl fmt::Display for BetaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for BetaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BetaSet::new(parse_int_list(s)?)
    }
}
