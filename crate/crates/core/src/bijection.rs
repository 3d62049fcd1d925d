//! Compositions with parts 1 and 2 ending in 1, and the perimeter-preserving
//! maps from them onto partitions into distinct parts and into odd parts.
//!
//! Both maps read the composition from its last part backwards: the trailing
//! `1` gives the partition `(1)`, and each earlier part modifies the largest
//! part of the partition built so far.
//!
//! | first part | distinct parts              | odd parts                 |
//! |------------|-----------------------------|---------------------------|
//! | `1`        | largest part `+ 1`          | repeat the largest part   |
//! | `2`        | put `largest + 1` on top    | largest part `+ 2`        |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{parse_int_list, write_list, Partition};

/// A composition with parts in `{1, 2}` whose last part (if any) is `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompositionC {
    parts: Vec<u8>,
}

impl CompositionC {
    pub fn new(parts: Vec<u8>) -> Result<Self> {
        if parts.iter().any(|&p| p != 1 && p != 2) {
            return Err(Error::InvalidComposition("every part of μ must be 1 or 2"));
        }
        if parts.last() == Some(&2) {
            return Err(Error::InvalidComposition("last part of μ must be 1"));
        }
        Ok(CompositionC { parts })
    }

    pub fn empty() -> Self {
        CompositionC::default()
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().map(|&p| u32::from(p)).sum()
    }
}

impl fmt::Display for CompositionC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

impl FromStr for CompositionC {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let raw = parse_int_list(s)?;
        let parts = raw
            .into_iter()
            .map(|p| u8::try_from(p).map_err(|_| Error::InvalidComposition("every part of μ must be 1 or 2")))
            .collect::<Result<Vec<u8>>>()?;
        CompositionC::new(parts)
    }
}

/// Every composition of weight `m`, in lexicographic order.
pub fn compositions_of(m: u32) -> Vec<CompositionC> {
    if m == 0 {
        return vec![CompositionC::empty()];
    }
    // compositions of m - 1 into 1s and 2s, then a closing 1
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(m as usize);
    fill(m - 1, &mut current, &mut out);
    out
}

fn fill(remaining: u32, current: &mut Vec<u8>, out: &mut Vec<CompositionC>) {
    if remaining == 0 {
        let mut parts = current.clone();
        parts.push(1);
        out.push(CompositionC { parts });
        return;
    }
    for part in [1u8, 2] {
        if u32::from(part) <= remaining {
            current.push(part);
            fill(remaining - u32::from(part), current, out);
            current.pop();
        }
    }
}

/// Builds a partition from `mu`, applying `step` to the smallest-first parts
/// vector for each part of `mu` except the trailing 1.
fn build(mu: &CompositionC, step: impl Fn(&mut Vec<u32>, u8)) -> Partition {
    let Some((_, init)) = mu.parts.split_last() else {
        return Partition::empty();
    };
    let mut rev: Vec<u32> = vec![1];
    for &part in init.iter().rev() {
        step(&mut rev, part);
    }
    rev.reverse();
    Partition::from_sorted_unchecked(rev)
}

/// The partition into distinct parts matched with `mu`; its perimeter is `|mu|`.
pub fn lambda_d(mu: &CompositionC) -> Partition {
    build(mu, |rev, part| {
        let largest = rev.last_mut().expect("nonempty");
        if part == 1 {
            *largest += 1;
        } else {
            let top = *largest + 1;
            rev.push(top);
        }
    })
}

/// The partition into odd parts matched with `mu`; its perimeter is `|mu|`.
pub fn lambda_o(mu: &CompositionC) -> Partition {
    build(mu, |rev, part| {
        let largest = rev.last_mut().expect("nonempty");
        if part == 1 {
            let copy = *largest;
            rev.push(copy);
        } else {
            *largest += 2;
        }
    })
}

/// The composition `mu` with `lambda_d(mu) == lambda`.
pub fn inverse_lambda_d(lambda: &Partition) -> Result<CompositionC> {
    if !lambda.has_distinct_parts() {
        return Err(Error::WrongPartsShape {
            partition: lambda.to_string(),
            expected: "distinct parts",
        });
    }
    let mut rev: Vec<u32> = lambda.parts().iter().rev().copied().collect();
    let mut mu = Vec::with_capacity(lambda.perimeter() as usize);
    while let Some(&largest) = rev.last() {
        if rev.len() == 1 && largest == 1 {
            mu.push(1);
            break;
        }
        let second = if rev.len() >= 2 { rev[rev.len() - 2] } else { 0 };
        if second > 0 && largest == second + 1 {
            mu.push(2);
            rev.pop();
        } else {
            mu.push(1);
            *rev.last_mut().expect("nonempty") -= 1;
        }
    }
    Ok(CompositionC { parts: mu })
}

/// The composition `mu` with `lambda_o(mu) == lambda`.
pub fn inverse_lambda_o(lambda: &Partition) -> Result<CompositionC> {
    if !lambda.has_odd_parts() {
        return Err(Error::WrongPartsShape {
            partition: lambda.to_string(),
            expected: "odd parts",
        });
    }
    let mut rev: Vec<u32> = lambda.parts().iter().rev().copied().collect();
    let mut mu = Vec::with_capacity(lambda.perimeter() as usize);
    while let Some(&largest) = rev.last() {
        if rev.len() == 1 && largest == 1 {
            mu.push(1);
            break;
        }
        let second = if rev.len() >= 2 { rev[rev.len() - 2] } else { 0 };
        if largest == second {
            mu.push(1);
            rev.pop();
        } else {
            mu.push(2);
            *rev.last_mut().expect("nonempty") -= 2;
        }
    }
    Ok(CompositionC { parts: mu })
}

/// Perimeter-preserving map from distinct-part to odd-part partitions.
pub fn distinct_to_odd(lambda: &Partition) -> Result<Partition> {
    Ok(lambda_o(&inverse_lambda_d(lambda)?))
}

/// Inverse of [`distinct_to_odd`].
pub fn odd_to_distinct(lambda: &Partition) -> Result<Partition> {
    Ok(lambda_d(&inverse_lambda_o(lambda)?))
}
