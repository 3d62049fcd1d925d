//! Integer partitions and their Young-diagram geometry.
//!
//! Rows and columns are 1-indexed in the public API: `hook_length(p, 1, 1)`
//! is the hook of the top-left cell.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` compares parts lexicographically; see [`canonical_cmp`] for the
/// size-first order used in listings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `parts` without reordering them.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (index, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index });
            }
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing {
                prev: w[0],
                next: w[1],
            });
        }
        // keeps perimeter and beta-set elements representable
        let first = parts.first().map_or(0, |&p| u64::from(p));
        if first + parts.len() as u64 > u64::from(u32::MAX) + 1 {
            return Err(Error::OutOfRange("perimeter does not fit in 32 bits".into()));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Hook length of the cell in row `row`, column `col` (both 1-indexed).
    pub fn hook_length(&self, row: usize, col: u32) -> Result<u32> {
        if row == 0 || col == 0 || row > self.parts.len() || col > self.parts[row - 1] {
            return Err(Error::CellOutsideDiagram { row, col });
        }
        let arm = self.parts[row - 1] - col;
        let leg = self.parts[row..].iter().take_while(|&&p| p >= col).count() as u32;
        Ok(arm + leg + 1)
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row_len)| {
                (0..row_len as usize)
                    .map(|j| (row_len - 1 - j as u32) + (conj.parts[j] - i as u32))
                    .collect()
            })
            .collect()
    }

    /// Largest part plus number of parts minus one; 0 for the empty partition.
    ///
    /// This is also the largest hook length, attained at the top-left cell.
    pub fn perimeter(&self) -> u32 {
        match self.parts.first() {
            Some(&first) => first + (self.parts.len() as u32 - 1),
            None => 0,
        }
    }

    /// True iff no cell has hook length `t`.
    pub fn is_t_core(&self, t: u32) -> Result<bool> {
        if t == 0 {
            return Err(Error::ZeroModulus);
        }
        if t > self.perimeter() {
            return Ok(true);
        }
        Ok(!self.hook_lengths().iter().flatten().any(|&h| h == t))
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn has_odd_parts(&self) -> bool {
        self.parts.iter().all(|&p| p % 2 == 1)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let mut conj = Vec::with_capacity(width as usize);
        let mut rows = self.parts.len();
        for col in 1..=width {
            while rows > 0 && self.parts[rows - 1] < col {
                rows -= 1;
            }
            conj.push(rows as u32);
        }
        Partition { parts: conj }
    }

    pub fn is_self_conjugate(&self) -> bool {
        // the conjugate has `largest()` parts; checking first avoids building
        // a huge conjugate for a long first row
        self.largest() as usize == self.len() && self.conjugate() == *self
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill_partitions(n, n, &mut current, &mut out);
        out
    }

    /// Every partition of size at most `n`, in canonical order.
    pub fn all_up_to_size(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }
}

fn fill_partitions(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, current, out);
        current.pop();
    }
}

/// Canonical order: size ascending, then parts in descending lexicographic order.
pub fn canonical_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.parts.cmp(&a.parts))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parts)
    }
}

pub(crate) fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Parses `3,1`, `(3,1)`, `{3, 1}`, `[3 1]` or an empty list into integers.
pub(crate) fn parse_int_list(input: &str) -> Result<Vec<u32>> {
    let trimmed = input.trim();
    let inner = [("(", ")"), ("{", "}"), ("[", "]")]
        .iter()
        .find_map(|(open, close)| trimmed.strip_prefix(open)?.strip_suffix(close))
        .unwrap_or(trimmed)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let tokens: Vec<&str> = if inner.contains(',') {
        inner.split(',').map(str::trim).collect()
    } else {
        inner.split_whitespace().collect()
    };
    tokens
        .into_iter()
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(format!(
                    "expected a nonnegative integer, found {tok:?}"
                )));
            }
            tok.parse::<u32>()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}
