//! Grids of `(s,t)`-core counts, with infinite cells where `gcd(s,t) > 1`.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::Error;
use crate::search::{count_core, Filter};

pub const CSV_INFINITY: &str = "inf";
pub const PRETTY_INFINITY: &str = "∞";

/// Published counts of `(s,t)`-cores into distinct parts for `s, t <= 12`;
/// `None` marks an infinite family.
pub const REFERENCE_DISTINCT_TABLE: [[Option<u32>; 12]; 12] = {
    const I: Option<u32> = None;
    const fn c(n: u32) -> Option<u32> {
        Some(n)
    }
    [
        [
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
            c(1),
        ],
        [c(1), I, c(2), I, c(3), I, c(4), I, c(5), I, c(6), I],
        [c(1), c(2), I, c(3), c(4), I, c(5), c(6), I, c(7), c(8), I],
        [c(1), I, c(3), I, c(5), I, c(8), I, c(11), I, c(15), I],
        [
            c(1),
            c(3),
            c(4),
            c(5),
            I,
            c(8),
            c(16),
            c(18),
            c(16),
            I,
            c(21),
            c(38),
        ],
        [c(1), I, I, I, c(8), I, c(13), I, I, I, c(32), I],
        [
            c(1),
            c(4),
            c(5),
            c(8),
            c(16),
            c(13),
            I,
            c(21),
            c(64),
            c(50),
            c(64),
            c(114),
        ],
        [c(1), I, c(6), I, c(18), I, c(21), I, c(34), I, c(101), I],
        [c(1), c(5), I, c(11), c(16), I, c(64), c(34), I, c(55), c(256), I],
        [c(1), I, c(7), I, I, I, c(50), I, c(55), I, c(89), I],
        [
            c(1),
            c(6),
            c(8),
            c(15),
            c(21),
            c(32),
            c(64),
            c(101),
            c(256),
            c(89),
            I,
            c(144),
        ],
        [c(1), I, I, I, c(38), I, c(114), I, I, I, c(144), I],
    ]
};

/// Reference cell for `1 <= s, t <= 12`: `Some(None)` is infinite.
pub fn reference_distinct_cell(s: u32, t: u32) -> Option<Option<u32>> {
    if !(1..=12).contains(&s) || !(1..=12).contains(&t) {
        return None;
    }
    Some(REFERENCE_DISTINCT_TABLE[s as usize - 1][t as usize - 1])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Infinite,
    Count(BigUint),
}

impl Cell {
    pub fn render(&self, infinity: &str) -> String {
        match self {
            Cell::Infinite => infinity.to_string(),
            Cell::Count(n) => n.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreTable {
    pub filter: Filter,
    pub max_s: u32,
    pub max_t: u32,
    /// `rows[s - 1][t - 1]`
    pub rows: Vec<Vec<Cell>>,
}

impl CoreTable {
    /// Computes every cell; cells are independent and evaluated in parallel
    /// on the current rayon pool.
    pub fn compute(max_s: u32, max_t: u32, filter: Filter) -> CoreTable {
        let coords: Vec<(u32, u32)> = (1..=max_s)
            .flat_map(|s| (1..=max_t).map(move |t| (s, t)))
            .collect();
        let cells: Vec<Cell> = coords
            .par_iter()
            .map(|&(s, t)| match count_core(s, t, filter) {
                Ok(n) => Cell::Count(n),
                Err(Error::InfiniteFamily { .. }) => Cell::Infinite,
                Err(e) => unreachable!("count_core({s},{t}) failed: {e}"),
            })
            .collect();
        let rows = if max_t == 0 {
            vec![Vec::new(); max_s as usize]
        } else {
            cells.chunks(max_t as usize).map(<[Cell]>::to_vec).collect()
        };
        CoreTable {
            filter,
            max_s,
            max_t,
            rows,
        }
    }

    pub fn cell(&self, s: u32, t: u32) -> Option<&Cell> {
        self.rows
            .get(s.checked_sub(1)? as usize)?
            .get(t.checked_sub(1)? as usize)
    }

    /// Header `s/t,1,...,max_t`, then one line per `s`; newline-terminated.
    pub fn to_csv(&self, infinity: &str) -> String {
        let mut out = String::from("s/t");
        for t in 1..=self.max_t {
            out.push_str(&format!(",{t}"));
        }
        out.push('\n');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&(i + 1).to_string());
            for cell in row {
                out.push(',');
                out.push_str(&cell.render(infinity));
            }
            out.push('\n');
        }
        out
    }

    /// Right-aligned text grid.
    pub fn to_pretty(&self, infinity: &str) -> String {
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|c| c.render(infinity)).collect())
            .collect();
        let width = rendered
            .iter()
            .flatten()
            .map(|s| s.chars().count())
            .chain((1..=self.max_t).map(|t| t.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = self.max_s.to_string().len().max(3);
        let mut out = format!("{:>label$} |", "s\\t");
        for t in 1..=self.max_t {
            out.push_str(&format!(" {t:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(label + 1));
        out.push('+');
        out.push_str(&"-".repeat((width + 1) * self.max_t as usize));
        out.push('\n');
        for (i, row) in rendered.iter().enumerate() {
            out.push_str(&format!("{:>label$} |", i + 1));
            for cell in row {
                let pad = width - cell.chars().count();
                out.push(' ');
                out.push_str(&" ".repeat(pad));
                out.push_str(cell);
            }
            out.push('\n');
        }
        out
    }
}
