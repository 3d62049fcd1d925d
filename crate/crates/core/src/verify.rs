//! Claim registry: each claim pairs an exhaustive enumeration with a closed
//! form or recurrence and records every parameter it checked.
//!
//! The expected side of every claim is drawn from a [`ClosedForms`] table, so
//! a harness test can swap in a mutated formula and watch the claim fail.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bijection::{distinct_to_odd, odd_to_distinct};
use crate::error::{Error, Result};
use crate::partition::{canonical_cmp, Partition};
use crate::search::{
    count_core, count_twin_free_tuples, enumerate_core, enumerate_distinct_by_perimeter,
    enumerate_odd_by_perimeter, Filter,
};
use crate::sequences::{anderson_count, fibonacci, fms_selfconjugate_count, n_poly};
use crate::table::{reference_distinct_cell, CSV_INFINITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// `(s, s+1)`-cores into distinct parts number `F_{s+1}`.
    FibDistinct,
    /// Same count, via the set of distinct-part partitions of perimeter `< s`.
    Conjecture1,
    /// Distinct-part and odd-part partitions of perimeter `M` both number
    /// `F_M`, matched by the composition bijection.
    DistinctOdd,
    /// `(s, ds-1)`-cores into distinct parts = nested twin-free tuples = `N_d(s)`.
    FibxDistinct,
    /// `(s, s+2)`-cores into distinct parts number `2^{s-1}` for odd `s`.
    Conjecture2,
    /// Largest `(s, s+2)`-core into distinct parts: size, parts, largest part, uniqueness.
    MaxsizeSS2,
    /// Largest `(s, s+1)`-core into distinct parts has size `⌊s(s+1)/6⌋`.
    AmdeberhanMaxsize,
    /// All `(s,t)`-cores number `binom(s+t,s)/(s+t)`.
    Anderson,
    /// Self-conjugate `(s,t)`-cores number `binom(⌊s/2⌋+⌊t/2⌋, ⌊s/2⌋)`.
    Fms,
    /// The published grid of distinct-part core counts for `s, t <= 12`.
    Table2,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::FibDistinct,
        Claim::Conjecture1,
        Claim::DistinctOdd,
        Claim::FibxDistinct,
        Claim::Conjecture2,
        Claim::MaxsizeSS2,
        Claim::AmdeberhanMaxsize,
        Claim::Anderson,
        Claim::Fms,
        Claim::Table2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::FibDistinct => "fib-distinct",
            Claim::Conjecture1 => "conjecture1",
            Claim::DistinctOdd => "distinct-odd",
            Claim::FibxDistinct => "fibx-distinct",
            Claim::Conjecture2 => "conjecture2",
            Claim::MaxsizeSS2 => "maxsize-s-s2",
            Claim::AmdeberhanMaxsize => "amdeberhan-maxsize",
            Claim::Anderson => "anderson",
            Claim::Fms => "fms",
            Claim::Table2 => "table2",
        }
    }

    pub fn valid_ids() -> String {
        Claim::ALL.map(Claim::id).join(", ")
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL.into_iter().find(|c| c.id() == s).ok_or_else(|| {
            Error::Parse(format!(
                "unknown claim {s:?}; valid claims: {}",
                Claim::valid_ids()
            ))
        })
    }
}

/// Upper limits for a verification run; unset fields take per-claim defaults.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RangeOptions {
    pub max_s: Option<u32>,
    pub max_t: Option<u32>,
    pub max_m: Option<u32>,
    pub max_d: Option<u32>,
    pub max_sum: Option<u32>,
}

pub type Unary = Arc<dyn Fn(u32) -> BigUint + Send + Sync>;
pub type Binary = Arc<dyn Fn(u32, u32) -> BigUint + Send + Sync>;
pub type Observation = Arc<dyn Fn(u32) -> Option<u64> + Send + Sync>;

/// The expected side of every claim.
#[derive(Clone)]
pub struct ClosedForms {
    pub fibonacci: Unary,
    pub anderson: Binary,
    pub self_conjugate: Binary,
    /// `N_d(s)` evaluated at `(s, d)`.
    pub generalized_fibonacci: Binary,
    pub conjecture2: Unary,
    /// `(s²-1)(s+3)(5s+17)/384`
    pub s_s2_max_size: Observation,
    /// `(s-1)(s+5)/8`
    pub s_s2_max_parts: Observation,
    /// `3(s²-1)/8`
    pub s_s2_max_largest: Observation,
    /// `⌊s(s+1)/6⌋`
    pub s_s1_max_size: Observation,
    /// 2 if `s ≡ 1 (mod 3)` and `s >= 4`, else 1
    pub s_s1_max_witnesses: Observation,
    /// Reference cell, `None` when infinite.
    pub reference_cell: Arc<dyn Fn(u32, u32) -> Option<u64> + Send + Sync>,
}

fn exact_ratio(numerator: u64, denominator: u64) -> Option<u64> {
    let (q, r) = numerator.div_rem(&denominator);
    (r == 0).then_some(q)
}

impl ClosedForms {
    pub fn standard() -> Self {
        ClosedForms {
            fibonacci: Arc::new(fibonacci),
            anderson: Arc::new(|s, t| anderson_count(s, t).expect("coprime pairs only")),
            self_conjugate: Arc::new(|s, t| fms_selfconjugate_count(s, t).expect("coprime pairs only")),
            generalized_fibonacci: Arc::new(|s, d| n_poly(s).eval(u64::from(d))),
            conjecture2: Arc::new(|s| BigUint::from(2u32).pow(s - 1)),
            s_s2_max_size: Arc::new(|s| {
                let s = u64::from(s);
                exact_ratio((s * s - 1) * (s + 3) * (5 * s + 17), 384)
            }),
            s_s2_max_parts: Arc::new(|s| {
                let s = u64::from(s);
                exact_ratio((s - 1) * (s + 5), 8)
            }),
            s_s2_max_largest: Arc::new(|s| {
                let s = u64::from(s);
                exact_ratio(3 * (s * s - 1), 8)
            }),
            s_s1_max_size: Arc::new(|s| {
                let s = u64::from(s);
                Some(s * (s + 1) / 6)
            }),
            s_s1_max_witnesses: Arc::new(|s| Some(if s % 3 == 1 && s >= 4 { 2 } else { 1 })),
            reference_cell: Arc::new(|s, t| reference_distinct_cell(s, t).flatten().map(u64::from)),
        }
    }
}

impl Default for ClosedForms {
    fn default() -> Self {
        ClosedForms::standard()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub params: Value,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

impl CaseResult {
    fn compare(params: Value, expected: impl ToString, got: impl ToString) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        CaseResult {
            ok: expected == got,
            params,
            expected,
            got,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: String,
    pub range: String,
    pub cases: Vec<CaseResult>,
    pub pass: bool,
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.ok)
    }

    /// Parses a report and checks that `pass` agrees with the cases.
    pub fn parse(input: &str) -> Result<Self> {
        let report: VerificationReport =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        if report.pass != report.cases.iter().all(|c| c.ok) {
            return Err(Error::Parse("pass flag disagrees with case outcomes".into()));
        }
        if report.cases.iter().any(|c| c.ok != (c.expected == c.got)) {
            return Err(Error::Parse("case ok flag disagrees with expected/got".into()));
        }
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Runs `claim` against the standard closed forms.
pub fn verify(claim: Claim, range: &RangeOptions) -> VerificationReport {
    run_claim(claim, range, &ClosedForms::standard())
}

/// Runs `claim`, taking every expected value from `forms`.
pub fn run_claim(claim: Claim, range: &RangeOptions, forms: &ClosedForms) -> VerificationReport {
    let started = Instant::now();
    let (range_desc, cases) = match claim {
        Claim::FibDistinct => fib_distinct(range, forms),
        Claim::Conjecture1 => conjecture1(range, forms),
        Claim::DistinctOdd => distinct_odd(range, forms),
        Claim::FibxDistinct => fibx_distinct(range, forms),
        Claim::Conjecture2 => conjecture2(range, forms),
        Claim::MaxsizeSS2 => maxsize_s_s2(range, forms),
        Claim::AmdeberhanMaxsize => amdeberhan(range, forms),
        Claim::Anderson => all_cores(range, forms, Filter::All),
        Claim::Fms => all_cores(range, forms, Filter::SelfConjugate),
        Claim::Table2 => table2(range, forms),
    };
    VerificationReport {
        claim: claim.id().to_string(),
        range: range_desc,
        pass: cases.iter().all(|c| c.ok),
        cases,
        duration: started.elapsed(),
    }
}

type Outcome = (String, Vec<CaseResult>);

fn fib_distinct(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(20);
    let cases = (1..=max_s)
        .into_par_iter()
        .map(|s| {
            let got = count_core(s, s + 1, Filter::Distinct).expect("consecutive integers are coprime");
            CaseResult::compare(json!({ "s": s }), (forms.fibonacci)(s + 1), got)
        })
        .collect();
    (format!("s=1..={max_s}"), cases)
}

fn conjecture1(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(20);
    let cases = (1..=max_s)
        .into_par_iter()
        .map(|s| {
            let cores = enumerate_core(s, s + 1, Filter::Distinct)
                .expect("consecutive integers are coprime")
                .partitions;
            let mut short: Vec<Partition> = (0..s).flat_map(enumerate_distinct_by_perimeter).collect();
            short.sort_by(canonical_cmp);
            let got = if cores == short {
                cores.len().to_string()
            } else {
                format!("cores={} perimeter<s={} (sets differ)", cores.len(), short.len())
            };
            CaseResult::compare(json!({ "s": s }), (forms.fibonacci)(s + 1), got)
        })
        .collect();
    (format!("s=1..={max_s}"), cases)
}

fn bijection_outcome(distinct: &[Partition], odd: &[Partition], m: u32) -> String {
    let odd_set: BTreeSet<&[u32]> = odd.iter().map(Partition::parts).collect();
    let mut images = BTreeSet::new();
    for lam in distinct {
        let Ok(image) = distinct_to_odd(lam) else {
            return format!("{lam} rejected");
        };
        if image.perimeter() != m || !odd_set.contains(image.parts()) {
            return format!("{lam} -> {image} leaves the odd set");
        }
        if odd_to_distinct(&image).as_ref() != Ok(lam) {
            return format!("{lam} -> {image} does not invert");
        }
        images.insert(image.into_parts());
    }
    if images.len() != odd.len() {
        return format!("image covers {} of {} odd partitions", images.len(), odd.len());
    }
    "bijective".to_string()
}

fn distinct_odd(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_m = range.max_m.unwrap_or(20);
    let cases = (1..=max_m)
        .into_par_iter()
        .flat_map_iter(|m| {
            let distinct = enumerate_distinct_by_perimeter(m);
            let odd = enumerate_odd_by_perimeter(m);
            let expected = (forms.fibonacci)(m);
            [
                CaseResult::compare(json!({ "M": m, "family": "distinct" }), &expected, distinct.len()),
                CaseResult::compare(json!({ "M": m, "family": "odd" }), &expected, odd.len()),
                CaseResult::compare(
                    json!({ "M": m, "check": "bijection" }),
                    "bijective",
                    bijection_outcome(&distinct, &odd, m),
                ),
            ]
        })
        .collect();
    (format!("M=1..={max_m}"), cases)
}

fn fibx_distinct(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(8);
    let max_d = range.max_d.unwrap_or(3);
    let grid: Vec<(u32, u32)> = (1..=max_d)
        .flat_map(|d| (1..=max_s).map(move |s| (d, s)))
        .collect();
    let cases = grid
        .into_par_iter()
        .map(|(d, s)| {
            let t = d * s - 1;
            let cores = count_core(s, t, Filter::Distinct).expect("s and ds-1 are coprime");
            let tuples = count_twin_free_tuples(s, d, true).expect("small parameters");
            let got = if cores == tuples {
                cores.to_string()
            } else {
                format!("cores={cores} tuples={tuples}")
            };
            CaseResult::compare(
                json!({ "s": s, "d": d, "t": t }),
                (forms.generalized_fibonacci)(s, d),
                got,
            )
        })
        .collect();
    (format!("s=1..={max_s}, d=1..={max_d}"), cases)
}

fn odd_s(max_s: u32) -> Vec<u32> {
    (3..=max_s).step_by(2).collect()
}

fn conjecture2(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(15);
    let cases = odd_s(max_s)
        .into_par_iter()
        .map(|s| {
            let got = count_core(s, s + 2, Filter::Distinct).expect("odd s is coprime to s+2");
            CaseResult::compare(json!({ "s": s, "t": s + 2 }), (forms.conjecture2)(s), got)
        })
        .collect();
    (format!("odd s=3..={max_s}"), cases)
}

fn show(v: Option<u64>) -> String {
    v.map_or_else(|| "non-integral".to_string(), |x| x.to_string())
}

fn maxsize_s_s2(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(15);
    let cases = odd_s(max_s)
        .into_par_iter()
        .map(|s| {
            let res = enumerate_core(s, s + 2, Filter::Distinct).expect("odd s is coprime to s+2");
            let witness = &res.max_size_witnesses[0];
            let most_parts = res.partitions.iter().map(Partition::len).max().unwrap_or(0);
            let biggest_part = res.partitions.iter().map(Partition::largest).max().unwrap_or(0);
            let got = format!(
                "size={} witnesses={} parts={} largest={} most_parts={} biggest_part={}",
                res.max_size,
                res.max_size_witnesses.len(),
                witness.len(),
                witness.largest(),
                most_parts,
                biggest_part,
            );
            let parts = show((forms.s_s2_max_parts)(s));
            let largest = show((forms.s_s2_max_largest)(s));
            let expected = format!(
                "size={} witnesses=1 parts={parts} largest={largest} most_parts={parts} biggest_part={largest}",
                show((forms.s_s2_max_size)(s)),
            );
            CaseResult::compare(json!({ "s": s, "t": s + 2 }), expected, got)
        })
        .collect();
    (format!("odd s=3..={max_s}"), cases)
}

fn amdeberhan(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(18);
    let cases = (1..=max_s)
        .into_par_iter()
        .map(|s| {
            let res = enumerate_core(s, s + 1, Filter::Distinct).expect("consecutive integers are coprime");
            let got = format!("size={} witnesses={}", res.max_size, res.max_size_witnesses.len());
            let expected = format!(
                "size={} witnesses={}",
                show((forms.s_s1_max_size)(s)),
                show((forms.s_s1_max_witnesses)(s))
            );
            CaseResult::compare(json!({ "s": s, "t": s + 1 }), expected, got)
        })
        .collect();
    (format!("s=1..={max_s}"), cases)
}

fn all_cores(range: &RangeOptions, forms: &ClosedForms, filter: Filter) -> Outcome {
    let max_sum = range.max_sum.unwrap_or(15);
    let pairs: Vec<(u32, u32)> = (1..max_sum)
        .flat_map(|s| ((s + 1)..=(max_sum - s)).map(move |t| (s, t)))
        .filter(|&(s, t)| s.gcd(&t) == 1)
        .collect();
    let formula = match filter {
        Filter::SelfConjugate => &forms.self_conjugate,
        _ => &forms.anderson,
    };
    let cases = pairs
        .into_par_iter()
        .map(|(s, t)| {
            let got = count_core(s, t, filter).expect("coprime by construction");
            CaseResult::compare(json!({ "s": s, "t": t }), formula(s, t), got)
        })
        .collect();
    (format!("coprime 1<=s<t, s+t<={max_sum}"), cases)
}

fn table2(range: &RangeOptions, forms: &ClosedForms) -> Outcome {
    let max_s = range.max_s.unwrap_or(12).min(12);
    let max_t = range.max_t.unwrap_or(12).min(12);
    let grid: Vec<(u32, u32)> = (1..=max_s)
        .flat_map(|s| (1..=max_t).map(move |t| (s, t)))
        .collect();
    let cases = grid
        .into_par_iter()
        .map(|(s, t)| {
            let got = match count_core(s, t, Filter::Distinct) {
                Ok(n) => n.to_string(),
                Err(Error::InfiniteFamily { .. }) => CSV_INFINITY.to_string(),
                Err(e) => format!("error: {e}"),
            };
            let expected =
                (forms.reference_cell)(s, t).map_or_else(|| CSV_INFINITY.to_string(), |n| n.to_string());
            CaseResult::compare(json!({ "s": s, "t": t }), expected, got)
        })
        .collect();
    (format!("s=1..={max_s}, t=1..={max_t}"), cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>(), Ok(c));
        }
        let err = "nope".parse::<Claim>().unwrap_err().to_string();
        assert!(err.contains("fib-distinct") && err.contains("table2"));
    }

    #[test]
    fn small_ranges_pass() {
        let range = RangeOptions {
            max_s: Some(7),
            max_t: Some(6),
            max_m: Some(8),
            max_d: Some(2),
            max_sum: Some(9),
        };
        for claim in Claim::ALL {
            let report = verify(claim, &range);
            assert!(
                report.pass,
                "{claim}: {:?}",
                report.mismatches().collect::<Vec<_>>()
            );
            assert!(!report.cases.is_empty(), "{claim}");
        }
    }

    #[test]
    fn report_json_round_trip() {
        let report = verify(
            Claim::Conjecture2,
            &RangeOptions {
                max_s: Some(7),
                ..Default::default()
            },
        );
        let parsed = VerificationReport::parse(&report.to_json()).unwrap();
        assert_eq!(parsed.cases, report.cases);
        assert_eq!(parsed.to_json(), report.to_json());
        let tampered = report.to_json().replacen("\"pass\": true", "\"pass\": false", 1);
        assert!(VerificationReport::parse(&tampered).is_err());
    }

    #[test]
    fn observation_formulas_at_published_points() {
        let forms = ClosedForms::standard();
        let sizes: Vec<_> = odd_s(17)
            .into_iter()
            .map(|s| (forms.s_s2_max_size)(s).unwrap())
            .collect();
        assert_eq!(sizes, vec![4, 21, 65, 155, 315, 574, 966, 1530]);
        assert_eq!((forms.s_s2_max_parts)(7), Some(9));
        assert_eq!((forms.s_s2_max_largest)(7), Some(18));
    }
}
