use num_integer::Integer;

use crate::betaset::BetaSet;
use crate::error::{Error, Result};

/// The gaps of the numerical semigroup generated by `s` and `t`, ordered by
/// `x - s < x` and `x - t < x`.
///
/// Beta-sets of `(s,t)`-cores are exactly the order ideals of this poset. A
/// generator of 0 imposes nothing (no hook has length 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapPoset {
    s: u32,
    t: u32,
    gaps: Vec<u32>,
    bound: Option<u32>,
}

impl GapPoset {
    /// All gaps of `<s, t>`; fails when the semigroup has infinitely many.
    pub fn new(s: u32, t: u32) -> Result<Self> {
        let gcd = s.gcd(&t);
        if gcd != 1 {
            return Err(Error::InfiniteFamily { s, t, gcd });
        }
        let limit = match frobenius_number(s, t) {
            Some(f) => u32::try_from(f)
                .map_err(|_| Error::OutOfRange(format!("Frobenius number of ({s},{t}) exceeds u32")))?,
            None => 0,
        };
        Ok(GapPoset {
            s,
            t,
            gaps: non_representable_up_to(s, t, limit),
            bound: None,
        })
    }

    /// Gaps no larger than `bound`, for any pair including non-coprime ones.
    pub fn bounded(s: u32, t: u32, bound: u32) -> Self {
        GapPoset {
            s,
            t,
            gaps: non_representable_up_to(s, t, bound),
            bound: Some(bound),
        }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Ascending.
    pub fn gaps(&self) -> &[u32] {
        &self.gaps
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    /// True when the gap set is the full (finite) gap set of `<s, t>`.
    pub fn is_complete(&self) -> bool {
        match self.bound {
            None => true,
            Some(b) => {
                s_t_coprime(self.s, self.t)
                    && frobenius_number(self.s, self.t).is_none_or(|f| f <= i64::from(b))
            }
        }
    }

    pub fn contains(&self, x: u32) -> bool {
        self.gaps.binary_search(&x).is_ok()
    }

    /// Elements directly below `x`.
    pub fn lower_covers(&self, x: u32) -> impl Iterator<Item = u32> + '_ {
        [self.s, self.t]
            .into_iter()
            .filter(move |&g| g > 0 && x > g)
            .map(move |g| x - g)
            .filter(move |&y| self.contains(y))
    }

    pub fn is_order_ideal(&self, beta: &BetaSet) -> bool {
        beta.elements().iter().all(|&x| {
            self.contains(x)
                && [self.s, self.t]
                    .into_iter()
                    .filter(|&g| g > 0 && x >= g)
                    .all(|g| beta.contains(x - g))
        })
    }
}

fn s_t_coprime(s: u32, t: u32) -> bool {
    s.gcd(&t) == 1
}

/// `st - s - t` for coprime `s, t >= 2`; `None` when every positive integer
/// is representable.
pub fn frobenius_number(s: u32, t: u32) -> Option<i64> {
    if !s_t_coprime(s, t) {
        return None;
    }
    let (s, t) = (i64::from(s), i64::from(t));
    let f = s * t - s - t;
    (f > 0).then_some(f)
}

fn non_representable_up_to(s: u32, t: u32, limit: u32) -> Vec<u32> {
    let limit = limit as usize;
    let mut representable = vec![false; limit + 1];
    representable[0] = true;
    let mut gaps = Vec::new();
    for x in 1..=limit {
        let via = |g: u32| g > 0 && x >= g as usize && representable[x - g as usize];
        representable[x] = via(s) || via(t);
        if !representable[x] {
            gaps.push(x as u32);
        }
    }
    gaps
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_counts_and_frobenius() {
        for s in 2..12u32 {
            for t in (s + 1)..14 {
                if s.gcd(&t) != 1 {
                    continue;
                }
                let poset = GapPoset::new(s, t).unwrap();
                assert_eq!(poset.gaps().len() as u32, (s - 1) * (t - 1) / 2, "({s},{t})");
                assert_eq!(
                    poset.gaps().last().map(|&g| i64::from(g)),
                    frobenius_number(s, t),
                    "({s},{t})"
                );
            }
        }
    }

    #[test]
    fn small_gap_sets() {
        assert_eq!(GapPoset::new(3, 5).unwrap().gaps(), &[1, 2, 4, 7]);
        assert_eq!(GapPoset::new(2, 3).unwrap().gaps(), &[1]);
        assert!(GapPoset::new(1, 9).unwrap().gaps().is_empty());
        assert!(GapPoset::new(1, 1).unwrap().gaps().is_empty());
        assert!(GapPoset::new(1, 0).unwrap().gaps().is_empty());
    }

    #[test]
    fn non_coprime_is_infinite() {
        assert_eq!(
            GapPoset::new(2, 4),
            Err(Error::InfiniteFamily { s: 2, t: 4, gcd: 2 })
        );
        assert_eq!(
            GapPoset::new(5, 5),
            Err(Error::InfiniteFamily { s: 5, t: 5, gcd: 5 })
        );
        assert!(GapPoset::new(3, 0).is_err());
    }

    #[test]
    fn bounded_non_coprime() {
        let poset = GapPoset::bounded(2, 4, 9);
        assert_eq!(poset.gaps(), &[1, 3, 5, 7, 9]);
        assert!(!poset.is_complete());
        assert!(GapPoset::bounded(3, 5, 7).is_complete());
        assert!(!GapPoset::bounded(3, 5, 6).is_complete());
    }

    #[test]
    fn covers_and_ideals() {
        let poset = GapPoset::new(3, 5).unwrap();
        assert_eq!(poset.lower_covers(7).collect::<Vec<_>>(), vec![4, 2]);
        assert_eq!(poset.lower_covers(4).collect::<Vec<_>>(), vec![1]);
        assert!(poset.is_order_ideal(&BetaSet::new([1, 4]).unwrap()));
        assert!(!poset.is_order_ideal(&BetaSet::new([4]).unwrap()));
        assert!(!poset.is_order_ideal(&BetaSet::new([3]).unwrap()));
    }
}
