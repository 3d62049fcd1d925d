//! Exact closed forms and recurrences: Fibonacci, Catalan, the counts of all
//! and of self-conjugate `(s,t)`-cores, and the generalized Fibonacci
//! polynomials `N_d(s)` and `M_d(s)` in the variable `d`.

use std::fmt;
use std::ops::Add;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn fib_memo() -> &'static RwLock<Vec<BigUint>> {
    static MEMO: OnceLock<RwLock<Vec<BigUint>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(vec![BigUint::zero(), BigUint::one()]))
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: u32) -> BigUint {
    let n = n as usize;
    if let Some(v) = fib_memo().read().expect("fibonacci memo poisoned").get(n) {
        return v.clone();
    }
    let mut memo = fib_memo().write().expect("fibonacci memo poisoned");
    while memo.len() <= n {
        let k = memo.len();
        let next = &memo[k - 1] + &memo[k - 2];
        memo.push(next);
    }
    memo[n].clone()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) since acc = C(n, i)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn exact_div(numerator: BigUint, denominator: u64) -> Result<BigUint> {
    let (q, r) = numerator.div_rem(&BigUint::from(denominator));
    if !r.is_zero() {
        return Err(Error::InexactDivision {
            numerator: numerator.to_string(),
            denominator: denominator.to_string(),
        });
    }
    Ok(q)
}

fn require_coprime(s: u32, t: u32) -> Result<()> {
    let gcd = s.gcd(&t);
    if gcd != 1 {
        return Err(Error::NotCoprime { s, t, gcd });
    }
    Ok(())
}

/// `C_s = binom(2s, s) / (s + 1)`.
pub fn catalan(s: u32) -> BigUint {
    let s = u64::from(s);
    exact_div(binomial(2 * s, s), s + 1).expect("Catalan numbers are integers")
}

/// Number of `(s,t)`-cores: `binom(s+t, s) / (s+t)`.
pub fn anderson_count(s: u32, t: u32) -> Result<BigUint> {
    require_coprime(s, t)?;
    let (s, t) = (u64::from(s), u64::from(t));
    exact_div(binomial(s + t, s), s + t)
}

/// Number of self-conjugate `(s,t)`-cores: `binom(⌊s/2⌋ + ⌊t/2⌋, ⌊s/2⌋)`.
pub fn fms_selfconjugate_count(s: u32, t: u32) -> Result<BigUint> {
    require_coprime(s, t)?;
    let (hs, ht) = (u64::from(s / 2), u64::from(t / 2));
    Ok(binomial(hs + ht, hs))
}

/// A polynomial in `d` with nonnegative integer coefficients; index = power.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CountPolynomial {
    coefficients: Vec<BigUint>,
}

impl CountPolynomial {
    pub fn new(coefficients: Vec<BigUint>) -> Self {
        let mut p = CountPolynomial { coefficients };
        p.trim();
        p
    }

    pub fn from_u64s(coefficients: &[u64]) -> Self {
        CountPolynomial::new(coefficients.iter().map(|&c| BigUint::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(Zero::is_zero) {
            self.coefficients.pop();
        }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    /// Multiplies by `d`.
    pub fn times_d(&self) -> Self {
        if self.coefficients.is_empty() {
            return self.clone();
        }
        let mut c = Vec::with_capacity(self.coefficients.len() + 1);
        c.push(BigUint::zero());
        c.extend(self.coefficients.iter().cloned());
        CountPolynomial { coefficients: c }
    }

    /// Evaluates at `d` by Horner's rule.
    pub fn eval(&self, d: u64) -> BigUint {
        self.coefficients
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * d + c)
    }
}

impl Add for &CountPolynomial {
    type Output = CountPolynomial;

    fn add(self, rhs: &CountPolynomial) -> CountPolynomial {
        let n = self.coefficients.len().max(rhs.coefficients.len());
        let zero = BigUint::zero();
        let coefficients = (0..n)
            .map(|i| self.coefficients.get(i).unwrap_or(&zero) + rhs.coefficients.get(i).unwrap_or(&zero))
            .collect();
        CountPolynomial::new(coefficients)
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if c.is_one() && power > 0 {
                String::new()
            } else {
                c.to_string()
            };
            match power {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}d")?,
                _ => write!(f, "{coeff}d^{power}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `X(s) = X(s-1) + d X(s-2)` from the given first two terms.
fn fibonacci_polynomial(s: u32, first: CountPolynomial, second: CountPolynomial) -> CountPolynomial {
    match s {
        0 => CountPolynomial::default(),
        1 => first,
        _ => {
            let (mut prev2, mut prev) = (first, second);
            for _ in 3..=s {
                let next = &prev + &prev2.times_d();
                prev2 = std::mem::replace(&mut prev, next);
            }
            prev
        }
    }
}

/// `N_d(s)`: `N(1) = 1`, `N(2) = d`. Counts `(s, ds-1)`-cores into distinct parts.
///
/// `s = 0` returns the zero polynomial.
pub fn n_poly(s: u32) -> CountPolynomial {
    fibonacci_polynomial(
        s,
        CountPolynomial::from_u64s(&[1]),
        CountPolynomial::from_u64s(&[0, 1]),
    )
}

/// `M_d(s)`: `M(1) = 1`, `M(2) = d + 1`. Counts nested twin-free `d`-tuples in `{1..s-1}`.
///
/// `s = 0` returns the zero polynomial.
pub fn m_poly(s: u32) -> CountPolynomial {
    fibonacci_polynomial(
        s,
        CountPolynomial::from_u64s(&[1]),
        CountPolynomial::from_u64s(&[1, 1]),
    )
}

/// Checks `N_d(s) = M_d(s-1) + (d-1) M_d(s-2)` at the given `d`.
pub fn check_core_twinfree_identity(s: u32, d: u64) -> Result<bool> {
    if s < 3 || d < 1 {
        return Err(Error::OutOfRange(format!(
            "identity needs s >= 3 and d >= 1 (got s={s}, d={d})"
        )));
    }
    let lhs = n_poly(s).eval(d);
    let rhs = m_poly(s - 1).eval(d) + m_poly(s - 2).eval(d) * (d - 1);
    Ok(lhs == rhs)
}
