use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A positive rational parameter kept as an exact fraction `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alpha {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Alpha {
    /// Reduced fraction; `None` if `den == 0`.
    pub fn new(num: u64, den: u64) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den).max(1);
        Some(Alpha {
            num: num / g,
            den: den / g,
        })
    }

    pub fn half() -> Self {
        Alpha { num: 1, den: 2 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    /// `0 < α <= 1/2`.
    pub fn in_unit_half(&self) -> bool {
        self.num > 0 && 2 * (self.num as u128) <= self.den as u128
    }

    /// `⌊α · x⌋`.
    pub fn floor_mul(&self, x: u64) -> u64 {
        ((self.num as u128 * x as u128) / self.den as u128) as u64
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Alpha {
    type Err = String;

    /// Accepts `p/q` or an integer `p`. Decimal notation is rejected.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let parse = |x: &str| {
            x.parse::<u64>()
                .map_err(|_| format!("expected an exact fraction p/q, got {s:?}"))
        };
        Alpha::new(parse(p)?, parse(q)?).ok_or_else(|| format!("zero denominator in {s:?}"))
    }
}

impl Serialize for Alpha {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Alpha {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `⌊n^{1/e}⌋` for `e >= 1`.
pub fn integer_root(n: u64, e: u32) -> u64 {
    assert!(e >= 1);
    if e == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / e as f64).round() as u64;
    let pow_le = |r: u64| r.checked_pow(e).is_some_and(|p| p <= n);
    while !pow_le(r) {
        r -= 1;
    }
    while pow_le(r + 1) {
        r += 1;
    }
    r
}

/// `⌊x^{1/e}⌋` for a non-negative big integer.
pub fn big_integer_root(x: &BigInt, e: u32) -> BigInt {
    assert!(e >= 1);
    if x.is_zero() || x.is_one() || e == 1 {
        return x.clone();
    }
    x.nth_root(e)
}
