use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{big_integer_root, Alpha};

/// Decimal digits used when bracketing irrational quantities for display.
const BRACKET_DIGITS: u32 = 9;

/// Outcome of comparing an edge count with `n²/4 - 2ksα·n^{(s+2)/(s+1)}`.
/// The verdict is exact; the margin is reported as a rational bracket.
#[derive(Clone, Debug, Serialize)]
pub struct EdgeBound {
    pub edges: u64,
    pub holds: bool,
    /// Lower and upper bounds on `e - bound`, as exact fractions.
    pub margin_lower: String,
    pub margin_upper: String,
    pub margin_approx: f64,
    /// Whether `n >= 8k²s²/α`, the hypothesis under which the bound is claimed.
    pub theorem_scale: bool,
}

fn big(x: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Brackets `n^{1/(s+1)}` within `10^-BRACKET_DIGITS`.
fn root_bracket(n: u64, e: u32) -> (BigRational, BigRational) {
    let scale = BigInt::from(10u32).pow(BRACKET_DIGITS);
    let scaled = BigInt::from(n) * scale.pow(e);
    let lo = big_integer_root(&scaled, e);
    let exact = lo.pow(e) == scaled;
    let hi = if exact { lo.clone() } else { &lo + 1 };
    (
        BigRational::new(lo, scale.clone()),
        BigRational::new(hi, scale),
    )
}

/// Exact test of `edges >= n²/4 - 2ksα·n^{(s+2)/(s+1)}`.
pub fn edge_bound(edges: u64, n: u64, s: u32, k: u32, alpha: Alpha) -> EdgeBound {
    let quarter_sq = big(n) * big(n) / big(4);
    let coeff = big(2 * k as u64 * s as u64) * alpha.to_big() * big(n);
    // deficit = n²/4 - e; bound holds iff coeff * r >= deficit, r = n^{1/(s+1)}
    let deficit = &quarter_sq - big(edges);
    let holds = if !deficit.is_positive() {
        true
    } else if coeff.is_zero() {
        false
    } else {
        // r >= c  <=>  n >= c^{s+1}  (both sides positive)
        let c = &deficit / &coeff;
        big(n) >= num_traits::pow(c, s as usize + 1)
    };

    let (r_lo, r_hi) = root_bracket(n, s + 1);
    let margin_lower = &coeff * r_lo - &deficit;
    let margin_upper = &coeff * r_hi - &deficit;
    let approx = (margin_lower.to_f64().unwrap_or(f64::NAN) + margin_upper.to_f64().unwrap_or(f64::NAN)) / 2.0;
    let theorem_scale = n as u128 * alpha.numer() as u128
        >= 8 * (k as u128 * k as u128 * s as u128 * s as u128) * alpha.denom() as u128;

    EdgeBound {
        edges,
        holds,
        margin_lower: margin_lower.to_string(),
        margin_upper: margin_upper.to_string(),
        margin_approx: approx,
        theorem_scale,
    }
}
