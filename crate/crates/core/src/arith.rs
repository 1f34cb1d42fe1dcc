//! Exact integer helpers shared by every module.
//!
//! Parameters live in `i128`. Anything that multiplies three or more of them
//! together (Krein conditions, the absolute bound, the maximal-clique cubic)
//! is carried out in a 256-bit [`Wide`] with checked operations, so a result
//! is either exact or an [`Overflow`] error. Nothing here touches floats.

use thiserror::Error;

/// 256-bit signed integer used for products of parameters.
pub type Wide = ethnum::I256;

/// An exact computation left the representable range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow while computing {0}")]
pub struct Overflow(pub &'static str);

#[inline]
pub fn wide(x: i128) -> Wide {
    Wide::from(x)
}

#[inline]
pub(crate) fn mul(a: Wide, b: Wide, what: &'static str) -> Result<Wide, Overflow> {
    a.checked_mul(b).ok_or(Overflow(what))
}

#[inline]
pub(crate) fn add(a: Wide, b: Wide, what: &'static str) -> Result<Wide, Overflow> {
    a.checked_add(b).ok_or(Overflow(what))
}

#[inline]
pub(crate) fn sub(a: Wide, b: Wide, what: &'static str) -> Result<Wide, Overflow> {
    a.checked_sub(b).ok_or(Overflow(what))
}

/// Product of `i128` factors in 256-bit arithmetic.
pub(crate) fn product(factors: &[i128], what: &'static str) -> Result<Wide, Overflow> {
    factors
        .iter()
        .try_fold(Wide::ONE, |acc, &f| mul(acc, wide(f), what))
}

pub(crate) fn narrow(x: Wide, what: &'static str) -> Result<i128, Overflow> {
    i128::try_from(x).map_err(|_| Overflow(what))
}

#[inline]
pub(crate) fn checked_mul(a: i128, b: i128, what: &'static str) -> Result<i128, Overflow> {
    a.checked_mul(b).ok_or(Overflow(what))
}

/// `⌊√n⌋` for `n ≥ 0`.
pub fn isqrt_floor(n: i128) -> i128 {
    assert!(n >= 0, "isqrt of a negative number");
    n.isqrt()
}

/// `⌈√n⌉` for `n ≥ 0`.
pub fn isqrt_ceil(n: i128) -> i128 {
    let r = isqrt_floor(n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// The integer square root of `n` if `n` is a perfect square.
pub fn exact_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// `⌊a / b⌋` for `b > 0`, rounding toward negative infinity.
pub fn div_floor(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

/// `⌈a / b⌉` for `b > 0`.
pub fn div_ceil(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    -(-a).div_euclid(b)
}
