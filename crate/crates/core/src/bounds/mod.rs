//! Closed-form values and bounds, evaluated in exact rational arithmetic.

mod pick;
mod verify;

pub use pick::{pick_interior, triangle_interior_enumerate, LatticeTriangle};
pub use verify::{convergence_sweep, verify_instance, BoundCheck, DensityReport};

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub};

use crate::error::{Error, Result};

/// Exact rational with 64-bit numerator and denominator, always normalised.
pub type Rational = Ratio<i64>;

pub(crate) fn rat(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

pub(crate) fn rat_usize(num: usize, den: usize) -> Result<Rational> {
    let num = i64::try_from(num).map_err(|_| Error::Overflow)?;
    let den = i64::try_from(den).map_err(|_| Error::Overflow)?;
    Ok(rat(num, den))
}

pub(crate) fn add(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn sub(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: &Rational, b: &Rational) -> Result<Rational> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn check_k(k: u32) -> Result<i64> {
    if k < 2 {
        Err(Error::InvalidK(k))
    } else {
        Ok(k as i64)
    }
}

/// The limiting two-dimensional density `(k^2 - 2) / k^2`.
pub fn limit_density(k: u32) -> Result<Rational> {
    let k = check_k(k)?;
    let sq = k.checked_mul(k).ok_or(Error::Overflow)?;
    Ok(rat(sq - 2, sq))
}

/// The one-dimensional sandwich `1 - 1/k <= nu_k(n) <= 1 - 1/k + 1/n`.
pub fn oned_bounds(k: u32, n: i64) -> Result<(Rational, Rational)> {
    let k = check_k(k)?;
    if n < 1 {
        return Err(Error::NonPositiveExtent);
    }
    let lower = rat(k - 1, k);
    let upper = add(&lower, &rat(1, n))?;
    Ok((lower, upper))
}

/// `floor((n1*n2 + n1 + n2 - 1) / 2)`, the exact 2-sum `(n1, n2)`-free optimum
/// on `[n1] x [n2]`. Both arguments must be at least 1.
pub fn k2_exact_2d(n1: u64, n2: u64) -> u64 {
    assert!(n1 >= 1 && n2 >= 1, "extents must be positive");
    (n1 * n2 + n1 + n2 - 1) / 2
}

/// `n^d - ceil((n-1)^d / 2)`, the exact 2-sum `(n, ..., n)`-free optimum on
/// `[n]^d`.
pub fn k2_exact_ddim(n: u64, d: usize) -> Result<u64> {
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidDimension(d));
    }
    if n < 1 {
        return Err(Error::NonPositiveExtent);
    }
    let d = d as u32;
    let full = n.checked_pow(d).ok_or(Error::Overflow)?;
    let inner = (n - 1).pow(d);
    Ok(full - inner.div_ceil(2))
}
