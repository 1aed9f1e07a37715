//! Cubic sums `Σ C(n,k) z^k W_{k+s}^3` for `z ∈ {1, -1, 2}`.

use num_bigint::BigInt;

use super::util::{f, l, q};
use super::IdentityId;
use crate::integers::{is_even, pow5, sign, Index, Rational};
use crate::{Error, Result};

/// Closed forms C18–C23.
pub fn cubic_rhs(id: IdentityId, n: Index, s: Index) -> Result<Rational> {
    use IdentityId::*;
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    let (n, s) = (n as i128, s as i128);
    let two_n = BigInt::from(1) << n as usize;
    let sgn_s = sign(s);
    let sgn_n = sign(n);
    let fifth = pow5(-1)?;

    let v = match id {
        C18 => q(&two_n * f(2 * n + 3 * s)? + 3 * f(n - s)?) * fifth,
        C19 => q(&two_n * l(2 * n + 3 * s)? + 3 * l(n - s)?),
        C20 => q(sgn_n * &two_n * f(n + 3 * s)? - 3 * sgn_s * f(2 * n + s)?) * fifth,
        C21 => q(sgn_n * &two_n * l(n + 3 * s)? + 3 * sgn_s * l(2 * n + s)?),
        C22 if is_even(n) => pow5(n / 2 - 1)? * q(f(3 * n + 3 * s)? - 3 * sgn_s * f(s)?),
        C22 => pow5((n - 3) / 2)? * q(l(3 * n + 3 * s)? + 3 * sgn_s * l(s)?),
        C23 if is_even(n) => pow5(n / 2)? * q(l(3 * n + 3 * s)? + 3 * sgn_s * l(s)?),
        C23 => pow5((n + 1) / 2)? * q(f(3 * n + 3 * s)? - 3 * sgn_s * f(s)?),
        other => unreachable!("{other} is not a cubic identity"),
    };
    Ok(v)
}
