//! Fibonacci and Lucas numbers for any integer index, exact binomials, and
//! the term-by-term summation oracle.

use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use num_bigint::BigInt;

/// Normalized arbitrary-precision rational (`den > 0`, lowest terms).
pub type Rational = num_rational::BigRational;

/// A sequence subscript or an identity parameter.
pub type Index = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SequenceKind {
    #[serde(rename = "F")]
    Fib,
    #[serde(rename = "L")]
    Lucas,
}

impl SequenceKind {
    pub fn eval(self, n: Index) -> BigInt {
        match self {
            SequenceKind::Fib => fib(n),
            SequenceKind::Lucas => lucas(n),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            SequenceKind::Fib => 'F',
            SequenceKind::Lucas => 'L',
        }
    }
}

impl std::fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl std::str::FromStr for SequenceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "F" | "f" | "fib" | "FIB" => Ok(SequenceKind::Fib),
            "L" | "l" | "lucas" | "LUCAS" => Ok(SequenceKind::Lucas),
            other => Err(format!("unknown sequence `{other}`, expected F or L")),
        }
    }
}

/// `(F_k, F_{k+1})` for `k >= 0` by fast doubling over the bits of `k`.
fn doubling(k: u64) -> (BigInt, BigInt) {
    let mut a = BigInt::zero();
    let mut b = BigInt::one();
    if k == 0 {
        return (a, b);
    }
    for bit in (0..64 - k.leading_zeros()).rev() {
        // F_{2t} = F_t (2F_{t+1} - F_t), F_{2t+1} = F_t^2 + F_{t+1}^2
        let c = &a * ((&b << 1) - &a);
        let d = &a * &a + &b * &b;
        if (k >> bit) & 1 == 1 {
            b = &c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    (a, b)
}

/// `F_n` for any integer `n`, with `F_{-n} = (-1)^{n-1} F_n`.
pub fn fib(n: Index) -> BigInt {
    let (f, _) = doubling(n.unsigned_abs());
    if n < 0 && n % 2 == 0 {
        -f
    } else {
        f
    }
}

/// `L_n` for any integer `n`, with `L_{-n} = (-1)^n L_n`.
pub fn lucas(n: Index) -> BigInt {
    let (f, g) = doubling(n.unsigned_abs());
    // L_k = F_{k-1} + F_{k+1} = 2F_{k+1} - F_k
    let l: BigInt = (g << 1) - f;
    if n < 0 && n % 2 != 0 {
        -l
    } else {
        l
    }
}

/// `(F_n, F_{n+1})` for any integer `n`.
pub fn fib_pair(n: Index) -> (BigInt, BigInt) {
    if n >= 0 {
        doubling(n as u64)
    } else {
        (fib(n), fib(n + 1))
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: Index, k: Index) -> Result<BigInt> {
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    if k < 0 || k > n {
        return Ok(BigInt::zero());
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c *= n - i;
        c /= i + 1;
    }
    Ok(c)
}

pub(crate) fn checked_index(v: i128, what: &'static str) -> Result<Index> {
    Index::try_from(v).map_err(|_| Error::IndexOverflow(what))
}

fn exponent(m: Index, name: &'static str) -> Result<u32> {
    if m < 0 {
        return Err(Error::Negative { name, value: m });
    }
    u32::try_from(m).map_err(|_| Error::IndexOverflow(name))
}

/// `Σ_{k=0}^{n} C(n,k) x^{n-k} z^k W_{j(rk+s)}^m`, summed term by term.
///
/// `0^0 = 1` for the weight powers and for `W^m`. Every closed form in the
/// crate is checked against this function.
#[allow(clippy::too_many_arguments)]
pub fn direct_sum(
    n: Index,
    x: &Rational,
    z: &Rational,
    j: Index,
    r: Index,
    s: Index,
    m: Index,
    kind: SequenceKind,
) -> Result<Rational> {
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    let m = exponent(m, "m")?;

    // Clearing denominators keeps the inner loop in integers:
    // x = a/d, z = b/d gives d^n * sum = Σ C(n,k) a^{n-k} b^k W^m.
    let den = x.denom().lcm(z.denom());
    let a = x.numer() * (&den / x.denom());
    let b = z.numer() * (&den / z.denom());

    let mut a_pows = Vec::with_capacity(n as usize + 1);
    a_pows.push(BigInt::one());
    for i in 0..n as usize {
        let next = &a_pows[i] * &a;
        a_pows.push(next);
    }

    let mut total = BigInt::zero();
    let mut coeff = BigInt::one();
    let mut b_pow = BigInt::one();
    for k in 0..=n {
        let idx = checked_index(
            j as i128 * (r as i128 * k as i128 + s as i128),
            "direct_sum subscript",
        )?;
        let w = kind.eval(idx);
        let w_pow = Pow::pow(&w, m);
        total += &coeff * &a_pows[(n - k) as usize] * &b_pow * w_pow;
        if k < n {
            coeff = coeff * (n - k) / (k + 1);
            b_pow *= &b;
        }
    }

    let den_pow = Pow::pow(&den, exponent(n, "n")?);
    Ok(Rational::new(total, den_pow))
}

/// `(-1)^e` as a small integer, for any integer `e`.
pub(crate) fn sign(e: i128) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn is_even(e: i128) -> bool {
    e.rem_euclid(2) == 0
}

/// `5^e` as an exact rational; `e` may be negative.
pub(crate) fn pow5(e: i128) -> Result<Rational> {
    let mag = u32::try_from(e.unsigned_abs()).map_err(|_| Error::IndexOverflow("power of 5"))?;
    let p = Pow::pow(BigInt::from(5), mag);
    Ok(if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    })
}

/// True when `q` is an integer.
pub(crate) fn is_integral(q: &Rational) -> bool {
    q.denom().is_one() || q.numer().is_zero()
}
