//! Even and odd power families:
//!
//! ```text
//! Σ (±1)^k C(n,k) W_{j(rk+s)}^{2m}        (parity of jmr, then n)
//! Σ (±1)^k C(n,k) W_{j(2rk+s)}^{2m+1}     (parity of jr, then n)
//! ```
//!
//! Each closed form is a finite i-sum of products of sequence values,
//! scaled by an exact power of 5. The branch is chosen from integer
//! parities, which are sign-independent.

use num_bigint::BigInt;
use num_traits::Zero;

use super::util::{f, l, pow};
use crate::integers::{binomial, is_even, pow5, sign, Index, Rational, SequenceKind};
use crate::{Error, Result};

/// Which printed branch a parameter point falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PowerBranch {
    /// The branch whose i-sum is in Lucas powers `L^n` (with a central
    /// constant term for the even families).
    LucasBase,
    /// Fibonacci base `F^n`, `n` even.
    FibBaseEvenN,
    /// Fibonacci base `F^n`, `n` odd.
    FibBaseOddN,
}

fn branch(lucas_base: bool, n: Index) -> PowerBranch {
    if lucas_base {
        PowerBranch::LucasBase
    } else if is_even(n as i128) {
        PowerBranch::FibBaseEvenN
    } else {
        PowerBranch::FibBaseOddN
    }
}

/// Branch for the `2m` families. The Lucas-base branch is "jmr even" for
/// the plain sum and "jmr odd" for the alternating one.
pub fn even_power_branch(n: Index, j: Index, r: Index, m: Index, alternating: bool) -> PowerBranch {
    let jmr_even = is_even(j as i128 * m as i128 * r as i128);
    branch(jmr_even != alternating, n)
}

/// Branch for the `2m + 1` families, by the parity of `jr`.
pub fn odd_power_branch(n: Index, j: Index, r: Index, alternating: bool) -> PowerBranch {
    let jr_even = is_even(j as i128 * r as i128);
    branch(jr_even != alternating, n)
}

fn seq(kind: SequenceKind, i: i128) -> Result<BigInt> {
    match kind {
        SequenceKind::Fib => f(i),
        SequenceKind::Lucas => l(i),
    }
}

/// One printed i-sum:
/// `Σ_{i<count} (-1)^{sign_exp(i)} C(row, i) B_{t_i·jr}^n I_{t_i·arg}`
/// where `t_i = lead - step·i`.
struct ISum {
    count: i128,
    row: Index,
    lead: i128,
    step: i128,
    jr: i128,
    arg: i128,
    n: Index,
}

impl ISum {
    fn eval(
        &self,
        base: SequenceKind,
        inner: SequenceKind,
        sign_exp: impl Fn(i128) -> i128,
    ) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for i in 0..self.count {
            let t = self.lead - self.step * i;
            let term = binomial(self.row, i as Index)?
                * pow(&seq(base, t * self.jr)?, self.n)
                * seq(inner, t * self.arg)?;
            acc += sign(sign_exp(i)) * term;
        }
        Ok(acc)
    }
}

fn check(n: Index, m: Index) -> Result<()> {
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    if m < 0 {
        return Err(Error::Negative { name: "m", value: m });
    }
    Ok(())
}

fn int(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

/// `Σ_{k=0}^{n} (±1)^k C(n,k) W_{j(rk+s)}^{2m}` in closed form.
///
/// The i-sums run over `0..m`; the central `i = m` term survives as a
/// constant in the Lucas-base branch. In the other branch it carries a
/// factor `0^n` and only contributes at `n = 0`.
pub fn even_power_rhs(
    n: Index,
    j: Index,
    r: Index,
    s: Index,
    m: Index,
    alternating: bool,
    kind: SequenceKind,
) -> Result<Rational> {
    use SequenceKind::{Fib, Lucas};
    check(n, m)?;
    let (n128, m128) = (n as i128, m as i128);
    let (jr, js) = (j as i128 * r as i128, j as i128 * s as i128);
    let sum = ISum {
        count: m128,
        row: 2 * m,
        lead: m128,
        step: 1,
        jr,
        arg: jr * n128 + 2 * js,
        n,
    };
    let central = int(binomial(2 * m, m)?);
    let two_n = int(BigInt::from(1) << n as usize);
    // Sign of the central term in the expansion: (-1)^{m(js+1)} for F,
    // (-1)^{mjs} for L.
    let central_sign = |k: SequenceKind| match k {
        Fib => sign(m128 * (js + 1)),
        Lucas => sign(m128 * js),
    };
    let at_zero = |k: SequenceKind| -> Result<Rational> {
        if n != 0 {
            return Ok(Rational::zero());
        }
        let scale = if k == Fib { pow5(-m128)? } else { pow5(0)? };
        Ok(int(central_sign(k).into()) * &central * scale)
    };

    let br = even_power_branch(n, j, r, m, alternating);
    let v = match (alternating, kind, br) {
        (false, Fib, PowerBranch::LucasBase) => {
            pow5(-m128)? * int(sum.eval(Lucas, Lucas, |i| i * (js + jr * n128 + 1))?)
                + int(central_sign(Fib).into()) * &central * pow5(-m128)? * &two_n
        }
        (false, Fib, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2 - m128)? * int(sum.eval(Fib, Lucas, |i| i * (s as i128 + 1))?)
                + at_zero(Fib)?
        }
        (false, Fib, PowerBranch::FibBaseOddN) => {
            pow5((n128 + 1) / 2 - m128)? * int(sum.eval(Fib, Fib, |i| i * s as i128)?)
        }
        (false, Lucas, PowerBranch::LucasBase) => {
            int(sum.eval(Lucas, Lucas, |i| i * (js + jr * n128))?)
                + int(central_sign(Lucas).into()) * &central * &two_n
        }
        (false, Lucas, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2)? * int(sum.eval(Fib, Lucas, |i| i * s as i128)?) + at_zero(Lucas)?
        }
        (false, Lucas, PowerBranch::FibBaseOddN) => {
            pow5((n128 + 1) / 2)? * int(sum.eval(Fib, Fib, |i| i * (s as i128 + 1))?)
        }
        (true, Fib, PowerBranch::LucasBase) => {
            pow5(-m128)?
                * int(sign(n128) * sum.eval(Lucas, Lucas, |i| i * (s as i128 + n128 + 1))?)
                + int(sign(s as i128 + 1).into()) * &central * pow5(-m128)? * &two_n
        }
        (true, Fib, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2 - m128)? * int(sum.eval(Fib, Lucas, |i| i * (js + 1))?)
                + at_zero(Fib)?
        }
        (true, Fib, PowerBranch::FibBaseOddN) => {
            -pow5((n128 + 1) / 2 - m128)? * int(sum.eval(Fib, Fib, |i| i * (js + jr + 1))?)
        }
        (true, Lucas, PowerBranch::LucasBase) => {
            int(sign(n128) * sum.eval(Lucas, Lucas, |i| i * (s as i128 + n128))?)
                + int(sign(s as i128).into()) * &central * &two_n
        }
        (true, Lucas, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2)? * int(sum.eval(Fib, Lucas, |i| i * js)?) + at_zero(Lucas)?
        }
        (true, Lucas, PowerBranch::FibBaseOddN) => {
            -pow5((n128 + 1) / 2)? * int(sum.eval(Fib, Fib, |i| i * (js + jr))?)
        }
    };
    Ok(v)
}

/// `Σ_{k=0}^{n} (±1)^k C(n,k) W_{j(2rk+s)}^{2m+1}` in closed form. Note the
/// subscript step is `2r`; the closed form is written in `jr`.
pub fn odd_power_rhs(
    n: Index,
    j: Index,
    r: Index,
    s: Index,
    m: Index,
    alternating: bool,
    kind: SequenceKind,
) -> Result<Rational> {
    use SequenceKind::{Fib, Lucas};
    check(n, m)?;
    let (n128, m128) = (n as i128, m as i128);
    let (jr, js) = (j as i128 * r as i128, j as i128 * s as i128);
    let row = Index::try_from(2 * m128 + 1).map_err(|_| Error::IndexOverflow("2m + 1"))?;
    let sum = ISum {
        count: m128 + 1,
        row,
        lead: 2 * m128 + 1,
        step: 2,
        jr,
        arg: jr * n128 + js,
        n,
    };
    let f_sign = |i: i128| i * (js + 1);
    let l_sign = |i: i128| i * js;
    let alt = int(sign(n128).into());

    let br = odd_power_branch(n, j, r, alternating);
    let v = match (alternating, kind, br) {
        (false, Fib, PowerBranch::LucasBase) => pow5(-m128)? * int(sum.eval(Lucas, Fib, f_sign)?),
        (false, Fib, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2 - m128)? * int(sum.eval(Fib, Fib, f_sign)?)
        }
        (false, Fib, PowerBranch::FibBaseOddN) => {
            pow5((n128 - 1) / 2 - m128)? * int(sum.eval(Fib, Lucas, f_sign)?)
        }
        (false, Lucas, PowerBranch::LucasBase) => int(sum.eval(Lucas, Lucas, l_sign)?),
        (false, Lucas, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2)? * int(sum.eval(Fib, Lucas, l_sign)?)
        }
        (false, Lucas, PowerBranch::FibBaseOddN) => {
            pow5((n128 + 1) / 2)? * int(sum.eval(Fib, Fib, l_sign)?)
        }
        (true, Fib, PowerBranch::LucasBase) => {
            alt * pow5(-m128)? * int(sum.eval(Lucas, Fib, f_sign)?)
        }
        (true, Fib, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2 - m128)? * int(sum.eval(Fib, Fib, f_sign)?)
        }
        (true, Fib, PowerBranch::FibBaseOddN) => {
            -pow5((n128 - 1) / 2 - m128)? * int(sum.eval(Fib, Lucas, f_sign)?)
        }
        (true, Lucas, PowerBranch::LucasBase) => alt * int(sum.eval(Lucas, Lucas, l_sign)?),
        (true, Lucas, PowerBranch::FibBaseEvenN) => {
            pow5(n128 / 2)? * int(sum.eval(Fib, Lucas, l_sign)?)
        }
        (true, Lucas, PowerBranch::FibBaseOddN) => {
            -pow5((n128 + 1) / 2)? * int(sum.eval(Fib, Fib, l_sign)?)
        }
    };
    Ok(v)
}
