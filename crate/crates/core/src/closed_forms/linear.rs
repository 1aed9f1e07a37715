//! Weighted linear sums and the generic quadratic form.

use super::util::{f, l, pow, q};
use super::IdentityId;
use crate::integers::{checked_index, is_even, pow5, sign, Index, Rational, SequenceKind};
use crate::quad::{alpha_pow, beta_pow, QuadNum};
use crate::transform::rationalize;
use crate::{Error, IdentityParams, Result};

fn non_negative_n(n: Index) -> Result<()> {
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    Ok(())
}

/// Exponents `(t·js, t·jr)`.
fn scaled_steps(t: i128, j: Index, r: Index, s: Index) -> Result<(Index, Index)> {
    Ok((
        checked_index(t * j as i128 * s as i128, "Binet exponent")?,
        checked_index(t * j as i128 * r as i128, "Binet exponent")?,
    ))
}

/// `unit^{js} (x + unit^{jr} z)^n` with `unit` either α or β.
fn binet_term(
    unit_pow: fn(Index) -> QuadNum,
    (js, jr): (Index, Index),
    n: Index,
    x: &Rational,
    z: &Rational,
) -> Result<QuadNum> {
    let inner = &QuadNum::rational(x.clone()) + &unit_pow(jr).scale(z);
    Ok(&unit_pow(js) * &inner.pow(n)?)
}

/// `Σ C(n,k) x^{n-k} z^k W_{j(rk+s)}` from the two-term Binet form
/// `α^{js}(x + α^{jr}z)^n ∓ β^{js}(x + β^{jr}z)^n` (divided by √5 for
/// Fibonacci).
pub fn linear_rhs(
    kind: SequenceKind,
    n: Index,
    x: &Rational,
    z: &Rational,
    j: Index,
    r: Index,
    s: Index,
) -> Result<Rational> {
    non_negative_n(n)?;
    let steps = scaled_steps(1, j, r, s)?;
    let a = binet_term(alpha_pow, steps, n, x, z)?;
    let b = binet_term(beta_pow, steps, n, x, z)?;
    match kind {
        SequenceKind::Fib => rationalize(&(a - b), 1, "linear Fibonacci form"),
        SequenceKind::Lucas => rationalize(&(a + b), 0, "linear Lucas form"),
    }
}

/// `Σ C(n,k) x^{n-k} z^k W_{j(rk+s)}^2` from
/// `α^{2js}(x+α^{2jr}z)^n + β^{2js}(x+β^{2jr}z)^n ∓ 2(-1)^{js}(x+(-1)^{jr}z)^n`,
/// divided by 5 for Fibonacci.
pub fn quadratic_base_rhs(
    kind: SequenceKind,
    n: Index,
    x: &Rational,
    z: &Rational,
    j: Index,
    r: Index,
    s: Index,
) -> Result<Rational> {
    non_negative_n(n)?;
    let (js, jr) = (j as i128 * s as i128, j as i128 * r as i128);
    let steps = scaled_steps(2, j, r, s)?;
    let a = binet_term(alpha_pow, steps, n, x, z)?;
    let b = binet_term(beta_pow, steps, n, x, z)?;
    let middle = num_traits::Pow::pow(x + z * Rational::from_integer(sign(jr).into()), n as u32)
        * Rational::from_integer((2 * sign(js)).into());
    let middle = QuadNum::rational(middle);
    match kind {
        SequenceKind::Fib => rationalize(&(a + b - middle), 2, "quadratic Fibonacci form"),
        SequenceKind::Lucas => rationalize(&(a + b + middle), 0, "quadratic Lucas form"),
    }
}

/// Closed forms of the special linear families E5–E12.
pub fn special_linear_rhs(id: IdentityId, params: &IdentityParams) -> Result<Rational> {
    use IdentityId::*;
    let IdentityParams { n, j, r, s, p, .. } = *params;
    non_negative_n(n)?;
    let (n128, jr, js, p) = (n as i128, j as i128 * r as i128, j as i128 * s as i128, p as i128);
    // j(rn + s)
    let shifted = jr * n128 + js;
    let even = is_even(n128);
    let half = n128.div_euclid(2);
    let fjr_n = q(pow(&f(jr)?, n));

    let v = match id {
        E5 => q(sign(jr * n128) * pow(&l(jr)?, n) * f(shifted)?),
        E6 => q(sign(jr * n128) * pow(&l(jr)?, n) * l(shifted)?),
        E7 if even => pow5(half)? * &fjr_n * q(f(shifted)?),
        E7 => pow5(half)? * &fjr_n * q(sign(jr + 1) * l(shifted)?),
        E8 if even => pow5(half)? * &fjr_n * q(l(shifted)?),
        E8 => pow5(half + 1)? * &fjr_n * q(sign(jr + 1) * f(shifted)?),
        E9 => &fjr_n * q(sign(js + 1) * f(p * n128 - js)?),
        E10 => &fjr_n * q(sign(js) * l(p * n128 - js)?),
        E11 if even => pow5(half)? * &fjr_n * q(sign(js + 1) * f(p * n128 - js)?),
        E11 => pow5(half)? * &fjr_n * q(sign(js + 1) * l(p * n128 - js)?),
        E12 if even => pow5(half)? * &fjr_n * q(sign(js) * l(p * n128 - js)?),
        E12 => pow5(half + 1)? * &fjr_n * q(sign(js) * f(p * n128 - js)?),
        other => unreachable!("{other} is not a special linear identity"),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::direct_sum;

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn p(n: Index, j: Index, r: Index, s: Index, pp: Index) -> IdentityParams {
        IdentityParams {
            n,
            j,
            r,
            s,
            p: pp,
            ..Default::default()
        }
    }

    #[test]
    fn linear_examples() {
        let one = int(1);
        assert_eq!(
            linear_rhs(SequenceKind::Fib, 3, &one, &one, 1, 1, 0).unwrap(),
            int(8)
        );
        assert_eq!(
            linear_rhs(SequenceKind::Lucas, 3, &one, &one, 1, 1, 0).unwrap(),
            int(18)
        );
        // n = 0 is the single term F_{js}.
        assert_eq!(
            linear_rhs(SequenceKind::Fib, 0, &int(7), &int(-3), 2, 9, 3).unwrap(),
            int(8)
        );
    }

    #[test]
    fn linear_matches_oracle_with_fractions() {
        let x = Rational::new(3.into(), 4.into());
        let z = Rational::new((-2).into(), 3.into());
        for kind in [SequenceKind::Fib, SequenceKind::Lucas] {
            for n in 0..6 {
                assert_eq!(
                    linear_rhs(kind, n, &x, &z, -2, 3, 1).unwrap(),
                    direct_sum(n, &x, &z, -2, 3, 1, 1, kind).unwrap()
                );
                assert_eq!(
                    quadratic_base_rhs(kind, n, &x, &z, 3, -1, 2).unwrap(),
                    direct_sum(n, &x, &z, 3, -1, 2, 2, kind).unwrap()
                );
            }
        }
    }

    #[test]
    fn special_linear_examples() {
        assert_eq!(special_linear_rhs(IdentityId::E5, &p(2, 1, 1, 0, 1)).unwrap(), int(1));
        assert_eq!(special_linear_rhs(IdentityId::E6, &p(2, 1, 1, 0, 1)).unwrap(), int(3));
        assert_eq!(special_linear_rhs(IdentityId::E9, &p(2, 1, 1, 0, 2)).unwrap(), int(-3));
    }

    #[test]
    fn e10_sign_as_printed_fails() {
        // The variant with (-1)^{js+1} is off by a sign; n = 0 exposes it.
        let at = p(0, 1, 1, 1, 1);
        let lhs = direct_sum(0, &int(1), &int(-1), 1, 1, 1, 1, SequenceKind::Lucas).unwrap();
        let rhs = special_linear_rhs(IdentityId::E10, &at).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, int(1));
        assert_ne!(-rhs, lhs);
    }

    #[test]
    fn negative_n_rejected() {
        assert!(linear_rhs(SequenceKind::Fib, -1, &int(1), &int(1), 1, 1, 0).is_err());
    }
}
