//! Quadratic sums with Fibonacci/Lucas weights `x = W_{2jr+p}`, `z = -W_p`.

use super::util::{f, l, pow, q};
use super::IdentityId;
use crate::integers::{is_even, pow5, sign, Rational};
use crate::{Error, IdentityParams, Result};

/// Closed forms Q13–Q16.
pub fn quadratic_rhs(id: IdentityId, params: &IdentityParams) -> Result<Rational> {
    use IdentityId::*;
    let IdentityParams { n, j, r, s, p, .. } = *params;
    if n < 0 {
        return Err(Error::Negative { name: "n", value: n });
    }
    let (n128, jr, js, p) = (n as i128, j as i128 * r as i128, j as i128 * s as i128, p as i128);
    let f2jr_n = pow(&f(2 * jr)?, n);
    let fjr_n = pow(&f(jr)?, n);
    let arg = p * n128 - 2 * js;
    let sgn = sign(js);
    let even = is_even(n128);

    let v = match id {
        Q13 => {
            let t = &f2jr_n * l(arg)? - 2 * sgn * &fjr_n * pow(&l(jr + p)?, n);
            q(t) * pow5(-1)?
        }
        Q14 => q(&f2jr_n * l(arg)? + 2 * sgn * &fjr_n * pow(&l(jr + p)?, n)),
        Q15 => {
            let tail = pow5(n128 - 1)? * q(2 * sgn * &fjr_n * pow(&f(jr + p)?, n));
            let head = if even {
                pow5(n128 / 2 - 1)? * q(&f2jr_n * l(arg)?)
            } else {
                pow5((n128 - 1) / 2)? * q(&f2jr_n * f(arg)?)
            };
            head - tail
        }
        Q16 => {
            let tail = pow5(n128)? * q(2 * sgn * &fjr_n * pow(&f(jr + p)?, n));
            let head = if even {
                pow5(n128 / 2)? * q(&f2jr_n * l(arg)?)
            } else {
                pow5((n128 + 1) / 2)? * q(&f2jr_n * f(arg)?)
            };
            head + tail
        }
        other => unreachable!("{other} is not a quadratic identity"),
    };
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{eval_pair, Index};

    fn at(n: Index, j: Index, r: Index, s: Index, p: Index) -> IdentityParams {
        IdentityParams {
            n,
            j,
            r,
            s,
            p,
            ..Default::default()
        }
    }

    fn int(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn spot_values() {
        let p = at(1, 1, 1, 0, 1);
        assert_eq!(quadratic_rhs(IdentityId::Q13, &p).unwrap(), int(-1));
        assert_eq!(quadratic_rhs(IdentityId::Q14, &p).unwrap(), int(7));
        assert_eq!(quadratic_rhs(IdentityId::Q15, &p).unwrap(), int(-1));
    }

    #[test]
    fn small_grid_matches() {
        for id in [IdentityId::Q13, IdentityId::Q14, IdentityId::Q15, IdentityId::Q16] {
            for n in 0..5 {
                for p in [-2, -1, 1, 3] {
                    let pair = eval_pair(id, &at(n, 2, -1, 1, p)).unwrap();
                    assert!(pair.matched, "{id} n={n} p={p}: {pair:?}");
                }
            }
        }
    }
}
