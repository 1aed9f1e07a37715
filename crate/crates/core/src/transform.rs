//! Power reduction: sums of the form `Σ g_k z^{f_k} W_{j f_k}^m` evaluated
//! through a finite generating kernel `h(z) = Σ g_k z^{f_k}` at powers of
//! α and β.
//!
//! Expanding `W^m` by Binet and exchanging the two finite sums gives
//!
//! ```text
//! Σ g_k z^{f_k} F_{j f_k}^m = 5^{-m/2} Σ_{i=0}^{m} (-1)^i C(m,i) h(β^{ij} α^{(m-i)j} z)
//! Σ g_k z^{f_k} L_{j f_k}^m =          Σ_{i=0}^{m}        C(m,i) h(β^{ij} α^{(m-i)j} z)
//! ```
//!
//! Everything is computed in [`QuadNum`]; the √5 prefactor is cleared
//! exactly and the result must land back in ℚ.

use num_traits::{One, Zero};

use crate::integers::{binomial, checked_index, pow5, sign, BigInt, Index, Rational, SequenceKind};
use crate::quad::{alpha_pow, beta_pow, QuadNum};
use crate::{Error, Result};

/// A finite kernel `h(z) = Σ g_k z^{f_k}` with rational coefficients and
/// integer exponents.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Kernel {
    pub terms: Vec<(Rational, Index)>,
}

impl Kernel {
    pub fn new(terms: Vec<(Rational, Index)>) -> Self {
        Kernel { terms }
    }

    /// Kernel with integer coefficients, mostly for tests and examples.
    pub fn from_ints(terms: &[(i64, Index)]) -> Self {
        Kernel::new(
            terms
                .iter()
                .map(|&(g, f)| (Rational::from_integer(g.into()), f))
                .collect(),
        )
    }

    /// `Σ g_k z^{f_k} W_{j f_k}^m` summed term by term with integer sequence
    /// values. This is the reference the reductions are checked against.
    pub fn term_by_term(
        &self,
        j: Index,
        m: Index,
        z: &Rational,
        kind: SequenceKind,
    ) -> Result<Rational> {
        let m = non_negative_m(m)?;
        let mut total = Rational::zero();
        for (g, f) in &self.terms {
            let zf = rational_pow(z, *f)?;
            let idx = checked_index(j as i128 * *f as i128, "kernel subscript")?;
            let w = num_traits::Pow::pow(kind.eval(idx), m as u32);
            total += g * zf * Rational::from_integer(w);
        }
        Ok(total)
    }
}

fn rational_pow(z: &Rational, e: Index) -> Result<Rational> {
    if e < 0 && z.is_zero() {
        return Err(Error::NotInvertible);
    }
    let mag = i32::try_from(e).map_err(|_| Error::IndexOverflow("kernel exponent"))?;
    Ok(num_traits::Pow::pow(z, mag))
}

fn non_negative_m(m: Index) -> Result<Index> {
    if m < 0 {
        return Err(Error::Negative { name: "m", value: m });
    }
    if m > u32::MAX as Index {
        return Err(Error::IndexOverflow("m"));
    }
    Ok(m)
}

/// The binomial generating kernel `y^s (x + z y^r)^n`, whose coefficient of
/// `y^{rk+s}` is `C(n,k) x^{n-k} z^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialKernel {
    pub n: Index,
    pub x: Rational,
    pub z: Rational,
    pub r: Index,
    pub s: Index,
}

impl BinomialKernel {
    pub fn new(n: Index, x: Rational, z: Rational, r: Index, s: Index) -> Result<Self> {
        if n < 0 {
            return Err(Error::Negative { name: "n", value: n });
        }
        Ok(BinomialKernel { n, x, z, r, s })
    }

    /// Expanded form, to be evaluated at `z = 1`.
    pub fn to_kernel(&self) -> Result<Kernel> {
        let mut terms = Vec::with_capacity(self.n as usize + 1);
        for k in 0..=self.n {
            let g = Rational::from_integer(binomial(self.n, k)?)
                * num_traits::Pow::pow(&self.x, (self.n - k) as u32)
                * num_traits::Pow::pow(&self.z, k as u32);
            let f = checked_index(
                self.r as i128 * k as i128 + self.s as i128,
                "binomial kernel exponent",
            )?;
            terms.push((g, f));
        }
        Ok(Kernel::new(terms))
    }
}

/// `Σ g_k · point^{f_k}`.
pub fn kernel_eval(h: &Kernel, point: &QuadNum) -> Result<QuadNum> {
    let mut acc = QuadNum::zero();
    for (g, f) in &h.terms {
        acc = acc + point.pow(*f)?.scale(g);
    }
    Ok(acc)
}

/// How the evaluation points of the reduction are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointForm {
    /// `β^{ij} α^{(m-i)j} z`
    AlphaBeta,
    /// `(-1)^{ij} α^{(m-2i)j} z`, using `β^i α^{m-i} = (-1)^i α^{m-2i}`.
    SignedAlpha,
}

fn evaluation_point(form: PointForm, i: Index, m: Index, j: Index, z: &Rational) -> Result<QuadNum> {
    let base = match form {
        PointForm::AlphaBeta => {
            let b = checked_index(i as i128 * j as i128, "β exponent")?;
            let a = checked_index((m - i) as i128 * j as i128, "α exponent")?;
            &beta_pow(b) * &alpha_pow(a)
        }
        PointForm::SignedAlpha => {
            let a = checked_index((m - 2 * i) as i128 * j as i128, "α exponent")?;
            let p = alpha_pow(a);
            if sign(i as i128 * j as i128) < 0 {
                -p
            } else {
                p
            }
        }
    };
    Ok(base.scale(z))
}

/// The signed binomial combination of kernel values, before the `5^{-m/2}`
/// prefactor of the Fibonacci case is applied.
pub fn reduction_sum(
    h: &Kernel,
    j: Index,
    m: Index,
    z: &Rational,
    kind: SequenceKind,
    form: PointForm,
) -> Result<QuadNum> {
    let m = non_negative_m(m)?;
    if z.is_zero() {
        // Every point is zero: only f_k = 0 terms survive.
        let mut constant = Rational::zero();
        for (g, f) in &h.terms {
            match f.cmp(&0) {
                std::cmp::Ordering::Equal => constant += g,
                std::cmp::Ordering::Less => return Err(Error::NotInvertible),
                std::cmp::Ordering::Greater => {}
            }
        }
        let weight: BigInt = match kind {
            // Σ (-1)^i C(m,i) is 0^m.
            SequenceKind::Fib if m > 0 => BigInt::zero(),
            SequenceKind::Fib => BigInt::one(),
            SequenceKind::Lucas => BigInt::one() << m as usize,
        };
        return Ok(QuadNum::rational(constant * Rational::from_integer(weight)));
    }

    let mut acc = QuadNum::zero();
    for i in 0..=m {
        let point = evaluation_point(form, i, m, j, z)?;
        let mut c = Rational::from_integer(binomial(m, i)?);
        if kind == SequenceKind::Fib && i % 2 == 1 {
            c = -c;
        }
        acc = acc + kernel_eval(h, &point)?.scale(&c);
    }
    Ok(acc)
}

/// Divide `value` by `(√5)^m` and return the rational result.
///
/// For odd `m` the value is first multiplied by √5 so that the divisor is
/// the rational `5^{(m+1)/2}`. Fails if an α-part remains.
pub fn rationalize(value: &QuadNum, m: Index, what: &'static str) -> Result<Rational> {
    let (v, half) = if m % 2 == 0 {
        (value.clone(), m / 2)
    } else {
        (value * &QuadNum::sqrt5(), (m + 1) / 2)
    };
    let u = v.as_rational().ok_or(Error::NotRational(what))?;
    Ok(u * pow5(-(half as i128))?)
}

/// `Σ g_k z^{f_k} F_{j f_k}^m` via power reduction.
pub fn reduce_f(h: &Kernel, j: Index, m: Index, z: &Rational) -> Result<Rational> {
    let sum = reduction_sum(h, j, m, z, SequenceKind::Fib, PointForm::AlphaBeta)?;
    rationalize(&sum, m, "Fibonacci power reduction")
}

/// `Σ g_k z^{f_k} L_{j f_k}^m` via power reduction.
pub fn reduce_l(h: &Kernel, j: Index, m: Index, z: &Rational) -> Result<Rational> {
    let sum = reduction_sum(h, j, m, z, SequenceKind::Lucas, PointForm::AlphaBeta)?;
    sum.as_rational()
        .cloned()
        .ok_or(Error::NotRational("Lucas power reduction"))
}

/// Right-hand side of the binomial power-sum identity in its α-power form:
///
/// ```text
/// Σ_{i=0}^{m} ε_i C(m,i) α^{(m-2i)js} (x + (-1)^{ijr} α^{(m-2i)jr} z)^n
/// ```
///
/// with `ε_i = (-1)^{i(js+1)}` and a `5^{-m/2}` prefactor for Fibonacci,
/// `ε_i = (-1)^{ijs}` for Lucas. Equals
/// [`direct_sum`](crate::direct_sum)`(n, x, z, j, r, s, m, kind)`.
pub fn binomial_rhs(
    bk: &BinomialKernel,
    j: Index,
    m: Index,
    kind: SequenceKind,
) -> Result<Rational> {
    let m = non_negative_m(m)?;
    let (js, jr) = (j as i128 * bk.s as i128, j as i128 * bk.r as i128);
    let x = QuadNum::rational(bk.x.clone());
    let mut acc = QuadNum::zero();
    for i in 0..=m {
        let (i, mi) = (i as i128, m as i128 - 2 * i as i128);
        let eps = match kind {
            SequenceKind::Fib => sign(i * (js + 1)),
            SequenceKind::Lucas => sign(i * js),
        };
        let outer = alpha_pow(checked_index(mi * js, "α exponent")?);
        let mut inner = alpha_pow(checked_index(mi * jr, "α exponent")?).scale(&bk.z);
        if sign(i * jr) < 0 {
            inner = -inner;
        }
        let factor = (&x + &inner).pow(bk.n)?;
        let c = Rational::from_integer(binomial(m, i as Index)? * eps);
        acc = acc + (&outer * &factor).scale(&c);
    }
    match kind {
        SequenceKind::Fib => rationalize(&acc, m, "binomial Fibonacci power sum"),
        SequenceKind::Lucas => acc
            .as_rational()
            .cloned()
            .ok_or(Error::NotRational("binomial Lucas power sum")),
    }
}
