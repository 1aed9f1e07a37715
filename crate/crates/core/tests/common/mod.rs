//! Reference implementations that share no code with the library: plain
//! recurrence iteration and literal summation.
#![allow(dead_code)]

use binofib::{BigInt, QuadNum, Rational, SequenceKind};
use num_traits::{One, Pow, Zero};

/// Walk the recurrence from `(G_0, G_1)` in whichever direction `n` lies.
fn walk(g0: i64, g1: i64, n: i64) -> BigInt {
    let (mut a, mut b) = (BigInt::from(g0), BigInt::from(g1));
    if n >= 0 {
        for _ in 0..n {
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        a
    } else {
        // (a, b) = (G_k, G_{k+1}) -> (G_{k-1}, G_k)
        for _ in 0..(-n) {
            let prev = &b - &a;
            b = std::mem::replace(&mut a, prev);
        }
        a
    }
}

pub fn naive_fib(n: i64) -> BigInt {
    walk(0, 1, n)
}

pub fn naive_lucas(n: i64) -> BigInt {
    walk(2, 1, n)
}

pub fn naive_seq(kind: SequenceKind, n: i64) -> BigInt {
    match kind {
        SequenceKind::Fib => naive_fib(n),
        SequenceKind::Lucas => naive_lucas(n),
    }
}

pub fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn choose(n: u32, k: u32) -> BigInt {
    // Pascal's rule, row by row.
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

fn rpow(b: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// `Σ_{k=0}^{n} C(n,k) x^{n-k} z^k G_{j(rk+s)}^m`, literally.
#[allow(clippy::too_many_arguments)]
pub fn naive_sum(
    n: u32,
    x: &Rational,
    z: &Rational,
    j: i64,
    r: i64,
    s: i64,
    m: u32,
    kind: SequenceKind,
) -> Rational {
    (0..=n)
        .map(|k| {
            let g = naive_seq(kind, j * (r * k as i64 + s)).pow(m);
            Rational::from_integer(choose(n, k) * g) * rpow(x, n - k) * rpow(z, k)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `Σ g z^f G_{jf}^m` for a finite kernel, literally.
pub fn naive_kernel_sum(
    terms: &[(Rational, i64)],
    j: i64,
    m: u32,
    z: &Rational,
    kind: SequenceKind,
) -> Rational {
    terms
        .iter()
        .map(|(g, f)| {
            let zf = if *f >= 0 {
                rpow(z, *f as u32)
            } else {
                rpow(&z.recip(), (-*f) as u32)
            };
            g * zf * Rational::from_integer(naive_seq(kind, j * f).pow(m))
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// `α^n` by repeated multiplication or division.
pub fn naive_alpha_pow(n: i64) -> QuadNum {
    let a = QuadNum::alpha();
    let step = if n >= 0 { a } else { a.inv().unwrap() };
    (0..n.unsigned_abs()).fold(QuadNum::one(), |acc, _| &acc * &step)
}

pub fn naive_beta_pow(n: i64) -> QuadNum {
    naive_alpha_pow(n).conj()
}

pub fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
