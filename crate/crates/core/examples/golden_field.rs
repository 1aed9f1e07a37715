//! Exact arithmetic with a + b*alpha, alpha the golden ratio.
//! Elements print as `(u, v)`, meaning u + v*alpha.
use binofib::{alpha_pow, beta_pow, QuadNum, Rational};

fn main() {
    let a = QuadNum::alpha();
    let b = QuadNum::beta();
    println!("alpha * beta = {}", &a * &b);
    println!("alpha + beta = {}", &a + &b);
    println!("sqrt5^2      = {}", &QuadNum::sqrt5() * &QuadNum::sqrt5());

    // alpha^n = F_{n-1} + F_n alpha
    for n in [-5, -1, 0, 1, 10] {
        println!("alpha^{n:<3} = {}", alpha_pow(n));
    }

    // 2 alpha^t = L_t + F_t sqrt5
    let (l, f) = alpha_pow(12).scale(&Rational::from_integer(2.into())).root5_parts();
    println!("2 alpha^12 = {l} + {f} sqrt5");

    let x = QuadNum::from_ints(3, -2);
    let inv = x.inv().unwrap();
    println!("inverse of {x} is {inv}, norm {}", x.norm());
    assert_eq!(&x * &inv, QuadNum::one());
    assert_eq!(&alpha_pow(7) - &beta_pow(7), QuadNum::sqrt5().scale(&Rational::from_integer(13.into())));
}
