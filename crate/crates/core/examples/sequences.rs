//! Fibonacci and Lucas numbers, including negative indices and large ones.
use binofib::{binomial, fib, fib_pair, lucas};

fn main() {
    for n in -6..=10 {
        println!("n={n:>3}  F={:>4}  L={:>4}", fib(n), lucas(n));
    }

    let (f, g) = fib_pair(1000);
    println!("F_1000 has {} digits", f.to_string().len());
    assert_eq!(lucas(1000), &g + &g - &f);

    let row: Vec<String> = (0..=6).map(|k| binomial(6, k).unwrap().to_string()).collect();
    println!("C(6, k): {}", row.join(" "));
}
