//! Turning sums weighted by powers of Fibonacci/Lucas numbers into
//! evaluations of the generating kernel at golden-ratio points.
use binofib::transform::{binomial_rhs, reduce_f, reduce_l, BinomialKernel, Kernel};
use binofib::{direct_sum, Rational, SequenceKind};

fn main() {
    // h(z) = 3 z^-2 - z + 4 z^5
    let h = Kernel::from_ints(&[(3, -2), (-1, 1), (4, 5)]);
    let z = Rational::new(1.into(), 2.into());
    for m in 0..=3 {
        let f = reduce_f(&h, 2, m, &z).unwrap();
        let l = reduce_l(&h, 2, m, &z).unwrap();
        assert_eq!(f, h.term_by_term(2, m, &z, SequenceKind::Fib).unwrap());
        assert_eq!(l, h.term_by_term(2, m, &z, SequenceKind::Lucas).unwrap());
        println!("m={m}: F-weighted {f}, L-weighted {l}");
    }

    // sum_k C(n,k) x^(n-k) z^k F_{j(rk+s)}^m, closed versus direct
    let (n, j, r, s, m) = (6, 2, -1, 3, 3);
    let x = Rational::from_integer(2.into());
    let z = Rational::new((-1).into(), 3.into());
    let bk = BinomialKernel::new(n, x.clone(), z.clone(), r, s).unwrap();
    for kind in [SequenceKind::Fib, SequenceKind::Lucas] {
        let closed = binomial_rhs(&bk, j, m, kind).unwrap();
        let direct = direct_sum(n, &x, &z, j, r, s, m, kind).unwrap();
        assert_eq!(closed, direct);
        println!("{kind:?}: {closed}");
    }
}
