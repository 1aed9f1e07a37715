//! Direct summation against closed forms at large n.
use binofib::bench::bench;
use binofib::{IdentityId, IdentityParams};

fn main() {
    let points = [
        (IdentityId::C18, IdentityParams { n: 5000, s: 1, ..Default::default() }),
        (IdentityId::EvenF, IdentityParams { n: 2000, j: 3, r: 3, s: 1, m: 2, ..Default::default() }),
        (IdentityId::Q15, IdentityParams { n: 3000, j: 1, r: 2, s: 1, p: 3, ..Default::default() }),
    ];
    for (id, params) in points {
        let r = bench(id, &params, 5).unwrap();
        println!(
            "{:<8} n={:<5} direct {:>10.3?}  closed {:>10.3?}  {:>6.1}x",
            id,
            params.n,
            r.oracle_median,
            r.closed_median,
            r.speedup()
        );
    }
}
