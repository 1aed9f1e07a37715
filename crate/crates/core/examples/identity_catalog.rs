//! Walk the identity catalog and evaluate each entry at one point.
use binofib::{catalog, eval_pair, IdentityParams};

fn main() {
    let params = IdentityParams { n: 7, j: 2, r: -1, s: 3, p: 2, m: 2, x: 2, z: -1 };
    for d in catalog() {
        let pair = eval_pair(d.id, &params).unwrap();
        let shown: Vec<String> = params.used(d.id).iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<11} {:<34} {} {}",
            d.id,
            shown.join(" "),
            if pair.matched { "ok " } else { "BAD" },
            pair.lhs
        );
        assert!(pair.matched);
    }
    println!();
    println!("C18: {}", binofib::IdentityId::C18.anchor());
}
