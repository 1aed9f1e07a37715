//! Check a few identity families over a parameter grid.
use binofib::verify::{run_grid, summarize, GridSpec, IntRange};
use binofib::IdentityId;

fn main() {
    let spec = GridSpec {
        ids: vec![IdentityId::C18, IdentityId::Q13, IdentityId::EvenF, IdentityId::AltOddL],
        n: IntRange::new(0, 8),
        j: IntRange::new(-2, 2),
        r: IntRange::new(-2, 2),
        s: IntRange::new(-2, 2),
        p: IntRange::new(-1, 1),
        ..GridSpec::default()
    };
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_grid(&spec, jobs).unwrap();
    print!("{}", summarize(&report));
    println!("first record: {}", report.records[0].to_json_line());
    assert!(report.passed());
}
