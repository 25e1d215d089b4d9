//! The exact inequality chains behind the upper bounds, evaluated for a
//! range of parameters.
//!
//! Run with `cargo run --example proof_checks`.

use lasting_sep::bounds::{chain_t2, check_t1_upper, gilbert_weakening_holds};
use lasting_sep::predicates::degree4_counterexample;

fn main() -> lasting_sep::Result<()> {
    let t1_fail: Vec<usize> = (2..=40).filter(|&n| !check_t1_upper(n)).collect();
    println!("matching count <= 2^ceil(n/2) ceil(n/2)! for n=2..=40, failures: {t1_fail:?}");

    for (n, k) in [(8, 4), (12, 6), (24, 4), (40, 8)] {
        let chain = chain_t2(n, k)?;
        let members: Vec<String> = chain.members.iter().map(|m| m.to_string()).collect();
        println!("({n},{k}) holds={} steps={:?}", chain.holds, chain.steps);
        if n <= 12 {
            println!("    {}", members.join("  "));
        }
    }

    let weak_fail: Vec<usize> = (2..=40).filter(|&n| !gilbert_weakening_holds(n)).collect();
    println!("2^n/n^6 <= Gilbert bound, failures for n=2..=40: {weak_fail:?}");

    for n in [4, 5, 6] {
        let (pairs, counterexample) = degree4_counterexample(n);
        println!("degree-4 union forces a private 2-subpath, n={n}: {pairs} pairs, counterexample {counterexample:?}");
    }
    Ok(())
}
