//! Exact lower and upper bounds on M(n,k) for a grid of parameters.
//!
//! Run with `cargo run --example bounds_table`.

use lasting_sep::bounds::{bounds_m, count_matchings};

fn main() {
    println!(
        "{:>3} {:>3} {:>6} {:>24} {:>8} {:>28}",
        "n", "k", "thm", "lower", "eff", "upper"
    );
    for n in [6, 8, 9, 10, 12, 15, 16, 20] {
        for k in 2..=5 {
            let r = bounds_m(n, k);
            if !r.applicable {
                continue;
            }
            println!(
                "{:>3} {:>3} {:>6} {:>24} {:>8} {:>28}",
                n,
                k,
                format!(
                    "{:?}",
                    r.theorem.expect("applicable reports name a theorem")
                ),
                r.lower.as_ref().map(|x| x.to_string()).unwrap_or_default(),
                r.effective_lower
                    .as_ref()
                    .map(|x| x.to_string())
                    .unwrap_or_default(),
                r.upper.as_ref().map(|x| x.to_string()).unwrap_or_default(),
            );
        }
    }

    println!();
    let r = bounds_m(7, 4);
    println!(
        "n=7 k=4: applicable={} ({})",
        r.applicable,
        r.reason.unwrap_or_default()
    );
    for n in 4..=10 {
        println!(
            "perfect or near-perfect matchings of K_{n}: {}",
            count_matchings(n)
        );
    }
}
