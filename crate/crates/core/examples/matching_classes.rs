//! Paths that share a perfect matching (or a skeleton) can never separate
//! each other; these classes drive the upper bounds.
//!
//! Run with `cargo run --release --example matching_classes`.

use lasting_sep::bounds::{class_size, count_matchings};
use lasting_sep::constructions::{
    check_matching_classes, check_skeleton_classes, enumerate_skeleton_class, odd_edge_matching,
    reference_skeleton,
};
use lasting_sep::path;

fn main() -> lasting_sep::Result<()> {
    let p = path![1, 2, 3, 4, 5, 6];
    println!("matching of {p}: {}", odd_edge_matching(&p));

    for n in [4, 6, 8] {
        let check = check_matching_classes(n)?;
        println!(
            "n={n}: {} matching classes (formula {}), {} same-class pairs, counterexample: {:?}",
            check.classes,
            count_matchings(n),
            check.pairs_checked,
            check.counterexample
        );
    }

    println!("reference skeleton (8,4): {}", reference_skeleton(8, 4)?);
    let check = check_skeleton_classes(8, 4)?;
    println!(
        "(8,4): {} skeleton classes, all inseparable: {}",
        check.classes,
        check.passed()
    );
    for (n, k) in [(4, 2), (6, 3), (8, 4)] {
        println!(
            "class size ({n},{k}): enumerated {} formula {}",
            enumerate_skeleton_class(n, k)?,
            class_size(n, k)?
        );
    }
    Ok(())
}
