//! The odd-k family, including a pair where the private window has to be
//! taken on the incoming side of the first differing tuple.
//!
//! Run with `cargo run --example odd_construction`.

use lasting_sep::constructions::{build_odd, witness_window, TupleScheme, WitnessKind};
use lasting_sep::predicates::verify_family;

fn main() -> lasting_sep::Result<()> {
    for (n, k) in [(9, 3), (15, 3), (15, 5), (25, 5)] {
        let family = build_odd(n, k)?;
        let valid = verify_family(&family).is_valid();
        println!(
            "n={n:>2} k={k}: {:>2} paths, pairwise private {k}-subpaths: {valid}",
            family.len()
        );
    }

    let scheme = TupleScheme::odd(12, 3)?;
    let perms = scheme.permutations();
    let mut kinds = [0usize; 2];
    for a in &perms {
        for b in &perms {
            if a == b {
                continue;
            }
            let w = witness_window(&scheme, a, b)?;
            assert!(w.is_private_against(&scheme.path(b)?));
            kinds[usize::from(w.kind == WitnessKind::IntoTuple)] += 1;
        }
    }
    println!(
        "n=12 k=3 ordered pairs: {} after-tuple windows, {} into-tuple windows",
        kinds[0], kinds[1]
    );

    let (first, second) = (vec![0, 1, 2, 3], vec![0, 3, 1, 2]);
    let w = witness_window(&scheme, &first, &second)?;
    println!(
        "{first:?} vs {second:?}: {:?} window at edge {} = {}",
        w.kind, w.start, w.edges
    );
    Ok(())
}
