//! The even-k family: half the vertices are singletons, the other half is
//! cut into k/2-tuples, and every ordering of the tuples gives one path.
//!
//! Run with `cargo run --example even_construction`.

use lasting_sep::constructions::{witness_window, TupleScheme};
use lasting_sep::predicates::verify_family;

fn main() -> lasting_sep::Result<()> {
    let scheme = TupleScheme::even(12, 4)?;
    println!("A side: {:?}", scheme.a_side());
    println!("B tuples: {:?}", scheme.b_tuples());

    let family = scheme.family()?;
    println!("{} paths:", family.len());
    for p in family.members() {
        println!("  {p}");
    }
    let report = verify_family(&family);
    println!("violating pairs: {}", report.pairs.len());

    let perms = scheme.permutations();
    for (first, second) in [(&perms[0], &perms[1]), (&perms[1], &perms[5])] {
        let w = witness_window(&scheme, first, second)?;
        println!(
            "order {first:?} vs {second:?}: window at edge {} ({:?}) = {}, private: {}",
            w.start,
            w.kind,
            w.edges,
            w.is_private_against(&scheme.path(second)?)
        );
    }
    Ok(())
}
