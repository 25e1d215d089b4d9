//! Seeded greedy lower bounds where exhaustive search is out of reach,
//! next to the explicit constructions.
//!
//! Run with `cargo run --release --example greedy_lower`.

use lasting_sep::constructions::build_construction;
use lasting_sep::search::greedy_lower;
use lasting_sep::PairwiseCondition;

fn main() -> lasting_sep::Result<()> {
    for (n, k) in [(8, 4), (9, 3), (10, 5), (12, 4)] {
        let greedy = greedy_lower(n, PairwiseCondition::PrivateSubpath(k), 4, 1)?;
        let explicit = build_construction(n, k)
            .map(|f| f.len().to_string())
            .unwrap_or_else(|_| "-".into());
        println!(
            "n={n:>2} k={k}: greedy {:>3}  construction {explicit:>3}",
            greedy.optimum
        );
    }
    Ok(())
}
