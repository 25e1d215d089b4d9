//! Parse a path file and check it against several separation conditions.
//!
//! Run with `cargo run --example verify_paths`.

use lasting_sep::paths::text::parse_paths;
use lasting_sep::predicates::verify_family;
use lasting_sep::PairwiseCondition;

const FILE: &str = "\
# three paths on 6 vertices; the first two share their perfect matching
1,2,3,4,5,6
1,2,4,3,5,6
1,3,5,2,6,4
";

fn main() -> lasting_sep::Result<()> {
    let conditions = [
        PairwiseCondition::PrivateSubpath(1),
        PairwiseCondition::PrivateSubpath(2),
        PairwiseCondition::PrivateMatching(2),
        PairwiseCondition::Degree4Union,
        PairwiseCondition::PrivateSubgraphPath(2),
    ];
    for cond in conditions {
        let family = parse_paths(FILE)?.into_family(cond)?;
        let report = verify_family(&family);
        let pairs: Vec<String> = report
            .pairs
            .iter()
            .map(|(i, j)| format!("({},{})", i + 1, j + 1))
            .collect();
        println!(
            "{cond:<26} valid={:<5} violations: {}",
            report.is_valid(),
            pairs.join(" ")
        );
    }

    let duplicate = "1,2,3\n3,2,1\n";
    let err = parse_paths(duplicate)?
        .into_family(PairwiseCondition::PrivateSubpath(1))
        .unwrap_err();
    println!("duplicate members: {err}");
    Ok(())
}
