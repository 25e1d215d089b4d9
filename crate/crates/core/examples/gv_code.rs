//! Vertex-subset families from a greedy lexicode: with distance 7 and
//! weight at least 3, every pair has a private triangle.
//!
//! Run with `cargo run --release --example gv_code`.

use lasting_sep::bounds::{gilbert_bound, gilbert_parts};
use lasting_sep::constructions::gv_family;
use lasting_sep::paths::text::render_code;
use lasting_sep::predicates::verify_code_triangles;

fn main() -> lasting_sep::Result<()> {
    for n in [8, 10, 12, 14] {
        for d in [3, 5, 7] {
            let code = gv_family(n, d, 0)?;
            let (num, den) = gilbert_parts(n, d)?;
            println!(
                "n={n:>2} d={d}: {:>4} words, Gilbert bound {num}/{den} (met: {})",
                code.len(),
                num_ge(code.len(), &gilbert_bound(n, d)?)
            );
        }
    }
    let code = gv_family(12, 7, 3)?;
    let report = verify_code_triangles(&code);
    println!(
        "\nn=12 d=7 weight>=3: {} words, triangle-separated: {}",
        code.len(),
        report.is_valid()
    );
    print!("{}", render_code(&code));
    Ok(())
}

fn num_ge(size: usize, bound: &num_rational::BigRational) -> bool {
    num_rational::BigRational::from_integer(size.into()) >= *bound
}
