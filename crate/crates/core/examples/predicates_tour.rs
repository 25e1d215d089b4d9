//! The separation predicates on a few hand-picked pairs.
//!
//! Run with `cargo run --example predicates_tour`.

use lasting_sep::path;
use lasting_sep::predicates::{
    degree4_union, private_matching, private_subgraph_path, private_subpath, private_triangle,
    VertexSubset,
};

fn main() -> lasting_sep::Result<()> {
    let p = path![1, 2, 3, 4, 5, 6];
    let q = path![1, 3, 5, 2, 4, 6];
    println!("p = {p}, q = {q}");
    for k in 1..=5 {
        println!(
            "k={k}: private subpath {:<5} private matching {:<5} private subgraph path {}",
            private_subpath(&p, &q, k)?,
            private_matching(&p, &q, k)?,
            private_subgraph_path(&p.edges(), &q.edges(), k)?
        );
    }
    println!("degree-4 vertex in the union: {}", degree4_union(&p, &q)?);

    let s1 = VertexSubset::from_members(6, [1, 2, 3, 4])?;
    let s2 = VertexSubset::from_members(6, [1, 2, 3])?;
    let s3 = VertexSubset::from_members(6, [4, 5, 6])?;
    println!(
        "{{1,2,3,4}} vs {{1,2,3}}: private triangle {}",
        private_triangle(&s1, &s2)
    );
    println!(
        "{{1,2,3,4}} vs {{4,5,6}}: private triangle {}",
        private_triangle(&s1, &s3)
    );
    Ok(())
}
