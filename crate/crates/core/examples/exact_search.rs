//! Exact M(n,k) by maximum clique search, checked against the bounds and
//! recorded in a results cache.
//!
//! Run with `cargo run --release --example exact_search`.

use std::time::Duration;

use lasting_sep::bounds::bounds_m;
use lasting_sep::search::{exact_m, ResultsCache, SearchOptions, SearchRecord};

fn main() -> lasting_sep::Result<()> {
    let dir = std::env::temp_dir().join("lasting-sep-example");
    std::fs::create_dir_all(&dir).map_err(|source| lasting_sep::Error::Io {
        path: dir.clone(),
        source,
    })?;
    let cache = ResultsCache::new(dir.join("cache.jsonl"));
    let options = SearchOptions {
        budget: Some(Duration::from_secs(30)),
        workers: None,
    };

    for (n, k) in [
        (4, 2),
        (4, 3),
        (5, 2),
        (5, 3),
        (5, 4),
        (6, 3),
        (6, 4),
        (6, 5),
    ] {
        let record = match cache.lookup(n, k, "private-subpath")? {
            Some(hit) => hit,
            None => {
                let record = SearchRecord::from_result(&exact_m(n, k, &options)?);
                cache.append(&record)?;
                record
            }
        };
        let bounds = bounds_m(n, k);
        println!(
            "M({n},{k}) = {:>2}  exhaustive={}  within bounds: {:?}  witness: {}",
            record.optimum,
            record.exhaustive,
            bounds.admits(record.optimum),
            record.witness.join(" | ")
        );
    }
    println!("cache: {}", cache.path().display());
    Ok(())
}
