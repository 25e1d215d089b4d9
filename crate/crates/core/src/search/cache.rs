//! Append-only JSON-lines store of completed searches.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::SearchResult;
use crate::error::{Error, Result};

/// Version stamped on cache records; bump when predicate semantics change
/// so stale optima are not reused.
pub const CODE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable naming the cache file.
pub const CACHE_ENV: &str = "LASTING_SEP_CACHE";

pub const DEFAULT_CACHE_FILE: &str = "lasting-sep-cache.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: usize,
    pub k: usize,
    pub condition: String,
    pub optimum: usize,
    pub exhaustive: bool,
    pub witness: Vec<String>,
    pub nodes: u64,
    /// Wall time as a decimal string (milliseconds precision).
    pub seconds: String,
    pub version: String,
}

impl SearchRecord {
    pub fn from_result(result: &SearchResult) -> Self {
        let family = &result.witness;
        SearchRecord {
            n: family.n(),
            k: family.k(),
            condition: family.condition().name().to_string(),
            optimum: result.optimum,
            exhaustive: result.exhaustive,
            witness: family.members().iter().map(|p| p.to_string()).collect(),
            nodes: result.nodes_expanded,
            seconds: format!("{:.3}", result.wall_time.as_secs_f64()),
            version: CODE_VERSION.to_string(),
        }
    }

    pub fn key(&self) -> (usize, usize, &str, &str) {
        (self.n, self.k, &self.condition, &self.version)
    }
}

#[derive(Clone, Debug)]
pub struct ResultsCache {
    path: PathBuf,
}

impl ResultsCache {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ResultsCache { path: path.into() }
    }

    /// `explicit`, else `$LASTING_SEP_CACHE`, else the default file name.
    pub fn locate(explicit: Option<&Path>) -> Self {
        if let Some(p) = explicit {
            return Self::new(p);
        }
        match std::env::var_os(CACHE_ENV) {
            Some(p) if !p.is_empty() => Self::new(p),
            _ => Self::new(DEFAULT_CACHE_FILE),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    fn io(&self, source: std::io::Error) -> Error {
        Error::Io {
            path: self.path.clone(),
            source,
        }
    }

    /// All records in file order; a missing file is an empty cache.
    pub fn load(&self) -> Result<Vec<SearchRecord>> {
        let file = match File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(self.io(e)),
        };
        let mut out = Vec::new();
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let line = line.map_err(|e| self.io(e))?;
            if line.trim().is_empty() {
                continue;
            }
            let record = serde_json::from_str(&line).map_err(|e| Error::Parse {
                line: i + 1,
                message: format!("cache record: {e}"),
            })?;
            out.push(record);
        }
        Ok(out)
    }

    pub fn append(&self, record: &SearchRecord) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| self.io(e))?;
        let line = serde_json::to_string(record).expect("records always serialize");
        writeln!(file, "{line}").map_err(|e| self.io(e))
    }

    /// Earliest exhaustive record for the key under the current version.
    pub fn lookup(&self, n: usize, k: usize, condition: &str) -> Result<Option<SearchRecord>> {
        Ok(self
            .load()?
            .into_iter()
            .find(|r| r.exhaustive && r.key() == (n, k, condition, CODE_VERSION)))
    }
}
