//! Line-oriented text formats.
//!
//! Path files hold one path per line as comma-separated 1-based labels.
//! Blank lines and `#` comments are ignored, except that a family file
//! starts with a header `# n=<n> k=<k> condition=<name>`.
//!
//! Code files hold one word per line as an `n`-character `0`/`1` string
//! (character `i` is vertex `i+1`) under a header `# n=<n> d=<d>`.

use std::fmt::Write as _;

use super::{HamiltonPath, PathFamily};
use crate::constructions::CodeFamily;
use crate::error::{Error, Result};
use crate::predicates::{PairwiseCondition, VertexSubset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyHeader {
    pub n: usize,
    pub k: usize,
    pub condition: String,
}

#[derive(Clone, Debug)]
pub struct ParsedPaths {
    pub header: Option<FamilyHeader>,
    /// `(line number, path)` in file order.
    pub paths: Vec<(usize, HamiltonPath)>,
}

impl ParsedPaths {
    /// Builds a family, taking `n` from the header or the first path.
    /// Duplicate members (after canonicalization) are rejected.
    pub fn into_family(self, condition: PairwiseCondition) -> Result<PathFamily> {
        let n = match (&self.header, self.paths.first()) {
            (Some(h), _) => h.n,
            (None, Some((_, p))) => p.n(),
            (None, None) => {
                return Err(Error::Parse {
                    line: 0,
                    message: "no paths in input".into(),
                })
            }
        };
        let mut seen = std::collections::HashMap::new();
        for (line, p) in &self.paths {
            if p.n() != n {
                return Err(Error::Parse {
                    line: *line,
                    message: format!("path has {} vertices, expected {n}", p.n()),
                });
            }
            if let Some(first) = seen.insert(p.clone(), *line) {
                return Err(Error::DuplicateMember { line: *line, first });
            }
        }
        PathFamily::new(
            n,
            condition,
            self.paths.into_iter().map(|(_, p)| p).collect(),
        )
    }
}

fn header_fields(line: &str) -> Vec<(&str, &str)> {
    line.trim_start_matches('#')
        .split_whitespace()
        .filter_map(|tok| tok.split_once('='))
        .collect()
}

fn parse_usize(line: usize, key: &str, value: &str) -> Result<usize> {
    value.parse().map_err(|_| Error::Parse {
        line,
        message: format!("bad {key} value {value:?}"),
    })
}

fn parse_family_header(line_no: usize, line: &str) -> Result<Option<FamilyHeader>> {
    let fields = header_fields(line);
    let get = |key: &str| fields.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    match (get("n"), get("k"), get("condition")) {
        (Some(n), Some(k), Some(c)) => Ok(Some(FamilyHeader {
            n: parse_usize(line_no, "n", n)?,
            k: parse_usize(line_no, "k", k)?,
            condition: c.to_string(),
        })),
        _ => Ok(None),
    }
}

pub fn parse_paths(text: &str) -> Result<ParsedPaths> {
    let mut header = None;
    let mut paths = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if header.is_none() && paths.is_empty() {
                header = parse_family_header(line_no, line)?;
            }
            continue;
        }
        let path: HamiltonPath = line.parse().map_err(|e| match e {
            Error::Parse { message, .. } => Error::Parse {
                line: line_no,
                message,
            },
            other => Error::Parse {
                line: line_no,
                message: other.to_string(),
            },
        })?;
        if let Some(h) = &header {
            if path.n() != h.n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("path has {} vertices, header says n={}", path.n(), h.n),
                });
            }
        }
        paths.push((line_no, path));
    }
    Ok(ParsedPaths { header, paths })
}

pub fn render_family(family: &PathFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "# n={} k={} condition={}",
        family.n(),
        family.k(),
        family.condition().name()
    );
    for p in family.members() {
        let _ = writeln!(out, "{p}");
    }
    out
}

pub fn render_code(code: &CodeFamily) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# n={} d={}", code.n(), code.min_distance());
    for w in code.words() {
        let _ = writeln!(out, "{}", w.to_bit_string());
    }
    out
}

pub fn parse_code(text: &str) -> Result<CodeFamily> {
    let mut n = None;
    let mut d = None;
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            for (key, value) in header_fields(line) {
                match key {
                    "n" => n = Some(parse_usize(line_no, key, value)?),
                    "d" => d = Some(parse_usize(line_no, key, value)?),
                    _ => {}
                }
            }
            continue;
        }
        let word = VertexSubset::from_bit_string(line).map_err(|e| Error::Parse {
            line: line_no,
            message: e.to_string(),
        })?;
        if let Some(n) = n {
            if word.n() != n {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("word has length {}, header says n={n}", word.n()),
                });
            }
        }
        words.push(word);
    }
    let n = n.or_else(|| words.first().map(|w| w.n()));
    let (Some(n), Some(d)) = (n, d) else {
        return Err(Error::Parse {
            line: 1,
            message: "missing `# n=<n> d=<d>` header".into(),
        });
    };
    Ok(CodeFamily::from_parts(n, d, words))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path;

    #[test]
    fn family_round_trip() {
        let fam = PathFamily::new(
            8,
            PairwiseCondition::PrivateSubpath(4),
            vec![path![1, 5, 2, 6, 3, 7, 4, 8], path![1, 7, 2, 8, 3, 5, 4, 6]],
        )
        .unwrap();
        let text = render_family(&fam);
        assert_eq!(
            text,
            "# n=8 k=4 condition=private-subpath\n1,5,2,6,3,7,4,8\n1,7,2,8,3,5,4,6\n"
        );
        let parsed = parse_paths(&text).unwrap();
        assert_eq!(
            parsed.header,
            Some(FamilyHeader {
                n: 8,
                k: 4,
                condition: "private-subpath".into()
            })
        );
        assert_eq!(
            parsed
                .into_family(PairwiseCondition::PrivateSubpath(4))
                .unwrap(),
            fam
        );
    }

    #[test]
    fn comments_blank_lines_and_errors() {
        let parsed = parse_paths("\n# just a note\n1,2,3\n\n  # another\n3,1,2\n").unwrap();
        assert!(parsed.header.is_none());
        assert_eq!(parsed.paths.len(), 2);
        assert_eq!(parsed.paths[1].0, 6);

        match parse_paths("1,2,3\n1,2,2\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_paths("# n=4 k=2 condition=private-subpath\n1,2,3\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicates_after_canonicalization() {
        let parsed = parse_paths("1,2,3,4\n4,3,2,1\n").unwrap();
        match parsed.into_family(PairwiseCondition::PrivateSubpath(2)) {
            Err(Error::DuplicateMember { line, first }) => assert_eq!((line, first), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
    }
}
