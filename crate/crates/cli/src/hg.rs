//! The `.hg` text format.
//!
//! UTF-8; `#` starts a comment running to end of line. An optional first
//! directive `vertices: L1 L2 ...` fixes the full ordered vertex set (and is
//! the only way to declare isolated vertices). Every other non-empty line is
//! one edge given as whitespace-separated labels; in multi mode a line may
//! repeat an earlier edge or carry 0-1 labels, and the literal line `{}`
//! denotes an empty edge.

use std::fmt;

use hyperspec_core::{Hypergraph, Mode};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HgError {
    Parse { line: usize, message: String },
    Invalid(hyperspec_core::Error),
}

impl fmt::Display for HgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HgError::Parse { line, message } => write!(f, "line {line}: {message}"),
            HgError::Invalid(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for HgError {}

impl From<hyperspec_core::Error> for HgError {
    fn from(e: hyperspec_core::Error) -> Self {
        HgError::Invalid(e)
    }
}

/// Parse `.hg` text into a hypergraph.
pub fn parse(text: &str, mode: Mode) -> Result<Hypergraph, HgError> {
    let mut header: Option<Vec<String>> = None;
    let mut edges: Vec<Vec<String>> = Vec::new();
    let mut first_content_line = true;

    for (number, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with("vertices:") {
            if !first_content_line {
                return Err(HgError::Parse {
                    line: number + 1,
                    message: "vertices: directive must be the first content line".to_string(),
                });
            }
            let rest = &line["vertices:".len()..];
            let labels: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if labels.is_empty() {
                return Err(HgError::Parse {
                    line: number + 1,
                    message: "empty vertices: directive".to_string(),
                });
            }
            header = Some(labels);
            first_content_line = false;
            continue;
        }
        first_content_line = false;
        if line == "{}" {
            edges.push(Vec::new());
            continue;
        }
        edges.push(line.split_whitespace().map(str::to_string).collect());
    }

    let edge_refs: Vec<&[String]> = edges.iter().map(|e| e.as_slice()).collect();
    let h = match header {
        Some(labels) => Hypergraph::with_vertices(mode, &labels, &edge_refs)?,
        None => Hypergraph::from_edges(mode, &edge_refs)?,
    };
    Ok(h)
}

/// Serialize with optional leading comment lines (no `#` prefix needed).
pub fn serialize_with_comments(h: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str("vertices:");
    for label in h.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for e in h.edges() {
        if e.is_empty() {
            out.push_str("{}\n");
            continue;
        }
        let mut first = true;
        for v in e.members() {
            if !first {
                out.push(' ');
            }
            out.push_str(h.label(v));
            first = false;
        }
        out.push('\n');
    }
    out
}

pub fn serialize(h: &Hypergraph) -> String {
    serialize_with_comments(h, &[])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_edges() {
        let h = parse("1 2 3\n2 3 4\n", Mode::Strict).unwrap();
        assert_eq!((h.n(), h.m()), (4, 2));
    }

    #[test]
    fn strict_duplicate_edge_is_invalid() {
        let err = parse("a b\na b\n", Mode::Strict).unwrap_err();
        assert!(matches!(err, HgError::Invalid(_)));
        assert!(parse("a b\na b\n", Mode::Multi).is_ok());
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a file\n\n  # indented comment\n1 2 # trailing\n\n2 3\n";
        let h = parse(text, Mode::Strict).unwrap();
        assert_eq!((h.n(), h.m()), (3, 2));
    }

    #[test]
    fn vertices_directive_fixes_order_and_isolates() {
        let h = parse("vertices: c b a\nb a\n", Mode::Strict).unwrap();
        assert_eq!(h.labels(), &["c", "b", "a"]);
        assert_eq!(h.n(), 3);
        assert_eq!(h.degree(h.vertex("c").unwrap()).unwrap(), 0);
    }

    #[test]
    fn directive_only_on_first_line() {
        let err = parse("a b\nvertices: x y\n", Mode::Strict).unwrap_err();
        assert!(matches!(err, HgError::Parse { line: 2, .. }));
    }

    #[test]
    fn multi_extras() {
        let h = parse("vertices: a b c\n{}\na\na b\na b\n", Mode::Multi).unwrap();
        assert_eq!(h.m(), 4);
        assert_eq!(h.edges()[0].len(), 0);
        assert_eq!(h.edges()[1].len(), 1);
    }

    #[test]
    fn roundtrip_exact() {
        let text = "vertices: x y z w\nx y\ny z w\n";
        let h = parse(text, Mode::Strict).unwrap();
        let out = serialize(&h);
        let back = parse(&out, Mode::Strict).unwrap();
        assert_eq!(h, back);
        assert_eq!(out, text);
    }

    #[test]
    fn roundtrip_multi_with_empty_edge() {
        let h = parse("vertices: a b\n{}\na\n", Mode::Multi).unwrap();
        let back = parse(&serialize(&h), Mode::Multi).unwrap();
        assert_eq!(h, back);
    }
}
