use super::{ExtendedPresentationGraph, Label, Vertex};
use crate::error::{Error, Result};
use serde::Deserialize;
use std::collections::HashMap;

/// Parse a graph from the line format or its JSON equivalent.
///
/// Line format (`#` starts a comment, `;` separates statements):
/// `graph <name>`, `vertex <id> <label|inf>`, `edge <id> <id> <label>`.
pub fn parse_graph(text: &str) -> Result<ExtendedPresentationGraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_label(tok: &Token<'_>, line: usize, allow_inf: bool) -> Result<Label> {
    let t = tok.text;
    if allow_inf && (t == "inf" || t == "∞") {
        return Ok(Label::Infinite);
    }
    let n: u32 = t
        .parse()
        .map_err(|_| err(line, tok.column, format!("expected a label, found `{t}`")))?;
    if n < 2 {
        return Err(err(line, tok.column, format!("label {n} is below 2")));
    }
    Ok(Label::Finite(n))
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphanumeric() || c == '_' || c == '-' || c == '.')
}

fn parse_lines(text: &str) -> Result<ExtendedPresentationGraph> {
    let mut name = None;
    let mut vertices: Vec<Vertex> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut seen_edges: HashMap<(usize, usize), usize> = HashMap::new();

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for stmt in content.split(';') {
            let base = offset;
            offset += stmt.len() + 1;
            let tokens: Vec<Token<'_>> = stmt
                .split_whitespace()
                .map(|t| {
                    let at = base + (t.as_ptr() as usize - stmt.as_ptr() as usize);
                    Token {
                        text: t,
                        column: raw[..at].chars().count() + 1,
                    }
                })
                .collect();
            let Some(head) = tokens.first() else { continue };
            match head.text {
                "graph" => {
                    if tokens.len() != 2 {
                        return Err(err(line, head.column, "expected `graph <name>`"));
                    }
                    name = Some(tokens[1].text.to_string());
                }
                "vertex" => {
                    if tokens.len() != 3 {
                        return Err(err(line, head.column, "expected `vertex <id> <label>`"));
                    }
                    let id = tokens[1].text;
                    if !is_identifier(id) {
                        return Err(err(line, tokens[1].column, format!("bad vertex id `{id}`")));
                    }
                    if index.contains_key(id) {
                        return Err(err(
                            line,
                            tokens[1].column,
                            format!("duplicate vertex {id}"),
                        ));
                    }
                    let label = parse_label(&tokens[2], line, true)?;
                    index.insert(id.to_string(), vertices.len());
                    vertices.push(Vertex {
                        id: id.to_string(),
                        label,
                    });
                }
                "edge" => {
                    if tokens.len() != 4 {
                        return Err(err(line, head.column, "expected `edge <id> <id> <label>`"));
                    }
                    let lookup = |t: &Token<'_>| {
                        index.get(t.text).copied().ok_or_else(|| {
                            err(line, t.column, format!("unknown vertex {}", t.text))
                        })
                    };
                    let a = lookup(&tokens[1])?;
                    let b = lookup(&tokens[2])?;
                    if a == b {
                        return Err(err(line, tokens[2].column, "loops are not allowed"));
                    }
                    let m = match parse_label(&tokens[3], line, false)? {
                        Label::Finite(m) => m,
                        Label::Infinite => unreachable!(),
                    };
                    let key = (a.min(b), a.max(b));
                    if seen_edges.insert(key, line).is_some() {
                        return Err(err(
                            line,
                            head.column,
                            format!("duplicate edge {} {}", tokens[1].text, tokens[2].text),
                        ));
                    }
                    let (pa, pb) = (vertices[a].label, vertices[b].label);
                    if m % 2 == 1 && pa != pb {
                        return Err(err(
                            line,
                            tokens[3].column,
                            format!("odd edge label {m} requires equal vertex labels, found {pa} and {pb}"),
                        ));
                    }
                    edges.push((a, b, m));
                }
                other => {
                    return Err(err(
                        line,
                        head.column,
                        format!("unknown statement `{other}`"),
                    ));
                }
            }
        }
    }
    ExtendedPresentationGraph::new(name, vertices, edges)
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonLabel {
    Int(i64),
    Text(String),
}

#[derive(Deserialize)]
struct JsonVertex {
    id: String,
    label: JsonLabel,
}

#[derive(Deserialize)]
struct JsonEdge {
    a: String,
    b: String,
    label: JsonLabel,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    vertices: Vec<JsonVertex>,
    #[serde(default)]
    edges: Vec<JsonEdge>,
}

fn json_label(l: &JsonLabel, allow_inf: bool) -> Result<Label> {
    match l {
        JsonLabel::Int(n) if *n >= 2 && *n <= u32::MAX as i64 => Ok(Label::Finite(*n as u32)),
        JsonLabel::Int(n) => Err(Error::InvalidGraph(format!("label {n} is below 2"))),
        JsonLabel::Text(s) if allow_inf && (s == "inf" || s == "∞") => Ok(Label::Infinite),
        JsonLabel::Text(s) => Err(Error::InvalidGraph(format!("bad label `{s}`"))),
    }
}

fn parse_json(text: &str) -> Result<ExtendedPresentationGraph> {
    let g: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut vertices = Vec::new();
    for v in &g.vertices {
        vertices.push(Vertex {
            id: v.id.clone(),
            label: json_label(&v.label, true)?,
        });
    }
    let find = |id: &str| {
        vertices
            .iter()
            .position(|v: &Vertex| v.id == id)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {id}")))
    };
    let mut edges = Vec::new();
    for e in &g.edges {
        let m = match json_label(&e.label, false)? {
            Label::Finite(m) => m,
            Label::Infinite => unreachable!(),
        };
        edges.push((find(&e.a)?, find(&e.b)?, m));
    }
    ExtendedPresentationGraph::new(g.name, vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statements_on_one_line() {
        let g = parse_graph("vertex a 3; vertex b 3; edge a b 6").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_label(0, 1), Some(6));
        assert_eq!(g.label(0), Label::Finite(3));
    }

    #[test]
    fn odd_label_mismatch_is_rejected() {
        let e = parse_graph("vertex a 3; vertex b 4; edge a b 5").unwrap_err();
        match e {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert_eq!(column, 34);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph("vertex a 2").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.edges().is_empty());
    }

    #[test]
    fn comments_names_and_infinity() {
        let g = parse_graph("# braid\ngraph b3\nvertex x inf\nvertex y inf # both\nedge x y 3\n")
            .unwrap();
        assert_eq!(g.name.as_deref(), Some("b3"));
        assert!(!g.all_labels_finite());
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_graph("vertex a 3\nedge a c 4").unwrap_err() {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 8)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_graph("vertex a 1").is_err());
        assert!(parse_graph("vertex a 3; vertex a 3").is_err());
        assert!(parse_graph("vertex a 3; vertex b 3; edge a b 4; edge b a 6").is_err());
        assert!(parse_graph("vertex a 3; vertex b 3; edge a b inf").is_err());
        assert!(parse_graph("vertx a 3").is_err());
    }

    #[test]
    fn json_matches_line_format() {
        let a = parse_graph("graph e; vertex a 3; vertex b inf; edge a b 4").unwrap();
        let b = parse_graph(
            r#"{"name":"e","vertices":[{"id":"a","label":3},{"id":"b","label":"inf"}],
                "edges":[{"a":"a","b":"b","label":4}]}"#,
        )
        .unwrap();
        assert_eq!(a, b);
        let round = parse_graph(&a.to_json().to_string()).unwrap();
        assert_eq!(a, round);
    }
}
