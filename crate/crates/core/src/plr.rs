//! The `plr 1` text format for rotation systems.
//!
//! ```text
//! plr 1
//! n 4
//! 0: 1 3
//! 1: 2 0
//! 2: 3 1
//! 3: 0 2
//! ```
//!
//! One line per vertex in ascending id order, neighbours in clockwise order,
//! single spaces, LF line endings, final newline. A vertex without
//! neighbours is written as `<id>:`. The reader accepts exactly what the
//! writer emits.

use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlrError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid rotation system: {0}")]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> PlrError {
    PlrError::Syntax {
        line,
        message: message.into(),
    }
}

fn vertex_line(id: usize, nbrs: &[usize]) -> String {
    let mut s = format!("{id}:");
    for u in nbrs {
        s.push(' ');
        s.push_str(&u.to_string());
    }
    s
}

pub fn write(g: &PlaneGraph) -> String {
    let mut out = String::from("plr 1\n");
    out.push_str(&format!("n {}\n", g.n()));
    for v in 0..g.n() {
        out.push_str(&vertex_line(v, g.neighbours(v)));
        out.push('\n');
    }
    out
}

pub fn parse(text: &str) -> Result<PlaneGraph, PlrError> {
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.split('\n').count();
        return Err(syntax(line, "missing final newline"));
    };
    let lines: Vec<&str> = body.split('\n').collect();
    if lines[0] != "plr 1" {
        return Err(syntax(1, "expected header `plr 1`"));
    }
    let n_line = lines.get(1).ok_or_else(|| syntax(2, "missing `n <count>` line"))?;
    let n: usize = n_line
        .strip_prefix("n ")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| syntax(2, "expected `n <count>`"))?;
    if format!("n {n}") != *n_line {
        return Err(syntax(2, "non-canonical count line"));
    }
    if lines.len() != n + 2 {
        let line = (lines.len() + 1).min(n + 3);
        return Err(syntax(
            line,
            format!("expected {n} vertex lines, found {}", lines.len() - 2),
        ));
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, raw) in lines[2..].iter().enumerate() {
        let line = v + 3;
        let (id, rest) = raw
            .split_once(':')
            .ok_or_else(|| syntax(line, "expected `<id>: <neighbours>`"))?;
        let id: usize = id.parse().map_err(|_| syntax(line, "bad vertex id"))?;
        if id != v {
            return Err(syntax(line, format!("expected vertex {v}, found {id}")));
        }
        let nbrs = rest
            .split(' ')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| syntax(line, format!("bad neighbour id `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if vertex_line(v, &nbrs) != *raw {
            return Err(syntax(line, "non-canonical formatting"));
        }
        rotation.push(nbrs);
    }
    Ok(PlaneGraph::from_rotation(rotation)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const C4: &str = "plr 1\nn 4\n0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2\n";

    #[test]
    fn four_cycle_round_trips_byte_exact() {
        let g = parse(C4).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(write(&g), C4);
    }

    #[test]
    fn isolated_vertex_has_no_trailing_space() {
        let g = PlaneGraph::empty(2);
        assert_eq!(write(&g), "plr 1\nn 2\n0:\n1:\n");
        assert_eq!(parse("plr 1\nn 2\n0:\n1:\n").unwrap(), g);
    }

    #[test]
    fn deviations_report_line_numbers() {
        let cases = [
            ("plr 2\nn 1\n0:\n", 1),
            ("plr 1\nn  1\n0:\n", 2),
            ("plr 1\nn 2\n0:\n", 4),
            ("plr 1\nn 4\n0: 1 3\n1: 2  0\n2: 3 1\n3: 0 2\n", 4),
            ("plr 1\nn 4\n0: 1 3\n2: 2 0\n2: 3 1\n3: 0 2\n", 4),
            ("plr 1\nn 4\n0: 1 3\n1: 2 0\n2: 3 1\n3: 0 2 \n", 6),
            ("plr 1\nn 1\n0:", 3),
            ("plr 1\r\nn 1\n0:\n", 1),
            ("plr 1\nn 4\n0: 01 3\n1: 2 0\n2: 3 1\n3: 0 2\n", 3),
        ];
        for (text, line) in cases {
            match parse(text) {
                Err(PlrError::Syntax { line: got, .. }) => assert_eq!(got, line, "{text:?}"),
                other => panic!("{text:?}: expected syntax error, got {other:?}"),
            }
        }
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let err = parse("plr 1\nn 2\n0: 1\n1:\n").unwrap_err();
        assert!(matches!(err, PlrError::Graph(GraphError::AsymmetricAdjacency { .. })));
    }
}
