use std::collections::BTreeSet;

use super::{Arrow, BoundIceQuiver};
use crate::error::{Error, Result};
use crate::id::{ArrowId, VertexId};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into tokens with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(s, t)| (line[..s].chars().count() + 1, t))
        .collect()
}

pub(super) fn parse_quiver(src: &str) -> Result<BoundIceQuiver> {
    let mut vertices: Vec<VertexId> = Vec::new();
    let mut seen_v: BTreeSet<VertexId> = BTreeSet::new();
    let mut frozen: Vec<VertexId> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    let mut seen_a: BTreeSet<ArrowId> = BTreeSet::new();
    let mut relations: Vec<Vec<ArrowId>> = Vec::new();

    for (ln, raw) in src.lines().enumerate() {
        let ln = ln + 1;
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokens(line);
        let Some(&(col0, kw)) = toks.first() else {
            continue;
        };
        match kw {
            "vertex" => {
                let (c, id) = match toks.get(1) {
                    Some(&t) => t,
                    None => return Err(err(ln, col0, "expected a vertex id")),
                };
                let v = VertexId::from(id);
                if !seen_v.insert(v.clone()) {
                    return Err(err(ln, c, format!("duplicate vertex `{id}`")));
                }
                match toks.get(2) {
                    None => {}
                    Some(&(_, "frozen")) => frozen.push(v.clone()),
                    Some(&(c, t)) => {
                        return Err(err(ln, c, format!("expected `frozen`, found `{t}`")))
                    }
                }
                if let Some(&(c, t)) = toks.get(3) {
                    return Err(err(ln, c, format!("unexpected token `{t}`")));
                }
                vertices.push(v);
            }
            "arrow" => {
                if toks.len() != 5 || toks[3].1 != "->" {
                    let c = toks.get(3).map_or(col0, |t| t.0);
                    return Err(err(ln, c, "expected `arrow <id> <source> -> <target>`"));
                }
                let id = ArrowId::from(toks[1].1);
                if !seen_a.insert(id.clone()) {
                    return Err(err(ln, toks[1].0, format!("duplicate arrow `{id}`")));
                }
                for &(c, v) in [&toks[2], &toks[4]] {
                    if !seen_v.contains(&VertexId::from(v)) {
                        return Err(err(ln, c, format!("undeclared vertex `{v}`")));
                    }
                }
                arrows.push(Arrow {
                    id,
                    source: toks[2].1.into(),
                    target: toks[4].1.into(),
                });
            }
            "relation" => {
                if toks.len() < 3 {
                    return Err(err(ln, col0, "a relation needs at least two arrows"));
                }
                for &(c, a) in &toks[1..] {
                    if !seen_a.contains(&ArrowId::from(a)) {
                        return Err(err(ln, c, format!("undeclared arrow `{a}`")));
                    }
                }
                let path: Vec<ArrowId> = toks[1..].iter().map(|t| ArrowId::from(t.1)).collect();
                for (k, w) in path.windows(2).enumerate() {
                    let end = |id: &ArrowId| arrows.iter().find(|a| &a.id == id).expect("declared");
                    if end(&w[0]).target != end(&w[1]).source {
                        return Err(err(
                            ln,
                            toks[k + 2].0,
                            format!("`{}` does not follow `{}`", w[1], w[0]),
                        ));
                    }
                }
                relations.push(path);
            }
            other => return Err(err(ln, col0, format!("unknown directive `{other}`"))),
        }
    }

    BoundIceQuiver::new(vertices, frozen, arrows, relations)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ice_quiver() {
        let q = parse_quiver(
            "# cyclic\nvertex 1\nvertex 2\nvertex 3 frozen\n\
             arrow alpha 1 -> 2\narrow beta 2 -> 3  # trailing\narrow gamma 3 -> 1\n\
             relation alpha beta\nrelation beta gamma\nrelation gamma alpha\n",
        )
        .unwrap();
        assert_eq!(q.vertices().len(), 3);
        assert!(q.is_frozen(&"3".into()));
        assert_eq!(q.relations().len(), 3);
    }

    #[test]
    fn reports_positions() {
        let e = parse_quiver("vertex 1\narrow a 1 -> 2\n").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 14,
                message: "undeclared vertex `2`".into()
            }
        );
        let e = parse_quiver("vertex 1\n  edge 1\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 2,
                column: 3,
                ..
            }
        ));
        let e = parse_quiver("vertex 1 cold\n").unwrap_err();
        assert!(matches!(
            e,
            Error::Parse {
                line: 1,
                column: 10,
                ..
            }
        ));
        let e = parse_quiver("vertex 1\nvertex 2\narrow a 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_quiver("vertex 1\nvertex 2\narrow a 1 -> 2\nrelation a\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn frozen_pair_is_rejected() {
        let e = parse_quiver("vertex 1 frozen\nvertex 2 frozen\narrow a 1 -> 2\n").unwrap_err();
        assert!(matches!(e, Error::InvalidQuiver(_)));
    }
}
