use log::warn;

use super::{content_lines, numbers, FormatError};
use crate::graph::{Graph, GraphError};

/// Parses a `.gr` graph: `p tw <n> <m>` followed by `m` edge lines.
///
/// Repeated edges are merged with a warning; self-loops are rejected.
pub fn parse_gr(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 4 || header[0] != "p" || header[1] != "tw" {
        return Err(FormatError::Malformed {
            line: hline,
            msg: "expected `p tw <n> <m>`".into(),
        });
    }
    let nm = numbers(hline, &header[2..])?;
    let (n, m) = (nm[0], nm[1]);
    let mut g = Graph::new(n);
    let mut found = 0;
    for (line, words) in lines {
        if words.len() != 2 {
            return Err(FormatError::Malformed {
                line,
                msg: "expected an edge `<u> <v>`".into(),
            });
        }
        let uv = numbers(line, &words)?;
        found += 1;
        if let Some(&vertex) = uv.iter().find(|&&v| v == 0 || v > n) {
            return Err(FormatError::VertexOutOfRange { line, vertex, n });
        }
        match g.add_edge(uv[0] - 1, uv[1] - 1) {
            Ok(true) => {}
            Ok(false) => warn!("line {line}: duplicate edge {} {} ignored", uv[0], uv[1]),
            Err(GraphError::SelfLoop(v)) => return Err(FormatError::SelfLoop { line, vertex: v + 1 }),
            Err(GraphError::VertexOutOfRange { .. }) => unreachable!("range checked above"),
        }
    }
    if found != m {
        return Err(FormatError::CountMismatch {
            what: "edges",
            expected: m,
            found,
        });
    }
    Ok(g)
}

/// Canonical `.gr` text: sorted edges, 1-based ids.
pub fn write_gr(g: &Graph) -> String {
    let mut out = format!("p tw {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_small_graphs() {
        assert_eq!(parse_gr("p tw 3 2\n1 2\n2 3\n"), Ok(Graph::path(3)));
        assert_eq!(parse_gr("c a square\np tw 4 4\n1 2\n2 3\n3 4\n4 1\n"), Ok(Graph::cycle(4)));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_gr("p tw 2 1\n1 3\n"),
            Err(FormatError::VertexOutOfRange { line: 2, vertex: 3, n: 2 })
        );
        assert_eq!(
            parse_gr("p tw 2 1\n2 2\n"),
            Err(FormatError::SelfLoop { line: 2, vertex: 2 })
        );
        assert_eq!(parse_gr("c nothing\n"), Err(FormatError::MissingHeader));
        assert!(matches!(parse_gr("p td 2 1\n1 2\n"), Err(FormatError::Malformed { line: 1, .. })));
        assert!(matches!(parse_gr("p tw 2 2\n1 2\n"), Err(FormatError::CountMismatch { .. })));
        assert!(matches!(parse_gr("p tw 2 1\n1 x\n"), Err(FormatError::Malformed { line: 2, .. })));
    }

    #[test]
    fn merges_duplicate_edges() {
        let g = parse_gr("p tw 3 3\n1 2\n2 1\n2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn writes_canonical_form() {
        assert_eq!(write_gr(&Graph::path(3)), "p tw 3 2\n1 2\n2 3\n");
        assert_eq!(write_gr(&Graph::new(1)), "p tw 1 0\n");
        assert_eq!(write_gr(&Graph::cycle(4)), "p tw 4 4\n1 2\n1 4\n2 3\n3 4\n");
    }
}
