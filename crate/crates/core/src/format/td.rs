use super::{content_lines, numbers, vertices, write_ids, FormatError};
use crate::decomposition::{DecompositionError, TreeDecomposition};
use crate::vertex_set::VertexSet;

/// Parses a `.td` file: `s td <bags> <max bag size> <n>`, one `b <id> <v…>`
/// line per bag, then one `<a> <b>` line per tree edge.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 5 || header[0] != "s" || header[1] != "td" {
        return Err(FormatError::Malformed {
            line: hline,
            msg: "expected `s td <bags> <max bag size> <n>`".into(),
        });
    }
    let h = numbers(hline, &header[2..])?;
    let (count, max_bag, n) = (h[0], h[1], h[2]);
    let mut bags: Vec<Option<VertexSet>> = vec![None; count];
    let mut edges = Vec::new();
    for (line, words) in lines {
        if words[0] == "b" {
            let ids = numbers(line, &words[1..])?;
            let id = *ids.first().ok_or_else(|| FormatError::Malformed {
                line,
                msg: "bag line without an id".into(),
            })?;
            if id == 0 || id > count {
                return Err(FormatError::IdOutOfRange { line, id, max: count });
            }
            if bags[id - 1].is_some() {
                return Err(FormatError::DuplicateId { line, id });
            }
            bags[id - 1] = Some(vertices(line, &ids[1..], n)?);
        } else {
            if words.len() != 2 {
                return Err(FormatError::Malformed {
                    line,
                    msg: "expected a tree edge `<a> <b>`".into(),
                });
            }
            let ab = numbers(line, &words)?;
            if let Some(&id) = ab.iter().find(|&&id| id == 0 || id > count) {
                return Err(FormatError::IdOutOfRange { line, id, max: count });
            }
            edges.push((ab[0] - 1, ab[1] - 1));
        }
    }
    let found = bags.iter().filter(|b| b.is_some()).count();
    if found != count {
        return Err(FormatError::CountMismatch {
            what: "bags",
            expected: count,
            found,
        });
    }
    let bags: Vec<VertexSet> = bags.into_iter().map(Option::unwrap).collect();
    let largest = bags.iter().map(VertexSet::len).max().unwrap_or(0);
    if largest != max_bag {
        return Err(FormatError::CountMismatch {
            what: "max bag size",
            expected: max_bag,
            found: largest,
        });
    }
    TreeDecomposition::new(n, bags, edges).map_err(|e| match e {
        DecompositionError::NotATree(msg) => FormatError::NotATree(msg),
        other => FormatError::NotATree(other.to_string()),
    })
}

/// Canonical `.td` text: bags in node order with sorted members, then the
/// sorted tree edges.
pub fn write_td(d: &TreeDecomposition) -> String {
    let max_bag = d.bags().iter().map(VertexSet::len).max().unwrap_or(0);
    let mut out = format!("s td {} {} {}\n", d.node_count(), max_bag, d.n());
    for (i, bag) in d.bags().iter().enumerate() {
        out.push_str(&format!("b {}", i + 1));
        write_ids(&mut out, bag);
        out.push('\n');
    }
    for &(a, b) in d.tree_edges() {
        out.push_str(&format!("{} {}\n", a + 1, b + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pace_example() {
        let d = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n").unwrap();
        assert_eq!(d.bags(), &[VertexSet::from([0, 1]), VertexSet::from([1, 2])]);
        assert_eq!(d.tree_edges(), &[(0, 1)]);
        assert_eq!(d.n(), 3);
    }

    #[test]
    fn writes_single_bag() {
        assert_eq!(write_td(&TreeDecomposition::trivial(4)), "s td 1 4 4\nb 1 1 2 3 4\n");
        assert_eq!(write_td(&TreeDecomposition::trivial(0)), "s td 1 0 0\nb 1\n");
    }

    #[test]
    fn rejects_cycles_and_bad_ids() {
        let cyc = "s td 3 1 3\nb 1 1\nb 2 2\nb 3 3\n1 2\n2 3\n3 1\n";
        assert!(matches!(parse_td(cyc), Err(FormatError::NotATree(_))));
        assert!(matches!(
            parse_td("s td 1 1 3\nb 2 1\n"),
            Err(FormatError::IdOutOfRange { id: 2, .. })
        ));
        assert!(matches!(
            parse_td("s td 1 1 3\nb 1 4\n"),
            Err(FormatError::VertexOutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(
            parse_td("s td 1 2 3\nb 1 1\n"),
            Err(FormatError::CountMismatch { what: "max bag size", .. })
        ));
        assert!(matches!(parse_td("s tw 1 1 1\n"), Err(FormatError::Malformed { .. })));
    }
}
