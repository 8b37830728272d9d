use super::{content_lines, numbers, vertices, write_ids, FormatError};
use crate::bramble::Bramble;
use crate::vertex_set::VertexSet;

/// Parses a `.br` file: `s br <elements> <n> <claimed order>` and one
/// `B <id> <v…>` line per element. A claimed order of 0 means none.
pub fn parse_br(text: &str) -> Result<Bramble, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 5 || header[0] != "s" || header[1] != "br" {
        return Err(FormatError::Malformed {
            line: hline,
            msg: "expected `s br <elements> <n> <claimed order>`".into(),
        });
    }
    let h = numbers(hline, &header[2..])?;
    let (count, n, claimed) = (h[0], h[1], h[2]);
    let mut elements: Vec<Option<VertexSet>> = vec![None; count];
    for (line, words) in lines {
        if words[0] != "B" || words.len() < 2 {
            return Err(FormatError::Malformed {
                line,
                msg: "expected an element `B <id> <v…>`".into(),
            });
        }
        let ids = numbers(line, &words[1..])?;
        let id = ids[0];
        if id == 0 || id > count {
            return Err(FormatError::IdOutOfRange { line, id, max: count });
        }
        if elements[id - 1].is_some() {
            return Err(FormatError::DuplicateId { line, id });
        }
        if ids.len() == 1 {
            return Err(FormatError::EmptyElement { line });
        }
        elements[id - 1] = Some(vertices(line, &ids[1..], n)?);
    }
    let found = elements.iter().filter(|e| e.is_some()).count();
    if found != count {
        return Err(FormatError::CountMismatch {
            what: "elements",
            expected: count,
            found,
        });
    }
    Ok(Bramble::new(n, elements.into_iter().map(Option::unwrap).collect()).with_claimed_order(claimed))
}

pub fn write_br(b: &Bramble) -> String {
    let mut out = format!("s br {} {} {}\n", b.len(), b.n(), b.claimed_order().unwrap_or(0));
    for (i, e) in b.elements().iter().enumerate() {
        out.push_str(&format!("B {}", i + 1));
        write_ids(&mut out, e);
        out.push('\n');
    }
    out
}
