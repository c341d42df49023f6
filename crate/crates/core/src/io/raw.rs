//! Line-level syntax of the text format.
//!
//! ```text
//! mla-kit v1
//! kind <kind>
//! <key> <value>...        key lines
//! <section>               a lone word opens a section
//! <n> <n> ...             rows of non-negative integers
//! ```
//!
//! Blank lines are skipped. A `labels` key line is accepted and ignored.

use super::ParseError;

pub const HEADER: &str = "mla-kit v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyLine {
    pub line: usize,
    pub name: String,
    pub values: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub line: usize,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSection {
    pub line: usize,
    pub name: String,
    pub rows: Vec<Row>,
}

/// A syntactically well-formed document, before any typing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawDocument {
    pub kind: String,
    pub keys: Vec<KeyLine>,
    pub sections: Vec<RawSection>,
    /// Number of lines, for errors about missing content.
    pub last_line: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Byte column (1-based) of every whitespace-separated token.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_raw(text: &str) -> Result<RawDocument, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| err(1, 1, "empty document"))?;
    let header = header.trim_end();
    if header != HEADER {
        return Err(match header.strip_prefix("mla-kit ") {
            Some(v) => err(1, 9, format!("unsupported format version '{v}'")),
            None => err(1, 1, format!("expected header '{HEADER}'")),
        });
    }
    let kind = match lines.next() {
        Some((n, l)) => match tokens(l).as_slice() {
            [(_, "kind"), (_, k)] => k.to_string(),
            _ => return Err(err(n, 1, "expected 'kind <name>'")),
        },
        None => return Err(err(2, 1, "missing kind line")),
    };
    let mut doc = RawDocument {
        kind,
        keys: Vec::new(),
        sections: Vec::new(),
        last_line: 2,
    };
    for (n, l) in lines {
        doc.last_line = n;
        let toks = tokens(l);
        let Some(&(col, first)) = toks.first() else {
            continue;
        };
        if first.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
            let Some(section) = doc.sections.last_mut() else {
                return Err(err(n, col, "row outside of any section"));
            };
            let mut values = Vec::with_capacity(toks.len());
            for &(c, t) in &toks {
                values.push(
                    t.parse::<usize>()
                        .map_err(|_| err(n, c, format!("'{t}' is not a non-negative integer")))?,
                );
            }
            if let Some(prev) = section.rows.first() {
                if prev.values.len() != values.len() {
                    return Err(err(
                        n,
                        col,
                        format!(
                            "row has {} entries, section '{}' rows have {}",
                            values.len(),
                            section.name,
                            prev.values.len()
                        ),
                    ));
                }
            }
            section.rows.push(Row { line: n, values });
        } else if toks.len() == 1 {
            if doc.sections.iter().any(|s| s.name == first) {
                return Err(err(n, col, format!("duplicate section '{first}'")));
            }
            doc.sections.push(RawSection {
                line: n,
                name: first.to_string(),
                rows: Vec::new(),
            });
        } else {
            if first == "labels" {
                continue;
            }
            if doc.keys.iter().any(|k| k.name == first) {
                return Err(err(n, col, format!("duplicate key '{first}'")));
            }
            doc.keys.push(KeyLine {
                line: n,
                name: first.to_string(),
                values: toks[1..].iter().map(|&(_, t)| t.to_string()).collect(),
            });
        }
    }
    Ok(doc)
}

impl RawDocument {
    pub fn key(&self, name: &str) -> Result<&KeyLine, ParseError> {
        self.keys
            .iter()
            .find(|k| k.name == name)
            .ok_or_else(|| err(self.last_line + 1, 1, format!("missing key '{name}'")))
    }

    /// A key with a single non-negative integer value.
    pub fn number(&self, name: &str) -> Result<usize, ParseError> {
        let k = self.key(name)?;
        match k.values.as_slice() {
            [v] => v
                .parse()
                .map_err(|_| err(k.line, name.len() + 2, format!("'{v}' is not a non-negative integer"))),
            _ => Err(err(k.line, 1, format!("key '{name}' takes one value"))),
        }
    }

    /// A key with a single word value.
    pub fn word(&self, name: &str) -> Result<&str, ParseError> {
        let k = self.key(name)?;
        match k.values.as_slice() {
            [v] => Ok(v),
            _ => Err(err(k.line, 1, format!("key '{name}' takes one value"))),
        }
    }

    pub fn has_section(&self, name: &str) -> bool {
        self.sections.iter().any(|s| s.name == name)
    }

    /// A section of exactly `rows × cols` entries.
    pub fn table(&self, name: &str, rows: usize, cols: usize) -> Result<Vec<Vec<usize>>, ParseError> {
        let s = self
            .sections
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| err(self.last_line + 1, 1, format!("missing section '{name}'")))?;
        for r in &s.rows {
            if r.values.len() != cols {
                return Err(err(
                    r.line,
                    1,
                    format!("row has {} entries, section '{name}' needs {cols}", r.values.len()),
                ));
            }
        }
        if s.rows.len() != rows {
            return Err(err(
                s.line,
                1,
                format!("section '{name}' has {} rows, expected {rows}", s.rows.len()),
            ));
        }
        Ok(s.rows.iter().map(|r| r.values.clone()).collect())
    }

    /// Rejects sections the kind does not use.
    pub fn only_sections(&self, allowed: &[&str]) -> Result<(), ParseError> {
        match self.sections.iter().find(|s| !allowed.contains(&s.name.as_str())) {
            Some(s) => Err(err(
                s.line,
                1,
                format!("unexpected section '{}' in a {} document", s.name, self.kind),
            )),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_keys_sections_and_rows() {
        let d = parse_raw("mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\n").unwrap();
        assert_eq!(d.kind, "group");
        assert_eq!(d.number("order").unwrap(), 2);
        assert_eq!(d.table("mul", 2, 2).unwrap(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn ragged_row_is_reported_at_its_line() {
        let e = parse_raw("mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0 1\n").unwrap_err();
        assert_eq!((e.line, e.column), (6, 1));
    }

    #[test]
    fn bad_token_column() {
        let e = parse_raw("mla-kit v1\nkind group\nmul\n0 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 3));
    }

    #[test]
    fn unknown_version_is_rejected() {
        let e = parse_raw("mla-kit v2\nkind group\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("v2"));
    }

    #[test]
    fn labels_are_ignored() {
        let d = parse_raw("mla-kit v1\nkind group\nlabels e a\norder 2\n").unwrap();
        assert_eq!(d.keys.len(), 1);
    }

    #[test]
    fn missing_section_is_reported() {
        let d = parse_raw("mla-kit v1\nkind group\norder 2\n").unwrap();
        assert!(d.table("mul", 2, 2).unwrap_err().message.contains("missing"));
    }
}
