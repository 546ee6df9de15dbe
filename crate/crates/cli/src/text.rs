//! The text matrix format: one factor per line, `n | q_1 q_2 ... q_m`.
//! Lines whose first non-blank character is `#` are comments; blank lines
//! are ignored.

use cicy_core::ConfigurationMatrix;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(b)) => {
                out.push((offset + b + 1, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((offset + b + 1, &s[b..]));
    }
    out
}

pub fn parse(input: &str) -> Result<ConfigurationMatrix, ParseError> {
    let mut dims = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut first_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let bar = raw.find('|').ok_or_else(|| {
            err(
                line,
                raw.len() - trimmed.len() + 1,
                "expected `n | q_1 ... q_m`",
            )
        })?;
        let head = tokens(&raw[..bar], 0);
        let n = match head.as_slice() {
            [(col, tok)] => tok
                .parse::<u32>()
                .ok()
                .filter(|&n| n >= 1)
                .ok_or_else(|| err(line, *col, format!("`{}` is not a dimension >= 1", tok)))?,
            [] => return Err(err(line, bar + 1, "missing ambient dimension before `|`")),
            [_, (col, _), ..] => return Err(err(line, *col, "more than one ambient dimension")),
        };
        let mut row = Vec::new();
        for (col, tok) in tokens(&raw[bar + 1..], bar + 1) {
            let q = tok
                .parse::<i64>()
                .map_err(|_| err(line, col, format!("`{}` is not an integer", tok)))?;
            row.push(q);
        }
        if row.is_empty() {
            return Err(err(line, raw.len() + 1, "row has no degree entries"));
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(err(
                    line,
                    1,
                    format!(
                        "row has {} entries, line {} has {}",
                        row.len(),
                        first_line,
                        first.len()
                    ),
                ));
            }
        } else {
            first_line = line;
        }
        dims.push(n);
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(err(input.lines().count().max(1), 1, "no matrix rows"));
    }
    ConfigurationMatrix::new(dims, rows).map_err(|e| err(first_line, 1, e.to_string()))
}

pub fn render(cfg: &ConfigurationMatrix) -> String {
    let mut s = cfg.to_string();
    s.push('\n');
    s
}

/// The rendered matrix split into lines, as embedded in JSON documents.
pub fn lines(cfg: &ConfigurationMatrix) -> Vec<String> {
    cfg.to_string().lines().map(str::to_owned).collect()
}

pub fn from_lines(lines: &[String]) -> Result<ConfigurationMatrix, ParseError> {
    parse(&lines.join("\n"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# the split quintic\n\n4 | 4 1\n  1 |1 1\n";
        let cfg = parse(text).unwrap();
        assert_eq!(cfg.dims(), &[4, 1]);
        assert_eq!(cfg.rows(), &[vec![4, 1], vec![1, 1]]);
        assert_eq!(render(&cfg), "4 | 4 1\n1 | 1 1\n");
    }

    #[test]
    fn ragged_rows_are_located() {
        let e = parse("4 | 4 1\n1 | 1 1 0\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
    }

    #[test]
    fn bad_tokens_are_located() {
        let e = parse("4 | 4 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        let e = parse("\n0 | 2\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = parse("  4 5\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 3));
        assert!(parse("# nothing\n").is_err());
        assert!(parse("3 |\n").is_err());
    }
}
