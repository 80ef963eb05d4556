use crate::error::{Error, Result};
use crate::gadgets::Graph;

/// Parses `n m` followed by `m` edge lines `u v`. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let bad = |line: usize, message: String| Error::GraphFormat { line, message };
    let numbers = |line: usize, l: &str| -> Result<(usize, usize)> {
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(bad(line, format!("expected two integers, got '{l}'")));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(line, format!("not a non-negative integer: '{s}'")));
        Ok((num(parts[0])?, num(parts[1])?))
    };
    let (line, header) = lines.next().ok_or_else(|| bad(1, "missing header line 'n m'".into()))?;
    let (n, m) = numbers(line, header)?;
    let mut g = Graph::empty(n);
    let mut count = 0;
    for (line, l) in lines {
        let (u, v) = numbers(line, l)?;
        if g.has_edge(u, v) {
            return Err(bad(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
        count += 1;
    }
    if count != m {
        return Err(bad(line, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}
