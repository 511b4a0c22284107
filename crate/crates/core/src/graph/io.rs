//! Text formats: the plain edge list (`n m` header, then `u v` lines) and
//! graph6.

use super::Graph;
use crate::error::{Error, Result};
use crate::MAX_VERTICES;

impl Graph {
    /// Parses the edge-list format. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing \"n m\" header"))?;
        let [n, m] = parse_pair(hline, header)?;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut g = Graph::new(n);
        let mut seen = 0;
        for (line, l) in lines {
            let [u, v] = parse_pair(line, l)?;
            g.insert_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(Error::parse(hline, format!("header announces {m} edges, found {seen}")));
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Decodes one graph6 string (optionally with the `>>graph6<<` header).
    pub fn from_graph6(s: &str) -> Result<Graph> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::parse(1, "graph6 byte outside 63..=126"));
        }
        let (n, body) = match bytes.first() {
            None => return Err(Error::parse(1, "empty graph6 string")),
            Some(126) => {
                if bytes.len() < 4 || bytes[1] == 126 {
                    return Err(Error::parse(1, "graph6 vertex count too large"));
                }
                let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
                (n, &bytes[4..])
            }
            Some(&b) => ((b - 63) as usize, &bytes[1..]),
        };
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let pairs = n * n.saturating_sub(1) / 2;
        if body.len() != pairs.div_ceil(6) {
            return Err(Error::parse(1, format!("graph6 body has {} bytes, expected {}", body.len(), pairs.div_ceil(6))));
        }
        let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
        let mut g = Graph::new(n);
        let mut i = 0;
        for v in 1..n {
            for u in 0..v {
                if bit(i) {
                    g.insert_edge(u, v)?;
                }
                i += 1;
            }
        }
        Ok(g)
    }

    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::new();
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.extend([126, (n >> 12 & 63) as u8 + 63, (n >> 6 & 63) as u8 + 63, (n & 63) as u8 + 63]);
        }
        let mut acc = 0u8;
        let mut count = 0;
        for v in 1..n {
            for u in 0..v {
                acc = acc << 1 | u8::from(self.has_edge(u, v));
                count += 1;
                if count == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    count = 0;
                }
            }
        }
        if count > 0 {
            out.push((acc << (6 - count)) + 63);
        }
        String::from_utf8(out).expect("graph6 is ASCII")
    }
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let mut it = l.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::parse(line, format!("expected two non-negative integers, got {l:?}"))),
    }
}
