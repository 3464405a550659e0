//! The HGF text format.
//!
//! ```text
//! # optional comment lines
//! n r
//! v_1 v_2 ... v_r      (one edge per line, ids ascending and 0-based)
//! ```
//!
//! Blank lines and lines starting with `#` are ignored anywhere. The writer
//! emits comments first (as `# text`), then the header, then the edges in
//! lexicographic order, each line terminated by `\n`.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// A parsed HGF file: the hypergraph plus its comment lines (without the
/// leading `# `).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgfDocument {
    pub comments: Vec<String>,
    pub hypergraph: Hypergraph,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<HgfDocument> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut flat: Vec<u32> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = line.strip_prefix('#') {
            comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            continue;
        }
        if !line.is_ascii() {
            return Err(parse_err(lineno, "non-ASCII content"));
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        let nums: Vec<u64> = fields
            .iter()
            .map(|f| f.parse::<u64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| parse_err(lineno, format!("expected decimal integers, got `{line}`")))?;
        match header {
            None => {
                if nums.len() != 2 {
                    return Err(parse_err(lineno, "header must be `n r`"));
                }
                let (n, r) = (nums[0] as usize, nums[1] as usize);
                if r < 2 {
                    return Err(parse_err(lineno, "uniformity must be at least 2"));
                }
                if n > u32::MAX as usize {
                    return Err(parse_err(lineno, "vertex count too large"));
                }
                header = Some((n, r));
            }
            Some((n, r)) => {
                if nums.len() != r {
                    return Err(parse_err(
                        lineno,
                        format!("edge has {} vertices, expected {r}", nums.len()),
                    ));
                }
                if nums.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(parse_err(lineno, "edge ids must be strictly ascending"));
                }
                if let Some(&v) = nums.iter().find(|&&v| v as usize >= n) {
                    return Err(parse_err(lineno, format!("vertex {v} out of range (n = {n})")));
                }
                let edge: Vec<u32> = nums.iter().map(|&v| v as u32).collect();
                if !seen.insert(edge.clone()) {
                    return Err(parse_err(lineno, "duplicate edge"));
                }
                flat.extend(edge);
            }
        }
    }
    let (n, r) = header.ok_or_else(|| parse_err(0, "missing `n r` header"))?;
    let hypergraph = Hypergraph::from_flat(n, r, flat)?;
    Ok(HgfDocument {
        comments,
        hypergraph,
    })
}

/// Canonical writer output.
pub fn write(h: &Hypergraph, comments: &[String]) -> String {
    let mut out = String::with_capacity(h.len() * (h.r() * 4) + 64);
    for c in comments {
        for line in c.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out.push_str(&format!("{} {}\n", h.n(), h.r()));
    let mut buf = itoa_buf();
    for e in h.edges() {
        for (i, v) in e.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(fmt_u32(&mut buf, *v));
        }
        out.push('\n');
    }
    out
}

fn itoa_buf() -> [u8; 10] {
    [0; 10]
}

fn fmt_u32(buf: &mut [u8; 10], mut v: u32) -> &str {
    let mut i = buf.len();
    loop {
        i -= 1;
        buf[i] = b'0' + (v % 10) as u8;
        v /= 10;
        if v == 0 {
            break;
        }
    }
    std::str::from_utf8(&buf[i..]).expect("ascii digits")
}

pub fn read_file(path: &std::path::Path) -> Result<HgfDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("cannot read {}: {e}", path.display())))?;
    parse(&text)
}
