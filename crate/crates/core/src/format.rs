//! Line-oriented digraph files.
//!
//! ```text
//! # comment
//! n 3
//! arc 0 1
//! arc 1 2
//! ```
//!
//! `#` starts a comment, blank lines are skipped, the first significant line
//! is the `n` header and each further line is one arc. A digon is two `arc`
//! lines. Repeated arcs are rejected.

use crate::digraph::{bit, Digraph, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_number(tok: &str, line: usize, what: &str) -> Result<usize> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            line,
            reason: format!("invalid {what} `{tok}`"),
        });
    }
    tok.parse().map_err(|_| Error::Parse {
        line,
        reason: format!("{what} `{tok}` is too large"),
    })
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut rows: Vec<u64> = Vec::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        match (n, toks.as_slice()) {
            (None, ["n", count]) => {
                let count = parse_number(count, line, "vertex count")?;
                if count > MAX_VERTICES {
                    return Err(Error::Parse {
                        line,
                        reason: format!("at most {MAX_VERTICES} vertices are supported"),
                    });
                }
                n = Some(count);
                rows = vec![0; count];
            }
            (None, _) => {
                return Err(Error::Parse {
                    line,
                    reason: "expected header `n <count>`".into(),
                })
            }
            (Some(_), ["n", ..]) => {
                return Err(Error::Parse {
                    line,
                    reason: "repeated header".into(),
                })
            }
            (Some(count), ["arc", u, v]) => {
                let u = parse_number(u, line, "vertex id")?;
                let v = parse_number(v, line, "vertex id")?;
                for w in [u, v] {
                    if w >= count {
                        return Err(Error::Parse {
                            line,
                            reason: format!("vertex {w} out of range 0..{count}"),
                        });
                    }
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        reason: format!("loop at vertex {u}"),
                    });
                }
                if rows[u] & bit(v) != 0 {
                    return Err(Error::Parse {
                        line,
                        reason: format!("duplicate arc {u} {v}"),
                    });
                }
                rows[u] |= bit(v);
                arcs.push((u, v));
            }
            (Some(_), _) => {
                return Err(Error::Parse {
                    line,
                    reason: format!("expected `arc <u> <v>`, found `{}`", content.trim()),
                })
            }
        }
    }
    let n = n.ok_or(Error::Parse {
        line: last_line,
        reason: "missing header `n <count>`".into(),
    })?;
    Digraph::new(n, arcs)
}

/// Canonical text: header, then arcs in lexicographic order.
pub fn render_digraph(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.n());
    for (u, v) in d.arcs() {
        out.push_str(&format!("arc {u} {v}\n"));
    }
    out
}

/// DOT rendering. Digons appear once, at their smaller endpoint, with
/// `dir=both`.
pub fn render_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in d.arcs() {
        if d.has_arc(v, u) {
            if u < v {
                out.push_str(&format!("  {u} -> {v} [dir=both];\n"));
            }
        } else {
            out.push_str(&format!("  {u} -> {v};\n"));
        }
    }
    out.push_str("}\n");
    out
}
