//! Canonical cotrees of cographs.
//!
//! Text form: `node := leaf | label "(" node (" " node)+ ")"`, with
//! `label` in `{0, 1}` and `leaf := "v" <decimal id>`, e.g. `0(1(v0 v1) v2)`.

use std::fmt;
use std::str::FromStr;

use crate::digraph::{bit, components_of, full_mask, mask_iter, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::induces_p4_in_symmetric;

/// Internal node kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Join {
    /// `0`: disjoint union of the children.
    Union,
    /// `1`: complete join of the children.
    Complete,
}

impl Join {
    fn label(self) -> char {
        match self {
            Join::Union => '0',
            Join::Complete => '1',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Cotree {
    /// Marker for the graph without vertices.
    Empty,
    Leaf(usize),
    Node(Join, Vec<Cotree>),
}

impl Cotree {
    /// Leaf ids in increasing order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort_unstable();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Empty => {}
            Cotree::Leaf(v) => out.push(*v),
            Cotree::Node(_, children) => children.iter().for_each(|c| c.collect_leaves(out)),
        }
    }

    fn canonical_key(&self) -> (usize, Vec<usize>) {
        let leaves = self.leaves();
        (leaves.len(), leaves)
    }

    /// Labels alternate along every root-to-leaf path and every internal
    /// node has at least two children.
    pub fn is_alternating(&self) -> bool {
        fn walk(t: &Cotree, parent: Option<Join>) -> bool {
            match t {
                Cotree::Empty => parent.is_none(),
                Cotree::Leaf(_) => true,
                Cotree::Node(j, children) => {
                    children.len() >= 2
                        && parent != Some(*j)
                        && children.iter().all(|c| walk(c, Some(*j)))
                }
            }
        }
        walk(self, None)
    }

    /// Alternating, with children sorted by `(size, sorted leaf list)`.
    pub fn is_canonical(&self) -> bool {
        fn sorted(t: &Cotree) -> bool {
            match t {
                Cotree::Node(_, children) => {
                    children
                        .windows(2)
                        .all(|w| w[0].canonical_key() <= w[1].canonical_key())
                        && children.iter().all(sorted)
                }
                _ => true,
            }
        }
        self.is_alternating() && sorted(self)
    }
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cotree::Empty => f.write_str("empty"),
            Cotree::Leaf(v) => write!(f, "v{v}"),
            Cotree::Node(j, children) => {
                write!(f, "{}(", j.label())?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for Cotree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "empty" {
            return Ok(Cotree::Empty);
        }
        let mut p = TermParser {
            bytes: s.as_bytes(),
            pos: 0,
        };
        let t = p.node()?;
        if p.pos != p.bytes.len() {
            return Err(p.error("trailing input"));
        }
        Ok(t)
    }
}

struct TermParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl TermParser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::MalformedCotree(format!("{what} at offset {}", self.pos))
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.bytes.get(self.pos) == Some(&b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", b as char)))
        }
    }

    fn node(&mut self) -> Result<Cotree> {
        match self.bytes.get(self.pos) {
            Some(b'v') => {
                self.pos += 1;
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                if digits.is_empty() || (digits.len() > 1 && digits.starts_with('0')) {
                    return Err(self.error("bad leaf id"));
                }
                digits
                    .parse()
                    .map(Cotree::Leaf)
                    .map_err(|_| self.error("bad leaf id"))
            }
            Some(&l @ (b'0' | b'1')) => {
                self.pos += 1;
                let join = if l == b'0' {
                    Join::Union
                } else {
                    Join::Complete
                };
                self.eat(b'(')?;
                let mut children = vec![self.node()?];
                while self.bytes.get(self.pos) == Some(&b' ') {
                    self.pos += 1;
                    children.push(self.node()?);
                }
                self.eat(b')')?;
                if children.len() < 2 {
                    return Err(self.error("internal node with a single child"));
                }
                Ok(Cotree::Node(join, children))
            }
            _ => Err(self.error("expected a node")),
        }
    }
}

/// Canonical cotree of a symmetric digraph.
///
/// Fails with [`Error::NotCograph`] and an induced P4 when some induced
/// subgraph on two or more vertices is connected with a connected
/// complement.
pub fn build_cotree(g: &Digraph) -> Result<Cotree> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if g.n() == 0 {
        return Ok(Cotree::Empty);
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| g.out_mask(v)).collect();
    let all = full_mask(g.n());
    let co_adj: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(v, &row)| !row & all & !bit(v))
        .collect();
    build(g, &adj, &co_adj, all)
}

fn build(g: &Digraph, adj: &[u64], co_adj: &[u64], within: u64) -> Result<Cotree> {
    if within.count_ones() == 1 {
        return Ok(Cotree::Leaf(within.trailing_zeros() as usize));
    }
    let (join, parts) = {
        let comps = components_of(adj, within);
        if comps.len() > 1 {
            (Join::Union, comps)
        } else {
            let co = components_of(co_adj, within);
            if co.len() > 1 {
                (Join::Complete, co)
            } else {
                return Err(Error::NotCograph {
                    witness: p4_witness(g, within),
                });
            }
        }
    };
    let mut children = parts
        .into_iter()
        .map(|p| build(g, adj, co_adj, p))
        .collect::<Result<Vec<_>>>()?;
    children.sort_by_cached_key(Cotree::canonical_key);
    Ok(Cotree::Node(join, children))
}

fn p4_witness(g: &Digraph, within: u64) -> VertexSet {
    let vs: Vec<usize> = mask_iter(within).collect();
    let k = vs.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let q = VertexSet::from_iter([vs[a], vs[b], vs[c], vs[d]]);
                    if induces_p4_in_symmetric(g, q) == Ok(true) {
                        return q;
                    }
                }
            }
        }
    }
    unreachable!("a prime graph on two or more vertices contains an induced P4")
}

/// Symmetric digraph whose edges join leaves meeting at a `1` node.
pub fn cotree_to_graph(t: &Cotree) -> Result<Digraph> {
    if let Cotree::Empty = t {
        return Err(Error::MalformedCotree("empty cotree".into()));
    }
    let leaves = t.leaves();
    let n = leaves.len();
    if leaves.iter().enumerate().any(|(i, &v)| i != v) {
        return Err(Error::MalformedCotree(
            "leaves must be exactly v0..v(n-1), each once".into(),
        ));
    }
    if n > crate::digraph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut rows = vec![0u64; n];
    fill(t, &mut rows)?;
    Ok(Digraph::from_out_rows(n, &rows))
}

fn fill(t: &Cotree, rows: &mut [u64]) -> Result<u64> {
    match t {
        Cotree::Empty => Err(Error::MalformedCotree("nested empty marker".into())),
        Cotree::Leaf(v) => Ok(bit(*v)),
        Cotree::Node(join, children) => {
            if children.len() < 2 {
                return Err(Error::MalformedCotree(
                    "internal node with fewer than two children".into(),
                ));
            }
            let sets = children
                .iter()
                .map(|c| fill(c, rows))
                .collect::<Result<Vec<_>>>()?;
            let all = sets.iter().fold(0, |a, s| a | s);
            if *join == Join::Complete {
                for &s in &sets {
                    for v in mask_iter(s) {
                        rows[v] |= all & !s;
                    }
                }
            }
            Ok(all)
        }
    }
}
