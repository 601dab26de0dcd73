//! Dense loopless digraphs on at most [`MAX_VERTICES`] vertices.
//!
//! Adjacency is kept as one `u64` row per vertex for out-neighbours and one
//! for in-neighbours, so arc tests and induced-subset queries are bit
//! operations.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Digraph`] can hold.
pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn mask_iter(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An order-free set of vertex ids.
///
/// Sets compare lexicographically by their increasing element lists, so
/// sorted collections of sets come out in the order a human would write them.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet(full_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// Builds a set, rejecting ids `>= n` and duplicates.
    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &v in vertices {
            if v >= n || v >= MAX_VERTICES {
                return Err(Error::OutOfRange { vertex: v, n });
            }
            if bits & bit(v) != 0 {
                return Err(Error::Parse {
                    line: 0,
                    reason: format!("duplicate vertex {v} in set"),
                });
            }
            bits |= bit(v);
        }
        Ok(VertexSet(bits))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | bit(v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        mask_iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().fold(0, |acc, v| acc | bit(v)))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Connected components of an undirected graph, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding `v`.
    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(v))
    }
}

/// A loopless digraph on vertices `0..n`.
///
/// Equality is labeled equality: same vertex count and same arc set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inc: Vec<u64>,
}

impl Digraph {
    /// Builds a digraph from an arc list. Duplicate arcs collapse.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut d = Digraph::arcless(n);
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopArc(u));
            }
            d.set_arc(u, v);
        }
        Ok(d)
    }

    /// The digraph on `n` vertices with no arcs.
    ///
    /// Panics if `n > MAX_VERTICES`.
    pub fn arcless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Digraph {
            n,
            out: vec![0; n],
            inc: vec![0; n],
        }
    }

    /// Builds a digraph from out-neighbour rows; loops are dropped.
    pub(crate) fn from_out_rows(n: usize, rows: &[u64]) -> Self {
        let mut d = Digraph::arcless(n);
        let keep = full_mask(n);
        for (u, &row) in rows.iter().enumerate().take(n) {
            for v in mask_iter(row & keep & !bit(u)) {
                d.set_arc(u, v);
            }
        }
        d
    }

    fn set_arc(&mut self, u: usize, v: usize) {
        self.out[u] |= bit(v);
        self.inc[v] |= bit(u);
    }

    fn clear_arc(&mut self, u: usize, v: usize) {
        self.out[u] &= !bit(v);
        self.inc[v] &= !bit(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & bit(v) != 0
    }

    pub fn has_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    /// Either arc between `u` and `v` is present.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_mask(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_mask(&self, v: usize) -> u64 {
        self.inc[v]
    }

    /// Vertices joined to `v` by a digon.
    pub fn sym_mask(&self, v: usize) -> u64 {
        self.out[v] & self.inc[v]
    }

    /// Vertices joined to `v` by any arc.
    pub fn touch_mask(&self, v: usize) -> u64 {
        self.out[v] | self.inc[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| mask_iter(self.out[u]).map(move |v| (u, v)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.out == self.inc
    }

    /// `S(D)`: every arc that has its antiparallel partner.
    pub fn symmetric_part(&self) -> Digraph {
        let rows: Vec<u64> = (0..self.n).map(|v| self.sym_mask(v)).collect();
        Digraph {
            n: self.n,
            out: rows.clone(),
            inc: rows,
        }
    }

    /// `O(D)`: the arcs that are not part of a digon.
    pub fn oriented_part(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: (0..self.n).map(|v| self.out[v] & !self.inc[v]).collect(),
            inc: (0..self.n).map(|v| self.inc[v] & !self.out[v]).collect(),
        }
    }

    /// The converse digraph.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    /// Subdigraph induced by `set`, relabeled by increasing original id.
    pub fn induced_subdigraph(&self, set: VertexSet) -> Result<Digraph> {
        if let Some(max) = set.max() {
            if max >= self.n {
                return Err(Error::OutOfRange {
                    vertex: max,
                    n: self.n,
                });
            }
        }
        let ids = set.to_vec();
        let mut d = Digraph::arcless(ids.len());
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate() {
                if self.has_arc(u, v) {
                    d.set_arc(i, j);
                }
            }
        }
        Ok(d)
    }

    /// Copy with the arc `(u, v)` flipped between present and absent.
    pub fn with_arc_toggled(&self, u: usize, v: usize) -> Digraph {
        assert!(u != v && u < self.n && v < self.n);
        let mut d = self.clone();
        if d.has_arc(u, v) {
            d.clear_arc(u, v);
        } else {
            d.set_arc(u, v);
        }
        d
    }

    /// True iff there is no directed cycle; a digon is a 2-cycle.
    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(full_mask(self.n))
    }

    /// Acyclicity of the subdigraph induced by the bit set `mask`.
    ///
    /// Repeatedly strips vertices without in-neighbours inside the
    /// remaining set.
    pub fn is_acyclic_on(&self, mask: u64) -> bool {
        let mut rest = mask & full_mask(self.n);
        loop {
            if rest == 0 {
                return true;
            }
            let sources = mask_iter(rest)
                .filter(|&v| self.inc[v] & rest == 0)
                .fold(0u64, |acc, v| acc | bit(v));
            if sources == 0 {
                return false;
            }
            rest &= !sources;
        }
    }

    /// Components of `S(D)` seen as an undirected graph.
    pub fn symmetric_components(&self) -> ComponentPartition {
        let rows: Vec<u64> = (0..self.n).map(|v| self.sym_mask(v)).collect();
        ComponentPartition {
            blocks: components_of(&rows, full_mask(self.n))
                .into_iter()
                .map(VertexSet::from_bits)
                .collect(),
        }
    }

    /// Complement of a symmetric digraph: a digon on every non-adjacent pair.
    pub fn symmetric_complement(&self) -> Result<Digraph> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let all = full_mask(self.n);
        let rows: Vec<u64> = (0..self.n).map(|v| !self.out[v] & all & !bit(v)).collect();
        Ok(Digraph {
            n: self.n,
            out: rows.clone(),
            inc: rows,
        })
    }

    /// Complement as a digraph: arc `(u, v)` iff absent here.
    pub fn complement(&self) -> Digraph {
        let all = full_mask(self.n);
        let rows: Vec<u64> = (0..self.n).map(|v| !self.out[v] & all & !bit(v)).collect();
        Digraph::from_out_rows(self.n, &rows)
    }

    /// Applies the vertex bijection `perm` (old id `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut d = Digraph::arcless(self.n);
        for (u, v) in self.arcs() {
            d.set_arc(perm[u], perm[v]);
        }
        d
    }

    /// Number of ordered pairs, i.e. the bit width of [`Digraph::from_code`].
    pub fn pair_count(n: usize) -> usize {
        n * n.saturating_sub(1)
    }

    /// Digraph whose arcs are the set bits of `code`, with ordered pairs
    /// `(u, v)`, `u != v`, numbered lexicographically. Requires `n <= 8`.
    pub fn from_code(n: usize, code: u64) -> Digraph {
        assert!(n <= 8);
        let mut d = Digraph::arcless(n);
        let mut k = 0;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    if code >> k & 1 == 1 {
                        d.set_arc(u, v);
                    }
                    k += 1;
                }
            }
        }
        d
    }

    /// Inverse of [`Digraph::from_code`]; `None` above 8 vertices.
    pub fn code(&self) -> Option<u64> {
        if self.n > 8 {
            return None;
        }
        let mut code = 0u64;
        let mut k = 0;
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v {
                    if self.has_arc(u, v) {
                        code |= 1 << k;
                    }
                    k += 1;
                }
            }
        }
        Some(code)
    }

    /// Compact one-line form, e.g. `n=3;0>1,1>2,2>0`.
    pub fn encoding(&self) -> String {
        let arcs: Vec<String> = self.arcs().map(|(u, v)| format!("{u}>{v}")).collect();
        format!("n={};{}", self.n, arcs.join(","))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

/// Every loopless digraph on exactly `n <= 5` vertices, in code order.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    assert!(n <= 5, "exhaustive enumeration is limited to 5 vertices");
    let pairs = Digraph::pair_count(n);
    (0..1u64 << pairs).map(move |code| Digraph::from_code(n, code))
}

/// Every symmetric digraph on exactly `n <= 8` vertices.
pub fn all_symmetric(n: usize) -> impl Iterator<Item = Digraph> {
    assert!(n <= 8);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |code| {
        let mut d = Digraph::arcless(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if code >> k & 1 == 1 {
                d.set_arc(u, v);
                d.set_arc(v, u);
            }
        }
        d
    })
}

/// Connected components of the undirected graph with neighbour rows `rows`,
/// restricted to `within`, each as a bit set, ordered by smallest vertex.
pub(crate) fn components_of(rows: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in mask_iter(frontier) {
                next |= rows[v] & within;
            }
            frontier = next & !comp;
            comp |= next;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}
