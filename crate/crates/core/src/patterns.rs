//! The five small patterns (symmetric P4, C3, P3 and the two digon
//! augmentations of P3), P4C signatures and chordless directed cycles.

use std::cmp::Ordering;
use std::fmt;

use crate::digraph::{bit, full_mask, mask_iter, Digraph, VertexSet};
use crate::error::{Error, Result};

/// Classification of the subdigraph induced on three vertices.
///
/// `P3Plus(b)` is `a -> b -> c` with the first arc doubled (`a <-> b`),
/// `P3Minus(b)` the same path with the second arc doubled (`b <-> c`).
/// Reversal swaps the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriplePattern {
    None,
    C3,
    P3(usize),
    P3Plus(usize),
    P3Minus(usize),
    Other,
}

impl TriplePattern {
    pub fn is_forbidden(self) -> bool {
        !matches!(self, TriplePattern::None | TriplePattern::Other)
    }
}

impl fmt::Display for TriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriplePattern::None => f.write_str("none"),
            TriplePattern::C3 => f.write_str("c3"),
            TriplePattern::P3(m) => write!(f, "p3 mid {m}"),
            TriplePattern::P3Plus(m) => write!(f, "p3+ mid {m}"),
            TriplePattern::P3Minus(m) => write!(f, "p3- mid {m}"),
            TriplePattern::Other => f.write_str("other"),
        }
    }
}

fn check_size(set: VertexSet, expected: usize, d: &Digraph) -> Result<()> {
    if set.len() != expected {
        return Err(Error::BadSubsetSize {
            expected,
            actual: set.len(),
        });
    }
    match set.max() {
        Some(m) if m >= d.n() => Err(Error::OutOfRange {
            vertex: m,
            n: d.n(),
        }),
        _ => Ok(()),
    }
}

/// Classifies the subdigraph induced on a 3-element set.
pub fn classify_triple(d: &Digraph, triple: VertexSet) -> Result<TriplePattern> {
    check_size(triple, 3, d)?;
    Ok(classify_unchecked(d, triple.bits()))
}

fn classify_unchecked(d: &Digraph, mask: u64) -> TriplePattern {
    let vs: Vec<usize> = mask_iter(mask).collect();
    let mut arcs = 0;
    let mut digons = 0;
    for (i, &u) in vs.iter().enumerate() {
        arcs += (d.out_mask(u) & mask).count_ones();
        for &v in &vs[i + 1..] {
            if d.has_digon(u, v) {
                digons += 1;
            }
        }
    }
    let out_deg = |v: usize| (d.out_mask(v) & mask).count_ones();
    let in_deg = |v: usize| (d.in_mask(v) & mask).count_ones();
    match (arcs, digons) {
        (0, _) => TriplePattern::None,
        (3, 0) => {
            if vs.iter().all(|&v| out_deg(v) == 1) {
                TriplePattern::C3
            } else {
                TriplePattern::Other
            }
        }
        (2, 0) => match vs.iter().find(|&&v| out_deg(v) == 1 && in_deg(v) == 1) {
            Some(&mid) => TriplePattern::P3(mid),
            None => TriplePattern::Other,
        },
        (3, 1) => {
            // the digon vertex carrying the single asymmetric arc is the midpoint
            for &w in &vs {
                let sym = d.sym_mask(w) & mask;
                if sym == 0 {
                    continue;
                }
                let out = d.out_mask(w) & mask & !sym;
                let inc = d.in_mask(w) & mask & !sym;
                if out != 0 {
                    return TriplePattern::P3Plus(w);
                }
                if inc != 0 {
                    return TriplePattern::P3Minus(w);
                }
            }
            TriplePattern::Other
        }
        _ => TriplePattern::Other,
    }
}

/// Whether `quad` induces a chordless 3-edge path in `S(D)`. Asymmetric
/// arcs inside `quad` are ignored.
pub fn induces_p4_in_symmetric(d: &Digraph, quad: VertexSet) -> Result<bool> {
    check_size(quad, 4, d)?;
    Ok(p4_in_symmetric_unchecked(d, quad.bits()))
}

fn p4_in_symmetric_unchecked(d: &Digraph, mask: u64) -> bool {
    let mut ones = 0;
    let mut twos = 0;
    for v in mask_iter(mask) {
        match (d.sym_mask(v) & mask).count_ones() {
            1 => ones += 1,
            2 => twos += 1,
            _ => return false,
        }
    }
    ones == 2 && twos == 2
}

/// Whether `quad` induces, in `D` itself, exactly the symmetric P4.
pub fn induces_symmetric_p4_in_digraph(d: &Digraph, quad: VertexSet) -> Result<bool> {
    check_size(quad, 4, d)?;
    let mask = quad.bits();
    Ok(p4_in_symmetric_unchecked(d, mask)
        && mask_iter(mask).all(|v| d.out_mask(v) & mask == d.sym_mask(v) & mask))
}

/// The four occurrence families compared by P4C-isomorphism, each sorted.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct PatternSignature {
    pub p4_quads: Vec<VertexSet>,
    pub c3_triples: Vec<VertexSet>,
    pub p3_sites: Vec<(VertexSet, usize)>,
    /// `P3Plus` and `P3Minus` sites merged.
    pub p3_aug_sites: Vec<(VertexSet, usize)>,
}

impl PatternSignature {
    pub fn is_empty(&self) -> bool {
        self.p4_quads.is_empty()
            && self.c3_triples.is_empty()
            && self.p3_sites.is_empty()
            && self.p3_aug_sites.is_empty()
    }

    /// All entries in canonical order: P4 quads, C3, P3, merged P3+/P3-.
    pub fn entries(&self) -> Vec<SignatureEntry> {
        let mut out = Vec::new();
        out.extend(self.p4_quads.iter().map(|&q| SignatureEntry::P4(q)));
        out.extend(self.c3_triples.iter().map(|&t| SignatureEntry::C3(t)));
        out.extend(self.p3_sites.iter().map(|&(t, m)| SignatureEntry::P3(t, m)));
        out.extend(
            self.p3_aug_sites
                .iter()
                .map(|&(t, m)| SignatureEntry::P3Aug(t, m)),
        );
        out
    }
}

/// One occurrence in a [`PatternSignature`].
///
/// The derived order follows the canonical listing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignatureEntry {
    P4(VertexSet),
    C3(VertexSet),
    P3(VertexSet, usize),
    P3Aug(VertexSet, usize),
}

impl fmt::Display for SignatureEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignatureEntry::P4(q) => write!(f, "p4 {q}"),
            SignatureEntry::C3(t) => write!(f, "c3 {t}"),
            SignatureEntry::P3(t, m) => write!(f, "p3 {t} mid {m}"),
            SignatureEntry::P3Aug(t, m) => write!(f, "p3aug {t} mid {m}"),
        }
    }
}

/// Which side of a comparison holds an entry the other lacks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// First entry, in canonical order, present in exactly one signature.
pub fn first_difference(
    left: &PatternSignature,
    right: &PatternSignature,
) -> Option<(SignatureEntry, Side)> {
    let a = left.entries();
    let b = right.entries();
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return None,
            (Some(&x), None) => return Some((x, Side::Left)),
            (None, Some(&y)) => return Some((y, Side::Right)),
            (Some(&x), Some(&y)) => match x.cmp(&y) {
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                Ordering::Less => return Some((x, Side::Left)),
                Ordering::Greater => return Some((y, Side::Right)),
            },
        }
    }
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, acc: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(acc);
            return;
        }
        for v in start..=n - left {
            rec(v + 1, n, left - 1, acc | bit(v), f);
        }
    }
    if k <= n {
        rec(0, n, k, 0, &mut f);
    }
}

/// Exhaustive P4C signature of `d`.
pub fn p4c_signature(d: &Digraph) -> PatternSignature {
    let n = d.n();
    let mut sig = PatternSignature::default();
    for_each_subset(n, 3, |mask| {
        let t = VertexSet::from_bits(mask);
        match classify_unchecked(d, mask) {
            TriplePattern::C3 => sig.c3_triples.push(t),
            TriplePattern::P3(m) => sig.p3_sites.push((t, m)),
            TriplePattern::P3Plus(m) | TriplePattern::P3Minus(m) => sig.p3_aug_sites.push((t, m)),
            TriplePattern::None | TriplePattern::Other => {}
        }
    });
    for_each_subset(n, 4, |mask| {
        if p4_in_symmetric_unchecked(d, mask) {
            sig.p4_quads.push(VertexSet::from_bits(mask));
        }
    });
    sig
}

/// P4C-isomorphism of two digraphs on the same vertex set.
pub fn are_p4c_isomorphic(d: &Digraph, e: &Digraph) -> Result<bool> {
    if d.n() != e.n() {
        return Err(Error::VertexCountMismatch(d.n(), e.n()));
    }
    Ok(p4c_signature(d) == p4c_signature(e))
}

/// A forbidden pattern occurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForbiddenSite {
    SymmetricP4(VertexSet),
    Triple(VertexSet, TriplePattern),
}

impl fmt::Display for ForbiddenSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenSite::SymmetricP4(q) => write!(f, "{q} induces a symmetric P4"),
            ForbiddenSite::Triple(t, p) => write!(f, "{t} induces {p}"),
        }
    }
}

/// First forbidden site: triples in lexicographic order, then quadruples
/// inducing a P4 in `S(D)`.
pub fn forbidden_site(d: &Digraph) -> Option<ForbiddenSite> {
    let n = d.n();
    let mut found = None;
    for_each_subset(n, 3, |mask| {
        if found.is_none() {
            let p = classify_unchecked(d, mask);
            if p.is_forbidden() {
                found = Some(ForbiddenSite::Triple(VertexSet::from_bits(mask), p));
            }
        }
    });
    if found.is_none() {
        for_each_subset(n, 4, |mask| {
            if found.is_none() && p4_in_symmetric_unchecked(d, mask) {
                found = Some(ForbiddenSite::SymmetricP4(VertexSet::from_bits(mask)));
            }
        });
    }
    found
}

/// Whether `d` avoids all five patterns, with the P4 taken in `S(D)`.
///
/// This is exactly an empty [`p4c_signature`].
pub fn is_f_free(d: &Digraph) -> bool {
    forbidden_site(d).is_none()
}

/// An induced directed cycle `v0 -> v1 -> ... -> v0`, listed from its
/// smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedCycleWitness {
    vertices: Vec<usize>,
}

impl InducedCycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Re-checks the witness against `d`: distinct vertices, the cycle arcs,
    /// and no other arc among the listed vertices.
    pub fn validate(&self, d: &Digraph) -> bool {
        let k = self.vertices.len();
        if k < 3 || self.vertices.iter().any(|&v| v >= d.n()) {
            return false;
        }
        let set: VertexSet = self.vertices.iter().copied().collect();
        if set.len() != k {
            return false;
        }
        (0..k).all(|i| {
            let u = self.vertices[i];
            let next = self.vertices[(i + 1) % k];
            d.out_mask(u) & set.bits() == bit(next)
        })
    }
}

/// Chordless cycle search shared by the directed-cycle and hole detectors.
pub(crate) struct ChordlessCycles<'a> {
    next: &'a [u64],
    touch: &'a [u64],
    directed: bool,
    n: usize,
}

impl<'a> ChordlessCycles<'a> {
    pub(crate) fn new(next: &'a [u64], touch: &'a [u64], directed: bool) -> Self {
        ChordlessCycles {
            next,
            touch,
            directed,
            n: next.len(),
        }
    }

    /// Lexicographically smallest chordless cycle of exactly `k` vertices,
    /// starting from its minimum vertex.
    pub(crate) fn find_of_length(&self, k: usize) -> Option<Vec<usize>> {
        if k < 3 || k > self.n {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        for v0 in 0..self.n {
            path.clear();
            path.push(v0);
            if self.extend(&mut path, bit(v0), k) {
                return Some(path);
            }
        }
        None
    }

    /// Shortest accepted length first.
    pub(crate) fn find(
        &self,
        min_len: usize,
        accept: impl Fn(usize) -> bool,
    ) -> Option<Vec<usize>> {
        (min_len.max(3)..=self.n)
            .filter(|&k| accept(k))
            .find_map(|k| self.find_of_length(k))
    }

    fn extend(&self, path: &mut Vec<usize>, on_path: u64, k: usize) -> bool {
        let v0 = path[0];
        let tail = *path.last().unwrap();
        let above_start = full_mask(self.n) & !full_mask(v0 + 1);
        let candidates = self.next[tail] & !on_path & above_start;
        let closing = path.len() == k - 1;
        for w in mask_iter(candidates) {
            if self.directed && self.next[w] & bit(tail) != 0 {
                continue;
            }
            if closing {
                if self.touch[w] & on_path != bit(tail) | bit(v0) || self.next[w] & bit(v0) == 0 {
                    continue;
                }
                if self.directed && self.next[v0] & bit(w) != 0 {
                    continue;
                }
                path.push(w);
                return true;
            }
            if self.touch[w] & on_path != bit(tail) {
                continue;
            }
            path.push(w);
            if self.extend(path, on_path | bit(w), k) {
                return true;
            }
            path.pop();
        }
        false
    }
}

/// Smallest induced directed cycle with at least `min_len >= 3` vertices.
///
/// Ties break by length, then by vertex sequence read from the cycle's
/// minimum vertex.
pub fn find_induced_directed_cycle(d: &Digraph, min_len: usize) -> Option<InducedCycleWitness> {
    let next: Vec<u64> = (0..d.n()).map(|v| d.out_mask(v)).collect();
    let touch: Vec<u64> = (0..d.n()).map(|v| d.touch_mask(v)).collect();
    ChordlessCycles::new(&next, &touch, true)
        .find(min_len, |_| true)
        .map(|vertices| InducedCycleWitness { vertices })
}
