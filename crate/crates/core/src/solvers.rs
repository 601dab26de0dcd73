//! Exact dichromatic number and clique number.
//!
//! Both are exponential. The dichromatic DP keeps one byte per vertex
//! subset, so it is meant for digraphs with at most ~22 vertices.

use std::collections::BTreeMap;

use crate::digraph::{bit, full_mask, mask_iter, Digraph, VertexSet};
use crate::error::{Error, Result};

/// Minimal acyclic coloring: `assignment[v]` is the color of `v`, in `1..=chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringResult {
    pub chi: usize,
    pub assignment: Vec<usize>,
}

impl ColoringResult {
    /// Color classes in color order.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = vec![VertexSet::empty(); self.chi];
        for (v, &c) in self.assignment.iter().enumerate() {
            classes[c - 1].insert(v);
        }
        classes
    }
}

/// A maximum clique of `S(D)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueWitness {
    pub omega: usize,
    pub vertices: VertexSet,
}

impl CliqueWitness {
    pub fn validate(&self, d: &Digraph) -> bool {
        self.vertices.len() == self.omega
            && self
                .vertices
                .iter()
                .all(|v| v < d.n() && self.vertices.bits() & !bit(v) & !d.sym_mask(v) == 0)
    }
}

/// True iff every color class induces an acyclic subdigraph.
pub fn is_proper_coloring(d: &Digraph, assignment: &[usize]) -> Result<bool> {
    if assignment.len() < d.n() {
        return Err(Error::PartialAssignment(assignment.len()));
    }
    if assignment.len() > d.n() {
        return Err(Error::OutOfRange {
            vertex: d.n(),
            n: d.n(),
        });
    }
    let mut classes: BTreeMap<usize, u64> = BTreeMap::new();
    for (v, &c) in assignment.iter().enumerate() {
        *classes.entry(c).or_default() |= bit(v);
    }
    Ok(classes.values().all(|&mask| d.is_acyclic_on(mask)))
}

/// `acyclic[mask]` for every vertex subset.
pub fn acyclic_table(d: &Digraph) -> Vec<bool> {
    let n = d.n();
    let mut acyclic = vec![false; 1usize << n];
    acyclic[0] = true;
    for mask in 1u64..1 << n {
        acyclic[mask as usize] =
            mask_iter(mask).any(|v| d.in_mask(v) & mask == 0 && acyclic[(mask ^ bit(v)) as usize]);
    }
    acyclic
}

/// `chi[mask]`, the dichromatic number of every induced subdigraph.
///
/// `f(S) = 1 + min f(S \ T)` over acyclic `T ⊆ S` holding the minimum vertex
/// of `S`. Restricting `T` to maximal acyclic classes gives the same values
/// since `f` is monotone; reconstruction uses only maximal classes.
pub fn chi_table(acyclic: &[bool]) -> Vec<u8> {
    let size = acyclic.len();
    let mut chi = vec![0u8; size];
    for s in 1..size as u64 {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut best = u8::MAX;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if acyclic[t as usize] {
                best = best.min(chi[(s ^ t) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        chi[s as usize] = best;
    }
    chi
}

/// `omega[mask]`, the clique number of every induced subdigraph.
pub fn omega_table(d: &Digraph) -> Vec<u8> {
    let n = d.n();
    let mut omega = vec![0u8; 1usize << n];
    for s in 1u64..1 << n {
        let v = s.trailing_zeros() as usize;
        let without = omega[(s ^ bit(v)) as usize];
        let with = 1 + omega[(s & d.sym_mask(v)) as usize];
        omega[s as usize] = without.max(with);
    }
    omega
}

/// Exact dichromatic number with a witness coloring.
///
/// Among optimal colorings the witness has the lexicographically smallest
/// class sequence, classes ordered by their minimum vertex.
pub fn dichromatic_number(d: &Digraph) -> ColoringResult {
    let n = d.n();
    let acyclic = acyclic_table(d);
    let chi = chi_table(&acyclic);
    let mut assignment = vec![0usize; n];
    let mut s = full_mask(n);
    let mut color = 0;
    while s != 0 {
        color += 1;
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let target = chi[s as usize] - 1;
        let mut best: Option<VertexSet> = None;
        let mut sub = rest;
        loop {
            let t = sub | low;
            if acyclic[t as usize] && chi[(s ^ t) as usize] == target {
                let maximal = mask_iter(s & !t).all(|v| !acyclic[(t | bit(v)) as usize]);
                let cand = VertexSet::from_bits(t);
                if maximal && best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        let class = best.expect("an optimal maximal class always exists").bits();
        for v in mask_iter(class) {
            assignment[v] = color;
        }
        s &= !class;
    }
    ColoringResult {
        chi: color,
        assignment,
    }
}

/// Exact clique number of `S(D)` by branch and bound with a greedy coloring
/// bound.
pub fn clique_number(d: &Digraph) -> CliqueWitness {
    let adj: Vec<u64> = (0..d.n()).map(|v| d.sym_mask(v)).collect();
    let mut search = CliqueSearch {
        adj: &adj,
        best: 0,
        best_size: 0,
    };
    search.expand(0, 0, full_mask(d.n()));
    CliqueWitness {
        omega: search.best_size,
        vertices: VertexSet::from_bits(search.best),
    }
}

struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: u64,
    best_size: usize,
}

impl CliqueSearch<'_> {
    /// Greedy sequential coloring of `cand`; returns vertices with their
    /// color bound, in nondecreasing color order.
    fn color_order(&self, cand: u64) -> Vec<(usize, usize)> {
        let mut order = Vec::with_capacity(cand.count_ones() as usize);
        let mut uncolored = cand;
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut avail = uncolored;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !bit(v) & !self.adj[v];
                uncolored &= !bit(v);
                order.push((v, color));
            }
        }
        order
    }

    fn expand(&mut self, current: u64, size: usize, mut cand: u64) {
        if cand == 0 {
            if size > self.best_size {
                self.best_size = size;
                self.best = current;
            }
            return;
        }
        let order = self.color_order(cand);
        for &(v, bound) in order.iter().rev() {
            if size + bound <= self.best_size {
                return;
            }
            self.expand(current | bit(v), size + 1, cand & self.adj[v]);
            cand &= !bit(v);
        }
        if size > self.best_size {
            self.best_size = size;
            self.best = current;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{named_instance, Named};

    #[test]
    fn proper_coloring_examples() {
        let c3 = named_instance(Named::C3, None).unwrap();
        assert_eq!(is_proper_coloring(&c3, &[1, 1, 2]), Ok(true));
        assert_eq!(is_proper_coloring(&c3, &[1, 1, 1]), Ok(false));
        let k2 = named_instance(Named::SymComplete, Some(2)).unwrap();
        assert_eq!(is_proper_coloring(&k2, &[1, 1]), Ok(false));
        assert_eq!(
            is_proper_coloring(&c3, &[1, 2]),
            Err(Error::PartialAssignment(2))
        );
    }

    #[test]
    fn dichromatic_examples() {
        let c3 = named_instance(Named::C3, None).unwrap();
        let r = dichromatic_number(&c3);
        assert_eq!(r.chi, 2);
        assert_eq!(r.assignment, vec![1, 1, 2]);
        assert_eq!(is_proper_coloring(&c3, &r.assignment), Ok(true));

        let tt = Digraph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(dichromatic_number(&tt).chi, 1);
        for k in 0..=6 {
            let kn = named_instance(Named::SymComplete, Some(k)).unwrap();
            assert_eq!(dichromatic_number(&kn).chi, k);
        }
        let c5 = named_instance(Named::SymCycle, Some(5)).unwrap();
        assert_eq!(dichromatic_number(&c5).chi, 3);
    }

    #[test]
    fn empty_digraph() {
        let e = Digraph::arcless(0);
        assert_eq!(dichromatic_number(&e).chi, 0);
        assert_eq!(clique_number(&e).omega, 0);
        assert_eq!(clique_number(&Digraph::arcless(1)).omega, 1);
    }

    #[test]
    fn witness_classes_are_maximal() {
        let c5 = named_instance(Named::Dicycle, Some(5)).unwrap();
        let r = dichromatic_number(&c5);
        assert_eq!(r.chi, 2);
        // lexicographically smallest maximal acyclic class containing 0
        assert_eq!(r.classes()[0].to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn clique_examples() {
        let c3 = named_instance(Named::C3, None).unwrap();
        assert_eq!(clique_number(&c3).omega, 1);
        let k4 = named_instance(Named::SymComplete, Some(4)).unwrap();
        let w = clique_number(&k4);
        assert_eq!(w.omega, 4);
        assert!(w.validate(&k4));
        let cc4 = named_instance(Named::C4Complement, None).unwrap();
        let w = clique_number(&cc4);
        assert_eq!(w.omega, 2);
        assert!(w.validate(&cc4));
    }

    #[test]
    fn tables_agree_with_direct_solvers() {
        let d = named_instance(Named::SymCycle, Some(7)).unwrap();
        let chi = chi_table(&acyclic_table(&d));
        let omega = omega_table(&d);
        let full = full_mask(7) as usize;
        assert_eq!(chi[full] as usize, dichromatic_number(&d).chi);
        assert_eq!(omega[full] as usize, clique_number(&d).omega);
        assert_eq!(omega[full], 2);
    }
}
