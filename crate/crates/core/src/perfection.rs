//! Perfection checkers.
//!
//! [`is_perfect_bruteforce`] compares chi and omega on every induced
//! subdigraph. [`is_perfect_structural`] instead asks for a perfect
//! symmetric part and no induced directed cycle of length at least three.

use std::fmt;

use crate::digraph::{full_mask, Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::patterns::{find_induced_directed_cycle, ChordlessCycles, InducedCycleWitness};
use crate::solvers::{acyclic_table, chi_table, omega_table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Definitional,
    Structural,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    FailingSubdigraph {
        vertices: VertexSet,
        chi: usize,
        omega: usize,
    },
    /// Induced odd cycle of length >= 5 in the graph, in cycle order.
    OddHole(Vec<usize>),
    /// Odd hole of the complement, in cycle order of the complement.
    OddAntihole(Vec<usize>),
    InducedDirectedCycle(InducedCycleWitness),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |vs: &[usize]| {
            vs.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Witness::FailingSubdigraph {
                vertices,
                chi,
                omega,
            } => write!(
                f,
                "failing-subdigraph {} chi={chi} omega={omega}",
                list(&vertices.to_vec())
            ),
            Witness::OddHole(c) => write!(f, "odd-hole {}", list(c)),
            Witness::OddAntihole(c) => write!(f, "odd-antihole {}", list(c)),
            Witness::InducedDirectedCycle(w) => {
                write!(f, "induced-directed-cycle {}", list(w.vertices()))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectionReport {
    pub verdict: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl PerfectionReport {
    fn perfect(method: Method) -> Self {
        PerfectionReport {
            verdict: true,
            method,
            witness: None,
        }
    }

    fn imperfect(method: Method, witness: Witness) -> Self {
        PerfectionReport {
            verdict: false,
            method,
            witness: Some(witness),
        }
    }
}

fn odd_hole(adj: &[u64]) -> Option<Vec<usize>> {
    ChordlessCycles::new(adj, adj, false).find(5, |k| k % 2 == 1)
}

/// Perfect-graph test for a symmetric digraph via odd holes and antiholes.
pub fn is_perfect_undirected(g: &Digraph) -> Result<PerfectionReport> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let adj: Vec<u64> = (0..g.n()).map(|v| g.out_mask(v)).collect();
    if let Some(hole) = odd_hole(&adj) {
        return Ok(PerfectionReport::imperfect(
            Method::Structural,
            Witness::OddHole(hole),
        ));
    }
    let comp = g.symmetric_complement()?;
    let co_adj: Vec<u64> = (0..g.n()).map(|v| comp.out_mask(v)).collect();
    if let Some(hole) = odd_hole(&co_adj) {
        return Ok(PerfectionReport::imperfect(
            Method::Structural,
            Witness::OddAntihole(hole),
        ));
    }
    Ok(PerfectionReport::perfect(Method::Structural))
}

/// Checks `chi(H) = omega(H)` on all `2^n` induced subdigraphs. Practical
/// up to about 12 vertices.
///
/// Subsets are scanned by size, then by bit pattern, so the witness is a
/// smallest failing subset.
pub fn is_perfect_bruteforce(d: &Digraph) -> PerfectionReport {
    let n = d.n();
    let chi = chi_table(&acyclic_table(d));
    let omega = omega_table(d);
    let mut masks: Vec<u64> = (0..=full_mask(n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), VertexSet::from_bits(*m)));
    for mask in masks {
        let (c, w) = (chi[mask as usize], omega[mask as usize]);
        if c != w {
            return PerfectionReport::imperfect(
                Method::Definitional,
                Witness::FailingSubdigraph {
                    vertices: VertexSet::from_bits(mask),
                    chi: c as usize,
                    omega: w as usize,
                },
            );
        }
    }
    PerfectionReport::perfect(Method::Definitional)
}

/// Structural perfection test. An induced directed cycle is reported in
/// preference to a hole or antihole of `S(D)`.
pub fn is_perfect_structural(d: &Digraph) -> PerfectionReport {
    if let Some(cycle) = find_induced_directed_cycle(d, 3) {
        return PerfectionReport::imperfect(
            Method::Structural,
            Witness::InducedDirectedCycle(cycle),
        );
    }
    is_perfect_undirected(&d.symmetric_part()).expect("symmetric part is symmetric")
}

/// Re-checks a witness against `d`.
pub fn validate_witness(d: &Digraph, witness: &Witness) -> bool {
    let is_chordless_cycle = |g: &Digraph, c: &[usize]| {
        let k = c.len();
        let set: VertexSet = c.iter().copied().collect();
        k >= 5
            && k % 2 == 1
            && set.len() == k
            && c.iter().all(|&v| v < g.n())
            && (0..k).all(|i| {
                let v = c[i];
                let expected = VertexSet::from_iter([c[(i + 1) % k], c[(i + k - 1) % k]]);
                g.sym_mask(v) & set.bits() == expected.bits()
            })
    };
    match witness {
        Witness::FailingSubdigraph {
            vertices,
            chi,
            omega,
        } => {
            let Ok(h) = d.induced_subdigraph(*vertices) else {
                return false;
            };
            let c = crate::solvers::dichromatic_number(&h).chi;
            let w = crate::solvers::clique_number(&h).omega;
            c == *chi && w == *omega && c > w
        }
        Witness::OddHole(c) => is_chordless_cycle(&d.symmetric_part(), c),
        Witness::OddAntihole(c) => d
            .symmetric_part()
            .symmetric_complement()
            .map(|comp| is_chordless_cycle(&comp, c))
            .unwrap_or(false),
        Witness::InducedDirectedCycle(w) => w.validate(d),
    }
}
