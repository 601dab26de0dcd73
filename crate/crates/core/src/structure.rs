//! Structure of F-free digraphs and an exact minimum path cover.

use std::fmt;

use crate::digraph::{bit, full_mask, mask_iter, ComponentPartition, Digraph};
use crate::error::{Error, Result};
use crate::patterns::forbidden_site;

/// Asymmetric arcs running from one component of `S(D)` to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossArcs {
    pub from: usize,
    pub to: usize,
    pub arcs: Vec<(usize, usize)>,
}

/// Shape of the component quotient: components are vertices, joined when
/// some arc runs between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    /// Complete multipartite; each group is a set of component indices with
    /// no arcs among them.
    Multipartite { groups: Vec<Vec<usize>> },
    /// `joined.0` and `joined.1` are joined while `apart` is joined to
    /// neither, so non-adjacency is not transitive.
    NotMultipartite {
        joined: (usize, usize),
        apart: usize,
    },
}

impl Quotient {
    pub fn is_multipartite(&self) -> bool {
        matches!(self, Quotient::Multipartite { .. })
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::Multipartite { groups } => {
                write!(f, "multipartite l={}", groups.len())
            }
            Quotient::NotMultipartite { joined, apart } => write!(
                f,
                "not-multipartite components {} and {} joined, {} apart",
                joined.0, joined.1, apart
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentStructure {
    pub components: ComponentPartition,
    pub quotient: Quotient,
    pub cross_arcs: Vec<CrossArcs>,
}

/// Verifies that any two components of `S(D)` joined by an asymmetric arc
/// are joined by an orientation of the complete bipartite graph between
/// them, and reports the component quotient.
pub fn check_f_free_structure(d: &Digraph) -> Result<ComponentStructure> {
    if let Some(site) = forbidden_site(d) {
        return Err(Error::NotFFree(site.to_string()));
    }
    let components = d.symmetric_components();
    let blocks = components.blocks();
    let k = blocks.len();
    let mut joined = vec![vec![false; k]; k];
    let mut cross_arcs = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            let (bi, bj) = (blocks[i].bits(), blocks[j].bits());
            let any = mask_iter(bi).any(|u| d.touch_mask(u) & bj != 0);
            if !any {
                continue;
            }
            for u in mask_iter(bi) {
                for v in mask_iter(bj) {
                    let count = d.has_arc(u, v) as u8 + d.has_arc(v, u) as u8;
                    if count != 1 {
                        return Err(Error::StructureViolation {
                            left: i,
                            right: j,
                            reason: format!("pair ({u},{v}) carries {count} arcs"),
                        });
                    }
                }
            }
            joined[i][j] = true;
            joined[j][i] = true;
            for (from, to) in [(i, j), (j, i)] {
                let arcs: Vec<(usize, usize)> = mask_iter(blocks[from].bits())
                    .flat_map(|u| mask_iter(d.out_mask(u) & blocks[to].bits()).map(move |v| (u, v)))
                    .collect();
                if !arcs.is_empty() {
                    cross_arcs.push(CrossArcs { from, to, arcs });
                }
            }
        }
    }
    cross_arcs.sort_by_key(|c| (c.from, c.to));
    Ok(ComponentStructure {
        components,
        quotient: quotient_shape(&joined),
        cross_arcs,
    })
}

fn quotient_shape(joined: &[Vec<bool>]) -> Quotient {
    let k = joined.len();
    for a in 0..k {
        for b in a + 1..k {
            if !joined[a][b] {
                continue;
            }
            if let Some(c) = (0..k).find(|&c| c != a && c != b && !joined[a][c] && !joined[b][c]) {
                return Quotient::NotMultipartite {
                    joined: (a, b),
                    apart: c,
                };
            }
        }
    }
    // non-adjacency is now an equivalence relation
    let mut group_of = vec![usize::MAX; k];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for c in 0..k {
        if group_of[c] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (c..k).filter(|&x| x == c || !joined[c][x]).collect();
        for &m in &members {
            group_of[m] = groups.len();
        }
        groups.push(members);
    }
    Quotient::Multipartite { groups }
}

/// Vertex-disjoint directed paths covering every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCoverResult {
    pub count: usize,
    pub paths: Vec<Vec<usize>>,
}

impl PathCoverResult {
    /// Disjoint, covering, and every consecutive pair is an arc.
    pub fn validate(&self, d: &Digraph) -> bool {
        let mut seen = 0u64;
        for path in &self.paths {
            if path.is_empty() {
                return false;
            }
            for &v in path {
                if v >= d.n() || seen & bit(v) != 0 {
                    return false;
                }
                seen |= bit(v);
            }
            if !path.windows(2).all(|w| d.has_arc(w[0], w[1])) {
                return false;
            }
        }
        self.count == self.paths.len() && seen == full_mask(d.n())
    }
}

/// Exact minimum path cover by DP over (covered set, open path end).
///
/// Needs `2^n * n` bytes; practical up to about 15 vertices. The reported
/// paths are the lexicographically smallest optimal list.
pub fn min_path_cover(d: &Digraph) -> PathCoverResult {
    let n = d.n();
    let full = full_mask(n);
    let size = 1usize << n;
    // fresh[mask]: paths still needed with nothing open
    // open[mask * n + v]: paths still needed while a path ends at v
    let mut fresh = vec![0u8; size];
    let mut open = vec![u8::MAX; size * n.max(1)];
    for mask in (0..size as u64).rev() {
        let m = mask as usize;
        fresh[m] = if mask == full {
            0
        } else {
            mask_iter(full & !mask)
                .map(|w| 1 + open[(m | bit(w) as usize) * n + w])
                .min()
                .unwrap()
        };
        for v in mask_iter(mask) {
            let extend = mask_iter(d.out_mask(v) & !mask)
                .map(|w| open[(m | bit(w) as usize) * n + w])
                .min()
                .unwrap_or(u8::MAX);
            open[m * n + v] = fresh[m].min(extend);
        }
    }

    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut mask = 0u64;
    let mut tail: Option<usize> = None;
    while mask != full || tail.is_some() {
        let m = mask as usize;
        match tail {
            None => {
                let w = mask_iter(full & !mask)
                    .find(|&w| 1 + open[(m | bit(w) as usize) * n + w] == fresh[m])
                    .unwrap();
                paths.push(vec![w]);
                mask |= bit(w);
                tail = Some(w);
            }
            Some(v) => {
                let here = open[m * n + v];
                if fresh[m] == here {
                    tail = None;
                    continue;
                }
                let w = mask_iter(d.out_mask(v) & !mask)
                    .find(|&w| open[(m | bit(w) as usize) * n + w] == here)
                    .unwrap();
                paths.last_mut().unwrap().push(w);
                mask |= bit(w);
                tail = Some(w);
            }
        }
    }
    PathCoverResult {
        count: fresh[0] as usize,
        paths,
    }
}
