//! Brute-force oracles shared by the integration tests. None of these call
//! into the solver paths they are used to check.

#![allow(dead_code)]

use perfect_digraph::Digraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Arbitrary loopless digraph on `lo..=hi` vertices.
pub fn digraph(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    (lo..=hi, any::<u64>()).prop_map(|(n, code)| {
        let pairs = Digraph::pair_count(n);
        let mask = if pairs >= 64 {
            u64::MAX
        } else {
            (1u64 << pairs) - 1
        };
        Digraph::from_code(n, code & mask)
    })
}

pub fn symmetric(lo: usize, hi: usize) -> impl Strategy<Value = Digraph> {
    digraph(lo, hi).prop_map(|d| {
        let arcs: Vec<_> = d.arcs().flat_map(|(u, v)| [(u, v), (v, u)]).collect();
        Digraph::new(d.n(), arcs).unwrap()
    })
}

fn members(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Is the subdigraph induced on `vs` acyclic? Tries every ordering prefix
/// greedily: an acyclic digraph has a vertex without in-arcs from the rest.
fn acyclic(d: &Digraph, vs: &[usize]) -> bool {
    let mut rest: Vec<usize> = vs.to_vec();
    while !rest.is_empty() {
        let pos = rest
            .iter()
            .position(|&v| rest.iter().all(|&u| !d.has_arc(u, v)));
        match pos {
            Some(i) => {
                rest.remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Minimum `k` such that some map `V -> 0..k` has acyclic classes, by
/// enumerating all `k^n` maps.
pub fn brute_chi(d: &Digraph) -> usize {
    let n = d.n();
    for k in 0..=n {
        if k == 0 {
            if n == 0 {
                return 0;
            }
            continue;
        }
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut classes = vec![Vec::new(); k];
            for v in 0..n {
                classes[(c % k as u64) as usize].push(v);
                c /= k as u64;
            }
            if classes.iter().all(|cl| acyclic(d, cl)) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Largest vertex set pairwise joined by digons.
pub fn brute_omega(d: &Digraph) -> usize {
    let n = d.n();
    (0..1u64 << n)
        .filter(|&m| {
            let vs = members(n, m);
            vs.iter().all(|&u| {
                vs.iter()
                    .all(|&v| u == v || (d.has_arc(u, v) && d.has_arc(v, u)))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Undirected chromatic number of a symmetric digraph by `k^n` enumeration.
pub fn brute_chromatic(g: &Digraph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = (k as u64).pow(n as u32);
        let ok = (0..total).any(|code| {
            let mut c = code;
            let col: Vec<u64> = (0..n)
                .map(|_| {
                    let x = c % k as u64;
                    c /= k as u64;
                    x
                })
                .collect();
            g.arcs().all(|(u, v)| col[u] != col[v])
        });
        if ok {
            return k;
        }
    }
    unreachable!()
}

/// Smallest vertex set inducing exactly a directed cycle of length >= 3,
/// ordered by (length, sequence from its minimum vertex).
pub fn brute_induced_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut best: Option<Vec<usize>> = None;
    for m in 0..1u64 << n {
        if m.count_ones() < 3 {
            continue;
        }
        let vs = members(n, m);
        let inside = |v: usize| vs.iter().filter(|&&w| d.has_arc(v, w)).count();
        let into = |v: usize| vs.iter().filter(|&&w| d.has_arc(w, v)).count();
        if !vs.iter().all(|&v| inside(v) == 1 && into(v) == 1) {
            continue;
        }
        let mut seq = vec![vs[0]];
        loop {
            let last = *seq.last().unwrap();
            let next = *vs.iter().find(|&&w| d.has_arc(last, w)).unwrap();
            if next == vs[0] {
                break;
            }
            seq.push(next);
        }
        if seq.len() != vs.len() {
            continue;
        }
        let better = match &best {
            None => true,
            Some(b) => (seq.len(), &seq) < (b.len(), b),
        };
        if better {
            best = Some(seq);
        }
    }
    best
}

/// Does some 4-set induce a P4 in the symmetric part? Checks all 24
/// orderings of each 4-set against the path shape.
pub fn brute_has_sym_p4(d: &Digraph) -> bool {
    let n = d.n();
    let e = |u: usize, v: usize| d.has_arc(u, v) && d.has_arc(v, u);
    for m in 0..1u64 << n {
        if m.count_ones() != 4 {
            continue;
        }
        let vs = members(n, m);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for x in 0..4 {
                        let idx = [a, b, c, x];
                        if (0..4).any(|i| (i + 1..4).any(|j| idx[i] == idx[j])) {
                            continue;
                        }
                        let p = idx.map(|i| vs[i]);
                        if e(p[0], p[1])
                            && e(p[1], p[2])
                            && e(p[2], p[3])
                            && !e(p[0], p[2])
                            && !e(p[1], p[3])
                            && !e(p[0], p[3])
                        {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// Maximum matching of the bipartite split (tails on the left, heads on the
/// right) by exhaustive DP over left index and used right vertices.
pub fn brute_max_matching(d: &Digraph) -> usize {
    let n = d.n();
    let mut memo = vec![vec![usize::MAX; 1 << n]; n + 1];
    fn go(d: &Digraph, i: usize, used: usize, memo: &mut Vec<Vec<usize>>) -> usize {
        if i == d.n() {
            return 0;
        }
        if memo[i][used] != usize::MAX {
            return memo[i][used];
        }
        let mut best = go(d, i + 1, used, memo);
        for v in 0..d.n() {
            if d.has_arc(i, v) && used >> v & 1 == 0 {
                best = best.max(1 + go(d, i + 1, used | 1 << v, memo));
            }
        }
        memo[i][used] = best;
        best
    }
    go(d, 0, 0, &mut memo)
}

/// Random DAG: arcs forward in a shuffled order with probability `p`.
pub fn random_dag(n: usize, p: f64, seed: u64) -> Digraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}
