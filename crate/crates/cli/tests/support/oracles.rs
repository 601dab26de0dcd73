//! Brute-force oracles for the acceptance run. They use only `has_arc` and
//! plain enumeration, never the solver or pattern code they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use perfect_digraph::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn members(n: usize, mask: u64) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn digon(d: &Digraph, u: usize, v: usize) -> bool {
    d.has_arc(u, v) && d.has_arc(v, u)
}

/// Peels vertices with no in-arc from the remaining set.
fn acyclic(d: &Digraph, vs: &[usize]) -> bool {
    let mut rest = vs.to_vec();
    while let Some(i) = rest
        .iter()
        .position(|&v| rest.iter().all(|&u| !d.has_arc(u, v)))
    {
        rest.remove(i);
    }
    rest.is_empty()
}

/// Dichromatic number of the subdigraph on `vs` by trying all `k^|vs|` maps.
pub fn brute_chi_on(d: &Digraph, vs: &[usize]) -> usize {
    let n = vs.len();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let mut classes = vec![Vec::new(); k];
            for &v in vs {
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

pub fn brute_chi(d: &Digraph) -> usize {
    brute_chi_on(d, &(0..d.n()).collect::<Vec<_>>())
}

pub fn brute_omega_on(d: &Digraph, vs: &[usize]) -> usize {
    (0..1u64 << vs.len())
        .filter(|&m| {
            let sub: Vec<usize> = members(vs.len(), m).into_iter().map(|i| vs[i]).collect();
            sub.iter()
                .all(|&u| sub.iter().all(|&v| u == v || digon(d, u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_omega(d: &Digraph) -> usize {
    brute_omega_on(d, &(0..d.n()).collect::<Vec<_>>())
}

/// Perfection straight from the definition.
pub fn brute_perfect(d: &Digraph) -> bool {
    let n = d.n();
    (1..1u64 << n).all(|m| {
        let vs = members(n, m);
        brute_chi_on(d, &vs) == brute_omega_on(d, &vs)
    })
}

/// Some vertex set of size >= 3 induces exactly a directed cycle.
pub fn brute_has_induced_cycle(d: &Digraph) -> bool {
    let n = d.n();
    (0..1u64 << n).any(|m| {
        if m.count_ones() < 3 {
            return false;
        }
        let vs = members(n, m);
        let outs = |v: usize| vs.iter().filter(|&&w| d.has_arc(v, w)).count();
        let ins = |v: usize| vs.iter().filter(|&&w| d.has_arc(w, v)).count();
        if !vs.iter().all(|&v| outs(v) == 1 && ins(v) == 1) {
            return false;
        }
        // one cycle through everything, not several
        let mut len = 1;
        let mut cur = *vs.iter().find(|&&w| d.has_arc(vs[0], w)).unwrap();
        while cur != vs[0] {
            cur = *vs.iter().find(|&&w| d.has_arc(cur, w)).unwrap();
            len += 1;
        }
        len == vs.len()
    })
}

fn permutations3(t: [usize; 3]) -> [[usize; 3]; 6] {
    let [a, b, c] = t;
    [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ]
}

/// Exact arc set of the triple, as ordered pairs.
fn arcs_within(d: &Digraph, vs: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut s = BTreeSet::new();
    for &u in vs {
        for &v in vs {
            if u != v && d.has_arc(u, v) {
                s.insert((u, v));
            }
        }
    }
    s
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Sig {
    pub p4: BTreeSet<Vec<usize>>,
    pub c3: BTreeSet<Vec<usize>>,
    pub p3: BTreeSet<(Vec<usize>, usize)>,
    pub p3_aug: BTreeSet<(Vec<usize>, usize)>,
}

/// Pattern sites by matching each ordering of each small set against the
/// literal arc sets of the patterns.
pub fn brute_signature(d: &Digraph) -> Sig {
    let n = d.n();
    let mut sig = Sig::default();
    for m in 0..1u64 << n {
        let vs = members(n, m);
        if vs.len() == 3 {
            let have = arcs_within(d, &vs);
            for [a, b, c] in permutations3([vs[0], vs[1], vs[2]]) {
                let is =
                    |want: &[(usize, usize)]| have == want.iter().copied().collect::<BTreeSet<_>>();
                if is(&[(a, b), (b, c), (c, a)]) {
                    sig.c3.insert(vs.clone());
                }
                if is(&[(a, b), (b, c)]) {
                    sig.p3.insert((vs.clone(), b));
                }
                if is(&[(a, b), (b, a), (b, c)]) || is(&[(a, b), (b, c), (c, b)]) {
                    sig.p3_aug.insert((vs.clone(), b));
                }
            }
        }
        if vs.len() == 4 && sym_p4_on(d, &vs) {
            sig.p4.insert(vs);
        }
    }
    sig
}

fn sym_p4_on(d: &Digraph, vs: &[usize]) -> bool {
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for x in 0..4 {
                    let idx = [a, b, c, x];
                    if (0..4).any(|i| (i + 1..4).any(|j| idx[i] == idx[j])) {
                        continue;
                    }
                    let p = idx.map(|i| vs[i]);
                    let e = |i: usize, j: usize| digon(d, p[i], p[j]);
                    if e(0, 1) && e(1, 2) && e(2, 3) && !e(0, 2) && !e(1, 3) && !e(0, 3) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

pub fn brute_has_sym_p4(d: &Digraph) -> bool {
    let n = d.n();
    (0..1u64 << n).any(|m| m.count_ones() == 4 && sym_p4_on(d, &members(n, m)))
}

/// No induced C3, P3 or digon-augmented P3, and no induced P4 in the
/// symmetric part.
pub fn brute_f_free(d: &Digraph) -> bool {
    let s = brute_signature(d);
    s.c3.is_empty() && s.p3.is_empty() && s.p3_aug.is_empty() && s.p4.is_empty()
}

/// Maximum matching between tails and heads, by DP over tail index and
/// used heads.
pub fn brute_max_matching(d: &Digraph) -> usize {
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
    let mut memo = vec![vec![usize::MAX; 1 << d.n()]; d.n() + 1];
    go(d, 0, 0, &mut memo)
}

/// Random DAG: arcs forward along a shuffled order with probability `p`.
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

/// Uniform random symmetric digraph on `n` vertices.
pub fn random_symmetric(n: usize, rng: &mut ChaCha8Rng) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(0.5) {
                arcs.extend([(u, v), (v, u)]);
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}
