//! Seeded digraph generation, named instances and P4C-isomorphic pairs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::patterns::{are_p4c_isomorphic, is_f_free, p4c_signature};

/// The splitmix64 finalizer.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed for item `index` of a run seeded with `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

fn unit(x: u64) -> f64 {
    (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Parameters of the independent-pairs random digraph model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    /// Probability of a digon on an unordered pair.
    pub p_sym: f64,
    /// Probability of a single arc (fair-coin direction) on an unordered pair.
    pub p_asym: f64,
    pub seed: u64,
}

impl GenSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = |p: f64| p.is_finite() && p >= 0.0;
        if !ok(self.p_sym) || !ok(self.p_asym) || self.p_sym + self.p_asym > 1.0 {
            return Err(Error::InvalidProbabilities {
                psym: self.p_sym,
                pasym: self.p_asym,
            });
        }
        if self.n > crate::digraph::MAX_VERTICES {
            return Err(Error::TooManyVertices(self.n));
        }
        Ok(())
    }
}

/// Draws a digraph. Pair `(u, v)`, `u < v`, with canonical index `i`
/// depends only on `seed` and `i`.
pub fn random_digraph(spec: &GenSpec) -> Result<Digraph> {
    spec.validate()?;
    let mut arcs = Vec::new();
    let mut index = 0u64;
    for u in 0..spec.n {
        for v in u + 1..spec.n {
            let h = splitmix64(spec.seed ^ splitmix64(index));
            let r = unit(h);
            if r < spec.p_sym {
                arcs.push((u, v));
                arcs.push((v, u));
            } else if r < spec.p_sym + spec.p_asym {
                if splitmix64(h) & 1 == 0 {
                    arcs.push((u, v));
                } else {
                    arcs.push((v, u));
                }
            }
            index += 1;
        }
    }
    Digraph::new(spec.n, arcs)
}

/// Named instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Named {
    SymP4,
    C3,
    P3,
    P3Plus,
    P3Minus,
    Dicycle,
    SymCycle,
    SymComplete,
    SymPath,
    C4Complement,
    Arcless,
}

impl Named {
    pub const ALL: [Named; 11] = [
        Named::SymP4,
        Named::C3,
        Named::P3,
        Named::P3Plus,
        Named::P3Minus,
        Named::Dicycle,
        Named::SymCycle,
        Named::SymComplete,
        Named::SymPath,
        Named::C4Complement,
        Named::Arcless,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::SymP4 => "sym_p4",
            Named::C3 => "c3",
            Named::P3 => "p3",
            Named::P3Plus => "p3_plus",
            Named::P3Minus => "p3_minus",
            Named::Dicycle => "dicycle",
            Named::SymCycle => "sym_cycle",
            Named::SymComplete => "sym_complete",
            Named::SymPath => "sym_path",
            Named::C4Complement => "c4_complement",
            Named::Arcless => "arcless",
        }
    }

    fn fixed_size(self) -> Option<usize> {
        match self {
            Named::SymP4 | Named::C4Complement => Some(4),
            Named::C3 | Named::P3 | Named::P3Plus | Named::P3Minus => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Named {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Named::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

fn sym(arcs: &mut Vec<(usize, usize)>, u: usize, v: usize) {
    arcs.push((u, v));
    arcs.push((v, u));
}

/// Canonical labeled instance. Fixed-size patterns accept `k` only if it
/// equals their size; the families need `k` (cycles need `k >= 3`).
pub fn named_instance(name: Named, k: Option<usize>) -> Result<Digraph> {
    let bad = |reason: &str| Error::BadSize {
        name: name.name().to_string(),
        reason: reason.to_string(),
    };
    let n = match (name.fixed_size(), k) {
        (Some(size), None) => size,
        (Some(size), Some(k)) if k == size => size,
        (Some(size), Some(_)) => return Err(bad(&format!("size is fixed at {size}"))),
        (None, None) => return Err(bad("a size is required")),
        (None, Some(k)) => k,
    };
    if matches!(name, Named::Dicycle | Named::SymCycle) && n < 3 {
        return Err(bad("cycles need at least 3 vertices"));
    }
    if n > crate::digraph::MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let mut arcs = Vec::new();
    match name {
        Named::SymP4 => {
            sym(&mut arcs, 0, 1);
            sym(&mut arcs, 1, 2);
            sym(&mut arcs, 2, 3);
        }
        Named::C3 => arcs.extend([(0, 1), (1, 2), (2, 0)]),
        Named::P3 => arcs.extend([(0, 1), (1, 2)]),
        Named::P3Plus => arcs.extend([(0, 1), (1, 0), (1, 2)]),
        Named::P3Minus => arcs.extend([(0, 1), (1, 2), (2, 1)]),
        Named::Dicycle => arcs.extend((0..n).map(|i| (i, (i + 1) % n))),
        Named::SymCycle => (0..n).for_each(|i| sym(&mut arcs, i, (i + 1) % n)),
        Named::SymComplete => {
            for u in 0..n {
                for v in u + 1..n {
                    sym(&mut arcs, u, v);
                }
            }
        }
        Named::SymPath => (1..n).for_each(|i| sym(&mut arcs, i - 1, i)),
        Named::C4Complement => return Ok(named_instance(Named::Dicycle, Some(4))?.complement()),
        Named::Arcless => {}
    }
    Digraph::new(n, arcs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    Reversal,
    MutationSearch,
}

/// A P4C-isomorphic pair built from `d`.
///
/// `Reversal` pairs `d` with its converse. `MutationSearch` proposes up to
/// `budget` uniform single-arc toggles and keeps those that leave the
/// signature unchanged; it yields nothing when the result equals `d`.
pub fn p4c_pair(
    d: &Digraph,
    mode: PairMode,
    budget: usize,
    seed: u64,
) -> Option<(Digraph, Digraph)> {
    let other = match mode {
        PairMode::Reversal => d.reverse(),
        PairMode::MutationSearch => {
            let n = d.n();
            if n < 2 {
                return None;
            }
            let target = p4c_signature(d);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut current = d.clone();
            for _ in 0..budget {
                let k = rng.gen_range(0..n * (n - 1));
                let u = k / (n - 1);
                let mut v = k % (n - 1);
                if v >= u {
                    v += 1;
                }
                let candidate = current.with_arc_toggled(u, v);
                if p4c_signature(&candidate) == target {
                    current = candidate;
                }
            }
            if current == *d {
                return None;
            }
            current
        }
    };
    are_p4c_isomorphic(d, &other)
        .ok()
        .filter(|&iso| iso)
        .map(|_| (d.clone(), other))
}

/// Rejection-samples an F-free digraph on `n` vertices. Each attempt draws
/// its own densities from the attempt seed.
pub fn random_f_free(n: usize, seed: u64, max_attempts: usize) -> Option<Digraph> {
    (0..max_attempts as u64).find_map(|i| {
        let s = derive_seed(seed, i);
        let p_sym = unit(splitmix64(s ^ 0x0053_594d));
        let p_asym = unit(splitmix64(s ^ 0x4153_594d)) * (1.0 - p_sym);
        let spec = GenSpec {
            n,
            p_sym,
            p_asym,
            seed: s,
        };
        random_digraph(&spec).ok().filter(is_f_free)
    })
}

/// Rejection-samples with fixed densities; attempt `i` uses seed
/// `derive_seed(spec.seed, i)`.
pub fn random_f_free_with(spec: &GenSpec, max_attempts: usize) -> Result<Option<Digraph>> {
    spec.validate()?;
    for i in 0..max_attempts as u64 {
        let d = random_digraph(&GenSpec {
            seed: derive_seed(spec.seed, i),
            ..*spec
        })?;
        if is_f_free(&d) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
