//! Seeded verification suites. Each trial derives its seed from the master
//! seed and its index, so reports do not depend on scheduling.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::cotree::build_cotree;
use crate::digraph::Digraph;
use crate::gen::{derive_seed, p4c_pair, random_digraph, random_f_free, GenSpec, PairMode};
use crate::patterns::{find_induced_directed_cycle, is_f_free};
use crate::perfection::{is_perfect_bruteforce, is_perfect_structural};
use crate::solvers::{clique_number, dichromatic_number, is_proper_coloring};
use crate::structure::check_f_free_structure;

/// `(p_sym, p_asym)` settings used by the random sweeps.
pub const DENSITIES: [(f64, f64); 3] = [(0.2, 0.2), (0.5, 0.25), (0.1, 0.6)];

/// Toggle proposals per base digraph in the pair suites.
pub const MUTATION_BUDGET: usize = 100;

/// Rejection-sampling attempts per requested F-free digraph.
pub const F_FREE_ATTEMPTS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

/// Verification suites. The command-line names are `theorem1`,
/// `semistrong`, `prop2`, `structure3` and `solvers`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Structural and definitional perfection agree.
    Equivalence,
    /// P4C-isomorphic pairs share their perfection verdict.
    SemiStrong,
    /// P4C-isomorphic pairs agree on having an induced directed cycle.
    CycleTransfer,
    /// F-free digraphs have the component structure and a cograph S(D).
    FFreeStructure,
    Solvers,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Equivalence => "theorem1",
            Suite::SemiStrong => "semistrong",
            Suite::CycleTransfer => "prop2",
            Suite::FFreeStructure => "structure3",
            Suite::Solvers => "solvers",
        }
    }

    /// Largest supported `nmax`.
    pub fn max_n(self) -> usize {
        match self {
            Suite::Solvers => 8,
            _ => 10,
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            Suite::Equivalence,
            Suite::SemiStrong,
            Suite::CycleTransfer,
            Suite::FFreeStructure,
            Suite::Solvers,
        ]
        .into_iter()
        .find(|x| x.name() == s)
        .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub nmax: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Number of checked instances (digraphs or pairs).
    pub trials: usize,
    /// In trial order.
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Outcome {
    checked: usize,
    failures: Vec<Failure>,
}

impl Outcome {
    fn check(&mut self, ok: bool, d: &Digraph, expected: impl FnOnce() -> (String, String)) {
        self.checked += 1;
        if !ok {
            let (expected, actual) = expected();
            self.failures.push(Failure {
                input: d.encoding(),
                expected,
                actual,
            });
        }
    }
}

/// Runs `trial` for every index and merges outcomes in index order.
fn sweep<F>(count: u64, exec: Execution, trial: F) -> Outcome
where
    F: Fn(u64) -> Outcome + Sync + Send,
{
    let parts: Vec<Outcome> = match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(&trial).collect()
        }
        _ => (0..count).map(&trial).collect(),
    };
    parts.into_iter().fold(Outcome::default(), |mut acc, o| {
        acc.checked += o.checked;
        acc.failures.extend(o.failures);
        acc
    })
}

fn random_instance(config: &SuiteConfig, n: usize, setting: usize, t: u64) -> Digraph {
    let (p_sym, p_asym) = DENSITIES[setting];
    let seed = derive_seed(derive_seed(config.seed, (n * 16 + setting) as u64), t);
    random_digraph(&GenSpec {
        n,
        p_sym,
        p_asym,
        seed,
    })
    .expect("fixed densities are valid")
}

pub fn run_suite(suite: Suite, config: &SuiteConfig, exec: Execution) -> SuiteReport {
    let start = Instant::now();
    let outcome = match suite {
        Suite::Equivalence => equivalence(config, exec),
        Suite::SemiStrong => pair_suite(config, exec, |d, e| {
            let (a, b) = (
                is_perfect_structural(d).verdict,
                is_perfect_structural(e).verdict,
            );
            (a == b, format!("perfect={a}"), format!("perfect={b}"))
        }),
        Suite::CycleTransfer => pair_suite(config, exec, |d, e| {
            let a = find_induced_directed_cycle(d, 3).is_some();
            let b = find_induced_directed_cycle(e, 3).is_some();
            (
                a == b,
                format!("induced_cycle={a}"),
                format!("induced_cycle={b}"),
            )
        }),
        Suite::FFreeStructure => f_free_structure(config, exec),
        Suite::Solvers => solvers(config, exec),
    };
    SuiteReport {
        suite,
        trials: outcome.checked,
        failures: outcome.failures,
        elapsed: start.elapsed(),
    }
}

fn equivalence_check(d: &Digraph) -> Outcome {
    let mut o = Outcome::default();
    let brute = is_perfect_bruteforce(d).verdict;
    let structural = is_perfect_structural(d).verdict;
    o.check(brute == structural, d, || {
        (
            format!("perfect={brute}"),
            format!("structural={structural}"),
        )
    });
    o
}

/// Exhaustive on `min(nmax, 4)` vertices, then `trials` random digraphs per
/// density setting for each `n` in `5..=nmax`.
fn equivalence(config: &SuiteConfig, exec: Execution) -> Outcome {
    let n0 = config.nmax.min(4);
    let mut total = sweep(1 << Digraph::pair_count(n0), exec, |code| {
        equivalence_check(&Digraph::from_code(n0, code))
    });
    for n in 5..=config.nmax {
        for setting in 0..DENSITIES.len() {
            let o = sweep(config.trials as u64, exec, |t| {
                equivalence_check(&random_instance(config, n, setting, t))
            });
            total.checked += o.checked;
            total.failures.extend(o.failures);
        }
    }
    total
}

/// Base digraph for pair trial `t`: `n` cycles through `3..=nmax`.
fn pair_base(config: &SuiteConfig, t: u64) -> Digraph {
    let lo = 3.min(config.nmax);
    let span = (config.nmax - lo + 1) as u64;
    let n = lo + (t % span) as usize;
    let setting = ((t / span) % DENSITIES.len() as u64) as usize;
    random_instance(config, n, setting, t)
}

fn pair_suite<F>(config: &SuiteConfig, exec: Execution, compare: F) -> Outcome
where
    F: Fn(&Digraph, &Digraph) -> (bool, String, String) + Sync + Send,
{
    sweep(config.trials as u64, exec, |t| {
        let base = pair_base(config, t);
        let mut o = Outcome::default();
        let mutation_seed = derive_seed(config.seed ^ 0x4d55_5441, t);
        let pairs = [
            p4c_pair(&base, PairMode::Reversal, 0, 0),
            p4c_pair(
                &base,
                PairMode::MutationSearch,
                MUTATION_BUDGET,
                mutation_seed,
            ),
        ];
        for (d, e) in pairs.into_iter().flatten() {
            let (ok, left, right) = compare(&d, &e);
            o.checked += 1;
            if !ok {
                o.failures.push(Failure {
                    input: format!("{} | {}", d.encoding(), e.encoding()),
                    expected: left,
                    actual: right,
                });
            }
        }
        o
    })
}

fn f_free_check(d: &Digraph) -> Outcome {
    let mut o = Outcome::default();
    let structure = check_f_free_structure(d);
    o.check(structure.is_ok(), d, || {
        (
            "structure ok".into(),
            format!("{}", structure.as_ref().unwrap_err()),
        )
    });
    let cograph = build_cotree(&d.symmetric_part()).is_ok();
    o.check(cograph, d, || {
        ("S(D) cograph".into(), "induced P4 in S(D)".into())
    });
    let perfect = is_perfect_structural(d).verdict;
    o.check(perfect, d, || ("perfect".into(), "not perfect".into()));
    o.checked = 1;
    o
}

/// Every F-free digraph on up to `min(nmax, 4)` vertices, then `trials`
/// rejection-sampled F-free digraphs for each `n` in `5..=nmax`.
fn f_free_structure(config: &SuiteConfig, exec: Execution) -> Outcome {
    let mut total = Outcome::default();
    for n in 0..=config.nmax.min(4) {
        let o = sweep(1 << Digraph::pair_count(n), exec, |code| {
            let d = Digraph::from_code(n, code);
            if is_f_free(&d) {
                f_free_check(&d)
            } else {
                Outcome::default()
            }
        });
        total.checked += o.checked;
        total.failures.extend(o.failures);
    }
    for n in 5..=config.nmax {
        let o = sweep(config.trials as u64, exec, |t| {
            let seed = derive_seed(derive_seed(config.seed, n as u64), t);
            match random_f_free(n, seed, F_FREE_ATTEMPTS) {
                Some(d) => f_free_check(&d),
                None => Outcome {
                    checked: 1,
                    failures: vec![Failure {
                        input: format!("n={n};seed={seed}"),
                        expected: "an F-free sample".into(),
                        actual: format!("none in {F_FREE_ATTEMPTS} attempts"),
                    }],
                },
            }
        });
        total.checked += o.checked;
        total.failures.extend(o.failures);
    }
    total
}

/// Dichromatic number by enumerating set partitions of the vertices into
/// acyclic classes, fewest classes first.
pub fn exhaustive_dichromatic(d: &Digraph) -> usize {
    fn place(d: &Digraph, v: usize, classes: &mut Vec<u64>, limit: usize) -> bool {
        if v == d.n() {
            return classes.iter().all(|&c| d.is_acyclic_on(c));
        }
        for i in 0..classes.len() {
            classes[i] |= 1 << v;
            let ok = d.is_acyclic_on(classes[i]) && place(d, v + 1, classes, limit);
            classes[i] &= !(1 << v);
            if ok {
                return true;
            }
        }
        if classes.len() < limit {
            classes.push(1 << v);
            let ok = place(d, v + 1, classes, limit);
            classes.pop();
            if ok {
                return true;
            }
        }
        false
    }
    (0..=d.n())
        .find(|&k| place(d, 0, &mut Vec::new(), k))
        .expect("n singleton classes always work")
}

fn solvers_check(d: &Digraph) -> Outcome {
    let mut o = Outcome::default();
    let coloring = dichromatic_number(d);
    let clique = clique_number(d);
    let oracle = exhaustive_dichromatic(d);
    o.check(coloring.chi == oracle, d, || {
        (format!("chi={oracle}"), format!("chi={}", coloring.chi))
    });
    o.check(clique.omega <= coloring.chi, d, || {
        (
            "omega<=chi".into(),
            format!("omega={} chi={}", clique.omega, coloring.chi),
        )
    });
    let proper = is_proper_coloring(d, &coloring.assignment) == Ok(true);
    o.check(proper && clique.validate(d), d, || {
        (
            "valid witnesses".into(),
            format!("coloring proper={proper}"),
        )
    });
    o.checked = 1;
    o
}

/// `trials` random digraphs per density setting for each `n` in `1..=nmax`.
fn solvers(config: &SuiteConfig, exec: Execution) -> Outcome {
    let mut total = Outcome::default();
    for n in 1..=config.nmax {
        for setting in 0..DENSITIES.len() {
            let o = sweep(config.trials as u64, exec, |t| {
                solvers_check(&random_instance(config, n, setting, t))
            });
            total.checked += o.checked;
            total.failures.extend(o.failures);
        }
    }
    total
}

/// Every loopless digraph on `n <= 5` vertices, checked in parallel when
/// requested; returns the codes failing `pred` in increasing order.
pub fn exhaustive_counterexamples<P>(n: usize, exec: Execution, pred: P) -> Vec<u64>
where
    P: Fn(&Digraph) -> bool + Sync + Send,
{
    assert!(n <= 5);
    let count = 1u64 << Digraph::pair_count(n);
    let check = |code: u64| (!pred(&Digraph::from_code(n, code))).then_some(code);
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().filter_map(check).collect()
        }
        _ => (0..count).filter_map(check).collect(),
    }
}
