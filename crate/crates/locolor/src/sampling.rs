//! Seeded random instances for the lemma property suites.
//!
//! Instances are random blow-ups of small base graphs (catalog graphs,
//! cliques, odd cycles, apex joins, the tightness weightings) with a few
//! random edges deleted. Each suite keeps drawing until it has its quota of
//! hypothesis-satisfying instances.

use locolor_core::catalog::{blow_up, complete, cycle, empty, join, named, tightness_weightings, GraphId};
use locolor_core::colouring::{chromatic_number, clique_number, cliques_of_size};
use locolor_core::local::{
    check_b_dense_sets_independent, check_dense_sets_independent, check_four_cycle_b_dense_diagonal,
    check_four_cycle_dense_diagonal, check_independent_pairs_dense, check_sparse_pairs_lift, is_a_locally_b_partite,
    lifting_inequality_check, InstanceCheck,
};
use locolor_core::{Graph, Rational, VertexSet};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::format::emit_graph6;

/// Largest instance drawn by the suites.
pub const MAX_SAMPLE_N: usize = 30;

/// Base graphs for the blow-ups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pool {
    /// Everything.
    All,
    /// Locally bipartite graphs without a Moser spindle.
    MoserFree,
    /// Graphs with a high minimum-degree ratio for the `b`-level lemmas.
    Dense,
}

pub struct Sampler {
    rng: ChaCha8Rng,
    all: Vec<(Graph, Option<Vec<usize>>)>,
    moser_free: Vec<(Graph, Option<Vec<usize>>)>,
    dense: Vec<(Graph, Option<Vec<usize>>)>,
}

fn zoo(id: GraphId) -> Graph {
    named(id).expect("catalog graph").graph
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        let k = |r| complete(r).expect("small");
        let c = |r| cycle(r).expect("small");
        let weighted: Vec<(Graph, Option<Vec<usize>>)> =
            tightness_weightings().iter().map(|w| (w.graph(), Some(w.scaled_sizes(1)))).collect();
        let apex_c5 = join(&k(1), &c(5)).expect("small");
        let apex_c7bar = join(&k(1), &zoo(GraphId::C7bar)).expect("small");
        let pair_k3 = join(&empty(2).expect("small"), &k(3)).expect("small");
        let mut all: Vec<(Graph, Option<Vec<usize>>)> = [
            GraphId::H0,
            GraphId::H1,
            GraphId::H2,
            GraphId::C7bar,
            GraphId::H2Plus,
            GraphId::T0,
            GraphId::H1PlusPlus,
        ]
        .iter()
        .map(|&id| (zoo(id), None))
        .collect();
        all.extend([k(2), k(3), k(4), k(5), c(5), c(7), apex_c5.clone(), apex_c7bar, pair_k3.clone()].into_iter().map(|g| (g, None)));
        all.extend(weighted.iter().cloned());
        let t0 = weighted.iter().find(|(g, _)| *g == zoo(GraphId::T0)).cloned().expect("T0 weighting");
        let moser_free = vec![(zoo(GraphId::T0), None), t0, (k(2), None), (k(3), None), (c(5), None), (c(7), None)];
        let dense = vec![(k(3), None), (k(4), None), (k(5), None), (apex_c5, None), (pair_k3, None), (zoo(GraphId::C7bar), None)];
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            all,
            moser_free,
            dense,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A random blow-up of a base graph with up to two edges deleted.
    pub fn instance(&mut self, pool: Pool) -> Graph {
        let bases = match pool {
            Pool::All => &self.all,
            Pool::MoserFree => &self.moser_free,
            Pool::Dense => &self.dense,
        };
        let (base, fixed) = bases.choose(&mut self.rng).expect("non-empty pool").clone();
        let sizes: Vec<usize> = match fixed {
            Some(s) if self.rng.random_bool(0.5) => s,
            _ => loop {
                let max = if base.n() > 8 { 2 } else { 3 };
                let s: Vec<usize> = (0..base.n()).map(|_| self.rng.random_range(1..=max)).collect();
                if s.iter().sum::<usize>() <= MAX_SAMPLE_N {
                    break s;
                }
            },
        };
        let mut g = blow_up(&base, &sizes).expect("within the vertex limit");
        let deletions = self.rng.random_range(0..=2);
        for _ in 0..deletions {
            let edges: Vec<(usize, usize)> = g.edges().collect();
            if let Some(&(u, v)) = edges.choose(&mut self.rng) {
                g = g.without_edge(u, v);
            }
        }
        g
    }

    pub fn subset(&mut self, n: usize, s: usize) -> VertexSet {
        let mut vs: Vec<usize> = (0..n).collect();
        vs.shuffle(&mut self.rng);
        vs[..s.min(n)].iter().copied().collect()
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub quota: usize,
    pub attempts: usize,
    pub accepted: usize,
    /// Applicable instances where the conclusion had something to check.
    pub nontrivial: usize,
    pub failures: Vec<Value>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.accepted >= self.quota && self.failures.is_empty()
    }
}

/// Outcome of one draw.
enum Draw {
    Skip,
    Pass { nontrivial: bool },
    Fail(Value),
}

fn run_suite(name: &'static str, quota: usize, sampler: &mut Sampler, mut draw: impl FnMut(&mut Sampler) -> Draw) -> SuiteReport {
    let mut report = SuiteReport {
        name,
        quota,
        attempts: 0,
        accepted: 0,
        nontrivial: 0,
        failures: Vec::new(),
    };
    let max_attempts = 400 * quota;
    while report.accepted < quota && report.attempts < max_attempts {
        report.attempts += 1;
        match draw(sampler) {
            Draw::Skip => {}
            Draw::Pass { nontrivial } => {
                report.accepted += 1;
                report.nontrivial += usize::from(nontrivial);
            }
            Draw::Fail(v) => {
                report.accepted += 1;
                if report.failures.len() < 10 {
                    report.failures.push(v);
                }
            }
        }
    }
    report
}

fn from_check(g: &Graph, check: InstanceCheck, extra: Value) -> Draw {
    match check {
        InstanceCheck::NotApplicable => Draw::Skip,
        InstanceCheck::Holds => Draw::Pass { nontrivial: true },
        InstanceCheck::Fails(c) => Draw::Fail(json!({
            "graph6": emit_graph6(g),
            "counterexample": format!("{c:?}"),
            "params": extra,
        })),
    }
}

const GAMMAS: [(i128, i128); 4] = [(0, 1), (1, 7), (1, 3), (1, 2)];

/// Lifting inequalities for random `X`, `b ∈ {2,3,4}`, `γ ∈ {0,1/7,1/3,1/2}`.
pub fn lifting_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("lifting", quota, &mut sampler, |s| {
        let g = s.instance(Pool::All);
        let b = s.rng().random_range(2..=4usize);
        let (p, q) = *GAMMAS.choose(s.rng()).expect("non-empty");
        let gamma = Rational::new(p, q);
        let size = s.rng().random_range(1..=b);
        let x = s.subset(g.n(), size);
        let r = lifting_inequality_check(&g, &x, b, gamma).expect("non-empty graph");
        if !r.applicable {
            Draw::Skip
        } else if r.conclusions_hold() {
            Draw::Pass { nontrivial: size >= 2 }
        } else {
            Draw::Fail(json!({
                "graph6": emit_graph6(&g),
                "x": x.iter().collect::<Vec<_>>(),
                "b": b,
                "gamma": gamma.to_string(),
                "report": format!("{r:?}"),
            }))
        }
    })
}

pub fn independent_pairs_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("independent-pairs-dense", quota, &mut sampler, |s| {
        let g = s.instance(Pool::All);
        from_check(&g, check_independent_pairs_dense(&g), Value::Null)
    })
}

pub fn four_cycle_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("four-cycle-dense-diagonal", quota, &mut sampler, |s| {
        let g = s.instance(Pool::All);
        from_check(&g, check_four_cycle_dense_diagonal(&g), Value::Null)
    })
}

pub fn dense_sets_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("dense-sets-independent", quota, &mut sampler, |s| {
        let g = s.instance(Pool::MoserFree);
        from_check(&g, check_dense_sets_independent(&g), Value::Null)
    })
}

pub fn b_dense_sets_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("b-dense-sets-independent", quota, &mut sampler, |s| {
        let g = s.instance(Pool::Dense);
        let b = s.rng().random_range(2..=3usize);
        from_check(&g, check_b_dense_sets_independent(&g, b), json!({ "b": b }))
    })
}

pub fn b_four_cycle_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("four-cycle-b-dense-diagonal", quota, &mut sampler, |s| {
        let g = s.instance(Pool::Dense);
        let b = s.rng().random_range(2..=4usize);
        from_check(&g, check_four_cycle_b_dense_diagonal(&g, b), json!({ "b": b }))
    })
}

/// Sparse pairs stay sparse in links of `s`-cliques, `1 ≤ s < b`.
pub fn sparse_lift_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("sparse-pairs-lift", quota, &mut sampler, |s| {
        let g = s.instance(Pool::Dense);
        let b = s.rng().random_range(2..=4usize);
        let size = s.rng().random_range(1..b);
        let cliques: Vec<VertexSet> = cliques_of_size(&g, size).collect();
        let Some(&x) = cliques.choose(s.rng()) else {
            return Draw::Skip;
        };
        from_check(&g, check_sparse_pairs_lift(&g, &x, b), json!({ "b": b, "x": x.iter().collect::<Vec<_>>() }))
    })
}

fn random_graph(s: &mut Sampler, max_n: usize) -> Graph {
    let n = s.rng().random_range(1..=max_n);
    let p = s.rng().random_range(0.2..0.8);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if s.rng().random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("small")
}

const FAMILIES: [(usize, usize); 4] = [(1, 2), (1, 3), (2, 2), (2, 1)];

/// Blow-ups keep `χ` and family membership; joins add `χ` and `ω`;
/// joining an independent set moves `F_{a,b}` to `F_{a+1,b}` exactly.
pub fn identity_suite(seed: u64, quota: usize) -> SuiteReport {
    let mut sampler = Sampler::new(seed);
    run_suite("blow-up-join-identities", quota, &mut sampler, |s| {
        let g = random_graph(s, 7);
        let h = random_graph(s, 5);
        let sizes: Vec<usize> = (0..g.n()).map(|_| s.rng().random_range(1..=3)).collect();
        let t = s.rng().random_range(1..=3);
        let bg = blow_up(&g, &sizes).expect("small");
        let j = join(&g, &h).expect("small");
        let apex = join(&g, &empty(t).expect("small")).expect("small");
        let mut broken = Vec::new();
        let chi = chromatic_number(&g);
        if chromatic_number(&bg) != chi {
            broken.push("blow-up chromatic number");
        }
        if chromatic_number(&j) != chi + chromatic_number(&h) {
            broken.push("join chromatic number");
        }
        if clique_number(&j) != clique_number(&g) + clique_number(&h) {
            broken.push("join clique number");
        }
        for (a, b) in FAMILIES {
            let member = is_a_locally_b_partite(&g, a, b);
            if is_a_locally_b_partite(&bg, a, b) != member {
                broken.push("blow-up membership");
            }
            if is_a_locally_b_partite(&apex, a + 1, b) != member {
                broken.push("independent-set join membership");
            }
        }
        if broken.is_empty() {
            Draw::Pass { nontrivial: true }
        } else {
            Draw::Fail(json!({
                "g": emit_graph6(&g),
                "h": emit_graph6(&h),
                "sizes": sizes,
                "t": t,
                "broken": broken,
            }))
        }
    })
}
