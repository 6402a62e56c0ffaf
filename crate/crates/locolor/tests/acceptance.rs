//! One line per acceptance criterion. Exit status is nonzero if any FAILs.
//!
//! Each criterion runs the matching registry claims and then re-derives
//! its headline numbers directly from the library.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use locolor::claims::{run_claims, Verdict};
use locolor::enumerate::{graph_from_mask, smallest_four_chromatic_locally_bipartite};
use locolor::format::{emit_graph6, parse_graph6};
use locolor_core::catalog::{
    blow_up, complement, cycle, kneser, named, permute, schrijver, threshold_construction, tightness_weightings, ConstructionParams,
    GraphId,
};
use locolor_core::colouring::{chromatic_number, has_clique, is_vertex_critical};
use locolor_core::hom::{are_isomorphic, contains_subgraph, find_hom, verify_hom_diagram, zoo_arrows};
use locolor_core::local::{bipartite_five_subset, edge_extensions, is_a_locally_b_partite, min_degree_ratio};
use locolor_core::{Graph, Rational, VertexSet};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    /// Met in substance; part of the literal wording cannot hold.
    Deviation(String),
    Fail(String),
}

type Check = Result<Outcome, String>;
type Criterion = fn() -> Check;

fn ensure(ok: bool, what: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn zoo(id: GraphId) -> Graph {
    named(id).unwrap().graph
}

/// Every claim matching `filter` must pass.
fn claims(filter: &str) -> Result<usize, String> {
    let r = run_claims(filter, 0).map_err(|e| e.to_string())?;
    for c in &r.results {
        ensure(c.verdict == Verdict::Pass, format!("claim {} is {:?}: {}", c.id, c.verdict, c.evidence["mismatches"]))?;
    }
    Ok(r.results.len())
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed <= limit, format!("took {elapsed:?}, limit {limit:?}"))
}

const EIGHT: [GraphId; 8] = [
    GraphId::H0,
    GraphId::H1,
    GraphId::H2,
    GraphId::C7bar,
    GraphId::H2Plus,
    GraphId::T0,
    GraphId::H1PlusPlus,
    GraphId::Wheel(7),
];

fn catalog_sanity() -> Check {
    let start = Instant::now();
    for id in EIGHT {
        let g = zoo(id);
        ensure(chromatic_number(&g) == 4, format!("χ({id}) != 4"))?;
        let lb = is_a_locally_b_partite(&g, 1, 2);
        ensure(lb == !matches!(id, GraphId::Wheel(_)), format!("{id}: locally bipartite = {lb}"))?;
    }
    ensure(are_isomorphic(&zoo(GraphId::C7bar), &complement(&cycle(7).unwrap())), "C7bar is not the complement of C7")?;
    within(start.elapsed(), Duration::from_secs(1))?;
    let n = claims("catalog.*")?;
    Ok(Outcome::Pass(format!("8 graphs χ=4, 7 locally bipartite, C7bar iso, {n} claims")))
}

fn diagram() -> Check {
    let start = Instant::now();
    let order = [GraphId::H0, GraphId::H1, GraphId::H2, GraphId::C7bar, GraphId::H2Plus, GraphId::H1PlusPlus, GraphId::T0];
    let graphs: Vec<Graph> = order.iter().map(|&id| zoo(id)).collect();
    let report = verify_hom_diagram(&graphs, &zoo_arrows());
    ensure(report.passed(), format!("matrix mismatches: {:?}", report.mismatches))?;
    let idx = |id: GraphId| order.iter().position(|&x| x == id).unwrap();
    let hom = |a: GraphId, b: GraphId| find_hom(&graphs[idx(a)], &graphs[idx(b)]).is_some();
    ensure(hom(GraphId::H1PlusPlus, GraphId::H2Plus), "no hom H1++ -> H2+")?;
    ensure(hom(GraphId::T0, GraphId::H2Plus), "no hom T0 -> H2+")?;
    use GraphId::*;
    let non = [(C7bar, H2), (H2, H1), (H1, H0), (H2Plus, C7bar), (C7bar, H2Plus), (H2, H1PlusPlus), (H0, T0), (T0, C7bar), (T0, H1PlusPlus)];
    for (a, b) in non {
        ensure(!hom(a, b), format!("unexpected hom {a} -> {b}"))?;
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    let n = claims("diagram.*")?;
    Ok(Outcome::Pass(format!("49 cells match closure, 9 non-homs, {n} claims")))
}

fn edge_chain() -> Check {
    let start = Instant::now();
    let classes = |id: GraphId| -> Vec<Graph> {
        let g = zoo(id);
        edge_extensions(&g, 1, 2).unwrap().extensions.into_iter().map(|(_, h)| h).collect()
    };
    let h0 = classes(GraphId::H0);
    ensure(h0.len() == 2, format!("H0 + edge: {} classes", h0.len()))?;
    ensure(h0.iter().filter(|g| are_isomorphic(g, &zoo(GraphId::H1))).count() == 1, "no H0 extension is H1")?;
    for (from, to) in [(GraphId::H1, GraphId::H2), (GraphId::H2, GraphId::C7bar)] {
        let c = classes(from);
        ensure(c.len() == 1 && are_isomorphic(&c[0], &zoo(to)), format!("{from} + edge: {} classes", c.len()))?;
    }
    for id in [GraphId::C7bar, GraphId::H2Plus] {
        ensure(classes(id).is_empty(), format!("{id} is not edge-maximal"))?;
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    let n = claims("chain.*")?;
    Ok(Outcome::Pass(format!("classes 2 -> 1 -> 1, C7bar and H2+ maximal, {n} claims")))
}

fn tightness_ratios() -> Check {
    let start = Instant::now();
    let limits = [(GraphId::H2Plus, Rational::new(5, 9)), (GraphId::T0, Rational::new(7, 13)), (GraphId::H1PlusPlus, Rational::new(8, 15))];
    let h2 = zoo(GraphId::H2);
    let mut limit_chis = Vec::new();
    for (w, (id, limit)) in tightness_weightings().iter().zip(limits) {
        ensure(w.id == id, "weighting order")?;
        ensure(w.limit_ratio() == limit, format!("{id}: limit {} != {limit}", w.limit_ratio()))?;
        for q in [10, 1000, 1_000_000] {
            let r = w.at(Rational::new(1, q)).unwrap().min_degree_ratio().unwrap();
            ensure(r < limit, format!("{id}: ratio {r} at ε=1/{q} not below {limit}"))?;
        }
        for m in [1, 2] {
            let g = blow_up(&w.graph(), &w.scaled_sizes(m)).unwrap();
            ensure(chromatic_number(&g) == 4, format!("{id}: ε=1/{m} blow-up not 4-chromatic"))?;
            ensure(is_a_locally_b_partite(&g, 1, 2), format!("{id}: ε=1/{m} blow-up not locally bipartite"))?;
            if id == GraphId::T0 {
                ensure(!contains_subgraph(&g, &h2), format!("T0 ε=1/{m} blow-up contains H2"))?;
            }
        }
        let limit_graph = blow_up(&w.graph(), &w.limit_sizes()).unwrap();
        ensure(min_degree_ratio(&limit_graph).unwrap() == limit, format!("{id}: ε=0 blow-up ratio"))?;
        limit_chis.push(chromatic_number(&limit_graph));
    }
    within(start.elapsed(), Duration::from_secs(10))?;
    let n = claims("tightness.*")?;
    // Dropping the zero-weight classes leaves a 3-colourable graph, so the
    // literal "ε = 0 blow-up retains χ = 4" cannot hold.
    ensure(limit_chis == [3, 3, 3], format!("ε=0 blow-up χ: {limit_chis:?}"))?;
    Ok(Outcome::Deviation(format!(
        "limits 5/9 7/13 8/15 exact, ratios below for ε>0, ε=1/m blow-ups χ=4, T0 blow-ups H2-free, {n} claims; ε=0 blow-ups have χ={limit_chis:?}"
    )))
}

fn kneser_schrijver() -> Check {
    let start = Instant::now();
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)] {
        let g = schrijver(n, k).unwrap();
        let chi = chromatic_number(&g);
        ensure(chi == n - 2 * k + 2, format!("χ(SG({n},{k})) = {chi}"))?;
        ensure(is_vertex_critical(&g, chi), format!("SG({n},{k}) not vertex-critical"))?;
    }
    ensure(chromatic_number(&kneser(5, 2).unwrap()) == 3, "χ(KG(5,2)) != 3")?;
    ensure(!has_clique(&schrijver(8, 3).unwrap(), 3), "SG(8,3) has a triangle")?;
    within(start.elapsed(), Duration::from_secs(60))?;
    let n = claims("kneser.*")?;
    Ok(Outcome::Pass(format!("5 Schrijver graphs exact and critical, KG(5,2)=3, SG(8,3) triangle-free, {n} claims")))
}

fn construction() -> Check {
    let start = Instant::now();
    let c = threshold_construction(ConstructionParams { ell: 2, k: 3, f: 2, s: 8 }).map_err(|e| e.to_string())?;
    let g = &c.graph;
    ensure(g.n() == 32, format!("{} vertices", g.n()))?;
    ensure(is_a_locally_b_partite(g, 1, 2), "not locally bipartite")?;
    let chi = chromatic_number(g);
    ensure(chi >= 4, format!("χ = {chi}"))?;
    for v in c.schrijver.iter() {
        for rect in &c.rectangles {
            ensure((g.neighbours(v) & *rect).len() == 6, format!("vertex {v}: wrong rectangle degree"))?;
        }
    }
    within(start.elapsed(), Duration::from_secs(120))?;
    let n = claims("construction.*")?;
    Ok(Outcome::Pass(format!("32 vertices, locally bipartite, χ={chi}, 6 neighbours per rectangle, {n} claims")))
}

fn enumeration() -> Check {
    let start = Instant::now();
    let small = smallest_four_chromatic_locally_bipartite(6).map_err(|e| e.to_string())?;
    let small_time = start.elapsed();
    within(small_time, Duration::from_secs(30))?;
    ensure(small.levels.iter().all(|l| l.witnesses == 0), "a witness on at most 6 vertices")?;
    ensure(small.levels.last().map(|l| l.graphs) == Some(1 << 15), "n=6 not exhaustive")?;
    let full = smallest_four_chromatic_locally_bipartite(7).map_err(|e| e.to_string())?;
    within(start.elapsed(), Duration::from_secs(15 * 60))?;
    let seven = full.levels.last().unwrap();
    ensure(seven.n == 7 && seven.witnesses == 9390, format!("n=7 witnesses {}", seven.witnesses))?;
    ensure(full.smallest_classes.len() == 7, format!("{} classes at n=7", full.smallest_classes.len()))?;
    let h0 = zoo(GraphId::H0);
    let has_h0 = full.smallest_classes.iter().any(|s| are_isomorphic(&parse_graph6(s.as_bytes()).unwrap(), &h0));
    ensure(has_h0 && full.moser_witness.is_some(), "H0 not among the witnesses")?;
    let n = claims("enumerate.*")?;
    Ok(Outcome::Pass(format!(
        "none on n<=6 ({small_time:.1?}), n=7: 9390 labelled witnesses in 7 classes incl. H0, {n} claims"
    )))
}

fn property_suites() -> Check {
    let start = Instant::now();
    let r = run_claims("lemma.*", 0).map_err(|e| e.to_string())?;
    let mut parts = Vec::new();
    for c in &r.results {
        ensure(c.verdict == Verdict::Pass, format!("{} failed: {}", c.id, c.evidence["mismatches"]))?;
        let accepted = c.evidence["suite"]["accepted"].as_u64().unwrap_or(0);
        let need = match c.id {
            "lemma.lifting" => 500,
            "lemma.sparse-lift" => 300,
            _ => 100,
        };
        ensure(accepted >= need, format!("{}: {accepted} samples", c.id))?;
        parts.push(format!("{}={accepted}", c.id.trim_start_matches("lemma.")));
    }
    ensure(r.results.len() == 7, "lemma suites missing")?;
    let p = run_claims("property.blow-up-join", 0).map_err(|e| e.to_string())?;
    let accepted = p.results[0].evidence["suite"]["accepted"].as_u64().unwrap_or(0);
    ensure(p.results[0].verdict == Verdict::Pass && accepted >= 300, format!("blow-up/join: {accepted}"))?;
    let h0 = zoo(GraphId::H0);
    let mut subsets = 0;
    for mask in 0u64..1 << 7 {
        if mask.count_ones() == 5 {
            let s: VertexSet = (0..7).filter(|&v| mask >> v & 1 == 1).collect();
            let sub = h0.induced_subgraph(&s).unwrap();
            ensure(!sub.is_bipartite(), format!("H0 subset {mask:#b} induces a bipartite graph"))?;
            subsets += 1;
        }
    }
    ensure(subsets == 21 && bipartite_five_subset(&h0).is_none(), "H0 five-subset property")?;
    let n = claims("catalog.h0-five-subsets")?;
    within(start.elapsed(), Duration::from_secs(300))?;
    Ok(Outcome::Pass(format!("{}, blow-up-join={accepted}, H0 21 subsets, zero counterexamples, {n} claim", parts.join(" "))))
}

fn brute_chromatic(g: &Graph) -> usize {
    let n = g.n();
    (0..=n)
        .find(|&k| {
            let total = (k as u64).pow(n as u32);
            (0..total).any(|mut code| {
                let mut col = vec![0; n];
                for c in col.iter_mut() {
                    *c = (code % k.max(1) as u64) as usize;
                    code /= k.max(1) as u64;
                }
                g.edges().all(|(u, v)| col[u] != col[v])
            })
        })
        .unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn oracles() -> Check {
    let mut checked = 0;
    for n in 0..=6usize {
        let m = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << m {
            let g = graph_from_mask(n, mask);
            ensure(chromatic_number(&g) == brute_chromatic(&g), format!("χ disagrees on {}", emit_graph6(&g)))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut isos = 0;
    for n in 1..=7usize {
        let perms = permutations(n);
        for _ in 0..40 {
            let m = n * (n - 1) / 2;
            let g = graph_from_mask(n, rng.random_range(0..1u64 << m));
            let h = if rng.random_bool(0.5) {
                permute(&g, &perms[rng.random_range(0..perms.len())])
            } else {
                graph_from_mask(n, rng.random_range(0..1u64 << m))
            };
            let brute = g.edge_count() == h.edge_count() && perms.iter().any(|p| g.edges().all(|(u, v)| h.has_edge(p[u], p[v])));
            ensure(are_isomorphic(&g, &h) == brute, format!("iso disagrees on {} {}", emit_graph6(&g), emit_graph6(&h)))?;
            isos += 1;
        }
    }
    let mut trips = 0;
    for _ in 0..500 {
        let n = rng.random_range(0..=40usize);
        let p: f64 = rng.random_range(0.0..1.0);
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        ensure(parse_graph6(emit_graph6(&g).as_bytes()).as_ref() == Ok(&g), "graph6 round trip")?;
        trips += 1;
    }
    Ok(Outcome::Pass(format!("χ on {checked} graphs n<=6, iso on {isos} pairs n<=7, {trips} graph6 round trips, 0 disagreements")))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("catalog sanity", catalog_sanity),
        ("homomorphism diagram", diagram),
        ("edge-addition chain", edge_chain),
        ("tightness ratios", tightness_ratios),
        ("Schrijver and Kneser graphs", kneser_schrijver),
        ("threshold construction", construction),
        ("smallest-graph enumeration", enumeration),
        ("property suites", property_suites),
        ("oracle equivalences", oracles),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check().unwrap_or_else(Outcome::Fail);
        let t = start.elapsed();
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Deviation(d) => ("PASS (deviation)", d),
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {}: {tag:<16} {name:<28} {t:>9.2?}  {detail}", i + 1);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
