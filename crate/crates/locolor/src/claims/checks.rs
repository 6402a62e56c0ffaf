use locolor_core::catalog::{
    balanced_blowup, blow_up, complement, cycle, kneser, named, schrijver, threshold_construction, tightness_weightings, turan,
    ConstructionParams, GraphId, Weighting,
};
use locolor_core::colouring::{chromatic_number, is_k_colourable, is_vertex_critical, optimal_colouring};
use locolor_core::hom::{
    are_isomorphic, contains_subgraph, find_hom, find_induced_embedding, find_isomorphism, homomorphic_implies_induced, search,
    verify_hom_diagram, witnesses, zoo_arrows, ArrowKind, Homomorphism, Mode, Relation,
};
use locolor_core::local::{
    bipartite_five_subset, classify_pair, contains_odd_wheel, dense_pair_graph, edge_extensions, family_nesting_check,
    is_a_locally_b_partite, is_edge_maximal_in_family, is_locally_bipartite, lifting_inequality_check, locally_partite_violation,
    min_degree_ratio, quasidense_reachable, PairClass,
};
use locolor_core::{Graph, Rational, VertexSet};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use super::{Claim, Evidence, RuntimeClass};
use crate::enumerate::smallest_four_chromatic_locally_bipartite;
use crate::format::emit_graph6;
use crate::sampling::{self, SuiteReport};
use crate::threshold::ThresholdTable;

use RuntimeClass::{Instant, Minutes, Seconds};

macro_rules! claim {
    ($id:literal, $runtime:ident, $citation:literal, $check:path) => {
        Claim {
            id: $id,
            citation: $citation,
            runtime: $runtime,
            check: $check,
        }
    };
}

pub(super) static REGISTRY: &[Claim] = &[
    claim!("catalog.chi", Instant, "The eight zoo graphs H0, H1, H2, C7bar, H2+, T0, H1++ and W7 are 4-chromatic.", catalog_chi),
    claim!("catalog.locally-bipartite", Instant, "Every zoo graph except W7 is locally bipartite; W7 has a 7-cycle neighbourhood.", catalog_locally_bipartite),
    claim!("catalog.c7bar", Instant, "C7bar is both the complement and the square of the 7-cycle.", catalog_c7bar),
    claim!("catalog.moser", Instant, "H0 is isomorphic to the Moser spindle built from two rhombi.", catalog_moser),
    claim!("catalog.structure", Instant, "H2+ is H2 plus a degree-3 vertex, H1++ is H1 plus two degree-3 vertices, and T0 is a 7-cycle with two near-universal vertices (missed vertices two apart) and a degree-3 vertex.", catalog_structure),
    claim!("catalog.h0-five-subsets", Instant, "Every 5-subset of H0 spans a triangle or a 5-cycle, so no vertex of a locally bipartite graph sees five vertices of an H0.", h0_five_subsets),
    claim!("chain.edge-addition", Seconds, "Adding one edge inside the locally bipartite family gives two classes from H0 (one is H1), only H2 from H1, and only C7bar from H2.", chain_edge_addition),
    claim!("chain.edge-maximal", Instant, "C7bar and H2+ are edge-maximal locally bipartite graphs.", chain_edge_maximal),
    claim!("diagram.matrix", Seconds, "Among H0, H1, H2, C7bar, H2+, H1++, T0 a homomorphism exists exactly along paths of subgraph and homomorphism arrows.", diagram_matrix),
    claim!("diagram.appendix-maps", Instant, "The explicit vertex maps H1++ -> H2+ and T0 -> H2+ are homomorphisms.", diagram_appendix_maps),
    claim!("diagram.non-homs", Seconds, "There is no homomorphism C7bar->H2, H2->H1, H1->H0, H2+->C7bar, C7bar->H2+, H2->H1++, H0->T0, T0->C7bar or T0->H1++.", diagram_non_homs),
    claim!("diagram.self-test", Seconds, "Removing one arrow from the diagram makes the verifier report exactly the cells that arrow explained.", diagram_self_test),
    claim!("diagram.blow-up-embedding", Instant, "Each diagram homomorphism embeds the source into a blow-up of the target.", diagram_blow_up_embedding),
    claim!("diagram.edge-maximal-images", Seconds, "A homomorphism from an edge-maximal locally bipartite graph into a locally bipartite graph gives an induced copy.", diagram_edge_maximal_images),
    claim!("tightness.4-7", Instant, "Balanced blow-ups of C7bar are locally bipartite, 4-chromatic, with minimum degree exactly 4/7 of the order.", tightness_4_7),
    claim!("tightness.5-9", Seconds, "Blow-ups of H2+ approach minimum-degree ratio 5/9 from below while staying 4-chromatic and not homomorphic to C7bar.", tightness_5_9),
    claim!("tightness.7-13", Seconds, "Blow-ups of T0 approach minimum-degree ratio 7/13 from below while staying 4-chromatic and H2-free.", tightness_7_13),
    claim!("tightness.8-15", Seconds, "Blow-ups of H1++ approach minimum-degree ratio 8/15 from below while staying 4-chromatic, H2-free and T0-free.", tightness_8_15),
    claim!("kneser.schrijver", Seconds, "SG(n,k) has chromatic number n-2k+2 and is vertex-critical.", kneser_schrijver),
    claim!("kneser.small", Instant, "KG(5,2) has chromatic number 3 and SG(8,3) is triangle-free.", kneser_small),
    claim!("construction.threshold", Seconds, "The rectangle-apex-Schrijver construction at ell=2, k=3, f=2, s=8 has 32 vertices, is locally bipartite, is not 3-colourable, and each Schrijver vertex has 6 neighbours in each rectangle.", construction_threshold),
    claim!("family.turan", Instant, "T_{a+b}(n) is a-locally b-partite with chromatic number a+b and minimum-degree ratio 1-1/(a+b); K_{a+b+1} is not.", family_turan),
    claim!("family.nesting", Seconds, "F_{1,l} is contained in F_{2,l-1}, ..., in F_{l,1}, the K_{l+2}-free graphs.", family_nesting),
    claim!("family.odd-wheels", Seconds, "A graph is locally bipartite exactly when it contains no odd wheel.", family_odd_wheels),
    claim!("pairs.examples", Instant, "Pair classification on H0 and C7bar, and the dense-pair graphs of T0 and H1++.", pairs_examples),
    claim!("lifting.example", Instant, "Lifting inequalities on T_4(12) with X a vertex, b=3, gamma=1/7.", lifting_example),
    claim!("lemma.lifting", Seconds, "For |X|=s < b+gamma and minimum degree above (1-1/(b+gamma))n: |G_X| >= s*delta-(s-1)n > (1-s/(b+gamma))n and delta(G_X) > (1-1/(b-s+gamma))|G_X|.", lemma_lifting),
    claim!("lemma.independent-pairs", Seconds, "Above minimum degree n/2, every pair in a largest independent set is dense.", lemma_independent_pairs),
    claim!("lemma.four-cycle", Seconds, "Above minimum degree n/2, every induced 4-cycle has a dense diagonal.", lemma_four_cycle),
    claim!("lemma.dense-sets", Seconds, "In a locally bipartite H0-free graph, each dense set D_v is independent.", lemma_dense_sets),
    claim!("lemma.b-four-cycle", Seconds, "Above minimum degree (1-1/b)n, an induced 4-cycle whose common neighbourhood holds a (b-2)-clique has a b-dense diagonal.", lemma_b_four_cycle),
    claim!("lemma.b-dense-sets", Seconds, "In a locally b-partite graph with minimum degree above 2b/(2b+3) n, each b-dense set is independent.", lemma_b_dense_sets),
    claim!("lemma.sparse-lift", Seconds, "In a locally b-partite graph above minimum degree (1-1/b)n, the link of an s-clique is (b-s+1)-colourable and b-sparse pairs stay (b-s)-sparse in it.", lemma_sparse_lift),
    claim!("property.blow-up-join", Seconds, "Blow-ups preserve chromatic number and family membership; joins add chromatic and clique numbers; joining an independent set maps F_{a,b} onto F_{a+1,b}.", property_blow_up_join),
    claim!("enumerate.smallest", Minutes, "No locally bipartite graph on at most 6 vertices is 4-chromatic; on 7 vertices H0 is one.", enumerate_smallest),
    claim!("threshold.table", Instant, "Stored chromatic-profile values agree with 1-1/(a+b-1+gamma) and lie in [0,1].", threshold_table),
];

fn zoo(id: GraphId) -> Graph {
    named(id).expect("catalog graph").graph
}

fn diagram_graphs() -> Vec<Graph> {
    GraphId::DIAGRAM.iter().map(|&id| zoo(id)).collect()
}

fn diagram_index(id: GraphId) -> usize {
    GraphId::DIAGRAM.iter().position(|&d| d == id).expect("diagram graph")
}

fn catalog_chi(_: u64, ev: &mut Evidence) {
    let mut rows = Vec::new();
    for id in GraphId::ZOO {
        let g = zoo(id);
        let c = optimal_colouring(&g);
        let chi = c.colour_count();
        ev.require(format!("{id} colouring is proper"), c.is_proper(&g), c.colours());
        ev.require(format!("{id} is not 3-colourable"), is_k_colourable(&g, 3).is_none(), emit_graph6(&g));
        ev.require(format!("χ({id}) = 4"), chi == 4, chi);
        rows.push(json!({ "graph": id.to_string(), "n": g.n(), "m": g.edge_count(), "chi": chi, "colouring": c.colours() }));
    }
    ev.fact("graphs", rows);
}

fn catalog_locally_bipartite(_: u64, ev: &mut Evidence) {
    let mut rows = Vec::new();
    for id in GraphId::ZOO {
        let g = zoo(id);
        let violation = locally_partite_violation(&g, 1, 2);
        let expect_member = id != GraphId::Wheel(7);
        ev.require(format!("{id} locally bipartite = {expect_member}"), violation.is_none() == expect_member, violation.map(|v| v.iter().collect::<Vec<_>>()));
        rows.push(json!({ "graph": id.to_string(), "locally_bipartite": violation.is_none(), "violating_vertex": violation.and_then(|v| v.first()) }));
    }
    ev.fact("graphs", rows);
}

fn catalog_c7bar(_: u64, ev: &mut Evidence) {
    let c7bar = zoo(GraphId::C7bar);
    let co = complement(&cycle(7).expect("small"));
    let square = Graph::from_edge_iter(7, (0..7).flat_map(|i| [(i, (i + 1) % 7), (i, (i + 2) % 7)])).expect("small");
    let f = find_isomorphism(&c7bar, &co);
    ev.require("C7bar ≅ complement(C7)", f.is_some(), emit_graph6(&c7bar));
    ev.require("C7bar ≅ C7 squared", are_isomorphic(&c7bar, &square), emit_graph6(&square));
    ev.fact("isomorphism_to_complement", f.map(|f| f.map().to_vec()));
}

fn catalog_moser(_: u64, ev: &mut Evidence) {
    // apex 0; rhombi 0-1-2-3 and 0-4-5-6 (triangles 012, 123, 045, 456); tips 3 and 6 joined.
    let spindle = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (4, 5), (4, 6), (5, 6), (3, 6)]).expect("small");
    let h0 = zoo(GraphId::H0);
    let f = find_isomorphism(&spindle, &h0);
    ev.require("H0 ≅ Moser spindle", f.is_some(), emit_graph6(&h0));
    ev.fact("isomorphism", f.map(|f| f.map().to_vec()));
}

fn catalog_structure(_: u64, ev: &mut Evidence) {
    let h2p = named(GraphId::H2Plus).expect("catalog graph");
    let u = h2p.vertex("u").expect("label");
    let rest = h2p.graph.vertices().without(u);
    ev.require("H2+ - u = H2", h2p.graph.induced_subgraph(&rest).expect("subset") == zoo(GraphId::H2), Vec::<usize>::new());
    ev.require("deg_H2+(u) = 3", h2p.graph.degree(u) == 3, h2p.graph.degree(u));

    let h1pp = named(GraphId::H1PlusPlus).expect("catalog graph");
    let extra = h1pp.set(&["a023", "a350"]).expect("labels");
    let rest = h1pp.graph.vertices() - extra;
    ev.require("H1++ minus the two added vertices = H1", h1pp.graph.induced_subgraph(&rest).expect("subset") == zoo(GraphId::H1), Vec::<usize>::new());
    for v in extra.iter() {
        ev.require(format!("deg_H1++({v}) = 3"), h1pp.graph.degree(v) == 3, h1pp.graph.degree(v));
    }

    let t0 = named(GraphId::T0).expect("catalog graph");
    let outer = VertexSet::range(7);
    let c7 = t0.graph.induced_subgraph(&outer).expect("subset");
    ev.require("T0[v0..v6] is a 7-cycle", c7 == cycle(7).expect("small"), emit_graph6(&c7));
    let mut missed = Vec::new();
    for label in ["u1", "u6"] {
        let v = t0.vertex(label).expect("label");
        let seen = t0.graph.neighbours(v) & outer;
        ev.require(format!("{label} sees six outer vertices"), seen.len() == 6, seen.iter().collect::<Vec<_>>());
        missed.extend((outer - seen).iter());
    }
    let gap = if missed.len() == 2 { (missed[0] + 7 - missed[1]) % 7 } else { 0 };
    ev.require("missed outer vertices are two apart", gap == 2 || gap == 5, &missed);
    let t = t0.vertex("t").expect("label");
    ev.require("deg_T0(t) = 3", t0.graph.degree(t) == 3, t0.graph.degree(t));
    ev.fact("t0_missed_outer", missed);
}

fn h0_five_subsets(_: u64, ev: &mut Evidence) {
    let h0 = zoo(GraphId::H0);
    let mut subsets = 0;
    let mut with_triangle = 0;
    for mask in 0u32..128 {
        if mask.count_ones() != 5 {
            continue;
        }
        subsets += 1;
        let s: VertexSet = (0..7).filter(|i| mask >> i & 1 == 1).collect();
        ev.require("5-subset spans an odd cycle", !h0.is_bipartite_on(s), s.iter().collect::<Vec<_>>());
        let sub = h0.induced_subgraph(&s).expect("subset");
        with_triangle += usize::from(locolor_core::colouring::has_clique(&sub, 3));
        // A new vertex adjacent to S leaves the family.
        let edges: Vec<(usize, usize)> = h0.edges().chain(s.iter().map(|v| (v, 7))).collect();
        let ext = Graph::from_edges(8, &edges).expect("small");
        ev.require("vertex seeing the 5-subset is an odd-wheel hub", !is_locally_bipartite(&ext), s.iter().collect::<Vec<_>>());
    }
    ev.require("21 subsets checked", subsets == 21, subsets);
    ev.require("bipartite_five_subset(H0) is none", bipartite_five_subset(&h0).is_none(), Vec::<usize>::new());
    ev.fact("subsets", subsets);
    ev.fact("with_triangle", with_triangle);
    ev.fact("five_cycle_only", subsets - with_triangle);
}

fn chain_edge_addition(_: u64, ev: &mut Evidence) {
    let steps = [
        (GraphId::H0, 2, Some(GraphId::H1)),
        (GraphId::H1, 1, Some(GraphId::H2)),
        (GraphId::H2, 1, Some(GraphId::C7bar)),
    ];
    let mut rows = Vec::new();
    for (id, classes, contains) in steps {
        let ext = edge_extensions(&zoo(id), 1, 2).expect("member");
        let found = ext.extensions.len();
        ev.require(format!("{id} + edge: {classes} classes"), found == classes, found);
        if let Some(target) = contains {
            let t = zoo(target);
            ev.require(format!("{id} + edge includes {target}"), ext.extensions.iter().any(|(_, g)| are_isomorphic(g, &t)), Vec::<usize>::new());
        }
        rows.push(json!({
            "graph": id.to_string(),
            "classes": ext.extensions.iter().map(|((u, v), g)| json!({ "edge": [u, v], "graph6": emit_graph6(g) })).collect::<Vec<_>>(),
        }));
    }
    ev.fact("steps", rows);
}

fn chain_edge_maximal(_: u64, ev: &mut Evidence) {
    for id in [GraphId::C7bar, GraphId::H2Plus] {
        let g = zoo(id);
        ev.require(format!("{id} is edge-maximal"), is_edge_maximal_in_family(&g, 1, 2).expect("member"), emit_graph6(&g));
        for (u, v) in g.non_edges() {
            let hub = locolor_core::local::odd_wheel_hub(&g.with_edge(u, v).expect("non-edge"));
            ev.require(format!("{id} + {u}{v} has an odd wheel"), hub.is_some(), [u, v]);
        }
    }
}

fn names() -> Vec<String> {
    GraphId::DIAGRAM.iter().map(|id| id.to_string()).collect()
}

fn diagram_matrix(_: u64, ev: &mut Evidence) {
    let graphs = diagram_graphs();
    let report = verify_hom_diagram(&graphs, &zoo_arrows());
    let names = names();
    let mut cells = Vec::new();
    for (i, row) in report.relation.matrix.iter().enumerate() {
        for (j, rel) in row.iter().enumerate() {
            let (witness, nodes) = match rel {
                Relation::Hom(h) => (Some(h.map().to_vec()), None),
                Relation::NoHom { nodes } => (None, Some(*nodes)),
            };
            if let Some(h) = rel.witness() {
                ev.require(format!("{}->{} witness validates", names[i], names[j]), h.validate(&graphs[i], &graphs[j]), h.map());
            }
            cells.push(json!({
                "from": names[i],
                "to": names[j],
                "hom": rel.holds(),
                "expected": report.expected[i][j],
                "witness": witness,
                "search_nodes": nodes,
            }));
        }
    }
    for m in &report.mismatches {
        ev.require(format!("{}->{} agrees with the diagram", names[m.from], names[m.to]), false, json!({ "expected": m.expected }));
    }
    ev.require("subgraph arrows are embeddings", report.missing_subgraphs.is_empty(), format!("{:?}", report.missing_subgraphs));
    ev.require("witnesses validate", report.invalid_witnesses.is_empty(), &report.invalid_witnesses);
    ev.require("witnesses compose", report.transitivity_failures.is_empty(), &report.transitivity_failures);
    ev.require("49 cells", cells.len() == 49, cells.len());
    ev.fact("graphs", &names);
    ev.fact("arrows", zoo_arrows().iter().map(|a| json!({ "from": names[a.from], "to": names[a.to], "kind": if a.kind == ArrowKind::Subgraph { "subgraph" } else { "hom" } })).collect::<Vec<_>>());
    ev.fact("matrix", cells);
}

fn diagram_appendix_maps(_: u64, ev: &mut Evidence) {
    let h2p = zoo(GraphId::H2Plus);
    for (id, map) in [(GraphId::H1PlusPlus, &witnesses::H1PLUSPLUS_TO_H2PLUS[..]), (GraphId::T0, &witnesses::T0_TO_H2PLUS[..])] {
        let g = zoo(id);
        let h = Homomorphism::new(map.to_vec(), h2p.n());
        ev.require(format!("{id} -> H2+ map is a homomorphism"), h.validate(&g, &h2p), map);
        let broken: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| !h2p.has_edge(map[u], map[v])).collect();
        ev.require(format!("{id} -> H2+ preserves every edge"), broken.is_empty(), &broken);
        ev.fact(&format!("{id}_to_H2plus"), map);
    }
}

const NON_HOMS: [(GraphId, GraphId); 9] = [
    (GraphId::C7bar, GraphId::H2),
    (GraphId::H2, GraphId::H1),
    (GraphId::H1, GraphId::H0),
    (GraphId::H2Plus, GraphId::C7bar),
    (GraphId::C7bar, GraphId::H2Plus),
    (GraphId::H2, GraphId::H1PlusPlus),
    (GraphId::H0, GraphId::T0),
    (GraphId::T0, GraphId::C7bar),
    (GraphId::T0, GraphId::H1PlusPlus),
];

fn diagram_non_homs(_: u64, ev: &mut Evidence) {
    let mut rows = Vec::new();
    for (a, b) in NON_HOMS {
        let out = search(&zoo(a), &zoo(b), Mode::Hom);
        ev.require(format!("no homomorphism {a} -> {b}"), out.witness.is_none(), out.witness.as_ref().map(|w| w.map().to_vec()));
        rows.push(json!({ "from": a.to_string(), "to": b.to_string(), "search_nodes": out.nodes }));
    }
    ev.fact("non_homomorphisms", rows);
}

fn diagram_self_test(_: u64, ev: &mut Evidence) {
    let graphs = diagram_graphs();
    let arrows: Vec<_> = zoo_arrows()
        .into_iter()
        .filter(|a| !(a.from == diagram_index(GraphId::H1) && a.to == diagram_index(GraphId::H2)))
        .collect();
    let report = verify_hom_diagram(&graphs, &arrows);
    let got: Vec<(usize, usize, bool)> = report.mismatches.iter().map(|m| (m.from, m.to, m.expected)).collect();
    // Without H1 -> H2, nothing predicts H0 or H1 mapping to H2 or C7bar.
    let (h0, h1, h2, c7) = (0, 1, 2, 3);
    let want = vec![(h0, h2, false), (h0, c7, false), (h1, h2, false), (h1, c7, false)];
    ev.require("mismatches are exactly the cells explained by H1 -> H2", got == want, &got);
    ev.fact("mismatched_cells", got.len());
}

fn diagram_blow_up_embedding(_: u64, ev: &mut Evidence) {
    let graphs = diagram_graphs();
    let names = names();
    let mut count = 0;
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate() {
            if let Some(f) = find_hom(g, h) {
                let (b, e) = locolor_core::hom::blow_up_embedding(g, h, &f).expect("small");
                ev.require(format!("{} embeds in a blow-up of {}", names[i], names[j]), e.is_injective() && e.validate(g, &b), e.map());
                count += 1;
            }
        }
    }
    ev.fact("homomorphic_pairs", count);
}

fn diagram_edge_maximal_images(_: u64, ev: &mut Evidence) {
    let mut checked = 0;
    for f in [GraphId::C7bar, GraphId::H2Plus] {
        let fg = zoo(f);
        let mut targets: Vec<(String, Graph)> = GraphId::DIAGRAM.iter().map(|&id| (id.to_string(), zoo(id))).collect();
        targets.push((format!("{f}(2)"), balanced_blowup(&fg, 2).expect("small")));
        for (name, g) in &targets {
            if let Some(induced) = homomorphic_implies_induced(&fg, g) {
                checked += 1;
                let e = find_induced_embedding(&fg, g);
                ev.require(format!("{f} -> {name} yields an induced copy"), induced && e.is_some_and(|e| e.is_induced_embedding(&fg, g)), emit_graph6(g));
            }
        }
    }
    ev.fact("homomorphic_pairs", checked);
}

fn tightness_4_7(_: u64, ev: &mut Evidence) {
    let c7bar = zoo(GraphId::C7bar);
    for t in 1..=3 {
        let g = balanced_blowup(&c7bar, t).expect("small");
        let r = min_degree_ratio(&g).expect("non-empty");
        ev.require(format!("C7bar({t}) ratio is 4/7"), r == Rational::new(4, 7), r.to_string());
        ev.require(format!("C7bar({t}) locally bipartite"), is_locally_bipartite(&g), t);
        ev.require(format!("χ(C7bar({t})) = 4"), chromatic_number(&g) == 4, t);
    }
}

const EPSILONS: [i128; 3] = [10, 1000, 1_000_000];

type Avoided<'a> = (&'a str, &'a dyn Fn(&Graph) -> bool);

/// Ratio limits and realised blow-ups of one tightness weighting.
/// `avoids` states the property each blow-up must lack.
fn tightness(ev: &mut Evidence, id: GraphId, limit: Rational, avoids: &[Avoided]) {
    let w: Weighting = tightness_weightings().into_iter().find(|w| w.id == id).expect("weighting");
    ev.require("limit ratio", w.limit_ratio() == limit, w.limit_ratio().to_string());
    let mut ratios = Vec::new();
    for q in EPSILONS {
        let eps = Rational::new(1, q);
        let r = w.at(eps).expect("weights").min_degree_ratio().expect("positive weights");
        ev.require(format!("ratio at ε = 1/{q} is below {limit}"), r < limit, r.to_string());
        ratios.push(r);
    }
    ev.require("ratio increases as ε shrinks", ratios.windows(2).all(|p| p[0] < p[1]), ratios.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    let mut blowups = Vec::new();
    for m in [1, 2] {
        let sizes = w.scaled_sizes(m);
        let g = blow_up(&w.graph(), &sizes).expect("within the vertex limit");
        let realised = min_degree_ratio(&g).expect("non-empty");
        let weighted = w.at(Rational::new(1, m as i128)).expect("weights").min_degree_ratio().expect("positive");
        ev.require(format!("blow-up {sizes:?} realises ε = 1/{m}"), realised == weighted, realised.to_string());
        ev.require(format!("blow-up {sizes:?} is locally bipartite"), is_locally_bipartite(&g), &sizes);
        let chi = chromatic_number(&g);
        ev.require(format!("blow-up {sizes:?} is 4-chromatic"), chi == 4, chi);
        for (what, has) in avoids {
            ev.require(format!("blow-up {sizes:?} {what}"), !has(&g), &sizes);
        }
        blowups.push(json!({ "sizes": sizes, "n": g.n(), "ratio": realised.to_string(), "chi": chi }));
    }
    let limit_graph = blow_up(&w.graph(), &w.limit_sizes()).expect("small");
    ev.fact("epsilons", EPSILONS.iter().map(|q| format!("1/{q}")).collect::<Vec<_>>());
    ev.fact("ratios", ratios.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    ev.fact("limit", limit.to_string());
    ev.fact("base_weights", &w.base);
    ev.fact("blow_ups", blowups);
    // With the vanishing classes removed the blow-up is 3-colourable.
    ev.fact("limit_blow_up", json!({ "sizes": w.limit_sizes(), "n": limit_graph.n(), "chi": chromatic_number(&limit_graph) }));
}

fn tightness_5_9(_: u64, ev: &mut Evidence) {
    let c7bar = zoo(GraphId::C7bar);
    let to_c7bar = move |g: &Graph| find_hom(g, &c7bar).is_some();
    tightness(ev, GraphId::H2Plus, Rational::new(5, 9), &[("is not homomorphic to C7bar", &to_c7bar)]);
}

fn tightness_7_13(_: u64, ev: &mut Evidence) {
    let h2 = zoo(GraphId::H2);
    let has_h2 = move |g: &Graph| contains_subgraph(g, &h2);
    tightness(ev, GraphId::T0, Rational::new(7, 13), &[("has no H2", &has_h2)]);
}

fn tightness_8_15(_: u64, ev: &mut Evidence) {
    let (h2, t0) = (zoo(GraphId::H2), zoo(GraphId::T0));
    let has_h2 = move |g: &Graph| contains_subgraph(g, &h2);
    let has_t0 = move |g: &Graph| contains_subgraph(g, &t0);
    tightness(ev, GraphId::H1PlusPlus, Rational::new(8, 15), &[("has no H2", &has_h2), ("has no T0", &has_t0)]);
}

fn kneser_schrijver(_: u64, ev: &mut Evidence) {
    let mut rows = Vec::new();
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)] {
        let g = schrijver(n, k).expect("small");
        let chi = chromatic_number(&g);
        let want = n - 2 * k + 2;
        ev.require(format!("χ(SG({n},{k})) = {want}"), chi == want, chi);
        ev.require(format!("SG({n},{k}) is vertex-critical"), is_vertex_critical(&g, chi), emit_graph6(&g));
        rows.push(json!({ "n": n, "k": k, "order": g.n(), "chi": chi }));
    }
    ev.fact("graphs", rows);
}

fn kneser_small(_: u64, ev: &mut Evidence) {
    let kg = kneser(5, 2).expect("small");
    ev.require("χ(KG(5,2)) = 3", chromatic_number(&kg) == 3, chromatic_number(&kg));
    let sg = schrijver(8, 3).expect("small");
    ev.require("SG(8,3) is triangle-free", !locolor_core::colouring::has_clique(&sg, 3), emit_graph6(&sg));
    ev.fact("kg_5_2", json!({ "n": kg.n(), "m": kg.edge_count() }));
    ev.fact("sg_8_3", json!({ "n": sg.n(), "m": sg.edge_count() }));
}

fn construction_threshold(_: u64, ev: &mut Evidence) {
    let params = ConstructionParams { ell: 2, k: 3, f: 2, s: 8 };
    let c = threshold_construction(params).expect("valid parameters");
    let g = &c.graph;
    ev.require("32 vertices", g.n() == 32, g.n());
    ev.require("locally bipartite", is_a_locally_b_partite(g, 1, 2), Vec::<usize>::new());
    let three = is_k_colourable(g, 3);
    ev.require("not 3-colourable", three.is_none(), three.map(|c| c.colours().to_vec()));
    let chi = chromatic_number(g);
    for v in c.schrijver.iter() {
        for (r, rect) in c.rectangles.iter().enumerate() {
            let d = (g.neighbours(v) & *rect).len();
            ev.require(format!("vertex {v} has 6 neighbours in rectangle {r}"), d == 6, d);
        }
    }
    ev.fact("chi", chi);
    ev.fact("min_degree_ratio", min_degree_ratio(g).expect("non-empty").to_string());
    ev.fact("edges", g.edge_count());
}

fn family_turan(_: u64, ev: &mut Evidence) {
    for (a, b) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 1)] {
        let r = a + b;
        for t in 1..=3 {
            let g = turan(r, r * t).expect("small");
            ev.require(format!("T_{r}({}) in F_{{{a},{b}}}", r * t), is_a_locally_b_partite(&g, a, b), Vec::<usize>::new());
            ev.require(format!("χ(T_{r}({})) = {r}", r * t), chromatic_number(&g) == r, chromatic_number(&g));
            let ratio = min_degree_ratio(&g).expect("non-empty");
            ev.require(format!("T_{r}({}) ratio", r * t), ratio == Rational::new(r as i128 - 1, r as i128), ratio.to_string());
        }
        let k = turan(r + 1, r + 1).expect("small");
        ev.require(format!("K_{} not in F_{{{a},{b}}}", r + 1), !is_a_locally_b_partite(&k, a, b), Vec::<usize>::new());
    }
}

fn family_nesting(seed: u64, ev: &mut Evidence) {
    let mut graphs: Vec<Graph> = GraphId::ZOO.iter().map(|&id| zoo(id)).collect();
    let mut s = sampling::Sampler::new(seed);
    graphs.extend((0..100).map(|_| s.instance(sampling::Pool::All)));
    let mut strict = 0;
    for ell in 1..=4 {
        for g in &graphs {
            let r = family_nesting_check(g, ell).expect("ell >= 1");
            ev.require(format!("chain consistent at ell = {ell}"), r.consistent, emit_graph6(g));
            strict += usize::from(r.memberships.windows(2).any(|p| p[0] != p[1]));
        }
    }
    // W7 is K4-free but not locally bipartite: the first inclusion is strict.
    let w7 = zoo(GraphId::Wheel(7));
    ev.require("W7 separates F_{1,2} from F_{2,1}", !is_a_locally_b_partite(&w7, 1, 2) && is_a_locally_b_partite(&w7, 2, 1), Vec::<usize>::new());
    ev.fact("graphs", graphs.len());
    ev.fact("strict_chains", strict);
}

fn family_odd_wheels(seed: u64, ev: &mut Evidence) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut members = 0;
    for _ in 0..300 {
        let n = rng.random_range(4..=12usize);
        let p = rng.random_range(0.2..0.7);
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.random_bool(p)).collect();
        let g = Graph::from_edges(n, &edges).expect("small");
        let lb = is_locally_bipartite(&g);
        members += usize::from(lb);
        ev.require("odd wheel iff not locally bipartite", contains_odd_wheel(&g) != lb, emit_graph6(&g));
    }
    ev.fact("samples", 300);
    ev.fact("locally_bipartite", members);
}

fn pairs_examples(_: u64, ev: &mut Evidence) {
    let h0 = named(GraphId::H0).expect("catalog graph");
    let v = |l: &str| h0.vertex(l).expect("label");
    let class = |a: &str, b: &str| classify_pair(&h0.graph, v(a), v(b), 2).expect("distinct");
    ev.require("H0 a0a1 adjacent", class("a0", "a1") == PairClass::Adjacent, format!("{:?}", class("a0", "a1")));
    ev.require("H0 a1a6 sparse", class("a1", "a6").is_sparse(), format!("{:?}", class("a1", "a6")));
    ev.require("H0 a0a3 dense", class("a0", "a3").is_dense(), format!("{:?}", class("a0", "a3")));
    let c7bar = zoo(GraphId::C7bar);
    for (u, w) in c7bar.non_edges() {
        ev.require(format!("C7bar {u}{w} dense"), classify_pair(&c7bar, u, w, 2).expect("distinct").is_dense(), [u, w]);
    }

    let t0 = named(GraphId::T0).expect("catalog graph");
    let path = |g: &locolor_core::catalog::NamedGraph, labels: &[&str], extra: (&str, &str)| {
        let vs: Vec<usize> = labels.iter().map(|l| g.vertex(l).expect("label")).collect();
        let mut edges: Vec<(usize, usize)> = (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect();
        edges.push((g.vertex(extra.0).expect("label"), g.vertex(extra.1).expect("label")));
        Graph::from_edges(g.graph.n(), &edges).expect("small")
    };
    let want = path(&t0, &["v0", "v2", "v4", "v6", "t", "v1", "v3", "v5"], ("u1", "u6"));
    let d = dense_pair_graph(&t0.graph, 2);
    ev.require("dense-pair graph of T0 is the 8-cycle v0v2v4v6tv1v3v5 plus u1u6", d == want, d.edges().collect::<Vec<_>>());
    let comp = quasidense_reachable(&t0.graph, t0.vertex("v0").expect("label"), 2).expect("in range");
    ev.fact("t0_quasidense_component_of_v0", comp.iter().collect::<Vec<_>>());

    let h1pp = named(GraphId::H1PlusPlus).expect("catalog graph");
    let want = path(&h1pp, &["a1", "a023", "a4", "a350", "a6", "a2", "a5"], ("a0", "a3"));
    let d = dense_pair_graph(&h1pp.graph, 2);
    ev.require("dense-pair graph of H1++ is the 7-cycle a1a023a4a350a6a2a5 plus a0a3", d == want, d.edges().collect::<Vec<_>>());
}

fn lifting_example(_: u64, ev: &mut Evidence) {
    let g = turan(4, 12).expect("small");
    let r = lifting_inequality_check(&g, &VertexSet::singleton(0), 3, Rational::new(1, 7)).expect("non-empty");
    ev.require("applicable", r.applicable, format!("{r:?}"));
    ev.require("conclusions hold", r.conclusions_hold(), format!("{r:?}"));
    ev.require("|G_X| = 9", r.link_order == 9, r.link_order);
    ev.require("δ(G_X) = 6", r.link_min_degree == Some(6), r.link_min_degree);
    let all = lifting_inequality_check(&g, &g.vertices(), 3, Rational::new(1, 7)).expect("non-empty");
    ev.require("X = V(G) is outside the hypotheses", !all.applicable, format!("{all:?}"));
}

fn suite(ev: &mut Evidence, r: SuiteReport) {
    ev.require(format!("{} quota of {} reached", r.name, r.quota), r.accepted >= r.quota, json!({ "accepted": r.accepted, "attempts": r.attempts }));
    ev.require(format!("{}: zero counterexamples", r.name), r.failures.is_empty(), &r.failures);
    ev.fact("suite", r);
}

fn lemma_lifting(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::lifting_suite(seed, 500));
}

fn lemma_independent_pairs(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::independent_pairs_suite(seed, 100));
}

fn lemma_four_cycle(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::four_cycle_suite(seed, 100));
}

fn lemma_dense_sets(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::dense_sets_suite(seed, 100));
}

fn lemma_b_four_cycle(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::b_four_cycle_suite(seed, 100));
}

fn lemma_b_dense_sets(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::b_dense_sets_suite(seed, 100));
}

fn lemma_sparse_lift(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::sparse_lift_suite(seed, 300));
}

fn property_blow_up_join(seed: u64, ev: &mut Evidence) {
    suite(ev, sampling::identity_suite(seed, 300));
}

fn enumerate_smallest(_: u64, ev: &mut Evidence) {
    let r = smallest_four_chromatic_locally_bipartite(7).expect("n <= 7");
    for l in &r.levels {
        let want_some = l.n == 7;
        ev.require(format!("n = {}: witnesses {}", l.n, if want_some { "exist" } else { "absent" }), (l.witnesses > 0) == want_some, l.witnesses);
    }
    ev.require("a 7-vertex witness is H0", r.moser_witness.is_some(), &r.smallest_classes);
    if let Some(w) = &r.moser_witness {
        let g = crate::format::parse_graph6(w.as_bytes()).expect("own output");
        ev.require("witness re-validates", is_locally_bipartite(&g) && is_k_colourable(&g, 3).is_none(), w);
    }
    ev.fact("report", r);
}

fn threshold_table(_: u64, ev: &mut Evidence) {
    let t = ThresholdTable::new(4, 4);
    let bad = t.cross_check();
    ev.require("table cross-checks", bad.is_empty(), &bad);
    ev.fact("rows", t.rows);
}
