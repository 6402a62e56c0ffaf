//! Homomorphisms, subgraph embeddings and isomorphism.
//!
//! Every search is exhaustive: a `None` result means the full search tree was
//! explored, and [`SearchOutcome::nodes`] records how many assignments were
//! tried.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::catalog::{blow_up, blow_up_origin, GraphId};
use crate::graph::Graph;

/// A vertex map `V(G) -> V(H)` sending edges to edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Homomorphism {
    map: Vec<usize>,
    injective: bool,
    surjective: bool,
}

impl Homomorphism {
    /// Wrap a map into a target of order `target_n`; flags are computed here.
    /// Use [`Homomorphism::validate`] to check edge preservation.
    pub fn new(map: Vec<usize>, target_n: usize) -> Self {
        let image: VertexSet = map.iter().copied().filter(|&x| x < target_n).collect();
        Homomorphism {
            injective: image.len() == map.len(),
            surjective: image.len() == target_n && map.iter().all(|&x| x < target_n),
            map,
        }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.map[v]
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn is_injective(&self) -> bool {
        self.injective
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// Independent check: total, in range, every edge mapped to an edge.
    pub fn validate(&self, src: &Graph, dst: &Graph) -> bool {
        self.map.len() == src.n()
            && self.map.iter().all(|&x| x < dst.n())
            && src.edges().all(|(u, v)| dst.has_edge(self.map[u], self.map[v]))
    }

    /// Injective and non-edges map to non-edges.
    pub fn is_induced_embedding(&self, src: &Graph, dst: &Graph) -> bool {
        self.validate(src, dst)
            && self.injective
            && src
                .non_edges()
                .all(|(u, v)| !dst.has_edge(self.map[u], self.map[v]))
    }

    /// `then ∘ self`.
    pub fn compose(&self, then: &Homomorphism, final_n: usize) -> Homomorphism {
        Homomorphism::new(self.map.iter().map(|&x| then.map[x]).collect(), final_n)
    }
}

/// What kind of map to search for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Hom,
    /// Injective homomorphism: `G` is a (not necessarily induced) subgraph.
    Injective,
    /// Injective, and non-edges are preserved too.
    Induced,
    Isomorphism,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub witness: Option<Homomorphism>,
    /// Assignments tried; for a negative answer this is the exhaustion
    /// certificate.
    pub nodes: u64,
}

/// Source order in which every vertex after the first of its component has
/// an earlier neighbour. Starts at the highest-degree vertex (lowest index on
/// ties) and then prefers most placed neighbours, then degree, then index.
fn connected_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut placed = VertexSet::new();
    while order.len() < g.n() {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in g.vertices().iter().filter(|v| !placed.contains(*v)) {
            let key = ((g.neighbours(v) & placed).len(), g.degree(v), v);
            let better = match best {
                None => true,
                Some((p, d, _)) => key.0 > p || (key.0 == p && key.1 > d),
            };
            if better {
                best = Some(key);
            }
        }
        let (_, _, v) = best.expect("unplaced vertex exists");
        placed.insert(v);
        order.push(v);
    }
    order
}

/// Stable colour refinement run jointly on two graphs so that colour ids are
/// comparable across them.
pub fn refine_colours(g: &Graph, h: &Graph) -> (Vec<u32>, Vec<u32>) {
    let mut cg: Vec<u32> = g.degrees().iter().map(|&d| d as u32).collect();
    let mut ch: Vec<u32> = h.degrees().iter().map(|&d| d as u32).collect();
    let classes = |a: &[u32], b: &[u32]| {
        let mut s: Vec<u32> = a.iter().chain(b).copied().collect();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    let mut count = classes(&cg, &ch);
    loop {
        let mut ids: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
        let mut signature = |graph: &Graph, col: &[u32], v: usize| {
            let mut nb: Vec<u32> = graph.neighbours(v).iter().map(|w| col[w]).collect();
            nb.sort_unstable();
            let next = ids.len() as u32;
            *ids.entry((col[v], nb)).or_insert(next)
        };
        let ng: Vec<u32> = (0..g.n()).map(|v| signature(g, &cg, v)).collect();
        let nh: Vec<u32> = (0..h.n()).map(|v| signature(h, &ch, v)).collect();
        cg = ng;
        ch = nh;
        let next = classes(&cg, &ch);
        if next == count {
            return (cg, ch);
        }
        count = next;
    }
}

fn histogram(c: &[u32]) -> Vec<u32> {
    let mut s = c.to_vec();
    s.sort_unstable();
    s
}

struct Search<'a> {
    src: &'a Graph,
    dst: &'a Graph,
    mode: Mode,
    order: Vec<usize>,
    levels: Vec<Vec<VertexSet>>,
    map: Vec<usize>,
    nodes: u64,
}

impl Search<'_> {
    fn injective(&self) -> bool {
        self.mode != Mode::Hom
    }

    fn rec(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let u = self.order[pos];
        let candidates = self.levels[pos][u];
        for x in candidates.iter() {
            self.nodes += 1;
            let (cur, rest) = self.levels.split_at_mut(pos + 1);
            let next = &mut rest[0];
            next.copy_from_slice(&cur[pos]);
            let hx = self.dst.neighbours(x);
            let mut ok = true;
            for &w in &self.order[pos + 1..] {
                let d = &mut next[w];
                if self.src.has_edge(u, w) {
                    *d &= hx;
                } else if matches!(self.mode, Mode::Induced | Mode::Isomorphism) {
                    *d -= hx;
                }
                if self.mode != Mode::Hom {
                    d.remove(x);
                }
                if d.is_empty() {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.map[u] = x;
                if self.rec(pos + 1) {
                    return true;
                }
            }
        }
        false
    }
}

/// Exhaustive search for a map of the given kind from `src` to `dst`.
pub fn search(src: &Graph, dst: &Graph, mode: Mode) -> SearchOutcome {
    let none = |nodes| SearchOutcome {
        witness: None,
        nodes,
    };
    let (n, m) = (src.n(), dst.n());
    if n == 0 {
        return SearchOutcome {
            witness: Some(Homomorphism::new(Vec::new(), m)),
            nodes: 0,
        };
    }
    if m == 0 {
        return none(0);
    }
    let mut domains = alloc::vec![dst.vertices(); n];
    match mode {
        Mode::Hom => {
            let has_degree = dst.vertices().iter().filter(|&x| dst.degree(x) > 0).collect();
            for (u, d) in domains.iter_mut().enumerate() {
                if src.degree(u) > 0 {
                    *d = has_degree;
                }
            }
            // An odd cycle has no image in a bipartite target.
            if !src.is_bipartite() && dst.is_bipartite() {
                return none(0);
            }
        }
        Mode::Injective | Mode::Induced => {
            if n > m || src.edge_count() > dst.edge_count() {
                return none(0);
            }
            for (u, d) in domains.iter_mut().enumerate() {
                *d = dst
                    .vertices()
                    .iter()
                    .filter(|&x| dst.degree(x) >= src.degree(u))
                    .collect();
            }
        }
        Mode::Isomorphism => {
            if n != m || src.edge_count() != dst.edge_count() {
                return none(0);
            }
            let (cs, cd) = refine_colours(src, dst);
            if histogram(&cs) != histogram(&cd) {
                return none(0);
            }
            for u in 0..n {
                domains[u] = (0..m).filter(|&x| cd[x] == cs[u]).collect();
            }
        }
    }
    if domains.iter().any(VertexSet::is_empty) {
        return none(0);
    }
    let mut levels = alloc::vec![alloc::vec![VertexSet::new(); n]; n + 1];
    levels[0] = domains;
    let mut s = Search {
        src,
        dst,
        mode,
        order: connected_order(src),
        levels,
        map: alloc::vec![usize::MAX; n],
        nodes: 0,
    };
    let found = s.rec(0);
    let _ = s.injective();
    let witness = found.then(|| Homomorphism::new(s.map.clone(), m));
    debug_assert!(witness.as_ref().is_none_or(|h| h.validate(src, dst)));
    SearchOutcome {
        witness,
        nodes: s.nodes,
    }
}

/// A homomorphism `src -> dst`, if one exists.
pub fn find_hom(src: &Graph, dst: &Graph) -> Option<Homomorphism> {
    search(src, dst, Mode::Hom).witness
}

/// An injective homomorphism, i.e. a copy of `src` as a subgraph of `dst`.
pub fn find_injective_hom(src: &Graph, dst: &Graph) -> Option<Homomorphism> {
    search(src, dst, Mode::Injective).witness
}

/// A copy of `src` as an induced subgraph of `dst`.
pub fn find_induced_embedding(src: &Graph, dst: &Graph) -> Option<Homomorphism> {
    search(src, dst, Mode::Induced).witness
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Homomorphism> {
    search(g, h, Mode::Isomorphism).witness
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Whether `g` contains `h` as a (not necessarily induced) subgraph.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_injective_hom(h, g).is_some()
}

/// Keep one representative per isomorphism class, in first-seen order.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| are_isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}

/// Realise `src` as a subgraph of a blow-up of `dst`: class sizes are the
/// preimage sizes of `hom` (at least one), and source vertices are sent to
/// distinct members of their image's class. Returns the blow-up and the
/// injective embedding.
pub fn blow_up_embedding(src: &Graph, dst: &Graph, hom: &Homomorphism) -> crate::Result<(Graph, Homomorphism)> {
    let mut sizes = alloc::vec![0usize; dst.n()];
    for &x in hom.map() {
        sizes[x] += 1;
    }
    for s in &mut sizes {
        *s = (*s).max(1);
    }
    let big = blow_up(dst, &sizes)?;
    let origin = blow_up_origin(&sizes);
    let mut start = alloc::vec![0usize; dst.n()];
    for (v, &o) in origin.iter().enumerate().rev() {
        start[o] = v;
    }
    let mut taken = alloc::vec![0usize; dst.n()];
    let map = hom
        .map()
        .iter()
        .map(|&x| {
            let v = start[x] + taken[x];
            taken[x] += 1;
            v
        })
        .collect();
    let embedding = Homomorphism::new(map, big.n());
    let _ = src;
    Ok((big, embedding))
}

/// For `F` homomorphic to `G`, whether `F` also embeds as an induced
/// subgraph. `None` when `F` is not homomorphic to `G`.
pub fn homomorphic_implies_induced(f: &Graph, g: &Graph) -> Option<bool> {
    find_hom(f, g).map(|_| find_induced_embedding(f, g).is_some())
}

/// Kind of arrow in a homomorphism diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    /// Source is a subgraph of the target.
    Subgraph,
    /// Source is homomorphic to the target.
    Hom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    pub kind: ArrowKind,
}

/// One entry of a homomorphism matrix.
#[derive(Clone, Debug)]
pub enum Relation {
    Hom(Homomorphism),
    NoHom { nodes: u64 },
}

impl Relation {
    pub fn holds(&self) -> bool {
        matches!(self, Relation::Hom(_))
    }

    pub fn witness(&self) -> Option<&Homomorphism> {
        match self {
            Relation::Hom(h) => Some(h),
            Relation::NoHom { .. } => None,
        }
    }
}

/// The full homomorphism matrix over a list of graphs.
#[derive(Clone, Debug)]
pub struct HomRelation {
    /// `matrix[i][j]` relates `graphs[i] -> graphs[j]`.
    pub matrix: Vec<Vec<Relation>>,
}

impl HomRelation {
    pub fn compute(graphs: &[Graph]) -> Self {
        let matrix = graphs
            .iter()
            .map(|g| {
                graphs
                    .iter()
                    .map(|h| {
                        let out = search(g, h, Mode::Hom);
                        match out.witness {
                            Some(w) => Relation::Hom(w),
                            None => Relation::NoHom { nodes: out.nodes },
                        }
                    })
                    .collect()
            })
            .collect();
        HomRelation { matrix }
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.matrix[i][j].holds()
    }
}

/// A disagreement between the computed matrix and the diagram's closure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub from: usize,
    pub to: usize,
    /// Whether the diagram predicts a homomorphism.
    pub expected: bool,
}

#[derive(Clone, Debug)]
pub struct DiagramReport {
    pub relation: HomRelation,
    pub expected: Vec<Vec<bool>>,
    pub mismatches: Vec<Mismatch>,
    /// Subgraph arrows whose containment could not be found.
    pub missing_subgraphs: Vec<Arrow>,
    /// Witnesses failing independent validation.
    pub invalid_witnesses: Vec<(usize, usize)>,
    /// `(i, j, k)` where composing recorded witnesses did not give a valid
    /// homomorphism `i -> k` or the matrix lacks `i -> k`.
    pub transitivity_failures: Vec<(usize, usize, usize)>,
}

impl DiagramReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
            && self.missing_subgraphs.is_empty()
            && self.invalid_witnesses.is_empty()
            && self.transitivity_failures.is_empty()
    }
}

/// Reflexive-transitive closure of the arrows on `n` nodes.
pub fn reachability(n: usize, arrows: &[Arrow]) -> Vec<Vec<bool>> {
    let mut r = alloc::vec![alloc::vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for a in arrows {
        r[a.from][a.to] = true;
    }
    for k in 0..n {
        let through = r[k].clone();
        for row in r.iter_mut() {
            if row[k] {
                for (x, &y) in row.iter_mut().zip(&through) {
                    *x |= y;
                }
            }
        }
    }
    r
}

/// Compute the homomorphism matrix of `graphs` and compare it with the
/// closure of `arrows`.
pub fn verify_hom_diagram(graphs: &[Graph], arrows: &[Arrow]) -> DiagramReport {
    let n = graphs.len();
    let relation = HomRelation::compute(graphs);
    let expected = reachability(n, arrows);
    let mut mismatches = Vec::new();
    let mut invalid_witnesses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if relation.holds(i, j) != expected[i][j] {
                mismatches.push(Mismatch {
                    from: i,
                    to: j,
                    expected: expected[i][j],
                });
            }
            if let Some(w) = relation.matrix[i][j].witness() {
                if !w.validate(&graphs[i], &graphs[j]) {
                    invalid_witnesses.push((i, j));
                }
            }
        }
    }
    let missing_subgraphs = arrows
        .iter()
        .filter(|a| a.kind == ArrowKind::Subgraph)
        .filter(|a| find_injective_hom(&graphs[a.from], &graphs[a.to]).is_none())
        .copied()
        .collect();
    let mut transitivity_failures = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let Some(ij) = relation.matrix[i][j].witness() else { continue };
            for k in 0..n {
                let Some(jk) = relation.matrix[j][k].witness() else { continue };
                let composed = ij.compose(jk, graphs[k].n());
                if !relation.holds(i, k) || !composed.validate(&graphs[i], &graphs[k]) {
                    transitivity_failures.push((i, j, k));
                }
            }
        }
    }
    DiagramReport {
        relation,
        expected,
        mismatches,
        missing_subgraphs,
        invalid_witnesses,
        transitivity_failures,
    }
}

/// Arrows of the containment/homomorphism diagram, indexed into
/// [`GraphId::DIAGRAM`].
pub fn zoo_arrows() -> Vec<Arrow> {
    let idx = |id: GraphId| {
        GraphId::DIAGRAM
            .iter()
            .position(|&d| d == id)
            .expect("diagram graph")
    };
    use ArrowKind::{Hom, Subgraph};
    [
        (GraphId::H0, GraphId::H1, Subgraph),
        (GraphId::H1, GraphId::H2, Subgraph),
        (GraphId::H1, GraphId::H1PlusPlus, Subgraph),
        (GraphId::H2, GraphId::C7bar, Subgraph),
        (GraphId::H2, GraphId::H2Plus, Subgraph),
        (GraphId::H1PlusPlus, GraphId::H2Plus, Hom),
        (GraphId::T0, GraphId::H2Plus, Hom),
    ]
    .into_iter()
    .map(|(a, b, kind)| Arrow {
        from: idx(a),
        to: idx(b),
        kind,
    })
    .collect()
}

/// Explicit homomorphisms drawn for the diagram's dashed arrows.
pub mod witnesses {
    /// `H1++ -> H2+`, source order `a0..a6, a023, a350`, target order
    /// `a0..a6, u`.
    pub const H1PLUSPLUS_TO_H2PLUS: [usize; 9] = [2, 3, 4, 5, 6, 0, 1, 3, 7];
    /// `T0 -> H2+`, source order `v0..v6, t, u1, u6`.
    pub const T0_TO_H2PLUS: [usize; 10] = [0, 1, 3, 4, 3, 4, 6, 7, 5, 2];
}
