//! Locally colourable families, dense and sparse pairs, and finite instance
//! checks of the structural lemmas about them.
//!
//! `F_{a,b}` is the family of `a`-locally `b`-partite graphs: graphs in which
//! the common neighbourhood of every `a`-clique is `b`-colourable. `a = 0`
//! reads as "`G` is `b`-colourable" and `b = 0` as "`G` is `K_{a+1}`-free".

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bitset::VertexSet;
use crate::catalog::{named, GraphId};
use crate::colouring::{chromatic_number, cliques_of_size, cliques_of_size_in, has_clique, has_clique_in, is_k_colourable};
use crate::error::{Error, Result};
use crate::graph::{Graph, Rational};
use crate::hom::{contains_subgraph, dedup_isomorphic};

/// Parameters of the family `F_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub a: usize,
    pub b: usize,
}

impl FamilyParams {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::InvalidParameter("family parameters must be positive"));
        }
        Ok(FamilyParams { a, b })
    }

    /// `ℓ = a + b - 1`.
    pub fn ell(&self) -> usize {
        self.a + self.b - 1
    }

    pub fn contains(&self, g: &Graph) -> bool {
        is_a_locally_b_partite(g, self.a, self.b)
    }
}

/// Whether `G[S]` is `b`-colourable.
pub fn is_colourable_on(g: &Graph, s: VertexSet, b: usize) -> bool {
    match b {
        0 => s.is_empty(),
        1 => g.is_independent(&s),
        2 => g.is_bipartite_on(s),
        _ => {
            if s.len() <= b {
                return true;
            }
            let h = g.induced_subgraph(&s).expect("subset of V(G)");
            is_k_colourable(&h, b).is_some()
        }
    }
}

/// An `a`-clique whose common neighbourhood is not `b`-colourable, if any.
/// Cliques are scanned in lexicographic order, so the witness is the first.
pub fn locally_partite_violation(g: &Graph, a: usize, b: usize) -> Option<VertexSet> {
    // Without an (a+1)-clique every common neighbourhood of an a-clique is
    // empty.
    if !has_clique(g, a + 1) {
        return None;
    }
    cliques_of_size(g, a).find(|k| !is_colourable_on(g, g.common_neighbourhood_unchecked(k), b))
}

/// `G ∈ F_{a,b}`.
pub fn is_a_locally_b_partite(g: &Graph, a: usize, b: usize) -> bool {
    locally_partite_violation(g, a, b).is_none()
}

/// Locally bipartite: `F_{1,2}`.
pub fn is_locally_bipartite(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.is_bipartite_on(g.neighbours(v)))
}

/// A vertex whose neighbourhood is not bipartite, i.e. the hub of an odd
/// wheel.
pub fn odd_wheel_hub(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| !g.is_bipartite_on(g.neighbours(v)))
}

pub fn contains_odd_wheel(g: &Graph) -> bool {
    odd_wheel_hub(g).is_some()
}

/// Membership of one graph along the chain `F_{1,ℓ} ⊂ F_{2,ℓ-1} ⊂ … ⊂ F_{ℓ,1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestingReport {
    /// `memberships[a - 1]` is `G ∈ F_{a, ℓ+1-a}`.
    pub memberships: Vec<bool>,
    /// `G` contains no `K_{ℓ+2}`.
    pub clique_free: bool,
    /// Every inclusion along the chain holds for `G`, and the last family
    /// agrees with `K_{ℓ+2}`-freeness.
    pub consistent: bool,
}

pub fn family_nesting_check(g: &Graph, ell: usize) -> Result<NestingReport> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be positive"));
    }
    let memberships: Vec<bool> = (1..=ell).map(|a| is_a_locally_b_partite(g, a, ell + 1 - a)).collect();
    let clique_free = !has_clique(g, ell + 2);
    let chain = memberships.windows(2).all(|w| !w[0] || w[1]);
    let consistent = chain && memberships[ell - 1] == clique_free;
    Ok(NestingReport {
        memberships,
        clique_free,
        consistent,
    })
}

/// Classification of a pair of distinct vertices at level `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    Adjacent,
    /// Non-adjacent, and the common neighbourhood holds a `b`-clique.
    BDense(usize),
    /// Non-adjacent, and the common neighbourhood is `K_b`-free.
    BSparse(usize),
}

impl PairClass {
    pub fn is_dense(&self) -> bool {
        matches!(self, PairClass::BDense(_))
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self, PairClass::BSparse(_))
    }
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

#[inline]
fn pair_is_dense(g: &Graph, u: usize, v: usize, b: usize) -> bool {
    !g.has_edge(u, v) && has_clique_in(g, g.neighbours(u) & g.neighbours(v), b)
}

pub fn classify_pair(g: &Graph, u: usize, v: usize, b: usize) -> Result<PairClass> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(if g.has_edge(u, v) {
        PairClass::Adjacent
    } else if pair_is_dense(g, u, v, b) {
        PairClass::BDense(b)
    } else {
        PairClass::BSparse(b)
    })
}

/// `D_v`: the vertices forming a `b`-dense pair with `v`.
pub fn dense_set(g: &Graph, v: usize, b: usize) -> Result<VertexSet> {
    check_vertex(g, v)?;
    Ok(g.vertices().iter().filter(|&u| u != v && pair_is_dense(g, u, v, b)).collect())
}

/// The graph on `V(G)` whose edges are the `b`-dense pairs.
pub fn dense_pair_graph(g: &Graph, b: usize) -> Graph {
    let edges = g.non_edges().filter(|&(u, v)| pair_is_dense(g, u, v, b));
    Graph::from_edge_iter(g.n(), edges).expect("same order as G")
}

/// The component of `u` in the dense-pair graph, `u` included.
pub fn quasidense_reachable(g: &Graph, u: usize, b: usize) -> Result<VertexSet> {
    check_vertex(g, u)?;
    let d = dense_pair_graph(g, b);
    let mut seen = VertexSet::singleton(u);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::new();
        for v in frontier.iter() {
            next |= d.neighbours(v);
        }
        next -= seen;
        seen |= next;
        frontier = next;
    }
    Ok(seen)
}

/// Single-edge extensions of a family member that stay in the family.
#[derive(Clone, Debug)]
pub struct EdgeMaximality {
    /// One representative per isomorphism class of `G + uv ∈ F_{a,b}`, with
    /// the first added edge producing it.
    pub extensions: Vec<((usize, usize), Graph)>,
}

impl EdgeMaximality {
    pub fn is_maximal(&self) -> bool {
        self.extensions.is_empty()
    }
}

pub fn edge_extensions(g: &Graph, a: usize, b: usize) -> Result<EdgeMaximality> {
    if !is_a_locally_b_partite(g, a, b) {
        return Err(Error::NotInFamily);
    }
    let staying: Vec<((usize, usize), Graph)> = g
        .non_edges()
        .map(|(u, v)| ((u, v), g.with_edge(u, v).expect("non-edge")))
        .filter(|(_, h)| is_a_locally_b_partite(h, a, b))
        .collect();
    let reps = dedup_isomorphic(staying.iter().map(|(_, h)| h.clone()).collect());
    let extensions = reps
        .into_iter()
        .map(|h| {
            let (e, _) = staying.iter().find(|(_, s)| *s == h).expect("representative");
            (*e, h)
        })
        .collect();
    Ok(EdgeMaximality { extensions })
}

/// `G ∈ F_{a,b}` and adding any non-edge leaves the family.
pub fn is_edge_maximal_in_family(g: &Graph, a: usize, b: usize) -> Result<bool> {
    Ok(edge_extensions(g, a, b)?.is_maximal())
}

/// Outcome of evaluating the lifting inequalities on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingReport {
    pub s: usize,
    pub n: usize,
    pub min_degree: usize,
    /// `b + γ > s`, `s ≥ 1`, and `δ(G) > (1 - 1/(b+γ))|G|`.
    pub applicable: bool,
    /// `|G_X|` and `δ(G_X)` (the latter `None` when `G_X` is empty).
    pub link_order: usize,
    pub link_min_degree: Option<usize>,
    /// `|G_X| ≥ sδ(G) - (s-1)|G|`.
    pub order_bound: bool,
    /// `sδ(G) - (s-1)|G| > (1 - s/(b+γ))|G|`.
    pub order_bound_strict: bool,
    /// `δ(G_X) > (1 - 1/(b - s + γ))|G_X|`.
    pub degree_bound: bool,
}

impl LiftingReport {
    pub fn conclusions_hold(&self) -> bool {
        self.order_bound && self.order_bound_strict && self.degree_bound
    }
}

pub fn lifting_inequality_check(g: &Graph, x: &VertexSet, b: usize, gamma: Rational) -> Result<LiftingReport> {
    let n = g.n();
    let min_degree = g.min_degree()?;
    let s = x.len();
    let link = if s == 0 { g.vertices() } else { g.common_neighbourhood(x)? };
    let link_order = link.len();
    let link_min_degree = link.iter().map(|v| (g.neighbours(v) & link).len()).min();
    let bg = Rational::from_integer(b as i128) + gamma;
    let si = Rational::from_integer(s as i128);
    let ni = Rational::from_integer(n as i128);
    let di = Rational::from_integer(min_degree as i128);
    let applicable = s >= 1 && bg > si && di > (Rational::one() - bg.recip()) * ni;
    let lower = si * di - (si - Rational::one()) * ni;
    let order_bound = Rational::from_integer(link_order as i128) >= lower;
    let order_bound_strict = applicable && lower > (Rational::one() - si / bg) * ni;
    let degree_bound = applicable
        && match link_min_degree {
            Some(d) => {
                let r = bg - si;
                Rational::from_integer(d as i128) > (Rational::one() - r.recip()) * Rational::from_integer(link_order as i128)
            }
            None => false,
        };
    Ok(LiftingReport {
        s,
        n,
        min_degree,
        applicable,
        link_order,
        link_min_degree,
        order_bound,
        order_bound_strict,
        degree_bound,
    })
}

/// Result of checking one lemma on one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceCheck {
    /// The instance does not satisfy the lemma's hypotheses.
    NotApplicable,
    Holds,
    Fails(Counterexample),
}

impl InstanceCheck {
    pub fn is_applicable(&self) -> bool {
        !matches!(self, InstanceCheck::NotApplicable)
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, InstanceCheck::Fails(_))
    }
}

/// Concrete vertices refuting a lemma instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// A pair that should have been dense.
    Pair(usize, usize),
    /// An induced 4-cycle `c0 c1 c2 c3` with both non-edges sparse.
    Cycle([usize; 4]),
    /// `u1, u2 ∈ D_v` with `u1 u2` an edge.
    DenseEdge { v: usize, u1: usize, u2: usize },
    /// `G_X` has a larger chromatic number than allowed.
    LinkChromatic { chi: usize },
    /// A pair sparse in `G` but dense in `G_X` (original labels).
    LiftedPair(usize, usize),
}

fn half_degree(g: &Graph) -> bool {
    g.n() > 0 && 2 * g.min_degree().expect("non-empty") > g.n()
}

/// Lemma: `δ(G) > |G|/2` ⇒ every pair inside any largest independent set is
/// dense. All maximum independent sets are checked.
pub fn check_independent_pairs_dense(g: &Graph) -> InstanceCheck {
    if !half_degree(g) {
        return InstanceCheck::NotApplicable;
    }
    let co = crate::catalog::complement(g);
    let alpha = crate::colouring::clique_number(&co);
    for i in cliques_of_size(&co, alpha) {
        let members: Vec<usize> = i.iter().collect();
        for (k, &u) in members.iter().enumerate() {
            for &v in &members[k + 1..] {
                if !pair_is_dense(g, u, v, 2) {
                    return InstanceCheck::Fails(Counterexample::Pair(u, v));
                }
            }
        }
    }
    InstanceCheck::Holds
}

/// Induced 4-cycles `a b c d` (each once) with `G_C` containing a
/// `q`-clique.
fn induced_four_cycles(g: &Graph, q: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for (a, c) in g.non_edges() {
        let common = g.neighbours(a) & g.neighbours(c);
        for b in common.iter() {
            for d in common.iter().filter(|&d| d > b && !g.has_edge(b, d)) {
                // Each induced C4 has two diagonals; keep it once, from its
                // diagonal with the smaller first vertex.
                if a < b.min(d) {
                    let gc = common & g.neighbours(b) & g.neighbours(d);
                    if has_clique_in(g, gc, q) {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

/// Lemma: `δ(G) > |G|/2` ⇒ every induced 4-cycle has a dense non-edge.
pub fn check_four_cycle_dense_diagonal(g: &Graph) -> InstanceCheck {
    if !half_degree(g) {
        return InstanceCheck::NotApplicable;
    }
    for c in induced_four_cycles(g, 0) {
        if !pair_is_dense(g, c[0], c[2], 2) && !pair_is_dense(g, c[1], c[3], 2) {
            return InstanceCheck::Fails(Counterexample::Cycle(c));
        }
    }
    InstanceCheck::Holds
}

/// Lemma, level `b ≥ 2`: `δ(G) > (1 - 1/b)|G|` ⇒ every induced 4-cycle `C`
/// whose common neighbourhood holds a `(b-2)`-clique has a `b`-dense
/// non-edge.
pub fn check_four_cycle_b_dense_diagonal(g: &Graph, b: usize) -> InstanceCheck {
    if b < 2 || g.n() == 0 || b * g.min_degree().expect("non-empty") <= (b - 1) * g.n() {
        return InstanceCheck::NotApplicable;
    }
    for c in induced_four_cycles(g, b - 2) {
        if !pair_is_dense(g, c[0], c[2], b) && !pair_is_dense(g, c[1], c[3], b) {
            return InstanceCheck::Fails(Counterexample::Cycle(c));
        }
    }
    InstanceCheck::Holds
}

fn dense_sets_independent(g: &Graph, b: usize) -> InstanceCheck {
    for v in 0..g.n() {
        let d = dense_set(g, v, b).expect("vertex in range");
        for u1 in d.iter() {
            if let Some(u2) = (g.neighbours(u1) & d).iter().find(|&u2| u2 > u1) {
                return InstanceCheck::Fails(Counterexample::DenseEdge { v, u1, u2 });
            }
        }
    }
    InstanceCheck::Holds
}

/// Lemma: locally bipartite and `H0`-free ⇒ every `D_v` is independent.
pub fn check_dense_sets_independent(g: &Graph) -> InstanceCheck {
    let h0 = named(GraphId::H0).expect("catalog graph").graph;
    if !is_locally_bipartite(g) || contains_subgraph(g, &h0) {
        return InstanceCheck::NotApplicable;
    }
    dense_sets_independent(g, 2)
}

/// Lemma, level `b ≥ 2`: locally `b`-partite with
/// `δ(G) > 2b/(2b+3)·|G|` ⇒ every `b`-dense set `D_v` is independent.
pub fn check_b_dense_sets_independent(g: &Graph, b: usize) -> InstanceCheck {
    if b < 2 || g.n() == 0 || (2 * b + 3) * g.min_degree().expect("non-empty") <= 2 * b * g.n() {
        return InstanceCheck::NotApplicable;
    }
    if !is_a_locally_b_partite(g, 1, b) {
        return InstanceCheck::NotApplicable;
    }
    dense_sets_independent(g, b)
}

/// Remark to the lifting lemma with `γ = 0`: for `G ∈ F_{1,b}` with
/// `δ(G) > (1 - 1/b)|G|` and `X` an `s`-clique, `1 ≤ s ≤ b - 1`, the link
/// `G_X` is `(b-s+1)`-colourable and every pair of `G_X` that is `b`-sparse
/// in `G` is `(b-s)`-sparse in `G_X`.
pub fn check_sparse_pairs_lift(g: &Graph, x: &VertexSet, b: usize) -> InstanceCheck {
    let s = x.len();
    if s == 0 || s >= b || g.n() == 0 || x.last().is_some_and(|v| v >= g.n()) || !g.is_clique(x) {
        return InstanceCheck::NotApplicable;
    }
    if b * g.min_degree().expect("non-empty") <= (b - 1) * g.n() || !is_a_locally_b_partite(g, 1, b) {
        return InstanceCheck::NotApplicable;
    }
    let gamma = g.common_neighbourhood_unchecked(x);
    let link = g.induced_subgraph(&gamma).expect("subset of V(G)");
    let chi = chromatic_number(&link);
    if chi > b - s + 1 {
        return InstanceCheck::Fails(Counterexample::LinkChromatic { chi });
    }
    let index: Vec<usize> = gamma.iter().collect();
    for (i, j) in link.non_edges() {
        let (u, v) = (index[i], index[j]);
        if !pair_is_dense(g, u, v, b) && pair_is_dense(&link, i, j, b - s) {
            return InstanceCheck::Fails(Counterexample::LiftedPair(u, v));
        }
    }
    InstanceCheck::Holds
}

/// A 5-subset of `V(G)` inducing a bipartite graph, if any. For `H0` every
/// five vertices span a triangle or a 5-cycle, so this is `None`.
pub fn bipartite_five_subset(g: &Graph) -> Option<VertexSet> {
    if g.n() < 5 {
        return None;
    }
    let everything = crate::catalog::complete(g.n()).expect("n ≥ 5");
    cliques_of_size_in(&everything, g.vertices(), 5).find(|&s| g.is_bipartite_on(s))
}

/// Best possible minimum-degree ratio `δ/|G|` as an exact rational.
pub fn min_degree_ratio(g: &Graph) -> Result<Rational> {
    let d = g.min_degree()?;
    if g.n() == 0 {
        return Ok(Rational::zero());
    }
    Ok(Rational::new(d as i128, g.n() as i128))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete, cycle, join, turan};

    fn zoo(id: GraphId) -> Graph {
        named(id).unwrap().graph
    }

    #[test]
    fn turan_membership() {
        for (a, b) in [(1, 2), (2, 2), (1, 3)] {
            let g = turan(a + b, 3 * (a + b)).unwrap();
            assert!(is_a_locally_b_partite(&g, a, b), "({a},{b})");
        }
        assert!(!is_a_locally_b_partite(&turan(4, 8).unwrap(), 1, 2));
    }

    #[test]
    fn zoo_membership() {
        for id in GraphId::ZOO {
            let g = zoo(id);
            let wheel = matches!(id, GraphId::Wheel(_));
            assert_eq!(is_a_locally_b_partite(&g, 1, 2), !wheel, "{id}");
            assert_eq!(contains_odd_wheel(&g), wheel);
            assert_eq!(is_locally_bipartite(&g), !wheel);
        }
        let w = zoo(GraphId::Wheel(7));
        assert_eq!(locally_partite_violation(&w, 1, 2), Some(VertexSet::singleton(7)));
        assert!(contains_odd_wheel(&complete(4).unwrap()));
    }

    #[test]
    fn apex_over_h0() {
        let g = join(&complete(1).unwrap(), &zoo(GraphId::H0)).unwrap();
        assert!(!is_a_locally_b_partite(&g, 1, 3));
        assert!(!is_a_locally_b_partite(&g, 1, 2));
        assert!(is_a_locally_b_partite(&g, 1, 4));
    }

    #[test]
    fn zero_parameters_read_naturally() {
        let c5 = cycle(5).unwrap();
        assert!(!is_a_locally_b_partite(&c5, 0, 2));
        assert!(is_a_locally_b_partite(&c5, 0, 3));
        assert!(is_a_locally_b_partite(&c5, 2, 0));
        assert!(!is_a_locally_b_partite(&c5, 1, 0));
    }

    #[test]
    fn nesting() {
        let r = family_nesting_check(&turan(3, 9).unwrap(), 2).unwrap();
        assert!(r.consistent);
        assert_eq!(r.memberships, [true, true]);
        let r = family_nesting_check(&complete(5).unwrap(), 2).unwrap();
        assert!(r.consistent && !r.clique_free);
    }

    #[test]
    fn pair_classes() {
        let h = named(GraphId::H0).unwrap();
        let (a0, a3) = (h.vertex("a0").unwrap(), h.vertex("a3").unwrap());
        // Γ(a0) ∩ Γ(a3) = {a1, a2}, an edge.
        assert_eq!(classify_pair(&h.graph, a0, a3, 2).unwrap(), PairClass::BDense(2));
        let (a1, a6) = (h.vertex("a1").unwrap(), h.vertex("a6").unwrap());
        assert_eq!(classify_pair(&h.graph, a1, a6, 2).unwrap(), PairClass::BSparse(2));
        assert_eq!(classify_pair(&h.graph, a0, a1, 2).unwrap(), PairClass::Adjacent);
        let c7 = zoo(GraphId::C7bar);
        for (u, v) in c7.non_edges() {
            assert_eq!(classify_pair(&c7, u, v, 2).unwrap(), PairClass::BDense(2));
        }
        let k4e = complete(4).unwrap().without_edge(0, 1);
        assert_eq!(classify_pair(&k4e, 0, 1, 2).unwrap(), PairClass::BDense(2));
        assert_eq!(classify_pair(&k4e, 0, 0, 2), Err(Error::SameVertex(0)));
    }

    #[test]
    fn dense_sets() {
        let c5 = cycle(5).unwrap();
        assert!(dense_set(&c5, 0, 2).unwrap().is_empty());
        assert_eq!(dense_pair_graph(&c5, 2).edge_count(), 0);
        assert_eq!(quasidense_reachable(&c5, 2, 2).unwrap(), VertexSet::singleton(2));
        let t = turan(3, 9).unwrap();
        assert_eq!(dense_set(&t, 0, 2).unwrap(), VertexSet::from_slice(&[1, 2]));
        assert_eq!(dense_set(&t, 4, 2).unwrap(), VertexSet::from_slice(&[3, 5]));
    }

    #[test]
    fn dense_pair_graph_of_t0() {
        let t0 = named(GraphId::T0).unwrap();
        let d = dense_pair_graph(&t0.graph, 2);
        let cyc = ["v0", "v2", "v4", "v6", "t", "v1", "v3", "v5"];
        let mut expected: Vec<(usize, usize)> = (0..8)
            .map(|i| (t0.vertex(cyc[i]).unwrap(), t0.vertex(cyc[(i + 1) % 8]).unwrap()))
            .collect();
        expected.push((t0.vertex("u1").unwrap(), t0.vertex("u6").unwrap()));
        let expected = Graph::from_edges(t0.graph.n(), &expected).unwrap();
        assert_eq!(d, expected);
        let comp = quasidense_reachable(&t0.graph, 0, 2).unwrap();
        assert_eq!(comp, t0.set(&["v0", "v1", "v2", "v3", "v4", "v5", "v6", "t"]).unwrap());
    }

    #[test]
    fn dense_pair_graph_of_h1plusplus() {
        let h = named(GraphId::H1PlusPlus).unwrap();
        let d = dense_pair_graph(&h.graph, 2);
        let cyc = ["a1", "a023", "a4", "a350", "a6", "a2", "a5"];
        let mut expected: Vec<(usize, usize)> = (0..7)
            .map(|i| (h.vertex(cyc[i]).unwrap(), h.vertex(cyc[(i + 1) % 7]).unwrap()))
            .collect();
        expected.push((h.vertex("a0").unwrap(), h.vertex("a3").unwrap()));
        let expected = Graph::from_edges(h.graph.n(), &expected).unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn edge_maximality() {
        assert!(is_edge_maximal_in_family(&zoo(GraphId::C7bar), 1, 2).unwrap());
        assert!(is_edge_maximal_in_family(&zoo(GraphId::H2Plus), 1, 2).unwrap());
        let h2 = edge_extensions(&zoo(GraphId::H2), 1, 2).unwrap();
        assert_eq!(h2.extensions.len(), 1);
        assert!(crate::hom::are_isomorphic(&h2.extensions[0].1, &zoo(GraphId::C7bar)));
        let h1 = edge_extensions(&zoo(GraphId::H1), 1, 2).unwrap();
        assert_eq!(h1.extensions.len(), 1);
        assert!(crate::hom::are_isomorphic(&h1.extensions[0].1, &zoo(GraphId::H2)));
        let h0 = edge_extensions(&zoo(GraphId::H0), 1, 2).unwrap();
        assert_eq!(h0.extensions.len(), 2);
        assert!(h0.extensions.iter().any(|(_, g)| crate::hom::are_isomorphic(g, &zoo(GraphId::H1))));
        assert_eq!(
            edge_extensions(&zoo(GraphId::Wheel(7)), 1, 2).unwrap_err(),
            Error::NotInFamily
        );
    }

    #[test]
    fn lifting_example() {
        let g = turan(4, 12).unwrap();
        let r = lifting_inequality_check(&g, &VertexSet::singleton(0), 3, Rational::new(1, 7)).unwrap();
        assert!(r.applicable);
        assert!(r.conclusions_hold());
        assert_eq!((r.link_order, r.link_min_degree), (9, Some(6)));
        let all = g.vertices();
        let r = lifting_inequality_check(&g, &all, 3, Rational::new(1, 7)).unwrap();
        assert!(!r.applicable);
    }

    #[test]
    fn h0_five_subsets() {
        assert_eq!(bipartite_five_subset(&zoo(GraphId::H0)), None);
        assert!(bipartite_five_subset(&cycle(6).unwrap()).is_some());
    }

    #[test]
    fn lemma_checks_on_fixed_graphs() {
        let c7 = zoo(GraphId::C7bar);
        assert_eq!(check_independent_pairs_dense(&c7), InstanceCheck::Holds);
        assert_eq!(check_four_cycle_dense_diagonal(&c7), InstanceCheck::Holds);
        // C7bar contains H0, so the lemma says nothing about it.
        assert_eq!(check_dense_sets_independent(&c7), InstanceCheck::NotApplicable);
        assert_eq!(check_dense_sets_independent(&turan(3, 9).unwrap()), InstanceCheck::Holds);
        assert_eq!(check_dense_sets_independent(&zoo(GraphId::H0)), InstanceCheck::NotApplicable);
        assert_eq!(check_independent_pairs_dense(&cycle(5).unwrap()), InstanceCheck::NotApplicable);
        let t = turan(3, 9).unwrap();
        assert_eq!(check_sparse_pairs_lift(&t, &VertexSet::singleton(0), 2), InstanceCheck::Holds);
        let t4 = turan(4, 8).unwrap();
        assert_eq!(check_b_dense_sets_independent(&t4, 3), InstanceCheck::Holds);
        assert_eq!(check_four_cycle_b_dense_diagonal(&t4, 3), InstanceCheck::Holds);
    }
}
