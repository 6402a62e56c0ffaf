//! Immutable simple undirected graphs and their basic quantities.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Zero};

use crate::bitset::{VertexSet, CAPACITY};
use crate::error::{Error, Result};

/// Exact rational used by every ratio and weighting.
pub type Rational = num_rational::Ratio<i128>;

/// Default vertex limit: one machine word per adjacency row.
pub const DEFAULT_VERTEX_LIMIT: usize = 64;

static VERTEX_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_VERTEX_LIMIT);

/// Current vertex limit enforced by every constructor.
pub fn vertex_limit() -> usize {
    VERTEX_LIMIT.load(Ordering::Relaxed)
}

/// Raise (or lower) the vertex limit. Values above [`CAPACITY`] are rejected.
pub fn set_vertex_limit(limit: usize) -> Result<()> {
    if limit == 0 || limit > CAPACITY {
        return Err(Error::InvalidParameter("vertex limit must be in 1..=256"));
    }
    VERTEX_LIMIT.store(limit, Ordering::Relaxed);
    Ok(())
}

fn check_size(n: usize) -> Result<()> {
    let limit = vertex_limit();
    if n > limit {
        Err(Error::TooManyVertices { n, limit })
    } else {
        Ok(())
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex; it is kept symmetric
/// and irreflexive by every constructor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph {
            adj: alloc::vec![VertexSet::new(); n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edge_iter(n, edges.iter().copied())
    }

    pub fn from_edge_iter<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Build from adjacency rows, symmetrising and rejecting loops.
    pub fn from_adjacency(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        check_size(n)?;
        let mut adj = rows;
        for u in 0..n {
            if adj[u].contains(u) {
                return Err(Error::SelfLoop(u));
            }
            if let Some(v) = adj[u].last() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            for v in adj[u].iter() {
                adj[v].insert(u);
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n())
    }

    /// `Γ(v)`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |u| {
            ((u + 1)..n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// `δ(G)`.
    pub fn min_degree(&self) -> Result<usize> {
        self.adj
            .iter()
            .map(VertexSet::len)
            .min()
            .ok_or(Error::EmptyGraph)
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        match x.last() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    /// `Γ(X)`: vertices adjacent to every member of `X`.
    pub fn common_neighbourhood(&self, x: &VertexSet) -> Result<VertexSet> {
        if x.is_empty() {
            return Err(Error::EmptyQuerySet);
        }
        self.check_set(x)?;
        Ok(self.common_neighbourhood_unchecked(x))
    }

    /// `Γ(X)` with `Γ(∅) = V(G)`, for internal callers that iterate cliques.
    #[inline]
    pub(crate) fn common_neighbourhood_unchecked(&self, x: &VertexSet) -> VertexSet {
        x.iter()
            .fold(self.vertices(), |acc, v| acc & self.adj[v])
    }

    /// `G[S]`, relabelled `0..|S|` in ascending original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        self.check_set(s)?;
        let index: Vec<usize> = s.iter().collect();
        let mut pos = [usize::MAX; CAPACITY];
        for (i, &v) in index.iter().enumerate() {
            pos[v] = i;
        }
        let adj = index
            .iter()
            .map(|&v| (self.adj[v] & *s).iter().map(|w| pos[w]).collect())
            .collect();
        Ok(Graph { adj })
    }

    /// `G_X = G[Γ(X)]`.
    pub fn link(&self, x: &VertexSet) -> Result<Graph> {
        let gamma = self.common_neighbourhood(x)?;
        self.induced_subgraph(&gamma)
    }

    /// `G - v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        self.induced_subgraph(&self.vertices().without(v))
    }

    /// A copy of the graph with `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        for w in [u, v] {
            if w >= self.n() {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n() });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.adj[u].insert(v);
        g.adj[v].insert(u);
        Ok(g)
    }

    /// A copy of the graph with `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        g
    }

    /// `e(X, G) = Σ_{x∈X} deg(x)`.
    pub fn ordered_edge_count(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        let by_degree: usize = x.iter().map(|v| self.degree(v)).sum();
        debug_assert_eq!(by_degree, self.ordered_edge_count_by_target(x));
        Ok(by_degree)
    }

    /// `Σ_{v∈G} |Γ(v) ∩ X|`, the other summation order of `e(X, G)`.
    pub fn ordered_edge_count_by_target(&self, x: &VertexSet) -> usize {
        self.adj.iter().map(|row| (*row & *x).len()).sum()
    }

    /// Whether `G[S]` has no edges.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Whether `S` induces a complete graph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    /// Whether the graph is 2-colourable, checked by breadth-first search.
    pub fn is_bipartite(&self) -> bool {
        self.is_bipartite_on(self.vertices())
    }

    /// Whether `G[S]` is 2-colourable.
    ///
    /// Breadth-first layering: `G[S]` is bipartite iff no edge joins two
    /// vertices of the same layer.
    pub fn is_bipartite_on(&self, s: VertexSet) -> bool {
        let mut unseen = s;
        while let Some(root) = unseen.first() {
            let mut frontier = VertexSet::singleton(root);
            let mut seen = frontier;
            while !frontier.is_empty() {
                if frontier.iter().any(|v| self.adj[v].intersects(&frontier)) {
                    return false;
                }
                let mut next = VertexSet::new();
                for v in frontier.iter() {
                    next |= self.adj[v] & s;
                }
                next -= seen;
                seen |= next;
                frontier = next;
            }
            unseen -= seen;
        }
        true
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A graph with an exact nonnegative rational weight on each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<Rational>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::LengthMismatch {
                expected: graph.n(),
                found: weights.len(),
            });
        }
        if let Some(v) = weights.iter().position(|w| *w < Rational::zero()) {
            return Err(Error::NegativeWeight(v));
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn unit(graph: Graph) -> Self {
        let weights = alloc::vec![Rational::one(); graph.n()];
        WeightedGraph { graph, weights }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight_of(&self, s: &VertexSet) -> Rational {
        s.iter().map(|v| self.weights[v]).sum()
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.iter().copied().sum()
    }

    /// `ω(X, G) = Σ_{x∈X} ω(x)·deg(x)`.
    pub fn weighted_incidence(&self, x: &VertexSet) -> Result<Rational> {
        self.graph.check_set(x)?;
        let by_source: Rational = x
            .iter()
            .map(|v| self.weights[v] * Rational::from_integer(self.graph.degree(v) as i128))
            .sum();
        debug_assert_eq!(by_source, self.weighted_incidence_by_target(x));
        Ok(by_source)
    }

    /// `Σ_{v∈G} ω(Γ(v) ∩ X)`.
    pub fn weighted_incidence_by_target(&self, x: &VertexSet) -> Rational {
        (0..self.graph.n())
            .map(|v| self.weight_of(&(self.graph.neighbours(v) & *x)))
            .sum()
    }

    /// `min_v ω(Γ(v)) / ω(V)`: the limiting `δ/n` of blow-ups with class
    /// sizes proportional to the weights.
    pub fn min_degree_ratio(&self) -> Result<Rational> {
        if self.graph.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        if let Some(v) = self.weights.iter().position(Zero::is_zero) {
            return Err(Error::EmptyBlowUpClass(v));
        }
        let total = self.total_weight();
        let min = (0..self.graph.n())
            .map(|v| self.weight_of(&self.graph.neighbours(v)))
            .min()
            .ok_or(Error::EmptyGraph)?;
        Ok(min / total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert!(matches!(
            Graph::empty(DEFAULT_VERTEX_LIMIT + 1),
            Err(Error::TooManyVertices { .. })
        ));
    }

    #[test]
    fn common_neighbourhood_of_edge_in_k4() {
        let g = k(4);
        let x = VertexSet::from_slice(&[0, 1]);
        assert_eq!(g.common_neighbourhood(&x).unwrap(), VertexSet::from_slice(&[2, 3]));
        assert_eq!(
            g.common_neighbourhood(&VertexSet::new()),
            Err(Error::EmptyQuerySet)
        );
    }

    #[test]
    fn ordered_edge_count_of_triangle() {
        let g = k(3);
        assert_eq!(g.ordered_edge_count(&g.vertices()).unwrap(), 6);
        assert_eq!(k(5).min_degree().unwrap(), 4);
        assert_eq!(Graph::empty(0).unwrap().min_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn bipartite_detection() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(!c5.is_bipartite());
        assert!(c6.is_bipartite());
        assert!(c5.is_bipartite_on(c5.vertices().without(0)));
        assert!(Graph::empty(4).unwrap().is_bipartite());
    }

    #[test]
    fn zero_weight_single_vertex_incidence() {
        let g = k(3);
        let wg = WeightedGraph::new(g, alloc::vec![Rational::zero(), Rational::one(), Rational::one()])
            .unwrap();
        assert_eq!(
            wg.weighted_incidence(&VertexSet::singleton(0)).unwrap(),
            Rational::zero()
        );
        assert_eq!(wg.min_degree_ratio(), Err(Error::EmptyBlowUpClass(0)));
    }

    #[test]
    fn c5_unit_ratio() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(
            WeightedGraph::unit(c5).min_degree_ratio().unwrap(),
            Rational::new(2, 5)
        );
    }
}
