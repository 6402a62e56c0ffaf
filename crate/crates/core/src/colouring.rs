//! Exact colouring, clique and independence solvers.
//!
//! Conventions for the empty graph: `χ = ω = α = 0`.

use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::catalog::complement;
use crate::graph::Graph;

const UNCOLOURED: usize = usize::MAX;

/// A colour index in `0..k` for every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colouring {
    colours: Vec<usize>,
}

impl Colouring {
    pub fn new(colours: Vec<usize>) -> Self {
        Colouring { colours }
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    /// Number of distinct colours used.
    pub fn colour_count(&self) -> usize {
        let mut seen = VertexSet::new();
        for &c in &self.colours {
            seen.insert(c);
        }
        seen.len()
    }

    /// Independent check that the colouring covers `g` and no edge is
    /// monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colours.len() == g.n() && g.edges().all(|(u, v)| self.colours[u] != self.colours[v])
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    classes: Vec<VertexSet>,
    uncoloured: VertexSet,
}

enum Pick {
    Done,
    Dead,
    Vertex(usize),
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        if c == self.classes.len() {
            self.classes.push(VertexSet::new());
        }
        self.classes[c].insert(v);
        self.colour[v] = c;
        self.uncoloured.remove(v);
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.classes[c].remove(v);
        if self.classes[c].is_empty() && c + 1 == self.classes.len() {
            self.classes.pop();
        }
        self.colour[v] = UNCOLOURED;
        self.uncoloured.insert(v);
    }

    /// Fewest available colours first (highest saturation), then most
    /// uncoloured neighbours, then lowest index.
    fn pick(&self) -> Pick {
        let used = self.classes.len();
        let fresh = usize::from(used < self.k);
        let mut best: Option<(usize, usize, usize)> = None;
        for v in self.uncoloured.iter() {
            let nb = self.g.neighbours(v);
            let blocked = self.classes.iter().filter(|c| c.intersects(&nb)).count();
            let available = used - blocked + fresh;
            if available == 0 {
                return Pick::Dead;
            }
            let free_degree = (nb & self.uncoloured).len();
            let better = match best {
                None => true,
                Some((a, d, _)) => available < a || (available == a && free_degree > d),
            };
            if better {
                best = Some((available, free_degree, v));
            }
        }
        match best {
            None => Pick::Done,
            Some((_, _, v)) => Pick::Vertex(v),
        }
    }

    fn search(&mut self) -> bool {
        let v = match self.pick() {
            Pick::Done => return true,
            Pick::Dead => return false,
            Pick::Vertex(v) => v,
        };
        let nb = self.g.neighbours(v);
        let used = self.classes.len();
        for c in 0..used {
            if !self.classes[c].intersects(&nb) {
                self.assign(v, c);
                if self.search() {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        // Opening a new colour: all unused colours are interchangeable.
        if used < self.k {
            self.assign(v, used);
            if self.search() {
                return true;
            }
            self.unassign(v, used);
        }
        false
    }
}

/// A proper `k`-colouring of `g`, or `None` if none exists.
///
/// DSATUR branch-and-bound: a maximum clique is precoloured (and doubles as
/// the lower bound), vertices are branched in saturation order with ties
/// broken by free degree then lowest index, and new colours are only ever
/// opened one at a time.
pub fn is_k_colourable(g: &Graph, k: usize) -> Option<Colouring> {
    if g.n() == 0 {
        return Some(Colouring::new(Vec::new()));
    }
    let clique = maximum_clique(g);
    if clique.len() > k {
        return None;
    }
    let mut solver = Dsatur {
        g,
        k,
        colour: alloc::vec![UNCOLOURED; g.n()],
        classes: Vec::with_capacity(k),
        uncoloured: g.vertices(),
    };
    for (c, v) in clique.iter().enumerate() {
        solver.assign(v, c);
    }
    if solver.search() {
        let colouring = Colouring::new(solver.colour);
        debug_assert!(colouring.is_proper(g));
        Some(colouring)
    } else {
        None
    }
}

/// `χ(G)`.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_colouring(g).colour_count()
}

/// A colouring with `χ(G)` colours.
pub fn optimal_colouring(g: &Graph) -> Colouring {
    let mut k = clique_number(g);
    loop {
        if let Some(c) = is_k_colourable(g, k) {
            return c;
        }
        k += 1;
    }
}

/// Pivot maximising `|P ∩ Γ(u)|`, lowest index on ties.
fn pivot(g: &Graph, p: VertexSet, x: VertexSet) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for u in (p | x).iter() {
        let score = (p & g.neighbours(u)).len();
        if best.is_none_or(|(s, _)| score > s) {
            best = Some((score, u));
        }
    }
    best.map(|(_, u)| u)
}

fn max_clique_rec(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, best: &mut VertexSet) {
    if p.is_empty() {
        if x.is_empty() && r.len() > best.len() {
            *best = r;
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    let u = pivot(g, p, x).expect("P is nonempty");
    for v in (p - g.neighbours(u)).iter() {
        let nb = g.neighbours(v);
        max_clique_rec(g, r.with(v), p & nb, x & nb, best);
        p.remove(v);
        x.insert(v);
        if r.len() + p.len() <= best.len() {
            return;
        }
    }
}

/// A maximum clique, found by pivoting Bron–Kerbosch with a size bound.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    maximum_clique_in(g, g.vertices())
}

/// A maximum clique of `G[S]`.
pub fn maximum_clique_in(g: &Graph, s: VertexSet) -> VertexSet {
    let mut best = VertexSet::new();
    max_clique_rec(g, VertexSet::new(), s, VertexSet::new(), &mut best);
    best
}

/// `ω(G)`.
pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

fn has_clique_rec(g: &Graph, size: usize, p: VertexSet, q: usize) -> bool {
    if size >= q {
        return true;
    }
    if size + p.len() < q {
        return false;
    }
    let mut rest = p;
    for v in p.iter() {
        rest.remove(v);
        if has_clique_rec(g, size + 1, rest & g.neighbours(v), q) {
            return true;
        }
        if size + rest.len() < q {
            return false;
        }
    }
    false
}

/// Whether `g` contains a `q`-clique (`q = 0` is always true).
pub fn has_clique(g: &Graph, q: usize) -> bool {
    has_clique_in(g, g.vertices(), q)
}

/// Whether `G[S]` contains a `q`-clique.
pub fn has_clique_in(g: &Graph, s: VertexSet, q: usize) -> bool {
    has_clique_rec(g, 0, s, q)
}

fn cliques_rec(g: &Graph, r: VertexSet, cand: VertexSet, q: usize, out: &mut Vec<VertexSet>) {
    if r.len() == q {
        out.push(r);
        return;
    }
    if r.len() + cand.len() < q {
        return;
    }
    let mut rest = cand;
    for v in cand.iter() {
        rest.remove(v);
        cliques_rec(g, r.with(v), rest & g.neighbours(v), q, out);
    }
}

/// Every `q`-clique exactly once, ordered lexicographically by sorted
/// members. Each clique is grown in increasing vertex order, which is what
/// makes the enumeration duplicate-free.
pub fn cliques_of_size(g: &Graph, q: usize) -> impl Iterator<Item = VertexSet> {
    cliques_of_size_in(g, g.vertices(), q)
}

pub fn cliques_of_size_in(g: &Graph, s: VertexSet, q: usize) -> impl Iterator<Item = VertexSet> {
    let mut out = Vec::new();
    cliques_rec(g, VertexSet::new(), s, q, &mut out);
    out.into_iter()
}

/// A maximum independent set.
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    let set = maximum_clique(&complement(g));
    debug_assert!(g.is_independent(&set));
    set
}

/// `α(G)` with a witness.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let set = maximum_independent_set(g);
    (set.len(), set)
}

/// `χ(G) = k` and deleting any vertex drops the chromatic number to `k - 1`.
pub fn is_vertex_critical(g: &Graph, k: usize) -> bool {
    if chromatic_number(g) != k {
        return false;
    }
    (0..g.n()).all(|v| {
        let h = g.remove_vertex(v).expect("vertex in range");
        is_k_colourable(&h, k - 1).is_some()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{complete, cycle, kneser, named, schrijver, turan, GraphId};

    fn zoo(id: GraphId) -> Graph {
        named(id).unwrap().graph
    }

    #[test]
    fn k4_and_small_cycles() {
        assert!(is_k_colourable(&complete(4).unwrap(), 3).is_none());
        assert_eq!(chromatic_number(&complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&cycle(7).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()).0, 0);
        assert_eq!(chromatic_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn zoo_colourability() {
        let h0 = zoo(GraphId::H0);
        assert!(is_k_colourable(&h0, 3).is_none());
        let c = is_k_colourable(&h0, 4).unwrap();
        assert!(c.is_proper(&h0));
        assert_eq!(chromatic_number(&zoo(GraphId::T0)), 4);
    }

    #[test]
    fn kneser_and_schrijver_chromatic_numbers() {
        assert_eq!(chromatic_number(&kneser(5, 2).unwrap()), 3);
        assert_eq!(chromatic_number(&kneser(4, 2).unwrap()), 2);
        assert!(is_k_colourable(&schrijver(8, 3).unwrap(), 3).is_none());
        assert!(is_vertex_critical(&schrijver(8, 3).unwrap(), 4));
    }

    #[test]
    fn cliques() {
        assert_eq!(clique_number(&zoo(GraphId::C7bar)), 3);
        assert_eq!(cliques_of_size(&complete(4).unwrap(), 2).count(), 6);
        assert!(!has_clique(&turan(3, 9).unwrap(), 4));
        assert!(has_clique(&turan(3, 9).unwrap(), 3));
        assert!(has_clique(&cycle(5).unwrap(), 0));
        let tri: Vec<_> = cliques_of_size(&complete(4).unwrap(), 3).collect();
        assert_eq!(tri[0], VertexSet::from_slice(&[0, 1, 2]));
        assert_eq!(tri[3], VertexSet::from_slice(&[1, 2, 3]));
    }

    #[test]
    fn independence() {
        assert_eq!(independence_number(&cycle(7).unwrap()).0, 3);
        assert_eq!(independence_number(&zoo(GraphId::C7bar)).0, 2);
        let (a, w) = independence_number(&turan(3, 9).unwrap());
        assert_eq!(a, 3);
        assert!(turan(3, 9).unwrap().is_independent(&w));
    }

    #[test]
    fn criticality() {
        assert!(is_vertex_critical(&cycle(5).unwrap(), 3));
        assert!(!is_vertex_critical(&cycle(5).unwrap(), 4));
        // Odd wheels are 4-critical: both hub and rim deletions leave a
        // 3-colourable graph.
        assert!(is_vertex_critical(&zoo(GraphId::Wheel(7)), 4));
        // Adding a pendant vertex destroys criticality.
        let c5p = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        assert!(!is_vertex_critical(&c5p, 3));
    }
}
