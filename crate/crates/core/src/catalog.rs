//! Named graphs and graph constructions.
//!
//! The seven-vertex graphs all share the outer cycle `a0 a1 ... a6`; the
//! remaining edges are chords of that cycle or edges to extra vertices. The
//! isomorphism and edge-chain tests in this module and in `local` guard the
//! transcription.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{vertex_limit, Graph, Rational, WeightedGraph};

/// Identifier of a catalog graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphId {
    /// The Moser spindle.
    H0,
    H1,
    H2,
    /// Complement (equivalently square) of the 7-cycle.
    C7bar,
    /// `H2` plus a vertex of degree three.
    H2Plus,
    T0,
    /// `H1` plus two vertices of degree three.
    H1PlusPlus,
    /// The odd wheel `W_k`, a hub joined to a `k`-cycle.
    Wheel(usize),
}

impl GraphId {
    /// The eight graphs of the locally bipartite zoo, in drawing order.
    pub const ZOO: [GraphId; 8] = [
        GraphId::H0,
        GraphId::H1,
        GraphId::H2,
        GraphId::C7bar,
        GraphId::H2Plus,
        GraphId::T0,
        GraphId::H1PlusPlus,
        GraphId::Wheel(7),
    ];

    /// The seven graphs of the homomorphism diagram.
    pub const DIAGRAM: [GraphId; 7] = [
        GraphId::H0,
        GraphId::H1,
        GraphId::H2,
        GraphId::C7bar,
        GraphId::H2Plus,
        GraphId::H1PlusPlus,
        GraphId::T0,
    ];
}

impl fmt::Display for GraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphId::H0 => f.write_str("H0"),
            GraphId::H1 => f.write_str("H1"),
            GraphId::H2 => f.write_str("H2"),
            GraphId::C7bar => f.write_str("C7bar"),
            GraphId::H2Plus => f.write_str("H2plus"),
            GraphId::T0 => f.write_str("T0"),
            GraphId::H1PlusPlus => f.write_str("H1plusplus"),
            GraphId::Wheel(k) => write!(f, "W{k}"),
        }
    }
}

impl FromStr for GraphId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let id = match lower.as_str() {
            "h0" | "moser" => GraphId::H0,
            "h1" => GraphId::H1,
            "h2" => GraphId::H2,
            "c7bar" => GraphId::C7bar,
            "h2plus" | "h2+" => GraphId::H2Plus,
            "t0" => GraphId::T0,
            "h1plusplus" | "h1++" => GraphId::H1PlusPlus,
            other => {
                let digits = other
                    .strip_prefix('w')
                    .map(|r| r.trim_start_matches('(').trim_end_matches(')'))
                    .ok_or(Error::UnknownGraph)?;
                let k: usize = digits.parse().map_err(|_| Error::UnknownGraph)?;
                GraphId::Wheel(k)
            }
        };
        Ok(id)
    }
}

/// A catalog graph together with its vertex labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub id: GraphId,
    pub graph: Graph,
    /// `(label, vertex)` pairs in vertex order.
    pub labels: Vec<(String, usize)>,
}

impl NamedGraph {
    /// Vertex carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .find(|(l, _)| l == label)
            .map(|&(_, v)| v)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels
            .iter()
            .find(|&&(_, w)| w == v)
            .map(|(l, _)| l.as_str())
    }

    /// Resolve labels to a vertex set. Unknown labels are an error.
    pub fn set(&self, labels: &[&str]) -> Result<VertexSet> {
        labels
            .iter()
            .map(|l| self.vertex(l).ok_or(Error::InvalidParameter("unknown vertex label")))
            .collect()
    }
}

const OUTER: [(usize, usize); 7] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0)];
const H0_CHORDS: [(usize, usize); 4] = [(5, 0), (0, 2), (1, 3), (4, 6)];
const H1_CHORDS: [(usize, usize); 5] = [(3, 5), (5, 0), (0, 2), (2, 4), (6, 1)];
const H2_CHORDS: [(usize, usize); 6] = [(1, 3), (3, 5), (5, 0), (0, 2), (2, 4), (4, 6)];
const C7BAR_CHORDS: [(usize, usize); 7] = [(0, 2), (2, 4), (4, 6), (6, 1), (1, 3), (3, 5), (5, 0)];
/// `u = 7`.
const H2PLUS_EXTRA: [(usize, usize); 3] = [(7, 0), (7, 2), (7, 5)];
/// `t = 7`, `u1 = 8`, `u6 = 9`; `u_i` misses `v_i` on the outer cycle.
const T0_EXTRA: [(usize, usize); 15] = [
    (7, 0),
    (7, 8),
    (7, 9),
    (8, 0),
    (8, 2),
    (8, 3),
    (8, 4),
    (8, 5),
    (8, 6),
    (9, 0),
    (9, 1),
    (9, 2),
    (9, 3),
    (9, 4),
    (9, 5),
];
/// `a023 = 7` and `a350 = 8`, named after their neighbourhoods.
const H1PLUSPLUS_EXTRA: [(usize, usize); 6] = [(7, 0), (7, 2), (7, 3), (8, 3), (8, 5), (8, 0)];

fn indexed_labels(prefix: &str, n: usize) -> Vec<(String, usize)> {
    (0..n).map(|i| (format!("{prefix}{i}"), i)).collect()
}

fn from_parts(n: usize, parts: &[&[(usize, usize)]]) -> Result<Graph> {
    Graph::from_edge_iter(n, parts.iter().flat_map(|p| p.iter().copied()))
}

/// The catalog graph `id` with its labels.
pub fn named(id: GraphId) -> Result<NamedGraph> {
    let (graph, labels) = match id {
        GraphId::H0 => (from_parts(7, &[&OUTER, &H0_CHORDS])?, indexed_labels("a", 7)),
        GraphId::H1 => (from_parts(7, &[&OUTER, &H1_CHORDS])?, indexed_labels("a", 7)),
        GraphId::H2 => (from_parts(7, &[&OUTER, &H2_CHORDS])?, indexed_labels("a", 7)),
        GraphId::C7bar => (
            from_parts(7, &[&OUTER, &C7BAR_CHORDS])?,
            indexed_labels("a", 7),
        ),
        GraphId::H2Plus => {
            let mut labels = indexed_labels("a", 7);
            labels.push(("u".to_string(), 7));
            (from_parts(8, &[&OUTER, &H2_CHORDS, &H2PLUS_EXTRA])?, labels)
        }
        GraphId::T0 => {
            let mut labels = indexed_labels("v", 7);
            labels.push(("t".to_string(), 7));
            labels.push(("u1".to_string(), 8));
            labels.push(("u6".to_string(), 9));
            (from_parts(10, &[&OUTER, &T0_EXTRA])?, labels)
        }
        GraphId::H1PlusPlus => {
            let mut labels = indexed_labels("a", 7);
            labels.push(("a023".to_string(), 7));
            labels.push(("a350".to_string(), 8));
            (
                from_parts(9, &[&OUTER, &H1_CHORDS, &H1PLUSPLUS_EXTRA])?,
                labels,
            )
        }
        GraphId::Wheel(k) => {
            if k < 3 || k % 2 == 0 {
                return Err(Error::InvalidParameter("wheel size must be odd and at least 3"));
            }
            let mut labels = indexed_labels("v", k);
            labels.push(("hub".to_string(), k));
            (wheel(k)?, labels)
        }
    };
    Ok(NamedGraph { id, graph, labels })
}

/// `W_k` with the rim `0..k` and the hub last.
fn wheel(k: usize) -> Result<Graph> {
    let rim = (0..k).map(|i| (i, (i + 1) % k));
    let spokes = (0..k).map(|i| (k, i));
    Graph::from_edge_iter(k + 1, rim.chain(spokes))
}

/// The graph with vertex `v` renamed `perm[v]`.
pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edge_iter(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v])))
        .expect("permutation of a valid graph")
}

/// Edgeless graph on `n` vertices.
pub fn empty(n: usize) -> Result<Graph> {
    Graph::empty(n)
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs at least 3 vertices"));
    }
    Graph::from_edge_iter(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The complete graph `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs at least 1 vertex"));
    }
    Graph::from_edge_iter(n, (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))))
}

pub fn complement(g: &Graph) -> Graph {
    let all = g.vertices();
    let rows = (0..g.n())
        .map(|v| (all - g.neighbours(v)).without(v))
        .collect();
    Graph::from_adjacency(rows).expect("complement has the same order")
}

/// Turán graph `T_r(n)`: complete `r`-partite with parts as equal as
/// possible. Parts are consecutive blocks, larger parts first.
pub fn turan(r: usize, n: usize) -> Result<Graph> {
    if r == 0 || n < r {
        return Err(Error::InvalidParameter("Turán graph needs 1 <= r <= n"));
    }
    let sizes: Vec<usize> = (0..r).map(|i| n / r + usize::from(i < n % r)).collect();
    blow_up(&complete(r)?, &sizes)
}

fn binomial(n: usize, k: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// All `k`-subsets of `{1, ..., n}` as bitmasks (bit `i-1` for element `i`),
/// in lexicographic order of their sorted elements.
pub fn k_subsets(n: usize, k: usize) -> Result<Vec<u64>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter("subset size must satisfy 1 <= k <= n"));
    }
    if n > 64 {
        return Err(Error::InvalidParameter("ground set larger than 64"));
    }
    let count = binomial(n, k).unwrap_or(u128::MAX);
    if count > vertex_limit() as u128 {
        return Err(Error::TooManyVertices {
            n: usize::try_from(count).unwrap_or(usize::MAX),
            limit: vertex_limit(),
        });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().fold(0u64, |m, &i| m | (1u64 << i)));
        // Advance the rightmost index that still has room.
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[pos] += 1;
        for p in (pos + 1)..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
    Ok(out)
}

/// Whether the subset avoids every cyclically consecutive pair `{i, i+1}`
/// and `{n, 1}`.
pub fn is_cyclically_stable(mask: u64, n: usize) -> bool {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let rotated = ((mask << 1) | (mask >> (n - 1))) & full;
    mask & rotated == 0
}

/// Vertex labels of `SG(n, k)`, in lexicographic order.
pub fn schrijver_subsets(n: usize, k: usize) -> Result<Vec<u64>> {
    if k == 0 || k > n {
        return Err(Error::InvalidParameter("subset size must satisfy 1 <= k <= n"));
    }
    // Filter before the size check so large Kneser graphs with small
    // Schrijver subgraphs stay constructible.
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0u64, |m, &i| m | (1u64 << i));
        if is_cyclically_stable(mask, n) {
            out.push(mask);
            if out.len() > vertex_limit() {
                return Err(Error::TooManyVertices {
                    n: out.len(),
                    limit: vertex_limit(),
                });
            }
        }
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            break;
        };
        idx[pos] += 1;
        for p in (pos + 1)..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
    Ok(out)
}

fn disjointness_graph(sets: &[u64]) -> Result<Graph> {
    Graph::from_edge_iter(
        sets.len(),
        (0..sets.len()).flat_map(|i| {
            ((i + 1)..sets.len())
                .filter(move |&j| sets[i] & sets[j] == 0)
                .map(move |j| (i, j))
        }),
    )
}

/// Kneser graph `KG(n, k)`.
pub fn kneser(n: usize, k: usize) -> Result<Graph> {
    disjointness_graph(&k_subsets(n, k)?)
}

/// Schrijver graph `SG(n, k)`: `KG(n, k)` induced on cyclically stable sets.
pub fn schrijver(n: usize, k: usize) -> Result<Graph> {
    disjointness_graph(&schrijver_subsets(n, k)?)
}

/// Join `G + H`: vertices of `G` first, then those of `H`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n() + h.n();
    if n > vertex_limit() {
        return Err(Error::TooManyVertices {
            n,
            limit: vertex_limit(),
        });
    }
    let off = g.n();
    let cross = (0..g.n()).flat_map(|u| (0..h.n()).map(move |v| (u, off + v)));
    Graph::from_edge_iter(
        n,
        g.edges()
            .chain(h.edges().map(|(u, v)| (u + off, v + off)))
            .chain(cross),
    )
}

/// Original vertex of each blow-up vertex, for class sizes `sizes`.
pub fn blow_up_origin(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(v, &s)| core::iter::repeat_n(v, s))
        .collect()
}

/// Replace vertex `v` by an independent class of `sizes[v]` vertices.
///
/// Classes are laid out consecutively in vertex order. A zero size deletes
/// the vertex, which realises a vanishing weight at the limit.
pub fn blow_up(g: &Graph, sizes: &[usize]) -> Result<Graph> {
    if sizes.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: sizes.len(),
        });
    }
    let total: usize = sizes.iter().sum();
    if total > vertex_limit() {
        return Err(Error::TooManyVertices {
            n: total,
            limit: vertex_limit(),
        });
    }
    let origin = blow_up_origin(sizes);
    let mut start = Vec::with_capacity(g.n());
    let mut acc = 0;
    for &s in sizes {
        start.push(acc);
        acc += s;
    }
    let class = |v: usize| VertexSet::range(start[v] + sizes[v]) - VertexSet::range(start[v]);
    let rows = origin
        .iter()
        .map(|&v| {
            g.neighbours(v)
                .iter()
                .fold(VertexSet::new(), |acc, w| acc | class(w))
        })
        .collect();
    Graph::from_adjacency(rows)
}

/// `G(t)`: every vertex blown up by `t >= 1`.
pub fn balanced_blowup(g: &Graph, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter("blow-up factor must be positive"));
    }
    blow_up(g, &alloc::vec![t; g.n()])
}

/// Parameters of the chromatic-threshold lower-bound construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionParams {
    /// `ℓ = a + b - 1`; the construction is locally `ℓ`-partite.
    pub ell: usize,
    pub k: usize,
    /// `0 <= f < k`; the ground set has `n = 2k + f` elements.
    pub f: usize,
    /// Size of each rectangle class and of the apex class; a multiple of `n`.
    pub s: usize,
}

impl ConstructionParams {
    pub fn n(&self) -> usize {
        2 * self.k + self.f
    }

    pub fn validate(&self) -> Result<()> {
        if self.ell < 2 {
            return Err(Error::InvalidParameter("construction needs ell >= 2"));
        }
        if self.k == 0 || self.f >= self.k {
            return Err(Error::InvalidParameter("construction needs 0 <= f < k"));
        }
        if self.s == 0 || !self.s.is_multiple_of(self.n()) {
            return Err(Error::InvalidParameter("s must be a positive multiple of 2k + f"));
        }
        Ok(())
    }
}

/// The blown-up construction together with its vertex layout.
#[derive(Clone, Debug)]
pub struct ThresholdConstruction {
    pub graph: Graph,
    pub params: ConstructionParams,
    /// The `ℓ - 1` rectangle classes, `s` vertices each.
    pub rectangles: Vec<VertexSet>,
    /// Blow-up of the apex `v`.
    pub apex: VertexSet,
    /// The copy of `SG(n, k)`, not blown up.
    pub schrijver: VertexSet,
    /// Subset label of each Schrijver vertex, parallel to `schrijver`.
    pub subsets: Vec<u64>,
}

/// Build the chromatic-threshold construction: `ℓ - 1` rectangles of pair
/// vertices `v_{i,i+1}` (each blown up by `s/n`) forming a complete
/// multipartite graph, an apex class of size `s` joined to every rectangle,
/// and a copy of `SG(n, k)` where a set `A` sees `v_{i,i+1}` iff `i ∈ A` or
/// `i+1 ∈ A`.
///
/// Layout: rectangles first, then the apex class, then the Schrijver copy.
pub fn threshold_construction(params: ConstructionParams) -> Result<ThresholdConstruction> {
    params.validate()?;
    let n = params.n();
    let per_pair = params.s / n;
    let subsets = schrijver_subsets(n, params.k)?;
    let rect_count = params.ell - 1;
    let total = params.ell * params.s + subsets.len();
    if total > vertex_limit() {
        return Err(Error::TooManyVertices {
            n: total,
            limit: vertex_limit(),
        });
    }

    let rect_start = |r: usize| r * params.s;
    let apex_start = rect_count * params.s;
    let sg_start = apex_start + params.s;
    let block = |start: usize, len: usize| VertexSet::range(start + len) - VertexSet::range(start);

    let rectangles: Vec<VertexSet> = (0..rect_count)
        .map(|r| block(rect_start(r), params.s))
        .collect();
    let apex = block(apex_start, params.s);
    let schrijver = block(sg_start, subsets.len());
    let all_rect = rectangles.iter().fold(VertexSet::new(), |a, &r| a | r);

    let mut rows = alloc::vec![VertexSet::new(); total];
    for (r, &rect) in rectangles.iter().enumerate() {
        let others = all_rect - rect;
        for v in rect.iter() {
            rows[v] = others | apex;
        }
        // Pair position i (0-based) stands for {i+1, i+2 mod n}.
        for pos in 0..n {
            let pair = (1u64 << pos) | (1u64 << ((pos + 1) % n));
            let members = block(rect_start(r) + pos * per_pair, per_pair);
            for (j, &a) in subsets.iter().enumerate() {
                if a & pair != 0 {
                    for m in members.iter() {
                        rows[m].insert(sg_start + j);
                    }
                }
            }
        }
    }
    for v in apex.iter() {
        rows[v] = all_rect;
    }
    for (i, &a) in subsets.iter().enumerate() {
        for (j, &b) in subsets.iter().enumerate() {
            if i != j && a & b == 0 {
                rows[sg_start + i].insert(sg_start + j);
            }
        }
    }
    Ok(ThresholdConstruction {
        graph: Graph::from_adjacency(rows)?,
        params,
        rectangles,
        apex,
        schrijver,
        subsets,
    })
}

/// A vertex weighting `ω = base + ε·[v vanishes]` on a catalog graph, where
/// the vanishing vertices carry an arbitrarily small positive weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weighting {
    pub id: GraphId,
    pub base: Vec<u32>,
    pub vanishing: VertexSet,
}

impl Weighting {
    pub fn graph(&self) -> Graph {
        named(self.id).expect("catalog graph").graph
    }

    /// The weighting at a concrete `ε > 0`.
    pub fn at(&self, eps: Rational) -> Result<WeightedGraph> {
        let weights = self
            .base
            .iter()
            .enumerate()
            .map(|(v, &b)| {
                let w = Rational::from_integer(b as i128);
                if self.vanishing.contains(v) {
                    w + eps
                } else {
                    w
                }
            })
            .collect();
        WeightedGraph::new(self.graph(), weights)
    }

    /// `min_v ω(Γ(v)) / ω(V)` with `ε = 0` substituted in numerator and
    /// denominator. Vanishing vertices still take part in the minimum.
    pub fn limit_ratio(&self) -> Rational {
        let g = self.graph();
        let w = |s: VertexSet| s.iter().map(|v| self.base[v] as i128).sum::<i128>();
        let min = (0..g.n()).map(|v| w(g.neighbours(v))).min().unwrap_or(0);
        Rational::new(min, w(g.vertices()))
    }

    /// Class sizes of the limit blow-up: vanishing classes are empty.
    pub fn limit_sizes(&self) -> Vec<usize> {
        self.base.iter().map(|&b| b as usize).collect()
    }

    /// Class sizes realising `ε = 1/m` scaled by `m`: vanishing classes get
    /// one vertex, every other class `m·base`.
    pub fn scaled_sizes(&self, m: usize) -> Vec<usize> {
        self.base
            .iter()
            .enumerate()
            .map(|(v, &b)| m * b as usize + usize::from(self.vanishing.contains(v)))
            .collect()
    }
}

/// The three tightness weightings, on `H2+`, `T0` and `H1++`.
pub fn tightness_weightings() -> [Weighting; 3] {
    let mk = |id, base: &[u32]| Weighting {
        id,
        base: base.to_vec(),
        vanishing: base.iter().enumerate().filter(|(_, &b)| b == 0).map(|(v, _)| v).collect(),
    };
    [
        // a0..a6, u
        mk(GraphId::H2Plus, &[2, 0, 2, 1, 1, 2, 0, 1]),
        // v0..v6, t, u1, u6
        mk(GraphId::T0, &[4, 0, 0, 1, 1, 0, 0, 1, 3, 3]),
        // a0..a6, a023, a350
        mk(GraphId::H1PlusPlus, &[5, 0, 3, 2, 0, 3, 0, 1, 1]),
    ]
}
