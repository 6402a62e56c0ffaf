//! Exhaustive search for small 4-chromatic locally bipartite graphs.

use locolor_core::catalog::{named, GraphId};
use locolor_core::colouring::is_k_colourable;
use locolor_core::hom::{are_isomorphic, dedup_isomorphic};
use locolor_core::local::is_locally_bipartite;
use locolor_core::{Graph, VertexSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::emit_graph6;

/// Labelled enumeration is `2^C(n,2)` graphs; 7 is the last feasible order.
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("enumeration is limited to n <= {MAX_ENUMERATION_N}, got {0}")]
pub struct TooLarge(pub usize);

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Level {
    pub n: usize,
    pub graphs: u64,
    /// Graphs whose 3-core has at least four vertices.
    pub core: u64,
    pub locally_bipartite: u64,
    /// Locally bipartite graphs that are not 3-colourable.
    pub witnesses: u64,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct EnumerationReport {
    pub max_n: usize,
    pub levels: Vec<Level>,
    /// Isomorphism classes of the witnesses at the smallest order with any,
    /// in graph6.
    pub smallest_classes: Vec<String>,
    /// A labelled witness isomorphic to the Moser spindle, in graph6.
    pub moser_witness: Option<String>,
    /// Zero witnesses below 7; witnesses at 7 including a Moser spindle.
    pub consistent: bool,
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut rows = vec![VertexSet::new(); n];
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                rows[u].insert(v);
                rows[v].insert(u);
            }
            k += 1;
        }
    }
    Graph::from_adjacency(rows).expect("small graph")
}

/// Peel vertices of degree below 3. A graph with fewer than four vertices
/// left is 2-degenerate, hence 3-colourable.
fn has_large_three_core(g: &Graph) -> bool {
    let mut alive = g.vertices();
    loop {
        match alive.iter().find(|&v| (g.neighbours(v) & alive).len() < 3) {
            Some(v) => alive.remove(v),
            None => return alive.len() >= 4,
        }
    }
}

fn classify(n: usize, mask: u64) -> (bool, bool, bool) {
    let g = graph_from_mask(n, mask);
    if !has_large_three_core(&g) {
        return (false, false, false);
    }
    if !is_locally_bipartite(&g) {
        return (true, false, false);
    }
    (true, true, is_k_colourable(&g, 3).is_none())
}

fn level(n: usize) -> (Level, Vec<u64>) {
    let pairs = n * n.saturating_sub(1) / 2;
    let total = 1u64 << pairs;
    let (core, lb, witnesses) = (0..total)
        .into_par_iter()
        .map(|mask| {
            let (c, l, w) = classify(n, mask);
            (u64::from(c), u64::from(l), if w { vec![mask] } else { Vec::new() })
        })
        .reduce(
            || (0, 0, Vec::new()),
            |mut a, b| {
                a.2.extend(b.2);
                (a.0 + b.0, a.1 + b.1, a.2)
            },
        );
    let mut witnesses = witnesses;
    witnesses.sort_unstable();
    (
        Level {
            n,
            graphs: total,
            core,
            locally_bipartite: lb,
            witnesses: witnesses.len() as u64,
        },
        witnesses,
    )
}

pub fn smallest_four_chromatic_locally_bipartite(max_n: usize) -> Result<EnumerationReport, TooLarge> {
    if max_n > MAX_ENUMERATION_N {
        return Err(TooLarge(max_n));
    }
    let h0 = named(GraphId::H0).expect("catalog graph").graph;
    let mut levels = Vec::new();
    let mut smallest_classes = Vec::new();
    let mut moser_witness = None;
    for n in 1..=max_n {
        let (lvl, masks) = level(n);
        if smallest_classes.is_empty() && !masks.is_empty() {
            let graphs: Vec<Graph> = masks.iter().map(|&m| graph_from_mask(n, m)).collect();
            moser_witness = graphs.iter().find(|g| are_isomorphic(g, &h0)).map(emit_graph6);
            smallest_classes = dedup_isomorphic(graphs).iter().map(emit_graph6).collect();
        }
        levels.push(lvl);
    }
    let consistent = levels.iter().all(|l| (l.witnesses == 0) == (l.n < 7)) && (max_n < 7 || moser_witness.is_some());
    Ok(EnumerationReport {
        max_n,
        levels,
        smallest_classes,
        moser_witness,
        consistent,
    })
}
