//! Command-line side of `locolor`: graph formats, graph sources, the
//! claim registry with its JSON report, the exhaustive enumeration of small
//! locally bipartite graphs, and seeded property suites.

pub mod claims;
pub mod enumerate;
pub mod format;
pub mod sampling;
pub mod source;
pub mod threshold;

/// Environment variable raising the vertex limit (at most 256).
pub const MAX_N_ENV: &str = "LOCOLOR_MAX_N";

/// Apply `LOCOLOR_MAX_N` if set.
pub fn apply_vertex_limit_from_env() -> anyhow::Result<()> {
    if let Ok(raw) = std::env::var(MAX_N_ENV) {
        let n: usize = raw.trim().parse().map_err(|_| anyhow::anyhow!("{MAX_N_ENV}={raw:?} is not a vertex count"))?;
        locolor_core::graph::set_vertex_limit(n).map_err(|e| anyhow::anyhow!("{MAX_N_ENV}={n}: {e}"))?;
    }
    Ok(())
}
