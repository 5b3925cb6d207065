use std::collections::BTreeSet;

use super::labeled::LabeledGraph;
use super::schreier::SchreierSpec;
use crate::error::{Error, Result};

/// True iff every permutation of `a` commutes with every permutation of `b`.
pub fn commute_check(a: &SchreierSpec, b: &SchreierSpec) -> Result<bool> {
    if a.n_vertices() != b.n_vertices() {
        return Err(Error::Dimension(format!(
            "specs on {} and {} vertices",
            a.n_vertices(),
            b.n_vertices()
        )));
    }
    Ok(a.perms().iter().all(|p| b.perms().iter().all(|q| p.commutes_with(q))))
}

/// [`commute_check`] on the label permutations of two well-labeled graphs.
pub fn graphs_commute(a: &LabeledGraph, b: &LabeledGraph) -> Result<bool> {
    if a.n_vertices() != b.n_vertices() {
        return Err(Error::Dimension(format!(
            "graphs on {} and {} vertices",
            a.n_vertices(),
            b.n_vertices()
        )));
    }
    let pb = b.permutations();
    Ok(a.permutations().iter().all(|p| pb.iter().all(|q| p.commutes_with(q))))
}

fn endpoint_pairs(g: &LabeledGraph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Unordered vertex pairs joined by an edge in both graphs, sorted.
pub fn overlap_check(a: &LabeledGraph, b: &LabeledGraph) -> Result<Vec<(usize, usize)>> {
    if a.n_vertices() != b.n_vertices() {
        return Err(Error::Dimension(format!(
            "graphs on {} and {} vertices",
            a.n_vertices(),
            b.n_vertices()
        )));
    }
    let pb = endpoint_pairs(b);
    Ok(endpoint_pairs(a).intersection(&pb).copied().collect())
}

/// Sorted `(label, reverse label)` pairs of the half-edges leaving `v`.
fn inverse_pairs_at(g: &LabeledGraph, v: usize) -> Vec<(usize, usize)> {
    let mut pairs: Vec<_> = (0..g.delta()).map(|a| (a, g.reverse_label(v, a))).collect();
    pairs.sort_unstable();
    pairs
}

fn pairs_agree_along(edges_of: &LabeledGraph, labels_of: &LabeledGraph) -> bool {
    edges_of
        .edges()
        .iter()
        .all(|e| inverse_pairs_at(labels_of, e.u) == inverse_pairs_at(labels_of, e.v))
}

/// Whether neighbors in one graph see the same inverse-label pairs in the
/// other, in both directions.
pub fn inverse_pair_compat(a: &LabeledGraph, b: &LabeledGraph) -> Result<bool> {
    if a.n_vertices() != b.n_vertices() {
        return Err(Error::Dimension(format!(
            "graphs on {} and {} vertices",
            a.n_vertices(),
            b.n_vertices()
        )));
    }
    Ok(pairs_agree_along(a, b) && pairs_agree_along(b, a))
}
