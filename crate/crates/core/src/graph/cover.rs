use super::checks::graphs_commute;
use super::labeled::LabeledGraph;
use crate::error::{Error, Result};

/// Bipartite double cover: vertex `(v, s)` is `v + s * n`. Each half-edge
/// `(v, w, a)` lifts to `((v,0), (w,1), a)` and `((v,1), (w,0), a)`.
pub fn bipartite_double_cover(g: &LabeledGraph) -> LabeledGraph {
    let (n, delta) = (g.n_vertices(), g.delta());
    let mut dst = Vec::with_capacity(2 * n * delta);
    let mut partner = Vec::with_capacity(2 * n * delta);
    for side in 0..2 {
        for v in 0..n {
            for a in 0..delta {
                let s = g.slot(v, a);
                let w = g.slot_dst(s) + (1 - side) * n;
                dst.push(w);
                partner.push(w * delta + g.partner_slot(s) % delta);
            }
        }
    }
    let partition = (0..2 * n).map(|x| (x >= n) as u8).collect();
    LabeledGraph::from_slots(2 * n, delta, dst, partner, Some(partition))
        .expect("double cover of a well-labeled graph is well-labeled and bipartite")
}

/// Two disjoint copies of `g`; vertex `(v, s)` is `v + s * n`.
pub fn two_copies(g: &LabeledGraph) -> LabeledGraph {
    let (n, delta) = (g.n_vertices(), g.delta());
    let mut dst = Vec::with_capacity(2 * n * delta);
    let mut partner = Vec::with_capacity(2 * n * delta);
    for side in 0..2 {
        for v in 0..n {
            for a in 0..delta {
                let s = g.slot(v, a);
                let w = g.slot_dst(s) + side * n;
                dst.push(w);
                partner.push(w * delta + g.partner_slot(s) % delta);
            }
        }
    }
    LabeledGraph::from_slots(2 * n, delta, dst, partner, None).expect("copies of a well-labeled graph")
}

/// The quadripartite replacement of a commuting pair: the double cover of
/// `a` and two copies of `b`, on the same `2n` vertices.
#[derive(Clone, Debug)]
pub struct QuadripartitePair {
    /// Bipartite on `sides`.
    pub a: LabeledGraph,
    /// Block diagonal; stays inside each side.
    pub b: LabeledGraph,
    pub sides: Vec<u8>,
}

pub fn quadripartite_pair(a: &LabeledGraph, b: &LabeledGraph) -> Result<QuadripartitePair> {
    if !graphs_commute(a, b)? {
        return Err(Error::NonCommuting("quadripartite construction needs commuting inputs".into()));
    }
    let cover = bipartite_double_cover(a);
    let sides = cover.partition().expect("covers carry a partition").to_vec();
    Ok(QuadripartitePair {
        a: cover,
        b: two_copies(b),
        sides,
    })
}

/// Quadripartite pair followed by a double cover of both graphs, so both
/// are bipartite on one shared partition of `4n` vertices.
pub fn quadripartite_bipartite_pair(a: &LabeledGraph, b: &LabeledGraph) -> Result<(LabeledGraph, LabeledGraph)> {
    let q = quadripartite_pair(a, b)?;
    Ok((bipartite_double_cover(&q.a), bipartite_double_cover(&q.b)))
}
