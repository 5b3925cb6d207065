use std::collections::VecDeque;

use super::perm::Permutation;
use super::schreier::SchreierSpec;
use crate::error::{Error, Result};
use crate::intmat::IntMatrix;

/// An undirected edge seen from its canonical half-edge.
///
/// `u <= v`; for a loop, `slot_u` is the smaller of the two slots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub slot_u: usize,
    pub slot_v: usize,
}

/// A Δ-regular, well-labeled multigraph stored as directed half-edges.
///
/// Half-edge slot `v * delta + a` is the unique half-edge leaving `v` with
/// label `a`. Each slot is paired with the slot of the same undirected edge
/// at the other endpoint; a slot paired with itself is a half-loop, which
/// uses a single label at its vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    n: usize,
    delta: usize,
    dst: Vec<usize>,
    partner: Vec<usize>,
    partition: Option<Vec<u8>>,
    edges: Vec<Edge>,
    edge_of_slot: Vec<usize>,
}

impl LabeledGraph {
    /// Validates slot data: partners form an involution consistent with
    /// endpoints, every label is a bijection on vertices (well-labeled), and
    /// the partition, if any, is crossed by every edge.
    pub fn from_slots(
        n: usize,
        delta: usize,
        dst: Vec<usize>,
        partner: Vec<usize>,
        partition: Option<Vec<u8>>,
    ) -> Result<Self> {
        let slots = n * delta;
        if dst.len() != slots || partner.len() != slots {
            return Err(Error::InvalidGraph(format!(
                "expected {slots} half-edge slots, got {} destinations and {} partners",
                dst.len(),
                partner.len()
            )));
        }
        for s in 0..slots {
            let (v, p) = (s / delta.max(1), partner[s]);
            if dst[s] >= n || p >= slots {
                return Err(Error::InvalidGraph(format!("slot {s} points out of range")));
            }
            if partner[p] != s {
                return Err(Error::InvalidGraph(format!("partner of slot {s} is not mutual")));
            }
            if p / delta != dst[s] || dst[p] != v {
                return Err(Error::InvalidGraph(format!("slot {s} and its partner {p} disagree on endpoints")));
            }
        }
        for a in 0..delta {
            let mut hit = vec![false; n];
            for v in 0..n {
                let w = dst[v * delta + a];
                if std::mem::replace(&mut hit[w], true) {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {w} has two incoming half-edges labeled {a}"
                    )));
                }
            }
        }
        let mut g = Self {
            n,
            delta,
            dst,
            partner,
            partition: None,
            edges: Vec::new(),
            edge_of_slot: Vec::new(),
        };
        g.index_edges();
        if let Some(p) = partition {
            g = g.with_partition(p)?;
        }
        Ok(g)
    }

    fn index_edges(&mut self) {
        let mut edges: Vec<Edge> = (0..self.n * self.delta)
            .filter_map(|s| {
                let p = self.partner[s];
                let (u, v) = (s / self.delta, self.dst[s]);
                let canonical = u < v || (u == v && s <= p);
                canonical.then_some(Edge {
                    u,
                    v,
                    slot_u: s,
                    slot_v: p,
                })
            })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v, e.slot_u % self.delta));
        let mut edge_of_slot = vec![0; self.n * self.delta];
        for (i, e) in edges.iter().enumerate() {
            edge_of_slot[e.slot_u] = i;
            edge_of_slot[e.slot_v] = i;
        }
        self.edges = edges;
        self.edge_of_slot = edge_of_slot;
    }

    /// Attaches a bipartition. Every edge must join the two sides.
    pub fn with_partition(mut self, partition: Vec<u8>) -> Result<Self> {
        if partition.len() != self.n || partition.iter().any(|&s| s > 1) {
            return Err(Error::NotBipartite(format!(
                "partition must give side 0 or 1 for all {} vertices",
                self.n
            )));
        }
        if let Some(e) = self.edges.iter().find(|e| partition[e.u] == partition[e.v]) {
            return Err(Error::NotBipartite(format!(
                "edge {{{}, {}}} does not cross the partition",
                e.u, e.v
            )));
        }
        self.partition = Some(partition);
        Ok(self)
    }

    pub fn without_partition(mut self) -> Self {
        self.partition = None;
        self
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn partition(&self) -> Option<&[u8]> {
        self.partition.as_deref()
    }

    #[inline]
    pub fn slot(&self, v: usize, label: usize) -> usize {
        debug_assert!(v < self.n && label < self.delta);
        v * self.delta + label
    }

    /// Endpoint of the half-edge leaving `v` with `label`.
    #[inline]
    pub fn dst(&self, v: usize, label: usize) -> usize {
        self.dst[self.slot(v, label)]
    }

    #[inline]
    pub fn slot_dst(&self, slot: usize) -> usize {
        self.dst[slot]
    }

    #[inline]
    pub fn partner_slot(&self, slot: usize) -> usize {
        self.partner[slot]
    }

    /// Label of the reverse half-edge, seen from the far endpoint.
    #[inline]
    pub fn reverse_label(&self, v: usize, label: usize) -> usize {
        self.partner[self.slot(v, label)] % self.delta
    }

    /// Edges in canonical order: by smaller endpoint, larger endpoint, then
    /// label at the smaller endpoint.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Canonical id of the edge carrying a half-edge slot.
    #[inline]
    pub fn edge_of_slot(&self, slot: usize) -> usize {
        self.edge_of_slot[slot]
    }

    /// The label-`a` permutation `v -> dst(v, a)`.
    pub fn permutation(&self, label: usize) -> Permutation {
        Permutation::new((0..self.n).map(|v| self.dst(v, label)).collect())
            .expect("well-labeled graphs have bijective labels")
    }

    pub fn permutations(&self) -> Vec<Permutation> {
        (0..self.delta).map(|a| self.permutation(a)).collect()
    }

    /// Recovers a Schreier spec when the pairing is the same at every
    /// vertex, i.e. `reverse_label(v, a)` does not depend on `v`.
    pub fn to_spec(&self) -> Option<SchreierSpec> {
        if self.n == 0 {
            return None;
        }
        let pairing: Vec<usize> = (0..self.delta).map(|a| self.reverse_label(0, a)).collect();
        let uniform = (0..self.n).all(|v| (0..self.delta).all(|a| self.reverse_label(v, a) == pairing[a]));
        if !uniform {
            return None;
        }
        let spec = SchreierSpec::new(self.n, self.permutations(), pairing).ok()?;
        match &self.partition {
            Some(p) => spec.with_partition(p.clone()).ok(),
            None => Some(spec),
        }
    }

    /// Re-verifies regularity and well-labeledness from the raw slots.
    pub fn well_labeled(&self) -> bool {
        let slots = self.n * self.delta;
        if self.dst.len() != slots {
            return false;
        }
        let out_ok = (0..slots).all(|s| {
            let p = self.partner[s];
            self.partner[p] == s && p / self.delta == self.dst[s] && self.dst[p] == s / self.delta
        });
        out_ok
            && (0..self.delta).all(|a| {
                let mut hit = vec![false; self.n];
                (0..self.n).all(|v| !std::mem::replace(&mut hit[self.dst(v, a)], true))
            })
    }

    /// `M[i][j]` counts half-edges from `j` to `i`, so row sums equal Δ.
    pub fn adjacency(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.n, self.n);
        for s in 0..self.n * self.delta {
            m[(self.dst[s], s / self.delta)] += 1;
        }
        m
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(|e| e.u == e.v)
    }

    /// Neighbors in label order, with repetition for parallel edges.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.delta).map(move |a| self.dst(v, a))
    }

    /// Component id per vertex, numbered by smallest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn n_components(&self) -> usize {
        self.components().into_iter().max().map_or(0, |c| c + 1)
    }

    /// A 2-coloring with vertex 0 of each component on side 0, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Whether every edge crosses the given partition.
    pub fn is_bipartite_on(&self, partition: &[u8]) -> bool {
        partition.len() == self.n && self.edges.iter().all(|e| partition[e.u] != partition[e.v])
    }

    /// Induced subgraph on one component, with vertices renumbered in
    /// increasing order.
    pub fn component_subgraph(&self, vertices: &[usize]) -> Result<LabeledGraph> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut dst = Vec::with_capacity(vertices.len() * self.delta);
        let mut partner = Vec::with_capacity(vertices.len() * self.delta);
        for &v in vertices {
            for a in 0..self.delta {
                let s = self.slot(v, a);
                let w = local[self.dst[s]];
                if w == usize::MAX {
                    return Err(Error::InvalidGraph(format!("vertex set is not closed at {v}")));
                }
                dst.push(w);
                partner.push(w * self.delta + self.partner[s] % self.delta);
            }
        }
        LabeledGraph::from_slots(vertices.len(), self.delta, dst, partner, None)
    }
}
