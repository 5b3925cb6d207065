//! The square complex of a commuting pair and its two diagonal graphs.
//!
//! A square is rooted at `v ∈ V0` with labels `(a, b)`:
//!
//! ```text
//!        a            
//!   v ------> w       w = A(v, a)       w' = B(v, b)
//!   |         |       v' = A(w', a) = B(w, b)
//! b |         | b
//!   v         v
//!   w' -----> v'
//!        a
//! ```
//!
//! `e1 = {v,w}`, `e2 = {w',v'}` are A-edges and `e3 = {v,w'}`, `e4 = {w,v'}`
//! are B-edges. Rooting at `v'` gives `(e2, e1, e4, e3)`, the same square.
//!
//! The diagonal `v–v'` is an edge of the first diagonal graph, labeled
//! `(a, b)` at `v` and by the labels of `e2`, `e4` at `v'`. The diagonal
//! `w–w'` is an edge of the second one, labeled `(label of e1 at w, b)` at
//! `w` and `(a, label of e3 at w')` at `w'`. Both edges get the square's
//! index as their edge id.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{graphs_commute, inverse_pair_compat, overlap_check, LabeledGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Square {
    /// A-edge ids (canonical edge order of the A graph).
    pub e1: usize,
    pub e2: usize,
    /// B-edge ids.
    pub e3: usize,
    pub e4: usize,
    /// Root corner and its labels; `w = A(v, a)`, `w' = B(v, b)`.
    pub v: usize,
    pub a: usize,
    pub b: usize,
    pub w: usize,
    pub w_prime: usize,
    pub v_prime: usize,
}

impl Square {
    fn key(&self) -> [usize; 4] {
        [self.e1, self.e2, self.e3, self.e4]
    }

    /// The identified orientation is the one with the smaller `(e1, e3)`.
    fn canonical_key(&self) -> [usize; 4] {
        let k = (self.e1, self.e3, self.e2, self.e4);
        let twin = (self.e2, self.e4, self.e1, self.e3);
        let m = k.min(twin);
        [m.0, m.2, m.1, m.3]
    }
}

#[derive(Clone, Debug)]
pub struct SquareComplex {
    a: LabeledGraph,
    b: LabeledGraph,
    partition: Vec<u8>,
    /// Position of each vertex inside its side.
    local_index: Vec<usize>,
    sides: [Vec<usize>; 2],
    squares: Vec<Square>,
}

/// Builds the complex, checking preconditions in a fixed order: size,
/// degree, bipartiteness, commutation, overlap, inverse pairs.
pub fn build_complex(a: &LabeledGraph, b: &LabeledGraph, partition: &[u8]) -> Result<SquareComplex> {
    let n = a.n_vertices();
    if b.n_vertices() != n || partition.len() != n {
        return Err(Error::Dimension(format!(
            "vertex counts differ: A has {n}, B has {}, partition has {}",
            b.n_vertices(),
            partition.len()
        )));
    }
    if a.delta() != b.delta() {
        return Err(Error::DegreeMismatch { a: a.delta(), b: b.delta() });
    }
    if partition.iter().any(|&s| s > 1) {
        return Err(Error::NotBipartite("partition entries must be 0 or 1".into()));
    }
    for (name, g) in [("A", a), ("B", b)] {
        if !g.is_bipartite_on(partition) {
            return Err(Error::NotBipartite(format!("{name} has an edge inside one side")));
        }
    }
    if !graphs_commute(a, b)? {
        return Err(Error::NonCommuting("adjacency matrices do not commute".into()));
    }
    let overlap = overlap_check(a, b)?;
    if let Some(&first) = overlap.first() {
        return Err(Error::OverlappingEdges { count: overlap.len(), first });
    }
    if !inverse_pair_compat(a, b)? {
        return Err(Error::PairingIncompatible("inverse-pair label multisets differ".into()));
    }

    let delta = a.delta();
    let mut sides = [Vec::new(), Vec::new()];
    let mut local_index = vec![0; n];
    for v in 0..n {
        let s = partition[v] as usize;
        local_index[v] = sides[s].len();
        sides[s].push(v);
    }
    let mut seen: HashMap<[usize; 4], usize> = HashMap::new();
    let mut squares = Vec::with_capacity(sides[0].len() * delta * delta / 2);
    for &v in &sides[0] {
        for la in 0..delta {
            for lb in 0..delta {
                let w = a.dst(v, la);
                let w_prime = b.dst(v, lb);
                let v_prime = a.dst(w_prime, la);
                if b.dst(w, lb) != v_prime {
                    return Err(Error::NonCommuting(format!(
                        "labels ({la}, {lb}) do not close a square at vertex {v}"
                    )));
                }
                let sq = Square {
                    e1: a.edge_of_slot(a.slot(v, la)),
                    e2: a.edge_of_slot(a.slot(w_prime, la)),
                    e3: b.edge_of_slot(b.slot(v, lb)),
                    e4: b.edge_of_slot(b.slot(w, lb)),
                    v,
                    a: la,
                    b: lb,
                    w,
                    w_prime,
                    v_prime,
                };
                let key = sq.canonical_key();
                if !seen.contains_key(&key) {
                    seen.insert(key, squares.len());
                    squares.push(sq);
                }
            }
        }
    }
    Ok(SquareComplex {
        a: a.clone(),
        b: b.clone(),
        partition: partition.to_vec(),
        local_index,
        sides,
        squares,
    })
}

impl SquareComplex {
    pub fn a(&self) -> &LabeledGraph {
        &self.a
    }

    pub fn b(&self) -> &LabeledGraph {
        &self.b
    }

    pub fn delta(&self) -> usize {
        self.a.delta()
    }

    pub fn partition(&self) -> &[u8] {
        &self.partition
    }

    /// Vertices of side `s`, ascending.
    pub fn side(&self, s: usize) -> &[usize] {
        &self.sides[s]
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn n_squares(&self) -> usize {
        self.squares.len()
    }

    /// Edge `i` of each diagonal graph comes from square `i`.
    pub fn square_graphs(&self) -> (SquareGraph, SquareGraph) {
        let delta = self.delta();
        let (a, b) = (&self.a, &self.b);
        let mut e0 = Vec::with_capacity(self.squares.len());
        let mut e1 = Vec::with_capacity(self.squares.len());
        for sq in &self.squares {
            let at_v = (sq.a, sq.b);
            let at_v_prime = (a.reverse_label(sq.w_prime, sq.a), b.reverse_label(sq.w, sq.b));
            e0.push([
                (self.local_index[sq.v], at_v),
                (self.local_index[sq.v_prime], at_v_prime),
            ]);
            let at_w = (a.reverse_label(sq.v, sq.a), sq.b);
            let at_w_prime = (sq.a, b.reverse_label(sq.v, sq.b));
            e1.push([
                (self.local_index[sq.w], at_w),
                (self.local_index[sq.w_prime], at_w_prime),
            ]);
        }
        let g0 = SquareGraph::new(delta, self.sides[0].clone(), e0)
            .expect("diagonal graph of a valid complex is well-labeled");
        let g1 = SquareGraph::new(delta, self.sides[1].clone(), e1)
            .expect("diagonal graph of a valid complex is well-labeled");
        (g0, g1)
    }

    pub fn dump(&self) -> ComplexDump {
        let tagged = |g: &LabeledGraph, kind: &'static str| {
            g.edges()
                .iter()
                .enumerate()
                .map(|(id, e)| TaggedEdge {
                    id,
                    kind,
                    u: e.u,
                    v: e.v,
                    label_u: e.slot_u % g.delta().max(1),
                    label_v: e.slot_v % g.delta().max(1),
                })
                .collect()
        };
        ComplexDump {
            vertices: (0..self.partition.len()).map(|v| (v, self.partition[v])).collect(),
            a_edges: tagged(&self.a, "A"),
            b_edges: tagged(&self.b, "B"),
            squares: self.squares.iter().map(Square::key).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TaggedEdge {
    pub id: usize,
    pub kind: &'static str,
    pub u: usize,
    pub v: usize,
    pub label_u: usize,
    pub label_v: usize,
}

/// JSON form of a complex: `(vertex, side)` pairs, the two edge lists and
/// squares as `[e1, e2, e3, e4]`.
#[derive(Clone, Debug, Serialize)]
pub struct ComplexDump {
    pub vertices: Vec<(usize, u8)>,
    pub a_edges: Vec<TaggedEdge>,
    pub b_edges: Vec<TaggedEdge>,
    pub squares: Vec<[usize; 4]>,
}

/// One endpoint of a square-graph edge: local vertex index and `(a, b)`.
pub type End = (usize, (usize, usize));

/// A Δ²-regular graph labeled by `[Δ] x [Δ]`, with an explicit edge order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareGraph {
    delta: usize,
    /// Original vertex ids, one per local vertex.
    vertices: Vec<usize>,
    edges: Vec<[End; 2]>,
    /// `view[v * Δ² + a * Δ + b]` is the edge id at `v` with label `(a, b)`.
    view: Vec<usize>,
}

impl SquareGraph {
    /// Every `(vertex, label)` must be used by exactly one edge end.
    pub fn new(delta: usize, vertices: Vec<usize>, edges: Vec<[End; 2]>) -> Result<Self> {
        let n = vertices.len();
        let d2 = delta * delta;
        let mut view = vec![usize::MAX; n * d2];
        for (id, ends) in edges.iter().enumerate() {
            for &(v, (la, lb)) in ends {
                if v >= n || la >= delta || lb >= delta {
                    return Err(Error::InvalidGraph(format!("edge {id} has an end out of range")));
                }
                let cell = &mut view[v * d2 + la * delta + lb];
                if *cell != usize::MAX {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {v} carries label ({la}, {lb}) on edges {} and {id}",
                        *cell
                    )));
                }
                *cell = id;
            }
        }
        if let Some(c) = view.iter().position(|&e| e == usize::MAX) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} misses label ({}, {})",
                c / d2,
                (c % d2) / delta,
                c % delta
            )));
        }
        Ok(Self { delta, vertices, edges, view })
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[End; 2]] {
        &self.edges
    }

    /// Edge id at `v` with label `(a, b)`.
    pub fn edge_at(&self, v: usize, a: usize, b: usize) -> usize {
        self.view[v * self.delta * self.delta + a * self.delta + b]
    }

    /// The Δ x Δ grid of edge ids around `v`.
    pub fn local_view(&self, v: usize) -> Vec<Vec<usize>> {
        (0..self.delta)
            .map(|a| (0..self.delta).map(|b| self.edge_at(v, a, b)).collect())
            .collect()
    }

    /// The end of edge `e` at `v`; for a loop, the first one.
    pub fn end_at(&self, e: usize, v: usize) -> Option<End> {
        self.edges[e].iter().copied().find(|end| end.0 == v)
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(|[x, y]| x.0 == y.0)
    }

    /// Edges in canonical form, sorted: each edge as its two ends with the
    /// smaller end first. Two graphs equal up to edge order agree here.
    pub fn canonical_edges(&self) -> Vec<[End; 2]> {
        let mut out: Vec<[End; 2]> = self
            .edges
            .iter()
            .map(|&[x, y]| if x <= y { [x, y] } else { [y, x] })
            .collect();
        out.sort_unstable();
        out
    }

    /// Relabels edge ids: edge `i` of the result is edge `order[i]` here.
    pub fn reorder(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.edges.len() {
            return Err(Error::Dimension(format!(
                "edge order has {} entries for {} edges",
                order.len(),
                self.edges.len()
            )));
        }
        let mut seen = vec![false; order.len()];
        for &e in order {
            if e >= order.len() || std::mem::replace(&mut seen[e], true) {
                return Err(Error::Dimension("edge order is not a permutation".into()));
            }
        }
        Self::new(self.delta, self.vertices.clone(), order.iter().map(|&e| self.edges[e]).collect())
    }
}
