use crate::complex::SquareGraph;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::LabeledGraph;

/// A regular graph whose local views are indexed by a label set `0..degree`.
pub trait LocalViews {
    fn n_vertices(&self) -> usize;
    fn degree(&self) -> usize;
    fn n_edges(&self) -> usize;
    /// Edge id at `v` carrying label `label`.
    fn edge_at_label(&self, v: usize, label: usize) -> usize;
    /// Some vertex carrying a self-loop.
    fn self_loop(&self) -> Option<usize>;
}

impl LocalViews for SquareGraph {
    fn n_vertices(&self) -> usize {
        SquareGraph::n_vertices(self)
    }

    fn degree(&self) -> usize {
        self.delta() * self.delta()
    }

    fn n_edges(&self) -> usize {
        SquareGraph::n_edges(self)
    }

    /// Label `(a, b)` is flattened to `a * Δ + b`.
    fn edge_at_label(&self, v: usize, label: usize) -> usize {
        self.edge_at(v, label / self.delta(), label % self.delta())
    }

    fn self_loop(&self) -> Option<usize> {
        self.edges().iter().find(|[x, y]| x.0 == y.0).map(|e| e[0].0)
    }
}

impl LocalViews for LabeledGraph {
    fn n_vertices(&self) -> usize {
        LabeledGraph::n_vertices(self)
    }

    fn degree(&self) -> usize {
        self.delta()
    }

    fn n_edges(&self) -> usize {
        self.edges().len()
    }

    fn edge_at_label(&self, v: usize, label: usize) -> usize {
        self.edge_of_slot(self.slot(v, label))
    }

    fn self_loop(&self) -> Option<usize> {
        self.edges().iter().find(|e| e.u == e.v).map(|e| e.u)
    }
}

/// Parity-check matrix of the Tanner code: block `j` (rows
/// `j * r .. (j + 1) * r`) places column `l` of `local` at the edge with
/// label `l` around vertex `j`.
pub fn tanner_parity<G: LocalViews + ?Sized>(g: &G, local: &BitMatrix) -> Result<BitMatrix> {
    if local.cols() != g.degree() {
        return Err(Error::Dimension(format!(
            "local code has length {}, graph has degree {}",
            local.cols(),
            g.degree()
        )));
    }
    if let Some(v) = g.self_loop() {
        return Err(Error::SelfLoop(v));
    }
    let r = local.rows();
    let mut h = BitMatrix::zeros(g.n_vertices() * r, g.n_edges());
    for j in 0..g.n_vertices() {
        for l in 0..g.degree() {
            let e = g.edge_at_label(j, l);
            for i in 0..r {
                if local.get(i, l) {
                    h.toggle(j * r + i, e);
                }
            }
        }
    }
    Ok(h)
}
