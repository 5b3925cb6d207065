//! Checks on a pair of Δ²-regular graphs with a bijection between their
//! edges, and the reconstruction of a commuting pair from them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::code::{local_parities, tanner_parity, CssCode, LinearCode};
use crate::complex::{build_complex, SquareComplex, SquareGraph};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::LabeledGraph;

/// Bijection from the edges of the first graph to the edges of the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PsiMap(Vec<usize>);

impl PsiMap {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; map.len()];
        for &e in &map {
            if e >= map.len() || std::mem::replace(&mut seen[e], true) {
                return Err(Error::Dimension("ψ is not a permutation of edge ids".into()));
            }
        }
        Ok(Self(map))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, e: usize) -> usize {
        self.0[e]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (e, &f) in self.0.iter().enumerate() {
            inv[f] = e;
        }
        Self(inv)
    }

    /// `ψ` followed by swapping the images of `i` and `j`.
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut m = self.0.clone();
        m.swap(i, j);
        Self(m)
    }
}

fn validate(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<()> {
    if g0.delta() != g1.delta() {
        return Err(Error::DegreeMismatch { a: g0.delta(), b: g1.delta() });
    }
    if g0.n_vertices() != g1.n_vertices() || g0.n_edges() != g1.n_edges() || psi.len() != g0.n_edges() {
        return Err(Error::Dimension(format!(
            "graphs have {}/{} vertices and {}/{} edges, ψ has {} entries",
            g0.n_vertices(),
            g1.n_vertices(),
            g0.n_edges(),
            g1.n_edges(),
            psi.len()
        )));
    }
    for g in [g0, g1] {
        if let Some(e) = g.edges().iter().find(|[x, y]| x.0 == y.0) {
            return Err(Error::SelfLoop(e[0].0));
        }
    }
    Ok(())
}

/// Which shape an overlap was read as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OverlapForm {
    Rows,
    Columns,
    /// Both readings hold, e.g. a single cell when Δ = 1.
    Either,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapWitness {
    pub v: usize,
    pub w: usize,
    /// Edge ids of the second graph in the overlap, ascending.
    pub overlap: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionIiReport {
    pub holds: bool,
    /// First failing `(v, w)` in ascending order.
    pub witness: Option<OverlapWitness>,
    pub failures: usize,
    /// Every nonempty overlap with the reading used.
    pub overlaps: Vec<(usize, usize, OverlapForm)>,
}

/// The overlap `ψ(E0(v)) ∩ E1(w)` as cells: `(cell at w, cell at v)`.
fn overlaps_at(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap, v: usize) -> Vec<(usize, Vec<((usize, usize), (usize, usize))>)> {
    let delta = g0.delta();
    let mut by_w: std::collections::BTreeMap<usize, Vec<_>> = Default::default();
    for a in 0..delta {
        for b in 0..delta {
            let f = psi.apply(g0.edge_at(v, a, b));
            for &(w, cell) in &g1.edges()[f] {
                by_w.entry(w).or_default().push((cell, (a, b)));
            }
        }
    }
    by_w.into_iter().collect()
}

/// Rows reading: the overlap is whole rows of `E1(w)`, each coming from a
/// whole row of `E0(v)` with the second index kept.
fn reads_as_rows(cells: &[((usize, usize), (usize, usize))], delta: usize) -> bool {
    let rows: BTreeSet<usize> = cells.iter().map(|c| c.0 .0).collect();
    if cells.len() != rows.len() * delta {
        return false;
    }
    rows.iter().all(|&r| {
        let row: Vec<_> = cells.iter().filter(|c| c.0 .0 == r).collect();
        let src = row[0].1 .0;
        row.iter().all(|c| c.1 .0 == src && c.1 .1 == c.0 .1)
    })
}

fn reads_as_columns(cells: &[((usize, usize), (usize, usize))], delta: usize) -> bool {
    let flipped: Vec<_> = cells.iter().map(|&((a, b), (c, d))| ((b, a), (d, c))).collect();
    reads_as_rows(&flipped, delta)
}

pub fn condition_ii_check(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<ConditionIiReport> {
    validate(g0, g1, psi)?;
    let delta = g0.delta();
    let mut report = ConditionIiReport {
        holds: true,
        witness: None,
        failures: 0,
        overlaps: Vec::new(),
    };
    for v in 0..g0.n_vertices() {
        for (w, cells) in overlaps_at(g0, g1, psi, v) {
            let form = match (reads_as_rows(&cells, delta), reads_as_columns(&cells, delta)) {
                (true, true) => Some(OverlapForm::Either),
                (true, false) => Some(OverlapForm::Rows),
                (false, true) => Some(OverlapForm::Columns),
                (false, false) => None,
            };
            match form {
                Some(f) => report.overlaps.push((v, w, f)),
                None => {
                    report.holds = false;
                    report.failures += 1;
                    if report.witness.is_none() {
                        let mut overlap: Vec<usize> = cells.iter().map(|c| g1.edge_at(w, c.0 .0, c.0 .1)).collect();
                        overlap.sort_unstable();
                        overlap.dedup();
                        report.witness = Some(OverlapWitness { v, w, overlap });
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapReport {
    pub holds: bool,
    /// Edges of the first graph violating the condition.
    pub failing_edges: Vec<usize>,
    /// Every edge labeled `(a,b)`, `(a',b')` maps to one labeled
    /// `(a',b)`, `(a,b')`.
    pub swap_form_holds: bool,
}

fn label_multiset(ends: &[(usize, (usize, usize)); 2]) -> [(usize, usize); 2] {
    let mut l = [ends[0].1, ends[1].1];
    l.sort_unstable();
    l
}

/// For each edge, count labels kept by ψ (as a multiset) and indices the
/// two labels share. One kept label needs one shared index, two kept labels
/// need both.
pub fn swapping_condition_check(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<SwapReport> {
    validate(g0, g1, psi)?;
    let mut failing_edges = Vec::new();
    let mut swap_form_holds = true;
    for (e, ends) in g0.edges().iter().enumerate() {
        let ((a, b), (a2, b2)) = (ends[0].1, ends[1].1);
        let l0 = label_multiset(ends);
        let l1 = label_multiset(&g1.edges()[psi.apply(e)]);
        let kept = if l0 == l1 {
            2
        } else {
            l0.iter().filter(|x| l1.contains(x)).count().min(1)
        };
        let shared = (a == a2) as usize + (b == b2) as usize;
        if shared < kept {
            failing_edges.push(e);
        }
        let mut swapped = [(a2, b), (a, b2)];
        swapped.sort_unstable();
        if swapped != l1 {
            swap_form_holds = false;
        }
    }
    Ok(SwapReport {
        holds: failing_edges.is_empty(),
        failing_edges,
        swap_form_holds,
    })
}

/// For every edge labeled `(a,b)` at `v` and `(a',b')` at the far end,
/// all edges at `v` with first index `a` have `a'` first at their far end,
/// and likewise for the second index.
pub fn local_inverse_check(g: &SquareGraph) -> bool {
    let delta = g.delta();
    let far = |e: usize, v: usize| {
        let [x, y] = g.edges()[e];
        if x.0 == v { y.1 } else { x.1 }
    };
    (0..g.n_vertices()).all(|v| {
        (0..delta).all(|a| {
            let firsts: BTreeSet<usize> = (0..delta).map(|b| far(g.edge_at(v, a, b), v).0).collect();
            let seconds: BTreeSet<usize> = (0..delta).map(|b| far(g.edge_at(v, b, a), v).1).collect();
            firsts.len() == 1 && seconds.len() == 1
        })
    })
}

/// `h0` on `g0` with `kron(G_A, G_B)`; `h1` on `g1` with `kron(H_A, H_B)`,
/// its columns reindexed so column `e` is edge `ψ(e)`.
pub fn general_qtanner_matrices(
    g0: &SquareGraph,
    g1: &SquareGraph,
    psi: &PsiMap,
    ca: &LinearCode,
    cb: &LinearCode,
) -> Result<(BitMatrix, BitMatrix)> {
    validate(g0, g1, psi)?;
    if ca.n() != g0.delta() || cb.n() != g0.delta() {
        return Err(Error::Dimension(format!(
            "local codes have lengths {} and {}, graphs have Δ = {}",
            ca.n(),
            cb.n(),
            g0.delta()
        )));
    }
    let (l0, l1) = local_parities(ca, cb);
    let h0 = tanner_parity(g0, &l0)?;
    let h1 = tanner_parity(g1, &l1)?.select_columns(psi.as_slice());
    Ok((h0, h1))
}

pub fn general_qtanner_css(
    g0: &SquareGraph,
    g1: &SquareGraph,
    psi: &PsiMap,
    ca: &LinearCode,
    cb: &LinearCode,
) -> Result<CssCode> {
    let (h0, h1) = general_qtanner_matrices(g0, g1, psi, ca, cb)?;
    CssCode::new(h0, h1)
}

/// The sixteen pairs of single-row length-2 parities `[00]`, `[10]`,
/// `[01]`, `[11]`.
pub fn length_two_local_pairs() -> Vec<(LinearCode, LinearCode)> {
    let rows: [[u8; 2]; 4] = [[0, 0], [1, 0], [0, 1], [1, 1]];
    let mut out = Vec::with_capacity(16);
    for ra in rows {
        for rb in rows {
            out.push((
                LinearCode::from_parity(BitMatrix::from_rows(2, &[ra])),
                LinearCode::from_parity(BitMatrix::from_rows(2, &[rb])),
            ));
        }
    }
    out
}

/// Number of local-code pairs in the length-2 sweep with `h0 h1^T ≠ 0`.
pub fn length_two_sweep(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<usize> {
    let mut bad = 0;
    for (ca, cb) in length_two_local_pairs() {
        let (h0, h1) = general_qtanner_matrices(g0, g1, psi, &ca, &cb)?;
        if h0.mul_transpose(&h1)?.count_ones() > 0 {
            bad += 1;
        }
    }
    Ok(bad)
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub a: LabeledGraph,
    pub b: LabeledGraph,
    pub partition: Vec<u8>,
    pub complex: SquareComplex,
}

/// Endpoints of `ψ` applied to edges of `E0(v)` picked by `cells`,
/// intersected.
fn common_ends(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap, v: usize, cells: impl Iterator<Item = (usize, usize)>) -> BTreeSet<usize> {
    let mut acc: Option<BTreeSet<usize>> = None;
    for (a, b) in cells {
        let [x, y] = g1.edges()[psi.apply(g0.edge_at(v, a, b))];
        let ends: BTreeSet<usize> = [x.0, y.0].into();
        acc = Some(match acc {
            None => ends,
            Some(s) => s.intersection(&ends).copied().collect(),
        });
    }
    acc.unwrap_or_default()
}

/// Glues one square per edge pair `(e, ψ(e))` and reads off the A- and
/// B-graphs on `V0 ⊔ V1` (second-side vertex `x` becomes `|V0| + x`).
///
/// Requires condition (ii) and the swapping condition. When both labels of
/// an edge are kept, the two far corners are told apart by which of them
/// meets all of `ψ` of the row (A-side) or column (B-side) at `v`.
pub fn reconstruct_schreier_pair(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<Reconstruction> {
    let ii = condition_ii_check(g0, g1, psi)?;
    if let Some(w) = ii.witness {
        return Err(Error::ConditionIi { v: w.v, w: w.w });
    }
    let swap = swapping_condition_check(g0, g1, psi)?;
    if let Some(&e) = swap.failing_edges.first() {
        return Err(Error::SwappingCondition(e));
    }
    if !swap.swap_form_holds {
        return Err(Error::Reconstruction("an edge is not mapped to its swapped labels".into()));
    }

    let delta = g0.delta();
    let n0 = g0.n_vertices();
    let n = n0 + g1.n_vertices();
    const UNSET: usize = usize::MAX;
    let mut a_slots = vec![(UNSET, UNSET); n * delta];
    let mut b_slots = vec![(UNSET, UNSET); n * delta];
    let put = |slots: &mut Vec<(usize, usize)>, from: usize, l: usize, to: usize, back: usize, kind: &str| -> Result<()> {
        for (s, val) in [(from * delta + l, (to, to * delta + back)), (to * delta + back, (from, from * delta + l))] {
            if slots[s] == (UNSET, UNSET) {
                slots[s] = val;
            } else if slots[s] != val {
                return Err(Error::Reconstruction(format!(
                    "{kind}-label {} at vertex {} is glued to two different edges",
                    s % delta,
                    s / delta
                )));
            }
        }
        Ok(())
    };

    for (e, ends) in g0.edges().iter().enumerate() {
        let [(v, (a, b)), (v2, (a2, b2))] = *ends;
        let [x, y] = g1.edges()[psi.apply(e)];
        let (w, w2) = if (a2, b) != (a, b2) {
            if x.1 == (a2, b) {
                (x.0, y.0)
            } else {
                (y.0, x.0)
            }
        } else {
            let rows = common_ends(g0, g1, psi, v, (0..delta).map(|j| (a, j)));
            let cols = common_ends(g0, g1, psi, v, (0..delta).map(|i| (i, b)));
            match (rows.contains(&x.0), rows.contains(&y.0), cols.contains(&x.0), cols.contains(&y.0)) {
                (false, true, _, _) | (_, _, true, false) => (y.0, x.0),
                _ => (x.0, y.0),
            }
        };
        let (w, w2) = (n0 + w, n0 + w2);
        put(&mut a_slots, v, a, w, a2, "A")?;
        put(&mut a_slots, w2, a, v2, a2, "A")?;
        put(&mut b_slots, v, b, w2, b2, "B")?;
        put(&mut b_slots, w, b, v2, b2, "B")?;
    }

    let partition: Vec<u8> = (0..n).map(|v| (v >= n0) as u8).collect();
    let finish = |slots: Vec<(usize, usize)>, kind: &str| -> Result<LabeledGraph> {
        if let Some(s) = slots.iter().position(|&(d, _)| d == UNSET) {
            return Err(Error::Reconstruction(format!(
                "{kind}-label {} at vertex {} is never used",
                s % delta,
                s / delta
            )));
        }
        let (dst, partner) = slots.into_iter().unzip();
        LabeledGraph::from_slots(n, delta, dst, partner, Some(partition.clone()))
            .map_err(|err| Error::Reconstruction(format!("{kind}-graph: {err}")))
    };
    let a = finish(a_slots, "A")?;
    let b = finish(b_slots, "B")?;
    let complex = build_complex(&a, &b, &partition)?;
    Ok(Reconstruction { a, b, partition, complex })
}

/// `(g0 edge, ψ-image)` pairs in canonical form, sorted.
fn aligned_pairs(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Vec<[[(usize, (usize, usize)); 2]; 2]> {
    let canon = |[x, y]: [(usize, (usize, usize)); 2]| if x <= y { [x, y] } else { [y, x] };
    let mut out: Vec<_> = (0..g0.n_edges())
        .map(|e| [canon(g0.edges()[e]), canon(g1.edges()[psi.apply(e)])])
        .collect();
    out.sort_unstable();
    out
}

/// Reconstructs, rebuilds the diagonal graphs and compares them to the
/// input, edge pairs included, up to edge order.
pub fn round_trip(g0: &SquareGraph, g1: &SquareGraph, psi: &PsiMap) -> Result<bool> {
    let r = reconstruct_schreier_pair(g0, g1, psi)?;
    let (h0, h1) = r.complex.square_graphs();
    Ok(h0.delta() == g0.delta()
        && aligned_pairs(g0, g1, psi) == aligned_pairs(&h0, &h1, &PsiMap::identity(h0.n_edges())))
}

/// The 3-vertex, 4-regular witness graph: for each `v` and `i`, an edge
/// `v -> v+1 (mod 3)` labeled `(0, i)` at `v` and `(1, i)` at `v+1`.
pub fn example_red_nonempty() -> (SquareGraph, PsiMap) {
    let mut edges = Vec::with_capacity(6);
    for v in 0..3 {
        for i in 0..2 {
            edges.push([(v, (0, i)), ((v + 1) % 3, (1, i))]);
        }
    }
    let g = SquareGraph::new(2, vec![0, 1, 2], edges).expect("witness graph is well-labeled");
    (g, PsiMap::identity(6))
}
