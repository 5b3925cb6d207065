use serde::Serialize;

use super::linear::LinearCode;
use super::tanner::tanner_parity;
use crate::complex::{build_complex, SquareComplex};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::{bipartite_double_cover, cayley_graph, GroupTable, Side};

/// A CSS pair `(C0, C1)` given by parity checks with `h0 h1^T = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CssCode {
    n: usize,
    h0: BitMatrix,
    h1: BitMatrix,
    rank0: usize,
    rank1: usize,
}

/// Number of ones in `h0 h1^T`.
pub fn css_violations(h0: &BitMatrix, h1: &BitMatrix) -> Result<usize> {
    Ok(h0.mul_transpose(h1)?.count_ones())
}

impl CssCode {
    pub fn new(h0: BitMatrix, h1: BitMatrix) -> Result<Self> {
        if h0.cols() != h1.cols() {
            return Err(Error::Dimension(format!("h0 has {} columns, h1 has {}", h0.cols(), h1.cols())));
        }
        let bad = css_violations(&h0, &h1)?;
        if bad > 0 {
            return Err(Error::NotCss(bad));
        }
        Ok(Self {
            n: h0.cols(),
            rank0: h0.rank(),
            rank1: h1.rank(),
            h0,
            h1,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h0(&self) -> &BitMatrix {
        &self.h0
    }

    pub fn h1(&self) -> &BitMatrix {
        &self.h1
    }

    pub fn dim_c0(&self) -> usize {
        self.n - self.rank0
    }

    pub fn dim_c1(&self) -> usize {
        self.n - self.rank1
    }

    /// `dim C0 + dim C1 − n`.
    pub fn k(&self) -> usize {
        self.dim_c0() + self.dim_c1() - self.n
    }
}

/// `dim C0 + dim C1 − n`, re-checking the CSS condition first.
pub fn css_dimension(c: &CssCode) -> Result<usize> {
    let bad = css_violations(c.h0(), c.h1())?;
    if bad > 0 {
        return Err(Error::NotCss(bad));
    }
    Ok(c.k())
}

/// Local parities `(kron(G_A, G_B), kron(H_A, H_B))` for the two sides:
/// the first checks `(C_A ⊗ C_B)^⊥`, the second the dual-tensor code.
pub fn local_parities(ca: &LinearCode, cb: &LinearCode) -> (BitMatrix, BitMatrix) {
    (ca.generator().kron(cb.generator()), ca.parity().kron(cb.parity()))
}

/// `h0` on the first diagonal graph with `kron(G_A, G_B)` and `h1` on the
/// second with `kron(H_A, H_B)`. Local labels `(a, b)` become `a * Δ + b`.
pub fn css_from_complex(x: &SquareComplex, ca: &LinearCode, cb: &LinearCode) -> Result<CssCode> {
    let delta = x.delta();
    if ca.n() != delta || cb.n() != delta {
        return Err(Error::Dimension(format!(
            "local codes have lengths {} and {}, complex has degree {delta}",
            ca.n(),
            cb.n()
        )));
    }
    let (g0, g1) = x.square_graphs();
    let (l0, l1) = local_parities(ca, cb);
    CssCode::new(tanner_parity(&g0, &l0)?, tanner_parity(&g1, &l1)?)
}

/// The double-covered left/right Cayley pair on `g` and its complex.
pub fn cayley_complex(g: &GroupTable, a_labels: &[usize], b_labels: &[usize]) -> Result<SquareComplex> {
    let a = bipartite_double_cover(&cayley_graph(g, a_labels, Side::Left)?.to_graph());
    let b = bipartite_double_cover(&cayley_graph(g, b_labels, Side::Right)?.to_graph());
    let p = a.partition().expect("covers carry a partition").to_vec();
    build_complex(&a, &b, &p)
}

pub fn cayley_quantum_tanner(
    g: &GroupTable,
    a_labels: &[usize],
    b_labels: &[usize],
    ca: &LinearCode,
    cb: &LinearCode,
) -> Result<CssCode> {
    css_from_complex(&cayley_complex(g, a_labels, b_labels)?, ca, cb)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixWeights {
    pub rows: usize,
    pub cols: usize,
    pub max_row: usize,
    pub mean_row: f64,
    pub max_col: usize,
    pub mean_col: f64,
}

impl MatrixWeights {
    pub fn of(m: &BitMatrix) -> Self {
        let ones = m.count_ones() as f64;
        let mean = |d: usize| if d == 0 { 0.0 } else { ones / d as f64 };
        Self {
            rows: m.rows(),
            cols: m.cols(),
            max_row: (0..m.rows()).map(|i| m.row_weight(i)).max().unwrap_or(0),
            mean_row: mean(m.rows()),
            max_col: m.col_weights().into_iter().max().unwrap_or(0),
            mean_col: mean(m.cols()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LdpcReport {
    pub h0: MatrixWeights,
    pub h1: MatrixWeights,
}

pub fn ldpc_report(c: &CssCode) -> LdpcReport {
    LdpcReport {
        h0: MatrixWeights::of(c.h0()),
        h1: MatrixWeights::of(c.h1()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z5(ca: &LinearCode, cb: &LinearCode) -> CssCode {
        cayley_quantum_tanner(&GroupTable::cyclic(5), &[1, 4], &[2, 3], ca, cb).unwrap()
    }

    #[test]
    fn z5_repetition() {
        let rep = LinearCode::repetition(2);
        let c = z5(&rep, &rep);
        assert_eq!(c.n(), 10);
        assert_eq!(css_violations(c.h0(), c.h1()).unwrap(), 0);
        // second computation: dim C0 − dim C1^⊥
        assert_eq!(c.k(), c.dim_c0() - c.h1().rank());
        assert_eq!(css_dimension(&c).unwrap(), c.k());
        let r = ldpc_report(&c);
        assert!(r.h0.max_row <= 4 && r.h1.max_row <= 4);
    }

    #[test]
    fn full_local_codes() {
        let full = LinearCode::full(2);
        let c = z5(&full, &full);
        assert_eq!(c.h1().rows(), 0);
        assert_eq!(c.dim_c1(), 10);
        assert_eq!(c.k(), c.dim_c0());
    }

    #[test]
    fn family_weights_constant() {
        let rep = LinearCode::repetition(2);
        let reports: Vec<_> = [5, 7, 9]
            .iter()
            .map(|&m| {
                let c = cayley_quantum_tanner(&GroupTable::cyclic(m), &[1, m - 1], &[2, m - 2], &rep, &rep).unwrap();
                let r = ldpc_report(&c);
                (r.h0.max_row, r.h0.max_col, r.h1.max_row, r.h1.max_col)
            })
            .collect();
        assert!(reports.windows(2).all(|w| w[0] == w[1]), "{reports:?}");
    }

    #[test]
    fn overlapping_labels_rejected() {
        let rep = LinearCode::repetition(2);
        let r = cayley_quantum_tanner(&GroupTable::cyclic(5), &[1, 4], &[1, 4], &rep, &rep);
        assert!(matches!(r, Err(Error::OverlappingEdges { .. })));
    }

    #[test]
    fn dihedral_pair() {
        // D6: reflections s = 6 and r^2 s = 8; left by {s, r^2 s}, right by {r s, r^3 s}
        let d = GroupTable::dihedral(6);
        let rep = LinearCode::repetition(2);
        let c = cayley_quantum_tanner(&d, &[6, 8], &[7, 9], &rep, &rep).unwrap();
        assert_eq!(c.n(), 12 * 4 / 2);
    }

    #[test]
    fn length_mismatch() {
        let x = cayley_complex(&GroupTable::cyclic(5), &[1, 4], &[2, 3]).unwrap();
        let r = css_from_complex(&x, &LinearCode::repetition(3), &LinearCode::repetition(2));
        assert!(matches!(r, Err(Error::Dimension(_))));
    }
}
