//! Dense symmetric eigensolver and the expansion quantities built on it.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{graphs_commute, LabeledGraph};
use crate::intmat::IntMatrix;

/// Off-diagonal stopping threshold, relative to the Frobenius norm.
pub const JACOBI_REL_TOL: f64 = 1e-12;
/// Matching tolerance for the trivial eigenvalues ±Δ.
pub const TRIVIAL_TOL: f64 = 1e-6;
/// Slack for the Ramanujan comparison.
pub const RAMANUJAN_TOL: f64 = 1e-9;
const MAX_SWEEPS: usize = 100;
/// Eigenvalues of the first matrix closer than this are treated as one
/// eigenspace when building a common eigenbasis.
const CLUSTER_TOL: f64 = 1e-7;

/// Eigenvalues sorted in descending order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tolerance: f64,
}

/// Cyclic Jacobi on a dense symmetric `n x n` row-major matrix. Returns the
/// eigenvalues (unsorted) and the eigenvectors as columns of a row-major
/// matrix.
pub fn jacobi(m: &[f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    assert_eq!(m.len(), n * n);
    let mut a = m.to_vec();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = JACOBI_REL_TOL * norm;
    let off = |a: &[f64]| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    for _ in 0..MAX_SWEEPS {
        if off(&a) <= threshold {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (a[k * n + p], a[k * n + q]);
                    a[k * n + p] = c * kp - s * kq;
                    a[k * n + q] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[p * n + k], a[q * n + k]);
                    a[p * n + k] = c * pk - s * qk;
                    a[q * n + k] = s * pk + c * qk;
                }
                for k in 0..n {
                    let (kp, kq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * kp - s * kq;
                    v[k * n + q] = s * kp + c * kq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i * n + i]).collect(), v)
}

fn sorted_desc(mut xs: Vec<f64>) -> Vec<f64> {
    xs.sort_by(|a, b| b.total_cmp(a));
    xs
}

pub fn eigenvalues_symmetric(m: &IntMatrix) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::Domain("eigenvalues_symmetric needs a square symmetric matrix".into()));
    }
    let (vals, _) = jacobi(&m.to_f64(), m.rows());
    Ok(Spectrum {
        eigenvalues: sorted_desc(vals),
        tolerance: 1e-9,
    })
}

/// Second-largest absolute adjacency eigenvalue, with the convention that
/// a disconnected graph has λ = Δ.
pub fn lambda(g: &LabeledGraph) -> Result<f64> {
    let n = g.n_vertices();
    if n <= 2 {
        return Err(Error::Domain(format!("λ is defined only for more than 2 vertices, got {n}")));
    }
    let delta = g.delta() as f64;
    if g.n_components() > 1 {
        return Ok(delta);
    }
    let mut vals = eigenvalues_symmetric(&g.adjacency())?.eigenvalues;
    let mut remove = |target: f64| {
        if let Some(i) = vals.iter().position(|&x| (x - target).abs() <= TRIVIAL_TOL) {
            vals.remove(i);
        }
    };
    remove(delta);
    if g.is_bipartite() {
        remove(-delta);
    }
    Ok(vals.iter().fold(0.0, |m, x| m.max(x.abs())))
}

pub fn ramanujan_bound(delta: usize) -> f64 {
    2.0 * (delta.saturating_sub(1) as f64).sqrt()
}

pub fn is_ramanujan(g: &LabeledGraph) -> Result<bool> {
    Ok(lambda(g)? <= ramanujan_bound(g.delta()) + RAMANUJAN_TOL)
}

/// Hypotheses under which λ of the square graph is at most 4(Δ−1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamanujanHypotheses {
    pub same_degree: bool,
    pub a_not_bipartite: bool,
    pub b_not_bipartite: bool,
    pub a_connected: bool,
    pub a_ramanujan: bool,
    pub b_components: usize,
    /// Every component of `b` is Ramanujan.
    pub b_components_ramanujan: bool,
    /// With two components in `b`: each vertex has as many `a`-neighbours
    /// in its own `b`-component as in the other one.
    pub balanced_rows: bool,
}

impl RamanujanHypotheses {
    pub fn all_hold(&self) -> bool {
        self.same_degree
            && self.a_not_bipartite
            && self.b_not_bipartite
            && self.a_connected
            && self.a_ramanujan
            && self.b_components <= 2
            && self.b_components_ramanujan
            && self.balanced_rows
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductSpectrumReport {
    /// `(α, β)` per common eigenvector, sorted by descending `α`, then `β`.
    pub pairs: Vec<(f64, f64)>,
    /// Max deviation between sorted `αβ` and the spectrum of `M_A M_B`.
    pub product_residual: f64,
    /// Max deviation between sorted `α+β` and the spectrum of `M_A + M_B`.
    pub sum_residual: f64,
    /// Max of `|M_A u − α u|` and `|M_B u − β u|` over the basis.
    pub eigenvector_residual: f64,
    /// Largest `|αβ|` after dropping the pair of the all-ones vector.
    pub lambda_square: f64,
    pub bound: f64,
    pub hypotheses: RamanujanHypotheses,
    /// `Some(λ ≤ bound)` when every hypothesis holds.
    pub bound_holds: Option<bool>,
    /// `α` on the second `β = Δ` eigenvector, present when `b` has exactly
    /// two components. That vector is `(u, −u)` up to scaling.
    pub split_vector_alpha: Option<f64>,
    pub split_vector_is_u_minus_u: Option<bool>,
}

fn matvec(m: &[f64], n: usize, x: &[f64]) -> Vec<f64> {
    (0..n).map(|i| (0..n).map(|j| m[i * n + j] * x[j]).sum()).collect()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Orthonormal common eigenbasis of two commuting symmetric matrices:
/// diagonalize `ma`, then diagonalize `mb` inside each eigenspace of `ma`.
fn common_eigenbasis(ma: &[f64], mb: &[f64], n: usize) -> Vec<Vec<f64>> {
    let (vals, vecs) = jacobi(ma, n);
    let col = |k: usize| (0..n).map(|i| vecs[i * n + k]).collect::<Vec<f64>>();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| vals[y].total_cmp(&vals[x]));
    let mut basis = Vec::with_capacity(n);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && (vals[order[start]] - vals[order[end]]).abs() <= CLUSTER_TOL {
            end += 1;
        }
        let space: Vec<Vec<f64>> = order[start..end].iter().map(|&k| col(k)).collect();
        let d = space.len();
        let images: Vec<Vec<f64>> = space.iter().map(|u| matvec(mb, n, u)).collect();
        let mut small = vec![0.0; d * d];
        for i in 0..d {
            for j in 0..d {
                small[i * d + j] = dot(&space[i], &images[j]);
            }
        }
        let (_, rot) = jacobi(&small, d);
        for k in 0..d {
            let mut u = vec![0.0; n];
            for (i, s) in space.iter().enumerate() {
                let r = rot[i * d + k];
                for (x, y) in u.iter_mut().zip(s) {
                    *x += r * y;
                }
            }
            basis.push(u);
        }
        start = end;
    }
    basis
}

fn max_sorted_diff(mut x: Vec<f64>, y: &[f64]) -> f64 {
    x.sort_by(|a, b| b.total_cmp(a));
    x.iter().zip(y).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
}

fn hypotheses(a: &LabeledGraph, b: &LabeledGraph) -> RamanujanHypotheses {
    let comps = b.components();
    let b_components = b.n_components();
    let b_components_ramanujan = (0..b_components).all(|c| {
        let vs: Vec<usize> = (0..comps.len()).filter(|&v| comps[v] == c).collect();
        b.component_subgraph(&vs)
            .and_then(|g| is_ramanujan(&g))
            .unwrap_or(false)
    });
    let balanced_rows = b_components != 2
        || (0..a.n_vertices()).all(|v| {
            let own = (0..a.delta()).filter(|&l| comps[a.dst(v, l)] == comps[v]).count();
            2 * own == a.delta()
        });
    RamanujanHypotheses {
        same_degree: a.delta() == b.delta(),
        a_not_bipartite: !a.is_bipartite(),
        b_not_bipartite: !b.is_bipartite(),
        a_connected: a.n_components() == 1,
        a_ramanujan: is_ramanujan(a).unwrap_or(false),
        b_components,
        b_components_ramanujan,
        balanced_rows,
    }
}

pub fn product_spectrum_check(a: &LabeledGraph, b: &LabeledGraph) -> Result<ProductSpectrumReport> {
    if !graphs_commute(a, b)? {
        return Err(Error::NonCommuting("adjacency matrices do not commute".into()));
    }
    let n = a.n_vertices();
    let (ia, ib) = (a.adjacency(), b.adjacency());
    let (ma, mb) = (ia.to_f64(), ib.to_f64());
    let basis = common_eigenbasis(&ma, &mb, n);

    let mut pairs = Vec::with_capacity(n);
    let mut eigenvector_residual: f64 = 0.0;
    for u in &basis {
        let (au, bu) = (matvec(&ma, n, u), matvec(&mb, n, u));
        let (alpha, beta) = (dot(u, &au), dot(u, &bu));
        for (x, (y, z)) in u.iter().zip(au.iter().zip(&bu)) {
            eigenvector_residual = eigenvector_residual.max((y - alpha * x).abs()).max((z - beta * x).abs());
        }
        pairs.push((alpha, beta, u));
    }
    let product = eigenvalues_symmetric(&ia.mul(&ib)?)?.eigenvalues;
    let sum = eigenvalues_symmetric(&ia.add(&ib)?)?.eigenvalues;
    let product_residual = max_sorted_diff(pairs.iter().map(|p| p.0 * p.1).collect(), &product);
    let sum_residual = max_sorted_diff(pairs.iter().map(|p| p.0 + p.1).collect(), &sum);

    let (da, db) = (a.delta() as f64, b.delta() as f64);
    let trivial = pairs
        .iter()
        .enumerate()
        .min_by(|x, y| {
            let dx = (x.1 .0 - da).abs() + (x.1 .1 - db).abs();
            let dy = (y.1 .0 - da).abs() + (y.1 .1 - db).abs();
            dx.total_cmp(&dy)
        })
        .map(|(i, _)| i);
    let lambda_square = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| Some(*i) != trivial)
        .fold(0.0, |m: f64, (_, p)| m.max((p.0 * p.1).abs()));

    let hyp = hypotheses(a, b);
    let bound = 4.0 * (a.delta().saturating_sub(1) as f64);
    let bound_holds = hyp.all_hold().then_some(lambda_square <= bound + TRIVIAL_TOL);

    let (mut split_vector_alpha, mut split_vector_is_u_minus_u) = (None, None);
    if hyp.b_components == 2 {
        let comps = b.components();
        let split = pairs
            .iter()
            .enumerate()
            .filter(|(i, p)| Some(*i) != trivial && (p.1 - db).abs() <= TRIVIAL_TOL)
            .map(|(_, p)| p)
            .next();
        if let Some(&(alpha, _, u)) = split {
            split_vector_alpha = Some(alpha);
            let sign = |v: usize| if comps[v] == comps[0] { 1.0 } else { -1.0 };
            let scale = u[0];
            split_vector_is_u_minus_u = Some(
                scale.abs() > TRIVIAL_TOL && (0..n).all(|v| (u[v] - sign(v) * scale).abs() <= TRIVIAL_TOL),
            );
        }
    }

    let mut pairs: Vec<(f64, f64)> = pairs.into_iter().map(|p| (p.0, p.1)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0).then(y.1.total_cmp(&x.1)));
    Ok(ProductSpectrumReport {
        pairs,
        product_residual,
        sum_residual,
        eigenvector_residual,
        lambda_square,
        bound,
        hypotheses: hyp,
        bound_holds,
        split_vector_alpha,
        split_vector_is_u_minus_u,
    })
}
