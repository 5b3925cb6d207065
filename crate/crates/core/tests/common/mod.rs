//! Oracles and corpora shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.

#![allow(dead_code)]

use qtanner::code::LinearCode;
use qtanner::complex::{SquareComplex, SquareGraph};
use qtanner::gf2::BitMatrix;
use qtanner::graph::GroupTable;
use rand::Rng;

/// Plain GF(2) rank on byte rows.
pub fn naive_rank(rows: &[Vec<u8>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Distance of the code `{x : H x = 0}` by scanning all of `F_2^n`.
pub fn naive_distance(parity: &BitMatrix) -> Option<usize> {
    let n = parity.cols();
    assert!(n <= 20);
    let rows = parity.to_rows();
    (1u32..1 << n)
        .filter(|x| rows.iter().all(|r| (0..n).filter(|&j| r[j] == 1 && x >> j & 1 == 1).count() % 2 == 0))
        .map(|x| x.count_ones() as usize)
        .min()
}

/// Every subspace of `F_2^n`, as generator matrices, by closing under
/// single-vector extension.
pub fn all_subspaces(n: usize) -> Vec<BitMatrix> {
    let size = 1usize << n;
    let mut seen = std::collections::BTreeSet::new();
    let mut frontier: Vec<(Vec<bool>, Vec<usize>)> = vec![({
        let mut s = vec![false; size];
        s[0] = true;
        s
    }, Vec::new())];
    let mut out = Vec::new();
    while let Some((members, basis)) = frontier.pop() {
        if !seen.insert(members.clone()) {
            continue;
        }
        out.push(BitMatrix::from_fn(basis.len(), n, |i, j| basis[i] >> j & 1 == 1));
        for x in 0..size {
            if !members[x] {
                let mut next = members.clone();
                for y in 0..size {
                    if members[y] {
                        next[y ^ x] = true;
                    }
                }
                let mut b = basis.clone();
                b.push(x);
                frontier.push((next, b));
            }
        }
    }
    out
}

/// All binary linear codes of length `1..=max_n`.
pub fn code_corpus(max_n: usize) -> Vec<LinearCode> {
    (1..=max_n)
        .flat_map(|n| {
            all_subspaces(n).into_iter().map(move |g| {
                // parity = basis of the orthogonal complement of span(g)
                let comp: Vec<u32> = (0u32..1 << n)
                    .filter(|x| (0..g.rows()).all(|i| (0..n).filter(|&j| g.get(i, j) && x >> j & 1 == 1).count() % 2 == 0))
                    .collect();
                let mut basis: Vec<u32> = Vec::new();
                for x in comp {
                    let mut y = x;
                    for &b in &basis {
                        y = y.min(y ^ b);
                    }
                    if y != 0 {
                        basis.push(y);
                    }
                }
                LinearCode::from_parity(BitMatrix::from_fn(basis.len(), n, |i, j| basis[i] >> j & 1 == 1))
            })
        })
        .collect()
}

/// `(m, a, b)` with `A = {a, -a}`, `B = {b, -b}` on `Z_m`: no label is its
/// own inverse and the two sets are disjoint, so the double-covered pair
/// has no overlapping edges.
pub fn random_cyclic_pair(rng: &mut impl Rng, max_m: usize) -> (usize, usize, usize) {
    loop {
        let m = rng.gen_range(5..=max_m);
        let a = rng.gen_range(1..m);
        let b = rng.gen_range(1..m);
        if 2 * a % m != 0 && 2 * b % m != 0 && b != a && b != m - a {
            return (m, a, b);
        }
    }
}

/// Construction outputs used for the round-trip and formula checks.
pub fn construction_corpus() -> Vec<(String, SquareComplex)> {
    use qtanner::code::cayley_complex;
    let mut out = Vec::new();
    for m in [5usize, 6, 7, 8, 9, 10, 11, 12, 13] {
        for a in 1..m {
            for b in a + 1..m {
                if out.len() >= 24 {
                    break;
                }
                if 2 * a % m == 0 || 2 * b % m == 0 || b == m - a || a > m - a || b > m - b {
                    continue;
                }
                let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).expect("valid pair");
                out.push((format!("Z{m} A={{±{a}}} B={{±{b}}}"), x));
            }
        }
    }
    // degree 4 on Z_11 and Z_13
    for (m, a, b) in [(11usize, [1, 2], [3, 4]), (13, [1, 5], [2, 3])] {
        let al = [a[0], m - a[0], a[1], m - a[1]];
        let bl = [b[0], m - b[0], b[1], m - b[1]];
        out.push((format!("Z{m} Δ=4"), cayley_complex(&GroupTable::cyclic(m), &al, &bl).expect("valid pair")));
    }
    // dihedral rotations: left r^1, right r^2 on D_7
    let d = GroupTable::dihedral(7);
    out.push(("D7 rotations".into(), cayley_complex(&d, &[1, 6], &[2, 5]).expect("valid pair")));
    out
}

/// Entry `(s, t)` of `h0` (1-based; `h1` likewise with the parities) from
/// the block formula: row block
/// `j = ceil(s / (k_A k_B))`, in-block row `r = (s-1) mod k_A k_B + 1`;
/// zero unless edge `t` is at vertex `j`, else the Kronecker entry of the
/// two generators at the edge's local label.
pub fn appendix_entry(g: &SquareGraph, left: &BitMatrix, right: &BitMatrix, s: usize, t: usize) -> bool {
    let (ka, kb) = (left.rows(), right.rows());
    let block = ka * kb;
    let j = (s + block - 1) / block;
    let r = (s - 1) % block + 1;
    let v = j - 1;
    let [x, y] = g.edges()[t - 1];
    let cell = if x.0 == v {
        x.1
    } else if y.0 == v {
        y.1
    } else {
        return false;
    };
    let (ra, rb) = ((r - 1) / kb, (r - 1) % kb);
    left.get(ra, cell.0) && right.get(rb, cell.1)
}

/// The whole matrix from [`appendix_entry`].
pub fn appendix_matrix(g: &SquareGraph, left: &BitMatrix, right: &BitMatrix) -> BitMatrix {
    let rows = g.n_vertices() * left.rows() * right.rows();
    BitMatrix::from_fn(rows, g.n_edges(), |i, j| appendix_entry(g, left, right, i + 1, j + 1))
}
