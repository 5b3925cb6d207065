//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are packed into `u64` words, least significant bit first. Bits past
//! the last column of a row are always zero, so word-level comparisons and
//! popcounts never see garbage.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A packed vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// Builds a vector from 0/1 entries; any nonzero byte counts as one.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        if len % WORD != 0 {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % WORD)) - 1;
            }
        }
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Parity of the inner product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec[{s}]")
    }
}

/// Dense row-major matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a `rows x cols` matrix from a predicate on entries.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from dense 0/1 rows. All rows must have `cols` entries.
    pub fn from_rows<R: AsRef<[u8]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row {i} has {} entries, expected {cols}", r.len());
            for (j, &b) in r.iter().enumerate() {
                if b != 0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_bitvecs(cols: usize, rows: &[BitVec]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            m.row_words_mut(i).copy_from_slice(r.words());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(i < self.rows && j < self.cols, "({i},{j}) out of {}x{}", self.rows, self.cols);
        self.data[i * self.stride + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "({i},{j}) out of {}x{}", self.rows, self.cols);
        let w = &mut self.data[i * self.stride + j / WORD];
        let mask = 1u64 << (j % WORD);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize, j: usize) {
        assert!(i < self.rows && j < self.cols);
        self.data[i * self.stride + j / WORD] ^= 1u64 << (j % WORD);
    }

    #[inline]
    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(i).to_vec())
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.cols];
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                w[j] += 1;
            }
        }
        w
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.stride {
            self.data.swap(a * self.stride + k, b * self.stride + k);
        }
    }

    /// `row[dst] ^= row[src]`
    fn xor_row_into(&mut self, src: usize, dst: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (lo, hi) = if src < dst {
            let (l, h) = self.data.split_at_mut(dst * s);
            (&l[src * s..src * s + s], &mut h[..s])
        } else {
            let (l, h) = self.data.split_at_mut(src * s);
            (&h[..s] as &[u64], &mut l[dst * s..dst * s + s])
        };
        for (d, v) in hi.iter_mut().zip(lo) {
            *d ^= v;
        }
    }

    /// Reduces `self` in place to reduced row echelon form and returns the
    /// pivot columns. Pivots are taken at the leftmost nonzero column, from
    /// the topmost remaining row, so the output is deterministic.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(p, next);
            for r in 0..self.rows {
                if r != next && self.get(r, col) {
                    self.xor_row_into(next, r);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (BitMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m.take_rows(pivots.len()), pivots)
    }

    fn take_rows(mut self, n: usize) -> BitMatrix {
        self.data.truncate(n * self.stride);
        self.rows = n;
        self
    }

    /// GF(2) row rank.
    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// A basis of `{x : self * x^T = 0}`, one basis vector per row, ordered
    /// by the free column it owns.
    pub fn nullspace_basis(&self) -> BitMatrix {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = BitMatrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, true);
            for (i, &p) in pivots.iter().enumerate() {
                if r.get(i, f) {
                    out.set(k, p, true);
                }
            }
        }
        out
    }

    /// Kronecker product with the row-major block layout
    /// `[[a11 B, a12 B, ...], ...]`.
    pub fn kron(&self, other: &BitMatrix) -> BitMatrix {
        let (rb, cb) = (other.rows, other.cols);
        let mut out = BitMatrix::zeros(self.rows * rb, self.cols * cb);
        for i in 0..self.rows {
            for k in self.row(i).ones() {
                for j in 0..rb {
                    for l in other.row(j).ones() {
                        out.set(i * rb + j, k * cb + l, true);
                    }
                }
            }
        }
        out
    }

    /// Whether `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &BitVec) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok(RowSpace::new(self).contains(v))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in self.row(i).ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Matrix product over GF(2).
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in self.row(i).ones() {
                let src = other.row_words(k).to_vec();
                for (d, s) in out.row_words_mut(i).iter_mut().zip(&src) {
                    *d ^= s;
                }
            }
        }
        Ok(out)
    }

    /// `self * other^T`, computed row against row.
    pub fn mul_transpose(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{}x{} times ({}x{})^T",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = BitMatrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            let a = self.row_words(i);
            for j in 0..other.rows {
                let b = other.row_words(j);
                let parity = a
                    .iter()
                    .zip(b)
                    .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones());
                if parity & 1 == 1 {
                    out.set(i, j, true);
                }
            }
        }
        Ok(out)
    }

    /// Stacks matrices vertically. All inputs must share a column count.
    pub fn vstack(cols: usize, parts: &[&BitMatrix]) -> BitMatrix {
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut out = BitMatrix::zeros(rows, cols);
        let mut r = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "vstack column mismatch");
            for i in 0..p.rows {
                out.row_words_mut(r).copy_from_slice(p.row_words(i));
                r += 1;
            }
        }
        out
    }

    /// New matrix whose column `j` is column `map[j]` of `self`.
    pub fn select_columns(&self, map: &[usize]) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.rows, map.len());
        for i in 0..self.rows {
            for (j, &src) in map.iter().enumerate() {
                if self.get(i, src) {
                    out.set(i, j, true);
                }
            }
        }
        out
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows).map(|i| self.row(i).to_bits()).collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let s: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

/// Dense serialized form: `{"rows": r, "cols": c, "data": [[0,1,...],...]}`.
#[derive(Serialize, Deserialize)]
struct DenseForm {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u8>>,
}

impl Serialize for BitMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DenseForm {
            rows: self.rows,
            cols: self.cols,
            data: self.to_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BitMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let form = DenseForm::deserialize(d)?;
        if form.data.len() != form.rows || form.data.iter().any(|r| r.len() != form.cols) {
            return Err(serde::de::Error::custom("matrix data does not match rows/cols"));
        }
        if form.data.iter().flatten().any(|&b| b > 1) {
            return Err(serde::de::Error::custom("matrix entries must be 0 or 1"));
        }
        Ok(BitMatrix::from_rows(form.cols, &form.data))
    }
}

/// Row space of a matrix held in reduced echelon form, for repeated
/// membership queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: BitMatrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &BitMatrix) -> Self {
        let (basis, pivots) = m.rref();
        Self { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.basis.cols());
        self.contains_words(v.words())
    }

    /// Membership for a packed row of the right width.
    pub fn contains_words(&self, words: &[u64]) -> bool {
        let mut w = words.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if w[p / WORD] >> (p % WORD) & 1 == 1 {
                for (d, s) in w.iter_mut().zip(self.basis.row_words(i)) {
                    *d ^= s;
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Reference rank on plain byte rows, kept separate from the packed path.
    fn reference_rank(rows: &[Vec<u8>]) -> usize {
        let mut m: Vec<Vec<u8>> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
                m.swap(rank, p);
                for r in 0..m.len() {
                    if r != rank && m[r][c] == 1 {
                        for k in 0..cols {
                            m[r][k] ^= m[rank][k];
                        }
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    fn span(rows: &[Vec<u8>], cols: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << rows.len()) {
            let mut v = vec![0u8; cols];
            for (i, r) in rows.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for k in 0..cols {
                        v[k] ^= r[k];
                    }
                }
            }
            out.push(v);
        }
        out
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.gen_bool(0.5))
    }

    #[test]
    fn rank_trivial_cases() {
        assert_eq!(BitMatrix::identity(5).rank(), 5);
        assert_eq!(BitMatrix::zeros(3, 7).rank(), 0);
        assert_eq!(BitMatrix::zeros(0, 4).rank(), 0);
    }

    #[test]
    fn rank_matches_reference_on_random_6x9() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let m = random_matrix(&mut rng, 6, 9);
            assert_eq!(m.rank(), reference_rank(&m.to_rows()));
        }
    }

    #[test]
    fn nullspace_edge_cases() {
        let k = BitMatrix::identity(4).nullspace_basis();
        assert_eq!((k.rows(), k.cols()), (0, 4));

        let k = BitMatrix::from_rows(2, &[[1, 1]]).nullspace_basis();
        assert_eq!(k.to_rows(), vec![vec![1, 1]]);
    }

    #[test]
    fn nullspace_of_repetition_check_is_all_ones() {
        // checks of the [3,1,3] repetition code
        let h = BitMatrix::from_rows(3, &[[1, 1, 0], [0, 1, 1]]);
        let k = h.nullspace_basis();
        assert_eq!(k.to_rows(), vec![vec![1, 1, 1]]);
        // exhaustive kernel: exactly {000, 111}
        let kernel: Vec<u8> = (0u8..8)
            .filter(|&x| {
                let v = BitVec::from_bits(&[x & 1, x >> 1 & 1, x >> 2 & 1]);
                (0..h.rows()).all(|i| !h.row(i).dot(&v))
            })
            .collect();
        assert_eq!(kernel, vec![0, 7]);
    }

    #[test]
    fn kron_examples() {
        assert_eq!(BitMatrix::identity(2).kron(&BitMatrix::identity(3)), BitMatrix::identity(6));
        let a = BitMatrix::from_rows(2, &[[1, 1]]);
        let b = BitMatrix::from_rows(3, &[[1, 0, 1]]);
        let k = a.kron(&b);
        assert_eq!(k.to_rows(), vec![vec![1, 0, 1, 1, 0, 1]]);
        // index formula: (i*rb + j, k*cb + l) = a(i,k) b(j,l)
        for r in 0..k.rows() {
            for c in 0..k.cols() {
                let (i, j, kk, l) = (r / 1, r % 1, c / 3, c % 3);
                assert_eq!(k.get(r, c), a.get(i, kk) && b.get(j, l));
            }
        }
    }

    #[test]
    fn row_space_membership() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = random_matrix(&mut rng, 4, 6);
        for i in 0..4 {
            assert!(m.row_space_contains(&m.row(i)).unwrap());
        }
        assert!(m.row_space_contains(&BitVec::zeros(6)).unwrap());
        assert!(m.row_space_contains(&BitVec::zeros(5)).is_err());

        // rank-deficient: third row is the sum of the first two
        let d = BitMatrix::from_rows(
            6,
            &[[1, 0, 1, 0, 0, 1], [0, 1, 1, 0, 1, 0], [1, 1, 0, 0, 1, 1], [0, 0, 0, 1, 1, 0]],
        );
        let all = span(&d.to_rows(), 6);
        let outside = (0u8..64)
            .map(|x| (0..6).map(|k| x >> k & 1).collect::<Vec<u8>>())
            .find(|v| !all.contains(v))
            .unwrap();
        assert!(!d.row_space_contains(&BitVec::from_bits(&outside)).unwrap());
    }

    #[test]
    fn mul_transpose_agrees_with_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_matrix(&mut rng, 5, 70);
        let b = random_matrix(&mut rng, 4, 70);
        assert_eq!(a.mul_transpose(&b).unwrap(), a.mul(&b.transpose()).unwrap());
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let m = random_matrix(&mut rng, 20, 150);
        assert_eq!(m.rank(), reference_rank(&m.to_rows()));
        let k = m.nullspace_basis();
        assert!(m.mul_transpose(&k).unwrap().is_zero());
        assert_eq!(k.rows() + m.rank(), 150);
    }

    #[test]
    fn serde_dense_form() {
        let m = BitMatrix::from_rows(3, &[[1, 0, 1], [0, 1, 1]]);
        let s = serde_json::to_string(&m).unwrap();
        let back: BitMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }

    fn arb_matrix(max_r: usize, max_c: usize) -> impl Strategy<Value = BitMatrix> {
        (0..=max_r, 1..=max_c).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r)
                .prop_map(move |rows| BitMatrix::from_rows(c, &rows))
        })
    }

    proptest! {
        #[test]
        fn kron_rank_is_product(a in arb_matrix(6, 8), b in arb_matrix(6, 8)) {
            prop_assert_eq!(a.kron(&b).rank(), a.rank() * b.rank());
        }

        #[test]
        fn rank_nullity(m in arb_matrix(10, 12)) {
            let k = m.nullspace_basis();
            prop_assert_eq!(m.rank() + k.rows(), m.cols());
            prop_assert_eq!(k.rank(), k.rows());
            prop_assert!(m.mul_transpose(&k).unwrap().is_zero());
        }

        #[test]
        fn kron_is_associative(a in arb_matrix(3, 3), b in arb_matrix(3, 3), c in arb_matrix(3, 3)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn membership_matches_span(m in arb_matrix(12, 7), bits in proptest::collection::vec(0u8..2, 7)) {
            let cols = m.cols();
            let v: Vec<u8> = bits[..cols].to_vec();
            let expected = span(&m.to_rows(), cols).contains(&v);
            prop_assert_eq!(m.row_space_contains(&BitVec::from_bits(&v)).unwrap(), expected);
        }

        #[test]
        fn rank_invariant_under_row_permutation(m in arb_matrix(8, 9), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut rows = m.to_rows();
            rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(BitMatrix::from_rows(m.cols(), &rows).rank(), m.rank());
        }
    }
}
