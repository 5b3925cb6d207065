use serde::Serialize;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::intmat::IntMatrix;

/// Truth of the block relations for `M_A = [[A1, A2], [A2^T, A3]]` against
/// a block-diagonal `M_B = [[B1, 0], [0, B2]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCommutationReport {
    /// `A2 B2 = B1 A2`
    pub a2b2_eq_b1a2: bool,
    /// `A1 B1 = B1 A1`
    pub a1b1_eq_b1a1: bool,
    /// `A3 B2 = B2 A3`
    pub a3b2_eq_b2a3: bool,
    /// `M_A M_B = M_B M_A`
    pub commutes: bool,
}

struct Blocks {
    a1: IntMatrix,
    a2: IntMatrix,
    a2t: IntMatrix,
    a3: IntMatrix,
    b1: IntMatrix,
    b2: IntMatrix,
}

fn split_blocks(ma: &IntMatrix, mb: &IntMatrix, split: usize) -> Result<Blocks> {
    let n = ma.rows();
    if !ma.is_square() || !mb.is_square() || mb.rows() != n {
        return Err(Error::Dimension(format!(
            "need two square matrices of equal size, got {}x{} and {}x{}",
            ma.rows(),
            ma.cols(),
            mb.rows(),
            mb.cols()
        )));
    }
    if split > n {
        return Err(Error::Dimension(format!("split {split} exceeds size {n}")));
    }
    let off_zero = |m: &IntMatrix| (0..n).all(|i| (0..n).all(|j| (i < split) == (j < split) || m[(i, j)] == 0));
    if !off_zero(mb) {
        return Err(Error::Dimension("M_B is not block diagonal at the given split".into()));
    }
    Ok(Blocks {
        a1: ma.block(0, split, 0, split),
        a2: ma.block(0, split, split, n),
        a2t: ma.block(split, n, 0, split),
        a3: ma.block(split, n, split, n),
        b1: mb.block(0, split, 0, split),
        b2: mb.block(split, n, split, n),
    })
}

pub fn block_commutation_report(ma: &IntMatrix, mb: &IntMatrix, split: usize) -> Result<BlockCommutationReport> {
    let b = split_blocks(ma, mb, split)?;
    Ok(BlockCommutationReport {
        a2b2_eq_b1a2: b.a2.mul(&b.b2)? == b.b1.mul(&b.a2)?,
        a1b1_eq_b1a1: b.a1.commutes_with(&b.b1)?,
        a3b2_eq_b2a3: b.a3.commutes_with(&b.b2)?,
        commutes: ma.commutes_with(mb)?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatedBlocks {
    /// `[[A1, A2], [A2^T, P A3 P^T]]`
    pub matrix: IntMatrix,
    pub a3_commutes_with_b2: bool,
    pub commutes_with_mb: bool,
}

/// Conjugates the lower-right block of `ma` by the permutation matrix of
/// `p`, then re-checks commutation against `mb` by direct multiplication.
pub fn conjugate_component(ma: &IntMatrix, mb: &IntMatrix, split: usize, p: &Permutation) -> Result<ConjugatedBlocks> {
    let b = split_blocks(ma, mb, split)?;
    if p.len() != b.a3.rows() {
        return Err(Error::Dimension(format!(
            "permutation on {} points for a {}x{} block",
            p.len(),
            b.a3.rows(),
            b.a3.cols()
        )));
    }
    let pm = IntMatrix::permutation(p.image());
    let a3 = pm.mul(&b.a3)?.mul(&pm.transpose())?;
    let matrix = IntMatrix::from_blocks(&b.a1, &b.a2, &b.a2t, &a3)?;
    Ok(ConjugatedBlocks {
        a3_commutes_with_b2: a3.commutes_with(&b.b2)?,
        commutes_with_mb: matrix.commutes_with(mb)?,
        matrix,
    })
}
