use serde::Serialize;

use super::distance::min_weight_outside;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, RowSpace};

/// A binary linear code given by a parity-check matrix, which may have
/// redundant rows. The generator is the nullspace basis of the parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearCode {
    n: usize,
    parity: BitMatrix,
    generator: BitMatrix,
    d: Option<usize>,
}

impl LinearCode {
    pub fn from_parity(parity: BitMatrix) -> Self {
        let generator = parity.nullspace_basis();
        Self {
            n: parity.cols(),
            parity,
            generator,
            d: None,
        }
    }

    fn with_distance(mut self, d: Option<usize>) -> Self {
        self.d = d;
        self
    }

    /// `[n, 1, n]`; parity rows `e_0 + e_i`.
    pub fn repetition(n: usize) -> Self {
        let h = BitMatrix::from_fn(n.saturating_sub(1), n, |i, j| j == 0 || j == i + 1);
        Self::from_parity(h).with_distance((n > 0).then_some(n))
    }

    /// `[n, n-1, 2]`; a single all-ones parity row.
    pub fn single_parity(n: usize) -> Self {
        let h = BitMatrix::from_fn(1, n, |_, _| true);
        Self::from_parity(h).with_distance((n > 1).then_some(2))
    }

    /// The whole space; no parity rows.
    pub fn full(n: usize) -> Self {
        Self::from_parity(BitMatrix::zeros(0, n)).with_distance((n > 0).then_some(1))
    }

    /// `{0}`; identity parity.
    pub fn zero(n: usize) -> Self {
        Self::from_parity(BitMatrix::identity(n))
    }

    /// Parses `rep<n>`, `spc<n>`, `full<n>` or `zero<n>`.
    pub fn by_name(name: &str) -> Result<Self> {
        let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
        let (kind, len) = name.split_at(split);
        let n: usize = len
            .parse()
            .map_err(|_| Error::Parse(format!("local code `{name}`: expected a length after the family name")))?;
        match kind {
            "rep" => Ok(Self::repetition(n)),
            "spc" => Ok(Self::single_parity(n)),
            "full" => Ok(Self::full(n)),
            "zero" => Ok(Self::zero(n)),
            _ => Err(Error::Parse(format!(
                "local code `{name}`: family must be rep, spc, full or zero"
            ))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn parity(&self) -> &BitMatrix {
        &self.parity
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Known distance, if the code came from a named family.
    pub fn known_distance(&self) -> Option<usize> {
        self.d
    }

    pub fn contains(&self, word: &BitVec) -> bool {
        (0..self.parity.rows()).all(|i| !self.parity.row(i).dot(word))
    }

    /// Minimum nonzero weight by enumeration; `None` for `k = 0`.
    pub fn min_distance(&self) -> Option<usize> {
        if let Some(d) = self.d {
            return Some(d);
        }
        min_weight_outside(&self.generator, &RowSpace::new(&BitMatrix::zeros(0, self.n)), 1)
    }
}

/// The dual code: its parity is the generator of `c`.
pub fn dual_parity(c: &LinearCode) -> LinearCode {
    LinearCode::from_parity(c.generator().clone())
}

/// Parities of `C_A ⊗ C_B` and of the dual-tensor code
/// `(C_A^⊥ ⊗ C_B^⊥)^⊥ = C_A ⊗ F + F ⊗ C_B`, in row-major flattening
/// (coordinate `i * n_B + j`).
pub fn tensor_parity(ca: &LinearCode, cb: &LinearCode) -> (BitMatrix, BitMatrix) {
    let (na, nb) = (ca.n(), cb.n());
    let left = ca.parity().kron(&BitMatrix::identity(nb));
    let right = BitMatrix::identity(na).kron(cb.parity());
    let tensor = BitMatrix::vstack(na * nb, &[&left, &right]);
    (tensor, ca.parity().kron(cb.parity()))
}
