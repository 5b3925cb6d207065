//! MacKay's alist format for sparse parity-check matrices.
//!
//! ```text
//! N M                      columns, rows
//! max_col max_row
//! col weights (N numbers)
//! row weights (M numbers)
//! N lines: 1-based row indices of each column, padded with 0 to max_col
//! M lines: 1-based column indices of each row, padded with 0 to max_row
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn to_alist(m: &BitMatrix) -> String {
    let t = m.transpose();
    let col_w: Vec<usize> = (0..t.rows()).map(|j| t.row_weight(j)).collect();
    let row_w: Vec<usize> = (0..m.rows()).map(|i| m.row_weight(i)).collect();
    let max_c = col_w.iter().copied().max().unwrap_or(0);
    let max_r = row_w.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.cols(), m.rows());
    let _ = writeln!(out, "{max_c} {max_r}");
    let _ = writeln!(out, "{}", join(col_w.iter().copied()));
    let _ = writeln!(out, "{}", join(row_w.iter().copied()));
    let padded = |ones: Vec<usize>, width: usize| {
        let pad = width - ones.len();
        join(ones.into_iter().map(|x| x + 1).chain(std::iter::repeat(0).take(pad)))
    };
    for j in 0..t.rows() {
        let _ = writeln!(out, "{}", padded(t.row(j).ones().collect(), max_c));
    }
    for i in 0..m.rows() {
        let _ = writeln!(out, "{}", padded(m.row(i).ones().collect(), max_r));
    }
    out
}

/// Parses an alist file. Column and row lists must describe the same
/// matrix and match the declared weights.
pub fn from_alist(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines().enumerate();
    let mut numbers = |what: &str| -> Result<(usize, Vec<usize>)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("alist: missing {what}")))?;
        let nums = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("alist line {}: `{t}` is not a count", no + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((no + 1, nums))
    };
    let expect_len = |(no, v): (usize, Vec<usize>), len: usize, what: &str| -> Result<Vec<usize>> {
        if v.len() != len {
            return Err(Error::Parse(format!("alist line {no}: {what} needs {len} numbers, found {}", v.len())));
        }
        Ok(v)
    };
    let dims = expect_len(numbers("dimensions")?, 2, "dimensions")?;
    let (n, m) = (dims[0], dims[1]);
    let maxes = expect_len(numbers("max weights")?, 2, "max weights")?;
    let (max_c, max_r) = (maxes[0], maxes[1]);
    let col_w = if n == 0 { numbers("column weights")?.1 } else { expect_len(numbers("column weights")?, n, "column weights")? };
    let row_w = if m == 0 { numbers("row weights")?.1 } else { expect_len(numbers("row weights")?, m, "row weights")? };

    let mut by_col = BitMatrix::zeros(m, n);
    for (j, &w) in col_w.iter().enumerate() {
        let (no, idx) = numbers("column list")?;
        if idx.len() != max_c || idx[w.min(max_c)..].iter().any(|&x| x != 0) || idx[..w.min(max_c)].iter().any(|&x| x == 0 || x > m) {
            return Err(Error::Parse(format!("alist line {no}: bad index list for column {}", j + 1)));
        }
        for &r in &idx[..w] {
            by_col.set(r - 1, j, true);
        }
    }
    let mut by_row = BitMatrix::zeros(m, n);
    for (i, &w) in row_w.iter().enumerate() {
        let (no, idx) = numbers("row list")?;
        if idx.len() != max_r || idx[w.min(max_r)..].iter().any(|&x| x != 0) || idx[..w.min(max_r)].iter().any(|&x| x == 0 || x > n) {
            return Err(Error::Parse(format!("alist line {no}: bad index list for row {}", i + 1)));
        }
        for &c in &idx[..w] {
            by_row.set(i, c - 1, true);
        }
    }
    if by_col != by_row {
        return Err(Error::Parse("alist: column and row lists disagree".into()));
    }
    Ok(by_col)
}
