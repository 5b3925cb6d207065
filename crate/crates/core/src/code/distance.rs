//! Minimum-weight search by codeword enumeration.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::css::CssCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVec, RowSpace};

pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceOptions {
    /// Largest code dimension enumerated exactly.
    pub cap: usize,
    /// Enumerate even above the cap.
    pub force: bool,
    pub threads: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            force: false,
            threads: 1,
        }
    }
}

/// Minimum weight of a word in `span(gen)` outside `exclude`; `None` when
/// every word is excluded. The result does not depend on `threads`.
pub fn min_weight_outside(gen: &BitMatrix, exclude: &RowSpace, threads: usize) -> Option<usize> {
    let k = gen.rows();
    if k == 0 {
        return None;
    }
    let stride = gen.row_words(0).len();
    let rows: Vec<&[u64]> = (0..k).map(|i| gen.row_words(i)).collect();
    // Shard on the top `high` generators; each shard walks a Gray code over
    // the rest.
    let high = if threads <= 1 { 0 } else { (usize::BITS - (4 * threads - 1).leading_zeros()) as usize }.min(k);
    let low = k - high;
    let shards = 1usize << high;
    let best = AtomicUsize::new(usize::MAX);
    let next = AtomicUsize::new(0);

    let work = || {
        let mut word = vec![0u64; stride];
        loop {
            let shard = next.fetch_add(1, Ordering::Relaxed);
            if shard >= shards {
                break;
            }
            word.iter_mut().for_each(|w| *w = 0);
            for (b, row) in rows[low..].iter().enumerate() {
                if shard >> b & 1 == 1 {
                    xor(&mut word, row);
                }
            }
            let mut local = best.load(Ordering::Relaxed);
            let mut visit = |w: &[u64]| {
                let wt = weight(w);
                if wt > 0 && wt < local && !exclude.contains_words(w) {
                    local = wt;
                }
            };
            visit(&word);
            for i in 1u64..1u64 << low {
                xor(&mut word, rows[i.trailing_zeros() as usize]);
                visit(&word);
            }
            best.fetch_min(local, Ordering::Relaxed);
        }
    };
    if threads <= 1 {
        work();
    } else {
        std::thread::scope(|s| {
            for _ in 0..threads {
                s.spawn(work);
            }
        });
    }
    match best.into_inner() {
        usize::MAX => None,
        d => Some(d),
    }
}

fn xor(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn weight(w: &[u64]) -> usize {
    w.iter().map(|x| x.count_ones() as usize).sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Distance {
    Exact(usize),
    /// The code has no logical operators on this side.
    NoLogical,
    /// Dimension above the cap; nothing was enumerated.
    ExceedsCap(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CssDistances {
    pub dx: Distance,
    pub dz: Distance,
}

fn side(code_gen: &BitMatrix, dual: &BitMatrix, opts: &DistanceOptions) -> Result<Distance> {
    let dim = code_gen.rows();
    if dim > opts.cap && !opts.force {
        return Err(Error::Budget { dim, cap: opts.cap });
    }
    Ok(match min_weight_outside(code_gen, &RowSpace::new(dual), opts.threads) {
        Some(d) => Distance::Exact(d),
        None => Distance::NoLogical,
    })
}

/// `d_X` over `C0 \ C1^⊥` and `d_Z` over `C1 \ C0^⊥`.
///
/// Errors with a budget error when either dimension exceeds the cap and
/// `force` is off.
pub fn css_distances(c: &CssCode, opts: &DistanceOptions) -> Result<CssDistances> {
    let (g0, g1) = (c.h0().nullspace_basis(), c.h1().nullspace_basis());
    for g in [&g0, &g1] {
        if g.rows() > opts.cap && !opts.force {
            return Err(Error::Budget { dim: g.rows(), cap: opts.cap });
        }
    }
    Ok(CssDistances {
        dx: side(&g0, c.h1(), opts)?,
        dz: side(&g1, c.h0(), opts)?,
    })
}

/// Like [`css_distances`], but reports `ExceedsCap` instead of failing.
pub fn css_distances_or_cap(c: &CssCode, opts: &DistanceOptions) -> CssDistances {
    let one = |code: &BitMatrix, dual: &BitMatrix| {
        let g = code.nullspace_basis();
        side(&g, dual, opts).unwrap_or(Distance::ExceedsCap(g.rows()))
    };
    CssDistances {
        dx: one(c.h0(), c.h1()),
        dz: one(c.h1(), c.h0()),
    }
}

/// Upper bounds on `(d_X, d_Z)` from random information sets: each trial
/// permutes the columns, row-reduces the generator and keeps the lightest
/// systematic row outside the dual. A bound, not exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceBound {
    pub dx_upper: Option<usize>,
    pub dz_upper: Option<usize>,
    pub trials: usize,
    pub seed: u64,
}

pub fn random_information_set_bound(c: &CssCode, trials: usize, seed: u64) -> DistanceBound {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probe = |code: &BitMatrix, dual: &BitMatrix| {
        let gen = code.nullspace_basis();
        let dual = RowSpace::new(dual);
        let n = gen.cols();
        let mut best: Option<usize> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        for _ in 0..trials {
            perm.shuffle(&mut rng);
            let (reduced, _) = gen.select_columns(&perm).rref();
            for i in 0..reduced.rows() {
                let mut word = BitVec::zeros(n);
                for j in reduced.row(i).ones() {
                    word.set(perm[j], true);
                }
                if !dual.contains(&word) {
                    let w = word.weight();
                    best = Some(best.map_or(w, |b| b.min(w)));
                }
            }
        }
        best
    };
    let dx_upper = probe(c.h0(), c.h1());
    let dz_upper = probe(c.h1(), c.h0());
    DistanceBound {
        dx_upper,
        dz_upper,
        trials,
        seed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(rows: &[&[u8]], n: usize) -> BitMatrix {
        BitMatrix::from_rows(n, rows)
    }

    #[test]
    fn hamming_distance_three() {
        let h = gen(&[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]], 7);
        let g = h.nullspace_basis();
        let none = RowSpace::new(&BitMatrix::zeros(0, 7));
        for t in [1, 2, 3, 8] {
            assert_eq!(min_weight_outside(&g, &none, t), Some(3));
        }
    }

    #[test]
    fn excluded_everything() {
        let g = gen(&[&[1, 1, 0], &[0, 1, 1]], 3);
        assert_eq!(min_weight_outside(&g, &RowSpace::new(&g), 2), None);
    }

    #[test]
    fn wide_words() {
        // two disjoint blocks of 70 and 90 ones
        let n = 160;
        let g = BitMatrix::from_fn(2, n, |i, j| (i == 0) == (j < 70));
        let none = RowSpace::new(&BitMatrix::zeros(0, n));
        assert_eq!(min_weight_outside(&g, &none, 3), Some(70));
    }

    #[test]
    fn full_space_css() {
        let c = CssCode::new(BitMatrix::zeros(0, 3), BitMatrix::zeros(0, 3)).unwrap();
        let d = css_distances(&c, &DistanceOptions::default()).unwrap();
        assert_eq!(d.dx, Distance::Exact(1));
        assert_eq!(d.dz, Distance::Exact(1));
    }

    #[test]
    fn k_zero_has_no_logicals() {
        // C0 = C1^⊥ = span{110, 011}... h0 = [111], h1 = [110, 011]
        let h0 = gen(&[&[1, 1, 1]], 3);
        let h1 = gen(&[&[1, 1, 0], &[0, 1, 1]], 3);
        let c = CssCode::new(h0, h1).unwrap();
        assert_eq!(c.k(), 0);
        let d = css_distances(&c, &DistanceOptions::default()).unwrap();
        assert_eq!((d.dx, d.dz), (Distance::NoLogical, Distance::NoLogical));
    }

    #[test]
    fn budget() {
        let c = CssCode::new(BitMatrix::zeros(0, 30), BitMatrix::zeros(0, 30)).unwrap();
        let opts = DistanceOptions { cap: 24, ..Default::default() };
        assert!(matches!(css_distances(&c, &opts), Err(Error::Budget { dim: 30, cap: 24 })));
        assert_eq!(css_distances_or_cap(&c, &opts).dx, Distance::ExceedsCap(30));
    }

    #[test]
    fn bound_is_above_exact() {
        let h = gen(&[&[1, 0, 1, 0, 1, 0, 1], &[0, 1, 1, 0, 0, 1, 1], &[0, 0, 0, 1, 1, 1, 1]], 7);
        let c = CssCode::new(h.clone(), h).unwrap();
        let exact = css_distances(&c, &DistanceOptions::default()).unwrap();
        let b = random_information_set_bound(&c, 20, 7);
        assert_eq!(exact.dx, Distance::Exact(3));
        assert!(b.dx_upper.unwrap() >= 3);
    }
}
