use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;
use super::schreier::SchreierSpec;
use crate::error::{Error, Result};

/// Above this order associativity is sampled instead of checked exhaustively.
pub const FULL_ASSOCIATIVITY_LIMIT: usize = 64;
const SAMPLED_TRIPLES: usize = 1000;

/// A finite group given by its multiplication table over `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `g -> a g`
    Left,
    /// `g -> g b`
    Right,
}

impl GroupTable {
    /// Validates a raw table (`table[i][j] = i * j`).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidGroup(format!("row {i} has length {}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::InvalidGroup(format!("entry {x} in row {i} out of range")));
            }
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let at = |i: usize, j: usize| mul[i * order + j];
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| at(e, g) == g && at(g, e) == g))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let mut inv = vec![0; order];
        for g in 0..order {
            inv[g] = (0..order)
                .find(|&h| at(g, h) == identity && at(h, g) == identity)
                .ok_or_else(|| Error::InvalidGroup(format!("element {g} has no inverse")))?;
        }
        let assoc = |a: usize, b: usize, c: usize| at(at(a, b), c) == at(a, at(b, c));
        if order <= FULL_ASSOCIATIVITY_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                }
            }
        }
        Ok(Self {
            order,
            mul,
            inv,
            identity,
        })
    }

    /// The cyclic group Z_n with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0);
        Self {
            order: n,
            mul: (0..n * n).map(|x| (x / n + x % n) % n).collect(),
            inv: (0..n).map(|g| (n - g) % n).collect(),
            identity: 0,
        }
    }

    /// The dihedral group of order `2n`. Element `k + n*f` is `r^k s^f`,
    /// with `s r s = r^-1`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n > 0);
        let order = 2 * n;
        let decode = |g: usize| (g % n, g / n);
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                let (a, f) = decode(x);
                let (b, g) = decode(y);
                let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
                mul[x * order + y] = k + n * ((f + g) % 2);
            }
        }
        let inv = (0..order)
            .map(|x| {
                let (a, f) = decode(x);
                if f == 0 {
                    (n - a) % n
                } else {
                    x
                }
            })
            .collect();
        Self {
            order,
            mul,
            inv,
            identity: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    /// Left or right multiplication by `x` as a permutation of the group.
    pub fn translation(&self, x: usize, side: Side) -> Permutation {
        let image = (0..self.order)
            .map(|g| match side {
                Side::Left => self.mul(x, g),
                Side::Right => self.mul(g, x),
            })
            .collect();
        Permutation::new(image).expect("group translations are bijections")
    }
}

/// Pairs each label slot with a slot holding the inverse element.
///
/// For `x != x^-1` the k-th occurrence of `x` is paired with the k-th
/// occurrence of `x^-1`. Every occurrence of a self-inverse element is
/// paired with itself, including repeated ones.
pub fn inverse_pairing(g: &GroupTable, labels: &[usize]) -> Result<Vec<usize>> {
    let mut pairing = vec![usize::MAX; labels.len()];
    for (i, &x) in labels.iter().enumerate() {
        if x >= g.order() {
            return Err(Error::InvalidGroup(format!("label {x} is not a group element")));
        }
        if pairing[i] != usize::MAX {
            continue;
        }
        let xi = g.inv(x);
        if xi == x {
            pairing[i] = i;
            continue;
        }
        let j = labels
            .iter()
            .enumerate()
            .position(|(j, &y)| y == xi && pairing[j] == usize::MAX)
            .ok_or_else(|| Error::NotSymmetric(format!("label {x} (slot {i}) has no unpaired inverse {xi}")))?;
        pairing[i] = j;
        pairing[j] = i;
    }
    Ok(pairing)
}

/// The Cayley graph of `g` on the label multiset, as a Schreier spec.
pub fn cayley_graph(g: &GroupTable, labels: &[usize], side: Side) -> Result<SchreierSpec> {
    let pairing = inverse_pairing(g, labels)?;
    let perms = labels.iter().map(|&x| g.translation(x, side)).collect();
    SchreierSpec::new(g.order(), perms, pairing)
}
