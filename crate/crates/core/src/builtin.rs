//! Built-in example graphs.

use crate::complex::{build_complex, SquareComplex};
use crate::error::Result;
use crate::graph::{
    bipartite_double_cover, cayley_graph, quadripartite_pair, GroupTable, LabeledGraph, Permutation, SchreierSpec,
    Side,
};
use crate::intmat::IntMatrix;

/// The 5-cycle `1-2-3-4-5-1`.
pub fn c5() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 1, 0, 0, 1],
        vec![1, 0, 1, 0, 0],
        vec![0, 1, 0, 1, 0],
        vec![0, 0, 1, 0, 1],
        vec![1, 0, 0, 1, 0],
    ])
}

/// The pentagram `1-3-5-2-4-1`.
pub fn c5_prime() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 0, 1, 1, 0],
        vec![0, 0, 0, 1, 1],
        vec![1, 0, 0, 0, 1],
        vec![1, 1, 0, 0, 0],
        vec![0, 1, 1, 0, 0],
    ])
}

fn block_perm(first: impl Fn(usize) -> usize, second: impl Fn(usize) -> usize) -> Permutation {
    let image = (0..10).map(|v| if v < 5 { first(v) } else { 5 + second(v - 5) }).collect();
    Permutation::new(image).expect("block map is a permutation")
}

/// The Petersen graph and the two-pentagon graph, commuting.
///
/// Vertices `0..5` are the outer cycle, `5..10` the inner pentagram, with
/// spoke `i - (i+5)`. A: `a0` is the spoke (its own pair), `a1` steps +1
/// outside and +2 inside, `a2 = a1^-1`. B: `b0` steps +1 in both cycles,
/// `b1 = b0^-1`.
pub fn petersen_pair() -> (SchreierSpec, SchreierSpec) {
    let spoke = Permutation::new((0..10).map(|v| (v + 5) % 10).collect()).expect("involution");
    let a1 = block_perm(|i| (i + 1) % 5, |i| (i + 2) % 5);
    let a = SchreierSpec::new(10, vec![spoke, a1.clone(), a1.inverse()], vec![0, 2, 1]).expect("valid spec");
    let b0 = block_perm(|i| (i + 1) % 5, |i| (i + 1) % 5);
    let b = SchreierSpec::new(10, vec![b0.clone(), b0.inverse()], vec![1, 0]).expect("valid spec");
    (a, b)
}

/// The two-pentagon graph with a self-loop label `b2` added at every vertex.
pub fn petersen_b_with_loops() -> SchreierSpec {
    let (_, b) = petersen_pair();
    let mut perms = b.perms().to_vec();
    perms.push(Permutation::identity(10));
    SchreierSpec::new(10, perms, vec![1, 0, 2]).expect("valid spec")
}

/// Petersen with loops added to B, the quadripartite pair (cover of A and
/// two copies of B), then double covers of both: 40 vertices, Δ = 3.
pub fn remedied_petersen() -> Result<(LabeledGraph, LabeledGraph, Vec<u8>)> {
    let (a, _) = petersen_pair();
    let q = quadripartite_pair(&a.to_graph(), &petersen_b_with_loops().to_graph())?;
    let (a, b) = (bipartite_double_cover(&q.a), bipartite_double_cover(&q.b));
    let partition = a.partition().expect("covers carry a partition").to_vec();
    Ok((a, b, partition))
}

pub fn remedied_petersen_complex() -> Result<SquareComplex> {
    let (a, b, p) = remedied_petersen()?;
    build_complex(&a, &b, &p)
}

/// Double covers of `Cay_left(Z_m, {1, m-1})` and `Cay_right(Z_m, {2, m-2})`.
pub fn cyclic_pair(m: usize) -> Result<(LabeledGraph, LabeledGraph)> {
    let g = GroupTable::cyclic(m);
    let a = cayley_graph(&g, &[1 % m.max(1), m.saturating_sub(1)], Side::Left)?;
    let b = cayley_graph(&g, &[2 % m.max(1), m.saturating_sub(2) % m.max(1)], Side::Right)?;
    Ok((bipartite_double_cover(&a.to_graph()), bipartite_double_cover(&b.to_graph())))
}

pub fn cyclic_complex(m: usize) -> Result<SquareComplex> {
    let (a, b) = cyclic_pair(m)?;
    let p = a.partition().expect("covers carry a partition").to_vec();
    build_complex(&a, &b, &p)
}

pub use crate::characterize::example_red_nonempty;
