//! Acceptance criteria. Each test prints one line:
//! `acceptance C<nn> <name>: PASS|FAIL (<secs> s, limit <secs> s)`.

mod common;

use std::time::{Duration, Instant};

use qtanner::builtin::{c5, c5_prime, petersen_pair, remedied_petersen, remedied_petersen_complex};
use qtanner::characterize::{
    condition_ii_check, example_red_nonempty, length_two_local_pairs, length_two_sweep, reconstruct_schreier_pair,
    round_trip, swapping_condition_check, PsiMap,
};
use qtanner::code::{
    cayley_complex, cayley_quantum_tanner, css_distances, css_from_complex, from_alist, local_parities, tensor_parity,
    to_alist, CssCode, Distance, DistanceOptions, LinearCode,
};
use qtanner::complex::build_complex;
use qtanner::error::Error;
use qtanner::gf2::BitMatrix;
use qtanner::graph::{bipartite_double_cover, cayley_graph, graphs_commute, overlap_check, GroupTable, Side};
use qtanner::intmat::IntMatrix;
use qtanner::spectral::{eigenvalues_symmetric, lambda, product_spectrum_check};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Tolerances, pinned.
const EIG_TOL: f64 = 1e-6;
const PAIRING_TOL: f64 = 1e-8;
const BOUND_SLACK: f64 = 1e-6;

type Outcome = Result<(), String>;

fn criterion(id: u32, name: &str, limit: Duration, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let result = body();
    let took = start.elapsed();
    let result = result.and_then(|_| {
        if took <= limit {
            Ok(())
        } else {
            Err(format!("took {:.2} s, over the limit", took.as_secs_f64()))
        }
    });
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!(
        "acceptance C{id:02} {name}: {verdict} ({:.3} s, limit {} s)",
        took.as_secs_f64(),
        limit.as_secs()
    );
    if let Err(why) = result {
        panic!("C{id:02} {name}: {why}");
    }
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn z5_code() -> CssCode {
    let rep = LinearCode::repetition(2);
    cayley_quantum_tanner(&GroupTable::cyclic(5), &[1, 4], &[2, 3], &rep, &rep).unwrap()
}

#[test]
fn c01_petersen_pair() {
    criterion(1, "petersen pair", secs(1), || {
        let c5_printed = [
            [0, 1, 0, 0, 1],
            [1, 0, 1, 0, 0],
            [0, 1, 0, 1, 0],
            [0, 0, 1, 0, 1],
            [1, 0, 0, 1, 0],
        ];
        let c5p_printed = [
            [0, 0, 1, 1, 0],
            [0, 0, 0, 1, 1],
            [1, 0, 0, 0, 1],
            [1, 1, 0, 0, 0],
            [0, 1, 1, 0, 0],
        ];
        let (a, b) = petersen_pair();
        let (ma, mb) = (a.to_graph().adjacency(), b.to_graph().adjacency());
        for i in 0..10 {
            for j in 0..10 {
                let (bi, bj) = (i / 5, j / 5);
                let (ii, jj) = (i % 5, j % 5);
                let want_a = match (bi, bj) {
                    (0, 0) => c5_printed[ii][jj],
                    (1, 1) => c5p_printed[ii][jj],
                    _ => (ii == jj) as i64,
                };
                let want_b = if bi == bj { c5_printed[ii][jj] } else { 0 };
                ensure(ma[(i, j)] == want_a, || format!("M_A[{i}][{j}]"))?;
                ensure(mb[(i, j)] == want_b, || format!("M_B[{i}][{j}]"))?;
            }
        }
        ensure(c5() == IntMatrix::from_rows(&c5_printed), || "C5 constant".into())?;
        ensure(c5_prime() == IntMatrix::from_rows(&c5p_printed), || "C5' constant".into())?;
        ensure(ma.mul(&mb).unwrap() == mb.mul(&ma).unwrap(), || "M_A M_B != M_B M_A".into())?;
        let overlap = overlap_check(&a.to_graph(), &b.to_graph()).unwrap();
        ensure(!overlap.is_empty(), || "expected overlapping edges".into())
    });
}

#[test]
fn c02_desargues_cover() {
    criterion(2, "desargues cover", secs(1), || {
        let p = petersen_pair().0.to_graph();
        let d = bipartite_double_cover(&p);
        ensure(d.n_vertices() == 20 && d.delta() == 3, || "size".into())?;
        ensure(d.is_bipartite() && !d.has_self_loops(), || "bipartite, loop-free".into())?;
        // oracle: A^2 + A - 2I = J, so the nontrivial eigenvalues are 1 and -2
        let m = p.adjacency();
        let lhs = m.mul(&m).unwrap().add(&m).unwrap();
        for i in 0..10 {
            for j in 0..10 {
                let want = if i == j { 3 } else { 1 };
                ensure(lhs[(i, j)] == want, || "strongly regular identity".into())?;
            }
        }
        let spec = eigenvalues_symmetric(&m).unwrap().eigenvalues;
        ensure(
            spec.iter().all(|x| [3.0, 1.0, -2.0].iter().any(|y| (x - y).abs() < EIG_TOL)),
            || format!("Petersen spectrum {spec:?}"),
        )?;
        let (lp, ld) = (lambda(&p).unwrap(), lambda(&d).unwrap());
        ensure((lp - 2.0).abs() < EIG_TOL && (ld - 2.0).abs() < EIG_TOL, || format!("λ {lp} {ld}"))
    });
}

#[test]
fn c03_z5_pipeline() {
    criterion(3, "Z5 pipeline", secs(5), || {
        let x = cayley_complex(&GroupTable::cyclic(5), &[1, 4], &[2, 3]).unwrap();
        ensure(x.n_squares() == 10 && x.side(0).len() * 4 / 2 == 10, || "square count".into())?;
        let c = z5_code();
        ensure(c.h0().mul_transpose(c.h1()).unwrap().is_zero(), || "h0 h1^T".into())?;
        let dim0 = 10 - common::naive_rank(&c.h0().to_rows());
        let dim1 = 10 - common::naive_rank(&c.h1().to_rows());
        ensure(c.k() == dim0 + dim1 - 10, || "k".into())?;
        let mut seen = None;
        for threads in [1, 2, 3, 8] {
            let opts = DistanceOptions { threads, ..Default::default() };
            let again = z5_code();
            ensure(again == c, || "rebuild differs".into())?;
            let d = css_distances(&again, &opts).unwrap();
            if let Some(prev) = seen {
                ensure(prev == d, || format!("threads={threads} changed distances"))?;
            }
            seen = Some(d);
        }
        // reference: brute force over all 2^10 words
        let d = seen.unwrap();
        let brute = |h: &BitMatrix, dual: &BitMatrix| {
            let dual = qtanner::gf2::RowSpace::new(dual);
            (1u32..1 << 10)
                .map(|x| qtanner::gf2::BitVec::from_bits(&(0..10).map(|j| (x >> j & 1) as u8).collect::<Vec<_>>()))
                .filter(|w| (0..h.rows()).all(|i| !h.row(i).dot(w)) && !dual.contains(w))
                .map(|w| w.weight())
                .min()
        };
        let want = |o: Option<usize>| o.map_or(Distance::NoLogical, Distance::Exact);
        ensure(d.dx == want(brute(c.h0(), c.h1())), || format!("dx {:?}", d.dx))?;
        ensure(d.dz == want(brute(c.h1(), c.h0())), || format!("dz {:?}", d.dz))?;
        println!("  Z5 code: n=10 k={} dx={:?} dz={:?}", c.k(), d.dx, d.dz);
        Ok(())
    });
}

#[test]
fn c04_remedied_petersen() {
    criterion(4, "remedied petersen", secs(30), || {
        let (a, b, p) = remedied_petersen().unwrap();
        ensure(a.delta() == 3 && b.delta() == 3, || "degrees".into())?;
        ensure(graphs_commute(&a, &b).unwrap(), || "commute".into())?;
        ensure(overlap_check(&a, &b).unwrap().is_empty(), || "overlap".into())?;
        ensure(a.is_bipartite_on(&p) && b.is_bipartite_on(&p), || "bipartite".into())?;
        let x = remedied_petersen_complex().map_err(|e| e.to_string())?;
        let c = css_from_complex(&x, &LinearCode::repetition(3), &LinearCode::single_parity(3))
            .map_err(|e| e.to_string())?;
        ensure(c.n() == 90, || "n".into())?;
        println!("  remedied Petersen: n={} k={}", c.n(), c.k());
        ensure(c.h0().mul_transpose(c.h1()).unwrap().is_zero(), || "h0 h1^T".into())
    });
}

#[test]
fn c05_kron_rank_law() {
    criterion(5, "kron rank law", secs(5), || {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for trial in 0..200 {
            let random = |rng: &mut ChaCha8Rng| {
                let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=10));
                BitMatrix::from_fn(r, c, |_, _| rng.gen_bool(0.5))
            };
            let (a, b) = (random(&mut rng), random(&mut rng));
            let (ra, rb) = (common::naive_rank(&a.to_rows()), common::naive_rank(&b.to_rows()));
            let rk = a.kron(&b).rank();
            ensure(rk == ra * rb, || format!("trial {trial}: {rk} != {ra}*{rb}"))?;
        }
        Ok(())
    });
}

#[test]
fn c06_tensor_laws() {
    criterion(6, "tensor parameter laws", secs(60), || {
        let corpus = common::code_corpus(4);
        let dists: Vec<Option<usize>> = corpus.iter().map(|c| common::naive_distance(c.parity())).collect();
        let mut pairs = 0;
        for (i, ca) in corpus.iter().enumerate() {
            for (j, cb) in corpus.iter().enumerate() {
                let (t, dt) = tensor_parity(ca, cb);
                let (tensor, dual) = (LinearCode::from_parity(t), LinearCode::from_parity(dt));
                let (na, nb, ka, kb) = (ca.n(), cb.n(), ca.k(), cb.k());
                ensure(tensor.k() == ka * kb, || format!("tensor dim {i},{j}"))?;
                ensure(dual.k() == na * nb - (na - ka) * (nb - kb), || format!("dual dim {i},{j}"))?;
                let product = dists[i].zip(dists[j]).map(|(x, y)| x * y);
                ensure(tensor.min_distance() == product, || format!("tensor distance {i},{j}"))?;
                let min = match (dists[i], dists[j]) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, y) => x.or(y),
                };
                ensure(dual.min_distance() == min, || format!("dual-tensor distance {i},{j}"))?;
                pairs += 1;
            }
        }
        println!("  {} codes, {pairs} pairs", corpus.len());
        Ok(())
    });
}

#[test]
fn c07_lemma2_soundness() {
    criterion(7, "condition (ii) soundness sweep", secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let (m, a, b) = common::random_cyclic_pair(&mut rng, 16);
            let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).unwrap();
            ensure(x.side(0).len() <= 16, || "size".into())?;
            let (g0, g1) = x.square_graphs();
            let id = PsiMap::identity(g0.n_edges());
            ensure(condition_ii_check(&g0, &g1, &id).unwrap().holds, || format!("(ii) on Z{m} {a} {b}"))?;
            let bad = length_two_sweep(&g0, &g1, &id).unwrap();
            ensure(bad == 0, || format!("Z{m} {a} {b}: {bad} local pairs break CSS"))?;
        }
        Ok(())
    });
}

#[test]
fn c08_lemma2_necessity() {
    criterion(8, "condition (ii) necessity probe", secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let mut found = 0;
        while found < 20 {
            let (m, a, b) = common::random_cyclic_pair(&mut rng, 16);
            let x = cayley_complex(&GroupTable::cyclic(m), &[a, m - a], &[b, m - b]).unwrap();
            let (g0, g1) = x.square_graphs();
            let n = g0.n_edges();
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let psi = PsiMap::identity(n).swapped(i, j);
            if condition_ii_check(&g0, &g1, &psi).unwrap().holds {
                continue;
            }
            found += 1;
            let bad = length_two_sweep(&g0, &g1, &psi).unwrap();
            ensure(bad > 0, || format!("Z{m} swap ({i},{j}): no local pair detects the break"))?;
        }
        Ok(())
    });
}

#[test]
fn c09_example_one() {
    criterion(9, "example red-nonempty", secs(5), || {
        let (g, id) = example_red_nonempty();
        ensure(condition_ii_check(&g, &g, &id).unwrap().holds, || "(ii)".into())?;
        ensure(!swapping_condition_check(&g, &g, &id).unwrap().holds, || "swap".into())?;
        ensure(
            matches!(reconstruct_schreier_pair(&g, &g, &id), Err(Error::SwappingCondition(_))),
            || "reconstruction should fail".into(),
        )?;
        ensure(length_two_local_pairs().len() == 16, || "16 pairs".into())?;
        ensure(length_two_sweep(&g, &g, &id).unwrap() == 0, || "sweep".into())
    });
}

#[test]
fn c10_round_trip() {
    criterion(10, "reconstruction round trip", secs(60), || {
        let corpus = common::construction_corpus();
        ensure(corpus.len() >= 20, || "corpus size".into())?;
        for (name, x) in &corpus {
            let (g0, g1) = x.square_graphs();
            let id = PsiMap::identity(g0.n_edges());
            ensure(swapping_condition_check(&g0, &g1, &id).unwrap().holds, || format!("{name}: swap"))?;
            ensure(round_trip(&g0, &g1, &id).map_err(|e| format!("{name}: {e}"))?, || format!("{name}: differs"))?;
        }
        Ok(())
    });
}

#[test]
fn c11_spectral_product_law() {
    criterion(11, "spectral product law", secs(10), || {
        let (a, b) = petersen_pair();
        let r = product_spectrum_check(&a.to_graph(), &b.to_graph()).unwrap();
        ensure(r.product_residual < PAIRING_TOL && r.sum_residual < PAIRING_TOL, || "Petersen residual".into())?;
        ensure(r.split_vector_is_u_minus_u == Some(true), || "(u,-u)".into())?;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut bounded = 0;
        for _ in 0..10 {
            let n = 2 * rng.gen_range(3..=12) + 1;
            let set = |rng: &mut ChaCha8Rng| {
                let mut s = Vec::new();
                while s.len() < 4 {
                    let x = rng.gen_range(1..=n / 2);
                    if !s.contains(&x) {
                        s.push(x);
                        s.push(n - x);
                    }
                }
                s
            };
            let g = GroupTable::cyclic(n);
            let ga = cayley_graph(&g, &set(&mut rng), Side::Left).unwrap().to_graph();
            let gb = cayley_graph(&g, &set(&mut rng), Side::Left).unwrap().to_graph();
            let r = product_spectrum_check(&ga, &gb).unwrap();
            ensure(r.product_residual < PAIRING_TOL, || format!("Z{n}: residual {}", r.product_residual))?;
            if let Some(ok) = r.bound_holds {
                bounded += 1;
                ensure(ok && r.lambda_square <= r.bound + BOUND_SLACK, || format!("Z{n}: bound"))?;
            }
        }
        println!("  bound checked on {bounded} of 10 random pairs");
        Ok(())
    });
}

#[test]
fn c12_appendix_formula() {
    criterion(12, "appendix formula equivalence", secs(30), || {
        let locals = [
            (LinearCode::repetition(2), LinearCode::repetition(2)),
            (LinearCode::repetition(2), LinearCode::single_parity(2)),
            (LinearCode::full(2), LinearCode::zero(2)),
        ];
        for (name, x) in common::construction_corpus() {
            let (g0, g1) = x.square_graphs();
            let d = x.delta();
            let pairs: Vec<(LinearCode, LinearCode)> = if d == 2 {
                locals.to_vec()
            } else {
                vec![(LinearCode::repetition(d), LinearCode::single_parity(d))]
            };
            for (ca, cb) in &pairs {
                let c = css_from_complex(&x, ca, cb).unwrap();
                let h0 = common::appendix_matrix(&g0, ca.generator(), cb.generator());
                let h1 = common::appendix_matrix(&g1, ca.parity(), cb.parity());
                ensure(c.h0() == &h0 && c.h1() == &h1, || format!("{name}"))?;
            }
        }
        let x = remedied_petersen_complex().unwrap();
        let (g0, g1) = x.square_graphs();
        let (ca, cb) = (LinearCode::repetition(3), LinearCode::single_parity(3));
        let c = css_from_complex(&x, &ca, &cb).unwrap();
        ensure(c.h0() == &common::appendix_matrix(&g0, ca.generator(), cb.generator()), || "petersen h0".into())?;
        ensure(c.h1() == &common::appendix_matrix(&g1, ca.parity(), cb.parity()), || "petersen h1".into())?;
        let (l0, _) = local_parities(&ca, &cb);
        ensure(c.h0().rows() == 20 * l0.rows(), || "row count".into())
    });
}

#[test]
fn c13_alist_round_trip() {
    criterion(13, "alist round trip", secs(1), || {
        let c = z5_code();
        for h in [c.h0(), c.h1()] {
            let text = to_alist(h);
            let back = from_alist(&text).map_err(|e| e.to_string())?;
            ensure(&back == h, || "matrix differs".into())?;
            ensure(to_alist(&back) == text, || "text differs".into())?;
        }
        Ok(())
    });
}

#[test]
fn degree_mismatch_on_raw_petersen() {
    let (a, b) = petersen_pair();
    let (a, b) = (a.to_graph(), b.to_graph());
    let p = vec![0u8; 10];
    assert!(matches!(build_complex(&a, &b, &p), Err(Error::DegreeMismatch { a: 3, b: 2 })));
}
