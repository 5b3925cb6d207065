use super::labeled::LabeledGraph;
use super::perm::Permutation;
use super::schreier::SchreierSpec;
use crate::error::{Error, Result};

/// Orients every edge along an Euler circuit of its component, so each
/// vertex ends up with equal in- and out-degree. Returns `(from, to)` arcs.
fn euler_orientation(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((i, v));
        adj[v].push((i, u));
    }
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; n];
    let mut arcs = Vec::with_capacity(edges.len());
    for start in 0..n {
        let mut stack: Vec<(usize, Option<(usize, usize)>)> = vec![(start, None)];
        while let Some(&(v, _)) = stack.last() {
            while next[v] < adj[v].len() && used[adj[v][next[v]].0] {
                next[v] += 1;
            }
            if let Some(&(e, w)) = adj[v].get(next[v]) {
                used[e] = true;
                stack.push((w, Some((v, w))));
            } else if let Some((_, Some(arc))) = stack.pop() {
                arcs.push(arc);
            }
        }
    }
    arcs
}

/// Kuhn's augmenting-path search for a perfect matching of a regular
/// bipartite multigraph given as arcs `left -> right`.
fn perfect_matching(n: usize, arcs: &[(usize, usize)], alive: &[bool]) -> Option<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, _)) in arcs.iter().enumerate() {
        if alive[i] {
            out[u].push(i);
        }
    }
    let mut match_right: Vec<Option<usize>> = vec![None; n];

    fn augment(
        u: usize,
        out: &[Vec<usize>],
        arcs: &[(usize, usize)],
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &arc in &out[u] {
            let w = arcs[arc].1;
            if seen[w] {
                continue;
            }
            seen[w] = true;
            let free = match match_right[w] {
                None => true,
                Some(other) => augment(arcs[other].0, out, arcs, seen, match_right),
            };
            if free {
                match_right[w] = Some(arc);
                return true;
            }
        }
        false
    }

    for u in 0..n {
        let mut seen = vec![false; n];
        if !augment(u, &out, arcs, &mut seen, &mut match_right) {
            return None;
        }
    }
    match_right.into_iter().collect()
}

/// Gives an even-degree regular multigraph a Schreier structure with
/// labels in inverse pairs `(π_i, π_i^-1)`.
///
/// Each component is oriented along an Euler circuit, and the resulting
/// Δ/2-regular digraph is split into Δ/2 permutations by repeatedly
/// removing perfect matchings. Input labels are ignored.
pub fn two_factorization(g: &LabeledGraph) -> Result<SchreierSpec> {
    let (n, delta) = (g.n_vertices(), g.delta());
    if delta % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "degree {delta} is odd; only even-degree graphs are factored"
        )));
    }
    if let Some(e) = g.edges().iter().find(|e| e.slot_u == e.slot_v) {
        return Err(Error::Unsupported(format!(
            "half-loop at vertex {} has odd degree contribution",
            e.u
        )));
    }
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let arcs = euler_orientation(n, &edges);
    let mut alive = vec![true; arcs.len()];
    let mut perms = Vec::with_capacity(delta);
    for _ in 0..delta / 2 {
        let matched = perfect_matching(n, &arcs, &alive)
            .ok_or_else(|| Error::InvalidGraph("oriented graph has no perfect matching".into()))?;
        let mut image = vec![0; n];
        for &arc in &matched {
            alive[arc] = false;
            image[arcs[arc].0] = arcs[arc].1;
        }
        let p = Permutation::new(image)?;
        let inv = p.inverse();
        perms.push(p);
        perms.push(inv);
    }
    let pairing = (0..delta).map(|a| a ^ 1).collect();
    SchreierSpec::new(n, perms, pairing)
}
