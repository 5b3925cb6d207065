use super::labeled::LabeledGraph;
use super::perm::Permutation;
use crate::error::{Error, Result};

/// Data of a Schreier graph: one permutation per label and an involution on
/// labels that says which directed edges form an undirected edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreierSpec {
    n: usize,
    perms: Vec<Permutation>,
    pairing: Vec<usize>,
    partition: Option<Vec<u8>>,
}

impl SchreierSpec {
    /// `pairing` is 0-based here; the JSON form uses 1-based labels.
    pub fn new(n: usize, perms: Vec<Permutation>, pairing: Vec<usize>) -> Result<Self> {
        let delta = perms.len();
        if pairing.len() != delta {
            return Err(Error::InvalidSpec(format!(
                "pairing has {} entries for {delta} labels",
                pairing.len()
            )));
        }
        for (a, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(Error::InvalidSpec(format!(
                    "permutation {} acts on {} points, expected {n}",
                    a + 1,
                    p.len()
                )));
            }
        }
        for (a, &b) in pairing.iter().enumerate() {
            if b >= delta {
                return Err(Error::InvalidSpec(format!("pairing of label {} is {} (out of range)", a + 1, b + 1)));
            }
            if pairing[b] != a {
                return Err(Error::InvalidSpec(format!(
                    "pairing is not an involution: {} -> {} -> {}",
                    a + 1,
                    b + 1,
                    pairing[b] + 1
                )));
            }
            if perms[b] != perms[a].inverse() {
                return Err(Error::InvalidSpec(format!(
                    "permutation of label {} is not the inverse of its partner {}",
                    b + 1,
                    a + 1
                )));
            }
        }
        Ok(Self {
            n,
            perms,
            pairing,
            partition: None,
        })
    }

    pub fn with_partition(mut self, partition: Vec<u8>) -> Result<Self> {
        if partition.len() != self.n || partition.iter().any(|&s| s > 1) {
            return Err(Error::InvalidSpec("partition must list side 0 or 1 for every vertex".into()));
        }
        self.partition = Some(partition);
        Ok(self)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn partition(&self) -> Option<&[u8]> {
        self.partition.as_deref()
    }

    /// The Schreier graph: half-edge `(v, perm[a](v), a)` is paired with
    /// `(perm[a](v), v, pairing(a))`.
    pub fn to_graph(&self) -> LabeledGraph {
        schreier_graph(self).expect("a validated spec always yields a well-labeled graph")
    }
}

/// Builds the labeled graph of a Schreier spec. Fails only when the spec's
/// partition is not a bipartition of the resulting graph.
pub fn schreier_graph(spec: &SchreierSpec) -> Result<LabeledGraph> {
    let delta = spec.delta();
    let mut dst = Vec::with_capacity(spec.n * delta);
    let mut partner = Vec::with_capacity(spec.n * delta);
    for v in 0..spec.n {
        for a in 0..delta {
            let w = spec.perms[a].apply(v);
            dst.push(w);
            partner.push(w * delta + spec.pairing[a]);
        }
    }
    LabeledGraph::from_slots(spec.n, delta, dst, partner, spec.partition.clone())
}
