//! Spanning simplicial complexes and their face counts.
//!
//! The faces of the spanning complex of a connected graph are exactly its
//! forests (every forest extends to a spanning tree), so faces are never
//! stored: they are counted by walking acyclic edge subsets.

use std::fmt;

use num_bigint::BigUint;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_simple_cycles, Graph};
use crate::spanning::enumerate_spanning_trees_generic;

/// A simplicial complex on `0..ground_size` given by its facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground_size: usize,
    facets: Vec<EdgeSet>,
}

impl SimplicialComplex {
    /// Fails if a facet leaves the ground set or one facet contains another.
    pub fn new(ground_size: usize, facets: Vec<EdgeSet>) -> Result<Self> {
        let ground = EdgeSet::full(ground_size);
        for (a, &fa) in facets.iter().enumerate() {
            if !fa.is_subset(ground) {
                return Err(Error::precondition(format!(
                    "facet {a} leaves the ground set"
                )));
            }
            for (b, &fb) in facets.iter().enumerate() {
                if a != b && fa.is_subset(fb) {
                    return Err(Error::precondition(format!(
                        "facet {a} is contained in facet {b}"
                    )));
                }
            }
        }
        Ok(SimplicialComplex {
            ground_size,
            facets,
        })
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn facets(&self) -> &[EdgeSet] {
        &self.facets
    }

    /// Largest facet size minus one (so `-1` for the complex `{∅}`).
    pub fn dimension(&self) -> Result<isize> {
        let max = self
            .facets
            .iter()
            .map(|f| f.len())
            .max()
            .ok_or(Error::EmptyComplex)?;
        Ok(max as isize - 1)
    }

    pub fn is_pure(&self) -> Result<bool> {
        let first = self.facets.first().ok_or(Error::EmptyComplex)?.len();
        Ok(self.facets.iter().all(|f| f.len() == first))
    }

    pub fn is_face(&self, set: EdgeSet) -> bool {
        self.facets.iter().any(|f| set.is_subset(*f))
    }
}

/// The complex whose facets are the spanning trees of `g`.
pub fn spanning_complex(g: &Graph) -> Result<SimplicialComplex> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    // Spanning trees all have |V| - 1 edges, so none contains another.
    Ok(SimplicialComplex {
        ground_size: g.edge_count(),
        facets: enumerate_spanning_trees_generic(g),
    })
}

/// `(f_0, ..., f_d)`, where `f_i` counts faces with `i + 1` elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<BigUint>);

impl FVector {
    pub fn from_counts<I: IntoIterator<Item = u64>>(counts: I) -> Self {
        FVector(counts.into_iter().map(BigUint::from).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d`, for an f-vector of length `d + 1`.
    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|x| x.to_string()).collect()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// Largest edge count `f_vector_direct` will exhaust.
pub const DIRECT_EDGE_LIMIT: usize = 30;

/// Counts the forests of `g` by size. For a connected graph on `n`
/// vertices the result has `n - 1` entries.
pub fn f_vector_direct(g: &Graph) -> Result<FVector> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > DIRECT_EDGE_LIMIT {
        return Err(Error::capacity(format!(
            "direct f-vector scans all forests and accepts at most {DIRECT_EDGE_LIMIT} edges \
             ({} given); use an inclusion-exclusion mode",
            g.edge_count()
        )));
    }
    let mut counts = vec![0u64; g.vertex_count()];
    let component: Vec<u8> = (0..g.vertex_count() as u8).collect();
    count_forests(g, 0, 0, &component, &mut counts);
    Ok(FVector::from_counts(counts.into_iter().skip(1)))
}

fn count_forests(g: &Graph, edge: usize, size: usize, component: &[u8], counts: &mut [u64]) {
    counts[size] += 1;
    for e in edge..g.edge_count() {
        let (u, v) = g.endpoints(e);
        let (cu, cv) = (component[u], component[v]);
        if cu != cv {
            let merged: Vec<u8> = component
                .iter()
                .map(|&c| if c == cv { cu } else { c })
                .collect();
            count_forests(g, e + 1, size + 1, &merged, counts);
        }
    }
}

/// Minimal non-faces of the spanning complex: the simple cycles of `g`.
pub fn minimal_nonfaces(g: &Graph) -> Vec<EdgeSet> {
    enumerate_simple_cycles(g)
}
