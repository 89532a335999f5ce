use super::{EdgeLabel, Graph};
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};

/// Index arithmetic for J(2,m).
///
/// Edges are indexed `e11, e12, e13, e21, ..., em3`, so `e_{ji}` has index
/// `3(j - 1) + (i - 1)`. The hub is vertex 0 and the rim vertices are
/// `1..=2m` clockwise from the rim endpoint of `e11`. Base cycle `C_k` is
/// `{e_k1, e_k2, e_k3, e_(k+1)1}` with cycle indices taken mod m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JahangirShape {
    m: usize,
}

impl JahangirShape {
    pub const MAX_M: usize = EdgeSet::CAPACITY / 3;

    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid(format!(
                "Jahangir graph needs m >= 3, got {m}"
            )));
        }
        if m > Self::MAX_M {
            return Err(Error::capacity(format!(
                "m = {m} exceeds the supported maximum of {}",
                Self::MAX_M
            )));
        }
        Ok(JahangirShape { m })
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn vertex_count(self) -> usize {
        2 * self.m + 1
    }

    pub fn edge_count(self) -> usize {
        3 * self.m
    }

    /// Reduces any positive cycle index into `1..=m`.
    pub fn wrap(self, j: usize) -> usize {
        (j + self.m - 1) % self.m + 1
    }

    pub fn next(self, j: usize) -> usize {
        self.wrap(j + 1)
    }

    pub fn prev(self, j: usize) -> usize {
        self.wrap(j + self.m - 1)
    }

    /// Index of `e_{ji}`; `j` is wrapped into `1..=m`.
    pub fn edge(self, j: usize, i: usize) -> usize {
        debug_assert!((1..=3).contains(&i));
        3 * (self.wrap(j) - 1) + (i - 1)
    }

    pub fn spoke(self, j: usize) -> usize {
        self.edge(j, 1)
    }

    pub fn is_spoke(self, edge: usize) -> bool {
        edge.is_multiple_of(3)
    }

    /// Cycle index `j` of edge `e_{ji}`.
    pub fn cycle_of(self, edge: usize) -> usize {
        edge / 3 + 1
    }

    pub fn label(self, edge: usize) -> EdgeLabel {
        EdgeLabel {
            cycle: edge / 3 + 1,
            position: edge % 3 + 1,
        }
    }

    pub fn spokes(self) -> EdgeSet {
        (1..=self.m).map(|j| self.spoke(j)).collect()
    }

    /// The two non-spoke edges `e_j2, e_j3` of base cycle `C_j`.
    pub fn rim_pair(self, j: usize) -> EdgeSet {
        [self.edge(j, 2), self.edge(j, 3)].into_iter().collect()
    }

    pub fn rim(self) -> EdgeSet {
        self.spokes().complement(self.edge_count())
    }

    pub fn base_cycle(self, k: usize) -> EdgeSet {
        self.rim_pair(k)
            .union(EdgeSet::singleton(self.spoke(k)))
            .union(EdgeSet::singleton(self.spoke(k + 1)))
    }

    pub fn graph(self) -> Graph {
        let m = self.m;
        let rim_vertex = |r: usize| (r - 1) % (2 * m) + 1;
        let mut edges = Vec::with_capacity(3 * m);
        for k in 1..=m {
            let a = 2 * k - 1;
            edges.push((0, a));
            edges.push((a, a + 1));
            edges.push((a + 1, rim_vertex(a + 2)));
        }
        let labels = (0..3 * m).map(|e| self.label(e)).collect();
        Graph::new(2 * m + 1, edges)
            .and_then(|g| g.with_labels(labels))
            .expect("Jahangir construction is always a valid simple graph")
    }
}

/// Builds J(2,m) with the labelled edge order `e11, e12, e13, ..., em3`.
pub fn build_jahangir(m: usize) -> Result<Graph> {
    Ok(JahangirShape::new(m)?.graph())
}
