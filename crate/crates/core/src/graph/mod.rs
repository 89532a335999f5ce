//! Simple undirected graphs with indexed edges, the Jahangir family, and the
//! two ground-truth oracles (Matrix-Tree count, simple-cycle enumeration).

mod cycle_enum;
mod io;
mod jahangir;
mod matrix_tree;

use std::fmt;
use std::str::FromStr;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};

pub use cycle_enum::enumerate_simple_cycles;
pub use io::{emit_graph, parse_graph};
pub use jahangir::{build_jahangir, JahangirShape};
pub use matrix_tree::{bareiss_determinant, matrix_tree_count};

/// Name `e_{ji}` of an edge of J(2,m): `cycle` is `j`, `position` is `i`.
/// Position 1 is the spoke shared by base cycles `j - 1` and `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabel {
    pub cycle: usize,
    pub position: usize,
}

impl EdgeLabel {
    pub fn new(cycle: usize, position: usize) -> Result<Self> {
        if cycle == 0 || !(1..=3).contains(&position) {
            return Err(Error::invalid(format!(
                "edge label e({cycle},{position}) needs cycle >= 1 and position in 1..=3"
            )));
        }
        Ok(EdgeLabel { cycle, position })
    }

    pub fn is_spoke(self) -> bool {
        self.position == 1
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}{}", self.cycle, self.position)
    }
}

impl FromStr for EdgeLabel {
    type Err = Error;

    /// Parses `e<j><i>`; the last digit is the position, the rest the cycle.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::invalid(format!("malformed edge label {s:?}"));
        let digits = s.strip_prefix('e').ok_or_else(bad)?;
        if digits.len() < 2 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let (cycle, position) = digits.split_at(digits.len() - 1);
        let cycle = cycle.parse().map_err(|_| bad())?;
        let position = position.parse().map_err(|_| bad())?;
        EdgeLabel::new(cycle, position)
    }
}

/// A simple undirected graph on vertices `0..vertex_count` whose edges are
/// indexed by their position in the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<EdgeLabel>>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range
    /// endpoints.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if edges.len() > EdgeSet::CAPACITY {
            return Err(Error::capacity(format!(
                "{} edges exceeds the supported maximum of {}",
                edges.len(),
                EdgeSet::CAPACITY
            )));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge {idx} ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!(
                    "edge {idx} is a loop at vertex {u}"
                )));
            }
            if adjacency[u].iter().any(|&(w, _)| w == v) {
                return Err(Error::invalid(format!(
                    "edge {idx} ({u}, {v}) is a duplicate"
                )));
            }
            adjacency[u].push((v, idx));
            adjacency[v].push((u, idx));
        }
        Ok(Graph {
            vertex_count,
            edges,
            labels: None,
            adjacency,
        })
    }

    /// Attaches one label per edge. Labels must be distinct.
    pub fn with_labels(mut self, labels: Vec<EdgeLabel>) -> Result<Self> {
        if labels.len() != self.edges.len() {
            return Err(Error::invalid(format!(
                "{} labels given for {} edges",
                labels.len(),
                self.edges.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("label {} is used twice", w[0])));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn labels(&self) -> Option<&[EdgeLabel]> {
        self.labels.as_deref()
    }

    pub fn label(&self, edge: usize) -> Option<EdgeLabel> {
        self.labels.as_ref().map(|l| l[edge])
    }

    pub fn index_of(&self, label: EdgeLabel) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|&l| l == label)
    }

    /// Display name of an edge: its label when present, else `u-v`.
    pub fn edge_name(&self, edge: usize) -> String {
        match self.label(edge) {
            Some(l) => l.to_string(),
            None => {
                let (u, v) = self.edges[edge];
                format!("{u}-{v}")
            }
        }
    }

    pub fn edge_names(&self, set: EdgeSet) -> Vec<String> {
        set.iter().map(|e| self.edge_name(e)).collect()
    }

    /// `(neighbour, edge index)` pairs incident to `v`.
    pub fn neighbours(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn is_connected(&self) -> bool {
        self.connects_all(self.all_edges())
    }

    /// Whether the spanning subgraph with edge set `edges` is connected.
    pub fn connects_all(&self, edges: EdgeSet) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.adjacency[v] {
                if !seen[w] && edges.contains(e) {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Whether the edges in `edges` contain no cycle.
    pub fn is_acyclic(&self, edges: EdgeSet) -> bool {
        let mut dsu = DisjointSets::new(self.vertex_count);
        edges.iter().all(|e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        })
    }

    pub fn is_spanning_tree(&self, edges: EdgeSet) -> bool {
        self.vertex_count > 0
            && edges.len() + 1 == self.vertex_count
            && edges.is_subset(self.all_edges())
            && self.is_acyclic(edges)
    }

    /// Whether `edges` forms a simple cycle: nonempty, 2-regular on the
    /// vertices it touches, and connected.
    pub fn is_simple_cycle(&self, edges: EdgeSet) -> bool {
        if edges.len() < 3 {
            return false;
        }
        let mut deg = vec![0usize; self.vertex_count];
        for e in edges {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        // 2-regular with |E| = |V| touched; one component iff it is one cycle.
        let start = self.edges[edges.first().unwrap_or(0)].0;
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &(w, e) in &self.adjacency[v] {
                if edges.contains(e) && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == edges.len()
    }
}

/// Union-find over vertex indices.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;

    pub fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    pub fn square() -> Graph {
        Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v)).collect()).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)).collect()).unwrap()
    }
}
