#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ssc_core::{EdgeLabel, EdgeSet, Graph};

/// The 50 spanning trees of J(2,3), as printed in the reference listing.
pub const J23_REFERENCE_FACETS: [&str; 50] = [
    "e11 e21 e31 e12 e22 e32",
    "e11 e21 e31 e12 e22 e33",
    "e11 e21 e31 e12 e23 e32",
    "e11 e21 e31 e12 e23 e33",
    "e11 e21 e31 e13 e22 e32",
    "e11 e21 e31 e13 e22 e33",
    "e11 e21 e31 e13 e23 e32",
    "e11 e21 e31 e13 e23 e33",
    "e21 e31 e32 e33 e12 e22",
    "e21 e31 e32 e33 e12 e23",
    "e21 e31 e32 e33 e13 e22",
    "e21 e31 e32 e33 e13 e23",
    "e21 e31 e12 e13 e33 e22",
    "e21 e31 e12 e13 e33 e23",
    "e21 e31 e12 e13 e32 e22",
    "e21 e31 e12 e13 e32 e23",
    "e11 e31 e12 e13 e22 e32",
    "e11 e31 e12 e13 e22 e33",
    "e11 e31 e12 e13 e23 e32",
    "e11 e31 e12 e13 e23 e33",
    "e11 e31 e22 e23 e13 e32",
    "e11 e31 e22 e23 e13 e33",
    "e11 e31 e22 e23 e12 e32",
    "e11 e31 e22 e23 e12 e33",
    "e11 e21 e23 e22 e32 e12",
    "e11 e21 e23 e22 e32 e13",
    "e11 e21 e23 e22 e33 e12",
    "e11 e21 e23 e22 e33 e13",
    "e11 e21 e32 e33 e22 e12",
    "e11 e21 e32 e33 e22 e13",
    "e11 e21 e32 e33 e23 e12",
    "e11 e21 e32 e33 e23 e13",
    "e11 e13 e22 e23 e32 e33",
    "e11 e12 e22 e23 e32 e33",
    "e11 e12 e13 e23 e32 e33",
    "e11 e12 e13 e22 e32 e33",
    "e11 e12 e13 e22 e23 e33",
    "e11 e12 e13 e22 e23 e32",
    "e21 e13 e22 e23 e32 e33",
    "e21 e12 e22 e23 e32 e33",
    "e21 e12 e13 e23 e32 e33",
    "e21 e12 e13 e22 e32 e33",
    "e21 e12 e13 e22 e23 e33",
    "e21 e12 e13 e22 e23 e32",
    "e31 e13 e22 e23 e32 e33",
    "e31 e12 e22 e23 e32 e33",
    "e31 e12 e13 e23 e32 e33",
    "e31 e12 e13 e22 e32 e33",
    "e31 e12 e13 e22 e23 e33",
    "e31 e12 e13 e22 e23 e32",
];

pub fn labelled_set(g: &Graph, names: &str) -> EdgeSet {
    names
        .split_whitespace()
        .map(|n| {
            let label: EdgeLabel = n.parse().unwrap();
            g.index_of(label).unwrap()
        })
        .collect()
}

/// Plain union-find, kept separate from the library's.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn join(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

pub fn acyclic(g: &Graph, mask: u64) -> bool {
    let mut dsu = Dsu::new(g.vertex_count());
    (0..g.edge_count()).filter(|e| mask >> e & 1 == 1).all(|e| {
        let (u, v) = g.edges()[e];
        dsu.join(u, v)
    })
}

pub fn to_set(mask: u64) -> EdgeSet {
    (0..64).filter(|e| mask >> e & 1 == 1).collect()
}

/// Counts acyclic subsets of every size by scanning all `2^|E|` subsets.
pub fn brute_f_vector(g: &Graph) -> Vec<u64> {
    assert!(g.edge_count() <= 24);
    let mut f = vec![0u64; g.vertex_count()];
    for mask in 1u64..1 << g.edge_count() {
        if acyclic(g, mask) {
            f[mask.count_ones() as usize - 1] += 1;
        }
    }
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Dependent sets all of whose one-smaller subsets are independent.
pub fn brute_minimal_nonfaces(g: &Graph) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    for mask in 1u64..1 << g.edge_count() {
        if !acyclic(g, mask)
            && (0..g.edge_count())
                .filter(|e| mask >> e & 1 == 1)
                .all(|e| acyclic(g, mask & !(1 << e)))
        {
            out.push(to_set(mask));
        }
    }
    out.sort();
    out
}

/// Acyclic subsets of size `|V| - 1`.
pub fn brute_spanning_trees(g: &Graph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let mut out: Vec<EdgeSet> = (0u64..1 << g.edge_count())
        .filter(|m| m.count_ones() as usize + 1 == n && acyclic(g, *m))
        .map(to_set)
        .collect();
    out.sort();
    out
}

/// A connected simple graph on 2..=7 vertices with at most `max_edges` edges.
pub fn random_connected_graph(rng: &mut impl Rng, max_edges: usize) -> Graph {
    let n = rng.gen_range(2..=7usize.min(max_edges + 1));
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let target = rng.gen_range(n - 1..=max_edges);
    let mut tries = 0;
    while edges.len() < target && tries < 200 {
        tries += 1;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let e = (u.min(v), u.max(v));
        if u != v && !edges.iter().any(|&(a, b)| (a.min(b), a.max(b)) == e) {
            edges.push(e);
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_graphs(seed: u64, count: usize, max_edges: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_connected_graph(&mut rng, max_edges))
        .collect()
}
