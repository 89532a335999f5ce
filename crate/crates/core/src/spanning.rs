//! Spanning-tree enumeration: a generic backtracking enumerator, and the
//! cutting-down construction for J(2,m) that builds every tree by choosing
//! which spokes and rim edges to delete.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{matrix_tree_count, Graph, JahangirShape};

/// All spanning trees of `g` as edge sets, in lexicographic order. A
/// disconnected graph has none.
///
/// Edges are decided in index order. An edge may be kept if it closes no
/// cycle with the kept edges, and dropped if it is not a bridge of what
/// remains; every leaf of the search is therefore a spanning tree.
pub fn enumerate_spanning_trees_generic(g: &Graph) -> Vec<EdgeSet> {
    let mut out = Vec::new();
    if g.vertex_count() == 0 || !g.is_connected() {
        return out;
    }
    let mut search = TreeSearch {
        g,
        target: g.vertex_count() - 1,
        out: &mut out,
    };
    search.branch(0, EdgeSet::empty(), g.all_edges());
    out
}

struct TreeSearch<'a> {
    g: &'a Graph,
    target: usize,
    out: &'a mut Vec<EdgeSet>,
}

impl TreeSearch<'_> {
    /// `kept` is acyclic, `available` (kept plus undecided) is connected.
    fn branch(&mut self, edge: usize, kept: EdgeSet, available: EdgeSet) {
        if kept.len() == self.target {
            self.out.push(kept);
            return;
        }
        if edge == self.g.edge_count() {
            return;
        }
        let with = kept.union(EdgeSet::singleton(edge));
        if self.g.is_acyclic(with) {
            self.branch(edge + 1, with, available);
        }
        let mut without = available;
        without.remove(edge);
        if self.g.connects_all(without) {
            self.branch(edge + 1, kept, without);
        }
    }
}

/// The five cutting-down classes, by how many spokes a tree drops and
/// whether the dropped spokes are cyclically consecutive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeClass {
    /// No spoke removed.
    Cj1,
    /// Exactly one spoke removed.
    Cj2,
    /// Two or more spokes, forming one consecutive run.
    Cj3a,
    /// Two or more spokes, no two consecutive.
    Cj3b,
    /// Two or more spokes, several runs, at least one of length two or more.
    Cj3c,
}

impl TreeClass {
    pub const ALL: [TreeClass; 5] = [
        TreeClass::Cj1,
        TreeClass::Cj2,
        TreeClass::Cj3a,
        TreeClass::Cj3b,
        TreeClass::Cj3c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TreeClass::Cj1 => "CJ1",
            TreeClass::Cj2 => "CJ2",
            TreeClass::Cj3a => "CJ3a",
            TreeClass::Cj3b => "CJ3b",
            TreeClass::Cj3c => "CJ3c",
        }
    }

    fn of_runs(runs: &[usize]) -> TreeClass {
        let removed: usize = runs.iter().sum();
        match removed {
            0 => TreeClass::Cj1,
            1 => TreeClass::Cj2,
            _ if runs.len() == 1 => TreeClass::Cj3a,
            _ if runs.iter().all(|&r| r == 1) => TreeClass::Cj3b,
            _ => TreeClass::Cj3c,
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanningTreeRecord {
    /// The facet `E(T)`.
    pub kept: EdgeSet,
    /// The `m` deleted edges.
    pub removed: EdgeSet,
    pub class: TreeClass,
}

/// Lengths of the maximal cyclic runs in a set of spoke indices, given as a
/// mask with bit `j - 1` for spoke `e_j1`.
fn spoke_runs(mask: u64, m: usize) -> Vec<usize> {
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    if mask == 0 {
        return Vec::new();
    }
    if mask == full {
        return vec![m];
    }
    let present = |j: usize| mask >> ((j + m) % m) & 1 == 1;
    // Start scanning just after a kept spoke so no run straddles the origin.
    let origin = (0..m).find(|&j| !present(j)).expect("mask is not full");
    let mut runs = Vec::new();
    let mut current = 0;
    for step in 1..=m {
        if present(origin + step) {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    runs
}

/// Cycle groups left after deleting the spokes in `mask`: each kept spoke
/// `e_j1` starts a new group at base cycle `j`. Returns the rim edges of
/// each group.
fn rim_groups(shape: JahangirShape, mask: u64) -> Vec<EdgeSet> {
    let m = shape.m();
    let kept = |j: usize| mask >> (j - 1) & 1 == 0;
    let origin = (1..=m).find(|&j| kept(j)).expect("at least one spoke kept");
    let mut groups: Vec<EdgeSet> = Vec::new();
    for step in 0..m {
        let j = shape.wrap(origin + step);
        if kept(j) {
            groups.push(EdgeSet::empty());
        }
        let last = groups.last_mut().expect("origin opens a group");
        *last = last.union(shape.rim_pair(j));
    }
    groups
}

/// Every spanning tree of J(2,m) built by the cutting-down rules: choose a
/// proper subset of spokes to delete; each maximal run of deleted spokes
/// fuses its neighbouring base cycles into one big cycle; delete exactly one
/// rim edge from every resulting cycle. Records come back sorted by facet.
pub fn enumerate_spanning_trees_jahangir(m: usize) -> Result<Vec<SpanningTreeRecord>> {
    let shape = JahangirShape::new(m)?;
    if m > 20 {
        return Err(Error::capacity(format!(
            "cutting-down enumeration is limited to m <= 20, got {m}"
        )));
    }
    let all = EdgeSet::full(shape.edge_count());
    let mut records = Vec::new();
    for mask in 0..(1u64 << m) - 1 {
        let spokes: EdgeSet = (1..=m)
            .filter(|&j| mask >> (j - 1) & 1 == 1)
            .map(|j| shape.spoke(j))
            .collect();
        let class = TreeClass::of_runs(&spoke_runs(mask, m));
        let groups = rim_groups(shape, mask);
        let options: Vec<Vec<usize>> = groups.iter().map(|g| g.to_vec()).collect();
        // Odometer over one rim edge per group.
        let mut choice = vec![0usize; options.len()];
        'odometer: loop {
            let removed = choice.iter().zip(&options).fold(spokes, |acc, (&c, opts)| {
                acc.union(EdgeSet::singleton(opts[c]))
            });
            records.push(SpanningTreeRecord {
                kept: all.difference(removed),
                removed,
                class,
            });
            for (digit, opts) in choice.iter_mut().zip(&options) {
                *digit += 1;
                if *digit < opts.len() {
                    continue 'odometer;
                }
                *digit = 0;
            }
            break;
        }
    }
    records.sort_by_key(|r| r.kept);
    Ok(records)
}

/// Class of the tree `E \ removed` of J(2,m).
pub fn classify_tree(removed: EdgeSet, m: usize) -> Result<TreeClass> {
    let shape = JahangirShape::new(m)?;
    let all = EdgeSet::full(shape.edge_count());
    if removed.len() != m || !removed.is_subset(all) {
        return Err(Error::Classification(format!(
            "expected {m} removed edges of J(2,{m}), got {:?}",
            removed
        )));
    }
    let kept = all.difference(removed);
    if !shape.graph().is_spanning_tree(kept) {
        return Err(Error::Classification(format!(
            "complement of {removed:?} is not a spanning tree of J(2,{m})"
        )));
    }
    let mask = (1..=m)
        .filter(|&j| removed.contains(shape.spoke(j)))
        .fold(0u64, |acc, j| acc | 1 << (j - 1));
    Ok(TreeClass::of_runs(&spoke_runs(mask, m)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub m: usize,
    /// Record counts in the order CJ1, CJ2, CJ3a, CJ3b, CJ3c.
    pub class_counts: [usize; 5],
    pub generic_count: usize,
    pub matrix_tree_count: BigUint,
    /// Facets produced more than once (within or across classes).
    pub duplicates: Vec<EdgeSet>,
    /// Records whose kept set is not a spanning tree.
    pub non_trees: Vec<EdgeSet>,
    /// Spanning trees the cutting-down rules never produce.
    pub missing: Vec<EdgeSet>,
    /// Records whose stored class disagrees with `classify_tree`.
    pub misclassified: Vec<EdgeSet>,
}

impl PartitionReport {
    pub fn total(&self) -> usize {
        self.class_counts.iter().sum()
    }

    pub fn passed(&self) -> bool {
        self.duplicates.is_empty()
            && self.non_trees.is_empty()
            && self.missing.is_empty()
            && self.misclassified.is_empty()
            && self.total() == self.generic_count
            && BigUint::from(self.generic_count) == self.matrix_tree_count
    }
}

/// Checks that the cutting-down classes are disjoint and together give
/// exactly the generic enumeration.
pub fn verify_partition(m: usize) -> Result<PartitionReport> {
    let shape = JahangirShape::new(m)?;
    let g = shape.graph();
    let records = enumerate_spanning_trees_jahangir(m)?;
    let generic = enumerate_spanning_trees_generic(&g);

    let mut class_counts = [0usize; 5];
    let mut seen = HashSet::new();
    let mut duplicates = Vec::new();
    let mut non_trees = Vec::new();
    let mut misclassified = Vec::new();
    for r in &records {
        class_counts[r.class as usize] += 1;
        if !seen.insert(r.kept) {
            duplicates.push(r.kept);
        }
        if !g.is_spanning_tree(r.kept) {
            non_trees.push(r.kept);
        } else if classify_tree(r.removed, m)? != r.class {
            misclassified.push(r.kept);
        }
    }
    let missing = generic
        .iter()
        .filter(|t| !seen.contains(*t))
        .copied()
        .collect();
    Ok(PartitionReport {
        m,
        class_counts,
        generic_count: generic.len(),
        matrix_tree_count: matrix_tree_count(&g),
        duplicates,
        non_trees,
        missing,
        misclassified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_jahangir;
    use crate::graph::fixtures::*;

    fn removed_set(m: usize, labels: &[&str]) -> EdgeSet {
        let g = build_jahangir(m).unwrap();
        labels
            .iter()
            .map(|l| g.index_of(l.parse().unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn generic_small_graphs() {
        assert_eq!(enumerate_spanning_trees_generic(&triangle()).len(), 3);
        assert_eq!(enumerate_spanning_trees_generic(&path(5)).len(), 1);
        assert_eq!(enumerate_spanning_trees_generic(&square()).len(), 4);
        let disconnected = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(enumerate_spanning_trees_generic(&disconnected).is_empty());
        let single = Graph::new(1, vec![]).unwrap();
        assert_eq!(
            enumerate_spanning_trees_generic(&single),
            vec![EdgeSet::empty()]
        );
    }

    #[test]
    fn generic_is_sorted_and_matches_matrix_tree() {
        for m in 3..=6 {
            let g = build_jahangir(m).unwrap();
            let trees = enumerate_spanning_trees_generic(&g);
            assert!(trees.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(BigUint::from(trees.len()), matrix_tree_count(&g));
        }
    }

    #[test]
    fn spoke_run_decomposition() {
        assert_eq!(spoke_runs(0b000, 3), Vec::<usize>::new());
        assert_eq!(spoke_runs(0b101, 3), vec![2]);
        assert_eq!(spoke_runs(0b0101, 4), vec![1, 1]);
        assert_eq!(spoke_runs(0b11011, 6), vec![2, 2]);
        assert_eq!(spoke_runs(0b100011, 6), vec![3]);
        assert_eq!(spoke_runs(0b10011, 6), vec![1, 2]);
    }

    #[test]
    fn cutting_down_j23() {
        let records = enumerate_spanning_trees_jahangir(3).unwrap();
        assert_eq!(records.len(), 50);
        let count = |c| records.iter().filter(|r| r.class == c).count();
        assert_eq!(TreeClass::ALL.map(count), [8, 24, 18, 0, 0]);
        let spokes = removed_set(3, &["e11", "e21"]);
        let with_both: Vec<_> = records
            .iter()
            .filter(|r| spokes.is_subset(r.removed))
            .collect();
        assert_eq!(with_both.len(), 6);
        assert!(with_both.iter().all(|r| r.class == TreeClass::Cj3a));
        let g = build_jahangir(3).unwrap();
        for r in &records {
            assert_eq!(r.kept.len(), 6);
            assert_eq!(r.removed.len(), 3);
            assert!(g.is_spanning_tree(r.kept));
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_tree(removed_set(3, &["e12", "e22", "e32"]), 3).unwrap(),
            TreeClass::Cj1
        );
        assert_eq!(
            classify_tree(removed_set(3, &["e11", "e12", "e22"]), 3).unwrap(),
            TreeClass::Cj2
        );
        assert_eq!(
            classify_tree(removed_set(3, &["e11", "e21", "e13"]), 3).unwrap(),
            TreeClass::Cj3a
        );
        // e12 and e13 both on C_1 leave C_2 and C_3 intact.
        assert!(matches!(
            classify_tree(removed_set(3, &["e12", "e13", "e22"]), 3),
            Err(Error::Classification(_))
        ));
        assert!(classify_tree(removed_set(3, &["e12", "e22"]), 3).is_err());
        assert_eq!(
            classify_tree(
                removed_set(6, &["e11", "e31", "e52", "e62", "e22", "e42"]),
                6
            )
            .unwrap(),
            TreeClass::Cj3b
        );
    }

    #[test]
    fn partition_holds() {
        for m in 3..=6 {
            let report = verify_partition(m).unwrap();
            assert!(report.passed(), "{report:?}");
        }
        let r = verify_partition(3).unwrap();
        assert_eq!(r.class_counts, [8, 24, 18, 0, 0]);
    }
}
