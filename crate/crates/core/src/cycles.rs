//! The consecutive-cycle catalog of J(2,m) and the closed-form intersection
//! sizes between catalog cycles.
//!
//! A catalog word `C_{i1,...,ik}` names the cycle obtained by gluing the
//! consecutive base cycles `C_{i1}, ..., C_{ik}` and deleting the `k - 1`
//! spokes between them. For `k < m` this is a simple cycle of length
//! `2(k + 1)`. For `k = m` the word wraps all the way round: what is left is
//! the whole rim plus the single spoke `e_{i1,1}`, which is not a cycle at
//! all. The entry is kept (flagged) so the catalog stays the full `m^2`
//! family the closed forms are stated over. The rim cycle itself has no
//! word.

use std::fmt;

use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_simple_cycles, Graph, JahangirShape};

/// A run of `len` consecutive base-cycle indices starting at `start`,
/// wrapping from `m` back to 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    start: usize,
    len: usize,
    m: usize,
}

#[allow(clippy::len_without_is_empty)]
impl Word {
    pub fn new(start: usize, len: usize, m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::invalid(format!(
                "catalog words need m >= 3, got {m}"
            )));
        }
        if !(1..=m).contains(&start) || !(1..=m).contains(&len) {
            return Err(Error::invalid(format!(
                "word start {start} / length {len} outside 1..={m}"
            )));
        }
        Ok(Word { start, len, m })
    }

    pub fn start(self) -> usize {
        self.start
    }

    pub fn len(self) -> usize {
        self.len
    }

    pub fn m(self) -> usize {
        self.m
    }

    /// First cycle index `u_1`.
    pub fn first(self) -> usize {
        self.start
    }

    /// Last cycle index `u_p`.
    pub fn last(self) -> usize {
        self.at(self.len - 1)
    }

    /// The `t`-th index of the word, 0-based.
    pub fn at(self, t: usize) -> usize {
        (self.start - 1 + t) % self.m + 1
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..self.len).map(move |t| self.at(t))
    }

    /// Bit `j - 1` set for every index `j` of the word.
    pub fn index_mask(self) -> u64 {
        self.indices().fold(0, |acc, j| acc | 1 << (j - 1))
    }

    /// `a -> b`: `b` immediately follows `a` cyclically.
    pub fn follows(a: usize, b: usize, m: usize) -> bool {
        a % m + 1 == b
    }

    /// Edge set: glued base cycles minus the interior spokes.
    pub fn edges(self) -> EdgeSet {
        let shape = JahangirShape::new(self.m).expect("word m validated on construction");
        let mut set = self
            .indices()
            .fold(EdgeSet::empty(), |acc, j| acc.union(shape.base_cycle(j)));
        for t in 1..self.len {
            set.remove(shape.spoke(self.at(t)));
        }
        set
    }

    /// Order `beta` of the catalog entry, `|edges|`. Equals `2(k + 1)` for
    /// `k < m` and `2m + 1` for the wrapped words.
    pub fn beta(self) -> usize {
        if self.len < self.m {
            2 * (self.len + 1)
        } else {
            2 * self.m + 1
        }
    }

    /// The closed-form order `2(k + 1)` claimed for every word.
    pub fn claimed_beta(self) -> usize {
        2 * (self.len + 1)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().map(|j| j.to_string()).collect();
        write!(f, "C{{{}}}", idx.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleWord {
    Consecutive(Word),
    /// A cycle that no consecutive word produces; numbered in catalog order.
    Synthetic(usize),
}

impl fmt::Display for CycleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleWord::Consecutive(w) => w.fmt(f),
            CycleWord::Synthetic(n) => write!(f, "Z{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCatalogEntry {
    pub word: CycleWord,
    pub edges: EdgeSet,
    pub beta: usize,
    pub is_simple_cycle: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCatalog {
    /// `m` when the catalog belongs to a Jahangir graph.
    pub m: Option<usize>,
    pub entries: Vec<CycleCatalogEntry>,
}

impl CycleCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn edge_sets(&self) -> Vec<EdgeSet> {
        self.entries.iter().map(|e| e.edges).collect()
    }

    /// Pairs of distinct entries whose edge sets coincide.
    pub fn duplicate_edge_sets(&self) -> Vec<(CycleWord, CycleWord)> {
        let mut dups = Vec::new();
        for (a, ea) in self.entries.iter().enumerate() {
            for eb in &self.entries[a + 1..] {
                if ea.edges == eb.edges {
                    dups.push((ea.word, eb.word));
                }
            }
        }
        dups
    }
}

/// The `m^2` consecutive words of J(2,m), ordered by length and then start.
pub fn paper_cycle_catalog(m: usize) -> Result<CycleCatalog> {
    let shape = JahangirShape::new(m)?;
    let g = shape.graph();
    let mut entries = Vec::with_capacity(m * m);
    for len in 1..=m {
        for start in 1..=m {
            let word = Word::new(start, len, m)?;
            let edges = word.edges();
            entries.push(CycleCatalogEntry {
                word: CycleWord::Consecutive(word),
                edges,
                beta: edges.len(),
                is_simple_cycle: g.is_simple_cycle(edges),
            });
        }
    }
    Ok(CycleCatalog {
        m: Some(m),
        entries,
    })
}

/// One entry per simple cycle of `g`. When `g` carries a complete J(2,m)
/// labelling, cycles that equal a consecutive word get that word.
pub fn oracle_cycle_catalog(g: &Graph) -> CycleCatalog {
    let words = jahangir_words(g);
    let m = words.as_ref().map(|(m, _)| *m);
    let mut synthetic = 0;
    let entries = enumerate_simple_cycles(g)
        .into_iter()
        .map(|edges| {
            let word = words
                .as_ref()
                .and_then(|(_, ws)| ws.iter().find(|(_, e)| *e == edges).map(|(w, _)| *w))
                .map(CycleWord::Consecutive)
                .unwrap_or_else(|| {
                    synthetic += 1;
                    CycleWord::Synthetic(synthetic)
                });
            CycleCatalogEntry {
                word,
                edges,
                beta: edges.len(),
                is_simple_cycle: true,
            }
        })
        .collect();
    CycleCatalog { m, entries }
}

/// Consecutive words of `g` with edge sets translated through its labels,
/// if the labels are exactly `e11..em3` for some `m >= 3`.
fn jahangir_words(g: &Graph) -> Option<(usize, Vec<(Word, EdgeSet)>)> {
    let labels = g.labels()?;
    let m = labels.len() / 3;
    if labels.len() % 3 != 0 || m < 3 {
        return None;
    }
    let shape = JahangirShape::new(m).ok()?;
    let mut to_graph = vec![usize::MAX; 3 * m];
    for (idx, l) in labels.iter().enumerate() {
        if l.cycle > m {
            return None;
        }
        to_graph[shape.edge(l.cycle, l.position)] = idx;
    }
    if to_graph.contains(&usize::MAX) {
        return None;
    }
    let mut words = Vec::new();
    for len in 1..m {
        for start in 1..=m {
            let w = Word::new(start, len, m).ok()?;
            let edges = w.edges().iter().map(|e| to_graph[e]).collect();
            words.push((w, edges));
        }
    }
    Some((m, words))
}

pub fn direct_intersection(a: EdgeSet, b: EdgeSet) -> usize {
    a.intersection(b).len()
}

/// Which closed form a prediction came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Proposition {
    /// Index set of one word contained in the other's.
    Nested,
    /// Overlapping index sets, neither containing the other.
    Partial,
    /// Disjoint index sets.
    Disjoint,
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Proposition::Nested => "nested",
            Proposition::Partial => "partial",
            Proposition::Disjoint => "disjoint",
        })
    }
}

fn same_m(u: Word, v: Word) -> Result<usize> {
    if u.m != v.m {
        return Err(Error::invalid(format!(
            "words over m = {} and m = {}",
            u.m, v.m
        )));
    }
    Ok(u.m)
}

/// `U ⊆ V`: `beta_u - 2`, plus one for each end of `u` that coincides with
/// the same end of `v`.
pub fn predict_intersection_nested(u: Word, v: Word) -> Result<usize> {
    same_m(u, v)?;
    if u.index_mask() & !v.index_mask() != 0 {
        return Err(Error::precondition(format!("{u} is not nested in {v}")));
    }
    let start_aligned = u.first() == v.first();
    let end_aligned = u.last() == v.last();
    Ok(u.beta() - 2 + start_aligned as usize + end_aligned as usize)
}

/// Overlap without containment. The overlap is split into maximal runs along
/// `u`; a run that begins at `v_1` scores `beta_run - 2 + [v_q -> u_1]`, a run
/// that ends at `v_q` scores `beta_run - 2 + [u_p -> v_1]`, and the runs add.
pub fn predict_intersection_partial(u: Word, v: Word) -> Result<usize> {
    let m = same_m(u, v)?;
    let (um, vm) = (u.index_mask(), v.index_mask());
    if um & vm == 0 || um & !vm == 0 || vm & !um == 0 {
        return Err(Error::precondition(format!(
            "{u} and {v} are disjoint or nested, not partially overlapping"
        )));
    }
    let mut total = 0;
    for (run_start, run_len) in overlap_runs(u, vm) {
        let run = Word::new(u.at(run_start), run_len, m)?;
        let base = run.beta() - 2;
        if run.first() == v.first() {
            total += base + Word::follows(v.last(), u.first(), m) as usize;
        } else if run.last() == v.last() {
            total += base + Word::follows(u.last(), v.first(), m) as usize;
        } else {
            return Err(Error::precondition(format!(
                "overlap run {run} of {u} and {v} touches neither end of {v}"
            )));
        }
    }
    Ok(total)
}

/// Maximal runs `(offset into u, length)` of positions of `u` that lie in `mask`.
fn overlap_runs(u: Word, mask: u64) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut t = 0;
    while t < u.len() {
        if mask >> (u.at(t) - 1) & 1 == 1 {
            let s = t;
            while t < u.len() && mask >> (u.at(t) - 1) & 1 == 1 {
                t += 1;
            }
            runs.push((s, t - s));
        } else {
            t += 1;
        }
    }
    runs
}

/// Disjoint index sets: one shared spoke per adjacent pair of ends.
pub fn predict_intersection_disjoint(u: Word, v: Word) -> Result<usize> {
    let m = same_m(u, v)?;
    if u.index_mask() & v.index_mask() != 0 {
        return Err(Error::precondition(format!(
            "{u} and {v} share a base cycle"
        )));
    }
    Ok(Word::follows(u.last(), v.first(), m) as usize
        + Word::follows(v.last(), u.first(), m) as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prediction {
    pub value: usize,
    pub proposition: Proposition,
}

/// Routes a word pair to the closed form whose hypothesis it satisfies:
/// nested, then partial, then disjoint.
pub fn predict_intersection(u: Word, v: Word) -> Result<Prediction> {
    same_m(u, v)?;
    let (um, vm) = (u.index_mask(), v.index_mask());
    let (value, proposition) = if um & !vm == 0 {
        (predict_intersection_nested(u, v)?, Proposition::Nested)
    } else if vm & !um == 0 {
        (predict_intersection_nested(v, u)?, Proposition::Nested)
    } else if um & vm != 0 {
        (predict_intersection_partial(u, v)?, Proposition::Partial)
    } else {
        (predict_intersection_disjoint(u, v)?, Proposition::Disjoint)
    };
    Ok(Prediction { value, proposition })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionDivergence {
    pub u: Word,
    pub v: Word,
    pub proposition: Proposition,
    pub predicted: usize,
    pub direct: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IntersectionReport {
    pub m: usize,
    /// Ordered pairs checked per closed form: nested, partial, disjoint.
    pub checked: [usize; 3],
    pub divergences: Vec<IntersectionDivergence>,
}

impl IntersectionReport {
    pub fn total_checked(&self) -> usize {
        self.checked.iter().sum()
    }
}

/// Compares the closed forms against direct intersection for every ordered
/// pair of catalog words, collecting disagreements.
pub fn intersection_report(m: usize) -> Result<IntersectionReport> {
    let catalog = paper_cycle_catalog(m)?;
    let mut report = IntersectionReport {
        m,
        ..Default::default()
    };
    for a in &catalog.entries {
        for b in &catalog.entries {
            let (CycleWord::Consecutive(u), CycleWord::Consecutive(v)) = (a.word, b.word) else {
                continue;
            };
            let p = predict_intersection(u, v)?;
            report.checked[p.proposition as usize] += 1;
            let direct = direct_intersection(a.edges, b.edges);
            if direct != p.value {
                report.divergences.push(IntersectionDivergence {
                    u,
                    v,
                    proposition: p.proposition,
                    predicted: p.value,
                    direct,
                });
            }
        }
    }
    Ok(report)
}
