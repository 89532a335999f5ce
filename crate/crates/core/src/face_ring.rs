//! Facet ideals, quasi-linear quotients, shellings and the Cohen–Macaulay
//! verdict.
//!
//! For squarefree monomials the colon `(m_j) : (m_i)` is generated by the
//! monomial on `supp(m_j) \ supp(m_i)`, so colon ideals are never built;
//! only the sizes of these differences are needed.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{spanning_complex, SimplicialComplex};
use crate::edge_set::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{build_jahangir, matrix_tree_count, Graph, JahangirShape};

/// `prod_{e in support} x_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquarefreeMonomial {
    pub support: EdgeSet,
}

impl SquarefreeMonomial {
    pub fn new(support: EdgeSet) -> Self {
        SquarefreeMonomial { support }
    }

    pub fn degree(self) -> usize {
        self.support.len()
    }

    pub fn divides(self, other: SquarefreeMonomial) -> bool {
        self.support.is_subset(other.support)
    }
}

/// A squarefree monomial ideal given by a minimal generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: usize,
    generators: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// Fails unless the generators are pairwise non-dividing and use only
    /// `x_0 .. x_{variables - 1}`.
    pub fn new(variables: usize, generators: Vec<SquarefreeMonomial>) -> Result<Self> {
        let all = EdgeSet::full(variables);
        for (a, g) in generators.iter().enumerate() {
            if !g.support.is_subset(all) {
                return Err(Error::precondition(format!(
                    "generator {a} uses an unknown variable"
                )));
            }
            for (b, h) in generators.iter().enumerate() {
                if a != b && g.divides(*h) {
                    return Err(Error::precondition(format!(
                        "generator {a} divides generator {b}; generating set is not minimal"
                    )));
                }
            }
        }
        Ok(MonomialIdeal {
            variables,
            generators,
        })
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// One generator per facet, in facet order.
pub fn facet_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    if !c.is_pure()? {
        return Err(Error::NotPure);
    }
    Ok(MonomialIdeal {
        variables: c.ground_size(),
        generators: c
            .facets()
            .iter()
            .map(|&f| SquarefreeMonomial::new(f))
            .collect(),
    })
}

/// Least degree of a generator of `(previous) : (current)`.
pub fn colon_mindeg(previous: &[SquarefreeMonomial], current: SquarefreeMonomial) -> Result<usize> {
    previous
        .iter()
        .map(|p| p.support.difference(current.support).len())
        .min()
        .ok_or_else(|| Error::precondition("colon ideal of an empty prefix"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QlqCheck {
    pub passed: bool,
    /// Position in the ordering (0-based) of the first generator whose
    /// colon ideal has no linear generator.
    pub first_failure: Option<usize>,
}

fn check_permutation(len: usize, ordering: &[usize]) -> Result<()> {
    let mut seen = vec![false; len];
    if ordering.len() != len {
        return Err(Error::precondition(format!(
            "ordering has {} entries for {len} generators",
            ordering.len()
        )));
    }
    for &k in ordering {
        if k >= len || std::mem::replace(&mut seen[k], true) {
            return Err(Error::precondition("ordering is not a permutation"));
        }
    }
    Ok(())
}

/// Whether every colon ideal along `ordering` has a linear generator.
/// `ordering[p]` is the index of the generator placed at position `p`.
pub fn has_quasi_linear_quotients(ideal: &MonomialIdeal, ordering: &[usize]) -> Result<QlqCheck> {
    check_permutation(ideal.len(), ordering)?;
    let placed: Vec<SquarefreeMonomial> = ordering.iter().map(|&k| ideal.generators[k]).collect();
    for i in 1..placed.len() {
        if colon_mindeg(&placed[..i], placed[i])? != 1 {
            return Ok(QlqCheck {
                passed: false,
                first_failure: Some(i),
            });
        }
    }
    Ok(QlqCheck {
        passed: true,
        first_failure: None,
    })
}

/// Classical shelling test for a pure facet list: each `F_i` meets the
/// earlier facets in a pure codimension-one subcomplex.
pub fn is_shelling(facets: &[EdgeSet]) -> Result<bool> {
    let Some(first) = facets.first() else {
        return Err(Error::EmptyComplex);
    };
    if facets.iter().any(|f| f.len() != first.len()) {
        return Err(Error::NotPure);
    }
    for (i, &fi) in facets.iter().enumerate().skip(1) {
        // F_i ∩ F_j ⊆ F_i ∩ F_k with F_i \ F_k = {x} holds iff x ∉ F_j.
        let witnesses: EdgeSet = facets[..i]
            .iter()
            .map(|&fk| fi.difference(fk))
            .filter(|d| d.len() == 1)
            .fold(EdgeSet::empty(), EdgeSet::union);
        if facets[..i]
            .iter()
            .any(|&fj| fi.difference(fj).is_disjoint(witnesses))
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest tree count for which J(2,m) facets are enumerated for an ordering.
pub const PAPER_ORDERING_FACET_LIMIT: usize = 20_000;

/// Facets of J(2,m) sharing a leading removed-spoke count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperBlock {
    /// Largest `l` with `e_11, ..., e_l1` all removed.
    pub leading_spokes: usize,
    /// Indices into the facet list of [`spanning_complex`].
    pub members: Vec<usize>,
}

fn leading_spokes(shape: JahangirShape, removed: EdgeSet) -> usize {
    (1..=shape.m())
        .take_while(|&j| removed.contains(shape.spoke(j)))
        .count()
}

/// The generators of the facet ideal of J(2,m) grouped into blocks by the
/// number of leading removed spokes, largest first. Within a block,
/// facets are ordered by their removed sets, lexicographically.
pub fn paper_blocks(m: usize) -> Result<Vec<PaperBlock>> {
    let shape = JahangirShape::new(m)?;
    let g = shape.graph();
    if matrix_tree_count(&g) > BigUint::from(PAPER_ORDERING_FACET_LIMIT) {
        return Err(Error::capacity(format!(
            "J(2,{m}) has more than {PAPER_ORDERING_FACET_LIMIT} spanning trees"
        )));
    }
    let complex = spanning_complex(&g)?;
    let all = g.all_edges();
    let mut keyed: Vec<(usize, EdgeSet, usize)> = complex
        .facets()
        .iter()
        .enumerate()
        .map(|(k, &f)| {
            let removed = all.difference(f);
            (leading_spokes(shape, removed), removed, k)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut blocks: Vec<PaperBlock> = Vec::new();
    for (lead, _, k) in keyed {
        match blocks.last_mut() {
            Some(b) if b.leading_spokes == lead => b.members.push(k),
            _ => blocks.push(PaperBlock {
                leading_spokes: lead,
                members: vec![k],
            }),
        }
    }
    Ok(blocks)
}

/// The block ordering flattened into a permutation of the generators of
/// `facet_ideal(spanning_complex(J(2,m)))`.
pub fn paper_ordering(m: usize) -> Result<Vec<usize>> {
    Ok(paper_blocks(m)?
        .into_iter()
        .flat_map(|b| b.members)
        .collect())
}

/// Largest ideal `find_qlq_ordering` will search.
pub const SEARCH_GENERATOR_LIMIT: usize = 2000;

/// Searches for an ordering with quasi-linear quotients.
///
/// A generator can be appended once some placed generator `p` has
/// `|supp(p) \ supp(g)| = 1`, and stays appendable as the prefix grows,
/// so from a fixed first generator a greedy pass succeeds whenever any
/// ordering does. Only the first generator is backtracked over. Ties go to
/// the earliest generator by index when `seed` is 0 and to a seeded
/// shuffle otherwise.
pub fn find_qlq_ordering(ideal: &MonomialIdeal, seed: u64) -> Result<Option<Vec<usize>>> {
    let r = ideal.len();
    if r > SEARCH_GENERATOR_LIMIT {
        return Err(Error::capacity(format!(
            "ordering search accepts at most {SEARCH_GENERATOR_LIMIT} generators, ideal has {r}"
        )));
    }
    if r == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut priority: Vec<usize> = (0..r).collect();
    if seed != 0 {
        priority.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let gens = ideal.generators();
    let steps_to =
        |from: usize, to: usize| gens[from].support.difference(gens[to].support).len() == 1;
    // With equal degrees the step relation is symmetric, so a failed start
    // rules out every generator it reached.
    let equal_degrees = gens.iter().all(|g| g.degree() == gens[0].degree());
    let mut ruled_out = vec![false; r];

    for &start in &priority {
        if ruled_out[start] {
            continue;
        }
        let mut rank = vec![0; r];
        for (p, &k) in priority.iter().enumerate() {
            rank[k] = p;
        }
        let mut placed = vec![false; r];
        let mut ready: BTreeSet<usize> = BTreeSet::new();
        let mut order = Vec::with_capacity(r);
        let mut next = Some(start);
        while let Some(k) = next {
            placed[k] = true;
            order.push(k);
            for q in 0..r {
                if !placed[q] && steps_to(k, q) {
                    ready.insert(rank[q]);
                }
            }
            next = ready.pop_first().map(|p| priority[p]);
        }
        if order.len() == r {
            return Ok(Some(order));
        }
        if equal_degrees {
            for k in order {
                ruled_out[k] = true;
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingStrategy {
    /// The block ordering for J(2,m), then search if it fails or `g` is
    /// not a Jahangir graph.
    Paper,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderingSource {
    Paper,
    Search,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    /// A capacity limit stopped the check before it could decide.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub source: OrderingSource,
    /// The facets in certified order.
    pub facets: Vec<EdgeSet>,
    pub is_shelling: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmReport {
    pub verdict: Verdict,
    pub certificate: Option<Certificate>,
    /// Set when the block ordering was tried; whether it passed.
    pub paper_ordering_passed: Option<bool>,
    pub note: Option<String>,
}

fn unknown(note: String) -> CmReport {
    CmReport {
        verdict: Verdict::Unknown,
        certificate: None,
        paper_ordering_passed: None,
        note: Some(note),
    }
}

fn certify(
    source: OrderingSource,
    ideal: &MonomialIdeal,
    ordering: &[usize],
) -> Result<Certificate> {
    let facets: Vec<EdgeSet> = ordering
        .iter()
        .map(|&k| ideal.generators()[k].support)
        .collect();
    Ok(Certificate {
        source,
        is_shelling: is_shelling(&facets)?,
        facets,
    })
}

/// Cohen–Macaulay verdict for the spanning complex of `g`, certified by an
/// ordering of the facet ideal with quasi-linear quotients.
pub fn cohen_macaulay_verdict(
    g: &Graph,
    strategy: OrderingStrategy,
    seed: u64,
) -> Result<CmReport> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let trees = matrix_tree_count(g);
    let jahangir_m = Some(g.edge_count() / 3).filter(|&m| {
        m >= 3 && g.edge_count().is_multiple_of(3) && build_jahangir(m).as_ref() == Ok(g)
    });
    let try_paper = strategy == OrderingStrategy::Paper
        && jahangir_m.is_some()
        && trees <= BigUint::from(PAPER_ORDERING_FACET_LIMIT);
    if !try_paper && trees > BigUint::from(SEARCH_GENERATOR_LIMIT) {
        return Ok(unknown(format!(
            "{trees} facets exceed the search limit of {SEARCH_GENERATOR_LIMIT}"
        )));
    }
    let complex = spanning_complex(g)?;
    let ideal = facet_ideal(&complex)?;

    let mut paper_passed = None;
    if let (true, Some(m)) = (try_paper, jahangir_m) {
        let ordering = paper_ordering(m)?;
        let passed = has_quasi_linear_quotients(&ideal, &ordering)?.passed;
        paper_passed = Some(passed);
        if passed {
            return Ok(CmReport {
                verdict: Verdict::True,
                certificate: Some(certify(OrderingSource::Paper, &ideal, &ordering)?),
                paper_ordering_passed: paper_passed,
                note: None,
            });
        }
    }
    let report = match find_qlq_ordering(&ideal, seed) {
        Ok(Some(ordering)) => CmReport {
            verdict: Verdict::True,
            certificate: Some(certify(OrderingSource::Search, &ideal, &ordering)?),
            paper_ordering_passed: paper_passed,
            note: None,
        },
        Ok(None) => CmReport {
            verdict: Verdict::False,
            certificate: None,
            paper_ordering_passed: paper_passed,
            note: Some("no ordering has quasi-linear quotients".into()),
        },
        Err(Error::Capacity(msg)) => unknown(msg),
        Err(e) => return Err(e),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn mono(v: &[usize]) -> SquarefreeMonomial {
        SquarefreeMonomial::new(v.iter().copied().collect())
    }

    fn ideal(gens: &[&[usize]]) -> MonomialIdeal {
        let gens: Vec<_> = gens.iter().map(|g| mono(g)).collect();
        let n = gens
            .iter()
            .filter_map(|g| g.support.iter().max())
            .max()
            .map_or(0, |x| x + 1);
        MonomialIdeal::new(n, gens).unwrap()
    }

    #[test]
    fn colon_degrees() {
        assert_eq!(colon_mindeg(&[mono(&[0, 1])], mono(&[0, 2])).unwrap(), 1);
        assert_eq!(colon_mindeg(&[mono(&[0, 1])], mono(&[2, 3])).unwrap(), 2);
        assert!(matches!(
            colon_mindeg(&[], mono(&[0])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn minimality_enforced() {
        assert!(MonomialIdeal::new(3, vec![mono(&[0]), mono(&[0, 1])]).is_err());
        assert!(MonomialIdeal::new(1, vec![mono(&[2])]).is_err());
    }

    #[test]
    fn qlq_basics() {
        let single = ideal(&[&[0, 1]]);
        assert!(has_quasi_linear_quotients(&single, &[0]).unwrap().passed);
        let tri = facet_ideal(&spanning_complex(&triangle()).unwrap()).unwrap();
        for ord in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            assert!(has_quasi_linear_quotients(&tri, &ord).unwrap().passed);
        }
        let far = ideal(&[&[0, 1], &[2, 3]]);
        let check = has_quasi_linear_quotients(&far, &[1, 0]).unwrap();
        assert_eq!(check.first_failure, Some(1));
        assert_eq!(find_qlq_ordering(&far, 0).unwrap(), None);
        assert!(!is_shelling(&[mono(&[0, 1]).support, mono(&[2, 3]).support]).unwrap());
        assert!(has_quasi_linear_quotients(&far, &[0, 0]).is_err());
    }

    #[test]
    fn qlq_is_weaker_than_shelling() {
        // Each facet is adjacent to an earlier one, but {3,4,5} meets {1,2,3}
        // only in {3}, which lies in no adjacent earlier facet.
        let facets = [&[1, 2, 3][..], &[1, 2, 4], &[1, 4, 5], &[3, 4, 5]];
        let id = ideal(&facets);
        assert!(
            has_quasi_linear_quotients(&id, &[0, 1, 2, 3])
                .unwrap()
                .passed
        );
        let sets: Vec<EdgeSet> = id.generators().iter().map(|g| g.support).collect();
        assert!(!is_shelling(&sets).unwrap());
    }

    #[test]
    fn shelling_errors() {
        assert_eq!(is_shelling(&[]), Err(Error::EmptyComplex));
        assert_eq!(
            is_shelling(&[mono(&[0]).support, mono(&[1, 2]).support]),
            Err(Error::NotPure)
        );
        let c = SimplicialComplex::new(3, vec![mono(&[0]).support, mono(&[1, 2]).support]).unwrap();
        assert_eq!(facet_ideal(&c), Err(Error::NotPure));
    }

    #[test]
    fn blocks_j23() {
        let blocks = paper_blocks(3).unwrap();
        let leads: Vec<usize> = blocks.iter().map(|b| b.leading_spokes).collect();
        assert_eq!(leads, vec![2, 1, 0]);
        assert_eq!(blocks.iter().map(|b| b.members.len()).sum::<usize>(), 50);
        let g = build_jahangir(3).unwrap();
        let facets = spanning_complex(&g).unwrap().facets().to_vec();
        let shape = JahangirShape::new(3).unwrap();
        for &k in &blocks[0].members {
            assert!(!facets[k].contains(shape.spoke(1)) && !facets[k].contains(shape.spoke(2)));
        }
        let mut ord = paper_ordering(3).unwrap();
        ord.sort_unstable();
        assert_eq!(ord, (0..50).collect::<Vec<_>>());
        assert!(matches!(paper_ordering(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn block_ordering_certifies_small_cases() {
        for m in 3..=4 {
            let g = build_jahangir(m).unwrap();
            let id = facet_ideal(&spanning_complex(&g).unwrap()).unwrap();
            let ord = paper_ordering(m).unwrap();
            assert!(has_quasi_linear_quotients(&id, &ord).unwrap().passed);
            let r = cohen_macaulay_verdict(&g, OrderingStrategy::Paper, 0).unwrap();
            assert_eq!(r.verdict, Verdict::True);
            let cert = r.certificate.unwrap();
            assert_eq!(cert.source, OrderingSource::Paper);
            assert!(cert.is_shelling);
        }
    }

    #[test]
    fn search_defaults_to_lex_order() {
        let g = build_jahangir(3).unwrap();
        let id = facet_ideal(&spanning_complex(&g).unwrap()).unwrap();
        assert_eq!(find_qlq_ordering(&id, 0).unwrap(), Some((0..50).collect()));
        let shuffled = find_qlq_ordering(&id, 7).unwrap().unwrap();
        assert!(has_quasi_linear_quotients(&id, &shuffled).unwrap().passed);
    }

    #[test]
    fn verdicts_for_small_graphs() {
        for g in [triangle(), path(4), square()] {
            let r = cohen_macaulay_verdict(&g, OrderingStrategy::Search, 0).unwrap();
            assert_eq!(r.verdict, Verdict::True);
        }
        let disconnected = Graph::new(3, vec![(0, 1)]).unwrap();
        assert_eq!(
            cohen_macaulay_verdict(&disconnected, OrderingStrategy::Search, 0),
            Err(Error::Disconnected)
        );
        let big = build_jahangir(7).unwrap();
        let r = cohen_macaulay_verdict(&big, OrderingStrategy::Search, 0).unwrap();
        assert_eq!(r.verdict, Verdict::Unknown);
    }
}
