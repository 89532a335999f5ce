//! `verify`: every computable claim next to an independent oracle.

use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use serde_json::{json, Value};

use super::commands::{Context, LISTING_LIMIT};
use super::render::{self, csv, lines, names};
use super::{CmdResult, Document, Format};
use crate::complex::{f_vector_direct, spanning_complex, FVector};
use crate::cycles::{
    intersection_report, oracle_cycle_catalog, paper_cycle_catalog, CycleWord, Proposition,
};
use crate::error::{Error, Result};
use crate::face_ring::{
    cohen_macaulay_verdict, facet_ideal, has_quasi_linear_quotients, is_shelling, paper_ordering,
    OrderingStrategy, Verdict, PAPER_ORDERING_FACET_LIMIT,
};
use crate::formula::{binomial, f_vector_exact_ie, f_vector_pairwise, f_vector_paper};
use crate::graph::{matrix_tree_count, Graph};
use crate::hilbert::{hilbert_function, hilbert_series};
use crate::spanning::{enumerate_spanning_trees_jahangir, verify_partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimVerdict {
    Match,
    Mismatch,
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    pub statement: String,
    pub claimed: Value,
    pub claimed_by: String,
    pub oracle: Value,
    pub oracle_by: String,
    pub verdict: ClaimVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommandInfo {
    pub graph: String,
    pub command: String,
    pub seed: u64,
    pub version: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub r#match: usize,
    pub mismatch: usize,
    pub unchecked: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub command: CommandInfo,
    pub claims: Vec<Claim>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<Vec<(String, f64)>>,
}

impl RunReport {
    pub fn has_mismatch(&self) -> bool {
        self.summary.mismatch > 0
    }
}

struct Builder {
    claims: Vec<Claim>,
    timings: Vec<(String, f64)>,
}

impl Builder {
    fn compare(
        &mut self,
        id: &str,
        statement: &str,
        claimed_by: &str,
        claimed: Value,
        oracle_by: &str,
        oracle: Value,
    ) -> &mut Claim {
        let verdict = if claimed == oracle {
            ClaimVerdict::Match
        } else {
            ClaimVerdict::Mismatch
        };
        self.claims.push(Claim {
            id: id.into(),
            statement: statement.into(),
            claimed,
            claimed_by: claimed_by.into(),
            oracle,
            oracle_by: oracle_by.into(),
            verdict,
            details: None,
        });
        self.claims.last_mut().unwrap()
    }

    fn unchecked(&mut self, id: &str, statement: &str, reason: String) {
        self.claims.push(Claim {
            id: id.into(),
            statement: statement.into(),
            claimed: Value::Null,
            claimed_by: String::new(),
            oracle: Value::Null,
            oracle_by: String::new(),
            verdict: ClaimVerdict::Unchecked,
            details: Some(json!({ "reason": reason })),
        });
    }

    /// Runs `body`, turning a library error into an unchecked claim.
    fn section(
        &mut self,
        id: &str,
        statement: &str,
        body: impl FnOnce(&mut Builder) -> Result<()>,
    ) {
        let start = Instant::now();
        if let Err(e) = body(self) {
            self.unchecked(id, statement, e.to_string());
        }
        self.timings
            .push((id.to_string(), start.elapsed().as_secs_f64() * 1e3));
    }
}

fn strings(f: &FVector) -> Value {
    json!(f.to_strings())
}

fn big(x: &BigUint) -> Value {
    json!(x.to_string())
}

fn guard_trees(g: &Graph, limit: u64) -> Result<BigUint> {
    let trees = matrix_tree_count(g);
    if trees > BigUint::from(limit) {
        return Err(Error::Capacity(format!(
            "{trees} spanning trees exceed {limit}"
        )));
    }
    Ok(trees)
}

pub(super) fn verify(ctx: &Context) -> CmdResult<Document> {
    let report = build_report(ctx);
    let body = match ctx.format {
        Format::Json => render::json(&serde_json::to_value(&report).expect("serializable")),
        Format::Csv => csv(
            &[
                "id",
                "verdict",
                "claimed",
                "oracle",
                "claimed_by",
                "oracle_by",
            ],
            report.claims.iter().map(|c| {
                vec![
                    c.id.clone(),
                    verdict_name(c.verdict).into(),
                    c.claimed.to_string(),
                    c.oracle.to_string(),
                    c.claimed_by.clone(),
                    c.oracle_by.clone(),
                ]
            }),
        ),
        Format::Text => {
            let mut out: Vec<String> = report
                .claims
                .iter()
                .map(|c| {
                    format!(
                        "{:<9} {}  claimed {}  oracle {}",
                        verdict_name(c.verdict),
                        c.id,
                        c.claimed,
                        c.oracle
                    )
                })
                .collect();
            out.push(format!(
                "{} match, {} mismatch, {} unchecked",
                report.summary.r#match, report.summary.mismatch, report.summary.unchecked
            ));
            if let Some(t) = &report.timings_ms {
                out.extend(t.iter().map(|(id, ms)| format!("time {id} {ms:.3} ms")));
            }
            lines(out)
        }
    };
    Ok(Document {
        body,
        mismatch: report.has_mismatch(),
    })
}

fn verdict_name(v: ClaimVerdict) -> &'static str {
    match v {
        ClaimVerdict::Match => "match",
        ClaimVerdict::Mismatch => "mismatch",
        ClaimVerdict::Unchecked => "unchecked",
    }
}

/// The `verify` report for `graph`, without timings.
pub fn build_report_for(
    graph: &Graph,
    jahangir: Option<usize>,
    name: &str,
    seed: u64,
) -> RunReport {
    let ctx = Context {
        graph: graph.clone(),
        jahangir,
        name: name.to_string(),
        format: Format::Json,
        seed,
        timings: false,
    };
    build_report(&ctx)
}

fn build_report(ctx: &Context) -> RunReport {
    let mut b = Builder {
        claims: Vec::new(),
        timings: Vec::new(),
    };
    if let Some(m) = ctx.jahangir {
        jahangir_claims(&mut b, &ctx.graph, m, ctx.seed);
    } else {
        generic_claims(&mut b, &ctx.graph, ctx.seed);
    }
    let mut summary = Summary::default();
    for c in &b.claims {
        match c.verdict {
            ClaimVerdict::Match => summary.r#match += 1,
            ClaimVerdict::Mismatch => summary.mismatch += 1,
            ClaimVerdict::Unchecked => summary.unchecked += 1,
        }
    }
    RunReport {
        command: CommandInfo {
            graph: ctx.name.clone(),
            command: "verify".into(),
            seed: ctx.seed,
            version: env!("CARGO_PKG_VERSION").into(),
        },
        claims: b.claims,
        summary,
        timings_ms: ctx.timings.then_some(b.timings),
    }
}

const TREES: &str = "oracle: Matrix-Tree determinant";
const FORESTS: &str = "oracle: forest enumeration";

fn jahangir_claims(b: &mut Builder, g: &Graph, m: usize, seed: u64) {
    b.section(
        "facets.count",
        "cutting-down enumeration yields every spanning tree",
        |b| {
            let trees = guard_trees(g, LISTING_LIMIT)?;
            let records = enumerate_spanning_trees_jahangir(m)?;
            b.compare(
                "facets.count",
                "cutting-down enumeration yields every spanning tree",
                "formula: cutting-down classes",
                json!(records.len().to_string()),
                TREES,
                big(&trees),
            );
            Ok(())
        },
    );

    b.section("facets.partition", "classes CJ1..CJ3c are disjoint and cover all spanning trees", |b| {
        guard_trees(g, LISTING_LIMIT)?;
        let r = verify_partition(m)?;
        let claimed = json!({ "duplicates": 0, "non_trees": 0, "missing": 0, "misclassified": 0, "total": r.generic_count });
        let observed = json!({
            "duplicates": r.duplicates.len(),
            "non_trees": r.non_trees.len(),
            "missing": r.missing.len(),
            "misclassified": r.misclassified.len(),
            "total": r.total(),
        });
        let c = b.compare(
            "facets.partition",
            "classes CJ1..CJ3c are disjoint and cover all spanning trees",
            "formula: cutting-down classes",
            claimed,
            "oracle: generic spanning-tree enumeration",
            observed,
        );
        c.details = Some(json!({ "class_counts": r.class_counts }));
        Ok(())
    });

    b.section(
        "complex.dimension",
        "the spanning complex is pure of dimension 2m-1",
        |b| {
            guard_trees(g, LISTING_LIMIT)?;
            let c = spanning_complex(g)?;
            b.compare(
                "complex.dimension",
                "the spanning complex is pure of dimension 2m-1",
                "formula: 2m-1, pure",
                json!({ "dimension": 2 * m - 1, "pure": true }),
                "oracle: generic spanning-tree enumeration",
                json!({ "dimension": c.dimension()?, "pure": c.is_pure()? }),
            );
            Ok(())
        },
    );

    b.section("cycles.orders", "the word C_{j..j+k-1} has 2(k+1) edges", |b| {
        let cat = paper_cycle_catalog(m)?;
        let mut wrong = Vec::new();
        let (mut claimed, mut actual) = (Vec::new(), Vec::new());
        for e in &cat.entries {
            if let CycleWord::Consecutive(w) = e.word {
                claimed.push(w.claimed_beta());
                actual.push(e.beta);
                if w.claimed_beta() != e.beta {
                    wrong.push(json!({ "word": w.to_string(), "claimed": w.claimed_beta(), "edges": e.beta }));
                }
            }
        }
        let c = b.compare(
            "cycles.orders",
            "the word C_{j..j+k-1} has 2(k+1) edges",
            "formula: 2(k+1)",
            json!(claimed),
            "oracle: edge count of the word's edge set",
            json!(actual),
        );
        if !wrong.is_empty() {
            c.details = Some(json!({ "divergent_words": wrong }));
        }
        Ok(())
    });

    b.section(
        "cycles.catalog",
        "the consecutive words are exactly the simple cycles",
        |b| {
            let cat = paper_cycle_catalog(m)?;
            let oracle = oracle_cycle_catalog(g);
            let words: Vec<_> = cat
                .entries
                .iter()
                .filter(|e| e.is_simple_cycle)
                .map(|e| e.edges)
                .collect();
            let not_cycles: Vec<String> = cat
                .entries
                .iter()
                .filter(|e| !e.is_simple_cycle)
                .map(|e| e.word.to_string())
                .collect();
            let missing: Vec<Vec<String>> = oracle
                .entries
                .iter()
                .filter(|e| !words.contains(&e.edges))
                .map(|e| names(g, e.edges))
                .collect();
            let c = b.compare(
                "cycles.catalog",
                "the consecutive words are exactly the simple cycles",
                "formula: m^2 consecutive words",
                json!(cat.len()),
                "oracle: simple-cycle enumeration",
                json!(oracle.len()),
            );
            c.details = Some(
                json!({ "words_not_simple_cycles": not_cycles, "cycles_without_word": missing }),
            );
            Ok(())
        },
    );

    let report = intersection_report(m);
    for prop in [
        Proposition::Nested,
        Proposition::Partial,
        Proposition::Disjoint,
    ] {
        let id = format!("intersections.{prop}");
        let statement = format!("{prop} closed form equals the direct intersection size");
        b.section(&id, &statement, |b| {
            let r = report.clone()?;
            let divergences: Vec<Value> = r
                .divergences
                .iter()
                .filter(|d| d.proposition == prop)
                .map(|d| json!({ "u": d.u.to_string(), "v": d.v.to_string(), "predicted": d.predicted, "direct": d.direct }))
                .collect();
            let checked = r.checked[prop as usize];
            let c = b.compare(
                &id,
                &statement,
                "formula: closed form",
                json!(checked),
                "oracle: direct edge-set intersection (pairs agreeing)",
                json!(checked - divergences.len()),
            );
            if !divergences.is_empty() {
                c.details = Some(json!({ "divergences": divergences }));
            }
            Ok(())
        });
    }

    let direct = f_vector_direct(g);
    b.section(
        "f_vector.paper",
        "catalog inclusion-exclusion gives the f-vector",
        |b| {
            let p = f_vector_paper(m)?;
            let d = direct.clone()?;
            for (i, (a, o)) in p.f.entries().iter().zip(d.entries()).enumerate() {
                b.compare(
                    &format!("f_vector.paper.{i}"),
                    &format!("catalog inclusion-exclusion gives f_{i}"),
                    "formula: inclusion-exclusion over the m^2 words",
                    big(a),
                    FORESTS,
                    big(o),
                );
            }
            Ok(())
        },
    );

    b.section(
        "f_vector.pairwise",
        "pairwise-corrected inclusion-exclusion gives the f-vector",
        |b| {
            let p = f_vector_pairwise(m)?;
            let d = direct.clone()?;
            let oracle: Vec<String> = d.to_strings();
            let claimed: Vec<String> = p.f.iter().map(BigInt::to_string).collect();
            b.compare(
                "f_vector.pairwise",
                "pairwise-corrected inclusion-exclusion gives the f-vector",
                "formula: union size truncated at pairwise intersections",
                json!(claimed),
                FORESTS,
                json!(oracle),
            );
            Ok(())
        },
    );

    generic_claims(b, g, seed);

    b.section(
        "cm.paper_ordering",
        "the block ordering has quasi-linear quotients and is a shelling",
        |b| {
            guard_trees(g, PAPER_ORDERING_FACET_LIMIT as u64)?;
            let ideal = facet_ideal(&spanning_complex(g)?)?;
            let ord = paper_ordering(m)?;
            let qlq = has_quasi_linear_quotients(&ideal, &ord)?;
            let c = b.compare(
                "cm.paper_ordering.qlq",
                "the block ordering has quasi-linear quotients",
                "formula: block ordering",
                json!(true),
                "oracle: colon degrees along the ordering",
                json!(qlq.passed),
            );
            if let Some(at) = qlq.first_failure {
                c.details = Some(json!({ "first_failure": at }));
            }
            let facets: Vec<_> = ord.iter().map(|&k| ideal.generators()[k].support).collect();
            b.compare(
                "cm.paper_ordering.shelling",
                "the block ordering is a shelling",
                "formula: block ordering",
                json!(true),
                "oracle: shelling test",
                json!(is_shelling(&facets)?),
            );
            Ok(())
        },
    );
}

fn generic_claims(b: &mut Builder, g: &Graph, seed: u64) {
    b.section(
        "facets.generic",
        "generic enumeration finds every spanning tree",
        |b| {
            let trees = guard_trees(g, LISTING_LIMIT)?;
            let c = spanning_complex(g)?;
            b.compare(
                "facets.generic",
                "generic enumeration finds every spanning tree",
                "engine: generic spanning-tree enumeration",
                json!(c.facets().len().to_string()),
                TREES,
                big(&trees),
            );
            Ok(())
        },
    );

    let direct = f_vector_direct(g);
    b.section(
        "f_vector.top",
        "the top f-vector entry counts facets",
        |b| {
            let d = direct.clone()?;
            let last = d.entries().last().cloned().unwrap_or_default();
            b.compare(
                "f_vector.top",
                "the top f-vector entry counts facets",
                "engine: forest enumeration",
                big(&last),
                TREES,
                big(&matrix_tree_count(g)),
            );
            Ok(())
        },
    );

    b.section(
        "f_vector.exact_ie",
        "inclusion-exclusion over all simple cycles gives the f-vector",
        |b| {
            let e = f_vector_exact_ie(g)?;
            let d = direct.clone()?;
            b.compare(
                "f_vector.exact_ie",
                "inclusion-exclusion over all simple cycles gives the f-vector",
                "engine: exact-union inclusion-exclusion",
                strings(&e),
                FORESTS,
                strings(&d),
            );
            Ok(())
        },
    );

    b.section("hilbert", "the Hilbert series matches the f-vector", |b| {
        let d = direct.clone()?;
        let h = hilbert_series(&d)?;
        b.compare(
            "hilbert.numerator_at_1",
            "the Hilbert numerator at t = 1 counts facets",
            "formula: Hilbert series numerator",
            json!(h.evaluate_numerator(&BigInt::from(1)).to_string()),
            TREES,
            big(&matrix_tree_count(g)),
        );
        let upto = 2 * h.denominator_power as i64;
        let series = (0..=upto)
            .map(|j| hilbert_function(&h, j).map(|v| v.to_string()))
            .collect::<Result<Vec<_>>>()?;
        let counts: Vec<String> = (0..=upto)
            .map(|j| {
                if j == 0 {
                    return "1".to_string();
                }
                d.entries()
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f * binomial(j - 1, i as i64))
                    .sum::<BigUint>()
                    .to_string()
            })
            .collect();
        b.compare(
            "hilbert.function",
            "series coefficients equal sum_i f_i C(j-1, i)",
            "formula: Hilbert series expansion",
            json!(series),
            "oracle: face counts",
            json!(counts),
        );
        Ok(())
    });

    b.section("cm.verdict", "the spanning complex is Cohen-Macaulay", |b| {
        let r = cohen_macaulay_verdict(g, OrderingStrategy::Search, seed)?;
        if r.verdict == Verdict::Unknown {
            return Err(Error::Capacity(r.note.unwrap_or_default()));
        }
        let c = b.compare(
            "cm.verdict",
            "the spanning complex is Cohen-Macaulay",
            "formula: Cohen-Macaulay",
            json!(true),
            "oracle: ordering search for quasi-linear quotients",
            json!(r.verdict == Verdict::True),
        );
        if let Some(cert) = &r.certificate {
            c.details = Some(json!({ "certificate_facets": cert.facets.len(), "is_shelling": cert.is_shelling }));
        }
        Ok(())
    });
}
