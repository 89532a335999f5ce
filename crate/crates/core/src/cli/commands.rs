use num_bigint::{BigInt, BigUint};
use serde_json::{json, Value};

use super::render::{self, csv, joined, lines, names, set_text};
use super::{verify, Catalog, CmdResult, Command, Document, FMode, Failure, Format, Ordering};
use crate::complex::{f_vector_direct, spanning_complex, FVector};
use crate::cycles::{oracle_cycle_catalog, paper_cycle_catalog, CycleCatalog, CycleWord};
use crate::error::Error;
use crate::face_ring::{
    cohen_macaulay_verdict, CmReport, OrderingSource, OrderingStrategy, Verdict,
};
use crate::formula::{f_vector_exact_ie, f_vector_pairwise, f_vector_paper};
use crate::graph::{emit_graph, matrix_tree_count, Graph};
use crate::hilbert::{hilbert_function, hilbert_series};
use crate::spanning::{enumerate_spanning_trees_jahangir, TreeClass};

/// Largest number of spanning trees a listing command will print.
pub(super) const LISTING_LIMIT: u64 = 200_000;

pub(super) struct Context {
    pub graph: Graph,
    pub jahangir: Option<usize>,
    pub name: String,
    pub format: Format,
    pub seed: u64,
    pub timings: bool,
}

impl Context {
    fn require_jahangir(&self, what: &str) -> CmdResult<usize> {
        self.jahangir
            .ok_or_else(|| Failure::Usage(format!("{what} is only defined for Jahangir graphs")))
    }
}

fn done(body: String) -> CmdResult<Document> {
    Ok(Document {
        body,
        mismatch: false,
    })
}

pub(super) fn execute(ctx: &Context, command: Command) -> CmdResult<Document> {
    match command {
        Command::Facets => facets(ctx),
        Command::Classes => classes(ctx),
        Command::Cycles { catalog } => cycles(ctx, catalog),
        Command::FVector { mode } => f_vector(ctx, mode),
        Command::Hilbert { mode, terms } => hilbert(ctx, mode, terms),
        Command::Cm { ordering } => cm(ctx, ordering),
        Command::Verify => verify::verify(ctx),
        Command::EmitGraph => done(emit_graph(&ctx.graph)),
    }
}

fn check_listing(g: &Graph) -> CmdResult<()> {
    let trees = matrix_tree_count(g);
    if trees > BigUint::from(LISTING_LIMIT) {
        return Err(Error::Capacity(format!(
            "graph has {trees} spanning trees; listings stop at {LISTING_LIMIT}"
        ))
        .into());
    }
    Ok(())
}

fn facets(ctx: &Context) -> CmdResult<Document> {
    let g = &ctx.graph;
    check_listing(g)?;
    let complex = spanning_complex(g)?;
    let facets = complex.facets();
    done(match ctx.format {
        Format::Json => render::json(&json!({
            "count": facets.len(),
            "facets": facets.iter().map(|&f| names(g, f)).collect::<Vec<_>>(),
        })),
        Format::Csv => csv(
            &["index", "edges"],
            facets
                .iter()
                .enumerate()
                .map(|(k, &f)| vec![k.to_string(), joined(g, f)]),
        ),
        Format::Text => lines(facets.iter().map(|&f| set_text(g, f))),
    })
}

fn classes(ctx: &Context) -> CmdResult<Document> {
    let m = ctx.require_jahangir("classes")?;
    let g = &ctx.graph;
    check_listing(g)?;
    let records = enumerate_spanning_trees_jahangir(m)?;
    let count = |c: TreeClass| records.iter().filter(|r| r.class == c).count();
    done(match ctx.format {
        Format::Json => {
            let counts: serde_json::Map<String, Value> = TreeClass::ALL
                .iter()
                .map(|&c| (c.name().to_string(), json!(count(c))))
                .collect();
            let trees: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "class": r.class.name(),
                        "kept": names(g, r.kept),
                        "removed": names(g, r.removed),
                    })
                })
                .collect();
            render::json(&json!({ "counts": counts, "trees": trees }))
        }
        Format::Csv => csv(
            &["class", "removed", "kept"],
            records.iter().map(|r| {
                vec![
                    r.class.name().to_string(),
                    joined(g, r.removed),
                    joined(g, r.kept),
                ]
            }),
        ),
        Format::Text => {
            let mut out: Vec<String> = TreeClass::ALL
                .iter()
                .map(|&c| format!("{c}: {}", count(c)))
                .collect();
            out.extend(
                records
                    .iter()
                    .map(|r| format!("{} removed {}", r.class, set_text(g, r.removed))),
            );
            lines(out)
        }
    })
}

fn cycles(ctx: &Context, catalog: Option<Catalog>) -> CmdResult<Document> {
    let g = &ctx.graph;
    let which = catalog.unwrap_or(if ctx.jahangir.is_some() {
        Catalog::Paper
    } else {
        Catalog::Oracle
    });
    let cat: CycleCatalog = match which {
        Catalog::Paper => {
            paper_cycle_catalog(ctx.require_jahangir("the consecutive-word catalog")?)?
        }
        Catalog::Oracle => oracle_cycle_catalog(g),
    };
    let claimed = |w: CycleWord| match w {
        CycleWord::Consecutive(w) if which == Catalog::Paper => Some(w.claimed_beta()),
        _ => None,
    };
    done(match ctx.format {
        Format::Json => {
            let entries: Vec<Value> = cat
                .entries
                .iter()
                .map(|e| {
                    let mut v = json!({
                        "word": e.word.to_string(),
                        "edges": names(g, e.edges),
                        "order": e.beta,
                        "simple_cycle": e.is_simple_cycle,
                    });
                    if let Some(c) = claimed(e.word) {
                        v["claimed_order"] = json!(c);
                    }
                    v
                })
                .collect();
            let name = match which {
                Catalog::Paper => "paper",
                Catalog::Oracle => "oracle",
            };
            render::json(&json!({ "catalog": name, "entries": entries }))
        }
        Format::Csv => csv(
            &["word", "order", "claimed_order", "simple_cycle", "edges"],
            cat.entries.iter().map(|e| {
                vec![
                    e.word.to_string(),
                    e.beta.to_string(),
                    claimed(e.word).map(|c| c.to_string()).unwrap_or_default(),
                    e.is_simple_cycle.to_string(),
                    joined(g, e.edges),
                ]
            }),
        ),
        Format::Text => lines(cat.entries.iter().map(|e| {
            let note = if e.is_simple_cycle {
                ""
            } else {
                "  (not a simple cycle)"
            };
            format!(
                "{}  order {}  {}{note}",
                e.word,
                e.beta,
                set_text(g, e.edges)
            )
        })),
    })
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn signed(f: &FVector) -> Vec<BigInt> {
    f.entries().iter().cloned().map(BigInt::from).collect()
}

/// A formula value against the direct count, per index.
fn comparison(formula: &[BigInt], oracle: &[BigInt]) -> Vec<(usize, String, String, bool)> {
    formula
        .iter()
        .zip(oracle)
        .enumerate()
        .map(|(i, (a, b))| (i, a.to_string(), b.to_string(), a == b))
        .collect()
}

fn f_vector(ctx: &Context, mode: FMode) -> CmdResult<Document> {
    let g = &ctx.graph;
    let plain = |f: FVector| {
        done(match ctx.format {
            Format::Json => render::json(&json!({ "f_vector": f.to_strings() })),
            Format::Csv => csv(
                &["index", "f"],
                f.to_strings()
                    .into_iter()
                    .enumerate()
                    .map(|(i, x)| vec![i.to_string(), x]),
            ),
            Format::Text => format!("{f}\n"),
        })
    };
    match mode {
        FMode::Direct => plain(f_vector_direct(g)?),
        FMode::ExactIe => plain(f_vector_exact_ie(g)?),
        FMode::Paper | FMode::PaperPairwise => {
            let m = ctx.require_jahangir("the catalog formula")?;
            let (formula, extra) = if mode == FMode::Paper {
                let p = f_vector_paper(m)?;
                let audit: Vec<Value> = p
                    .audit
                    .iter()
                    .map(|t| {
                        json!({
                            "index": t.index,
                            "words": t.words.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                            "cover": t.cover,
                            "value": t.value.to_string(),
                        })
                    })
                    .collect();
                (signed(&p.f), ("audit", Value::Array(audit)))
            } else {
                let p = f_vector_pairwise(m)?;
                let hist: Vec<Value> = p.histogram.iter().map(|(u, c)| json!([u, c])).collect();
                (p.f, ("cover_histogram", Value::Array(hist)))
            };
            let oracle = signed(&f_vector_direct(g)?);
            let cmp = comparison(&formula, &oracle);
            let mismatches: Vec<_> = cmp.iter().filter(|c| !c.3).collect();
            let mode_name = if mode == FMode::Paper {
                "paper"
            } else {
                "paper-pairwise"
            };
            done(match ctx.format {
                Format::Json => {
                    let mut doc = json!({
                        "mode": mode_name,
                        "f_vector": strings(&formula),
                        "oracle": strings(&oracle),
                        "mismatches": mismatches
                            .iter()
                            .map(|(i, a, b, _)| json!({ "index": i, "formula": a, "oracle": b }))
                            .collect::<Vec<_>>(),
                    });
                    doc[extra.0] = extra.1;
                    render::json(&doc)
                }
                Format::Csv => csv(
                    &["index", "formula", "oracle", "verdict"],
                    cmp.iter().map(|(i, a, b, ok)| {
                        vec![
                            i.to_string(),
                            a.clone(),
                            b.clone(),
                            if *ok { "match" } else { "mismatch" }.to_string(),
                        ]
                    }),
                ),
                Format::Text => {
                    let mut out = vec![
                        format!("formula ({})", strings(&formula).join(", ")),
                        format!("oracle  ({})", strings(&oracle).join(", ")),
                    ];
                    out.extend(
                        mismatches
                            .iter()
                            .map(|(i, a, b, _)| format!("mismatch f_{i}: formula {a}, oracle {b}")),
                    );
                    lines(out)
                }
            })
        }
    }
}

fn hilbert(ctx: &Context, mode: FMode, terms: usize) -> CmdResult<Document> {
    let g = &ctx.graph;
    let f = match mode {
        FMode::Direct => f_vector_direct(g)?,
        FMode::ExactIe => f_vector_exact_ie(g)?,
        FMode::Paper => f_vector_paper(ctx.require_jahangir("the catalog formula")?)?.f,
        FMode::PaperPairwise => {
            return Err(Failure::Usage(
                "the pairwise formula can give negative counts and has no Hilbert series".into(),
            ))
        }
    };
    let h = hilbert_series(&f)?;
    let values = (0..terms as i64)
        .map(|j| hilbert_function(&h, j))
        .collect::<Result<Vec<_>, _>>()?;
    done(match ctx.format {
        Format::Json => {
            let mut doc = json!({
                "numerator": h.numerator_strings(),
                "denominator_power": h.denominator_power,
            });
            if terms > 0 {
                doc["hilbert_function"] = json!(strings(&values));
            }
            render::json(&doc)
        }
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = h
                .numerator_strings()
                .into_iter()
                .enumerate()
                .map(|(k, c)| vec!["numerator".into(), k.to_string(), c])
                .collect();
            rows.push(vec![
                "denominator_power".into(),
                String::new(),
                h.denominator_power.to_string(),
            ]);
            rows.extend(
                values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| vec!["hilbert_function".into(), j.to_string(), v.to_string()]),
            );
            csv(&["kind", "index", "value"], rows)
        }
        Format::Text => {
            let mut out = vec![h.to_string()];
            out.extend(
                values
                    .iter()
                    .enumerate()
                    .map(|(j, v)| format!("H({j}) = {v}")),
            );
            lines(out)
        }
    })
}

fn verdict_json(v: Verdict) -> (Value, &'static str) {
    match v {
        Verdict::True => (json!(true), "true"),
        Verdict::False => (json!(false), "false"),
        Verdict::Unknown => (Value::Null, "unknown"),
    }
}

fn cm(ctx: &Context, ordering: Option<Ordering>) -> CmdResult<Document> {
    let g = &ctx.graph;
    let strategy = match ordering.unwrap_or(if ctx.jahangir.is_some() {
        Ordering::Paper
    } else {
        Ordering::Search
    }) {
        Ordering::Paper => {
            ctx.require_jahangir("the block ordering")?;
            OrderingStrategy::Paper
        }
        Ordering::Search => OrderingStrategy::Search,
    };
    let report: CmReport = cohen_macaulay_verdict(g, strategy, ctx.seed)?;
    let (value, word) = verdict_json(report.verdict);
    let source = |s: OrderingSource| match s {
        OrderingSource::Paper => "paper",
        OrderingSource::Search => "search",
    };
    done(match ctx.format {
        Format::Json => {
            let cert = report.certificate.as_ref().map(|c| {
                json!({
                    "source": source(c.source),
                    "is_shelling": c.is_shelling,
                    "facets": c.facets.iter().map(|&f| names(g, f)).collect::<Vec<_>>(),
                })
            });
            render::json(&json!({
                "cohen_macaulay": value,
                "verdict": word,
                "paper_ordering_passed": report.paper_ordering_passed,
                "certificate": cert,
                "note": report.note,
            }))
        }
        Format::Csv | Format::Text => {
            let mut rows = vec![("cohen_macaulay".to_string(), word.to_string())];
            if let Some(p) = report.paper_ordering_passed {
                rows.push(("paper_ordering_passed".into(), p.to_string()));
            }
            if let Some(c) = &report.certificate {
                rows.push(("certificate_source".into(), source(c.source).into()));
                rows.push(("certificate_facets".into(), c.facets.len().to_string()));
                rows.push(("is_shelling".into(), c.is_shelling.to_string()));
            }
            if let Some(n) = &report.note {
                rows.push(("note".into(), n.clone()));
            }
            if ctx.format == Format::Csv {
                csv(&["key", "value"], rows.into_iter().map(|(k, v)| vec![k, v]))
            } else {
                lines(rows.into_iter().map(|(k, v)| format!("{k}: {v}")))
            }
        }
    })
}
