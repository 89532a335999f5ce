use serde_json::Value;

use crate::edge_set::EdgeSet;
use crate::graph::Graph;

pub(super) fn json(value: &Value) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("values are serializable");
    out.push('\n');
    out
}

pub(super) fn csv<R, S>(header: &[&str], rows: R) -> String
where
    R: IntoIterator<Item = Vec<S>>,
    S: AsRef<str>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.iter().map(AsRef::as_ref))
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub(super) fn names(g: &Graph, set: EdgeSet) -> Vec<String> {
    g.edge_names(set)
}

pub(super) fn set_text(g: &Graph, set: EdgeSet) -> String {
    format!("{{{}}}", names(g, set).join(", "))
}

pub(super) fn joined(g: &Graph, set: EdgeSet) -> String {
    names(g, set).join(" ")
}

pub(super) fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|l| l + "\n").collect()
}
