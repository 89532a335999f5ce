use super::Graph;
use crate::edge_set::EdgeSet;

/// Every simple cycle of `g` as an edge set, each exactly once, sorted by
/// length and then lexicographically.
///
/// Each cycle is rooted at its smallest vertex and walked only through
/// larger vertices; the two traversal directions are told apart by
/// requiring the second vertex to be smaller than the last.
pub fn enumerate_simple_cycles(g: &Graph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for root in 0..n {
        on_path[root] = true;
        for &(next, e) in g.neighbours(root) {
            if next > root {
                on_path[next] = true;
                walk(
                    g,
                    root,
                    next,
                    next,
                    EdgeSet::singleton(e),
                    &mut on_path,
                    &mut out,
                );
                on_path[next] = false;
            }
        }
        on_path[root] = false;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

fn walk(
    g: &Graph,
    root: usize,
    second: usize,
    at: usize,
    path: EdgeSet,
    on_path: &mut [bool],
    out: &mut Vec<EdgeSet>,
) {
    for &(next, e) in g.neighbours(at) {
        if next == root {
            if path.len() >= 2 && at > second {
                let mut cycle = path;
                cycle.insert(e);
                out.push(cycle);
            }
        } else if next > root && !on_path[next] {
            on_path[next] = true;
            let mut extended = path;
            extended.insert(e);
            walk(g, root, second, next, extended, on_path, out);
            on_path[next] = false;
        }
    }
}
