pub mod graph6;

use serde_json::{json, Value};
use sintur_core::graph::Graph;
use sintur_core::solve::ExactResult;
use sintur_core::verify::VerificationReport;
use sintur_core::worm::Coloring;

pub const SCHEMA_VERSION: u64 = 1;

/// DOT output for visualization.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    let mut isolated: Vec<usize> = Vec::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            isolated.push(v);
        }
    }
    for v in isolated {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// JSON form: vertex count plus 0-based edges sorted lexicographically.
pub fn graph_to_json(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "edges": g.edges(),
    })
}

/// Colorings serialize as an array of color ids indexed by vertex.
pub fn coloring_to_json(c: &Coloring) -> Value {
    json!(c.colors())
}

pub fn coloring_from_json(v: &Value) -> Option<Coloring> {
    let arr = v.as_array()?;
    let mut colors = Vec::with_capacity(arr.len());
    for x in arr {
        colors.push(x.as_u64()? as usize);
    }
    Some(Coloring::new(colors))
}

pub fn exact_result_to_json(r: &ExactResult, elapsed_ms: u128, workers: usize) -> Value {
    let witnesses: Vec<String> = r
        .extremal
        .iter()
        .map(|g| graph6::to_graph6(g).expect("oracle graphs are tiny"))
        .collect();
    json!({
        "schema": SCHEMA_VERSION,
        "problem": r.problem.tag(),
        "n": r.n,
        "pattern": r.pattern,
        "value": r.value,
        "witnesses": witnesses,
        "stats": {
            "examined": r.stats.examined,
            "children": r.stats.children,
            "pruned": r.stats.pruned,
            "elapsed_ms": elapsed_ms,
            "workers": workers,
        },
    })
}

pub fn report_to_json(report: &VerificationReport) -> Value {
    json!({
        "schema": SCHEMA_VERSION,
        "predicted_edges": report.predicted_edges,
        "actual_edges": report.actual_edges,
        "edges_match": report.edges_match,
        "predicate": report.predicate,
        "predicate_holds": report.predicate_holds,
        "failure": report.failure,
        "degrees": report.degree_counts,
        "pass": report.pass,
    })
}
