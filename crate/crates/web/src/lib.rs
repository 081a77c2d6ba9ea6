//! Browser bindings. Each export takes edge-list text and returns a JSON
//! string; the plain functions below do the work and are tested natively.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use multiparking::activity::{bfs_external, bfs_forest, classify_edges};
use multiparking::bijection::phi;
use multiparking::graph::parse_graph;
use multiparking::tutte::{tutte, Method};
use multiparking::{ChoiceOrder, Graph, VertexFunction};

#[derive(Serialize)]
struct GraphView {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphView {
    fn from(g: &Graph) -> Self {
        GraphView { n: g.vertex_count(), edges: pairs(g.edges()) }
    }
}

#[derive(Serialize)]
struct ForestView {
    graph: GraphView,
    forest: Vec<[usize; 2]>,
    roots: Vec<usize>,
    order: Vec<usize>,
    table: String,
    r1: Vec<[usize; 2]>,
    r2: Vec<[usize; 2]>,
    r3: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct TutteView {
    text: String,
    terms: Vec<(u32, u32, String)>,
    spanning_trees: String,
    forests: String,
}

#[derive(Serialize)]
struct QueueView {
    graph: GraphView,
    forest: Vec<[usize; 2]>,
    snapshots: Vec<Vec<usize>>,
    trace: String,
    active: Vec<[usize; 2]>,
    table: String,
}

fn pairs(edges: &[(usize, usize)]) -> Vec<[usize; 2]> {
    edges.iter().map(|&(u, v)| [u, v]).collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

fn graph(text: &str) -> Result<Graph, String> {
    parse_graph(text).map_err(|e| e.to_string())
}

/// The forest of a multiparking function, its process table and the
/// redundant-edge classes.
pub fn forest_view(graph_text: &str, function: &str, choice: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    let f: VertexFunction = function.parse().map_err(|e: multiparking::Error| e.to_string())?;
    let choice: ChoiceOrder = choice.parse().map_err(|e: multiparking::Error| e.to_string())?;
    let (forest, trace) = phi(&g, &choice, &f).map_err(|e| e.to_string())?;
    let classes = classify_edges(&g, &choice, &forest).map_err(|e| e.to_string())?;
    to_json(&ForestView {
        graph: GraphView::from(&g),
        forest: pairs(&forest.edges()),
        roots: forest.roots().to_vec(),
        order: trace.order().0,
        table: trace.table(),
        r1: pairs(&classes.r1),
        r2: pairs(&classes.r2),
        r3: pairs(&classes.r3),
    })
}

/// Tutte polynomial by the named route, with `t(1,1)` and `t(2,1)`.
pub fn tutte_view(graph_text: &str, method: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    let method: Method = method.parse().map_err(|e: multiparking::Error| e.to_string())?;
    if g.edge_count() > 24 {
        return Err(format!("{} edges is too many for the browser (limit 24)", g.edge_count()));
    }
    let p = tutte(&g, &method).map_err(|e| e.to_string())?;
    to_json(&TutteView {
        text: p.to_string(),
        terms: p.terms().map(|((i, j), c)| (i, j, c.to_string())).collect(),
        spanning_trees: p.evaluate_int(1, 1).to_string(),
        forests: p.evaluate_int(2, 1).to_string(),
    })
}

/// Breadth-first queue snapshots and the edges whose endpoints share the
/// queue.
pub fn queue_view(graph_text: &str) -> Result<String, String> {
    let g = graph(graph_text)?;
    let (forest, trace) = bfs_forest(&g);
    let active = bfs_external(&g, &forest).map_err(|e| e.to_string())?;
    to_json(&QueueView {
        graph: GraphView::from(&g),
        forest: pairs(&forest.edges()),
        trace: trace.to_string(),
        active: pairs(&trace.in_meeting_order(&active)),
        table: trace.table(),
        snapshots: trace.snapshots,
    })
}

#[wasm_bindgen]
pub fn forest_from_function(graph_text: &str, function: &str, choice: &str) -> Result<String, JsError> {
    forest_view(graph_text, function, choice).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn tutte_polynomial(graph_text: &str, method: &str) -> Result<String, JsError> {
    tutte_view(graph_text, method).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bfs_queue(graph_text: &str) -> Result<String, JsError> {
    queue_view(graph_text).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    const K3: &str = "3 3\n1 2\n1 3\n2 3\n";

    fn parse(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn forest_for_triangle() {
        let v = parse(forest_view(K3, "inf 0 1", "bfsq"));
        assert_eq!(v["forest"], serde_json::json!([[1, 2], [2, 3]]));
        assert_eq!(v["order"], serde_json::json!([1, 2, 3]));
        assert!(v["table"].as_str().unwrap().starts_with("t   | 0"));
    }

    #[test]
    fn tutte_for_triangle() {
        let v = parse(tutte_view(K3, "mpf"));
        assert_eq!(v["text"], "x^2 + x + y");
        assert_eq!(v["spanning_trees"], "3");
        assert_eq!(v["forests"], "7");
    }

    #[test]
    fn queue_for_triangle() {
        let v = parse(queue_view(K3));
        assert_eq!(v["trace"], "(1),(2,3),(3),∅");
        assert_eq!(v["active"], serde_json::json!([[2, 3]]));
    }

    #[test]
    fn errors_are_messages() {
        assert!(forest_view(K3, "inf 2 2", "bfsq").unwrap_err().contains("not a multiparking"));
        assert!(forest_view(K3, "inf 0 1", "nope").is_err());
        assert!(tutte_view("3 1\n1 9\n", "dc").unwrap_err().contains("outside"));
    }
}
