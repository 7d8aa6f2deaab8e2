//! Graph arguments: built-in names, edge-list files and graph6 strings.

use std::path::Path;

use potts_core::graphs::{from_edge_list, from_graph6};
use potts_core::Graph;

fn sized(spec: &str, prefix: &str) -> Result<Option<usize>, String> {
    match spec.strip_prefix(prefix) {
        Some(rest) => rest
            .parse::<usize>()
            .map(Some)
            .map_err(|_| format!("malformed graph size '{rest}' in '{spec}'")),
        None => Ok(None),
    }
}

/// Resolves a graph argument. Names are tried first, then an existing file
/// (edge list, or graph6 if the first line is not a vertex count), then a
/// graph6 string.
pub fn parse_graph(spec: &str) -> Result<Graph, String> {
    let lower = spec.to_ascii_lowercase();
    let named = match lower.as_str() {
        "k33" => Some(Graph::complete_bipartite(3)),
        "k4" => Some(Graph::complete(4)),
        "petersen" => Some(Ok(Graph::petersen())),
        _ => None,
    };
    if let Some(g) = named {
        return g.map_err(|e| e.to_string());
    }
    if let Some(n) = sized(&lower, "cycle:")? {
        return Graph::cycle(n).map_err(|e| format!("'{spec}': {e}"));
    }
    if let Some(n) = sized(&lower, "prism:")? {
        return Graph::prism(n).map_err(|e| format!("'{spec}': {e}"));
    }
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| format!("cannot read '{spec}': {e}"))?;
        let first = text.lines().find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let is_edge_list = first.is_some_and(|l| l.trim().chars().all(|c| c.is_ascii_digit()));
        return if is_edge_list {
            from_edge_list(&text).map_err(|e| format!("'{spec}': {e}"))
        } else {
            from_graph6(first.unwrap_or("").trim()).map_err(|e| format!("'{spec}': {e}"))
        };
    }
    from_graph6(spec).map_err(|e| format!("'{spec}' is not a graph name, file or graph6 string: {e}"))
}
