//! File loading for the two graph formats and the twig pool.

use std::fs;
use std::path::Path;

use plumbing_core::dual_graph::{parse_graph, WeightedDualGraph};
use plumbing_core::twig::Twig;

pub fn load_graph(path: &str) -> Result<WeightedDualGraph, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    if Path::new(path).extension().and_then(|e| e.to_str()) == Some("json") {
        load_graph_json(&text).map_err(|e| format!("{}: {}", path, e))
    } else {
        parse_graph(&text).map_err(|e| format!("{}: {}", path, e))
    }
}

fn load_graph_json(text: &str) -> Result<WeightedDualGraph, String> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("bad JSON: {}", e))?;
    let obj = value.as_object().ok_or("top level must be an object")?;
    let mut g = WeightedDualGraph::new();
    let vertices = obj
        .get("vertices")
        .and_then(|v| v.as_array())
        .ok_or("missing `vertices` array")?;
    for (i, v) in vertices.iter().enumerate() {
        let v = v
            .as_object()
            .ok_or_else(|| format!("vertices[{}] must be an object", i))?;
        let id = v
            .get("id")
            .and_then(|x| x.as_str())
            .ok_or_else(|| format!("vertices[{}] needs a string `id`", i))?;
        let weight = v
            .get("weight")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| format!("vertices[{}] needs an integer `weight`", i))?;
        let orbit = v.get("orbit").and_then(|x| x.as_str());
        g.add_vertex(id, weight, orbit)
            .map_err(|e| format!("{}", e))?;
    }
    let edges = obj
        .get("edges")
        .and_then(|v| v.as_array())
        .ok_or("missing `edges` array")?;
    for (i, e) in edges.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| format!("edges[{}] must be a two-element array", i))?;
        let a = pair[0]
            .as_str()
            .ok_or_else(|| format!("edges[{}] endpoints must be strings", i))?;
        let b = pair[1]
            .as_str()
            .ok_or_else(|| format!("edges[{}] endpoints must be strings", i))?;
        g.add_edge(a, b).map_err(|e| format!("{}", e))?;
    }
    g.validate_orbits().map_err(|e| format!("{}", e))?;
    Ok(g)
}

pub fn graph_to_json(g: &WeightedDualGraph) -> serde_json::Value {
    let vertices: Vec<serde_json::Value> = g
        .vertex_ids()
        .map(|v| {
            serde_json::json!({
                "id": v,
                "weight": g.weight(v).unwrap(),
                "orbit": g.orbit_of(v).unwrap(),
            })
        })
        .collect();
    let edges: Vec<serde_json::Value> = g.edges().map(|(a, b)| serde_json::json!([a, b])).collect();
    serde_json::json!({ "vertices": vertices, "edges": edges })
}

pub fn load_twig_pool(path: &str) -> Result<Vec<Twig>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {}", path, e))?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let t = Twig::parse(line).map_err(|e| format!("{} line {}: {}", path, i + 1, e))?;
        if t.is_empty() || !t.is_admissible() {
            return Err(format!(
                "{} line {}: pool twigs must be admissible and nonempty",
                path,
                i + 1
            ));
        }
        out.push(t);
    }
    if out.is_empty() {
        return Err(format!("{}: empty twig pool", path));
    }
    Ok(out)
}
