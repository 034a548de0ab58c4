//! Finite simple graphs with named vertices and edges.
//!
//! Vertex and edge order is part of the data: edge `k` of a graph is variable `k`
//! of its edge ring, and the family constructors fix the canonical labelling
//! `a_1..a_d, b_1..b_d, e_1..e_{2r-2}`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Self {
        VertexId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An edge with its name and the indices of its two endpoints, in declared order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    name: String,
    ends: [usize; 2],
}

impl Edge {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ends(&self) -> [usize; 2] {
        self.ends
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other_end(&self, v: usize) -> Option<usize> {
        match self.ends {
            [a, b] if a == v => Some(b),
            [a, b] if b == v => Some(a),
            _ => None,
        }
    }
}

/// Which closed-form family a graph was built as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Family {
    /// `K_{2,d}` plus a path of length `2r - 2` between `x1` and `x2`.
    Grd { r: usize, d: usize },
    /// The complete bipartite graph `K_{2,d}`.
    K2d { d: usize },
}

impl Family {
    pub fn d(&self) -> usize {
        match *self {
            Family::Grd { d, .. } | Family::K2d { d } => d,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Grd { r, d } => write!(f, "G_{{{r},{d}}}"),
            Family::K2d { d } => write!(f, "K_{{2,{d}}}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimpleGraph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    family: Option<Family>,
    vertex_index: HashMap<VertexId, usize>,
    edge_index: HashMap<String, usize>,
}

impl PartialEq for SimpleGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges && self.family == other.family
    }
}

impl Eq for SimpleGraph {}

impl SimpleGraph {
    /// Builds a graph from vertex names and `(edge name, end, end)` triples.
    ///
    /// Rejects duplicate names, unknown endpoints, loops and parallel edges.
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<VertexId> = vertices.into_iter().map(|v| VertexId(v.into())).collect();
        let mut vertex_index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(Error::Parse {
                    context: format!("vertices[{i}]"),
                    message: format!("duplicate vertex '{v}'"),
                });
            }
        }

        let mut out_edges = Vec::new();
        let mut edge_index = HashMap::new();
        let mut seen_pairs = HashSet::new();
        for (k, (name, u, v)) in edges.into_iter().enumerate() {
            let lookup = |s: &str| {
                vertex_index.get(&VertexId::new(s)).copied().ok_or_else(|| Error::Parse {
                    context: format!("edges[{k}].ends"),
                    message: format!("unknown vertex '{s}'"),
                })
            };
            let (a, b) = (lookup(&u)?, lookup(&v)?);
            if a == b {
                return Err(Error::NotSimple(format!("edge '{name}' is a loop at '{u}'")));
            }
            if !seen_pairs.insert((a.min(b), a.max(b))) {
                return Err(Error::NotSimple(format!(
                    "edge '{name}' duplicates an existing edge between '{u}' and '{v}'"
                )));
            }
            if edge_index.insert(name.clone(), k).is_some() {
                return Err(Error::Parse {
                    context: format!("edges[{k}].name"),
                    message: format!("duplicate edge name '{name}'"),
                });
            }
            out_edges.push(Edge { name, ends: [a, b] });
        }

        Ok(SimpleGraph { vertices, edges: out_edges, family: None, vertex_index, edge_index })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertex_index.get(&VertexId::new(name)).copied()
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edge_index.get(name).copied()
    }

    pub fn edge_names(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.name.clone()).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.ends.contains(&v)).count()
    }

    /// For each vertex, the incident `(edge, neighbour)` pairs in edge order.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (k, e) in self.edges.iter().enumerate() {
            let [a, b] = e.ends;
            adj[a].push((k, b));
            adj[b].push((k, a));
        }
        adj
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v].unwrap();
            for &(_, w) in &adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(dv + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertices.is_empty() || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_bipartite(&self) -> bool {
        let adj = self.adjacency();
        let mut colour: Vec<Option<bool>> = vec![None; self.vertices.len()];
        for start in 0..self.vertices.len() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].unwrap();
                for &(_, w) in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphFile::from(self)).expect("graph serialization is infallible")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from(self)).expect("graph serialization is infallible")
    }
}

/// `K_{2,d}` plus the path `x1 - z1 - ... - z_{2r-3} - x2`.
///
/// Vertices are `x1, x2, y1..yd, z1..z_{2r-3}`; edges are listed as
/// `a1..ad, b1..bd, e1..e_{2r-2}` with `a_i = {x1, y_i}`, `b_i = {x2, y_i}`.
pub fn build_grd(r: usize, d: usize) -> Result<SimpleGraph> {
    if r < 3 {
        return Err(domain(format!("G_{{r,d}} requires r >= 3, got r = {r}")));
    }
    if d < 2 {
        return Err(domain(format!("G_{{r,d}} requires d >= 2, got d = {d}")));
    }
    let path_len = 2 * r - 2;
    let mut vertices: Vec<String> = vec!["x1".into(), "x2".into()];
    vertices.extend((1..=d).map(|i| format!("y{i}")));
    vertices.extend((1..path_len).map(|i| format!("z{i}")));

    let mut edges = bipartite_edges(d);
    for i in 1..=path_len {
        let from = if i == 1 { "x1".to_string() } else { format!("z{}", i - 1) };
        let to = if i == path_len { "x2".to_string() } else { format!("z{i}") };
        edges.push((format!("e{i}"), from, to));
    }
    let mut g = SimpleGraph::new(vertices, edges)?;
    g.family = Some(Family::Grd { r, d });
    Ok(g)
}

pub fn build_k2d(d: usize) -> Result<SimpleGraph> {
    if d < 2 {
        return Err(domain(format!("K_{{2,d}} requires d >= 2, got d = {d}")));
    }
    let mut vertices: Vec<String> = vec!["x1".into(), "x2".into()];
    vertices.extend((1..=d).map(|i| format!("y{i}")));
    let mut g = SimpleGraph::new(vertices, bipartite_edges(d))?;
    g.family = Some(Family::K2d { d });
    Ok(g)
}

fn bipartite_edges(d: usize) -> Vec<(String, String, String)> {
    let a = (1..=d).map(|i| (format!("a{i}"), "x1".to_string(), format!("y{i}")));
    let b = (1..=d).map(|i| (format!("b{i}"), "x2".to_string(), format!("y{i}")));
    a.chain(b).collect()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<Family>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    name: String,
    ends: [String; 2],
}

impl From<&SimpleGraph> for GraphFile {
    fn from(g: &SimpleGraph) -> Self {
        GraphFile {
            vertices: g.vertices.iter().map(|v| v.0.clone()).collect(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    name: e.name.clone(),
                    ends: [g.vertices[e.ends[0]].0.clone(), g.vertices[e.ends[1]].0.clone()],
                })
                .collect(),
            family: g.family,
        }
    }
}

/// Parses the JSON graph format, keeping declared vertex and edge order.
///
/// An optional `"family"` record is accepted only if the graph is exactly the
/// corresponding family member.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let file: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        context: format!("line {} column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let edges = file.edges.into_iter().map(|EdgeRecord { name, ends: [u, v] }| (name, u, v));
    let graph = SimpleGraph::new(file.vertices, edges)?;
    match file.family {
        None => Ok(graph),
        Some(family) => {
            let expected = match family {
                Family::Grd { r, d } => build_grd(r, d)?,
                Family::K2d { d } => build_k2d(d)?,
            };
            if expected.vertices != graph.vertices || expected.edges != graph.edges {
                return Err(Error::Parse {
                    context: "family".into(),
                    message: format!("graph does not match the declared family {family}"),
                });
            }
            Ok(expected)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grd_3_5_matches_figure_labels() {
        let g = build_grd(3, 5).unwrap();
        assert_eq!(g.num_vertices(), 10);
        assert_eq!(g.num_edges(), 14);
        let names = g.edge_names();
        assert_eq!(
            names,
            ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5", "e1", "e2", "e3", "e4"]
        );
        let ends = |n: &str| {
            let e = &g.edges()[g.edge_index(n).unwrap()];
            let [a, b] = e.ends();
            (g.vertices()[a].to_string(), g.vertices()[b].to_string())
        };
        assert_eq!(ends("a3"), ("x1".into(), "y3".into()));
        assert_eq!(ends("b5"), ("x2".into(), "y5".into()));
        assert_eq!(ends("e1"), ("x1".into(), "z1".into()));
        assert_eq!(ends("e2"), ("z1".into(), "z2".into()));
        assert_eq!(ends("e4"), ("z3".into(), "x2".into()));
    }

    #[test]
    fn grd_3_2_counts() {
        let g = build_grd(3, 2).unwrap();
        let names: Vec<_> = g.vertices().iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["x1", "x2", "y1", "y2", "z1", "z2", "z3"]);
        assert_eq!(g.num_edges(), 8);
    }

    #[test]
    fn grd_rejects_small_parameters() {
        let err = build_grd(2, 4).unwrap_err();
        assert!(matches!(&err, Error::Domain(m) if m.contains("r >= 3")), "{err}");
        let err = build_grd(3, 1).unwrap_err();
        assert!(matches!(&err, Error::Domain(m) if m.contains("d >= 2")), "{err}");
    }

    #[test]
    fn k2d_shapes() {
        let g = build_k2d(5).unwrap();
        assert_eq!((g.num_vertices(), g.num_edges()), (7, 10));
        let g = build_k2d(2).unwrap();
        assert_eq!(g.num_edges(), 4);
        assert!(g.is_bipartite() && g.is_connected());
        assert!(g.vertices().iter().enumerate().all(|(v, _)| g.degree(v) == 2));
        assert!(build_k2d(1).is_err());
    }

    #[test]
    fn grd_degrees_connectivity_bipartite() {
        for r in 3..=6 {
            for d in 2..=6 {
                let g = build_grd(r, d).unwrap();
                assert_eq!(g.num_vertices(), d + 2 * r - 1);
                assert_eq!(g.num_edges(), 2 * d + 2 * r - 2);
                for (v, id) in g.vertices().iter().enumerate() {
                    let expected = if id.as_str().starts_with('x') { d + 1 } else { 2 };
                    assert_eq!(g.degree(v), expected, "vertex {id} of G_{r},{d}");
                }
                assert!(g.is_connected());
                assert!(g.is_bipartite());
            }
        }
    }

    #[test]
    fn parse_minimal_graph() {
        let g = parse_graph(r#"{"vertices":["u","v"],"edges":[{"name":"f","ends":["u","v"]}]}"#).unwrap();
        assert_eq!(g.num_vertices(), 2);
        assert_eq!(g.edges()[0].name(), "f");
        assert_eq!(g.family(), None);
    }

    #[test]
    fn parse_rejects_loops_and_parallel_edges() {
        let err = parse_graph(r#"{"vertices":["u"],"edges":[{"name":"f","ends":["u","u"]}]}"#).unwrap_err();
        assert!(matches!(err, Error::NotSimple(ref m) if m.contains("loop")), "{err}");
        let err = parse_graph(
            r#"{"vertices":["u","v"],"edges":[{"name":"f","ends":["u","v"]},{"name":"g","ends":["v","u"]}]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotSimple(_)), "{err}");
    }

    #[test]
    fn parse_errors_carry_context() {
        let err = parse_graph(r#"{"vertices":["u"],"edges":[{"name":"f","ends":["u","w"]}]}"#).unwrap_err();
        assert!(matches!(&err, Error::Parse { context, .. } if context == "edges[0].ends"), "{err}");
        let err = parse_graph("{\"vertices\": [\"u\"],\n \"edges\": 3}").unwrap_err();
        assert!(matches!(&err, Error::Parse { context, .. } if context.starts_with("line 2")), "{err}");
    }

    #[test]
    fn family_tag_must_match() {
        let mut text = build_k2d(3).unwrap().to_json();
        text = text.replace("\"d\":3", "\"d\":4");
        assert!(parse_graph(&text).is_err());
    }

    #[test]
    fn round_trip_family_graphs() {
        for g in [build_grd(3, 5).unwrap(), build_k2d(4).unwrap()] {
            assert_eq!(parse_graph(&g.to_json()).unwrap(), g);
            assert_eq!(parse_graph(&g.to_json_pretty()).unwrap(), g);
        }
    }
}
