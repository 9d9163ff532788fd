//! Simple finite undirected graphs without isolated vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque vertex name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
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

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId::new(s)
    }
}

/// An unordered edge, stored with endpoints ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    /// `None` for a self-loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(Edge(u, v)),
            std::cmp::Ordering::Greater => Some(Edge(v, u)),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.0, &self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [&self.0, &self.1].serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphViolation {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("empty vertex identifier")]
    EmptyVertexId,
    #[error("vertex {0} declared more than once")]
    DuplicateVertex(VertexId),
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("edge {0}-{1} has undeclared endpoint {2}")]
    UnknownEndpoint(VertexId, VertexId, VertexId),
    #[error("isolated vertex {0}")]
    IsolatedVertex(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid graph: {}", join(.0))]
    Invalid(Vec<GraphViolation>),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

/// On-disk form: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<[VertexId; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: BTreeSet<Edge>,
    adjacency: BTreeMap<VertexId, BTreeSet<VertexId>>,
}

/// Validates vertices and edges, reporting every violated invariant.
pub fn build_graph(
    vertices: Vec<VertexId>,
    edges: Vec<(VertexId, VertexId)>,
) -> Result<Graph, GraphError> {
    let mut violations = Vec::new();
    let mut adjacency: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    if vertices.is_empty() {
        violations.push(GraphViolation::NoVertices);
    }
    for v in vertices {
        if v.as_str().is_empty() {
            violations.push(GraphViolation::EmptyVertexId);
        } else if adjacency.insert(v.clone(), BTreeSet::new()).is_some() {
            violations.push(GraphViolation::DuplicateVertex(v));
        }
    }

    let mut edge_set = BTreeSet::new();
    for (u, v) in edges {
        let mut endpoints_known = true;
        for w in [&u, &v] {
            if !adjacency.contains_key(w) {
                violations.push(GraphViolation::UnknownEndpoint(u.clone(), v.clone(), w.clone()));
                endpoints_known = false;
            }
        }
        let Some(edge) = Edge::new(u.clone(), v.clone()) else {
            violations.push(GraphViolation::SelfLoop(u));
            continue;
        };
        if !endpoints_known {
            continue;
        }
        if !edge_set.insert(edge) {
            violations.push(GraphViolation::DuplicateEdge(u, v));
            continue;
        }
        adjacency.get_mut(&u).expect("known").insert(v.clone());
        adjacency.get_mut(&v).expect("known").insert(u);
    }

    for (v, nbrs) in &adjacency {
        if nbrs.is_empty() {
            violations.push(GraphViolation::IsolatedVertex(v.clone()));
        }
    }

    if violations.is_empty() {
        Ok(Graph {
            edges: edge_set,
            adjacency,
        })
    } else {
        Err(GraphError::Invalid(violations))
    }
}

/// A proper 2-coloring of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub x: BTreeSet<VertexId>,
    pub y: BTreeSet<VertexId>,
}

impl Bipartition {
    /// Re-checks the partition invariants against `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let covers = self.x.len() + self.y.len() == g.vertex_count()
            && self.x.is_disjoint(&self.y)
            && g.vertices().all(|v| self.x.contains(v) || self.y.contains(v));
        covers
            && g.edges().all(|e| {
                let (u, v) = e.endpoints();
                self.x.contains(u) != self.x.contains(v)
            })
    }

    pub fn side_of(&self, v: &VertexId) -> Option<Side> {
        if self.x.contains(v) {
            Some(Side::X)
        } else if self.y.contains(v) {
            Some(Side::Y)
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// A closed walk of odd length; consecutive entries (and last to first) are adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OddCycle(pub Vec<VertexId>);

impl OddCycle {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = self.0.len();
        n % 2 == 1
            && n >= 3
            && (0..n).all(|i| g.has_edge(&self.0[i], &self.0[(i + 1) % n]))
    }
}

impl fmt::Display for OddCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.0.iter().map(VertexId::as_str).collect();
        write!(f, "[{}]", names.join(","))
    }
}

impl Graph {
    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.adjacency.keys()
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.adjacency.contains_key(v)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.contains(v))
    }

    pub fn neighbors(&self, v: &VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.adjacency
            .get(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.clone()))
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.adjacency.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start.clone()];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in &self.adjacency[u] {
                    if seen.insert(w) {
                        comp.push(w.clone());
                        queue.push_back(w);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS 2-coloring. Each component is anchored at its smallest vertex, which goes to `x`.
    pub fn two_coloring(&self) -> Result<Bipartition, OddCycle> {
        let mut color: BTreeMap<&VertexId, bool> = BTreeMap::new();
        let mut parent: BTreeMap<&VertexId, &VertexId> = BTreeMap::new();
        for root in self.adjacency.keys() {
            if color.contains_key(root) {
                continue;
            }
            color.insert(root, false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u];
                for w in &self.adjacency[u] {
                    match color.get(w) {
                        None => {
                            color.insert(w, !cu);
                            parent.insert(w, u);
                            queue.push_back(w);
                        }
                        Some(&cw) if cw == cu => return Err(odd_cycle(&parent, u, w)),
                        Some(_) => {}
                    }
                }
            }
        }
        let mut bp = Bipartition {
            x: BTreeSet::new(),
            y: BTreeSet::new(),
        };
        for (v, c) in color {
            if c {
                bp.y.insert(v.clone());
            } else {
                bp.x.insert(v.clone());
            }
        }
        Ok(bp)
    }

    pub fn bipartition(&self) -> Option<Bipartition> {
        self.two_coloring().ok()
    }

    pub fn find_odd_cycle(&self) -> Option<OddCycle> {
        self.two_coloring().err()
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            vertices: self.adjacency.keys().cloned().collect(),
            edges: self
                .edges
                .iter()
                .map(|e| [e.0.clone(), e.1.clone()])
                .collect(),
        }
    }

    pub fn from_document(doc: GraphDocument) -> Result<Graph, GraphError> {
        build_graph(
            doc.vertices,
            doc.edges.into_iter().map(|[u, v]| (u, v)).collect(),
        )
    }
}

/// Closes the tree paths from `u` and `w` (same BFS color, adjacent) at their common ancestor.
fn odd_cycle<'a>(
    parent: &BTreeMap<&'a VertexId, &'a VertexId>,
    u: &'a VertexId,
    w: &'a VertexId,
) -> OddCycle {
    let path_to_root = |mut v: &'a VertexId| {
        let mut path = vec![v];
        while let Some(&p) = parent.get(v) {
            path.push(p);
            v = p;
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Same color means equal depth in the BFS tree, so the paths meet at the same index.
    let mut i = pu.len() - 1;
    let mut j = pw.len() - 1;
    while i > 0 && j > 0 && pu[i - 1] == pw[j - 1] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<VertexId> = pu[..=i].iter().rev().map(|v| (*v).clone()).collect();
    cycle.extend(pw[..j].iter().map(|v| (*v).clone()));
    OddCycle(cycle)
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_document().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = GraphDocument::deserialize(deserializer)?;
        Graph::from_document(doc).map_err(serde::de::Error::custom)
    }
}

/// Standard graph families used by tests, the oracle and the demo.
pub mod families {
    use rand::Rng;

    use super::{build_graph, Graph, VertexId};

    /// Vertex names sort in numeric order: `a`..`z` for small graphs, `v001`.. otherwise.
    pub fn vertex_names(n: usize) -> Vec<VertexId> {
        if n <= 26 {
            (0..n).map(|i| VertexId::new(((b'a' + i as u8) as char).to_string())).collect()
        } else {
            (0..n).map(|i| VertexId::new(format!("v{:03}", i + 1))).collect()
        }
    }

    fn from_index_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
        let names = vertex_names(n);
        build_graph(
            names.clone(),
            edges
                .iter()
                .map(|&(u, v)| (names[u].clone(), names[v].clone()))
                .collect(),
        )
        .expect("family graphs are valid")
    }

    /// Path on `n >= 2` vertices.
    pub fn path(n: usize) -> Graph {
        assert!(n >= 2, "path needs at least two vertices");
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        from_index_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        from_index_edges(n, &edges)
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n >= 2, "complete graph needs at least two vertices");
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        from_index_edges(n, &edges)
    }

    /// `K_{1,leaves}` with the centre named first.
    pub fn star(leaves: usize) -> Graph {
        assert!(leaves >= 1);
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        from_index_edges(leaves + 1, &edges)
    }

    /// `G(n, p)` with every isolated vertex then joined to a random partner.
    #[allow(clippy::needless_range_loop)]
    pub fn random<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
        assert!(n >= 2);
        let mut adj = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
            }
        }
        for i in 0..n {
            if !adj[i].iter().any(|&b| b) {
                let mut j = rng.gen_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        let edges: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| adj[i][j])
            .collect();
        from_index_edges(n, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn ids(names: &[&str]) -> Vec<VertexId> {
        names.iter().map(|&n| VertexId::from(n)).collect()
    }

    fn e(u: &str, v: &str) -> (VertexId, VertexId) {
        (u.into(), v.into())
    }

    fn set(names: &[&str]) -> BTreeSet<VertexId> {
        ids(names).into_iter().collect()
    }

    #[test]
    fn smallest_graph() {
        let g = build_graph(ids(&["a", "b"]), vec![e("a", "b")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn isolated_vertex_rejected() {
        let err = build_graph(ids(&["a", "b", "c"]), vec![e("a", "b")]).unwrap_err();
        assert_eq!(err, GraphError::Invalid(vec![GraphViolation::IsolatedVertex("c".into())]));
    }

    #[test]
    fn triangle_builds() {
        let g = build_graph(ids(&["a", "b", "c"]), vec![e("a", "b"), e("b", "c"), e("c", "a")]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g, cycle(3));
    }

    #[test]
    fn every_violation_is_listed() {
        let err = build_graph(
            ids(&["a", "b", "a", "d"]),
            vec![e("a", "a"), e("a", "b"), e("b", "a"), e("a", "z")],
        )
        .unwrap_err();
        let GraphError::Invalid(v) = err else { panic!() };
        assert!(v.contains(&GraphViolation::DuplicateVertex("a".into())));
        assert!(v.contains(&GraphViolation::SelfLoop("a".into())));
        assert!(v.contains(&GraphViolation::DuplicateEdge("b".into(), "a".into())));
        assert!(v.contains(&GraphViolation::UnknownEndpoint("a".into(), "z".into(), "z".into())));
        assert!(v.contains(&GraphViolation::IsolatedVertex("d".into())));
        assert_eq!(v.len(), 5);
    }

    #[test]
    fn bipartition_examples() {
        let bp = cycle(4).bipartition().unwrap();
        assert_eq!((bp.x, bp.y), (set(&["a", "c"]), set(&["b", "d"])));
        assert!(cycle(3).bipartition().is_none());
        let bp = path(2).bipartition().unwrap();
        assert_eq!((bp.x, bp.y), (set(&["a"]), set(&["b"])));
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(cycle(3).find_odd_cycle().unwrap().0, ids(&["a", "b", "c"]));
        assert!(cycle(4).find_odd_cycle().is_none());
        let c5 = cycle(5).find_odd_cycle().unwrap();
        assert_eq!(c5.0.len(), 5);
        assert!(c5.is_valid_for(&cycle(5)));
    }

    #[test]
    fn odd_cycle_inside_larger_graph() {
        // a-b-c-d-e-f-a is even; chord c-f closes the odd cycle c-d-e-f
        // and the triangle is hidden behind a pendant path.
        let g = build_graph(
            ids(&["a", "b", "c", "d", "e", "f", "g"]),
            vec![e("a", "b"), e("b", "c"), e("c", "d"), e("d", "e"), e("e", "c"), e("f", "g"), e("a", "f")],
        )
        .unwrap();
        let w = g.find_odd_cycle().unwrap();
        assert!(w.is_valid_for(&g), "{w}");
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(path(2).neighbors(&"a".into()).unwrap(), &set(&["b"]));
        assert_eq!(cycle(4).neighbors(&"a".into()).unwrap(), &set(&["b", "d"]));
        assert_eq!(cycle(3).neighbors(&"a".into()).unwrap(), &set(&["b", "c"]));
        assert_eq!(
            cycle(3).neighbors(&"q".into()),
            Err(GraphError::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn components_anchor_smallest_vertex() {
        let g = build_graph(ids(&["d", "c", "b", "a"]), vec![e("d", "a"), e("c", "b")]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![ids(&["a", "d"]), ids(&["b", "c"])]);
        let bp = g.bipartition().unwrap();
        assert_eq!(bp.x, set(&["a", "b"]));
    }

    #[test]
    fn json_is_canonical() {
        let g = build_graph(ids(&["b", "a", "c"]), vec![e("c", "b"), e("b", "a")]).unwrap();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"vertices":["a"],"edges":[]}"#).is_err());
    }
}
