//! Simple undirected graphs and the metric structure built on top of them.
//!
//! Vertices are labeled `0..n`. Most downstream routines require the graph
//! to be connected with at least two vertices; construction itself does not.

mod canon;
mod families;
mod metric;
mod random;

pub use canon::{canonical_key, connected_graphs, non_isomorphic_graphs, CanonicalKey};
pub use families::Family;
pub use metric::{
    ad_matrix, all_pairs_distances, kth_adjacency, weighted_view, DistanceMatrix, SymIntMatrix,
    WeightedEdge, WeightedGraph,
};
pub(crate) use metric::{ad_matrix_from_distances, ad_relation_graph};
pub use random::{random_connected, random_population};

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "EdgeList", into = "EdgeList")]
pub struct Graph {
    n: usize,
    adjacency: Vec<Vec<usize>>,
}

/// Serialized form of a [`Graph`]: vertex count plus edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = Error;

    fn try_from(value: EdgeList) -> Result<Self> {
        Graph::from_edge_list(value.n, &value.edges)
    }
}

impl From<Graph> for EdgeList {
    fn from(g: Graph) -> Self {
        EdgeList {
            n: g.n,
            edges: g.edges().collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list, rejecting loops,
    /// out-of-range endpoints and repeated edges.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if adjacency[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { n, adjacency })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adjacency: vec![Vec::new(); n],
        }
    }

    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Self {
        Graph {
            n: adjacency.len(),
            adjacency,
        }
    }

    /// Builds a graph from an upper-triangular adjacency predicate.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adjacency = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph { n, adjacency }
    }

    /// Parses the plain-text edge-list format: a header line `n m`, then
    /// `m` lines `u v`. Lines starting with `#` and blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut rows = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| Error::Parse {
                        line,
                        msg: "expected two integers".into(),
                    })?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })
            };
            let a = next()?;
            let b = next()?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "trailing tokens".into(),
                });
            }
            Ok((a, b))
        };

        let (line, header) = rows.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header line".into(),
        })?;
        let (n, m) = parse_pair(line, header)?;
        let edges = rows
            .map(|(line, l)| parse_pair(line, l))
            .collect::<Result<Vec<_>>>()?;
        if edges.len() != m {
            return Err(Error::Parse {
                line,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the graph in the edge-list format read by [`Graph::parse_edge_list`].
    pub fn to_edge_list_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// The 0/1 adjacency matrix; defined for any graph, connected or not.
    pub fn adjacency_matrix(&self) -> SymIntMatrix {
        SymIntMatrix::from_fn(self.n, |u, v| i64::from(self.is_adjacent(u, v)))
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Returns the common degree if every vertex has the same degree.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adjacency.first().map_or(0, Vec::len);
        self.adjacency
            .iter()
            .all(|l| l.len() == first)
            .then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_levels(0).iter().all(Option::is_some)
    }

    pub(crate) fn require_connected(&self, min_vertices: usize) -> Result<()> {
        if self.n < min_vertices {
            return Err(Error::TooSmall(min_vertices));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(())
    }

    /// BFS hop counts from `source`; `None` marks unreachable vertices.
    pub fn bfs_levels(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Two-colors a connected graph. Returns `None` when an odd cycle exists.
    /// The part containing vertex 0 is returned first; both parts are sorted.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let levels = self.bfs_levels(0);
        let side: Vec<usize> = levels.iter().map(|l| l.unwrap_or(0) % 2).collect();
        if self.edges().any(|(u, v)| side[u] == side[v]) {
            return None;
        }
        let (left, right): (Vec<usize>, Vec<usize>) = (0..self.n).partition(|&v| side[v] == 0);
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.is_adjacent(u, v))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n];
        for (u, v) in self.edges() {
            adjacency[perm[u]].push(perm[v]);
            adjacency[perm[v]].push(perm[u]);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n: self.n,
            adjacency,
        }
    }

    /// Neighborhoods as bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        self.adjacency
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_is_p2() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g, Family::Path(2).build().unwrap());
    }

    #[test]
    fn path_construction() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g, Family::Path(4).build().unwrap());
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 1)]),
            Err(Error::LoopEdge(1))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
    }

    #[test]
    fn parses_edge_list_with_comments() {
        let text = "# a path\n4 3\n0 1\n\n# middle\n1 2\n2 3\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Family::Path(4).build().unwrap());
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list_string()).unwrap(), g);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Graph::parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn bipartitions() {
        let p4 = Family::Path(4).build().unwrap();
        assert_eq!(p4.bipartition(), Some((vec![0, 2], vec![1, 3])));
        assert_eq!(Family::Cycle(5).build().unwrap().bipartition(), None);
        assert_eq!(
            Family::Cycle(6).build().unwrap().bipartition(),
            Some((vec![0, 2, 4], vec![1, 3, 5]))
        );
    }

    #[test]
    fn serde_round_trip() {
        let g = Family::Petersen.build().unwrap();
        let json = serde_json::to_string(&g).unwrap();
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
