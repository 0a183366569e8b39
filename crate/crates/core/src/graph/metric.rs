use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Hop-count distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<usize>,
    diameter: usize,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j]
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn row(&self, i: usize) -> &[usize] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// Unordered pairs `(i, j)`, `i < j`, at distance exactly the diameter.
    pub fn antipodal_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) == self.diameter {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn to_matrix(&self) -> SymIntMatrix {
        SymIntMatrix::from_fn(self.n, |i, j| self.get(i, j) as i64)
    }
}

/// Dense symmetric integer matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymIntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl SymIntMatrix {
    pub fn zeros(n: usize) -> Self {
        SymIntMatrix {
            n,
            entries: vec![0; n * n],
        }
    }

    /// Builds the matrix from `f(i, j)` for `i <= j` and mirrors it.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut m = SymIntMatrix::zeros(n);
        for i in 0..n {
            for j in i..n {
                let x = f(i, j);
                m.entries[i * n + j] = x;
                m.entries[j * n + i] = x;
            }
        }
        m
    }

    /// Validates symmetry of explicit rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::InvalidParameter(format!(
                "row {bad} has length {}, expected {n}",
                rows[bad].len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(SymIntMatrix {
            n,
            entries: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Sum of all entries.
    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Maximum absolute column sum.
    pub fn norm1(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|x| x.unsigned_abs()).sum::<u64>())
            .max()
            .unwrap_or(0) as f64
    }

    /// `tr(M²)`, i.e. the sum of squared entries of a symmetric matrix.
    pub fn trace_of_square(&self) -> i128 {
        self.entries
            .iter()
            .map(|&x| (x as i128) * (x as i128))
            .sum()
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn scaled(&self, k: i64) -> SymIntMatrix {
        SymIntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x * k).collect(),
        }
    }

    pub fn add(&self, other: &SymIntMatrix) -> SymIntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        SymIntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Kronecker product; both factors symmetric so the result is too.
    pub fn kron(&self, other: &SymIntMatrix) -> SymIntMatrix {
        let (n, m) = (self.n, other.n);
        let size = n * m;
        let mut entries = vec![0; size * size];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..m {
                    for l in 0..m {
                        entries[(i * m + j) * size + k * m + l] = a * other.get(j, l);
                    }
                }
            }
        }
        SymIntMatrix { n: size, entries }
    }

    pub fn identity(n: usize) -> SymIntMatrix {
        SymIntMatrix::from_fn(n, |i, j| i64::from(i == j))
    }

    pub fn all_ones(n: usize) -> SymIntMatrix {
        SymIntMatrix::from_fn(n, |_, _| 1)
    }

    /// Principal submatrix on the given index set.
    pub fn principal(&self, idx: &[usize]) -> SymIntMatrix {
        SymIntMatrix::from_fn(idx.len(), |a, b| self.get(idx[a], idx[b]))
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.get(i, j) as f64)
    }
}

/// All-pairs hop distances by one BFS per vertex.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut entries = Vec::with_capacity(n * n);
    for s in 0..n {
        for d in g.bfs_levels(s) {
            entries.push(d.ok_or(Error::Disconnected)?);
        }
    }
    let diameter = entries.iter().copied().max().unwrap_or(0);
    Ok(DistanceMatrix {
        n,
        entries,
        diameter,
    })
}

/// Indicator matrix of the pairs at distance exactly `k`.
pub fn kth_adjacency(dm: &DistanceMatrix, k: usize) -> Result<SymIntMatrix> {
    if k == 0 || k > dm.diameter {
        return Err(Error::IndexOutOfRange {
            k,
            max: dm.diameter,
        });
    }
    Ok(SymIntMatrix::from_fn(dm.n, |i, j| {
        i64::from(dm.get(i, j) == k)
    }))
}

/// `A(G) + d·A_d(G)` for diameter `d >= 2`, and `A(G)` when `d = 1`.
pub fn ad_matrix(g: &Graph) -> Result<SymIntMatrix> {
    g.require_connected(2)?;
    let dm = all_pairs_distances(g)?;
    Ok(ad_matrix_from_distances(&dm))
}

pub(crate) fn ad_matrix_from_distances(dm: &DistanceMatrix) -> SymIntMatrix {
    let d = dm.diameter;
    SymIntMatrix::from_fn(dm.n, |i, j| match dm.get(i, j) {
        1 => 1,
        x if x == d && d >= 2 => d as i64,
        _ => 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedEdge {
    pub u: usize,
    pub v: usize,
    pub weight: usize,
}

/// The graph whose weighted adjacency matrix is the AD matrix: unit edges
/// for adjacency and weight-`d` edges joining antipodal vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraph {
    pub n: usize,
    pub diameter: usize,
    pub edges: Vec<WeightedEdge>,
}

impl WeightedGraph {
    pub fn adjacency_matrix(&self) -> SymIntMatrix {
        let mut rows = vec![vec![0i64; self.n]; self.n];
        for e in &self.edges {
            rows[e.u][e.v] += e.weight as i64;
            rows[e.v][e.u] += e.weight as i64;
        }
        SymIntMatrix::from_rows(&rows).expect("weighted adjacency is symmetric by construction")
    }

    pub fn unit_edges(&self) -> impl Iterator<Item = &WeightedEdge> {
        self.edges.iter().filter(|e| e.weight == 1)
    }

    pub fn antipodal_edges(&self) -> impl Iterator<Item = &WeightedEdge> {
        self.edges.iter().filter(|e| e.weight != 1)
    }

    /// The unweighted simple graph on the union of both edge kinds.
    pub fn underlying(&self) -> Graph {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (e.u, e.v)).collect();
        Graph::from_edge_list(self.n, &pairs).expect("edge kinds are disjoint for d >= 2")
    }
}

/// Weighted view of a graph of diameter at least 2.
pub fn weighted_view(g: &Graph) -> Result<WeightedGraph> {
    g.require_connected(2)?;
    let dm = all_pairs_distances(g)?;
    let d = dm.diameter;
    if d < 2 {
        return Err(Error::DiameterOne(
            "antipodal pairs coincide with edges; use the AD matrix directly".into(),
        ));
    }
    let mut edges = Vec::new();
    for u in 0..dm.n {
        for v in (u + 1)..dm.n {
            match dm.get(u, v) {
                1 => edges.push(WeightedEdge { u, v, weight: 1 }),
                x if x == d => edges.push(WeightedEdge { u, v, weight: d }),
                _ => {}
            }
        }
    }
    Ok(WeightedGraph {
        n: dm.n,
        diameter: d,
        edges,
    })
}

/// The simple graph whose edges are the adjacent-or-antipodal pairs.
/// For diameter 1 this is the graph itself.
pub(crate) fn ad_relation_graph(g: &Graph) -> Result<Graph> {
    let ad = ad_matrix(g)?;
    Ok(Graph::from_fn(g.vertex_count(), |u, v| ad.get(u, v) != 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn distances() {
        let dm = all_pairs_distances(&fam(Family::Path(4))).unwrap();
        assert_eq!(dm.get(0, 3), 3);
        assert_eq!(dm.diameter(), 3);
        assert_eq!(
            all_pairs_distances(&fam(Family::Cycle(6)))
                .unwrap()
                .diameter(),
            3
        );
        let k5 = all_pairs_distances(&fam(Family::Complete(5))).unwrap();
        assert_eq!(k5.diameter(), 1);
        assert!((0..5).all(|i| (0..5).all(|j| k5.get(i, j) == usize::from(i != j))));
        assert_eq!(
            all_pairs_distances(&Graph::empty(3)),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn kth_adjacency_examples() {
        let p4 = fam(Family::Path(4));
        let dm = all_pairs_distances(&p4).unwrap();
        let a1 = kth_adjacency(&dm, 1).unwrap();
        assert!((0..4).all(|i| (0..4).all(|j| a1.get(i, j) == i64::from(p4.is_adjacent(i, j)))));
        let a3 = kth_adjacency(&dm, 3).unwrap();
        assert_eq!(a3.total(), 2);
        assert_eq!(a3.get(0, 3), 1);
        assert!(matches!(
            kth_adjacency(&dm, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            kth_adjacency(&dm, 0),
            Err(Error::IndexOutOfRange { .. })
        ));

        let c6 = all_pairs_distances(&fam(Family::Cycle(6))).unwrap();
        let a3 = kth_adjacency(&c6, 3).unwrap();
        assert_eq!(a3.row_sums(), vec![1; 6]);
        assert!((0..6).all(|i| a3.get(i, (i + 3) % 6) == 1));
    }

    #[test]
    fn ad_matrix_examples() {
        let p4 = ad_matrix(&fam(Family::Path(4))).unwrap();
        assert_eq!(
            p4.rows(),
            vec![
                vec![0, 1, 0, 3],
                vec![1, 0, 1, 0],
                vec![0, 1, 0, 1],
                vec![3, 0, 1, 0]
            ]
        );
        let k3 = ad_matrix(&fam(Family::Complete(3))).unwrap();
        assert_eq!(k3.rows(), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let c4 = ad_matrix(&fam(Family::Cycle(4))).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(c4.get(i, j), [0, 1, 2, 1][(j + 4 - i) % 4]);
            }
        }
        assert_eq!(ad_matrix(&Graph::empty(2)), Err(Error::Disconnected));
        assert_eq!(ad_matrix(&Graph::empty(1)), Err(Error::TooSmall(2)));
    }

    #[test]
    fn weighted_view_examples() {
        let p4 = weighted_view(&fam(Family::Path(4))).unwrap();
        assert_eq!(p4.unit_edges().count(), 3);
        let heavy: Vec<_> = p4.antipodal_edges().collect();
        assert_eq!(
            heavy,
            vec![&WeightedEdge {
                u: 0,
                v: 3,
                weight: 3
            }]
        );

        let c4 = weighted_view(&fam(Family::Cycle(4))).unwrap();
        assert_eq!(c4.unit_edges().count(), 4);
        assert_eq!(c4.antipodal_edges().count(), 2);

        let c6 = weighted_view(&fam(Family::Cycle(6))).unwrap();
        assert_eq!(c6.unit_edges().count(), 6);
        assert_eq!(c6.antipodal_edges().count(), 3);
        assert!(c6.antipodal_edges().all(|e| e.weight == 3));

        assert!(matches!(
            weighted_view(&fam(Family::Complete(4))),
            Err(Error::DiameterOne(_))
        ));
    }

    #[test]
    fn kron_small() {
        let a = SymIntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        let i2 = SymIntMatrix::identity(2);
        let k = a.kron(&i2);
        assert_eq!(k.get(0, 2), 1);
        assert_eq!(k.get(0, 1), 0);
        assert_eq!(k.total(), 4);
        assert!(SymIntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).is_err());
    }
}
