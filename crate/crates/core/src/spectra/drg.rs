use std::fmt;

use serde::{Deserialize, Serialize};

use super::eigen::{eigen_decomposition, residual};
use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, kth_adjacency, Graph};

/// Intersection array `{b_0, …, b_(d−1); c_1, …, c_d}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    pub b: Vec<usize>,
    pub c: Vec<usize>,
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Returns the intersection array when, for every pair `(u, v)` at
/// distance `i`, the number of neighbors of `v` at distance `i − 1` and
/// `i + 1` from `u` depends only on `i`.
pub fn is_distance_regular(g: &Graph) -> Option<IntersectionArray> {
    if g.vertex_count() < 2 || !g.is_connected() {
        return None;
    }
    g.regularity()?;
    let dm = all_pairs_distances(g).ok()?;
    let d = dm.diameter();
    let mut b: Vec<Option<usize>> = vec![None; d + 1];
    let mut c: Vec<Option<usize>> = vec![None; d + 1];
    let n = g.vertex_count();
    for u in 0..n {
        for v in 0..n {
            let i = dm.get(u, v);
            let (mut down, mut up) = (0, 0);
            for &w in g.neighbors(v) {
                let dw = dm.get(u, w);
                if dw + 1 == i {
                    down += 1;
                } else if dw == i + 1 {
                    up += 1;
                }
            }
            for (slot, value) in [(&mut b[i], up), (&mut c[i], down)] {
                match slot {
                    Some(prev) if *prev != value => return None,
                    _ => *slot = Some(value),
                }
            }
        }
    }
    Some(IntersectionArray {
        b: b[..d].iter().map(|x| x.unwrap_or(0)).collect(),
        c: c[1..].iter().map(|x| x.unwrap_or(0)).collect(),
    })
}

/// An eigenvalue `lambda` of `A(G)` and the eigenvalue `gamma` of the
/// antipodal adjacency matrix `A_d(G)` on the same eigenvector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoEigenPair {
    pub lambda: f64,
    pub gamma: f64,
    pub vector: Vec<f64>,
}

/// Co-eigenpairs of a distance-regular graph of diameter at least 2.
pub fn co_eigenpairs(g: &Graph) -> Result<Vec<CoEigenPair>> {
    g.require_connected(2)?;
    if is_distance_regular(g).is_none() {
        return Err(Error::NotDistanceRegular);
    }
    let dm = all_pairs_distances(g)?;
    if dm.diameter() < 2 {
        return Err(Error::DiameterOne(
            "co-eigenpairs need a separate antipodal matrix (d >= 2)".into(),
        ));
    }
    paired_eigenvalues(g)
}

/// Co-eigenpairs without the diameter guard: for `d = 1` the antipodal
/// matrix is `A` itself and `gamma = lambda`.
pub(crate) fn paired_eigenvalues(g: &Graph) -> Result<Vec<CoEigenPair>> {
    let dm = all_pairs_distances(g)?;
    let a = kth_adjacency(&dm, 1)?.to_dmatrix();
    let ad = kth_adjacency(&dm, dm.diameter())?;
    let ad_norm = ad.norm1().max(1.0);
    let ad = ad.to_dmatrix();
    let eig = eigen_decomposition(&a);
    (0..g.vertex_count())
        .map(|i| {
            let x = eig.vector(i);
            let v = nalgebra::DVector::from_column_slice(&x);
            let gamma = v.dot(&(&ad * &v)) / v.dot(&v);
            let r = residual(&ad, gamma, &x);
            if r > 1e-7 * ad_norm {
                return Err(Error::Verification(format!(
                    "eigenvector {i} of A is not an eigenvector of A_d (residual {r:.3e})"
                )));
            }
            Ok(CoEigenPair {
                lambda: eig.values[i],
                gamma,
                vector: x,
            })
        })
        .collect()
}
