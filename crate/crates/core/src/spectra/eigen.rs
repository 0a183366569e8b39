use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::graph::SymIntMatrix;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Real eigenvalue multiset, sorted in descending order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    values: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum {
            values,
            tol: DEFAULT_TOL,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn largest(&self) -> f64 {
        self.values.first().copied().unwrap_or(f64::NAN)
    }

    /// Smallest eigenvalue.
    pub fn smallest(&self) -> f64 {
        self.values.last().copied().unwrap_or(f64::NAN)
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.values.iter().map(|x| x * x).sum()
    }

    /// Largest pairwise gap between the two sorted multisets, or infinity
    /// when their sizes differ.
    pub fn max_mismatch(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_mismatch(other) <= tol
    }

    /// Whether the multiset equals its own negation within `tol`.
    pub fn is_symmetric_about_zero(&self, tol: f64) -> bool {
        let n = self.values.len();
        (0..n).all(|i| (self.values[i] + self.values[n - 1 - i]).abs() <= tol)
    }

    /// Counts of eigenvalues below, within `tol` of, and above `pivot`.
    pub fn count_around(&self, pivot: f64, tol: f64) -> (usize, usize, usize) {
        self.values.iter().fold((0, 0, 0), |(lo, eq, hi), &x| {
            if x < pivot - tol {
                (lo + 1, eq, hi)
            } else if x > pivot + tol {
                (lo, eq, hi + 1)
            } else {
                (lo, eq + 1, hi)
            }
        })
    }
}

/// Eigenvalues together with orthonormal eigenvectors (as columns),
/// sorted by descending eigenvalue.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: DMatrix<f64>,
}

impl EigenDecomposition {
    pub fn vector(&self, i: usize) -> Vec<f64> {
        self.vectors.column(i).iter().copied().collect()
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum::from_values(self.values.clone())
    }
}

/// Symmetric eigendecomposition by the cyclic Jacobi method.
///
/// Each rotation zeroes one off-diagonal entry; sweeps repeat until the
/// off-diagonal mass is below `1e-30` of the total. Eigenvectors are
/// accumulated so that they stay orthonormal to working precision even
/// for highly degenerate spectra.
pub fn eigen_decomposition(m: &DMatrix<f64>) -> EigenDecomposition {
    let n = m.nrows();
    let mut a = m.clone();
    let mut v = DMatrix::<f64>::identity(n, n);
    let total: f64 = a.iter().map(|x| x * x).sum();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)] * a[(i, j)])
            .sum();
        if off <= 1e-30 * total.max(f64::MIN_POSITIVE) {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(y, y)].total_cmp(&a[(x, x)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    EigenDecomposition { values, vectors }
}

/// All eigenvalues of a symmetric integer matrix, descending.
pub fn eigenvalues_sym(m: &SymIntMatrix) -> Spectrum {
    eigen_decomposition(&m.to_dmatrix()).spectrum()
}

/// `‖Mx − λx‖₂` for a candidate eigenpair.
pub fn residual(m: &DMatrix<f64>, lambda: f64, x: &[f64]) -> f64 {
    let v = nalgebra::DVector::from_column_slice(x);
    (m * &v - v * lambda).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ad_matrix, Family};

    fn ad(f: Family) -> SymIntMatrix {
        ad_matrix(&f.build().unwrap()).unwrap()
    }

    #[test]
    fn complete_graph_spectrum() {
        let s = eigenvalues_sym(&ad(Family::Complete(4)));
        assert!(s.matches(&Spectrum::from_values(vec![3.0, -1.0, -1.0, -1.0]), 1e-9));
    }

    #[test]
    fn path4_spectrum() {
        let r = 2f64.sqrt();
        let expected = Spectrum::from_values(vec![2.0 + r, 2.0 - r, -2.0 + r, -2.0 - r]);
        assert!(eigenvalues_sym(&ad(Family::Path(4))).matches(&expected, 1e-9));
    }

    #[test]
    fn cycle4_spectrum() {
        let expected = Spectrum::from_values(vec![4.0, 0.0, -2.0, -2.0]);
        assert!(eigenvalues_sym(&ad(Family::Cycle(4))).matches(&expected, 1e-9));
    }

    #[test]
    fn residuals_are_small() {
        for f in [
            Family::Petersen,
            Family::Frucht,
            Family::Path(7),
            Family::Hypercube(3),
        ] {
            let m = ad(f);
            let dm = m.to_dmatrix();
            let eig = eigen_decomposition(&dm);
            for i in 0..m.n() {
                assert!(residual(&dm, eig.values[i], &eig.vector(i)) <= 1e-8 * m.norm1());
            }
        }
    }

    #[test]
    fn counting_and_symmetry() {
        let s = Spectrum::from_values(vec![4.0, 0.0, -2.0, -2.0]);
        assert_eq!(s.count_around(0.0, 1e-8), (2, 1, 1));
        assert!(!s.is_symmetric_about_zero(1e-8));
        assert!(Spectrum::from_values(vec![1.0, -1.0, 0.0]).is_symmetric_about_zero(1e-12));
        assert_eq!(
            s.max_mismatch(&Spectrum::from_values(vec![1.0])),
            f64::INFINITY
        );
    }
}
