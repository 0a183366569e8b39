//! AD degrees, AD independence and chromatic numbers, and spectral bound
//! checkers.

mod bounds;
mod solvers;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ad_matrix_from_distances, ad_relation_graph, all_pairs_distances, Graph};
use crate::spectra::residual;

pub use bounds::{
    bipartite_least_eig_bound, chromatic_lower_bound, clique_bound, induced_subgraph_bound,
    induced_subgraph_bounds, inertia_bound, mean_degree_sandwich, planar_fourcolor_check,
    regular_independence_bound, spectral_radius_bound, trace_moment_check, BoundReport,
    CliqueBoundReport, SandwichReport, SIGN_TOL,
};

/// Exact-solver vertex limits.
pub const ALPHA_CAP: usize = 24;
pub const CHI_CAP: usize = 16;
pub const OMEGA_CAP: usize = 20;

/// Plain, diametrical and AD degrees of every vertex with their aggregates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub diameter: usize,
    pub degrees: Vec<usize>,
    /// Number of antipodal vertices; identically zero when `d = 1`.
    pub ddegrees: Vec<usize>,
    /// Row sums of the AD matrix, `deg(v) + d·ddeg(v)`.
    pub addegrees: Vec<u64>,
    pub d_hat_sum: usize,
    pub max_ddeg: usize,
    pub min_ddeg: usize,
    pub max_addeg: u64,
    pub min_addeg: u64,
    pub mean_addeg: f64,
    /// The common AD degree, if all are equal.
    pub ad_regular: Option<u64>,
}

impl DegreeProfile {
    pub fn is_ad_regular(&self) -> bool {
        self.ad_regular.is_some()
    }
}

pub fn degree_profile(g: &Graph) -> Result<DegreeProfile> {
    g.require_connected(2)?;
    let dm = all_pairs_distances(g)?;
    let d = dm.diameter();
    let n = g.vertex_count();
    let degrees = g.degrees();
    let ddegrees: Vec<usize> = (0..n)
        .map(|v| {
            if d < 2 {
                0
            } else {
                dm.row(v).iter().filter(|&&x| x == d).count()
            }
        })
        .collect();
    let addegrees: Vec<u64> = (0..n)
        .map(|v| (degrees[v] + d * ddegrees[v]) as u64)
        .collect();
    let max_addeg = *addegrees.iter().max().unwrap();
    let min_addeg = *addegrees.iter().min().unwrap();
    Ok(DegreeProfile {
        diameter: d,
        d_hat_sum: ddegrees.iter().sum(),
        max_ddeg: *ddegrees.iter().max().unwrap(),
        min_ddeg: *ddegrees.iter().min().unwrap(),
        mean_addeg: addegrees.iter().sum::<u64>() as f64 / n as f64,
        ad_regular: (max_addeg == min_addeg).then_some(max_addeg),
        max_addeg,
        min_addeg,
        degrees,
        ddegrees,
        addegrees,
    })
}

fn check_cap(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        return Err(Error::SizeCap { n, cap, what });
    }
    Ok(())
}

fn relation_masks(g: &Graph) -> Result<Vec<u64>> {
    Ok(ad_relation_graph(g)?.neighbor_masks())
}

/// Largest set with no two vertices adjacent or antipodal.
pub fn ad_independence_number(g: &Graph) -> Result<usize> {
    check_cap(g.vertex_count(), ALPHA_CAP, "AD independence number")?;
    Ok(solvers::max_independent_set(&relation_masks(g)?))
}

/// Fewest colors such that adjacent and antipodal vertices differ.
pub fn ad_chromatic_number(g: &Graph) -> Result<usize> {
    check_cap(g.vertex_count(), CHI_CAP, "AD chromatic number")?;
    Ok(solvers::chromatic_number(&relation_masks(g)?))
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    check_cap(g.vertex_count(), ALPHA_CAP, "independence number")?;
    Ok(solvers::max_independent_set(&g.neighbor_masks()))
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    check_cap(g.vertex_count(), CHI_CAP, "chromatic number")?;
    Ok(solvers::chromatic_number(&g.neighbor_masks()))
}

pub fn clique_number(g: &Graph) -> Result<usize> {
    check_cap(g.vertex_count(), OMEGA_CAP, "clique number")?;
    Ok(solvers::max_clique(&g.neighbor_masks()))
}

/// Residual of the normalized all-ones vector against the AD matrix,
/// using its Rayleigh quotient as the eigenvalue.
pub fn all_ones_residual(g: &Graph) -> Result<f64> {
    g.require_connected(2)?;
    let ad = ad_matrix_from_distances(&all_pairs_distances(g)?);
    let n = g.vertex_count();
    let x = vec![1.0 / (n as f64).sqrt(); n];
    let rq = ad.total() as f64 / n as f64;
    Ok(residual(&ad.to_dmatrix(), rq, &x))
}

/// Whether the all-ones vector is an eigenvector of the AD matrix.
pub fn all_ones_is_eigenvector(g: &Graph) -> Result<bool> {
    let ad = ad_matrix_from_distances(&all_pairs_distances(g)?);
    Ok(all_ones_residual(g)? <= 1e-8 * ad.norm1().max(1.0))
}
