//! Numeric spectra, exact characteristic polynomials, closed forms and
//! distance-regularity.

mod charpoly;
mod closed;
mod drg;
mod eigen;

pub use charpoly::{char_poly_exact, determinant_exact, CharPoly};
pub use closed::{
    chebyshev_phi, cycle_spectrum_closed, double_star_charpoly_closed, path_charpoly_closed,
};
pub(crate) use drg::paired_eigenvalues;
pub use drg::{co_eigenpairs, is_distance_regular, CoEigenPair, IntersectionArray};
pub use eigen::{
    eigen_decomposition, eigenvalues_sym, residual, EigenDecomposition, Spectrum, DEFAULT_TOL,
};
