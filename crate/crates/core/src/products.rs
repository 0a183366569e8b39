//! Join, lexicographic and Cartesian products, with closed-form AD spectra
//! checked against the eigenvalues of the constructed product.
//!
//! Product vertices `(i, j)` are numbered `i·|V(H)| + j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ad_matrix, all_pairs_distances, kth_adjacency, Graph, SymIntMatrix};
use crate::spectra::{eigenvalues_sym, is_distance_regular, paired_eigenvalues, Spectrum};

/// Absolute part of the spectrum agreement tolerance; it is scaled by
/// `1 + ‖AD‖₁` of the product.
pub const PRODUCT_TOL: f64 = 1e-7;

/// `G ∨ H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    Graph::from_fn(n + m, |u, v| match (u < n, v < n) {
        (true, true) => g.is_adjacent(u, v),
        (false, false) => h.is_adjacent(u - n, v - n),
        _ => true,
    })
}

/// AD spectrum of a join. Joins have diameter at most 2, where the AD
/// matrix is the distance matrix, so this is the distance spectrum.
pub fn join_ad_spectrum(g: &Graph, h: &Graph) -> Result<Spectrum> {
    let j = join(g, h);
    Ok(eigenvalues_sym(&all_pairs_distances(&j)?.to_matrix()))
}

/// `G[H]`: `(i, j) ~ (k, l)` iff `i ~ k` in `G`, or `i = k` and `j ~ l`
/// in `H`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    Graph::from_fn(g.vertex_count() * m, |u, v| {
        let (i, j, k, l) = (u / m, u % m, v / m, v % m);
        g.is_adjacent(i, k) || (i == k && h.is_adjacent(j, l))
    })
}

/// `G □ H`: `(i, j) ~ (k, l)` iff one coordinate agrees and the other is
/// an edge of its factor.
pub fn cartesian(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    Graph::from_fn(g.vertex_count() * m, |u, v| {
        let (i, j, k, l) = (u / m, u % m, v / m, v % m);
        (i == k && h.is_adjacent(j, l)) || (j == l && g.is_adjacent(i, k))
    })
}

/// Which closed form applies to a lexicographic product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LexCase {
    /// Product diameter 2: the AD matrix is the distance matrix.
    DiameterTwo,
    /// Product diameter above 2.
    Larger,
}

/// Selects the case from the diameter of the constructed product.
pub fn lex_case(g: &Graph, h: &Graph) -> Result<LexCase> {
    g.require_connected(2)?;
    if h.vertex_count() == 0 {
        return Err(Error::TooSmall(0));
    }
    match all_pairs_distances(&lexicographic(g, h))?.diameter() {
        1 => Err(Error::DiameterOne(
            "the lexicographic product is complete".into(),
        )),
        2 => Ok(LexCase::DiameterTwo),
        _ => Ok(LexCase::Larger),
    }
}

/// Eigenvalues of `A(H)` whose eigenvectors are orthogonal to the all-ones
/// vector: the adjacency spectrum of an `r`-regular graph with one copy of
/// `r` removed.
fn non_perron(h: &Graph, r: usize) -> Result<Vec<f64>> {
    let mut values = eigenvalues_sym(&h.adjacency_matrix()).values().to_vec();
    let (pos, gap) = values
        .iter()
        .enumerate()
        .map(|(i, &x)| (i, (x - r as f64).abs()))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("h is nonempty");
    if gap > 1e-8 * (1.0 + r as f64) {
        return Err(Error::Verification(format!(
            "degree {r} is not an adjacency eigenvalue of a regular graph"
        )));
    }
    values.remove(pos);
    Ok(values)
}

/// Predicted AD spectrum of `G[H]` for `r`-regular `H` on `m` vertices:
///
/// - diameter 2: `{mν + 2m − r − 2 : ν ∈ Spec AD(G)} ∪ {−(λ + 2)}ⁿ`,
/// - diameter above 2: `{mν + r : ν ∈ Spec AD(G)} ∪ {λ}ⁿ`,
///
/// where `λ` runs over the `m − 1` non-Perron adjacency eigenvalues of `H`,
/// each repeated `n = |V(G)|` times.
pub fn lex_ad_spectrum_closed(g: &Graph, h: &Graph) -> Result<Spectrum> {
    let case = lex_case(g, h)?;
    let r = h.regularity().ok_or(Error::NotRegular)?;
    let (n, m) = (g.vertex_count(), h.vertex_count() as f64);
    let rf = r as f64;
    let outer = eigenvalues_sym(&ad_matrix(g)?);
    let inner = non_perron(h, r)?;
    let mut values = Vec::with_capacity(n * h.vertex_count());
    for &nu in outer.values() {
        values.push(match case {
            LexCase::DiameterTwo => m * nu + 2.0 * m - rf - 2.0,
            LexCase::Larger => m * nu + rf,
        });
    }
    for &lambda in &inner {
        let value = match case {
            LexCase::DiameterTwo => -(lambda + 2.0),
            LexCase::Larger => lambda,
        };
        values.extend(std::iter::repeat_n(value, n));
    }
    Ok(Spectrum::from_values(values))
}

/// `A(G) ⊗ I + I ⊗ A(H) + (d_G + d_H)·(A_{d_G}(G) ⊗ A_{d_H}(H))`, with
/// `A_1 = A` for a complete factor.
fn cartesian_ad_decomposition(g: &Graph, h: &Graph) -> Result<SymIntMatrix> {
    let (dg, dh) = (all_pairs_distances(g)?, all_pairs_distances(h)?);
    let a_g = kth_adjacency(&dg, 1)?;
    let a_h = kth_adjacency(&dh, 1)?;
    let anti = kth_adjacency(&dg, dg.diameter())?.kron(&kth_adjacency(&dh, dh.diameter())?);
    let (n, m) = (g.vertex_count(), h.vertex_count());
    Ok(a_g
        .kron(&SymIntMatrix::identity(m))
        .add(&SymIntMatrix::identity(n).kron(&a_h))
        .add(&anti.scaled((dg.diameter() + dh.diameter()) as i64)))
}

/// Checks that `AD(G □ H)` equals the Kronecker decomposition entrywise.
pub fn validate_cartesian_decomposition(g: &Graph, h: &Graph) -> Result<()> {
    g.require_connected(2)?;
    h.require_connected(2)?;
    let direct = ad_matrix(&cartesian(g, h))?;
    let predicted = cartesian_ad_decomposition(g, h)?;
    let size = direct.n();
    for u in 0..size {
        for v in 0..size {
            if direct.get(u, v) != predicted.get(u, v) {
                return Err(Error::Verification(format!(
                    "AD(G□H)[{u}][{v}] = {} but the decomposition gives {}",
                    direct.get(u, v),
                    predicted.get(u, v)
                )));
            }
        }
    }
    Ok(())
}

/// Predicted AD spectrum of `G □ H` for distance-regular factors:
/// `{λ_i + μ_j + (d_G + d_H)·γ_i·δ_j}` over all pairs, where `(λ_i, γ_i)`
/// and `(μ_j, δ_j)` are the eigenvalues of `A` and `A_d` on a shared
/// eigenvector of each factor. The structural decomposition is validated
/// first and its failure is returned as an error.
pub fn cartesian_ad_spectrum_closed(g: &Graph, h: &Graph) -> Result<Spectrum> {
    for f in [g, h] {
        f.require_connected(2)?;
        if is_distance_regular(f).is_none() {
            return Err(Error::NotDistanceRegular);
        }
    }
    validate_cartesian_decomposition(g, h)?;
    let d = (all_pairs_distances(g)?.diameter() + all_pairs_distances(h)?.diameter()) as f64;
    let (pg, ph) = (paired_eigenvalues(g)?, paired_eigenvalues(h)?);
    let values = pg
        .iter()
        .flat_map(|a| {
            ph.iter()
                .map(move |b| a.lambda + b.lambda + d * a.gamma * b.gamma)
        })
        .collect();
    Ok(Spectrum::from_values(values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Join,
    Lex,
    Cartesian,
}

impl ProductKind {
    pub fn build(self, g: &Graph, h: &Graph) -> Graph {
        match self {
            ProductKind::Join => join(g, h),
            ProductKind::Lex => lexicographic(g, h),
            ProductKind::Cartesian => cartesian(g, h),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Join => "join",
            ProductKind::Lex => "lex",
            ProductKind::Cartesian => "cartesian",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "join" => Ok(ProductKind::Join),
            "lex" | "lexicographic" => Ok(ProductKind::Lex),
            "cartesian" | "box" => Ok(ProductKind::Cartesian),
            other => Err(Error::InvalidParameter(format!(
                "unknown product kind {other:?}"
            ))),
        }
    }
}

/// Predicted versus observed AD spectrum of a product.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductSpectrumReport {
    pub kind: ProductKind,
    pub factors: [String; 2],
    pub vertices: usize,
    pub diameter: usize,
    /// Lexicographic products only.
    pub case: Option<LexCase>,
    /// `None` when there is no closed form or its hypotheses fail.
    pub predicted: Option<Spectrum>,
    pub observed: Spectrum,
    pub max_mismatch: Option<f64>,
    pub tolerance: f64,
    /// Why no prediction was made, if none was.
    pub note: Option<String>,
}

impl ProductSpectrumReport {
    /// The prediction exists and matches within tolerance.
    pub fn agrees(&self) -> bool {
        self.max_mismatch.is_some_and(|e| e <= self.tolerance)
    }
}

/// Builds the product, computes its AD spectrum, and compares it with the
/// closed form when one exists. Hypothesis failures of the closed form are
/// recorded in `note` rather than returned as errors.
pub fn product_report(
    kind: ProductKind,
    (g_label, g): (&str, &Graph),
    (h_label, h): (&str, &Graph),
) -> Result<ProductSpectrumReport> {
    let product = kind.build(g, h);
    let ad = ad_matrix(&product)?;
    let observed = eigenvalues_sym(&ad);
    let closed = match kind {
        ProductKind::Join => Err(Error::Precondition(
            "no closed form for joins; the observed spectrum is the distance spectrum".into(),
        )),
        ProductKind::Lex => lex_ad_spectrum_closed(g, h),
        ProductKind::Cartesian => cartesian_ad_spectrum_closed(g, h),
    };
    let case = match kind {
        ProductKind::Lex => lex_case(g, h).ok(),
        _ => None,
    };
    let (predicted, note) = match closed {
        Ok(s) => (Some(s), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(ProductSpectrumReport {
        kind,
        factors: [g_label.to_string(), h_label.to_string()],
        vertices: product.vertex_count(),
        diameter: all_pairs_distances(&product)?.diameter(),
        case,
        max_mismatch: predicted.as_ref().map(|p| p.max_mismatch(&observed)),
        predicted,
        observed,
        tolerance: PRODUCT_TOL * (1.0 + ad.norm1()),
        note,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_key, Family};

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn iso(a: &Graph, b: &Graph) -> bool {
        canonical_key(a) == canonical_key(b)
    }

    #[test]
    fn joins() {
        let k1 = fam(Family::Complete(1));
        assert!(iso(&join(&k1, &k1), &fam(Family::Complete(2))));
        let p2 = fam(Family::Path(2));
        assert!(iso(&join(&p2, &p2), &fam(Family::Complete(4))));
        assert!(iso(
            &join(&k1, &fam(Family::Empty(3))),
            &fam(Family::Star(4))
        ));
        let s = join_ad_spectrum(&p2, &p2).unwrap();
        assert!(s.matches(&Spectrum::from_values(vec![3.0, -1.0, -1.0, -1.0]), 1e-9));
        let e2 = fam(Family::Empty(2));
        let c4 = join_ad_spectrum(&e2, &e2).unwrap();
        assert!(c4.matches(&Spectrum::from_values(vec![4.0, 0.0, -2.0, -2.0]), 1e-9));
    }

    #[test]
    fn lexicographic_construction() {
        let k2 = fam(Family::Complete(2));
        assert!(iso(&lexicographic(&k2, &k2), &fam(Family::Complete(4))));
        let c4 = fam(Family::Cycle(4));
        assert_eq!(lexicographic(&c4, &fam(Family::Complete(1))), c4);
        let p3e2 = lexicographic(&fam(Family::Path(3)), &fam(Family::Empty(2)));
        assert_eq!((p3e2.vertex_count(), p3e2.edge_count()), (6, 8));
    }

    #[test]
    fn lexicographic_cases() {
        let k2 = fam(Family::Complete(2));
        let p4 = fam(Family::Path(4));
        assert_eq!(lex_case(&p4, &k2).unwrap(), LexCase::Larger);
        let report = product_report(ProductKind::Lex, ("P4", &p4), ("K2", &k2)).unwrap();
        assert!(report.agrees(), "{report:?}");
        let c5 = fam(Family::Cycle(5));
        let e2 = fam(Family::Empty(2));
        assert_eq!(lex_case(&c5, &e2).unwrap(), LexCase::DiameterTwo);
        let predicted = lex_ad_spectrum_closed(&c5, &e2).unwrap();
        assert_eq!(
            predicted
                .values()
                .iter()
                .filter(|&&x| (x + 2.0).abs() < 1e-9)
                .count(),
            5
        );
        assert!(product_report(ProductKind::Lex, ("C5", &c5), ("2K1", &e2))
            .unwrap()
            .agrees());
        assert!(matches!(
            lex_ad_spectrum_closed(&k2, &k2),
            Err(Error::DiameterOne(_))
        ));
        let p3 = fam(Family::Path(3));
        assert_eq!(lex_ad_spectrum_closed(&p4, &p3), Err(Error::NotRegular));
    }

    #[test]
    fn cartesian_construction() {
        let k2 = fam(Family::Complete(2));
        assert!(iso(&cartesian(&k2, &k2), &fam(Family::Cycle(4))));
        let grid = cartesian(&k2, &fam(Family::Path(3)));
        assert_eq!((grid.vertex_count(), grid.edge_count()), (6, 7));
        let q3 = cartesian(&fam(Family::Cycle(4)), &k2);
        assert!(iso(&q3, &fam(Family::Hypercube(3))));
    }

    #[test]
    fn cartesian_spectra() {
        let pairs = [
            (Family::Cycle(4), Family::Cycle(4)),
            (Family::Cycle(6), Family::Cycle(6)),
            (Family::Cycle(5), Family::Complete(2)),
            (Family::Hypercube(3), Family::Complete(2)),
            (Family::Complete(3), Family::Complete(3)),
        ];
        for (a, b) in pairs {
            let r = product_report(ProductKind::Cartesian, ("g", &fam(a)), ("h", &fam(b))).unwrap();
            assert!(r.agrees(), "{a} x {b}: {r:?}");
        }
        assert_eq!(
            cartesian_ad_spectrum_closed(&fam(Family::Frucht), &fam(Family::Complete(2))),
            Err(Error::NotDistanceRegular)
        );
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("lex".parse::<ProductKind>().unwrap(), ProductKind::Lex);
        assert_eq!(ProductKind::Cartesian.to_string(), "cartesian");
        assert!("tensor".parse::<ProductKind>().is_err());
    }
}
