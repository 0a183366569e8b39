use serde::{Deserialize, Serialize};

use super::{ad_chromatic_number, ad_independence_number, chromatic_number, clique_number};
use super::{degree_profile, DegreeProfile};
use crate::error::{Error, Result};
use crate::graph::{ad_matrix_from_distances, all_pairs_distances, Graph, SymIntMatrix};
use crate::partitions::is_diametrical_bipartite;
use crate::spectra::{eigenvalues_sym, Spectrum, DEFAULT_TOL};

/// Eigenvalue sign-classification tolerance, relative to `max(1, ‖M‖₁)`.
pub const SIGN_TOL: f64 = 1e-8;

/// One inequality `left ≤ right`, evaluated numerically.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub left: f64,
    pub right: f64,
    pub holds: bool,
    /// `right − left`; zero when the bound is tight.
    pub gap: f64,
}

impl BoundReport {
    pub fn new(name: impl Into<String>, left: f64, right: f64) -> Self {
        BoundReport {
            name: name.into(),
            left,
            right,
            holds: left <= right + DEFAULT_TOL,
            gap: right - left,
        }
    }
}

struct Ctx {
    n: usize,
    m: usize,
    d: f64,
    profile: DegreeProfile,
    ad: SymIntMatrix,
    spectrum: Spectrum,
}

impl Ctx {
    fn new(g: &Graph) -> Result<Self> {
        let profile = degree_profile(g)?;
        let ad = ad_matrix_from_distances(&all_pairs_distances(g)?);
        Ok(Ctx {
            n: g.vertex_count(),
            m: g.edge_count(),
            d: profile.diameter as f64,
            spectrum: eigenvalues_sym(&ad),
            profile,
            ad,
        })
    }

    /// `2m + d²·d̂(G)`, with `d̂ = 0` for diameter one.
    fn second_moment(&self) -> f64 {
        2.0 * self.m as f64 + self.d * self.d * self.profile.d_hat_sum as f64
    }

    fn sign_tol(&self) -> f64 {
        SIGN_TOL * self.ad.norm1().max(1.0)
    }

    fn lambda1(&self) -> f64 {
        self.spectrum.largest()
    }

    fn lambdan(&self) -> f64 {
        self.spectrum.smallest()
    }

    fn ad_regular(&self) -> Result<f64> {
        self.profile
            .ad_regular
            .map(|r| r as f64)
            .ok_or(Error::NotAdRegular)
    }
}

/// `Σλ = 0` and `Σλ² = 2m + d²·d̂(G)`; the second moment is also compared
/// exactly against `tr(AD²)` and an error is returned on mismatch.
pub fn trace_moment_check(g: &Graph) -> Result<[BoundReport; 2]> {
    let ctx = Ctx::new(g)?;
    let exact = ctx.ad.trace_of_square();
    let d = ctx.profile.diameter as i128;
    let d2 = if d >= 2 { d * d } else { 0 };
    let predicted = 2 * ctx.m as i128 + d2 * ctx.profile.d_hat_sum as i128;
    if exact != predicted {
        return Err(Error::Verification(format!(
            "tr(AD^2) = {exact} but 2m + d^2 d_hat = {predicted}"
        )));
    }
    let n = ctx.n as f64;
    Ok([
        BoundReport::new("trace", ctx.spectrum.sum().abs(), n * DEFAULT_TOL),
        BoundReport::new(
            "second_moment",
            (ctx.spectrum.sum_of_squares() - ctx.second_moment()).abs(),
            n * DEFAULT_TOL * ctx.second_moment().max(1.0),
        ),
    ])
}

/// `λ₁ ≤ √((n−1)/n · (2m + d²·d̂(G)))`.
pub fn spectral_radius_bound(g: &Graph) -> Result<BoundReport> {
    let ctx = Ctx::new(g)?;
    let n = ctx.n as f64;
    Ok(BoundReport::new(
        "spectral_radius",
        ctx.lambda1(),
        ((n - 1.0) / n * ctx.second_moment()).sqrt(),
    ))
}

/// For diametrical bipartite graphs: `|λ_n| ≤ √(m + d²·d̂(G)/2)` and the
/// weaker signed form `λ_n ≤ √(…)`, in that order.
pub fn bipartite_least_eig_bound(g: &Graph) -> Result<[BoundReport; 2]> {
    if !is_diametrical_bipartite(g)? {
        return Err(Error::Precondition(
            "graph is not diametrical bipartite".into(),
        ));
    }
    let ctx = Ctx::new(g)?;
    let right = (ctx.second_moment() / 2.0).sqrt();
    Ok([
        BoundReport::new("bipartite_least_eigenvalue", ctx.lambdan().abs(), right),
        BoundReport::new("bipartite_least_eigenvalue_signed", ctx.lambdan(), right),
    ])
}

/// `α_AD ≤ min(n − n⁺, n − n⁻)`.
pub fn inertia_bound(g: &Graph) -> Result<BoundReport> {
    let alpha = ad_independence_number(g)?;
    let ctx = Ctx::new(g)?;
    let (neg, _, pos) = ctx.spectrum.count_around(0.0, ctx.sign_tol());
    Ok(BoundReport::new(
        "inertia",
        alpha as f64,
        (ctx.n - pos).min(ctx.n - neg) as f64,
    ))
}

/// `1 − λ₁/λ_n ≤ χ_AD`.
pub fn chromatic_lower_bound(g: &Graph) -> Result<BoundReport> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("graph has no edges".into()));
    }
    let chi = ad_chromatic_number(g)?;
    let ctx = Ctx::new(g)?;
    Ok(BoundReport::new(
        "chromatic_lower",
        1.0 - ctx.lambda1() / ctx.lambdan(),
        chi as f64,
    ))
}

/// `λ₁ ≤ −3λ_n` for a planar graph with `χ = χ_AD`. Planarity is taken on
/// the caller's word; `Ok(None)` means `χ ≠ χ_AD`, so the check does not
/// apply.
pub fn planar_fourcolor_check(g: &Graph, planar_assertion: bool) -> Result<Option<BoundReport>> {
    if !planar_assertion {
        return Err(Error::Precondition("planarity was not asserted".into()));
    }
    if chromatic_number(g)? != ad_chromatic_number(g)? {
        return Ok(None);
    }
    let ctx = Ctx::new(g)?;
    Ok(Some(BoundReport::new(
        "planar_four_color",
        ctx.lambda1(),
        -3.0 * ctx.lambdan(),
    )))
}

/// `δ̂̂ ≤ mean AD degree ≤ λ₁ ≤ Δ̂̂`, with all three tight exactly for
/// AD-regular graphs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SandwichReport {
    pub links: [BoundReport; 3],
    pub ad_regular: bool,
    pub all_tight: bool,
}

impl SandwichReport {
    /// All links hold and tightness coincides with AD-regularity.
    pub fn holds(&self) -> bool {
        self.links.iter().all(|l| l.holds) && self.all_tight == self.ad_regular
    }
}

pub fn mean_degree_sandwich(g: &Graph) -> Result<SandwichReport> {
    let ctx = Ctx::new(g)?;
    let p = &ctx.profile;
    let links = [
        BoundReport::new("min_ad_degree", p.min_addeg as f64, p.mean_addeg),
        BoundReport::new("mean_ad_degree", p.mean_addeg, ctx.lambda1()),
        BoundReport::new("max_ad_degree", ctx.lambda1(), p.max_addeg as f64),
    ];
    let tol = ctx.sign_tol();
    Ok(SandwichReport {
        all_tight: links.iter().all(|l| l.gap.abs() <= tol),
        ad_regular: p.is_ad_regular(),
        links,
    })
}

/// For an AD-regular graph of AD degree `r` and a vertex subset of size
/// `n₁`: `n₁(r − λ_n)/n + λ_n ≤` the mean weighted degree of the subset,
/// with weights taken from the AD matrix of the whole graph.
pub fn induced_subgraph_bound(g: &Graph, subset: &[usize]) -> Result<BoundReport> {
    let mut reports = induced_subgraph_bounds(g, std::slice::from_ref(&subset.to_vec()))?;
    Ok(reports.pop().expect("one subset in, one report out"))
}

/// [`induced_subgraph_bound`] for many subsets, sharing one spectrum.
pub fn induced_subgraph_bounds(g: &Graph, subsets: &[Vec<usize>]) -> Result<Vec<BoundReport>> {
    let ctx = Ctx::new(g)?;
    let r = ctx.ad_regular()?;
    let ln = ctx.lambdan();
    subsets
        .iter()
        .map(|subset| {
            let mut seen = vec![false; ctx.n];
            for &v in subset {
                if v >= ctx.n {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: ctx.n,
                    });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::Precondition(format!(
                        "vertex {v} repeated in subset"
                    )));
                }
            }
            if subset.is_empty() {
                return Err(Error::Precondition("subset is empty".into()));
            }
            let n1 = subset.len() as f64;
            let weight = ctx.ad.principal(subset).total();
            Ok(BoundReport::new(
                "induced_subgraph",
                n1 * (r - ln) / ctx.n as f64 + ln,
                weight as f64 / n1,
            ))
        })
        .collect()
}

/// `α_AD ≤ n(−λ_n)/(λ₁ − λ_n)` for AD-regular graphs.
pub fn regular_independence_bound(g: &Graph) -> Result<BoundReport> {
    let ctx = Ctx::new(g)?;
    ctx.ad_regular()?;
    let alpha = ad_independence_number(g)?;
    let (l1, ln) = (ctx.lambda1(), ctx.lambdan());
    Ok(BoundReport::new(
        "regular_independence",
        alpha as f64,
        ctx.n as f64 * (-ln) / (l1 - ln),
    ))
}

/// Clique bound from eigenvalue counts around `−1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CliqueBoundReport {
    /// Eigenvalues below, at and above `−1`.
    pub t_minus: usize,
    pub t_zero: usize,
    pub t_plus: usize,
    /// `min{t⁰ + t⁻ + 1, t⁰ + t⁺, ⌊1 + λ₁⌋}`.
    pub m: usize,
    /// `m = t⁰ + t⁻ + 1` and every eigenvalue above `−1` exceeds `t⁰ + t⁻`.
    pub refined: bool,
    pub omega: usize,
    /// `ω ≤ m`.
    pub stated: BoundReport,
    /// `ω ≤ m − 1` when refined, otherwise the same as `stated`.
    pub sharpened: BoundReport,
    /// The count-based alternative: `m − 1` whenever `m = t⁰ + t⁻ + 1` and
    /// `t⁺ > t⁰ + t⁻`. Kept for comparison; it is not a valid bound.
    pub count_reading: BoundReport,
}

pub fn clique_bound(g: &Graph) -> Result<CliqueBoundReport> {
    let omega = clique_number(g)?;
    let ctx = Ctx::new(g)?;
    let tol = ctx.sign_tol();
    let (t_minus, t_zero, t_plus) = ctx.spectrum.count_around(-1.0, tol);
    let spectral = (1.0 + ctx.lambda1() + tol).floor().max(0.0) as usize;
    let low = t_zero + t_minus;
    let m = (low + 1).min(t_zero + t_plus).min(spectral);
    // Interlacing with a clique of size t⁰ + t⁻ + 1 would force an
    // eigenvalue into (−1, t⁰ + t⁻]; if none lies there, ω ≤ m − 1.
    let refined = m == low + 1
        && ctx
            .spectrum
            .values()
            .iter()
            .filter(|&&x| x > -1.0 + tol)
            .all(|&x| x > low as f64 + tol);
    let by_count = m == low + 1 && t_plus > low;
    let omega_f = omega as f64;
    Ok(CliqueBoundReport {
        t_minus,
        t_zero,
        t_plus,
        m,
        refined,
        omega,
        stated: BoundReport::new("clique", omega_f, m as f64),
        sharpened: BoundReport::new("clique_refined", omega_f, (m - usize::from(refined)) as f64),
        count_reading: BoundReport::new(
            "clique_count_reading",
            omega_f,
            (m - usize::from(by_count)) as f64,
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn fam(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-9
    }

    #[test]
    fn trace_moments() {
        for f in [
            Family::Cycle(4),
            Family::Path(4),
            Family::Complete(3),
            Family::Petersen,
        ] {
            let [t, s] = trace_moment_check(&fam(f)).unwrap();
            assert!(t.holds && s.holds, "{f}");
        }
    }

    #[test]
    fn spectral_radius_examples() {
        let c4 = spectral_radius_bound(&fam(Family::Cycle(4))).unwrap();
        assert!(close(c4.left, 4.0) && close(c4.right, 18f64.sqrt()) && c4.holds);
        let k4 = spectral_radius_bound(&fam(Family::Complete(4))).unwrap();
        assert!(close(k4.right, 3.0) && k4.holds && k4.gap.abs() < 1e-9);
        let p4 = spectral_radius_bound(&fam(Family::Path(4))).unwrap();
        assert!(close(p4.left, 2.0 + 2f64.sqrt()));
    }

    #[test]
    fn bipartite_least_eigenvalue_examples() {
        let [p4, signed] = bipartite_least_eig_bound(&fam(Family::Path(4))).unwrap();
        assert!(close(p4.left, 2.0 + 2f64.sqrt()) && close(p4.right, 12f64.sqrt()) && p4.holds);
        assert!(signed.holds && signed.left < 0.0);
        let [c6, _] = bipartite_least_eig_bound(&fam(Family::Cycle(6))).unwrap();
        assert!(close(c6.left, 5.0) && close(c6.right, 33f64.sqrt()) && c6.holds);
        let [p2, _] = bipartite_least_eig_bound(&fam(Family::Path(2))).unwrap();
        assert!(close(p2.left, 1.0) && close(p2.right, 1.0) && p2.holds);
        assert!(matches!(
            bipartite_least_eig_bound(&fam(Family::Cycle(4))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn inertia_examples() {
        let c4 = inertia_bound(&fam(Family::Cycle(4))).unwrap();
        assert_eq!((c4.left, c4.right), (1.0, 2.0));
        let p4 = inertia_bound(&fam(Family::Path(4))).unwrap();
        assert_eq!(p4.right, 2.0);
        let k3 = inertia_bound(&fam(Family::Complete(3))).unwrap();
        assert_eq!((k3.left, k3.right), (1.0, 1.0));
    }

    #[test]
    fn chromatic_examples() {
        let c4 = chromatic_lower_bound(&fam(Family::Cycle(4))).unwrap();
        assert!(close(c4.left, 3.0) && c4.right == 4.0);
        let k4 = chromatic_lower_bound(&fam(Family::Complete(4))).unwrap();
        assert!(close(k4.left, 4.0) && k4.holds);
        assert!(chromatic_lower_bound(&fam(Family::Path(5))).unwrap().holds);
    }

    #[test]
    fn planar_examples() {
        assert!(
            planar_fourcolor_check(&fam(Family::Cycle(6)), true)
                .unwrap()
                .unwrap()
                .holds
        );
        assert!(
            planar_fourcolor_check(&fam(Family::Path(6)), true)
                .unwrap()
                .unwrap()
                .holds
        );
        assert_eq!(
            planar_fourcolor_check(&fam(Family::Path(5)), true).unwrap(),
            None
        );
        assert!(planar_fourcolor_check(&fam(Family::Path(5)), false).is_err());
    }

    #[test]
    fn sandwich_examples() {
        let c6 = mean_degree_sandwich(&fam(Family::Cycle(6))).unwrap();
        assert!(c6.ad_regular && c6.all_tight && c6.holds());
        assert!(close(c6.links[1].right, 5.0));
        let p4 = mean_degree_sandwich(&fam(Family::Path(4))).unwrap();
        assert!(!p4.ad_regular && !p4.all_tight && p4.holds());
        let k5 = mean_degree_sandwich(&fam(Family::Complete(5))).unwrap();
        assert!(k5.all_tight && k5.links.iter().all(|l| close(l.left, 4.0)));
    }

    #[test]
    fn induced_subgraph_examples() {
        let c6 = fam(Family::Cycle(6));
        let all = induced_subgraph_bound(&c6, &[0, 1, 2, 3, 4, 5]).unwrap();
        assert!(close(all.left, 5.0) && close(all.right, 5.0) && all.holds);
        let one = induced_subgraph_bound(&c6, &[0]).unwrap();
        assert_eq!(one.right, 0.0);
        assert!(one.holds);
        let pair = induced_subgraph_bound(&c6, &[0, 3]).unwrap();
        assert_eq!(pair.right, 3.0);
        assert!(pair.holds);
        assert_eq!(
            induced_subgraph_bound(&fam(Family::Path(4)), &[0]),
            Err(Error::NotAdRegular)
        );
        assert!(induced_subgraph_bound(&c6, &[]).is_err());
        assert!(induced_subgraph_bound(&c6, &[1, 1]).is_err());
    }

    #[test]
    fn regular_independence_examples() {
        let c4 = regular_independence_bound(&fam(Family::Cycle(4))).unwrap();
        assert!(close(c4.right, 4.0 / 3.0) && c4.holds);
        let k5 = regular_independence_bound(&fam(Family::Complete(5))).unwrap();
        assert!(close(k5.right, 1.0) && k5.holds);
        assert!(
            regular_independence_bound(&fam(Family::Cycle(6)))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn clique_examples() {
        let k4 = clique_bound(&fam(Family::Complete(4))).unwrap();
        assert_eq!(
            (k4.t_zero, k4.t_minus, k4.t_plus, k4.m, k4.omega),
            (3, 0, 1, 4, 4)
        );
        let c4 = clique_bound(&fam(Family::Cycle(4))).unwrap();
        assert_eq!(
            (c4.t_minus, c4.t_zero, c4.t_plus, c4.m, c4.omega),
            (2, 0, 2, 2, 2)
        );
        assert!(c4.stated.holds);
        assert!(clique_bound(&fam(Family::Path(4))).unwrap().stated.holds);
    }

    #[test]
    fn clique_count_reading_fails_on_p3() {
        // AD(P3) has eigenvalues 1 + √3, 1 − √3, −2: t⁻ = 1, t⁰ = 0, t⁺ = 2.
        let p3 = clique_bound(&fam(Family::Path(3))).unwrap();
        assert_eq!(
            (p3.t_minus, p3.t_zero, p3.t_plus, p3.m, p3.omega),
            (1, 0, 2, 2, 2)
        );
        assert!(!p3.refined && p3.sharpened.holds);
        assert!(!p3.count_reading.holds);
    }
}
