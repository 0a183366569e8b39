//! Population sweeps: every identity and bound checked instance by
//! instance, with failures kept alongside the offending graph.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    ad_matrix, all_pairs_distances, connected_graphs, random_population, weighted_view, Family,
    Graph,
};
use crate::invariants::{self as inv, ALPHA_CAP, CHI_CAP, OMEGA_CAP};
use crate::par::Execution;
use crate::partitions::{self as part, OddCycleCount, ENUMERATION_CAP};
use crate::products::{self, PRODUCT_TOL};
use crate::spectra::{
    char_poly_exact, cycle_spectrum_closed, determinant_exact, double_star_charpoly_closed,
    eigenvalues_sym, path_charpoly_closed, CharPoly, Spectrum,
};

pub const DEFAULT_SEED: u64 = 42;

/// One member of a population. Product suites use pairs, with the second
/// factor in `second`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Instance {
    pub label: String,
    pub family: Option<Family>,
    pub graph: Graph,
    pub second: Option<Box<Instance>>,
}

impl Instance {
    pub fn new(label: impl Into<String>, graph: Graph) -> Self {
        Instance {
            label: label.into(),
            family: None,
            graph,
            second: None,
        }
    }

    pub fn from_family(family: Family) -> Result<Self> {
        Ok(Instance {
            label: family.to_string(),
            graph: family.build()?,
            family: Some(family),
            second: None,
        })
    }

    pub fn pair(first: Instance, second: Instance) -> Self {
        Instance {
            label: format!("{}*{}", first.label, second.label),
            second: Some(Box::new(second)),
            ..first
        }
    }
}

/// A described, seeded list of instances.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Population {
    pub description: String,
    pub seed: u64,
    pub instances: Vec<Instance>,
}

impl Population {
    /// Parses `part+part+…`, where each part is one of
    ///
    /// - `exhaustive:N` — every connected graph on `2..=N` vertices, up to
    ///   isomorphism;
    /// - `random:COUNT:MAXN` — seeded random connected graphs on
    ///   `3..=MAXN` vertices;
    /// - a family, with any numeric parameter optionally a range `a..b`
    ///   (inclusive), e.g. `cycle:4..24` or `double_star:2..6,2..6`;
    /// - `F*H` — a pair of single families for the product suites.
    pub fn parse(spec: &str, seed: u64) -> Result<Population> {
        let mut instances = Vec::new();
        for part in spec.split('+').map(str::trim).filter(|p| !p.is_empty()) {
            instances.extend(parse_part(part, seed)?);
        }
        if instances.is_empty() {
            return Err(Error::InvalidParameter(format!(
                "empty population {spec:?}"
            )));
        }
        Ok(Population {
            description: spec.to_string(),
            seed,
            instances,
        })
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}

fn parse_number(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("expected a number, got {s:?}")))
}

fn parse_part(part: &str, seed: u64) -> Result<Vec<Instance>> {
    if let Some((a, b)) = part.split_once('*') {
        let first = Instance::from_family(a.trim().parse()?)?;
        let second = Instance::from_family(b.trim().parse()?)?;
        return Ok(vec![Instance::pair(first, second)]);
    }
    let (name, params) = part.split_once(':').unwrap_or((part, ""));
    match name {
        "exhaustive" => {
            let max = parse_number(params)?;
            if max > 9 {
                return Err(Error::InvalidParameter(
                    "exhaustive populations stop at 9 vertices".into(),
                ));
            }
            Ok((2..=max)
                .flat_map(|n| {
                    connected_graphs(n)
                        .into_iter()
                        .enumerate()
                        .map(move |(i, g)| Instance::new(format!("connected{n}[{i}]"), g))
                })
                .collect())
        }
        "random" => {
            let (count, max) = params
                .split_once(':')
                .ok_or_else(|| Error::InvalidParameter("use random:COUNT:MAXN".into()))?;
            let (count, max) = (parse_number(count)?, parse_number(max)?);
            if max < 3 {
                return Err(Error::InvalidParameter(
                    "random populations need MAXN >= 3".into(),
                ));
            }
            Ok(random_population(count, 3, max, seed)
                .into_iter()
                .enumerate()
                .map(|(i, g)| Instance::new(format!("random[{i}]"), g))
                .collect())
        }
        _ if params.contains("..") => {
            let ranges = params
                .split(',')
                .map(|p| match p.split_once("..") {
                    Some((lo, hi)) => Ok(parse_number(lo)?..=parse_number(hi)?),
                    None => parse_number(p).map(|x| x..=x),
                })
                .collect::<Result<Vec<_>>>()?;
            let mut combos: Vec<Vec<usize>> = vec![vec![]];
            for r in ranges {
                combos = combos
                    .into_iter()
                    .flat_map(|c| {
                        r.clone().map(move |x| {
                            let mut c = c.clone();
                            c.push(x);
                            c
                        })
                    })
                    .collect();
            }
            combos
                .into_iter()
                .map(|c| {
                    let joined: Vec<String> = c.iter().map(ToString::to_string).collect();
                    Instance::from_family(format!("{name}:{}", joined.join(",")).parse()?)
                })
                .collect()
        }
        _ => Ok(vec![Instance::from_family(part.parse()?)?]),
    }
}

/// Every suite the sweep can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    PathCharPoly,
    CycleSpectrum,
    DoubleStarCharPoly,
    Determinant,
    DiametricalBipartiteCycles,
    Coefficients,
    SpectralSymmetry,
    OddCycles,
    TraceMoments,
    SpectralRadius,
    BipartiteLeastEigenvalue,
    Inertia,
    ChromaticLower,
    PlanarFourColor,
    AllOnesEigenvector,
    MeanDegreeSandwich,
    InducedSubgraph,
    RegularIndependence,
    Clique,
    Lexicographic,
    Cartesian,
}

const GENERAL: &str = "exhaustive:7+random:100:8";
const BOUNDS: &str = "exhaustive:7+random:500:12";
const LEX: &str = "path:4*complete:2+path:4*complete:3+path:4*empty:2+path:4*cycle:4\
+path:5*complete:2+path:5*complete:3+path:5*empty:2+path:5*cycle:4\
+cycle:5*complete:2+cycle:5*complete:3+cycle:5*empty:2+cycle:5*cycle:4\
+cycle:6*complete:2+cycle:6*complete:3+cycle:6*empty:2+cycle:6*cycle:4";
const CARTESIAN: &str = "cycle:4*cycle:4+cycle:6*cycle:6+cycle:4*cycle:6+cycle:5*cycle:5\
+cycle:5*complete:2+cycle:6*complete:2+cycle:8*complete:2+cycle:5*complete:3\
+complete:2*complete:2+complete:3*complete:3+complete:3*complete:4\
+hypercube:3*complete:2+hypercube:3*cycle:4+hypercube:3*cycle:6+hypercube:3*hypercube:3\
+petersen*complete:2+petersen*cycle:4";

impl Theorem {
    pub const ALL: [Theorem; 21] = [
        Theorem::PathCharPoly,
        Theorem::CycleSpectrum,
        Theorem::DoubleStarCharPoly,
        Theorem::Determinant,
        Theorem::DiametricalBipartiteCycles,
        Theorem::Coefficients,
        Theorem::SpectralSymmetry,
        Theorem::OddCycles,
        Theorem::TraceMoments,
        Theorem::SpectralRadius,
        Theorem::BipartiteLeastEigenvalue,
        Theorem::Inertia,
        Theorem::ChromaticLower,
        Theorem::AllOnesEigenvector,
        Theorem::MeanDegreeSandwich,
        Theorem::InducedSubgraph,
        Theorem::RegularIndependence,
        Theorem::PlanarFourColor,
        Theorem::Clique,
        Theorem::Lexicographic,
        Theorem::Cartesian,
    ];

    pub fn id(self) -> &'static str {
        use Theorem::*;
        match self {
            PathCharPoly => "2.1",
            CycleSpectrum => "2.2",
            DoubleStarCharPoly => "2.3",
            Determinant => "5.1",
            DiametricalBipartiteCycles => "5.2",
            Coefficients => "5.3",
            SpectralSymmetry => "5.4",
            OddCycles => "cor5.1",
            TraceMoments => "6.1",
            SpectralRadius => "6.2",
            BipartiteLeastEigenvalue => "6.3",
            Inertia => "6.4",
            ChromaticLower => "6.5",
            AllOnesEigenvector => "6.6",
            MeanDegreeSandwich => "6.7",
            InducedSubgraph => "6.8",
            RegularIndependence => "6.9",
            PlanarFourColor => "cor6.1",
            Clique => "clique",
            Lexicographic => "lex",
            Cartesian => "cartesian",
        }
    }

    pub fn title(self) -> &'static str {
        use Theorem::*;
        match self {
            PathCharPoly => "closed-form AD characteristic polynomial of paths",
            CycleSpectrum => "closed-form AD spectrum of cycles",
            DoubleStarCharPoly => "closed-form AD characteristic polynomial of double stars",
            Determinant => "determinant as a sum over spanning AD partitions",
            DiametricalBipartiteCycles => {
                "diametrical bipartite <=> weighted view bipartite <=> no odd AD cycles"
            }
            Coefficients => "characteristic coefficients from AD partitions, c2 and c3",
            SpectralSymmetry => {
                "diametrical bipartite <=> odd coefficients vanish <=> symmetric spectrum"
            }
            OddCycles => "shortest odd AD cycles counted by -c_(2k+1)/2",
            TraceMoments => "trace and second spectral moment",
            SpectralRadius => "spectral radius upper bound",
            BipartiteLeastEigenvalue => "least eigenvalue bound for diametrical bipartite graphs",
            Inertia => "inertia bound on the AD independence number",
            ChromaticLower => "spectral lower bound on the AD chromatic number",
            AllOnesEigenvector => "AD-regular <=> all-ones eigenvector",
            MeanDegreeSandwich => "min AD degree <= mean <= spectral radius <= max AD degree",
            InducedSubgraph => "mean AD degree of vertex subsets of AD-regular graphs",
            RegularIndependence => "ratio bound on the AD independence number",
            PlanarFourColor => "planar graphs with equal chromatic numbers",
            Clique => "clique number from eigenvalue counts around -1",
            Lexicographic => "closed-form AD spectrum of lexicographic products",
            Cartesian => "closed-form AD spectrum of Cartesian products",
        }
    }

    pub fn default_population(self) -> &'static str {
        use Theorem::*;
        match self {
            PathCharPoly => "path:2..15",
            CycleSpectrum => "cycle:3..24",
            DoubleStarCharPoly => "double_star:2..6,2..6",
            Determinant
            | DiametricalBipartiteCycles
            | Coefficients
            | SpectralSymmetry
            | OddCycles => GENERAL,
            Lexicographic => LEX,
            Cartesian => CARTESIAN,
            _ => BOUNDS,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == key)
            .ok_or_else(|| {
                let ids: Vec<&str> = Theorem::ALL.iter().map(|t| t.id()).collect();
                Error::InvalidParameter(format!(
                    "unknown theorem {s:?}; expected one of {}",
                    ids.join(", ")
                ))
            })
    }
}

/// Result of checking one instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// The hypotheses do not apply to this instance.
    Skip(String),
    Fail(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub label: String,
    pub graph: Graph,
    pub second: Option<Graph>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: String,
    pub title: String,
    pub population: String,
    pub seed: u64,
    pub instances: usize,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub wall_time_ms: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks every instance of `population` and collects failures in
/// population order.
pub fn run(theorem: Theorem, population: &Population, exec: Execution) -> VerifyReport {
    let start = Instant::now();
    let seed = population.seed;
    let outcomes = exec.map(&population.instances, |inst| {
        check(theorem, inst, seed).unwrap_or_else(|e| Outcome::Fail(format!("error: {e}")))
    });
    let mut failures = Vec::new();
    let mut skipped = 0;
    for (inst, outcome) in population.instances.iter().zip(outcomes) {
        match outcome {
            Outcome::Pass => {}
            Outcome::Skip(_) => skipped += 1,
            Outcome::Fail(detail) => failures.push(Failure {
                label: inst.label.clone(),
                graph: inst.graph.clone(),
                second: inst.second.as_ref().map(|s| s.graph.clone()),
                detail,
            }),
        }
    }
    VerifyReport {
        theorem: theorem.id().to_string(),
        title: theorem.title().to_string(),
        population: population.description.clone(),
        seed,
        instances: population.len(),
        checked: population.len() - skipped,
        skipped,
        failures,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Parses the population (or the theorem's default) and runs the suite.
pub fn run_spec(
    theorem: Theorem,
    spec: Option<&str>,
    seed: u64,
    exec: Execution,
) -> Result<VerifyReport> {
    let population = Population::parse(spec.unwrap_or(theorem.default_population()), seed)?;
    Ok(run(theorem, &population, exec))
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

fn bound(report: &inv::BoundReport) -> Outcome {
    ensure(report.holds, || {
        format!("{}: {} > {}", report.name, report.left, report.right)
    })
}

fn all_bounds<'a>(reports: impl IntoIterator<Item = &'a inv::BoundReport>) -> Outcome {
    reports
        .into_iter()
        .map(bound)
        .find(|o| matches!(o, Outcome::Fail(_)))
        .unwrap_or(Outcome::Pass)
}

fn over_cap(n: usize, cap: usize) -> Option<Outcome> {
    (n > cap).then(|| Outcome::Skip(format!("n = {n} exceeds the exact-solver cap {cap}")))
}

fn ad_charpoly(g: &Graph) -> Result<CharPoly> {
    Ok(char_poly_exact(&ad_matrix(g)?))
}

/// Cyclomatic number at most 3 certifies planarity: both Kuratowski
/// graphs have cyclomatic number at least 4.
fn certified_planar(g: &Graph) -> bool {
    g.edge_count() < g.vertex_count() + 3
}

/// Deterministic per-instance RNG.
fn instance_rng(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h = (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Every nonempty subset for `n ≤ 10`, otherwise 256 random ones.
fn subsets_for(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    if n <= 10 {
        return (1u32..(1 << n))
            .map(|mask| (0..n).filter(|&v| mask & (1 << v) != 0).collect())
            .collect();
    }
    (0..256)
        .map(|_| {
            let size = rng.gen_range(1..=n);
            let mut s = sample(rng, n, size).into_vec();
            s.sort_unstable();
            s
        })
        .collect()
}

fn partner(inst: &Instance) -> Result<&Instance> {
    inst.second
        .as_deref()
        .ok_or_else(|| Error::InvalidParameter(format!("{} is not a pair F*H", inst.label)))
}

fn spectra_agree(predicted: &Spectrum, product: &Graph) -> Result<Outcome> {
    let ad = ad_matrix(product)?;
    let observed = eigenvalues_sym(&ad);
    let mismatch = predicted.max_mismatch(&observed);
    let tol = PRODUCT_TOL * (1.0 + ad.norm1());
    Ok(ensure(mismatch <= tol, || {
        format!("spectrum mismatch {mismatch:.3e} exceeds {tol:.3e}")
    }))
}

pub fn check(theorem: Theorem, inst: &Instance, seed: u64) -> Result<Outcome> {
    use Theorem::*;
    let g = &inst.graph;
    let n = g.vertex_count();
    let skip = |why: &str| Ok(Outcome::Skip(why.to_string()));
    Ok(match theorem {
        PathCharPoly => {
            let Some(Family::Path(len)) = inst.family else {
                return skip("not a path");
            };
            let exact = ad_charpoly(g)?;
            let expected = if len == 2 {
                CharPoly::from_i64(&[1, 0, -1])
            } else {
                path_charpoly_closed(len)?
            };
            ensure(exact == expected, || {
                format!("Berkowitz {exact} vs closed form {expected}")
            })
        }
        CycleSpectrum => {
            let Some(Family::Cycle(len)) = inst.family else {
                return skip("not a cycle");
            };
            match cycle_spectrum_closed(len) {
                Err(Error::DiameterOne(_)) if len == 3 => Outcome::Pass,
                Err(e) => Outcome::Fail(format!("closed form rejected C{len}: {e}")),
                Ok(closed) => {
                    let numeric = eigenvalues_sym(&ad_matrix(g)?);
                    let gap = closed.max_mismatch(&numeric);
                    ensure(gap <= 1e-9, || format!("multiset mismatch {gap:.3e}"))
                }
            }
        }
        DoubleStarCharPoly => {
            let Some(Family::DoubleStar(a, b)) = inst.family else {
                return skip("not a double star");
            };
            let exact = ad_charpoly(g)?;
            let closed = double_star_charpoly_closed(a, b)?;
            ensure(exact == closed, || {
                format!("Berkowitz {exact} vs closed form {closed}")
            })
        }
        Determinant => {
            if let Some(o) = over_cap(n, ENUMERATION_CAP) {
                return Ok(o);
            }
            let exact = determinant_exact(&ad_matrix(g)?);
            let (via, count) = part::det_partition_summary(g)?;
            ensure(exact == via, || {
                format!("Berkowitz det {exact} vs {via} from {count} partitions")
            })
        }
        DiametricalBipartiteCycles => {
            if let Some(o) = over_cap(n, ENUMERATION_CAP) {
                return Ok(o);
            }
            let db = part::is_diametrical_bipartite(g)?;
            let view_bipartite = match weighted_view(g) {
                Ok(w) => w.underlying().is_bipartite(),
                Err(Error::DiameterOne(_)) => g.is_bipartite(),
                Err(e) => return Err(e),
            };
            let odd = part::odd_ad_cycle_lengths(g)?;
            let no_odd = odd.iter().all(|&(_, c)| c == 0);
            ensure(db == view_bipartite && db == no_odd, || {
                format!("diametrical bipartite {db}, weighted view bipartite {view_bipartite}, no odd AD cycles {no_odd}")
            })
        }
        Coefficients => {
            if let Some(o) = over_cap(n, ENUMERATION_CAP) {
                return Ok(o);
            }
            let exact = ad_charpoly(g)?;
            let via = part::charpoly_via_partitions(g)?;
            if exact != via {
                return Ok(Outcome::Fail(format!(
                    "Berkowitz {exact} vs partitions {via}"
                )));
            }
            let c2 = part::c2_closed(g)?;
            if &c2 != exact.coeff(2) {
                return Ok(Outcome::Fail(format!(
                    "c2 closed {c2} vs {}",
                    exact.coeff(2)
                )));
            }
            if n >= 3 {
                let c3 = part::c3_closed(g)?;
                if &c3 != exact.coeff(3) {
                    return Ok(Outcome::Fail(format!(
                        "c3 closed {c3} vs {}",
                        exact.coeff(3)
                    )));
                }
            }
            Outcome::Pass
        }
        SpectralSymmetry => {
            let db = part::is_diametrical_bipartite(g)?;
            let odd_vanish = ad_charpoly(g)?.odd_coefficients_vanish();
            let symmetric = eigenvalues_sym(&ad_matrix(g)?).is_symmetric_about_zero(1e-8);
            ensure(db == odd_vanish && db == symmetric, || {
                format!("diametrical bipartite {db}, odd coefficients vanish {odd_vanish}, symmetric {symmetric}")
            })
        }
        OddCycles => {
            if let Some(o) = over_cap(n, ENUMERATION_CAP) {
                return Ok(o);
            }
            let odd = part::odd_ad_cycle_lengths(g)?;
            match part::odd_ad_cycle_count_from_coeffs(&ad_charpoly(g)?)? {
                OddCycleCount::NoOddCycles => ensure(odd.iter().all(|&(_, c)| c == 0), || {
                    format!("odd coefficients vanish but AD cycles exist: {odd:?}")
                }),
                OddCycleCount::Shortest { k, count } => {
                    let len = 2 * k + 1;
                    let shorter: Vec<_> = odd.iter().filter(|&&(l, c)| l < len && c > 0).collect();
                    let direct = odd.iter().find(|&&(l, _)| l == len).map_or(0, |&(_, c)| c);
                    let weighted = part::weighted_ad_cycle_sum(g, len)?;
                    ensure(shorter.is_empty() && count == BigInt::from(direct), || {
                        format!(
                            "length {len}: -c/2 = {count}, direct count {direct}, sum of d^(antipodal links) {weighted}, shorter odd cycles {shorter:?}"
                        )
                    })
                }
            }
        }
        TraceMoments => {
            let [trace, second] = inv::trace_moment_check(g)?;
            let profile = inv::degree_profile(g)?;
            let d = if profile.diameter >= 2 {
                profile.diameter
            } else {
                0
            };
            let total: u64 = profile.addegrees.iter().sum();
            let expected = 2 * g.edge_count() + d * profile.d_hat_sum;
            if total as usize != expected || total as i64 != ad_matrix(g)?.total() {
                return Ok(Outcome::Fail(format!(
                    "AD degree sum {total} vs 2m + d*d_hat = {expected}"
                )));
            }
            all_bounds([&trace, &second])
        }
        SpectralRadius => bound(&inv::spectral_radius_bound(g)?),
        BipartiteLeastEigenvalue => match inv::bipartite_least_eig_bound(g) {
            Err(Error::Precondition(_)) => return skip("not diametrical bipartite"),
            r => all_bounds(&r?),
        },
        Inertia => {
            if let Some(o) = over_cap(n, ALPHA_CAP) {
                return Ok(o);
            }
            bound(&inv::inertia_bound(g)?)
        }
        ChromaticLower => {
            if let Some(o) = over_cap(n, CHI_CAP) {
                return Ok(o);
            }
            bound(&inv::chromatic_lower_bound(g)?)
        }
        PlanarFourColor => {
            if let Some(o) = over_cap(n, CHI_CAP) {
                return Ok(o);
            }
            if !certified_planar(g) {
                return skip("planarity not certified");
            }
            match inv::planar_fourcolor_check(g, true)? {
                None => return skip("chromatic and AD chromatic numbers differ"),
                Some(r) => bound(&r),
            }
        }
        AllOnesEigenvector => {
            let regular = inv::degree_profile(g)?.is_ad_regular();
            let eigen = inv::all_ones_is_eigenvector(g)?;
            ensure(regular == eigen, || {
                format!("AD-regular {regular}, all-ones eigenvector {eigen}")
            })
        }
        MeanDegreeSandwich => {
            let s = inv::mean_degree_sandwich(g)?;
            ensure(s.holds(), || {
                format!(
                    "links {:?}, all tight {}, AD-regular {}",
                    s.links
                        .iter()
                        .map(|l| (l.left, l.right))
                        .collect::<Vec<_>>(),
                    s.all_tight,
                    s.ad_regular
                )
            })
        }
        InducedSubgraph => {
            if !inv::degree_profile(g)?.is_ad_regular() {
                return skip("not AD-regular");
            }
            let subsets = subsets_for(n, &mut instance_rng(seed, &inst.label));
            let reports = inv::induced_subgraph_bounds(g, &subsets)?;
            match reports.iter().position(|r| !r.holds) {
                None => Outcome::Pass,
                Some(i) => Outcome::Fail(format!(
                    "subset {:?}: {} > {}",
                    subsets[i], reports[i].left, reports[i].right
                )),
            }
        }
        RegularIndependence => {
            if let Some(o) = over_cap(n, ALPHA_CAP) {
                return Ok(o);
            }
            match inv::regular_independence_bound(g) {
                Err(Error::NotAdRegular) => return skip("not AD-regular"),
                r => bound(&r?),
            }
        }
        Clique => {
            if let Some(o) = over_cap(n, OMEGA_CAP) {
                return Ok(o);
            }
            let c = inv::clique_bound(g)?;
            all_bounds([&c.stated, &c.sharpened])
        }
        Lexicographic => {
            let h = &partner(inst)?.graph;
            match products::lex_ad_spectrum_closed(g, h) {
                Err(Error::DiameterOne(_)) => return skip("product is complete"),
                Err(Error::NotRegular) => return skip("second factor not regular"),
                r => spectra_agree(&r?, &products::lexicographic(g, h))?,
            }
        }
        Cartesian => {
            let h = &partner(inst)?.graph;
            if n * h.vertex_count() > 64 {
                return skip("product has more than 64 vertices");
            }
            match products::cartesian_ad_spectrum_closed(g, h) {
                Err(Error::NotDistanceRegular) => return skip("factor not distance-regular"),
                Err(Error::Verification(msg)) => {
                    Outcome::Fail(format!("decomposition check: {msg}"))
                }
                r => spectra_agree(&r?, &products::cartesian(g, h))?,
            }
        }
    })
}

/// Diameter of the lexicographic product, for reporting the case split.
pub fn lex_case_of(inst: &Instance) -> Result<products::LexCase> {
    products::lex_case(&inst.graph, &partner(inst)?.graph)
}

/// Convenience for callers that only hold a graph: the diameter, or an
/// error for disconnected input.
pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(all_pairs_distances(g)?.diameter())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn population_parsing() {
        let p = Population::parse("cycle:4..6+petersen", 1).unwrap();
        let labels: Vec<_> = p.instances.iter().map(|i| i.label.as_str()).collect();
        assert_eq!(labels, ["cycle:4", "cycle:5", "cycle:6", "petersen"]);
        assert_eq!(
            Population::parse("double_star:2..3,2..4", 1).unwrap().len(),
            6
        );
        assert_eq!(
            Population::parse("exhaustive:4", 1).unwrap().len(),
            1 + 2 + 6
        );
        let r = Population::parse("random:5:8", 9).unwrap();
        assert_eq!(r.len(), 5);
        assert_eq!(r, Population::parse("random:5:8", 9).unwrap());
        let pair = Population::parse("cycle:6*complete:2", 1).unwrap();
        assert_eq!(
            pair.instances[0].second.as_ref().unwrap().label,
            "complete:2"
        );
        assert!(Population::parse("nonsense:3", 1).is_err());
        assert!(Population::parse("", 1).is_err());
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("7.7".parse::<Theorem>().is_err());
    }

    #[test]
    fn family_suites_pass() {
        for t in [
            Theorem::PathCharPoly,
            Theorem::CycleSpectrum,
            Theorem::DoubleStarCharPoly,
        ] {
            let r = run_spec(t, None, DEFAULT_SEED, Execution::Parallel).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.skipped, 0);
        }
    }

    #[test]
    fn small_sweeps_pass() {
        for t in [
            Theorem::Determinant,
            Theorem::SpectralSymmetry,
            Theorem::Clique,
            Theorem::InducedSubgraph,
        ] {
            let r = run_spec(t, Some("exhaustive:5+cycle:6"), 3, Execution::Sequential).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn odd_cycle_count_failure_is_reported_with_graph() {
        let r = run_spec(
            Theorem::OddCycles,
            Some("cycle:5"),
            0,
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!(r.failures.len(), 1);
        assert!(r.failures[0].detail.contains("direct count 10"));
        assert_eq!(r.failures[0].graph.vertex_count(), 5);
    }

    #[test]
    fn skips_are_counted() {
        let r = run_spec(
            Theorem::RegularIndependence,
            Some("path:4+cycle:6"),
            0,
            Execution::Sequential,
        )
        .unwrap();
        assert_eq!((r.skipped, r.checked), (1, 1));
        assert!(r.passed());
    }
}
