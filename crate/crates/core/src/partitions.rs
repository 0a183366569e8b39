//! AD cycles and AD partitions: the combinatorial side of the determinant.
//!
//! An AD partition of a vertex subset splits it into blocks that are
//! either a pair (adjacent or antipodal) or a cycle whose consecutive
//! vertices are adjacent or antipodal. Such partitions are exactly the
//! elementary subgraphs of the weighted view, and each one contributes
//! `(−1)^(p+p₁) 2^p₁ d^(2a+a₁)` to the characteristic coefficient `c_k`
//! of a `k`-vertex partition, where `p` counts pairs, `p₁` cycles, `a`
//! antipodal pairs and `a₁` antipodal links inside cycles.
//!
//! Enumeration branches on the smallest uncovered vertex, so every
//! elementary subgraph is produced once. A cycle is emitted in a single
//! orientation: it starts at its smallest vertex and its second vertex is
//! smaller than its last.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{ad_matrix, all_pairs_distances, Graph, SymIntMatrix};
use crate::spectra::CharPoly;

/// Largest graph accepted by the exhaustive enumerations.
pub const ENUMERATION_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockKind {
    AdjacentPair,
    AntipodalPair,
    /// Cycle block; `antipodal_links` counts consecutive antipodal pairs.
    Cycle {
        antipodal_links: usize,
    },
}

/// One block of an AD partition. Cycle blocks keep their cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ADPartition {
    pub blocks: Vec<Block>,
}

impl ADPartition {
    /// Number of size-2 blocks.
    pub fn p(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| !matches!(b.kind, BlockKind::Cycle { .. }))
            .count()
    }

    /// Number of cycle blocks.
    pub fn p1(&self) -> usize {
        self.blocks.len() - self.p()
    }

    /// Antipodal size-2 blocks.
    pub fn a(&self) -> usize {
        self.blocks
            .iter()
            .filter(|b| b.kind == BlockKind::AntipodalPair)
            .count()
    }

    /// Antipodal consecutive pairs inside cycle blocks.
    pub fn a1(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| match b.kind {
                BlockKind::Cycle { antipodal_links } => antipodal_links,
                _ => 0,
            })
            .sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(|b| b.vertices.len()).sum()
    }

    /// `(−1)^(p+p₁) 2^p₁ d^(2a+a₁)`.
    pub fn coefficient_term(&self, diameter: usize) -> BigInt {
        let (p, p1) = (self.p(), self.p1());
        let mut t = BigInt::one() << p1;
        t *= BigInt::from(diameter).pow((2 * self.a() + self.a1()) as u32);
        if (p + p1) % 2 == 1 {
            -t
        } else {
            t
        }
    }

    /// The matching elementary subgraph of the weighted view.
    pub fn to_elementary_subgraph(&self, diameter: usize) -> ElementarySubgraph {
        let weight = |antipodal: bool| if antipodal { diameter } else { 1 };
        let components = self
            .blocks
            .iter()
            .map(|b| match b.kind {
                BlockKind::AdjacentPair | BlockKind::AntipodalPair => Component::Edge {
                    u: b.vertices[0],
                    v: b.vertices[1],
                    weight: weight(b.kind == BlockKind::AntipodalPair),
                },
                BlockKind::Cycle { .. } => Component::Cycle {
                    vertices: b.vertices.clone(),
                },
            })
            .collect();
        ElementarySubgraph { components }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Component {
    Edge { u: usize, v: usize, weight: usize },
    Cycle { vertices: Vec<usize> },
}

/// Vertex-disjoint edges and cycles of the weighted view.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementarySubgraph {
    pub components: Vec<Component>,
}

/// Adjacent-or-antipodal relation with the antipodal flag per pair.
struct Relation {
    n: usize,
    diameter: usize,
    /// 0 = unrelated, 1 = adjacent, 2 = antipodal.
    kind: Vec<u8>,
    neighbors: Vec<Vec<usize>>,
}

impl Relation {
    fn new(g: &Graph) -> Result<Self> {
        let ad = ad_matrix(g)?;
        let diameter = all_pairs_distances(g)?.diameter();
        Ok(Self::from_ad(&ad, diameter))
    }

    fn from_ad(ad: &SymIntMatrix, diameter: usize) -> Self {
        let n = ad.n();
        let mut kind = vec![0u8; n * n];
        let mut neighbors = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                let w = ad.get(u, v);
                if u != v && w != 0 {
                    kind[u * n + v] = if diameter >= 2 && w == diameter as i64 {
                        2
                    } else {
                        1
                    };
                    neighbors[u].push(v);
                }
            }
        }
        Relation {
            n,
            diameter,
            kind,
            neighbors,
        }
    }

    fn related(&self, u: usize, v: usize) -> bool {
        self.kind[u * self.n + v] != 0
    }

    fn antipodal(&self, u: usize, v: usize) -> bool {
        self.kind[u * self.n + v] == 2
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.vertex_count() > ENUMERATION_CAP {
        return Err(Error::SizeCap {
            n: g.vertex_count(),
            cap: ENUMERATION_CAP,
            what: "AD partition enumeration",
        });
    }
    Ok(())
}

struct Enumerator<'a, F> {
    rel: &'a Relation,
    target: Option<usize>,
    covered: Vec<bool>,
    blocks: Vec<Block>,
    skipped: usize,
    visit: F,
}

impl<F: FnMut(&ADPartition)> Enumerator<'_, F> {
    fn covered_count(&self) -> usize {
        self.blocks.iter().map(|b| b.vertices.len()).sum()
    }

    fn run(&mut self, start: usize) {
        let n = self.rel.n;
        let Some(v) = (start..n).find(|&v| !self.covered[v]) else {
            let size = self.covered_count();
            if self.target.map_or(size > 0, |t| t == size) {
                (self.visit)(&ADPartition {
                    blocks: self.blocks.clone(),
                });
            }
            return;
        };
        if let Some(t) = self.target {
            if self.covered_count() > t {
                return;
            }
        }

        // leave v out of the partition
        let may_skip = self.target.is_none_or(|t| self.skipped < n - t);
        if may_skip {
            self.covered[v] = true;
            self.skipped += 1;
            self.run(v + 1);
            self.skipped -= 1;
            self.covered[v] = false;
        }

        self.covered[v] = true;
        let rel = self.rel;
        for &u in &rel.neighbors[v] {
            if u < v || self.covered[u] {
                continue;
            }
            self.covered[u] = true;
            self.blocks.push(Block {
                vertices: vec![v, u],
                kind: if rel.antipodal(v, u) {
                    BlockKind::AntipodalPair
                } else {
                    BlockKind::AdjacentPair
                },
            });
            self.run(v + 1);
            self.blocks.pop();
            self.covered[u] = false;
        }

        let mut path = vec![v];
        self.extend_cycle(&mut path, 0);
        self.covered[v] = false;
    }

    /// Grows a simple path from its smallest vertex `path[0]` through larger
    /// uncovered vertices, closing it into a cycle whenever possible.
    fn extend_cycle(&mut self, path: &mut Vec<usize>, links: usize) {
        let rel = self.rel;
        let head = path[0];
        let tail = *path.last().expect("nonempty");
        if let Some(t) = self.target {
            if self.covered_count() + path.len() > t {
                return;
            }
        }
        if path.len() >= 3 && path[1] < tail && rel.related(tail, head) {
            let closing = usize::from(rel.antipodal(tail, head));
            self.blocks.push(Block {
                vertices: path.clone(),
                kind: BlockKind::Cycle {
                    antipodal_links: links + closing,
                },
            });
            self.run(head + 1);
            self.blocks.pop();
        }
        for &w in &rel.neighbors[tail] {
            if w <= head || self.covered[w] {
                continue;
            }
            self.covered[w] = true;
            path.push(w);
            self.extend_cycle(path, links + usize::from(rel.antipodal(tail, w)));
            path.pop();
            self.covered[w] = false;
        }
    }
}

fn enumerate_with(rel: &Relation, target: Option<usize>, visit: impl FnMut(&ADPartition)) {
    let mut e = Enumerator {
        rel,
        target,
        covered: vec![false; rel.n],
        blocks: Vec::new(),
        skipped: 0,
        visit,
    };
    e.run(0);
}

/// Calls `visit` once for every AD partition covering exactly `k` vertices.
pub fn for_each_ad_partition(g: &Graph, k: usize, visit: impl FnMut(&ADPartition)) -> Result<()> {
    check_cap(g)?;
    let n = g.vertex_count();
    if k < 2 || k > n {
        return Err(Error::IndexOutOfRange { k, max: n });
    }
    let rel = Relation::new(g)?;
    enumerate_with(&rel, Some(k), visit);
    Ok(())
}

/// All AD partitions covering exactly `k` vertices.
pub fn enumerate_ad_partitions(g: &Graph, k: usize) -> Result<Vec<ADPartition>> {
    let mut out = Vec::new();
    for_each_ad_partition(g, k, |p| out.push(p.clone()))?;
    Ok(out)
}

/// Determinant of the AD matrix summed over spanning AD partitions,
/// together with the number of partitions.
pub fn det_partition_summary(g: &Graph) -> Result<(BigInt, usize)> {
    let n = g.vertex_count();
    check_cap(g)?;
    let rel = Relation::new(g)?;
    let mut total = BigInt::zero();
    let mut count = 0usize;
    enumerate_with(&rel, Some(n), |p| {
        total += p.coefficient_term(rel.diameter);
        count += 1;
    });
    if n % 2 == 1 {
        total = -total;
    }
    Ok((total, count))
}

/// `Σ (−1)^(n−p−p₁) 2^p₁ d^(2a+a₁)` over spanning AD partitions.
pub fn det_via_partitions(g: &Graph) -> Result<BigInt> {
    det_partition_summary(g).map(|(det, _)| det)
}

/// Characteristic coefficient `c_k` of the AD matrix from the partitions
/// on `k` vertices. `c_0 = 1` and `c_1 = 0`.
pub fn charpoly_coeff_via_partitions(g: &Graph, k: usize) -> Result<BigInt> {
    check_cap(g)?;
    let n = g.vertex_count();
    match k {
        0 => return Ok(BigInt::one()),
        1 if n >= 1 => return Ok(BigInt::zero()),
        _ if k > n => return Err(Error::IndexOutOfRange { k, max: n }),
        _ => {}
    }
    let rel = Relation::new(g)?;
    let mut total = BigInt::zero();
    enumerate_with(&rel, Some(k), |p| total += p.coefficient_term(rel.diameter));
    Ok(total)
}

/// The whole characteristic polynomial from a single enumeration of all
/// AD partitions.
pub fn charpoly_via_partitions(g: &Graph) -> Result<CharPoly> {
    check_cap(g)?;
    let rel = Relation::new(g)?;
    let mut coeffs = vec![BigInt::zero(); rel.n + 1];
    coeffs[0] = BigInt::one();
    enumerate_with(&rel, None, |p| {
        coeffs[p.vertex_count()] += p.coefficient_term(rel.diameter);
    });
    Ok(CharPoly::new(coeffs))
}

/// `c₂ = −(m + k d²)`, `k` the number of antipodal pairs (none when `d = 1`).
pub fn c2_closed(g: &Graph) -> Result<BigInt> {
    let rel = Relation::new(g)?;
    let n = rel.n;
    let mut antipodal = 0i64;
    for u in 0..n {
        for v in (u + 1)..n {
            antipodal += i64::from(rel.antipodal(u, v));
        }
    }
    let d = rel.diameter as i64;
    Ok(BigInt::from(-(g.edge_count() as i64 + antipodal * d * d)))
}

/// Counts `[k₀, k₁, k₂, k₃]` of triples whose three pairs are all adjacent
/// or antipodal, split by the number of antipodal pairs.
pub fn related_triples(g: &Graph) -> Result<[u64; 4]> {
    let rel = Relation::new(g)?;
    let n = rel.n;
    let mut k = [0u64; 4];
    for a in 0..n {
        for b in (a + 1)..n {
            if !rel.related(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if rel.related(a, c) && rel.related(b, c) {
                    let s = usize::from(rel.antipodal(a, b))
                        + usize::from(rel.antipodal(a, c))
                        + usize::from(rel.antipodal(b, c));
                    k[s] += 1;
                }
            }
        }
    }
    Ok(k)
}

/// `c₃ = −2(k₀ + k₁ d + k₂ d² + k₃ d³)`.
pub fn c3_closed(g: &Graph) -> Result<BigInt> {
    let k = related_triples(g)?;
    let d = BigInt::from(all_pairs_distances(g)?.diameter());
    let sum: BigInt = k
        .iter()
        .enumerate()
        .map(|(s, &count)| BigInt::from(count) * d.pow(s as u32))
        .sum();
    Ok(-2 * sum)
}

/// Number of AD cycles (cycles of the weighted view) of the given length.
pub fn enumerate_ad_cycles(g: &Graph, length: usize) -> Result<usize> {
    let mut count = 0;
    for_each_ad_cycle(g, length, |_| count += 1)?;
    Ok(count)
}

/// `Σ d^(a₁)` over AD cycles of the given length, `a₁` being the number
/// of antipodal links on the cycle. Equals the plain count when no such
/// cycle uses an antipodal link.
pub fn weighted_ad_cycle_sum(g: &Graph, length: usize) -> Result<BigInt> {
    let d = BigInt::from(all_pairs_distances(g)?.diameter());
    let mut total = BigInt::zero();
    for_each_ad_cycle(g, length, |links| total += d.pow(links as u32))?;
    Ok(total)
}

/// Visits each AD cycle once, passing its number of antipodal links.
fn for_each_ad_cycle(g: &Graph, length: usize, mut visit: impl FnMut(usize)) -> Result<()> {
    check_cap(g)?;
    let n = g.vertex_count();
    if length < 3 || length > n {
        return Err(Error::IndexOutOfRange { k: length, max: n });
    }
    let rel = Relation::new(g)?;
    let mut used = vec![false; n];
    for start in 0..n {
        let mut path = vec![start];
        used[start] = true;
        walk_cycles(&rel, length, &mut path, &mut used, 0, &mut visit);
        used[start] = false;
    }
    Ok(())
}

fn walk_cycles(
    rel: &Relation,
    length: usize,
    path: &mut Vec<usize>,
    used: &mut [bool],
    links: usize,
    visit: &mut impl FnMut(usize),
) {
    let head = path[0];
    let tail = *path.last().expect("nonempty");
    if path.len() == length {
        if path[1] < tail && rel.related(tail, head) {
            visit(links + usize::from(rel.antipodal(tail, head)));
        }
        return;
    }
    for &w in &rel.neighbors[tail] {
        if w > head && !used[w] {
            used[w] = true;
            path.push(w);
            walk_cycles(
                rel,
                length,
                path,
                used,
                links + usize::from(rel.antipodal(tail, w)),
                visit,
            );
            path.pop();
            used[w] = false;
        }
    }
}

/// Outcome of reading odd AD cycles off the characteristic polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum OddCycleCount {
    /// The shortest odd AD cycles have length `2k + 1`; there are `count`.
    Shortest { k: usize, count: BigInt },
    /// Every odd coefficient vanishes.
    NoOddCycles,
}

/// The first nonzero odd coefficient `c_(2k+1)` (k ≥ 1) gives the number
/// of AD cycles of length `2k + 1` as `−c_(2k+1)/2`.
pub fn odd_ad_cycle_count_from_coeffs(cp: &CharPoly) -> Result<OddCycleCount> {
    let n = cp.degree();
    if n >= 1 && !cp.coeff(1).is_zero() {
        return Err(Error::Verification(format!(
            "c_1 = {} is nonzero; not an AD characteristic polynomial",
            cp.coeff(1)
        )));
    }
    for idx in (3..=n).step_by(2) {
        let c = cp.coeff(idx);
        if c.is_zero() {
            continue;
        }
        if c.is_positive() || (c % 2u32) != BigInt::zero() {
            return Err(Error::Verification(format!(
                "c_{idx} = {c} must be negative and even"
            )));
        }
        return Ok(OddCycleCount::Shortest {
            k: (idx - 1) / 2,
            count: -c / 2,
        });
    }
    Ok(OddCycleCount::NoOddCycles)
}

/// Bipartite with no antipodal pair inside a part, checked directly on
/// the bipartition.
pub fn is_diametrical_bipartite_by_definition(g: &Graph) -> Result<bool> {
    g.require_connected(2)?;
    let Some((left, right)) = g.bipartition() else {
        return Ok(false);
    };
    let dm = all_pairs_distances(g)?;
    let d = dm.diameter();
    let clean = |part: &[usize]| {
        part.iter()
            .all(|&u| part.iter().all(|&v| u == v || dm.get(u, v) != d))
    };
    Ok(clean(&left) && clean(&right))
}

/// Diametrical bipartite ⟺ bipartite with odd diameter; both readings are
/// computed and must agree.
pub fn is_diametrical_bipartite(g: &Graph) -> Result<bool> {
    g.require_connected(2)?;
    let d = all_pairs_distances(g)?.diameter();
    let shortcut = g.is_bipartite() && d % 2 == 1;
    let direct = is_diametrical_bipartite_by_definition(g)?;
    if shortcut != direct {
        return Err(Error::Verification(format!(
            "parity shortcut ({shortcut}) disagrees with bipartition test ({direct})"
        )));
    }
    Ok(shortcut)
}

/// Total number of odd AD cycles of every length, for cross-checks.
pub fn odd_ad_cycle_lengths(g: &Graph) -> Result<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    (3..=n)
        .step_by(2)
        .map(|len| enumerate_ad_cycles(g, len).map(|c| (len, c)))
        .collect()
}
