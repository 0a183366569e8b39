//! Canonical labeling for small graphs and exhaustive generation of
//! isomorphism classes.
//!
//! The canonical form is the lexicographically largest upper-triangle
//! adjacency string over all labelings that respect an iterated
//! degree refinement. Refinement cuts the search to permutations inside
//! color classes, which is tiny for everything but highly regular graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Isomorphism-invariant key: equal keys ⟺ isomorphic graphs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey {
    pub n: usize,
    pub bits: Vec<u64>,
}

fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = g.degrees();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        if distinct.len() == classes {
            return next;
        }
        classes = distinct.len();
        color = next;
    }
}

struct Search<'a> {
    masks: &'a [u64],
    cells: Vec<Vec<usize>>,
    slot_cell: Vec<usize>,
    placed: Vec<usize>,
    used: u64,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl Search<'_> {
    fn run(&mut self) {
        let depth = self.placed.len();
        if depth == self.slot_cell.len() {
            if self.best.as_ref().is_none_or(|b| self.current > *b) {
                self.best = Some(self.current.clone());
            }
            return;
        }
        let cell = self.slot_cell[depth];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used & (1 << v) != 0 {
                continue;
            }
            let before = self.current.len();
            for &u in &self.placed {
                self.current.push(self.masks[v] & (1 << u) != 0);
            }
            let prune = match &self.best {
                Some(best) => self.current[..] < best[..self.current.len()],
                None => false,
            };
            if !prune {
                self.placed.push(v);
                self.used |= 1 << v;
                self.run();
                self.used &= !(1 << v);
                self.placed.pop();
            }
            self.current.truncate(before);
        }
    }
}

/// Canonical key of a graph with at most 64 vertices.
pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let n = g.vertex_count();
    assert!(n <= 64, "canonical form supports at most 64 vertices");
    let color = refine(g);
    let ncolors = color.iter().copied().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); ncolors];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    let slot_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();
    let masks = g.neighbor_masks();
    let mut search = Search {
        masks: &masks,
        cells,
        slot_cell,
        placed: Vec::with_capacity(n),
        used: 0,
        current: Vec::with_capacity(n * n.saturating_sub(1) / 2),
        best: None,
    };
    search.run();
    let best = search.best.unwrap_or_default();
    let mut bits = vec![0u64; best.len().div_ceil(64)];
    for (i, b) in best.iter().enumerate() {
        if *b {
            bits[i / 64] |= 1 << (i % 64);
        }
    }
    CanonicalKey { n, bits }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical key. Built by adding a vertex to each class on
/// `n - 1` vertices in every possible way.
pub fn non_isomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive generation is limited to 9 vertices");
    let mut layer: BTreeMap<CanonicalKey, Graph> = BTreeMap::new();
    let g0 = Graph::empty(0);
    layer.insert(canonical_key(&g0), g0);
    for k in 1..=n {
        let mut next = BTreeMap::new();
        for base in layer.values() {
            for subset in 0u64..(1 << (k - 1)) {
                let mut adjacency: Vec<Vec<usize>> =
                    (0..k - 1).map(|v| base.neighbors(v).to_vec()).collect();
                let mut new_list = Vec::new();
                for (v, list) in adjacency.iter_mut().enumerate() {
                    if subset & (1 << v) != 0 {
                        list.push(k - 1);
                        new_list.push(v);
                    }
                }
                adjacency.push(new_list);
                let g = Graph::from_adjacency_unchecked(adjacency);
                next.entry(canonical_key(&g)).or_insert(g);
            }
        }
        layer = next;
    }
    layer.into_values().collect()
}

/// Connected isomorphism classes on exactly `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    non_isomorphic_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}
