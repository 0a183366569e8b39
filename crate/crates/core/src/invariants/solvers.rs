//! Exact clique, independence and chromatic numbers on bitmask graphs.

/// Neighborhood masks of a graph with at most 64 vertices.
pub(crate) type Masks = [u64];

fn greedy_color_order(masks: &Masks, candidates: u64) -> (Vec<usize>, Vec<usize>) {
    // Sequential greedy coloring of the candidate set; returns vertices
    // ordered by color together with the color bound of each prefix.
    let mut order = Vec::new();
    let mut bounds = Vec::new();
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v);
            avail &= !masks[v];
            uncolored &= !(1 << v);
            order.push(v);
            bounds.push(color);
        }
    }
    (order, bounds)
}

fn expand(masks: &Masks, size: usize, candidates: u64, best: &mut usize) {
    let (order, bounds) = greedy_color_order(masks, candidates);
    let mut remaining = candidates;
    for idx in (0..order.len()).rev() {
        if size + bounds[idx] <= *best {
            return;
        }
        let v = order[idx];
        let next = remaining & masks[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(masks, size + 1, next, best);
        }
        remaining &= !(1 << v);
    }
}

/// Maximum clique size by branch and bound with greedy-coloring bounds.
pub(crate) fn max_clique(masks: &Masks) -> usize {
    let n = masks.len();
    assert!(n <= 64);
    if n == 0 {
        return 0;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 1;
    expand(masks, 0, all, &mut best);
    best
}

pub(crate) fn complement_masks(masks: &Masks) -> Vec<u64> {
    let n = masks.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    masks
        .iter()
        .enumerate()
        .map(|(v, &m)| !m & all & !(1 << v))
        .collect()
}

pub(crate) fn max_independent_set(masks: &Masks) -> usize {
    max_clique(&complement_masks(masks))
}

/// Whether the graph admits a proper coloring with `k` colors, by
/// DSATUR-ordered backtracking.
fn colorable(masks: &Masks, k: usize) -> bool {
    let n = masks.len();
    let mut color = vec![usize::MAX; n];
    fn rec(masks: &Masks, k: usize, color: &mut [usize], colored: usize) -> bool {
        let n = masks.len();
        if colored == n {
            return true;
        }
        // most saturated uncolored vertex, ties broken by degree
        let mut pick = usize::MAX;
        let mut key = (0usize, 0u32);
        for v in 0..n {
            if color[v] != usize::MAX {
                continue;
            }
            let mut seen = 0u64;
            let mut nb = masks[v];
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if color[w] != usize::MAX {
                    seen |= 1 << color[w];
                }
            }
            let k2 = (seen.count_ones() as usize, masks[v].count_ones());
            if pick == usize::MAX || k2 > key {
                pick = v;
                key = k2;
            }
        }
        let v = pick;
        let mut used = 0u64;
        let mut nb = masks[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if color[w] != usize::MAX {
                used |= 1 << color[w];
            }
        }
        // colors beyond the first unused one are symmetric
        let highest = color
            .iter()
            .filter(|&&c| c != usize::MAX)
            .max()
            .map_or(0, |&c| c + 1);
        for c in 0..k.min(highest + 1) {
            if used & (1 << c) == 0 {
                color[v] = c;
                if rec(masks, k, color, colored + 1) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    rec(masks, k, &mut color, 0)
}

/// Chromatic number, searching upward from the clique number.
pub(crate) fn chromatic_number(masks: &Masks) -> usize {
    if masks.is_empty() {
        return 0;
    }
    let mut k = max_clique(masks);
    while !colorable(masks, k) {
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn masks(f: Family) -> Vec<u64> {
        f.build().unwrap().neighbor_masks()
    }

    /// Brute force over all vertex subsets.
    fn brute(masks: &[u64]) -> (usize, usize) {
        let n = masks.len();
        let (mut clique, mut indep) = (0, 0);
        for s in 0u64..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| s & (1 << v) != 0).collect();
            let is_clique = verts.iter().all(|&v| (s & !(1 << v)) & !masks[v] == 0);
            let is_indep = verts.iter().all(|&v| s & masks[v] == 0);
            if is_clique {
                clique = clique.max(verts.len());
            }
            if is_indep {
                indep = indep.max(verts.len());
            }
        }
        (clique, indep)
    }

    #[test]
    fn families() {
        assert_eq!(max_clique(&masks(Family::Complete(5))), 5);
        assert_eq!(max_independent_set(&masks(Family::Petersen)), 4);
        assert_eq!(chromatic_number(&masks(Family::Petersen)), 3);
        assert_eq!(chromatic_number(&masks(Family::Cycle(5))), 3);
        assert_eq!(chromatic_number(&masks(Family::Cycle(6))), 2);
        assert_eq!(chromatic_number(&masks(Family::Complete(4))), 4);
        assert_eq!(chromatic_number(&masks(Family::Frucht)), 3);
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        for g in crate::graph::connected_graphs(6) {
            let m = g.neighbor_masks();
            assert_eq!((max_clique(&m), max_independent_set(&m)), brute(&m));
        }
    }

    #[test]
    fn chromatic_matches_exhaustive_coloring() {
        fn brute_chi(m: &[u64]) -> usize {
            let n = m.len();
            for k in 1..=n {
                let total = k.pow(n as u32);
                for code in 0..total {
                    let mut c = code;
                    let col: Vec<usize> = (0..n)
                        .map(|_| {
                            let x = c % k;
                            c /= k;
                            x
                        })
                        .collect();
                    if (0..n).all(|v| (0..n).all(|w| m[v] & (1 << w) == 0 || col[v] != col[w])) {
                        return k;
                    }
                }
            }
            n
        }
        for g in crate::graph::connected_graphs(5) {
            let m = g.neighbor_masks();
            assert_eq!(chromatic_number(&m), brute_chi(&m));
        }
    }
}
