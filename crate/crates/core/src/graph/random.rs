use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Graph;

/// Edge probability `2 ln(n) / n`, capped at 1.
fn edge_probability(n: usize) -> f64 {
    (2.0 * (n as f64).ln() / n as f64).min(1.0)
}

/// Samples G(n, p) with `p = 2 ln(n)/n` until the result is connected.
pub fn random_connected<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 2, "random connected graphs need n >= 2");
    let p = edge_probability(n);
    loop {
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
        if g.is_connected() {
            return g;
        }
    }
}

/// `count` connected graphs with vertex counts drawn uniformly from
/// `min_n..=max_n`, reproducible from `seed`.
pub fn random_population(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    assert!(2 <= min_n && min_n <= max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_connected(n, &mut rng)
        })
        .collect()
}
