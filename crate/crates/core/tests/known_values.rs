//! Spectra and invariants of named graphs against values derived by hand.

use adgraph::graph::{ad_matrix, Family, Graph};
use adgraph::invariants as inv;
use adgraph::products;
use adgraph::spectra::{eigenvalues_sym, Spectrum};

fn fam(f: Family) -> Graph {
    f.build().unwrap()
}

fn spectrum(f: Family) -> Spectrum {
    eigenvalues_sym(&ad_matrix(&fam(f)).unwrap())
}

fn expect(values: &[(f64, usize)]) -> Spectrum {
    Spectrum::from_values(
        values
            .iter()
            .flat_map(|&(x, mult)| std::iter::repeat_n(x, mult))
            .collect(),
    )
}

#[test]
fn petersen() {
    // diameter 2: AD = A + 2(J - I - A) = 2J - 2I - A
    let want = expect(&[(15.0, 1), (-3.0, 5), (0.0, 4)]);
    assert!(spectrum(Family::Petersen).matches(&want, 1e-9));
}

#[test]
fn complete_graphs_use_plain_adjacency() {
    for n in 2..8 {
        let want = expect(&[(n as f64 - 1.0, 1), (-1.0, n - 1)]);
        assert!(spectrum(Family::Complete(n)).matches(&want, 1e-9));
    }
}

#[test]
fn hypercube_q3() {
    // AD = A + 3M with M the antipodal matching; M acts as (-1)^k on the
    // eigenspace of A with eigenvalue 3 - 2k
    let want = expect(&[(6.0, 1), (-2.0, 3), (2.0, 3), (-6.0, 1)]);
    assert!(spectrum(Family::Hypercube(3)).matches(&want, 1e-9));
}

#[test]
fn complete_bipartite() {
    // diameter 2: AD = 2J - 2I - A; A has eigenvalues ±sqrt(ab) and 0
    let (a, b) = (3usize, 5usize);
    let g = fam(Family::CompleteBipartite(a, b));
    let numeric = eigenvalues_sym(&ad_matrix(&g).unwrap());
    // on the span of the two part indicators AD acts as [[2a-2, b], [a, 2b-2]]
    let (p, q) = ((2 * a - 2) as f64, (2 * b - 2) as f64);
    let disc = ((p - q).powi(2) + 4.0 * (a * b) as f64).sqrt();
    let want = expect(&[
        ((p + q + disc) / 2.0, 1),
        ((p + q - disc) / 2.0, 1),
        (-2.0, a + b - 2),
    ]);
    assert!(numeric.matches(&want, 1e-9));
}

#[test]
fn ad_regularity_examples() {
    let ad_deg = |f| inv::degree_profile(&fam(f)).unwrap().ad_regular;
    assert_eq!(ad_deg(Family::Cycle(6)), Some(5));
    assert_eq!(ad_deg(Family::Cycle(7)), Some(2 + 3 * 2));
    assert_eq!(ad_deg(Family::Petersen), Some(3 + 2 * 6));
    assert_eq!(ad_deg(Family::HexagonalPrism), Some(3 + 4));
    assert_eq!(ad_deg(Family::Frucht), None);
    assert_eq!(ad_deg(Family::Path(5)), None);
}

#[test]
fn join_distance_spectrum_matches_construction() {
    let (g, h) = (fam(Family::Path(3)), fam(Family::Cycle(4)));
    let joined = products::join(&g, &h);
    assert_eq!(joined.vertex_count(), 7);
    assert_eq!(joined.edge_count(), 2 + 4 + 12);
    let observed = eigenvalues_sym(&ad_matrix(&joined).unwrap());
    assert!(products::join_ad_spectrum(&g, &h)
        .unwrap()
        .matches(&observed, 1e-9));
}
