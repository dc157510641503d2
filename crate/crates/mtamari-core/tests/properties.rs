//! Cross-module invariants beyond the acceptance grid.

use mtamari_core::lattice::HasseDiagram;
use mtamari_core::paths::{generate_m_dyck, BallotPath};
use mtamari_core::{checks, formulas};

/// Ballot round trips for every m-Dyck path of size up to 10.
#[test]
fn ballot_round_trips_to_size_ten() {
    for m in 1..=3usize {
        for n in 0..=(10 / m) {
            for p in generate_m_dyck(m, n) {
                let b = BallotPath::from_dyck(&p, m).unwrap();
                assert_eq!(b.to_dyck(), p);
                assert_eq!(b.size(), n);
            }
        }
    }
}

/// Path generation matches the Fuss-Catalan count out to larger sizes than
/// the lattice suite uses.
#[test]
fn generation_counts_larger() {
    for (m, n) in [(1usize, 8usize), (2, 5), (3, 4)] {
        let gen = generate_m_dyck(m, n).len() as u64;
        assert_eq!(Some(gen), formulas::count_paths(m, n).to_u64());
    }
}

/// Every default verification suite passes; this is what the command-line
/// `verify --suite all` runs.
#[test]
fn all_default_suites_pass() {
    let results = checks::all_suites();
    let failures: Vec<String> = results
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} ({})", c.name, c.detail))
        .collect();
    assert!(failures.is_empty(), "failed checks: {failures:?}");
}

/// Exploratory observation, not a claim of the order theory: whether the
/// meet agrees with the componentwise minimum of distance vectors on small
/// diagrams. Run with `--ignored` to inspect.
#[test]
#[ignore = "exploratory: not claimed by the order theory, never relied upon"]
fn exploratory_meet_componentwise_min() {
    for (m, n) in [(1usize, 4usize), (2, 3), (3, 2)] {
        let h = HasseDiagram::build(m, n).unwrap();
        let agrees = h.meet_is_componentwise_min().unwrap();
        println!("m={m} n={n}: meet == componentwise min of distance vectors: {agrees}");
    }
}
