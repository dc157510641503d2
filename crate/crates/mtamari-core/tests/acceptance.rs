//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). Every
//! comparison is exact; the grids are the full reproducibility ranges.

use mtamari_core::num_rational::BigRational;
use mtamari_core::{checks, formulas, identities, lattice, series};

use lattice::HasseDiagram;

fn report(criterion: &str, pass: bool) {
    println!("criterion {criterion}: {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed");
}

/// Exhaustive interval counts equal the closed formula on the full grid,
/// with the expected values frozen.
#[test]
fn criterion_1_interval_counts() {
    let expected: &[(usize, usize, u64)] = &[
        (1, 1, 1),
        (1, 2, 3),
        (1, 3, 13),
        (1, 4, 68),
        (1, 5, 399),
        (2, 1, 1),
        (2, 2, 6),
        (2, 3, 58),
        (2, 4, 703),
        (3, 1, 1),
        (3, 2, 10),
        (3, 3, 170),
    ];
    let mut pass = true;
    for &(m, n, count) in expected {
        let brute = HasseDiagram::build(m, n).unwrap().interval_count();
        let formula = formulas::count_intervals(m, n).unwrap().to_u64().unwrap();
        if brute != count || formula != count {
            eprintln!("  m={m} n={n}: expected {count}, enumeration {brute}, formula {formula}");
            pass = false;
        }
    }
    report("1 (interval counts, enumeration = formula)", pass);
}

/// Exhaustive contact counts equal the two-parameter closed formula for
/// every i, and the formula rows sum to the interval counts.
#[test]
fn criterion_2_contacts_refinement() {
    let mut pass = true;
    for m in 1..=2usize {
        for n in 1..=4usize {
            let table = HasseDiagram::build(m, n).unwrap().interval_table();
            for (i, count) in table.by_contacts {
                let formula = formulas::count_by_contacts(m, n, i).unwrap();
                if formula.to_u64() != Some(count) {
                    eprintln!("  m={m} n={n} i={i}: enumeration {count}, formula {formula}");
                    pass = false;
                }
            }
        }
    }
    for m in 1..=3usize {
        for n in 1..=8usize {
            let sum: mtamari_core::num_bigint::BigInt = formulas::contact_row(m, n)
                .unwrap()
                .into_iter()
                .map(|(_, c)| c.as_bigint().clone())
                .sum();
            if &sum != formulas::count_intervals(m, n).unwrap().as_bigint() {
                eprintln!("  m={m} n={n}: row sum {sum} differs from interval count");
                pass = false;
            }
        }
    }
    report("2 (contact refinement, enumeration = formula and row sums)", pass);
}

/// Distance-vector order = cover reachability, below-ness, the
/// single-coordinate cover effect, the reduction characterization, and
/// unique meets and joins, all exhaustive on the stated grid.
#[test]
fn criterion_3_order_theory() {
    let mut grid: Vec<(usize, usize)> = Vec::new();
    grid.extend((0..=4).map(|n| (1, n)));
    grid.extend((0..=4).map(|n| (2, n)));
    grid.extend((0..=3).map(|n| (3, n)));
    let mut pass = true;
    for c in checks::suite_order(&grid) {
        if !c.pass {
            eprintln!("  {}: {}", c.name, c.detail);
            pass = false;
        }
    }
    report("3 (order-theory suite)", pass);
}

/// The solved series reproduces the brute-force joint statistics
/// (contacts, rise, longest chain) and y*F is symmetric in x and y.
#[test]
fn criterion_4_series_engine() {
    let mut pass = true;
    for m in 1..=2usize {
        let f = series::solve_f(m, 4, true, true);
        for n in 0..=4usize {
            let h = HasseDiagram::build(m, n).unwrap();
            if &checks::joint_poly(&h) != f.coeff(n) {
                eprintln!("  m={m} n={n}: joint statistic polynomial mismatch");
                pass = false;
            }
        }
    }
    for (m, order) in [(1usize, 8usize), (2, 6)] {
        if !series::check_symmetry(&series::solve_f(m, order, true, false)) {
            eprintln!("  m={m}: symmetry fails through order {order}");
            pass = false;
        }
    }
    report("4 (series engine: joint statistics and x-y symmetry)", pass);
}

/// The rational parametrization: closed form of F(t;1,1) through order 8
/// for m <= 3, and the full bivariate form at (2,3) through order 6 for
/// m <= 2.
#[test]
fn criterion_5_parametrization() {
    let mut pass = true;
    for m in 1..=3usize {
        if !series::check_f11_parametrization(m, 8) {
            eprintln!("  m={m}: F(t;1,1) closed form mismatch");
            pass = false;
        }
    }
    let (x0, y0) = (
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
    );
    for m in 1..=2usize {
        if series::check_full_parametrization(m, 6, &x0, &y0) != Ok(true) {
            eprintln!("  m={m}: full parametrization mismatch at (2,3)");
            pass = false;
        }
    }
    report("5 (parametrization of the generating function)", pass);
}

/// The Lambda-operator identity suite at z-truncation 20.
#[test]
fn criterion_6_identities() {
    const NZ: usize = 20;
    let mut pass = true;
    for p in 0..=6usize {
        pass &= identities::verify_lambda_elem(p, NZ);
    }
    for m in 1..=6usize {
        pass &= identities::verify_lemma_id(m, NZ);
    }
    for m in 1..=5usize {
        for k in 1..=m {
            pass &= identities::verify_identity_k(m, k, NZ);
        }
    }
    for m in 1..=3usize {
        pass &= identities::verify_final_id(m, NZ) == Ok(true);
    }
    for m in 1..=2usize {
        let h = identities::h_series(m, NZ).unwrap();
        pass &= identities::verify_sym_form(&h, m) == Ok(true);
    }
    pass &= identities::verify_appendix_lagrange(10);
    for d in 2..=8i64 {
        for p in 1..=d {
            pass &= identities::verify_hypergeometric(d, 0, p);
        }
    }
    report("6 (Lambda-operator identities at z-truncation 20)", pass);
}

/// Bijections: ballot <-> Dyck and reduction <-> expansion round trips,
/// Fuss-Catalan counts against generation, tree rotations = covers.
#[test]
fn criterion_7_bijections() {
    let mut pass = true;
    for c in checks::suite_bijections() {
        if !c.pass {
            eprintln!("  {}: {}", c.name, c.detail);
            pass = false;
        }
    }
    report("7 (bijection suite)", pass);
}

/// The pointed-interval recursion holds coefficientwise in t, x, y for
/// m <= 2, k < m, n <= 3.
#[test]
fn criterion_8_pointed_recursion() {
    let mut pass = true;
    for c in checks::suite_pointed() {
        if !c.pass {
            eprintln!("  {}: {}", c.name, c.detail);
            pass = false;
        }
    }
    report("8 (pointed-interval recursion)", pass);
}
