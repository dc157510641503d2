//! Named verification suites cross-validating the three enumeration routes
//! (exhaustive, series, closed formulas) and the order-theoretic facts they
//! rest on. Every check is exact; grids are chosen so the full set finishes
//! in seconds.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::formulas;
use crate::identities;
use crate::lattice::{self, HasseDiagram};
use crate::paths::{self, BallotPath, BallotStep, StepPath};
use crate::series::{self, Poly};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn ok(name: String) -> Self {
        Check { name, pass: true, detail: String::new() }
    }

    fn fail(name: String, detail: String) -> Self {
        Check { name, pass: false, detail }
    }

    fn of(name: String, pass: bool, detail_on_fail: &str) -> Self {
        if pass {
            Check::ok(name)
        } else {
            Check::fail(name, String::from(detail_on_fail))
        }
    }
}

/// Grid used for the count cross-checks: every (m, n) pair is exhaustively
/// enumerable in well under a second.
pub fn default_counts_grid() -> Vec<(usize, usize)> {
    let mut g = Vec::new();
    g.extend((1..=5).map(|n| (1, n)));
    g.extend((1..=4).map(|n| (2, n)));
    g.extend((1..=3).map(|n| (3, n)));
    g
}

/// Exhaustive interval counts against the closed formula.
pub fn suite_counts(grid: &[(usize, usize)]) -> Vec<Check> {
    let mut out = Vec::new();
    for &(m, n) in grid {
        let name = format!("counts m={m} n={n}: enumeration = formula");
        match HasseDiagram::build(m, n) {
            Err(e) => out.push(Check::fail(name, format!("{e}"))),
            Ok(h) => {
                let brute = h.interval_count();
                let formula = formulas::count_intervals(m, n)
                    .ok()
                    .and_then(|c| c.to_u64());
                if formula == Some(brute) {
                    out.push(Check::ok(name));
                } else {
                    out.push(Check::fail(name, format!("enumeration {brute}, formula {formula:?}")));
                }
            }
        }
    }
    out
}

/// Contact refinement: exhaustive contact counts against the closed formula,
/// row sums, and the divisibility facts its proof depends on.
pub fn suite_contacts() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=2usize {
        for n in 1..=4usize {
            let h = HasseDiagram::build(m, n).expect("desk scale");
            let table = h.interval_table();
            let formula = formulas::contact_row(m, n).expect("valid range");
            let brute: Vec<(usize, u64)> = table.by_contacts.clone();
            let formula_u64: Vec<(usize, u64)> = formula
                .iter()
                .filter(|(_, c)| c.to_u64() != Some(0))
                .map(|(i, c)| (*i, c.to_u64().unwrap()))
                .collect();
            out.push(Check::of(
                format!("contacts m={m} n={n}: enumeration = formula, all i"),
                brute == formula_u64,
                "contact row mismatch",
            ));
        }
    }
    for m in 1..=3usize {
        for n in 1..=8usize {
            let sum: num_bigint::BigInt = formulas::contact_row(m, n)
                .expect("valid range")
                .into_iter()
                .map(|(_, c)| c.as_bigint().clone())
                .sum();
            let total = formulas::count_intervals(m, n).expect("valid range");
            out.push(Check::of(
                format!("contacts m={m} n={n}: row sum = interval count"),
                &sum == total.as_bigint(),
                "row sum mismatch",
            ));
        }
    }
    let mut zero_ok = true;
    let mut div_ok = true;
    for m in 1..=4usize {
        for n in 1..=8usize {
            if !formulas::pol_value(m, n, 1).is_zero() {
                zero_ok = false;
            }
            for i in 1..=n + 1 {
                for part in formulas::pol_summands(m, n, i) {
                    if !(part / BigRational::from_integer(i.into())).is_integer() {
                        div_ok = false;
                    }
                }
            }
        }
    }
    out.push(Check::of(
        String::from("contacts: refinement polynomial vanishes at i=1 (m<=4, n<=8)"),
        zero_ok,
        "nonzero value at i=1",
    ));
    out.push(Check::of(
        String::from("contacts: each summand divisible by i (m<=4, n<=8)"),
        div_ok,
        "summand not divisible by i",
    ));
    out
}

/// Grid for the order-theoretic checks.
pub fn default_order_grid() -> Vec<(usize, usize)> {
    let mut g = Vec::new();
    g.extend((0..=4).map(|n| (1, n)));
    g.extend((0..=4).map(|n| (2, n)));
    g.extend((0..=3).map(|n| (3, n)));
    g
}

/// Order theory: distance-vector order against graph reachability,
/// below-ness, the single-coordinate cover effect, the reduction
/// characterization, and unique meets and joins.
pub fn suite_order(grid: &[(usize, usize)]) -> Vec<Check> {
    let mut out = Vec::new();
    for &(m, n) in grid {
        let h = HasseDiagram::build(m, n).expect("desk scale");
        let v = h.node_count();

        let mut oracle_ok = true;
        let mut below_ok = true;
        for a in 0..v {
            for b in 0..v {
                let by_dv = h.leq_idx(a, b);
                if by_dv != h.reachable(a, b) {
                    oracle_ok = false;
                }
                if by_dv {
                    let pa = h.node(a).height_profile();
                    let pb = h.node(b).height_profile();
                    if !pa.iter().zip(&pb).all(|(x, y)| x <= y) {
                        below_ok = false;
                    }
                }
            }
        }
        out.push(Check::of(
            format!("order m={m} n={n}: distance-vector order = reachability"),
            oracle_ok,
            "order tests disagree",
        ));
        out.push(Check::of(
            format!("order m={m} n={n}: smaller paths lie below larger ones"),
            below_ok,
            "below-ness violated",
        ));

        out.push(Check::of(
            format!("order m={m} n={n}: covers change one distance entry by the excursion size"),
            dpush_holds(&h),
            "cover effect on distance vectors violated",
        ));

        if n >= 1 {
            out.push(Check::of(
                format!("order m={m} n={n}: reduction characterizes the order"),
                reduction_characterization_holds(&h, m),
                "reduction characterization violated",
            ));
        }

        let mut lattice_ok = true;
        for a in 0..v {
            for b in 0..v {
                let (mt, jn) = (h.meet(a, b), h.join(a, b));
                match (mt, jn) {
                    (Ok(mt), Ok(jn)) => {
                        if !(h.leq_idx(mt, a)
                            && h.leq_idx(mt, b)
                            && h.leq_idx(a, jn)
                            && h.leq_idx(b, jn))
                        {
                            lattice_ok = false;
                        }
                        // greatest and least among all bounds
                        for z in 0..v {
                            if h.leq_idx(z, a) && h.leq_idx(z, b) && !h.leq_idx(z, mt) {
                                lattice_ok = false;
                            }
                            if h.leq_idx(a, z) && h.leq_idx(b, z) && !h.leq_idx(jn, z) {
                                lattice_ok = false;
                            }
                        }
                    }
                    _ => lattice_ok = false,
                }
            }
        }
        out.push(Check::of(
            format!("order m={m} n={n}: unique meet and join for every pair"),
            lattice_ok,
            "meet/join missing or not unique",
        ));
    }
    out
}

fn dpush_holds(h: &HasseDiagram) -> bool {
    use crate::paths::Step;
    for idx in 0..h.node_count() {
        let p = h.node(idx);
        let dp = p.distance_vector();
        let steps: Vec<Step> = p.steps().collect();
        let cover_list = lattice::covers(p);
        let mut site = 0usize;
        for j in 0..steps.len().saturating_sub(1) {
            if steps[j] != Step::Down || steps[j + 1] != Step::Up {
                continue;
            }
            let q = &cover_list[site];
            site += 1;
            let dq = q.distance_vector();
            // rank of the up step matched with the swapped down step
            let i0 = p.match_of_down(j) - 1;
            // rank of the up step following the down step
            let rank_u = steps[..=j].iter().filter(|s| **s == Step::Up).count() + 1;
            let ell = dp.entries()[rank_u - 1];
            for i in 0..dp.len() {
                let expect =
                    if i == i0 { dp.entries()[i] + ell } else { dp.entries()[i] };
                if dq.entries()[i] != expect {
                    return false;
                }
            }
        }
        if site != cover_list.len() {
            return false;
        }
    }
    true
}

fn reduction_characterization_holds(h: &HasseDiagram, m: usize) -> bool {
    let reductions: Vec<crate::paths::PointedPath> =
        (0..h.node_count()).map(|i| paths::m_reduction(h.node(i), m).expect("m-Dyck")).collect();
    for a in 0..h.node_count() {
        for b in 0..h.node_count() {
            let direct = h.leq_idx(a, b);
            let (ra, rb) = (&reductions[a], &reductions[b]);
            let reduced = ra.path().distance_vector().leq(&rb.path().distance_vector())
                && ra.points().iter().zip(rb.points()).all(|(p, q)| p <= q);
            if direct != reduced {
                return false;
            }
        }
        // non-initial contacts of P are the contacts of P' right of p_m
        let p = h.node(a);
        let r = &reductions[a];
        let pm = *r.points().last().expect("m >= 1");
        let active = r.path().contact_abscissas().iter().filter(|&&c| c >= pm).count();
        if p.contacts() - 1 != active {
            return false;
        }
    }
    true
}

/// Bijections: ballot <-> Dyck, reduction <-> expansion, Fuss-Catalan path
/// counts, and the tree-rotation view of the covering relation.
pub fn suite_bijections() -> Vec<Check> {
    let mut out = Vec::new();

    for m in 1..=3usize {
        let mut round_ok = true;
        let mut converse_ok = true;
        for n in 0..=4usize {
            for p in paths::generate_m_dyck(m, n) {
                let b = BallotPath::from_dyck(&p, m).expect("m-Dyck");
                if b.to_dyck() != p {
                    round_ok = false;
                }
            }
            // independent enumeration of all N/E words of the right length
            let len = (m + 1) * n;
            if len <= 16 {
                let mut valid = 0u64;
                for mask in 0u32..1 << len {
                    let steps: Vec<BallotStep> = (0..len)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                BallotStep::North
                            } else {
                                BallotStep::East
                            }
                        })
                        .collect();
                    if steps.iter().filter(|s| **s == BallotStep::North).count() != n {
                        continue;
                    }
                    if let Ok(b) = BallotPath::new(m, steps) {
                        valid += 1;
                        let d = b.to_dyck();
                        if !d.is_m_dyck(m) || BallotPath::from_dyck(&d, m).unwrap() != b {
                            converse_ok = false;
                        }
                    }
                }
                if Some(valid) != formulas::count_paths(m, n).to_u64() {
                    converse_ok = false;
                }
            }
        }
        out.push(Check::of(
            format!("bijections m={m}: ballot <-> Dyck round trips"),
            round_ok && converse_ok,
            "round trip failed",
        ));
    }

    for m in 1..=3usize {
        let mut ok = true;
        for n in 1..=4usize {
            for p in paths::generate_m_dyck(m, n) {
                let r = paths::m_reduction(&p, m).expect("m-Dyck");
                if paths::m_expansion(&r).expect("valid") != p {
                    ok = false;
                }
                let dv = paths::prepend_distance(&r.path().distance_vector(), r.points());
                if dv != p.distance_vector() {
                    ok = false;
                }
            }
        }
        out.push(Check::of(
            format!("bijections m={m}: reduction <-> expansion and distance prepending"),
            ok,
            "reduction round trip failed",
        ));
    }

    let mut counts_ok = true;
    for m in 1..=3usize {
        for n in 0..=5usize {
            let gen = paths::generate_m_dyck(m, n).len() as u64;
            if Some(gen) != formulas::count_paths(m, n).to_u64() {
                counts_ok = false;
            }
        }
    }
    out.push(Check::of(
        String::from("bijections: generated path counts are Fuss-Catalan (m<=3, n<=5)"),
        counts_ok,
        "count mismatch",
    ));

    for m in 1..=2usize {
        let mut ok = true;
        for n in 0..=4usize {
            let ps = paths::generate_m_dyck(m, n);
            if lattice::generate_trees(m, n).len() != ps.len() {
                ok = false;
            }
            for p in ps {
                let t = match lattice::tree_view(&p, m) {
                    Ok(t) => t,
                    Err(_) => {
                        ok = false;
                        continue;
                    }
                };
                if lattice::tree_to_path(&t, m) != p {
                    ok = false;
                }
                let mut rotated: Vec<StepPath> = lattice::rotation_sites(&t)
                    .into_iter()
                    .map(|leaf| {
                        lattice::tree_to_path(&lattice::tree_rotate(&t, leaf).expect("site"), m)
                    })
                    .collect();
                rotated.sort();
                let mut cov = lattice::covers(&p);
                cov.sort();
                if rotated != cov {
                    ok = false;
                }
            }
        }
        out.push(Check::of(
            format!("bijections m={m}: tree rotations realize exactly the covers"),
            ok,
            "rotation graph differs from cover DAG",
        ));
    }
    out
}

/// The joint statistic polynomial of a diagram: counts intervals by
/// contacts of the lower path (x), initial rise of the upper path (y) and
/// longest chain (q).
pub fn joint_poly(h: &HasseDiagram) -> Poly {
    let mut p = Poly::zero();
    for ((c, r, q), count) in h.interval_table().joint {
        p.add_term(
            c as u32 + 1,
            r as u32,
            q as u32,
            BigRational::from_integer(count.into()),
        );
    }
    p
}

/// Series engine against brute force: the full (x, y, q) coefficient of the
/// solved functional equation equals the joint statistic polynomial, plus
/// the residual and degree-bound invariants.
pub fn suite_series() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=2usize {
        let order = 4;
        let f = series::solve_f(m, order, true, true);
        let mut ok = true;
        for n in 0..=order {
            let h = HasseDiagram::build(m, n).expect("desk scale");
            if &joint_poly(&h) != f.coeff(n) {
                ok = false;
            }
        }
        out.push(Check::of(
            format!("series m={m}: [t^n] of the solution = joint statistics (n<=4)"),
            ok,
            "joint polynomial mismatch",
        ));
        out.push(Check::of(
            format!("series m={m}: residual of the functional equation vanishes"),
            series::equation_residual_is_zero(&f, m, true, true),
            "nonzero residual",
        ));
        let mut bounds = true;
        for (n, p) in f.coeffs().iter().enumerate() {
            if p.deg_x() > n + 1 || p.deg_y() as usize > n {
                bounds = false;
            }
            for (_, _, _, c) in p.terms() {
                if !c.is_integer() || c < &BigRational::from_integer(0.into()) {
                    bounds = false;
                }
            }
        }
        out.push(Check::of(
            format!("series m={m}: degree bounds and nonnegative integer coefficients"),
            bounds,
            "degree bound or coefficient violation",
        ));
    }
    out
}

/// x <-> y symmetry of `y F(t;x,y)` for each m at the given order.
pub fn suite_symmetry(specs: &[(usize, usize)]) -> Vec<Check> {
    specs
        .iter()
        .map(|&(m, order)| {
            let f = series::solve_f(m, order, true, false);
            Check::of(
                format!("symmetry m={m}: y*F symmetric in x and y through order {order}"),
                series::check_symmetry(&f),
                "symmetry violated",
            )
        })
        .collect()
}

pub fn default_symmetry_specs() -> Vec<(usize, usize)> {
    alloc::vec![(1, 8), (2, 6)]
}

/// The algebraic parametrization: closed form of F(t;1,1) for m <= 3 and
/// the full bivariate form at (x0, y0) = (2, 3) for m <= 2.
pub fn suite_parametrization() -> Vec<Check> {
    let mut out = Vec::new();
    for m in 1..=3usize {
        out.push(Check::of(
            format!("parametrization m={m}: F(t;1,1) closed form through order 8"),
            series::check_f11_parametrization(m, 8),
            "closed form mismatch",
        ));
    }
    let (x0, y0) = (
        BigRational::from_integer(2.into()),
        BigRational::from_integer(3.into()),
    );
    for m in 1..=2usize {
        let pass = series::check_full_parametrization(m, 6, &x0, &y0) == Ok(true);
        out.push(Check::of(
            format!("parametrization m={m}: full form at (x,y)=(2,3) through order 6"),
            pass,
            "parametrized form mismatch",
        ));
    }
    out
}

/// The Lambda-operator identity suite at truncation `n_z`.
pub fn suite_identities(m_max: usize, n_z: usize) -> Vec<Check> {
    let mut out = Vec::new();

    let mut ok = true;
    for p in 0..=6usize {
        ok &= identities::verify_lambda_elem(p, n_z);
    }
    out.push(Check::of(
        String::from("identities: elementary Lambda images (p <= 6)"),
        ok,
        "elementary image mismatch",
    ));

    let mut ok = true;
    for m in 1..=m_max {
        ok &= identities::verify_lemma_id(m, n_z);
    }
    out.push(Check::of(
        format!("identities: Lambda^m(1/w^m) closed form (m <= {m_max})"),
        ok,
        "lemma identity mismatch",
    ));

    let mut ok = true;
    for m in 1..=m_max.min(5) {
        for k in 1..=m {
            ok &= identities::verify_identity_k(m, k, n_z);
        }
    }
    out.push(Check::of(
        format!("identities: Lambda^k(1/w^m) general identity (k <= m <= {})", m_max.min(5)),
        ok,
        "general identity mismatch",
    ));

    let mut ok = true;
    for m in 1..=3usize {
        ok &= identities::verify_final_id(m, n_z) == Ok(true);
    }
    out.push(Check::of(
        String::from("identities: key identity for H(u,v) and its v=0 form (m <= 3)"),
        ok,
        "key identity mismatch",
    ));

    let mut ok = true;
    for m in 1..=2usize {
        let h = match identities::h_series(m, n_z) {
            Ok(h) => h,
            Err(_) => {
                ok = false;
                continue;
            }
        };
        ok &= identities::verify_sym_form(&h, m) == Ok(true);
    }
    out.push(Check::of(
        String::from("identities: symmetric form preserved by Lambda (m <= 2, k <= m)"),
        ok,
        "symmetric form mismatch",
    ));

    out.push(Check::of(
        String::from("identities: Lagrange-inversion table of the kernel series (N = 10)"),
        identities::verify_appendix_lagrange(10),
        "table mismatch",
    ));

    let mut ok = true;
    for d in 2..=8i64 {
        for p in 1..=d {
            ok &= identities::verify_hypergeometric(d, 0, p);
        }
    }
    out.push(Check::of(
        String::from("identities: terminal hypergeometric sum (m-i <= 8)"),
        ok,
        "hypergeometric sum mismatch",
    ));

    let mut ok = true;
    for a in -6..=6i64 {
        for b in 0..=6i64 {
            for r1 in -3..=3i64 {
                for r2 in r1..=12 {
                    ok &= identities::telescoping_identity(a, b, r1, r2);
                }
            }
        }
    }
    out.push(Check::of(
        String::from("identities: telescoping binomial sum"),
        ok,
        "telescoping identity mismatch",
    ));
    out
}

/// Generating polynomial (in x and y) of the k-pointed intervals of one
/// diagram: x marks active contacts, y the rise statistic.
pub fn pointed_poly(h: &HasseDiagram, k: usize) -> Poly {
    let mut p = Poly::zero();
    for pi in lattice::pointed_intervals(h, k) {
        p.add_term(
            pi.active_contacts() as u32,
            pi.initial_rise(h.m()) as u32,
            0,
            BigRational::one(),
        );
    }
    p
}

/// The pointed recursion: the generating polynomial of (k+1)-pointed
/// intervals equals `F(x,1) * Delta G^{(k)}` coefficientwise in t, x, y.
pub fn suite_pointed() -> Vec<Check> {
    let mut out = Vec::new();
    let order = 3usize;
    for m in 1..=2usize {
        let f = series::solve_f(m, order, true, false);
        let f1: Vec<Poly> = f.coeffs().iter().map(Poly::eval_y1).collect();
        let diagrams: Vec<HasseDiagram> =
            (0..=order).map(|n| HasseDiagram::build(m, n).expect("desk scale")).collect();
        for k in 0..m {
            let g_k: Vec<Poly> = diagrams.iter().map(|h| pointed_poly(h, k)).collect();
            let g_k1: Vec<Poly> = diagrams.iter().map(|h| pointed_poly(h, k + 1)).collect();
            let mut ok = true;
            for n in 0..=order {
                let mut rhs = Poly::zero();
                for a in 0..=n {
                    rhs = rhs.add(&f1[a].mul(&series::delta(&g_k[n - a])));
                }
                if rhs != g_k1[n] {
                    ok = false;
                }
            }
            out.push(Check::of(
                format!("pointed m={m} k={k}: (k+1)-pointed polynomial = F(x,1)*Delta G^(k)"),
                ok,
                "pointed recursion mismatch",
            ));
        }
    }
    out
}

/// Every suite at its default desk-scale grid.
pub fn all_suites() -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(suite_counts(&default_counts_grid()));
    out.extend(suite_contacts());
    out.extend(suite_order(&default_order_grid()));
    out.extend(suite_bijections());
    out.extend(suite_series());
    out.extend(suite_symmetry(&default_symmetry_specs()));
    out.extend(suite_parametrization());
    out.extend(suite_identities(6, 20));
    out.extend(suite_pointed());
    out
}
