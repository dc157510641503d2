//! Exact truncated power series in t whose coefficients are polynomials in
//! x (contacts), y (initial rise) and q (longest chain), over
//! arbitrary-precision rationals.
//!
//! The solver extracts the unique power-series solution of the catalytic
//! functional equation order by order: the coefficient of t^n only involves
//! coefficients of smaller order, so each order is computed exactly once and
//! termination is structural. The composed operator is evaluated by m
//! sequential applications, never expanded symbolically.
//!
//! Polynomials are dense in x with sparse handling of y and q: the x-degree
//! grows linearly while y and q stay small at desk scale.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// The parametrized form has a removable singularity at x0 = y0; pick
    /// distinct evaluation points.
    DegenerateEvaluation,
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::DegenerateEvaluation => {
                write!(f, "evaluation requires x0 != y0")
            }
        }
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn rat_pow(base: &BigRational, mut exp: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut b = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        exp >>= 1;
    }
    acc
}

/// Exact polynomial in x, y, q over rationals; dense in x, sparse in (y, q).
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    // coeffs[i] maps (y_exp, q_exp) to the coefficient of x^i y^r q^k
    coeffs: Vec<BTreeMap<(u32, u32), BigRational>>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::monomial(0, 0, 0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(rat(c))
    }

    pub fn one() -> Self {
        Poly::from_int(1)
    }

    pub fn x() -> Self {
        Poly::monomial(1, 0, 0, BigRational::one())
    }

    pub fn y() -> Self {
        Poly::monomial(0, 1, 0, BigRational::one())
    }

    pub fn q() -> Self {
        Poly::monomial(0, 0, 1, BigRational::one())
    }

    pub fn monomial(i: u32, r: u32, k: u32, c: BigRational) -> Self {
        let mut p = Poly::zero();
        p.add_term(i, r, k, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_x(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> u32 {
        self.terms().map(|(_, r, _, _)| r).max().unwrap_or(0)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms().map(|(_, _, k, _)| k).max().unwrap_or(0)
    }

    /// Iterates over the nonzero terms as `(x_exp, y_exp, q_exp, coeff)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, u32, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.iter().map(move |(&(r, k), c)| (i as u32, r, k, c)))
    }

    pub fn coeff(&self, i: u32, r: u32, k: u32) -> BigRational {
        self.coeffs
            .get(i as usize)
            .and_then(|m| m.get(&(r, k)).cloned())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, i: u32, r: u32, k: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let i = i as usize;
        while self.coeffs.len() <= i {
            self.coeffs.push(BTreeMap::new());
        }
        let slot = &mut self.coeffs[i];
        let entry = slot.entry((r, k)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            slot.remove(&(r, k));
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(BTreeMap::is_empty) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (i, r, k, c) in other.terms() {
            out.add_term(i, r, k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (i, r, k, c) in other.terms() {
            out.add_term(i, r, k, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly::zero().sub(self)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (i1, r1, k1, c1) in self.terms() {
            for (i2, r2, k2, c2) in other.terms() {
                out.add_term(i1 + i2, r1 + r2, k1 + k2, c1 * c2);
            }
        }
        out
    }

    fn fold_exps(&self, f: impl Fn(u32, u32, u32) -> (u32, u32, u32)) -> Poly {
        let mut out = Poly::zero();
        for (i, r, k, c) in self.terms() {
            let (i2, r2, k2) = f(i, r, k);
            out.add_term(i2, r2, k2, c.clone());
        }
        out
    }

    /// Substitutes x = 1.
    pub fn eval_x1(&self) -> Poly {
        self.fold_exps(|_, r, k| (0, r, k))
    }

    /// Substitutes y = 1.
    pub fn eval_y1(&self) -> Poly {
        self.fold_exps(|i, _, k| (i, 0, k))
    }

    /// Substitutes q = 1.
    pub fn eval_q1(&self) -> Poly {
        self.fold_exps(|i, r, _| (i, r, 0))
    }

    /// Exchanges the x and y exponents.
    pub fn swap_xy(&self) -> Poly {
        self.fold_exps(|i, r, k| (r, i, k))
    }

    /// Full evaluation at rational points.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational, q0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, r, k, c) in self.terms() {
            acc += c * rat_pow(x0, i) * rat_pow(y0, r) * rat_pow(q0, k);
        }
        acc
    }
}

/// The divided difference `(S(x) - S(1)) / (x - 1)`; always an exact
/// polynomial quotient.
pub fn delta(s: &Poly) -> Poly {
    // [x^i] of the quotient is the sum of the x-coefficients of S above i
    let mut out = Poly::zero();
    for (i, r, k, c) in s.terms() {
        for l in 0..i {
            out.add_term(l, r, k, c.clone());
        }
    }
    out
}

/// The q-divided difference `(S(qx) - S(1)) / (qx - 1)`; exact in the
/// polynomial ring over q, and equal to [`delta`] at q = 1.
pub fn delta_q(s: &Poly) -> Poly {
    // c x^i y^r q^k contributes c y^r q^k (1 + qx + ... + (qx)^{i-1})
    let mut out = Poly::zero();
    for (i, r, k, c) in s.terms() {
        for l in 0..i {
            out.add_term(l, r, k + l, c.clone());
        }
    }
    out
}

/// A power series in t truncated at a fixed order, with [`Poly`]
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Poly>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty());
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Poly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// Specializes every coefficient at rational points, giving a univariate
    /// series in t.
    pub fn eval(&self, x0: &BigRational, y0: &BigRational, q0: &BigRational) -> RatSeries {
        RatSeries::from_coeffs(self.coeffs.iter().map(|p| p.eval(x0, y0, q0)).collect())
    }
}

fn series_mul(a: &[Poly], b: &[Poly], trunc: usize) -> Vec<Poly> {
    let mut out = alloc::vec![Poly::zero(); trunc + 1];
    for (i, pa) in a.iter().enumerate().take(trunc + 1) {
        if pa.is_zero() {
            continue;
        }
        for (j, pb) in b.iter().enumerate().take(trunc + 1 - i) {
            if pb.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&pa.mul(pb));
        }
    }
    out
}

fn operator_chain(coeffs: &[Poly], m: usize, trunc: usize, with_q: bool) -> Vec<Poly> {
    let f1: Vec<Poly> = coeffs.iter().take(trunc + 1).map(Poly::eval_y1).collect();
    let mut g: Vec<Poly> = coeffs.iter().take(trunc + 1).cloned().collect();
    for _ in 0..m {
        let dg: Vec<Poly> =
            g.iter().map(|p| if with_q { delta_q(p) } else { delta(p) }).collect();
        g = series_mul(&f1, &dg, trunc);
    }
    g
}

/// Solves `F(x,y) = x + xyt (F(x,1) . Delta)^(m) (F(x,y))` order by order,
/// truncated at `t^order`. `with_y` keeps the initial-rise variable,
/// `with_q` switches the divided difference to its q-analogue.
pub fn solve_f(m: usize, order: usize, with_y: bool, with_q: bool) -> TruncatedSeries {
    assert!(m >= 1);
    let mut coeffs = alloc::vec![Poly::x()];
    for n in 1..=order {
        let g = operator_chain(&coeffs, m, n - 1, with_q);
        let mut f_n = Poly::x().mul(&g[n - 1]);
        if with_y {
            f_n = f_n.mul(&Poly::y());
        }
        coeffs.push(f_n);
    }
    TruncatedSeries { coeffs }
}

/// Substitutes the solved series back into the functional equation and
/// reports whether the residual vanishes identically through the truncation
/// order.
pub fn equation_residual_is_zero(f: &TruncatedSeries, m: usize, with_y: bool, with_q: bool) -> bool {
    let order = f.order();
    if f.coeff(0) != &Poly::x() {
        return false;
    }
    if order == 0 {
        return true;
    }
    let g = operator_chain(f.coeffs(), m, order - 1, with_q);
    for n in 1..=order {
        let mut rhs = Poly::x().mul(&g[n - 1]);
        if with_y {
            rhs = rhs.mul(&Poly::y());
        }
        if &rhs != f.coeff(n) {
            return false;
        }
    }
    true
}

/// True iff `y * [t^n]F` is invariant under exchanging x and y for every
/// order of the truncation.
pub fn check_symmetry(f: &TruncatedSeries) -> bool {
    let y = Poly::y();
    f.coeffs().iter().all(|p| {
        let yp = y.mul(p);
        yp == yp.swap_xy()
    })
}

/// Univariate series over exact rationals, truncated at a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct RatSeries {
    c: Vec<BigRational>,
}

impl RatSeries {
    pub fn zero(order: usize) -> Self {
        RatSeries { c: alloc::vec![BigRational::zero(); order + 1] }
    }

    pub fn constant(v: BigRational, order: usize) -> Self {
        let mut s = RatSeries::zero(order);
        s.c[0] = v;
        s
    }

    /// The series `t`, truncated at `order`.
    pub fn var(order: usize) -> Self {
        let mut s = RatSeries::zero(order);
        if order >= 1 {
            s.c[1] = BigRational::one();
        }
        s
    }

    pub fn from_coeffs(c: Vec<BigRational>) -> Self {
        assert!(!c.is_empty());
        RatSeries { c }
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigRational {
        &self.c[n]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(BigRational::is_zero)
    }

    pub fn add(&self, other: &RatSeries) -> RatSeries {
        assert_eq!(self.order(), other.order());
        RatSeries { c: self.c.iter().zip(&other.c).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &RatSeries) -> RatSeries {
        assert_eq!(self.order(), other.order());
        RatSeries { c: self.c.iter().zip(&other.c).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, v: &BigRational) -> RatSeries {
        RatSeries { c: self.c.iter().map(|a| a * v).collect() }
    }

    pub fn mul(&self, other: &RatSeries) -> RatSeries {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = RatSeries::zero(n);
        for i in 0..=n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.c[j].is_zero() {
                    continue;
                }
                let prod = &self.c[i] * &other.c[j];
                out.c[i + j] += prod;
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u32) -> RatSeries {
        let mut acc = RatSeries::constant(BigRational::one(), self.order());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> RatSeries {
        assert!(!self.c[0].is_zero(), "inverse requires a unit constant term");
        let n = self.order();
        let inv0 = BigRational::one() / &self.c[0];
        let mut out = RatSeries::zero(n);
        out.c[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                acc += &self.c[j] * &out.c[k - j];
            }
            out.c[k] = -acc * &inv0;
        }
        out
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> RatSeries {
        let n = self.order();
        let mut out = RatSeries::zero(n);
        for i in 0..=n.saturating_sub(k) {
            out.c[i + k] = self.c[i].clone();
        }
        out
    }

    /// Composition `self(inner)`; the inner series must have zero constant
    /// term.
    pub fn compose(&self, inner: &RatSeries) -> RatSeries {
        assert_eq!(self.order(), inner.order());
        assert!(inner.c[0].is_zero(), "composition requires valuation >= 1");
        let n = self.order();
        let mut acc = RatSeries::constant(self.c[n].clone(), n);
        for k in (0..n).rev() {
            acc = acc.mul(inner);
            acc.c[0] += &self.c[k];
        }
        acc
    }
}

/// The series `z(t)` with `z = t + O(t^2)` satisfying
/// `z (1-z)^{m^2+2m} = t`, by fixed-point iteration, verified by
/// back-substitution.
pub fn invert_t_to_z(m: usize, order: usize) -> RatSeries {
    assert!(m >= 1);
    let e = (m * m + 2 * m) as u32;
    let one = RatSeries::constant(BigRational::one(), order);
    let t = RatSeries::var(order);
    let mut z = t.clone();
    for _ in 0..order {
        z = t.mul(&one.sub(&z).pow(e).inverse());
    }
    debug_assert_eq!(z.mul(&one.sub(&z).pow(e)), t, "back-substitution");
    z
}

/// Checks the closed form `F(t;1,1) = (1-(m+1)z) / (1-z)^{m+2}` under
/// `t = z(1-z)^{m^2+2m}` against the functional-equation solution, through
/// `t^order`.
pub fn check_f11_parametrization(m: usize, order: usize) -> bool {
    let zvar = RatSeries::var(order);
    let one = RatSeries::constant(BigRational::one(), order);
    let closed =
        one.sub(&zvar.scale(&rat(m as i64 + 1))).mul(&one.sub(&zvar).pow(m as u32 + 2).inverse());
    let lhs = closed.compose(&invert_t_to_z(m, order));
    let f = solve_f(m, order, false, false);
    let one_r = BigRational::one();
    let rhs = f.eval(&one_r, &one_r, &one_r);
    lhs == rhs
}

/// Checks the full parametrized form of `y F(t;x,y)` at exact rational
/// points `(x0, y0)` with `x0 != y0`, through `t^order`.
///
/// The series u, v are solved from `x0 = (1+u)/(1+zu)^{m+1}` (and the y0
/// analogue) by fixed-point iteration in z, composed with z(t), and compared
/// against the functional-equation solution evaluated at `(x0, y0)`.
pub fn check_full_parametrization(
    m: usize,
    order: usize,
    x0: &BigRational,
    y0: &BigRational,
) -> Result<bool, SeriesError> {
    if x0 == y0 {
        return Err(SeriesError::DegenerateEvaluation);
    }
    let one = RatSeries::constant(BigRational::one(), order);
    let zvar = RatSeries::var(order);
    let mb = m as u32 + 1;

    // u = x0 (1+zu)^{m+1} - 1, starting from u(0) = x0 - 1
    let solve_uv = |point: &BigRational| {
        let mut u = RatSeries::constant(point - BigRational::one(), order);
        for _ in 0..=order {
            u = one.add(&u.shift(1)).pow(mb).scale(point).sub(&one);
        }
        u
    };
    let u = solve_uv(x0);
    let v = solve_uv(y0);

    let w_u = one.add(&u.shift(1)); // 1 + zu
    let w_v = one.add(&v.shift(1));
    let xterm = one.add(&u).mul(&w_u.pow(mb).inverse());
    let yterm = one.add(&v).mul(&w_v.pow(mb).inverse());
    debug_assert_eq!(xterm.coeff(0), x0);
    debug_assert_eq!(yterm.coeff(0), y0);

    let num = one
        .add(&u)
        .mul(&w_u)
        .mul(&one.add(&v))
        .mul(&w_v)
        .mul(&xterm.sub(&yterm));
    let den = u
        .sub(&v)
        .mul(&one.sub(&u.mul(&v).shift(1)))
        .mul(&one.sub(&zvar).pow(m as u32 + 2));
    let lhs = num.mul(&den.inverse()).compose(&invert_t_to_z(m, order));

    let f = solve_f(m, order, true, false);
    let rhs = f.eval(x0, y0, &BigRational::one()).scale(y0);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        let x2 = Poly::x().mul(&Poly::x());
        assert_eq!(delta(&x2), Poly::x().add(&Poly::one()));
        assert_eq!(delta(&Poly::from_int(7)), Poly::zero());
        let x2y = x2.mul(&Poly::y());
        assert_eq!(delta(&x2y), Poly::x().add(&Poly::one()).mul(&Poly::y()));
    }

    #[test]
    fn delta_q_examples() {
        assert_eq!(delta_q(&Poly::x()), Poly::one());
        let x2 = Poly::x().mul(&Poly::x());
        let qx_plus_1 = Poly::q().mul(&Poly::x()).add(&Poly::one());
        assert_eq!(delta_q(&x2), qx_plus_1);
    }

    #[test]
    fn delta_q_specializes_to_delta() {
        // deterministic pseudo-random polynomials of degree up to 12
        let mut state = 0x243f_6a88_85a3_08d3u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state
        };
        for _ in 0..20 {
            let mut p = Poly::zero();
            for _ in 0..15 {
                let r = next();
                let i = (r % 13) as u32;
                let y = ((r >> 8) % 4) as u32;
                let q = ((r >> 16) % 4) as u32;
                let c = ((r >> 24) % 19) as i64 - 9;
                p.add_term(i, y, q, rat(c));
            }
            assert_eq!(delta_q(&p).eval_q1(), delta(&p.eval_q1()));
        }
    }

    #[test]
    fn solve_first_orders() {
        let f = solve_f(1, 1, true, false);
        assert_eq!(f.coeff(0), &Poly::x());
        let x2y = Poly::x().mul(&Poly::x()).mul(&Poly::y());
        assert_eq!(f.coeff(1), &x2y);
    }

    #[test]
    fn solve_counts_m1() {
        let f = solve_f(1, 4, false, false);
        let one = BigRational::one();
        let vals: Vec<BigRational> =
            (0..=4).map(|n| f.coeff(n).eval(&one, &one, &one)).collect();
        let expect: Vec<BigRational> = [1, 1, 3, 13, 68].iter().map(|&v| rat(v)).collect();
        assert_eq!(vals, expect);
    }

    #[test]
    fn q_refined_second_order() {
        let f = solve_f(1, 2, true, true);
        let expect = Poly::q().add(&Poly::from_int(2));
        assert_eq!(f.coeff(2).eval_x1().eval_y1(), expect);
    }

    #[test]
    fn symmetry_and_negative_control() {
        assert!(check_symmetry(&solve_f(1, 6, true, false)));
        assert!(check_symmetry(&solve_f(2, 5, true, false)));
        let f = solve_f(1, 4, true, false);
        let mut coeffs: Vec<Poly> = f.coeffs().to_vec();
        // x^2 lands off the symmetry diagonal once multiplied by y
        coeffs[3] = coeffs[3].add(&Poly::x().mul(&Poly::x()));
        assert!(!check_symmetry(&TruncatedSeries::from_coeffs(coeffs)));
    }

    #[test]
    fn residual_vanishes() {
        for (m, with_y, with_q) in [(1usize, true, false), (2, true, true), (3, false, false)] {
            let f = solve_f(m, 4, with_y, with_q);
            assert!(equation_residual_is_zero(&f, m, with_y, with_q));
        }
        let f = solve_f(1, 3, true, false);
        let mut coeffs: Vec<Poly> = f.coeffs().to_vec();
        coeffs[2] = coeffs[2].add(&Poly::one());
        assert!(!equation_residual_is_zero(
            &TruncatedSeries::from_coeffs(coeffs),
            1,
            true,
            false
        ));
    }

    #[test]
    fn coefficients_are_nonnegative_integers_with_degree_bounds() {
        for (m, order) in [(1usize, 6usize), (2, 5)] {
            let f = solve_f(m, order, true, true);
            for (n, p) in f.coeffs().iter().enumerate() {
                assert!(p.deg_x() <= n + 1);
                assert!(p.deg_y() as usize <= n);
                for (_, _, _, c) in p.terms() {
                    assert!(c.is_integer());
                    assert!(c >= &BigRational::zero());
                }
            }
        }
    }

    #[test]
    fn z_inversion() {
        let z = invert_t_to_z(1, 5);
        assert!(z.coeff(0).is_zero());
        assert_eq!(z.coeff(1), &rat(1));
        assert_eq!(z.coeff(2), &rat(3));
        for m in 1..=3 {
            let z = invert_t_to_z(m, 8);
            let one = RatSeries::constant(BigRational::one(), 8);
            let e = (m * m + 2 * m) as u32;
            assert_eq!(z.mul(&one.sub(&z).pow(e)), RatSeries::var(8));
        }
    }

    #[test]
    fn f11_parametrization_small() {
        assert!(check_f11_parametrization(1, 6));
        assert!(check_f11_parametrization(2, 5));
    }

    #[test]
    fn full_parametrization_small() {
        assert_eq!(check_full_parametrization(1, 5, &rat(2), &rat(3)), Ok(true));
        assert_eq!(
            check_full_parametrization(1, 4, &rat(1), &rat(1)),
            Err(SeriesError::DegenerateEvaluation)
        );
    }
}
