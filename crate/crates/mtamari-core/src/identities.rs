//! Machine verification of the Lambda-operator identities behind the
//! parametrized solution.
//!
//! Every "rational function" identity is checked as a truncated series in z
//! with exact polynomial coefficients in u (and v): both sides are
//! determined by finitely many z-orders at fixed degree growth, so series
//! arithmetic at a configurable truncation replaces a full rational-function
//! field. Divisions by (u - v) are performed coefficientwise with the
//! remainder asserted zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::formulas::binomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityError {
    /// A division promised to be exact left a remainder; this would indicate
    /// an implementation bug, not a failed identity.
    NonDivisible,
}

impl fmt::Display for IdentityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityError::NonDivisible => write!(f, "polynomial division left a remainder"),
        }
    }
}

fn rat_int(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn rat(v: i64) -> BigRational {
    rat_int(BigInt::from(v))
}

/// Exact polynomial in u and v over rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct UvPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl UvPoly {
    pub fn zero() -> Self {
        UvPoly { terms: BTreeMap::new() }
    }

    pub fn term(a: u32, b: u32, c: BigRational) -> Self {
        let mut p = UvPoly::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn one() -> Self {
        UvPoly::term(0, 0, BigRational::one())
    }

    pub fn u() -> Self {
        UvPoly::term(1, 0, BigRational::one())
    }

    pub fn v() -> Self {
        UvPoly::term(0, 1, BigRational::one())
    }

    pub fn one_plus_u() -> Self {
        let mut p = UvPoly::one();
        p.add_term(1, 0, BigRational::one());
        p
    }

    pub fn one_plus_v() -> Self {
        let mut p = UvPoly::one();
        p.add_term(0, 1, BigRational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, &BigRational)> + '_ {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn add(&self, other: &UvPoly) -> UvPoly {
        let mut out = self.clone();
        for (a, b, c) in other.iter() {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &UvPoly) -> UvPoly {
        let mut out = self.clone();
        for (a, b, c) in other.iter() {
            out.add_term(a, b, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &UvPoly) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a1, b1, c1) in self.iter() {
            for (a2, b2, c2) in other.iter() {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a, b, k) in self.iter() {
            out.add_term(a, b, k * c);
        }
        out
    }

    /// Substitutes u = 0.
    pub fn subst_u0(&self) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a, b, c) in self.iter() {
            if a == 0 {
                out.add_term(0, b, c.clone());
            }
        }
        out
    }

    /// Substitutes v = 0.
    pub fn subst_v0(&self) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a, b, c) in self.iter() {
            if b == 0 {
                out.add_term(a, 0, c.clone());
            }
        }
        out
    }

    /// Exchanges u and v.
    pub fn swap_uv(&self) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a, b, c) in self.iter() {
            out.add_term(b, a, c.clone());
        }
        out
    }

    /// Exact division by u: every term must have a positive u-exponent.
    fn div_u(&self) -> UvPoly {
        let mut out = UvPoly::zero();
        for (a, b, c) in self.iter() {
            assert!(a >= 1, "division by u must be exact");
            out.add_term(a - 1, b, c.clone());
        }
        out
    }
}

/// Series in z truncated at a fixed order, with [`UvPoly`] coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ZSeries {
    c: Vec<UvPoly>,
}

impl ZSeries {
    pub fn zero(n_z: usize) -> Self {
        ZSeries { c: alloc::vec![UvPoly::zero(); n_z + 1] }
    }

    pub fn one(n_z: usize) -> Self {
        let mut s = ZSeries::zero(n_z);
        s.c[0] = UvPoly::one();
        s
    }

    pub fn from_poly(p: UvPoly, n_z: usize) -> Self {
        let mut s = ZSeries::zero(n_z);
        s.c[0] = p;
        s
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn coeff(&self, j: usize) -> &UvPoly {
        &self.c[j]
    }

    pub fn coeff_mut(&mut self, j: usize) -> &mut UvPoly {
        &mut self.c[j]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(UvPoly::is_zero)
    }

    pub fn truncate(&self, n_z: usize) -> ZSeries {
        assert!(n_z <= self.order());
        ZSeries { c: self.c[..=n_z].to_vec() }
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        assert_eq!(self.order(), other.order());
        ZSeries { c: self.c.iter().zip(&other.c).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, other: &ZSeries) -> ZSeries {
        assert_eq!(self.order(), other.order());
        ZSeries { c: self.c.iter().zip(&other.c).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> ZSeries {
        ZSeries { c: self.c.iter().map(|p| p.scale(k)).collect() }
    }

    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = ZSeries::zero(n);
        for i in 0..=n {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if other.c[j].is_zero() {
                    continue;
                }
                out.c[i + j] = out.c[i + j].add(&self.c[i].mul(&other.c[j]));
            }
        }
        out
    }

    pub fn mul_poly(&self, p: &UvPoly) -> ZSeries {
        ZSeries { c: self.c.iter().map(|q| q.mul(p)).collect() }
    }

    /// Multiplies by z^k.
    pub fn shift_z(&self, k: usize) -> ZSeries {
        let n = self.order();
        let mut out = ZSeries::zero(n);
        for i in 0..=n.saturating_sub(k) {
            out.c[i + k] = self.c[i].clone();
        }
        out
    }

    pub fn subst_u0(&self) -> ZSeries {
        ZSeries { c: self.c.iter().map(UvPoly::subst_u0).collect() }
    }

    pub fn subst_v0(&self) -> ZSeries {
        ZSeries { c: self.c.iter().map(UvPoly::subst_v0).collect() }
    }

    pub fn swap_uv(&self) -> ZSeries {
        ZSeries { c: self.c.iter().map(UvPoly::swap_uv).collect() }
    }

    /// Multiplies by (1 + zu).
    pub fn mul_one_plus_zu(&self) -> ZSeries {
        let n = self.order();
        let u = UvPoly::u();
        let mut out = self.clone();
        for j in (1..=n).rev() {
            out.c[j] = out.c[j].add(&self.c[j - 1].mul(&u));
        }
        out
    }

    /// Multiplies by (1 + zv).
    pub fn mul_one_plus_zv(&self) -> ZSeries {
        let n = self.order();
        let v = UvPoly::v();
        let mut out = self.clone();
        for j in (1..=n).rev() {
            out.c[j] = out.c[j].add(&self.c[j - 1].mul(&v));
        }
        out
    }

    /// Exact division by (u - v), coefficient by coefficient, with the
    /// remainder (the value at u = v) asserted zero.
    pub fn div_u_minus_v(&self) -> Result<ZSeries, IdentityError> {
        let mut out = ZSeries::zero(self.order());
        for (j, p) in self.c.iter().enumerate() {
            let mut quot = UvPoly::zero();
            let mut rem: BTreeMap<u32, BigRational> = BTreeMap::new();
            for (a, b, c) in p.iter() {
                // c u^a v^b = (u-v) c (u^{a-1} + ... + v^{a-1}) v^b + c v^{a+b}
                for k in 0..a {
                    quot.add_term(k, b + (a - 1 - k), c.clone());
                }
                let e = rem.entry(a + b).or_insert_with(BigRational::zero);
                *e += c;
            }
            if rem.values().any(|c| !c.is_zero()) {
                return Err(IdentityError::NonDivisible);
            }
            out.c[j] = quot;
        }
        Ok(out)
    }

    /// Exact division by (1 - zuv) via the geometric recurrence.
    pub fn div_one_minus_zuv(&self) -> ZSeries {
        let n = self.order();
        let uv = UvPoly::u().mul(&UvPoly::v());
        let mut out = ZSeries::zero(n);
        out.c[0] = self.c[0].clone();
        for j in 1..=n {
            out.c[j] = self.c[j].add(&out.c[j - 1].mul(&uv));
        }
        out
    }
}

/// The operator `Lambda H = (1+u)(1+zu)(H(u,v) - H(0,v))/u`. Exact at the
/// same truncation: multiplying by (1+zu) and dividing by u consume no
/// z-orders from below.
pub fn lambda(h: &ZSeries) -> ZSeries {
    let diff = h.sub(&h.subst_u0());
    let b = ZSeries { c: diff.c.iter().map(UvPoly::div_u).collect() };
    b.mul_poly(&UvPoly::one_plus_u()).mul_one_plus_zu()
}

/// Applies [`lambda`] k times.
pub fn lambda_iter(h: &ZSeries, k: usize) -> ZSeries {
    let mut out = h.clone();
    for _ in 0..k {
        out = lambda(&out);
    }
    out
}

/// `w^p = (1+zu)^p` for any integer p (negative powers expand as series).
pub fn w_power(p: i64, n_z: usize) -> ZSeries {
    let mut s = ZSeries::zero(n_z);
    for j in 0..=n_z {
        s.c[j] = UvPoly::term(j as u32, 0, rat_int(binomial(p, j as i64)));
    }
    s
}

/// `(1-z)^p` for a nonnegative integer p.
pub fn one_minus_z_power(p: u32, n_z: usize) -> ZSeries {
    let mut s = ZSeries::zero(n_z);
    for j in 0..=n_z.min(p as usize) {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        s.c[j] = UvPoly::term(0, 0, rat(sign) * rat_int(binomial(p as i64, j as i64)));
    }
    s
}

/// Checks the elementary images of the operator: `Lambda(1) = 0` for p = 0,
/// and for p >= 1 both
/// `Lambda(1/w^p) = (1-z)/w^{p-1} - z sum_{a=0}^{p-2} 1/w^a - w` and
/// `Lambda(w^p) = (z-1)w + z sum_{a=2}^{p} w^a + w^{p+1}`.
pub fn verify_lambda_elem(p: usize, n_z: usize) -> bool {
    if p == 0 {
        return lambda(&ZSeries::one(n_z)).is_zero();
    }
    let p = p as i64;
    let w = w_power(1, n_z);

    let lhs_neg = lambda(&w_power(-p, n_z));
    let mut rhs_neg = one_minus_z_power(1, n_z).mul(&w_power(-(p - 1), n_z));
    for a in 0..=p - 2 {
        rhs_neg = rhs_neg.sub(&w_power(-a, n_z).shift_z(1));
    }
    rhs_neg = rhs_neg.sub(&w);

    let lhs_pos = lambda(&w_power(p, n_z));
    let mut rhs_pos = w.shift_z(1).sub(&w);
    for a in 2..=p {
        rhs_pos = rhs_pos.add(&w_power(a, n_z).shift_z(1));
    }
    rhs_pos = rhs_pos.add(&w_power(p + 1, n_z));

    lhs_neg == rhs_neg && lhs_pos == rhs_pos
}

/// Checks `Lambda^{(m)}(1/w^m) = (1-z)^m - w^m`.
pub fn verify_lemma_id(m: usize, n_z: usize) -> bool {
    let lhs = lambda_iter(&w_power(-(m as i64), n_z), m);
    let rhs = one_minus_z_power(m as u32, n_z).sub(&w_power(m as i64, n_z));
    lhs == rhs
}

/// Checks the general identity for `Lambda^{(k)}(1/w^m)`, `1 <= k <= m`;
/// the case k = m coincides with [`verify_lemma_id`].
pub fn verify_identity_k(m: usize, k: usize, n_z: usize) -> bool {
    assert!(k >= 1 && k <= m);
    let (mi, ki) = (m as i64, k as i64);
    let lhs = lambda_iter(&w_power(-mi, n_z), k);

    let mut rhs = one_minus_z_power(k as u32, n_z).mul(&w_power(-(mi - ki), n_z));
    for i in ki..=mi - 1 {
        for j in 1..=ki {
            let sign = if (ki + j) % 2 == 0 { 1 } else { -1 };
            let coeff = rat(sign) * rat_int(binomial(ki, j - 1) * binomial(i - j + 1, ki - j));
            let term = w_power(-(mi - i - 1), n_z).shift_z((ki - j + 1) as usize).scale(&coeff);
            rhs = rhs.sub(&term);
        }
    }
    for i in 1..=ki - 1 {
        for j in 1..=i {
            let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
            let coeff = rat(sign) * rat_int(binomial(i - 1, j - 1) * binomial(mi - ki + j - 1, j));
            let term = w_power(ki - i, n_z).shift_z(j as usize).scale(&coeff);
            rhs = rhs.add(&term);
        }
    }
    rhs = rhs.sub(&w_power(ki, n_z));
    lhs == rhs
}

/// `(1+u)/(1+zu)^{m+1}` as a series in z.
pub fn e_series(m: usize, n_z: usize) -> ZSeries {
    w_power(-(m as i64 + 1), n_z).mul_poly(&UvPoly::one_plus_u())
}

/// Builds `H(u,v)` and its quotient `H/((1+u)(1+v))`. The difference of the
/// u- and v-halves is divided exactly by (u - v) per z-coefficient and then
/// by (1 - zuv) via the geometric recurrence.
fn h_and_reduced(m: usize, n_z: usize) -> Result<(ZSeries, ZSeries), IdentityError> {
    let e_u = e_series(m, n_z);
    let e_v = e_u.swap_uv();
    let quot = e_u.sub(&e_v).div_u_minus_v()?;
    let reduced = quot.mul_one_plus_zu().mul_one_plus_zv().div_one_minus_zuv();
    let h = reduced.mul_poly(&UvPoly::one_plus_u()).mul_poly(&UvPoly::one_plus_v());
    Ok((h, reduced))
}

/// The bivariate series `H(u,v)` of the parametrized solution.
pub fn h_series(m: usize, n_z: usize) -> Result<ZSeries, IdentityError> {
    h_and_reduced(m, n_z).map(|(h, _)| h)
}

/// Checks the key identity
/// `z Lambda^{(m)} H = w_u^{m+1} w_v^{m+1} H/((1+u)(1+v)) - (1-z)^{m+2}`,
/// along with its v = 0 specialization and the u-v symmetry of H.
pub fn verify_final_id(m: usize, n_z: usize) -> Result<bool, IdentityError> {
    let (h, reduced) = h_and_reduced(m, n_z)?;
    if h != h.swap_uv() {
        return Ok(false);
    }

    let lhs = lambda_iter(&h, m).shift_z(1);
    let w_u_pow = w_power(m as i64 + 1, n_z);
    let w_v_pow = w_u_pow.swap_uv();
    let rhs = w_u_pow.mul(&w_v_pow).mul(&reduced).sub(&one_minus_z_power(m as u32 + 2, n_z));
    if lhs != rhs {
        return Ok(false);
    }

    // v = 0 specialization: z Lambda^{(m+1)}((1+u)/w^{m+1})
    //   = ((1+u)(1+zu) - (1+zu)^{m+2})/u - (1-z)^{m+2}
    let lhs_simple = lambda_iter(&e_series(m, n_z), m + 1).shift_z(1);
    let num = w_power(1, n_z).mul_poly(&UvPoly::one_plus_u()).sub(&w_power(m as i64 + 2, n_z));
    let div = ZSeries { c: num.c.iter().map(UvPoly::div_u).collect() };
    let rhs_simple = div.sub(&one_minus_z_power(m as u32 + 2, n_z));
    Ok(lhs_simple == rhs_simple)
}

/// Checks the symmetric-form identity
/// `H(u,v) = (u(1+v)(1+zv)H(u,0) - v(1+u)(1+zu)H(v,0)) / ((u-v)(1-zuv))`
/// for `Lambda^{(k)} H`, all `k <= k_max`.
pub fn verify_sym_form(h: &ZSeries, k_max: usize) -> Result<bool, IdentityError> {
    let mut hk = h.clone();
    for k in 0..=k_max {
        if k > 0 {
            hk = lambda(&hk);
        }
        let h_u0 = hk.subst_v0();
        let h_v0 = h_u0.swap_uv();
        let term1 = h_u0.mul_poly(&UvPoly::u().mul(&UvPoly::one_plus_v())).mul_one_plus_zv();
        let term2 = h_v0.mul_poly(&UvPoly::v().mul(&UvPoly::one_plus_u())).mul_one_plus_zu();
        let rhs = term1.sub(&term2).div_u_minus_v()?.div_one_minus_zuv();
        if rhs != hk {
            return Ok(false);
        }
    }
    Ok(true)
}

// --- kernel-method series of the appendix ---------------------------------

/// Series in t with univariate polynomial coefficients in z, used only for
/// the Lagrange-inversion table of the appendix.
#[derive(Clone, Debug, PartialEq)]
struct TzSeries {
    // c[n] = coefficients of z^0, z^1, ... in [t^n]
    c: Vec<Vec<BigRational>>,
}

impl TzSeries {
    fn zero(order: usize) -> Self {
        TzSeries { c: alloc::vec![Vec::new(); order + 1] }
    }

    fn one(order: usize) -> Self {
        let mut s = TzSeries::zero(order);
        s.c[0] = alloc::vec![BigRational::one()];
        s
    }

    fn order(&self) -> usize {
        self.c.len() - 1
    }

    fn mul(&self, other: &TzSeries) -> TzSeries {
        let n = self.order();
        let mut out = TzSeries::zero(n);
        for i in 0..=n {
            if self.c[i].is_empty() {
                continue;
            }
            for j in 0..=n - i {
                if other.c[j].is_empty() {
                    continue;
                }
                let dst = i + j;
                let prod = poly_mul(&self.c[i], &other.c[j]);
                out.c[dst] = poly_add(&out.c[dst], &prod);
            }
        }
        out
    }

    fn sub(&self, other: &TzSeries) -> TzSeries {
        let mut out = self.clone();
        for (i, p) in other.c.iter().enumerate() {
            let neg: Vec<BigRational> = p.iter().map(|c| -c.clone()).collect();
            out.c[i] = poly_add(&out.c[i], &neg);
        }
        out
    }
}

fn poly_add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = alloc::vec![BigRational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = alloc::vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// The kernel series S(t,z): the unique power series in t with zero constant
/// term satisfying `1 - tz/(1-S) - t/S = 0`, expanded from the rearranged
/// quadratic `S = t + S^2 + (z-1) t S` order by order (no radicals).
fn kernel_series(order: usize) -> TzSeries {
    let mut s = TzSeries::zero(order);
    if order >= 1 {
        s.c[1] = alloc::vec![BigRational::one()];
    }
    for n in 2..=order {
        let mut acc: Vec<BigRational> = Vec::new();
        for a in 1..n {
            acc = poly_add(&acc, &poly_mul(&s.c[a], &s.c[n - a]));
        }
        // (z - 1) t S contributes (z-1) s_{n-1}
        let z_minus_1 = alloc::vec![-BigRational::one(), BigRational::one()];
        acc = poly_add(&acc, &poly_mul(&z_minus_1, &s.c[n - 1]));
        s.c[n] = acc;
    }
    s
}

/// Verifies the Lagrange-inversion table for `[t^n] S^k (S-1)`:
/// 0 for n < k, -1 for n = k, `1 - kz` for n = k+1, and otherwise
/// `(1/n) sum_p z^p C(n,p) C(n-k-1,p-1) (n-p-kp)/(n-k-1)`;
/// checked for all `1 <= n <= n_max`, `0 <= k <= n_max + 2`.
pub fn verify_appendix_lagrange(n_max: usize) -> bool {
    assert!(n_max >= 2);
    let s = kernel_series(n_max);
    let s_minus_1 = s.sub(&TzSeries::one(n_max));
    let mut s_pow = TzSeries::one(n_max);
    for k in 0..=(n_max as i64 + 2) {
        let table = s_pow.mul(&s_minus_1);
        for n in 1..=n_max as i64 {
            let expected: Vec<BigRational> = if n < k {
                Vec::new()
            } else if n == k {
                alloc::vec![-BigRational::one()]
            } else if n == k + 1 {
                if k == 0 {
                    alloc::vec![BigRational::one()]
                } else {
                    alloc::vec![BigRational::one(), rat(-k)]
                }
            } else {
                let mut coeffs = alloc::vec![BigRational::zero(); (n - k + 1) as usize];
                for p in 1..=n - k {
                    let c = rat_int(binomial(n, p) * binomial(n - k - 1, p - 1))
                        * rat(n - p - k * p)
                        / (rat(n) * rat(n - k - 1));
                    coeffs[p as usize] = c;
                }
                while coeffs.last().is_some_and(Zero::is_zero) {
                    coeffs.pop();
                }
                coeffs
            };
            if table.c[n as usize] != expected {
                return false;
            }
        }
        s_pow = s_pow.mul(&s);
    }
    true
}

/// Verifies the terminal hypergeometric identity: for `1 <= p <= m-i` and
/// `m - i >= 2`,
/// `sum_{j=0}^{m-i-2} (1/(j+1)) C(j+1,p) C(m-i-j-1,p-1)
///  (j+1-p(2j+i-m+2))/(m-i-j-1) = (m-i-1) [p=1]`.
pub fn verify_hypergeometric(m: i64, i: i64, p: i64) -> bool {
    let d = m - i;
    assert!(d >= 2 && p >= 1 && p <= d);
    let mut sum = BigRational::zero();
    for j in 0..=d - 2 {
        sum += rat_int(binomial(j + 1, p) * binomial(d - j - 1, p - 1))
            * rat(j + 1 - p * (2 * j + 2 - d))
            / (rat(j + 1) * rat(d - j - 1));
    }
    let expected = if p == 1 { rat(d - 1) } else { BigRational::zero() };
    sum == expected
}

/// The telescoping binomial-sum identity used in the inductive proof:
/// `sum_{r=r1}^{r2} C(r-a, b)
///  = ((r2+1-a-b)/(b+1)) C(r2+1-a, b) - ((r1-a-b)/(b+1)) C(r1-a, b)`.
pub fn telescoping_identity(a: i64, b: i64, r1: i64, r2: i64) -> bool {
    assert!(b >= 0 && r1 <= r2);
    let mut lhs = BigRational::zero();
    for r in r1..=r2 {
        lhs += rat_int(binomial(r - a, b));
    }
    let rhs = rat(r2 + 1 - a - b) / rat(b + 1) * rat_int(binomial(r2 + 1 - a, b))
        - rat(r1 - a - b) / rat(b + 1) * rat_int(binomial(r1 - a, b));
    lhs == rhs
}
