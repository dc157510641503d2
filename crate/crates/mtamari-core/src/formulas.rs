//! Closed-form interval and path counts, evaluated exactly.
//!
//! Everything here is big-integer arithmetic with intermediate rationals;
//! each final count asserts integrality and nonnegativity. A failed
//! divisibility check surfaces as [`FormulaError::NonIntegral`] rather than
//! a wrong number.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaError {
    /// A division that the closed formula promises to be exact was not.
    NonIntegral(String),
    /// Parameters outside the range on which the formula is derived.
    OutOfRange,
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::NonIntegral(what) => write!(f, "non-integral result in {what}"),
            FormulaError::OutOfRange => write!(f, "parameters out of the formula's range"),
        }
    }
}

/// A nonnegative exact count.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactCount(BigInt);

impl ExactCount {
    fn new(v: BigInt) -> Self {
        assert!(!v.is_negative(), "counts are nonnegative");
        ExactCount(v)
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount(BigInt::from(v))
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Exact factorial.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Generalized binomial coefficient: `C(a, b) = a(a-1)...(a-b+1)/b!` for
/// `b >= 0` (any integer `a`, possibly negative), and 0 for `b < 0`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for j in 0..b {
        num *= BigInt::from(a - j);
    }
    let den = factorial(b as usize);
    let (q, r) = num_integer_div_rem(&num, &den);
    debug_assert!(r.is_zero(), "generalized binomial is integral");
    q
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

fn exact_div(num: BigInt, den: BigInt, what: &str) -> Result<BigInt, FormulaError> {
    let (q, r) = num_integer_div_rem(&num, &den);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(FormulaError::NonIntegral(String::from(what)))
    }
}

/// Fuss-Catalan count of m-ballot paths of size n:
/// `(1/(mn+1)) C((m+1)n, n)`.
pub fn count_paths(m: usize, n: usize) -> ExactCount {
    assert!(m >= 1);
    let (m, n) = (m as i64, n as i64);
    let b = binomial((m + 1) * n, n);
    let v = exact_div(b, BigInt::from(m * n + 1), "count_paths").expect("Fuss-Catalan is integral");
    ExactCount::new(v)
}

/// Number of intervals in the m-Tamari lattice of size n:
/// `(m+1)/(n(mn+1)) C((m+1)^2 n + m, n-1)`.
pub fn count_intervals(m: usize, n: usize) -> Result<ExactCount, FormulaError> {
    assert!(m >= 1 && n >= 1);
    let (m, n) = (m as i64, n as i64);
    let mb = m + 1;
    let b = binomial(mb * mb * n + m, n - 1);
    let v = exact_div(BigInt::from(mb) * b, BigInt::from(n * (m * n + 1)), "count_intervals")?;
    Ok(ExactCount::new(v))
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn rat_bin(a: i64, b: i64) -> BigRational {
    BigRational::from_integer(binomial(a, b))
}

/// The three summands of the polynomial identity defining
/// `i(i-1) P_m(n,i)`, as exact rationals (the last one carries an explicit
/// division by m).
pub fn pol_summands(m: usize, n: usize, i: usize) -> [BigRational; 3] {
    assert!(m >= 1);
    let (m, n, i) = (m as i64, n as i64, i as i64);
    let mb = m + 1;

    let part1 = -BigRational::from_integer(factorial(mb as usize) * factorial((m - 1) as usize))
        * big(n - i + 1)
        * rat_bin(i * mb, m)
        * rat_bin(n * m * (m + 2) - i * m + 2 * m, m - 1);

    let mut part2 = BigRational::zero();
    for k in 1..=(m - 2) {
        let kf = factorial(k as usize);
        part2 += big(k)
            * BigRational::from_integer(&kf * &kf)
            * BigRational::from_integer(
                factorial((m - k - 2) as usize) * factorial((m - k - 1) as usize),
            )
            * big((i + 1) * m * mb + 2 * mb + k)
            * big(n - i)
            * big(n - i + 1)
            * rat_bin(i * mb - k - 1, m - k - 1)
            * rat_bin(i * m, k)
            * rat_bin(n * mb * mb - i * mb + m + k, k)
            * rat_bin(n * m * (m + 2) - i * m + 2 * m, m - k - 2);
    }

    let mf = factorial(m as usize);
    let part3 = BigRational::from_integer(&mf * &mf)
        * rat_bin(i * m, m - 1)
        * (big(i) * rat_bin(n * mb * mb - i * mb + 2 * m, m)
            - big(m - 1) * big(i * mb + 2) * big(n - i + 1) / big(m)
                * rat_bin(n * mb * mb - i * mb + 2 * m - 1, m - 1));

    [part1, part2, part3]
}

/// `i(i-1) P_m(n,i)` evaluated exactly. Well-defined for any `i >= 1`; the
/// proof of the contact refinement needs it to vanish at `i = 1`.
pub fn pol_value(m: usize, n: usize, i: usize) -> BigRational {
    let [a, b, c] = pol_summands(m, n, i);
    a + b + c
}

/// The polynomial factor `P_m(n,i)` of the contact refinement. In
/// particular `P_1(n,i) = 2` and `P_2(n,i) = 6(33in - 9i^2 + 15i - 2n - 2)`.
pub fn pm_value(m: usize, n: usize, i: usize) -> Result<BigInt, FormulaError> {
    assert!(i >= 2);
    let v = pol_value(m, n, i) / big((i * (i - 1)) as i64);
    if !v.is_integer() {
        return Err(FormulaError::NonIntegral(String::from("P_m(n,i)")));
    }
    Ok(v.to_integer())
}

/// Number of intervals of the size-n m-Tamari lattice whose bottom path has
/// exactly `i` contacts, for `2 <= i <= n+1`.
pub fn count_by_contacts(m: usize, n: usize, i: usize) -> Result<ExactCount, FormulaError> {
    assert!(m >= 1);
    if n < 1 || i < 2 || i > n + 1 {
        return Err(FormulaError::OutOfRange);
    }
    let p = pm_value(m, n, i)?;
    let (mi, ni, ii) = (m as i64, n as i64, i as i64);
    let mb = mi + 1;
    let num = factorial((ni * mb * mb - ii * mb + mi) as usize)
        * factorial((ii * mb - mi) as usize)
        * p;
    let den = factorial((ni * mb * mb - ni - ii * mi + 2 * mi) as usize)
        * factorial((ni - ii + 1) as usize)
        * factorial((mi * ii) as usize)
        * factorial((ii - 2) as usize);
    let v = exact_div(num, den, "count_by_contacts")?;
    let count = ExactCount::new(v);
    if m == 1 {
        // independent route for m = 1
        assert_eq!(count, count_by_contacts_m1(n, i), "contact refinement disagrees at m = 1");
    }
    Ok(count)
}

/// The m = 1 specialization of the contact refinement:
/// `(i-1)(4n-2i+1)! / ((3n-i+2)!(n-i+1)!) C(2i, i)`.
pub fn count_by_contacts_m1(n: usize, i: usize) -> ExactCount {
    assert!(n >= 1 && i >= 2 && i <= n + 1);
    let (n, i) = (n as i64, i as i64);
    let num = BigInt::from(i - 1) * factorial((4 * n - 2 * i + 1) as usize) * binomial(2 * i, i);
    let den = factorial((3 * n - i + 2) as usize) * factorial((n - i + 1) as usize);
    let v = exact_div(num, den, "count_by_contacts_m1").expect("remark formula is integral");
    ExactCount::new(v)
}

/// The full contact row `[(i, f_{n,i})]` for `i = 2..=n+1`.
pub fn contact_row(m: usize, n: usize) -> Result<Vec<(usize, ExactCount)>, FormulaError> {
    (2..=n + 1).map(|i| count_by_contacts(m, n, i).map(|c| (i, c))).collect()
}
