//! Exact rational numbers and the small amount of integer arithmetic the
//! rest of the crate needs on top of them.
//!
//! `Rational` is `num_rational::BigRational`: always reduced, denominator
//! positive, zero stored as `0/1`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `q^e` for any integer exponent; `q` must be non-zero when `e < 0`.
pub fn pow_i(q: &Rational, e: i64) -> Rational {
    let magnitude = u32::try_from(e.unsigned_abs()).expect("exponent out of range");
    let p = num_traits::pow::Pow::pow(q, magnitude);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Renders as `num/den`, including a `/1` denominator for integers.
pub fn to_fraction_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Exact `n`-th root of a non-negative integer, if there is one.
fn exact_root_uint(value: &BigUint, n: u32) -> Option<BigUint> {
    let root = value.nth_root(n);
    (num_traits::pow::Pow::pow(&root, n) == *value).then_some(root)
}

/// All rationals `r` with `r^n == q`, in ascending order.
///
/// For even `n` and positive `q` both signs are returned.
pub fn rational_roots_of(q: &Rational, n: u32) -> Vec<Rational> {
    assert!(n >= 1);
    if q.is_zero() {
        return vec![Rational::zero()];
    }
    let negative = q.is_negative();
    if negative && n.is_multiple_of(2) {
        return Vec::new();
    }
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    let (Some(rn), Some(rd)) = (exact_root_uint(num, n), exact_root_uint(den, n)) else {
        return Vec::new();
    };
    let root = Rational::new(BigInt::from(rn), BigInt::from(rd));
    if negative {
        vec![-root]
    } else if n.is_multiple_of(2) {
        vec![-root.clone(), root]
    } else {
        vec![root]
    }
}

/// Positive divisors of `|n|` in ascending order. `n` must be non-zero.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero(), "divisors of zero");
    let n = BigInt::from_biguint(Sign::Plus, n.magnitude().clone());
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1u32;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Positive divisors of a machine integer, ascending.
pub fn divisors_u32(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// gcd of a list of non-negative integers; the gcd of an empty list is 0.
pub fn gcd_all(values: &[u32]) -> u32 {
    values.iter().fold(0, |acc, &v| acc.gcd(&v))
}

/// Least common multiple of the denominators of `values` (1 for an empty list).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
