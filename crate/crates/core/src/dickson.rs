//! Dickson polynomials `D_n(x, a)` and recognition of linearly shifted
//! Dickson polynomials.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linear::{linear_substitute, LinearMap};
use crate::poly::SparsePoly;
use crate::rational::{rational_roots_of, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DicksonSpec {
    n: u32,
    a: Rational,
}

impl DicksonSpec {
    pub fn new(n: u32, a: Rational) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDicksonDegree(n));
        }
        Ok(Self { n, a })
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn parameter(&self) -> &Rational {
        &self.a
    }
}

/// `D_n(x, a) = sum_{i <= n/2} n/(n-i) * C(n-i, i) * (-a)^i * x^(n-2i)`.
pub fn dickson(spec: &DicksonSpec) -> SparsePoly {
    dickson_poly(spec.n, &spec.a)
}

pub(crate) fn dickson_poly(n: u32, a: &Rational) -> SparsePoly {
    let mut out = SparsePoly::zero();
    let minus_a = -a.clone();
    let mut power = Rational::one();
    for i in 0..=n / 2 {
        // n/(n-i) * C(n-i, i) is an integer: n * (n-i-1)! / (i! (n-2i)!)
        let weight = Rational::new(
            BigInt::from(n) * binomial(n - i, i),
            BigInt::from(n - i),
        );
        out.add_term(n - 2 * i, weight * &power);
        power *= &minus_a;
    }
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Parameter `a` such that a monic `f` equals `D_deg(x, a)` exactly, read
/// from the `x^(n-2)` coefficient (which is `-n a`). Degree 1 is `x` for
/// every parameter and yields `None`.
pub(crate) fn exact_dickson_parameter(f: &SparsePoly) -> Option<Rational> {
    let n = f.degree().finite()?;
    if n < 2 || !f.leading_coefficient().is_one() {
        return None;
    }
    let a = -f.coeff(n - 2) / Rational::from_integer(n.into());
    (dickson_poly(n, &a) == *f).then_some(a)
}

/// Witness that `D_n(x, gamma) = f(u x + v)` with `n = deg f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DicksonMatch {
    pub u: Rational,
    pub v: Rational,
    pub gamma: Rational,
}

impl DicksonMatch {
    /// `gamma = 0`: the match is `f(u x + v) = x^n`, outside the range of
    /// the term-count bound (which needs `u * gamma != 0`).
    pub fn is_degenerate(&self) -> bool {
        self.gamma.is_zero()
    }
}

/// Decides whether `f(u x + v)` is a Dickson polynomial for some rationals
/// `u != 0`, `v`, `gamma`.
///
/// `u` solves `lc(f) u^n = 1`, `v` cancels the `x^(n-1)` coefficient and
/// `gamma` is read from the `x^(n-2)` coefficient; the candidate is then
/// verified in full. Positive `u` is tried first.
pub fn dickson_match(f: &SparsePoly) -> Result<Option<DicksonMatch>> {
    let n = match f.degree().finite() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::DegreeTooSmall { found: 0, required: 1 }),
        Some(n) => n,
    };
    let lc = f.leading_coefficient();
    let n_q = Rational::from_integer(n.into());
    // f(ux+v) has x^(n-1) coefficient u^(n-1) (n lc v + f_(n-1))
    let v = -f.coeff(n - 1) / (&n_q * &lc);

    if n == 1 {
        // D_1 = x for every parameter; report gamma = 1.
        let u = lc.recip();
        return Ok(Some(DicksonMatch {
            u,
            v,
            gamma: Rational::one(),
        }));
    }

    let mut roots = rational_roots_of(&lc.recip(), n);
    roots.sort_by(|a, b| b.cmp(a));
    for u in roots {
        let map = LinearMap::new(u.clone(), v.clone()).expect("root of a non-zero value");
        let shifted = linear_substitute(f, &map);
        let gamma = -shifted.coeff(n - 2) / &n_q;
        if dickson_poly(n, &gamma) == shifted {
            let m = DicksonMatch { u, v, gamma };
            debug_assert!(m.is_degenerate() || n as usize <= 2 * f.positive_term_count());
            return Ok(Some(m));
        }
    }
    Ok(None)
}
