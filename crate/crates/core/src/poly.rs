//! Sparse univariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{common_denominator, divisors, Rational};

/// Degree of a polynomial. The zero polynomial has degree `MinusInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    MinusInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::MinusInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::MinusInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::MinusInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial stored as exponent -> non-zero coefficient.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparsePoly {
    terms: BTreeMap<u32, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exponent: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, Rational)>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_int_terms(terms: &[(u32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_integer(c.into()))))
    }

    pub(crate) fn add_term(&mut self, exponent: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the zero polynomial and non-zero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// True when exactly one term is stored.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::MinusInfinity, |&e| Degree::Finite(e))
    }

    /// Degree of a non-zero polynomial; 0 for the zero polynomial.
    ///
    /// Only meant for call sites that have already excluded zero.
    pub(crate) fn deg(&self) -> u32 {
        self.degree().finite().unwrap_or(0)
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Number of terms with a positive exponent.
    pub fn positive_term_count(&self) -> usize {
        self.terms.keys().filter(|&&e| e > 0).count()
    }

    pub fn coeff(&self, exponent: u32) -> Rational {
        self.terms.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn leading_coefficient(&self) -> Rational {
        self.terms
            .values()
            .next_back()
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Lowest stored exponent, `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn exponents(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.terms.keys().copied()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// Divides by `x^k`; every exponent must be at least `k`.
    pub fn shift_down(&self, k: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, v)| (e.checked_sub(k).expect("shift_down below zero"), v.clone()))
                .collect(),
        }
    }

    /// Scales to leading coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.leading_coefficient().recip())
    }

    pub fn derivative(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e > 0)
                .map(|(&e, c)| (e - 1, c * Rational::from_integer(e.into())))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn evaluate(&self, at: &Rational) -> Rational {
        horner(self.terms.iter().map(|(&e, c)| (e, c.clone())), at.clone(), Rational::zero())
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &SparsePoly) -> (SparsePoly, SparsePoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        let lc_inv = divisor.leading_coefficient().recip();
        let mut quotient = SparsePoly::zero();
        let mut rem = self.clone();
        while let Degree::Finite(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let t = rem.leading_coefficient() * &lc_inv;
            let shift = rd - dd;
            for (e, c) in divisor.terms() {
                rem.add_term(e + shift, -(c * &t));
            }
            quotient.add_term(shift, t);
        }
        (quotient, rem)
    }

    /// `self / divisor` when the division is known to be exact.
    pub fn exact_div(&self, divisor: &SparsePoly) -> SparsePoly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn divides(&self, other: &SparsePoly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// `integer_scale * self` as integer coefficients, where `integer_scale`
    /// is the least common denominator of the coefficients.
    pub fn to_integer_terms(&self) -> (BigInt, Vec<(u32, BigInt)>) {
        let den = common_denominator(self.terms.values());
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| (e, (c * Rational::from_integer(den.clone())).to_integer()))
            .collect();
        (den, terms)
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Rational> {
        if self.is_zero() || self.is_constant() {
            return Vec::new();
        }
        let mut roots = Vec::new();
        let val = self.valuation().unwrap_or(0);
        if val > 0 {
            roots.push(Rational::zero());
        }
        let reduced = self.shift_down(val);
        if !reduced.is_constant() {
            let (_, int_terms) = reduced.to_integer_terms();
            let low = &int_terms.first().expect("non-zero").1;
            let high = &int_terms.last().expect("non-zero").1;
            let ps = divisors(low);
            let qs = divisors(high);
            for p in &ps {
                for q in &qs {
                    let cand = Rational::new(p.clone(), q.clone());
                    for r in [cand.clone(), -cand] {
                        if reduced.evaluate(&r).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Yun's squarefree decomposition of a non-zero polynomial.
    ///
    /// Returns `[s_1, s_2, ..., s_k]` with monic, squarefree, pairwise coprime
    /// `s_i` such that `self = lc * s_1 * s_2^2 * ... * s_k^k`. Entries may be
    /// `1`; the last entry is non-constant unless `self` is constant, in which
    /// case the list is empty.
    pub fn squarefree_decomposition(&self) -> Vec<SparsePoly> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return out;
        }
        let df = f.derivative();
        let a0 = gcd(&f, &df);
        let mut b = f.exact_div(&a0);
        let mut d = &df.exact_div(&a0) - &b.derivative();
        while !b.is_constant() {
            let a = gcd(&b, &d);
            let next_b = b.exact_div(&a);
            let c = d.exact_div(&a);
            d = &c - &next_b.derivative();
            b = next_b;
            out.push(a);
        }
        while out.last().is_some_and(SparsePoly::is_constant) {
            out.pop();
        }
        out
    }

    /// Composition `self(inner(x))`.
    pub fn compose(&self, inner: &SparsePoly) -> SparsePoly {
        compose(self, inner)
    }
}

/// Sparse Horner evaluation over an arbitrary ring-like value type.
pub(crate) fn horner<T, I>(terms: I, at: T, zero: T) -> T
where
    I: DoubleEndedIterator<Item = (u32, T)>,
    T: Clone + for<'a> Mul<&'a T, Output = T> + Add<Output = T> + One,
{
    let mut acc = zero;
    let mut last: Option<u32> = None;
    for (e, c) in terms.rev() {
        if let Some(prev) = last {
            acc = acc * &pow_value(&at, prev - e);
        }
        acc = acc + c;
        last = Some(e);
    }
    if let Some(low) = last {
        acc = acc * &pow_value(&at, low);
    }
    acc
}

fn pow_value<T>(base: &T, mut n: u32) -> T
where
    T: Clone + for<'a> Mul<&'a T, Output = T> + One,
{
    let mut result = T::one();
    let mut b = base.clone();
    while n > 0 {
        if n & 1 == 1 {
            result = result * &b;
        }
        n >>= 1;
        if n > 0 {
            b = b.clone() * &b;
        }
    }
    result
}

/// Monic gcd over the rationals; `gcd(0, 0) = 0`.
pub fn gcd(a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
    let mut x = a.monic();
    let mut y = b.monic();
    while !y.is_zero() {
        let (_, r) = x.div_rem(&y);
        x = y;
        y = r.monic();
    }
    x
}

/// `g(h(x))`, computed exactly by sparse Horner.
pub fn compose(g: &SparsePoly, h: &SparsePoly) -> SparsePoly {
    let mut acc = SparsePoly::zero();
    let mut last: Option<u32> = None;
    for (e, c) in g.terms().rev() {
        if let Some(prev) = last {
            acc = &acc * &h.pow(prev - e);
        }
        acc.add_term(0, c.clone());
        last = Some(e);
    }
    if let Some(low) = last {
        if low > 0 {
            acc = &acc * &h.pow(low);
        }
    }
    acc
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_poly(self))
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $method(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl From<Rational> for SparsePoly {
    fn from(c: Rational) -> Self {
        SparsePoly::constant(c)
    }
}
