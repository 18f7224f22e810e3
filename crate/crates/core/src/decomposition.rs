//! Functional decomposition `f = g(h(x))`.
//!
//! Two independent routes are provided:
//!
//! * [`decompose_oracle`] works for any rational polynomial. For each
//!   admissible right-factor degree it recovers the unique monic candidate
//!   `h` with `h(0) = 0` from the top coefficients of `f` and then tests it
//!   by `h`-adic expansion.
//! * [`classify_quadrinomial`] enumerates the decompositions of a
//!   quadrinomial `A x^n1 + B x^n2 + C x^n3 + D` directly from its
//!   exponent pattern and coefficient relations.
//!
//! Both return decompositions in canonical form (`h` monic, `h(0) = 0`),
//! sorted by `deg h`, so their outputs can be compared for equality.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{compose, gcd, SparsePoly};
use crate::rational::{divisors_u32, gcd_all, int, Rational};

/// `A x^n1 + B x^n2 + C x^n3 + D` with `ABC != 0` and `n1 > n2 > n3 > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quadrinomial {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub n1: u32,
    pub n2: u32,
    pub n3: u32,
}

impl Quadrinomial {
    pub fn new(
        a: Rational,
        b: Rational,
        c: Rational,
        d: Rational,
        n1: u32,
        n2: u32,
        n3: u32,
    ) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::NotQuadrinomial("A, B and C must be non-zero".into()));
        }
        if !(n1 > n2 && n2 > n3 && n3 > 0) {
            return Err(Error::NotQuadrinomial(format!(
                "exponents must satisfy n1 > n2 > n3 > 0, got ({n1}, {n2}, {n3})"
            )));
        }
        Ok(Self { a, b, c, d, n1, n2, n3 })
    }

    /// Reads a polynomial with exactly three positive-power terms and an
    /// optional constant.
    pub fn from_poly(f: &SparsePoly) -> Result<Self> {
        let positive: Vec<(u32, &Rational)> = f.terms().filter(|&(e, _)| e > 0).collect();
        if positive.len() != 3 {
            return Err(Error::NotQuadrinomial(format!(
                "expected three terms at positive powers, found {}",
                positive.len()
            )));
        }
        let [(n3, c), (n2, b), (n1, a)] = [positive[0], positive[1], positive[2]];
        Self::new(a.clone(), b.clone(), c.clone(), f.constant_term(), n1, n2, n3)
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::from_terms([
            (self.n1, self.a.clone()),
            (self.n2, self.b.clone()),
            (self.n3, self.c.clone()),
            (0, self.d.clone()),
        ])
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.n1, self.n2, self.n3]
    }

    /// `2 n2 = n1 + n3` with `n1`, `n3` even and `4AC = B^2`.
    fn symmetric_square_holds(&self) -> bool {
        self.n1.is_multiple_of(2)
            && self.n3.is_multiple_of(2)
            && 2 * self.n2 == self.n1 + self.n3
            && int(4) * &self.a * &self.c == &self.b * &self.b
    }

    /// `n1 = 4 n3`, `n2 = 3 n3` and `8 A^2 C = -B^3`.
    fn case_four_holds(&self) -> bool {
        self.n1 == 4 * self.n3
            && self.n2 == 3 * self.n3
            && int(8) * &self.a * &self.a * &self.c == -(&self.b * &self.b * &self.b)
    }

    /// Names the case of the classification a canonical decomposition
    /// `(g, h)` of this quadrinomial belongs to.
    fn tag_for(&self, g: &SparsePoly, h: &SparsePoly) -> CaseTag {
        if h.is_monomial() {
            return CaseTag::Cyclic(h.deg());
        }
        if g.deg() != 2 || h.term_count() != 2 {
            return CaseTag::Generic;
        }
        let low = h.valuation().expect("non-zero");
        let top = h.deg();
        if 2 * top == self.n1 && 2 * low == self.n3 && self.symmetric_square_holds() {
            CaseTag::SymmetricSquare
        } else if top == 2 * self.n3 && low == self.n3 && self.case_four_holds() {
            CaseTag::CaseFour(h.coeff(low))
        } else {
            CaseTag::Generic
        }
    }
}

impl fmt::Display for Quadrinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

/// Which family of the quadrinomial classification a decomposition
/// belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    /// `h = x^d` with `d | gcd(n1, n2, n3)`.
    Cyclic(u32),
    /// One of the components is linear.
    Trivial,
    /// `g` quadratic, `h = x^(n1/2) + B/(2A) x^(n3/2)`.
    SymmetricSquare,
    /// `g = A x (x - c^2) + D`, `h = x^(2 n3) + c x^n3`.
    CaseFour(Rational),
    /// Decomposition of a polynomial that is not a quadrinomial.
    Generic,
}

impl CaseTag {
    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::Cyclic(_) => "Cyclic",
            CaseTag::Trivial => "Trivial",
            CaseTag::SymmetricSquare => "SymmetricSquare",
            CaseTag::CaseFour(_) => "CaseFour",
            CaseTag::Generic => "Generic",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Cyclic(d) => write!(f, "Cyclic(d={d})"),
            CaseTag::CaseFour(c) => write!(f, "CaseFour(c={c})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A single split `f = g(h(x))` with `h` monic and `h(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub g: SparsePoly,
    pub h: SparsePoly,
    pub case: CaseTag,
}

impl Decomposition {
    pub fn compose(&self) -> SparsePoly {
        compose(&self.g, &self.h)
    }
}

impl Ord for Decomposition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.h
            .degree()
            .cmp(&other.h.degree())
            .then_with(|| self.h.cmp(&other.h))
            .then_with(|| self.g.cmp(&other.g))
            .then_with(|| self.case.cmp(&other.case))
    }
}

impl PartialOrd for Decomposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every decomposition `f = g(h)` with `h` monic, `h(0) = 0` and
/// `1 < deg h < deg f`.
pub fn decompose_oracle(f: &SparsePoly) -> Result<Vec<Decomposition>> {
    let n = match f.degree().finite() {
        Some(n) if n >= 2 => n,
        Some(n) => return Err(Error::DegreeTooSmall { found: n, required: 2 }),
        None => return Err(Error::ZeroPolynomial),
    };
    let lc = f.leading_coefficient();
    let monic = f.monic();
    let quadrinomial = Quadrinomial::from_poly(f).ok();

    let mut out: Vec<Decomposition> = divisors_u32(n)
        .into_par_iter()
        .filter(|&d| d > 1 && d < n)
        .filter_map(|d| {
            let h = candidate_right_factor(&monic, n, d);
            let g = outer_component(&monic, &h)?.scale(&lc);
            debug_assert_eq!(&compose(&g, &h), f);
            let case = quadrinomial
                .as_ref()
                .map_or(CaseTag::Generic, |q| q.tag_for(&g, &h));
            Some(Decomposition { g, h, case })
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The unique monic `h` of degree `d` with `h(0) = 0` whose `(n/d)`-th
/// power agrees with the monic `f` in the coefficients of
/// `x^(n-1), ..., x^(n-d+1)`.
fn candidate_right_factor(f: &SparsePoly, n: u32, d: u32) -> SparsePoly {
    let r = n / d;
    let r_inv = Rational::from_integer(r.into()).recip();
    let mut h = SparsePoly::monomial(Rational::one(), d);
    for k in 1..d {
        // Coefficient of x^(n-k) in h^r is r * h_{d-k} plus terms in the
        // already fixed higher coefficients.
        let current = h.pow(r).coeff(n - k);
        let value = (f.coeff(n - k) - current) * &r_inv;
        h.add_term(d - k, value);
    }
    h
}

/// Reads `g` off the `h`-adic expansion of `f`, if every digit is constant.
fn outer_component(f: &SparsePoly, h: &SparsePoly) -> Option<SparsePoly> {
    let mut g = SparsePoly::zero();
    let mut rest = f.clone();
    let mut i = 0;
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(h);
        if !r.is_constant() {
            return None;
        }
        g.add_term(i, r.constant_term());
        rest = q;
        i += 1;
    }
    Some(g)
}

/// The two decompositions with a linear component, in canonical form:
/// `(f, x)` and `(lc*x + f(0), (f - f(0)) / lc)`.
pub fn trivial_decompositions(f: &SparsePoly) -> Result<Vec<Decomposition>> {
    let n = f.degree().finite().ok_or(Error::ZeroPolynomial)?;
    if n < 1 {
        return Err(Error::DegreeTooSmall { found: n, required: 1 });
    }
    let lc = f.leading_coefficient();
    let c0 = f.constant_term();
    let mut out = vec![Decomposition {
        g: f.clone(),
        h: SparsePoly::x(),
        case: CaseTag::Trivial,
    }];
    if n > 1 {
        let h = (f - &SparsePoly::constant(c0.clone())).scale(&lc.recip());
        let g = SparsePoly::from_terms([(1, lc), (0, c0)]);
        out.push(Decomposition {
            g,
            h,
            case: CaseTag::Trivial,
        });
    }
    Ok(out)
}

/// All non-trivial canonical decompositions of a quadrinomial, read off
/// the case analysis of its exponents and coefficients.
pub fn classify_quadrinomial(q: &Quadrinomial) -> Vec<Decomposition> {
    let mut out = Vec::new();

    // h = x^d for every proper divisor d of gcd(n1, n2, n3)
    let common = gcd_all(&q.exponents());
    for d in divisors_u32(common).into_iter().filter(|&d| d > 1 && d < q.n1) {
        let g = SparsePoly::from_terms([
            (q.n1 / d, q.a.clone()),
            (q.n2 / d, q.b.clone()),
            (q.n3 / d, q.c.clone()),
            (0, q.d.clone()),
        ]);
        let h = SparsePoly::monomial(Rational::one(), d);
        emit(&mut out, q, g, h, CaseTag::Cyclic(d));
    }

    if q.symmetric_square_holds() {
        let half_b = &q.b / (int(2) * &q.a);
        let h = SparsePoly::from_terms([(q.n1 / 2, Rational::one()), (q.n3 / 2, half_b)]);
        let g = SparsePoly::from_terms([(2, q.a.clone()), (0, q.d.clone())]);
        emit(&mut out, q, g, h, CaseTag::SymmetricSquare);
    }

    if q.case_four_holds() {
        let c = &q.b / (int(2) * &q.a);
        let h = SparsePoly::from_terms([(2 * q.n3, Rational::one()), (q.n3, c.clone())]);
        let g = SparsePoly::from_terms([
            (2, q.a.clone()),
            (1, -(&q.a * &c * &c)),
            (0, q.d.clone()),
        ]);
        emit(&mut out, q, g, h, CaseTag::CaseFour(c));
    }

    out.sort();
    out
}

fn emit(out: &mut Vec<Decomposition>, q: &Quadrinomial, g: SparsePoly, h: SparsePoly, case: CaseTag) {
    assert_eq!(compose(&g, &h), q.to_poly(), "classifier emitted an unsound split");
    match &case {
        CaseTag::Cyclic(d) => assert_eq!(gcd_all(&q.exponents()) % d, 0),
        CaseTag::SymmetricSquare => assert!(q.symmetric_square_holds()),
        CaseTag::CaseFour(_) => assert!(q.case_four_holds()),
        _ => {}
    }
    out.push(Decomposition { g, h, case });
}

/// Rationally visible witness for the critical-value bound: for a rational
/// root `beta` of `g'`, `gamma = g(beta)` and
/// `gcd_degree = deg gcd(f - gamma, f')` where `f = g(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalWitness {
    pub beta: Rational,
    pub gamma: Rational,
    pub gcd_degree: u32,
}

/// Uses the smallest rational root of `g'`; `None` when `g'` has no
/// rational root.
pub fn critical_value_witness(g: &SparsePoly, h: &SparsePoly) -> Result<Option<CriticalWitness>> {
    let deg_g = g.degree().finite().ok_or(Error::ZeroPolynomial)?;
    if deg_g <= 1 {
        return Err(Error::DegreeTooSmall { found: deg_g, required: 2 });
    }
    let Some(beta) = g.derivative().rational_roots().into_iter().next() else {
        return Ok(None);
    };
    let gamma = g.evaluate(&beta);
    let f = compose(g, h);
    let shifted = &f - &SparsePoly::constant(gamma.clone());
    let common = gcd(&shifted, &f.derivative());
    let gcd_degree = common.degree().finite().unwrap_or(0);
    debug_assert!(h.is_constant() || gcd_degree >= h.deg());
    Ok(Some(CriticalWitness {
        beta,
        gamma,
        gcd_degree,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrinomialSquareReport {
    pub square: SparsePoly,
    /// `f^2`, made monic, is `x^n1 + A x^n2 + B` with `n1 > n2 > 0`, `AB != 0`.
    pub is_trinomial_square_shape: bool,
    pub f_term_count: usize,
    /// The shape forces `f` to be a binomial.
    pub lemma_holds: bool,
}

pub fn trinomial_square_check(f: &SparsePoly) -> TrinomialSquareReport {
    let square = f.pow(2);
    let monic = square.monic();
    let shape = monic.term_count() == 3 && monic.valuation() == Some(0);
    let f_term_count = f.term_count();
    TrinomialSquareReport {
        square,
        is_trinomial_square_shape: shape,
        f_term_count,
        lemma_holds: !shape || f_term_count == 2,
    }
}
