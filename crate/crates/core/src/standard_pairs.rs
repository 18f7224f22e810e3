//! The five kinds of standard pairs over the rationals.
//!
//! | kind   | pair                                          | restrictions                    |
//! |--------|-----------------------------------------------|---------------------------------|
//! | first  | `(x^m, a x^r p(x)^m)`                         | `r < m`, `gcd(r, m) = 1`, `r + deg p > 0` |
//! | second | `(x^2, (a x^2 + b) p(x)^2)`                   |                                 |
//! | third  | `(D_m(x, a^n), D_n(x, a^m))`                  | `gcd(m, n) = 1`                 |
//! | fourth | `(a^(-m/2) D_m(x, a), -b^(-n/2) D_n(x, b))`   | `gcd(m, n) = 2`                 |
//! | fifth  | `((a x^2 - 1)^3, 3 x^4 - 4 x^3)`              |                                 |
//!
//! `a`, `b` are non-zero rationals. A switched pair lists its two
//! components in the opposite order.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::dickson::{dickson_poly, exact_dickson_parameter};
use crate::error::{Error, Result};
use crate::poly::{Degree, SparsePoly};
use crate::rational::{int, pow_i, rational_roots_of, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PairKind {
    First { m: u32, r: u32, a: Rational, p: SparsePoly },
    Second { a: Rational, b: Rational, p: SparsePoly },
    Third { m: u32, n: u32, a: Rational },
    Fourth { m: u32, n: u32, a: Rational, b: Rational },
    Fifth { a: Rational },
}

impl PairKind {
    pub fn name(&self) -> &'static str {
        match self {
            PairKind::First { .. } => "first",
            PairKind::Second { .. } => "second",
            PairKind::Third { .. } => "third",
            PairKind::Fourth { .. } => "fourth",
            PairKind::Fifth { .. } => "fifth",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardPair {
    kind: PairKind,
    switched: bool,
}

impl StandardPair {
    /// Validates the parameter restrictions of `kind`.
    pub fn new(kind: PairKind, switched: bool) -> Result<Self> {
        validate(&kind)?;
        Ok(Self { kind, switched })
    }

    pub fn kind(&self) -> &PairKind {
        &self.kind
    }

    pub fn is_switched(&self) -> bool {
        self.switched
    }
}

impl fmt::Display for StandardPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PairKind::First { m, r, a, p } => write!(f, "first(m={m}, r={r}, a={a}, p={p})")?,
            PairKind::Second { a, b, p } => write!(f, "second(a={a}, b={b}, p={p})")?,
            PairKind::Third { m, n, a } => write!(f, "third(m={m}, n={n}, a={a})")?,
            PairKind::Fourth { m, n, a, b } => write!(f, "fourth(m={m}, n={n}, a={a}, b={b})")?,
            PairKind::Fifth { a } => write!(f, "fifth(a={a})")?,
        }
        if self.switched {
            f.write_str(" switched")?;
        }
        Ok(())
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidStandardPair(msg.into())
}

fn validate(kind: &PairKind) -> Result<()> {
    match kind {
        PairKind::First { m, r, a, p } => {
            if *m == 0 {
                return Err(invalid("first kind: m must be positive"));
            }
            if r >= m {
                return Err(invalid("first kind: r < m required"));
            }
            if r.gcd(m) != 1 {
                return Err(invalid("first kind: gcd(r, m) = 1 required"));
            }
            let deg_p = p.degree().finite().ok_or_else(|| invalid("first kind: p must be non-zero"))?;
            if r + deg_p == 0 {
                return Err(invalid("first kind: r + deg p > 0 required"));
            }
            if a.is_zero() {
                return Err(invalid("first kind: a must be non-zero"));
            }
        }
        PairKind::Second { a, b, p } => {
            if a.is_zero() || b.is_zero() {
                return Err(invalid("second kind: a and b must be non-zero"));
            }
            if p.is_zero() {
                return Err(invalid("second kind: p must be non-zero"));
            }
        }
        PairKind::Third { m, n, a } => {
            if *m == 0 || *n == 0 {
                return Err(invalid("third kind: m and n must be positive"));
            }
            if m.gcd(n) != 1 {
                return Err(invalid("third kind: gcd(m, n) = 1 required"));
            }
            if a.is_zero() {
                return Err(invalid("third kind: a must be non-zero"));
            }
        }
        PairKind::Fourth { m, n, a, b } => {
            if *m == 0 || *n == 0 {
                return Err(invalid("fourth kind: m and n must be positive"));
            }
            if m.gcd(n) != 2 {
                return Err(invalid("fourth kind: gcd(m, n) = 2 required"));
            }
            if a.is_zero() || b.is_zero() {
                return Err(invalid("fourth kind: a and b must be non-zero"));
            }
        }
        PairKind::Fifth { a } => {
            if a.is_zero() {
                return Err(invalid("fifth kind: a must be non-zero"));
            }
        }
    }
    Ok(())
}

/// Materializes the two polynomials of a pair, in switched order if the
/// pair is switched.
pub fn realize(pair: &StandardPair) -> Result<(SparsePoly, SparsePoly)> {
    validate(&pair.kind)?;
    let (left, right) = match &pair.kind {
        PairKind::First { m, r, a, p } => (
            SparsePoly::monomial(Rational::one(), *m),
            p.pow(*m).shift_up(*r).scale(a),
        ),
        PairKind::Second { a, b, p } => (
            SparsePoly::monomial(Rational::one(), 2),
            &SparsePoly::from_terms([(2, a.clone()), (0, b.clone())]) * &p.pow(2),
        ),
        PairKind::Third { m, n, a } => (
            dickson_poly(*m, &pow_i(a, (*n).into())),
            dickson_poly(*n, &pow_i(a, (*m).into())),
        ),
        PairKind::Fourth { m, n, a, b } => (
            dickson_poly(*m, a).scale(&pow_i(a, -i64::from(m / 2))),
            dickson_poly(*n, b).scale(&-pow_i(b, -i64::from(n / 2))),
        ),
        PairKind::Fifth { a } => (
            SparsePoly::from_terms([(2, a.clone()), (0, int(-1))]).pow(3),
            SparsePoly::from_int_terms(&[(4, 3), (3, -4)]),
        ),
    };
    debug_assert!(realized_degrees_consistent(&pair.kind, &left, &right));
    Ok(if pair.switched { (right, left) } else { (left, right) })
}

fn realized_degrees_consistent(kind: &PairKind, left: &SparsePoly, right: &SparsePoly) -> bool {
    let (dl, dr) = (left.degree(), right.degree());
    match kind {
        PairKind::Third { m, n, .. } | PairKind::Fourth { m, n, .. } => {
            dl == Degree::Finite(*m) && dr == Degree::Finite(*n)
        }
        PairKind::Fifth { .. } => dl == Degree::Finite(6) && dr == Degree::Finite(4),
        PairKind::First { m, r, p, .. } => {
            dl == Degree::Finite(*m) && dr == Degree::Finite(r + m * p.deg())
        }
        PairKind::Second { p, .. } => {
            dl == Degree::Finite(2) && dr == Degree::Finite(2 + 2 * p.deg())
        }
    }
}

/// Recognizes `(f1, g1)` as a standard pair. Kinds are tried in order
/// first..fifth, each unswitched before switched; the first hit wins.
///
/// Recovered parameters are canonical: `p` is monic in the first and
/// second kinds.
pub fn match_standard_pair(f1: &SparsePoly, g1: &SparsePoly) -> Option<StandardPair> {
    if f1.is_constant() || g1.is_constant() {
        return None;
    }
    type Matcher = fn(&SparsePoly, &SparsePoly) -> Option<PairKind>;
    let matchers: [Matcher; 5] = [match_first, match_second, match_third, match_fourth, match_fifth];
    for matcher in matchers {
        for switched in [false, true] {
            let (left, right) = if switched { (g1, f1) } else { (f1, g1) };
            if let Some(kind) = matcher(left, right) {
                if validate(&kind).is_ok() {
                    let pair = StandardPair { kind, switched };
                    if realize(&pair).ok().as_ref() == Some(&(f1.clone(), g1.clone())) {
                        return Some(pair);
                    }
                }
            }
        }
    }
    None
}

fn monic_monomial_degree(f: &SparsePoly) -> Option<u32> {
    (f.is_monomial() && f.leading_coefficient().is_one()).then(|| f.deg())
}

fn match_first(left: &SparsePoly, right: &SparsePoly) -> Option<PairKind> {
    let m = monic_monomial_degree(left)?;
    let val = right.valuation()?;
    let r = val % m;
    let a = right.leading_coefficient();
    let rest = right.shift_down(r).scale(&a.recip());
    let p = monic_root(&rest, m)?;
    Some(PairKind::First { m, r, a, p })
}

fn match_second(left: &SparsePoly, right: &SparsePoly) -> Option<PairKind> {
    if monic_monomial_degree(left)? != 2 {
        return None;
    }
    // exponent of each irreducible factor of the right component is
    // 2 * (its exponent in p) + (0 or 1), since a x^2 + b is squarefree
    let mut p = SparsePoly::one();
    for (multiplicity, part) in (1u32..).zip(right.squarefree_decomposition()) {
        p = &p * &part.pow(multiplicity / 2);
    }
    let (quadratic, rem) = right.div_rem(&p.pow(2));
    if !rem.is_zero() || quadratic.term_count() != 2 || quadratic.exponents().ne([0, 2]) {
        return None;
    }
    Some(PairKind::Second {
        a: quadratic.coeff(2),
        b: quadratic.coeff(0),
        p,
    })
}

fn match_third(left: &SparsePoly, right: &SparsePoly) -> Option<PairKind> {
    let m = left.degree().finite()?;
    let n = right.degree().finite()?;
    if m.gcd(&n) != 1 {
        return None;
    }
    let a = match (m, n) {
        (1, _) => exact_dickson_parameter(right)?,
        (_, 1) => exact_dickson_parameter(left)?,
        _ => {
            // alpha = a^n, beta = a^m with s n + t m = 1 gives a = alpha^s beta^t
            let alpha = exact_dickson_parameter(left)?;
            let beta = exact_dickson_parameter(right)?;
            if alpha.is_zero() || beta.is_zero() {
                return None;
            }
            let e = i64::from(n).extended_gcd(&i64::from(m));
            &pow_i(&alpha, e.x) * &pow_i(&beta, e.y)
        }
    };
    Some(PairKind::Third { m, n, a })
}

fn match_fourth(left: &SparsePoly, right: &SparsePoly) -> Option<PairKind> {
    let m = left.degree().finite()?;
    let n = right.degree().finite()?;
    if m.gcd(&n) != 2 {
        return None;
    }
    let a = exact_dickson_parameter(&left.monic())?;
    let b = exact_dickson_parameter(&right.monic())?;
    if a.is_zero() || b.is_zero() {
        return None;
    }
    Some(PairKind::Fourth { m, n, a, b })
}

fn match_fifth(left: &SparsePoly, right: &SparsePoly) -> Option<PairKind> {
    if *right != SparsePoly::from_int_terms(&[(4, 3), (3, -4)]) || left.degree() != Degree::Finite(6) {
        return None;
    }
    let a = rational_roots_of(&left.leading_coefficient(), 3).into_iter().next()?;
    Some(PairKind::Fifth { a })
}

/// Monic `p` with `p^m == f` for a monic `f`, if it exists.
fn monic_root(f: &SparsePoly, m: u32) -> Option<SparsePoly> {
    let n = f.degree().finite()?;
    if !f.leading_coefficient().is_one() || n % m != 0 {
        return None;
    }
    let k = n / m;
    let m_inv = Rational::from_integer(m.into()).recip();
    let mut p = SparsePoly::monomial(Rational::one(), k);
    for j in 1..=k {
        let current = p.pow(m).coeff(n - j);
        p.add_term(k - j, (f.coeff(n - j) - current) * &m_inv);
    }
    (p.pow(m) == *f).then_some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn p(terms: &[(u32, i64)]) -> SparsePoly {
        SparsePoly::from_int_terms(terms)
    }

    fn pair(kind: PairKind) -> StandardPair {
        StandardPair::new(kind, false).unwrap()
    }

    #[test]
    fn realize_table_rows() {
        let first = pair(PairKind::First { m: 3, r: 1, a: int(1), p: SparsePoly::one() });
        assert_eq!(realize(&first).unwrap(), (p(&[(3, 1)]), p(&[(1, 1)])));

        let fifth = pair(PairKind::Fifth { a: int(1) });
        let (l, r) = realize(&fifth).unwrap();
        assert_eq!(l, p(&[(2, 1), (0, -1)]).pow(3));
        assert_eq!(r, p(&[(4, 3), (3, -4)]));

        let third = pair(PairKind::Third { m: 2, n: 3, a: int(1) });
        assert_eq!(realize(&third).unwrap(), (p(&[(2, 1), (0, -2)]), p(&[(3, 1), (1, -3)])));

        let switched = StandardPair::new(PairKind::Third { m: 2, n: 3, a: int(1) }, true).unwrap();
        assert_eq!(realize(&switched).unwrap(), (p(&[(3, 1), (1, -3)]), p(&[(2, 1), (0, -2)])));
    }

    #[test]
    fn restrictions_enforced() {
        let bad = [
            PairKind::First { m: 4, r: 2, a: int(1), p: p(&[(1, 1)]) },
            PairKind::First { m: 2, r: 3, a: int(1), p: p(&[(1, 1)]) },
            PairKind::First { m: 1, r: 0, a: int(1), p: SparsePoly::one() },
            PairKind::First { m: 3, r: 1, a: int(0), p: SparsePoly::one() },
            PairKind::Second { a: int(1), b: int(0), p: SparsePoly::one() },
            PairKind::Third { m: 2, n: 4, a: int(1) },
            PairKind::Third { m: 2, n: 3, a: int(0) },
            PairKind::Fourth { m: 2, n: 3, a: int(1), b: int(1) },
            PairKind::Fourth { m: 4, n: 8, a: int(1), b: int(1) },
            PairKind::Fourth { m: 2, n: 4, a: int(1), b: int(0) },
            PairKind::Fifth { a: int(0) },
        ];
        for kind in bad {
            assert!(
                matches!(StandardPair::new(kind.clone(), false), Err(Error::InvalidStandardPair(_))),
                "{kind:?}"
            );
        }
    }

    #[test]
    fn matching_examples() {
        let m = match_standard_pair(&p(&[(3, 1)]), &p(&[(1, 1)])).unwrap();
        assert_eq!(m, pair(PairKind::First { m: 3, r: 1, a: int(1), p: SparsePoly::one() }));

        let m = match_standard_pair(&p(&[(2, 1), (0, -2)]), &p(&[(3, 1), (1, -3)])).unwrap();
        assert_eq!(m, pair(PairKind::Third { m: 2, n: 3, a: int(1) }));

        assert_eq!(match_standard_pair(&p(&[(3, 1), (1, 1)]), &p(&[(2, 1), (1, 1), (0, 1)])), None);
    }

    #[test]
    fn second_kind_round_trip() {
        let kind = PairKind::Second { a: rat(3, 2), b: int(-5), p: p(&[(2, 1), (0, 1)]) };
        let sp = pair(kind);
        let (l, r) = realize(&sp).unwrap();
        assert_eq!(match_standard_pair(&l, &r), Some(sp));
    }

    #[test]
    fn fourth_and_fifth_round_trip() {
        let sp = pair(PairKind::Fourth { m: 4, n: 6, a: rat(4, 9), b: int(-2) });
        let (l, r) = realize(&sp).unwrap();
        assert_eq!(l.deg(), 4);
        assert_eq!(r.deg(), 6);
        assert_eq!(match_standard_pair(&l, &r), Some(sp));

        let sp = StandardPair::new(PairKind::Fifth { a: rat(-2, 3) }, true).unwrap();
        let (l, r) = realize(&sp).unwrap();
        assert_eq!(match_standard_pair(&l, &r), Some(sp));
    }
}
