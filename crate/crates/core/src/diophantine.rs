//! Finiteness verdicts for `f(x) = g(y)` and an exact bounded search for
//! integer solutions.
//!
//! A finite verdict certifies that the equation has finitely many integer
//! solutions. It is never an empirical claim: the search is only a
//! companion for probing instances, since no effective bound on the size of
//! solutions is available.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::decomposition::Quadrinomial;
use crate::error::{Error, Result};
use crate::poly::{horner, SparsePoly};
use crate::rational::{common_denominator, gcd_all, Rational};

pub const DEFAULT_MAX_BOUND: u64 = 1_000_000;

/// `A_1 x^n1 + ... + A_l x^nl + A_(l+1)` with `A_1 ... A_l != 0` and
/// `n1 > ... > nl > 0`. The constant may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LacunaryProfile {
    coefficients: Vec<Rational>,
    exponents: Vec<u32>,
    constant: Rational,
}

impl LacunaryProfile {
    pub fn new(coefficients: Vec<Rational>, exponents: Vec<u32>, constant: Rational) -> Result<Self> {
        if coefficients.len() != exponents.len() || coefficients.is_empty() {
            return Err(Error::InvalidProfile(
                "need one coefficient per exponent and at least one term".into(),
            ));
        }
        if coefficients.iter().any(Zero::is_zero) {
            return Err(Error::InvalidProfile("coefficients A_1..A_l must be non-zero".into()));
        }
        if exponents.windows(2).any(|w| w[0] <= w[1]) || exponents.last() == Some(&0) {
            return Err(Error::InvalidProfile(
                "exponents must be strictly decreasing and positive".into(),
            ));
        }
        Ok(Self { coefficients, exponents, constant })
    }

    pub fn from_poly(f: &SparsePoly) -> Result<Self> {
        let positive: Vec<(u32, Rational)> = f
            .terms()
            .rev()
            .filter(|&(e, _)| e > 0)
            .map(|(e, c)| (e, c.clone()))
            .collect();
        let (exponents, coefficients) = positive.into_iter().unzip();
        Self::new(coefficients, exponents, f.constant_term())
    }

    /// Number `l` of terms at positive powers.
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn constant(&self) -> &Rational {
        &self.constant
    }

    pub fn to_poly(&self) -> SparsePoly {
        SparsePoly::from_terms(
            self.exponents
                .iter()
                .copied()
                .zip(self.coefficients.iter().cloned())
                .chain([(0, self.constant.clone())]),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    FiniteByTheoremA,
    FiniteByTheoremB,
    NotApplicable,
}

impl VerdictStatus {
    pub fn name(self) -> &'static str {
        match self {
            VerdictStatus::FiniteByTheoremA => "FiniteByTheoremA",
            VerdictStatus::FiniteByTheoremB => "FiniteByTheoremB",
            VerdictStatus::NotApplicable => "NotApplicable",
        }
    }

    pub fn is_finite(self) -> bool {
        self != VerdictStatus::NotApplicable
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub name: String,
    pub satisfied: bool,
}

/// Status plus every hypothesis that was checked, satisfied or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub status: VerdictStatus,
    pub conditions: Vec<Condition>,
}

impl FinitenessVerdict {
    fn from_conditions(success: VerdictStatus, conditions: Vec<Condition>) -> Self {
        let status = if conditions.iter().all(|c| c.satisfied) {
            success
        } else {
            VerdictStatus::NotApplicable
        };
        Self { status, conditions }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.satisfied)
    }
}

fn cond(name: impl Into<String>, satisfied: bool) -> Condition {
    Condition { name: name.into(), satisfied }
}

/// Hypotheses for two quadrinomials `f(x) = A x^n1 + B x^n2 + C x^n3 + D`,
/// `g(y) = E y^m1 + F y^m2 + G y^m3 + H`. Constants play no role.
pub fn theorem_a_verdict(f: &Quadrinomial, g: &Quadrinomial) -> FinitenessVerdict {
    let n = f.exponents();
    let m = g.exponents();
    FinitenessVerdict::from_conditions(
        VerdictStatus::FiniteByTheoremA,
        vec![
            cond("gcd(n1,n2,n3) = 1", gcd_all(&n) == 1),
            cond("gcd(m1,m2,m3) = 1", gcd_all(&m) == 1),
            cond("(m1,m2,m3) != (n1,n2,n3)", m != n),
            cond("n1 >= 9", n[0] >= 9),
            cond("m1 >= 9", m[0] >= 9),
        ],
    )
}

/// Hypotheses for `f` with `l` positive-power terms against a trinomial
/// `g(y) = E y^m1 + F y^m2 + G y^m3` without constant term.
pub fn theorem_b_verdict(f: &LacunaryProfile, g: &SparsePoly) -> Result<FinitenessVerdict> {
    if g.term_count() != 3 || g.valuation() == Some(0) {
        return Err(Error::NotTrinomial(format!(
            "expected exactly three terms, all at positive powers, got {g}"
        )));
    }
    let m: Vec<u32> = g.exponents().rev().collect();
    let l = f.len() as u64;
    let bound = 2 * l * l.saturating_sub(1);
    Ok(FinitenessVerdict::from_conditions(
        VerdictStatus::FiniteByTheoremB,
        vec![
            cond("l >= 4", l >= 4),
            cond("gcd(n1,...,nl) = 1", gcd_all(f.exponents()) == 1),
            cond("gcd(m1,m2,m3) = 1", gcd_all(&m) == 1),
            cond("n1 >= 4", f.exponents()[0] >= 4),
            cond(format!("m1 >= 2l(l-1) = {bound}"), u64::from(m[0]) >= bound),
        ],
    ))
}

/// Integer coefficients of `scale * p`.
fn integer_terms(p: &SparsePoly, scale: &BigInt) -> Vec<(u32, BigInt)> {
    p.terms()
        .map(|(e, c)| (e, (c * Rational::from_integer(scale.clone())).to_integer()))
        .collect()
}

fn evaluate_int(terms: &[(u32, BigInt)], at: i64) -> BigInt {
    horner(terms.iter().cloned(), BigInt::from(at), BigInt::zero())
}

/// All `(x, y)` with `|x|, |y| <= bound` and `f(x) = g(y)`, sorted.
///
/// Both sides are cleared of denominators by the same factor and compared
/// as exact integers: the values of `g` are indexed once, then every `f(x)`
/// is looked up.
pub fn search_solutions(
    f: &SparsePoly,
    g: &SparsePoly,
    bound: u64,
    max_bound: u64,
) -> Result<Vec<(i64, i64)>> {
    for p in [f, g] {
        if p.is_constant() {
            let found = p.degree().finite().unwrap_or(0);
            return Err(Error::DegreeTooSmall { found, required: 1 });
        }
    }
    if bound == 0 {
        return Err(Error::EmptyBound);
    }
    if bound > max_bound {
        return Err(Error::BoundTooLarge { bound, limit: max_bound });
    }
    let b = i64::try_from(bound).map_err(|_| Error::BoundTooLarge { bound, limit: max_bound })?;

    let scale = common_denominator(f.terms().chain(g.terms()).map(|(_, c)| c));
    let f_int = integer_terms(f, &scale);
    let g_int = integer_terms(g, &scale);

    let g_values: Vec<(BigInt, i64)> = (-b..=b)
        .into_par_iter()
        .map(|y| (evaluate_int(&g_int, y), y))
        .collect();
    let mut index: HashMap<BigInt, Vec<i64>> = HashMap::new();
    for (value, y) in g_values {
        index.entry(value).or_default().push(y);
    }

    let mut solutions: Vec<(i64, i64)> = (-b..=b)
        .into_par_iter()
        .flat_map_iter(|x| {
            let value = evaluate_int(&f_int, x);
            index
                .get(&value)
                .into_iter()
                .flatten()
                .map(move |&y| (x, y))
                .collect::<Vec<_>>()
        })
        .collect();
    solutions.sort_unstable();
    Ok(solutions)
}
