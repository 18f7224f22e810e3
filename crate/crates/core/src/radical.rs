//! Squarefree structure: radicals, the Mason-Stothers inequality and
//! multiplicities of non-zero roots.

use crate::error::{Error, Result};
use crate::poly::{gcd, Degree, SparsePoly};

/// Squarefree part `f / gcd(f, f')`, normalized monic.
pub fn radical(f: &SparsePoly) -> Result<SparsePoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(f, &f.derivative());
    Ok(f.exact_div(&g).monic())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasonStothersReport {
    pub max_deg: u32,
    pub rad_deg: u32,
    pub holds: bool,
}

/// Checks `max(deg a, deg b, deg c) <= deg rad(abc) - 1` for coprime
/// `a + b = c`, not all constant.
pub fn mason_stothers_check(
    a: &SparsePoly,
    b: &SparsePoly,
    c: &SparsePoly,
) -> Result<MasonStothersReport> {
    if &(a + b) != c {
        return Err(Error::MasonStothersHypothesis("a + b != c".into()));
    }
    for (name, p, q) in [("a, b", a, b), ("a, c", a, c), ("b, c", b, c)] {
        if !gcd(p, q).is_constant() {
            return Err(Error::MasonStothersHypothesis(format!(
                "{name} are not relatively prime"
            )));
        }
    }
    if a.is_constant() && b.is_constant() && c.is_constant() {
        return Err(Error::MasonStothersHypothesis("all polynomials are constant".into()));
    }
    let max_deg = [a, b, c]
        .iter()
        .map(|p| p.degree())
        .max()
        .and_then(Degree::finite)
        .expect("a non-constant input exists");
    let product = &(a * b) * c;
    let rad_deg = radical(&product)?.deg();
    Ok(MasonStothersReport {
        max_deg,
        rad_deg,
        holds: max_deg < rad_deg,
    })
}

/// Largest multiplicity of a non-zero root of `f` (over the algebraic
/// closure); 0 exactly when `f = c * x^k`.
pub fn max_nonzero_root_multiplicity(f: &SparsePoly) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut best = 0;
    for (i, part) in f.squarefree_decomposition().iter().enumerate() {
        let val = part.valuation().unwrap_or(0);
        if !part.shift_down(val).is_constant() {
            best = i as u32 + 1;
        }
    }
    Ok(best)
}
