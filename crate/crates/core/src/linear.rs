use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::SparsePoly;
use crate::rational::Rational;

/// The invertible affine map `x -> u*x + v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    u: Rational,
    v: Rational,
}

impl LinearMap {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::ZeroScale);
        }
        Ok(Self { u, v })
    }

    pub fn identity() -> Self {
        Self {
            u: Rational::one(),
            v: Rational::zero(),
        }
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn v(&self) -> &Rational {
        &self.v
    }

    /// `x -> (x - v) / u`.
    pub fn inverse(&self) -> Self {
        let inv = self.u.recip();
        Self {
            v: -(&self.v * &inv),
            u: inv,
        }
    }

    /// The map as the polynomial `u*x + v`.
    pub fn as_poly(&self) -> SparsePoly {
        SparsePoly::from_terms([(1, self.u.clone()), (0, self.v.clone())])
    }
}

/// `g(u*x + v)` by binomial expansion of every term.
pub fn linear_substitute(g: &SparsePoly, m: &LinearMap) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (e, c) in g.terms() {
        // c * (u x + v)^e = sum_j c * C(e, j) u^j v^(e-j) x^j
        let mut binom = BigInt::one();
        let mut u_pow = Rational::one();
        let v_pows = powers(&m.v, e);
        for j in 0..=e {
            let term = c * Rational::from_integer(binom.clone()) * &u_pow * &v_pows[(e - j) as usize];
            out.add_term(j, term);
            binom = binom * BigInt::from(e - j) / BigInt::from(j + 1);
            u_pow *= &m.u;
        }
    }
    out
}

fn powers(base: &Rational, up_to: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(up_to as usize + 1);
    let mut acc = Rational::one();
    for _ in 0..=up_to {
        out.push(acc.clone());
        acc *= base;
    }
    out
}
