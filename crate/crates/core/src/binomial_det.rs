//! Binomial determinants `det[C(a_i, b_j)]` and the term-count inequality
//! for linear substitutions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linear::{linear_substitute, LinearMap};
use crate::poly::SparsePoly;

/// Two strictly increasing sequences of non-negative integers of equal
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSequences {
    a: Vec<u64>,
    b: Vec<u64>,
}

impl IndexSequences {
    pub fn new(a: Vec<u64>, b: Vec<u64>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::InvalidSequences(format!(
                "lengths differ ({} vs {})",
                a.len(),
                b.len()
            )));
        }
        for (name, s) in [("a", &a), ("b", &b)] {
            if s.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidSequences(format!(
                    "sequence {name} is not strictly increasing"
                )));
            }
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &[u64] {
        &self.a
    }

    pub fn b(&self) -> &[u64] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `b_i <= a_i` for every `i`.
    pub fn dominance(&self) -> bool {
        self.a.iter().zip(&self.b).all(|(a, b)| b <= a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GvDeterminant {
    pub value: BigInt,
    pub dominance: bool,
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

pub fn gv_determinant(s: &IndexSequences) -> GvDeterminant {
    let matrix: Vec<Vec<BigInt>> = s
        .a
        .iter()
        .map(|&ai| s.b.iter().map(|&bj| binomial(ai, bj)).collect())
        .collect();
    let value = bareiss_determinant(matrix);
    let dominance = s.dominance();
    debug_assert!(!value.is_negative());
    debug_assert_eq!(value.is_positive(), dominance);
    GvDeterminant { value, dominance }
}

/// Fraction-free Gaussian elimination. Every intermediate division is exact.
pub fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Term counts of `g` and `f = g(u x + v)`; the lacunarity inequality says
/// `n + 2 <= k + l` whenever `v != 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermCountReport {
    pub n: u32,
    pub k: usize,
    pub l: usize,
    pub holds: bool,
}

pub fn dziury_check(g: &SparsePoly, m: &LinearMap) -> Result<TermCountReport> {
    if m.v().is_zero() {
        return Err(Error::ZeroShift);
    }
    let n = g.degree().finite().ok_or(Error::ZeroPolynomial)?;
    let f = linear_substitute(g, m);
    let k = f.term_count();
    let l = g.term_count();
    Ok(TermCountReport {
        n,
        k,
        l,
        holds: n as usize + 2 <= k + l,
    })
}
