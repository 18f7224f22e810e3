//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls the routine it is used to check: Dickson polynomials
//! come from the three-term recurrence, compositions are checked by point
//! evaluation, determinants by permutation expansion and solution sets by a
//! double loop over rational evaluations.

#![allow(dead_code)]

use num_bigint::BigInt;
use quadec_core::rational::{int, rat};
use quadec_core::{Quadrinomial, Rational, SparsePoly};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn poly(terms: &[(u32, i64)]) -> SparsePoly {
    SparsePoly::from_int_terms(terms)
}

/// `D_0 = 2`, `D_1 = x`, `D_n = x D_(n-1) - a D_(n-2)`.
pub fn dickson_recurrence(n: u32, a: &Rational) -> SparsePoly {
    let x = SparsePoly::x();
    let mut prev = SparsePoly::constant(int(2));
    let mut cur = x.clone();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&x * &cur) - &prev.scale(a);
        prev = cur;
        cur = next;
    }
    cur
}

/// `g(h(t)) == f(t)` at more points than the degree of either side.
pub fn composes_to(g: &SparsePoly, h: &SparsePoly, f: &SparsePoly) -> bool {
    let deg = |p: &SparsePoly| p.degree().finite().unwrap_or(0) as i64;
    let points = (deg(g) * deg(h)).max(deg(f)) + 1;
    (0..points).all(|i| {
        let t = rat(2 * i - 3, 3);
        g.evaluate(&h.evaluate(&t)) == f.evaluate(&t)
    })
}

/// Determinant by expansion over all permutations.
pub fn leibniz_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, k: usize, m: &[Vec<BigInt>], total: &mut BigInt) {
    let n = perm.len();
    if k == n {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut prod = BigInt::from(if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in perm.iter().enumerate() {
            prod *= &m[i][j];
        }
        *total += prod;
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(perm, k + 1, m, total);
        perm.swap(k, i);
    }
}

/// Pascal-triangle binomial, independent of the library's.
pub fn pascal(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Double loop over `|x|, |y| <= bound` with rational evaluation.
pub fn naive_search(f: &SparsePoly, g: &SparsePoly, bound: i64) -> Vec<(i64, i64)> {
    let gy: Vec<Rational> = (-bound..=bound).map(|y| g.evaluate(&int(y))).collect();
    let mut out = Vec::new();
    for x in -bound..=bound {
        let fx = f.evaluate(&int(x));
        for (i, v) in gy.iter().enumerate() {
            if *v == fx {
                out.push((x, i as i64 - bound));
            }
        }
    }
    out
}

pub fn random_nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let n = rng.gen_range(-max_num..=max_num);
        if n != 0 {
            return rat(n, rng.gen_range(1..=max_den));
        }
    }
}

/// Random polynomial with exactly `terms` distinct exponents in `0..=max_deg`
/// (capped by the number of available exponents), small rational coefficients.
pub fn random_poly(rng: &mut impl Rng, max_deg: u32, terms: usize, max_num: i64, max_den: i64) -> SparsePoly {
    let mut exps: Vec<u32> = (0..=max_deg).collect();
    exps.shuffle(rng);
    exps.truncate(terms.min(exps.len()));
    SparsePoly::from_terms(
        exps.into_iter()
            .map(|e| (e, random_nonzero_rational(rng, max_num, max_den))),
    )
}

/// Random polynomial of degree exactly `deg` with up to `terms` terms.
pub fn random_poly_of_degree(rng: &mut impl Rng, deg: u32, terms: usize) -> SparsePoly {
    let lower = if deg == 0 { SparsePoly::zero() } else { random_poly(rng, deg - 1, terms.saturating_sub(1), 5, 3) };
    &lower + &SparsePoly::monomial(random_nonzero_rational(rng, 5, 3), deg)
}

/// Every quadrinomial with `12 >= n1 > n2 > n3 >= 1`, `A, B, C` in
/// `{-2, -1, 1, 2}` and `D` in `{0, 1}`.
pub fn quadrinomial_family() -> Vec<Quadrinomial> {
    let coeffs = [-2, -1, 1, 2];
    let mut out = Vec::new();
    for n1 in 3..=12u32 {
        for n2 in 2..n1 {
            for n3 in 1..n2 {
                for &a in &coeffs {
                    for &b in &coeffs {
                        for &c in &coeffs {
                            for d in [0, 1] {
                                out.push(
                                    Quadrinomial::new(int(a), int(b), int(c), int(d), n1, n2, n3)
                                        .expect("valid family member"),
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Strictly increasing random sequence of `len` values from `0..=max`.
pub fn random_increasing(rng: &mut impl Rng, len: usize, max: u64) -> Vec<u64> {
    let mut pool: Vec<u64> = (0..=max).collect();
    pool.shuffle(rng);
    let mut v: Vec<u64> = pool.into_iter().take(len).collect();
    v.sort_unstable();
    v
}
