//! Fixed inputs shared by the benchmarks.

use quadec_core::rational::int;
use quadec_core::{Quadrinomial, SparsePoly};

/// Quadrinomials covering each decomposition case plus an indecomposable one.
pub fn quadrinomials() -> Vec<(&'static str, Quadrinomial)> {
    let q = |a, b, c, d, n1, n2, n3| Quadrinomial::new(int(a), int(b), int(c), int(d), n1, n2, n3).unwrap();
    vec![
        ("cyclic", q(1, 2, 1, 5, 12, 8, 4)),
        ("symmetric", q(1, 2, 1, 5, 6, 4, 2)),
        ("case-four", q(1, 2, -1, 0, 12, 9, 3)),
        ("none", q(1, 1, 1, 1, 11, 5, 3)),
    ]
}

/// `g(h)` with `deg g = 3`, `deg h = 4`: a dense degree-12 input.
pub fn composite() -> SparsePoly {
    let g = SparsePoly::from_int_terms(&[(3, 2), (2, -1), (1, 3), (0, 1)]);
    let h = SparsePoly::from_int_terms(&[(4, 1), (3, -2), (1, 5)]);
    g.compose(&h)
}

/// Both sides of a finite instance of `f(x) = g(y)`.
pub fn search_pair() -> (SparsePoly, SparsePoly) {
    (
        SparsePoly::from_int_terms(&[(9, 1), (5, 1), (3, 1), (0, 1)]),
        SparsePoly::from_int_terms(&[(10, 1), (7, 1), (2, 1)]),
    )
}
