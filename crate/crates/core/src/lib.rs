//! Exact computer algebra for lacunary polynomials.
//!
//! The central piece is [`decomposition`]: a complete classifier of the
//! functional decompositions `f = g(h(x))` of quadrinomials
//! `A x^n1 + B x^n2 + C x^n3 + D`, paired with a general decomposition
//! routine that serves as an independent check. Around it sit the
//! supporting tools: radicals and root multiplicities ([`radical`]),
//! Dickson polynomials ([`dickson`]), standard pairs ([`standard_pairs`]),
//! binomial determinants ([`binomial_det`]) and finiteness verdicts for
//! `f(x) = g(y)` together with a bounded integer search ([`diophantine`]).
//!
//! All arithmetic is exact over the rationals.

pub mod binomial_det;
pub mod decomposition;
pub mod dickson;
pub mod diophantine;
pub mod error;
pub mod linear;
pub mod poly;
pub mod radical;
pub mod rational;
pub mod standard_pairs;
pub mod text;

pub use binomial_det::{dziury_check, gv_determinant, GvDeterminant, IndexSequences, TermCountReport};
pub use decomposition::{
    classify_quadrinomial, critical_value_witness, decompose_oracle, trinomial_square_check,
    trivial_decompositions, CaseTag, CriticalWitness, Decomposition, Quadrinomial,
    TrinomialSquareReport,
};
pub use dickson::{dickson, dickson_match, DicksonMatch, DicksonSpec};
pub use diophantine::{
    search_solutions, theorem_a_verdict, theorem_b_verdict, Condition, FinitenessVerdict,
    LacunaryProfile, VerdictStatus, DEFAULT_MAX_BOUND,
};
pub use error::{Error, Result};
pub use linear::{linear_substitute, LinearMap};
pub use poly::{compose, gcd, Degree, SparsePoly};
pub use radical::{max_nonzero_root_multiplicity, mason_stothers_check, radical, MasonStothersReport};
pub use rational::Rational;
pub use standard_pairs::{match_standard_pair, realize, PairKind, StandardPair};
pub use text::{format_poly, parse_poly};
