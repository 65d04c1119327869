//! Exact computations for projective monomial curves
//! `x_0 = u^{n_p}, x_i = t^{n_{i-1}} u^{n_p - n_{i-1}}, x_{p+1} = t^{n_p}`.
//!
//! - [`numsemi`]: numerical semigroups (Apéry sets, pseudo-Frobenius numbers,
//!   factorizations, length sets).
//! - [`curve`]: the affine semigroup `S ⊂ ℕ²` of the curve and its membership tests.
//! - [`deriv`]: generators of the derivation module `Der_k(k[S])`.
//! - [`hk`]: Hilbert-Kunz multiplicity of `k[S]`.

pub mod curve;
pub mod deriv;
pub mod error;
pub mod hk;
pub mod numsemi;
pub mod rational;

pub use curve::{CurveSemigroup, Point2};
pub use deriv::{
    cross_validate, derivation_generators_arithmetic, derivation_generators_brute,
    derivation_generators_closed, derivation_generators_p1, mu_expected, CrossValidation,
    DerivationBasis, DerivationGenerator, MembershipBackend, Partial, Provenance, SearchConfig,
};
pub use error::{Error, Result};
pub use hk::{hk_arithmetic, hk_closed, hk_via_eto, staircase_colength, StaircaseReport};
pub use numsemi::{pf_arithmetic, Factorization, MinimalArithmetic, NumericalSemigroup};
pub use rational::Rational;
