//! Generators of the derivation module `Der_k(k[S])` of a Cohen-Macaulay
//! curve semigroup ring.
//!
//! Two independent routes are provided: an exponent search driven by
//! membership in `S`, and closed forms for `p = 1` and for minimal arithmetic
//! sequences. [`cross_validate`] runs both and compares them as sets.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::curve::{CurveSemigroup, Point2};
use crate::error::{Error, Result};
use crate::numsemi::MinimalArithmetic;

/// Which partial derivative a generator multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Partial {
    #[serde(rename = "d_dt")]
    DDt,
    #[serde(rename = "d_du")]
    DDu,
}

impl fmt::Display for Partial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Partial::DDt => f.write_str("d/dt"),
            Partial::DDu => f.write_str("d/du"),
        }
    }
}

/// A monomial derivation `t^{t_exp} u^{u_exp} ∂/∂t` or `… ∂/∂u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DerivationGenerator {
    pub target: Partial,
    pub t_exp: i64,
    pub u_exp: i64,
}

impl DerivationGenerator {
    pub const fn new(target: Partial, t_exp: i64, u_exp: i64) -> Self {
        Self {
            target,
            t_exp,
            u_exp,
        }
    }

    /// `t ∂/∂t`.
    pub const fn euler_t() -> Self {
        Self::new(Partial::DDt, 1, 0)
    }

    /// `u ∂/∂u`.
    pub const fn euler_u() -> Self {
        Self::new(Partial::DDu, 0, 1)
    }
}

/// Renders as `t^A u^B d/dt`, eliding exponents 1 and 0.
impl fmt::Display for DerivationGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (var, exp) in [("t", self.t_exp), ("u", self.u_exp)] {
            match exp {
                0 => {}
                1 => write!(f, "{var} ")?,
                e => write!(f, "{var}^{e} ")?,
            }
        }
        write!(f, "{}", self.target)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    BruteForce,
    ClosedFormP1,
    ClosedFormArithmetic,
}

/// A generating set, kept in canonical order: `d/dt` before `d/du`, then by
/// `t` exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationBasis {
    generators: Vec<DerivationGenerator>,
    provenance: Provenance,
}

impl DerivationBasis {
    pub fn new(mut generators: Vec<DerivationGenerator>, provenance: Provenance) -> Self {
        generators.sort();
        generators.dedup();
        Self {
            generators,
            provenance,
        }
    }

    pub fn generators(&self) -> &[DerivationGenerator] {
        &self.generators
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Number of generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Generators multiplying the given partial, Euler generators included.
    pub fn with_target(&self, target: Partial) -> impl Iterator<Item = &DerivationGenerator> {
        self.generators.iter().filter(move |g| g.target == target)
    }

    /// Set equality, ignoring provenance.
    pub fn same_set(&self, other: &DerivationBasis) -> bool {
        self.generators == other.generators
    }
}

/// Membership test used by the exponent search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MembershipBackend {
    /// [`CurveSemigroup::contains_exact`].
    #[default]
    Exact,
    /// [`CurveSemigroup::contains_cm`]; only sound for Cohen-Macaulay rings.
    ProductGroup,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchConfig {
    /// Largest exponent tried before giving up; `None` selects [`default_cap`].
    pub cap: Option<i64>,
    pub backend: MembershipBackend,
}

/// Default search cap: `(a+d+2)·n_p + n_p²` for arithmetic sequences and
/// `n_p·(F(S₁)+F(S₂)+2n_p)` otherwise.
pub fn default_cap(curve: &CurveSemigroup) -> i64 {
    let np = curve.degree();
    match curve.arithmetic() {
        Some(ar) => (ar.a + ar.d + 2) * np + np * np,
        None => np * (curve.s1().frobenius_number() + curve.s2().frobenius_number() + 2 * np),
    }
}

fn member(curve: &CurveSemigroup, backend: MembershipBackend, pt: Point2) -> Result<bool> {
    match backend {
        MembershipBackend::Exact => curve.contains_exact(pt),
        MembershipBackend::ProductGroup => curve.contains_cm(pt),
    }
}

/// `base + (n, n_p - n) ∈ S` for every `n ∈ {0, n_0, …, n_{p-1}}`.
pub fn du_condition(curve: &CurveSemigroup, backend: MembershipBackend, base: Point2) -> Result<bool> {
    let np = curve.degree();
    let seq = curve.sequence();
    for n in std::iter::once(0).chain(seq[..seq.len() - 1].iter().copied()) {
        if !member(curve, backend, base + Point2::new(n, np - n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `base + (n, n_p - n) ∈ S` for every `n ∈ {n_0, …, n_p}`.
pub fn dt_condition(curve: &CurveSemigroup, backend: MembershipBackend, base: Point2) -> Result<bool> {
    let np = curve.degree();
    for &n in curve.sequence() {
        if !member(curve, backend, base + Point2::new(n, np - n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn search<F>(start: i64, step: i64, cap: i64, mut accept: F) -> Result<i64>
where
    F: FnMut(i64) -> Result<bool>,
{
    let mut v = start;
    while v <= cap {
        if accept(v)? {
            return Ok(v);
        }
        v += step;
    }
    Err(Error::SearchCapExceeded(cap))
}

/// The `∂/∂u` generators other than `u ∂/∂u`.
///
/// If `S₂ ≠ ℕ`, one generator `t^β u^{α+1} ∂/∂u` per `α ∈ PF(S₂)` with `β ≥ 1`
/// least such that `(β, α)` passes [`du_condition`]. If `S₂ = ℕ`, the single
/// generator `t^{1+c·n_p} ∂/∂u` with `c ≥ 0` least such that `(1+c·n_p, -1)`
/// passes.
pub fn d1_generators_brute(curve: &CurveSemigroup, cfg: &SearchConfig) -> Result<Vec<DerivationGenerator>> {
    if !curve.cm_assumed() {
        return Err(Error::CmNotAssumed);
    }
    let cap = cfg.cap.unwrap_or_else(|| default_cap(curve));
    let np = curve.degree();
    if curve.s2().is_natural() {
        let t = search(1, np, cap, |t| du_condition(curve, cfg.backend, Point2::new(t, -1)))?;
        return Ok(vec![DerivationGenerator::new(Partial::DDu, t, 0)]);
    }
    curve
        .s2()
        .pseudo_frobenius()
        .into_iter()
        .map(|alpha| {
            let beta = search(1, 1, cap, |b| du_condition(curve, cfg.backend, Point2::new(b, alpha)))?;
            Ok(DerivationGenerator::new(Partial::DDu, beta, alpha + 1))
        })
        .collect()
}

/// The `∂/∂t` generators other than `t ∂/∂t`.
///
/// If `S₁ ≠ ℕ`, one generator `t^{δ+1} u^γ ∂/∂t` per `δ ∈ PF(S₁)` with `γ ≥ 1`
/// least such that `(δ, γ)` passes [`dt_condition`]. If `S₁ = ℕ`, the single
/// generator `u^{1+e·n_p} ∂/∂t` with `e ≥ 0` least such that `(-1, 1+e·n_p)`
/// passes.
pub fn d2_generators_brute(curve: &CurveSemigroup, cfg: &SearchConfig) -> Result<Vec<DerivationGenerator>> {
    if !curve.cm_assumed() {
        return Err(Error::CmNotAssumed);
    }
    let cap = cfg.cap.unwrap_or_else(|| default_cap(curve));
    let np = curve.degree();
    if curve.s1().is_natural() {
        let u = search(1, np, cap, |u| dt_condition(curve, cfg.backend, Point2::new(-1, u)))?;
        return Ok(vec![DerivationGenerator::new(Partial::DDt, 0, u)]);
    }
    curve
        .s1()
        .pseudo_frobenius()
        .into_iter()
        .map(|delta| {
            let gamma = search(1, 1, cap, |g| dt_condition(curve, cfg.backend, Point2::new(delta, g)))?;
            Ok(DerivationGenerator::new(Partial::DDt, delta + 1, gamma))
        })
        .collect()
}

/// Full generating set from the exponent search, Euler generators included.
pub fn derivation_generators_brute(curve: &CurveSemigroup, cfg: &SearchConfig) -> Result<DerivationBasis> {
    let mut gens = d1_generators_brute(curve, cfg)?;
    gens.extend(d2_generators_brute(curve, cfg)?);
    gens.push(DerivationGenerator::euler_t());
    gens.push(DerivationGenerator::euler_u());
    Ok(DerivationBasis::new(gens, Provenance::BruteForce))
}

/// Closed form for the plane curve `⟨(0,n_1), (n_0,n_1-n_0), (n_1,0)⟩`.
pub fn derivation_generators_p1(n0: i64, n1: i64) -> Result<DerivationBasis> {
    if n0 <= 0 || n1 <= n0 || n0.gcd(&n1) != 1 {
        return Err(Error::InvalidPair { n0, n1 });
    }
    let (dt, du) = match (n0 == 1, n1 - n0 == 1) {
        (false, false) => (
            (n0 * (n1 - 1) - n1 + 1, (n1 - 1) * (n1 - n0)),
            (n0 * (n1 - 1), (n1 - 1) * (n1 - n0) - n1 + 1),
        ),
        (true, false) => ((0, 1 + (n1 - 2) * n1), (n1 - 1, (n1 - 1) * (n1 - 2))),
        (false, true) => ((n0 * (n1 - 1) - n1 + 1, n1 - 1), (n0 * (n1 - 1), 0)),
        (true, true) => ((0, 1), (1, 0)),
    };
    Ok(DerivationBasis::new(
        vec![
            DerivationGenerator::euler_t(),
            DerivationGenerator::new(Partial::DDt, dt.0, dt.1),
            DerivationGenerator::euler_u(),
            DerivationGenerator::new(Partial::DDu, du.0, du.1),
        ],
        Provenance::ClosedFormP1,
    ))
}

/// Closed form for a minimal arithmetic sequence with `p ≥ 2`, split on
/// `b = n_0 mod p`.
pub fn derivation_generators_arithmetic(seq: &[i64]) -> Result<DerivationBasis> {
    if seq.len() == 2 {
        return Err(Error::PTooSmall);
    }
    let ar = MinimalArithmetic::from_sequence(seq)?;
    let (a, b, d, p, np) = (ar.a, ar.b, ar.d, ar.p, ar.last());

    let beta = if b <= 1 { a * np + d } else { (a + 1) * np + d };
    let mut gens = vec![
        DerivationGenerator::euler_u(),
        DerivationGenerator::new(Partial::DDu, beta, (d - 1) * (np - 1)),
        DerivationGenerator::euler_t(),
    ];
    let dt = |i: i64, t: i64| DerivationGenerator::new(Partial::DDt, t, d * (np - i));
    match b {
        0 => gens.extend((1..p).map(|i| dt(i, a * np - ar.term(p - i) + 1))),
        1 => gens.extend((1..=p).map(|i| dt(i, a * np - ar.term(p - i) + 1))),
        _ => gens.extend((1..b).map(|i| dt(i, a * np + i * d + 1))),
    }
    Ok(DerivationBasis::new(gens, Provenance::ClosedFormArithmetic))
}

/// The closed form that covers `seq`, if any.
pub fn derivation_generators_closed(seq: &[i64]) -> Result<DerivationBasis> {
    match seq {
        [n0, n1] => derivation_generators_p1(*n0, *n1),
        _ => derivation_generators_arithmetic(seq),
    }
}

/// Expected minimal number of generators: 4 for `p = 1`; for `p ≥ 2`,
/// `p+2`, `p+3` or `b+2` according as `b = 0`, `b = 1` or `b > 1`.
pub fn mu_expected(seq: &[i64]) -> Result<usize> {
    if let [n0, n1] = seq {
        if *n0 <= 0 || n1 <= n0 || n0.gcd(n1) != 1 {
            return Err(Error::NotMinimalArithmetic(format!("invalid pair ({n0}, {n1})")));
        }
        return Ok(4);
    }
    let ar = MinimalArithmetic::from_sequence(seq)?;
    let mu = match ar.b {
        0 => ar.p + 2,
        1 => ar.p + 3,
        b => b + 2,
    };
    Ok(mu as usize)
}

/// Outcome of comparing the closed form with the exponent search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub closed_form_basis: DerivationBasis,
    pub brute_basis: DerivationBasis,
    pub equal: bool,
    pub mu_match: bool,
}

pub fn cross_validate(seq: &[i64], cfg: &SearchConfig) -> Result<CrossValidation> {
    let closed = derivation_generators_closed(seq)?;
    let curve = CurveSemigroup::new(seq, false)?;
    let brute = derivation_generators_brute(&curve, cfg)?;
    let mu_match = brute.mu() == mu_expected(seq)?;
    Ok(CrossValidation {
        equal: closed.same_set(&brute),
        mu_match,
        closed_form_basis: closed,
        brute_basis: brute,
    })
}
