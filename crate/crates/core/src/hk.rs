//! Hilbert-Kunz multiplicity of `k[S]` for a projective monomial curve.
//!
//! Sequences here are read as `n_1 < … < n_p` with `n_0 = 0` prepended
//! internally, so the curve is `⟨(0,n_p), (n_1,n_p-n_1), …, (n_p,0)⟩`. This
//! is the same semigroup [`CurveSemigroup::new`] builds from the same list.
//!
//! Three independent routes are exposed: the closed formula, the colength of
//! the staircase ideal `J ⊂ k[x,y]` divided by the lattice index, and a direct
//! count of `ℓ(k[S]/m^{[q]})` whose ratio to `q²` converges to `e_HK`.

use serde::{Deserialize, Serialize};

use crate::curve::{check_sequence, lattice_index, CurveSemigroup, Point2};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest number of lattice cells any box enumeration may visit.
pub const MAX_BOX_CELLS: u128 = 200_000_000;

/// `e_HK = 1 + (1/n_p)·Σ_{r=1}^{p} (n_r - 1)(n_r - n_{r-1})`.
pub fn hk_closed(seq: &[i64]) -> Result<Rational> {
    check_hk_sequence(seq)?;
    let np = *seq.last().expect("checked non-empty");
    let sum: i64 = block_counts(seq).iter().map(|&c| c as i64).sum();
    Ok(Rational::new(np + sum, np))
}

/// `e_HK = n_0 + p(p+1)d² / (2·n_p)` for `n_i = n_0 + i·d`.
///
/// Minimality of the sequence is not required; the identity with
/// [`hk_closed`] holds for every arithmetic sequence with gcd 1.
pub fn hk_arithmetic(n0: i64, p: i64, d: i64) -> Result<Rational> {
    if n0 <= 0 || p <= 0 || d <= 0 {
        return Err(Error::NotMinimalArithmetic("n0, p and d must be positive".to_string()));
    }
    let seq: Vec<i64> = (0..=p).map(|i| n0 + i * d).collect();
    check_hk_sequence(&seq)?;
    let np = n0 + p * d;
    let frac = Rational::new(p * (p + 1) * d * d, 2 * np).as_ratio();
    Ok((frac + n0).into())
}

/// Colength of `J = ⟨x^{n_p}, x^{n_1}y^{n_p-n_1}, …, y^{n_p}⟩` with its
/// block decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseReport {
    /// `dim_k k[x,y]/J`, counted monomial by monomial.
    pub colength: u64,
    /// Size of the column block `{1, y, …, y^{n_p-1}}`.
    pub box_count: u64,
    /// `(n_r - 1)(n_r - n_{r-1})` for `r = 1..=p`.
    pub block_counts: Vec<u64>,
}

impl StaircaseReport {
    pub fn decomposition_total(&self) -> u64 {
        self.box_count + self.block_counts.iter().sum::<u64>()
    }
}

fn check_hk_sequence(seq: &[i64]) -> Result<()> {
    check_sequence(seq).map_err(|e| Error::InvalidSequence(e.to_string()))
}

fn block_counts(seq: &[i64]) -> Vec<u64> {
    std::iter::once(0)
        .chain(seq.iter().copied())
        .collect::<Vec<_>>()
        .windows(2)
        .map(|w| ((w[1] - 1) * (w[1] - w[0])) as u64)
        .collect()
}

fn check_box(cells: u128) -> Result<()> {
    if cells > MAX_BOX_CELLS {
        return Err(Error::BoxOverflow {
            cells,
            limit: MAX_BOX_CELLS,
        });
    }
    Ok(())
}

/// Exponents of the monomial generators of `J`, `n_0 = 0` included.
fn staircase_generators(seq: &[i64]) -> Vec<(i64, i64)> {
    let np = *seq.last().expect("checked non-empty");
    std::iter::once(0).chain(seq.iter().copied()).map(|n| (n, np - n)).collect()
}

/// Standard monomials `x^i y^j ∉ J`, found by testing every cell of
/// `[0, n_p)²` against every generator of `J`.
pub fn standard_monomials(seq: &[i64]) -> Result<Vec<(i64, i64)>> {
    check_hk_sequence(seq)?;
    let np = *seq.last().expect("checked non-empty");
    check_box((np as u128) * (np as u128))?;
    let gens = staircase_generators(seq);
    let mut out = Vec::new();
    for i in 0..np {
        for j in 0..np {
            if !gens.iter().any(|&(a, b)| i >= a && j >= b) {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

/// The basis `B ∪ ⋃_r B_r` with `B = {y^j : j < n_p}` and
/// `B_r = {x^i y^j : 1 ≤ i ≤ n_r - 1, n_p - n_r ≤ j ≤ n_p - n_{r-1} - 1}`.
pub fn staircase_basis(seq: &[i64]) -> Result<Vec<Vec<(i64, i64)>>> {
    check_hk_sequence(seq)?;
    let np = *seq.last().expect("checked non-empty");
    let mut blocks = vec![(0..np).map(|j| (0, j)).collect::<Vec<_>>()];
    let full: Vec<i64> = std::iter::once(0).chain(seq.iter().copied()).collect();
    for w in full.windows(2) {
        let (prev, cur) = (w[0], w[1]);
        let mut block = Vec::new();
        for i in 1..cur {
            for j in (np - cur)..(np - prev) {
                block.push((i, j));
            }
        }
        blocks.push(block);
    }
    Ok(blocks)
}

pub fn staircase_colength(seq: &[i64]) -> Result<StaircaseReport> {
    let colength = standard_monomials(seq)?.len() as u64;
    let np = *seq.last().expect("checked non-empty");
    Ok(StaircaseReport {
        colength,
        box_count: np as u64,
        block_counts: block_counts(seq),
    })
}

/// `ℓ(k[x,y]/J) / |ℤ²/G(S)|`, the lattice index taken from the basis
/// `{(0,n_p), (1,-1)}` of `G(S)`.
pub fn hk_via_eto(seq: &[i64]) -> Result<Rational> {
    let report = staircase_colength(seq)?;
    let np = *seq.last().expect("checked non-empty");
    let index = lattice_index([[0, np], [1, -1]]);
    Ok(Rational::new(report.colength as i64, index))
}

/// `ℓ(k[S]/m^{[q]})`: the number of `s ∈ S` with `s - q·g ∉ S` for every
/// generator `g` of the curve.
///
/// The count runs over `x ≤ q·n_p + F(S₁) + n_p`, `y ≤ q·n_p + F(S₂) + n_p`.
/// Beyond that box, `s - q·(n_p,0)` or `s - q·(0,n_p)` lies in
/// `(S₁ × S₂) ∩ G(S)`, which equals `S` for Cohen-Macaulay rings.
pub fn frobenius_power_colength(curve: &CurveSemigroup, q: i64) -> Result<u64> {
    if !curve.cm_assumed() {
        return Err(Error::CmNotAssumed);
    }
    if q <= 0 {
        return Err(Error::ZeroFrobeniusPower);
    }
    let np = curve.degree();
    let x_max = q * np + curve.s1().frobenius_number() + np;
    let y_max = q * np + curve.s2().frobenius_number() + np;
    frobenius_power_colength_in_box(curve, q, x_max, y_max)
}

/// [`frobenius_power_colength`] restricted to `[0, x_max] × [0, y_max]`.
pub fn frobenius_power_colength_in_box(curve: &CurveSemigroup, q: i64, x_max: i64, y_max: i64) -> Result<u64> {
    if q <= 0 {
        return Err(Error::ZeroFrobeniusPower);
    }
    check_box((x_max as u128 + 1) * (y_max as u128 + 1))?;
    let np = curve.degree();
    let shifts: Vec<Point2> = curve.generators().iter().map(|&g| q * g).collect();
    let mut count = 0u64;
    for x in 0..=x_max {
        let mut y = (-x).rem_euclid(np);
        while y <= y_max {
            let s = Point2::new(x, y);
            if curve.contains_exact(s)? {
                let mut standard = true;
                for &shift in &shifts {
                    let r = s - shift;
                    if r.x >= 0 && r.y >= 0 && curve.contains_exact(r)? {
                        standard = false;
                        break;
                    }
                }
                if standard {
                    count += 1;
                }
            }
            y += np;
        }
    }
    Ok(count)
}

/// One row of the `ℓ_q / q²` convergence diagnostic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub q: i64,
    pub colength: u64,
    pub ratio: Rational,
    /// `|ℓ_q/q² - e_HK|`.
    pub error: Rational,
    pub ratio_decimal: f64,
}

pub fn convergence(curve: &CurveSemigroup, qs: &[i64]) -> Result<Vec<ConvergenceRow>> {
    let target = hk_closed(curve.sequence())?.as_ratio();
    qs.iter()
        .map(|&q| {
            let colength = frobenius_power_colength(curve, q)?;
            let ratio = Rational::new(colength as i64, q * q);
            let diff = ratio.as_ratio() - target;
            let error = if diff < num_rational::Ratio::from_integer(0) { -diff } else { diff };
            Ok(ConvergenceRow {
                q,
                colength,
                ratio,
                error: error.into(),
                ratio_decimal: ratio.to_f64(),
            })
        })
        .collect()
}
