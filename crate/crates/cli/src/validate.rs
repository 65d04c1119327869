//! Invariant sweeps behind `monocurve validate`.

use std::collections::BTreeSet;

use clap::ValueEnum;
use monocurve::numsemi::MinimalArithmetic;
use monocurve::{
    cross_validate, hk_arithmetic, hk_closed, hk_via_eto, mu_expected, pf_arithmetic, CurveSemigroup,
    NumericalSemigroup, Point2, Result, SearchConfig,
};

use crate::report::CheckRow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Arithmetic,
    P1,
    All,
}

fn minimal_arithmetic(max_np: i64, min_p: i64) -> Vec<MinimalArithmetic> {
    let mut out = Vec::new();
    for n0 in 1..=max_np {
        for p in min_p..=max_np {
            for d in 1..=max_np {
                if n0 + p * d > max_np {
                    break;
                }
                if let Ok(ar) = MinimalArithmetic::new(n0, p, d) {
                    out.push(ar);
                }
            }
        }
    }
    out
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn increasing_sequences(max_np: i64, max_len: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (1..=max_np).map(|v| vec![v]).collect();
    while let Some(seq) = stack.pop() {
        if seq.iter().fold(0, |g, &v| gcd(g, v)) == 1 {
            out.push(seq.clone());
        }
        if seq.len() < max_len {
            let last = *seq.last().expect("non-empty");
            for v in last + 1..=max_np {
                let mut next = seq.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn sweep<T, F>(name: &str, cases: &[T], mut ok: F) -> Result<CheckRow>
where
    F: FnMut(&T) -> Result<bool>,
{
    let mut bad = 0;
    for case in cases {
        if !ok(case)? {
            bad += 1;
        }
    }
    Ok(CheckRow::new(name, cases.len() as u64, bad))
}

fn arithmetic_checks(max_np: i64, cfg: &SearchConfig) -> Result<Vec<CheckRow>> {
    let p2 = minimal_arithmetic(max_np, 2);
    let p1 = minimal_arithmetic(max_np, 1);
    let mut rows = vec![
        sweep("arithmetic closed form == search", &p2, |ar| {
            Ok(cross_validate(&ar.sequence(), cfg)?.equal)
        })?,
        sweep("mu == table == type(S1) + 3", &p2, |ar| {
            let seq = ar.sequence();
            let r = cross_validate(&seq, cfg)?;
            let ty = NumericalSemigroup::new(&seq)?.cm_type()?;
            Ok(r.mu_match && mu_expected(&seq)? == ty + 3)
        })?,
        sweep("PF closed form == Apery maxima", &p2, |ar| {
            Ok(pf_arithmetic(ar.n0, ar.p, ar.d)? == NumericalSemigroup::new(&ar.sequence())?.pseudo_frobenius())
        })?,
        sweep("Ap(S1, n_p) homogeneous", &p1, |ar| {
            let s = NumericalSemigroup::new(&ar.sequence())?;
            s.is_homogeneous(&s.apery_set(ar.last())?)
        })?,
        sweep("equal weighted sums on Ap(S1, n_p)", &p1, |ar| {
            let s = NumericalSemigroup::new(&ar.sequence())?;
            for w in s.apery_set(ar.last())? {
                let sums: BTreeSet<i64> = s
                    .factorizations(w)
                    .iter()
                    .map(|f| f.coeffs.iter().enumerate().map(|(i, c)| c * (ar.p - i as i64) * ar.d).sum())
                    .collect();
                if sums.len() > 1 {
                    return Ok(false);
                }
            }
            Ok(true)
        })?,
        sweep("hk arithmetic == hk closed", &p1, |ar| {
            Ok(hk_arithmetic(ar.n0, ar.p, ar.d)? == hk_closed(&ar.sequence())?)
        })?,
    ];
    let grid_limit = max_np.min(30);
    let grid: Vec<&MinimalArithmetic> = p1.iter().filter(|ar| ar.last() <= grid_limit).collect();
    rows.push(sweep("product-group membership == exact", &grid, |ar| {
        let c = CurveSemigroup::new(&ar.sequence(), false)?;
        let np = c.degree();
        for x in 0..=3 * np {
            for y in 0..=3 * np {
                let pt = Point2::new(x, y);
                if c.contains_cm(pt)? != c.contains_exact(pt)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    })?);
    Ok(rows)
}

fn p1_checks(max_np: i64, cfg: &SearchConfig) -> Result<Vec<CheckRow>> {
    let mut pairs = Vec::new();
    for n1 in 2..=max_np {
        for n0 in 1..n1 {
            if gcd(n0, n1) == 1 {
                pairs.push([n0, n1]);
            }
        }
    }
    Ok(vec![sweep("plane closed form == search, mu == 4", &pairs, |seq| {
        let r = cross_validate(seq, cfg)?;
        Ok(r.equal && r.mu_match)
    })?])
}

fn hk_checks(max_np: i64) -> Result<Vec<CheckRow>> {
    let seqs = increasing_sequences(max_np, 4);
    Ok(vec![sweep("hk closed == staircase / index", &seqs, |seq| {
        Ok(hk_closed(seq)? == hk_via_eto(seq)?)
    })?])
}

pub fn run_validation(max_np: i64, family: Family, cfg: &SearchConfig) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    if matches!(family, Family::Arithmetic | Family::All) {
        rows.extend(arithmetic_checks(max_np, cfg)?);
    }
    if matches!(family, Family::P1 | Family::All) {
        rows.extend(p1_checks(max_np, cfg)?);
    }
    if family == Family::All {
        rows.extend(hk_checks(max_np)?);
    }
    Ok(rows)
}
