//! Numerical semigroups: submonoids of the non-negative integers with finite
//! complement.
//!
//! Everything is driven by the Apéry set with respect to the multiplicity,
//! which is computed once at construction with a shortest-path pass over the
//! residues. Membership, the Frobenius number and the pseudo-Frobenius set all
//! fall out of that table.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};
use std::sync::{Arc, RwLock};

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest generator accepted anywhere in the crate. Bounds the residue tables.
pub const MAX_GENERATOR: i64 = 1_000_000;

/// Least element of the monoid generated by `steps` in every residue class
/// modulo `modulus`; `i64::MAX` marks unreachable classes.
fn least_per_residue(modulus: i64, steps: &[i64]) -> Vec<i64> {
    let m = modulus as usize;
    let mut dist = vec![i64::MAX; m];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in steps {
            let nr = (r + (g % modulus) as usize) % m;
            let nd = d + g;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

/// A numerical semigroup `⟨n_0, …, n_p⟩` with `gcd = 1`.
#[derive(Debug)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    minimal: Vec<i64>,
    /// `Ap(S, m)` indexed by residue, `m` the multiplicity.
    base_apery: Vec<i64>,
    frobenius: i64,
    apery_cache: RwLock<BTreeMap<i64, Arc<Vec<i64>>>>,
}

impl Clone for NumericalSemigroup {
    fn clone(&self) -> Self {
        let cache = self.apery_cache.read().expect("apery cache poisoned").clone();
        Self {
            generators: self.generators.clone(),
            minimal: self.minimal.clone(),
            base_apery: self.base_apery.clone(),
            frobenius: self.frobenius,
            apery_cache: RwLock::new(cache),
        }
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.minimal == other.minimal
    }
}

impl Eq for NumericalSemigroup {}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`. Generators are sorted and
    /// deduplicated; a generator is dropped from the minimal system iff it is
    /// representable by the smaller ones.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositiveGenerator(g));
        }
        if let Some(&g) = gens.iter().find(|&&g| g > MAX_GENERATOR) {
            return Err(Error::InputTooLarge {
                value: g,
                max: MAX_GENERATOR,
            });
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let g = generators.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }

        let mut minimal: Vec<i64> = Vec::with_capacity(generators.len());
        for &g in &generators {
            let redundant = match minimal.first() {
                None => false,
                Some(&m) => {
                    let dist = least_per_residue(m, &minimal);
                    dist[(g % m) as usize] <= g
                }
            };
            if !redundant {
                minimal.push(g);
            }
        }

        let m = minimal[0];
        let base_apery = least_per_residue(m, &minimal);
        let frobenius = base_apery.iter().copied().max().unwrap_or(0) - m;
        Ok(Self {
            generators,
            minimal,
            base_apery,
            frobenius,
            apery_cache: RwLock::new(BTreeMap::new()),
        })
    }

    /// Generators as given (sorted, deduplicated).
    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.minimal
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> i64 {
        self.minimal[0]
    }

    /// Whether the semigroup is all of ℕ.
    pub fn is_natural(&self) -> bool {
        self.minimal[0] == 1
    }

    pub fn contains(&self, s: i64) -> bool {
        if s < 0 {
            return false;
        }
        let m = self.multiplicity();
        s >= self.base_apery[(s % m) as usize]
    }

    /// Largest integer outside the semigroup; `-1` for ℕ.
    pub fn frobenius_number(&self) -> i64 {
        self.frobenius
    }

    /// `Ap(S, a)`, sorted ascending.
    pub fn apery_set(&self, a: i64) -> Result<Vec<i64>> {
        if a <= 0 || !self.contains(a) {
            return Err(Error::NotInSemigroup(a));
        }
        Ok(self.apery_by_residue(a)?.iter().copied().collect::<BTreeSet<_>>().into_iter().collect())
    }

    /// `Ap(S, a)` indexed by residue class modulo `a`.
    fn apery_by_residue(&self, a: i64) -> Result<Arc<Vec<i64>>> {
        if a == self.multiplicity() {
            return Ok(Arc::new(self.base_apery.clone()));
        }
        if let Some(hit) = self.apery_cache.read().expect("apery cache poisoned").get(&a) {
            return Ok(hit.clone());
        }
        if a > MAX_GENERATOR {
            return Err(Error::InputTooLarge {
                value: a,
                max: MAX_GENERATOR,
            });
        }
        let table = Arc::new(least_per_residue(a, &self.minimal));
        self.apery_cache
            .write()
            .expect("apery cache poisoned")
            .insert(a, table.clone());
        Ok(table)
    }

    /// Pseudo-Frobenius numbers, read off as the maximal elements of
    /// `Ap(S, m)` under `≤_S`, shifted by `-m`. Empty for ℕ.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_natural() {
            return Vec::new();
        }
        let m = self.multiplicity();
        let in_apery = |v: i64| self.base_apery[(v % m) as usize] == v;
        let mut pf: Vec<i64> = self
            .base_apery
            .iter()
            .filter(|&&w| {
                self.minimal
                    .iter()
                    .skip(1)
                    .all(|&g| !in_apery(w + g))
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    /// Cohen-Macaulay type `|PF(S)|`.
    pub fn cm_type(&self) -> Result<usize> {
        if self.is_natural() {
            return Err(Error::TypeUndefinedForN);
        }
        Ok(self.pseudo_frobenius().len())
    }

    /// Every factorization of `s` over the minimal generators, in ascending
    /// lexicographic order of coefficient vectors. Empty iff `s ∉ S`.
    pub fn factorizations(&self, s: i64) -> Vec<Factorization> {
        if !self.contains(s) {
            return Vec::new();
        }
        let gens = &self.minimal;
        let k = gens.len();
        let width = s as usize + 1;
        // reach[i][r]: r is representable by gens[i..]
        let mut reach = vec![vec![false; width]; k + 1];
        reach[k][0] = true;
        for i in (0..k).rev() {
            let g = gens[i] as usize;
            for r in 0..width {
                reach[i][r] = reach[i + 1][r] || (r >= g && reach[i][r - g]);
            }
        }

        let mut out = Vec::new();
        let mut coeffs = vec![0i64; k];
        collect_factorizations(gens, &reach, 0, s, &mut coeffs, &mut out);
        out
    }

    /// Set of factorization lengths of `s`.
    pub fn length_set(&self, s: i64) -> Result<BTreeSet<i64>> {
        if !self.contains(s) {
            return Err(Error::NotInSemigroup(s));
        }
        Ok(self.factorizations(s).into_iter().map(|f| f.length).collect())
    }

    /// Whether every nonzero element of `set` has a single factorization length.
    pub fn is_homogeneous(&self, set: &[i64]) -> Result<bool> {
        for &s in set {
            if !self.contains(s) {
                return Err(Error::ElementNotInSemigroup(s));
            }
        }
        for &s in set {
            if s != 0 && self.length_set(s)?.len() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn collect_factorizations(
    gens: &[i64],
    reach: &[Vec<bool>],
    i: usize,
    remaining: i64,
    coeffs: &mut [i64],
    out: &mut Vec<Factorization>,
) {
    if i == gens.len() {
        if remaining == 0 {
            out.push(Factorization::new(coeffs.to_vec(), gens));
        }
        return;
    }
    let g = gens[i];
    let mut c = 0;
    while c * g <= remaining {
        let rest = remaining - c * g;
        if reach[i + 1][rest as usize] {
            coeffs[i] = c;
            collect_factorizations(gens, reach, i + 1, rest, coeffs, out);
        }
        c += 1;
    }
    coeffs[i] = 0;
}

/// A representation `s = Σ λ_i n_i` over the minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    pub coeffs: Vec<i64>,
    pub value: i64,
    pub length: i64,
}

impl Factorization {
    pub fn new(coeffs: Vec<i64>, gens: &[i64]) -> Self {
        let value = coeffs.iter().zip(gens).map(|(c, g)| c * g).sum();
        let length = coeffs.iter().sum();
        Self {
            coeffs,
            value,
            length,
        }
    }
}

/// A minimal arithmetic sequence `n_i = n_0 + i·d`, `0 ≤ i ≤ p`, with
/// `n_0 = a·p + b`, `0 ≤ b < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct MinimalArithmetic {
    pub n0: i64,
    pub p: i64,
    pub d: i64,
    pub a: i64,
    pub b: i64,
}

impl MinimalArithmetic {
    pub fn new(n0: i64, p: i64, d: i64) -> Result<Self> {
        let bad = |msg: &str| Error::NotMinimalArithmetic(msg.to_string());
        if n0 <= 0 || p <= 0 || d <= 0 {
            return Err(bad("n0, p and d must be positive"));
        }
        let last = n0
            .checked_add(p.checked_mul(d).ok_or(Error::Overflow)?)
            .ok_or(Error::Overflow)?;
        if last > MAX_GENERATOR {
            return Err(Error::InputTooLarge {
                value: last,
                max: MAX_GENERATOR,
            });
        }
        if n0.gcd(&d) != 1 {
            return Err(bad("gcd of the sequence is not 1"));
        }
        let seq: Vec<i64> = (0..=p).map(|i| n0 + i * d).collect();
        let s = NumericalSemigroup::new(&seq)?;
        if s.minimal_generators() != seq.as_slice() {
            return Err(bad("terms do not minimally generate the semigroup"));
        }
        Ok(Self {
            n0,
            p,
            d,
            a: n0 / p,
            b: n0 % p,
        })
    }

    /// Recognises a strictly increasing sequence as minimal arithmetic.
    pub fn from_sequence(seq: &[i64]) -> Result<Self> {
        if seq.len() < 2 {
            return Err(Error::NotMinimalArithmetic(
                "need at least two terms".to_string(),
            ));
        }
        let d = seq[1] - seq[0];
        if seq.windows(2).any(|w| w[1] - w[0] != d) {
            return Err(Error::NotMinimalArithmetic(
                "differences are not constant".to_string(),
            ));
        }
        Self::new(seq[0], seq.len() as i64 - 1, d)
    }

    /// `n_i`.
    pub fn term(&self, i: i64) -> i64 {
        self.n0 + i * self.d
    }

    /// `n_p`.
    pub fn last(&self) -> i64 {
        self.term(self.p)
    }

    pub fn sequence(&self) -> Vec<i64> {
        (0..=self.p).map(|i| self.term(i)).collect()
    }
}

/// Closed-form `PF(⟨n_0, n_0+d, …, n_0+pd⟩)` for a minimal arithmetic
/// sequence with `p ≥ 2`.
pub fn pf_arithmetic(n0: i64, p: i64, d: i64) -> Result<Vec<i64>> {
    if p < 2 {
        return Err(Error::NotMinimalArithmetic("p must be at least 2".to_string()));
    }
    let ms = MinimalArithmetic::new(n0, p, d)?;
    let (a, b, np) = (ms.a, ms.b, ms.last());
    let mut pf: Vec<i64> = match b {
        0 => (1..p).map(|i| a * np - ms.term(p - i)).collect(),
        1 => (1..=p).map(|i| a * np - ms.term(p - i)).collect(),
        _ => (1..b).map(|i| a * np + i * d).collect(),
    };
    pf.sort_unstable();
    Ok(pf)
}
