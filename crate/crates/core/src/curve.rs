//! The affine semigroup `S = ⟨(0,n_p), (n_0,n_p-n_0), …, (n_{p-1},n_p-n_{p-1}), (n_p,0)⟩ ⊂ ℕ²`
//! attached to a projective monomial curve.

use std::ops::{Add, Mul, Sub};
use std::sync::RwLock;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numsemi::{MinimalArithmetic, NumericalSemigroup, MAX_GENERATOR};

/// A lattice point of ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point2 {
    pub x: i64,
    pub y: i64,
}

impl Point2 {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<Point2> for i64 {
    type Output = Point2;
    fn mul(self, rhs: Point2) -> Point2 {
        Point2::new(self * rhs.x, self * rhs.y)
    }
}

/// Index `|ℤ²/G|` of the lattice spanned by the rows of `basis`.
pub fn lattice_index(basis: [[i64; 2]; 2]) -> i64 {
    (basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0]).abs()
}

/// Validates a strictly increasing list of positive integers with gcd 1.
pub(crate) fn check_sequence(seq: &[i64]) -> Result<()> {
    if seq.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&g) = seq.iter().find(|&&g| g <= 0) {
        return Err(Error::NonPositiveGenerator(g));
    }
    if seq.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotStrictlyIncreasing);
    }
    let last = *seq.last().expect("non-empty");
    if last > MAX_GENERATOR {
        return Err(Error::InputTooLarge {
            value: last,
            max: MAX_GENERATOR,
        });
    }
    let g = seq.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g != 1 {
        return Err(Error::GcdNotOne(g));
    }
    Ok(())
}

/// Semigroup of a projective monomial curve given by `n_0 < … < n_p`.
#[derive(Debug)]
pub struct CurveSemigroup {
    sequence: Vec<i64>,
    generators: Vec<Point2>,
    s1: NumericalSemigroup,
    s2: NumericalSemigroup,
    arithmetic: Option<MinimalArithmetic>,
    cm_assumed: bool,
    cm_known: bool,
    // min_parts[x]: fewest nonzero first coordinates n_0..n_p summing to x
    min_parts: RwLock<Vec<u32>>,
}

const UNREACHABLE: u32 = u32::MAX;

impl Clone for CurveSemigroup {
    fn clone(&self) -> Self {
        Self {
            sequence: self.sequence.clone(),
            generators: self.generators.clone(),
            s1: self.s1.clone(),
            s2: self.s2.clone(),
            arithmetic: self.arithmetic,
            cm_assumed: self.cm_assumed,
            cm_known: self.cm_known,
            min_parts: RwLock::new(self.min_parts.read().expect("table poisoned").clone()),
        }
    }
}

impl CurveSemigroup {
    /// Builds the curve semigroup. The Cohen-Macaulay flag is set
    /// automatically for `p = 1` and for minimal arithmetic sequences;
    /// `assume_cm` forces it for any other input.
    pub fn new(seq: &[i64], assume_cm: bool) -> Result<Self> {
        if seq.len() < 2 {
            return Err(Error::TooShort {
                min: 2,
                len: seq.len(),
            });
        }
        check_sequence(seq)?;
        let np = *seq.last().expect("len >= 2");
        let p = seq.len() - 1;

        let mut generators = Vec::with_capacity(p + 2);
        generators.push(Point2::new(0, np));
        generators.extend(seq.iter().map(|&n| Point2::new(n, np - n)));

        let s1 = NumericalSemigroup::new(seq)?;
        let second: Vec<i64> = seq.iter().map(|&n| np - n).filter(|&v| v > 0).chain([np]).collect();
        let s2 = NumericalSemigroup::new(&second)?;
        let arithmetic = MinimalArithmetic::from_sequence(seq).ok();
        let cm_known = p == 1 || arithmetic.is_some();

        Ok(Self {
            sequence: seq.to_vec(),
            generators,
            s1,
            s2,
            arithmetic,
            cm_assumed: assume_cm || cm_known,
            cm_known,
            min_parts: RwLock::new(vec![0]),
        })
    }

    pub fn sequence(&self) -> &[i64] {
        &self.sequence
    }

    /// The `p + 2` generators `(0,n_p), (n_0,n_p-n_0), …, (n_p,0)`.
    pub fn generators(&self) -> &[Point2] {
        &self.generators
    }

    /// `p`, one less than the sequence length.
    pub fn p(&self) -> usize {
        self.sequence.len() - 1
    }

    /// `n_p`.
    pub fn degree(&self) -> i64 {
        *self.sequence.last().expect("len >= 2")
    }

    /// Projection onto the first coordinate.
    pub fn s1(&self) -> &NumericalSemigroup {
        &self.s1
    }

    /// Projection onto the second coordinate.
    pub fn s2(&self) -> &NumericalSemigroup {
        &self.s2
    }

    pub fn arithmetic(&self) -> Option<&MinimalArithmetic> {
        self.arithmetic.as_ref()
    }

    pub fn cm_assumed(&self) -> bool {
        self.cm_assumed
    }

    /// True when Cohen-Macaulayness is known rather than user-asserted.
    pub fn cm_known(&self) -> bool {
        self.cm_known
    }

    /// Membership in the group `G(S)` generated by `S`: `x + y ≡ 0 (mod n_p)`.
    pub fn in_group(&self, pt: Point2) -> bool {
        (pt.x + pt.y).rem_euclid(self.degree()) == 0
    }

    /// `|ℤ²/G(S)|` computed from the basis `{(0,n_p), (1,-1)}`.
    pub fn group_index(&self) -> i64 {
        lattice_index([[0, self.degree()], [1, -1]])
    }

    /// Exact membership in `S`.
    ///
    /// All generators have coordinate sum `n_p`, so a representation of
    /// `(x, y)` uses exactly `m = (x+y)/n_p` of them, and the point lies in
    /// `S` iff `x` is a sum of at most `m` terms from `n_0, …, n_p` (the
    /// remaining slots are filled with `(0, n_p)`).
    pub fn contains_exact(&self, pt: Point2) -> Result<bool> {
        if pt.x < 0 || pt.y < 0 {
            return Err(Error::NegativeCoordinate { x: pt.x, y: pt.y });
        }
        if !self.in_group(pt) {
            return Ok(false);
        }
        let m = (pt.x + pt.y) / self.degree();
        let parts = self.min_parts(pt.x);
        Ok(parts != UNREACHABLE && i64::from(parts) <= m)
    }

    /// Membership through `(S₁ × S₂) ∩ G(S)`, valid for Cohen-Macaulay rings.
    pub fn contains_cm(&self, pt: Point2) -> Result<bool> {
        if !self.cm_assumed {
            return Err(Error::CmNotAssumed);
        }
        if pt.x < 0 || pt.y < 0 {
            return Err(Error::NegativeCoordinate { x: pt.x, y: pt.y });
        }
        Ok(self.s1.contains(pt.x) && self.s2.contains(pt.y) && self.in_group(pt))
    }

    fn min_parts(&self, x: i64) -> u32 {
        let idx = x as usize;
        {
            let table = self.min_parts.read().expect("table poisoned");
            if idx < table.len() {
                return table[idx];
            }
        }
        let mut table = self.min_parts.write().expect("table poisoned");
        if idx < table.len() {
            return table[idx];
        }
        let target = (idx + 1).max(table.len() * 2);
        let start = table.len();
        table.resize(target, UNREACHABLE);
        for v in start..target {
            let best = self
                .sequence
                .iter()
                .filter(|&&n| n as usize <= v)
                .map(|&n| table[v - n as usize])
                .filter(|&c| c != UNREACHABLE)
                .min();
            table[v] = best.map_or(UNREACHABLE, |c| c + 1);
        }
        table[idx]
    }
}
