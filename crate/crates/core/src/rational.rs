use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

/// Exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        Self(Ratio::new(num, den))
    }

    pub fn from_integer(n: i64) -> Self {
        Self(Ratio::from_integer(n))
    }

    pub fn num(&self) -> i64 {
        *self.0.numer()
    }

    pub fn den(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.num() as f64 / self.den() as f64
    }

    pub fn as_ratio(&self) -> Ratio<i64> {
        self.0
    }
}

impl From<Ratio<i64>> for Rational {
    fn from(r: Ratio<i64>) -> Self {
        Self(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num(), self.den())
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: i64,
    den: i64,
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.num(),
            den: self.den(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RationalRepr::deserialize(d)?;
        if r.den == 0 {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational::new(r.num, r.den))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        let r = Rational::new(6, -4);
        assert_eq!((r.num(), r.den()), (-3, 2));
        assert_eq!(Rational::new(6, 3), Rational::from_integer(2));
        assert!(Rational::new(6, 3).is_integer());
        assert_eq!(Rational::new(223, 19).to_string(), "223/19");
    }
}
