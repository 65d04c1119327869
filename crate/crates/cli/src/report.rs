use monocurve::deriv::Partial;
use monocurve::hk::StaircaseReport;
use monocurve::{CurveSemigroup, DerivationBasis, Rational};
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "monocurve/1";

/// Machine-readable output of every subcommand. Field order is the JSON key
/// order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input_sequence: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pf_s1: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pf_s2: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub apery: Option<AperyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation_basis: Option<Vec<GeneratorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimality_known: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hk: Option<HkReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<Vec<CheckRow>>,
}

impl Report {
    pub fn new(command: &str, input_sequence: &[i64]) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input_sequence: input_sequence.to_vec(),
            classification: None,
            pf_s1: None,
            pf_s2: None,
            apery: None,
            derivation_basis: None,
            mu: None,
            minimality_known: None,
            hk: None,
            validation: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub p: usize,
    pub arithmetic: bool,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub d: Option<i64>,
    pub cm_assumed: bool,
    pub cm_known: bool,
}

impl Classification {
    pub fn of(curve: &CurveSemigroup) -> Self {
        let ar = curve.arithmetic();
        Self {
            p: curve.p(),
            arithmetic: ar.is_some(),
            a: ar.map(|x| x.a),
            b: ar.map(|x| x.b),
            d: ar.map(|x| x.d),
            cm_assumed: curve.cm_assumed(),
            cm_known: curve.cm_known(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AperyReport {
    pub modulus: i64,
    pub elements: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub target: Partial,
    pub t_exp: i64,
    pub u_exp: i64,
    pub display: String,
}

impl GeneratorEntry {
    pub fn from_basis(basis: &DerivationBasis) -> Vec<Self> {
        basis
            .generators()
            .iter()
            .map(|g| Self {
                target: g.target,
                t_exp: g.t_exp,
                u_exp: g.u_exp,
                display: g.to_string(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
    /// `num/den` rounded to 12 significant digits.
    pub decimal: f64,
}

impl From<Rational> for Fraction {
    fn from(r: Rational) -> Self {
        Self {
            num: r.num(),
            den: r.den(),
            decimal: round_significant(r.to_f64(), 12),
        }
    }
}

pub fn round_significant(v: f64, digits: usize) -> f64 {
    format!("{:.*e}", digits - 1, v).parse().expect("formatted float parses")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HkReport {
    pub num: i64,
    pub den: i64,
    pub decimal: f64,
    pub method: String,
    /// Indexing used by the formula for the input list.
    pub convention: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub staircase: Option<StaircaseReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paths_agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius_power: Option<FrobeniusPowerReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrobeniusPowerReport {
    pub q: i64,
    pub colength: u64,
    pub ratio: Fraction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub check: String,
    pub cases: u64,
    pub mismatches: u64,
    pub pass: bool,
}

impl CheckRow {
    pub fn new(check: &str, cases: u64, mismatches: u64) -> Self {
        Self {
            check: check.to_string(),
            cases,
            mismatches,
            pass: mismatches == 0,
        }
    }
}
