//! Command-line front end for `monocurve`.
//!
//! Exit codes: 0 success, 1 invalid input, 2 an internal cap was exceeded,
//! 3 a validation sweep found a mismatch.

pub mod report;
pub mod validate;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use monocurve::hk::{frobenius_power_colength, staircase_colength};
use monocurve::{
    derivation_generators_brute, derivation_generators_closed, hk_closed, hk_via_eto, CurveSemigroup, Error,
    NumericalSemigroup, SearchConfig,
};

use report::{AperyReport, CheckRow, Classification, Fraction, FrobeniusPowerReport, GeneratorEntry, HkReport, Report};
use validate::Family;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

/// Environment override for the derivation search cap.
pub const CAP_ENV: &str = "MONOCURVE_SEARCH_CAP";

const HK_CONVENTION: &str =
    "input read as n_1 < ... < n_p with n_0 = 0 prepended; the curve is <(0,n_p), (n_i, n_p - n_i), (n_p,0)>";

#[derive(Debug, Parser)]
#[command(name = "monocurve", version, about = "Derivation modules and Hilbert-Kunz multiplicities of projective monomial curves")]
struct Cli {
    /// Emit a JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DerivMethod {
    Brute,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HkMethod {
    Closed,
    Eto,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pseudo-Frobenius numbers of both projections.
    Pf {
        #[arg(required = true, allow_negative_numbers = true)]
        seq: Vec<i64>,
    },
    /// Generators of the derivation module.
    Derivations {
        #[arg(required = true, allow_negative_numbers = true)]
        seq: Vec<i64>,
        #[arg(long, value_enum, default_value = "brute")]
        method: DerivMethod,
        /// Treat k[S] as Cohen-Macaulay even when that is not known.
        #[arg(long)]
        assume_cm: bool,
        /// Largest exponent tried by the search.
        #[arg(long)]
        cap: Option<i64>,
    },
    /// Hilbert-Kunz multiplicity.
    Hk {
        #[arg(required = true, allow_negative_numbers = true)]
        seq: Vec<i64>,
        #[arg(long, value_enum, default_value = "closed")]
        method: HkMethod,
        /// Also count the colength of the Q-th Frobenius power of the maximal ideal.
        #[arg(long, value_name = "Q", allow_negative_numbers = true)]
        frobenius_power: Option<i64>,
        #[arg(long)]
        assume_cm: bool,
    },
    /// Apéry set of the first projection with respect to A.
    Apery {
        #[arg(required = true, allow_negative_numbers = true)]
        seq: Vec<i64>,
        #[arg(long = "mod", value_name = "A", allow_negative_numbers = true)]
        modulus: i64,
    },
    /// Run the invariant sweeps and print a pass/fail table.
    Validate {
        #[arg(long, default_value_t = 30)]
        max_np: i64,
        #[arg(long, value_enum, default_value = "all")]
        family: Family,
    },
}

enum Failure {
    Invalid(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SearchCapExceeded(_) | Error::BoxOverflow { .. } => Failure::Cap(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok((report, text)) => {
            let failed = report.validation.as_ref().is_some_and(|rows| rows.iter().any(|r| !r.pass));
            if cli.json {
                let _ = writeln!(out, "{}", report.to_json());
            } else {
                let _ = write!(out, "{text}");
            }
            if failed {
                EXIT_VALIDATION
            } else {
                EXIT_OK
            }
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Cap(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_CAP
        }
    }
}

fn search_cap(flag: Option<i64>) -> Result<Option<i64>, Failure> {
    let cap = match flag {
        Some(c) => Some(c),
        None => match std::env::var(CAP_ENV) {
            Ok(v) => Some(
                v.trim()
                    .parse::<i64>()
                    .map_err(|_| Failure::Invalid(format!("{CAP_ENV} must be a positive integer, got {v:?}")))?,
            ),
            Err(_) => None,
        },
    };
    if let Some(c) = cap {
        if c <= 0 {
            return Err(Failure::Invalid(format!("search cap must be positive, got {c}")));
        }
    }
    Ok(cap)
}

fn curve(seq: &[i64], assume_cm: bool, err: &mut dyn Write) -> Result<CurveSemigroup, Failure> {
    let c = CurveSemigroup::new(seq, assume_cm)?;
    if assume_cm && !c.cm_known() {
        let _ = writeln!(
            err,
            "warning: Cohen-Macaulay property of k[S] assumed, not verified; \
             derivation output is a generating set without a minimality claim"
        );
    }
    Ok(c)
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<(Report, String), Failure> {
    match &cli.command {
        Command::Pf { seq } => {
            let c = curve(seq, false, err)?;
            let mut r = Report::new("pf", seq);
            r.classification = Some(Classification::of(&c));
            r.pf_s1 = Some(c.s1().pseudo_frobenius());
            r.pf_s2 = Some(c.s2().pseudo_frobenius());
            let text = format!(
                "S1 = <{}>\nPF(S1) = {:?}\nS2 = <{}>\nPF(S2) = {:?}\n",
                join(c.s1().minimal_generators()),
                c.s1().pseudo_frobenius(),
                join(c.s2().minimal_generators()),
                c.s2().pseudo_frobenius()
            );
            Ok((r, text))
        }
        Command::Derivations {
            seq,
            method,
            assume_cm,
            cap,
        } => derivations(seq, *method, *assume_cm, *cap, err),
        Command::Hk {
            seq,
            method,
            frobenius_power,
            assume_cm,
        } => hk(seq, *method, *frobenius_power, *assume_cm, err),
        Command::Apery { seq, modulus } => {
            let s = NumericalSemigroup::new(seq)?;
            let elements = s.apery_set(*modulus)?;
            let mut r = Report::new("apery", seq);
            let text = format!("Ap(<{}>, {}) = {:?}\n", join(s.minimal_generators()), modulus, elements);
            r.apery = Some(AperyReport {
                modulus: *modulus,
                elements,
            });
            Ok((r, text))
        }
        Command::Validate { max_np, family } => {
            if *max_np < 2 {
                return Err(Failure::Invalid(format!("--max-np must be at least 2, got {max_np}")));
            }
            let cfg = SearchConfig {
                cap: search_cap(None)?,
                ..Default::default()
            };
            let rows = validate::run_validation(*max_np, *family, &cfg)?;
            let mut r = Report::new("validate", &[]);
            let text = render_table(&rows);
            r.validation = Some(rows);
            Ok((r, text))
        }
    }
}

fn derivations(
    seq: &[i64],
    method: DerivMethod,
    assume_cm: bool,
    cap: Option<i64>,
    err: &mut dyn Write,
) -> Result<(Report, String), Failure> {
    let c = curve(seq, assume_cm, err)?;
    let cfg = SearchConfig {
        cap: search_cap(cap)?,
        ..Default::default()
    };
    let closed = match method {
        DerivMethod::Brute => None,
        _ => Some(derivation_generators_closed(seq).map_err(|e| {
            Failure::Invalid(format!(
                "no closed form for this input (needs p = 1 or a minimal arithmetic sequence): {e}"
            ))
        })?),
    };
    let brute = match method {
        DerivMethod::Closed => None,
        _ => Some(derivation_generators_brute(&c, &cfg)?),
    };
    let shown = brute.as_ref().or(closed.as_ref()).expect("one method ran");

    let mut r = Report::new("derivations", seq);
    r.classification = Some(Classification::of(&c));
    r.pf_s1 = Some(c.s1().pseudo_frobenius());
    r.pf_s2 = Some(c.s2().pseudo_frobenius());
    r.derivation_basis = Some(GeneratorEntry::from_basis(shown));
    r.mu = Some(shown.mu());
    r.minimality_known = Some(c.cm_known());

    let mut text = String::new();
    for g in shown.generators() {
        text.push_str(&format!("{g}\n"));
    }
    text.push_str(&format!("mu = {}\n", shown.mu()));
    if !c.cm_known() {
        text.push_str("(generating set; minimality not established for this input)\n");
    }
    if let (Some(b), Some(cl)) = (&brute, &closed) {
        let equal = b.same_set(cl);
        text.push_str(&format!("closed == brute: {equal}\n"));
        r.validation = Some(vec![CheckRow::new("closed == brute", 1, u64::from(!equal))]);
    }
    Ok((r, text))
}

fn hk(
    seq: &[i64],
    method: HkMethod,
    frobenius_power: Option<i64>,
    assume_cm: bool,
    err: &mut dyn Write,
) -> Result<(Report, String), Failure> {
    let mut r = Report::new("hk", seq);
    let mut text = String::new();
    let closed = match method {
        HkMethod::Eto => None,
        _ => Some(hk_closed(seq)?),
    };
    let eto = match method {
        HkMethod::Closed => None,
        _ => Some(hk_via_eto(seq)?),
    };
    let value = closed.or(eto).expect("one method ran");
    let frac = Fraction::from(value);
    text.push_str(&format!("e_HK = {} ({})\n", frac.decimal, value));
    if let Some(e) = eto {
        text.push_str(&format!("staircase / index: {e}\n"));
    }
    let paths_agree = match (closed, eto) {
        (Some(a), Some(b)) => {
            text.push_str(&format!("closed == staircase: {}\n", a == b));
            r.validation = Some(vec![CheckRow::new("hk closed == staircase", 1, u64::from(a != b))]);
            Some(a == b)
        }
        _ => None,
    };
    let staircase = match eto {
        Some(_) => Some(staircase_colength(seq)?),
        None => None,
    };
    let fp = match frobenius_power {
        Some(q) => {
            let c = curve(seq, assume_cm, err)?;
            let colength = frobenius_power_colength(&c, q)?;
            let ratio = Fraction::from(monocurve::Rational::new(colength as i64, q * q));
            text.push_str(&format!(
                "l(k[S]/m^[{q}]) = {colength}, / q^2 = {} ({}/{})\n",
                ratio.decimal, ratio.num, ratio.den
            ));
            Some(FrobeniusPowerReport { q, colength, ratio })
        }
        None => None,
    };
    r.hk = Some(HkReport {
        num: frac.num,
        den: frac.den,
        decimal: frac.decimal,
        method: format!("{method:?}").to_lowercase(),
        convention: HK_CONVENTION.to_string(),
        staircase,
        paths_agree,
        frobenius_power: fp,
    });
    Ok((r, text))
}

fn render_table(rows: &[CheckRow]) -> String {
    let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(5).max(5);
    let mut s = format!("{:<width$}  {:>8}  {:>10}  result\n", "check", "cases", "mismatches");
    for row in rows {
        s.push_str(&format!(
            "{:<width$}  {:>8}  {:>10}  {}\n",
            row.check,
            row.cases,
            row.mismatches,
            if row.pass { "PASS" } else { "FAIL" }
        ));
    }
    s
}

fn join(v: &[i64]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}
