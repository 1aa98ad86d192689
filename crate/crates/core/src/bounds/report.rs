//! Bound-report records and their CSV/JSON serialization. Rational fields
//! are emitted bit-exactly as decimal numerator/denominator strings; real
//! fields carry 12 significant digits.

use std::io::{self, Write};

use num::{BigInt, ToPrimitive, Zero};
use serde_json::json;

use crate::arith::Rat;

/// A bound evaluation: exact rational where the closed form allows it,
/// an upward-rounded binary64 value otherwise, or — for magnitudes past
/// the binary64 range — the base-2 logarithm of an upward-rounded value.
#[derive(Debug, Clone)]
pub enum BoundValue {
    Exact(Rat),
    Upper(f64),
    UpperLog2(f64),
}

impl BoundValue {
    /// Does the bound admit `value`? Exact and binary64 bounds compare as
    /// rationals; log-scale bounds compare in log space, where the upward
    /// nudge baked into the bound keeps the comparison one-sided.
    pub fn admits(&self, value: &Rat) -> bool {
        match self {
            BoundValue::Exact(v) => value <= v,
            BoundValue::Upper(x) => {
                *value <= Rat::from_float(*x).expect("upper bounds are finite")
            }
            BoundValue::UpperLog2(l) => rat_log2(value) <= *l,
        }
    }

    pub fn log2(&self) -> f64 {
        match self {
            BoundValue::Exact(v) => rat_log2(v),
            BoundValue::Upper(x) => x.log2(),
            BoundValue::UpperLog2(l) => *l,
        }
    }

    /// Scientific-notation rendering with 12 significant digits.
    pub fn to_sci_string(&self) -> String {
        match self {
            BoundValue::Exact(v) => sci_string_rat(v),
            BoundValue::Upper(x) => sci_string_f64(*x),
            BoundValue::UpperLog2(l) => {
                let log10 = l * std::f64::consts::LOG10_2;
                let exp = log10.floor();
                let mantissa = 10f64.powf(log10 - exp);
                format!("{mantissa:.11}e{exp:+}")
            }
        }
    }
}

/// Per-n record from a verification sweep.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n: u64,
    /// |f^{-1}(n)|, exact.
    pub inv_abs: Rat,
    pub bound: BoundValue,
    /// |f^{-1}(n)| / bound in binary64, computed in log space so huge
    /// magnitudes stay finite.
    pub ratio: f64,
    pub pass: bool,
}

/// Sweep totals.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub spec: String,
    pub function: String,
    pub checked: u64,
    pub failures: u64,
    pub max_ratio: f64,
    pub argmax_n: Option<u64>,
}

impl SweepSummary {
    pub fn line(&self) -> String {
        let argmax = self
            .argmax_n
            .map_or_else(|| "-".to_string(), |n| n.to_string());
        format!(
            "{} checked, {} failures, max ratio {} at n = {} [spec {}, f = {}]",
            self.checked,
            self.failures,
            sci_string_f64(self.max_ratio),
            argmax,
            self.spec,
            self.function
        )
    }
}

/// log2 of a positive big integer, stable for arbitrarily large values.
fn bigint_log2(x: &BigInt) -> f64 {
    debug_assert!(x.sign() != num::bigint::Sign::Minus);
    let bits = x.bits();
    if bits <= 960 {
        return x.to_f64().expect("within f64 range").log2();
    }
    let shifted: BigInt = x >> (bits - 64);
    shifted.to_f64().expect("64-bit mantissa").log2() + (bits - 64) as f64
}

/// log2 |x| for a rational, -inf at zero.
pub fn rat_log2(x: &Rat) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    use num::Signed;
    let a = x.abs();
    bigint_log2(a.numer()) - bigint_log2(a.denom())
}

/// Formats with 12 significant digits.
pub fn sci_string_f64(x: f64) -> String {
    format!("{x:.11e}")
}

/// Scientific rendering of a rational; falls back to a log10-derived form
/// past the binary64 range.
pub fn sci_string_rat(x: &Rat) -> String {
    if x.is_zero() {
        return sci_string_f64(0.0);
    }
    if let Some(v) = x.to_f64() {
        if v.is_finite() && v != 0.0 {
            return sci_string_f64(v);
        }
    }
    use num::Signed;
    let log10 = rat_log2(&x.abs()) * std::f64::consts::LOG10_2;
    let exp = log10.floor();
    let mantissa = 10f64.powf(log10 - exp) * if x.is_negative() { -1.0 } else { 1.0 };
    format!("{mantissa:.11}e{exp:+}")
}

/// CSV header used by every report stream.
pub const CSV_HEADER: &str = "n,inv_abs_num,inv_abs_den,bound,ratio,verdict";

pub fn write_reports_csv<W: Write>(out: &mut W, reports: &[BoundReport]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.n,
            r.inv_abs.numer(),
            r.inv_abs.denom(),
            r.bound.to_sci_string(),
            sci_string_f64(r.ratio),
            verdict(r.pass),
        )?;
    }
    Ok(())
}

pub fn report_to_json(r: &BoundReport) -> serde_json::Value {
    json!({
        "n": r.n,
        "inv_abs_num": r.inv_abs.numer().to_string(),
        "inv_abs_den": r.inv_abs.denom().to_string(),
        "bound": r.bound.to_sci_string(),
        "ratio": r.ratio,
        "verdict": verdict(r.pass),
    })
}

pub fn sweep_to_json(reports: &[BoundReport], summary: &SweepSummary) -> serde_json::Value {
    json!({
        "reports": reports.iter().map(report_to_json).collect::<Vec<_>>(),
        "summary": {
            "spec": summary.spec,
            "function": summary.function,
            "checked": summary.checked,
            "failures": summary.failures,
            "max_ratio": summary.max_ratio,
            "argmax_n": summary.argmax_n,
        },
    })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}
