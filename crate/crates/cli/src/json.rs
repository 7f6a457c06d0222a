//! JSON rendering. Integers above 2^53 are emitted as decimal strings.

use num_bigint::BigUint;
use serde_json::{json, Value};
use tspread::kk::FeasibilityReport;
use tspread::verify::SweepReport;
use tspread::{FtVector, MacaulayExpansion};

const SAFE_MAX: u64 = 1 << 53;

pub fn number(v: &BigUint) -> Value {
    match u64::try_from(v) {
        Ok(x) if x <= SAFE_MAX => json!(x),
        _ => Value::String(v.to_string()),
    }
}

pub fn ft_vector(f: &FtVector) -> Value {
    Value::Array(f.trimmed().iter().map(number).collect())
}

pub fn expansion(e: &MacaulayExpansion) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .iter()
        .map(|&(top, bottom)| json!({ "top": top, "bottom": bottom }))
        .collect();
    json!({
        "a": number(e.value()),
        "d": e.degree(),
        "terms": terms,
        "text": e.to_string(),
    })
}

pub fn successor(a: &BigUint, d: u32, t: Option<u32>, n: Option<u32>, value: &BigUint) -> Value {
    json!({ "a": number(a), "d": d, "t": t, "n": n, "value": number(value) })
}

pub fn feasibility(f: &FtVector, report: &FeasibilityReport, witness: Option<&str>) -> Value {
    let violation = report.violation.as_ref().map(
        |v| json!({ "degree": v.degree, "bound": number(&v.bound), "value": number(&v.value) }),
    );
    let bounds: Vec<Value> = report
        .bounds
        .iter()
        .map(|b| {
            json!({
                "degree": b.degree,
                "value": number(&b.value),
                "bound": number(&b.bound),
                "next": number(&b.next),
            })
        })
        .collect();
    json!({
        "f": ft_vector(f),
        "t": report.t,
        "n": report.n,
        "feasible": report.feasible,
        "reason": report.reason,
        "violation": violation,
        "bounds": bounds,
        "witness": witness,
    })
}

pub fn sweeps(reports: &[SweepReport]) -> Value {
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "name": r.name,
                "passed": r.passed(),
                "checked": r.checked,
                "mismatches": r.failed,
                "examples": r.failures,
            })
        })
        .collect();
    json!({ "passed": reports.iter().all(SweepReport::passed), "sweeps": items })
}
