//! JSON reports and the plain-text summary.
//!
//! Object keys come out sorted (serde_json's default map is ordered) and
//! violations are already sorted by the core, so a report is byte-stable for
//! a fixed seed. `elapsed_ms` is `null` unless timings were requested.

use std::fmt::Write as _;
use std::path::Path;

use bredux_core::classes::ClosureReport;
use bredux_core::reductions::{ContainmentReport, VerificationReport, Violation};
use serde_json::{json, Value};

fn violation_json(v: &Violation) -> Value {
    json!({
        "instance": v.instance,
        "source_decision": v.source_decision,
        "target_decision": v.target_decision,
        "reason": v.reason.to_string(),
    })
}

fn closure_json(c: &ClosureReport) -> Value {
    json!({
        "class": c.class.token(),
        "budget": c.budget,
        "members": c.members,
        "deletions": c.deletions,
        "violations": c.violations.iter().map(|v| json!({
            "member": v.member,
            "deleted": v.deleted,
            "error": v.error,
        })).collect::<Vec<_>>(),
    })
}

fn containment_json(c: &ContainmentReport) -> Value {
    json!({
        "source": c.source.token(),
        "image": c.image.token(),
        "budget": c.budget,
        "members": c.members,
        "violations": c.violations,
    })
}

pub fn report_json(r: &VerificationReport, elapsed_ms: Option<u128>) -> Value {
    json!({
        "reduction": r.reduction.token(),
        "exhaustive_count": r.exhaustive_count,
        "sampled_count": r.sampled_count,
        "violations": r.violations.iter().map(violation_json).collect::<Vec<_>>(),
        "closure": r.closure.iter().map(closure_json).collect::<Vec<_>>(),
        "containment": r.containment.iter().map(containment_json).collect::<Vec<_>>(),
        "seed": r.seed,
        "elapsed_ms": elapsed_ms.map(|ms| ms as u64),
    })
}

/// Pretty JSON with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values always serialize");
    s.push('\n');
    s
}

pub fn emit_report(value: &Value, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, render(value))
}

/// 0 when every report is clean, 1 otherwise.
pub fn exit_code<'a>(reports: impl IntoIterator<Item = &'a VerificationReport>) -> i32 {
    if reports.into_iter().all(VerificationReport::is_clean) {
        0
    } else {
        1
    }
}

/// One row per report plus its closure and containment checks.
pub fn summary(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    writeln!(out, "{:<10} {:>10} {:>8} {:>10}  checks", "reduction", "exhaustive", "sampled", "violations").unwrap();
    for r in reports {
        let checks: Vec<String> = r
            .closure
            .iter()
            .map(|c| format!("closure {}@{}={}", c.class.token(), c.budget, c.violations.len()))
            .chain(r.containment.iter().map(|c| {
                format!("image {}->{}={}", c.source.token(), c.image.token(), c.violations.len())
            }))
            .collect();
        writeln!(
            out,
            "{:<10} {:>10} {:>8} {:>10}  {}",
            r.reduction.token(),
            r.exhaustive_count,
            r.sampled_count,
            r.total_violations(),
            checks.join(" ")
        )
        .unwrap();
    }
    out
}
