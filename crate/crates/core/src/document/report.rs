//! `report` documents: a `report <subtype>` line, then subtype fields.

use super::{Document, DocumentError, Kind, Origin};
use crate::analysis::{
    CellOutcome, ComparisonReport, LsssSecurityReport, RsaRobustnessReport, ORDER_11_COMPLETIONS_ESTIMATE, SECURE_ORDER,
};
use crate::lsss::AttackReport;

pub const REPORT_SUBTYPES: [&str; 12] = [
    "count",
    "certificate",
    "critical-sets",
    "strength",
    "outcome",
    "attack",
    "ranking",
    "audit",
    "verification",
    "lsss-security",
    "rsa-robustness",
    "comparison",
];

/// An empty report of the given subtype.
///
/// # Panics
/// If `subtype` is not one of [`REPORT_SUBTYPES`].
pub fn report_document(subtype: &str, origin: Origin) -> Document {
    assert!(REPORT_SUBTYPES.contains(&subtype), "unknown report subtype `{subtype}`");
    let mut doc = Document::new(Kind::Report, origin);
    doc.push("report", subtype);
    doc
}

pub fn report_subtype(doc: &Document) -> Result<&str, DocumentError> {
    doc.expect_kind(Kind::Report)?;
    let first = doc.fields.first().ok_or_else(|| DocumentError::MissingField("report".into()))?;
    if first.key != "report" {
        return Err(DocumentError::MissingField("report".into()));
    }
    if !REPORT_SUBTYPES.contains(&first.value.as_str()) {
        return Err(DocumentError::BadValue {
            key: "report".into(),
            value: first.value.clone(),
        });
    }
    Ok(&first.value)
}

fn attack_value(r: &AttackReport) -> String {
    let exact = r.exact_probability.map_or("none".to_string(), |p| p.to_string());
    format!(
        "strategy {} exact {exact} estimate {} successes {} trials {}",
        r.strategy, r.estimated_probability, r.successes, r.trials
    )
}

fn push_lsss(doc: &mut Document, report: &LsssSecurityReport) {
    doc.push("order", report.order).push("seed", report.seed);
    for (i, d) in report.deals.iter().enumerate() {
        doc.push("deal", format!("{i} players {}", d.players));
        for (j, c) in d.critical_sets.iter().enumerate() {
            let curve: Vec<String> = c.leak_curve.iter().map(|k| k.to_string()).collect();
            doc.push(
                "critical-set",
                format!("{i} {j} size {} strength {} leak {}", c.size(), c.strength.as_str(), curve.join(" ")),
            );
        }
        for (j, a) in d.attacks.iter().enumerate() {
            let known: Vec<String> = a.known.iter().map(|p| p.to_string()).collect();
            let body = a.report.as_ref().map_or("budget-exceeded".to_string(), attack_value);
            doc.push("attack", format!("{i} {j} known {} {body}", known.join(",")));
        }
    }
    doc.push(
        "reference",
        format!("order {SECURE_ORDER} completions >={ORDER_11_COMPLETIONS_ESTIMATE} cited not-recomputed"),
    );
}

fn push_rsa(doc: &mut Document, report: &RsaRobustnessReport) {
    doc.push("seed", report.seed).push("tampers-per-cell", report.tampers_per_cell);
    for c in &report.cells {
        let p = &c.params;
        let head = format!("w {} t {} c {} bits {}", p.players, p.threshold, p.corrupted, p.modulus_bits);
        let body = match &c.outcome {
            CellOutcome::ParamViolation(_) => "param-violation".to_string(),
            CellOutcome::Failed(_) => "failed".to_string(),
            CellOutcome::Ran(r) => format!(
                "{} quorums {} quorum-independent {} tamper {}/{} replay {}/{} combine-refused {} share-bytes {}",
                if r.passed() { "pass" } else { "fail" },
                r.quorums_checked,
                r.quorum_independent,
                r.tamper_rejected,
                r.tamper_trials,
                r.replay_rejected,
                r.replay_trials,
                r.combine_refused,
                r.share_bytes
            ),
        };
        doc.push("cell", format!("{head} {body}"));
    }
    match report.tamper_rejection_rate() {
        Some(r) => doc.push("tamper-rejection-rate", r),
        None => doc.push("tamper-rejection-rate", "vacuous"),
    };
    doc.push("share-size-constant", report.share_size_constant());
    for w in &report.warnings {
        doc.push("warning", w);
    }
}

pub fn lsss_report_document(report: &LsssSecurityReport) -> Document {
    let mut doc = report_document("lsss-security", Origin::Seed(report.seed));
    push_lsss(&mut doc, report);
    doc
}

pub fn rsa_report_document(report: &RsaRobustnessReport) -> Document {
    let mut doc = report_document("rsa-robustness", Origin::Seed(report.seed));
    push_rsa(&mut doc, report);
    doc
}

pub fn comparison_document(report: &ComparisonReport, origin: Origin) -> Document {
    let mut doc = report_document("comparison", origin);
    for f in &report.flags {
        doc.push(
            "flag",
            format!("{} {} {}", f.id.as_str(), if f.raised { "raised" } else { "clear" }, f.metric),
        );
    }
    doc.push("section", "lsss");
    push_lsss(&mut doc, &report.lsss);
    doc.push("section", "rsa");
    push_rsa(&mut doc, &report.rsa);
    doc
}
