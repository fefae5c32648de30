//! Text, CSV and JSON renderings. Every output ends with a newline.

use std::fmt::Write;

use hgc_core::{CauchyTable, ExactRational, InversionRoundtrip, Method, Status, Suite, VerificationReport};
use serde::Serialize;

/// Table as emitted by `compute`. Keys are in sorted order so the document
/// survives a round trip through any JSON map type unchanged.
#[derive(Debug, Serialize)]
pub struct TableDocument {
    #[serde(rename = "N")]
    pub big_n: u32,
    pub method: Method,
    pub normalized: bool,
    pub r: u32,
    pub values: Vec<ExactRational>,
}

fn values(table: &CauchyTable, normalized: bool) -> Vec<ExactRational> {
    if normalized {
        table.normalized()
    } else {
        table.values.clone()
    }
}

pub fn table_json(table: &CauchyTable, normalized: bool) -> String {
    let doc = TableDocument {
        big_n: table.big_n,
        method: table.method,
        normalized,
        r: table.r,
        values: values(table, normalized),
    };
    let mut out = serde_json::to_string(&doc).expect("table serializes");
    out.push('\n');
    out
}

pub fn table_csv(table: &CauchyTable, normalized: bool) -> String {
    let mut out = String::from("index,value\n");
    for (n, v) in values(table, normalized).iter().enumerate() {
        writeln!(out, "{n},{v}").unwrap();
    }
    out
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    suite: Suite,
    pass: usize,
    fail: usize,
    #[serde(rename = "erratum-noted")]
    erratum_noted: usize,
    records: &'a [hgc_core::VerificationRecord],
}

pub fn report_json(suite: Suite, report: &VerificationReport) -> String {
    let doc = ReportDocument {
        suite,
        pass: report.count(Status::Pass),
        fail: report.count(Status::Fail),
        erratum_noted: report.count(Status::ErratumNoted),
        records: &report.records,
    };
    let mut out = serde_json::to_string(&doc).expect("report serializes");
    out.push('\n');
    out
}

/// One line per identity that passed everywhere, with its point count;
/// full lines for every fail and erratum record; then a summary.
pub fn report_text(suite: Suite, report: &VerificationReport) -> String {
    let mut identities: Vec<(&str, usize, usize)> = Vec::new();
    for record in &report.records {
        let idx = match identities.iter().position(|(id, _, _)| *id == record.identity) {
            Some(i) => i,
            None => {
                identities.push((&record.identity, 0, 0));
                identities.len() - 1
            }
        };
        match record.status {
            Status::Pass => identities[idx].1 += 1,
            _ => identities[idx].2 += 1,
        }
    }
    let mut out = String::new();
    for (identity, passes, others) in &identities {
        if *others == 0 {
            writeln!(out, "pass           {identity} ({passes} points)").unwrap();
        }
    }
    for record in report.records.iter().filter(|r| r.status != Status::Pass) {
        let detail = record
            .detail
            .as_ref()
            .map(|d| match record.status {
                Status::ErratumNoted => format!(" printed {} actual {}", d.expected, d.actual),
                _ => format!(" expected {} actual {}", d.expected, d.actual),
            })
            .unwrap_or_default();
        writeln!(
            out,
            "{:<14} {} [{}]{}",
            record.status.as_str(),
            record.identity,
            record.point,
            detail
        )
        .unwrap();
    }
    writeln!(
        out,
        "suite {suite}: {} pass, {} fail, {} erratum-noted",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::ErratumNoted)
    )
    .unwrap();
    out
}

pub fn inversion_text(rt: &InversionRoundtrip) -> String {
    let header = ["n", "R(n)", "alpha_n", "recovered", "inverse_band"];
    let mut rows: Vec<[String; 5]> = Vec::with_capacity(rt.n_max());
    for n in 1..=rt.n_max() {
        rows.push([
            n.to_string(),
            rt.rule[n - 1].to_string(),
            rt.forward[n - 1].to_string(),
            rt.recovered[n - 1].to_string(),
            rt.inverse_bands[n - 1].to_string(),
        ]);
    }
    let widths: Vec<usize> = (0..5)
        .map(|c| {
            rows.iter()
                .map(|r| r[c].len())
                .chain([header[c].len()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    let mut line = |cells: [&str; 5]| {
        let joined: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(s, w)| format!("{s:>w$}"))
            .collect();
        writeln!(out, "{}", joined.join("  ").trim_end()).unwrap();
    };
    line(header);
    for row in &rows {
        line([&row[0], &row[1], &row[2], &row[3], &row[4]]);
    }
    let status = match rt.rule.iter().zip(&rt.recovered).position(|(a, b)| a != b) {
        None => "round trip: ok".to_string(),
        Some(i) => format!("round trip: FAILED at n={}", i + 1),
    };
    writeln!(out, "{status}").unwrap();
    out
}
