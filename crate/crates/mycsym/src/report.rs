//! Assembled output of a verification run, rendered as JSON or a plain table.

use serde::Serialize;

use crate::registry::TheoremVerdict;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub failures: usize,
}

/// Everything a verification run produced, in deterministic order.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub theorems: Vec<String>,
    pub n_max: usize,
    pub t_values: Vec<usize>,
    pub corpus_size: usize,
    pub fault: i64,
    pub warnings: Vec<String>,
    pub verdicts: Vec<TheoremVerdict>,
    pub summary: Summary,
}

impl VerifyReport {
    /// 0 when every verdict passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.failures == 0 {
            0
        } else {
            1
        }
    }
}

pub fn render_json(report: &VerifyReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serialization is infallible");
    s.push('\n');
    s
}

/// Plain-text table: one row per verdict, warnings after the table, and a
/// final `N instances, M failures` line.
pub fn render_table(report: &VerifyReport) -> String {
    const HEADERS: [&str; 7] =
        ["theorem", "graph", "t", "claim", "expected", "computed", "result"];
    let rows: Vec<[String; 7]> = report
        .verdicts
        .iter()
        .map(|v| {
            [
                v.theorem_id.clone(),
                v.graph6.clone(),
                v.t.map_or_else(|| "-".to_string(), |t| t.to_string()),
                v.claim.clone(),
                v.expected.to_string(),
                v.computed.to_string(),
                if v.pass { "pass".to_string() } else { "FAIL".to_string() },
            ]
        })
        .collect();
    let mut widths: [usize; 7] = HEADERS.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }
    let fmt_row = |cells: [&str; 7]| -> String {
        let mut line = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths.iter()).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if i + 1 < cells.len() {
                line.extend(std::iter::repeat(' ').take(w - cell.len()));
            }
        }
        line
    };
    let mut out = String::new();
    out.push_str(&fmt_row(HEADERS));
    out.push('\n');
    let rule_len = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
    out.extend(std::iter::repeat('-').take(rule_len));
    out.push('\n');
    for row in &rows {
        let cells: [&str; 7] = std::array::from_fn(|i| row[i].as_str());
        out.push_str(&fmt_row(cells));
        out.push('\n');
    }
    for w in &report.warnings {
        out.push_str("warning: ");
        out.push_str(w);
        out.push('\n');
    }
    out.push_str(&format!(
        "{} instances, {} failures\n",
        report.summary.instances, report.summary.failures
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry::Expect;

    fn tiny_report() -> VerifyReport {
        VerifyReport {
            schema_version: 1,
            theorems: vec!["T-det-main".to_string()],
            n_max: 3,
            t_values: vec![1],
            corpus_size: 1,
            fault: 0,
            warnings: vec!["skipped: something".to_string()],
            verdicts: vec![
                TheoremVerdict {
                    theorem_id: "T-det-main".to_string(),
                    graph6: "A_".to_string(),
                    t: Some(1),
                    claim: "det(mu_t(K2)) == 2".to_string(),
                    expected: Expect::Eq { value: 2 },
                    computed: 2,
                    pass: true,
                    witness: Some("{0, 3}".to_string()),
                    note: None,
                },
                TheoremVerdict {
                    theorem_id: "C-twin-bounds".to_string(),
                    graph6: "A_".to_string(),
                    t: None,
                    claim: "|T| <= det(G) <= |T| + det(G~)".to_string(),
                    expected: Expect::Between { lo: 0, hi: 1 },
                    computed: 2,
                    pass: false,
                    witness: None,
                    note: None,
                },
            ],
            summary: Summary { instances: 2, failures: 1 },
        }
    }

    #[test]
    fn json_shape() {
        let rendered = render_json(&tiny_report());
        assert!(rendered.ends_with('\n'));
        let value: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        assert_eq!(value["schema_version"], 1);
        assert_eq!(value["summary"]["failures"], 1);
        assert_eq!(value["verdicts"][0]["expected"]["kind"], "eq");
        assert_eq!(value["verdicts"][0]["expected"]["value"], 2);
        assert_eq!(value["verdicts"][0]["witness"], "{0, 3}");
        // Absent optionals are omitted, not null.
        assert!(value["verdicts"][0].get("note").is_none());
        assert!(value["verdicts"][1].get("t").is_none());
        assert_eq!(value["verdicts"][1]["expected"]["kind"], "between");
    }

    #[test]
    fn table_shape() {
        let rendered = render_table(&tiny_report());
        let lines: Vec<&str> = rendered.lines().collect();
        assert!(lines[0].starts_with("theorem"));
        assert!(lines[0].contains("expected"));
        assert!(lines[1].chars().all(|c| c == '-'));
        assert!(lines[2].contains("pass"));
        assert!(lines[3].contains("FAIL"));
        assert!(lines[3].contains(" - "), "missing t placeholder: {}", lines[3]);
        assert!(lines[4].starts_with("warning: "));
        assert_eq!(*lines.last().unwrap(), "2 instances, 1 failures");
    }

    #[test]
    fn exit_codes() {
        let mut report = tiny_report();
        assert_eq!(report.exit_code(), 1);
        report.summary.failures = 0;
        assert_eq!(report.exit_code(), 0);
    }
}
