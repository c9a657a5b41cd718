//! Line-based chart and stems file formats.
//!
//! Chart file:
//!
//! ```text
//! # comment
//! smax 5
//! 0 0 1 Z eta:alpha1
//! 1 1 alpha1 2
//! ```
//!
//! Each class line is `s f name order [eta:target]`, where `order` is `Z`
//! for the 2-adic integers or a power of two. The optional `smax` line
//! declares the stem range; it defaults to the largest stem present.
//!
//! Stems file: an optional `provenance <text>` line, then `s order[,order...]`
//! lines, with `1` for the trivial group.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{validate_chart, ClassicalChart, ClassicalChartClass, StemsTable};
use crate::error::ChartError;
use crate::group::GroupDescriptor;

fn content(raw: &str) -> &str {
    raw.split('#').next().unwrap_or("").trim()
}

fn int(token: &str, line: usize) -> Result<i64, ChartError> {
    token.parse::<i64>().map_err(|_| ChartError::Parse {
        line,
        message: format!("`{token}` is not an integer"),
    })
}

/// Parses a chart without checking chart-level invariants.
pub fn parse_chart_unchecked(text: &str) -> Result<ClassicalChart, ChartError> {
    let mut chart = ClassicalChart::new(0);
    let mut declared = None;
    let mut max_seen = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "smax" {
            if tokens.len() != 2 || declared.is_some() {
                return Err(ChartError::Parse {
                    line: line_no,
                    message: "expected a single `smax N` line".into(),
                });
            }
            declared = Some(int(tokens[1], line_no)?);
            continue;
        }
        if !(4..=5).contains(&tokens.len()) {
            return Err(ChartError::Parse {
                line: line_no,
                message: format!("expected `s f name order [eta:target]`, got `{line}`"),
            });
        }
        let s = int(tokens[0], line_no)?;
        let f = int(tokens[1], line_no)?;
        let order = GroupDescriptor::parse_summand(tokens[3]).ok_or_else(|| ChartError::Parse {
            line: line_no,
            message: format!("order `{}` is neither `Z` nor a power of two", tokens[3]),
        })?;
        let mut class = ClassicalChartClass::new(tokens[2], s, f, order);
        if let Some(edge) = tokens.get(4) {
            let target = edge.strip_prefix("eta:").ok_or_else(|| ChartError::Parse {
                line: line_no,
                message: format!("expected `eta:target`, got `{edge}`"),
            })?;
            class = class.with_eta(target);
        }
        max_seen = max_seen.max(s);
        chart.push(class);
    }
    chart.set_s_max(declared.unwrap_or(max_seen));
    Ok(chart)
}

/// Parses and validates a chart.
pub fn parse_chart(text: &str) -> Result<ClassicalChart, ChartError> {
    let chart = parse_chart_unchecked(text)?;
    let violations = validate_chart(&chart);
    if violations.is_empty() {
        Ok(chart)
    } else {
        Err(ChartError::Invalid(violations))
    }
}

/// Canonical text: the `smax` line, then classes by `(s, f, name)`.
pub fn serialize_chart(chart: &ClassicalChart) -> String {
    let mut out = format!("smax {}\n", chart.s_max());
    for c in chart.classes() {
        let order = if c.order == 0 {
            "Z".to_string()
        } else {
            c.order.to_string()
        };
        let _ = write!(out, "{} {} {} {}", c.s, c.f, c.name, order);
        if let Some(t) = &c.eta_edge {
            let _ = write!(out, " eta:{t}");
        }
        out.push('\n');
    }
    out
}

pub fn parse_stems(text: &str) -> Result<StemsTable, ChartError> {
    let mut provenance = String::new();
    let mut groups = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = content(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("provenance") {
            provenance = rest.trim().to_string();
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ChartError::Parse {
                line: line_no,
                message: format!("expected `s order[,order...]`, got `{line}`"),
            });
        }
        let s = int(tokens[0], line_no)?;
        let group =
            GroupDescriptor::from_file_token(tokens[1]).ok_or_else(|| ChartError::Parse {
                line: line_no,
                message: format!("bad group `{}`", tokens[1]),
            })?;
        if groups.insert(s, group).is_some() {
            return Err(ChartError::Parse {
                line: line_no,
                message: format!("stem {s} listed twice"),
            });
        }
    }
    StemsTable::new(provenance, groups)
}

pub fn serialize_stems(table: &StemsTable) -> String {
    let mut out = String::new();
    if !table.provenance.is_empty() {
        let _ = writeln!(out, "provenance {}", table.provenance);
    }
    for (s, g) in table.groups() {
        let _ = writeln!(out, "{s} {}", g.to_file_token());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{SAMPLE_CHART, SAMPLE_STEMS};

    #[test]
    fn unit_only_chart() {
        let chart = parse_chart("0 0 1 Z\n").unwrap();
        assert_eq!(chart.entry(0, 0), &[ClassicalChartClass::new("1", 0, 0, 0)]);
        assert_eq!(chart.s_max(), 0);
    }

    #[test]
    fn alpha1_line() {
        let chart = parse_chart("0 0 1 Z eta:alpha1\n1 1 alpha1 2\n").unwrap();
        let a = chart.find("alpha1").unwrap();
        assert_eq!((a.s, a.f, a.order), (1, 1, 2));
    }

    #[test]
    fn filtration_zero_class_fails_validation() {
        let err = parse_chart("0 0 1 Z\n3 0 x 2\n").unwrap_err();
        match err {
            ChartError::Invalid(v) => assert!(v[0].contains("`x`")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_chart_unchecked("# header\n0 0 1 Z\n1 x alpha1 2\n").unwrap_err();
        assert!(matches!(err, ChartError::Parse { line: 3, .. }));
        let err = parse_chart_unchecked("0 0 1 3\n").unwrap_err();
        assert!(matches!(err, ChartError::Parse { line: 1, .. }));
        let err = parse_chart_unchecked("0 0 1 Z to:x\n").unwrap_err();
        assert!(matches!(err, ChartError::Parse { line: 1, .. }));
        let err = parse_stems("0 Z\n0 Z\n").unwrap_err();
        assert!(matches!(err, ChartError::Parse { line: 2, .. }));
    }

    #[test]
    fn canonical_files_round_trip() {
        let canonical = serialize_chart(&parse_chart(SAMPLE_CHART).unwrap());
        assert_eq!(
            serialize_chart(&parse_chart(&canonical).unwrap()),
            canonical
        );
        let canonical = serialize_stems(&parse_stems(SAMPLE_STEMS).unwrap());
        assert_eq!(
            serialize_stems(&parse_stems(&canonical).unwrap()),
            canonical
        );
    }

    #[test]
    fn serialization_canonicalizes() {
        let chart = parse_chart("# c\n1 1 alpha1 2\n0 0 1 Z eta:alpha1   # unit\n").unwrap();
        assert_eq!(
            serialize_chart(&chart),
            "smax 1\n0 0 1 Z eta:alpha1\n1 1 alpha1 2\n"
        );
    }
}
