//! Classical Adams–Novikov `E_2` chart data and classical stem tables.
//!
//! Both are external inputs. Nothing here computes classical values; the
//! module checks structure, reindexes, and derives the motivic lift, the
//! homotopy of `Cτ`, and η-localizations from whatever data is supplied.

mod format;
mod lift;
mod localize;

use std::collections::{BTreeMap, HashMap};

pub use format::{
    parse_chart, parse_chart_unchecked, parse_stems, serialize_chart, serialize_stems,
};
pub use lift::{lift_to_motivic, LiftedClass, MotivicChartClass, MotivicLift};
pub use localize::{
    eta_localize_chart, in_localization_range, Fate, LocalizedClass, LocalizedEntry, Stabilization,
};

use crate::error::ChartError;
use crate::group::GroupDescriptor;

/// Bundled sample chart: classical Adams–Novikov `E_2` at p = 2, low stems.
pub const SAMPLE_CHART: &str = include_str!("../../data/sample_chart.txt");
/// Bundled 2-primary classical stable stems.
pub const SAMPLE_STEMS: &str = include_str!("../../data/stems.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalChartClass {
    pub name: String,
    pub s: i64,
    pub f: i64,
    /// `0` for `Z2`, otherwise a power of two.
    pub order: u64,
    /// Class at `(s+1, f+1)` equal to this one times `α1`.
    pub eta_edge: Option<String>,
}

impl ClassicalChartClass {
    pub fn new(name: impl Into<String>, s: i64, f: i64, order: u64) -> Self {
        ClassicalChartClass {
            name: name.into(),
            s,
            f,
            order,
            eta_edge: None,
        }
    }

    pub fn with_eta(mut self, target: impl Into<String>) -> Self {
        self.eta_edge = Some(target.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ClassicalChart {
    s_max: i64,
    entries: BTreeMap<(i64, i64), Vec<ClassicalChartClass>>,
}

impl ClassicalChart {
    pub fn new(s_max: i64) -> Self {
        ClassicalChart {
            s_max,
            entries: BTreeMap::new(),
        }
    }

    /// Builds a chart with `s_max` taken from the classes.
    pub fn from_classes(classes: impl IntoIterator<Item = ClassicalChartClass>) -> Self {
        let mut chart = ClassicalChart::new(0);
        for c in classes {
            chart.s_max = chart.s_max.max(c.s);
            chart.push(c);
        }
        chart
    }

    pub fn push(&mut self, class: ClassicalChartClass) {
        let entry = self.entries.entry((class.s, class.f)).or_default();
        entry.push(class);
        entry.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn s_max(&self) -> i64 {
        self.s_max
    }

    pub fn set_s_max(&mut self, s_max: i64) {
        self.s_max = s_max;
    }

    pub fn entries(&self) -> &BTreeMap<(i64, i64), Vec<ClassicalChartClass>> {
        &self.entries
    }

    pub fn entry(&self, s: i64, f: i64) -> &[ClassicalChartClass] {
        self.entries.get(&(s, f)).map_or(&[], Vec::as_slice)
    }

    pub fn classes(&self) -> impl Iterator<Item = &ClassicalChartClass> {
        self.entries.values().flatten()
    }

    pub fn find(&self, name: &str) -> Option<&ClassicalChartClass> {
        self.classes().find(|c| c.name == name)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Additive group of the entry at `(s, f)`.
    pub fn group(&self, s: i64, f: i64) -> GroupDescriptor {
        GroupDescriptor::new(self.entry(s, f).iter().map(|c| c.order).collect()).unwrap_or_default()
    }
}

/// Lists every structural problem with `chart`; empty means valid.
pub fn validate_chart(chart: &ClassicalChart) -> Vec<String> {
    let mut violations = Vec::new();
    let mut by_name: HashMap<&str, &ClassicalChartClass> = HashMap::new();
    for c in chart.classes() {
        if by_name.insert(c.name.as_str(), c).is_some() {
            violations.push(format!("class name `{}` is used more than once", c.name));
        }
    }

    let units: Vec<_> = chart.entry(0, 0).iter().filter(|c| c.order == 0).collect();
    if units.len() != 1 || chart.entry(0, 0).len() != 1 {
        violations.push(format!(
            "(0,0) must hold exactly one Z2 class, found {} class(es)",
            chart.entry(0, 0).len()
        ));
    }

    for c in chart.classes() {
        if c.s < 0 || c.f < 0 {
            violations.push(format!(
                "class `{}` at ({},{}) has a negative index",
                c.name, c.s, c.f
            ));
        }
        if c.f == 0 && c.s != 0 {
            violations.push(format!(
                "class `{}` at ({},0): filtration 0 is concentrated at (0,0)",
                c.name, c.s
            ));
        }
        if c.s > chart.s_max {
            violations.push(format!(
                "class `{}` at stem {} exceeds the declared range {}",
                c.name, c.s, chart.s_max
            ));
        }
        if c.order != 0 && (c.order < 2 || !c.order.is_power_of_two()) {
            violations.push(format!(
                "class `{}` has order {}, not a power of two",
                c.name, c.order
            ));
        }
        if let Some(target) = &c.eta_edge {
            match by_name.get(target.as_str()) {
                None => violations.push(format!(
                    "class `{}` has an eta edge to unknown class `{target}`",
                    c.name
                )),
                Some(t) if (t.s, t.f) != (c.s + 1, c.f + 1) => violations.push(format!(
                    "class `{}` at ({},{}) has an eta edge to `{target}` at ({},{}), expected ({},{})",
                    c.name,
                    c.s,
                    c.f,
                    t.s,
                    t.f,
                    c.s + 1,
                    c.f + 1
                )),
                Some(_) => {}
            }
        }
    }
    violations
}

/// `π_{s,w}(Cτ)`, read off the classical chart at `(s, 2w - s)`.
pub fn ctau_homotopy(
    chart: &ClassicalChart,
    s: i64,
    w: i64,
) -> Result<GroupDescriptor, ChartError> {
    if s < 0 || s > chart.s_max {
        return Err(ChartError::OutOfRange {
            s,
            s_max: chart.s_max,
        });
    }
    let f = 2 * w - s;
    if f < 0 {
        return Ok(GroupDescriptor::trivial());
    }
    Ok(chart.group(s, f))
}

/// Classical 2-primary stable stems, one group per stem.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StemsTable {
    pub provenance: String,
    groups: BTreeMap<i64, GroupDescriptor>,
}

impl StemsTable {
    pub fn new(
        provenance: impl Into<String>,
        groups: BTreeMap<i64, GroupDescriptor>,
    ) -> Result<Self, ChartError> {
        let table = StemsTable {
            provenance: provenance.into(),
            groups,
        };
        let violations = table.violations();
        if violations.is_empty() {
            Ok(table)
        } else {
            Err(ChartError::Invalid(violations))
        }
    }

    fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.groups.get(&0) != Some(&GroupDescriptor::z2()) {
            v.push("stem 0 must be exactly Z2".to_string());
        }
        if let Some((&s, _)) = self.groups.iter().next() {
            if s < 0 {
                v.push(format!("negative stem {s}"));
            }
        }
        v
    }

    pub fn get(&self, s: i64) -> Option<&GroupDescriptor> {
        self.groups.get(&s)
    }

    pub fn groups(&self) -> &BTreeMap<i64, GroupDescriptor> {
        &self.groups
    }

    pub fn s_max(&self) -> i64 {
        self.groups.keys().next_back().copied().unwrap_or(0)
    }
}

pub fn sample_chart() -> ClassicalChart {
    parse_chart(SAMPLE_CHART).expect("bundled chart is valid")
}

pub fn sample_stems() -> StemsTable {
    parse_stems(SAMPLE_STEMS).expect("bundled stems table is valid")
}
