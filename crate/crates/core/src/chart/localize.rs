//! η-localization of a classical chart along its `α1` edges.
//!
//! The colimit `E(s,f) → E(s+1,f+1) → ...` is followed class by class.
//! A chain that reaches the range `s < 5f - 10`, where localization is
//! known to be an isomorphism, survives. A chain that ends inside the chart
//! dies. Anything else (leaving the chart, or running out of steps) is left
//! unresolved rather than guessed.

use std::collections::BTreeMap;

use super::ClassicalChart;

/// Whether `(s, f)` lies where `E_2` already equals its η-localization.
pub fn in_localization_range(s: i64, f: i64) -> bool {
    s < 5 * f - 10
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fate {
    /// Reached `witness` inside the guaranteed range after `steps` edges.
    Survives {
        witness: String,
        steps: usize,
    },
    /// Multiplication by `α1` became zero after `steps` edges.
    Dies {
        steps: usize,
    },
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedClass {
    pub name: String,
    pub order: u64,
    pub fate: Fate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabilization {
    Stable,
    Unresolved,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedEntry {
    pub status: Stabilization,
    pub classes: Vec<LocalizedClass>,
}

impl LocalizedEntry {
    /// Classes with nonzero image in the colimit, one per distinct image.
    pub fn survivors(&self) -> Vec<&LocalizedClass> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for c in &self.classes {
            if let Fate::Survives { witness, .. } = &c.fate {
                if !seen.contains(&witness) {
                    seen.push(witness);
                    out.push(c);
                }
            }
        }
        out
    }
}

pub fn eta_localize_chart(
    chart: &ClassicalChart,
    max_steps: usize,
) -> BTreeMap<(i64, i64), LocalizedEntry> {
    let mut out = BTreeMap::new();
    for (&(s, f), classes) in chart.entries() {
        let classes: Vec<LocalizedClass> = classes
            .iter()
            .map(|c| LocalizedClass {
                name: c.name.clone(),
                order: c.order,
                fate: follow(chart, &c.name, max_steps),
            })
            .collect();
        let status = if classes.iter().any(|c| c.fate == Fate::Unresolved) {
            Stabilization::Unresolved
        } else {
            Stabilization::Stable
        };
        out.insert((s, f), LocalizedEntry { status, classes });
    }
    out
}

fn follow(chart: &ClassicalChart, start: &str, max_steps: usize) -> Fate {
    let mut current = match chart.find(start) {
        Some(c) => c,
        None => return Fate::Unresolved,
    };
    let mut steps = 0;
    loop {
        if in_localization_range(current.s, current.f) {
            return Fate::Survives {
                witness: current.name.clone(),
                steps,
            };
        }
        if steps == max_steps {
            return Fate::Unresolved;
        }
        match &current.eta_edge {
            Some(target) => match chart.find(target) {
                Some(next) => current = next,
                None => return Fate::Unresolved,
            },
            None if current.s + 1 > chart.s_max() => return Fate::Unresolved,
            None => return Fate::Dies { steps: steps + 1 },
        }
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{sample_chart, ClassicalChartClass};

    #[test]
    fn guaranteed_range_is_identity() {
        let loc = eta_localize_chart(&sample_chart(), 0);
        let e = &loc[&(3, 3)];
        assert_eq!(e.status, Stabilization::Stable);
        assert_eq!(
            e.classes[0].fate,
            Fate::Survives {
                witness: "alpha1^3".into(),
                steps: 0
            }
        );
    }

    #[test]
    fn isolated_class_dies_after_one_step() {
        let chart = ClassicalChart::from_classes([
            ClassicalChartClass::new("1", 0, 0, 0),
            ClassicalChartClass::new("x", 3, 1, 4),
            ClassicalChartClass::new("y", 6, 6, 2),
        ]);
        let loc = eta_localize_chart(&chart, 10);
        assert_eq!(loc[&(3, 1)].classes[0].fate, Fate::Dies { steps: 1 });
        assert_eq!(loc[&(3, 1)].status, Stabilization::Stable);
        assert!(loc[&(3, 1)].survivors().is_empty());
    }

    /// Colimit oracle: walk the sequence of groups along the edges and take
    /// the image in the last stage that the chart knows is stable.
    #[test]
    fn chain_into_stable_tower() {
        // x(1,1) -> y(2,2) -> z(3,3) -> u(4,4); (3,3) and beyond are in range.
        let chart = ClassicalChart::from_classes([
            ClassicalChartClass::new("1", 0, 0, 0),
            ClassicalChartClass::new("x", 1, 1, 2).with_eta("y"),
            ClassicalChartClass::new("y", 2, 2, 2).with_eta("z"),
            ClassicalChartClass::new("z", 3, 3, 2).with_eta("u"),
            ClassicalChartClass::new("u", 4, 4, 2),
        ]);
        let loc = eta_localize_chart(&chart, 10);
        let e = &loc[&(1, 1)];
        assert_eq!(e.status, Stabilization::Stable);
        assert_eq!(
            e.classes[0].fate,
            Fate::Survives {
                witness: "z".into(),
                steps: 2
            }
        );
        // Too few steps to get there.
        let short = eta_localize_chart(&chart, 1);
        assert_eq!(short[&(1, 1)].status, Stabilization::Unresolved);
    }

    #[test]
    fn leaving_the_range_is_unresolved() {
        let loc = eta_localize_chart(&sample_chart(), 10);
        assert_eq!(loc[&(5, 1)].status, Stabilization::Unresolved);
        assert_eq!(loc[&(3, 1)].classes[0].fate, Fate::Dies { steps: 1 });
        let unit = &loc[&(0, 0)];
        assert_eq!(unit.status, Stabilization::Stable);
        assert_eq!(unit.survivors().len(), 1);
    }

    #[test]
    fn merging_chains_count_once() {
        let chart = ClassicalChart::from_classes([
            ClassicalChartClass::new("1", 0, 0, 0),
            ClassicalChartClass::new("a", 2, 2, 2).with_eta("c"),
            ClassicalChartClass::new("b", 2, 2, 2).with_eta("c"),
            ClassicalChartClass::new("c", 3, 3, 2),
        ]);
        let loc = eta_localize_chart(&chart, 5);
        assert_eq!(loc[&(2, 2)].survivors().len(), 1);
    }
}
