//! Motivic lift of a classical chart: a class at `(s, f)` appears in every
//! weight `w ≤ (s + f) / 2`, as a τ-multiple of the class at the top weight.

use std::collections::BTreeMap;

use super::{ClassicalChart, ClassicalChartClass};
use crate::degree::Tridegree;
use crate::error::ChartError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MotivicChartClass {
    pub class: ClassicalChartClass,
    /// `(s + f) / 2`; the class is `τ^(w_top - w)` times the top class.
    pub w_top: i64,
}

impl MotivicChartClass {
    pub fn present_at(&self, w: i64) -> bool {
        w <= self.w_top
    }
}

/// One class placed in a single tridegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedClass {
    pub name: String,
    pub tau_power: i64,
    pub tower_top: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MotivicLift {
    classes: Vec<MotivicChartClass>,
}

impl MotivicLift {
    pub fn classes(&self) -> &[MotivicChartClass] {
        &self.classes
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn at(&self, t: Tridegree) -> Vec<LiftedClass> {
        self.classes
            .iter()
            .filter(|c| c.class.s == t.s && c.class.f == t.f && c.present_at(t.w))
            .map(|c| LiftedClass {
                name: c.class.name.clone(),
                tau_power: c.w_top - t.w,
                tower_top: t.w == c.w_top,
            })
            .collect()
    }

    /// Every nonempty tridegree with weight at least `w_min`.
    pub fn materialize(&self, w_min: i64) -> BTreeMap<Tridegree, Vec<LiftedClass>> {
        let mut out: BTreeMap<Tridegree, Vec<LiftedClass>> = BTreeMap::new();
        for c in &self.classes {
            for w in w_min..=c.w_top {
                out.entry(Tridegree::new(c.class.s, c.class.f, w))
                    .or_default()
                    .push(LiftedClass {
                        name: c.class.name.clone(),
                        tau_power: c.w_top - w,
                        tower_top: w == c.w_top,
                    });
            }
        }
        out
    }
}

/// Lifts every class; a class with `s + f` odd has no integral top weight
/// and is rejected.
pub fn lift_to_motivic(chart: &ClassicalChart) -> Result<MotivicLift, ChartError> {
    let classes = chart
        .classes()
        .map(|c| {
            if (c.s + c.f).rem_euclid(2) != 0 {
                return Err(ChartError::OddTotalDegree {
                    name: c.name.clone(),
                    s: c.s,
                    f: c.f,
                });
            }
            Ok(MotivicChartClass {
                class: c.clone(),
                w_top: (c.s + c.f) / 2,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MotivicLift { classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::sample_chart;

    #[test]
    fn alpha1_weights() {
        let lift = lift_to_motivic(&sample_chart()).unwrap();
        for w in [1, 0, -1, -7] {
            let at = lift.at(Tridegree::new(1, 1, w));
            assert_eq!(at.len(), 1);
            assert_eq!(at[0].name, "alpha1");
            assert_eq!(at[0].tower_top, w == 1);
        }
        assert!(lift.at(Tridegree::new(1, 1, 2)).is_empty());
    }

    #[test]
    fn unit_tower() {
        let lift = lift_to_motivic(&sample_chart()).unwrap();
        assert!(lift.at(Tridegree::new(0, 0, 1)).is_empty());
        let bottom = lift.at(Tridegree::new(0, 0, -4));
        assert_eq!(bottom[0].tau_power, 4);
    }

    #[test]
    fn empty_and_odd() {
        assert!(lift_to_motivic(&ClassicalChart::new(0)).unwrap().is_empty());
        let chart = ClassicalChart::from_classes([ClassicalChartClass::new("odd", 2, 1, 2)]);
        assert!(matches!(
            lift_to_motivic(&chart),
            Err(ChartError::OddTotalDegree { .. })
        ));
    }

    #[test]
    fn tau_multiplication_is_injective() {
        let lift = lift_to_motivic(&sample_chart()).unwrap();
        let m = lift.materialize(-6);
        for (t, classes) in &m {
            if t.w > -6 {
                let below = &m[&Tridegree::new(t.s, t.f, t.w - 1)];
                for c in classes {
                    assert!(below
                        .iter()
                        .any(|b| b.name == c.name && b.tau_power == c.tau_power + 1));
                }
            }
        }
    }
}
