//! The four regions of the `(s, w)`-plane and the groups they determine.
//!
//! * `Zero`: `s < 0` or `w > s`.
//! * `TauLocal`: `s > 0` and `w ≤ s/2 + 1`, or `s = 0` and `w ≤ 0`.
//!   Multiplication by τ is an isomorphism here and `π_{s,w} ≅ π_s`.
//! * `EtaLocal`: `w > 3s/5 + 1` and `w ≤ s`. Multiplication by η is an
//!   isomorphism and the group is read off `F_2[η^±1, σ, μ9]/σ²`.
//! * `NotUnderstood`: everything else.
//!
//! Boundary comparisons are done by clearing denominators in `i128`, which
//! is exact.

use std::fmt;

use num_rational::Ratio;

use crate::chart::StemsTable;
use crate::group::GroupDescriptor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegionLabel {
    Zero,
    TauLocal,
    EtaLocal,
    NotUnderstood,
}

impl RegionLabel {
    pub const ALL: [RegionLabel; 4] = [
        RegionLabel::Zero,
        RegionLabel::TauLocal,
        RegionLabel::EtaLocal,
        RegionLabel::NotUnderstood,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegionLabel::Zero => "Zero",
            RegionLabel::TauLocal => "TauLocal",
            RegionLabel::EtaLocal => "EtaLocal",
            RegionLabel::NotUnderstood => "NotUnderstood",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `w ≤ s/2 + 1`
fn below_tau_line(s: i128, w: i128) -> bool {
    2 * w <= s + 2
}

/// `w > 3s/5 + 1`
fn above_eta_line(s: i128, w: i128) -> bool {
    5 * w > 3 * s + 5
}

pub fn classify(s: i64, w: i64) -> RegionLabel {
    let (s, w) = (i128::from(s), i128::from(w));
    if s < 0 || w > s {
        RegionLabel::Zero
    } else if s == 0 {
        // w ≤ 0 here, since w > s was handled above.
        RegionLabel::TauLocal
    } else if below_tau_line(s, w) {
        RegionLabel::TauLocal
    } else if above_eta_line(s, w) {
        RegionLabel::EtaLocal
    } else {
        RegionLabel::NotUnderstood
    }
}

/// `w ≥ 3s/4 + 1`: the weaker η-locality criterion coming from the Adams
/// vanishing line.
pub fn adams_weak_bound(s: i64, w: i64) -> bool {
    4 * i128::from(w) >= 3 * i128::from(s) + 4
}

/// A monomial `η^eta · σ^sigma · μ9^mu9` of `F_2[η^±1, σ, μ9]/σ²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EtaLocalMonomial {
    pub eta: i64,
    pub sigma: i64,
    pub mu9: i64,
}

impl EtaLocalMonomial {
    pub const ETA: (i64, i64) = (1, 1);
    pub const SIGMA: (i64, i64) = (7, 4);
    pub const MU9: (i64, i64) = (9, 5);

    pub fn bidegree(&self) -> (i64, i64) {
        (
            self.eta * Self::ETA.0 + self.sigma * Self::SIGMA.0 + self.mu9 * Self::MU9.0,
            self.eta * Self::ETA.1 + self.sigma * Self::SIGMA.1 + self.mu9 * Self::MU9.1,
        )
    }
}

impl fmt::Display for EtaLocalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("eta", self.eta), ("sigma", self.sigma), ("mu9", self.mu9)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// The unique monomial of `π_{*,*}[η⁻¹]` in bidegree `(s, w)`, if any.
///
/// Solving `a + 7ε + 9b = s`, `a + 4ε + 5b = w` gives `s - w = 3ε + 4b`,
/// so `ε` is fixed by `s - w mod 4` (which must be 0 or 3) and `b ≥ 0`
/// then determines `a`.
pub fn eta_local_monomial(s: i64, w: i64) -> Option<EtaLocalMonomial> {
    let d = s - w;
    let sigma = match d.rem_euclid(4) {
        0 => 0,
        3 => 1,
        _ => return None,
    };
    let mu9 = (d - 3 * sigma) / 4;
    if mu9 < 0 {
        return None;
    }
    Some(EtaLocalMonomial {
        eta: s - 7 * sigma - 9 * mu9,
        sigma,
        mu9,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupValue {
    Known(GroupDescriptor, String),
    /// τ-local, but the stems table has no entry for this stem.
    ReducibleToClassical(i64),
    Unknown,
}

impl GroupValue {
    fn trivial() -> Self {
        GroupValue::Known(GroupDescriptor::trivial(), "-".to_string())
    }

    pub fn group_string(&self) -> String {
        match self {
            GroupValue::Known(g, _) => g.to_string(),
            GroupValue::ReducibleToClassical(s) => format!("pi_{s}"),
            GroupValue::Unknown => "?".to_string(),
        }
    }

    pub fn generator_string(&self) -> &str {
        match self {
            GroupValue::Known(_, gen) => gen,
            _ => "-",
        }
    }

    pub fn known(&self) -> Option<&GroupDescriptor> {
        match self {
            GroupValue::Known(g, _) => Some(g),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.known().is_some_and(GroupDescriptor::is_trivial)
    }
}

/// The η-localized group `π_{s,w}[η⁻¹]`: `Z/2` on the monomial found by
/// [`eta_local_monomial`], otherwise trivial.
pub fn eta_local_group(s: i64, w: i64) -> GroupValue {
    match eta_local_monomial(s, w) {
        Some(m) => GroupValue::Known(GroupDescriptor::cyclic(2), m.to_string()),
        None => GroupValue::trivial(),
    }
}

pub fn resolve_group(s: i64, w: i64, stems: Option<&StemsTable>) -> GroupValue {
    match classify(s, w) {
        RegionLabel::Zero => GroupValue::trivial(),
        RegionLabel::TauLocal if s == 0 => {
            let generator = match -w {
                0 => "1".to_string(),
                1 => "tau".to_string(),
                k => format!("tau^{k}"),
            };
            GroupValue::Known(GroupDescriptor::z2(), generator)
        }
        RegionLabel::TauLocal => match stems.and_then(|t| t.get(s)) {
            Some(g) if g.is_trivial() => GroupValue::trivial(),
            Some(g) => GroupValue::Known(g.clone(), format!("pi_{s}")),
            None => GroupValue::ReducibleToClassical(s),
        },
        RegionLabel::EtaLocal => eta_local_group(s, w),
        RegionLabel::NotUnderstood => GroupValue::Unknown,
    }
}

/// A region boundary `w = slope·s + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryLine {
    pub name: &'static str,
    pub slope: Ratio<i64>,
    pub intercept: Ratio<i64>,
}

impl BoundaryLine {
    pub fn at(&self, s: Ratio<i64>) -> Ratio<i64> {
        self.slope * s + self.intercept
    }
}

/// The three sloped boundaries: `w = s`, `w = 3s/5 + 1`, `w = s/2 + 1`.
pub fn boundary_lines() -> [BoundaryLine; 3] {
    [
        BoundaryLine {
            name: "w = s",
            slope: Ratio::from_integer(1),
            intercept: Ratio::from_integer(0),
        },
        BoundaryLine {
            name: "w = 3s/5 + 1",
            slope: Ratio::new(3, 5),
            intercept: Ratio::from_integer(1),
        },
        BoundaryLine {
            name: "w = s/2 + 1",
            slope: Ratio::new(1, 2),
            intercept: Ratio::from_integer(1),
        },
    ]
}
