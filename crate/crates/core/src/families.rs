//! Named element families, periodicity bidegrees, and the motivic May `E_1`
//! generator census.
//!
//! Families are stored data. Their nontriviality comes from outside this
//! crate; what is checked here is the arithmetic of where they sit.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::chart::StemsTable;
use crate::degree::{Bidegree, Tridegree};
use crate::error::FamilyError;
use crate::regions::{classify, resolve_group, RegionLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Annihilator {
    Tau,
    Eta,
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub name: &'static str,
    pub base: Tridegree,
    pub period: Tridegree,
    pub annihilated_by: Annihilator,
    pub note: &'static str,
}

impl FamilySpec {
    /// `base + k·period`
    pub fn member(&self, k: i64) -> Tridegree {
        self.base + k * self.period
    }

    pub fn is_tau_tower(&self) -> bool {
        self.period == Tridegree::new(0, 0, -1)
    }
}

/// A single marked bidegree with no family structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annotation {
    pub bidegree: Bidegree,
    pub note: &'static str,
}

pub fn builtin_families() -> Vec<FamilySpec> {
    vec![
        FamilySpec {
            name: "Pk_h1_4",
            base: Tridegree::new(4, 4, 4),
            period: Tridegree::new(8, 4, 4),
            annihilated_by: Annihilator::Tau,
            note: "P^k h1^4 in the motivic Adams spectral sequence; detects tau-torsion classes",
        },
        FamilySpec {
            name: "w1_family",
            base: Tridegree::new(9, 3, 6),
            period: Tridegree::new(20, 4, 12),
            annihilated_by: Annihilator::Eta,
            note: "h2^3 g^k; nontrivial permanent cycles by external work, w1-periodic",
        },
        FamilySpec {
            name: "Pk_h1",
            base: Tridegree::new(1, 1, 1),
            period: Tridegree::new(8, 4, 4),
            annihilated_by: Annihilator::None,
            note: "P^k h1; eta-local classes below the eta-local boundary",
        },
        FamilySpec {
            name: "eta_powers",
            base: Tridegree::new(1, 1, 1),
            period: Tridegree::new(1, 1, 1),
            annihilated_by: Annihilator::None,
            note: "eta^(k+1); nonzero on the line w = s",
        },
        FamilySpec {
            name: "tau_powers",
            base: Tridegree::new(0, 0, -1),
            period: Tridegree::new(0, 0, -1),
            annihilated_by: Annihilator::None,
            note: "tau^(k+1); nonzero on the line s = 0",
        },
    ]
}

/// The exotic non-nilpotent element; it and its powers lie in the region
/// that is not understood.
pub fn exotic_annotation() -> Annotation {
    Annotation {
        bidegree: Bidegree::new(32, 18),
        note: "exotic non-nilpotent element",
    }
}

pub fn family(name: &str) -> Result<FamilySpec, FamilyError> {
    builtin_families()
        .into_iter()
        .find(|f| f.name == name)
        .ok_or_else(|| FamilyError::Unknown(name.to_string()))
}

/// `(slope, intercept)` of the `(s, w)` line through every family member.
pub fn family_line(name: &str) -> Result<(Ratio<i64>, Ratio<i64>), FamilyError> {
    let fam = family(name)?;
    line_of(&fam)
}

fn line_of(fam: &FamilySpec) -> Result<(Ratio<i64>, Ratio<i64>), FamilyError> {
    if fam.period.s == 0 {
        return Err(FamilyError::Vertical(fam.name.to_string()));
    }
    let slope = Ratio::new(fam.period.w, fam.period.s);
    let intercept = Ratio::from_integer(fam.base.w) - slope * fam.base.s;
    Ok((slope, intercept))
}

/// Checks that members `0..=kmax` lie exactly on [`family_line`].
pub fn verify_family_line(fam: &FamilySpec, kmax: i64) -> Result<bool, FamilyError> {
    let (slope, intercept) = line_of(fam)?;
    Ok((0..=kmax).all(|k| {
        let t = fam.member(k);
        Ratio::from_integer(t.w) == slope * t.s + intercept
    }))
}

/// `v_n` self-maps of period `k`: bidegree `k·(2^(n+1) - 2, 2^n - 1)`.
pub fn vn_bidegree(n: u32, k: i64) -> Result<Bidegree, FamilyError> {
    if n == 0 {
        return Err(FamilyError::DegenerateDirection);
    }
    let overflow = FamilyError::Overflow { n, k };
    if n >= 62 {
        return Err(overflow);
    }
    let w = (1i64 << n) - 1;
    scale(2 * w, w, k).ok_or(overflow)
}

/// `w_n` self-maps of period `k`: bidegree `k·(2^(n+2) - 3, 2^(n+1) - 1)`.
pub fn wn_bidegree(n: u32, k: i64) -> Result<Bidegree, FamilyError> {
    let overflow = FamilyError::Overflow { n, k };
    if n + 2 >= 63 {
        return Err(overflow);
    }
    let s = (1i64 << (n + 2)) - 3;
    let w = (1i64 << (n + 1)) - 1;
    scale(s, w, k).ok_or(overflow)
}

fn scale(s: i64, w: i64, k: i64) -> Option<Bidegree> {
    Some(Bidegree::new(s.checked_mul(k)?, w.checked_mul(k)?))
}

/// Slope `(2^(n+1) - 1) / (2^(n+2) - 3)` of `w_n`-periodic families.
pub fn wn_slope(n: u32) -> Result<Ratio<i64>, FamilyError> {
    let b = wn_bidegree(n, 1)?;
    Ok(Ratio::new(b.w, b.s))
}

/// Conjectural line of slope 7/13 above which every element would be `w_0`
/// or `w_1` periodic. Exposed as data only; nothing classifies by it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpeculativeLine {
    pub slope: Ratio<i64>,
    pub speculative: bool,
}

pub fn speculative_w2_line() -> SpeculativeLine {
    SpeculativeLine {
        slope: Ratio::new(7, 13),
        speculative: true,
    }
}

/// Generator `h_{ij}` of the motivic May `E_1` page.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MayGenerator {
    pub i: u32,
    pub j: u32,
    pub stem: i64,
    pub weight: i64,
}

impl MayGenerator {
    /// `None` when the stem does not fit in an `i64`.
    pub fn new(i: u32, j: u32) -> Option<Self> {
        assert!(i >= 1, "h_ij needs i >= 1");
        let odd = 1i64.checked_shl(i).filter(|_| i < 62)? - 1;
        let (stem, weight) = if j == 0 {
            (odd - 1, (1i64 << (i - 1)) - 1)
        } else {
            if j >= 62 || i + j >= 62 {
                return None;
            }
            ((odd << j) - 1, odd << (j - 1))
        };
        Some(MayGenerator { i, j, stem, weight })
    }
}

/// Every `h_{ij}` with stem at most `max_stem`, ordered by `(i, j)`.
pub fn may_e1_generators(max_stem: i64) -> Vec<MayGenerator> {
    let mut out = Vec::new();
    if max_stem < 0 {
        return out;
    }
    for i in 1.. {
        let mut any = false;
        for j in 0.. {
            match MayGenerator::new(i, j) {
                Some(g) if g.stem <= max_stem => {
                    any = true;
                    out.push(g);
                }
                // Stems grow with j for j ≥ 1; h_{i0} and h_{i1} bound the row.
                _ if j == 0 => continue,
                _ => break,
            }
        }
        if !any {
            break;
        }
    }
    out
}

fn describe_line(slope: Ratio<i64>, intercept: Ratio<i64>) -> String {
    let fmt_ratio = |r: Ratio<i64>| {
        if r.is_integer() {
            r.to_integer().to_string()
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    };
    let slope_part = if slope == Ratio::from_integer(1) {
        "s".to_string()
    } else if slope.is_integer() {
        format!("{}s", slope.to_integer())
    } else if *slope.numer() == 1 {
        format!("s/{}", slope.denom())
    } else {
        format!("{}s/{}", slope.numer(), slope.denom())
    };
    match intercept {
        i if i == Ratio::from_integer(0) => format!("w = {slope_part}"),
        i if i < Ratio::from_integer(0) => format!("w = {slope_part} - {}", fmt_ratio(-i)),
        i => format!("w = {slope_part} + {}", fmt_ratio(i)),
    }
}

/// One line per family: its line, what it witnesses, and whether members
/// `0..=kmax` check out against the stored line and the classifier.
pub fn sharpness_report(stems: Option<&StemsTable>, kmax: i64) -> String {
    let mut out = String::new();
    for fam in builtin_families() {
        let (kind, witness) = match fam.name {
            "Pk_h1_4" => ("tau-torsion", "witnesses tau-local slope sharpness"),
            "w1_family" => ("eta-torsion", "witnesses eta-local lower-slope sharpness"),
            "Pk_h1" => (
                "eta-local",
                "eta-local classes outside the eta-local region",
            ),
            "eta_powers" => ("eta-local", "witnesses eta-local upper boundary"),
            _ => ("tau-tower", "witnesses the s = 0 vanishing boundary"),
        };
        let line = match line_of(&fam) {
            Ok((m, b)) => describe_line(m, b),
            Err(_) => "s = 0".to_string(),
        };
        let on_line = verify_family_line(&fam, kmax)
            .unwrap_or_else(|_| (0..=kmax).all(|k| fam.member(k).s == 0));
        let regions: Vec<RegionLabel> = (0..=kmax.min(3))
            .map(|k| {
                let b = fam.member(k).bidegree();
                classify(b.s, b.w)
            })
            .collect();
        let _ = writeln!(
            out,
            "family={} kind={} line=\"{}\" on_line={} kmax={} first_regions={} note=\"{}\"",
            fam.name,
            kind,
            line,
            on_line,
            kmax,
            regions
                .iter()
                .map(|r| r.as_str())
                .collect::<Vec<_>>()
                .join(","),
            witness
        );
    }
    let ex = exotic_annotation();
    let _ = writeln!(
        out,
        "annotation=({},{}) region={} note=\"{}\"",
        ex.bidegree.s,
        ex.bidegree.w,
        classify(ex.bidegree.s, ex.bidegree.w),
        ex.note
    );
    if let Some(stems) = stems {
        // τ-local points on the s-axis carry the classical groups verbatim.
        let covered: Vec<String> = stems
            .groups()
            .keys()
            .map(|&s| format!("{s}:{}", resolve_group(s, 0, Some(stems)).group_string()))
            .collect();
        let _ = writeln!(
            out,
            "stems provenance=\"{}\" weight0={}",
            stems.provenance,
            covered.join(" ")
        );
    }
    out
}
