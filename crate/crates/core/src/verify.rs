//! Self-checks run by `motivic verify`.
//!
//! Each suite returns named checks with a pass flag and a one-line detail.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;

use crate::algebra::Window;
use crate::chart::{
    ctau_homotopy, eta_localize_chart, in_localization_range, parse_chart, parse_stems,
    sample_chart, sample_stems, serialize_chart, serialize_stems, ClassicalChart, Stabilization,
    StemsTable,
};
use crate::degree::Tridegree;
use crate::dga::{localized_motivic_anss, run_to_einfty, Polynomial};
use crate::error::DifferentialError;
use crate::families::{
    family, may_e1_generators, speculative_w2_line, verify_family_line, wn_slope,
};
use crate::group::GroupDescriptor;
use crate::regions::{
    adams_weak_bound, classify, eta_local_group, resolve_group, GroupValue, RegionLabel,
};
use crate::render::{groups_tsv, region_chart_svg, BidegreeWindow, ChartStyle, StemsResolver};

/// Window used for the `E_∞` check unless one is given.
pub const ACCEPTANCE_WINDOW: &str = "tau=0..8,alpha1=-12..12,alpha3=0..6,alpha4=0..1";

/// Committed golden outputs.
pub const GOLDEN_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden");

/// Stem range of the golden region chart.
pub const GOLDEN_SMAX: i64 = 40;

/// Window of the golden groups table.
pub const GOLDEN_GROUPS_WINDOW: &str = "s=-2..24,w=-4..24";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Einfty,
    Partition,
    Vanishing,
    EtaLocal,
    Families,
    Ctau,
    Localization,
    Roundtrip,
    Golden,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Einfty,
        Suite::Partition,
        Suite::Vanishing,
        Suite::EtaLocal,
        Suite::Families,
        Suite::Ctau,
        Suite::Localization,
        Suite::Roundtrip,
        Suite::Golden,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Einfty => "einfty",
            Suite::Partition => "partition",
            Suite::Vanishing => "vanishing",
            Suite::EtaLocal => "etalocal",
            Suite::Families => "families",
            Suite::Ctau => "ctau",
            Suite::Localization => "localization",
            Suite::Roundtrip => "roundtrip",
            Suite::Golden => "golden",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.as_str() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Box `|s|, |w| ≤ max` for partition and vanishing scans.
    pub max: i64,
    /// Largest stem in the η-local scan.
    pub eta_max: i64,
    pub window: String,
    pub kmax: i64,
    pub may_max_stem: i64,
    pub chart: ClassicalChart,
    pub chart_text: String,
    pub stems: StemsTable,
    pub stems_text: String,
    pub golden_dir: PathBuf,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max: 1000,
            eta_max: 10_000,
            window: ACCEPTANCE_WINDOW.to_string(),
            kmax: 100,
            may_max_stem: 1000,
            chart: sample_chart(),
            chart_text: crate::chart::SAMPLE_CHART.to_string(),
            stems: sample_stems(),
            stems_text: crate::chart::SAMPLE_STEMS.to_string(),
            golden_dir: PathBuf::from(GOLDEN_DIR),
        }
    }
}

pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Vec<CheckResult> {
    match suite {
        Suite::Einfty => match einfty_report(&config.window) {
            Ok(report) => report.checks(),
            Err(e) => vec![CheckResult::new("einfty", false, e.to_string())],
        },
        Suite::Partition => partition_checks(config.max),
        Suite::Vanishing => vanishing_checks(config.max, config.may_max_stem),
        Suite::EtaLocal => eta_local_checks(config.eta_max),
        Suite::Families => family_checks(config.kmax),
        Suite::Ctau => ctau_checks(&config.chart),
        Suite::Localization => localization_checks(&config.chart),
        Suite::Roundtrip => roundtrip_checks(&config.chart_text, &config.stems_text),
        Suite::Golden => golden_checks(&config.golden_dir, &config.stems),
    }
}

/// One tridegree of the `E_∞` comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EinftyRow {
    pub degree: Tridegree,
    pub expected: Vec<String>,
    pub computed: Vec<String>,
}

impl EinftyRow {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone)]
pub struct EinftyReport {
    pub rows: Vec<EinftyRow>,
    pub tridegrees: usize,
    pub valid: usize,
    pub euler_failures: Vec<Tridegree>,
    pub elapsed_ms: u128,
}

impl EinftyReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.matches()).count()
    }

    fn checks(&self) -> Vec<CheckResult> {
        vec![
            CheckResult::new(
                "einfty.basis",
                self.mismatches() == 0,
                format!(
                    "tridegrees={} valid={} nonzero={} mismatches={} elapsed_ms={}",
                    self.tridegrees,
                    self.valid,
                    self.rows.iter().filter(|r| !r.computed.is_empty()).count(),
                    self.mismatches(),
                    self.elapsed_ms
                ),
            ),
            CheckResult::new(
                "einfty.euler",
                self.euler_failures.is_empty(),
                format!("failures={}", self.euler_failures.len()),
            ),
        ]
    }
}

/// Runs the built-in spectral sequence on `window` and compares every
/// valid tridegree against `α1^a α3^(2c) α4^e`.
pub fn einfty_report(window: &str) -> Result<EinftyReport, DifferentialError> {
    let start = Instant::now();
    let (presentation, specs) = localized_motivic_anss();
    let window = Window::parse(&presentation, window)?;
    let state = run_to_einfty(&presentation, &specs, &window)?;
    let elapsed_ms = start.elapsed().as_millis();

    let mut rows = Vec::new();
    let mut valid = 0;
    for t in state.valid_tridegrees() {
        valid += 1;
        let space = state.space(t).expect("valid tridegrees have a space");
        let expected: BTreeSet<String> = space
            .basis()
            .iter()
            .filter(|m| m.exponent(0) == 0 && m.exponent(2) % 2 == 0)
            .map(|m| presentation.display(m))
            .collect();
        let computed: BTreeSet<String> = state
            .classes(t)
            .iter()
            .map(|p: &Polynomial| p.display(&presentation))
            .collect();
        if expected.is_empty() && computed.is_empty() {
            continue;
        }
        rows.push(EinftyRow {
            degree: t,
            expected: expected.into_iter().collect(),
            computed: computed.into_iter().collect(),
        });
    }
    let valid_set: BTreeSet<Tridegree> = state.valid_tridegrees().collect();
    let euler_failures = state
        .last_turn()
        .iter()
        .filter(|(t, st)| {
            valid_set.contains(t) && st.dim_after + st.rank_in + st.rank_out != st.dim_before
        })
        .map(|(t, _)| *t)
        .collect();
    Ok(EinftyReport {
        rows,
        tridegrees: state.tridegrees().count(),
        valid,
        euler_failures,
        elapsed_ms,
    })
}

fn partition_checks(max: i64) -> Vec<CheckResult> {
    let mut overlaps = 0usize;
    let mut disagreements = 0usize;
    for s in -max..=max {
        for w in -max..=max {
            let (sq, wq) = (Ratio::from_integer(s), Ratio::from_integer(w));
            let zero = s < 0 || w > s;
            let tau = !zero && (s == 0 || wq <= sq / 2 + 1);
            let eta = !zero && s > 0 && wq > Ratio::new(3, 5) * sq + 1;
            let unknown = !zero && s > 0 && !tau && !eta;
            let hits = [zero, tau, eta, unknown].iter().filter(|&&b| b).count();
            if hits != 1 {
                overlaps += 1;
            }
            let expected = if zero {
                RegionLabel::Zero
            } else if tau {
                RegionLabel::TauLocal
            } else if eta {
                RegionLabel::EtaLocal
            } else {
                RegionLabel::NotUnderstood
            };
            if classify(s, w) != expected {
                disagreements += 1;
            }
        }
    }
    let triple = [
        ((20, 13), RegionLabel::NotUnderstood),
        ((20, 14), RegionLabel::EtaLocal),
        ((10, 4), RegionLabel::TauLocal),
    ];
    let triple_ok = triple.iter().all(|&((s, w), r)| classify(s, w) == r);
    vec![
        CheckResult::new(
            "partition.exclusive",
            overlaps == 0 && disagreements == 0,
            format!(
                "points={} overlaps={overlaps} disagreements={disagreements}",
                (2 * max + 1).pow(2)
            ),
        ),
        CheckResult::new(
            "partition.boundary-triple",
            triple_ok,
            "(20,13) (20,14) (10,4)",
        ),
    ]
}

fn vanishing_checks(max: i64, may_max_stem: i64) -> Vec<CheckResult> {
    let gens = may_e1_generators(may_max_stem);
    let bad_gens = gens.iter().filter(|g| g.weight > g.stem).count();
    let mut zero_points = 0usize;
    let mut nonzero = 0usize;
    for s in -max..=max {
        for w in -max..=max {
            if s < 0 || w > s {
                zero_points += 1;
                if !resolve_group(s, w, None).is_trivial() {
                    nonzero += 1;
                }
            }
        }
    }
    vec![
        CheckResult::new(
            "vanishing.may-census",
            bad_gens == 0 && !gens.is_empty(),
            format!("generators={} weight_above_stem={bad_gens}", gens.len()),
        ),
        CheckResult::new(
            "vanishing.zero-region",
            nonzero == 0,
            format!("points={zero_points} nontrivial={nonzero}"),
        ),
    ]
}

/// Number of `(a, ε, b)` with `a + 7ε + 9b = s`, `a + 4ε + 5b = w`,
/// `ε ∈ {0,1}`, `b ≥ 0`. Subtracting gives `3ε + 4b = s - w`.
fn eta_local_count(s: i64, w: i64) -> usize {
    (0..=1)
        .filter(|e| {
            let rest = s - w - 3 * e;
            rest >= 0 && rest % 4 == 0
        })
        .count()
}

fn order(value: &GroupValue) -> Option<u64> {
    value.known().and_then(GroupDescriptor::order)
}

fn eta_local_checks(eta_max: i64) -> Vec<CheckResult> {
    let mut points = 0usize;
    let mut mismatches = 0usize;
    let mut eta_step = 0usize;
    for s in 1..=eta_max {
        // EtaLocal needs 5w > 3s + 5 and w ≤ s.
        let w_lo = (3 * s + 5).div_euclid(5) + 1;
        for w in w_lo..=s {
            if classify(s, w) != RegionLabel::EtaLocal {
                continue;
            }
            points += 1;
            let g = resolve_group(s, w, None);
            let expected = if eta_local_count(s, w) == 1 {
                Some(2)
            } else {
                Some(1)
            };
            if order(&g) != expected || order(&g).unwrap_or(u64::MAX) > 2 {
                mismatches += 1;
            }
            if classify(s + 1, w + 1) == RegionLabel::EtaLocal
                && order(&eta_local_group(s, w)) != order(&eta_local_group(s + 1, w + 1))
            {
                eta_step += 1;
            }
        }
    }
    let mut tau_step = 0usize;
    let mut containment = 0usize;
    let stems = sample_stems();
    let bound = eta_max.min(2000);
    for s in 0..=bound {
        for w in -bound..=s {
            if classify(s, w) == RegionLabel::TauLocal
                && classify(s, w - 1) == RegionLabel::TauLocal
            {
                let (a, b) = (
                    resolve_group(s, w, Some(&stems)),
                    resolve_group(s, w - 1, Some(&stems)),
                );
                let same = if s == 0 {
                    a.known() == b.known()
                } else {
                    a == b
                };
                if !same {
                    tau_step += 1;
                }
            }
            if s > 0 && adams_weak_bound(s, w) && classify(s, w) != RegionLabel::EtaLocal {
                containment += 1;
            }
        }
    }
    vec![
        CheckResult::new(
            "etalocal.oracle",
            mismatches == 0,
            format!("points={points} mismatches={mismatches}"),
        ),
        CheckResult::new(
            "etalocal.eta-step",
            eta_step == 0,
            format!("failures={eta_step}"),
        ),
        CheckResult::new(
            "etalocal.tau-step",
            tau_step == 0,
            format!("failures={tau_step}"),
        ),
        CheckResult::new(
            "etalocal.weak-bound",
            containment == 0,
            format!("failures={containment}"),
        ),
    ]
}

fn family_checks(kmax: i64) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (name, slope, intercept) in [
        ("Pk_h1_4", Ratio::new(1, 2), Ratio::from_integer(2)),
        ("w1_family", Ratio::new(3, 5), Ratio::new(3, 5)),
    ] {
        let fam = family(name).expect("built-in family");
        let on_line = (0..=kmax).all(|k| {
            let t = fam.member(k);
            Ratio::from_integer(t.w) == slope * t.s + intercept
        });
        let stored = verify_family_line(&fam, kmax).unwrap_or(false);
        out.push(CheckResult::new(
            format!("families.{name}"),
            on_line && stored,
            format!("kmax={kmax}"),
        ));
    }
    let slopes: Vec<Ratio<i64>> = (0..=20).filter_map(|n| wn_slope(n).ok()).collect();
    let decreasing = slopes.len() == 21 && slopes.windows(2).all(|p| p[0] > p[1]);
    let above_half = slopes.iter().all(|&m| m > Ratio::new(1, 2));
    out.push(CheckResult::new(
        "families.wn-slopes",
        decreasing && above_half,
        format!(
            "n=0..20 first={} last={}",
            slopes[0],
            slopes[slopes.len() - 1]
        ),
    ));
    let w2 = speculative_w2_line();
    out.push(CheckResult::new(
        "families.w2-speculative",
        w2.slope == Ratio::new(7, 13) && w2.speculative,
        format!("slope={}", w2.slope),
    ));
    out
}

fn ctau_checks(chart: &ClassicalChart) -> Vec<CheckResult> {
    let mut failures = 0usize;
    for s in 1..=chart.s_max() {
        // w ≤ s/2 means f = 2w - s ≤ 0.
        for w in (s - 40)..=s.div_euclid(2) {
            if !ctau_homotopy(chart, s, w)
                .map(|g| g.is_trivial())
                .unwrap_or(false)
            {
                failures += 1;
            }
        }
    }
    let unit = ctau_homotopy(chart, 0, 0).ok() == Some(GroupDescriptor::z2());
    vec![
        CheckResult::new(
            "ctau.vanishing",
            failures == 0,
            format!("failures={failures}"),
        ),
        CheckResult::new("ctau.unit", unit, "(0,0) = Z2"),
    ]
}

fn localization_checks(chart: &ClassicalChart) -> Vec<CheckResult> {
    let localized = eta_localize_chart(chart, 64);
    let mut checked = 0usize;
    let mut failures = 0usize;
    for (&(s, f), classes) in chart.entries() {
        if !in_localization_range(s, f) {
            continue;
        }
        checked += classes.len();
        let ok = localized.get(&(s, f)).is_some_and(|entry| {
            entry.status == Stabilization::Stable && entry.survivors().len() == classes.len()
        });
        if !ok {
            failures += 1;
        }
    }
    vec![CheckResult::new(
        "localization.guarantee",
        failures == 0,
        format!("classes_in_range={checked} failures={failures}"),
    )]
}

fn roundtrip_checks(chart_text: &str, stems_text: &str) -> Vec<CheckResult> {
    let chart = parse_chart(chart_text).map(|c| {
        let canonical = serialize_chart(&c);
        parse_chart(&canonical).map(|again| serialize_chart(&again) == canonical && again == c)
    });
    let stems = parse_stems(stems_text).map(|t| {
        let canonical = serialize_stems(&t);
        parse_stems(&canonical).map(|again| serialize_stems(&again) == canonical && again == t)
    });
    let mut out = vec![
        CheckResult::new(
            "roundtrip.chart",
            matches!(chart, Ok(Ok(true))),
            "parse . serialize is the identity",
        ),
        CheckResult::new(
            "roundtrip.stems",
            matches!(stems, Ok(Ok(true))),
            "parse . serialize is the identity",
        ),
    ];
    for (name, text) in FIXTURES {
        out.push(CheckResult::new(
            format!("roundtrip.reject-{name}"),
            parse_chart(text).is_err(),
            "corrupted fixture is rejected",
        ));
    }
    out
}

/// Corrupted chart fixtures the validator must reject.
pub const FIXTURES: [(&str, &str); 3] = [
    (
        "missing-unit",
        include_str!("../data/fixtures/missing_unit.txt"),
    ),
    (
        "bad-eta-edge",
        include_str!("../data/fixtures/bad_eta_edge.txt"),
    ),
    (
        "filtration-zero",
        include_str!("../data/fixtures/filtration_zero.txt"),
    ),
];

/// `(file name, contents)` of every golden output, freshly rendered.
pub fn golden_outputs(stems: &StemsTable) -> Vec<(&'static str, String)> {
    let resolver = StemsResolver(Some(stems));
    let svg = region_chart_svg(&ChartStyle::regions(GOLDEN_SMAX), &resolver)
        .expect("golden style is valid");
    let window = BidegreeWindow::parse(GOLDEN_GROUPS_WINDOW).expect("golden window parses");
    vec![
        ("regions.svg", svg),
        ("groups.tsv", groups_tsv(&window, &resolver)),
    ]
}

fn golden_checks(dir: &Path, stems: &StemsTable) -> Vec<CheckResult> {
    let first = golden_outputs(stems);
    let second = golden_outputs(stems);
    first
        .iter()
        .zip(&second)
        .map(|((name, a), (_, b))| {
            let path = dir.join(name);
            let (passed, detail) = match std::fs::read_to_string(&path) {
                Ok(committed) if committed == *a && a == b => (true, format!("{} bytes", a.len())),
                Ok(_) if a != b => (false, "two renders differ".to_string()),
                Ok(_) => (false, format!("differs from {}", path.display())),
                Err(e) => (false, format!("{}: {e}", path.display())),
            };
            CheckResult::new(format!("golden.{name}"), passed, detail)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig {
            max: 40,
            eta_max: 200,
            kmax: 20,
            may_max_stem: 100,
            ..VerifyConfig::default()
        }
    }

    #[test]
    fn suites_parse() {
        for suite in Suite::ALL {
            assert_eq!(suite.as_str().parse::<Suite>(), Ok(suite));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let config = small();
        for suite in Suite::ALL {
            for check in run_suite(suite, &config) {
                assert!(check.passed, "{check}");
            }
        }
    }

    #[test]
    fn einfty_small_window() {
        let report = einfty_report("tau=0..3,alpha1=-4..4,alpha3=0..3,alpha4=0..1").unwrap();
        assert_eq!(report.mismatches(), 0);
        assert!(report.rows.iter().any(|r| r.computed == ["alpha3^2"]));
    }

    #[test]
    fn eta_count_oracle() {
        assert_eq!(eta_local_count(8, 8), 1);
        assert_eq!(eta_local_count(9, 8), 0);
        assert_eq!(eta_local_count(16, 13), 1);
    }

    #[test]
    fn golden_detects_missing_files() {
        let dir = std::env::temp_dir().join("motivic-core-no-golden-here");
        let checks = golden_checks(&dir, &sample_stems());
        assert!(checks.iter().all(|c| !c.passed));
    }

    #[test]
    fn display() {
        let c = CheckResult::new("x", true, "ok");
        assert_eq!(c.to_string(), "PASS x ok");
    }
}
