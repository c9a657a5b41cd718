//! Deterministic SVG and TSV output.
//!
//! All geometry is computed in exact rationals and rounded once, when
//! formatted with three decimals, so identical inputs give byte-identical
//! files.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::chart::{MotivicLift, StemsTable};
use crate::error::{AlgebraError, RenderError};
use crate::families::family;
use crate::regions::{
    boundary_lines, classify, resolve_group, BoundaryLine, GroupValue, RegionLabel,
};

type Q = Ratio<i64>;
type Part = fn(i64, i64) -> bool;

const MARGIN: i64 = 40;

/// Fill colors keyed by region.
pub fn region_color(label: RegionLabel) -> &'static str {
    match label {
        RegionLabel::Zero => "#e8e8e8",
        RegionLabel::TauLocal => "#cfe3f7",
        RegionLabel::EtaLocal => "#f8d3bd",
        RegionLabel::NotUnderstood => "#fff1a8",
    }
}

fn region_caption(label: RegionLabel) -> &'static str {
    match label {
        RegionLabel::Zero => "zero",
        RegionLabel::TauLocal => "τ-local",
        RegionLabel::EtaLocal => "η-local",
        RegionLabel::NotUnderstood => "not understood",
    }
}

fn line_color(line: &BoundaryLine) -> &'static str {
    match line.name {
        "w = s" => "#b03a2e",
        "w = 3s/5 + 1" => "#b7950b",
        _ => "#1f618d",
    }
}

/// Exact rational to a fixed three-decimal string, rounding half away
/// from zero.
pub fn fmt_coord(x: Q) -> String {
    let n = i128::from(*x.numer()) * 1000;
    let d = i128::from(*x.denom());
    let q = (2 * n.abs() + d) / (2 * d);
    let sign = if n < 0 && q != 0 { "-" } else { "" };
    format!("{sign}{}.{:03}", q / 1000, q % 1000)
}

fn q(n: i64) -> Q {
    Ratio::from_integer(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartStyle {
    pub s_min: i64,
    pub s_max: i64,
    /// Vertical range: weight for region charts, filtration for Adams-style charts.
    pub v_min: i64,
    pub v_max: i64,
    /// Pixels per unit.
    pub scale: i64,
    pub shade_regions: bool,
    pub boundary_lines: bool,
    pub group_dots: bool,
    pub family_overlays: Vec<String>,
}

impl ChartStyle {
    /// The region chart used by `chart regions --smax N`.
    pub fn regions(s_max: i64) -> Self {
        ChartStyle {
            s_min: -4,
            s_max,
            v_min: -4,
            v_max: s_max,
            scale: 16,
            shade_regions: true,
            boundary_lines: true,
            group_dots: true,
            family_overlays: Vec::new(),
        }
    }

    /// Adams-style `(s, f)` chart.
    pub fn adams(s_max: i64, f_max: i64) -> Self {
        ChartStyle {
            s_min: 0,
            s_max,
            v_min: 0,
            v_max: f_max,
            scale: 40,
            shade_regions: false,
            boundary_lines: false,
            group_dots: true,
            family_overlays: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), RenderError> {
        if self.s_min >= self.s_max {
            return Err(RenderError::EmptyRange {
                axis: "s",
                min: self.s_min,
                max: self.s_max,
            });
        }
        if self.v_min >= self.v_max {
            return Err(RenderError::EmptyRange {
                axis: "vertical",
                min: self.v_min,
                max: self.v_max,
            });
        }
        if self.scale <= 0 {
            return Err(RenderError::BadScale);
        }
        for name in &self.family_overlays {
            family(name)?;
        }
        Ok(())
    }

    fn width(&self) -> i64 {
        (self.s_max - self.s_min) * self.scale + 2 * MARGIN
    }

    fn height(&self) -> i64 {
        (self.v_max - self.v_min) * self.scale + 2 * MARGIN
    }

    pub fn x(&self, s: Q) -> Q {
        q(MARGIN) + (s - q(self.s_min)) * self.scale
    }

    pub fn y(&self, v: Q) -> Q {
        q(MARGIN) + (q(self.v_max) - v) * self.scale
    }

    fn in_view(&self, s: i64, v: i64) -> bool {
        (self.s_min..=self.s_max).contains(&s) && (self.v_min..=self.v_max).contains(&v)
    }
}

/// Source of group values for chart points.
pub trait GroupResolver {
    fn resolve(&self, s: i64, w: i64) -> GroupValue;
}

impl<F: Fn(i64, i64) -> GroupValue> GroupResolver for F {
    fn resolve(&self, s: i64, w: i64) -> GroupValue {
        self(s, w)
    }
}

/// [`resolve_group`] against an optional stems table.
#[derive(Debug, Clone, Copy)]
pub struct StemsResolver<'a>(pub Option<&'a StemsTable>);

impl GroupResolver for StemsResolver<'_> {
    fn resolve(&self, s: i64, w: i64) -> GroupValue {
        resolve_group(s, w, self.0)
    }
}

/// Segment of `line` for `s ≥ 0` inside the view, as exact endpoints.
pub fn clip_boundary(style: &ChartStyle, line: &BoundaryLine) -> Option<((Q, Q), (Q, Q))> {
    let s_lo = q(style.s_min.max(0)).max((q(style.v_min) - line.intercept) / line.slope);
    let s_hi = q(style.s_max).min((q(style.v_max) - line.intercept) / line.slope);
    (s_lo < s_hi).then(|| ((s_lo, line.at(s_lo)), (s_hi, line.at(s_hi))))
}

fn svg_open(out: &mut String, style: &ChartStyle, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"11\">",
        w = style.width(),
        h = style.height()
    );
    let _ = writeln!(out, "<title>{title}</title>");
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        style.width(),
        style.height()
    );
}

fn axes(out: &mut String, style: &ChartStyle, vertical_label: &str) {
    let s0 = q(style.s_min.max(0).min(style.s_max));
    let v0 = q(style.v_min.max(0).min(style.v_max));
    let (x_left, x_right) = (style.x(q(style.s_min)), style.x(q(style.s_max)));
    let (y_top, y_bottom) = (style.y(q(style.v_max)), style.y(q(style.v_min)));
    let _ = writeln!(
        out,
        "<g class=\"axes\" stroke=\"#555555\" stroke-width=\"1\">"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        fmt_coord(x_left),
        fmt_coord(style.y(v0)),
        fmt_coord(x_right),
        fmt_coord(style.y(v0))
    );
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
        fmt_coord(style.x(s0)),
        fmt_coord(y_bottom),
        fmt_coord(style.x(s0)),
        fmt_coord(y_top)
    );
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        "<text class=\"axis-label\" x=\"{}\" y=\"{}\">s</text>",
        fmt_coord(x_right + q(8)),
        fmt_coord(style.y(v0) + q(4))
    );
    let _ = writeln!(
        out,
        "<text class=\"axis-label\" x=\"{}\" y=\"{}\">{vertical_label}</text>",
        fmt_coord(style.x(s0) - q(4)),
        fmt_coord(y_top - q(10))
    );

    let span = (style.s_max - style.s_min).max(style.v_max - style.v_min);
    let step = if span > 60 {
        10
    } else if span > 12 {
        5
    } else {
        1
    };
    let _ = writeln!(out, "<g class=\"ticks\" fill=\"#555555\" font-size=\"9\">");
    for s in (style.s_min..=style.s_max).filter(|s| s % step == 0) {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{s}</text>",
            fmt_coord(style.x(q(s))),
            fmt_coord(y_bottom + q(14))
        );
    }
    for v in (style.v_min..=style.v_max).filter(|v| v % step == 0) {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{v}</text>",
            fmt_coord(x_left - q(6)),
            fmt_coord(style.y(q(v)) + q(3))
        );
    }
    let _ = writeln!(out, "</g>");
}

/// Label position for a set of lattice points: the member closest to the
/// centroid, ties broken by `(s, w)`.
fn label_point(points: &[(i64, i64)]) -> Option<(i64, i64)> {
    let n = points.len() as i128;
    if n == 0 {
        return None;
    }
    let sum_s: i128 = points.iter().map(|p| i128::from(p.0)).sum();
    let sum_w: i128 = points.iter().map(|p| i128::from(p.1)).sum();
    points.iter().copied().min_by_key(|&(s, w)| {
        let ds = i128::from(s) * n - sum_s;
        let dw = i128::from(w) * n - sum_w;
        (ds * ds + dw * dw, s, w)
    })
}

/// The `(s, w)`-plane chart of the four regions.
pub fn region_chart_svg(
    style: &ChartStyle,
    resolver: &dyn GroupResolver,
) -> Result<String, RenderError> {
    style.validate()?;
    let mut out = String::new();
    svg_open(
        &mut out,
        style,
        "Homotopy groups pi_{s,w} of the 2-completed motivic sphere over C (to scale)",
    );
    let points: Vec<(i64, i64)> = (style.s_min..=style.s_max)
        .flat_map(|s| (style.v_min..=style.v_max).map(move |w| (s, w)))
        .collect();

    if style.shade_regions {
        let half = Ratio::new(style.scale, 2);
        let _ = writeln!(out, "<g class=\"regions\" fill-opacity=\"0.9\">");
        for &(s, w) in &points {
            let label = classify(s, w);
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
                fmt_coord(style.x(q(s)) - half),
                fmt_coord(style.y(q(w)) - half),
                style.scale,
                style.scale,
                region_color(label)
            );
        }
        let _ = writeln!(out, "</g>");
    }

    axes(&mut out, style, "w");

    if style.boundary_lines {
        let _ = writeln!(
            out,
            "<g class=\"boundaries\" stroke-width=\"2\" fill=\"none\">"
        );
        // s = 0, w ≤ 0 is the left edge of the τ-local ray.
        if style.s_min <= 0 && 0 <= style.s_max && style.v_min < 0 {
            let _ = writeln!(
                out,
                "<line class=\"boundary\" data-line=\"s = 0\" x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\" stroke=\"#b03a2e\"/>",
                fmt_coord(style.y(q(style.v_min))),
                fmt_coord(style.y(q(0.min(style.v_max)))),
                x = fmt_coord(style.x(q(0)))
            );
        }
        for line in boundary_lines() {
            if let Some(((s1, w1), (s2, w2))) = clip_boundary(style, &line) {
                let _ = writeln!(
                    out,
                    "<line class=\"boundary\" data-line=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>",
                    line.name,
                    fmt_coord(style.x(s1)),
                    fmt_coord(style.y(w1)),
                    fmt_coord(style.x(s2)),
                    fmt_coord(style.y(w2)),
                    line_color(&line)
                );
                let _ = writeln!(
                    out,
                    "<text class=\"boundary-label\" x=\"{}\" y=\"{}\" fill=\"{}\" stroke=\"none\" text-anchor=\"end\">{}</text>",
                    fmt_coord(style.x(s2) - q(4)),
                    fmt_coord(style.y(w2) - q(6)),
                    line_color(&line),
                    line.name
                );
            }
        }
        let _ = writeln!(out, "</g>");
    }

    if style.group_dots {
        let r = fmt_coord(Ratio::new(style.scale, 5));
        let _ = writeln!(out, "<g class=\"groups\">");
        for &(s, w) in &points {
            let value = resolver.resolve(s, w);
            let (x, y) = (fmt_coord(style.x(q(s))), fmt_coord(style.y(q(w))));
            match &value {
                GroupValue::Known(g, _) if g.is_trivial() => {}
                GroupValue::Known(g, gen) => {
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"#222222\"><title>({s},{w}) {g} {gen}</title></circle>"
                    );
                }
                GroupValue::ReducibleToClassical(_) => {
                    let _ = writeln!(
                        out,
                        "<circle cx=\"{x}\" cy=\"{y}\" r=\"{r}\" fill=\"none\" stroke=\"#222222\"><title>({s},{w}) {}</title></circle>",
                        value.group_string()
                    );
                }
                GroupValue::Unknown => {
                    let _ = writeln!(
                        out,
                        "<text x=\"{x}\" y=\"{}\" text-anchor=\"middle\" font-size=\"9\" fill=\"#7d6608\">?</text>",
                        fmt_coord(style.y(q(w)) + q(3))
                    );
                }
            }
        }
        let _ = writeln!(out, "</g>");
    }

    for name in &style.family_overlays {
        let fam = family(name)?;
        let _ = writeln!(
            out,
            "<g class=\"family\" data-family=\"{name}\" fill=\"#6c3483\">"
        );
        for k in 0.. {
            let b = fam.member(k).bidegree();
            if !style.in_view(b.s, b.w) {
                break;
            }
            let _ = writeln!(
                out,
                "<rect x=\"{}\" y=\"{}\" width=\"6.000\" height=\"6.000\" transform=\"rotate(45 {} {})\"><title>{name} k={k} ({},{})</title></rect>",
                fmt_coord(style.x(q(b.s)) - q(3)),
                fmt_coord(style.y(q(b.w)) - q(3)),
                fmt_coord(style.x(q(b.s))),
                fmt_coord(style.y(q(b.w))),
                b.s,
                b.w
            );
        }
        let _ = writeln!(out, "</g>");
    }

    if style.shade_regions {
        // The zero region gets one caption per connected piece.
        let groups: [(RegionLabel, Part); 5] = [
            (RegionLabel::Zero, |s, _| s < 0),
            (RegionLabel::Zero, |s, w| s >= 0 && w > s),
            (RegionLabel::TauLocal, |_, _| true),
            (RegionLabel::EtaLocal, |_, _| true),
            (RegionLabel::NotUnderstood, |_, _| true),
        ];
        let mut placed = Vec::new();
        for (label, part) in &groups {
            let members: Vec<_> = points
                .iter()
                .copied()
                .filter(|&(s, w)| classify(s, w) == *label && part(s, w))
                .collect();
            if let Some((s, w)) = label_point(&members) {
                placed.push((
                    *label,
                    fmt_coord(style.x(q(s))),
                    fmt_coord(style.y(q(w)) + q(5)),
                ));
            }
        }
        // A white copy underneath keeps captions readable over dots.
        for (class, attrs) in [
            (
                "region-label-halo",
                "fill=\"#ffffff\" stroke=\"#ffffff\" stroke-width=\"4\"",
            ),
            ("region-labels", "fill=\"#333333\""),
        ] {
            let _ = writeln!(
                out,
                "<g class=\"{class}\" font-size=\"14\" text-anchor=\"middle\" {attrs}>"
            );
            for (label, x, y) in &placed {
                let _ = writeln!(
                    out,
                    "<text x=\"{x}\" y=\"{y}\">{}</text>",
                    region_caption(*label)
                );
            }
            let _ = writeln!(out, "</g>");
        }
        legend(&mut out);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn legend(out: &mut String) {
    // Top left lies in the zero region for any view with s_min < v_max.
    let x = MARGIN + 8;
    let _ = writeln!(out, "<g class=\"legend\" font-size=\"10\">");
    for (i, label) in RegionLabel::ALL.into_iter().enumerate() {
        let y = MARGIN + 8 + 14 * i as i64;
        let _ = writeln!(
            out,
            "<rect x=\"{x}\" y=\"{y}\" width=\"10\" height=\"10\" fill=\"{}\" stroke=\"#555555\"/><text x=\"{}\" y=\"{}\">{}</text>",
            region_color(label),
            x + 14,
            y + 9,
            label.as_str()
        );
    }
    let _ = writeln!(out, "</g>");
}

/// Inclusive `(s, w)` box.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BidegreeWindow {
    pub s_min: i64,
    pub s_max: i64,
    pub w_min: i64,
    pub w_max: i64,
}

impl BidegreeWindow {
    pub fn new(s_min: i64, s_max: i64, w_min: i64, w_max: i64) -> Self {
        BidegreeWindow {
            s_min,
            s_max,
            w_min,
            w_max,
        }
    }

    pub fn point(s: i64, w: i64) -> Self {
        BidegreeWindow::new(s, s, w, w)
    }

    /// Parses `s=-2..20,w=-4..20`.
    pub fn parse(text: &str) -> Result<Self, AlgebraError> {
        let err = |message: String| AlgebraError::Parse { line: 1, message };
        let mut s = None;
        let mut w = None;
        for item in text.split(',').map(str::trim) {
            let (key, range) = item
                .split_once('=')
                .ok_or_else(|| err(format!("expected `s=lo..hi` or `w=lo..hi`, got `{item}`")))?;
            let (lo, hi) = range
                .split_once("..")
                .ok_or_else(|| err(format!("expected `lo..hi`, got `{range}`")))?;
            let parse = |t: &str| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| err(format!("`{t}` is not an integer")))
            };
            let bounds = (parse(lo)?, parse(hi)?);
            match key.trim() {
                "s" => s = Some(bounds),
                "w" => w = Some(bounds),
                other => return Err(err(format!("unknown axis `{other}`"))),
            }
        }
        let ((s_min, s_max), (w_min, w_max)) = (
            s.ok_or_else(|| err("missing s range".into()))?,
            w.ok_or_else(|| err("missing w range".into()))?,
        );
        Ok(BidegreeWindow::new(s_min, s_max, w_min, w_max))
    }

    pub fn points(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.s_min..=self.s_max).flat_map(move |s| (self.w_min..=self.w_max).map(move |w| (s, w)))
    }
}

/// One row per `(s, w)`, sorted: `s  w  region  group  generator`, tab separated.
pub fn groups_tsv(window: &BidegreeWindow, resolver: &dyn GroupResolver) -> String {
    let mut out = String::new();
    for (s, w) in window.points() {
        let value = resolver.resolve(s, w);
        let _ = writeln!(
            out,
            "{s}\t{w}\t{}\t{}\t{}",
            classify(s, w),
            value.group_string(),
            value.generator_string()
        );
    }
    out
}

/// Adams-style `(s, f)` chart of a motivic lift. The weight is suppressed;
/// each class carries its top weight as a `w ≤ n` annotation.
pub fn motivic_chart_svg(lift: &MotivicLift, style: &ChartStyle) -> Result<String, RenderError> {
    style.validate()?;
    let mut out = String::new();
    svg_open(
        &mut out,
        style,
        "Motivic Adams-Novikov E2 (weight suppressed)",
    );
    axes(&mut out, style, "f");

    let mut placed: Vec<(i64, i64, &str, Q, Q)> = Vec::new();
    let mut by_position: std::collections::BTreeMap<
        (i64, i64),
        Vec<&crate::chart::MotivicChartClass>,
    > = std::collections::BTreeMap::new();
    for c in lift.classes() {
        if style.in_view(c.class.s, c.class.f) {
            by_position
                .entry((c.class.s, c.class.f))
                .or_default()
                .push(c);
        }
    }
    for (&(s, f), classes) in &by_position {
        let n = classes.len() as i64;
        for (i, c) in classes.iter().enumerate() {
            // Spread several classes in one position horizontally.
            let offset = Ratio::new(style.scale * (2 * i as i64 - (n - 1)), 8);
            placed.push((s, f, &c.class.name, style.x(q(s)) + offset, style.y(q(f))));
        }
    }

    let _ = writeln!(
        out,
        "<g class=\"eta-edges\" stroke=\"#222222\" stroke-width=\"1\">"
    );
    for c in lift.classes() {
        let Some(target) = &c.class.eta_edge else {
            continue;
        };
        let from = placed.iter().find(|p| p.2 == c.class.name);
        let to = placed.iter().find(|p| p.2 == target.as_str());
        if let (Some(a), Some(b)) = (from, to) {
            let _ = writeln!(
                out,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                fmt_coord(a.3),
                fmt_coord(a.4),
                fmt_coord(b.3),
                fmt_coord(b.4)
            );
        }
    }
    let _ = writeln!(out, "</g>");

    let _ = writeln!(out, "<g class=\"classes\">");
    for c in lift.classes() {
        let Some(p) = placed.iter().find(|p| p.2 == c.class.name) else {
            continue;
        };
        let order = if c.class.order == 0 {
            "Z2".to_string()
        } else {
            format!("Z/{}", c.class.order)
        };
        let _ = writeln!(
            out,
            "<circle cx=\"{}\" cy=\"{}\" r=\"4.000\" fill=\"#222222\"><title>{} ({},{}) {} w ≤ {}</title></circle>",
            fmt_coord(p.3),
            fmt_coord(p.4),
            c.class.name,
            p.0,
            p.1,
            order,
            c.w_top
        );
        let _ = writeln!(
            out,
            "<text class=\"weight\" x=\"{}\" y=\"{}\" font-size=\"8\" fill=\"#1f618d\">w ≤ {}</text>",
            fmt_coord(p.3 + q(5)),
            fmt_coord(p.4 - q(5)),
            c.w_top
        );
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{lift_to_motivic, sample_chart, sample_stems, ClassicalChart};

    #[test]
    fn coordinate_formatting() {
        assert_eq!(fmt_coord(Ratio::new(1, 3)), "0.333");
        assert_eq!(fmt_coord(Ratio::new(2, 3)), "0.667");
        assert_eq!(fmt_coord(Ratio::new(-1, 8)), "-0.125");
        assert_eq!(fmt_coord(Ratio::new(1, 2000)), "0.001");
        assert_eq!(fmt_coord(Ratio::new(-1, 4000)), "0.000");
        assert_eq!(fmt_coord(q(42)), "42.000");
    }

    #[test]
    fn default_chart_has_three_boundaries_and_four_regions() {
        let stems = sample_stems();
        let svg = region_chart_svg(&ChartStyle::regions(30), &StemsResolver(Some(&stems))).unwrap();
        for name in ["w = s", "w = 3s/5 + 1", "w = s/2 + 1"] {
            assert!(svg.contains(&format!("data-line=\"{name}\"")), "{name}");
        }
        for caption in ["zero", "τ-local", "η-local", "not understood"] {
            assert!(svg.contains(&format!(">{caption}</text>")), "{caption}");
        }
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn boundary_endpoints_are_exact() {
        let style = ChartStyle::regions(30);
        let svg = region_chart_svg(&style, &StemsResolver(None)).unwrap();
        // w = 3s/5 + 1 is clipped at w = 30, i.e. s = 145/3.
        let [_, eta, _] = boundary_lines();
        let ((s1, w1), (s2, w2)) = clip_boundary(&style, &eta).unwrap();
        assert_eq!((s1, w1), (q(0), q(1)));
        assert_eq!(s2, q(30));
        assert_eq!(w2, Ratio::new(19, 1));
        let expected = format!(
            "x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"",
            fmt_coord(style.x(s1)),
            fmt_coord(style.y(w1)),
            fmt_coord(style.x(s2)),
            fmt_coord(style.y(w2))
        );
        assert!(svg.contains(&expected));
        // Lines clipped at the top edge hit a rational s.
        let tall = ChartStyle {
            s_max: 100,
            ..ChartStyle::regions(20)
        };
        let ((_, _), (s2, w2)) = clip_boundary(&tall, &eta).unwrap();
        assert_eq!((s2, w2), (Ratio::new(95, 3), q(20)));
    }

    #[test]
    fn family_overlay_points_lie_on_line() {
        let mut style = ChartStyle::regions(40);
        style.family_overlays.push("Pk_h1_4".into());
        let svg = region_chart_svg(&style, &StemsResolver(None)).unwrap();
        for (s, w) in [(4, 4), (12, 8), (20, 12), (28, 16), (36, 20)] {
            assert_eq!(2 * w, s + 4);
            assert!(svg.contains(&format!("Pk_h1_4 k={} ({s},{w})", (s - 4) / 8)));
        }
        assert!(!svg.contains("Pk_h1_4 k=5"));
    }

    #[test]
    fn invalid_styles() {
        let mut style = ChartStyle::regions(10);
        style.s_max = style.s_min;
        assert!(matches!(
            region_chart_svg(&style, &StemsResolver(None)),
            Err(RenderError::EmptyRange { axis: "s", .. })
        ));
        let mut style = ChartStyle::regions(10);
        style.scale = 0;
        assert_eq!(style.validate(), Err(RenderError::BadScale));
        let mut style = ChartStyle::regions(10);
        style.family_overlays.push("nope".into());
        assert!(style.validate().is_err());
    }

    #[test]
    fn tsv_rows() {
        let stems = sample_stems();
        let r = StemsResolver(Some(&stems));
        assert_eq!(
            groups_tsv(&BidegreeWindow::point(0, 0), &r),
            "0\t0\tTauLocal\tZ2\t1\n"
        );
        assert_eq!(
            groups_tsv(&BidegreeWindow::point(8, 8), &r),
            "8\t8\tEtaLocal\tZ/2\teta^8\n"
        );
        assert_eq!(
            groups_tsv(&BidegreeWindow::point(3, 5), &r),
            "3\t5\tZero\t0\t-\n"
        );
        let many = groups_tsv(&BidegreeWindow::new(-1, 2, -1, 1), &r);
        assert_eq!(many.lines().count(), 12);
        assert!(many.lines().next().unwrap().starts_with("-1\t-1\t"));
    }

    #[test]
    fn window_parsing() {
        assert_eq!(
            BidegreeWindow::parse("s=-2..20,w=-4..20").unwrap(),
            BidegreeWindow::new(-2, 20, -4, 20)
        );
        assert!(BidegreeWindow::parse("s=0..1").is_err());
        assert!(BidegreeWindow::parse("x=0..1,w=0..1").is_err());
    }

    #[test]
    fn motivic_chart() {
        let lift = lift_to_motivic(&sample_chart()).unwrap();
        let svg = motivic_chart_svg(&lift, &ChartStyle::adams(6, 6)).unwrap();
        assert!(svg.contains("<title>1 (0,0) Z2 w ≤ 0</title>"));
        assert!(svg.contains("<title>alpha1 (1,1) Z/2 w ≤ 1</title>"));
        assert!(svg.contains(">w ≤ 0</text>"));

        let empty = lift_to_motivic(&ClassicalChart::new(0)).unwrap();
        let svg = motivic_chart_svg(&empty, &ChartStyle::adams(6, 6)).unwrap();
        assert!(svg.contains("class=\"axes\""));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn output_is_deterministic() {
        let stems = sample_stems();
        let style = ChartStyle::regions(24);
        let a = region_chart_svg(&style, &StemsResolver(Some(&stems))).unwrap();
        let b = region_chart_svg(&style, &StemsResolver(Some(&stems))).unwrap();
        assert_eq!(a, b);
    }
}
