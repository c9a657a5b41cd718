//! `motivic`: command-line front end for `motivic-core`.
//!
//! Output is `key=value` lines unless `--pretty` is given. Exit status is 0 on
//! success, 1 on validation or I/O failure, and 2 on usage errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use motivic_core::chart::{
    ctau_homotopy, eta_localize_chart, lift_to_motivic, parse_chart, parse_stems, validate_chart,
    ClassicalChart, Fate, Stabilization, StemsTable, SAMPLE_CHART,
};
use motivic_core::families::{builtin_families, may_e1_generators, sharpness_report};
use motivic_core::regions::{classify, resolve_group, GroupValue};
use motivic_core::render::{
    groups_tsv, motivic_chart_svg, region_chart_svg, BidegreeWindow, ChartStyle, StemsResolver,
};
use motivic_core::verify::{einfty_report, run_suite, Suite, VerifyConfig, ACCEPTANCE_WINDOW};

const BUNDLED_DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data");

#[derive(Parser, Debug)]
#[command(
    name = "motivic",
    version,
    about = "Motivic stable homotopy groups over C: regions, groups, charts"
)]
struct Cli {
    /// Human-readable output instead of key=value lines.
    #[arg(long, global = true)]
    pretty: bool,

    /// Directory holding `stems.txt` and `sample_chart.txt`.
    #[arg(long, global = true, env = "MOTIVIC_STEMS_DATA")]
    data_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Region of (s, w).
    #[command(allow_negative_numbers = true)]
    Classify { s: i64, w: i64 },
    /// Region and group value of pi_{s,w}.
    #[command(allow_negative_numbers = true)]
    Group {
        s: i64,
        w: i64,
        #[arg(long)]
        stems: Option<PathBuf>,
    },
    /// pi_{s,w}(C tau) read off a classical chart.
    #[command(allow_negative_numbers = true)]
    Ctau {
        s: i64,
        w: i64,
        /// Chart file, or `sample` for the bundled chart.
        #[arg(long, default_value = "sample")]
        chart: String,
    },
    /// eta-localize a classical chart.
    Localize {
        #[arg(long, default_value = "sample")]
        chart: String,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Built-in element families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
    /// Motivic May E1 generators up to a stem.
    MayCensus {
        #[arg(long)]
        max_stem: i64,
    },
    /// Render charts and tables.
    Chart {
        #[command(subcommand)]
        kind: ChartKind,
    },
    /// Parse and validate chart and stems files.
    Ingest {
        #[arg(long)]
        chart: Option<PathBuf>,
        #[arg(long)]
        stems: Option<PathBuf>,
        /// Run structural validation and fail on any violation.
        #[arg(long)]
        validate: bool,
    },
    /// Run self-check suites; all suites when none are named.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum FamiliesAction {
    List,
    Check {
        #[arg(long, default_value_t = 100)]
        kmax: i64,
    },
}

#[derive(Subcommand, Debug)]
enum ChartKind {
    /// (s, w)-plane region chart as SVG.
    Regions {
        #[arg(long)]
        smax: i64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        stems: Option<PathBuf>,
        /// Family names to overlay.
        #[arg(long = "overlay")]
        overlays: Vec<String>,
        #[arg(long)]
        no_dots: bool,
    },
    /// Tab-separated group table.
    Groups {
        /// `s=LO..HI,w=LO..HI`
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        stems: Option<PathBuf>,
    },
    /// Adams-style chart of the motivic lift of a classical chart.
    Motivic {
        #[arg(long)]
        chart: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suites: Vec<String>,
    /// Half-width of the (s, w) box for partition and vanishing scans.
    #[arg(long, default_value_t = 1000)]
    max: i64,
    #[arg(long, default_value_t = 10_000)]
    eta_max: i64,
    #[arg(long, default_value_t = 100)]
    kmax: i64,
    #[arg(long, default_value = ACCEPTANCE_WINDOW)]
    window: String,
    #[arg(long)]
    golden_dir: Option<PathBuf>,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

struct Context_ {
    pretty: bool,
    data_dir: PathBuf,
}

impl Context_ {
    fn stems(&self, explicit: Option<&Path>) -> Result<StemsTable> {
        let path = explicit.map_or_else(|| self.data_dir.join("stems.txt"), Path::to_path_buf);
        parse_stems(&read(&path)?).with_context(|| format!("invalid stems file {}", path.display()))
    }

    fn chart(&self, which: &str) -> Result<(ClassicalChart, String)> {
        if which == "sample" {
            let path = self.data_dir.join("sample_chart.txt");
            let text = if path.exists() {
                read(&path)?
            } else {
                SAMPLE_CHART.to_string()
            };
            let chart =
                parse_chart(&text).with_context(|| format!("invalid chart {}", path.display()))?;
            return Ok((chart, text));
        }
        let path = Path::new(which);
        let text = read(path)?;
        let chart =
            parse_chart(&text).with_context(|| format!("invalid chart {}", path.display()))?;
        Ok((chart, text))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context_ {
        pretty: cli.pretty,
        data_dir: cli.data_dir.unwrap_or_else(|| PathBuf::from(BUNDLED_DATA)),
    };
    match run(&ctx, cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// `Ok(false)` reports a failed check without an error message.
fn run(ctx: &Context_, command: Command) -> Result<bool> {
    match command {
        Command::Classify { s, w } => {
            let region = classify(s, w);
            if ctx.pretty {
                println!("({s},{w}) lies in the {region} region");
            } else {
                println!("region={region}");
            }
        }
        Command::Group { s, w, stems } => {
            let table = ctx.stems(stems.as_deref())?;
            let region = classify(s, w);
            let value = resolve_group(s, w, Some(&table));
            if ctx.pretty {
                let text = match &value {
                    GroupValue::Known(g, _) if g.is_trivial() => format!("pi_{{{s},{w}}} = 0"),
                    GroupValue::Known(g, gen) => {
                        format!("pi_{{{s},{w}}} = {g}, generated by {gen}")
                    }
                    GroupValue::ReducibleToClassical(_) => {
                        format!(
                            "pi_{{{s},{w}}} is the classical stem pi_{s}, not in the stems table"
                        )
                    }
                    GroupValue::Unknown => format!("pi_{{{s},{w}}} is not determined"),
                };
                println!("{text} ({region})");
            } else {
                println!("region={region}");
                println!(
                    "group={} generator={}",
                    value.group_string(),
                    value.generator_string()
                );
            }
        }
        Command::Ctau { s, w, chart } => {
            let (chart, _) = ctx.chart(&chart)?;
            let g = ctau_homotopy(&chart, s, w)?;
            if ctx.pretty {
                println!(
                    "pi_{{{s},{w}}}(C tau) = {g}, from the chart at ({s},{})",
                    2 * w - s
                );
            } else {
                println!("group={g}");
            }
        }
        Command::Localize { chart, max_steps } => {
            let (chart, _) = ctx.chart(&chart)?;
            for ((s, f), entry) in eta_localize_chart(&chart, max_steps) {
                let status = match entry.status {
                    Stabilization::Stable => "stable",
                    Stabilization::Unresolved => "unresolved",
                };
                let survivors: Vec<&str> =
                    entry.survivors().iter().map(|c| c.name.as_str()).collect();
                println!(
                    "s={s} f={f} status={status} rank={} survivors={}",
                    survivors.len(),
                    if survivors.is_empty() {
                        "-".to_string()
                    } else {
                        survivors.join(",")
                    }
                );
                for c in &entry.classes {
                    let fate = match &c.fate {
                        Fate::Survives { witness, steps } => {
                            format!("fate=survives witness={witness} steps={steps}")
                        }
                        Fate::Dies { steps } => format!("fate=dies steps={steps}"),
                        Fate::Unresolved => "fate=unresolved".to_string(),
                    };
                    println!("  class={} {fate}", c.name);
                }
            }
        }
        Command::Families { action } => match action {
            FamiliesAction::List => {
                for fam in builtin_families() {
                    println!(
                        "family={} base=({},{},{}) period=({},{},{}) annihilated_by={:?} note=\"{}\"",
                        fam.name,
                        fam.base.s,
                        fam.base.f,
                        fam.base.w,
                        fam.period.s,
                        fam.period.f,
                        fam.period.w,
                        fam.annihilated_by,
                        fam.note
                    );
                }
            }
            FamiliesAction::Check { kmax } => {
                if kmax < 0 {
                    bail!("--kmax must be nonnegative");
                }
                let stems = ctx.stems(None).ok();
                let report = sharpness_report(stems.as_ref(), kmax);
                print!("{report}");
                return Ok(!report.contains("on_line=false"));
            }
        },
        Command::MayCensus { max_stem } => {
            let gens = may_e1_generators(max_stem);
            let mut ok = true;
            for g in &gens {
                ok &= g.weight <= g.stem;
                println!("h{}{} stem={} weight={}", g.i, g.j, g.stem, g.weight);
            }
            println!("count={} weight_le_stem={ok}", gens.len());
            return Ok(ok);
        }
        Command::Chart { kind } => match kind {
            ChartKind::Regions {
                smax,
                out,
                stems,
                overlays,
                no_dots,
            } => {
                let table = ctx.stems(stems.as_deref())?;
                let mut style = ChartStyle::regions(smax);
                style.family_overlays = overlays;
                style.group_dots = !no_dots;
                let svg = region_chart_svg(&style, &StemsResolver(Some(&table)))?;
                write(&out, &svg)?;
                println!("wrote={} bytes={}", out.display(), svg.len());
            }
            ChartKind::Groups { window, out, stems } => {
                let table = ctx.stems(stems.as_deref())?;
                let window = BidegreeWindow::parse(&window)?;
                let tsv = groups_tsv(&window, &StemsResolver(Some(&table)));
                write(&out, &tsv)?;
                println!("wrote={} rows={}", out.display(), tsv.lines().count());
            }
            ChartKind::Motivic { chart, out } => {
                let (chart, _) = ctx.chart(&chart)?;
                let lift = lift_to_motivic(&chart)?;
                let f_max = chart.classes().map(|c| c.f).max().unwrap_or(0).max(1) + 1;
                let style = ChartStyle::adams(chart.s_max().max(1) + 1, f_max);
                let svg = motivic_chart_svg(&lift, &style)?;
                write(&out, &svg)?;
                println!("wrote={} bytes={}", out.display(), svg.len());
            }
        },
        Command::Ingest {
            chart,
            stems,
            validate,
        } => {
            if chart.is_none() && stems.is_none() {
                bail!("nothing to ingest: pass --chart and/or --stems");
            }
            let mut ok = true;
            if let Some(path) = chart {
                let text = read(&path)?;
                let parsed = motivic_core::chart::parse_chart_unchecked(&text)
                    .with_context(|| format!("cannot parse {}", path.display()))?;
                let violations = if validate {
                    validate_chart(&parsed)
                } else {
                    Vec::new()
                };
                println!(
                    "chart={} classes={} smax={} violations={}",
                    path.display(),
                    parsed.classes().count(),
                    parsed.s_max(),
                    violations.len()
                );
                for v in &violations {
                    println!("violation={v}");
                }
                ok &= violations.is_empty();
            }
            if let Some(path) = stems {
                let table = parse_stems(&read(&path)?)
                    .with_context(|| format!("invalid stems file {}", path.display()))?;
                println!(
                    "stems={} entries={} smax={}",
                    path.display(),
                    table.groups().len(),
                    table.s_max()
                );
            }
            return Ok(ok);
        }
        Command::Verify(args) => return verify(ctx, args),
    }
    Ok(true)
}

fn verify(ctx: &Context_, args: VerifyArgs) -> Result<bool> {
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites
            .iter()
            .map(|s| s.parse::<Suite>().map_err(anyhow::Error::msg))
            .collect::<Result<_>>()?
    };
    let (chart, chart_text) = ctx.chart("sample")?;
    let stems_path = ctx.data_dir.join("stems.txt");
    let stems_text = read(&stems_path)?;
    let stems = parse_stems(&stems_text)
        .with_context(|| format!("invalid stems file {}", stems_path.display()))?;
    let mut config = VerifyConfig {
        max: args.max,
        eta_max: args.eta_max,
        window: args.window,
        kmax: args.kmax,
        chart,
        chart_text,
        stems,
        stems_text,
        ..VerifyConfig::default()
    };
    if let Some(dir) = args.golden_dir {
        config.golden_dir = dir;
    }

    let mut all_passed = true;
    for suite in suites {
        if suite == Suite::Einfty {
            let report = einfty_report(&config.window)?;
            for row in &report.rows {
                println!(
                    "degree={} expected={} computed={} {}",
                    row.degree,
                    row.expected.join("+"),
                    if row.computed.is_empty() {
                        "0".to_string()
                    } else {
                        row.computed.join("+")
                    },
                    if row.matches() { "ok" } else { "MISMATCH" }
                );
            }
        }
        for check in run_suite(suite, &config) {
            all_passed &= check.passed;
            println!("{check}");
        }
    }
    println!("result={}", if all_passed { "PASS" } else { "FAIL" });
    Ok(all_passed)
}
