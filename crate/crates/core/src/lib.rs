//! Region structure of the 2-complete motivic stable homotopy groups
//! `π_{s,w}` over C.
//!
//! The crate runs the η-localized motivic Adams–Novikov spectral sequence,
//! sorts `(s, w)` into the four regions, resolves the groups it can, lifts
//! classical chart data to motivic data, and renders deterministic charts.

pub mod algebra;
pub mod chart;
pub mod degree;
pub mod dga;
pub mod error;
pub mod f2;
pub mod families;
pub mod group;
pub mod regions;
pub mod render;
pub mod verify;

pub use algebra::{
    enumerate_basis, ExponentRange, GeneratorSpec, Monomial, MonomialBasis, Presentation, Window,
};
pub use chart::{
    ctau_homotopy, eta_localize_chart, lift_to_motivic, parse_chart, parse_stems, serialize_chart,
    serialize_stems, validate_chart, ClassicalChart, ClassicalChartClass, MotivicLift, StemsTable,
};
pub use degree::{Bidegree, Tridegree};
pub use dga::{
    localized_motivic_anss, run_to_einfty, turn_page, DifferentialSpec, PageState, Polynomial,
    Validity,
};
pub use error::{AlgebraError, ChartError, DifferentialError, FamilyError, RenderError};
pub use group::GroupDescriptor;
pub use regions::{classify, eta_local_group, resolve_group, GroupValue, RegionLabel};
pub use render::{
    groups_tsv, motivic_chart_svg, region_chart_svg, BidegreeWindow, ChartStyle, StemsResolver,
};
