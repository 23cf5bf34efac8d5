//! Crepant-resolution certificates for cyclic quotient singularities.
//!
//! A chart is an integer matrix whose rows are exponent vectors of the chart
//! coordinates. The dual cone of a chart is spanned by the columns of its
//! inverse, which is how charts and fans are related here.

pub mod chart;
pub mod io;
mod linalg;
pub mod quotient;
pub mod triangulation;

pub use chart::{
    chart_from_cone, cone_from_chart, lift_action, verify_chart_crepancy, verify_chart_invariance, Chart,
    CrepancyReport, Ray,
};
pub use io::{
    bundled_chart_sets, bundled_fans, parse_chart_sets, parse_triangulations, ChartRecord, ChartSet, ChartVerdict,
    TriangulationJson, BUNDLED_CHARTS_JSON, BUNDLED_FANS_JSON,
};
pub use linalg::det;
pub use quotient::{age_histogram, element_age, junior_elements, CyclicQuotient};
pub use triangulation::{
    lattice_index, rays_are_group_points, verify_triangulation, Triangulation, TriangulationReport,
};
