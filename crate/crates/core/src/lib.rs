//! Sharp constants of boundary-trace Poincaré inequalities for planar convex
//! bodies.
//!
//! For a convex body Ω the median and mean-value trace constants reduce to a
//! one-parameter optimization over chords: a straight cut whose endpoints
//! split the boundary into arcs of lengths `a` and `L - a`. This crate
//! evaluates the chord functional exactly on segment/arc boundaries, runs the
//! outer optimization over `a` (including the analytic `a → 0` limit), and
//! provides the closed forms for balls and stadiums.
//!
//! Alongside, [`cauchy`] implements both integral-geometric perimeter
//! formulas for simple polygons and [`oracle`] gives brute-force lower
//! bounds by enumerating cuts.

pub mod cauchy;
pub mod chords;
pub mod constants;
pub mod geom;
pub mod numeric;
pub mod oracle;

pub use chords::{chord_length, corner_limit_factor, min_chord, stationarity_residual, Chord, MinChordResult};
pub use constants::{
    ball_constant, c_med_convex, c_mv_convex, stadium_c_mv_closed_form, stadium_min_chord_closed_form,
    trace_constants, ConstantKind, Maximizer, TraceConstantReport,
};
pub use geom::{ConvexBody, GeomError, Point2, Polygon, StadiumParams};
