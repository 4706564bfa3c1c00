//! Cauchy perimeter formulas on simple polygons.
//!
//! For a direction ν with orthogonal line ν⊥, two one-dimensional quantities
//! are computed per direction:
//!
//! * the crossing integral `∫_{ν⊥} #(∂G ∩ (z + Rν)) dz`, which by the coarea
//!   identity equals `Σ_e |e · ν⊥|` over the edges and is evaluated exactly;
//! * the essential projection, the measure of those `z` whose line meets the
//!   interior in positive length, from a triangulation and an interval union.
//!
//! Averaging the first over the circle recovers the perimeter of every simple
//! polygon; averaging the second recovers it only for convex polygons and
//! falls short otherwise.

mod triangulate;

use std::f64::consts::TAU;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::geom::{Point2, Polygon};
use crate::numeric::compensated_sum;

pub use triangulate::triangulate;

pub const MIN_QUADRATURE: usize = 16;
pub const DEFAULT_QUADRATURE: usize = 4096;
/// Tolerance on the convexity gap, relative to the perimeter.
pub const CONVEXITY_GAP_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CauchyError {
    #[error("ear clipping stalled with {remaining} vertices left; polygon is not simple")]
    TriangulationFailure { remaining: usize },
    #[error("quadrature needs at least {MIN_QUADRATURE} points, got {0}")]
    QuadratureTooSmall(usize),
}

/// A unit direction ν and the unit vector spanning ν⊥.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Direction {
    pub theta: f64,
    pub nu: Point2,
    pub nu_perp: Point2,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        let theta = theta.rem_euclid(TAU);
        let nu = Point2::from_angle(theta);
        Self {
            theta,
            nu,
            nu_perp: nu.perp(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ProjectionResult {
    pub direction: Direction,
    pub essential_extent: f64,
    pub crossing_integral: f64,
}

/// `∫_{ν⊥} #((∂G)_z) dz`, computed as `Σ_e len_e · |n_e · ν|`.
pub fn crossing_integral(poly: &Polygon, dir: Direction) -> f64 {
    compensated_sum(poly.edges().map(|(a, b)| (b - a).dot(dir.nu_perp).abs()))
}

/// Polygon triangulation prepared for repeated projection.
#[derive(Clone, Debug)]
pub struct ProjectionTable {
    triangles: Vec<[Point2; 3]>,
    merge_tol: f64,
}

impl ProjectionTable {
    pub fn new(poly: &Polygon) -> Result<Self, CauchyError> {
        let diameter = poly.diameter();
        let needle = 1e-14 * diameter * diameter;
        let triangles = triangulate(poly)?
            .into_iter()
            .filter(|t| triangulate::triangle_area(t) >= needle)
            .collect();
        Ok(Self {
            triangles,
            merge_tol: 1e-12 * diameter,
        })
    }

    /// Length of the union of the triangles' projections onto ν⊥.
    pub fn extent(&self, dir: Direction) -> f64 {
        let mut intervals: Vec<(f64, f64)> = self
            .triangles
            .iter()
            .map(|t| {
                let p = t.map(|v| v.dot(dir.nu_perp));
                (p[0].min(p[1]).min(p[2]), p[0].max(p[1]).max(p[2]))
            })
            .collect();
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut total = 0.0;
        let mut current: Option<(f64, f64)> = None;
        for (lo, hi) in intervals {
            current = match current {
                Some((clo, chi)) if lo <= chi + self.merge_tol => Some((clo, chi.max(hi))),
                Some((clo, chi)) => {
                    total += chi - clo;
                    Some((lo, hi))
                }
                None => Some((lo, hi)),
            };
        }
        if let Some((clo, chi)) = current {
            total += chi - clo;
        }
        total
    }
}

/// Measure of `{z ∈ ν⊥ : the line z + Rν meets the interior in positive length}`.
pub fn essential_projection_extent(poly: &Polygon, dir: Direction) -> Result<f64, CauchyError> {
    Ok(ProjectionTable::new(poly)?.extent(dir))
}

pub fn project(poly: &Polygon, dir: Direction) -> Result<ProjectionResult, CauchyError> {
    Ok(ProjectionResult {
        direction: dir,
        essential_extent: essential_projection_extent(poly, dir)?,
        crossing_integral: crossing_integral(poly, dir),
    })
}

/// Trapezoid rule on a uniform angle grid offset by half a step, summed in
/// grid order.
fn circle_average<F>(quadrature_points: usize, f: F) -> Result<f64, CauchyError>
where
    F: Fn(Direction) -> f64 + Sync,
{
    if quadrature_points < MIN_QUADRATURE {
        return Err(CauchyError::QuadratureTooSmall(quadrature_points));
    }
    let step = TAU / quadrature_points as f64;
    let values: Vec<f64> = (0..quadrature_points)
        .into_par_iter()
        .map(|k| f(Direction::new((k as f64 + 0.5) * step)))
        .collect();
    Ok(compensated_sum(values) * step)
}

/// `(1 / 2ω₁) ∫_{S¹} crossing_integral dν` with `ω₁ = 2`; equals the perimeter
/// of every simple polygon.
pub fn perimeter_by_crossings(poly: &Polygon, quadrature_points: usize) -> Result<f64, CauchyError> {
    Ok(circle_average(quadrature_points, |d| crossing_integral(poly, d))? / 4.0)
}

/// `(1 / ω₁) ∫_{S¹} essential_projection_extent dν`; equals the perimeter
/// exactly when the polygon is convex.
pub fn perimeter_by_projections(poly: &Polygon, quadrature_points: usize) -> Result<f64, CauchyError> {
    let table = ProjectionTable::new(poly)?;
    Ok(circle_average(quadrature_points, |d| table.extent(d))? / 2.0)
}

/// Crossing-formula perimeter minus projection-formula value.
pub fn convexity_gap(poly: &Polygon, quadrature_points: usize) -> Result<f64, CauchyError> {
    Ok(perimeter_by_crossings(poly, quadrature_points)? - perimeter_by_projections(poly, quadrature_points)?)
}

/// Convexity verdict from the gap: convex iff `gap ≤ CONVEXITY_GAP_TOL · P`.
pub fn classify_convex(poly: &Polygon, quadrature_points: usize) -> Result<bool, CauchyError> {
    Ok(convexity_gap(poly, quadrature_points)? <= CONVEXITY_GAP_TOL * poly.perimeter())
}
