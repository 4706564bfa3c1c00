//! The chord functional `ℓ_a(s) = |x(s + a) − x(s)|` on a convex boundary and
//! its minimum over `s` for a fixed arc split `a`.

use serde::Serialize;
use thiserror::Error;

use crate::geom::{ConvexBody, GeomError, Point2};
use crate::numeric::golden_min;

/// Smallest accepted s-grid.
pub const MIN_S_GRID: usize = 64;
/// Default s-grid.
pub const DEFAULT_S_GRID: usize = 4096;
/// Target width (relative to the perimeter) of refined brackets in `s`.
pub const S_BRACKET_TOL: f64 = 1e-10;
/// At most this many local minima of the sampled profile are refined.
const MAX_REFINED_BRACKETS: usize = 32;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ChordError {
    #[error("arc split a = {a} outside (0, L/2] with L/2 = {half_perimeter}")]
    OutOfRange { a: f64, half_perimeter: f64 },
    #[error("s-grid of {grid} points is below the minimum of {MIN_S_GRID}")]
    GridTooSmall { grid: usize },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// A straight cut between boundary points `x(s)` and `x(s + a)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Chord {
    pub s: f64,
    pub a: f64,
    pub length: f64,
    pub endpoints: (Point2, Point2),
}

impl Chord {
    pub fn new(body: &ConvexBody, s: f64, a: f64) -> Result<Self, ChordError> {
        check_split(body, a)?;
        let s = body.wrap(s);
        let p = body.boundary_point(s);
        let q = body.boundary_point(s + a);
        Ok(Self {
            s,
            a,
            length: body.chord_vector(s, a).norm(),
            endpoints: (p, q),
        })
    }
}

/// Minimum of the chord functional for one arc split.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MinChordResult {
    pub a: f64,
    pub min_length: f64,
    pub argmin_s: f64,
    /// Normalized stationarity defect at the minimizer; `None` when the
    /// minimizer sits at a corner of the boundary.
    pub residual: Option<f64>,
    /// Width of the final bracket around `argmin_s`.
    pub bracket_width: f64,
}

fn check_split(body: &ConvexBody, a: f64) -> Result<(), ChordError> {
    let half = body.perimeter() / 2.0;
    if !(a > 0.0 && a <= half * (1.0 + 1e-12)) {
        return Err(ChordError::OutOfRange {
            a,
            half_perimeter: half,
        });
    }
    Ok(())
}

#[inline]
fn raw_chord(body: &ConvexBody, s: f64, a: f64) -> f64 {
    body.chord_vector(s, a).norm()
}

pub fn chord_length(body: &ConvexBody, s: f64, a: f64) -> Result<f64, ChordError> {
    check_split(body, a)?;
    Ok(raw_chord(body, s, a))
}

/// Sample positions for the s-scan: a uniform grid plus every junction `s_j`
/// and `s_j − a`, so that each kink of `ℓ_a` is sampled exactly, and
/// `s_j − a/2`, the symmetric chord across a corner, whose dip can be
/// narrower than the grid spacing.
fn scan_positions(body: &ConvexBody, a: f64, grid: usize) -> Vec<f64> {
    let l = body.perimeter();
    let mut s: Vec<f64> = (0..grid).map(|i| i as f64 * l / grid as f64).collect();
    for j in body.junctions() {
        s.push(j.s);
        s.push(body.wrap(j.s - a));
        s.push(body.wrap(j.s - a / 2.0));
    }
    s.sort_by(f64::total_cmp);
    s.dedup();
    s
}

/// Global minimum of `ℓ_a` over `s ∈ [0, L)`.
///
/// The scan over [`scan_positions`] locates the local minima of the sampled
/// profile; the most promising brackets are then refined by golden-section
/// search. Between consecutive samples `ℓ_a` is smooth with
/// `|ℓ''| ≤ 4/ℓ + 2κ_max`, so a bracket whose samples exceed the incumbent by
/// more than the interpolation bound cannot hold the minimum and is skipped.
pub fn min_chord(body: &ConvexBody, a: f64, grid: usize) -> Result<MinChordResult, ChordError> {
    check_split(body, a)?;
    if grid < MIN_S_GRID {
        return Err(ChordError::GridTooSmall { grid });
    }
    let l = body.perimeter();
    let s = scan_positions(body, a, grid);
    let f: Vec<f64> = s.iter().map(|&si| raw_chord(body, si, a)).collect();
    let n = s.len();

    let mut candidates: Vec<usize> = (0..n)
        .filter(|&k| f[k] <= f[(k + n - 1) % n] && f[k] <= f[(k + 1) % n])
        .collect();
    candidates.sort_by(|&i, &j| f[i].total_cmp(&f[j]).then(s[i].total_cmp(&s[j])));

    let kappa = body.max_curvature();
    let mut best_len = f64::INFINITY;
    let mut best_s = 0.0;
    let mut best_width = 0.0;
    for &k in candidates.iter().take(MAX_REFINED_BRACKETS) {
        let lo = if k == 0 { s[n - 1] - l } else { s[k - 1] };
        let hi = if k == n - 1 { s[0] + l } else { s[k + 1] };
        let h = (hi - lo).max(0.0);
        let curvature_bound = 4.0 / f[k] + 2.0 * kappa;
        if f[k] - curvature_bound * h * h / 8.0 > best_len {
            continue;
        }
        let (gs, gv, width) = golden_min(|x| raw_chord(body, x, a), lo, hi, S_BRACKET_TOL * l);
        let (cand_s, cand_len) = if gv < f[k] { (body.wrap(gs), gv) } else { (s[k], f[k]) };
        if cand_len < best_len || (cand_len == best_len && cand_s < best_s) {
            best_len = cand_len;
            best_s = cand_s;
            best_width = width;
        }
    }
    let residual = stationarity_residual(body, best_s, a).ok();
    Ok(MinChordResult {
        a,
        min_length: best_len,
        argmin_s: best_s,
        residual,
        bracket_width: best_width,
    })
}

/// `(x(s+a) − x(s)) · (x'(s+a) − x'(s)) / ℓ_a(s)`, the derivative of `ℓ_a` in
/// `s`. Fails if either endpoint sits at a corner.
pub fn stationarity_residual(body: &ConvexBody, s: f64, a: f64) -> Result<f64, ChordError> {
    check_split(body, a)?;
    let t0 = body.boundary_tangent(s)?;
    let t1 = body.boundary_tangent(s + a)?;
    let d = body.chord_vector(s, a);
    Ok(d.dot(t1 - t0) / d.norm())
}

/// `lim_{a→0} a / min_s ℓ_a(s)`: `1 / sin(θ/2)` for the sharpest interior
/// corner angle θ, and 1 for a C¹ boundary.
pub fn corner_limit_factor(body: &ConvexBody) -> f64 {
    let max_turn = body.corners().map(|j| j.turn).fold(0.0, f64::max);
    // interior angle θ = π − turn, so sin(θ/2) = cos(turn/2)
    1.0 / (max_turn / 2.0).cos()
}
