//! Brute-force lower bounds for the trace constants by enumerating cuts.
//!
//! Every cut here is an admissible competitor, so the best ratio found is a
//! lower bound for the corresponding constant. On convex bodies the chord
//! optimizer must dominate these values; the two-segment family exists to
//! falsify the reduction to straight cuts if it were wrong.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::geom::{ConvexBody, Point2};

pub const MIN_RESOLUTION: usize = 32;
/// Cap on the boundary resolution for polyline cuts.
pub const MAX_POLYLINE_RESOLUTION: usize = 128;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("resolution {0} below the minimum of {MIN_RESOLUTION}")]
    ResolutionTooLow(usize),
    #[error("resolution {0} above {MAX_POLYLINE_RESOLUTION} for polyline cuts")]
    ResolutionTooHigh(usize),
    #[error("max_segments must be 1 or 2, got {0}")]
    UnsupportedSegments(usize),
}

/// A cut from `x(s1)` to `x(s2)`, straight or bent once at `bend`, bounding
/// the region whose boundary arc runs counterclockwise from `s1` to `s2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CutCandidate {
    pub s1: f64,
    pub s2: f64,
    pub bend: Option<Point2>,
    pub cut_length: f64,
    /// Arc from `s1` to `s2` and its complement.
    pub arc_lengths: (f64, f64),
    pub ratio_med: f64,
    pub ratio_mv: f64,
}

impl CutCandidate {
    fn new(perimeter: f64, s1: f64, s2: f64, bend: Option<Point2>, cut_length: f64) -> Self {
        let a = (s2 - s1).rem_euclid(perimeter);
        let rest = perimeter - a;
        Self {
            s1,
            s2,
            bend,
            cut_length,
            arc_lengths: (a, rest),
            ratio_med: a.min(rest) / cut_length,
            ratio_mv: 2.0 / perimeter * a * rest / cut_length,
        }
    }

    fn key(&self) -> (f64, f64) {
        (self.s1, self.s2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub best_med: f64,
    pub best_mv: f64,
    pub best_cut_med: CutCandidate,
    pub best_cut_mv: CutCandidate,
    pub resolution: usize,
}

/// Running maxima of both ratios; ties keep the lexicographically smaller
/// `(s1, s2)`.
#[derive(Clone, Copy, Debug)]
struct Best {
    med: CutCandidate,
    mv: CutCandidate,
}

fn better(new: f64, new_key: (f64, f64), old: f64, old_key: (f64, f64)) -> bool {
    new > old || (new == old && new_key < old_key)
}

impl Best {
    fn seed(c: CutCandidate) -> Self {
        Self { med: c, mv: c }
    }

    fn offer(&mut self, c: CutCandidate) {
        if better(c.ratio_med, c.key(), self.med.ratio_med, self.med.key()) {
            self.med = c;
        }
        if better(c.ratio_mv, c.key(), self.mv.ratio_mv, self.mv.key()) {
            self.mv = c;
        }
    }

    fn merge(mut self, other: Best) -> Best {
        self.offer(other.med);
        self.offer(other.mv);
        self
    }

    fn into_report(self, resolution: usize) -> OracleReport {
        OracleReport {
            best_med: self.med.ratio_med,
            best_mv: self.mv.ratio_mv,
            best_cut_med: self.med,
            best_cut_mv: self.mv,
            resolution,
        }
    }
}

/// Uniform grid of `resolution` arc positions plus every junction.
fn boundary_samples(body: &ConvexBody, resolution: usize) -> Vec<f64> {
    let l = body.perimeter();
    let mut s: Vec<f64> = (0..resolution)
        .map(|i| i as f64 * l / resolution as f64)
        .chain(body.junctions().iter().map(|j| j.s))
        .collect();
    s.sort_by(f64::total_cmp);
    s.dedup();
    s
}

fn reduce_ordered(partials: Vec<Option<Best>>) -> Option<Best> {
    partials
        .into_iter()
        .flatten()
        .reduce(Best::merge)
}

/// Maximizes both ratios over all straight cuts between pairs of boundary
/// samples.
pub fn enumerate_segment_cuts(body: &ConvexBody, resolution: usize) -> Result<OracleReport, OracleError> {
    if resolution < MIN_RESOLUTION {
        return Err(OracleError::ResolutionTooLow(resolution));
    }
    let l = body.perimeter();
    let s = boundary_samples(body, resolution);
    let x: Vec<Point2> = s.iter().map(|&si| body.boundary_point(si)).collect();
    let partials: Vec<Option<Best>> = (0..s.len())
        .into_par_iter()
        .map(|i| {
            let mut best: Option<Best> = None;
            for j in i + 1..s.len() {
                let len = x[i].distance(x[j]);
                if len <= 0.0 {
                    continue;
                }
                let c = CutCandidate::new(l, s[i], s[j], None, len);
                match best.as_mut() {
                    Some(b) => b.offer(c),
                    None => best = Some(Best::seed(c)),
                }
            }
            best
        })
        .collect();
    Ok(reduce_ordered(partials)
        .expect("at least two distinct boundary samples")
        .into_report(resolution))
}

/// Extends [`enumerate_segment_cuts`] with cuts bent once at a point `q` of the
/// closed body: boundary samples, points `c + t (x_k − c)` toward the sample
/// centroid `c`, and midpoints of sample pairs. Polylines with a leg lying on
/// a flat part of the boundary, or folding back on themselves, are discarded.
pub fn enumerate_polyline_cuts(
    body: &ConvexBody,
    resolution: usize,
    max_segments: usize,
) -> Result<OracleReport, OracleError> {
    if !(1..=2).contains(&max_segments) {
        return Err(OracleError::UnsupportedSegments(max_segments));
    }
    if resolution > MAX_POLYLINE_RESOLUTION {
        return Err(OracleError::ResolutionTooHigh(resolution));
    }
    let straight = enumerate_segment_cuts(body, resolution)?;
    if max_segments == 1 {
        return Ok(straight);
    }
    let l = body.perimeter();
    let s = boundary_samples(body, resolution);
    let x: Vec<Point2> = s.iter().map(|&si| body.boundary_point(si)).collect();
    let scale = body.diameter_estimate();
    let on_boundary_tol = 1e-12 * scale;

    let centroid = x.iter().fold(Point2::ORIGIN, |acc, &p| acc + p) / x.len() as f64;
    let mut bends: Vec<Point2> = x.clone();
    for &t in &[0.25, 0.5, 0.75, 0.9] {
        bends.extend(x.iter().map(|&p| centroid.lerp(p, t)));
    }
    for i in 0..x.len() {
        for j in i + 2..x.len() {
            bends.push(x[i].lerp(x[j], 0.5));
        }
    }

    let leg_ok = |p: Point2, q: Point2| -> bool {
        p.distance(q) > on_boundary_tol
            && body.distance_to_segments(p.lerp(q, 0.5)) > on_boundary_tol
    };

    let partials: Vec<Option<Best>> = (0..s.len())
        .into_par_iter()
        .map(|i| {
            let mut best: Option<Best> = None;
            for j in i + 1..s.len() {
                for &q in &bends {
                    let (u, v) = (q - x[i], x[j] - q);
                    let folded = u.cross(v).abs() <= 1e-14 * scale * scale && u.dot(v) < 0.0;
                    if folded || !leg_ok(x[i], q) || !leg_ok(q, x[j]) {
                        continue;
                    }
                    let c = CutCandidate::new(l, s[i], s[j], Some(q), u.norm() + v.norm());
                    match best.as_mut() {
                        Some(b) => b.offer(c),
                        None => best = Some(Best::seed(c)),
                    }
                }
            }
            best
        })
        .collect();
    let mut best = Best::seed(straight.best_cut_med);
    best.offer(straight.best_cut_mv);
    if let Some(bent) = reduce_ordered(partials) {
        best = best.merge(bent);
    }
    Ok(best.into_report(resolution))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{c_med_convex, c_mv_convex};
    use crate::geom::{shapes, StadiumParams};
    use std::f64::consts::PI;

    #[test]
    fn disk_median_cut_is_a_diameter() {
        let disk = ConvexBody::unit_disk();
        let r = enumerate_segment_cuts(&disk, 512).unwrap();
        assert!((r.best_med - PI / 2.0).abs() < 1e-3);
        assert!((r.best_cut_med.cut_length - 2.0).abs() < 1e-3);
    }

    #[test]
    fn stadium_mean_value_from_below() {
        let st = ConvexBody::stadium(StadiumParams::new(1.0, 2.0).unwrap()).unwrap();
        let r = enumerate_segment_cuts(&st, 1024).unwrap();
        let exact = (2.0 + PI) / 2.0;
        assert!(r.best_mv <= exact + 1e-9);
        assert!(r.best_mv > exact - 2e-2);
    }

    #[test]
    fn square_median_agrees_with_optimizer() {
        let sq = shapes::unit_square();
        let r = enumerate_segment_cuts(&sq, 512).unwrap();
        let opt = c_med_convex(&sq, 512, 1024).unwrap();
        assert!((r.best_med - opt.value).abs() < 1e-3);
    }

    #[test]
    fn monotone_in_nested_resolution() {
        let body = crate::geom::random_convex_body(5, 9, 0.5).unwrap();
        let coarse = enumerate_segment_cuts(&body, 64).unwrap();
        let fine = enumerate_segment_cuts(&body, 128).unwrap();
        assert!(fine.best_med >= coarse.best_med);
        assert!(fine.best_mv >= coarse.best_mv);
    }

    #[test]
    fn bent_cuts_never_beat_straight_ones() {
        let bodies = [
            ConvexBody::unit_disk(),
            shapes::unit_square(),
            shapes::equilateral_triangle(),
        ];
        for body in &bodies {
            let one = enumerate_polyline_cuts(body, 64, 1).unwrap();
            let two = enumerate_polyline_cuts(body, 64, 2).unwrap();
            assert!(two.best_mv <= one.best_mv + 1e-6);
            assert!(two.best_med <= one.best_med + 1e-6);
        }
    }

    #[test]
    fn corner_family_increases_toward_limit() {
        let sq = shapes::unit_square();
        let limit = c_mv_convex(&sq, 256, 512).unwrap().value;
        let mut prev = 0.0;
        for res in [64, 128, 256, 512] {
            let r = enumerate_segment_cuts(&sq, res).unwrap();
            assert!(r.best_mv >= prev && r.best_mv <= limit + 1e-9);
            prev = r.best_mv;
        }
        assert!(limit - prev < 2e-2);
    }

    #[test]
    fn guards() {
        let disk = ConvexBody::unit_disk();
        assert_eq!(enumerate_segment_cuts(&disk, 16), Err(OracleError::ResolutionTooLow(16)));
        assert_eq!(
            enumerate_polyline_cuts(&disk, 256, 2),
            Err(OracleError::ResolutionTooHigh(256))
        );
        assert_eq!(
            enumerate_polyline_cuts(&disk, 64, 3),
            Err(OracleError::UnsupportedSegments(3))
        );
    }
}
