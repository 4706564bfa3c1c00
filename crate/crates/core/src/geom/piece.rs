use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use super::point::{Point2, Similarity};

/// One smooth piece of a boundary chain.
///
/// Arcs are parametrized by angle `start_angle + sweep · t / (radius · |sweep|)`,
/// so a positive sweep is traversed counterclockwise around `center`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundaryPiece {
    Segment {
        start: Point2,
        end: Point2,
    },
    Arc {
        center: Point2,
        radius: f64,
        start_angle: f64,
        sweep: f64,
    },
}

impl BoundaryPiece {
    pub fn segment(start: Point2, end: Point2) -> Self {
        BoundaryPiece::Segment { start, end }
    }

    pub fn arc(center: Point2, radius: f64, start_angle: f64, sweep: f64) -> Self {
        BoundaryPiece::Arc {
            center,
            radius,
            start_angle,
            sweep,
        }
    }

    pub fn length(&self) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => start.distance(end),
            BoundaryPiece::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    /// Point at arc-length `t` from the start of the piece.
    #[inline]
    pub fn point_at(&self, t: f64) -> Point2 {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                let len = start.distance(end);
                start + (end - start) * (t / len)
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => center + Point2::from_angle(start_angle + sweep.signum() * t / radius) * radius,
        }
    }

    /// Unit tangent (direction of travel) at arc-length `t`.
    #[inline]
    pub fn tangent_at(&self, t: f64) -> Point2 {
        match *self {
            BoundaryPiece::Segment { start, end } => (end - start).normalized(),
            BoundaryPiece::Arc {
                radius,
                start_angle,
                sweep,
                ..
            } => {
                let dir = sweep.signum();
                Point2::from_angle(start_angle + dir * t / radius).perp() * dir
            }
        }
    }

    /// `point_at(t2) − point_at(t1)` without cancellation for nearby
    /// parameters.
    #[inline]
    pub fn displacement(&self, t1: f64, t2: f64) -> Point2 {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                let len = start.distance(end);
                (end - start) * ((t2 - t1) / len)
            }
            BoundaryPiece::Arc {
                radius,
                start_angle,
                sweep,
                ..
            } => {
                let dir = sweep.signum();
                let half = dir * (t2 - t1) / (2.0 * radius);
                let mid = start_angle + dir * (t1 + t2) / (2.0 * radius);
                let (s_mid, c_mid) = mid.sin_cos();
                Point2::new(-s_mid, c_mid) * (2.0 * radius * half.sin())
            }
        }
    }

    pub fn start_point(&self) -> Point2 {
        self.point_at(0.0)
    }

    pub fn end_point(&self) -> Point2 {
        match *self {
            BoundaryPiece::Segment { end, .. } => end,
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => center + Point2::from_angle(start_angle + sweep) * radius,
        }
    }

    pub fn start_tangent(&self) -> Point2 {
        self.tangent_at(0.0)
    }

    pub fn end_tangent(&self) -> Point2 {
        match *self {
            BoundaryPiece::Segment { start, end } => (end - start).normalized(),
            BoundaryPiece::Arc {
                start_angle, sweep, ..
            } => Point2::from_angle(start_angle + sweep).perp() * sweep.signum(),
        }
    }

    /// Signed turning of the tangent along the piece (zero for segments).
    pub fn turning(&self) -> f64 {
        match *self {
            BoundaryPiece::Segment { .. } => 0.0,
            BoundaryPiece::Arc { sweep, .. } => sweep,
        }
    }

    pub fn curvature(&self) -> f64 {
        match *self {
            BoundaryPiece::Segment { .. } => 0.0,
            BoundaryPiece::Arc { radius, .. } => 1.0 / radius,
        }
    }

    pub fn transformed(&self, t: &Similarity) -> Self {
        match *self {
            BoundaryPiece::Segment { start, end } => BoundaryPiece::Segment {
                start: t.apply(start),
                end: t.apply(end),
            },
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => BoundaryPiece::Arc {
                center: t.apply(center),
                radius: radius * t.scale,
                start_angle: (start_angle + t.rotation).rem_euclid(TAU),
                sweep,
            },
        }
    }

    /// Distance from `p` to the piece, used only for segments in practice.
    pub fn distance_to(&self, p: Point2) -> f64 {
        match *self {
            BoundaryPiece::Segment { start, end } => {
                let d = end - start;
                let t = ((p - start).dot(d) / d.dot(d)).clamp(0.0, 1.0);
                p.distance(start + d * t)
            }
            BoundaryPiece::Arc {
                center,
                radius,
                start_angle,
                sweep,
            } => {
                let v = p - center;
                let ang = v.y.atan2(v.x);
                let rel = if sweep >= 0.0 {
                    (ang - start_angle).rem_euclid(TAU)
                } else {
                    (start_angle - ang).rem_euclid(TAU)
                };
                if rel <= sweep.abs() {
                    (v.norm() - radius).abs()
                } else {
                    p.distance(self.start_point()).min(p.distance(self.end_point()))
                }
            }
        }
    }
}
