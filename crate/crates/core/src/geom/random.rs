use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::body::ConvexBody;
use super::piece::BoundaryPiece;
use super::point::Point2;
use super::polygon::{convex_hull, Polygon};
use super::GeomError;

const MAX_ATTEMPTS: usize = 16;
/// Corners flatter than this are left sharp; a fillet there would need a
/// huge, numerically useless radius.
const MIN_FILLET_TURN: f64 = 1e-3;

/// Convex hull of `n_points` uniform samples in the unit disk, with corners
/// rounded by tangent arcs. `smoothing` scales the fillet tangent length
/// from 0 (sharp polygon) to 1 (half the shorter adjacent edge).
pub fn random_convex_body(seed: u64, n_points: usize, smoothing: f64) -> Result<ConvexBody, GeomError> {
    if n_points < 3 {
        return Err(GeomError::InvalidParams(format!(
            "need at least 3 points, got {n_points}"
        )));
    }
    if !(0.0..=1.0).contains(&smoothing) {
        return Err(GeomError::InvalidParams(format!(
            "smoothing must lie in [0, 1], got {smoothing}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points: Vec<Point2> = (0..n_points)
            .map(|_| {
                let r = rng.gen::<f64>().sqrt();
                let theta = rng.gen::<f64>() * std::f64::consts::TAU;
                Point2::from_angle(theta) * r
            })
            .collect();
        let hull = convex_hull(&points);
        if hull.len() < 3 || super::polygon::signed_area(&hull) < 1e-9 {
            continue;
        }
        return filleted_body(&hull, smoothing);
    }
    Err(GeomError::DegenerateHull {
        attempts: MAX_ATTEMPTS,
    })
}

/// Builds the boundary of a convex polygon with each corner replaced by an
/// arc tangent to both adjacent edges.
pub fn filleted_body(hull: &[Point2], smoothing: f64) -> Result<ConvexBody, GeomError> {
    let k = hull.len();
    let perimeter: f64 = (0..k).map(|i| hull[i].distance(hull[(i + 1) % k])).sum();
    // Per vertex: (tangent point on incoming edge, tangent point on outgoing edge, arc).
    let corners: Vec<(Point2, Point2, Option<BoundaryPiece>)> = (0..k)
        .map(|i| {
            let prev = hull[(i + k - 1) % k];
            let v = hull[i];
            let next = hull[(i + 1) % k];
            let e_in = v.distance(prev);
            let e_out = next.distance(v);
            let u_in = (v - prev) / e_in;
            let u_out = (next - v) / e_out;
            let turn = u_in.cross(u_out).atan2(u_in.dot(u_out));
            let t = smoothing * e_in.min(e_out) / 2.0;
            if t <= 0.0 || turn < MIN_FILLET_TURN {
                return (v, v, None);
            }
            let radius = t / (turn / 2.0).tan();
            let p = v - u_in * t;
            let q = v + u_out * t;
            let center = p + u_in.perp() * radius;
            let start = p - center;
            let arc = BoundaryPiece::arc(center, radius, start.y.atan2(start.x), turn);
            (p, q, Some(arc))
        })
        .collect();
    let mut pieces = Vec::with_capacity(2 * k);
    for i in 0..k {
        let from = corners[i].1;
        let to = corners[(i + 1) % k].0;
        if from.distance(to) > 1e-13 * perimeter {
            pieces.push(BoundaryPiece::segment(from, to));
        }
        if let Some(arc) = corners[(i + 1) % k].2 {
            pieces.push(arc);
        }
    }
    ConvexBody::new(pieces)
}

/// Convex hull of `n_points` uniform samples in the unit disk, as a polygon.
pub fn random_convex_polygon(seed: u64, n_points: usize) -> Result<Polygon, GeomError> {
    let body = random_convex_body(seed, n_points, 0.0)?;
    Polygon::new(body.pieces().iter().map(|p| p.start_point()).collect())
}

/// Star-shaped simple polygon: `n_vertices` jittered angles around the origin
/// with radii in `[0.3, 1]`. Usually nonconvex.
pub fn random_star_polygon(seed: u64, n_vertices: usize) -> Result<Polygon, GeomError> {
    if n_vertices < 3 {
        return Err(GeomError::InvalidParams(format!(
            "need at least 3 vertices, got {n_vertices}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = std::f64::consts::TAU / n_vertices as f64;
    let vertices = (0..n_vertices)
        .map(|i| {
            let theta = (i as f64 + 0.8 * rng.gen::<f64>()) * step;
            let r = 0.3 + 0.7 * rng.gen::<f64>();
            Point2::from_angle(theta) * r
        })
        .collect();
    Polygon::new(vertices)
}

/// Reflects one vertex of a convex polygon across the line through its
/// neighbours. Among the reflections that keep the polygon simple, picks the
/// one that removes the most hull perimeter. `None` if no vertex qualifies.
pub fn dent_polygon(poly: &Polygon) -> Option<Polygon> {
    let v = poly.vertices();
    let n = v.len();
    if n < 4 {
        return None;
    }
    let mut best: Option<(f64, Polygon)> = None;
    for i in 0..n {
        let prev = v[(i + n - 1) % n];
        let next = v[(i + 1) % n];
        let axis = (next - prev).normalized();
        let rel = v[i] - prev;
        let foot = prev + axis * rel.dot(axis);
        let reflected = foot * 2.0 - v[i];
        let mut dented = v.to_vec();
        dented[i] = reflected;
        let excess = prev.distance(v[i]) + v[i].distance(next) - prev.distance(next);
        if let Ok(p) = Polygon::new(dented) {
            if best.as_ref().map_or(true, |(e, _)| excess > *e) {
                best = Some((excess, p));
            }
        }
    }
    best.map(|(_, p)| p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygonal_hull_is_valid() {
        let body = random_convex_body(1, 8, 0.0).unwrap();
        assert!(body.pieces().len() <= 8);
        assert!(body.pieces().len() >= 3);
        assert!(body.pieces().iter().all(|p| matches!(p, BoundaryPiece::Segment { .. })));
    }

    #[test]
    fn full_smoothing_gives_c1_boundary() {
        for seed in 0..20 {
            let body = random_convex_body(seed, 10, 1.0).unwrap();
            assert!(body.corners().all(|j| j.turn < MIN_FILLET_TURN), "seed {seed}");
        }
    }

    #[test]
    fn deterministic_in_seed() {
        let a = random_convex_body(7, 12, 0.5).unwrap();
        let b = random_convex_body(7, 12, 0.5).unwrap();
        assert_eq!(a.pieces(), b.pieces());
        let c = random_convex_body(8, 12, 0.5).unwrap();
        assert_ne!(a.pieces(), c.pieces());
    }

    #[test]
    fn star_and_dent_generators() {
        for seed in 0..10 {
            let star = random_star_polygon(seed, 12).unwrap();
            assert_eq!(star.len(), 12);
            let convex = random_convex_polygon(seed, 12).unwrap();
            assert!(convex.is_convex());
            if let Some(d) = dent_polygon(&convex) {
                assert!(!d.is_convex());
                assert!(d.perimeter() > 0.0);
            }
        }
        let tri = random_convex_polygon(0, 3).unwrap();
        assert!(dent_polygon(&tri).is_none());
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(random_convex_body(0, 2, 0.0), Err(GeomError::InvalidParams(_))));
        assert!(matches!(random_convex_body(0, 5, 1.5), Err(GeomError::InvalidParams(_))));
    }
}
