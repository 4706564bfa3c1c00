use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::piece::BoundaryPiece;
use super::point::{Point2, Similarity};
use super::polygon::Polygon;
use super::GeomError;

/// Relative tolerance (in units of the perimeter) for closure and junction
/// proximity.
pub const CLOSURE_TOL: f64 = 1e-12;
/// Absolute tolerance on total turning and on individual junction turns.
pub const TURNING_TOL: f64 = 1e-9;

/// Parameters of the convex hull of two disks of radius `radius` whose centers
/// are `distance` apart.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct StadiumParams {
    pub radius: f64,
    pub distance: f64,
}

impl StadiumParams {
    pub fn new(radius: f64, distance: f64) -> Result<Self, GeomError> {
        let p = Self { radius, distance };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), GeomError> {
        if !(self.radius.is_finite() && self.radius > 0.0)
            || !(self.distance.is_finite() && self.distance >= 0.0)
        {
            return Err(GeomError::InvalidParams(format!(
                "stadium needs R > 0 and d >= 0, got R={}, d={}",
                self.radius, self.distance
            )));
        }
        Ok(())
    }

    /// Half the perimeter, `d + πR`.
    pub fn semiperimeter(&self) -> f64 {
        self.distance + PI * self.radius
    }
}

/// A junction between consecutive pieces: the arc-length position where a
/// piece starts, and the exterior turn of the tangent there.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Junction {
    pub s: f64,
    pub turn: f64,
}

impl Junction {
    pub fn is_corner(&self) -> bool {
        self.turn > TURNING_TOL
    }
}

/// A bounded convex planar body whose boundary is a closed counterclockwise
/// chain of segments and circular arcs, parametrized by arc length from the
/// start of the first piece.
#[derive(Clone, Debug, Serialize)]
pub struct ConvexBody {
    pieces: Vec<BoundaryPiece>,
    /// `cumulative[i]` is the arc-length position where piece `i` ends.
    cumulative: Vec<f64>,
    perimeter: f64,
    junctions: Vec<Junction>,
}

impl ConvexBody {
    /// Validates closure, positive piece lengths, outward-bulging arcs,
    /// nonnegative junction turns and total turning `2π`.
    pub fn new(pieces: Vec<BoundaryPiece>) -> Result<Self, GeomError> {
        if pieces.is_empty() {
            return Err(GeomError::InvalidBody("boundary has no pieces".into()));
        }
        let mut cumulative = Vec::with_capacity(pieces.len());
        let mut total = 0.0;
        for (i, piece) in pieces.iter().enumerate() {
            if let BoundaryPiece::Arc { radius, sweep, .. } = *piece {
                if !(radius.is_finite() && radius > 0.0) {
                    return Err(GeomError::InvalidBody(format!(
                        "piece {i}: arc radius must be positive, got {radius}"
                    )));
                }
                if sweep <= 0.0 {
                    return Err(GeomError::NotConvex(format!(
                        "piece {i}: arc turns clockwise"
                    )));
                }
                if sweep > TAU + TURNING_TOL {
                    return Err(GeomError::InvalidBody(format!(
                        "piece {i}: arc sweep exceeds a full turn"
                    )));
                }
            }
            let len = piece.length();
            if !(len.is_finite() && len > 0.0) {
                return Err(GeomError::InvalidBody(format!(
                    "piece {i} has non-positive length {len}"
                )));
            }
            total += len;
            cumulative.push(total);
        }
        let perimeter = total;
        let n = pieces.len();
        let mut junctions = Vec::with_capacity(n);
        let mut turning = 0.0;
        for i in 0..n {
            let prev = &pieces[(i + n - 1) % n];
            let cur = &pieces[i];
            let gap = prev.end_point().distance(cur.start_point());
            if gap > CLOSURE_TOL * perimeter {
                return Err(GeomError::InvalidBody(format!(
                    "boundary is not closed before piece {i}: gap {gap:e}"
                )));
            }
            let t_in = prev.end_tangent();
            let t_out = cur.start_tangent();
            let turn = t_in.cross(t_out).atan2(t_in.dot(t_out));
            if turn < -TURNING_TOL {
                return Err(GeomError::NotConvex(format!(
                    "boundary turns clockwise by {:e} at piece {i}",
                    -turn
                )));
            }
            if turn > PI - TURNING_TOL {
                return Err(GeomError::InvalidBody(format!("cusp at piece {i}")));
            }
            let turn = turn.max(0.0);
            turning += turn + cur.turning();
            let s = if i == 0 { 0.0 } else { cumulative[i - 1] };
            junctions.push(Junction { s, turn });
        }
        if (turning - TAU).abs() > TURNING_TOL {
            return Err(GeomError::NotConvex(format!(
                "total turning {turning} differs from 2π"
            )));
        }
        Ok(Self {
            pieces,
            cumulative,
            perimeter,
            junctions,
        })
    }

    /// Disk of the given radius, starting at angle 0.
    pub fn disk(center: Point2, radius: f64) -> Result<Self, GeomError> {
        if !(radius.is_finite() && radius > 0.0) {
            return Err(GeomError::InvalidParams(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        Self::new(vec![BoundaryPiece::arc(center, radius, 0.0, TAU)])
    }

    pub fn unit_disk() -> Self {
        Self::disk(Point2::ORIGIN, 1.0).expect("unit disk is valid")
    }

    /// Stadium with centers at `(∓d/2, 0)`; the boundary starts at the left
    /// end of the bottom flat part. For `d = 0` the result is a disk made of
    /// two half circles.
    pub fn stadium(params: StadiumParams) -> Result<Self, GeomError> {
        params.validate()?;
        let r = params.radius;
        let h = params.distance / 2.0;
        let right = Point2::new(h, 0.0);
        let left = Point2::new(-h, 0.0);
        let mut pieces = Vec::with_capacity(4);
        if h > 0.0 {
            pieces.push(BoundaryPiece::segment(Point2::new(-h, -r), Point2::new(h, -r)));
        }
        pieces.push(BoundaryPiece::arc(right, r, -PI / 2.0, PI));
        if h > 0.0 {
            pieces.push(BoundaryPiece::segment(Point2::new(h, r), Point2::new(-h, r)));
        }
        pieces.push(BoundaryPiece::arc(left, r, PI / 2.0, PI));
        Self::new(pieces)
    }

    /// Regular `k`-gon centered at the origin whose first edge is horizontal
    /// at the bottom.
    pub fn regular_polygon(k: usize, circumradius: f64) -> Result<Self, GeomError> {
        if k < 3 || !(circumradius.is_finite() && circumradius > 0.0) {
            return Err(GeomError::InvalidParams(format!(
                "regular polygon needs k >= 3 and circumradius > 0, got k={k}, r={circumradius}"
            )));
        }
        Self::from_polygon(&super::shapes::regular_polygon(k, circumradius))
    }

    /// Segment-only body with the polygon's vertices; the boundary starts at
    /// the first vertex.
    pub fn from_polygon(polygon: &Polygon) -> Result<Self, GeomError> {
        if !polygon.is_convex() {
            return Err(GeomError::NotConvex(
                "polygon fails the monotone turning check".into(),
            ));
        }
        let pieces = polygon
            .edges()
            .map(|(a, b)| BoundaryPiece::segment(a, b))
            .collect();
        Self::new(pieces)
    }

    pub fn pieces(&self) -> &[BoundaryPiece] {
        &self.pieces
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    pub fn junctions(&self) -> &[Junction] {
        &self.junctions
    }

    /// Junctions whose exterior turn is nonzero.
    pub fn corners(&self) -> impl Iterator<Item = &Junction> + '_ {
        self.junctions.iter().filter(|j| j.is_corner())
    }

    /// True if every junction is tangent-continuous.
    pub fn is_c1(&self) -> bool {
        self.corners().next().is_none()
    }

    pub fn max_curvature(&self) -> f64 {
        self.pieces
            .iter()
            .map(BoundaryPiece::curvature)
            .fold(0.0, f64::max)
    }

    /// Reduces `s` to `[0, L)`.
    #[inline]
    pub fn wrap(&self, s: f64) -> f64 {
        let r = s.rem_euclid(self.perimeter);
        if r >= self.perimeter {
            0.0
        } else {
            r
        }
    }

    /// Index of the piece containing `s ∈ [0, L)` and the local arc length.
    #[inline]
    fn locate(&self, s: f64) -> (usize, f64) {
        let idx = self
            .cumulative
            .partition_point(|&c| c <= s)
            .min(self.pieces.len() - 1);
        let start = if idx == 0 { 0.0 } else { self.cumulative[idx - 1] };
        let len = self.cumulative[idx] - start;
        (idx, (s - start).clamp(0.0, len))
    }

    /// Boundary point at arc length `s` (taken modulo the perimeter).
    #[inline]
    pub fn boundary_point(&self, s: f64) -> Point2 {
        let (idx, t) = self.locate(self.wrap(s));
        self.pieces[idx].point_at(t)
    }

    /// `x(s + a) − x(s)`. When both ends lie on the same or adjacent pieces
    /// the vector is accumulated from piece-local displacements, which keeps
    /// full relative precision for short chords.
    #[inline]
    pub fn chord_vector(&self, s: f64, a: f64) -> Point2 {
        let s1 = self.wrap(s);
        let s2 = self.wrap(s + a);
        let (i, t1) = self.locate(s1);
        let (j, t2) = self.locate(s2);
        let n = self.pieces.len();
        if i == j && t2 >= t1 {
            self.pieces[i].displacement(t1, t2)
        } else if j == (i + 1) % n && n > 1 {
            let head = &self.pieces[i];
            let len = self.piece_length(i);
            head.displacement(t1, len) + self.pieces[j].displacement(0.0, t2)
        } else {
            self.pieces[j].point_at(t2) - self.pieces[i].point_at(t1)
        }
    }

    fn piece_length(&self, i: usize) -> f64 {
        let start = if i == 0 { 0.0 } else { self.cumulative[i - 1] };
        self.cumulative[i] - start
    }

    /// Unit tangent at `s`. Fails at a corner, where only one-sided tangents
    /// exist.
    pub fn boundary_tangent(&self, s: f64) -> Result<Point2, GeomError> {
        let s = self.wrap(s);
        let tol = CLOSURE_TOL * self.perimeter;
        for j in self.corners() {
            let d = (s - j.s).abs();
            if d <= tol || self.perimeter - d <= tol {
                return Err(GeomError::AtVertex { s });
            }
        }
        let (idx, t) = self.locate(s);
        Ok(self.pieces[idx].tangent_at(t))
    }

    /// Tangent just after `s`.
    pub fn forward_tangent(&self, s: f64) -> Point2 {
        let (idx, t) = self.locate(self.wrap(s));
        self.pieces[idx].tangent_at(t)
    }

    pub fn transformed(&self, t: &Similarity) -> Self {
        let pieces = self.pieces.iter().map(|p| p.transformed(t)).collect();
        Self::new(pieces).expect("similarity preserves convex-body invariants")
    }

    /// Minimum distance from `p` to the straight parts of the boundary.
    pub(crate) fn distance_to_segments(&self, p: Point2) -> f64 {
        self.pieces
            .iter()
            .filter(|piece| matches!(piece, BoundaryPiece::Segment { .. }))
            .map(|piece| piece.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// Rough diameter bound from boundary samples.
    pub fn diameter_estimate(&self) -> f64 {
        let n = 256;
        let pts: Vec<Point2> = (0..n)
            .map(|i| self.boundary_point(self.perimeter * i as f64 / n as f64))
            .collect();
        let mut best: f64 = 0.0;
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                best = best.max(a.distance(*b));
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    fn unit_square() -> ConvexBody {
        let poly = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        ConvexBody::from_polygon(&poly).unwrap()
    }

    #[test]
    fn disk_boundary_points() {
        let disk = ConvexBody::unit_disk();
        assert!(disk.boundary_point(0.0).distance(Point2::new(1.0, 0.0)) < 1e-15);
        assert!(disk.boundary_point(PI).distance(Point2::new(-1.0, 0.0)) < 1e-15);
        assert!(disk.boundary_tangent(0.0).unwrap().distance(Point2::new(0.0, 1.0)) < 1e-15);
        assert!(disk.is_c1());
    }

    #[test]
    fn square_walk_and_tangent() {
        let sq = unit_square();
        assert_eq!(sq.perimeter(), 4.0);
        assert!(sq.boundary_point(1.5).distance(Point2::new(1.0, 0.5)) < 1e-15);
        assert!(sq.boundary_point(-2.5).distance(Point2::new(1.0, 0.5)) < 1e-15);
        assert_eq!(sq.boundary_tangent(0.5).unwrap(), Point2::new(1.0, 0.0));
        assert!(matches!(sq.boundary_tangent(1.0), Err(GeomError::AtVertex { .. })));
        assert!(matches!(sq.boundary_tangent(4.0), Err(GeomError::AtVertex { .. })));
    }

    #[test]
    fn stadium_perimeters() {
        let st = ConvexBody::stadium(StadiumParams::new(1.0, 2.0).unwrap()).unwrap();
        assert!((st.perimeter() - 2.0 * (2.0 + PI)).abs() < 1e-14);
        assert!(st.is_c1());
        let t = st.boundary_tangent(1.0).unwrap();
        assert!(t.distance(Point2::new(1.0, 0.0)) < 1e-15);
        let t = st.boundary_tangent(2.0 + PI + 1.0).unwrap();
        assert!(t.distance(Point2::new(-1.0, 0.0)) < 1e-15);

        let disk = ConvexBody::stadium(StadiumParams::new(1.0, 0.0).unwrap()).unwrap();
        assert!((disk.perimeter() - TAU).abs() < 1e-14);
        assert_eq!(disk.pieces().len(), 2);

        let half = ConvexBody::stadium(StadiumParams::new(0.5, 1.0).unwrap()).unwrap();
        assert!((half.perimeter() - 2.0 * (1.0 + PI / 2.0)).abs() < 1e-14);
    }

    #[test]
    fn invalid_stadium_params() {
        assert!(matches!(
            StadiumParams::new(0.0, 1.0),
            Err(GeomError::InvalidParams(_))
        ));
        assert!(matches!(
            StadiumParams::new(1.0, -0.1),
            Err(GeomError::InvalidParams(_))
        ));
    }

    #[test]
    fn regular_polygons() {
        let sq = ConvexBody::regular_polygon(4, SQRT_2 / 2.0).unwrap();
        assert!((sq.perimeter() - 4.0).abs() < 1e-14);
        let tri = ConvexBody::regular_polygon(3, 1.0).unwrap();
        assert!((tri.perimeter() - 3.0 * 3f64.sqrt()).abs() < 1e-14);
        assert_eq!(tri.corners().count(), 3);
        let first = tri.pieces()[0];
        assert!((first.start_point().y - first.end_point().y).abs() < 1e-15);
    }

    #[test]
    fn nonconvex_polygon_rejected() {
        let l_shape = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 0.5),
            Point2::new(0.5, 0.5),
            Point2::new(0.5, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(matches!(
            ConvexBody::from_polygon(&l_shape),
            Err(GeomError::NotConvex(_))
        ));
    }

    #[test]
    fn open_chain_rejected() {
        let pieces = vec![
            BoundaryPiece::segment(Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)),
            BoundaryPiece::segment(Point2::new(1.0, 0.0), Point2::new(0.0, 1.0)),
        ];
        assert!(matches!(ConvexBody::new(pieces), Err(GeomError::InvalidBody(_))));
    }

    #[test]
    fn clockwise_arc_rejected() {
        let pieces = vec![BoundaryPiece::arc(Point2::ORIGIN, 1.0, 0.0, -TAU)];
        assert!(matches!(ConvexBody::new(pieces), Err(GeomError::NotConvex(_))));
    }

    #[test]
    fn chord_vector_agrees_with_points() {
        let st = ConvexBody::stadium(StadiumParams::new(1.0, 2.0).unwrap()).unwrap();
        let sq = unit_square();
        for body in [st, sq, ConvexBody::unit_disk()] {
            let l = body.perimeter();
            for k in 0..40 {
                let s = l * k as f64 / 40.0 + 0.013;
                for a in [1e-7, 0.01, 0.3, l / 3.0, l / 2.0] {
                    let v = body.chord_vector(s, a);
                    let w = body.boundary_point(s + a) - body.boundary_point(s);
                    assert!(v.distance(w) < 1e-13 * l, "s={s} a={a}");
                }
            }
        }
    }

    #[test]
    fn transform_scales_perimeter() {
        let st = ConvexBody::stadium(StadiumParams::new(1.0, 2.0).unwrap()).unwrap();
        let big = st.transformed(&Similarity {
            scale: 10.0,
            rotation: 0.7,
            translation: Point2::new(3.0, -2.0),
        });
        assert!((big.perimeter() - 10.0 * st.perimeter()).abs() < 1e-12);
        let p = big.boundary_point(10.0 * 1.3);
        let q = Similarity {
            scale: 10.0,
            rotation: 0.7,
            translation: Point2::new(3.0, -2.0),
        }
        .apply(st.boundary_point(1.3));
        assert!(p.distance(q) < 1e-12);
    }
}
