//! Planar bodies: convex boundaries as segment/arc chains with exact
//! arc-length parametrization, and general simple polygons.

mod body;
pub mod io;
mod piece;
mod point;
mod polygon;
mod random;

pub use body::{ConvexBody, Junction, StadiumParams, CLOSURE_TOL, TURNING_TOL};
pub use piece::BoundaryPiece;
pub use point::{Point2, Similarity};
pub use polygon::{convex_hull, signed_area, Polygon};
pub use random::{dent_polygon, filleted_body, random_convex_body, random_convex_polygon, random_star_polygon};


use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeomError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid boundary: {0}")]
    InvalidBody(String),
    #[error("not convex: {0}")]
    NotConvex(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("s = {s} lies at a corner; only one-sided tangents exist")]
    AtVertex { s: f64 },
    #[error("convex hull degenerate after {attempts} attempts")]
    DegenerateHull { attempts: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Builtin convenience shapes.
pub mod shapes {
    use super::{ConvexBody, Point2, Polygon};

    pub fn unit_square_polygon() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .expect("unit square")
    }

    pub fn unit_square() -> ConvexBody {
        ConvexBody::from_polygon(&unit_square_polygon()).expect("unit square")
    }

    /// Equilateral triangle with unit side, base on the x axis.
    pub fn equilateral_triangle() -> ConvexBody {
        let poly = Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(0.5, 3f64.sqrt() / 2.0),
        ])
        .expect("triangle");
        ConvexBody::from_polygon(&poly).expect("triangle")
    }

    /// Unit square with the upper-right quarter removed.
    pub fn l_shape() -> Polygon {
        Polygon::new(vec![
            Point2::new(0.0, 0.0),
            Point2::new(1.0, 0.0),
            Point2::new(1.0, 0.5),
            Point2::new(0.5, 0.5),
            Point2::new(0.5, 1.0),
            Point2::new(0.0, 1.0),
        ])
        .expect("L-shape")
    }

    /// Five-pointed star with outer radius 1 and inner radius `inner`.
    pub fn star(inner: f64) -> Polygon {
        let vertices = (0..10)
            .map(|i| {
                let r = if i % 2 == 0 { 1.0 } else { inner };
                let theta = std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * i as f64 / 5.0;
                Point2::from_angle(theta) * r
            })
            .collect();
        Polygon::new(vertices).expect("star")
    }

    /// Regular polygon as a [`Polygon`].
    pub fn regular_polygon(k: usize, circumradius: f64) -> Polygon {
        let offset = -std::f64::consts::FRAC_PI_2 - std::f64::consts::PI / k as f64;
        let vertices = (0..k)
            .map(|i| {
                Point2::from_angle(offset + std::f64::consts::TAU * i as f64 / k as f64) * circumradius
            })
            .collect();
        Polygon::new(vertices).expect("regular polygon")
    }
}
