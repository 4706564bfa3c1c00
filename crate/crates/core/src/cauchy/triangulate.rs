//! Ear-clipping triangulation of simple polygons.

use crate::geom::{Point2, Polygon};

use super::CauchyError;

fn inside_or_on(p: Point2, a: Point2, b: Point2, c: Point2) -> bool {
    (b - a).cross(p - a) >= 0.0 && (c - b).cross(p - b) >= 0.0 && (a - c).cross(p - c) >= 0.0
}

/// Triangles covering a counterclockwise simple polygon. Collinear
/// straight-through vertices are clipped without emitting a triangle.
pub fn triangulate(poly: &Polygon) -> Result<Vec<[Point2; 3]>, CauchyError> {
    let v = poly.vertices();
    let scale = poly.diameter();
    let flat_tol = 1e-14 * scale * scale;
    let mut ring: Vec<usize> = (0..v.len()).collect();
    let mut triangles = Vec::with_capacity(v.len().saturating_sub(2));
    while ring.len() > 3 {
        let n = ring.len();
        let mut clipped = false;
        for i in 0..n {
            let (ip, ic, inx) = (ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]);
            let (a, b, c) = (v[ip], v[ic], v[inx]);
            let turn = (b - a).cross(c - b);
            if turn.abs() <= flat_tol && (b - a).dot(c - b) > 0.0 {
                ring.remove(i);
                clipped = true;
                break;
            }
            if turn <= 0.0 {
                continue;
            }
            let blocked = ring
                .iter()
                .filter(|&&j| j != ip && j != ic && j != inx)
                .any(|&j| inside_or_on(v[j], a, b, c));
            if !blocked {
                triangles.push([a, b, c]);
                ring.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            return Err(CauchyError::TriangulationFailure {
                remaining: ring.len(),
            });
        }
    }
    triangles.push([v[ring[0]], v[ring[1]], v[ring[2]]]);
    Ok(triangles)
}

pub(crate) fn triangle_area(t: &[Point2; 3]) -> f64 {
    (t[1] - t[0]).cross(t[2] - t[0]) / 2.0
}
