//! Body ingestion: built-in shape names and polygon files.

use std::path::Path;

use traceconst::geom::{io, shapes, ConvexBody, GeomError, StadiumParams};

use crate::error::CliError;

/// Parses `disk`, `square`, `triangle`, `stadium:R:d` or `regular:k`.
pub fn parse_shape(name: &str) -> Result<ConvexBody, CliError> {
    let parts: Vec<&str> = name.trim().split(':').collect();
    let bad = |why: &str| CliError::Input(format!("shape '{name}': {why}"));
    let num = |s: &str| -> Result<f64, CliError> { s.trim().parse::<f64>().map_err(|_| bad("expected a number")) };
    match parts.as_slice() {
        ["disk"] => Ok(ConvexBody::unit_disk()),
        ["square"] => Ok(shapes::unit_square()),
        ["triangle"] => Ok(shapes::equilateral_triangle()),
        ["stadium", r, d] => {
            let params = StadiumParams::new(num(r)?, num(d)?).map_err(CliError::input)?;
            ConvexBody::stadium(params).map_err(CliError::input)
        }
        ["regular", k] => {
            let k: usize = k.trim().parse().map_err(|_| bad("expected a vertex count"))?;
            ConvexBody::regular_polygon(k, 1.0).map_err(CliError::input)
        }
        _ => Err(bad("expected disk, square, triangle, stadium:R:d or regular:k")),
    }
}

/// Reads a polygon file and converts it to a convex body.
pub fn read_body(path: &Path) -> Result<ConvexBody, CliError> {
    let poly = io::read_polygon(path).map_err(CliError::input)?;
    ConvexBody::from_polygon(&poly).map_err(|e| match e {
        GeomError::NotConvex(msg) => CliError::Input(format!("{}: not convex ({msg})", path.display())),
        other => CliError::input(other),
    })
}
