//! Polygon input files: either plain text with one `x y` pair per line
//! (`#` starts a comment line) or a JSON array of `[x, y]` pairs. Vertices are
//! counterclockwise and the closing edge is implicit.

use std::path::Path;

use super::point::Point2;
use super::polygon::Polygon;
use super::GeomError;

pub fn parse_polygon(text: &str) -> Result<Polygon, GeomError> {
    let vertices = if text.trim_start().starts_with('[') {
        let pairs: Vec<[f64; 2]> = serde_json::from_str(text).map_err(|e| GeomError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        pairs.into_iter().map(Point2::from).collect()
    } else {
        parse_plain(text)?
    };
    Polygon::new(vertices)
}

fn parse_plain(text: &str) -> Result<Vec<Point2>, GeomError> {
    let mut vertices = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|f| !f.is_empty())
            .collect();
        let parse_err = |message: String| GeomError::Parse {
            line: idx + 1,
            message,
        };
        if fields.len() != 2 {
            return Err(parse_err(format!("expected two numbers, found {:?}", line)));
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| parse_err(format!("bad number {:?}", fields[0])))?;
        let y: f64 = fields[1]
            .parse()
            .map_err(|_| parse_err(format!("bad number {:?}", fields[1])))?;
        vertices.push(Point2::new(x, y));
    }
    Ok(vertices)
}

pub fn read_polygon(path: &Path) -> Result<Polygon, GeomError> {
    let text = std::fs::read_to_string(path).map_err(|e| GeomError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_polygon(&text)
}
