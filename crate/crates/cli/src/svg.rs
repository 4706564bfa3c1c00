//! Minimal self-contained SVG charts.

use std::fmt::Write;

const W: f64 = 720.0;
const H: f64 = 450.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 180.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;

enum Mark {
    Line(Vec<(f64, f64)>),
    Points(Vec<(f64, f64)>),
    HLine(f64),
    VLine(f64),
}

struct Series {
    mark: Mark,
    color: &'static str,
    dashed: bool,
    label: String,
}

pub struct Plot {
    title: String,
    x_label: String,
    y_label: String,
    x_range: (f64, f64),
    y_range: (f64, f64),
    series: Vec<Series>,
}

impl Plot {
    pub fn new(title: &str, x_label: &str, y_label: &str) -> Self {
        Self {
            title: title.into(),
            x_label: x_label.into(),
            y_label: y_label.into(),
            x_range: (f64::INFINITY, f64::NEG_INFINITY),
            y_range: (f64::INFINITY, f64::NEG_INFINITY),
            series: Vec::new(),
        }
    }

    fn extend_x(&mut self, x: f64) {
        if x.is_finite() {
            self.x_range = (self.x_range.0.min(x), self.x_range.1.max(x));
        }
    }

    fn extend_y(&mut self, y: f64) {
        if y.is_finite() {
            self.y_range = (self.y_range.0.min(y), self.y_range.1.max(y));
        }
    }

    fn add(&mut self, mark: Mark, color: &'static str, dashed: bool, label: &str) {
        match &mark {
            Mark::Line(pts) | Mark::Points(pts) => {
                for &(x, y) in pts {
                    self.extend_x(x);
                    self.extend_y(y);
                }
            }
            Mark::HLine(y) => self.extend_y(*y),
            Mark::VLine(x) => self.extend_x(*x),
        }
        self.series.push(Series {
            mark,
            color,
            dashed,
            label: label.into(),
        });
    }

    pub fn line(&mut self, pts: Vec<(f64, f64)>, color: &'static str, label: &str) {
        self.add(Mark::Line(pts), color, false, label);
    }

    pub fn points(&mut self, pts: Vec<(f64, f64)>, color: &'static str, label: &str) {
        self.add(Mark::Points(pts), color, false, label);
    }

    pub fn hline(&mut self, y: f64, color: &'static str, label: &str) {
        self.add(Mark::HLine(y), color, true, label);
    }

    pub fn vline(&mut self, x: f64, color: &'static str, label: &str) {
        self.add(Mark::VLine(x), color, true, label);
    }

    pub fn render(&self) -> String {
        let (x0, x1) = padded(self.x_range);
        let (y0, y1) = padded(self.y_range);
        let pw = W - LEFT - RIGHT;
        let ph = H - TOP - BOTTOM;
        let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
        let sy = |y: f64| TOP + ph - (y - y0) / (y1 - y0) * ph;

        let mut out = header(&self.title);
        frame(&mut out, pw, ph);
        for k in 0..=5 {
            let t = k as f64 / 5.0;
            let (xv, yv) = (x0 + t * (x1 - x0), y0 + t * (y1 - y0));
            let (px, py) = (sx(xv), sy(yv));
            let _ = writeln!(
                out,
                r#"<line x1="{px:.2}" y1="{:.2}" x2="{px:.2}" y2="{:.2}" stroke="black"/><text x="{px:.2}" y="{:.2}" font-size="11" text-anchor="middle">{}</text>"#,
                TOP + ph,
                TOP + ph + 5.0,
                TOP + ph + 18.0,
                tick(xv)
            );
            let _ = writeln!(
                out,
                r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{}</text>"#,
                LEFT - 5.0,
                LEFT - 8.0,
                py + 4.0,
                tick(yv)
            );
        }
        axis_labels(&mut out, &self.x_label, &self.y_label, pw, ph);

        for (i, s) in self.series.iter().enumerate() {
            let dash = if s.dashed { r#" stroke-dasharray="6 4""# } else { "" };
            match &s.mark {
                Mark::Line(pts) => {
                    let path: Vec<String> = pts.iter().map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y))).collect();
                    let _ = writeln!(
                        out,
                        r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#,
                        s.color,
                        path.join(" ")
                    );
                }
                Mark::Points(pts) => {
                    for &(x, y) in pts {
                        let _ = writeln!(
                            out,
                            r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{}" fill-opacity="0.7"/>"#,
                            sx(x),
                            sy(y),
                            s.color
                        );
                    }
                }
                Mark::HLine(y) => {
                    let _ = writeln!(
                        out,
                        r#"<line x1="{LEFT:.2}" y1="{0:.2}" x2="{1:.2}" y2="{0:.2}" stroke="{2}"{dash}/>"#,
                        sy(*y),
                        LEFT + pw,
                        s.color
                    );
                }
                Mark::VLine(x) => {
                    let _ = writeln!(
                        out,
                        r#"<line x1="{0:.2}" y1="{TOP:.2}" x2="{0:.2}" y2="{1:.2}" stroke="{2}"{dash}/>"#,
                        sx(*x),
                        TOP + ph,
                        s.color
                    );
                }
            }
            legend_entry(&mut out, i, s.color, &s.label);
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Vertical bars, one per labelled value, with an optional threshold line.
pub fn bar_chart(title: &str, y_label: &str, bars: &[(String, f64)], threshold: Option<(f64, &str)>) -> String {
    let pw = W - LEFT - RIGHT;
    let ph = H - TOP - BOTTOM;
    let mut top = bars.iter().map(|b| b.1).fold(0.0f64, f64::max);
    if let Some((t, _)) = threshold {
        top = top.max(t);
    }
    let top = if top > 0.0 { top * 1.1 } else { 1.0 };
    let sy = |y: f64| TOP + ph - y.max(0.0) / top * ph;

    let mut out = header(title);
    frame(&mut out, pw, ph);
    for k in 0..=5 {
        let yv = top * k as f64 / 5.0;
        let py = sy(yv);
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT:.2}" y2="{py:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end">{}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            py + 4.0,
            tick(yv)
        );
    }
    axis_labels(&mut out, "", y_label, pw, ph);
    let slot = pw / bars.len().max(1) as f64;
    for (i, (label, v)) in bars.iter().enumerate() {
        let x = LEFT + slot * (i as f64 + 0.2);
        let y = sy(*v);
        let _ = writeln!(
            out,
            r#"<rect x="{x:.2}" y="{y:.2}" width="{:.2}" height="{:.2}" fill="steelblue"/><text x="{:.2}" y="{:.2}" font-size="11" text-anchor="middle">{}</text>"#,
            slot * 0.6,
            TOP + ph - y,
            x + slot * 0.3,
            TOP + ph + 18.0,
            escape(label)
        );
    }
    if let Some((t, label)) = threshold {
        let _ = writeln!(
            out,
            r#"<line x1="{LEFT:.2}" y1="{0:.2}" x2="{1:.2}" y2="{0:.2}" stroke="crimson" stroke-dasharray="6 4"/>"#,
            sy(t),
            LEFT + pw
        );
        legend_entry(&mut out, 0, "crimson", label);
    }
    out.push_str("</svg>\n");
    out
}

fn header(title: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\" font-family=\"sans-serif\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <text x=\"{:.2}\" y=\"24\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
        W / 2.0,
        escape(title)
    )
}

fn frame(out: &mut String, pw: f64, ph: f64) {
    let _ = writeln!(
        out,
        r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
}

fn axis_labels(out: &mut String, x_label: &str, y_label: &str, pw: f64, ph: f64) {
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="13" text-anchor="middle">{}</text>"#,
        LEFT + pw / 2.0,
        H - 15.0,
        escape(x_label)
    );
    let (cx, cy) = (20.0, TOP + ph / 2.0);
    let _ = writeln!(
        out,
        r#"<text x="{cx}" y="{cy:.2}" font-size="13" text-anchor="middle" transform="rotate(-90 {cx} {cy:.2})">{}</text>"#,
        escape(y_label)
    );
}

fn legend_entry(out: &mut String, i: usize, color: &str, label: &str) {
    if label.is_empty() {
        return;
    }
    let x = W - RIGHT + 15.0;
    let y = TOP + 10.0 + 20.0 * i as f64;
    let _ = writeln!(
        out,
        r#"<rect x="{x}" y="{:.2}" width="12" height="12" fill="{color}"/><text x="{}" y="{:.2}" font-size="12">{}</text>"#,
        y - 10.0,
        x + 18.0,
        y,
        escape(label)
    );
}

fn padded((lo, hi): (f64, f64)) -> (f64, f64) {
    if !(lo.is_finite() && hi.is_finite()) {
        return (0.0, 1.0);
    }
    let span = hi - lo;
    let pad = if span > 0.0 { 0.05 * span } else { 0.5 * lo.abs().max(1.0) };
    (lo - pad, hi + pad)
}

fn tick(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_is_well_formed_and_self_contained() {
        let mut p = Plot::new("t <1>", "x", "y");
        p.line(vec![(0.0, 1.0), (1.0, 2.0)], "black", "curve");
        p.points(vec![(0.5, 1.5)], "teal", "pts");
        p.hline(1.2, "crimson", "bound");
        p.vline(0.3, "gray", "");
        let svg = p.render();
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains("t &lt;1&gt;"));
        assert!(!svg.contains("href"));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }

    #[test]
    fn degenerate_ranges_render() {
        let mut p = Plot::new("flat", "x", "y");
        p.line(vec![(1.0, 2.0), (1.0, 2.0)], "black", "");
        assert!(!p.render().contains("NaN"));
        let bars = bar_chart("b", "gap", &[("a".into(), 0.0)], None);
        assert!(!bars.contains("NaN"));
    }
}
