//! Median and mean-value trace constants of convex bodies via the chord
//! reduction, plus closed forms for balls and stadiums.
//!
//! For a convex body with perimeter `L`, a straight cut whose endpoints split
//! the boundary into arcs `a ≤ L/2` and `L − a` gives the ratios
//!
//! ```text
//!   med(a) = a / m(a)            mv(a) = (2/L) · a (L − a) / m(a)
//! ```
//!
//! with `m(a) = min_s ℓ_a(s)`. The constants are the suprema over
//! `a ∈ (0, L/2]`. The open end `a → 0` is evaluated analytically through
//! [`corner_limit_factor`].

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::ln_gamma;
use thiserror::Error;

use crate::chords::{corner_limit_factor, min_chord, Chord, ChordError, MinChordResult};
use crate::geom::{ConvexBody, GeomError, StadiumParams};
use crate::numeric::golden_max;

pub const DEFAULT_A_GRID: usize = 2048;
pub const MIN_GRID: usize = 64;
pub const MAX_GRID: usize = 10_000_000;
/// Smallest sampled arc split, relative to the perimeter.
pub const MIN_SPLIT: f64 = 1e-6;
/// Target bracket width (relative to the perimeter) of the refinement in `a`.
pub const A_BRACKET_TOL: f64 = 1e-13;
/// Relative margin within which a sampled ratio counts as a tie with the
/// analytic small-cut limit.
const LIMIT_TIE_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstantsError {
    #[error("dimension must be at least 2, got {0}")]
    InvalidDim(u32),
    #[error("{name} = {value} outside [{MIN_GRID}, {MAX_GRID}]")]
    GridOutOfRange { name: &'static str, value: usize },
    #[error("arc split a = {a} outside (0, {semiperimeter}]")]
    OutOfRange { a: f64, semiperimeter: f64 },
    #[error(transparent)]
    Chord(#[from] ChordError),
    #[error(transparent)]
    Geom(#[from] GeomError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstantKind {
    /// Median-centered trace constant.
    Median,
    /// Mean-value-centered trace constant.
    MeanValue,
}

impl ConstantKind {
    pub fn label(self) -> &'static str {
        match self {
            ConstantKind::Median => "med",
            ConstantKind::MeanValue => "mv",
        }
    }
}

/// Where the supremum over cuts is reached.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Maximizer {
    /// A cut at a strictly positive arc split.
    Chord(Chord),
    /// Approached by cuts whose arc split tends to zero; not attained.
    SmallCutLimit,
}

impl Maximizer {
    pub fn describe(&self) -> String {
        match self {
            Maximizer::Chord(c) => format!(
                "chord s={:.6} a={:.6} length={:.6}",
                c.s, c.a, c.length
            ),
            Maximizer::SmallCutLimit => "limit a->0".to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct TraceConstantReport {
    pub value: f64,
    pub kind: ConstantKind,
    pub maximizer: Maximizer,
    pub a_star: Option<f64>,
    /// The two-dimensional ball value this constant must dominate.
    pub lower_bound_check: f64,
    pub a_grid: usize,
    pub s_grid: usize,
}

/// Volume of the unit ball in `R^n` by the recursion `ω_n = 2π/n · ω_{n−2}`.
pub fn unit_ball_volume(n: u32) -> f64 {
    let (mut omega, start) = if n % 2 == 0 { (1.0, 2) } else { (2.0, 3) };
    let mut k = start;
    while k <= n {
        omega *= 2.0 * PI / k as f64;
        k += 2;
    }
    omega
}

/// The ball constant as `(√π (n/2) Γ((n+1)/2)/Γ((n+2)/2), n ω_n / (2 ω_{n−1}))`.
pub fn ball_constant_forms(n: u32) -> Result<(f64, f64), ConstantsError> {
    if n < 2 {
        return Err(ConstantsError::InvalidDim(n));
    }
    let nf = n as f64;
    let gamma_form = PI.sqrt() * nf / 2.0 * (ln_gamma((nf + 1.0) / 2.0) - ln_gamma((nf + 2.0) / 2.0)).exp();
    let omega_form = nf * unit_ball_volume(n) / (2.0 * unit_ball_volume(n - 1));
    Ok((gamma_form, omega_form))
}

/// Median trace constant of the unit ball in `R^n`, the lower bound for every
/// admissible domain.
pub fn ball_constant(n: u32) -> Result<f64, ConstantsError> {
    ball_constant_forms(n).map(|(g, _)| g)
}

/// `C_mv` of the stadium: 2 while `d ≤ (4 − π) R`, else `(d + πR) / (2R)`.
pub fn stadium_c_mv_closed_form(p: StadiumParams) -> Result<f64, ConstantsError> {
    p.validate()?;
    if p.distance <= (4.0 - PI) * p.radius {
        Ok(2.0)
    } else {
        Ok(p.semiperimeter() / (2.0 * p.radius))
    }
}

/// `min_s ℓ_a(s)` on the stadium: `2R` for `a ≥ πR`, else `2R sin(a / 2R)`.
pub fn stadium_min_chord_closed_form(p: StadiumParams, a: f64) -> Result<f64, ConstantsError> {
    p.validate()?;
    let semiperimeter = p.semiperimeter();
    if !(a > 0.0 && a <= semiperimeter) {
        return Err(ConstantsError::OutOfRange { a, semiperimeter });
    }
    let r = p.radius;
    if a >= PI * r {
        Ok(2.0 * r)
    } else {
        Ok(2.0 * r * (a / (2.0 * r)).sin())
    }
}

fn check_grid(name: &'static str, value: usize) -> Result<(), ConstantsError> {
    if !(MIN_GRID..=MAX_GRID).contains(&value) {
        return Err(ConstantsError::GridOutOfRange { name, value });
    }
    Ok(())
}

/// Arc splits: half uniform on `(0, L/2]` (ending exactly at `L/2`), half
/// geometric from `MIN_SPLIT · L` up to the first uniform point. Sorted.
pub fn split_grid(perimeter: f64, a_grid: usize) -> Vec<f64> {
    let n_uniform = a_grid / 2;
    let n_geometric = a_grid - n_uniform;
    let half = perimeter / 2.0;
    let first_uniform = half / n_uniform as f64;
    let lo = MIN_SPLIT * perimeter;
    let ratio = first_uniform / lo;
    let mut grid: Vec<f64> = (0..n_geometric)
        .map(|i| lo * ratio.powf(i as f64 / n_geometric as f64))
        .collect();
    grid.extend((1..=n_uniform).map(|k| {
        if k == n_uniform {
            half
        } else {
            half * k as f64 / n_uniform as f64
        }
    }));
    grid
}

/// `m(a)` over the split grid.
#[derive(Clone, Debug)]
struct ChordProfile {
    perimeter: f64,
    samples: Vec<MinChordResult>,
    s_grid: usize,
}

impl ChordProfile {
    fn compute(body: &ConvexBody, a_grid: usize, s_grid: usize) -> Result<Self, ConstantsError> {
        check_grid("a_grid", a_grid)?;
        check_grid("s_grid", s_grid)?;
        let samples = split_grid(body.perimeter(), a_grid)
            .into_par_iter()
            .map(|a| min_chord(body, a.min(body.perimeter() / 2.0), s_grid))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            perimeter: body.perimeter(),
            samples,
            s_grid,
        })
    }
}

fn ratio(kind: ConstantKind, perimeter: f64, a: f64, m: f64) -> f64 {
    match kind {
        ConstantKind::Median => a / m,
        ConstantKind::MeanValue => 2.0 / perimeter * a * (perimeter - a) / m,
    }
}

fn limit_value(kind: ConstantKind, body: &ConvexBody) -> f64 {
    let factor = corner_limit_factor(body);
    match kind {
        ConstantKind::Median => factor,
        ConstantKind::MeanValue => 2.0 * factor,
    }
}

fn report_from_profile(
    body: &ConvexBody,
    profile: &ChordProfile,
    kind: ConstantKind,
) -> Result<TraceConstantReport, ConstantsError> {
    let l = profile.perimeter;
    let values: Vec<f64> = profile
        .samples
        .iter()
        .map(|r| ratio(kind, l, r.a, r.min_length))
        .collect();
    // Ties go to the smaller split.
    let mut k_best = 0;
    for (k, &v) in values.iter().enumerate() {
        if v > values[k_best] {
            k_best = k;
        }
    }
    let mut best = profile.samples[k_best];
    let mut best_value = values[k_best];

    let n = values.len();
    let lo = if k_best == 0 {
        profile.samples[0].a / 2.0
    } else {
        profile.samples[k_best - 1].a
    };
    let hi = if k_best + 1 == n {
        l / 2.0
    } else {
        profile.samples[k_best + 1].a
    };
    if hi > lo {
        let mut refined: Option<MinChordResult> = None;
        let mut failure = None;
        let (_, v, _) = golden_max(
            |a| match min_chord(body, a, profile.s_grid) {
                Ok(r) => {
                    let v = ratio(kind, l, r.a, r.min_length);
                    if refined.map_or(true, |b| v > ratio(kind, l, b.a, b.min_length)) {
                        refined = Some(r);
                    }
                    v
                }
                Err(e) => {
                    failure = Some(e);
                    f64::NEG_INFINITY
                }
            },
            lo,
            hi,
            A_BRACKET_TOL * l,
        );
        if let Some(e) = failure {
            return Err(e.into());
        }
        if let Some(r) = refined {
            if v > best_value {
                best = r;
                best_value = v;
            }
        }
    }

    let limit = limit_value(kind, body);
    let lower_bound_check = match kind {
        ConstantKind::Median => PI / 2.0,
        ConstantKind::MeanValue => 2.0,
    };
    // Polygonal corners make the median ratio exactly flat for small splits;
    // sampled values on that plateau are the limit up to rounding.
    let (value, maximizer, a_star) = if best_value <= limit * (1.0 + LIMIT_TIE_TOL) {
        (limit, Maximizer::SmallCutLimit, None)
    } else {
        let chord = Chord::new(body, best.argmin_s, best.a)?;
        (best_value, Maximizer::Chord(chord), Some(best.a))
    };
    Ok(TraceConstantReport {
        value,
        kind,
        maximizer,
        a_star,
        lower_bound_check,
        a_grid: profile.samples.len(),
        s_grid: profile.s_grid,
    })
}

/// Mean-value trace constant `(2/L) sup_a a(L − a) / m(a)`.
pub fn c_mv_convex(body: &ConvexBody, a_grid: usize, s_grid: usize) -> Result<TraceConstantReport, ConstantsError> {
    let profile = ChordProfile::compute(body, a_grid, s_grid)?;
    report_from_profile(body, &profile, ConstantKind::MeanValue)
}

/// Median trace constant `sup_a a / m(a)`.
pub fn c_med_convex(body: &ConvexBody, a_grid: usize, s_grid: usize) -> Result<TraceConstantReport, ConstantsError> {
    let profile = ChordProfile::compute(body, a_grid, s_grid)?;
    report_from_profile(body, &profile, ConstantKind::Median)
}

/// Both constants from one chord profile, as `(med, mv)`.
pub fn trace_constants(
    body: &ConvexBody,
    a_grid: usize,
    s_grid: usize,
) -> Result<(TraceConstantReport, TraceConstantReport), ConstantsError> {
    let profile = ChordProfile::compute(body, a_grid, s_grid)?;
    Ok((
        report_from_profile(body, &profile, ConstantKind::Median)?,
        report_from_profile(body, &profile, ConstantKind::MeanValue)?,
    ))
}
