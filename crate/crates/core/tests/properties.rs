//! Property tests for the geometric, chord, constant and Cauchy invariants.

use std::f64::consts::{PI, TAU};

use proptest::prelude::*;

use traceconst::cauchy::{
    convexity_gap, crossing_integral, essential_projection_extent, perimeter_by_crossings,
    perimeter_by_projections, Direction, CONVEXITY_GAP_TOL,
};
use traceconst::chords::{chord_length, min_chord};
use traceconst::geom::{
    convex_hull, dent_polygon, random_convex_body, random_convex_polygon, random_star_polygon, ConvexBody,
    Point2, Polygon, Similarity, StadiumParams,
};
use traceconst::trace_constants;

fn body_strategy() -> impl Strategy<Value = ConvexBody> {
    (any::<u64>(), 3usize..16, prop::sample::select(vec![0.0, 0.3, 0.7, 1.0]))
        .prop_map(|(seed, n, sm)| random_convex_body(seed, n, sm).unwrap())
}

fn near_junction(body: &ConvexBody, s: f64, margin: f64) -> bool {
    let l = body.perimeter();
    body.junctions().iter().any(|j| {
        let d = (body.wrap(s) - j.s).abs();
        d < margin || l - d < margin
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_is_periodic(body in body_strategy(), u in 0.0f64..1.0) {
        let l = body.perimeter();
        let s = u * l;
        let d = body.boundary_point(s + l).distance(body.boundary_point(s));
        prop_assert!(d <= 1e-12 * l);
    }

    #[test]
    fn chord_never_exceeds_arc(body in body_strategy(), u in 0.0f64..1.0, v in 0.0f64..1.0) {
        let l = body.perimeter();
        let (s, h) = (u * l, v * l);
        let d = body.boundary_point(s + h).distance(body.boundary_point(s));
        prop_assert!(d <= h + 1e-12 * l);
    }

    #[test]
    fn tangent_matches_finite_difference(body in body_strategy(), u in 0.0f64..1.0) {
        let l = body.perimeter();
        let s = u * l;
        let h = 1e-7 * l;
        prop_assume!(!near_junction(&body, s, 4.0 * h));
        let fd = (body.boundary_point(s + h) - body.boundary_point(s - h)) / (2.0 * h);
        let t = body.boundary_tangent(s).unwrap();
        prop_assert!(fd.distance(t) < 1e-6, "fd {:?} tangent {:?}", fd, t);
    }

    #[test]
    fn polygon_body_keeps_perimeter(seed in any::<u64>(), n in 3usize..20) {
        let poly = random_convex_polygon(seed, n).unwrap();
        let body = ConvexBody::from_polygon(&poly).unwrap();
        prop_assert!((body.perimeter() - poly.perimeter()).abs() <= 1e-15 * poly.perimeter());
    }

    #[test]
    fn min_chord_is_lipschitz_and_below_split(body in body_strategy(), u in 0.01f64..1.0, v in 0.01f64..1.0) {
        let half = body.perimeter() / 2.0;
        let (a, b) = (u * half, v * half);
        let ma = min_chord(&body, a, 256).unwrap();
        let mb = min_chord(&body, b, 256).unwrap();
        prop_assert!(ma.min_length <= a * (1.0 + 1e-12));
        prop_assert!((ma.min_length - mb.min_length).abs() <= (a - b).abs() + 1e-9 * half);
        // no scanned chord beats the reported minimum
        for k in 0..64 {
            let s = body.perimeter() * k as f64 / 64.0;
            prop_assert!(ma.min_length <= chord_length(&body, s, a).unwrap() + 1e-12);
        }
    }

    #[test]
    fn disk_min_chord_formula(r in 0.1f64..10.0, u in 0.001f64..1.0) {
        let disk = ConvexBody::disk(Point2::new(1.0, -2.0), r).unwrap();
        let a = u * PI * r;
        let m = min_chord(&disk, a, 512).unwrap();
        prop_assert!((m.min_length - 2.0 * r * (a / (2.0 * r)).sin()).abs() < 1e-9 * r.max(1.0));
    }

    #[test]
    fn stationary_at_smooth_minimizers(seed in any::<u64>(), n in 3usize..12, u in 0.01f64..1.0) {
        let body = random_convex_body(seed, n, 1.0).unwrap();
        let a = u * body.perimeter() / 2.0;
        let m = min_chord(&body, a, 1024).unwrap();
        if let Some(res) = m.residual {
            prop_assert!(res.abs() < 1e-6, "residual {res}");
        }
    }

    #[test]
    fn projections_bounded_by_crossings(seed in any::<u64>(), n in 4usize..14) {
        let poly = random_star_polygon(seed, n).unwrap();
        let cross = perimeter_by_crossings(&poly, 512).unwrap();
        let proj = perimeter_by_projections(&poly, 512).unwrap();
        prop_assert!(proj <= cross + 1e-9);
        prop_assert!((cross - poly.perimeter()).abs() <= 10.0 / 512.0 * poly.perimeter());
    }

    #[test]
    fn hulls_have_no_gap_and_dents_do(pts in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 4..30)) {
        let pts: Vec<Point2> = pts.into_iter().map(|(x, y)| Point2::new(x, y)).collect();
        let hull = convex_hull(&pts);
        prop_assume!(hull.len() >= 3);
        let Ok(poly) = Polygon::new(hull) else { return Ok(()); };
        prop_assume!(poly.area() > 1e-6);
        let gap = convexity_gap(&poly, 1024).unwrap();
        prop_assert!(gap.abs() <= CONVEXITY_GAP_TOL * poly.perimeter(), "gap {gap}");
        if let Some(dented) = dent_polygon(&poly) {
            let excess = dented.perimeter() - dented.convex_hull().perimeter();
            prop_assume!(excess > 1e-4 * dented.perimeter());
            prop_assert!(convexity_gap(&dented, 1024).unwrap() > CONVEXITY_GAP_TOL * dented.perimeter());
        }
    }

    #[test]
    fn cauchy_rigid_motion_invariance(seed in any::<u64>(), n in 4usize..12, angle in 0.0f64..TAU, theta in 0.0f64..TAU, k in 0usize..512) {
        let poly = random_star_polygon(seed, n).unwrap();
        let shift = Point2::new(2.5, -7.0);
        let motion = Similarity::rigid(angle, shift);
        let moved = poly.transformed(&motion);
        let d = Direction::new(theta);
        let dm = Direction::new(theta + angle);
        prop_assert!((crossing_integral(&poly, d) - crossing_integral(&moved, dm)).abs() < 1e-9);
        let e = essential_projection_extent(&poly, d).unwrap();
        let em = essential_projection_extent(&moved, dm).unwrap();
        prop_assert!((e - em).abs() < 1e-9);

        // rotations by whole quadrature steps map the angle grid onto itself
        let q = 512;
        let grid_motion = Similarity::rigid(TAU * k as f64 / q as f64, shift);
        let on_grid = poly.transformed(&grid_motion);
        prop_assert!((perimeter_by_crossings(&poly, q).unwrap() - perimeter_by_crossings(&on_grid, q).unwrap()).abs() < 1e-9);
        prop_assert!((perimeter_by_projections(&poly, q).unwrap() - perimeter_by_projections(&on_grid, q).unwrap()).abs() < 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn constants_ordered_and_rigidly_invariant(body in body_strategy(), angle in 0.0f64..TAU) {
        let (med, mv) = trace_constants(&body, 256, 512).unwrap();
        prop_assert!(med.value <= mv.value + 1e-9);
        prop_assert!(med.value >= PI / 2.0 - 1e-9);
        prop_assert!(mv.value >= 2.0 - 1e-9);
        let moved = body.transformed(&Similarity::rigid(angle, Point2::new(-4.0, 1.25)));
        let (med2, mv2) = trace_constants(&moved, 256, 512).unwrap();
        prop_assert!((med.value - med2.value).abs() <= 1e-10 * med.value, "{} vs {}", med.value, med2.value);
        prop_assert!((mv.value - mv2.value).abs() <= 1e-10 * mv.value, "{} vs {}", mv.value, mv2.value);
    }

    #[test]
    fn near_circular_stadiums_match_the_disk(d in 0.0f64..0.85) {
        let body = ConvexBody::stadium(StadiumParams::new(1.0, d).unwrap()).unwrap();
        let (med, mv) = trace_constants(&body, 256, 1024).unwrap();
        prop_assert!((mv.value - 2.0).abs() < 1e-6);
        if d > 0.05 {
            prop_assert!(med.value > PI / 2.0);
        }
    }
}
