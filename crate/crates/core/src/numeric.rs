//! Small numerical helpers shared by the optimizers.

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
///
/// Stops once the bracket is narrower than `tol`; returns the best evaluated
/// abscissa, its value and the final bracket width.
pub fn golden_min<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64, f64)
where
    F: FnMut(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    // Bounded even when tol is below the floating-point resolution of the bracket.
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1, hi - lo)
    } else {
        (x2, f2, hi - lo)
    }
}

/// Golden-section search for a maximum.
pub fn golden_max<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (x, v, w) = golden_min(|x| -f(x), lo, hi, tol);
    (x, -v, w)
}

/// Neumaier-compensated sum, evaluated in iteration order.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let (x, v, w) = golden_min(|x| (x - 0.2).powi(2), -1.0, 1.0, 1e-10);
        assert!((x - 0.2).abs() < 1e-9);
        assert!(v < 1e-18);
        assert!(w <= 1e-10);
    }

    #[test]
    fn golden_handles_kinks() {
        let (x, _, _) = golden_min(|x: f64| (x - 0.3).abs(), 0.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-11);
        let (x, v, _) = golden_max(|x: f64| 1.0 - (x + 0.5).abs(), -2.0, 0.0, 1e-12);
        assert!((x + 0.5).abs() < 1e-11 && (v - 1.0).abs() < 1e-11);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let vals = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(compensated_sum(vals), 2.0);
    }
}
