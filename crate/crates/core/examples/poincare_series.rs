//! Partial sums of the relative and parabolic Poincaré series for the
//! Gaussian integers, with the empirical convergence verdicts.

use horocount::field::FieldSpec;
use horocount::geodesics::{
    classify_partials, parabolic_poincare_partials, parabolic_threshold_bracket, relative_poincare_partials,
};

fn main() -> horocount::Result<()> {
    let f = FieldSpec::imaginary_quadratic(1)?;
    let cutoffs = [100.0, 1_000.0, 10_000.0, 100_000.0];
    for s in [1.5, 2.0, 2.5, 3.0] {
        let values: Vec<f64> = relative_poincare_partials(&f, s, &cutoffs).iter().map(|p| p.value).collect();
        let report = classify_partials(&cutoffs, &values)?;
        println!("relative s = {s}: {values:.6?} -> {:?}", report.verdict);
    }

    let radii = [10.0, 100.0, 1000.0];
    for s in [0.8, 1.2] {
        let values: Vec<f64> = parabolic_poincare_partials(&f, s, &radii).iter().map(|p| p.value).collect();
        println!("parabolic s = {s}: {values:.4?} -> {:?}", classify_partials(&radii, &values)?.verdict);
    }
    let (lo, hi) = parabolic_threshold_bracket(&f, &[0.7, 0.8, 0.9, 1.1, 1.2, 1.3], &radii)?;
    println!("parabolic threshold between {lo} and {hi}");
    Ok(())
}
