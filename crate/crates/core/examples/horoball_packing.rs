//! Ford horoballs for the Gaussian integers: exact disjointness and the
//! tangency pattern.

use horocount::field::FieldSpec;
use horocount::geodesics::{check_disjoint, ford_packing, fractions_up_to, horoball_of};

fn main() -> horocount::Result<()> {
    let f = FieldSpec::imaginary_quadratic(1)?;
    for g in fractions_up_to(&f, 5) {
        let b = horoball_of(&g);
        println!(
            "p/q = ({})/({})  center = {} + ({})i  diameter = {}",
            g.p,
            g.q,
            b.center_re(),
            b.center_sqrt_coeff(),
            b.diameter()
        );
    }

    let balls = ford_packing(&f, 20);
    let report = check_disjoint(&balls)?;
    println!(
        "{} horoballs, {} pairs: {} tangent, {} overlapping, {} tangency/unimodularity mismatches",
        balls.len(),
        report.pairs_checked,
        report.tangencies.len(),
        report.overlaps.len(),
        report.mismatches.len()
    );
    Ok(())
}
