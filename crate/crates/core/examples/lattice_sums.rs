//! Lattice sums S(x) and T(x) for an ideal I: the number of principal ideals
//! inside I up to norm x, and the sum of their norms.

use horocount::counting::{s_count, t_sum};
use horocount::field::FieldSpec;
use horocount::ideal::{primes_above, LatticeIdeal};

fn main() -> horocount::Result<()> {
    let f = FieldSpec::imaginary_quadratic(1)?;
    let ramified = primes_above(&f, 2)[0].1;
    for (name, ideal) in [("O", LatticeIdeal::UNIT), ("P2", ramified)] {
        println!("I = {name} {ideal}");
        for x in [100.0, 1_000.0, 10_000.0, 100_000.0] {
            let s = s_count(&f, &ideal, x);
            let predicted = f.residue() / (f.class_number() as f64 * ideal.norm() as f64) * x;
            println!(
                "  x = {x:>8}  S = {s:>7}  predicted {predicted:>10.1}  ratio {:.4}  T = {}",
                s as f64 / predicted,
                t_sum(&f, &ideal, x)
            );
        }
    }
    Ok(())
}
