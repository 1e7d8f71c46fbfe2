//! Arithmetic constants of a few imaginary quadratic fields.
//!
//!     cargo run --example field_constants -- 1 2 3 5 23

use horocount::counting::main_term_coefficient;
use horocount::field::FieldSpec;

fn main() -> horocount::Result<()> {
    let ds: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ds = if ds.is_empty() { vec![1, 2, 3, 5, 7, 11, 23] } else { ds };

    println!("{:<16} {:>4} {:>3} {:>3} {:>16} {:>12} {:>12}", "field", "D", "w", "h", "zeta_K(2)", "Res_K", "phi coef");
    let mut fields = vec![FieldSpec::rational()];
    for d in ds {
        fields.push(FieldSpec::imaginary_quadratic(d)?);
    }
    for f in &fields {
        let z = f.zeta_k2(1e-12);
        println!(
            "{:<16} {:>4} {:>3} {:>3} {:>16.12} {:>12.8} {:>12.8}",
            f.to_string(),
            f.disc(),
            f.w(),
            f.class_number(),
            z.value,
            f.residue(),
            main_term_coefficient(f)
        );
    }
    Ok(())
}
