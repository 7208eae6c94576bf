//! Characteristic numbers of projective spaces, their products and a Hirzebruch surface.

use toricnet::exactcore::IntMatrix;
use toricnet::torictop::{chern_numbers, mxi_numbers, validate_quasitoric, Bundle, QuasitoricData, SimplicialComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cp1 = QuasitoricData::projective_space(1);
    let cp2 = QuasitoricData::projective_space(2);
    for (name, d) in [("CP1", cp1.clone()), ("CP2", cp2.clone()), ("CP1 x CP2", cp1.product(&cp2))] {
        println!("{name}: {}", mxi_numbers(&d)?.render());
        for (p, c) in chern_numbers(&d, Bundle::Tangent)? {
            println!("  c^{:?} = {c}", p.parts());
        }
    }
    let square = SimplicialComplex::from_one_based(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])?;
    let lambda = IntMatrix::from_i64(&[vec![1, 0, -1, 1], vec![0, 1, 0, -1]])?;
    let report = validate_quasitoric(&square, &lambda);
    println!("Hirzebruch surface valid: {}", report.valid);
    let h1 = QuasitoricData::new(square, lambda, None)?;
    println!("H1: {}", mxi_numbers(&h1)?.render());
    Ok(())
}
