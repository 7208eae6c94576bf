//! The formal group law over noncommutative symmetric functions and the coaction on `CP_k`.

use toricnet::hopfdiff::{fgl_over_n, mu_coaction, CoactionTarget};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let law = fgl_over_n(6)?;
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        println!("[x^{i} y^{j}] = {}", law.coeff(i, j).render());
    }
    let report = law.report()?;
    println!("{report:?}");
    println!("abelianization matches the commutative law: {}", law.matches_commutative_law()?);
    let psi = mu_coaction(CoactionTarget::LogGenerators, 3)?;
    for k in 1..=3 {
        println!("ψ(CP{k}) = {}", psi.generator(k).render());
    }
    Ok(())
}
