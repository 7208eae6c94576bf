//! Coproducts and antipodes in the Landweber–Novikov and noncommutative diffeomorphism Hopf
//! algebras, with the axiom checks.

use toricnet::hopfdiff::{bfk_antipode, bfk_coproduct, ln_antipode, t, verify_hopf, HopfKind};
use toricnet::ncsf::z;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=3 {
        println!("Δ(Z[{k}]) = {}", bfk_coproduct(&z(k)).render());
        println!("χ(Z[{k}]) = {}", bfk_antipode(&z(k)).render());
        println!("χ(t{k}) = {}", ln_antipode(&t(k))?);
    }
    for kind in [HopfKind::Ln, HopfKind::Bfk] {
        let r = verify_hopf(kind, 6)?;
        println!("{kind:?}: coassociative {}, counital {}, antipode {}", r.coassociative, r.counital, r.antipode);
    }
    Ok(())
}
