//! Quasi-shuffle products, realizations and the duality with noncommutative symmetric functions.

use toricnet::ncsf::{abelianize_sym, compositions, pairing, z_word, Composition, QSym, SymBasis};

fn usize_parts(alpha: &Composition) -> Vec<usize> {
    alpha.parts().iter().map(|&p| p as usize).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = |parts: &[usize]| QSym::monomial(Composition::from_parts(parts.to_vec()));
    let product = m(&[1]).product(&m(&[2, 1]));
    println!("M[1]·M[2,1] = {}", product.render().replace("Z[", "M["));
    println!("M[2,1](x1,x2,x3) = {}", m(&[2, 1]).realize(3));
    for alpha in compositions(3) {
        let row: Vec<String> = compositions(3).iter().map(|beta| pairing(&z_word(&usize_parts(&alpha)), &QSym::monomial(beta.clone())).to_string()).collect();
        println!("<Z{}, M[β]> = {}", alpha.bracket(), row.join(" "));
    }
    let abelian = abelianize_sym(&z_word(&[2, 1]));
    println!("Z[2,1] in Sym: {} = {}", abelian.render(), abelian.convert(SymBasis::P)?.render());
    Ok(())
}
