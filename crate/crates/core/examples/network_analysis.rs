//! Deficiency, linkage classes and toric binomials of a few small networks.

use toricnet::crn::{analyze, parse_network, toric_binomials};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let networks = [
        ("triangle", "A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1"),
        ("squares", "2A <-> A + B : k1, k2\nA + B <-> 2B : k3, k4"),
        ("two classes", "A <-> B : k1, k2\nC + D <-> E : k3, k4"),
    ];
    for (name, text) in networks {
        let net = parse_network(text)?;
        let a = analyze(&net)?;
        println!("{name}: n = {}, l = {}, s = {}, deficiency = {}", a.num_complexes, a.linkage_classes.len(), a.stoichiometric_rank, a.deficiency);
        for b in toric_binomials(&net) {
            println!("  {}", b.rendered);
        }
    }
    Ok(())
}
