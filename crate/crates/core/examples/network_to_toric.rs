//! From a deficiency-zero weakly reversible network to a projective space and its class.

use toricnet::crn::parse_network;
use toricnet::torictop::crn_to_toric;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["A <-> B : 1, 1\nB <-> C : 1, 1\nC <-> A : 1, 1", "A <-> B : 1, 1\nC <-> D : 1, 1", "A -> B : 1\nB -> 2A + 2B : 1\n2A + 2B -> A : 1"] {
        let net = parse_network(text)?;
        match crn_to_toric(&net) {
            Ok(b) => println!("CP^{}: {}", b.dimension, b.class.render()),
            Err(e) => println!("refused: {e}"),
        }
    }
    Ok(())
}
