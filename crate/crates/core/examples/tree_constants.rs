//! Tree constants by arborescence enumeration and by the matrix-tree minor.

use toricnet::crn::trees::{class_block, matrix_tree_minor};
use toricnet::crn::{build_rate_matrix, parse_network, tree_constants, RateMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = parse_network("A <-> B : k1, k2\nB <-> C : k3, k4\nC -> A : k5")?;
    let mode = RateMode::Symbolic;
    let k = tree_constants(&net, &mode)?;
    let block = class_block(&build_rate_matrix(&net, &mode)?, &[0, 1, 2]);
    for (i, value) in k.values.iter().enumerate() {
        let minor = matrix_tree_minor(&block, i, (i + 1) % 3)?;
        println!("K{} [{}] = {value}", i + 1, net.render_complex(i));
        assert_eq!(&minor, value);
    }
    Ok(())
}
