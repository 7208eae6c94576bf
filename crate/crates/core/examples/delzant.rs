//! A Delzant trapezoid, its quasitoric data and Hamiltonian numbers.

use toricnet::torictop::{delzant_to_quasitoric, hamiltonian_numbers, DelzantPolytope, HamiltonianConvention};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let trapezoid = DelzantPolytope::parse_json(r#"{"normals": [[1, 0], [0, 1], [-1, 0], [-1, -1]], "offsets": ["0", "0", "-3", "-4"]}"#)?;
    let d = delzant_to_quasitoric(&trapezoid)?;
    println!("vertices: {:?}", d.vertices.iter().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());
    println!("u = {}", d.symplectic_class);
    for conv in [HamiltonianConvention::Ginzburg, HamiltonianConvention::Mxi] {
        let h = hamiltonian_numbers(&d.data, &d.symplectic_class, conv)?;
        for e in &h.entries {
            println!("{conv:?} {:?}: {}", e.index, e.value);
        }
    }
    Ok(())
}
