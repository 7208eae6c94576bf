//! The Birch point of a complex-balanced triangle and a trajectory converging to it.

use toricnet::crn::{birch_point_in_class, parse_network, simulate, RateMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let net = parse_network("A <-> B : 2, 1\nB <-> C : 1, 3\nC <-> A : 1, 1")?;
    let mode = RateMode::infer(&net, None);
    let c0 = [1.0, 2.0, 3.0];
    let birch = birch_point_in_class(&net, &mode, &c0)?;
    let traj = simulate(&net, &mode, &c0, 50.0, 0.01)?;
    println!("birch point:   {:?}", birch.concentrations);
    println!("state at t=50: {:?}", traj.final_state());
    println!("conservation drift: {:e}", traj.max_conservation_drift);
    Ok(())
}
