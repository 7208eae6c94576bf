//! Free and classical cumulants, the Todd and L series, and noncommutative cumulants.

use toricnet::exactcore::{format_rational, q};
use toricnet::freeprob::{classical_cumulants, hirzebruch_k, l_genus_log, moments_to_free_cumulants, nc_cumulant_series, todd_log, MomentSeq};

fn show(xs: &[toricnet::exactcore::Q]) -> String {
    xs.iter().map(format_rational).collect::<Vec<_>>().join(", ")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Catalan numbers are the even moments of the semicircle law
    let semicircle = MomentSeq::from_higher(vec![q(0), q(1), q(0), q(2), q(0), q(5)]);
    println!("free cumulants: {}", show(moments_to_free_cumulants(&semicircle)?.cumulants()));
    let gaussian = MomentSeq::from_higher(vec![q(0), q(1), q(0), q(3), q(0), q(15)]);
    println!("classical cumulants: {}", show(classical_cumulants(&gaussian)?.cumulants()));
    println!("Todd: {}", show(&hirzebruch_k(&todd_log(7), 6)?));
    println!("L: {}", show(&hirzebruch_k(&l_genus_log(7), 6)?));
    for (n, k) in nc_cumulant_series(4)?.cumulants.iter().enumerate() {
        println!("k{} = {}", n + 1, k.render());
    }
    Ok(())
}
