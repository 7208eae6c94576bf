//! Exact computations around toric reaction networks, quasitoric manifolds and Hopf
//! algebras of formal diffeomorphisms.

pub mod cli;
pub mod crn;
pub mod exactcore;
pub mod freeprob;
pub mod hopfdiff;
pub mod ncsf;
pub mod torictop;
