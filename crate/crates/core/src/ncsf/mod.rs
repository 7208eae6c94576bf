//! Symmetric, quasisymmetric and noncommutative symmetric functions.

pub mod abelian;
pub mod composition;
pub mod nsym;
pub mod qsym;
pub mod sym;

pub use abelian::{abelianize, abelianize_poly, abelianize_sym, Abelian, Naming};
pub use composition::{compositions, partitions, Composition, Partition};
pub use nsym::{cartier, coproduct, z, z_word, Cartier, InverseSide, Ncf, TensorNcf};
pub use qsym::{pairing, qsym_realize, QSym};
pub use sym::{hall_pairing, involution, Involution, SymBasis, SymError, SymF};
