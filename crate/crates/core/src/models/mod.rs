//! Example algebras and the Weyl-group side of the preprojective correspondence.

mod adachi;
mod algebras;
mod mizuno;
mod weyl;

pub use adachi::{check_adachi, lattice_points, AdachiCounts};
pub use algebras::{cyclic_nakayama, kq_mod_ba, kronecker, linear_an, preprojective, DynkinType};
pub use mizuno::{check_mizuno, ideal_iw, Ideal, MizunoReport};
pub use weyl::{all_reduced_words, right_order_leq, weyl_elements, WeylElement};
