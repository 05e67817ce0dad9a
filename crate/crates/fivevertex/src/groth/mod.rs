//! Permutation combinatorics and the double β-Grothendieck polynomial
//! family: divided-difference calculus, dual and biaxial variants, the
//! Cauchy identity and interpolation.

mod cauchy;
mod divdiff;
mod grothpoly;
mod perm;

pub use cauchy::{cauchy_check, interpolate, reassemble, CauchyCertificate, CauchySummand};
pub use divdiff::{
    binding, divided_difference, divided_difference_frac, divided_difference_frac_perm,
    divided_difference_frac_word, divided_difference_perm, divided_difference_word,
    sigma_alphabet, x_alphabet, z_alphabet, DivDiff,
};
pub use grothpoly::{
    biaxial_value, dual_value, groth, groth_sigma_t, groth_value, groth_variant, groth_x_t,
    instantiate, specialize_family, top_product, Flavor, GrothError, GrothPoly, Slot,
};
pub use perm::{Perm, PermError};
