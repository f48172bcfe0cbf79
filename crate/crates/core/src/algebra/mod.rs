//! Exact arithmetic: rationals, polynomials, resultants, rational functions
//! and small binary fields.

pub mod domain;
pub mod gf2k;
pub mod poly;
pub mod ratfunc;
pub mod resultant;

pub use domain::{
    int, is_odd_prime, odd_part, parse_rat, rat, rat_sqrt, rat_to_string, require_odd_prime,
    residue_mod_2pow, two_pow, v2, Domain, Field, QAlgebra, Rat,
};
pub use gf2k::{reduce_mod2, roots_in_gf2k, Embedding, Gf2k, Gf2kElem};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use resultant::{det_bareiss, discriminant_poly, resultant, sylvester_matrix};
