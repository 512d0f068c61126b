//! Arthur parameters and discrete series of classical real symmetric spaces.
//!
//! For each of the thirteen families of spaces `X = G/H` the crate computes the
//! dual group data, factors good-parity parameters ψ through the dual of `X`,
//! and picks out the ε-characters of the component group that contribute.
//!
//! Examples (`cargo run --example <name>`):
//! - `registry`: the thirteen families with their dual data
//! - `factorize`: φ and φ_d for one parameter
//! - `packet`: one ψ seen from two spaces of U(2,2)
//! - `case2`: accepted characters for U(p,q)/O(p,q)
//! - `case13`: the O(n,C)/O(n,R) rule against the root count
//! - `matrices`: the explicit matrix identities

pub mod arthur;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod groups;
pub mod matrixlab;
pub mod spectrum;
pub mod symspaces;
pub mod weil;
