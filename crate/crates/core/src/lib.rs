//! Exact Euler and Bernoulli polynomials, fermionic p-adic sums, and
//! mechanical checks of identities between them.

pub mod cli;
pub mod euler;
pub mod identities;
pub mod numeric;
pub mod poly;
pub mod series;
pub mod padic;
