pub mod brion;
pub mod cli;
pub mod euler;
pub mod fixtures;
pub mod io;
pub mod laurent;
pub mod matroid;
pub mod perm;
pub mod plaur;
pub mod polytope;
