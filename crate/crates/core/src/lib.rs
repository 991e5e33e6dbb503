//! Matroid representability by Gröbner bases.

pub mod decide;
pub mod groebner;
pub mod io;
pub mod matroid;
pub mod pattern;
pub mod poly;
