//! Exact Hankel continued fractions and Hankel determinants for Euler numbers.

pub mod catalog;
pub mod contfrac;
pub mod euler;
pub mod exact;
pub mod hankel;
pub mod hfrac;
pub mod perms;
pub mod series;
