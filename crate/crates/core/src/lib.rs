//! Hyperplane census, independent-hyperplane bound and non-orientability
//! screen for paving matroids.
//!
//! A matroid of rank `r` on `{1..n}` (`n <= 64`) is given either by a paving
//! family (its hyperplanes with at least `r` elements) or by its circuits.
//! [`census()`] enumerates the hyperplanes and sorts them into independent,
//! simple and multiple ones; [`screen`] compares the independent count with
//! `f(n, r) = 12 / (13 (r - 1)) * C(n, r - 2)` in exact arithmetic.
//!
//! ```
//! use pavmat::{catalog, screen::{screen, Verdict}};
//!
//! let m = catalog::ag32_prime().matroid;
//! let v = screen(&m);
//! assert_eq!(v.independent_count, 4);
//! assert_eq!(v.bound.unwrap().to_string(), "112/13");
//! assert_eq!(v.verdict, Verdict::NotOrientable);
//! ```

pub mod catalog;
pub mod census;
pub mod cli;
pub mod error;
pub mod format;
pub mod matroid;
pub mod points;
pub mod rational;
pub mod screen;
pub mod search;
pub mod set;
pub mod verify;

pub use census::{
    census, classify, hyperplanes, subset_profile, CensusReport, Classification, Counts,
};
pub use error::{Error, Result};
pub use matroid::{Matroid, Minor, Representation};
pub use rational::ExactRational;
pub use set::ElementSet;
