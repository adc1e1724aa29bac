//! Bicyclic extensions of linearly ordered groups.
//!
//! For a linearly ordered group `G`, the set `G x G` with the product
//!
//! ```text
//! (a,b)(c,d) = (c b^-1 a, d)   if b < c
//!              (a, d)           if b = c
//!              (a, b c^-1 d)    if b > c
//! ```
//!
//! is an inverse semigroup `B(G)`. Pairs with both coordinates in the
//! positive cone form the submonoid `B+(G)`. This crate provides the
//! arithmetic, the natural partial order, solvers for the one-sided
//! equations, the correspondence with partial shifts of `G`, and a runner
//! that checks the structural identities by brute force over finite windows.
//!
//! ```
//! use bicyclic::{Bicyclic, BElement, Integers};
//!
//! let b = Bicyclic::new(&Integers);
//! let s = b.mul(&BElement::new(0, 1), &BElement::new(1, 0)).unwrap();
//! assert_eq!(s, BElement::new(0, 0));
//! ```

pub mod bext;
pub mod error;
pub mod group;
pub mod order;
pub mod parse;
pub mod pmap;
pub mod suite;
pub mod witness;

pub use bext::{Ambient, BElement, Bicyclic, Pair};
pub use error::{Error, Result};
pub use group::{
    AnyGroup, Element, GroupKind, Heis, Heisenberg, Integers, Lex2, LexPairs, OrderedGroup, Rat,
    Rationals,
};
pub use order::{Side, SolutionSet};
pub use pmap::PartialShift;
pub use suite::{run_suites, CheckReport, Status, SuiteConfig, SuiteName, SuiteReport};
pub use witness::{EscapeCertificate, ExcludedRegion, WitnessChain};
