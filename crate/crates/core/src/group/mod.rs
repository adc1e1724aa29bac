//! Linearly ordered groups.
//!
//! A group is pluggable through [`OrderedGroup`]: a carrier with exact
//! (checked) multiplication and inversion, a total order that must be
//! invariant under translations on both sides, and optionally a successor
//! oracle when the order is discrete. Four instances ship with the crate:
//! the integers, the rationals, `Z x Z` ordered lexicographically and the
//! discrete Heisenberg group ordered lexicographically. [`AnyGroup`] wraps
//! them behind a single runtime-selected type.
//!
//! Nothing here assumes the laws hold; [`axioms`] checks them on samples.

mod any;
pub mod axioms;
mod heisenberg;
mod integers;
mod lex;
mod rationals;

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::error::{Error, Result};

pub use any::{AnyGroup, Element, GroupKind};
pub use heisenberg::{Heis, Heisenberg};
pub use integers::Integers;
pub use lex::{Lex2, LexPairs};
pub use rationals::{Rat, Rationals};

pub trait OrderedGroup: Send + Sync {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn name(&self) -> String;

    fn identity(&self) -> Self::Elem;

    fn mul(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Self::Elem>;

    fn inv(&self, g: &Self::Elem) -> Result<Self::Elem>;

    /// Total order on the carrier.
    fn cmp(&self, g: &Self::Elem, h: &Self::Elem) -> Ordering;

    /// Whether `successor`/`predecessor` are available.
    fn has_successor(&self) -> bool {
        false
    }

    /// The minimum of `G+(g) \ {g}`.
    fn successor(&self, g: &Self::Elem) -> Result<Self::Elem> {
        let _ = g;
        Err(Error::NotApplicable(format!(
            "{} declares no successor",
            self.name()
        )))
    }

    /// The maximum of `G-(g) \ {g}`.
    fn predecessor(&self, g: &Self::Elem) -> Result<Self::Elem> {
        let _ = g;
        Err(Error::NotApplicable(format!(
            "{} declares no predecessor",
            self.name()
        )))
    }

    /// A fixed element strictly above the identity.
    fn designated_positive(&self) -> Self::Elem;

    fn densely_ordered(&self) -> bool;

    /// Some element strictly between `g` and `h` (for `g < h`), if the
    /// instance knows how to produce one.
    fn between(&self, g: &Self::Elem, h: &Self::Elem) -> Result<Option<Self::Elem>> {
        let _ = (g, h);
        Ok(None)
    }

    /// Whether `g` belongs to this instance. Only runtime-dispatched groups
    /// can ever answer `false`.
    fn contains(&self, g: &Self::Elem) -> bool {
        let _ = g;
        true
    }

    /// Every element whose coordinates all lie in `[lo, hi]`, ordered by
    /// increasing distance from the identity. `None` when the carrier has no
    /// coordinate enumeration (the rationals).
    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<Self::Elem>>;

    /// A finite deterministic sample around the identity. Defaults to the box
    /// `[-radius, radius]`; non-enumerable instances supply their own grid.
    fn sample_window(&self, radius: u32, seed: u64) -> Vec<Self::Elem> {
        let _ = seed;
        let r = i64::from(radius);
        self.enumerate_box(-r, r).unwrap_or_default()
    }

    // Provided helpers.

    fn lt(&self, g: &Self::Elem, h: &Self::Elem) -> bool {
        self.cmp(g, h) == Ordering::Less
    }

    fn le(&self, g: &Self::Elem, h: &Self::Elem) -> bool {
        self.cmp(g, h) != Ordering::Greater
    }

    fn max<'a>(&self, g: &'a Self::Elem, h: &'a Self::Elem) -> &'a Self::Elem {
        if self.lt(g, h) {
            h
        } else {
            g
        }
    }

    /// Membership in the positive cone `G+ = {x : e <= x}`.
    fn is_positive(&self, g: &Self::Elem) -> bool {
        self.le(&self.identity(), g)
    }

    /// `x * y^-1 * z`, the shape every coordinate of the pair product takes.
    fn mul_inv_mul(&self, x: &Self::Elem, y: &Self::Elem, z: &Self::Elem) -> Result<Self::Elem> {
        let t = self.mul(x, &self.inv(y)?)?;
        self.mul(&t, z)
    }

    /// `x^-1 * y`.
    fn left_quotient(&self, x: &Self::Elem, y: &Self::Elem) -> Result<Self::Elem> {
        self.mul(&self.inv(x)?, y)
    }

    /// An element strictly below `u`: the predecessor when there is one,
    /// otherwise `u * p^-1` for the designated positive `p`.
    fn strictly_below(&self, u: &Self::Elem) -> Result<Self::Elem> {
        if self.has_successor() {
            self.predecessor(u)
        } else {
            self.mul(u, &self.inv(&self.designated_positive())?)
        }
    }
}

/// Sorts a coordinate list into "shell" order: by largest absolute
/// coordinate, then lexicographically.
pub(crate) fn shell_key(coords: &[i64]) -> (u64, Vec<i64>) {
    let m = coords.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0);
    (m, coords.to_vec())
}

pub(crate) fn checked(v: Option<i64>, what: &'static str) -> Result<i64> {
    v.ok_or(Error::Overflow(what))
}
