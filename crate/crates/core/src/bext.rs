//! The semigroups `B(G)` and `B+(G)` as pairs of group elements.
//!
//! The pair `(a, b)` stands for the partial shift `x -> x * a^-1 * b` from
//! `G+(a)` onto `G+(b)` (see [`crate::pmap`]); composing shifts gives the
//! three-case product implemented by [`Bicyclic::mul`]. `B+(G)` is the
//! subsemigroup of pairs with both coordinates in the positive cone; it is
//! selected with [`Ambient::Positive`] rather than being a separate type.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::OrderedGroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BElement<E> {
    pub left: E,
    pub right: E,
}

impl<E: Clone + Eq> BElement<E> {
    pub fn new(left: E, right: E) -> Self {
        BElement { left, right }
    }

    /// The idempotent `(a, a)`.
    pub fn diagonal(a: E) -> Self {
        BElement {
            left: a.clone(),
            right: a,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        self.left == self.right
    }

    pub fn swapped(&self) -> Self {
        BElement {
            left: self.right.clone(),
            right: self.left.clone(),
        }
    }
}

impl<E: fmt::Display> fmt::Display for BElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.left, self.right)
    }
}

/// Which semigroup an operation is carried out in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Ambient {
    /// `B(G)`: all pairs.
    #[default]
    #[serde(rename = "B")]
    Full,
    /// `B+(G)`: pairs over the positive cone.
    #[serde(rename = "B+")]
    Positive,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Full => f.write_str("B"),
            Ambient::Positive => f.write_str("B+"),
        }
    }
}

/// `B(G)` or `B+(G)` over a borrowed group instance.
#[derive(Debug)]
pub struct Bicyclic<'g, G> {
    group: &'g G,
    ambient: Ambient,
}

impl<G> Clone for Bicyclic<'_, G> {
    fn clone(&self) -> Self {
        *self
    }
}

impl<G> Copy for Bicyclic<'_, G> {}

pub type Pair<G> = BElement<<G as OrderedGroup>::Elem>;

impl<'g, G: OrderedGroup> Bicyclic<'g, G> {
    pub fn new(group: &'g G) -> Self {
        Self::with_ambient(group, Ambient::Full)
    }

    pub fn positive(group: &'g G) -> Self {
        Self::with_ambient(group, Ambient::Positive)
    }

    pub fn with_ambient(group: &'g G, ambient: Ambient) -> Self {
        Bicyclic { group, ambient }
    }

    pub fn group(&self) -> &'g G {
        self.group
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    /// The same group viewed in `B(G)`.
    pub fn full(&self) -> Bicyclic<'g, G> {
        Self::new(self.group)
    }

    pub fn in_bplus(&self, s: &Pair<G>) -> bool {
        self.group.is_positive(&s.left) && self.group.is_positive(&s.right)
    }

    /// Whether `s` is an element of the ambient semigroup (and of this
    /// group instance at all).
    pub fn contains(&self, s: &Pair<G>) -> bool {
        self.group.contains(&s.left)
            && self.group.contains(&s.right)
            && (self.ambient == Ambient::Full || self.in_bplus(s))
    }

    pub fn check(&self, s: &Pair<G>) -> Result<()> {
        if !(self.group.contains(&s.left) && self.group.contains(&s.right)) {
            return Err(Error::InstanceMismatch);
        }
        if self.ambient == Ambient::Positive && !self.in_bplus(s) {
            return Err(Error::NotInPositiveExtension(s.to_string()));
        }
        Ok(())
    }

    pub fn check_elem(&self, g: &G::Elem) -> Result<()> {
        if self.group.contains(g) {
            Ok(())
        } else {
            Err(Error::InstanceMismatch)
        }
    }

    /// `(a,b)(c,d)` is `(c b^-1 a, d)` if `b < c`, `(a, d)` if `b = c`, and
    /// `(a, b c^-1 d)` if `b > c`.
    pub fn mul(&self, s: &Pair<G>, t: &Pair<G>) -> Result<Pair<G>> {
        self.check(s)?;
        self.check(t)?;
        self.mul_raw(s, t)
    }

    pub(crate) fn mul_raw(&self, s: &Pair<G>, t: &Pair<G>) -> Result<Pair<G>> {
        let g = self.group;
        let (a, b) = (&s.left, &s.right);
        let (c, d) = (&t.left, &t.right);
        Ok(match g.cmp(b, c) {
            Ordering::Less => BElement::new(g.mul_inv_mul(c, b, a)?, d.clone()),
            Ordering::Equal => BElement::new(a.clone(), d.clone()),
            Ordering::Greater => BElement::new(a.clone(), g.mul_inv_mul(b, c, d)?),
        })
    }

    /// Left-to-right product of a non-empty list.
    pub fn product(&self, factors: &[&Pair<G>]) -> Result<Pair<G>> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::PreconditionViolated("empty product".into()))?;
        self.check(first)?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.mul(&acc, f)?;
        }
        Ok(acc)
    }

    /// `(a, b)^-1 = (b, a)`.
    pub fn inverse(&self, s: &Pair<G>) -> Result<Pair<G>> {
        self.check(s)?;
        Ok(s.swapped())
    }

    pub fn is_idempotent(&self, s: &Pair<G>) -> bool {
        s.is_idempotent()
    }

    /// `(e, e)`, the identity of `B+(G)`. `B(G)` has none.
    pub fn monoid_identity(&self) -> Result<Pair<G>> {
        match self.ambient {
            Ambient::Positive => Ok(BElement::diagonal(self.group.identity())),
            Ambient::Full => Err(Error::NotApplicable("B(G) has no identity element".into())),
        }
    }

    /// All pairs over `elems` that lie in the ambient semigroup.
    pub fn pairs_over(&self, elems: &[G::Elem]) -> Vec<Pair<G>> {
        let mut v = Vec::with_capacity(elems.len() * elems.len());
        for a in elems {
            for b in elems {
                let s = BElement::new(a.clone(), b.clone());
                if self.ambient == Ambient::Full || self.in_bplus(&s) {
                    v.push(s);
                }
            }
        }
        v
    }
}
