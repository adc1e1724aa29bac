//! Partial shifts `x -> x * g^-1 * h`, defined on the cone `G+(g)`.
//!
//! Domains are infinite, so they are kept as an anchor plus a membership
//! test. Composition is right-action: `x(m1 m2) = (x m1) m2`.

use std::fmt;

use crate::bext::{BElement, Pair};
use crate::error::{Error, Result};
use crate::group::OrderedGroup;

/// The shift from `G+(domain)` onto `G+(codomain)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialShift<E> {
    pub domain: E,
    pub codomain: E,
}

impl<E: Clone + Eq> PartialShift<E> {
    pub fn new(domain: E, codomain: E) -> Self {
        PartialShift { domain, codomain }
    }

    /// The pair `(g, h)` representing the shift from `G+(g)` to `G+(h)`.
    pub fn to_pair(&self) -> BElement<E> {
        BElement::new(self.domain.clone(), self.codomain.clone())
    }

    pub fn from_pair(p: &BElement<E>) -> Self {
        PartialShift::new(p.left.clone(), p.right.clone())
    }
}

impl<E: fmt::Display> fmt::Display for PartialShift<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G+({}) -> G+({})", self.domain, self.codomain)
    }
}

pub type Shift<G> = PartialShift<<G as OrderedGroup>::Elem>;

pub fn in_domain<G: OrderedGroup>(group: &G, m: &Shift<G>, x: &G::Elem) -> bool {
    group.le(&m.domain, x)
}

pub fn apply<G: OrderedGroup>(group: &G, m: &Shift<G>, x: &G::Elem) -> Result<G::Elem> {
    if !(group.contains(x) && group.contains(&m.domain) && group.contains(&m.codomain)) {
        return Err(Error::InstanceMismatch);
    }
    if !in_domain(group, m, x) {
        return Err(Error::OutOfDomain {
            element: x.to_string(),
            anchor: m.domain.to_string(),
        });
    }
    group.mul_inv_mul(x, &m.domain, &m.codomain)
}

/// Closed form of `m1` followed by `m2`: for `m1 = (g -> h)` and
/// `m2 = (k -> l)` the composite runs from `(h v k) h^-1 g` to
/// `(h v k) k^-1 l`.
pub fn compose_formula<G: OrderedGroup>(
    group: &G,
    m1: &Shift<G>,
    m2: &Shift<G>,
) -> Result<Shift<G>> {
    for x in [&m1.domain, &m1.codomain, &m2.domain, &m2.codomain] {
        if !group.contains(x) {
            return Err(Error::InstanceMismatch);
        }
    }
    let (g, h) = (&m1.domain, &m1.codomain);
    let (k, l) = (&m2.domain, &m2.codomain);
    let join = group.max(h, k);
    Ok(PartialShift::new(
        group.mul_inv_mul(join, h, g)?,
        group.mul_inv_mul(join, k, l)?,
    ))
}

/// Checks the closed form against pointwise composition on every sample:
/// `x` is in the composite's domain exactly when `x` is in `dom m1` and
/// `x m1` is in `dom m2`, and the images agree there.
pub fn compose_pointwise_oracle<G: OrderedGroup>(
    group: &G,
    m1: &Shift<G>,
    m2: &Shift<G>,
    samples: &[G::Elem],
) -> Result<bool> {
    let composite = compose_formula(group, m1, m2)?;
    for x in samples {
        let pointwise = if in_domain(group, m1, x) {
            let y = apply(group, m1, x)?;
            if in_domain(group, m2, &y) {
                Some(apply(group, m2, &y)?)
            } else {
                None
            }
        } else {
            None
        };
        let closed = if in_domain(group, &composite, x) {
            Some(apply(group, &composite, x)?)
        } else {
            None
        };
        if pointwise != closed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The pair product read through the shift correspondence.
pub fn pair_of_composite<G: OrderedGroup>(group: &G, s: &Pair<G>, t: &Pair<G>) -> Result<Pair<G>> {
    let c = compose_formula(
        group,
        &PartialShift::from_pair(s),
        &PartialShift::from_pair(t),
    )?;
    Ok(c.to_pair())
}
