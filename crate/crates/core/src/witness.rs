//! Executable skeletons of the discreteness arguments.
//!
//! * [`build_witness_chain`] carries any point `(a,b)` to any other `(v,u)`
//!   through two translations, each the unique solution of a one-sided
//!   equation: isolatedness of one point propagates to every point.
//! * [`escape_certificate`] shows that translating a point from below an
//!   idempotent `(a,a)` by `(a,a)` on the right side lands in one of the
//!   principal ideals anchored at the successor `a+`.
//! * [`density_probe`] separates densely ordered instances from those with
//!   successors.
//!
//! Every object is verified before it is returned; a failed verification is
//! an [`Error::Internal`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bext::{BElement, Bicyclic, Pair};
use crate::error::{Error, Result};
use crate::group::axioms::successor_check;
use crate::group::OrderedGroup;
use crate::order::{Side, SolutionSet};

/// `seed = intermediate * right_translator` and
/// `intermediate = left_translator * target`, both with unique solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessChain<E> {
    pub seed: BElement<E>,
    pub target: BElement<E>,
    pub right_translator: BElement<E>,
    pub intermediate: BElement<E>,
    pub left_translator: BElement<E>,
}

/// Builds the chain from `seed = (a,b)` to `target = (v,u)` in `B(G)`.
///
/// Picks `c < u`, sets `d = c u^-1 b`; then `(x,y)(c,d) = (a,b)` has the
/// single solution `(a,u)`. Picks `d' < v`, sets `c' = d' v^-1 a`; then
/// `(c',d')(x,y) = (a,u)` has the single solution `(v,u)`.
pub fn build_witness_chain<G: OrderedGroup>(
    group: &G,
    seed: &Pair<G>,
    target: &Pair<G>,
) -> Result<WitnessChain<G::Elem>> {
    let b = Bicyclic::new(group);
    b.check(seed)?;
    b.check(target)?;
    let (a, bb) = (&seed.left, &seed.right);
    let (v, u) = (&target.left, &target.right);

    let c = group.strictly_below(u)?;
    let d = group.mul_inv_mul(&c, u, bb)?;
    let right_translator = BElement::new(c, d);
    let intermediate = match b.solve_left(seed, &right_translator)? {
        SolutionSet::Unique(w) => w,
        other => {
            return Err(Error::Internal(format!(
                "expected a unique solution of {seed} = (x,y){right_translator}, got {other}"
            )))
        }
    };

    let d2 = group.strictly_below(v)?;
    let c2 = group.mul_inv_mul(&d2, v, a)?;
    let left_translator = BElement::new(c2, d2);
    let reached = match b.solve_right(&intermediate, &left_translator)? {
        SolutionSet::Unique(w) => w,
        other => {
            return Err(Error::Internal(format!(
                "expected a unique solution of {intermediate} = {left_translator}(x,y), got {other}"
            )))
        }
    };

    let chain = WitnessChain {
        seed: seed.clone(),
        target: target.clone(),
        right_translator,
        intermediate,
        left_translator,
    };
    if reached != *target {
        return Err(Error::Internal(format!(
            "chain from {seed} reached {reached} instead of {target}"
        )));
    }
    verify_chain(group, &chain)?;
    Ok(chain)
}

/// Re-checks a chain by multiplication.
pub fn verify_chain<G: OrderedGroup>(group: &G, chain: &WitnessChain<G::Elem>) -> Result<()> {
    let b = Bicyclic::new(group);
    let fail = |what: &str| Err(Error::Internal(format!("witness chain: {what}")));
    if b.mul(&chain.intermediate, &chain.right_translator)? != chain.seed {
        return fail("intermediate * right_translator != seed");
    }
    if b.mul(&chain.left_translator, &chain.target)? != chain.intermediate {
        return fail("left_translator * target != intermediate");
    }
    if chain.intermediate.left != chain.seed.left || chain.intermediate.right != chain.target.right
    {
        return fail("intermediate must be (seed.left, target.right)");
    }
    Ok(())
}

/// The closed sets a neighbourhood of `(a,a)` is kept away from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "region", content = "anchor")]
pub enum ExcludedRegion<E> {
    /// `(a+,a+) B(G)`: first coordinate `>= a+`.
    RightIdeal(E),
    /// `B(G) (a+,a+)`: second coordinate `>= a+`.
    LeftIdeal(E),
    /// `{s : s (a-,a-) = (a-,a-)}`.
    Stabilizer(E),
}

impl<E: fmt::Display> fmt::Display for ExcludedRegion<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExcludedRegion::RightIdeal(a) => write!(f, "({a},{a})B(G)"),
            ExcludedRegion::LeftIdeal(a) => write!(f, "B(G)({a},{a})"),
            ExcludedRegion::Stabilizer(a) => write!(f, "DL({a},{a})"),
        }
    }
}

impl<E: Clone + Eq> ExcludedRegion<E> {
    pub fn contains<G: OrderedGroup<Elem = E>>(&self, group: &G, s: &BElement<E>) -> Result<bool> {
        let b = Bicyclic::new(group);
        match self {
            ExcludedRegion::RightIdeal(a) => b.ideal_member(s, a, Side::Right),
            ExcludedRegion::LeftIdeal(a) => b.ideal_member(s, a, Side::Left),
            ExcludedRegion::Stabilizer(a) => dl_set_member(group, s, a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EscapeCertificate<E> {
    pub idempotent: BElement<E>,
    pub point: BElement<E>,
    /// Which side `idempotent` multiplies `point` from.
    pub side: Side,
    pub product: BElement<E>,
    pub excluded_region: ExcludedRegion<E>,
}

/// For `idempotent = (a,a)` and `point = (x,y)` with `x, y <= a`, `x != y`:
/// if `x < y` then `(a,a)(x,y) = (a, a x^-1 y)` lies in `B(G)(a+,a+)`;
/// if `y < x` then `(x,y)(a,a) = (a y^-1 x, a)` lies in `(a+,a+)B(G)`.
pub fn escape_certificate<G: OrderedGroup>(
    group: &G,
    idempotent: &Pair<G>,
    point: &Pair<G>,
) -> Result<EscapeCertificate<G::Elem>> {
    let b = Bicyclic::new(group);
    b.check(idempotent)?;
    b.check(point)?;
    if !group.has_successor() {
        return Err(Error::NotApplicable(format!(
            "{} is densely ordered; a+ does not exist",
            group.name()
        )));
    }
    if !idempotent.is_idempotent() {
        return Err(Error::PreconditionViolated(format!(
            "{idempotent} is not an idempotent"
        )));
    }
    let a = &idempotent.left;
    let (x, y) = (&point.left, &point.right);
    if !(group.le(x, a) && group.le(y, a)) || x == y {
        return Err(Error::PreconditionViolated(format!(
            "{point} must satisfy x <= {a}, y <= {a}, x != y"
        )));
    }
    let a_plus = group.successor(a)?;
    let (side, product, region) = if group.lt(x, y) {
        (
            Side::Left,
            b.mul(idempotent, point)?,
            ExcludedRegion::LeftIdeal(a_plus.clone()),
        )
    } else {
        (
            Side::Right,
            b.mul(point, idempotent)?,
            ExcludedRegion::RightIdeal(a_plus.clone()),
        )
    };

    let expected = match side {
        Side::Left => BElement::new(a.clone(), group.mul_inv_mul(a, x, y)?),
        Side::Right => BElement::new(group.mul_inv_mul(a, y, x)?, a.clone()),
    };
    let coordinate_ok = match side {
        Side::Left => group.le(&a_plus, &product.right),
        Side::Right => group.le(&a_plus, &product.left),
    };
    if product != expected || !coordinate_ok || !region.contains(group, &product)? {
        return Err(Error::Internal(format!(
            "escape certificate for {point} under {idempotent} failed: product {product}"
        )));
    }
    Ok(EscapeCertificate {
        idempotent: idempotent.clone(),
        point: point.clone(),
        side,
        product,
        excluded_region: region,
    })
}

/// `s (b,b) = (b,b)`.
pub fn dl_set_member<G: OrderedGroup>(group: &G, s: &Pair<G>, anchor: &G::Elem) -> Result<bool> {
    let b = Bicyclic::new(group);
    let e = BElement::diagonal(anchor.clone());
    Ok(b.mul(s, &e)? == e)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DensityVerdict<E> {
    /// Carries the minimal positive element `e+`.
    NotDenselyOrdered { minimal_positive: E },
    /// For each sampled positive `g`, some positive `h < g`.
    DenselyOrdered { witnesses: Vec<(E, E)> },
}

/// Classifies the instance's order. Successor instances have successor
/// minimality re-checked at every sample (on a radius-2 neighbourhood);
/// dense instances produce a strictly smaller positive witness below each
/// sampled positive element.
pub fn density_probe<G: OrderedGroup>(
    group: &G,
    samples: &[G::Elem],
) -> Result<DensityVerdict<G::Elem>> {
    let e = group.identity();
    if group.has_successor() {
        for g in samples {
            if !successor_check(group, g, 2)? {
                return Err(Error::Internal(format!(
                    "successor of {g} is not minimal in {}",
                    group.name()
                )));
            }
        }
        return Ok(DensityVerdict::NotDenselyOrdered {
            minimal_positive: group.successor(&e)?,
        });
    }
    if !group.densely_ordered() {
        return Err(Error::NotApplicable(format!(
            "{} declares neither a successor nor density",
            group.name()
        )));
    }
    let mut witnesses = Vec::new();
    for g in samples.iter().filter(|g| group.lt(&e, g)) {
        let h = group.between(&e, g)?.ok_or_else(|| {
            Error::Internal(format!("{} produced no element below {g}", group.name()))
        })?;
        if !(group.lt(&e, &h) && group.lt(&h, g)) {
            return Err(Error::Internal(format!(
                "{h} is not strictly between e and {g}"
            )));
        }
        witnesses.push((g.clone(), h));
    }
    Ok(DensityVerdict::DenselyOrdered { witnesses })
}
