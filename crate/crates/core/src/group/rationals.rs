use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OrderedGroup;
use crate::error::{Error, Result};

/// A rational in lowest terms with a positive denominator, so equality is
/// structural.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::PreconditionViolated("zero denominator".into()));
        }
        if numer == i64::MIN || denom == i64::MIN {
            return Err(Error::Overflow("Q normalization"));
        }
        Ok(Rat(Ratio::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rat(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

/// `(Q, +)` with the usual order; densely ordered, no successor.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    /// Fractions `p/q` with `|p| <= radius` and `1 <= q <= radius`, reduced
    /// and deduplicated, sorted by value.
    pub fn grid(radius: u32) -> Vec<Rat> {
        let r = i64::from(radius.max(1));
        let mut v: Vec<Rat> = (1..=r)
            .flat_map(|q| (-r..=r).map(move |p| Rat(Ratio::new(p, q))))
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

impl OrderedGroup for Rationals {
    type Elem = Rat;

    fn name(&self) -> String {
        "Q".into()
    }

    fn identity(&self) -> Rat {
        Rat::integer(0)
    }

    fn mul(&self, g: &Rat, h: &Rat) -> Result<Rat> {
        g.0.checked_add(&h.0)
            .map(Rat)
            .ok_or(Error::Overflow("Q addition"))
    }

    fn inv(&self, g: &Rat) -> Result<Rat> {
        let n = g
            .numer()
            .checked_neg()
            .ok_or(Error::Overflow("Q negation"))?;
        Ok(Rat(Ratio::new_raw(n, g.denom())))
    }

    fn cmp(&self, g: &Rat, h: &Rat) -> Ordering {
        g.0.cmp(&h.0)
    }

    fn designated_positive(&self) -> Rat {
        Rat::integer(1)
    }

    fn densely_ordered(&self) -> bool {
        true
    }

    /// The midpoint `(g + h) / 2`.
    fn between(&self, g: &Rat, h: &Rat) -> Result<Option<Rat>> {
        let sum = g.0.checked_add(&h.0).ok_or(Error::Overflow("Q midpoint"))?;
        let mid = sum
            .checked_div(&Ratio::from_integer(2))
            .ok_or(Error::Overflow("Q midpoint"))?;
        Ok(Some(Rat(mid)))
    }

    fn enumerate_box(&self, _lo: i64, _hi: i64) -> Option<Vec<Rat>> {
        None
    }

    /// The small-denominator grid plus `radius` seeded fractions with
    /// denominators up to `4 * radius`.
    fn sample_window(&self, radius: u32, seed: u64) -> Vec<Rat> {
        let mut v = Self::grid(radius);
        let r = i64::from(radius.max(1));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..radius {
            let q = rng.gen_range(1..=4 * r);
            let p = rng.gen_range(-r * q..=r * q);
            v.push(Rat(Ratio::new(p, q)));
        }
        v.sort_by_key(|x| (x.numer().unsigned_abs().max(x.denom().unsigned_abs()), *x));
        let mut seen = std::collections::HashSet::new();
        v.retain(|x| seen.insert(*x));
        v
    }
}
