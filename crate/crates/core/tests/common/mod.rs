#![allow(dead_code)]

use std::cmp::Ordering;

use bicyclic::{Error, OrderedGroup, Result};

/// The integers under addition with an order that is total but not
/// translation invariant: every x >= 2 sits below every x <= 1, and the
/// block x >= 2 is reversed. The positive cone comes out as {0, 1}, which
/// is not closed (1 + 1 = 2 is negative).
pub struct BrokenIntegers;

fn key(x: i64) -> (u8, i64) {
    if x >= 2 {
        (0, -x)
    } else {
        (1, x)
    }
}

impl OrderedGroup for BrokenIntegers {
    type Elem = i64;

    fn name(&self) -> String {
        "broken-Z".into()
    }

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, g: &i64, h: &i64) -> Result<i64> {
        g.checked_add(*h).ok_or(Error::Overflow("broken add"))
    }

    fn inv(&self, g: &i64) -> Result<i64> {
        g.checked_neg().ok_or(Error::Overflow("broken neg"))
    }

    fn cmp(&self, g: &i64, h: &i64) -> Ordering {
        key(*g).cmp(&key(*h))
    }

    fn designated_positive(&self) -> i64 {
        1
    }

    fn densely_ordered(&self) -> bool {
        false
    }

    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<i64>> {
        let mut v: Vec<i64> = (lo..=hi).collect();
        v.sort_by_key(|x| (x.unsigned_abs(), *x));
        Some(v)
    }
}

/// Independent integer-pair product, written from the three-case formula.
pub fn z_mul(s: (i64, i64), t: (i64, i64)) -> (i64, i64) {
    let ((a, b), (c, d)) = (s, t);
    match b.cmp(&c) {
        Ordering::Less => (c - b + a, d),
        Ordering::Equal => (a, d),
        Ordering::Greater => (a, b - c + d),
    }
}

/// Independent Heisenberg arithmetic on triples.
pub fn h_mul(p: (i64, i64, i64), q: (i64, i64, i64)) -> (i64, i64, i64) {
    (p.0 + q.0, p.1 + q.1, p.2 + q.2 + p.0 * q.1)
}

pub fn h_inv(p: (i64, i64, i64)) -> (i64, i64, i64) {
    (-p.0, -p.1, p.0 * p.1 - p.2)
}

/// The shift `x -> x g^-1 h` on `{x >= g}`, or `None` off its domain.
pub fn h_shift(
    g: (i64, i64, i64),
    h: (i64, i64, i64),
    x: (i64, i64, i64),
) -> Option<(i64, i64, i64)> {
    (x >= g).then(|| h_mul(h_mul(x, h_inv(g)), h))
}

pub fn z_shift(g: i64, h: i64, x: i64) -> Option<i64> {
    (x >= g).then_some(x - g + h)
}

pub fn z_window(r: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for a in -r..=r {
        for b in -r..=r {
            v.push((a, b));
        }
    }
    v
}
