use std::cmp::Ordering;
use std::fmt;

use super::{checked, shell_key, OrderedGroup};
use crate::error::Result;

/// An element `(x, y, z)` of the discrete Heisenberg group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Heis(pub i64, pub i64, pub i64);

impl fmt::Display for Heis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

/// The discrete Heisenberg group with
/// `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x*y')`, ordered lexicographically
/// on `(x, y, z)`.
///
/// The centre is `{(0,0,z)}` and `(0,0,1)` is the minimal positive element,
/// so the successor of `g` is `g * (0,0,1)`. Bi-invariance of the order is
/// not assumed anywhere; the axiom checker verifies it on samples.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Heisenberg;

const CENTRAL: Heis = Heis(0, 0, 1);

impl OrderedGroup for Heisenberg {
    type Elem = Heis;

    fn name(&self) -> String {
        "H3".into()
    }

    fn identity(&self) -> Heis {
        Heis(0, 0, 0)
    }

    fn mul(&self, g: &Heis, h: &Heis) -> Result<Heis> {
        const W: &str = "H3 multiplication";
        let twist = checked(g.0.checked_mul(h.1), W)?;
        let z = checked(g.2.checked_add(h.2).and_then(|s| s.checked_add(twist)), W)?;
        Ok(Heis(
            checked(g.0.checked_add(h.0), W)?,
            checked(g.1.checked_add(h.1), W)?,
            z,
        ))
    }

    /// `(x,y,z)^-1 = (-x, -y, x*y - z)`.
    fn inv(&self, g: &Heis) -> Result<Heis> {
        const W: &str = "H3 inversion";
        let xy = checked(g.0.checked_mul(g.1), W)?;
        Ok(Heis(
            checked(g.0.checked_neg(), W)?,
            checked(g.1.checked_neg(), W)?,
            checked(xy.checked_sub(g.2), W)?,
        ))
    }

    fn cmp(&self, g: &Heis, h: &Heis) -> Ordering {
        (g.0, g.1, g.2).cmp(&(h.0, h.1, h.2))
    }

    fn has_successor(&self) -> bool {
        true
    }

    fn successor(&self, g: &Heis) -> Result<Heis> {
        self.mul(g, &CENTRAL)
    }

    fn predecessor(&self, g: &Heis) -> Result<Heis> {
        self.mul(g, &self.inv(&CENTRAL)?)
    }

    fn designated_positive(&self) -> Heis {
        CENTRAL
    }

    fn densely_ordered(&self) -> bool {
        false
    }

    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<Heis>> {
        let mut v: Vec<Heis> = (lo..=hi)
            .flat_map(|x| (lo..=hi).flat_map(move |y| (lo..=hi).map(move |z| Heis(x, y, z))))
            .collect();
        v.sort_by_key(|p| shell_key(&[p.0, p.1, p.2]));
        Some(v)
    }
}
