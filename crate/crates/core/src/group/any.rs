use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Heis, Heisenberg, Integers, Lex2, LexPairs, OrderedGroup, Rat, Rationals};
use crate::error::{Error, Result};

/// Selector for the shipped instances: `Z`, `Q`, `ZxZ`, `H3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Q")]
    Q,
    #[serde(rename = "ZxZ")]
    ZxZ,
    #[serde(rename = "H3")]
    H3,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [GroupKind::Z, GroupKind::Q, GroupKind::ZxZ, GroupKind::H3];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::Z => "Z",
            GroupKind::Q => "Q",
            GroupKind::ZxZ => "ZxZ",
            GroupKind::H3 => "H3",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Z" => Ok(GroupKind::Z),
            "Q" => Ok(GroupKind::Q),
            "ZxZ" => Ok(GroupKind::ZxZ),
            "H3" => Ok(GroupKind::H3),
            other => Err(Error::parse(
                0,
                format!("unknown group `{other}` (expected Z, Q, ZxZ or H3)"),
            )),
        }
    }
}

/// An element of one of the shipped instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Element {
    Int(i64),
    Rat(Rat),
    Pair(Lex2),
    Triple(Heis),
}

impl Element {
    pub fn kind(&self) -> GroupKind {
        match self {
            Element::Int(_) => GroupKind::Z,
            Element::Rat(_) => GroupKind::Q,
            Element::Pair(_) => GroupKind::ZxZ,
            Element::Triple(_) => GroupKind::H3,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Int(v) => write!(f, "{v}"),
            Element::Rat(v) => write!(f, "{v}"),
            Element::Pair(v) => write!(f, "{v}"),
            Element::Triple(v) => write!(f, "{v}"),
        }
    }
}

/// Runtime-selected instance. Operations on elements of another instance
/// fail with [`Error::InstanceMismatch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnyGroup {
    kind: GroupKind,
}

impl AnyGroup {
    pub fn new(kind: GroupKind) -> Self {
        AnyGroup { kind }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }
}

macro_rules! dispatch2 {
    ($self:ident, $g:ident, $h:ident, |$grp:ident, $a:ident, $b:ident| $body:expr) => {
        match ($self.kind, $g, $h) {
            (GroupKind::Z, Element::Int($a), Element::Int($b)) => {
                let $grp = Integers;
                $body.map(Element::Int)
            }
            (GroupKind::Q, Element::Rat($a), Element::Rat($b)) => {
                let $grp = Rationals;
                $body.map(Element::Rat)
            }
            (GroupKind::ZxZ, Element::Pair($a), Element::Pair($b)) => {
                let $grp = LexPairs;
                $body.map(Element::Pair)
            }
            (GroupKind::H3, Element::Triple($a), Element::Triple($b)) => {
                let $grp = Heisenberg;
                $body.map(Element::Triple)
            }
            _ => Err(Error::InstanceMismatch),
        }
    };
}

macro_rules! dispatch1 {
    ($self:ident, $g:ident, |$grp:ident, $a:ident| $body:expr) => {
        match ($self.kind, $g) {
            (GroupKind::Z, Element::Int($a)) => {
                let $grp = Integers;
                $body.map(Element::Int)
            }
            (GroupKind::Q, Element::Rat($a)) => {
                let $grp = Rationals;
                $body.map(Element::Rat)
            }
            (GroupKind::ZxZ, Element::Pair($a)) => {
                let $grp = LexPairs;
                $body.map(Element::Pair)
            }
            (GroupKind::H3, Element::Triple($a)) => {
                let $grp = Heisenberg;
                $body.map(Element::Triple)
            }
            _ => Err(Error::InstanceMismatch),
        }
    };
}

impl OrderedGroup for AnyGroup {
    type Elem = Element;

    fn name(&self) -> String {
        self.kind.as_str().into()
    }

    fn identity(&self) -> Element {
        match self.kind {
            GroupKind::Z => Element::Int(Integers.identity()),
            GroupKind::Q => Element::Rat(Rationals.identity()),
            GroupKind::ZxZ => Element::Pair(LexPairs.identity()),
            GroupKind::H3 => Element::Triple(Heisenberg.identity()),
        }
    }

    fn mul(&self, g: &Element, h: &Element) -> Result<Element> {
        dispatch2!(self, g, h, |grp, a, b| grp.mul(a, b))
    }

    fn inv(&self, g: &Element) -> Result<Element> {
        dispatch1!(self, g, |grp, a| grp.inv(a))
    }

    /// Elements of a foreign instance never reach here through the checked
    /// entry points; they are ordered by instance to keep `cmp` total.
    fn cmp(&self, g: &Element, h: &Element) -> Ordering {
        match (g, h) {
            (Element::Int(a), Element::Int(b)) => Integers.cmp(a, b),
            (Element::Rat(a), Element::Rat(b)) => Rationals.cmp(a, b),
            (Element::Pair(a), Element::Pair(b)) => LexPairs.cmp(a, b),
            (Element::Triple(a), Element::Triple(b)) => Heisenberg.cmp(a, b),
            _ => (g.kind() as u8).cmp(&(h.kind() as u8)),
        }
    }

    fn has_successor(&self) -> bool {
        self.kind != GroupKind::Q
    }

    fn successor(&self, g: &Element) -> Result<Element> {
        dispatch1!(self, g, |grp, a| grp.successor(a))
    }

    fn predecessor(&self, g: &Element) -> Result<Element> {
        dispatch1!(self, g, |grp, a| grp.predecessor(a))
    }

    fn designated_positive(&self) -> Element {
        match self.kind {
            GroupKind::Z => Element::Int(Integers.designated_positive()),
            GroupKind::Q => Element::Rat(Rationals.designated_positive()),
            GroupKind::ZxZ => Element::Pair(LexPairs.designated_positive()),
            GroupKind::H3 => Element::Triple(Heisenberg.designated_positive()),
        }
    }

    fn densely_ordered(&self) -> bool {
        self.kind == GroupKind::Q
    }

    fn between(&self, g: &Element, h: &Element) -> Result<Option<Element>> {
        match (self.kind, g, h) {
            (GroupKind::Z, Element::Int(a), Element::Int(b)) => {
                Ok(Integers.between(a, b)?.map(Element::Int))
            }
            (GroupKind::Q, Element::Rat(a), Element::Rat(b)) => {
                Ok(Rationals.between(a, b)?.map(Element::Rat))
            }
            (GroupKind::ZxZ, Element::Pair(a), Element::Pair(b)) => {
                Ok(LexPairs.between(a, b)?.map(Element::Pair))
            }
            (GroupKind::H3, Element::Triple(a), Element::Triple(b)) => {
                Ok(Heisenberg.between(a, b)?.map(Element::Triple))
            }
            _ => Err(Error::InstanceMismatch),
        }
    }

    fn contains(&self, g: &Element) -> bool {
        g.kind() == self.kind
    }

    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<Element>> {
        match self.kind {
            GroupKind::Z => Integers
                .enumerate_box(lo, hi)
                .map(|v| v.into_iter().map(Element::Int).collect()),
            GroupKind::Q => None,
            GroupKind::ZxZ => LexPairs
                .enumerate_box(lo, hi)
                .map(|v| v.into_iter().map(Element::Pair).collect()),
            GroupKind::H3 => Heisenberg
                .enumerate_box(lo, hi)
                .map(|v| v.into_iter().map(Element::Triple).collect()),
        }
    }

    fn sample_window(&self, radius: u32, seed: u64) -> Vec<Element> {
        match self.kind {
            GroupKind::Q => Rationals
                .sample_window(radius, seed)
                .into_iter()
                .map(Element::Rat)
                .collect(),
            _ => {
                let r = i64::from(radius);
                self.enumerate_box(-r, r).unwrap_or_default()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mismatch_is_reported() {
        let z = AnyGroup::new(GroupKind::Z);
        let r = z.mul(&Element::Int(1), &Element::Pair(Lex2(0, 1)));
        assert_eq!(r, Err(Error::InstanceMismatch));
        let q = AnyGroup::new(GroupKind::Q);
        assert_eq!(q.inv(&Element::Int(1)), Err(Error::InstanceMismatch));
        assert!(!q.contains(&Element::Int(1)));
    }

    #[test]
    fn selectors_round_trip() {
        for k in GroupKind::ALL {
            assert_eq!(k.as_str().parse::<GroupKind>().unwrap(), k);
        }
        assert!("R".parse::<GroupKind>().is_err());
    }
}
