use std::cmp::Ordering;
use std::fmt;

use super::{checked, shell_key, OrderedGroup};
use crate::error::Result;

/// An element of `Z x Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lex2(pub i64, pub i64);

impl fmt::Display for Lex2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// `Z x Z` under componentwise addition, ordered lexicographically.
/// Non-archimedean; the minimal positive element is `(0,1)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LexPairs;

impl OrderedGroup for LexPairs {
    type Elem = Lex2;

    fn name(&self) -> String {
        "ZxZ".into()
    }

    fn identity(&self) -> Lex2 {
        Lex2(0, 0)
    }

    fn mul(&self, g: &Lex2, h: &Lex2) -> Result<Lex2> {
        Ok(Lex2(
            checked(g.0.checked_add(h.0), "ZxZ addition")?,
            checked(g.1.checked_add(h.1), "ZxZ addition")?,
        ))
    }

    fn inv(&self, g: &Lex2) -> Result<Lex2> {
        Ok(Lex2(
            checked(g.0.checked_neg(), "ZxZ negation")?,
            checked(g.1.checked_neg(), "ZxZ negation")?,
        ))
    }

    fn cmp(&self, g: &Lex2, h: &Lex2) -> Ordering {
        (g.0, g.1).cmp(&(h.0, h.1))
    }

    fn has_successor(&self) -> bool {
        true
    }

    fn successor(&self, g: &Lex2) -> Result<Lex2> {
        Ok(Lex2(g.0, checked(g.1.checked_add(1), "ZxZ successor")?))
    }

    fn predecessor(&self, g: &Lex2) -> Result<Lex2> {
        Ok(Lex2(g.0, checked(g.1.checked_sub(1), "ZxZ predecessor")?))
    }

    fn designated_positive(&self) -> Lex2 {
        Lex2(0, 1)
    }

    fn densely_ordered(&self) -> bool {
        false
    }

    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<Lex2>> {
        let mut v: Vec<Lex2> = (lo..=hi)
            .flat_map(|a| (lo..=hi).map(move |b| Lex2(a, b)))
            .collect();
        v.sort_by_key(|p| shell_key(&[p.0, p.1]));
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order() {
        let g = LexPairs;
        assert!(g.lt(&Lex2(0, 100), &Lex2(1, -100)));
        assert!(!g.is_positive(&Lex2(0, -5)));
        assert!(g.is_positive(&Lex2(1, -5)));
    }

    #[test]
    fn successor_adds_minimal_positive() {
        assert_eq!(LexPairs.successor(&Lex2(2, 7)).unwrap(), Lex2(2, 8));
        assert_eq!(LexPairs.predecessor(&Lex2(2, 8)).unwrap(), Lex2(2, 7));
    }
}
