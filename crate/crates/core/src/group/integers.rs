use std::cmp::Ordering;

use super::{checked, OrderedGroup};
use crate::error::Result;

/// `(Z, +)` with the usual order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl OrderedGroup for Integers {
    type Elem = i64;

    fn name(&self) -> String {
        "Z".into()
    }

    fn identity(&self) -> i64 {
        0
    }

    fn mul(&self, g: &i64, h: &i64) -> Result<i64> {
        checked(g.checked_add(*h), "Z addition")
    }

    fn inv(&self, g: &i64) -> Result<i64> {
        checked(g.checked_neg(), "Z negation")
    }

    fn cmp(&self, g: &i64, h: &i64) -> Ordering {
        g.cmp(h)
    }

    fn has_successor(&self) -> bool {
        true
    }

    fn successor(&self, g: &i64) -> Result<i64> {
        checked(g.checked_add(1), "Z successor")
    }

    fn predecessor(&self, g: &i64) -> Result<i64> {
        checked(g.checked_sub(1), "Z predecessor")
    }

    fn designated_positive(&self) -> i64 {
        1
    }

    fn densely_ordered(&self) -> bool {
        false
    }

    fn enumerate_box(&self, lo: i64, hi: i64) -> Option<Vec<i64>> {
        let mut v: Vec<i64> = (lo..=hi).collect();
        v.sort_by_key(|x| super::shell_key(&[*x]));
        Some(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn overflow_is_an_error() {
        let z = Integers;
        assert_eq!(z.mul(&i64::MAX, &1), Err(Error::Overflow("Z addition")));
        assert!(z.inv(&i64::MIN).is_err());
        assert!(z.successor(&i64::MAX).is_err());
    }

    #[test]
    fn box_is_shell_ordered() {
        assert_eq!(Integers.enumerate_box(-1, 2).unwrap(), vec![0, -1, 1, 2]);
    }

    #[test]
    fn positivity() {
        assert!(Integers.is_positive(&3));
        assert!(Integers.is_positive(&0));
        assert!(!Integers.is_positive(&-1));
    }
}
