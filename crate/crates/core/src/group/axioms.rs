//! Sample-based checks of the positive-cone axioms and of successor
//! minimality.

use super::OrderedGroup;
use crate::error::{Error, Result};

/// Outcome of [`check_positive_cone_axioms`]. `counterexample` is present
/// exactly when some flag is false and witnesses the first failing axiom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeVerdict<E> {
    /// `G+ * G+ ⊆ G+`
    pub closure_ok: bool,
    /// `G+ ∩ (G+)^-1 = {e}`
    pub antisymmetry_ok: bool,
    /// `x^-1 * G+ * x ⊆ G+`
    pub conjugation_ok: bool,
    pub counterexample: Option<(E, E)>,
}

impl<E> ConeVerdict<E> {
    pub fn all_ok(&self) -> bool {
        self.closure_ok && self.antisymmetry_ok && self.conjugation_ok
    }
}

pub fn check_positive_cone_axioms<G: OrderedGroup>(
    group: &G,
    samples: &[G::Elem],
) -> Result<ConeVerdict<G::Elem>> {
    let e = group.identity();
    let positives: Vec<&G::Elem> = samples.iter().filter(|g| group.is_positive(g)).collect();
    let mut verdict = ConeVerdict {
        closure_ok: true,
        antisymmetry_ok: true,
        conjugation_ok: true,
        counterexample: None,
    };

    'closure: for p in &positives {
        for q in &positives {
            if !group.is_positive(&group.mul(p, q)?) {
                verdict.closure_ok = false;
                verdict.counterexample = Some(((*p).clone(), (*q).clone()));
                break 'closure;
            }
        }
    }

    for p in &positives {
        if **p == e {
            continue;
        }
        let pi = group.inv(p)?;
        if group.is_positive(&pi) {
            verdict.antisymmetry_ok = false;
            verdict.counterexample.get_or_insert(((*p).clone(), pi));
            break;
        }
    }

    'conj: for x in samples {
        let xi = group.inv(x)?;
        for p in &positives {
            let c = group.mul(&group.mul(&xi, p)?, x)?;
            if !group.is_positive(&c) {
                verdict.conjugation_ok = false;
                verdict
                    .counterexample
                    .get_or_insert((x.clone(), (*p).clone()));
                break 'conj;
            }
        }
    }

    Ok(verdict)
}

/// Checks `G+(g) \ G+(succ g) = {g}` on the neighbourhood
/// `{g * w : w in [-radius, radius]^k}`, together with `g < succ g` and
/// `succ(pred g) = g`.
pub fn successor_check<G: OrderedGroup>(group: &G, g: &G::Elem, radius: u32) -> Result<bool> {
    if !group.has_successor() {
        return Err(Error::NotApplicable(format!(
            "{} has no successor (densely ordered)",
            group.name()
        )));
    }
    let r = i64::from(radius);
    let window = group.enumerate_box(-r, r).ok_or_else(|| {
        Error::NotApplicable(format!("{} cannot enumerate a window", group.name()))
    })?;
    let succ = group.successor(g)?;
    if !group.lt(g, &succ) || group.successor(&group.predecessor(g)?)? != *g {
        return Ok(false);
    }
    for w in &window {
        let h = group.mul(g, w)?;
        let in_difference = group.le(g, &h) && group.lt(&h, &succ);
        if in_difference && h != *g {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Heisenberg, Integers, Lex2, LexPairs, Rat, Rationals};

    #[test]
    fn integers_pass() {
        let v = check_positive_cone_axioms(&Integers, &[-2, -1, 0, 1, 2]).unwrap();
        assert!(v.all_ok());
        assert_eq!(v.counterexample, None);
    }

    #[test]
    fn heisenberg_window_passes() {
        let h = Heisenberg;
        let w = h.enumerate_box(-2, 2).unwrap();
        assert!(check_positive_cone_axioms(&h, &w).unwrap().all_ok());
    }

    #[test]
    fn successor_cases() {
        assert!(successor_check(&Integers, &5, 3).unwrap());
        assert!(successor_check(&LexPairs, &Lex2(2, 7), 3).unwrap());
        assert!(matches!(
            successor_check(&Rationals, &Rat::integer(0), 3),
            Err(Error::NotApplicable(_))
        ));
    }
}
