//! Natural partial order, one-unknown equations and principal ideals.
//!
//! With `s = (a,b)` and `t = (c,d)`, `s ≼ t` holds iff `a^-1 b = c^-1 d` and
//! `a >= c`. Every equation `target = known * (x,y)` (or its mirror) splits
//! on a single comparison of group elements into no solution, exactly one
//! solution, or a whole up-set of the natural order.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bext::{Ambient, BElement, Bicyclic, Pair};
use crate::error::{Error, Result};
use crate::group::OrderedGroup;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SolutionSet<E> {
    NoSolution,
    Unique(BElement<E>),
    /// `{w in ambient : base ≼ w}`.
    UpSet {
        base: BElement<E>,
        ambient: Ambient,
    },
}

impl<E> SolutionSet<E> {
    pub fn kind(&self) -> &'static str {
        match self {
            SolutionSet::NoSolution => "NoSolution",
            SolutionSet::Unique(_) => "Unique",
            SolutionSet::UpSet { .. } => "UpSet",
        }
    }

    /// The unique solution, or the base of the up-set.
    pub fn element(&self) -> Option<&BElement<E>> {
        match self {
            SolutionSet::NoSolution => None,
            SolutionSet::Unique(w) => Some(w),
            SolutionSet::UpSet { base, .. } => Some(base),
        }
    }
}

impl<E: fmt::Display> fmt::Display for SolutionSet<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionSet::NoSolution => f.write_str("no solution"),
            SolutionSet::Unique(w) => write!(f, "unique solution {w}"),
            SolutionSet::UpSet { base, ambient } => write!(f, "up-set of {base} in {ambient}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl<'g, G: OrderedGroup> Bicyclic<'g, G> {
    /// `s ≼ t` by the quotient criterion: `a^-1 b = c^-1 d` and `a >= c`.
    pub fn nat_leq(&self, s: &Pair<G>, t: &Pair<G>) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        let g = self.group();
        Ok(g.le(&t.left, &s.left)
            && g.left_quotient(&s.left, &s.right)? == g.left_quotient(&t.left, &t.right)?)
    }

    /// The mirrored criterion: `b^-1 a = d^-1 c` and `b >= d`.
    pub fn nat_leq_mirrored(&self, s: &Pair<G>, t: &Pair<G>) -> Result<bool> {
        self.check(s)?;
        self.check(t)?;
        let g = self.group();
        Ok(g.le(&t.right, &s.right)
            && g.left_quotient(&s.right, &s.left)? == g.left_quotient(&t.right, &t.left)?)
    }

    /// `s = s s^-1 t`.
    pub fn nat_leq_by_projection(&self, s: &Pair<G>, t: &Pair<G>) -> Result<bool> {
        let si = self.inverse(s)?;
        Ok(self.product(&[s, &si, t])? == *s)
    }

    /// Evaluates `s = s s^-1 t`, `s = t s^-1 s` and `s = e t` for some
    /// idempotent `e` built from the operands' coordinates, and returns their
    /// common verdict.
    pub fn nat_leq_oracle(&self, s: &Pair<G>, t: &Pair<G>) -> Result<bool> {
        let pool = [
            s.left.clone(),
            s.right.clone(),
            t.left.clone(),
            t.right.clone(),
        ];
        self.nat_leq_oracle_with_pool(s, t, &pool)
    }

    /// As [`Self::nat_leq_oracle`], searching idempotents `(x,x)` for `x` in
    /// `pool`.
    pub fn nat_leq_oracle_with_pool(
        &self,
        s: &Pair<G>,
        t: &Pair<G>,
        pool: &[G::Elem],
    ) -> Result<bool> {
        let si = self.inverse(s)?;
        let beta = self.product(&[s, &si, t])? == *s;
        let gamma = self.product(&[t, &si, s])? == *s;
        let mut alpha = false;
        for x in pool {
            let e = BElement::diagonal(x.clone());
            if !self.contains(&e) {
                continue;
            }
            if self.mul(&e, t)? == *s {
                alpha = true;
                break;
            }
        }
        if alpha != beta || beta != gamma {
            return Err(Error::Internal(format!(
                "natural order characterizations disagree on {s} vs {t}: \
                 idempotent={alpha} projection={beta} mirrored={gamma}"
            )));
        }
        Ok(beta)
    }

    /// Solves `target = known * (x, y)`.
    pub fn solve_right(&self, target: &Pair<G>, known: &Pair<G>) -> Result<SolutionSet<G::Elem>> {
        self.check(target)?;
        self.check(known)?;
        let g = self.group();
        let (a, b) = (&target.left, &target.right);
        let (c, d) = (&known.left, &known.right);
        Ok(match g.cmp(a, c) {
            Ordering::Less => SolutionSet::NoSolution,
            Ordering::Greater => {
                SolutionSet::Unique(BElement::new(g.mul_inv_mul(a, c, d)?, b.clone()))
            }
            Ordering::Equal => SolutionSet::UpSet {
                base: BElement::new(d.clone(), b.clone()),
                ambient: self.ambient(),
            },
        })
    }

    /// Solves `target = (x, y) * known`.
    pub fn solve_left(&self, target: &Pair<G>, known: &Pair<G>) -> Result<SolutionSet<G::Elem>> {
        self.check(target)?;
        self.check(known)?;
        let g = self.group();
        let (a, b) = (&target.left, &target.right);
        let (c, d) = (&known.left, &known.right);
        Ok(match g.cmp(b, d) {
            Ordering::Less => SolutionSet::NoSolution,
            Ordering::Greater => {
                SolutionSet::Unique(BElement::new(a.clone(), g.mul_inv_mul(b, d, c)?))
            }
            Ordering::Equal => SolutionSet::UpSet {
                base: BElement::new(a.clone(), c.clone()),
                ambient: self.ambient(),
            },
        })
    }

    pub fn solve(
        &self,
        side: Side,
        target: &Pair<G>,
        known: &Pair<G>,
    ) -> Result<SolutionSet<G::Elem>> {
        match side {
            Side::Right => self.solve_right(target, known),
            Side::Left => self.solve_left(target, known),
        }
    }

    /// Solves `(a,b) = (a,c) * (x,y) * (d,b)`; the solutions are the up-set
    /// of `(c, d)`.
    pub fn solve_sandwich(
        &self,
        target: &Pair<G>,
        left_known: &Pair<G>,
        right_known: &Pair<G>,
    ) -> Result<SolutionSet<G::Elem>> {
        self.check(target)?;
        self.check(left_known)?;
        self.check(right_known)?;
        if left_known.left != target.left || right_known.right != target.right {
            return Err(Error::MalformedEquation(format!(
                "expected {} = [{}|_] (x,y) [_|{}], got {} (x,y) {}",
                target, target.left, target.right, left_known, right_known
            )));
        }
        Ok(SolutionSet::UpSet {
            base: BElement::new(left_known.right.clone(), right_known.left.clone()),
            ambient: self.ambient(),
        })
    }

    /// Whether `w` is in the set described by `set`.
    pub fn solution_contains(&self, set: &SolutionSet<G::Elem>, w: &Pair<G>) -> Result<bool> {
        match set {
            SolutionSet::NoSolution => Ok(false),
            SolutionSet::Unique(u) => Ok(u == w),
            SolutionSet::UpSet { base, ambient } => {
                if *ambient == Ambient::Positive && !self.in_bplus(w) {
                    return Ok(false);
                }
                self.full().nat_leq(base, w)
            }
        }
    }

    /// Membership in `(a,a) S` (`Side::Right`, first coordinate `>= a`) or
    /// `S (a,a)` (`Side::Left`, second coordinate `>= a`), where `S` is the
    /// ambient semigroup.
    pub fn ideal_member(&self, s: &Pair<G>, anchor: &G::Elem, side: Side) -> Result<bool> {
        self.check_elem(&s.left)?;
        self.check_elem(&s.right)?;
        self.check_elem(anchor)?;
        if self.ambient() == Ambient::Positive && !self.in_bplus(s) {
            return Ok(false);
        }
        let g = self.group();
        Ok(match side {
            Side::Right => g.le(anchor, &s.left),
            Side::Left => g.le(anchor, &s.right),
        })
    }

    /// The finite part of the up-set of `base` whose coordinates lie in
    /// `[lo, hi]`, ordered by first coordinate.
    pub fn up_set_window(&self, base: &Pair<G>, lo: i64, hi: i64) -> Result<Vec<Pair<G>>> {
        self.check(base)?;
        let g = self.group();
        let window = g.enumerate_box(lo, hi).ok_or_else(|| {
            Error::NotApplicable(format!("{} cannot enumerate a window", g.name()))
        })?;
        let members: HashSet<&G::Elem> = window.iter().collect();
        let q = g.left_quotient(&base.left, &base.right)?;
        let mut out = Vec::new();
        for x in window.iter().filter(|x| g.le(x, &base.left)) {
            let y = g.mul(x, &q)?;
            if !members.contains(&y) {
                continue;
            }
            let w = BElement::new(x.clone(), y);
            if self.contains(&w) {
                out.push(w);
            }
        }
        out.sort_by(|s, t| g.cmp(&s.left, &t.left));
        Ok(out)
    }
}
