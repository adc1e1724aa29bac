//! Named brute-force checks over finite windows, grouped into suites.
//!
//! Every check enumerates its cases in "shell" order (tuples with smaller
//! maximal index first), so the first failure found is also a smallest one.
//! When the exhaustive case count exceeds the configured budget the check
//! draws a seeded sample instead and says so in its note. Given the same
//! group, window, seed and budget the report is identical apart from the
//! timing fields.

use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bext::{Ambient, BElement, Bicyclic, Pair};
use crate::error::{Error, Result};
use crate::group::axioms::{check_positive_cone_axioms, successor_check};
use crate::group::OrderedGroup;
use crate::order::{Side, SolutionSet};
use crate::pmap::{self, PartialShift};
use crate::witness::{self, DensityVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteName {
    Axioms,
    Semigroup,
    Order,
    Solvers,
    Ideals,
    Pmaps,
    Witnesses,
    Escapes,
}

impl SuiteName {
    pub const ALL: [SuiteName; 8] = [
        SuiteName::Axioms,
        SuiteName::Semigroup,
        SuiteName::Order,
        SuiteName::Solvers,
        SuiteName::Ideals,
        SuiteName::Pmaps,
        SuiteName::Witnesses,
        SuiteName::Escapes,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Axioms => "axioms",
            SuiteName::Semigroup => "semigroup",
            SuiteName::Order => "order",
            SuiteName::Solvers => "solvers",
            SuiteName::Ideals => "ideals",
            SuiteName::Pmaps => "pmaps",
            SuiteName::Witnesses => "witnesses",
            SuiteName::Escapes => "escapes",
        }
    }
}

impl Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::parse(0, format!("unknown suite `{s}`")))
    }
}

/// Parses `all` or a comma-separated list of suite names. Errors carry the
/// byte offset of the offending name.
pub fn parse_suite_list(text: &str) -> Result<Vec<SuiteName>> {
    if text.trim() == "all" {
        return Ok(SuiteName::ALL.to_vec());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let lead = part.len() - part.trim_start().len();
        let name = part.trim();
        match name.parse::<SuiteName>() {
            Ok(n) => {
                if !out.contains(&n) {
                    out.push(n);
                }
            }
            Err(_) => {
                return Err(Error::parse(
                    offset + lead,
                    format!(
                        "unknown suite `{name}` (expected all or a list of: {})",
                        SuiteName::ALL.map(SuiteName::as_str).join(", ")
                    ),
                ))
            }
        }
        offset += part.len() + 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Coordinate bound: windows are the boxes `[-window, window]`.
    pub window: u32,
    pub sample_seed: u64,
    pub suites: Vec<SuiteName>,
    /// Largest number of cases a single check enumerates before it switches
    /// to seeded sampling.
    pub budget: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            window: 4,
            sample_seed: 0,
            suites: SuiteName::ALL.to_vec(),
            budget: 200_000,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.window < 1 {
            return Err(Error::PreconditionViolated(
                "window must be at least 1".into(),
            ));
        }
        if self.budget == 0 {
            return Err(Error::PreconditionViolated(
                "budget must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub suite: SuiteName,
    pub name: String,
    pub status: Status,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub cases: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub group: String,
    pub window: u32,
    pub sample_seed: u64,
    pub budget: usize,
    pub checks: Vec<CheckReport>,
    pub totals: Totals,
    pub wall_ms: f64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn check(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// The report with every timing field zeroed.
    pub fn without_timing(&self) -> SuiteReport {
        let mut r = self.clone();
        r.wall_ms = 0.0;
        for c in &mut r.checks {
            c.wall_ms = 0.0;
        }
        r
    }
}

/// Names of every check a suite registers, in report order.
pub fn registry(suite: SuiteName) -> &'static [&'static str] {
    match suite {
        SuiteName::Axioms => &[
            "group.associativity",
            "group.identity_inverse",
            "order.trichotomy",
            "order.transitivity",
            "order.bi_invariance",
            "order.designated_positive",
            "cone.axioms",
            "successor.minimality",
            "successor.predecessor_inverse",
            "density.midpoint",
        ],
        SuiteName::Semigroup => &[
            "bext.associativity",
            "bext.inverse_law",
            "bext.inverse_uniqueness",
            "bext.idempotent_iff_diagonal",
            "bext.idempotents_commute",
            "bext.no_identity",
            "bplus.closure",
            "bplus.identity",
            "bplus.bicyclic_relation",
        ],
        SuiteName::Order => &[
            "natord.matches_oracle",
            "natord.characterizations_agree.B",
            "natord.characterizations_agree.B+",
            "natord.reflexive",
            "natord.antisymmetric",
            "natord.transitive",
            "natord.compatible",
            "natord.outer_factorization",
        ],
        SuiteName::Solvers => &[
            "solve.right.B",
            "solve.left.B",
            "solve.right.B+",
            "solve.left.B+",
            "solve.sandwich.B",
            "solve.sandwich.B+",
        ],
        SuiteName::Ideals => &[
            "ideal.right.B",
            "ideal.left.B",
            "ideal.right.B+",
            "ideal.left.B+",
        ],
        SuiteName::Pmaps => &[
            "pmap.representation",
            "pmap.pointwise_composition",
            "pmap.bijectivity",
        ],
        SuiteName::Witnesses => &["witness.chains"],
        SuiteName::Escapes => &[
            "escape.region",
            "escape.stabilizer_identification",
            "density.probe",
        ],
    }
}

pub fn run_suites<G: OrderedGroup>(group: &G, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let ctx = Ctx::new(group, cfg);
    let checks: Vec<CheckReport> = cfg
        .suites
        .par_iter()
        .map(|s| ctx.run(*s))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let mut totals = Totals {
        checks: checks.len(),
        ..Totals::default()
    };
    for c in &checks {
        totals.cases += c.cases;
        match c.status {
            Status::Pass => totals.passed += 1,
            Status::Fail => totals.failed += 1,
            Status::NotApplicable => totals.not_applicable += 1,
        }
    }
    Ok(SuiteReport {
        group: group.name(),
        window: cfg.window,
        sample_seed: cfg.sample_seed,
        budget: cfg.budget,
        checks,
        totals,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// A failed case, carrying its counterexample description.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

type Outcome = std::result::Result<(), Failure>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(Failure(format!($($arg)+)));
        }
    };
}

/// Index tuples over `0..n`: exhaustive when `n^K <= budget`, otherwise a
/// seeded sample of `budget` tuples. Sorted by (max index, tuple).
fn index_tuples<const K: usize>(n: usize, budget: usize, seed: u64) -> (Vec<[usize; K]>, bool) {
    if n == 0 {
        return (Vec::new(), true);
    }
    let total = (n as u128).checked_pow(K as u32).unwrap_or(u128::MAX);
    let exhaustive = total <= budget as u128;
    let mut v: Vec<[usize; K]> = if exhaustive {
        let mut out = Vec::with_capacity(total as usize);
        let mut cur = [0usize; K];
        'odometer: loop {
            out.push(cur);
            let mut i = K;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < n {
                    break;
                }
                cur[i] = 0;
            }
        }
        out
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..budget)
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..n)))
            .collect()
    };
    v.sort_by_key(|t| (t.iter().copied().max().unwrap_or(0), *t));
    v.dedup();
    (v, exhaustive)
}

fn name_seed(seed: u64, name: &str) -> u64 {
    // FNV-1a over the check name, mixed with the configured seed.
    name.bytes().fold(0xcbf2_9ce4_8422_2325u64 ^ seed, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

const PAIR_POOL_CAP: usize = 2500;
const NEAR_LEN: usize = 27;

struct Ctx<'g, G: OrderedGroup> {
    group: &'g G,
    cfg: &'g SuiteConfig,
    elems: Vec<G::Elem>,
    /// The elements closest to the identity.
    near: Vec<G::Elem>,
    bpool: Vec<Pair<G>>,
    bplus: Vec<Pair<G>>,
}

impl<'g, G: OrderedGroup> Ctx<'g, G> {
    fn new(group: &'g G, cfg: &'g SuiteConfig) -> Self {
        let elems = group.sample_window(cfg.window, cfg.sample_seed);
        let near = elems.iter().take(NEAR_LEN).cloned().collect();
        let positives: Vec<G::Elem> = elems
            .iter()
            .filter(|g| group.is_positive(g))
            .cloned()
            .collect();
        let bpool = Self::pair_pool(&elems, cfg.sample_seed ^ 0x5eed);
        let bplus = Self::pair_pool(&positives, cfg.sample_seed ^ 0x9105);
        Ctx {
            group,
            cfg,
            elems,
            near,
            bpool,
            bplus,
        }
    }

    fn pair_pool(elems: &[G::Elem], seed: u64) -> Vec<Pair<G>> {
        let (idx, _) = index_tuples::<2>(elems.len(), PAIR_POOL_CAP, seed);
        idx.into_iter()
            .map(|[i, j]| BElement::new(elems[i].clone(), elems[j].clone()))
            .collect()
    }

    fn b(&self) -> Bicyclic<'g, G> {
        Bicyclic::new(self.group)
    }

    fn bp(&self) -> Bicyclic<'g, G> {
        Bicyclic::positive(self.group)
    }

    fn run(&self, suite: SuiteName) -> Vec<CheckReport> {
        match suite {
            SuiteName::Axioms => self.axioms(),
            SuiteName::Semigroup => self.semigroup(),
            SuiteName::Order => self.order(),
            SuiteName::Solvers => self.solvers(),
            SuiteName::Ideals => self.ideals(),
            SuiteName::Pmaps => self.pmaps(),
            SuiteName::Witnesses => self.witnesses(),
            SuiteName::Escapes => self.escapes(),
        }
    }

    /// Runs `f` over `K`-tuples drawn from `pool`.
    fn over<T: Sync, const K: usize>(
        &self,
        suite: SuiteName,
        name: &str,
        pool: &[T],
        budget: usize,
        mut f: impl FnMut([&T; K]) -> Outcome,
    ) -> CheckReport {
        let start = Instant::now();
        let (tuples, exhaustive) = index_tuples::<K>(
            pool.len(),
            budget.max(1),
            name_seed(self.cfg.sample_seed, name),
        );
        let mut cases = 0u64;
        let mut counterexample = None;
        for t in &tuples {
            cases += 1;
            if let Err(Failure(msg)) = f(t.map(|i| &pool[i])) {
                counterexample = Some(msg);
                break;
            }
        }
        let note = (!exhaustive).then(|| {
            format!(
                "sampled {} of {}^{} tuples (seeded)",
                tuples.len(),
                pool.len(),
                K
            )
        });
        CheckReport {
            suite,
            name: name.to_string(),
            status: if counterexample.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            cases,
            counterexample,
            note,
            wall_ms: start.elapsed().as_secs_f64() * 1e3,
        }
    }

    fn not_applicable(&self, suite: SuiteName, name: &str, why: impl Into<String>) -> CheckReport {
        CheckReport {
            suite,
            name: name.to_string(),
            status: Status::NotApplicable,
            cases: 0,
            counterexample: None,
            note: Some(why.into()),
            wall_ms: 0.0,
        }
    }

    fn axioms(&self) -> Vec<CheckReport> {
        let s = SuiteName::Axioms;
        let g = self.group;
        let e = g.identity();
        let budget = self.cfg.budget;
        let mut out = vec![
            self.over(s, "group.associativity", &self.elems, budget, |[a, b, c]| {
                let l = g.mul(&g.mul(a, b)?, c)?;
                let r = g.mul(a, &g.mul(b, c)?)?;
                ensure!(l == r, "a={a}, b={b}, c={c}: (ab)c={l} != a(bc)={r}");
                Ok(())
            }),
            self.over(s, "group.identity_inverse", &self.elems, budget, |[a]| {
                ensure!(
                    g.mul(a, &e)? == *a && g.mul(&e, a)? == *a,
                    "{a} is not fixed by the identity"
                );
                let ai = g.inv(a)?;
                ensure!(
                    g.mul(a, &ai)? == e && g.mul(&ai, a)? == e,
                    "{a} * {ai} is not the identity"
                );
                Ok(())
            }),
            self.over(s, "order.trichotomy", &self.elems, budget, |[a, b]| {
                let ab = g.cmp(a, b);
                ensure!(
                    ab == g.cmp(b, a).reverse(),
                    "cmp({a},{b}) and cmp({b},{a}) are not opposite"
                );
                ensure!(
                    (ab == std::cmp::Ordering::Equal) == (a == b),
                    "cmp({a},{b}) = {ab:?}"
                );
                Ok(())
            }),
            self.over(s, "order.transitivity", &self.elems, budget, |[a, b, c]| {
                if g.le(a, b) && g.le(b, c) {
                    ensure!(g.le(a, c), "{a} <= {b} <= {c} but not {a} <= {c}");
                }
                Ok(())
            }),
            self.over(s, "order.bi_invariance", &self.elems, budget, |[a, b, x]| {
                if g.lt(a, b) {
                    let (ar, br) = (g.mul(a, x)?, g.mul(b, x)?);
                    ensure!(
                        g.lt(&ar, &br),
                        "{a} < {b} but {a}*{x}={ar} is not below {b}*{x}={br}"
                    );
                    let (al, bl) = (g.mul(x, a)?, g.mul(x, b)?);
                    ensure!(
                        g.lt(&al, &bl),
                        "{a} < {b} but {x}*{a}={al} is not below {x}*{b}={bl}"
                    );
                }
                Ok(())
            }),
            self.over(s, "order.designated_positive", &[()], 1, |[()]| {
                let p = g.designated_positive();
                ensure!(
                    g.lt(&e, &p),
                    "designated positive {p} is not above the identity"
                );
                Ok(())
            }),
            self.over(s, "cone.axioms", &[()], 1, |[()]| {
                let v = check_positive_cone_axioms(g, &self.elems)?;
                if let Some((x, y)) = &v.counterexample {
                    let which = if !v.closure_ok {
                        format!("closure: {x} * {y} is not positive")
                    } else if !v.antisymmetry_ok {
                        format!("antisymmetry: {x} and its inverse {y} are both positive")
                    } else {
                        format!("conjugation: {x}^-1 * {y} * {x} is not positive")
                    };
                    return Err(Failure(which));
                }
                Ok(())
            }),
        ];
        if g.has_successor() {
            out.push(self.over(
                s,
                "successor.minimality",
                &self.elems,
                budget / 128,
                |[x]| {
                    ensure!(successor_check(g, x, 2)?, "successor of {x} is not minimal");
                    Ok(())
                },
            ));
            out.push(self.over(
                s,
                "successor.predecessor_inverse",
                &self.elems,
                budget,
                |[x]| {
                    let sp = g.successor(&g.predecessor(x)?)?;
                    let ps = g.predecessor(&g.successor(x)?)?;
                    ensure!(
                        sp == *x && ps == *x,
                        "succ(pred {x})={sp}, pred(succ {x})={ps}"
                    );
                    Ok(())
                },
            ));
        } else {
            let why = format!("{} declares no successor", g.name());
            out.push(self.not_applicable(s, "successor.minimality", why.clone()));
            out.push(self.not_applicable(s, "successor.predecessor_inverse", why));
        }
        if g.densely_ordered() {
            out.push(
                self.over(s, "density.midpoint", &self.elems, budget, |[a, b]| {
                    if g.lt(a, b) {
                        let m = g.between(a, b)?;
                        ensure!(
                            m.as_ref().is_some_and(|m| g.lt(a, m) && g.lt(m, b)),
                            "no element strictly between {a} and {b}"
                        );
                    }
                    Ok(())
                }),
            );
        } else {
            out.push(self.not_applicable(s, "density.midpoint", "not densely ordered"));
        }
        out
    }

    fn semigroup(&self) -> Vec<CheckReport> {
        let s = SuiteName::Semigroup;
        let g = self.group;
        let b = self.b();
        let bp = self.bp();
        let budget = self.cfg.budget;
        let e = g.identity();
        let idempotents: Vec<Pair<G>> = self
            .elems
            .iter()
            .map(|x| BElement::diagonal(x.clone()))
            .collect();
        vec![
            self.over(s, "bext.associativity", &self.bpool, budget, |[x, y, z]| {
                let l = b.mul(&b.mul(x, y)?, z)?;
                let r = b.mul(x, &b.mul(y, z)?)?;
                ensure!(l == r, "s={x}, t={y}, u={z}: (st)u={l} != s(tu)={r}");
                Ok(())
            }),
            self.over(s, "bext.inverse_law", &self.bpool, budget, |[x]| {
                let xi = b.inverse(x)?;
                ensure!(b.product(&[x, &xi, x])? == *x, "s s^-1 s != s for s={x}");
                ensure!(
                    b.product(&[&xi, x, &xi])? == xi,
                    "s^-1 s s^-1 != s^-1 for s={x}"
                );
                Ok(())
            }),
            self.over(
                s,
                "bext.inverse_uniqueness",
                &self.bpool,
                budget,
                |[x, y]| {
                    if b.product(&[x, y, x])? == *x && b.product(&[y, x, y])? == *y {
                        ensure!(
                            *y == x.swapped(),
                            "{y} is an inverse of {x} other than {}",
                            x.swapped()
                        );
                    }
                    Ok(())
                },
            ),
            self.over(
                s,
                "bext.idempotent_iff_diagonal",
                &self.bpool,
                budget,
                |[x]| {
                    let sq = b.mul(x, x)?;
                    ensure!((sq == *x) == x.is_idempotent(), "s={x}: s*s={sq}");
                    Ok(())
                },
            ),
            self.over(
                s,
                "bext.idempotents_commute",
                &idempotents,
                budget,
                |[x, y]| {
                    let (l, r) = (b.mul(x, y)?, b.mul(y, x)?);
                    ensure!(l == r, "{x}{y}={l} but {y}{x}={r}");
                    Ok(())
                },
            ),
            self.over(s, "bext.no_identity", &self.bpool, budget / 64, |[u]| {
                // Probes: the pool plus an idempotent strictly below both
                // coordinates of the candidate.
                let low = g.strictly_below(g.max(&u.left, &u.right))?;
                let low = g.strictly_below(if g.lt(&u.left, &u.right) {
                    &u.left
                } else {
                    &low
                })?;
                let extra = BElement::diagonal(low);
                for t in self.bpool.iter().chain(std::iter::once(&extra)) {
                    if b.mul(u, t)? != *t || b.mul(t, u)? != *t {
                        return Ok(());
                    }
                }
                Err(Failure(format!("{u} fixes every probe")))
            }),
            self.over(s, "bplus.closure", &self.bplus, budget, |[x, y]| {
                let p = b.mul(x, y)?;
                ensure!(bp.in_bplus(&p), "{x} * {y} = {p} leaves B+");
                Ok(())
            }),
            self.over(s, "bplus.identity", &self.bplus, budget, |[x]| {
                let one = bp.monoid_identity()?;
                ensure!(
                    bp.mul(&one, x)? == *x && bp.mul(x, &one)? == *x,
                    "{one} does not fix {x}"
                );
                Ok(())
            }),
            self.over(s, "bplus.bicyclic_relation", &[()], 1, |[()]| {
                let one = bp.monoid_identity()?;
                let pos = g.designated_positive();
                let p = BElement::new(e.clone(), pos.clone());
                let q = BElement::new(pos, e.clone());
                let pq = bp.mul(&p, &q)?;
                let qp = bp.mul(&q, &p)?;
                ensure!(pq == one, "p q = {pq}, expected {one}");
                ensure!(qp != one, "q p = {qp} equals the identity");
                Ok(())
            }),
        ]
    }

    fn order(&self) -> Vec<CheckReport> {
        let s = SuiteName::Order;
        let g = self.group;
        let b = self.b();
        let bp = self.bp();
        let budget = self.cfg.budget;
        let agree = |bb: Bicyclic<'g, G>, x: &Pair<G>, y: &Pair<G>| -> Outcome {
            let ii = bb.nat_leq(x, y)?;
            let iii = bb.nat_leq_mirrored(x, y)?;
            let i = bb.nat_leq_by_projection(x, y)?;
            ensure!(
                i == ii && ii == iii,
                "{x} vs {y}: projection={i} quotient={ii} mirrored={iii}"
            );
            Ok(())
        };
        let mut out = vec![
            self.over(s, "natord.matches_oracle", &self.bpool, budget, |[x, y]| {
                let fast = b.nat_leq(x, y)?;
                let slow = b.nat_leq_oracle(x, y)?;
                ensure!(fast == slow, "{x} vs {y}: criterion={fast} oracle={slow}");
                Ok(())
            }),
            self.over(
                s,
                "natord.characterizations_agree.B",
                &self.bpool,
                budget,
                |[x, y]| agree(b, x, y),
            ),
            self.over(
                s,
                "natord.characterizations_agree.B+",
                &self.bplus,
                budget,
                |[x, y]| agree(bp, x, y),
            ),
            self.over(s, "natord.reflexive", &self.bpool, budget, |[x]| {
                ensure!(b.nat_leq(x, x)?, "{x} is not below itself");
                Ok(())
            }),
            self.over(s, "natord.antisymmetric", &self.bpool, budget, |[x, y]| {
                if b.nat_leq(x, y)? && b.nat_leq(y, x)? {
                    ensure!(x == y, "{x} and {y} are mutually below each other");
                }
                Ok(())
            }),
            self.over(s, "natord.transitive", &self.bpool, budget, |[x, y, z]| {
                if b.nat_leq(x, y)? && b.nat_leq(y, z)? {
                    ensure!(b.nat_leq(x, z)?, "{x} <= {y} <= {z} but not {x} <= {z}");
                }
                Ok(())
            }),
        ];
        // Compatibility is exercised on related pairs: s = (c,c) t is always
        // below t.
        let n = self.bpool.len().max(1);
        let triples: Vec<(usize, usize)> = (0..n.min(budget))
            .flat_map(|i| (0..self.near.len()).map(move |j| (i, j)))
            .collect();
        out.push(self.over(
            s,
            "natord.compatible",
            &triples,
            budget / n.max(1) + 1,
            |[&(ti, ci)]| {
                let t = &self.bpool[ti % self.bpool.len()];
                let x = b.mul(&BElement::diagonal(self.near[ci].clone()), t)?;
                ensure!(b.nat_leq(&x, t)?, "(c,c){t} = {x} is not below {t}");
                for u in self.bpool.iter().take(64) {
                    let (xu, tu) = (b.mul(&x, u)?, b.mul(t, u)?);
                    ensure!(
                        b.nat_leq(&xu, &tu)?,
                        "{x} <= {t} but {x}{u}={xu} not <= {t}{u}={tu}"
                    );
                    let (ux, ut) = (b.mul(u, &x)?, b.mul(u, t)?);
                    ensure!(
                        b.nat_leq(&ux, &ut)?,
                        "{x} <= {t} but {u}{x}={ux} not <= {u}{t}={ut}"
                    );
                }
                Ok(())
            },
        ));
        out.push(self.over(
            s,
            "natord.outer_factorization",
            &self.elems,
            budget,
            |[a0, b0, c0, d0]| {
                let p = b.product(&[
                    &BElement::new(a0.clone(), c0.clone()),
                    &BElement::new(c0.clone(), d0.clone()),
                    &BElement::new(d0.clone(), b0.clone()),
                ])?;
                ensure!(
                    p == BElement::new(a0.clone(), b0.clone()),
                    "(a,c)(c,d)(d,b) = {p} for a={a0} b={b0} c={c0} d={d0}"
                );
                Ok(())
            },
        ));
        let _ = g;
        out
    }

    fn solvers(&self) -> Vec<CheckReport> {
        let s = SuiteName::Solvers;
        let budget = self.cfg.budget;
        let mut out = Vec::new();
        for (bb, pool) in [(self.b(), &self.bpool), (self.bp(), &self.bplus)] {
            let tag = bb.ambient();
            for side in [Side::Right, Side::Left] {
                let name = format!("solve.{side}.{tag}");
                let per = budget / pool.len().max(1);
                out.push(self.over(s, &name, pool, per, |[target, known]| {
                    let set = bb.solve(side, target, known)?;
                    solver_matches_bruteforce(bb, &set, pool, target, |w| match side {
                        Side::Right => bb.mul(known, w),
                        Side::Left => bb.mul(w, known),
                    })
                }));
            }
        }
        for (bb, elems) in [
            (self.b(), self.elems.clone()),
            (
                self.bp(),
                self.elems
                    .iter()
                    .filter(|x| self.group.is_positive(x))
                    .cloned()
                    .collect::<Vec<_>>(),
            ),
        ] {
            let pool = if bb.ambient() == Ambient::Full {
                &self.bpool
            } else {
                &self.bplus
            };
            let name = format!("solve.sandwich.{}", bb.ambient());
            let per = budget / pool.len().max(1);
            out.push(self.over(s, &name, &elems, per, |[a, b0, c, d]| {
                let target = BElement::new(a.clone(), b0.clone());
                let lk = BElement::new(a.clone(), c.clone());
                let rk = BElement::new(d.clone(), b0.clone());
                let set = bb.solve_sandwich(&target, &lk, &rk)?;
                solver_matches_bruteforce(bb, &set, pool, &target, |w| bb.product(&[&lk, w, &rk]))
            }));
        }
        out
    }

    fn ideals(&self) -> Vec<CheckReport> {
        let s = SuiteName::Ideals;
        let budget = self.cfg.budget;
        let mut out = Vec::new();
        let full = self.b();
        for (bb, pool) in [(self.b(), &self.bpool), (self.bp(), &self.bplus)] {
            for side in [Side::Right, Side::Left] {
                let name = format!("ideal.{side}.{}", bb.ambient());
                let per = budget / pool.len().max(1);
                let anchors: Vec<(usize, usize)> = (0..pool.len())
                    .flat_map(|i| (0..self.near.len()).map(move |j| (i, j)))
                    .collect();
                out.push(self.over(s, &name, &anchors, per, |[&(si, ai)]| {
                    let x = &pool[si];
                    let a = &self.near[ai];
                    let claimed = bb.ideal_member(x, a, side)?;
                    let e = BElement::diagonal(a.clone());
                    let mut found = None;
                    // `x` itself is the canonical witness whenever one exists.
                    for t in std::iter::once(x).chain(pool.iter()) {
                        let p = match side {
                            Side::Right => full.mul(&e, t)?,
                            Side::Left => full.mul(t, &e)?,
                        };
                        if p == *x {
                            found = Some(t);
                            break;
                        }
                    }
                    ensure!(
                        claimed == found.is_some(),
                        "s={x}, anchor {a}, {side}: criterion={claimed}, witness={}",
                        found.map_or("none".to_string(), |t| t.to_string())
                    );
                    Ok(())
                }));
            }
        }
        out
    }

    fn pmaps(&self) -> Vec<CheckReport> {
        let s = SuiteName::Pmaps;
        let g = self.group;
        let b = self.b();
        let budget = self.cfg.budget;
        let around = |anchors: &[&G::Elem]| -> Result<Vec<G::Elem>> {
            let mut v = self.near.clone();
            for a in anchors {
                for w in &self.near {
                    v.push(g.mul(a, w)?);
                }
            }
            Ok(v)
        };
        vec![
            self.over(s, "pmap.representation", &self.bpool, budget, |[x, y]| {
                let prod = b.mul(x, y)?;
                let comp = pmap::pair_of_composite(g, x, y)?;
                ensure!(prod == comp, "{x}{y}: pair product {prod}, composed shift {comp}");
                Ok(())
            }),
            self.over(s, "pmap.pointwise_composition", &self.bpool, budget / 256, |[x, y]| {
                let m1 = PartialShift::from_pair(x);
                let m2 = PartialShift::from_pair(y);
                let c = pmap::compose_formula(g, &m1, &m2)?;
                let samples = around(&[&x.left, &x.right, &y.left, &y.right, &c.domain])?;
                ensure!(
                    pmap::compose_pointwise_oracle(g, &m1, &m2, &samples)?,
                    "shift {m1} then {m2} disagrees with closed form {c}"
                );
                Ok(())
            }),
            self.over(s, "pmap.bijectivity", &self.bpool, budget / 64, |[x]| {
                let m = PartialShift::from_pair(x);
                let back = PartialShift::new(x.right.clone(), x.left.clone());
                let mut seen = std::collections::HashSet::new();
                for p in around(&[&x.left])? {
                    if !pmap::in_domain(g, &m, &p) {
                        continue;
                    }
                    let img = pmap::apply(g, &m, &p)?;
                    ensure!(g.le(&x.right, &img), "{m} sends {p} to {img} outside its codomain");
                    let ret = pmap::apply(g, &back, &img)?;
                    ensure!(ret == p, "{m} then its inverse sends {p} to {ret}");
                    if seen.insert(p.clone()) {
                        ensure!(
                            !seen.iter().any(|q| *q != p && pmap::apply(g, &m, q).ok() == Some(img.clone())),
                            "{m} is not injective at {p}"
                        );
                    }
                }
                Ok(())
            }),
        ]
    }

    fn witnesses(&self) -> Vec<CheckReport> {
        let s = SuiteName::Witnesses;
        let g = self.group;
        let b = self.b();
        let near: Vec<&G::Elem> = self.near.iter().take(9).collect();
        let per = (self.cfg.budget / (near.len() * near.len()).max(1)).max(1);
        let neighbourhood = |p: &Pair<G>| -> Result<Vec<Pair<G>>> {
            let mut v = Vec::with_capacity(near.len() * near.len());
            for w1 in &near {
                for w2 in &near {
                    v.push(BElement::new(g.mul(&p.left, w1)?, g.mul(&p.right, w2)?));
                }
            }
            Ok(v)
        };
        vec![
            self.over(s, "witness.chains", &self.bpool, per, |[seed, target]| {
                let chain = witness::build_witness_chain(g, seed, target)?;
                for w in neighbourhood(&chain.intermediate)?
                    .iter()
                    .chain(&self.bpool)
                {
                    if b.mul(w, &chain.right_translator)? == *seed {
                        ensure!(
                            *w == chain.intermediate,
                            "second solution {w} of {seed} = (x,y){}",
                            chain.right_translator
                        );
                    }
                }
                for w in neighbourhood(target)?.iter().chain(&self.bpool) {
                    if b.mul(&chain.left_translator, w)? == chain.intermediate {
                        ensure!(
                            w == target,
                            "second solution {w} of {} = {}(x,y)",
                            chain.intermediate,
                            chain.left_translator
                        );
                    }
                }
                Ok(())
            }),
        ]
    }

    fn escapes(&self) -> Vec<CheckReport> {
        let s = SuiteName::Escapes;
        let g = self.group;
        let b = self.b();
        let budget = self.cfg.budget;
        let e = g.identity();
        let idem = BElement::diagonal(e.clone());
        let mut out = Vec::new();
        if g.has_successor() {
            let below: Vec<G::Elem> = self.elems.iter().filter(|x| g.le(x, &e)).cloned().collect();
            let e_plus = g.successor(&e);
            out.push(self.over(s, "escape.region", &below, budget, |[x, y]| {
                if x == y {
                    return Ok(());
                }
                let point = BElement::new(x.clone(), y.clone());
                let cert = witness::escape_certificate(g, &idem, &point)?;
                let a_plus = e_plus.clone()?;
                let side = if g.lt(x, y) { Side::Left } else { Side::Right };
                ensure!(cert.side == side, "{point}: certificate side {}", cert.side);
                ensure!(
                    b.ideal_member(&cert.product, &a_plus, side)?,
                    "{point}: product {} is not in the {side} ideal at {a_plus}",
                    cert.product
                );
                Ok(())
            }));
        } else {
            out.push(self.not_applicable(
                s,
                "escape.region",
                format!("{} is densely ordered", g.name()),
            ));
        }
        out.push(self.over(
            s,
            "escape.stabilizer_identification",
            &self.bpool,
            budget / NEAR_LEN,
            |[x]| {
                for a in &self.near {
                    let member = witness::dl_set_member(g, x, a)?;
                    let predicted = x.is_idempotent() && g.le(&x.left, a);
                    ensure!(
                        member == predicted,
                        "s={x}, anchor {a}: s(a,a)=(a,a) is {member}"
                    );
                }
                Ok(())
            },
        ));
        out.push(self.over(s, "density.probe", &[()], 1, |[()]| {
            match witness::density_probe(g, &self.elems)? {
                DensityVerdict::NotDenselyOrdered { minimal_positive } => {
                    ensure!(
                        g.has_successor(),
                        "probe found a successor in a dense instance"
                    );
                    for x in &self.elems {
                        ensure!(
                            !(g.lt(&e, x) && g.lt(x, &minimal_positive)),
                            "{x} is positive and below the minimal positive {minimal_positive}"
                        );
                    }
                }
                DensityVerdict::DenselyOrdered { witnesses } => {
                    let positives = self.elems.iter().filter(|x| g.lt(&e, x)).count();
                    ensure!(
                        witnesses.len() == positives,
                        "only {} of {positives} positives have witnesses",
                        witnesses.len()
                    );
                }
            }
            Ok(())
        }));
        out
    }
}

/// Compares a solver's answer with brute force over `pool`: the pool
/// elements satisfying the equation must be exactly the pool elements the
/// answer describes, and a unique solution must satisfy the equation even
/// when it lies outside the pool.
fn solver_matches_bruteforce<G: OrderedGroup>(
    bb: Bicyclic<'_, G>,
    set: &SolutionSet<G::Elem>,
    pool: &[Pair<G>],
    target: &Pair<G>,
    mut apply: impl FnMut(&Pair<G>) -> Result<Pair<G>>,
) -> Outcome {
    if let SolutionSet::Unique(u) = set {
        let got = apply(u)?;
        ensure!(
            got == *target,
            "claimed solution {u} gives {got}, not {target}"
        );
    }
    for w in pool {
        let solves = apply(w)? == *target;
        let described = bb.solution_contains(set, w)?;
        ensure!(
            solves == described,
            "target {target}: {w} {} the equation but the answer ({set}) says otherwise",
            if solves { "solves" } else { "does not solve" }
        );
    }
    Ok(())
}
