use std::process::ExitCode;

use bicyclic::group::{AnyGroup, Element, GroupKind, Heisenberg, Integers, LexPairs, Rationals};
use bicyclic::parse::{parse_element, parse_pair};
use bicyclic::pmap::{self, PartialShift};
use bicyclic::suite::{parse_suite_list, run_suites, Status, SuiteConfig, SuiteName, SuiteReport};
use bicyclic::witness::{self, DensityVerdict};
use bicyclic::{Ambient, BElement, Bicyclic, Error, OrderedGroup, Side, SolutionSet};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Arithmetic and checks for bicyclic extensions B(G) and B+(G)"
)]
struct Cli {
    /// Group instance: Z, Q, ZxZ or H3.
    #[arg(long, global = true, default_value = "Z", value_parser = parse_group)]
    group: GroupKind,
    /// Coordinate bound for windows [-w, w].
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    window: u32,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for sampled rationals and sampled check tuples.
    #[arg(long = "sample-seed", global = true, default_value_t = 0)]
    sample_seed: u64,
    /// Work in B+(G) instead of B(G).
    #[arg(long, global = true)]
    plus: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveSide {
    Left,
    Right,
    Sandwich,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two or more pairs, left to right.
    Mul {
        #[arg(num_args = 2.., required = true)]
        factors: Vec<String>,
    },
    /// Inverse of a pair.
    Inv { s: String },
    /// Natural partial order: is s below t?
    Leq { s: String, t: String },
    /// Solve target = known (x,y), target = (x,y) known, or the sandwich
    /// target = known (x,y) known_right.
    Solve {
        #[arg(long)]
        target: String,
        #[arg(long)]
        known: String,
        #[arg(long, value_enum, default_value_t = SolveSide::Right)]
        side: SolveSide,
        #[arg(long = "known-right", required_if_eq("side", "sandwich"))]
        known_right: Option<String>,
    },
    /// Membership in the principal right ideal (a,a)B or left ideal B(a,a).
    Ideal {
        #[arg(long)]
        s: String,
        #[arg(long)]
        anchor: String,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Elements of the up-set of a pair inside the window.
    Upset {
        #[arg(long)]
        base: String,
    },
    /// Partial shifts x -> x g^-1 h.
    Pmap {
        #[command(subcommand)]
        cmd: PmapCmd,
    },
    /// Two-step translation chain from seed to target.
    Witness {
        #[arg(long)]
        seed: String,
        #[arg(long)]
        target: String,
    },
    /// Escape certificates for every window point (x,y) with x, y <= a, x != y.
    Escape {
        /// Idempotent anchor; defaults to the identity.
        #[arg(long)]
        a: Option<String>,
    },
    /// Run the named brute-force check suites.
    Check {
        /// `all` or a comma-separated list of suites.
        #[arg(long, default_value = "all")]
        suites: String,
        /// Cases per check before switching to seeded sampling.
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
    },
}

#[derive(Subcommand)]
enum PmapCmd {
    /// Apply the shift from G+(g) to G+(h) at x.
    Apply {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        x: String,
    },
    /// Check the closed composition formula against pointwise composition.
    CheckCompose,
}

fn parse_group(s: &str) -> Result<GroupKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a subcommand produced: a JSON document, its text rendering, and
/// whether every check in it held.
struct Report {
    json: Value,
    text: String,
    ok: bool,
}

impl Report {
    fn ok(json: Value, text: impl Into<String>) -> Self {
        Report {
            json,
            text: text.into(),
            ok: true,
        }
    }
}

enum Failure {
    /// Malformed input: exit status 2.
    Usage(String),
    /// A well-formed request the mathematics rejects: exit status 1.
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type Pair = BElement<Element>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.output {
                Output::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("report serializes")
                ),
                Output::Text => print!("{}", report.text),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            if cli.output == Output::Json {
                println!("{}", json!({ "error": msg }));
            }
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Parses a literal argument, pointing at the offending byte on failure.
fn literal<T>(
    flag: &str,
    text: &str,
    f: impl FnOnce(&str) -> bicyclic::Result<T>,
) -> Result<T, Failure> {
    f(text).map_err(|e| match e {
        Error::Parse { offset, message } => Failure::Usage(format!(
            "{flag}: {message} at offset {offset}\n  {text}\n  {}^",
            " ".repeat(offset)
        )),
        other => Failure::from(other),
    })
}

fn pair_json(s: &Pair) -> Value {
    json!({ "left": s.left.to_string(), "right": s.right.to_string() })
}

fn solution_json(set: &SolutionSet<Element>) -> Value {
    match set {
        SolutionSet::NoSolution => json!({ "kind": "NoSolution" }),
        SolutionSet::Unique(w) => json!({ "kind": "Unique", "element": pair_json(w) }),
        SolutionSet::UpSet { base, ambient } => {
            json!({ "kind": "UpSet", "element": pair_json(base), "ambient": ambient.to_string() })
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let kind = cli.group;
    let group = AnyGroup::new(kind);
    let ambient = if cli.plus {
        Ambient::Positive
    } else {
        Ambient::Full
    };
    let b = Bicyclic::with_ambient(&group, ambient);
    let pair = |flag: &str, text: &str| literal(flag, text, |t| parse_pair(t, kind));
    let elem = |flag: &str, text: &str| literal(flag, text, |t| parse_element(t, kind));

    match &cli.cmd {
        Cmd::Mul { factors } => {
            let parsed = factors
                .iter()
                .enumerate()
                .map(|(i, f)| pair(&format!("factor {}", i + 1), f))
                .collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&Pair> = parsed.iter().collect();
            let p = b.product(&refs)?;
            Ok(Report::ok(
                json!({ "ambient": ambient.to_string(), "product": pair_json(&p) }),
                format!("{p}\n"),
            ))
        }
        Cmd::Inv { s } => {
            let s = pair("s", s)?;
            let i = b.inverse(&s)?;
            Ok(Report::ok(
                json!({ "inverse": pair_json(&i) }),
                format!("{i}\n"),
            ))
        }
        Cmd::Leq { s, t } => {
            let (s, t) = (pair("s", s)?, pair("t", t)?);
            let leq = b.nat_leq(&s, &t)?;
            Ok(Report::ok(
                json!({ "s": pair_json(&s), "t": pair_json(&t), "leq": leq }),
                format!("{s} {} {t}\n", if leq { "<=" } else { "is not <=" }),
            ))
        }
        Cmd::Solve {
            target,
            known,
            side,
            known_right,
        } => {
            let target = pair("--target", target)?;
            let known = pair("--known", known)?;
            let set = match side {
                SolveSide::Right => b.solve_right(&target, &known)?,
                SolveSide::Left => b.solve_left(&target, &known)?,
                SolveSide::Sandwich => {
                    let text = known_right.as_deref().unwrap_or_default();
                    let right = pair("--known-right", text)?;
                    b.solve_sandwich(&target, &known, &right)?
                }
            };
            Ok(Report::ok(solution_json(&set), format!("{set}\n")))
        }
        Cmd::Ideal { s, anchor, side } => {
            let s = pair("--s", s)?;
            let a = elem("--anchor", anchor)?;
            let side = Side::from(*side);
            let member = b.ideal_member(&s, &a, side)?;
            let ideal = match side {
                Side::Right => format!("({a},{a}){ambient}"),
                Side::Left => format!("{ambient}({a},{a})"),
            };
            Ok(Report::ok(
                json!({ "s": pair_json(&s), "anchor": a.to_string(), "side": side, "ambient": ambient.to_string(), "member": member }),
                format!(
                    "{s} {} {ideal}\n",
                    if member { "is in" } else { "is not in" }
                ),
            ))
        }
        Cmd::Upset { base } => {
            let base = pair("--base", base)?;
            let w = i64::from(cli.window);
            let members = b.up_set_window(&base, -w, w)?;
            let mut text = String::new();
            for m in &members {
                text.push_str(&format!("{m}\n"));
            }
            Ok(Report::ok(
                json!({
                    "base": pair_json(&base),
                    "ambient": ambient.to_string(),
                    "window": cli.window,
                    "elements": members.iter().map(pair_json).collect::<Vec<_>>(),
                }),
                text,
            ))
        }
        Cmd::Pmap { cmd } => match cmd {
            PmapCmd::Apply { g, h, x } => {
                let m = PartialShift::new(elem("--g", g)?, elem("--h", h)?);
                let x = elem("--x", x)?;
                let image = pmap::apply(&group, &m, &x)?;
                Ok(Report::ok(
                    json!({ "domain": m.domain.to_string(), "codomain": m.codomain.to_string(), "x": x.to_string(), "image": image.to_string() }),
                    format!("{image}\n"),
                ))
            }
            PmapCmd::CheckCompose => check(cli, vec![SuiteName::Pmaps], 200_000),
        },
        Cmd::Witness { seed, target } => {
            let seed = pair("--seed", seed)?;
            let target = pair("--target", target)?;
            let c = witness::build_witness_chain(&group, &seed, &target)?;
            Ok(Report::ok(
                json!({
                    "seed": pair_json(&c.seed),
                    "target": pair_json(&c.target),
                    "right_translator": pair_json(&c.right_translator),
                    "intermediate": pair_json(&c.intermediate),
                    "left_translator": pair_json(&c.left_translator),
                    "verified": true,
                }),
                format!(
                    "{} = {} * {}\n{} = {} * {}\n",
                    c.seed,
                    c.intermediate,
                    c.right_translator,
                    c.intermediate,
                    c.left_translator,
                    c.target
                ),
            ))
        }
        Cmd::Escape { a } => escape(cli, &group, a.as_deref()),
        Cmd::Check { suites, budget } => {
            let suites = parse_suite_list(suites).map_err(|e| match e {
                Error::Parse { offset, message } => Failure::Usage(format!(
                    "--suites: {message}\n  {suites}\n  {}^",
                    " ".repeat(offset)
                )),
                other => Failure::from(other),
            })?;
            check(cli, suites, *budget)
        }
    }
}

fn escape(cli: &Cli, group: &AnyGroup, anchor: Option<&str>) -> Result<Report, Failure> {
    let samples = group.sample_window(cli.window, cli.sample_seed);
    if !group.has_successor() {
        let verdict = witness::density_probe(group, &samples)?;
        let witnesses = match verdict {
            DensityVerdict::DenselyOrdered { witnesses } => witnesses,
            DensityVerdict::NotDenselyOrdered { .. } => Vec::new(),
        };
        let reason = format!("{} is densely ordered", group.name());
        let mut text = format!("not applicable: {reason}\n");
        for (g, h) in &witnesses {
            text.push_str(&format!("  {h} is positive and below {g}\n"));
        }
        return Ok(Report::ok(
            json!({
                "status": "not-applicable",
                "reason": reason,
                "density_witnesses": witnesses
                    .iter()
                    .map(|(g, h)| json!({ "positive": g.to_string(), "smaller": h.to_string() }))
                    .collect::<Vec<_>>(),
            }),
            text,
        ));
    }
    let a = match anchor {
        Some(t) => literal("--a", t, |t| parse_element(t, cli.group))?,
        None => group.identity(),
    };
    let idem = BElement::diagonal(a);
    let below: Vec<Element> = samples.into_iter().filter(|x| group.le(x, &a)).collect();
    let mut rows = Vec::new();
    let mut text = String::new();
    for x in &below {
        for y in &below {
            if x == y {
                continue;
            }
            let point = BElement::new(*x, *y);
            let c = witness::escape_certificate(group, &idem, &point)?;
            text.push_str(&format!(
                "{:<24} {:<5} {:<28} {}\n",
                c.point.to_string(),
                c.side.to_string(),
                c.product.to_string(),
                c.excluded_region
            ));
            rows.push(json!({
                "point": pair_json(&c.point),
                "side": c.side,
                "product": pair_json(&c.product),
                "excluded_region": c.excluded_region.to_string(),
            }));
        }
    }
    Ok(Report::ok(
        json!({ "idempotent": pair_json(&idem), "status": "pass", "certificates": rows }),
        text,
    ))
}

fn check(cli: &Cli, suites: Vec<SuiteName>, budget: usize) -> Result<Report, Failure> {
    let cfg = SuiteConfig {
        window: cli.window,
        sample_seed: cli.sample_seed,
        suites,
        budget,
    };
    let report = match cli.group {
        GroupKind::Z => run_suites(&Integers, &cfg),
        GroupKind::Q => run_suites(&Rationals, &cfg),
        GroupKind::ZxZ => run_suites(&LexPairs, &cfg),
        GroupKind::H3 => run_suites(&Heisenberg, &cfg),
    }?;
    Ok(Report {
        json: serde_json::to_value(&report).expect("report serializes"),
        text: render_report(&report),
        ok: report.passed(),
    })
}

fn render_report(r: &SuiteReport) -> String {
    let mut out = format!(
        "group {}  window {}  seed {}\n",
        r.group, r.window, r.sample_seed
    );
    for c in &r.checks {
        let tag = match c.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A ",
        };
        out.push_str(&format!(
            "{tag} {:<10} {:<40} {:>9} cases\n",
            c.suite.as_str(),
            c.name,
            c.cases
        ));
        if let Some(cx) = &c.counterexample {
            out.push_str(&format!("     counterexample: {cx}\n"));
        }
        if let Some(note) = &c.note {
            out.push_str(&format!("     {note}\n"));
        }
    }
    let t = &r.totals;
    out.push_str(&format!(
        "{} checks: {} passed, {} failed, {} not applicable; {} cases in {:.0} ms\n",
        t.checks, t.passed, t.failed, t.not_applicable, t.cases, r.wall_ms
    ));
    out
}
