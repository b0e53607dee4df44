//! Self-check for a built-in case: both pipelines, the descriptor lints and
//! the printed intermediate values, as an itemized pass/fail report.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::folding::{CurveClass, Marking};
use crate::localize::{GeometryDescriptor, Localizer};
use crate::rootsys::{node_label, DynkinDiagram};
use crate::symring::{rat, ratio, LaurentPoly, RatFn};

/// Built-in cases. Only the icosahedral one ships with a descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    E8A5,
}

impl FromStr for Case {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e8-a5" | "e8a5" | "a5" => Ok(Case::E8A5),
            _ => Err(Error::Parse(format!("unknown case `{s}` (available: e8-a5)"))),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::E8A5 => f.write_str("e8-a5"),
        }
    }
}

impl Case {
    pub fn marking(&self) -> Marking {
        match self {
            Case::E8A5 => Marking::e8_a5(),
        }
    }

    pub fn descriptor(&self) -> GeometryDescriptor {
        match self {
            Case::E8A5 => GeometryDescriptor::e8_a5(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub case: Case,
    pub quick: bool,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "{tag} {}", c.name)?;
            } else {
                writeln!(f, "{tag} {} ({})", c.name, c.detail)?;
            }
        }
        writeln!(
            f,
            "{}: {}/{} checks passed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len() - self.failures(),
            self.checks.len()
        )
    }
}

/// The four classes with printed totals and Euler classes:
/// `(class, χ, e(Ext²), e(Ext¹), n)`, Euler classes as `(scalar, degree)`.
pub type PrintedClass = ([i64; 4], &'static str, (i64, i64), (i64, i64), (i64, i64));

pub const PRINTED_CLASSES: [PrintedClass; 4] = [
    ([3, 5, 4, 3], "1 - mu^3", (1, 0), (1, 0), (1, 1)),
    ([2, 4, 4, 2], "1 + mu^1 - mu^2 - mu^3", (1, 1), (2, 1), (1, 2)),
    ([2, 4, 3, 2], "1 - mu^1 + mu^2 - mu^3", (2, 1), (1, 1), (2, 1)),
    ([1, 2, 2, 1], "1 - 2*mu^1 + 2*mu^2 - mu^3", (4, 2), (1, 2), (4, 1)),
];

/// Printed intermediates for the longest class, per `Y` point: `(name, ch, χ)`.
pub const LONGEST_INTERMEDIATES: [(&str, &str, &str); 5] = [
    (
        "P1",
        "mu^-11 - mu^-10 + mu^-7 - mu^-6 - mu^-2 + 1",
        "mu^-5 - mu^-3 + mu^-2 + mu^-1 - mu^1 + mu^2 - mu^4 - mu^5 + mu^6 - mu^8",
    ),
    (
        "P2",
        "mu^-8 - mu^-6 - mu^-2 + 1",
        "mu^-4 + 2*mu^-3 + mu^-2 + mu^-1 + 2 + mu^1 - mu^2 - 2*mu^3 - mu^4 - mu^5 - 2*mu^6 - mu^7",
    ),
    (
        "P3",
        "mu^-8 - mu^-6 - mu^-2 + 1",
        "mu^-4 + 2*mu^-3 + mu^-2 + mu^-1 + 2 + mu^1 - mu^2 - 2*mu^3 - mu^4 - mu^5 - 2*mu^6 - mu^7",
    ),
    (
        "P4",
        "mu^-8 - mu^-6 - mu^-2 + 1",
        "mu^-4 + mu^-3 + mu^-2 + mu^-1 + 1 + mu^1 - mu^2 - mu^3 - mu^4 - mu^5 - mu^6 - mu^7",
    ),
    (
        "P",
        "mu^-8 - mu^-6 - mu^-2 + 1",
        "-mu^-5 - 3*mu^-4 - 4*mu^-3 - 4*mu^-2 - 4*mu^-1 - 4 - 2*mu^1 + 2*mu^2 + 4*mu^3 + 4*mu^4 \
         + 4*mu^5 + 4*mu^6 + 3*mu^7 + mu^8",
    ),
];

/// `(fiber size, number of classes, number of roots, n)` for the E8 table.
pub const FIBER_ROWS: [(usize, usize, usize, (i64, i64)); 4] =
    [(2, 16, 32, (1, 1)), (1, 4, 4, (1, 2)), (4, 12, 48, (2, 1)), (8, 4, 32, (4, 1))];

/// Black sets of the given size that are independent, send the highest
/// root to `highest`, and drop exactly `dropped` roots.
pub fn admissible_black_sets(
    diagram: &DynkinDiagram,
    size: usize,
    highest: &CurveClass,
    dropped: usize,
) -> Vec<Vec<usize>> {
    let rank = diagram.rank();
    let top = diagram.highest_root();
    let roots = diagram.positive_roots();
    let mut out = Vec::new();
    for mask in 0u32..(1 << rank) {
        if mask.count_ones() as usize != size {
            continue;
        }
        let black: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) != 0).collect();
        let white: Vec<usize> = (0..rank).filter(|i| mask & (1 << i) == 0).collect();
        let Ok(m) = Marking::new(diagram.clone(), black.clone(), white) else { continue };
        if !m.black_is_independent() {
            continue;
        }
        if m.project(&top).ok().flatten().as_ref() != Some(highest) {
            continue;
        }
        let n_dropped = roots.iter().filter(|r| matches!(m.project(r), Ok(None))).count();
        if n_dropped == dropped {
            out.push(black);
        }
    }
    out
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check { name: name.into(), passed, detail: detail.into() }
}

fn outcome<T>(name: String, r: Result<T>, f: impl FnOnce(T) -> (bool, String)) -> Check {
    match r {
        Ok(v) => {
            let (ok, detail) = f(v);
            check(name, ok, detail)
        }
        Err(e) => check(name, false, e.to_string()),
    }
}

fn poly(s: &str) -> RatFn {
    RatFn::from(s.parse::<LaurentPoly>().expect("golden parses"))
}

pub fn run(case: Case, quick: bool) -> Report {
    let marking = case.marking();
    let descriptor = case.descriptor();
    let diagram = marking.diagram();
    let mut checks = Vec::new();

    let roots = diagram.positive_roots();
    checks.push(check(
        format!("{} has 120 positive roots", diagram.name()),
        roots.len() == 120,
        format!("found {}", roots.len()),
    ));
    if !quick {
        let brute = diagram.positive_roots_bounded(6);
        checks.push(check("root closure agrees with brute-force search", brute == roots, ""));
    }

    let table = marking.bps_table();
    checks.push(check(
        "table has 36 classes, 116 mapped roots, 4 dropped",
        table.records.len() == 36 && table.mapped_roots() == 116 && table.dropped.len() == 4,
        table.summary(),
    ));
    let rows_ok = FIBER_ROWS.iter().all(|&(fiber, classes, nroots, (p, q))| {
        let recs: Vec<_> = table.records.iter().filter(|r| r.fiber_count == fiber).collect();
        recs.len() == classes
            && recs.iter().map(|r| r.fiber_count).sum::<usize>() == nroots
            && recs.iter().all(|r| r.invariant == ratio(p, q))
    });
    checks.push(check("fiber distribution is 16x2, 4x1, 12x4, 4x8", rows_ok, ""));

    let mut lift_problems = Vec::new();
    for rec in &table.records {
        match marking.lift(&rec.class) {
            Ok(l) if l.self_intersection == -2 && l.delta.iter().all(|d| *d == 0 || *d == -1) => {}
            Ok(l) => lift_problems.push(format!("{}: Z^2 = {}, delta = {:?}", rec.class, l.self_intersection, l.delta)),
            Err(e) => lift_problems.push(format!("{}: {e}", rec.class)),
        }
    }
    checks.push(check(
        "every table class lifts to a (-2)-divisor with delta in {0,-1}",
        lift_problems.is_empty(),
        lift_problems.join("; "),
    ));
    checks.push(outcome("longest class lifts with black part (2,4,6,2)".into(), marking.lift(&CurveClass::new(vec![3, 5, 4, 3])), |l| {
        (l.n == [2, 4, 6, 2], format!("{:?}", l.n))
    }));

    let lints = descriptor.lint(diagram);
    for l in &lints.lints {
        checks.push(check(format!("descriptor lint: {}", l.name), l.passed(), l.problems.join("; ")));
    }

    let engine = match Localizer::new(&marking, &descriptor) {
        Ok(e) => e,
        Err(e) => {
            checks.push(check("descriptor matches marking", false, e.to_string()));
            return Report { case, quick, checks };
        }
    };

    let longest = CurveClass::new(vec![3, 5, 4, 3]);
    checks.push(outcome(
        "longest class: printed ch and chi at every fixed point".into(),
        marking.lift(&longest).and_then(|l| engine.point_terms(&l.divisor)),
        |terms| {
            let bad: Vec<String> = LONGEST_INTERMEDIATES
                .iter()
                .filter(|(name, ch, chi)| {
                    !terms.iter().any(|t| &t.name == name && t.ch == poly(ch) && t.chi == poly(chi))
                })
                .map(|(name, _, _)| name.to_string())
                .collect();
            (bad.is_empty(), if bad.is_empty() { String::new() } else { format!("mismatch at {}", bad.join(", ")) })
        },
    ));

    for (class, chi, e2, e1, (p, q)) in PRINTED_CLASSES {
        let class = CurveClass::new(class.to_vec());
        let loc = engine.localize(&class);
        checks.push(outcome(format!("{class}: chi = {chi}"), loc.clone(), |l| {
            (l.chi.to_string() == chi, l.chi.to_string())
        }));
        checks.push(outcome(format!("{class}: Euler classes and n = {}", ratio(p, q)), loc.clone(), |l| {
            let ok = (l.euler_ext2.scalar == rat(e2.0) && l.euler_ext2.degree == e2.1)
                && (l.euler_ext1.scalar == rat(e1.0) && l.euler_ext1.degree == e1.1)
                && l.invariant == ratio(p, q);
            (ok, format!("e(Ext2) = {}, e(Ext1) = {}, n = {}", l.euler_ext2, l.euler_ext1, l.invariant))
        }));
        checks.push(outcome(format!("{class}: chi vanishes at mu = 1 with Hom and Ext3 terms"), loc, |l| {
            let ok = l.chi.dim() == 0 && l.chi.coeff(0) == 1 && l.chi.coeff(-descriptor.canonical_weight) == -1;
            (ok, String::new())
        }));
    }

    let classes: Vec<CurveClass> = if quick {
        PRINTED_CLASSES.iter().map(|c| CurveClass::new(c.0.to_vec())).collect()
    } else {
        table.records.iter().map(|r| r.class.clone()).collect()
    };
    let mut disagree = Vec::new();
    for class in &classes {
        let folded = table.get(class).map(|r| r.invariant.clone());
        match engine.bps_invariant(class) {
            Ok(n) if Some(&n) == folded.as_ref() => {}
            Ok(n) => disagree.push(format!("{class}: {n} vs {folded:?}")),
            Err(e) => disagree.push(format!("{class}: {e}")),
        }
    }
    checks.push(check(
        format!("localization agrees with folding on {} classes", classes.len()),
        disagree.is_empty(),
        disagree.join("; "),
    ));

    if !quick {
        let sets = admissible_black_sets(diagram, 4, &longest, 4);
        let expected = marking.black().to_vec();
        let names: Vec<String> = sets
            .iter()
            .map(|s| s.iter().map(|&i| node_label(i)).collect::<Vec<_>>().join(","))
            .collect();
        checks.push(check(
            "marking is the unique admissible black 4-set",
            sets == [expected],
            format!("found {{{}}}", names.join("} {")),
        ));
    }

    Report { case, quick, checks }
}
