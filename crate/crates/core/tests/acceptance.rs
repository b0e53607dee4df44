//! Acceptance suite. Runs without the libtest harness so that every
//! criterion prints exactly one PASS/FAIL line; exits nonzero on failure.
//!
//! Each criterion recomputes what it can with a small oracle written here
//! (its own Cartan matrices, Weyl-orbit root enumeration, projection and
//! lift) and compares printed values literally.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};

use ade_bps::folding::{CurveClass, Marking};
use ade_bps::localize::{ext_decompose, GeometryDescriptor, Localizer};
use ade_bps::rootsys::{DiagramKind, DynkinDiagram};
use ade_bps::symring::{
    euler_class, expfactor, rat, ratio, LaurentPoly, RatFn, Rational, VirtualCharacter,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

fn edges_of(kind: char, rank: usize) -> Vec<(usize, usize)> {
    match kind {
        'A' => (0..rank - 1).map(|i| (i, i + 1)).collect(),
        'D' => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 3, rank - 1));
            e
        }
        'E' => {
            let mut e: Vec<_> = (0..rank - 2).map(|i| (i, i + 1)).collect();
            e.push((rank - 4, rank - 1));
            e
        }
        _ => unreachable!(),
    }
}

fn cartan(rank: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; rank]; rank];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for &(a, b) in edges {
        c[a][b] = -1;
        c[b][a] = -1;
    }
    c
}

fn form(c: &[Vec<i64>], u: &[i64], v: &[i64]) -> i64 {
    let n = c.len();
    (0..n).map(|i| (0..n).map(|j| u[i] * c[i][j] * v[j]).sum::<i64>()).sum()
}

/// Positive roots as the Weyl orbit of the simple roots.
fn weyl_positive_roots(c: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = c.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..n {
            let p: i64 = (0..n).map(|j| c[i][j] * v[j]).sum();
            let mut w = v.clone();
            w[i] -= p;
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().filter(|v| v.iter().all(|&x| x >= 0)).collect()
}

/// Every `v` with `0 ≤ v ≤ top` coordinatewise and `vᵀCv = 2`.
fn box_roots(c: &[Vec<i64>], top: &[i64]) -> BTreeSet<Vec<i64>> {
    let n = c.len();
    let mut out = BTreeSet::new();
    let mut v = vec![0i64; n];
    loop {
        if v.iter().any(|&x| x > 0) && form(c, &v, &v) == 2 {
            out.insert(v.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if v[i] < top[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

fn highest(roots: &BTreeSet<Vec<i64>>) -> Vec<i64> {
    roots.iter().max_by_key(|r| r.iter().sum::<i64>()).unwrap().clone()
}

const E8_WHITE: [usize; 4] = [1, 3, 5, 7];
const E8_BLACK: [usize; 4] = [0, 2, 4, 6];

fn e8() -> (Vec<(usize, usize)>, Vec<Vec<i64>>) {
    let e = edges_of('E', 8);
    let c = cartan(8, &e);
    (e, c)
}

fn oracle_fibers(roots: &BTreeSet<Vec<i64>>, white: &[usize]) -> (BTreeMap<Vec<i64>, usize>, usize) {
    let mut fibers = BTreeMap::new();
    let mut dropped = 0;
    for r in roots {
        let p: Vec<i64> = white.iter().map(|&i| r[i]).collect();
        if p.iter().all(|&x| x == 0) {
            dropped += 1;
        } else {
            *fibers.entry(p).or_insert(0) += 1;
        }
    }
    (fibers, dropped)
}

/// Completes white multiplicities by `⌈k/2⌉` on black nodes.
fn oracle_lift(edges: &[(usize, usize)], class: &[i64]) -> Vec<i64> {
    let mut v = vec![0i64; 8];
    for (&i, &m) in E8_WHITE.iter().zip(class) {
        v[i] = m;
    }
    for &b in &E8_BLACK {
        let k: i64 = edges
            .iter()
            .filter_map(|&(x, y)| if x == b { Some(v[y]) } else if y == b { Some(v[x]) } else { None })
            .sum();
        v[b] = (k + 1) / 2;
    }
    v
}

fn poly(s: &str) -> RatFn {
    RatFn::from(s.parse::<LaurentPoly>().unwrap())
}

/// `Π(1 − μ^a) / Π(1 − μ^b)`.
fn frac(num: &[i64], den: &[i64]) -> RatFn {
    RatFn::new(RatFn::product_of_expfactors(num), RatFn::product_of_expfactors(den)).unwrap()
}

fn character(s: &str) -> VirtualCharacter {
    let p: LaurentPoly = s.parse().unwrap();
    let terms: Vec<(i64, i64)> = p
        .terms()
        .map(|(w, c)| (w, c.to_integer().try_into().unwrap()))
        .collect();
    VirtualCharacter::from_terms(&terms)
}

// ---------------------------------------------------------------- criteria

fn c1_root_counts() -> Outcome {
    let mut cases: Vec<(char, usize, DiagramKind, usize)> = vec![
        ('E', 8, DiagramKind::E, 120),
        ('E', 7, DiagramKind::E, 63),
        ('E', 6, DiagramKind::E, 36),
        ('D', 4, DiagramKind::D, 12),
    ];
    for n in 1..=8 {
        cases.push(('A', n, DiagramKind::A, n * (n + 1) / 2));
    }
    for (k, rank, kind, expected) in cases {
        let c = cartan(rank, &edges_of(k, rank));
        let weyl = weyl_positive_roots(&c);
        let boxed = box_roots(&c, &highest(&weyl));
        ensure!(weyl == boxed, "{k}{rank}: Weyl orbit and box search disagree");
        let d = DynkinDiagram::build(kind, rank).map_err(|e| e.to_string())?;
        let lib: BTreeSet<Vec<i64>> = d.positive_roots().into_iter().map(|r| r.0).collect();
        ensure!(lib.len() == expected, "{k}{rank}: {} roots, expected {expected}", lib.len());
        ensure!(lib == weyl, "{k}{rank}: closure differs from the Weyl-orbit oracle");
        let brute: BTreeSet<Vec<i64>> = d.positive_roots_bounded(6).into_iter().map(|r| r.0).collect();
        ensure!(brute == weyl, "{k}{rank}: library brute-force search differs");
    }
    Ok(())
}

fn c2_bps_table() -> Outcome {
    let (_, c) = e8();
    let roots = weyl_positive_roots(&c);
    let (fibers, dropped) = oracle_fibers(&roots, &E8_WHITE);
    let table = Marking::e8_a5().bps_table();

    ensure!(table.records.len() == 36 && fibers.len() == 36, "{} classes", table.records.len());
    ensure!(table.dropped.len() == 4 && dropped == 4, "{} dropped", table.dropped.len());
    ensure!(table.mapped_roots() == 116, "{} mapped", table.mapped_roots());
    for r in &table.records {
        let f = fibers.get(&r.class.0).copied();
        ensure!(f == Some(r.fiber_count), "{}: fiber {} vs oracle {f:?}", r.class, r.fiber_count);
        ensure!(r.invariant == ratio(r.fiber_count as i64, 2), "{}: n = {}", r.class, r.invariant);
    }

    // (roots, classes, n) rows of the printed table
    let printed = [(32, 16, ratio(1, 1)), (4, 4, ratio(1, 2)), (48, 12, ratio(2, 1)), (32, 4, ratio(4, 1))];
    let mut rows: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in &table.records {
        let e = rows.entry(r.invariant.to_string()).or_default();
        e.0 += r.fiber_count;
        e.1 += 1;
    }
    ensure!(rows.len() == 4, "{} distinct invariants", rows.len());
    for (nroots, nclasses, n) in printed {
        ensure!(rows.get(&n.to_string()) == Some(&(nroots, nclasses)), "row n = {n}: {:?}", rows.get(&n.to_string()));
    }
    Ok(())
}

fn c3_lift() -> Outcome {
    let (edges, c) = e8();
    let marking = Marking::e8_a5();
    let roots = weyl_positive_roots(&c);
    let (fibers, _) = oracle_fibers(&roots, &E8_WHITE);

    for class in fibers.keys() {
        let l = marking.lift(&CurveClass::new(class.clone())).map_err(|e| e.to_string())?;
        let v = oracle_lift(&edges, class);
        ensure!(l.divisor.0 == v, "{class:?}: lift {} vs oracle {v:?}", l.divisor);
        ensure!(form(&c, &v, &v) == 2 && l.self_intersection == -2, "{class:?}: Z^2 = {}", l.self_intersection);
        for (j, &b) in E8_BLACK.iter().enumerate() {
            let delta = -(0..8).map(|i| c[b][i] * v[i]).sum::<i64>();
            ensure!(delta == 0 || delta == -1, "{class:?}: delta {delta} at E{}", j + 1);
            ensure!(l.delta[j] == delta, "{class:?}: library delta {:?}", l.delta);
        }
    }

    let longest = marking.lift(&CurveClass::new(vec![3, 5, 4, 3])).map_err(|e| e.to_string())?;
    ensure!(longest.n == [2, 4, 6, 2], "longest black part {:?}", longest.n);

    let mut checked = 0;
    for m in 0..7i64.pow(4) {
        let class: Vec<i64> = (0..4).map(|i| (m / 7i64.pow(i)) % 7).collect();
        if class.iter().all(|&x| x == 0) || fibers.contains_key(&class) {
            continue;
        }
        let l = marking.lift(&CurveClass::new(class.clone())).map_err(|e| e.to_string())?;
        let v = oracle_lift(&edges, &class);
        ensure!(-form(&c, &v, &v) == l.self_intersection, "{class:?}: Z^2 mismatch");
        ensure!(l.self_intersection <= -4, "{class:?}: Z^2 = {}", l.self_intersection);
        checked += 1;
    }
    ensure!(checked == 2400 - 36, "checked {checked} non-image classes");
    Ok(())
}

fn c4_localization_goldens() -> Outcome {
    let marking = Marking::e8_a5();
    let d = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &d).map_err(|e| e.to_string())?;
    let lift = marking.lift(&CurveClass::new(vec![3, 5, 4, 3])).map_err(|e| e.to_string())?;
    let v = &lift.divisor;
    let e = |r: ade_bps::Result<RatFn>| r.map_err(|e| e.to_string());
    let pt = |name: &str| d.s_point(name).unwrap();

    // restriction characters
    ensure!(engine.weight_at_point(v, pt("Q1")) == Ok(-10), "ch(Q1)");
    ensure!(engine.weight_at_point(v, pt("Q1'")) == Ok(-6), "ch(Q1')");
    ensure!(engine.line_bundle_on_curve(v, d.s_curve("E3").unwrap()) == Ok((-6, 0)), "ch(E3)");

    let ch_q1 = e(engine.point_contribution(v, pt("Q1")))?;
    ensure!(ch_q1 == frac(&[-10, 3, -1], &[4]), "ch(Q1->P1) = {ch_q1}");
    let ch_q1p = e(engine.point_contribution(v, pt("Q1'")))?;
    ensure!(ch_q1p == frac(&[-6, -5, -1], &[-4]), "ch(Q1'->P1) = {ch_q1p}");

    let ch_p1 = e(engine.chern_character_at(v, "P1"))?;
    ensure!(ch_p1 == poly("mu^-11 - mu^-10 + mu^-7 - mu^-6 - mu^-2 + 1"), "ch(P1) = {ch_p1}");
    ensure!(ch_p1.dualize() == poly("1 - mu^2 - mu^6 + mu^7 - mu^10 + mu^11"), "ch^(P1)");
    ensure!(
        e(engine.chi_at(v, "P1"))? == poly("mu^-5 - mu^-3 + mu^-2 + mu^-1 - mu^1 + mu^2 - mu^4 - mu^5 + mu^6 - mu^8"),
        "chi_1"
    );

    let q_num = [-6, -1, 1, -3];
    let printed_q = [
        ("Q2", frac(&q_num, &[2, -3])),
        ("Q2'", frac(&q_num, &[-2, 1])),
        ("Q3", frac(&q_num, &[-2, 1])),
        ("Q3'", frac(&q_num, &[2, -3])),
        ("Q4", frac(&[-6, -2], &[])),
    ];
    for (name, expect) in printed_q {
        let got = e(engine.point_contribution(v, pt(name)))?;
        ensure!(got == expect, "ch({name}) = {got}");
    }
    for p in ["P2", "P3", "P4", "P"] {
        let got = e(engine.chern_character_at(v, p))?;
        ensure!(got == poly("mu^-8 - mu^-6 - mu^-2 + 1"), "ch({p}) = {got}");
    }
    let chi23 = poly("mu^-4 + 2*mu^-3 + mu^-2 + mu^-1 + 2 + mu^1 - mu^2 - 2*mu^3 - mu^4 - mu^5 - 2*mu^6 - mu^7");
    ensure!(e(engine.chi_at(v, "P2"))? == chi23, "chi_2");
    ensure!(e(engine.chi_at(v, "P3"))? == chi23, "chi_3");
    ensure!(
        e(engine.chi_at(v, "P4"))? == poly("mu^-4 + mu^-3 + mu^-2 + mu^-1 + 1 + mu^1 - mu^2 - mu^3 - mu^4 - mu^5 - mu^6 - mu^7"),
        "chi_4"
    );

    ensure!(engine.prefactor(d.y_point("P").unwrap()) == expfactor(-1).pow(3), "td/e at P");
    let chi_p = e(engine.chi_at(v, "P"))?;
    let printed_fraction = (&poly("1 - mu^2 - mu^6 + mu^8") * &poly("mu^-8 - mu^-6 - mu^-2 + 1"))
        .try_div(&RatFn::from(expfactor(-1).pow(3)))
        .unwrap();
    ensure!(chi_p == printed_fraction, "chi(P) fraction");
    ensure!(
        chi_p
            == poly(
                "-mu^-5 - 3*mu^-4 - 4*mu^-3 - 4*mu^-2 - 4*mu^-1 - 4 - 2*mu^1 + 2*mu^2 + 4*mu^3 + 4*mu^4 + 4*mu^5 + 4*mu^6 + 3*mu^7 + mu^8"
            ),
        "chi(P) = {chi_p}"
    );

    let total = engine.total_chi(v).map_err(|e| e.to_string())?;
    ensure!(total == character("1 - mu^3"), "total {total}");
    Ok(())
}

const PROPOSITION: [([i64; 4], &str); 4] = [
    ([3, 5, 4, 3], "1 - mu^3"),
    ([2, 4, 4, 2], "1 - mu^2 + mu^1 - mu^3"),
    ([2, 4, 3, 2], "1 - mu^1 + mu^2 - mu^3"),
    ([1, 2, 2, 1], "1 - 2*mu^1 + 2*mu^2 - mu^3"),
];

fn c5_totals() -> Outcome {
    let marking = Marking::e8_a5();
    let d = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &d).map_err(|e| e.to_string())?;
    for (class, printed) in PROPOSITION {
        let lift = marking.lift(&CurveClass::new(class.to_vec())).map_err(|e| e.to_string())?;
        let total = engine.total_chi(&lift.divisor).map_err(|e| e.to_string())?;
        ensure!(total == character(printed), "{class:?}: {total} vs {printed}");
    }
    Ok(())
}

fn c6_corollary() -> Outcome {
    // (e(Ext2), e(Ext1), n) as ((scalar, degree), (scalar, degree), n)
    let rows = [
        ((1, 0), (1, 0), ratio(1, 1)),
        ((1, 1), (2, 1), ratio(1, 2)),
        ((2, 1), (1, 1), ratio(2, 1)),
        ((4, 2), (1, 2), ratio(4, 1)),
    ];
    let marking = Marking::e8_a5();
    let d = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &d).map_err(|e| e.to_string())?;
    for ((class, printed), (e2, e1, n)) in PROPOSITION.iter().zip(rows) {
        let ext = ext_decompose(&character(printed), -3).map_err(|e| e.to_string())?;
        let got2 = euler_class(&ext.ext2).map_err(|e| e.to_string())?;
        let got1 = euler_class(&ext.ext1).map_err(|e| e.to_string())?;
        ensure!((got2.scalar.clone(), got2.degree) == (rat(e2.0), e2.1), "{class:?}: e(Ext2) = {got2}");
        ensure!((got1.scalar.clone(), got1.degree) == (rat(e1.0), e1.1), "{class:?}: e(Ext1) = {got1}");
        let ratio_: Rational = &got2.scalar / &got1.scalar;
        ensure!(ratio_ == n, "{class:?}: ratio {ratio_}");
        let via_engine = engine.bps_invariant(&CurveClass::new(class.to_vec())).map_err(|e| e.to_string())?;
        ensure!(via_engine == n, "{class:?}: engine n = {via_engine}");
    }
    Ok(())
}

fn c7_cross_pipeline() -> Outcome {
    let (_, c) = e8();
    let (fibers, _) = oracle_fibers(&weyl_positive_roots(&c), &E8_WHITE);
    let marking = Marking::e8_a5();
    let table = marking.bps_table();
    let d = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &d).map_err(|e| e.to_string())?;
    for (class, _) in PROPOSITION {
        let class = CurveClass::new(class.to_vec());
        let loc = engine.bps_invariant(&class).map_err(|e| e.to_string())?;
        let fold = table.get(&class).map(|r| r.invariant.clone());
        let oracle = ratio(fibers[&class.0] as i64, 2);
        ensure!(Some(&loc) == fold.as_ref() && loc == oracle, "{class}: {loc} vs {fold:?} vs {oracle}");
    }
    Ok(())
}

fn laurent_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -4i64..=4), 0..5).prop_map(|t| LaurentPoly::from_terms(&t))
}

fn ratfn_strategy() -> impl Strategy<Value = RatFn> {
    (laurent_strategy(), prop::collection::vec((-4i64..=4).prop_filter("nonzero", |w| *w != 0), 0..3))
        .prop_map(|(n, den)| RatFn::new(n, RatFn::product_of_expfactors(&den)).unwrap())
}

fn config() -> Config {
    Config { cases: 1000, failure_persistence: None, ..Config::default() }
}

fn c8_properties() -> Outcome {
    let mut runner = TestRunner::new(config());
    let triple = (ratfn_strategy(), ratfn_strategy(), ratfn_strategy());
    runner
        .run(&triple, |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &RatFn::zero(), a.clone());
            prop_assert_eq!(&a * &RatFn::one(), a.clone());
            prop_assert!((&a + &(-&a)).is_zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), RatFn::one());
            }
            prop_assert_eq!(a.dualize().dualize(), a.clone());
            prop_assert_eq!((&a * &b).dualize(), &a.dualize() * &b.dualize());
            prop_assert_eq!((&a + &b).dualize(), &a.dualize() + &b.dualize());
            Ok(())
        })
        .map_err(|e| format!("field axioms: {e}"))?;

    let mut runner = TestRunner::new(config());
    runner
        .run(&(laurent_strategy(), laurent_strategy(), laurent_strategy()), |(a, b, c)| {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(a.dualize().dualize(), a.clone());
            prop_assert_eq!((&a * &b).dualize(), &a.dualize() * &b.dualize());
            let embedded = RatFn::from(a.clone());
            prop_assert_eq!(embedded.as_polynomial(), Some(&a));
            Ok(())
        })
        .map_err(|e| format!("ring axioms: {e}"))?;

    let marking = Marking::e8_a5();
    let d = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &d).map_err(|e| e.to_string())?;
    for (class, _) in PROPOSITION {
        let lift = marking.lift(&CurveClass::new(class.to_vec())).map_err(|e| e.to_string())?;
        let chi = engine.total_chi(&lift.divisor).map_err(|e| e.to_string())?;
        ensure!(chi.to_laurent().at_one() == rat(0), "{class:?}: chi(1) != 0");
        ensure!(chi.coeff(0) == 1 && chi.coeff(3) == -1, "{class:?}: Hom/Ext3 coefficients in {chi}");
    }

    let lints = d.lint(marking.diagram());
    for name in ["Y tangent weights sum to -canonical weight", "invariant curve end weights negate"] {
        let l = lints.lints.iter().find(|l| l.name == name).ok_or(format!("missing lint {name}"))?;
        ensure!(l.passed(), "{name}: {:?}", l.problems);
    }
    // the same two facts, checked straight from the data
    ensure!(d.y_points.iter().all(|p| p.weights.iter().sum::<i64>() == 3), "Y sums");
    Ok(())
}

fn c9_marking_uniqueness() -> Outcome {
    let (edges, c) = e8();
    let roots = weyl_positive_roots(&c);
    let top = highest(&roots);
    let mut oracle = Vec::new();
    let mut subsets = 0;
    for mask in 0u32..256 {
        if mask.count_ones() != 4 {
            continue;
        }
        subsets += 1;
        let black: Vec<usize> = (0..8).filter(|i| mask & (1 << i) != 0).collect();
        let white: Vec<usize> = (0..8).filter(|i| mask & (1 << i) == 0).collect();
        if edges.iter().any(|(a, b)| black.contains(a) && black.contains(b)) {
            continue;
        }
        let proj: Vec<i64> = white.iter().map(|&i| top[i]).collect();
        if proj != [3, 5, 4, 3] {
            continue;
        }
        let (_, dropped) = oracle_fibers(&roots, &white);
        if dropped == 4 {
            oracle.push(black);
        }
    }
    ensure!(subsets == 70, "{subsets} subsets");
    ensure!(oracle == [E8_BLACK.to_vec()], "oracle found {oracle:?}");

    let d = DynkinDiagram::build(DiagramKind::E, 8).map_err(|e| e.to_string())?;
    let lib = ade_bps::verify::admissible_black_sets(&d, 4, &CurveClass::new(vec![3, 5, 4, 3]), 4);
    ensure!(lib == oracle, "library found {lib:?}");
    ensure!(Marking::e8_a5().black() == E8_BLACK, "built-in marking {:?}", Marking::e8_a5().black());
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("root counts and closure vs brute force", c1_root_counts),
        ("E8/A5 BPS table", c2_bps_table),
        ("lift correctness", c3_lift),
        ("localization goldens for the longest root", c4_localization_goldens),
        ("four printed totals", c5_totals),
        ("Euler classes and invariants of the four classes", c6_corollary),
        ("localization equals folding on the four classes", c7_cross_pipeline),
        ("property suites", c8_properties),
        ("marking uniqueness over 70 subsets", c9_marking_uniqueness),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({:.2?})", i + 1, t0.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
