//! Fixed-locus data for the pair (surface resolution `S`, threefold `Y`).
//!
//! # File format
//!
//! Line based, `#` starts a comment line, blank lines are ignored.
//!
//! ```text
//! ade-bps-descriptor v1
//! CANONICAL-WEIGHT <int>
//! Y-POINTS
//! <name> <w1> <w2> <w3>
//! S-POINTS
//! <name> <w1> <w2> <image> <node>:<normal weight> ...
//! S-CURVES
//! <name> <node> <image> <normal weight> <self-intersection> <node>:<weight> ...
//! END
//! ```
//!
//! * A `Y-POINTS` row is an isolated fixed point of `Y` with its three
//!   tangent weights.
//! * An `S-POINTS` row is an isolated fixed point of `S`: two tangent
//!   weights, the `Y` point it maps to, and one `node:weight` entry per
//!   exceptional curve through the point, giving the weight of the normal
//!   direction to that curve. The normal weight must be one of the two
//!   tangent weights; the other one is the tangent weight along the curve.
//! * An `S-CURVES` row is a pointwise fixed rational curve (the diagram node
//!   it is), its image, the weight of its normal bundle, its
//!   self-intersection, and one `node:weight` entry per exceptional curve
//!   meeting it, giving the tangent weight along that curve at the meeting
//!   point.
//!
//! [`GeometryDescriptor`]'s `Display` writes exactly this format with single
//! spaces and no comments; parsing and re-printing a canonical file is the
//! identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rootsys::{node_label, parse_node_label, DynkinDiagram};

pub const HEADER: &str = "ade-bps-descriptor v1";

const BUILTIN_E8_A5: &str = include_str!("../../data/e8_a5.desc");

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    pub node: usize,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YPoint {
    pub name: String,
    pub weights: [i64; 3],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SPoint {
    pub name: String,
    pub weights: [i64; 2],
    pub image: String,
    /// Curves through the point, with their normal weights.
    pub incidences: Vec<Incidence>,
}

impl SPoint {
    /// Tangent weight along the curve `node` through this point.
    pub fn weight_along(&self, node: usize) -> Option<i64> {
        let inc = self.incidences.iter().find(|i| i.node == node)?;
        let [a, b] = self.weights;
        if inc.weight == a {
            Some(b)
        } else if inc.weight == b {
            Some(a)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCurve {
    pub name: String,
    pub node: usize,
    pub image: String,
    pub normal_weight: i64,
    pub self_intersection: i64,
    /// Curves meeting this one, with the tangent weight along them.
    pub incidences: Vec<Incidence>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometryDescriptor {
    pub canonical_weight: i64,
    pub y_points: Vec<YPoint>,
    pub s_points: Vec<SPoint>,
    pub s_curves: Vec<SCurve>,
}

/// Outcome of one descriptor lint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lint {
    pub name: &'static str,
    pub problems: Vec<String>,
}

impl Lint {
    pub fn passed(&self) -> bool {
        self.problems.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LintReport {
    pub lints: Vec<Lint>,
    /// Soft observations that never fail a check.
    pub warnings: Vec<String>,
}

impl LintReport {
    pub fn passed(&self) -> bool {
        self.lints.iter().all(Lint::passed)
    }
}

impl GeometryDescriptor {
    /// Fixed loci of `A5-Hilb(ℂ³)` and `Â5-Hilb(ℂ²)` for the `E8` marking
    /// `{n1, n3, n5, n7}` black.
    pub fn e8_a5() -> Self {
        BUILTIN_E8_A5.parse().expect("built-in descriptor parses")
    }

    pub fn builtin_e8_a5_text() -> &'static str {
        BUILTIN_E8_A5
    }

    pub fn y_point(&self, name: &str) -> Result<&YPoint> {
        self.y_points
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    pub fn s_point(&self, name: &str) -> Result<&SPoint> {
        self.s_points
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    pub fn s_curve(&self, name: &str) -> Result<&SCurve> {
        self.s_curves
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::UnknownComponent(name.to_string()))
    }

    fn validate(&self) -> Result<()> {
        let mut y_names = BTreeSet::new();
        for p in &self.y_points {
            if !y_names.insert(p.name.as_str()) {
                return Err(Error::Descriptor(format!("duplicate Y point `{}`", p.name)));
            }
            if p.weights.contains(&0) {
                return Err(Error::Descriptor(format!("Y point `{}` has a zero tangent weight", p.name)));
            }
        }
        let mut s_names = BTreeSet::new();
        for p in &self.s_points {
            if !s_names.insert(p.name.as_str()) {
                return Err(Error::Descriptor(format!("duplicate S component `{}`", p.name)));
            }
            if p.weights.contains(&0) {
                return Err(Error::Descriptor(format!("S point `{}` has a zero tangent weight", p.name)));
            }
            if !y_names.contains(p.image.as_str()) {
                return Err(Error::Descriptor(format!("S point `{}` maps to unknown `{}`", p.name, p.image)));
            }
            for inc in &p.incidences {
                if !p.weights.contains(&inc.weight) {
                    return Err(Error::Descriptor(format!(
                        "S point `{}`: normal weight {} of {} is not a tangent weight",
                        p.name,
                        inc.weight,
                        node_label(inc.node)
                    )));
                }
            }
        }
        for c in &self.s_curves {
            if !s_names.insert(c.name.as_str()) {
                return Err(Error::Descriptor(format!("duplicate S component `{}`", c.name)));
            }
            if c.normal_weight == 0 {
                return Err(Error::Descriptor(format!("S curve `{}` has normal weight 0", c.name)));
            }
            if !y_names.contains(c.image.as_str()) {
                return Err(Error::Descriptor(format!("S curve `{}` maps to unknown `{}`", c.name, c.image)));
            }
        }
        Ok(())
    }

    /// Every node mentioned anywhere in the descriptor.
    pub fn nodes(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for p in &self.s_points {
            out.extend(p.incidences.iter().map(|i| i.node));
        }
        for c in &self.s_curves {
            out.insert(c.node);
            out.extend(c.incidences.iter().map(|i| i.node));
        }
        out
    }

    /// Consistency checks against the diagram. Hard lints:
    ///
    /// * each `Y` tangent triple sums to `−canonical_weight`;
    /// * every exceptional curve that is not pointwise fixed has exactly two
    ///   fixed ends, with opposite tangent weights along it;
    /// * pairs of curves sharing a fixed point (or meeting a fixed curve) are
    ///   exactly the diagram edges, and every node occurs;
    /// * fixed curves are `(−2)`-curves and the weights recorded where other
    ///   curves meet them equal their normal weight.
    ///
    /// Soft: the two tangent weights of each isolated `S` point sum to 1.
    pub fn lint(&self, diagram: &DynkinDiagram) -> LintReport {
        let mut lints = Vec::new();

        let target = -self.canonical_weight;
        lints.push(Lint {
            name: "Y tangent weights sum to -canonical weight",
            problems: self
                .y_points
                .iter()
                .filter(|p| p.weights.iter().sum::<i64>() != target)
                .map(|p| format!("{} weights {:?} sum to {}", p.name, p.weights, p.weights.iter().sum::<i64>()))
                .collect(),
        });

        let fixed: BTreeSet<usize> = self.s_curves.iter().map(|c| c.node).collect();
        let mut ends: BTreeMap<usize, Vec<(String, Option<i64>)>> = BTreeMap::new();
        for p in &self.s_points {
            for inc in &p.incidences {
                ends.entry(inc.node).or_default().push((p.name.clone(), p.weight_along(inc.node)));
            }
        }
        for c in &self.s_curves {
            for inc in &c.incidences {
                ends.entry(inc.node).or_default().push((c.name.clone(), Some(inc.weight)));
            }
        }
        let mut end_problems = Vec::new();
        for node in 0..diagram.rank() {
            if fixed.contains(&node) {
                if ends.contains_key(&node) {
                    end_problems.push(format!("fixed curve {} also listed as an incidence", node_label(node)));
                }
                continue;
            }
            let e = ends.get(&node).map(Vec::as_slice).unwrap_or(&[]);
            match e {
                [(_, Some(a)), (_, Some(b))] if a + b == 0 => {}
                [(p, a), (q, b)] => end_problems.push(format!(
                    "{} ends at {p} ({a:?}) and {q} ({b:?}) do not negate",
                    node_label(node)
                )),
                _ => end_problems.push(format!("{} has {} fixed ends, expected 2", node_label(node), e.len())),
            }
        }
        lints.push(Lint { name: "invariant curve end weights negate", problems: end_problems });

        let mut meets: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut edge_problems = Vec::new();
        for p in &self.s_points {
            for (x, a) in p.incidences.iter().enumerate() {
                for b in &p.incidences[x + 1..] {
                    meets.insert((a.node.min(b.node), a.node.max(b.node)));
                }
            }
        }
        for c in &self.s_curves {
            for inc in &c.incidences {
                meets.insert((c.node.min(inc.node), c.node.max(inc.node)));
            }
        }
        let edges: BTreeSet<(usize, usize)> = diagram.edges().iter().copied().collect();
        for &(a, b) in meets.difference(&edges) {
            edge_problems.push(format!("{} and {} meet but are not adjacent", node_label(a), node_label(b)));
        }
        for &(a, b) in edges.difference(&meets) {
            edge_problems.push(format!("{} and {} are adjacent but never meet", node_label(a), node_label(b)));
        }
        let mentioned = self.nodes();
        for node in 0..diagram.rank() {
            if !mentioned.contains(&node) {
                edge_problems.push(format!("{} never occurs", node_label(node)));
            }
        }
        for &node in mentioned.iter().filter(|&&n| n >= diagram.rank()) {
            edge_problems.push(format!("{} is outside {}", node_label(node), diagram.name()));
        }
        lints.push(Lint { name: "incidences match diagram edges", problems: edge_problems });

        let mut curve_problems = Vec::new();
        for c in &self.s_curves {
            if c.self_intersection != -2 {
                curve_problems.push(format!("{} has self-intersection {}", c.name, c.self_intersection));
            }
            for inc in c.incidences.iter().filter(|i| i.weight != c.normal_weight) {
                curve_problems.push(format!(
                    "{} meets {} with weight {}, normal weight is {}",
                    c.name,
                    node_label(inc.node),
                    inc.weight,
                    c.normal_weight
                ));
            }
        }
        lints.push(Lint { name: "fixed curves are consistent (-2)-curves", problems: curve_problems });

        let warnings = self
            .s_points
            .iter()
            .filter(|p| p.weights[0] + p.weights[1] != 1)
            .map(|p| format!("S point {} tangent weights {:?} do not sum to 1", p.name, p.weights))
            .collect();

        LintReport { lints, warnings }
    }
}

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    tok.parse()
        .map_err(|_| Error::DescriptorSyntax { line, msg: format!("expected an integer, got `{tok}`") })
}

fn parse_incidence(tok: &str, line: usize) -> Result<Incidence> {
    let (node, w) = tok
        .split_once(':')
        .ok_or_else(|| Error::DescriptorSyntax { line, msg: format!("expected node:weight, got `{tok}`") })?;
    let node = parse_node_label(node).map_err(|e| Error::DescriptorSyntax { line, msg: e.to_string() })?;
    Ok(Incidence { node, weight: parse_int(w, line)? })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Start,
    Y,
    S,
    Curves,
    Done,
}

impl FromStr for GeometryDescriptor {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        match lines.next() {
            Some((_, HEADER)) => {}
            Some((line, other)) => {
                return Err(Error::DescriptorSyntax { line, msg: format!("expected `{HEADER}`, got `{other}`") })
            }
            None => return Err(Error::DescriptorSyntax { line: 0, msg: "empty descriptor".into() }),
        }

        let mut canonical_weight = None;
        let mut d = GeometryDescriptor { canonical_weight: 0, y_points: vec![], s_points: vec![], s_curves: vec![] };
        let mut section = Section::Start;
        for (line, l) in lines {
            let toks: Vec<&str> = l.split_whitespace().collect();
            let syntax = |msg: String| Error::DescriptorSyntax { line, msg };
            if section == Section::Done {
                return Err(syntax(format!("content after END: `{l}`")));
            }
            match toks[0] {
                "CANONICAL-WEIGHT" => {
                    if toks.len() != 2 {
                        return Err(syntax("CANONICAL-WEIGHT takes one integer".into()));
                    }
                    canonical_weight = Some(parse_int(toks[1], line)?);
                    continue;
                }
                "Y-POINTS" => {
                    section = Section::Y;
                    continue;
                }
                "S-POINTS" => {
                    section = Section::S;
                    continue;
                }
                "S-CURVES" => {
                    section = Section::Curves;
                    continue;
                }
                "END" => {
                    section = Section::Done;
                    continue;
                }
                _ => {}
            }
            match section {
                Section::Start | Section::Done => return Err(syntax(format!("row outside a section: `{l}`"))),
                Section::Y => {
                    if toks.len() != 4 {
                        return Err(syntax("Y point needs a name and 3 weights".into()));
                    }
                    d.y_points.push(YPoint {
                        name: toks[0].to_string(),
                        weights: [parse_int(toks[1], line)?, parse_int(toks[2], line)?, parse_int(toks[3], line)?],
                    });
                }
                Section::S => {
                    if toks.len() < 4 {
                        return Err(syntax("S point needs a name, 2 weights and an image".into()));
                    }
                    d.s_points.push(SPoint {
                        name: toks[0].to_string(),
                        weights: [parse_int(toks[1], line)?, parse_int(toks[2], line)?],
                        image: toks[3].to_string(),
                        incidences: toks[4..].iter().map(|t| parse_incidence(t, line)).collect::<Result<_>>()?,
                    });
                }
                Section::Curves => {
                    if toks.len() < 5 {
                        return Err(syntax(
                            "S curve needs a name, node, image, normal weight and self-intersection".into(),
                        ));
                    }
                    d.s_curves.push(SCurve {
                        name: toks[0].to_string(),
                        node: parse_node_label(toks[1]).map_err(|e| syntax(e.to_string()))?,
                        image: toks[2].to_string(),
                        normal_weight: parse_int(toks[3], line)?,
                        self_intersection: parse_int(toks[4], line)?,
                        incidences: toks[5..].iter().map(|t| parse_incidence(t, line)).collect::<Result<_>>()?,
                    });
                }
            }
        }
        if section != Section::Done {
            return Err(Error::DescriptorSyntax { line: text.lines().count(), msg: "missing END".into() });
        }
        d.canonical_weight = canonical_weight
            .ok_or_else(|| Error::DescriptorSyntax { line: 0, msg: "missing CANONICAL-WEIGHT".into() })?;
        d.validate()?;
        Ok(d)
    }
}

fn write_incidences(f: &mut fmt::Formatter<'_>, incs: &[Incidence]) -> fmt::Result {
    for i in incs {
        write!(f, " {}:{}", node_label(i.node), i.weight)?;
    }
    Ok(())
}

impl fmt::Display for GeometryDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER}")?;
        writeln!(f, "CANONICAL-WEIGHT {}", self.canonical_weight)?;
        writeln!(f, "Y-POINTS")?;
        for p in &self.y_points {
            writeln!(f, "{} {} {} {}", p.name, p.weights[0], p.weights[1], p.weights[2])?;
        }
        writeln!(f, "S-POINTS")?;
        for p in &self.s_points {
            write!(f, "{} {} {} {}", p.name, p.weights[0], p.weights[1], p.image)?;
            write_incidences(f, &p.incidences)?;
            writeln!(f)?;
        }
        writeln!(f, "S-CURVES")?;
        for c in &self.s_curves {
            write!(
                f,
                "{} {} {} {} {}",
                c.name,
                node_label(c.node),
                c.image,
                c.normal_weight,
                c.self_intersection
            )?;
            write_incidences(f, &c.incidences)?;
            writeln!(f)?;
        }
        writeln!(f, "END")
    }
}
