//! Black/white markings of a Dynkin diagram, the projection from positive
//! roots to curve classes, fiber counts, and the lift of a curve class back
//! to a divisor on the surface.
//!
//! White nodes are the curves `F_1 … F_r` that survive in the threefold
//! (labelled in `white` order); black nodes are the contracted curves
//! `E_1 … E_s` (labelled in ascending node order). A curve class is the
//! vector of white multiplicities, and the projection of a root simply
//! forgets its black coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{node_label, parse_node_label, DiagramKind, DynkinDiagram, RootVector};
use crate::symring::{ratio, Rational};

/// White multiplicities `(m_1, …, m_r)` of a class `Σ m_i [F_i]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CurveClass(pub Vec<i64>);

impl CurveClass {
    pub fn new(m: Vec<i64>) -> Self {
        CurveClass(m)
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::rootsys::write_tuple(f, &self.0)
    }
}

/// Accepts `3,5,4,3` or `(3,5,4,3)`.
impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad class `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(CurveClass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Marking {
    diagram: DynkinDiagram,
    /// Ascending.
    black: Vec<usize>,
    white: Vec<usize>,
}

/// On-disk form of a marking (TOML).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarkingFile {
    pub kind: String,
    pub rank: usize,
    #[serde(default)]
    pub black: Vec<String>,
    pub white: Vec<String>,
}

impl Marking {
    pub fn new(diagram: DynkinDiagram, mut black: Vec<usize>, white: Vec<usize>) -> Result<Self> {
        let rank = diagram.rank();
        black.sort_unstable();
        let mut seen = vec![false; rank];
        for &i in black.iter().chain(&white) {
            if i >= rank {
                return Err(Error::InvalidMarking(format!("node {} outside {}", node_label(i), diagram.name())));
            }
            if seen[i] {
                return Err(Error::InvalidMarking(format!("node {} listed twice", node_label(i))));
            }
            seen[i] = true;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidMarking(format!("node {} is neither black nor white", node_label(i))));
        }
        if white.is_empty() {
            return Err(Error::InvalidMarking("no white nodes".into()));
        }
        Ok(Marking { diagram, black, white })
    }

    /// `E8` with black nodes `{n1, n3, n5, n7}` and `(n2, n4, n6, n8)` ↦
    /// `(F1, F2, F3, F4)`: the marking for the icosahedral group `A5`.
    pub fn e8_a5() -> Self {
        let d = DynkinDiagram::build(DiagramKind::E, 8).expect("E8 is legal");
        Marking::new(d, vec![0, 2, 4, 6], vec![1, 3, 5, 7]).expect("valid marking")
    }

    pub fn from_file(file: &MarkingFile) -> Result<Self> {
        let kind: DiagramKind = file.kind.parse()?;
        let diagram = DynkinDiagram::build(kind, file.rank)?;
        let nodes = |xs: &[String]| xs.iter().map(|s| parse_node_label(s)).collect::<Result<Vec<_>>>();
        Marking::new(diagram, nodes(&file.black)?, nodes(&file.white)?)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let file: MarkingFile =
            toml::from_str(text).map_err(|e| Error::InvalidMarking(e.message().to_string()))?;
        Self::from_file(&file)
    }

    pub fn to_file(&self) -> MarkingFile {
        MarkingFile {
            kind: self.diagram.kind().to_string(),
            rank: self.diagram.rank(),
            black: self.black.iter().map(|&i| node_label(i)).collect(),
            white: self.white.iter().map(|&i| node_label(i)).collect(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&self.to_file()).expect("marking serializes")
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn black(&self) -> &[usize] {
        &self.black
    }

    pub fn white(&self) -> &[usize] {
        &self.white
    }

    /// Position of `node` in the black list (the `j` of `E_j`, 0-based).
    pub fn black_index(&self, node: usize) -> Option<usize> {
        self.black.binary_search(&node).ok()
    }

    /// Position of `node` in the white order (the `i` of `F_i`, 0-based).
    pub fn white_index(&self, node: usize) -> Option<usize> {
        self.white.iter().position(|&w| w == node)
    }

    /// Curve name of a node: `F{i}` for white, `E{j}` for black.
    pub fn curve_name(&self, node: usize) -> String {
        match (self.white_index(node), self.black_index(node)) {
            (Some(i), _) => format!("F{}", i + 1),
            (_, Some(j)) => format!("E{}", j + 1),
            _ => node_label(node),
        }
    }

    pub fn first_adjacent_black_pair(&self) -> Option<(usize, usize)> {
        for (x, &a) in self.black.iter().enumerate() {
            for &b in &self.black[x + 1..] {
                if self.diagram.adjacent(a, b) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn black_is_independent(&self) -> bool {
        self.first_adjacent_black_pair().is_none()
    }

    fn check_class(&self, class: &CurveClass) -> Result<()> {
        if class.len() != self.white.len() {
            return Err(Error::DimensionMismatch { expected: self.white.len(), found: class.len() });
        }
        if class.0.iter().any(|&m| m < 0) {
            return Err(Error::NotEffective(class.to_string()));
        }
        if class.is_zero() {
            return Err(Error::ZeroClass);
        }
        Ok(())
    }

    /// The map `c`: restriction of a positive root to the white nodes, or
    /// `None` when the root lives entirely on black nodes.
    pub fn project(&self, root: &RootVector) -> Result<Option<CurveClass>> {
        self.diagram.check_len(root)?;
        if !self.diagram.is_positive_root(root) {
            return Err(Error::NotPositiveRoot(root.to_string()));
        }
        Ok(self.restrict(root))
    }

    fn restrict(&self, v: &RootVector) -> Option<CurveClass> {
        let m: Vec<i64> = self.white.iter().map(|&i| v.coeffs()[i]).collect();
        let class = CurveClass(m);
        (!class.is_zero()).then_some(class)
    }

    /// Groups the positive roots by projected class. Records are sorted
    /// lexicographically by class; roots with no class are listed in
    /// `dropped`.
    pub fn bps_table(&self) -> BpsTable {
        let roots = self.diagram.positive_roots();
        let total_roots = roots.len();
        let mut fibers: BTreeMap<CurveClass, Vec<RootVector>> = BTreeMap::new();
        let mut dropped = Vec::new();
        for r in roots {
            match self.restrict(&r) {
                Some(c) => fibers.entry(c).or_default().push(r),
                None => dropped.push(r),
            }
        }
        let records = fibers
            .into_iter()
            .map(|(class, fiber)| BpsRecord {
                invariant: ratio(fiber.len() as i64, 2),
                fiber_count: fiber.len(),
                class,
                fiber,
            })
            .collect();
        BpsTable { records, dropped, total_roots }
    }

    /// The completion `Ẑ = Σ m_i F̂_i + Σ n_j E_j` with `n_j = ⌈k_j/2⌉`, where
    /// `k_j` sums the white multiplicities adjacent to `E_j`.
    pub fn lift(&self, class: &CurveClass) -> Result<LiftedDivisor> {
        self.check_class(class)?;
        if let Some((a, b)) = self.first_adjacent_black_pair() {
            return Err(Error::AdjacentBlackNodes(node_label(a), node_label(b)));
        }
        let rank = self.diagram.rank();
        let mut coeffs = vec![0i64; rank];
        for (&node, &m) in self.white.iter().zip(&class.0) {
            coeffs[node] = m;
        }
        let k: Vec<i64> = self
            .black
            .iter()
            .map(|&j| self.diagram.neighbors(j).map(|i| coeffs[i]).sum())
            .collect();
        let n: Vec<i64> = k.iter().map(|&kj: &i64| (kj + 1).div_euclid(2)).collect();
        for (&j, &nj) in self.black.iter().zip(&n) {
            coeffs[j] = nj;
        }
        let divisor = RootVector::new(coeffs);
        // Ẑ·E_j = −(C Ẑ)_j = −2n_j + k_j
        let delta: Vec<i64> = self
            .black
            .iter()
            .map(|&j| -self.diagram.pairing_with_simple(&divisor, j).expect("rank matches"))
            .collect();
        let self_intersection = -self.diagram.norm(&divisor).expect("rank matches");
        Ok(LiftedDivisor { class: class.clone(), divisor, k, n, delta, self_intersection })
    }

    /// Whether `Ẑ² = −2`, i.e. the lift is itself a positive root.
    pub fn corresponds_to_root(&self, class: &CurveClass) -> Result<bool> {
        Ok(self.lift(class)?.self_intersection == -2)
    }

    /// `χ(O_Z) = −Z²/2 = vᵀCv/2` for an effective nonzero divisor on the
    /// surface, given by its coefficients on all nodes.
    pub fn euler_characteristic(&self, divisor: &RootVector) -> Result<i64> {
        self.diagram.check_len(divisor)?;
        if !divisor.is_nonnegative() {
            return Err(Error::NotEffective(divisor.to_string()));
        }
        if divisor.is_zero() {
            return Err(Error::ZeroClass);
        }
        let q = self.diagram.norm(divisor)?;
        debug_assert!(q >= 2 && q % 2 == 0);
        Ok(q / 2)
    }

    /// Places class multiplicities on the white nodes, zeros elsewhere.
    pub fn embed(&self, class: &CurveClass) -> RootVector {
        let mut v = vec![0; self.diagram.rank()];
        for (&node, &m) in self.white.iter().zip(&class.0) {
            v[node] = m;
        }
        RootVector::new(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedDivisor {
    pub class: CurveClass,
    /// Coefficients of `Ẑ` on every node.
    pub divisor: RootVector,
    /// Per black node, ascending: adjacent white multiplicity sum.
    pub k: Vec<i64>,
    /// Per black node: `⌈k_j/2⌉`.
    pub n: Vec<i64>,
    /// Per black node: `Ẑ·E_j = k_j − 2n_j ∈ {0, −1}`.
    pub delta: Vec<i64>,
    /// `Ẑ²` under the curve pairing `−C`.
    pub self_intersection: i64,
}

impl LiftedDivisor {
    /// `χ(O_Ẑ) = −Ẑ²/2`.
    pub fn euler_characteristic(&self) -> i64 {
        -self.self_intersection / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpsRecord {
    pub class: CurveClass,
    pub fiber_count: usize,
    /// `fiber_count / 2`.
    pub invariant: Rational,
    pub fiber: Vec<RootVector>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpsTable {
    pub records: Vec<BpsRecord>,
    pub dropped: Vec<RootVector>,
    pub total_roots: usize,
}

impl BpsTable {
    pub fn mapped_roots(&self) -> usize {
        self.records.iter().map(|r| r.fiber_count).sum()
    }

    pub fn get(&self, class: &CurveClass) -> Option<&BpsRecord> {
        self.records
            .binary_search_by(|r| r.class.cmp(class))
            .ok()
            .map(|i| &self.records[i])
    }

    /// `"116 roots over 36 classes, 4 dropped"`.
    pub fn summary(&self) -> String {
        format!(
            "{} roots over {} classes, {} dropped",
            self.mapped_roots(),
            self.records.len(),
            self.dropped.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symring::rat;

    fn class(m: &[i64]) -> CurveClass {
        CurveClass(m.to_vec())
    }

    #[test]
    fn projection_examples() {
        let m = Marking::e8_a5();
        let d = m.diagram();
        let h = d.highest_root();
        assert_eq!(m.project(&h).unwrap(), Some(class(&[3, 5, 4, 3])));
        assert_eq!(m.project(&d.simple_root(0)).unwrap(), None);
        assert_eq!(m.project(&d.simple_root(1)).unwrap(), Some(class(&[1, 0, 0, 0])));
        assert!(matches!(m.project(&RootVector::new(vec![1, 1, 1, 0, 0, 0, 0, 1])), Err(Error::NotPositiveRoot(_))));
    }

    #[test]
    fn a1_table() {
        let d = DynkinDiagram::build(DiagramKind::A, 1).unwrap();
        let m = Marking::new(d, vec![], vec![0]).unwrap();
        let t = m.bps_table();
        assert_eq!(t.records.len(), 1);
        assert_eq!(t.records[0].class, class(&[1]));
        assert_eq!(t.records[0].fiber_count, 1);
        assert_eq!(t.records[0].invariant, ratio(1, 2));
    }

    #[test]
    fn named_fibers() {
        let t = Marking::e8_a5().bps_table();
        for (c, f, n) in [
            ([3, 5, 4, 3], 2, rat(1)),
            ([2, 4, 4, 2], 1, ratio(1, 2)),
            ([2, 4, 3, 2], 4, rat(2)),
            ([1, 2, 2, 1], 8, rat(4)),
        ] {
            let r = t.get(&class(&c)).unwrap();
            assert_eq!(r.fiber_count, f);
            assert_eq!(r.invariant, n);
        }
        assert_eq!(t.summary(), "116 roots over 36 classes, 4 dropped");
    }

    #[test]
    fn lift_of_longest_root_class() {
        let m = Marking::e8_a5();
        let l = m.lift(&class(&[3, 5, 4, 3])).unwrap();
        assert_eq!(l.n, vec![2, 4, 6, 2]);
        assert_eq!(l.k, vec![3, 8, 12, 4]);
        assert_eq!(l.delta, vec![-1, 0, 0, 0]);
        assert_eq!(l.self_intersection, -2);
        assert_eq!(l.divisor, m.diagram().highest_root());
        assert_eq!(l.euler_characteristic(), 1);
    }

    #[test]
    fn lift_examples_are_roots() {
        let m = Marking::e8_a5();
        let roots = m.diagram().positive_roots();
        let l = m.lift(&class(&[1, 2, 2, 1])).unwrap();
        assert_eq!(l.n, vec![1, 2, 3, 1]);
        assert_eq!(l.self_intersection, -2);
        assert!(l.delta.iter().all(|d| [0, -1].contains(d)));
        assert!(roots.contains(&l.divisor));

        let l = m.lift(&class(&[1, 0, 0, 0])).unwrap();
        assert_eq!(l.k, vec![1, 1, 0, 0]);
        assert_eq!(l.n, vec![1, 1, 0, 0]);
        assert_eq!(l.self_intersection, -2);
        assert!(roots.contains(&l.divisor));
    }

    #[test]
    fn lift_errors() {
        let m = Marking::e8_a5();
        assert_eq!(m.lift(&class(&[0, 0, 0, 0])), Err(Error::ZeroClass));
        assert_eq!(m.corresponds_to_root(&class(&[0, 0, 0, 0])), Err(Error::ZeroClass));
        assert!(matches!(m.lift(&class(&[1, 0, 0])), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(m.lift(&class(&[1, -1, 0, 0])), Err(Error::NotEffective(_))));

        let d = DynkinDiagram::build(DiagramKind::A, 3).unwrap();
        let adj = Marking::new(d, vec![0, 1], vec![2]).unwrap();
        assert!(matches!(adj.lift(&class(&[1])), Err(Error::AdjacentBlackNodes(..))));
    }

    #[test]
    fn root_test_matches_table() {
        let m = Marking::e8_a5();
        let t = m.bps_table();
        assert!(m.corresponds_to_root(&class(&[3, 5, 4, 3])).unwrap());
        let oracle = t.get(&class(&[1, 1, 1, 1])).is_some();
        assert_eq!(m.corresponds_to_root(&class(&[1, 1, 1, 1])).unwrap(), oracle);
        assert!(!m.corresponds_to_root(&class(&[6, 6, 6, 6])).unwrap());
    }

    #[test]
    fn euler_characteristics() {
        let m = Marking::e8_a5();
        let h = m.diagram().highest_root();
        assert_eq!(m.euler_characteristic(&h).unwrap(), 1);
        assert_eq!(m.euler_characteristic(&h.scaled(2)).unwrap(), 4);
        assert_eq!(m.euler_characteristic(&m.diagram().simple_root(3)).unwrap(), 1);
        assert_eq!(m.euler_characteristic(&RootVector::zero(8)), Err(Error::ZeroClass));
        assert!(matches!(m.euler_characteristic(&h.scaled(-1)), Err(Error::NotEffective(_))));
    }

    #[test]
    fn marking_validation() {
        let d = DynkinDiagram::build(DiagramKind::A, 3).unwrap();
        assert!(Marking::new(d.clone(), vec![0], vec![1]).is_err());
        assert!(Marking::new(d.clone(), vec![0, 1], vec![1, 2]).is_err());
        assert!(Marking::new(d.clone(), vec![0, 1, 2], vec![]).is_err());
        assert!(Marking::new(d, vec![5], vec![0, 1, 2]).is_err());
    }

    #[test]
    fn toml_roundtrip() {
        let m = Marking::e8_a5();
        let text = m.to_toml();
        assert_eq!(Marking::from_toml(&text).unwrap(), m);
        assert!(Marking::from_toml("kind = \"E\"\nrank = 9\nwhite = [\"n1\"]").is_err());
        assert!(Marking::from_toml("kind = 3").is_err());
    }

    #[test]
    fn class_parsing() {
        assert_eq!("3,5,4,3".parse::<CurveClass>().unwrap(), class(&[3, 5, 4, 3]));
        assert_eq!("(1, 2,2,1)".parse::<CurveClass>().unwrap(), class(&[1, 2, 2, 1]));
        assert!("1,x".parse::<CurveClass>().is_err());
        assert_eq!(class(&[2, 4, 4, 2]).to_string(), "(2,4,4,2)");
    }
}
