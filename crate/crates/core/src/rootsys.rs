//! Simply-laced Dynkin diagrams, their Cartan forms, and positive roots.
//!
//! Nodes are labelled `n1 … n_rank`. The canonical layouts are
//!
//! * `A_n`: the chain `n1 – n2 – … – n_n`;
//! * `D_n`: the chain `n1 – … – n_{n-1}` with `n_n` attached to `n_{n-2}`;
//! * `E_n` (n = 6, 7, 8): the chain `n1 – … – n_{n-1}` with `n_n` attached
//!   to `n_{n-3}`. For `E8` this is the chain `n1 … n7` with `n8` on `n5`.
//!
//! All vectors are positional in this order. Internally nodes are 0-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    A,
    D,
    E,
}

impl fmt::Display for DiagramKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagramKind::A => "A",
            DiagramKind::D => "D",
            DiagramKind::E => "E",
        })
    }
}

impl FromStr for DiagramKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(DiagramKind::A),
            "D" | "d" => Ok(DiagramKind::D),
            "E" | "e" => Ok(DiagramKind::E),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

/// Label of the 0-based node `i`, i.e. `n{i+1}`.
pub fn node_label(i: usize) -> String {
    format!("n{}", i + 1)
}

/// Parses `n{k}` into the 0-based index `k - 1`.
pub fn parse_node_label(s: &str) -> Result<usize> {
    let digits = s
        .trim()
        .strip_prefix('n')
        .ok_or_else(|| Error::Parse(format!("node label `{s}` must look like n1, n2, …")))?;
    match digits.parse::<usize>() {
        Ok(k) if k >= 1 => Ok(k - 1),
        _ => Err(Error::Parse(format!("bad node label `{s}`"))),
    }
}

/// A simply-laced Dynkin diagram with a fixed node ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    kind: DiagramKind,
    rank: usize,
    /// Sorted pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

impl DynkinDiagram {
    /// Builds the canonical diagram of the given type and rank.
    pub fn build(kind: DiagramKind, rank: usize) -> Result<Self> {
        let legal = match kind {
            DiagramKind::A => rank >= 1,
            DiagramKind::D => rank >= 4,
            DiagramKind::E => (6..=8).contains(&rank),
        };
        if !legal {
            return Err(Error::IllegalRank { kind: kind.to_string(), rank });
        }
        let mut edges = Vec::with_capacity(rank - 1);
        match kind {
            DiagramKind::A => edges.extend((0..rank - 1).map(|i| (i, i + 1))),
            DiagramKind::D => {
                edges.extend((0..rank - 2).map(|i| (i, i + 1)));
                edges.push((rank - 3, rank - 1));
            }
            DiagramKind::E => {
                edges.extend((0..rank - 2).map(|i| (i, i + 1)));
                edges.push((rank - 4, rank - 1));
            }
        }
        edges.sort_unstable();
        let diagram = DynkinDiagram { kind, rank, edges };
        debug_assert!(diagram.is_tree());
        Ok(diagram)
    }

    /// Same graph with node `i` renamed to `perm[i]`.
    ///
    /// Panics if `perm` is not a permutation of `0..rank`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rank);
        let image: BTreeSet<_> = perm.iter().copied().collect();
        assert!(image.len() == self.rank && image.iter().all(|&i| i < self.rank));
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (perm[a], perm[b]);
                (x.min(y), x.max(y))
            })
            .collect();
        edges.sort_unstable();
        DynkinDiagram { kind: self.kind, rank: self.rank, edges }
    }

    pub fn kind(&self) -> DiagramKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Short name such as `E8` or `A3`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        i != j && self.edges.binary_search(&key).is_ok()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors(i).count()
    }

    fn is_tree(&self) -> bool {
        if self.edges.len() + 1 != self.rank {
            return false;
        }
        let mut seen = vec![false; self.rank];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn cartan(&self) -> CartanForm {
        let mut matrix = vec![vec![0i64; self.rank]; self.rank];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &self.edges {
            matrix[a][b] = -1;
            matrix[b][a] = -1;
        }
        CartanForm { matrix }
    }

    /// `uᵀ C v`. Intersection numbers of curves are the negatives of this.
    pub fn pairing(&self, u: &RootVector, v: &RootVector) -> Result<i64> {
        self.check_len(u)?;
        self.check_len(v)?;
        Ok(self.pairing_unchecked(u.coeffs(), v.coeffs()))
    }

    fn pairing_unchecked(&self, u: &[i64], v: &[i64]) -> i64 {
        let diag: i64 = u.iter().zip(v).map(|(a, b)| 2 * a * b).sum();
        let off: i64 = self
            .edges
            .iter()
            .map(|&(a, b)| u[a] * v[b] + u[b] * v[a])
            .sum();
        diag - off
    }

    /// `vᵀ C v`.
    pub fn norm(&self, v: &RootVector) -> Result<i64> {
        self.pairing(v, v)
    }

    /// Row `i` of `C v`, i.e. the pairing of `v` with the simple root `e_i`.
    pub fn pairing_with_simple(&self, v: &RootVector, i: usize) -> Result<i64> {
        self.check_len(v)?;
        let c = v.coeffs();
        Ok(2 * c[i] - self.neighbors(i).map(|j| c[j]).sum::<i64>())
    }

    pub fn check_len(&self, v: &RootVector) -> Result<()> {
        if v.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: v.len() });
        }
        Ok(())
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        RootVector(c)
    }

    pub fn is_positive_root(&self, v: &RootVector) -> bool {
        v.len() == self.rank
            && v.is_nonnegative()
            && !v.is_zero()
            && self.pairing_unchecked(v.coeffs(), v.coeffs()) == 2
    }

    /// All positive roots, sorted lexicographically.
    ///
    /// Closure of the simple roots under adding simple roots while the
    /// quadratic condition `vᵀCv = 2` holds. Every positive root is reached
    /// this way since each non-simple positive root minus some simple root is
    /// again a positive root.
    pub fn positive_roots(&self) -> Vec<RootVector> {
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..self.rank).map(|i| self.simple_root(i).0).collect();
        found.extend(frontier.iter().cloned());
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for v in &frontier {
                for i in 0..self.rank {
                    let mut w = v.clone();
                    w[i] += 1;
                    if self.pairing_unchecked(&w, &w) == 2 && found.insert(w.clone()) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        found.into_iter().map(RootVector).collect()
    }

    /// Brute-force search over every `v` with `0 ≤ v_i ≤ bound`. Sorted
    /// lexicographically. A bound of 6 covers every ADE type.
    pub fn positive_roots_bounded(&self, bound: i64) -> Vec<RootVector> {
        let mut out = Vec::new();
        let mut v = vec![0i64; self.rank];
        loop {
            // odometer, most significant digit first, so output is lexicographic
            let mut pos = self.rank;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if v[pos] < bound {
                    v[pos] += 1;
                    for x in &mut v[pos + 1..] {
                        *x = 0;
                    }
                    break;
                }
            }
            if self.pairing_unchecked(&v, &v) == 2 {
                out.push(RootVector(v.clone()));
            }
        }
    }

    /// The positive root dominating every other one coefficientwise.
    pub fn highest_root(&self) -> RootVector {
        let roots = self.positive_roots();
        let top = roots
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("every diagram has at least one root");
        debug_assert!(roots.iter().all(|r| r.0.iter().zip(&top.0).all(|(a, b)| a <= b)));
        top
    }
}

/// Cartan matrix: 2 on the diagonal, −1 for adjacent nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanForm {
    pub matrix: Vec<Vec<i64>>,
}

impl CartanForm {
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn quadratic(&self, v: &[i64]) -> i64 {
        self.apply(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// Integer coefficients on the nodes of a diagram, in node order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        RootVector(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        RootVector(vec![0; rank])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scaled(&self, k: i64) -> Self {
        RootVector(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}
