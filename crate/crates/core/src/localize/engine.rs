use serde::Serialize;

use super::descriptor::{GeometryDescriptor, SCurve, SPoint, YPoint};
use crate::error::{Error, Result};
use crate::folding::{CurveClass, LiftedDivisor, Marking};
use crate::rootsys::{node_label, RootVector};
use crate::symring::{
    euler_class, expfactor, rat, to_polynomial, EulerClass, LaurentPoly, PointClassElem, RatFn, Rational,
    VirtualCharacter,
};

/// Localization of `ch χ(O_C, O_C)` for a fixed marking and descriptor.
#[derive(Debug, Clone)]
pub struct Localizer<'a> {
    marking: &'a Marking,
    descriptor: &'a GeometryDescriptor,
}

/// Per-`Y`-point pieces of a localization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTerm {
    pub name: String,
    /// `ch(O_C)` restricted to the point.
    pub ch: RatFn,
    /// `ch(O_C)^∨ · ch(O_C) · td/e` at the point.
    pub chi: RatFn,
}

/// `χ = 1 − Ext¹ + Ext² − μ^{−K}` with `Ext¹`, `Ext²` genuine representations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtDecomposition {
    pub ext1: VirtualCharacter,
    pub ext2: VirtualCharacter,
}

impl ExtDecomposition {
    /// The character this decomposition came from, given the canonical weight.
    pub fn recompose(&self, canonical_weight: i64) -> VirtualCharacter {
        VirtualCharacter::from_terms(&[(0, 1), (-canonical_weight, -1)])
            .minus(&self.ext1)
            .plus(&self.ext2)
    }
}

/// Splits `χ` into `Ext¹` and `Ext²`: strip `Ext⁰ = 1` and
/// `Ext³ = μ^{−K}`, then the positive part of the rest is `Ext²` and the
/// negated negative part is `Ext¹`. Errors if anything survives in weight 0
/// or the two groups differ in dimension.
pub fn ext_decompose(chi: &VirtualCharacter, canonical_weight: i64) -> Result<ExtDecomposition> {
    let rest = chi.minus(&VirtualCharacter::from_terms(&[(0, 1), (-canonical_weight, -1)]));
    if rest.coeff(0) != 0 {
        return Err(Error::ExtDecomposition(format!(
            "weight-0 residue {} in {chi}",
            rest.coeff(0)
        )));
    }
    let mut ext1 = VirtualCharacter::zero();
    let mut ext2 = VirtualCharacter::zero();
    for (w, a) in rest.terms() {
        if a > 0 {
            ext2.add_term(w, a);
        } else {
            ext1.add_term(w, -a);
        }
    }
    if ext1.dim() != ext2.dim() {
        return Err(Error::ExtDecomposition(format!(
            "dim Ext1 = {} but dim Ext2 = {}",
            ext1.dim(),
            ext2.dim()
        )));
    }
    Ok(ExtDecomposition { ext1, ext2 })
}

/// Everything computed on the way to one invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Localization {
    pub lift: LiftedDivisor,
    pub points: Vec<PointTerm>,
    pub chi: VirtualCharacter,
    pub ext: ExtDecomposition,
    pub euler_ext1: EulerClass,
    pub euler_ext2: EulerClass,
    pub invariant: Rational,
}

impl<'a> Localizer<'a> {
    /// Checks that every node the descriptor names exists in the marking's
    /// diagram and that curve incidences carry the curve's normal weight.
    pub fn new(marking: &'a Marking, descriptor: &'a GeometryDescriptor) -> Result<Self> {
        let rank = marking.diagram().rank();
        if let Some(&n) = descriptor.nodes().iter().find(|&&n| n >= rank) {
            return Err(Error::Descriptor(format!(
                "{} is not a node of {}",
                node_label(n),
                marking.diagram().name()
            )));
        }
        for c in &descriptor.s_curves {
            if let Some(i) = c.incidences.iter().find(|i| i.weight != c.normal_weight) {
                return Err(Error::Descriptor(format!(
                    "descriptor corrupt: {} meets {} with weight {}, normal weight is {}",
                    c.name,
                    node_label(i.node),
                    i.weight,
                    c.normal_weight
                )));
            }
        }
        Ok(Localizer { marking, descriptor })
    }

    pub fn marking(&self) -> &Marking {
        self.marking
    }

    pub fn descriptor(&self) -> &GeometryDescriptor {
        self.descriptor
    }

    /// `Π (1 − μ^{−w})` over the tangent weights of a `Y` point.
    pub fn prefactor(&self, p: &YPoint) -> LaurentPoly {
        RatFn::product_of_expfactors(&p.weights.map(|w| -w))
    }

    fn check(&self, divisor: &RootVector) -> Result<()> {
        self.marking.diagram().check_len(divisor)
    }

    /// Weight of `O_S(−D)` at an isolated fixed point: `−Σ coef·(normal weight)`.
    pub fn weight_at_point(&self, divisor: &RootVector, q: &SPoint) -> Result<i64> {
        self.check(divisor)?;
        Ok(-q.incidences.iter().map(|i| divisor.0[i.node] * i.weight).sum::<i64>())
    }

    /// `(w, d)` for `O_S(−D)` on a fixed curve: the fiber weight
    /// `w = −coef·ν` and `d = (C D)_node`. The restriction contributes
    /// `μ^w·(1 + d·x)` to `ch`.
    pub fn line_bundle_on_curve(&self, divisor: &RootVector, c: &SCurve) -> Result<(i64, i64)> {
        self.check(divisor)?;
        let w = -divisor.0[c.node] * c.normal_weight;
        let d = self.marking.diagram().pairing_with_simple(divisor, c.node)?;
        Ok((w, d))
    }

    /// `e/td(T_P Y) · ch(O_D)_q · td/e(T_q S)` at an isolated point.
    pub fn point_contribution(&self, divisor: &RootVector, q: &SPoint) -> Result<RatFn> {
        let p = self.descriptor.y_point(&q.image)?;
        let w = self.weight_at_point(divisor, q)?;
        let num = &self.prefactor(p) * &expfactor(w);
        let den = RatFn::product_of_expfactors(&q.weights.map(|w| -w));
        RatFn::new(num, den)
    }

    /// Pushforward from a pointwise fixed rational curve:
    /// `∫ (1 − μ^w·(1 + d·x)) · (1 + x) / ((1 − μ^{−ν}) + s·μ^{−ν}·x)`,
    /// times the `Y` prefactor.
    pub fn curve_contribution(&self, divisor: &RootVector, c: &SCurve) -> Result<RatFn> {
        let p = self.descriptor.y_point(&c.image)?;
        let (w, d) = self.line_bundle_on_curve(divisor, c)?;
        let mu_w = RatFn::from(LaurentPoly::mu(w));
        let ch = PointClassElem::new(
            RatFn::from(expfactor(w)),
            mu_w.scale(&rat(-d)),
        );
        let todd_t = PointClassElem::new(RatFn::one(), RatFn::one());
        let mu_nu = LaurentPoly::mu(-c.normal_weight);
        let euler_n = PointClassElem::new(
            RatFn::from(expfactor(-c.normal_weight)),
            RatFn::from(mu_nu.scale(&rat(c.self_intersection))),
        );
        let integrand = &(&ch * &todd_t) * &euler_n.inv()?;
        Ok(&RatFn::from(self.prefactor(p)) * &integrand.integrate())
    }

    /// `ch(O_C)` at a `Y` point: the sum over `S` components mapping there.
    pub fn chern_character_at(&self, divisor: &RootVector, y: &str) -> Result<RatFn> {
        let mut total = RatFn::zero();
        for q in self.descriptor.s_points.iter().filter(|q| q.image == y) {
            total = &total + &self.point_contribution(divisor, q)?;
        }
        for c in self.descriptor.s_curves.iter().filter(|c| c.image == y) {
            total = &total + &self.curve_contribution(divisor, c)?;
        }
        Ok(total)
    }

    /// `ch^∨ · ch / Π(1 − μ^{−w})` at a `Y` point.
    pub fn chi_at(&self, divisor: &RootVector, y: &str) -> Result<RatFn> {
        let p = self.descriptor.y_point(y)?;
        let ch = self.chern_character_at(divisor, y)?;
        (&ch.dualize() * &ch).try_div(&RatFn::from(self.prefactor(p)))
    }

    pub fn point_terms(&self, divisor: &RootVector) -> Result<Vec<PointTerm>> {
        self.descriptor
            .y_points
            .iter()
            .map(|p| {
                let ch = self.chern_character_at(divisor, &p.name)?;
                let chi = (&ch.dualize() * &ch).try_div(&RatFn::from(self.prefactor(p)))?;
                Ok(PointTerm { name: p.name.clone(), ch, chi })
            })
            .collect()
    }

    /// `ch χ(O_C, O_C)`; must reduce to an integer Laurent polynomial.
    pub fn total_chi(&self, divisor: &RootVector) -> Result<VirtualCharacter> {
        let sum = self
            .point_terms(divisor)?
            .iter()
            .fold(RatFn::zero(), |acc, t| &acc + &t.chi);
        to_polynomial(&sum)
    }

    pub fn localize(&self, class: &CurveClass) -> Result<Localization> {
        let lift = self.marking.lift(class)?;
        if lift.self_intersection != -2 {
            return Err(Error::NotRootClass(class.to_string()));
        }
        let points = self.point_terms(&lift.divisor)?;
        let sum = points.iter().fold(RatFn::zero(), |acc, t| &acc + &t.chi);
        let chi = to_polynomial(&sum)?;
        let ext = ext_decompose(&chi, self.descriptor.canonical_weight)?;
        let euler_ext1 = euler_class(&ext.ext1)?;
        let euler_ext2 = euler_class(&ext.ext2)?;
        if euler_ext1.degree != euler_ext2.degree {
            return Err(Error::DegreeMismatch { ext2: euler_ext2.degree, ext1: euler_ext1.degree });
        }
        let invariant = &euler_ext2.scalar / &euler_ext1.scalar;
        Ok(Localization { lift, points, chi, ext, euler_ext1, euler_ext2, invariant })
    }

    /// `e(Ext²)/e(Ext¹)` for a curve class.
    pub fn bps_invariant(&self, class: &CurveClass) -> Result<Rational> {
        Ok(self.localize(class)?.invariant)
    }
}
