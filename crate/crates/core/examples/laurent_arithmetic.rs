//! Exact arithmetic with characters of C*: Laurent polynomials, their
//! fraction field, and the point-class ring on a fixed P^1.
//!
//! cargo run --example laurent_arithmetic

use ade_bps::symring::{euler_class, expfactor, to_polynomial, LaurentPoly, PointClassElem, RatFn, VirtualCharacter};

fn main() -> ade_bps::Result<()> {
    let p: LaurentPoly = "mu^-2 + 1 - 2*mu^1".parse()?;
    println!("p         = {p}");
    println!("p dual    = {}", p.dualize());
    println!("p^2       = {}", p.pow(2));

    // (1 - mu^-10)/(1 - mu^-5) collapses to a polynomial
    let q = RatFn::new(expfactor(-10), expfactor(-5))?;
    println!("q         = {q}  (polynomial: {})", q.is_polynomial());

    let r = RatFn::new(RatFn::product_of_expfactors(&[-10, 3, -1]), expfactor(4))?;
    println!("r         = {r}");
    println!("r(2)      = {}", r.eval(&ade_bps::symring::rat(2)).unwrap());

    // td/e on a fixed curve: (1 + x) / ((1 - mu^-1) - 2 mu^-1 x), x^2 = 0
    let tangent = PointClassElem::new(RatFn::one(), RatFn::one());
    let normal = PointClassElem::new(
        RatFn::from(expfactor(-1)),
        RatFn::from(LaurentPoly::from_terms(&[(-1, -2)])),
    );
    let todd = &tangent * &normal.inv()?;
    println!("td/e      = {todd}");
    println!("integral  = {}", todd.integrate());

    let chi = VirtualCharacter::from_terms(&[(0, 1), (1, -2), (2, 2), (3, -1)]);
    println!("chi       = {chi}, dim {}", chi.dim());
    println!("e(2 mu^2) = {}", euler_class(&VirtualCharacter::from_terms(&[(2, 2)]))?);
    println!("as poly   = {}", to_polynomial(&RatFn::from(chi.to_laurent()))?);
    Ok(())
}
