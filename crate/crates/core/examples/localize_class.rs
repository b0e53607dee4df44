//! Full localization of one class: per-point Chern characters, the total
//! Euler pairing, its Ext split and the invariant.
//!
//! cargo run --example localize_class -- 2,4,4,2

use ade_bps::folding::{CurveClass, Marking};
use ade_bps::localize::{GeometryDescriptor, Localizer};

fn main() -> ade_bps::Result<()> {
    let class: CurveClass = std::env::args().nth(1).as_deref().unwrap_or("3,5,4,3").parse()?;
    let marking = Marking::e8_a5();
    let descriptor = GeometryDescriptor::e8_a5();
    let engine = Localizer::new(&marking, &descriptor)?;

    let l = engine.localize(&class)?;
    println!("class {class}, lift {}", l.lift.divisor);
    for q in &descriptor.s_points {
        let w = engine.weight_at_point(&l.lift.divisor, q)?;
        println!("  O(-C) at {:<3} has weight {w}", q.name);
    }
    for c in &descriptor.s_curves {
        let (w, d) = engine.line_bundle_on_curve(&l.lift.divisor, c)?;
        println!("  O(-C) on {} has weight {w}, d = {d}", c.name);
    }
    for t in &l.points {
        println!("ch({}) = {}", t.name, t.ch);
        println!("chi({}) = {}", t.name, t.chi);
    }
    println!("chi    = {}", l.chi);
    println!("Ext1   = {}   e = {}", l.ext.ext1, l.euler_ext1);
    println!("Ext2   = {}   e = {}", l.ext.ext2, l.euler_ext2);
    println!("n      = {}", l.invariant);

    let folded = marking.bps_table().get(&class).map(|r| r.invariant.clone());
    println!("fold   = {}", folded.map(|n| n.to_string()).unwrap_or_else(|| "-".into()));
    Ok(())
}
