//! Lifting curve classes to divisors on the surface and reading off
//! whether they come from roots.
//!
//! cargo run --example lift_divisor -- 2,4,3,2

use ade_bps::folding::{CurveClass, Marking};

fn main() -> ade_bps::Result<()> {
    let marking = Marking::e8_a5();
    let args: Vec<String> = std::env::args().skip(1).collect();
    let classes: Vec<CurveClass> = if args.is_empty() {
        ["3,5,4,3", "2,4,3,2", "1,2,2,1", "2,0,0,0", "1,1,1,1"]
            .iter()
            .map(|s| s.parse())
            .collect::<ade_bps::Result<_>>()?
    } else {
        args.iter().map(|s| s.parse()).collect::<ade_bps::Result<_>>()?
    };

    for class in classes {
        let l = marking.lift(&class)?;
        println!(
            "{:<10} -> {}  k={:?} n={:?} delta={:?}  Z^2={}  root: {}",
            class.to_string(),
            l.divisor,
            l.k,
            l.n,
            l.delta,
            l.self_intersection,
            l.self_intersection == -2
        );
    }
    Ok(())
}
