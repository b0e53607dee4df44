//! The E8 roots folded onto the four surviving curves of the icosahedral
//! resolution, with n = fiber/2.
//!
//! cargo run --example fold_table

use std::collections::BTreeMap;

use ade_bps::folding::Marking;

fn main() {
    let marking = Marking::e8_a5();
    let black: Vec<String> = marking.black().iter().map(|&i| marking.curve_name(i)).collect();
    println!("black (contracted) curves: {}", black.join(" "));

    let table = marking.bps_table();
    for r in &table.records {
        println!("{:<12} fiber {:>2}  n = {}", r.class.to_string(), r.fiber_count, r.invariant);
    }
    println!("{}", table.summary());

    let mut by_fiber: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &table.records {
        *by_fiber.entry(r.fiber_count).or_default() += 1;
    }
    for (fiber, classes) in by_fiber {
        println!("{classes:>2} classes with {fiber} roots each");
    }
    println!("dropped roots (supported on black nodes only):");
    for r in &table.dropped {
        println!("  {r}");
    }
}
