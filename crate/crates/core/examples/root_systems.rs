//! Positive roots and highest roots of the ADE diagrams.
//!
//! cargo run --example root_systems

use ade_bps::rootsys::{DiagramKind, DynkinDiagram};

fn main() -> ade_bps::Result<()> {
    let cases = [
        (DiagramKind::A, 4),
        (DiagramKind::D, 4),
        (DiagramKind::D, 6),
        (DiagramKind::E, 6),
        (DiagramKind::E, 7),
        (DiagramKind::E, 8),
    ];
    for (kind, rank) in cases {
        let d = DynkinDiagram::build(kind, rank)?;
        let roots = d.positive_roots();
        println!("{:<3} {:>3} positive roots, highest {}", d.name(), roots.len(), d.highest_root());
    }

    let e8 = DynkinDiagram::build(DiagramKind::E, 8)?;
    println!("\nE8 edges: {:?}", e8.edges());
    println!("E8 Cartan matrix:");
    for row in &e8.cartan().matrix {
        println!("  {row:?}");
    }

    // the highest root pairs to 1 with the affine node's neighbour and 0 elsewhere
    let top = e8.highest_root();
    let pairings: Vec<i64> = (0..8).map(|i| e8.pairing_with_simple(&top, i).unwrap()).collect();
    println!("\n(C * highest root) = {pairings:?}, norm {}", e8.norm(&top)?);
    Ok(())
}
