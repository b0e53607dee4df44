//! Which black sets of E8 fold the highest root onto (3,5,4,3)?
//!
//! cargo run --example marking_search

use ade_bps::folding::CurveClass;
use ade_bps::rootsys::{node_label, DiagramKind, DynkinDiagram};
use ade_bps::verify::admissible_black_sets;

fn main() -> ade_bps::Result<()> {
    let e8 = DynkinDiagram::build(DiagramKind::E, 8)?;
    let target = CurveClass::new(vec![3, 5, 4, 3]);
    for dropped in [0, 4, 8] {
        let sets = admissible_black_sets(&e8, 4, &target, dropped);
        let names: Vec<String> = sets
            .iter()
            .map(|s| s.iter().map(|&i| node_label(i)).collect::<Vec<_>>().join(","))
            .collect();
        println!("{dropped} dropped: {} set(s) {names:?}", sets.len());
    }
    Ok(())
}
