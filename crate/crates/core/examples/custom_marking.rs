//! Folding with a marking read from TOML instead of the built-in case.
//!
//! cargo run --example custom_marking [FILE]

use ade_bps::folding::Marking;

const D4_TRIALITY: &str = r#"
kind = "D"
rank = 4
black = ["n2"]
white = ["n1", "n3", "n4"]
"#;

fn main() -> ade_bps::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| ade_bps::Error::Parse(e.to_string()))?,
        None => D4_TRIALITY.to_string(),
    };
    let marking = Marking::from_toml(&text)?;
    println!("{}", marking.to_toml());

    let table = marking.bps_table();
    for r in &table.records {
        let lift = marking.lift(&r.class)?;
        println!(
            "{:<10} fiber {}  n = {:<4} lift {}  Z^2 = {}",
            r.class.to_string(),
            r.fiber_count,
            r.invariant.to_string(),
            lift.divisor,
            lift.self_intersection
        );
    }
    println!("{}", table.summary());
    Ok(())
}
