//! Reading, linting and editing fixed-locus descriptors.
//!
//! cargo run --example descriptor_lint [FILE]

use ade_bps::folding::Marking;
use ade_bps::localize::GeometryDescriptor;

fn main() -> ade_bps::Result<()> {
    let marking = Marking::e8_a5();
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(&path).map_err(|e| ade_bps::Error::Parse(e.to_string()))?,
        None => GeometryDescriptor::builtin_e8_a5_text().to_string(),
    };
    let d: GeometryDescriptor = text.parse()?;
    report(&d, &marking);

    // break the Calabi-Yau condition at one point and look again
    let mut broken = d.clone();
    broken.y_points[3].weights = [2, 2, -2];
    println!("\nafter editing P4:");
    report(&broken, &marking);
    println!("\ncanonical form of the edit:\n{broken}");
    Ok(())
}

fn report(d: &GeometryDescriptor, marking: &Marking) {
    let r = d.lint(marking.diagram());
    for l in &r.lints {
        println!("{} {}", if l.passed() { "ok  " } else { "FAIL" }, l.name);
        for p in &l.problems {
            println!("       {p}");
        }
    }
    for w in &r.warnings {
        println!("warn {w}");
    }
}
