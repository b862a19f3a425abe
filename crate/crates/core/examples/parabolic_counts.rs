//! Number of elements with a given maximal parabolic, for every subset.

use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    for t in ["A3", "B3", "A4"] {
        let g = WeylGroup::new(t.parse()?);
        println!("{t} (|W| = {}):", g.order());
        for i in g.all_subsets() {
            println!("  I = {i:<10} {}", g.parabolic_class_count(i)?);
        }
    }
    Ok(())
}
