//! Cartan matrices, positive roots and the dot action.

use steinberg::root_data::{CartanType, RootSystem, Weight};
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    for t in ["A3", "B3", "C3", "G2", "F4"] {
        let ct: CartanType = t.parse()?;
        let rs = RootSystem::new(ct);
        println!("{t}: |W| = {}, |Φ⁺| = {}", ct.weyl_group_order(), rs.positive_roots().len());
        println!("  cartan = {:?}", ct.cartan_matrix());
    }
    let g = WeylGroup::new("G2".parse()?);
    println!("G2 positive roots (simple-root coordinates):");
    for r in g.root_system().positive_roots() {
        println!("  {r:?}");
    }
    let lambda = Weight(vec![1, 0]);
    let w = g.parse_word("1,2")?;
    println!("s1s2·{lambda} = {}", g.root_system().dot_action(&w, &lambda));
    Ok(())
}
