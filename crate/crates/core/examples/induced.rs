//! Constituents of parabolically induced representations.

use steinberg::jh::jh_induced;
use steinberg::kl::KlStore;
use steinberg::root_data::Weight;
use steinberg::weyl::{SimpleSubset, WeylGroup};

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("A2".parse()?);
    let store = KlStore::new(g.cartan_type());
    let lambda = Weight(vec![1, 2]);
    for k in g.all_subsets() {
        let series = jh_induced(&g, k, &g.identity(), &lambda, &store)?;
        println!("K = {k}: {series}");
    }
    let twist = g.from_word(&[2])?;
    let k = SimpleSubset::from_indices(&[1]);
    println!("K = {k}, w = {twist}: {}", jh_induced(&g, k, &twist, &lambda, &store)?);
    Ok(())
}
