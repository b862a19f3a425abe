//! The eight constituents of the locally analytic Steinberg representation of GL3.

use steinberg::jh::jh_steinberg;
use steinberg::kl::KlStore;
use steinberg::root_data::Weight;
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("A2".parse()?);
    let store = KlStore::new(g.cartan_type());
    let series = jh_steinberg(&g, &Weight::zero(2), &store)?;
    for f in series.iter() {
        println!("L({}·0) ⊗ {}  weight {}  x{}", f.w, f.smooth_part(), f.highest_weight, f.mult);
    }
    println!("length {}", series.length());
    Ok(())
}
