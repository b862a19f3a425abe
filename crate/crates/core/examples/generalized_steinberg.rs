//! Twisted generalized Steinberg representations for every parabolic and twist.

use steinberg::jh::jh_generalized_steinberg;
use steinberg::kl::KlStore;
use steinberg::root_data::Weight;
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("B2".parse()?);
    let store = KlStore::new(g.cartan_type());
    let lambda = Weight::zero(2);
    for i in g.all_subsets() {
        for w in g.min_coset_reps(i)? {
            let series = jh_generalized_steinberg(&g, i, &w, &lambda, &store)?;
            println!("I = {i}, w = {w}: length {}  {series}", series.length());
        }
    }
    Ok(())
}
