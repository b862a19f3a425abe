//! GL4: length, distinct constituents and the ones occurring twice.

use steinberg::jh::jh_steinberg;
use steinberg::kl::KlStore;
use steinberg::root_data::Weight;
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("A3".parse()?);
    let store = KlStore::new(g.cartan_type());
    let series = jh_steinberg(&g, &Weight::zero(3), &store)?;
    println!("length {}, distinct {}", series.length(), series.distinct());
    for f in series.iter().filter(|f| f.mult > 1) {
        println!("({}, J={}) I={} {}  multiplicity {}", f.w, f.j, f.i, f.smooth_part(), f.mult);
    }
    Ok(())
}
