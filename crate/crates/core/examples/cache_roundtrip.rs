//! Saving and reloading a full Kazhdan-Lusztig table.

use steinberg::cache::{cache_load, cache_save};
use steinberg::kl::{fill_table, KlStore};
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("B3".parse()?);
    let store = KlStore::new(g.cartan_type());
    fill_table(&g, &store)?;
    let path = std::env::temp_dir().join("steinberg-b3-kl.json");
    cache_save(&store, &path)?;
    let loaded = cache_load(&path, &g)?;
    println!("saved {} entries, loaded {} from {}", store.len(), loaded.len(), path.display());
    let a3 = WeylGroup::new("A3".parse()?);
    match cache_load(&path, &a3) {
        Ok(_) => println!("unexpected: loaded a B3 cache as A3"),
        Err(e) => println!("rejected for A3: {e}"),
    }
    std::fs::remove_file(&path).ok();
    Ok(())
}
