//! Kazhdan-Lusztig polynomials and Verma multiplicities.

use steinberg::kl::{fill_table, kl_polynomial, mu, verma_multiplicity, KlStore};
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("A3".parse()?);
    let store = KlStore::new(g.cartan_type());
    fill_table(&g, &store)?;
    let e = g.identity();
    for y in g.enumerate()? {
        for x in g.enumerate()? {
            let p = kl_polynomial(&g, x, y, &store)?;
            if p.degree().unwrap_or(0) > 0 {
                println!("P_({x},{y}) = {p}  mu = {}", mu(&g, x, y, &store)?);
            }
        }
    }
    for y in g.enumerate()? {
        let m = verma_multiplicity(&g, &e, y, &store)?;
        if m > 1 {
            println!("[M(0) : L({y}·0)] = {m}");
        }
    }
    let stats = store.stats();
    println!("{} stored polynomials, {} cache hits", stats.entries, stats.hits);

    let b3 = WeylGroup::new("B3".parse()?);
    let st = KlStore::new(b3.cartan_type());
    let w0 = b3.longest_element(b3.full_set())?;
    let y = b3.from_word(&[2, 3, 2, 1, 2, 3])?;
    println!("B3: P_(e,{y}) = {}", kl_polynomial(&b3, &b3.identity(), &y, &st)?);
    println!("B3: P_(e,w0) = {}", kl_polynomial(&b3, &b3.identity(), &w0, &st)?);
    Ok(())
}
