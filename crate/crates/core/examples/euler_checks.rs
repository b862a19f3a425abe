//! Consistency checks: Euler characteristics, the nonvanishing law and the
//! Coxeter criterion.

use steinberg::jh::{coxeter_criterion, steinberg_multiplicity, verify_smooth_complex, verify_tits_euler};
use steinberg::kl::KlStore;
use steinberg::weyl::WeylGroup;

fn main() -> steinberg::Result<()> {
    for t in ["A3", "B3", "G2"] {
        let g = WeylGroup::new(t.parse()?);
        let store = KlStore::new(g.cartan_type());
        let rho = g.root_system().rho().clone();
        let mut ok = true;
        for i in g.all_subsets() {
            ok &= verify_tits_euler(&g, i, &rho, &store)?.passed();
            ok &= verify_smooth_complex(&g, i, &rho, &store)?.passed();
        }
        for w in g.enumerate()? {
            let supp = g.support(w);
            for j in g.i_max(w).subsets() {
                ok &= (steinberg_multiplicity(&g, w, j, &store)? > 0) == j.is_subset(supp);
            }
            for i in g.all_subsets() {
                ok &= coxeter_criterion(&g, i, w)? == i.is_subset(supp);
            }
        }
        println!("{t}: {}", if ok { "all checks pass" } else { "FAILURE" });
    }
    Ok(())
}
