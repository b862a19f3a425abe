//! Words, Bruhat order, supports and coset representatives in A3.

use steinberg::weyl::{SimpleSubset, WeylGroup};

fn main() -> steinberg::Result<()> {
    let g = WeylGroup::new("A3".parse()?);
    let w = g.from_word(&[2, 1, 3, 2])?;
    println!("w = {w}, length {}, canonical word {:?}", w.len(), w.to_word());
    println!("left descents {}, I(w) = {}, supp(w) = {}", g.left_descents(&w), g.i_max(&w), g.support(&w));

    let x = g.from_word(&[1, 3])?;
    println!("{x} <= {w}: {}", g.bruhat_leq(&x, &w)?);
    println!("{w} <= {x}: {}", g.bruhat_leq(&w, &x)?);

    let i = SimpleSubset::from_indices(&[1, 3]);
    let reps = g.min_coset_reps(i)?;
    println!("|^{{1,3}}W| = {}", reps.len());

    let cox = g.coxeter_elements(g.full_set())?;
    let names: Vec<String> = cox.iter().map(|c| c.to_string()).collect();
    println!("Coxeter elements: {}", names.join(", "));
    println!("w0 = {}", g.longest_element(g.full_set())?);
    Ok(())
}
