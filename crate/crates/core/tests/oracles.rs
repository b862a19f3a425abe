mod common;

use std::collections::{BTreeMap, HashSet};

use common::*;
use steinberg::jh::{jh_generalized_steinberg, jh_induced, jh_steinberg, steinberg_multiplicity};
use steinberg::kl::{fill_table, kl_polynomial, mu, parabolic_verma_multiplicity, KlStore};
use steinberg::root_data::{RootSystem, Weight};
use steinberg::weyl::SimpleSubset;

#[test]
fn positive_roots_match_reflection_closure() {
    for t in SMALL_TYPES.iter().chain(&["D4", "F4", "A4", "C4", "B4"]) {
        let ct = t.parse().unwrap();
        let rs = RootSystem::new(ct);
        let lib: HashSet<Vec<i64>> = rs.positive_roots().iter().cloned().collect();
        assert_eq!(lib.len(), rs.positive_roots().len(), "{t}: duplicate roots");
        assert_eq!(lib, positive_roots_oracle(ct), "{t}");
        assert_eq!(lib.len(), ct.positive_root_count(), "{t}");
    }
    assert_eq!(positive_roots_oracle("G2".parse().unwrap()).len(), 6);
}

#[test]
fn canonical_word_is_smallest_left_descent_normal_form() {
    let g = group("A2");
    assert_eq!(word(&g, &[2, 1, 2]).to_word(), vec![1, 2, 1]);
    for t in SMALL_TYPES {
        let g = group(t);
        for w in g.enumerate().unwrap() {
            let words = reduced_words(&g, w);
            let first = words.iter().min().unwrap();
            assert_eq!(&w.to_word(), first, "{t}: {w}");
            assert_eq!(w.len(), first.len());
        }
    }
}

#[test]
fn bruhat_matches_subword_enumeration() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let g = group(t);
        let elems = g.enumerate().unwrap();
        for y in elems {
            let ideal = bruhat_ideal(&g, y);
            for x in elems {
                assert_eq!(g.bruhat_leq(x, y).unwrap(), ideal.contains(x), "{t}: {x} <= {y}");
            }
        }
    }
    let g = group("A2");
    assert!(g.bruhat_leq(&word(&g, &[1]), &word(&g, &[2, 1])).unwrap());
    assert!(!g.bruhat_leq(&word(&g, &[1, 2]), &word(&g, &[2, 1])).unwrap());
}

#[test]
fn support_matches_all_reduced_words() {
    for t in SMALL_TYPES {
        let g = group(t);
        for w in g.enumerate().unwrap() {
            assert_eq!(g.support(w), support_oracle(&g, w), "{t}: {w}");
        }
    }
    let g = group("A3");
    let w0 = g.longest_element(g.full_set()).unwrap();
    assert_eq!(support_oracle(&g, &w0), g.full_set());
    let w = word(&g, &[2, 1, 3, 2]);
    let shortening: Vec<usize> = (1..=3)
        .filter(|&i| g.multiply(&g.simple_reflection(i).unwrap(), &w).unwrap().len() < w.len())
        .collect();
    assert_eq!(shortening, vec![2]);
    assert_eq!(g.left_descents(&w), SimpleSubset::from_indices(&[2]));
    assert_eq!(g.i_max(&w), SimpleSubset::from_indices(&[1, 3]));
}

#[test]
fn coset_representatives_match_length_filter() {
    let g = group("A2");
    let reps: HashSet<_> = g.min_coset_reps(SimpleSubset::from_indices(&[1])).unwrap().into_iter().collect();
    let expected: HashSet<_> = [vec![], vec![2], vec![2, 1]].iter().map(|w| word(&g, w)).collect();
    assert_eq!(reps, expected);
    for t in SMALL_TYPES {
        let g = group(t);
        for i in g.all_subsets() {
            let lib: HashSet<_> = g.min_coset_reps(i).unwrap().into_iter().collect();
            let brute: HashSet<_> = g
                .enumerate()
                .unwrap()
                .iter()
                .filter(|w| is_min_rep_oracle(&g, i, w))
                .cloned()
                .collect();
            assert_eq!(lib, brute, "{t} I={i}");
            let sub: HashSet<_> = g.parabolic_subgroup(i).unwrap().into_iter().collect();
            assert_eq!(sub, parabolic_oracle(&g, i), "{t} W_I, I={i}");
        }
    }
}

#[test]
fn coxeter_elements_match_permutation_products() {
    let g = group("A3");
    let cox = g.coxeter_elements(g.full_set()).unwrap();
    assert_eq!(cox.len(), 4);
    for t in SMALL_TYPES {
        let g = group(t);
        for i in g.all_subsets() {
            let lib: HashSet<_> = g.coxeter_elements(i).unwrap().into_iter().collect();
            assert_eq!(lib, coxeter_oracle(&g, i), "{t} I={i}");
        }
    }
}

#[test]
fn dot_action_matches_letterwise_reflection() {
    for t in SMALL_TYPES {
        let g = group(t);
        let rs = g.root_system();
        let lambdas = [Weight::zero(g.rank()), rs.rho().clone(), Weight((0..g.rank() as i64).map(|k| 2 * k + 1).collect())];
        for lam in &lambdas {
            for w in g.enumerate().unwrap() {
                assert_eq!(rs.dot_action(w, lam), dot_oracle(&g, w, lam), "{t}: {w}.{lam}");
            }
        }
    }
}

#[test]
fn parabolic_class_counts_sum_to_group_order() {
    for t in SMALL_TYPES {
        let g = group(t);
        let mut total = 0u64;
        for i in g.all_subsets() {
            let brute = g
                .enumerate()
                .unwrap()
                .iter()
                .filter(|w| {
                    let desc: Vec<usize> = (1..=g.rank())
                        .filter(|&k| g.multiply(&g.simple_reflection(k).unwrap(), w).unwrap().len() < w.len())
                        .collect();
                    g.full_set().difference(SimpleSubset::from_indices(&desc)) == i
                })
                .count() as u64;
            assert_eq!(g.parabolic_class_count(i).unwrap(), brute, "{t} I={i}");
            total += brute;
        }
        assert_eq!(total as u128, g.order(), "{t}");
    }
}

#[test]
fn kl_polynomials_match_right_descent_recursion() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let g = group(t);
        let st = KlStore::new(g.cartan_type());
        let mut oracle = KlOracle::new(&g);
        let elems = g.enumerate().unwrap();
        for y in elems {
            for x in elems {
                let lib: Vec<i64> = kl_polynomial(&g, x, y, &st).unwrap().coeffs().iter().map(|&c| c as i64).collect();
                assert_eq!(lib, oracle.p(x, y), "{t}: P_({x},{y})");
                assert_eq!(mu(&g, x, y, &st).unwrap() as i64, oracle.mu(x, y));
            }
        }
    }
}

#[test]
fn dihedral_polynomials_are_trivial() {
    for t in ["A2", "B2", "G2"] {
        let g = group(t);
        let st = KlStore::new(g.cartan_type());
        fill_table(&g, &st).unwrap();
        let elems = g.enumerate().unwrap();
        for y in elems {
            for x in elems {
                let p = kl_polynomial(&g, x, y, &st).unwrap();
                let expect = if g.bruhat_leq(x, y).unwrap() { vec![1] } else { vec![] };
                assert_eq!(p.coeffs(), &expect[..], "{t}: P_({x},{y})");
            }
        }
    }
}

#[test]
fn parabolic_verma_multiplicities_match_oracle() {
    for t in ["A2", "A3", "B2", "G2"] {
        let g = group(t);
        let st = KlStore::new(g.cartan_type());
        let mut oracle = KlOracle::new(&g);
        for k in g.all_subsets() {
            for w in g.min_coset_reps(k).unwrap() {
                for y in g.enumerate().unwrap() {
                    let lib = parabolic_verma_multiplicity(&g, k, &w, y, &st).unwrap() as i64;
                    assert_eq!(lib, parabolic_mult_oracle(&g, &mut oracle, k, &w, y), "{t} K={k} {w} {y}");
                }
            }
        }
    }
}

fn labels(m: &steinberg::jh::FactorMultiset) -> BTreeMap<Label, i64> {
    m.iter().map(|f| ((f.w.to_word(), f.j.to_vec()), f.mult as i64)).collect()
}

#[test]
fn steinberg_series_matches_induced_euler_sum() {
    for t in SMALL_TYPES {
        let g = group(t);
        let st = KlStore::new(g.cartan_type());
        let lib = jh_steinberg(&g, &Weight::zero(g.rank()), &st).unwrap();
        assert_eq!(labels(&lib), steinberg_oracle(&g), "{t}");
    }
}

#[test]
fn steinberg_multiplicity_sum_matches_oracle() {
    let g = group("A3");
    let st = KlStore::new(g.cartan_type());
    let oracle = steinberg_oracle(&g);
    for w in g.enumerate().unwrap() {
        for j in g.i_max(w).subsets() {
            let m = steinberg_multiplicity(&g, w, j, &st).unwrap() as i64;
            let key = (w.to_word(), j.to_vec());
            assert_eq!(m, oracle.get(&key).copied().unwrap_or(0), "({w},{j})");
        }
    }
}

#[test]
fn generalized_steinberg_paths_agree() {
    let g = group("A2");
    let st = KlStore::new(g.cartan_type());
    let lam = Weight::zero(2);
    let e = g.identity();
    assert_eq!(
        jh_generalized_steinberg(&g, SimpleSubset::EMPTY, &e, &lam, &st).unwrap(),
        jh_steinberg(&g, &lam, &st).unwrap()
    );
}

#[test]
fn a1_principal_series() {
    let g = group("A1");
    let st = KlStore::new(g.cartan_type());
    let lam = Weight::zero(1);
    let e = g.identity();
    let s = word(&g, &[1]);
    let full = SimpleSubset::from_indices(&[1]);
    let b = jh_induced(&g, SimpleSubset::EMPTY, &e, &lam, &st).unwrap();
    assert_eq!(b.length(), 3);
    assert_eq!(b.multiplicity(&e, SimpleSubset::EMPTY), 1);
    assert_eq!(b.multiplicity(&e, full), 1);
    assert_eq!(b.multiplicity(&s, SimpleSubset::EMPTY), 1);
    let gg = jh_induced(&g, full, &e, &lam, &st).unwrap();
    assert_eq!(gg.length(), 1);
    assert_eq!(gg.multiplicity(&e, full), 1);
    let v = jh_steinberg(&g, &lam, &st).unwrap();
    assert_eq!(v.length(), 2);
    assert_eq!(v.multiplicity(&e, full), 0);
}
