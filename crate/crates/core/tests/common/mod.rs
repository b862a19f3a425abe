//! Brute-force reference implementations used to cross-check the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, HashSet};

use steinberg::root_data::{CartanType, Weight};
use steinberg::weyl::{SimpleSubset, WeylElem, WeylGroup};

pub const SMALL_TYPES: [&str; 7] = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

pub fn group(t: &str) -> WeylGroup {
    WeylGroup::new(t.parse::<CartanType>().unwrap())
}

pub fn word(g: &WeylGroup, w: &[usize]) -> WeylElem {
    g.from_word(w).unwrap()
}

/// Every product of a subword of one reduced word of `y`.
pub fn bruhat_ideal(g: &WeylGroup, y: &WeylElem) -> HashSet<WeylElem> {
    let letters = y.to_word();
    let mut out = HashSet::new();
    for mask in 0u32..(1 << letters.len()) {
        let sub: Vec<usize> = letters
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &s)| s)
            .collect();
        out.insert(word(g, &sub));
    }
    out
}

/// All reduced words of `w`, by peeling left descents in every possible way.
pub fn reduced_words(g: &WeylGroup, w: &WeylElem) -> Vec<Vec<usize>> {
    if w.len() == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 1..=g.rank() {
        let s = g.simple_reflection(i).unwrap();
        let v = g.multiply(&s, w).unwrap();
        if v.len() < w.len() {
            for mut tail in reduced_words(g, &v) {
                tail.insert(0, i);
                out.push(tail);
            }
        }
    }
    out
}

pub fn support_oracle(g: &WeylGroup, w: &WeylElem) -> SimpleSubset {
    let mut letters = Vec::new();
    for r in reduced_words(g, w) {
        letters.extend(r);
    }
    SimpleSubset::from_indices(&letters)
}

/// W-orbit of the simple roots under `s_i(β) = β - <β, α_i∨> α_i`, keeping the
/// positive ones.
pub fn positive_roots_oracle(t: CartanType) -> HashSet<Vec<i64>> {
    let a = t.cartan_matrix();
    let n = t.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    while let Some(b) = stack.pop() {
        if !seen.insert(b.clone()) {
            continue;
        }
        for i in 0..n {
            let pair: i64 = (0..n).map(|j| b[j] * a[i][j]).sum();
            let mut r = b.clone();
            r[i] -= pair;
            stack.push(r);
        }
    }
    seen.into_iter().filter(|b| b.iter().all(|&c| c >= 0)).collect()
}

pub fn parabolic_oracle(g: &WeylGroup, subset: SimpleSubset) -> HashSet<WeylElem> {
    g.enumerate()
        .unwrap()
        .iter()
        .filter(|w| support_oracle(g, w).is_subset(subset))
        .cloned()
        .collect()
}

/// `w` has minimal length in its coset `W_I w`.
pub fn is_min_rep_oracle(g: &WeylGroup, subset: SimpleSubset, w: &WeylElem) -> bool {
    parabolic_oracle(g, subset)
        .iter()
        .all(|u| g.multiply(u, w).unwrap().len() >= w.len())
}

/// Products of the simple reflections of `subset` in every order.
pub fn coxeter_oracle(g: &WeylGroup, subset: SimpleSubset) -> HashSet<WeylElem> {
    fn perms(v: &[usize]) -> Vec<Vec<usize>> {
        if v.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for k in 0..v.len() {
            let mut rest = v.to_vec();
            let x = rest.remove(k);
            for mut p in perms(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    perms(&subset.to_vec()).iter().map(|p| word(g, p)).collect()
}

/// `w·λ` computed letter by letter from the reversed word of `w⁻¹`.
pub fn dot_oracle(g: &WeylGroup, w: &WeylElem, lambda: &Weight) -> Weight {
    let a = g.cartan_type().cartan_matrix();
    let n = g.rank();
    let mut mu: Vec<i64> = lambda.coords().iter().map(|c| c + 1).collect();
    // w = reverse(word(w⁻¹)); apply its letters right to left
    for &s in w.inverse().to_word().iter() {
        let i = s - 1;
        let c = mu[i];
        for j in 0..n {
            mu[j] -= c * a[j][i];
        }
    }
    Weight(mu.into_iter().map(|c| c - 1).collect())
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_shifted(acc: &mut Poly, p: &Poly, shift: usize, sign: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (d, c) in p.iter().enumerate() {
        acc[d + shift] += sign * c;
    }
}

/// Kazhdan-Lusztig polynomials from the right-descent recursion
/// `P_{x,y} = q^{1-c} P_{xs,v} + q^c P_{x,v} - Σ μ(z,v) q^{(ℓ(y)-ℓ(z))/2} P_{x,z}`,
/// with Bruhat order from subword enumeration.
pub struct KlOracle<'a> {
    g: &'a WeylGroup,
    ideals: HashMap<WeylElem, HashSet<WeylElem>>,
    memo: HashMap<(WeylElem, WeylElem), Poly>,
}

impl<'a> KlOracle<'a> {
    pub fn new(g: &'a WeylGroup) -> Self {
        let ideals = g
            .enumerate()
            .unwrap()
            .iter()
            .map(|y| (y.clone(), bruhat_ideal(g, y)))
            .collect();
        KlOracle {
            g,
            ideals,
            memo: HashMap::new(),
        }
    }

    pub fn leq(&self, x: &WeylElem, y: &WeylElem) -> bool {
        self.ideals[y].contains(x)
    }

    pub fn p(&mut self, x: &WeylElem, y: &WeylElem) -> Poly {
        if !self.leq(x, y) {
            return vec![];
        }
        if x == y {
            return vec![1];
        }
        let key = (x.clone(), y.clone());
        if let Some(p) = self.memo.get(&key) {
            return p.clone();
        }
        let g = self.g;
        let s_idx = (1..=g.rank())
            .find(|&i| y.has_right_descent(i))
            .unwrap();
        let s = g.simple_reflection(s_idx).unwrap();
        let v = g.multiply(y, &s).unwrap();
        let xs = g.multiply(x, &s).unwrap();
        let c = (xs.len() < x.len()) as usize;
        let mut acc = Vec::new();
        add_shifted(&mut acc, &self.p(&xs, &v), 1 - c, 1);
        add_shifted(&mut acc, &self.p(x, &v), c, 1);
        let zs: Vec<WeylElem> = self.ideals[&v].iter().cloned().collect();
        for z in zs {
            if z == v || !self.leq(x, &z) {
                continue;
            }
            if g.multiply(&z, &s).unwrap().len() > z.len() {
                continue;
            }
            let m = self.mu(&z, &v);
            if m != 0 {
                let shift = (y.len() - z.len()) / 2;
                let pxz = self.p(x, &z);
                add_shifted(&mut acc, &pxz, shift, -m);
            }
        }
        let acc = trim(acc);
        self.memo.insert(key, acc.clone());
        acc
    }

    pub fn mu(&mut self, x: &WeylElem, y: &WeylElem) -> i64 {
        if y.len() <= x.len() || (y.len() - x.len()).is_multiple_of(2) {
            return 0;
        }
        let d = (y.len() - x.len() - 1) / 2;
        self.p(x, y).get(d).copied().unwrap_or(0)
    }

    pub fn m(&mut self, x: &WeylElem, y: &WeylElem) -> i64 {
        self.p(x, y).iter().sum()
    }
}

/// Factor label with the element written as its canonical word.
pub type Label = (Vec<usize>, Vec<usize>);

/// Jordan-Hölder multiset of `V^G_B` as `Σ_K (-1)^{|K|} [I^G_{P_K}(e)]`, with
/// parabolic Verma multiplicities assembled from the oracle polynomials.
pub fn steinberg_oracle(g: &WeylGroup) -> BTreeMap<Label, i64> {
    let mut kl = KlOracle::new(g);
    let elems: Vec<WeylElem> = g.enumerate().unwrap().to_vec();
    let i_of = |y: &WeylElem| -> SimpleSubset {
        let idx: Vec<usize> = (1..=g.rank())
            .filter(|&i| {
                let s = g.simple_reflection(i).unwrap();
                g.multiply(&s, y).unwrap().len() > y.len()
            })
            .collect();
        SimpleSubset::from_indices(&idx)
    };
    let mut total: BTreeMap<Label, i64> = BTreeMap::new();
    for k in g.full_set().subsets() {
        let wk = parabolic_oracle(g, k);
        let sign_k = if k.len() % 2 == 0 { 1 } else { -1 };
        for y in &elems {
            let iy = i_of(y);
            if !k.is_subset(iy) {
                continue;
            }
            let mut c = 0i64;
            for u in &wk {
                let su = if u.len() % 2 == 0 { 1 } else { -1 };
                c += su * kl.m(u, y);
            }
            if c == 0 {
                continue;
            }
            for j in iy.subsets().filter(|j| k.is_subset(*j)) {
                *total.entry((y.to_word(), j.to_vec())).or_default() += sign_k * c;
            }
        }
    }
    total.retain(|_, v| *v != 0);
    total
}

/// Cross-checks one library value against the oracle parabolic multiplicity.
pub fn parabolic_mult_oracle(
    g: &WeylGroup,
    kl: &mut KlOracle,
    k: SimpleSubset,
    w: &WeylElem,
    y: &WeylElem,
) -> i64 {
    parabolic_oracle(g, k)
        .iter()
        .map(|u| {
            let uw = g.multiply(u, w).unwrap();
            let s = if u.len() % 2 == 0 { 1 } else { -1 };
            s * kl.m(&uw, y)
        })
        .sum()
}
