//! Kazhdan-Lusztig polynomials and the Verma multiplicities built on them.
//!
//! `P_{x,y}` is computed by the left-descent recursion: with `s` the smallest
//! left descent of `y` and `v = sy`,
//!
//! * if `sx > x` then `P_{x,y} = P_{sx,y}`;
//! * otherwise `P_{x,y} = P_{sx,v} + q P_{x,v} - Σ μ(z,v) q^{(ℓ(y)-ℓ(z))/2} P_{x,z}`,
//!   the sum running over `x ≤ z < v` with `sz < z`.
//!
//! Results are memoized in a [`KlStore`] under the key `(x, y)` or
//! `(x⁻¹, y⁻¹)`, whichever is smaller, since the two polynomials agree.
//!
//! Verma multiplicities use `[M(x·λ) : L(y·λ)] = P_{x,y}(1)` for dominant
//! integral `λ`. This does not depend on `λ`, which therefore never enters
//! this module.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::root_data::CartanType;
use crate::weyl::{SimpleSubset, WeylElem, WeylGroup};

/// A polynomial in `q` with nonnegative integer coefficients, ascending
/// degree, no trailing zeros. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KlPoly {
    coeffs: Vec<u64>,
}

impl KlPoly {
    pub fn zero() -> Self {
        KlPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        KlPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        KlPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> u64 {
        self.coeffs.get(d).copied().unwrap_or(0)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> u128 {
        self.coeffs.iter().map(|&c| c as u128).sum()
    }

    /// Checks the shape every `P_{x,y}` with `x ≤ y` must have: constant term
    /// 1, and degree at most `(gap - 1) / 2` for a length gap `gap > 0`.
    pub fn check_shape(&self, length_gap: usize) -> std::result::Result<(), String> {
        if self.coeff(0) != 1 {
            return Err(format!("constant term of {self} is not 1"));
        }
        let deg = self.degree().unwrap_or(0);
        if length_gap == 0 {
            if deg != 0 {
                return Err(format!("P_(w,w) = {self} is not 1"));
            }
        } else if 2 * deg > length_gap - 1 {
            return Err(format!("degree of {self} exceeds ({length_gap} - 1)/2"));
        }
        Ok(())
    }
}

impl fmt::Display for KlPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (d, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, c) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// Insert-once concurrent memo table of Kazhdan-Lusztig polynomials for one
/// Cartan type. Only pairs `x ≤ y` are stored.
#[derive(Debug)]
pub struct KlStore {
    cartan: CartanType,
    map: DashMap<(WeylElem, WeylElem), KlPoly>,
    hits: AtomicU64,
    fold_inverses: bool,
}

/// Counters reported by [`KlStore::stats`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KlStats {
    pub entries: usize,
    pub hits: u64,
}

impl KlStore {
    pub fn new(cartan: CartanType) -> Self {
        KlStore {
            cartan,
            map: DashMap::new(),
            hits: AtomicU64::new(0),
            fold_inverses: true,
        }
    }

    /// A store that keys `(x, y)` and `(x⁻¹, y⁻¹)` separately, so the two
    /// polynomials are computed independently.
    pub fn without_inverse_folding(cartan: CartanType) -> Self {
        KlStore {
            fold_inverses: false,
            ..Self::new(cartan)
        }
    }

    fn key(&self, x: &WeylElem, y: &WeylElem) -> (WeylElem, WeylElem) {
        if self.fold_inverses {
            Self::canonical_key(x, y)
        } else {
            (x.clone(), y.clone())
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn stats(&self) -> KlStats {
        KlStats {
            entries: self.map.len(),
            hits: self.hits.load(Ordering::Relaxed),
        }
    }

    /// Canonical key: `(x, y)` or `(x⁻¹, y⁻¹)`, whichever has the smaller
    /// pair of action matrices.
    pub fn canonical_key(x: &WeylElem, y: &WeylElem) -> (WeylElem, WeylElem) {
        let (xi, yi) = (x.inverse(), y.inverse());
        if (xi.action(), yi.action()) < (x.action(), y.action()) {
            (xi, yi)
        } else {
            (x.clone(), y.clone())
        }
    }

    pub fn get(&self, x: &WeylElem, y: &WeylElem) -> Option<KlPoly> {
        let key = self.key(x, y);
        let hit = self.map.get(&key).map(|p| p.clone());
        if hit.is_some() {
            self.hits.fetch_add(1, Ordering::Relaxed);
        }
        hit
    }

    /// Publishes `P_{x,y}`. An existing entry is kept; if it disagrees with
    /// `p` the store has been corrupted and an error is returned.
    pub fn insert(&self, x: &WeylElem, y: &WeylElem, p: KlPoly) -> Result<()> {
        let key = self.key(x, y);
        let existing = self.map.entry(key).or_insert_with(|| p.clone());
        if *existing != p {
            return Err(Error::InternalInconsistency(format!(
                "conflicting entries for P_({x},{y}): {} vs {p}",
                *existing
            )));
        }
        Ok(())
    }

    /// Snapshot of all entries under their stored keys.
    pub fn entries(&self) -> Vec<(WeylElem, WeylElem, KlPoly)> {
        self.map
            .iter()
            .map(|e| (e.key().0.clone(), e.key().1.clone(), e.value().clone()))
            .collect()
    }
}

fn check_store(group: &WeylGroup, store: &KlStore) -> Result<()> {
    if store.cartan_type() != group.cartan_type() {
        return Err(Error::MixedRootSystems(
            group.cartan_type().to_string(),
            store.cartan_type().to_string(),
        ));
    }
    Ok(())
}

/// The Kazhdan-Lusztig polynomial `P_{x,y}`; zero unless `x ≤ y`.
pub fn kl_polynomial(group: &WeylGroup, x: &WeylElem, y: &WeylElem, store: &KlStore) -> Result<KlPoly> {
    check_store(group, store)?;
    group.check_member(x)?;
    group.check_member(y)?;
    compute(group, x, y, store)
}

fn compute(group: &WeylGroup, x: &WeylElem, y: &WeylElem, store: &KlStore) -> Result<KlPoly> {
    if !group.bruhat_leq(x, y)? {
        return Ok(KlPoly::zero());
    }
    if x == y {
        return Ok(KlPoly::one());
    }
    if let Some(p) = store.get(x, y) {
        return Ok(p);
    }
    let s = (1..=group.rank())
        .find(|&i| y.has_left_descent(i))
        .expect("y > x is not the identity");
    let p = if !x.has_left_descent(s) {
        compute(group, &x.left_mul_simple(s), y, store)?
    } else {
        let overflow = || Error::CoefficientOverflow {
            x: x.to_string(),
            y: y.to_string(),
        };
        let v = y.left_mul_simple(s);
        let sx = x.left_mul_simple(s);
        let mut acc: Vec<i128> = vec![0; y.len() / 2 + 2];
        let mut add = |p: &KlPoly, shift: usize, factor: i128| -> Result<()> {
            for (d, &c) in p.coeffs().iter().enumerate() {
                if d + shift >= acc.len() {
                    acc.resize(d + shift + 1, 0);
                }
                let term = (c as i128).checked_mul(factor).ok_or_else(overflow)?;
                acc[d + shift] = acc[d + shift].checked_add(term).ok_or_else(overflow)?;
            }
            Ok(())
        };
        add(&compute(group, &sx, &v, store)?, 0, 1)?;
        add(&compute(group, x, &v, store)?, 1, 1)?;
        for z in group.enumerate()? {
            if z.len() < x.len() || z.len() >= v.len() || (v.len() - z.len()).is_multiple_of(2) {
                continue;
            }
            if !z.has_left_descent(s) || !group.bruhat_leq(x, z)? {
                continue;
            }
            let m = mu_inner(group, z, &v, store)?;
            if m == 0 {
                continue;
            }
            let p_xz = compute(group, x, z, store)?;
            add(&p_xz, (y.len() - z.len()) / 2, -(m as i128))?;
        }
        let coeffs = acc
            .into_iter()
            .map(|c| {
                u64::try_from(c).map_err(|_| {
                    if c < 0 {
                        Error::InternalInconsistency(format!("negative coefficient in P_({x},{y})"))
                    } else {
                        overflow()
                    }
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        KlPoly::from_coeffs(coeffs)
    };
    p.check_shape(y.len() - x.len())
        .map_err(|e| Error::InternalInconsistency(format!("P_({x},{y}): {e}")))?;
    store.insert(x, y, p.clone())?;
    Ok(p)
}

fn mu_inner(group: &WeylGroup, x: &WeylElem, y: &WeylElem, store: &KlStore) -> Result<u64> {
    if y.len() <= x.len() || (y.len() - x.len()).is_multiple_of(2) {
        return Ok(0);
    }
    let p = compute(group, x, y, store)?;
    Ok(p.coeff((y.len() - x.len() - 1) / 2))
}

/// `μ(x,y)`: the coefficient of `q^{(ℓ(y)-ℓ(x)-1)/2}` in `P_{x,y}`, zero when
/// the length difference is even or `x ≰ y`.
pub fn mu(group: &WeylGroup, x: &WeylElem, y: &WeylElem, store: &KlStore) -> Result<u64> {
    check_store(group, store)?;
    group.check_member(x)?;
    group.check_member(y)?;
    mu_inner(group, x, y, store)
}

/// `m(x,y) = [M(x·λ) : L(y·λ)] = P_{x,y}(1)`, zero unless `x ≤ y`.
pub fn verma_multiplicity(group: &WeylGroup, x: &WeylElem, y: &WeylElem, store: &KlStore) -> Result<u64> {
    let p = kl_polynomial(group, x, y, store)?;
    u64::try_from(p.eval_one()).map_err(|_| Error::CoefficientOverflow {
        x: x.to_string(),
        y: y.to_string(),
    })
}

/// `[M_K(w·λ) : L(y·λ)] = Σ_{u ∈ W_K} (-1)^{ℓ(u)} m(uw, y)` for `w` a minimal
/// representative of `W_K w`.
pub fn parabolic_verma_multiplicity(
    group: &WeylGroup,
    k: SimpleSubset,
    w: &WeylElem,
    y: &WeylElem,
    store: &KlStore,
) -> Result<u64> {
    group.check_subset(k)?;
    group.check_member(w)?;
    if !group.is_min_coset_rep(k, w) {
        return Err(Error::NotMinimalRepresentative {
            w: w.to_string(),
            subset: k.to_string(),
        });
    }
    let mut total: i128 = 0;
    for u in group.parabolic_subgroup(k)? {
        let uw = u.multiply(w)?;
        let m = verma_multiplicity(group, &uw, y, store)? as i128;
        if u.len() % 2 == 0 {
            total += m;
        } else {
            total -= m;
        }
    }
    if total < 0 {
        return Err(Error::InternalInconsistency(format!(
            "[M_{k}({w}) : L({y})] = {total} is negative"
        )));
    }
    if total > 0 && !group.is_min_coset_rep(k, y) {
        return Err(Error::InternalInconsistency(format!(
            "[M_{k}({w}) : L({y})] = {total} but {y} is not a minimal representative for {k}"
        )));
    }
    Ok(total as u64)
}

/// Fills the store with `P_{x,y}` for every Bruhat pair of the group.
pub fn fill_table(group: &WeylGroup, store: &KlStore) -> Result<()> {
    check_store(group, store)?;
    let elems = group.enumerate()?;
    for y in elems {
        for x in elems {
            if x.len() < y.len() {
                kl_polynomial(group, x, y, store)?;
            }
        }
    }
    Ok(())
}
