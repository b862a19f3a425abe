//! Weyl group elements, Bruhat order and parabolic combinatorics.
//!
//! An element is stored as its integer action matrix on the simple-root basis
//! (column `j` is `w(alpha_j)`), together with the matrix of its inverse and
//! its length. Equality and hashing go through the action matrix only.
//!
//! Words follow the operator convention: `[a, b]` denotes `s_a s_b`, so the
//! rightmost letter acts first.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use itertools::Itertools;

use crate::error::{Error, Result};
use crate::root_data::{CartanType, RootSystem};

/// Default bound on the number of group elements we are willing to enumerate.
pub const DEFAULT_SIZE_GUARD: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_SIZE_GUARD`].
pub const SIZE_GUARD_ENV: &str = "STEINBERG_SIZE_GUARD";

/// A subset of the simple roots, as a bitmask over 1-based indices
/// (bit `i - 1` set for index `i`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSubset(u32);

impl SimpleSubset {
    pub const EMPTY: SimpleSubset = SimpleSubset(0);

    pub fn full(rank: usize) -> Self {
        SimpleSubset(((1u64 << rank) - 1) as u32)
    }

    pub fn from_mask(mask: u32) -> Self {
        SimpleSubset(mask)
    }

    /// Panics on index 0; callers validate against the rank separately.
    pub fn from_indices(indices: &[usize]) -> Self {
        SimpleSubset(indices.iter().fold(0, |m, &i| {
            assert!((1..=32).contains(&i), "simple index {i} out of range");
            m | (1 << (i - 1))
        }))
    }

    /// Parses `"1,3"`; the empty string is the empty set.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let idx = parse_indices(s, rank)?;
        Ok(SimpleSubset::from_indices(&idx))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: SimpleSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 & other.0)
    }

    pub fn difference(self, other: SimpleSubset) -> Self {
        SimpleSubset(self.0 & !other.0)
    }

    pub fn with(self, i: usize) -> Self {
        SimpleSubset(self.0 | (1 << (i - 1)))
    }

    /// Indices in increasing order, 1-based.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |b| self.0 & (1 << b) != 0).map(|b| b + 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, ordered by bitmask.
    pub fn subsets(self) -> impl Iterator<Item = SimpleSubset> {
        let full = self.0;
        (0..=full as u64)
            .map(|m| m as u32)
            .filter(move |m| m & !full == 0)
            .map(SimpleSubset)
    }

    /// All `K` with `self ⊆ K ⊆ upper`.
    pub fn supersets_within(self, upper: SimpleSubset) -> impl Iterator<Item = SimpleSubset> {
        let base = self;
        upper.difference(self).subsets().map(move |extra| base.union(extra))
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().join(","))
    }
}

pub(crate) fn parse_indices(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad simple-root index {t:?}")))?;
            if i == 0 || i > rank {
                return Err(Error::IndexOutOfRange { index: i, rank });
            }
            Ok(i)
        })
        .collect()
}

/// An element of a finite Weyl group.
#[derive(Clone)]
pub struct WeylElem {
    roots: Arc<RootSystem>,
    action: Arc<[i64]>,
    inverse: Arc<[i64]>,
    len: usize,
}

impl PartialEq for WeylElem {
    fn eq(&self, other: &Self) -> bool {
        self.roots.cartan_type() == other.roots.cartan_type() && self.action == other.action
    }
}

impl Eq for WeylElem {}

impl Hash for WeylElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.roots.cartan_type().hash(state);
        self.action.hash(state);
    }
}

impl fmt::Debug for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.roots.cartan_type(), self)
    }
}

impl fmt::Display for WeylElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = self.to_word();
        if word.is_empty() {
            return write!(f, "e");
        }
        for i in word {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

/// Sign of a root given in simple-root coordinates.
fn is_negative(col: impl Iterator<Item = i64>) -> bool {
    for c in col {
        if c != 0 {
            return c < 0;
        }
    }
    false
}

impl WeylElem {
    fn identity_of(roots: Arc<RootSystem>) -> Self {
        let n = roots.rank();
        let mut m = vec![0i64; n * n];
        for i in 0..n {
            m[i * n + i] = 1;
        }
        let m: Arc<[i64]> = m.into();
        WeylElem {
            roots,
            action: m.clone(),
            inverse: m,
            len: 0,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.roots.cartan_type()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Row-major action matrix on simple roots; column `j` is `w(alpha_j)`.
    pub fn action(&self) -> &[i64] {
        &self.action
    }

    fn col_negative(m: &[i64], n: usize, j: usize) -> bool {
        is_negative((0..n).map(|r| m[r * n + j]))
    }

    /// Whether `s_i w < w` (1-based `i`).
    pub fn has_left_descent(&self, i: usize) -> bool {
        Self::col_negative(&self.inverse, self.rank(), i - 1)
    }

    /// Whether `w s_i < w` (1-based `i`).
    pub fn has_right_descent(&self, i: usize) -> bool {
        Self::col_negative(&self.action, self.rank(), i - 1)
    }

    pub fn left_descents(&self) -> SimpleSubset {
        let idx: Vec<usize> = (1..=self.rank()).filter(|&i| self.has_left_descent(i)).collect();
        SimpleSubset::from_indices(&idx)
    }

    pub fn right_descents(&self) -> SimpleSubset {
        let idx: Vec<usize> = (1..=self.rank()).filter(|&i| self.has_right_descent(i)).collect();
        SimpleSubset::from_indices(&idx)
    }

    /// Replaces `m` by `S_i m` where `S_i` is the reflection matrix.
    fn left_reflect(&self, m: &mut [i64], i: usize) {
        let n = self.rank();
        let a = &self.roots.cartan()[i];
        for j in 0..n {
            let p: i64 = (0..n).map(|k| a[k] * m[k * n + j]).sum();
            m[i * n + j] -= p;
        }
    }

    /// Replaces `m` by `m S_i`.
    fn right_reflect(&self, m: &mut [i64], i: usize) {
        let n = self.rank();
        let a = &self.roots.cartan()[i];
        for j in 0..n {
            if j == i || a[j] == 0 {
                continue;
            }
            for r in 0..n {
                m[r * n + j] -= a[j] * m[r * n + i];
            }
        }
        for r in 0..n {
            m[r * n + i] = -m[r * n + i];
        }
    }

    /// `s_i w` for 1-based `i`.
    pub fn left_mul_simple(&self, i: usize) -> WeylElem {
        let descent = self.has_left_descent(i);
        let mut action = self.action.to_vec();
        let mut inverse = self.inverse.to_vec();
        self.left_reflect(&mut action, i - 1);
        self.right_reflect(&mut inverse, i - 1);
        WeylElem {
            roots: self.roots.clone(),
            action: action.into(),
            inverse: inverse.into(),
            len: if descent { self.len - 1 } else { self.len + 1 },
        }
    }

    /// `w s_i` for 1-based `i`.
    pub fn right_mul_simple(&self, i: usize) -> WeylElem {
        let descent = self.has_right_descent(i);
        let mut action = self.action.to_vec();
        let mut inverse = self.inverse.to_vec();
        self.right_reflect(&mut action, i - 1);
        self.left_reflect(&mut inverse, i - 1);
        WeylElem {
            roots: self.roots.clone(),
            action: action.into(),
            inverse: inverse.into(),
            len: if descent { self.len - 1 } else { self.len + 1 },
        }
    }

    pub fn inverse(&self) -> WeylElem {
        WeylElem {
            roots: self.roots.clone(),
            action: self.inverse.clone(),
            inverse: self.action.clone(),
            len: self.len,
        }
    }

    fn same_system(&self, other: &WeylElem) -> Result<()> {
        if self.cartan_type() != other.cartan_type() {
            return Err(Error::MixedRootSystems(
                self.cartan_type().to_string(),
                other.cartan_type().to_string(),
            ));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &WeylElem) -> Result<WeylElem> {
        self.same_system(other)?;
        let n = self.rank();
        let matmul = |a: &[i64], b: &[i64]| {
            let mut c = vec![0i64; n * n];
            for r in 0..n {
                for k in 0..n {
                    let x = a[r * n + k];
                    if x == 0 {
                        continue;
                    }
                    for j in 0..n {
                        c[r * n + j] += x * b[k * n + j];
                    }
                }
            }
            c
        };
        let action = matmul(&self.action, &other.action);
        let inverse = matmul(&other.inverse, &self.inverse);
        let len = self.inversion_count_of(&action);
        Ok(WeylElem {
            roots: self.roots.clone(),
            action: action.into(),
            inverse: inverse.into(),
            len,
        })
    }

    /// Number of positive roots sent to negative roots by `m`.
    fn inversion_count_of(&self, m: &[i64]) -> usize {
        let n = self.rank();
        self.roots
            .positive_roots()
            .iter()
            .filter(|beta| {
                is_negative((0..n).map(|r| (0..n).map(|k| m[r * n + k] * beta[k]).sum::<i64>()))
            })
            .count()
    }

    /// Length recomputed from scratch as an inversion count.
    pub fn inversion_count(&self) -> usize {
        self.inversion_count_of(&self.action)
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn to_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.len);
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..=w.rank())
                .find(|&i| w.has_left_descent(i))
                .expect("non-identity element has a left descent");
            word.push(i);
            w = w.left_mul_simple(i);
        }
        word
    }

    /// Sort key `(length, canonical word)` used for every ordered output.
    pub fn sort_key(&self) -> (usize, Vec<usize>) {
        (self.len, self.to_word())
    }

    /// Letters of the canonical reduced word.
    pub fn word_letters(&self) -> SimpleSubset {
        SimpleSubset::from_indices(&self.to_word())
    }
}

/// A finite Weyl group together with its caches.
pub struct WeylGroup {
    roots: Arc<RootSystem>,
    identity: WeylElem,
    simple: Vec<WeylElem>,
    size_guard: u64,
    elements: OnceLock<Vec<WeylElem>>,
    bruhat_memo: DashMap<(WeylElem, WeylElem), bool>,
}

impl fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeylGroup")
            .field("cartan_type", &self.cartan_type())
            .field("size_guard", &self.size_guard)
            .finish()
    }
}

impl WeylGroup {
    /// Builds the group with the size guard taken from `STEINBERG_SIZE_GUARD`
    /// when set, [`DEFAULT_SIZE_GUARD`] otherwise.
    pub fn new(t: CartanType) -> Self {
        let guard = std::env::var(SIZE_GUARD_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_SIZE_GUARD);
        Self::with_size_guard(t, guard)
    }

    pub fn with_size_guard(t: CartanType, size_guard: u64) -> Self {
        let roots = Arc::new(RootSystem::new(t));
        let identity = WeylElem::identity_of(roots.clone());
        let simple = (1..=t.rank()).map(|i| identity.left_mul_simple(i)).collect();
        WeylGroup {
            roots,
            identity,
            simple,
            size_guard,
            elements: OnceLock::new(),
            bruhat_memo: DashMap::new(),
        }
    }

    /// Lifts the size guard entirely.
    pub fn allow_large(self) -> Self {
        WeylGroup {
            size_guard: u64::MAX,
            ..self
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.roots.cartan_type()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn full_set(&self) -> SimpleSubset {
        SimpleSubset::full(self.rank())
    }

    pub fn identity(&self) -> WeylElem {
        self.identity.clone()
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElem> {
        self.check_index(i)?;
        Ok(self.simple[i - 1].clone())
    }

    pub fn order(&self) -> u128 {
        self.cartan_type().weyl_group_order()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_member(&self, w: &WeylElem) -> Result<()> {
        if w.cartan_type() != self.cartan_type() {
            return Err(Error::MixedRootSystems(
                self.cartan_type().to_string(),
                w.cartan_type().to_string(),
            ));
        }
        Ok(())
    }

    pub fn check_subset(&self, s: SimpleSubset) -> Result<()> {
        if !s.is_subset(self.full_set()) {
            let bad = s.difference(self.full_set()).iter().next().unwrap_or(0);
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// Product of simple reflections; `[a, b]` is `s_a s_b`. Need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElem> {
        let mut w = self.identity();
        for &i in word {
            self.check_index(i)?;
            w = w.right_mul_simple(i);
        }
        Ok(w)
    }

    /// Parses a comma-separated word such as `"2,1,3,2"`.
    pub fn parse_word(&self, s: &str) -> Result<WeylElem> {
        self.from_word(&parse_indices(s, self.rank())?)
    }

    pub fn multiply(&self, x: &WeylElem, y: &WeylElem) -> Result<WeylElem> {
        self.check_member(x)?;
        x.multiply(y)
    }

    pub fn inverse(&self, x: &WeylElem) -> WeylElem {
        x.inverse()
    }

    pub fn to_word(&self, x: &WeylElem) -> Vec<usize> {
        x.to_word()
    }

    pub fn left_descents(&self, w: &WeylElem) -> SimpleSubset {
        w.left_descents()
    }

    /// Bruhat order via the lifting property, memoized per query.
    pub fn bruhat_leq(&self, x: &WeylElem, y: &WeylElem) -> Result<bool> {
        self.check_member(x)?;
        self.check_member(y)?;
        if x.len() > y.len() {
            return Ok(false);
        }
        if x.len() == y.len() {
            return Ok(x == y);
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.bruhat_memo.get(&key) {
            return Ok(*v);
        }
        let result = Self::bruhat_lift(x.clone(), y.clone());
        self.bruhat_memo.entry(key).or_insert(result);
        Ok(result)
    }

    // With s a left descent of y: x <= y iff sx <= sy when s is also a left
    // descent of x, and iff x <= sy otherwise.
    fn bruhat_lift(mut x: WeylElem, mut y: WeylElem) -> bool {
        loop {
            if x.is_identity() {
                return true;
            }
            if x.len() > y.len() {
                return false;
            }
            if x.len() == y.len() {
                return x == y;
            }
            let s = (1..=y.rank())
                .find(|&i| y.has_left_descent(i))
                .expect("y longer than x has a left descent");
            if x.has_left_descent(s) {
                x = x.left_mul_simple(s);
            }
            y = y.left_mul_simple(s);
        }
    }

    /// `supp(w) = { i : s_i <= w }`.
    pub fn support(&self, w: &WeylElem) -> SimpleSubset {
        let idx: Vec<usize> = (1..=self.rank())
            .filter(|&i| self.bruhat_leq(&self.simple[i - 1], w).unwrap_or(false))
            .collect();
        SimpleSubset::from_indices(&idx)
    }

    /// `I(w)`: the complement of the left descent set.
    pub fn i_max(&self, w: &WeylElem) -> SimpleSubset {
        self.full_set().difference(w.left_descents())
    }

    /// Whether `w` is the shortest element of its coset `W_I w`.
    pub fn is_min_coset_rep(&self, subset: SimpleSubset, w: &WeylElem) -> bool {
        w.left_descents().intersection(subset).is_empty()
    }

    /// All group elements sorted by length and canonical word.
    pub fn enumerate(&self) -> Result<&[WeylElem]> {
        if let Some(v) = self.elements.get() {
            return Ok(v);
        }
        let order = self.order();
        if order > self.size_guard as u128 {
            return Err(Error::SizeGuardExceeded {
                cartan: self.cartan_type().to_string(),
                order,
                guard: self.size_guard,
            });
        }
        let mut all = self.generate(self.full_set());
        if all.len() as u128 != order {
            return Err(Error::InternalInconsistency(format!(
                "enumerated {} elements of {}, expected {order}",
                all.len(),
                self.cartan_type()
            )));
        }
        all.sort_by_cached_key(|w| w.sort_key());
        Ok(self.elements.get_or_init(|| all))
    }

    /// Breadth-first generation of the parabolic subgroup `W_I`.
    fn generate(&self, subset: SimpleSubset) -> Vec<WeylElem> {
        let mut seen: HashSet<WeylElem> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([self.identity()]);
        seen.insert(self.identity());
        while let Some(w) = queue.pop_front() {
            for i in subset.iter() {
                if w.has_left_descent(i) {
                    continue;
                }
                let v = w.left_mul_simple(i);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            out.push(w);
        }
        out
    }

    /// Elements of the parabolic subgroup `W_I`, sorted.
    pub fn parabolic_subgroup(&self, subset: SimpleSubset) -> Result<Vec<WeylElem>> {
        self.check_subset(subset)?;
        let mut v = self.generate(subset);
        v.sort_by_cached_key(|w| w.sort_key());
        Ok(v)
    }

    /// Minimal-length representatives of `W_I \ W`, sorted.
    pub fn min_coset_reps(&self, subset: SimpleSubset) -> Result<Vec<WeylElem>> {
        self.check_subset(subset)?;
        Ok(self
            .enumerate()?
            .iter()
            .filter(|w| self.is_min_coset_rep(subset, w))
            .cloned()
            .collect())
    }

    /// The longest element `w_I` of `W_I`.
    pub fn longest_element(&self, subset: SimpleSubset) -> Result<WeylElem> {
        self.check_subset(subset)?;
        let mut w = self.identity();
        while let Some(i) = subset.iter().find(|&i| !w.has_left_descent(i)) {
            w = w.left_mul_simple(i);
        }
        Ok(w)
    }

    /// Products of the simple reflections in `I`, each used once, over all
    /// orderings; deduplicated and sorted.
    pub fn coxeter_elements(&self, subset: SimpleSubset) -> Result<Vec<WeylElem>> {
        self.check_subset(subset)?;
        let letters = subset.to_vec();
        let k = letters.len();
        let mut set: HashSet<WeylElem> = HashSet::new();
        for perm in letters.into_iter().permutations(k) {
            set.insert(self.from_word(&perm)?);
        }
        let mut out: Vec<WeylElem> = set.into_iter().collect();
        out.sort_by_cached_key(|w| w.sort_key());
        Ok(out)
    }

    /// `|W^I_p| = #{ w : I(w) = I }`, computed by enumeration and by the
    /// alternating sum over `J ⊆ Δ \ I` of `(-1)^|J| |W| / |W_{I ∪ J}|`.
    pub fn parabolic_class_count(&self, subset: SimpleSubset) -> Result<u64> {
        let by_enumeration = self.parabolic_class_count_enumerated(subset)?;
        let by_formula = self.parabolic_class_count_formula(subset)?;
        if by_enumeration as i128 != by_formula {
            return Err(Error::InternalInconsistency(format!(
                "|W^{subset}_p|: enumeration gives {by_enumeration}, formula gives {by_formula}"
            )));
        }
        Ok(by_enumeration)
    }

    pub fn parabolic_class_count_enumerated(&self, subset: SimpleSubset) -> Result<u64> {
        self.check_subset(subset)?;
        Ok(self
            .enumerate()?
            .iter()
            .filter(|w| self.i_max(w) == subset)
            .count() as u64)
    }

    pub fn parabolic_class_count_formula(&self, subset: SimpleSubset) -> Result<i128> {
        self.check_subset(subset)?;
        let order = self.order() as i128;
        let mut total = 0i128;
        for extra in self.full_set().difference(subset).subsets() {
            let k = subset.union(extra);
            let sub_order = self.generate(k).len() as i128;
            let sign = if extra.len() % 2 == 0 { 1 } else { -1 };
            total += sign * order / sub_order;
        }
        Ok(total)
    }

    /// All subsets of the simple roots, by bitmask.
    pub fn all_subsets(&self) -> Vec<SimpleSubset> {
        self.full_set().subsets().collect()
    }
}

impl FromStr for SimpleSubset {
    type Err = Error;

    /// Parses without a rank bound (indices up to 32).
    fn from_str(s: &str) -> Result<Self> {
        SimpleSubset::parse(s, 32)
    }
}
