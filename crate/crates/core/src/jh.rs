//! Jordan-Hölder multisets of induced and (generalized, twisted) Steinberg
//! representations.
//!
//! A representation is never built. Its Jordan-Hölder series is the multiset
//! of labels `(w, J)` where `w` fixes the simple module `L(w·λ)` and the
//! parabolic `P_I` with `I = I(w)`, and `J ⊆ I` fixes the smooth part
//! `v^{P_I}_{P_J}`. Two labels give isomorphic irreducibles only if they are
//! equal, so multiplicities can be merged by key.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::kl::{parabolic_verma_multiplicity, verma_multiplicity, KlStore};
use crate::root_data::Weight;
use crate::weyl::{SimpleSubset, WeylElem, WeylGroup};

/// One irreducible constituent with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JhFactor {
    pub w: WeylElem,
    /// `I(w)`, the parabolic maximal for `L(w·λ)`.
    pub i: SimpleSubset,
    /// Smooth part `v^{P_I}_{P_J}`; `J = I` is trivial, `J = ∅` Steinberg.
    pub j: SimpleSubset,
    /// `w·λ`, carried as a label only.
    pub highest_weight: Weight,
    pub mult: u64,
}

impl JhFactor {
    /// Symbolic smooth part, e.g. `v^{P_{1,3}}_{P_{1}}`; `1` when `J = I` and
    /// an `St` tag when `J = ∅`.
    pub fn smooth_part(&self) -> String {
        if self.j == self.i {
            return "1".to_string();
        }
        let list = |s: SimpleSubset| s.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        let base = format!("v^{{P_{{{}}}}}_{{P_{{{}}}}}", list(self.i), list(self.j));
        if self.j.is_empty() {
            format!("{base}(St)")
        } else {
            base
        }
    }
}

/// A Jordan-Hölder series as a sorted multiset of distinct `(w, J)` labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FactorMultiset {
    factors: Vec<JhFactor>,
}

impl FactorMultiset {
    /// Sorts by `(ℓ(w), canonical word of w, J as bitmask)`. Duplicate keys
    /// are an error.
    pub fn new(mut factors: Vec<JhFactor>) -> Result<Self> {
        factors.sort_by_cached_key(|f| (f.w.sort_key(), f.j));
        for pair in factors.windows(2) {
            if pair[0].w == pair[1].w && pair[0].j == pair[1].j {
                return Err(Error::InternalInconsistency(format!(
                    "duplicate factor ({}, {})",
                    pair[0].w, pair[0].j
                )));
            }
        }
        if let Some(f) = factors.iter().find(|f| f.mult == 0) {
            return Err(Error::InternalInconsistency(format!(
                "factor ({}, {}) has multiplicity 0",
                f.w, f.j
            )));
        }
        Ok(FactorMultiset { factors })
    }

    pub fn factors(&self) -> &[JhFactor] {
        &self.factors
    }

    pub fn iter(&self) -> std::slice::Iter<'_, JhFactor> {
        self.factors.iter()
    }

    /// Total length (sum of multiplicities).
    pub fn length(&self) -> u64 {
        self.factors.iter().map(|f| f.mult).sum()
    }

    /// Number of pairwise non-isomorphic constituents.
    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn multiplicity(&self, w: &WeylElem, j: SimpleSubset) -> u64 {
        self.factors
            .iter()
            .find(|f| &f.w == w && f.j == j)
            .map_or(0, |f| f.mult)
    }

    /// `(canonical word, J mask, mult)` triples with the weight label dropped,
    /// for comparing series computed at different `λ`.
    pub fn erase_labels(&self) -> Vec<(Vec<usize>, u32, u64)> {
        self.factors
            .iter()
            .map(|f| (f.w.to_word(), f.j.mask(), f.mult))
            .collect()
    }
}

impl fmt::Display for FactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{}):{}", x.w, x.j, x.mult)?;
        }
        write!(f, "}}")
    }
}

/// Integer combination of factor labels; intermediate coefficients may be
/// negative.
#[derive(Clone, Debug, Default)]
pub struct SignedMultiset {
    terms: HashMap<(WeylElem, SimpleSubset), (SimpleSubset, Weight, i64)>,
}

impl SignedMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_factor(&mut self, f: &JhFactor, coeff: i64) -> Result<()> {
        let entry = self
            .terms
            .entry((f.w.clone(), f.j))
            .or_insert_with(|| (f.i, f.highest_weight.clone(), 0));
        if entry.0 != f.i || entry.1 != f.highest_weight {
            return Err(Error::InternalInconsistency(format!(
                "factor ({}, {}) produced with conflicting labels",
                f.w, f.j
            )));
        }
        entry.2 += coeff * f.mult as i64;
        Ok(())
    }

    pub fn add(&mut self, m: &FactorMultiset, sign: i64) -> Result<()> {
        m.iter().try_for_each(|f| self.add_factor(f, sign))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|t| t.2 == 0)
    }

    /// Entries with negative coefficient, as readable strings.
    pub fn negative_terms(&self) -> Vec<String> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .filter(|(_, t)| t.2 < 0)
            .map(|((w, j), t)| format!("({w},{j}):{}", t.2))
            .collect();
        v.sort();
        v
    }

    /// Converts to a multiset, failing if any coefficient is negative.
    pub fn into_multiset(self) -> Result<FactorMultiset> {
        let neg = self.negative_terms();
        if !neg.is_empty() {
            return Err(Error::InternalInconsistency(format!(
                "negative multiplicities: {}",
                neg.join(", ")
            )));
        }
        FactorMultiset::new(
            self.terms
                .into_iter()
                .filter(|(_, t)| t.2 > 0)
                .map(|((w, j), (i, hw, c))| JhFactor {
                    w,
                    i,
                    j,
                    highest_weight: hw,
                    mult: c as u64,
                })
                .collect(),
        )
    }
}

fn factor(group: &WeylGroup, w: &WeylElem, j: SimpleSubset, lambda: &Weight, mult: u64) -> JhFactor {
    JhFactor {
        w: w.clone(),
        i: group.i_max(w),
        j,
        highest_weight: group.root_system().dot_action(w, lambda),
        mult,
    }
}

/// `Σ_{w' ∈ W_J, supp(w') = J} (-1)^{ℓ(w')+|J|} m(w', w)`: the multiplicity of
/// the factor `(w, J)` in `V^G_B(λ)`.
pub fn steinberg_multiplicity(group: &WeylGroup, w: &WeylElem, j: SimpleSubset, store: &KlStore) -> Result<u64> {
    group.check_member(w)?;
    group.check_subset(j)?;
    let i = group.i_max(w);
    if !j.is_subset(i) {
        return Err(Error::InvalidJ {
            w: w.to_string(),
            i: i.to_string(),
            j: j.to_string(),
        });
    }
    let mut total: i128 = 0;
    for u in group.parabolic_subgroup(j)? {
        if group.support(&u) != j {
            continue;
        }
        let m = verma_multiplicity(group, &u, w, store)? as i128;
        if (u.len() + j.len()).is_multiple_of(2) {
            total += m;
        } else {
            total -= m;
        }
    }
    u64::try_from(total).map_err(|_| {
        Error::InternalInconsistency(format!("multiplicity of ({w}, {j}) is {total}"))
    })
}

/// Jordan-Hölder series of the locally analytic Steinberg representation
/// `V^G_B(λ)`, from the closed multiplicity formula.
pub fn jh_steinberg(group: &WeylGroup, lambda: &Weight, store: &KlStore) -> Result<FactorMultiset> {
    group.root_system().check_dominant(lambda)?;
    let mut out = Vec::new();
    for w in group.enumerate()? {
        for j in group.i_max(w).subsets() {
            let m = steinberg_multiplicity(group, w, j, store)?;
            if m > 0 {
                out.push(factor(group, w, j, lambda, m));
            }
        }
    }
    FactorMultiset::new(out)
}

fn check_twist(group: &WeylGroup, subset: SimpleSubset, w: &WeylElem) -> Result<()> {
    group.check_subset(subset)?;
    group.check_member(w)?;
    if !group.is_min_coset_rep(subset, w) {
        return Err(Error::NotMinimalRepresentative {
            w: w.to_string(),
            subset: subset.to_string(),
        });
    }
    Ok(())
}

/// Jordan-Hölder series of `I^G_{P_K}(w)`: each `y` with
/// `c = [M_K(w·λ) : L(y·λ)] > 0` contributes `(y, J)` with multiplicity `c`
/// for every `K ⊆ J ⊆ I(y)`.
pub fn jh_induced(
    group: &WeylGroup,
    k: SimpleSubset,
    w: &WeylElem,
    lambda: &Weight,
    store: &KlStore,
) -> Result<FactorMultiset> {
    group.root_system().check_dominant(lambda)?;
    check_twist(group, k, w)?;
    let mut out = Vec::new();
    for y in group.enumerate()? {
        if !group.bruhat_leq(w, y)? {
            continue;
        }
        let c = parabolic_verma_multiplicity(group, k, w, y, store)?;
        if c == 0 {
            continue;
        }
        for j in k.supersets_within(group.i_max(y)) {
            out.push(factor(group, y, j, lambda, c));
        }
    }
    FactorMultiset::new(out)
}

/// Jordan-Hölder series of `V^G_{P_I}(w)` as the Euler characteristic of its
/// resolution by the `I^G_{P_K}(w)`, `I ⊆ K ⊆ I(w)`.
pub fn jh_generalized_steinberg(
    group: &WeylGroup,
    i: SimpleSubset,
    w: &WeylElem,
    lambda: &Weight,
    store: &KlStore,
) -> Result<FactorMultiset> {
    group.root_system().check_dominant(lambda)?;
    check_twist(group, i, w)?;
    let mut sum = SignedMultiset::new();
    for k in i.supersets_within(group.i_max(w)) {
        let sign = if (k.len() - i.len()).is_multiple_of(2) { 1 } else { -1 };
        sum.add(&jh_induced(group, k, w, lambda, store)?, sign)?;
    }
    sum.into_multiset()
}

/// Whether some Coxeter element of `W_I` lies below `w` in Bruhat order.
pub fn coxeter_criterion(group: &WeylGroup, i: SimpleSubset, w: &WeylElem) -> Result<bool> {
    for c in group.coxeter_elements(i)? {
        if group.bruhat_leq(&c, w)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Outcome of [`verify_tits_euler`].
#[derive(Clone, Debug)]
pub struct EulerReport {
    pub subset: SimpleSubset,
    /// `(K, sign, JH series of I^G_{P_K}(λ))` for every `I ⊆ K ⊆ Δ`.
    pub contributions: Vec<(SimpleSubset, i64, FactorMultiset)>,
    pub result: Option<FactorMultiset>,
    pub violations: Vec<String>,
}

impl EulerReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Recomputes `V^G_{P_I}(λ)` from the resolution by induced representations,
/// checks nonnegativity and, for `I = ∅`, agreement with [`jh_steinberg`].
pub fn verify_tits_euler(group: &WeylGroup, i: SimpleSubset, lambda: &Weight, store: &KlStore) -> Result<EulerReport> {
    group.root_system().check_dominant(lambda)?;
    group.check_subset(i)?;
    let e = group.identity();
    let mut report = EulerReport {
        subset: i,
        contributions: Vec::new(),
        result: None,
        violations: Vec::new(),
    };
    let mut sum = SignedMultiset::new();
    for k in i.supersets_within(group.full_set()) {
        let sign = if (k.len() - i.len()).is_multiple_of(2) { 1 } else { -1 };
        let m = jh_induced(group, k, &e, lambda, store)?;
        sum.add(&m, sign)?;
        report.contributions.push((k, sign, m));
    }
    let neg = sum.negative_terms();
    if !neg.is_empty() {
        report
            .violations
            .push(format!("negative multiplicities for I={i}: {}", neg.join(", ")));
        return Ok(report);
    }
    let result = sum.into_multiset()?;
    if i.is_empty() {
        let closed = jh_steinberg(group, lambda, store)?;
        if closed != result {
            report.violations.push(format!(
                "Euler characteristic {result} differs from closed formula {closed}"
            ));
        }
    }
    report.result = Some(result);
    Ok(report)
}

/// Outcome of [`verify_smooth_complex`].
#[derive(Clone, Debug)]
pub struct SmoothReport {
    pub subset: SimpleSubset,
    /// `(w, sign, JH series of V^G_{P_I}(w))` for every `w ∈ ^IW`.
    pub terms: Vec<(WeylElem, i64, FactorMultiset)>,
    pub violations: Vec<String>,
}

impl SmoothReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks in the Grothendieck group that the alternating sum of the
/// `V^G_{P_I}(w)`, `w ∈ ^IW`, is the single locally algebraic factor `(e, I)`.
pub fn verify_smooth_complex(
    group: &WeylGroup,
    i: SimpleSubset,
    lambda: &Weight,
    store: &KlStore,
) -> Result<SmoothReport> {
    group.root_system().check_dominant(lambda)?;
    group.check_subset(i)?;
    let mut report = SmoothReport {
        subset: i,
        terms: Vec::new(),
        violations: Vec::new(),
    };
    let mut sum = SignedMultiset::new();
    for w in group.min_coset_reps(i)? {
        let sign = if w.len() % 2 == 0 { 1 } else { -1 };
        let m = jh_generalized_steinberg(group, i, &w, lambda, store)?;
        sum.add(&m, sign)?;
        report.terms.push((w, sign, m));
    }
    let e = group.identity();
    sum.add_factor(&factor(group, &e, i, lambda, 1), -1)?;
    if !sum.is_zero() {
        let mut rest: Vec<String> = sum
            .terms
            .iter()
            .filter(|(_, t)| t.2 != 0)
            .map(|((w, j), t)| format!("({w},{j}):{}", t.2))
            .collect();
        rest.sort();
        report.violations.push(format!(
            "alternating sum minus (e,{i}) leaves {}",
            rest.join(", ")
        ));
    }
    Ok(report)
}
