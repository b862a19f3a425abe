//! Cartan types, root systems and integral weights.
//!
//! Roots are kept in simple-root coordinates and weights in fundamental-weight
//! coordinates, so that pairings and reflections are integer matrix-vector
//! products throughout.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{SimpleSubset, WeylElem};

/// Series letter of an irreducible finite root system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }
}

/// A validated Cartan type such as `A3` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    series: Series,
    rank: usize,
}

impl CartanType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => {
                if rank == 1 {
                    return Err(Error::InvalidType(format!(
                        "{}1 is not accepted, use A1 instead",
                        series.letter()
                    )));
                }
                rank >= 2
            }
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(Error::InvalidType(format!(
                "{}{} is outside the supported rank range",
                series.letter(),
                rank
            )));
        }
        Ok(CartanType { series, rank })
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Order of the Weyl group, from the classical closed formulas.
    pub fn weyl_group_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1_152,
            Series::G => 12,
        }
    }

    /// Cartan matrix `a[i][j] = <alpha_j, alpha_i^vee>` in Bourbaki numbering.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.series {
            Series::A | Series::B | Series::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1);
                }
                link(n - 3, n - 1);
            }
            Series::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Series::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Series::G => link(0, 1),
        }
        match self.series {
            // alpha_n short
            Series::B => a[n - 1][n - 2] = -2,
            // alpha_n long
            Series::C => a[n - 2][n - 1] = -2,
            // alpha_3 short
            Series::F => a[2][1] = -2,
            // alpha_1 short
            Series::G => a[0][1] = -3,
            _ => {}
        }
        a
    }

    /// Number of positive roots, by the classical formulas.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let series = chars
            .next()
            .and_then(Series::from_letter)
            .ok_or_else(|| Error::InvalidType(format!("unknown series in {s:?}")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidType(format!("bad rank in {s:?}")))?;
        CartanType::new(series, rank)
    }
}

/// An integral weight in fundamental-weight coordinates:
/// `coords[i] = <lambda, alpha_{i+1}^vee>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Cartan matrix, positive roots and rho for one Cartan type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(t: CartanType) -> Self {
        let cartan = t.cartan_matrix();
        let positive_roots = close_positive_roots(&cartan);
        let rho = Weight(vec![1; t.rank()]);
        RootSystem {
            cartan_type: t,
            cartan,
            positive_roots,
            rho,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Positive roots in simple-root coordinates, sorted by height and then
    /// lexicographically. The first `rank` entries are the simple roots.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Simple root `alpha_j` (1-based) as a weight.
    pub fn simple_root_weight(&self, j: usize) -> Result<Weight> {
        self.check_index(j)?;
        Ok(Weight(
            (0..self.rank()).map(|i| self.cartan[i][j - 1]).collect(),
        ))
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

    fn check_weight(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::Parse(format!(
                "weight {lambda} has {} coordinates, {} expects {}",
                lambda.rank(),
                self.cartan_type,
                self.rank()
            )));
        }
        Ok(())
    }

    /// `<lambda, alpha_i^vee>` for 1-based `i`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_index(i)?;
        self.check_weight(lambda)?;
        Ok(lambda.0[i - 1])
    }

    /// Dominance with respect to the simple roots in `subset`; the full set
    /// of simple roots gives ordinary dominance.
    pub fn is_dominant(&self, lambda: &Weight, subset: SimpleSubset) -> bool {
        subset
            .iter()
            .all(|i| lambda.0.get(i - 1).is_some_and(|&c| c >= 0))
    }

    pub fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.check_weight(lambda)?;
        if !self.is_dominant(lambda, SimpleSubset::full(self.rank())) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(())
    }

    /// Simple reflection `s_i` (0-based) acting on a weight.
    fn reflect_weight(&self, i: usize, mu: &mut Weight) {
        let c = mu.0[i];
        if c == 0 {
            return;
        }
        for (k, m) in mu.0.iter_mut().enumerate() {
            *m -= c * self.cartan[k][i];
        }
    }

    /// Linear action of `w` on a weight.
    pub fn act(&self, w: &WeylElem, mu: &Weight) -> Weight {
        let mut out = mu.clone();
        for &i in w.to_word().iter().rev() {
            self.reflect_weight(i - 1, &mut out);
        }
        out
    }

    /// The dot action `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: &WeylElem, lambda: &Weight) -> Weight {
        self.act(w, &lambda.add(&self.rho)).sub(&self.rho)
    }
}

/// Closes the simple roots under simple reflections, keeping positive ones.
fn close_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                let p: i64 = cartan[i].iter().zip(beta).map(|(a, b)| a * b).sum();
                if p >= 0 {
                    continue;
                }
                let mut gamma = beta.clone();
                gamma[i] -= p;
                if seen.insert(gamma.clone()) {
                    next.push(gamma);
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    roots
}
