//! Exact Jordan-Hölder multiplicities of locally analytic Steinberg
//! representations of split reductive p-adic groups.
//!
//! Everything reduces to Weyl group combinatorics: Bruhat order, parabolic
//! coset representatives and Kazhdan-Lusztig polynomials. Representations are
//! never materialized; a Jordan-Hölder series is a [`jh::FactorMultiset`] of
//! labels `(w, J)`.
//!
//! ```
//! use steinberg::{jh::jh_steinberg, kl::KlStore, root_data::Weight, weyl::WeylGroup};
//!
//! let t = "A2".parse().unwrap();
//! let group = WeylGroup::new(t);
//! let store = KlStore::new(t);
//! let series = jh_steinberg(&group, &Weight::zero(2), &store).unwrap();
//! assert_eq!(series.length(), 8);
//! ```

pub mod cache;
pub mod cli;
pub mod error;
pub mod jh;
pub mod kl;
pub mod render;
pub mod root_data;
pub mod weyl;

pub use error::{Error, Result};
