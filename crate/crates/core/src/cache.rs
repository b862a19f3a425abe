//! Versioned JSON persistence for [`KlStore`].
//!
//! ```json
//! { "format_version": 1,
//!   "cartan": { "series": "A", "rank": 3 },
//!   "entries": [ { "x": [], "y": [2,1,3,2], "coeffs": [1,1] } ] }
//! ```
//!
//! Words are canonical reduced words. Loading validates the whole file before
//! returning anything, so a corrupt cache is never partially loaded.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kl::{KlPoly, KlStore};
use crate::root_data::{CartanType, Series};
use crate::weyl::WeylGroup;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanHeader {
    pub series: Series,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub coeffs: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CacheFile {
    pub format_version: u32,
    pub cartan: CartanHeader,
    pub entries: Vec<CacheEntry>,
}

impl CacheFile {
    pub fn from_store(store: &KlStore) -> Self {
        let t = store.cartan_type();
        let mut keys = HashSet::new();
        let mut entries: Vec<_> = store
            .entries()
            .into_iter()
            .filter(|(x, y, _)| keys.insert(KlStore::canonical_key(x, y)))
            .map(|(x, y, p)| {
                let (x, y) = KlStore::canonical_key(&x, &y);
                (
                    (y.sort_key(), x.sort_key()),
                    CacheEntry {
                        x: x.to_word(),
                        y: y.to_word(),
                        coeffs: p.coeffs().to_vec(),
                    },
                )
            })
            .collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        CacheFile {
            format_version: FORMAT_VERSION,
            cartan: CartanHeader {
                series: t.series(),
                rank: t.rank(),
            },
            entries: entries.into_iter().map(|(_, e)| e).collect(),
        }
    }

    /// Validates every entry against `group` and builds a fresh store.
    pub fn into_store(self, group: &WeylGroup) -> Result<KlStore> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Format(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        let t = CartanType::new(self.cartan.series, self.cartan.rank)
            .map_err(|e| Error::Format(e.to_string()))?;
        if t != group.cartan_type() {
            return Err(Error::Format(format!(
                "cache is for {t}, requested {}",
                group.cartan_type()
            )));
        }
        let store = KlStore::new(t);
        let mut seen = HashSet::new();
        for (n, entry) in self.entries.into_iter().enumerate() {
            let bad = |msg: String| Error::Format(format!("entry {n}: {msg}"));
            let x = group.from_word(&entry.x).map_err(|e| bad(e.to_string()))?;
            let y = group.from_word(&entry.y).map_err(|e| bad(e.to_string()))?;
            if x.len() != entry.x.len() || y.len() != entry.y.len() {
                return Err(bad("word is not reduced".into()));
            }
            if !group.bruhat_leq(&x, &y)? {
                return Err(bad(format!("{x} is not below {y} in Bruhat order")));
            }
            if entry.coeffs.last() == Some(&0) {
                return Err(bad("trailing zero coefficient".into()));
            }
            let p = KlPoly::from_coeffs(entry.coeffs);
            p.check_shape(y.len() - x.len()).map_err(bad)?;
            if !seen.insert(KlStore::canonical_key(&x, &y)) {
                return Err(bad(format!("duplicate pair ({x}, {y})")));
            }
            store.insert(&x, &y, p).map_err(|e| bad(e.to_string()))?;
        }
        Ok(store)
    }
}

pub fn cache_save(store: &KlStore, path: &Path) -> Result<()> {
    let file = CacheFile::from_store(store);
    let text = serde_json::to_string(&file).map_err(|e| Error::Format(e.to_string()))?;
    let io = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text + "\n").map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

pub fn cache_load(path: &Path, group: &WeylGroup) -> Result<KlStore> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    file.into_store(group)
}
