//! JSON and plain-table renderings of a factor multiset.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jh::FactorMultiset;
use crate::root_data::{CartanType, Weight};
use crate::weyl::SimpleSubset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub w_word: Vec<usize>,
    pub w_dot_lambda: Vec<i64>,
    #[serde(rename = "I")]
    pub i: Vec<usize>,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub smooth_part: String,
    pub mult: u64,
}

/// Machine-readable form of one computed series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesDoc {
    #[serde(rename = "type")]
    pub cartan: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub parabolic: Vec<usize>,
    pub twist: Vec<usize>,
    pub factors: Vec<FactorDoc>,
    pub length: u64,
    pub distinct: usize,
}

impl SeriesDoc {
    pub fn new(
        cartan: CartanType,
        lambda: &Weight,
        parabolic: SimpleSubset,
        twist: Vec<usize>,
        series: &FactorMultiset,
    ) -> Self {
        SeriesDoc {
            cartan: cartan.to_string(),
            rank: cartan.rank(),
            lambda: lambda.coords().to_vec(),
            parabolic: parabolic.to_vec(),
            twist,
            factors: series
                .iter()
                .map(|f| FactorDoc {
                    w_word: f.w.to_word(),
                    w_dot_lambda: f.highest_weight.coords().to_vec(),
                    i: f.i.to_vec(),
                    j: f.j.to_vec(),
                    smooth_part: f.smooth_part(),
                    mult: f.mult,
                })
                .collect(),
            length: series.length(),
            distinct: series.distinct(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("series document serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# type={} rank={} lambda={} parabolic={} twist={}",
            self.cartan,
            self.rank,
            join(&self.lambda),
            join(&self.parabolic),
            join(&self.twist)
        );
        let rows: Vec<[String; 6]> = self
            .factors
            .iter()
            .map(|f| {
                [
                    word_str(&f.w_word),
                    format!("({})", join(&f.w_dot_lambda)),
                    format!("{{{}}}", join(&f.i)),
                    format!("{{{}}}", join(&f.j)),
                    f.smooth_part.clone(),
                    f.mult.to_string(),
                ]
            })
            .collect();
        let header = ["w", "w.lambda", "I", "J", "smooth_part", "mult"].map(String::from);
        let mut widths = header.each_ref().map(|h| h.len());
        for r in &rows {
            for (k, c) in r.iter().enumerate() {
                widths[k] = widths[k].max(c.len());
            }
        }
        for r in std::iter::once(&header).chain(rows.iter()) {
            let cells: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(k, c)| format!("{c:<width$}", width = widths[k]))
                .collect();
            let _ = writeln!(out, "{}", cells.join(" | ").trim_end());
        }
        let _ = writeln!(out, "length={} distinct={}", self.length, self.distinct);
        out
    }

    /// Reads back the output of [`SeriesDoc::to_table`].
    pub fn parse_table(text: &str) -> Result<Self> {
        let bad = |m: &str| Error::Parse(format!("table: {m}"));
        let mut lines = text.lines();
        let head = lines.next().ok_or_else(|| bad("empty input"))?;
        let head = head.strip_prefix("# ").ok_or_else(|| bad("missing header"))?;
        let field = |name: &str| -> Result<String> {
            head.split(' ')
                .find_map(|kv| kv.strip_prefix(name).and_then(|r| r.strip_prefix('=')))
                .map(str::to_string)
                .ok_or_else(|| bad(&format!("missing {name}")))
        };
        let cartan = field("type")?;
        let rank = field("rank")?.parse().map_err(|_| bad("rank"))?;
        let lambda = split_list(&field("lambda")?)?;
        let parabolic = split_list(&field("parabolic")?)?;
        let twist = split_list(&field("twist")?)?;
        lines.next().ok_or_else(|| bad("missing column header"))?;
        let mut factors = Vec::new();
        let mut footer = None;
        for line in lines {
            if let Some(rest) = line.strip_prefix("length=") {
                footer = Some(rest.to_string());
                break;
            }
            let cells: Vec<&str> = line.split(" | ").map(str::trim).collect();
            if cells.len() != 6 {
                return Err(bad(&format!("row {line:?}")));
            }
            let inner = |c: &str, open: char, close: char| -> Result<String> {
                c.strip_prefix(open)
                    .and_then(|r| r.strip_suffix(close))
                    .map(str::to_string)
                    .ok_or_else(|| bad(&format!("cell {c:?}")))
            };
            factors.push(FactorDoc {
                w_word: parse_word_str(cells[0])?,
                w_dot_lambda: split_list(&inner(cells[1], '(', ')')?)?,
                i: split_list(&inner(cells[2], '{', '}')?)?,
                j: split_list(&inner(cells[3], '{', '}')?)?,
                smooth_part: cells[4].to_string(),
                mult: cells[5].parse().map_err(|_| bad("mult"))?,
            });
        }
        let footer = footer.ok_or_else(|| bad("missing footer"))?;
        let (len, dist) = footer
            .split_once(" distinct=")
            .ok_or_else(|| bad("footer"))?;
        Ok(SeriesDoc {
            cartan,
            rank,
            lambda,
            parabolic,
            twist,
            factors,
            length: len.parse().map_err(|_| bad("length"))?,
            distinct: dist.trim().parse().map_err(|_| bad("distinct"))?,
        })
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn split_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad list item {t:?}"))))
        .collect()
}

/// `s2s1` style rendering, `e` for the empty word.
pub fn word_str(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{i}")).collect()
}

fn parse_word_str(s: &str) -> Result<Vec<usize>> {
    if s == "e" {
        return Ok(Vec::new());
    }
    s.strip_prefix('s')
        .ok_or_else(|| Error::Parse(format!("bad word {s:?}")))?
        .split('s')
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad word {s:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_strings() {
        assert_eq!(word_str(&[]), "e");
        assert_eq!(word_str(&[2, 1, 3]), "s2s1s3");
        assert_eq!(parse_word_str("s2s1s3").unwrap(), vec![2, 1, 3]);
        assert_eq!(parse_word_str("e").unwrap(), Vec::<usize>::new());
        assert!(parse_word_str("x1").is_err());
    }

    #[test]
    fn table_round_trip() {
        let doc = SeriesDoc {
            cartan: "A2".into(),
            rank: 2,
            lambda: vec![0, 0],
            parabolic: vec![],
            twist: vec![],
            factors: vec![
                FactorDoc {
                    w_word: vec![],
                    w_dot_lambda: vec![0, 0],
                    i: vec![1, 2],
                    j: vec![],
                    smooth_part: "v^{P_{1,2}}_{P_{}}(St)".into(),
                    mult: 1,
                },
                FactorDoc {
                    w_word: vec![2, 1],
                    w_dot_lambda: vec![1, -3],
                    i: vec![1],
                    j: vec![1],
                    smooth_part: "1".into(),
                    mult: 2,
                },
            ],
            length: 3,
            distinct: 2,
        };
        let table = doc.to_table();
        assert!(table.ends_with("length=3 distinct=2\n"));
        assert_eq!(SeriesDoc::parse_table(&table).unwrap(), doc);
        let json: SeriesDoc = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(json, doc);
    }

    #[test]
    fn json_keys() {
        let doc = SeriesDoc {
            cartan: "A1".into(),
            rank: 1,
            lambda: vec![0],
            parabolic: vec![],
            twist: vec![],
            factors: vec![],
            length: 0,
            distinct: 0,
        };
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(
            keys,
            ["distinct", "factors", "lambda", "length", "parabolic", "rank", "twist", "type"]
        );
    }
}
