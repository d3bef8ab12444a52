//! The declarative corpus file and the closed-form oracles behind its
//! `derived` values.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The corpus checked into the repository.
pub const DEFAULT_CORPUS: &str = include_str!("../../corpus.toml");

/// Theorem selectors accepted by `--tags`.
pub const TAGS: &[&str] = &["A", "1.2", "1.3", "1.4", "3.1", "P3.3", "PEI", "CAST"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Paper,
    Trivial,
    Derived,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpectedValue {
    Bool(bool),
    Int(i64),
    List(Vec<i64>),
}

impl ExpectedValue {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    fn as_int(&self) -> Option<i64> {
        match self {
            ExpectedValue::Int(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub value: ExpectedValue,
    pub provenance: Provenance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub id: String,
    pub constructor: String,
    #[serde(default)]
    pub params: Vec<i64>,
    #[serde(default)]
    pub seed: u64,
    pub tags: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub container: Option<String>,
    #[serde(default)]
    pub expected: BTreeMap<String, Expected>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    #[serde(rename = "entry")]
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Parses and validates: unique ids, known tags, resolvable containers,
    /// and a known oracle on every derived value.
    pub fn parse(text: &str) -> Result<Corpus> {
        let corpus: Corpus = toml::from_str(text).map_err(|e| Error::Parse(format!("corpus: {e}")))?;
        let mut seen = std::collections::HashSet::new();
        for e in &corpus.entries {
            if !seen.insert(e.id.as_str()) {
                return Err(Error::Parse(format!("duplicate corpus id `{}`", e.id)));
            }
            for t in &e.tags {
                if !TAGS.contains(&t.as_str()) {
                    return Err(Error::Parse(format!("entry `{}` has unknown tag `{t}`", e.id)));
                }
            }
            for (key, x) in &e.expected {
                if x.provenance == Provenance::Derived {
                    let oracle = x.oracle.as_deref().ok_or_else(|| {
                        Error::Parse(format!("derived value `{key}` of `{}` names no oracle", e.id))
                    })?;
                    if !ORACLES.contains(&oracle) {
                        return Err(Error::Parse(format!("unknown oracle `{oracle}` in `{}`", e.id)));
                    }
                }
            }
        }
        for e in &corpus.entries {
            if let Some(c) = &e.container {
                if !seen.contains(c.as_str()) {
                    return Err(Error::Parse(format!("entry `{}` names unknown container `{c}`", e.id)));
                }
            }
        }
        Ok(corpus)
    }

    pub fn get(&self, id: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("corpus serializes")
    }
}

pub const ORACLES: &[&str] = &[
    "minimal-degree",
    "eagon-northcott",
    "cmr-construction",
    "degree-law",
    "hilbert-binomial",
    "star-bound",
];

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(r, n, c, d)` of a family, from its parameters alone.
pub fn family_shape(constructor: &str, p: &[i64]) -> Option<(i64, i64, i64, i64)> {
    Some(match (constructor, p) {
        ("projective_space", [r]) => (*r, *r, 0, 1),
        ("rational_normal_curve", [d]) => (*d, 1, d - 1, *d),
        ("scroll", a) if !a.is_empty() => {
            let k = a.len() as i64;
            let s: i64 = a.iter().sum();
            (s + k - 1, k, s - 1, s)
        }
        ("quadric", [r]) => (*r, r - 1, 1, 2),
        ("veronese", [n, dd]) => {
            let r = binomial(n + dd, *n) - 1;
            (r, *n, r - n, dd.pow(*n as u32))
        }
        ("del_pezzo_quintic", []) => (5, 2, 3, 5),
        ("del_pezzo_quintic_container", []) => (5, 3, 2, 3),
        ("cmr_curve", [r, d, _]) => (*r, 1, r - 1, *d),
        ("cmr_secant_line", [r]) => (*r, 1, r - 1, 1),
        ("genus3", [k, np]) => {
            let d = 4 * k - np;
            (d - 3, 1, d - 4, d)
        }
        _ => return None,
    })
}

/// Recomputes `key` of `entry` with the named oracle.
pub fn oracle_value(oracle: &str, key: &str, entry: &CorpusEntry) -> Result<ExpectedValue> {
    let unsupported = || Error::Usage(format!("oracle `{oracle}` cannot produce `{key}` for `{}`", entry.id));
    let (r, _, c, d) = family_shape(&entry.constructor, &entry.params).ok_or_else(unsupported)?;
    let int = ExpectedValue::Int;
    let other = |k: &str| entry.expected.get(k).and_then(|x| x.value.as_int()).ok_or_else(unsupported);
    Ok(match (oracle, key) {
        ("minimal-degree", "c") => int(c),
        ("minimal-degree", "d") => int(c + 1),
        ("minimal-degree", "dim_i2") => int(binomial(c + 1, 2)),
        ("minimal-degree", "qp") => int(c),
        ("minimal-degree", "reg") => int(2),
        ("eagon-northcott", "b1") => ExpectedValue::List((1..=c).map(|p| p * binomial(c + 1, p + 1)).collect()),
        ("cmr-construction", "d") => int(d),
        ("cmr-construction", "c") => int(c),
        ("cmr-construction", "reg" | "secant_order") => int(d - r + 2),
        ("cmr-construction", "extracted_matches_container") => ExpectedValue::Bool(true),
        ("degree-law", "d") => int(d),
        ("degree-law", "r") => int(r),
        ("degree-law", "c") => int(c),
        ("hilbert-binomial", "hf2") => int(binomial(r + 2, 2) - other("dim_i2")?),
        ("star-bound", "py_lower") => int(r + 1 - other("qp")?),
        _ => return Err(unsupported()),
    })
}

/// Rewrites every derived value from its oracle and returns the new file.
pub fn regen_oracles(text: &str) -> Result<String> {
    let mut corpus = Corpus::parse(text)?;
    for e in corpus.entries.iter_mut() {
        let snapshot = e.clone();
        for (key, x) in e.expected.iter_mut() {
            if x.provenance == Provenance::Derived {
                let oracle = x.oracle.clone().expect("validated");
                x.value = oracle_value(&oracle, key, &snapshot)?;
            }
        }
    }
    let header: String = text.lines().take_while(|l| l.starts_with('#')).map(|l| format!("{l}\n")).collect();
    Ok(format!("{header}\n{}", corpus.to_toml()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_corpus_is_valid_and_stable_under_regen() {
        let c = Corpus::parse(DEFAULT_CORPUS).unwrap();
        assert!(c.entries.len() >= 12);
        let regen = Corpus::parse(&regen_oracles(DEFAULT_CORPUS).unwrap()).unwrap();
        assert_eq!(regen, c);
    }

    #[test]
    fn validation() {
        let bad = "[[entry]]\nid = \"a\"\nconstructor = \"scroll\"\ntags = [\"Z\"]\n";
        assert!(Corpus::parse(bad).is_err());
        let no_oracle = "[[entry]]\nid = \"a\"\nconstructor = \"scroll\"\nparams = [1, 2]\ntags = [\"A\"]\n[entry.expected]\nc = { value = 2, provenance = \"derived\" }\n";
        assert!(Corpus::parse(no_oracle).is_err());
        let dangling = "[[entry]]\nid = \"a\"\nconstructor = \"scroll\"\ntags = [\"A\"]\ncontainer = \"b\"\n";
        assert!(Corpus::parse(dangling).is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(family_shape("scroll", &[1, 2]), Some((4, 2, 2, 3)));
        assert_eq!(family_shape("veronese", &[2, 3]), Some((9, 2, 7, 9)));
        assert_eq!(family_shape("genus3", &[2, 1]), Some((4, 1, 3, 7)));
    }
}
