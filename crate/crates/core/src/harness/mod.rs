//! Verification campaigns over the corpus.
//!
//! Each selected entry is built, its invariants are computed, the expected
//! values and the selected theorem relations are checked, and entries that
//! feed an equality are recomputed over a second prime.

pub mod corpus;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cache;
use crate::error::{Error, Result};
use crate::families::build_family;
use crate::field::{Field, FieldConfig, PrimeField, Rationals, CONFIRM_PRIME, DEFAULT_PRIME};
use crate::groebner::cache_key;
use crate::invariants::{level_seed, minimal_generator_count, py_bounds, quadratic_persistence, DEFAULT_SAMPLES};
use crate::monomial::MonomialOrder;
use crate::projection::pei_dimension_identity_check;
use crate::strands::{extract_syzygy_variety, strand_table};
use crate::varieties::cmr_secant_line;
use crate::varieties::secant_order;

pub use corpus::{Corpus, CorpusEntry, ExpectedValue, Provenance, DEFAULT_CORPUS, TAGS};

/// Invariants compared between the campaign prime and the confirmation
/// prime.
const CONFIRMED_KEYS: &[&str] = &[
    "n", "d", "c", "dim_i2", "hf2", "qp", "ell", "b1", "b2", "reg", "cubic_generators", "secant_order",
];

#[derive(Clone, Debug)]
pub struct CampaignOptions {
    pub tags: Vec<String>,
    pub field: FieldConfig,
    pub seed: u64,
    /// Recompute over a second prime when the campaign field is a prime
    /// field.
    pub confirm: bool,
    /// Directory for cached entry results; falls back to the global cache
    /// directory.
    pub cache_dir: Option<PathBuf>,
    pub samples: usize,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            tags: Vec::new(),
            field: FieldConfig::default(),
            seed: 0,
            confirm: true,
            cache_dir: None,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl CampaignOptions {
    /// Parses a comma-separated tag list; `all` selects every tag.
    pub fn parse_tags(list: &str) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for t in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if t.eq_ignore_ascii_case("all") {
                out.extend(TAGS.iter().map(|s| s.to_string()));
            } else if TAGS.contains(&t) {
                out.push(t.to_string());
            } else {
                return Err(Error::Usage(format!("unknown tag `{t}`; known: {}", TAGS.join(","))));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub computed: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryStats {
    pub wall_ms: u128,
    pub cached: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub constructor: String,
    pub params: Vec<i64>,
    pub tags: Vec<String>,
    pub constructor_seed: u64,
    pub sampling_seed: u64,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub checks: Vec<Check>,
    pub computed: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<EntryStats>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignStats {
    pub wall_ms: u128,
    pub cached_entries: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub field: String,
    pub confirm_field: Option<String>,
    pub seed: u64,
    pub tags: Vec<String>,
    pub passed: bool,
    pub entries: Vec<EntryReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<CampaignStats>,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The report without timings and cache information; identical inputs
    /// give identical text.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.stats = None;
        for e in r.entries.iter_mut() {
            e.stats = None;
        }
        r.to_json()
    }

    pub fn failures(&self) -> impl Iterator<Item = &EntryReport> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

fn id_seed(seed: u64, id: &str) -> u64 {
    let d = cache::digest(&[id]);
    let tag = u64::from_str_radix(&d[..16], 16).expect("hex digest");
    level_seed(seed ^ tag, 0, 0)
}

fn num(v: impl Into<i64>) -> Value {
    json!(v.into())
}

/// Every invariant the campaign knows how to compute for one entry.
pub fn compute_entry<F: Field>(
    field: &F,
    entry: &CorpusEntry,
    container: Option<&CorpusEntry>,
    seed: u64,
    samples: usize,
) -> Result<BTreeMap<String, Value>> {
    let v = build_family(field, &entry.constructor, &entry.params, entry.seed)?;
    let mut out = BTreeMap::new();
    let (n, d, c) = v.dim_deg_codim()?;
    let r = v.r() as i64;
    out.insert("r".into(), num(r));
    out.insert("n".into(), num(n));
    out.insert("d".into(), json!(d));
    out.insert("c".into(), num(c));
    let dim_i2 = v.ideal().graded_dim(2)?;
    out.insert("dim_i2".into(), json!(dim_i2));
    out.insert("hf2".into(), json!(v.ideal().hilbert_function()?.hf_at(2)));
    out.insert("cubic_generators".into(), json!(minimal_generator_count(&v, 3)?));
    out.insert("ideal_hash".into(), json!(cache_key(v.ideal(), MonomialOrder::Grevlex)));
    out.insert("totally_real".into(), json!(v.totally_real()));

    let cert = quadratic_persistence(&v, samples, seed)?;
    out.insert("qp".into(), json!(cert.value));
    out.insert("certificate".into(), serde_json::to_value(cert.summary(field)).expect("plain data"));

    let table = strand_table(&v, c.max(0) as usize + 1, seed)?;
    out.insert("b1".into(), json!(table.b1.values().collect::<Vec<_>>()));
    out.insert("b2".into(), json!(table.b2.values().collect::<Vec<_>>()));
    out.insert("beta21_positive".into(), json!(table.b1.get(&2).is_some_and(|&b| b > 0)));
    out.insert("ell".into(), json!(table.ell));
    out.insert("reg".into(), json!(table.reg));
    out.insert("gl_index".into(), serde_json::to_value(table.gl_index).expect("plain data"));
    let strand_divisor = c >= 2 && d as i64 >= c + 3 && table.b1.get(&((c - 1) as usize)).is_some_and(|&b| b > 0);
    out.insert("strand_divisor".into(), json!(strand_divisor));

    let q = v.sample_point(level_seed(seed, usize::MAX, 0))?;
    let pei = pei_dimension_identity_check(&v, &q)?;
    out.insert("pei_holds".into(), json!(pei.holds));
    out.insert("pei".into(), serde_json::to_value(&pei).expect("plain data"));

    if entry.constructor == "cmr_curve" {
        let line = cmr_secant_line(field, v.r())?;
        out.insert("secant_order".into(), json!(secant_order(&v, &line)?));
    }

    let y = match container {
        Some(ce) => Some(build_family(field, &ce.constructor, &ce.params, ce.seed)?),
        None => None,
    };
    if let Some(y) = &y {
        let mut inside = true;
        for g in y.quadric_basis()? {
            inside &= v.ideal().contains(&g)?;
        }
        out.insert("container_quadrics_contained".into(), json!(inside));
        let yqp = quadratic_persistence(y, samples, seed)?;
        out.insert("container_qp".into(), json!(yqp.value));
        out.insert("container_n".into(), json!(y.dim_deg_codim()?.0));
    }
    if v.totally_real() {
        let b = py_bounds(&v, cert.value, y.as_ref())?;
        out.insert("py_lower".into(), json!(b.lower));
        out.insert("py_upper".into(), json!(b.upper));
        out.insert("py".into(), serde_json::to_value(&b).expect("plain data"));
    }
    if entry.expected.contains_key("extracted_matches_container") {
        let ex = extract_syzygy_variety(&v, seed)?;
        let matches = match &y {
            Some(y) => ex.ideal().equals(y.ideal())?,
            None => false,
        };
        out.insert("extracted_matches_container".into(), json!(matches));
    }
    Ok(out)
}

fn get_i64(m: &BTreeMap<String, Value>, k: &str) -> Option<i64> {
    m.get(k).and_then(Value::as_i64)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The relations of the selected theorem tags, evaluated on computed
/// values. Hypotheses that fail are reported as failing checks so that a
/// mislabelled corpus entry cannot pass silently.
fn theorem_checks(entry: &CorpusEntry, tags: &[String], m: &BTreeMap<String, Value>) -> Vec<Check> {
    let mut out = Vec::new();
    let mut check = |name: &str, passed: bool| {
        out.push(Check {
            name: name.to_string(),
            passed,
            expected: None,
            computed: None,
            provenance: None,
        })
    };
    let g = |k: &str| get_i64(m, k).unwrap_or(i64::MIN);
    let (r, n, d, c, qp) = (g("r"), g("n"), g("d"), g("c"), g("qp"));
    let ell = g("ell");
    let has_container = entry.container.is_some();
    for tag in tags.iter().filter(|t| entry.tags.contains(t)) {
        match tag.as_str() {
            "A" => {
                check("A: qp <= c", qp <= c);
                check("A: qp = c iff d = c + 1", (qp == c) == (d == c + 1));
                if d == c + 1 {
                    let en: Vec<i64> = (1..=c).map(|p| p * binomial(c + 1, p + 1)).collect();
                    let b1: Vec<i64> = m
                        .get("b1")
                        .and_then(Value::as_array)
                        .map(|a| a.iter().filter_map(Value::as_i64).collect())
                        .unwrap_or_default();
                    check("A: beta_p1 = p C(c+1, p+1)", b1 == en);
                }
            }
            "1.2" => {
                check("1.2: hypotheses c >= 3 and d = c + 2", c >= 3 && d == c + 2);
                check("1.2: qp = c - 1", qp == c - 1);
                if has_container {
                    check(
                        "1.2: py interval is [n+2, n+2]",
                        g("py_lower") == n + 2 && g("py_upper") == n + 2,
                    );
                }
            }
            "1.3" => {
                check("1.3: reg = d - r + 2", g("reg") == d - r + 2);
                check("1.3: qp in {r-3, r-2}", qp == r - 3 || qp == r - 2);
                check("1.3: qp = r - 2 iff on a surface of minimal degree", (qp == r - 2) == has_container);
                if m.contains_key("py_lower") {
                    check("1.3: py lower bound is r + 1 - qp", g("py_lower") == r + 1 - qp);
                }
                if has_container {
                    check("1.3: py interval is [3, 3]", g("py_lower") == 3 && g("py_upper") == 3);
                }
            }
            "1.4" => {
                check("1.4: qp in {r-3, r-2}", qp == r - 3 || qp == r - 2);
                let special = entry.params.first() == Some(&2) && entry.params.get(1).is_some_and(|&np| np <= 1);
                check("1.4: qp = r - 2 iff the bundle is omega^2 or omega^2(-p)", (qp == r - 2) == special);
            }
            "3.1" => {
                check("3.1: hypotheses c = 3 and d >= 6", c == 3 && d >= 6);
                check("3.1: ell = qp", ell == qp);
            }
            "P3.3" => {
                check("P3.3: hypothesis c >= 3", c >= 3);
                let b21 = m.get("beta21_positive").and_then(Value::as_bool).unwrap_or(false);
                check("P3.3: beta_21 > 0 iff qp >= 2", b21 == (qp >= 2));
            }
            "PEI" => {
                let holds = m.get("pei_holds").and_then(Value::as_bool).unwrap_or(false);
                check("PEI: dim I_2 = dim I(X_q)_2 + dim (K_1)_1", holds);
            }
            "CAST" => {
                if d > 2 * c {
                    check("CAST: dim I_2 <= C(c, 2)", g("dim_i2") <= binomial(c, 2));
                }
                if d >= 2 * c + 3 && g("dim_i2") == binomial(c, 2) {
                    let sd = m.get("strand_divisor").and_then(Value::as_bool).unwrap_or(false);
                    check("CAST: extremal count forces a divisor on a minimal-degree variety", sd);
                    if has_container {
                        check("CAST: container has dimension n + 1", g("container_n") == n + 1);
                    }
                }
                check("CAST: hypothesis d >= 2c + 1", d > 2 * c);
            }
            _ => {}
        }
    }
    if has_container && m.contains_key("container_qp") {
        check("qp(X) >= qp(container)", qp >= g("container_qp"));
    }
    out
}

fn expected_checks(entry: &CorpusEntry, m: &BTreeMap<String, Value>) -> Vec<Check> {
    entry
        .expected
        .iter()
        .map(|(k, x)| {
            let want = x.value.to_json();
            let got = m.get(k).cloned();
            Check {
                name: format!("expected {k}"),
                passed: got.as_ref() == Some(&want),
                expected: Some(want),
                computed: Some(got.unwrap_or(Value::Null)),
                provenance: Some(x.provenance),
            }
        })
        .collect()
}

fn compute_in(config: FieldConfig, entry: &CorpusEntry, container: Option<&CorpusEntry>, seed: u64, samples: usize) -> Result<BTreeMap<String, Value>> {
    match config {
        FieldConfig::Rationals => compute_entry(&Rationals, entry, container, seed, samples),
        FieldConfig::Prime(p) => compute_entry(&PrimeField::new(p)?, entry, container, seed, samples),
    }
}

fn confirm_field(config: FieldConfig) -> Option<FieldConfig> {
    match config {
        FieldConfig::Rationals => None,
        FieldConfig::Prime(p) if p == CONFIRM_PRIME => Some(FieldConfig::Prime(DEFAULT_PRIME)),
        FieldConfig::Prime(_) => Some(FieldConfig::Prime(CONFIRM_PRIME)),
    }
}

fn run_entry(corpus: &Corpus, entry: &CorpusEntry, opts: &CampaignOptions) -> EntryReport {
    let sampling_seed = id_seed(opts.seed, &entry.id);
    let container = entry.container.as_deref().and_then(|c| corpus.get(c));
    let mut report = EntryReport {
        id: entry.id.clone(),
        constructor: entry.constructor.clone(),
        params: entry.params.clone(),
        tags: entry.tags.clone(),
        constructor_seed: entry.seed,
        sampling_seed,
        passed: false,
        error: None,
        checks: Vec::new(),
        computed: BTreeMap::new(),
        stats: None,
    };
    let computed = match compute_in(opts.field, entry, container, sampling_seed, opts.samples) {
        Ok(m) => m,
        Err(e) => {
            report.error = Some(e.to_string());
            return report;
        }
    };
    let mut checks = expected_checks(entry, &computed);
    checks.extend(theorem_checks(entry, &opts.tags, &computed));
    if opts.confirm {
        if let Some(other) = confirm_field(opts.field) {
            let name = format!("same invariants over {other}");
            match compute_in(other, entry, container, sampling_seed, opts.samples) {
                Ok(m2) => {
                    let differing: Vec<&str> = CONFIRMED_KEYS
                        .iter()
                        .copied()
                        .filter(|k| computed.get(*k) != m2.get(*k))
                        .collect();
                    checks.push(Check {
                        name,
                        passed: differing.is_empty(),
                        expected: None,
                        computed: (!differing.is_empty()).then(|| json!(differing)),
                        provenance: None,
                    });
                }
                Err(e) => checks.push(Check {
                    name,
                    passed: false,
                    expected: None,
                    computed: Some(json!(e.to_string())),
                    provenance: None,
                }),
            }
        }
    }
    report.passed = checks.iter().all(|c| c.passed);
    report.checks = checks;
    report.computed = computed;
    report
}

fn entry_cache_key(corpus: &Corpus, entry: &CorpusEntry, opts: &CampaignOptions) -> String {
    let entry_text = serde_json::to_string(entry).expect("plain data");
    let container_text = entry
        .container
        .as_deref()
        .and_then(|c| corpus.get(c))
        .map(|c| serde_json::to_string(c).expect("plain data"))
        .unwrap_or_default();
    let field = opts.field.to_string();
    let seed = opts.seed.to_string();
    let samples = opts.samples.to_string();
    let tags = opts.tags.join(",");
    let confirm = opts.confirm.to_string();
    cache::digest(&[
        env!("CARGO_PKG_VERSION"),
        &entry_text,
        &container_text,
        &field,
        &seed,
        &samples,
        &tags,
        &confirm,
    ])
}

/// Runs the entries carrying any of the selected tags, concurrently.
pub fn run_campaign(corpus: &Corpus, opts: &CampaignOptions) -> Result<VerificationReport> {
    if opts.tags.is_empty() {
        return Err(Error::Usage("select at least one theorem tag".into()));
    }
    let start = Instant::now();
    let cache_dir = opts.cache_dir.clone().or_else(cache::cache_dir);
    let selected: Vec<&CorpusEntry> = corpus
        .entries
        .iter()
        .filter(|e| e.tags.iter().any(|t| opts.tags.contains(t)))
        .collect();
    let entries: Vec<EntryReport> = selected
        .par_iter()
        .map(|entry| {
            let t0 = Instant::now();
            let key = entry_cache_key(corpus, entry, opts);
            let cached = cache_dir
                .as_ref()
                .and_then(|d| cache::load_from(d, "entry", &key))
                .and_then(|s| serde_json::from_str::<EntryReport>(&s).ok());
            let (mut report, hit) = match cached {
                Some(r) => (r, true),
                None => {
                    let r = run_entry(corpus, entry, opts);
                    if let Some(d) = &cache_dir {
                        if r.error.is_none() {
                            cache::store_in(d, "entry", &key, &serde_json::to_string(&r).expect("plain data"));
                        }
                    }
                    (r, false)
                }
            };
            report.stats = Some(EntryStats {
                wall_ms: t0.elapsed().as_millis(),
                cached: hit,
            });
            report
        })
        .collect();
    let cached_entries = entries.iter().filter(|e| e.stats.as_ref().is_some_and(|s| s.cached)).count();
    Ok(VerificationReport {
        field: opts.field.to_string(),
        confirm_field: if opts.confirm { confirm_field(opts.field).map(|f| f.to_string()) } else { None },
        seed: opts.seed,
        tags: opts.tags.clone(),
        passed: entries.iter().all(|e| e.passed),
        entries,
        stats: Some(CampaignStats {
            wall_ms: start.elapsed().as_millis(),
            cached_entries,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tags_is_a_usage_error() {
        let corpus = Corpus::parse(DEFAULT_CORPUS).unwrap();
        let opts = CampaignOptions::default();
        assert!(matches!(run_campaign(&corpus, &opts), Err(Error::Usage(_))));
        assert!(CampaignOptions::parse_tags("A,nope").is_err());
        assert_eq!(CampaignOptions::parse_tags("all").unwrap().len(), TAGS.len());
    }

    #[test]
    fn small_campaign_passes() {
        let corpus = Corpus::parse(DEFAULT_CORPUS).unwrap();
        let mut small = corpus.clone();
        small.entries.retain(|e| ["rnc3", "scroll_1_2"].contains(&e.id.as_str()));
        let opts = CampaignOptions {
            tags: vec!["A".into(), "PEI".into()],
            ..Default::default()
        };
        let report = run_campaign(&small, &opts).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert!(report.passed, "{}", report.to_json());
    }
}
