//! Acceptance criteria 1-10. Prints one line per criterion and exits
//! nonzero if any fails. All numerical comparisons are exact; the only
//! tolerance is the warm-cache speedup factor in criterion 10.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use serde_json::Value;

use qplab::families::build_family;
use qplab::harness::corpus::{Corpus, CorpusEntry, DEFAULT_CORPUS};
use qplab::harness::{run_campaign, CampaignOptions, VerificationReport};
use qplab::invariants::{py_bounds, quadratic_persistence};
use qplab::strands::{betti_strand_one, extract_syzygy_variety, regularity_via_gin};
use qplab::varieties::{cmr_secant_line, secant_order, Variety};
use qplab::{Field, FieldConfig, Ideal, PrimeField};

const SAMPLES: usize = 3;
const CAMPAIGN_SEED: u64 = 7;
const WARM_SPEEDUP: f64 = 2.0;

type Outcome = std::result::Result<String, String>;

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn entry<'a>(corpus: &'a Corpus, id: &str) -> &'a CorpusEntry {
    corpus.get(id).unwrap_or_else(|| panic!("corpus entry {id}"))
}

fn build<F: Field>(field: &F, e: &CorpusEntry) -> Variety<F> {
    build_family(field, &e.constructor, &e.params, e.seed).unwrap_or_else(|err| panic!("{}: {err}", e.id))
}

fn int(m: &BTreeMap<String, Value>, k: &str) -> i64 {
    m.get(k).and_then(Value::as_i64).unwrap_or_else(|| panic!("missing integer `{k}`"))
}

fn flag(m: &BTreeMap<String, Value>, k: &str) -> bool {
    m.get(k).and_then(Value::as_bool).unwrap_or_else(|| panic!("missing flag `{k}`"))
}

fn computed<'a>(report: &'a VerificationReport, id: &str) -> &'a BTreeMap<String, Value> {
    &report.entries.iter().find(|e| e.id == id).unwrap_or_else(|| panic!("no report for {id}")).computed
}

fn criterion_1() -> Outcome {
    let f = fp();
    let v = build_family(&f, "veronese", &[2, 3], 0).map_err(|e| e.to_string())?;
    let dim_i2 = v.ideal().graded_dim(2).map_err(|e| e.to_string())?;
    let hf2 = v.ideal().hilbert_function().map_err(|e| e.to_string())?.hf_at(2);
    // cubics in three variables, restricted to degree 2 in P^9
    let hf2_oracle = binomial(2 + 6, 6);
    ensure(dim_i2 == 27, || format!("dim I_2 = {dim_i2}, expected 27"))?;
    ensure(hf2 as i64 == hf2_oracle, || format!("HF(2) = {hf2}, expected {hf2_oracle}"))?;
    ensure(binomial(11, 2) - 27 == hf2_oracle, || "binomial oracle inconsistent".into())?;
    let a = quadratic_persistence(&v, SAMPLES, 1).map_err(|e| e.to_string())?;
    let b = quadratic_persistence(&v, SAMPLES, 2).map_err(|e| e.to_string())?;
    ensure(a.value == 6 && b.value == 6, || format!("qp = {} / {}, expected 6", a.value, b.value))?;
    Ok(format!("dim I_2 = 27, HF(2) = 28, qp = 6 for seeds 1 and 2, levels {:?}", a.floor_evidence))
}

fn criterion_2(corpus: &Corpus, report: &VerificationReport) -> Outcome {
    let minimal: &[(&str, i64)] = &[
        ("rnc3", 2),
        ("rnc4", 3),
        ("rnc5", 4),
        ("rnc6", 5),
        ("scroll_1_2", 2),
        ("scroll_2_2", 3),
        ("scroll_1_1_2", 3),
        ("veronese_2_2", 3),
    ];
    for (id, c) in minimal {
        let m = computed(report, id);
        ensure(int(m, "c") == *c, || format!("{id}: c = {}, expected {c}", int(m, "c")))?;
        ensure(int(m, "d") == c + 1, || format!("{id}: d = {}, expected {}", int(m, "d"), c + 1))?;
        ensure(int(m, "qp") == *c, || format!("{id}: qp = {}, expected {c}", int(m, "qp")))?;
    }
    let mut others = 0;
    for e in corpus.entries.iter().filter(|e| e.constructor == "cmr_curve" || e.constructor == "genus3") {
        let m = computed(report, &e.id);
        ensure(int(m, "qp") < int(m, "c"), || format!("{}: qp = {} not < c = {}", e.id, int(m, "qp"), int(m, "c")))?;
        others += 1;
    }
    Ok(format!("qp = c = d - 1 on {} minimal-degree entries; qp < c on {others} others", minimal.len()))
}

fn criterion_3(corpus: &Corpus) -> Outcome {
    let f = fp();
    let v = build(&f, entry(corpus, "dp5"));
    let y = build(&f, entry(corpus, "dp5_container"));
    let (n, d, c) = v.dim_deg_codim().map_err(|e| e.to_string())?;
    ensure((n, d, c) == (2, 5, 3), || format!("(n, d, c) = {:?}", (n, d, c)))?;
    let qp = quadratic_persistence(&v, SAMPLES, 3).map_err(|e| e.to_string())?.value;
    ensure(qp as i64 == c - 1, || format!("qp = {qp}, expected {}", c - 1))?;
    let py = py_bounds(&v, qp, Some(&y)).map_err(|e| e.to_string())?;
    ensure((py.lower, py.upper) == (n + 2, Some(n + 2)), || format!("py in [{}, {:?}]", py.lower, py.upper))?;
    Ok(format!("qp = 2 = c - 1, py in [4, 4] with container of dimension {}", y.dim_deg_codim().unwrap().0))
}

fn criterion_4(report: &VerificationReport) -> Outcome {
    let mut codim3 = 0;
    let mut checked = 0;
    for e in &report.entries {
        let m = &e.computed;
        if m.is_empty() {
            return Err(format!("{} has no computed values", e.id));
        }
        let (c, d, qp) = (int(m, "c"), int(m, "d"), int(m, "qp"));
        if c == 3 && d >= 6 {
            let ell = int(m, "ell");
            ensure(ell == qp, || format!("{}: ell = {ell}, qp = {qp}", e.id))?;
            codim3 += 1;
        }
        if c >= 3 {
            let b21 = flag(m, "beta21_positive");
            ensure(b21 == (qp >= 2), || format!("{}: beta_21 > 0 is {b21} but qp = {qp}", e.id))?;
            checked += 1;
        }
    }
    ensure(codim3 >= 4, || format!("only {codim3} codim-3 entries with d >= 6"))?;
    Ok(format!("ell = qp on {codim3} codim-3 entries; beta_21 > 0 iff qp >= 2 on {checked} entries"))
}

fn criterion_5(report: &VerificationReport) -> Outcome {
    for e in &report.entries {
        let pei = e.computed.get("pei").ok_or_else(|| format!("{}: no PEI record", e.id))?;
        let part = |k: &str| pei.get(k).and_then(Value::as_i64).unwrap_or(-1);
        let (i2, proj, k1) = (part("dim_i2"), part("dim_projected_i2"), part("dim_k1_1"));
        ensure(i2 == int(&e.computed, "dim_i2"), || format!("{}: PEI dim I_2 disagrees", e.id))?;
        ensure(i2 == proj + k1, || format!("{}: {i2} != {proj} + {k1}", e.id))?;
    }
    let n = report.entries.len();
    ensure(n >= 12, || format!("only {n} entries"))?;
    Ok(format!("dim I_2 = dim I(X_q)_2 + dim (K_1)_1 on {n} entries"))
}

fn criterion_6(corpus: &Corpus) -> Outcome {
    let f = fp();
    let v = build(&f, entry(corpus, "cmr_5_8_true"));
    let (r, d) = (v.r() as i64, v.dim_deg_codim().unwrap().1 as i64);
    let reg = regularity_via_gin(&v, 5).map_err(|e| e.to_string())?;
    ensure(reg == d - r + 2 && reg == 5, || format!("reg = {reg}, expected {}", d - r + 2))?;
    let line = cmr_secant_line(&f, v.r()).map_err(|e| e.to_string())?;
    let so = secant_order(&v, &line).map_err(|e| e.to_string())?;
    ensure(so == 5, || format!("secant order {so}, expected 5"))?;
    let qp = quadratic_persistence(&v, SAMPLES, 5).map_err(|e| e.to_string())?.value;
    ensure(qp as i64 == r - 2, || format!("qp = {qp}, expected {}", r - 2))?;
    let y = build(&f, entry(corpus, "scroll_1_3"));
    let py = py_bounds(&v, qp, Some(&y)).map_err(|e| e.to_string())?;
    ensure((py.lower, py.upper) == (3, Some(3)), || format!("py in [{}, {:?}]", py.lower, py.upper))?;

    let w = build(&f, entry(corpus, "cmr_5_8_false"));
    let qpw = quadratic_persistence(&w, SAMPLES, 5).map_err(|e| e.to_string())?.value;
    ensure(qpw as i64 == r - 3, || format!("off-scroll qp = {qpw}, expected {}", r - 3))?;
    let pyw = py_bounds(&w, qpw, None).map_err(|e| e.to_string())?;
    ensure(pyw.lower == 4, || format!("off-scroll py lower = {}", pyw.lower))?;
    Ok("reg = 5, secant order 5, qp = 3, py in [3, 3]; off the scroll qp = 2, py >= 4".into())
}

fn cubic_generators<F: Field>(v: &Variety<F>) -> std::result::Result<usize, String> {
    let quadrics = v.quadric_basis().map_err(|e| e.to_string())?;
    let i3 = v.ideal().graded_dim(3).map_err(|e| e.to_string())?;
    let s1_i2 = Ideal::new(v.field().clone(), v.nvars(), quadrics)
        .and_then(|j| j.graded_dim(3))
        .map_err(|e| e.to_string())?;
    Ok(i3 - s1_i2)
}

fn criterion_7(corpus: &Corpus, report: &VerificationReport) -> Outcome {
    let f = fp();
    let d6 = build(&f, entry(corpus, "g3_d6"));
    ensure(d6.dim_deg_codim().unwrap() == (1, 6, 2), || "d = 6 model has the wrong shape".into())?;
    ensure(d6.ideal().graded_dim(2).unwrap() == 0, || "d = 6 model lies on a quadric".into())?;
    let cubics = cubic_generators(&d6)?;
    ensure(cubics == 4, || format!("d = 6: {cubics} cubic generators, expected 4"))?;

    let d7 = computed(report, "g3_d7");
    ensure(int(d7, "dim_i2") == 3, || format!("d = 7: dim I_2 = {}", int(d7, "dim_i2")))?;
    ensure(int(d7, "qp") == 2 && int(d7, "r") - 2 == 2, || format!("d = 7: qp = {}", int(d7, "qp")))?;

    let omega2 = build(&f, entry(corpus, "g3_d8_omega2"));
    let v2 = build_family(&f, "veronese", &[2, 2], 0).map_err(|e| e.to_string())?;
    for q in v2.quadric_basis().map_err(|e| e.to_string())? {
        ensure(omega2.ideal().contains(&q).unwrap(), || "a Veronese quadric is not in I(C)".into())?;
    }
    let expect: &[(&str, i64)] = &[("g3_d8_omega2", 3), ("g3_d8_generic", 2), ("g3_d9", 3), ("g3_d10", 4)];
    for (id, qp) in expect {
        let m = computed(report, id);
        ensure(int(m, "qp") == *qp, || format!("{id}: qp = {}, expected {qp}", int(m, "qp")))?;
    }
    ensure(int(computed(report, "g3_d9"), "r") - 3 == 3, || "d = 9 sits in the wrong space".into())?;
    ensure(int(computed(report, "g3_d10"), "d") - 6 == 4, || "d = 10 has the wrong degree".into())?;
    Ok("d6: I_2 = 0, 4 cubics; d7: I_2 = 3, qp 2; d8 omega^2: qp 3 on nu_2(P^2); d8: 2; d9: 3; d10: 4".into())
}

fn criterion_8(corpus: &Corpus, report: &VerificationReport) -> Outcome {
    let f1 = fp();
    let f2 = PrimeField::new(30011).unwrap();
    let mut count = 0;
    for e in &report.entries {
        let m = &e.computed;
        let (c, d) = (int(m, "c"), int(m, "d"));
        if d != c + 1 || c < 1 {
            continue;
        }
        let ce = entry(corpus, &e.id);
        let a = betti_strand_one(&build(&f1, ce), c as usize).map_err(|e| e.to_string())?;
        let b = betti_strand_one(&build(&f2, ce), c as usize).map_err(|e| e.to_string())?;
        for p in 1..=c {
            let oracle = p * binomial(c + 1, p + 1);
            let x = a.get(&(p as usize)).copied().unwrap_or(0) as i64;
            let y = b.get(&(p as usize)).copied().unwrap_or(0) as i64;
            ensure(x == oracle && y == oracle, || format!("{}: beta_{{{p},1}} = {x} / {y}, expected {oracle}", e.id))?;
        }
        count += 1;
    }
    ensure(count >= 8, || format!("only {count} minimal-degree entries"))?;
    Ok(format!("Eagon-Northcott strand matches over p32003 and p30011 on {count} entries"))
}

fn criterion_9(corpus: &Corpus) -> Outcome {
    let f = fp();
    for (id, container) in [("cmr_5_8_true", "scroll_1_3"), ("g3_d8_omega2", "veronese_2_2")] {
        let x = build(&f, entry(corpus, id));
        let known = build(&f, entry(corpus, container));
        let y = extract_syzygy_variety(&x, 9).map_err(|e| format!("{id}: {e}"))?;
        let (n, _, _) = x.dim_deg_codim().unwrap();
        let (ny, dy, cy) = y.dim_deg_codim().unwrap();
        ensure(ny == n + 1, || format!("{id}: dim Y = {ny}"))?;
        ensure(dy as i64 == cy + 1, || format!("{id}: deg Y = {dy}, codim {cy}"))?;
        ensure(x.ideal().contains_ideal(y.ideal()).unwrap(), || format!("{id}: I(Y) not in I(X)"))?;
        ensure(y.ideal().equals(known.ideal()).unwrap(), || format!("{id}: Y differs from {container}"))?;
    }
    Ok("extracted Y = S(1,3) for the cmr curve and nu_2(P^2) for omega^2".into())
}

fn criterion_10(corpus: &Corpus) -> Outcome {
    let ids = ["nu3", "cmr_5_8_true", "cmr_5_8_false", "scroll_1_3"];
    let sub = Corpus {
        entries: ids.iter().map(|id| entry(corpus, id).clone()).collect(),
    };
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fresh = tempfile::tempdir().map_err(|e| e.to_string())?;
    let opts = |cache: &std::path::Path| CampaignOptions {
        tags: CampaignOptions::parse_tags("all").unwrap(),
        field: FieldConfig::Prime(32003),
        seed: CAMPAIGN_SEED,
        confirm: true,
        cache_dir: Some(cache.to_path_buf()),
        samples: SAMPLES,
    };
    let t = Instant::now();
    let cold = run_campaign(&sub, &opts(dir.path())).map_err(|e| e.to_string())?;
    let cold_time = t.elapsed().as_secs_f64();
    let t = Instant::now();
    let warm = run_campaign(&sub, &opts(dir.path())).map_err(|e| e.to_string())?;
    let warm_time = t.elapsed().as_secs_f64();
    let again = run_campaign(&sub, &opts(fresh.path())).map_err(|e| e.to_string())?;
    ensure(cold.passed, || "sub-campaign failed".into())?;
    ensure(cold.canonical_json() == again.canonical_json(), || "two cold runs differ".into())?;
    ensure(cold.canonical_json() == warm.canonical_json(), || "warm run differs from cold run".into())?;
    let cached = warm.stats.as_ref().map_or(0, |s| s.cached_entries);
    ensure(cached == ids.len(), || format!("{cached} of {} entries served from cache", ids.len()))?;
    ensure(cold_time >= WARM_SPEEDUP * warm_time, || {
        format!("cold {cold_time:.3}s vs warm {warm_time:.3}s, need {WARM_SPEEDUP}x")
    })?;
    Ok(format!(
        "identical canonical JSON across 3 runs; cold {cold_time:.3}s, warm {warm_time:.4}s ({:.0}x)",
        cold_time / warm_time.max(1e-9)
    ))
}

fn main() -> ExitCode {
    let corpus = Corpus::parse(DEFAULT_CORPUS).expect("built-in corpus parses");
    let t = Instant::now();
    let report = run_campaign(
        &corpus,
        &CampaignOptions {
            tags: CampaignOptions::parse_tags("all").unwrap(),
            field: FieldConfig::Prime(32003),
            seed: CAMPAIGN_SEED,
            confirm: true,
            cache_dir: None,
            samples: SAMPLES,
        },
    )
    .expect("campaign runs");
    println!(
        "campaign: {} entries, {} failed, {:.1}s",
        report.entries.len(),
        report.failures().count(),
        t.elapsed().as_secs_f64()
    );
    for e in report.failures() {
        println!("  failed entry {}: {:?}", e.id, e.error);
    }

    let criteria: Vec<(u32, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, Box::new(criterion_1)),
        (2, Box::new(|| criterion_2(&corpus, &report))),
        (3, Box::new(|| criterion_3(&corpus))),
        (4, Box::new(|| criterion_4(&report))),
        (5, Box::new(|| criterion_5(&report))),
        (6, Box::new(|| criterion_6(&corpus))),
        (7, Box::new(|| criterion_7(&corpus, &report))),
        (8, Box::new(|| criterion_8(&corpus, &report))),
        (9, Box::new(|| criterion_9(&corpus))),
        (10, Box::new(|| criterion_10(&corpus))),
    ];
    let mut failed = 0;
    for (n, check) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({secs:.2}s) {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({secs:.2}s) {why}");
            }
        }
    }
    if failed > 0 || !report.passed {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    } else {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    }
}
