//! Runs the built-in corpus for one theorem tag and prints each entry.

use qplab::harness::corpus::{Corpus, DEFAULT_CORPUS};
use qplab::harness::{run_campaign, CampaignOptions};
use qplab::Result;

fn main() -> Result<()> {
    let tags = std::env::args().nth(1).unwrap_or_else(|| "1.3".into());
    let corpus = Corpus::parse(DEFAULT_CORPUS)?;
    let opts = CampaignOptions {
        tags: CampaignOptions::parse_tags(&tags)?,
        ..CampaignOptions::default()
    };
    let report = run_campaign(&corpus, &opts)?;
    for e in &report.entries {
        let qp = e.computed.get("qp").map(|v| v.to_string()).unwrap_or_default();
        println!("{:<6} {:<18} qp = {qp}", if e.passed { "pass" } else { "FAIL" }, e.id);
    }
    println!("all passed: {}", report.passed);
    Ok(())
}
