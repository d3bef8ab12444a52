use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qplab::families::{build_family, FAMILIES};
use qplab::field::{Field, FieldConfig, PrimeField, Rationals};
use qplab::harness::corpus::{regen_oracles, Corpus, DEFAULT_CORPUS};
use qplab::harness::{run_campaign, CampaignOptions};
use qplab::invariants::{invariant_report, ReportOptions, DEFAULT_SAMPLES};
use qplab::io::{format_variety, parse_variety, peek_field, read_to_string, write_string};
use qplab::projection::{partial_elimination_ideals, pei_dimension_identity_check, project_from_points};
use qplab::strands::strand_table;
use qplab::varieties::parse_point;
use qplab::{cache, Error, Result};

#[derive(Parser)]
#[command(name = "qp-lab", version, about = "Quadratic persistence and Koszul strands of projective varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named family and write it as a .variety file.
    Family {
        /// Family name; `list` prints the known families.
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        #[arg(long, default_value = "p32003")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the JSON invariant report of a .variety file.
    Invariants {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// A .variety file of minimal degree containing the variety.
        #[arg(long)]
        container: Option<PathBuf>,
        /// Skip the strand table and regularity.
        #[arg(long)]
        no_strands: bool,
    },
    /// Project from points `[a0:...:ar]` of the variety.
    Project {
        file: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        points: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print dim (K_i)_t of the partial elimination ideals at a point.
    Pei {
        file: PathBuf,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Print the Betti-style strand table with ell, a and reg.
    Strands {
        file: PathBuf,
        /// Largest i for beta_{i,2}; defaults to codim + 1.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the corpus campaign for the selected theorem tags.
    Verify {
        /// Comma-separated tags, or `all`.
        #[arg(long, default_value = "all")]
        tags: String,
        #[arg(long, default_value = "p32003")]
        field: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        /// Write the full report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Corpus file; defaults to the built-in corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Recompute derived values from their oracles, rewrite --corpus (or
        /// print the built-in corpus) and exit.
        #[arg(long)]
        regen_oracles: bool,
        /// Skip the second-prime confirmation pass.
        #[arg(long)]
        no_confirm: bool,
        /// Entry cache directory; overrides QPLAB_CACHE_DIR.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => write_string(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn family<F: Field>(field: &F, name: &str, params: &[i64], seed: u64, output: Option<&Path>) -> Result<()> {
    let v = build_family(field, name, params, seed)?;
    let provenance = vec![format!(
        "qp-lab family {name} {} --field {} --seed {seed}",
        params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
        field.config()
    )];
    emit(output, &format_variety(&v, &provenance))
}

fn invariants<F: Field>(field: &F, text: &str, container: Option<&str>, samples: usize, seed: u64, strands: bool) -> Result<()> {
    let v = parse_variety(field, text)?;
    let container = container.map(|t| parse_variety(field, t)).transpose()?;
    let opts = ReportOptions {
        samples,
        seed,
        container: container.as_ref(),
        strands,
    };
    println!("{}", invariant_report(&v, &opts)?.to_json());
    Ok(())
}

fn project<F: Field>(field: &F, text: &str, points: &[String], output: Option<&Path>) -> Result<()> {
    let v = parse_variety(field, text)?;
    let pts = points.iter().map(|p| parse_point(field, p)).collect::<Result<Vec<_>>>()?;
    let w = project_from_points(&v, &pts)?;
    let provenance = vec![format!("projection of {} from {}", v.name(), points.join(" "))];
    emit(output, &format_variety(&w, &provenance))
}

fn pei<F: Field>(field: &F, text: &str, point: &str, m: usize, degree_bound: Option<u32>) -> Result<()> {
    let v = parse_variety(field, text)?;
    let q = parse_point(field, point)?;
    let res = partial_elimination_ideals(&v, &q, m, degree_bound)?;
    println!("{:>3} {:>3} {:>6}", "i", "t", "dim");
    for ((i, t), dim) in &res.dims {
        println!("{i:>3} {t:>3} {dim:>6}");
    }
    let id = pei_dimension_identity_check(&v, &q)?;
    println!(
        "dim I_2 = {} = dim I(X_q)_2 + dim (K_1)_1 = {} + {}: {}",
        id.dim_i2,
        id.dim_projected_i2,
        id.dim_k1_1,
        if id.holds { "holds" } else { "FAILS" }
    );
    Ok(())
}

fn strands<F: Field>(field: &F, text: &str, bound: Option<usize>, seed: u64) -> Result<()> {
    let v = parse_variety(field, text)?;
    let c = v.dim_deg_codim()?.2.max(0) as usize;
    print!("{}", strand_table(&v, bound.unwrap_or(c + 1), seed)?.render());
    Ok(())
}

macro_rules! with_field {
    ($config:expr, $f:ident => $body:expr) => {
        match $config {
            FieldConfig::Rationals => {
                let $f = &Rationals;
                $body
            }
            FieldConfig::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Family { name, params, field, seed, output } => {
            if name == "list" {
                for (n, synopsis) in FAMILIES {
                    println!("{n:<28} {synopsis}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            with_field!(FieldConfig::parse(&field)?, f => family(f, &name, &params, seed, output.as_deref()))?;
        }
        Command::Invariants { file, samples, seed, container, no_strands } => {
            let text = read_to_string(&file)?;
            let container = container.map(|p| read_to_string(&p)).transpose()?;
            with_field!(peek_field(&text)?, f => invariants(f, &text, container.as_deref(), samples, seed, !no_strands))?;
        }
        Command::Project { file, points, output } => {
            let text = read_to_string(&file)?;
            with_field!(peek_field(&text)?, f => project(f, &text, &points, output.as_deref()))?;
        }
        Command::Pei { file, point, m, degree_bound } => {
            let text = read_to_string(&file)?;
            with_field!(peek_field(&text)?, f => pei(f, &text, &point, m, degree_bound))?;
        }
        Command::Strands { file, bound, seed } => {
            let text = read_to_string(&file)?;
            with_field!(peek_field(&text)?, f => strands(f, &text, bound, seed))?;
        }
        Command::Verify { tags, field, seed, samples, json, corpus, regen_oracles: regen, no_confirm, cache_dir } => {
            let text = match &corpus {
                Some(p) => read_to_string(p)?,
                None => DEFAULT_CORPUS.to_string(),
            };
            if regen {
                let new = regen_oracles(&text)?;
                emit(corpus.as_deref(), &new)?;
                return Ok(ExitCode::SUCCESS);
            }
            let corpus = Corpus::parse(&text)?;
            let opts = CampaignOptions {
                tags: CampaignOptions::parse_tags(&tags)?,
                field: FieldConfig::parse(&field)?,
                seed,
                confirm: !no_confirm,
                cache_dir,
                samples,
            };
            let report = run_campaign(&corpus, &opts)?;
            for e in &report.entries {
                let status = if e.passed { "PASS" } else { "FAIL" };
                println!("{status} {:<20} [{}]", e.id, e.tags.join(","));
                if let Some(err) = &e.error {
                    println!("     error: {err}");
                }
                for c in e.checks.iter().filter(|c| !c.passed) {
                    println!(
                        "     {}: expected {} computed {}",
                        c.name,
                        c.expected.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into()),
                        c.computed.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "-".into())
                    );
                }
            }
            let failed = report.failures().count();
            println!(
                "{} entries, {} failed, field {}, confirmation {}",
                report.entries.len(),
                failed,
                report.field,
                report.confirm_field.as_deref().unwrap_or("none")
            );
            if let Some(p) = json {
                write_string(&p, &report.to_json())?;
            }
            if !report.passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    cache::init_from_env();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("qp-lab: {e}");
            match e {
                Error::Usage(_) | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}
