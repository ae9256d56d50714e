//! `fsg`: inspect small semigroups, enumerate corpora, and run theorem
//! sweeps.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use fuzzy_semigroups::congruence::{quotient, semilattice_decomposition};
use fuzzy_semigroups::correspondence::verify_bijections;
use fuzzy_semigroups::enumeration::{
    cache_store, cache_text, enumerate_semigroups, random_semigroups, standard_catalog,
    EnumerationCache,
};
use fuzzy_semigroups::fuzzy::DEFAULT_FUZZY_BUDGET;
use fuzzy_semigroups::verify::run_suite;
use fuzzy_semigroups::{
    Budgets, ChainChoice, CorpusItem, Dedup, Error, FiniteSemigroup, FuzzySubset, TheoremId,
    ValueChain, ALL_THEOREMS,
};

#[derive(Parser)]
#[command(name = "fsg", version, about = "Finite semigroup workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a table file defines a semigroup.
    ///
    /// Exits 0 when valid, 1 when the table is readable but invalid, 2 on
    /// read or parse failure.
    Validate { file: PathBuf },

    /// Enumerate (or sample) the semigroups of one order in cache format.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// none, iso, or iso-anti.
        #[arg(long, default_value = "none")]
        dedup: String,
        /// Sample this many tables instead of enumerating exhaustively.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a cache file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// List the standard catalog: name, order, flat table.
    Catalog {
        #[arg(long, default_value_t = 5)]
        max_order: usize,
    },

    /// Evaluate one predicate; exits 0 when true, 1 when false.
    Check {
        file: PathBuf,
        /// regular, left-regular, completely-regular, left-simple, simple,
        /// completely-simple, commutative, band, semilattice; or a fuzzy-*
        /// predicate together with --fuzzy.
        #[arg(long)]
        predicate: String,
        /// A fuzzy subset as "k; v0 v1 ...".
        #[arg(long)]
        fuzzy: Option<String>,
    },

    /// Round-trip the fuzzy/region passages on one semigroup.
    Correspond {
        file: PathBuf,
        /// "auto" (= order) or a resolution.
        #[arg(long, default_value = "auto")]
        chain: String,
        #[arg(long, default_value_t = DEFAULT_FUZZY_BUDGET)]
        budget: u128,
    },

    /// Show the canonical semilattice decomposition of one semigroup.
    Decompose { file: PathBuf },

    /// Run theorem sweeps over a corpus and report per-condition verdicts.
    ///
    /// Exits 0 when no sweep found an equivalence failure.
    Verify {
        /// Comma-separated: "all-N", "catalog", or table file paths.
        #[arg(long)]
        corpus: String,
        #[arg(long, default_value = "auto")]
        chain: String,
        /// Comma-separated theorem names; defaults to all.
        #[arg(long)]
        theorems: Option<String>,
        /// Dedup mode for "all-N" corpora.
        #[arg(long, default_value = "none")]
        dedup: String,
        /// Write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cap on per-member fuzzy subset enumeration; the composite-work
        /// cap scales with it (10x).
        #[arg(long)]
        budget: Option<u128>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Validate { file } => validate(&file),
        Command::Enumerate { order, dedup, sample, seed, out } => {
            enumerate(order, &dedup, sample, seed, out.as_deref())
        }
        Command::Catalog { max_order } => {
            for (name, s) in standard_catalog(max_order) {
                println!("{name}\t{}\t{}", s.order(), s.to_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { file, predicate, fuzzy } => check(&file, &predicate, fuzzy.as_deref()),
        Command::Correspond { file, chain, budget } => correspond(&file, &chain, budget),
        Command::Decompose { file } => decompose(&file),
        Command::Verify { corpus, chain, theorems, dedup, out, budget } => {
            verify(&corpus, &chain, theorems.as_deref(), &dedup, out.as_deref(), budget)
        }
    }
}

fn read_semigroup(file: &Path) -> anyhow::Result<FiniteSemigroup> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))?;
    FiniteSemigroup::parse(&text).with_context(|| format!("parsing {}", file.display()))
}

fn validate(file: &Path) -> anyhow::Result<ExitCode> {
    let text = std::fs::read_to_string(file)
        .with_context(|| format!("reading {}", file.display()))?;
    match FiniteSemigroup::parse(&text) {
        Ok(s) => {
            println!("ok: order {}", s.order());
            Ok(ExitCode::SUCCESS)
        }
        Err(e @ (Error::Parse(_) | Error::Io(_))) => Err(e.into()),
        Err(e) => {
            println!("invalid: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn enumerate(
    order: usize,
    dedup: &str,
    sample: Option<usize>,
    seed: u64,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    let dedup: Dedup = dedup.parse()?;
    let semigroups = match sample {
        Some(count) => {
            if dedup != Dedup::None {
                bail!("--sample produces labeled tables; drop --dedup");
            }
            random_semigroups(order, count, seed)?
        }
        None => enumerate_semigroups(order, dedup)?,
    };
    let cache = EnumerationCache { order, dedup, semigroups };
    match out {
        Some(path) => {
            cache_store(path, &cache)?;
            eprintln!("wrote {} tables to {}", cache.semigroups.len(), path.display());
        }
        None => print!("{}", cache_text(&cache)),
    }
    Ok(ExitCode::SUCCESS)
}

fn check(file: &Path, predicate: &str, fuzzy: Option<&str>) -> anyhow::Result<ExitCode> {
    let s = read_semigroup(file)?;
    let value = match (predicate, fuzzy) {
        ("regular", None) => s.is_regular(),
        ("left-regular", None) => s.is_left_regular(),
        ("completely-regular", None) => s.is_completely_regular(),
        ("left-simple", None) => s.is_left_simple(),
        ("simple", None) => s.is_simple(),
        ("completely-simple", None) => s.is_completely_simple(),
        ("commutative", None) => s.is_commutative(),
        ("band", None) => s.is_band(),
        ("semilattice", None) => s.is_semilattice(),
        (name, None) if name.starts_with("fuzzy-") => {
            bail!("predicate {name} needs --fuzzy \"k; v0 v1 ...\"")
        }
        (name, Some(text)) => {
            let f = FuzzySubset::parse(text)?;
            if f.len() != s.order() {
                bail!("fuzzy subset grades {} elements, semigroup has {}", f.len(), s.order());
            }
            match name {
                "fuzzy-subsemigroup" => f.is_fuzzy_subsemigroup(&s),
                "fuzzy-left-ideal" => f.is_fuzzy_left_ideal(&s),
                "fuzzy-right-ideal" => f.is_fuzzy_right_ideal(&s),
                "fuzzy-quasi-ideal" => f.is_fuzzy_quasi_ideal(&s),
                "fuzzy-left-simple" => f.is_left_simple_fuzzy_subsemigroup(&s)?,
                "fuzzy-completely-simple" => f.is_completely_simple_fuzzy_subsemigroup(&s)?,
                other => bail!("unknown fuzzy predicate {other:?}"),
            }
        }
        (name, _) => bail!("unknown predicate {name:?}"),
    };
    println!("{value}");
    Ok(if value { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn correspond(file: &Path, chain: &str, budget: u128) -> anyhow::Result<ExitCode> {
    let s = read_semigroup(file)?;
    let choice: ChainChoice = chain.parse()?;
    let chain = ValueChain::new(choice.resolution_for(&s))?;
    let report = verify_bijections(&s, chain, budget)?;
    for family in &report.families {
        let status = if family.ok { "ok" } else { "FAIL" };
        println!(
            "{}: {} fuzzy = {} regions [{status}]",
            family.family, family.fuzzy_count, family.region_count
        );
        if let Some(w) = &family.witness {
            println!("  witness: {w}");
        }
    }
    Ok(if report.all_ok() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn decompose(file: &Path) -> anyhow::Result<ExitCode> {
    let s = read_semigroup(file)?;
    let sd = semilattice_decomposition(&s);
    let (index, _) = quotient(&s, &sd.congruence);
    let k = index.order();
    println!(
        "order {} over a semilattice of {} class{}",
        s.order(),
        k,
        if k == 1 { "" } else { "es" }
    );
    print!("{}", index.to_text());
    for (i, class) in sd.congruence.classes().iter().enumerate() {
        println!(
            "class {i} = {class}: left simple = {}, completely simple = {}",
            sd.block_left_simple[i], sd.block_completely_simple[i]
        );
    }
    println!("semilattice of left simple: {}", sd.is_semilattice_of_left_simple());
    println!(
        "semilattice of completely simple: {}",
        sd.is_semilattice_of_completely_simple()
    );
    Ok(ExitCode::SUCCESS)
}

fn load_corpus(spec: &str, dedup: Dedup) -> anyhow::Result<Vec<CorpusItem>> {
    let mut items = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some(order) = part.strip_prefix("all-") {
            let order: usize = order
                .parse()
                .with_context(|| format!("bad corpus order in {part:?}"))?;
            for (i, s) in enumerate_semigroups(order, dedup)?.into_iter().enumerate() {
                items.push(CorpusItem {
                    label: format!("{part}/{i}"),
                    semigroup: Ok(s),
                });
            }
        } else if part == "catalog" {
            for (label, s) in standard_catalog(5) {
                items.push(CorpusItem { label, semigroup: Ok(s) });
            }
        } else {
            let semigroup = std::fs::read_to_string(part)
                .map_err(|e| e.to_string())
                .and_then(|text| FiniteSemigroup::parse(&text).map_err(|e| e.to_string()));
            items.push(CorpusItem { label: part.to_string(), semigroup });
        }
    }
    if items.is_empty() {
        bail!("corpus {spec:?} is empty");
    }
    Ok(items)
}

fn verify(
    corpus: &str,
    chain: &str,
    theorems: Option<&str>,
    dedup: &str,
    out: Option<&Path>,
    budget: Option<u128>,
) -> anyhow::Result<ExitCode> {
    let dedup: Dedup = dedup.parse()?;
    let chain: ChainChoice = chain.parse()?;
    let theorems: Vec<TheoremId> = match theorems {
        None => ALL_THEOREMS.to_vec(),
        Some(list) => list
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()?,
    };
    let budgets = match budget {
        Some(b) => Budgets {
            fuzzy_assignments: b,
            composite_evaluations: b.saturating_mul(10),
            ..Budgets::default()
        },
        None => Budgets::default(),
    };
    let items = load_corpus(corpus, dedup)?;
    let report = run_suite(corpus, &items, chain, &theorems, budgets, out)?;
    for row in &report.items {
        if let Some(e) = &row.error {
            eprintln!("ERROR {} on {}: {e}", row.theorem, row.label);
        } else if !row.equivalent {
            let witness = row.witness.as_deref().unwrap_or("no witness");
            eprintln!("FAIL {} on {} ({}): {witness}", row.theorem, row.label, row.semigroup_hash);
        }
    }
    let s = &report.summary;
    eprintln!(
        "{} members, {} verdicts: {} passed, {} failed, {} errors",
        items.len(),
        s.total,
        s.passed,
        s.failed,
        s.errors
    );
    if let Some(path) = out {
        eprintln!("report written to {}", path.display());
    }
    Ok(if report.has_failures() { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
