//! Command-line interface: certify bricks, semibricks, filtrations,
//! subcategory membership and two-term collections from JSON files, run the
//! built-in verification suites, and restrict semibricks and collections
//! along normal subgroups.
//!
//! Exit codes: 0 the property holds / all checks pass, 1 it fails,
//! 2 indeterminate (a cap was exhausted or a hypothesis was not verified),
//! 3 invalid input.

use clap::{Args, Parser, Subcommand};
use modrep::clifford::{clifford_decompose, restrict_semibrick};
use modrep::config::Config;
use modrep::decomp::{filt_member, is_brick, is_semibrick_module, is_semibrick_set};
use modrep::error::Error;
use modrep::jsonio;
use modrep::smc::{check_two_term_smc, restrict_smc};
use modrep::suite::run_suite;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "modrep",
    version,
    about = "exact computations with group-algebra modules"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for randomized searches.
    #[arg(long, global = true, env = "MODREP_SEED")]
    seed: Option<u64>,
    /// Cap on exhaustive enumerations.
    #[arg(long, global = true, env = "MODREP_ENUM_CAP")]
    enum_cap: Option<u64>,
    /// Cap on randomized iterations.
    #[arg(long, global = true, env = "MODREP_ITER_CAP")]
    iter_cap: Option<u64>,
    /// Coefficient field override as `p` or `p^n`, for suites that accept one.
    #[arg(long, global = true, env = "MODREP_FIELD")]
    field: Option<String>,
    /// Output format: json (JSON lines) or text.
    #[arg(long, global = true, env = "MODREP_FORMAT", default_value = "text")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long, global = true, env = "MODREP_OUT")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Certify a property of modules given as JSON files.
    Check {
        #[command(subcommand)]
        kind: CheckKind,
    },
    /// Decompose the restriction of a brick with all certificates.
    Clifford {
        /// Ambient group (JSON).
        #[arg(long)]
        group: PathBuf,
        /// Normal subgroup (JSON).
        #[arg(long)]
        normal: PathBuf,
        /// The brick to restrict (module JSON).
        brick: PathBuf,
        /// Optional tensor-stability certificate: semibrick member files.
        #[arg(long)]
        stable_semibrick: Vec<PathBuf>,
    },
    /// Run a built-in verification suite.
    Suite {
        /// One of: s4a4, functor-identities, appendix, smc.
        name: String,
    },
    /// Restrict a semibrick along a p-power-index normal subgroup.
    RestrictSemibrick {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        normal: PathBuf,
        /// Member modules of the semibrick.
        members: Vec<PathBuf>,
    },
    /// Restrict a two-term collection along a p-power-index normal subgroup.
    RestrictSmc {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        normal: PathBuf,
        collection: PathBuf,
    },
    /// Evaluate membership of a module in a subcategory predicate.
    SubcatMember { predicate: PathBuf, module: PathBuf },
}

#[derive(Subcommand)]
enum CheckKind {
    /// Is the module a brick?
    Brick { module: PathBuf },
    /// Do the modules form a semibrick (one file: module form)?
    Semibrick { modules: Vec<PathBuf> },
    /// Does the collection satisfy the two-term axioms?
    Smc { collection: PathBuf },
    /// Does the first module lie in the extension closure of the rest?
    Filt {
        module: PathBuf,
        bricks: Vec<PathBuf>,
    },
    /// Same as the subcat-member verb.
    Subcat { predicate: PathBuf, module: PathBuf },
}

struct Report {
    payload: serde_json::Value,
    /// Preformatted JSON-lines body; wins over `payload` when set.
    raw_json: Option<String>,
    text: String,
    exit: i32,
}

fn emit(common: &Common, report: Report) -> ExitCode {
    let body = if common.format == "json" {
        match &report.raw_json {
            Some(raw) => raw.clone(),
            None => {
                let mut s = serde_json::to_string(&report.payload).expect("serializable");
                s.push('\n');
                s
            }
        }
    } else {
        let mut s = report.text.clone();
        if !s.ends_with('\n') {
            s.push('\n');
        }
        s
    };
    match &common.out {
        Some(path) => {
            if std::fs::write(path, body).is_err() {
                return ExitCode::from(3);
            }
        }
        None => print!("{}", body),
    }
    ExitCode::from(report.exit as u8)
}

fn config_from(common: &Common) -> Result<Config, Error> {
    let mut cfg = Config::default();
    if let Some(s) = common.seed {
        cfg.seed = s;
    }
    if let Some(c) = common.enum_cap {
        cfg.enum_cap = c;
    }
    if let Some(c) = common.iter_cap {
        cfg.iteration_cap = c;
    }
    if let Some(f) = &common.field {
        let (p, n) = match f.split_once('^') {
            Some((p, n)) => (
                p.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad field `{}`", f)))?,
                n.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad field `{}`", f)))?,
            ),
            None => (
                f.parse::<u32>()
                    .map_err(|_| Error::InvalidInput(format!("bad field `{}`", f)))?,
                1,
            ),
        };
        cfg.field = Some(modrep::Field::new(p, n, None)?.spec());
    }
    Ok(cfg)
}

fn exit_for(e: &Error) -> i32 {
    if e.is_indeterminate() {
        2
    } else {
        3
    }
}

fn verdict(label: &str, holds: bool, witness: serde_json::Value) -> Report {
    Report {
        payload: json!({ "check": label, "holds": holds, "witness": witness }),
        raw_json: None,
        text: format!("{}: {}", label, if holds { "yes" } else { "no" }),
        exit: if holds { 0 } else { 1 },
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let cfg = config_from(&cli.common)?;
    match &cli.command {
        Command::Check { kind } => match kind {
            CheckKind::Brick { module } => {
                let m = jsonio::load_module(module)?;
                let b = is_brick(&m, &cfg)?;
                Ok(verdict("brick", b, json!({ "dim": m.dim() })))
            }
            CheckKind::Semibrick { modules } => {
                if modules.is_empty() {
                    return Err(Error::InvalidInput("no module files given".into()));
                }
                let loaded: Result<Vec<_>, _> =
                    modules.iter().map(|p| jsonio::load_module(p)).collect();
                let loaded = loaded?;
                let ok = if loaded.len() == 1 {
                    is_semibrick_module(&loaded[0], &cfg)?
                } else {
                    is_semibrick_set(&loaded, &cfg)?
                };
                Ok(verdict("semibrick", ok, json!({ "members": loaded.len() })))
            }
            CheckKind::Smc { collection } => {
                let coll = jsonio::load_collection(collection)?;
                let cert = check_two_term_smc(&coll, &cfg)?;
                let holds = cert.passes();
                Ok(Report {
                    payload: json!({ "check": "smc", "holds": holds, "certificate": cert }),
                    raw_json: None,
                    text: format!(
                        "smc: {}{}",
                        if holds { "yes" } else { "no" },
                        if cert.failures.is_empty() {
                            String::new()
                        } else {
                            format!(" ({})", cert.failures.join("; "))
                        }
                    ),
                    exit: if holds { 0 } else { 1 },
                })
            }
            CheckKind::Filt { module, bricks } => {
                let x = jsonio::load_module(module)?;
                let gens: Result<Vec<_>, _> =
                    bricks.iter().map(|p| jsonio::load_module(p)).collect();
                let gens = gens?;
                let filt = filt_member(&x, &gens, &cfg)?;
                let holds = filt.is_some();
                let layers = filt.map(|f| f.quotient_tags.len());
                Ok(verdict("filt", holds, json!({ "layers": layers })))
            }
            CheckKind::Subcat { predicate, module } => {
                let pred = jsonio::load_pred(predicate)?;
                let m = jsonio::load_module(module)?;
                let holds = pred.member(&m, &cfg)?;
                Ok(verdict("subcat-member", holds, json!({})))
            }
        },
        Command::Clifford {
            group,
            normal,
            brick,
            stable_semibrick,
        } => {
            let g = jsonio::load_group(group)?;
            let n = jsonio::load_group(normal)?;
            let s = jsonio::load_module(brick)?;
            let cert: Result<Vec<_>, _> = stable_semibrick
                .iter()
                .map(|p| jsonio::load_module(p))
                .collect();
            let cert = cert?;
            let report =
                clifford_decompose(&s, &g, &n, (!cert.is_empty()).then_some(&cert[..]), &cfg)?;
            let holds = report.all_certified();
            Ok(Report {
                payload: json!({ "check": "clifford", "holds": holds, "report": report }),
                raw_json: None,
                text: format!(
                    "clifford: {} ({} summands)",
                    if holds { "certified" } else { "FAILED" },
                    report.summands.len()
                ),
                exit: if holds { 0 } else { 1 },
            })
        }
        Command::Suite { name } => {
            let report = run_suite(name, &cfg)?;
            Ok(Report {
                // JSON-lines: one check per line plus a summary line
                raw_json: Some(report.to_json_lines()),
                payload: serde_json::Value::Null,
                text: report.to_text(),
                exit: report.exit_code(),
            })
        }
        Command::RestrictSemibrick {
            group,
            normal,
            members,
        } => {
            let g = jsonio::load_group(group)?;
            let n = jsonio::load_group(normal)?;
            let loaded: Result<Vec<_>, _> =
                members.iter().map(|p| jsonio::load_module(p)).collect();
            let loaded = loaded?;
            if loaded.iter().any(|m| !m.group().same_group(&g)) {
                return Err(Error::InvalidInput(
                    "semibrick members are not modules over the given group".into(),
                ));
            }
            let (set, certified) = restrict_semibrick(&loaded, &g, &n, &cfg)?;
            let dims: Vec<usize> = set.iter().map(|m| m.dim()).collect();
            let members_json: Vec<_> = set.iter().map(jsonio::module_to_json).collect();
            Ok(Report {
                payload: json!({
                    "check": "restrict-semibrick",
                    "holds": certified,
                    "dims": dims,
                    "members": members_json,
                }),
                raw_json: None,
                text: format!(
                    "restrict-semibrick: {} members with dims {:?}, certified: {}",
                    set.len(),
                    dims,
                    certified
                ),
                exit: if certified { 0 } else { 1 },
            })
        }
        Command::RestrictSmc {
            group,
            normal,
            collection,
        } => {
            let g = jsonio::load_group(group)?;
            let n = jsonio::load_group(normal)?;
            let coll = jsonio::load_collection(collection)?;
            if !coll.group().same_group(&g) {
                return Err(Error::InvalidInput(
                    "collection items are not modules over the given group".into(),
                ));
            }
            let (restricted, cert) = restrict_smc(&coll, &n, &cfg)?;
            let holds = cert.passes();
            Ok(Report {
                payload: json!({
                    "check": "restrict-smc",
                    "holds": holds,
                    "certificate": cert,
                    "collection": jsonio::collection_to_json(&restricted),
                }),
                raw_json: None,
                text: format!(
                    "restrict-smc: {} items, certified: {}",
                    restricted.items.len(),
                    holds
                ),
                exit: if holds { 0 } else { 1 },
            })
        }
        Command::SubcatMember { predicate, module } => {
            let pred = jsonio::load_pred(predicate)?;
            let m = jsonio::load_module(module)?;
            let holds = pred.member(&m, &cfg)?;
            Ok(verdict("subcat-member", holds, json!({})))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => emit(&cli.common, report),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_for(&e) as u8)
        }
    }
}
