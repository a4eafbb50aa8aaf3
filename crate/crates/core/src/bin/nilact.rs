use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use nilact::abelian::{aut_group, AbHom};
use nilact::actions::gamma_series;
use nilact::cli::{default_catalog, list, parse_catalog_with, run_suite, select_checks, Catalog, SuiteOptions};
use nilact::frattini::{frattini_factor, frattini_subgroup};
use nilact::grpcore::{lower_central_series, GroupTable, SeriesReport, Verdict};
use nilact::homotopy::{esharp, eshp, EMSpace};
use nilact::localize::{localize_action, localize_group};
use nilact::{Error, Limits};

/// Nilpotent group actions over a catalog of small groups.
#[derive(Parser)]
#[command(name = "nilact", version)]
struct Cli {
    /// Catalog file; the bundled catalog when absent.
    #[arg(long, global = true)]
    catalog: Option<std::path::PathBuf>,
    /// Largest group order built during a run.
    #[arg(long, global = true, env = "NILACT_CAP")]
    cap: Option<usize>,
    /// Emit JSON instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    /// Depth cap for descending series.
    #[arg(long, global = true)]
    max_depth: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Frattini subgroup and factor of a catalog group.
    Frattini { group: String },
    /// Lower central series of a catalog group.
    Lcs { group: String },
    /// G-commutator series of a catalog action.
    Series { action: String },
    /// Localization of a nilpotent group, or of an action on one.
    Localize {
        name: String,
        #[arg(long)]
        prime: u64,
    },
    /// Automorphism group of a finite abelian catalog group.
    Aut { group: String },
    /// The subgroup of self-equivalences of K(A, n) trivial on Z/p homotopy.
    Eshp {
        group: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Run the verification suite.
    Verify {
        /// Comma-separated check id substrings; all checks when absent.
        #[arg(long, default_value = "")]
        scope: String,
        /// Print the check id, label and operation table and exit.
        #[arg(long)]
        list_checks: bool,
        /// Add wall time to each record.
        #[arg(long)]
        timings: bool,
        #[arg(long, default_value_t = 2)]
        degree: u32,
    },
    /// Catalog inspection.
    Catalog {
        #[command(subcommand)]
        what: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// One line per entry.
    Print,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("nilact: {e}");
            ExitCode::from(2)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    match cli.cap {
        Some(cap) => Limits::with_order_cap(cap),
        None => Limits::default(),
    }
}

fn load(cli: &Cli) -> Result<Catalog, Error> {
    let lim = limits(cli);
    match &cli.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::NotApplicable(format!("cannot read {}: {e}", path.display())))?;
            parse_catalog_with(&text, &lim)
        }
        None => default_catalog(&lim),
    }
}

fn table<'a>(cat: &'a Catalog, name: &str) -> Result<&'a GroupTable, Error> {
    cat.get(name)
        .and_then(|e| e.group_table())
        .ok_or_else(|| Error::NotApplicable(format!("`{name}` is not a finite catalog group")))
}

fn verdict(s: &SeriesReport) -> String {
    match s.verdict {
        Verdict::NilpotentOfOrder { order } => format!("nilpotent-of-order-{order}"),
        Verdict::StabilizedNontrivial { depth } => format!("stabilized-at-{depth}"),
        Verdict::DepthCapReached { depth } => format!("depth-cap-{depth}"),
    }
}

/// One line to stdout; a closed pipe ends the process quietly.
fn say(line: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{line}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

/// Prints `pairs` as one `key=value` line or one JSON object.
fn emit(cli: &Cli, pairs: &[(&str, serde_json::Value)]) {
    if cli.json {
        let obj: serde_json::Map<String, serde_json::Value> =
            pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        say(&serde_json::Value::Object(obj).to_string());
    } else {
        let parts: Vec<String> = pairs
            .iter()
            .map(|(k, v)| match v {
                serde_json::Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect();
        say(&parts.join(" "));
    }
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let lim = limits(cli);
    if let Command::Verify { list_checks: true, scope, .. } = &cli.command {
        for c in select_checks(scope) {
            emit(cli, &[("check", json!(c.id)), ("label", json!(c.label)), ("operation", json!(c.operation))]);
        }
        return Ok(0);
    }
    let cat = load(cli)?;
    match &cli.command {
        Command::Frattini { group } => {
            let g = table(&cat, group)?;
            let phi = frattini_subgroup(g, &lim)?;
            let q = frattini_factor(g, &lim)?;
            emit(
                cli,
                &[
                    ("group", json!(group)),
                    ("order", json!(g.order())),
                    ("phi_order", json!(phi.order())),
                    ("phi", json!(list(phi.members().iter().map(|&x| g.label(x))))),
                    ("factor_order", json!(q.table.order())),
                ],
            );
        }
        Command::Lcs { group } => {
            let g = table(&cat, group)?;
            let s = lower_central_series(g, cli.max_depth.unwrap_or(g.order().max(1)));
            emit(cli, &[("group", json!(group)), ("orders", json!(list(s.orders()))), ("verdict", json!(verdict(&s)))]);
        }
        Command::Series { action } => {
            let act = cat
                .get(action)
                .and_then(|e| e.action())
                .and_then(|a| a.action.as_ref())
                .ok_or_else(|| Error::NotApplicable(format!("`{action}` is not a catalog action on a finite group")))?;
            let s = gamma_series(act, cli.max_depth.unwrap_or(act.target().order().max(1)));
            emit(
                cli,
                &[
                    ("action", json!(action)),
                    ("actor_order", json!(act.actor().order())),
                    ("target_order", json!(act.target().order())),
                    ("orders", json!(list(s.orders()))),
                    ("verdict", json!(verdict(&s))),
                ],
            );
        }
        Command::Localize { name, prime } => {
            let entry = cat.get(name).ok_or_else(|| Error::NotApplicable(format!("no catalog entry `{name}`")))?;
            if let Some(act) = entry.action().and_then(|a| a.action.as_ref()) {
                let (local, loc) = localize_action(act, *prime)?;
                let s = gamma_series(&local, cli.max_depth.unwrap_or(local.target().order().max(1)));
                emit(
                    cli,
                    &[
                        ("action", json!(name)),
                        ("prime", json!(prime)),
                        ("local_order", json!(loc.subgroup.order())),
                        ("orders", json!(list(s.orders()))),
                        ("verdict", json!(verdict(&s))),
                    ],
                );
            } else {
                let g = table(&cat, name)?;
                let loc = localize_group(g, *prime)?;
                emit(
                    cli,
                    &[
                        ("group", json!(name)),
                        ("prime", json!(prime)),
                        ("local_order", json!(loc.subgroup.order())),
                        ("members", json!(list(loc.subgroup.members().iter().map(|&x| g.label(x))))),
                    ],
                );
            }
        }
        Command::Aut { group } => {
            let a = cat
                .get(group)
                .and_then(|e| e.abgroup())
                .ok_or_else(|| Error::NotApplicable(format!("`{group}` is not a catalog abgroup")))?;
            let aut = aut_group(a, &lim)?;
            let gens: Vec<String> = aut.table.generators().iter().map(|&g| matrix(aut.map(g))).collect();
            let class = lower_central_series(&aut.table, aut.order().max(1));
            emit(
                cli,
                &[
                    ("group", json!(group)),
                    ("order", json!(aut.order())),
                    ("generators", json!(list(gens))),
                    ("lcs_orders", json!(list(class.orders()))),
                ],
            );
        }
        Command::Eshp { group, prime, degree } => {
            let a = cat
                .get(group)
                .and_then(|e| e.abgroup())
                .ok_or_else(|| Error::NotApplicable(format!("`{group}` is not a catalog abgroup")))?;
            let x = EMSpace::new(a.clone(), *degree)?;
            let e = eshp(&x, *prime, &lim)?;
            let s = lower_central_series(&e.table, e.order().max(1));
            let gens: Vec<String> = e.table.generators().iter().map(|&g| matrix(e.map(g))).collect();
            emit(
                cli,
                &[
                    ("group", json!(group)),
                    ("prime", json!(prime)),
                    ("degree", json!(degree)),
                    ("order", json!(e.order())),
                    ("esharp_order", json!(esharp(&x).order())),
                    ("generators", json!(list(gens))),
                    ("lcs_orders", json!(list(s.orders()))),
                    ("verdict", json!(verdict(&s))),
                ],
            );
        }
        Command::Verify { scope, timings, degree, .. } => {
            let opts = SuiteOptions { limits: lim, degree: *degree, timings: *timings };
            let res = run_suite(scope, &cat, &opts);
            for r in &res.reports {
                say(&if cli.json { r.to_json() } else { r.to_line() });
            }
            return Ok(res.exit_code as u8);
        }
        Command::Catalog { what: CatalogCommand::Print } => {
            for e in &cat.entries {
                let prov = match &e.provenance {
                    nilact::cli::Provenance::Computed => "computed".to_string(),
                    nilact::cli::Provenance::Sourced { citation } => format!("sourced({citation})"),
                };
                if cli.json {
                    emit(
                        cli,
                        &[
                            ("name", json!(e.name)),
                            ("kind", json!(e.kind())),
                            ("line", json!(e.line)),
                            ("provenance", json!(prov)),
                            ("detail", json!(e.describe())),
                        ],
                    );
                } else {
                    say(&format!("{} kind={} line={} provenance={prov:?} {}", e.name, e.kind(), e.line, e.describe()));
                }
            }
        }
    }
    Ok(0)
}

/// `[a b; c d]` without spaces: `[a,b;c,d]`.
fn matrix(f: &AbHom) -> String {
    let rows: Vec<String> = f.matrix().iter().map(list).collect();
    format!("[{}]", rows.join(";"))
}
