use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::{Catalog, CatalogEntry, EntryBody, Images};
use super::report::{list, VerificationReport};
use crate::abelian::{aut_group, aut_order, tensor_kernel, AbGroup, AbelianTable};
use crate::actions::{
    check_jo2, check_lema1, gamma_functoriality_counterexample, gamma_series_default, jo3_counterexample,
    nil_bound_check, nil_order, witt_hall_counterexample, witt_hall_value, Action,
};
use crate::error::{Error, Result};
use crate::frattini::{
    all_subgroups, check_corolario, check_frattini_characteristic, check_nuevolema, check_propodos, check_propouno,
    check_uno, frattini_subgroup,
};
use crate::grpcore::{
    center, is_nilpotent_group, is_normal, lower_central_series_default, table_automorphisms, GroupTable, Permutation,
    SeriesReport, Subgroup,
};
use crate::homotopy::{
    check_coeficientes, check_cuatro, check_importante, check_nuevo, check_remark_final, check_tres, eshp,
    eshp_by_definition, EMSpace, ReductionReport,
};
use crate::localize::{check_dos, check_frattini_localization, check_lema2, check_uf};
use crate::num::{factorize, prime_of_power};
use crate::Limits;

/// A check id with the statement it exercises and the operation behind it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CheckInfo {
    pub id: &'static str,
    pub label: &'static str,
    pub operation: &'static str,
}

/// Every check, sorted by id.
pub const CHECKS: &[CheckInfo] = &[
    CheckInfo { id: "cor-coeficientes", label: "Corollary coeficientes", operation: "homotopy::check_coeficientes" },
    CheckInfo { id: "cor-corolario", label: "Corollary corolario", operation: "frattini::check_corolario" },
    CheckInfo { id: "cor-nuevo", label: "Corollary nuevo", operation: "homotopy::check_nuevo" },
    CheckInfo {
        id: "frattini-characteristic",
        label: "Proposition nuevolema (Phi(A) characteristic)",
        operation: "frattini::check_frattini_characteristic",
    },
    CheckInfo {
        id: "frattini-localization",
        label: "Proposition nuevolema (Phi(A)_(p) = Phi(A_(p)))",
        operation: "localize::check_frattini_localization",
    },
    CheckInfo {
        id: "gamma-functoriality",
        label: "Gamma^m(Gamma^n(A)) = Gamma^(m+n)(A)",
        operation: "actions::gamma_functoriality_counterexample",
    },
    CheckInfo { id: "lemma-jo", label: "Lemma jo", operation: "actions::check_witt_hall" },
    CheckInfo { id: "lemma-jo2", label: "Lemma jo2", operation: "actions::check_jo2" },
    CheckInfo { id: "lemma-jo3", label: "Lemma jo3", operation: "actions::check_jo3" },
    CheckInfo { id: "lemma-lema1", label: "Lemma lema1", operation: "actions::check_lema1" },
    CheckInfo { id: "lemma-lema2", label: "Lemma lema2", operation: "localize::check_lema2" },
    CheckInfo { id: "prop-jo4", label: "Proposition jo4", operation: "actions::nil_bound_check" },
    CheckInfo { id: "prop-nuevolema", label: "Proposition nuevolema", operation: "frattini::check_nuevolema" },
    CheckInfo { id: "prop-propodos", label: "Proposition propodos", operation: "frattini::check_propodos" },
    CheckInfo { id: "prop-propouno", label: "Proposition propouno", operation: "frattini::check_propouno" },
    CheckInfo { id: "prop-uf", label: "Proposition uf", operation: "localize::check_uf" },
    CheckInfo { id: "remark-final", label: "final Remark", operation: "homotopy::check_remark_final" },
    CheckInfo { id: "remark-importante", label: "Remark importante", operation: "homotopy::check_importante" },
    CheckInfo { id: "thm-cuatro", label: "Theorem cuatro", operation: "homotopy::check_cuatro" },
    CheckInfo { id: "thm-dos", label: "Theorem dos", operation: "localize::check_dos" },
    CheckInfo { id: "thm-tres", label: "Theorem tres", operation: "homotopy::check_tres" },
    CheckInfo { id: "thm-uno", label: "Theorem uno", operation: "frattini::check_uno" },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub limits: Limits,
    /// Degree `n` of the `K(A, n)` models.
    pub degree: u32,
    /// Record wall time per report (makes output nondeterministic).
    pub timings: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { limits: Limits::default(), degree: 2, timings: false }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub reports: Vec<VerificationReport>,
    pub exit_code: i32,
}

impl SuiteResult {
    pub fn count(&self, outcome: super::report::Outcome) -> usize {
        self.reports.iter().filter(|r| r.outcome == outcome).count()
    }
}

/// The checks selected by a comma-separated list of id substrings; empty
/// or `all` selects everything.
pub fn select_checks(scope: &str) -> Vec<&'static CheckInfo> {
    let parts: Vec<&str> = scope.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() || parts == ["all"] {
        return CHECKS.iter().collect();
    }
    CHECKS.iter().filter(|c| parts.iter().any(|p| c.id.contains(p))).collect()
}

/// Runs the selected checks over the catalog. Entries are processed in
/// parallel; reports come back in catalog order, then check id.
pub fn run_suite(scope: &str, catalog: &Catalog, opts: &SuiteOptions) -> SuiteResult {
    let checks = select_checks(scope);
    let tasks: Vec<(&CatalogEntry, &CheckInfo)> =
        catalog.entries.iter().flat_map(|e| checks.iter().map(move |c| (e, *c))).collect();
    let reports: Vec<VerificationReport> = tasks
        .par_iter()
        .map(|(e, c)| {
            let start = Instant::now();
            let mut rs = run_check(c.id, e, opts);
            if opts.timings {
                let ms = start.elapsed().as_secs_f64() * 1e3;
                rs.iter_mut().for_each(|r| r.wall_ms = Some(ms));
            }
            rs
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    let failed = reports.iter().any(|r| r.outcome == super::report::Outcome::Fail);
    SuiteResult { reports, exit_code: i32::from(failed) }
}

type Witness = Vec<(String, String)>;

fn w(k: &str, v: impl ToString) -> (String, String) {
    (k.to_string(), v.to_string())
}

/// `Ok((true, w))` is a pass, `Ok((false, w))` a fail; unmet hypotheses
/// and size refusals become `na`, anything else a fail with the error.
fn settle(check: &str, inst: &str, r: Result<(bool, Witness)>) -> VerificationReport {
    match r {
        Ok((true, wit)) => VerificationReport::pass(check, inst, wit),
        Ok((false, wit)) => {
            let wit = if wit.is_empty() { vec![w("holds", false)] } else { wit };
            VerificationReport::fail(check, inst, wit)
        }
        Err(Error::NotApplicable(s)) => VerificationReport::na(check, inst, s),
        Err(Error::NotNilpotent) => VerificationReport::na(check, inst, "the target group is not nilpotent"),
        Err(e @ Error::TooLarge { .. }) => VerificationReport::na(check, inst, e.to_string()),
        Err(e) => VerificationReport::fail(check, inst, vec![w("error", e)]),
    }
}

fn series_witness(key: &str, s: &SeriesReport) -> (String, String) {
    w(key, list(s.orders()))
}

fn run_check(id: &str, e: &CatalogEntry, opts: &SuiteOptions) -> Vec<VerificationReport> {
    let lim = &opts.limits;
    let inst = e.name.as_str();
    match (&e.body, id) {
        (EntryBody::Action(a), _) => match (&a.action, id) {
            (Some(act), _) => action_check(id, inst, act, a.abelian.as_ref(), &a.images, opts),
            (None, "thm-cuatro") => match (&a.images, &a.abelian) {
                (Images::Matrices(m), Some(g)) => vec![cuatro(inst, g, m, lim)],
                _ => Vec::new(),
            },
            _ => Vec::new(),
        },
        (EntryBody::PermGroup { table, .. }, _) => group_check(id, inst, table, None, opts),
        (EntryBody::AbGroup { group, table }, _) => {
            let mut out = match table {
                Some(t) => group_check(id, inst, &t.table, Some((group, t)), opts),
                None => Vec::new(),
            };
            out.extend(abelian_check(id, inst, group, opts));
            out
        }
        (EntryBody::Fixture { .. }, _) => Vec::new(),
    }
}

fn action_check(
    id: &str,
    inst: &str,
    act: &Action,
    abelian: Option<&AbGroup>,
    images: &Images,
    opts: &SuiteOptions,
) -> Vec<VerificationReport> {
    let lim = &opts.limits;
    let r = match id {
        "lemma-jo" => Ok(match witt_hall_counterexample(act) {
            None => {
                let triples = act.actor().order() * act.actor().order() * act.target().order();
                (true, vec![w("triples", triples)])
            }
            Some((f, g, b)) => (
                false,
                vec![w("f", f), w("g", g), w("b", b), w("value", witt_hall_value(act, f, g, b))],
            ),
        }),
        "gamma-functoriality" => {
            let gamma = gamma_series_default(act);
            Ok(match gamma_functoriality_counterexample(act) {
                None => (true, vec![series_witness("gamma", &gamma)]),
                Some((n, m)) => (false, vec![series_witness("gamma", &gamma), w("n", n), w("m", m)]),
            })
        }
        "lemma-lema1" => check_lema1(act, lim).map(|ok| {
            let g1 = gamma_series_default(act).terms.get(1).map_or(1, Subgroup::order);
            (ok, vec![w("gamma1", g1)])
        }),
        "lemma-lema2" => lema2(act),
        "prop-uf" => check_uf(act).map(|u| {
            let local = list(u.local.iter().map(|(p, r)| format!("{p}:{}", r.map_or("none".into(), |x| x.to_string()))));
            (u.holds, vec![w("nilpotent", u.nilpotent), w("local", local)])
        }),
        "prop-nuevolema" => check_nuevolema(act, lim).map(|ok| (ok, vec![w("nil", nil_str(act))])),
        "prop-propodos" => check_propodos(act).map(|b| (b.holds, vec![w("nil", bound_side(b.lhs)), w("bound", b.rhs)])),
        "prop-propouno" => check_propouno(act).map(|ok| (ok, vec![w("actor_order", act.actor().order())])),
        "cor-corolario" => check_corolario(act).map(|ok| (ok, vec![w("nil", nil_str(act))])),
        "lemma-jo2" => jo2(act, lim),
        "lemma-jo3" => jo3_counterexample(act).map(|c| match c {
            None => (true, vec![w("nil", nil_str(act))]),
            Some((n, m)) => (false, vec![w("n", n), w("m", m)]),
        }),
        "prop-jo4" => nil_bound_check(act).map(|b| (b.holds, vec![w("class", b.lhs), w("bound", b.rhs)])),
        "thm-dos" => check_dos(act).map(|ok| (ok, vec![w("actor_order", act.actor().order())])),
        "thm-uno" => check_uno(act, lim).map(|ok| (ok, vec![w("actor_order", act.actor().order())])),
        "cor-nuevo" => check_nuevo(act).map(reduction),
        "cor-coeficientes" => check_coeficientes(act).map(reduction),
        "thm-cuatro" => {
            return match (images, abelian) {
                (Images::Matrices(m), Some(g)) => vec![cuatro(inst, g, m, lim)],
                _ => Vec::new(),
            }
        }
        _ => return Vec::new(),
    };
    vec![settle(id, inst, r)]
}

fn nil_str(act: &Action) -> String {
    nil_order(act).map_or("none".into(), |r| r.to_string())
}

fn bound_side(x: usize) -> String {
    if x == usize::MAX {
        "none".into()
    } else {
        x.to_string()
    }
}

fn reduction(r: ReductionReport) -> (bool, Witness) {
    let nil = r.action_nil.map_or("none".into(), |x| x.to_string());
    (r.holds(), vec![w("actor_nilpotent", r.actor_nilpotent), w("nil", nil)])
}

fn lema2(act: &Action) -> Result<(bool, Witness)> {
    if !is_nilpotent_group(act.target()) {
        return Err(Error::NotNilpotent);
    }
    let gamma = gamma_series_default(act);
    let top = gamma.terms.len();
    let primes: Vec<u64> = factorize(act.target().order() as u64).into_iter().map(|(p, _)| p).collect();
    for &p in &primes {
        for m in 0..=top {
            if !check_lema2(act, p, m)? {
                return Ok((false, vec![w("p", p), w("m", m)]));
            }
        }
    }
    Ok((true, vec![w("primes", list(&primes)), w("max_m", top)]))
}

/// `H = G` against every normal `K`: the whole lattice when it is small,
/// otherwise the lower central series and the center.
fn jo2(act: &Action, lim: &Limits) -> Result<(bool, Witness)> {
    let g = act.actor();
    let (family, ks): (&str, Vec<Subgroup>) = match all_subgroups(g, lim) {
        Ok(all) => ("lattice", all.into_iter().filter(|k| is_normal(g, k)).collect()),
        Err(Error::TooLarge { .. }) => {
            let mut ks = lower_central_series_default(g).terms;
            ks.push(center(g));
            ks.push(g.trivial());
            ("lcs+center", ks)
        }
        Err(e) => return Err(e),
    };
    let h = g.whole();
    for k in &ks {
        if !check_jo2(act, &h, k)? {
            return Ok((false, vec![w("k_order", k.order()), w("k", list(k.members()))]));
        }
    }
    Ok((true, vec![w("family", family), w("normal_subgroups", ks.len())]))
}

fn cuatro(inst: &str, a: &AbGroup, mats: &[crate::abelian::AbHom], lim: &Limits) -> VerificationReport {
    let r = check_cuatro(a, mats, lim).map(|r| {
        let rejected = list(r.candidates.iter().map(|c| c.rejected_at.map_or("none".into(), |p| p.to_string())));
        (
            r.holds(),
            vec![
                w("candidates", r.candidates.len()),
                w("survivors", r.survivors),
                w("rejected_at", rejected),
                w("generated_order", r.generated_order),
                w("gamma1_in_torsion", r.gamma1_in_torsion),
                w("nil", r.nil.map_or("none".into(), |x| x.to_string())),
            ],
        )
    });
    settle("thm-cuatro", inst, r)
}

/// Automorphisms of a group entry as permutations of its elements.
fn automorphisms_of(t: &GroupTable, ab: Option<(&AbGroup, &AbelianTable)>, lim: &Limits) -> Result<Vec<Permutation>> {
    if let Some((a, at)) = ab {
        match aut_group(a, lim) {
            Ok(aut) => return aut.maps().iter().map(|f| at.permutation_of(f)).collect(),
            Err(Error::TooLarge { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    table_automorphisms(t, 2_000_000)
}

fn group_check(
    id: &str,
    inst: &str,
    t: &GroupTable,
    ab: Option<(&AbGroup, &AbelianTable)>,
    opts: &SuiteOptions,
) -> Vec<VerificationReport> {
    let lim = &opts.limits;
    let r = match id {
        "frattini-characteristic" => automorphisms_of(t, ab, lim).and_then(|autos| {
            let phi = frattini_subgroup(t, lim)?;
            let ok = check_frattini_characteristic(t, &autos, lim)?;
            Ok((ok, vec![w("phi_order", phi.order()), w("automorphisms", autos.len())]))
        }),
        "frattini-localization" => {
            if !is_nilpotent_group(t) {
                Err(Error::NotNilpotent)
            } else {
                let primes: Vec<u64> = factorize(t.order() as u64).into_iter().map(|(p, _)| p).collect();
                let mut bad = None;
                for &p in &primes {
                    match check_frattini_localization(t, p, lim) {
                        Ok(true) => {}
                        Ok(false) => {
                            bad = Some(p);
                            break;
                        }
                        Err(e) => return vec![settle(id, inst, Err(e))],
                    }
                }
                Ok(match bad {
                    None => (true, vec![w("primes", list(&primes))]),
                    Some(p) => (false, vec![w("p", p)]),
                })
            }
        }
        _ => return Vec::new(),
    };
    vec![settle(id, inst, r)]
}

fn abelian_check(id: &str, inst: &str, a: &AbGroup, opts: &SuiteOptions) -> Vec<VerificationReport> {
    let lim = &opts.limits;
    let p_group = a.p_group_prime();
    let r = match id {
        "prop-propouno" | "cor-corolario" => {
            let Some(p) = p_group else { return Vec::new() };
            let r = tensor_kernel(a, p, lim).and_then(|k| {
                let act = Action::tautological(&k, lim.order_cap)?.0;
                if id == "prop-propouno" {
                    Ok((crate::num::is_power_of(k.order() as u64, p), vec![w("p", p), w("kernel_order", k.order())]))
                } else {
                    let gamma = gamma_series_default(&act);
                    Ok((gamma.is_nilpotent(), vec![w("kernel_order", k.order()), series_witness("gamma", &gamma)]))
                }
            });
            return vec![settle(id, &format!("{inst}:kernel"), r)];
        }
        "thm-tres" => {
            let Some(p) = p_group else { return Vec::new() };
            tres(a, p, opts)
        }
        "remark-importante" => {
            let Some((p, r)) = cyclic_prime_power(a).filter(|&(_, r)| r >= 2) else { return Vec::new() };
            check_importante(p, r, opts.degree, lim).map(|rep| {
                (
                    rep.holds(),
                    vec![
                        w("rho", rep.rho),
                        w("esharp_order", rep.esharp_order),
                        w("eshp_order", rep.eshp_order),
                        w("intersection_order", rep.intersection_order),
                        w("rho_in_eshp", rep.rho_in_eshp),
                    ],
                )
            })
        }
        "remark-final" => {
            if *a != AbGroup::elementary(2, 2) {
                return Vec::new();
            }
            check_remark_final(opts.degree, 8, lim).map(|rep| {
                (
                    rep.holds(),
                    vec![
                        w("e_order", rep.e_order),
                        w("e_nilpotent", rep.e_nilpotent),
                        w("stable_order", rep.stable_order.map_or("none".into(), |x| x.to_string())),
                        w("eshp3_is_e", rep.eshp3_is_everything),
                        w("gl2_in_eshp2", rep.witnesses_in_eshp2),
                        w("gl2_fail_at_3", rep.witnesses_fail_at_3),
                        w("gl2_nontrivial_through_depth", rep.depth),
                    ],
                )
            })
        }
        _ => return Vec::new(),
    };
    vec![settle(id, inst, r)]
}

/// Below this many automorphisms `𝓔♯ₚ` is also recomputed by filtering all
/// of `Aut(A)`.
const DEFINITION_PATH_LIMIT: u128 = 200_000;

fn tres(a: &AbGroup, p: u64, opts: &SuiteOptions) -> Result<(bool, Witness)> {
    let lim = &opts.limits;
    let x = EMSpace::new(a.clone(), opts.degree)?;
    let rep = check_tres(&x, p, lim)?;
    let mut wit = vec![
        w("p", p),
        w("order", rep.order),
        w("class", rep.class.map_or("none".into(), |c| c.to_string())),
        w("quotient_order", rep.quotient_order),
    ];
    let mut ok = rep.holds();
    if aut_order(a).is_some_and(|n| n <= DEFINITION_PATH_LIMIT) {
        let e = eshp(&x, p, lim)?;
        let by_def = eshp_by_definition(&x, p, lim)?;
        let same = by_def.len() == e.order() && by_def.iter().all(|f| e.index_of(f).is_some());
        ok &= same;
        wit.push(w("definition", if same { "agrees" } else { "differs" }));
    } else {
        wit.push(w("definition", "skipped"));
    }
    Ok((ok, wit))
}

/// `(p, r)` when `a` is `Z/pʳ`.
pub fn cyclic_prime_power(a: &AbGroup) -> Option<(u64, u32)> {
    match (a.free_rank(), a.torsion()) {
        (0, [d]) => prime_of_power(*d).map(|p| (p, d.ilog(p))),
        _ => None,
    }
}
