//! The line-oriented catalog format.
//!
//! ```text
//! # comment
//! group <name> perm <degree> : <gen> <gen> ...
//! abgroup <name> : <d1> <d2> ...
//! action <name> <actor> on <target> : <images>
//! fixture <name> : <citation> : <prose>
//! ```
//!
//! A permutation generator is a run of adjacent cycles such as `(0 1)(2 3)`,
//! with `()` for the identity; generators are separated by whitespace. In
//! `abgroup`, `0` is a free factor `Z`.
//!
//! The actor of an action is a catalog group, `sub` (the group generated by
//! the listed automorphisms) or `aut` (all automorphisms of the target). The
//! images are `auto` (conjugation, actor and target the same group), `trivial`,
//! `all` (only with `aut`), or a list `0-><image>, 1-><image>, ...` giving the
//! image of each actor generator in order. An image is a permutation of the
//! target's element indices or, for an `abgroup` target, an integer matrix
//! `[a b; c d]` in the factor coordinates.

use std::collections::HashMap;

use serde::Serialize;

use crate::abelian::{ab_to_table, aut_group, AbGroup, AbHom, AbelianTable, AutGroup};
use crate::actions::Action;
use crate::error::{Error, Result};
use crate::grpcore::{group_from_perms, table_automorphisms, GroupTable, Permutation};
use crate::Limits;

/// The catalog shipped with the binary.
pub const DEFAULT_CATALOG: &str = include_str!("../../data/default.catalog");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "provenance", rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    Sourced { citation: String },
}

#[derive(Debug, Clone)]
pub enum EntryBody {
    PermGroup { degree: usize, generators: Vec<Permutation>, table: GroupTable },
    AbGroup { group: AbGroup, table: Option<AbelianTable> },
    Action(ActionEntry),
    Fixture { prose: String },
}

/// How an action's generator images were written.
#[derive(Debug, Clone)]
pub enum Images {
    Conjugation,
    Trivial,
    FullAut,
    Permutations(Vec<Permutation>),
    Matrices(Vec<AbHom>),
}

#[derive(Debug, Clone)]
pub struct ActionEntry {
    pub actor: String,
    pub target: String,
    pub images: Images,
    /// `None` for a target with free factors, which has no element table.
    pub action: Option<Action>,
    /// The target as an abelian group, when it is a catalog `abgroup`.
    pub abelian: Option<AbGroup>,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub line: usize,
    pub provenance: Provenance,
    pub body: EntryBody,
}

impl CatalogEntry {
    pub fn kind(&self) -> &'static str {
        match self.body {
            EntryBody::PermGroup { .. } => "perm-group",
            EntryBody::AbGroup { .. } => "ab-group",
            EntryBody::Action(_) => "action",
            EntryBody::Fixture { .. } => "fixture",
        }
    }

    /// The element table of a group entry, if it has one.
    pub fn group_table(&self) -> Option<&GroupTable> {
        match &self.body {
            EntryBody::PermGroup { table, .. } => Some(table),
            EntryBody::AbGroup { table: Some(t), .. } => Some(&t.table),
            _ => None,
        }
    }

    pub fn action(&self) -> Option<&ActionEntry> {
        match &self.body {
            EntryBody::Action(a) => Some(a),
            _ => None,
        }
    }

    pub fn abgroup(&self) -> Option<&AbGroup> {
        match &self.body {
            EntryBody::AbGroup { group, .. } => Some(group),
            _ => None,
        }
    }

    /// One-line description used by `catalog print`.
    pub fn describe(&self) -> String {
        match &self.body {
            EntryBody::PermGroup { degree, table, .. } => format!("order={} degree={degree}", table.order()),
            EntryBody::AbGroup { group, .. } => match group.order() {
                Some(n) => format!("group={group} order={n}"),
                None => format!("group={group} order=infinite"),
            },
            EntryBody::Action(a) => {
                let sizes = match &a.action {
                    Some(act) => format!(
                        " actor_order={} target_order={} faithful={}",
                        act.actor().order(),
                        act.target().order(),
                        act.is_faithful()
                    ),
                    None => String::new(),
                };
                format!("actor={} target={}{sizes}", a.actor, a.target)
            }
            EntryBody::Fixture { prose } => format!("prose={prose:?}"),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    index: HashMap<String, usize>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// [`parse_catalog_with`] under the default limits.
pub fn parse_catalog(text: &str) -> Result<Catalog> {
    parse_catalog_with(text, &Limits::default())
}

/// The bundled catalog.
pub fn default_catalog(limits: &Limits) -> Result<Catalog> {
    parse_catalog_with(DEFAULT_CATALOG, limits)
}

pub fn parse_catalog_with(text: &str, limits: &Limits) -> Result<Catalog> {
    let mut cat = Catalog::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let entry = parse_line(&cat, raw, line, limits)?;
        if cat.index.contains_key(&entry.name) {
            return Err(Error::Validation { entry: entry.name, message: "duplicate entry name".into() });
        }
        cat.index.insert(entry.name.clone(), cat.entries.len());
        cat.entries.push(entry);
    }
    Ok(cat)
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn invalid(entry: &str, e: impl std::fmt::Display) -> Error {
    Error::Validation { entry: entry.to_string(), message: e.to_string() }
}

/// Splits `raw` at the first `:` into whitespace tokens (with 1-based
/// columns) and the remaining text with the column where it starts.
fn split_head(raw: &str, line: usize) -> Result<(Vec<(usize, &str)>, usize, &str)> {
    let colon = raw.find(':').ok_or_else(|| parse_err(line, raw.chars().count() + 1, "expected `:`"))?;
    let head = &raw[..colon];
    let mut tokens = Vec::new();
    let mut start = None;
    for (b, c) in head.char_indices().chain(std::iter::once((head.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(b),
            (true, Some(s)) => {
                tokens.push((head[..s].chars().count() + 1, &head[s..b]));
                start = None;
            }
            _ => {}
        }
    }
    let body_col = raw[..colon].chars().count() + 2;
    Ok((tokens, body_col, &raw[colon + 1..]))
}

fn expect_tokens<'a>(
    tokens: &[(usize, &'a str)],
    shape: &[Option<&str>],
    line: usize,
    usage: &str,
) -> Result<Vec<(usize, &'a str)>> {
    if tokens.len() != shape.len() {
        let col = tokens.get(shape.len()).or(tokens.last()).map_or(1, |t| t.0);
        return Err(parse_err(line, col, format!("expected `{usage}`")));
    }
    for (t, want) in tokens.iter().zip(shape) {
        if let Some(w) = want {
            if t.1 != *w {
                return Err(parse_err(line, t.0, format!("expected `{w}`, found `{}`", t.1)));
            }
        }
    }
    Ok(tokens.to_vec())
}

fn parse_line(cat: &Catalog, raw: &str, line: usize, limits: &Limits) -> Result<CatalogEntry> {
    let (tokens, body_col, body) = split_head(raw, line)?;
    let keyword = tokens.first().map_or("", |t| t.1);
    match keyword {
        "group" => {
            let t = expect_tokens(&tokens, &[None, None, Some("perm"), None], line, "group <name> perm <degree>")?;
            let name = t[1].1.to_string();
            let degree: usize =
                t[3].1.parse().map_err(|_| parse_err(line, t[3].0, format!("bad degree `{}`", t[3].1)))?;
            let generators = parse_perm_list(body, body_col, line, degree)?;
            let (table, _) = group_from_perms(degree, &generators, limits.order_cap).map_err(|e| invalid(&name, e))?;
            Ok(CatalogEntry {
                name,
                line,
                provenance: Provenance::Computed,
                body: EntryBody::PermGroup { degree, generators, table },
            })
        }
        "abgroup" => {
            let t = expect_tokens(&tokens, &[None, None], line, "abgroup <name>")?;
            let name = t[1].1.to_string();
            let mut spec = Vec::new();
            for (col, tok) in words(body, body_col) {
                spec.push(tok.parse::<u64>().map_err(|_| parse_err(line, col, format!("bad factor `{tok}`")))?);
            }
            let group = AbGroup::from_spec(&spec).map_err(|e| invalid(&name, e))?;
            let table = if group.is_finite() {
                Some(ab_to_table(&group, limits.order_cap).map_err(|e| invalid(&name, e))?)
            } else {
                None
            };
            Ok(CatalogEntry {
                name,
                line,
                provenance: Provenance::Computed,
                body: EntryBody::AbGroup { group, table },
            })
        }
        "action" => {
            let t = expect_tokens(&tokens, &[None, None, None, Some("on"), None], line, "action <name> <actor> on <target>")?;
            let name = t[1].1.to_string();
            let entry = parse_action(cat, &name, t[2], t[4], body, body_col, line, limits)?;
            Ok(CatalogEntry { name, line, provenance: Provenance::Computed, body: EntryBody::Action(entry) })
        }
        "fixture" => {
            let t = expect_tokens(&tokens, &[None, None], line, "fixture <name>")?;
            let name = t[1].1.to_string();
            let sep = body
                .find(':')
                .ok_or_else(|| parse_err(line, body_col + body.chars().count(), "expected `: <prose>` after the citation"))?;
            let citation = body[..sep].trim().to_string();
            let prose = body[sep + 1..].trim().to_string();
            if citation.is_empty() {
                return Err(invalid(&name, "a sourced fixture needs a citation"));
            }
            Ok(CatalogEntry {
                name,
                line,
                provenance: Provenance::Sourced { citation },
                body: EntryBody::Fixture { prose },
            })
        }
        "" => Err(parse_err(line, 1, "expected a keyword")),
        other => Err(parse_err(line, tokens[0].0, format!("unknown keyword `{other}`"))),
    }
}

fn words(body: &str, col0: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (b, c) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(b),
            (true, Some(s)) => {
                out.push((col0 + body[..s].chars().count(), &body[s..b]));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Reads one run of adjacent cycles starting at byte `at`; returns the text
/// and the byte offset just past it.
fn cycle_run(body: &str, at: usize, col0: usize, line: usize) -> Result<(&str, usize)> {
    let bytes = body.as_bytes();
    let mut i = at;
    while i < bytes.len() && bytes[i] == b'(' {
        match body[i..].find(')') {
            Some(close) => i += close + 1,
            None => return Err(parse_err(line, col0 + body[..i].chars().count(), "unclosed cycle")),
        }
    }
    Ok((&body[at..i], i))
}

fn parse_perm_list(body: &str, col0: usize, line: usize, degree: usize) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = body.as_bytes();
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let col = col0 + body[..i].chars().count();
        if bytes[i] != b'(' {
            return Err(parse_err(line, col, "expected `(`"));
        }
        let (text, next) = cycle_run(body, i, col0, line)?;
        out.push(Permutation::parse_cycles(degree, text).map_err(|e| parse_err(line, col, e.to_string()))?);
        i = next;
    }
    Ok(out)
}

fn parse_matrix(text: &str, col: usize, line: usize, a: &AbGroup) -> Result<AbHom> {
    let inner = &text[1..text.len() - 1];
    let rows: Vec<Vec<i64>> = inner
        .split(';')
        .map(|r| {
            r.split_whitespace()
                .map(|x| x.parse::<i64>().map_err(|_| parse_err(line, col, format!("bad matrix entry `{x}`"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    AbHom::new(a.clone(), a.clone(), rows).map_err(|e| parse_err(line, col, e.to_string()))
}

enum RawImage<'a> {
    Cycles(usize, &'a str),
    Matrix(usize, &'a str),
}

/// `0-><image>, 1-><image>, ...`, checked to list the generators in order.
fn parse_images<'a>(body: &'a str, col0: usize, line: usize) -> Result<Vec<RawImage<'a>>> {
    let bytes = body.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < bytes.len() && (bytes[*i].is_ascii_whitespace() || bytes[*i] == b',') {
            *i += 1;
        }
    };
    let col = |i: usize| col0 + body[..i].chars().count();
    loop {
        skip(&mut i);
        if i >= bytes.len() {
            break;
        }
        let arrow = body[i..].find("->").ok_or_else(|| parse_err(line, col(i), "expected `<generator>-><image>`"))?;
        let k = body[i..i + arrow].trim();
        let want = out.len().to_string();
        if k != want {
            return Err(parse_err(line, col(i), format!("expected generator `{want}`, found `{k}`")));
        }
        i += arrow + 2;
        while i < bytes.len() && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let start = i;
        match bytes.get(i) {
            Some(b'[') => {
                let close =
                    body[i..].find(']').ok_or_else(|| parse_err(line, col(i), "unclosed matrix"))?;
                i += close + 1;
                out.push(RawImage::Matrix(col(start), &body[start..i]));
            }
            Some(b'(') => {
                let (text, next) = cycle_run(body, i, col0, line)?;
                i = next;
                out.push(RawImage::Cycles(col(start), text));
            }
            _ => return Err(parse_err(line, col(i), "expected a matrix `[..]` or cycles `(..)`")),
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn parse_action(
    cat: &Catalog,
    name: &str,
    actor: (usize, &str),
    target: (usize, &str),
    body: &str,
    body_col: usize,
    line: usize,
    limits: &Limits,
) -> Result<ActionEntry> {
    let target_entry =
        cat.get(target.1).ok_or_else(|| parse_err(line, target.0, format!("unknown target `{}`", target.1)))?;
    let abelian = target_entry.abgroup().cloned();
    let target_table = target_entry.group_table().cloned();
    let named_actor = match actor.1 {
        "sub" | "aut" => None,
        n => Some(
            cat.get(n)
                .and_then(CatalogEntry::group_table)
                .cloned()
                .ok_or_else(|| parse_err(line, actor.0, format!("unknown actor group `{n}`")))?,
        ),
    };
    if target_entry.group_table().is_none() && (abelian.as_ref().is_none_or(|a| a.is_finite())) {
        return Err(parse_err(line, target.0, format!("`{}` is not a group", target.1)));
    }
    let spec = body.trim();
    let mk = |images: Images, action: Option<Action>| ActionEntry {
        actor: actor.1.to_string(),
        target: target.1.to_string(),
        images,
        action,
        abelian: abelian.clone(),
    };
    let need_table = || {
        target_table.clone().ok_or_else(|| invalid(name, "the target has free factors; only `sub` with matrices applies"))
    };
    match spec {
        "auto" => {
            if actor.1 != target.1 {
                return Err(invalid(name, "conjugation needs the actor to be the target group"));
            }
            Ok(mk(Images::Conjugation, Some(Action::conjugation(&need_table()?))))
        }
        "trivial" => {
            let g = named_actor.ok_or_else(|| invalid(name, "a trivial action needs a named actor group"))?;
            Ok(mk(Images::Trivial, Some(Action::trivial(g, need_table()?))))
        }
        "all" => {
            if actor.1 != "aut" {
                return Err(invalid(name, "`all` goes with the `aut` actor"));
            }
            let action = match &abelian {
                Some(a) => {
                    let aut = aut_group(a, limits).map_err(|e| invalid(name, e))?;
                    Action::tautological(&aut, limits.order_cap).map_err(|e| invalid(name, e))?.0
                }
                None => {
                    let t = need_table()?;
                    let autos = table_automorphisms(&t, 10_000_000).map_err(|e| invalid(name, e))?;
                    Action::from_permutations(t, &autos, limits.order_cap).map_err(|e| invalid(name, e))?
                }
            };
            Ok(mk(Images::FullAut, Some(action)))
        }
        _ => {
            let raw = parse_images(body, body_col, line)?;
            if raw.is_empty() {
                return Err(parse_err(line, body_col, "expected generator images"));
            }
            let all_matrices = raw.iter().all(|r| matches!(r, RawImage::Matrix(..)));
            let all_cycles = raw.iter().all(|r| matches!(r, RawImage::Cycles(..)));
            if !all_matrices && !all_cycles {
                return Err(parse_err(line, body_col, "mixing matrices and cycles in one action"));
            }
            if all_matrices {
                let a = abelian.clone().ok_or_else(|| invalid(name, "matrix images need an abgroup target"))?;
                let mats = raw
                    .iter()
                    .map(|r| match r {
                        RawImage::Matrix(c, t) => parse_matrix(t, *c, line, &a),
                        RawImage::Cycles(..) => unreachable!(),
                    })
                    .collect::<Result<Vec<_>>>()?;
                for m in &mats {
                    if !m.is_automorphism().map_err(|e| invalid(name, e))? {
                        return Err(invalid(name, format!("{m:?} is not an automorphism")));
                    }
                }
                let action = match (&named_actor, a.is_finite()) {
                    (_, false) if named_actor.is_some() => {
                        return Err(invalid(name, "a target with free factors takes the `sub` actor"));
                    }
                    (_, false) => None,
                    (Some(g), true) => {
                        check_generator_count(name, g, mats.len())?;
                        let t = ab_to_table(&a, limits.order_cap).map_err(|e| invalid(name, e))?;
                        Some(Action::from_matrices(g.clone(), &t, &mats).map_err(|e| invalid(name, e))?)
                    }
                    (None, true) => {
                        if actor.1 == "aut" {
                            return Err(invalid(name, "the `aut` actor takes the images `all`"));
                        }
                        let aut = AutGroup::generated_by(&a, &mats, limits.order_cap).map_err(|e| invalid(name, e))?;
                        Some(Action::tautological(&aut, limits.order_cap).map_err(|e| invalid(name, e))?.0)
                    }
                };
                Ok(mk(Images::Matrices(mats), action))
            } else {
                let t = need_table()?;
                let perms = raw
                    .iter()
                    .map(|r| match r {
                        RawImage::Cycles(c, text) => {
                            Permutation::parse_cycles(t.order(), text).map_err(|e| parse_err(line, *c, e.to_string()))
                        }
                        RawImage::Matrix(..) => unreachable!(),
                    })
                    .collect::<Result<Vec<_>>>()?;
                let action = match &named_actor {
                    Some(g) => {
                        check_generator_count(name, g, perms.len())?;
                        Action::new(g.clone(), t, perms.clone()).map_err(|e| invalid(name, e))?
                    }
                    None if actor.1 == "aut" => return Err(invalid(name, "the `aut` actor takes the images `all`")),
                    None => Action::from_permutations(t, &perms, limits.order_cap).map_err(|e| invalid(name, e))?,
                };
                Ok(mk(Images::Permutations(perms), Some(action)))
            }
        }
    }
}

fn check_generator_count(name: &str, g: &GroupTable, given: usize) -> Result<()> {
    if g.generators().len() != given {
        return Err(invalid(
            name,
            format!("the actor has {} generators but {given} images were given", g.generators().len()),
        ));
    }
    Ok(())
}
