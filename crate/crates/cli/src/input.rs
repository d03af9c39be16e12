//! Group and datum sources: builtin names, inline cycle notation, JSON files.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use hurwitz_core::{builtin, Datum, Perm, PermGroup};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// `{"degree": d, "generators": ["(1 2)", ...]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    pub degree: usize,
    pub generators: Vec<String>,
}

/// A group given by builtin name or by generators.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupRef {
    Name(String),
    Generators(GroupJson),
}

/// `{"group": <name or group object>, "entries": ["(1 2)", ...]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DatumJson {
    pub group: GroupRef,
    pub entries: Vec<String>,
}

impl GroupRef {
    pub fn of(group: &PermGroup) -> GroupRef {
        if let Some(name) = group.name() {
            if builtin::by_name(name).is_some_and(|b| same_group(&b, group)) {
                return GroupRef::Name(name.to_string());
            }
        }
        GroupRef::Generators(GroupJson {
            degree: group.degree(),
            generators: group.generators().iter().map(Perm::to_string).collect(),
        })
    }

    pub fn build(&self) -> CliResult<Arc<PermGroup>> {
        match self {
            GroupRef::Name(name) => builtin::by_name(name)
                .map(Arc::new)
                .ok_or_else(|| CliError::input(format!("unknown group name {name:?}"))),
            GroupRef::Generators(g) => {
                if g.degree == 0 {
                    return Err(CliError::input("group degree must be positive"));
                }
                let gens = g
                    .generators
                    .iter()
                    .map(|s| Perm::parse(s, g.degree))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Arc::new(PermGroup::new(g.degree, gens)?))
            }
        }
    }
}

impl DatumJson {
    pub fn of(d: &Datum) -> DatumJson {
        DatumJson {
            group: GroupRef::of(d.group()),
            entries: d.perms().map(Perm::to_string).collect(),
        }
    }
}

pub fn same_group(a: &PermGroup, b: &PermGroup) -> bool {
    a.degree() == b.degree()
        && a.order() == b.order()
        && a.elements()
            .map(|x| a.perm(x))
            .eq(b.elements().map(|x| b.perm(x)))
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn looks_like_file(source: &str) -> bool {
    source.ends_with(".json") || Path::new(source).is_file()
}

/// `--group`: a builtin name or a JSON file.
pub fn load_group(source: &str) -> CliResult<Arc<PermGroup>> {
    if looks_like_file(source) {
        return GroupRef::Generators(read_json(Path::new(source))?).build();
    }
    GroupRef::Name(source.to_string()).build()
}

/// `--datum` with an optional `--group`.
///
/// Inline data need `--group`. A datum file carries its own group; if
/// `--group` is also given the two must be the same permutation group.
pub fn load_datum(source: &str, group: Option<Arc<PermGroup>>) -> CliResult<Datum> {
    if looks_like_file(source) {
        let file: DatumJson = read_json(Path::new(source))?;
        let own = file.group.build()?;
        let group = match group {
            Some(g) if !same_group(&g, &own) => {
                return Err(CliError::input(
                    "--group differs from the group in the datum file",
                ))
            }
            Some(g) => g,
            None => own,
        };
        let entries: Vec<&str> = file.entries.iter().map(String::as_str).collect();
        return parse_entries(&group, &entries);
    }
    let group = group.ok_or_else(|| CliError::input("an inline --datum needs --group"))?;
    let entries: Vec<&str> = source.split(',').map(str::trim).collect();
    parse_entries(&group, &entries)
}

fn parse_entries(group: &Arc<PermGroup>, entries: &[&str]) -> CliResult<Datum> {
    let perms = entries
        .iter()
        .map(|e| parse_entry(group, e))
        .collect::<CliResult<Vec<Perm>>>()?;
    hurwitz_core::validate(&perms, group)
        .map_err(|e| CliError::input(format!("invalid datum: {e}")))
}

fn parse_entry(group: &PermGroup, text: &str) -> CliResult<Perm> {
    if let Some((k, m)) = text.split_once("mod") {
        return residue(group, k.trim(), m.trim());
    }
    Ok(Perm::parse(text, group.degree())?)
}

/// `k mod m` in a builtin cyclic group `Zm`: the k-th power of `(1 2 … m)`.
fn residue(group: &PermGroup, k: &str, m: &str) -> CliResult<Perm> {
    let bad = || CliError::input(format!("malformed residue {k:?} mod {m:?}"));
    let k: i64 = k.parse().map_err(|_| bad())?;
    let m: usize = m.parse().map_err(|_| bad())?;
    let cyclic = group.name().and_then(builtin::by_name).filter(|b| {
        b.name()
            .is_some_and(|n| n.starts_with('Z') && !n.contains('x'))
    });
    match cyclic {
        Some(b) if same_group(&b, group) && b.order() == m && m > 0 => {}
        _ => {
            return Err(CliError::input(format!(
                "\"k mod {m}\" needs the builtin cyclic group Z{m}"
            )))
        }
    }
    let power = k.rem_euclid(m as i64) as usize;
    let images = (0..m as u32)
        .map(|p| ((p as usize + power) % m) as u32)
        .collect();
    Ok(Perm::from_images(images)?)
}
