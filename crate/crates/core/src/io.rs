//! JSON files for posets, maps, order extensions and selections.
//!
//! A poset file lists element names and a generating relation:
//!
//! ```json
//! { "elements": ["a", "b", "z"], "covers": [["a", "z"], ["b", "z"]] }
//! ```
//!
//! Wherever a poset is expected, a string may be given instead. It names a
//! built-in poset (`chain:N`, `antichain:N`, `diamond`, `m3`, `n5`,
//! `seven`) or a path relative to the referring file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, IoError, Result};
use crate::maxitive::MonotoneMap;
use crate::poset::{dm_completion, FinitePoset, OrderExtension};
use crate::selection::{FilterSelection, SelectionKind};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PosetRef {
    Named(String),
    Inline(PosetFile),
}

/// Map values, either listed in element order or keyed by element name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueTable {
    List(Vec<String>),
    Keyed(BTreeMap<String, String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub source: PosetRef,
    pub target: PosetRef,
    pub values: ValueTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionFile {
    pub base: PosetRef,
    pub complete: PosetRef,
    pub embed: ValueTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SelectionFile {
    pub kind: String,
    #[serde(default)]
    pub recursion: Option<String>,
    #[serde(default)]
    pub fsets: Vec<Vec<String>>,
}

/// A selection read from disk, before it is attached to its poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectionSpec {
    pub kind: SelectionKind,
    pub recursion: SelectionKind,
    pub fsets: Vec<Subset>,
}

impl SelectionSpec {
    pub fn builtin(kind: SelectionKind) -> Self {
        SelectionSpec {
            kind,
            recursion: kind,
            fsets: Vec::new(),
        }
    }

    pub fn build<'p>(&self, poset: &'p FinitePoset) -> Result<FilterSelection<'p>> {
        match self.kind {
            SelectionKind::Explicit => FilterSelection::explicit(poset, &self.fsets, self.recursion),
            k => FilterSelection::new(poset, k),
        }
    }
}

fn origin_of(path: &Path) -> String {
    path.display().to_string()
}

fn field_error(origin: &str, field: impl Into<String>, message: impl Into<String>) -> Error {
    IoError::Field {
        path: origin.to_string(),
        field: field.into(),
        message: message.into(),
    }
    .into()
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        IoError::Read {
            path: origin_of(path),
            message: e.to_string(),
        }
        .into()
    })
}

/// Parses JSON text, reporting line and column on failure.
pub fn parse_json<T: DeserializeOwned>(text: &str, origin: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        IoError::Parse {
            path: origin.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
        .into()
    })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|e| {
        IoError::Read {
            path: origin_of(path),
            message: e.to_string(),
        }
        .into()
    })
}

/// A built-in poset by name.
pub fn named_poset(name: &str) -> Option<FinitePoset> {
    let sized = |prefix: &str| {
        name.strip_prefix(prefix)
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=crate::subset::MAX_ELEMENTS).contains(&n))
    };
    match name {
        "diamond" => Some(FinitePoset::diamond()),
        "m3" => Some(FinitePoset::m3()),
        "n5" => Some(FinitePoset::n5()),
        "seven" => Some(FinitePoset::seven_element()),
        _ => sized("chain:")
            .map(FinitePoset::chain)
            .or_else(|| sized("antichain:").map(FinitePoset::antichain)),
    }
}

impl PosetFile {
    pub fn to_poset(&self, origin: &str) -> Result<FinitePoset> {
        let index = |name: &str, field: String| {
            self.elements
                .iter()
                .position(|e| e == name)
                .ok_or_else(|| field_error(origin, field, format!("unknown element `{name}`")))
        };
        let mut pairs = Vec::with_capacity(self.covers.len());
        for (i, (x, y)) in self.covers.iter().enumerate() {
            pairs.push((
                index(x, format!("covers[{i}][0]"))?,
                index(y, format!("covers[{i}][1]"))?,
            ));
        }
        FinitePoset::from_labeled_relation(self.elements.clone(), &pairs)
    }

    /// Element names and Hasse covers of `p`.
    pub fn from_poset(p: &FinitePoset) -> Self {
        PosetFile {
            elements: (0..p.len()).map(|x| p.label(x)).collect(),
            covers: p.covers().into_iter().map(|(x, y)| (p.label(x), p.label(y))).collect(),
        }
    }
}

impl PosetRef {
    pub fn resolve(&self, base_dir: &Path, origin: &str) -> Result<FinitePoset> {
        match self {
            PosetRef::Inline(f) => f.to_poset(origin),
            PosetRef::Named(name) => match named_poset(name) {
                Some(p) => Ok(p),
                None => load_poset(&base_dir.join(name)),
            },
        }
    }
}

impl ValueTable {
    /// Element indices of `target`, one per element of `source`.
    pub fn resolve(&self, source: &FinitePoset, target: &FinitePoset, field: &str, origin: &str) -> Result<Vec<usize>> {
        let lookup = |name: &str, at: String| {
            target
                .index_of(name)
                .ok_or_else(|| field_error(origin, at, format!("unknown element `{name}`")))
        };
        match self {
            ValueTable::List(list) => {
                if list.len() != source.len() {
                    return Err(field_error(
                        origin,
                        field,
                        format!("expected {} entries, got {}", source.len(), list.len()),
                    ));
                }
                list.iter()
                    .enumerate()
                    .map(|(i, t)| lookup(t, format!("{field}[{i}]")))
                    .collect()
            }
            ValueTable::Keyed(table) => {
                if let Some(k) = table.keys().find(|k| source.index_of(k).is_none()) {
                    return Err(field_error(
                        origin,
                        format!("{field}.{k}"),
                        "not an element of the source",
                    ));
                }
                (0..source.len())
                    .map(|g| {
                        let name = source.label(g);
                        let t = table
                            .get(&name)
                            .ok_or_else(|| field_error(origin, format!("{field}.{name}"), "missing"))?;
                        lookup(t, format!("{field}.{name}"))
                    })
                    .collect()
            }
        }
    }

    pub fn keyed(source: &FinitePoset, target: &FinitePoset, values: &[usize]) -> Self {
        ValueTable::Keyed(
            values
                .iter()
                .enumerate()
                .map(|(g, &t)| (source.label(g), target.label(t)))
                .collect(),
        )
    }
}

fn base_dir(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

pub fn parse_poset(text: &str, origin: &str) -> Result<FinitePoset> {
    parse_json::<PosetFile>(text, origin)?.to_poset(origin)
}

pub fn load_poset(path: &Path) -> Result<FinitePoset> {
    parse_poset(&read_text(path)?, &origin_of(path))
}

/// A poset given by built-in name or by path.
pub fn poset_arg(arg: &str) -> Result<FinitePoset> {
    match named_poset(arg) {
        Some(p) => Ok(p),
        None => load_poset(Path::new(arg)),
    }
}

pub fn poset_to_json(p: &FinitePoset) -> String {
    let mut s = serde_json::to_string_pretty(&PosetFile::from_poset(p)).expect("serializable");
    s.push('\n');
    s
}

pub fn save_poset(p: &FinitePoset, path: &Path) -> Result<()> {
    write_json(path, &PosetFile::from_poset(p))
}

pub fn map_from_file(file: &MapFile, dir: &Path, origin: &str) -> Result<MonotoneMap> {
    let source = Arc::new(file.source.resolve(dir, origin)?);
    let target = Arc::new(file.target.resolve(dir, origin)?);
    let values = file.values.resolve(&source, &target, "values", origin)?;
    MonotoneMap::new(source, target, values)
}

pub fn parse_map(text: &str, dir: &Path, origin: &str) -> Result<MonotoneMap> {
    map_from_file(&parse_json(text, origin)?, dir, origin)
}

pub fn load_map(path: &Path) -> Result<MonotoneMap> {
    parse_map(&read_text(path)?, &base_dir(path), &origin_of(path))
}

/// The map with both posets written inline.
pub fn map_to_file(v: &MonotoneMap) -> MapFile {
    MapFile {
        source: PosetRef::Inline(PosetFile::from_poset(v.source())),
        target: PosetRef::Inline(PosetFile::from_poset(v.target())),
        values: ValueTable::keyed(v.source(), v.target(), v.values()),
    }
}

pub fn map_to_json(v: &MonotoneMap) -> String {
    let mut s = serde_json::to_string_pretty(&map_to_file(v)).expect("serializable");
    s.push('\n');
    s
}

pub fn save_map(v: &MonotoneMap, path: &Path) -> Result<()> {
    write_json(path, &map_to_file(v))
}

pub fn extension_from_file(file: &ExtensionFile, dir: &Path, origin: &str) -> Result<OrderExtension> {
    let base = Arc::new(file.base.resolve(dir, origin)?);
    let complete = Arc::new(file.complete.resolve(dir, origin)?);
    let embed = file.embed.resolve(&base, &complete, "embed", origin)?;
    OrderExtension::new(base, complete, embed)
}

pub fn load_extension(path: &Path) -> Result<OrderExtension> {
    let origin = origin_of(path);
    let file: ExtensionFile = parse_json(&read_text(path)?, &origin)?;
    extension_from_file(&file, &base_dir(path), &origin)
}

/// `dm` for the Dedekind–MacNeille completion of `base`, else a file whose
/// base must have the same order as `base`.
pub fn extension_arg(arg: Option<&str>, base: &FinitePoset) -> Result<OrderExtension> {
    match arg {
        None | Some("dm") => Ok(dm_completion(base)),
        Some(path) => {
            let ext = load_extension(Path::new(path))?;
            if !ext.base().same_order(base) {
                return Err(Error::PosetMismatch);
            }
            Ok(ext)
        }
    }
}

pub fn extension_to_file(ext: &OrderExtension) -> ExtensionFile {
    ExtensionFile {
        base: PosetRef::Inline(PosetFile::from_poset(ext.base())),
        complete: PosetRef::Inline(PosetFile::from_poset(ext.complete())),
        embed: ValueTable::keyed(ext.base(), ext.complete(), ext.embedding()),
    }
}

fn parse_kind(name: &str, field: &str, origin: &str) -> Result<SelectionKind> {
    SelectionKind::parse(name).ok_or_else(|| field_error(origin, field, format!("unknown selection `{name}`")))
}

pub fn selection_from_file(file: &SelectionFile, poset: &FinitePoset, origin: &str) -> Result<SelectionSpec> {
    let kind = parse_kind(&file.kind, "kind", origin)?;
    let recursion = match &file.recursion {
        Some(r) => parse_kind(r, "recursion", origin)?,
        None if kind == SelectionKind::Explicit => SelectionKind::Principal,
        None => kind,
    };
    let mut fsets = Vec::with_capacity(file.fsets.len());
    for (i, set) in file.fsets.iter().enumerate() {
        let mut s = Subset::EMPTY;
        for (j, name) in set.iter().enumerate() {
            let x = poset
                .index_of(name)
                .ok_or_else(|| field_error(origin, format!("fsets[{i}][{j}]"), format!("unknown element `{name}`")))?;
            s.insert(x);
        }
        fsets.push(s);
    }
    Ok(SelectionSpec { kind, recursion, fsets })
}

/// A built-in kind name, or a selection file given as `explicit:<file>` or
/// just `<file>`.
pub fn selection_arg(arg: &str, poset: &FinitePoset) -> Result<SelectionSpec> {
    if let Some(kind) = SelectionKind::parse(arg).filter(|&k| k != SelectionKind::Explicit) {
        return Ok(SelectionSpec::builtin(kind));
    }
    let path = Path::new(arg.strip_prefix("explicit:").unwrap_or(arg));
    let origin = origin_of(path);
    let file: SelectionFile = parse_json(&read_text(path)?, &origin)?;
    selection_from_file(&file, poset, &origin)
}
