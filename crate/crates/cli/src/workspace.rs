//! JSON workspaces: a field, a quiver, named modules and named morphisms.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use auslander::hom::direct_sum;
use auslander::linalg::check_prime;
use auslander::{Matrix, Quiver, RepMorphism, Representation};
use serde::Deserialize;

use crate::CliError;

#[derive(Deserialize)]
#[serde(untagged)]
enum Label {
    Name(String),
    Number(i64),
}

impl Label {
    fn into_string(self) -> String {
        match self {
            Label::Name(s) => s,
            Label::Number(n) => n.to_string(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWorkspace {
    field: RawField,
    quiver: RawQuiver,
    #[serde(default)]
    modules: BTreeMap<String, RawModule>,
    #[serde(default)]
    morphisms: BTreeMap<String, RawMorphism>,
    #[serde(default)]
    config: Config,
}

#[derive(Deserialize)]
struct RawField {
    p: u32,
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: Vec<Label>,
    #[serde(default)]
    arrows: Vec<RawArrow>,
}

#[derive(Deserialize)]
struct RawArrow {
    name: String,
    from: Label,
    to: Label,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModule {
    dims: BTreeMap<String, usize>,
    #[serde(default)]
    maps: BTreeMap<String, Vec<Vec<u64>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMorphism {
    source: String,
    target: String,
    #[serde(default)]
    components: BTreeMap<String, Vec<Vec<u64>>>,
}

/// Optional workspace settings; command-line flags take precedence.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_enum: Option<u64>,
    pub universe: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct Workspace {
    pub p: u32,
    pub quiver: Arc<Quiver>,
    pub modules: BTreeMap<String, Representation>,
    pub morphisms: BTreeMap<String, RepMorphism>,
    pub config: Config,
}

pub fn load_workspace(path: &Path) -> Result<Workspace, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_workspace(&text)
}

pub fn parse_workspace(text: &str) -> Result<Workspace, CliError> {
    let raw: RawWorkspace = serde_json::from_str(text).map_err(|e| CliError::Input(format!("parse error: {e}")))?;
    let p = raw.field.p;
    check_prime(p).map_err(|e| CliError::Input(format!("field: {e}")))?;
    let vertices: Vec<String> = raw.quiver.vertices.into_iter().map(Label::into_string).collect();
    let arrows: Vec<(String, String, String)> =
        raw.quiver.arrows.into_iter().map(|a| (a.name, a.from.into_string(), a.to.into_string())).collect();
    let quiver = Arc::new(Quiver::new(&vertices, &arrows).map_err(|e| CliError::Input(format!("quiver: {e}")))?);

    let mut modules = BTreeMap::new();
    for (name, m) in raw.modules {
        let rep = build_module(&quiver, p, &name, m)?;
        modules.insert(name, rep);
    }
    let mut ws = Workspace { p, quiver, modules, morphisms: BTreeMap::new(), config: raw.config };
    for (name, m) in raw.morphisms {
        let f = build_morphism(&ws, &name, m)?;
        ws.morphisms.insert(name, f);
    }
    if let Some(u) = &ws.config.universe {
        for n in u {
            ws.module(n)?;
        }
    }
    Ok(ws)
}

fn build_matrix(
    p: u32,
    rows: usize,
    cols: usize,
    entries: &[Vec<u64>],
    what: impl Fn() -> String,
) -> Result<Matrix, CliError> {
    if entries.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Matrix::zeros(p, rows, cols));
    }
    Matrix::from_rows(p, rows, cols, entries).map_err(|e| CliError::Input(format!("{}: {e}", what())))
}

fn build_module(q: &Arc<Quiver>, p: u32, name: &str, m: RawModule) -> Result<Representation, CliError> {
    for v in m.dims.keys() {
        if q.vertex_index(v).is_err() {
            return Err(CliError::Input(format!("module `{name}`: unknown vertex `{v}`")));
        }
    }
    for a in m.maps.keys() {
        if q.arrow_index(a).is_err() {
            return Err(CliError::Input(format!("module `{name}`: unknown arrow `{a}`")));
        }
    }
    let dims: Vec<usize> = q.vertices().iter().map(|v| m.dims.get(v).copied().unwrap_or(0)).collect();
    let mut maps = Vec::new();
    for a in q.arrows() {
        let (rows, cols) = (dims[a.target], dims[a.source]);
        let mat = match m.maps.get(&a.name) {
            Some(entries) => build_matrix(p, rows, cols, entries, || format!("module `{name}`, arrow `{}`", a.name))?,
            None if rows == 0 || cols == 0 => Matrix::zeros(p, rows, cols),
            None => return Err(CliError::Input(format!("module `{name}`: missing map for arrow `{}`", a.name))),
        };
        maps.push(mat);
    }
    Representation::new(q.clone(), p, dims, maps).map_err(|e| CliError::Input(format!("module `{name}`: {e}")))
}

fn build_morphism(ws: &Workspace, name: &str, m: RawMorphism) -> Result<RepMorphism, CliError> {
    let source = ws.module(&m.source)?;
    let target = ws.module(&m.target)?;
    let q = &ws.quiver;
    for v in m.components.keys() {
        if q.vertex_index(v).is_err() {
            return Err(CliError::Input(format!("morphism `{name}`: unknown vertex `{v}`")));
        }
    }
    let mut comps = Vec::new();
    for (i, v) in q.vertices().iter().enumerate() {
        let (rows, cols) = (target.dim(i), source.dim(i));
        let mat = match m.components.get(v) {
            Some(entries) => build_matrix(ws.p, rows, cols, entries, || format!("morphism `{name}`, vertex `{v}`"))?,
            None => Matrix::zeros(ws.p, rows, cols),
        };
        comps.push(mat);
    }
    RepMorphism::new(source, target, comps).map_err(|e| CliError::Input(format!("morphism `{name}`: {e}")))
}

impl Workspace {
    /// A named module, or a direct sum written `A+B+...`.
    pub fn module(&self, expr: &str) -> Result<Representation, CliError> {
        let parts = expr
            .split('+')
            .map(|n| {
                let n = n.trim();
                self.modules.get(n).cloned().ok_or_else(|| CliError::Input(format!("unknown module `{n}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.len() == 1 {
            return Ok(parts.into_iter().next().expect("one part"));
        }
        Ok(direct_sum(&self.quiver, self.p, &parts).sum)
    }

    pub fn morphism(&self, name: &str) -> Result<RepMorphism, CliError> {
        self.morphisms.get(name).cloned().ok_or_else(|| CliError::Input(format!("unknown morphism `{name}`")))
    }
}
