//! Serialization of the external file formats: fields, matrices, groups,
//! modules, subcategory predicates and two-term collections.
//!
//! Groups inside module files may be given inline or as a path reference to
//! another JSON file, resolved relative to the referring file.

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::perm::{Group, Perm};
use crate::smc::{TwoTermCollection, TwoTermItem};
use crate::subcat::Pred;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Row-major entries, each entry a coefficient vector (low degree first).
    pub entries: Vec<Vec<u32>>,
}

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    let field = m.field();
    let entries = m
        .data()
        .iter()
        .map(|&e| field.coeffs(e).iter().map(|&c| c as u32).collect())
        .collect();
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries,
    }
}

pub fn matrix_from_json(j: &MatrixJson, field: &Field) -> Result<Matrix> {
    if j.entries.len() != j.rows * j.cols {
        return Err(Error::InvalidInput(format!(
            "matrix of shape {}x{} with {} entries",
            j.rows,
            j.cols,
            j.entries.len()
        )));
    }
    let mut m = Matrix::zeros(field, j.rows, j.cols);
    for (idx, coeffs) in j.entries.iter().enumerate() {
        let e = field.from_coeffs(coeffs)?;
        m.set(idx / j.cols, idx % j.cols, e);
    }
    Ok(m)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupJson {
    pub degree: usize,
    /// Generator name -> image list. Enumeration uses the sorted name order.
    pub generators: BTreeMap<String, Vec<usize>>,
}

pub fn group_to_json(g: &Group) -> GroupJson {
    let generators = g
        .generator_names()
        .iter()
        .zip(g.generators())
        .map(|(n, p)| (n.clone(), p.images()))
        .collect();
    GroupJson {
        degree: g.degree(),
        generators,
    }
}

pub fn group_from_json(j: &GroupJson) -> Result<Arc<Group>> {
    let named: Vec<(String, Perm)> = j
        .generators
        .iter()
        .map(|(n, images)| Ok((n.clone(), Perm::from_images(images)?)))
        .collect::<Result<_>>()?;
    Group::new(j.degree, &named)
}

/// Inline group object or path reference.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Path(String),
    Inline(GroupJson),
}

pub fn resolve_group(r: &GroupRef, base: &Path) -> Result<Arc<Group>> {
    match r {
        GroupRef::Inline(j) => group_from_json(j),
        GroupRef::Path(p) => {
            let full = base.join(p);
            let text = std::fs::read_to_string(&full)?;
            let j: GroupJson = serde_json::from_str(&text)?;
            group_from_json(&j)
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleJson {
    pub field: FieldSpec,
    pub group: GroupRef,
    pub dim: usize,
    pub action: BTreeMap<String, MatrixJson>,
}

pub fn module_to_json(m: &Module) -> ModuleJson {
    let action = m
        .group()
        .generator_names()
        .iter()
        .zip(m.gen_matrices())
        .map(|(n, mat)| (n.clone(), matrix_to_json(mat)))
        .collect();
    ModuleJson {
        field: m.field().spec(),
        group: GroupRef::Inline(group_to_json(m.group())),
        dim: m.dim(),
        action,
    }
}

pub fn module_from_json(j: &ModuleJson, base: &Path) -> Result<Module> {
    let field = Field::from_spec(&j.field)?;
    let group = resolve_group(&j.group, base)?;
    let mut gen_mats = Vec::new();
    for name in group.generator_names() {
        let mat = j.action.get(name).ok_or_else(|| {
            Error::InvalidInput(format!("missing action for generator `{}`", name))
        })?;
        gen_mats.push(matrix_from_json(mat, &field)?);
    }
    let m = Module::new(group, field, gen_mats)?;
    if m.dim() != j.dim {
        return Err(Error::InvalidInput(format!(
            "declared dimension {} does not match matrices of size {}",
            j.dim,
            m.dim()
        )));
    }
    Ok(m)
}

pub fn load_module(path: &Path) -> Result<Module> {
    let text = std::fs::read_to_string(path)?;
    let j: ModuleJson = serde_json::from_str(&text)?;
    let base = path.parent().map(PathBuf::from).unwrap_or_default();
    module_from_json(&j, &base)
}

pub fn save_module(m: &Module, path: &Path) -> Result<()> {
    let j = module_to_json(m);
    std::fs::write(path, serde_json::to_string_pretty(&j)?)?;
    Ok(())
}

pub fn load_group(path: &Path) -> Result<Arc<Group>> {
    let text = std::fs::read_to_string(path)?;
    let j: GroupJson = serde_json::from_str(&text)?;
    group_from_json(&j)
}

/// Subcategory predicates:
/// `{"op": "filt"|"fac"|"perpL"|"perpR"|"tclose", "args": [module...]}`
/// `{"op": "star"|"intersect", "args": [pred, pred]}`
/// `{"op": "resinv", "group": <subgroup>, "args": [pred]}`
/// `{"op": "indinv", "group": <ambient group>, "args": [pred]}`
/// Module arguments are path strings or inline module objects.
pub fn pred_from_value(v: &serde_json::Value, base: &Path) -> Result<Pred> {
    let op = v
        .get("op")
        .and_then(|o| o.as_str())
        .ok_or_else(|| Error::InvalidInput("predicate needs an `op` field".into()))?;
    let args = v
        .get("args")
        .and_then(|a| a.as_array())
        .cloned()
        .unwrap_or_default();
    let modules = |args: &[serde_json::Value]| -> Result<Vec<Module>> {
        args.iter().map(|a| module_from_value(a, base)).collect()
    };
    let sub_pred = |idx: usize| -> Result<Pred> {
        let a = args
            .get(idx)
            .ok_or_else(|| Error::InvalidInput(format!("`{}` needs argument {}", op, idx)))?;
        pred_from_value(a, base)
    };
    match op {
        "filt" => Ok(Pred::Filt(modules(&args)?)),
        "fac" => Ok(Pred::Fac(modules(&args)?)),
        "perpL" => Ok(Pred::PerpL(modules(&args)?)),
        "perpR" => Ok(Pred::PerpR(modules(&args)?)),
        "tclose" => Ok(Pred::TClose(modules(&args)?)),
        "star" => Ok(Pred::Star(Box::new(sub_pred(0)?), Box::new(sub_pred(1)?))),
        "intersect" => Ok(Pred::Intersect(
            Box::new(sub_pred(0)?),
            Box::new(sub_pred(1)?),
        )),
        "resinv" => {
            let group = group_ref_from_value(v, base)?;
            Ok(Pred::ResInv {
                sub: group,
                inner: Box::new(sub_pred(0)?),
            })
        }
        "indinv" => {
            let group = group_ref_from_value(v, base)?;
            Ok(Pred::IndInv {
                ambient: group,
                inner: Box::new(sub_pred(0)?),
            })
        }
        other => Err(Error::InvalidInput(format!(
            "unknown predicate op `{}`",
            other
        ))),
    }
}

fn group_ref_from_value(v: &serde_json::Value, base: &Path) -> Result<Arc<Group>> {
    let g = v.get("group").ok_or_else(|| {
        Error::InvalidInput("restriction/induction preimage needs a `group`".into())
    })?;
    let r: GroupRef = serde_json::from_value(g.clone())?;
    resolve_group(&r, base)
}

pub fn module_from_value(v: &serde_json::Value, base: &Path) -> Result<Module> {
    match v {
        serde_json::Value::String(p) => load_module(&base.join(p)),
        _ => {
            let j: ModuleJson = serde_json::from_value(v.clone())?;
            module_from_json(&j, base)
        }
    }
}

pub fn load_pred(path: &Path) -> Result<Pred> {
    let text = std::fs::read_to_string(path)?;
    let v: serde_json::Value = serde_json::from_str(&text)?;
    let base = path.parent().map(PathBuf::from).unwrap_or_default();
    pred_from_value(&v, &base)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoTermItemJson {
    pub module: serde_json::Value,
    pub shift: u8,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TwoTermCollectionJson {
    pub items: Vec<TwoTermItemJson>,
}

pub fn collection_from_json(j: &TwoTermCollectionJson, base: &Path) -> Result<TwoTermCollection> {
    let items = j
        .items
        .iter()
        .map(|it| {
            Ok(TwoTermItem {
                module: module_from_value(&it.module, base)?,
                shift: it.shift,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    TwoTermCollection::new(items)
}

pub fn load_collection(path: &Path) -> Result<TwoTermCollection> {
    let text = std::fs::read_to_string(path)?;
    let j: TwoTermCollectionJson = serde_json::from_str(&text)?;
    let base = path.parent().map(PathBuf::from).unwrap_or_default();
    collection_from_json(&j, &base)
}

pub fn collection_to_json(c: &TwoTermCollection) -> TwoTermCollectionJson {
    TwoTermCollectionJson {
        items: c
            .items
            .iter()
            .map(|it| TwoTermItemJson {
                module: serde_json::to_value(module_to_json(&it.module)).expect("serializable"),
                shift: it.shift,
            })
            .collect(),
    }
}
