//! Deterministic corpora: exhaustive enumeration of all modules up to a
//! dimension bound as iterated extensions of simples, corpus pairs for the
//! functor and subcategory suites, and the built-in S4/A4 data set over
//! GF(4) used by the golden suites.

use crate::config::Config;
use crate::decomp::{is_brick, simple_modules};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hom::{decode_coeffs, ext1, hom_dim, is_isomorphic};
use crate::module::Module;
use crate::perm::{coset_reps, Group};
use std::sync::Arc;

/// All isomorphism classes of kG-modules of dimension at most `max_dim`,
/// built by iterated extensions: every module arises as an extension of a
/// simple top quotient by a smaller module, so enumerating every extension
/// class of every simple over every known module is exhaustive.
pub fn all_modules_up_to_dim(
    group: &Arc<Group>,
    field: &Field,
    max_dim: usize,
    cfg: &Config,
) -> Result<Vec<Module>> {
    let simples = simple_modules(group, field, cfg)?;
    let mut known: Vec<Module> = vec![Module::zero(group, field)];
    for s in &simples {
        if s.dim() <= max_dim {
            known.push(s.clone());
        }
    }
    let q = field.order() as u64;
    let mut head = 0usize;
    while head < known.len() {
        let base = known[head].clone();
        head += 1;
        for s in &simples {
            if base.dim() + s.dim() > max_dim {
                continue;
            }
            let ext = ext1(s, &base)?;
            let Some(total) = cfg.within_enum_cap(q, ext.dim()) else {
                return Err(Error::EnumCapExceeded {
                    cap: cfg.enum_cap,
                    needed: q.checked_pow(ext.dim() as u32).unwrap_or(u64::MAX),
                });
            };
            for code in 0..total {
                let coeffs = decode_coeffs(field, code, ext.dim());
                let (e, _, _) = ext.extension(&coeffs);
                let mut dup = false;
                for m in &known {
                    if m.dim() == e.dim() && is_isomorphic(m, &e, cfg)?.is_some() {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    known.push(e);
                }
            }
        }
    }
    known.sort_by_key(|m| m.dim());
    Ok(known)
}

/// A matched corpus over a normal pair N <= G: all small kN- and kG-modules
/// plus conjugates, restrictions and inductions, truncated to `cap` entries
/// per side. The kG side always contains the inductions of the kN side so
/// that corpus-quantified perpendicular classes have their witnesses.
pub struct CorpusPair {
    pub g: Arc<Group>,
    pub n: Arc<Group>,
    pub field: Field,
    pub n_modules: Vec<Module>,
    pub g_modules: Vec<Module>,
}

pub fn corpus_pair(
    g: &Arc<Group>,
    n: &Arc<Group>,
    field: &Field,
    max_dim: usize,
    cap: usize,
    cfg: &Config,
) -> Result<CorpusPair> {
    let cosets = coset_reps(g, n)?;
    let mut n_modules = all_modules_up_to_dim(n, field, max_dim, cfg)?;
    // conjugates keep the side closed under the group action
    let mut extra = Vec::new();
    for m in &n_modules {
        for &r in &cosets.reps {
            let c = m.conjugate(g.element(r), g)?;
            let mut dup = false;
            for known in n_modules.iter().chain(&extra) {
                if known.dim() == c.dim() && is_isomorphic(known, &c, cfg)?.is_some() {
                    dup = true;
                    break;
                }
            }
            if !dup {
                extra.push(c);
            }
        }
    }
    n_modules.extend(extra);
    n_modules.sort_by_key(|m| m.dim());
    n_modules.truncate(cap);

    let mut g_modules = all_modules_up_to_dim(g, field, max_dim, cfg)?;
    for m in &n_modules {
        if m.dim() == 0 {
            continue;
        }
        let ind = m.induce(g)?;
        let mut dup = false;
        for known in &g_modules {
            if known.dim() == ind.dim() && is_isomorphic(known, &ind, cfg)?.is_some() {
                dup = true;
                break;
            }
        }
        if !dup {
            g_modules.push(ind);
        }
    }
    g_modules.sort_by_key(|m| m.dim());
    g_modules.truncate(cap);
    Ok(CorpusPair {
        g: Arc::clone(g),
        n: Arc::clone(n),
        field: field.clone(),
        n_modules,
        g_modules,
    })
}

/// The built-in example data: groups S4 >= A4 >= Klein over GF(4), the two
/// kS4-simples, the three kA4-simples, the six bricks of kS4 and the layered
/// kA4-modules their restrictions decompose into. Constructed
/// deterministically from extension classes and certified on construction.
pub struct S4A4Data {
    pub g: Arc<Group>,
    pub n: Arc<Group>,
    pub n1: Arc<Group>,
    pub field: Field,
    pub kg: Module,
    pub s2: Module,
    /// Bricks of kS4, named by their radical layers, top first.
    pub bricks: Vec<(String, Module)>,
    /// The nonsplit self-extension of the trivial module (not a brick).
    pub kk: Module,
    pub kn: Module,
    pub t1: Module,
    pub t2: Module,
    /// Layered kA4-modules, named by their radical layers, top first.
    pub n_modules: Vec<(String, Module)>,
}

impl S4A4Data {
    pub fn brick(&self, name: &str) -> &Module {
        &self
            .bricks
            .iter()
            .find(|(n, _)| n == name)
            .expect("known brick")
            .1
    }

    pub fn n_module(&self, name: &str) -> &Module {
        &self
            .n_modules
            .iter()
            .find(|(n, _)| n == name)
            .expect("known module")
            .1
    }
}

/// Pick the first extension class (in code order) whose middle term
/// satisfies the given certificate.
fn first_extension(
    top: &Module,
    sub: &Module,
    cfg: &Config,
    accept: impl Fn(&Module) -> Result<bool>,
) -> Result<Module> {
    let ext = ext1(top, sub)?;
    let field = top.field().clone();
    let q = field.order() as u64;
    let total = cfg
        .within_enum_cap(q, ext.dim())
        .ok_or(Error::EnumCapExceeded {
            cap: cfg.enum_cap,
            needed: u64::MAX,
        })?;
    for code in 1..total {
        let coeffs = decode_coeffs(&field, code, ext.dim());
        let (e, _, _) = ext.extension(&coeffs);
        if accept(&e)? {
            return Ok(e);
        }
    }
    Err(Error::Indeterminate(
        "no extension class satisfies the certificate".into(),
    ))
}

pub fn s4a4_data(cfg: &Config) -> Result<S4A4Data> {
    let field = match &cfg.field {
        Some(spec) => Field::from_spec(spec)?,
        None => Field::new(2, 2, None)?,
    };
    if field.characteristic() != 2 || field.order() % 3 != 1 {
        return Err(Error::InvalidInput(
            "the built-in data needs characteristic 2 and cube roots of unity (GF(4), GF(16), ...)"
                .into(),
        ));
    }
    let g = crate::groups::s4();
    let n = crate::groups::a4();
    let n1 = crate::groups::klein4();
    let kg = Module::trivial(&g, &field);
    let s2 = crate::groups::s4_natural2(&field);
    let kn = Module::trivial(&n, &field);
    let t1 = crate::groups::a4_character(&field, 1);
    let t2 = crate::groups::a4_character(&field, 2);

    // [k; k]: the unique nonsplit self-extension of the trivial module
    let kk = first_extension(&kg, &kg, cfg, |e| {
        Ok(hom_dim(e, &kg)? == 1 && hom_dim(&kg, e)? == 1 && !is_brick(e, cfg)?)
    })?;

    // [k; S2]: top trivial, socle two-dimensional
    let k_s2 = first_extension(&kg, &s2, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &kg)? == 1
            && hom_dim(e, &s2)? == 0
            && hom_dim(&s2, e)? == 1
            && hom_dim(&kg, e)? == 0)
    })?;
    // [S2; k]: top two-dimensional, socle trivial
    let s2_k = first_extension(&s2, &kg, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &s2)? == 1
            && hom_dim(e, &kg)? == 0
            && hom_dim(&kg, e)? == 1
            && hom_dim(&s2, e)? == 0)
    })?;
    // [S2; k; k]: uniserial of dimension four with top S2
    let s2_k_k = first_extension(&s2, &kk, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &s2)? == 1
            && hom_dim(e, &kg)? == 0
            && hom_dim(&kg, e)? == 1
            && hom_dim(&s2, e)? == 0)
    })?;
    // [k; k; S2]: uniserial of dimension four with socle S2
    let k_k_s2 = first_extension(&kg, &k_s2, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &kg)? == 1
            && hom_dim(e, &s2)? == 0
            && hom_dim(&s2, e)? == 1
            && hom_dim(&kg, e)? == 0)
    })?;
    let bricks = vec![
        ("k".to_string(), kg.clone()),
        ("s2".to_string(), s2.clone()),
        ("s2|k|k".to_string(), s2_k_k),
        ("k|s2".to_string(), k_s2),
        ("s2|k".to_string(), s2_k),
        ("k|k|s2".to_string(), k_k_s2),
    ];

    // layered kA4-modules
    let t1_k = first_extension(&t1, &kn, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &t1)? == 1
            && hom_dim(e, &kn)? == 0
            && hom_dim(&kn, e)? == 1)
    })?;
    let t2_k = first_extension(&t2, &kn, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &t2)? == 1
            && hom_dim(e, &kn)? == 0
            && hom_dim(&kn, e)? == 1)
    })?;
    let k_t1 = first_extension(&kn, &t1, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &kn)? == 1
            && hom_dim(e, &t1)? == 0
            && hom_dim(&t1, e)? == 1)
    })?;
    let k_t2 = first_extension(&kn, &t2, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &kn)? == 1
            && hom_dim(e, &t2)? == 0
            && hom_dim(&t2, e)? == 1)
    })?;
    let t1_plus_t2 = Module::direct_sum(&n, &field, &[t1.clone(), t2.clone()])?;
    let k_t1t2 = first_extension(&kn, &t1_plus_t2, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &kn)? == 1
            && hom_dim(&t1, e)? == 1
            && hom_dim(&t2, e)? == 1
            && hom_dim(&kn, e)? == 0)
    })?;
    let t1t2_k = first_extension(&t1_plus_t2, &kn, cfg, |e| {
        Ok(is_brick(e, cfg)?
            && hom_dim(e, &t1)? == 1
            && hom_dim(e, &t2)? == 1
            && hom_dim(&kn, e)? == 1
            && hom_dim(e, &kn)? == 0)
    })?;
    let n_modules = vec![
        ("k".to_string(), kn.clone()),
        ("t1".to_string(), t1.clone()),
        ("t2".to_string(), t2.clone()),
        ("t1|k".to_string(), t1_k),
        ("t2|k".to_string(), t2_k),
        ("k|t1".to_string(), k_t1),
        ("k|t2".to_string(), k_t2),
        ("k|t1+t2".to_string(), k_t1t2),
        ("t1+t2|k".to_string(), t1t2_k),
    ];

    Ok(S4A4Data {
        g,
        n,
        n1,
        field,
        kg,
        s2,
        bricks,
        kk,
        kn,
        t1,
        t2,
        n_modules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_modules_up_to_dim_3() {
        // kC4 in characteristic 2 is k[y]/(y^4): the modules of dimension
        // <= 3 are the sums of Jordan blocks J1, J2, J3: partitions of 1, 2
        // and 3 with parts <= 4 plus the zero module: 1 + 2 + 3 + 1 = 7.
        let cfg = Config::default();
        let f = Field::new(2, 1, None).unwrap();
        let c4 = crate::groups::c4();
        let mods = all_modules_up_to_dim(&c4, &f, 3, &cfg).unwrap();
        assert_eq!(mods.len(), 7);
    }

    #[test]
    fn s4a4_data_certifies() {
        let cfg = Config::default();
        let data = s4a4_data(&cfg).unwrap();
        let dims: Vec<usize> = data.bricks.iter().map(|(_, b)| b.dim()).collect();
        assert_eq!(dims, vec![1, 2, 4, 3, 3, 4]);
        assert!(!is_brick(&data.kk, &cfg).unwrap());
        for (_, m) in &data.n_modules {
            assert!(m.dim() >= 1);
        }
    }
}
