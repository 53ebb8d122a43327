//! Restriction of bricks and semibricks along a normal subgroup: the
//! Clifford-style decomposition with certificates, conjugation and tensor
//! stability of extension-closed subcategories generated by semibricks, the
//! averaged retraction for coprime index, and the two-step presentation of a
//! module by copies of the coset permutation module tensored with it.

use crate::config::Config;
use crate::decomp::{decompose, filt_member, is_brick, is_semibrick_set, Decomposition};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::hom::is_isomorphic;
use crate::matrix::Matrix;
use crate::module::{require_normal, require_p_power_index, subgroup_index, Module, ModuleMap};
use crate::perm::{coset_reps, Group};
use serde::Serialize;
use std::sync::Arc;

/// Result of decomposing the restriction of a brick, with all certificates
/// demanded by the restriction theorem: the distinct summands form a
/// semibrick, conjugation by coset representatives acts transitively on
/// them, and dimensions and multiplicities agree.
#[derive(Debug, Serialize)]
pub struct CliffordReport {
    pub summands: Vec<CliffordSummand>,
    pub semibrick_certificate: bool,
    pub transitive: bool,
    pub equal_dims: bool,
    pub equal_mults: bool,
    /// The underlying decomposition of the restricted module, whose witness
    /// is the stored isomorphism from the summand direct sum.
    #[serde(skip)]
    pub decomposition: Decomposition,
}

#[derive(Debug, Serialize)]
pub struct CliffordSummand {
    pub dim: usize,
    pub multiplicity: usize,
    /// Image list of a coset representative carrying the first summand to
    /// this one.
    pub witness: Option<Vec<usize>>,
}

impl CliffordReport {
    pub fn all_certified(&self) -> bool {
        self.semibrick_certificate && self.transitive && self.equal_dims && self.equal_mults
    }
}

/// Decompose the restriction of a brick to a normal subgroup and certify
/// the restriction-theorem conclusions.
///
/// The hypothesis is verified before any work: either the index `[G:N]` is
/// a power of the coefficient characteristic, or the caller supplies a
/// semibrick containing the brick whose extension closure is stable under
/// tensoring with k[G/N].
pub fn clifford_decompose(
    s: &Module,
    g: &Arc<Group>,
    n: &Arc<Group>,
    stable_semibrick: Option<&[Module]>,
    cfg: &Config,
) -> Result<CliffordReport> {
    require_normal(g, n)?;
    if !is_brick(s, cfg)? {
        return Err(Error::HypothesisNotVerified(
            "input module is not a brick".into(),
        ));
    }
    let index = subgroup_index(g, n)?;
    let p = s.field().characteristic();
    if !crate::perm::is_p_power(index, p) {
        match stable_semibrick {
            None => {
                return Err(Error::HypothesisNotVerified(format!(
                    "index {} is not a {}-power and no tensor-stable semibrick was supplied",
                    index, p
                )))
            }
            Some(sb) => {
                let mut contains = false;
                for member in sb {
                    if is_isomorphic(member, s, cfg)?.is_some() {
                        contains = true;
                        break;
                    }
                }
                if !contains {
                    return Err(Error::HypothesisNotVerified(
                        "supplied semibrick does not contain the brick".into(),
                    ));
                }
                if !is_tensor_stable(sb, g, n, cfg)? {
                    return Err(Error::HypothesisNotVerified(
                        "supplied semibrick is not stable under tensoring with k[G/N]".into(),
                    ));
                }
            }
        }
    }
    let res = s.restrict(n)?;
    let dec = decompose(&res, cfg)?;
    let distinct: Vec<Module> = dec.summands.iter().map(|(m, _)| m.clone()).collect();
    let semibrick_certificate = is_semibrick_set(&distinct, cfg)?;
    let cosets = coset_reps(g, n)?;
    let mut summands = Vec::new();
    let mut transitive = true;
    for (i, (t, mult)) in dec.summands.iter().enumerate() {
        let witness = if i == 0 {
            Some(g.element(0).images())
        } else {
            let mut found = None;
            for &r in &cosets.reps {
                let conj = distinct[0].conjugate(g.element(r), g)?;
                if is_isomorphic(&conj, t, cfg)?.is_some() {
                    found = Some(g.element(r).images());
                    break;
                }
            }
            if found.is_none() {
                transitive = false;
            }
            found
        };
        summands.push(CliffordSummand {
            dim: t.dim(),
            multiplicity: *mult,
            witness,
        });
    }
    let equal_dims = dec
        .summands
        .windows(2)
        .all(|w| w[0].0.dim() == w[1].0.dim());
    let equal_mults = dec.summands.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(CliffordReport {
        summands,
        semibrick_certificate,
        transitive,
        equal_dims,
        equal_mults,
        decomposition: dec,
    })
}

/// Stability of the extension closure of a semibrick under tensoring with
/// the coset permutation module: checked on the generators, which suffices
/// because the tensor functor is exact and the closure is extension-closed.
pub fn is_tensor_stable(
    semibrick: &[Module],
    g: &Arc<Group>,
    n: &Arc<Group>,
    cfg: &Config,
) -> Result<bool> {
    if !is_semibrick_set(semibrick, cfg)? {
        return Err(Error::HypothesisNotVerified(
            "generators are not a semibrick".into(),
        ));
    }
    let field = semibrick
        .first()
        .map(|m| m.field().clone())
        .ok_or_else(|| Error::InvalidInput("empty semibrick".into()))?;
    let pm = Module::perm_module(g, n, &field)?;
    for s in semibrick {
        let t = pm.tensor(s)?;
        if filt_member(&t, semibrick, cfg)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Conjugation invariance of the extension closure of a semibrick over kN,
/// checked against every coset representative of G/N.
pub fn is_g_invariant(
    semibrick: &[Module],
    g: &Arc<Group>,
    n: &Arc<Group>,
    cfg: &Config,
) -> Result<bool> {
    if !is_semibrick_set(semibrick, cfg)? {
        return Err(Error::HypothesisNotVerified(
            "generators are not a semibrick".into(),
        ));
    }
    let cosets = coset_reps(g, n)?;
    for &r in &cosets.reps {
        if r == 0 {
            continue;
        }
        let rep = g.element(r);
        for s in semibrick {
            let conj = s.conjugate(rep, g)?;
            if filt_member(&conj, semibrick, cfg)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Restrict a semibrick along a p-power-index normal subgroup: the
/// deduplicated set of indecomposable summands of the restrictions,
/// together with the semibrick certificate of the result.
pub fn restrict_semibrick(
    semibrick: &[Module],
    g: &Arc<Group>,
    n: &Arc<Group>,
    cfg: &Config,
) -> Result<(Vec<Module>, bool)> {
    let field = semibrick
        .first()
        .map(|m| m.field().clone())
        .ok_or_else(|| Error::InvalidInput("empty semibrick".into()))?;
    require_p_power_index(g, n, &field)?;
    let mut out: Vec<Module> = Vec::new();
    for s in semibrick {
        let res = s.restrict(n)?;
        let dec = decompose(&res, cfg)?;
        for (t, _) in dec.summands {
            let mut dup = false;
            for known in &out {
                if known.dim() == t.dim() && is_isomorphic(known, &t, cfg)?.is_some() {
                    dup = true;
                    break;
                }
            }
            if !dup {
                out.push(t);
            }
        }
    }
    let certified = is_semibrick_set(&out, cfg)?;
    Ok((out, certified))
}

/// Average a kN-retraction over coset representatives to a kG-retraction:
/// pi' = (G:N)^{-1} * sum_g g pi g^{-1}.
///
/// `iota` is an injective kG-map W -> V and `pi` a kN-map with
/// pi o Res(iota) = id. Requires the index to be invertible in k.
pub fn averaged_retraction(
    iota: &ModuleMap,
    pi: &ModuleMap,
    g: &Arc<Group>,
    n: &Arc<Group>,
    _cfg: &Config,
) -> Result<ModuleMap> {
    let v = &iota.target;
    let w = &iota.source;
    let field = v.field().clone();
    let cosets = coset_reps(g, n)?;
    let index = cosets.index();
    let p = field.characteristic();
    if index % p as usize == 0 {
        return Err(Error::IndexDivisibleByP { index, p });
    }
    if pi.matrix.rows() != w.dim() || pi.matrix.cols() != v.dim() {
        return Err(Error::DimensionMismatch("retraction shape".into()));
    }
    if pi.matrix.mul(&iota.matrix) != Matrix::identity(&field, w.dim()) {
        return Err(Error::NotARetraction);
    }
    let scalar = field
        .inv(field.elem(index as u32 % p))
        .expect("index is invertible modulo p");
    let mut sum = Matrix::zeros(&field, w.dim(), v.dim());
    for &r in &cosets.reps {
        let gw = w.elem_matrix(r);
        let gv_inv = v.elem_matrix(g.inv(r));
        sum = sum.add(&gw.mul(&pi.matrix).mul(&gv_inv));
    }
    let averaged = sum.scale(scalar);
    let out = ModuleMap::new(v.clone(), w.clone(), averaged).map_err(|_| Error::NotARetraction)?;
    if out.matrix.mul(&iota.matrix) != Matrix::identity(&field, w.dim()) {
        return Err(Error::NotARetraction);
    }
    Ok(out)
}

/// The right-exact presentation `(k[G/N] (x) X)^m -> k[G/N] (x) X -> X -> 0`,
/// where `m = [G:N] - 1` and the first map is built from right
/// multiplications by `[cN] - [N]` on the coset module.
pub struct PermTensorPresentation {
    pub copies: usize,
    pub first: ModuleMap,
    pub second: ModuleMap,
    pub exact: bool,
}

pub fn perm_tensor_presentation(
    x: &Module,
    g: &Arc<Group>,
    n: &Arc<Group>,
) -> Result<PermTensorPresentation> {
    let field = x.field().clone();
    let cosets = coset_reps(g, n)?;
    let index = cosets.index();
    let pm = Module::perm_module(g, n, &field)?;
    let pmx = pm.tensor(x)?;
    // right multiplication by [cN] on the coset basis commutes with the
    // left action; subtracting the identity generates the augmentation ideal
    let idx_id = Matrix::identity(&field, index);
    let x_id = Matrix::identity(&field, x.dim());
    let mut blocks = Vec::new();
    for c in 1..index {
        let mut rc = Matrix::zeros(&field, index, index);
        for i in 0..index {
            let prod = g.element(cosets.reps[i]).compose(g.element(cosets.reps[c]));
            let j = cosets.coset_of(g.index_of(&prod).expect("closed"));
            rc.set(j, i, FieldElem::ONE);
        }
        blocks.push(rc.sub(&idx_id).kronecker(&x_id));
    }
    let copies = index - 1;
    let copies_of_pmx = vec![pmx.clone(); copies];
    let source = Module::direct_sum(g, &field, &copies_of_pmx)?;
    let mut first_mat = Matrix::zeros(&field, pmx.dim(), source.dim());
    for (b, block) in blocks.iter().enumerate() {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                let v = block.get(i, j);
                if !v.is_zero() {
                    first_mat.set(i, b * pmx.dim() + j, v);
                }
            }
        }
    }
    let first = ModuleMap::new(source, pmx.clone(), first_mat)?;
    // augmentation tensored with the identity of X
    let ones = Matrix::from_fn(&field, 1, index, |_, _| FieldElem::ONE);
    let second = ModuleMap::new(pmx.clone(), x.clone(), ones.kronecker(&x_id))?;
    let surjective = second.matrix.rank() == x.dim();
    let composite_zero = second.matrix.mul(&first.matrix).is_zero();
    let ranks_match = first.matrix.rank() == pmx.dim() - x.dim();
    let exact = surjective && composite_zero && ranks_match;
    Ok(PermTensorPresentation {
        copies,
        first,
        second,
        exact,
    })
}

/// Precondition check used by the torsion-class commutation test: every
/// conjugate of every indecomposable summand of X must again be a summand.
pub fn is_add_g_invariant(
    x: &Module,
    g: &Arc<Group>,
    n: &Arc<Group>,
    cfg: &Config,
) -> Result<bool> {
    let cosets = coset_reps(g, n)?;
    if x.dim() == 0 {
        return Ok(true);
    }
    let dec = decompose(x, cfg)?;
    for (t, _) in &dec.summands {
        for &r in &cosets.reps {
            let conj = t.conjugate(g.element(r), g)?;
            let mut found = false;
            for (u, _) in &dec.summands {
                if u.dim() == conj.dim() && is_isomorphic(u, &conj, cfg)?.is_some() {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Conjugates of a module by all coset representatives (including the
/// identity), used to close generator lists under the group action.
pub fn conjugate_orbit(
    m: &Module,
    g: &Arc<Group>,
    n: &Arc<Group>,
    cfg: &Config,
) -> Result<Vec<Module>> {
    let cosets = coset_reps(g, n)?;
    let mut out: Vec<Module> = Vec::new();
    for &r in &cosets.reps {
        let conj = m.conjugate(g.element(r), g)?;
        let mut dup = false;
        for known in &out {
            if known.dim() == conj.dim() && is_isomorphic(known, &conj, cfg)?.is_some() {
                dup = true;
                break;
            }
        }
        if !dup {
            out.push(conj);
        }
    }
    Ok(out)
}
