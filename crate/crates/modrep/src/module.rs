//! Finite-dimensional modules over a group algebra kG, given by invertible
//! matrices for the group generators, together with the functors between
//! them: restriction, induction, tensor product with diagonal action,
//! conjugation, coset permutation modules, free modules and direct sums.
//!
//! A module stores matrices only for the generators; matrices of other
//! elements are expanded from their discovery words on demand and memoized.

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::matrix::{Echelon, LinearSolver, Matrix, Vector};
use crate::perm::{coset_reps, is_normal, CosetSystem, Group, Perm};
use std::sync::{Arc, OnceLock};

struct Inner {
    group: Arc<Group>,
    field: Field,
    dim: usize,
    gen_mats: Vec<Matrix>,
    cache: Vec<OnceLock<Arc<Matrix>>>,
}

/// A kG-module. Cheap to clone; the element-matrix memo is shared and
/// behaves as a pure cache, so values are immutable for all observers.
#[derive(Clone)]
pub struct Module(Arc<Inner>);

impl std::fmt::Debug for Module {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Module(dim {} over {:?}, {:?})",
            self.dim(),
            self.field(),
            self.group()
        )
    }
}

impl Module {
    /// Validated constructor: checks that each generator matrix is square of
    /// the right size and invertible, and that the assignment extends to a
    /// group homomorphism (checked exhaustively over the element graph).
    pub fn new(group: Arc<Group>, field: Field, gen_mats: Vec<Matrix>) -> Result<Module> {
        if gen_mats.len() != group.generators().len() {
            return Err(Error::InvalidInput(format!(
                "{} generator matrices for {} generators",
                gen_mats.len(),
                group.generators().len()
            )));
        }
        let dim = gen_mats.first().map_or(0, |m| m.rows());
        for (mat, name) in gen_mats.iter().zip(group.generator_names()) {
            if mat.rows() != dim || mat.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator `{}` is {}x{}, expected {}x{}",
                    name,
                    mat.rows(),
                    mat.cols(),
                    dim,
                    dim
                )));
            }
            if mat.field() != &field {
                return Err(Error::FieldMismatch);
            }
            if dim > 0 && !mat.is_invertible() {
                return Err(Error::NotInvertible { name: name.clone() });
            }
        }
        let m = Module::new_unchecked(group, field, dim, gen_mats);
        m.validate_homomorphism()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        group: Arc<Group>,
        field: Field,
        dim: usize,
        gen_mats: Vec<Matrix>,
    ) -> Module {
        let cache = (0..group.order()).map(|_| OnceLock::new()).collect();
        Module(Arc::new(Inner {
            group,
            field,
            dim,
            gen_mats,
            cache,
        }))
    }

    /// Word-consistency check over the whole Cayley graph: for every element
    /// x (with its canonical matrix) and every generator g, the canonical
    /// matrix of x*g must equal mat(x)*mat(g).
    fn validate_homomorphism(&self) -> Result<()> {
        let g = self.group();
        for i in 0..g.order() {
            let mi = self.elem_matrix(i);
            for (gi, gen) in g.generators().iter().enumerate() {
                let j = g
                    .index_of(&g.element(i).compose(gen))
                    .expect("group closed under multiplication");
                let expect = self.elem_matrix(j);
                if mi.mul(&self.0.gen_mats[gi]) != *expect {
                    let mut word: Vec<String> = g
                        .word(i)
                        .into_iter()
                        .map(|k| g.generator_names()[k].clone())
                        .collect();
                    word.push(g.generator_names()[gi].clone());
                    return Err(Error::NotAHomomorphism { word });
                }
            }
        }
        Ok(())
    }

    /// The trivial one-dimensional module: every generator acts as 1.
    pub fn trivial(group: &Arc<Group>, field: &Field) -> Module {
        let gen_mats = group
            .generators()
            .iter()
            .map(|_| Matrix::identity(field, 1))
            .collect();
        Module::new_unchecked(Arc::clone(group), field.clone(), 1, gen_mats)
    }

    /// The zero module.
    pub fn zero(group: &Arc<Group>, field: &Field) -> Module {
        let gen_mats = group
            .generators()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Module::new_unchecked(Arc::clone(group), field.clone(), 0, gen_mats)
    }

    /// Free module of the given rank: `rank` copies of the regular
    /// representation, basis indexed by (copy, group element).
    pub fn free(group: &Arc<Group>, field: &Field, rank: usize) -> Module {
        let n = group.order();
        let mut gen_mats = Vec::new();
        for gen in group.generators() {
            let mut block = Matrix::zeros(field, n, n);
            for h in 0..n {
                // g . e_h = e_{g h}
                let gh = group.index_of(&gen.compose(group.element(h))).unwrap();
                block.set(gh, h, FieldElem::ONE);
            }
            let blocks: Vec<&Matrix> = (0..rank).map(|_| &block).collect();
            gen_mats.push(Matrix::block_diag(field, &blocks));
        }
        Module::new_unchecked(Arc::clone(group), field.clone(), n * rank, gen_mats)
    }

    /// Permutation module k[G/N] on the left cosets of a normal subgroup.
    pub fn perm_module(g: &Arc<Group>, n: &Arc<Group>, field: &Field) -> Result<Module> {
        let cosets = coset_reps(g, n)?;
        let k = cosets.index();
        let mut gen_mats = Vec::new();
        for gen in g.generators() {
            let mut m = Matrix::zeros(field, k, k);
            for i in 0..k {
                let (j, _) = cosets.factor(gen, i);
                m.set(j, i, FieldElem::ONE);
            }
            gen_mats.push(m);
        }
        Ok(Module::new_unchecked(
            Arc::clone(g),
            field.clone(),
            k,
            gen_mats,
        ))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.0.group
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn gen_matrices(&self) -> &[Matrix] {
        &self.0.gen_mats
    }

    /// Matrix of an arbitrary element, by word expansion with memoization.
    pub fn elem_matrix(&self, i: usize) -> Arc<Matrix> {
        if let Some(m) = self.0.cache[i].get() {
            return Arc::clone(m);
        }
        let m = match self.0.group.parent(i) {
            None => Arc::new(Matrix::identity(&self.0.field, self.0.dim)),
            Some((parent, gi)) => {
                let pm = self.elem_matrix(parent);
                Arc::new(pm.mul(&self.0.gen_mats[gi]))
            }
        };
        Arc::clone(self.0.cache[i].get_or_init(|| m))
    }

    pub fn elem_matrix_of(&self, p: &Perm) -> Result<Arc<Matrix>> {
        let i = self.0.group.index_of(p).ok_or(Error::NotASubgroup)?;
        Ok(self.elem_matrix(i))
    }

    /// Restriction to a subgroup (same underlying space, generator matrices
    /// expanded as words in the ambient generators).
    pub fn restrict(&self, sub: &Arc<Group>) -> Result<Module> {
        if !self.0.group.contains_group(sub) {
            return Err(Error::NotASubgroup);
        }
        let mut gen_mats = Vec::new();
        for h in sub.generators() {
            gen_mats.push((*self.elem_matrix_of(h)?).clone());
        }
        Ok(Module::new_unchecked(
            Arc::clone(sub),
            self.0.field.clone(),
            self.0.dim,
            gen_mats,
        ))
    }

    /// Induction to an ambient group in which this module's group is normal.
    /// Basis indexed by (coset representative, module basis vector), with the
    /// representative index major.
    pub fn induce(&self, ambient: &Arc<Group>) -> Result<Module> {
        let cosets = coset_reps(ambient, &Arc::clone(self.group()))?;
        self.induce_cosets(&cosets)
    }

    pub fn induce_cosets(&self, cosets: &CosetSystem) -> Result<Module> {
        if !cosets.subgroup.same_group(self.group()) {
            return Err(Error::GroupMismatch);
        }
        let idx = cosets.index();
        let d = self.dim();
        let field = self.field().clone();
        let mut gen_mats = Vec::new();
        for gen in cosets.ambient.generators() {
            let mut m = Matrix::zeros(&field, idx * d, idx * d);
            for i in 0..idx {
                // g * r_i = r_j * n
                let (j, ni) = cosets.factor(gen, i);
                // map the subgroup element index into our own group's indexing
                let own = self
                    .group()
                    .index_of(cosets.subgroup.element(ni))
                    .expect("same underlying subgroup");
                let block = self.elem_matrix(own);
                for r in 0..d {
                    for c in 0..d {
                        let v = block.get(r, c);
                        if !v.is_zero() {
                            m.set(j * d + r, i * d + c, v);
                        }
                    }
                }
            }
            gen_mats.push(m);
        }
        Ok(Module::new_unchecked(
            Arc::clone(&cosets.ambient),
            field,
            idx * d,
            gen_mats,
        ))
    }

    /// Tensor product over k with the diagonal action.
    pub fn tensor(&self, other: &Module) -> Result<Module> {
        if !self.group().same_group(other.group()) {
            return Err(Error::GroupMismatch);
        }
        if self.field() != other.field() {
            return Err(Error::FieldMismatch);
        }
        let gen_mats = self
            .0
            .gen_mats
            .iter()
            .zip(&other.0.gen_mats)
            .map(|(a, b)| a.kronecker(b))
            .collect();
        Ok(Module::new_unchecked(
            Arc::clone(self.group()),
            self.field().clone(),
            self.dim() * other.dim(),
            gen_mats,
        ))
    }

    /// Conjugate module: same space, with x acting through g^{-1} x g.
    pub fn conjugate(&self, g: &Perm, ambient: &Arc<Group>) -> Result<Module> {
        if !ambient.contains_group(self.group()) {
            return Err(Error::NotASubgroup);
        }
        let gi = g.inverse();
        let mut gen_mats = Vec::new();
        for x in self.group().generators() {
            let conj = gi.compose(x).compose(g);
            let idx = self
                .group()
                .index_of(&conj)
                .ok_or(Error::ConjugationLeavesSubgroup)?;
            gen_mats.push((*self.elem_matrix(idx)).clone());
        }
        Ok(Module::new_unchecked(
            Arc::clone(self.group()),
            self.field().clone(),
            self.dim(),
            gen_mats,
        ))
    }

    /// Block-diagonal direct sum. The empty sum is the zero module.
    pub fn direct_sum(group: &Arc<Group>, field: &Field, summands: &[Module]) -> Result<Module> {
        for s in summands {
            if !s.group().same_group(group) {
                return Err(Error::GroupMismatch);
            }
            if s.field() != field {
                return Err(Error::FieldMismatch);
            }
        }
        let dim: usize = summands.iter().map(|m| m.dim()).sum();
        let mut gen_mats = Vec::new();
        for gi in 0..group.generators().len() {
            let blocks: Vec<&Matrix> = summands.iter().map(|m| &m.0.gen_mats[gi]).collect();
            gen_mats.push(Matrix::block_diag(field, &blocks));
        }
        Ok(Module::new_unchecked(
            Arc::clone(group),
            field.clone(),
            dim,
            gen_mats,
        ))
    }

    /// Stable content bytes: field, group, dimension and generator matrices.
    pub fn content_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let spec = self.field().spec();
        out.extend(spec.p.to_le_bytes());
        out.extend(spec.n.to_le_bytes());
        for c in &spec.modulus {
            out.extend(c.to_le_bytes());
        }
        self.group().content_bytes(&mut out);
        out.extend((self.dim() as u32).to_le_bytes());
        for m in &self.0.gen_mats {
            m.content_bytes(&mut out);
        }
        out
    }

    pub fn content_hash(&self) -> u64 {
        crate::config::fnv64(&self.content_bytes())
    }

    /// Representation-equality (same group, field, and generator matrices);
    /// much finer than isomorphism.
    pub fn same_matrices(&self, other: &Module) -> bool {
        self.dim() == other.dim()
            && self.field() == other.field()
            && self.group().same_group(other.group())
            && self.0.gen_mats == other.0.gen_mats
    }
}

/// An intertwiner between modules over the same group: a matrix `F` of shape
/// target.dim x source.dim with `F rho_source(g) = rho_target(g) F` for all
/// generators.
#[derive(Clone)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModuleMap({} -> {})",
            self.source.dim(),
            self.target.dim()
        )
    }
}

impl ModuleMap {
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<ModuleMap> {
        let m = ModuleMap::new_unchecked(source, target, matrix);
        if !m.is_intertwiner() {
            return Err(Error::InvalidInput(
                "matrix does not intertwine the actions".into(),
            ));
        }
        Ok(m)
    }

    pub fn new_unchecked(source: Module, target: Module, matrix: Matrix) -> ModuleMap {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        ModuleMap {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(module: &Module) -> ModuleMap {
        ModuleMap::new_unchecked(
            module.clone(),
            module.clone(),
            Matrix::identity(module.field(), module.dim()),
        )
    }

    pub fn is_intertwiner(&self) -> bool {
        if !self.source.group().same_group(self.target.group()) {
            return false;
        }
        self.source
            .gen_matrices()
            .iter()
            .zip(self.target.gen_matrices())
            .all(|(s, t)| self.matrix.mul(s) == t.mul(&self.matrix))
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap::new_unchecked(
            other.source.clone(),
            self.target.clone(),
            self.matrix.mul(&other.matrix),
        )
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn inverse(&self) -> Option<ModuleMap> {
        let inv = self.matrix.inverse()?;
        Some(ModuleMap::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            inv,
        ))
    }
}

/// A submodule presented by a spanning set of row vectors. The rows are
/// echelonized; the returned module has the echelon basis, and the map is
/// the inclusion.
pub fn submodule(m: &Module, span: &[Vector]) -> (Module, ModuleMap) {
    let field = m.field().clone();
    let mut ech = Echelon::new(&field, m.dim());
    for v in span {
        ech.insert(v);
    }
    let basis = ech.into_matrix(); // k x dim
    let k = basis.rows();
    // inclusion matrix: dim x k, columns are the basis vectors
    let incl = basis.transpose();
    let solver = LinearSolver::new(&incl);
    let mut gen_mats = Vec::new();
    for g in m.gen_matrices() {
        let mut act = Matrix::zeros(&field, k, k);
        for j in 0..k {
            let image = g.apply(basis.row(j));
            let coords = solver
                .solve(&image)
                .expect("span is not closed under the action; not a submodule");
            for (i, &c) in coords.iter().enumerate() {
                act.set(i, j, c);
            }
        }
        gen_mats.push(act);
    }
    let sub = Module::new_unchecked(Arc::clone(m.group()), field, k, gen_mats);
    let map = ModuleMap::new_unchecked(sub.clone(), m.clone(), incl);
    (sub, map)
}

/// Quotient by the span of the given rows; returns the quotient module and
/// the projection.
pub fn quotient(m: &Module, span: &[Vector]) -> (Module, ModuleMap) {
    let field = m.field().clone();
    let mut ech = Echelon::new(&field, m.dim());
    for v in span {
        ech.insert(v);
    }
    let pivots: Vec<usize> = {
        let basis = ech.basis();
        basis
            .iter()
            .map(|r| r.iter().position(|e| !e.is_zero()).unwrap())
            .collect()
    };
    let free: Vec<usize> = (0..m.dim()).filter(|c| !pivots.contains(c)).collect();
    let k = free.len();
    // projection: reduce each standard basis vector, read free coordinates
    let mut proj = Matrix::zeros(&field, k, m.dim());
    for j in 0..m.dim() {
        let mut e = vec![FieldElem::ZERO; m.dim()];
        e[j] = FieldElem::ONE;
        let r = ech.reduce(&e);
        for (i, &c) in free.iter().enumerate() {
            proj.set(i, j, r[c]);
        }
    }
    let mut gen_mats = Vec::new();
    for g in m.gen_matrices() {
        let mut act = Matrix::zeros(&field, k, k);
        for (j, &c) in free.iter().enumerate() {
            let mut e = vec![FieldElem::ZERO; m.dim()];
            e[c] = FieldElem::ONE;
            let image = g.apply(&e);
            let r = ech.reduce(&image);
            for (i, &fc) in free.iter().enumerate() {
                act.set(i, j, r[fc]);
            }
        }
        gen_mats.push(act);
    }
    let q = Module::new_unchecked(Arc::clone(m.group()), field, k, gen_mats);
    let map = ModuleMap::new_unchecked(m.clone(), q.clone(), proj);
    (q, map)
}

/// Test oracle: full multiplication-table check of the representation
/// property, independent of the word-based construction check.
pub fn is_representation(m: &Module) -> bool {
    let g = m.group();
    for a in 0..g.order() {
        for b in 0..g.order() {
            let ab = g.mul(a, b);
            if *m.elem_matrix(ab) != m.elem_matrix(a).mul(&m.elem_matrix(b)) {
                return false;
            }
        }
    }
    true
}

pub use crate::perm::is_p_power;

/// Index of a subgroup, via the coset system (requires normality).
pub fn subgroup_index(g: &Arc<Group>, n: &Arc<Group>) -> Result<usize> {
    Ok(coset_reps(g, n)?.index())
}

/// Guard used by the restriction theorems: the index must be a power of the
/// coefficient characteristic.
pub fn require_p_power_index(g: &Arc<Group>, n: &Arc<Group>, field: &Field) -> Result<usize> {
    let idx = subgroup_index(g, n)?;
    if !is_p_power(idx, field.characteristic()) {
        return Err(Error::IndexNotPPower {
            index: idx,
            p: field.characteristic(),
        });
    }
    Ok(idx)
}

pub fn require_normal(g: &Arc<Group>, n: &Arc<Group>) -> Result<()> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn gf4() -> Field {
        Field::new(2, 2, None).unwrap()
    }

    #[test]
    fn trivial_module_restricts_to_trivial() {
        let g = groups::s4();
        let n = groups::a4();
        let f = gf4();
        let kg = Module::trivial(&g, &f);
        assert_eq!(kg.dim(), 1);
        let kn = kg.restrict(&n).unwrap();
        assert!(kn.same_matrices(&Module::trivial(&n, &f)));
        let t = Module::trivial(&Group::trivial(1), &Field::new(2, 1, None).unwrap());
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn natural_two_dimensional_module_is_valid() {
        let f = gf4();
        let s2 = groups::s4_natural2(&f);
        assert_eq!(s2.dim(), 2);
        assert!(is_representation(&s2));
    }

    #[test]
    fn identity_assignment_is_valid() {
        let g = groups::s4();
        let f = gf4();
        let mats = vec![Matrix::identity(&f, 3), Matrix::identity(&f, 3)];
        let m = Module::new(g, f, mats).unwrap();
        assert_eq!(m.dim(), 3);
    }

    #[test]
    fn nonhomomorphism_rejected_with_witness() {
        // over kA4: send the 3-cycle to the identity but the double
        // transposition to a unipotent; this cannot extend to A4
        let n = groups::a4();
        let f = gf4();
        let unipotent = Matrix::from_rows(
            &f,
            vec![
                vec![FieldElem::ONE, FieldElem::ONE],
                vec![FieldElem::ZERO, FieldElem::ONE],
            ],
        );
        let mats = vec![Matrix::identity(&f, 2), unipotent];
        match Module::new(n, f, mats) {
            Err(Error::NotAHomomorphism { word }) => assert!(!word.is_empty()),
            other => panic!(
                "expected NotAHomomorphism, got {:?}",
                other.map(|m| m.dim())
            ),
        }
    }

    #[test]
    fn singular_generator_rejected() {
        let g = groups::c2();
        let f = gf4();
        let mats = vec![Matrix::zeros(&f, 1, 1)];
        assert!(matches!(
            Module::new(g, f, mats),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn restriction_of_whole_group_is_identity_functor() {
        let g = groups::s4();
        let f = gf4();
        let s2 = groups::s4_natural2(&f);
        let again = s2.restrict(&g).unwrap();
        assert!(again.same_matrices(&s2));
    }

    #[test]
    fn induction_dimensions() {
        let g = groups::s4();
        let n = groups::a4();
        let f = gf4();
        let kn = Module::trivial(&n, &f);
        let ind = kn.induce(&g).unwrap();
        assert_eq!(ind.dim(), 2);
        assert!(is_representation(&ind));
        // Ind over the group itself is the identity functor up to matrices
        let kg = Module::trivial(&g, &f);
        let same = kg.induce(&g).unwrap();
        assert_eq!(same.dim(), 1);
        assert!(same.same_matrices(&kg));
        // index count for the Klein subgroup
        let n1 = groups::klein4();
        let k1 = Module::trivial(&n1, &f);
        assert_eq!(k1.induce(&g).unwrap().dim(), 6);
    }

    #[test]
    fn tensor_unit_and_dims() {
        let g = groups::s4();
        let f = gf4();
        let kg = Module::trivial(&g, &f);
        let s2 = groups::s4_natural2(&f);
        let t = kg.tensor(&s2).unwrap();
        assert_eq!(t.dim(), 2);
        // tensoring with the trivial module reproduces the matrices exactly
        assert!(t.same_matrices(&s2));
        let tt = s2.tensor(&s2).unwrap();
        assert_eq!(tt.dim(), 4);
        assert!(is_representation(&tt));
    }

    #[test]
    fn conjugation_by_identity_and_inverse() {
        let g = groups::s4();
        let n = groups::a4();
        let f = gf4();
        let t1 = groups::a4_character(&f, 1);
        let e = Perm::identity(4);
        assert!(t1.conjugate(&e, &g).unwrap().same_matrices(&t1));
        let odd = Perm::from_cycles(4, &[&[0, 1]]).unwrap();
        let back = t1
            .conjugate(&odd, &g)
            .unwrap()
            .conjugate(&odd.inverse(), &g)
            .unwrap();
        assert!(back.same_matrices(&t1));
        assert!(n.index_of(&odd).is_none());
    }

    #[test]
    fn perm_module_basics() {
        let g = groups::s4();
        let n = groups::a4();
        let f = gf4();
        let pm = Module::perm_module(&g, &n, &f).unwrap();
        assert_eq!(pm.dim(), 2);
        assert!(is_representation(&pm));
        let whole = Module::perm_module(&g, &g, &f).unwrap();
        assert!(whole.same_matrices(&Module::trivial(&g, &f)));
    }

    #[test]
    fn free_module_and_direct_sum() {
        let g = groups::s4();
        let f = Field::new(2, 1, None).unwrap();
        let free = Module::free(&g, &f, 1);
        assert_eq!(free.dim(), 24);
        let zero = Module::direct_sum(&g, &f, &[]).unwrap();
        assert_eq!(zero.dim(), 0);
        let two = Module::direct_sum(&g, &f, &[Module::trivial(&g, &f), Module::trivial(&g, &f)])
            .unwrap();
        assert_eq!(two.dim(), 2);
    }

    #[test]
    fn submodule_quotient_roundtrip() {
        let c2 = groups::c2();
        let f = Field::new(2, 1, None).unwrap();
        let free = Module::free(&c2, &f, 1);
        // the socle of the regular kC2-module: span of e_0 + e_1
        let v = vec![FieldElem::ONE, FieldElem::ONE];
        let (sub, incl) = submodule(&free, &[v.clone()]);
        assert_eq!(sub.dim(), 1);
        assert!(incl.is_intertwiner());
        let (q, proj) = quotient(&free, &[v]);
        assert_eq!(q.dim(), 1);
        assert!(proj.is_intertwiner());
        assert!(proj.is_surjective());
    }
}
