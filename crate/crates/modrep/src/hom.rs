//! Hom spaces, endomorphism algebras, first extension groups and
//! isomorphism testing.
//!
//! Hom(M, N) is the kernel of the intertwiner system, one equation block per
//! group generator. Ext^1(M, N) is computed from the one-step free
//! presentation of M with the all-basis-vectors generating set: surject
//! F0 = (kG)^(dim M) onto M, let K be the kernel, and take
//! Hom(K, N) / image(Hom(F0, N)). Representative cocycles can be turned
//! into explicit extension modules by pushout.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::matrix::{Echelon, LinearSolver, Matrix, Vector};
use crate::module::{quotient, Module, ModuleMap};
use rand::Rng;
use std::sync::Arc;

/// A basis of the space of intertwiners from `source` to `target`.
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    pub basis: Vec<ModuleMap>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The map with the given coefficients against the basis.
    pub fn combine(&self, coeffs: &[FieldElem]) -> ModuleMap {
        let f = self.source.field();
        let mut m = Matrix::zeros(f, self.target.dim(), self.source.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.matrix.scale(*c));
            }
        }
        ModuleMap::new_unchecked(self.source.clone(), self.target.clone(), m)
    }
}

fn check_compatible(m: &Module, n: &Module) -> Result<()> {
    if !m.group().same_group(n.group()) {
        return Err(Error::GroupMismatch);
    }
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// The intertwiner system as a matrix: unknowns are the entries of F
/// (target.dim x source.dim, row-major), equations F A_g - B_g F = 0.
fn intertwiner_system(
    source_gens: &[Matrix],
    target_gens: &[Matrix],
    field: &Field,
    m: usize,
    n: usize,
) -> Matrix {
    let rows = source_gens.len() * n * m;
    let mut sys = Matrix::zeros(field, rows, n * m);
    let mut row = 0;
    for (a, b) in source_gens.iter().zip(target_gens) {
        for i in 0..n {
            for j in 0..m {
                // sum_k F[i,k] A[k,j] - sum_k B[i,k] F[k,j] = 0
                for k in 0..m {
                    let c = a.get(k, j);
                    if !c.is_zero() {
                        let col = i * m + k;
                        let cur = sys.get(row, col);
                        sys.set(row, col, field.add(cur, c));
                    }
                }
                for k in 0..n {
                    let c = b.get(i, k);
                    if !c.is_zero() {
                        let col = k * m + j;
                        let cur = sys.get(row, col);
                        sys.set(row, col, field.sub(cur, c));
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

pub fn hom_basis(source: &Module, target: &Module) -> Result<HomSpace> {
    check_compatible(source, target)?;
    let field = source.field();
    let (m, n) = (source.dim(), target.dim());
    if m == 0 || n == 0 {
        return Ok(HomSpace {
            source: source.clone(),
            target: target.clone(),
            basis: vec![],
        });
    }
    let sys = intertwiner_system(source.gen_matrices(), target.gen_matrices(), field, m, n);
    let basis = sys
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mat = Matrix::from_fn(field, n, m, |i, j| v[i * m + j]);
            ModuleMap::new_unchecked(source.clone(), target.clone(), mat)
        })
        .collect();
    Ok(HomSpace {
        source: source.clone(),
        target: target.clone(),
        basis,
    })
}

pub fn hom_dim(source: &Module, target: &Module) -> Result<usize> {
    check_compatible(source, target)?;
    let (m, n) = (source.dim(), target.dim());
    if m == 0 || n == 0 {
        return Ok(0);
    }
    let sys = intertwiner_system(
        source.gen_matrices(),
        target.gen_matrices(),
        source.field(),
        m,
        n,
    );
    Ok(n * m - sys.rank())
}

/// The endomorphism algebra of a module, with structure constants.
pub struct EndAlgebra {
    pub module: Module,
    pub basis: Vec<ModuleMap>,
    /// `mult_table[i][j]` = coordinates of `basis[i] o basis[j]`.
    pub mult_table: Vec<Vec<Vector>>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn end_algebra(m: &Module) -> Result<EndAlgebra> {
    let hom = hom_basis(m, m)?;
    let field = m.field().clone();
    let d = hom.dim();
    let flat_len = m.dim() * m.dim();
    // columns are the flattened basis elements
    let basis_cols = Matrix::from_fn(&field, flat_len, d, |i, j| hom.basis[j].matrix.data()[i]);
    let solver = LinearSolver::new(&basis_cols);
    let mut table = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let prod = hom.basis[i].matrix.mul(&hom.basis[j].matrix);
            let coords = solver
                .solve(prod.data())
                .expect("endomorphism algebra closed under composition");
            row.push(coords);
        }
        table.push(row);
    }
    Ok(EndAlgebra {
        module: m.clone(),
        basis: hom.basis,
        mult_table: table,
    })
}

/// One-step free presentation 0 -> K -> F0 -> M -> 0 with
/// F0 = (kG)^(dim M), each free generator mapped to a basis vector.
pub struct FreePresentation {
    pub module: Module,
    pub free: Module,
    /// dim M x dim F0, the surjection.
    pub onto: Matrix,
    /// Kernel of `onto` as a module.
    pub kernel: Module,
    /// dim K x dim F0, rows are the kernel basis inside F0.
    pub kernel_rows: Matrix,
}

pub fn free_presentation(m: &Module) -> FreePresentation {
    let group = Arc::clone(m.group());
    let field = m.field().clone();
    let dim = m.dim();
    let order = group.order();
    let free = Module::free(&group, &field, dim);
    // onto: column (copy i, element g) maps to rho_M(g) e_i
    let mut onto = Matrix::zeros(&field, dim, dim * order);
    for i in 0..dim {
        for g in 0..order {
            let mg = m.elem_matrix(g);
            for r in 0..dim {
                let v = mg.get(r, i);
                if !v.is_zero() {
                    onto.set(r, i * order + g, v);
                }
            }
        }
    }
    let kernel_vecs = onto.kernel_basis();
    let kernel_rows = Matrix::from_rows(&field, kernel_vecs);
    // kernel as a module: solve coordinates of g . k_j against the kernel basis
    let incl_cols = kernel_rows.transpose();
    let solver = LinearSolver::new(&incl_cols);
    let kdim = kernel_rows.rows();
    let mut gen_mats = Vec::new();
    for g in free.gen_matrices() {
        let mut act = Matrix::zeros(&field, kdim, kdim);
        for j in 0..kdim {
            let image = g.apply(kernel_rows.row(j));
            let coords = solver.solve(&image).expect("kernel is a submodule");
            for (i, &c) in coords.iter().enumerate() {
                act.set(i, j, c);
            }
        }
        gen_mats.push(act);
    }
    let kernel = Module::new_unchecked(group, field, kdim, gen_mats);
    FreePresentation {
        module: m.clone(),
        free,
        onto,
        kernel,
        kernel_rows,
    }
}

/// Ext^1(M, N) together with representative cocycles K -> N.
pub struct Ext1 {
    pub source: Module,
    pub target: Module,
    pub presentation: FreePresentation,
    /// Cocycles K -> N (target.dim x dim K) whose classes form a basis.
    pub reps: Vec<Matrix>,
}

impl Ext1 {
    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Extension module for the class with the given coefficients, by
    /// pushout of the presentation along the combined cocycle. Returns
    /// (E, include N -> E, project E -> M); all-zero coefficients give the
    /// split extension.
    pub fn extension(&self, coeffs: &[FieldElem]) -> (Module, ModuleMap, ModuleMap) {
        let field = self.target.field().clone();
        let n = self.target.dim();
        let kdim = self.presentation.kernel.dim();
        let fdim = self.presentation.free.dim();
        let mut phi = Matrix::zeros(&field, n, kdim);
        for (c, rep) in coeffs.iter().zip(&self.reps) {
            if !c.is_zero() {
                phi = phi.add(&rep.scale(*c));
            }
        }
        // ambient W = N (+) F0
        let group = Arc::clone(self.source.group());
        let w = Module::direct_sum(
            &group,
            &field,
            &[self.target.clone(), self.presentation.free.clone()],
        )
        .expect("same group and field");
        // relation subspace D = { (phi(x), -x) : x in K }
        let mut relations: Vec<Vector> = Vec::with_capacity(kdim);
        for j in 0..kdim {
            let mut v = vec![FieldElem::ZERO; n + fdim];
            for i in 0..n {
                v[i] = phi.get(i, j);
            }
            for (c, &x) in self.presentation.kernel_rows.row(j).iter().enumerate() {
                v[n + c] = field.neg(x);
            }
            relations.push(v);
        }
        let (e, proj_w) = quotient(&w, &relations);
        // include N into E through W
        let mut n_into_w = Matrix::zeros(&field, n + fdim, n);
        for i in 0..n {
            n_into_w.set(i, i, FieldElem::ONE);
        }
        let incl =
            ModuleMap::new_unchecked(self.target.clone(), e.clone(), proj_w.matrix.mul(&n_into_w));
        // project E onto M: well-defined since D maps into ker(onto)
        // sigma . proj_w = [0 | onto], so solve on the quotient basis
        let w_to_m = {
            let mut m = Matrix::zeros(&field, self.source.dim(), n + fdim);
            for r in 0..self.source.dim() {
                for c in 0..fdim {
                    m.set(r, n + c, self.presentation.onto.get(r, c));
                }
            }
            m
        };
        // proj_w maps standard basis of W onto E; pick preimages: the
        // projection matrix has a right inverse on the chosen complement,
        // recover sigma column-by-column via solving proj_w^T.
        let solver = LinearSolver::new(&proj_w.matrix.transpose());
        let mut sigma = Matrix::zeros(&field, self.source.dim(), e.dim());
        for r in 0..self.source.dim() {
            // sigma row r satisfies row_r(sigma) * proj_w = row_r(w_to_m)
            let coords = solver
                .solve(w_to_m.row(r))
                .expect("map vanishes on relations, so it factors through the quotient");
            for (c, &v) in coords.iter().enumerate() {
                sigma.set(r, c, v);
            }
        }
        let proj = ModuleMap::new_unchecked(e.clone(), self.source.clone(), sigma);
        (e, incl, proj)
    }
}

pub fn ext1(m: &Module, n: &Module) -> Result<Ext1> {
    check_compatible(m, n)?;
    let pres = free_presentation(m);
    let field = m.field().clone();
    let kdim = pres.kernel.dim();
    let ndim = n.dim();
    if kdim == 0 || ndim == 0 {
        return Ok(Ext1 {
            source: m.clone(),
            target: n.clone(),
            presentation: pres,
            reps: vec![],
        });
    }
    let hom_kn = hom_basis(&pres.kernel, n)?;
    // restrictions of Hom(F0, N): for copy i and N-basis v, the map sends
    // e_{i,g} to rho_N(g) v; evaluate on the kernel rows.
    let order = m.group().order();
    let mut image = Echelon::new(&field, ndim * kdim);
    for i in 0..m.dim() {
        for v in 0..ndim {
            // restricted map as an ndim x kdim matrix, flattened row-major
            let mut flat = vec![FieldElem::ZERO; ndim * kdim];
            for j in 0..kdim {
                let row = pres.kernel_rows.row(j);
                // value = sum over (copy i', g) coords; only copy i contributes
                let mut val = vec![FieldElem::ZERO; ndim];
                for g in 0..order {
                    let c = row[i * order + g];
                    if c.is_zero() {
                        continue;
                    }
                    let ng = n.elem_matrix(g);
                    for r in 0..ndim {
                        let t = field.mul(c, ng.get(r, v));
                        val[r] = field.add(val[r], t);
                    }
                }
                for r in 0..ndim {
                    flat[r * kdim + j] = val[r];
                }
            }
            image.insert(&flat);
        }
    }
    let mut reps = Vec::new();
    for b in &hom_kn.basis {
        let flat: Vec<FieldElem> = b.matrix.data().to_vec();
        if image.insert(&flat) {
            reps.push(b.matrix.clone());
        }
    }
    Ok(Ext1 {
        source: m.clone(),
        target: n.clone(),
        presentation: pres,
        reps,
    })
}

pub fn ext1_dim(m: &Module, n: &Module) -> Result<usize> {
    Ok(ext1(m, n)?.dim())
}

/// Isomorphism test. Exhausts all coefficient combinations of the Hom basis
/// when `q^dim Hom` fits under the enumeration cap, otherwise tries seeded
/// random combinations up to the iteration cap and reports `Indeterminate`
/// rather than guessing.
pub fn is_isomorphic(m: &Module, n: &Module, cfg: &Config) -> Result<Option<ModuleMap>> {
    check_compatible(m, n)?;
    if m.dim() != n.dim() {
        return Ok(None);
    }
    if m.dim() == 0 {
        return Ok(Some(ModuleMap::new_unchecked(
            m.clone(),
            n.clone(),
            Matrix::zeros(m.field(), 0, 0),
        )));
    }
    if m.same_matrices(n) {
        return Ok(Some(ModuleMap::new_unchecked(
            m.clone(),
            n.clone(),
            Matrix::identity(m.field(), m.dim()),
        )));
    }
    let hom = hom_basis(m, n)?;
    if hom.dim() == 0 {
        return Ok(None);
    }
    // an isomorphism induces bijections on both Hom spaces and both
    // endomorphism algebras
    if hom_dim(n, m)? != hom.dim() || hom_dim(m, m)? != hom_dim(n, n)? {
        return Ok(None);
    }
    // single basis elements first
    for b in &hom.basis {
        if b.matrix.is_invertible() {
            return Ok(Some(b.clone()));
        }
    }
    let field = m.field().clone();
    let q = field.order() as u64;
    let d = hom.dim();
    if let Some(total) = cfg.within_enum_cap(q, d) {
        for code in 1..total {
            let coeffs = decode_coeffs(&field, code, d);
            let cand = hom.combine(&coeffs);
            if cand.matrix.is_invertible() {
                return Ok(Some(cand));
            }
        }
        return Ok(None);
    }
    // brief random pass: finds an isomorphism quickly when one exists
    let content = m.content_hash() ^ n.content_hash().rotate_left(1);
    let mut rng = crate::config::rng_for(cfg, "is_isomorphic", content);
    for _ in 0..cfg.iteration_cap.min(256) {
        let coeffs: Vec<FieldElem> = (0..d)
            .map(|_| FieldElem(rng.gen_range(0..field.order()) as u16))
            .collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let cand = hom.combine(&coeffs);
        if cand.matrix.is_invertible() {
            return Ok(Some(cand));
        }
    }
    // structural route: match indecomposable pieces class by class, which
    // is certifiable because the pieces have small endomorphism algebras
    match piecewise_isomorphism(m, n, cfg) {
        Ok(r) => return Ok(r),
        Err(e) if e.is_indeterminate() => {}
        Err(e) => return Err(e),
    }
    for _ in 0..cfg.iteration_cap {
        let coeffs: Vec<FieldElem> = (0..d)
            .map(|_| FieldElem(rng.gen_range(0..field.order()) as u16))
            .collect();
        if coeffs.iter().all(|c| c.is_zero()) {
            continue;
        }
        let cand = hom.combine(&coeffs);
        if cand.matrix.is_invertible() {
            return Ok(Some(cand));
        }
    }
    Err(Error::Indeterminate(format!(
        "no invertible intertwiner found among {} random combinations of a {}-dimensional Hom space",
        cfg.iteration_cap, d
    )))
}

/// Compare Krull-Schmidt decompositions piece by piece and assemble an
/// explicit isomorphism from piece isomorphisms when the class multisets
/// agree. Fails only when a required sub-answer is itself indeterminate.
fn piecewise_isomorphism(m: &Module, n: &Module, cfg: &Config) -> Result<Option<ModuleMap>> {
    let dm = crate::decomp::decompose(m, cfg)?;
    let dn = crate::decomp::decompose(n, cfg)?;
    if dm.summands.len() == 1 && dm.summands[0].1 == 1 && dn.summands.len() == 1 {
        // both indecomposable: nothing gained over the direct search
        return Err(Error::Indeterminate(
            "both modules are indecomposable".into(),
        ));
    }
    if dm.summands.len() != dn.summands.len() {
        return Ok(None);
    }
    // match each class of m to a class of n
    let mut used = vec![false; dn.summands.len()];
    let mut piece_iso: Vec<Option<ModuleMap>> = vec![None; dn.summands.len()];
    for (rep_m, mult_m) in &dm.summands {
        let mut matched = false;
        for (j, (rep_n, mult_n)) in dn.summands.iter().enumerate() {
            if used[j] || mult_m != mult_n || rep_m.dim() != rep_n.dim() {
                continue;
            }
            if let Some(iso) = is_isomorphic(rep_m, rep_n, cfg)? {
                used[j] = true;
                piece_iso[j] = Some(iso);
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    // assemble: m <- sum_m, permute/iso blocks to sum_n, -> n. The two
    // direct sums list classes in their own orders; build the block map
    // from the m-order to the n-order.
    let field = m.field().clone();
    let mut block = Matrix::zeros(&field, n.dim(), m.dim());
    // column offsets of sum_m blocks in m order, row offsets of sum_n in n order
    let mut col = 0usize;
    let mut n_offsets = Vec::new();
    {
        let mut r = 0usize;
        for (rep_n, mult_n) in &dn.summands {
            n_offsets.push(r);
            r += rep_n.dim() * mult_n;
        }
    }
    for (rep_m, mult_m) in &dm.summands {
        // find the matched n class again
        let mut target = None;
        for (j, (rep_n, _)) in dn.summands.iter().enumerate() {
            if let Some(iso) = &piece_iso[j] {
                if iso.source.same_matrices(rep_m) && rep_n.dim() == rep_m.dim() {
                    target = Some(j);
                    break;
                }
            }
        }
        let j = target.expect("every class was matched");
        let iso = piece_iso[j].take().expect("unconsumed match");
        let mut row = n_offsets[j];
        for _ in 0..*mult_m {
            for r in 0..iso.matrix.rows() {
                for c in 0..iso.matrix.cols() {
                    let v = iso.matrix.get(r, c);
                    if !v.is_zero() {
                        block.set(row + r, col + c, v);
                    }
                }
            }
            row += rep_m.dim();
            col += rep_m.dim();
        }
    }
    let sum_to_sum = block;
    let witness_m_inv = dm
        .witness
        .matrix
        .inverse()
        .expect("decomposition witness is invertible");
    let total = dn.witness.matrix.mul(&sum_to_sum).mul(&witness_m_inv);
    let map = ModuleMap::new_unchecked(m.clone(), n.clone(), total);
    debug_assert!(map.is_intertwiner());
    debug_assert!(map.matrix.is_invertible());
    Ok(Some(map))
}

/// Base-q digits of `code` as field elements, least significant first.
pub(crate) fn decode_coeffs(field: &Field, mut code: u64, len: usize) -> Vec<FieldElem> {
    let q = field.order() as u64;
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(FieldElem((code % q) as u16));
        code /= q;
    }
    v
}
