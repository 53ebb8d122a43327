//! Property tests: algebraic invariants on randomized inputs, plus the
//! structural facts about semibricks that the library machinery leans on.

use modrep::config::Config;
use modrep::corpus::s4a4_data;
use modrep::decomp::{composition_factors, decompose};
use modrep::field::{Field, FieldElem};
use modrep::hom::{ext1, ext1_dim, hom_basis, hom_dim, is_isomorphic};
use modrep::matrix::Matrix;
use modrep::module::{Module, ModuleMap};
use proptest::prelude::*;

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::new(2, 1, None).unwrap()),
        Just(Field::new(2, 2, None).unwrap()),
        Just(Field::new(3, 1, None).unwrap()),
        Just(Field::new(5, 1, None).unwrap()),
        Just(Field::new(3, 2, None).unwrap()),
    ]
}

fn matrix_in(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    let q = field.order();
    proptest::collection::vec(0..q, rows * cols).prop_map(move |codes| {
        Matrix::from_fn(&field, rows, cols, |i, j| {
            FieldElem(codes[i * cols + j] as u16)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_equals_transpose_rank(
        (field, rows, cols) in small_field().prop_flat_map(|f| (Just(f), 1usize..6, 1usize..6)),
    ) {
        let strategy = matrix_in(field, rows, cols);
        proptest!(|(a in strategy)| {
            prop_assert_eq!(a.rank(), a.transpose().rank());
        });
    }

    #[test]
    fn rref_idempotent_and_kernel_exact(
        (field, rows, cols) in small_field().prop_flat_map(|f| (Just(f), 1usize..6, 1usize..6)),
    ) {
        let strategy = matrix_in(field, rows, cols);
        proptest!(|(a in strategy)| {
            let (r, pivots) = a.rref();
            let (rr, pivots2) = r.rref();
            prop_assert_eq!(&r, &rr);
            prop_assert_eq!(pivots, pivots2);
            for v in a.kernel_basis() {
                prop_assert!(a.apply(&v).iter().all(|e| e.is_zero()));
            }
            prop_assert_eq!(a.rank() + a.kernel_basis().len(), a.cols());
        });
    }

    #[test]
    fn solve_solutions_are_solutions(
        field in small_field(),
    ) {
        let f2 = field.clone();
        let strategy = (matrix_in(field, 4, 3), proptest::collection::vec(0..f2.order(), 4));
        proptest!(|((a, bv) in strategy)| {
            let b: Vec<FieldElem> = bv.iter().map(|&c| FieldElem(c as u16)).collect();
            if let Some(x) = a.solve(&b).unwrap() {
                prop_assert_eq!(a.apply(&x), b);
            }
        });
    }
}

#[test]
fn hom_dimension_is_biadditive() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let n = &data.n;
    let f = &data.field;
    let mods = [
        data.kn.clone(),
        data.t1.clone(),
        data.n_module("t1|k").clone(),
        data.n_module("k|t1+t2").clone(),
    ];
    for a in &mods {
        for b in &mods {
            for c in &mods {
                let ab = Module::direct_sum(n, f, &[a.clone(), b.clone()]).unwrap();
                assert_eq!(
                    hom_dim(&ab, c).unwrap(),
                    hom_dim(a, c).unwrap() + hom_dim(b, c).unwrap()
                );
                assert_eq!(
                    hom_dim(c, &ab).unwrap(),
                    hom_dim(c, a).unwrap() + hom_dim(c, b).unwrap()
                );
            }
        }
    }
}

#[test]
fn euler_counts_match_dimensions() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    for (_, m) in data.bricks.iter().chain(data.n_modules.iter()) {
        let factors = composition_factors(m, &cfg).unwrap();
        let total: usize = factors.iter().map(|(s, a)| s.dim() * a).sum();
        assert_eq!(total, m.dim());
    }
}

/// Every epimorphism out of a finite direct sum of pairwise orthogonal
/// bricks splits; the right inverse is found by exact linear solving.
#[test]
fn epimorphisms_from_semisimple_objects_split() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let n = &data.n;
    let f = &data.field;
    let x = Module::direct_sum(
        n,
        f,
        &[
            data.t1.clone(),
            data.t1.clone(),
            data.t2.clone(),
            data.kn.clone(),
        ],
    )
    .unwrap();
    for target in [&data.t1, &data.t2, &data.kn] {
        let hom = hom_basis(&x, target).unwrap();
        let q = f.order() as u64;
        let mut tested = 0;
        for code in 1..q.pow(hom.dim() as u32).min(2000) {
            let coeffs: Vec<FieldElem> = {
                let mut c = code;
                (0..hom.dim())
                    .map(|_| {
                        let e = FieldElem((c % q) as u16);
                        c /= q;
                        e
                    })
                    .collect()
            };
            let phi = hom.combine(&coeffs);
            if phi.matrix.rank() != target.dim() {
                continue;
            }
            // solve phi . sigma = id inside Hom(target, x)
            let back = hom_basis(target, &x).unwrap();
            let rows = target.dim() * target.dim();
            let mut sys = Matrix::zeros(f, rows, back.dim());
            for (j, b) in back.basis.iter().enumerate() {
                let prod = phi.matrix.mul(&b.matrix);
                for (r, &e) in prod.data().iter().enumerate() {
                    sys.set(r, j, e);
                }
            }
            let id: Vec<FieldElem> = Matrix::identity(f, target.dim()).data().to_vec();
            let sol = sys.solve(&id).unwrap();
            assert!(
                sol.is_some(),
                "a surjection onto a summand class must split"
            );
            let sigma = back.combine(&sol.unwrap());
            assert_eq!(
                phi.matrix.mul(&sigma.matrix),
                Matrix::identity(f, target.dim())
            );
            tested += 1;
        }
        assert!(tested > 0);
    }
}

/// Hom(X, Y) = 0 propagates through iterated self-extensions of Y, and the
/// same for Ext^1.
#[test]
fn vanishing_propagates_through_extension_closures() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    // Hom(S2, k) = 0 and M = the nonsplit self-extension of k
    assert_eq!(hom_dim(&data.s2, &data.kg).unwrap(), 0);
    assert_eq!(hom_dim(&data.s2, &data.kk).unwrap(), 0);
    // find a pair with vanishing Ext^1 among the built-in bricks, then
    // check vanishing against a self-extension of the target
    let x = data.brick("s2|k|k");
    let y = &data.kg;
    assert_eq!(ext1_dim(x, y).unwrap(), 0);
    assert_eq!(ext1_dim(x, &data.kk).unwrap(), 0);
    // and a doubled extension: [k;k] extended by k again
    let e = ext1(&data.kg, &data.kk).unwrap();
    if e.dim() > 0 {
        let ones = vec![FieldElem::ONE; e.dim()];
        let (m3, _, _) = e.extension(&ones);
        assert_eq!(ext1_dim(x, &m3).unwrap(), 0);
        assert_eq!(hom_dim(&data.s2, &m3).unwrap(), 0);
    }
}

/// The restriction of a brick is a direct summand of the sum of the
/// conjugates of any one of its indecomposable summands.
#[test]
fn restriction_embeds_in_conjugate_orbit_sum() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let g = &data.g;
    let n = &data.n;
    let cosets = modrep::perm::coset_reps(g, n).unwrap();
    for (_, brick) in &data.bricks {
        let res = brick.restrict(n).unwrap();
        let dec = decompose(&res, &cfg).unwrap();
        let t = &dec.summands[0].0;
        let mut orbit = Vec::new();
        for &r in &cosets.reps {
            orbit.push(t.conjugate(g.element(r), g).unwrap());
        }
        let orbit_sum = Module::direct_sum(n, &data.field, &orbit).unwrap();
        let big = decompose(&orbit_sum, &cfg).unwrap();
        // every class of Res S appears in the orbit sum with at least the
        // same multiplicity
        for (cls, mult) in &dec.summands {
            let mut found = false;
            for (ocls, omult) in &big.summands {
                if ocls.dim() == cls.dim() && is_isomorphic(ocls, cls, &cfg).unwrap().is_some() {
                    assert!(omult >= mult);
                    found = true;
                    break;
                }
            }
            assert!(
                found,
                "restriction summand missing from the conjugate orbit sum"
            );
        }
    }
}

/// The built-in data is not tied to GF(4): over GF(16) the same six bricks
/// exist, certify, and the golden suite passes end to end.
#[test]
fn golden_suite_over_gf16() {
    let mut cfg = Config::default();
    cfg.field = Some(Field::new(2, 4, None).unwrap().spec());
    let report = modrep::suite::run_suite("s4a4", &cfg).unwrap();
    assert_eq!(report.failed(), 0, "{}", report.to_text());
    assert_eq!(report.indeterminate(), 0);
}

/// Composition factors of the regular modules match the classical Cartan
/// counts: over the alternating-group algebra in characteristic 2 each of
/// the three characters occurs four times (each projective cover has four
/// factors), and over the symmetric-group algebra both simples occur eight
/// times (8*1 + 8*2 = 24).
#[test]
fn regular_module_factor_counts() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let regular_n = Module::free(&data.n, &data.field, 1);
    let factors = composition_factors(&regular_n, &cfg).unwrap();
    assert_eq!(factors.len(), 3);
    for (s, mult) in &factors {
        assert_eq!(s.dim(), 1);
        assert_eq!(*mult, 4);
    }
    let regular_g = Module::free(&data.g, &data.field, 1);
    let factors = composition_factors(&regular_g, &cfg).unwrap();
    let mut counts: Vec<(usize, usize)> = factors.iter().map(|(s, a)| (s.dim(), *a)).collect();
    counts.sort();
    assert_eq!(counts, vec![(1, 8), (2, 8)]);
}

/// Self-extensions of the trivial module match the independent oracle:
/// Ext^1(k, k) is the space of group homomorphisms from the abelianization
/// into the additive group of k. For the symmetric group the
/// abelianization has order 2, giving one dimension in characteristic 2;
/// for the alternating group it has order 3, giving zero.
#[test]
fn trivial_self_extensions_match_abelianization() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    assert_eq!(ext1_dim(&data.kg, &data.kg).unwrap(), 1);
    assert_eq!(ext1_dim(&data.kn, &data.kn).unwrap(), 0);
}

/// Frozen adjunction instance: the extension groups across the adjunction
/// agree, with common dimension 1 (verified independently by the extension
/// classification of the built-in data).
#[test]
fn ext_adjunction_frozen_value() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let res_kg = data.kg.restrict(&data.n).unwrap();
    let lhs = ext1_dim(&data.t1, &res_kg).unwrap();
    let ind_t1 = data.t1.induce(&data.g).unwrap();
    let rhs = ext1_dim(&ind_t1, &data.kg).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(lhs, 1);
}

/// The coset permutation module restricts to a sum of trivial modules, one
/// per coset.
#[test]
fn perm_module_restricts_to_trivials() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let pm = Module::perm_module(&data.g, &data.n, &data.field).unwrap();
    let res = pm.restrict(&data.n).unwrap();
    let two_trivials =
        Module::direct_sum(&data.n, &data.field, &[data.kn.clone(), data.kn.clone()]).unwrap();
    assert!(is_isomorphic(&res, &two_trivials, &cfg).unwrap().is_some());
}

/// Restriction and conjugation preserve dimension; induction multiplies it
/// by the index.
#[test]
fn functors_scale_dimensions() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let odd = modrep::groups::odd_transposition();
    for (_, m) in &data.bricks {
        assert_eq!(m.restrict(&data.n).unwrap().dim(), m.dim());
    }
    for (_, m) in &data.n_modules {
        assert_eq!(m.conjugate(&odd, &data.g).unwrap().dim(), m.dim());
        assert_eq!(m.induce(&data.g).unwrap().dim(), 2 * m.dim());
    }
    let _ = cfg;
}

/// Intertwiner validation rejects matrices that do not commute with the
/// action.
#[test]
fn module_map_validation() {
    let cfg = Config::default();
    let data = s4a4_data(&cfg).unwrap();
    let bad = Matrix::from_fn(&data.field, 2, 1, |i, _| {
        if i == 0 {
            FieldElem::ONE
        } else {
            FieldElem::ZERO
        }
    });
    assert!(ModuleMap::new(data.kg.clone(), data.s2.clone(), bad).is_err());
}
