//! Named constructions of the small groups and modules used by the built-in
//! suites and corpora.

use crate::field::{Field, FieldElem};
use crate::matrix::Matrix;
use crate::module::Module;
use crate::perm::{Group, Perm};
use std::sync::Arc;

/// Symmetric group on 4 points, generators r = (0 1 2 3), s = (0 1).
pub fn s4() -> Arc<Group> {
    Group::new(
        4,
        &[
            ("r".into(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()),
            ("s".into(), Perm::from_cycles(4, &[&[0, 1]]).unwrap()),
        ],
    )
    .unwrap()
}

/// Alternating group inside `s4`, generators t = (0 1 2), x = (0 1)(2 3).
pub fn a4() -> Arc<Group> {
    Group::new(
        4,
        &[
            ("t".into(), Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap()),
            (
                "x".into(),
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            ),
        ],
    )
    .unwrap()
}

/// The Klein four subgroup {e, (01)(23), (02)(13), (03)(12)}.
pub fn klein4() -> Arc<Group> {
    Group::new(
        4,
        &[
            (
                "x".into(),
                Perm::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap(),
            ),
            (
                "y".into(),
                Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
            ),
        ],
    )
    .unwrap()
}

/// Cyclic group of order 4 on 4 points.
pub fn c4() -> Arc<Group> {
    Group::new(
        4,
        &[("r".into(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap())],
    )
    .unwrap()
}

/// The order-2 subgroup of `c4`.
pub fn c2_in_c4() -> Arc<Group> {
    Group::new(
        4,
        &[(
            "r2".into(),
            Perm::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap(),
        )],
    )
    .unwrap()
}

/// Dihedral group of order 8 on 4 points.
pub fn d4() -> Arc<Group> {
    Group::new(
        4,
        &[
            ("r".into(), Perm::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap()),
            ("f".into(), Perm::from_cycles(4, &[&[0, 2]]).unwrap()),
        ],
    )
    .unwrap()
}

/// Cyclic group of order 2 on 2 points.
pub fn c2() -> Arc<Group> {
    Group::new(
        2,
        &[("s".into(), Perm::from_cycles(2, &[&[0, 1]]).unwrap())],
    )
    .unwrap()
}

/// An odd permutation of S4, fixed as the non-identity coset witness.
pub fn odd_transposition() -> Perm {
    Perm::from_cycles(4, &[&[0, 1]]).unwrap()
}

/// The two-dimensional simple kS4-module in characteristic 2: the Klein
/// subgroup acts trivially and the quotient S3 acts by its natural
/// representation on the sum-zero plane. Entries lie in the prime field.
pub fn s4_natural2(field: &Field) -> Module {
    assert_eq!(field.characteristic(), 2, "defined in characteristic 2");
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    let r = Matrix::from_rows(field, vec![vec![one, zero], vec![one, one]]);
    let s = Matrix::from_rows(field, vec![vec![one, one], vec![zero, one]]);
    Module::new(s4(), field.clone(), vec![r, s]).expect("valid representation")
}

/// One-dimensional kA4-module on which the 3-cycle acts by the k-th power of
/// a fixed primitive cube root of unity (k = 0, 1, 2). Requires a field
/// containing cube roots of unity, e.g. GF(4).
pub fn a4_character(field: &Field, k: u32) -> Module {
    let omega = cube_root_of_unity(field);
    let val = match k % 3 {
        0 => FieldElem::ONE,
        1 => omega,
        _ => field.mul(omega, omega),
    };
    let t = Matrix::from_rows(field, vec![vec![val]]);
    let x = Matrix::identity(field, 1);
    Module::new(a4(), field.clone(), vec![t, x]).expect("valid character")
}

/// Least element of multiplicative order 3, in code order.
pub fn cube_root_of_unity(field: &Field) -> FieldElem {
    for e in field.elements().skip(1) {
        let e3 = field.mul(field.mul(e, e), e);
        if e3 == FieldElem::ONE && e != FieldElem::ONE {
            return e;
        }
    }
    panic!("field {:?} has no primitive cube root of unity", field);
}
