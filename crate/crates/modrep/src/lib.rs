//! Exact computation with finite-dimensional modules over modular group
//! algebras kG, for k = GF(p^n) with p dividing |G|.
//!
//! The crate provides dense linear algebra over small finite fields,
//! permutation groups with full element enumeration, kG-modules and the
//! functors between them (restriction, induction, tensor with diagonal
//! action, conjugation), Hom/End/Ext^1 computations, Krull-Schmidt
//! decomposition, brick and semibrick certification, a decidable calculus
//! of finitely generated subcategory predicates, two-term simple-minded
//! collections, and suite runners that verify restriction theorems for
//! bricks along normal subgroups of p-power index on built-in data.
//!
//! ```
//! use modrep::{groups, Config, Field, Module};
//! use modrep::clifford::clifford_decompose;
//!
//! let cfg = Config::default();
//! let field = Field::new(2, 2, None)?; // GF(4)
//! let g = groups::s4();
//! let n = groups::a4();
//! // the two-dimensional simple module restricts to a semibrick of two
//! // conjugate characters
//! let s2 = groups::s4_natural2(&field);
//! let report = clifford_decompose(&s2, &g, &n, None, &cfg)?;
//! assert!(report.all_certified());
//! assert_eq!(report.summands.len(), 2);
//! assert!(report.summands.iter().all(|s| s.dim == 1));
//! # Ok::<(), modrep::Error>(())
//! ```

pub mod clifford;
pub mod config;
pub mod corpus;
pub mod decomp;
pub mod error;
pub mod field;
pub mod groups;
pub mod hom;
pub mod jsonio;
pub mod matrix;
pub mod module;
pub mod par;
pub mod perm;
pub mod smc;
pub mod subcat;
pub mod suite;

pub use config::Config;
pub use error::{Error, Result};
pub use field::{Field, FieldElem, FieldSpec};
pub use matrix::Matrix;
pub use module::{Module, ModuleMap};
pub use perm::{Group, Perm};
