//! A decidable calculus of finitely generated subcategory predicates.
//!
//! Subcategories are represented by combinator trees whose leaves carry
//! finite generator lists: extension closures of semibricks, quotient
//! closures, perpendicular classes against generators, torsion closures,
//! the star product, intersections, and preimages under restriction and
//! induction. Membership of any module is decided by exact linear algebra.

use crate::config::Config;
use crate::decomp::{filt_member, submodules};
use crate::error::{Error, Result};
use crate::hom::{hom_basis, hom_dim};
use crate::matrix::Echelon;
use crate::module::{quotient, submodule, Module};
use crate::perm::Group;
use std::sync::Arc;

#[derive(Clone)]
pub enum Pred {
    /// Extension closure of the listed modules (members of a semibrick).
    Filt(Vec<Module>),
    /// Quotients of finite direct sums of the listed modules.
    Fac(Vec<Module>),
    /// Modules X with Hom(X, C) = 0 for every listed C.
    PerpL(Vec<Module>),
    /// Modules X with Hom(C, X) = 0 for every listed C.
    PerpR(Vec<Module>),
    /// The smallest torsion class containing the listed modules, evaluated
    /// as the extension closure of their quotient closure.
    TClose(Vec<Module>),
    /// Modules with a submodule in the first class whose quotient lies in
    /// the second.
    Star(Box<Pred>, Box<Pred>),
    Intersect(Box<Pred>, Box<Pred>),
    /// Preimage under restriction to `sub`: evaluated on modules over any
    /// group containing `sub`, with the inner predicate over `sub`.
    ResInv {
        sub: Arc<Group>,
        inner: Box<Pred>,
    },
    /// Preimage under induction to `ambient`: evaluated on modules over a
    /// normal subgroup of `ambient`, with the inner predicate over `ambient`.
    IndInv {
        ambient: Arc<Group>,
        inner: Box<Pred>,
    },
}

impl Pred {
    pub fn member(&self, x: &Module, cfg: &Config) -> Result<bool> {
        match self {
            Pred::Filt(gens) => {
                if gens.is_empty() {
                    return Ok(x.dim() == 0);
                }
                Ok(filt_member(x, gens, cfg)?.is_some())
            }
            Pred::Fac(gens) => in_fac(gens, x),
            Pred::PerpL(gens) => {
                for c in gens {
                    if hom_dim(x, c)? != 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Pred::PerpR(gens) => {
                for c in gens {
                    if hom_dim(c, x)? != 0 {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            Pred::TClose(gens) => in_torsion_closure(gens, x),
            Pred::Star(c, d) => {
                for basis in submodules(x, cfg)? {
                    let rows: Vec<_> = (0..basis.rows()).map(|i| basis.row(i).to_vec()).collect();
                    let (sub, _) = submodule(x, &rows);
                    let (quot, _) = quotient(x, &rows);
                    if c.member(&sub, cfg)? && d.member(&quot, cfg)? {
                        return Ok(true);
                    }
                }
                Ok(false)
            }
            Pred::Intersect(a, b) => Ok(a.member(x, cfg)? && b.member(x, cfg)?),
            Pred::ResInv { sub, inner } => inner.member(&x.restrict(sub)?, cfg),
            Pred::IndInv { ambient, inner } => inner.member(&x.induce(ambient)?, cfg),
        }
    }
}

/// Trace criterion: X is a quotient of a finite sum of generators iff the
/// images of all maps from the generators already fill X.
fn in_fac(gens: &[Module], x: &Module) -> Result<bool> {
    if x.dim() == 0 {
        return Ok(true);
    }
    if gens.is_empty() {
        return Ok(false);
    }
    let field = x.field().clone();
    let mut span = Echelon::new(&field, x.dim());
    for m in gens {
        let hom = hom_basis(m, x)?;
        for b in &hom.basis {
            for col in 0..b.matrix.cols() {
                let v: Vec<_> = (0..b.matrix.rows()).map(|r| b.matrix.get(r, col)).collect();
                span.insert(&v);
                if span.dim() == x.dim() {
                    return Ok(true);
                }
            }
        }
    }
    Ok(span.dim() == x.dim())
}

/// Iterated trace chain: X lies in the smallest torsion class containing
/// the generators iff repeatedly quotienting by the trace submodule
/// exhausts X.
fn in_torsion_closure(gens: &[Module], x: &Module) -> Result<bool> {
    let mut current = x.clone();
    loop {
        if current.dim() == 0 {
            return Ok(true);
        }
        let field = current.field().clone();
        let mut span = Echelon::new(&field, current.dim());
        for m in gens {
            let hom = hom_basis(m, &current)?;
            for b in &hom.basis {
                for col in 0..b.matrix.cols() {
                    let v: Vec<_> = (0..b.matrix.rows()).map(|r| b.matrix.get(r, col)).collect();
                    span.insert(&v);
                }
            }
        }
        if span.dim() == 0 {
            return Ok(false);
        }
        if span.dim() == current.dim() {
            return Ok(true);
        }
        let rows: Vec<_> = span.basis().to_vec();
        let (quot, _) = quotient(&current, &rows);
        current = quot;
    }
}

/// Outcome of a corpus identity check: per-module membership values on both
/// sides, with the list of modules where they differ.
#[derive(Debug)]
pub struct IdentityReport {
    pub total: usize,
    pub discrepancies: Vec<usize>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

fn compare_memberships(lhs: &[bool], rhs: &[bool]) -> IdentityReport {
    let discrepancies = lhs
        .iter()
        .zip(rhs)
        .enumerate()
        .filter_map(|(i, (a, b))| (a != b).then_some(i))
        .collect();
    IdentityReport {
        total: lhs.len(),
        discrepancies,
    }
}

/// Both round trips: for a conjugation-invariant predicate C over kN,
/// membership in C must agree with membership in Ind^{-1}(Res^{-1}(C)) on
/// the kN corpus; for a tensor-stable predicate D over kG, membership in D
/// must agree with Res^{-1}(Ind^{-1}(D)) on the kG corpus.
pub struct RoundtripReport {
    pub sub_side: IdentityReport,
    pub amb_side: IdentityReport,
}

pub fn check_roundtrips(
    c_over_n: &Pred,
    d_over_g: &Pred,
    g: &Arc<Group>,
    n: &Arc<Group>,
    corpus_n: &[Module],
    corpus_g: &[Module],
    cfg: &Config,
) -> Result<RoundtripReport> {
    let c_trip = Pred::IndInv {
        ambient: Arc::clone(g),
        inner: Box::new(Pred::ResInv {
            sub: Arc::clone(n),
            inner: Box::new(c_over_n.clone()),
        }),
    };
    let lhs_n = membership_table(c_over_n, corpus_n, cfg)?;
    let rhs_n = membership_table(&c_trip, corpus_n, cfg)?;
    let d_trip = Pred::ResInv {
        sub: Arc::clone(n),
        inner: Box::new(Pred::IndInv {
            ambient: Arc::clone(g),
            inner: Box::new(d_over_g.clone()),
        }),
    };
    let lhs_g = membership_table(d_over_g, corpus_g, cfg)?;
    let rhs_g = membership_table(&d_trip, corpus_g, cfg)?;
    Ok(RoundtripReport {
        sub_side: compare_memberships(&lhs_n, &rhs_n),
        amb_side: compare_memberships(&lhs_g, &rhs_g),
    })
}

pub fn membership_table(pred: &Pred, corpus: &[Module], cfg: &Config) -> Result<Vec<bool>> {
    let results = crate::par::map(corpus, |m| pred.member(m, cfg));
    results.into_iter().collect()
}

/// Perpendicular of a predicate relative to a quantification corpus:
/// Hom(Y, X) = 0 for every corpus member Y satisfying the predicate.
/// Exact for generator-based predicates once the corpus is witness-rich
/// (it must contain induced images of the generators).
fn perp_of_pred_on_corpus(pred_members: &[bool], corpus: &[Module], x: &Module) -> Result<bool> {
    for (y, &is_in) in corpus.iter().zip(pred_members) {
        if is_in && hom_dim(y, x)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Transport of torsion-pair hearts and of perpendicular classes through
/// the restriction preimage, verified membership-by-membership.
pub struct HeartTransportReport {
    pub heart: IdentityReport,
    pub perp: IdentityReport,
}

pub fn check_heart_transport(
    u_gens: &[Module],
    t_gens: &[Module],
    n: &Arc<Group>,
    corpus_g: &[Module],
    cfg: &Config,
) -> Result<HeartTransportReport> {
    let t_pred = Pred::TClose(t_gens.to_vec());
    let u_perp = Pred::PerpR(u_gens.to_vec());
    let t_perp = Pred::PerpR(t_gens.to_vec());
    let res_u = Pred::ResInv {
        sub: Arc::clone(n),
        inner: Box::new(Pred::TClose(u_gens.to_vec())),
    };
    let res_t = Pred::ResInv {
        sub: Arc::clone(n),
        inner: Box::new(t_pred.clone()),
    };
    let res_u_members = membership_table(&res_u, corpus_g, cfg)?;
    let res_t_members = membership_table(&res_t, corpus_g, cfg)?;
    let mut heart_lhs = Vec::new();
    let mut heart_rhs = Vec::new();
    let mut perp_lhs = Vec::new();
    let mut perp_rhs = Vec::new();
    for (i, x) in corpus_g.iter().enumerate() {
        let res_x = x.restrict(n)?;
        // heart over kN, pulled back
        let lhs = t_pred.member(&res_x, cfg)? && u_perp.member(&res_x, cfg)?;
        // heart of the pulled-back interval over kG
        let rhs = res_t_members[i] && perp_of_pred_on_corpus(&res_u_members, corpus_g, x)?;
        heart_lhs.push(lhs);
        heart_rhs.push(rhs);
        // the perpendicular identity for the larger torsion class
        let plhs = t_perp.member(&res_x, cfg)?;
        let prhs = {
            let mut ok = true;
            for (y, &is_in) in corpus_g.iter().zip(&res_t_members) {
                if is_in && hom_dim(y, x)? != 0 {
                    ok = false;
                    break;
                }
            }
            ok
        };
        perp_lhs.push(plhs);
        perp_rhs.push(prhs);
    }
    Ok(HeartTransportReport {
        heart: compare_memberships(&heart_lhs, &heart_rhs),
        perp: compare_memberships(&perp_lhs, &perp_rhs),
    })
}

/// Fac(Ind X) = Res^{-1}(Fac X) on a kG corpus, for X with conjugation-
/// invariant additive closure.
pub fn check_fac_ind(
    x: &Module,
    g: &Arc<Group>,
    n: &Arc<Group>,
    corpus_g: &[Module],
    cfg: &Config,
) -> Result<IdentityReport> {
    if !crate::clifford::is_add_g_invariant(x, g, n, cfg)? {
        return Err(Error::NotGInvariantModule(
            "a conjugate of an indecomposable summand is not a summand".into(),
        ));
    }
    let ind = x.induce(g)?;
    let lhs_pred = Pred::Fac(vec![ind]);
    let x_gens = [x.clone()];
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for y in corpus_g {
        lhs.push(lhs_pred.member(y, cfg)?);
        rhs.push(in_fac(&x_gens, &y.restrict(n)?)?);
    }
    Ok(compare_memberships(&lhs, &rhs))
}

/// Conjugation invariance of the closure operations applied to
/// conjugation-invariant generator lists: intersection, quotient closure,
/// star product, extension closure, both perpendiculars and the torsion
/// closure.
pub fn check_ginv_closures(
    c_gens: &[Module],
    d_gens: &[Module],
    g: &Arc<Group>,
    n: &Arc<Group>,
    corpus_n: &[Module],
    cfg: &Config,
) -> Result<Vec<(String, IdentityReport)>> {
    let preds: Vec<(String, Pred)> = vec![
        (
            "intersection".into(),
            Pred::Intersect(
                Box::new(Pred::Filt(c_gens.to_vec())),
                Box::new(Pred::Filt(d_gens.to_vec())),
            ),
        ),
        ("quotient-closure".into(), Pred::Fac(c_gens.to_vec())),
        (
            "star-product".into(),
            Pred::Star(
                Box::new(Pred::Filt(c_gens.to_vec())),
                Box::new(Pred::Filt(d_gens.to_vec())),
            ),
        ),
        ("extension-closure".into(), Pred::Filt(c_gens.to_vec())),
        ("left-perpendicular".into(), Pred::PerpL(c_gens.to_vec())),
        ("right-perpendicular".into(), Pred::PerpR(c_gens.to_vec())),
        ("torsion-closure".into(), Pred::TClose(c_gens.to_vec())),
    ];
    let cosets = crate::perm::coset_reps(g, n)?;
    let mut out = Vec::new();
    for (name, pred) in preds {
        let base = membership_table(&pred, corpus_n, cfg)?;
        let mut worst = IdentityReport {
            total: corpus_n.len(),
            discrepancies: vec![],
        };
        for &r in &cosets.reps {
            let rep = g.element(r);
            let conjugated: Result<Vec<Module>> =
                corpus_n.iter().map(|m| m.conjugate(rep, g)).collect();
            let conj_table = membership_table(&pred, &conjugated?, cfg)?;
            let rep_report = compare_memberships(&base, &conj_table);
            if !rep_report.holds() {
                worst = rep_report;
                break;
            }
        }
        out.push((name, worst));
    }
    Ok(out)
}

/// The commuting square for a semibrick over kG along a p-power-index
/// normal subgroup: the induction preimage of its extension closure equals
/// the extension closure of its restriction, on a kN corpus.
pub fn check_sbrick_square(
    semibrick: &[Module],
    g: &Arc<Group>,
    n: &Arc<Group>,
    corpus_n: &[Module],
    cfg: &Config,
) -> Result<IdentityReport> {
    let (restricted, certified) = crate::clifford::restrict_semibrick(semibrick, g, n, cfg)?;
    if !certified {
        return Err(Error::HypothesisNotVerified(
            "restricted set failed the semibrick certificate".into(),
        ));
    }
    let lhs = Pred::IndInv {
        ambient: Arc::clone(g),
        inner: Box::new(Pred::Filt(semibrick.to_vec())),
    };
    let rhs = Pred::Filt(restricted);
    let lt = membership_table(&lhs, corpus_n, cfg)?;
    let rt = membership_table(&rhs, corpus_n, cfg)?;
    Ok(compare_memberships(&lt, &rt))
}
