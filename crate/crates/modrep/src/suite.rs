//! Built-in verification suites.
//!
//! Each suite runs a list of named checks and reports one line per check.
//! Check identifiers are stable; reports are emitted in identifier order
//! regardless of execution order, and contain no timing data outside the
//! summary, so re-runs with the same seed are byte-identical.

use crate::clifford::{
    clifford_decompose, is_add_g_invariant, is_g_invariant, is_tensor_stable,
    perm_tensor_presentation, restrict_semibrick,
};
use crate::config::Config;
use crate::corpus::{corpus_pair, s4a4_data, CorpusPair, S4A4Data};
use crate::decomp::{decompose, is_brick, is_semibrick_module, simple_modules};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hom::{ext1_dim, hom_dim, is_isomorphic};
use crate::module::Module;
use crate::perm::{coset_reps, Group};
use crate::smc::{check_two_term_smc, restrict_smc, TwoTermCollection, TwoTermItem};
use crate::subcat::{
    check_fac_ind, check_ginv_closures, check_heart_transport, check_roundtrips,
    check_sbrick_square, Pred,
};
use serde::Serialize;
use serde_json::json;
use std::sync::Arc;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub statement: String,
    pub status: Status,
    pub witness: serde_json::Value,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub wall_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn failed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .count()
    }

    pub fn indeterminate(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Indeterminate)
            .count()
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed() > 0 {
            1
        } else if self.indeterminate() > 0 {
            2
        } else {
            0
        }
    }

    /// One JSON line per check followed by a summary line (the only line
    /// that contains timing).
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("serializable"));
            out.push('\n');
        }
        let summary = json!({
            "suite": self.suite,
            "checks": self.checks.len(),
            "pass": self.passed(),
            "fail": self.failed(),
            "indeterminate": self.indeterminate(),
            "wall_ms": self.wall_ms,
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Indeterminate => "INDET",
            };
            out.push_str(&format!("{:5} {} — {}\n", tag, c.check, c.statement));
        }
        out.push_str(&format!(
            "{}: {} checks, {} pass, {} fail, {} indeterminate ({} ms)\n",
            self.suite,
            self.checks.len(),
            self.passed(),
            self.failed(),
            self.indeterminate(),
            self.wall_ms
        ));
        out
    }
}

fn finish(suite: &str, start: Instant, mut checks: Vec<Check>) -> SuiteReport {
    checks.sort_by(|a, b| a.check.cmp(&b.check));
    SuiteReport {
        suite: suite.to_string(),
        checks,
        wall_ms: start.elapsed().as_millis(),
    }
}

/// Wrap a fallible boolean check; indeterminate-class errors become
/// `Indeterminate`, everything else fails with the error as witness.
fn check(id: &str, statement: &str, outcome: Result<(bool, serde_json::Value)>) -> Check {
    match outcome {
        Ok((true, witness)) => Check {
            check: id.into(),
            statement: statement.into(),
            status: Status::Pass,
            witness,
        },
        Ok((false, witness)) => Check {
            check: id.into(),
            statement: statement.into(),
            status: Status::Fail,
            witness,
        },
        Err(e) => Check {
            check: id.into(),
            statement: statement.into(),
            status: if e.is_indeterminate() {
                Status::Indeterminate
            } else {
                Status::Fail
            },
            witness: json!({ "error": e.to_string() }),
        },
    }
}

pub fn run_suite(name: &str, cfg: &Config) -> Result<SuiteReport> {
    match name {
        "s4a4" => suite_s4a4(cfg),
        "functor-identities" => suite_functor_identities(cfg),
        "appendix" => suite_appendix(cfg),
        "smc" => suite_smc(cfg),
        other => Err(Error::InvalidInput(format!(
            "unknown suite `{}` (expected s4a4, functor-identities, appendix or smc)",
            other
        ))),
    }
}

/// Decompose `Res m` and compare the summands, up to isomorphism and
/// reordering, against named expected modules with multiplicities.
fn restriction_matches(
    m: &Module,
    n: &Arc<Group>,
    expected: &[(&Module, usize)],
    cfg: &Config,
) -> Result<(bool, serde_json::Value)> {
    let res = m.restrict(n)?;
    let dec = decompose(&res, cfg)?;
    let got: Vec<(usize, usize)> = dec.summands.iter().map(|(s, a)| (s.dim(), *a)).collect();
    if dec.summands.len() != expected.len() {
        return Ok((false, json!({ "expected": expected.len(), "got": got })));
    }
    let mut used = vec![false; expected.len()];
    for (s, a) in &dec.summands {
        let mut matched = false;
        for (i, (e, mult)) in expected.iter().enumerate() {
            if used[i] || *mult != *a || e.dim() != s.dim() {
                continue;
            }
            if is_isomorphic(e, s, cfg)?.is_some() {
                used[i] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok((
                false,
                json!({ "unmatched_summand_dim": s.dim(), "got": got }),
            ));
        }
    }
    Ok((true, json!({ "summands": got })))
}

fn suite_s4a4(cfg: &Config) -> Result<SuiteReport> {
    let start = Instant::now();
    let data: S4A4Data = s4a4_data(cfg)?;
    let mut checks = Vec::new();
    let g = &data.g;
    let n = &data.n;
    let n1 = &data.n1;
    let odd = crate::groups::odd_transposition();

    checks.push(check(
        "s4a4/01-simples-ambient",
        "the ambient group algebra has exactly two simple modules, of dimensions 1 and 2",
        (|| {
            let simples = simple_modules(g, &data.field, cfg)?;
            let mut dims: Vec<usize> = simples.iter().map(|m| m.dim()).collect();
            dims.sort();
            Ok((dims == vec![1, 2], json!({ "dims": dims })))
        })(),
    ));
    checks.push(check(
        "s4a4/02-simples-subgroup",
        "the subgroup algebra has exactly three simple modules, all one-dimensional",
        (|| {
            let simples = simple_modules(n, &data.field, cfg)?;
            let dims: Vec<usize> = simples.iter().map(|m| m.dim()).collect();
            Ok((dims == vec![1, 1, 1], json!({ "dims": dims })))
        })(),
    ));
    let expected_brick_dims = [1usize, 2, 4, 3, 3, 4];
    for ((name, brick), want_dim) in data.bricks.iter().zip(expected_brick_dims) {
        let id = format!("s4a4/03-brick-{}", name.replace('|', "-").replace('+', "p"));
        checks.push(check(
            &id,
            "the listed module certifies as a brick of the displayed dimension",
            (|| {
                Ok((
                    brick.dim() == want_dim && is_brick(brick, cfg)?,
                    json!({ "dim": brick.dim(), "expected": want_dim }),
                ))
            })(),
        ));
    }
    checks.push(check(
        "s4a4/04-res-trivial",
        "the trivial module restricts to the trivial module",
        restriction_matches(&data.kg, n, &[(&data.kn, 1)], cfg),
    ));
    checks.push(check(
        "s4a4/05-res-natural",
        "the two-dimensional simple restricts to the sum of the two conjugate characters",
        restriction_matches(&data.s2, n, &[(&data.t1, 1), (&data.t2, 1)], cfg),
    ));
    checks.push(check(
        "s4a4/06-res-s2kk",
        "the dimension-4 brick with two-dimensional top restricts to two dimension-2 summands",
        restriction_matches(
            data.brick("s2|k|k"),
            n,
            &[(data.n_module("t1|k"), 1), (data.n_module("t2|k"), 1)],
            cfg,
        ),
    ));
    checks.push(check(
        "s4a4/07-res-ks2",
        "the dimension-3 brick with trivial top restricts to a single indecomposable brick",
        (|| {
            let r =
                restriction_matches(data.brick("k|s2"), n, &[(data.n_module("k|t1+t2"), 1)], cfg)?;
            let res = data.brick("k|s2").restrict(n)?;
            Ok((r.0 && is_brick(&res, cfg)?, r.1))
        })(),
    ));
    checks.push(check(
        "s4a4/08-res-s2k",
        "the dimension-3 brick with trivial socle restricts to a single indecomposable brick",
        (|| {
            let r =
                restriction_matches(data.brick("s2|k"), n, &[(data.n_module("t1+t2|k"), 1)], cfg)?;
            let res = data.brick("s2|k").restrict(n)?;
            Ok((r.0 && is_brick(&res, cfg)?, r.1))
        })(),
    ));
    checks.push(check(
        "s4a4/09-res-kks2",
        "the dimension-4 brick with two-dimensional socle restricts to two dimension-2 summands",
        restriction_matches(
            data.brick("k|k|s2"),
            n,
            &[(data.n_module("k|t1"), 1), (data.n_module("k|t2"), 1)],
            cfg,
        ),
    ));
    checks.push(check(
        "s4a4/10-characters-conjugate",
        "conjugation by an odd permutation swaps the two nontrivial characters",
        (|| {
            let c = data.t1.conjugate(&odd, g)?;
            Ok((is_isomorphic(&c, &data.t2, cfg)?.is_some(), json!({})))
        })(),
    ));
    checks.push(check(
        "s4a4/11-summands-conjugate",
        "the paired restriction summands are interchanged by an odd permutation",
        (|| {
            let a = data.n_module("t1|k").conjugate(&odd, g)?;
            let b = data.n_module("k|t1").conjugate(&odd, g)?;
            Ok((
                is_isomorphic(&a, data.n_module("t2|k"), cfg)?.is_some()
                    && is_isomorphic(&b, data.n_module("k|t2"), cfg)?.is_some(),
                json!({}),
            ))
        })(),
    ));
    checks.push(check(
        "s4a4/12-self-extension-not-brick",
        "the nonsplit self-extension of the trivial module is not a brick",
        (|| Ok((!is_brick(&data.kk, cfg)?, json!({}))))(),
    ));
    checks.push(check(
        "s4a4/13-self-extension-restricts-split",
        "restricting the self-extension to the index-2 subgroup gives a semibrick of two trivials",
        (|| {
            let res = data.kk.restrict(n)?;
            let dec = decompose(&res, cfg)?;
            let shape_ok = dec.summands.len() == 1 && dec.summands[0].1 == 2;
            Ok((shape_ok && is_semibrick_module(&res, cfg)?, json!({})))
        })(),
    ));
    checks.push(check(
        "s4a4/14-self-extension-restricts-klein",
        "restricting the self-extension to the Klein subgroup also gives a semibrick",
        (|| {
            let res = data.kk.restrict(n1)?;
            Ok((is_semibrick_module(&res, cfg)?, json!({})))
        })(),
    ));
    checks.push(check(
        "s4a4/15-counterexample-subgroup-brick",
        "the layered subgroup brick restricted to the Klein subgroup is not a semibrick",
        (|| {
            let brick = data.n_module("k|t2");
            let ok = is_brick(brick, cfg)?;
            let res = brick.restrict(n1)?;
            Ok((
                ok && !is_semibrick_module(&res, cfg)?,
                json!({ "restricted_dim": res.dim() }),
            ))
        })(),
    ));
    checks.push(check(
        "s4a4/16-counterexample-ambient-brick",
        "the dimension-3 ambient brick restricted to the Klein subgroup is not a semibrick",
        (|| {
            let brick = data.brick("k|s2");
            let res = brick.restrict(n1)?;
            Ok((
                !is_semibrick_module(&res, cfg)?,
                json!({ "restricted_dim": res.dim() }),
            ))
        })(),
    ));
    for (i, (name, brick)) in data.bricks.iter().enumerate() {
        let id = format!(
            "s4a4/2{}-clifford-{}",
            i,
            name.replace('|', "-").replace('+', "p")
        );
        checks.push(check(
            &id,
            "restriction decomposes into a semibrick with a transitive conjugation action and equal dimensions and multiplicities",
            (|| {
                let report = clifford_decompose(brick, g, n, None, cfg)?;
                Ok((report.all_certified(), serde_json::to_value(&report.summands).unwrap_or(json!({}))))
            })(),
        ));
    }
    Ok(finish("s4a4", start, checks))
}

struct GroupPairSpec {
    tag: &'static str,
    g: Arc<Group>,
    n: Arc<Group>,
    field: Field,
}

fn standard_pairs() -> Result<Vec<GroupPairSpec>> {
    Ok(vec![
        GroupPairSpec {
            tag: "s4-a4",
            g: crate::groups::s4(),
            n: crate::groups::a4(),
            field: Field::new(2, 2, None)?,
        },
        GroupPairSpec {
            tag: "c4-c2",
            g: crate::groups::c4(),
            n: crate::groups::c2_in_c4(),
            field: Field::new(2, 1, None)?,
        },
        GroupPairSpec {
            tag: "d4-c4",
            g: crate::groups::d4(),
            n: crate::groups::c4(),
            field: Field::new(2, 1, None)?,
        },
    ])
}

/// Pairs (V over kN, U over kG) used by the adjunction identity checks,
/// kept small enough for the Ext computations on the induced side.
fn identity_pairs(corpus: &CorpusPair) -> Vec<(&Module, &Module)> {
    let mut pairs = Vec::new();
    for v in &corpus.n_modules {
        if v.dim() == 0 || v.dim() > 3 {
            continue;
        }
        for u in &corpus.g_modules {
            if u.dim() == 0 || u.dim() > 4 {
                continue;
            }
            // bound the size of the induced side
            if v.dim() == 3 && u.dim() > 2 {
                continue;
            }
            pairs.push((v, u));
        }
    }
    pairs.truncate(40);
    pairs
}

fn suite_functor_identities(cfg: &Config) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut checks = Vec::new();
    for spec in standard_pairs()? {
        let corpus = corpus_pair(&spec.g, &spec.n, &spec.field, 4, 64, cfg)?;
        let cosets = coset_reps(&spec.g, &spec.n)?;
        let pm = Module::perm_module(&spec.g, &spec.n, &spec.field)?;
        let tag = spec.tag;

        // Res Ind U = direct sum of the conjugates of U over coset reps
        checks.push(check(
            &format!("functor/{}-mackey", tag),
            "restriction of an induced module is the direct sum of its conjugates over coset representatives",
            (|| {
                let mut failures = Vec::new();
                for (i, u) in corpus.n_modules.iter().enumerate() {
                    if u.dim() == 0 || u.dim() > 3 {
                        continue;
                    }
                    let lhs = u.induce(&spec.g)?.restrict(&spec.n)?;
                    let mut conjugates = Vec::new();
                    for &r in &cosets.reps {
                        conjugates.push(u.conjugate(spec.g.element(r), &spec.g)?);
                    }
                    let rhs = Module::direct_sum(&spec.n, &spec.field, &conjugates)?;
                    if is_isomorphic(&lhs, &rhs, cfg)?.is_none() {
                        failures.push(i);
                    }
                }
                Ok((failures.is_empty(), json!({ "failures": failures })))
            })(),
        ));

        // Ind Res M = k[G/N] (x) M
        checks.push(check(
            &format!("functor/{}-ind-res-tensor", tag),
            "induction after restriction is tensoring with the coset permutation module",
            (|| {
                let mut failures = Vec::new();
                for (i, m) in corpus.g_modules.iter().enumerate() {
                    if m.dim() == 0 || m.dim() > 3 {
                        continue;
                    }
                    let lhs = m.restrict(&spec.n)?.induce(&spec.g)?;
                    let rhs = pm.tensor(m)?;
                    if is_isomorphic(&lhs, &rhs, cfg)?.is_none() {
                        failures.push(i);
                    }
                }
                Ok((failures.is_empty(), json!({ "failures": failures })))
            })(),
        ));

        let pairs = identity_pairs(&corpus);
        checks.push(check(
            &format!("functor/{}-pair-count", tag),
            "the identity corpus has at least 32 module pairs",
            Ok((pairs.len() >= 32, json!({ "pairs": pairs.len() }))),
        ));

        // projection formula
        checks.push(check(
            &format!("functor/{}-projection", tag),
            "inducing a tensor with a restriction equals tensoring the induction",
            (|| {
                let results = crate::par::map(&pairs, |(v, u)| -> Result<bool> {
                    let lhs = v.tensor(&u.restrict(&spec.n)?)?.induce(&spec.g)?;
                    let rhs = v.induce(&spec.g)?.tensor(u)?;
                    Ok(is_isomorphic(&lhs, &rhs, cfg)?.is_some())
                });
                let mut failures = Vec::new();
                for (i, r) in results.into_iter().enumerate() {
                    if !r? {
                        failures.push(i);
                    }
                }
                Ok((failures.is_empty(), json!({ "failures": failures })))
            })(),
        ));

        // adjunction dimension identities for Hom
        checks.push(check(
            &format!("functor/{}-hom-adjunctions", tag),
            "both Hom adjunction dimension identities hold on the corpus",
            (|| {
                let results = crate::par::map(&pairs, |(v, u)| -> Result<bool> {
                    let res_u = u.restrict(&spec.n)?;
                    let ind_v = v.induce(&spec.g)?;
                    let a = hom_dim(v, &res_u)? == hom_dim(&ind_v, u)?;
                    let b = hom_dim(&res_u, v)? == hom_dim(u, &ind_v)?;
                    Ok(a && b)
                });
                let mut failures = Vec::new();
                for (i, r) in results.into_iter().enumerate() {
                    if !r? {
                        failures.push(i);
                    }
                }
                Ok((failures.is_empty(), json!({ "failures": failures })))
            })(),
        ));

        // adjunction dimension identities for Ext^1
        checks.push(check(
            &format!("functor/{}-ext-adjunctions", tag),
            "both Ext^1 adjunction dimension identities hold on the corpus",
            (|| {
                let results = crate::par::map(&pairs, |(v, u)| -> Result<bool> {
                    let res_u = u.restrict(&spec.n)?;
                    let ind_v = v.induce(&spec.g)?;
                    let a = ext1_dim(v, &res_u)? == ext1_dim(&ind_v, u)?;
                    let b = ext1_dim(&res_u, v)? == ext1_dim(u, &ind_v)?;
                    Ok(a && b)
                });
                let mut failures = Vec::new();
                for (i, r) in results.into_iter().enumerate() {
                    if !r? {
                        failures.push(i);
                    }
                }
                Ok((failures.is_empty(), json!({ "failures": failures })))
            })(),
        ));
    }
    Ok(finish("functor-identities", start, checks))
}

fn suite_appendix(cfg: &Config) -> Result<SuiteReport> {
    let start = Instant::now();
    let data = s4a4_data(cfg)?;
    let g = &data.g;
    let n = &data.n;
    let corpus = corpus_pair(g, n, &data.field, 3, 32, cfg)?;
    let mut checks = Vec::new();

    let simples_n = vec![data.kn.clone(), data.t1.clone(), data.t2.clone()];
    let simples_g = vec![data.kg.clone(), data.s2.clone()];

    checks.push(check(
        "appendix/01-roundtrips",
        "conjugation-invariant classes over the subgroup and tensor-stable classes over the group are recovered by the two preimage round trips",
        (|| {
            let c = Pred::Filt(simples_n.clone());
            let d = Pred::Filt(simples_g.clone());
            let r = check_roundtrips(&c, &d, g, n, &corpus.n_modules, &corpus.g_modules, cfg)?;
            Ok((
                r.sub_side.holds() && r.amb_side.holds(),
                json!({
                    "sub_discrepancies": r.sub_side.discrepancies,
                    "amb_discrepancies": r.amb_side.discrepancies,
                }),
            ))
        })(),
    ));
    checks.push(check(
        "appendix/02-roundtrip-negative-control",
        "a class that is not conjugation-invariant breaks the round trip",
        (|| {
            let c = Pred::Filt(vec![data.t1.clone()]);
            let d = Pred::Filt(simples_g.clone());
            let r = check_roundtrips(&c, &d, g, n, &corpus.n_modules, &corpus.g_modules, cfg)?;
            Ok((
                !r.sub_side.holds(),
                json!({ "discrepancies": r.sub_side.discrepancies }),
            ))
        })(),
    ));
    checks.push(check(
        "appendix/03-heart-transport",
        "the heart of a torsion interval and the perpendicular class transport through the restriction preimage",
        (|| {
            let u_gens = vec![data.t1.clone(), data.t2.clone()];
            let r = check_heart_transport(&u_gens, &simples_n, n, &corpus.g_modules, cfg)?;
            Ok((
                r.heart.holds() && r.perp.holds(),
                json!({
                    "heart_discrepancies": r.heart.discrepancies,
                    "perp_discrepancies": r.perp.discrepancies,
                }),
            ))
        })(),
    ));
    checks.push(check(
        "appendix/04-heart-degenerate",
        "the degenerate intervals give the zero heart and the full heart",
        (|| {
            // equal torsion classes: the heart contains only the zero module
            let t_pred = Pred::TClose(simples_n.clone());
            let u_perp = Pred::PerpR(simples_n.clone());
            let mut zero_ok = true;
            for x in &corpus.n_modules {
                let in_heart = t_pred.member(x, cfg)? && u_perp.member(x, cfg)?;
                if in_heart != (x.dim() == 0) {
                    zero_ok = false;
                }
            }
            // empty lower class: every corpus module lies in the heart of
            // [0, everything]
            let u_empty = Pred::PerpR(vec![]);
            let mut full_ok = true;
            for x in &corpus.n_modules {
                if !(t_pred.member(x, cfg)? && u_empty.member(x, cfg)?) {
                    full_ok = false;
                }
            }
            Ok((zero_ok && full_ok, json!({})))
        })(),
    ));
    checks.push(check(
        "appendix/05-fac-ind-commutes",
        "quotient closures of induced generators agree with restriction preimages of quotient closures",
        (|| {
            let regular_n = Module::free(n, &data.field, 1);
            let x = Module::direct_sum(n, &data.field, &[data.kn.clone(), regular_n])?;
            let r = check_fac_ind(&x, g, n, &corpus.g_modules, cfg)?;
            Ok((r.holds(), json!({ "discrepancies": r.discrepancies })))
        })(),
    ));
    checks.push(check(
        "appendix/06-fac-ind-zero",
        "the zero module generates the zero torsion class on both sides",
        (|| {
            let x = Module::zero(n, &data.field);
            let r = check_fac_ind(&x, g, n, &corpus.g_modules, cfg)?;
            Ok((r.holds(), json!({ "discrepancies": r.discrepancies })))
        })(),
    ));
    checks.push(check(
        "appendix/07-fac-ind-precondition",
        "a module whose additive closure is not conjugation-invariant is rejected",
        (|| match check_fac_ind(&data.t1, g, n, &corpus.g_modules, cfg) {
            Err(Error::NotGInvariantModule(_)) => Ok((true, json!({}))),
            Err(e) => Err(e),
            Ok(_) => Ok((false, json!({ "error": "precondition was not enforced" }))),
        })(),
    ));
    checks.push(check(
        "appendix/08-ginv-closures",
        "intersection, quotient closure, star product, extension closure, both perpendiculars and the torsion closure of conjugation-invariant classes are conjugation-invariant",
        (|| {
            let c_gens = vec![data.t1.clone(), data.t2.clone()];
            let d_gens = vec![data.kn.clone()];
            let rs = check_ginv_closures(&c_gens, &d_gens, g, n, &corpus.n_modules, cfg)?;
            let bad: Vec<String> = rs
                .iter()
                .filter(|(_, r)| !r.holds())
                .map(|(name, _)| name.clone())
                .collect();
            Ok((bad.is_empty(), json!({ "violated": bad })))
        })(),
    ));
    for (i, name) in ["k", "k|s2", "s2|k|k"].iter().enumerate() {
        let semibrick: Vec<Module> = match *name {
            "k" => vec![data.kg.clone()],
            "k|s2" => vec![data.kg.clone(), data.s2.clone()],
            _ => vec![data.brick("s2|k|k").clone()],
        };
        let id = format!("appendix/1{}-sbrick-square-{}", i, name.replace('|', "-"));
        checks.push(check(
            &id,
            "the induction preimage of the extension closure equals the extension closure of the restricted semibrick",
            (|| {
                let r = check_sbrick_square(&semibrick, g, n, &corpus.n_modules, cfg)?;
                Ok((r.holds(), json!({ "discrepancies": r.discrepancies })))
            })(),
        ));
    }
    checks.push(check(
        "appendix/13-perm-tensor-presentation",
        "every corpus module has the two-step presentation by copies of the coset module tensored with it",
        (|| {
            let sample: Vec<&Module> =
                corpus.g_modules.iter().filter(|m| m.dim() >= 1 && m.dim() <= 3).collect();
            let mut failures = Vec::new();
            for (i, x) in sample.iter().enumerate() {
                let pres = perm_tensor_presentation(x, g, n)?;
                if !pres.exact {
                    failures.push(i);
                }
            }
            Ok((failures.is_empty(), json!({ "failures": failures, "sample": sample.len() })))
        })(),
    ));
    checks.push(check(
        "appendix/14-stability-certificates",
        "generator conjugation-stability and tensor-stability certificates behave as expected on the built-in classes",
        (|| {
            let inv = is_g_invariant(&[data.t1.clone(), data.t2.clone()], g, n, cfg)?;
            let notinv = is_g_invariant(&[data.t1.clone()], g, n, cfg)?;
            let stable = is_tensor_stable(&[data.kg.clone(), data.s2.clone()], g, n, cfg)?;
            Ok((inv && !notinv && stable, json!({})))
        })(),
    ));
    checks.push(check(
        "appendix/15-restrict-semibrick",
        "restriction of the semibrick of simples is the semibrick of subgroup simples",
        (|| {
            let (set, certified) =
                restrict_semibrick(&[data.kg.clone(), data.s2.clone()], g, n, cfg)?;
            Ok((certified && set.len() == 3, json!({ "size": set.len() })))
        })(),
    ));
    checks.push(check(
        "appendix/16-add-invariance",
        "additive-closure conjugation invariance holds for the regular module and fails for a single character",
        (|| {
            let regular_n = Module::free(n, &data.field, 1);
            let a = is_add_g_invariant(&regular_n, g, n, cfg)?;
            let b = is_add_g_invariant(&data.t1, g, n, cfg)?;
            Ok((a && !b, json!({})))
        })(),
    ));
    Ok(finish("appendix", start, checks))
}

fn suite_smc(cfg: &Config) -> Result<SuiteReport> {
    let start = Instant::now();
    let data = s4a4_data(cfg)?;
    let g = &data.g;
    let n = &data.n;
    let mut checks = Vec::new();

    let simples: Vec<Module> = vec![data.kg.clone(), data.s2.clone()];
    checks.push(check(
        "smc/01-simples-pass",
        "the simple modules at shift zero form a two-term collection passing every certificate",
        (|| {
            let coll = TwoTermCollection::new(
                simples
                    .iter()
                    .map(|m| TwoTermItem {
                        module: m.clone(),
                        shift: 0,
                    })
                    .collect(),
            )?;
            let cert = check_two_term_smc(&coll, cfg)?;
            Ok((
                cert.passes(),
                serde_json::to_value(&cert).unwrap_or(json!({})),
            ))
        })(),
    ));
    checks.push(check(
        "smc/02-simples-restrict",
        "the restriction of the simples collection passes every certificate over the subgroup",
        (|| {
            let coll = TwoTermCollection::new(
                simples
                    .iter()
                    .map(|m| TwoTermItem {
                        module: m.clone(),
                        shift: 0,
                    })
                    .collect(),
            )?;
            let (restricted, cert) = restrict_smc(&coll, n, cfg)?;
            Ok((
                cert.passes() && restricted.items.len() == 3,
                serde_json::to_value(&cert).unwrap_or(json!({})),
            ))
        })(),
    ));
    checks.push(check(
        "smc/03-degenerate-fails",
        "the collection pairing the trivial module with its own shift fails",
        (|| {
            let coll = TwoTermCollection::new(vec![
                TwoTermItem {
                    module: data.kg.clone(),
                    shift: 0,
                },
                TwoTermItem {
                    module: data.kg.clone(),
                    shift: 1,
                },
            ])?;
            let cert = check_two_term_smc(&coll, cfg)?;
            Ok((
                !cert.passes(),
                serde_json::to_value(&cert).unwrap_or(json!({})),
            ))
        })(),
    ));

    // exhaustive search for mixed-shift collections over the six bricks
    let mut candidates: Vec<(String, TwoTermCollection)> = Vec::new();
    for (name_x, x) in &data.bricks {
        for (name_y, y) in &data.bricks {
            let coll = TwoTermCollection::new(vec![
                TwoTermItem {
                    module: x.clone(),
                    shift: 0,
                },
                TwoTermItem {
                    module: y.clone(),
                    shift: 1,
                },
            ])?;
            let cert = check_two_term_smc(&coll, cfg)?;
            if cert.passes() {
                candidates.push((format!("{}+{}[1]", name_x, name_y), coll));
            }
        }
    }
    let names: Vec<String> = candidates.iter().map(|(n, _)| n.clone()).collect();
    checks.push(check(
        "smc/04-mixed-search",
        "exhaustive search over the six bricks finds at least one passing collection with one shifted item",
        Ok((!candidates.is_empty(), json!({ "candidates": names }))),
    ));
    checks.push(check(
        "smc/05-mixed-restrict",
        "restrictions of the passing mixed collections pass every certificate including unimodularity",
        (|| {
            if candidates.is_empty() {
                return Ok((false, json!({ "error": "no candidates" })));
            }
            let mut results = Vec::new();
            let mut any = false;
            for (name, coll) in &candidates {
                let (restricted, cert) = restrict_smc(coll, n, cfg)?;
                let ok = cert.passes();
                any = any || ok;
                results.push(json!({
                    "candidate": name,
                    "restricted_items": restricted.items.len(),
                    "passes": ok,
                    "k0_det": cert.k0_determinant,
                }));
            }
            Ok((any, json!({ "results": results })))
        })(),
    ));
    checks.push(check(
        "smc/06-shifted-simples",
        "the fully shifted simples collection passes and restricts to the fully shifted subgroup simples",
        (|| {
            let coll = TwoTermCollection::new(
                simples.iter().map(|m| TwoTermItem { module: m.clone(), shift: 1 }).collect(),
            )?;
            let cert = check_two_term_smc(&coll, cfg)?;
            let (restricted, rcert) = restrict_smc(&coll, n, cfg)?;
            Ok((
                cert.passes() && rcert.passes() && restricted.items.len() == 3,
                json!({ "restricted_items": restricted.items.len() }),
            ))
        })(),
    ));
    checks.push(check(
        "smc/07-identity-unchanged",
        "restricting along the group itself leaves the collection unchanged",
        (|| {
            let coll = TwoTermCollection::new(
                simples
                    .iter()
                    .map(|m| TwoTermItem {
                        module: m.clone(),
                        shift: 0,
                    })
                    .collect(),
            )?;
            let (restricted, cert) = restrict_smc(&coll, g, cfg)?;
            Ok((cert.passes() && restricted.items.len() == 2, json!({})))
        })(),
    ));
    Ok(finish("smc", start, checks))
}
