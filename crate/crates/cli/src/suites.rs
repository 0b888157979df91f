//! Verification suites run by `suq2 verify`.

use num_traits::One;
use serde::Serialize;

use suq2_core::algebra::{check_fundamental_unitary, normalize_word_with, RedexOrder};
use suq2_core::corep::{
    amatrices, amatrices_closed_form, corep_build, corep_check, corep_weights, intertwiners,
    system_check, u1_unitarization, WeightFunction,
};
use suq2_core::dual::{dmap, gamma_rmul, verify_conprop, M4Point};
use suq2_core::hopf::{cocancel_witness, hopf_axiom_check};
use suq2_core::infinitesimal::{inf_build, inf_equivalent, inf_verify, InfSystem};
use suq2_core::su2::{sl2_build, sl2_verify};
use suq2_core::{AlgebraElement, BasisIndex, Gen, Rational, Scalar};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First violated identity when the check fails.
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, failure: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed: failure.is_none(),
            detail: failure,
        }
    }

    fn from_bool(name: impl Into<String>, ok: bool, what: impl FnOnce() -> String) -> Self {
        Self::new(name, (!ok).then(what))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub q0: Rational,
    pub bound: u32,
}

pub const SUITES: [&str; 7] = ["relations", "hopf", "conprop", "derivation", "corep", "inf", "sl2"];

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<Vec<Check>> {
    Some(match name {
        "relations" => relations(),
        "hopf" => hopf(),
        "conprop" => conprop(cfg.bound),
        "derivation" => derivation(),
        "corep" => corep(&cfg.q0),
        "inf" => inf(suq2_core::scalars::rational_to_f64(&cfg.q0)),
        "sl2" => sl2(),
        "all" => SUITES
            .iter()
            .flat_map(|s| run_suite(s, cfg).unwrap_or_default())
            .collect(),
        _ => return None,
    })
}

fn words(len: usize) -> Vec<Vec<Gen>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                Gen::ALL.iter().map(move |g| {
                    let mut w = w.clone();
                    w.push(*g);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn relations() -> Vec<Check> {
    let mut out = vec![Check::from_bool(
        "fundamental matrix is unitary",
        check_fundamental_unitary(),
        || "U U^* = U^* U = 1".into(),
    )];
    for (name, ok) in M4Point::standard().check_relations() {
        out.push(Check::from_bool(format!("4x4 point: {name}"), ok, || name.into()));
    }
    let mut confluent = None;
    'outer: for len in 0..=4 {
        for w in words(len) {
            let l = normalize_word_with(&Scalar::one(), &w, RedexOrder::Leftmost);
            let r = normalize_word_with(&Scalar::one(), &w, RedexOrder::Rightmost);
            let direct = w
                .iter()
                .fold(AlgebraElement::one(), |acc, g| &acc * &AlgebraElement::gen(*g));
            if l != r || l != direct {
                confluent = Some(format!("word {w:?}"));
                break 'outer;
            }
        }
    }
    out.push(Check::new("rewriting is confluent on words of length <= 4", confluent));
    out
}

pub fn hopf() -> Vec<Check> {
    let mut failure = None;
    for k in -2..=2 {
        for n in 0..=2 {
            for m in 0..=2 {
                let idx = BasisIndex::new(k, n, m);
                let r = hopf_axiom_check(&AlgebraElement::basis(idx));
                if let Some(f) = r.first_failure() {
                    failure = failure.or(Some(format!("{f} on {idx}")));
                }
            }
        }
    }
    let c = cocancel_witness();
    vec![
        Check::new("Hopf axioms on |k|,n,m <= 2", failure),
        Check::from_bool(
            "cocancellation witnesses",
            c.alpha_identity && c.gamma_identity,
            || format!("{c:?}"),
        ),
    ]
}

pub fn conprop(bound: u32) -> Vec<Check> {
    verify_conprop(bound)
        .results
        .into_iter()
        .map(|r| {
            let detail = r.witness.map(|w| format!("{} fails on {w}", r.statement));
            Check::new(format!("({}) {}", r.name, r.statement), if r.holds { None } else { detail.or(Some(r.statement)) })
        })
        .collect()
}

pub fn derivation() -> Vec<Check> {
    let grid: Vec<_> = BasisIndex::grid(1).collect();
    let mut leibniz = None;
    'outer: for x in &grid {
        for y in &grid {
            let (x, y) = (AlgebraElement::basis(*x), AlgebraElement::basis(*y));
            let lhs = dmap(&(&x * &y));
            let rhs = dmap(&y).left_mul(&x).add(&gamma_rmul(&dmap(&x), &y));
            if lhs != rhs {
                leibniz = Some(format!("d(xy) != x d(y) + d(x) y for x = {x}, y = {y}"));
                break 'outer;
            }
        }
    }
    let kernel = BasisIndex::grid(4)
        .find(|idx| dmap(&AlgebraElement::basis(*idx)).is_zero() != idx.is_identity())
        .map(|idx| format!("d({idx}) has the wrong kernel status"));
    vec![
        Check::new("Leibniz rule on |k|,n,m <= 1", leibniz),
        Check::new("ker d = scalars on |k|,n,m <= 4", kernel),
    ]
}

pub fn corep(q0: &Rational) -> Vec<Check> {
    let mut out = Vec::new();
    let us: Vec<_> = (0..=5).map(|n| corep_build(n).expect("U_n")).collect();
    for (n, u) in us.iter().enumerate() {
        let r = corep_check(u);
        out.push(Check::new(
            format!("U_{n} is a corepresentation"),
            r.first_failure().map(String::from),
        ));
        let w = corep_weights(u);
        out.push(Check::from_bool(
            format!("U_{n} has weights M_({n})"),
            w.as_ref().ok() == Some(&WeightFunction::irreducible(n as u32)),
            || format!("{w:?}"),
        ));
        let a = amatrices(u);
        let s = system_check(&a);
        out.push(Check::from_bool(format!("A-matrices of U_{n} satisfy the q-commutators"), s.relations(), || {
            format!("{s:?}")
        }));
        out.push(Check::from_bool(
            format!("A-matrices of U_{n} match the closed forms"),
            a == amatrices_closed_form(n as u32),
            || "closed form mismatch".into(),
        ));
    }
    let mut schur = None;
    for (m, u) in us.iter().take(5).enumerate() {
        for (n, v) in us.iter().take(5).enumerate() {
            match intertwiners(u, v, q0) {
                Ok(t) if t.len() == usize::from(m == n) => {}
                Ok(t) => schur = schur.or(Some(format!("dim Hom(U_{m}, U_{n}) = {}", t.len()))),
                Err(e) => schur = schur.or(Some(e.to_string())),
            }
        }
    }
    out.push(Check::new(format!("Schur dimensions at q = {q0}"), schur));
    match u1_unitarization() {
        Ok(r) => out.push(Check::from_bool("U_1 unitarization", r.passes(), || format!("{r:?}"))),
        Err(e) => out.push(Check::new("U_1 unitarization", Some(e.to_string()))),
    }
    out
}

pub fn inf(q0: f64) -> Vec<Check> {
    let mut out = Vec::new();
    let mut failure = None;
    for n in 0..=8 {
        let r = inf_verify(&inf_build(n, q0), 1e-9);
        if let Some(f) = r.first_failure() {
            failure = failure.or(Some(format!("n = {n}: {f}")));
        }
    }
    out.push(Check::new(format!("canonical systems n <= 8 at q = {q0}"), failure));
    let mut equiv = None;
    for n in 0..=4 {
        let s = inf_build(n, q0);
        let t = InfSystem::from_exact(&amatrices(&corep_build(n).expect("U_n")), q0);
        if inf_equivalent(&s, &t, 1e-7).is_none() {
            equiv = equiv.or(Some(format!("no intertwiner for n = {n}")));
        }
    }
    out.push(Check::new("U_n systems equivalent to canonical ones, n <= 4", equiv));
    out
}

pub fn sl2() -> Vec<Check> {
    let failure = (0..=10).find_map(|n| {
        sl2_verify(&sl2_build(n))
            .first_failure()
            .map(|f| format!("n = {n}: {f}"))
    });
    vec![Check::new("sl2 irreducibles n <= 10", failure)]
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
