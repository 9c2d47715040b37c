//! Invariant suite run by `newtonbez verify`.
//!
//! Every check runs over every instance in exact arithmetic. Float instance
//! files are converted to the rationals with the same binary values first.

use std::io::Write;
use std::path::Path;

use newtonbez_core::bezout::{
    bezout_monomial, bezout_newton_preserving, bezout_newton_preserving_with, bezout_newton_via_transform,
    cayley_quotient_oracle, check_pair,
};
use newtonbez_core::confederate::{
    char_poly, confederate_matrix, confederate_resultant, relation_residual, sylvester_resultant, Approach,
};
use newtonbez_core::matrix::determinant;
use newtonbez_core::poly::{random_instance, transition_matrix, Instance};
use newtonbez_core::{with_counting, DenseMatrix, Error as CoreError, Field, Rational};

use crate::error::CliError;
use crate::io::{FieldKind, InstanceFile};

pub const CHECKS: [&str; 9] = [
    "symmetry",
    "first-row",
    "oracle-equivalence",
    "congruence-determinant",
    "resultant-identity",
    "op-count",
    "cross-approach",
    "char-poly",
    "defining-relation",
];

/// Where the instances come from.
#[derive(Debug, Clone)]
pub enum Source<'a> {
    File(&'a Path),
    /// Seeds `seed .. seed + count`, all with the same `(n, m)`.
    Random {
        n: usize,
        m: usize,
        seed: u64,
        count: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub failures: usize,
    /// Index of the first failing instance and a short reason.
    pub first_failure: Option<(usize, String)>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub instances: usize,
    pub checks: Vec<CheckResult>,
    pub counterexample: Option<Instance<Rational>>,
    pub zero_matrix_instances: usize,
}

impl Report {
    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed()).count()
    }

    pub fn lines(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .map(|c| match &c.first_failure {
                None => format!("PASS {} ({} instances)", c.name, self.instances),
                Some((idx, why)) => {
                    format!("FAIL {} ({}/{} instances; first at #{idx}: {why})", c.name, c.failures, self.instances)
                }
            })
            .collect();
        if self.zero_matrix_instances > 0 {
            out.push(format!(
                "note: {} instance(s) have G = F; their Bézout and confederate resultant matrices are zero",
                self.zero_matrix_instances
            ));
        }
        out
    }
}

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn pow(x: &Rational, e: usize) -> Rational {
    (0..e).fold(q(1), |acc, _| acc * x)
}

type Outcome = Result<(), String>;

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn core<T>(r: Result<T, CoreError>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Per-instance quantities shared by several checks.
struct Context<'a> {
    inst: &'a Instance<Rational>,
    n: usize,
    m: usize,
    bn: DenseMatrix<Rational>,
}

fn symmetry(cx: &Context) -> Outcome {
    ensure(cx.bn.is_symmetric(), || "B_N is not symmetric".into())
}

fn first_row(cx: &Context) -> Outcome {
    let (a, b, n) = (&cx.inst.f, &cx.inst.g, cx.n);
    for k in 1..=n {
        let expected = a.coeff(n) * b.coeff(n - k) - a.coeff(n - k) * b.coeff(n);
        if cx.bn[(0, k - 1)] != expected {
            return Err(format!("entry (1,{k}) is {} but expected {expected}", cx.bn[(0, k - 1)]));
        }
    }
    Ok(())
}

fn oracle_equivalence(cx: &Context) -> Outcome {
    let t = core(bezout_newton_via_transform(&cx.inst.f, &cx.inst.g))?;
    ensure(t == cx.bn, || "transform path differs from preserving".into())?;
    let o = core(cayley_quotient_oracle(&cx.inst.f, &cx.inst.g))?;
    ensure(o == cx.bn, || "oracle differs from preserving".into())
}

fn congruence_determinant(cx: &Context) -> Outcome {
    let bp = core(bezout_monomial(&cx.inst.f.to_monomial(), &cx.inst.g.to_monomial()))?;
    let u = core(transition_matrix(cx.inst.nodes(), cx.n))?;
    let congruent = core(u.transpose().mul(&cx.bn).and_then(|x| x.mul(&u)))?;
    ensure(congruent == bp, || "Uᵀ B_N U differs from B_P".into())?;
    let (dn, dp) = (core(determinant(&cx.bn))?, core(determinant(&bp))?);
    ensure(dn == dp, || format!("det B_N = {dn} but det B_P = {dp}"))
}

fn resultant_identity(cx: &Context) -> Outcome {
    let (fm, gm) = (cx.inst.f.to_monomial(), cx.inst.g.to_monomial());
    let det = core(determinant(&core(bezout_monomial(&fm, &gm))?))?;
    let res = core(sylvester_resultant(&fm, &gm))?;
    let sign = if (cx.n * (cx.n - 1) / 2).is_multiple_of(2) { q(1) } else { q(-1) };
    let expected = sign * pow(&cx.inst.f.coeff(cx.n), cx.n - cx.m) * &res;
    ensure(det == expected, || format!("det B_P = {det} but ±aₙ^(n−m)·Res = {expected}"))
}

fn op_count(cx: &Context) -> Outcome {
    let (_, c) = with_counting(|ops| bezout_newton_preserving_with(&cx.inst.f, &cx.inst.g, ops));
    let n = cx.n as u64;
    let expected = ((3 * n * n + n) / 2, 2 * n * n - n);
    ensure((c.multiplications, c.additions) == expected, || {
        format!("counted ({}, {}) but expected {expected:?}", c.multiplications, c.additions)
    })
}

fn cross_approach(cx: &Context) -> Outcome {
    let a = core(confederate_resultant(&cx.inst.f, &cx.inst.g, Approach::A))?.matrix;
    for approach in [Approach::B, Approach::C] {
        let other = core(confederate_resultant(&cx.inst.f, &cx.inst.g, approach))?.matrix;
        ensure(other == a, || format!("approach {approach:?} differs from A"))?;
    }
    Ok(())
}

fn char_poly_check(cx: &Context) -> Outcome {
    let c = core(confederate_matrix(&cx.inst.f))?;
    let p = core(char_poly(&c))?.scale(&cx.inst.f.coeff(cx.n));
    ensure(p.same_as(&cx.inst.f.to_monomial()), || "aₙ·charpoly(C_N(F)) differs from F".into())
}

fn defining_relation(cx: &Context) -> Outcome {
    let c = core(confederate_matrix(&cx.inst.f))?;
    let rows = core(relation_residual(&c, cx.inst.nodes()))?;
    let monic = cx.inst.f.to_monomial().scale(&(q(1) / cx.inst.f.coeff(cx.n)));
    ensure(rows[0].same_as(&monic), || "row 1 of the residual is not F/aₙ".into())?;
    match rows.iter().skip(1).position(|r| !r.is_zero()) {
        Some(i) => Err(format!("row {} of the residual is nonzero", i + 2)),
        None => Ok(()),
    }
}

const RUNNERS: [fn(&Context) -> Outcome; 9] = [
    symmetry,
    first_row,
    oracle_equivalence,
    congruence_determinant,
    resultant_identity,
    op_count,
    cross_approach,
    char_poly_check,
    defining_relation,
];

/// Runs every check on every instance. With `corrupt` set, the preserving
/// matrix is perturbed before comparison so the suite must report failures.
pub fn run_checks(instances: &[Instance<Rational>], corrupt: bool) -> Result<Report, CliError> {
    let mut checks: Vec<CheckResult> =
        CHECKS.iter().map(|&name| CheckResult { name, failures: 0, first_failure: None }).collect();
    let mut counterexample: Option<(usize, Instance<Rational>)> = None;
    let mut zero_matrix_instances = 0;
    for (idx, inst) in instances.iter().enumerate() {
        let (n, m) = check_pair(&inst.f, &inst.g)?;
        let mut bn = bezout_newton_preserving(&inst.f, &inst.g)?;
        if inst.f == inst.g && bn.is_zero() {
            zero_matrix_instances += 1;
        }
        if corrupt {
            bn[(0, 0)] = bn[(0, 0)].clone() + q(1);
        }
        let cx = Context { inst, n, m, bn };
        for (check, run) in checks.iter_mut().zip(RUNNERS) {
            if let Err(why) = run(&cx) {
                check.failures += 1;
                check.first_failure.get_or_insert((idx, why));
                if counterexample.as_ref().is_none_or(|(i, _)| idx < *i) {
                    counterexample = Some((idx, inst.clone()));
                }
            }
        }
    }
    Ok(Report {
        instances: instances.len(),
        checks,
        counterexample: counterexample.map(|(_, inst)| inst),
        zero_matrix_instances,
    })
}

pub fn load_instances(source: &Source) -> Result<Vec<Instance<Rational>>, CliError> {
    match *source {
        Source::File(path) => Ok(vec![InstanceFile::read(path)?.to_exact_instance()?]),
        Source::Random { n, m, seed, count } => {
            if m > n {
                return Err(CliError::Precondition(format!("m = {m} exceeds n = {n}")));
            }
            (seed..seed.saturating_add(count)).map(|s| Ok(random_instance(n, m, s)?)).collect()
        }
    }
}

/// Prints one line per check to `out`. On failure the first counterexample
/// goes to `counterexample_path`.
pub fn cmd_verify(
    source: &Source,
    counterexample_path: &Path,
    corrupt: bool,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let instances = load_instances(source)?;
    if instances.is_empty() {
        return Err(CliError::Usage("no instances to verify".into()));
    }
    let report = run_checks(&instances, corrupt)?;
    let stdout_err = |source| CliError::Write { path: "<stdout>".into(), source };
    for line in report.lines() {
        writeln!(out, "{line}").map_err(stdout_err)?;
    }
    if let Some(inst) = &report.counterexample {
        let text = InstanceFile::from_instance(inst, FieldKind::Rational).to_json();
        crate::io::emit(Some(counterexample_path), &text)?;
        writeln!(out, "counterexample written to {}", counterexample_path.display()).map_err(stdout_err)?;
    }
    match report.failed() {
        0 => Ok(()),
        failed => Err(CliError::VerificationFailed { failed }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_batch_passes() {
        let insts = load_instances(&Source::Random { n: 5, m: 3, seed: 9, count: 6 }).unwrap();
        let report = run_checks(&insts, false).unwrap();
        assert_eq!(report.failed(), 0, "{:?}", report.lines());
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn corrupt_hook_fails() {
        let insts = load_instances(&Source::Random { n: 4, m: 4, seed: 1, count: 3 }).unwrap();
        let report = run_checks(&insts, true).unwrap();
        assert!(report.failed() > 0);
        assert_eq!(report.counterexample.as_ref(), Some(&insts[0]));
        assert!(report.lines().iter().any(|l| l.starts_with("FAIL oracle-equivalence")));
    }

    #[test]
    fn g_equal_f_gets_note() {
        let inst = random_instance::<Rational>(4, 4, 3).unwrap();
        let same = Instance { f: inst.f.clone(), g: inst.f.clone() };
        let report = run_checks(&[same], false).unwrap();
        assert_eq!(report.failed(), 0, "{:?}", report.lines());
        assert_eq!(report.zero_matrix_instances, 1);
        assert!(report.lines().last().unwrap().starts_with("note:"));
    }

    #[test]
    fn one_line_per_check() {
        let insts = load_instances(&Source::Random { n: 2, m: 1, seed: 0, count: 1 }).unwrap();
        let lines = run_checks(&insts, false).unwrap().lines();
        assert_eq!(lines.len(), CHECKS.len());
        for (line, name) in lines.iter().zip(CHECKS) {
            assert!(line.starts_with(&format!("PASS {name} ")), "{line}");
        }
    }
}
