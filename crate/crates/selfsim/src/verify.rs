//! Verification suites over a compiled representation, producing structured
//! reports for CI consumption. The CLI's `verify` command and the acceptance
//! tests both drive these.

use rand::Rng;
use rand::SeedableRng;
use serde::Serialize;

use crate::automaton::{compare_to_reference, g22_x1_reference};
use crate::engine::{RepContext, Triviality, DEFAULT_KERNEL_WORD_LENGTH, DEFAULT_MAX_STATES};
use crate::error::{Error, Result};
use crate::pair::check_skew_condition;
use crate::poly::ExpVec;
use crate::wreath::WreathElement;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Relations,
    Skew,
    ClosedForms,
    Kernel,
    Matrix,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        vec![
            Suite::Relations,
            Suite::Skew,
            Suite::ClosedForms,
            Suite::Kernel,
            Suite::Matrix,
        ]
    }

    pub fn parse(name: &str) -> Result<Suite> {
        match name {
            "relations" => Ok(Suite::Relations),
            "skew" => Ok(Suite::Skew),
            "closed_forms" => Ok(Suite::ClosedForms),
            "kernel" => Ok(Suite::Kernel),
            "matrix" => Ok(Suite::Matrix),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite {other:?}; expected relations, skew, closed_forms, kernel or matrix"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Skew => "skew",
            Suite::ClosedForms => "closed_forms",
            Suite::Kernel => "kernel",
            Suite::Matrix => "matrix",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            details: details.into(),
        }
    }

    fn fail(name: impl Into<String>, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            details: details.into(),
        }
    }

    fn of(name: impl Into<String>, passed: bool, details: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            details: details.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    fn from_checks(suite: Suite, checks: Vec<CheckResult>) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

/// Knobs for the suites that search.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub skew_trials: usize,
    pub kernel_word_length: usize,
    pub max_states: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            skew_trials: 1000,
            kernel_word_length: DEFAULT_KERNEL_WORD_LENGTH,
            max_states: DEFAULT_MAX_STATES,
        }
    }
}

pub fn run_suites(
    rep: &RepContext,
    suites: &[Suite],
    seed: u64,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut reports = Vec::new();
    for suite in suites {
        let report = match suite {
            Suite::Relations => relations_suite(rep, seed)?,
            Suite::Skew => skew_suite(rep, opts.skew_trials, seed)?,
            Suite::ClosedForms => closed_forms_suite(rep)?,
            Suite::Kernel => kernel_suite(rep, opts.kernel_word_length, opts.max_states)?,
            Suite::Matrix => matrix_suite(rep, opts.max_states)?,
        };
        reports.push(report);
    }
    Ok(VerifyReport {
        passed: reports.iter().all(|r| r.passed),
        seed,
        suites: reports,
    })
}

/// Defining relations hold as tree actions and the generators act
/// nontrivially: a^p, [a, a^{x^v}] for random v, [x_i, x_j] all act
/// trivially; a and every x_i do not.
pub fn relations_suite(rep: &RepContext, seed: u64) -> Result<SuiteReport> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ctx = rep.ctx();
    let max_states = DEFAULT_MAX_STATES;
    let mut checks = Vec::new();

    let a = rep.gen_a();
    let a_p = a.pow(ctx.p() as i64);
    checks.push(CheckResult::of(
        "a^p acts trivially",
        rep.is_trivial_action(&a_p, max_states)? == Triviality::Trivial,
        format!("element {a_p}"),
    ));

    for t in 0..10 {
        let v = ExpVec::new((0..ctx.d()).map(|_| rng.gen_range(-4i64..=4)).collect());
        let conj = WreathElement::from_a(crate::wreath::conjugate_by_x(a.a_part(), &v));
        let comm = a.commutator(&conj);
        checks.push(CheckResult::of(
            format!("[a, a^{{x^v}}] acts trivially (sample {t})"),
            rep.is_trivial_action(&comm, max_states)? == Triviality::Trivial,
            format!("v = {v:?}"),
        ));
    }

    for i in 0..ctx.d() {
        for j in i + 1..ctx.d() {
            let comm = rep.gen_x(i).commutator(&rep.gen_x(j));
            checks.push(CheckResult::of(
                format!("[x{}, x{}] acts trivially", i + 1, j + 1),
                rep.is_trivial_action(&comm, max_states)? == Triviality::Trivial,
                String::new(),
            ));
        }
    }

    checks.push(CheckResult::of(
        "a acts nontrivially",
        rep.is_trivial_action(&a, max_states)? == Triviality::NonTrivial,
        String::new(),
    ));
    for i in 0..ctx.d() {
        checks.push(CheckResult::of(
            format!("x{} acts nontrivially", i + 1),
            rep.is_trivial_action(&rep.gen_x(i), max_states)? == Triviality::NonTrivial,
            String::new(),
        ));
    }
    Ok(SuiteReport::from_checks(Suite::Relations, checks))
}

/// Exact skew-condition sampling on the pair underlying the representation.
pub fn skew_suite(rep: &RepContext, trials: usize, seed: u64) -> Result<SuiteReport> {
    let report = check_skew_condition(rep.pair(), trials, seed)?;
    let check = if report.passed() {
        CheckResult::pass(
            "skew condition (w.nu)^mu = w^alpha nu^mu",
            format!("{trials} samples"),
        )
    } else {
        CheckResult::fail(
            "skew condition (w.nu)^mu = w^alpha nu^mu",
            serde_json::to_string(&report.failures).unwrap_or_default(),
        )
    };
    Ok(SuiteReport::from_checks(Suite::Skew, vec![check]))
}

/// Generator decompositions against the family closed forms.
pub fn closed_forms_suite(rep: &RepContext) -> Result<SuiteReport> {
    let report = rep.verify_closed_form()?;
    let checks = report
        .checks
        .into_iter()
        .map(|c| CheckResult::of(format!("closed form of {}", c.generator), c.passed, c.details))
        .collect();
    Ok(SuiteReport::from_checks(Suite::ClosedForms, checks))
}

/// Kernel witnesses among short reduced words.
pub fn kernel_suite(rep: &RepContext, max_len: usize, max_states: usize) -> Result<SuiteReport> {
    let report = rep.kernel_scan(max_len, max_states)?;
    let mut checks = Vec::new();
    checks.push(CheckResult::of(
        format!("no kernel witnesses among words of length <= {max_len}"),
        report.witnesses.is_empty(),
        serde_json::to_string(&report.witnesses).unwrap_or_default(),
    ));
    checks.push(CheckResult::of(
        "no unknown verdicts",
        report.unknown.is_empty(),
        format!("{} unknown", report.unknown.len()),
    ));
    Ok(SuiteReport::from_checks(Suite::Kernel, checks))
}

/// Incidence-matrix checks on the closure of x1: row sums equal the degree,
/// plus the comparison against the transcribed reference for the degree-4
/// representation of `G_{2,2}` (any diff must match the recorded errata).
pub fn matrix_suite(rep: &RepContext, max_states: usize) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let x1 = rep.gen_x(0);
    match rep.state_closure(&x1, max_states)? {
        None => {
            checks.push(CheckResult::fail(
                "x1 closure is finite within bound",
                format!("more than {max_states} states"),
            ));
        }
        Some(aut) => {
            let rows_ok = aut
                .incidence_matrix()
                .iter()
                .all(|row| row.iter().sum::<usize>() == rep.degree());
            checks.push(CheckResult::of(
                "incidence row sums equal the degree",
                rows_ok,
                format!("{} states", aut.state_count()),
            ));
            let is_g22 = rep.ctx().p() == 2
                && rep.ctx().d() == 2
                && rep.pair() == &crate::families::theorem4_pair(2, 2)?;
            if is_g22 {
                let reference = g22_x1_reference();
                let diff = compare_to_reference(&aut, &reference);
                checks.push(CheckResult::of(
                    "incidence matrix matches the transcribed reference",
                    diff.matches_errata(&reference),
                    if diff.is_empty() {
                        "exact match".to_string()
                    } else {
                        format!(
                            "diff {}; recorded errata {}",
                            serde_json::to_string(&diff.cell_diffs).unwrap_or_default(),
                            serde_json::to_string(&reference.errata).unwrap_or_default()
                        )
                    },
                ));
            }
        }
    }
    Ok(SuiteReport::from_checks(Suite::Matrix, checks))
}
