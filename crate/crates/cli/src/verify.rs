//! The `verify` sweep: every computation path and closed-form identity,
//! genus by genus.

use std::io::Write;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use subbundle_core::{
    a_binomial, a_eigen, b_binomial, b_eigen, build_trace, count_at_genus, count_line_subbundles,
    iterate, trace_total, Parity, SupportedCase, TransferSystem,
};

use crate::args::Format;
use crate::{CliError, Result};

const LINE_RANKS: std::ops::RangeInclusive<u32> = 2..=10;

/// The rank-2-of-4 system checked by `verify`. Builds with the
/// `inject-fault` feature perturb one off-diagonal entry.
pub fn verification_system() -> TransferSystem {
    #[cfg(feature = "inject-fault")]
    {
        use subbundle_core::SquareMatrix;
        let matrix = SquareMatrix::from_u64_rows(&[&[6, 2], &[3, 6]]).expect("2x2");
        TransferSystem::new(matrix, TransferSystem::rank_two_of_four().base().clone())
            .expect("matching dimensions")
    }
    #[cfg(not(feature = "inject-fault"))]
    {
        TransferSystem::rank_two_of_four()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    /// Smallest genus at which the check failed.
    pub first_failure: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_g: u32,
    pub checks: Vec<CheckTally>,
    pub ok: bool,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &CheckTally> {
        self.checks.iter().filter(|c| c.failed > 0)
    }

    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn pow2(e: u32) -> BigUint {
    BigUint::from(1u32) << e as usize
}

/// Outcomes at one genus, in a fixed order; `None` marks a check that does
/// not apply at this genus.
fn checks_at(g: u32, system: &TransferSystem) -> Vec<(&'static str, Option<bool>)> {
    let rec = iterate(system, g).expect("g >= 1");
    let fast = count_at_genus(system, g).expect("g >= 1");
    let (a, b) = (rec.entries()[0].as_biguint(), rec.entries()[1].as_biguint());
    let (a_bin, b_bin) = (
        a_binomial(g).expect("g >= 1"),
        b_binomial(g).expect("g >= 1"),
    );
    let (a_eig, b_eig) = (a_eigen(g).expect("g >= 1"), b_eigen(g).expect("g >= 1"));
    let half = pow2(2 * g - 1);

    let trace_ok = (g >= 2).then(|| {
        [Parity::Even, Parity::Odd].iter().all(|&p| {
            let tree = build_trace(SupportedCase::RankTwoOfFour, p, g).expect("g >= 2");
            tree.is_consistent()
                && tree.contributing().count() == 2
                && tree.excluded().count() == 1
                && trace_total(&tree) == rec.entries()[p.index()]
        })
    });

    let mut line_rec = true;
    let mut line_fast = true;
    for r in LINE_RANKS {
        let line = TransferSystem::line_subbundle(r);
        let closed = count_line_subbundles(r, g).expect("r >= 2, g >= 1");
        line_rec &= iterate(&line, g).expect("g >= 1").entries()[0] == closed;
        line_fast &= count_at_genus(&line, g).expect("g >= 1").entries()[0] == closed;
    }

    vec![
        ("rank2of4: recurrence = matrix power", Some(rec == fast)),
        (
            "rank2of4: recurrence = binomial sum",
            Some(a == a_bin.as_biguint() && b == b_bin.as_biguint()),
        ),
        (
            "rank2of4: recurrence = eigen form",
            Some(a == a_eig.as_biguint() && b == b_eig.as_biguint()),
        ),
        ("a_g + b_g = 8^g", Some(a + b == pow2(3 * g))),
        ("a_g - b_g = 4^g", Some(a >= b && a - b == pow2(2 * g))),
        (
            "a_g = 2^(2g-1) (2^g + 1)",
            Some(*a == &half * (pow2(g) + 1u32)),
        ),
        (
            "b_g = 2^(2g-1) (2^g - 1)",
            Some(*b == &half * (pow2(g) - 1u32)),
        ),
        ("a_g > b_g > 0", Some(a > b && *b > BigUint::from(0u32))),
        (
            "base case a_1 = 6, b_1 = 2",
            (g == 1).then(|| *a == 6u32.into() && *b == 2u32.into()),
        ),
        ("rank2of4: trace total = recurrence", trace_ok),
        ("line r=2..10: recurrence = r^g", Some(line_rec)),
        ("line r=2..10: matrix power = r^g", Some(line_fast)),
    ]
}

/// Runs every check for `g = 1..=max_g`. Genera are evaluated in parallel;
/// the tallies are assembled in genus order so the report is deterministic.
pub fn run_verification(max_g: u32, system: &TransferSystem) -> VerificationReport {
    let per_genus: Vec<_> = (1..=max_g)
        .into_par_iter()
        .map(|g| (g, checks_at(g, system)))
        .collect();

    let mut checks: Vec<CheckTally> = Vec::new();
    for (g, outcomes) in per_genus {
        for (i, (name, outcome)) in outcomes.into_iter().enumerate() {
            if checks.len() <= i {
                checks.push(CheckTally {
                    name: name.to_owned(),
                    passed: 0,
                    failed: 0,
                    first_failure: None,
                });
            }
            let tally = &mut checks[i];
            match outcome {
                Some(true) => tally.passed += 1,
                Some(false) => {
                    tally.failed += 1;
                    tally.first_failure.get_or_insert(g);
                }
                None => {}
            }
        }
    }
    let ok = checks.iter().all(|c| c.failed == 0);
    VerificationReport { max_g, checks, ok }
}

pub(crate) fn write_report(
    report: &VerificationReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            return Err(CliError::Usage(
                "verify supports --format text, json or jsonl".into(),
            ))
        }
        Format::Text => {
            for c in &report.checks {
                let status = if c.failed == 0 { "PASS" } else { "FAIL" };
                write!(out, "{status} {:<40} passed {:>4}", c.name, c.passed)?;
                if let Some(g) = c.first_failure {
                    write!(out, ", failed {} (first at g={g})", c.failed)?;
                }
                writeln!(out)?;
            }
            let verdict = if report.ok {
                "all checks passed"
            } else {
                "VERIFICATION FAILED"
            };
            writeln!(out, "{verdict} for g = 1..={}", report.max_g)?;
        }
    }
    Ok(())
}
