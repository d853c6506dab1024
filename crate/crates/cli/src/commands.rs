use std::io::Write;

use serde::{Deserialize, Serialize};
use subbundle_core::{
    a_eigen, b_eigen, build_trace_for, count_at_genus, count_line_subbundles, count_rank2_of_4,
    iterate, solve_dprime, step, CountValue, Parity, SolvedProblem, SubbundleProblem,
    SupportedCase, TraceTree, TransferSystem,
};

use crate::args::{CaseArg, Format, InstanceArgs, MethodChoice};
use crate::{CliError, Result};

/// Result of `count`, echoing the instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub r: i64,
    pub d: i64,
    pub r_prime: i64,
    pub d_prime: i64,
    pub g: i64,
    pub parity: Parity,
    pub count: CountValue,
    pub method: MethodChoice,
    pub agreement: bool,
}

const SINGLE_METHODS: [MethodChoice; 4] = [
    MethodChoice::Recurrence,
    MethodChoice::MatrixPower,
    MethodChoice::BinomialSum,
    MethodChoice::EigenForm,
];

pub(crate) fn positive_genus(g: i64, flag: &str) -> Result<u32> {
    match u32::try_from(g) {
        Ok(g) if g >= 1 => Ok(g),
        _ => Err(CliError::Usage(format!(
            "{flag} must be a positive integer, got {g}"
        ))),
    }
}

fn solve(instance: &InstanceArgs) -> Result<(SolvedProblem, SupportedCase)> {
    let problem = SubbundleProblem::new(instance.r, instance.d, instance.r_prime, instance.g)?;
    let case = problem.supported_case()?;
    let solved = solve_dprime(&problem)?;
    Ok((solved, case))
}

fn count_by(
    method: MethodChoice,
    case: SupportedCase,
    g: u32,
    parity: Parity,
) -> Result<CountValue> {
    let system = TransferSystem::for_case(case);
    let slot = match case {
        SupportedCase::LineSubbundle(_) => 0,
        SupportedCase::RankTwoOfFour => parity.index(),
    };
    let value = match (method, case) {
        (MethodChoice::Recurrence, _) => iterate(&system, g)?.entries()[slot].clone(),
        (MethodChoice::MatrixPower, _) => count_at_genus(&system, g)?.entries()[slot].clone(),
        (MethodChoice::BinomialSum, SupportedCase::LineSubbundle(r)) => {
            count_line_subbundles(r, g)?
        }
        (MethodChoice::BinomialSum, SupportedCase::RankTwoOfFour) => count_rank2_of_4(g, parity)?,
        // A 1x1 system has its single entry as eigenvalue: r · r^(g−1).
        (MethodChoice::EigenForm, SupportedCase::LineSubbundle(_)) => {
            let eigenvalue = system.matrix().get(0, 0);
            let base = system.base().entries()[0].as_biguint();
            CountValue::from(base * eigenvalue.pow(g - 1))
        }
        (MethodChoice::EigenForm, SupportedCase::RankTwoOfFour) => match parity {
            Parity::Even => a_eigen(g)?,
            Parity::Odd => b_eigen(g)?,
        },
        (MethodChoice::All, _) => unreachable!("expanded by the caller"),
    };
    Ok(value)
}

/// Solves for `d'` and counts with the chosen method, or with every method
/// when `method` is [`MethodChoice::All`].
pub fn cmd_count(instance: &InstanceArgs, method: MethodChoice) -> Result<OutputRecord> {
    let (solved, case) = solve(instance)?;
    let g = solved.problem().genus()?;
    let parity = solved.parity();

    let methods: &[MethodChoice] = match method {
        MethodChoice::All => &SINGLE_METHODS,
        ref m => std::slice::from_ref(m),
    };
    let values = methods
        .iter()
        .map(|&m| count_by(m, case, g, parity))
        .collect::<Result<Vec<_>>>()?;
    let agreement = values.windows(2).all(|w| w[0] == w[1]);

    Ok(OutputRecord {
        r: instance.r,
        d: instance.d,
        r_prime: instance.r_prime,
        d_prime: solved.d_prime(),
        g: instance.g,
        parity,
        count: values.into_iter().next().expect("at least one method"),
        method,
        agreement,
    })
}

pub(crate) fn write_count(
    record: &OutputRecord,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    match format {
        Format::Text => {
            writeln!(
                out,
                "instance: r={} d={} r'={} g={}",
                record.r, record.d, record.r_prime, record.g
            )?;
            writeln!(out, "d': {} ({})", record.d_prime, record.parity)?;
            writeln!(out, "count: {}", record.count)?;
            writeln!(out, "method: {}", record.method.as_str())?;
            writeln!(out, "agreement: {}", record.agreement)?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, record)?;
            writeln!(out)?;
        }
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, record)?;
            writeln!(out)?;
        }
        Format::Csv => {
            writeln!(out, "r,d,r_prime,d_prime,g,parity,count,method,agreement")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{}",
                record.r,
                record.d,
                record.r_prime,
                record.d_prime,
                record.g,
                record.parity,
                record.count,
                record.method.as_str(),
                record.agreement
            )?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct RankTwoRow<'a> {
    g: u32,
    a_g: &'a CountValue,
    b_g: &'a CountValue,
}

#[derive(Serialize)]
struct LineRow<'a> {
    g: u32,
    r: u32,
    count: &'a CountValue,
}

/// Streams one row per genus `1..=max_g`, CSV with a header or JSON lines.
pub fn cmd_table(
    case: CaseArg,
    r: Option<i64>,
    max_g: i64,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    let max_g = positive_genus(max_g, "--max-g")?;
    let case = match (case, r) {
        (CaseArg::Line, Some(r)) => SupportedCase::from_ranks(r, 1)?,
        (CaseArg::Line, None) => return Err(CliError::Usage("--case line requires --r".into())),
        (CaseArg::Rank2Of4, None | Some(4)) => SupportedCase::RankTwoOfFour,
        (CaseArg::Rank2Of4, Some(r)) => {
            return Err(CliError::Usage(format!(
                "--case rank2of4 has r = 4, got --r {r}"
            )))
        }
    };
    if !matches!(format, Format::Csv | Format::Jsonl) {
        return Err(CliError::Usage(
            "table supports --format csv or jsonl".into(),
        ));
    }

    let system = TransferSystem::for_case(case);
    if format == Format::Csv {
        match case {
            SupportedCase::LineSubbundle(_) => writeln!(out, "g,count")?,
            SupportedCase::RankTwoOfFour => writeln!(out, "g,a_g,b_g")?,
        }
    }
    let mut state = system.base().clone();
    for g in 1..=max_g {
        if g > 1 {
            state = step(&state, &system)?;
        }
        let e = state.entries();
        match (case, format) {
            (SupportedCase::LineSubbundle(_), Format::Csv) => writeln!(out, "{g},{}", e[0])?,
            (SupportedCase::RankTwoOfFour, Format::Csv) => writeln!(out, "{g},{},{}", e[0], e[1])?,
            (SupportedCase::LineSubbundle(r), _) => {
                serde_json::to_writer(&mut *out, &LineRow { g, r, count: &e[0] })?;
                writeln!(out)?;
            }
            (SupportedCase::RankTwoOfFour, _) => {
                serde_json::to_writer(
                    &mut *out,
                    &RankTwoRow {
                        g,
                        a_g: &e[0],
                        b_g: &e[1],
                    },
                )?;
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

/// Solves the instance and builds its trace with concrete degrees.
pub fn cmd_trace(instance: &InstanceArgs) -> Result<TraceTree> {
    let (solved, _) = solve(instance)?;
    Ok(build_trace_for(&solved)?)
}

pub(crate) fn write_trace(tree: &TraceTree, format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, tree)?;
            writeln!(out)?;
        }
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, tree)?;
            writeln!(out)?;
        }
        Format::Text => {
            writeln!(
                out,
                "genus {} ({} d'), total {}",
                tree.genus, tree.parity, tree.total
            )?;
            for rec in &tree.records {
                let (e, c) = rec.split;
                if rec.excluded {
                    writeln!(out, "  split ({e}, {c}): excluded")?;
                    writeln!(out, "    {}", rec.reason)?;
                } else {
                    writeln!(
                        out,
                        "  split ({e}, {c}): {} x {} = {}",
                        rec.elliptic_count, rec.recursive_count, rec.product
                    )?;
                }
            }
        }
        Format::Csv => {
            return Err(CliError::Usage(
                "trace supports --format text, json or jsonl".into(),
            ))
        }
    }
    Ok(())
}
