//! Audit trail for one genus increment.
//!
//! A genus-`g` curve degenerates to a genus-`(g − 1)` curve with an elliptic
//! tail glued at a point. A maximal subbundle on the nodal curve restricts to
//! subbundles on both sides whose degrees add up to `d'`; each admissible
//! split contributes (count on the elliptic side) × (count on the genus side
//! compatible with a fixed fibre direction). A [`TraceTree`] lists those
//! contributions so that the total can be checked against the recurrence.

use serde::{Deserialize, Serialize};

use crate::count::CountValue;
use crate::error::{Error, Result};
use crate::invariants::{Parity, SolvedProblem, SupportedCase};
use crate::recurrence::{iterate, TransferSystem};

/// Why the `(1, d')` split contributes nothing.
pub const GENERIC_GLUING_EXCLUSION: &str =
    "excluded: the elliptic side carries finitely many rank-2 subbundles of degree 1 and the \
     genus side finitely many of degree d'; under a generic gluing no pair of them agrees at \
     the node";

/// Genus-1 count for a supported case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusOneBase {
    pub case: SupportedCase,
    /// Only meaningful for [`SupportedCase::RankTwoOfFour`].
    pub parity: Option<Parity>,
    pub count: CountValue,
}

impl GenusOneBase {
    pub fn new(case: SupportedCase, parity: Parity) -> Result<Self> {
        let count = genus_one_base(case, parity)?;
        let parity = match case {
            SupportedCase::LineSubbundle(_) => None,
            SupportedCase::RankTwoOfFour => Some(parity),
        };
        Ok(Self {
            case,
            parity,
            count,
        })
    }
}

/// On an elliptic curve a generic rank-`r` bundle of degree `r·d'` splits
/// into `r` distinct line bundles, giving `r` line subbundles. A generic
/// rank-4 bundle splits into four line bundles when `d'` is even (choose two:
/// 6) and into two indecomposable rank-2 bundles when `d'` is odd (2).
pub fn genus_one_base(case: SupportedCase, parity: Parity) -> Result<CountValue> {
    match (case, parity) {
        (SupportedCase::LineSubbundle(r), _) if r < 2 => Err(Error::UnsupportedRankPair {
            r: i64::from(r),
            r_prime: 1,
        }),
        (SupportedCase::LineSubbundle(r), _) => Ok(r.into()),
        (SupportedCase::RankTwoOfFour, Parity::Even) => Ok(6u32.into()),
        (SupportedCase::RankTwoOfFour, Parity::Odd) => Ok(2u32.into()),
    }
}

/// One degree split across the node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContributionRecord {
    /// `(elliptic-side degree, genus-side degree)`.
    pub split: (i64, i64),
    pub elliptic_count: CountValue,
    pub recursive_count: CountValue,
    pub product: CountValue,
    pub excluded: bool,
    pub reason: String,
}

impl ContributionRecord {
    fn contributing(split: (i64, i64), elliptic: CountValue, recursive: CountValue) -> Self {
        let product = &elliptic * &recursive;
        Self {
            split,
            elliptic_count: elliptic,
            recursive_count: recursive,
            product,
            excluded: false,
            reason: String::new(),
        }
    }

    fn excluded(
        split: (i64, i64),
        elliptic: CountValue,
        recursive: CountValue,
        reason: &str,
    ) -> Self {
        Self {
            split,
            elliptic_count: elliptic,
            recursive_count: recursive,
            product: CountValue::zero(),
            excluded: true,
            reason: reason.to_owned(),
        }
    }

    pub fn is_well_formed(&self) -> bool {
        if self.excluded {
            self.product.is_zero() && !self.reason.is_empty()
        } else {
            self.product == &self.elliptic_count * &self.recursive_count && self.reason.is_empty()
        }
    }
}

/// Contributions to the genus-`g` count from splitting off an elliptic tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceTree {
    pub genus: u32,
    pub parity: Parity,
    pub records: Vec<ContributionRecord>,
    pub total: CountValue,
}

impl TraceTree {
    pub fn contributing(&self) -> impl Iterator<Item = &ContributionRecord> {
        self.records.iter().filter(|r| !r.excluded)
    }

    pub fn excluded(&self) -> impl Iterator<Item = &ContributionRecord> {
        self.records.iter().filter(|r| r.excluded)
    }

    /// Record-level invariants and `total` equal to the sum of products.
    pub fn is_consistent(&self) -> bool {
        self.records.iter().all(ContributionRecord::is_well_formed)
            && self.total == trace_total(self)
    }
}

/// Trace with genus-side degrees given relative to `d'` (as if `d' = 0`).
pub fn build_trace(case: SupportedCase, parity: Parity, g: u32) -> Result<TraceTree> {
    build(case, parity, g, 0)
}

/// Trace with concrete degrees filled in from a solved instance.
pub fn build_trace_for(solved: &SolvedProblem) -> Result<TraceTree> {
    let problem = solved.problem();
    let case = problem.supported_case()?;
    build(case, solved.parity(), problem.genus()?, solved.d_prime())
}

fn build(case: SupportedCase, parity: Parity, g: u32, d_prime: i64) -> Result<TraceTree> {
    if g < 2 {
        return Err(Error::InvalidArgument(format!(
            "a trace splits off an elliptic tail and needs genus >= 2, got {g}"
        )));
    }
    let lower = iterate(&TransferSystem::for_case(case), g - 1)?;
    let records = match case {
        SupportedCase::LineSubbundle(_) => {
            // Only degree 0 on the elliptic side; r of its degree-0 line
            // subbundles pass through a fixed fibre direction.
            let elliptic = genus_one_base(case, parity)?;
            let recursive = lower.entries()[0].clone();
            vec![ContributionRecord::contributing(
                (0, d_prime),
                elliptic,
                recursive,
            )]
        }
        SupportedCase::RankTwoOfFour => {
            let same = lower.entries()[parity.index()].clone();
            let flipped = lower.entries()[parity.flipped().index()].clone();
            // (0, d'): degree-0 rank-2 subbundles of the degree-0 modification, a_1 = 6.
            let zero_split = ContributionRecord::contributing(
                (0, d_prime),
                genus_one_base(case, Parity::Even)?,
                same.clone(),
            );
            // (1, d'−1): b_1 = 2 on the elliptic side; the genus side counts
            // degree d'−1, whose parity is opposite to d'.
            let one_split = ContributionRecord::contributing(
                (1, d_prime - 1),
                genus_one_base(case, Parity::Odd)?,
                flipped,
            );
            let dead_split = ContributionRecord::excluded(
                (1, d_prime),
                genus_one_base(case, Parity::Odd)?,
                same,
                GENERIC_GLUING_EXCLUSION,
            );
            vec![zero_split, one_split, dead_split]
        }
    };
    let mut tree = TraceTree {
        genus: g,
        parity,
        records,
        total: CountValue::zero(),
    };
    tree.total = trace_total(&tree);
    Ok(tree)
}

/// Sum of the products of all non-excluded records.
pub fn trace_total(tree: &TraceTree) -> CountValue {
    tree.contributing().map(|r| &r.product).sum()
}
