//! Numerical instances, the finiteness condition and the dimension counts
//! attached to elementary modifications.
//!
//! A problem is described entirely by four integers: the rank `r` and degree
//! `d` of a generic bundle on a curve of genus `g`, and the rank `r'` of the
//! subbundles being counted. The number of maximal subbundles is finite
//! exactly when
//!
//! ```text
//! r'·d − r·d' = r'·(r − r')·(g − 1)
//! ```
//!
//! which pins down the subbundle degree `d'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parity of the subbundle degree `d'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Position in a count vector ordered (even, odd).
    pub fn index(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A counting instance `(r, d, r', g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubbundleProblem {
    r: i64,
    d: i64,
    r_prime: i64,
    g: i64,
}

impl SubbundleProblem {
    /// Validates `r ≥ 2`, `1 ≤ r' < r` and `g ≥ 1`. Any degree is accepted.
    pub fn new(r: i64, d: i64, r_prime: i64, g: i64) -> Result<Self> {
        validate_shape(r, r_prime, g)?;
        Ok(Self { r, d, r_prime, g })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn r_prime(&self) -> i64 {
        self.r_prime
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    /// Genus as an unsigned exponent, for the counting routines.
    pub fn genus(&self) -> Result<u32> {
        u32::try_from(self.g)
            .map_err(|_| Error::InvalidInstance(format!("genus {} is too large", self.g)))
    }

    pub fn supported_case(&self) -> Result<SupportedCase> {
        SupportedCase::from_ranks(self.r, self.r_prime)
    }
}

/// A problem together with the unique `d'` satisfying the finiteness condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SolvedProblem {
    problem: SubbundleProblem,
    d_prime: i64,
    parity: Parity,
}

impl SolvedProblem {
    pub fn problem(&self) -> &SubbundleProblem {
        &self.problem
    }

    pub fn d_prime(&self) -> i64 {
        self.d_prime
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }
}

/// The rank pairs for which counts are available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportedCase {
    /// Line subbundles (`r' = 1`) of a rank-`r` bundle.
    LineSubbundle(u32),
    /// Rank-2 subbundles of a rank-4 bundle.
    RankTwoOfFour,
}

impl SupportedCase {
    pub fn from_ranks(r: i64, r_prime: i64) -> Result<Self> {
        match (r, r_prime) {
            (r, 1) if r >= 2 => u32::try_from(r)
                .map(SupportedCase::LineSubbundle)
                .map_err(|_| Error::InvalidInstance(format!("rank {r} is too large"))),
            (4, 2) => Ok(SupportedCase::RankTwoOfFour),
            _ => Err(Error::UnsupportedRankPair { r, r_prime }),
        }
    }

    pub fn ranks(&self) -> (i64, i64) {
        match *self {
            SupportedCase::LineSubbundle(r) => (i64::from(r), 1),
            SupportedCase::RankTwoOfFour => (4, 2),
        }
    }
}

fn validate_shape(r: i64, r_prime: i64, g: i64) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidInstance(format!(
            "rank r must be at least 2, got {r}"
        )));
    }
    if r_prime < 1 || r_prime >= r {
        return Err(Error::InvalidInstance(format!(
            "subbundle rank r' must satisfy 1 <= r' < r = {r}, got {r_prime}"
        )));
    }
    if g < 1 {
        return Err(Error::InvalidInstance(format!(
            "genus must be at least 1, got {g}"
        )));
    }
    Ok(())
}

/// Whether `r'·d − r·d' = r'·(r − r')·(g − 1)` holds.
pub fn check_finiteness(r: i64, d: i64, r_prime: i64, d_prime: i64, g: i64) -> Result<bool> {
    validate_shape(r, r_prime, g)?;
    let (r, d, rp, dp, g) = (
        i128::from(r),
        i128::from(d),
        i128::from(r_prime),
        i128::from(d_prime),
        i128::from(g),
    );
    Ok(rp * d - r * dp == rp * (r - rp) * (g - 1))
}

/// Solves the finiteness condition for `d'`.
///
/// Instances where `r` does not divide `r'·d − r'·(r − r')·(g − 1)` are
/// rejected with [`Error::NoValidDPrime`] rather than reported as zero.
pub fn solve_dprime(problem: &SubbundleProblem) -> Result<SolvedProblem> {
    let (r, d, rp, g) = (
        i128::from(problem.r),
        i128::from(problem.d),
        i128::from(problem.r_prime),
        i128::from(problem.g),
    );
    let numerator = rp * d - rp * (r - rp) * (g - 1);
    if numerator.rem_euclid(r) != 0 {
        return Err(Error::NoValidDPrime {
            r: problem.r,
            d: problem.d,
            r_prime: problem.r_prime,
            g: problem.g,
        });
    }
    let d_prime = i64::try_from(numerator / r)
        .map_err(|_| Error::InvalidInstance("d' does not fit in 64 bits".into()))?;
    Ok(SolvedProblem {
        problem: *problem,
        d_prime,
        parity: Parity::of(d_prime),
    })
}

/// Dimension `r²(g − 1) + 1 + r·k` of the family of pairs (bundle, map from
/// its fibre at a point to a `k`-dimensional space).
pub fn family_dimension(r: u32, g: u32, k: u32) -> Result<u128> {
    if r < 1 || g < 1 {
        return Err(Error::InvalidArgument(format!(
            "family_dimension needs r >= 1 and g >= 1, got r={r}, g={g}"
        )));
    }
    let (r, g, k) = (u128::from(r), u128::from(g), u128::from(k));
    Ok(r * r * (g - 1) + 1 + r * k)
}

/// Dimension `r²(g − 1) + 1` of the moduli of rank-`r` bundles.
pub fn moduli_dimension(r: u32, g: u32) -> Result<u128> {
    if r < 1 || g < 1 {
        return Err(Error::InvalidArgument(format!(
            "moduli_dimension needs r >= 1 and g >= 1, got r={r}, g={g}"
        )));
    }
    let (r, g) = (u128::from(r), u128::from(g));
    Ok(r * r * (g - 1) + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finiteness_examples() {
        assert!(check_finiteness(2, 1, 1, 0, 2).unwrap());
        assert!(check_finiteness(4, 8, 2, 2, 3).unwrap());
        assert!(!check_finiteness(4, 8, 2, 1, 3).unwrap());
    }

    #[test]
    fn finiteness_rejects_malformed_shapes() {
        assert!(matches!(
            check_finiteness(1, 0, 1, 0, 1),
            Err(Error::InvalidInstance(_))
        ));
        assert!(matches!(
            check_finiteness(3, 0, 3, 0, 1),
            Err(Error::InvalidInstance(_))
        ));
        assert!(matches!(
            check_finiteness(3, 0, 0, 0, 1),
            Err(Error::InvalidInstance(_))
        ));
        assert!(matches!(
            check_finiteness(3, 0, 1, 0, 0),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn solve_examples() {
        let s = solve_dprime(&SubbundleProblem::new(2, 1, 1, 2).unwrap()).unwrap();
        assert_eq!((s.d_prime(), s.parity()), (0, Parity::Even));

        let s = solve_dprime(&SubbundleProblem::new(4, 8, 2, 3).unwrap()).unwrap();
        assert_eq!((s.d_prime(), s.parity()), (2, Parity::Even));

        let err = solve_dprime(&SubbundleProblem::new(3, 2, 1, 1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::NoValidDPrime { .. }));
    }

    #[test]
    fn negative_degrees() {
        // 2·(−10) − 4d' = 8  ⇒  d' = −7
        let s = solve_dprime(&SubbundleProblem::new(4, -10, 2, 3).unwrap()).unwrap();
        assert_eq!(s.d_prime(), -7);
        assert_eq!(s.parity(), Parity::Odd);
        assert!(check_finiteness(4, -10, 2, -7, 3).unwrap());
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(matches!(
            SubbundleProblem::new(2, 0, 1, 0),
            Err(Error::InvalidInstance(_))
        ));
    }

    #[test]
    fn supported_cases() {
        assert_eq!(
            SupportedCase::from_ranks(7, 1).unwrap(),
            SupportedCase::LineSubbundle(7)
        );
        assert_eq!(
            SupportedCase::from_ranks(4, 2).unwrap(),
            SupportedCase::RankTwoOfFour
        );
        assert!(matches!(
            SupportedCase::from_ranks(5, 2),
            Err(Error::UnsupportedRankPair { r: 5, r_prime: 2 })
        ));
        assert!(matches!(
            SupportedCase::from_ranks(4, 3),
            Err(Error::UnsupportedRankPair { .. })
        ));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(family_dimension(1, 1, 0).unwrap(), 1);
        assert_eq!(family_dimension(4, 1, 2).unwrap(), 9);
        assert_eq!(family_dimension(2, 3, 1).unwrap(), 11);
        assert_eq!(moduli_dimension(1, 1).unwrap(), 1);
        assert_eq!(moduli_dimension(4, 2).unwrap(), 17);
        assert_eq!(moduli_dimension(3, 5).unwrap(), 37);
        assert!(family_dimension(0, 1, 0).is_err());
        assert!(moduli_dimension(2, 0).is_err());
    }

    #[test]
    fn parity_of_negative() {
        assert_eq!(Parity::of(-3), Parity::Odd);
        assert_eq!(Parity::of(-4), Parity::Even);
        assert_eq!(Parity::Odd.flipped(), Parity::Even);
    }
}
