//! Closed formulas for the supported counts.
//!
//! The binomial sums are the primary closed form for rank-2 subbundles of a
//! rank-4 bundle:
//!
//! ```text
//! a_g = Σ_{j even} C(g, j)·6^(g−j)·2^j        b_g = Σ_{j odd} C(g, j)·6^(g−j)·2^j
//! ```
//!
//! Diagonalizing `[[6, 2], [2, 6]]` (eigenvalues 8 and 4) gives the
//! eigenvalue forms `a_g = (8^g + 4^g)/2` and `b_g = (8^g − 4^g)/2`, kept here
//! as a second independent route.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::CountValue;
use crate::error::{Error, Result};
use crate::invariants::Parity;

/// `r^g`, the number of maximal line subbundles of a generic rank-`r` bundle.
pub fn count_line_subbundles(r: u32, g: u32) -> Result<CountValue> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!(
            "rank must be at least 2, got {r}"
        )));
    }
    check_genus(g)?;
    Ok(BigUint::from(r).pow(g).into())
}

/// `C(n, k)` by the multiplicative rule; every intermediate quotient is exact.
pub fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Sum of `C(g, j)·6^(g−j)·2^j` over `j ∈ [0, g]` with `j ≡ parity (mod 2)`.
fn parity_filtered_sum(g: u32, parity: Parity) -> BigUint {
    let six = BigUint::from(6u32);
    let start = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    (start..=g)
        .step_by(2)
        .map(|j| (binomial(g, j) * six.pow(g - j)) << j)
        .sum()
}

pub fn a_binomial(g: u32) -> Result<CountValue> {
    check_genus(g)?;
    Ok(parity_filtered_sum(g, Parity::Even).into())
}

pub fn b_binomial(g: u32) -> Result<CountValue> {
    check_genus(g)?;
    Ok(parity_filtered_sum(g, Parity::Odd).into())
}

fn eigen_parts(g: u32) -> (BigUint, BigUint) {
    // 8^g = 2^(3g), 4^g = 2^(2g)
    let one = BigUint::one();
    (&one << (3 * g as usize), &one << (2 * g as usize))
}

/// `(8^g + 4^g)/2`.
pub fn a_eigen(g: u32) -> Result<CountValue> {
    check_genus(g)?;
    let (big, small) = eigen_parts(g);
    Ok(((big + small) >> 1usize).into())
}

/// `(8^g − 4^g)/2`.
pub fn b_eigen(g: u32) -> Result<CountValue> {
    check_genus(g)?;
    let (big, small) = eigen_parts(g);
    Ok(((big - small) >> 1usize).into())
}

/// Rank-2 subbundles of a generic rank-4 bundle: `a_g` for even `d'`, `b_g` for odd.
pub fn count_rank2_of_4(g: u32, parity: Parity) -> Result<CountValue> {
    match parity {
        Parity::Even => a_binomial(g),
        Parity::Odd => b_binomial(g),
    }
}

fn check_genus(g: u32) -> Result<()> {
    if g < 1 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    Ok(())
}
