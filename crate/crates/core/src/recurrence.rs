//! Transfer systems: one genus increment of the degeneration argument as an
//! integer matrix acting on a vector of counts.
//!
//! Gluing an elliptic tail onto a genus-`g` curve turns the genus-`g` count
//! vector into the genus-`g + 1` one by a fixed nonnegative matrix. For line
//! subbundles of a rank-`r` bundle the state is a single count and the matrix
//! is `[[r]]`. For rank-2 subbundles of a rank-4 bundle the state is the pair
//! `(a_g, b_g)` of counts for even and odd `d'`, and the matrix is
//! `[[6, 2], [2, 6]]`.
//!
//! [`iterate`] applies the matrix one genus at a time and serves as the
//! reference; [`count_at_genus`] goes through [`mat_pow`] and is the fast path.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::count::{CountValue, CountVector};
use crate::error::{Error, Result};
use crate::invariants::SupportedCase;

/// Dense square matrix of nonnegative big integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    dim: usize,
    cells: Vec<BigUint>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "matrix must have at least one row".into(),
            ));
        }
        if let Some(bad) = rows.iter().position(|row| row.len() != dim) {
            return Err(Error::InvalidArgument(format!(
                "matrix is not square: row {bad} has {} entries, expected {dim}",
                rows[bad].len()
            )));
        }
        Ok(Self {
            dim,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_u64_rows(rows: &[&[u64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| BigUint::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(dim: usize) -> Self {
        let mut cells = vec![BigUint::zero(); dim * dim];
        for i in 0..dim {
            cells[i * dim + i] = BigUint::one();
        }
        Self { dim, cells }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigUint {
        &self.cells[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<BigUint>> {
        self.cells
            .chunks(self.dim)
            .map(<[BigUint]>::to_vec)
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn mul(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.dim != other.dim {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {0}x{0} by {1}x{1}",
                self.dim, other.dim
            )));
        }
        let n = self.dim;
        let mut cells = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigUint::zero();
                for k in 0..n {
                    acc += self.get(i, k) * other.get(k, j);
                }
                cells.push(acc);
            }
        }
        Ok(SquareMatrix { dim: n, cells })
    }

    pub fn apply(&self, v: &[CountValue]) -> Result<Vec<CountValue>> {
        if v.len() != self.dim {
            return Err(Error::InvalidArgument(format!(
                "state has length {} but the matrix is {1}x{1}",
                v.len(),
                self.dim
            )));
        }
        Ok((0..self.dim)
            .map(|i| {
                let mut acc = BigUint::zero();
                for (j, x) in v.iter().enumerate() {
                    acc += self.get(i, j) * x.as_biguint();
                }
                CountValue::from(acc)
            })
            .collect())
    }
}

/// Genus-1 counts plus the per-genus transfer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferSystem {
    matrix: SquareMatrix,
    base: CountVector,
}

impl TransferSystem {
    pub fn new(matrix: SquareMatrix, base: CountVector) -> Result<Self> {
        if matrix.dim() != base.len() {
            return Err(Error::InvalidArgument(format!(
                "matrix is {0}x{0} but the base vector has length {1}",
                matrix.dim(),
                base.len()
            )));
        }
        Ok(Self { matrix, base })
    }

    /// Line subbundles of a rank-`r` bundle: `[[r]]` with base `[r]`.
    pub fn line_subbundle(r: u32) -> Self {
        let r = u64::from(r);
        Self {
            matrix: SquareMatrix::from_u64_rows(&[&[r]]).expect("1x1"),
            base: CountVector::new(vec![r.into()], vec!["count".into()]).expect("length 1"),
        }
    }

    /// Rank-2 subbundles of a rank-4 bundle, states ordered (even, odd).
    pub fn rank_two_of_four() -> Self {
        Self {
            matrix: SquareMatrix::from_u64_rows(&[&[6, 2], &[2, 6]]).expect("2x2"),
            base: CountVector::new(
                vec![6u32.into(), 2u32.into()],
                vec!["even".into(), "odd".into()],
            )
            .expect("length 2"),
        }
    }

    pub fn for_case(case: SupportedCase) -> Self {
        match case {
            SupportedCase::LineSubbundle(r) => Self::line_subbundle(r),
            SupportedCase::RankTwoOfFour => Self::rank_two_of_four(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn base(&self) -> &CountVector {
        &self.base
    }

    pub fn labels(&self) -> &[String] {
        self.base.labels()
    }
}

/// One genus increment: `matrix · state`.
pub fn step(state: &CountVector, system: &TransferSystem) -> Result<CountVector> {
    let entries = system.matrix.apply(state.entries())?;
    Ok(state.with_entries(entries))
}

/// Counts at genus `g` by applying [`step`] `g − 1` times to the base.
pub fn iterate(system: &TransferSystem, g: u32) -> Result<CountVector> {
    check_genus(g)?;
    let mut state = system.base.clone();
    for _ in 1..g {
        state = step(&state, system)?;
    }
    Ok(state)
}

/// `matrixⁿ` by binary exponentiation; `n = 0` gives the identity.
pub fn mat_pow(system: &TransferSystem, n: u32) -> SquareMatrix {
    let mut result = SquareMatrix::identity(system.dimension());
    let mut base = system.matrix.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            result = result.mul(&base).expect("same dimension");
        }
        n >>= 1;
        if n > 0 {
            base = base.mul(&base).expect("same dimension");
        }
    }
    result
}

/// Counts at genus `g` as `matrix^(g−1) · base`.
pub fn count_at_genus(system: &TransferSystem, g: u32) -> Result<CountVector> {
    check_genus(g)?;
    let power = mat_pow(system, g - 1);
    let entries = power.apply(system.base.entries())?;
    Ok(system.base.with_entries(entries))
}

fn check_genus(g: u32) -> Result<()> {
    if g < 1 {
        return Err(Error::InvalidArgument("genus must be at least 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: u64, b: u64) -> CountVector {
        CountVector::new(vec![a.into(), b.into()], vec!["even".into(), "odd".into()]).unwrap()
    }

    fn entries(v: &CountVector) -> Vec<String> {
        v.entries().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn built_in_systems() {
        let s = TransferSystem::rank_two_of_four();
        assert_eq!(s.dimension(), 2);
        assert_eq!(
            s.matrix().rows(),
            vec![
                vec![6u32.into(), 2u32.into()],
                vec![2u32.into(), 6u32.into()]
            ]
        );
        assert_eq!(s.base(), &pair(6, 2));

        let l = TransferSystem::line_subbundle(5);
        assert_eq!(l.dimension(), 1);
        assert_eq!(l.base().entries(), &[CountValue::from(5u32)]);
    }

    #[test]
    fn step_examples() {
        let s = TransferSystem::rank_two_of_four();
        assert_eq!(step(&pair(6, 2), &s).unwrap(), pair(40, 24));
        assert_eq!(step(&pair(1, 0), &s).unwrap(), pair(6, 2));
        assert_eq!(step(&pair(0, 0), &s).unwrap(), pair(0, 0));
    }

    #[test]
    fn step_dimension_mismatch() {
        let s = TransferSystem::line_subbundle(3);
        assert!(matches!(
            step(&pair(1, 1), &s),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn iterate_examples() {
        let s = TransferSystem::rank_two_of_four();
        assert_eq!(iterate(&s, 1).unwrap(), pair(6, 2));
        assert_eq!(iterate(&s, 3).unwrap(), pair(288, 224));
        assert_eq!(
            entries(&iterate(&TransferSystem::line_subbundle(3), 4).unwrap()),
            ["81"]
        );
        assert!(iterate(&s, 0).is_err());
    }

    #[test]
    fn mat_pow_examples() {
        let s = TransferSystem::rank_two_of_four();
        assert_eq!(mat_pow(&s, 0), SquareMatrix::identity(2));
        assert_eq!(
            mat_pow(&s, 1),
            SquareMatrix::from_u64_rows(&[&[6, 2], &[2, 6]]).unwrap()
        );
        assert_eq!(
            mat_pow(&s, 2),
            SquareMatrix::from_u64_rows(&[&[40, 24], &[24, 40]]).unwrap()
        );
    }

    #[test]
    fn count_at_genus_examples() {
        let s = TransferSystem::rank_two_of_four();
        assert_eq!(count_at_genus(&s, 1).unwrap(), pair(6, 2));
        assert_eq!(count_at_genus(&s, 2).unwrap(), pair(40, 24));
        assert_eq!(count_at_genus(&s, 4).unwrap(), pair(2176, 1920));
        assert!(count_at_genus(&s, 0).is_err());
    }

    #[test]
    fn user_supplied_system() {
        // Fibonacci-style system, exercising a non-built-in matrix.
        let m = SquareMatrix::from_u64_rows(&[&[1, 1], &[1, 0]]).unwrap();
        let s = TransferSystem::new(m, pair(1, 1)).unwrap();
        assert_eq!(iterate(&s, 10).unwrap(), count_at_genus(&s, 10).unwrap());
        assert_eq!(entries(&iterate(&s, 10).unwrap()), ["89", "55"]);
    }

    #[test]
    fn malformed_systems_rejected() {
        assert!(SquareMatrix::from_u64_rows(&[]).is_err());
        assert!(SquareMatrix::from_u64_rows(&[&[1, 2], &[3]]).is_err());
        let m = SquareMatrix::from_u64_rows(&[&[1]]).unwrap();
        assert!(TransferSystem::new(m, pair(1, 2)).is_err());
    }
}
