//! Arbitrary-precision counts.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A nonnegative integer count.
///
/// Serializes as a decimal string so JSON consumers with 53-bit numbers do
/// not truncate it.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountValue(BigUint);

impl CountValue {
    pub fn zero() -> Self {
        CountValue(BigUint::zero())
    }

    pub fn one() -> Self {
        CountValue(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }
}

impl From<BigUint> for CountValue {
    fn from(v: BigUint) -> Self {
        CountValue(v)
    }
}

impl From<u64> for CountValue {
    fn from(v: u64) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl From<u32> for CountValue {
    fn from(v: u32) -> Self {
        CountValue(BigUint::from(v))
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for CountValue {
    type Err = Error;

    /// Accepts canonical decimal only: digits, no sign, no leading zeros.
    fn from_str(s: &str) -> Result<Self> {
        let canonical = !s.is_empty()
            && s.bytes().all(|b| b.is_ascii_digit())
            && (s == "0" || !s.starts_with('0'));
        if !canonical {
            return Err(Error::InvalidArgument(format!(
                "not a canonical decimal count: {s:?}"
            )));
        }
        s.parse::<BigUint>()
            .map(CountValue)
            .map_err(|e| Error::InvalidArgument(e.to_string()))
    }
}

impl Serialize for CountValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for CountValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Add for &CountValue {
    type Output = CountValue;
    fn add(self, rhs: &CountValue) -> CountValue {
        CountValue(&self.0 + &rhs.0)
    }
}

impl Add for CountValue {
    type Output = CountValue;
    fn add(self, rhs: CountValue) -> CountValue {
        CountValue(self.0 + rhs.0)
    }
}

impl Mul for &CountValue {
    type Output = CountValue;
    fn mul(self, rhs: &CountValue) -> CountValue {
        CountValue(&self.0 * &rhs.0)
    }
}

impl Sum for CountValue {
    fn sum<I: Iterator<Item = CountValue>>(iter: I) -> Self {
        iter.fold(CountValue::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a CountValue> for CountValue {
    fn sum<I: Iterator<Item = &'a CountValue>>(iter: I) -> Self {
        iter.fold(CountValue::zero(), |acc, v| &acc + v)
    }
}

/// Labelled counts, one per state of a transfer system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountVector {
    entries: Vec<CountValue>,
    labels: Vec<String>,
}

impl CountVector {
    pub fn new(entries: Vec<CountValue>, labels: Vec<String>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument(
                "count vector must be nonempty".into(),
            ));
        }
        if entries.len() != labels.len() {
            return Err(Error::InvalidArgument(format!(
                "{} entries but {} labels",
                entries.len(),
                labels.len()
            )));
        }
        Ok(Self { entries, labels })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[CountValue] {
        &self.entries
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn get(&self, i: usize) -> Option<&CountValue> {
        self.entries.get(i)
    }

    pub fn by_label(&self, label: &str) -> Option<&CountValue> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| &self.entries[i])
    }

    pub(crate) fn with_entries(&self, entries: Vec<CountValue>) -> Self {
        debug_assert_eq!(entries.len(), self.labels.len());
        Self {
            entries,
            labels: self.labels.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_noncanonical() {
        assert!("".parse::<CountValue>().is_err());
        assert!("007".parse::<CountValue>().is_err());
        assert!("-1".parse::<CountValue>().is_err());
        assert!("+1".parse::<CountValue>().is_err());
        assert_eq!("0".parse::<CountValue>().unwrap(), CountValue::zero());
        assert_eq!(
            "288".parse::<CountValue>().unwrap(),
            CountValue::from(288u32)
        );
    }

    #[test]
    fn vector_shape_checked() {
        assert!(CountVector::new(vec![], vec![]).is_err());
        assert!(CountVector::new(vec![CountValue::one()], vec![]).is_err());
        let v = CountVector::new(
            vec![6u32.into(), 2u32.into()],
            vec!["even".into(), "odd".into()],
        )
        .unwrap();
        assert_eq!(v.by_label("odd"), Some(&CountValue::from(2u32)));
    }
}
