use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{PositiveInt, SetAlgebraError};

/// A non-empty finite set of distinct positive integers, stored ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelSet {
    elements: Vec<PositiveInt>,
}

impl LabelSet {
    /// Builds a set from arbitrary elements, sorting and dropping repeats.
    pub fn from_elements(mut elements: Vec<PositiveInt>) -> Result<Self, SetAlgebraError> {
        if elements.is_empty() {
            return Err(SetAlgebraError::EmptySet);
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(LabelSet { elements })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self, SetAlgebraError> {
        let elements = values
            .iter()
            .map(|&v| PositiveInt::from_u64(v).ok_or_else(|| SetAlgebraError::NonPositive(v.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_elements(elements)
    }

    /// Parses the wire form: a strictly ascending list of decimal strings.
    pub fn parse_strict<S: AsRef<str>>(items: &[S]) -> Result<Self, SetAlgebraError> {
        if items.is_empty() {
            return Err(SetAlgebraError::EmptySet);
        }
        let elements = items
            .iter()
            .map(|s| s.as_ref().parse::<PositiveInt>())
            .collect::<Result<Vec<_>, _>>()?;
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SetAlgebraError::NotAscending);
        }
        Ok(LabelSet { elements })
    }

    /// Caller guarantees `elements` is non-empty and strictly ascending.
    pub(crate) fn from_sorted_unchecked(elements: Vec<PositiveInt>) -> Self {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        LabelSet { elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false; present for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[PositiveInt] {
        &self.elements
    }

    pub fn iter(&self) -> impl Iterator<Item = &PositiveInt> {
        self.elements.iter()
    }

    pub fn min(&self) -> &PositiveInt {
        &self.elements[0]
    }

    pub fn contains(&self, value: &PositiveInt) -> bool {
        self.elements.binary_search(value).is_ok()
    }

    /// The elements as `u64` if every one fits.
    pub(crate) fn to_u64_vec(&self) -> Option<Vec<u64>> {
        self.elements.iter().map(PositiveInt::to_u64).collect()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.elements.iter().map(|e| e.to_string()).collect()
    }
}

impl fmt::Display for LabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for LabelSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elements.iter().map(|e| e.to_string()))
    }
}

impl<'de> Deserialize<'de> for LabelSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        LabelSet::parse_strict(&items).map_err(serde::de::Error::custom)
    }
}

/// Products of two `u64` slices, sorted and deduplicated. `u128` cannot overflow here.
pub(crate) fn small_products(a: &[u64], b: &[u64]) -> Vec<u128> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x as u128 * y as u128);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn big_products(a: &LabelSet, b: &LabelSet) -> Vec<PositiveInt> {
    let mut out: Vec<PositiveInt> = Vec::with_capacity(a.len() * b.len());
    for x in a.iter() {
        for y in b.iter() {
            out.push(x * y);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

pub(crate) fn u128_to_positive(v: u128) -> PositiveInt {
    PositiveInt::new(BigUint::from(v)).expect("products of positive integers are positive")
}
