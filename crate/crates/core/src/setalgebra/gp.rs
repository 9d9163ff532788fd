use num_bigint::BigUint;
use num_integer::Integer;
use serde::Serialize;

use super::{LabelSet, PositiveInt, Rational};

/// Witness that a [`LabelSet`] is a geometric progression.
///
/// A singleton is a degenerate progression and carries no ratio.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GpDescriptor {
    first: PositiveInt,
    ratio: Option<Rational>,
    length: usize,
}

impl GpDescriptor {
    /// Checks that every implied term is a positive integer and the progression ascends.
    pub fn new(first: PositiveInt, ratio: Option<Rational>, length: usize) -> Option<Self> {
        let d = GpDescriptor { first, ratio, length };
        match (&d.ratio, length) {
            (None, 1) => Some(d),
            (Some(r), n) if n >= 2 && r.exceeds_one() => {
                // first * (p/q)^(n-1) integral <=> q^(n-1) | first, since gcd(p, q) = 1.
                let exp = u32::try_from(n - 1).ok()?;
                if d.first.as_biguint().is_multiple_of(&r.denom().pow(exp)) {
                    Some(d)
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn first(&self) -> &PositiveInt {
        &self.first
    }

    pub fn ratio(&self) -> Option<&Rational> {
        self.ratio.as_ref()
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Expands the progression back into its set.
    pub fn expand(&self) -> LabelSet {
        let mut terms = Vec::with_capacity(self.length);
        let mut term: BigUint = self.first.as_biguint().clone();
        terms.push(PositiveInt::new(term.clone()).expect("positive"));
        if let Some(r) = &self.ratio {
            for _ in 1..self.length {
                term = &term * r.numer() / r.denom();
                terms.push(PositiveInt::new(term.clone()).expect("positive"));
            }
        }
        LabelSet::from_sorted_unchecked(terms)
    }
}

/// Recognizes a geometric progression by exact comparison of consecutive ratios.
pub fn detect_gp(set: &LabelSet) -> Option<GpDescriptor> {
    let elems = set.elements();
    if elems.len() == 1 {
        return Some(GpDescriptor {
            first: elems[0].clone(),
            ratio: None,
            length: 1,
        });
    }
    let ratio = Rational::from_ratio(&elems[1], &elems[0]);
    // x_{i+1} / x_i = p / q  <=>  x_{i+1} * q = x_i * p
    let is_gp = elems.windows(2).skip(1).all(|w| {
        w[1].as_biguint() * ratio.denom() == w[0].as_biguint() * ratio.numer()
    });
    is_gp.then(|| GpDescriptor {
        first: elems[0].clone(),
        ratio: Some(ratio),
        length: elems.len(),
    })
}

/// Common ratio of `set` when it is a progression of length at least two.
pub fn gp_ratio(set: &LabelSet) -> Option<Rational> {
    detect_gp(set).and_then(|d| d.ratio)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> LabelSet {
        LabelSet::from_u64s(v).unwrap()
    }

    #[test]
    fn singleton_is_degenerate() {
        let d = detect_gp(&set(&[5])).unwrap();
        assert_eq!(d.first().to_u64(), Some(5));
        assert!(d.ratio().is_none());
        assert_eq!(d.length(), 1);
    }

    #[test]
    fn rational_ratio_is_detected() {
        let d = detect_gp(&set(&[4, 6, 9])).unwrap();
        assert_eq!(d.ratio().unwrap().to_string(), "3/2");
        assert_eq!(d.length(), 3);
        assert_eq!(d.expand(), set(&[4, 6, 9]));
    }

    #[test]
    fn non_progression_rejected() {
        assert!(detect_gp(&set(&[2, 4, 7])).is_none());
        assert!(detect_gp(&set(&[1, 2, 4, 9])).is_none());
    }

    #[test]
    fn any_pair_is_a_progression() {
        let d = detect_gp(&set(&[6, 10])).unwrap();
        assert_eq!(d.ratio().unwrap().to_string(), "5/3");
    }

    #[test]
    fn descriptor_validation() {
        let three_halves: Rational = "3/2".parse().unwrap();
        let four = PositiveInt::from_u64(4).unwrap();
        let two = PositiveInt::from_u64(2).unwrap();
        assert!(GpDescriptor::new(four.clone(), Some(three_halves.clone()), 3).is_some());
        // 2 * (3/2)^2 is not integral
        assert!(GpDescriptor::new(two, Some(three_halves), 3).is_none());
        assert!(GpDescriptor::new(four.clone(), None, 2).is_none());
        assert!(GpDescriptor::new(four.clone(), Some("1/2".parse().unwrap()), 2).is_none());
        assert!(GpDescriptor::new(four, Some("1".parse().unwrap()), 2).is_none());
    }
}
