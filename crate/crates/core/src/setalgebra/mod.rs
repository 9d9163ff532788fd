//! Exact arithmetic over finite sets of positive integers.
//!
//! Product sets, quotient sets, geometric-progression recognition and the
//! cardinality bounds `|A| + |B| - 1 <= |A * B| <= |A| |B|`.

mod gp;
mod label_set;
mod number;

use std::collections::BTreeSet;

use thiserror::Error;

pub use gp::{detect_gp, gp_ratio, GpDescriptor};
pub use label_set::LabelSet;
pub use number::{PositiveInt, Rational};

use label_set::{big_products, small_products, u128_to_positive};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetAlgebraError {
    #[error("label set is empty")]
    EmptySet,
    #[error("not a positive integer: {0}")]
    NonPositive(String),
    #[error("{0}")]
    Parse(String),
    #[error("elements are not strictly ascending")]
    NotAscending,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// `A * B = { ab : a in A, b in B }`.
pub fn product_set(a: &LabelSet, b: &LabelSet) -> LabelSet {
    let elements = match (a.to_u64_vec(), b.to_u64_vec()) {
        (Some(x), Some(y)) => small_products(&x, &y).into_iter().map(u128_to_positive).collect(),
        _ => big_products(a, b),
    };
    LabelSet::from_sorted_unchecked(elements)
}

/// `|A * B|` without materializing big integers when the operands fit in `u64`.
pub fn product_cardinality(a: &LabelSet, b: &LabelSet) -> usize {
    match (a.to_u64_vec(), b.to_u64_vec()) {
        (Some(x), Some(y)) => small_products(&x, &y).len(),
        _ => big_products(a, b).len(),
    }
}

/// Ratios `x / y` of elements with `x > y`, in lowest terms.
///
/// The ratio 1 is never included, so a singleton has an empty quotient set.
pub fn quotient_set(a: &LabelSet) -> BTreeSet<Rational> {
    let elems = a.elements();
    let mut out = BTreeSet::new();
    for (i, small) in elems.iter().enumerate() {
        for large in &elems[i + 1..] {
            out.insert(Rational::from_ratio(large, small));
        }
    }
    out
}

/// `(|a| + |b| - 1, |a| * |b|)`.
pub fn cardinality_bounds(a: &LabelSet, b: &LabelSet) -> (usize, usize) {
    (a.len() + b.len() - 1, a.len() * b.len())
}

/// True iff the product set attains the lower cardinality bound.
pub fn is_minimal_product_pair(a: &LabelSet, b: &LabelSet) -> bool {
    product_cardinality(a, b) == a.len() + b.len() - 1
}

/// The unique `k >= 1` with `r_large = r_small^k`, if one exists.
pub fn characteristic_exponent(
    r_small: &Rational,
    r_large: &Rational,
) -> Result<Option<u32>, SetAlgebraError> {
    if !r_small.exceeds_one() {
        return Err(SetAlgebraError::InvalidArgument(format!(
            "smaller ratio must exceed 1, got {r_small}"
        )));
    }
    if r_large < r_small {
        return Err(SetAlgebraError::InvalidArgument(format!(
            "ratios out of order: {r_small} > {r_large}"
        )));
    }
    let mut power = r_small.clone();
    let mut k = 1u32;
    // r_small > 1, so powers strictly increase and the loop terminates.
    while &power < r_large {
        power = &power * r_small;
        k += 1;
    }
    Ok((&power == r_large).then_some(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[u64]) -> LabelSet {
        LabelSet::from_u64s(v).unwrap()
    }

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Direct enumeration, independent of the fast path.
    fn naive_product(a: &[u64], b: &[u64]) -> BTreeSet<u64> {
        a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
    }

    fn as_u64(s: &LabelSet) -> Vec<u64> {
        s.iter().map(|e| e.to_u64().unwrap()).collect()
    }

    #[test]
    fn product_set_examples() {
        assert_eq!(product_set(&set(&[1]), &set(&[5, 7])), set(&[5, 7]));
        assert_eq!(product_set(&set(&[2, 3]), &set(&[4, 6])), set(&[8, 12, 18]));
        assert_eq!(product_set(&set(&[2, 4]), &set(&[3, 6])), set(&[6, 12, 24]));
        let oracle = naive_product(&[2, 3], &[4, 6]);
        assert_eq!(oracle.into_iter().collect::<Vec<_>>(), vec![8, 12, 18]);
    }

    #[test]
    fn product_set_beyond_u64() {
        let big: PositiveInt = "18446744073709551617".parse().unwrap(); // 2^64 + 1
        let a = LabelSet::from_elements(vec![big.clone()]).unwrap();
        let p = product_set(&a, &set(&[1, 2]));
        assert_eq!(p.to_strings(), vec!["18446744073709551617", "36893488147419103234"]);
        assert_eq!(product_cardinality(&a, &a), 1);
        // u64 operands whose product overflows u64 but not u128
        let m = set(&[u64::MAX]);
        assert_eq!(product_set(&m, &m).to_strings(), vec!["340282366920938463426481119284349108225"]);
    }

    #[test]
    fn quotient_set_examples() {
        assert!(quotient_set(&set(&[7])).is_empty());
        assert_eq!(quotient_set(&set(&[2, 4, 8])), [q("2"), q("4")].into_iter().collect());
        assert_eq!(
            quotient_set(&set(&[2, 3, 6])),
            [q("3/2"), q("2"), q("3")].into_iter().collect()
        );
    }

    #[test]
    fn cardinality_bounds_examples() {
        let (a, b) = (set(&[1, 2, 4]), set(&[3, 6]));
        assert_eq!(cardinality_bounds(&a, &b), (4, 6));
        assert_eq!(naive_product(&as_u64(&a), &as_u64(&b)).len(), 4);
        let (a, b) = (set(&[2, 3]), set(&[5, 7]));
        assert_eq!(cardinality_bounds(&a, &b), (3, 4));
        assert_eq!(naive_product(&as_u64(&a), &as_u64(&b)).len(), 4);
        assert_eq!(cardinality_bounds(&set(&[9]), &set(&[9])), (1, 1));
    }

    #[test]
    fn minimal_pairs() {
        assert!(is_minimal_product_pair(&set(&[2, 4]), &set(&[3, 6])));
        assert!(!is_minimal_product_pair(&set(&[2, 3]), &set(&[5, 7])));
        assert!(is_minimal_product_pair(&set(&[1]), &set(&[5, 7])));
    }

    #[test]
    fn characteristic_exponent_examples() {
        assert_eq!(characteristic_exponent(&q("2"), &q("8")).unwrap(), Some(3));
        assert_eq!(characteristic_exponent(&q("2"), &q("2")).unwrap(), Some(1));
        assert_eq!(characteristic_exponent(&q("2"), &q("12")).unwrap(), None);
        assert_eq!(characteristic_exponent(&q("3/2"), &q("27/8")).unwrap(), Some(3));
        assert_eq!(characteristic_exponent(&q("3/2"), &q("3")).unwrap(), None);
    }

    #[test]
    fn characteristic_exponent_rejects_bad_arguments() {
        assert!(matches!(
            characteristic_exponent(&q("1"), &q("2")),
            Err(SetAlgebraError::InvalidArgument(_))
        ));
        assert!(matches!(
            characteristic_exponent(&q("4"), &q("2")),
            Err(SetAlgebraError::InvalidArgument(_))
        ));
    }

    #[test]
    fn strict_parse_rejects_malformed() {
        assert_eq!(LabelSet::parse_strict::<&str>(&[]), Err(SetAlgebraError::EmptySet));
        assert_eq!(LabelSet::parse_strict(&["4", "2"]), Err(SetAlgebraError::NotAscending));
        assert_eq!(LabelSet::parse_strict(&["2", "2"]), Err(SetAlgebraError::NotAscending));
        assert!(matches!(LabelSet::parse_strict(&["0", "2"]), Err(SetAlgebraError::NonPositive(_))));
        assert!(matches!(LabelSet::parse_strict(&["x"]), Err(SetAlgebraError::Parse(_))));
        assert_eq!(LabelSet::parse_strict(&["2", "4", "8"]).unwrap(), set(&[2, 4, 8]));
    }

    #[test]
    fn json_form() {
        let s = set(&[2, 4, 8]);
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"["2","4","8"]"#);
        let back: LabelSet = serde_json::from_str(r#"["2","4","8"]"#).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<LabelSet>(r#"[2,4]"#).is_err());
        assert_eq!(serde_json::to_string(&q("6/4")).unwrap(), r#""3/2""#);
    }
}
