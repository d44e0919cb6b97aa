//! Growth coefficients of infinite periodic friezes.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclic;
use crate::error::{FriezeError, Result};
use crate::frieze::{for_each_cyclic_pair_excluding, signed_product, FriezeGrid};
use crate::json::bigint;
use crate::quiddity::{Classification, QuidditySequence};

fn require_infinite(q: &QuidditySequence) -> Result<()> {
    match q.classify() {
        Classification::InfiniteType => Ok(()),
        other => Err(FriezeError::NotInfiniteType(other)),
    }
}

/// `s_q = a(1,n) - a(2,n-1)`, read off the frieze rows.
pub fn growth_coefficient_rows(q: &QuidditySequence) -> Result<BigInt> {
    require_infinite(q)?;
    Ok(rows_difference(q))
}

fn rows_difference(q: &QuidditySequence) -> BigInt {
    let n = q.len() as i64;
    let mut grid = FriezeGrid::new(q.clone());
    grid.entry_unchecked(1, n) - grid.entry_unchecked(2, n - 1)
}

/// Correction for the empty set, which two different domino tilings of an
/// even cycle produce.
pub fn delta(n: usize) -> i64 {
    if n % 2 == 1 {
        0
    } else if n % 4 == 0 {
        1
    } else {
        -1
    }
}

/// `s_q` as the signed sum over distinct cyclic pair-excluding subsets of
/// `{1..n}`, plus `delta(n)`.
pub fn growth_coefficient_formula(q: &QuidditySequence) -> Result<BigInt> {
    require_infinite(q)?;
    let values = q.to_bigints();
    let mut total = BigInt::from(delta(q.len()));
    for_each_cyclic_pair_excluding(values.len(), |keep, pairs| {
        total += signed_product(&values, keep, pairs);
    });
    Ok(total)
}

pub fn minimal_period(q: &QuidditySequence) -> usize {
    cyclic::minimal_period(q.entries())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PeriodMode {
    /// `s_1` is the growth coefficient of the minimal period.
    Minimal,
    /// The length of the sequence is taken as the period.
    AsGiven,
}

/// `[s_1, ..., s_r]` from `s_0 = 2` and `s_{r+1} = s_1 s_r - s_{r-1}`.
pub fn growth_sequence(q: &QuidditySequence, r: usize, mode: PeriodMode) -> Result<Vec<BigInt>> {
    require_infinite(q)?;
    let period = match mode {
        PeriodMode::Minimal => minimal_period(q),
        PeriodMode::AsGiven => q.len(),
    };
    let base = QuidditySequence::new(q.entries()[..period].to_vec())?;
    let s1 = rows_difference(&base);
    Ok(recursion(&s1, r))
}

fn recursion(s1: &BigInt, r: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(r);
    let (mut prev, mut cur) = (BigInt::from(2), s1.clone());
    for _ in 0..r {
        out.push(cur.clone());
        let next = s1 * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

/// Closed form `s_r = s^r + r * sum_{l=1}^{r/2} (-1)^l / (r-l) * C(r-l, l) * s^(r-2l)`,
/// evaluated over the rationals.
pub fn growth_closed_form(s1: &BigInt, r: u32) -> BigInt {
    assert!(r >= 1, "closed form is stated for r >= 1");
    let s = BigRational::from_integer(s1.clone());
    let mut sum = BigRational::zero();
    for l in 1..=r / 2 {
        let coefficient = BigRational::new(binomial(BigInt::from(r - l), BigInt::from(l)), BigInt::from(r - l));
        let term = coefficient * pow(&s, r - 2 * l);
        if l % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
    }
    let value = pow(&s, r) + BigRational::from_integer(BigInt::from(r)) * sum;
    assert!(value.is_integer(), "closed form produced a non-integer");
    value.to_integer()
}

fn pow(base: &BigRational, exp: u32) -> BigRational {
    (0..exp).fold(BigRational::one(), |acc, _| acc * base)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GrowthMethod {
    Rows,
    Formula,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthReport {
    #[serde(with = "bigint")]
    pub s_q: BigInt,
    pub minimal_period: usize,
    #[serde(with = "bigint::vec")]
    pub s_sequence: Vec<BigInt>,
    pub delta_n: i64,
    pub method: GrowthMethod,
    /// Both values when `method` is `Both`.
    #[serde(with = "bigint::option", skip_serializing_if = "Option::is_none", default)]
    pub s_q_rows: Option<BigInt>,
    #[serde(with = "bigint::option", skip_serializing_if = "Option::is_none", default)]
    pub s_q_formula: Option<BigInt>,
}

/// Growth data of `q`; `s_sequence` holds `s_1..s_r` of the minimal period.
pub fn growth_report(q: &QuidditySequence, r: usize, method: GrowthMethod) -> Result<GrowthReport> {
    let (s_q, rows, formula) = match method {
        GrowthMethod::Rows => (growth_coefficient_rows(q)?, None, None),
        GrowthMethod::Formula => (growth_coefficient_formula(q)?, None, None),
        GrowthMethod::Both => {
            let rows = growth_coefficient_rows(q)?;
            let formula = growth_coefficient_formula(q)?;
            (rows.clone(), Some(rows), Some(formula))
        }
    };
    Ok(GrowthReport {
        s_q,
        minimal_period: minimal_period(q),
        s_sequence: growth_sequence(q, r, PeriodMode::Minimal)?,
        delta_n: delta(q.len()),
        method,
        s_q_rows: rows,
        s_q_formula: formula,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiddity::q;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn rows_examples() {
        assert_eq!(growth_coefficient_rows(&q(&[1, 4, 4])).unwrap(), big(7));
        assert_eq!(growth_coefficient_rows(&q(&[3, 3])).unwrap(), big(7));
        assert_eq!(growth_coefficient_rows(&q(&[3])).unwrap(), big(3));
        assert_eq!(growth_coefficient_rows(&q(&[2, 3, 4, 2, 4])).unwrap(), big(87));
        assert_eq!(growth_coefficient_rows(&q(&[5, 7])).unwrap(), big(33));
    }

    #[test]
    fn formula_examples() {
        assert_eq!(growth_coefficient_formula(&q(&[2, 3, 4, 2, 4])).unwrap(), big(87));
        assert_eq!(growth_coefficient_formula(&q(&[5, 20])).unwrap(), big(98));
        assert_eq!(growth_coefficient_formula(&q(&[4, 3, 4, 3])).unwrap(), big(98));
        assert_eq!(growth_coefficient_formula(&q(&[2, 3])).unwrap(), big(4));
        for n in 1..9 {
            assert_eq!(growth_coefficient_formula(&q(&vec![2; n])).unwrap(), big(2));
        }
    }

    #[test]
    fn counting_the_empty_set_twice_would_be_off_by_one() {
        // Without the delta correction (4,3,4,3) would come out as 97.
        let seq = q(&[4, 3, 4, 3]);
        let formula = growth_coefficient_formula(&seq).unwrap();
        assert_eq!(formula.clone() - delta(4), big(97));
        assert_eq!(formula, big(98));
    }

    #[test]
    fn delta_values() {
        assert_eq!(
            (1..=8).map(delta).collect::<Vec<_>>(),
            vec![0, -1, 0, 1, 0, -1, 0, 1]
        );
    }

    #[test]
    fn rejects_non_infinite_sequences() {
        assert!(matches!(
            growth_coefficient_rows(&q(&[1, 1, 1])),
            Err(FriezeError::NotInfiniteType(Classification::FiniteType))
        ));
        assert!(matches!(
            growth_coefficient_formula(&q(&[1, 2])),
            Err(FriezeError::NotInfiniteType(Classification::Invalid))
        ));
    }

    #[test]
    fn sequences_and_periods() {
        assert_eq!(minimal_period(&q(&[4, 3, 4, 3])), 2);
        assert_eq!(minimal_period(&q(&[2, 3, 3])), 3);
        assert_eq!(minimal_period(&q(&[2, 2, 2, 2])), 1);
        let s = growth_sequence(&q(&[4, 3, 4, 3]), 3, PeriodMode::Minimal).unwrap();
        assert_eq!(s[..2], [big(10), big(98)]);
        let given = growth_sequence(&q(&[4, 3, 4, 3]), 1, PeriodMode::AsGiven).unwrap();
        assert_eq!(given, vec![big(98)]);
        let s = growth_sequence(&q(&[3, 3]), 2, PeriodMode::Minimal).unwrap();
        assert_eq!(s, vec![big(3), big(7)]);
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(growth_closed_form(&big(10), 1), big(10));
        assert_eq!(growth_closed_form(&big(10), 2), big(98));
        for s in 2..20 {
            assert_eq!(growth_closed_form(&big(s), 2), big(s * s - 2));
            assert_eq!(growth_closed_form(&big(s), 3), big(s * s * s - 3 * s));
        }
    }

    #[test]
    fn report_json_round_trip() {
        let report = growth_report(&q(&[2, 3, 4, 2, 4]), 3, GrowthMethod::Both).unwrap();
        assert_eq!(report.s_q, big(87));
        assert_eq!(report.s_q_formula, Some(big(87)));
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""s_q":87"#), "{json}");
        let back: GrowthReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    proptest! {
        #[test]
        fn recursion_matches_closed_form(s1 in 2i64..1_000_000, r in 1u32..=12) {
            let by_recursion = recursion(&big(s1), r as usize).pop().unwrap();
            prop_assert_eq!(growth_closed_form(&big(s1), r), by_recursion);
        }

        #[test]
        fn growth_at_least_two(entries in prop::collection::vec(1u64..7, 1..9)) {
            let seq = q(&entries);
            prop_assume!(seq.classify() == Classification::InfiniteType);
            let s = growth_coefficient_rows(&seq).unwrap();
            let trivial = seq.reduce_to_skeletal().unwrap().is_trivial();
            prop_assert!(s >= big(2));
            prop_assert_eq!(s == big(2), trivial);
        }

        #[test]
        fn minimal_period_power_matches_rows(entries in prop::collection::vec(2u64..6, 1..4), copies in 1usize..4) {
            let base = q(&entries);
            let repeated = q(&entries.repeat(copies));
            let s = growth_sequence(&base, copies, PeriodMode::AsGiven).unwrap();
            prop_assert_eq!(s.last().unwrap(), &growth_coefficient_rows(&repeated).unwrap());
        }
    }
}
