//! Alternating-permutation counting.
//!
//! An alternating (zig-zag) permutation of {1..n} rises and falls in turn:
//! p1 < p2 > p3 < p4 ... Counting them yields the tangent numbers at odd n
//! and the secant numbers at even n. Three independent routes live here:
//!
//! * [`enumerate_alternating`] — direct enumeration over all n! permutations,
//!   the ground-truth oracle for small n;
//! * [`tangent_numbers`] — the odd-index recurrence obtained by splitting a
//!   permutation at its maximum,
//!   T_n = Σ_{k odd} C(n-1, k) T_k T_{n-1-k}, seeded with T_1 = 1;
//! * [`zigzag_numbers`] — the boustrophedon (Seidel triangle) construction,
//!   which produces the counts for *all* n in one sweep.
//!
//! [`verify_tangent_ode`] closes the loop: the exponential generating
//! function T(s) = Σ T_n s^n/n! over odd n satisfies T'(s) = 1 + T(s)^2
//! exactly, coefficient by coefficient, in rational arithmetic.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::TruncatedPowerSeries;

/// Arbitrary-precision count; the zig-zag counts outgrow u64 near n = 25.
pub type BigCount = BigUint;

/// Counts of alternating permutations for every size 0..=n_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagTable {
    counts: Vec<BigCount>,
}

impl ZigzagTable {
    pub fn n_max(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[BigCount] {
        &self.counts
    }

    pub fn count(&self, n: usize) -> &BigCount {
        &self.counts[n]
    }
}

/// Hard cap for the factorial enumeration oracle.
pub const ENUMERATION_MAX_N: usize = 12;

/// Counts alternating permutations of {1..n} by checking all n! of them.
///
/// n = 0 counts the empty permutation as 1. Guarded at n ≤ 12; beyond that
/// the factorial walk stops being a desk-scale oracle.
pub fn enumerate_alternating(n: usize) -> Result<BigCount> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::limit(format!(
            "enumeration oracle is capped at n = {ENUMERATION_MAX_N} (got {n}); \
             n! permutations would be enumerated"
        )));
    }
    if n == 0 {
        return Ok(BigCount::one());
    }

    fn is_alternating(p: &[u8]) -> bool {
        for j in 1..p.len() {
            let ok = if j % 2 == 1 { p[j - 1] < p[j] } else { p[j - 1] > p[j] };
            if !ok {
                return false;
            }
        }
        true
    }

    // Heap's algorithm: one swap per generated permutation.
    let mut p: Vec<u8> = (1..=n as u8).collect();
    let mut c = vec![0usize; n];
    let mut count: u64 = u64::from(is_alternating(&p));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if is_alternating(&p) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(BigCount::from(count))
}

/// Tangent numbers T_1, T_3, ..., T_{n_max} from the splitting recurrence.
///
/// For odd n and odd k the complementary index n-1-k is odd as well, so the
/// recurrence closes over odd indices and needs nothing but the seed T_1 = 1.
pub fn tangent_numbers(n_max: usize) -> Result<Vec<BigCount>> {
    if n_max % 2 == 0 {
        return Err(Error::invalid(format!(
            "tangent numbers are indexed by odd n; got n_max = {n_max}"
        )));
    }
    if n_max > 199 {
        return Err(Error::limit(format!(
            "tangent_numbers is capped at n_max = 199 (got {n_max})"
        )));
    }

    // by_index[(n-1)/2] holds T_n for odd n.
    let mut by_index: Vec<BigCount> = vec![BigCount::one()];
    let mut n = 3usize;
    while n <= n_max {
        let mut t = BigCount::zero();
        let mut k = 1usize;
        while k <= n - 2 {
            let choose = binomial(BigUint::from(n - 1), BigUint::from(k));
            t += choose * &by_index[(k - 1) / 2] * &by_index[(n - 2 - k) / 2];
            k += 2;
        }
        by_index.push(t);
        n += 2;
    }
    Ok(by_index)
}

/// All zig-zag counts for 0 ≤ n ≤ n_max via the boustrophedon transform.
///
/// Each triangle row is filled against the direction of the previous one:
/// row(n)[0] = 0 for n ≥ 1, row(n)[k] = row(n)[k-1] + row(n-1)[n-k], and the
/// count is the last entry of its row. Odd rows reproduce the tangent
/// numbers, even rows the secant numbers.
pub fn zigzag_numbers(n_max: usize) -> Result<ZigzagTable> {
    if n_max > 500 {
        return Err(Error::limit(format!(
            "zigzag_numbers is capped at n_max = 500 (got {n_max})"
        )));
    }
    let mut counts = Vec::with_capacity(n_max + 1);
    let mut row: Vec<BigCount> = vec![BigCount::one()];
    counts.push(BigCount::one());
    for n in 1..=n_max {
        let mut next: Vec<BigCount> = Vec::with_capacity(n + 1);
        next.push(BigCount::zero());
        for k in 1..=n {
            let v = next[k - 1].clone() + &row[n - k];
            next.push(v);
        }
        counts.push(next[n].clone());
        row = next;
    }
    Ok(ZigzagTable { counts })
}

/// Residual of T'(s) - 1 - T(s)^2 for the truncated tangent series.
///
/// T(s) is built through degree `order + 1` (the derivative then carries the
/// full information up to `order`), and the returned residual of order
/// `order` is exactly zero in every coefficient.
pub fn verify_tangent_ode(order: usize) -> Result<TruncatedPowerSeries> {
    if order == 0 || order % 2 != 0 {
        return Err(Error::invalid(format!(
            "the residual order must be even and positive; got {order}"
        )));
    }
    if order > 60 {
        return Err(Error::limit(format!(
            "verify_tangent_ode is capped at order 60 (got {order})"
        )));
    }

    let tangents = tangent_numbers(order + 1)?;
    let mut coeffs = vec![BigRational::zero(); order + 2];
    let mut factorial = BigInt::one();
    for n in 1..=order + 1 {
        factorial *= BigInt::from(n);
        if n % 2 == 1 {
            let t = BigInt::from(tangents[(n - 1) / 2].clone());
            coeffs[n] = BigRational::new(t, factorial.clone());
        }
    }
    let t_series = TruncatedPowerSeries::from_coeffs(coeffs);

    let derivative = t_series.derivative(); // order `order`
    let square = t_series.mul(&t_series).truncate(order);
    let one = TruncatedPowerSeries::one(order);
    Ok(derivative.sub(&one).sub(&square))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Odd-index counts as printed for n = 1, 3, ..., 13.
    const TANGENT_SEQ: [u64; 7] = [1, 2, 16, 272, 7936, 353792, 22368256];

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_alternating(0).unwrap(), BigCount::from(1u32));
        assert_eq!(enumerate_alternating(1).unwrap(), BigCount::from(1u32));
        assert_eq!(enumerate_alternating(3).unwrap(), BigCount::from(2u32));
        // all 24 permutations of {1..4} contain exactly five zig-zags
        assert_eq!(enumerate_alternating(4).unwrap(), BigCount::from(5u32));
        assert_eq!(enumerate_alternating(5).unwrap(), BigCount::from(16u32));
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_alternating(13),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn tangent_recurrence_reproduces_printed_sequence() {
        let t = tangent_numbers(13).unwrap();
        let expect: Vec<BigCount> = TANGENT_SEQ.iter().map(|&v| BigCount::from(v)).collect();
        assert_eq!(t, expect);
    }

    #[test]
    fn tangent_seed_and_ninth() {
        assert_eq!(tangent_numbers(1).unwrap(), vec![BigCount::one()]);
        let t = tangent_numbers(9).unwrap();
        assert_eq!(*t.last().unwrap(), BigCount::from(7936u32));
    }

    #[test]
    fn tangent_rejects_even_input() {
        assert!(matches!(tangent_numbers(8), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn boustrophedon_small_table() {
        let table = zigzag_numbers(4).unwrap();
        let got: Vec<u64> = table
            .counts()
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(got, vec![1, 1, 1, 2, 5]);
    }

    #[test]
    fn boustrophedon_zero_case() {
        let table = zigzag_numbers(0).unwrap();
        assert_eq!(table.counts(), &[BigCount::one()]);
    }

    #[test]
    fn boustrophedon_matches_enumeration_through_eight() {
        // independent oracle: exhaustive enumeration (8! = 40320 checks at worst)
        let table = zigzag_numbers(8).unwrap();
        for n in 0..=8 {
            assert_eq!(
                table.count(n),
                &enumerate_alternating(n).unwrap(),
                "count mismatch at n = {n}"
            );
        }
        assert_eq!(table.count(8), &BigCount::from(1385u32));
    }

    #[test]
    fn boustrophedon_odd_rows_are_tangent_numbers() {
        let table = zigzag_numbers(21).unwrap();
        let t = tangent_numbers(21).unwrap();
        for (i, expect) in t.iter().enumerate() {
            assert_eq!(table.count(2 * i + 1), expect);
        }
    }

    #[test]
    fn table_entries_positive_and_eventually_nondecreasing() {
        let table = zigzag_numbers(40).unwrap();
        for n in 0..=40 {
            assert!(!table.count(n).is_zero());
        }
        for n in 2..40 {
            assert!(table.count(n + 1) >= table.count(n));
        }
    }

    #[test]
    fn tangent_ode_residual_vanishes() {
        for order in [2usize, 12, 40] {
            let residual = verify_tangent_ode(order).unwrap();
            assert_eq!(residual.order(), order);
            assert!(
                residual.is_zero(),
                "nonzero residual at order {order}: {residual}"
            );
        }
    }

    #[test]
    fn tangent_ode_rejects_odd_order() {
        assert!(verify_tangent_ode(7).is_err());
        assert!(verify_tangent_ode(0).is_err());
        assert!(verify_tangent_ode(62).is_err());
    }
}
