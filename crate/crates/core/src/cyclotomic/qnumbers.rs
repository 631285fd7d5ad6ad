//! Basic, factorial and combinatorial q-numbers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{CyclotomicInt, Order};
use crate::error::{Error, Result};

/// Largest `n` for which [`permutation_sum`] enumerates `S_n`.
pub const MAX_PERMUTATION_N: usize = 8;

/// `[k]_q = 1 + q + ... + q^{k-1}`; `[0]_q = 0`.
pub fn qbasic(order: Order, k: u64) -> CyclotomicInt {
    let n = order.get() as u64;
    let full = k / n;
    let rest = k % n;
    let poly = (0..n).map(|i| BigInt::from(full + u64::from(i < rest)));
    CyclotomicInt::from_poly(order, poly)
}

/// `[k]_q! = [1]_q [2]_q ... [k]_q` for `0 <= k <= N-1`.
pub fn qfactorial(order: Order, k: u64) -> Result<CyclotomicInt> {
    let max = order.get() as i64 - 1;
    if k as i64 > max {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: max,
        });
    }
    Ok(qfactorial_extended(order, k))
}

/// The same product without the range restriction. For `k >= N` it contains
/// the factor `[N]_q = 0` and vanishes.
pub fn qfactorial_extended(order: Order, k: u64) -> CyclotomicInt {
    if k >= order.get() as u64 {
        return CyclotomicInt::zero(order);
    }
    (1..=k).fold(CyclotomicInt::one(order), |acc, i| &acc * &qbasic(order, i))
}

/// Gaussian binomial `[k choose l]_q` for `0 <= l <= k <= N-1`.
pub fn qbinomial(order: Order, k: u64, l: u64) -> Result<CyclotomicInt> {
    let max = order.get() as i64 - 1;
    if k as i64 > max {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: max,
        });
    }
    if l > k {
        return Err(Error::OutOfRange {
            what: "l",
            value: l as i64,
            lo: 0,
            hi: k as i64,
        });
    }
    Ok(qbinomial_extended(order, k, l))
}

/// Gaussian binomial for any `k`, computed by the q-Pascal rule
/// `[n+1 choose j+1] = [n choose j] + q^{j+1} [n choose j+1]`; zero when `l > k`.
pub fn qbinomial_extended(order: Order, k: u64, l: u64) -> CyclotomicInt {
    if l > k {
        return CyclotomicInt::zero(order);
    }
    let l = l as usize;
    // row[j] = [n choose j] for j <= l
    let mut row = vec![CyclotomicInt::zero(order); l + 1];
    row[0] = CyclotomicInt::one(order);
    for _ in 0..k {
        for j in (1..=l).rev() {
            let shifted = &CyclotomicInt::q_pow(order, j as i64) * &row[j];
            row[j] = &row[j - 1] + &shifted;
        }
    }
    row.swap_remove(l)
}

/// Inverse of the unit `[n]_q`, namely `[a]_{q^n}` where `a n + b N = 1`.
pub fn invert_qbasic(order: Order, n: i64) -> Result<CyclotomicInt> {
    let big_n = order.get() as i64;
    if n.rem_euclid(big_n) == 0 {
        return Err(Error::NotAUnit(n));
    }
    if !(1..big_n).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            lo: 1,
            hi: big_n - 1,
        });
    }
    let egcd = n.extended_gcd(&big_n);
    debug_assert!(egcd.gcd.is_one());
    let a = egcd.x.rem_euclid(big_n);
    let mut poly = vec![BigInt::zero(); order.get() as usize];
    for j in 0..a {
        poly[order.exponent(n * j)] += 1;
    }
    Ok(CyclotomicInt::from_poly(order, poly))
}

/// `sum over sigma in S_n of q^{inv(sigma)}`, by enumerating every permutation.
pub fn permutation_sum(order: Order, n: usize) -> Result<CyclotomicInt> {
    if n > MAX_PERMUTATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_PERMUTATION_N,
        });
    }
    let mut counts = vec![BigInt::zero(); order.get() as usize];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        counts[inversions(&perm) % order.get() as usize] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(CyclotomicInt::from_poly(order, counts))
}

fn inversions(perm: &[usize]) -> usize {
    let mut count = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                count += 1;
            }
        }
    }
    count
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Precomputed q-numbers for one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QNumberTable {
    pub order: Order,
    /// `basics[k] = [k]_q` for `0 <= k <= N`.
    pub basics: Vec<CyclotomicInt>,
    /// `factorials[k] = [k]_q!` for `0 <= k <= N-1`.
    pub factorials: Vec<CyclotomicInt>,
    /// `binomials[k][l] = [k choose l]_q` for `0 <= l <= k <= N-1`.
    pub binomials: Vec<Vec<CyclotomicInt>>,
}

impl QNumberTable {
    pub fn new(order: Order) -> Self {
        let n = order.get() as u64;
        let basics = (0..=n).map(|k| qbasic(order, k)).collect();
        let factorials = (0..n).map(|k| qfactorial_extended(order, k)).collect();
        let binomials = (0..n)
            .map(|k| (0..=k).map(|l| qbinomial_extended(order, k, l)).collect())
            .collect();
        QNumberTable {
            order,
            basics,
            factorials,
            binomials,
        }
    }
}
