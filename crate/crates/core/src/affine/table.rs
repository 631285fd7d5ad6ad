//! The coefficients `α_{k,i} = q^{i(N-1-k+i)} [k choose i]_q` that appear when
//! the homotopy sum is expanded, grouped by `l = k - i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{qbinomial, CyclotomicRational, Order};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub k: usize,
    pub i: usize,
    pub l: usize,
    pub value: CyclotomicRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableChecks {
    /// `α_l = 0` for `0 <= l <= N-2`.
    pub lower_sums_vanish: bool,
    /// `α_{N-1} = 1`.
    pub top_sum_is_one: bool,
    /// `β_s = α_{N-1-s}` for every `s`.
    pub beta_matches_sums: bool,
    /// `β_1 = 0` and `β_{s+1} = (1 - q^s) β_s` for `1 <= s <= N-2`.
    pub beta_recursion: bool,
}

impl TableChecks {
    pub fn all(&self) -> bool {
        self.lower_sums_vanish && self.top_sum_is_one && self.beta_matches_sums && self.beta_recursion
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientTable {
    #[serde(rename = "N")]
    pub order: u32,
    /// Row-major over `k`, then `i`.
    pub entries: Vec<TableEntry>,
    /// `α_l` for `l = 0..N-1`.
    pub column_sums: Vec<CyclotomicRational>,
    /// `β_s = Σ_{i=0}^{s} q^{is} [N-1-s+i choose N-1-s]_q` for `s = 0..N-1`.
    pub betas: Vec<CyclotomicRational>,
    pub checks: TableChecks,
}

impl CoefficientTable {
    pub fn entry(&self, k: usize, i: usize) -> Option<&CyclotomicRational> {
        self.entries
            .iter()
            .find(|e| e.k == k && e.i == i)
            .map(|e| &e.value)
    }
}

pub fn coefficient_table(order: Order) -> CoefficientTable {
    let n = order.get() as usize;
    let q = |e: i64| CyclotomicRational::q_pow(order, e);
    let binom = |a: usize, b: usize| -> CyclotomicRational {
        qbinomial(order, a as u64, b as u64)
            .expect("arguments below N")
            .into()
    };
    let mut entries = Vec::new();
    let mut column_sums = vec![CyclotomicRational::zero(order); n];
    for k in 0..n {
        for i in 0..=k {
            let (ii, kk) = (i as i64, k as i64);
            let value = &q(ii * (n as i64 - 1 - kk + ii)) * &binom(k, i);
            column_sums[k - i] += &value;
            entries.push(TableEntry { k, i, l: k - i, value });
        }
    }
    let betas: Vec<CyclotomicRational> = (0..n)
        .map(|s| {
            (0..=s).fold(CyclotomicRational::zero(order), |acc, i| {
                acc + &q((i * s) as i64) * &binom(n - 1 - s + i, n - 1 - s)
            })
        })
        .collect();
    let one = CyclotomicRational::one(order);
    let checks = TableChecks {
        lower_sums_vanish: column_sums[..n - 1].iter().all(CyclotomicRational::is_zero),
        top_sum_is_one: column_sums[n - 1] == one,
        beta_matches_sums: (0..n).all(|s| betas[s] == column_sums[n - 1 - s]),
        beta_recursion: n < 2
            || (betas[1].is_zero()
                && (1..n - 1).all(|s| betas[s + 1] == &(&one - &q(s as i64)) * &betas[s])),
    };
    CoefficientTable {
        order: order.get(),
        entries,
        column_sums,
        betas,
        checks,
    }
}

impl fmt::Display for CoefficientTable {
    /// One line per row `k`, entries listed by `i` and separated by `|`, then
    /// the column sums.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "coefficients alpha(k,i), N = {}", self.order)?;
        let n = self.order as usize;
        for k in 0..n {
            let row: Vec<String> = self
                .entries
                .iter()
                .filter(|e| e.k == k)
                .map(|e| e.value.polynomial().to_string())
                .collect();
            writeln!(f, "k={k}: {}", row.join(" | "))?;
        }
        for (l, a) in self.column_sums.iter().enumerate() {
            writeln!(f, "alpha_{l} = {}", a.polynomial())?;
        }
        for (s, b) in self.betas.iter().enumerate() {
            writeln!(f, "beta_{s} = {}", b.polynomial())?;
        }
        write!(f, "checks: {}", if self.checks.all() { "pass" } else { "FAIL" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_row_table() {
        let o = Order::new(3).unwrap();
        let t = coefficient_table(o);
        assert_eq!(t.entries.len(), 6);
        assert!(t.column_sums[0].is_zero());
        assert!(t.column_sums[1].is_zero());
        assert!(t.column_sums[2].is_one());
        assert!(t.checks.all());
        // alpha(2,2) = q^4 = q
        let q1 = CyclotomicRational::q_pow(o, 1);
        assert_eq!(t.entry(2, 2), Some(&q1));
    }

    #[test]
    fn checks_hold_for_small_primes() {
        for n in [2, 3, 5, 7, 11] {
            assert!(coefficient_table(Order::new(n).unwrap()).checks.all(), "N={n}");
        }
    }
}
