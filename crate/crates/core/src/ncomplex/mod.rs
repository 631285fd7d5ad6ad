//! Graded N-complexes: finitely supported graded `Q(q)`-vector spaces with a
//! degree `-1` border map whose `N`-th power vanishes.
//!
//! A complex is stored over a degree window `[lo, hi]`; every degree outside
//! the window is the zero space. The `truncated` flag records that the
//! complex being modelled continues above `hi` (for instance the chains of a
//! point), in which case borders landing near the top are not fully known and
//! the affected homology entries are flagged as unreliable.

mod homology;
mod morphism;

pub use homology::{
    amplitude_homology, homology_report, AmplitudeHomologyReport, HomologyEntry, HomologySpace,
};
pub use morphism::{
    check_chain_map, check_homotopy, hom_differential, induced_homology_map, induced_map_at,
    GradedMorphism, HomotopyWitness,
};

use std::collections::BTreeMap;

use crate::cyclotomic::{qbasic, CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::Matrix;

/// Homological degree.
pub type Degree = i64;

#[derive(Clone, Debug, PartialEq)]
pub struct GradedNComplex {
    order: Order,
    lo: Degree,
    ranks: Vec<usize>,
    /// `borders[i]` is the border leaving degree `lo + i`; `borders[0]` has no rows.
    borders: Vec<Matrix>,
    truncated: bool,
}

impl GradedNComplex {
    /// Builds a complex on the window `[lo, lo + ranks.len() - 1]`.
    ///
    /// `borders` maps a degree `d` to the matrix of the border `C_d -> C_{d-1}`
    /// (shape `rank(d-1) x rank(d)`); absent degrees get the zero map. Only the
    /// structure is checked here; nilpotency is checked by
    /// [`GradedNComplex::check_nilpotent`].
    pub fn new(
        order: Order,
        lo: Degree,
        ranks: Vec<usize>,
        mut borders: BTreeMap<Degree, Matrix>,
        truncated: bool,
    ) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::Shape("degree window is empty".into()));
        }
        let hi = lo + ranks.len() as Degree - 1;
        if let Some((&d, _)) = borders.iter().find(|(&d, _)| d < lo || d > hi) {
            return Err(Error::Shape(format!(
                "border at degree {d} lies outside the window [{lo}, {hi}]"
            )));
        }
        let rank = |d: Degree| -> usize {
            if d < lo || d > hi {
                0
            } else {
                ranks[(d - lo) as usize]
            }
        };
        let mut stored = Vec::with_capacity(ranks.len());
        for d in lo..=hi {
            let expected = (rank(d - 1), rank(d));
            let m = match borders.remove(&d) {
                Some(m) => {
                    if m.ctx() != order {
                        return Err(Error::OrderMismatch {
                            left: order.get(),
                            right: m.ctx().get(),
                        });
                    }
                    if m.shape() != expected {
                        return Err(Error::Shape(format!(
                            "border at degree {d} is {}x{}, expected {}x{}",
                            m.rows(),
                            m.cols(),
                            expected.0,
                            expected.1
                        )));
                    }
                    m
                }
                None => Matrix::zeros(order, expected.0, expected.1),
            };
            stored.push(m);
        }
        Ok(GradedNComplex {
            order,
            lo,
            ranks,
            borders: stored,
            truncated,
        })
    }

    /// Like [`GradedNComplex::new`] but also rejects `∂^N != 0`.
    pub fn new_validated(
        order: Order,
        lo: Degree,
        ranks: Vec<usize>,
        borders: BTreeMap<Degree, Matrix>,
        truncated: bool,
    ) -> Result<Self> {
        let c = Self::new(order, lo, ranks, borders, truncated)?;
        match c.check_nilpotent() {
            None => Ok(c),
            Some(d) => Err(Error::Precondition(format!(
                "the {}-th power of the border is nonzero starting at degree {d}",
                order
            ))),
        }
    }

    /// The complex with every space zero on `[lo, hi]`.
    pub fn zero(order: Order, lo: Degree, hi: Degree) -> Self {
        Self::new(
            order,
            lo,
            vec![0; (hi - lo + 1).max(1) as usize],
            BTreeMap::new(),
            false,
        )
        .expect("zero complex is well formed")
    }

    #[inline]
    pub fn order(&self) -> Order {
        self.order
    }

    #[inline]
    pub fn lo(&self) -> Degree {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> Degree {
        self.lo + self.ranks.len() as Degree - 1
    }

    #[inline]
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn degrees(&self) -> impl Iterator<Item = Degree> {
        self.lo..=self.hi()
    }

    pub fn rank(&self, d: Degree) -> usize {
        if d < self.lo || d > self.hi() {
            0
        } else {
            self.ranks[(d - self.lo) as usize]
        }
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The border `C_d -> C_{d-1}`; the zero map outside the window.
    pub fn border(&self, d: Degree) -> Matrix {
        if d < self.lo || d > self.hi() {
            Matrix::zeros(self.order, self.rank(d - 1), self.rank(d))
        } else {
            self.borders[(d - self.lo) as usize].clone()
        }
    }

    /// Matrix of `∂^k` starting at degree `d` (shape `rank(d-k) x rank(d)`).
    pub fn border_power(&self, k: usize, d: Degree) -> Matrix {
        let mut acc = Matrix::identity(self.order, self.rank(d));
        for step in 0..k as Degree {
            acc = self.border(d - step).mul(&acc);
        }
        acc
    }

    /// Returns the first degree at which `∂^N` fails to vanish, or `None`
    /// when the complex is an N-complex.
    pub fn check_nilpotent(&self) -> Option<Degree> {
        let n = self.order.get() as usize;
        self.degrees()
            .find(|&d| !self.border_power(n, d).is_zero())
    }

    pub fn is_valid(&self) -> bool {
        self.check_nilpotent().is_none()
    }

    /// Whether amplitude-`m` homology at degree `n` sees every border that can
    /// land in it.
    pub fn is_reliable(&self, m: u32, n: Degree) -> bool {
        !self.truncated || n + (self.order.get() - m) as Degree <= self.hi()
    }

    /// Same spaces and borders regardless of the truncation flag.
    pub fn same_data(&self, other: &Self) -> bool {
        self.order == other.order
            && self.lo == other.lo
            && self.ranks == other.ranks
            && self.borders == other.borders
    }
}

/// The N-complex of q-chains of a point on degrees `0..=hi`: rank one in each
/// degree, with border `[n+1]_q` leaving degree `n`.
pub fn build_point_complex(order: Order, hi: Degree) -> GradedNComplex {
    let hi = hi.max(0);
    let borders = (1..=hi)
        .map(|n| {
            let entry: CyclotomicRational = qbasic(order, (n + 1) as u64).into();
            (n, Matrix::scalar(entry))
        })
        .collect();
    GradedNComplex::new(order, 0, vec![1; hi as usize + 1], borders, true)
        .expect("point complex is well formed")
}

/// The finite complex `Z[q] <-[2]- Z[q] <-[3]- ... <-[N-1]- Z[q]` on degrees
/// `0..=N-2`, the target of the index map.
pub fn build_scalar_complex(order: Order) -> GradedNComplex {
    let top = order.get() as Degree - 2;
    let borders = (1..=top)
        .map(|k| {
            let entry: CyclotomicRational = qbasic(order, (k + 1) as u64).into();
            (k, Matrix::scalar(entry))
        })
        .collect();
    GradedNComplex::new(order, 0, vec![1; top as usize + 1], borders, false)
        .expect("scalar complex is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn one(o: Order) -> Matrix {
        Matrix::scalar(CyclotomicRational::one(o))
    }

    #[test]
    fn point_complex_is_nilpotent() {
        for n in [2, 3, 5, 7] {
            assert!(build_point_complex(ord(n), 2 * n as Degree + 1).is_valid());
        }
        let c = build_point_complex(ord(3), 2);
        assert_eq!(c.border(1), Matrix::scalar(qbasic(ord(3), 2).into()));
        assert!(c.border(2).is_zero());
        let single = build_point_complex(ord(5), 0);
        assert_eq!(single.ranks(), &[1]);
    }

    #[test]
    fn classical_point_alternates() {
        let c = build_point_complex(ord(2), 3);
        assert!(c.border(1).is_zero());
        assert_eq!(c.border(2), one(ord(2)));
        assert!(c.border(3).is_zero());
    }

    #[test]
    fn two_identities_fail_for_order_two() {
        let o = ord(2);
        let borders = BTreeMap::from([(1, one(o)), (2, one(o))]);
        let c = GradedNComplex::new(o, 0, vec![1, 1, 1], borders, false).unwrap();
        assert_eq!(c.check_nilpotent(), Some(2));
        let single = GradedNComplex::new(o, 0, vec![1, 1], BTreeMap::from([(1, one(o))]), false);
        assert!(single.unwrap().is_valid());
    }

    #[test]
    fn scalar_complex_shapes() {
        assert_eq!(build_scalar_complex(ord(3)).ranks(), &[1, 1]);
        assert_eq!(build_scalar_complex(ord(2)).ranks(), &[1]);
        let c7 = build_scalar_complex(ord(7));
        assert_eq!(c7.ranks().len(), 6);
        assert!(c7.is_valid());
        assert!((1..=5).all(|d| !c7.border(d).is_zero()));
        assert!(build_scalar_complex(ord(5)).is_valid());
    }

    #[test]
    fn border_power_examples() {
        let c = build_point_complex(ord(3), 4);
        assert_eq!(c.border_power(0, 2), Matrix::identity(ord(3), 1));
        assert!(c.border_power(2, 2).is_zero());
        let c5 = build_point_complex(ord(5), 4);
        let expected = &qbasic(ord(5), 3) * &qbasic(ord(5), 2);
        assert_eq!(c5.border_power(2, 2), Matrix::scalar(expected.into()));
        // leaving the window gives an empty target
        assert_eq!(c5.border_power(3, 1).shape(), (0, 1));
    }

    #[test]
    fn structural_errors() {
        let o = ord(3);
        let bad = GradedNComplex::new(o, 0, vec![1, 2], BTreeMap::from([(1, one(o))]), false);
        assert!(matches!(bad, Err(Error::Shape(_))));
        let outside = GradedNComplex::new(o, 0, vec![1], BTreeMap::from([(4, one(o))]), false);
        assert!(matches!(outside, Err(Error::Shape(_))));
        let mixed = GradedNComplex::new(o, 0, vec![1, 1], BTreeMap::from([(1, one(ord(5)))]), false);
        assert!(matches!(mixed, Err(Error::OrderMismatch { .. })));
        assert!(GradedNComplex::new(o, 0, vec![], BTreeMap::new(), false).is_err());
    }

    #[test]
    fn reliability_window() {
        let c = build_point_complex(ord(3), 8);
        assert!(c.is_reliable(1, 6));
        assert!(!c.is_reliable(1, 7));
        assert!(c.is_reliable(2, 7));
        assert!(!c.is_reliable(2, 8));
        assert!(build_scalar_complex(ord(3)).is_reliable(1, 1));
    }
}
