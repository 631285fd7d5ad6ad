//! Seeded random instances for the verification suites.
//!
//! Every case draws from its own ChaCha8 stream: the generator is seeded with
//! the run seed and switched to the stream numbered by the case index, so a
//! counterexample is reproduced from `(seed, case)` alone and cases do not
//! depend on the order in which they run.
//!
//! Coordinates are integers or halves in `[-2, 2]`; coefficients are
//! cyclotomic integers with entries in `[-2, 2]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{AffineChain, AffineSimplex, Point};
use crate::cyclotomic::{CyclotomicRational, Order};
use crate::ncomplex::{Degree, GradedMorphism, GradedNComplex};
use crate::simplicial::{QChain, SemiSimplicialSet};
use crate::Matrix;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64, case: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(case);
        Sampler { rng }
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("nonempty choice")
    }

    /// A nonzero element of `Z[q]` with small entries.
    pub fn coefficient(&mut self, order: Order) -> CyclotomicRational {
        loop {
            let coeffs: Vec<i64> = (0..order.dim()).map(|_| self.range(-2, 2)).collect();
            let c = CyclotomicRational::from_i64s(order, &coeffs).expect("right length");
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn coordinate(&mut self) -> BigRational {
        let den = if self.chance(0.5) { 1 } else { 2 };
        let num = self.range(-2 * den, 2 * den);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn point(&mut self, ambient: usize) -> Point {
        (0..ambient).map(|_| self.coordinate()).collect()
    }

    /// Vertices are drawn independently, so repeated and collinear vertices occur.
    pub fn simplex(&mut self, ambient: usize, dim: usize) -> AffineSimplex {
        let vertices = (0..=dim).map(|_| self.point(ambient)).collect();
        AffineSimplex::new(vertices).expect("uniform ambient dimension")
    }

    pub fn affine_chain(&mut self, order: Order, ambient: usize, degree: usize, max_terms: usize) -> AffineChain {
        let count = 1 + self.index(max_terms.max(1));
        let terms: Vec<_> = (0..count)
            .map(|_| (self.coefficient(order), self.simplex(ambient, degree)))
            .collect();
        AffineChain::from_terms(order, degree as Degree, ambient, terms).expect("homogeneous terms")
    }

    /// A random chain on the cells of dimension `degree`; zero if there are none.
    pub fn qchain(&mut self, x: &SemiSimplicialSet, order: Order, degree: usize, max_terms: usize) -> QChain {
        let cells = x.cell_count(degree as Degree);
        if cells == 0 {
            return QChain::zero(degree as Degree);
        }
        let count = 1 + self.index(max_terms.max(1));
        let terms: Vec<_> = (0..count)
            .map(|_| (self.index(cells), self.coefficient(order)))
            .collect();
        QChain::from_terms(degree as Degree, terms)
    }

    /// A sparse matrix with small cyclotomic entries.
    pub fn matrix(&mut self, order: Order, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(order, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if self.chance(0.4) {
                    m.set(i, j, self.coefficient(order));
                }
            }
        }
        m
    }

    /// A morphism of the given shift with random components in every degree.
    pub fn morphism(
        &mut self,
        source: &Arc<GradedNComplex>,
        target: &Arc<GradedNComplex>,
        shift: Degree,
    ) -> GradedMorphism {
        let order = source.order();
        let maps: BTreeMap<Degree, Matrix> = source
            .degrees()
            .map(|d| (d, self.matrix(order, target.rank(d + shift), source.rank(d))))
            .collect();
        GradedMorphism::new(source.clone(), target.clone(), shift, maps).expect("shapes match")
    }
}
