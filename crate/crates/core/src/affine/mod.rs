//! Affine singular q-chains on convex subsets of rational Euclidean space.
//!
//! A singular simplex is taken to be affine, so it is determined by its
//! ordered vertex tuple. The face `∂_j` drops vertex `j`, and the convex
//! product of two affine simplices is the affine simplex on the concatenated
//! vertex tuple: for affine `τ`, `|α| τ(α / |α|) = Σ α_i x_i`, so the pointwise
//! interpolation formula lands exactly on that simplex. Degenerate simplices
//! (repeated vertices) are ordinary basis elements.

mod homotopy;
mod newton;
mod table;

pub use homotopy::{
    augmentation_eps, homotopy_identity_check, homotopy_k, homotopy_residual, homotopy_sum,
    index_map_eta, index_morphism, phat_chain, section_phat, HomotopyResidual,
};
pub use newton::{
    cone_border_check, leibnitz_check, newton_polynomial_check, newton_polynomial_sides,
    newton_term, star, tail1_check, tail2_check, tail3_check, NewtonOperand,
};
pub use table::{coefficient_table, CoefficientTable, TableChecks};

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;

use crate::cyclotomic::{CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::ncomplex::Degree;

pub type Point = Vec<BigRational>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineSimplex {
    ambient: usize,
    vertices: Vec<Point>,
}

impl AffineSimplex {
    pub fn new(vertices: Vec<Point>) -> Result<Self> {
        let ambient = vertices
            .first()
            .ok_or_else(|| Error::Shape("a simplex needs at least one vertex".into()))?
            .len();
        if let Some(v) = vertices.iter().find(|v| v.len() != ambient) {
            return Err(Error::Shape(format!(
                "vertex of dimension {} in a simplex of ambient dimension {ambient}",
                v.len()
            )));
        }
        Ok(AffineSimplex { ambient, vertices })
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(
            vertices
                .iter()
                .map(|v| v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }

    /// The degenerate simplex with `n + 1` copies of `p`.
    pub fn constant(p: Point, n: usize) -> Self {
        AffineSimplex {
            ambient: p.len(),
            vertices: vec![p; n + 1],
        }
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, j: usize) -> &Point {
        &self.vertices[j]
    }

    /// Drops vertex `j`.
    pub fn face(&self, j: usize) -> Result<Self> {
        let n = self.dim();
        if n == 0 || j > n {
            return Err(Error::OutOfRange {
                what: "face index",
                value: j as i64,
                lo: 0,
                hi: n as i64 - if n == 0 { 1 } else { 0 },
            });
        }
        Ok(self.face_unchecked(j))
    }

    fn face_unchecked(&self, j: usize) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.remove(j);
        AffineSimplex {
            ambient: self.ambient,
            vertices,
        }
    }

    /// The simplex on the concatenated vertex tuple.
    pub fn join(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().cloned());
        Ok(AffineSimplex {
            ambient: self.ambient,
            vertices,
        })
    }
}

impl fmt::Display for AffineSimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, x) in v.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        write!(f, ">")
    }
}

/// A homogeneous linear combination of affine simplices over `Q(q)`.
///
/// Chains of negative degree are always zero; they appear as borders of
/// 0-chains and keep degree arithmetic uniform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineChain {
    order: Order,
    degree: Degree,
    ambient: usize,
    terms: BTreeMap<AffineSimplex, CyclotomicRational>,
}

impl AffineChain {
    pub fn zero(order: Order, degree: Degree, ambient: usize) -> Self {
        AffineChain {
            order,
            degree,
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn simplex(order: Order, s: AffineSimplex) -> Self {
        Self::term(CyclotomicRational::one(order), s)
    }

    pub fn term(coeff: CyclotomicRational, s: AffineSimplex) -> Self {
        let mut c = Self::zero(coeff.order(), s.dim() as Degree, s.ambient());
        c.add_term(s, coeff);
        c
    }

    /// Builds a chain from `(coefficient, simplex)` pairs, checking that all
    /// simplices share a degree and an ambient dimension.
    pub fn from_terms(
        order: Order,
        degree: Degree,
        ambient: usize,
        terms: impl IntoIterator<Item = (CyclotomicRational, AffineSimplex)>,
    ) -> Result<Self> {
        let mut c = Self::zero(order, degree, ambient);
        for (a, s) in terms {
            if s.dim() as Degree != degree || s.ambient() != ambient {
                return Err(Error::Shape(format!(
                    "simplex of dimension {} in R^{} inside a {degree}-chain in R^{ambient}",
                    s.dim(),
                    s.ambient()
                )));
            }
            if a.order() != order {
                return Err(Error::OrderMismatch {
                    left: order.get(),
                    right: a.order().get(),
                });
            }
            c.add_term(s, a);
        }
        Ok(c)
    }

    fn add_term(&mut self, s: AffineSimplex, a: CyclotomicRational) {
        if a.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &a;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(a);
            }
        }
    }

    pub fn order(&self) -> Order {
        self.order
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn terms(&self) -> &BTreeMap<AffineSimplex, CyclotomicRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients.
    pub fn coefficient_sum(&self) -> CyclotomicRational {
        self.terms
            .values()
            .fold(CyclotomicRational::zero(self.order), |acc, a| acc + a)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order.get(),
                right: other.order.get(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::Shape(format!(
                "ambient dimensions {} and {} differ",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Shape(format!(
                "adding chains of degrees {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        let rest = if self.is_zero() { &self.terms } else { &other.terms };
        for (s, a) in rest {
            out.add_term(s.clone(), a.clone());
        }
        Ok(out)
    }

    /// Panicking addition for chains known to be compatible.
    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("compatible chains")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-CyclotomicRational::one(self.order))
    }

    pub fn scale(&self, a: &CyclotomicRational) -> Self {
        let mut out = Self::zero(self.order, self.degree, self.ambient);
        for (s, x) in &self.terms {
            out.add_term(s.clone(), a * x);
        }
        out
    }

    /// `∂ = Σ_i q^i ∂_i`; zero on degree 0.
    pub fn border(&self) -> Self {
        let mut out = Self::zero(self.order, self.degree - 1, self.ambient);
        if self.degree <= 0 {
            return out;
        }
        let powers: Vec<CyclotomicRational> = (0..=self.degree)
            .map(|i| CyclotomicRational::q_pow(self.order, i))
            .collect();
        for (s, a) in &self.terms {
            for (i, w) in powers.iter().enumerate() {
                out.add_term(s.face_unchecked(i), w * a);
            }
        }
        out
    }

    pub fn border_power(&self, k: usize) -> Self {
        let mut acc = self.clone();
        for _ in 0..k {
            if acc.is_zero() {
                acc.degree -= 1;
                continue;
            }
            acc = acc.border();
        }
        acc
    }
}

impl fmt::Display for AffineChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{a}*{s}")?;
        }
        Ok(())
    }
}

pub fn affine_border(c: &AffineChain) -> AffineChain {
    c.border()
}

/// Bilinear extension of vertex concatenation; degree `m + n + 1`.
pub fn convex_product(tau: &AffineChain, sigma: &AffineChain) -> Result<AffineChain> {
    tau.check_compatible(sigma)?;
    let mut out = AffineChain::zero(tau.order, tau.degree + sigma.degree + 1, tau.ambient);
    for (t, a) in &tau.terms {
        for (s, b) in &sigma.terms {
            out.add_term(t.join(s)?, a * b);
        }
    }
    Ok(out)
}
