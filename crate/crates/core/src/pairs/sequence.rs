//! Short exact sequences of N-complexes, their connecting maps, and an
//! instance-level audit of the long exact sequence
//!
//! ```text
//! H_{m,n}(S) -> H_{m,n}(T) -> H_{m,n}(Q) -> H_{N-m,n-m}(S) -> H_{N-m,n-m}(T) -> H_{N-m,n-m}(Q) -> H_{m,n-N}(S)
//! ```

use std::sync::Arc;

use serde::Serialize;

use crate::cyclotomic::CyclotomicRational;
use crate::error::{Error, Result};
use crate::ncomplex::{
    check_chain_map, induced_map_at, Degree, GradedMorphism, GradedNComplex, HomologySpace,
};
use crate::Matrix;

/// `0 -> S -> T -> Q -> 0`, exact in every degree.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    inclusion: GradedMorphism,
    projection: GradedMorphism,
}

impl ShortExactSequence {
    /// Checks that both maps are chain maps, that the composite vanishes and
    /// that the ranks add up to an exact sequence in every degree.
    pub fn new(inclusion: GradedMorphism, projection: GradedMorphism) -> Result<Self> {
        if !Arc::ptr_eq(inclusion.target(), projection.source())
            && inclusion.target() != projection.source()
        {
            return Err(Error::Shape("the middle complexes differ".into()));
        }
        for (name, f) in [("inclusion", &inclusion), ("projection", &projection)] {
            if !check_chain_map(f)? {
                return Err(Error::Precondition(format!("{name} is not a chain map")));
            }
        }
        let total = inclusion.target().clone();
        for d in total.degrees() {
            let i = inclusion.component(d);
            let p = projection.component(d);
            let (s, t, q) = (
                inclusion.source().rank(d),
                total.rank(d),
                projection.target().rank(d),
            );
            if !p.mul(&i).is_zero() || i.rank() != s || p.rank() != q || s + q != t {
                return Err(Error::Precondition(format!(
                    "the sequence is not exact at chain level in degree {d}"
                )));
            }
        }
        Ok(ShortExactSequence {
            inclusion,
            projection,
        })
    }

    pub fn sub(&self) -> &Arc<GradedNComplex> {
        self.inclusion.source()
    }

    pub fn total(&self) -> &Arc<GradedNComplex> {
        self.inclusion.target()
    }

    pub fn quotient(&self) -> &Arc<GradedNComplex> {
        self.projection.target()
    }

    pub fn inclusion(&self) -> &GradedMorphism {
        &self.inclusion
    }

    pub fn projection(&self) -> &GradedMorphism {
        &self.projection
    }

    /// Matrix of `δ: H_{m,n}(Q) -> H_{N-m,n-m}(S)` in representative coordinates.
    pub fn connecting_map(&self, m: u32, n: Degree) -> Result<Matrix> {
        let order = self.total().order();
        let from = HomologySpace::new(self.quotient(), m, n)?;
        let to = HomologySpace::new(self.sub(), order.get() - m, n - m as Degree)?;
        let lift = self.projection.component(n);
        let columns = from
            .representatives()
            .iter()
            .map(|z| {
                let x = lift.solve(z).expect("projection is onto");
                self.connecting_class_in(&to, m, n, &x)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_columns(order, to.dim(), &columns))
    }

    /// Class of `∂^m x` in `H_{N-m,n-m}(S)` for any `x` in `T_n` whose image in
    /// `Q_n` is an amplitude-`m` cycle.
    pub fn connecting_class(&self, m: u32, n: Degree, x: &[CyclotomicRational]) -> Result<Vec<CyclotomicRational>> {
        let order = self.total().order();
        let to = HomologySpace::new(self.sub(), order.get() - m, n - m as Degree)?;
        self.connecting_class_in(&to, m, n, x)
    }

    fn connecting_class_in(
        &self,
        to: &HomologySpace,
        m: u32,
        n: Degree,
        x: &[CyclotomicRational],
    ) -> Result<Vec<CyclotomicRational>> {
        let image = self.total().border_power(m as usize, n).mul_vec(x);
        let y = self
            .inclusion
            .component(n - m as Degree)
            .solve(&image)
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "the image of the chain in the quotient is not an amplitude-{m} cycle"
                ))
            })?;
        to.class_of(&y)
    }

    /// Checks `im = ker` at every junction whose three terms are reliable.
    pub fn exactness_audit(&self, lo: Degree, hi: Degree) -> Result<ExactnessReport> {
        let order = self.total().order();
        let big_n = order.get();
        let mut junctions = Vec::new();
        let mut excluded = Vec::new();
        for m in 1..big_n {
            let mm = m as Degree;
            let comp = big_n - m;
            for n in lo..=hi {
                // H_{m,n}(S) -> H_{m,n}(T) -> H_{m,n}(Q)
                let at_total = (
                    Junction::Total,
                    [
                        self.sub().is_reliable(m, n),
                        self.total().is_reliable(m, n),
                        self.quotient().is_reliable(m, n),
                    ],
                );
                // H_{m,n}(T) -> H_{m,n}(Q) -> H_{N-m,n-m}(S)
                let at_quotient = (
                    Junction::Quotient,
                    [
                        self.total().is_reliable(m, n),
                        self.quotient().is_reliable(m, n),
                        self.sub().is_reliable(comp, n - mm),
                    ],
                );
                // H_{N-m,n+N-m}(Q) -> H_{m,n}(S) -> H_{m,n}(T)
                let at_sub = (
                    Junction::Sub,
                    [
                        self.quotient().is_reliable(comp, n + comp as Degree),
                        self.sub().is_reliable(m, n),
                        self.total().is_reliable(m, n),
                    ],
                );
                for (kind, flags) in [at_total, at_quotient, at_sub] {
                    if flags.iter().all(|&r| r) {
                        junctions.push(self.junction(kind, m, n)?);
                    } else {
                        excluded.push(ExcludedJunction { kind, m, n });
                    }
                }
            }
        }
        Ok(ExactnessReport {
            order: big_n,
            junctions,
            excluded,
        })
    }

    fn junction(&self, kind: Junction, m: u32, n: Degree) -> Result<JunctionAudit> {
        let comp = self.total().order().get() - m;
        let (incoming, outgoing) = match kind {
            Junction::Total => (
                induced_map_at(&self.inclusion, m, n)?,
                induced_map_at(&self.projection, m, n)?,
            ),
            Junction::Quotient => (
                induced_map_at(&self.projection, m, n)?,
                self.connecting_map(m, n)?,
            ),
            Junction::Sub => (
                self.connecting_map(comp, n + comp as Degree)?,
                induced_map_at(&self.inclusion, m, n)?,
            ),
        };
        let middle_dim = incoming.rows();
        let image_rank = incoming.rank();
        let kernel_dim = middle_dim - outgoing.rank();
        let composite_zero = outgoing.mul(&incoming).is_zero();
        Ok(JunctionAudit {
            kind,
            m,
            n,
            middle_dim,
            image_rank,
            kernel_dim,
            composite_zero,
            exact: composite_zero && image_rank == kernel_dim,
        })
    }
}

/// Which term of the long sequence a junction sits at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Junction {
    Sub,
    Total,
    Quotient,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JunctionAudit {
    pub kind: Junction,
    pub m: u32,
    pub n: Degree,
    pub middle_dim: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    pub composite_zero: bool,
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcludedJunction {
    pub kind: Junction,
    pub m: u32,
    pub n: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactnessReport {
    #[serde(rename = "N")]
    pub order: u32,
    pub junctions: Vec<JunctionAudit>,
    pub excluded: Vec<ExcludedJunction>,
}

impl ExactnessReport {
    pub fn passes(&self) -> bool {
        self.junctions.iter().all(|j| j.exact)
    }

    pub fn failures(&self) -> Vec<&JunctionAudit> {
        self.junctions.iter().filter(|j| !j.exact).collect()
    }
}
