//! Graded morphisms between N-complexes, induced maps on amplitude homology,
//! the differential of the morphism complex, and N-homotopies.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::homology::HomologySpace;
use super::{Degree, GradedNComplex};
use crate::cyclotomic::{CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::Matrix;

/// A family of matrices `C_d -> C'_{d + shift}`.
#[derive(Clone, Debug)]
pub struct GradedMorphism {
    source: Arc<GradedNComplex>,
    target: Arc<GradedNComplex>,
    shift: Degree,
    maps: BTreeMap<Degree, Matrix>,
}

fn same_complex(a: &Arc<GradedNComplex>, b: &Arc<GradedNComplex>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl GradedMorphism {
    /// Degrees missing from `maps` get the zero matrix.
    pub fn new(
        source: Arc<GradedNComplex>,
        target: Arc<GradedNComplex>,
        shift: Degree,
        maps: BTreeMap<Degree, Matrix>,
    ) -> Result<Self> {
        if source.order() != target.order() {
            return Err(Error::OrderMismatch {
                left: source.order().get(),
                right: target.order().get(),
            });
        }
        for (&d, m) in &maps {
            let expected = (target.rank(d + shift), source.rank(d));
            if m.shape() != expected {
                return Err(Error::Shape(format!(
                    "component at degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    expected.0,
                    expected.1
                )));
            }
        }
        let maps = maps.into_iter().filter(|(_, m)| !m.is_zero()).collect();
        Ok(GradedMorphism {
            source,
            target,
            shift,
            maps,
        })
    }

    pub fn zero(source: Arc<GradedNComplex>, target: Arc<GradedNComplex>, shift: Degree) -> Self {
        Self::new(source, target, shift, BTreeMap::new()).expect("zero morphism")
    }

    pub fn identity(c: Arc<GradedNComplex>) -> Self {
        let maps = c
            .degrees()
            .map(|d| (d, Matrix::identity(c.order(), c.rank(d))))
            .collect();
        Self::new(c.clone(), c, 0, maps).expect("identity morphism")
    }

    pub fn source(&self) -> &Arc<GradedNComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedNComplex> {
        &self.target
    }

    pub fn shift(&self) -> Degree {
        self.shift
    }

    pub fn order(&self) -> Order {
        self.source.order()
    }

    /// The matrix `C_d -> C'_{d + shift}`.
    pub fn component(&self, d: Degree) -> Matrix {
        self.maps.get(&d).cloned().unwrap_or_else(|| {
            Matrix::zeros(self.order(), self.target.rank(d + self.shift), self.source.rank(d))
        })
    }

    /// Degrees where the morphism may be nonzero.
    pub fn support(&self) -> impl Iterator<Item = Degree> + '_ {
        self.maps.keys().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.maps.is_empty()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.shift != other.shift
            || !same_complex(&self.source, &other.source)
            || !same_complex(&self.target, &other.target)
        {
            return Err(Error::Shape(
                "morphisms differ in source, target or shift".into(),
            ));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, f: impl Fn(&Matrix, &Matrix) -> Matrix) -> Result<Self> {
        self.compatible(other)?;
        let degrees: std::collections::BTreeSet<Degree> =
            self.support().chain(other.support()).collect();
        let maps = degrees
            .into_iter()
            .map(|d| (d, f(&self.component(d), &other.component(d))))
            .collect();
        Self::new(self.source.clone(), self.target.clone(), self.shift, maps)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, Matrix::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, Matrix::sub)
    }

    pub fn scale(&self, c: &CyclotomicRational) -> Self {
        let maps = self.maps.iter().map(|(&d, m)| (d, m.scale(c))).collect();
        Self::new(self.source.clone(), self.target.clone(), self.shift, maps)
            .expect("scaling keeps shapes")
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if !same_complex(&self.target, &other.source) {
            return Err(Error::Shape("composition across different complexes".into()));
        }
        let maps = self
            .support()
            .map(|d| (d, other.component(d + self.shift).mul(&self.component(d))))
            .collect();
        Self::new(
            self.source.clone(),
            other.target.clone(),
            self.shift + other.shift,
            maps,
        )
    }

    /// Equality of every component (same source, target and shift).
    pub fn same_maps(&self, other: &Self) -> bool {
        self.sub(other).map(|d| d.is_zero()).unwrap_or(false)
    }

    /// First degree where `f ∂ != ∂' f`, if any.
    pub fn first_non_commuting_degree(&self) -> Option<Degree> {
        let lo = self.source.lo().min(self.target.lo() - self.shift);
        let hi = self.source.hi().max(self.target.hi() - self.shift) + 1;
        (lo..=hi).find(|&d| {
            let left = self.target.border(d + self.shift).mul(&self.component(d));
            let right = self.component(d - 1).mul(&self.source.border(d));
            left != right
        })
    }
}

/// Whether a degree-0 family commutes with the borders.
pub fn check_chain_map(f: &GradedMorphism) -> Result<bool> {
    if f.shift != 0 {
        return Err(Error::Precondition(format!(
            "chain map check needs degree shift 0, got {}",
            f.shift
        )));
    }
    Ok(f.first_non_commuting_degree().is_none())
}

/// Matrix of the induced map `H_{m,n}(source) -> H_{m,n + shift}(target)`.
///
/// The caller guarantees that `f` sends amplitude-`m` cycles to cycles.
pub fn induced_map_at(f: &GradedMorphism, m: u32, n: Degree) -> Result<Matrix> {
    let from = HomologySpace::new(&f.source, m, n)?;
    let to = HomologySpace::new(&f.target, m, n + f.shift)?;
    let component = f.component(n);
    let columns = from
        .representatives()
        .iter()
        .map(|z| to.class_of(&component.mul_vec(z)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(f.order(), to.dim(), &columns))
}

/// Induced maps on amplitude-`m` homology, one matrix per source degree.
pub fn induced_homology_map(f: &GradedMorphism, m: u32) -> Result<BTreeMap<Degree, Matrix>> {
    if !check_chain_map(f)? {
        return Err(Error::NotChainMap(
            f.first_non_commuting_degree().unwrap_or_default(),
        ));
    }
    f.source
        .degrees()
        .map(|n| induced_map_at(f, m, n).map(|mat| (n, mat)))
        .collect()
}

/// `𝔇(f) = Σ_{i=0}^{N-1} q^{i(deg f + 1)} δ^i f ∂^{N-i-1}`.
///
/// `deg f` is the shift of `f`; the result has shift `deg f - (N - 1)`.
pub fn hom_differential(f: &GradedMorphism) -> Result<GradedMorphism> {
    let order = f.order();
    let n = order.get() as Degree;
    let out_shift = f.shift - (n - 1);
    let maps = f
        .source
        .degrees()
        .map(|d| {
            let mut acc = Matrix::zeros(order, f.target.rank(d + out_shift), f.source.rank(d));
            for i in 0..n {
                let inner = d - (n - 1 - i);
                let weight = CyclotomicRational::q_pow(order, i * (f.shift + 1));
                let term = f
                    .target
                    .border_power(i as usize, inner + f.shift)
                    .mul(&f.component(inner))
                    .mul(&f.source.border_power((n - 1 - i) as usize, d));
                acc = acc.add(&term.scale(&weight));
            }
            (d, acc)
        })
        .collect();
    GradedMorphism::new(f.source.clone(), f.target.clone(), out_shift, maps)
}

/// A family `K_0, ..., K_{N-1}` of morphisms of shift `N - 1`.
#[derive(Clone, Debug)]
pub struct HomotopyWitness {
    components: Vec<GradedMorphism>,
}

impl HomotopyWitness {
    pub fn new(components: Vec<GradedMorphism>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::Shape("empty homotopy witness".into()));
        };
        let n = first.order().get() as usize;
        if components.len() != n {
            return Err(Error::Shape(format!(
                "homotopy witness needs {n} components, got {}",
                components.len()
            )));
        }
        for k in &components {
            if k.shift != n as Degree - 1 {
                return Err(Error::Shape(format!(
                    "homotopy components must have shift {}, got {}",
                    n - 1,
                    k.shift
                )));
            }
            first.compatible(k)?;
        }
        Ok(HomotopyWitness { components })
    }

    /// The witness with every `K_m` equal to `k`.
    pub fn uniform(k: GradedMorphism) -> Result<Self> {
        let n = k.order().get() as usize;
        Self::new(vec![k; n])
    }

    pub fn components(&self) -> &[GradedMorphism] {
        &self.components
    }

    /// `Σ_m (∂')^m K_m ∂^{N-m-1}` as a degree-0 morphism.
    pub fn sum(&self) -> GradedMorphism {
        let first = &self.components[0];
        let order = first.order();
        let n = order.get() as Degree;
        let (source, target) = (first.source.clone(), first.target.clone());
        let maps = source
            .degrees()
            .map(|d| {
                let mut acc = Matrix::zeros(order, target.rank(d), source.rank(d));
                for (m, k) in self.components.iter().enumerate() {
                    let m = m as Degree;
                    let inner = d - (n - m - 1);
                    let term = target
                        .border_power(m as usize, inner + n - 1)
                        .mul(&k.component(inner))
                        .mul(&source.border_power((n - m - 1) as usize, d));
                    acc = acc.add(&term);
                }
                (d, acc)
            })
            .collect();
        GradedMorphism::new(source, target, 0, maps).expect("homotopy sum shapes")
    }
}

/// Whether `Σ_m (∂')^m K_m ∂^{N-m-1} = f - g` exactly.
pub fn check_homotopy(k: &HomotopyWitness, f: &GradedMorphism, g: &GradedMorphism) -> Result<bool> {
    if f.shift != 0 || g.shift != 0 {
        return Err(Error::Shape("homotopy endpoints must have shift 0".into()));
    }
    let sum = k.sum();
    let diff = f.sub(g)?;
    sum.compatible(&diff)?;
    Ok(sum.same_maps(&diff))
}
