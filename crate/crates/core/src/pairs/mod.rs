//! Relative chains of subcomplex pairs and triples, and reduced homology.
//!
//! For face-closed `B ⊆ A ⊆ X` the chains `C(A, B)` have the cells of `A`
//! outside `B` as basis, with the border of `X` followed by the projection
//! that forgets the cells of `B`. Pairs are the case `B = ∅` on the sub side
//! and `A = X` on the total side; both sequences come out of
//! [`ShortExactSequence`].

mod sequence;

pub use sequence::{
    ExactnessReport, ExcludedJunction, Junction, JunctionAudit, ShortExactSequence,
};

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::cyclotomic::{CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::ncomplex::{
    build_point_complex, homology_report, induced_map_at, AmplitudeHomologyReport, Degree,
    GradedMorphism, GradedNComplex, HomologyEntry,
};
use crate::simplicial::{chain_border, to_ncomplex, QChain, SemiSimplicialSet};
use crate::Matrix;

/// A face-closed set of cells of a fixed semi-simplicial set, as sorted
/// indices per dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSet {
    cells: Vec<BTreeSet<usize>>,
}

impl CellSet {
    pub fn empty(x: &SemiSimplicialSet) -> Self {
        CellSet {
            cells: vec![BTreeSet::new(); x.all_cells().len()],
        }
    }

    pub fn full(x: &SemiSimplicialSet) -> Self {
        CellSet {
            cells: x.all_cells().iter().map(|row| (0..row.len()).collect()).collect(),
        }
    }

    /// Collects named cells and checks closure under every face map.
    pub fn from_names<S: AsRef<str>>(x: &SemiSimplicialSet, names: &[S]) -> Result<Self> {
        let mut set = Self::empty(x);
        for name in names {
            let name = name.as_ref();
            let (n, idx) = x
                .locate(name)
                .ok_or_else(|| Error::InvalidSimplicial(format!("unknown cell `{name}`")))?;
            set.cells[n].insert(idx);
        }
        set.check_closed(x)?;
        Ok(set)
    }

    fn check_closed(&self, x: &SemiSimplicialSet) -> Result<()> {
        for n in 1..self.cells.len() {
            for &c in &self.cells[n] {
                if let Some(i) = (0..=n).find(|&i| !self.cells[n - 1].contains(&x.face(n, i, c))) {
                    return Err(Error::NotFaceClosed {
                        cell: x.cell_name(n, c).to_string(),
                        face: i,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn contains(&self, n: usize, idx: usize) -> bool {
        self.cells.get(n).is_some_and(|s| s.contains(&idx))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.cells.iter().zip(&other.cells).all(|(a, b)| a.is_subset(b))
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(BTreeSet::is_empty)
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(BTreeSet::len).sum()
    }
}

/// The cells of `keep` outside `drop`, in increasing index order per degree.
fn relative_basis(x: &SemiSimplicialSet, keep: &CellSet, drop: &CellSet, hi: Degree) -> Vec<Vec<usize>> {
    (0..=hi.max(0))
        .map(|n| {
            let n = n as usize;
            (0..x.cell_count(n as Degree))
                .filter(|&c| keep.contains(n, c) && !drop.contains(n, c))
                .collect()
        })
        .collect()
}

/// `C(keep, drop)` on degrees `0..=hi` together with its basis.
fn relative_chains(
    x: &SemiSimplicialSet,
    order: Order,
    hi: Degree,
    keep: &CellSet,
    drop: &CellSet,
) -> Result<(GradedNComplex, Vec<Vec<usize>>)> {
    x.ensure_valid()?;
    let basis = relative_basis(x, keep, drop, hi);
    let position: Vec<BTreeMap<usize, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &c)| (c, i)).collect())
        .collect();
    let mut borders = BTreeMap::new();
    for n in 1..basis.len() {
        let (rows, cols) = (basis[n - 1].len(), basis[n].len());
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = Matrix::zeros(order, rows, cols);
        for (j, &cell) in basis[n].iter().enumerate() {
            let b = chain_border(x, order, &QChain::basis(order, n as Degree, cell));
            for (face, a) in b.terms() {
                if let Some(&r) = position[n - 1].get(face) {
                    m.set(r, j, a.clone());
                }
            }
        }
        borders.insert(n as Degree, m);
    }
    let ranks = basis.iter().map(Vec::len).collect();
    let truncated = x.truncated() || x.top_dim().is_some_and(|t| t as Degree > hi);
    let c = GradedNComplex::new(order, 0, ranks, borders, truncated)?;
    Ok((c, basis))
}

/// The matrix sending a basis cell to the same cell, or to zero when the
/// target basis lacks it.
fn cell_identity(
    order: Order,
    source: &Arc<GradedNComplex>,
    target: &Arc<GradedNComplex>,
    source_basis: &[Vec<usize>],
    target_basis: &[Vec<usize>],
) -> Result<GradedMorphism> {
    let maps = (0..source_basis.len())
        .map(|n| {
            let mut m = Matrix::zeros(order, target_basis[n].len(), source_basis[n].len());
            for (j, c) in source_basis[n].iter().enumerate() {
                if let Ok(i) = target_basis[n].binary_search(c) {
                    m.set(i, j, CyclotomicRational::one(order));
                }
            }
            (n as Degree, m)
        })
        .collect();
    GradedMorphism::new(source.clone(), target.clone(), 0, maps)
}

/// The sequence `0 -> C(A, B) -> C(X, B) -> C(X, A) -> 0` for `B ⊆ A ⊆ X`.
fn triple_sequence(
    x: &SemiSimplicialSet,
    order: Order,
    hi: Degree,
    a: &CellSet,
    b: &CellSet,
) -> Result<ShortExactSequence> {
    if !b.is_subset(a) {
        return Err(Error::Precondition("the smaller subcomplex must lie in the larger".into()));
    }
    let all = CellSet::full(x);
    let (sub, sub_basis) = relative_chains(x, order, hi, a, b)?;
    let (total, total_basis) = relative_chains(x, order, hi, &all, b)?;
    let (quot, quot_basis) = relative_chains(x, order, hi, &all, a)?;
    let (sub, total, quot) = (Arc::new(sub), Arc::new(total), Arc::new(quot));
    let inclusion = cell_identity(order, &sub, &total, &sub_basis, &total_basis)?;
    let projection = cell_identity(order, &total, &quot, &total_basis, &quot_basis)?;
    ShortExactSequence::new(inclusion, projection)
}

/// A semi-simplicial set with a face-closed subcomplex (possibly empty).
#[derive(Clone, Debug)]
pub struct SimplicialPair {
    x: SemiSimplicialSet,
    a: CellSet,
}

impl SimplicialPair {
    pub fn new<S: AsRef<str>>(x: SemiSimplicialSet, subcomplex: &[S]) -> Result<Self> {
        let a = CellSet::from_names(&x, subcomplex)?;
        Ok(SimplicialPair { x, a })
    }

    pub fn space(&self) -> &SemiSimplicialSet {
        &self.x
    }

    pub fn subcomplex(&self) -> &CellSet {
        &self.a
    }

    /// `C(X, A)`.
    pub fn relative_complex(&self, order: Order, hi: Degree) -> Result<GradedNComplex> {
        Ok(relative_chains(&self.x, order, hi, &CellSet::full(&self.x), &self.a)?.0)
    }

    /// `C(A)`.
    pub fn subcomplex_complex(&self, order: Order, hi: Degree) -> Result<GradedNComplex> {
        Ok(relative_chains(&self.x, order, hi, &self.a, &CellSet::empty(&self.x))?.0)
    }

    /// `0 -> C(A) -> C(X) -> C(X, A) -> 0`.
    pub fn sequence(&self, order: Order, hi: Degree) -> Result<ShortExactSequence> {
        triple_sequence(&self.x, order, hi, &self.a, &CellSet::empty(&self.x))
    }

    /// `δ: H_{m,n}(X, A) -> H_{N-m,n-m}(A)`.
    pub fn connecting_morphism(&self, order: Order, hi: Degree, m: u32, n: Degree) -> Result<Matrix> {
        self.sequence(order, hi)?.connecting_map(m, n)
    }

    pub fn exactness_audit(&self, order: Order, hi: Degree) -> Result<ExactnessReport> {
        self.sequence(order, hi)?.exactness_audit(0, hi)
    }
}

/// A triple `B ⊆ A ⊆ X` of face-closed subcomplexes.
#[derive(Clone, Debug)]
pub struct SimplicialTriple {
    x: SemiSimplicialSet,
    a: CellSet,
    b: CellSet,
}

impl SimplicialTriple {
    pub fn new<S: AsRef<str>>(x: SemiSimplicialSet, a: &[S], b: &[S]) -> Result<Self> {
        let a = CellSet::from_names(&x, a)?;
        let b = CellSet::from_names(&x, b)?;
        if !b.is_subset(&a) {
            return Err(Error::Precondition("the smaller subcomplex must lie in the larger".into()));
        }
        Ok(SimplicialTriple { x, a, b })
    }

    /// `0 -> C(A, B) -> C(X, B) -> C(X, A) -> 0`.
    pub fn sequence(&self, order: Order, hi: Degree) -> Result<ShortExactSequence> {
        triple_sequence(&self.x, order, hi, &self.a, &self.b)
    }

    pub fn exactness_audit(&self, order: Order, hi: Degree) -> Result<ExactnessReport> {
        self.sequence(order, hi)?.exactness_audit(0, hi)
    }
}

/// Reduced homology with the comparison between the full and reduced tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducedHomologyReport {
    pub full: AmplitudeHomologyReport,
    pub reduced: AmplitudeHomologyReport,
    /// `dim H = dim reduced + 1` exactly at `0 <= n = m - 1 <= N - 2` (the
    /// point pattern), over every reliable entry.
    pub matches_point_pattern: bool,
    /// The same identity with the summand placed at `1 <= n = m <= N - 2`.
    pub matches_shifted_pattern: bool,
}

/// The augmentation `C(X) -> C(point)`, every cell going to the point cell.
pub fn augmentation_morphism(x: &SemiSimplicialSet, order: Order, hi: Degree) -> Result<GradedMorphism> {
    let source = Arc::new(to_ncomplex(x, order, hi)?);
    // the target reaches N degrees higher so every point entry in the window is reliable
    let target = Arc::new(build_point_complex(order, hi + order.get() as Degree));
    let maps = source
        .degrees()
        .map(|d| {
            let cols = source.rank(d);
            let row = vec![CyclotomicRational::one(order); cols];
            (d, Matrix::from_rows(order, cols, vec![row]).expect("one row"))
        })
        .collect();
    GradedMorphism::new(source, target, 0, maps)
}

/// Kernel dimensions of the map induced on homology by the augmentation.
pub fn reduced_homology(x: &SemiSimplicialSet, order: Order, hi: Degree) -> Result<ReducedHomologyReport> {
    if x.is_empty() {
        return Err(Error::Precondition("reduced homology needs a nonempty model".into()));
    }
    let gamma = augmentation_morphism(x, order, hi)?;
    let full = homology_report(gamma.source());
    let mut entries = Vec::with_capacity(full.entries.len());
    for e in &full.entries {
        let induced = induced_map_at(&gamma, e.m, e.n)?;
        entries.push(HomologyEntry {
            dim: e.dim - induced.rank(),
            ..e.clone()
        });
    }
    let reduced = AmplitudeHomologyReport {
        entries,
        ..full.clone()
    };
    let top = order.get() as Degree - 2;
    let pattern = |shifted: bool| {
        full.entries.iter().zip(&reduced.entries).all(|(f, r)| {
            if !f.reliable {
                return true;
            }
            let m = f.m as Degree;
            let marked = if shifted {
                1 <= f.n && f.n == m && f.n <= top
            } else {
                0 <= f.n && f.n == m - 1 && f.n <= top
            };
            f.dim == r.dim + usize::from(marked)
        })
    };
    Ok(ReducedHomologyReport {
        matches_point_pattern: pattern(false),
        matches_shifted_pattern: pattern(true),
        full,
        reduced,
    })
}
