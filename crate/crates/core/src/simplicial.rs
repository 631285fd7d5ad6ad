//! Finite semi-simplicial sets and their q-deformed chain complexes.
//!
//! Face maps follow the convention `∂_i ∂_j = ∂_j ∂_{i+1}` for `j <= i`, where
//! `∂_i ∂_j` means "apply `∂_j` first". For simplices given by vertex lists
//! with `∂_i` deleting vertex `i` this is the usual semi-simplicial identity:
//! deleting vertex `i + 1` and then vertex `j <= i` removes the same two
//! original vertices as deleting `j` first and then the vertex now sitting at
//! position `i`.
//!
//! Only face maps are modelled. A finite model computes the homology of the
//! model itself; for `N > 2` that generally differs from the singular
//! homology of its realization (the chains of a point need every dimension).
//! Models that stand for an infinite object carry the `truncated` flag.

use std::collections::{BTreeMap, HashMap};

use crate::cyclotomic::{qfactorial_extended, CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::ncomplex::{Degree, GradedNComplex};
use crate::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiSimplicialSet {
    names: Vec<Vec<String>>,
    /// `faces[n][x]` lists the indices in dimension `n - 1` of `∂_0 x, ..., ∂_n x`.
    faces: Vec<Vec<Vec<usize>>>,
    lookup: HashMap<String, (usize, usize)>,
    truncated: bool,
}

/// A violation of the face identity, as `(i, j, cell)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceViolation {
    pub i: usize,
    pub j: usize,
    pub cell: String,
}

impl SemiSimplicialSet {
    /// Builds a set from named cells per dimension and named face lists.
    ///
    /// `faces[n][x]` must list `n + 1` cells of dimension `n - 1` for every
    /// cell `x` of dimension `n >= 1`. Missing or dangling entries are
    /// structural errors.
    pub fn from_named(
        cells: Vec<Vec<String>>,
        faces: &BTreeMap<usize, BTreeMap<String, Vec<String>>>,
        truncated: bool,
    ) -> Result<Self> {
        let mut lookup = HashMap::new();
        for (n, row) in cells.iter().enumerate() {
            for (idx, name) in row.iter().enumerate() {
                if lookup.insert(name.clone(), (n, idx)).is_some() {
                    return Err(Error::InvalidSimplicial(format!("duplicate cell `{name}`")));
                }
            }
        }
        if let Some(&n) = faces.keys().find(|&&n| n == 0 || n >= cells.len()) {
            return Err(Error::InvalidSimplicial(format!(
                "face table for dimension {n} has no cells to describe"
            )));
        }
        let mut face_idx = vec![Vec::new(); cells.len()];
        face_idx[0] = vec![Vec::new(); cells[0].len()];
        for n in 1..cells.len() {
            let table = faces.get(&n);
            for name in &cells[n] {
                let list = table.and_then(|t| t.get(name)).ok_or_else(|| {
                    Error::InvalidSimplicial(format!("missing face list for `{name}`"))
                })?;
                if list.len() != n + 1 {
                    return Err(Error::InvalidSimplicial(format!(
                        "`{name}` has dimension {n} and needs {} faces, got {}",
                        n + 1,
                        list.len()
                    )));
                }
                let idx = list
                    .iter()
                    .map(|f| match lookup.get(f) {
                        Some(&(d, i)) if d + 1 == n => Ok(i),
                        Some(&(d, _)) => Err(Error::InvalidSimplicial(format!(
                            "face `{f}` of `{name}` has dimension {d}, expected {}",
                            n - 1
                        ))),
                        None => Err(Error::InvalidSimplicial(format!(
                            "face `{f}` of `{name}` is not a declared cell"
                        ))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                face_idx[n].push(idx);
            }
            if let Some(t) = table {
                if let Some(extra) = t.keys().find(|k| lookup.get(*k).map(|p| p.0) != Some(n)) {
                    return Err(Error::InvalidSimplicial(format!(
                        "face table of dimension {n} mentions `{extra}`, which is not an {n}-cell"
                    )));
                }
            }
        }
        Ok(SemiSimplicialSet {
            names: cells,
            faces: face_idx,
            lookup,
            truncated,
        })
    }

    fn from_indexed(names: Vec<Vec<String>>, faces: Vec<Vec<Vec<usize>>>, truncated: bool) -> Self {
        let lookup = names
            .iter()
            .enumerate()
            .flat_map(|(n, row)| row.iter().enumerate().map(move |(i, s)| (s.clone(), (n, i))))
            .collect();
        SemiSimplicialSet {
            names,
            faces,
            lookup,
            truncated,
        }
    }

    /// One cell in each dimension `0..=top`, all faces equal. Marked
    /// truncated: it stands for the chains of a point.
    pub fn point(top: usize) -> Self {
        let names = (0..=top).map(|n| vec![format!("p{n}")]).collect();
        let faces = (0..=top)
            .map(|n| if n == 0 { vec![vec![]] } else { vec![vec![0; n + 1]] })
            .collect();
        Self::from_indexed(names, faces, true)
    }

    /// The full simplex on vertices `0..=k`: every nonempty vertex subset.
    pub fn simplex(k: usize) -> Self {
        Self::from_vertex_subsets(k, k)
    }

    /// The boundary of the `k`-simplex: every proper nonempty vertex subset.
    pub fn simplex_boundary(k: usize) -> Self {
        assert!(k >= 1, "the boundary of a point is empty");
        Self::from_vertex_subsets(k, k - 1)
    }

    fn from_vertex_subsets(k: usize, top: usize) -> Self {
        let mut by_dim: Vec<Vec<Vec<usize>>> = Vec::new();
        for n in 0..=top {
            by_dim.push(combinations(k + 1, n + 1));
        }
        let index: Vec<HashMap<Vec<usize>, usize>> = by_dim
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let names = by_dim
            .iter()
            .map(|row| row.iter().map(|s| vertex_name(s)).collect())
            .collect();
        let faces = by_dim
            .iter()
            .enumerate()
            .map(|(n, row)| {
                row.iter()
                    .map(|s| {
                        if n == 0 {
                            return Vec::new();
                        }
                        (0..s.len())
                            .map(|i| {
                                let mut f = s.clone();
                                f.remove(i);
                                index[n - 1][&f]
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::from_indexed(names, faces, false)
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.names.iter().rposition(|row| !row.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        self.names.iter().all(Vec::is_empty)
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn cell_count(&self, n: Degree) -> usize {
        if n < 0 {
            return 0;
        }
        self.names.get(n as usize).map_or(0, Vec::len)
    }

    pub fn cells(&self, n: usize) -> &[String] {
        self.names.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn all_cells(&self) -> &[Vec<String>] {
        &self.names
    }

    pub fn cell_name(&self, n: usize, idx: usize) -> &str {
        &self.names[n][idx]
    }

    pub fn locate(&self, name: &str) -> Option<(usize, usize)> {
        self.lookup.get(name).copied()
    }

    /// Index of `∂_i x` for the `n`-cell `x`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][x][i]
    }

    /// Face lists by name, `[∂_0 x, ..., ∂_n x]`.
    pub fn face_names(&self, n: usize, x: usize) -> Vec<&str> {
        self.faces[n][x]
            .iter()
            .map(|&f| self.names[n - 1][f].as_str())
            .collect()
    }

    /// Checks `∂_i ∂_j = ∂_j ∂_{i+1}` for all `j <= i` on every cell and
    /// reports the first violation.
    pub fn validate(&self) -> Option<FaceViolation> {
        for n in 2..self.names.len() {
            for x in 0..self.names[n].len() {
                for i in 0..n {
                    for j in 0..=i {
                        let lhs = self.face(n - 1, i, self.face(n, j, x));
                        let rhs = self.face(n - 1, j, self.face(n, i + 1, x));
                        if lhs != rhs {
                            return Some(FaceViolation {
                                i,
                                j,
                                cell: self.names[n][x].clone(),
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn ensure_valid(&self) -> Result<()> {
        match self.validate() {
            None => Ok(()),
            Some(v) => Err(Error::FaceIdentity {
                i: v.i,
                j: v.j,
                cell: v.cell,
            }),
        }
    }

    /// Replaces one face entry; used to build broken models in tests and demos.
    pub fn with_face(mut self, n: usize, x: usize, i: usize, target: usize) -> Self {
        self.faces[n][x][i] = target;
        self
    }
}

fn vertex_name(vertices: &[usize]) -> String {
    vertices.iter().map(|v| format!("v{v}")).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A chain in `C_n(X)`: cell index to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QChain {
    pub degree: Degree,
    terms: BTreeMap<usize, CyclotomicRational>,
}

impl QChain {
    pub fn zero(degree: Degree) -> Self {
        QChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(order: Order, degree: Degree, cell: usize) -> Self {
        let mut c = Self::zero(degree);
        c.add_term(cell, CyclotomicRational::one(order));
        c
    }

    pub fn from_terms(degree: Degree, terms: impl IntoIterator<Item = (usize, CyclotomicRational)>) -> Self {
        let mut c = Self::zero(degree);
        for (cell, a) in terms {
            c.add_term(cell, a);
        }
        c
    }

    pub fn add_term(&mut self, cell: usize, a: CyclotomicRational) {
        if a.is_zero() {
            return;
        }
        match self.terms.get_mut(&cell) {
            Some(slot) => {
                *slot += &a;
                if slot.is_zero() {
                    self.terms.remove(&cell);
                }
            }
            None => {
                self.terms.insert(cell, a);
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<usize, CyclotomicRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, cell: usize) -> Option<&CyclotomicRational> {
        self.terms.get(&cell)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding chains of different degrees");
        let mut out = self.clone();
        for (&cell, a) in &other.terms {
            out.add_term(cell, a.clone());
        }
        out
    }

    pub fn scale(&self, a: &CyclotomicRational) -> Self {
        QChain::from_terms(self.degree, self.terms.iter().map(|(&c, x)| (c, a * x)))
    }

    /// Coefficient vector over the cells of dimension `degree`.
    pub fn to_vector(&self, x: &SemiSimplicialSet, order: Order) -> Vec<CyclotomicRational> {
        let mut v = vec![CyclotomicRational::zero(order); x.cell_count(self.degree)];
        for (&cell, a) in &self.terms {
            v[cell] = a.clone();
        }
        v
    }

    fn apply_face(&self, x: &SemiSimplicialSet, i: usize) -> QChain {
        let n = self.degree as usize;
        QChain::from_terms(
            self.degree - 1,
            self.terms.iter().map(|(&cell, a)| (x.face(n, i, cell), a.clone())),
        )
    }
}

/// `∂ c = Σ_i q^i ∂_i c`; the border of a 0-chain is the zero chain in degree -1.
pub fn chain_border(x: &SemiSimplicialSet, order: Order, c: &QChain) -> QChain {
    if c.degree <= 0 {
        return QChain::zero(c.degree - 1);
    }
    let n = c.degree as usize;
    let mut out = QChain::zero(c.degree - 1);
    for (&cell, a) in &c.terms {
        for i in 0..=n {
            let weight = &CyclotomicRational::q_pow(order, i as i64) * a;
            out.add_term(x.face(n, i, cell), weight);
        }
    }
    out
}

pub fn chain_border_power(x: &SemiSimplicialSet, order: Order, c: &QChain, k: usize) -> QChain {
    (0..k).fold(c.clone(), |acc, _| chain_border(x, order, &acc))
}

/// The q-deformed chain complex of `x` on degrees `0..=hi`.
pub fn to_ncomplex(x: &SemiSimplicialSet, order: Order, hi: Degree) -> Result<GradedNComplex> {
    x.ensure_valid()?;
    let hi = hi.max(0);
    let ranks: Vec<usize> = (0..=hi).map(|n| x.cell_count(n)).collect();
    let mut borders = BTreeMap::new();
    for n in 1..=hi {
        let (rows, cols) = (x.cell_count(n - 1), x.cell_count(n));
        if rows == 0 || cols == 0 {
            continue;
        }
        let mut m = Matrix::zeros(order, rows, cols);
        for cell in 0..cols {
            let b = chain_border(x, order, &QChain::basis(order, n, cell));
            for (&r, a) in b.terms() {
                m.set(r, cell, a.clone());
            }
        }
        borders.insert(n, m);
    }
    let truncated = x.truncated() || x.top_dim().is_some_and(|t| t as Degree > hi);
    GradedNComplex::new(order, 0, ranks, borders, truncated)
}

/// Both sides of the iteration rule
/// `∂^k = [k]_q! Σ_{i_1 <= ... <= i_k} q^{i_1 + ... + i_k} ∂_{i_k} ... ∂_{i_1}`.
///
/// The right side is evaluated by enumerating every weakly increasing index
/// tuple that is admissible at each step (`i_j <= n - j + 1`).
pub fn iteration_rule_sides(
    x: &SemiSimplicialSet,
    order: Order,
    c: &QChain,
    k: usize,
) -> Result<(QChain, QChain)> {
    let n_order = order.get() as usize;
    if k > n_order {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            lo: 0,
            hi: n_order as i64,
        });
    }
    let lhs = chain_border_power(x, order, c, k);
    if k == 0 {
        return Ok((lhs, c.clone()));
    }
    let mut sum = QChain::zero(c.degree - k as Degree);
    let mut stack = Vec::with_capacity(k);
    enumerate_faces(x, order, c, k, 0, &mut stack, &mut sum);
    let rhs = sum.scale(&qfactorial_extended(order, k as u64).into());
    Ok((lhs, rhs))
}

fn enumerate_faces(
    x: &SemiSimplicialSet,
    order: Order,
    current: &QChain,
    k: usize,
    min_index: usize,
    stack: &mut Vec<usize>,
    sum: &mut QChain,
) {
    if stack.len() == k {
        let exponent: usize = stack.iter().sum();
        let w = CyclotomicRational::q_pow(order, exponent as i64);
        for (&cell, a) in current.terms() {
            sum.add_term(cell, &w * a);
        }
        return;
    }
    if current.degree <= 0 {
        return;
    }
    let n = current.degree as usize;
    for i in min_index..=n {
        let next = current.apply_face(x, i);
        stack.push(i);
        enumerate_faces(x, order, &next, k, i, stack, sum);
        stack.pop();
    }
}

pub fn iteration_rule_check(x: &SemiSimplicialSet, order: Order, c: &QChain, k: usize) -> Result<bool> {
    let (lhs, rhs) = iteration_rule_sides(x, order, c, k)?;
    Ok(lhs == rhs)
}
