use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Degree, GradedNComplex};
use crate::cyclotomic::{CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::Matrix;

/// One cell `H_{m,n}` of an amplitude homology table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyEntry {
    pub m: u32,
    pub n: Degree,
    pub dim: usize,
    pub reliable: bool,
}

/// Dimensions of `H_{m,n}` over `Q(q)` for every amplitude and degree of a window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplitudeHomologyReport {
    #[serde(rename = "N")]
    pub order: u32,
    pub lo: Degree,
    pub hi: Degree,
    pub entries: Vec<HomologyEntry>,
}

impl AmplitudeHomologyReport {
    pub fn entry(&self, m: u32, n: Degree) -> Option<&HomologyEntry> {
        self.entries.iter().find(|e| e.m == m && e.n == n)
    }

    pub fn dim(&self, m: u32, n: Degree) -> Option<usize> {
        self.entry(m, n).map(|e| e.dim)
    }

    /// Reliable entries with a nonzero dimension, as `(m, n, dim)`.
    pub fn nonzero_reliable(&self) -> Vec<(u32, Degree, usize)> {
        self.entries
            .iter()
            .filter(|e| e.reliable && e.dim > 0)
            .map(|e| (e.m, e.n, e.dim))
            .collect()
    }
}

impl fmt::Display for AmplitudeHomologyReport {
    /// Rows are amplitudes, columns degrees; `?` marks entries that the
    /// truncation window cannot certify.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "amplitude homology, N = {}", self.order)?;
        write!(f, "{:>6}", "m \\ n")?;
        for n in self.lo..=self.hi {
            write!(f, "{n:>5}")?;
        }
        writeln!(f)?;
        let amplitudes: std::collections::BTreeSet<u32> = self.entries.iter().map(|e| e.m).collect();
        for m in amplitudes {
            write!(f, "{m:>6}")?;
            for n in self.lo..=self.hi {
                match self.entry(m, n) {
                    Some(e) if e.reliable => write!(f, "{:>5}", e.dim)?,
                    Some(e) => write!(f, "{:>5}", format!("{}?", e.dim))?,
                    None => write!(f, "{:>5}", "-")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn check_amplitude(order: Order, m: u32) -> Result<()> {
    if m == 0 || m >= order.get() {
        return Err(Error::OutOfRange {
            what: "m",
            value: m as i64,
            lo: 1,
            hi: order.get() as i64 - 1,
        });
    }
    Ok(())
}

/// The row `H_{m,n}` for every degree `n` of the window.
///
/// `dim H_{m,n} = nullity(∂^m at n) - rank(∂^{N-m} landing in n)`.
pub fn amplitude_homology(c: &GradedNComplex, m: u32) -> Result<Vec<HomologyEntry>> {
    check_amplitude(c.order(), m)?;
    let n_order = c.order().get();
    Ok(c.degrees()
        .map(|n| {
            let cycles = c.border_power(m as usize, n).nullity();
            let borders = c
                .border_power((n_order - m) as usize, n + (n_order - m) as Degree)
                .rank();
            debug_assert!(cycles >= borders, "B_m must sit inside Z_m");
            HomologyEntry {
                m,
                n,
                dim: cycles - borders,
                reliable: c.is_reliable(m, n),
            }
        })
        .collect())
}

/// All amplitudes `1..N-1` over the whole window.
pub fn homology_report(c: &GradedNComplex) -> AmplitudeHomologyReport {
    let entries = (1..c.order().get())
        .flat_map(|m| amplitude_homology(c, m).expect("amplitude in range"))
        .collect();
    AmplitudeHomologyReport {
        order: c.order().get(),
        lo: c.lo(),
        hi: c.hi(),
        entries,
    }
}

/// A concrete model of `H_{m,n} = Z_m / B_m` at one degree: a basis of the
/// borders extended by cycle representatives of a complement.
#[derive(Clone, Debug)]
pub struct HomologySpace {
    pub m: u32,
    pub n: Degree,
    ambient: usize,
    cycle_test: Matrix,
    border_basis: Vec<Vec<CyclotomicRational>>,
    representatives: Vec<Vec<CyclotomicRational>>,
    /// Columns `[borders | representatives]`; full column rank.
    frame: Matrix,
}

impl HomologySpace {
    pub fn new(c: &GradedNComplex, m: u32, n: Degree) -> Result<Self> {
        check_amplitude(c.order(), m)?;
        let order = c.order();
        let ambient = c.rank(n);
        let cycle_test = c.border_power(m as usize, n);
        let k = (order.get() - m) as usize;
        let border_basis = c.border_power(k, n + k as Degree).column_basis();
        let mut frame_cols = border_basis.clone();
        let mut representatives = Vec::new();
        let mut current = frame_cols.len();
        for z in cycle_test.nullspace() {
            frame_cols.push(z.clone());
            let r = Matrix::from_columns(order, ambient, &frame_cols).rank();
            if r > current {
                current = r;
                representatives.push(z);
            } else {
                frame_cols.pop();
            }
        }
        let frame = Matrix::from_columns(order, ambient, &frame_cols);
        Ok(HomologySpace {
            m,
            n,
            ambient,
            cycle_test,
            border_basis,
            representatives,
            frame,
        })
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn representatives(&self) -> &[Vec<CyclotomicRational>] {
        &self.representatives
    }

    pub fn border_basis(&self) -> &[Vec<CyclotomicRational>] {
        &self.border_basis
    }

    pub fn is_cycle(&self, v: &[CyclotomicRational]) -> bool {
        self.cycle_test.mul_vec(v).iter().all(Field::is_zero)
    }

    /// Coordinates of the class of the cycle `v` in the representative basis.
    pub fn class_of(&self, v: &[CyclotomicRational]) -> Result<Vec<CyclotomicRational>> {
        if v.len() != self.ambient {
            return Err(Error::Shape(format!(
                "vector of length {} in a space of rank {}",
                v.len(),
                self.ambient
            )));
        }
        if !self.is_cycle(v) {
            return Err(Error::Precondition(format!(
                "vector is not an amplitude-{} cycle in degree {}",
                self.m, self.n
            )));
        }
        let x = self
            .frame
            .solve(v)
            .expect("cycles lie in the span of borders and representatives");
        Ok(x[self.border_basis.len()..].to_vec())
    }

    /// A cycle representing the class with the given coordinates.
    pub fn lift(&self, coords: &[CyclotomicRational], order: Order) -> Vec<CyclotomicRational> {
        let mut v = vec![CyclotomicRational::zero(order); self.ambient];
        for (c, rep) in coords.iter().zip(&self.representatives) {
            for (slot, x) in v.iter_mut().zip(rep) {
                *slot += &(c * x);
            }
        }
        v
    }
}
