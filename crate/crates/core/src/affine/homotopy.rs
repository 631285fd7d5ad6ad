//! Augmentation, the index map onto the scalar complex, its section at a
//! basepoint, and the homotopy operator `K(σ) = (ι⋆σ) / [N-1]_q!`.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{convex_product, AffineChain, AffineSimplex, Point};
use crate::cyclotomic::{qfactorial, CyclotomicRational, Order};
use crate::error::{Error, Result};
use crate::ncomplex::{build_scalar_complex, Degree, GradedMorphism};
use crate::simplicial::{to_ncomplex, SemiSimplicialSet};
use crate::verify::IdentityCheck;
use crate::Matrix;

/// `ε`: the coefficient sum of a 0-chain.
pub fn augmentation_eps(c: &AffineChain) -> Result<CyclotomicRational> {
    if c.degree() != 0 {
        return Err(Error::Precondition(format!(
            "augmentation is defined on 0-chains, got degree {}",
            c.degree()
        )));
    }
    Ok(c.coefficient_sum())
}

/// `η`: every simplex of degree `0..=N-2` goes to 1, higher degrees to 0.
pub fn index_map_eta(c: &AffineChain) -> CyclotomicRational {
    let top = c.order().get() as Degree - 2;
    if (0..=top).contains(&c.degree()) {
        c.coefficient_sum()
    } else {
        CyclotomicRational::zero(c.order())
    }
}

/// The index map of a finite model as a chain map into the scalar complex.
pub fn index_morphism(x: &SemiSimplicialSet, order: Order, hi: Degree) -> Result<GradedMorphism> {
    let source = Arc::new(to_ncomplex(x, order, hi)?);
    let target = Arc::new(build_scalar_complex(order));
    let top = order.get() as Degree - 2;
    let maps: BTreeMap<Degree, Matrix> = (0..=top.min(hi))
        .map(|d| {
            let cols = source.rank(d);
            let row = vec![CyclotomicRational::one(order); cols];
            let m = Matrix::from_rows(order, cols, vec![row]).expect("one row");
            (d, m)
        })
        .collect();
    GradedMorphism::new(source, target, 0, maps)
}

/// `ν_n`, the constant `n`-simplex at the basepoint, for `0 <= n <= N-2`.
pub fn section_phat(order: Order, basepoint: &Point) -> Vec<AffineSimplex> {
    (0..order.get() as usize - 1)
        .map(|n| AffineSimplex::constant(basepoint.clone(), n))
        .collect()
}

/// `P̂(a)` in degree `n`: `a ν_n`, or zero outside `0..=N-2`.
pub fn phat_chain(order: Order, basepoint: &Point, degree: Degree, a: &CyclotomicRational) -> AffineChain {
    let top = order.get() as Degree - 2;
    if !(0..=top).contains(&degree) {
        return AffineChain::zero(order, degree, basepoint.len());
    }
    AffineChain::term(a.clone(), AffineSimplex::constant(basepoint.clone(), degree as usize))
}

/// `K(σ) = (ι⋆σ) / [N-1]_q!`, raising the degree by `N - 1`.
pub fn homotopy_k(sigma: &AffineChain, iota: &AffineSimplex) -> Result<AffineChain> {
    let order = sigma.order();
    let expected = order.get() as usize - 2;
    if iota.dim() != expected {
        return Err(Error::Precondition(format!(
            "the fixed simplex must have dimension N - 2 = {expected}, got {}",
            iota.dim()
        )));
    }
    let fac: CyclotomicRational = qfactorial(order, expected as u64 + 1)?.into();
    let inv = fac.inverse().expect("[N-1]_q! is a unit");
    Ok(convex_product(&AffineChain::simplex(order, iota.clone()), sigma)?.scale(&inv))
}

/// `Σ_{k=0}^{N-1} ∂^k K ∂^{N-k-1} σ`, computed by plain chain operations.
pub fn homotopy_sum(sigma: &AffineChain, iota: &AffineSimplex) -> Result<AffineChain> {
    let n = sigma.order().get() as usize;
    let mut total = AffineChain::zero(sigma.order(), sigma.degree(), sigma.ambient());
    for k in 0..n {
        let inner = sigma.border_power(n - k - 1);
        let term = homotopy_k(&inner, iota)?.border_power(k);
        total = total.checked_add(&term)?;
    }
    Ok(total)
}

/// Compares the homotopy sum against `σ` when `deg σ >= N-1` and against
/// zero below.
pub fn homotopy_identity_check(sigma: &AffineChain, iota: &AffineSimplex) -> Result<IdentityCheck<AffineChain>> {
    let lhs = homotopy_sum(sigma, iota)?;
    let rhs = if sigma.degree() >= sigma.order().get() as Degree - 1 {
        sigma.clone()
    } else {
        AffineChain::zero(sigma.order(), sigma.degree(), sigma.ambient())
    };
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The homotopy sum set against `σ - P̂η(σ)`, the difference it should
/// realise for the pair `id`, `P̂η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyResidual {
    pub degree: Degree,
    pub sum: AffineChain,
    pub id_minus_phat_eta: AffineChain,
    pub residual: AffineChain,
}

impl HomotopyResidual {
    pub fn vanishes(&self) -> bool {
        self.residual.is_zero()
    }
}

pub fn homotopy_residual(
    sigma: &AffineChain,
    iota: &AffineSimplex,
    basepoint: &Point,
) -> Result<HomotopyResidual> {
    let sum = homotopy_sum(sigma, iota)?;
    let phat_eta = phat_chain(sigma.order(), basepoint, sigma.degree(), &index_map_eta(sigma));
    let id_minus_phat_eta = sigma.checked_add(&phat_eta.neg())?;
    let residual = sum.checked_add(&id_minus_phat_eta.neg())?;
    Ok(HomotopyResidual {
        degree: sigma.degree(),
        sum,
        id_minus_phat_eta,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::qbasic;
    use crate::ncomplex::check_chain_map;
    use num_rational::BigRational;

    fn ord(n: u32) -> Order {
        Order::new(n).unwrap()
    }

    fn s(pts: &[&[i64]]) -> AffineSimplex {
        AffineSimplex::from_ints(pts).unwrap()
    }

    fn p(x: i64, y: i64) -> Point {
        vec![BigRational::from_integer(x.into()), BigRational::from_integer(y.into())]
    }

    #[test]
    fn augmentation() {
        let o = ord(3);
        let c = AffineChain::simplex(o, s(&[&[0, 0]]))
            .add(&AffineChain::term(CyclotomicRational::q_pow(o, 1), s(&[&[1, 0]])));
        let expected = &CyclotomicRational::one(o) + &CyclotomicRational::q_pow(o, 1);
        assert_eq!(augmentation_eps(&c).unwrap(), expected);
        assert!(augmentation_eps(&AffineChain::simplex(o, s(&[&[0, 0], &[1, 1]]))).is_err());
    }

    #[test]
    fn eta_and_section() {
        let o = ord(5);
        let nu = section_phat(o, &p(1, 2));
        assert_eq!(nu.len(), 4);
        assert_eq!(nu[0], s(&[&[1, 2]]));
        for (n, v) in nu.iter().enumerate() {
            assert_eq!(v.dim(), n);
            let c = AffineChain::simplex(o, v.clone());
            assert!(index_map_eta(&c).is_one());
            if n > 0 {
                let down = AffineChain::term(qbasic(o, n as u64 + 1).into(), nu[n - 1].clone());
                assert_eq!(c.border(), down);
            }
        }
        let top = AffineChain::simplex(o, s(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 2]]));
        assert!(index_map_eta(&top).is_zero());
    }

    #[test]
    fn index_morphism_is_a_chain_map() {
        for n in [2, 3, 5] {
            let o = ord(n);
            let f = index_morphism(&SemiSimplicialSet::simplex(3), o, 3).unwrap();
            assert!(check_chain_map(&f).unwrap(), "N={n}");
        }
    }

    #[test]
    fn k_raises_degree_and_checks_iota() {
        let o = ord(3);
        let iota = s(&[&[0, 0], &[1, 0]]);
        let v = AffineChain::simplex(o, s(&[&[5, 5]]));
        let k = homotopy_k(&v, &iota).unwrap();
        let inv: CyclotomicRational = qbasic(o, 2).into();
        let expected = AffineChain::term(inv.inverse().unwrap(), s(&[&[0, 0], &[1, 0], &[5, 5]]));
        assert_eq!(k, expected);
        assert!(homotopy_k(&v, &s(&[&[0, 0]])).is_err());
        let o2 = ord(2);
        let cone = homotopy_k(&AffineChain::simplex(o2, s(&[&[1, 1]])), &s(&[&[0, 0]])).unwrap();
        assert_eq!(cone, AffineChain::simplex(o2, s(&[&[0, 0], &[1, 1]])));
    }

    #[test]
    fn homotopy_identity_in_high_degree() {
        let o = ord(3);
        let iota = s(&[&[0, 0], &[3, 1]]);
        let sigma = AffineChain::simplex(o, s(&[&[0, 0], &[1, 0], &[0, 1]]));
        assert!(homotopy_identity_check(&sigma, &iota).unwrap().holds);
    }

    #[test]
    fn low_degree_sum_is_id_minus_phat_eta() {
        for n in [2u32, 3, 5] {
            let o = ord(n);
            let base = p(0, 0);
            let iota = AffineSimplex::constant(base.clone(), n as usize - 2);
            for d in 0..n as usize {
                let pts: Vec<Vec<i64>> = (0..=d as i64).map(|i| vec![i + 1, 2 * i - 1]).collect();
                let refs: Vec<&[i64]> = pts.iter().map(Vec::as_slice).collect();
                let sigma = AffineChain::simplex(o, s(&refs));
                let r = homotopy_residual(&sigma, &iota, &base).unwrap();
                assert!(r.vanishes(), "N={n} d={d}: {}", r.residual);
            }
        }
    }
}
