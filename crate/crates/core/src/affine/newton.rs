//! Iterated borders of convex products: the Leibnitz rule, Newton's terms and
//! polynomial, and the three tail formulas.
//!
//! Every check evaluates the left side by repeated borders and the right side
//! from the closed formula, and returns both alongside the verdict.

use super::{convex_product, AffineChain};
use crate::cyclotomic::{qbasic, qbinomial_extended, qfactorial_extended, CyclotomicRational};
use crate::error::{Error, Result};
use crate::ncomplex::Degree;
use crate::verify::IdentityCheck;

/// A Newton's term: an iterated border, the scalar tail, or nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NewtonOperand {
    Chain(AffineChain),
    Scalar(CyclotomicRational),
    Zero,
}

/// Product of Newton's terms: chains multiply by the convex product, a
/// scalar against a chain scales it, and a scalar against a scalar is zero.
pub fn star(a: &NewtonOperand, b: &NewtonOperand) -> Result<NewtonOperand> {
    use NewtonOperand::*;
    Ok(match (a, b) {
        (Chain(x), Chain(y)) => Chain(convex_product(x, y)?),
        (Scalar(s), Chain(c)) | (Chain(c), Scalar(s)) => Chain(c.scale(s)),
        (Scalar(_), Scalar(_)) | (Zero, _) | (_, Zero) => Zero,
    })
}

/// `∂^i τ` for `i <= m`, the scalar `[m+1]_q!` (times the coefficient sum of
/// `τ`) for `i = m + 1`, and zero beyond.
pub fn newton_term(tau: &AffineChain, i: usize) -> NewtonOperand {
    let m = tau.degree();
    let i = i as Degree;
    if i <= m {
        NewtonOperand::Chain(tau.border_power(i as usize))
    } else if i == m + 1 {
        NewtonOperand::Scalar(scalar_tail(tau))
    } else {
        NewtonOperand::Zero
    }
}

/// `[m+1]_q!` weighted by the coefficient sum of the chain.
fn scalar_tail(tau: &AffineChain) -> CyclotomicRational {
    let fac: CyclotomicRational = qfactorial_extended(tau.order(), (tau.degree() + 1) as u64).into();
    &fac * &tau.coefficient_sum()
}

/// Both sides of
/// `∂^k(τ⋆σ) = Σ_{i=0}^{k} q^{i(m+1-k+i)} [k choose i]_q 𝒩^{k-i}(τ)⋆𝒩^i(σ)`.
pub fn newton_polynomial_sides(
    tau: &AffineChain,
    sigma: &AffineChain,
    k: usize,
) -> Result<(AffineChain, AffineChain)> {
    let order = tau.order();
    let product = convex_product(tau, sigma)?;
    let lhs = product.border_power(k);
    let mut rhs = AffineChain::zero(order, lhs.degree(), tau.ambient());
    let m = tau.degree();
    for i in 0..=k {
        let term = star(&newton_term(tau, k - i), &newton_term(sigma, i))?;
        let NewtonOperand::Chain(c) = term else {
            continue;
        };
        let ii = i as i64;
        let weight = &CyclotomicRational::q_pow(order, ii * (m + 1 - k as i64 + ii))
            * &CyclotomicRational::from(qbinomial_extended(order, k as u64, i as u64));
        rhs = rhs.checked_add(&c.scale(&weight))?;
    }
    Ok((lhs, rhs))
}

pub fn newton_polynomial_check(
    tau: &AffineChain,
    sigma: &AffineChain,
    k: usize,
) -> Result<IdentityCheck<AffineChain>> {
    let (lhs, rhs) = newton_polynomial_sides(tau, sigma, k)?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `∂(τ⋆σ) = ∂τ⋆σ + q^{m+1} τ⋆∂σ`, stated for positive degrees only.
pub fn leibnitz_check(tau: &AffineChain, sigma: &AffineChain) -> Result<IdentityCheck<AffineChain>> {
    let (m, n) = (tau.degree(), sigma.degree());
    if m <= 0 || n <= 0 {
        return Err(Error::Precondition(format!(
            "the Leibnitz rule needs both degrees positive, got m = {m}, n = {n}"
        )));
    }
    let order = tau.order();
    let lhs = convex_product(tau, sigma)?.border();
    let rhs = convex_product(&tau.border(), sigma)?.checked_add(
        &convex_product(tau, &sigma.border())?.scale(&CyclotomicRational::q_pow(order, m + 1)),
    )?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The cone case `∂(P⋆σ) = ε(P) σ + q P⋆∂σ` for a 0-chain `P` and `deg σ > 0`.
pub fn cone_border_check(point: &AffineChain, sigma: &AffineChain) -> Result<IdentityCheck<AffineChain>> {
    if point.degree() != 0 || sigma.degree() <= 0 {
        return Err(Error::Precondition(format!(
            "the cone formula needs degrees (0, n > 0), got ({}, {})",
            point.degree(),
            sigma.degree()
        )));
    }
    let order = point.order();
    let lhs = convex_product(point, sigma)?.border();
    let rhs = sigma.scale(&point.coefficient_sum()).checked_add(
        &convex_product(point, &sigma.border())?.scale(&CyclotomicRational::q_pow(order, 1)),
    )?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// `∂^m τ = [m]_q! Σ_j q^j T_{m-j}` where `T_j` is vertex `j` of each simplex.
pub fn tail1_check(tau: &AffineChain) -> IdentityCheck<AffineChain> {
    let order = tau.order();
    let m = tau.degree().max(0) as usize;
    let lhs = tau.border_power(m);
    let fac: CyclotomicRational = qfactorial_extended(order, m as u64).into();
    let mut rhs = AffineChain::zero(order, 0, tau.ambient());
    for (s, a) in tau.terms() {
        for j in 0..=m {
            let vertex = super::AffineSimplex::constant(s.vertex(m - j).clone(), 0);
            let w = &(&fac * a) * &CyclotomicRational::q_pow(order, j as i64);
            rhs = rhs.add(&AffineChain::term(w, vertex));
        }
    }
    IdentityCheck::new(lhs, rhs)
}

/// `∂(∂^m τ ⋆ ∂^n σ) = [m+1]_q! ∂^n σ + q [n+1]_q! ∂^m τ`, with each scalar
/// weighted by the coefficient sum of the chain it comes from.
pub fn tail2_check(tau: &AffineChain, sigma: &AffineChain) -> Result<IdentityCheck<AffineChain>> {
    let order = tau.order();
    let (m, n) = (tau.degree().max(0) as usize, sigma.degree().max(0) as usize);
    let top_tau = tau.border_power(m);
    let top_sigma = sigma.border_power(n);
    let lhs = convex_product(&top_tau, &top_sigma)?.border();
    let rhs = top_sigma.scale(&scalar_tail(tau)).checked_add(
        &top_tau.scale(&(&CyclotomicRational::q_pow(order, 1) * &scalar_tail(sigma))),
    )?;
    Ok(IdentityCheck::new(lhs, rhs))
}

/// The three-branch formula for `∂^k(∂^m τ ⋆ σ)` when `m n > 0` and `k >= 1`:
///
/// * `1 <= k <= n`: `[m+1]_q! [k]_q ∂^{k-1}σ + q^k ∂^m τ ⋆ ∂^k σ`
/// * `k = n + 1`: `[m+1]_q! [n+1]_q ∂^n σ + [n+1]_q! q^{n+1} ∂^m τ`
/// * otherwise zero.
pub fn tail3_check(tau: &AffineChain, sigma: &AffineChain, k: usize) -> Result<IdentityCheck<AffineChain>> {
    let (m, n) = (tau.degree(), sigma.degree());
    if m <= 0 || n <= 0 {
        return Err(Error::Precondition(format!(
            "the third tail formula needs m n > 0, got m = {m}, n = {n}"
        )));
    }
    if k == 0 {
        return Err(Error::Precondition("the third tail formula needs k >= 1".into()));
    }
    let order = tau.order();
    let top_tau = tau.border_power(m as usize);
    let lhs = convex_product(&top_tau, sigma)?.border_power(k);
    let kk = k as Degree;
    let rhs = if kk <= n {
        let basic: CyclotomicRational = qbasic(order, k as u64).into();
        sigma
            .border_power(k - 1)
            .scale(&(&scalar_tail(tau) * &basic))
            .checked_add(
                &convex_product(&top_tau, &sigma.border_power(k))?
                    .scale(&CyclotomicRational::q_pow(order, kk)),
            )?
    } else if kk == n + 1 {
        let basic: CyclotomicRational = qbasic(order, (n + 1) as u64).into();
        sigma
            .border_power(n as usize)
            .scale(&(&scalar_tail(tau) * &basic))
            .checked_add(
                &top_tau.scale(&(&scalar_tail(sigma) * &CyclotomicRational::q_pow(order, n + 1))),
            )?
    } else {
        AffineChain::zero(order, lhs.degree(), tau.ambient())
    };
    Ok(IdentityCheck::new(lhs, rhs))
}
