//! The named suites behind `qhom verify`.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::str::FromStr;

use serde::Serialize;

use crate::affine::{
    augmentation_eps, coefficient_table, cone_border_check, homotopy_identity_check, homotopy_residual,
    leibnitz_check, newton_polynomial_check, tail1_check, tail2_check, tail3_check, AffineChain,
    AffineSimplex,
};
use crate::cyclotomic::{
    invert_qbasic, permutation_sum, qbasic, qbinomial_extended, qfactorial_extended, CyclotomicInt,
    CyclotomicRational, Order,
};
use crate::error::{Error, Result};
use crate::ncomplex::Degree;
use crate::pairs::{ExactnessReport, SimplicialPair, SimplicialTriple};
use crate::sample::Sampler;
use crate::simplicial::{iteration_rule_sides, QChain, SemiSimplicialSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Qnumbers,
    Iteration,
    Leibnitz,
    Newton,
    Tails,
    Homotopy,
    Augmentation,
    CoeffTable,
    Exactness,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Qnumbers,
        Suite::Iteration,
        Suite::Leibnitz,
        Suite::Newton,
        Suite::Tails,
        Suite::Homotopy,
        Suite::Augmentation,
        Suite::CoeffTable,
        Suite::Exactness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Qnumbers => "qnumbers",
            Suite::Iteration => "iteration",
            Suite::Leibnitz => "leibnitz",
            Suite::Newton => "newton",
            Suite::Tails => "tails",
            Suite::Homotopy => "homotopy",
            Suite::Augmentation => "augmentation",
            Suite::CoeffTable => "coeff-table",
            Suite::Exactness => "exactness",
        }
    }

    /// `"all"` expands to every suite.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            return Ok(Self::ALL.to_vec());
        }
        name.parse().map(|s| vec![s])
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Self::ALL.iter().map(|s| s.name()).collect();
                Error::Parse(format!("unknown suite `{s}`; expected one of {}, all", names.join(", ")))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub order: Order,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    #[serde(rename = "N")]
    pub order: u32,
    pub seed: u64,
    pub trials: usize,
    pub cases: usize,
    pub failures: usize,
    pub passed: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Collects case outcomes; ids are zero-padded so that sorting them gives
/// the canonical order.
struct Cases {
    outcomes: Vec<(String, Option<String>)>,
}

impl Cases {
    fn new() -> Self {
        Cases { outcomes: Vec::new() }
    }

    fn record(&mut self, id: String, holds: bool, detail: impl FnOnce() -> String) {
        let failure = (!holds).then(detail);
        self.outcomes.push((id, failure));
    }

    fn record_result(&mut self, id: String, outcome: Result<(bool, String)>) {
        match outcome {
            Ok((holds, detail)) => self.record(id, holds, || detail),
            Err(e) => self.record(id, false, || format!("error: {e}")),
        }
    }

    fn finish(mut self, suite: Suite, config: &SuiteConfig) -> SuiteReport {
        self.outcomes.sort_by(|a, b| a.0.cmp(&b.0));
        let counterexamples: Vec<_> = self
            .outcomes
            .iter()
            .filter_map(|(id, f)| {
                f.as_ref().map(|d| Counterexample {
                    case: id.clone(),
                    detail: d.clone(),
                })
            })
            .collect();
        SuiteReport {
            suite,
            order: config.order.get(),
            seed: config.seed,
            trials: config.trials,
            cases: self.outcomes.len(),
            failures: counterexamples.len(),
            passed: counterexamples.is_empty(),
            counterexamples,
        }
    }
}

fn trial_id(t: usize, label: impl Display) -> String {
    format!("trial-{t:05}/{label}")
}

fn both_sides(inputs: String, lhs: impl Display, rhs: impl Display) -> String {
    format!("{inputs}; lhs = {lhs}; rhs = {rhs}")
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let cases = match suite {
        Suite::Qnumbers => qnumbers(config.order),
        Suite::Iteration => iteration(config),
        Suite::Leibnitz => leibnitz(config),
        Suite::Newton => newton(config),
        Suite::Tails => tails(config),
        Suite::Homotopy => homotopy(config),
        Suite::Augmentation => augmentation(config),
        Suite::CoeffTable => coeff_table(config.order),
        Suite::Exactness => exactness(config),
    };
    cases.finish(suite, config)
}

fn q_int(order: Order, e: i64) -> CyclotomicInt {
    CyclotomicInt::q_pow(order, e)
}

/// Addition law, units, both Pascal rules and the permutation sum, all exhaustive.
fn qnumbers(order: Order) -> Cases {
    let mut cases = Cases::new();
    let n = order.get() as u64;
    for a in 1..=n {
        for b in 1..=n - a {
            let lhs = qbasic(order, a + b);
            let rhs = &qbasic(order, a) + &(&q_int(order, a as i64) * &qbasic(order, b));
            cases.record(format!("addition/{a:02}+{b:02}"), lhs == rhs, || {
                both_sides(format!("m = {a}, n = {b}"), &lhs, &rhs)
            });
        }
    }
    for k in 1..n {
        let outcome = invert_qbasic(order, k as i64).map(|inv| {
            let product = &inv * &qbasic(order, k);
            (product.is_one(), format!("[{k}]_q * inverse = {product}"))
        });
        cases.record_result(format!("unit/basic-{k:02}"), outcome);
        let fac = qfactorial_extended(order, k).to_rational();
        let integral_inverse = fac.inverse().and_then(|inv| inv.to_integer());
        cases.record(format!("unit/factorial-{k:02}"), integral_inverse.is_some(), || {
            format!("[{k}]_q! = {fac} has no inverse in Z[q]")
        });
    }
    for top in 1..n {
        for k in 1..top {
            let whole = qbinomial_extended(order, top, k);
            let (left, right) = (
                qbinomial_extended(order, top - 1, k - 1),
                qbinomial_extended(order, top - 1, k),
            );
            let first = &left + &(&q_int(order, k as i64) * &right);
            let second = &(&q_int(order, (top - k) as i64) * &left) + &right;
            cases.record(format!("pascal/{top:02}-{k:02}/first"), whole == first, || {
                both_sides(format!("n = {top}, k = {k}"), &whole, &first)
            });
            cases.record(format!("pascal/{top:02}-{k:02}/second"), whole == second, || {
                both_sides(format!("n = {top}, k = {k}"), &whole, &second)
            });
        }
    }
    for m in 0..=6usize {
        let outcome = permutation_sum(order, m).map(|sum| {
            let fac = qfactorial_extended(order, m as u64);
            (sum == fac, both_sides(format!("n = {m}"), &sum, &fac))
        });
        cases.record_result(format!("permutations/{m:02}"), outcome);
    }
    cases
}

fn describe_qchain(x: &SemiSimplicialSet, c: &QChain) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let n = c.degree as usize;
    c.terms()
        .iter()
        .map(|(&cell, a)| format!("({a}) {}", x.cell_name(n, cell)))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// The models the iteration and exactness suites draw from.
fn finite_models() -> Vec<(String, SemiSimplicialSet)> {
    let mut models = Vec::new();
    for k in 1..=3 {
        models.push((format!("simplex-{k}"), SemiSimplicialSet::simplex(k)));
    }
    for k in 2..=3 {
        models.push((format!("simplex-boundary-{k}"), SemiSimplicialSet::simplex_boundary(k)));
    }
    models
}

fn iteration(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut models = finite_models();
    models.push(("point".into(), SemiSimplicialSet::point(2 * order.get() as usize)));
    let max_k = order.get().min(4) as usize;
    let mut cases = Cases::new();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let (name, x) = rng.pick(&models);
        let top = x.top_dim().unwrap_or(0);
        let degree = rng.index(top + 1);
        let c = rng.qchain(x, order, degree, 3);
        for k in 0..=max_k {
            let outcome = iteration_rule_sides(x, order, &c, k).map(|(lhs, rhs)| {
                let detail = format!(
                    "model = {name}, chain = {}, k = {k}; lhs = {}; rhs = {}",
                    describe_qchain(x, &c),
                    describe_qchain(x, &lhs),
                    describe_qchain(x, &rhs)
                );
                (lhs == rhs, detail)
            });
            cases.record_result(trial_id(t, format!("k={k}")), outcome);
        }
    }
    cases
}

const AMBIENT: usize = 2;

fn pair_detail(tau: &AffineChain, sigma: &AffineChain) -> String {
    format!("tau = {tau}, sigma = {sigma}")
}

fn leibnitz(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut cases = Cases::new();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let m = rng.range(1, 4) as usize;
        let n = rng.range(1, 5 - m as i64) as usize;
        let tau = rng.affine_chain(order, AMBIENT, m, 2);
        let sigma = rng.affine_chain(order, AMBIENT, n, 2);
        let outcome = leibnitz_check(&tau, &sigma)
            .map(|c| (c.holds, both_sides(pair_detail(&tau, &sigma), &c.lhs, &c.rhs)));
        cases.record_result(trial_id(t, "leibnitz"), outcome);
        let point = rng.affine_chain(order, AMBIENT, 0, 1);
        let outcome = cone_border_check(&point, &sigma)
            .map(|c| (c.holds, both_sides(pair_detail(&point, &sigma), &c.lhs, &c.rhs)));
        cases.record_result(trial_id(t, "cone"), outcome);
    }
    cases
}

fn newton(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut cases = Cases::new();
    // both operands points, k = 2: the scalar-times-scalar term is dropped
    let mut rng = Sampler::new(config.seed, u64::MAX);
    let (tau, sigma) = (rng.affine_chain(order, AMBIENT, 0, 2), rng.affine_chain(order, AMBIENT, 0, 2));
    let outcome = newton_polynomial_check(&tau, &sigma, 2)
        .map(|c| (c.holds, both_sides(pair_detail(&tau, &sigma), &c.lhs, &c.rhs)));
    cases.record_result("forced/points-k=2".into(), outcome);
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let total = rng.range(0, 5);
        let m = rng.range(0, total) as usize;
        let n = total as usize - m;
        let tau = rng.affine_chain(order, AMBIENT, m, 2);
        let sigma = rng.affine_chain(order, AMBIENT, n, 2);
        for k in 0..=m + n + 3 {
            let outcome = newton_polynomial_check(&tau, &sigma, k).map(|c| {
                let inputs = format!("{}, k = {k}", pair_detail(&tau, &sigma));
                (c.holds, both_sides(inputs, &c.lhs, &c.rhs))
            });
            cases.record_result(trial_id(t, format!("k={k:02}")), outcome);
        }
    }
    cases
}

fn tails(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut cases = Cases::new();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let m = rng.range(0, 4) as usize;
        let tau = rng.affine_chain(order, AMBIENT, m, 2);
        let c = tail1_check(&tau);
        cases.record(trial_id(t, "tail1"), c.holds, || {
            both_sides(format!("tau = {tau}"), &c.lhs, &c.rhs)
        });

        let m = rng.range(0, 3) as usize;
        let tau = rng.affine_chain(order, AMBIENT, m, 2);
        let n = rng.range(0, 3) as usize;
        let sigma = rng.affine_chain(order, AMBIENT, n, 2);
        let outcome = tail2_check(&tau, &sigma)
            .map(|c| (c.holds, both_sides(pair_detail(&tau, &sigma), &c.lhs, &c.rhs)));
        cases.record_result(trial_id(t, "tail2"), outcome);

        let m = rng.range(1, 3) as usize;
        let n = rng.range(1, 5 - m as i64) as usize;
        let tau = rng.affine_chain(order, AMBIENT, m, 2);
        let sigma = rng.affine_chain(order, AMBIENT, n, 2);
        for k in 1..=n + 2 {
            let outcome = tail3_check(&tau, &sigma, k).map(|c| {
                let inputs = format!("{}, k = {k}", pair_detail(&tau, &sigma));
                (c.holds, both_sides(inputs, &c.lhs, &c.rhs))
            });
            cases.record_result(trial_id(t, format!("tail3-k={k}")), outcome);
        }
    }
    cases
}

/// In degrees `>= N-1` the sum must return `σ` for an arbitrary fixed
/// simplex; below, with the fixed simplex constant at a basepoint, it must
/// return `σ - P̂η(σ)`.
fn homotopy(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let big_n = order.get() as usize;
    let mut cases = Cases::new();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let degree = rng.index(2 * big_n + 1);
        let sigma = rng.affine_chain(order, AMBIENT, degree, 2);
        if degree + 1 >= big_n {
            let iota = rng.simplex(AMBIENT, big_n - 2);
            let outcome = homotopy_identity_check(&sigma, &iota).map(|c| {
                let inputs = format!("sigma = {sigma}, iota = {iota}");
                (c.holds, both_sides(inputs, &c.lhs, &c.rhs))
            });
            cases.record_result(trial_id(t, format!("identity-deg={degree:02}")), outcome);
        } else {
            let basepoint = rng.point(AMBIENT);
            let iota = AffineSimplex::constant(basepoint.clone(), big_n - 2);
            let outcome = homotopy_residual(&sigma, &iota, &basepoint).map(|r| {
                let inputs = format!("sigma = {sigma}, iota = {iota}");
                (r.vanishes(), both_sides(inputs, &r.sum, &r.id_minus_phat_eta))
            });
            cases.record_result(trial_id(t, format!("residual-deg={degree:02}")), outcome);
        }
    }
    cases
}

/// `ε(∂^m c) = [m+1]_q! ε-weight of c` for `m`-chains, `m <= N-1`.
fn augmentation(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut cases = Cases::new();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let m = rng.index(order.get() as usize);
        let fac: CyclotomicRational = qfactorial_extended(order, m as u64 + 1).into();
        let simplex = AffineChain::simplex(order, rng.simplex(AMBIENT, m));
        let chain = rng.affine_chain(order, AMBIENT, m, 3);
        for (label, c) in [("simplex", simplex), ("chain", chain)] {
            let expected = &fac * &c.coefficient_sum();
            let outcome = augmentation_eps(&c.border_power(m)).map(|eps| {
                (eps == expected, both_sides(format!("m = {m}, chain = {c}"), &eps, &expected))
            });
            cases.record_result(trial_id(t, label), outcome);
        }
    }
    cases
}

fn coeff_table(order: Order) -> Cases {
    let table = coefficient_table(order);
    let mut cases = Cases::new();
    let checks = [
        ("lower-sums-vanish", table.checks.lower_sums_vanish),
        ("top-sum-is-one", table.checks.top_sum_is_one),
        ("beta-matches-sums", table.checks.beta_matches_sums),
        ("beta-recursion", table.checks.beta_recursion),
    ];
    for (name, holds) in checks {
        cases.record(name.into(), holds, || table.to_string());
    }
    cases
}

/// Downward closure of a set of cells, as names.
fn face_closure(x: &SemiSimplicialSet, seeds: &[(usize, usize)]) -> Vec<String> {
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut stack = seeds.to_vec();
    while let Some((n, c)) = stack.pop() {
        if !seen.insert((n, c)) || n == 0 {
            continue;
        }
        for i in 0..=n {
            stack.push((n - 1, x.face(n, i, c)));
        }
    }
    seen.into_iter().map(|(n, c)| x.cell_name(n, c).to_string()).collect()
}

fn record_audit(cases: &mut Cases, prefix: &str, audit: Result<ExactnessReport>) {
    match audit {
        Ok(report) => {
            for j in &report.junctions {
                let id = format!("{prefix}/{:?}-m={}-n={:02}", j.kind, j.m, j.n).to_lowercase();
                cases.record(id, j.exact, || format!("{j:?}"));
            }
        }
        Err(e) => cases.record(prefix.to_string(), false, || format!("error: {e}")),
    }
}

fn exactness(config: &SuiteConfig) -> Cases {
    let order = config.order;
    let mut cases = Cases::new();
    let fixed: [(&str, SemiSimplicialSet, Vec<&str>); 4] = [
        ("fixed/interval-v0", SemiSimplicialSet::simplex(1), vec!["v0"]),
        ("fixed/interval-v1", SemiSimplicialSet::simplex(1), vec!["v1"]),
        (
            "fixed/triangle-boundary",
            SemiSimplicialSet::simplex(2),
            vec!["v0", "v1", "v2", "v0v1", "v0v2", "v1v2"],
        ),
        ("fixed/circle-v0", SemiSimplicialSet::simplex_boundary(2), vec!["v0"]),
    ];
    for (prefix, x, names) in fixed {
        let hi = x.top_dim().unwrap_or(0) as Degree + 1;
        let audit = SimplicialPair::new(x, &names).and_then(|p| p.exactness_audit(order, hi));
        record_audit(&mut cases, prefix, audit);
    }
    let triple = SimplicialTriple::new(
        SemiSimplicialSet::simplex(2),
        &["v0", "v1", "v2", "v0v1", "v0v2", "v1v2"],
        &["v0"],
    )
    .and_then(|t| t.exactness_audit(order, 3));
    record_audit(&mut cases, "fixed/triple-triangle", triple);

    let models = finite_models();
    for t in 0..config.trials {
        let mut rng = Sampler::new(config.seed, t as u64);
        let (name, x) = rng.pick(&models);
        let top = x.top_dim().unwrap_or(0);
        let seeds: Vec<(usize, usize)> = (0..1 + rng.index(3))
            .map(|_| {
                let n = rng.index(top + 1);
                (n, rng.index(x.cell_count(n as Degree)))
            })
            .collect();
        let sub = face_closure(x, &seeds);
        let hi = top as Degree + 1;
        let audit = SimplicialPair::new(x.clone(), &sub).and_then(|p| p.exactness_audit(order, hi));
        record_audit(&mut cases, &trial_id(t, format!("{name}[{}]", sub.join(","))), audit);
    }
    cases
}
