//! Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic only.
//!
//! Run with `cargo test --release --test acceptance`. Two criteria are known
//! to be unattainable as stated; for those the target also checks that the
//! computed behaviour is exactly the one recorded for them, and the process
//! fails only on an unexpected verdict.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use qhom::affine::{
    augmentation_eps, coefficient_table, convex_product, homotopy_identity_check, homotopy_residual,
    homotopy_sum, newton_polynomial_check, AffineChain, AffineSimplex,
};
use qhom::cyclotomic::{
    invert_qbasic, permutation_sum, qbasic, qbinomial, qfactorial_extended, CyclotomicRational,
    Order,
};
use qhom::ncomplex::{
    build_point_complex, build_scalar_complex, check_chain_map, check_homotopy, hom_differential,
    homology_report, induced_homology_map, Degree, GradedMorphism, GradedNComplex, HomotopyWitness,
};
use qhom::pairs::SimplicialPair;
use qhom::sample::Sampler;
use qhom::simplicial::{chain_border_power, iteration_rule_check, to_ncomplex, QChain, SemiSimplicialSet};
use qhom::verify::{run_suite, Suite, SuiteConfig};
use qhom::RationalMatrix;

struct Verdict {
    pass: bool,
    detail: String,
    /// For criteria known to be unattainable: whether the computation agrees
    /// with the recorded analysis of the failure.
    analysis: Option<bool>,
}

impl Verdict {
    fn plain(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
            analysis: None,
        }
    }
}

fn ord(n: u32) -> Order {
    Order::new(n).unwrap()
}

fn q(o: Order, e: i64) -> CyclotomicRational {
    CyclotomicRational::q_pow(o, e)
}

// ---- independent q-number oracle: plain sums and products of powers of q ----

fn basic(o: Order, k: u64) -> CyclotomicRational {
    (0..k).fold(CyclotomicRational::zero(o), |acc, i| acc + q(o, i as i64))
}

fn factorial(o: Order, k: u64) -> CyclotomicRational {
    (1..=k).fold(CyclotomicRational::one(o), |acc, i| &acc * &basic(o, i))
}

fn binomial(o: Order, n: u64, k: u64) -> CyclotomicRational {
    let den = &factorial(o, k) * &factorial(o, n - k);
    &factorial(o, n) * &den.inverse().expect("factorials below N are units")
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut r = p.clone();
            r.insert(pos, n - 1);
            out.push(r);
        }
    }
    out
}

fn models() -> Vec<(String, SemiSimplicialSet)> {
    let mut out = Vec::new();
    for k in 0..=4 {
        out.push((format!("simplex {k}"), SemiSimplicialSet::simplex(k)));
    }
    for k in 1..=4 {
        out.push((format!("boundary {k}"), SemiSimplicialSet::simplex_boundary(k)));
    }
    out
}

// ---- criteria ----

fn nilpotency() -> Verdict {
    let mut checked = 0;
    for n in [2, 3, 5, 7] {
        let o = ord(n);
        let hi = 2 * n as Degree;
        let mut all = models();
        all.push(("point".into(), SemiSimplicialSet::point(hi as usize)));
        for (name, x) in all {
            let c = to_ncomplex(&x, o, hi).unwrap();
            if let Some(d) = c.check_nilpotent() {
                return Verdict::plain(false, format!("N={n} {name}: power N nonzero at degree {d}"));
            }
            checked += 1;
        }
    }
    Verdict::plain(true, format!("{checked} complexes"))
}

fn expected_point(n_order: u32, m: u32, n: Degree) -> usize {
    let top = n_order as Degree - 2;
    usize::from(0 <= n && n == m as Degree - 1 && n <= top)
}

fn point_homology() -> Verdict {
    for n in [2, 3, 5, 7] {
        let report = homology_report(&build_point_complex(ord(n), 3 * n as Degree));
        let reliable: Vec<_> = report.entries.iter().filter(|e| e.reliable).collect();
        for e in &reliable {
            if e.dim != expected_point(n, e.m, e.n) {
                return Verdict::plain(false, format!("N={n}: dim H({}, {}) = {}", e.m, e.n, e.dim));
            }
        }
    }
    Verdict::plain(true, "dim 1 exactly at n = m-1 for N in {2,3,5,7}")
}

fn scalar_homology() -> Verdict {
    let mut pass = true;
    let mut analysis = true;
    let mut first = None;
    for n in [3, 5, 7] {
        let report = homology_report(&build_scalar_complex(ord(n)));
        let top = n as Degree - 2;
        for e in report.entries.iter().filter(|e| e.reliable) {
            let claimed = usize::from(1 <= e.n && e.n == e.m as Degree && e.n <= top);
            if e.dim != claimed {
                pass = false;
                first.get_or_insert(format!("N={n}: dim H({}, {}) = {}, table says {claimed}", e.m, e.n, e.dim));
            }
            analysis &= e.dim == expected_point(n, e.m, e.n);
        }
    }
    let detail = match first {
        None => "matches n = m".to_string(),
        Some(f) => format!("{f}; the computed pattern is n = m-1"),
    };
    Verdict {
        pass,
        detail,
        analysis: Some(analysis),
    }
}

fn qnumber_identities() -> Verdict {
    let mut checks = 0usize;
    for n in [3u32, 5, 7] {
        let o = ord(n);
        let big = n as u64;
        for k in 0..=big {
            if CyclotomicRational::from(qbasic(o, k)) != basic(o, k) {
                return Verdict::plain(false, format!("N={n}: [{k}]_q"));
            }
        }
        for a in 1..=big {
            for b in 1..=big - a {
                let rhs = basic(o, a) + &q(o, a as i64) * &basic(o, b);
                checks += 1;
                if basic(o, a + b) != rhs || CyclotomicRational::from(qbasic(o, a + b)) != rhs {
                    return Verdict::plain(false, format!("N={n}: addition law at {a}, {b}"));
                }
            }
        }
        for k in 1..big {
            let x = CyclotomicRational::from(qbasic(o, k));
            let norm = x.norm();
            let inv = CyclotomicRational::from(invert_qbasic(o, k as i64).unwrap());
            checks += 1;
            if norm.abs() != BigRational::from_integer(BigInt::from(1)) || !(&x * &inv).is_one() {
                return Verdict::plain(false, format!("N={n}: [{k}]_q is not a unit"));
            }
        }
        for top in 1..big {
            for k in 1..top {
                let whole = CyclotomicRational::from(qbinomial(o, top, k).unwrap());
                let l = CyclotomicRational::from(qbinomial(o, top - 1, k - 1).unwrap());
                let r = CyclotomicRational::from(qbinomial(o, top - 1, k).unwrap());
                checks += 3;
                if whole != &l + &(&q(o, k as i64) * &r)
                    || whole != &(&q(o, (top - k) as i64) * &l) + &r
                    || whole != binomial(o, top, k)
                {
                    return Verdict::plain(false, format!("N={n}: Pascal at ({top}, {k})"));
                }
            }
        }
        for m in 0..=6usize {
            let sum = permutations(m)
                .iter()
                .fold(CyclotomicRational::zero(o), |acc, p| acc + q(o, inversions(p) as i64));
            let lib = CyclotomicRational::from(permutation_sum(o, m).unwrap());
            let fac = CyclotomicRational::from(qfactorial_extended(o, m as u64));
            checks += 1;
            if sum != fac || lib != fac || sum != factorial(o, m as u64) {
                return Verdict::plain(false, format!("N={n}: permutation sum for n = {m}"));
            }
        }
    }
    Verdict::plain(true, format!("{checks} exhaustive checks"))
}

/// `[k]_q! Σ q^{i_1+...+i_k} ∂_{i_k}...∂_{i_1}` by listing every admissible tuple.
fn tuple_oracle(x: &SemiSimplicialSet, o: Order, c: &QChain, k: usize) -> QChain {
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for step in 0..k {
        let mut next = Vec::new();
        for t in &tuples {
            let lo = t.last().copied().unwrap_or(0);
            let dim = c.degree - step as Degree;
            if dim <= 0 {
                continue;
            }
            for i in lo..=dim as usize {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        tuples = next;
    }
    let mut out = QChain::zero(c.degree - k as Degree);
    for t in tuples {
        let w = q(o, t.iter().sum::<usize>() as i64);
        for (&cell, a) in c.terms() {
            let mut cell = cell;
            for (step, &i) in t.iter().enumerate() {
                cell = x.face(c.degree as usize - step, i, cell);
            }
            out.add_term(cell, &w * a);
        }
    }
    out.scale(&factorial(o, k as u64))
}

fn iteration_rule() -> Verdict {
    let mut checks = 0;
    for n in [3u32, 5, 7] {
        let o = ord(n);
        let mut all = models();
        all.push(("point".into(), SemiSimplicialSet::point(2 * n as usize)));
        for (mi, (name, x)) in all.iter().enumerate() {
            let top = x.top_dim().unwrap();
            for t in 0..100u64 {
                let mut rng = Sampler::new(5 + n as u64, mi as u64 * 1000 + t);
                let degree = rng.index(top + 1);
                let c = rng.qchain(x, o, degree, 3);
                for k in 0..=n.min(4) as usize {
                    checks += 1;
                    let lhs = chain_border_power(x, o, &c, k);
                    // at k = N the factor [N]_q = 0 kills the sum
                    let oracle = tuple_oracle(x, o, &c, k);
                    if lhs != oracle || !iteration_rule_check(x, o, &c, k).unwrap() {
                        return Verdict::plain(false, format!("N={n} {name} trial {t} k={k}"));
                    }
                }
            }
        }
    }
    Verdict::plain(true, format!("{checks} chain checks against the tuple oracle"))
}

fn suite_verdict(suite: Suite, orders: &[u32], trials: usize, seed: u64) -> (bool, usize, String) {
    let mut cases = 0;
    for &n in orders {
        let r = run_suite(
            suite,
            &SuiteConfig {
                order: ord(n),
                trials,
                seed,
            },
        );
        cases += r.cases;
        if !r.passed {
            let c = &r.counterexamples[0];
            return (false, cases, format!("N={n} {}: {}", c.case, c.detail));
        }
    }
    (true, cases, String::new())
}

fn leibnitz_newton() -> Verdict {
    for n in [3, 5] {
        let o = ord(n);
        let mut rng = Sampler::new(60, n as u64);
        let tau = rng.affine_chain(o, 2, 0, 2);
        let sigma = rng.affine_chain(o, 2, 0, 2);
        let forced = newton_polynomial_check(&tau, &sigma, 2).unwrap();
        if !forced.holds || !forced.lhs.is_zero() {
            return Verdict::plain(false, format!("N={n}: forced case m = n = 0, k = 2"));
        }
    }
    let (ok_l, cl, dl) = suite_verdict(Suite::Leibnitz, &[3, 5], 200, 6);
    let (ok_n, cn, dn) = suite_verdict(Suite::Newton, &[3, 5], 200, 6);
    Verdict::plain(
        ok_l && ok_n,
        format!("{cl} Leibnitz/cone cases, {cn} Newton cases {dl}{dn}").trim().to_string(),
    )
}

fn tails() -> Verdict {
    let (ok, cases, detail) = suite_verdict(Suite::Tails, &[3, 5], 100, 7);
    Verdict::plain(ok, format!("{cases} cases {detail}").trim().to_string())
}

/// The published N = 7 table, typed in: row `k`, `i = k - l`, `q^e` times `[a choose b]_q`.
const PRINTED_TABLE: [(u64, u64, i64, u64, u64); 28] = [
    (0, 0, 0, 0, 0),
    (1, 0, 0, 1, 0),
    (1, 1, 6, 1, 1),
    (2, 0, 0, 2, 0),
    (2, 1, 5, 2, 1),
    (2, 2, 5, 2, 2),
    (3, 0, 0, 3, 0),
    (3, 1, 4, 3, 1),
    (3, 2, 3, 3, 2),
    (3, 3, 4, 3, 3),
    (4, 0, 0, 4, 0),
    (4, 1, 3, 4, 1),
    (4, 2, 1, 4, 2),
    (4, 3, 1, 4, 3),
    (4, 4, 3, 4, 4),
    (5, 0, 0, 5, 0),
    (5, 1, 2, 5, 1),
    (5, 2, 6, 5, 2),
    (5, 3, 5, 5, 3),
    (5, 4, 6, 5, 4),
    (5, 5, 2, 5, 5),
    (6, 0, 0, 6, 0),
    (6, 1, 1, 6, 1),
    (6, 2, 4, 6, 2),
    (6, 3, 2, 6, 3),
    (6, 4, 2, 6, 4),
    (6, 5, 4, 6, 5),
    (6, 6, 1, 6, 6),
];

fn printed_table() -> Verdict {
    let o = ord(7);
    let table = coefficient_table(o);
    for &(k, i, e, a, b) in &PRINTED_TABLE {
        let printed = &q(o, e) * &binomial(o, a, b);
        if table.entry(k as usize, i as usize) != Some(&printed) {
            return Verdict::plain(false, format!("entry k={k}, i={i}"));
        }
    }
    if table.entries.len() != 28 {
        return Verdict::plain(false, "table size");
    }
    let sums_ok = table.column_sums[..6].iter().all(|a| a.is_zero()) && table.column_sums[6].is_one();
    let mut recursion_ok = true;
    for s in 1..=5usize {
        let beta = |s: usize| -> CyclotomicRational {
            (0..=s as u64).fold(CyclotomicRational::zero(o), |acc, i| {
                acc + &q(o, (i * s as u64) as i64) * &binomial(o, 6 - s as u64 + i, 6 - s as u64)
            })
        };
        recursion_ok &= beta(s + 1) == &(CyclotomicRational::one(o) - q(o, s as i64)) * &beta(s);
        recursion_ok &= table.betas[s] == beta(s);
    }
    Verdict::plain(
        sums_ok && recursion_ok,
        format!("28 entries; column sums {sums_ok}; beta recursion {recursion_ok}"),
    )
}

fn homotopy_identity() -> Verdict {
    let mut failures = Vec::new();
    let mut analysis = true;
    let mut cases = 0;
    for n in [2u32, 3, 5] {
        let o = ord(n);
        for degree in 0..=2 * n as usize {
            for t in 0..3u64 {
                let mut rng = Sampler::new(90 + n as u64, degree as u64 * 10 + t);
                let sigma = rng.affine_chain(o, 2, degree, 2);
                let basepoint = rng.point(2);
                let iota = AffineSimplex::constant(basepoint.clone(), n as usize - 2);
                cases += 1;
                let check = homotopy_identity_check(&sigma, &iota).unwrap();
                if !check.holds {
                    failures.push((n, degree));
                }
                analysis &= homotopy_residual(&sigma, &iota, &basepoint).unwrap().vanishes();
                analysis &= check.holds == (degree + 1 >= n as usize);
                if degree + 1 >= n as usize {
                    let free = rng.simplex(2, n as usize - 2);
                    analysis &= homotopy_identity_check(&sigma, &free).unwrap().holds;
                }
                if n == 2 {
                    // K = P * (-), the classical cone
                    let cone = |c: &AffineChain| convex_product(&AffineChain::simplex(o, iota.clone()), c).unwrap();
                    let classical = cone(&sigma).border().add(&cone(&sigma.border()));
                    analysis &= homotopy_sum(&sigma, &iota).unwrap() == classical;
                }
            }
        }
    }
    failures.dedup();
    let detail = if failures.is_empty() {
        format!("{cases} chains")
    } else {
        let shown: Vec<String> = failures.iter().map(|(n, d)| format!("N={n} deg {d}")).collect();
        format!(
            "sum != 0 below N-1 at {}; there it equals sigma - P eta(sigma)",
            shown.join(", ")
        )
    };
    Verdict {
        pass: failures.is_empty(),
        detail,
        analysis: Some(analysis),
    }
}

fn augmentation() -> Verdict {
    let mut checks = 0;
    for n in [3u32, 5, 7] {
        let o = ord(n);
        for t in 0..100u64 {
            let mut rng = Sampler::new(100 + n as u64, t);
            for m in 0..n as usize {
                let tau = AffineChain::simplex(o, rng.simplex(2, m));
                let eps = augmentation_eps(&tau.border_power(m)).unwrap();
                checks += 1;
                if eps != factorial(o, m as u64 + 1) || (m + 1 == n as usize && !eps.is_zero()) {
                    return Verdict::plain(false, format!("N={n} trial {t} m={m}: {eps}"));
                }
            }
        }
    }
    Verdict::plain(true, format!("{checks} simplices"))
}

/// Rank of the classical connecting map `H_n(X, A) -> H_{n-1}(A)` by the
/// snake lemma over `Q` with alternating signs.
fn classical_connecting_rank(x: &SemiSimplicialSet, in_a: &dyn Fn(usize, usize) -> bool, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let border = |d: usize| -> Vec<Vec<BigRational>> {
        let (rows, cols) = (x.cell_count(d as Degree - 1), x.cell_count(d as Degree));
        let mut m = vec![vec![BigRational::from_integer(0.into()); cols]; rows];
        for c in 0..cols {
            for i in 0..=d {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m[x.face(d, i, c)][c] += BigRational::from_integer(sign.into());
            }
        }
        m
    };
    let full = border(n);
    let rel_cols: Vec<usize> = (0..x.cell_count(n as Degree)).filter(|&c| !in_a(n, c)).collect();
    let a_rows: Vec<usize> = (0..x.cell_count(n as Degree - 1)).filter(|&r| in_a(n - 1, r)).collect();
    let rel_rows: Vec<usize> = (0..x.cell_count(n as Degree - 1)).filter(|&r| !in_a(n - 1, r)).collect();
    let pick = |rows: &[usize], cols: &[usize], m: &Vec<Vec<BigRational>>| {
        let data: Vec<Vec<BigRational>> = rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect();
        RationalMatrix::from_rows((), cols.len(), data).unwrap()
    };
    // relative cycles: chains on cells outside A whose border lies in A
    let cycles = pick(&rel_rows, &rel_cols, &full).nullspace();
    let to_a = pick(&a_rows, &rel_cols, &full);
    let images: Vec<Vec<BigRational>> = cycles.iter().map(|z| to_a.mul_vec(z)).collect();
    let a_cols: Vec<usize> = (0..x.cell_count(n as Degree)).filter(|&c| in_a(n, c)).collect();
    let borders_in_a: Vec<Vec<BigRational>> = pick(&a_rows, &a_cols, &full).column_basis();
    let span = |v: &[Vec<BigRational>]| qhom::linalg::span_dim((), a_rows.len(), v);
    let mut both = borders_in_a.clone();
    both.extend(images);
    span(&both) - span(&borders_in_a)
}

fn pair_exactness() -> Verdict {
    let triangle_boundary = ["v0", "v1", "v2", "v0v1", "v0v2", "v1v2"];
    let pairs: Vec<(&str, SemiSimplicialSet, Vec<&str>)> = vec![
        ("(interval, v0)", SemiSimplicialSet::simplex(1), vec!["v0"]),
        ("(triangle, boundary)", SemiSimplicialSet::simplex(2), triangle_boundary.to_vec()),
    ];
    let mut junctions = 0;
    for n in [2u32, 3] {
        let o = ord(n);
        for (name, x, sub) in &pairs {
            let hi = x.top_dim().unwrap() as Degree + 1;
            let pair = SimplicialPair::new(x.clone(), sub).unwrap();
            let report = pair.exactness_audit(o, hi).unwrap();
            junctions += report.junctions.len();
            if !report.passes() {
                return Verdict::plain(false, format!("N={n} {name}: {:?}", report.failures()[0]));
            }
            if n == 2 {
                let names: Vec<String> = sub.iter().map(|s| s.to_string()).collect();
                let in_a = |d: usize, c: usize| names.iter().any(|s| s == x.cell_name(d, c));
                for deg in 1..=hi {
                    let lib = pair.connecting_morphism(o, hi, 1, deg).unwrap().rank();
                    let oracle = classical_connecting_rank(x, &in_a, deg as usize);
                    if lib != oracle {
                        return Verdict::plain(false, format!("{name}: connecting rank {lib} vs {oracle} at n={deg}"));
                    }
                }
            }
        }
    }
    Verdict::plain(true, format!("{junctions} reliable junctions; N=2 connecting ranks match"))
}

fn homotopy_invariance() -> Verdict {
    let mut compared = 0;
    let mut moved = 0;
    for n in [2u32, 3, 5] {
        let o = ord(n);
        let complexes: Vec<Arc<GradedNComplex>> = vec![
            Arc::new(to_ncomplex(&SemiSimplicialSet::simplex_boundary(2), o, 2).unwrap()),
            Arc::new(to_ncomplex(&SemiSimplicialSet::simplex_boundary(3), o, 3).unwrap()),
            Arc::new(to_ncomplex(&SemiSimplicialSet::simplex(2), o, 3).unwrap()),
            Arc::new(build_scalar_complex(o)),
        ];
        for t in 0..50u64 {
            let mut rng = Sampler::new(120 + n as u64, t);
            let c = rng.pick(&complexes).clone();
            let shift = n as Degree - 1;
            let a = rng.coefficient(o);
            let h = rng.morphism(&c, &c, shift);
            let g = GradedMorphism::identity(c.clone())
                .scale(&a)
                .add(&hom_differential(&h).unwrap())
                .unwrap();
            let witness = HomotopyWitness::uniform(rng.morphism(&c, &c, shift)).unwrap();
            let f = g.add(&witness.sum()).unwrap();
            if !check_chain_map(&g).unwrap() || !check_chain_map(&f).unwrap() {
                return Verdict::plain(false, format!("N={n} trial {t}: not a chain map"));
            }
            if !check_homotopy(&witness, &f, &g).unwrap() {
                return Verdict::plain(false, format!("N={n} trial {t}: witness mismatch"));
            }
            moved += usize::from(!f.same_maps(&g));
            for m in 1..n {
                let (mf, mg): (BTreeMap<_, _>, BTreeMap<_, _>) = (
                    induced_homology_map(&f, m).unwrap(),
                    induced_homology_map(&g, m).unwrap(),
                );
                compared += mf.len();
                if mf != mg {
                    return Verdict::plain(false, format!("N={n} trial {t}: induced maps differ at m={m}"));
                }
            }
        }
    }
    Verdict::plain(
        true,
        format!("{compared} induced matrices equal; {moved}/150 witnesses change f at chain level"),
    )
}

fn main() -> ExitCode {
    type Criterion = (u32, &'static str, fn() -> Verdict);
    let criteria: [Criterion; 12] = [
        (1, "nilpotency of the q-deformed border", nilpotency),
        (2, "point homology", point_homology),
        (3, "scalar-complex homology table", scalar_homology),
        (4, "q-number identities", qnumber_identities),
        (5, "iteration rule", iteration_rule),
        (6, "Leibnitz and Newton expansions", leibnitz_newton),
        (7, "tail formulas", tails),
        (8, "coefficient table for N = 7", printed_table),
        (9, "homotopy identity", homotopy_identity),
        (10, "augmentation of iterated borders", augmentation),
        (11, "pair exactness", pair_exactness),
        (12, "homotopy invariance", homotopy_invariance),
    ];
    // unattainable as stated; see the README
    let known_failures = [3, 9];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let v = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if v.pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {id:>2} ({name}): {} [{secs:.2}s]", v.detail);
        let expected_fail = known_failures.contains(&id);
        match (v.pass, expected_fail, v.analysis) {
            (true, false, _) => {}
            (false, true, Some(true)) => println!("     known failure; computed behaviour matches the recorded analysis"),
            (true, true, _) => println!("     note: a known failure now passes"),
            _ => unexpected += 1,
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected verdict(s)");
        ExitCode::FAILURE
    }
}
