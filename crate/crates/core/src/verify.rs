//! Invariant suites behind `ulis verify`. Each check either passes with a
//! short summary or fails with the first counterexample it met.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bijections::dyck::all_dyck_paths;
use crate::bijections::rs::count_standard_tableaux;
use crate::bijections::tree::PlaneTree;
use crate::bijections::{
    ck_f, ck_f_inverse, phi, phi_inverse, psi, rs_insert, ulis_involution_to_ballot,
};
use crate::enumerate::{count_bidirectional_ballot, count_bidirectional_ballot_pruned, Enumerator};
use crate::fixtures;
use crate::lis::{has_ulis, lis_length, rank_profile};
use crate::perm::{all_permutations, Permutation};
use crate::sampler::{estimate_ank, sample_dyck_path};
use crate::series::{
    closed_form_u231_with, indecomposable_from_total, ps_sqrt, solve_u231,
    total_from_indecomposable, u231_residual, PowerSeries, SeriesError,
};
use crate::trees::{binomial, catalan, TreeCountDp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Bijections,
    Series,
    Oeis,
    Rs,
    Ballot,
    Sampler,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Bijections,
        Suite::Series,
        Suite::Oeis,
        Suite::Rs,
        Suite::Ballot,
        Suite::Sampler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Bijections => "bijections",
            Suite::Series => "series",
            Suite::Oeis => "oeis",
            Suite::Rs => "rs",
            Suite::Ballot => "ballot",
            Suite::Sampler => "sampler",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of bijections, series, oeis, rs, ballot, sampler"))
    }
}

/// Deliberate defects for exercising the failure path of the suites.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Faults {
    /// Perturbs the fourth coefficient of every series square root.
    pub sqrt: bool,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub threads: usize,
    pub faults: Faults,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 9,
            threads: 1,
            faults: Faults::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Summary when passing; first counterexample when failing.
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}/{}: {}", self.suite, c.name, c.detail)?;
        }
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} suite {}", self.suite)
    }
}

type Outcome = Result<String, String>;

struct Collector {
    checks: Vec<Check>,
}

impl Collector {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Outcome) {
        let (passed, detail) = match f() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
    }
}

fn pat(s: &str) -> Permutation {
    s.parse().expect("fixed pattern")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let mut c = Collector { checks: Vec::new() };
    match suite {
        Suite::Bijections => bijection_checks(&mut c, opts),
        Suite::Series => series_checks(&mut c, opts),
        Suite::Oeis => oeis_checks(&mut c, opts),
        Suite::Rs => rs_checks(&mut c, opts),
        Suite::Ballot => ballot_checks(&mut c, opts),
        Suite::Sampler => sampler_checks(&mut c, opts),
    }
    VerifyReport {
        suite,
        checks: c.checks,
    }
}

fn avoiders_of(q: &Permutation, n: usize) -> Vec<Permutation> {
    Enumerator::new()
        .with_ceiling(n.max(crate::enumerate::DEFAULT_CEILING))
        .avoiders(q, n)
        .expect("within ceiling")
        .collect()
}

fn bijection_checks(c: &mut Collector, opts: &VerifyOptions) {
    let q132 = pat("132");
    let q321 = pat("321");
    let n132 = opts.max_n.min(9);

    c.run("psi-size-injective", || {
        for n in 0..=n132 {
            let mut seen = HashSet::new();
            for p in avoiders_of(&q132, n) {
                let t = psi(&p).map_err(|e| e.to_string())?;
                ensure(t.size() == n + 1, || {
                    format!("{p}: psi has {} vertices", t.size())
                })?;
                ensure(seen.insert(t), || format!("{p}: psi image repeated"))?;
            }
        }
        Ok(format!("n <= {n132}"))
    });

    c.run("psi-leaf-count-equals-lis-count", || {
        for n in 0..=n132 {
            for p in avoiders_of(&q132, n) {
                let (_, k) = psi(&p).map_err(|e| e.to_string())?.max_depth_leaf_count();
                let count = rank_profile(&p).lis_count;
                ensure(BigUint::from(k) == count, || {
                    format!("{p}: {k} deepest leaves, {count} LIS")
                })?;
            }
        }
        Ok(format!("n <= {n132}"))
    });

    c.run("phi-roundtrip", || {
        for n in 0..=n132 {
            for p in avoiders_of(&q132, n) {
                let d = phi(&p).map_err(|e| e.to_string())?;
                ensure(d.semilength() == n, || {
                    format!("{p}: semilength {}", d.semilength())
                })?;
                let back = phi_inverse(&d);
                ensure(back == p, || format!("{p}: phi_inverse(phi(p)) = {back}"))?;
                let via_tree = PlaneTree::from_dyck(&d);
                ensure(via_tree == psi(&p).unwrap(), || {
                    format!("{p}: psi differs from tree(phi)")
                })?;
            }
        }
        Ok(format!("n <= {n132}"))
    });

    c.run("phi-heights", || {
        for n in 0..=n132 {
            for p in avoiders_of(&q132, n) {
                let d = phi(&p).unwrap();
                let expected = has_ulis(&p).then(|| lis_length(&p));
                // the empty path has no peak; the empty permutation has the empty ULIS
                let expected = if n == 0 { None } else { expected };
                ensure(d.unique_max_peak() == expected, || {
                    format!(
                        "{p}: unique max peak {:?}, expected {:?}",
                        d.unique_max_peak(),
                        expected
                    )
                })?;
            }
        }
        Ok(format!("n <= {n132}"))
    });

    c.run("phi-involutions", || {
        for n in 0..=n132 {
            for p in avoiders_of(&q132, n) {
                let d = phi(&p).unwrap();
                ensure(p.is_involution() == d.is_symmetric(), || {
                    format!(
                        "{p}: involution={} symmetric={}",
                        p.is_involution(),
                        d.is_symmetric()
                    )
                })?;
            }
        }
        Ok(format!("n <= {n132}"))
    });

    let nck = opts.max_n.min(9);
    c.run("ck-image-law", || {
        for n in 1..=nck {
            let targets: HashSet<Permutation> = avoiders_of(&q321, n + 1)
                .into_iter()
                .filter(|r| r.is_sum_indecomposable().unwrap())
                .collect();
            let mut hit = HashSet::new();
            for p in avoiders_of(&q321, n) {
                let r = ck_f(&p).map_err(|e| e.to_string())?;
                ensure(targets.contains(&r), || {
                    format!("{p}: f(p) = {r} is not an indecomposable 321-avoider")
                })?;
                ensure(hit.insert(r.clone()), || {
                    format!("{p}: f(p) = {r} hit twice")
                })?;
                let back = ck_f_inverse(&r).map_err(|e| format!("{p}: {e}"))?;
                ensure(back == p, || format!("{p}: inverse gives {back}"))?;
            }
            ensure(hit.len() == targets.len(), || {
                format!(
                    "n = {n}: {} images, {} indecomposable targets",
                    hit.len(),
                    targets.len()
                )
            })?;
        }
        Ok(format!("n <= {nck}"))
    });

    let m_max = 5.min(opts.max_n.div_ceil(2)).max(1);
    c.run("ck-rank-monotone-and-ulis", || {
        for m in 1..=m_max {
            let mut images = HashSet::new();
            let mut shaped = 0u64;
            for p in avoiders_of(&q321, 2 * m) {
                if crate::bijections::rs_shape(&p) != vec![m, m] {
                    continue;
                }
                shaped += 1;
                let r = ck_f(&p).unwrap();
                let before = rank_profile(&p).ranks;
                let after = rank_profile(&r).ranks;
                for v in 1..=2 * m as u32 {
                    let rb = before[p.position_of(v).unwrap() - 1];
                    let ra = after[r.position_of(v).unwrap() - 1];
                    ensure(ra <= rb, || {
                        format!("{p}: rank of {v} grows from {rb} to {ra} in {r}")
                    })?;
                }
                ensure(has_ulis(&r) && lis_length(&r) == m + 1, || {
                    format!("{p}: f(p) = {r} lacks a ULIS of length {}", m + 1)
                })?;
                images.insert(r);
            }
            let cm = catalan(m);
            ensure(BigUint::from(shaped) == &cm * &cm, || {
                format!("m = {m}: {shaped} shape-(m,m) permutations")
            })?;
            ensure(images.len() as u64 == shaped, || {
                format!("m = {m}: images not distinct")
            })?;
        }
        Ok(format!("m <= {m_max}"))
    });
}

fn rs_checks(c: &mut Collector, opts: &VerifyOptions) {
    let nmax = opts.max_n.min(8);
    let q321 = pat("321");
    c.run("rs-tableau-facts", || {
        for n in 0..=nmax {
            for p in all_permutations(n) {
                let (pt, qt) = rs_insert(&p);
                ensure(
                    pt.is_standard() && qt.is_standard() && pt.shape() == qt.shape(),
                    || format!("{p}: tableaux not a standard pair"),
                )?;
                let avoids = p.avoids(&q321);
                ensure((pt.rows.len() <= 2) == avoids, || {
                    format!("{p}: {} rows, avoids 321 = {avoids}", pt.rows.len())
                })?;
                ensure((pt == qt) == p.is_involution(), || {
                    format!("{p}: P = Q mismatch with involution")
                })?;
                if p.is_involution() {
                    ensure(pt.odd_columns() == p.fixed_points(), || {
                        format!(
                            "{p}: {} odd columns, {} fixed points",
                            pt.odd_columns(),
                            p.fixed_points()
                        )
                    })?;
                }
                let first = pt.rows.first().map_or(0, Vec::len);
                ensure(first == lis_length(&p), || {
                    format!("{p}: first row {first}, LIS {}", lis_length(&p))
                })?;
                if n % 2 == 0 && n > 0 && pt.shape() == vec![n / 2, n / 2] {
                    ensure(!has_ulis(&p), || {
                        format!("{p}: rectangular shape but has a ULIS")
                    })?;
                }
            }
        }
        Ok(format!("all permutations, n <= {nmax}"))
    });

    c.run("rectangular-syt-catalan", || {
        for m in 1..=6usize {
            let count = count_standard_tableaux(&[m, m]);
            ensure(BigUint::from(count) == catalan(m), || {
                format!("m = {m}: {count} tableaux")
            })?;
        }
        // distinct recording tableaux of shape (m, m) from permutations of 2m, m <= 4
        for m in 1..=4usize.min(nmax / 2) {
            let distinct: HashSet<Vec<Vec<u32>>> = all_permutations(2 * m)
                .map(|p| rs_insert(&p).1)
                .filter(|t| t.shape() == vec![m, m])
                .map(|t| t.rows)
                .collect();
            ensure(BigUint::from(distinct.len()) == catalan(m), || {
                format!("m = {m}: {} via RS", distinct.len())
            })?;
        }
        Ok("m <= 6".into())
    });

    c.run("321-involutions-ulis-identity", || {
        for n in 0..=opts.max_n.min(10) {
            for p in avoiders_of(&q321, n) {
                if p.is_involution() && has_ulis(&p) {
                    ensure(p == Permutation::identity(n), || {
                        format!("{p}: non-identity 321 involution with ULIS")
                    })?;
                }
            }
        }
        Ok(format!("n <= {}", opts.max_n.min(10)))
    });

    c.run("involution-ulis-fixed-points", || {
        for n in 1..=nmax {
            for p in all_permutations(n).filter(|p| p.is_involution() && has_ulis(p)) {
                // the unique LIS is the set of entries of maximal rank chain; recover it greedily
                let prof = rank_profile(&p);
                let mut need = prof.lis_length;
                let mut bound = u32::MAX;
                for i in (0..n).rev() {
                    if need > 0 && prof.ranks[i] == need && p.values()[i] < bound {
                        ensure(p.values()[i] as usize == i + 1, || {
                            format!("{p}: ULIS entry {} is not a fixed point", p.values()[i])
                        })?;
                        bound = p.values()[i];
                        need -= 1;
                    }
                }
            }
        }
        Ok(format!("n <= {nmax}"))
    });
}

/// Even-length 321-avoiders of length ≤ `max_n` that have no ULIS yet whose
/// RS shape is not the two-row rectangle. The rectangle forces the absence of
/// a ULIS, but not conversely: 1243 is the smallest witness.
pub fn non_rectangular_without_ulis(max_n: usize) -> Vec<Permutation> {
    let q321 = pat("321");
    (2..=max_n)
        .step_by(2)
        .flat_map(|n| avoiders_of(&q321, n))
        .filter(|p| {
            !has_ulis(p) && crate::bijections::rs_shape(p) != vec![p.len() / 2, p.len() / 2]
        })
        .collect()
}

fn series_checks(c: &mut Collector, opts: &VerifyOptions) {
    let sqrt = |a: &PowerSeries| -> Result<PowerSeries, SeriesError> {
        let s = ps_sqrt(a)?;
        if opts.faults.sqrt && s.order() >= 3 {
            let mut co = s.coeffs().to_vec();
            co[3] += num_rational::BigRational::one();
            return Ok(PowerSeries::new(co, s.order()));
        }
        Ok(s)
    };
    const ORDER: usize = 40;

    c.run("sqrt-squares-back", || {
        let a = PowerSeries::from_ints(&crate::series::u231_radicand(), ORDER);
        let s = sqrt(&a).map_err(|e| e.to_string())?;
        let residual = &(&s * &s) - &a;
        match residual.first_nonzero() {
            None => Ok(format!("order {ORDER}")),
            Some(i) => Err(format!(
                "residual coefficient index {i} is {}",
                residual.coeffs()[i]
            )),
        }
    });

    let solved = solve_u231(ORDER);
    c.run("u231-functional-equation", || {
        let r = u231_residual(&solved);
        match r.first_nonzero() {
            None => Ok(format!("order {ORDER}")),
            Some(i) => Err(format!("residual coefficient index {i}")),
        }
    });

    c.run("u231-closed-form-agrees", || {
        let closed = closed_form_u231_with(ORDER, sqrt).map_err(|e| e.to_string())?;
        for i in 0..=ORDER {
            ensure(solved.coeffs()[i] == closed.coeffs()[i], || {
                format!(
                    "residual coefficient index {i}: solve {} vs closed form {}",
                    solved.coeffs()[i],
                    closed.coeffs()[i]
                )
            })?;
        }
        let ints = solved.integer_coeffs().ok_or("non-integer coefficient")?;
        ensure(ints.iter().all(|c| *c >= BigInt::zero()), || {
            "negative coefficient".into()
        })?;
        Ok(format!("order {ORDER}"))
    });

    c.run("u231-superadditive", || {
        let a = solved.integer_coeffs().ok_or("non-integer coefficient")?;
        for total in 2..=ORDER {
            for m in 1..total {
                ensure(&a[m] * &a[total - m] <= a[total], || {
                    format!("a({m}) a({}) > a({total})", total - m)
                })?;
            }
        }
        Ok(format!("m + n <= {ORDER}"))
    });

    c.run("indecomposable-roundtrip", || {
        let u1 = PowerSeries::from_ints(&[0, 1, 3, -2, 5, 0, 7, 1, 1, 2, 9, 4], 20);
        let back = indecomposable_from_total(&total_from_indecomposable(&u1).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(back == u1, || "1 - 1/(1/(1 - u1)) differs from u1".into())?;
        Ok("order 20".into())
    });

    let n321 = opts.max_n.min(13);
    c.run("u321-indecomposable-nonnegative", || {
        let e = Enumerator::new().with_threads(opts.threads);
        let q = pat("321");
        let counts: Vec<BigUint> = (0..=n321)
            .map(|n| e.count_ulis_avoiders(&q, n).unwrap())
            .collect();
        let u = PowerSeries::from_biguints(&counts, n321);
        let u1 = indecomposable_from_total(&u).map_err(|e| e.to_string())?;
        let ints = u1.integer_coeffs().ok_or("non-integer coefficient in u1")?;
        for (n, c) in ints.iter().enumerate() {
            let cap = BigInt::from(counts[n].clone());
            ensure(*c >= BigInt::zero() && *c <= cap, || {
                format!("u1[{n}] = {c} outside [0, {cap}]")
            })?;
        }
        ensure(ints[0].is_zero(), || "u1 has a constant term".into())?;
        Ok(format!("n <= {n321}"))
    });
}

fn oeis_checks(c: &mut Collector, opts: &VerifyOptions) {
    let max_n = opts.max_n;
    let e = Enumerator::new()
        .with_ceiling(max_n.max(crate::enumerate::DEFAULT_CEILING))
        .with_threads(opts.threads);
    let run_fixture =
        |c: &mut Collector, name: &str, text: &str, compute: &dyn Fn(usize) -> BigUint| {
            c.run(name, || {
                let rows = fixtures::parse_bfile(text)?;
                let mut checked = 0;
                for (n, expected) in rows.into_iter().filter(|(n, _)| *n <= max_n) {
                    let got = compute(n);
                    ensure(got == expected, || {
                        format!("n = {n}: computed {got}, fixture {expected}")
                    })?;
                    checked += 1;
                }
                Ok(format!("{checked} terms"))
            });
        };
    let q231 = pat("231");
    let q132 = pat("132");
    let series = solve_u231(max_n);
    let closed = crate::series::closed_form_u231(max_n).expect("closed form");
    let dp = TreeCountDp::new(max_n + 1);
    run_fixture(c, "A082582-brute", fixtures::A082582, &|n| {
        e.count_ulis_avoiders(&q231, n).unwrap()
    });
    run_fixture(c, "A082582-series", fixtures::A082582, &|n| {
        series.coeffs()[n].to_integer().try_into().unwrap()
    });
    run_fixture(c, "A082582-closed-form", fixtures::A082582, &|n| {
        closed.coeffs()[n].to_integer().try_into().unwrap()
    });
    run_fixture(c, "A152880-brute", fixtures::A152880, &|n| {
        e.count_ulis_avoiders(&q132, n).unwrap()
    });
    run_fixture(c, "A152880-tree-dp", fixtures::A152880, &|n| {
        dp.u132(n).unwrap()
    });
}

fn ballot_checks(c: &mut Collector, opts: &VerifyOptions) {
    let nmax = opts.max_n.clamp(1, 12);
    let e = Enumerator::new().with_threads(opts.threads);
    let q132 = pat("132");
    c.run("i132-equals-ballot", || {
        for n in 1..=nmax {
            let i = e.count_ulis_involutions(&q132, n).unwrap();
            let b = count_bidirectional_ballot(n + 1).unwrap();
            ensure(i == b, || format!("n = {n}: i_n(132) = {i}, B_(n+1) = {b}"))?;
        }
        Ok(format!("1 <= n <= {nmax}"))
    });
    c.run("ballot-pruned-agrees", || {
        for n in 1..=20 {
            let a = count_bidirectional_ballot(n).unwrap();
            let b = count_bidirectional_ballot_pruned(n).unwrap();
            ensure(a == b, || format!("n = {n}: exhaustive {a}, pruned {b}"))?;
        }
        Ok("n <= 20".into())
    });
    c.run("involution-to-ballot-bijective", || {
        for n in 1..=nmax.min(10) {
            let mut seen = HashSet::new();
            for p in avoiders_of(&q132, n)
                .into_iter()
                .filter(|p| p.is_involution() && has_ulis(p))
            {
                let b = ulis_involution_to_ballot(&p).map_err(|e| e.to_string())?;
                ensure(b.is_bidirectional(), || {
                    format!("{p}: {b} is not bidirectional")
                })?;
                ensure(seen.insert(b.clone()), || format!("{p}: {b} repeated"))?;
            }
            let total = count_bidirectional_ballot(n + 1).unwrap();
            ensure(BigUint::from(seen.len()) == total, || {
                format!("n = {n}: {} images of {total}", seen.len())
            })?;
        }
        Ok(format!("n <= {}", nmax.min(10)))
    });
    c.run("involution-avoiders-binomial", || {
        for n in 0..=nmax {
            let got = e.count_involution_avoiders(&q132, n).unwrap();
            let want = binomial(n, n / 2).unwrap();
            ensure(got == want, || format!("n = {n}: {got} vs {want}"))?;
        }
        Ok(format!("n <= {nmax}"))
    });
}

fn sampler_checks(c: &mut Collector, opts: &VerifyOptions) {
    let nmax = opts.max_n.clamp(2, 12);
    c.run("unique-deepest-exhaustive", || {
        let dp = TreeCountDp::new(nmax);
        for n in 1..=nmax {
            let unique = all_dyck_paths(n - 1)
                .iter()
                .filter(|d| PlaneTree::from_dyck(d).max_depth_leaf_count().1 == 1)
                .count();
            let want = dp.count_unique_deepest_leaf_trees(n).unwrap();
            ensure(BigUint::from(unique) == want, || {
                format!("n = {n}: exhaustive {unique}, dp {want}")
            })?;
        }
        Ok(format!("n <= {nmax}"))
    });
    c.run("uniform-small-paths", || {
        let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
        let trials = 100_000u64;
        for semi in 1..=4 {
            let paths = all_dyck_paths(semi);
            let mut hits = std::collections::HashMap::new();
            for _ in 0..trials {
                *hits.entry(sample_dyck_path(semi, &mut rng)).or_insert(0u64) += 1;
            }
            let p = 1.0 / paths.len() as f64;
            let se = (p * (1.0 - p) / trials as f64).sqrt();
            for d in &paths {
                let f = *hits.get(d).unwrap_or(&0) as f64 / trials as f64;
                ensure((f - p).abs() <= 5.0 * se, || {
                    format!("{d}: frequency {f:.5}, expected {p:.5}")
                })?;
            }
            ensure(hits.len() == paths.len(), || {
                format!("semilength {semi}: sampled an invalid path")
            })?;
        }
        Ok("semilength <= 4, 100000 samples each".into())
    });
    c.run("estimates-converge-small-n", || {
        let dp = TreeCountDp::new(nmax);
        for n in 3..=nmax {
            let exact = crate::trees::catalan(n - 1);
            let p = ratio_f64(&dp.count_unique_deepest_leaf_trees(n).unwrap(), &exact);
            let r = estimate_ank(n, 4, 40_000, 7 + n as u64);
            let est = r.fraction(1).unwrap();
            let se = r.estimates[0].std_error.max(1e-9);
            ensure((est - p).abs() <= 5.0 * se, || {
                format!("n = {n}: estimate {est:.4}, exact {p:.4}")
            })?;
        }
        Ok(format!("3 <= n <= {nmax}"))
    });
    c.run("single-stream-deterministic", || {
        ensure(
            estimate_ank(50, 8, 3000, 11) == estimate_ank(50, 8, 3000, 11),
            || "reports differ".into(),
        )?;
        Ok("n = 50, seed 11".into())
    });
}

fn ratio_f64(a: &BigUint, b: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    num_rational::BigRational::new(a.clone().into(), b.clone().into())
        .to_f64()
        .unwrap_or(f64::NAN)
}
