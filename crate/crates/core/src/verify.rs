//! The end-to-end verification suite behind `k3vw verify`.
//!
//! Each check recomputes a quantity along two independent routes, or tests a
//! property that must hold exactly, and reports a one-line deterministic
//! summary. Nothing timing- or thread-dependent enters the report text.

use rayon::prelude::*;
use rug::{Float, Rational};

use crate::asymptotics;
use crate::invariants::{self, expand_partition_function, InvariantFamily, WClass};
use crate::qseries::{eta_inv24_oracle, eta_inv24_table, CoefficientTable};
use crate::rademacher::{a_exact, a_resolved, Status};
use crate::turan::{hermite_deviation, log_concave_at, turan_scan, RationalSequence, TuranTarget};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Small,
    Full,
}

struct Sizes {
    oracle_n: i64,
    rademacher_n: u64,
    dominance: (i64, i64),
    expansion_n: i64,
    identities_n: i64,
    log_concave_n: i64,
    turan_n: i64,
    hermite_n: &'static [i64],
}

impl Suite {
    fn sizes(self) -> Sizes {
        match self {
            Suite::Small => Sizes {
                oracle_n: 300,
                rademacher_n: 20,
                dominance: (10, 120),
                expansion_n: 60,
                identities_n: 60,
                log_concave_n: 200,
                turan_n: 120,
                hermite_n: &[100, 1000],
            },
            Suite::Full => Sizes {
                oracle_n: 2000,
                rademacher_n: 50,
                dominance: (10, 200),
                expansion_n: 500,
                identities_n: 300,
                log_concave_n: 1000,
                turan_n: 1000,
                hermite_n: &[100, 1000, 10_000],
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Families whose closed forms are compared with the direct expansion.
pub fn expansion_families() -> Vec<InvariantFamily> {
    let mut out = Vec::new();
    for r in [1, 2, 3, 4, 6] {
        out.push(InvariantFamily::su_r(r).expect("valid rank"));
    }
    for p in [2u32, 3, 5] {
        let p_i = p as i64;
        out.push(InvariantFamily::su_p(p, true, 0).expect("valid class"));
        for w2 in [2 * p_i, 2 * p_i + 2, 1] {
            out.push(InvariantFamily::su_p(p, false, w2).expect("valid class"));
        }
    }
    for p in [2, 3] {
        for rho in [1, 22] {
            out.push(InvariantFamily::twisted(p, rho).expect("valid twisted family"));
        }
    }
    out
}

/// Representative Turán subsequences across all three families.
pub fn turan_targets() -> Vec<TuranTarget> {
    let mut families = Vec::new();
    for r in [1, 2, 3] {
        families.push(InvariantFamily::su_r(r).expect("valid rank"));
    }
    for p in [2, 3] {
        for rho in [1, 22] {
            families.push(InvariantFamily::twisted(p, rho).expect("valid twisted family"));
        }
    }
    for p in [2u32, 3] {
        families.push(InvariantFamily::su_p(p, false, 1).expect("valid class"));
        families.push(InvariantFamily::su_p(p, true, 0).expect("valid class"));
        families.push(InvariantFamily::su_p(p, false, 2 * p as i64).expect("valid class"));
    }
    families.into_iter().flat_map(TuranTarget::family_targets).collect()
}

/// Index of the largest `a(m)` any check of the suite reads.
fn table_size(s: &Sizes) -> i64 {
    let mut need = s.oracle_n.max(s.dominance.1).max(s.rademacher_n as i64);
    for f in expansion_families() {
        need = need.max(f.required_table_index(s.expansion_n.max(s.identities_n)));
    }
    // alpha2_prime/alpha3_prime read a(pn) with p ≤ 5
    need = need.max(5 * s.identities_n);
    for t in turan_targets() {
        need = need.max(t.required_table_index(s.turan_n + 5));
    }
    need.max(s.hermite_n.iter().max().copied().unwrap_or(0) + 4)
}

fn outcome(id: u32, name: &'static str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { id, name, passed, detail }
}

fn check_oracle(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let oracle = eta_inv24_oracle(s.oracle_n)?;
    let mut mismatches = 0;
    for n in -1..=s.oracle_n {
        if table.get(n)? != oracle.get(n)? {
            mismatches += 1;
        }
    }
    let anchors = *table.get(-1)? == 1 && *table.get(0)? == 24;
    Ok(outcome(
        1,
        "oracle-equivalence",
        mismatches == 0 && anchors,
        format!("n <= {}: {mismatches} mismatches; a(-1)=1, a(0)=24: {anchors}", s.oracle_n),
    ))
}

fn check_rademacher(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let rows = (1..=s.rademacher_n)
        .into_par_iter()
        .map(|n| {
            let resolved = a_resolved(n, None)?;
            let fixed = a_exact(n, 100, 256)?;
            let want = table.get(n as i64)?;
            Ok(resolved.status == Status::Resolved
                && &resolved.rounded == want
                && &fixed.rounded == want
                && fixed.residual < 1e-6)
        })
        .collect::<Result<Vec<bool>>>()?;
    let bad: Vec<u64> = rows.iter().zip(1..).filter(|(ok, _)| !**ok).map(|(_, n)| n).collect();
    Ok(outcome(
        2,
        "rademacher-recovery",
        bad.is_empty(),
        format!("n in [1, {}]: failures {bad:?}", s.rademacher_n),
    ))
}

fn check_dominance(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let (lo, hi) = s.dominance;
    let sweep = asymptotics::sweep_a(lo, hi, table, 256)?;
    let above: Vec<i64> = sweep
        .reports
        .iter()
        .filter(|r| {
            let env = Float::with_val(256, -(crate::bigreal::pi(256) * Float::with_val(256, r.n).sqrt())).exp();
            r.relative_error >= env
        })
        .map(|r| r.n)
        .collect();
    let decreasing = sweep.decreasing_from.is_some_and(|n| n <= 25);
    Ok(outcome(
        3,
        "leading-term-dominance",
        above.is_empty() && decreasing,
        format!(
            "n in [{lo}, {hi}]: above envelope {above:?}; decreasing from {:?}; observed C = {}",
            sweep.decreasing_from,
            crate::bigreal::to_decimal(&sweep.observed_constant, 6)
        ),
    ))
}

fn check_expansion(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let families = expansion_families();
    let bad = families
        .par_iter()
        .map(|f| {
            let series = expand_partition_function(f, s.expansion_n, table)?;
            for n in series.lowest() - 2..=s.expansion_n {
                if series.coefficient(n)? != f.value(n, table)? {
                    return Ok(Some(format!("{f}@{n}")));
                }
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?;
    let bad: Vec<String> = bad.into_iter().flatten().collect();
    Ok(outcome(
        4,
        "closed-form-expansion",
        bad.is_empty(),
        format!("{} families, n <= {}: mismatches {bad:?}", families.len(), s.expansion_n),
    ))
}

fn check_identities(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let n_max = s.identities_n;
    let mut problems = Vec::new();
    for p in [2u32, 3, 5] {
        let p_i = p as i64;
        for (is_zero, w2) in [(true, 0), (false, 2 * p_i), (false, 4 * p_i), (false, 2)] {
            let w = WClass { is_zero, squared: w2 };
            for n in -1..=n_max {
                let v = invariants::alpha2(p, w, n, table)?;
                let zero_expected =
                    (n - w2 / 2).rem_euclid(p_i) != 0 && !(is_zero && n % (p_i * p_i) == 0);
                if !v.is_rational() || v.is_zero() != zero_expected {
                    problems.push(format!("alpha2 p={p} w2={w2} n={n}"));
                }
            }
            if w2 % (2 * p_i) == 0 {
                for n in -1..=n_max / p_i {
                    let lhs = invariants::alpha2_prime(p, w, n, table)?;
                    let rhs = invariants::alpha2(p, w, p_i * n, table)?;
                    if rhs.as_rational() != Some(&lhs) {
                        problems.push(format!("alpha2' p={p} w2={w2} n={n}"));
                    }
                }
            }
        }
        if p <= 3 {
            for n in -1..=n_max / p_i {
                if invariants::alpha3_prime(p, n, table)? != invariants::alpha3(p, 22, p_i * n, table)? {
                    problems.push(format!("alpha3' p={p} n={n}"));
                }
            }
            let fam = InvariantFamily::twisted(p, 22)?;
            let series = expand_partition_function(&fam, n_max, table)?;
            for (n, v) in series.iter() {
                if n % p_i != 0 && !v.is_zero() {
                    problems.push(format!("supersingular p={p} n={n}"));
                }
            }
        }
    }
    Ok(outcome(
        5,
        "vanishing-and-corollaries",
        problems.is_empty(),
        format!("n <= {n_max}: problems {problems:?}"),
    ))
}

fn check_turan(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let shifted = RationalSequence::from_fn(1, s.log_concave_n + 1, |n| Ok(Rational::from(table.get(n - 1)?)))?;
    let mut not_concave = Vec::new();
    for n in 2..=s.log_concave_n {
        if !log_concave_at(&shifted, n)? {
            not_concave.push(n);
        }
    }
    let targets = turan_targets();
    let mut lines = Vec::new();
    let mut all_found = true;
    for t in &targets {
        let mut firsts = Vec::new();
        for d in 2..=5u32 {
            let report = turan_scan(t, d, 1, s.turan_n, table)?;
            match report.first_hyperbolic_n {
                Some(n0) => firsts.push(n0.to_string()),
                None => {
                    all_found = false;
                    firsts.push("none".to_string());
                }
            }
        }
        lines.push(format!("{t}:{}", firsts.join("/")));
    }
    Ok(outcome(
        6,
        "turan-suite",
        not_concave.is_empty() && all_found,
        format!(
            "log-concave on [2, {}]: failures {not_concave:?}; first hyperbolic n (d=2/3/4/5) on [1, {}]: {}",
            s.log_concave_n,
            s.turan_n,
            lines.join(", ")
        ),
    ))
}

fn check_hermite(s: &Sizes, table: &CoefficientTable) -> Result<CheckOutcome> {
    let mut ok = true;
    let mut parts = Vec::new();
    for d in [2u32, 3] {
        let mut devs = Vec::new();
        for &n in s.hermite_n {
            let seq = RationalSequence::from_fn(n, n + d as i64, |m| Ok(Rational::from(table.get(m - 1)?)))?;
            devs.push(hermite_deviation(&seq, d, n, 1, 128)?);
        }
        ok &= devs.windows(2).all(|w| w[1] < w[0]);
        let shown: Vec<String> = devs.iter().map(|v| crate::bigreal::to_decimal(v, 6)).collect();
        parts.push(format!("d={d}: {}", shown.join(" > ")));
    }
    Ok(outcome(
        7,
        "hermite-convergence",
        ok,
        format!("n in {:?}: {}", s.hermite_n, parts.join("; ")),
    ))
}

/// A fixed computation touching every parallel code path.
fn fingerprint(table: &CoefficientTable) -> Result<String> {
    let r = a_exact(40, 60, 192)?;
    let fam = InvariantFamily::su_r(2)?;
    let report = turan_scan(&TuranTarget::family_targets(fam)[0], 3, 1, 60, table)?;
    let sweep = asymptotics::sweep_a(10, 40, table, 192)?;
    Ok(format!(
        "{} {} {:?} {}",
        r.approximation.to_string_radix(16, None),
        r.residual,
        report,
        crate::bigreal::to_decimal(&sweep.observed_constant, 40)
    ))
}

fn check_determinism(table: &CoefficientTable) -> Result<CheckOutcome> {
    let run = |threads: usize| -> Result<String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::Error::InvalidParameter(e.to_string()))?;
        pool.install(|| fingerprint(table))
    };
    let one = run(1)?;
    let four = run(4)?;
    let verdict = if one == four { "identical" } else { "differ" };
    Ok(outcome(8, "determinism", one == four, format!("1 vs 4 threads: fingerprints {verdict}")))
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckOutcome>> {
    let s = suite.sizes();
    let table = eta_inv24_table(table_size(&s))?;
    Ok(vec![
        check_oracle(&s, &table)?,
        check_rademacher(&s, &table)?,
        check_dominance(&s, &table)?,
        check_expansion(&s, &table)?,
        check_identities(&s, &table)?,
        check_turan(&s, &table)?,
        check_hermite(&s, &table)?,
        check_determinism(&table)?,
    ])
}

/// One line per check, then a summary line.
pub fn render(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{tag}] {} {}: {}\n", o.id, o.name, o.detail));
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
    out
}
