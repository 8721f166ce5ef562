//! Leading Bessel terms of `a(n)` and of the three invariant families, and
//! observed relative errors against the exact values.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::bigreal::{self, BigReal};
use crate::invariants::{is_prime, InvariantFamily};
use crate::qseries::CoefficientTable;
use crate::rademacher::bessel_i13;
use crate::{Error, Result};

/// `2π·C·m^{−13/2}·I₁₃(4π√x)` together with the Bessel argument `4π√x`.
fn bessel_term(coef: &Float, m: &Float, x: &Float, prec: u32) -> Result<(BigReal, BigReal)> {
    let wp = prec + 32;
    let arg = bigreal::pi(wp) * 4u32 * Float::with_val(wp, x.sqrt_ref());
    let bessel = bessel_i13(&arg, wp)?;
    let power = bigreal::pow_ratio(&Float::with_val(wp, m), -13, 2, wp);
    let value = bigreal::pi(wp) * 2u32 * coef * power * bessel;
    Ok((Float::with_val(prec, value), Float::with_val(prec, arg)))
}

fn real(value: i64, prec: u32) -> Float {
    Float::with_val(prec + 32, value)
}

/// `2π n^{−13/2} I₁₃(4π√n)`.
pub fn main_term_a(n: i64, prec: u32) -> Result<BigReal> {
    if n < 1 {
        return Err(Error::NonPositive { name: "n", value: n });
    }
    let one = real(1, prec);
    Ok(bessel_term(&one, &real(n, prec), &real(n, prec), prec)?.0)
}

/// `c_p(n) = p²¹ + p^{ρ−1}(p−1)` if `p | n`, `p²¹ − p^{ρ−1}` otherwise.
pub fn c_p(p: u32, rho: u32, n: i64) -> Integer {
    let base = Integer::from(p).pow(21);
    let twist = Integer::from(p).pow(rho - 1);
    if n % p as i64 == 0 {
        base + twist * (p - 1)
    } else {
        base - twist
    }
}

/// `2π p^{31/2} n^{−13/2} I₁₃(4π√(pn))`, the leading term of `α₃,ₚ'(n)`.
/// `n` may be any positive real.
pub fn main_term_alpha3_prime(p: u32, n: &Rational, prec: u32) -> Result<BigReal> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if *n <= 0 {
        return Err(Error::NonPositive { name: "n", value: n.to_f64() as i64 });
    }
    let wp = prec + 32;
    let coef = bigreal::pow_ratio(&Float::with_val(wp, p), 31, 2, wp);
    let m = Float::with_val(wp, n);
    let x = Float::with_val(wp, &m * p);
    Ok(bessel_term(&coef, &m, &x, prec)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MainTermKind {
    /// The main term stated for the family.
    Leading,
    /// `ρ = 22`, `p ∤ n`: `c_p(n) = 0`, replaced by the `α₃'` main term at `n/p`.
    SupersingularFallback,
}

#[derive(Debug, Clone)]
pub struct MainTerm {
    pub value: BigReal,
    pub kind: MainTermKind,
    /// Argument `x` of `I₁₃(x)`.
    pub bessel_argument: BigReal,
}

/// Main term of the family's coefficient at `n`.
///
/// For `SU(p)/ℤ_p` only the case `2p | 2n − w²` has a nonvanishing main term,
/// `2π n^{−13/2} I₁₃(4π√n)`. The `p² | n` case with `2p ∤ 2n − w²` needs
/// `w = 0`, which forces `2p | 2n − w²`, so every other `n` is reported as
/// [`Error::ZeroMainTerm`].
pub fn main_term_family(family: &InvariantFamily, n: i64, prec: u32) -> Result<MainTerm> {
    family.validate()?;
    if n < 1 {
        return Err(Error::NonPositive { name: "n", value: n });
    }
    let leading = |coef: Float, m: i64, x: i64| -> Result<MainTerm> {
        let (value, arg) = bessel_term(&coef, &real(m, prec), &real(x, prec), prec)?;
        Ok(MainTerm { value, kind: MainTermKind::Leading, bessel_argument: arg })
    };
    match *family {
        InvariantFamily::SuR { r } => {
            let rn = r as i64 * n;
            leading(real(1, prec), rn, rn)
        }
        InvariantFamily::SuPModCenter { p, w } => {
            if (2 * n - w.squared).rem_euclid(2 * p as i64) == 0 {
                leading(real(1, prec), n, n)
            } else {
                Err(Error::ZeroMainTerm { n })
            }
        }
        InvariantFamily::Twisted { p, rho } => {
            let c = c_p(p, rho, n);
            if c != 0 {
                return leading(Float::with_val(prec + 32, &c), n, n);
            }
            let m = Rational::from((n, p as i64));
            let value = main_term_alpha3_prime(p, &m, prec)?;
            let arg = bigreal::pi(prec) * 4u32 * Float::with_val(prec, n).sqrt();
            Ok(MainTerm { value, kind: MainTermKind::SupersingularFallback, bessel_argument: arg })
        }
    }
}

#[derive(Debug, Clone)]
pub struct AsymptoticReport {
    pub n: i64,
    pub exact: Rational,
    pub main_term: BigReal,
    pub kind: MainTermKind,
    /// `|exact/main_term − 1|`.
    pub relative_error: BigReal,
    /// `e^{−x/2}` for the Bessel argument `x`, i.e. `e^{−2π√(·)}`.
    pub bound_scale: BigReal,
}

fn relative_error(exact: &Rational, main: &Float, prec: u32) -> Float {
    let e = bigreal::from_rational(exact, prec);
    Float::with_val(prec, e / main - 1u32).abs()
}

fn bound_scale(arg: &Float, prec: u32) -> Float {
    Float::with_val(prec, -Float::with_val(prec, arg / 2u32)).exp()
}

/// Precision used for reports; relative errors are computed at no less than 128 bits.
fn report_precision(prec: u32) -> u32 {
    prec.max(128)
}

pub fn report_a(n: i64, table: &CoefficientTable, prec: u32) -> Result<AsymptoticReport> {
    let prec = report_precision(prec);
    let exact = Rational::from(table.get(n)?);
    let main = main_term_a(n, prec)?;
    let arg = bigreal::pi(prec) * 4u32 * Float::with_val(prec, n).sqrt();
    Ok(AsymptoticReport {
        n,
        relative_error: relative_error(&exact, &main, prec),
        bound_scale: bound_scale(&arg, prec),
        exact,
        main_term: main,
        kind: MainTermKind::Leading,
    })
}

pub fn report_family(
    family: &InvariantFamily,
    n: i64,
    table: &CoefficientTable,
    prec: u32,
) -> Result<AsymptoticReport> {
    let prec = report_precision(prec);
    let main = main_term_family(family, n, prec)?;
    let exact = family.rational_value(n, table)?;
    Ok(AsymptoticReport {
        n,
        relative_error: relative_error(&exact, &main.value, prec),
        bound_scale: bound_scale(&main.bessel_argument, prec),
        exact,
        main_term: main.value,
        kind: main.kind,
    })
}

#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub reports: Vec<AsymptoticReport>,
    /// `max relative_error · e^{π√n}` over the sweep.
    pub observed_constant: BigReal,
    /// Smallest `n₀` from which the relative errors strictly decrease.
    pub decreasing_from: Option<i64>,
}

fn summarize(reports: Vec<AsymptoticReport>, prec: u32) -> SweepSummary {
    let prec = report_precision(prec);
    let mut observed = Float::new(prec);
    for r in &reports {
        let envelope = bigreal::pi(prec) * Float::with_val(prec, r.n).sqrt();
        let c = Float::with_val(prec, &r.relative_error * envelope.exp());
        if c > observed {
            observed = c;
        }
    }
    let mut decreasing_from = reports.last().map(|r| r.n);
    for w in reports.windows(2).rev() {
        if w[1].relative_error < w[0].relative_error {
            decreasing_from = Some(w[0].n);
        } else {
            break;
        }
    }
    SweepSummary { reports, observed_constant: observed, decreasing_from }
}

/// Reports for `a(n)`, `n ∈ [n_min, n_max]`, in ascending order.
pub fn sweep_a(n_min: i64, n_max: i64, table: &CoefficientTable, prec: u32) -> Result<SweepSummary> {
    let reports = (n_min..=n_max)
        .into_par_iter()
        .map(|n| report_a(n, table, prec))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(reports, prec))
}

/// Reports for the family at each `n` whose main term does not vanish.
pub fn sweep_family(
    family: &InvariantFamily,
    n_min: i64,
    n_max: i64,
    table: &CoefficientTable,
    prec: u32,
) -> Result<SweepSummary> {
    let reports = (n_min..=n_max)
        .into_par_iter()
        .map(|n| match report_family(family, n, table, prec) {
            Err(Error::ZeroMainTerm { .. }) => Ok(None),
            other => other.map(Some),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(reports.into_iter().flatten().collect(), prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::eta_inv24_oracle;

    #[test]
    fn main_term_at_one() {
        let prec = 128;
        let x = bigreal::pi(prec + 32) * 4u32;
        let want = bigreal::pi(prec + 32) * 2u32 * bessel_i13(&x, prec + 32).unwrap();
        let got = main_term_a(1, prec).unwrap();
        assert!(Float::with_val(prec, (got / want) - 1u32).abs() < 1e-35);
        assert!(main_term_a(0, prec).is_err());
    }

    #[test]
    fn leading_term_dominates_at_100() {
        let t = eta_inv24_oracle(100).unwrap();
        let r = report_a(100, &t, 256).unwrap();
        let bound = (-std::f64::consts::PI * 10.0).exp();
        assert!(r.relative_error < bound, "{}", r.relative_error);
        let r25 = report_a(25, &t, 256).unwrap();
        assert!(r.relative_error < r25.relative_error);
    }

    #[test]
    fn c_p_cases() {
        assert_eq!(c_p(2, 22, 101), 0);
        assert_eq!(c_p(2, 22, 100), Integer::from(1) << 22);
        assert_eq!(c_p(3, 1, 3), Integer::from(3).pow(21) + 2);
        assert_eq!(c_p(3, 1, 4), Integer::from(3).pow(21) - 1);
    }

    #[test]
    fn family_main_terms() {
        let prec = 128;
        let su2 = InvariantFamily::su_r(2).unwrap();
        let m = main_term_family(&su2, 50, prec).unwrap();
        let want = main_term_a(100, prec).unwrap();
        assert_eq!(m.kind, MainTermKind::Leading);
        assert!(Float::with_val(prec, m.value / want - 1u32).abs() < 1e-30);

        let a2 = InvariantFamily::su_p(3, false, 6).unwrap();
        let m = main_term_family(&a2, 3, prec).unwrap();
        let want = main_term_a(3, prec).unwrap();
        assert!(Float::with_val(prec, m.value / want - 1u32).abs() < 1e-30);
        assert_eq!(main_term_family(&a2, 4, prec).unwrap_err(), Error::ZeroMainTerm { n: 4 });

        let odd = InvariantFamily::su_p(3, false, 1).unwrap();
        assert!(matches!(main_term_family(&odd, 7, prec), Err(Error::ZeroMainTerm { .. })));
    }

    #[test]
    fn supersingular_fallback() {
        let prec = 128;
        let tw = InvariantFamily::twisted(2, 22).unwrap();
        let m = main_term_family(&tw, 101, prec).unwrap();
        assert_eq!(m.kind, MainTermKind::SupersingularFallback);
        let want = main_term_alpha3_prime(2, &Rational::from((101, 2)), prec).unwrap();
        assert_eq!(m.value, want);
        assert!(m.value > 0);
        assert_eq!(main_term_family(&tw, 100, prec).unwrap().kind, MainTermKind::Leading);
    }

    #[test]
    fn alpha3_prime_main_term_tracks_exact_values() {
        let t = eta_inv24_oracle(400).unwrap();
        let mut last = f64::INFINITY;
        for n in [20i64, 50, 100, 200] {
            let exact = crate::invariants::alpha3_prime(2, n, &t).unwrap();
            let main = main_term_alpha3_prime(2, &Rational::from(n), 128).unwrap();
            let rel = relative_error(&exact, &main, 128).to_f64();
            assert!(rel < last, "n={n} rel={rel}");
            last = rel;
        }
    }

    #[test]
    fn sweep_decreases() {
        let t = eta_inv24_oracle(80).unwrap();
        let s = sweep_a(10, 80, &t, 256).unwrap();
        assert_eq!(s.reports.len(), 71);
        assert!(s.decreasing_from.unwrap() <= 25);
        assert!(s.observed_constant < 1);
    }
}
