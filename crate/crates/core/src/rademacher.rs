//! The convergent Bessel-series formula for `a(n)`, `n ≥ 1`:
//!
//! ```text
//! a(n) = 2π n^{-13/2} Σ_{k≥1} (1/k) Σ_{0≤h<k, (h,k)=1} ω_{h,k}^24 e^{-2πi(n+1)h/k} I₁₃(4π√n / k)
//! ```
//!
//! Phases are kept as exact rational angles until the final summation. For
//! fixed `k` every angle `12·s(h,k) − (n+1)h/k` is a multiple of `1/k`, so the
//! inner sum is accumulated as integer multiplicities of the `k`-th roots of
//! unity and only `k` distinct cosines and sines are evaluated.

use rayon::prelude::*;
use rug::float::Round;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::bigreal::{self, BigReal};
use crate::dedekind::omega24_phase;
use crate::{Error, Result};

pub const MIN_PRECISION: u32 = 64;

/// Doubling stops once consecutive partial sums round alike with a residual
/// below this value.
pub const ACCEPT_RESIDUAL: f64 = 1e-3;

const MAX_DOUBLINGS: u32 = 16;

/// `I₁₃(x)` from its ascending series `Σ_m (x/2)^{2m+13} / (m!(m+13)!)`.
///
/// Summation stops once the remaining tail is provably below
/// `2^{-prec-8}` times the partial sum.
pub fn bessel_i13(x: &BigReal, prec: u32) -> Result<BigReal> {
    if x.is_nan() || *x < 0 {
        return Err(Error::NegativeArgument);
    }
    if x.is_zero() {
        return Ok(Float::new(prec));
    }
    let wp = prec + 64;
    let half = Float::with_val(wp, x / 2u32);
    let y = Float::with_val(wp, half.square_ref());
    let mut term = Float::with_val(wp, (&half).pow(13u32)) / Integer::from(Integer::factorial(13));
    let mut sum = term.clone();
    let mut m: u64 = 0;
    loop {
        m += 1;
        term *= &y;
        term /= m * (m + 13);
        sum += &term;
        // t_{m+1}/t_m = y / ((m+1)(m+14)), decreasing in m
        let ratio = Float::with_val(wp, &y / ((m + 1) * (m + 14)));
        if ratio < 0.5 {
            let one_minus = Float::with_val(wp, 1u32 - &ratio);
            let tail = Float::with_val(wp, &term * &ratio) / one_minus;
            let threshold = Float::with_val(wp, &sum >> (prec + 8));
            if tail <= threshold {
                break;
            }
        }
    }
    Ok(Float::with_val_round(prec, &sum, Round::Nearest).0)
}

/// Default working precision `⌈4π√n / ln 2⌉ + 96` bits.
pub fn default_precision(n: u64) -> u32 {
    let bits = 4.0 * std::f64::consts::PI * (n as f64).sqrt() / std::f64::consts::LN_2;
    (bits.ceil() as u32 + 96).max(MIN_PRECISION)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Resolved,
    Unresolved,
}

/// A partial sum of the Bessel series together with its nearest integer.
#[derive(Debug, Clone)]
pub struct RademacherResult {
    pub n: u64,
    pub terms: u64,
    pub precision: u32,
    pub approximation: BigReal,
    /// Imaginary part of the partial sum before it is discarded.
    pub imaginary: BigReal,
    pub rounded: Integer,
    pub residual: BigReal,
    pub status: Status,
}

/// Multiplicity of each `k`-th root of unity `e^{2πi j/k}` in the
/// inner sum over `h` for fixed `k`.
pub fn phase_multiplicities(n: u64, k: u64) -> Result<Vec<u64>> {
    let mut counts = vec![0u64; k as usize];
    let k_int = Integer::from(k);
    for h in 0..k {
        if gcd(h, k) != 1 {
            continue;
        }
        let t = omega24_phase(h, k)?;
        let scaled = Rational::from(t.angle() * &k_int);
        debug_assert!(scaled.is_integer());
        let shift = Integer::from(n + 1) * h;
        let j = (scaled.into_numer_denom().0 - shift).modulo(&k_int);
        counts[j.to_usize().expect("residue below k")] += 1;
    }
    Ok(counts)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Real and imaginary parts of `(1/k) Σ_h ω_{h,k}^24 e^{-2πi(n+1)h/k} I₁₃(4π√n/k)`.
fn k_block(n: u64, k: u64, four_pi_sqrt_n: &BigReal, wp: u32) -> Result<(BigReal, BigReal)> {
    let counts = phase_multiplicities(n, k)?;
    let mut re = Float::new(wp);
    let mut im = Float::new(wp);
    for (j, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        if j == 0 {
            re += count;
            continue;
        }
        let (c, s) = bigreal::cos_sin_turns(&Rational::from((j as u64, k)), wp);
        re += c * count;
        im += s * count;
    }
    let x = Float::with_val(wp, four_pi_sqrt_n / k);
    let weight = bessel_i13(&x, wp)? / k;
    Ok((re * &weight, im * weight))
}

/// Partial sum of the series over `1 ≤ k ≤ terms` at `precision` bits.
///
/// Blocks for different `k` may be evaluated concurrently; they are always
/// added in ascending `k`, so the result does not depend on thread count.
pub fn a_exact(n: u64, terms: u64, precision: u32) -> Result<RademacherResult> {
    if n == 0 {
        return Err(Error::NonPositive { name: "n", value: 0 });
    }
    if terms == 0 {
        return Err(Error::NonPositive { name: "terms", value: 0 });
    }
    if precision < MIN_PRECISION {
        return Err(Error::PrecisionTooLow { min: MIN_PRECISION, got: precision });
    }
    let wp = precision + 32;
    let pi = bigreal::pi(wp);
    let sqrt_n = Float::with_val(wp, n).sqrt();
    let four_pi_sqrt_n = Float::with_val(wp, &pi * 4u32) * &sqrt_n;

    let blocks: Vec<(BigReal, BigReal)> = (1..=terms)
        .into_par_iter()
        .map(|k| k_block(n, k, &four_pi_sqrt_n, wp))
        .collect::<Result<_>>()?;
    let mut re = Float::new(wp);
    let mut im = Float::new(wp);
    for (block_re, block_im) in &blocks {
        re += block_re;
        im += block_im;
    }

    // 2π / n^{13/2}
    let n_pow = Float::with_val(wp, Integer::from(n).pow(6)) * sqrt_n;
    let prefactor = pi * 2u32 / n_pow;
    let approximation = Float::with_val(precision, re * &prefactor);
    let imaginary = Float::with_val(precision, im * prefactor);

    let bound_bits = precision / 2;
    let scale = Float::with_val(precision, approximation.abs_ref()).max(&Float::with_val(precision, 1u32));
    let bound = scale >> bound_bits;
    if Float::with_val(precision, imaginary.abs_ref()) > bound {
        return Err(Error::ImaginaryResidue {
            n,
            value: bigreal::to_decimal(&imaginary, 12),
            bound_bits,
        });
    }

    let rounded = approximation
        .to_integer()
        .expect("finite partial sum");
    let residual = Float::with_val(precision, &approximation - &rounded).abs();
    let status = if residual < 0.5 { Status::Resolved } else { Status::Unresolved };
    Ok(RademacherResult {
        n,
        terms,
        precision,
        approximation,
        imaginary,
        rounded,
        residual,
        status,
    })
}

/// Starting number of terms for [`a_resolved`].
pub fn initial_terms(n: u64) -> u64 {
    ((n as f64).sqrt().ceil() as u64).max(2)
}

/// Evaluates at `K, 2K, 4K, …` until two consecutive partial sums round to
/// the same integer and the later residual is below [`ACCEPT_RESIDUAL`].
pub fn a_resolved(n: u64, precision: Option<u32>) -> Result<RademacherResult> {
    let precision = precision.unwrap_or_else(|| default_precision(n));
    let mut terms = initial_terms(n);
    let mut previous = a_exact(n, terms, precision)?;
    for _ in 0..MAX_DOUBLINGS {
        terms *= 2;
        let current = a_exact(n, terms, precision)?;
        if current.rounded == previous.rounded
            && current.status == Status::Resolved
            && current.residual < ACCEPT_RESIDUAL
        {
            return Ok(current);
        }
        previous = current;
    }
    Err(Error::Unresolved { n, terms, precision })
}
