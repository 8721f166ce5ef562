//! Jensen polynomials, exact hyperbolicity and Turán-inequality scans, and
//! the renormalized Jensen polynomials whose limits are Hermite polynomials.
//!
//! `J^{d,n}(X) = Σ_{j=0}^{d} C(d,j) α(n+j) X^j`. For positive sequences,
//! hyperbolicity of `J^{d,n}` is equivalent to the Turán inequalities of
//! orders `1..=d` at `n`. The Hankel test uses Hermite's criterion: the
//! matrix of root power sums `[s_{i+j}]` of `J^{k,n}` is positive definite
//! exactly when the roots are real and distinct.

use rayon::prelude::*;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde::Serialize;

use crate::bigreal::BigReal;
use crate::invariants::InvariantFamily;
use crate::qseries::CoefficientTable;
use crate::{Error, Result};

pub use crate::poly::RationalPolynomial;

/// A finite window `α(start), α(start+1), …` of a rational sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSequence {
    start: i64,
    values: Vec<Rational>,
}

impl RationalSequence {
    pub fn new(start: i64, values: Vec<Rational>) -> Self {
        RationalSequence { start, values }
    }

    /// Evaluates `f` on `start..=end`.
    pub fn from_fn(start: i64, end: i64, f: impl Fn(i64) -> Result<Rational>) -> Result<Self> {
        let values = (start..=end).map(f).collect::<Result<Vec<_>>>()?;
        Ok(RationalSequence { start, values })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// Last index held (`start − 1` when empty).
    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Result<&Rational> {
        if n < self.start || n > self.end() {
            return Err(Error::OutOfRange { index: n, lo: self.start, hi: self.end() });
        }
        Ok(&self.values[(n - self.start) as usize])
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        RationalSequence {
            start: self.start,
            values: self.values.iter().map(|v| Rational::from(v * factor)).collect(),
        }
    }
}

fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

pub fn jensen_poly(seq: &RationalSequence, d: u32, n: i64) -> Result<RationalPolynomial> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d", value: 0 });
    }
    let coeffs = (0..=d)
        .map(|j| Ok(Rational::from(seq.get(n + j as i64)? * binomial(d, j))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalPolynomial::new(coeffs))
}

pub fn is_hyperbolic(poly: &RationalPolynomial) -> Result<bool> {
    poly.is_hyperbolic()
}

/// Determinant by exact Gaussian elimination with row pivoting.
fn determinant(mut m: Vec<Vec<Rational>>) -> Rational {
    let size = m.len();
    let mut det = Rational::from(1);
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| m[r][col] != 0) else {
            return Rational::new();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..size {
            if m[r][col] == 0 {
                continue;
            }
            let factor = Rational::from(&m[r][col] / &m[col][col]);
            for c in col..size {
                let delta = Rational::from(&factor * &m[col][c]);
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Leading principal minors (sizes `1..=k`) of the Hermite matrix of `J^{k,n}`.
pub fn hankel_minors(seq: &RationalSequence, n: i64, k: u32) -> Result<Vec<Rational>> {
    let poly = jensen_poly(seq, k, n)?;
    let k = k as usize;
    let sums = poly.newton_sums(2 * k - 1)?;
    Ok((1..=k)
        .map(|size| {
            let m = (0..size).map(|i| (0..size).map(|j| sums[i + j].clone()).collect()).collect();
            determinant(m)
        })
        .collect())
}

/// True iff every leading minor up to size `k` is strictly positive.
pub fn hankel_check(seq: &RationalSequence, n: i64, k: u32) -> Result<bool> {
    Ok(hankel_minors(seq, n, k)?.iter().all(|m| *m > 0))
}

/// `α(n)² ≥ α(n−1)·α(n+1)`.
pub fn log_concave_at(seq: &RationalSequence, n: i64) -> Result<bool> {
    let mid = seq.get(n)?;
    let lhs = Rational::from(mid * mid);
    let rhs = Rational::from(seq.get(n - 1)? * seq.get(n + 1)?);
    Ok(lhs >= rhs)
}

/// `H_d` with `Σ H_d(X) t^d/d! = exp(−t² + Xt)`.
pub fn hermite(d: u32) -> RationalPolynomial {
    let x = RationalPolynomial::from_integers(&[0, 1]);
    let mut prev = RationalPolynomial::from_integers(&[1]);
    if d == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for k in 1..d {
        // H_{k+1} = X·H_k − 2k·H_{k−1}
        let next = &(&x * &cur) - &prev.scale(&Rational::from(2 * k));
        prev = cur;
        cur = next;
    }
    cur
}

/// `A(n) = 2π√(r/n)` and `δ(n) = ((π/2)√r)^{1/2} n^{−3/4}` at leading order.
pub fn renormalization(growth: u64, n: i64, prec: u32) -> (BigReal, BigReal) {
    let pi = Float::with_val(prec, Constant::Pi);
    let r = Float::with_val(prec, growth);
    let nf = Float::with_val(prec, n);
    let a = Float::with_val(prec, &pi * 2u32) * Float::with_val(prec, &r / &nf).sqrt();
    let delta_sq = Float::with_val(prec, &pi / 2u32) * r.sqrt() / nf.pow(Float::with_val(prec, 1.5));
    (a, delta_sq.sqrt())
}

/// Coefficients (constant first) of
/// `Ĵ(X) = δ^{−d}/α(n) · J^{d,n}((δX − 1)/e^{A})`.
pub fn renormalized_jensen(
    seq: &RationalSequence,
    d: u32,
    n: i64,
    growth: u64,
    prec: u32,
) -> Result<Vec<BigReal>> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d", value: 0 });
    }
    if n < 1 {
        return Err(Error::NonPositive { name: "n", value: n });
    }
    if growth == 0 {
        return Err(Error::NonPositive { name: "r", value: 0 });
    }
    let base = seq.get(n)?;
    if *base <= 0 {
        return Err(Error::NonPositiveValue { n, value: base.to_string() });
    }
    // the alternating sums below cancel roughly d·log2(1/δ) bits
    let work = prec + 64 + 8 * d;
    let (a, delta) = renormalization(growth, n, work);
    let ratios = (0..=d)
        .map(|j| Ok(Float::with_val(work, Rational::from(seq.get(n + j as i64)? / base))))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(d as usize + 1);
    for i in 0..=d {
        let mut sum = Float::new(work);
        for j in i..=d {
            let weight = binomial(d, j) * binomial(j, i);
            let damp = Float::with_val(work, -(Float::with_val(work, &a * j))).exp();
            let mut term = Float::with_val(work, &ratios[j as usize] * &damp) * weight;
            if (j - i) % 2 == 1 {
                term = -term;
            }
            sum += term;
        }
        let scale = Float::with_val(work, &delta).pow(i as i32 - d as i32);
        out.push(Float::with_val(prec, sum * scale));
    }
    Ok(out)
}

/// `max_i |Ĵ_i − H_i|` over the coefficients of the renormalized Jensen polynomial.
pub fn hermite_deviation(
    seq: &RationalSequence,
    d: u32,
    n: i64,
    growth: u64,
    prec: u32,
) -> Result<BigReal> {
    let coeffs = renormalized_jensen(seq, d, n, growth, prec)?;
    let h = hermite(d);
    let mut worst = Float::new(prec);
    for (i, c) in coeffs.iter().enumerate() {
        let diff = Float::with_val(prec, c - &h.coeff(i)).abs();
        if diff > worst {
            worst = diff;
        }
    }
    Ok(worst)
}

/// A sequence `n ↦ α(step·n)` drawn from an invariant family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TuranTarget {
    pub family: InvariantFamily,
    pub step: i64,
    /// Scan the real part of a cyclotomic value instead of requiring rationality.
    pub real_embedding: bool,
}

impl TuranTarget {
    /// The subsequences of this family that satisfy the Turán inequalities eventually.
    pub fn family_targets(family: InvariantFamily) -> Vec<TuranTarget> {
        let plain = |step| TuranTarget { family, step, real_embedding: false };
        match family {
            InvariantFamily::SuR { .. } => vec![plain(1)],
            InvariantFamily::Twisted { p, .. } => vec![plain(p as i64)],
            InvariantFamily::SuPModCenter { p, w } => {
                let p = p as i64;
                // odd w² leaves every α₂ value non-real
                let odd = w.squared % 2 != 0;
                let mut targets = Vec::new();
                if odd && w.squared % p != 0 {
                    targets.push(TuranTarget { family, step: 1, real_embedding: true });
                }
                if w.squared % (2 * p) == 0 {
                    targets.push(plain(p));
                }
                targets.push(TuranTarget { family, step: p * p, real_embedding: odd });
                targets
            }
        }
    }

    /// `r` in `A(n) = 2π√(r/n)`: the sequence grows like `exp(4π√(r n))`.
    pub fn growth(&self) -> u64 {
        match self.family {
            InvariantFamily::SuR { r } => r as u64 * self.step as u64,
            _ => self.step as u64,
        }
    }

    /// Largest `a(m)` index needed to evaluate the target on `[.., n_max]`.
    pub fn required_table_index(&self, n_max: i64) -> i64 {
        self.family.required_table_index(self.step * n_max)
    }

    /// Values on `[n_min, n_max]`, plus the indices whose exact value had a
    /// nonzero imaginary part (only possible with `real_embedding`).
    pub fn sequence(
        &self,
        n_min: i64,
        n_max: i64,
        table: &CoefficientTable,
    ) -> Result<(RationalSequence, Vec<i64>)> {
        let values: Vec<(Rational, bool)> = (n_min..=n_max)
            .into_par_iter()
            .map(|n| {
                let v = self.family.value(self.step * n, table)?;
                if let Some(q) = v.as_rational() {
                    return Ok((q.clone(), false));
                }
                if !self.real_embedding {
                    return Err(Error::NonReal { n: self.step * n });
                }
                let re = v.real_part();
                Ok((re.as_rational().expect("real part is rational").clone(), true))
            })
            .collect::<Result<Vec<_>>>()?;
        let flagged = values
            .iter()
            .enumerate()
            .filter(|(_, (_, im))| *im)
            .map(|(i, _)| n_min + i as i64)
            .collect();
        let seq = RationalSequence::new(n_min, values.into_iter().map(|(v, _)| v).collect());
        Ok((seq, flagged))
    }
}

impl std::fmt::Display for TuranTarget {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.family)?;
        if self.step != 1 {
            write!(f, "[{}n]", self.step)?;
        }
        if self.real_embedding {
            write!(f, "[re]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TuranReport {
    pub target: String,
    pub d: u32,
    pub n_min: i64,
    pub n_max: i64,
    /// Smallest `n₀` with `J^{d,n}` hyperbolic for every `n ∈ [n₀, n_max]`.
    pub first_hyperbolic_n: Option<i64>,
    pub failures: Vec<i64>,
    /// Smallest `n₀` from which all Hermite minors are strictly positive.
    pub hankel_positive_from: Option<i64>,
    /// `n` where the minors are nonnegative with at least one equal to zero.
    pub hankel_boundary: Vec<i64>,
    /// `n` in `[n_min, n_max + d]` with `α(n) ≤ 0`.
    pub nonpositive: Vec<i64>,
    pub imaginary_flagged: Vec<i64>,
}

fn threshold(bad: &[i64], n_min: i64, n_max: i64) -> Option<i64> {
    match bad.last() {
        None => Some(n_min),
        Some(&last) if last < n_max => Some(last + 1),
        Some(_) => None,
    }
}

/// Scans `J^{d,n}` for `n ∈ [n_min, n_max]`; `seq` must cover `[n_min, n_max + d]`.
pub fn scan_sequence(
    seq: &RationalSequence,
    label: &str,
    d: u32,
    n_min: i64,
    n_max: i64,
) -> Result<TuranReport> {
    if d == 0 {
        return Err(Error::NonPositive { name: "d", value: 0 });
    }
    if n_max < n_min {
        return Err(Error::InvalidParameter(format!("empty window [{n_min}, {n_max}]")));
    }
    seq.get(n_min)?;
    seq.get(n_max + d as i64)?;

    #[derive(Clone, Copy)]
    enum Minors {
        Positive,
        Boundary,
        Negative,
    }
    let rows: Vec<(bool, Minors)> = (n_min..=n_max)
        .into_par_iter()
        .map(|n| {
            let poly = jensen_poly(seq, d, n)?;
            if poly.is_zero() {
                return Ok((false, Minors::Negative));
            }
            let hyperbolic = poly.is_hyperbolic()?;
            let minors = hankel_minors(seq, n, d)?;
            let class = if minors.iter().all(|m| *m > 0) {
                Minors::Positive
            } else if minors.iter().all(|m| *m >= 0) {
                Minors::Boundary
            } else {
                Minors::Negative
            };
            Ok((hyperbolic, class))
        })
        .collect::<Result<Vec<_>>>()?;

    let index = |i: usize| n_min + i as i64;
    let failures: Vec<i64> =
        rows.iter().enumerate().filter(|(_, r)| !r.0).map(|(i, _)| index(i)).collect();
    let not_strict: Vec<i64> = rows
        .iter()
        .enumerate()
        .filter(|(_, r)| !matches!(r.1, Minors::Positive))
        .map(|(i, _)| index(i))
        .collect();
    let hankel_boundary =
        rows.iter().enumerate().filter(|(_, r)| matches!(r.1, Minors::Boundary)).map(|(i, _)| index(i)).collect();
    let nonpositive =
        (n_min..=n_max + d as i64).filter(|&n| *seq.get(n).expect("checked range") <= 0).collect();

    Ok(TuranReport {
        target: label.to_string(),
        d,
        n_min,
        n_max,
        first_hyperbolic_n: threshold(&failures, n_min, n_max),
        hankel_positive_from: threshold(&not_strict, n_min, n_max),
        failures,
        hankel_boundary,
        nonpositive,
        imaginary_flagged: Vec::new(),
    })
}

/// Runs [`scan_sequence`] on the values of `target`.
pub fn turan_scan(
    target: &TuranTarget,
    d: u32,
    n_min: i64,
    n_max: i64,
    table: &CoefficientTable,
) -> Result<TuranReport> {
    let (seq, flagged) = target.sequence(n_min, n_max + d as i64, table)?;
    let mut report = scan_sequence(&seq, &target.to_string(), d, n_min, n_max)?;
    report.imaginary_flagged = flagged;
    Ok(report)
}
