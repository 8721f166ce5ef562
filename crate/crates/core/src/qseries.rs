//! Exact q-expansion of `η(q)^-24 = Σ_{n ≥ -1} a(n) qⁿ`.
//!
//! Two constructions are provided and kept structurally unrelated so that
//! each can serve as an oracle for the other:
//!
//! - [`eta_inv24_table`] uses the logarithmic-derivative recurrence
//!   `m·c(m) = 24·Σ_{k=1}^{m} σ₁(k)·c(m−k)` for the coefficients `c(m)` of
//!   `∏(1−qᵐ)^-24`, with `a(n) = c(n+1)`.
//! - [`eta_inv24_oracle`] raises Euler's pentagonal series for `∏(1−qᵐ)` to
//!   the 24th power by repeated sparse multiplication and inverts the result.

use rug::{Assign, Integer};

use crate::{Error, Result};

/// Sum of the positive divisors of `n`.
pub fn sigma1(n: i64) -> Result<u64> {
    if n <= 0 {
        return Err(Error::NonPositive { name: "n", value: n });
    }
    let n = n as u64;
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            total += d;
            let other = n / d;
            if other != d {
                total += other;
            }
        }
        d += 1;
    }
    Ok(total)
}

/// Divisor sums `σ₁(0..=m_max)` by sieving; index 0 is unused and holds 0.
fn sigma1_sieve(m_max: usize) -> Vec<u64> {
    let mut sigma = vec![0u64; m_max + 1];
    for d in 1..=m_max {
        for multiple in (d..=m_max).step_by(d) {
            sigma[multiple] += d as u64;
        }
    }
    sigma
}

/// Exact coefficients `a(n)` of `η(q)^-24` for `-1 ≤ n ≤ n_max`.
///
/// Indices below `-1` read as zero; indices above `n_max` are an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientTable {
    n_max: i64,
    // values[i] = a(i - 1)
    values: Vec<Integer>,
}

impl CoefficientTable {
    fn from_shifted(values: Vec<Integer>) -> Self {
        debug_assert!(values.len() >= 2);
        CoefficientTable { n_max: values.len() as i64 - 2, values }
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    /// `a(n)`; exact zero for `n < -1`.
    pub fn get(&self, n: i64) -> Result<&Integer> {
        if n < -1 {
            return Ok(&ZERO);
        }
        if n > self.n_max {
            return Err(Error::TableTooShort { index: n, n_max: self.n_max });
        }
        Ok(&self.values[(n + 1) as usize])
    }

    /// Iterates `(n, a(n))` for `-1 ≤ n ≤ n_max`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Integer)> + '_ {
        self.values.iter().enumerate().map(|(i, v)| (i as i64 - 1, v))
    }
}

static ZERO: Integer = Integer::ZERO;

fn check_n_max(n_max: i64) -> Result<usize> {
    if n_max < 0 {
        return Err(Error::InvalidParameter(format!("n_max must be >= 0, got {n_max}")));
    }
    Ok(n_max as usize)
}

/// Builds `a(-1..=n_max)` from the divisor-sum recurrence.
pub fn eta_inv24_table(n_max: i64) -> Result<CoefficientTable> {
    let m_max = check_n_max(n_max)? + 1;
    let sigma = sigma1_sieve(m_max);
    let mut c: Vec<Integer> = Vec::with_capacity(m_max + 1);
    c.push(Integer::from(1));
    let mut acc = Integer::new();
    for m in 1..=m_max {
        acc.assign(0);
        for k in 1..=m {
            acc += &c[m - k] * sigma[k];
        }
        acc *= 24u32;
        debug_assert!(acc.is_divisible_u(m as u32));
        acc.div_exact_u_mut(m as u32);
        c.push(acc.clone());
    }
    Ok(CoefficientTable::from_shifted(c))
}

/// Builds `a(-1..=n_max)` by inverting `(Σ_k (−1)^k q^{k(3k−1)/2})^24`.
///
/// Shares no arithmetic kernel with [`eta_inv24_table`].
pub fn eta_inv24_oracle(n_max: i64) -> Result<CoefficientTable> {
    let len = check_n_max(n_max)? + 2;

    // Euler's pentagonal number theorem: sparse (exponent, ±1) terms below len.
    let mut pentagonal: Vec<(usize, i32)> = vec![(0, 1)];
    for k in 1i64.. {
        let g1 = (k * (3 * k - 1) / 2) as usize;
        if g1 >= len {
            break;
        }
        let sign = if k % 2 == 0 { 1 } else { -1 };
        pentagonal.push((g1, sign));
        let g2 = (k * (3 * k + 1) / 2) as usize;
        if g2 < len {
            pentagonal.push((g2, sign));
        }
    }

    // ∏(1−qᵐ)^24, truncated to len terms.
    let mut power: Vec<Integer> = vec![Integer::new(); len];
    power[0] = Integer::from(1);
    for _ in 0..24 {
        let mut next = vec![Integer::new(); len];
        for (i, coeff) in power.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for &(shift, sign) in &pentagonal {
                let j = i + shift;
                if j >= len {
                    break;
                }
                if sign > 0 {
                    next[j] += coeff;
                } else {
                    next[j] -= coeff;
                }
            }
        }
        power = next;
    }

    // Reciprocal power series: inv[m] = −Σ_{i=1}^{m} power[i]·inv[m−i].
    let mut inv: Vec<Integer> = Vec::with_capacity(len);
    inv.push(Integer::from(1));
    for m in 1..len {
        let mut s = Integer::new();
        for i in 1..=m {
            if !power[i].is_zero() {
                s -= &power[i] * &inv[m - i];
            }
        }
        inv.push(s);
    }
    Ok(CoefficientTable::from_shifted(inv))
}
