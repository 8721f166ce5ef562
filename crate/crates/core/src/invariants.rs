//! Vafa–Witten invariants of K3 surfaces as exact combinations of `a(n)`.
//!
//! Three families are covered:
//!
//! - `SU(r)`: `Z(q) = Σ_{d|r} (d/r²) q^r Σ_{j<d} η(ζ_d^j q^{r/d²})^{-24}`,
//!   coefficients `α₁,ᵣ(n)`.
//! - `SU(p)/ℤ_p` for a fixed class `w`:
//!   `Z_w(q) = (δ_{w,0}/p²) η(q^p)^{-24} + (1/p) Σ_{j<p} e^{-πijw²/p} η(ζ_p^j q^{1/p})^{-24}`,
//!   coefficients `α₂,ₚ(w;n)` of `q^{n/p}`.
//! - the twisted `SU(p)/ℤ_p` theory on a surface of Picard number `ρ`:
//!   `Z_tw(q) = q^p/p² η(q^p)^{-24} + q^p (p²¹ η(q^{1/p})^{-24} + p^{ρ−1} Σ_{0<j<p} η(ζ_p^j q^{1/p})^{-24})`,
//!   coefficients `α₃,ₚ(n)` of `q^{n/p}`.
//!
//! The `alpha*` functions evaluate the closed forms. [`expand_partition_function`]
//! instead substitutes `q ↦ ζ q^e` into the coefficient table term by term and
//! sums in `ℚ(ζ)`, so the two routes check each other.

use std::fmt;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::cyclotomic::CyclotomicValue;
use crate::qseries::CoefficientTable;
use crate::{Error, Result};

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A class `w ∈ H²(S, μ_p)`, seen only through `δ_{w,0}` and `w²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WClass {
    pub is_zero: bool,
    pub squared: i64,
}

impl WClass {
    pub fn zero() -> Self {
        WClass { is_zero: true, squared: 0 }
    }

    pub fn nonzero(squared: i64) -> Self {
        WClass { is_zero: false, squared }
    }

    fn delta(&self) -> bool {
        self.is_zero
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantFamily {
    /// `SU(r)`, trivial determinant.
    SuR { r: u32 },
    /// `SU(p)/ℤ_p`, one summand `Z_w`.
    SuPModCenter { p: u32, w: WClass },
    /// Twisted `SU(p)/ℤ_p`, Picard number `rho`.
    Twisted { p: u32, rho: u32 },
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn check_rank(r: u32) -> Result<()> {
    if r == 0 {
        return Err(Error::NonPositive { name: "r", value: 0 });
    }
    Ok(())
}

fn check_rho(rho: u32) -> Result<()> {
    if !(1..=22).contains(&rho) {
        return Err(Error::InvalidParameter(format!("rho must lie in 1..=22, got {rho}")));
    }
    Ok(())
}

fn check_w(p: u32, w: &WClass) -> Result<()> {
    if w.squared < 0 {
        return Err(Error::InvalidParameter(format!("w² must be >= 0, got {}", w.squared)));
    }
    if w.is_zero && w.squared % (2 * p as i64) != 0 {
        return Err(Error::InvalidParameter(format!(
            "the zero class needs w² ≡ 0 (mod {}), got {}",
            2 * p,
            w.squared
        )));
    }
    Ok(())
}

impl InvariantFamily {
    pub fn su_r(r: u32) -> Result<Self> {
        check_rank(r)?;
        Ok(InvariantFamily::SuR { r })
    }

    pub fn su_p(p: u32, w_is_zero: bool, w_squared: i64) -> Result<Self> {
        check_prime(p)?;
        let w = WClass { is_zero: w_is_zero, squared: w_squared };
        check_w(p, &w)?;
        Ok(InvariantFamily::SuPModCenter { p, w })
    }

    pub fn twisted(p: u32, rho: u32) -> Result<Self> {
        check_prime(p)?;
        check_rho(rho)?;
        Ok(InvariantFamily::Twisted { p, rho })
    }

    /// Re-runs the constructor checks, for values built field by field.
    pub fn validate(&self) -> Result<()> {
        match *self {
            InvariantFamily::SuR { r } => check_rank(r),
            InvariantFamily::SuPModCenter { p, w } => {
                check_prime(p)?;
                check_w(p, &w)
            }
            InvariantFamily::Twisted { p, rho } => {
                check_prime(p)?;
                check_rho(rho)
            }
        }
    }

    /// Coefficient `n` multiplies `q^{n/denominator}`.
    pub fn exponent_denominator(&self) -> u32 {
        match *self {
            InvariantFamily::SuR { .. } => 1,
            InvariantFamily::SuPModCenter { p, .. } | InvariantFamily::Twisted { p, .. } => p,
        }
    }

    /// Cyclotomic order of the field holding the coefficients.
    pub fn field_order(&self) -> u32 {
        match *self {
            InvariantFamily::SuR { .. } => 1,
            InvariantFamily::SuPModCenter { p, .. } | InvariantFamily::Twisted { p, .. } => 2 * p,
        }
    }

    /// Largest `a(m)` index read by the closed forms and the expansion up to `n_max`.
    pub fn required_table_index(&self, n_max: i64) -> i64 {
        let needed = match *self {
            InvariantFamily::SuR { r } => (n_max - r as i64) * r as i64,
            InvariantFamily::SuPModCenter { .. } => n_max,
            InvariantFamily::Twisted { p, .. } => n_max - (p as i64) * (p as i64),
        };
        needed.max(0)
    }

    /// Closed-form coefficient of `q^{n/denominator}`.
    pub fn value(&self, n: i64, table: &CoefficientTable) -> Result<CyclotomicValue> {
        let order = self.field_order();
        match *self {
            InvariantFamily::SuR { r } => Ok(CyclotomicValue::from_rational(order, alpha1(r, n, table)?)),
            InvariantFamily::SuPModCenter { p, w } => alpha2(p, w, n, table),
            InvariantFamily::Twisted { p, rho } => {
                Ok(CyclotomicValue::from_rational(order, alpha3(p, rho, n, table)?))
            }
        }
    }

    /// Like [`value`](Self::value) but rejects non-real results.
    pub fn rational_value(&self, n: i64, table: &CoefficientTable) -> Result<Rational> {
        let v = self.value(n, table)?;
        v.as_rational().cloned().ok_or(Error::NonReal { n })
    }
}

impl fmt::Display for InvariantFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantFamily::SuR { r } => write!(f, "su_r(r={r})"),
            InvariantFamily::SuPModCenter { p, w } => {
                if w.is_zero {
                    write!(f, "su_p(p={p},w=0)")
                } else {
                    write!(f, "su_p(p={p},w2={})", w.squared)
                }
            }
            InvariantFamily::Twisted { p, rho } => write!(f, "twisted(p={p},rho={rho})"),
        }
    }
}

fn a(table: &CoefficientTable, n: i64) -> Result<Rational> {
    Ok(Rational::from(table.get(n)?))
}

fn over_square(value: Rational, p: u32) -> Rational {
    value / Integer::from(p as u64 * p as u64)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `α₁,ᵣ(n) = Σ_{s | gcd(n−r, r)} a((n−r)r/s²)/s²`.
///
/// The value is rational in general (`α₁,₂(0) = 1/4`).
pub fn alpha1(r: u32, n: i64, table: &CoefficientTable) -> Result<Rational> {
    check_rank(r)?;
    let r = r as i64;
    let g = gcd_i64(n - r, r);
    let m = (n - r) * r;
    let mut total = Rational::new();
    for s in (1..=g).filter(|s| g % s == 0) {
        let term = a(table, m / (s * s))?;
        total += term / Integer::from(s * s);
    }
    Ok(total)
}

/// `Σ_{j<p} ζ_{2p}^{j·e}` in `ℚ(ζ_{2p})`.
fn root_sum(p: u32, e: i64) -> CyclotomicValue {
    let order = 2 * p;
    if e % 2 == 0 {
        // ζ_p^{e/2} summed over j: p if p | e/2, else 0
        let half = e / 2;
        let value = if half.rem_euclid(p as i64) == 0 { Rational::from(p) } else { Rational::new() };
        return CyclotomicValue::from_rational(order, value);
    }
    let mut total = CyclotomicValue::zero(order);
    for j in 0..p as i64 {
        total += &CyclotomicValue::root_power(order, j * e);
    }
    total
}

/// `α₂,ₚ(w;n) = (1/p) Σ_{j<p} e^{πij(2n−w²)/p} a(n) + [p² | n] δ_{w,0} a(n/p²)/p²`,
/// exactly, in `ℚ(ζ_{2p})`.
pub fn alpha2(p: u32, w: WClass, n: i64, table: &CoefficientTable) -> Result<CyclotomicValue> {
    check_prime(p)?;
    check_w(p, &w)?;
    let p2 = (p as i64) * (p as i64);
    let j_sum = root_sum(p, 2 * n - w.squared);
    let mut value = if j_sum.is_zero() {
        j_sum
    } else {
        j_sum.scale(&(a(table, n)? / Integer::from(p)))
    };
    if w.delta() && n % p2 == 0 {
        let extra = over_square(a(table, n / p2)?, p);
        value += &CyclotomicValue::from_rational(2 * p, extra);
    }
    Ok(value)
}

fn check_even_multiple(p: u32, w: &WClass) -> Result<()> {
    if w.squared % 2 != 0 || (w.squared / 2) % p as i64 != 0 {
        return Err(Error::Hypothesis(format!(
            "need w² = 2m with p | m (p = {p}, w² = {})",
            w.squared
        )));
    }
    Ok(())
}

/// `α₂,ₚ'(w;n) = α₂,ₚ(w;pn) = a(pn) + [p | n] δ_{w,0} a(n/p)/p²`, valid when
/// `w² = 2m` with `p | m`.
pub fn alpha2_prime(p: u32, w: WClass, n: i64, table: &CoefficientTable) -> Result<Rational> {
    check_prime(p)?;
    check_w(p, &w)?;
    check_even_multiple(p, &w)?;
    let p_i = p as i64;
    let mut value = a(table, p_i * n)?;
    if w.delta() && n % p_i == 0 {
        value += over_square(a(table, n / p_i)?, p);
    }
    Ok(value)
}

/// `α₃,ₚ(n) = p²¹ a(n−p²) + [p² | n] a(n/p² − 1)/p² + c·a(n−p²)` with
/// `c = p^{ρ−1}(p−1)` if `p | n` and `c = −p^{ρ−1}` otherwise.
pub fn alpha3(p: u32, rho: u32, n: i64, table: &CoefficientTable) -> Result<Rational> {
    check_prime(p)?;
    check_rho(rho)?;
    let p_i = p as i64;
    let p2 = p_i * p_i;
    let shifted = a(table, n - p2)?;
    let p_pow = |e: u32| Integer::from(p).pow(e);
    let mut coefficient = p_pow(21);
    if n % p_i == 0 {
        coefficient += p_pow(rho - 1) * (p - 1);
    } else {
        coefficient -= p_pow(rho - 1);
    }
    let mut value = shifted * coefficient;
    if n % p2 == 0 {
        value += over_square(a(table, n / p2 - 1)?, p);
    }
    Ok(value)
}

/// `α₃,ₚ'(n) = α₃,ₚ(pn) = p²² a(p(n−p)) + [p | n] a(n/p − 1)/p²` on a
/// supersingular surface (`ρ = 22`).
pub fn alpha3_prime(p: u32, n: i64, table: &CoefficientTable) -> Result<Rational> {
    check_prime(p)?;
    let p_i = p as i64;
    let mut value = a(table, p_i * (n - p_i))? * Integer::from(p).pow(22);
    if n % p_i == 0 {
        value += over_square(a(table, n / p_i - 1)?, p);
    }
    Ok(value)
}

/// `Σ_n c(n) q^{n/denominator}` with exact cyclotomic coefficients on
/// `lowest ≤ n ≤ n_max`; coefficients below `lowest` are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalSeries {
    denominator: u32,
    order: u32,
    lowest: i64,
    coeffs: Vec<CyclotomicValue>,
}

impl FractionalSeries {
    fn new(denominator: u32, order: u32, lowest: i64, n_max: i64) -> Self {
        let len = (n_max - lowest + 1).max(0) as usize;
        FractionalSeries {
            denominator,
            order,
            lowest,
            coeffs: vec![CyclotomicValue::zero(order); len],
        }
    }

    fn add_at(&mut self, n: i64, value: &CyclotomicValue) {
        let i = (n - self.lowest) as usize;
        self.coeffs[i] += value;
    }

    pub fn denominator(&self) -> u32 {
        self.denominator
    }

    pub fn field_order(&self) -> u32 {
        self.order
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn n_max(&self) -> i64 {
        self.lowest + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `q^{n/denominator}`.
    pub fn coefficient(&self, n: i64) -> Result<CyclotomicValue> {
        if n < self.lowest {
            return Ok(CyclotomicValue::zero(self.order));
        }
        if n > self.n_max() {
            return Err(Error::OutOfRange { index: n, lo: self.lowest, hi: self.n_max() });
        }
        Ok(self.coeffs[(n - self.lowest) as usize].clone())
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &CyclotomicValue)> + '_ {
        self.coeffs.iter().enumerate().map(|(i, c)| (self.lowest + i as i64, c))
    }
}

/// Expands the family's generating function directly from the coefficient
/// table, up to and including the coefficient of `q^{n_max/denominator}`.
pub fn expand_partition_function(
    family: &InvariantFamily,
    n_max: i64,
    table: &CoefficientTable,
) -> Result<FractionalSeries> {
    family.validate()?;
    match *family {
        InvariantFamily::SuR { r } => expand_su_r(r, n_max, table),
        InvariantFamily::SuPModCenter { p, w } => expand_z_w(p, w, n_max, table),
        InvariantFamily::Twisted { p, rho } => expand_twisted(p, rho, n_max, table),
    }
}

fn expand_su_r(r: u32, n_max: i64, table: &CoefficientTable) -> Result<FractionalSeries> {
    // Work in exponents of q^{1/r} and in ℚ(ζ_r); ζ_d = ζ_r^{r/d}.
    let r_i = r as i64;
    let top = r_i * n_max;
    let mut fine = FractionalSeries::new(r, r, 0, top);
    for d in (1..=r_i).filter(|d| r_i % d == 0) {
        let e = r_i / d;
        let prefactor = Rational::from((d, r_i * r_i));
        for j in 0..d {
            // q^r · (ζ_d^j q^{e/d})^k = ζ_r^{e j k} q^{(r² + k e²)/r}
            let mut k = -1i64;
            loop {
                let index = r_i * r_i + k * e * e;
                if index > top {
                    break;
                }
                let coeff = a(table, k)?;
                if coeff != 0 {
                    let weight = Rational::from(&prefactor * &coeff);
                    let term = CyclotomicValue::root_power(r, e * j * k).scale(&weight);
                    fine.add_at(index, &term);
                }
                k += 1;
            }
        }
    }

    let mut series = FractionalSeries::new(1, 1, 0, n_max);
    for (index, value) in fine.iter() {
        if index % r_i != 0 {
            if !value.is_zero() {
                return Err(Error::Hypothesis(format!(
                    "SU({r}) expansion has a nonzero coefficient at q^({index}/{r})"
                )));
            }
            continue;
        }
        let q = value.as_rational().ok_or(Error::NonReal { n: index / r_i })?;
        series.add_at(index / r_i, &CyclotomicValue::from_rational(1, q.clone()));
    }
    Ok(series)
}

fn expand_z_w(p: u32, w: WClass, n_max: i64, table: &CoefficientTable) -> Result<FractionalSeries> {
    let order = 2 * p;
    let p_i = p as i64;
    let p2 = p_i * p_i;
    let lowest = if w.is_zero { -p2 } else { -1 };
    let mut series = FractionalSeries::new(p, order, lowest, n_max);

    // (δ/p²) η(q^p)^{-24}: q^{pk} = q^{p²k/p}
    if w.delta() {
        let mut k = -1i64;
        while p2 * k <= n_max {
            let value = over_square(a(table, k)?, p);
            series.add_at(p2 * k, &CyclotomicValue::from_rational(order, value));
            k += 1;
        }
    }

    // (1/p) Σ_j ζ_{2p}^{−j w²} η(ζ_p^j q^{1/p})^{-24}
    let inv_p = Rational::from((1, p));
    for j in 0..p_i {
        let twist = CyclotomicValue::root_power(order, -j * w.squared);
        for k in -1..=n_max {
            let coeff = a(table, k)?;
            let root = CyclotomicValue::root_power(order, 2 * j * k);
            let term = (&twist * &root).scale(&Rational::from(&inv_p * &coeff));
            series.add_at(k, &term);
        }
    }
    Ok(series)
}

fn expand_twisted(p: u32, rho: u32, n_max: i64, table: &CoefficientTable) -> Result<FractionalSeries> {
    let order = 2 * p;
    let p_i = p as i64;
    let p2 = p_i * p_i;
    let mut series = FractionalSeries::new(p, order, 0, n_max);

    // q^p/p² · η(q^p)^{-24}
    let mut k = -1i64;
    while p2 * k + p2 <= n_max {
        let value = over_square(a(table, k)?, p);
        series.add_at(p2 * k + p2, &CyclotomicValue::from_rational(order, value));
        k += 1;
    }

    // q^p (p²¹ η(q^{1/p})^{-24} + p^{ρ−1} Σ_{0<j<p} η(ζ_p^j q^{1/p})^{-24})
    let untwisted = Rational::from(Integer::from(p).pow(21));
    let twisted_weight = Rational::from(Integer::from(p).pow(rho - 1));
    let mut k = -1i64;
    while k + p2 <= n_max {
        let coeff = a(table, k)?;
        let mut term = CyclotomicValue::from_rational(order, Rational::from(&untwisted * &coeff));
        let mut roots = CyclotomicValue::zero(order);
        for j in 1..p_i {
            roots += &CyclotomicValue::root_power(order, 2 * j * k);
        }
        term += &roots.scale(&Rational::from(&twisted_weight * &coeff));
        series.add_at(k + p2, &term);
        k += 1;
    }
    Ok(series)
}

/// `Z_{c₁} = Σ_w e^{2πi(w·c₁)/p} Z_w` over caller-supplied `(w·c₁, w)` pairs.
///
/// Enumerating `H²(S, μ_p)` itself is left to the caller.
pub fn combine_over_classes(
    p: u32,
    classes: &[(i64, WClass)],
    n_max: i64,
    table: &CoefficientTable,
) -> Result<FractionalSeries> {
    check_prime(p)?;
    let order = 2 * p;
    let lowest = -(p as i64) * (p as i64);
    let mut total = FractionalSeries::new(p, order, lowest, n_max);
    for &(w_dot_c1, w) in classes {
        let family = InvariantFamily::su_p(p, w.is_zero, w.squared)?;
        let z_w = expand_partition_function(&family, n_max, table)?;
        let phase = CyclotomicValue::root_power(order, 2 * w_dot_c1);
        for (n, value) in z_w.iter() {
            total.add_at(n, &(&phase * value));
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{eta_inv24_oracle, eta_inv24_table};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn oracle(n_max: i64) -> CoefficientTable {
        eta_inv24_oracle(n_max).unwrap()
    }

    #[test]
    fn primality() {
        let primes: Vec<u32> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn family_validation() {
        assert!(InvariantFamily::su_r(0).is_err());
        assert_eq!(InvariantFamily::su_p(4, true, 0), Err(Error::NotPrime(4)));
        assert!(InvariantFamily::su_p(3, true, 2).is_err());
        assert!(InvariantFamily::su_p(3, false, -2).is_err());
        assert!(InvariantFamily::twisted(3, 0).is_err());
        assert!(InvariantFamily::twisted(3, 23).is_err());
        assert!(InvariantFamily::twisted(2, 22).is_ok());
    }

    #[test]
    fn alpha1_examples() {
        let t = oracle(10);
        assert_eq!(alpha1(1, 0, &t).unwrap(), q(1));
        assert_eq!(alpha1(2, 2, &t).unwrap(), q(30));
        assert_eq!(alpha1(2, 3, &t).unwrap(), Rational::from(t.get(2).unwrap()));
        // constant term of q²·(1/4)η(q²)^{-24}
        assert_eq!(alpha1(2, 0, &t).unwrap(), Rational::from((1, 4)));
    }

    #[test]
    fn alpha1_vanishes_below_zero() {
        let t = oracle(10);
        for r in 1..=6 {
            for n in -20..0 {
                assert_eq!(alpha1(r, n, &t).unwrap(), 0, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn alpha1_table_underflow() {
        let t = oracle(5);
        assert!(matches!(alpha1(2, 10, &t), Err(Error::TableTooShort { .. })));
    }

    #[test]
    fn alpha2_examples() {
        let t = oracle(10);
        assert!(alpha2(2, WClass::zero(), 1, &t).unwrap().is_zero());
        let v = alpha2(2, WClass::zero(), 4, &t).unwrap();
        let want = Rational::from(t.get(4).unwrap()) + Rational::from(t.get(1).unwrap()) / 4u32;
        assert_eq!(v.as_rational(), Some(&want));
        let v = alpha2(3, WClass::zero(), 0, &t).unwrap();
        assert_eq!(v.as_rational(), Some(&Rational::from((80, 3))));
    }

    #[test]
    fn alpha2_odd_w_squared_is_not_real() {
        let t = oracle(10);
        // p = 2, w² = 1: (1 + i^{2n−1}) a(n)/2
        let v = alpha2(2, WClass::nonzero(1), 3, &t).unwrap();
        assert!(!v.is_rational());
        assert_eq!(v.real_part().as_rational(), Some(&(Rational::from(t.get(3).unwrap()) / 2u32)));
        let (re, im) = v.to_complex(128);
        let a3 = t.get(3).unwrap().to_f64();
        assert!((re.to_f64() - a3 / 2.0).abs() < 1e-6);
        // 2n − w² = 5, i^5 = i
        assert!((im.to_f64() - a3 / 2.0).abs() < 1e-6);
    }

    #[test]
    fn alpha2_prime_examples() {
        let t = oracle(20);
        let v = alpha2_prime(2, WClass::zero(), 2, &t).unwrap();
        assert_eq!(Some(&v), alpha2(2, WClass::zero(), 4, &t).unwrap().as_rational());
        assert_eq!(alpha2_prime(3, WClass::nonzero(6), 1, &t).unwrap(), Rational::from(t.get(3).unwrap()));
        assert!(matches!(alpha2_prime(3, WClass::nonzero(4), 1, &t), Err(Error::Hypothesis(_))));
        assert!(matches!(alpha2_prime(3, WClass::nonzero(3), 1, &t), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn alpha3_examples() {
        let t = oracle(10);
        let a0 = q(24);
        let a1 = Rational::from(t.get(1).unwrap());
        let two21 = Rational::from(Integer::from(1) << 21);
        assert_eq!(alpha3(2, 1, 5, &t).unwrap(), (two21.clone() - 1u32) * a1);
        assert_eq!(alpha3(2, 1, 4, &t).unwrap(), two21.clone() * &a0 + 6u32 + 24u32);
        assert_eq!(alpha3(2, 22, 4, &t).unwrap(), two21.clone() * &a0 + 6u32 + two21 * a0);
    }

    #[test]
    fn alpha3_prime_examples() {
        let t = oracle(10);
        let two22 = Rational::from(Integer::from(1) << 22);
        assert_eq!(alpha3_prime(2, 2, &t).unwrap(), two22.clone() * 24u32 + 6u32);
        assert_eq!(alpha3_prime(2, 3, &t).unwrap(), two22 * Rational::from(t.get(2).unwrap()));
        for n in -3..=5 {
            assert_eq!(alpha3_prime(2, n, &t).unwrap(), alpha3(2, 22, 2 * n, &t).unwrap());
        }
    }

    #[test]
    fn su1_is_shifted_eta() {
        let t = oracle(30);
        let s = expand_partition_function(&InvariantFamily::su_r(1).unwrap(), 30, &t).unwrap();
        assert_eq!(s.denominator(), 1);
        for n in 0..=30 {
            assert_eq!(s.coefficient(n).unwrap().as_rational(), Some(&Rational::from(t.get(n - 1).unwrap())));
        }
        assert!(s.coefficient(-4).unwrap().is_zero());
        assert!(s.coefficient(31).is_err());
    }

    #[test]
    fn su2_coefficient_of_q2() {
        let t = oracle(20);
        let s = expand_partition_function(&InvariantFamily::su_r(2).unwrap(), 10, &t).unwrap();
        assert_eq!(s.coefficient(2).unwrap().as_rational(), Some(&q(30)));
    }

    #[test]
    fn supersingular_series_has_integral_exponents() {
        let t = oracle(80);
        let fam = InvariantFamily::twisted(2, 22).unwrap();
        let s = expand_partition_function(&fam, 80, &t).unwrap();
        for (n, v) in s.iter() {
            if n % 2 != 0 {
                assert!(v.is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn closed_forms_match_expansion_small() {
        let t = eta_inv24_table(200).unwrap();
        let families = [
            InvariantFamily::su_r(3).unwrap(),
            InvariantFamily::su_r(6).unwrap(),
            InvariantFamily::su_p(3, false, 1).unwrap(),
            InvariantFamily::su_p(5, true, 0).unwrap(),
            InvariantFamily::twisted(3, 1).unwrap(),
        ];
        for fam in families {
            let s = expand_partition_function(&fam, 30, &t).unwrap();
            for n in s.lowest() - 3..=30 {
                assert_eq!(s.coefficient(n).unwrap(), fam.value(n, &t).unwrap(), "{fam} n={n}");
            }
        }
    }

    #[test]
    fn class_combination_with_trivial_pairing() {
        let t = oracle(20);
        let w0 = WClass::zero();
        let combined = combine_over_classes(3, &[(0, w0)], 20, &t).unwrap();
        let z0 = expand_partition_function(&InvariantFamily::su_p(3, true, 0).unwrap(), 20, &t).unwrap();
        assert_eq!(combined, z0);
        // a phase ζ₃ on a second copy: 1 + ζ₃ = −ζ₃²
        let two = combine_over_classes(3, &[(0, w0), (1, w0)], 20, &t).unwrap();
        let factor = CyclotomicValue::root_power(6, 4).scale(&Rational::from(-1));
        for (n, v) in z0.iter() {
            assert_eq!(two.coefficient(n).unwrap(), &factor * v);
        }
    }
}
