//! Exact arithmetic in the cyclotomic field `ℚ(ζ_m)`, `ζ_m = e^{2πi/m}`.
//!
//! Elements are rational coefficient vectors over the power basis
//! `1, ζ, …, ζ^{φ(m)−1}`, reduced modulo the cyclotomic polynomial `Φ_m`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use rug::{Float, Rational};

use crate::bigreal::{self, BigReal};

/// `Φ_m` as integer coefficients, constant term first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(poly) = cache.lock().unwrap().get(&m) {
        return poly.clone();
    }
    assert!(m >= 1, "cyclotomic order must be positive");
    // x^m − 1 divided by Φ_d for every proper divisor d
    let mut quotient = vec![0i64; m as usize + 1];
    quotient[0] = -1;
    quotient[m as usize] = 1;
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d);
        quotient = exact_divide(&quotient, &divisor);
    }
    let poly = Arc::new(quotient);
    cache.lock().unwrap().insert(m, poly.clone());
    poly
}

/// Quotient of integer polynomials when the divisor is monic and divides exactly.
fn exact_divide(dividend: &[i64], divisor: &[i64]) -> Vec<i64> {
    let mut rem = dividend.to_vec();
    let dd = divisor.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (t, &dt) in divisor.iter().enumerate() {
            rem[i + t] -= c * dt;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u32
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An element of `ℚ(ζ_m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicValue {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicValue {
    pub fn zero(order: u32) -> Self {
        let phi = cyclotomic_polynomial(order).len() - 1;
        CyclotomicValue { order, coeffs: vec![Rational::new(); phi] }
    }

    pub fn from_rational(order: u32, value: Rational) -> Self {
        let mut v = Self::zero(order);
        v.coeffs[0] = value;
        v
    }

    /// `ζ_m^e` for any integer exponent.
    pub fn root_power(order: u32, exponent: i64) -> Self {
        let e = exponent.rem_euclid(order as i64) as usize;
        let mut power = vec![Rational::new(); e + 1];
        power[e] = Rational::from(1);
        Self::reduce(order, power)
    }

    /// Builds `Σ_j c_j ζ^j` from coefficients of any length.
    pub fn from_power_form(order: u32, coeffs: Vec<Rational>) -> Self {
        Self::reduce(order, coeffs)
    }

    fn reduce(order: u32, mut v: Vec<Rational>) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        for i in (phi..v.len()).rev() {
            if v[i] == 0 {
                continue;
            }
            let c = std::mem::take(&mut v[i]);
            for (t, &mt) in modulus.iter().enumerate().take(phi) {
                if mt != 0 {
                    v[i - phi + t] -= Rational::from(&c * mt);
                }
            }
        }
        v.resize(phi, Rational::new());
        CyclotomicValue { order, coeffs: v }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficients over the power basis, constant term first.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| *c == 0)
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CyclotomicValue {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| Rational::from(c * factor)).collect(),
        }
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut power = vec![Rational::new(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            power[(m - j) % m] += c;
        }
        Self::reduce(self.order, power)
    }

    /// `(z + z̄)/2`, again an element of the field.
    pub fn real_part(&self) -> Self {
        (self + &self.conj()).scale(&Rational::from((1, 2)))
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Complex embedding with `ζ ↦ e^{2πi/m}`.
    pub fn to_complex(&self, prec: u32) -> (BigReal, BigReal) {
        let mut re = Float::new(prec + 16);
        let mut im = Float::new(prec + 16);
        for (j, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let (cos, sin) = bigreal::cos_sin_turns(&Rational::from((j as u32, self.order)), prec + 16);
            re += cos * c;
            im += sin * c;
        }
        (Float::with_val(prec, re), Float::with_val(prec, im))
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixing ℚ(ζ_{}) and ℚ(ζ_{})", self.order, other.order);
    }
}

impl Add for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn add(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self.check_same_field(rhs);
        CyclotomicValue {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| Rational::from(a + b)).collect(),
        }
    }
}

impl AddAssign<&CyclotomicValue> for CyclotomicValue {
    fn add_assign(&mut self, rhs: &CyclotomicValue) {
        self.check_same_field(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn sub(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn neg(self) -> CyclotomicValue {
        CyclotomicValue {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| Rational::from(-c)).collect(),
        }
    }
}

impl Mul for &CyclotomicValue {
    type Output = CyclotomicValue;

    fn mul(self, rhs: &CyclotomicValue) -> CyclotomicValue {
        self.check_same_field(rhs);
        let n = self.coeffs.len();
        let mut product = vec![Rational::new(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if *b != 0 {
                    product[i + j] += Rational::from(a * b);
                }
            }
        }
        CyclotomicValue::reduce(self.order, product)
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·ζ{}", self.order)?,
                _ => write!(f, "({c})·ζ{}^{j}", self.order)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(10), vec![1, -1, 1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for m in 1..40 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m) as usize);
        }
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in 2..=12u32 {
            let mut total = CyclotomicValue::zero(m);
            for j in 0..m {
                total += &CyclotomicValue::root_power(m, j as i64);
            }
            assert!(total.is_zero(), "m = {m}");
        }
    }

    #[test]
    fn power_law_and_conjugation() {
        for m in [1u32, 2, 3, 4, 6, 10] {
            for a in -7i64..7 {
                for b in -7i64..7 {
                    let lhs = &CyclotomicValue::root_power(m, a) * &CyclotomicValue::root_power(m, b);
                    assert_eq!(lhs, CyclotomicValue::root_power(m, a + b));
                }
                assert_eq!(CyclotomicValue::root_power(m, a).conj(), CyclotomicValue::root_power(m, -a));
            }
        }
    }

    #[test]
    fn embedding_matches_direct_phase() {
        let m = 10;
        let z = &CyclotomicValue::root_power(m, 3).scale(&Rational::from((5, 7)))
            + &CyclotomicValue::root_power(m, 8);
        let (re, im) = z.to_complex(128);
        let (c3, s3) = bigreal::cos_sin_turns(&Rational::from((3, 10)), 128);
        let (c8, s8) = bigreal::cos_sin_turns(&Rational::from((8, 10)), 128);
        let want_re = c3 * Rational::from((5, 7)) + c8;
        let want_im = s3 * Rational::from((5, 7)) + s8;
        assert!((re - want_re).abs() < Float::with_val(64, 1u32) >> 100);
        assert!((im - want_im).abs() < Float::with_val(64, 1u32) >> 100);
    }

    #[test]
    fn real_part_and_rationality() {
        // 1 + i in ℚ(ζ₄)
        let z = &CyclotomicValue::from_rational(4, Rational::from(1)) + &CyclotomicValue::root_power(4, 1);
        assert!(!z.is_rational());
        assert!(!z.is_real());
        assert_eq!(z.real_part().as_rational(), Some(&Rational::from(1)));
        assert_eq!(z.to_string(), "1 + (1)·ζ4");
        let w = &z * &z.conj();
        assert_eq!(w.as_rational(), Some(&Rational::from(2)));
    }
}
