//! Dedekind sums `s(h,k)` and the multiplier phase `ω_{h,k}^24 = e^{24πi·s(h,k)}`.
//!
//! `s(h,k)` is evaluated with the reciprocity law
//! `s(h,k) + s(k,h) = (h/k + k/h + 1/(hk))/12 − 1/4`, which runs alongside
//! the Euclidean algorithm and needs `O(log k)` exact rational steps.

use std::fmt;

use rug::{Integer, Rational};

use crate::{Error, Result};

/// Exact value of a Dedekind sum, in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DedekindSumValue(Rational);

impl DedekindSumValue {
    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    /// `6k·s(h,k)`, which is always an integer.
    pub fn scaled_by_6k(&self, k: u64) -> Integer {
        let scaled = Rational::from(&self.0 * Integer::from(6 * k));
        debug_assert!(scaled.denom() == &1);
        scaled.into_numer_denom().0
    }
}

impl fmt::Display for DedekindSumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A point `e^{2πi t}` on the unit circle, stored as the exact angle
/// `t ∈ [0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitPhase(Rational);

impl UnitPhase {
    /// Reduces `t` modulo 1.
    pub fn new(t: Rational) -> Self {
        let floor = Rational::from(t.floor_ref());
        UnitPhase(t - floor)
    }

    pub fn angle(&self) -> &Rational {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    /// Product of phases (sum of angles).
    pub fn mul(&self, other: &UnitPhase) -> UnitPhase {
        UnitPhase::new(Rational::from(&self.0 + &other.0))
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e^(2πi·{})", self.0)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_args(h: u64, k: u64) -> Result<()> {
    if k == 0 {
        return Err(Error::NonPositive { name: "k", value: 0 });
    }
    if gcd(h, k) != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    Ok(())
}

/// `s(h,k)` for coprime `h ≥ 0`, `k ≥ 1`.
pub fn dedekind_sum(h: u64, k: u64) -> Result<DedekindSumValue> {
    check_args(h, k)?;
    let mut acc = Rational::new();
    let mut positive = true;
    let (mut a, mut b) = (h % k, k);
    // s(a,b) with a < b; s(0,1) = 0 terminates the recursion.
    while a != 0 {
        // s(a,b) = (a² + b² + 1)/(12ab) − 1/4 − s(b mod a, a)
        let num = Integer::from(a) * a + Integer::from(b) * b + 1u32;
        let den = Integer::from(a) * b * 12u32;
        let step = Rational::from((num, den)) - Rational::from((1, 4));
        if positive {
            acc += step;
        } else {
            acc -= step;
        }
        positive = !positive;
        (a, b) = (b % a, a);
    }
    debug_assert_eq!(b, 1);
    Ok(DedekindSumValue(acc))
}

/// The phase of `ω_{h,k}^24`, namely `t ≡ 12·s(h,k) (mod 1)`.
pub fn omega24_phase(h: u64, k: u64) -> Result<UnitPhase> {
    let s = dedekind_sum(h, k)?;
    Ok(UnitPhase::new(s.into_rational() * 12u32))
}

/// Least `h' ≥ 0` with `h·h' ≡ −1 (mod k)`.
pub fn negative_inverse(h: u64, k: u64) -> Result<u64> {
    check_args(h, k)?;
    if k == 1 {
        return Ok(0);
    }
    let inv = Integer::from(h)
        .invert(&Integer::from(k))
        .map_err(|_| Error::NotCoprime { h, k })?;
    let inv = inv.to_u64().expect("inverse below k");
    Ok((k - inv) % k)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct definition `Σ_{μ mod k} ((μ/k))((hμ/k))`.
    fn dedekind_sum_direct(h: u64, k: u64) -> Rational {
        let sawtooth = |x: Rational| -> Rational {
            if x.is_integer() {
                Rational::new()
            } else {
                let floor = Rational::from(x.floor_ref());
                x - floor - Rational::from((1, 2))
            }
        };
        let mut total = Rational::new();
        for mu in 1..k {
            let a = sawtooth(Rational::from((mu, k)));
            let b = sawtooth(Rational::from((h * mu, k)));
            total += a * b;
        }
        total
    }

    #[test]
    fn examples() {
        assert_eq!(*dedekind_sum(0, 1).unwrap().value(), 0);
        assert_eq!(*dedekind_sum(1, 2).unwrap().value(), 0);
        assert_eq!(*dedekind_sum(1, 3).unwrap().value(), Rational::from((1, 18)));
    }

    #[test]
    fn phase_examples() {
        assert!(omega24_phase(0, 1).unwrap().is_one());
        assert!(omega24_phase(1, 2).unwrap().is_one());
        assert_eq!(*omega24_phase(1, 3).unwrap().angle(), Rational::from((2, 3)));
    }

    #[test]
    fn rejects_non_coprime() {
        assert_eq!(dedekind_sum(2, 4), Err(Error::NotCoprime { h: 2, k: 4 }));
        assert!(omega24_phase(3, 6).is_err());
        assert!(dedekind_sum(1, 0).is_err());
    }

    #[test]
    fn reciprocity_matches_direct_definition() {
        for k in 1..=200u64 {
            for h in 0..k {
                if gcd(h, k) != 1 {
                    continue;
                }
                let fast = dedekind_sum(h, k).unwrap();
                assert_eq!(*fast.value(), dedekind_sum_direct(h, k), "s({h},{k})");
            }
        }
    }

    #[test]
    fn six_k_s_is_integral_and_s_h_1_vanishes() {
        for h in 0..20 {
            assert_eq!(*dedekind_sum(h, 1).unwrap().value(), 0);
        }
        for k in 1..=300u64 {
            for h in (0..k).filter(|&h| gcd(h, k) == 1) {
                let s = dedekind_sum(h, k).unwrap();
                let scaled = Rational::from(s.value() * Integer::from(6 * k));
                assert!(scaled.is_integer(), "6k s({h},{k}) = {scaled}");
                let _ = s.scaled_by_6k(k);
            }
        }
    }

    #[test]
    fn negation_symmetry() {
        for k in 1..=150u64 {
            for h in (0..k).filter(|&h| gcd(h, k) == 1) {
                let hp = negative_inverse(h, k).unwrap();
                assert_eq!((h * hp + 1) % k, 0);
                let s = dedekind_sum(h, k).unwrap().into_rational();
                let sp = dedekind_sum(hp, k).unwrap().into_rational();
                assert_eq!(s, -sp, "h={h} h'={hp} k={k}");
            }
        }
    }

    #[test]
    fn phase_angle_is_canonical() {
        for k in 1..=60u64 {
            for h in (0..k).filter(|&h| gcd(h, k) == 1) {
                let t = omega24_phase(h, k).unwrap();
                assert!(*t.angle() >= 0 && *t.angle() < 1);
                // 12·s(h,k) has denominator dividing k
                let scaled = Rational::from(t.angle() * Integer::from(k));
                assert!(scaled.is_integer());
            }
        }
    }
}
