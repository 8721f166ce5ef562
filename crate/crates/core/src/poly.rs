//! Dense univariate polynomials over `ℚ` and exact real-root counting.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

use crate::{Error, Result};

/// Coefficients are stored constant term first with no trailing zeros, so
/// the zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

fn sign(q: &Rational) -> i32 {
    q.cmp0() as i32
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    /// `c·X^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::new(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| Rational::from(c * i as u64))
                .collect(),
        )
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| Rational::from(c * factor)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&Rational::from(lc.recip_ref())),
            None => Self::zero(),
        }
    }

    /// Rescales to leading coefficient `±1` keeping the sign pattern.
    fn normalized(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&Rational::from(lc.abs_ref()).recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division, `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::new(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = Rational::from(&rem[i + dd] / lc);
            if c != 0 {
                for (t, dt) in divisor.coeffs.iter().enumerate() {
                    rem[i + t] -= Rational::from(&c * dt);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.normalized();
        }
        a.monic()
    }

    /// Sturm chain `f, f', −rem(f, f'), …`, each member scaled to `|lc| = 1`.
    pub fn sturm_sequence(&self) -> Vec<Self> {
        let mut chain = Vec::new();
        if self.is_zero() {
            return chain;
        }
        chain.push(self.normalized());
        let d = self.derivative();
        if d.is_zero() {
            return chain;
        }
        chain.push(d.normalized());
        loop {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
            if r.is_zero() {
                break;
            }
            chain.push((-&r).normalized());
        }
        chain
    }

    /// Number of distinct real roots.
    pub fn count_distinct_real_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let chain = self.sturm_sequence();
        let changes = |signs: Vec<i32>| {
            let nonzero: Vec<i32> = signs.into_iter().filter(|&s| s != 0).collect();
            nonzero.windows(2).filter(|w| w[0] != w[1]).count()
        };
        let at_pos_inf = chain.iter().map(|p| sign(p.leading().unwrap())).collect();
        let at_neg_inf = chain
            .iter()
            .map(|p| {
                let s = sign(p.leading().unwrap());
                if p.degree().unwrap() % 2 == 0 { s } else { -s }
            })
            .collect();
        Ok(changes(at_neg_inf) - changes(at_pos_inf))
    }

    /// Yun's algorithm: `self = c · Π fᵢ^{mᵢ}` with square-free, pairwise
    /// coprime monic `fᵢ`. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut factors = Vec::new();
        let f = self.monic();
        let d = f.derivative();
        let a = f.gcd(&d);
        let mut b = f.div_rem(&a)?.0;
        let mut c = d.div_rem(&a)?.0;
        let mut multiplicity = 1;
        while b.degree().is_some_and(|deg| deg > 0) {
            let e = &c - &b.derivative();
            let g = b.gcd(&e);
            if g.degree().is_some_and(|deg| deg > 0) {
                factors.push((g.clone(), multiplicity));
            }
            b = b.div_rem(&g)?.0;
            c = e.div_rem(&g)?.0;
            multiplicity += 1;
        }
        Ok(factors)
    }

    /// Number of real roots counted with multiplicity.
    pub fn count_real_roots(&self) -> Result<usize> {
        let mut total = 0;
        for (factor, m) in self.square_free_decomposition()? {
            total += m * factor.count_distinct_real_roots()?;
        }
        Ok(total)
    }

    /// True iff every complex root is real. Constants count as hyperbolic.
    pub fn is_hyperbolic(&self) -> Result<bool> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.count_real_roots()? == degree)
    }

    /// Power sums `s_m = Σ xᵢ^m` of the roots, `m = 0..count`, by Newton's identities.
    pub fn newton_sums(&self, count: usize) -> Result<Vec<Rational>> {
        let degree = self.degree().ok_or(Error::ZeroPolynomial)?;
        let f = self.monic();
        // e-coefficients: f = X^d + c_{d-1} X^{d-1} + … ; use c_{d-k}
        let c = |k: usize| -> Rational {
            if k > degree { Rational::new() } else { f.coeff(degree - k) }
        };
        let mut s: Vec<Rational> = Vec::with_capacity(count);
        for m in 0..count {
            if m == 0 {
                s.push(Rational::from(degree as u64));
                continue;
            }
            // s_m = −m c_m − Σ_{i=1}^{m−1} c_i s_{m−i}
            let mut value = Rational::from(&c(m) * m as u64);
            value = -value;
            for i in 1..m {
                value -= Rational::from(&c(i) * &s[m - i]);
            }
            s.push(value);
        }
        Ok(s)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64()).collect()
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| Rational::from(-c)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;

    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += Rational::from(a * b);
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            }
            first = false;
            let abs = Rational::from(c.abs_ref());
            match i {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != 1 {
                        write!(f, "{abs}*")?;
                    }
                    if i == 1 {
                        write!(f, "X")?;
                    } else {
                        write!(f, "X^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
