//! Truncated univariate power series over exact rationals.
//!
//! Every series value carries its truncation degree `D` and stores exactly
//! `D + 1` coefficients; arithmetic never consults degrees above `D`.
//! Binary operations panic on mismatched truncation degrees rather than
//! silently re-truncating. There is no floating point anywhere: integer
//! series are rationals with denominator 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::IntPolynomial;

/// A power series mod `t^(D+1)` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    degree: usize,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            degree,
            coeffs: vec![BigRational::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Series with the given integer coefficients `c_0..`, truncated at `degree`.
    pub fn from_integer_coeffs(coeffs: &[BigInt], degree: usize) -> Self {
        let mut s = Self::zero(degree);
        for (i, c) in coeffs.iter().take(degree + 1).enumerate() {
            s.coeffs[i] = BigRational::from_integer(c.clone());
        }
        s
    }

    pub fn from_int_polynomial(poly: &IntPolynomial, degree: usize) -> Self {
        Self::from_integer_coeffs(poly.coeffs(), degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeff(&self, i: usize) -> &BigRational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True iff every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The integer coefficient vector, or `None` if any coefficient is non-integral.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    fn check_degree(&self, other: &Self, op: &str) {
        assert_eq!(
            self.degree, other.degree,
            "truncation degree mismatch in series {}: {} vs {}",
            op, self.degree, other.degree
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_degree(other, "addition");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        TruncatedSeries { degree: self.degree, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_degree(other, "subtraction");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        TruncatedSeries { degree: self.degree, coeffs }
    }

    /// Cauchy product truncated at the shared degree.
    pub fn mul(&self, other: &Self) -> Self {
        self.check_degree(other, "multiplication");
        let mut coeffs = vec![BigRational::zero(); self.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(self.degree + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        TruncatedSeries { degree: self.degree, coeffs }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c * factor).collect();
        TruncatedSeries { degree: self.degree, coeffs }
    }

    /// Series logarithm `Σ_{i≥1} (−1)^{i+1} (f−1)^i / i`, truncated at `D`.
    ///
    /// Panics unless the constant term is 1. Since `f − 1` has valuation at
    /// least 1, powers beyond `D` vanish and the loop stops there (or as soon
    /// as a power vanishes identically).
    pub fn log(&self) -> Self {
        assert!(
            self.coeffs[0].is_one(),
            "series logarithm requires constant term 1, got {}",
            self.coeffs[0]
        );
        let mut shifted = self.clone();
        shifted.coeffs[0] = BigRational::zero();
        let mut result = Self::zero(self.degree);
        let mut power = shifted.clone();
        for i in 1..=self.degree {
            if power.is_zero() {
                break;
            }
            let term = BigRational::new(
                BigInt::from(if i % 2 == 1 { 1 } else { -1 }),
                BigInt::from(i),
            );
            for (r, p) in result.coeffs.iter_mut().zip(&power.coeffs) {
                *r += p * &term;
            }
            power = power.mul(&shifted);
        }
        result
    }
}

/// Generalized binomial coefficient `a(a−1)⋯(a−i+1) / i!` for integer `a`
/// of either sign; always an integer.
pub fn gen_binomial(a: &BigInt, i: usize) -> BigInt {
    let mut numerator = BigInt::one();
    for j in 0..i {
        numerator *= a - BigInt::from(j);
    }
    let mut factorial = BigInt::one();
    for j in 2..=i {
        factorial *= BigInt::from(j);
    }
    debug_assert!((&numerator % &factorial).is_zero());
    numerator / factorial
}

/// `(1 + t^k)^a = Σ_i binom(a, i) t^(k·i)` truncated at `degree`.
pub fn binomial_power(k: usize, a: &BigInt, degree: usize) -> TruncatedSeries {
    assert!(k > 0, "binomial power requires k ≥ 1");
    let mut s = TruncatedSeries::zero(degree);
    let mut i = 0;
    while k * i <= degree {
        s.coeffs[k * i] = BigRational::from_integer(gen_binomial(a, i));
        i += 1;
    }
    s
}

/// `∏_{k=1}^{D} (1 + t^k)^{a(k)}` truncated at `degree`, where
/// `exponents[k-1] = a(k)`. Entries must exist for every `k = 1..=degree`.
pub fn product_of_binomial_powers(exponents: &[BigInt], degree: usize) -> TruncatedSeries {
    assert!(
        exponents.len() >= degree,
        "need exponents for k = 1..={}, got {}",
        degree,
        exponents.len()
    );
    let mut acc = TruncatedSeries::one(degree);
    for (idx, a) in exponents.iter().take(degree).enumerate() {
        if a.is_zero() {
            continue;
        }
        acc = acc.mul(&binomial_power(idx + 1, a, degree));
    }
    acc
}
