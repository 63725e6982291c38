//! Truncated Laurent series with exact rational coefficients.
//!
//! A [`Series`] stores the coefficients of `z^valuation .. z^(precision-1)`.
//! Everything at or above `precision` is unknown. Every operation reports
//! the largest bound to which its result is certain, so a coefficient that
//! comes back from [`Series::coeff`] is never a guess.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::SeriesError;

/// Default truncation order, in powers of `z`.
pub const DEFAULT_PRECISION: i64 = 64;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    valuation: i64,
    coeffs: Vec<BigRational>,
    precision: i64,
}

impl Series {
    /// Builds a series from the coefficients of `z^valuation, z^(valuation+1), ...`.
    ///
    /// Coefficients at or beyond `precision` are dropped; missing ones up to
    /// `precision` are taken to be zero.
    pub fn from_coeffs(valuation: i64, coeffs: Vec<BigRational>, precision: i64) -> Self {
        if precision <= valuation {
            return Self::zero(precision);
        }
        let len = (precision - valuation) as usize;
        let mut coeffs = coeffs;
        coeffs.resize(len, BigRational::zero());
        Self {
            valuation,
            coeffs,
            precision,
        }
        .normalized()
    }

    pub fn from_ints(valuation: i64, coeffs: &[i64], precision: i64) -> Self {
        let coeffs = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Self::from_coeffs(valuation, coeffs, precision)
    }

    pub fn zero(precision: i64) -> Self {
        Self {
            valuation: precision,
            coeffs: Vec::new(),
            precision,
        }
    }

    pub fn one(precision: i64) -> Self {
        Self::monomial(BigRational::one(), 0, precision)
    }

    /// `c * z^exponent`, known exactly below `precision`.
    pub fn monomial(c: BigRational, exponent: i64, precision: i64) -> Self {
        Self::from_coeffs(exponent, vec![c], precision)
    }

    /// The variable itself, `z`.
    pub fn var(precision: i64) -> Self {
        Self::monomial(BigRational::one(), 1, precision)
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// Coefficients of `z^valuation .. z^(precision-1)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// True if no coefficient below the precision is nonzero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Iterates `(exponent, coefficient)` over the nonzero known terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.valuation + k as i64, c))
    }

    /// The coefficient of `z^n`.
    pub fn coeff(&self, n: i64) -> Result<BigRational, SeriesError> {
        if n >= self.precision {
            return Err(SeriesError::PrecisionExceeded {
                exponent: n,
                precision: self.precision,
            });
        }
        Ok(self.raw(n))
    }

    /// The coefficient of `z^n`, required to be an integer.
    pub fn integer_coeff(&self, n: i64) -> Result<BigInt, SeriesError> {
        let c = self.coeff(n)?;
        if c.is_integer() {
            Ok(c.to_integer())
        } else {
            Err(SeriesError::NonIntegral { exponent: n })
        }
    }

    /// Integer coefficients of `z^from .. z^(to-1)`.
    pub fn integer_coeffs(&self, from: i64, to: i64) -> Result<Vec<BigInt>, SeriesError> {
        (from..to).map(|n| self.integer_coeff(n)).collect()
    }

    /// Checks that every known coefficient is an integer.
    pub fn assert_integral(&self) -> Result<(), SeriesError> {
        for (e, c) in self.terms() {
            if !c.is_integer() {
                return Err(SeriesError::NonIntegral { exponent: e });
            }
        }
        Ok(())
    }

    fn raw(&self, n: i64) -> BigRational {
        if n < self.valuation || n >= self.precision {
            return BigRational::zero();
        }
        self.coeffs[(n - self.valuation) as usize].clone()
    }

    fn raw_ref(&self, n: i64) -> Option<&BigRational> {
        if n < self.valuation || n >= self.precision {
            None
        } else {
            Some(&self.coeffs[(n - self.valuation) as usize])
        }
    }

    fn normalized(mut self) -> Self {
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == self.coeffs.len() {
            return Self::zero(self.precision);
        }
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        self
    }

    /// Lowers the precision to `precision` (no-op if already lower).
    pub fn truncate(&self, precision: i64) -> Self {
        if precision >= self.precision {
            return self.clone();
        }
        let coeffs = (self.valuation.min(precision)..precision)
            .map(|n| self.raw(n))
            .collect();
        Self::from_coeffs(self.valuation.min(precision), coeffs, precision)
    }

    /// Reinterprets the known part as an exact Laurent polynomial and
    /// restates it at `precision`, padding with zeros if that is higher.
    ///
    /// Only sound where the caller chooses the polynomial (Newton iterates),
    /// never for a series whose tail is merely unknown.
    pub fn as_polynomial(&self, precision: i64) -> Self {
        if precision <= self.precision {
            return self.truncate(precision);
        }
        Self::from_coeffs(self.valuation, self.coeffs.clone(), precision)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            valuation: self.valuation + k,
            coeffs: self.coeffs.clone(),
            precision: self.precision + k,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|x| x * c).collect();
        Self::from_coeffs(self.valuation, coeffs, self.precision)
    }

    pub fn add(&self, other: &Series) -> Series {
        let precision = self.precision.min(other.precision);
        let valuation = self.valuation.min(other.valuation).min(precision);
        let coeffs = (valuation..precision)
            .map(|n| match (self.raw_ref(n), other.raw_ref(n)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigRational::zero(),
            })
            .collect();
        Self::from_coeffs(valuation, coeffs, precision)
    }

    pub fn sub(&self, other: &Series) -> Series {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        Self {
            valuation: self.valuation,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            precision: self.precision,
        }
    }

    /// Cauchy product. The result is known below
    /// `min(a.precision + b.valuation, b.precision + a.valuation)`.
    pub fn mul(&self, other: &Series) -> Series {
        let valuation = self.valuation + other.valuation;
        let precision = (self.precision + other.valuation).min(other.precision + self.valuation);
        if self.is_zero() || other.is_zero() || precision <= valuation {
            return Self::zero(precision);
        }
        let len = (precision - valuation) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(valuation, coeffs, precision)
    }

    /// Quotient `self / divisor`.
    ///
    /// The relative precision of the result is the smaller of the two
    /// operands' relative precisions.
    pub fn div(&self, divisor: &Series) -> Result<Series, SeriesError> {
        if divisor.is_zero() {
            return Err(SeriesError::DivisionByZeroSeries);
        }
        let valuation = self.valuation - divisor.valuation;
        let rel_num = self.precision - self.valuation;
        let rel_den = divisor.precision - divisor.valuation;
        let precision = valuation + rel_num.min(rel_den);
        if self.is_zero() {
            return Ok(Self::zero(self.precision - divisor.valuation));
        }
        let len = (precision - valuation) as usize;
        let lead = &divisor.coeffs[0];
        let mut quotient: Vec<BigRational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = self.coeffs[k].clone();
            for (i, q) in quotient.iter().enumerate() {
                if let Some(b) = divisor.coeffs.get(k - i) {
                    if !b.is_zero() && !q.is_zero() {
                        acc -= q * b;
                    }
                }
            }
            quotient.push(acc / lead);
        }
        Ok(Self::from_coeffs(valuation, quotient, precision))
    }

    pub fn recip(&self) -> Result<Series, SeriesError> {
        let rel = self.precision - self.valuation;
        Self::one(rel.max(0)).div(self)
    }

    /// Integer power; negative exponents go through [`Series::recip`].
    pub fn pow(&self, exponent: i64) -> Result<Series, SeriesError> {
        if exponent < 0 {
            return self.recip()?.pow(-exponent);
        }
        let mut result = Self::one(self.precision - self.valuation);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Reindexes an even series in `z` as a series in `Z = z^2`.
    pub fn decimate(&self) -> Result<Series, SeriesError> {
        if let Some((e, _)) = self.terms().find(|(e, _)| e.rem_euclid(2) == 1) {
            return Err(SeriesError::OddCoefficientPresent { exponent: e });
        }
        let precision = (self.precision + 1).div_euclid(2);
        let valuation = (self.valuation + 1).div_euclid(2).min(precision);
        let coeffs = (valuation..precision).map(|m| self.raw(2 * m)).collect();
        Ok(Self::from_coeffs(valuation, coeffs, precision))
    }

    /// Inverse of [`Series::decimate`]: substitutes `Z = z^2`.
    pub fn inflate(&self) -> Series {
        let valuation = 2 * self.valuation;
        let precision = 2 * self.precision;
        let mut coeffs = vec![BigRational::zero(); (precision - valuation) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * k] = c.clone();
        }
        Self::from_coeffs(valuation, coeffs, precision)
    }

    /// Renders the known terms in the named variable, followed by the
    /// order term, e.g. `1/z - z - z^5 + O(z^8)`.
    pub fn render(&self, var: &str) -> String {
        let mut out = String::new();
        for (e, c) in self.terms() {
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&render_term(&mag, e, var));
        }
        if out.is_empty() {
            out.push('0');
        }
        out.push_str(&format!(" + O({})", render_power(self.precision, var)));
        out
    }
}

fn render_power(e: i64, var: &str) -> String {
    match e {
        0 => "1".to_string(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

fn render_term(mag: &BigRational, e: i64, var: &str) -> String {
    if e < 0 {
        let den = render_power(-e, var);
        return format!("{mag}/{den}");
    }
    if e == 0 {
        return mag.to_string();
    }
    if mag.is_one() {
        render_power(e, var)
    } else {
        format!("{mag}{}", render_power(e, var))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(self, rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}
