//! Kernel-method closed forms.
//!
//! The joint denominator of the three layer generating functions is the
//! cubic `P(u) = z u^3 + (z^2 - 1) u^2 - z^3 u + z^2`. Exactly one of its
//! roots, `v1 = 1/z - z - z^5 - ...`, has a Laurent expansion at `z = 0`;
//! every generating function of interest is a rational expression in `v1`
//! and `z`. The other two roots never enter a formula and are not computed.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::class::Layer;
use crate::error::KernelError;
use crate::series::Series;

/// Extra working precision for intermediate values, in powers of `z`.
const WORKING_SLACK: i64 = 4;

/// Newton iterations allowed before giving up. Residual valuations grow
/// like `2^k`, so this is far more than any representable precision needs.
pub const MAX_ITERATIONS: usize = 64;

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The kernel cubic `z u^3 + (z^2 - 1) u^2 - z^3 u + z^2`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KernelPolynomial;

impl KernelPolynomial {
    /// Coefficient of `u^k` as an exact polynomial in `z`, stated at `precision`.
    pub fn coefficient(&self, k: usize, precision: i64) -> Series {
        match k {
            0 => Series::monomial(int(1), 2, precision),
            1 => Series::monomial(int(-1), 3, precision),
            2 => Series::from_ints(0, &[-1, 0, 1], precision),
            3 => Series::var(precision),
            _ => Series::zero(precision),
        }
    }

    /// `P(u)` by Horner's rule.
    pub fn eval(&self, u: &Series) -> Series {
        let p = self.exact_precision(u);
        let mut acc = self.coefficient(3, p);
        for k in (0..3).rev() {
            acc = acc.mul(u).add(&self.coefficient(k, p));
        }
        acc
    }

    /// `P'(u) = 3z u^2 + 2(z^2 - 1) u - z^3`.
    pub fn derivative(&self, u: &Series) -> Series {
        let p = self.exact_precision(u);
        let mut acc = self.coefficient(3, p).scale(&int(3));
        acc = acc.mul(u).add(&self.coefficient(2, p).scale(&int(2)));
        acc.mul(u).add(&self.coefficient(1, p))
    }

    fn exact_precision(&self, u: &Series) -> i64 {
        u.precision() + 3 * u.valuation().abs() + 8
    }
}

/// Residual valuations observed during the Newton solve for `v1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonTrace {
    /// Valuation of `P(u_k)` for each iterate `u_k`, starting at `u_0 = 1/z`.
    /// The final entry is the precision at which the residual vanished.
    pub residual_valuations: Vec<i64>,
    pub working_precision: i64,
}

/// The small root `v1` of the kernel, known below `z^precision`.
pub fn solve_v1(precision: i64) -> Result<Series, KernelError> {
    solve_v1_traced(precision).map(|(v, _)| v)
}

/// As [`solve_v1`], also returning the residual history.
///
/// Each iterate is treated as an exact Laurent polynomial, so its residual
/// is computed exactly up to the working precision. Since `P'(v1)` has
/// valuation -1, `P(u) = O(z^R)` certifies `u - v1 = O(z^(R+1))`.
pub fn solve_v1_traced(precision: i64) -> Result<(Series, NewtonTrace), KernelError> {
    solve_v1_bounded(precision, MAX_ITERATIONS)
}

/// As [`solve_v1_traced`] with an explicit iteration budget.
pub fn solve_v1_bounded(
    precision: i64,
    max_iterations: usize,
) -> Result<(Series, NewtonTrace), KernelError> {
    if precision < 2 {
        return Err(KernelError::PrecisionTooLow {
            requested: precision,
            minimum: 2,
        });
    }
    let kernel = KernelPolynomial;
    let working = precision + WORKING_SLACK;
    let mut u = Series::monomial(int(1), -1, working);
    let mut trace = NewtonTrace {
        residual_valuations: Vec::new(),
        working_precision: working,
    };
    for iteration in 0..max_iterations {
        let residual = kernel.eval(&u);
        trace.residual_valuations.push(residual.valuation());
        if residual.is_zero() {
            let certified = residual.precision() + 1;
            if certified < precision {
                return Err(KernelError::PrecisionTooLow {
                    requested: precision,
                    minimum: certified,
                });
            }
            let v1 = u.truncate(precision);
            v1.assert_integral()?;
            return Ok((v1, trace));
        }
        if let [.., previous, current] = trace.residual_valuations[..] {
            if current < 2 * previous || current <= previous {
                return Err(KernelError::NonConvergence {
                    iteration,
                    previous,
                    current,
                });
            }
        }
        let step = residual.div(&kernel.derivative(&u))?;
        u = u.sub(&step).as_polynomial(working);
    }
    let vals = &trace.residual_valuations;
    Err(KernelError::NonConvergence {
        iteration: max_iterations,
        previous: vals.len().checked_sub(2).map_or(0, |i| vals[i]),
        current: vals.last().copied().unwrap_or(0),
    })
}

fn check_min(precision: i64, minimum: i64) -> Result<(), KernelError> {
    if precision < minimum {
        Err(KernelError::PrecisionTooLow {
            requested: precision,
            minimum,
        })
    } else {
        Ok(())
    }
}

/// `v1^2 - z^2`, the common denominator of `g0` and `h0`.
fn g0_denominator(v1: &Series) -> Series {
    v1.mul(v1)
        .sub(&Series::monomial(int(1), 2, v1.precision() + 4))
}

/// Finishes a closed form: checks it is a power series and cuts it to the
/// requested precision.
fn finish(s: Series, precision: i64) -> Result<Series, KernelError> {
    KernelError::check_power_series(&s)?;
    if s.precision() < precision {
        return Err(KernelError::PrecisionTooLow {
            requested: precision,
            minimum: s.precision(),
        });
    }
    Ok(s.truncate(precision))
}

/// Complete paths with all descents odd: `g0 = z v1 / (v1^2 - z^2)`.
pub fn g0_closed(precision: i64) -> Result<Series, KernelError> {
    check_min(precision, 4)?;
    let v1 = solve_v1(precision + WORKING_SLACK)?;
    g0_from_v1(&v1, precision)
}

fn g0_from_v1(v1: &Series, precision: i64) -> Result<Series, KernelError> {
    let g0 = v1.shift(1).div(&g0_denominator(v1))?;
    finish(g0, precision)
}

/// Complete paths whose last descent is even: `h0 = z^2 / (v1^2 - z^2)`.
pub fn h0_closed(precision: i64) -> Result<Series, KernelError> {
    check_min(precision, 4)?;
    let v1 = solve_v1(precision + WORKING_SLACK)?;
    h0_from_v1(&v1, precision)
}

fn h0_from_v1(v1: &Series, precision: i64) -> Result<Series, KernelError> {
    let num = Series::monomial(int(1), 2, v1.precision() + 4);
    let h0 = num.div(&g0_denominator(v1))?;
    finish(h0, precision)
}

/// The second expression for `h0`: `-v1/z - 1 + 1/z^2`.
pub fn h0_linear(precision: i64) -> Result<Series, KernelError> {
    check_min(precision, 4)?;
    let v1 = solve_v1(precision + WORKING_SLACK)?;
    let p = v1.precision();
    let h0 = v1
        .shift(-1)
        .neg()
        .sub(&Series::one(p))
        .add(&Series::monomial(int(1), -2, p));
    finish(h0, precision)
}

/// `g0 + h0`: complete paths whose last descent may have either parity.
pub fn g0_plus_h0_closed(precision: i64) -> Result<Series, KernelError> {
    check_min(precision, 4)?;
    let v1 = solve_v1(precision + WORKING_SLACK)?;
    Ok(g0_from_v1(&v1, precision)?.add(&h0_from_v1(&v1, precision)?))
}

/// Generating function of prefixes ending in `(layer, j)` for the
/// all-odd class, read off as the coefficient of `u^j`:
///
/// * `f_0 = 1`, `f_j = v1^(-j)` for `j >= 1`
/// * `g_j = z (1 + h0) / v1^(j+1)`
/// * `h_j = z g0 / v1^(j+1)`
pub fn partial_closed(layer: Layer, j: u32, precision: i64) -> Result<Series, KernelError> {
    check_min(precision, 1)?;
    let j = j as i64;
    let working = precision + WORKING_SLACK;
    if layer == Layer::F && j == 0 {
        return Ok(Series::one(precision));
    }
    let v1 = solve_v1(working)?;
    let s = match layer {
        Layer::F => v1.pow(-j)?,
        Layer::G => {
            let h0 = h0_from_v1(&v1, working)?;
            h0.add(&Series::one(working))
                .shift(1)
                .mul(&v1.pow(-(j + 1))?)
        }
        Layer::H => {
            let g0 = g0_from_v1(&v1, working)?;
            g0.shift(1).mul(&v1.pow(-(j + 1))?)
        }
    };
    finish(s, precision)
}

/// Boundary series of the bonus class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BonusSeries {
    pub f1: Series,
    pub g1: Series,
    pub h1: Series,
    /// Complete paths of the bonus class.
    pub g0: Series,
}

/// Closed forms for the bonus class:
/// `g0 = z^2 v1 / (v1 (1 - z^2) - z)`, `f1 = z + z g0`,
/// `g1 = z f1 v1 / (v1^2 - z^2)`, `h1 = z^2 f1 / (v1^2 - z^2)`.
pub fn bonus_closed(precision: i64) -> Result<BonusSeries, KernelError> {
    check_min(precision, 4)?;
    let working = precision + WORKING_SLACK;
    let v1 = solve_v1(working)?;
    let p = v1.precision() + 4;
    let one_minus_z2 = Series::from_ints(0, &[1, 0, -1], p);
    let den = v1.mul(&one_minus_z2).sub(&Series::var(p));
    let g0 = v1.shift(2).div(&den)?;
    let f1 = g0.add(&Series::one(p)).shift(1);
    let kernel_den = g0_denominator(&v1);
    let g1 = f1.mul(&v1).shift(1).div(&kernel_den)?;
    let h1 = f1.shift(2).div(&kernel_den)?;
    Ok(BonusSeries {
        f1: finish(f1, precision)?,
        g1: finish(g1, precision)?,
        h1: finish(h1, precision)?,
        g0: finish(g0, precision)?,
    })
}

/// `-Z^2 g^3 - 2 Z^2 g^2 + g - Z^2 g - Z g - Z` for `g` a series in `Z`.
/// Vanishes identically on the all-odd complete-path series.
pub fn residue_cubic(g0: &Series) -> Series {
    let p = g0.precision() + 4;
    let big_z = Series::var(p);
    let big_z2 = Series::monomial(int(1), 2, p);
    let g2 = g0.mul(g0);
    let g3 = g2.mul(g0);
    big_z2
        .mul(&g3)
        .neg()
        .sub(&big_z2.mul(&g2).scale(&int(2)))
        .add(g0)
        .sub(&big_z2.mul(g0))
        .sub(&big_z.mul(g0))
        .sub(&big_z)
}

/// `g (1 - z^4 (1 + g)^2) - z^2 (1 + g)` for `g` a series in `z`.
pub fn residue_functional(g0: &Series) -> Series {
    let p = g0.precision() + 4;
    let one_plus = g0.add(&Series::one(p));
    let inner = Series::one(p).sub(&one_plus.mul(&one_plus).shift(4));
    g0.mul(&inner).sub(&one_plus.shift(2))
}
