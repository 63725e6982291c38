//! Named consistency checks shared by the CLI and the Python bindings.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::automaton::dp_counts;
use crate::class::{Layer, PathClass};
use crate::error::KernelError;
use crate::kernel::{self, KernelPolynomial};
use crate::oracle::oracle_counts;
use crate::series::Series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// What the check held through, e.g. `z^26`.
    pub precision: String,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{mark}  {:<40} {:<10} {}",
            self.name, self.precision, self.detail
        )
    }
}

/// Deliberate corruption used to prove that failures are reported.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Fault {
    #[default]
    None,
    /// Adds one to a coefficient of `g0` before checking it.
    PerturbG0,
}

fn zero_check(name: &str, residual: &Series, var: &str) -> Check {
    report(name, residual, var, "residual vanishes")
}

fn report(name: &str, residual: &Series, var: &str, ok: &str) -> Check {
    let passed = residual.is_zero();
    Check {
        name: name.to_string(),
        passed,
        precision: format!("{var}^{}", residual.precision() - 1),
        detail: if passed {
            ok.to_string()
        } else {
            format!("first nonzero term at {var}^{}", residual.valuation())
        },
    }
}

fn equal_check(name: &str, a: &Series, b: &Series, var: &str) -> Check {
    let p = a.precision().min(b.precision());
    report(
        name,
        &a.truncate(p).sub(&b.truncate(p)),
        var,
        "series agree",
    )
}

fn perturb(s: &Series, at: i64) -> Series {
    s.add(&Series::monomial(BigRational::one(), at, s.precision()))
}

/// Algebraic identities satisfied by the closed forms, checked through
/// `z^(precision-1)`.
pub fn identities(precision: i64, fault: Fault) -> Result<Vec<Check>, KernelError> {
    let mut checks = Vec::new();

    let v1 = kernel::solve_v1(precision)?;
    let residual = KernelPolynomial.eval(&v1);
    checks.push(zero_check("kernel residual P(v1)", &residual, "z"));
    checks.push(Check {
        name: "v1 integrality".to_string(),
        passed: v1.assert_integral().is_ok(),
        precision: format!("z^{}", v1.precision() - 1),
        detail: "all coefficients integral".to_string(),
    });

    let mut g0 = kernel::g0_closed(precision)?;
    if fault == Fault::PerturbG0 {
        g0 = perturb(&g0, 6);
    }
    let g0_z = g0.decimate()?;
    checks.push(zero_check(
        "cubic in Z for g0",
        &kernel::residue_cubic(&g0_z),
        "Z",
    ));
    checks.push(zero_check(
        "functional equation for g0",
        &kernel::residue_functional(&g0),
        "z",
    ));

    let h0 = kernel::h0_closed(precision)?;
    let h0_alt = kernel::h0_linear(precision)?;
    checks.push(equal_check(
        "h0 = z^2/(v1^2-z^2) = -v1/z - 1 + 1/z^2",
        &h0,
        &h0_alt,
        "z",
    ));

    let bonus = kernel::bonus_closed(precision)?;
    let p = precision + 4;
    let f1_rhs = bonus.g0.add(&Series::one(p)).shift(1);
    checks.push(equal_check("bonus f1 = z + z g0", &bonus.f1, &f1_rhs, "z"));
    let g0_rhs = bonus.f1.add(&bonus.g1).add(&bonus.h1).shift(1);
    checks.push(equal_check(
        "bonus g0 = z (f1 + g1 + h1)",
        &bonus.g0,
        &g0_rhs,
        "z",
    ));

    Ok(checks)
}

fn closed_complete(class: PathClass, precision: i64) -> Result<Series, KernelError> {
    let s = match class {
        PathClass::OddAll => kernel::g0_closed(precision)?,
        PathClass::OddLastEven => kernel::h0_closed(precision)?,
        PathClass::OddLastAny => kernel::g0_plus_h0_closed(precision)?,
        PathClass::BonusInteriorOdd => kernel::bonus_closed(precision)?.g0,
    };
    Ok(s.decimate()?)
}

/// Compares the automaton, the brute-force oracle and the closed forms on
/// every coefficient they share, for paths of up to `n_max` steps.
pub fn triple_agreement(n_max: usize, fault: Fault) -> Result<Vec<Check>, crate::Error> {
    let mut checks = Vec::new();
    let z_precision = (n_max as i64 + 1).max(4);
    for class in PathClass::ALL {
        let dp = dp_counts(class, n_max);
        let oracle = oracle_counts(class, n_max)?;
        let mismatch = (0..=n_max).find(|&n| dp.row(n) != oracle.row(n));
        checks.push(Check {
            name: format!("{class}: automaton = oracle"),
            passed: mismatch.is_none(),
            precision: format!("n<={n_max}"),
            detail: match mismatch {
                None => format!("{} nonzero entries", dp.entries().count()),
                Some(n) => format!("first differing row n={n}"),
            },
        });

        let mut closed = closed_complete(class, z_precision)?;
        if fault == Fault::PerturbG0 && class == PathClass::OddAll {
            closed = perturb(&closed, 3);
        }
        let counted = dp.complete_series();
        let p = counted.precision().min(closed.precision());
        let diff = counted.truncate(p).sub(&closed.truncate(p));
        let ok = diff.is_zero();
        checks.push(Check {
            name: format!("{class}: automaton = closed form"),
            passed: ok,
            precision: format!("Z^{}", p - 1),
            detail: if ok {
                "complete-path counts agree".to_string()
            } else {
                format!("first difference at Z^{}", diff.valuation())
            },
        });
    }

    let dp = dp_counts(PathClass::OddAll, n_max);
    for layer in [Layer::F, Layer::G, Layer::H] {
        for j in 0..=6u32 {
            let closed = kernel::partial_closed(layer, j, z_precision)?;
            let counted = dp.series(layer, j as usize);
            let name = format!(
                "odd-all: {}_{j} closed form = automaton",
                layer.name().to_lowercase()
            );
            checks.push(equal_check(&name, &counted, &closed, "z"));
        }
    }
    Ok(checks)
}
