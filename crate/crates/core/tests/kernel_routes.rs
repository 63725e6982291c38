use dyck_odd::automaton::dp_counts;
use dyck_odd::kernel::{
    bonus_closed, g0_closed, h0_closed, h0_linear, partial_closed, residue_cubic,
    residue_functional, solve_v1, KernelPolynomial,
};
use dyck_odd::oracle::oracle_counts;
use dyck_odd::{Layer, PathClass, Series};
use num_bigint::BigInt;

/// Integer polynomial product truncated to `len` terms.
fn poly_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `w = z * v1` by undetermined coefficients.
///
/// Substituting `v = w / z` into the kernel and multiplying by `z^2` gives
/// `Q(w) = w^3 + (z^2 - 1) w^2 - z^4 w + z^4`. With `w_0 = 1` the
/// coefficient of `z^m` in `Q` is `w_m + (terms in w_0..w_{m-1})`, so each
/// `w_m` is minus that coefficient computed with `w_m = 0`.
fn small_root_by_coefficients(len: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::from(0); len];
    w[0] = BigInt::from(1);
    for m in 1..len {
        w[m] = BigInt::from(0);
        let w2 = poly_mul(&w, &w, len);
        let w3 = poly_mul(&w2, &w, len);
        let mut q = w3[m].clone() - &w2[m];
        if m >= 2 {
            q += &w2[m - 2];
        }
        if m >= 4 {
            q -= &w[m - 4];
        }
        if m == 4 {
            q += 1;
        }
        w[m] = -q;
    }
    w
}

#[test]
fn newton_root_matches_undetermined_coefficients() {
    let len = 40;
    let w = small_root_by_coefficients(len);
    let v1 = solve_v1(len as i64 - 1).unwrap();
    for (m, expected) in w.iter().enumerate() {
        let e = m as i64 - 1;
        assert_eq!(&v1.integer_coeff(e).unwrap(), expected, "z^{e}");
    }
    // the even powers of z in v1 vanish
    assert!(w.iter().skip(1).step_by(2).all(|c| *c == BigInt::from(0)));
}

#[test]
fn residual_vanishes_at_several_precisions() {
    for p in [2, 3, 7, 24, 65] {
        let v1 = solve_v1(p).unwrap();
        assert_eq!(v1.precision(), p);
        let r = KernelPolynomial.eval(&v1);
        assert!(r.is_zero(), "precision {p}: {r}");
        assert!(r.precision() >= p - 2);
    }
}

#[test]
fn h0_two_expressions_agree() {
    assert_eq!(h0_closed(40).unwrap(), h0_linear(40).unwrap());
}

#[test]
fn closed_forms_are_even_power_series() {
    for s in [
        g0_closed(30).unwrap(),
        h0_closed(30).unwrap(),
        bonus_closed(30).unwrap().g0,
    ] {
        assert!(s.valuation() >= 0);
        assert!(s.decimate().is_ok());
        s.assert_integral().unwrap();
    }
}

#[test]
fn cubic_vanishes_on_oracle_series() {
    let t = oracle_counts(PathClass::OddAll, 24).unwrap();
    let g0 = t.complete_series();
    assert_eq!(g0.precision(), 13);
    assert!(residue_cubic(&g0).is_zero());
}

#[test]
fn functional_equation_vanishes_on_automaton_series() {
    let t = dp_counts(PathClass::OddAll, 30);
    let g0 = t.series(Layer::G, 0);
    let r = residue_functional(&g0);
    assert!(r.is_zero());
    assert_eq!(r.precision(), 31);
}

#[test]
fn f3_closed_matches_automaton() {
    let closed = partial_closed(Layer::F, 3, 13).unwrap();
    let dp = dp_counts(PathClass::OddAll, 12).series(Layer::F, 3);
    assert_eq!(closed, dp);
}

#[test]
fn bonus_boundary_relations() {
    let b = bonus_closed(30).unwrap();
    let z = Series::var(40);
    let one = Series::one(40);
    assert!((&b.f1 - &(&z * &(&one + &b.g0))).is_zero());
    assert!((&b.g0 - &(&z * &(&(&b.f1 + &b.g1) + &b.h1))).is_zero());
}

#[test]
fn bonus_boundary_series_match_automaton() {
    use dyck_odd::LayerState;
    let b = bonus_closed(24).unwrap();
    let t = dp_counts(PathClass::BonusInteriorOdd, 23);
    for (layer, s) in [(Layer::F, &b.f1), (Layer::G, &b.g1), (Layer::H, &b.h1)] {
        for n in 0..24 {
            let dp = BigInt::from(t.get(n, LayerState::new(layer, 1)));
            assert_eq!(s.integer_coeff(n as i64).unwrap(), dp, "{layer}_1 z^{n}");
        }
    }
}
