//! Closed-form generating polynomials, invariant dimensions and Euler
//! characteristics of `X_{d,n}`.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{Pow, Zero};

use super::group::Modulus;
use crate::fracpoly::FracPoly;

/// `Σ c_k (XY)^(k/12)` from `(numerator, coefficient)` pairs.
fn xy_series(terms: &[(i64, i64)]) -> FracPoly {
    FracPoly::from_terms(terms.iter().map(|&(k, c)| (k, k, c)))
}

/// The generating polynomial of `X_{d,n}` with all fractional terms kept.
/// Only its integer-exponent coefficients are Hodge numbers.
///
/// * `d = 2`: `(X+Y)^n + (1 + XY + 4(XY)^{1/2})^n`
/// * `d = 3`: `X^n + Y^n + (1 + (XY)^{1/3})^{3n}`
/// * `d = 4`: `X^n + Y^n + (1 + XY + 2(XY)^{1/4} + 3(XY)^{1/2} + 2(XY)^{3/4})^n + (XY)^{n/2}`
/// * `d = 6`: `X^n + Y^n + (1 + XY + (XY)^{1/6} + 2(XY)^{1/3} + 2(XY)^{1/2} + 2(XY)^{2/3} + (XY)^{5/6})^n
///   + 2(XY)^{n/2} + ((XY)^{1/3} + (XY)^{2/3})^n`
pub fn closed_form_poincare(d: Modulus, n: u32) -> FracPoly {
    let x_n = FracPoly::x().pow(n);
    let y_n = FracPoly::y().pow(n);
    let n_i = n as i64;
    match d.get() {
        2 => {
            let xy_sum = &FracPoly::x() + &FracPoly::y();
            let twisted = xy_series(&[(0, 1), (12, 1), (6, 4)]);
            &xy_sum.pow(n) + &twisted.pow(n)
        }
        3 => {
            let base = xy_series(&[(0, 1), (4, 1)]);
            &(&x_n + &y_n) + &base.pow(3 * n)
        }
        4 => {
            let base = xy_series(&[(0, 1), (12, 1), (3, 2), (6, 3), (9, 2)]);
            let corner = xy_series(&[(6 * n_i, 1)]);
            &(&(&x_n + &y_n) + &base.pow(n)) + &corner
        }
        6 => {
            let base = xy_series(&[(0, 1), (12, 1), (2, 1), (4, 2), (6, 2), (8, 2), (10, 1)]);
            let middle = xy_series(&[(6 * n_i, 2)]);
            let pair = xy_series(&[(4, 1), (8, 1)]);
            [x_n, y_n, base.pow(n), middle, pair.pow(n)].into_iter().sum()
        }
        _ => unreachable!("Modulus only admits 2, 3, 4, 6"),
    }
}

/// `dim H^{p,q}(E_d^n)^{G_{d,n}}` by case analysis.
///
/// For `d = 2` the invariant forms are those with `S = T` or with `S`, `T`
/// partitioning `{1..n}`; for `d = 3, 4, 6` only `S = T` and the two corners
/// `(n,0)`, `(0,n)` survive.
pub fn closed_form_invariant_dims(d: Modulus, n: u32, p: u32, q: u32) -> BigInt {
    if p > n || q > n {
        return BigInt::zero();
    }
    let c = binomial(BigInt::from(n), BigInt::from(p));
    let diagonal = p == q;
    match d.get() {
        2 => {
            let anti = p + q == n;
            match (diagonal, anti) {
                (true, true) => c * 2,
                (true, false) | (false, true) => c,
                (false, false) => BigInt::zero(),
            }
        }
        _ => {
            if diagonal || (p, q) == (0, n) || (p, q) == (n, 0) {
                c
            } else {
                BigInt::zero()
            }
        }
    }
}

/// Euler characteristic of `X_{d,n}`:
///
/// * `d = 2`: `(6^n + 3(−2)^n) / 2`
/// * `d = 3`: `(8^n + 8(−1)^n) / 3`
/// * `d = 4`: `(9^n + 3) / 4 + 3(−1)^n`
/// * `d = 6`: `(10^n + 3·2^n + 8) / 6 + 4(−1)^n`
pub fn euler_closed(d: Modulus, n: u32) -> BigInt {
    let p = |b: i64| -> BigInt { BigInt::from(b).pow(n) };
    let sign = if n.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    let exact_div = |num: BigInt, den: i64| -> BigInt {
        let (quot, rem) = num.div_rem(&BigInt::from(den));
        debug_assert!(rem.is_zero(), "closed form must divide exactly");
        quot
    };
    match d.get() {
        2 => exact_div(p(6) + p(-2) * 3, 2),
        3 => exact_div(p(8) + &sign * 8, 3),
        4 => exact_div(p(9) + 3, 4) + &sign * 3,
        6 => exact_div(p(10) + p(2) * 3 + 8, 6) + &sign * 4,
        _ => unreachable!("Modulus only admits 2, 3, 4, 6"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(d: u32) -> Modulus {
        Modulus::new(d).unwrap()
    }

    #[test]
    fn order_three_surface() {
        assert_eq!(closed_form_poincare(m(3), 2).coefficient(1, 1), BigInt::from(20));
    }

    #[test]
    fn order_two_curve() {
        let p = closed_form_poincare(m(2), 1);
        let want = FracPoly::from_terms([(12, 0, 1), (0, 12, 1), (0, 0, 1), (6, 6, 4), (12, 12, 1)]);
        assert_eq!(p, want);
        let ip = p.integer_part();
        assert_eq!(ip, FracPoly::from_terms([(0, 0, 1), (12, 0, 1), (0, 12, 1), (12, 12, 1)]));
    }

    #[test]
    fn order_six_surface_euler() {
        let p = closed_form_poincare(m(6), 2).integer_part();
        assert_eq!(p.integer_part_euler().unwrap(), BigInt::from(24));
    }

    #[test]
    fn invariant_dims_cases() {
        assert_eq!(closed_form_invariant_dims(m(2), 4, 1, 3), BigInt::from(4));
        assert_eq!(closed_form_invariant_dims(m(2), 2, 1, 1), BigInt::from(4));
        assert_eq!(closed_form_invariant_dims(m(4), 3, 0, 3), BigInt::from(1));
        assert_eq!(closed_form_invariant_dims(m(3), 3, 1, 2), BigInt::from(0));
        assert_eq!(closed_form_invariant_dims(m(6), 3, 4, 0), BigInt::from(0));
    }

    #[test]
    fn euler_values() {
        assert_eq!(euler_closed(m(2), 2), BigInt::from(24));
        assert_eq!(euler_closed(m(3), 2), BigInt::from(24));
        assert_eq!(euler_closed(m(4), 2), BigInt::from(24));
        assert_eq!(euler_closed(m(6), 2), BigInt::from(24));
        assert_eq!(euler_closed(m(6), 3), BigInt::from(168));
        for d in Modulus::ALL {
            assert_eq!(euler_closed(d, 1), BigInt::zero());
        }
    }

    #[test]
    fn euler_closed_matches_generating_polynomial() {
        for d in Modulus::ALL {
            for n in 1..=8 {
                let e = closed_form_poincare(d, n).integer_part().integer_part_euler().unwrap();
                assert_eq!(e, euler_closed(d, n), "d = {d}, n = {n}");
            }
        }
    }

    #[test]
    fn large_euler_characteristics_do_not_overflow() {
        let e = euler_closed(m(6), 40);
        assert!(e > BigInt::from(u64::MAX));
    }
}
