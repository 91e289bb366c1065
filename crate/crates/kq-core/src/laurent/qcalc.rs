//! q-calculus primitives: Pochhammer products, Gaussian binomials and
//! multinomials, and the exact Pochhammer-ratio prefactors of lattice sums.
//!
//! Conventions:
//!   (z; s)_k = prod_{i=0}^{k-1} (1 - z s^i)          finite Pochhammer
//!   [n | k]_s = (s;s)_n / ((s;s)_k (s;s)_{n-k})      Gaussian binomial
//!
//! `[n | k] = 0` when `k > n`; both are 1 when `k = 0`. The base and step
//! may be arbitrary monomials (e.g. `q t^2`), and the Pochhammer base may
//! even be a signed polynomial, which covers `(-q t; q t^2)_k` style factors
//! without a dedicated sign argument.

use num_rational::BigRational;
use num_traits::One;

use super::poly::{LaurentPoly, Monomial, Ring};
use crate::error::{Error, Result};

/// `(base; step)_k` with a general polynomial base.
pub fn q_pochhammer(base: &LaurentPoly, step: &Monomial, k: u32) -> LaurentPoly {
    let ring = base.ring().clone();
    let mut acc = ring.one();
    let mut shifted = base.clone();
    for i in 0..k {
        if i > 0 {
            shifted = shifted.mul_term(&BigRational::one(), step);
        }
        acc = acc.mul(&ring.one().sub(&shifted));
    }
    acc
}

/// `(base; step)_k` for a monomial base with coefficient 1.
pub fn q_pochhammer_mono(ring: &Ring, base: &Monomial, step: &Monomial, k: u32) -> LaurentPoly {
    q_pochhammer(&ring.term_i64(1, base.clone()), step, k)
}

/// `(s; s)_n` for a monomial `s`.
pub fn qq_pochhammer(ring: &Ring, s: &Monomial, n: u32) -> LaurentPoly {
    q_pochhammer_mono(ring, s, s, n)
}

/// Exact division by `(1 - s^i)`; `None` when a remainder appears.
fn div_binomial(p: &LaurentPoly, s: &Monomial, i: i32) -> Option<LaurentPoly> {
    let minus_one = -BigRational::one();
    p.divide_by_one_plus_term(&minus_one, &s.pow(i))
}

/// Gaussian binomial `[n | k]` in base `s`. Zero for `k > n`.
pub fn q_binomial(ring: &Ring, n: u32, k: u32, s: &Monomial) -> LaurentPoly {
    if k > n {
        return ring.zero();
    }
    let k = k.min(n - k);
    // iteratively: [m|i] = [m-1|i-1] * (1 - s^m) / (1 - s^i), staying exact
    // at every step because each intermediate is itself a binomial.
    let mut acc = ring.one();
    for i in 1..=k {
        acc = acc.mul(&qq_factor(ring, s, (n - k + i) as i32));
        acc = div_binomial(&acc, s, i as i32)
            .expect("Gaussian binomial division is exact by construction");
    }
    acc
}

fn qq_factor(ring: &Ring, s: &Monomial, i: i32) -> LaurentPoly {
    ring.one().sub(&ring.term_i64(1, s.pow(i)))
}

/// Gaussian multinomial `[n | parts]` in base `s`; requires `sum parts = n`.
pub fn q_multinomial(ring: &Ring, n: u32, parts: &[u32], s: &Monomial) -> Result<LaurentPoly> {
    let total: u32 = parts.iter().sum();
    if total != n {
        return Err(Error::Validation(format!(
            "multinomial parts sum {total} != {n}"
        )));
    }
    let mut acc = ring.one();
    let mut rem = n;
    for &p in parts {
        acc = acc.mul(&q_binomial(ring, rem, p, s));
        rem -= p;
    }
    Ok(acc)
}

/// The lattice-sum prefactor `(s;s)_n / prod_i (s;s)_{p_i}` with
/// `sum p_i <= n`. Always a polynomial: it factors as a multinomial times
/// `(s;s)_{n - sum p_i}`. Errors if the division is inexact (which would mean
/// the precondition was violated).
pub fn pochhammer_ratio(ring: &Ring, n: u32, parts: &[u32], s: &Monomial) -> Result<LaurentPoly> {
    let total: u32 = parts.iter().sum();
    if total > n {
        return Err(Error::Validation(format!(
            "pochhammer ratio needs sum parts {total} <= {n}"
        )));
    }
    let mut acc = qq_pochhammer(ring, s, n);
    for &p in parts {
        for i in 1..=p {
            acc = div_binomial(&acc, s, i as i32).ok_or_else(|| {
                Error::Exactness(format!("(s;s)_{n} not divisible by (s;s) parts {parts:?}"))
            })?;
        }
    }
    Ok(acc)
}

/// Truncated expansion of `1 / (s;s)_n` in ascending powers of `s`, exact up
/// to and including `s^max_pow`. Used by series-side routines (quiver series,
/// DT peeling) where denominators cannot be cleared.
pub fn inverse_pochhammer_series(ring: &Ring, s: &Monomial, n: u32, max_pow: u32) -> LaurentPoly {
    // 1/(1-s^j) = 1 + s^j + s^{2j} + ...
    let mut acc = ring.one();
    for j in 1..=n {
        let mut geom = ring.zero();
        let mut t = 0;
        while j * t <= max_pow {
            geom = geom.add(&ring.term_i64(1, s.pow((j * t) as i32)));
            t += 1;
        }
        acc = acc.mul(&geom);
        // drop powers beyond the window after each factor to stay small
        acc = truncate_monomial_power(&acc, s, max_pow);
    }
    acc
}

/// Drop terms whose exponent along the ray `s` exceeds `max_pow` steps.
/// Assumes every exponent in `p` is a multiple of `s` (true for the series
/// helpers, which only ever generate powers of `s`).
fn truncate_monomial_power(p: &LaurentPoly, s: &Monomial, max_pow: u32) -> LaurentPoly {
    let pivot = s
        .exponents2()
        .iter()
        .position(|&e| e != 0)
        .expect("step monomial must be nontrivial");
    let step = s.exponents2()[pivot];
    let ring = p.ring().clone();
    let mut out = ring.zero();
    for (m, c) in p.terms() {
        let k = m.e2(pivot) / step;
        if k >= 0 && (k as u32) <= max_pow {
            out = out.add(&ring.term(c.clone(), m.clone()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rq() -> (Ring, Monomial) {
        let r = Ring::new(["q"]);
        let q = r.mono_var(0, 2);
        (r, q)
    }

    #[test]
    fn qq_pochhammer_three() {
        // (q;q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6
        let (r, q) = rq();
        let p = qq_pochhammer(&r, &q, 3);
        let expect = r
            .one()
            .sub(&r.term_i64(1, q.pow(1)))
            .sub(&r.term_i64(1, q.pow(2)))
            .add(&r.term_i64(1, q.pow(4)))
            .add(&r.term_i64(1, q.pow(5)))
            .sub(&r.term_i64(1, q.pow(6)));
        assert_eq!(p, expect);
    }

    #[test]
    fn gaussian_binomial_4_2() {
        // [4|2] = 1 + q + 2q^2 + q^3 + q^4
        let (r, q) = rq();
        let p = q_binomial(&r, 4, 2, &q);
        let expect = r
            .one()
            .add(&r.term_i64(1, q.pow(1)))
            .add(&r.term_i64(2, q.pow(2)))
            .add(&r.term_i64(1, q.pow(3)))
            .add(&r.term_i64(1, q.pow(4)));
        assert_eq!(p, expect);
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        let (r, q) = rq();
        assert!(q_binomial(&r, 2, 3, &q).is_zero());
        assert!(q_binomial(&r, 0, 0, &q).is_one());
    }

    #[test]
    fn descending_pochhammer_matches_example() {
        // (a^-1 q; q^-1)_1 = 1 - a^-1 q
        let r = Ring::new(["a", "q"]);
        let base = r.mono(&[(0, -2), (1, 2)]);
        let step = r.mono_var(1, -2);
        let p = q_pochhammer_mono(&r, &base, &step, 1);
        assert_eq!(p, r.one().sub(&r.term_i64(1, base)));
    }

    #[test]
    fn pochhammer_ratio_with_levels() {
        // (q;q)_2 / (q;q)_1 = 1 - q^2   (dimension vector touching a level-2 node)
        let (r, q) = rq();
        let p = pochhammer_ratio(&r, 2, &[1], &q).unwrap();
        assert_eq!(p, r.one().sub(&r.term_i64(1, q.pow(2))));
    }

    #[test]
    fn inverse_pochhammer_counts_partitions() {
        // coefficients of 1/(q;q)_3 count partitions into parts <= 3
        let (r, q) = rq();
        let p = inverse_pochhammer_series(&r, &q, 3, 6);
        let partitions = [1i64, 1, 2, 3, 4, 5, 7];
        for (k, &n) in partitions.iter().enumerate() {
            assert_eq!(
                p.coeff(&q.pow(k as i32)),
                num_rational::BigRational::from_integer(n.into()),
                "partition count at q^{k}"
            );
        }
    }

    #[test]
    fn signed_base_pochhammer() {
        // (-q t; q t^2)_1 = 1 + q t
        let r = Ring::new(["q", "t"]);
        let qt = r.mono(&[(0, 2), (1, 2)]);
        let base = r.term_i64(-1, qt.clone());
        let step = r.mono(&[(0, 2), (1, 4)]);
        let p = q_pochhammer(&base, &step, 1);
        assert_eq!(p, r.one().add(&r.term_i64(1, qt)));
    }
}
