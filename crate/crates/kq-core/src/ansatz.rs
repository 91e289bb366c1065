//! Evaluation of special-form data to exact reduced colored polynomials,
//! the alternative multinomial form for 9_42, unreduced variants, and
//! bottom-row (lowest a-power) extraction.
//!
//! Reduced polynomials are honest Laurent polynomials in (a, q). Unreduced
//! ones are not: the unknot factor `a^{-r/2} q^{r/2} (a;q)_r / (q;q)_r` has an
//! uncancelled denominator, so unreduced results are carried as a numerator
//! with an implicit `(q;q)_{den_len}` denominator and compared by
//! cross-multiplication.

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::knotdb::SpecialFormData;
use crate::laurent::{
    pochhammer_ratio, q_binomial, q_pochhammer_mono, qq_pochhammer, LaurentPoly, Ring,
};
use crate::quiver::{degree_lattice_levels, quadratic_form};

/// One colored polynomial. For `reduced` results `den_len` is 0 and `poly`
/// is the polynomial itself; for unreduced results `poly` is the numerator of
/// `poly / (q;q)_{den_len}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredPolynomial {
    pub knot: String,
    pub r: u32,
    pub reduced: bool,
    pub den_len: u32,
    pub poly: LaurentPoly,
}

/// The shared coefficient ring (a, q).
pub fn aq_ring() -> Ring {
    Ring::new(["a", "q"])
}

/// Exact reduced colored polynomial from special-form data: the sum over the
/// level-weighted degree-`r` lattice of
///
/// ```text
/// (q;q)_r / prod_i (q;q)_{d_i}
///   * (-1)^{sum C_ii d_i} a^{sum a_i d_i} q^{sum q_i d_i}
///   * q^{(sum C_ij d_i d_j - sum C_ii d_i)/2}
///   * prod_b (a^-1 q^{1 - u_b.d}; q^-1)_{c_b.d}     (positive blocks)
///   * (a^-1 q^-r; q^-1)_{sum l_i d_i}               (negative factor)
/// ```
pub fn eval_special_form(data: &SpecialFormData, r: u32) -> Result<ColoredPolynomial> {
    data.validate()?;
    let ring = aq_ring();
    let qstep = ring.mono_var(1, 2);
    let qinv = ring.mono_var(1, -2);
    let blocks = data.positive_blocks();
    let mut acc = ring.zero();
    for dv in degree_lattice_levels(&data.n, r) {
        let d = &dv.0;
        let diag: i64 = d
            .iter()
            .enumerate()
            .map(|(i, &di)| data.c[i][i] * di as i64)
            .sum();
        let quad = quadratic_form(&data.c, d);
        let a_lin: i64 = d.iter().zip(&data.a).map(|(&di, &ai)| ai * di as i64).sum();
        let q_lin: i64 = d.iter().zip(&data.q).map(|(&di, &qi)| qi * di as i64).sum();
        let l_len: u32 = d.iter().zip(&data.l).map(|(&di, &li)| li * di).sum();

        let parts: Vec<u32> = d.iter().copied().filter(|&x| x > 0).collect();
        let mut term = pochhammer_ratio(&ring, r, &parts, &qstep)?;
        let sign = if diag % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let q_e2 = 2 * q_lin + quad - diag;
        debug_assert!((quad - diag) % 2 == 0, "diagonal parity");
        let mono = ring.mono(&[
            (0, i32::try_from(2 * a_lin).expect("a exponent fits")),
            (1, i32::try_from(q_e2).expect("q exponent fits")),
        ]);
        term = term.mul_term(&sign, &mono);

        for blk in &blocks {
            let len: u32 = d.iter().zip(&blk.coeff).map(|(&di, &ci)| ci * di).sum();
            if len == 0 {
                continue;
            }
            let shift: i64 = d.iter().zip(&blk.shift).map(|(&di, &ui)| ui as i64 * di as i64).sum();
            let base = ring.mono(&[
                (0, -2),
                (1, i32::try_from(2 * (1 - shift)).expect("shift fits")),
            ]);
            term = term.mul(&q_pochhammer_mono(&ring, &base, &qinv, len));
        }
        if l_len > 0 {
            let base = ring.mono(&[(0, -2), (1, -2 * r as i32)]);
            term = term.mul(&q_pochhammer_mono(&ring, &base, &qinv, l_len));
        }
        acc = acc.add(&term);
    }
    assert!(
        acc.has_integer_exponents() && acc.has_integer_coeffs(),
        "reduced colored polynomial must be an honest integer Laurent polynomial"
    );
    if r == 0 {
        assert!(acc.is_one(), "color zero must give 1");
    }
    Ok(ColoredPolynomial {
        knot: data.name.clone(),
        r,
        reduced: true,
        den_len: 0,
        poly: acc,
    })
}

/// The alternative multinomial form of the 9_42 colored polynomial: the sum
/// over k + 2l = r, 0 <= i <= j <= k, 0 <= alpha <= l of
///
/// ```text
/// (q;q)_r/((q;q)_k (q;q)_l) * (-1)^alpha a^{l+j}
///   * q^{i^2+j^2-2j+i+2l(i+j)} q^{2(l^2-l)} q^{(alpha^2+alpha)/2}
///   * [k|j][j|i][l|alpha]
///   * (a^-1 q; q^-1)_{2l+j-alpha} (a^-1 q^-r; q^-1)_{2l+j}
/// ```
pub fn eval_942_multinomial_form(r: u32) -> Result<ColoredPolynomial> {
    let ring = aq_ring();
    let qstep = ring.mono_var(1, 2);
    let qinv = ring.mono_var(1, -2);
    let mut acc = ring.zero();
    for l in 0..=(r / 2) {
        let k = r - 2 * l;
        let prefactor = pochhammer_ratio(&ring, r, &[k, l], &qstep)?;
        for j in 0..=k {
            for i in 0..=j {
                for alpha in 0..=l {
                    let sign = if alpha % 2 == 0 {
                        BigRational::one()
                    } else {
                        -BigRational::one()
                    };
                    let (i64i, i64j, i64l, i64a) = (i as i64, j as i64, l as i64, alpha as i64);
                    let q_pow = i64i * i64i + i64j * i64j - 2 * i64j + i64i
                        + 2 * i64l * (i64i + i64j)
                        + 2 * (i64l * i64l - i64l);
                    // the alpha part is a half-integer power doubled below
                    let q_e2 = 2 * q_pow + i64a * i64a + i64a;
                    let mono = ring.mono(&[
                        (0, 2 * (i64l + i64j) as i32),
                        (1, i32::try_from(q_e2).expect("q exponent fits")),
                    ]);
                    let mut term = prefactor.mul_term(&sign, &mono);
                    term = term.mul(&q_binomial(&ring, k, j, &qstep));
                    term = term.mul(&q_binomial(&ring, j, i, &qstep));
                    term = term.mul(&q_binomial(&ring, l, alpha, &qstep));
                    let pos_base = ring.mono(&[(0, -2), (1, 2)]);
                    term = term.mul(&q_pochhammer_mono(&ring, &pos_base, &qinv, 2 * l + j - alpha));
                    let neg_base = ring.mono(&[(0, -2), (1, -2 * r as i32)]);
                    term = term.mul(&q_pochhammer_mono(&ring, &neg_base, &qinv, 2 * l + j));
                    acc = acc.add(&term);
                }
            }
        }
    }
    if r == 0 {
        assert!(acc.is_one(), "color zero must give 1");
    }
    Ok(ColoredPolynomial {
        knot: "9_42".into(),
        r,
        reduced: true,
        den_len: 0,
        poly: acc,
    })
}

/// Numerator of the unreduced unknot factor: `a^{-r/2} q^{r/2} (a;q)_r`.
/// The full factor divides this by `(q;q)_r`, which does not cancel.
pub fn unknot_unreduced_numerator(ring: &Ring, r: u32) -> LaurentPoly {
    let qstep = ring.mono_var(1, 2);
    let abase = ring.mono_var(0, 2);
    let poch = q_pochhammer_mono(ring, &abase, &qstep, r);
    let shift = ring.mono(&[(0, -(r as i32)), (1, r as i32)]);
    poch.mul_term(&BigRational::one(), &shift)
}

/// Unreduced colored polynomial as a (numerator, implicit `(q;q)_r`) pair.
pub fn unreduced(p: &ColoredPolynomial) -> Result<ColoredPolynomial> {
    if !p.reduced {
        return Err(Error::Validation("already unreduced".into()));
    }
    let num = p.poly.mul(&unknot_unreduced_numerator(p.poly.ring(), p.r));
    Ok(ColoredPolynomial {
        knot: p.knot.clone(),
        r: p.r,
        reduced: false,
        den_len: p.r,
        poly: num,
    })
}

/// Minimal a-exponent (half units) and its q-coefficient polynomial. For
/// unreduced inputs the coefficient is a numerator over `(q;q)_{den_len}`.
pub fn bottom_row(p: &ColoredPolynomial) -> Result<(i32, LaurentPoly)> {
    if p.poly.is_zero() {
        return Err(Error::Validation("bottom row of the zero polynomial".into()));
    }
    let (a_e2, coeff) = p
        .poly
        .coeffs_of(0)
        .into_iter()
        .next()
        .expect("nonzero polynomial has a lowest a-power");
    Ok((a_e2, coeff))
}

/// Closed form of the reduced 9_42 bottom row: minimal a-exponent (half
/// units) and coefficient. Even r = 2l: `q^{-6l^2+2l} (q^{l+1};q)_l` at
/// a-power -3l; odd r = 2l+1:
/// `q^{-6l^2-6l} (q^{2l-1}+q^{4l+1}) (q;q)_{2l+1}/((q;q)_1 (q;q)_l)` at
/// a-power -3l-1.
pub fn bottom_942_reduced_closed(r: u32) -> Result<(i32, LaurentPoly)> {
    let ring = aq_ring();
    let qstep = ring.mono_var(1, 2);
    let l = r / 2;
    let li = l as i64;
    if r % 2 == 0 {
        let base = ring.mono_var(1, 2 * (l as i32 + 1));
        let poch = q_pochhammer_mono(&ring, &base, &qstep, l);
        let shift = ring.mono_var(1, i32::try_from(2 * (-6 * li * li + 2 * li)).expect("fits"));
        Ok((
            -6 * l as i32,
            poch.mul_term(&BigRational::one(), &shift),
        ))
    } else {
        let ratio = pochhammer_ratio(&ring, 2 * l + 1, &[1, l], &qstep)?;
        let lo = ring.term_i64(1, ring.mono_var(1, i32::try_from(2 * (2 * li - 1)).expect("fits")));
        let hi = ring.term_i64(1, ring.mono_var(1, i32::try_from(2 * (4 * li + 1)).expect("fits")));
        let shift = ring.mono_var(1, i32::try_from(2 * (-6 * li * li - 6 * li)).expect("fits"));
        let coeff = lo.add(&hi).mul(&ratio).mul_term(&BigRational::one(), &shift);
        Ok((-6 * l as i32 - 2, coeff))
    }
}

/// Closed form of the unreduced 9_42 bottom row: minimal a-exponent (half
/// units), numerator, and `(q;q)` denominator part lengths. Even r = 2l:
/// `q^{-6l^2+3l} / (q;q)_l` at a-power -4l; odd r = 2l+1:
/// `q^{-6l^2-6l} (q^{2l-1}+q^{4l+1}) q^{l+1/2} / ((q;q)_1 (q;q)_l)` at
/// a-power -4l-3/2.
pub fn bottom_942_unreduced_closed(r: u32) -> (i32, LaurentPoly, Vec<u32>) {
    let ring = aq_ring();
    let l = r / 2;
    let li = l as i64;
    if r % 2 == 0 {
        let num = ring.term_i64(
            1,
            ring.mono_var(1, i32::try_from(2 * (-6 * li * li + 3 * li)).expect("fits")),
        );
        (-8 * l as i32, num, vec![l])
    } else {
        let lo = ring.term_i64(1, ring.mono_var(1, i32::try_from(2 * (2 * li - 1)).expect("fits")));
        let hi = ring.term_i64(1, ring.mono_var(1, i32::try_from(2 * (4 * li + 1)).expect("fits")));
        // q^{-6l^2-6l} * q^{l+1/2}: half-unit exponent -12l^2-12l+2l+1
        let shift = ring.mono_var(
            1,
            i32::try_from(2 * (-6 * li * li - 6 * li + li) + 1).expect("fits"),
        );
        let num = lo.add(&hi).mul_term(&BigRational::one(), &shift);
        (-8 * l as i32 - 3, num, vec![1, l])
    }
}

/// Compare two (numerator, denominator-part) rational forms in (a, q) by
/// cross-multiplication: `n1/prod(q;q)_{p1} == n2/prod(q;q)_{p2}`.
pub fn rational_forms_equal(
    n1: &LaurentPoly,
    p1: &[u32],
    n2: &LaurentPoly,
    p2: &[u32],
) -> bool {
    let ring = n1.ring().clone();
    let qstep = ring.mono_var(1, 2);
    let mut lhs = n1.clone();
    for &p in p2 {
        lhs = lhs.mul(&qq_pochhammer(&ring, &qstep, p));
    }
    let mut rhs = n2.clone();
    for &p in p1 {
        rhs = rhs.mul(&qq_pochhammer(&ring, &qstep, p));
    }
    lhs == rhs
}

/// Substitute `a -> q^power` (`power` = 1 recovers the trivial sl(1)
/// specialization, 2 the colored Jones one), landing in the ring (q).
pub fn specialize_a(p: &LaurentPoly, power: i32) -> Result<LaurentPoly> {
    let rq = Ring::new(["q"]);
    let image = rq.term_i64(1, rq.mono_var(0, 2 * power));
    p.substitute(&rq, &[(0, image)], None)
}

/// True when the reduced polynomial collapses to 1 under `a -> q`.
pub fn is_sl1_trivial(p: &ColoredPolynomial) -> Result<bool> {
    Ok(specialize_a(&p.poly, 1)?.is_one())
}
