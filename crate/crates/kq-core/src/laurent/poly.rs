//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Exponents are stored in *half units*: the stored integer is twice the true
//! exponent. Quantum-group conventions make half powers of `a` and `q`
//! unavoidable (unreduced normalizations, `(-q^{1/2})` quadratic prefactors),
//! and doubling keeps every exponent an `i32` with no fractional type.
//!
//! Canonical form: no zero coefficients are stored, and terms live in a
//! `BTreeMap` keyed by exponent vector, so iteration order is ascending
//! lexicographic in the ring's variable order. Two equal polynomials are
//! structurally identical, which the CLI relies on for byte-reproducible
//! output.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered set of variable names shared by all polynomials of one ring.
#[derive(Debug, Clone)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}
impl Eq for Ring {}

impl Ring {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Ring {
        let vars: Vec<String> = names.into_iter().map(Into::into).collect();
        debug_assert!(
            vars.iter().collect::<std::collections::BTreeSet<_>>().len() == vars.len(),
            "duplicate variable name"
        );
        Ring { vars: Arc::new(vars) }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Monomial with a single variable at the given half-unit exponent.
    pub fn mono_var(&self, var: usize, e2: i32) -> Monomial {
        let mut e = vec![0i32; self.nvars()];
        e[var] = e2;
        Monomial { e2: e }
    }

    /// Monomial from (variable, half-unit exponent) pairs.
    pub fn mono(&self, pairs: &[(usize, i32)]) -> Monomial {
        let mut e = vec![0i32; self.nvars()];
        for &(v, e2) in pairs {
            e[v] += e2;
        }
        Monomial { e2: e }
    }

    pub fn unit_mono(&self) -> Monomial {
        Monomial { e2: vec![0; self.nvars()] }
    }

    pub fn zero(&self) -> LaurentPoly {
        LaurentPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn one(&self) -> LaurentPoly {
        self.constant(BigRational::one())
    }

    pub fn constant(&self, c: BigRational) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(self.unit_mono(), c);
        }
        LaurentPoly { ring: self.clone(), terms }
    }

    pub fn constant_i64(&self, c: i64) -> LaurentPoly {
        self.constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// Polynomial consisting of a single term `c * X^m`.
    pub fn term(&self, c: BigRational, m: Monomial) -> LaurentPoly {
        debug_assert_eq!(m.e2.len(), self.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { ring: self.clone(), terms }
    }

    pub fn term_i64(&self, c: i64, m: Monomial) -> LaurentPoly {
        self.term(BigRational::from_integer(BigInt::from(c)), m)
    }

    /// The variable itself as a polynomial (true exponent 1).
    pub fn var(&self, var: usize) -> LaurentPoly {
        self.term_i64(1, self.mono_var(var, 2))
    }
}

/// Exponent vector in half units (stored value = 2 x true exponent).
/// Ordering is lexicographic in ring variable order; this is the canonical
/// term order everywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub(crate) e2: Vec<i32>,
}

impl Monomial {
    pub fn exponents2(&self) -> &[i32] {
        &self.e2
    }

    pub fn e2(&self, var: usize) -> i32 {
        self.e2[var]
    }

    pub fn is_unit(&self) -> bool {
        self.e2.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.e2.len(), other.e2.len());
        Monomial { e2: self.e2.iter().zip(&other.e2).map(|(a, b)| a + b).collect() }
    }

    pub fn inv(&self) -> Monomial {
        Monomial { e2: self.e2.iter().map(|&e| -e).collect() }
    }

    /// Integer power (of the true exponent scale).
    pub fn pow(&self, k: i32) -> Monomial {
        Monomial { e2: self.e2.iter().map(|&e| e * k).collect() }
    }
}

/// Sparse Laurent polynomial over a fixed [`Ring`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ring: Ring,
    terms: BTreeMap<Monomial, BigRational>,
}

impl LaurentPoly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.is_unit() && c.is_one())
                .unwrap_or(false)
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Constant term (coefficient of the unit monomial).
    pub fn constant_coeff(&self) -> BigRational {
        self.coeff(&self.ring.unit_mono())
    }

    fn check_ring(&self, other: &LaurentPoly, op: &str) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{op}: {:?} vs {:?}",
                self.ring.var_names(),
                other.ring.var_names()
            )))
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.ring == other.ring, "ring mismatch in add");
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = big.terms.clone();
        for (m, c) in &small.terms {
            add_term(&mut out, m.clone(), c.clone());
        }
        LaurentPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.ring == other.ring, "ring mismatch in sub");
        let mut out = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut out, m.clone(), -c.clone());
        }
        LaurentPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        debug_assert!(self.ring == other.ring, "ring mismatch in mul");
        if self.is_zero() || other.is_zero() {
            return self.ring.zero();
        }
        // Iterate the smaller factor on the outside: fewer full passes.
        let (outer, inner) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m1, c1) in &outer.terms {
            for (m2, c2) in &inner.terms {
                add_term(&mut out, m1.mul(m2), c1 * c2);
            }
        }
        LaurentPoly { ring: self.ring.clone(), terms: out }
    }

    /// Multiply by a single term `c * X^m` (cheap: exponent shift).
    pub fn mul_term(&self, c: &BigRational, m: &Monomial) -> LaurentPoly {
        if c.is_zero() {
            return self.ring.zero();
        }
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> LaurentPoly {
        self.mul_term(c, &self.ring.unit_mono())
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = self.ring.one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Checked arithmetic entry point: validates the rings match before
    /// dispatching. `op` is one of `+`, `-`, `*`.
    pub fn arith(&self, other: &LaurentPoly, op: &str) -> Result<LaurentPoly> {
        self.check_ring(other, op)?;
        match op {
            "+" => Ok(self.add(other)),
            "-" => Ok(self.sub(other)),
            "*" => Ok(self.mul(other)),
            _ => Err(Error::Validation(format!("unknown operation {op:?}"))),
        }
    }

    /// True if every coefficient is a nonnegative rational.
    pub fn has_nonneg_coeffs(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// True if every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// True if every stored exponent is even, i.e. all true exponents are
    /// integers (no half powers survive).
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|m| m.e2.iter().all(|e| e % 2 == 0))
    }

    /// Smallest stored (half-unit) exponent of `var`, if nonzero terms exist.
    pub fn min_exp2(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.e2[var]).min()
    }

    pub fn max_exp2(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.e2[var]).max()
    }

    /// Sum of all coefficients = evaluation with every variable set to 1.
    pub fn eval_all_ones(&self) -> BigRational {
        let mut s = BigRational::zero();
        for c in self.terms.values() {
            s += c;
        }
        s
    }

    /// Collect the coefficient of each power of `var` as a polynomial in the
    /// remaining variables (pairs are sorted by exponent, ascending).
    pub fn coeffs_of(&self, var: usize) -> Vec<(i32, LaurentPoly)> {
        let mut buckets: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.e2[var];
            let mut rest = m.clone();
            rest.e2[var] = 0;
            let entry = buckets.entry(e).or_insert_with(|| self.ring.zero());
            *entry = entry.add(&self.ring.term(c.clone(), rest));
        }
        buckets.into_iter().collect()
    }

    /// Drop every term whose half-unit exponent of some capped variable
    /// exceeds the cap.
    pub fn truncate(&self, caps: &[(usize, i32)]) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| caps.iter().all(|&(v, cap)| m.e2[v] <= cap))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drop every term whose half-unit exponents over `vars` sum to more
    /// than `cap2`. Complements [`LaurentPoly::truncate`] when a *total*
    /// degree bound over several variables is needed.
    pub fn truncate_total(&self, vars: &[usize], cap2: i32) -> LaurentPoly {
        LaurentPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| vars.iter().map(|&v| m.e2[v] as i64).sum::<i64>() <= cap2 as i64)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Substitute variables by polynomials in a (possibly different) target
    /// ring. `images` maps source variable indices to their replacement;
    /// unmapped variables must exist by name in the target ring. Optional
    /// `caps` truncate the result per target variable (half units) after
    /// every partial product, which keeps series substitutions bounded.
    ///
    /// Half-integer source exponents are only legal when the image is a
    /// monomial with coefficient 1 whose exponents stay integral after
    /// scaling; anything else is an [`Error::InvalidExponent`].
    pub fn substitute(
        &self,
        target: &Ring,
        images: &[(usize, LaurentPoly)],
        caps: Option<&[(usize, i32)]>,
    ) -> Result<LaurentPoly> {
        let n = self.ring.nvars();
        let mut image_of: Vec<Option<&LaurentPoly>> = vec![None; n];
        for (v, p) in images {
            if *v >= n {
                return Err(Error::Validation(format!("substitute: no variable #{v}")));
            }
            if p.ring != *target {
                return Err(Error::RingMismatch("substitute image not in target ring".into()));
            }
            image_of[*v] = Some(p);
        }
        // Identity mapping for untouched variables, matched by name.
        let mut carry: Vec<Option<usize>> = vec![None; n];
        for v in 0..n {
            if image_of[v].is_none() {
                match target.var_index(&self.ring.var_names()[v]) {
                    Some(t) => carry[v] = Some(t),
                    None => {
                        return Err(Error::RingMismatch(format!(
                            "substitute: variable {} absent from target ring",
                            self.ring.var_names()[v]
                        )))
                    }
                }
            }
        }

        let mut pow_cache: BTreeMap<(usize, i32), LaurentPoly> = BTreeMap::new();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for v in 0..n {
                let e2 = m.e2[v];
                if e2 == 0 {
                    continue;
                }
                if let Some(t) = carry[v] {
                    term = term.mul_term(&BigRational::one(), &target.mono_var(t, e2));
                    continue;
                }
                let img = image_of[v].unwrap();
                if img.nterms() == 1 {
                    let (im, ic) = img.terms.iter().next().unwrap();
                    // exponent arithmetic: new stored exponent = e2 * im.e2 / 2
                    let mut scaled = Vec::with_capacity(im.e2.len());
                    for &f2 in &im.e2 {
                        let prod = (e2 as i64) * (f2 as i64);
                        if prod % 2 != 0 {
                            return Err(Error::InvalidExponent(format!(
                                "substitute: half power of {} times half power in image",
                                self.ring.var_names()[v]
                            )));
                        }
                        let s = prod / 2;
                        if s < i32::MIN as i64 || s > i32::MAX as i64 {
                            return Err(Error::InvalidExponent("exponent overflow".into()));
                        }
                        scaled.push(s as i32);
                    }
                    let cf = if ic.is_one() {
                        BigRational::one()
                    } else if e2 % 2 == 0 {
                        rational_pow(ic, e2 / 2)?
                    } else {
                        return Err(Error::InvalidExponent(format!(
                            "substitute: half power of coefficient {ic} is undefined"
                        )));
                    };
                    term = term.mul_term(&cf, &Monomial { e2: scaled });
                } else {
                    if e2 % 2 != 0 {
                        return Err(Error::InvalidExponent(
                            "substitute: half power of a non-monomial image".into(),
                        ));
                    }
                    let e = e2 / 2;
                    if e < 0 {
                        return Err(Error::InvalidExponent(
                            "substitute: negative power of a non-monomial image".into(),
                        ));
                    }
                    let key = (v, e);
                    let powed = match pow_cache.get(&key) {
                        Some(p) => p.clone(),
                        None => {
                            let mut acc = target.one();
                            for _ in 0..e {
                                acc = acc.mul(img);
                                if let Some(caps) = caps {
                                    acc = acc.truncate(caps);
                                }
                            }
                            pow_cache.insert(key, acc.clone());
                            acc
                        }
                    };
                    term = term.mul(&powed);
                }
                if let Some(caps) = caps {
                    term = term.truncate(caps);
                }
            }
            out = out.add(&term);
        }
        if let Some(caps) = caps {
            out = out.truncate(caps);
        }
        Ok(out)
    }

    /// Exact division by `1 + c * X^w`, or `None` when the division leaves a
    /// remainder. Terms are grouped by residue class of their exponent vector
    /// modulo the lattice line through `w`; within each class the quotient is
    /// forced by ascending recursion, which makes the routine deterministic
    /// and linear in the number of terms.
    pub fn divide_by_one_plus_term(&self, c: &BigRational, w: &Monomial) -> Option<LaurentPoly> {
        assert!(!c.is_zero(), "divisor term must be nonzero");
        let pivot = w.e2.iter().position(|&e| e != 0)?;
        let step = w.e2[pivot];

        // residue class representative: shift by the integer multiple of w
        // that lands the pivot exponent in [0, |step|).
        let mut classes: BTreeMap<Vec<i32>, BTreeMap<i32, BigRational>> = BTreeMap::new();
        for (m, coeff) in &self.terms {
            let k = m.e2[pivot].div_euclid(step.abs()) * step.signum();
            let base: Vec<i32> = m
                .e2
                .iter()
                .zip(&w.e2)
                .map(|(&e, &we)| e - k * we)
                .collect();
            classes.entry(base).or_default().insert(k, coeff.clone());
        }

        let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (base, slots) in classes {
            let lo = *slots.keys().next().unwrap();
            let hi = *slots.keys().last().unwrap();
            // (1 + c X^w) * sum_{j=lo..hi-1} y_j X^{base + j w} must equal the
            // class contents; ascending elimination determines every y_j.
            let mut prev = BigRational::zero();
            for j in lo..hi {
                let a_j = slots.get(&j).cloned().unwrap_or_else(BigRational::zero);
                let y_j = a_j - c * &prev;
                if !y_j.is_zero() {
                    let mono = Monomial {
                        e2: base.iter().zip(&w.e2).map(|(&b, &we)| b + j * we).collect(),
                    };
                    out.insert(mono, y_j.clone());
                }
                prev = y_j;
            }
            let a_hi = slots.get(&hi).cloned().unwrap_or_else(BigRational::zero);
            if a_hi != c * &prev {
                return None; // remainder in this class
            }
        }
        Some(LaurentPoly { ring: self.ring.clone(), terms: out })
    }

    /// Exact division by `1 + X^w` (spec form of the residue-class division).
    pub fn divide_by_one_plus_monomial(&self, w: &Monomial) -> Option<LaurentPoly> {
        self.divide_by_one_plus_term(&BigRational::one(), w)
    }

    /// Render with `^` powers in true (possibly half-integer) exponents.
    /// Used by the CLI pretty printer and test diagnostics.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = self.ring.var_names();
        let mut parts: Vec<String> = Vec::new();
        for (m, c) in &self.terms {
            let mut factors: Vec<String> = Vec::new();
            for (v, &e2) in m.e2.iter().enumerate() {
                if e2 == 0 {
                    continue;
                }
                let e = if e2 % 2 == 0 {
                    format!("{}", e2 / 2)
                } else {
                    format!("{}/2", e2)
                };
                if e == "1" {
                    factors.push(names[v].clone());
                } else {
                    factors.push(format!("{}^{}", names[v], e));
                }
            }
            let mono = factors.join("*");
            let piece = if mono.is_empty() {
                format!("{c}")
            } else if c.is_one() {
                mono
            } else if (-c.clone()).is_one() {
                format!("-{mono}")
            } else {
                format!("{c}*{mono}")
            };
            parts.push(piece);
        }
        let mut s = parts.join(" + ");
        s = s.replace("+ -", "- ");
        s
    }
}

/// `c^e` for integer `e` (negative allowed when `c != 0`).
fn rational_pow(c: &BigRational, e: i32) -> Result<BigRational> {
    if c.is_zero() && e < 0 {
        return Err(Error::InvalidExponent("negative power of zero".into()));
    }
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= c;
    }
    if e < 0 {
        acc = acc.recip();
    }
    Ok(acc)
}

fn add_term(map: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_aq() -> Ring {
        Ring::new(["a", "q"])
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let r = ring_aq();
        let p = r.var(0).sub(&r.var(0));
        assert!(p.is_zero());
        assert_eq!(p.nterms(), 0);
    }

    #[test]
    fn term_order_is_ascending_lex() {
        let r = ring_aq();
        // a^-1 + q + a  ->  a^-1 < q (a-exp 0) < a
        let p = r
            .term_i64(1, r.mono_var(0, -2))
            .add(&r.var(1))
            .add(&r.var(0));
        let exps: Vec<Vec<i32>> = p.terms().map(|(m, _)| m.e2.clone()).collect();
        assert_eq!(exps, vec![vec![-2, 0], vec![0, 2], vec![2, 0]]);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r1 = ring_aq();
        let r2 = Ring::new(["x", "q"]);
        assert!(r1.one().arith(&r2.one(), "+").is_err());
    }

    #[test]
    fn division_by_one_plus_monomial_round_trips() {
        let r = ring_aq();
        let m = r.mono(&[(0, 2), (1, -4)]); // a q^-2
        let y = r.one().add(&r.var(1)).add(&r.term_i64(3, r.mono_var(0, 4)));
        let divisor = r.one().add(&r.term_i64(1, m.clone()));
        let p = y.mul(&divisor);
        let q = p.divide_by_one_plus_monomial(&m).expect("exact");
        assert_eq!(q, y);
    }

    #[test]
    fn division_detects_remainder() {
        // 1 + m + m^3 is not divisible by 1 + m.
        let r = ring_aq();
        let m = r.mono_var(1, 2);
        let p = r
            .one()
            .add(&r.term_i64(1, m.clone()))
            .add(&r.term_i64(1, m.pow(3)));
        assert!(p.divide_by_one_plus_monomial(&m).is_none());
    }

    #[test]
    fn substitute_a_to_q() {
        // trefoil sl(1) check shape: a q^-1 + a q - a^2 |_{a=q} = 1
        let r = ring_aq();
        let p = r
            .term_i64(1, r.mono(&[(0, 2), (1, -2)]))
            .add(&r.term_i64(1, r.mono(&[(0, 2), (1, 2)])))
            .sub(&r.term_i64(1, r.mono_var(0, 4)));
        let rq = Ring::new(["q"]);
        let img = rq.var(0);
        let s = p.substitute(&rq, &[(0, img)], None).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn substitute_sign_constant() {
        // (1 + q t) |_{t=-1} = 1 - q
        let r = Ring::new(["q", "t"]);
        let p = r.one().add(&r.term_i64(1, r.mono(&[(0, 2), (1, 2)])));
        let rq = Ring::new(["q"]);
        let s = p
            .substitute(&rq, &[(1, rq.constant_i64(-1))], None)
            .unwrap();
        assert_eq!(s, rq.one().sub(&rq.var(0)));
    }

    #[test]
    fn half_exponent_semantics() {
        // q^{1/2} * q^{1/2} = q
        let r = Ring::new(["q"]);
        let h = r.term_i64(1, r.mono_var(0, 1));
        assert_eq!(h.mul(&h), r.var(0));
    }
}
