//! JSON form of polynomials:
//! `{"vars": ["a","q"], "terms": [{"e2": [2,-2], "c": "1"}, ...]}`
//!
//! Exponents are serialized in half units exactly as stored, coefficients as
//! decimal strings (`"p/q"` for non-integers) so arbitrary-precision values
//! survive. Terms appear in canonical (ascending lexicographic) order, making
//! the encoding byte-deterministic.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Value};

use super::poly::{LaurentPoly, Monomial, Ring};
use crate::error::{Error, Result};

pub fn coeff_to_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn coeff_from_string(s: &str) -> Result<BigRational> {
    let parse = |t: &str| {
        BigInt::from_str(t).map_err(|e| Error::Json(format!("bad coefficient {t:?}: {e}")))
    };
    match s.split_once('/') {
        Some((n, d)) => Ok(BigRational::new(parse(n)?, parse(d)?)),
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| json!({ "e2": m.exponents2(), "c": coeff_to_string(c) }))
        .collect();
    json!({ "vars": p.ring().var_names(), "terms": terms })
}

pub fn poly_from_json(v: &Value) -> Result<LaurentPoly> {
    let vars = v
        .get("vars")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("polynomial missing \"vars\"".into()))?;
    let names: Vec<String> = vars
        .iter()
        .map(|x| {
            x.as_str()
                .map(str::to_string)
                .ok_or_else(|| Error::Json("variable names must be strings".into()))
        })
        .collect::<Result<_>>()?;
    let ring = Ring::new(names);
    let mut out = ring.zero();
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Json("polynomial missing \"terms\"".into()))?;
    for t in terms {
        let e2v = t
            .get("e2")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Json("term missing \"e2\"".into()))?;
        if e2v.len() != ring.nvars() {
            return Err(Error::Json(format!(
                "exponent vector length {} != {} variables",
                e2v.len(),
                ring.nvars()
            )));
        }
        let pairs: Vec<(usize, i32)> = e2v
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_i64()
                    .map(|e| (i, e as i32))
                    .ok_or_else(|| Error::Json("exponents must be integers".into()))
            })
            .collect::<Result<_>>()?;
        let c = t
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Json("term missing \"c\"".into()))?;
        let mono: Monomial = ring.mono(&pairs);
        out = out.add(&ring.term(coeff_from_string(c)?, mono));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Ring::new(["a", "q"]);
        let p = r
            .term_i64(3, r.mono(&[(0, 2), (1, -1)]))
            .sub(&r.one())
            .add(&r.term(
                BigRational::new(BigInt::from(1), BigInt::from(2)),
                r.mono_var(1, 4),
            ));
        let v = poly_to_json(&p);
        let back = poly_from_json(&v).unwrap();
        assert_eq!(p, back);
        // determinism: same value serializes to the same bytes
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            serde_json::to_string(&poly_to_json(&back)).unwrap()
        );
    }
}
