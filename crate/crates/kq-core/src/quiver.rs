//! True symmetric quivers with per-node specialization data.
//!
//! Two evaluation modes:
//! - [`eval_quiver_form`]: the exact colored-polynomial sum over dimension
//!   vectors of level-weighted degree `r`, with the `(q;q)_r` numerator
//!   multiplied in (always a Laurent polynomial, no truncation).
//! - [`quiver_series`]: the raw multi-variable generating series, whose
//!   coefficients are infinite q-series and therefore demands explicit x- and
//!   q-cutoffs.
//!
//! The sign bookkeeping differs between the two: the exact form carries
//! `(-1)^{sum_i C_ii d_i}` on its own, while the series gets all signs from
//! `(-q^{1/2})^{sum C_ij d_i d_j}` and the per-node images. The faithful
//! bridge between them is produced by [`kq2_specialization`]; see its docs.

use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::laurent::{inverse_pochhammer_series, pochhammer_ratio, LaurentPoly, Ring};

/// Per-node specialization data: sign exponent, level, and the linear a- and
/// q-powers of the node's variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSpec {
    pub s: u8,
    pub n: u32,
    pub a: i64,
    pub q: i64,
}

/// A symmetric quiver together with its node specializations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverData {
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub name: String,
    #[serde(rename = "C")]
    pub c: Vec<Vec<i64>>,
    pub nodes: Vec<NodeSpec>,
}

/// One dimension vector; its x-degree is the level-weighted sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimVector(pub Vec<u32>);

impl DimVector {
    pub fn x_degree(&self, levels: &[u32]) -> u32 {
        self.0.iter().zip(levels).map(|(&d, &n)| d * n).sum()
    }
}

impl QuiverData {
    pub fn m(&self) -> usize {
        self.nodes.len()
    }

    pub fn levels(&self) -> Vec<u32> {
        self.nodes.iter().map(|nd| nd.n).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let m = self.m();
        if self.c.len() != m || self.c.iter().any(|row| row.len() != m) {
            return Err(Error::Validation(format!(
                "quiver matrix must be {m}x{m} to match the node count"
            )));
        }
        for i in 0..m {
            for j in 0..i {
                if self.c[i][j] != self.c[j][i] {
                    return Err(Error::Validation(format!(
                        "quiver matrix is not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        for (i, nd) in self.nodes.iter().enumerate() {
            if nd.s > 1 {
                return Err(Error::Validation(format!(
                    "node {i}: sign exponent must be 0 or 1"
                )));
            }
            if nd.n < 1 {
                return Err(Error::Validation(format!("node {i}: level must be >= 1")));
            }
        }
        Ok(())
    }
}

/// All dimension vectors with level-weighted degree exactly `r`,
/// lexicographically descending (so `d_1` counts down from `floor(r/n_1)`).
pub fn degree_lattice_levels(levels: &[u32], r: u32) -> Vec<DimVector> {
    fn rec(
        levels: &[u32],
        pos: usize,
        remaining: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<DimVector>,
    ) {
        if pos == levels.len() {
            if remaining == 0 {
                out.push(DimVector(cur.clone()));
            }
            return;
        }
        let n = levels[pos];
        debug_assert!(n >= 1, "levels must be positive for a finite lattice");
        let hi = remaining / n;
        for d in (0..=hi).rev() {
            cur.push(d);
            rec(levels, pos + 1, remaining - d * n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(levels, 0, r, &mut Vec::new(), &mut out);
    out
}

/// [`degree_lattice_levels`] on a quiver's own levels.
pub fn degree_lattice(q: &QuiverData, r: u32) -> Vec<DimVector> {
    degree_lattice_levels(&q.levels(), r)
}

/// Quadratic form `sum_{i,j} C_ij d_i d_j` (both orders of each off-diagonal
/// pair counted).
pub fn quadratic_form(c: &[Vec<i64>], d: &[u32]) -> i64 {
    let mut s = 0i64;
    for (i, &di) in d.iter().enumerate() {
        for (j, &dj) in d.iter().enumerate() {
            s += c[i][j] * di as i64 * dj as i64;
        }
    }
    s
}

/// Exact colored polynomial of a quiver at symmetric color `r`: the sum over
/// the degree-`r` lattice of
///
/// ```text
/// (q;q)_r / prod_i (q;q)_{d_i}
///   * (-1)^{sum C_ii d_i} a^{sum a_i d_i} q^{sum q_i d_i}
///   * q^{(sum C_ij d_i d_j - sum C_ii d_i)/2}
/// ```
///
/// The halved exponent is always an integer (diagonal parity), and the
/// prefactor always divides exactly; both are enforced.
pub fn eval_quiver_form(quiver: &QuiverData, r: u32) -> Result<LaurentPoly> {
    quiver.validate()?;
    let ring = Ring::new(["a", "q"]);
    let qstep = ring.mono_var(1, 2);
    let mut acc = ring.zero();
    for dv in degree_lattice(quiver, r) {
        let d = &dv.0;
        let diag: i64 = d
            .iter()
            .enumerate()
            .map(|(i, &di)| quiver.c[i][i] * di as i64)
            .sum();
        let quad = quadratic_form(&quiver.c, d);
        assert!(
            (quad - diag) % 2 == 0,
            "halved quiver exponent must be integral"
        );
        let a_pow: i64 = d
            .iter()
            .zip(&quiver.nodes)
            .map(|(&di, nd)| nd.a * di as i64)
            .sum();
        let q_pow: i64 = d
            .iter()
            .zip(&quiver.nodes)
            .map(|(&di, nd)| nd.q * di as i64)
            .sum::<i64>()
            + (quad - diag) / 2;
        let sign = if diag % 2 == 0 {
            BigRational::one()
        } else {
            -BigRational::one()
        };
        let parts: Vec<u32> = d.iter().copied().filter(|&x| x > 0).collect();
        let ratio = pochhammer_ratio(&ring, r, &parts, &qstep)?;
        let mono = ring.mono(&[(0, 2 * a_pow as i32), (1, 2 * q_pow as i32)]);
        acc = acc.add(&ratio.mul_term(&sign, &mono));
    }
    Ok(acc)
}

/// Truncated multi-variable quiver generating series after substituting
/// per-node images (each a single-term polynomial with positive x-degree).
///
/// Output lives in the ring `(a, q, x)`. Every monomial with x-half-degree
/// <= `max_x2` and q-half-degree <= `max_q2` is exact; everything beyond
/// either cap is dropped.
pub fn quiver_series(
    c: &[Vec<i64>],
    images: &[LaurentPoly],
    max_x2: i32,
    max_q2: i32,
) -> Result<LaurentPoly> {
    let m = images.len();
    if c.len() != m || c.iter().any(|row| row.len() != m) {
        return Err(Error::Validation(
            "series matrix size must match the image count".into(),
        ));
    }
    let ring = series_ring();
    let (q_idx, x_idx) = (1usize, 2usize);
    let mut image_terms = Vec::with_capacity(m);
    for (i, img) in images.iter().enumerate() {
        if img.ring() != &ring {
            return Err(Error::RingMismatch(
                "images must live in the (a, q, x) ring".into(),
            ));
        }
        let mut it = img.terms();
        let (mono, coef) = it
            .next()
            .ok_or_else(|| Error::Validation(format!("image {i} is zero")))?;
        if it.next().is_some() {
            return Err(Error::Validation(format!(
                "image {i} must be a single term"
            )));
        }
        if mono.e2(x_idx) <= 0 {
            return Err(Error::Validation(format!(
                "image {i} needs positive x-degree for a finite truncation"
            )));
        }
        image_terms.push((mono.clone(), coef.clone()));
    }

    let qstep = ring.mono_var(q_idx, 2);
    let levels2: Vec<i32> = image_terms.iter().map(|(mo, _)| mo.e2(x_idx)).collect();
    let weighted = |d: &[u32]| -> i64 {
        d.iter()
            .zip(&levels2)
            .map(|(&di, &l2)| di as i64 * l2 as i64)
            .sum()
    };

    let mut acc = ring.zero();
    let mut d = vec![0u32; m];
    loop {
        if weighted(&d) <= max_x2 as i64 {
            let quad = quadratic_form(c, &d);
            // (-q^{1/2})^{quad}: sign by parity, half-unit q exponent = quad
            let sign = if quad % 2 == 0 {
                BigRational::one()
            } else {
                -BigRational::one()
            };
            let mut shift = ring.term(sign, ring.mono_var(q_idx, i32::try_from(quad).expect("quadratic form fits i32")));
            for (i, &di) in d.iter().enumerate() {
                if di == 0 {
                    continue;
                }
                let (mono, coef) = &image_terms[i];
                let mut cpow = BigRational::one();
                for _ in 0..di {
                    cpow *= coef;
                }
                shift = shift.mul_term(&cpow, &mono.pow(di as i32));
            }
            // shift is a single term; relative q budget after its valuation
            let shift_q2 = shift.min_exp2(q_idx).unwrap_or(0);
            let rel2 = max_q2 - shift_q2;
            if rel2 >= 0 {
                let steps = rel2.div_euclid(2) as u32;
                let mut term = shift;
                for &di in d.iter() {
                    if di == 0 {
                        continue;
                    }
                    let inv = inverse_pochhammer_series(&ring, &qstep, di, steps);
                    term = term.mul(&inv).truncate(&[(q_idx, max_q2)]);
                }
                acc = acc.add(&term.truncate(&[(q_idx, max_q2), (x_idx, max_x2)]));
            }
        }
        // odometer over the downward-closed feasible set
        let mut pos = 0;
        loop {
            if pos == m {
                return Ok(acc);
            }
            d[pos] += 1;
            if weighted(&d) <= max_x2 as i64 {
                break;
            }
            d[pos] = 0;
            pos += 1;
        }
    }
}

/// The ring `(a, q, x)` used by [`quiver_series`].
pub fn series_ring() -> Ring {
    Ring::new(["a", "q", "x"])
}

/// The per-node images under which [`quiver_series`] reproduces
/// [`eval_quiver_form`]: `x_i = a^{a_i} q^{q_i - C_ii/2} x^{n_i}` with
/// coefficient +1.
///
/// The commonly written form `x_i = (-1)^{s_i} a^{a_i} q^{q_i} x^{n_i}`
/// absorbs the half-power shift into the sign convention: with
/// `s_i = C_ii (mod 2)` one has `(-1)^{s_i} q^{-C_ii/2} = (-q^{1/2})^{-C_ii}`,
/// so the two notations name the same substitution once the quadratic
/// `(-q^{1/2})` prefactor is taken into account. We return the explicit
/// monomial so the series matches the exact form coefficient by coefficient.
pub fn kq2_specialization(quiver: &QuiverData) -> Result<Vec<LaurentPoly>> {
    quiver.validate()?;
    let ring = series_ring();
    let mut out = Vec::with_capacity(quiver.m());
    for (i, nd) in quiver.nodes.iter().enumerate() {
        let q2 = 2 * nd.q - quiver.c[i][i];
        let mono = ring.mono(&[
            (0, 2 * nd.a as i32),
            (1, q2 as i32),
            (2, 2 * nd.n as i32),
        ]);
        out.push(ring.term_i64(1, mono));
    }
    Ok(out)
}

pub fn to_json_value(q: &QuiverData) -> Value {
    serde_json::to_value(q).expect("quiver serializes")
}

pub fn from_json_value(v: &Value) -> Result<QuiverData> {
    let q: QuiverData =
        serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
    q.validate()?;
    Ok(q)
}

pub fn save_json(q: &QuiverData, path: &std::path::Path) -> Result<()> {
    let s =
        serde_json::to_string_pretty(&to_json_value(q)).map_err(|e| Error::Json(e.to_string()))?;
    std::fs::write(path, s).map_err(|e| Error::Json(format!("write {path:?}: {e}")))
}

pub fn load_json(path: &std::path::Path) -> Result<QuiverData> {
    let s =
        std::fs::read_to_string(path).map_err(|e| Error::Json(format!("read {path:?}: {e}")))?;
    let v: Value = serde_json::from_str(&s).map_err(|e| Error::Json(e.to_string()))?;
    from_json_value(&v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::qq_pochhammer;

    /// The familiar three-node trefoil quiver.
    fn trefoil_quiver() -> QuiverData {
        QuiverData {
            name: "3_1".into(),
            c: vec![vec![0, 1, 1], vec![1, 2, 2], vec![1, 2, 3]],
            nodes: vec![
                NodeSpec { s: 0, n: 1, a: 1, q: -1 },
                NodeSpec { s: 0, n: 1, a: 1, q: 1 },
                NodeSpec { s: 1, n: 1, a: 2, q: 0 },
            ],
        }
    }

    #[test]
    fn lattice_enumeration_and_order() {
        let pts = degree_lattice_levels(&[1, 1], 1);
        assert_eq!(pts, vec![DimVector(vec![1, 0]), DimVector(vec![0, 1])]);
        let pts = degree_lattice_levels(&[1, 2], 2);
        assert_eq!(pts, vec![DimVector(vec![2, 0]), DimVector(vec![0, 1])]);
        // five-level (1,1,1,2,2) lattice at r=2, against a brute-force count
        let pts = degree_lattice_levels(&[1, 1, 1, 2, 2], 2);
        let mut brute = 0;
        for d1 in 0..=2u32 {
            for d2 in 0..=2u32 {
                for d3 in 0..=2u32 {
                    for d4 in 0..=1u32 {
                        for d5 in 0..=1u32 {
                            if d1 + d2 + d3 + 2 * d4 + 2 * d5 == 2 {
                                brute += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(pts.len(), brute);
        assert_eq!(pts.len(), 8);
        for w in pts.windows(2) {
            assert!(w[0].0 > w[1].0, "descending lex order");
        }
    }

    #[test]
    fn eval_at_zero_is_one() {
        assert!(eval_quiver_form(&trefoil_quiver(), 0).unwrap().is_one());
    }

    #[test]
    fn single_free_node_gives_one() {
        let q = QuiverData {
            name: String::new(),
            c: vec![vec![0]],
            nodes: vec![NodeSpec { s: 0, n: 1, a: 0, q: 0 }],
        };
        assert!(eval_quiver_form(&q, 2).unwrap().is_one());
    }

    #[test]
    fn trefoil_fundamental_polynomial() {
        let p = eval_quiver_form(&trefoil_quiver(), 1).unwrap();
        let ring = p.ring().clone();
        // a q^-1 + a q - a^2
        let want = ring
            .term_i64(1, ring.mono(&[(0, 2), (1, -2)]))
            .add(&ring.term_i64(1, ring.mono(&[(0, 2), (1, 2)])))
            .sub(&ring.term_i64(1, ring.mono(&[(0, 4)])));
        assert_eq!(p, want, "got {p}");
    }

    #[test]
    fn single_node_series_counts_partitions() {
        let ring = series_ring();
        let img = ring.term_i64(1, ring.mono_var(2, 2)); // x_1 = x
        let s = quiver_series(&[vec![0]], &[img], 4, 20).unwrap();
        // coefficient of x^2 q^3: partitions of 3 into at most 2 parts
        let mono = ring.mono(&[(1, 6), (2, 4)]);
        assert_eq!(s.coeff(&mono), BigRational::from_integer(2.into()));
    }

    #[test]
    fn single_loop_series_sign() {
        let ring = series_ring();
        let img = ring.term_i64(1, ring.mono_var(2, 2));
        let s = quiver_series(&[vec![1]], &[img], 2, 10).unwrap();
        // coefficient of x: (-q^{1/2})/(q;q)_1 = -q^{1/2} - q^{3/2} - ...
        assert_eq!(s.coeff(&ring.mono(&[(1, 1), (2, 2)])), -BigRational::one());
        assert_eq!(s.coeff(&ring.mono(&[(1, 3), (2, 2)])), -BigRational::one());
    }

    #[test]
    fn empty_quiver_series_is_one() {
        let s = quiver_series(&[], &[], 4, 4).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn series_bridges_to_exact_form() {
        let q = trefoil_quiver();
        let images = kq2_specialization(&q).unwrap();
        let max_q2 = 40;
        let s = quiver_series(&q.c, &images, 6, max_q2).unwrap();
        let ring3 = series_ring();
        let qstep = ring3.mono_var(1, 2);
        for r in 0..=3u32 {
            let coeff = s
                .coeffs_of(2)
                .into_iter()
                .find(|(e, _)| *e == 2 * r as i32)
                .map(|(_, p)| p)
                .unwrap_or_else(|| ring3.zero());
            let got = coeff
                .mul(&qq_pochhammer(&ring3, &qstep, r))
                .truncate(&[(1, max_q2)]);
            let exact = eval_quiver_form(&q, r).unwrap();
            let want = exact
                .substitute(&ring3, &[], None)
                .unwrap()
                .truncate(&[(1, max_q2)]);
            assert_eq!(got, want, "series/exact mismatch at r={r}");
        }
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let q = trefoil_quiver();
        let v = to_json_value(&q);
        assert!(v.get("C").is_some());
        assert_eq!(v["nodes"][2]["s"], 1);
        let back = from_json_value(&v).unwrap();
        assert_eq!(q, back);

        // schema without a name is accepted
        let raw = serde_json::json!({
            "C": [[0]],
            "nodes": [{"s": 0, "n": 1, "a": 0, "q": 0}]
        });
        let q1 = from_json_value(&raw).unwrap();
        assert_eq!(q1.m(), 1);
    }

    #[test]
    fn validation_rejects_broken_quivers() {
        let mut q = trefoil_quiver();
        q.c[0][1] = 5;
        assert!(q.validate().is_err());
        let mut q = trefoil_quiver();
        q.nodes[0].n = 0;
        assert!(q.validate().is_err());
    }
}
