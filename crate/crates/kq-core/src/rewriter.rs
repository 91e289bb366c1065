//! Mechanical rewriting of special-form data into true symmetric quivers.
//!
//! The special form carries two families of trailing Pochhammer factors
//! (the "positive" blocks with base `a^-1 q^(1-shift)` and the "negative"
//! factor with base `a^-1 q^-r`). They are removed symbolically:
//!
//! - each factor telescopes across the source nodes in a chosen order,
//! - a factor of length `m*d_i` splits into `m` unit layers of length `d_i`,
//! - every unit layer is expanded with the q-binomial identity, which
//!   splits its node into an x-branch (picking up `(-1)^x a^-x q^...`) and
//!   a y-branch (the remainder),
//! - the binomial weights merge with the `1/(q;q)_d` node weights, so the
//!   sum becomes a quiver sum over one dimension variable per leaf.
//!
//! All bookkeeping stays linear (sign, a-power, q-power) or quadratic
//! (the new adjacency matrix) in the leaf dimensions, so the output is
//! again exact quiver data. Different telescoping orders give genuinely
//! different but equivalent quivers; [`enumerate_orderings`] explores that
//! non-uniqueness and [`rewrite_verified`] smoke-tests any single plan
//! against the source evaluation.

use crate::ansatz::eval_special_form;
use crate::error::{Error, Result};
use crate::knotdb::SpecialFormData;
use crate::quiver::{eval_quiver_form, NodeSpec, QuiverData};

/// Safety cap on the number of telescoping orders enumerated at once.
pub const DEFAULT_ORDERING_CAP: usize = 720;

/// A choice of rewriting policy: the node order used when telescoping the
/// trailing factors, and whether positive-block layers are expanded before
/// negative-factor layers inside each node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewritePlan {
    /// Permutation of `1..=k` (1-based source node indices).
    pub ordering: Vec<usize>,
    /// Expand positive-block layers before negative layers (the default).
    pub positive_first: bool,
}

impl RewritePlan {
    /// The default plan: source order, positive layers first.
    pub fn source_order(k: usize) -> Self {
        RewritePlan { ordering: (1..=k).collect(), positive_first: true }
    }

    /// A plan with an explicit telescoping order (1-based indices).
    pub fn with_ordering(ordering: Vec<usize>) -> Self {
        RewritePlan { ordering, positive_first: true }
    }

    /// Stable textual identifier for reports and JSON output.
    pub fn policy_id(&self) -> String {
        let ord: Vec<String> = self.ordering.iter().map(|i| i.to_string()).collect();
        let side = if self.positive_first { "positive-first" } else { "negative-first" };
        format!("ordering={};{}", ord.join(","), side)
    }

    fn validate(&self, k: usize) -> Result<()> {
        if self.ordering.len() != k {
            return Err(Error::Validation(format!(
                "plan ordering has {} entries for {} nodes",
                self.ordering.len(),
                k
            )));
        }
        let mut seen = vec![false; k];
        for &i in &self.ordering {
            if i == 0 || i > k || seen[i - 1] {
                return Err(Error::Validation(format!(
                    "plan ordering {:?} is not a permutation of 1..={}",
                    self.ordering, k
                )));
            }
            seen[i - 1] = true;
        }
        Ok(())
    }
}

/// Where an output node came from: its source node (1-based) and the
/// branch string of the binomial expansions ('x' = expanded side,
/// 'y' = remainder side), one character per layer in expansion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeProvenance {
    pub source: usize,
    pub branch: String,
}

/// A rewritten quiver together with its expansion bookkeeping.
#[derive(Debug, Clone)]
pub struct RewriteResult {
    pub quiver: QuiverData,
    pub provenance: Vec<NodeProvenance>,
    pub predicted_size: usize,
    /// Echo of the plan that produced this quiver.
    pub policy: String,
}

/// Number of output nodes the expansion will produce: each source node
/// splits once per trailing-factor layer, so node i contributes
/// 2^(l_i + total positive length coefficient at i) leaves.
pub fn predicted_size(data: &SpecialFormData) -> usize {
    let blocks = data.positive_blocks();
    (0..data.k())
        .map(|i| {
            let layers: u32 = data.l[i] + blocks.iter().map(|b| b.coeff[i]).sum::<u32>();
            1usize << layers
        })
        .sum()
}

/// Default smoke-test bound: r <= 4, lowered to 3 for large inputs.
pub fn default_r_check(data: &SpecialFormData) -> u32 {
    if data.k() >= 5 || predicted_size(data) > 20 {
        3
    } else {
        4
    }
}

/// One unit layer to expand at a given source node: the q-exponent of its
/// base is `g0 + sum_p gamma[p] * d_p` (and the a-exponent is always -1).
struct Atom {
    g0: i64,
    gamma: Vec<i64>,
}

/// Build the layer list of source node `i` under `plan`. Telescoping in
/// plan order means every factor reaching node i has already consumed the
/// full lengths of the plan-earlier nodes, and layer `alpha` at node i sits
/// behind `alpha` copies of d_i of the same factor; both appear as negative
/// shifts in the base exponent. Block shifts and the color r = sum n_p d_p
/// of the negative base enter the same way.
fn atoms_for_node(data: &SpecialFormData, plan: &RewritePlan, i: usize) -> Vec<Atom> {
    let k = data.k();
    let pos = |p: usize| plan.ordering.iter().position(|&x| x == p + 1).unwrap();
    let before = |p: usize| pos(p) < pos(i);

    let mut positive = Vec::new();
    for b in &data.positive_blocks() {
        for alpha in 0..b.coeff[i] {
            let mut gamma = vec![0i64; k];
            for p in 0..k {
                gamma[p] -= b.shift[p] as i64;
                if before(p) {
                    gamma[p] -= b.coeff[p] as i64;
                }
            }
            gamma[i] -= alpha as i64;
            positive.push(Atom { g0: 1, gamma });
        }
    }

    let mut negative = Vec::new();
    for alpha in 0..data.l[i] {
        let mut gamma = vec![0i64; k];
        for p in 0..k {
            gamma[p] -= data.n[p] as i64;
            if before(p) {
                gamma[p] -= data.l[p] as i64;
            }
        }
        gamma[i] -= alpha as i64;
        negative.push(Atom { g0: 0, gamma });
    }

    if plan.positive_first {
        positive.extend(negative);
        positive
    } else {
        negative.extend(positive);
        negative
    }
}

/// Transform special-form data into an equivalent true quiver.
///
/// Purely symbolic: the output's quiver evaluation reproduces the source
/// evaluation for every color r. Use [`rewrite_verified`] to additionally
/// smoke-test the equality up to a finite bound.
pub fn rewrite(data: &SpecialFormData, plan: &RewritePlan) -> Result<RewriteResult> {
    data.validate()?;
    let k = data.k();
    plan.validate(k)?;

    // Enumerate leaves: per source node, one leaf per branch string, with
    // the x-side of every split listed before the y-side.
    let node_atoms: Vec<Vec<Atom>> = (0..k).map(|i| atoms_for_node(data, plan, i)).collect();
    let mut leaf_parent = Vec::new();
    let mut leaf_bits = Vec::new(); // bit j = 1 when leaf took the y-side of layer j
    let mut leaf_layers = Vec::new();
    for (i, atoms) in node_atoms.iter().enumerate() {
        let nl = atoms.len();
        for t in 0..(1usize << nl) {
            leaf_parent.push(i);
            leaf_bits.push(t);
            leaf_layers.push(nl);
        }
    }
    let m = leaf_parent.len();
    debug_assert_eq!(m, predicted_size(data), "leaf count must match the size law");

    // Accumulators: sign exponent and a-power are linear in the leaf dims;
    // the q-power is tracked doubled, split into a linear part and an
    // ordered-pair quadratic part `sum_{u,v} acc[u][v] e_u e_v`.
    let mut sign_lin = vec![0i64; m];
    let mut a_lin = vec![0i64; m];
    let mut q2_lin = vec![0i64; m];
    let mut quad = vec![vec![0i64; m]; m];

    for u in 0..m {
        let p = leaf_parent[u];
        sign_lin[u] += data.c[p][p];
        a_lin[u] += data.a[p];
        q2_lin[u] += 2 * data.q[p] - data.c[p][p];
        for v in 0..m {
            quad[u][v] += data.c[p][leaf_parent[v]];
        }
    }

    // Expand layer j of node i: x-side leaves are those with bit j clear.
    // The expansion adds (doubled) q-exponent
    //   2*(g0 + sum_p gamma_p d_p) * x + x - x^2 - 2*x*y - 2*(earlier in
    //   segment order)*x
    // where x runs over the x-side leaf dims; rewritten per leaf and per
    // ordered leaf pair below.
    for i in 0..k {
        let atoms = &node_atoms[i];
        let leaves: Vec<usize> = (0..m).filter(|&u| leaf_parent[u] == i).collect();
        for (j, atom) in atoms.iter().enumerate() {
            let x_side =
                |u: usize| -> bool { (leaf_bits[u] >> (leaf_layers[u] - 1 - j)) & 1 == 0 };
            for &u in &leaves {
                if !x_side(u) {
                    continue;
                }
                sign_lin[u] += 1;
                a_lin[u] -= 1;
                q2_lin[u] += 2 * atom.g0 + 1;
                quad[u][u] -= 1;
                // Base shift: += 2 * gamma_p(w) * e_w e_u over every leaf w.
                for w in 0..m {
                    let g = atom.gamma[leaf_parent[w]];
                    if g != 0 {
                        quad[w][u] += 2 * g;
                    }
                }
            }
            // Split and telescoping cross terms inside node i: for leaves
            // u < v, the coefficient -2 applies when the pair's deciding
            // leaf (u if both sit in the same pre-split segment, otherwise
            // the later leaf v) takes the x-side of this layer.
            for (s, &u) in leaves.iter().enumerate() {
                for &v in &leaves[s + 1..] {
                    let shift = leaf_layers[u] - j;
                    let same_segment = (leaf_bits[u] >> shift) == (leaf_bits[v] >> shift);
                    let decider = if same_segment { u } else { v };
                    if x_side(decider) {
                        quad[u][v] -= 2;
                    }
                }
            }
        }
    }

    // Read off the quiver data. The homogeneous normal form fixes the new
    // adjacency matrix as the symmetrization of the ordered-pair table and
    // pins sign, a-, and q-linear data per leaf; the parity conditions
    // below hold identically by construction.
    let mut c = vec![vec![0i64; m]; m];
    for u in 0..m {
        c[u][u] = quad[u][u];
        for v in (u + 1)..m {
            let s = quad[u][v] + quad[v][u];
            if s % 2 != 0 {
                return Err(Error::Rewrite(format!(
                    "odd cross coefficient between leaves {u} and {v}"
                )));
            }
            c[u][v] = s / 2;
            c[v][u] = s / 2;
        }
    }
    let mut nodes = Vec::with_capacity(m);
    for u in 0..m {
        if (sign_lin[u] - c[u][u]) % 2 != 0 {
            return Err(Error::Rewrite(format!(
                "sign of leaf {u} is not carried by its diagonal entry"
            )));
        }
        if (q2_lin[u] + c[u][u]) % 2 != 0 {
            return Err(Error::Rewrite(format!("half-integral q-power at leaf {u}")));
        }
        nodes.push(NodeSpec {
            s: c[u][u].rem_euclid(2) as u8,
            n: data.n[leaf_parent[u]],
            a: a_lin[u],
            q: (q2_lin[u] + c[u][u]) / 2,
        });
    }

    let provenance: Vec<NodeProvenance> = (0..m)
        .map(|u| {
            let nl = leaf_layers[u];
            let branch: String = (0..nl)
                .map(|j| if (leaf_bits[u] >> (nl - 1 - j)) & 1 == 0 { 'x' } else { 'y' })
                .collect();
            NodeProvenance { source: leaf_parent[u] + 1, branch }
        })
        .collect();

    let quiver = QuiverData { name: data.name.clone(), c, nodes };
    quiver.validate()?;
    Ok(RewriteResult { quiver, provenance, predicted_size: m, policy: plan.policy_id() })
}

/// [`rewrite`], then check the quiver evaluation against the source
/// evaluation for all colors `0..=r_check`; the first mismatch aborts.
pub fn rewrite_verified(
    data: &SpecialFormData,
    plan: &RewritePlan,
    r_check: u32,
) -> Result<RewriteResult> {
    let result = rewrite(data, plan)?;
    for r in 0..=r_check {
        let from_quiver = eval_quiver_form(&result.quiver, r)?;
        let from_source = eval_special_form(data, r)?;
        if from_quiver != from_source.poly {
            return Err(Error::Rewrite(format!(
                "quiver evaluation differs from the source at r={} under plan {}",
                r,
                plan.policy_id()
            )));
        }
    }
    Ok(result)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let mut used = vec![false; k];
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 1..=k {
            if !used[i - 1] {
                used[i - 1] = true;
                cur.push(i);
                go(k, cur, used, out);
                cur.pop();
                used[i - 1] = false;
            }
        }
    }
    go(k, &mut cur, &mut used, &mut out);
    out
}

/// All quivers produced by the *ordering* freedom, each verified up to
/// `r_check` and deduplicated by canonical serialization of the output
/// data. Plans are enumerated in lexicographic order (positive-first), so
/// the result is deterministic.
pub fn enumerate_orderings(
    data: &SpecialFormData,
    r_check: u32,
) -> Result<Vec<(RewritePlan, QuiverData)>> {
    enumerate_orderings_capped(data, r_check, DEFAULT_ORDERING_CAP)
}

/// [`enumerate_orderings`] with an explicit cap on k!.
pub fn enumerate_orderings_capped(
    data: &SpecialFormData,
    r_check: u32,
    cap: usize,
) -> Result<Vec<(RewritePlan, QuiverData)>> {
    let k = data.k();
    let mut count: usize = 1;
    for i in 2..=k {
        count = count.saturating_mul(i);
        if count > cap {
            return Err(Error::CapExceeded(format!(
                "{k}! orderings exceed the cap of {cap}"
            )));
        }
    }

    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for ordering in permutations(k) {
        let plan = RewritePlan::with_ordering(ordering);
        let result = rewrite_verified(data, &plan, r_check)?;
        let key = canonical_key(&result.quiver);
        if seen.insert(key) {
            out.push((plan, result.quiver));
        }
    }
    Ok(out)
}

fn canonical_key(q: &QuiverData) -> String {
    let nodes: Vec<(u8, u32, i64, i64)> = q.nodes.iter().map(|n| (n.s, n.n, n.a, n.q)).collect();
    format!("{:?}|{:?}", q.c, nodes)
}

// ---------------------------------------------------------------------------
// tests
// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knotdb::get_knot;

    fn diag(c: &[Vec<i64>]) -> Vec<i64> {
        (0..c.len()).map(|i| c[i][i]).collect()
    }

    #[test]
    fn trefoil_rewrites_to_the_three_node_quiver() {
        let data = get_knot("3_1").unwrap();
        let plan = RewritePlan::source_order(data.k());
        let res = rewrite_verified(&data, &plan, 4).unwrap();
        assert_eq!(res.predicted_size, 3);
        assert_eq!(
            res.quiver.c,
            vec![vec![0, 1, 1], vec![1, 2, 2], vec![1, 2, 3]],
            "trefoil quiver matrix"
        );
        let a: Vec<i64> = res.quiver.nodes.iter().map(|n| n.a).collect();
        let q: Vec<i64> = res.quiver.nodes.iter().map(|n| n.q).collect();
        let s: Vec<u8> = res.quiver.nodes.iter().map(|n| n.s).collect();
        assert_eq!(a, vec![1, 1, 2]);
        assert_eq!(q, vec![-1, 1, 0]);
        assert_eq!(s, vec![0, 0, 1]);
        assert!(res.quiver.nodes.iter().all(|n| n.n == 1));
        let branches: Vec<(usize, &str)> =
            res.provenance.iter().map(|p| (p.source, p.branch.as_str())).collect();
        assert_eq!(branches, vec![(1, ""), (2, "x"), (2, "y")]);
    }

    #[test]
    fn cinquefoil_orderings_reproduce_both_printed_matrices() {
        let data = get_knot("5_1").unwrap();

        let c1 = vec![
            vec![0, 1, 1, 3, 3],
            vec![1, 2, 2, 3, 4],
            vec![1, 2, 3, 3, 4],
            vec![3, 3, 3, 4, 4],
            vec![3, 4, 4, 4, 5],
        ];
        let c2 = vec![
            vec![0, 1, 1, 3, 3],
            vec![1, 2, 2, 3, 3],
            vec![1, 2, 3, 4, 4],
            vec![3, 3, 4, 4, 4],
            vec![3, 3, 4, 4, 5],
        ];

        let res1 =
            rewrite_verified(&data, &RewritePlan::with_ordering(vec![1, 2, 3]), 4).unwrap();
        assert_eq!(res1.quiver.c, c1, "ordering (1,2,3)");
        let a: Vec<i64> = res1.quiver.nodes.iter().map(|n| n.a).collect();
        let q: Vec<i64> = res1.quiver.nodes.iter().map(|n| n.q).collect();
        let s: Vec<u8> = res1.quiver.nodes.iter().map(|n| n.s).collect();
        assert_eq!(a, vec![2, 2, 3, 2, 3]);
        assert_eq!(q, vec![-2, 0, -1, 2, 1]);
        assert_eq!(s, vec![0, 0, 1, 0, 1]);

        let res2 =
            rewrite_verified(&data, &RewritePlan::with_ordering(vec![1, 3, 2]), 4).unwrap();
        assert_eq!(res2.quiver.c, c2, "ordering (1,3,2)");
        let a2: Vec<i64> = res2.quiver.nodes.iter().map(|n| n.a).collect();
        let q2: Vec<i64> = res2.quiver.nodes.iter().map(|n| n.q).collect();
        assert_eq!(a2, a, "both orderings share the linear a data");
        assert_eq!(q2, q, "both orderings share the linear q data");
    }

    #[test]
    fn size_law_holds_for_every_registered_knot() {
        for name in crate::knotdb::knot_names() {
            let data = get_knot(&name).unwrap();
            let plan = RewritePlan::source_order(data.k());
            let res = rewrite(&data, &plan).unwrap();
            assert_eq!(res.quiver.m(), predicted_size(&data), "{name} size law");
            for (node, prov) in res.quiver.nodes.iter().zip(&res.provenance) {
                assert_eq!(
                    node.n,
                    data.n[prov.source - 1],
                    "{name}: node level must match its source"
                );
            }
        }
    }

    #[test]
    fn nine_forty_two_has_thirty_three_nodes_with_the_level_profile() {
        let data = get_knot("9_42").unwrap();
        assert_eq!(predicted_size(&data), 33);
        let res = rewrite(&data, &RewritePlan::source_order(data.k())).unwrap();
        assert_eq!(res.quiver.m(), 33);
        let level1 = res.quiver.nodes.iter().filter(|n| n.n == 1).count();
        let level2 = res.quiver.nodes.iter().filter(|n| n.n == 2).count();
        assert_eq!((level1, level2), (9, 24));
    }

    #[test]
    fn rewrite_is_sound_on_small_knots() {
        for name in ["3_1", "4_1", "5_1", "5_2", "6_1"] {
            let data = get_knot(name).unwrap();
            let plan = RewritePlan::source_order(data.k());
            rewrite_verified(&data, &plan, 3).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn nine_forty_two_node_data_matches_the_tabulated_vectors() {
        // Known linear a- and q-degrees for the 33 nodes, level-1 block
        // first. The rewrite fixes one particular node order, so only the
        // multiset of (level, a, q) triples is compared; series equality is
        // the stronger check and lives in the soundness tests.
        let a_vec: [i64; 33] = [
            0, 1, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, -1, 0, -1, -1, -2, 0, -1, -1, -2, -1, -2, -2,
            -3, 1, 0, 0, -1, 0, -1, -1, -2,
        ];
        let q_vec: [i64; 33] = [
            0, -1, 0, -2, -1, 1, 2, 0, 1, 0, 1, 0, 1, -2, -1, -2, -1, -3, -2, -3, -2, -5, -4, -5,
            -4, 1, 2, -1, 0, -2, -1, -4, -3,
        ];
        let data = get_knot("9_42").unwrap();
        let res = rewrite(&data, &RewritePlan::source_order(data.k())).unwrap();
        let mut expected: Vec<(u32, i64, i64)> = (0..33)
            .map(|i| (if i < 9 { 1 } else { 2 }, a_vec[i], q_vec[i]))
            .collect();
        let mut got: Vec<(u32, i64, i64)> =
            res.quiver.nodes.iter().map(|n| (n.n, n.a, n.q)).collect();
        expected.sort_unstable();
        got.sort_unstable();
        assert_eq!(got, expected, "multiset of (level, a, q) node data");

        // The diagonal carries homological degrees: summing
        // a^{a_i} q^{q_i} t^{C_ii} over the level-1 nodes reproduces the
        // rank-one superpolynomial (whose fourth grading is trivial once
        // Q is set to 1). Repeated (a, q, t) triples land as coefficients
        // greater than one, so polynomial equality counts multiplicity.
        let ring = crate::homology::homology_ring();
        let mut built = ring.zero();
        for (i, node) in res.quiver.nodes.iter().enumerate() {
            if node.n != 1 {
                continue;
            }
            let m = ring.mono(&[
                (0, 2 * node.a as i32),
                (1, 2 * node.q as i32),
                (2, 2 * res.quiver.c[i][i] as i32),
            ]);
            built = built.add(&ring.term_i64(1, m));
        }
        let p1 = crate::homology::superpoly_942(1)
            .unwrap()
            .substitute(&ring, &[(3, ring.one())], None)
            .unwrap();
        assert_eq!(built, p1, "level-1 block with t = homological degree");
    }

    #[test]
    fn diagonal_multiset_is_ordering_independent_on_small_knots() {
        for name in ["3_1", "4_1", "5_1", "5_2", "6_1"] {
            let data = get_knot(name).unwrap();
            let list = enumerate_orderings(&data, 2).unwrap();
            let mut diags: Vec<Vec<i64>> = list
                .iter()
                .map(|(_, q)| {
                    let mut d = diag(&q.c);
                    d.sort_unstable();
                    d
                })
                .collect();
            diags.dedup();
            assert_eq!(diags.len(), 1, "{name}: diagonal must not depend on the ordering");
        }
    }

    #[test]
    fn rewrite_handles_multi_block_positive_factors() {
        let data = get_knot("6_3_optb").unwrap();
        let plan = RewritePlan::source_order(data.k());
        let res = rewrite_verified(&data, &plan, 3).unwrap();
        assert_eq!(res.quiver.m(), predicted_size(&data));
    }

    #[test]
    fn negative_first_policy_is_also_sound() {
        let data = get_knot("4_1").unwrap();
        let mut plan = RewritePlan::source_order(data.k());
        plan.positive_first = false;
        let res = rewrite_verified(&data, &plan, 4).unwrap();
        assert_eq!(res.policy, "ordering=1,2;negative-first");
    }

    #[test]
    fn ordering_enumeration_dedups_and_fixes_the_diagonal() {
        let data = get_knot("5_1").unwrap();
        let list = enumerate_orderings(&data, 3).unwrap();
        assert!(list.len() >= 2, "5_1 must produce at least two distinct quivers");

        let c1 = vec![
            vec![0, 1, 1, 3, 3],
            vec![1, 2, 2, 3, 4],
            vec![1, 2, 3, 3, 4],
            vec![3, 3, 3, 4, 4],
            vec![3, 4, 4, 4, 5],
        ];
        let c2 = vec![
            vec![0, 1, 1, 3, 3],
            vec![1, 2, 2, 3, 3],
            vec![1, 2, 3, 4, 4],
            vec![3, 3, 4, 4, 4],
            vec![3, 3, 4, 4, 5],
        ];
        assert!(list.iter().any(|(_, q)| q.c == c1));
        assert!(list.iter().any(|(_, q)| q.c == c2));

        let mut diags: Vec<Vec<i64>> = list
            .iter()
            .map(|(_, q)| {
                let mut d = diag(&q.c);
                d.sort_unstable();
                d
            })
            .collect();
        diags.dedup();
        assert_eq!(diags.len(), 1, "diagonal multiset must not depend on the ordering");
    }

    #[test]
    fn ordering_cap_is_enforced() {
        let data = get_knot("9_1").unwrap(); // k = 4, 24 orderings
        let err = enumerate_orderings_capped(&data, 2, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded(_)));
    }

    #[test]
    fn plan_validation_rejects_non_permutations() {
        let data = get_knot("3_1").unwrap();
        for bad in [vec![1, 1], vec![0, 2], vec![1, 2, 3]] {
            let plan = RewritePlan::with_ordering(bad);
            assert!(rewrite(&data, &plan).is_err());
        }
    }
}
