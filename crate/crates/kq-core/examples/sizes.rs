use kq_core::knotdb::get_knot;
use kq_core::rewriter::{rewrite, RewritePlan};
use kq_core::homology::superpoly_942;

fn main() {
    // printed level-1 + level-2 linear-term vectors
    let a_vec: Vec<i64> = vec![
        0, 1, 0, 0, -1, 1, 0, 0, -1, 1, 0, 0, -1, 0, -1, -1, -2, 0, -1, -1, -2, -1, -2, -2, -3, 1,
        0, 0, -1, 0, -1, -1, -2,
    ];
    let q_vec: Vec<i64> = vec![
        0, -1, 0, -2, -1, 1, 2, 0, 1, 0, 1, 0, 1, -2, -1, -2, -1, -3, -2, -3, -2, -5, -4, -5, -4,
        1, 2, -1, 0, -2, -1, -4, -3,
    ];
    assert_eq!(a_vec.len(), 33);
    assert_eq!(q_vec.len(), 33);
    let mut printed: Vec<(u32, i64, i64)> = (0..33)
        .map(|i| (if i < 9 { 1 } else { 2 }, a_vec[i], q_vec[i]))
        .collect();
    printed.sort();

    let data = get_knot("9_42").unwrap();
    let plan = RewritePlan::source_order(data.k());
    let res = rewrite(&data, &plan).unwrap();
    let mut ours: Vec<(u32, i64, i64)> = res
        .quiver
        .nodes
        .iter()
        .map(|nd| (nd.n, nd.a, nd.q))
        .collect();
    ours.sort();
    println!("match: {}", printed == ours);
    if printed != ours {
        for i in 0..33 {
            if printed[i] != ours[i] {
                println!("  idx {i}: printed {:?} ours {:?}", printed[i], ours[i]);
            }
        }
    }
    // sanity: level-1 triples vs superpolynomial r=1 monomials
    let p1 = superpoly_942(1).unwrap();
    let mut mono1: Vec<(i32, i32, i32)> = p1
        .terms()
        .map(|(m, _)| (m.e2(0) / 2, m.e2(1) / 2, m.e2(2) / 2))
        .collect();
    mono1.sort();
    println!("superpoly r=1 (a,q,t): {:?}", mono1);
    let mut lvl1: Vec<(i64, i64, i64)> = res
        .quiver
        .nodes
        .iter()
        .enumerate()
        .filter(|(_, nd)| nd.n == 1)
        .map(|(i, nd)| (nd.a, nd.q, res.quiver.c[i][i]))
        .collect();
    lvl1.sort();
    println!("our level-1 (a,q,diag):  {:?}", lvl1);
    let mut diag: Vec<i64> = (0..33).map(|i| res.quiver.c[i][i]).collect();
    diag.sort();
    println!("diag multiset: {:?}", diag);
}
