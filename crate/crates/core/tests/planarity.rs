mod common;

use oneplanar_core::planarity::{count_faces, is_planar};
use oneplanar_core::{euler_check, test_planarity, Graph, RotationSystem};
use proptest::prelude::*;

/// Faces of the rotation system: orbits of darts under "arrive at v, leave by
/// the next edge in v's rotation".
fn faces(g: &Graph, rot: &[Vec<usize>]) -> usize {
    let m = g.m();
    let mut seen = vec![false; 2 * m];
    let dart = |e: usize, from: usize| 2 * e + usize::from(g.endpoints(e).0 != from);
    let mut count = 0;
    for start in 0..2 * m {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            let (e, side) = (d / 2, d % 2);
            let (a, b) = g.endpoints(e);
            let to = if side == 0 { b } else { a };
            let r = &rot[to];
            let i = r.iter().position(|&x| x == e).unwrap();
            let next = r[(i + 1) % r.len()];
            d = dart(next, to);
        }
    }
    count
}

/// Planar iff some rotation system reaches `F = E - V + 2C` over the
/// non-isolated part, each of the C components with edges tracing its own
/// outer face.
fn brute_force_planar(g: &Graph) -> bool {
    let active: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    let target = g.m() + 2 * g.nontrivial_components() - active.len();
    let mut rot: Vec<Vec<usize>> = (0..g.n()).map(|v| g.incident(v).to_vec()).collect();
    // odometer over the cyclic orders of every vertex (first entry fixed)
    fn search(g: &Graph, rot: &mut Vec<Vec<usize>>, vs: &[usize], target: usize) -> bool {
        let Some((&v, rest)) = vs.split_first() else {
            return faces(g, rot) == target;
        };
        let tail = rot[v].len().saturating_sub(1);
        let mut perm: Vec<usize> = rot[v][1..].to_vec();
        let mut found = false;
        permute(&mut perm, tail, &mut |p| {
            if !found {
                rot[v][1..].copy_from_slice(p);
                found = search(g, rot, rest, target);
            }
        });
        found
    }
    fn permute(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            permute(items, k - 1, f);
            let j = if k % 2 == 0 { i } else { 0 };
            items.swap(j, k - 1);
        }
    }
    search(g, &mut rot, &active, target)
}

#[test]
fn oracle_sanity() {
    use oneplanar_core::generators::{complete, complete_bipartite};
    assert!(brute_force_planar(&complete(4)));
    assert!(!brute_force_planar(&complete(5)));
    assert!(!brute_force_planar(&complete_bipartite(3, 3)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn agrees_with_brute_force(g in common::graph(1, 7, 10)) {
        let v = test_planarity(&g);
        prop_assert_eq!(v.planar, brute_force_planar(&g));
        prop_assert_eq!(v.planar, is_planar(&g));
    }

    #[test]
    fn positive_answers_are_certified(g in common::graph(1, 12, 30)) {
        let v = test_planarity(&g);
        prop_assert_eq!(v.planar, v.embedding.is_some());
        if let Some(rs) = v.embedding {
            prop_assert_eq!(euler_check(&g, &rs), Ok(true));
            let expected = g.m() + 2 * g.nontrivial_components() - (0..g.n()).filter(|&v| g.degree(v) > 0).count();
            prop_assert_eq!(count_faces(&g, &rs).unwrap(), expected);
            prop_assert_eq!(faces(&g, rs.rotations()), expected);
        }
    }

    #[test]
    fn subgraphs_of_planar_graphs_are_planar(g in common::graph(1, 12, 30), drop in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0 && is_planar(&g));
        let skip = drop.index(g.m());
        let rest: Vec<_> = (0..g.m()).filter(|&e| e != skip).map(|e| g.endpoints(e)).collect();
        prop_assert!(is_planar(&Graph::new(g.n(), &rest).unwrap()));
    }
}

#[test]
fn rejects_bad_rotation() {
    let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let rs = RotationSystem::new(vec![vec![0], vec![0], vec![0]]);
    assert!(euler_check(&g, &rs).is_err());
}
