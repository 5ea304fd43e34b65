//! The subset DP against a brute-force enumerator that lists every directed
//! path explicitly.

use std::collections::HashSet;

use pathext::construct::random_tournament;
use pathext::iso::dedup_isomorphic;
use pathext::{extend_path, is_path_extendable, nonextendable_paths, DirectedPath, Tournament};

/// Every directed path on at least two vertices.
fn all_paths(t: &Tournament) -> Vec<Vec<usize>> {
    let n = t.order();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fn go(t: &Tournament, stack: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if stack.len() >= 2 {
            out.push(stack.clone());
        }
        let last = *stack.last().unwrap();
        for w in 0..t.order() {
            if !stack.contains(&w) && t.beats(last, w) {
                stack.push(w);
                go(t, stack, out);
                stack.pop();
            }
        }
    }
    for s in 0..n {
        stack.push(s);
        go(t, &mut stack, &mut out);
        stack.pop();
    }
    out
}

fn mask(p: &[usize]) -> u32 {
    p.iter().fold(0, |m, &v| m | 1 << v)
}

/// Non-extendable nonhamiltonian paths with at least `k` arcs, shortest
/// first, then lexicographic.
fn oracle_failures(t: &Tournament, k: usize) -> Vec<Vec<usize>> {
    let n = t.order();
    let paths = all_paths(t);
    let spans: HashSet<(u32, usize, usize)> =
        paths.iter().map(|p| (mask(p), p[0], *p.last().unwrap())).collect();
    let mut bad: Vec<Vec<usize>> = paths
        .into_iter()
        .filter(|p| p.len() < n && p.len() > k)
        .filter(|p| {
            let m = mask(p);
            !(0..n).any(|w| m >> w & 1 == 0 && spans.contains(&(m | 1 << w, p[0], *p.last().unwrap())))
        })
        .collect();
    bad.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    bad
}

fn agree(t: &Tournament) {
    for k in [1, 2] {
        let verdict = is_path_extendable(t, k).unwrap();
        let oracle = oracle_failures(t, k);
        assert_eq!(verdict.extendable, oracle.is_empty(), "k={k} on {}", t.to_trn());
        assert_eq!(
            verdict.certificate.as_ref().map(|p| p.vertices().to_vec()),
            oracle.first().cloned(),
            "certificate k={k} on {}",
            t.to_trn()
        );
        if k == 1 && verdict.extendable {
            // Monotone in k.
            for k2 in 2..t.order() {
                assert!(is_path_extendable(t, k2).unwrap().extendable);
            }
        }
    }
}

#[test]
fn exhaustive_up_to_six() {
    for n in 3..=6 {
        for code in 0..1u64 << (n * (n - 1) / 2) {
            agree(&Tournament::from_pair_code(n, code).unwrap());
        }
    }
}

/// Classes on `n` vertices, reached by adding a last vertex to each class
/// on `n − 1` vertices in every way.
fn one_vertex_extensions(classes: &[Tournament]) -> Vec<Tournament> {
    let mut out = Vec::new();
    for base in classes {
        let m = base.order();
        for pattern in 0u32..1 << m {
            out.push(
                Tournament::from_fn(m + 1, |i, j| match (i == m, j == m) {
                    (false, false) => base.beats(i, j),
                    (true, _) => pattern >> j & 1 == 1,
                    (_, true) => pattern >> i & 1 == 0,
                })
                .unwrap(),
            );
        }
    }
    out
}

#[test]
fn every_isomorphism_class_on_seven() {
    let five = dedup_isomorphic((0..1u64 << 10).map(|c| Tournament::from_pair_code(5, c).unwrap()));
    assert_eq!(five.len(), 12);
    let six = dedup_isomorphic(one_vertex_extensions(&five));
    assert_eq!(six.len(), 56);
    let seven = one_vertex_extensions(&six);
    // Every 7-vertex tournament minus its last vertex is isomorphic to one
    // of the 56, so these candidates meet all 456 classes.
    assert_eq!(dedup_isomorphic(seven.iter().cloned()).len(), 456);
    for t in &seven {
        agree(t);
    }
}

#[test]
fn random_eight_to_ten() {
    for n in 8..=10 {
        for seed in 0..50 {
            agree(&random_tournament(n, 1000 * n as u64 + seed).unwrap());
        }
    }
}

#[test]
fn certificates_are_sound_and_complete() {
    for seed in 0..30 {
        let t = random_tournament(8, seed).unwrap();
        let listed: Vec<Vec<usize>> =
            nonextendable_paths(&t, usize::MAX).unwrap().into_iter().map(DirectedPath::into_vertices).collect();
        assert_eq!(listed, oracle_failures(&t, 1));
        for p in &listed {
            let path = DirectedPath::new(&t, p.clone()).unwrap();
            assert!(extend_path(&t, &path).unwrap().is_none());
        }
    }
}

#[test]
fn single_path_extension_matches_oracle() {
    for seed in 0..20 {
        let t = random_tournament(7, seed).unwrap();
        let bad: HashSet<Vec<usize>> = oracle_failures(&t, 1).into_iter().collect();
        for p in all_paths(&t).into_iter().filter(|p| p.len() < 7) {
            let path = DirectedPath::new(&t, p.clone()).unwrap();
            match extend_path(&t, &path).unwrap() {
                None => assert!(bad.contains(&p)),
                Some(q) => {
                    assert!(!bad.contains(&p));
                    assert_eq!(q.order(), p.len() + 1);
                    assert_eq!((q.first(), q.last()), (p[0], *p.last().unwrap()));
                    assert!(p.iter().all(|v| q.vertices().contains(v)));
                }
            }
        }
    }
}
