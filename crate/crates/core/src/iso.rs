//! Isomorphism of small tournaments.
//!
//! Two tools: a pruned permutation search that decides whether two
//! tournaments are isomorphic, and a brute-force canonical form (minimum pair
//! string over all `n!` relabellings) that serves as the reference.

use crate::tournament::{pair_count, Tournament};

/// Pair bits packed with the first pair in the most significant position,
/// so integer order matches the lexicographic order of the pair string.
fn pair_key(t: &Tournament, perm_inv: &[usize]) -> u64 {
    // perm_inv[new] = old
    let n = t.order();
    let total = pair_count(n);
    let mut key = 0u64;
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if t.beats(perm_inv[i], perm_inv[j]) {
                key |= 1 << (total - 1 - k);
            }
            k += 1;
        }
    }
    key
}

/// The relabelling whose pair string is lexicographically least, found by
/// trying all `n!` permutations. Practical up to `n = 9`.
pub fn canonical_form(t: &Tournament) -> Tournament {
    let n = t.order();
    assert!(pair_count(n) <= 64, "canonical form supports n <= 11");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_key = pair_key(t, &perm);
    let mut best = perm.clone();
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let key = pair_key(t, &perm);
            if key < best_key {
                best_key = key;
                best.copy_from_slice(&perm);
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Tournament::from_fn(n, |i, j| t.beats(best[i], best[j])).expect("same order")
}

/// Per-vertex invariant: own score plus the sorted score sequences of the
/// out- and in-neighbourhood subtournaments.
fn vertex_invariant(t: &Tournament, v: usize) -> (usize, Vec<usize>, Vec<usize>) {
    let scores_within = |set: crate::tournament::VertexSet| {
        let mut s: Vec<usize> = set.iter().map(|x| t.out_set(x).intersect(set).len()).collect();
        s.sort_unstable();
        s
    };
    (t.out_set(v).len(), scores_within(t.out_set(v)), scores_within(t.in_set(v)))
}

/// Graph-level invariant: the sorted multiset of vertex invariants.
pub fn invariant(t: &Tournament) -> Vec<(usize, Vec<usize>, Vec<usize>)> {
    let mut all: Vec<_> = (0..t.order()).map(|v| vertex_invariant(t, v)).collect();
    all.sort();
    all
}

/// Whether `a` and `b` are isomorphic. Maps vertices of `a` in order onto
/// vertices of `b` with equal invariants, rejecting a partial map as soon as
/// one arc disagrees.
pub fn isomorphic(a: &Tournament, b: &Tournament) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let ia: Vec<_> = (0..n).map(|v| vertex_invariant(a, v)).collect();
    let ib: Vec<_> = (0..n).map(|v| vertex_invariant(b, v)).collect();
    let mut sa = ia.clone();
    let mut sb = ib.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_map(a, b, &ia, &ib, 0, &mut map, &mut used)
}

fn extend_map(
    a: &Tournament,
    b: &Tournament,
    ia: &[(usize, Vec<usize>, Vec<usize>)],
    ib: &[(usize, Vec<usize>, Vec<usize>)],
    next: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let n = a.order();
    if next == n {
        return true;
    }
    for cand in 0..n {
        if used[cand] || ia[next] != ib[cand] {
            continue;
        }
        if (0..next).all(|u| a.beats(u, next) == b.beats(map[u], cand)) {
            map[next] = cand;
            used[cand] = true;
            if extend_map(a, b, ia, ib, next + 1, map, used) {
                return true;
            }
            used[cand] = false;
        }
    }
    false
}

/// Reduces a list to one member per isomorphism class, keeping the first
/// member seen of each class.
pub fn dedup_isomorphic(items: impl IntoIterator<Item = Tournament>) -> Vec<Tournament> {
    use std::collections::HashMap;
    let mut buckets: HashMap<Vec<(usize, Vec<usize>, Vec<usize>)>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Tournament> = Vec::new();
    for t in items {
        let bucket = buckets.entry(invariant(&t)).or_default();
        if bucket.iter().any(|&r| isomorphic(&reps[r], &t)) {
            continue;
        }
        bucket.push(reps.len());
        reps.push(t);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{paley_tournament, random_permutation, random_tournament};

    #[test]
    fn canonical_form_is_relabel_invariant() {
        for seed in 0..20 {
            let t = random_tournament(6, seed).unwrap();
            let r = t.relabel(&random_permutation(6, seed + 100)).unwrap();
            assert_eq!(canonical_form(&t), canonical_form(&r));
            assert!(isomorphic(&t, &r));
        }
    }

    #[test]
    fn isomorphism_agrees_with_canonical_form() {
        let ts: Vec<_> = (0..60).map(|s| random_tournament(5, s).unwrap()).collect();
        for a in &ts {
            for b in &ts {
                assert_eq!(isomorphic(a, b), canonical_form(a) == canonical_form(b));
            }
        }
    }

    #[test]
    fn converse_of_paley_is_isomorphic() {
        let p = paley_tournament(7).unwrap();
        assert!(isomorphic(&p, &p.converse()));
        let t = Tournament::transitive(4).unwrap();
        assert!(!isomorphic(&t, &Tournament::from_trn("4\n101111\n").unwrap()));
    }

    #[test]
    fn dedup_keeps_first() {
        let a = random_tournament(6, 1).unwrap();
        let b = a.relabel(&random_permutation(6, 9)).unwrap();
        let out = dedup_isomorphic([a.clone(), b]);
        assert_eq!(out, vec![a]);
    }
}
