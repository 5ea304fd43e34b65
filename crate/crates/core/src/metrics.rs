//! 2-path invariants: p₂, π₂, irregularity, surplus, and the classification
//! of off-path vertices relative to a directed path.

use serde::Serialize;

use crate::error::{arg, Result};
use crate::tournament::{pair_count, pair_index, DirectedPath, Tournament, VertexSet};

/// Number of `(u, v)`-2-paths, |N⁺(u) ∩ N⁻(v)|.
pub fn p2(t: &Tournament, u: usize, v: usize) -> Result<usize> {
    t.check_pair(u, v)?;
    Ok(p2_unchecked(t, u, v))
}

#[inline]
pub(crate) fn p2_unchecked(t: &Tournament, u: usize, v: usize) -> usize {
    t.out_set(u).intersect(t.in_set(v)).len()
}

/// V_I(u, v): the middle vertices of all `(u, v)`-2-paths.
pub fn intermediate_set(t: &Tournament, u: usize, v: usize) -> Result<VertexSet> {
    t.check_pair(u, v)?;
    Ok(t.out_set(u).intersect(t.in_set(v)))
}

/// π₂(T) together with the lexicographically first ordered pair attaining it.
pub fn pi2_with_argmin(t: &Tournament) -> (usize, (usize, usize)) {
    let n = t.order();
    let mut best = (usize::MAX, (0, 1));
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let c = p2_unchecked(t, u, v);
                if c < best.0 {
                    best = (c, (u, v));
                }
            }
        }
    }
    best
}

/// π₂(T), the minimum of p₂ over ordered pairs of distinct vertices.
pub fn pi2(t: &Tournament) -> usize {
    let n = t.order();
    let mut best = usize::MAX;
    for u in 0..n {
        let out = t.out_set(u);
        for v in 0..n {
            if u != v {
                best = best.min(out.intersect(t.in_set(v)).len());
                if best == 0 {
                    return 0;
                }
            }
        }
    }
    best
}

/// i(T) = max |d⁺(u) − d⁻(u)|.
pub fn irregularity(t: &Tournament) -> usize {
    let n = t.order() as i64;
    t.score_sequence()
        .into_iter()
        .map(|d| (2 * d as i64 - (n - 1)).unsigned_abs() as usize)
        .max()
        .unwrap_or(0)
}

/// s(u, v) = p₂(u, v) + p₂(v, u) − 2π₂(T).
pub fn surplus_pair(t: &Tournament, u: usize, v: usize) -> Result<usize> {
    t.check_pair(u, v)?;
    let pi = pi2(t);
    Ok(p2_unchecked(t, u, v) + p2_unchecked(t, v, u) - 2 * pi)
}

/// s(W), the sum of pair surpluses inside `w`.
pub fn surplus_set(t: &Tournament, w: VertexSet) -> Result<usize> {
    if w.len() < 2 {
        return arg("surplus of a set needs at least two vertices");
    }
    if !w.is_subset_of(t.vertices()) {
        return arg("set mentions vertices outside the tournament");
    }
    Ok(SurplusReport::new(t).set_surplus(w))
}

/// Lower bound C(|W|,2) − ⌊|W|/2⌋⌈|W|/2⌉ on s(W) for any tournament.
pub fn set_surplus_bound(size: usize) -> usize {
    pair_count(size) - (size / 2) * size.div_ceil(2)
}

/// All pair surpluses of a tournament, computed once.
#[derive(Clone, Debug, Serialize)]
pub struct SurplusReport {
    n: usize,
    pub pi2: usize,
    /// Indexed by [`pair_index`].
    pub pair_surplus: Vec<usize>,
}

impl SurplusReport {
    pub fn new(t: &Tournament) -> Self {
        let n = t.order();
        let pi = pi2(t);
        let mut pair_surplus = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                pair_surplus.push(p2_unchecked(t, u, v) + p2_unchecked(t, v, u) - 2 * pi);
            }
        }
        SurplusReport { n, pi2: pi, pair_surplus }
    }

    pub fn pair(&self, u: usize, v: usize) -> usize {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.pair_surplus[pair_index(self.n, a, b)]
    }

    pub fn set_surplus(&self, w: VertexSet) -> usize {
        let members = w.to_vec();
        let mut total = 0;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                total += self.pair_surplus[pair_index(self.n, a, b)];
            }
        }
        total
    }
}

/// Position of an off-path vertex relative to a path `u_0 … u_{p−1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VertexRole {
    /// `w -> V(P)`.
    Dominating,
    /// `V(P) -> w`.
    Dominated,
    /// `u_{k+1},…,u_{p−1} -> w -> u_0,…,u_k`.
    Hybrid { switch: usize },
    /// Some `u_i -> w -> u_{i+1}`; the path extends by plain insertion.
    Inserting { position: usize },
}

/// Classification of every vertex off a path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathContext {
    pub order: usize,
    pub dominating: VertexSet,
    pub dominated: VertexSet,
    /// `(w, k)` sorted by `w`.
    pub hybrid: Vec<(usize, usize)>,
    pub inserting: VertexSet,
}

impl PathContext {
    /// h(P).
    pub fn hybrid_count(&self) -> usize {
        self.hybrid.len()
    }

    /// Whether the interior path u_1 … u_{p−2} has a hybrid vertex among the
    /// vertices off P, i.e. some switch index lies in `1..=p−3`.
    pub fn interior_has_hybrid(&self) -> bool {
        self.order >= 4 && self.hybrid.iter().any(|&(_, k)| (1..=self.order - 3).contains(&k))
    }

    /// |N₀⁻|: vertices dominating all of P.
    pub fn n0_minus(&self) -> usize {
        self.dominating.len()
    }

    /// |N₁⁻|: dominating u_0 … u_{p−2}, dominated by u_{p−1}.
    pub fn n1_minus(&self) -> usize {
        self.hybrid.iter().filter(|&&(_, k)| k + 2 == self.order).count()
    }

    /// |N₁⁺|: dominated by u_1 … u_{p−1}, dominating u_0.
    pub fn n1_plus(&self) -> usize {
        self.hybrid.iter().filter(|&&(_, k)| k == 0).count()
    }

    /// |N₀⁺|: vertices dominated by all of P.
    pub fn n0_plus(&self) -> usize {
        self.dominated.len()
    }

    pub fn role(&self, w: usize) -> Option<VertexRole> {
        if self.dominating.contains(w) {
            Some(VertexRole::Dominating)
        } else if self.dominated.contains(w) {
            Some(VertexRole::Dominated)
        } else if let Some(&(_, k)) = self.hybrid.iter().find(|&&(x, _)| x == w) {
            Some(VertexRole::Hybrid { switch: k })
        } else {
            None
        }
    }
}

/// Role of a single off-path vertex.
pub fn vertex_role(t: &Tournament, path: &[usize], w: usize) -> VertexRole {
    // into[i]: u_i -> w. Non-inserting vertices read F…FT…T along the path.
    let into: Vec<bool> = path.iter().map(|&u| t.beats(u, w)).collect();
    if let Some(i) = into.windows(2).position(|p| p[0] && !p[1]) {
        return VertexRole::Inserting { position: i };
    }
    match into.iter().position(|&b| b) {
        None => VertexRole::Dominating,
        Some(0) => VertexRole::Dominated,
        Some(first) => VertexRole::Hybrid { switch: first - 1 },
    }
}

pub fn classify_against_path(t: &Tournament, path: &DirectedPath) -> Result<PathContext> {
    if !path.is_valid_in(t) {
        return arg(format!("{path} is not a path of the tournament"));
    }
    let on = path.vertex_set();
    let mut ctx = PathContext {
        order: path.order(),
        dominating: VertexSet::EMPTY,
        dominated: VertexSet::EMPTY,
        hybrid: Vec::new(),
        inserting: VertexSet::EMPTY,
    };
    for w in t.vertices().minus(on) {
        match vertex_role(t, path.vertices(), w) {
            VertexRole::Dominating => ctx.dominating = ctx.dominating.with(w),
            VertexRole::Dominated => ctx.dominated = ctx.dominated.with(w),
            VertexRole::Hybrid { switch } => ctx.hybrid.push((w, switch)),
            VertexRole::Inserting { .. } => ctx.inserting = ctx.inserting.with(w),
        }
    }
    Ok(ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::paley_tournament;

    fn three_cycle() -> Tournament {
        Tournament::from_trn("3\n101\n").unwrap()
    }

    #[test]
    fn p2_examples() {
        let p7 = paley_tournament(7).unwrap();
        for u in 0..7 {
            for v in p7.out_set(u) {
                assert_eq!(p2(&p7, u, v).unwrap(), 1);
                assert_eq!(p2(&p7, v, u).unwrap(), 2);
                assert_eq!(intermediate_set(&p7, u, v).unwrap().len(), 1);
            }
        }
        let t3 = Tournament::transitive(3).unwrap();
        assert_eq!(p2(&t3, 0, 2).unwrap(), 1);
        assert_eq!(p2(&t3, 2, 0).unwrap(), 0);
        assert!(p2(&t3, 1, 1).is_err());
    }

    #[test]
    fn pi2_examples() {
        assert_eq!(pi2(&paley_tournament(7).unwrap()), 1);
        assert_eq!(pi2(&paley_tournament(19).unwrap()), 4);
        assert_eq!(pi2(&three_cycle()), 0);
        let (m, (u, v)) = pi2_with_argmin(&three_cycle());
        assert_eq!(m, 0);
        assert_eq!(p2_unchecked(&three_cycle(), u, v), 0);
    }

    #[test]
    fn irregularity_examples() {
        assert_eq!(irregularity(&paley_tournament(7).unwrap()), 0);
        assert_eq!(irregularity(&Tournament::transitive(4).unwrap()), 3);
        assert_eq!(irregularity(&three_cycle()), 0);
    }

    #[test]
    fn intermediate_sets() {
        let t = Tournament::transitive(4).unwrap();
        assert_eq!(intermediate_set(&t, 0, 3).unwrap(), VertexSet::from_vertices([1, 2]));
        assert!(intermediate_set(&three_cycle(), 0, 1).unwrap().is_empty());
    }

    #[test]
    fn surplus_examples() {
        let p7 = paley_tournament(7).unwrap();
        for u in 0..7 {
            for v in u + 1..7 {
                assert_eq!(surplus_pair(&p7, u, v).unwrap(), 1);
            }
        }
        assert_eq!(surplus_set(&p7, VertexSet::from_vertices([0, 2, 3, 6])).unwrap(), 6);
        assert!(surplus_set(&p7, VertexSet::singleton(0)).is_err());
        assert!(surplus_set(&p7, VertexSet::from_vertices([0, 9])).is_err());
    }

    #[test]
    fn surplus_bound_values() {
        assert_eq!(set_surplus_bound(2), 0);
        assert_eq!(set_surplus_bound(3), 1);
        assert_eq!(set_surplus_bound(4), 2);
        assert_eq!(set_surplus_bound(5), 4);
        assert_eq!(set_surplus_bound(6), 6);
    }

    #[test]
    fn classification_examples() {
        let c = three_cycle();
        let ctx = classify_against_path(&c, &DirectedPath::new(&c, vec![0, 1]).unwrap()).unwrap();
        assert_eq!(ctx.hybrid, vec![(2, 0)]);
        assert_eq!(ctx.role(2), Some(VertexRole::Hybrid { switch: 0 }));

        let t = Tournament::transitive(4).unwrap();
        let ctx = classify_against_path(&t, &DirectedPath::new(&t, vec![1, 2]).unwrap()).unwrap();
        assert_eq!(ctx.dominating, VertexSet::singleton(0));
        assert_eq!(ctx.dominated, VertexSet::singleton(3));

        let ctx = classify_against_path(&t, &DirectedPath::new(&t, vec![0, 3]).unwrap()).unwrap();
        assert_eq!(ctx.inserting, VertexSet::from_vertices([1, 2]));
        assert!(ctx.hybrid.is_empty());
    }

    #[test]
    fn classification_rejects_foreign_paths() {
        let t = Tournament::transitive(4).unwrap();
        let other = Tournament::transitive(4).unwrap().converse();
        let p = DirectedPath::new(&other, vec![3, 2]).unwrap();
        assert!(classify_against_path(&t, &p).is_err());
    }

    #[test]
    fn four_set_partition_counts() {
        // Path 1->2->3 in the 5-vertex transitive tournament plus reversals.
        let t = Tournament::from_fn(5, |i, j| !(i == 0 && j == 3)).unwrap();
        let p = DirectedPath::new(&t, vec![1, 2, 3]).unwrap();
        let ctx = classify_against_path(&t, &p).unwrap();
        // 0 -> 1, 0 -> 2, 3 -> 0: hybrid switching at 1 = p − 2.
        assert_eq!(ctx.hybrid, vec![(0, 1)]);
        assert_eq!(ctx.n1_minus(), 1);
        assert_eq!(ctx.n0_plus(), 1);
        assert_eq!(ctx.n0_minus() + ctx.n1_plus(), 0);
    }
}
