//! Exact path extension and whole-tournament path extendability.
//!
//! Everything rests on one table: for every subset `S` of a host set and
//! every `t ∈ S`, the set of vertices `s` such that `⟨S⟩` has a hamiltonian
//! path from `s` to `t`. A path `P` from `s` to `t` is extendable iff some
//! `w ∉ V(P)` has `s` among the starts of `V(P) ∪ {w}` towards `t`, so
//! extendability is a property of `(V(P), s, t)` alone.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{arg, Error, Result};
use crate::tournament::{DirectedPath, Tournament, VertexSet, MAX_VERTICES};

/// Hamiltonian-path start sets for every `(subset, terminal)` of a host set.
///
/// Host vertices are renumbered `0..m` in increasing order; `starts` is laid
/// out as `local_subset * m + local_terminal`, one local bit set per entry.
pub struct FixedEndpointHpTable {
    members: Vec<usize>,
    /// Global vertex -> local index.
    local: [u8; MAX_VERTICES],
    starts: Vec<u32>,
}

impl FixedEndpointHpTable {
    /// Bytes needed for a host set of `m` vertices.
    pub fn memory_estimate(m: usize) -> usize {
        (m << m) * std::mem::size_of::<u32>()
    }

    pub fn build(t: &Tournament, host: VertexSet) -> Result<Self> {
        let members = host.to_vec();
        let m = members.len();
        if m == 0 || !host.is_subset_of(t.vertices()) {
            return arg("host set must be a nonempty subset of the tournament");
        }
        if m > MAX_VERTICES {
            return Err(Error::Capacity(format!("host of {m} vertices exceeds {MAX_VERTICES}")));
        }
        let entries = m << m;
        let mut starts: Vec<u32> = Vec::new();
        starts.try_reserve_exact(entries).map_err(|_| {
            Error::Capacity(format!(
                "hamiltonian path table for {m} vertices needs about {} MiB",
                Self::memory_estimate(m) >> 20
            ))
        })?;
        starts.resize(entries, 0);

        let mut local = [u8::MAX; MAX_VERTICES];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i as u8;
        }
        // Local in-neighbourhoods.
        let in_local: Vec<u32> = members
            .iter()
            .map(|&v| {
                t.in_set(v).intersect(host).iter().fold(0u32, |acc, u| acc | 1 << local[u])
            })
            .collect();

        for set in 1u32..(1u32 << m) {
            let base = set as usize * m;
            if set.count_ones() == 1 {
                let v = set.trailing_zeros() as usize;
                starts[base + v] = set;
                continue;
            }
            let mut terminals = set;
            while terminals != 0 {
                let end = terminals.trailing_zeros() as usize;
                terminals &= terminals - 1;
                let rest = set & !(1 << end);
                let rest_base = rest as usize * m;
                let mut preds = rest & in_local[end];
                let mut acc = 0u32;
                while preds != 0 {
                    let u = preds.trailing_zeros() as usize;
                    preds &= preds - 1;
                    acc |= starts[rest_base + u];
                }
                starts[base + end] = acc;
            }
        }
        Ok(FixedEndpointHpTable { members, local, starts })
    }

    pub fn host(&self) -> VertexSet {
        VertexSet::from_vertices(self.members.iter().copied())
    }

    fn to_local(&self, set: VertexSet) -> u32 {
        set.iter().fold(0u32, |acc, v| acc | 1 << self.local[v])
    }

    fn to_global(&self, bits: u32) -> VertexSet {
        VertexSet::from_vertices(VertexSet(bits).iter().map(|i| self.members[i]))
    }

    #[inline]
    fn entry(&self, local_set: u32, local_end: usize) -> u32 {
        self.starts[local_set as usize * self.members.len() + local_end]
    }

    /// Starts `s` such that `⟨set⟩` has a hamiltonian path from `s` to `end`.
    /// `set` must lie inside the host; empty if `end ∉ set`.
    pub fn starts(&self, set: VertexSet, end: usize) -> VertexSet {
        if !set.is_subset_of(self.host()) || !set.contains(end) {
            return VertexSet::EMPTY;
        }
        self.to_global(self.entry(self.to_local(set), self.local[end] as usize))
    }

    /// The lexicographically least hamiltonian path of `⟨set⟩` from `start`
    /// to `end`, if one exists.
    pub fn least_path(&self, t: &Tournament, set: VertexSet, start: usize, end: usize) -> Option<Vec<usize>> {
        if !self.starts(set, end).contains(start) {
            return None;
        }
        let mut path = vec![start];
        let mut remaining = set.without(start);
        let mut cur = start;
        while !remaining.is_empty() {
            let next = t
                .out_set(cur)
                .intersect(remaining)
                .iter()
                .find(|&y| self.starts(remaining, end).contains(y))
                .expect("table guarantees a continuation");
            path.push(next);
            remaining = remaining.without(next);
            cur = next;
        }
        Some(path)
    }

    /// Every hamiltonian path of `⟨set⟩` from `start` to `end`, in
    /// lexicographic order.
    pub fn all_paths(&self, t: &Tournament, set: VertexSet, start: usize, end: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.starts(set, end).contains(start) {
            let mut path = vec![start];
            self.collect_paths(t, set.without(start), end, &mut path, &mut out);
        }
        out
    }

    fn collect_paths(
        &self,
        t: &Tournament,
        remaining: VertexSet,
        end: usize,
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining.is_empty() {
            out.push(path.clone());
            return;
        }
        let cur = *path.last().expect("non-empty");
        let viable = self.starts(remaining, end);
        for y in t.out_set(cur).intersect(remaining).intersect(viable) {
            path.push(y);
            self.collect_paths(t, remaining.without(y), end, path, out);
            path.pop();
        }
    }
}

/// Tries to extend `path`: some path on `V(P) ∪ {w}` with the same first and
/// last vertex, for the smallest `w` that admits one. The result need not
/// contain `P` as a subpath.
pub fn extend_path(t: &Tournament, path: &DirectedPath) -> Result<Option<DirectedPath>> {
    if !path.is_valid_in(t) {
        return arg(format!("{path} is not a path of the tournament"));
    }
    if path.is_hamiltonian_in(t) {
        return arg("a hamiltonian path cannot be extended");
    }
    let on = path.vertex_set();
    let (s, e) = (path.first(), path.last());
    for w in t.vertices().minus(on) {
        let host = on.with(w);
        // Cheap exits: w needs an in-neighbour and an out-neighbour on P
        // other than the fixed ends' wrong sides.
        if t.in_set(w).intersect(on.without(e)).is_empty() || t.out_set(w).intersect(on.without(s)).is_empty() {
            continue;
        }
        let table = FixedEndpointHpTable::build(t, host)?;
        if let Some(p) = table.least_path(t, host, s, e) {
            return Ok(Some(DirectedPath::from_trusted(p)));
        }
    }
    Ok(None)
}

/// Outcome of the whole-tournament decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendabilityVerdict {
    pub extendable: bool,
    /// Shortest non-extendable path, lexicographically least among those.
    pub certificate: Option<DirectedPath>,
    pub k_threshold: usize,
    /// Subsets whose paths were examined before the verdict.
    pub subsets_checked: u64,
}

/// A non-extendable `(vertex set, start, end)` triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Failure {
    set: u32,
    start: usize,
    end: usize,
}

/// Subsets of `0..n` bucketed by size, each bucket increasing.
fn subsets_by_size(n: usize) -> Vec<Vec<u32>> {
    let mut layers = vec![Vec::new(); n + 1];
    for set in 0u32..(1u32 << n) {
        layers[set.count_ones() as usize].push(set);
    }
    layers
}

/// Non-extendable triples whose vertex set is `set`.
fn failures_in(table: &FixedEndpointHpTable, n: usize, set: u32) -> Vec<Failure> {
    let outside = !set & VertexSet::full(n).0;
    let mut found = Vec::new();
    let mut ends = set;
    while ends != 0 {
        let end = ends.trailing_zeros() as usize;
        ends &= ends - 1;
        let starts = table.entry(set, end);
        if starts == 0 {
            continue;
        }
        let mut reach = 0u32;
        let mut ws = outside;
        while ws != 0 {
            let w = ws.trailing_zeros();
            ws &= ws - 1;
            reach |= table.entry(set | 1 << w, end);
            if starts & !reach == 0 {
                break;
            }
        }
        for start in VertexSet(starts & !reach) {
            found.push(Failure { set, start, end });
        }
    }
    found
}

fn has_failure(table: &FixedEndpointHpTable, n: usize, set: u32) -> bool {
    !failures_in(table, n, set).is_empty()
}

fn full_table(t: &Tournament) -> Result<FixedEndpointHpTable> {
    FixedEndpointHpTable::build(t, t.vertices())
}

/// Decides whether every nonhamiltonian path with at least `k_threshold`
/// arcs is extendable.
pub fn is_path_extendable(t: &Tournament, k_threshold: usize) -> Result<ExtendabilityVerdict> {
    let n = t.order();
    if n < 3 {
        return arg("path extendability needs at least 3 vertices");
    }
    if k_threshold == 0 {
        return arg("paths have at least one arc; k must be >= 1");
    }
    let table = full_table(t)?;
    let layers = subsets_by_size(n);
    let mut checked = 0u64;
    // Vertex sets of size k+1 ..= n-1 carry the paths in scope.
    for size in (k_threshold + 1)..n {
        let layer = &layers[size];
        checked += layer.len() as u64;
        let failing = layer.par_iter().any(|&set| has_failure(&table, n, set));
        if failing {
            let failures: Vec<Failure> = layer
                .par_iter()
                .flat_map_iter(|&set| failures_in(&table, n, set))
                .collect();
            let cert = least_certificate(t, &table, &failures);
            return Ok(ExtendabilityVerdict {
                extendable: false,
                certificate: Some(DirectedPath::from_trusted(cert)),
                k_threshold,
                subsets_checked: checked,
            });
        }
    }
    Ok(ExtendabilityVerdict { extendable: true, certificate: None, k_threshold, subsets_checked: checked })
}

/// Lexicographically least path realising any of `failures` (all of one size).
fn least_certificate(t: &Tournament, table: &FixedEndpointHpTable, failures: &[Failure]) -> Vec<usize> {
    let start = failures.iter().map(|f| f.start).min().expect("at least one failure");
    let mut live: Vec<Failure> = failures.iter().copied().filter(|f| f.start == start).collect();
    let size = live[0].set.count_ones() as usize;
    let mut path = vec![start];
    let mut used = VertexSet::singleton(start);
    while path.len() < size {
        let cur = *path.last().expect("non-empty");
        let next = t
            .out_set(cur)
            .minus(used)
            .iter()
            .find(|&y| {
                live.iter().any(|f| {
                    let rest = VertexSet(f.set).minus(used);
                    rest.contains(y) && table.starts(rest, f.end).contains(y)
                })
            })
            .expect("some failure stays realisable");
        path.push(next);
        used = used.with(next);
        live.retain(|f| {
            let rest = VertexSet(f.set).minus(used.without(next));
            rest.contains(next) && table.starts(rest, f.end).contains(next)
        });
    }
    path
}

/// Up to `limit` non-extendable nonhamiltonian paths, shortest first and
/// lexicographic within a length. Each is re-checked with [`extend_path`].
pub fn nonextendable_paths(t: &Tournament, limit: usize) -> Result<Vec<DirectedPath>> {
    let n = t.order();
    if n < 3 || limit == 0 {
        return Ok(Vec::new());
    }
    let table = full_table(t)?;
    let layers = subsets_by_size(n);
    let mut found: Vec<DirectedPath> = Vec::new();
    for layer in &layers[2..n] {
        if found.len() >= limit {
            break;
        }
        let failures: Vec<Failure> = layer
            .par_iter()
            .flat_map_iter(|&set| failures_in(&table, n, set))
            .collect();
        let mut paths: Vec<Vec<usize>> = failures
            .par_iter()
            .flat_map_iter(|f| table.all_paths(t, VertexSet(f.set), f.start, f.end))
            .collect();
        paths.sort_unstable();
        paths.truncate(limit - found.len());
        found.extend(paths.into_iter().map(DirectedPath::from_trusted));
    }
    for p in &found {
        assert!(
            extend_path(t, p)?.is_none(),
            "subset table and single-path extension disagree on {p}"
        );
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{figure4_tournament, paley_tournament, random_tournament, t3_tournament, T3Spec};

    fn three_cycle() -> Tournament {
        Tournament::from_trn("3\n101\n").unwrap()
    }

    /// Plain backtracking: a path over exactly `set` from `s` to `e`.
    fn brute_hp(t: &Tournament, set: VertexSet, s: usize, e: usize) -> bool {
        fn go(t: &Tournament, cur: usize, left: VertexSet, e: usize) -> bool {
            if left.is_empty() {
                return cur == e;
            }
            left.iter().any(|y| t.beats(cur, y) && (y != e || left.len() == 1) && go(t, y, left.without(y), e))
        }
        set.contains(s) && set.contains(e) && go(t, s, set.without(s), e)
    }

    #[test]
    fn table_matches_backtracking() {
        for seed in 0..20 {
            let t = random_tournament(8, seed).unwrap();
            let table = FixedEndpointHpTable::build(&t, t.vertices()).unwrap();
            for set in 1u32..256 {
                let set = VertexSet(set);
                for e in set {
                    for s in set {
                        assert_eq!(table.starts(set, e).contains(s), brute_hp(&t, set, s, e));
                    }
                }
            }
        }
    }

    #[test]
    fn table_on_a_subset_host() {
        let t = random_tournament(10, 3).unwrap();
        let host = VertexSet::from_vertices([1, 4, 5, 8, 9]);
        let table = FixedEndpointHpTable::build(&t, host).unwrap();
        for e in host {
            for s in host {
                assert_eq!(table.starts(host, e).contains(s), brute_hp(&t, host, s, e));
            }
        }
        assert!(table.starts(VertexSet::from_vertices([0, 1]), 1).is_empty());
    }

    #[test]
    fn base_case() {
        let t = three_cycle();
        let table = FixedEndpointHpTable::build(&t, t.vertices()).unwrap();
        for v in 0..3 {
            assert_eq!(table.starts(VertexSet::singleton(v), v), VertexSet::singleton(v));
        }
    }

    #[test]
    fn extend_path_examples() {
        let t = Tournament::transitive(4).unwrap();
        let p = DirectedPath::new(&t, vec![0, 3]).unwrap();
        let q = extend_path(&t, &p).unwrap().unwrap();
        assert_eq!(q.vertices(), &[0, 1, 3]);

        let c = three_cycle();
        let p = DirectedPath::new(&c, vec![0, 1]).unwrap();
        assert!(extend_path(&c, &p).unwrap().is_none());

        let ham = DirectedPath::new(&c, vec![0, 1, 2]).unwrap();
        assert!(extend_path(&c, &ham).is_err());
    }

    #[test]
    fn t3_block_path_is_stuck() {
        let spec = T3Spec::new(1).unwrap();
        let t = t3_tournament(spec).unwrap();
        let block = spec.block(0);
        let table = FixedEndpointHpTable::build(&t, block).unwrap();
        let path = table.least_path(&t, block, 0, 6).or_else(|| table.least_path(&t, block, 0, 5)).unwrap();
        let p = DirectedPath::new(&t, path).unwrap();
        assert_eq!(p.order(), 7);
        assert!(extend_path(&t, &p).unwrap().is_none());
    }

    #[test]
    fn extension_may_rearrange() {
        // Extension needs a reordering, not an insertion: 0->1->2->3 with
        // w = 4 where the only extension is 0->2->4->1->3.
        let arcs = [(0, 1), (1, 2), (2, 3), (0, 2), (1, 3), (3, 0), (2, 4), (4, 1), (3, 4), (4, 0)];
        let t = Tournament::from_fn(5, |i, j| arcs.contains(&(i, j))).unwrap();
        let p = DirectedPath::new(&t, vec![0, 1, 2, 3]).unwrap();
        let ctx = crate::metrics::classify_against_path(&t, &p).unwrap();
        assert!(ctx.inserting.is_empty());
        let q = extend_path(&t, &p).unwrap().unwrap();
        assert_eq!(q.vertices(), &[0, 2, 4, 1, 3]);
    }

    #[test]
    fn decisions_on_named_instances() {
        let v = is_path_extendable(&paley_tournament(7).unwrap(), 1).unwrap();
        assert!(v.extendable && v.certificate.is_none());

        let v = is_path_extendable(&three_cycle(), 1).unwrap();
        assert!(!v.extendable);
        assert_eq!(v.certificate.unwrap().vertices(), &[0, 1]);

        let v = is_path_extendable(&figure4_tournament(3, 0).unwrap(), 1).unwrap();
        assert!(!v.extendable);
        assert!(is_path_extendable(&Tournament::transitive(2).unwrap(), 1).is_err());
        assert!(is_path_extendable(&three_cycle(), 0).is_err());
    }

    #[test]
    fn k_beyond_range_is_vacuous() {
        let v = is_path_extendable(&three_cycle(), 2).unwrap();
        assert!(v.extendable);
        assert_eq!(v.subsets_checked, 0);
    }

    #[test]
    fn nonextendable_lists() {
        let c = three_cycle();
        let all = nonextendable_paths(&c, 10).unwrap();
        let got: Vec<_> = all.iter().map(|p| p.vertices().to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 2], vec![2, 0]]);
        assert_eq!(nonextendable_paths(&c, 2).unwrap().len(), 2);
        assert!(nonextendable_paths(&paley_tournament(11).unwrap(), 5).unwrap().is_empty());
        assert!(!nonextendable_paths(&figure4_tournament(3, 0).unwrap(), 1).unwrap().is_empty());
    }

    #[test]
    fn certificate_is_first_listed_path() {
        for seed in 0..40 {
            let t = random_tournament(7, seed).unwrap();
            let v = is_path_extendable(&t, 1).unwrap();
            let list = nonextendable_paths(&t, 1).unwrap();
            assert_eq!(v.certificate, list.first().cloned());
        }
    }
}
