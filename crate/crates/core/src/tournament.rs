//! Tournaments, directed paths and the per-pair neighbourhood profile.
//!
//! A tournament on `n <= 24` vertices is stored as `n` out-neighbourhood rows,
//! one `u32` bit set per vertex. Every 2-path count in the crate reduces to an
//! intersection and a popcount on these rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};

/// Largest supported order. The subset DP in [`crate::extend`] needs
/// `n * 2^n` words, which is the binding constraint.
pub const MAX_VERTICES: usize = 24;

/// A set of vertices of a tournament, bit `j` standing for vertex `j`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 32);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u32, |acc, v| acc | (1 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn intersect(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn minus(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Serialized as the ascending vertex list.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(bad) = v.iter().find(|&&x| x >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(v))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Number of unordered pairs on `n` vertices.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of the unordered pair `(i, j)`, `i < j`, in lexicographic order.
#[inline]
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// A structural defect found by [`validate_rows`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Order outside `2..=24`.
    Order(usize),
    /// A row mentions a vertex `>= n`.
    OutOfRange { row: usize },
    Loop { vertex: usize },
    BothArcs { u: usize, v: usize },
    NoArc { u: usize, v: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Order(n) => write!(f, "order {n} outside 2..={MAX_VERTICES}"),
            Violation::OutOfRange { row } => write!(f, "row {row} has bits beyond n"),
            Violation::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Violation::BothArcs { u, v } => write!(f, "both {u}->{v} and {v}->{u} present"),
            Violation::NoArc { u, v } => write!(f, "no arc between {u} and {v}"),
        }
    }
}

/// Checks raw out-neighbourhood rows against the tournament invariants.
/// An empty result means the rows describe a tournament.
pub fn validate_rows(rows: &[u32]) -> Vec<Violation> {
    let n = rows.len();
    let mut found = Vec::new();
    if !(2..=MAX_VERTICES).contains(&n) {
        found.push(Violation::Order(n));
        return found;
    }
    let mask = VertexSet::full(n).0;
    for (u, &row) in rows.iter().enumerate() {
        if row & !mask != 0 {
            found.push(Violation::OutOfRange { row: u });
        }
        if (row >> u) & 1 == 1 {
            found.push(Violation::Loop { vertex: u });
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let uv = (rows[u] >> v) & 1 == 1;
            let vu = (rows[v] >> u) & 1 == 1;
            match (uv, vu) {
                (true, true) => found.push(Violation::BothArcs { u, v }),
                (false, false) => found.push(Violation::NoArc { u, v }),
                _ => {}
            }
        }
    }
    found
}

/// A tournament on `2..=24` labelled vertices.
///
/// Immutable once built; every constructor enforces completeness,
/// antisymmetry and loop-freeness.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tournament {
    out: Vec<u32>,
}

impl Tournament {
    pub(crate) fn check_order(n: usize) -> Result<()> {
        if n < 2 {
            return arg(format!("a tournament needs at least 2 vertices, got {n}"));
        }
        if n > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "n = {n} exceeds the supported maximum of {MAX_VERTICES} vertices"
            )));
        }
        Ok(())
    }

    /// Builds a tournament from out-neighbourhood rows, rejecting anything
    /// that is not a tournament.
    pub fn from_rows(rows: Vec<u32>) -> Result<Self> {
        Self::check_order(rows.len())?;
        let violations = validate_rows(&rows);
        if let Some(first) = violations.first() {
            return arg(format!(
                "rows are not a tournament ({} violations, first: {first})",
                violations.len()
            ));
        }
        Ok(Tournament { out: rows })
    }

    /// Builds a tournament by asking `beats(i, j)` for every pair `i < j`
    /// in lexicographic order; `true` orients the pair `i -> j`.
    pub fn from_fn(n: usize, mut beats: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        Self::check_order(n)?;
        let mut out = vec![0u32; n];
        for i in 0..n {
            for j in i + 1..n {
                if beats(i, j) {
                    out[i] |= 1 << j;
                } else {
                    out[j] |= 1 << i;
                }
            }
        }
        Ok(Tournament { out })
    }

    /// Decodes a tournament whose pair bits are packed into an integer:
    /// bit `k` of `code` is the `k`-th pair `(i, j)` in lexicographic order,
    /// set meaning `i -> j`. Used by the exhaustive sweeps (`n <= 11`).
    pub fn from_pair_code(n: usize, code: u64) -> Result<Self> {
        if pair_count(n) > 64 {
            return Err(Error::Capacity(format!(
                "pair code only covers n <= 11, got {n}"
            )));
        }
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            let bit = (code >> k) & 1 == 1;
            k += 1;
            bit
        })
    }

    /// Inverse of [`Tournament::from_pair_code`].
    pub fn pair_code(&self) -> Option<u64> {
        let n = self.order();
        if pair_count(n) > 64 {
            return None;
        }
        let mut code = 0u64;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.beats(i, j) {
                    code |= 1 << k;
                }
                k += 1;
            }
        }
        Some(code)
    }

    /// The transitive tournament `i -> j` for all `i < j`.
    pub fn transitive(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn rows(&self) -> &[u32] {
        &self.out
    }

    /// Unchecked arc test; `u == v` gives `false`.
    #[inline]
    pub fn beats(&self, u: usize, v: usize) -> bool {
        (self.out[u] >> v) & 1 == 1
    }

    /// N⁺(u).
    #[inline]
    pub fn out_set(&self, u: usize) -> VertexSet {
        VertexSet(self.out[u])
    }

    /// N⁻(u).
    #[inline]
    pub fn in_set(&self, u: usize) -> VertexSet {
        VertexSet(VertexSet::full(self.order()).0 & !self.out[u] & !(1 << u))
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if u >= self.order() {
            return arg(format!("vertex {u} out of range for n = {}", self.order()));
        }
        Ok(())
    }

    pub(crate) fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return arg(format!("expected two distinct vertices, got {u} twice"));
        }
        Ok(())
    }

    /// Whether the arc `u -> v` is present.
    pub fn has_arc(&self, u: usize, v: usize) -> Result<bool> {
        self.check_pair(u, v)?;
        Ok(self.beats(u, v))
    }

    pub fn out_degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.out[u].count_ones() as usize)
    }

    pub fn in_degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.order() - 1 - self.out[u].count_ones() as usize)
    }

    /// Out-degrees of all vertices.
    pub fn score_sequence(&self) -> Vec<usize> {
        self.out.iter().map(|r| r.count_ones() as usize).collect()
    }

    /// δ⁺(T) and δ⁻(T).
    pub fn min_degrees(&self) -> (usize, usize) {
        let scores = self.score_sequence();
        let n = self.order();
        let min_out = *scores.iter().min().expect("n >= 2");
        let max_out = *scores.iter().max().expect("n >= 2");
        (min_out, n - 1 - max_out)
    }

    pub fn is_regular(&self) -> bool {
        let n = self.order();
        n % 2 == 1 && self.out.iter().all(|r| r.count_ones() as usize == (n - 1) / 2)
    }

    /// Counts of the four neighbourhood classes of an unordered pair.
    pub fn pair_profile(&self, u: usize, v: usize) -> Result<PairProfile> {
        self.check_pair(u, v)?;
        Ok(self.profile(u, v))
    }

    pub(crate) fn profile(&self, u: usize, v: usize) -> PairProfile {
        let others = self.vertices().without(u).without(v);
        let (ou, iu) = (self.out_set(u), self.in_set(u));
        let (ov, iv) = (self.out_set(v), self.in_set(v));
        PairProfile {
            x1: ou.intersect(iv).intersect(others).len(),
            x2: ou.intersect(ov).intersect(others).len(),
            x3: iu.intersect(iv).intersect(others).len(),
            x4: iu.intersect(ov).intersect(others).len(),
        }
    }

    /// Always `true` for a constructed value; kept so callers can re-check a
    /// tournament that crossed an FFI or file boundary.
    pub fn validate(&self) -> bool {
        validate_rows(&self.out).is_empty()
    }

    /// Relabels vertices: vertex `u` of `self` becomes `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tournament> {
        let n = self.order();
        if perm.len() != n || VertexSet::from_vertices(perm.iter().copied()) != self.vertices() {
            return arg("relabelling must be a permutation of 0..n");
        }
        let mut out = vec![0u32; n];
        for u in 0..n {
            for v in self.out_set(u) {
                out[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(Tournament { out })
    }

    /// The subtournament induced by `set`, with vertices renumbered in
    /// increasing order.
    pub fn induced(&self, set: VertexSet) -> Result<Tournament> {
        let keep = set.to_vec();
        Self::from_fn(keep.len(), |i, j| self.beats(keep[i], keep[j]))
    }

    /// The reversal (every arc flipped).
    pub fn converse(&self) -> Tournament {
        let n = self.order();
        let out = (0..n).map(|u| self.in_set(u).0).collect();
        Tournament { out }
    }

    /// TRN encoding: the order on the first line, the pair string on the
    /// second, each terminated by LF.
    pub fn to_trn(&self) -> String {
        format!("{}\n{}\n", self.order(), self.pair_string())
    }

    /// One character per pair `(i, j)`, `i < j`, lexicographic; `'1'` is `i -> j`.
    pub fn pair_string(&self) -> String {
        let n = self.order();
        let mut s = String::with_capacity(pair_count(n));
        for i in 0..n {
            for j in i + 1..n {
                s.push(if self.beats(i, j) { '1' } else { '0' });
            }
        }
        s
    }

    pub fn from_pair_string(n: usize, pairs: &str) -> Result<Self> {
        Self::check_order(n)?;
        let bytes = pairs.as_bytes();
        if bytes.len() != pair_count(n) {
            return Err(Error::Parse(format!(
                "expected {} pair characters for n = {n}, found {}",
                pair_count(n),
                bytes.len()
            )));
        }
        if let Some(pos) = bytes.iter().position(|&b| b != b'0' && b != b'1') {
            return Err(Error::Parse(format!(
                "pair character {pos} is {:?}, expected '0' or '1'",
                bytes[pos] as char
            )));
        }
        let mut k = 0;
        Self::from_fn(n, |_, _| {
            let b = bytes[k] == b'1';
            k += 1;
            b
        })
    }

    pub fn from_trn(text: &str) -> Result<Self> {
        let body = text.trim_end();
        let mut lines = body.split('\n');
        let head = lines.next().unwrap_or("");
        let n: usize = if !head.is_empty() && head.bytes().all(|b| b.is_ascii_digit()) {
            head.parse()
                .map_err(|_| Error::Parse(format!("order {head:?} out of range")))?
        } else {
            return Err(Error::Parse(format!("first line must be a decimal order, got {head:?}")));
        };
        let pairs = lines
            .next()
            .ok_or_else(|| Error::Parse("missing pair line".into()))?;
        if lines.next().is_some() {
            return Err(Error::Parse("unexpected content after the pair line".into()));
        }
        Self::from_pair_string(n, pairs)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for Tournament {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tournament({}: {})", self.order(), self.pair_string())
    }
}

/// JSON mirror of the TRN format.
#[derive(Serialize, Deserialize)]
struct TrnJson {
    n: usize,
    pairs: String,
}

impl Serialize for Tournament {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TrnJson { n: self.order(), pairs: self.pair_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tournament {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TrnJson::deserialize(d)?;
        Tournament::from_pair_string(raw.n, &raw.pairs).map_err(serde::de::Error::custom)
    }
}

/// Neighbourhood counts of a pair `{u, v}` over the other `n - 2` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairProfile {
    /// `u -> w -> v`, i.e. p₂(u, v).
    pub x1: usize,
    /// Common out-neighbours.
    pub x2: usize,
    /// Common in-neighbours.
    pub x3: usize,
    /// `v -> w -> u`, i.e. p₂(v, u).
    pub x4: usize,
}

impl PairProfile {
    pub fn total(&self) -> usize {
        self.x1 + self.x2 + self.x3 + self.x4
    }
}

/// A directed path: distinct vertices, consecutive ones joined by forward
/// arcs, at least one arc. Carries no reference to its host tournament.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DirectedPath {
    vertices: Vec<usize>,
}

impl DirectedPath {
    /// Validates `vertices` as a path of `t`.
    pub fn new(t: &Tournament, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 2 {
            return arg("a path needs at least two vertices");
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &vertices {
            if v >= t.order() {
                return arg(format!("vertex {v} out of range for n = {}", t.order()));
            }
            if seen.contains(v) {
                return arg(format!("vertex {v} repeated on path"));
            }
            seen = seen.with(v);
        }
        if let Some(w) = vertices.windows(2).find(|w| !t.beats(w[0], w[1])) {
            return arg(format!("no arc {} -> {} in the tournament", w[0], w[1]));
        }
        Ok(DirectedPath { vertices })
    }

    /// For vertex sequences already known to be a path (DP reconstruction).
    pub(crate) fn from_trusted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() >= 2);
        DirectedPath { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    /// Number of vertices p.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of arcs p − 1.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("non-empty")
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::from_vertices(self.vertices.iter().copied())
    }

    pub fn is_hamiltonian_in(&self, t: &Tournament) -> bool {
        self.order() == t.order()
    }

    /// P[u_i, u_j] by positions, `i < j`.
    pub fn subpath(&self, i: usize, j: usize) -> Result<DirectedPath> {
        if i >= j || j >= self.order() {
            return arg(format!("subpath [{i}, {j}] invalid for a path of order {}", self.order()));
        }
        Ok(DirectedPath { vertices: self.vertices[i..=j].to_vec() })
    }

    /// Re-checks the path against a host tournament.
    pub fn is_valid_in(&self, t: &Tournament) -> bool {
        DirectedPath::new(t, self.vertices.clone()).is_ok()
    }
}

impl fmt::Display for DirectedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join("->"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Tournament {
        Tournament::from_rows(vec![0b010, 0b100, 0b001]).unwrap()
    }

    #[test]
    fn arcs_of_small_tournaments() {
        let t = Tournament::transitive(3).unwrap();
        assert!(t.has_arc(0, 2).unwrap());
        assert!(!t.has_arc(2, 0).unwrap());
        assert!(three_cycle().has_arc(2, 0).unwrap());
    }

    #[test]
    fn has_arc_rejects_bad_arguments() {
        let t = three_cycle();
        assert!(matches!(t.has_arc(1, 1), Err(Error::Argument(_))));
        assert!(matches!(t.has_arc(0, 3), Err(Error::Argument(_))));
        assert!(matches!(t.out_degree(5), Err(Error::Argument(_))));
    }

    #[test]
    fn transitive_scores() {
        let t = Tournament::transitive(4).unwrap();
        assert_eq!(t.score_sequence(), vec![3, 2, 1, 0]);
        for u in 0..4 {
            assert_eq!(t.out_degree(u).unwrap() + t.in_degree(u).unwrap(), 3);
        }
    }

    #[test]
    fn profiles() {
        let c = three_cycle();
        let p = c.pair_profile(0, 1).unwrap();
        assert_eq!((p.x1, p.x2, p.x3, p.x4), (0, 0, 0, 1));
        let t = Tournament::transitive(4).unwrap();
        assert_eq!(t.pair_profile(0, 3).unwrap().x1, 2);
        assert!(t.pair_profile(2, 2).is_err());
    }

    #[test]
    fn validate_reports_defects() {
        assert!(validate_rows(&[0b010, 0b100, 0b001]).is_empty());
        let both = validate_rows(&[0b010, 0b001]);
        assert_eq!(both, vec![Violation::BothArcs { u: 0, v: 1 }]);
        let looped = validate_rows(&[0b011, 0b000]);
        assert!(looped.contains(&Violation::Loop { vertex: 0 }));
        assert!(validate_rows(&[0, 0]).contains(&Violation::NoArc { u: 0, v: 1 }));
        assert!(Tournament::from_rows(vec![0b010, 0b001]).is_err());
    }

    #[test]
    fn order_limits() {
        assert!(matches!(Tournament::transitive(1), Err(Error::Argument(_))));
        assert!(matches!(Tournament::transitive(25), Err(Error::Capacity(_))));
        assert!(Tournament::transitive(24).is_ok());
    }

    #[test]
    fn pair_index_is_lexicographic() {
        let n = 6;
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                assert_eq!(pair_index(n, i, j), k);
                k += 1;
            }
        }
    }

    #[test]
    fn trn_text_format() {
        let t = three_cycle();
        // pairs (0,1) (0,2) (1,2): 0->1, 2->0, 1->2
        assert_eq!(t.to_trn(), "3\n101\n");
        assert_eq!(Tournament::from_trn("3\n101\n").unwrap(), t);
        assert_eq!(Tournament::from_trn("3\n101").unwrap(), t);
        assert_eq!(Tournament::from_trn("3\n101\n \n\t\n").unwrap(), t);
        assert!(Tournament::from_trn("3\n10\n").is_err());
        assert!(Tournament::from_trn("3\n1021\n").is_err());
        assert!(Tournament::from_trn("3\n102\n").is_err());
        assert!(Tournament::from_trn(" 3\n101\n").is_err());
        assert!(Tournament::from_trn("3\n101\n1\n").is_err());
        assert!(Tournament::from_trn("3\r\n101\n").is_err());
        assert!(matches!(Tournament::from_trn("30\n0\n"), Err(Error::Capacity(_))));
    }

    #[test]
    fn json_mirror() {
        let t = three_cycle();
        assert_eq!(t.to_json(), r#"{"n":3,"pairs":"101"}"#);
        assert_eq!(Tournament::from_json(r#"{"n":3,"pairs":"101"}"#).unwrap(), t);
        assert!(Tournament::from_json(r#"{"n":3,"pairs":"10"}"#).is_err());
    }

    #[test]
    fn pair_code_roundtrip() {
        for code in 0..64u64 {
            let t = Tournament::from_pair_code(4, code).unwrap();
            assert_eq!(t.pair_code(), Some(code));
        }
    }

    #[test]
    fn paths() {
        let t = Tournament::transitive(4).unwrap();
        let p = DirectedPath::new(&t, vec![0, 2, 3]).unwrap();
        assert_eq!((p.first(), p.last(), p.order(), p.length()), (0, 3, 3, 2));
        assert_eq!(p.subpath(1, 2).unwrap().vertices(), &[2, 3]);
        assert!(DirectedPath::new(&t, vec![3, 0]).is_err());
        assert!(DirectedPath::new(&t, vec![0, 1, 0]).is_err());
        assert!(DirectedPath::new(&t, vec![0]).is_err());
        assert_eq!(p.to_string(), "0->2->3");
    }

    #[test]
    fn relabel_and_induce() {
        let t = three_cycle();
        let r = t.relabel(&[1, 2, 0]).unwrap();
        assert!(r.validate());
        assert!(r.beats(1, 2) && r.beats(2, 0) && r.beats(0, 1));
        assert!(t.relabel(&[0, 0, 1]).is_err());
        let tt = Tournament::transitive(5).unwrap();
        let sub = tt.induced(VertexSet::from_vertices([1, 3, 4])).unwrap();
        assert_eq!(sub, Tournament::transitive(3).unwrap());
    }
}
