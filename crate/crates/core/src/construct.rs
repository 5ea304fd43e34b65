//! Generators for the tournament families used throughout the crate.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{arg, Error, Result};
use crate::tournament::{Tournament, VertexSet, MAX_VERTICES};

/// The seeded generator behind every random construction. ChaCha8 output is
/// fixed by its specification, so a seed means the same stream everywhere.
pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Fisher–Yates with 64-bit range draws, so the permutation does not depend
/// on the platform's pointer width.
pub fn shuffle<R: RngCore>(rng: &mut R, items: &mut [usize]) {
    for i in (1..items.len()).rev() {
        let j = rng.gen_range(0..=i as u64) as usize;
        items.swap(i, j);
    }
}

/// A uniformly random permutation of `0..n`.
pub fn random_permutation(n: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    shuffle(&mut rng_for(seed), &mut perm);
    perm
}

/// Uniform random tournament: each pair `(i, j)`, `i < j`, taken in
/// lexicographic order, is oriented `i -> j` iff the top bit of the next
/// 64-bit ChaCha8 output is set.
pub fn random_tournament(n: usize, seed: u64) -> Result<Tournament> {
    Tournament::check_order(n)?;
    let mut rng = rng_for(seed);
    random_tournament_from(n, &mut rng)
}

pub(crate) fn random_tournament_from<R: RngCore>(n: usize, rng: &mut R) -> Result<Tournament> {
    Tournament::from_fn(n, |_, _| rng.next_u64() >> 63 == 1)
}

pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Nonzero quadratic residues modulo `q`.
fn quadratic_residues(q: usize) -> VertexSet {
    (1..q).map(|x| x * x % q).collect()
}

/// The quadratic-residue tournament on `Z_q`: `i -> j` iff `j − i` is a
/// nonzero square. Doubly regular with λ = (q − 3)/4.
pub fn paley_tournament(q: usize) -> Result<Tournament> {
    if !is_prime(q as u64) || q % 4 != 3 {
        return arg(format!("Paley order must be a prime congruent to 3 mod 4, got {q}"));
    }
    if q > MAX_VERTICES {
        return Err(Error::Capacity(format!("Paley order {q} exceeds {MAX_VERTICES}")));
    }
    circulant_tournament(q, quadratic_residues(q))
}

/// `i -> j` iff `(j − i) mod n` is in `offsets`. `offsets` must hold exactly
/// one of `d`, `n − d` for every `d` in `1..n`.
pub fn circulant_tournament(n: usize, offsets: VertexSet) -> Result<Tournament> {
    if n % 2 == 0 {
        return arg(format!("circulant tournaments need odd order, got {n}"));
    }
    Tournament::check_order(n)?;
    if offsets.contains(0) || !offsets.is_subset_of(VertexSet::full(n)) {
        return arg("offsets must lie in 1..n");
    }
    for d in 1..n {
        if offsets.contains(d) == offsets.contains(n - d) {
            return arg(format!("exactly one of {d} and {} must be an offset", n - d));
        }
    }
    Tournament::from_fn(n, |i, j| offsets.contains(j - i))
}

/// The rotational tournament `i -> i+1, …, i+(n−1)/2 (mod n)`.
pub fn rotational_tournament(n: usize) -> Result<Tournament> {
    circulant_tournament(n, (1..=n / 2).collect())
}

/// Parameters of the three-block construction: blocks of order `4t + 3`
/// with `V_0 -> V_1 -> V_2 -> V_0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T3Spec {
    pub t: usize,
}

impl T3Spec {
    pub fn new(t: usize) -> Result<Self> {
        let spec = T3Spec { t };
        spec.validate()?;
        Ok(spec)
    }

    pub fn block_order(&self) -> usize {
        4 * self.t + 3
    }

    pub fn order(&self) -> usize {
        12 * self.t + 9
    }

    /// Vertex range of block `i`.
    pub fn block(&self, i: usize) -> VertexSet {
        let b = self.block_order();
        (i * b..(i + 1) * b).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.t == 0 {
            return arg("t must be at least 1");
        }
        if !is_prime(self.block_order() as u64) {
            return arg(format!("block order 4t+3 = {} is not prime", self.block_order()));
        }
        if self.order() > MAX_VERTICES {
            return Err(Error::Capacity(format!(
                "t = {} gives n = {} > {MAX_VERTICES}",
                self.t,
                self.order()
            )));
        }
        Ok(())
    }
}

pub fn t3_tournament(spec: T3Spec) -> Result<Tournament> {
    spec.validate()?;
    let b = spec.block_order();
    let block = paley_tournament(b)?;
    Tournament::from_fn(spec.order(), |i, j| {
        let (bi, bj) = (i / b, j / b);
        if bi == bj {
            block.beats(i % b, j % b)
        } else {
            // i < j, so only bj = bi + 1 or (bi, bj) = (0, 2) occur.
            bj == bi + 1
        }
    })
}

/// Parameters of the five-part family: a path `v_0 … v_{p−1}` and the sets
/// N₀⁺, N₁⁺, N₀⁻, N₁⁻ of sizes `n0, n1, n0, n1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct T2Spec {
    pub p: usize,
    pub n0: usize,
    pub n1: usize,
}

/// Where each part of a [`T2Spec`] instance lives.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct T2Layout {
    pub path: VertexSet,
    pub n0_plus: VertexSet,
    pub n1_plus: VertexSet,
    pub n0_minus: VertexSet,
    pub n1_minus: VertexSet,
}

impl T2Spec {
    pub fn new(p: usize, n0: usize, n1: usize) -> Result<Self> {
        let spec = T2Spec { p, n0, n1 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        self.p + 2 * self.n0 + 2 * self.n1
    }

    fn validate(&self) -> Result<()> {
        let T2Spec { p, n0, n1 } = *self;
        if p < 3 || p % 2 == 0 {
            return arg(format!("p must be odd and at least 3, got {p}"));
        }
        if n1 > (p - 1) / 2 {
            return arg(format!("n1 = {n1} exceeds (p-1)/2 = {}", (p - 1) / 2));
        }
        if n0 + n1 < p {
            return arg(format!("n0 + n1 = {} is below p = {p}", n0 + n1));
        }
        if self.order() > MAX_VERTICES {
            return Err(Error::Capacity(format!("n = {} > {MAX_VERTICES}", self.order())));
        }
        Ok(())
    }

    /// Path first, then N₀⁺, N₁⁺, N₀⁻, N₁⁻ as consecutive ranges.
    pub fn layout(&self) -> T2Layout {
        let mut next = 0;
        let mut take = |len: usize| {
            let s: VertexSet = (next..next + len).collect();
            next += len;
            s
        };
        T2Layout {
            path: take(self.p),
            n0_plus: take(self.n0),
            n1_plus: take(self.n1),
            n0_minus: take(self.n0),
            n1_minus: take(self.n1),
        }
    }

    /// Arcs forced by the family definition.
    pub fn forced_arcs(&self) -> Vec<(usize, usize)> {
        let l = self.layout();
        let (first, last) = (0, self.p - 1);
        let mut arcs = Vec::new();
        for i in 0..last {
            arcs.push((i, i + 1));
        }
        for v in l.path {
            arcs.extend(l.n0_plus.iter().map(|x| (v, x)));
            arcs.extend(l.n0_minus.iter().map(|x| (x, v)));
            for x in l.n1_plus {
                arcs.push(if v == first { (x, v) } else { (v, x) });
            }
            for x in l.n1_minus {
                arcs.push(if v == last { (v, x) } else { (x, v) });
            }
        }
        arcs
    }
}

/// Builds a member of the five-part family, orienting the pairs the family
/// leaves open so that the result is regular. `Ok(None)` means the
/// completion search proved that no regular completion exists.
///
/// The search is a backtracking over open pairs, always branching at the
/// most constrained vertex; it is exponential in the worst case.
pub fn t2_tournament(spec: T2Spec, seed: u64) -> Result<Option<Tournament>> {
    spec.validate()?;
    let n = spec.order();
    let mut rng = rng_for(seed);
    Ok(complete_regular(n, &spec.forced_arcs(), &mut rng))
}

#[derive(Clone, Copy)]
struct Completion {
    out: [u32; MAX_VERTICES],
    open: [u32; MAX_VERTICES],
}

/// Orients every pair not covered by `forced` so that all out-degrees equal
/// `(n − 1)/2`, or proves that impossible.
pub fn complete_regular<R: RngCore>(
    n: usize,
    forced: &[(usize, usize)],
    rng: &mut R,
) -> Option<Tournament> {
    if n % 2 == 0 || !(3..=MAX_VERTICES).contains(&n) {
        return None;
    }
    let full = VertexSet::full(n).0;
    let mut st = Completion { out: [0; MAX_VERTICES], open: [0; MAX_VERTICES] };
    for v in 0..n {
        st.open[v] = full & !(1 << v);
    }
    for &(a, b) in forced {
        if st.open[a] >> b & 1 == 0 {
            // Pair already fixed (possibly the other way round).
            if st.out[a] >> b & 1 == 0 {
                return None;
            }
            continue;
        }
        orient(&mut st, a, b);
    }
    let target = (n - 1) / 2;
    let found = search(&mut st, n, target as u32, rng)?;
    Tournament::from_rows(found.out[..n].to_vec()).ok()
}

#[inline]
fn orient(st: &mut Completion, a: usize, b: usize) {
    st.out[a] |= 1 << b;
    st.open[a] &= !(1 << b);
    st.open[b] &= !(1 << a);
}

fn search<R: RngCore>(st: &mut Completion, n: usize, target: u32, rng: &mut R) -> Option<Completion> {
    loop {
        // Bounds check plus forced moves until a fixpoint.
        let mut forced = false;
        let mut pick: Option<(u32, usize)> = None;
        for v in 0..n {
            let out = st.out[v].count_ones();
            let open = st.open[v].count_ones();
            if out > target || out + open < target {
                return None;
            }
            if open == 0 {
                continue;
            }
            let need_out = target - out;
            let need_in = open - need_out;
            if need_out == 0 {
                for w in VertexSet(st.open[v]) {
                    orient(st, w, v);
                }
                forced = true;
            } else if need_in == 0 {
                for w in VertexSet(st.open[v]) {
                    orient(st, v, w);
                }
                forced = true;
            } else {
                let slack = need_out.min(need_in);
                if pick.map_or(true, |(s, _)| slack < s) {
                    pick = Some((slack, v));
                }
            }
        }
        if forced {
            continue;
        }
        let Some((_, v)) = pick else {
            return Some(*st);
        };
        // Partner: the open neighbour that is itself most constrained.
        let w = VertexSet(st.open[v])
            .iter()
            .min_by_key(|&w| {
                let out = st.out[w].count_ones();
                let open = st.open[w].count_ones();
                (target - out).min(out + open - target)
            })
            .expect("open pair exists");
        let first = rng.next_u64() >> 63 == 1;
        for dir in [first, !first] {
            let mut next = *st;
            if dir {
                orient(&mut next, v, w);
            } else {
                orient(&mut next, w, v);
            }
            if let Some(done) = search(&mut next, n, target, rng) {
                return Some(done);
            }
        }
        return None;
    }
}

/// Where each named vertex of the regular tournament without a
/// `(u₀, u₁)`-2-path sits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Figure4Layout {
    pub v0: VertexSet,
    pub v1: VertexSet,
    pub v: usize,
    pub u0: usize,
    pub u1: usize,
    pub w0: usize,
    pub w1: usize,
}

impl Figure4Layout {
    /// The inner tournament occupies `0..2k−3`: V₀ first, then V₁, then v;
    /// u₀, u₁, w₀, w₁ follow.
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return arg(format!("k must be at least 3, got {k}"));
        }
        if 2 * k + 1 > MAX_VERTICES {
            return Err(Error::Capacity(format!("k = {k} gives n = {} > {MAX_VERTICES}", 2 * k + 1)));
        }
        let m = 2 * k - 3;
        Ok(Figure4Layout {
            v0: (0..k - 2).collect(),
            v1: (k - 2..m - 1).collect(),
            v: m - 1,
            u0: m,
            u1: m + 1,
            w0: m + 2,
            w1: m + 3,
        })
    }
}

/// Regular tournament on `2k + 1` vertices with no `(u₀, u₁)`-2-path.
///
/// The inner regular tournament on `2k − 3` vertices is the rotational one;
/// a nonzero `seed` relabels it by a seeded random permutation first.
pub fn figure4_tournament(k: usize, seed: u64) -> Result<Tournament> {
    let layout = Figure4Layout::new(k)?;
    let m = 2 * k - 3;
    let mut inner = rotational_tournament(m)?;
    if seed != 0 {
        inner = inner.relabel(&random_permutation(m, seed))?;
    }
    figure4_from_inner(&inner, &layout)
}

/// The same construction around any regular inner tournament.
pub fn figure4_from_inner(inner: &Tournament, layout: &Figure4Layout) -> Result<Tournament> {
    let m = inner.order();
    if !inner.is_regular() || m != layout.u0 {
        return arg("inner tournament must be regular on 2k-3 vertices");
    }
    let n = m + 4;
    let Figure4Layout { v0, v1, v, u0, u1, w0, w1 } = *layout;
    let mut rows = vec![0u32; n];
    rows[..m].copy_from_slice(inner.rows());
    let mut arc = |a: usize, b: usize| rows[a] |= 1 << b;
    for x in v1 {
        arc(x, u0);
        arc(x, u1);
    }
    for x in v0 {
        arc(u0, x);
        arc(u1, x);
        arc(x, w0);
        arc(x, w1);
    }
    for x in v1 {
        arc(w0, x);
        arc(w1, x);
    }
    arc(w1, u0);
    arc(w1, u1);
    arc(u0, w0);
    arc(u1, w0);
    arc(u0, u1);
    arc(u1, v);
    arc(v, u0);
    arc(w0, v);
    arc(v, w1);
    arc(w0, w1);
    Tournament::from_rows(rows)
}
