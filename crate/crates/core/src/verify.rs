//! Executable checks for each inequality and implication about 2-paths,
//! surplus and path extendability, plus exhaustive and sampled sweeps.
//!
//! Every failing check carries a witness (the tournament in TRN form plus
//! the offending pair, set or path) that [`recheck_witness`] re-evaluates
//! from the serialized data alone.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::construct::random_tournament;
use crate::error::{arg, Error, Result};
use crate::extend::{is_path_extendable, nonextendable_paths, ExtendabilityVerdict};
use crate::iso::{canonical_form, dedup_isomorphic};
use crate::metrics::{
    classify_against_path, irregularity, p2_unchecked, pi2, set_surplus_bound, SurplusReport,
};
use crate::tournament::{pair_count, DirectedPath, Tournament, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    /// π₂(T) ≤ (n−3)/4, and ≤ (n−4)/4 for even n.
    #[serde(rename = "PI2_SUP")]
    Pi2Sup,
    /// min{δ⁺, δ⁻} = (n − i(T) − 1)/2.
    #[serde(rename = "DEG_IDENT")]
    DegIdent,
    /// p₂(u,v) − p₂(v,u) = d⁺(u) − d⁺(v) ∓ 1.
    #[serde(rename = "P2_DIFF")]
    P2Diff,
    /// Pair surplus lower bounds.
    #[serde(rename = "PAIR_SURPLUS")]
    PairSurplus,
    /// Set surplus bound and the structure of its equality cases.
    #[serde(rename = "SET_SURPLUS")]
    SetSurplus,
    /// s(W) ≥ C(|W|, 2) in regular tournaments.
    #[serde(rename = "REG_SURPLUS")]
    RegSurplus,
    /// i(T) ≤ n − 4π₂(T) − 3.
    #[serde(rename = "I_PI")]
    IPi,
    /// Regular, n ≥ 9, π₂ > (n−9)/12 ⟹ path extendable.
    #[serde(rename = "THM15")]
    RegularDense,
    /// π₂ > (7n−10)/36 ⟹ path extendable.
    #[serde(rename = "THM16")]
    Dense,
    /// n ≥ 9, π₂ > (n−9)/12, i < 2π₂ − (n+8)/6 ⟹ path extendable.
    #[serde(rename = "THM17")]
    NearRegular,
    /// Doubly regular on ≥ 7 vertices ⟹ path extendable.
    #[serde(rename = "THM18")]
    DoublyRegular,
    /// π₂ ≥ 1 ⟹ every non-extendable path has order ≥ 3π₂ + 3.
    #[serde(rename = "LB_P")]
    LbP,
    /// Non-extendable P with a hybrid vertex of its interior ⟹ h(P) ≤ i + 2.
    #[serde(rename = "HYBRID")]
    Hybrid,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Pi2Sup,
        TheoremId::DegIdent,
        TheoremId::P2Diff,
        TheoremId::PairSurplus,
        TheoremId::SetSurplus,
        TheoremId::RegSurplus,
        TheoremId::IPi,
        TheoremId::RegularDense,
        TheoremId::Dense,
        TheoremId::NearRegular,
        TheoremId::DoublyRegular,
        TheoremId::LbP,
        TheoremId::Hybrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Pi2Sup => "PI2_SUP",
            TheoremId::DegIdent => "DEG_IDENT",
            TheoremId::P2Diff => "P2_DIFF",
            TheoremId::PairSurplus => "PAIR_SURPLUS",
            TheoremId::SetSurplus => "SET_SURPLUS",
            TheoremId::RegSurplus => "REG_SURPLUS",
            TheoremId::IPi => "I_PI",
            TheoremId::RegularDense => "THM15",
            TheoremId::Dense => "THM16",
            TheoremId::NearRegular => "THM17",
            TheoremId::DoublyRegular => "THM18",
            TheoremId::LbP => "LB_P",
            TheoremId::Hybrid => "HYBRID",
        }
    }

    /// Whether the check may need the extendability DP.
    pub fn needs_extendability(self) -> bool {
        matches!(
            self,
            TheoremId::RegularDense | TheoremId::Dense | TheoremId::NearRegular | TheoremId::DoublyRegular | TheoremId::LbP | TheoremId::Hybrid
        )
    }

    /// Parses a comma-separated list, `all` meaning every id.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown theorem id {s:?}")))
    }
}

/// What a failing check points at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// TRN encoding of the tournament.
    pub tournament: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<usize>>,
}

impl Witness {
    fn of(t: &Tournament) -> Self {
        Witness { tournament: t.to_trn(), pair: None, set: None, path: None }
    }

    fn with_pair(t: &Tournament, u: usize, v: usize) -> Self {
        Witness { pair: Some((u, v)), ..Witness::of(t) }
    }

    fn with_set(t: &Tournament, w: VertexSet) -> Self {
        Witness { set: Some(w.to_vec()), ..Witness::of(t) }
    }

    fn with_path(t: &Tournament, p: &DirectedPath) -> Self {
        Witness { path: Some(p.vertices().to_vec()), ..Witness::of(t) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCheckResult {
    pub theorem_id: TheoremId,
    pub holds: bool,
    /// The hypothesis was false, or there was nothing to quantify over.
    pub vacuous: bool,
    pub witness: Option<Witness>,
    pub details: Map<String, Value>,
}

impl TheoremCheckResult {
    fn new(theorem_id: TheoremId) -> Self {
        TheoremCheckResult { theorem_id, holds: true, vacuous: false, witness: None, details: Map::new() }
    }

    fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    fn fail(&mut self, witness: Witness) {
        self.holds = false;
        self.witness = Some(witness);
    }

    fn vacuous(mut self) -> Self {
        self.vacuous = true;
        self
    }
}

/// Knobs for the quantified checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOptions {
    /// Largest |W| enumerated by the set-surplus checks.
    pub max_set_size: usize,
    /// Certificates requested for LB_P and HYBRID.
    pub certificate_limit: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_set_size: 6, certificate_limit: 100_000 }
    }
}

/// Per-tournament quantities, computed on first use and shared by all checks.
pub struct Facts<'a> {
    pub t: &'a Tournament,
    opts: CheckOptions,
    pi2: OnceCell<usize>,
    irregularity: OnceCell<usize>,
    surplus: OnceCell<SurplusReport>,
    verdict: OnceCell<Result<ExtendabilityVerdict>>,
    certificates: OnceCell<Result<Vec<DirectedPath>>>,
}

impl<'a> Facts<'a> {
    pub fn new(t: &'a Tournament, opts: CheckOptions) -> Self {
        Facts {
            t,
            opts,
            pi2: OnceCell::new(),
            irregularity: OnceCell::new(),
            surplus: OnceCell::new(),
            verdict: OnceCell::new(),
            certificates: OnceCell::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.t.order()
    }

    pub fn pi2(&self) -> usize {
        *self.pi2.get_or_init(|| pi2(self.t))
    }

    pub fn irregularity(&self) -> usize {
        *self.irregularity.get_or_init(|| irregularity(self.t))
    }

    pub fn surplus(&self) -> &SurplusReport {
        self.surplus.get_or_init(|| SurplusReport::new(self.t))
    }

    pub fn verdict(&self) -> Result<&ExtendabilityVerdict> {
        self.verdict
            .get_or_init(|| is_path_extendable(self.t, 1))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn certificates(&self) -> Result<&[DirectedPath]> {
        self.certificates
            .get_or_init(|| nonextendable_paths(self.t, self.opts.certificate_limit))
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }
}

/// Whether every pair has the same number of common out-neighbours.
pub fn is_doubly_regular(t: &Tournament) -> bool {
    if !t.is_regular() {
        return false;
    }
    let n = t.order();
    let lambda = if n >= 2 { t.out_set(0).intersect(t.out_set(1)).len() } else { 0 };
    (0..n).all(|u| (u + 1..n).all(|v| t.out_set(u).intersect(t.out_set(v)).len() == lambda))
}

pub fn check(t: &Tournament, id: TheoremId) -> Result<TheoremCheckResult> {
    check_with(&Facts::new(t, CheckOptions::default()), id)
}

pub fn check_all(t: &Tournament, ids: &[TheoremId], opts: CheckOptions) -> Result<Vec<TheoremCheckResult>> {
    let facts = Facts::new(t, opts);
    ids.iter().map(|&id| check_with(&facts, id)).collect()
}

pub fn check_with(f: &Facts<'_>, id: TheoremId) -> Result<TheoremCheckResult> {
    let mut r = TheoremCheckResult::new(id);
    let t = f.t;
    let n = f.n() as i64;
    match id {
        TheoremId::Pi2Sup => {
            if n < 3 {
                r.detail("n", n);
                return Ok(r.vacuous());
            }
            let pi = f.pi2() as i64;
            let bound4 = if n % 2 == 0 { n - 4 } else { n - 3 };
            r.detail("pi2", pi);
            r.detail("bound", bound4 as f64 / 4.0);
            r.detail("slack", bound4 as f64 / 4.0 - pi as f64);
            if 4 * pi > bound4 {
                let (_, (u, v)) = crate::metrics::pi2_with_argmin(t);
                r.fail(Witness::with_pair(t, u, v));
            }
        }
        TheoremId::DegIdent => {
            let (dout, din) = t.min_degrees();
            let i = f.irregularity() as i64;
            r.detail("min_degree", dout.min(din) as i64);
            r.detail("i", i);
            if 2 * dout.min(din) as i64 != n - 1 - i {
                r.fail(Witness::of(t));
            }
        }
        TheoremId::P2Diff => {
            'pairs: for u in 0..t.order() {
                for v in u + 1..t.order() {
                    let prof = t.profile(u, v);
                    let du = t.out_set(u).len() as i64;
                    let dv = t.out_set(v).len() as i64;
                    let diff = prof.x1 as i64 - prof.x4 as i64;
                    let expected = if t.beats(u, v) { du - dv - 1 } else { du - dv + 1 };
                    if diff != expected || prof.total() as i64 != n - 2 {
                        r.fail(Witness::with_pair(t, u, v));
                        break 'pairs;
                    }
                }
            }
        }
        TheoremId::PairSurplus => {
            let s = f.surplus();
            'pairs: for a in 0..t.order() {
                for b in a + 1..t.order() {
                    if !pair_surplus_law_holds(t, s, a, b) {
                        r.fail(Witness::with_pair(t, a, b));
                        break 'pairs;
                    }
                }
            }
        }
        TheoremId::SetSurplus => {
            let s = f.surplus();
            let mut equalities = 0u64;
            let mut sets = 0u64;
            for w in subsets_up_to(t.order(), f.opts.max_set_size) {
                sets += 1;
                let value = s.set_surplus(w);
                let bound = set_surplus_bound(w.len());
                if value < bound {
                    r.fail(Witness::with_set(t, w));
                    break;
                }
                if value == bound {
                    equalities += 1;
                    if !surplus_equality_structure(t, w).is_some_and(|st| st.matches()) {
                        r.fail(Witness::with_set(t, w));
                        break;
                    }
                }
            }
            r.detail("sets", sets);
            r.detail("equality_sets", equalities);
        }
        TheoremId::RegSurplus => {
            if !t.is_regular() {
                return Ok(r.vacuous());
            }
            let s = f.surplus();
            for w in subsets_up_to(t.order(), f.opts.max_set_size) {
                if s.set_surplus(w) < pair_count(w.len()) {
                    r.fail(Witness::with_set(t, w));
                    break;
                }
            }
        }
        TheoremId::IPi => {
            let i = f.irregularity() as i64;
            let pi = f.pi2() as i64;
            let bound = n - 4 * pi - 3;
            r.detail("i", i);
            r.detail("pi2", pi);
            r.detail("bound", bound);
            r.detail("slack", bound - i);
            if i > bound {
                r.fail(Witness::of(t));
            }
        }
        TheoremId::RegularDense | TheoremId::Dense | TheoremId::NearRegular | TheoremId::DoublyRegular => {
            let pi = f.pi2() as i64;
            let i = f.irregularity() as i64;
            r.detail("pi2", pi);
            r.detail("i", i);
            let hypothesis = match id {
                TheoremId::RegularDense => {
                    r.detail("regular", t.is_regular());
                    r.detail("threshold", (n - 9) as f64 / 12.0);
                    t.is_regular() && n >= 9 && 12 * pi > n - 9
                }
                TheoremId::Dense => {
                    r.detail("threshold", (7 * n - 10) as f64 / 36.0);
                    36 * pi > 7 * n - 10
                }
                TheoremId::NearRegular => {
                    let rhs = 2.0 * pi as f64 - (n + 8) as f64 / 6.0;
                    r.detail("i_threshold", rhs);
                    if 12 * pi > n - 9 {
                        r.detail("case_gap", case_gap(pi, n));
                    }
                    n >= 9 && 12 * pi > n - 9 && 6 * i < 12 * pi - n - 8
                }
                _ => {
                    let dr = is_doubly_regular(t);
                    r.detail("doubly_regular", dr);
                    dr && n >= 7
                }
            };
            r.detail("hypothesis", hypothesis);
            if !hypothesis {
                return Ok(r.vacuous());
            }
            let verdict = f.verdict()?;
            r.detail("extendable", verdict.extendable);
            if let Some(cert) = &verdict.certificate {
                r.fail(Witness::with_path(t, cert));
            }
        }
        TheoremId::LbP => {
            let pi = f.pi2();
            r.detail("pi2", pi);
            if pi < 1 {
                return Ok(r.vacuous());
            }
            let certs = f.certificates()?;
            r.detail("certificates", certs.len());
            if let Some(min) = certs.iter().map(|p| p.order()).min() {
                r.detail("min_order", min);
                r.detail("slack", min as i64 - (3 * pi as i64 + 3));
            }
            if let Some(bad) = certs.iter().find(|p| p.order() < 3 * pi + 3) {
                r.fail(Witness::with_path(t, bad));
            }
            if certs.is_empty() {
                return Ok(r.vacuous());
            }
        }
        TheoremId::Hybrid => {
            let i = f.irregularity();
            let certs = f.certificates()?;
            let mut applicable = 0u64;
            for p in certs {
                if p.order() < 4 {
                    continue;
                }
                let ctx = classify_against_path(t, p)?;
                if !ctx.interior_has_hybrid() {
                    continue;
                }
                applicable += 1;
                if ctx.hybrid_count() > i + 2 {
                    r.fail(Witness::with_path(t, p));
                    break;
                }
            }
            r.detail("i", i);
            r.detail("applicable_paths", applicable);
            if applicable == 0 {
                return Ok(r.vacuous());
            }
        }
    }
    Ok(r)
}

/// 6π₂ − (n−5)/2 − (2π₂ − (n+8)/6): positive whenever π₂ > (n−9)/12.
pub fn case_gap(pi: i64, n: i64) -> f64 {
    6.0 * pi as f64 - (n - 5) as f64 / 2.0 - (2.0 * pi as f64 - (n + 8) as f64 / 6.0)
}

/// The pair-surplus law for the unordered pair {a, b}, tried with both
/// labellings that satisfy d⁺(u) ≥ d⁺(v).
fn pair_surplus_law_holds(t: &Tournament, s: &SurplusReport, a: usize, b: usize) -> bool {
    let sur = s.pair(a, b) as i64;
    let (da, db) = (t.out_set(a).len() as i64, t.out_set(b).len() as i64);
    let mut orders = Vec::with_capacity(2);
    if da >= db {
        orders.push((a, b, da, db));
    }
    if db >= da {
        orders.push((b, a, db, da));
    }
    orders.into_iter().all(|(u, v, du, dv)| {
        if t.beats(u, v) {
            sur >= (du - dv - 1).abs()
        } else {
            sur >= (du - dv + 1).abs() && (du - dv + 1).abs() >= 1
        }
    }) && (sur != 0 || ((da - db).abs() == 1 && t.beats(if da > db { a } else { b }, if da > db { b } else { a })))
}

/// All vertex sets of size `2..=max` in `0..n`, in increasing bit order.
fn subsets_up_to(n: usize, max: usize) -> impl Iterator<Item = VertexSet> {
    let max = max.min(n);
    (0u32..(1u32 << n)).map(VertexSet).filter(move |w| (2..=max).contains(&w.len()))
}

/// Which equality case a set fits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EqualityCase {
    /// Two consecutive degree classes, `W₁ -> W₀`.
    TwoClasses,
    /// Degrees `d−1, d, d+1`, `W_i -> W_j` for `i > j`.
    ThreeClasses,
}

/// Degree-class partition of a set attaining the set-surplus bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurplusEqualityStructure {
    pub case: EqualityCase,
    pub w0: VertexSet,
    pub w1: VertexSet,
    /// Empty in the two-class case.
    pub w2: VertexSet,
    /// Out-degree of `W₀` (two classes) or of `W₁` (three classes).
    pub degree_base: usize,
    pub balanced: bool,
    pub dominations: bool,
    pub size_cap: bool,
}

impl SurplusEqualityStructure {
    pub fn matches(&self) -> bool {
        self.balanced && self.dominations && self.size_cap
    }
}

fn dominates(t: &Tournament, a: VertexSet, b: VertexSet) -> bool {
    a.iter().all(|x| b.is_subset_of(t.out_set(x)))
}

/// Splits `w` into degree classes and reports how it measures against the
/// two admissible shapes; `None` if the degrees are neither two nor three
/// consecutive values.
pub fn surplus_equality_structure(t: &Tournament, w: VertexSet) -> Option<SurplusEqualityStructure> {
    let n = t.order();
    let deg = |v: usize| t.out_set(v).len();
    let lo = w.iter().map(deg).min()?;
    let hi = w.iter().map(deg).max()?;
    let class = |d: usize| -> VertexSet { w.iter().filter(|&v| deg(v) == d).collect() };
    let size = w.len();
    let halves = |a: usize, b: usize| {
        let (x, y) = (a.min(b), a.max(b));
        x == size / 2 && y == size.div_ceil(2)
    };
    match hi - lo {
        1 => {
            let (w0, w1) = (class(lo), class(hi));
            Some(SurplusEqualityStructure {
                case: EqualityCase::TwoClasses,
                w0,
                w1,
                w2: VertexSet::EMPTY,
                degree_base: lo,
                balanced: halves(w0.len(), w1.len()),
                dominations: dominates(t, w1, w0),
                size_cap: 2 * size <= n + 1,
            })
        }
        2 => {
            let (w0, w1, w2) = (class(lo), class(lo + 1), class(hi));
            if w1.is_empty() {
                return None;
            }
            Some(SurplusEqualityStructure {
                case: EqualityCase::ThreeClasses,
                w0,
                w1,
                w2,
                degree_base: lo + 1,
                balanced: halves(w0.len() + w2.len(), w1.len()),
                dominations: dominates(t, w2, w1) && dominates(t, w1, w0) && dominates(t, w2, w0),
                size_cap: 3 * size <= n + 6,
            })
        }
        _ => None,
    }
}

/// Re-evaluates a failing check from its witness alone. Returns `true` when
/// the witness does show a violation.
pub fn recheck_witness(id: TheoremId, w: &Witness) -> Result<bool> {
    let t = Tournament::from_trn(&w.tournament)?;
    let n = t.order() as i64;
    fn need<T>(id: TheoremId, o: Option<T>) -> Result<T> {
        o.ok_or_else(|| Error::Argument(format!("{id} witness lacks its object")))
    }
    Ok(match id {
        TheoremId::Pi2Sup => {
            let (u, v) = need(id, w.pair)?;
            let bound4 = if n % 2 == 0 { n - 4 } else { n - 3 };
            // π₂ ≤ p₂(u,v) always, so an argmin pair above the bound suffices.
            n >= 3 && 4 * p2_unchecked(&t, u, v) as i64 > bound4 && p2_unchecked(&t, u, v) == pi2(&t)
        }
        TheoremId::DegIdent => {
            let (a, b) = t.min_degrees();
            2 * a.min(b) as i64 != n - 1 - irregularity(&t) as i64
        }
        TheoremId::P2Diff => {
            let (u, v) = need(id, w.pair)?;
            let prof = t.pair_profile(u, v)?;
            let du = t.out_set(u).len() as i64;
            let dv = t.out_set(v).len() as i64;
            let expected = if t.beats(u, v) { du - dv - 1 } else { du - dv + 1 };
            prof.x1 as i64 - prof.x4 as i64 != expected
        }
        TheoremId::PairSurplus => {
            let (a, b) = need(id, w.pair)?;
            !pair_surplus_law_holds(&t, &SurplusReport::new(&t), a, b)
        }
        TheoremId::SetSurplus => {
            let set = VertexSet::from_vertices(need(id, w.set.clone())?);
            let value = SurplusReport::new(&t).set_surplus(set);
            let bound = set_surplus_bound(set.len());
            value < bound
                || (value == bound && !surplus_equality_structure(&t, set).is_some_and(|s| s.matches()))
        }
        TheoremId::RegSurplus => {
            let set = VertexSet::from_vertices(need(id, w.set.clone())?);
            t.is_regular() && SurplusReport::new(&t).set_surplus(set) < pair_count(set.len())
        }
        TheoremId::IPi => irregularity(&t) as i64 > n - 4 * pi2(&t) as i64 - 3,
        TheoremId::RegularDense | TheoremId::Dense | TheoremId::NearRegular | TheoremId::DoublyRegular => {
            let path = DirectedPath::new(&t, need(id, w.path.clone())?)?;
            let facts = Facts::new(&t, CheckOptions::default());
            let hyp = check_with(&facts, id)?;
            !hyp.vacuous && crate::extend::extend_path(&t, &path)?.is_none()
        }
        TheoremId::LbP => {
            let path = DirectedPath::new(&t, need(id, w.path.clone())?)?;
            let pi = pi2(&t);
            pi >= 1 && path.order() < 3 * pi + 3 && crate::extend::extend_path(&t, &path)?.is_none()
        }
        TheoremId::Hybrid => {
            let path = DirectedPath::new(&t, need(id, w.path.clone())?)?;
            let ctx = classify_against_path(&t, &path)?;
            crate::extend::extend_path(&t, &path)?.is_none()
                && ctx.interior_has_hybrid()
                && ctx.hybrid_count() > irregularity(&t) + 2
        }
    })
}

/// Tally for one theorem across a sweep.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremTally {
    pub theorem_id: TheoremId,
    pub checked: u64,
    pub vacuous: u64,
    pub failures: u64,
    /// Failure on the lowest-index tournament.
    pub first_witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub n: usize,
    pub mode: String,
    /// Tournaments generated.
    pub tournaments: u64,
    /// Tournaments passing the π₂ filter and therefore checked.
    pub examined: u64,
    pub theorems: Vec<TheoremTally>,
}

impl SweepSummary {
    pub fn total_failures(&self) -> u64 {
        self.theorems.iter().map(|t| t.failures).sum()
    }

    pub fn tally(&self, id: TheoremId) -> Option<&TheoremTally> {
        self.theorems.iter().find(|t| t.theorem_id == id)
    }
}

/// Options shared by exhaustive and sampled sweeps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub check: CheckOptions,
    /// Skip tournaments with π₂ below this.
    pub min_pi2: Option<usize>,
}

#[derive(Clone)]
struct Partial {
    examined: u64,
    tallies: Vec<(u64, u64, u64, Option<(u64, Witness)>)>,
}

impl Partial {
    fn new(k: usize) -> Self {
        Partial { examined: 0, tallies: vec![(0, 0, 0, None); k] }
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.examined += other.examined;
        for (a, b) in self.tallies.iter_mut().zip(other.tallies) {
            a.0 += b.0;
            a.1 += b.1;
            a.2 += b.2;
            a.3 = match (a.3.take(), b.3) {
                (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
                (x, y) => x.or(y),
            };
        }
        self
    }
}

fn run_sweep(
    n: usize,
    mode: String,
    count: u64,
    make: impl Fn(u64) -> Result<Tournament> + Sync,
    ids: &[TheoremId],
    opts: SweepOptions,
) -> Result<SweepSummary> {
    let k = ids.len();
    let partial = (0..count)
        .into_par_iter()
        .try_fold(
            || Partial::new(k),
            |mut acc, index| -> Result<Partial> {
                let t = make(index)?;
                let facts = Facts::new(&t, opts.check);
                if opts.min_pi2.is_some_and(|m| facts.pi2() < m) {
                    return Ok(acc);
                }
                acc.examined += 1;
                for (slot, &id) in acc.tallies.iter_mut().zip(ids) {
                    let r = check_with(&facts, id)?;
                    slot.0 += 1;
                    if r.vacuous {
                        slot.1 += 1;
                    }
                    if !r.holds {
                        slot.2 += 1;
                        if slot.3.as_ref().map_or(true, |(i, _)| index < *i) {
                            slot.3 = Some((index, r.witness.expect("failures carry witnesses")));
                        }
                    }
                }
                Ok(acc)
            },
        )
        .try_reduce(|| Partial::new(k), |a, b| Ok(a.merge(b)))?;
    Ok(SweepSummary {
        n,
        mode,
        tournaments: count,
        examined: partial.examined,
        theorems: ids
            .iter()
            .zip(partial.tallies)
            .map(|(&theorem_id, (checked, vacuous, failures, first))| TheoremTally {
                theorem_id,
                checked,
                vacuous,
                failures,
                first_witness: first.map(|(_, w)| w),
            })
            .collect(),
    })
}

/// Largest order swept exhaustively (2²¹ labelled tournaments at n = 7).
pub const MAX_EXHAUSTIVE_ORDER: usize = 7;

/// Checks every labelled tournament on `n` vertices.
pub fn sweep_exhaustive(n: usize, ids: &[TheoremId], opts: SweepOptions) -> Result<SweepSummary> {
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::Capacity(format!(
            "exhaustive sweeps stop at n = {MAX_EXHAUSTIVE_ORDER}; use sampling for n = {n}"
        )));
    }
    Tournament::check_order(n)?;
    let count = 1u64 << pair_count(n);
    run_sweep(n, "exhaustive".into(), count, |code| Tournament::from_pair_code(n, code), ids, opts)
}

/// Seed of sample `index` in a sampled sweep: the first word of ChaCha8
/// stream `index` under `seed`.
pub fn sample_seed(seed: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng.next_u64()
}

/// Checks `samples` uniformly random tournaments on `n` vertices.
pub fn sweep_sampled(n: usize, ids: &[TheoremId], samples: u64, seed: u64, opts: SweepOptions) -> Result<SweepSummary> {
    Tournament::check_order(n)?;
    run_sweep(
        n,
        format!("sampled(seed={seed})"),
        samples,
        |i| random_tournament(n, sample_seed(seed, i)),
        ids,
        opts,
    )
}

/// Largest order accepted by [`enumerate_regular`].
pub const MAX_REGULAR_ENUMERATION: usize = 9;

/// All regular tournaments on `n` vertices up to isomorphism, each in its
/// canonical (least pair string) labelling, sorted by pair string.
///
/// Backtracks over pairs with vertex 0 beating exactly `1..=(n−1)/2` (every
/// regular tournament has such a labelling), prunes on out-degrees, then
/// reduces by isomorphism.
pub fn enumerate_regular(n: usize) -> Result<Vec<Tournament>> {
    if n % 2 == 0 || n < 3 {
        return arg(format!("regular tournaments need odd order >= 3, got {n}"));
    }
    if n > MAX_REGULAR_ENUMERATION {
        return Err(Error::Capacity(format!("regular enumeration stops at n = {MAX_REGULAR_ENUMERATION}")));
    }
    let labelled = regular_labelled_rooted(n);
    let mut reps: Vec<Tournament> = dedup_isomorphic(labelled).iter().map(canonical_form).collect();
    reps.sort_by_key(|t| t.pair_string());
    Ok(reps)
}

/// Every labelled regular tournament on `n` vertices with `N⁺(0) = {1..r}`.
pub(crate) fn regular_labelled_rooted(n: usize) -> Vec<Tournament> {
    let r = (n - 1) / 2;
    let mut out = vec![0u32; n];
    for v in 1..=r {
        out[0] |= 1 << v;
    }
    for v in r + 1..n {
        out[v] |= 1;
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    // Pairs still open per vertex, in the order they will be decided.
    let mut open = vec![0usize; n];
    for &(i, j) in &pairs {
        open[i] += 1;
        open[j] += 1;
    }
    let mut found = Vec::new();
    fn go(
        k: usize,
        pairs: &[(usize, usize)],
        out: &mut Vec<u32>,
        open: &mut Vec<usize>,
        r: u32,
        found: &mut Vec<Tournament>,
    ) {
        if k == pairs.len() {
            found.push(Tournament::from_rows(out.clone()).expect("complete orientation"));
            return;
        }
        let (i, j) = pairs[k];
        open[i] -= 1;
        open[j] -= 1;
        for (a, b) in [(i, j), (j, i)] {
            out[a] |= 1 << b;
            let ok = |v: usize, out: &Vec<u32>| {
                let d = out[v].count_ones();
                d <= r && d + open[v] as u32 >= r
            };
            if ok(a, out) && ok(b, out) {
                go(k + 1, pairs, out, open, r, found);
            }
            out[a] &= !(1 << b);
        }
        open[i] += 1;
        open[j] += 1;
    }
    go(0, &pairs, &mut out, &mut open, r as u32, &mut found);
    found
}

/// Regular 7-vertex classes that are not {2+}-path extendable, in
/// enumeration order.
pub fn t0_candidates() -> Result<Vec<Tournament>> {
    let mut failing = Vec::new();
    for t in enumerate_regular(7)? {
        if !is_path_extendable(&t, 2)?.extendable {
            failing.push(t);
        }
    }
    Ok(failing)
}

/// The single regular 7-vertex class that is not {2+}-path extendable.
/// Any other count is reported as an error rather than guessed around.
pub fn rediscover_t0() -> Result<Tournament> {
    let mut failing = t0_candidates()?;
    if failing.len() != 1 {
        return Err(Error::Domain(format!(
            "expected exactly one regular 7-vertex class failing {{2+}}-path extendability, found {}",
            failing.len()
        )));
    }
    Ok(failing.pop().expect("one element"))
}

/// Per-class report used by the CLI.
pub fn regular_class_report(t: &Tournament) -> Result<Value> {
    let v1 = is_path_extendable(t, 1)?;
    let v2 = is_path_extendable(t, 2)?;
    Ok(json!({
        "tournament": t,
        "pi2": pi2(t),
        "doubly_regular": is_doubly_regular(t),
        "path_extendable": v1.extendable,
        "two_plus_extendable": v2.extendable,
        "certificate_k2": v2.certificate,
    }))
}
