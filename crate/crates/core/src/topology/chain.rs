//! The chain space `X = {-1, 0, 1} ∪ {h^i(±1/2) : i ∈ ℤ}` with opens the
//! traces of intervals around 0, and the shift maps induced by `x ↦ ∛x`.
//!
//! An open is a pair of cuts `(neg, pos)`. It contains 0, every point
//! `(side, i)` with `i <= cut` on that side, and the endpoint of a side
//! exactly when that cut is infinite.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};

use crate::dynamics::{self, MeetAlgebra};
use crate::error::{Error, Result};
use crate::verdict::{NEntry, Rejection, Scope, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cut {
    At(i64),
    Inf,
}

impl Cut {
    fn shifted(self, by: i64) -> Self {
        match self {
            Cut::At(c) => Cut::At(c + by),
            Cut::Inf => Cut::Inf,
        }
    }

    fn finite(self) -> Option<i64> {
        match self {
            Cut::At(c) => Some(c),
            Cut::Inf => None,
        }
    }
}

impl fmt::Display for Cut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cut::At(c) => write!(f, "{c}"),
            Cut::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for Cut {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Cut::At(c) => s.serialize_i64(*c),
            Cut::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Cut {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(i64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(c) => Ok(Cut::At(c)),
            Raw::S(s) if s == "inf" => Ok(Cut::Inf),
            Raw::S(s) => Err(de::Error::custom(format!("bad cut {s:?}"))),
        }
    }
}

/// An open set, serialized as `[neg, pos]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(Cut, Cut)", into = "(Cut, Cut)")]
pub struct ChainOpen {
    pub neg: Cut,
    pub pos: Cut,
}

impl From<(Cut, Cut)> for ChainOpen {
    fn from((neg, pos): (Cut, Cut)) -> Self {
        Self { neg, pos }
    }
}

impl From<ChainOpen> for (Cut, Cut) {
    fn from(o: ChainOpen) -> Self {
        (o.neg, o.pos)
    }
}

impl ChainOpen {
    pub fn new(neg: Cut, pos: Cut) -> Self {
        Self { neg, pos }
    }

    pub fn whole() -> Self {
        Self::new(Cut::Inf, Cut::Inf)
    }

    pub fn contains(&self, p: ChainPoint) -> bool {
        match p {
            ChainPoint::Zero => true,
            ChainPoint::End(Side::Neg) => self.neg == Cut::Inf,
            ChainPoint::End(Side::Pos) => self.pos == Cut::Inf,
            ChainPoint::Inner(Side::Neg, i) => Cut::At(i) <= self.neg,
            ChainPoint::Inner(Side::Pos, i) => Cut::At(i) <= self.pos,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Neg,
    Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChainPoint {
    Zero,
    /// `±1`.
    End(Side),
    /// `±h^i(1/2)`; larger `i` is closer to the endpoint.
    Inner(Side, i64),
}

/// A cover, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChainCover(Vec<ChainOpen>);

impl ChainCover {
    /// Fails unless both endpoints are covered.
    pub fn new(mut members: Vec<ChainOpen>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if !members.iter().any(|m| m.neg == Cut::Inf) || !members.iter().any(|m| m.pos == Cut::Inf) {
            return Err(Error::Domain("cover needs a member with an infinite cut on each side".into()));
        }
        Ok(Self(members))
    }

    pub fn members(&self) -> &[ChainOpen] {
        &self.0
    }

    /// `{[-1, h^c(1/2)], [h^d(-1/2), 1]}` shaped pair `{(inf, c), (d, inf)}`.
    pub fn pair(c: i64, d: i64) -> Self {
        Self::new(vec![
            ChainOpen::new(Cut::Inf, Cut::At(c)),
            ChainOpen::new(Cut::At(d), Cut::Inf),
        ])
        .expect("both ends covered")
    }

    /// `{[-1, 1/2), (-1/2, 1]}`.
    pub fn standard() -> Self {
        Self::pair(-1, -1)
    }

    fn min_finite_cut(&self) -> Option<i64> {
        self.0
            .iter()
            .flat_map(|m| [m.neg.finite(), m.pos.finite()])
            .flatten()
            .min()
    }
}

/// Opens under intersection.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChainSpace;

pub fn make_chain_space() -> ChainSpace {
    ChainSpace
}

impl MeetAlgebra for ChainSpace {
    type Member = ChainOpen;

    fn meet(&self, a: ChainOpen, b: ChainOpen) -> ChainOpen {
        ChainOpen::new(a.neg.min(b.neg), a.pos.min(b.pos))
    }

    fn contained(&self, a: ChainOpen, b: ChainOpen) -> bool {
        a.neg <= b.neg && a.pos <= b.pos
    }
}

/// `h^{direction}` where `h` moves every inner point one step toward its
/// endpoint (`x ↦ ∛x`). `direction = -1` is `x ↦ x³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftMap {
    pub direction: i64,
}

pub fn shift_map(direction: i64) -> ShiftMap {
    ShiftMap { direction }
}

impl ShiftMap {
    pub fn apply(&self, p: ChainPoint) -> ChainPoint {
        match p {
            ChainPoint::Inner(s, i) => ChainPoint::Inner(s, i + self.direction),
            other => other,
        }
    }

    /// `h^{-n}(O)` for `n >= 0`.
    pub fn preimage_n(&self, o: ChainOpen, n: usize) -> ChainOpen {
        let by = -self.direction * n as i64;
        ChainOpen::new(o.neg.shifted(by), o.pos.shifted(by))
    }

    pub fn preimage_cover(&self, u: &ChainCover, n: usize) -> ChainCover {
        ChainCover(dynamics::normalize(&ChainSpace, u.0.iter().map(|&o| self.preimage_n(o, n))))
    }
}

/// Irredundant covers with finite cuts in `[-m, m]`: `{X}` first, then the
/// pairs `{(inf, c), (d, inf)}` in lexicographic `(c, d)` order. A third
/// member would be redundant because such a pair already covers `X`.
pub fn window_covers(m: i64) -> Vec<ChainCover> {
    let mut out = vec![ChainCover(vec![ChainOpen::whole()])];
    for c in -m..=m {
        for d in -m..=m {
            out.push(ChainCover::pair(c, d));
        }
    }
    out
}

/// `G_0, ..., G_{n_max}` with `G_n` the normalized wedge of
/// `U, h^{-1}(U), ..., h^{-n}(U)`.
pub fn wedge_sequence(h: ShiftMap, u: &ChainCover, n_max: usize) -> Vec<Vec<ChainOpen>> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut g = dynamics::normalize(&ChainSpace, u.0.iter().copied());
    out.push(g.clone());
    for n in 1..=n_max {
        g = dynamics::product(&ChainSpace, &g, &h.preimage_cover(u, n).0);
        out.push(g.clone());
    }
    out
}

/// Least `n0 <= n_max` from which the wedge sequence is provably constant:
/// `U ≪ h^{-1}(U)` gives `h^{-j}(U) ≪ h^{-(j+1)}(U)` for every `j`, so once
/// `G_{n0} ≪ h^{-(n0+1)}(U)` every later factor is already refined.
pub fn stabilization_index(h: ShiftMap, u: &ChainCover, seq: &[Vec<ChainOpen>]) -> Option<usize> {
    let monotone = dynamics::refines(&ChainSpace, &u.0, &h.preimage_cover(u, 1).0);
    if !monotone {
        return None;
    }
    (0..seq.len()).find(|&n| dynamics::refines(&ChainSpace, &seq[n], &h.preimage_cover(u, n + 1).0))
}

/// Positive expansivity of `h` with cover `u`, tested against every window
/// adversary. Proved verdicts are window-limited; a refutation is exact
/// only when backed by a stabilization index.
pub fn chain_positively_expansive(h: ShiftMap, u: &ChainCover, m: i64, n_max: usize) -> Result<Verdict<ChainCover>> {
    if m < 0 {
        return Err(Error::Domain("window must be nonnegative".into()));
    }
    let u = ChainCover::new(u.0.clone())?;
    let seq = wedge_sequence(h, &u, n_max);
    let stable = stabilization_index(h, &u, &seq);
    let scope = Scope::Window {
        cut_bound: m,
        max_steps: n_max,
    };
    let mut table = Vec::new();
    for adv in window_covers(m) {
        let hit = seq
            .iter()
            .enumerate()
            .find_map(|(n, g)| dynamics::refinement_map(&ChainSpace, g, &adv.0).map(|map| (n, map)));
        match hit {
            Some((n, map)) => table.push(NEntry { target: adv, n, map }),
            None => {
                let mut v = Verdict::refuted(Some(u.clone()), adv, scope.clone());
                match stable {
                    Some(n0) => {
                        v.scope = Scope::Exact;
                        v.stable_from = Some(n0);
                        v.cycle_length = Some(1);
                    }
                    None => v.status = Status::UnknownAtBound,
                }
                return Ok(v);
            }
        }
    }
    let mut v = Verdict::proved(u, scope);
    v.uniform_n = table.iter().map(|e| e.n).max();
    v.n_table = table;
    v.stable_from = stable;
    Ok(v)
}

/// `{(inf, μ-1), (μ-1, inf)}` with `μ` the least finite cut of the
/// candidate (0 for `{X}`). No member of the candidate fits inside it: a
/// member with a finite cut has that cut at least `μ`, and `X` fits nowhere.
pub fn minimal_cover_refuter(candidate: &ChainCover) -> ChainCover {
    let mu = candidate.min_finite_cut().unwrap_or(0);
    ChainCover::pair(mu - 1, mu - 1)
}

/// No cover refines every cover. Every window candidate is listed with its
/// refuter; the refuter rule itself applies to any cover.
pub fn chain_has_minimal_cover(m: i64) -> Result<Verdict<ChainCover>> {
    if m < 0 {
        return Err(Error::Domain("window must be nonnegative".into()));
    }
    let mut rejected = Vec::new();
    for cand in window_covers(m) {
        let refuter = minimal_cover_refuter(&cand);
        if dynamics::refines(&ChainSpace, &cand.0, &refuter.0) {
            return Err(Error::Invariant(format!("refuter fails for {cand:?}")));
        }
        rejected.push(Rejection {
            candidate: cand,
            refuter,
        });
    }
    let mut v = Verdict::refuted(None, rejected[0].refuter.clone(), Scope::Window {
        cut_bound: m,
        max_steps: 0,
    });
    v.rejected = rejected;
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_up_is_positively_expansive() {
        let v = chain_positively_expansive(shift_map(1), &ChainCover::standard(), 5, 12).unwrap();
        assert!(v.is_proved());
        assert!(v.uniform_n.unwrap() <= 12);
        assert_eq!(v.n_table.len(), 122);
    }

    #[test]
    fn shift_down_stabilizes() {
        let v = chain_positively_expansive(shift_map(-1), &ChainCover::standard(), 5, 12).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.scope, Scope::Exact);
        assert_eq!(v.stable_from, Some(0));
    }

    #[test]
    fn no_minimal_cover() {
        let v = chain_has_minimal_cover(3).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.rejected.len(), 50);
    }

    #[test]
    fn cut_json() {
        let c = ChainCover::standard();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"[[-1,"inf"],["inf",-1]]"#);
        assert_eq!(serde_json::from_str::<ChainCover>(&s).unwrap(), c);
    }

    #[test]
    fn malformed_cover() {
        assert!(ChainCover::new(vec![ChainOpen::new(Cut::Inf, Cut::At(0))]).is_err());
    }
}
