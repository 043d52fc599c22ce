//! Finite T0 spaces as posets. Opens are the down-sets of the
//! specialization order, stored as `u64` point masks.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::dynamics::{self, MeetAlgebra, Trace, Window};
use crate::error::{Error, Result};
use crate::verdict::{Rejection, Scope, Status, Verdict};

static NEXT_SPACE_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceId(u64);

/// Points as a list of indices, the serialized form of an open set.
pub type PointList = Vec<usize>;

pub fn mask_points(m: u64) -> PointList {
    (0..64).filter(|&p| m >> p & 1 == 1).collect()
}

pub fn points_mask(points: &[usize]) -> u64 {
    points.iter().fold(0, |m, &p| m | 1 << p)
}

#[derive(Debug, Clone)]
pub struct FiniteSpace {
    id: SpaceId,
    n: usize,
    /// `below[p]`: every `q <= p`, including `p`.
    below: Vec<u64>,
    above: Vec<u64>,
    labels: Vec<String>,
}

impl FiniteSpace {
    /// Builds the space of a partial order given by `le`. Fails unless `le`
    /// is reflexive, transitive and antisymmetric.
    pub fn from_order(n: usize, le: impl Fn(usize, usize) -> bool, labels: Vec<String>) -> Result<Self> {
        if n > 64 {
            return Err(Error::capacity("space points", n, 64));
        }
        if labels.len() != n {
            return Err(Error::Domain("one label per point".into()));
        }
        let mut below = vec![0u64; n];
        let mut above = vec![0u64; n];
        for p in 0..n {
            if !le(p, p) {
                return Err(Error::validation("order is not reflexive", Some((p as u32, p as u32))));
            }
            for q in 0..n {
                if le(q, p) {
                    below[p] |= 1 << q;
                    above[q] |= 1 << p;
                    if p != q && le(p, q) {
                        return Err(Error::validation(
                            "order is not antisymmetric (space not T0)",
                            Some((p as u32, q as u32)),
                        ));
                    }
                }
            }
        }
        for p in 0..n {
            for q in mask_points(below[p]) {
                if below[q] & !below[p] != 0 {
                    return Err(Error::validation("order is not transitive", Some((q as u32, p as u32))));
                }
            }
        }
        Ok(Self {
            id: SpaceId(NEXT_SPACE_ID.fetch_add(1, Ordering::Relaxed)),
            n,
            below,
            above,
            labels,
        })
    }

    fn default_labels(n: usize) -> Vec<String> {
        (0..n).map(|p| p.to_string()).collect()
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::from_order(n, |a, b| a == b || pairs.contains(&(a, b)), Self::default_labels(n))
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_order(n, |a, b| a == b, Self::default_labels(n)).expect("discrete order")
    }

    /// Two points, `0 <= 1`: `{0}` is open and `1` is closed.
    pub fn sierpinski() -> Self {
        Self::from_pairs(2, &[(0, 1)]).expect("valid order")
    }

    pub fn id(&self) -> SpaceId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn le(&self, p: usize, q: usize) -> bool {
        self.below[q] >> p & 1 == 1
    }

    pub fn below(&self, p: usize) -> u64 {
        self.below[p]
    }

    pub fn above(&self, p: usize) -> u64 {
        self.above[p]
    }

    pub fn is_open(&self, m: u64) -> bool {
        m & !self.full() == 0 && mask_points(m).iter().all(|&p| self.below[p] & !m == 0)
    }

    pub fn down_closure(&self, m: u64) -> u64 {
        mask_points(m).iter().fold(0, |acc, &p| acc | self.below[p])
    }

    pub fn up_closure(&self, m: u64) -> u64 {
        mask_points(m).iter().fold(0, |acc, &p| acc | self.above[p])
    }

    /// Closed points: maximal in the order.
    pub fn maximal_points(&self) -> Vec<usize> {
        (0..self.n).filter(|&p| self.above[p] == 1 << p).collect()
    }

    /// T1 means every point is closed, i.e. the order is discrete.
    pub fn is_t1(&self) -> bool {
        (0..self.n).all(|p| self.below[p] == 1 << p)
    }

    /// Every open set, sorted.
    pub fn opens(&self, bounds: &Bounds) -> Result<Vec<u64>> {
        if self.n > bounds.space_points {
            return Err(Error::capacity("space points", self.n, bounds.space_points));
        }
        let mut out = vec![0u64];
        // Extend down-sets one point at a time in a linear extension order.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&p| self.below[p].count_ones());
        for &p in &order {
            let grown: Vec<u64> = out
                .iter()
                .filter(|&&m| self.below[p] & !(1 << p) & !m == 0)
                .map(|&m| m | 1 << p)
                .collect();
            out.extend(grown);
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Hasse diagram of the specialization order as DOT, edges pointing up.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph space {\n  rankdir=BT;\n");
        for (p, label) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  p{p} [label=\"{}\"];", label.replace('"', "'"));
        }
        for (a, b) in self.hasse_edges() {
            let _ = writeln!(out, "  p{a} -> p{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.le(a, b) {
                    let between = self.above[a] & self.below[b] & !(1 << a) & !(1 << b);
                    if between == 0 {
                        edges.push((a, b));
                    }
                }
            }
        }
        edges
    }

    pub fn to_json(&self) -> serde_json::Value {
        let order: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.le(a, b))
            .collect();
        serde_json::json!({ "points": self.labels, "order": order })
    }
}

impl MeetAlgebra for FiniteSpace {
    type Member = u64;

    fn meet(&self, a: u64, b: u64) -> u64 {
        a & b
    }

    fn contained(&self, a: u64, b: u64) -> bool {
        a & !b == 0
    }
}

/// A finite family of opens whose union is the whole space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpenCover {
    host: SpaceId,
    members: Vec<u64>,
}

impl OpenCover {
    pub fn new(space: &FiniteSpace, mut members: Vec<u64>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if let Some(&m) = members.iter().find(|&&m| !space.is_open(m)) {
            return Err(Error::validation(format!("{:?} is not open", mask_points(m)), None));
        }
        if members.iter().fold(0, |a, &m| a | m) != space.full() {
            return Err(Error::Domain("members do not cover the space".into()));
        }
        Ok(Self {
            host: space.id,
            members,
        })
    }

    pub fn from_points(space: &FiniteSpace, members: &[PointList]) -> Result<Self> {
        Self::new(space, members.iter().map(|p| points_mask(p)).collect())
    }

    pub(crate) fn wrap(space: &FiniteSpace, members: Vec<u64>) -> Self {
        Self {
            host: space.id,
            members,
        }
    }

    pub fn host(&self) -> SpaceId {
        self.host
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn points(&self) -> Vec<PointList> {
        self.members.iter().map(|&m| mask_points(m)).collect()
    }
}

fn same_host(space: &FiniteSpace, c: &OpenCover) -> Result<()> {
    if c.host != space.id {
        return Err(Error::HostMismatch);
    }
    Ok(())
}

/// All intersections `U_1 ∩ ... ∩ U_n`, one member from each cover, with
/// empty intersections dropped.
pub fn cover_wedge(space: &FiniteSpace, covers: &[&OpenCover]) -> Result<OpenCover> {
    let mut acc = vec![space.full()];
    for c in covers {
        same_host(space, c)?;
        let mut next: Vec<u64> = acc
            .iter()
            .flat_map(|&a| c.members.iter().map(move |&b| a & b))
            .filter(|&m| m != 0)
            .collect();
        next.sort_unstable();
        next.dedup();
        acc = next;
    }
    Ok(OpenCover::wrap(space, acc))
}

/// `A ≪ B`: every member of `A` lies inside a member of `B`.
pub fn cover_refines(space: &FiniteSpace, a: &OpenCover, b: &OpenCover) -> Result<bool> {
    same_host(space, a)?;
    same_host(space, b)?;
    Ok(dynamics::refines(space, &a.members, &b.members))
}

/// Drops members contained in another member.
pub fn normalize_cover(space: &FiniteSpace, c: &OpenCover) -> OpenCover {
    OpenCover::wrap(space, dynamics::normalize(space, c.members.iter().copied()))
}

/// A continuous map between finite spaces, as a point function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    src: SpaceId,
    dst: SpaceId,
    f: Vec<usize>,
}

impl SpaceMap {
    /// Fails unless `f` is order-preserving (continuous).
    pub fn new(src: &FiniteSpace, dst: &FiniteSpace, f: Vec<usize>) -> Result<Self> {
        if f.len() != src.n || f.iter().any(|&y| y >= dst.n) {
            return Err(Error::validation("point function has the wrong shape", None));
        }
        for a in 0..src.n {
            for b in 0..src.n {
                if src.le(a, b) && !dst.le(f[a], f[b]) {
                    return Err(Error::validation("not order-preserving", Some((a as u32, b as u32))));
                }
            }
        }
        Ok(Self {
            src: src.id,
            dst: dst.id,
            f,
        })
    }

    /// Fails unless `f` is an order isomorphism of `space` onto itself.
    pub fn homeomorphism(space: &FiniteSpace, f: Vec<usize>) -> Result<Self> {
        let map = Self::new(space, space, f)?;
        let mut seen = 0u64;
        for &y in &map.f {
            seen |= 1 << y;
        }
        if seen != space.full() {
            return Err(Error::validation("not bijective", None));
        }
        let inv = map.inverse_points();
        Self::new(space, space, inv)?;
        Ok(map)
    }

    pub fn identity(space: &FiniteSpace) -> Self {
        Self {
            src: space.id,
            dst: space.id,
            f: (0..space.n).collect(),
        }
    }

    pub fn points(&self) -> &[usize] {
        &self.f
    }

    pub fn apply(&self, p: usize) -> usize {
        self.f[p]
    }

    fn inverse_points(&self) -> Vec<usize> {
        let mut inv = vec![0; self.f.len()];
        for (x, &y) in self.f.iter().enumerate() {
            inv[y] = x;
        }
        inv
    }

    pub fn inverse(&self) -> Self {
        Self {
            src: self.dst,
            dst: self.src,
            f: self.inverse_points(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.dst != self.src {
            return Err(Error::HostMismatch);
        }
        Ok(Self {
            src: other.src,
            dst: self.dst,
            f: other.f.iter().map(|&x| self.f[x]).collect(),
        })
    }

    pub fn preimage(&self, m: u64) -> u64 {
        self.f
            .iter()
            .enumerate()
            .filter(|(_, &y)| m >> y & 1 == 1)
            .fold(0, |acc, (x, _)| acc | 1 << x)
    }

    /// Least `p >= 1` with `f^p = id`, for a permutation.
    pub fn period(&self) -> usize {
        let mut cur = self.f.clone();
        let mut n = 1;
        while cur.iter().enumerate().any(|(i, &y)| i != y) {
            cur = cur.iter().map(|&y| self.f[y]).collect();
            n += 1;
        }
        n
    }
}

pub fn preimage_cover(space: &FiniteSpace, h: &SpaceMap, u: &OpenCover) -> Result<OpenCover> {
    same_host(space, u)?;
    if h.dst != space.id || h.src != space.id {
        return Err(Error::HostMismatch);
    }
    let mut members: Vec<u64> = u.members.iter().map(|&m| h.preimage(m)).collect();
    members.sort_unstable();
    members.dedup();
    Ok(OpenCover::wrap(space, members))
}

/// Every homeomorphism of the space, identity first.
pub fn homeomorphisms(space: &FiniteSpace) -> Vec<SpaceMap> {
    let n = space.n;
    let mut out = Vec::new();
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(space: &FiniteSpace, perm: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<SpaceMap>) {
        let i = perm.len();
        if i == space.n {
            out.push(SpaceMap {
                src: space.id,
                dst: space.id,
                f: perm.clone(),
            });
            return;
        }
        for y in 0..space.n {
            if used[y] {
                continue;
            }
            let ok = (0..i).all(|j| space.le(j, i) == space.le(perm[j], y) && space.le(i, j) == space.le(y, perm[j]));
            if ok {
                used[y] = true;
                perm.push(y);
                rec(space, perm, used, out);
                perm.pop();
                used[y] = false;
            }
        }
    }
    rec(space, &mut perm, &mut used, &mut out);
    let _ = n;
    out
}

/// Irredundant covers (no member can be dropped) drawn from `opens`, over
/// the ground set `ground`. Sorted by total size, then lexicographically.
pub fn irredundant_covers_from(ground: u64, opens: &[u64]) -> Vec<Vec<u64>> {
    let useful: Vec<u64> = {
        let mut v: Vec<u64> = opens.iter().map(|&o| o & ground).filter(|&o| o != 0).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let mut found: HashSet<Vec<u64>> = HashSet::new();
    let mut chosen: Vec<u64> = Vec::new();
    fn private_ok(chosen: &[u64]) -> bool {
        chosen.iter().enumerate().all(|(i, &m)| {
            let others = chosen
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(0, |a, (_, &o)| a | o);
            m & !others != 0
        })
    }
    fn rec(ground: u64, useful: &[u64], chosen: &mut Vec<u64>, covered: u64, found: &mut HashSet<Vec<u64>>) {
        if covered == ground {
            let mut c = chosen.clone();
            c.sort_unstable();
            found.insert(c);
            return;
        }
        let x = (ground & !covered).trailing_zeros();
        for &o in useful {
            if o >> x & 1 == 0 {
                continue;
            }
            chosen.push(o);
            if private_ok(chosen) {
                rec(ground, useful, chosen, covered | o, found);
            }
            chosen.pop();
        }
    }
    if ground == 0 {
        return vec![Vec::new()];
    }
    rec(ground, &useful, &mut chosen, 0, &mut found);
    let mut out: Vec<Vec<u64>> = found.into_iter().collect();
    out.sort_by(|a, b| {
        let size = |c: &Vec<u64>| c.iter().map(|m| m.count_ones()).sum::<u32>();
        size(a).cmp(&size(b)).then_with(|| a.cmp(b))
    });
    out
}

pub fn irredundant_covers(space: &FiniteSpace, bounds: &Bounds) -> Result<Vec<OpenCover>> {
    let opens = space.opens(bounds)?;
    let raw = irredundant_covers_from(space.full(), &opens);
    if raw.len() > bounds.covers {
        return Err(Error::capacity("irredundant covers", raw.len(), bounds.covers));
    }
    Ok(raw.into_iter().map(|m| OpenCover::wrap(space, m)).collect())
}

/// `{↓p : p maximal}`. It refines every open cover: the member covering a
/// maximal point `p` is a down-set, so it contains `↓p`.
pub fn maximal_point_cover(space: &FiniteSpace) -> OpenCover {
    let mut members: Vec<u64> = space.maximal_points().iter().map(|&p| space.below(p)).collect();
    members.sort_unstable();
    OpenCover::wrap(space, members)
}

/// Which expansivity notion a space decider tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TopMode {
    /// Two-sided wedge windows.
    Expansive,
    /// One-sided wedge windows.
    Positive,
    /// Single powers `h^{-n}(U)`.
    SinglePower,
    /// A cover refining every cover.
    Minimal,
}

/// Precomputed cover families of a space.
pub struct SpaceAnalysis<'a> {
    space: &'a FiniteSpace,
    covers: Vec<OpenCover>,
}

impl<'a> SpaceAnalysis<'a> {
    pub fn new(space: &'a FiniteSpace, bounds: &Bounds) -> Result<Self> {
        Ok(Self {
            space,
            covers: irredundant_covers(space, bounds)?,
        })
    }

    /// Window dynamics only; the cover families stay empty.
    pub(crate) fn without_covers(space: &'a FiniteSpace) -> Self {
        Self {
            space,
            covers: Vec::new(),
        }
    }

    pub fn space(&self) -> &FiniteSpace {
        self.space
    }

    /// Irredundant covers: the candidates and the adversaries.
    pub fn covers(&self) -> &[OpenCover] {
        &self.covers
    }

    fn check_map(&self, h: &SpaceMap) -> Result<()> {
        if h.src != self.space.id || h.dst != self.space.id {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    /// `factors[r]` is the normalized `h^{-r}(U)`.
    pub fn pulled_factors(&self, h: &SpaceMap, u: &OpenCover) -> Vec<Vec<u64>> {
        let p = h.period();
        let mut cur = dynamics::normalize(self.space, u.members.iter().copied());
        let mut out = Vec::with_capacity(p);
        for _ in 0..p {
            out.push(cur.clone());
            cur = dynamics::normalize(self.space, cur.iter().map(|&m| h.preimage(m)));
        }
        out
    }

    pub fn trace(&self, h: &SpaceMap, u: &OpenCover, window: Window) -> Trace<u64> {
        dynamics::run_sequence(self.space, &self.pulled_factors(h, u), window)
    }

    /// Index `n` at which the candidate refines `target`, if any.
    fn first_n(&self, h: &SpaceMap, u: &OpenCover, mode: TopMode, trace: Option<&Trace<u64>>, target: &[u64]) -> Option<usize> {
        match mode {
            TopMode::Minimal => dynamics::refines(self.space, &u.members, target).then_some(0),
            TopMode::SinglePower => self
                .pulled_factors(h, u)
                .iter()
                .position(|f| dynamics::refines(self.space, f, target)),
            _ => dynamics::first_refining(self.space, trace.expect("trace"), target),
        }
    }

    /// Verdict for one candidate cover against every irredundant cover.
    pub fn is_expansivity_cover(&self, h: &SpaceMap, u: &OpenCover, mode: TopMode) -> Result<Verdict<OpenCover>> {
        self.check_map(h)?;
        same_host(self.space, u)?;
        let trace = match mode {
            TopMode::Expansive => Some(self.trace(h, u, Window::TwoSided)),
            TopMode::Positive => Some(self.trace(h, u, Window::Positive)),
            _ => None,
        };
        let mut uniform = 0;
        for t in &self.covers {
            match self.first_n(h, u, mode, trace.as_ref(), &t.members) {
                Some(n) => uniform = uniform.max(n),
                None => {
                    let mut v = Verdict::refuted(Some(u.clone()), t.clone(), Scope::Exact);
                    v.cycle_length = Some(h.period());
                    v.stable_from = trace.as_ref().map(|t| t.stable_from);
                    return Ok(v);
                }
            }
        }
        let mut v = Verdict::proved(u.clone(), Scope::Exact);
        v.uniform_n = Some(uniform);
        v.cycle_length = Some(h.period());
        v.stable_from = trace.as_ref().map(|t| t.stable_from);
        Ok(v)
    }

    /// Searches candidates in order; the first Proved one wins.
    pub fn decide(&self, h: &SpaceMap, mode: TopMode) -> Result<Verdict<OpenCover>> {
        self.check_map(h)?;
        let mut rejected = Vec::new();
        for cand in &self.covers {
            let v = self.is_expansivity_cover(h, cand, mode)?;
            match v.status {
                Status::Proved => {
                    let mut v = v;
                    v.rejected = rejected;
                    return Ok(v);
                }
                _ => rejected.push(Rejection {
                    candidate: cand.clone(),
                    refuter: v.refuter.expect("refuter"),
                }),
            }
        }
        let refuter = rejected
            .first()
            .map(|r| r.refuter.clone())
            .unwrap_or_else(|| OpenCover::wrap(self.space, vec![self.space.full()]));
        let mut v = Verdict::refuted(None, refuter, Scope::Exact);
        v.rejected = rejected;
        Ok(v)
    }

    pub fn is_refinement_expansive(&self, h: &SpaceMap) -> Result<Verdict<OpenCover>> {
        self.decide(h, TopMode::Expansive)
    }

    pub fn is_positively_expansive_top(&self, h: &SpaceMap) -> Result<Verdict<OpenCover>> {
        self.decide(h, TopMode::Positive)
    }

    /// The single-power form: some `U` with every `V` refined by some
    /// `h^{-n}(U)`.
    pub fn is_positively_expansive_single_power(&self, h: &SpaceMap) -> Result<Verdict<OpenCover>> {
        self.decide(h, TopMode::SinglePower)
    }

    pub fn has_minimal_cover(&self) -> Result<Verdict<OpenCover>> {
        self.decide(&SpaceMap::identity(self.space), TopMode::Minimal)
    }
}

/// Canonical relation code of a poset: the least strict-order bitmask over
/// all relabelings.
fn canonical_code(n: usize, rel: &[u64]) -> u64 {
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute_all(&mut perm, 0, &mut |p| {
        let mut code = 0u64;
        for a in 0..n {
            for b in 0..n {
                if a != b && rel[a] >> b & 1 == 1 {
                    code |= 1 << (p[a] * n + p[b]);
                }
            }
        }
        best = best.min(code);
    });
    best
}

fn permute_all(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute_all(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// All T0 spaces (posets) with `n` points up to isomorphism, `n <= 7`.
pub fn enumerate_posets(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > 7 {
        return Err(Error::capacity("poset size for enumeration", n, 7));
    }
    // Build naturally labeled posets: each new point sits above a down-set
    // of the earlier points. `rel[a]` has bit `b` when `a <= b`.
    let mut level: Vec<Vec<u64>> = vec![Vec::new()];
    for size in 0..n {
        let mut next = Vec::new();
        for rel in &level {
            let below: Vec<u64> = (0..size)
                .map(|b| (0..size).filter(|&a| rel[a] >> b & 1 == 1).fold(0, |m, a| m | 1 << a))
                .collect();
            for d in 0u64..(1 << size) {
                if mask_points(d).iter().any(|&q| below[q] & !d != 0) {
                    continue;
                }
                let mut r = rel.clone();
                for a in mask_points(d) {
                    r[a] |= 1 << size;
                }
                r.push(1 << size);
                next.push(r);
            }
        }
        level = next;
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for rel in level {
        if seen.insert(canonical_code(n, &rel)) {
            let labels = (0..n).map(|p| p.to_string()).collect();
            out.push(FiniteSpace::from_order(n, |a, b| rel[a] >> b & 1 == 1, labels)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
    }

    #[test]
    fn sierpinski_opens() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(s.opens(&Bounds::default()).unwrap(), vec![0b00, 0b01, 0b11]);
        let covers = irredundant_covers(&s, &Bounds::default()).unwrap();
        assert_eq!(covers.len(), 1);
        assert_eq!(covers[0].members(), &[0b11]);
        let a = SpaceAnalysis::new(&s, &Bounds::default()).unwrap();
        assert!(a.has_minimal_cover().unwrap().is_proved());
    }

    #[test]
    fn rejects_cycles() {
        assert!(FiniteSpace::from_pairs(2, &[(0, 1), (1, 0)]).is_err());
        assert!(FiniteSpace::from_pairs(3, &[(0, 1), (1, 2)]).is_err());
    }

    #[test]
    fn wedge_and_refine() {
        let d = FiniteSpace::discrete(2);
        let singles = OpenCover::new(&d, vec![0b01, 0b10]).unwrap();
        let whole = OpenCover::new(&d, vec![0b11]).unwrap();
        assert_eq!(cover_wedge(&d, &[&singles, &whole]).unwrap(), singles);
        assert!(cover_refines(&d, &singles, &whole).unwrap());
        assert!(!cover_refines(&d, &whole, &singles).unwrap());
        let swap = SpaceMap::homeomorphism(&d, vec![1, 0]).unwrap();
        let a = SpaceAnalysis::new(&d, &Bounds::default()).unwrap();
        let v = a.is_refinement_expansive(&swap).unwrap();
        assert_eq!(v.witness, Some(singles));
        assert_eq!(homeomorphisms(&d).len(), 2);
    }

    #[test]
    fn not_open_rejected() {
        let s = FiniteSpace::sierpinski();
        assert!(OpenCover::new(&s, vec![0b10, 0b01]).is_err());
        assert!(SpaceMap::homeomorphism(&s, vec![1, 0]).is_err());
    }
}
