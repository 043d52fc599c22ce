//! Self-contained certificates for verdicts, and a checker that validates
//! them by replaying the claimed refinements instead of searching.
//!
//! Finite-ring families are stored as lists of ideals, each ideal a sorted
//! list of element indices, so a certificate does not depend on lattice
//! numbering.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::dynamics::{self, Window};
use crate::engine::{Engine, LocalDecomposition, Mode};
use crate::error::{Error, Result};
use crate::generator::GeneratorSet;
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{Elem, FiniteRing, RingAutomorphism, RingDef};
use crate::symbolic::{
    capped_window_refines, check_escape, check_perm, hardest_adversary, pulled_factors, sym_is_generator,
    sym_refines, OracleBounds, OracleVerdict, SymGenerator,
};
use crate::topology::chain::{self, ChainCover, ChainSpace, ShiftMap};
use crate::topology::space::{
    maximal_point_cover, points_mask, FiniteSpace, OpenCover, PointList, SpaceAnalysis, SpaceMap, TopMode,
};
use crate::topology::zariski::{maximal_open_with_trace, ExtensionVerdict};
use crate::verdict::{Scope, Status, Verdict};

/// Ideals as sorted element-index lists.
pub type IdealFamily = Vec<Vec<Elem>>;

/// A finite space given by its order pairs `(a, b)` with `a <= b`, `a != b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDef {
    pub points: usize,
    pub order: Vec<(usize, usize)>,
}

impl SpaceDef {
    pub fn of(space: &FiniteSpace) -> Self {
        let n = space.len();
        let order = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && space.le(a, b))
            .collect();
        Self { points: n, order }
    }

    pub fn build(&self) -> Result<FiniteSpace> {
        FiniteSpace::from_pairs(self.points, &self.order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    RingExpansivity {
        ring: RingDef,
        automorphism: Vec<Elem>,
        mode: Mode,
        verdict: Verdict<IdealFamily>,
    },
    Decomposition {
        ring: RingDef,
        idempotents: Vec<Elem>,
        generator: IdealFamily,
    },
    SymbolicOracle {
        k: usize,
        perm: Vec<usize>,
        positive: bool,
        bounds: OracleBounds,
        verdict: Verdict<SymGenerator>,
        escape: Option<Vec<usize>>,
    },
    SymbolicMinimal {
        k: usize,
        verdict: Verdict<SymGenerator>,
    },
    Space {
        space: SpaceDef,
        map: Vec<usize>,
        mode: TopMode,
        verdict: Verdict<Vec<PointList>>,
    },
    Extension {
        space: SpaceDef,
        verdict: ExtensionVerdict,
    },
    ChainPositive {
        shift: ShiftMap,
        verdict: Verdict<ChainCover>,
    },
    ChainMinimal {
        verdict: Verdict<ChainCover>,
    },
}

pub fn ideal_family(lat: &IdealLattice, ids: &[u32]) -> IdealFamily {
    ids.iter()
        .map(|&i| lat.ideal(i).elements().collect())
        .collect()
}

fn family_ids(lat: &IdealLattice, fam: &IdealFamily) -> Result<Vec<u32>> {
    let ring = lat.ring();
    let mut ids = fam
        .iter()
        .map(|elems| {
            if elems.iter().any(|&e| e as usize >= ring.order()) {
                return Err(fail("element index out of range"));
            }
            let ideal = Ideal::from_members(ring, elems.iter().map(|&e| e as usize).collect())?;
            lat.id_of(&ideal)
        })
        .collect::<Result<Vec<u32>>>()?;
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Invariant(format!("certificate rejected: {}", msg.into()))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(fail(msg))
    }
}

impl Certificate {
    pub fn ring_verdict(engine: &Engine, alpha: &RingAutomorphism, mode: Mode, v: &Verdict<GeneratorSet>) -> Self {
        let lat = engine.lattice();
        Certificate::RingExpansivity {
            ring: engine.ring().recipe().clone(),
            automorphism: alpha.image().to_vec(),
            mode,
            verdict: v.clone().map(|g| ideal_family(lat, g.ids())),
        }
    }

    pub fn decomposition(engine: &Engine, d: &LocalDecomposition) -> Self {
        Certificate::Decomposition {
            ring: engine.ring().recipe().clone(),
            idempotents: d.idempotents.clone(),
            generator: ideal_family(engine.lattice(), d.strong_minimal_generator.ids()),
        }
    }

    pub fn symbolic_oracle(perm: &[usize], positive: bool, bounds: OracleBounds, o: &OracleVerdict) -> Option<Self> {
        let k = o.verdict.witness.as_ref().map(SymGenerator::k)?;
        Some(Certificate::SymbolicOracle {
            k,
            perm: perm.to_vec(),
            positive,
            bounds,
            verdict: o.verdict.clone(),
            escape: o.escape.clone(),
        })
    }

    pub fn space_verdict(space: &FiniteSpace, h: &SpaceMap, mode: TopMode, v: &Verdict<OpenCover>) -> Self {
        Certificate::Space {
            space: SpaceDef::of(space),
            map: h.points().to_vec(),
            mode,
            verdict: v.clone().map(|c| c.points()),
        }
    }

    pub fn status(&self) -> Status {
        match self {
            Certificate::RingExpansivity { verdict, .. } => verdict.status,
            Certificate::Decomposition { .. } => Status::Proved,
            Certificate::SymbolicOracle { verdict, .. } | Certificate::SymbolicMinimal { verdict, .. } => verdict.status,
            Certificate::Space { verdict, .. } => verdict.status,
            Certificate::Extension { verdict, .. } => verdict.status,
            Certificate::ChainPositive { verdict, .. } | Certificate::ChainMinimal { verdict } => verdict.status,
        }
    }

    /// Validates the claim. `Ok` means every recorded refinement and
    /// non-refinement was replayed and the quantified families are complete.
    pub fn check(&self, bounds: &Bounds) -> Result<()> {
        if self.status() == Status::UnknownAtBound {
            return Err(Error::Domain("an UnknownAtBound verdict asserts nothing to check".into()));
        }
        match self {
            Certificate::RingExpansivity {
                ring,
                automorphism,
                mode,
                verdict,
            } => check_ring(ring, automorphism, *mode, verdict, bounds),
            Certificate::Decomposition {
                ring,
                idempotents,
                generator,
            } => check_decomposition(ring, idempotents, generator, bounds),
            Certificate::SymbolicOracle {
                k,
                perm,
                positive,
                bounds: ob,
                verdict,
                escape,
            } => check_symbolic_oracle(*k, perm, *positive, *ob, verdict, escape.as_deref()),
            Certificate::SymbolicMinimal { k, verdict } => check_symbolic_minimal(*k, verdict),
            Certificate::Space {
                space,
                map,
                mode,
                verdict,
            } => check_space(space, map, *mode, verdict, bounds),
            Certificate::Extension { space, verdict } => check_extension(space, verdict, bounds),
            Certificate::ChainPositive { shift, verdict } => check_chain_positive(*shift, verdict),
            Certificate::ChainMinimal { verdict } => check_chain_minimal(verdict),
        }
    }
}

struct RingCtx {
    engine: Engine,
    alpha: RingAutomorphism,
}

impl RingCtx {
    fn lat(&self) -> &IdealLattice {
        self.engine.lattice()
    }

    fn generator(&self, fam: &IdealFamily) -> Result<GeneratorSet> {
        let ids = family_ids(self.lat(), fam)?;
        self.lat().generator_from_ids(ids)
    }

    /// The candidate never refines `refuter`: replays the stabilizing
    /// window sequence (or the candidate itself in zero mode).
    fn check_refutation(&self, mode: Mode, cand: &GeneratorSet, refuter: &GeneratorSet) -> Result<()> {
        let lat = self.lat();
        if mode == Mode::Zero {
            let norm = lat.normalize_antichain(cand);
            return ensure(!dynamics::refines(lat, norm.ids(), refuter.ids()), "zero-mode candidate refines its refuter");
        }
        let window = if mode == Mode::Positive {
            Window::Positive
        } else {
            Window::TwoSided
        };
        let trace = self.engine.trace(&self.alpha, cand, window)?;
        ensure(
            dynamics::first_refining(lat, &trace, refuter.ids()).is_none(),
            "candidate eventually refines its refuter",
        )
    }
}

fn check_ring(def: &RingDef, image: &[Elem], mode: Mode, v: &Verdict<IdealFamily>, bounds: &Bounds) -> Result<()> {
    let ring = FiniteRing::from_def(def, bounds)?;
    let alpha = RingAutomorphism::new(&ring, image.to_vec())?;
    let ctx = RingCtx {
        engine: Engine::new(&ring, bounds)?,
        alpha,
    };
    let lat = ctx.lat();
    let targets: BTreeSet<GeneratorSet> = ctx.engine.antichain_generators()?.iter().cloned().collect();
    for r in &v.rejected {
        let cand = ctx.generator(&r.candidate)?;
        let refuter = ctx.generator(&r.refuter)?;
        ensure(targets.contains(&refuter), "refuter is not an antichain generator")?;
        ctx.check_refutation(mode, &cand, &refuter)?;
    }
    match v.status {
        Status::Proved => {
            let w = ctx.generator(v.witness.as_ref().ok_or_else(|| fail("Proved without witness"))?)?;
            let mut covered = BTreeSet::new();
            for e in &v.n_table {
                let t = ctx.generator(&e.target)?;
                let g = if mode == Mode::Zero {
                    ensure(e.n == 0, "zero-mode entries use n = 0")?;
                    lat.normalize_antichain(&w)
                } else {
                    ctx.engine.product_sequence(&ctx.alpha, &w, mode == Mode::Positive, e.n)?
                };
                ensure(e.map.len() == g.len(), "refinement map has the wrong length")?;
                for (x, &y) in g.ids().iter().zip(&e.map) {
                    ensure(y < t.len() && lat.le(*x, t.ids()[y]), "refinement map entry fails")?;
                }
                covered.insert(t);
            }
            ensure(targets.is_subset(&covered), "n_table misses an antichain generator")
        }
        Status::Refuted => {
            let refuter = ctx.generator(v.refuter.as_ref().ok_or_else(|| fail("Refuted without refuter"))?)?;
            ensure(targets.contains(&refuter), "refuter is not an antichain generator")?;
            match &v.witness {
                Some(w) => ctx.check_refutation(mode, &ctx.generator(w)?, &refuter),
                None => {
                    // Every antichain candidate is rejected, except those
                    // containing R when there are two or more maximal
                    // ideals: their window products keep R as a member, and
                    // R lies in no member of the maximal-ideal generator.
                    let rejected: BTreeSet<GeneratorSet> = v
                        .rejected
                        .iter()
                        .map(|r| ctx.generator(&r.candidate))
                        .collect::<Result<_>>()?;
                    let pruned_ok = lat.maximal_ids().len() >= 2;
                    for c in &targets {
                        let pruned = pruned_ok && c.contains_id(lat.whole_id());
                        ensure(pruned || rejected.contains(c), "a candidate was never rejected")?;
                    }
                    Ok(())
                }
            }
        }
        Status::UnknownAtBound => unreachable!(),
    }
}

fn check_decomposition(def: &RingDef, idem: &[Elem], generator: &IdealFamily, bounds: &Bounds) -> Result<()> {
    let ring = FiniteRing::from_def(def, bounds)?;
    let engine = Engine::new(&ring, bounds)?;
    let lat = engine.lattice();
    ensure(idem.iter().all(|&e| (e as usize) < ring.order()), "idempotent out of range")?;
    ensure(idem.len() == lat.maximal_ids().len(), "factor count differs from maximal ideal count")?;
    for (a, &e) in idem.iter().enumerate() {
        ensure(ring.mul(e, e) == e, "not idempotent")?;
        for &f in &idem[a + 1..] {
            ensure(ring.mul(e, f) == ring.zero(), "not orthogonal")?;
        }
    }
    let total = idem.iter().fold(ring.zero(), |acc, &e| ring.add(acc, e));
    ensure(ring.is_trivial() || total == ring.one(), "idempotents do not sum to one")?;
    let ids = family_ids(lat, generator)?;
    let mut principal: Vec<u32> = idem
        .iter()
        .map(|&e| lat.id_of(&Ideal::principal(&ring, e)))
        .collect::<Result<_>>()?;
    principal.sort_unstable();
    if ring.is_trivial() {
        ensure(ids == vec![lat.whole_id()], "trivial ring generator is not {R}")?;
    } else {
        ensure(ids == principal, "members are not the principal ideals of the idempotents")?;
    }
    for t in engine.antichain_generators()? {
        ensure(dynamics::refines(lat, &ids, t.ids()), "generator fails to refine an antichain generator")?;
    }
    Ok(())
}

fn check_symbolic_oracle(
    k: usize,
    perm: &[usize],
    positive: bool,
    ob: OracleBounds,
    v: &Verdict<SymGenerator>,
    escape: Option<&[usize]>,
) -> Result<()> {
    check_perm(perm, k)?;
    let w = v.witness.as_ref().ok_or_else(|| fail("oracle verdict without generator"))?;
    ensure(w.k() == k && sym_is_generator(k, w.members())?, "witness is not a generator")?;
    match v.status {
        Status::Proved => {
            let n = v.uniform_n.ok_or_else(|| fail("Proved without uniform_n"))?;
            ensure(n < ob.max_steps, "uniform_n reaches the step bound")?;
            // The hardest grid adversary is refined by every other one.
            let hard = hardest_adversary(k, ob.adversary_bound);
            ensure(
                capped_window_refines(w, perm, positive, n, ob.adversary_bound, &hard),
                "window product misses the hardest adversary",
            )
        }
        Status::Refuted => {
            let r = v.refuter.as_ref().ok_or_else(|| fail("Refuted without refuter"))?;
            ensure(r.k() == k && sym_is_generator(k, r.members())?, "refuter is not a generator")?;
            let coords = escape.ok_or_else(|| fail("Refuted without escape coordinates"))?;
            ensure(check_escape(&pulled_factors(w, perm), r, coords), "escape certificate fails")
        }
        Status::UnknownAtBound => unreachable!(),
    }
}

fn check_symbolic_minimal(k: usize, v: &Verdict<SymGenerator>) -> Result<()> {
    match v.status {
        Status::Proved => {
            let w = v.witness.as_ref().ok_or_else(|| fail("Proved without witness"))?;
            // With one prime every generator has a member equal to R.
            ensure(k == 1 && w.k() == 1 && w.contains_whole(), "only {R} with one prime is certified")
        }
        Status::Refuted => {
            ensure(k >= 2 && !v.rejected.is_empty(), "no rejected candidates")?;
            for r in &v.rejected {
                ensure(sym_is_generator(k, r.candidate.members())?, "candidate is not a generator")?;
                ensure(sym_is_generator(k, r.refuter.members())?, "refuter is not a generator")?;
                ensure(!sym_refines(&r.candidate, &r.refuter)?, "candidate refines its refuter")?;
            }
            Ok(())
        }
        Status::UnknownAtBound => unreachable!(),
    }
}

fn check_space(def: &SpaceDef, map: &[usize], mode: TopMode, v: &Verdict<Vec<PointList>>, bounds: &Bounds) -> Result<()> {
    let space = def.build()?;
    let h = SpaceMap::homeomorphism(&space, map.to_vec())?;
    let analysis = SpaceAnalysis::without_covers(&space);
    let cover = |c: &Vec<PointList>| OpenCover::from_points(&space, c);
    let family_at = |u: &OpenCover, n: usize| -> Vec<u64> {
        match mode {
            TopMode::Minimal => dynamics::normalize(&space, u.members().iter().copied()),
            TopMode::SinglePower => {
                let f = analysis.pulled_factors(&h, u);
                f[n % f.len()].clone()
            }
            TopMode::Positive => analysis.trace(&h, u, Window::Positive).at(n).to_vec(),
            TopMode::Expansive => analysis.trace(&h, u, Window::TwoSided).at(n).to_vec(),
        }
    };
    let never_refines = |u: &OpenCover, target: &OpenCover| -> bool {
        match mode {
            TopMode::Minimal => !dynamics::refines(&space, u.members(), target.members()),
            TopMode::SinglePower => analysis
                .pulled_factors(&h, u)
                .iter()
                .all(|f| !dynamics::refines(&space, f, target.members())),
            TopMode::Positive | TopMode::Expansive => {
                let w = if mode == TopMode::Positive {
                    Window::Positive
                } else {
                    Window::TwoSided
                };
                dynamics::first_refining(&space, &analysis.trace(&h, u, w), target.members()).is_none()
            }
        }
    };
    for r in &v.rejected {
        ensure(never_refines(&cover(&r.candidate)?, &cover(&r.refuter)?), "rejected candidate refines its refuter")?;
    }
    match v.status {
        Status::Proved => {
            let w = cover(v.witness.as_ref().ok_or_else(|| fail("Proved without witness"))?)?;
            let n = v.uniform_n.ok_or_else(|| fail("Proved without uniform_n"))?;
            // The cover by closures of maximal points refines every cover.
            let m = maximal_point_cover(&space);
            ensure(dynamics::refines(&space, &family_at(&w, n), m.members()), "window family misses the maximal-point cover")
        }
        Status::Refuted => {
            let r = cover(v.refuter.as_ref().ok_or_else(|| fail("Refuted without refuter"))?)?;
            match &v.witness {
                Some(w) => ensure(never_refines(&cover(w)?, &r), "candidate refines its refuter"),
                None => {
                    let rejected: BTreeSet<Vec<u64>> = v
                        .rejected
                        .iter()
                        .map(|x| cover(&x.candidate).map(|c| c.members().to_vec()))
                        .collect::<Result<_>>()?;
                    for c in SpaceAnalysis::new(&space, bounds)?.covers() {
                        ensure(rejected.contains(c.members()), "an irredundant cover was never rejected")?;
                    }
                    Ok(())
                }
            }
        }
        Status::UnknownAtBound => unreachable!(),
    }
}

fn check_extension(def: &SpaceDef, v: &ExtensionVerdict, bounds: &Bounds) -> Result<()> {
    let space = def.build()?;
    let y = points_mask(&v.subspace);
    ensure(y & !space.full() == 0, "subspace outside the space")?;
    let opens = space.opens(bounds)?;
    let trace_ok = |w: &[PointList]| -> Result<Vec<u64>> {
        let masks: Vec<u64> = w.iter().map(|p| points_mask(p)).collect();
        ensure(masks.iter().fold(0, |a, &m| a | m) == y, "subspace cover does not cover")?;
        ensure(
            masks.iter().all(|&m| m & !y == 0 && opens.iter().any(|&o| o & y == m)),
            "subspace cover member is not a trace of an open",
        )?;
        Ok(masks)
    };
    for e in &v.extensions {
        let w = trace_ok(&e.cover)?;
        ensure(e.extension.len() == w.len(), "extension has the wrong length")?;
        let mut union = 0;
        for (p, &t) in e.extension.iter().zip(&w) {
            let o = points_mask(p);
            ensure(space.is_open(o) && o & y == t, "extension member has the wrong trace")?;
            union |= o;
        }
        ensure(union == space.full(), "extension does not cover")?;
    }
    match v.status {
        Status::Proved => {
            let all = crate::topology::space::irredundant_covers_from(y, &opens);
            let seen: BTreeSet<Vec<u64>> = v
                .extensions
                .iter()
                .map(|e| {
                    let mut m: Vec<u64> = e.cover.iter().map(|p| points_mask(p)).collect();
                    m.sort_unstable();
                    m
                })
                .collect();
            ensure(all.iter().all(|c| seen.contains(c)), "an irredundant subspace cover is not extended")
        }
        Status::Refuted => {
            let w = trace_ok(v.counterexample.as_ref().ok_or_else(|| fail("Refuted without counterexample"))?)?;
            // Any extension member lies inside the largest open with its trace.
            let union = w.iter().fold(0, |a, &t| a | maximal_open_with_trace(&space, y, t));
            ensure(union != space.full(), "counterexample does extend")
        }
        Status::UnknownAtBound => unreachable!(),
    }
}

fn check_chain_positive(h: ShiftMap, v: &Verdict<ChainCover>) -> Result<()> {
    let u = v.witness.as_ref().ok_or_else(|| fail("chain verdict without cover"))?;
    let u = ChainCover::new(u.members().to_vec())?;
    match (&v.status, &v.scope) {
        (Status::Proved, Scope::Window { cut_bound, max_steps }) => {
            let seq = chain::wedge_sequence(h, &u, *max_steps);
            let mut covered = BTreeSet::new();
            for e in &v.n_table {
                let g = seq.get(e.n).ok_or_else(|| fail("n beyond the step bound"))?;
                ensure(e.map.len() == g.len(), "refinement map has the wrong length")?;
                for (x, &y) in g.iter().zip(&e.map) {
                    let t = e.target.members();
                    ensure(
                        y < t.len() && crate::dynamics::MeetAlgebra::contained(&ChainSpace, *x, t[y]),
                        "refinement map entry fails",
                    )?;
                }
                covered.insert(e.target.clone());
            }
            ensure(
                chain::window_covers(*cut_bound).iter().all(|c| covered.contains(c)),
                "n_table misses a window cover",
            )
        }
        (Status::Refuted, Scope::Exact) => {
            let r = v.refuter.as_ref().ok_or_else(|| fail("Refuted without refuter"))?;
            let r = ChainCover::new(r.members().to_vec())?;
            let n0 = v.stable_from.ok_or_else(|| fail("exact refutation without stabilization index"))?;
            let seq = chain::wedge_sequence(h, &u, n0);
            ensure(
                dynamics::refines(&ChainSpace, u.members(), h.preimage_cover(&u, 1).members()),
                "U does not refine its first preimage",
            )?;
            ensure(
                dynamics::refines(&ChainSpace, &seq[n0], h.preimage_cover(&u, n0 + 1).members()),
                "sequence is not stable at the claimed index",
            )?;
            ensure(
                seq.iter().all(|g| !dynamics::refines(&ChainSpace, g, r.members())),
                "stable family refines the refuter",
            )
        }
        _ => Err(fail("chain verdict scope does not match its status")),
    }
}

fn check_chain_minimal(v: &Verdict<ChainCover>) -> Result<()> {
    let Scope::Window { cut_bound, .. } = v.scope else {
        return Err(fail("minimal-cover verdict needs a window scope"));
    };
    ensure(v.status == Status::Refuted, "only refutations are certified")?;
    let mut seen = BTreeSet::new();
    for r in &v.rejected {
        let c = ChainCover::new(r.candidate.members().to_vec())?;
        let j = ChainCover::new(r.refuter.members().to_vec())?;
        ensure(!dynamics::refines(&ChainSpace, c.members(), j.members()), "candidate refines its refuter")?;
        seen.insert(c);
    }
    ensure(
        chain::window_covers(cut_bound).iter().all(|c| seen.contains(c)),
        "a window candidate was never rejected",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::chain::{chain_positively_expansive, shift_map};

    #[test]
    fn ring_certificate_roundtrip() {
        let r = FiniteRing::cyclic(6).unwrap();
        let b = Bounds::default();
        let e = Engine::new(&r, &b).unwrap();
        let id = RingAutomorphism::identity(&r);
        for mode in [Mode::Expansive, Mode::Positive, Mode::Zero] {
            let v = e.decide(&id, mode).unwrap();
            let c = Certificate::ring_verdict(&e, &id, mode, &v);
            let text = serde_json::to_string(&c).unwrap();
            let back: Certificate = serde_json::from_str(&text).unwrap();
            back.check(&b).unwrap();
        }
    }

    #[test]
    fn tampered_certificate_fails() {
        let r = FiniteRing::cyclic(6).unwrap();
        let b = Bounds::default();
        let e = Engine::new(&r, &b).unwrap();
        let id = RingAutomorphism::identity(&r);
        let v = e.decide(&id, Mode::Positive).unwrap();
        let mut c = Certificate::ring_verdict(&e, &id, Mode::Positive, &v);
        if let Certificate::RingExpansivity { verdict, .. } = &mut c {
            verdict.n_table.pop();
        }
        assert!(matches!(c.check(&b), Err(Error::Invariant(_))));
    }

    #[test]
    fn chain_certificates() {
        let v = chain_positively_expansive(shift_map(-1), &ChainCover::standard(), 4, 10).unwrap();
        Certificate::ChainPositive {
            shift: shift_map(-1),
            verdict: v,
        }
        .check(&Bounds::default())
        .unwrap();
    }
}
