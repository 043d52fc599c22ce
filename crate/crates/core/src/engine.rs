//! Expansivity deciders for automorphisms of finite rings, the local
//! decomposition into factor rings, and the doubling-lemma check.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::dynamics::{self, Trace, Window};
use crate::error::{Error, Result};
use crate::generator::GeneratorSet;
use crate::ideal::{Ideal, IdealLattice};
use crate::ring::{Elem, FiniteRing, RingAutomorphism};
use crate::verdict::{NEntry, Rejection, Scope, Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Two-sided windows.
    Expansive,
    /// One-sided windows `0..=n`.
    Positive,
    /// A single generator refining every generator.
    Zero,
}

impl Mode {
    fn window(self) -> Window {
        match self {
            Mode::Positive => Window::Positive,
            _ => Window::TwoSided,
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expansive" => Ok(Mode::Expansive),
            "positive" => Ok(Mode::Positive),
            "zero" => Ok(Mode::Zero),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// `R ≅ Re_1 × ... × Re_k` with every factor local.
#[derive(Debug, Clone)]
pub struct LocalDecomposition {
    pub idempotents: Vec<Elem>,
    pub factor_ideals: Vec<Ideal>,
    pub strong_minimal_generator: GeneratorSet,
    pub factors: Vec<FiniteRing>,
}

#[derive(Debug, Clone)]
pub enum MinimalOutcome {
    Decomposition(LocalDecomposition),
    /// A property of the candidate built from idempotents failed.
    NotMinimal {
        property: String,
        refuter: Option<GeneratorSet>,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct DoublingStep {
    pub n: usize,
    /// `α^{-n}(J^{2^n})`, normalized.
    pub lhs: Vec<u32>,
    /// `I_{N+n}`.
    pub rhs: Vec<u32>,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct DoublingReport {
    /// Least `N` with `α^{-1}(I_N) ≺ I`.
    pub base_n: usize,
    pub j: Vec<u32>,
    pub steps: Vec<DoublingStep>,
}

/// A ring with its ideal lattice and (lazily) its antichain generators.
pub struct Engine {
    lattice: IdealLattice,
    bounds: Bounds,
    antichains: OnceLock<Vec<GeneratorSet>>,
}

impl Engine {
    pub fn new(ring: &FiniteRing, bounds: &Bounds) -> Result<Self> {
        Ok(Self {
            lattice: ring.enumerate_ideals(bounds)?,
            bounds: *bounds,
            antichains: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        self.lattice.ring()
    }

    pub fn lattice(&self) -> &IdealLattice {
        &self.lattice
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// Every inclusion-antichain generator, in lexicographic order of ids.
    pub fn antichain_generators(&self) -> Result<&[GeneratorSet]> {
        if let Some(v) = self.antichains.get() {
            return Ok(v);
        }
        let v = self.lattice.enumerate_generators(true, &self.bounds)?;
        Ok(self.antichains.get_or_init(|| v))
    }

    fn check_alpha(&self, alpha: &RingAutomorphism) -> Result<()> {
        if alpha.host() != self.lattice.host() {
            return Err(Error::HostMismatch);
        }
        Ok(())
    }

    /// `factors[r]` is the normalized `α^{-r}(I)` for `r` in `0..period`.
    pub fn pulled_factors(&self, alpha: &RingAutomorphism, i: &GeneratorSet) -> Result<Vec<Vec<u32>>> {
        self.check_alpha(alpha)?;
        let period = alpha.period();
        let step = self.lattice.pullback_perm(alpha)?;
        let mut current: Vec<u32> = dynamics::normalize(&self.lattice, i.ids().iter().copied());
        let mut out = Vec::with_capacity(period);
        for _ in 0..period {
            out.push(current.clone());
            current = dynamics::normalize(&self.lattice, current.iter().map(|&x| step[x as usize]));
        }
        Ok(out)
    }

    pub fn trace(&self, alpha: &RingAutomorphism, i: &GeneratorSet, window: Window) -> Result<Trace<u32>> {
        let factors = self.pulled_factors(alpha, i)?;
        Ok(dynamics::run_sequence(&self.lattice, &factors, window))
    }

    /// `G_n`: the normalized product of pullbacks over the window.
    pub fn product_sequence(
        &self,
        alpha: &RingAutomorphism,
        i: &GeneratorSet,
        positive: bool,
        n: usize,
    ) -> Result<GeneratorSet> {
        let factors = self.pulled_factors(alpha, i)?;
        let p = factors.len();
        let mut g = factors[0].clone();
        for k in 1..=n {
            g = dynamics::product(&self.lattice, &g, &factors[k % p]);
            if !positive {
                g = dynamics::product(&self.lattice, &g, &factors[(p - k % p) % p]);
            }
        }
        Ok(self.lattice.wrap(g))
    }

    fn wrap_ids(&self, ids: &[u32]) -> GeneratorSet {
        self.lattice.wrap(ids.to_vec())
    }

    /// Full verdict for a single candidate.
    pub fn is_expansivity_generator(
        &self,
        alpha: &RingAutomorphism,
        i: &GeneratorSet,
        mode: Mode,
    ) -> Result<Verdict<GeneratorSet>> {
        if i.host() != self.lattice.host() {
            return Err(Error::HostMismatch);
        }
        let targets = self.antichain_generators()?;
        if mode == Mode::Zero {
            return Ok(self.minimality_verdict(i, targets));
        }
        let trace = self.trace(alpha, i, mode.window())?;
        Ok(self.verdict_from_trace(i, &trace, targets))
    }

    fn verdict_from_trace(&self, i: &GeneratorSet, trace: &Trace<u32>, targets: &[GeneratorSet]) -> Verdict<GeneratorSet> {
        let lat = &self.lattice;
        let mut n_table = Vec::with_capacity(targets.len());
        let mut status = Status::Proved;
        let mut refuter = None;
        for t in targets {
            match dynamics::first_refining(lat, trace, t.ids()) {
                Some(n) => {
                    let map = dynamics::refinement_map(lat, &trace.families[n], t.ids()).expect("refines");
                    n_table.push(NEntry {
                        target: t.clone(),
                        n,
                        map,
                    });
                }
                None => {
                    status = Status::Refuted;
                    refuter = Some(t.clone());
                    break;
                }
            }
        }
        if status == Status::Refuted {
            n_table.clear();
        }
        Verdict {
            status,
            witness: Some(i.clone()),
            refuter,
            n_table,
            cycle_length: Some(trace.period),
            stable_from: Some(trace.stable_from),
            uniform_n: None,
            scope: Scope::Exact,
            rejected: Vec::new(),
        }
    }

    fn minimality_verdict(&self, i: &GeneratorSet, targets: &[GeneratorSet]) -> Verdict<GeneratorSet> {
        let lat = &self.lattice;
        let norm = lat.normalize_antichain(i);
        let mut v = Verdict::proved(i.clone(), Scope::Exact);
        v.cycle_length = Some(1);
        v.stable_from = Some(0);
        for t in targets {
            match dynamics::refinement_map(lat, norm.ids(), t.ids()) {
                Some(map) => v.n_table.push(NEntry {
                    target: t.clone(),
                    n: 0,
                    map,
                }),
                None => {
                    v.status = Status::Refuted;
                    v.refuter = Some(t.clone());
                    v.n_table.clear();
                    break;
                }
            }
        }
        v
    }

    /// Candidates for witness search: antichain generators, dropping those
    /// containing `R` when there are at least two maximal ideals (every
    /// window product then still contains `R`, which lies in no member of
    /// the maximal-ideal generator).
    pub fn candidates(&self, prune: bool) -> Result<Vec<GeneratorSet>> {
        let all = self.antichain_generators()?;
        let drop_whole = prune && self.lattice.maximal_ids().len() >= 2;
        Ok(all
            .iter()
            .filter(|g| !(drop_whole && g.contains_id(self.lattice.whole_id())))
            .cloned()
            .collect())
    }

    /// Searches for a witness; first Proved candidate in order wins.
    pub fn search(&self, alpha: &RingAutomorphism, mode: Mode, prune: bool) -> Result<Verdict<GeneratorSet>> {
        self.check_alpha(alpha)?;
        let targets = self.antichain_generators()?;
        let mut rejected = Vec::new();
        for cand in self.candidates(prune)? {
            let stable = if mode == Mode::Zero {
                cand.ids().to_vec()
            } else {
                self.trace(alpha, &cand, mode.window())?.stable().to_vec()
            };
            let failing = targets
                .iter()
                .find(|t| !dynamics::refines(&self.lattice, &stable, t.ids()));
            match failing {
                Some(t) => rejected.push(Rejection {
                    candidate: cand.clone(),
                    refuter: t.clone(),
                }),
                None => {
                    let mut v = self.is_expansivity_generator(alpha, &cand, mode)?;
                    debug_assert!(v.is_proved());
                    v.rejected = rejected;
                    return Ok(v);
                }
            }
        }
        let refuter = rejected
            .first()
            .map(|r| r.refuter.clone())
            .unwrap_or_else(|| self.lattice.unit_generator());
        let mut v = Verdict::refuted(None, refuter, Scope::Exact);
        v.rejected = rejected;
        Ok(v)
    }

    pub fn is_expansive(&self, alpha: &RingAutomorphism) -> Result<Verdict<GeneratorSet>> {
        self.search(alpha, Mode::Expansive, true)
    }

    pub fn is_positively_expansive(&self, alpha: &RingAutomorphism) -> Result<Verdict<GeneratorSet>> {
        self.search(alpha, Mode::Positive, true)
    }

    pub fn decide(&self, alpha: &RingAutomorphism, mode: Mode) -> Result<Verdict<GeneratorSet>> {
        self.search(alpha, mode, true)
    }

    pub fn is_prec_minimal_generator(&self, a: &GeneratorSet) -> Result<bool> {
        let targets = self.antichain_generators()?;
        let norm = self.lattice.normalize_antichain(a);
        Ok(targets
            .iter()
            .all(|t| dynamics::refines(&self.lattice, norm.ids(), t.ids())))
    }

    /// `K_i` is the product of all maximal ideals except the `i`-th.
    pub fn build_complementary_generator(&self) -> GeneratorSet {
        let lat = &self.lattice;
        let max = lat.maximal_ids();
        if max.len() <= 1 {
            return lat.unit_generator();
        }
        let mut ids: Vec<u32> = (0..max.len())
            .map(|i| {
                max.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(lat.whole_id(), |acc, (_, &m)| lat.product_id(acc, m))
            })
            .collect();
        ids.sort_unstable();
        ids.dedup();
        lat.wrap(ids)
    }

    /// Builds the generator `{Re_i}` from primitive orthogonal idempotents
    /// and checks: members idempotent, principal and pairwise orthogonal,
    /// factor rings local, one factor per maximal ideal, no proper subset
    /// generating, and `≺`-minimality against every antichain generator.
    pub fn strong_minimal_generator(&self) -> Result<MinimalOutcome> {
        let ring = self.ring();
        let lat = &self.lattice;
        let fail = |property: &str, refuter: Option<GeneratorSet>| {
            Ok(MinimalOutcome::NotMinimal {
                property: property.to_string(),
                refuter,
            })
        };
        if ring.is_trivial() {
            return Ok(MinimalOutcome::Decomposition(LocalDecomposition {
                idempotents: Vec::new(),
                factor_ideals: Vec::new(),
                strong_minimal_generator: lat.unit_generator(),
                factors: Vec::new(),
            }));
        }
        let idempotents = ring.primitive_orthogonal_idempotents();
        let factor_ideals: Vec<Ideal> = idempotents.iter().map(|&e| Ideal::principal(ring, e)).collect();
        let ids = factor_ideals
            .iter()
            .map(|i| lat.id_of(i))
            .collect::<Result<Vec<u32>>>()?;
        for (a, &e) in idempotents.iter().enumerate() {
            if ring.mul(e, e) != e || lat.product_id(ids[a], ids[a]) != ids[a] {
                return fail("idempotent", None);
            }
            for (b, &f) in idempotents.iter().enumerate().skip(a + 1) {
                if ring.mul(e, f) != ring.zero() || lat.product_id(ids[a], ids[b]) != lat.zero_id() {
                    return fail("orthogonal", None);
                }
            }
        }
        let total = idempotents.iter().fold(ring.zero(), |acc, &e| ring.add(acc, e));
        if total != ring.one() {
            return fail("idempotents sum to one", None);
        }
        if idempotents.len() != lat.maximal_ids().len() {
            return fail("one factor per maximal ideal", None);
        }
        let generator = lat.generator_from_ids(ids.clone())?;
        if generator.len() != ids.len() {
            return fail("distinct factor ideals", None);
        }
        for skip in 0..ids.len() {
            let rest: Vec<u32> = ids.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &x)| x).collect();
            if !rest.is_empty() && lat.ids_generate(&rest) {
                return fail("no proper subset generates", None);
            }
        }
        let mut factors = Vec::with_capacity(idempotents.len());
        for &e in &idempotents {
            let complement = Ideal::principal(ring, ring.sub(ring.one(), e));
            let q = ring.quotient(&complement)?;
            let qlat = q.ring.enumerate_ideals(&self.bounds)?;
            if qlat.maximal_ids().len() != 1 {
                return fail("factor ring local", None);
            }
            factors.push(q.ring);
        }
        for t in self.antichain_generators()? {
            if !dynamics::refines(lat, generator.ids(), t.ids()) {
                return fail("refines every generator", Some(t.clone()));
            }
        }
        Ok(MinimalOutcome::Decomposition(LocalDecomposition {
            idempotents,
            factor_ideals,
            strong_minimal_generator: generator,
            factors,
        }))
    }

    /// Checks `α^{-n}(J^{2^n}) ≺ I_{N+n}` for `n = 0..=n_max`, where `N` is
    /// least with `α^{-1}(I_N) ≺ I` and `J = I_N`.
    pub fn verify_doubling_lemma(
        &self,
        alpha: &RingAutomorphism,
        i: &GeneratorSet,
        n_max: usize,
    ) -> Result<DoublingReport> {
        let lat = &self.lattice;
        let factors = self.pulled_factors(alpha, i)?;
        let p = factors.len();
        let trace = dynamics::run_sequence(lat, &factors, Window::Positive);
        // α^{-1}(X) ≺ I  ⟺  X ≺ α(I), and α(I) = α^{-(p-1)}(I).
        let alpha_i = &factors[(p - 1) % p];
        let base_n = (0..=trace.stable_from)
            .find(|&n| dynamics::refines(lat, &trace.families[n], alpha_i))
            .ok_or_else(|| Error::Domain("generator is not a positive expansivity witness".into()))?;
        let j = trace.families[base_n].clone();
        let perms = {
            let step = lat.pullback_perm(alpha)?;
            let mut v: Vec<Vec<u32>> = vec![(0..lat.len() as u32).collect()];
            for _ in 1..p {
                let last = v.last().unwrap();
                v.push(last.iter().map(|&x| step[x as usize]).collect());
            }
            v
        };
        let mut power = j.clone();
        let mut steps = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            if n > 0 {
                power = dynamics::product(lat, &power, &power);
            }
            let perm = &perms[n % p];
            let lhs = dynamics::normalize(lat, power.iter().map(|&x| perm[x as usize]));
            let rhs = trace.at(base_n + n).to_vec();
            let map = dynamics::refinement_map(lat, &lhs, &rhs).ok_or_else(|| {
                Error::Invariant(format!("doubling refinement fails at n = {n}"))
            })?;
            steps.push(DoublingStep { n, lhs, rhs, map });
        }
        Ok(DoublingReport { base_n, j, steps })
    }

    /// With `J^N ≺ K` for the caller's `N`, returns whether the ring has at
    /// most `|J|` maximal ideals.
    pub fn count_maximals_bound_check(&self, j: &GeneratorSet, k: &GeneratorSet, n: usize) -> Result<bool> {
        let lat = &self.lattice;
        if n == 0 {
            return Err(Error::Domain("exponent must be at least 1".into()));
        }
        let mut power = dynamics::normalize(lat, j.ids().iter().copied());
        for _ in 1..n {
            power = dynamics::product(lat, &power, j.ids());
        }
        if !lat.refines(&self.wrap_ids(&power), k)? {
            return Err(Error::Domain("J^N does not refine K".into()));
        }
        Ok(lat.maximal_ids().len() <= j.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine(r: &FiniteRing) -> Engine {
        Engine::new(r, &Bounds::default()).unwrap()
    }

    #[test]
    fn z6_identity() {
        let r = FiniteRing::cyclic(6).unwrap();
        let e = engine(&r);
        let id = RingAutomorphism::identity(&r);
        let g = e.lattice().generator_from_elements(&[2, 3]).unwrap();
        let v = e.is_expansivity_generator(&id, &g, Mode::Positive).unwrap();
        assert_eq!(v.status, Status::Proved);
        assert!(v.n_table.iter().all(|x| x.n == 0));
        let unit = e.lattice().unit_generator();
        let v = e.is_expansivity_generator(&id, &unit, Mode::Expansive).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.refuter, Some(g.clone()));
        assert_eq!(e.product_sequence(&id, &g, false, 1).unwrap(), g);
        let pos = e.is_positively_expansive(&id).unwrap();
        assert_eq!(pos.witness, Some(g));
    }

    #[test]
    fn trivial_ring_proved_with_unit() {
        let r = FiniteRing::cyclic(1).unwrap();
        let e = engine(&r);
        let id = RingAutomorphism::identity(&r);
        for mode in [Mode::Expansive, Mode::Positive, Mode::Zero] {
            let v = e.decide(&id, mode).unwrap();
            assert_eq!(v.status, Status::Proved);
            assert_eq!(v.witness, Some(e.lattice().unit_generator()));
        }
    }

    #[test]
    fn swap_positive() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let r = FiniteRing::product(&[&f2, &f2]).unwrap();
        let e = engine(&r);
        let s = RingAutomorphism::swap(&r, 0, 1).unwrap();
        let v = e.is_positively_expansive(&s).unwrap();
        assert_eq!(v.status, Status::Proved);
        let axes = e.lattice().generator_from_elements(&[1, 2]).unwrap();
        assert_eq!(v.witness, Some(axes.clone()));
        let d = e.verify_doubling_lemma(&s, &axes, 6).unwrap();
        assert_eq!(d.steps.len(), 7);
    }

    #[test]
    fn decompositions() {
        let r = FiniteRing::cyclic(6).unwrap();
        let MinimalOutcome::Decomposition(d) = engine(&r).strong_minimal_generator().unwrap() else {
            panic!()
        };
        assert_eq!(d.idempotents, vec![3, 4]);
        let orders: Vec<usize> = d.factors.iter().map(|f| f.order()).collect();
        assert_eq!(orders, vec![2, 3]);
        let r8 = FiniteRing::cyclic(8).unwrap();
        let e8 = engine(&r8);
        let MinimalOutcome::Decomposition(d) = e8.strong_minimal_generator().unwrap() else {
            panic!()
        };
        assert_eq!(d.strong_minimal_generator, e8.lattice().unit_generator());
    }

    #[test]
    fn complementary() {
        let r = FiniteRing::cyclic(30).unwrap();
        let e = engine(&r);
        let k = e.build_complementary_generator();
        assert_eq!(k, e.lattice().generator_from_elements(&[6, 10, 15]).unwrap());
        assert!(e.count_maximals_bound_check(&k, &k, 1).unwrap());
        let r8 = FiniteRing::cyclic(8).unwrap();
        let e8 = engine(&r8);
        assert_eq!(e8.build_complementary_generator(), e8.lattice().unit_generator());
    }

    #[test]
    fn minimality() {
        let r = FiniteRing::cyclic(6).unwrap();
        let e = engine(&r);
        let g = e.lattice().generator_from_elements(&[2, 3]).unwrap();
        assert!(e.is_prec_minimal_generator(&g).unwrap());
        assert!(!e.is_prec_minimal_generator(&e.lattice().unit_generator()).unwrap());
    }
}
