//! The verification suites. Each suite runs a family of checks over the
//! catalog, a symbolic grid or an enumeration of small spaces, and
//! collects certificates for every Proved or Refuted verdict it produces.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::Bounds;
use crate::catalog::{catalog, catalog_automorphisms, cyclic_entries, product_pairs, structured_entries};
use crate::certificate::{Certificate, SpaceDef};
use crate::engine::{Engine, MinimalOutcome, Mode};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::oracle::{raw_family, raw_least_n, RawFamily};
use crate::ring::{enumerate_automorphisms, FiniteRing, RingAutomorphism};
use crate::symbolic::{
    complementary_family, sym_identity_expansivity_criterion, sym_is_generator, sym_minimal_generator_exists,
    ExponentIdeal, OracleBounds, SymGenerator, SymOracle,
};
use crate::topology::chain::{
    chain_has_minimal_cover, chain_positively_expansive, minimal_cover_refuter, shift_map, window_covers, ChainCover,
};
use crate::topology::space::{
    cover_refines, cover_wedge, enumerate_posets, homeomorphisms, irredundant_covers, FiniteSpace, OpenCover,
    SpaceAnalysis, SpaceMap, TopMode,
};
use crate::topology::zariski::{is_extension_closed, spec_map, spec_space, sym_spec};
use crate::verdict::Status;

/// Suite identifiers and names, in run order.
pub const SUITES: [(u8, &str); 11] = [
    (1, "strong-minimal"),
    (2, "oracle-agreement"),
    (3, "basic-propositions"),
    (4, "doubling"),
    (5, "products-quotients"),
    (6, "symbolic-criterion"),
    (7, "semilocal"),
    (8, "zariski"),
    (9, "finite-spaces"),
    (10, "chain"),
    (11, "certificates"),
];

/// Resolves `all`, a number or a name to suite ids.
pub fn resolve_suite(name: &str) -> Result<Vec<u8>> {
    if name == "all" {
        return Ok(SUITES.iter().map(|s| s.0).collect());
    }
    SUITES
        .iter()
        .find(|(id, n)| *n == name || id.to_string() == name)
        .map(|s| vec![s.0])
        .ok_or_else(|| Error::Parse(format!("unknown suite {name:?}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checks: u64,
    pub failed: u64,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub certificates: Vec<Certificate>,
}

impl SuiteReport {
    pub fn summary_line(&self) -> String {
        format!(
            "criterion {:>2} {:<19} {}  checks={} failed={} certificates={} time={:.2}s",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.checks,
            self.failed,
            self.certificates.len(),
            self.elapsed.as_secs_f64()
        )
    }
}

const MAX_LISTED_FAILURES: usize = 20;

struct Run {
    report: SuiteReport,
    start: Instant,
}

impl Run {
    fn new(id: u8) -> Self {
        let name = SUITES.iter().find(|s| s.0 == id).expect("known suite").1;
        Self {
            report: SuiteReport {
                id,
                name,
                passed: false,
                checks: 0,
                failed: 0,
                failures: Vec::new(),
                notes: Vec::new(),
                elapsed: Duration::ZERO,
                certificates: Vec::new(),
            },
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.report.checks += 1;
        if !ok {
            self.report.failed += 1;
            if self.report.failures.len() < MAX_LISTED_FAILURES {
                self.report.failures.push(what());
            }
        }
    }

    fn cert(&mut self, c: Certificate) {
        if c.status() != Status::UnknownAtBound {
            self.report.certificates.push(c);
        }
    }

    fn note(&mut self, s: String) {
        self.report.notes.push(s);
    }

    fn finish(mut self, limit: Option<Duration>) -> SuiteReport {
        self.report.elapsed = self.start.elapsed();
        if let Some(limit) = limit {
            let t = self.report.elapsed;
            self.check(t < limit, || format!("runtime {:.1}s exceeds {:.0}s", t.as_secs_f64(), limit.as_secs_f64()));
        }
        self.report.passed = self.report.failed == 0;
        self.report
    }
}

/// Strong minimal generators from idempotents.
pub fn suite_strong_minimal(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(1);
    let mut entries = cyclic_entries(2, 60);
    entries.extend(structured_entries());
    for e in entries {
        let ring = e.build(bounds)?;
        let eng = Engine::new(&ring, bounds)?;
        let lat = eng.lattice();
        match eng.strong_minimal_generator()? {
            MinimalOutcome::Decomposition(d) => {
                let idem = &d.idempotents;
                run.check(idem.iter().all(|&x| ring.mul(x, x) == x), || format!("{}: idempotent", e.name));
                run.check(
                    d.factor_ideals.iter().zip(idem).all(|(i, &x)| *i == Ideal::principal(&ring, x)),
                    || format!("{}: principal", e.name),
                );
                let orth = idem
                    .iter()
                    .enumerate()
                    .all(|(a, &x)| idem[a + 1..].iter().all(|&y| ring.mul(x, y) == ring.zero()));
                run.check(orth, || format!("{}: orthogonal", e.name));
                let maximals = lat
                    .ideals()
                    .iter()
                    .filter(|i| !i.is_whole(&ring) && ring.is_maximal_ideal(i).unwrap_or(false))
                    .count();
                run.check(idem.len() == maximals, || format!("{}: factor count", e.name));
                run.check(
                    eng.is_prec_minimal_generator(&d.strong_minimal_generator)?,
                    || format!("{}: minimality", e.name),
                );
                run.cert(Certificate::decomposition(&eng, &d));
            }
            MinimalOutcome::NotMinimal { property, .. } => {
                run.check(false, || format!("{}: construction failed at {property}", e.name));
            }
        }
    }
    Ok(run.finish(Some(Duration::from_secs(30))))
}

/// The engine against the raw replay oracle on every ring of order at most 16.
pub fn suite_oracle_agreement(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(2);
    let b = *bounds;
    let mut candidates_checked = 0u64;
    for e in catalog() {
        let ring = e.build(&b)?;
        if ring.order() > 16 {
            continue;
        }
        let eng = Engine::new(&ring, &b)?;
        let lat = eng.lattice();
        let targets = eng.antichain_generators()?.to_vec();
        let raw_targets: Vec<RawFamily> = targets.iter().map(|t| raw_family(lat.members(t))).collect();
        for alpha in enumerate_automorphisms(&ring, &b)? {
            for mode in [Mode::Expansive, Mode::Positive] {
                let positive = mode == Mode::Positive;
                for cand in &targets {
                    let v = eng.is_expansivity_generator(&alpha, cand, mode)?;
                    let n_max = 2 * (v.stable_from.unwrap_or(0) + v.cycle_length.unwrap_or(1));
                    let raw = raw_least_n(&ring, &alpha, &raw_family(lat.members(cand)), &raw_targets, positive, n_max);
                    let raw_proved = raw.iter().all(Option::is_some);
                    candidates_checked += 1;
                    run.check(raw_proved == v.is_proved(), || {
                        format!("{} {mode:?} candidate {:?}: engine {:?}, replay proved={raw_proved}", e.name, cand.ids(), v.status)
                    });
                    if v.is_proved() && raw_proved {
                        let same_n = v.n_table.iter().zip(&raw).all(|(x, r)| Some(x.n) == *r);
                        run.check(same_n, || format!("{} {mode:?} candidate {:?}: least n differs", e.name, cand.ids()));
                    }
                }
                let v = eng.decide(&alpha, mode)?;
                let unpruned = eng.search(&alpha, mode, false)?;
                run.check(v.status == unpruned.status, || format!("{} {mode:?}: pruning changes the verdict", e.name));
                run.cert(Certificate::ring_verdict(&eng, &alpha, mode, &v));
            }
        }
    }
    run.note(format!("{candidates_checked} (ring, automorphism, mode, candidate) cases replayed"));
    Ok(run.finish(None))
}

/// Positive implies expansive, identity cases agree, powers share verdicts,
/// and every automorphism is expansive.
pub fn suite_basic_propositions(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(3);
    for e in catalog() {
        let ring = e.build(bounds)?;
        let eng = Engine::new(&ring, bounds)?;
        for alpha in catalog_automorphisms(&ring, bounds)? {
            let exp = eng.decide(&alpha, Mode::Expansive)?;
            let pos = eng.decide(&alpha, Mode::Positive)?;
            run.check(exp.is_proved(), || format!("{}: automorphism not expansive", e.name));
            run.check(!pos.is_proved() || exp.is_proved(), || format!("{}: positive but not expansive", e.name));
            if alpha.is_identity() {
                run.check(exp.status == pos.status, || format!("{}: identity verdicts differ", e.name));
            }
            for n in [-2i64, -1, 2, 3] {
                let power = alpha.pow(n);
                for (mode, base) in [(Mode::Expansive, &exp), (Mode::Positive, &pos)] {
                    let v = eng.decide(&power, mode)?;
                    run.check(v.status == base.status, || format!("{}: power {n} changes the {mode:?} verdict", e.name));
                }
            }
            run.cert(Certificate::ring_verdict(&eng, &alpha, Mode::Expansive, &exp));
            run.cert(Certificate::ring_verdict(&eng, &alpha, Mode::Positive, &pos));
        }
    }
    Ok(run.finish(None))
}

/// Doubling refinements for positive witnesses, and the maximal-ideal
/// count bound for generators whose powers refine the complementary
/// generator.
pub fn suite_doubling(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(4);
    let mut bound_instances = 0u64;
    for e in catalog() {
        let ring = e.build(bounds)?;
        let eng = Engine::new(&ring, bounds)?;
        let lat = eng.lattice();
        for alpha in catalog_automorphisms(&ring, bounds)? {
            let pos = eng.decide(&alpha, Mode::Positive)?;
            if let Some(w) = pos.witness.as_ref().filter(|_| pos.is_proved()) {
                let report = eng.verify_doubling_lemma(&alpha, w, 6);
                run.check(report.is_ok(), || format!("{}: doubling fails: {:?}", e.name, report.err()));
                run.cert(Certificate::ring_verdict(&eng, &alpha, Mode::Positive, &pos));
            }
        }
        let k = eng.build_complementary_generator();
        for j in eng.antichain_generators()? {
            let mut power = j.clone();
            for n in 1..=8 {
                if n > 1 {
                    power = lat.normalize_antichain(&lat.gen_product(&power, j)?);
                }
                if lat.refines(&power, &k)? {
                    bound_instances += 1;
                    let ok = eng.count_maximals_bound_check(j, &k, n)?;
                    run.check(ok, || format!("{}: more maximal ideals than |J| for J = {:?}", e.name, j.ids()));
                    break;
                }
            }
        }
    }
    run.note(format!("{bound_instances} generator instances with J^N refining K"));
    Ok(run.finish(None))
}

/// Products: the product automorphism is (positively) expansive exactly
/// when both factors are. Quotients: verdicts pass to invariant quotients.
pub fn suite_products_quotients(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(5);
    let pairs = product_pairs();
    run.note(format!("{} product pairs", pairs.len()));
    for (a, b) in &pairs {
        let ra = a.build(bounds)?;
        let rb = b.build(bounds)?;
        let p = FiniteRing::product_bounded(&[&ra, &rb], bounds)?;
        let (ea, eb, ep) = (Engine::new(&ra, bounds)?, Engine::new(&rb, bounds)?, Engine::new(&p, bounds)?);
        for x in catalog_automorphisms(&ra, bounds)? {
            for y in catalog_automorphisms(&rb, bounds)? {
                let xy = RingAutomorphism::product(&p, &[&x, &y])?;
                for mode in [Mode::Expansive, Mode::Positive] {
                    let vp = ep.decide(&xy, mode)?;
                    let both = ea.decide(&x, mode)?.is_proved() && eb.decide(&y, mode)?.is_proved();
                    run.check(vp.is_proved() == both, || format!("{} x {} {mode:?}: product verdict differs", a.name, b.name));
                    run.cert(Certificate::ring_verdict(&ep, &xy, mode, &vp));
                }
            }
        }
    }
    let mut quotients = 0u64;
    for e in catalog() {
        let ring = e.build(bounds)?;
        let eng = Engine::new(&ring, bounds)?;
        for alpha in catalog_automorphisms(&ring, bounds)? {
            let base: Vec<(Mode, bool)> = [Mode::Expansive, Mode::Positive]
                .into_iter()
                .map(|m| eng.decide(&alpha, m).map(|v| (m, v.is_proved())))
                .collect::<Result<_>>()?;
            for ideal in eng.lattice().ideals() {
                if ideal.is_whole(&ring) || !alpha.preserves(ideal) {
                    continue;
                }
                let q = ring.quotient(ideal)?;
                let induced = alpha.induced(&ring, ideal, &q)?;
                let qe = Engine::new(&q.ring, bounds)?;
                quotients += 1;
                for &(mode, proved) in &base {
                    if proved {
                        let v = qe.decide(&induced, mode)?;
                        run.check(v.is_proved(), || format!("{}: quotient loses {mode:?}", e.name));
                    }
                }
            }
        }
    }
    run.note(format!("{quotients} invariant-ideal quotients"));
    Ok(run.finish(None))
}

/// Generators of the symbolic ring with at most `size` members drawn from
/// exponent vectors with entries at most `max_exp`, optionally `Bottom`.
pub fn small_symbolic_generators(k: usize, size: usize, max_exp: u32) -> Vec<SymGenerator> {
    let mut pool = vec![ExponentIdeal::bottom(k)];
    let side = max_exp as usize + 1;
    for code in 0..side.pow(k as u32) {
        let mut c = code;
        let e: Vec<u32> = (0..k)
            .map(|_| {
                let d = (c % side) as u32;
                c /= side;
                d
            })
            .collect();
        pool.push(ExponentIdeal::exponents(&e).expect("valid k"));
    }
    let mut out = Vec::new();
    let mut chosen: Vec<ExponentIdeal> = Vec::new();
    fn rec(pool: &[ExponentIdeal], start: usize, size: usize, k: usize, chosen: &mut Vec<ExponentIdeal>, out: &mut Vec<SymGenerator>) {
        if !chosen.is_empty() && sym_is_generator(k, chosen).unwrap_or(false) {
            out.push(SymGenerator::new(k, chosen.clone()).expect("generator"));
        }
        if chosen.len() == size {
            return;
        }
        for i in start..pool.len() {
            chosen.push(pool[i]);
            rec(pool, i + 1, size, k, chosen, out);
            chosen.pop();
        }
    }
    rec(&pool, 0, size, k, &mut chosen, &mut out);
    out
}

/// The closed-form identity criterion against the bounded oracle.
pub fn suite_symbolic_criterion(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(6);
    let ob = OracleBounds {
        max_steps: bounds.oracle_steps,
        adversary_bound: bounds.oracle_exponent,
    };
    let mut cases = 0u64;
    for k in 1..=3usize {
        let oracle = SymOracle::new(k, ob)?;
        let id: Vec<usize> = (0..k).collect();
        for g in small_symbolic_generators(k, 3, 2) {
            let crit = sym_identity_expansivity_criterion(&g)?;
            let o = oracle.decide(&g, &id, true)?;
            cases += 1;
            let agrees = match o.verdict.status {
                Status::Proved => crit,
                Status::Refuted => !crit,
                Status::UnknownAtBound => false,
            };
            run.check(agrees, || format!("k={k} {g:?}: criterion {crit}, oracle {:?}", o.verdict.status));
            if let Some(c) = Certificate::symbolic_oracle(&id, true, ob, &o) {
                run.cert(c);
            }
        }
    }
    let anchors: [(usize, Vec<Vec<u32>>, bool); 3] = [
        (2, vec![vec![1, 0], vec![0, 1]], true),
        (3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], false),
        (3, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]], true),
    ];
    for (k, vecs, expected) in anchors {
        let refs: Vec<Option<&[u32]>> = vecs.iter().map(|v| Some(v.as_slice())).collect();
        let g = SymGenerator::from_vectors(k, &refs)?;
        let crit = sym_identity_expansivity_criterion(&g)?;
        let o = SymOracle::new(k, ob)?.decide(&g, &(0..k).collect::<Vec<_>>(), true)?;
        run.check(crit == expected, || format!("anchor {vecs:?}: criterion {crit}"));
        run.check(o.verdict.is_proved() == expected, || format!("anchor {vecs:?}: oracle {:?}", o.verdict.status));
    }
    run.note(format!("{cases} generators compared"));
    Ok(run.finish(Some(Duration::from_secs(60))))
}

/// Generator characterization on random ideal sets, the minimal-generator
/// refutation and identity expansivity for two primes.
pub fn suite_semilocal(bounds: &Bounds, seed: u64) -> Result<SuiteReport> {
    let mut run = Run::new(7);
    let k = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let size = rng.gen_range(1..=4);
        let members: Vec<ExponentIdeal> = (0..size)
            .map(|_| {
                if rng.gen_ratio(1, 8) {
                    ExponentIdeal::bottom(k)
                } else {
                    let e: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=3)).collect();
                    ExponentIdeal::exponents(&e).expect("valid k")
                }
            })
            .collect();
        let mut min = [u32::MAX; 2];
        for m in members.iter().filter(|m| !m.is_bottom()) {
            for (slot, &x) in min.iter_mut().zip(m.exps()) {
                *slot = (*slot).min(x);
            }
        }
        let direct = min == [0, 0];
        let got = sym_is_generator(k, &members)?;
        run.check(got == direct, || format!("{members:?}: generator test {got}, direct {direct}"));
    }
    let v = sym_minimal_generator_exists(k)?;
    run.check(v.status == Status::Refuted, || "a minimal generator was reported for two primes".into());
    let cert = Certificate::SymbolicMinimal { k, verdict: v };
    run.check(cert.check(bounds).is_ok(), || "minimal-generator certificate rejected".into());
    run.cert(cert);
    let ob = OracleBounds {
        max_steps: bounds.oracle_steps,
        adversary_bound: bounds.oracle_exponent,
    };
    let oracle = SymOracle::new(k, ob)?;
    let witness = complementary_family(k)?;
    let o = oracle.decide(&witness, &[0, 1], true)?;
    run.check(o.verdict.is_proved(), || format!("identity on two primes: {:?}", o.verdict.status));
    if let Some(c) = Certificate::symbolic_oracle(&[0, 1], true, ob, &o) {
        run.cert(c);
    }
    let swapped = oracle.decide(&witness, &[1, 0], true)?;
    run.check(swapped.verdict.is_proved(), || format!("prime swap on two primes: {:?}", swapped.verdict.status));
    Ok(run.finish(None))
}

/// Opens of ideals, cover/generator equivalence, spectrum maps of
/// expansive automorphisms, functoriality and extension-closed maximal
/// spectra.
pub fn suite_zariski(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(8);
    let mut converse_hits = 0u64;
    for e in catalog() {
        let ring = e.build(bounds)?;
        let eng = Engine::new(&ring, bounds)?;
        let lat = eng.lattice();
        let spec = spec_space(lat, bounds)?;
        let full = spec.space().full();
        let n = lat.len() as u32;
        for a in 0..n {
            for b in 0..n {
                let (ua, ub) = (spec.open_of_ideal(lat, a), spec.open_of_ideal(lat, b));
                run.check(spec.open_of_ideal(lat, lat.sum_id(a, b)) == ua | ub, || format!("{}: open of a sum", e.name));
                run.check(spec.open_of_ideal(lat, lat.product_id(a, b)) == ua & ub, || format!("{}: open of a product", e.name));
            }
        }
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let ids = [a, b, c];
                    let union = ids.iter().fold(0, |m, &i| m | spec.open_of_ideal(lat, i));
                    run.check(lat.ids_generate(&ids) == (union == full), || format!("{}: cover/generator mismatch", e.name));
                }
            }
        }
        let analysis = SpaceAnalysis::new(spec.space(), bounds)?;
        let autos = catalog_automorphisms(&ring, bounds)?;
        for alpha in &autos {
            let h = spec_map(lat, &spec, alpha)?;
            let exp = eng.decide(alpha, Mode::Expansive)?;
            let top = analysis.is_refinement_expansive(&h)?;
            if exp.is_proved() {
                run.check(top.is_proved(), || format!("{}: spectrum map not expansive", e.name));
            } else if top.is_proved() {
                converse_hits += 1;
            }
            run.cert(Certificate::space_verdict(spec.space(), &h, TopMode::Expansive, &top));
            let pos = eng.decide(alpha, Mode::Positive)?;
            let h_inv = spec_map(lat, &spec, &alpha.inverse())?;
            let top_pos = analysis.is_positively_expansive_top(&h_inv)?;
            if pos.is_proved() {
                run.check(top_pos.is_proved(), || format!("{}: inverse spectrum map not positively expansive", e.name));
            } else if top_pos.is_proved() {
                converse_hits += 1;
            }
            run.cert(Certificate::space_verdict(spec.space(), &h_inv, TopMode::Positive, &top_pos));
        }
        let id = spec_map(lat, &spec, &RingAutomorphism::identity(&ring))?;
        run.check(id == SpaceMap::identity(spec.space()), || format!("{}: spectrum of the identity", e.name));
        for a in autos.iter().take(8) {
            for b in autos.iter().take(8) {
                let lhs = spec_map(lat, &spec, &a.compose(b)?)?;
                let rhs = spec_map(lat, &spec, b)?.compose(&spec_map(lat, &spec, a)?)?;
                run.check(lhs == rhs, || format!("{}: functoriality", e.name));
            }
        }
        let ext = is_extension_closed(spec.space(), spec.maximal_mask(), bounds)?;
        run.check(ext.status == Status::Proved, || format!("{}: maximal spectrum not extension closed", e.name));
        run.cert(Certificate::Extension {
            space: SpaceDef::of(spec.space()),
            verdict: ext,
        });
    }
    for k in 1..=4 {
        let x = sym_spec(k)?;
        let y = x.full() & !1;
        let ext = is_extension_closed(&x, y, bounds)?;
        run.check(ext.status == Status::Proved, || format!("k={k}: maximal spectrum not extension closed"));
        run.cert(Certificate::Extension {
            space: SpaceDef::of(&x),
            verdict: ext,
        });
    }
    run.note(format!("{converse_hits} cases with a topological verdict stronger than the algebraic one"));
    Ok(run.finish(None))
}

/// `V = ∧^k U` for `|U| = k`, stopping early once the wedge powers repeat.
pub fn idempotent_refinement(space: &FiniteSpace, u: &OpenCover) -> Result<OpenCover> {
    let mut v = u.clone();
    for _ in 1..u.len() {
        let next = cover_wedge(space, &[&v, u])?;
        if next == v {
            break;
        }
        v = next;
    }
    Ok(v)
}

/// Covers used for the idempotent-refinement check: every cover when the
/// space has at most 16 opens, otherwise the irredundant ones.
fn idempotent_check_covers(space: &FiniteSpace, bounds: &Bounds) -> Result<Vec<OpenCover>> {
    let opens: Vec<u64> = space.opens(bounds)?.into_iter().filter(|&o| o != 0).collect();
    if opens.len() + 1 > 16 {
        return irredundant_covers(space, bounds);
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << opens.len()) {
        let members: Vec<u64> = (0..opens.len()).filter(|&i| mask >> i & 1 == 1).map(|i| opens[i]).collect();
        if members.iter().fold(0, |a, &m| a | m) == space.full() {
            out.push(OpenCover::new(space, members)?);
        }
    }
    Ok(out)
}

/// Window and single-power positive expansivity agree; the identity is
/// positively expansive exactly when a minimal cover exists; idempotent
/// refinements exist for every cover.
pub fn suite_finite_spaces(bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(9);
    let mut maps = 0u64;
    let mut spaces = 0u64;
    for n in 1..=6 {
        for space in enumerate_posets(n)? {
            spaces += 1;
            let analysis = SpaceAnalysis::new(&space, bounds)?;
            let mut identity_pos = None;
            for h in homeomorphisms(&space) {
                maps += 1;
                let pos = analysis.is_positively_expansive_top(&h)?;
                let single = analysis.is_positively_expansive_single_power(&h)?;
                run.check(pos.status == single.status, || {
                    format!("{:?} map {:?}: window {:?}, single power {:?}", SpaceDef::of(&space), h.points(), pos.status, single.status)
                });
                if space.is_t1() {
                    run.check(pos.is_proved(), || format!("discrete space of {n} points: map not positively expansive"));
                }
                if h == SpaceMap::identity(&space) {
                    identity_pos = Some(pos.status);
                }
                run.cert(Certificate::space_verdict(&space, &h, TopMode::Positive, &pos));
                run.cert(Certificate::space_verdict(&space, &h, TopMode::SinglePower, &single));
            }
            let minimal = analysis.has_minimal_cover()?;
            run.check(identity_pos == Some(minimal.status), || {
                format!("{:?}: identity {:?}, minimal cover {:?}", SpaceDef::of(&space), identity_pos, minimal.status)
            });
            run.cert(Certificate::space_verdict(&space, &SpaceMap::identity(&space), TopMode::Minimal, &minimal));
            if n <= 5 {
                for u in idempotent_check_covers(&space, bounds)? {
                    let v = idempotent_refinement(&space, &u)?;
                    let idem = cover_wedge(&space, &[&v, &v])? == v;
                    let refines = cover_refines(&space, &v, &u)?;
                    run.check(idem && refines, || format!("{:?}: cover {:?} has no idempotent refinement", SpaceDef::of(&space), u.points()));
                }
            }
        }
    }
    run.note(format!("{spaces} spaces, {maps} homeomorphisms"));
    Ok(run.finish(None))
}

/// The chain space: the shift toward the endpoints is positively expansive
/// on every window, its inverse is refuted exactly, and there is no
/// minimal cover.
pub fn suite_chain() -> Result<SuiteReport> {
    let mut run = Run::new(10);
    let u = ChainCover::standard();
    for m in 0..=8i64 {
        let bound = (2 * m + 2) as usize;
        let v = chain_positively_expansive(shift_map(1), &u, m, bound)?;
        run.check(v.is_proved(), || format!("m={m}: shift not proved"));
        run.check(v.uniform_n.is_some_and(|n| n <= bound), || format!("m={m}: N exceeds 2m+2"));
        run.cert(Certificate::ChainPositive {
            shift: shift_map(1),
            verdict: v,
        });
    }
    let v = chain_positively_expansive(shift_map(-1), &u, 8, 18)?;
    run.check(
        v.status == Status::Refuted && v.scope == crate::verdict::Scope::Exact,
        || format!("inverse shift: {:?} {:?}", v.status, v.scope),
    );
    run.cert(Certificate::ChainPositive {
        shift: shift_map(-1),
        verdict: v,
    });
    let v = chain_has_minimal_cover(8)?;
    run.check(v.status == Status::Refuted, || "a minimal chain cover was reported".into());
    run.check(
        v.rejected.iter().all(|r| r.refuter == minimal_cover_refuter(&r.candidate)),
        || "refuters do not follow the cut rule".into(),
    );
    run.check(v.rejected.len() == window_covers(8).len(), || "window candidates missing".into());
    run.cert(Certificate::ChainMinimal { verdict: v });
    // Adversaries reach one cut past the candidates, where the refuter lives.
    for cand in window_covers(3) {
        let v = chain_positively_expansive(shift_map(0), &cand, 4, 10)?;
        run.check(
            v.status == Status::Refuted && v.scope == crate::verdict::Scope::Exact,
            || format!("identity with {cand:?}: {:?}", v.status),
        );
        run.cert(Certificate::ChainPositive {
            shift: shift_map(0),
            verdict: v,
        });
    }
    Ok(run.finish(Some(Duration::from_secs(20))))
}

/// Serializes, reparses and checks every certificate.
pub fn suite_certificates(certs: &[Certificate], bounds: &Bounds) -> Result<SuiteReport> {
    let mut run = Run::new(11);
    for c in certs {
        let text = serde_json::to_string(c).map_err(|e| Error::Invariant(e.to_string()))?;
        let back: Certificate = serde_json::from_str(&text).map_err(|e| Error::Invariant(e.to_string()))?;
        run.check(back == *c, || "certificate does not survive a JSON round trip".into());
        let res = back.check(bounds);
        run.check(res.is_ok(), || format!("{}: {}", text.chars().take(160).collect::<String>(), res.unwrap_err()));
    }
    run.check(!certs.is_empty(), || "no certificates to audit".into());
    Ok(run.finish(None))
}

pub fn run_suite(id: u8, bounds: &Bounds, seed: u64) -> Result<SuiteReport> {
    match id {
        1 => suite_strong_minimal(bounds),
        2 => suite_oracle_agreement(bounds),
        3 => suite_basic_propositions(bounds),
        4 => suite_doubling(bounds),
        5 => suite_products_quotients(bounds),
        6 => suite_symbolic_criterion(bounds),
        7 => suite_semilocal(bounds, seed),
        8 => suite_zariski(bounds),
        9 => suite_finite_spaces(bounds),
        10 => suite_chain(),
        11 => {
            let mut certs = Vec::new();
            for id in 1..=10 {
                certs.extend(run_suite(id, bounds, seed)?.certificates);
            }
            suite_certificates(&certs, bounds)
        }
        _ => Err(Error::Parse(format!("unknown suite {id}"))),
    }
}

/// Runs the requested suites in order. When the certificate audit is
/// included it checks the certificates of the suites already run, running
/// the missing ones first.
pub fn run_suites(ids: &[u8], bounds: &Bounds, seed: u64) -> Result<Vec<SuiteReport>> {
    let mut reports: Vec<SuiteReport> = Vec::new();
    for &id in ids {
        if id == 11 {
            let mut certs = Vec::new();
            for other in 1..=10u8 {
                match reports.iter().find(|r| r.id == other) {
                    Some(r) => certs.extend(r.certificates.iter().cloned()),
                    None => certs.extend(run_suite(other, bounds, seed)?.certificates),
                }
            }
            reports.push(suite_certificates(&certs, bounds)?);
        } else {
            reports.push(run_suite(id, bounds, seed)?);
        }
    }
    Ok(reports)
}
