//! Structural summary of a finite ring: ideals, maximal ideals, the local
//! decomposition and an automorphism census.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::bounds::Bounds;
use crate::certificate::{ideal_family, IdealFamily};
use crate::engine::{Engine, MinimalOutcome, Mode};
use crate::error::{Error, Result};
use crate::ring::{enumerate_automorphisms, FiniteRing, RingDef};
use crate::verdict::Status;

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    /// Primitive orthogonal idempotents, encoded.
    pub idempotents: Vec<Value>,
    pub factor_orders: Vec<usize>,
    pub strong_minimal_generator: IdealFamily,
}

#[derive(Debug, Clone, Serialize)]
pub struct AutomorphismEntry {
    /// Images of the elements in index order, encoded.
    pub image: Vec<Value>,
    pub period: usize,
    pub expansive: Status,
    pub positive: Status,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub ring: RingDef,
    pub order: usize,
    pub characteristic: u64,
    pub trivial: bool,
    pub ideal_count: usize,
    pub maximal_ideals: IdealFamily,
    pub local: bool,
    /// Absent when the ideal lattice is too large to search generators.
    pub decomposition: Option<DecompositionReport>,
    /// Whether some generator refines every generator.
    pub zero_expansive: Option<Status>,
    /// Absent when the ring has too many automorphism candidates.
    pub automorphisms: Option<Vec<AutomorphismEntry>>,
    pub notes: Vec<String>,
}

fn skip_capacity<T>(r: Result<T>, notes: &mut Vec<String>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ Error::Capacity { .. }) => {
            notes.push(e.to_string());
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

pub fn analyze(ring: &FiniteRing, bounds: &Bounds) -> Result<AnalysisReport> {
    let eng = Engine::new(ring, bounds)?;
    let lat = eng.lattice();
    let mut notes = Vec::new();
    if ring.is_trivial() {
        notes.push("zero ring: no proper ideals, no maximal ideals".into());
    }
    let decomposition = match skip_capacity(eng.strong_minimal_generator(), &mut notes)? {
        Some(MinimalOutcome::Decomposition(d)) => Some(DecompositionReport {
            idempotents: d.idempotents.iter().map(|&e| ring.encode(e)).collect(),
            factor_orders: d.factors.iter().map(FiniteRing::order).collect(),
            strong_minimal_generator: ideal_family(lat, d.strong_minimal_generator.ids()),
        }),
        Some(MinimalOutcome::NotMinimal { property, .. }) => {
            return Err(Error::Invariant(format!("idempotent decomposition fails: {property}")));
        }
        None => None,
    };
    let identity = crate::ring::RingAutomorphism::identity(ring);
    let zero_expansive = skip_capacity(eng.decide(&identity, Mode::Zero), &mut notes)?.map(|v| v.status);
    let automorphisms = match skip_capacity(enumerate_automorphisms(ring, bounds), &mut notes)? {
        Some(autos) if decomposition.is_some() => {
            let mut out = Vec::with_capacity(autos.len());
            for a in &autos {
                out.push(AutomorphismEntry {
                    image: a.image().iter().map(|&x| ring.encode(x)).collect(),
                    period: a.period(),
                    expansive: eng.decide(a, Mode::Expansive)?.status,
                    positive: eng.decide(a, Mode::Positive)?.status,
                });
            }
            Some(out)
        }
        _ => None,
    };
    Ok(AnalysisReport {
        ring: ring.recipe().clone(),
        order: ring.order(),
        characteristic: ring.characteristic(),
        trivial: ring.is_trivial(),
        ideal_count: lat.len(),
        maximal_ideals: ideal_family(lat, lat.maximal_ids()),
        local: lat.maximal_ids().len() == 1,
        decomposition,
        zero_expansive,
        automorphisms,
        notes,
    })
}

fn family_text(ring: &FiniteRing, fam: &IdealFamily) -> String {
    let parts: Vec<String> = fam
        .iter()
        .map(|m| {
            let gens = crate::ideal::Ideal::generated(ring, m.iter().copied()).small_generating_set(ring);
            let g: Vec<String> = gens.iter().map(|&x| ring.encode(x).to_string()).collect();
            if g.is_empty() {
                "(0)".into()
            } else {
                format!("({})", g.join(","))
            }
        })
        .collect();
    format!("{{{}}}", parts.join(", "))
}

impl AnalysisReport {
    pub fn to_text(&self, ring: &FiniteRing) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "order {} characteristic {}", self.order, self.characteristic);
        let _ = writeln!(s, "ideals {}", self.ideal_count);
        let _ = writeln!(s, "maximal ideals {} {}", self.maximal_ideals.len(), family_text(ring, &self.maximal_ideals));
        let _ = writeln!(s, "local {}", self.local);
        if let Some(d) = &self.decomposition {
            let idem: Vec<String> = d.idempotents.iter().map(Value::to_string).collect();
            let _ = writeln!(s, "idempotents [{}] factor orders {:?}", idem.join(", "), d.factor_orders);
            let _ = writeln!(s, "strong minimal generator {}", family_text(ring, &d.strong_minimal_generator));
        }
        if let Some(z) = self.zero_expansive {
            let _ = writeln!(s, "minimal generator {z:?}");
        }
        if let Some(autos) = &self.automorphisms {
            let _ = writeln!(s, "automorphisms {}", autos.len());
            for a in autos {
                let _ = writeln!(
                    s,
                    "  period {:<3} expansive {:?} positive {:?}",
                    a.period, a.expansive, a.positive
                );
            }
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z6_and_z8() {
        let b = Bounds::default();
        let r = analyze(&FiniteRing::cyclic(6).unwrap(), &b).unwrap();
        assert_eq!(r.ideal_count, 4);
        assert_eq!(r.maximal_ideals.len(), 2);
        let d = r.decomposition.unwrap();
        assert_eq!(d.idempotents, vec![Value::from(3), Value::from(4)]);
        let r8 = analyze(&FiniteRing::cyclic(8).unwrap(), &b).unwrap();
        assert!(r8.local);
        assert_eq!(r8.decomposition.unwrap().strong_minimal_generator, vec![(0..8).collect::<Vec<_>>()]);
    }

    #[test]
    fn trivial_ring_is_flagged() {
        let r = analyze(&FiniteRing::cyclic(1).unwrap(), &Bounds::default()).unwrap();
        assert!(r.trivial);
        assert!(r.maximal_ideals.is_empty());
        assert!(!r.local);
        assert!(!r.notes.is_empty());
    }
}
