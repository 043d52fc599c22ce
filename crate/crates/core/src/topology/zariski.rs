//! Prime spectra as finite spaces, the spectrum functor on automorphisms,
//! and extension-closed subspaces.

use serde::{Deserialize, Serialize};

use super::space::{irredundant_covers_from, mask_points, FiniteSpace, PointList, SpaceMap};
use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ideal::IdealLattice;
use crate::ring::RingAutomorphism;
use crate::symbolic::{check_perm, ExponentIdeal};
use crate::verdict::Status;

/// `Spec R`: prime ideals ordered by inclusion, so smaller primes are more
/// generic and sit lower.
#[derive(Debug, Clone)]
pub struct SpecSpace {
    space: FiniteSpace,
    primes: Vec<u32>,
}

impl SpecSpace {
    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    /// Lattice id of the prime at each point.
    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn point_of(&self, prime_id: u32) -> Option<usize> {
        self.primes.iter().position(|&p| p == prime_id)
    }

    /// `U_I`: the primes not containing `I`.
    pub fn open_of_ideal(&self, lat: &IdealLattice, id: u32) -> u64 {
        self.primes
            .iter()
            .enumerate()
            .filter(|&(_, &p)| !lat.le(id, p))
            .fold(0, |m, (x, _)| m | 1 << x)
    }

    /// Points that are maximal ideals.
    pub fn maximal_mask(&self) -> u64 {
        self.space.maximal_points().iter().fold(0, |m, &p| m | 1 << p)
    }
}

fn ideal_label(lat: &IdealLattice, id: u32) -> String {
    let ring = lat.ring();
    let gens: Vec<String> = lat
        .ideal(id)
        .small_generating_set(ring)
        .into_iter()
        .map(|g| ring.encode(g).to_string())
        .collect();
    if gens.is_empty() {
        "(0)".into()
    } else {
        format!("({})", gens.join(","))
    }
}

pub fn spec_space(lat: &IdealLattice, bounds: &Bounds) -> Result<SpecSpace> {
    let primes = lat.prime_ids();
    if primes.len() > bounds.space_points {
        return Err(Error::capacity("prime ideals", primes.len(), bounds.space_points));
    }
    let labels = primes.iter().map(|&p| ideal_label(lat, p)).collect();
    let space = FiniteSpace::from_order(primes.len(), |a, b| lat.le(primes[a], primes[b]), labels)?;
    Ok(SpecSpace { space, primes })
}

/// `spec(α)`: `p ↦ α^{-1}(p)`.
pub fn spec_map(lat: &IdealLattice, spec: &SpecSpace, alpha: &RingAutomorphism) -> Result<SpaceMap> {
    let perm = lat.pullback_perm(alpha)?;
    let f = spec
        .primes
        .iter()
        .map(|&p| {
            spec.point_of(perm[p as usize])
                .ok_or_else(|| Error::Invariant("preimage of a prime is not prime".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    SpaceMap::homeomorphism(&spec.space, f)
}

/// Maximal spectrum with the induced (discrete) topology.
pub fn specm_space(spec: &SpecSpace) -> FiniteSpace {
    let pts = spec.space.maximal_points();
    let labels = pts.iter().map(|&p| spec.space.labels()[p].clone()).collect();
    FiniteSpace::from_order(pts.len(), |a, b| a == b, labels).expect("antichain")
}

/// Spectrum of the symbolic semilocal PID with `k` primes: point 0 is the
/// zero ideal, below the maximal points `1..=k`.
pub fn sym_spec(k: usize) -> Result<FiniteSpace> {
    if k == 0 || k > crate::symbolic::MAX_PRIMES {
        return Err(Error::capacity("symbolic primes", k, crate::symbolic::MAX_PRIMES));
    }
    let mut labels = vec!["(0)".to_string()];
    labels.extend((1..=k).map(|c| format!("p{c}")));
    FiniteSpace::from_order(k + 1, |a, b| a == b || a == 0, labels)
}

/// `U_I` in [`sym_spec`].
pub fn sym_open(i: &ExponentIdeal) -> u64 {
    if i.is_bottom() {
        return 0;
    }
    let mut m = 1u64;
    for (c, &e) in i.exps().iter().enumerate() {
        if e == 0 {
            m |= 1 << (c + 1);
        }
    }
    m
}

/// Spectrum map of the automorphism permuting primes by `perm`.
pub fn sym_spec_map(space: &FiniteSpace, perm: &[usize]) -> Result<SpaceMap> {
    check_perm(perm, space.len() - 1)?;
    let mut f = vec![0; space.len()];
    for (c, &pc) in perm.iter().enumerate() {
        // α^{-1}(p_{pc}) = p_c
        f[pc + 1] = c + 1;
    }
    SpaceMap::homeomorphism(space, f)
}

/// One extended cover: `extension[i]` is an open of the space whose trace
/// on the subspace is `cover[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extension {
    pub cover: Vec<PointList>,
    pub extension: Vec<PointList>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionVerdict {
    pub status: Status,
    pub subspace: PointList,
    pub covers_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<PointList>>,
    pub extensions: Vec<Extension>,
}

/// Largest open whose trace on `y` is `w`: the complement of the up-closure
/// of `y \ w`.
pub fn maximal_open_with_trace(space: &FiniteSpace, y: u64, w: u64) -> u64 {
    space.full() & !space.up_closure(y & !w)
}

/// Decides whether every open cover of the subspace `y` extends to an open
/// cover of the space. Only irredundant covers of `y` need checking: the
/// remaining members of a larger cover extend by any open with their trace.
pub fn is_extension_closed(space: &FiniteSpace, y: u64, bounds: &Bounds) -> Result<ExtensionVerdict> {
    if y & !space.full() != 0 {
        return Err(Error::Domain("subspace has points outside the space".into()));
    }
    let opens = space.opens(bounds)?;
    let covers = irredundant_covers_from(y, &opens);
    if covers.len() > bounds.covers {
        return Err(Error::capacity("subspace covers", covers.len(), bounds.covers));
    }
    let mut extensions = Vec::with_capacity(covers.len());
    for w in &covers {
        let ext: Vec<u64> = w.iter().map(|&t| maximal_open_with_trace(space, y, t)).collect();
        let cover: Vec<PointList> = w.iter().map(|&t| mask_points(t)).collect();
        if ext.iter().fold(0, |a, &m| a | m) != space.full() {
            return Ok(ExtensionVerdict {
                status: Status::Refuted,
                subspace: mask_points(y),
                covers_checked: extensions.len() + 1,
                counterexample: Some(cover),
                extensions,
            });
        }
        extensions.push(Extension {
            cover,
            extension: ext.iter().map(|&m| mask_points(m)).collect(),
        });
    }
    Ok(ExtensionVerdict {
        status: Status::Proved,
        subspace: mask_points(y),
        covers_checked: covers.len(),
        counterexample: None,
        extensions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn spec_of(n: u64) -> (IdealLattice, SpecSpace) {
        let lat = FiniteRing::cyclic(n).unwrap().enumerate_ideals(&Bounds::default()).unwrap();
        let s = spec_space(&lat, &Bounds::default()).unwrap();
        (lat, s)
    }

    #[test]
    fn small_spectra() {
        let (_, s6) = spec_of(6);
        assert_eq!(s6.space().len(), 2);
        assert!(s6.space().is_t1());
        assert_eq!(s6.space().labels(), &["(2)".to_string(), "(3)".to_string()]);
        let (_, s4) = spec_of(4);
        assert_eq!(s4.space().len(), 1);
    }

    #[test]
    fn swap_spec_map() {
        let f2 = FiniteRing::cyclic(2).unwrap();
        let r = FiniteRing::product(&[&f2, &f2]).unwrap();
        let lat = r.enumerate_ideals(&Bounds::default()).unwrap();
        let s = spec_space(&lat, &Bounds::default()).unwrap();
        let swap = RingAutomorphism::swap(&r, 0, 1).unwrap();
        assert_eq!(spec_map(&lat, &s, &swap).unwrap().points(), &[1, 0]);
    }

    #[test]
    fn symbolic_extension() {
        let x = sym_spec(2).unwrap();
        let y = 0b110;
        let v = is_extension_closed(&x, y, &Bounds::default()).unwrap();
        assert_eq!(v.status, Status::Proved);
        let split = v
            .extensions
            .iter()
            .find(|e| e.cover == vec![vec![1], vec![2]])
            .unwrap();
        assert_eq!(split.extension, vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn sierpinski_closed_point() {
        let s = FiniteSpace::sierpinski();
        let v = is_extension_closed(&s, 0b10, &Bounds::default()).unwrap();
        assert_eq!(v.status, Status::Proved);
        assert_eq!(v.extensions[0].extension, vec![vec![0, 1]]);
    }

    #[test]
    fn two_open_points_under_a_closed_one() {
        let x = FiniteSpace::from_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(is_extension_closed(&x, 0b111, &Bounds::default()).unwrap().status, Status::Proved);
        // Y = {0, 1}: the cover {{0},{1}} needs opens avoiding 1 and 0, and
        // no such opens can contain 2.
        let v = is_extension_closed(&x, 0b011, &Bounds::default()).unwrap();
        assert_eq!(v.status, Status::Refuted);
        assert_eq!(v.counterexample, Some(vec![vec![0], vec![1]]));
    }
}
