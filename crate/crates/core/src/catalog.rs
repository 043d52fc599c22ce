//! A fixed list of small rings used by the verification suites and the
//! examples.

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ring::{enumerate_automorphisms, FiniteRing, RingAutomorphism, RingDef};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub def: RingDef,
}

impl CatalogEntry {
    fn new(name: impl Into<String>, def: RingDef) -> Self {
        Self { name: name.into(), def }
    }

    pub fn build(&self, bounds: &Bounds) -> Result<FiniteRing> {
        FiniteRing::from_def(&self.def, bounds)
    }
}

fn z(n: u64) -> RingDef {
    RingDef::Cyclic { n }
}

fn poly(p: u64, coeffs: &[u64]) -> RingDef {
    RingDef::PolyQuotient {
        p,
        coeffs: coeffs.to_vec(),
    }
}

fn prod(factors: &[RingDef]) -> RingDef {
    RingDef::Product {
        factors: factors.to_vec(),
    }
}

/// `ℤ/n` for `lo <= n <= hi`.
pub fn cyclic_entries(lo: u64, hi: u64) -> Vec<CatalogEntry> {
    (lo..=hi).map(|n| CatalogEntry::new(format!("Z/{n}"), z(n))).collect()
}

/// Fields, polynomial quotients, products and quotients beyond `ℤ/n`.
pub fn structured_entries() -> Vec<CatalogEntry> {
    let f2 = z(2);
    let f3 = z(3);
    let f4 = poly(2, &[1, 1, 1]);
    let dual2 = poly(2, &[0, 0, 1]);
    vec![
        CatalogEntry::new("F4", f4.clone()),
        CatalogEntry::new("F8", poly(2, &[1, 1, 0, 1])),
        CatalogEntry::new("F9", poly(3, &[1, 0, 1])),
        CatalogEntry::new("F16", poly(2, &[1, 1, 0, 0, 1])),
        CatalogEntry::new("F2[x]/(x^2)", dual2.clone()),
        CatalogEntry::new("F2[x]/(x^3)", poly(2, &[0, 0, 0, 1])),
        CatalogEntry::new("F2[x]/(x^4)", poly(2, &[0, 0, 0, 0, 1])),
        CatalogEntry::new("F3[x]/(x^2)", poly(3, &[0, 0, 1])),
        CatalogEntry::new("F2[x]/(x^2+x)", poly(2, &[0, 1, 1])),
        CatalogEntry::new("F2[x]/(x^3+1)", poly(2, &[1, 0, 0, 1])),
        CatalogEntry::new("F3[x]/(x^2-1)", poly(3, &[2, 0, 1])),
        CatalogEntry::new("F2xF2", prod(&[f2.clone(), f2.clone()])),
        CatalogEntry::new("F2^3", prod(&[f2.clone(), f2.clone(), f2.clone()])),
        CatalogEntry::new("F2^4", prod(&[f2.clone(), f2.clone(), f2.clone(), f2.clone()])),
        CatalogEntry::new("F2xF4", prod(&[f2.clone(), f4.clone()])),
        CatalogEntry::new("Z/4xZ/2", prod(&[z(4), f2.clone()])),
        CatalogEntry::new("F2xF2[x]/(x^2)", prod(&[f2.clone(), dual2.clone()])),
        CatalogEntry::new("F3xF3", prod(&[f3.clone(), f3.clone()])),
        CatalogEntry::new("Z/4xZ/4", prod(&[z(4), z(4)])),
        CatalogEntry::new("F4xF4", prod(&[f4.clone(), f4])),
        CatalogEntry::new("Z/6xZ/6", prod(&[z(6), z(6)])),
        CatalogEntry::new(
            "(Z/12)/(4)",
            RingDef::Quotient {
                base: Box::new(z(12)),
                ideal_generators: vec![4.into()],
            },
        ),
        CatalogEntry::new(
            "(F2[x]/(x^3))/(x^2)",
            RingDef::Quotient {
                base: Box::new(poly(2, &[0, 0, 0, 1])),
                ideal_generators: vec![serde_json::json!([0, 0, 1])],
            },
        ),
    ]
}

/// `ℤ/n` for `2 <= n <= 60` followed by the structured entries.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut v = cyclic_entries(2, 60);
    v.extend(structured_entries());
    v
}

/// Factors used for product pairs.
pub fn pair_factors() -> Vec<CatalogEntry> {
    let mut v = cyclic_entries(2, 6);
    v.extend(cyclic_entries(8, 9));
    v.push(CatalogEntry::new("F4", poly(2, &[1, 1, 1])));
    v.push(CatalogEntry::new("F2[x]/(x^2)", poly(2, &[0, 0, 1])));
    v.push(CatalogEntry::new("F2xF2", prod(&[z(2), z(2)])));
    v
}

/// Unordered pairs (with repetition) of [`pair_factors`]: 55 pairs.
pub fn product_pairs() -> Vec<(CatalogEntry, CatalogEntry)> {
    let f = pair_factors();
    let mut out = Vec::new();
    for i in 0..f.len() {
        for j in i..f.len() {
            out.push((f[i].clone(), f[j].clone()));
        }
    }
    out
}

/// Every automorphism when the ring is small enough to enumerate them;
/// otherwise the identity, the Frobenius map and the factor swaps.
pub fn catalog_automorphisms(ring: &FiniteRing, bounds: &Bounds) -> Result<Vec<RingAutomorphism>> {
    match enumerate_automorphisms(ring, bounds) {
        Ok(v) => Ok(v),
        Err(Error::Capacity { .. }) => Ok(named_automorphisms(ring)),
        Err(e) => Err(e),
    }
}

/// Identity, Frobenius (prime characteristic) and swaps of equal product
/// factors, without duplicates.
pub fn named_automorphisms(ring: &FiniteRing) -> Vec<RingAutomorphism> {
    let mut out = vec![RingAutomorphism::identity(ring)];
    if let Ok(f) = RingAutomorphism::frobenius(ring) {
        out.push(f);
    }
    if let RingDef::Product { factors } = ring.recipe() {
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if let Ok(s) = RingAutomorphism::swap(ring, i, j) {
                    out.push(s);
                }
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|a| seen.insert(a.image().to_vec()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_within_bounds() {
        let b = Bounds::default();
        for e in catalog() {
            let r = e.build(&b).unwrap();
            let lat = r.enumerate_ideals(&b).unwrap();
            assert!(lat.len() <= 24, "{} has {} ideals", e.name, lat.len());
        }
        assert!(product_pairs().len() >= 50);
    }

    #[test]
    fn named_automorphisms_of_f4xf4() {
        let e = structured_entries().into_iter().find(|e| e.name == "F4xF4").unwrap();
        let r = e.build(&Bounds::default()).unwrap();
        // identity, Frobenius on both factors, swap
        assert_eq!(named_automorphisms(&r).len(), 3);
    }
}
