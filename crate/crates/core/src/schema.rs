//! Input documents: ring definitions (finite recipes or the symbolic
//! semilocal PID) and automorphism specifications.

use serde::Serialize;
use serde_json::Value;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::ring::{Elem, FiniteRing, RingAutomorphism, RingDef};
use crate::symbolic::check_perm;

/// A parsed input file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum InputDef {
    Finite(RingDef),
    /// `{"kind": "semilocal", "k": 2}`.
    Semilocal { kind: String, k: usize },
}

impl InputDef {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_value(v)
    }

    pub fn from_value(v: Value) -> Result<Self> {
        if v.get("kind").and_then(Value::as_str) == Some("semilocal") {
            let k = v
                .get("k")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::Parse("semilocal ring needs an integer k".into()))?;
            return Ok(InputDef::Semilocal {
                kind: "semilocal".into(),
                k: k as usize,
            });
        }
        serde_json::from_value(v)
            .map(InputDef::Finite)
            .map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn semilocal(k: usize) -> Self {
        InputDef::Semilocal {
            kind: "semilocal".into(),
            k,
        }
    }
}

pub fn parse_ring_def(text: &str) -> Result<RingDef> {
    match InputDef::parse(text)? {
        InputDef::Finite(d) => Ok(d),
        InputDef::Semilocal { .. } => Err(Error::Parse("expected a finite ring".into())),
    }
}

pub fn build_ring(def: &RingDef, bounds: &Bounds) -> Result<FiniteRing> {
    FiniteRing::from_def(def, bounds)
}

/// `identity`, `frobenius`, `swap:<i>,<j>`, or a JSON list: element
/// encodings (the images of elements in index order) for finite rings, a
/// prime permutation for the symbolic ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomorphismSpec {
    Identity,
    Frobenius,
    Swap(usize, usize),
    Explicit(Vec<Value>),
}

impl std::str::FromStr for AutomorphismSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "identity" => return Ok(Self::Identity),
            "frobenius" => return Ok(Self::Frobenius),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("swap:") {
            let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
            if let [a, b] = parts[..] {
                let a = a.parse().map_err(|_| Error::Parse(format!("bad swap index {a:?}")))?;
                let b = b.parse().map_err(|_| Error::Parse(format!("bad swap index {b:?}")))?;
                return Ok(Self::Swap(a, b));
            }
            return Err(Error::Parse(format!("expected swap:<i>,<j>, got {s:?}")));
        }
        if s.starts_with('[') {
            let v: Vec<Value> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
            return Ok(Self::Explicit(v));
        }
        Err(Error::Parse(format!("unknown automorphism {s:?}")))
    }
}

impl AutomorphismSpec {
    pub fn resolve(&self, ring: &FiniteRing) -> Result<RingAutomorphism> {
        match self {
            Self::Identity => Ok(RingAutomorphism::identity(ring)),
            Self::Frobenius => RingAutomorphism::frobenius(ring),
            Self::Swap(i, j) => RingAutomorphism::swap(ring, *i, *j),
            Self::Explicit(values) => {
                if values.len() != ring.order() {
                    return Err(Error::validation(
                        format!("image list has {} entries for a ring of order {}", values.len(), ring.order()),
                        None,
                    ));
                }
                let image = values.iter().map(|v| ring.decode(v)).collect::<Result<Vec<Elem>>>()?;
                RingAutomorphism::new(ring, image)
            }
        }
    }

    /// The prime permutation for the symbolic ring with `k` primes.
    pub fn resolve_perm(&self, k: usize) -> Result<Vec<usize>> {
        let perm = match self {
            Self::Identity => (0..k).collect(),
            Self::Frobenius => return Err(Error::Domain("no Frobenius on a characteristic-zero ring".into())),
            Self::Swap(i, j) => {
                let mut p: Vec<usize> = (0..k).collect();
                if *i >= k || *j >= k {
                    return Err(Error::Domain(format!("swap index out of range for {k} primes")));
                }
                p.swap(*i, *j);
                p
            }
            Self::Explicit(values) => values
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| Error::Parse("permutation entries must be integers".into()))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        check_perm(&perm, k)?;
        Ok(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_both_kinds() {
        assert_eq!(
            InputDef::parse(r#"{"kind":"cyclic","n":6}"#).unwrap(),
            InputDef::Finite(RingDef::Cyclic { n: 6 })
        );
        assert_eq!(InputDef::parse(r#"{"kind":"semilocal","k":2}"#).unwrap(), InputDef::semilocal(2));
        assert!(matches!(InputDef::parse(r#"{"kind":"field"}"#), Err(Error::Parse(_))));
        assert!(matches!(InputDef::parse("{"), Err(Error::Parse(_))));
    }

    #[test]
    fn automorphism_specs() {
        let r = FiniteRing::cyclic(6).unwrap();
        let a: AutomorphismSpec = "identity".parse().unwrap();
        assert!(a.resolve(&r).unwrap().is_identity());
        let e: AutomorphismSpec = "[0,1,2,3,4,5]".parse().unwrap();
        assert!(e.resolve(&r).unwrap().is_identity());
        let bad: AutomorphismSpec = "[0,2,4,0,2,4]".parse().unwrap();
        assert!(matches!(bad.resolve(&r), Err(Error::Validation { .. })));
        let s: AutomorphismSpec = "swap:0,1".parse().unwrap();
        assert_eq!(s.resolve_perm(3).unwrap(), vec![1, 0, 2]);
        assert!("rotate".parse::<AutomorphismSpec>().is_err());
    }
}
