//! Decision outcomes shared by every decider.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    Proved,
    Refuted,
    UnknownAtBound,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Proved => 0,
            Status::Refuted => 1,
            Status::UnknownAtBound => 4,
        }
    }
}

/// What a verdict's quantifiers ranged over.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scope {
    /// Every generator or cover of a finite object.
    Exact,
    /// Adversaries with exponents up to `adversary_bound`, windows up to
    /// `max_steps`.
    Grid { adversary_bound: u32, max_steps: usize },
    /// Chain-space adversaries with finite cuts in `[-cut_bound, cut_bound]`.
    Window { cut_bound: i64, max_steps: usize },
}

/// Refinement of a target by the window product `G_n`. `map[i]` is the
/// index of the target member containing the `i`-th member of `G_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NEntry<G> {
    pub target: G,
    pub n: usize,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection<G> {
    pub candidate: G,
    pub refuter: G,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound(deserialize = "G: Deserialize<'de>"))]
pub struct Verdict<G> {
    pub status: Status,
    pub witness: Option<G>,
    pub refuter: Option<G>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub n_table: Vec<NEntry<G>>,
    pub cycle_length: Option<usize>,
    pub stable_from: Option<usize>,
    /// A single window index that works for every target, used where the
    /// per-target table would be too large to list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uniform_n: Option<usize>,
    pub scope: Scope,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rejected: Vec<Rejection<G>>,
}

impl<G> Verdict<G> {
    pub fn proved(witness: G, scope: Scope) -> Self {
        Self {
            status: Status::Proved,
            witness: Some(witness),
            refuter: None,
            n_table: Vec::new(),
            cycle_length: None,
            stable_from: None,
            uniform_n: None,
            scope,
            rejected: Vec::new(),
        }
    }

    pub fn refuted(witness: Option<G>, refuter: G, scope: Scope) -> Self {
        Self {
            status: Status::Refuted,
            witness,
            refuter: Some(refuter),
            n_table: Vec::new(),
            cycle_length: None,
            stable_from: None,
            uniform_n: None,
            scope,
            rejected: Vec::new(),
        }
    }

    pub fn is_proved(&self) -> bool {
        self.status == Status::Proved
    }

    /// Converts every family in the verdict.
    pub fn map<H>(self, mut f: impl FnMut(G) -> H) -> Verdict<H> {
        Verdict {
            status: self.status,
            witness: self.witness.map(&mut f),
            refuter: self.refuter.map(&mut f),
            n_table: self
                .n_table
                .into_iter()
                .map(|e| NEntry {
                    target: f(e.target),
                    n: e.n,
                    map: e.map,
                })
                .collect(),
            cycle_length: self.cycle_length,
            stable_from: self.stable_from,
            uniform_n: self.uniform_n,
            scope: self.scope,
            rejected: self
                .rejected
                .into_iter()
                .map(|r| Rejection {
                    candidate: f(r.candidate),
                    refuter: f(r.refuter),
                })
                .collect(),
        }
    }
}
