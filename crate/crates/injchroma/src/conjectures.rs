//! The conjectured upper-bound functions on the injective chromatic number
//! of planar graphs, and the verdict trichotomy comparing a computed value
//! against a bound.

use crate::graph::Graph;
use crate::metrics::{girth, Girth};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("{bound} bound needs maximum degree >= {min_delta}, got {delta}")]
    DegreeOutOfDomain {
        bound: &'static str,
        min_delta: usize,
        delta: usize,
    },
    #[error("{bound} bound needs girth >= {min_girth}")]
    GirthOutOfDomain { bound: &'static str, min_girth: usize },
}

/// `ceil(3*delta/2)`, the original bound for planar graphs of maximum degree
/// at least 3.
pub fn chen_bound(delta: usize) -> Result<u32, BoundError> {
    if delta < 3 {
        return Err(BoundError::DegreeOutOfDomain {
            bound: "chen",
            min_delta: 3,
            delta,
        });
    }
    Ok((3 * delta).div_ceil(2) as u32)
}

/// The refined piecewise bound: 5 for `delta <= 3`, `delta + 5` for
/// `4 <= delta <= 7`, `floor(3*delta/2) + 1` for `delta >= 8`.
pub fn luzar_bound(delta: usize) -> u32 {
    match delta {
        0..=3 => 5,
        4..=7 => delta as u32 + 5,
        _ => (3 * delta / 2) as u32 + 1,
    }
}

/// Girth-4 bound: 4 for `delta = 3`, `delta + 2` for `4 <= delta <= 5`,
/// `floor(3*delta/2)` for `delta >= 6`.
pub fn la_storgel_bound(delta: usize) -> Result<u32, BoundError> {
    if delta < 3 {
        return Err(BoundError::DegreeOutOfDomain {
            bound: "la-storgel",
            min_delta: 3,
            delta,
        });
    }
    Ok(match delta {
        3 => 4,
        4..=5 => delta as u32 + 2,
        _ => (3 * delta / 2) as u32,
    })
}

/// Girth-5 question: is every such graph injectively `(delta+1)`-colourable.
pub fn girth5_bound(delta: usize) -> u32 {
    delta as u32 + 1
}

/// Named bound with its applicability predicate over (max degree, girth).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Chen,
    Luzar,
    LaStorgel,
    Girth5,
}

impl BoundKind {
    pub const ALL: [BoundKind; 4] = [
        BoundKind::Chen,
        BoundKind::Luzar,
        BoundKind::LaStorgel,
        BoundKind::Girth5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundKind::Chen => "chen",
            BoundKind::Luzar => "luzar",
            BoundKind::LaStorgel => "la-storgel",
            BoundKind::Girth5 => "girth5",
        }
    }

    pub fn parse(name: &str) -> Option<BoundKind> {
        BoundKind::ALL.into_iter().find(|b| b.name() == name)
    }

    /// Minimum girth the bound is scoped to.
    pub fn min_girth(self) -> usize {
        match self {
            BoundKind::Chen | BoundKind::Luzar => 3,
            BoundKind::LaStorgel => 4,
            BoundKind::Girth5 => 5,
        }
    }

    pub fn min_delta(self) -> usize {
        match self {
            BoundKind::Chen | BoundKind::LaStorgel => 3,
            BoundKind::Luzar | BoundKind::Girth5 => 1,
        }
    }

    pub fn applicable(self, delta: usize, g: Girth) -> bool {
        delta >= self.min_delta() && g.at_least(self.min_girth())
    }

    pub fn value(self, delta: usize) -> Result<u32, BoundError> {
        match self {
            BoundKind::Chen => chen_bound(delta),
            BoundKind::Luzar => Ok(luzar_bound(delta)),
            BoundKind::LaStorgel => la_storgel_bound(delta),
            BoundKind::Girth5 => Ok(girth5_bound(delta)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictKind {
    Satisfies,
    Attains,
    Violates,
}

/// Trichotomy of `chi_i` against a bound value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub chi_i: u32,
    pub bound: u32,
}

/// Outcome for one stream element: graphs outside a bound's stated domain
/// are vacuous rather than errors, so batch runs never stop on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StreamVerdict {
    Judged(Verdict),
    OutsideDomain,
}

/// Strict verdict: errors when the bound does not apply to (delta, girth).
pub fn verdict(g: &Graph, bound: BoundKind, chi_i: u32) -> Result<Verdict, BoundError> {
    let delta = g.max_degree();
    let gi = girth(g);
    if !gi.at_least(bound.min_girth()) {
        return Err(BoundError::GirthOutOfDomain {
            bound: bound.name(),
            min_girth: bound.min_girth(),
        });
    }
    let value = bound.value(delta)?;
    Ok(compare(chi_i, value))
}

/// Stream-mode verdict from precomputed invariants.
pub fn verdict_from_invariants(
    delta: usize,
    gi: Girth,
    chi_i: u32,
    bound: BoundKind,
) -> StreamVerdict {
    if !bound.applicable(delta, gi) {
        return StreamVerdict::OutsideDomain;
    }
    let value = bound.value(delta).expect("applicability implies domain");
    StreamVerdict::Judged(compare(chi_i, value))
}

fn compare(chi_i: u32, bound: u32) -> Verdict {
    let kind = match chi_i.cmp(&bound) {
        std::cmp::Ordering::Less => VerdictKind::Satisfies,
        std::cmp::Ordering::Equal => VerdictKind::Attains,
        std::cmp::Ordering::Greater => VerdictKind::Violates,
    };
    Verdict { kind, chi_i, bound }
}
