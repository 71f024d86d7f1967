//! Structural maps on pattern-avoiding permutations: ψ to plane trees and φ
//! to Dyck paths (132-avoiders), the Claesson–Kitaev map on 321-avoiders,
//! and Robinson–Schensted row insertion.
//!
//! Every entry point checks its avoidance precondition up front and reports
//! an occurrence of the forbidden pattern when it fails.

pub mod ck;
pub mod dyck;
pub mod rs;
pub mod tree;

use thiserror::Error;

use crate::perm::Permutation;
use dyck::{DyckPath, Step};
use tree::PlaneTree;

pub use ck::{ck_f, ck_f_inverse};
pub use rs::{rs_insert, rs_shape, YoungTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("{perm} contains {pattern} at positions {positions:?} (values {values:?})")]
    ContainsPattern {
        perm: String,
        pattern: String,
        positions: Vec<usize>,
        values: Vec<u32>,
    },
    #[error("malformed Dyck path: {0}")]
    MalformedPath(String),
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("the map is undefined on the empty permutation")]
    Empty,
    #[error("{0} is sum-decomposable")]
    Decomposable(String),
    #[error("{0}")]
    Precondition(String),
}

/// Fails with a witness occurrence when `p` contains `q`.
pub fn require_avoids(p: &Permutation, q: &Permutation) -> Result<(), BijectionError> {
    match p.find_occurrence(q) {
        None => Ok(()),
        Some(positions) => Err(BijectionError::ContainsPattern {
            perm: p.to_string(),
            pattern: q.to_string(),
            values: positions.iter().map(|&i| p.at(i)).collect(),
            positions,
        }),
    }
}

fn pattern_132() -> Permutation {
    Permutation::from_vec_unchecked(vec![1, 3, 2])
}

// A skew-indecomposable 132-avoider ends with its maximum; returns the rest.
fn strip_max(block: &Permutation) -> Permutation {
    let v = block.values();
    debug_assert_eq!(v.last().copied(), Some(v.len() as u32));
    Permutation::from_vec_unchecked(v[..v.len() - 1].to_vec())
}

/// ψ: 132-avoiders of length n to plane trees on n + 1 vertices.
///
/// The root gets one child per skew block `B = L·max`, and that child's
/// subtree is ψ(L). For a skew-indecomposable input this is the single-child
/// case; for several blocks it is the contraction of their roots.
pub fn psi(p: &Permutation) -> Result<PlaneTree, BijectionError> {
    require_avoids(p, &pattern_132())?;
    Ok(psi_unchecked(p))
}

fn psi_unchecked(p: &Permutation) -> PlaneTree {
    PlaneTree::with_children(
        p.skew_blocks()
            .iter()
            .map(|b| psi_unchecked(&strip_max(b)))
            .collect(),
    )
}

/// φ: 132-avoiders of length n to Dyck paths of semilength n.
/// A skew-indecomposable `L·n` maps to `U φ(L) D`; otherwise blocks concatenate.
pub fn phi(p: &Permutation) -> Result<DyckPath, BijectionError> {
    require_avoids(p, &pattern_132())?;
    let mut steps = Vec::with_capacity(2 * p.len());
    phi_into(p, &mut steps);
    Ok(DyckPath::from_steps_unchecked(steps))
}

fn phi_into(p: &Permutation, out: &mut Vec<Step>) {
    for b in p.skew_blocks() {
        out.push(Step::U);
        phi_into(&strip_max(&b), out);
        out.push(Step::D);
    }
}

pub fn phi_inverse(d: &DyckPath) -> Permutation {
    let blocks: Vec<Permutation> = d
        .primes()
        .iter()
        .map(|prime| {
            let inner = &prime.steps()[1..prime.steps().len() - 1];
            let l = phi_inverse(&DyckPath::from_steps_unchecked(inner.to_vec()));
            let mut v = l.into_values();
            v.push(v.len() as u32 + 1);
            Permutation::from_vec_unchecked(v)
        })
        .collect();
    Permutation::from_skew_blocks(&blocks)
}

/// For a 132-avoiding involution with a ULIS: `U` followed by the first half
/// of φ(p), a bidirectional ballot word of length n + 1.
pub fn ulis_involution_to_ballot(
    p: &Permutation,
) -> Result<crate::enumerate::BallotPath, BijectionError> {
    if !p.is_involution() {
        return Err(BijectionError::Precondition(format!(
            "{p} is not an involution"
        )));
    }
    if !crate::lis::has_ulis(p) {
        return Err(BijectionError::Precondition(format!("{p} has no ULIS")));
    }
    let d = phi(p)?;
    let mut steps = vec![Step::U];
    steps.extend_from_slice(&d.steps()[..p.len()]);
    Ok(crate::enumerate::BallotPath::new(steps))
}
