//! The Claesson–Kitaev map from 321-avoiders of length n onto the
//! sum-indecomposable 321-avoiders of length n + 1.

use super::{require_avoids, BijectionError};
use crate::perm::Permutation;

fn pattern_321() -> Permutation {
    Permutation::decreasing(3)
}

// 0-based positions right of `after` holding a left-to-right maximum that is
// not also a right-to-left minimum.
fn marked_right_of(p: &Permutation, after: usize) -> Vec<usize> {
    let minima = p.right_to_left_minima();
    p.left_to_right_maxima()
        .into_iter()
        .filter(|&pos| pos - 1 > after && minima.binary_search(&pos).is_err())
        .map(|pos| pos - 1)
        .collect()
}

/// Underlines the left-to-right maxima right of 1 that are not right-to-left
/// minima, inserts an underlined `n + 1` just left of 1, then rotates the
/// underlined values one notch left so `n + 1` lands in the last underlined slot.
pub fn ck_f(p: &Permutation) -> Result<Permutation, BijectionError> {
    if p.is_empty() {
        return Err(BijectionError::Empty);
    }
    require_avoids(p, &pattern_321())?;
    let n = p.len() as u32;
    let one = p.position_of(1).expect("nonempty") - 1;
    let marked = marked_right_of(p, one);

    let mut out = p.values().to_vec();
    out.insert(one, n + 1);
    // Slots in `out`: the inserted maximum, then the marked entries shifted by one.
    let slots: Vec<usize> = std::iter::once(one)
        .chain(marked.iter().map(|&i| i + 1))
        .collect();
    let vals: Vec<u32> = slots.iter().map(|&s| out[s]).collect();
    for (k, &s) in slots.iter().enumerate() {
        out[s] = vals[(k + 1) % vals.len()];
    }
    Ok(Permutation::from_vec_unchecked(out))
}

/// Recovers the underlined slots as the entry just left of 1 together with
/// the left-to-right maxima right of 1 that are not right-to-left minima,
/// rotates their values one notch right and deletes the maximum.
pub fn ck_f_inverse(r: &Permutation) -> Result<Permutation, BijectionError> {
    if r.len() < 2 {
        return Err(BijectionError::Precondition(format!(
            "inverse needs length at least 2, got {}",
            r.len()
        )));
    }
    require_avoids(r, &pattern_321())?;
    if !r.is_sum_indecomposable().expect("nonempty") {
        return Err(BijectionError::Decomposable(r.to_string()));
    }
    let max = r.len() as u32;
    let one = r.position_of(1).expect("nonempty") - 1;
    if one == 0 {
        // Unreachable for indecomposable inputs: a leading 1 splits off.
        return Err(BijectionError::Decomposable(r.to_string()));
    }
    let slots: Vec<usize> = std::iter::once(one - 1)
        .chain(marked_right_of(r, one))
        .collect();
    let vals: Vec<u32> = slots.iter().map(|&s| r.values()[s]).collect();
    if *vals.last().unwrap() != max {
        return Err(BijectionError::Precondition(format!(
            "{r}: the maximum is not in the last recovered slot"
        )));
    }
    let mut out = r.values().to_vec();
    let k = vals.len();
    for (j, &s) in slots.iter().enumerate() {
        out[s] = vals[(j + k - 1) % k];
    }
    out.remove(one - 1);
    Permutation::new(out).map_err(|e| BijectionError::Precondition(e.to_string()))
}
