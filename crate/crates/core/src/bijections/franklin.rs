//! Franklin's involution on partitions into distinct parts.

use super::{BijectionError, Step};
use crate::partition::Partition;

/// Length of the run `λ_1, λ_1 - 1, λ_1 - 2, ...` at the top.
fn staircase_run(parts: &[u32]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p + i as u32 == parts[0])
        .count()
}

/// Whether `p` is one of the two staircase shapes left fixed by Franklin's
/// map: `k` parts `2k-1, ..., k` or `k` parts `2k, ..., k+1`.
pub fn is_pentagonal_staircase(p: &Partition) -> bool {
    let k = p.len() as u32;
    if k == 0 {
        return true;
    }
    let parts = p.parts();
    staircase_run(parts) == parts.len() && (p.part(0) == 2 * k - 1 || p.part(0) == 2 * k)
}

/// Compares the smallest part `s` with the length `r` of the top staircase
/// run. If `s <= r` the smallest part is removed and spread as +1 over the
/// first `s` parts; if `s > r` the staircase is stripped off into a new
/// smallest part `r`. The overlapping staircase shapes are fixed.
pub fn franklin(p: &Partition) -> Result<Step<Partition>, BijectionError> {
    if !p.is_distinct() {
        return Err(BijectionError::Precondition(format!(
            "{p} does not have distinct parts"
        )));
    }
    let parts = p.parts();
    let Some(&s) = parts.last() else {
        return Ok(Step::fixed(p.clone()));
    };
    let len = parts.len();
    let r = staircase_run(parts);
    let s_us = s as usize;
    if s_us <= r && !(s_us == r && r == len) {
        let mut out = parts[..len - 1].to_vec();
        for x in out.iter_mut().take(s_us) {
            *x += 1;
        }
        Ok(Step::mapped(p.clone(), Partition::from_unsorted(out)))
    } else if s_us > r && !(s_us == r + 1 && r == len) {
        let mut out = parts.to_vec();
        for x in out.iter_mut().take(r) {
            *x -= 1;
        }
        out.push(r as u32);
        Ok(Step::mapped(p.clone(), Partition::from_unsorted(out)))
    } else {
        Ok(Step::fixed(p.clone()))
    }
}
