//! Maps from crank classes to Frobenius-symbol classes.

use super::{BijectionError, Step};
use crate::partition::{crank_of, durfee_rect_of, Partition};

/// For crank 0 the number of ones equals the Durfee side `d`; the ones are
/// deleted and a single row of length `d` is inserted below the square.
pub fn crank0_map(p: &Partition) -> Result<Step<Partition>, BijectionError> {
    let crank = crank_of(p.parts());
    if crank != 0 {
        return Err(BijectionError::Precondition(format!(
            "crank({p})={crank} ≠ 0"
        )));
    }
    let d = p.durfee();
    let ones = p.multiplicity(1);
    if ones != d {
        return Err(BijectionError::Precondition(format!(
            "{p} has {ones} parts 1 but Durfee side {d}"
        )));
    }
    let mut parts: Vec<u32> = p.parts().iter().copied().filter(|&x| x != 1).collect();
    if d > 0 {
        parts.push(d as u32);
    }
    Ok(Step::mapped(p.clone(), Partition::from_unsorted(parts)))
}

/// For crank at most `-j`, with `d` the side of the `j`-Durfee rectangle,
/// deletes `d + j` parts 1 and adds 1 to each of the `d` largest parts. The
/// weight drops by `j`.
pub fn crank_le_neg_j_map(p: &Partition, j: u32) -> Result<Step<Partition>, BijectionError> {
    let crank = crank_of(p.parts());
    if crank > -i64::from(j) {
        return Err(BijectionError::Precondition(format!(
            "crank({p})={crank} > -{j}"
        )));
    }
    let d = durfee_rect_of(p.parts(), j);
    let below = &p.parts()[d..];
    let ones = below.iter().filter(|&&x| x == 1).count();
    let need = d + j as usize;
    if ones < need {
        return Err(BijectionError::Precondition(format!(
            "{p} has {ones} parts 1 below its {j}-Durfee rectangle, needs {need}"
        )));
    }
    let mut parts: Vec<u32> = p.parts()[..p.len() - need].to_vec();
    for x in parts.iter_mut().take(d) {
        *x += 1;
    }
    Ok(Step::mapped(p.clone(), Partition::from_unsorted(parts)))
}
